/// `(coefficient, a, b, w, z)`: the monomial `coefficient * a^a b^b w^w z^z`.
pub(crate) type Term = (i64, i32, i32, i32, i32);

// Entries of the 4x4 matrix N, row-major.
pub(crate) const N_TERMS: [&[Term]; 16] = [
    &[(4, 0, 5, 0, 0), (4, 0, 5, 1, 1), (7, 2, 3, 0, 0), (3, 2, 3, 0, 1), (3, 2, 3, 1, 0), (5, 2, 3, 1, 1), (4, 4, 1, 0, 0), (2, 4, 1, 0, 1), (2, 4, 1, 1, 0), (2, 4, 1, 1, 1)],
    &[(-4, 0, 7, 0, 1), (-4, 0, 7, 1, 2), (-5, 2, 5, 0, 1), (-5, 2, 5, 0, 2), (-5, 2, 5, 1, 1), (-5, 2, 5, 1, 2), (-2, 2, 5, 1, 3), (-2, 4, 3, 0, 1), (-5, 4, 3, 0, 2), (-1, 4, 3, 0, 3), (-6, 4, 3, 1, 1), (-5, 4, 3, 1, 2), (-1, 4, 3, 1, 3), (-2, 6, 1, 0, 2), (-2, 6, 1, 1, 1), (-2, 6, 1, 1, 2)],
    &[(-4, 0, 7, 1, 0), (-4, 0, 7, 2, 1), (-5, 2, 5, 1, 0), (-5, 2, 5, 1, 1), (-5, 2, 5, 2, 0), (-5, 2, 5, 2, 1), (-2, 2, 5, 3, 1), (-2, 4, 3, 1, 0), (-6, 4, 3, 1, 1), (-5, 4, 3, 2, 0), (-5, 4, 3, 2, 1), (-1, 4, 3, 3, 0), (-1, 4, 3, 3, 1), (-2, 6, 1, 1, 1), (-2, 6, 1, 2, 0), (-2, 6, 1, 2, 1)],
    &[(4, 0, 9, 1, 1), (4, 0, 9, 2, 2), (3, 2, 7, 1, 1), (7, 2, 7, 1, 2), (7, 2, 7, 2, 1), (5, 2, 7, 2, 2), (2, 2, 7, 2, 3), (2, 2, 7, 3, 2), (3, 4, 5, 1, 1), (9, 4, 5, 1, 2), (2, 4, 5, 1, 3), (9, 4, 5, 2, 1), (10, 4, 5, 2, 2), (1, 4, 5, 2, 3), (2, 4, 5, 3, 1), (1, 4, 5, 3, 2), (1, 4, 5, 3, 3), (7, 6, 3, 1, 1), (6, 6, 3, 1, 2), (1, 6, 3, 1, 3), (6, 6, 3, 2, 1), (7, 6, 3, 2, 2), (1, 6, 3, 2, 3), (1, 6, 3, 3, 1), (1, 6, 3, 3, 2), (4, 8, 1, 1, 1), (2, 8, 1, 1, 2), (2, 8, 1, 2, 1), (2, 8, 1, 2, 2)],
    &[(2, 1, 4, 0, 0), (2, 1, 4, 1, 0), (2, 1, 4, 1, 1), (5, 3, 2, 0, 0), (1, 3, 2, 0, 1), (7, 3, 2, 1, 0), (1, 3, 2, 1, 1), (4, 5, 0, 0, 0), (4, 5, 0, 1, 0)],
    &[(-4, 1, 6, 0, 0), (-2, 1, 6, 0, 1), (-2, 1, 6, 1, 1), (-2, 1, 6, 1, 2), (-7, 3, 4, 0, 0), (-7, 3, 4, 0, 1), (-2, 3, 4, 0, 2), (-3, 3, 4, 1, 0), (-3, 3, 4, 1, 1), (-6, 3, 4, 1, 2), (-4, 5, 2, 0, 0), (-7, 5, 2, 0, 1), (-3, 5, 2, 0, 2), (-2, 5, 2, 1, 0), (-7, 5, 2, 1, 1), (-3, 5, 2, 1, 2), (-4, 7, 0, 0, 1), (-4, 7, 0, 1, 1)],
    &[(-2, 1, 6, 1, 0), (-2, 1, 6, 2, 0), (-2, 1, 6, 2, 1), (-6, 3, 4, 1, 0), (-2, 3, 4, 1, 1), (-9, 3, 4, 2, 0), (-1, 3, 4, 2, 1), (-1, 3, 4, 3, 0), (-1, 3, 4, 3, 1), (-9, 5, 2, 1, 0), (-1, 5, 2, 1, 1), (-9, 5, 2, 2, 0), (-1, 5, 2, 2, 1), (-2, 5, 2, 3, 0), (-4, 7, 0, 1, 0), (-4, 7, 0, 2, 0)],
    &[(4, 1, 8, 1, 0), (2, 1, 8, 1, 1), (2, 1, 8, 2, 1), (2, 1, 8, 2, 2), (5, 3, 6, 1, 0), (6, 3, 6, 1, 1), (3, 3, 6, 1, 2), (5, 3, 6, 2, 0), (3, 3, 6, 2, 1), (6, 3, 6, 2, 2), (1, 3, 6, 3, 1), (1, 3, 6, 3, 2), (2, 5, 4, 1, 0), (5, 5, 4, 1, 1), (7, 5, 4, 1, 2), (5, 5, 4, 2, 0), (10, 5, 4, 2, 1), (5, 5, 4, 2, 2), (1, 5, 4, 3, 0), (1, 5, 4, 3, 1), (2, 5, 4, 3, 2), (7, 7, 2, 1, 1), (3, 7, 2, 1, 2), (2, 7, 2, 2, 0), (9, 7, 2, 2, 1), (3, 7, 2, 2, 2), (2, 7, 2, 3, 1), (4, 9, 0, 1, 1), (4, 9, 0, 2, 1)],
    &[(2, 1, 4, 0, 0), (2, 1, 4, 0, 1), (2, 1, 4, 1, 1), (5, 3, 2, 0, 0), (7, 3, 2, 0, 1), (1, 3, 2, 1, 0), (1, 3, 2, 1, 1), (4, 5, 0, 0, 0), (4, 5, 0, 0, 1)],
    &[(-2, 1, 6, 0, 1), (-2, 1, 6, 0, 2), (-2, 1, 6, 1, 2), (-6, 3, 4, 0, 1), (-9, 3, 4, 0, 2), (-1, 3, 4, 0, 3), (-2, 3, 4, 1, 1), (-1, 3, 4, 1, 2), (-1, 3, 4, 1, 3), (-9, 5, 2, 0, 1), (-9, 5, 2, 0, 2), (-2, 5, 2, 0, 3), (-1, 5, 2, 1, 1), (-1, 5, 2, 1, 2), (-4, 7, 0, 0, 1), (-4, 7, 0, 0, 2)],
    &[(-4, 1, 6, 0, 0), (-2, 1, 6, 1, 0), (-2, 1, 6, 1, 1), (-2, 1, 6, 2, 1), (-7, 3, 4, 0, 0), (-3, 3, 4, 0, 1), (-7, 3, 4, 1, 0), (-3, 3, 4, 1, 1), (-2, 3, 4, 2, 0), (-6, 3, 4, 2, 1), (-4, 5, 2, 0, 0), (-2, 5, 2, 0, 1), (-7, 5, 2, 1, 0), (-7, 5, 2, 1, 1), (-3, 5, 2, 2, 0), (-3, 5, 2, 2, 1), (-4, 7, 0, 1, 0), (-4, 7, 0, 1, 1)],
    &[(4, 1, 8, 0, 1), (2, 1, 8, 1, 1), (2, 1, 8, 1, 2), (2, 1, 8, 2, 2), (5, 3, 6, 0, 1), (5, 3, 6, 0, 2), (6, 3, 6, 1, 1), (3, 3, 6, 1, 2), (1, 3, 6, 1, 3), (3, 3, 6, 2, 1), (6, 3, 6, 2, 2), (1, 3, 6, 2, 3), (2, 5, 4, 0, 1), (5, 5, 4, 0, 2), (1, 5, 4, 0, 3), (5, 5, 4, 1, 1), (10, 5, 4, 1, 2), (1, 5, 4, 1, 3), (7, 5, 4, 2, 1), (5, 5, 4, 2, 2), (2, 5, 4, 2, 3), (2, 7, 2, 0, 2), (7, 7, 2, 1, 1), (9, 7, 2, 1, 2), (2, 7, 2, 1, 3), (3, 7, 2, 2, 1), (3, 7, 2, 2, 2), (4, 9, 0, 1, 1), (4, 9, 0, 1, 2)],
    &[(3, 2, 3, 0, 0), (1, 2, 3, 0, 1), (1, 2, 3, 1, 0), (1, 2, 3, 1, 1), (10, 4, 1, 0, 0), (2, 4, 1, 0, 1), (2, 4, 1, 1, 0), (8, 6, -1, 0, 0)],
    &[(-2, 2, 5, 0, 0), (-1, 2, 5, 0, 1), (-1, 2, 5, 0, 2), (-1, 2, 5, 1, 1), (-1, 2, 5, 1, 2), (-5, 4, 3, 0, 0), (-5, 4, 3, 0, 1), (-6, 4, 3, 0, 2), (-1, 4, 3, 1, 0), (-1, 4, 3, 1, 1), (-2, 4, 3, 1, 2), (-4, 6, 1, 0, 0), (-10, 6, 1, 0, 1), (-6, 6, 1, 0, 2), (-2, 6, 1, 1, 1), (-8, 8, -1, 0, 1)],
    &[(-2, 2, 5, 0, 0), (-1, 2, 5, 1, 0), (-1, 2, 5, 1, 1), (-1, 2, 5, 2, 0), (-1, 2, 5, 2, 1), (-5, 4, 3, 0, 0), (-1, 4, 3, 0, 1), (-5, 4, 3, 1, 0), (-1, 4, 3, 1, 1), (-6, 4, 3, 2, 0), (-2, 4, 3, 2, 1), (-4, 6, 1, 0, 0), (-10, 6, 1, 1, 0), (-2, 6, 1, 1, 1), (-6, 6, 1, 2, 0), (-8, 8, -1, 1, 0)],
    &[(4, 2, 7, 0, 0), (2, 2, 7, 0, 1), (2, 2, 7, 1, 0), (3, 2, 7, 1, 1), (1, 2, 7, 1, 2), (1, 2, 7, 2, 1), (1, 2, 7, 2, 2), (7, 4, 5, 0, 0), (7, 4, 5, 0, 1), (2, 4, 5, 0, 2), (7, 4, 5, 1, 0), (6, 4, 5, 1, 1), (3, 4, 5, 1, 2), (2, 4, 5, 2, 0), (3, 4, 5, 2, 1), (5, 4, 5, 2, 2), (4, 6, 3, 0, 0), (7, 6, 3, 0, 1), (3, 6, 3, 0, 2), (7, 6, 3, 1, 0), (9, 6, 3, 1, 1), (6, 6, 3, 1, 2), (3, 6, 3, 2, 0), (6, 6, 3, 2, 1), (5, 6, 3, 2, 2), (4, 8, 1, 0, 1), (4, 8, 1, 1, 0), (10, 8, 1, 1, 1), (6, 8, 1, 1, 2), (6, 8, 1, 2, 1), (8, 10, -1, 1, 1)],
];
