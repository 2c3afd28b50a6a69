use aztec::linalg::Matrix;
use aztec::{AztecError, Field, GaussRational, C64};
use proptest::prelude::*;

fn small_ints(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-4i64..=4, -4i64..=4), n * n)
}

fn gauss(n: usize, cells: &[(i64, i64)]) -> Matrix<GaussRational> {
    Matrix::from_fn(n, n, |r, c| {
        let (re, im) = cells[r * n + c];
        GaussRational::from_int(re) + GaussRational::from_int(im) * GaussRational::imag()
    })
}

#[test]
fn singular_matrix_is_reported() {
    let m = Matrix::from_fn(3, 3, |r, c| C64::from_int((r + 1) as i64 * (c + 1) as i64));
    assert!(matches!(m.inverse("rank one"), Err(AztecError::Singular { .. })));
}

#[test]
fn permutation_determinant_sign() {
    let m = Matrix::from_fn(3, 3, |r, c| GaussRational::from_int(((r + 1) % 3 == c) as i64));
    assert_eq!(m.det().unwrap(), GaussRational::from_int(1));
    let swap = Matrix::from_fn(2, 2, |r, c| GaussRational::from_int((r != c) as i64));
    assert_eq!(swap.det().unwrap(), GaussRational::from_int(-1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_inverse_is_two_sided(n in 1usize..5, cells in small_ints(4)) {
        let m = gauss(n, &cells);
        let det = m.det().unwrap();
        match m.inverse("random") {
            Ok(inv) => {
                prop_assert!(det != GaussRational::from_int(0));
                prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(n));
                prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(n));
                prop_assert_eq!(det * inv.det().unwrap(), GaussRational::from_int(1));
            }
            Err(_) => prop_assert_eq!(det, GaussRational::from_int(0)),
        }
    }

    #[test]
    fn float_inverse_tracks_exact(n in 1usize..5, cells in small_ints(4)) {
        let exact = gauss(n, &cells);
        let Ok(inv) = exact.inverse("random") else { return Ok(()) };
        let float = Matrix::from_fn(n, n, |r, c| exact.row(r)[c].to_c64());
        let finv = float.inverse("random").unwrap();
        let rounded = Matrix::from_fn(n, n, |r, c| inv.row(r)[c].to_c64());
        prop_assert!(finv.max_abs_diff(&rounded) <= 1e-9 * rounded.max_abs().max(1.0));
    }
}
