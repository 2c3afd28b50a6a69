//! Two-periodic boundary entries `L(a, b, i, j) = K^{-1}((2i+1, 0), (0, 2j+1))`.
//!
//! The boundary generating function is a vector `G = (G_00, G_01, G_10, G_11)`
//! indexed by the parities of `i` and `j`, satisfying
//! `G(a,b) = A(a,b) G~(c,d) + B(a) z/(1-z)` and
//! `G~(c,d) = z C(c,d) G(c',d') + D(c,d) z/(1-z)` with `c = 1/(2a)`,
//! `d = 1/(2b)`. Two routes extract the order-`n` coefficient: iterating the
//! recurrence on polynomials in `x, y`, or summing the closed-form eigen
//! expansion `sum_r N (alpha ⊗ alpha)`.

use super::nmatrix::N_TERMS;
use crate::error::{AztecError, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Param, C64};
use crate::series::Poly;

/// A 4x4 matrix whose entries are `coefficient * x^p * y^q`.
type MonomialMatrix<F> = [[(F, i32, i32); 4]; 4];

fn matrix_a_terms<F: Field>(a: &F, b: &F) -> MonomialMatrix<F> {
    let four = F::from_int(4);
    let factors = [
        F::one() / (four.clone() * a.clone() * a.clone()),
        F::one() / (four.clone() * a.clone() * b.clone()),
        F::one() / (four.clone() * a.clone() * b.clone()),
        F::one() / (four * b.clone() * b.clone()),
    ];
    const PATTERN: [[(i32, i32); 4]; 4] = [
        [(0, 0), (0, 1), (1, 0), (1, 1)],
        [(0, 0), (0, 0), (1, 0), (1, 0)],
        [(0, 0), (0, 1), (0, 0), (0, 1)],
        [(0, 0), (0, 0), (0, 0), (0, 0)],
    ];
    std::array::from_fn(|r| std::array::from_fn(|c| (factors[r].clone(), PATTERN[r][c].0, PATTERN[r][c].1)))
}

fn matrix_c_terms<F: Field>(c: &F, d: &F) -> MonomialMatrix<F> {
    let s = c.clone() * c.clone() + d.clone() * d.clone();
    let dd = d.clone() * d.clone() / s.clone();
    let cd = c.clone() * d.clone() / s.clone();
    let cc = c.clone() * c.clone() / s;
    [
        [(dd.clone(), 0, 0), (cd.clone(), 0, 1), (cd.clone(), 1, 0), (cc.clone(), 1, 1)],
        [(dd.clone(), 0, 0), (cd.clone(), 0, 0), (cd.clone(), 1, 0), (cc.clone(), 1, 0)],
        [(dd.clone(), 0, 0), (cd.clone(), 0, 1), (cd.clone(), 0, 0), (cc.clone(), 0, 1)],
        [(dd, 0, 0), (cd.clone(), 0, 0), (cd, 0, 0), (cc, 0, 0)],
    ]
}

fn evaluate<F: Field>(m: &MonomialMatrix<F>, x: &F, y: &F) -> Matrix<F> {
    Matrix::from_fn(4, 4, |r, c| {
        let (v, p, q) = &m[r][c];
        v.clone() * x.powi(*p) * y.powi(*q)
    })
}

fn apply<F: Field>(m: &MonomialMatrix<F>, v: &[Poly<F>; 4]) -> [Poly<F>; 4] {
    std::array::from_fn(|r| {
        (0..4).fold(Poly::zero(), |acc, c| {
            let (k, p, q) = &m[r][c];
            acc + v[c].shift([*p, *q, 0, 0]).scale(k)
        })
    })
}

pub fn matrix_a<F: Field>(a: &F, b: &F, x: &F, y: &F) -> Matrix<F> {
    evaluate(&matrix_a_terms(a, b), x, y)
}

pub fn matrix_c<F: Field>(c: &F, d: &F, x: &F, y: &F) -> Matrix<F> {
    evaluate(&matrix_c_terms(c, d), x, y)
}

/// `B(a) = (1/(2a), 0, 0, 0)^T`.
pub fn vector_b<F: Field>(a: &F) -> Matrix<F> {
    Matrix::from_fn(4, 1, |r, _| if r == 0 { F::one() / (F::from_int(2) * a.clone()) } else { F::zero() })
}

/// `D(c,d) = (c/(c^2+d^2), 0, 0, 0)^T`.
pub fn vector_d<F: Field>(c: &F, d: &F) -> Matrix<F> {
    Matrix::from_fn(4, 1, |r, _| {
        if r == 0 {
            c.clone() / (c.clone() * c.clone() + d.clone() * d.clone())
        } else {
            F::zero()
        }
    })
}

/// `beta_l(a,b,w) = ((a^2+b^2) sqrt(w) - (-1)^l sqrt((a^4+b^4) w + a^2 b^2 (1+w^2))) / sqrt(2ab(a^2+b^2))`.
pub fn beta(l: usize, a: f64, b: f64, w: f64) -> f64 {
    let c = a * a + b * b;
    let sign = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
    let root = ((a.powi(4) + b.powi(4)) * w + a * a * b * b * (1.0 + w * w)).sqrt();
    (c * w.sqrt() - sign * root) / (2.0 * a * b * c).sqrt()
}

/// The recurrence matrices at a numeric point together with the
/// eigen-decomposition of `M = A(a,b) C(c,d) A(c,d) C(a,b)`.
#[derive(Clone, Debug)]
pub struct FortressEigenSystem {
    pub a: Matrix<C64>,
    pub b: Matrix<C64>,
    pub c: Matrix<C64>,
    pub d: Matrix<C64>,
    pub m: Matrix<C64>,
    pub b1: Matrix<C64>,
    pub b2: Matrix<C64>,
    /// `lambda_{2i+j+1} = beta_i(x)^2 beta_j(y)^2`, zero-based.
    pub eigenvalues: [f64; 4],
    pub eigenvectors: [[f64; 4]; 4],
}

pub fn fortress_recurrence_matrices(a: Param, b: Param, x: Param, y: Param) -> Result<FortressEigenSystem> {
    let (af, bf, xf, yf) = (a.get(), b.get(), x.get(), y.get());
    let [a_, b_, x_, y_] = [af, bf, xf, yf].map(|v| C64::new(v, 0.0));
    let (c_, d_) = (C64::new(0.5 / af, 0.0), C64::new(0.5 / bf, 0.0));
    let am = matrix_a(&a_, &b_, &x_, &y_);
    let cm = matrix_c(&c_, &d_, &x_, &y_);
    let m = am.mul(&cm)?.mul(&matrix_a(&c_, &d_, &x_, &y_))?.mul(&matrix_c(&a_, &b_, &x_, &y_))?;
    let bv = vector_b(&a_);
    let dv = vector_d(&c_, &d_);
    let b1_at = |p: &C64, q: &C64| -> Result<Matrix<C64>> {
        let (r, s) = (C64::new(0.5, 0.0) / p, C64::new(0.5, 0.0) / q);
        let base = matrix_a(p, q, &x_, &y_).mul(&vector_d(&r, &s))?;
        Ok(Matrix::from_fn(4, 1, |i, _| base[(i, 0)] + vector_b(p)[(i, 0)]))
    };
    let b1 = b1_at(&a_, &b_)?;
    let b2 = am.mul(&cm)?.mul(&b1_at(&c_, &d_)?)?;

    let root = |u: f64| u.sqrt() * ((af.powi(4) + bf.powi(4)) * u + af * af * bf * bf * (1.0 + u * u)).sqrt();
    let diff = bf * bf - af * af;
    let mut eigenvalues = [0.0; 4];
    let mut eigenvectors = [[0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            let si = if i == 0 { 1.0 } else { -1.0 };
            let sj = if j == 0 { 1.0 } else { -1.0 };
            let ex = diff * xf - si * root(xf);
            let ey = diff * yf - sj * root(yf);
            eigenvalues[2 * i + j] = beta(i, af, bf, xf).powi(2) * beta(j, af, bf, yf).powi(2);
            eigenvectors[2 * i + j] = [
                ex * ey / (af * af * bf * bf * (1.0 + xf) * (1.0 + yf)),
                ex / (af * bf * (1.0 + xf)),
                ey / (af * bf * (1.0 + yf)),
                1.0,
            ];
        }
    }
    Ok(FortressEigenSystem { a: am, b: bv, c: cm, d: dv, m, b1, b2, eigenvalues, eigenvectors })
}

impl FortressEigenSystem {
    /// `max_k |M v_k - lambda_k v_k| / ((|M| + |lambda_k|) |v_k|)` in the max norm.
    pub fn residual(&self) -> f64 {
        let mnorm = (0..4).map(|r| (0..4).map(|c| self.m[(r, c)].norm()).sum::<f64>()).fold(0.0, f64::max);
        let mut worst = 0.0f64;
        for (lam, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            let vnorm = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            for r in 0..4 {
                let mv: C64 = (0..4).map(|c| self.m[(r, c)] * v[c]).sum();
                let res = (mv - lam * v[r]).norm() / ((mnorm + lam.abs()) * vnorm);
                worst = worst.max(res);
            }
        }
        worst
    }
}

/// `alpha_0^r` and `alpha_1^r` (without the common `1/(4 sqrt(ab)(a^2+b^2))`)
/// as polynomials in variable `var`:
/// `alpha_0 = sum_{t even} 2 C(2r,t) c^{2r-t} w^{r-t/2} Q^{t/2} / (2abc)^r`,
/// `alpha_1 = -sum_{t odd} 2 C(2r,t) c^{2r-t} w^{(2r-t-1)/2} Q^{(t-1)/2} / (2abc)^r`,
/// where `c = a^2+b^2` and `Q = (a^4+b^4) w + a^2 b^2 (1+w^2)`.
pub fn alpha_polys<F: Field>(a: &F, b: &F, r: usize, var: usize) -> (Poly<F>, Poly<F>) {
    let c = a.clone() * a.clone() + b.clone() * b.clone();
    let a2b2 = a.clone() * a.clone() * b.clone() * b.clone();
    let q = Poly::var(var, 1).scale(&(a.powi(4) + b.powi(4)))
        + (Poly::one() + Poly::var(var, 2)).scale(&a2b2);
    let mut a0 = Poly::zero();
    let mut a1 = Poly::zero();
    let mut binom = F::one();
    let two = F::from_int(2);
    for t in 0..=2 * r {
        let coeff = two.clone() * binom.clone() * c.powi((2 * r - t) as i32);
        if t % 2 == 0 {
            a0 = a0 + (Poly::var(var, (r - t / 2) as i32) * q.pow((t / 2) as u32)).scale(&coeff);
        } else {
            a1 = a1 - (Poly::var(var, ((2 * r - t - 1) / 2) as i32) * q.pow(((t - 1) / 2) as u32)).scale(&coeff);
        }
        binom = binom * F::from_int((2 * r - t) as i64) / F::from_int(t as i64 + 1);
    }
    let den = F::one() / (two * a.clone() * b.clone() * c).powi(r as i32);
    (a0.scale(&den), a1.scale(&den))
}

/// Expands `beta_0^{2r} + beta_1^{2r}` and `beta_0^{2r} - beta_1^{2r}` in
/// `u = sqrt(w)` and the square root `S` symbolically, and returns the
/// largest coefficient that must vanish for the alphas to be polynomials in
/// `w`, relative to the largest coefficient overall.
pub fn alpha_half_power_residual(a: f64, b: f64, r: usize) -> f64 {
    // Elements P(u) + Q(u) S with S^2 = (a^4+b^4) u^2 + a^2 b^2 (1 + u^4).
    type Elem = (Poly<C64>, Poly<C64>);
    let s2 = Poly::var(0, 2).scale(&C64::new(a.powi(4) + b.powi(4), 0.0))
        + (Poly::one() + Poly::var(0, 4)).scale(&C64::new(a * a * b * b, 0.0));
    let mul = |x: &Elem, y: &Elem| -> Elem { (&x.0 * &y.0 + &(&x.1 * &y.1) * &s2, &x.0 * &y.1 + &x.1 * &y.0) };
    let c = C64::new(a * a + b * b, 0.0);
    let power = |sign: f64| {
        let base: Elem = (Poly::var(0, 1).scale(&c), Poly::constant(C64::new(-sign, 0.0)));
        (0..2 * r).fold((Poly::one(), Poly::zero()), |acc, _| mul(&acc, &base))
    };
    let (p0, p1) = (power(1.0), power(-1.0));
    let sum = (&p0.0 + &p1.0, &p0.1 + &p1.1);
    let dif = (&p0.0 - &p1.0, &p0.1 - &p1.1);
    let scale = [&sum.0, &sum.1, &dif.0, &dif.1].iter().map(|p| p.max_abs()).fold(1e-300, f64::max);
    let odd = |p: &Poly<C64>, parity: i32| {
        p.terms().filter(|(e, _)| e[0].rem_euclid(2) == parity).map(|(_, v)| v.norm()).fold(0.0, f64::max)
    };
    let stray = [sum.1.max_abs(), odd(&sum.0, 1), dif.0.max_abs(), odd(&dif.1, 0)];
    stray.into_iter().fold(0.0, f64::max) / scale
}

/// The 4x4 matrix of polynomials in `w` (variable 0) and `z` (variable 1).
pub fn n_matrix<F: Field>(a: &F, b: &F) -> [[Poly<F>; 4]; 4] {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let mut p = Poly::zero();
            for &(k, pa, pb, pw, pz) in N_TERMS[4 * r + c] {
                p.add_term([pw, pz, 0, 0], F::from_int(k) * a.powi(pa) * b.powi(pb));
            }
            p
        })
    })
}

/// Which derivation of `L(a,b,i,j)` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FortressRoute {
    /// Iterate the vector recurrence on polynomials in `x, y`.
    Recurrence,
    /// Sum the eigen expansion `sum_{r<m} N (alpha(w) ⊗ alpha(z))`.
    Eigen,
}

/// All `L(a, b, i, j)` for `0 <= i, j < n`, stored as `i * n + j`.
pub fn fortress_boundary_table<F: Field>(n: usize, a: Param, b: Param, route: FortressRoute) -> Result<Vec<F>> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(AztecError::NotMultipleOfFour(n));
    }
    let (af, bf) = (F::from_param(a), F::from_param(b));
    let components = match route {
        FortressRoute::Recurrence => recurrence_vector(n / 2, &af, &bf),
        FortressRoute::Eigen => eigen_vector(n / 4, &af, &bf),
    };
    let mut out = vec![F::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let comp = &components[2 * (i % 2) + j % 2];
            let v = comp.coeff(&[(i / 2) as i32, (j / 2) as i32, 0, 0]);
            out[i * n + j] = -F::i_pow((i + j + 1) as i64) * v;
        }
    }
    Ok(out)
}

fn recurrence_vector<F: Field>(steps: usize, a: &F, b: &F) -> [Poly<F>; 4] {
    if steps == 0 {
        return std::array::from_fn(|_| Poly::zero());
    }
    let half = F::one() / F::from_int(2);
    let (c, d) = (half.clone() / a.clone(), half / b.clone());
    let prev = recurrence_vector(steps - 1, &c, &d);
    let mut tilde = apply(&matrix_c_terms(&c, &d), &prev);
    tilde[0] = &tilde[0] + &Poly::constant(vector_d(&c, &d)[(0, 0)].clone());
    let mut g = apply(&matrix_a_terms(a, b), &tilde);
    g[0] = &g[0] + &Poly::constant(vector_b(a)[(0, 0)].clone());
    g
}

fn eigen_vector<F: Field>(m: usize, a: &F, b: &F) -> [Poly<F>; 4] {
    let nm = n_matrix(a, b);
    let mut total: [Poly<F>; 4] = std::array::from_fn(|_| Poly::zero());
    for r in 0..m {
        let (w0, w1) = alpha_polys(a, b, r, 0);
        let (z0, z1) = alpha_polys(a, b, r, 1);
        let vec = [&w0 * &z0, &w0 * &z1, &w1 * &z0, &w1 * &z1];
        for (row, t) in total.iter_mut().enumerate() {
            for (col, v) in vec.iter().enumerate() {
                *t = &*t + &(&nm[row][col] * v);
            }
        }
    }
    let c = a.clone() * a.clone() + b.clone() * b.clone();
    let pref = F::one() / (F::from_int(16) * a.clone() * b.clone() * c.clone() * c);
    total.map(|p| p.scale(&pref))
}

