//! Boundary generating function for the `q^vol` weightings at the north-east
//! corner: white `(2n-2i-1, 2n)` and black `(2n, 2n-1-2j)` removed.
//!
//! Iterating `F(w,b,a) = R(w,b,a) F(qw,qb,qa) + S(a)` gives
//! `G(w,b) = sum_{i<n} S(a q^i) prod_{k<i} R(w q^k, b q^k, a q^k)` with
//! `S(a) = a q / (1 + q a^2)` and
//! `R(w,b,a) = q (1 + q a b)(1 + q a w) / (1 + a^2 q)`.

use crate::scalar::{Field, Param};

/// Upper limit of the inner product over `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductBound {
    /// `k = 0, ..., i-1`. Agrees with removed-vertex ratios.
    Exclusive,
    /// `k = 0, ..., i`. Kept only as a negative control.
    Inclusive,
}

/// Coefficient of `w^i b^j` in the `q^diag` boundary generating function,
/// that is `Z^diag(i, j) / Z_n^diag`.
pub fn qdiag_bgf_coeff<F: Field>(n: usize, i: i64, j: i64, a: Param, q: Param, bound: ProductBound) -> F {
    if i < 0 || j < 0 || i as usize >= n || j as usize >= n {
        return F::zero();
    }
    let (i, j) = (i as usize, j as usize);
    let a = F::from_param(a);
    let q = F::from_param(q);
    let mut total = F::zero();
    for outer in 0..n {
        let len = match bound {
            ProductBound::Exclusive => outer,
            ProductBound::Inclusive => outer + 1,
        };
        // prod_{k<len} q (1 + s_k b)(1 + s_k w) / (1 + a^2 q^{2k+1}) with s_k = a q^{2k+1}.
        let mut scale = a.clone() * q.powi(outer as i32 + 1)
            / (F::one() + q.powi(2 * outer as i32 + 1) * a.clone() * a.clone());
        let mut elem = vec![F::zero(); len + 1];
        elem[0] = F::one();
        for k in 0..len {
            let qk = q.powi(2 * k as i32 + 1);
            let s = a.clone() * qk.clone();
            for d in (1..=k + 1).rev() {
                elem[d] = elem[d].clone() + s.clone() * elem[d - 1].clone();
            }
            scale = scale * q.clone() / (F::one() + a.clone() * a.clone() * qk);
        }
        if i <= len && j <= len {
            total = total + scale * elem[i].clone() * elem[j].clone();
        }
    }
    total
}

/// `q^{(i+1)^2 + j}` times the `q^diag` coefficient: `Z^col(i, j) / Z_n^col`.
pub fn qcol_boundary_ratio<F: Field>(n: usize, i: i64, j: i64, a: Param, q: Param) -> F {
    let v: F = qdiag_bgf_coeff(n, i, j, a, q, ProductBound::Exclusive);
    if v.is_zero() {
        return v;
    }
    v * F::from_param(q).powi(((i + 1) * (i + 1) + j) as i32)
}
