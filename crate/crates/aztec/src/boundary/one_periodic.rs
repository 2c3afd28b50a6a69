//! Uniform and one-periodic boundary generating function
//! `a z / ((1 - z)(1 + a^2 - z(1 + w a)(1 + b a)))`.
//!
//! The coefficient of `w^i b^j z^n` is `Z(i, j) / Z_n`, where `Z(i, j)` counts
//! matchings of the order-`n` diamond with white `(2i+1, 0)` and black
//! `(0, 2j+1)` removed.

use num_rational::BigRational;

use crate::scalar::{Field, GaussRational, Param};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OnePeriodicBgf {
    pub a: Param,
}

impl OnePeriodicBgf {
    pub fn uniform() -> Self {
        OnePeriodicBgf { a: Param::ONE }
    }

    /// The closed form evaluated at a point inside its disc of convergence.
    pub fn eval<F: Field>(&self, w: F, b: F, z: F) -> F {
        let a = F::from_param(self.a);
        let one = F::one();
        let den = (one.clone() - z.clone())
            * (one.clone() + a.clone() * a.clone()
                - z.clone() * (one.clone() + w * a.clone()) * (one + b * a.clone()));
        a * z / den
    }

    /// Coefficient of `w^i b^j z^n`: `a/(1+a^2) sum_{m<n} C(m,i) C(m,j) a^{i+j} / (1+a^2)^m`.
    pub fn coeff<F: Field>(&self, n: usize, i: i64, j: i64) -> F {
        if n == 0 || i < 0 || j < 0 || i as usize >= n || j as usize >= n {
            return F::zero();
        }
        let (i, j) = (i as usize, j as usize);
        let a = F::from_param(self.a);
        let s = F::one() + a.clone() * a.clone();
        let inv_s = F::one() / s.clone();
        let mut total = F::zero();
        let mut geom = F::one();
        for m in 0..n {
            if m >= i.max(j) {
                total = total + binomial::<F>(m, i) * binomial::<F>(m, j) * geom.clone();
            }
            geom = geom * inv_s.clone();
        }
        a.clone() * inv_s * a.powi((i + j) as i32) * total
    }

    /// Largest violation of
    /// `R_n(i,j) = sum_{k,l} a^{k+l}/(1+a^2) R_{n-1}(i-k, j-l) + a/(1+a^2) [i=j=0]`
    /// over `1 <= n <= n_max`.
    pub fn recurrence_residual<F: Field>(&self, n_max: usize) -> f64 {
        let a = F::from_param(self.a);
        let s = F::one() + a.clone() * a.clone();
        let mut worst = 0.0f64;
        for n in 1..=n_max {
            for i in 0..n as i64 {
                for j in 0..n as i64 {
                    let mut rhs = if i == 0 && j == 0 { a.clone() / s.clone() } else { F::zero() };
                    for k in 0..2 {
                        for l in 0..2 {
                            let prev: F = self.coeff(n - 1, i - k, j - l);
                            rhs = rhs + a.powi((k + l) as i32) / s.clone() * prev;
                        }
                    }
                    let lhs: F = self.coeff(n, i, j);
                    worst = worst.max((lhs - rhs).size());
                }
            }
        }
        worst
    }
}

fn binomial<F: Field>(m: usize, k: usize) -> F {
    if k > m {
        return F::zero();
    }
    let mut acc = F::one();
    for t in 0..k {
        acc = acc * F::from_int((m - t) as i64) / F::from_int((t + 1) as i64);
    }
    acc
}

/// Exact `Z(i, j) / Z_n` for uniform weights.
pub fn uniform_boundary_ratio(n: usize, i: i64, j: i64) -> BigRational {
    let v: GaussRational = OnePeriodicBgf::uniform().coeff(n, i, j);
    v.re
}

pub fn one_periodic_boundary_ratio<F: Field>(n: usize, i: i64, j: i64, a: Param) -> F {
    OnePeriodicBgf { a }.coeff(n, i, j)
}
