//! `K_col^{-1}` for the `q^vol` weighting by residue evaluation of the
//! double contour integral.
//!
//! The inner `z`-integral around the origin is a finite coefficient sum, and
//! the outer `w`-integral is the sum of residues at `w = 1/(a q^{2k+2})`.
//! At `q = 1` these poles merge into one pole of higher order, which is
//! handled by Taylor expansion.

use crate::error::{AztecError, Result};
use crate::lattice::{DiamondGraph, KCoord};
use crate::oracle::InverseKasteleyn;
use crate::scalar::{Field, Param};
use crate::weights::{qcol_to_qdiag_gauge, WeightScheme};

/// Relative pole separation below which floating poles are merged.
const MERGE_TOL: f64 = 1e-12;
/// Relative separation below which distinct floating poles are rejected.
const CLUSTER_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QvolParams {
    pub n: usize,
    pub a: Param,
    pub q: Param,
}

impl QvolParams {
    pub fn scheme(&self) -> WeightScheme {
        WeightScheme::QCol { a: self.a, q: self.q }
    }
}

/// Coefficients (ascending) of
/// `prod_{k<x2/2} (z + a q^{y2-2k-2}) prod_{k<n-x2/2} (a q^{2k+x2+3-y2} z - 1)`.
fn z_polynomial<F: Field>(p: &QvolParams, x: KCoord, y: KCoord) -> Vec<F> {
    let (a, q) = (F::from_param(p.a), F::from_param(p.q));
    let n = p.n as i32;
    let mut poly = vec![F::one()];
    let mut mul = |c0: F, c1: F| {
        let mut out = vec![F::zero(); poly.len() + 1];
        for (i, v) in poly.iter().enumerate() {
            out[i] = out[i].clone() + v.clone() * c0.clone();
            out[i + 1] = out[i + 1].clone() + v.clone() * c1.clone();
        }
        poly = out;
    };
    for k in 0..x.x2 / 2 {
        mul(a.clone() * q.powi(y.x2 - 2 * k - 2), F::one());
    }
    for k in 0..n - x.x2 / 2 {
        mul(-F::one(), a.clone() * q.powi(2 * k + x.x2 + 3 - y.x2));
    }
    poly
}

/// The `w` denominator `prod_{k<=(y2-1)/2} (w + a q^{2k-1}) prod_{k<=n-(y2+1)/2} (a q^{2k+2} w - 1)`,
/// returned as the two lists of constants.
fn w_denominator<F: Field>(p: &QvolParams, y: KCoord) -> (Vec<F>, Vec<F>) {
    let (a, q) = (F::from_param(p.a), F::from_param(p.q));
    let n = p.n as i32;
    let neg = (0..=(y.x2 - 1) / 2).map(|k| a.clone() * q.powi(2 * k - 1)).collect();
    let pos = (0..=n - (y.x2 + 1) / 2).map(|k| a.clone() * q.powi(2 * k + 2)).collect();
    (neg, pos)
}

/// Truncated power series in `t`.
fn series_mul<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    let m = x.len();
    let mut out = vec![F::zero(); m];
    for i in 0..m {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..m - i {
            out[i + j] = out[i + j].clone() + x[i].clone() * y[j].clone();
        }
    }
    out
}

/// `1 / (alpha + beta t)` to `m` terms.
fn series_recip<F: Field>(alpha: &F, beta: &F, m: usize) -> Vec<F> {
    let inv = F::one() / alpha.clone();
    let r = -beta.clone() * inv.clone();
    let mut out = Vec::with_capacity(m);
    let mut cur = inv;
    for _ in 0..m {
        out.push(cur.clone());
        cur = cur * r.clone();
    }
    out
}

/// `(p + t)^k` to `m` terms, for any integer `k`.
fn series_power<F: Field>(p: &F, k: i32, m: usize) -> Vec<F> {
    let mut out = Vec::with_capacity(m);
    let mut binom = F::one();
    let inv = F::one() / p.clone();
    let mut cur = p.powi(k);
    for j in 0..m {
        out.push(binom.clone() * cur.clone());
        binom = binom * F::from_int(k as i64 - j as i64) / F::from_int(j as i64 + 1);
        cur = cur * inv.clone();
    }
    out
}

/// Sum of residues of `h(w) / (prod (w + neg_i) prod (pos_j w - 1))` at the
/// points `w = 1/pos_j`, where `h` is the Laurent polynomial given as
/// `(exponent, coefficient)` pairs.
fn residue_sum<F: Field>(h: &[(i32, F)], neg: &[F], pos: &[F]) -> Result<F> {
    let poles: Vec<F> = pos.iter().map(|c| F::one() / c.clone()).collect();
    let mut cluster = vec![usize::MAX; poles.len()];
    let mut reps = Vec::new();
    for i in 0..poles.len() {
        if cluster[i] != usize::MAX {
            continue;
        }
        cluster[i] = reps.len();
        for j in i + 1..poles.len() {
            if cluster[j] != usize::MAX {
                continue;
            }
            if F::EXACT {
                if poles[i] == poles[j] {
                    cluster[j] = reps.len();
                }
            } else {
                let gap = (poles[i].clone() - poles[j].clone()).size() / poles[i].size();
                if gap <= MERGE_TOL {
                    cluster[j] = reps.len();
                } else if gap < CLUSTER_TOL {
                    return Err(AztecError::ClusteredPoles { gap });
                }
            }
        }
        reps.push(i);
    }
    let mut total = F::zero();
    for (ci, &rep) in reps.iter().enumerate() {
        let p = poles[rep].clone();
        let members: Vec<usize> = (0..pos.len()).filter(|&j| cluster[j] == ci).collect();
        let m = members.len();
        let mut acc = vec![F::zero(); m];
        for (e, coef) in h {
            let s = series_power(&p, *e, m);
            for (a, b) in acc.iter_mut().zip(s) {
                *a = a.clone() + coef.clone() * b;
            }
        }
        for nv in neg {
            acc = series_mul(&acc, &series_recip(&(p.clone() + nv.clone()), &F::one(), m));
        }
        let mut scale = F::one();
        for (j, c) in pos.iter().enumerate() {
            if cluster[j] == ci {
                scale = scale / c.clone();
            } else {
                acc = series_mul(&acc, &series_recip(&(c.clone() * p.clone() - F::one()), c, m));
            }
        }
        total = total + scale * acc[m - 1].clone();
    }
    Ok(total)
}

pub fn f1<F: Field>(p: &QvolParams, x: KCoord, y: KCoord) -> Result<F> {
    let q = F::from_param(p.q);
    let n = p.n as i32;
    let poly = z_polynomial::<F>(p, x, y);
    let e = (x.x1 + 1) / 2;
    let h: Vec<(i32, F)> = (0..e)
        .filter_map(|m| {
            let idx = (e - 1 - m) as usize;
            poly.get(idx).map(|c| (y.x1 / 2 - m - 1, c.clone()))
        })
        .collect();
    let (neg, pos) = w_denominator::<F>(p, y);
    let i_exp = (-x.x1 + x.x2 + y.x1 - y.x2 + 4) / 2;
    let q_exp = -(4 + 4 * n - x.x1 + x.x2 - y.x1 - y.x2) * (x.x1 - x.x2 - y.x1 + y.x2) / 4;
    Ok(F::i_pow(i_exp as i64) * q.powi(q_exp) * residue_sum(&h, &neg, &pos)?)
}

pub fn f2<F: Field>(p: &QvolParams, x: KCoord, y: KCoord) -> Result<F> {
    let q = F::from_param(p.q);
    let n = p.n as i32;
    let poly = z_polynomial::<F>(p, x, y);
    let shift = y.x1 / 2 - (x.x1 + 1) / 2;
    let h: Vec<(i32, F)> = poly.into_iter().enumerate().map(|(i, c)| (i as i32 + shift, c)).collect();
    let (neg, pos) = w_denominator::<F>(p, y);
    let mut pref = F::one();
    for k in 0..=((x.x1 - y.x1 - 3) / 2) {
        if x.x1 - y.x1 - 3 < 0 {
            break;
        }
        pref = pref * -F::imag() * q.powi(-2 * n + x.x1 - 4 - 2 * k);
    }
    for k in 0..=((x.x2 - y.x2 - 3) / 2) {
        if x.x2 - y.x2 - 3 < 0 {
            break;
        }
        pref = pref * F::imag() * q.powi(2 * n - x.x1 + 4 + 2 * k);
    }
    Ok(pref * residue_sum(&h, &neg, &pos)?)
}

/// `K_col^{-1}(x, y)`: `f1` when `x1 < y1 + 1`, otherwise `f1 + f2`.
pub fn qcol_entry<F: Field>(p: &QvolParams, x: KCoord, y: KCoord) -> Result<F> {
    let g = DiamondGraph::build(p.n)?;
    g.require_white(x)?;
    g.require_black(y)?;
    entry_unchecked(p, x, y)
}

fn entry_unchecked<F: Field>(p: &QvolParams, x: KCoord, y: KCoord) -> Result<F> {
    let v = f1(p, x, y)?;
    if x.x1 < y.x1 + 1 {
        Ok(v)
    } else {
        Ok(v + f2(p, x, y)?)
    }
}

/// `K_diag^{-1}(x, y)`, obtained from `K_col^{-1}` through the gauge map.
pub fn qdiag_entry<F: Field>(p: &QvolParams, x: KCoord, y: KCoord) -> Result<F> {
    let gauge = qcol_to_qdiag_gauge(p.n, p.q)?;
    let v: F = qcol_entry(p, x, y)?;
    Ok(v / (gauge.multiplier::<F>(x) * gauge.multiplier::<F>(y)))
}

pub fn qdiag_table<F: Field>(p: &QvolParams) -> Result<InverseKasteleyn<F>> {
    let g = DiamondGraph::build(p.n)?;
    let gauge = qcol_to_qdiag_gauge(p.n, p.q)?;
    InverseKasteleyn::from_entries(&g, |x, y| {
        let v: F = entry_unchecked(p, x, y)?;
        Ok(v / (gauge.multiplier::<F>(x) * gauge.multiplier::<F>(y)))
    })
}

pub fn qcol_table<F: Field>(p: &QvolParams) -> Result<InverseKasteleyn<F>> {
    let g = DiamondGraph::build(p.n)?;
    InverseKasteleyn::from_entries(&g, |x, y| entry_unchecked(p, x, y))
}
