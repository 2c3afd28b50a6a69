//! Urban-renewal recurrence for arbitrary positive face weights.
//!
//! One step of urban renewal, edge contraction and pendant removal turns the
//! order-`n` diamond with face weights `w` into the order-`n-1` diamond with
//! child weights
//! `[w00(k,l+1)/Δ(k,l+1), w01(k+1,l+1)/Δ(k+1,l+1), w10(k,l)/Δ(k,l), w11(k+1,l)/Δ(k+1,l)]`
//! and multiplies the partition function by `∏ Δ(k,l)`.

use crate::error::{AztecError, Result};
use crate::scalar::Field;
use crate::weights::FaceWeights;

#[derive(Clone, Debug)]
pub struct RecurrenceStep<F> {
    /// Weights of the order `n-1` diamond, absent when `n = 1`.
    pub child: Option<FaceWeights<F>>,
    /// `∏ Δ(k, l)`.
    pub pf_factor: F,
    /// `w01(0,0)/Δ(0,0)`, the weight of the only term surviving at `i = j = 0`.
    pub corner: F,
    /// `row_kernel[i][s] = w_{0,s}(i,0) / Δ(i,0)`.
    pub row_kernel: Vec<[F; 2]>,
    /// `col_kernel[j][t] = w_{t,1}(0,j) / Δ(0,j)`.
    pub col_kernel: Vec<[F; 2]>,
}

pub fn general_recurrence_step<F: Field>(fw: &FaceWeights<F>) -> Result<RecurrenceStep<F>> {
    let n = fw.order();
    let mut delta = vec![F::zero(); n * n];
    for k in 0..n {
        for l in 0..n {
            let d = fw.delta(k, l);
            if d.is_zero() {
                return Err(AztecError::DegenerateFace { k, l });
            }
            delta[k * n + l] = d;
        }
    }
    let d = |k: usize, l: usize| delta[k * n + l].clone();
    let w = |k: usize, l: usize, s: usize| fw.get(k, l)[s].clone();
    let child = if n > 1 {
        Some(FaceWeights::from_fn(n - 1, |k, l| {
            [
                w(k, l + 1, 0) / d(k, l + 1),
                w(k + 1, l + 1, 1) / d(k + 1, l + 1),
                w(k, l, 2) / d(k, l),
                w(k + 1, l, 3) / d(k + 1, l),
            ]
        })?)
    } else {
        None
    };
    let pf_factor = delta.iter().cloned().fold(F::one(), |acc, x| acc * x);
    let row_kernel = (0..n).map(|i| [w(i, 0, 0) / d(i, 0), w(i, 0, 1) / d(i, 0)]).collect();
    let col_kernel = (0..n).map(|j| [w(0, j, 1) / d(0, j), w(0, j, 3) / d(0, j)]).collect();
    Ok(RecurrenceStep { child, pf_factor, corner: w(0, 0, 1) / d(0, 0), row_kernel, col_kernel })
}

/// `Z(i, j) / Z_n` for `0 <= i, j < n`, stored as `i * n + j`, where `Z(i, j)`
/// counts matchings with white `(2i+1, 0)` and black `(0, 2j+1)` removed.
pub fn boundary_ratios<F: Field>(fw: &FaceWeights<F>) -> Result<Vec<F>> {
    let n = fw.order();
    let step = general_recurrence_step(fw)?;
    let prev = match &step.child {
        Some(c) => boundary_ratios(c)?,
        None => Vec::new(),
    };
    let m = n - 1;
    let mut out = vec![F::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut v = if i == 0 && j == 0 { step.corner.clone() } else { F::zero() };
            for s in 0..2 {
                for t in 0..2 {
                    let (k, l) = (i as i64 - s as i64, j as i64 - 1 + t as i64);
                    if k < 0 || l < 0 || k >= m as i64 || l >= m as i64 {
                        continue;
                    }
                    let r = prev[k as usize * m + l as usize].clone();
                    v = v + step.row_kernel[i][s].clone() * step.col_kernel[j][t].clone() * r;
                }
            }
            out[i * n + j] = v;
        }
    }
    Ok(out)
}

/// Partition function obtained by iterating the recurrence down to order 0.
pub fn recurrence_partition_function<F: Field>(fw: &FaceWeights<F>) -> Result<F> {
    let step = general_recurrence_step(fw)?;
    let rest = match &step.child {
        Some(c) => recurrence_partition_function(c)?,
        None => F::one(),
    };
    Ok(step.pf_factor * rest)
}

/// `log Z` accumulated in logarithms, so large orders do not overflow.
pub fn log_partition_function<F: Field>(fw: &FaceWeights<F>) -> Result<f64> {
    let mut fw = fw.clone();
    let mut total = 0.0;
    loop {
        let n = fw.order();
        for k in 0..n {
            for l in 0..n {
                total += fw.delta(k, l).size().ln();
            }
        }
        match general_recurrence_step(&fw)?.child {
            Some(c) => fw = c,
            None => return Ok(total),
        }
    }
}
