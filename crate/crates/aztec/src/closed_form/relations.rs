//! Linear relations that a correct inverse must satisfy entrywise.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::Matrix;
use crate::oracle::{InverseKasteleyn, KMatrix};
use crate::scalar::Field;

/// Largest residuals of the relations used to move vertices off the
/// boundary.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    /// `sum_{v ~ x} K(x, v) K^{-1}(v, y) = [x = y]` for blacks `x, y`.
    pub black_relation: f64,
    /// `sum_{u ~ y} K^{-1}(x, u) K(u, y) = [x = y]` for whites `x, y`.
    pub white_relation: f64,
    /// `K* K K^{-1} = K*`.
    pub kstar_left: f64,
    /// `K^{-1} K K* = K*`.
    pub kstar_right: f64,
}

impl RelationReport {
    pub fn max(&self) -> f64 {
        [self.black_relation, self.white_relation, self.kstar_left, self.kstar_right]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

pub fn moved_vertex_relations_check<F: Field>(k: &KMatrix<F>, inv: &InverseKasteleyn<F>) -> Result<RelationReport> {
    let km = k.matrix();
    let l = inv.matrix();
    let kstar = Matrix::from_fn(km.cols(), km.rows(), |r, c| km[(c, r)].conj());
    let id_b = Matrix::identity(km.rows());
    let id_w = Matrix::identity(km.cols());
    let kl = km.mul(l)?;
    let lk = l.mul(km)?;
    Ok(RelationReport {
        black_relation: kl.max_abs_diff(&id_b),
        white_relation: lk.max_abs_diff(&id_w),
        kstar_left: kstar.mul(&kl)?.max_abs_diff(&kstar),
        kstar_right: lk.mul(&kstar)?.max_abs_diff(&kstar),
    })
}
