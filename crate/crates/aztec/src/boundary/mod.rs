//! Boundary generating functions: `K^{-1}` entries and removed-vertex ratios
//! for one white vertex and one black vertex on the diamond boundary.

pub mod fortress;
pub mod general;
mod nmatrix;
pub mod one_periodic;
pub mod qdiag;

pub use fortress::{
    alpha_half_power_residual, alpha_polys, beta, fortress_boundary_table, fortress_recurrence_matrices, FortressEigenSystem, FortressRoute,
};
pub use general::{
    boundary_ratios, general_recurrence_step, log_partition_function, recurrence_partition_function, RecurrenceStep,
};
pub use one_periodic::{one_periodic_boundary_ratio, uniform_boundary_ratio, OnePeriodicBgf};
pub use qdiag::{qcol_boundary_ratio, qdiag_bgf_coeff, ProductBound};

use serde::Serialize;

use crate::error::{AztecError, Result};
use crate::lattice::KCoord;
use crate::scalar::Field;
use crate::weights::{face_weights, WeightScheme};

/// A removed-vertex ratio `Z(white, black) / Z_n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryEntry<F> {
    pub white: KCoord,
    pub black: KCoord,
    pub ratio: F,
}

/// The boundary ratio with index `(i, j)` for a scheme. The `q^vol`
/// families use the north-east corner, white `(2n-2i-1, 2n)` and black
/// `(2n, 2n-1-2j)`; all other schemes use the south-west corner, white
/// `(2i+1, 0)` and black `(0, 2j+1)`.
pub fn boundary_entry<F: Field>(s: &WeightScheme, n: usize, i: usize, j: usize) -> Result<BoundaryEntry<F>> {
    s.validate(n)?;
    if i >= n || j >= n {
        return Err(AztecError::Unsupported(format!("boundary index ({i}, {j}) is outside 0..{n}")));
    }
    let (ni, ii, ji) = (n as i32, i as i32, j as i32);
    let sw = (KCoord::new(2 * ii + 1, 0), KCoord::new(0, 2 * ji + 1));
    let ne = (KCoord::new(2 * ni - 2 * ii - 1, 2 * ni), KCoord::new(2 * ni, 2 * ni - 1 - 2 * ji));
    let (corner, ratio) = match *s {
        WeightScheme::Uniform => (sw, OnePeriodicBgf::uniform().coeff(n, i as i64, j as i64)),
        WeightScheme::OnePeriodic { a } => (sw, one_periodic_boundary_ratio(n, i as i64, j as i64, a)),
        WeightScheme::QDiag { a, q } => (ne, qdiag_bgf_coeff(n, i as i64, j as i64, a, q, ProductBound::Exclusive)),
        WeightScheme::QCol { a, q } => (ne, qcol_boundary_ratio(n, i as i64, j as i64, a, q)),
        WeightScheme::TwoPeriodicEven { .. } | WeightScheme::TwoPeriodicOdd { .. } => {
            (sw, boundary_ratios(&face_weights::<F>(s, n)?)?[i * n + j].clone())
        }
    };
    Ok(BoundaryEntry { white: corner.0, black: corner.1, ratio })
}
