//! Closed-form `K^{-1}` entries for every weighting with a known formula.

pub mod fortress;
pub mod one_periodic;
pub mod qvol;
pub mod relations;

pub use fortress::{fortress_entry, FortressInverse};
pub use one_periodic::{one_periodic_entry, uniform_entry, OnePeriodicInverse};
pub use qvol::{qcol_entry, qcol_table, qdiag_entry, qdiag_table, QvolParams};
pub use relations::{moved_vertex_relations_check, RelationReport};

use serde::{Deserialize, Serialize};

use crate::error::{AztecError, Result};
use crate::lattice::{DiamondGraph, KCoord};
use crate::oracle::{InverseKasteleyn, KMatrix};
use crate::scalar::{Field, Param};
use crate::weights::WeightScheme;

/// Whether a closed form exists for this scheme and order.
pub fn has_closed_form(s: &WeightScheme, n: usize) -> bool {
    match s {
        WeightScheme::Uniform
        | WeightScheme::OnePeriodic { .. }
        | WeightScheme::QCol { .. }
        | WeightScheme::QDiag { .. } => true,
        WeightScheme::TwoPeriodicEven { b, .. } => n.is_multiple_of(4) && *b == Param::ONE,
        WeightScheme::TwoPeriodicOdd { .. } => false,
    }
}

/// The full inverse table from the closed form of `s`.
pub fn closed_form_inverse<F: Field>(s: &WeightScheme, n: usize) -> Result<InverseKasteleyn<F>> {
    s.validate(n)?;
    match *s {
        WeightScheme::Uniform => OnePeriodicInverse::uniform(n)?.table(),
        WeightScheme::OnePeriodic { a } => OnePeriodicInverse::new(n, a)?.table(),
        WeightScheme::QCol { a, q } => qvol::qcol_table(&QvolParams { n, a, q }),
        WeightScheme::QDiag { a, q } => qvol::qdiag_table(&QvolParams { n, a, q }),
        WeightScheme::TwoPeriodicEven { a, b } if b == Param::ONE => FortressInverse::new(n, a)?.table(),
        _ => Err(no_closed_form(s, n)),
    }
}

fn no_closed_form(s: &WeightScheme, n: usize) -> AztecError {
    AztecError::Unsupported(format!("no closed form for {s} at n = {n}"))
}

/// One entry `K^{-1}(x, y)` from the closed form of `s`.
pub fn closed_form_entry<F: Field>(s: &WeightScheme, n: usize, x: KCoord, y: KCoord) -> Result<F> {
    s.validate(n)?;
    match *s {
        WeightScheme::Uniform => uniform_entry(n, x, y),
        WeightScheme::OnePeriodic { a } => one_periodic_entry(n, a, x, y),
        WeightScheme::QCol { a, q } => qcol_entry(&QvolParams { n, a, q }, x, y),
        WeightScheme::QDiag { a, q } => qdiag_entry(&QvolParams { n, a, q }, x, y),
        WeightScheme::TwoPeriodicEven { a, b } if b == Param::ONE && n.is_multiple_of(4) => fortress_entry(n, a, x, y),
        _ => Err(no_closed_form(s, n)),
    }
}

/// How a number was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Oracle,
    Empirical,
}

/// Largest order for which [`inverse_kasteleyn`] builds whole tables from
/// the closed forms. Larger tables come from direct inversion, which is
/// much faster there.
pub const CLOSED_FORM_TABLE_MAX_ORDER: usize = 8;

/// The full inverse, from the closed form when one exists and the order is
/// small enough, otherwise by inverting `K`.
pub fn inverse_kasteleyn<F: Field>(s: &WeightScheme, n: usize) -> Result<(InverseKasteleyn<F>, Method)> {
    s.validate(n)?;
    if has_closed_form(s, n) && n <= CLOSED_FORM_TABLE_MAX_ORDER {
        return Ok((closed_form_inverse(s, n)?, Method::ClosedForm));
    }
    let k = KMatrix::<F>::assemble(&DiamondGraph::build(n)?, s)?;
    Ok((k.invert()?, Method::Oracle))
}
