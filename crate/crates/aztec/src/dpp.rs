//! Edge statistics from the determinantal formula
//! `P(e_1, ..., e_m) = det(K(b_i, w_i) K^{-1}(w_i, b_j))`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{AztecError, Result};
use crate::lattice::{Edge, KCoord};
use crate::linalg::Matrix;
use crate::oracle::{InverseKasteleyn, KMatrix};
use crate::scalar::Field;

/// Largest `|K K^{-1} - I|` accepted when pairing a matrix with an inverse.
pub const CONSISTENCY_TOL: f64 = 1e-8;
/// Floating determinants this far outside `[0, 1]` are clamped.
pub const CLAMP_TOL: f64 = 1e-9;

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeEvent(Vec<Edge>);

impl EdgeEvent {
    pub fn new(edges: Vec<Edge>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &edges {
            if !seen.insert(e.black) || !seen.insert(e.white) {
                return Err(AztecError::OverlappingEdges);
            }
        }
        Ok(EdgeEvent(edges))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }
}

/// A Kasteleyn matrix together with a checked inverse.
#[derive(Clone, Debug)]
pub struct EdgeProcess<'a, F> {
    k: &'a KMatrix<F>,
    kinv: &'a InverseKasteleyn<F>,
}

impl<'a, F: Field> EdgeProcess<'a, F> {
    pub fn new(k: &'a KMatrix<F>, kinv: &'a InverseKasteleyn<F>) -> Result<Self> {
        let residual = kinv.residual(k)?;
        if residual > CONSISTENCY_TOL {
            return Err(AztecError::InconsistentInverse { residual });
        }
        Ok(EdgeProcess { k, kinv })
    }

    /// `P(all edges of ev are matched)`, exact on exact backends.
    pub fn joint_probability(&self, ev: &EdgeEvent) -> Result<F> {
        let es = ev.edges();
        let g = self.k.graph();
        for e in es {
            g.edge(e.black, e.white)?;
        }
        let mut m = Matrix::zeros(es.len(), es.len());
        for (i, ei) in es.iter().enumerate() {
            let kw = self.k.entry(ei.black, ei.white)?;
            for (j, ej) in es.iter().enumerate() {
                m[(i, j)] = kw.clone() * self.kinv.entry(ei.white, ej.black)?;
            }
        }
        clamp(m.det()?)
    }

    pub fn edge_probability(&self, e: Edge) -> Result<F> {
        self.joint_probability(&EdgeEvent(vec![e]))
    }

    pub fn density_field(&self) -> Result<DensityField<F>> {
        let mut probs = Vec::new();
        for e in self.k.graph().edges() {
            probs.push((e, self.edge_probability(e)?));
        }
        Ok(DensityField { probs })
    }
}

/// Real part of a floating probability, with roundoff outside `[0, 1]`
/// clamped. Exact values are returned untouched.
fn clamp<F: Field>(det: F) -> Result<F> {
    if F::EXACT {
        return Ok(det);
    }
    let re = det.to_c64().re;
    if !(-CLAMP_TOL..=1.0 + CLAMP_TOL).contains(&re) || det.to_c64().im.abs() > CLAMP_TOL.sqrt() {
        return Err(AztecError::NotAProbability { value: re });
    }
    Ok(F::from_c64(re.clamp(0.0, 1.0).into()))
}

pub fn joint_probability<F: Field>(k: &KMatrix<F>, kinv: &InverseKasteleyn<F>, ev: &EdgeEvent) -> Result<F> {
    EdgeProcess::new(k, kinv)?.joint_probability(ev)
}

pub fn density_field<F: Field>(k: &KMatrix<F>, kinv: &InverseKasteleyn<F>) -> Result<DensityField<F>> {
    EdgeProcess::new(k, kinv)?.density_field()
}

/// Placement probability of every edge.
#[derive(Clone, Debug, Serialize)]
pub struct DensityField<F> {
    probs: Vec<(Edge, F)>,
}

impl<F: Field> DensityField<F> {
    pub fn iter(&self) -> impl Iterator<Item = &(Edge, F)> {
        self.probs.iter()
    }

    pub fn get(&self, e: &Edge) -> Option<&F> {
        self.probs.iter().find(|(x, _)| x == e).map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Largest `|sum of incident probabilities - 1|` over all vertices.
    pub fn vertex_sum_error(&self) -> f64 {
        let mut sums: std::collections::BTreeMap<(bool, KCoord), F> = Default::default();
        for (e, p) in &self.probs {
            for key in [(false, e.black), (true, e.white)] {
                let s = sums.entry(key).or_insert_with(F::zero);
                *s = s.clone() + p.clone();
            }
        }
        sums.values().map(|s| (s.clone() - F::one()).size()).fold(0.0, f64::max)
    }
}
