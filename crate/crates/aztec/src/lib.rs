//! Inverse Kasteleyn matrices, boundary generating functions and random
//! domino tilings of the Aztec diamond.

pub mod boundary;
pub mod closed_form;
pub mod dpp;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod render;
pub mod sampler;
pub mod scalar;
pub mod series;
pub mod verify;
pub mod weights;

pub use error::{AztecError, Result};
pub use lattice::{classify, Color, DiamondGraph, Direction, Edge, Face, KCoord, Slot, VertexClass};
pub use scalar::{Field, GaussRational, Param, Precision, C64};
pub use weights::{edge_weight, face_weights, qcol_to_qdiag_gauge, FaceWeights, GaugeMap, WeightScheme};
