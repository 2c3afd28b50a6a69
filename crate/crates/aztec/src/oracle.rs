//! Brute-force ground truth: Kasteleyn matrices, determinants, inverses and
//! exhaustive matching enumeration.

use crate::error::{AztecError, Result};
use crate::lattice::{classify, Color, DiamondGraph, Direction, Edge, KCoord, Slot};
use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::weights::{FaceWeights, WeightScheme};

/// Largest order accepted by [`enumerate_matchings`].
pub const MAX_ENUMERATION_ORDER: usize = 4;

/// `K(b, w)` with rows indexed by blacks and columns by whites.
#[derive(Clone, Debug)]
pub struct KMatrix<F> {
    graph: DiamondGraph,
    label: String,
    entries: Matrix<F>,
}

impl<F: Field> KMatrix<F> {
    pub fn assemble(g: &DiamondGraph, s: &WeightScheme) -> Result<Self> {
        let n = g.order();
        s.validate(n)?;
        let entries = Self::fill(g, |b, dir| s.raw_weight(n, b, dir));
        Ok(KMatrix { graph: g.clone(), label: s.to_string(), entries })
    }

    /// Kasteleyn matrix of a face-weight table, with `i` on the `e2` slots.
    pub fn from_faces(fw: &FaceWeights<F>) -> Result<Self> {
        let g = DiamondGraph::build(fw.order())?;
        let mut entries = Matrix::zeros(g.blacks().len(), g.whites().len());
        for k in 0..fw.order() {
            for l in 0..fw.order() {
                for slot in Slot::ALL {
                    let e = slot.edge(k, l);
                    let (r, c) = (g.require_black(e.black)?, g.require_white(e.white)?);
                    entries[(r, c)] = fw.kasteleyn_entry(k, l, slot);
                }
            }
        }
        Ok(KMatrix { graph: g, label: "face weights".into(), entries })
    }

    fn fill(g: &DiamondGraph, mut weight: impl FnMut(KCoord, Direction) -> F) -> Matrix<F> {
        let mut m = Matrix::zeros(g.blacks().len(), g.whites().len());
        for (r, &b) in g.blacks().iter().enumerate() {
            for dir in Direction::ALL {
                if let Some(c) = g.white_index(b.offset(dir)) {
                    m[(r, c)] = weight(b, dir);
                }
            }
        }
        m
    }

    pub fn graph(&self) -> &DiamondGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.entries
    }

    pub fn entry(&self, black: KCoord, white: KCoord) -> Result<F> {
        let r = self.graph.require_black(black)?;
        let c = self.graph.require_white(white)?;
        Ok(self.entries[(r, c)].clone())
    }

    pub fn det(&self) -> Result<F> {
        self.entries.det()
    }

    /// `|det K|` as an element of the field.
    pub fn partition_function(&self) -> Result<F> {
        Ok(self.det()?.axis_abs())
    }

    pub fn invert(&self) -> Result<InverseKasteleyn<F>> {
        let m = self.entries.inverse(&self.label)?;
        Ok(InverseKasteleyn { graph: self.graph.clone(), entries: m })
    }

    /// Weighted count of matchings of the diamond with one white and one
    /// black vertex removed, via the determinant of the minor.
    pub fn removed_pf(&self, v1: KCoord, v2: KCoord) -> Result<F> {
        let (white, black) = split_pair(v1, v2)?;
        let r = self.graph.require_black(black)?;
        let c = self.graph.require_white(white)?;
        Ok(self.entries.minor(r, c).det()?.axis_abs())
    }
}

fn split_pair(v1: KCoord, v2: KCoord) -> Result<(KCoord, KCoord)> {
    match (classify(v1)?.color, classify(v2)?.color) {
        (Color::White, Color::Black) => Ok((v1, v2)),
        (Color::Black, Color::White) => Ok((v2, v1)),
        _ => Err(AztecError::SameColor),
    }
}

/// `K^{-1}(w, b)` with rows indexed by whites and columns by blacks.
#[derive(Clone, Debug)]
pub struct InverseKasteleyn<F> {
    graph: DiamondGraph,
    entries: Matrix<F>,
}

impl<F: Field> InverseKasteleyn<F> {
    pub fn from_matrix(graph: DiamondGraph, entries: Matrix<F>) -> Self {
        InverseKasteleyn { graph, entries }
    }

    /// Builds the table from a per-entry evaluator.
    pub fn from_entries(graph: &DiamondGraph, mut f: impl FnMut(KCoord, KCoord) -> Result<F>) -> Result<Self> {
        let mut entries = Matrix::zeros(graph.whites().len(), graph.blacks().len());
        for (r, &w) in graph.whites().iter().enumerate() {
            for (c, &b) in graph.blacks().iter().enumerate() {
                entries[(r, c)] = f(w, b)?;
            }
        }
        Ok(InverseKasteleyn { graph: graph.clone(), entries })
    }

    pub fn graph(&self) -> &DiamondGraph {
        &self.graph
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.entries
    }

    pub fn entry(&self, white: KCoord, black: KCoord) -> Result<F> {
        let r = self.graph.require_white(white)?;
        let c = self.graph.require_black(black)?;
        Ok(self.entries[(r, c)].clone())
    }

    /// `max |K K^{-1} - I|`.
    pub fn residual(&self, k: &KMatrix<F>) -> Result<f64> {
        let prod = k.matrix().mul(&self.entries)?;
        Ok(prod.max_abs_diff(&Matrix::identity(prod.rows())))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> InverseKasteleyn<G> {
        let m = &self.entries;
        InverseKasteleyn {
            graph: self.graph.clone(),
            entries: Matrix::from_fn(m.rows(), m.cols(), |r, c| f(&m[(r, c)])),
        }
    }
}

/// Every perfect matching with its weight (product of edge magnitudes).
#[derive(Clone, Debug)]
pub struct MatchingList<F> {
    pub matchings: Vec<Vec<Edge>>,
    pub weights: Vec<F>,
}

impl<F: Field> MatchingList<F> {
    pub fn total_weight(&self) -> F {
        self.weights.iter().cloned().fold(F::zero(), |a, b| a + b)
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }
}

/// Edge weight with the phase removed.
pub fn edge_magnitude<F: Field>(s: &WeightScheme, n: usize, e: &Edge) -> F {
    let dir = e.direction();
    let w: F = s.raw_weight(n, e.black, dir);
    if dir.is_e2() {
        w * -F::imag()
    } else {
        w
    }
}

pub fn enumerate_matchings<F: Field>(g: &DiamondGraph, s: &WeightScheme) -> Result<MatchingList<F>> {
    enumerate_excluding(g, s, &[])
}

/// Matchings of the diamond with the listed vertices deleted.
pub fn enumerate_excluding<F: Field>(
    g: &DiamondGraph,
    s: &WeightScheme,
    removed: &[KCoord],
) -> Result<MatchingList<F>> {
    let n = g.order();
    if n > MAX_ENUMERATION_ORDER {
        return Err(AztecError::EnumerationTooLarge(n));
    }
    s.validate(n)?;
    let blacks: Vec<KCoord> = g.blacks().iter().copied().filter(|b| !removed.contains(b)).collect();
    let mut used = vec![false; g.whites().len()];
    for w in removed {
        if let Some(i) = g.white_index(*w) {
            used[i] = true;
        }
    }
    let mut out = MatchingList { matchings: Vec::new(), weights: Vec::new() };
    let mut stack = Vec::with_capacity(blacks.len());
    search(g, s, &blacks, 0, &mut used, &mut stack, &mut out);
    Ok(out)
}

fn search<F: Field>(
    g: &DiamondGraph,
    s: &WeightScheme,
    blacks: &[KCoord],
    idx: usize,
    used: &mut [bool],
    stack: &mut Vec<Edge>,
    out: &mut MatchingList<F>,
) {
    if idx == blacks.len() {
        if used.iter().all(|u| *u) {
            let w = stack.iter().fold(F::one(), |acc, e| acc * edge_magnitude::<F>(s, g.order(), e));
            out.matchings.push(stack.clone());
            out.weights.push(w);
        }
        return;
    }
    let b = blacks[idx];
    for dir in Direction::ALL {
        let w = b.offset(dir);
        if let Some(c) = g.white_index(w) {
            if !used[c] {
                used[c] = true;
                stack.push(Edge { black: b, white: w });
                search(g, s, blacks, idx + 1, used, stack, out);
                stack.pop();
                used[c] = false;
            }
        }
    }
}

/// Weighted matching count with two vertices removed. Uses enumeration for
/// `n <= 4` and the minor determinant otherwise.
pub fn boundary_removed_pf<F: Field>(g: &DiamondGraph, s: &WeightScheme, v1: KCoord, v2: KCoord) -> Result<F> {
    let (white, black) = split_pair(v1, v2)?;
    g.require_white(white)?;
    g.require_black(black)?;
    if g.order() <= MAX_ENUMERATION_ORDER {
        Ok(enumerate_excluding::<F>(g, s, &[white, black])?.total_weight())
    } else {
        KMatrix::<F>::assemble(g, s)?.removed_pf(white, black)
    }
}
