//! Random tilings by generalized domino shuffling.
//!
//! A matching of the order-`m` diamond is stored as one 4-bit mask per face,
//! since every edge lies on exactly one face `(k, l)`. Growing from order
//! `m - 1` to `m` shifts the smaller matching by `(1, 1)`, deletes pairs that
//! share a face, slides lone edges to the opposite side of their face and
//! fills each empty face with a pair chosen from the order-`m` weights.
//!
//! The weight tables for every order are the child tables produced by
//! [`general_recurrence_step`]. Randomness comes from ChaCha20
//! (`rand_chacha` 0.9), seeded with `seed_from_u64` and one stream per
//! sample, so output is reproducible across platforms.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::boundary::general_recurrence_step;
use crate::error::{AztecError, Result};
use crate::lattice::{classify, DiamondGraph, Direction, Edge, KCoord, Slot};
use crate::scalar::C64;
use crate::weights::{face_weights, WeightScheme};

/// Domino orientation classes. `N`/`S` dominoes are the vertical `±e2`
/// edges and `E`/`W` the horizontal `±e1` edges, named by where the white
/// square sits relative to the black one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DominoType {
    N,
    S,
    E,
    W,
}

impl DominoType {
    pub const ALL: [DominoType; 4] = [DominoType::N, DominoType::S, DominoType::E, DominoType::W];

    pub fn of(dir: Direction) -> Self {
        match dir {
            Direction::PlusE2 => DominoType::N,
            Direction::MinusE2 => DominoType::S,
            Direction::PlusE1 => DominoType::E,
            Direction::MinusE1 => DominoType::W,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// A perfect matching of the order-`n` diamond.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TilingConfiguration {
    n: usize,
    edges: Vec<Edge>,
}

impl TilingConfiguration {
    /// Checks that `edges` is a perfect matching of the order-`n` diamond.
    pub fn new(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        let g = DiamondGraph::build(n)?;
        let mut seen = BTreeSet::new();
        for e in &edges {
            if !g.is_edge(e.black, e.white) {
                return Err(AztecError::NotAdjacent { black: e.black, white: e.white });
            }
            if !seen.insert(e.black) || !seen.insert(e.white) {
                return Err(AztecError::OverlappingEdges);
            }
        }
        if edges.len() != n * (n + 1) {
            return Err(AztecError::Unsupported(format!(
                "{} edges do not cover the order-{n} diamond",
                edges.len()
            )));
        }
        edges.sort();
        Ok(TilingConfiguration { n, edges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Matched edges sorted by black then white vertex.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Domino type and parity class of the black square for every edge.
    pub fn dominoes(&self) -> impl Iterator<Item = (Edge, DominoType, u8)> + '_ {
        self.edges.iter().map(|e| {
            let parity = classify(e.black).map(|c| c.parity).unwrap_or(0);
            (*e, DominoType::of(e.direction()), parity)
        })
    }

    /// `sum log |w(e)|` over the matched edges.
    pub fn log_weight(&self, s: &WeightScheme) -> f64 {
        self.edges
            .iter()
            .map(|e| s.raw_weight::<C64>(self.n, e.black, e.direction()).norm().ln())
            .sum()
    }
}

/// Pair `{S00, S11}` as a slot mask.
const PAIR_E1: u8 = 0b1001;
/// Pair `{S01, S10}`.
const PAIR_E2: u8 = 0b0110;

/// Creation probabilities for every intermediate order, ready to sample.
#[derive(Clone, Debug)]
pub struct Shuffler {
    n: usize,
    /// `tables[m - 1][k * m + l]` is the probability of the `{S00, S11}`
    /// pair on face `(k, l)` at order `m`.
    tables: Vec<Vec<f64>>,
}

impl Shuffler {
    pub fn new(s: &WeightScheme, n: usize) -> Result<Self> {
        let mut fw = face_weights::<C64>(s, n)?;
        let mut tables = vec![Vec::new(); n];
        loop {
            let m = fw.order();
            let mut probs = Vec::with_capacity(m * m);
            for k in 0..m {
                for l in 0..m {
                    let [w00, _, _, w11] = fw.get(k, l);
                    let p = (*w00 * *w11 / fw.delta(k, l)).re;
                    if !p.is_finite() {
                        return Err(AztecError::DegenerateFace { k, l });
                    }
                    probs.push(p.clamp(0.0, 1.0));
                }
            }
            tables[m - 1] = probs;
            match general_recurrence_step(&fw)?.child {
                Some(c) => fw = c,
                None => break,
            }
        }
        Ok(Shuffler { n, tables })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn sample_with<R: Rng>(&self, rng: &mut R) -> Result<TilingConfiguration> {
        let mut occ: Vec<u8> = Vec::new();
        for m in 1..=self.n {
            occ = grow(&occ, m, &self.tables[m - 1], rng)?;
        }
        let n = self.n;
        let mut edges = Vec::with_capacity(n * (n + 1));
        for k in 0..n {
            for l in 0..n {
                for slot in Slot::ALL {
                    if occ[k * n + l] & (1 << slot.index()) != 0 {
                        edges.push(slot.edge(k, l));
                    }
                }
            }
        }
        edges.sort();
        Ok(TilingConfiguration { n, edges })
    }

    /// The sample for `(seed, index)`; stream `index` of the seeded generator.
    pub fn sample_indexed(&self, seed: u64, index: u64) -> Result<TilingConfiguration> {
        self.sample_with(&mut sample_rng(seed, index))
    }

    /// `count` independent samples, generated on all available threads.
    pub fn sample_many(&self, count: usize, seed: u64) -> Result<Vec<TilingConfiguration>> {
        let threads = std::thread::available_parallelism().map_or(1, |t| t.get()).min(count.max(1));
        let chunk = count.div_ceil(threads.max(1)).max(1);
        let parts: Vec<Result<Vec<TilingConfiguration>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..count)
                .step_by(chunk)
                .map(|start| {
                    let end = (start + chunk).min(count);
                    scope.spawn(move || (start..end).map(|i| self.sample_indexed(seed, i as u64)).collect())
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("sampler thread panicked")).collect()
        });
        let mut out = Vec::with_capacity(count);
        for p in parts {
            out.extend(p?);
        }
        Ok(out)
    }
}

/// The generator behind sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One growth step from order `m - 1` to `m`.
fn grow<R: Rng>(prev: &[u8], m: usize, probs: &[f64], rng: &mut R) -> Result<Vec<u8>> {
    let pm = m - 1;
    let mut incoming = vec![0u8; m * m];
    for k in 0..pm {
        for l in 0..pm {
            let mask = prev[k * pm + l];
            for slot in Slot::ALL {
                if mask & (1 << slot.index()) == 0 {
                    continue;
                }
                let e = slot.edge(k, l);
                let shifted = Edge {
                    black: KCoord::new(e.white.x1 + 1, e.white.x2 + 1),
                    white: KCoord::new(e.black.x1 + 1, e.black.x2 + 1),
                };
                let (pk, pl, ps) = Slot::locate(&shifted).ok_or(AztecError::NotAdjacent {
                    black: shifted.black,
                    white: shifted.white,
                })?;
                incoming[pk * m + pl] |= 1 << ps.index();
            }
        }
    }
    let side = 2 * m + 1;
    let mut covered = vec![false; side * side];
    let cover = |v: KCoord, covered: &mut Vec<bool>| -> bool {
        let idx = v.x1 as usize * side + v.x2 as usize;
        !std::mem::replace(&mut covered[idx], true)
    };
    let mut occ = vec![0u8; m * m];
    for (idx, &mask) in incoming.iter().enumerate() {
        if mask.count_ones() == 1 {
            // The opposite slot has index `3 - s`, which reverses the mask bits.
            let slid = mask.reverse_bits() >> 4;
            occ[idx] = slid;
            let e = Slot::ALL[slid.trailing_zeros() as usize].edge(idx / m, idx % m);
            if !cover(e.black, &mut covered) || !cover(e.white, &mut covered) {
                return Err(AztecError::OverlappingEdges);
            }
        }
    }
    for k in 0..m {
        for l in 0..m {
            if occ[k * m + l] != 0 {
                continue;
            }
            let verts = face_vertices(k, l);
            if verts.iter().any(|v| covered[v.x1 as usize * side + v.x2 as usize]) {
                continue;
            }
            for v in verts {
                cover(v, &mut covered);
            }
            occ[k * m + l] = if rng.random::<f64>() < probs[k * m + l] { PAIR_E1 } else { PAIR_E2 };
        }
    }
    Ok(occ)
}

fn face_vertices(k: usize, l: usize) -> [KCoord; 4] {
    let (k, l) = (k as i32, l as i32);
    [
        KCoord::new(2 * k, 2 * l + 1),
        KCoord::new(2 * k + 2, 2 * l + 1),
        KCoord::new(2 * k + 1, 2 * l + 2),
        KCoord::new(2 * k + 1, 2 * l),
    ]
}

/// A random tiling of the order-`n` diamond under `s`.
pub fn sample(s: &WeightScheme, n: usize, seed: u64) -> Result<TilingConfiguration> {
    Shuffler::new(s, n)?.sample_indexed(seed, 0)
}

/// Fraction of samples containing an edge.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeFrequency {
    pub frequency: f64,
    /// Binomial standard error `sqrt(p (1 - p) / count)`.
    pub std_error: f64,
    pub count: usize,
}

pub fn empirical_edge_freq(samples: &[TilingConfiguration], edge: Edge) -> Result<EdgeFrequency> {
    let Some(first) = samples.first() else {
        return Err(AztecError::Unsupported("no samples".into()));
    };
    let n = first.order();
    if samples.iter().any(|s| s.order() != n) {
        return Err(AztecError::Unsupported("samples of different orders".into()));
    }
    DiamondGraph::build(n)?.edge(edge.black, edge.white)?;
    let hits = samples.iter().filter(|s| s.contains(&edge)).count();
    let count = samples.len();
    let p = hits as f64 / count as f64;
    Ok(EdgeFrequency { frequency: p, std_error: (p * (1.0 - p) / count as f64).sqrt(), count })
}
