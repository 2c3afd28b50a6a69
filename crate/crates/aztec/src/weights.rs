//! Edge weights and Kasteleyn phases.
//!
//! Every weight returned here already carries its phase: edges parallel to
//! `e2` are multiplied by `i`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AztecError, Result};
use crate::lattice::{DiamondGraph, Direction, KCoord, Slot};
use crate::scalar::{Field, Param, C64};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WeightScheme {
    Uniform,
    OnePeriodic { a: Param },
    #[serde(rename = "qcol")]
    QCol { a: Param, q: Param },
    #[serde(rename = "qdiag")]
    QDiag { a: Param, q: Param },
    TwoPeriodicEven { a: Param, b: Param },
    TwoPeriodicOdd { a: Param, b: Param },
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightScheme::Uniform => write!(f, "uniform"),
            WeightScheme::OnePeriodic { a } => write!(f, "one-periodic(a={a})"),
            WeightScheme::QCol { a, q } => write!(f, "qcol(a={a}, q={q})"),
            WeightScheme::QDiag { a, q } => write!(f, "qdiag(a={a}, q={q})"),
            WeightScheme::TwoPeriodicEven { a, b } => write!(f, "two-periodic-even(a={a}, b={b})"),
            WeightScheme::TwoPeriodicOdd { a, b } => write!(f, "two-periodic-odd(a={a}, b={b})"),
        }
    }
}

impl WeightScheme {
    /// The two-periodic scheme matching the parity of `n`.
    pub fn two_periodic(a: Param, b: Param, n: usize) -> Self {
        if n.is_multiple_of(2) {
            WeightScheme::TwoPeriodicEven { a, b }
        } else {
            WeightScheme::TwoPeriodicOdd { a, b }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            WeightScheme::Uniform => "uniform",
            WeightScheme::OnePeriodic { .. } => "one-periodic",
            WeightScheme::QCol { .. } => "qcol",
            WeightScheme::QDiag { .. } => "qdiag",
            WeightScheme::TwoPeriodicEven { .. } => "two-periodic-even",
            WeightScheme::TwoPeriodicOdd { .. } => "two-periodic-odd",
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(AztecError::ZeroOrder);
        }
        match self {
            WeightScheme::TwoPeriodicEven { .. } if n % 2 == 1 => Err(AztecError::ParityMismatch {
                scheme: self.name(),
                expected: "even",
                n,
            }),
            WeightScheme::TwoPeriodicOdd { .. } if n.is_multiple_of(2) => Err(AztecError::ParityMismatch {
                scheme: self.name(),
                expected: "odd",
                n,
            }),
            _ => Ok(()),
        }
    }

    /// Weight with phase of the edge from `black` in direction `dir`. No
    /// bounds checking.
    pub fn raw_weight<F: Field>(&self, n: usize, black: KCoord, dir: Direction) -> F {
        let n = n as i32;
        let (x1, x2) = (black.x1, black.x2);
        let e2 = |v: F| v * F::imag();
        match *self {
            WeightScheme::Uniform => {
                if dir.is_e2() {
                    F::imag()
                } else {
                    F::one()
                }
            }
            WeightScheme::OnePeriodic { a } => {
                if dir.is_e2() {
                    e2(F::from_param(a))
                } else {
                    F::one()
                }
            }
            WeightScheme::QCol { a, q } => {
                let (a, q) = (F::from_param(a), F::from_param(q));
                match dir {
                    Direction::PlusE1 | Direction::MinusE1 => F::one(),
                    Direction::PlusE2 => e2(a * q.powi(-2 * n + x1 - 1)),
                    Direction::MinusE2 => e2(a * q.powi(2 * n - x1)),
                }
            }
            WeightScheme::QDiag { a, q } => {
                let (a, q) = (F::from_param(a), F::from_param(q));
                let c = n - (x2 + 1) / 2;
                match dir {
                    Direction::PlusE1 | Direction::MinusE1 => F::one(),
                    Direction::PlusE2 => e2(a * q.powi(-2 * (n - x1 / 2).min(c))),
                    Direction::MinusE2 => e2(a * q.powi(2 * (n - x1 / 2 - 1).min(c) + 1)),
                }
            }
            WeightScheme::TwoPeriodicEven { a, b } | WeightScheme::TwoPeriodicOdd { a, b } => {
                let parity = (x1 + x2).rem_euclid(4) == 3;
                let (a, b) = (F::from_param(a), F::from_param(b));
                // `first` is a(1-i)+bi, `second` is ai+b(1-i).
                let (first, second) = if parity { (b, a) } else { (a, b) };
                let even = matches!(self, WeightScheme::TwoPeriodicEven { .. });
                match dir {
                    Direction::PlusE1 => {
                        if even {
                            first
                        } else {
                            second
                        }
                    }
                    Direction::MinusE1 => {
                        if even {
                            second
                        } else {
                            first
                        }
                    }
                    Direction::PlusE2 => e2(second),
                    Direction::MinusE2 => e2(first),
                }
            }
        }
    }
}

/// The Kasteleyn entry `K(b, w)` for an edge of the order-`n` diamond.
pub fn edge_weight<F: Field>(s: &WeightScheme, n: usize, black: KCoord, white: KCoord) -> Result<F> {
    s.validate(n)?;
    let g = DiamondGraph::build(n)?;
    g.require_black(black)?;
    g.require_white(white)?;
    let dir = Direction::between(black, white).ok_or(AztecError::NotAdjacent { black, white })?;
    Ok(s.raw_weight(n, black, dir))
}

/// Positive face weights `[w00, w01, w10, w11]` on an `n x n` grid of faces,
/// stored row-major in `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct FaceWeights<F> {
    n: usize,
    cells: Vec<[F; 4]>,
}

impl<F: Field> FaceWeights<F> {
    pub fn new(n: usize, cells: Vec<[F; 4]>) -> Result<Self> {
        if n == 0 {
            return Err(AztecError::ZeroOrder);
        }
        if cells.len() != n * n {
            return Err(AztecError::Unsupported(format!("expected {} faces, got {}", n * n, cells.len())));
        }
        Ok(FaceWeights { n, cells })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> [F; 4]) -> Result<Self> {
        let cells = (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).map(|(k, l)| f(k, l)).collect();
        Self::new(n, cells)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, l: usize) -> &[F; 4] {
        &self.cells[k * self.n + l]
    }

    pub fn weight(&self, k: usize, l: usize, slot: Slot) -> &F {
        &self.get(k, l)[slot.index()]
    }

    pub fn delta(&self, k: usize, l: usize) -> F {
        let [w00, w01, w10, w11] = self.get(k, l).clone();
        w00 * w11 + w01 * w10
    }

    /// The table of the diamond rotated by a half turn, which swaps the
    /// south-west and north-east boundaries.
    pub fn rotated(&self) -> Self {
        let n = self.n;
        let cells = (0..n * n)
            .map(|idx| {
                let [w00, w01, w10, w11] = self.get(n - 1 - idx / n, n - 1 - idx % n).clone();
                [w11, w10, w01, w00]
            })
            .collect();
        FaceWeights { n, cells }
    }

    /// Kasteleyn entry (with phase) of the edge in `slot` of face `(k, l)`.
    pub fn kasteleyn_entry(&self, k: usize, l: usize, slot: Slot) -> F {
        let w = self.weight(k, l, slot).clone();
        match slot {
            Slot::S01 | Slot::S10 => w * F::imag(),
            _ => w,
        }
    }
}

/// Face weights of a scheme with the phases stripped.
pub fn face_weights<F: Field>(s: &WeightScheme, n: usize) -> Result<FaceWeights<F>> {
    s.validate(n)?;
    FaceWeights::from_fn(n, |k, l| {
        Slot::ALL.map(|slot| {
            let e = slot.edge(k, l);
            let w: F = s.raw_weight(n, e.black, e.direction());
            if e.direction().is_e2() {
                w * -F::imag()
            } else {
                w
            }
        })
    })
}

/// Multiplies the weight of every edge `(b, w)` by `m(b) m(w)`.
#[derive(Clone, Debug, PartialEq)]
pub enum GaugeMap {
    /// `m(v) = base^exponent(v)`, with unlisted vertices mapped to 1.
    Powers { base: Param, exponents: BTreeMap<KCoord, i32> },
    /// Arbitrary multipliers, with unlisted vertices mapped to 1.
    Explicit(BTreeMap<KCoord, C64>),
}

impl GaugeMap {
    pub fn multiplier<F: Field>(&self, v: KCoord) -> F {
        match self {
            GaugeMap::Powers { base, exponents } => {
                exponents.get(&v).map_or_else(F::one, |&e| F::from_param(*base).powi(e))
            }
            GaugeMap::Explicit(m) => m.get(&v).map_or_else(F::one, |z| F::from_c64(*z)),
        }
    }

    /// Product of every vertex multiplier of the order-`n` diamond.
    pub fn total<F: Field>(&self, g: &DiamondGraph) -> F {
        g.whites().iter().chain(g.blacks()).fold(F::one(), |acc, v| acc * self.multiplier(*v))
    }
}

/// The gauge turning `K_col` into `K_diag`.
pub fn qcol_to_qdiag_gauge(n: usize, q: Param) -> Result<GaugeMap> {
    let g = DiamondGraph::build(n)?;
    let mut exponents = BTreeMap::new();
    for &y in g.whites() {
        let t = (y.x2 - y.x1 + 1) / 2;
        exponents.insert(y, if y.x2 > y.x1 { t * t } else { t });
    }
    for &x in g.blacks() {
        let e = if x.x1 < x.x2 {
            let t = (x.x2 - x.x1 + 1) / 2;
            -t * t
        } else {
            (x.x1 - x.x2 - 1) / 2
        };
        exponents.insert(x, e);
    }
    Ok(GaugeMap::Powers { base: q, exponents })
}

