//! The dual graph of the Aztec diamond in Kasteleyn coordinates.
//!
//! White vertices have `x1` odd and `x2` even, black vertices the reverse.
//! Neighbours differ by `±e1 = ±(1,1)` or `±e2 = ±(-1,1)`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AztecError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KCoord {
    pub x1: i32,
    pub x2: i32,
}

impl KCoord {
    pub const fn new(x1: i32, x2: i32) -> Self {
        KCoord { x1, x2 }
    }

    pub const fn offset(self, d: Direction) -> Self {
        let (dx1, dx2) = d.delta();
        KCoord::new(self.x1 + dx1, self.x2 + dx2)
    }
}

impl fmt::Display for KCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::White => "white",
            Color::Black => "black",
        }
    }
}

/// Colour plus the parity class `i` with `(x1 + x2) mod 4 = 2i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexClass {
    pub color: Color,
    pub parity: u8,
}

pub fn classify(v: KCoord) -> Result<VertexClass> {
    let color = match (v.x1.rem_euclid(2), v.x2.rem_euclid(2)) {
        (1, 0) => Color::White,
        (0, 1) => Color::Black,
        _ => return Err(AztecError::NotAVertex { x1: v.x1, x2: v.x2 }),
    };
    let parity = (((v.x1 + v.x2).rem_euclid(4) - 1) / 2) as u8;
    Ok(VertexClass { color, parity })
}

/// Offset from a black vertex to an adjacent white one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    PlusE1,
    MinusE1,
    PlusE2,
    MinusE2,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::PlusE1, Direction::MinusE1, Direction::PlusE2, Direction::MinusE2];

    pub const fn delta(self) -> (i32, i32) {
        match self {
            Direction::PlusE1 => (1, 1),
            Direction::MinusE1 => (-1, -1),
            Direction::PlusE2 => (-1, 1),
            Direction::MinusE2 => (1, -1),
        }
    }

    pub fn between(black: KCoord, white: KCoord) -> Option<Direction> {
        let d = (white.x1 - black.x1, white.x2 - black.x2);
        Direction::ALL.into_iter().find(|dir| dir.delta() == d)
    }

    pub fn is_e2(self) -> bool {
        matches!(self, Direction::PlusE2 | Direction::MinusE2)
    }
}

/// A black-white edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub black: KCoord,
    pub white: KCoord,
}

impl Edge {
    pub fn direction(&self) -> Direction {
        Direction::between(self.black, self.white).expect("edge endpoints are adjacent")
    }
}

/// The four edges around a face, named by the `w_{i,j}` convention: with
/// left/right black corners and top/bottom white corners, `S00` is left-top,
/// `S01` top-right, `S10` left-bottom and `S11` bottom-right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    S00,
    S01,
    S10,
    S11,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::S00, Slot::S01, Slot::S10, Slot::S11];

    pub const fn index(self) -> usize {
        match self {
            Slot::S00 => 0,
            Slot::S01 => 1,
            Slot::S10 => 2,
            Slot::S11 => 3,
        }
    }

    pub const fn from_bits(i: usize, j: usize) -> Slot {
        match (i, j) {
            (0, 0) => Slot::S00,
            (0, 1) => Slot::S01,
            (1, 0) => Slot::S10,
            _ => Slot::S11,
        }
    }

    /// The edge in this slot of face `(k, l)`.
    pub fn edge(self, k: usize, l: usize) -> Edge {
        let (k, l) = (k as i32, l as i32);
        let left = KCoord::new(2 * k, 2 * l + 1);
        let right = KCoord::new(2 * k + 2, 2 * l + 1);
        let top = KCoord::new(2 * k + 1, 2 * l + 2);
        let bottom = KCoord::new(2 * k + 1, 2 * l);
        match self {
            Slot::S00 => Edge { black: left, white: top },
            Slot::S01 => Edge { black: right, white: top },
            Slot::S10 => Edge { black: left, white: bottom },
            Slot::S11 => Edge { black: right, white: bottom },
        }
    }

    /// Inverse of [`Slot::edge`]: the face and slot owning an edge.
    pub fn locate(edge: &Edge) -> Option<(usize, usize, Slot)> {
        let dir = Direction::between(edge.black, edge.white)?;
        let b = edge.black;
        let (k, l, slot) = match dir {
            Direction::PlusE1 => (b.x1 / 2, (b.x2 - 1) / 2, Slot::S00),
            Direction::PlusE2 => (b.x1 / 2 - 1, (b.x2 - 1) / 2, Slot::S01),
            Direction::MinusE2 => (b.x1 / 2, (b.x2 - 1) / 2, Slot::S10),
            Direction::MinusE1 => (b.x1 / 2 - 1, (b.x2 - 1) / 2, Slot::S11),
        };
        if k < 0 || l < 0 {
            return None;
        }
        Some((k as usize, l as usize, slot))
    }
}

/// A face centred at `(2k+1, 2l+1)` with its edges in slot order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub k: usize,
    pub l: usize,
    pub center: KCoord,
    pub edges: [Edge; 4],
}

#[derive(Clone, Debug)]
pub struct DiamondGraph {
    n: usize,
    whites: Vec<KCoord>,
    blacks: Vec<KCoord>,
    white_index: HashMap<KCoord, usize>,
    black_index: HashMap<KCoord, usize>,
}

impl DiamondGraph {
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(AztecError::ZeroOrder);
        }
        let m = n as i32;
        let whites: Vec<KCoord> = (0..m)
            .flat_map(|a| (0..=m).map(move |b| KCoord::new(2 * a + 1, 2 * b)))
            .collect();
        let blacks: Vec<KCoord> = (0..=m)
            .flat_map(|a| (0..m).map(move |b| KCoord::new(2 * a, 2 * b + 1)))
            .collect();
        let white_index = whites.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let black_index = blacks.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        Ok(DiamondGraph { n, whites, blacks, white_index, black_index })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Whites in lexicographic `(x1, x2)` order.
    pub fn whites(&self) -> &[KCoord] {
        &self.whites
    }

    /// Blacks in lexicographic `(x1, x2)` order.
    pub fn blacks(&self) -> &[KCoord] {
        &self.blacks
    }

    pub fn white_index(&self, v: KCoord) -> Option<usize> {
        self.white_index.get(&v).copied()
    }

    pub fn black_index(&self, v: KCoord) -> Option<usize> {
        self.black_index.get(&v).copied()
    }

    pub fn contains(&self, v: KCoord) -> bool {
        self.white_index.contains_key(&v) || self.black_index.contains_key(&v)
    }

    pub fn require_white(&self, v: KCoord) -> Result<usize> {
        self.white_index(v).ok_or(AztecError::OutOfDiamond { vertex: v, color: "white", n: self.n })
    }

    pub fn require_black(&self, v: KCoord) -> Result<usize> {
        self.black_index(v).ok_or(AztecError::OutOfDiamond { vertex: v, color: "black", n: self.n })
    }

    /// Adjacent vertices of the opposite colour that lie inside the diamond.
    pub fn neighbors(&self, v: KCoord) -> Vec<KCoord> {
        Direction::ALL
            .iter()
            .map(|d| KCoord::new(v.x1 + d.delta().0, v.x2 + d.delta().1))
            .filter(|u| self.contains(*u))
            .collect()
    }

    pub fn is_edge(&self, black: KCoord, white: KCoord) -> bool {
        self.black_index.contains_key(&black)
            && self.white_index.contains_key(&white)
            && Direction::between(black, white).is_some()
    }

    pub fn edge(&self, black: KCoord, white: KCoord) -> Result<Edge> {
        if self.is_edge(black, white) {
            Ok(Edge { black, white })
        } else {
            Err(AztecError::NotAdjacent { black, white })
        }
    }

    /// All `4n^2` edges, grouped by black vertex.
    pub fn edges(&self) -> Vec<Edge> {
        self.blacks
            .iter()
            .flat_map(|&b| {
                Direction::ALL
                    .iter()
                    .map(move |d| Edge { black: b, white: b.offset(*d) })
                    .filter(|e| self.white_index.contains_key(&e.white))
            })
            .collect()
    }

    pub fn faces(&self) -> Vec<Face> {
        (0..self.n)
            .flat_map(|k| (0..self.n).map(move |l| (k, l)))
            .map(|(k, l)| Face {
                k,
                l,
                center: KCoord::new(2 * k as i32 + 1, 2 * l as i32 + 1),
                edges: Slot::ALL.map(|s| s.edge(k, l)),
            })
            .collect()
    }
}
