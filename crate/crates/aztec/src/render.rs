//! SVG rendering of tilings.
//!
//! Vertex `(x1, x2)` is the unit square centred at
//! `((x1 + x2) / 2, (x2 - x1) / 2)`, so `e2` edges are vertical dominoes and
//! `e1` edges horizontal ones. The order-`n` diamond fits in a `2n x 2n` box.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AztecError;
use crate::lattice::{Edge, KCoord};
use crate::sampler::{DominoType, TilingConfiguration};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Palette {
    /// One colour per domino type.
    Four,
    /// Domino type crossed with the parity class of the black square.
    Eight,
}

impl FromStr for Palette {
    type Err = AztecError;

    fn from_str(s: &str) -> Result<Self, AztecError> {
        match s {
            "4" | "four" => Ok(Palette::Four),
            "8" | "eight" => Ok(Palette::Eight),
            _ => Err(AztecError::Unsupported(format!("palette must be 4 or 8, got {s}"))),
        }
    }
}

const FOUR: [&str; 4] = ["#d62728", "#1f77b4", "#2ca02c", "#ffbf00"];
const EIGHT: [[&str; 4]; 2] = [
    ["#d62728", "#1f77b4", "#2ca02c", "#ffbf00"],
    ["#7f1d1d", "#a6cee3", "#b2df8a", "#8c564b"],
];

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub palette: Palette,
    /// Pixels per lattice unit.
    pub scale: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { palette: Palette::Four, scale: 8.0 }
    }
}

/// A domino as an axis-aligned rectangle in lattice units, `y` pointing down
/// from the top of the bounding box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominoRect {
    pub x: i32,
    pub y: i32,
    pub width: i32,
    pub height: i32,
    pub kind: DominoType,
    pub parity: u8,
}

pub fn domino_rects(t: &TilingConfiguration) -> Vec<DominoRect> {
    let n = t.order() as i32;
    t.dominoes()
        .map(|(e, kind, parity)| {
            // Lower-left corners of the two unit squares, in doubled units.
            let corner = |x1: i32, x2: i32| (x1 + x2 - 1, x2 - x1 - 1);
            let (u1, v1) = corner(e.black.x1, e.black.x2);
            let (u2, v2) = corner(e.white.x1, e.white.x2);
            let (u0, v0) = (u1.min(u2) / 2, v1.min(v2) / 2);
            let vertical = matches!(kind, DominoType::N | DominoType::S);
            let (width, height) = if vertical { (1, 2) } else { (2, 1) };
            DominoRect { x: u0, y: n - (v0 + height), width, height, kind, parity }
        })
        .collect()
}

fn colour(spec: &RenderSpec, r: &DominoRect) -> &'static str {
    match spec.palette {
        Palette::Four => FOUR[r.kind.index()],
        Palette::Eight => EIGHT[usize::from(r.parity & 1)][r.kind.index()],
    }
}

/// An SVG 1.1 document with one rectangle per domino. The output depends
/// only on `(t, spec)`.
pub fn render_tiling(t: &TilingConfiguration, spec: &RenderSpec) -> String {
    let side = 2.0 * t.order() as f64 * spec.scale;
    let stroke = (spec.scale * 0.06).max(0.0);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(out, r##"<g stroke="#222222" stroke-width="{stroke}">"##);
    for r in domino_rects(t) {
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
            r.x as f64 * spec.scale,
            r.y as f64 * spec.scale,
            r.width as f64 * spec.scale,
            r.height as f64 * spec.scale,
            colour(spec, &r)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// An SVG heat map of edge probabilities: each edge is drawn between the
/// centres of its two squares, coloured by domino type, with opacity equal
/// to its probability.
pub fn render_density<'a>(
    n: usize,
    probs: impl IntoIterator<Item = (&'a Edge, f64)>,
    spec: &RenderSpec,
) -> String {
    let side = 2.0 * n as f64 * spec.scale;
    let centre = |v: KCoord| {
        let x = f64::from(v.x1 + v.x2) / 2.0;
        let y = n as f64 - f64::from(v.x2 - v.x1) / 2.0;
        (x * spec.scale, y * spec.scale)
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(out, r#"<g stroke-width="{}" stroke-linecap="round">"#, spec.scale * 0.5);
    for (e, p) in probs {
        let (x1, y1) = centre(e.black);
        let (x2, y2) = centre(e.white);
        let kind = DominoType::of(e.direction());
        let _ = writeln!(
            out,
            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{}" stroke-opacity="{:.4}"/>"#,
            FOUR[kind.index()],
            p.clamp(0.0, 1.0)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
