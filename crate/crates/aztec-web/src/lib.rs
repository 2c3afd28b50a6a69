//! WebAssembly bindings for the static demo page in `www/`.

use aztec::closed_form::{closed_form_entry, has_closed_form, inverse_kasteleyn};
use aztec::dpp::EdgeProcess;
use aztec::oracle::KMatrix;
use aztec::render::{render_density, render_tiling, Palette, RenderSpec};
use aztec::sampler::sample;
use aztec::{AztecError, DiamondGraph, KCoord, Param, WeightScheme, C64};
use wasm_bindgen::prelude::*;

/// Largest order accepted by [`density_svg`]; the inverse is dense.
pub const DENSITY_MAX_ORDER: usize = 24;
/// Largest order accepted by [`sample_svg`].
pub const SAMPLE_MAX_ORDER: usize = 300;

fn js(e: AztecError) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Builds a scheme from the page's form fields.
pub fn scheme(name: &str, n: usize, a: f64, b: f64, q: f64) -> Result<WeightScheme, AztecError> {
    let pa = Param::named("a", a)?;
    Ok(match name {
        "uniform" => WeightScheme::Uniform,
        "one-periodic" => WeightScheme::OnePeriodic { a: pa },
        "qcol" => WeightScheme::QCol { a: pa, q: Param::named("q", q)? },
        "qdiag" => WeightScheme::QDiag { a: pa, q: Param::named("q", q)? },
        "two-periodic" => WeightScheme::two_periodic(pa, Param::named("b", b)?, n),
        other => return Err(AztecError::Unsupported(format!("unknown scheme `{other}`"))),
    })
}

fn check_order(n: usize, max: usize) -> Result<(), AztecError> {
    if n == 0 || n > max {
        return Err(AztecError::Unsupported(format!("order must be between 1 and {max}, got {n}")));
    }
    Ok(())
}

/// SVG of one random tiling.
#[wasm_bindgen]
pub fn sample_svg(name: &str, n: usize, a: f64, b: f64, q: f64, seed: u64, eight_colors: bool) -> Result<String, JsValue> {
    check_order(n, SAMPLE_MAX_ORDER).map_err(js)?;
    let s = scheme(name, n, a, b, q).map_err(js)?;
    let t = sample(&s, n, seed).map_err(js)?;
    let palette = if eight_colors { Palette::Eight } else { Palette::Four };
    let scale = (600.0 / (2 * n) as f64).max(1.0);
    Ok(render_tiling(&t, &RenderSpec { palette, scale }))
}

/// SVG of every edge drawn with its placement probability as opacity.
#[wasm_bindgen]
pub fn density_svg(name: &str, n: usize, a: f64, b: f64, q: f64) -> Result<String, JsValue> {
    check_order(n, DENSITY_MAX_ORDER).map_err(js)?;
    let s = scheme(name, n, a, b, q).map_err(js)?;
    let (inv, _) = inverse_kasteleyn::<C64>(&s, n).map_err(js)?;
    let k = KMatrix::<C64>::assemble(inv.graph(), &s).map_err(js)?;
    let field = EdgeProcess::new(&k, &inv).and_then(|p| p.density_field()).map_err(js)?;
    let scale = 600.0 / (2 * n) as f64;
    Ok(render_density(n, field.iter().map(|(e, p)| (e, p.re)), &RenderSpec { scale, ..RenderSpec::default() }))
}

/// `[re, im]` of the inverse Kasteleyn entry at `(white, black)`.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn inverse_entry(
    name: &str,
    n: usize,
    a: f64,
    b: f64,
    q: f64,
    white_x1: i32,
    white_x2: i32,
    black_x1: i32,
    black_x2: i32,
) -> Result<Vec<f64>, JsValue> {
    check_order(n, DENSITY_MAX_ORDER).map_err(js)?;
    let s = scheme(name, n, a, b, q).map_err(js)?;
    let (w, bl) = (KCoord::new(white_x1, white_x2), KCoord::new(black_x1, black_x2));
    let v: C64 = if has_closed_form(&s, n) {
        closed_form_entry(&s, n, w, bl)
    } else {
        DiamondGraph::build(n)
            .and_then(|g| KMatrix::<C64>::assemble(&g, &s))
            .and_then(|k| k.invert())
            .and_then(|inv| inv.entry(w, bl))
    }
    .map_err(js)?;
    Ok(vec![v.re, v.im])
}
