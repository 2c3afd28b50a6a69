//! The acceptance suite: nine checks, each with its tolerance and time
//! budget. Used by the `verify` subcommand and the `acceptance` test target.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::boundary::{
    alpha_half_power_residual, boundary_ratios, fortress_boundary_table, fortress_recurrence_matrices,
    qcol_boundary_ratio, qdiag_bgf_coeff, FortressRoute, OnePeriodicBgf, ProductBound,
};
use crate::closed_form::{closed_form_inverse, moved_vertex_relations_check, FortressInverse, OnePeriodicInverse};
use crate::closed_form::qvol::{qcol_table, QvolParams};
use crate::dpp::EdgeProcess;
use crate::error::{AztecError, Result};
use crate::lattice::{DiamondGraph, KCoord};
use crate::oracle::{enumerate_matchings, InverseKasteleyn, KMatrix};
use crate::render::{render_tiling, Palette, RenderSpec};
use crate::sampler::{empirical_edge_freq, Shuffler};
use crate::scalar::{Field, GaussRational, Param, C64};
use crate::weights::{FaceWeights, WeightScheme};

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub budget_seconds: Option<f64>,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}. {}: {} ({:.2} s", self.id, self.title, self.detail, self.seconds)?;
        match self.budget_seconds {
            Some(b) => write!(f, ", budget {b} s)"),
            None => write!(f, ")"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Where the order-200 renders of criterion 9 are written, if anywhere.
    pub figures_dir: Option<PathBuf>,
}

pub const CRITERIA: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

pub fn run_all(opts: &VerifyOptions) -> Vec<Criterion> {
    CRITERIA.iter().map(|&id| run(id, opts)).collect()
}

pub fn run(id: u8, opts: &VerifyOptions) -> Criterion {
    let (title, budget): (&'static str, Option<f64>) = match id {
        1 => ("partition exactness", Some(1.0)),
        2 => ("one-periodic closed form vs oracle", Some(30.0)),
        3 => ("q^vol closed form vs oracle", Some(60.0)),
        4 => ("two-periodic closed form vs oracle", Some(120.0)),
        5 => ("boundary ratios and recurrences", None),
        6 => ("eigen-system and half-power coefficients", None),
        7 => ("vertex-moving relations", None),
        8 => ("sampler distribution", Some(180.0)),
        9 => ("order-200 renders", Some(120.0)),
        _ => ("unknown criterion", None),
    };
    let start = Instant::now();
    let outcome = match id {
        1 => partition_exactness(),
        2 => one_periodic_closed_form(),
        3 => qvol_closed_form(),
        4 => fortress_closed_form(),
        5 => boundary_lemmas(),
        6 => eigen_system(),
        7 => relations(),
        8 => sampler_distribution(),
        9 => figures(opts),
        _ => Err(AztecError::Unsupported(format!("no criterion {id}"))),
    };
    let seconds = start.elapsed().as_secs_f64();
    let (mut passed, detail) = match outcome {
        Ok(c) => c,
        Err(e) => (false, format!("error: {e}")),
    };
    if budget.is_some_and(|b| seconds > b) {
        passed = false;
    }
    Criterion { id, title, passed, detail, seconds, budget_seconds: budget }
}

type Check = Result<(bool, String)>;

fn p(v: f64) -> Param {
    Param::new(v).expect("positive constant")
}

fn to_c64<F: Field>(inv: &InverseKasteleyn<F>) -> InverseKasteleyn<C64> {
    inv.map(|v| v.to_c64())
}

fn exact_inverse(s: &WeightScheme, n: usize) -> Result<InverseKasteleyn<GaussRational>> {
    KMatrix::<GaussRational>::assemble(&DiamondGraph::build(n)?, s)?.invert()
}

fn partition_exactness() -> Check {
    let mut ok = true;
    for n in 1..=8usize {
        let g = DiamondGraph::build(n)?;
        let z = KMatrix::<GaussRational>::assemble(&g, &WeightScheme::Uniform)?.partition_function()?;
        let want = BigInt::from(2).pow((n * (n + 1) / 2) as u32);
        ok &= z.im.is_zero() && z.re == want.into();
    }
    Ok((ok, "Z_n = 2^{n(n+1)/2} exactly for n = 1..8".into()))
}

fn one_periodic_closed_form() -> Check {
    let mut exact_ok = true;
    let mut worst = 0.0f64;
    for a in [0.5, 1.0, 2.0] {
        for n in 1..=4 {
            let s = WeightScheme::OnePeriodic { a: p(a) };
            let oracle = exact_inverse(&s, n)?;
            let closed = OnePeriodicInverse::new(n, p(a))?.table::<GaussRational>()?;
            exact_ok &= closed.matrix() == oracle.matrix();
            let float = OnePeriodicInverse::new(n, p(a))?.table::<C64>()?;
            worst = worst.max(float.matrix().max_abs_diff(to_c64(&oracle).matrix()));
        }
    }
    Ok((exact_ok && worst <= 1e-10, format!("exact match {exact_ok}, floating error {worst:.1e} (tol 1e-10)")))
}

fn qvol_closed_form() -> Check {
    let mut worst = 0.0f64;
    let mut worst_q1 = 0.0f64;
    for a in [0.5, 1.0, 2.0] {
        for n in 1..=3 {
            for q in [0.8, 0.9, 0.95] {
                let params = QvolParams { n, a: p(a), q: p(q) };
                let oracle = to_c64(&exact_inverse(&params.scheme(), n)?);
                let closed = qcol_table::<C64>(&params)?;
                worst = worst.max(closed.matrix().max_abs_diff(oracle.matrix()));
            }
            let at_one = qcol_table::<C64>(&QvolParams { n, a: p(a), q: Param::ONE })?;
            let one = OnePeriodicInverse::new(n, p(a))?.table::<C64>()?;
            worst_q1 = worst_q1.max(at_one.matrix().max_abs_diff(one.matrix()));
        }
    }
    Ok((
        worst <= 1e-9 && worst_q1 <= 1e-9,
        format!("vs oracle {worst:.1e}, q = 1 vs one-periodic {worst_q1:.1e} (tol 1e-9)"),
    ))
}

fn fortress_closed_form() -> Check {
    let mut worst4 = 0.0f64;
    for a in [0.5, 1.0, 2.0] {
        let s = WeightScheme::TwoPeriodicEven { a: p(a), b: Param::ONE };
        let oracle = to_c64(&exact_inverse(&s, 4)?);
        let closed = FortressInverse::new(4, p(a))?.table::<C64>()?;
        worst4 = worst4.max(closed.matrix().max_abs_diff(oracle.matrix()));
    }
    let n = 8;
    let a = p(0.5);
    let g = DiamondGraph::build(n)?;
    let s = WeightScheme::TwoPeriodicEven { a, b: Param::ONE };
    let oracle = KMatrix::<C64>::assemble(&g, &s)?.invert()?;
    let closed = FortressInverse::new(n, a)?;
    let mut rng = ChaCha20Rng::seed_from_u64(8);
    let mut worst8 = 0.0f64;
    for _ in 0..50 {
        let w = g.whites()[rng.random_range(0..g.whites().len())];
        let b = g.blacks()[rng.random_range(0..g.blacks().len())];
        worst8 = worst8.max((closed.entry::<C64>(w, b)? - oracle.entry(w, b)?).norm());
    }
    Ok((
        worst4 <= 1e-8 && worst8 <= 1e-7,
        format!("n = 4 error {worst4:.1e} (tol 1e-8), n = 8 spot check {worst8:.1e} (tol 1e-7)"),
    ))
}

fn ratio<F: Field>(k: &KMatrix<F>, z: &F, w: KCoord, b: KCoord) -> Result<F> {
    Ok(k.removed_pf(w, b)? / z.clone())
}

fn boundary_lemmas() -> Check {
    let mut families_ok = true;
    for n in 1..=4usize {
        let ni = n as i32;
        for a in [0.5, 1.0, 2.0] {
            let s = WeightScheme::OnePeriodic { a: p(a) };
            let k = KMatrix::<GaussRational>::assemble(&DiamondGraph::build(n)?, &s)?;
            let z = k.partition_function()?;
            let uk = KMatrix::<GaussRational>::assemble(&DiamondGraph::build(n)?, &WeightScheme::Uniform)?;
            let uz = uk.partition_function()?;
            for i in 0..ni {
                for j in 0..ni {
                    let (w, b) = (KCoord::new(2 * i + 1, 0), KCoord::new(0, 2 * j + 1));
                    let one: GaussRational = OnePeriodicBgf { a: p(a) }.coeff(n, i as i64, j as i64);
                    families_ok &= one == ratio(&k, &z, w, b)?;
                    let uni: GaussRational = OnePeriodicBgf::uniform().coeff(n, i as i64, j as i64);
                    families_ok &= uni == ratio(&uk, &uz, w, b)?;
                }
            }
        }
        for (a, q) in [(0.5, 0.8), (1.0, 0.9), (2.0, 0.95)] {
            let sd = WeightScheme::QDiag { a: p(a), q: p(q) };
            let sc = WeightScheme::QCol { a: p(a), q: p(q) };
            let kd = KMatrix::<GaussRational>::assemble(&DiamondGraph::build(n)?, &sd)?;
            let kc = KMatrix::<GaussRational>::assemble(&DiamondGraph::build(n)?, &sc)?;
            let (zd, zc) = (kd.partition_function()?, kc.partition_function()?);
            for i in 0..ni {
                for j in 0..ni {
                    let w = KCoord::new(2 * ni - 2 * i - 1, 2 * ni);
                    let b = KCoord::new(2 * ni, 2 * ni - 1 - 2 * j);
                    let d: GaussRational = qdiag_bgf_coeff(n, i as i64, j as i64, p(a), p(q), ProductBound::Exclusive);
                    families_ok &= d == ratio(&kd, &zd, w, b)?;
                    let c: GaussRational = qcol_boundary_ratio(n, i as i64, j as i64, p(a), p(q));
                    families_ok &= c == ratio(&kc, &zc, w, b)?;
                }
            }
        }
    }
    for a in [0.5, 1.0, 2.0] {
        let n = 4;
        let inv = exact_inverse(&WeightScheme::TwoPeriodicEven { a: p(a), b: Param::ONE }, n)?;
        let t: Vec<GaussRational> = fortress_boundary_table(n, p(a), Param::ONE, FortressRoute::Recurrence)?;
        for i in 0..n {
            for j in 0..n {
                let (w, b) = (KCoord::new(2 * i as i32 + 1, 0), KCoord::new(0, 2 * j as i32 + 1));
                families_ok &= t[i * n + j] == inv.entry(w, b)?;
            }
        }
    }
    let one_periodic_rec = [0.5, 1.0, 2.0]
        .iter()
        .map(|&a| OnePeriodicBgf { a: p(a) }.recurrence_residual::<GaussRational>(8))
        .fold(0.0, f64::max);
    let mut general_rec = 0.0f64;
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for n in 1..=8 {
        let fw = FaceWeights::<C64>::from_fn(n, |_, _| std::array::from_fn(|_| C64::new(rng.random_range(0.2..3.0), 0.0)))?;
        let ratios = boundary_ratios(&fw)?;
        let k = KMatrix::from_faces(&fw)?;
        let z = k.partition_function()?;
        for i in 0..n {
            for j in 0..n {
                let (w, b) = (KCoord::new(2 * i as i32 + 1, 0), KCoord::new(0, 2 * j as i32 + 1));
                let want = ratio(&k, &z, w, b)?;
                general_rec = general_rec.max((ratios[i * n + j] - want).norm() / want.norm().max(1e-300));
            }
        }
    }
    Ok((
        families_ok && one_periodic_rec == 0.0 && general_rec <= 1e-10,
        format!(
            "families exact {families_ok}, one-periodic recurrence residual {one_periodic_rec:.1e}, \
             general recurrence relative error {general_rec:.1e} for n <= 8"
        ),
    ))
}

fn eigen_system() -> Check {
    let mut rng = ChaCha20Rng::seed_from_u64(6);
    let mut eig = 0.0f64;
    let mut half = 0.0f64;
    for _ in 0..100 {
        let [a, b, x, y] = std::array::from_fn(|_| rng.random_range(0.1..3.0));
        eig = eig.max(fortress_recurrence_matrices(p(a), p(b), p(x), p(y))?.residual());
        for r in 1..=4 {
            half = half.max(alpha_half_power_residual(a, b, r));
        }
    }
    Ok((
        eig <= 1e-10 && half <= 1e-12,
        format!("normalized eigen residual {eig:.1e} (tol 1e-10), half-power coefficients {half:.1e} (tol 1e-12)"),
    ))
}

fn relations() -> Check {
    let mut worst = 0.0f64;
    let schemes = [
        WeightScheme::Uniform,
        WeightScheme::OnePeriodic { a: p(0.5) },
        WeightScheme::OnePeriodic { a: p(2.0) },
        WeightScheme::QCol { a: p(1.0), q: p(0.9) },
        WeightScheme::QDiag { a: p(0.5), q: p(0.8) },
        WeightScheme::TwoPeriodicEven { a: p(0.5), b: Param::ONE },
        WeightScheme::TwoPeriodicEven { a: p(2.0), b: Param::ONE },
    ];
    for s in &schemes {
        for n in 1..=4 {
            if !crate::closed_form::has_closed_form(s, n) || s.validate(n).is_err() {
                continue;
            }
            let k = KMatrix::<C64>::assemble(&DiamondGraph::build(n)?, s)?;
            let inv = closed_form_inverse::<C64>(s, n)?;
            worst = worst.max(moved_vertex_relations_check(&k, &inv)?.max());
        }
    }
    Ok((worst <= 1e-9, format!("largest residual {worst:.1e} (tol 1e-9)")))
}

/// Upper-tail chi-square p-value of samples against enumeration.
pub fn chi_square_p_value(s: &WeightScheme, n: usize, count: usize, seed: u64) -> Result<f64> {
    let g = DiamondGraph::build(n)?;
    let list = enumerate_matchings::<C64>(&g, s)?;
    let total: f64 = list.weights.iter().map(|w| w.norm()).sum();
    let mut keyed: Vec<(Vec<crate::lattice::Edge>, f64)> = list
        .matchings
        .iter()
        .zip(&list.weights)
        .map(|(m, w)| {
            let mut m = m.clone();
            m.sort();
            (m, w.norm() / total)
        })
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    let mut observed = vec![0usize; keyed.len()];
    for t in Shuffler::new(s, n)?.sample_many(count, seed)? {
        let idx = keyed
            .binary_search_by(|(m, _)| m.as_slice().cmp(t.edges()))
            .map_err(|_| AztecError::Unsupported("sample is not a matching".into()))?;
        observed[idx] += 1;
    }
    let stat: f64 = observed
        .iter()
        .zip(&keyed)
        .map(|(&o, (_, pr))| {
            let e = count as f64 * pr;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let dist = ChiSquared::new((keyed.len() - 1) as f64).map_err(|e| AztecError::Unsupported(e.to_string()))?;
    Ok(1.0 - dist.cdf(stat))
}

fn sampler_distribution() -> Check {
    let schemes = [
        WeightScheme::Uniform,
        WeightScheme::OnePeriodic { a: p(2.0) },
        WeightScheme::QCol { a: p(1.0), q: p(0.9) },
        WeightScheme::TwoPeriodicEven { a: p(0.5), b: Param::ONE },
    ];
    let mut min_p = 1.0f64;
    for s in &schemes {
        for n in 1..=2 {
            if s.validate(n).is_ok() {
                min_p = min_p.min(chi_square_p_value(s, n, 40_000, 2024)?);
            }
        }
    }
    let n = 8;
    let s = WeightScheme::Uniform;
    let k = KMatrix::<C64>::assemble(&DiamondGraph::build(n)?, &s)?;
    let inv = closed_form_inverse::<C64>(&s, n)?;
    let field = EdgeProcess::new(&k, &inv)?.density_field()?;
    let samples = Shuffler::new(&s, n)?.sample_many(20_000, 2025)?;
    let mut worst_z = 0.0f64;
    for (e, pr) in field.iter() {
        let f = empirical_edge_freq(&samples, *e)?;
        let sigma = (pr.re * (1.0 - pr.re) / f.count as f64).sqrt();
        let dev = (f.frequency - pr.re).abs();
        let z = if sigma > 0.0 { dev / sigma } else if dev == 0.0 { 0.0 } else { f64::INFINITY };
        worst_z = worst_z.max(z);
    }
    Ok((
        min_p > 0.001 && worst_z <= 4.0,
        format!("smallest chi-square p-value {min_p:.3} (need > 0.001), largest n = 8 deviation {worst_z:.2} sigma (tol 4)"),
    ))
}

fn figures(opts: &VerifyOptions) -> Check {
    let cases = [
        ("uniform", WeightScheme::Uniform, Palette::Four),
        ("one-periodic-a0.5", WeightScheme::OnePeriodic { a: p(0.5) }, Palette::Four),
        ("qvol-q0.99", WeightScheme::QCol { a: p(1.0), q: p(0.99) }, Palette::Four),
        ("two-periodic-a0.5", WeightScheme::TwoPeriodicEven { a: p(0.5), b: Param::ONE }, Palette::Eight),
    ];
    let n = 200;
    let mut slowest = 0.0f64;
    let mut ok = true;
    for (name, s, palette) in cases {
        let start = Instant::now();
        let t = Shuffler::new(&s, n)?.sample_indexed(7, 0)?;
        let svg = render_tiling(&t, &RenderSpec { palette, scale: 4.0 });
        let secs = start.elapsed().as_secs_f64();
        slowest = slowest.max(secs);
        ok &= secs < 30.0 && svg.matches("<rect").count() == n * (n + 1);
        if let Some(dir) = &opts.figures_dir {
            std::fs::create_dir_all(dir).map_err(|e| AztecError::Unsupported(e.to_string()))?;
            std::fs::write(dir.join(format!("{name}.svg")), svg).map_err(|e| AztecError::Unsupported(e.to_string()))?;
        }
    }
    Ok((ok, format!("four renders, slowest {slowest:.2} s (tol 30 s each); visual checks are manual")))
}
