//! `K^{-1}` for uniform and one-periodic weights by coefficient extraction.
//!
//! `K^{-1}(x, y)` is the coefficient of `w1^x1 w2^x2 b1^y1 b2^y2` in
//! `G_n = N(w, b) / (C(w1, w2) C(b1, b2))` with
//! `C(r1, r2) = 1 + r1^2 r2^2 + i a (r1^2 + r2^2)`.

use crate::error::{AztecError, Result};
use crate::lattice::{DiamondGraph, KCoord};
use crate::oracle::InverseKasteleyn;
use crate::scalar::{Field, GaussRational, Param};
use crate::series::{geometric_sum, quotient_coeff, Poly, Reciprocal};

const W1: usize = 0;
const W2: usize = 1;
const B1: usize = 2;
const B2: usize = 3;

fn v<F: Field>(var: usize, p: i32) -> Poly<F> {
    Poly::var(var, p)
}

fn c<F: Field>(x: F) -> Poly<F> {
    Poly::constant(x)
}

/// `F_n(w, b, a) = -i a/(1+a^2) f_n((1 + i a b)(1 + i a w)/(1+a^2))` with
/// `f_n(t) = 1 + t + ... + t^{n-1}`.
fn big_f<F: Field>(n: usize, w: &Poly<F>, b: &Poly<F>, a: &F) -> Poly<F> {
    let s = F::one() / (F::one() + a.clone() * a.clone());
    let ia = F::imag() * a.clone();
    let t = (Poly::one() + b.scale(&ia)) * (Poly::one() + w.scale(&ia));
    geometric_sum(&t.scale(&s), n).scale(&(-ia * s))
}

/// Generating function of the order-`n` one-periodic inverse, ready for
/// repeated coefficient extraction.
///
/// Coefficients of `1 / C` grow geometrically and cancel in the extraction,
/// so the series is always built over exact Gaussian rationals and entries
/// are rounded only on output.
#[derive(Clone, Debug)]
pub struct OnePeriodicInverse {
    n: usize,
    graph: DiamondGraph,
    numerator: Poly<GaussRational>,
    recip_w: Reciprocal<GaussRational>,
    recip_b: Reciprocal<GaussRational>,
}

impl OnePeriodicInverse {
    pub fn new(n: usize, a: Param) -> Result<Self> {
        let graph = DiamondGraph::build(n)?;
        let (numerator, recip_w, recip_b) = build::<GaussRational>(n, a)?;
        Ok(OnePeriodicInverse { n, graph, numerator, recip_w, recip_b })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(n, Param::ONE)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `K^{-1}(x, y)` for white `x` and black `y`.
    pub fn entry<F: Field>(&self, x: KCoord, y: KCoord) -> Result<F> {
        self.graph.require_white(x)?;
        self.graph.require_black(y)?;
        let v = quotient_coeff(&self.numerator, &self.recip_w, &self.recip_b, [x.x1, x.x2, y.x1, y.x2]);
        Ok(F::from_gauss(&v))
    }

    pub fn table<F: Field>(&self) -> Result<InverseKasteleyn<F>> {
        InverseKasteleyn::from_entries(&self.graph, |x, y| self.entry(x, y))
    }
}

type Parts<F> = (Poly<F>, Reciprocal<F>, Reciprocal<F>);

fn build<F: Field>(n: usize, a: Param) -> Result<Parts<F>> {
        let a = F::from_param(a);
        let ia = F::imag() * a.clone();
        let inv_a = F::one() / a.clone();
        let ni = n as i32;
        let fsum = |t: Poly<F>, m: usize| geometric_sum(&t, m);

        let w1sq = v::<F>(W1, 2);
        let b2sq = v::<F>(B2, 2);
        let f00 = big_f(n, &w1sq, &b2sq, &a) * v(W1, 1) * v(B2, 1);
        let f01 = big_f(n, &-v::<F>(W1, -2), &-b2sq.clone(), &inv_a)
            .shift([2 * ni - 1, 0, 2 * ni, 1])
            .scale(&(F::imag() * inv_a.clone()));
        let f10 = big_f(n, &-w1sq.clone(), &-v::<F>(B2, -2), &inv_a)
            .shift([1, 2 * ni, 0, 2 * ni - 1])
            .scale(&(F::imag() * inv_a.clone()));
        let f11 = big_f(n, &v(W1, -2), &v(B2, -2), &a).shift([2 * ni - 1, 2 * ni, 2 * ni, 2 * ni - 1]);

        let cw = c_poly(W1, W2, &ia);
        let cb = c_poly(B1, B2, &ia);
        let b1w1 = Poly::term([2, 0, 2, 0], F::one());
        let t1 = Poly::term([1, 2, 0, 1], F::one())
            * fsum(Poly::term([2, 0, 2, 0], F::one()), n + 1)
            * fsum(Poly::term([0, 2, 0, 2], F::one()), n)
            * &cb;
        let one_iab2 = Poly::one() + b2sq.scale(&ia);
        let ia_b2 = c(ia.clone()) + b2sq.clone();
        let t2 = (Poly::one() + w1sq.scale(&ia))
            * (&one_iab2 * &f00
                + v::<F>(B1, 2)
                    * (Poly::term([1, 0, 0, 1], F::one()) * fsum(b1w1.clone(), n) + &ia_b2 * &f01));
        let t3 = (c(ia.clone()) + w1sq)
            * v(W2, 2)
            * (Poly::term([1, 2 * ni, 2, 2 * ni + 1], F::one()) * fsum(b1w1, n)
                + &one_iab2 * &f10
                + v::<F>(B1, 2) * (&ia_b2 * &f11));
        let numerator = t1 + t2 + t3;
        if numerator.min_exponents().is_some_and(|m| m.iter().any(|e| *e < 0)) {
            return Err(AztecError::Unsupported("numerator is not a polynomial".into()));
        }
        let recip_w = Reciprocal::new(&cw, [W1, W2], [2 * ni - 1, 2 * ni])?;
        let recip_b = Reciprocal::new(&cb, [B1, B2], [2 * ni, 2 * ni - 1])?;
        Ok((numerator, recip_w, recip_b))
}

/// `1 + r1^2 r2^2 + i a (r1^2 + r2^2)`.
fn c_poly<F: Field>(r1: usize, r2: usize, ia: &F) -> Poly<F> {
        let mut p = Poly::one();
        let mut e = [0; 4];
        e[r1] = 2;
        e[r2] = 2;
        p.add_term(e, F::one());
        p = p + (v::<F>(r1, 2) + v::<F>(r2, 2)).scale(ia);
        p
}

pub fn uniform_entry<F: Field>(n: usize, x: KCoord, y: KCoord) -> Result<F> {
    OnePeriodicInverse::uniform(n)?.entry(x, y)
}

pub fn one_periodic_entry<F: Field>(n: usize, a: Param, x: KCoord, y: KCoord) -> Result<F> {
    OnePeriodicInverse::new(n, a)?.entry(x, y)
}
