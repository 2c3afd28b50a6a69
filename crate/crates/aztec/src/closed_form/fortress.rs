//! `K^{-1}` for two-periodic weights with `b = 1` and `n = 4m`.
//!
//! The generating function is assembled from `d`, `d_sides`, the boundary
//! entries of all four corners and the factors `c(w1, w2) c(b1, b2)` with
//! `c(u1, u2) = 2(1+a^2) + a (u1^2 + u1^-2)(u2^2 + u2^-2)`. After clearing
//! negative powers the quotient is a power series and the entry is read off
//! as a coefficient.

use crate::boundary::{fortress_boundary_table, FortressRoute};
use crate::error::{AztecError, Result};
use crate::lattice::{classify, DiamondGraph, KCoord};
use crate::oracle::InverseKasteleyn;
use crate::scalar::{Field, GaussRational, Param};
use crate::series::{geometric_sum, quotient_coeff, Poly, Reciprocal};

const W1: usize = 0;
const W2: usize = 1;
const B1: usize = 2;
const B2: usize = 3;

fn mono<F: Field>(e: [i32; 4]) -> Poly<F> {
    Poly::term(e, F::one())
}

fn var<F: Field>(v: usize, p: i32) -> Poly<F> {
    Poly::var(v, p)
}

fn konst<F: Field>(c: F) -> Poly<F> {
    Poly::constant(c)
}

struct Builder<F> {
    n: usize,
    a: F,
}

impl<F: Field> Builder<F> {
    fn c_boundary(&self, u1: usize, u2: usize) -> Poly<F> {
        let two = F::from_int(2);
        konst(two * (F::one() + self.a.clone() * self.a.clone()))
            + ((var::<F>(u1, 2) + var(u1, -2)) * (var::<F>(u2, 2) + var(u2, -2))).scale(&self.a)
    }

    /// `s_{i,0}(u1, u2)`.
    fn s_low(&self, i: usize, u1: usize, u2: usize) -> Poly<F> {
        let a = &self.a;
        let ia = F::imag() * a.clone();
        let mut e1 = [0; 4];
        e1[u1] = -2;
        e1[u2] = -2;
        let mut e2 = [0; 4];
        e2[u1] = 2;
        e2[u2] = -2;
        (mono::<F>(e1) + mono(e2)).scale(&-a.clone()) - var::<F>(u1, 2).scale(&ia) + var::<F>(u1, -2).scale(&ia)
            - konst(F::from_int(2) * a.powi(2 * i as i32))
    }

    /// `s_{i,2n}(u1, u2)`.
    fn s_high(&self, i: usize, u1: usize, u2: usize) -> Poly<F> {
        let a = &self.a;
        let ia = F::imag() * a.clone();
        let mut e1 = [0; 4];
        e1[u1] = 2;
        e1[u2] = 2;
        let mut e2 = [0; 4];
        e2[u1] = -2;
        e2[u2] = 2;
        let body = (mono::<F>(e1) + mono(e2)).scale(&-a.clone()) + var::<F>(u1, 2).scale(&ia)
            - var::<F>(u1, -2).scale(&ia)
            - konst(F::from_int(2) * a.powi(2 * (1 - i as i32)));
        body * var(u2, 2 * self.n as i32)
    }

    fn s(&self, i: usize, high: bool, u1: usize, u2: usize) -> Poly<F> {
        if high {
            self.s_high(i, u1, u2)
        } else {
            self.s_low(i, u1, u2)
        }
    }

    fn f_r(&self, t: Poly<F>) -> Poly<F> {
        geometric_sum(&t, self.n / 2)
    }

    /// `d(w, b)` times `c(b1, b2)`.
    fn d_times_cb(&self, cb: &Poly<F>) -> Poly<F> {
        let a = &self.a;
        let i = F::imag();
        let n = self.n as i32;
        let fw2 = self.f_r(mono([0, 4, 0, 4]));
        let fw1 = self.f_r(mono([4, 0, 4, 0]));
        let bulk = &fw2
            * &fw1
            * mono([1, 0, 0, 1])
            * (konst(a.clone())
                + mono([2, 0, 2, 0])
                + mono::<F>([0, 2, 0, 2]) * (Poly::one() + mono([2, 0, 2, 0]).scale(a)))
            * (var::<F>(W2, 2) + var(B1, 2) - (Poly::one() + mono([0, 2, 2, 0])).scale(&i));
        let edge = ((Poly::one() - var::<F>(W2, 2).scale(&i))
            * mono([-1, 0, 0, 1])
            * (Poly::one() + mono([0, 2, 0, 2]).scale(a))
            + (var::<F>(W2, 2) - konst(i.clone()))
                * mono([2 * n + 1, 0, 2 * n, 1])
                * (konst(a.clone()) + mono([0, 2, 0, 2])))
            * fw2;
        (bulk + edge) * cb
    }

    fn d_sides(&self) -> Poly<F> {
        let a = &self.a;
        let i = F::imag();
        let n = self.n as i32;
        let b1sq_minus_i = var::<F>(B1, 2) - konst(i.clone());
        let one_minus_ib1sq = Poly::one() - var::<F>(B1, 2).scale(&i);
        let t0 = self.s_low(0, W1, W2)
            * ((&b1sq_minus_i * &mono([1, 0, 0, 1])).scale(a) + &one_minus_ib1sq * &mono([1, 0, 0, -1]));
        let t1 = self.s_low(1, W1, W2)
            * (&b1sq_minus_i * &mono([3, 0, 2, 1]) + (&one_minus_ib1sq * &mono([3, 0, 2, -1])).scale(a));
        let t2 = self.s_high(0, W1, W2)
            * (&one_minus_ib1sq * &mono([1, 0, 0, 2 * n - 1])
                + (&b1sq_minus_i * &mono([1, 0, 0, 2 * n + 1])).scale(a));
        let t3 = self.s_high(1, W1, W2)
            * ((&one_minus_ib1sq * &mono([3, 0, 2, 2 * n - 1])).scale(a)
                + &b1sq_minus_i * &mono([3, 0, 2, 2 * n + 1]));
        t0 + t1 + t2 + t3
    }
}

/// Generating function of the order-`n` two-periodic inverse at `b = 1`,
/// built over exact Gaussian rationals for the same reason as
/// [`OnePeriodicInverse`](super::OnePeriodicInverse).
#[derive(Clone, Debug)]
pub struct FortressInverse {
    graph: DiamondGraph,
    numerator: Poly<GaussRational>,
    recip_w: Reciprocal<GaussRational>,
    recip_b: Reciprocal<GaussRational>,
}

impl FortressInverse {
    pub fn new(n: usize, a: Param) -> Result<Self> {
        Self::with_route(n, a, FortressRoute::Recurrence)
    }

    pub fn with_route(n: usize, a: Param, route: FortressRoute) -> Result<Self> {
        if n == 0 || !n.is_multiple_of(4) {
            return Err(AztecError::NotMultipleOfFour(n));
        }
        let graph = DiamondGraph::build(n)?;
        let (numerator, recip_w, recip_b) = build::<GaussRational>(n, a, route)?;
        Ok(FortressInverse { graph, numerator, recip_w, recip_b })
    }

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

fn build<F: Field>(n: usize, a: Param, route: FortressRoute) -> Result<Parts<F>> {
        let la: Vec<F> = fortress_boundary_table(n, a, Param::ONE, route)?;
        let l1: Vec<F> = fortress_boundary_table(n, Param::ONE, a, route)?;
        let b = Builder { n, a: F::from_param(a) };
        let ni = n as i32;
        let at = |t: &[F], i: i32, j: i32| t[i as usize * n + j as usize].clone();
        let corner = |x1: i32, k: i32, l: i32, y2: i32| -> F {
            match (k == 0, l == 0) {
                (true, true) => at(&la, (x1 - 1) / 2, (y2 - 1) / 2),
                (true, false) => F::i_pow((2 * ni - 1 - x1 + y2) as i64) * at(&l1, ni - (x1 + 1) / 2, (y2 - 1) / 2),
                (false, true) => F::i_pow((2 * ni - 1 + x1 - y2) as i64) * at(&l1, (x1 - 1) / 2, ni - (y2 + 1) / 2),
                (false, false) => at(&la, ni - (x1 + 1) / 2, ni - (y2 + 1) / 2),
            }
        };
        let mut sum = Poly::zero();
        for k in [0, 2 * ni] {
            for l in [0, 2 * ni] {
                for x1 in (1..2 * ni).step_by(2) {
                    let pi = classify(KCoord::new(x1, k))?.parity as usize;
                    let sw = b.s(pi, k != 0, W1, W2);
                    for y2 in (1..2 * ni).step_by(2) {
                        let pj = classify(KCoord::new(l, y2))?.parity as usize;
                        let sb = b.s(pj, l != 0, B2, B1);
                        let kb = corner(x1, k, l, y2);
                        sum = sum + (&sw * &sb).shift([x1, 0, 0, y2]).scale(&kb);
                    }
                }
            }
        }
        let cw = b.c_boundary(W1, W2);
        let cb = b.c_boundary(B1, B2);
        let numerator = (b.d_times_cb(&cb) - b.d_sides() * b.f_r(mono([4, 0, 4, 0])) + sum).shift([2, 2, 2, 2]);
        if numerator.min_exponents().is_some_and(|m| m.iter().any(|e| *e < 0)) {
            return Err(AztecError::Unsupported("numerator is not a polynomial".into()));
        }
        let upper = 2 * ni;
        let recip_w = Reciprocal::new(&cw.shift([2, 2, 0, 0]), [W1, W2], [upper, upper])?;
        let recip_b = Reciprocal::new(&cb.shift([0, 0, 2, 2]), [B1, B2], [upper, upper])?;
        Ok((numerator, recip_w, recip_b))
}

pub fn fortress_entry<F: Field>(n: usize, a: Param, x: KCoord, y: KCoord) -> Result<F> {
    FortressInverse::new(n, a)?.entry(x, y)
}
