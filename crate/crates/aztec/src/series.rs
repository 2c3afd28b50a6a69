//! Sparse Laurent polynomials in up to four variables and truncated
//! power-series reciprocals.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AztecError, Result};
use crate::scalar::Field;

pub type Exponent = [i32; 4];

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    terms: BTreeMap<Exponent, F>,
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: F) -> Self {
        Self::term([0; 4], c)
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn term(e: Exponent, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// The monomial `x_var^power`.
    pub fn var(var: usize, power: i32) -> Self {
        let mut e = [0; 4];
        e[var] = power;
        Self::term(e, F::one())
    }

    pub fn add_term(&mut self, e: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(F::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: &Exponent) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut p = Self::zero();
        for (e, v) in &self.terms {
            p.add_term(*e, v.clone() * c.clone());
        }
        p
    }

    /// Multiplies by the monomial with exponent `shift`.
    pub fn shift(&self, shift: Exponent) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| ([e[0] + shift[0], e[1] + shift[1], e[2] + shift[2], e[3] + shift[3]], v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum exponent, or `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |m, e| [m[0].min(e[0]), m[1].min(e[1]), m[2].min(e[2]), m[3].min(e[3])]))
    }

    /// Keeps terms with `0 <= e[i] <= upper[i]` in every variable.
    pub fn truncate(&self, upper: Exponent) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| (0..4).all(|i| e[i] >= 0 && e[i] <= upper[i]))
                .map(|(e, v)| (*e, v.clone()))
                .collect(),
        }
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(Field::size).fold(0.0, f64::max)
    }

    /// Evaluates with the given values for all four variables.
    pub fn eval(&self, x: &[F; 4]) -> F {
        self.terms.iter().fold(F::zero(), |acc, (e, v)| {
            let m = (0..4).fold(v.clone(), |m, i| if e[i] == 0 { m } else { m * x[i].powi(e[i]) });
            acc + m
        })
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let mut p = self.clone();
        for (e, v) in &rhs.terms {
            p.add_term(*e, v.clone());
        }
        p
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let mut p = self.clone();
        for (e, v) in &rhs.terms {
            p.add_term(*e, -v.clone());
        }
        p
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        let mut p = Poly::zero();
        for (e1, v1) in &self.terms {
            for (e2, v2) in &rhs.terms {
                p.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]], v1.clone() * v2.clone());
            }
        }
        p
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(&-F::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
        impl<F: Field> $tr<&Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &Poly<F>) -> Poly<F> {
                (&self).$m(rhs)
            }
        }
        impl<F: Field> $tr<Poly<F>> for &Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

/// `1 + t + ... + t^{n-1}`.
pub fn geometric_sum<F: Field>(t: &Poly<F>, n: usize) -> Poly<F> {
    let mut acc = Poly::zero();
    let mut power = Poly::one();
    for _ in 0..n {
        acc = &acc + &power;
        power = &power * t;
    }
    acc
}

/// Coefficients of `1/D` as a power series in two of the variables, on the
/// box `0 <= e <= upper`. `D` must involve only those two variables, have
/// non-negative exponents and a nonzero constant term; the result is then
/// exact on the whole box.
#[derive(Clone, Debug)]
pub struct Reciprocal<F> {
    vars: [usize; 2],
    upper: [i32; 2],
    coeffs: Vec<F>,
}

impl<F: Field> Reciprocal<F> {
    pub fn new(d: &Poly<F>, vars: [usize; 2], upper: [i32; 2]) -> Result<Self> {
        let mut lower = Vec::new();
        let mut d0 = None;
        for (e, v) in d.terms() {
            if (0..4).any(|i| !vars.contains(&i) && e[i] != 0) || e[vars[0]] < 0 || e[vars[1]] < 0 {
                return Err(AztecError::Unsupported("denominator is not a power series in the chosen variables".into()));
            }
            let (i, j) = (e[vars[0]], e[vars[1]]);
            if i == 0 && j == 0 {
                d0 = Some(v.clone());
            } else {
                lower.push((i, j, v.clone()));
            }
        }
        let d0 = d0.ok_or_else(|| AztecError::Singular { context: "series denominator has no constant term".into() })?;
        let inv0 = F::one() / d0;
        let width = (upper[1] + 1) as usize;
        let mut coeffs = vec![F::zero(); (upper[0] + 1) as usize * width];
        for i in 0..=upper[0] {
            for j in 0..=upper[1] {
                let mut acc = if i == 0 && j == 0 { F::one() } else { F::zero() };
                for (di, dj, dv) in &lower {
                    let (si, sj) = (i - di, j - dj);
                    if si >= 0 && sj >= 0 {
                        let prev = &coeffs[si as usize * width + sj as usize];
                        if !prev.is_zero() {
                            acc = acc - dv.clone() * prev.clone();
                        }
                    }
                }
                coeffs[i as usize * width + j as usize] = acc * inv0.clone();
            }
        }
        Ok(Reciprocal { vars, upper, coeffs })
    }

    /// Coefficient of `u^i v^j`; zero outside the non-negative quadrant.
    pub fn get(&self, i: i32, j: i32) -> F {
        if i < 0 || j < 0 {
            return F::zero();
        }
        assert!(i <= self.upper[0] && j <= self.upper[1], "coefficient outside the computed box");
        self.coeffs[i as usize * (self.upper[1] + 1) as usize + j as usize].clone()
    }

    pub fn vars(&self) -> [usize; 2] {
        self.vars
    }
}

/// Coefficient of `x^target` in `num / (dw * db)` where `1/dw` and `1/db`
/// are given as reciprocals in disjoint pairs of variables.
pub fn quotient_coeff<F: Field>(num: &Poly<F>, rw: &Reciprocal<F>, rb: &Reciprocal<F>, target: Exponent) -> F {
    let [w0, w1] = rw.vars();
    let [b0, b1] = rb.vars();
    num.terms().fold(F::zero(), |acc, (e, v)| {
        let a = rw.get(target[w0] - e[w0], target[w1] - e[w1]);
        if a.is_zero() {
            return acc;
        }
        let b = rb.get(target[b0] - e[b0], target[b1] - e[b1]);
        if b.is_zero() {
            return acc;
        }
        acc + v.clone() * a * b
    })
}
