//! Scalar backends.
//!
//! Every algebraic routine in the crate is generic over [`Field`], which is
//! implemented for double precision complex numbers and for exact Gaussian
//! rationals (rationals with `i` adjoined).

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AztecError, Result};

pub type C64 = Complex<f64>;
pub type GaussRational = Complex<BigRational>;

/// A positive real model parameter (`a`, `b` or `q`).
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Param(f64);

impl Param {
    pub fn new(value: f64) -> Result<Self> {
        Self::named("parameter", value)
    }

    pub fn named(name: &'static str, value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Param(value))
        } else {
            Err(AztecError::BadParameter { name, value })
        }
    }

    pub const ONE: Param = Param(1.0);

    pub fn get(self) -> f64 {
        self.0
    }

    /// The simplest rational within double precision of the value, so that
    /// `0.9` becomes `9/10` rather than its binary expansion.
    pub fn to_ratio(self) -> BigRational {
        match Ratio::<i64>::approximate_float(self.0) {
            Some(r) if (r.to_f64().unwrap_or(f64::NAN) - self.0).abs() <= 4.0 * f64::EPSILON * self.0 => {
                BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
            }
            _ => BigRational::from_float(self.0).expect("finite parameter"),
        }
    }
}

impl TryFrom<f64> for Param {
    type Error = AztecError;
    fn try_from(v: f64) -> Result<Self> {
        Param::new(v)
    }
}

impl From<Param> for f64 {
    fn from(p: Param) -> f64 {
        p.0
    }
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic needed by the determinant, inversion and series code.
pub trait Field: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    /// Exact backends never round, so pivots only need to be nonzero.
    const EXACT: bool;

    fn from_param(p: Param) -> Self;
    fn from_int(v: i64) -> Self;
    fn imag() -> Self;
    /// A cheap magnitude used for pivot selection and tolerance checks.
    fn size(&self) -> f64;
    fn to_c64(&self) -> C64;
    fn conj(&self) -> Self;
    fn from_c64(z: C64) -> Self;
    /// Rounds an exact value into this field.
    fn from_gauss(z: &GaussRational) -> Self;

    /// Magnitude of a value lying on the real or imaginary axis, as a real
    /// element of the field. Kasteleyn determinants always have this form.
    fn axis_abs(&self) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn powi(&self, e: i32) -> Self {
        let mut base = if e < 0 { Self::one() / self.clone() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        acc
    }

    /// `i^k` for any integer `k`.
    fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::imag(),
            2 => -Self::one(),
            _ => -Self::imag(),
        }
    }
}

impl Field for C64 {
    const EXACT: bool = false;

    fn from_param(p: Param) -> Self {
        C64::new(p.get(), 0.0)
    }
    fn from_int(v: i64) -> Self {
        C64::new(v as f64, 0.0)
    }
    fn imag() -> Self {
        C64::new(0.0, 1.0)
    }
    fn size(&self) -> f64 {
        self.norm()
    }
    fn to_c64(&self) -> C64 {
        *self
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn from_c64(z: C64) -> Self {
        z
    }
    fn from_gauss(z: &GaussRational) -> Self {
        z.to_c64()
    }
    fn axis_abs(&self) -> Self {
        C64::new(self.norm(), 0.0)
    }
}

impl Field for GaussRational {
    const EXACT: bool = true;

    fn from_param(p: Param) -> Self {
        Complex::new(p.to_ratio(), BigRational::zero())
    }
    fn from_int(v: i64) -> Self {
        Complex::new(BigRational::from_integer(v.into()), BigRational::zero())
    }
    fn imag() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
    fn size(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::INFINITY);
        let im = self.im.to_f64().unwrap_or(f64::INFINITY);
        re.hypot(im)
    }
    fn to_c64(&self) -> C64 {
        C64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn from_c64(z: C64) -> Self {
        let conv = |x: f64| BigRational::from_float(x).unwrap_or_else(BigRational::zero);
        Complex::new(conv(z.re), conv(z.im))
    }
    fn from_gauss(z: &GaussRational) -> Self {
        z.clone()
    }
    fn axis_abs(&self) -> Self {
        Complex::new(self.re.abs() + self.im.abs(), BigRational::zero())
    }
}

/// Which backend a computation should run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Precision {
    Double,
    Exact,
}

impl Precision {
    /// Environment variable consulted by [`Precision::from_env`].
    pub const ENV_VAR: &'static str = "AZTEC_PRECISION";

    /// Reads `AZTEC_PRECISION` (`double` or `exact`), defaulting to double.
    pub fn from_env() -> Self {
        match std::env::var(Self::ENV_VAR).as_deref() {
            Ok("exact") => Precision::Exact,
            _ => Precision::Double,
        }
    }
}

impl std::str::FromStr for Precision {
    type Err = AztecError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "double" => Ok(Precision::Double),
            "exact" => Ok(Precision::Exact),
            other => Err(AztecError::Unsupported(format!("unknown precision `{other}`"))),
        }
    }
}
