use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;

/// Which p-norm a vector is measured in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum NormTag {
    #[default]
    L1,
    L2,
    Linf,
}

impl NormTag {
    /// The norm of the dual space: L1 and Linf swap, L2 is self-dual.
    pub fn dual(self) -> NormTag {
        match self {
            NormTag::L1 => NormTag::Linf,
            NormTag::L2 => NormTag::L2,
            NormTag::Linf => NormTag::L1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NormTag::L1 => "l1",
            NormTag::L2 => "l2",
            NormTag::Linf => "linf",
        }
    }
}

impl fmt::Display for NormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for NormTag {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "l1" => Ok(NormTag::L1),
            "l2" => Ok(NormTag::L2),
            "linf" | "l_inf" | "inf" => Ok(NormTag::Linf),
            other => Err(crate::Error::Domain(format!(
                "unknown norm tag `{other}` (expected l1, l2 or linf)"
            ))),
        }
    }
}

/// A value that is either exact or binary64. Modes never mix implicitly.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Exact(Rational),
    Float(f64),
}

impl Scalar {
    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Explicit, logged conversion to float.
    pub fn to_float(&self) -> f64 {
        match self {
            Scalar::Exact(r) => {
                let f = r.to_f64();
                log::debug!("exact -> float conversion: {r} ~ {f:e}");
                f
            }
            Scalar::Float(f) => *f,
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "Exact({r})"),
            Scalar::Float(x) => write!(f, "Float({x:e})"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{x:e}"),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Exact(r)
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Float(x)
    }
}

/// Arithmetic needed by the generic vector/matrix carriers.
///
/// Implemented for [`Rational`] (exact mode) and `f64` (float mode).
pub trait Entry: Clone + PartialEq + PartialOrd + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn to_scalar(&self) -> Scalar;
}

impl Entry for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn magnitude(&self) -> Self {
        self.abs()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Exact(self.clone())
    }
}

impl Entry for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn magnitude(&self) -> Self {
        self.abs()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Float(*self)
    }
}
