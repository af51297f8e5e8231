use std::ops::Range;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Entry, NormTag, Rational, Scalar};
use crate::error::{Error, Result};

/// A truncated sequence-space element: finitely many coordinates plus the
/// norm it is measured in.
///
/// Serialises as a bare JSON array; the norm tag is not part of the wire
/// form and defaults to L1 on the way back in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<T> {
    coords: Vec<T>,
    norm_tag: NormTag,
}

pub type ExactVector = Vector<Rational>;
pub type FloatVector = Vector<f64>;

impl<T: Entry> Vector<T> {
    /// Panics on an empty coordinate list: dimensions are positive.
    pub fn new(coords: Vec<T>, norm_tag: NormTag) -> Self {
        assert!(!coords.is_empty(), "vector dimension must be positive");
        Vector { coords, norm_tag }
    }

    pub fn zeros(dim: usize, norm_tag: NormTag) -> Self {
        Vector::new(vec![T::zero(); dim], norm_tag)
    }

    /// The `index`-th unit coordinate vector `e_index` of dimension `dim`.
    pub fn unit(dim: usize, index: usize, norm_tag: NormTag) -> Self {
        assert!(index < dim, "unit index {index} out of range for dim {dim}");
        let mut v = Vector::zeros(dim, norm_tag);
        v.coords[index] = T::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm_tag(&self) -> NormTag {
        self.norm_tag
    }

    pub fn with_tag(mut self, tag: NormTag) -> Self {
        self.norm_tag = tag;
        self
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &T {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, value: T) {
        self.coords[i] = value;
    }

    /// `v↾[a,b)`: zero every coordinate outside `[a, b)`. Out-of-range
    /// bounds are clamped, so the operation is total.
    pub fn restrict(&self, range: Range<usize>) -> Self {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| if range.contains(&i) { c.clone() } else { T::zero() })
            .collect();
        Vector {
            coords,
            norm_tag: self.norm_tag,
        }
    }

    /// Indices of nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// One past the largest nonzero coordinate (0 for the zero vector).
    pub fn support_end(&self) -> usize {
        self.coords
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |i| i + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Entry::is_zero)
    }

    /// Euclidean pairing `Σ a_i b_i`; functionals act on vectors this way.
    pub fn dot(&self, other: &Self) -> T {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in pairing");
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(T::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in sum");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.plus(b)).collect();
        Vector {
            coords,
            norm_tag: self.norm_tag,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in difference");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.minus(b)).collect();
        Vector {
            coords,
            norm_tag: self.norm_tag,
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        Vector {
            coords: self.coords.iter().map(|c| c.times(factor)).collect(),
            norm_tag: self.norm_tag,
        }
    }

    /// `self + factor * other`.
    pub fn axpy(&self, factor: &T, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in axpy");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.plus(&factor.times(b)))
            .collect();
        Vector {
            coords,
            norm_tag: self.norm_tag,
        }
    }

    /// Pad with zeros (or truncate) to `dim` coordinates.
    pub fn resized(&self, dim: usize) -> Self {
        let mut coords = self.coords.clone();
        coords.resize(dim, T::zero());
        Vector::new(coords, self.norm_tag)
    }

    pub fn l1(&self) -> T {
        self.coords.iter().fold(T::zero(), |acc, c| acc.plus(&c.magnitude()))
    }

    pub fn linf(&self) -> T {
        self.coords.iter().fold(T::zero(), |acc, c| {
            let m = c.magnitude();
            if m > acc {
                m
            } else {
                acc
            }
        })
    }

    pub fn l2_squared(&self) -> T {
        self.coords.iter().fold(T::zero(), |acc, c| acc.plus(&c.times(c)))
    }
}

impl ExactVector {
    pub fn from_ints(values: &[i64], tag: NormTag) -> Self {
        Vector::new(values.iter().map(|&v| Rational::integer(v)).collect(), tag)
    }

    /// The exact norm under `tag`. L2 is not rational in general, so an exact
    /// L2 request is a mode error; use [`Vector::norm_squared`] instead.
    pub fn norm(&self, tag: NormTag) -> Result<Scalar> {
        match tag {
            NormTag::L1 => Ok(Scalar::Exact(self.l1())),
            NormTag::Linf => Ok(Scalar::Exact(self.linf())),
            NormTag::L2 => Err(Error::Mode(
                "exact L2 norm is irrational in general; request the squared norm".into(),
            )),
        }
    }

    /// Exact `‖v‖²` under L2; for L1/Linf the square of the exact norm.
    pub fn norm_squared(&self, tag: NormTag) -> Rational {
        match tag {
            NormTag::L2 => self.l2_squared(),
            NormTag::L1 => {
                let n = self.l1();
                &n * &n
            }
            NormTag::Linf => {
                let n = self.linf();
                &n * &n
            }
        }
    }

    /// Exact where possible: L2 is exact only when the squared norm is a
    /// rational square, otherwise a float.
    pub fn norm_best_effort(&self, tag: NormTag) -> Scalar {
        match tag {
            NormTag::L2 => {
                let sq = self.l2_squared();
                match sq.sqrt_exact() {
                    Some(r) => Scalar::Exact(r),
                    None => Scalar::Float(sq.to_f64().sqrt()),
                }
            }
            _ => self.norm(tag).expect("L1/Linf norms are exact"),
        }
    }

    /// Explicit, logged cast into float mode.
    pub fn to_float(&self) -> FloatVector {
        log::debug!("exact -> float conversion of a {}-vector", self.dim());
        Vector {
            coords: self.coords.iter().map(Rational::to_f64).collect(),
            norm_tag: self.norm_tag,
        }
    }
}

impl FloatVector {
    pub fn norm(&self, tag: NormTag) -> f64 {
        match tag {
            NormTag::L1 => self.l1(),
            NormTag::L2 => self.l2(),
            NormTag::Linf => self.linf(),
        }
    }

    /// Overflow-safe Euclidean norm.
    pub fn l2(&self) -> f64 {
        let scale = self.linf();
        if scale == 0.0 {
            return 0.0;
        }
        scale * self.coords.iter().map(|c| (c / scale) * (c / scale)).sum::<f64>().sqrt()
    }
}

impl<T: Serialize> Serialize for Vector<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}

impl<'de, T: Deserialize<'de> + Entry> Deserialize<'de> for Vector<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<T>::deserialize(deserializer)?;
        if coords.is_empty() {
            return Err(serde::de::Error::custom("vector dimension must be positive"));
        }
        Ok(Vector {
            coords,
            norm_tag: NormTag::L1,
        })
    }
}
