use serde::Serialize;

use crate::linalg::{ExactVector, NormTag, Rational};

/// The coordinate biorthogonal system `{e_α; e*_α}` on `[0, n)`.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct BiorthSystem {
    pub n: usize,
}

impl BiorthSystem {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "biorthogonal system needs a nonempty index range");
        BiorthSystem { n }
    }

    pub fn vector(&self, alpha: usize) -> ExactVector {
        ExactVector::unit(self.n, alpha, NormTag::L1)
    }

    pub fn functional(&self, alpha: usize) -> ExactVector {
        ExactVector::unit(self.n, alpha, NormTag::Linf)
    }

    /// `⟨f_α, x⟩`.
    pub fn pair(&self, alpha: usize, x: &ExactVector) -> Rational {
        x.get(alpha).clone()
    }

    /// `supp(x) = {α : ⟨f_α, x⟩ ≠ 0}`.
    pub fn support(&self, x: &ExactVector) -> Vec<usize> {
        (0..self.n.min(x.dim())).filter(|&a| !self.pair(a, x).is_zero()).collect()
    }

    /// `⟨f_α, x_β⟩ = δ_{αβ}` for all pairs.
    pub fn is_biorthogonal(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                let p = self.functional(a).dot(&self.vector(b));
                if a == b {
                    p == Rational::one()
                } else {
                    p.is_zero()
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_system_is_biorthogonal() {
        assert!(BiorthSystem::new(5).is_biorthogonal());
        let sys = BiorthSystem::new(4);
        let x = ExactVector::from_ints(&[0, 3, 0, -1], NormTag::L1);
        assert_eq!(sys.support(&x), vec![1, 3]);
    }
}
