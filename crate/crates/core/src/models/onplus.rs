use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::block::BlockMatrix;
use crate::chebyshev::{chebyshev_u, chebyshev_u_nat};
use crate::error::{Error, Result};
use crate::label::CorepLabel;
use crate::model::Model;

/// Free orthogonal quantum group `O_N^+`. Irreducible corepresentations are
/// indexed by naturals, with dimension growth governed by the dilated
/// Chebyshev recurrence `n_{s+1} = N n_s - n_{s-1}`.
#[derive(Clone, Debug)]
pub struct OnPlusModel {
    n: u32,
}

impl OnPlusModel {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "O_N+ needs N >= 2, got N = {n}"
            )));
        }
        Ok(OnPlusModel { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn nat(&self, label: &CorepLabel) -> Result<u32> {
        match label {
            CorepLabel::Nat(s) => Ok(*s),
            other => Err(Error::InvalidLabel {
                model: self.id(),
                reason: format!("expected a natural label, got {other}"),
            }),
        }
    }
}

/// Decomposition of the tensor product of irreducibles `s` and `t`:
/// all labels from `|s - t|` to `s + t` in steps of two.
pub fn onplus_fusion(s: u32, t: u32) -> Vec<u32> {
    let lo = s.abs_diff(t);
    let hi = s + t;
    (lo..=hi).step_by(2).collect()
}

impl Model for OnPlusModel {
    fn id(&self) -> String {
        format!("onplus(n={})", self.n)
    }

    fn family(&self) -> &'static str {
        "onplus"
    }

    fn is_kac(&self) -> bool {
        true
    }

    fn trivial_label(&self) -> CorepLabel {
        CorepLabel::Nat(0)
    }

    fn validate_label(&self, label: &CorepLabel) -> Result<()> {
        self.nat(label).map(|_| ())
    }

    fn dim(&self, label: &CorepLabel) -> Result<BigUint> {
        let s = self.nat(label)?;
        chebyshev_u_nat(s, self.n)
    }

    fn quantum_dim(&self, label: &CorepLabel) -> Result<f64> {
        let s = self.nat(label)?;
        Ok(chebyshev_u(s, self.n as f64))
    }

    fn conjugate_label(&self, label: &CorepLabel) -> Result<CorepLabel> {
        self.validate_label(label)?;
        Ok(label.clone())
    }

    fn labels_up_to(&self, s_max: f64) -> Result<Vec<CorepLabel>> {
        if !s_max.is_finite() || s_max < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "label bound must be a nonnegative finite number, got {s_max}"
            )));
        }
        Ok((0..=s_max.floor() as u32).map(CorepLabel::Nat).collect())
    }

    fn character_block(&self, _z: Complex64, label: &CorepLabel) -> Result<BlockMatrix> {
        Ok(BlockMatrix::identity(self.dim(label)?))
    }

    fn hash_block(&self, label: &CorepLabel, conjugate_block: &BlockMatrix) -> Result<BlockMatrix> {
        self.validate_label(label)?;
        Ok(conjugate_block.conjugate())
    }

    fn antipode_block(
        &self,
        label: &CorepLabel,
        conjugate_block: &BlockMatrix,
    ) -> Result<BlockMatrix> {
        self.validate_label(label)?;
        Ok(conjugate_block.transpose())
    }

    fn haar_product_pairing(
        &self,
        s: &CorepLabel,
        jk: (usize, usize),
        t: &CorepLabel,
        lr: (usize, usize),
    ) -> Result<Complex64> {
        self.validate_label(s)?;
        self.validate_label(t)?;
        if s != t {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if jk.0 == lr.0 && jk.1 == lr.1 {
            let d = self
                .dim(s)?
                .to_f64()
                .filter(|v| v.is_finite())
                .unwrap_or(f64::INFINITY);
            Ok(Complex64::new(1.0 / d, 0.0))
        } else {
            Ok(Complex64::new(0.0, 0.0))
        }
    }

    fn haar_star_pairing(
        &self,
        s: &CorepLabel,
        ij: (usize, usize),
        t: &CorepLabel,
        kl: (usize, usize),
    ) -> Result<Complex64> {
        self.haar_product_pairing(s, ij, t, kl)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_follow_the_recurrence() {
        let m = OnPlusModel::new(3).unwrap();
        let d = |s: u32| m.dim(&CorepLabel::Nat(s)).unwrap();
        assert_eq!(d(0), BigUint::from(1u32));
        assert_eq!(d(1), BigUint::from(3u32));
        assert_eq!(d(2), BigUint::from(8u32));
        assert_eq!(d(3), BigUint::from(21u32));
        for s in 1..40u32 {
            assert_eq!(BigUint::from(3u32) * d(s) - d(s - 1), d(s + 1));
        }
    }

    #[test]
    fn fusion_dimensions_are_consistent() {
        let m = OnPlusModel::new(4).unwrap();
        for s in 0..8u32 {
            for t in 0..8u32 {
                let product =
                    m.dim(&CorepLabel::Nat(s)).unwrap() * m.dim(&CorepLabel::Nat(t)).unwrap();
                let sum: BigUint = onplus_fusion(s, t)
                    .into_iter()
                    .map(|r| m.dim(&CorepLabel::Nat(r)).unwrap())
                    .sum();
                assert_eq!(product, sum, "s={s} t={t}");
            }
        }
    }

    #[test]
    fn fundamental_square_contains_trivial() {
        assert_eq!(onplus_fusion(1, 1), vec![0, 2]);
        assert_eq!(onplus_fusion(3, 2), vec![1, 3, 5]);
    }

    #[test]
    fn pairing_is_orthonormal_up_to_dimension() {
        let m = OnPlusModel::new(3).unwrap();
        let s = CorepLabel::Nat(2);
        let p = m.haar_product_pairing(&s, (0, 1), &s, (0, 1)).unwrap();
        assert!((p.re - 1.0 / 8.0).abs() < 1e-15);
        let z = m.haar_product_pairing(&s, (0, 1), &s, (1, 0)).unwrap();
        assert_eq!(z, Complex64::new(0.0, 0.0));
        let cross = m
            .haar_product_pairing(&s, (0, 0), &CorepLabel::Nat(1), (0, 0))
            .unwrap();
        assert_eq!(cross, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn rejects_foreign_labels() {
        let m = OnPlusModel::new(3).unwrap();
        assert!(m.validate_label(&CorepLabel::Half(3)).is_err());
    }
}
