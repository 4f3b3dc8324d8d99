use num_bigint::BigUint;
use num_complex::Complex64;

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::label::{CorepLabel, GroupElement};
use crate::model::Model;

/// Finitely generated group whose algebra is viewed as a compact quantum
/// group dual: the free abelian lattice `Z^d` or the free group `F_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupPresentation {
    Lattice { rank: usize },
    Free { rank: usize },
}

impl GroupPresentation {
    pub fn identity(&self) -> GroupElement {
        match self {
            GroupPresentation::Lattice { rank } => GroupElement::identity_lattice(*rank),
            GroupPresentation::Free { .. } => GroupElement::identity_free(),
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        match (self, g) {
            (GroupPresentation::Lattice { rank }, GroupElement::Lattice(v)) => v.len() == *rank,
            (GroupPresentation::Free { rank }, GroupElement::Free(w)) => w
                .iter()
                .all(|&l| l != 0 && (l.unsigned_abs() as usize) <= *rank),
            _ => false,
        }
    }
}

/// Word length choice for the canonical conditionally negative functional.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LengthFunction {
    Word,
    WordSquared,
}

/// All group elements of word length at most `radius`, ordered by length and
/// then lexicographically, identity first.
pub fn enumerate_group(presentation: &GroupPresentation, radius: u32) -> Vec<GroupElement> {
    let mut out = match presentation {
        GroupPresentation::Lattice { rank } => {
            let r = radius as i64;
            let mut acc: Vec<Vec<i64>> = vec![vec![]];
            for _ in 0..*rank {
                let mut next = Vec::new();
                for prefix in &acc {
                    let used: i64 = prefix.iter().map(|x| x.abs()).sum();
                    for v in -(r - used)..=(r - used) {
                        let mut w = prefix.clone();
                        w.push(v);
                        next.push(w);
                    }
                }
                acc = next;
            }
            acc.into_iter().map(GroupElement::Lattice).collect()
        }
        GroupPresentation::Free { rank } => {
            let k = *rank as i16;
            let letters: Vec<i16> = (1..=k).flat_map(|i| [i, -i]).collect();
            let mut acc: Vec<Vec<i16>> = vec![vec![]];
            let mut frontier: Vec<Vec<i16>> = vec![vec![]];
            for _ in 0..radius {
                let mut next = Vec::new();
                for w in &frontier {
                    for &l in &letters {
                        if w.last() == Some(&-l) {
                            continue;
                        }
                        let mut ext = w.clone();
                        ext.push(l);
                        next.push(ext);
                    }
                }
                acc.extend(next.iter().cloned());
                frontier = next;
            }
            acc.into_iter().map(GroupElement::Free).collect()
        }
    };
    out.sort_by(|a, b| {
        (a.word_length(), element_key(a)).cmp(&(b.word_length(), element_key(b)))
    });
    out
}

fn element_key(g: &GroupElement) -> Vec<i64> {
    match g {
        GroupElement::Lattice(v) => v.clone(),
        GroupElement::Free(w) => w.iter().map(|&l| l as i64).collect(),
    }
}

#[derive(Clone, Debug)]
pub struct DiscreteGroupModel {
    presentation: GroupPresentation,
}

impl DiscreteGroupModel {
    pub fn new(presentation: GroupPresentation) -> Result<Self> {
        let ok = match &presentation {
            GroupPresentation::Lattice { rank } => *rank >= 1,
            GroupPresentation::Free { rank } => *rank >= 1,
        };
        if !ok {
            return Err(Error::InvalidParameter(
                "group rank must be at least one".into(),
            ));
        }
        Ok(DiscreteGroupModel { presentation })
    }

    pub fn lattice(rank: usize) -> Result<Self> {
        DiscreteGroupModel::new(GroupPresentation::Lattice { rank })
    }

    pub fn free(rank: usize) -> Result<Self> {
        DiscreteGroupModel::new(GroupPresentation::Free { rank })
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    fn element<'a>(&self, label: &'a CorepLabel) -> Result<&'a GroupElement> {
        match label {
            CorepLabel::Group(g) if self.presentation.contains(g) => Ok(g),
            other => Err(Error::InvalidLabel {
                model: self.id(),
                reason: format!("label {other} does not name an element of this group"),
            }),
        }
    }
}

impl Model for DiscreteGroupModel {
    fn id(&self) -> String {
        match &self.presentation {
            GroupPresentation::Lattice { rank } => format!("group(Z^{rank})"),
            GroupPresentation::Free { rank } => format!("group(F_{rank})"),
        }
    }

    fn family(&self) -> &'static str {
        "discrete"
    }

    fn is_kac(&self) -> bool {
        true
    }

    fn trivial_label(&self) -> CorepLabel {
        CorepLabel::Group(self.presentation.identity())
    }

    fn validate_label(&self, label: &CorepLabel) -> Result<()> {
        self.element(label).map(|_| ())
    }

    fn dim(&self, label: &CorepLabel) -> Result<BigUint> {
        self.validate_label(label)?;
        Ok(BigUint::from(1u32))
    }

    fn quantum_dim(&self, label: &CorepLabel) -> Result<f64> {
        self.validate_label(label)?;
        Ok(1.0)
    }

    fn conjugate_label(&self, label: &CorepLabel) -> Result<CorepLabel> {
        Ok(CorepLabel::Group(self.element(label)?.inverse()))
    }

    fn labels_up_to(&self, s_max: f64) -> Result<Vec<CorepLabel>> {
        if !s_max.is_finite() || s_max < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "label bound must be a nonnegative finite number, got {s_max}"
            )));
        }
        Ok(enumerate_group(&self.presentation, s_max.floor() as u32)
            .into_iter()
            .map(CorepLabel::Group)
            .collect())
    }

    fn character_block(&self, _z: Complex64, label: &CorepLabel) -> Result<BlockMatrix> {
        self.validate_label(label)?;
        Ok(BlockMatrix::identity(BigUint::from(1u32)))
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
        Ok(conjugate_block.clone())
    }

    fn haar_product_pairing(
        &self,
        s: &CorepLabel,
        _jk: (usize, usize),
        t: &CorepLabel,
        _lr: (usize, usize),
    ) -> Result<Complex64> {
        let g = self.element(s)?;
        let h = self.element(t)?;
        let is_inverse_pair = g.compose(h).map(|p| p.is_identity()).unwrap_or(false);
        if is_inverse_pair {
            Ok(Complex64::new(1.0, 0.0))
        } else {
            Ok(Complex64::new(0.0, 0.0))
        }
    }

    fn haar_star_pairing(
        &self,
        s: &CorepLabel,
        _ij: (usize, usize),
        t: &CorepLabel,
        _kl: (usize, usize),
    ) -> Result<Complex64> {
        let g = self.element(s)?;
        let h = self.element(t)?;
        if g == h {
            Ok(Complex64::new(1.0, 0.0))
        } else {
            Ok(Complex64::new(0.0, 0.0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group_ball_sizes() {
        let f2 = GroupPresentation::Free { rank: 2 };
        assert_eq!(enumerate_group(&f2, 0).len(), 1);
        assert_eq!(enumerate_group(&f2, 1).len(), 5);
        assert_eq!(enumerate_group(&f2, 2).len(), 17);
        assert_eq!(enumerate_group(&f2, 3).len(), 17 + 4 * 9);
    }

    #[test]
    fn lattice_ball_sizes() {
        let z2 = GroupPresentation::Lattice { rank: 2 };
        assert_eq!(enumerate_group(&z2, 2).len(), 13);
        let z1 = GroupPresentation::Lattice { rank: 1 };
        let ball = enumerate_group(&z1, 3);
        assert_eq!(ball.len(), 7);
        assert!(ball[0].is_identity());
    }

    #[test]
    fn enumeration_is_sorted_and_reduced() {
        let f2 = GroupPresentation::Free { rank: 2 };
        let ball = enumerate_group(&f2, 2);
        for g in &ball {
            if let GroupElement::Free(w) = g {
                for pair in w.windows(2) {
                    assert_ne!(pair[0], -pair[1], "unreduced word in enumeration");
                }
            }
        }
        for pair in ball.windows(2) {
            assert!(pair[0].word_length() <= pair[1].word_length());
        }
    }

    #[test]
    fn pairing_detects_inverses() {
        let m = DiscreteGroupModel::free(2).unwrap();
        let g = CorepLabel::Group(GroupElement::Free(vec![1, 2]));
        let ginv = m.conjugate_label(&g).unwrap();
        let one = m.haar_product_pairing(&g, (0, 0), &ginv, (0, 0)).unwrap();
        assert_eq!(one.re, 1.0);
        let zero = m.haar_product_pairing(&g, (0, 0), &g, (0, 0)).unwrap();
        assert_eq!(zero.re, 0.0);
        let same = m.haar_star_pairing(&g, (0, 0), &g, (0, 0)).unwrap();
        assert_eq!(same.re, 1.0);
    }

    #[test]
    fn foreign_elements_rejected() {
        let m = DiscreteGroupModel::lattice(2).unwrap();
        let bad = CorepLabel::Group(GroupElement::Lattice(vec![1, 2, 3]));
        assert!(m.validate_label(&bad).is_err());
        assert!(m.validate_label(&CorepLabel::Nat(1)).is_err());
    }
}
