use std::fmt;

/// Index of an irreducible unitary corepresentation.
///
/// The label set depends on the model: non-negative integers for `O_N⁺`,
/// half-integers for `SU_q(2)` (stored doubled, so `Half(3)` means s = 3/2),
/// and group elements for a discrete-group algebra. Label 0 (resp. the
/// identity element) denotes the trivial corepresentation `u^(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CorepLabel {
    /// `O_N⁺` label s ∈ ℕ.
    Nat(u32),
    /// `SU_q(2)` label, stored as 2s ∈ ℕ.
    Half(u32),
    /// Discrete-group label.
    Group(GroupElement),
}

impl CorepLabel {
    pub fn half_from_doubled(two_s: u32) -> Self {
        CorepLabel::Half(two_s)
    }

    /// The numeric level of the label used for horizon comparisons:
    /// s for `Nat`, s (not 2s) for `Half`, word length for `Group`.
    pub fn level(&self) -> f64 {
        match self {
            CorepLabel::Nat(s) => *s as f64,
            CorepLabel::Half(two_s) => *two_s as f64 / 2.0,
            CorepLabel::Group(g) => g.word_length() as f64,
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            CorepLabel::Nat(s) => *s == 0,
            CorepLabel::Half(two_s) => *two_s == 0,
            CorepLabel::Group(g) => g.is_identity(),
        }
    }
}

impl fmt::Display for CorepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorepLabel::Nat(s) => write!(f, "{s}"),
            CorepLabel::Half(two_s) => {
                if two_s % 2 == 0 {
                    write!(f, "{}", two_s / 2)
                } else {
                    write!(f, "{two_s}/2")
                }
            }
            CorepLabel::Group(g) => write!(f, "{g}"),
        }
    }
}

/// Element of a discrete group, either a lattice point of ℤ^d or a reduced
/// word in a free group F_k (letters 1..=k, negative values for inverses).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Lattice(Vec<i64>),
    Free(Vec<i16>),
}

impl GroupElement {
    pub fn identity_lattice(rank: usize) -> Self {
        GroupElement::Lattice(vec![0; rank])
    }

    pub fn identity_free() -> Self {
        GroupElement::Free(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Lattice(v) => v.iter().all(|&n| n == 0),
            GroupElement::Free(w) => w.is_empty(),
        }
    }

    /// Word length with respect to the standard generating set.
    pub fn word_length(&self) -> u64 {
        match self {
            GroupElement::Lattice(v) => v.iter().map(|&n| n.unsigned_abs()).sum(),
            GroupElement::Free(w) => w.len() as u64,
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::Lattice(v) => GroupElement::Lattice(v.iter().map(|&n| -n).collect()),
            GroupElement::Free(w) => {
                GroupElement::Free(w.iter().rev().map(|&l| -l).collect())
            }
        }
    }

    /// Group law. Free words are reduced after concatenation.
    pub fn compose(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (GroupElement::Lattice(a), GroupElement::Lattice(b)) if a.len() == b.len() => {
                Some(GroupElement::Lattice(
                    a.iter().zip(b).map(|(x, y)| x + y).collect(),
                ))
            }
            (GroupElement::Free(a), GroupElement::Free(b)) => {
                let mut word = a.clone();
                for &l in b {
                    if word.last() == Some(&-l) {
                        word.pop();
                    } else {
                        word.push(l);
                    }
                }
                Some(GroupElement::Free(word))
            }
            _ => None,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Lattice(v) => {
                write!(f, "(")?;
                for (i, n) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{n}")?;
                }
                write!(f, ")")
            }
            GroupElement::Free(w) => {
                if w.is_empty() {
                    return write!(f, "e");
                }
                for &l in w {
                    let idx = (l.unsigned_abs() - 1) as u8;
                    let c = if l > 0 {
                        (b'a' + idx) as char
                    } else {
                        (b'A' + idx) as char
                    };
                    write!(f, "{c}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_labels_display_as_fractions() {
        assert_eq!(CorepLabel::Half(0).to_string(), "0");
        assert_eq!(CorepLabel::Half(1).to_string(), "1/2");
        assert_eq!(CorepLabel::Half(4).to_string(), "2");
    }

    #[test]
    fn trivial_labels() {
        assert!(CorepLabel::Nat(0).is_trivial());
        assert!(!CorepLabel::Half(1).is_trivial());
        assert!(CorepLabel::Group(GroupElement::identity_free()).is_trivial());
    }

    #[test]
    fn free_words_reduce_on_composition() {
        let ab = GroupElement::Free(vec![1, 2]);
        let b_inv_a_inv = ab.inverse();
        assert_eq!(b_inv_a_inv, GroupElement::Free(vec![-2, -1]));
        let e = ab.compose(&b_inv_a_inv).unwrap();
        assert!(e.is_identity());
    }

    #[test]
    fn word_display() {
        assert_eq!(GroupElement::Free(vec![1, -2]).to_string(), "aB");
        assert_eq!(GroupElement::Lattice(vec![3, -1]).to_string(), "(3,-1)");
    }

    #[test]
    fn lattice_word_length_is_l1() {
        assert_eq!(GroupElement::Lattice(vec![2, -3]).word_length(), 5);
    }
}
