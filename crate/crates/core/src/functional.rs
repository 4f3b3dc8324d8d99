use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::label::CorepLabel;
use crate::model::Model;

/// What the construction of a functional promises about its positivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Positivity {
    /// Conditionally positive and vanishing on the unit: generates a
    /// convolution semigroup of states.
    GeneratingFunctional,
    /// A state: positive and unital.
    State,
    Unknown,
}

impl Positivity {
    pub fn describe(&self) -> &'static str {
        match self {
            Positivity::GeneratingFunctional => "generating functional",
            Positivity::State => "state",
            Positivity::Unknown => "unknown",
        }
    }
}

type EvalFn = dyn Fn(&CorepLabel) -> Result<BlockMatrix> + Send + Sync;

/// Linear functional on the coefficient algebra, represented through its
/// characteristic matrices: one block per irreducible corepresentation,
/// computed on demand and cached.
#[derive(Clone)]
pub struct Functional {
    model: Arc<dyn Model>,
    kind: String,
    positivity: Positivity,
    eval: Arc<EvalFn>,
    cache: Arc<RwLock<HashMap<CorepLabel, BlockMatrix>>>,
}

impl std::fmt::Debug for Functional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Functional")
            .field("model", &self.model.id())
            .field("kind", &self.kind)
            .field("positivity", &self.positivity)
            .finish()
    }
}

impl Functional {
    pub fn from_eval<F>(
        model: Arc<dyn Model>,
        kind: impl Into<String>,
        positivity: Positivity,
        eval: F,
    ) -> Self
    where
        F: Fn(&CorepLabel) -> Result<BlockMatrix> + Send + Sync + 'static,
    {
        Functional {
            model,
            kind: kind.into(),
            positivity,
            eval: Arc::new(eval),
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    pub fn from_blocks(
        model: Arc<dyn Model>,
        kind: impl Into<String>,
        positivity: Positivity,
        blocks: HashMap<CorepLabel, BlockMatrix>,
    ) -> Self {
        let table = Arc::new(blocks);
        Functional::from_eval(model, kind, positivity, move |label| {
            table.get(label).cloned().ok_or_else(|| {
                Error::Unsupported(format!("no block supplied for label {label}"))
            })
        })
    }

    /// The counit: identity block on every label.
    pub fn counit(model: Arc<dyn Model>) -> Self {
        let m = model.clone();
        Functional::from_eval(model, "counit", Positivity::State, move |label| {
            Ok(BlockMatrix::identity(m.dim(label)?))
        })
    }

    /// The Haar state: identity on the trivial label, zero elsewhere.
    pub fn haar(model: Arc<dyn Model>) -> Self {
        let m = model.clone();
        Functional::from_eval(model, "haar", Positivity::State, move |label| {
            if *label == m.trivial_label() {
                Ok(BlockMatrix::identity(m.dim(label)?))
            } else {
                Ok(BlockMatrix::zero(m.dim(label)?))
            }
        })
    }

    /// Everywhere zero; not a state, but a convenient additive unit.
    pub fn zero(model: Arc<dyn Model>) -> Self {
        let m = model.clone();
        Functional::from_eval(model, "zero", Positivity::Unknown, move |label| {
            Ok(BlockMatrix::zero(m.dim(label)?))
        })
    }

    pub fn model(&self) -> &Arc<dyn Model> {
        &self.model
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn positivity(&self) -> Positivity {
        self.positivity
    }

    pub fn with_positivity(mut self, positivity: Positivity) -> Self {
        self.positivity = positivity;
        self
    }

    /// Characteristic matrix at `label`, computed once and cached.
    pub fn block(&self, label: &CorepLabel) -> Result<BlockMatrix> {
        self.model.validate_label(label)?;
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(label) {
            return Ok(hit.clone());
        }
        let block = (self.eval)(label)?;
        if block.dim() != self.model.dim(label)? {
            return Err(Error::DimensionMismatch {
                label: label.to_string(),
                expected: self.model.dim(label)?.to_string(),
                got: block.dim().to_usize().unwrap_or(usize::MAX),
            });
        }
        if block.has_non_finite() {
            return Err(Error::NonFinite {
                label: label.to_string(),
            });
        }
        self.cache
            .write()
            .expect("cache poisoned")
            .insert(label.clone(), block.clone());
        Ok(block)
    }

    /// Value on the unit of the algebra, which is the trivial block entry.
    pub fn value_at_unit(&self) -> Result<Complex64> {
        Ok(self.block(&self.model.trivial_label())?.entry(0, 0))
    }

    pub fn add(&self, other: &Functional) -> Result<Functional> {
        check_same_model(self, other)?;
        let (a, b) = (self.clone(), other.clone());
        Ok(Functional::from_eval(
            self.model.clone(),
            format!("({} + {})", a.kind, b.kind),
            Positivity::Unknown,
            move |label| a.block(label)?.add(&b.block(label)?),
        ))
    }

    pub fn scale(&self, c: Complex64) -> Functional {
        let a = self.clone();
        Functional::from_eval(
            self.model.clone(),
            format!("{c} * {}", a.kind),
            Positivity::Unknown,
            move |label| Ok(a.block(label)?.scale(c)),
        )
    }

    /// Largest pointwise block distance over the given labels.
    pub fn max_distance(&self, other: &Functional, labels: &[CorepLabel]) -> Result<f64> {
        check_same_model(self, other)?;
        let mut worst = 0.0f64;
        for label in labels {
            let d = self.block(label)?.max_abs_diff(&other.block(label)?)?;
            worst = worst.max(d);
        }
        Ok(worst)
    }
}

pub(crate) fn check_same_model(a: &Functional, b: &Functional) -> Result<()> {
    if a.model.id() != b.model.id() {
        return Err(Error::ModelMismatch {
            left: a.model.id(),
            right: b.model.id(),
        });
    }
    Ok(())
}

/// Convolution product: blockwise matrix product of characteristic matrices.
pub fn convolve(a: &Functional, b: &Functional) -> Result<Functional> {
    check_same_model(a, b)?;
    let (fa, fb) = (a.clone(), b.clone());
    Ok(Functional::from_eval(
        a.model().clone(),
        format!("({} * {})", a.kind(), b.kind()),
        Positivity::Unknown,
        move |label| fa.block(label)?.mul(&fb.block(label)?),
    ))
}

/// The Woronowicz character `f_z`, blockwise the diagonal matrix `F_z`.
pub fn woronowicz_character(model: Arc<dyn Model>, z: Complex64) -> Functional {
    let m = model.clone();
    let positivity = if z.im == 0.0 {
        Positivity::State
    } else {
        Positivity::Unknown
    };
    Functional::from_eval(model, format!("f_{z}"), positivity, move |label| {
        m.character_block(z, label)
    })
}

/// Quantum dimension of a corepresentation, the value of `f_1` on its
/// character.
pub fn quantum_dimension(model: &dyn Model, label: &CorepLabel) -> Result<f64> {
    model.quantum_dim(label)
}

/// Markov semigroup member `exp_*(t phi)`: blockwise matrix exponential of
/// `t` times the characteristic matrix. Time zero returns the counit exactly.
pub fn markov_semigroup(phi: &Functional, t: f64) -> Result<Functional> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    if t == 0.0 {
        return Ok(Functional::counit(phi.model().clone()));
    }
    let f = phi.clone();
    Ok(Functional::from_eval(
        phi.model().clone(),
        format!("exp({t} * {})", phi.kind()),
        Positivity::State,
        move |label| Ok(f.block(label)?.exp_scaled(t)),
    ))
}

/// Matrix of the convolution operator `(id ox phi) Delta` restricted to the
/// coefficient space of one block, in the row-major basis `u_{jk}`. The
/// operator only touches the column index, so the matrix is `I ox phi^(s)`.
pub fn convolution_operator_block(phi: &Functional, label: &CorepLabel) -> Result<BlockMatrix> {
    let block = phi.block(label)?;
    match &block {
        BlockMatrix::Scalar { dim, value, exact } => Ok(BlockMatrix::Scalar {
            dim: dim * dim,
            value: *value,
            exact: exact.clone(),
        }),
        BlockMatrix::Dense(m) => {
            let n = m.nrows();
            let id = DMatrix::<Complex64>::identity(n, n);
            Ok(BlockMatrix::Dense(id.kronecker(m)))
        }
    }
}

/// Haar inner product `h((u^s_{ij})* u^s_{kl})` of two coefficients.
pub fn haar_pairing(
    model: &dyn Model,
    s: &CorepLabel,
    ij: (usize, usize),
    t: &CorepLabel,
    kl: (usize, usize),
) -> Result<Complex64> {
    model.haar_star_pairing(s, ij, t, kl)
}

/// The hash adjoint `phi^# = conj . phi . star`, an involution.
pub fn adjoint_hash(phi: &Functional) -> Functional {
    let f = phi.clone();
    let m = phi.model().clone();
    Functional::from_eval(
        phi.model().clone(),
        format!("hash({})", phi.kind()),
        Positivity::Unknown,
        move |label| {
            let conj_label = m.conjugate_label(label)?;
            let inner = f.block(&conj_label)?;
            m.hash_block(label, &inner)
        },
    )
}

/// Composition with the antipode.
pub fn compose_antipode(phi: &Functional) -> Functional {
    let f = phi.clone();
    let m = phi.model().clone();
    Functional::from_eval(
        phi.model().clone(),
        format!("antipode({})", phi.kind()),
        Positivity::Unknown,
        move |label| {
            let conj_label = m.conjugate_label(label)?;
            let inner = f.block(&conj_label)?;
            m.antipode_block(label, &inner)
        },
    )
}

/// Composition with the unitary antipode.
pub fn compose_unitary_antipode(phi: &Functional) -> Functional {
    let f = phi.clone();
    let m = phi.model().clone();
    Functional::from_eval(
        phi.model().clone(),
        format!("unitary_antipode({})", phi.kind()),
        Positivity::Unknown,
        move |label| {
            let conj_label = m.conjugate_label(label)?;
            let inner = f.block(&conj_label)?;
            m.unitary_antipode_block(label, &inner)
        },
    )
}

/// Adjoint in the GNS inner product of the Haar state: blockwise conjugate
/// transpose of the characteristic matrices.
pub fn star_adjoint(phi: &Functional) -> Functional {
    let f = phi.clone();
    Functional::from_eval(
        phi.model().clone(),
        format!("gns_adjoint({})", phi.kind()),
        Positivity::Unknown,
        move |label| Ok(f.block(label)?.adjoint()),
    )
}

/// KMS adjoint `phi^# . R`, the adjoint of the convolution operator in the
/// KMS inner product at inverse temperature one.
pub fn kms_adjoint(phi: &Functional) -> Functional {
    compose_unitary_antipode(&adjoint_hash(phi))
}

/// Composition with the modular automorphism `sigma_t`; complex `t` gives the
/// analytic extension.
pub fn apply_sigma(phi: &Functional, t: Complex64) -> Functional {
    let f = phi.clone();
    let m = phi.model().clone();
    Functional::from_eval(
        phi.model().clone(),
        format!("sigma_{t}({})", phi.kind()),
        Positivity::Unknown,
        move |label| {
            let block = f.block(label)?;
            m.modular_block(label, &block, t)
        },
    )
}

/// Composition with the scaling automorphism `tau_t`.
pub fn apply_tau(phi: &Functional, t: Complex64) -> Functional {
    let f = phi.clone();
    let m = phi.model().clone();
    Functional::from_eval(
        phi.model().clone(),
        format!("tau_{t}({})", phi.kind()),
        Positivity::Unknown,
        move |label| {
            let block = f.block(label)?;
            m.scaling_block(label, &block, t)
        },
    )
}
