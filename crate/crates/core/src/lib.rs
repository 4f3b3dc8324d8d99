//! Generating functionals of Levy processes on compact quantum groups,
//! represented blockwise through their characteristic matrices.
//!
//! A functional on the coefficient algebra is stored as one matrix per
//! irreducible corepresentation. Convolution becomes a blockwise matrix
//! product, Markov semigroups become blockwise exponentials, and symmetry
//! properties (hermitian, GNS, KMS, ad-invariance, detailed balance) become
//! checkable matrix identities. On top of that calculus the crate builds
//! Dirichlet forms, spectra of geometric Dirac operators, zeta functions and
//! spectral dimensions for the free orthogonal quantum groups, quantum SU(2)
//! and group algebras of lattices and free groups.

pub mod block;
pub mod chebyshev;
pub mod error;
pub mod functional;
pub mod generators;
pub mod label;
pub mod linalg;
pub mod measure;
pub mod model;
pub mod models;
pub mod spectral;
pub mod symmetry;

pub use block::{BlockMatrix, DENSE_DIM_CAP};
pub use error::{Error, Result};
pub use functional::{
    adjoint_hash, apply_sigma, apply_tau, compose_antipode, compose_unitary_antipode,
    convolution_operator_block, convolve, haar_pairing, kms_adjoint, markov_semigroup,
    quantum_dimension, star_adjoint, woronowicz_character, Functional, Positivity,
};
pub use label::{CorepLabel, GroupElement};
pub use measure::{gauss_legendre, Atom, IntervalMeasure, Polynomial};
pub use model::Model;

pub use models::discrete::{
    enumerate_group, DiscreteGroupModel, GroupPresentation, LengthFunction,
};
pub use models::onplus::{onplus_fusion, OnPlusModel};
pub use models::suq2::{
    required_truncation, suq2_corep_block, suq2_r_transform, truncated_pi, truncated_rho,
    truncation_tail, SUq2Model, TruncatedRep,
};

pub use generators::discrete_length::discrete_length_functional;
pub use generators::gns::suq2_gns_generic;
pub use generators::hunt::hunt_onplus;
pub use generators::levy::{lk_boundary, lk_interior, CharPair, CharTriple};
pub use generators::phi_infinity::{phi_infinity_value, PhiInfinityValue};
pub use generators::poisson::{poisson_closed_form, poisson_functional, PoissonSpec};
pub use generators::symmetrize::{ad_project, kms_symmetrize, twisted_ad_project};

pub use spectral::cocycle::{cocycle_gram, derivation_norm_check, Letter, Word};
pub use spectral::dirac::dirac_spectrum;
pub use spectral::dirichlet::{dirichlet_sesquilinear, dirichlet_value, CoefficientVector};
pub use spectral::spectrum::{generator_spectrum, SpectrumEntry, SpectrumReport};
pub use spectral::zeta::{spectral_dimension, zeta_partial, Verdict, ZetaReport};

pub use symmetry::{
    classify, commutes_with_modular, detailed_balance_check, is_ad_invariant, is_gns_symmetric,
    is_hermitian, is_kms_symmetric, ClassificationReport,
};
