use num_bigint::BigUint;
use num_complex::Complex64;

use crate::block::BlockMatrix;
use crate::error::Result;
use crate::label::CorepLabel;

/// A compact quantum group presented through its irreducible unitary
/// corepresentations. Everything the rest of the crate does is blockwise, so
/// the model only has to answer questions about one label at a time.
///
/// The transforms `hash_block` and `antipode_block` receive the functional's
/// block at `conjugate_label(label)` and return the transformed functional's
/// block at `label`. For self-conjugate models the two labels coincide; for a
/// group algebra the block at `g` is built from the value at `g^{-1}`.
pub trait Model: Send + Sync {
    /// Identity string used to detect mixing functionals across models.
    fn id(&self) -> String;

    fn family(&self) -> &'static str;

    fn is_kac(&self) -> bool;

    fn trivial_label(&self) -> CorepLabel;

    fn validate_label(&self, label: &CorepLabel) -> Result<()>;

    /// Dimension n_s of the corepresentation.
    fn dim(&self, label: &CorepLabel) -> Result<BigUint>;

    /// Quantum dimension D_s, the trace of the positive Woronowicz character
    /// matrix F_1 on the block.
    fn quantum_dim(&self, label: &CorepLabel) -> Result<f64>;

    fn conjugate_label(&self, label: &CorepLabel) -> Result<CorepLabel>;

    /// All labels with level at most `s_max`, trivial label first.
    fn labels_up_to(&self, s_max: f64) -> Result<Vec<CorepLabel>>;

    /// Block of the Woronowicz character `f_z`, i.e. the diagonal matrix
    /// `F_z`. Real `z` gives the classical family; purely imaginary arguments
    /// arise from the modular and scaling groups.
    fn character_block(&self, z: Complex64, label: &CorepLabel) -> Result<BlockMatrix>;

    /// Block at `label` of the hash transform `a -> conj(phi(a*))`.
    fn hash_block(&self, label: &CorepLabel, conjugate_block: &BlockMatrix) -> Result<BlockMatrix>;

    /// Block at `label` of `phi` composed with the antipode.
    fn antipode_block(
        &self,
        label: &CorepLabel,
        conjugate_block: &BlockMatrix,
    ) -> Result<BlockMatrix>;

    /// Block at `label` of `phi` composed with the unitary antipode, which is
    /// the antipode conjugated by the square root of the character matrix.
    fn unitary_antipode_block(
        &self,
        label: &CorepLabel,
        conjugate_block: &BlockMatrix,
    ) -> Result<BlockMatrix> {
        let s_block = self.antipode_block(label, conjugate_block)?;
        self.sandwich(label, &s_block, Complex64::new(-0.5, 0.0), Complex64::new(0.5, 0.0))
    }

    /// Block of `phi` composed with the modular automorphism at time `t`,
    /// which acts on coefficients as `F_{it} u F_{it}`. Complex `t` gives the
    /// analytic extension.
    fn modular_block(
        &self,
        label: &CorepLabel,
        block: &BlockMatrix,
        t: Complex64,
    ) -> Result<BlockMatrix> {
        let z = Complex64::new(0.0, 1.0) * t;
        self.sandwich(label, block, z, z)
    }

    /// Block of `phi` composed with the scaling automorphism at time `t`,
    /// acting as `F_{-it} u F_{it}`.
    fn scaling_block(
        &self,
        label: &CorepLabel,
        block: &BlockMatrix,
        t: Complex64,
    ) -> Result<BlockMatrix> {
        let z = Complex64::new(0.0, 1.0) * t;
        self.sandwich(label, block, -z, z)
    }

    /// `F_{z_left} * block * F_{z_right}`.
    fn sandwich(
        &self,
        label: &CorepLabel,
        block: &BlockMatrix,
        z_left: Complex64,
        z_right: Complex64,
    ) -> Result<BlockMatrix> {
        let left = self.character_block(z_left, label)?;
        let right = self.character_block(z_right, label)?;
        left.mul(block)?.mul(&right)
    }

    /// Haar expectation of a product of two coefficients,
    /// `h(u^s_{jk} u^t_{lr})`, with matrix positions as 0-based indices.
    fn haar_product_pairing(
        &self,
        s: &CorepLabel,
        jk: (usize, usize),
        t: &CorepLabel,
        lr: (usize, usize),
    ) -> Result<Complex64>;

    /// Haar inner product `h((u^s_{ij})* u^t_{kl})` of two coefficients.
    fn haar_star_pairing(
        &self,
        s: &CorepLabel,
        ij: (usize, usize),
        t: &CorepLabel,
        kl: (usize, usize),
    ) -> Result<Complex64>;
}
