use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_complex::Complex64;

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::label::CorepLabel;
use crate::model::Model;

/// The quantum SU(2) group at deformation parameter `0 < q < 1`.
///
/// Irreducibles are labeled by half-integer spin, stored as `2s`. Matrix rows
/// and columns follow the weight order `j = -s, ..., s`, so index `i`
/// corresponds to `2j = 2i - 2s`. In spin one half the generators sit as
/// `u = [[alpha, -q gamma*], [gamma, alpha*]]`.
#[derive(Clone, Debug)]
pub struct SUq2Model {
    q: f64,
}

fn neg_q_pow(q: f64, e: i32) -> f64 {
    let mag = q.powi(e);
    if e % 2 == 0 {
        mag
    } else {
        -mag
    }
}

impl SUq2Model {
    pub fn new(q: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) || !q.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "SU_q(2) needs 0 < q < 1, got q = {q}"
            )));
        }
        Ok(SUq2Model { q })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    fn two_s(&self, label: &CorepLabel) -> Result<u32> {
        match label {
            CorepLabel::Half(two_s) => Ok(*two_s),
            other => Err(Error::InvalidLabel {
                model: self.id(),
                reason: format!("expected a half-integer spin label, got {other}"),
            }),
        }
    }

    /// `2j` for matrix index `i` within the spin-`s` block.
    pub fn two_j(i: usize, two_s: u32) -> i32 {
        2 * i as i32 - two_s as i32
    }

    fn dense_or_scalar<F>(&self, block: &BlockMatrix, scalar_map: F) -> Result<DenseOrScalar>
    where
        F: FnOnce(Complex64) -> Complex64,
    {
        Ok(match block {
            BlockMatrix::Scalar { dim, value, exact } => DenseOrScalar::Scalar(BlockMatrix::Scalar {
                dim: dim.clone(),
                value: scalar_map(*value),
                exact: exact.clone(),
            }),
            BlockMatrix::Dense(m) => DenseOrScalar::Dense(m.clone()),
        })
    }
}

enum DenseOrScalar {
    Scalar(BlockMatrix),
    Dense(DMatrix<Complex64>),
}

impl Model for SUq2Model {
    fn id(&self) -> String {
        format!("suq2(q={})", self.q)
    }

    fn family(&self) -> &'static str {
        "suq2"
    }

    fn is_kac(&self) -> bool {
        false
    }

    fn trivial_label(&self) -> CorepLabel {
        CorepLabel::Half(0)
    }

    fn validate_label(&self, label: &CorepLabel) -> Result<()> {
        self.two_s(label).map(|_| ())
    }

    fn dim(&self, label: &CorepLabel) -> Result<BigUint> {
        Ok(BigUint::from(self.two_s(label)? + 1))
    }

    fn quantum_dim(&self, label: &CorepLabel) -> Result<f64> {
        let two_s = self.two_s(label)?;
        Ok((0..=two_s)
            .map(|i| self.q.powi(Self::two_j(i as usize, two_s)))
            .sum())
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
        let top = (2.0 * s_max + 1e-9).floor() as u32;
        Ok((0..=top).map(CorepLabel::Half).collect())
    }

    fn character_block(&self, z: Complex64, label: &CorepLabel) -> Result<BlockMatrix> {
        let two_s = self.two_s(label)?;
        let n = two_s as usize + 1;
        let ln_q = self.q.ln();
        let mut m = DMatrix::<Complex64>::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = (z * Complex64::new(Self::two_j(i, two_s) as f64 * ln_q, 0.0)).exp();
        }
        Ok(BlockMatrix::Dense(m))
    }

    fn hash_block(&self, label: &CorepLabel, conjugate_block: &BlockMatrix) -> Result<BlockMatrix> {
        let two_s = self.two_s(label)?;
        let n = two_s as usize + 1;
        match self.dense_or_scalar(conjugate_block, |v| v.conj())? {
            DenseOrScalar::Scalar(b) => Ok(b),
            DenseOrScalar::Dense(m) => {
                let mut out = DMatrix::<Complex64>::zeros(n, n);
                for i1 in 0..n {
                    for i2 in 0..n {
                        let factor = neg_q_pow(self.q, i2 as i32 - i1 as i32);
                        out[(i1, i2)] = Complex64::new(factor, 0.0)
                            * m[(n - 1 - i1, n - 1 - i2)].conj();
                    }
                }
                Ok(BlockMatrix::Dense(out))
            }
        }
    }

    fn antipode_block(
        &self,
        label: &CorepLabel,
        conjugate_block: &BlockMatrix,
    ) -> Result<BlockMatrix> {
        let two_s = self.two_s(label)?;
        let n = two_s as usize + 1;
        match self.dense_or_scalar(conjugate_block, |v| v)? {
            DenseOrScalar::Scalar(b) => Ok(b),
            DenseOrScalar::Dense(m) => {
                let mut out = DMatrix::<Complex64>::zeros(n, n);
                for i1 in 0..n {
                    for i2 in 0..n {
                        let factor = neg_q_pow(self.q, i1 as i32 - i2 as i32);
                        out[(i1, i2)] =
                            Complex64::new(factor, 0.0) * m[(n - 1 - i2, n - 1 - i1)];
                    }
                }
                Ok(BlockMatrix::Dense(out))
            }
        }
    }

    fn haar_product_pairing(
        &self,
        s: &CorepLabel,
        jk: (usize, usize),
        t: &CorepLabel,
        lr: (usize, usize),
    ) -> Result<Complex64> {
        let two_s = self.two_s(s)?;
        self.validate_label(t)?;
        if s != t {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let n = two_s as usize + 1;
        let (i1, i2) = jk;
        let (i3, i4) = lr;
        if i3 != n - 1 - i1 || i4 != n - 1 - i2 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let sign = if (i2 as i32 - i1 as i32) % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        let weight = self.q.powi(i1 as i32 + i2 as i32 - two_s as i32);
        let d = self.quantum_dim(s)?;
        Ok(Complex64::new(sign * weight / d, 0.0))
    }

    fn haar_star_pairing(
        &self,
        s: &CorepLabel,
        ij: (usize, usize),
        t: &CorepLabel,
        kl: (usize, usize),
    ) -> Result<Complex64> {
        let two_s = self.two_s(s)?;
        self.validate_label(t)?;
        if s != t || ij != kl {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let weight = self.q.powi(-Self::two_j(ij.0, two_s));
        let d = self.quantum_dim(s)?;
        Ok(Complex64::new(weight / d, 0.0))
    }
}

/// Block of `phi` composed with the unitary antipode, in closed index form:
/// the sign pattern of the antipode with all `q`-powers cancelled.
pub fn suq2_r_transform(
    model: &SUq2Model,
    label: &CorepLabel,
    conjugate_block: &BlockMatrix,
) -> Result<BlockMatrix> {
    let two_s = match label {
        CorepLabel::Half(t) => *t,
        other => {
            return Err(Error::InvalidLabel {
                model: model.id(),
                reason: format!("expected a half-integer spin label, got {other}"),
            })
        }
    };
    let n = two_s as usize + 1;
    match conjugate_block {
        BlockMatrix::Scalar { .. } => Ok(conjugate_block.clone()),
        BlockMatrix::Dense(m) => {
            let mut out = DMatrix::<Complex64>::zeros(n, n);
            for i1 in 0..n {
                for i2 in 0..n {
                    let sign = if (i1 as i32 - i2 as i32) % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    };
                    out[(i1, i2)] = Complex64::new(sign, 0.0) * m[(n - 1 - i2, n - 1 - i1)];
                }
            }
            Ok(BlockMatrix::Dense(out))
        }
    }
}

/// Required radial truncation depth so that the discarded tail of the
/// standard representation stays below `tol`.
pub fn required_truncation(q: f64, tol: f64) -> usize {
    let m = ((tol * (1.0 - q * q)).ln() / (2.0 * q.ln())).ceil();
    m.max(1.0) as usize
}

/// Upper bound on the error committed by truncating at depth `m`.
pub fn truncation_tail(q: f64, m: usize) -> f64 {
    q.powi(2 * m as i32) / (1.0 - q * q)
}

/// Finite-dimensional compression of a representation of the coefficient
/// algebra, carried by the matrices of the two generators.
#[derive(Clone, Debug)]
pub struct TruncatedRep {
    pub q: f64,
    pub dim: usize,
    pub alpha: DMatrix<Complex64>,
    pub gamma: DMatrix<Complex64>,
}

impl TruncatedRep {
    pub fn alpha_star(&self) -> DMatrix<Complex64> {
        self.alpha.adjoint()
    }

    pub fn gamma_star(&self) -> DMatrix<Complex64> {
        self.gamma.adjoint()
    }

    pub fn identity(&self) -> DMatrix<Complex64> {
        DMatrix::identity(self.dim, self.dim)
    }

    pub fn direct_sum(parts: &[&TruncatedRep]) -> Result<TruncatedRep> {
        let q = parts
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty direct sum".into()))?
            .q;
        if parts.iter().any(|p| p.q != q) {
            return Err(Error::InvalidParameter(
                "direct sum requires a common deformation parameter".into(),
            ));
        }
        let dim = parts.iter().map(|p| p.dim).sum();
        let mut alpha = DMatrix::<Complex64>::zeros(dim, dim);
        let mut gamma = DMatrix::<Complex64>::zeros(dim, dim);
        let mut off = 0;
        for p in parts {
            alpha.view_mut((off, off), (p.dim, p.dim)).copy_from(&p.alpha);
            gamma.view_mut((off, off), (p.dim, p.dim)).copy_from(&p.gamma);
            off += p.dim;
        }
        Ok(TruncatedRep {
            q,
            dim,
            alpha,
            gamma,
        })
    }
}

/// Irreducible infinite-dimensional representation twisted by the circle
/// parameter `theta`, compressed to the first `m` radial levels:
/// `alpha e_n = sqrt(1 - q^{2n}) e_{n-1}` and `gamma e_n = e^{i theta} q^n e_n`.
pub fn truncated_rho(q: f64, theta: f64, m: usize) -> Result<TruncatedRep> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidParameter(format!("need 0 < q < 1, got {q}")));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("truncation depth must be positive".into()));
    }
    let mut alpha = DMatrix::<Complex64>::zeros(m, m);
    let mut gamma = DMatrix::<Complex64>::zeros(m, m);
    let phase = Complex64::new(0.0, theta).exp();
    for n in 0..m {
        if n >= 1 {
            alpha[(n - 1, n)] = Complex64::new((1.0 - q.powi(2 * n as i32)).sqrt(), 0.0);
        }
        gamma[(n, n)] = phase * Complex64::new(q.powi(n as i32), 0.0);
    }
    Ok(TruncatedRep {
        q,
        dim: m,
        alpha,
        gamma,
    })
}

/// Faithful representation on radial levels `0..m` tensor angular modes
/// `-w..w`: `alpha e_{k,n} = sqrt(1 - q^{2k}) e_{k-1,n}` and
/// `gamma e_{k,n} = q^k e_{k,n-1}` with the angular shift truncated at the
/// window boundary.
pub fn truncated_pi(q: f64, m: usize, w: usize) -> Result<TruncatedRep> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidParameter(format!("need 0 < q < 1, got {q}")));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("truncation depth must be positive".into()));
    }
    let modes = 2 * w + 1;
    let dim = m * modes;
    let idx = |k: usize, n: i64| -> usize { k * modes + (n + w as i64) as usize };
    let mut alpha = DMatrix::<Complex64>::zeros(dim, dim);
    let mut gamma = DMatrix::<Complex64>::zeros(dim, dim);
    for k in 0..m {
        for n in -(w as i64)..=(w as i64) {
            if k >= 1 {
                alpha[(idx(k - 1, n), idx(k, n))] =
                    Complex64::new((1.0 - q.powi(2 * k as i32)).sqrt(), 0.0);
            }
            if n - 1 >= -(w as i64) {
                gamma[(idx(k, n - 1), idx(k, n))] = Complex64::new(q.powi(k as i32), 0.0);
            }
        }
    }
    Ok(TruncatedRep {
        q,
        dim,
        alpha,
        gamma,
    })
}

/// Matrix of represented coefficients `[rep(u^s_{jk})]` for spin `2s <= 2`.
pub fn suq2_corep_block(
    rep: &TruncatedRep,
    two_s: u32,
) -> Result<Vec<Vec<DMatrix<Complex64>>>> {
    let a = rep.alpha.clone();
    let a_star = rep.alpha_star();
    let g = rep.gamma.clone();
    let g_star = rep.gamma_star();
    let q = rep.q;
    match two_s {
        0 => Ok(vec![vec![rep.identity()]]),
        1 => Ok(vec![
            vec![a, g_star.map(|c| c * Complex64::new(-q, 0.0))],
            vec![g, a_star],
        ]),
        2 => {
            let half = [
                [a.clone(), g_star.map(|c| c * Complex64::new(-q, 0.0))],
                [g.clone(), a_star.clone()],
            ];
            let norm = (1.0 + q * q).sqrt();
            let mut v = [[Complex64::new(0.0, 0.0); 3]; 4];
            v[0][0] = Complex64::new(1.0, 0.0);
            v[1][1] = Complex64::new(q / norm, 0.0);
            v[2][1] = Complex64::new(1.0 / norm, 0.0);
            v[3][2] = Complex64::new(1.0, 0.0);
            let pair = |a: usize, b: usize| a * 2 + b;
            let mut out =
                vec![vec![DMatrix::<Complex64>::zeros(rep.dim, rep.dim); 3]; 3];
            for j in 0..3 {
                for k in 0..3 {
                    let mut acc = DMatrix::<Complex64>::zeros(rep.dim, rep.dim);
                    for ab in 0..2usize {
                        for bb in 0..2usize {
                            let left = v[pair(ab, bb)][j].conj();
                            if left.norm() == 0.0 {
                                continue;
                            }
                            for cb in 0..2usize {
                                for db in 0..2usize {
                                    let right = v[pair(cb, db)][k];
                                    if right.norm() == 0.0 {
                                        continue;
                                    }
                                    let prod = &half[ab][cb] * &half[bb][db];
                                    acc += prod.map(|c| c * left * right);
                                }
                            }
                        }
                    }
                    out[j][k] = acc;
                }
            }
            Ok(out)
        }
        other => Err(Error::Unsupported(format!(
            "represented corepresentation blocks are available for 2s <= 2, got 2s = {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_block(n: usize, seed: u64) -> BlockMatrix {
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as f64 / (1u64 << 31) as f64) - 1.0
        };
        BlockMatrix::Dense(DMatrix::from_fn(n, n, |_, _| c(next(), next())))
    }

    #[test]
    fn quantum_dimension_sums_weights() {
        let m = SUq2Model::new(0.5).unwrap();
        let d = m.quantum_dim(&CorepLabel::Half(1)).unwrap();
        assert!((d - 2.5).abs() < 1e-15);
        let d2 = m.quantum_dim(&CorepLabel::Half(2)).unwrap();
        assert!((d2 - 5.25).abs() < 1e-15);
    }

    #[test]
    fn hash_is_an_involution() {
        let model = SUq2Model::new(0.37).unwrap();
        for two_s in 0..5u32 {
            let label = CorepLabel::Half(two_s);
            let b = random_block(two_s as usize + 1, 11 + two_s as u64);
            let twice = model
                .hash_block(&label, &model.hash_block(&label, &b).unwrap())
                .unwrap();
            assert!(b.max_abs_diff(&twice).unwrap() < 1e-12);
        }
    }

    #[test]
    fn antipode_squared_is_the_modular_sandwich() {
        let model = SUq2Model::new(0.6).unwrap();
        let label = CorepLabel::Half(3);
        let b = random_block(4, 99);
        let twice = model
            .antipode_block(&label, &model.antipode_block(&label, &b).unwrap())
            .unwrap();
        let dense = b.to_dense().unwrap();
        let n = 4usize;
        let mut want = DMatrix::<Complex64>::zeros(n, n);
        for i1 in 0..n {
            for i2 in 0..n {
                let p = 2 * (i1 as i32 - i2 as i32);
                want[(i1, i2)] = dense[(i1, i2)] * c(0.6f64.powi(p), 0.0);
            }
        }
        assert!(twice.max_abs_diff(&BlockMatrix::Dense(want)).unwrap() < 1e-12);
    }

    #[test]
    fn unitary_antipode_matches_direct_form() {
        let model = SUq2Model::new(0.45).unwrap();
        for two_s in 0..4u32 {
            let label = CorepLabel::Half(two_s);
            let b = random_block(two_s as usize + 1, 7 + two_s as u64);
            let via_default = model.unitary_antipode_block(&label, &b).unwrap();
            let via_signs = suq2_r_transform(&model, &label, &b).unwrap();
            assert!(via_default.max_abs_diff(&via_signs).unwrap() < 1e-12);
            let twice = suq2_r_transform(&model, &label, &via_signs).unwrap();
            assert!(b.max_abs_diff(&twice).unwrap() < 1e-12);
        }
    }

    #[test]
    fn product_pairing_reproduces_known_values() {
        let q = 0.5;
        let model = SUq2Model::new(q).unwrap();
        let s = CorepLabel::Half(1);
        let h_a_astar = model.haar_product_pairing(&s, (0, 0), &s, (1, 1)).unwrap();
        assert!((h_a_astar.re - 1.0 / (1.0 + q * q)).abs() < 1e-15);
        let h_astar_a = model.haar_product_pairing(&s, (1, 1), &s, (0, 0)).unwrap();
        assert!((h_astar_a.re - q * q / (1.0 + q * q)).abs() < 1e-15);
        let h_gg = model.haar_product_pairing(&s, (1, 0), &s, (0, 1)).unwrap();
        assert!((h_gg.re - (-q / (1.0 + q * q))).abs() < 1e-15);
    }

    #[test]
    fn star_pairing_weights_rows() {
        let q = 0.7;
        let model = SUq2Model::new(q).unwrap();
        let s = CorepLabel::Half(2);
        let d = model.quantum_dim(&s).unwrap();
        for i in 0..3usize {
            let got = model.haar_star_pairing(&s, (i, 1), &s, (i, 1)).unwrap();
            let want = q.powi(-(2 * i as i32 - 2)) / d;
            assert!((got.re - want).abs() < 1e-15);
        }
        let zero = model.haar_star_pairing(&s, (0, 1), &s, (1, 1)).unwrap();
        assert_eq!(zero.re, 0.0);
    }

    #[test]
    fn truncated_rho_satisfies_relations_below_the_edge() {
        let q = 0.5;
        let m = 12;
        let rep = truncated_rho(q, 1.1, m).unwrap();
        let a = &rep.alpha;
        let g = &rep.gamma;
        let comm = a * g - (g * a).map(|c| c * Complex64::new(q, 0.0));
        assert!(comm.iter().map(|c| c.norm()).fold(0.0, f64::max) < 1e-14);
        let left = rep.alpha_star() * a + rep.gamma_star() * g;
        let id = rep.identity();
        assert!((&left - &id).iter().map(|c| c.norm()).fold(0.0, f64::max) < 1e-14);
        let other = a * rep.alpha_star()
            + (g * rep.gamma_star()).map(|c| c * Complex64::new(q * q, 0.0));
        for n in 0..m - 1 {
            assert!((other[(n, n)] - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn truncated_pi_shifts_angular_modes() {
        let q = 0.4;
        let rep = truncated_pi(q, 3, 2).unwrap();
        let modes = 5;
        let idx = |k: usize, n: i64| k * modes + (n + 2) as usize;
        assert!((rep.gamma[(idx(1, 0), idx(1, 1))] - c(q, 0.0)).norm() < 1e-15);
        assert_eq!(rep.gamma.column(idx(1, -2)).iter().map(|v| v.norm()).sum::<f64>(), 0.0);
        let a = &rep.alpha;
        let g = &rep.gamma;
        let comm = a * g - (g * a).map(|v| v * c(q, 0.0));
        assert!(comm.iter().map(|v| v.norm()).fold(0.0, f64::max) < 1e-14);
    }

    #[test]
    fn depth_bound_matches_tail() {
        let q = 0.5;
        let tol = 1e-8;
        let m = required_truncation(q, tol);
        assert!(truncation_tail(q, m) <= tol);
        assert!(truncation_tail(q, m - 1) > tol);
    }

    #[test]
    fn corep_block_spin_one_reduces_to_generator_polynomials() {
        let q = 0.5;
        let rep = truncated_rho(q, 0.3, 10).unwrap();
        let blk = suq2_corep_block(&rep, 2).unwrap();
        assert_eq!(blk.len(), 3);
        let a2 = &rep.alpha * &rep.alpha;
        let corner = &blk[0][0] - &a2;
        assert!(corner.iter().map(|v| v.norm()).fold(0.0, f64::max) < 1e-14);
        let astar2 = rep.alpha_star() * rep.alpha_star();
        let other = &blk[2][2] - &astar2;
        assert!(other.iter().map(|v| v.norm()).fold(0.0, f64::max) < 1e-14);
        let e0 = {
            let mut v = DMatrix::<Complex64>::zeros(10, 1);
            v[(0, 0)] = c(1.0, 0.0);
            v
        };
        let mid = (e0.adjoint() * &blk[1][1] * &e0)[(0, 0)];
        assert!((mid - c(-q * q, 0.0)).norm() < 1e-13);
    }
}
