use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;

/// Largest dimension at which a block is materialized as a dense matrix.
/// Scalar blocks (multiples of the identity) have no size limit.
pub const DENSE_DIM_CAP: usize = 512;

/// Characteristic matrix of a functional on one corepresentation block.
///
/// Entry (j,k) stores `φ(u^(s)_jk)` in the model's fixed index order. Blocks
/// that are multiples of the identity are kept in scalar form, which is what
/// makes `O_N⁺` tractable: there the dimensions `n_s` grow exponentially in s
/// while every functional this crate constructs on `O_N⁺` is ad-invariant.
/// Scalar blocks optionally carry the value as an exact rational.
#[derive(Clone, Debug)]
pub enum BlockMatrix {
    Dense(DMatrix<Complex64>),
    Scalar {
        dim: BigUint,
        value: Complex64,
        exact: Option<BigRational>,
    },
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::INFINITY) / r.denom().to_f64().unwrap_or(f64::INFINITY)
}

impl BlockMatrix {
    pub fn identity(dim: BigUint) -> Self {
        BlockMatrix::Scalar {
            dim,
            value: Complex64::new(1.0, 0.0),
            exact: Some(BigRational::one()),
        }
    }

    pub fn zero(dim: BigUint) -> Self {
        BlockMatrix::Scalar {
            dim,
            value: Complex64::new(0.0, 0.0),
            exact: Some(BigRational::zero()),
        }
    }

    pub fn scalar(dim: BigUint, value: Complex64) -> Self {
        BlockMatrix::Scalar {
            dim,
            value,
            exact: None,
        }
    }

    /// Scalar block from an exact rational; the float value is derived.
    pub fn scalar_exact(dim: BigUint, exact: BigRational) -> Self {
        let value = Complex64::new(rational_to_f64(&exact), 0.0);
        BlockMatrix::Scalar {
            dim,
            value,
            exact: Some(exact),
        }
    }

    pub fn from_dense(m: DMatrix<Complex64>) -> Self {
        BlockMatrix::Dense(m)
    }

    pub fn dim(&self) -> BigUint {
        match self {
            BlockMatrix::Dense(m) => BigUint::from(m.nrows()),
            BlockMatrix::Scalar { dim, .. } => dim.clone(),
        }
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self, BlockMatrix::Scalar { .. })
    }

    pub fn scalar_value(&self) -> Option<Complex64> {
        match self {
            BlockMatrix::Scalar { value, .. } => Some(*value),
            BlockMatrix::Dense(_) => None,
        }
    }

    pub fn exact_value(&self) -> Option<&BigRational> {
        match self {
            BlockMatrix::Scalar { exact, .. } => exact.as_ref(),
            BlockMatrix::Dense(_) => None,
        }
    }

    /// Dense dimension if it fits in `usize` and under the cap.
    fn checked_usize_dim(&self) -> Result<usize> {
        let dim = self.dim();
        match dim.to_usize() {
            Some(n) if n <= DENSE_DIM_CAP => Ok(n),
            _ => Err(Error::BlockTooLarge {
                dim: dim.to_string(),
                cap: DENSE_DIM_CAP,
            }),
        }
    }

    pub fn to_dense(&self) -> Result<DMatrix<Complex64>> {
        match self {
            BlockMatrix::Dense(m) => Ok(m.clone()),
            BlockMatrix::Scalar { value, .. } => {
                let n = self.checked_usize_dim()?;
                Ok(DMatrix::from_diagonal_element(n, n, *value))
            }
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        match self {
            BlockMatrix::Dense(m) => m[(i, j)],
            BlockMatrix::Scalar { value, .. } => {
                if i == j {
                    *value
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
        }
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                label: "<block op>".into(),
                expected: self.dim().to_string(),
                got: other.dim().to_usize().unwrap_or(usize::MAX),
            });
        }
        Ok(())
    }

    /// Matrix product, which realizes convolution of functionals blockwise.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(match (self, other) {
            (
                BlockMatrix::Scalar {
                    dim,
                    value: a,
                    exact: ea,
                },
                BlockMatrix::Scalar {
                    value: b,
                    exact: eb,
                    ..
                },
            ) => BlockMatrix::Scalar {
                dim: dim.clone(),
                value: a * b,
                exact: match (ea, eb) {
                    (Some(x), Some(y)) => Some(x * y),
                    _ => None,
                },
            },
            (BlockMatrix::Scalar { value, .. }, BlockMatrix::Dense(m)) => {
                BlockMatrix::Dense(m.scale_complex(*value))
            }
            (BlockMatrix::Dense(m), BlockMatrix::Scalar { value, .. }) => {
                BlockMatrix::Dense(m.scale_complex(*value))
            }
            (BlockMatrix::Dense(a), BlockMatrix::Dense(b)) => BlockMatrix::Dense(a * b),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(match (self, other) {
            (
                BlockMatrix::Scalar {
                    dim,
                    value: a,
                    exact: ea,
                },
                BlockMatrix::Scalar {
                    value: b,
                    exact: eb,
                    ..
                },
            ) => BlockMatrix::Scalar {
                dim: dim.clone(),
                value: a + b,
                exact: match (ea, eb) {
                    (Some(x), Some(y)) => Some(x + y),
                    _ => None,
                },
            },
            (BlockMatrix::Scalar { value, .. }, BlockMatrix::Dense(m))
            | (BlockMatrix::Dense(m), BlockMatrix::Scalar { value, .. }) => {
                let mut out = m.clone();
                for i in 0..out.nrows() {
                    out[(i, i)] += value;
                }
                BlockMatrix::Dense(out)
            }
            (BlockMatrix::Dense(a), BlockMatrix::Dense(b)) => BlockMatrix::Dense(a + b),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        match self {
            BlockMatrix::Dense(m) => BlockMatrix::Dense(m.scale_complex(c)),
            BlockMatrix::Scalar { dim, value, exact } => BlockMatrix::Scalar {
                dim: dim.clone(),
                value: value * c,
                exact: if c.im == 0.0 {
                    match (exact, BigRational::from_float(c.re)) {
                        (Some(x), Some(cr)) => Some(x * cr),
                        _ => None,
                    }
                } else {
                    None
                },
            },
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        match self {
            BlockMatrix::Dense(m) => BlockMatrix::Dense(m.adjoint()),
            BlockMatrix::Scalar { dim, value, exact } => BlockMatrix::Scalar {
                dim: dim.clone(),
                value: value.conj(),
                exact: exact.clone(),
            },
        }
    }

    pub fn transpose(&self) -> Self {
        match self {
            BlockMatrix::Dense(m) => BlockMatrix::Dense(m.transpose()),
            s @ BlockMatrix::Scalar { .. } => s.clone(),
        }
    }

    pub fn conjugate(&self) -> Self {
        match self {
            BlockMatrix::Dense(m) => BlockMatrix::Dense(m.map(|c| c.conj())),
            BlockMatrix::Scalar { dim, value, exact } => BlockMatrix::Scalar {
                dim: dim.clone(),
                value: value.conj(),
                exact: exact.clone(),
            },
        }
    }

    /// `exp(t·M)`. Exact for scalar blocks; Padé scaling-and-squaring for dense.
    pub fn exp_scaled(&self, t: f64) -> Self {
        match self {
            BlockMatrix::Scalar { dim, value, .. } => BlockMatrix::Scalar {
                dim: dim.clone(),
                value: (value * t).exp(),
                exact: None,
            },
            BlockMatrix::Dense(m) => {
                BlockMatrix::Dense(linalg::expm(&m.scale_complex(Complex64::new(t, 0.0))))
            }
        }
    }

    pub fn max_abs(&self) -> f64 {
        match self {
            BlockMatrix::Dense(m) => m.iter().map(|c| c.norm()).fold(0.0, f64::max),
            BlockMatrix::Scalar { value, .. } => value.norm(),
        }
    }

    pub fn has_non_finite(&self) -> bool {
        match self {
            BlockMatrix::Dense(m) => m.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()),
            BlockMatrix::Scalar { value, .. } => !value.re.is_finite() || !value.im.is_finite(),
        }
    }

    /// Maximum entrywise distance; both blocks must have the same dimension.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_dim(other)?;
        Ok(match (self, other) {
            (BlockMatrix::Scalar { value: a, .. }, BlockMatrix::Scalar { value: b, .. }) => {
                (a - b).norm()
            }
            _ => {
                let a = self.to_dense()?;
                let b = other.to_dense()?;
                (&a - &b).iter().map(|c| c.norm()).fold(0.0, f64::max)
            }
        })
    }
}

trait ScaleComplex {
    fn scale_complex(&self, c: Complex64) -> DMatrix<Complex64>;
}

impl ScaleComplex for DMatrix<Complex64> {
    fn scale_complex(&self, c: Complex64) -> DMatrix<Complex64> {
        self.map(|x| x * c)
    }
}
