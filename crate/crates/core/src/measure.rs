use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Real polynomial with coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    pub coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial x^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = 1.0;
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(&c) if c == 0.0) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0.0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, a: f64) -> Self {
        Polynomial::new(self.coeffs.iter().map(|&c| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    /// Division by the linear factor `x - c`: returns `(quotient, remainder)`
    /// with `p(x) = (x - c) q(x) + r`. The remainder equals `p(c)`.
    pub fn divide_linear(&self, c: f64) -> (Self, f64) {
        if self.coeffs.is_empty() {
            return (Polynomial::zero(), 0.0);
        }
        let n = self.coeffs.len();
        let mut q = vec![0.0; n.saturating_sub(1)];
        let mut carry = 0.0;
        for k in (0..n).rev() {
            let coeff = self.coeffs[k] + c * carry;
            if k == 0 {
                return (Polynomial::new(q), coeff);
            }
            q[k - 1] = coeff;
            carry = coeff;
        }
        unreachable!()
    }

    /// Definite integral over `[a, b]`.
    pub fn integrate(&self, a: f64, b: f64) -> f64 {
        let anti = |x: f64| {
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c * x.powi(k as i32 + 1) / (k as f64 + 1.0))
                .sum::<f64>()
        };
        anti(b) - anti(a)
    }
}

/// Gauss-Legendre nodes and weights on `[a, b]`.
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n);
    let m = n as f64;
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            if n == 1 {
                p1 = x;
            }
            for k in 1..n {
                let p2 = ((2.0 * k as f64 + 1.0) * x * p1 - k as f64 * p0) / (k as f64 + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            let step = p1 / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        out.push((mid + half * x, half * w));
    }
    out.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    out
}

#[derive(Clone, Debug)]
pub struct Atom {
    pub location: f64,
    pub mass: f64,
    pub exact: Option<(BigRational, BigRational)>,
}

impl Atom {
    pub fn new(location: f64, mass: f64) -> Self {
        Atom {
            location,
            mass,
            exact: None,
        }
    }

    pub fn exact(location: BigRational, mass: BigRational) -> Self {
        Atom {
            location: location.to_f64().unwrap(),
            mass: mass.to_f64().unwrap(),
            exact: Some((location, mass)),
        }
    }
}

/// Finite positive measure on a closed interval, given by point masses plus a
/// polynomial density part.
#[derive(Clone, Debug)]
pub struct IntervalMeasure {
    pub lo: f64,
    pub hi: f64,
    pub atoms: Vec<Atom>,
    pub density: Option<Polynomial>,
    pub quad_nodes: usize,
}

impl IntervalMeasure {
    pub fn new(
        lo: f64,
        hi: f64,
        atoms: Vec<Atom>,
        density: Option<Polynomial>,
    ) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::InvalidParameter(format!(
                "measure support [{lo}, {hi}] is not a proper interval"
            )));
        }
        for a in &atoms {
            if a.location < lo - 1e-12 || a.location > hi + 1e-12 {
                return Err(Error::InvalidParameter(format!(
                    "atom at {} lies outside [{lo}, {hi}]",
                    a.location
                )));
            }
            if a.mass < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "atom at {} has negative mass {}",
                    a.location, a.mass
                )));
            }
        }
        if let Some(d) = &density {
            for k in 0..=512 {
                let x = lo + (hi - lo) * k as f64 / 512.0;
                if d.eval(x) < -1e-9 {
                    return Err(Error::InvalidParameter(format!(
                        "density is negative at x = {x}"
                    )));
                }
            }
        }
        Ok(IntervalMeasure {
            lo,
            hi,
            atoms,
            density,
            quad_nodes: 256,
        })
    }

    pub fn point_masses(lo: f64, hi: f64, atoms: Vec<Atom>) -> Result<Self> {
        IntervalMeasure::new(lo, hi, atoms, None)
    }

    pub fn total_mass(&self) -> f64 {
        self.integrate_poly(&Polynomial::constant(1.0))
    }

    /// Mass of the atom sitting exactly at `x`, zero if there is none.
    pub fn atom_mass_at(&self, x: f64) -> f64 {
        self.atoms
            .iter()
            .filter(|a| (a.location - x).abs() < 1e-12)
            .map(|a| a.mass)
            .sum()
    }

    /// Integral of a polynomial, exact up to float rounding: the density part
    /// is integrated through the antiderivative of the product polynomial.
    pub fn integrate_poly(&self, p: &Polynomial) -> f64 {
        let mut total: f64 = self.atoms.iter().map(|a| a.mass * p.eval(a.location)).sum();
        if let Some(d) = &self.density {
            total += d.mul(p).integrate(self.lo, self.hi);
        }
        total
    }

    /// Integral of an arbitrary function; the density part goes through
    /// Gauss-Legendre quadrature with `quad_nodes` nodes.
    pub fn integrate_fn<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let mut total: f64 = self.atoms.iter().map(|a| a.mass * f(a.location)).sum();
        if let Some(d) = &self.density {
            for (x, w) in gauss_legendre(self.quad_nodes, self.lo, self.hi) {
                total += w * d.eval(x) * f(x);
            }
        }
        total
    }

    /// Exact rational integral of a rational-coefficient polynomial, available
    /// when the measure is purely atomic with exact atoms.
    pub fn integrate_poly_exact(&self, coeffs: &[BigRational]) -> Option<BigRational> {
        if self.density.is_some() {
            return None;
        }
        let mut total = BigRational::zero();
        for a in &self.atoms {
            let (loc, mass) = a.exact.as_ref()?;
            let mut val = BigRational::zero();
            for c in coeffs.iter().rev() {
                val = val * loc + c;
            }
            total += mass * val;
        }
        Some(total)
    }
}
