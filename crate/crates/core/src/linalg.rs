use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

fn one_norm(m: &DMatrix<Complex64>) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|c| c.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Matrix exponential by Pade approximation of degree 13 with scaling and
/// squaring, preceded by a trace shift. Intended for the modest block sizes
/// produced by corepresentation truncation.
pub fn expm(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm needs a square matrix");
    if n == 0 {
        return a.clone();
    }
    if n == 1 {
        return DMatrix::from_element(1, 1, a[(0, 0)].exp());
    }

    let mu = a.diagonal().sum() / Complex64::new(n as f64, 0.0);
    let mut m = a.clone();
    for i in 0..n {
        m[(i, i)] -= mu;
    }

    const THETA_13: f64 = 5.371920351148152;
    let norm = one_norm(&m);
    let s = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil().max(0.0) as u32
    } else {
        0
    };
    if s > 0 {
        let inv = Complex64::new((0.5f64).powi(s as i32), 0.0);
        m = m.map(|c| c * inv);
    }

    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let bc = |k: usize| Complex64::new(B[k], 0.0);
    let id = DMatrix::<Complex64>::identity(n, n);

    let m2 = &m * &m;
    let m4 = &m2 * &m2;
    let m6 = &m2 * &m4;

    let w1 = &m6 * bc(13) + &m4 * bc(11) + &m2 * bc(9);
    let w2 = &m6 * bc(7) + &m4 * bc(5) + &m2 * bc(3) + &id * bc(1);
    let u = &m * (&m6 * &w1 + w2);

    let z1 = &m6 * bc(12) + &m4 * bc(10) + &m2 * bc(8);
    let z2 = &m6 * bc(6) + &m4 * bc(4) + &m2 * bc(2) + &id * bc(0);
    let v = &m6 * &z1 + z2;

    let lhs = &v - &u;
    let rhs = &v + &u;
    let mut x = lhs
        .lu()
        .solve(&rhs)
        .expect("Pade denominator is nonsingular for scaled input");

    for _ in 0..s {
        x = &x * &x;
    }

    let scale = mu.exp();
    x.map(|c| c * scale)
}

/// Eigenvalues of a general complex matrix via its Schur form.
pub fn eig_complex(m: &DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![m[(0, 0)]]);
    }
    let schur = nalgebra::linalg::Schur::try_new(m.clone(), 1e-14, 10000)
        .ok_or(Error::EigenFailure { dim: n })?;
    let (_, t) = schur.unpack();
    Ok((0..n).map(|i| t[(i, i)]).collect())
}

/// Eigenvalues of a hermitian complex matrix, returned in ascending order.
pub fn eig_hermitian(m: &DMatrix<Complex64>) -> Vec<f64> {
    let n = m.nrows();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![m[(0, 0)].re];
    }
    let sym = nalgebra::linalg::SymmetricEigen::new(m.clone());
    let mut vals: Vec<f64> = sym.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

pub fn is_hermitian_matrix(m: &DMatrix<Complex64>, tol: f64) -> bool {
    let scale = m.iter().map(|c| c.norm()).fold(0.0, f64::max).max(1.0);
    let adj = m.adjoint();
    (m - adj).iter().map(|c| c.norm()).fold(0.0, f64::max) <= tol * scale
}

/// Sorts eigenvalues canonically: by real part, then imaginary part.
pub fn sort_complex(vals: &mut [Complex64]) {
    vals.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
}

pub fn column_vector(entries: &[Complex64]) -> DVector<Complex64> {
    DVector::from_column_slice(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exponential_of_nilpotent_block() {
        let a = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let e = expm(&a);
        assert!((e[(0, 0)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((e[(0, 1)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((e[(1, 0)]).norm() < 1e-15);
    }

    #[test]
    fn exponential_of_rotation_generator() {
        let a = DMatrix::from_row_slice(
            2,
            2,
            &[c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        );
        let t = 1.3f64;
        let e = expm(&a.map(|x| x * c(t, 0.0)));
        assert!((e[(0, 0)] - c(t.cos(), 0.0)).norm() < 1e-13);
        assert!((e[(1, 0)] - c(t.sin(), 0.0)).norm() < 1e-13);
    }

    #[test]
    fn exponential_handles_large_scaled_input() {
        let a = DMatrix::from_row_slice(
            2,
            2,
            &[c(-40.0, 0.0), c(3.0, 1.0), c(0.0, 0.0), c(-35.0, 0.0)],
        );
        let e = expm(&a);
        let want00 = (-40.0f64).exp();
        assert!((e[(0, 0)].re - want00).abs() < 1e-12 * want00.max(1.0));
        let want01 = c(3.0, 1.0) * ((-35.0f64).exp() - (-40.0f64).exp()) / c(5.0, 0.0);
        assert!((e[(0, 1)] - want01).norm() < 1e-15);
    }

    #[test]
    fn schur_recovers_complex_spectrum() {
        let a = DMatrix::from_row_slice(
            3,
            3,
            &[
                c(1.0, 1.0),
                c(2.0, 0.0),
                c(0.0, -1.0),
                c(0.0, 0.0),
                c(-1.0, 0.5),
                c(4.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(2.0, -2.0),
            ],
        );
        let mut vals = eig_complex(&a).unwrap();
        sort_complex(&mut vals);
        let mut want = vec![c(1.0, 1.0), c(-1.0, 0.5), c(2.0, -2.0)];
        sort_complex(&mut want);
        for (g, w) in vals.iter().zip(&want) {
            assert!((g - w).norm() < 1e-12);
        }
    }

    #[test]
    fn hermitian_route_matches_schur() {
        let a = DMatrix::from_row_slice(
            2,
            2,
            &[c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(-1.0, 0.0)],
        );
        assert!(is_hermitian_matrix(&a, 1e-14));
        let herm = eig_hermitian(&a);
        let mut schur = eig_complex(&a).unwrap();
        sort_complex(&mut schur);
        for (h, s) in herm.iter().zip(&schur) {
            assert!((h - s.re).abs() < 1e-12 && s.im.abs() < 1e-12);
        }
    }
}
