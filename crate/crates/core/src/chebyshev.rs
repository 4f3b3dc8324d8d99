use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dilated Chebyshev polynomials of the second kind:
/// `U_0 = 1`, `U_1 = x`, `U_{s+1}(x) = x U_s(x) - U_{s-1}(x)`,
/// so that `U_s(2 cos t) = sin((s+1)t) / sin(t)`.
pub fn chebyshev_u(s: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, x);
    if s == 0 {
        return prev;
    }
    for _ in 1..s {
        let next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Derivative `U'_s(x)`, via `U'_{s+1} = U_s + x U'_s - U'_{s-1}`.
pub fn chebyshev_u_prime(s: u32, x: f64) -> f64 {
    let (mut u_prev, mut u_cur) = (1.0, x);
    let (mut d_prev, mut d_cur) = (0.0, 1.0);
    if s == 0 {
        return d_prev;
    }
    for _ in 1..s {
        let u_next = x * u_cur - u_prev;
        let d_next = u_cur + x * d_cur - d_prev;
        u_prev = u_cur;
        u_cur = u_next;
        d_prev = d_cur;
        d_cur = d_next;
    }
    d_cur
}

pub fn chebyshev_u_rational(s: u32, x: &BigRational) -> BigRational {
    let (mut prev, mut cur) = (BigRational::one(), x.clone());
    if s == 0 {
        return prev;
    }
    for _ in 1..s {
        let next = x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

pub fn chebyshev_u_prime_rational(s: u32, x: &BigRational) -> BigRational {
    let (mut u_prev, mut u_cur) = (BigRational::one(), x.clone());
    let (mut d_prev, mut d_cur) = (BigRational::zero(), BigRational::one());
    if s == 0 {
        return d_prev;
    }
    for _ in 1..s {
        let u_next = x * &u_cur - &u_prev;
        let d_next = &u_cur + x * &d_cur - &d_prev;
        u_prev = u_cur;
        u_cur = u_next;
        d_prev = d_cur;
        d_cur = d_next;
    }
    d_cur
}

/// `U_s(n)` as an exact natural number, valid for integer `n >= 2` where the
/// values are strictly positive and strictly increasing in s.
pub fn chebyshev_u_nat(s: u32, n: u32) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "chebyshev_u_nat requires n >= 2, got {n}"
        )));
    }
    let x = BigInt::from(n);
    let (mut prev, mut cur) = (BigInt::one(), x.clone());
    if s == 0 {
        return Ok(prev.to_biguint().unwrap());
    }
    for _ in 1..s {
        let next = &x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    debug_assert!(cur.is_positive());
    Ok(cur.to_biguint().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn values_at_two_are_linear() {
        for s in 0..60u32 {
            let x = BigRational::from(BigInt::from(2));
            assert_eq!(
                chebyshev_u_rational(s, &x),
                BigRational::from(BigInt::from(s + 1))
            );
        }
    }

    #[test]
    fn derivative_at_two_is_tetrahedral() {
        for s in 0..40u64 {
            let x = BigRational::from(BigInt::from(2));
            let want = BigRational::new(
                BigInt::from(s * (s + 1) * (s + 2)),
                BigInt::from(6),
            );
            assert_eq!(chebyshev_u_prime_rational(s as u32, &x), want);
        }
    }

    #[test]
    fn trigonometric_form_inside_the_spectrum() {
        for s in 0..25u32 {
            for k in 1..7 {
                let t = 0.4 * k as f64;
                let want = ((s as f64 + 1.0) * t).sin() / t.sin();
                let got = chebyshev_u(s, 2.0 * t.cos());
                assert!((got - want).abs() < 1e-9, "s={s} t={t}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn float_matches_exact_for_small_degree() {
        for n in 3..=5u32 {
            for s in 0..=30u32 {
                let exact = chebyshev_u_nat(s, n).unwrap();
                let f = chebyshev_u(s, n as f64);
                let e = exact.to_string().parse::<f64>().unwrap();
                assert!((f - e).abs() / e.max(1.0) < 1e-10, "s={s} n={n}");
            }
        }
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        for s in 1..15u32 {
            let x = 3.3;
            let h = 1e-6;
            let want = (chebyshev_u(s, x + h) - chebyshev_u(s, x - h)) / (2.0 * h);
            let got = chebyshev_u_prime(s, x);
            assert!((got - want).abs() / want.abs().max(1.0) < 1e-5);
        }
    }
}
