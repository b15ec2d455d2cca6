//! Minimal polynomials: `psi_n` for `2cos(2pi/n)`, `phi_n` for
//! `4sin^2(pi/n)`, the squared factors `Phi_n`, and the spread factorization
//! `Z_n = prod_{d|n} Phi_d`.
//!
//! `psi_n` is built exactly by the symmetric reduction of `C_n` into the
//! Lucas basis; the floating-point root products exist only as oracles.

use crate::chebylucas::{lucas_combination, palindromic_to_lucas, spread};
use crate::cyclotomic::cyclotomic;
use crate::numtheory::{divisors, nu};
use crate::polyz::IntPoly;
use num_bigint::BigInt;
use num_integer::gcd;
use num_traits::{Signed, ToPrimitive};
use std::f64::consts::PI;
use thiserror::Error;

/// Minimal polynomial of `2cos(2pi/n)`: monic, degree `totient(n)/2`.
///
/// # Panics
/// Panics for `n < 3` (the construction needs `C_n` palindromic of even
/// degree).
pub fn psi(n: u64) -> IntPoly {
    assert!(n >= 3, "psi: n must be at least 3");
    let c = palindromic_to_lucas(&cyclotomic(n))
        .expect("cyclotomic polynomial is palindromic of even degree for n >= 3");
    lucas_combination(&c)
}

/// Minimal polynomial of `4sin^2(pi/n)` with positive constant term:
/// `phi_1 = x`, `phi_2 = 4 - x`, and `psi_n(2 - x)` for `n >= 3`.
///
/// # Panics
/// Panics if the constant term of the result is not positive for `n >= 3`;
/// the construction is expected to produce it automatically, so a violation
/// is an upstream bug, never silently sign-flipped.
pub fn phi_min(n: u64) -> IntPoly {
    match n {
        0 => panic!("phi_min: n must be positive"),
        1 => IntPoly::x(),
        2 => IntPoly::from_i64(&[4, -1]),
        _ => {
            let p = psi(n).compose_linear(2, -1);
            assert!(
                p.coeff(0).is_positive(),
                "normalization violated: phi_{n} has non-positive constant term"
            );
            p
        }
    }
}

/// The spread-factorization factor `Phi_n`: `Phi_1 = x`, `Phi_2 = 4 - x`,
/// and `phi_n^2` for `n >= 3`.
pub fn phi_big(n: u64) -> IntPoly {
    match n {
        0 => panic!("phi_big: n must be positive"),
        1 | 2 => phi_min(n),
        _ => {
            let p = phi_min(n);
            p.mul(&p)
        }
    }
}

/// Exact evaluation of `phi_n` at an integer point, without constructing
/// the polynomial: `phi_n(k) = psi_n(2-k) = c[0] + sum c[j] L_j(2-k)` with
/// the `c[j]` read off `C_n` and the Lucas numbers advanced by recurrence.
///
/// Agrees with `phi_min(n).eval_i64(k)`; this route keeps large-index
/// sweeps linear in `totient(n)`.
pub fn phi_eval(n: u64, k: i64) -> BigInt {
    match n {
        0 => panic!("phi_eval: n must be positive"),
        1 => BigInt::from(k),
        2 => BigInt::from(4 - k),
        _ => {
            let c = cyclotomic(n);
            let coeffs = c.coeffs();
            let m = (coeffs.len() - 1) / 2;
            let y = BigInt::from(2 - k);
            let mut sum = coeffs[m].clone();
            let mut prev = BigInt::from(2); // L_0(y)
            let mut cur = y.clone(); // L_1(y)
            for j in 1..=m {
                sum += &coeffs[m + j] * &cur;
                let next = &y * &cur - prev;
                prev = cur;
                cur = next;
            }
            sum
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("Z_{n} != prod of Phi_d over d | {n}: first mismatch at coefficient {index}")]
pub struct SpreadFactorizationFailure {
    pub n: u64,
    pub index: usize,
}

/// Checks `Z_n(x) = prod_{d|n} Phi_d(x)` as exact polynomial equality.
pub fn check_spread_factorization(n: u64) -> Result<(), SpreadFactorizationFailure> {
    assert!(n >= 1);
    let mut prod = IntPoly::one();
    for d in divisors(n) {
        prod = prod.mul(&phi_big(d));
    }
    let z = spread(n);
    let len = z.coeffs().len().max(prod.coeffs().len());
    match (0..len).find(|&k| z.coeff(k) != prod.coeff(k)) {
        None => Ok(()),
        Some(index) => Err(SpreadFactorizationFailure { n, index }),
    }
}

/// Float coefficients of `prod_{0<j<n/2, gcd(j,n)=1} (4sin^2(j pi/n) - x)`,
/// ascending degree. Oracle for `phi_min`; never used to build it.
pub fn phi_float_oracle(n: u64) -> Vec<f64> {
    assert!(n >= 3, "phi_float_oracle: n must be at least 3");
    let mut coeffs = vec![1.0f64];
    for j in 1..n.div_ceil(2) {
        if 2 * j == n || gcd(j, n) != 1 {
            continue;
        }
        let root = 4.0 * ((j as f64) * PI / (n as f64)).sin().powi(2);
        // multiply by (root - x)
        let mut next = vec![0.0; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i] += root * c;
            next[i + 1] -= c;
        }
        coeffs = next;
    }
    coeffs
}

/// `prod_{0<k<n, gcd(k,n)=1} 2 sin(k pi / n)` in floating point.
pub fn sine_product(n: u64) -> f64 {
    assert!(n >= 2);
    (1..n)
        .filter(|&k| gcd(k, n) == 1)
        .map(|k| 2.0 * ((k as f64) * PI / (n as f64)).sin())
        .product()
}

/// True iff the sine product agrees with `nu(n)` within `1e-8` relative.
pub fn sine_product_check(n: u64) -> bool {
    let p = sine_product(n);
    let v = nu(n) as f64;
    (p - v).abs() <= 1e-8 * v
}

/// Maximum relative deviation between the float oracle coefficients and the
/// exact `phi_min(n)` coefficients.
pub fn oracle_deviation(n: u64) -> f64 {
    let exact = phi_min(n);
    let approx = phi_float_oracle(n);
    assert_eq!(exact.coeffs().len(), approx.len());
    exact
        .coeffs()
        .iter()
        .zip(&approx)
        .map(|(e, &a)| {
            let e = e.to_f64().unwrap();
            (e - a).abs() / e.abs().max(1.0)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_examples() {
        assert_eq!(psi(3), IntPoly::from_i64(&[1, 1]));
        assert_eq!(psi(4), IntPoly::x());
        assert_eq!(psi(5), IntPoly::from_i64(&[-1, 1, 1]));
        // frozen from the float root product over 2cos(2 pi j/7), j in {1,2,3}
        assert_eq!(psi(7), IntPoly::from_i64(&[-1, -2, 1, 1]));
        assert_eq!(psi(9), IntPoly::from_i64(&[1, -3, 0, 1]));
    }

    #[test]
    #[should_panic]
    fn psi_rejects_small_n() {
        psi(2);
    }

    #[test]
    fn phi_min_examples() {
        assert_eq!(phi_min(1), IntPoly::x());
        assert_eq!(phi_min(2), IntPoly::from_i64(&[4, -1]));
        assert_eq!(phi_min(3), IntPoly::from_i64(&[3, -1]));
        assert_eq!(phi_min(4), IntPoly::from_i64(&[2, -1]));
        assert_eq!(phi_min(5), IntPoly::from_i64(&[5, -5, 1]));
        assert_eq!(phi_min(7), IntPoly::from_i64(&[7, -14, 7, -1]));
        assert_eq!(phi_min(9), IntPoly::from_i64(&[3, -9, 6, -1]));
        assert_eq!(phi_min(12), IntPoly::from_i64(&[1, -4, 1]));
    }

    #[test]
    fn phi_big_examples() {
        assert_eq!(phi_big(1), IntPoly::x());
        assert_eq!(phi_big(4), IntPoly::from_i64(&[4, -4, 1]));
        assert_eq!(phi_big(6), IntPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn phi_eval_matches_polynomial() {
        for n in 1..=200u64 {
            let p = phi_min(n);
            for k in 0..=4i64 {
                assert_eq!(phi_eval(n, k), p.eval_i64(k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn spread_factorization_examples() {
        assert!(check_spread_factorization(1).is_ok());
        assert!(check_spread_factorization(4).is_ok());
        assert!(check_spread_factorization(6).is_ok());
        for n in 1..=60 {
            assert!(check_spread_factorization(n).is_ok(), "n={n}");
        }
    }

    #[test]
    fn float_oracle_examples() {
        let o5 = phi_float_oracle(5);
        assert!((o5[0] - 5.0).abs() < 1e-9);
        assert!((o5[1] + 5.0).abs() < 1e-9);
        assert!((o5[2] - 1.0).abs() < 1e-9);
        let o4 = phi_float_oracle(4);
        assert!((o4[0] - 2.0).abs() < 1e-9 && (o4[1] + 1.0).abs() < 1e-9);
        let o12 = phi_float_oracle(12);
        assert!((o12[0] - 1.0).abs() < 1e-9);
        assert!((o12[1] + 4.0).abs() < 1e-9);
        assert!((o12[2] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn oracle_deviation_small() {
        for n in 3..=100 {
            assert!(oracle_deviation(n) <= 1e-6, "n={n}");
        }
    }

    #[test]
    fn sine_product_examples() {
        assert!((sine_product(9) - 3.0).abs() < 1e-8);
        assert!((sine_product(6) - 1.0).abs() < 1e-8);
        assert!((sine_product(4) - 2.0).abs() < 1e-8);
        for n in 2..=100 {
            assert!(sine_product_check(n), "n={n}");
        }
    }

    #[test]
    fn phi_degree_and_leading_sign() {
        use crate::numtheory::totient;
        use num_bigint::BigInt;
        for n in 3..=300u64 {
            let p = phi_min(n);
            let m = (totient(n) / 2) as usize;
            assert_eq!(p.degree(), Some(m), "n={n}");
            let expected = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(*p.leading().unwrap(), BigInt::from(expected), "n={n}");
        }
    }
}
