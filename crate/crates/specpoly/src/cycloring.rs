//! Exact arithmetic in `Z[zeta_12]` and the normalized cyclotomic values
//! `w(n, z) = C_n(z) / z^{totient(n)/2}` at the roots of unity
//! `-1, i, omega = zeta_3, sigma = zeta_6`.
//!
//! A single ring covers all four units: `-1 = zeta^6`, `i = zeta^3`,
//! `omega = zeta^4`, `sigma = zeta^2` with `zeta = zeta_12`. Elements are
//! kept in the power basis `{1, zeta, zeta^2, zeta^3}` reduced by the
//! minimal relation `zeta^4 = zeta^2 - 1`.

use crate::cyclotomic::cyclotomic;
use crate::minpoly::phi_min;
use crate::numtheory::{nu, totient};
use crate::polyz::IntPoly;
use num_bigint::BigInt;
use num_integer::gcd;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

/// Element of `Z[zeta_12]` in canonical coordinates
/// `a0 + a1 zeta + a2 zeta^2 + a3 zeta^3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc12 {
    c: [BigInt; 4],
}

impl Cyc12 {
    pub fn new(a0: BigInt, a1: BigInt, a2: BigInt, a3: BigInt) -> Self {
        Cyc12 { c: [a0, a1, a2, a3] }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        Cyc12::new(a.into(), BigInt::zero(), BigInt::zero(), BigInt::zero())
    }

    pub fn zero() -> Self {
        Cyc12::from_int(0)
    }

    pub fn one() -> Self {
        Cyc12::from_int(1)
    }

    pub fn zeta() -> Self {
        Cyc12::new(0.into(), 1.into(), 0.into(), 0.into())
    }

    pub fn coords(&self) -> &[BigInt; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// The rational integer this element embeds, if the three higher
    /// coordinates vanish.
    pub fn as_int(&self) -> Option<&BigInt> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &Cyc12) -> Cyc12 {
        Cyc12 {
            c: std::array::from_fn(|i| &self.c[i] + &other.c[i]),
        }
    }

    pub fn sub(&self, other: &Cyc12) -> Cyc12 {
        Cyc12 {
            c: std::array::from_fn(|i| &self.c[i] - &other.c[i]),
        }
    }

    pub fn neg(&self) -> Cyc12 {
        Cyc12 {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }

    /// Exact product, reduced via `zeta^4 = zeta^2 - 1` (hence
    /// `zeta^5 = zeta^3 - zeta` and `zeta^6 = -1`).
    pub fn mul(&self, other: &Cyc12) -> Cyc12 {
        let mut raw = [
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
        ];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let [r0, r1, r2, r3, r4, r5, r6] = raw;
        Cyc12::new(r0 - &r4 - r6, r1 - &r5, r2 + r4, r3 + r5)
    }

    pub fn pow(&self, mut e: u64) -> Cyc12 {
        let mut base = self.clone();
        let mut acc = Cyc12::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Debug for Cyc12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cyc12({}, {}, {}, {})",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl fmt::Display for Cyc12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

/// A root of unity in `Z[zeta_12]`, tracked as a power of `zeta_12` so that
/// inverses come from the finite order rather than ring division.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnitPoint {
    exp: u8, // power of zeta_12, 0..12
}

impl UnitPoint {
    pub const ONE: UnitPoint = UnitPoint { exp: 0 };
    pub const SIGMA: UnitPoint = UnitPoint { exp: 2 };
    pub const I: UnitPoint = UnitPoint { exp: 3 };
    pub const OMEGA: UnitPoint = UnitPoint { exp: 4 };
    pub const MINUS_ONE: UnitPoint = UnitPoint { exp: 6 };

    pub fn zeta_power(exp: u64) -> UnitPoint {
        UnitPoint {
            exp: (exp % 12) as u8,
        }
    }

    /// Multiplicative order, a divisor of 12.
    pub fn order(self) -> u64 {
        12 / gcd(12, self.exp as u64)
    }

    pub fn value(self) -> Cyc12 {
        Cyc12::zeta().pow(self.exp as u64)
    }

    pub fn pow(self, k: u64) -> UnitPoint {
        UnitPoint::zeta_power(self.exp as u64 * (k % 12))
    }

    pub fn name(self) -> &'static str {
        match self.exp {
            0 => "1",
            2 => "sigma",
            3 => "i",
            4 => "omega",
            6 => "-1",
            _ => "zeta^k",
        }
    }
}

/// `lambda(k) = (2 - k + sqrt(k^2 - 4k))/2` at the five integer points,
/// principal branch: `1, sigma, i, omega, -1` for `k = 0..4`.
pub fn lambda_of(k: u8) -> UnitPoint {
    match k {
        0 => UnitPoint::ONE,
        1 => UnitPoint::SIGMA,
        2 => UnitPoint::I,
        3 => UnitPoint::OMEGA,
        4 => UnitPoint::MINUS_ONE,
        _ => panic!("lambda_of: k must be in 0..=4"),
    }
}

/// Horner evaluation of an integer polynomial at a ring element, exact.
pub fn poly_at(p: &IntPoly, z: &Cyc12) -> Cyc12 {
    let mut acc = Cyc12::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.c[0] += c;
    }
    acc
}

/// `w(n, z) = C_n(z) / z^{totient(n)/2}`, the division realized as
/// multiplication by `z^{-1} = z^{order-1}`.
///
/// `z = 1` needs no denominator: `w(n, 1) = C_n(1)`. The only odd-totient
/// index admitted is `w(2, -1) = 0` (where `C_2(-1) = 0` regardless of the
/// half power).
///
/// # Panics
/// Panics when `totient(n)` is odd apart from that special case.
pub fn w_value(n: u64, z: UnitPoint) -> Cyc12 {
    assert!(n >= 1);
    if z == UnitPoint::ONE {
        return Cyc12::from_int(cyclotomic(n).eval_i64(1));
    }
    if n == 2 && z == UnitPoint::MINUS_ONE {
        return Cyc12::zero();
    }
    let phi = totient(n);
    assert!(
        phi % 2 == 0,
        "w_value: totient({n}) is odd; w(n, z) is undefined"
    );
    let half = phi / 2;
    let ord = z.order();
    let inverse_half = z.pow(ord - half % ord);
    poly_at(&cyclotomic(n), &z.value()).mul(&inverse_half.value())
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RingCheckFailure {
    #[error("w({p}*{n}, {unit}) = w({n}, {unit}^{p}) fails: lhs {lhs}, rhs {rhs}")]
    SubstitutionRule {
        p: u64,
        n: u64,
        unit: &'static str,
        lhs: Cyc12,
        rhs: Cyc12,
    },
    #[error("w({p}*{n}, {unit}) w({n}, {unit}) = w({n}, {unit}^{p}) fails: lhs {lhs}, rhs {rhs}")]
    CoprimeRule {
        p: u64,
        n: u64,
        unit: &'static str,
        lhs: Cyc12,
        rhs: Cyc12,
    },
    #[error("phi_{n}({k}) = w({n}, lambda({k})) fails: phi value {phi_value}, w value {w_value}")]
    ValueIdentity {
        n: u64,
        k: u8,
        phi_value: BigInt,
        w_value: Cyc12,
    },
    #[error("w({n}, lambda({k})) = {w_value} is not a rational integer")]
    NotIntegral { n: u64, k: u8, w_value: Cyc12 },
}

/// Checks the `w` substitution identities: `w(pn, z) = w(n, z^p)` when
/// `p | n`, and multiplicatively `w(pn, z) w(n, z) = w(n, z^p)` when `p`
/// and `n` are coprime (avoiding ring division).
pub fn check_lemma3(p: u64, n: u64, z: UnitPoint) -> Result<(), RingCheckFailure> {
    assert!(n >= 3, "check_lemma3: n must be at least 3");
    let rhs = w_value(n, z.pow(p));
    if n % p == 0 {
        let lhs = w_value(p * n, z);
        if lhs != rhs {
            return Err(RingCheckFailure::SubstitutionRule {
                p,
                n,
                unit: z.name(),
                lhs,
                rhs,
            });
        }
    } else {
        let lhs = w_value(p * n, z).mul(&w_value(n, z));
        if lhs != rhs {
            return Err(RingCheckFailure::CoprimeRule {
                p,
                n,
                unit: z.name(),
                lhs,
                rhs,
            });
        }
    }
    Ok(())
}

/// Checks `phi_n(k) = w(n, lambda(k))` for `k` in `{0..4}`, requiring the
/// `w` value to be a rational integer. For `k = 0` the right-hand side is
/// `C_n(1) = nu(n)` directly.
pub fn check_value_identity(n: u64, k: u8) -> Result<(), RingCheckFailure> {
    assert!(n >= 3, "check_value_identity: n must be at least 3");
    let phi_value = phi_min(n).eval_i64(k as i64);
    let w = w_value(n, lambda_of(k));
    let Some(w_int) = w.as_int() else {
        return Err(RingCheckFailure::NotIntegral { n, k, w_value: w });
    };
    if *w_int != phi_value || (k == 0 && phi_value != BigInt::from(nu(n))) {
        return Err(RingCheckFailure::ValueIdentity {
            n,
            k,
            phi_value,
            w_value: w,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_values_and_orders() {
        // i^2 = -1
        let i = UnitPoint::I.value();
        assert_eq!(i.mul(&i), Cyc12::from_int(-1));
        // omega^3 = 1
        assert_eq!(UnitPoint::OMEGA.value().pow(3), Cyc12::one());
        // sigma^2 = omega, forced by the minimal relation
        let sigma = UnitPoint::SIGMA.value();
        assert_eq!(sigma.mul(&sigma), UnitPoint::OMEGA.value());

        assert_eq!(UnitPoint::ONE.order(), 1);
        assert_eq!(UnitPoint::SIGMA.order(), 6);
        assert_eq!(UnitPoint::I.order(), 4);
        assert_eq!(UnitPoint::OMEGA.order(), 3);
        assert_eq!(UnitPoint::MINUS_ONE.order(), 2);
        for u in [
            UnitPoint::ONE,
            UnitPoint::SIGMA,
            UnitPoint::I,
            UnitPoint::OMEGA,
            UnitPoint::MINUS_ONE,
        ] {
            assert_eq!(u.value().pow(u.order()), Cyc12::one());
        }
    }

    #[test]
    fn zeta_has_order_twelve() {
        let z = Cyc12::zeta();
        assert_eq!(z.pow(6), Cyc12::from_int(-1));
        assert_eq!(z.pow(12), Cyc12::one());
        for e in 1..12u64 {
            assert_ne!(z.pow(e), Cyc12::one(), "zeta^{e} = 1");
        }
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_of(0), UnitPoint::ONE);
        assert_eq!(lambda_of(3), UnitPoint::OMEGA);
        assert_eq!(lambda_of(4), UnitPoint::MINUS_ONE);
    }

    #[test]
    fn poly_at_examples() {
        let i = UnitPoint::I.value();
        assert!(poly_at(&cyclotomic(4), &i).is_zero());
        let omega = UnitPoint::OMEGA.value();
        assert!(poly_at(&cyclotomic(3), &omega).is_zero());
        assert_eq!(
            poly_at(&cyclotomic(5), &Cyc12::from_int(-1)),
            Cyc12::one()
        );
    }

    #[test]
    fn w_value_examples() {
        assert_eq!(w_value(4, UnitPoint::OMEGA), Cyc12::from_int(-1));
        assert_eq!(w_value(2, UnitPoint::MINUS_ONE), Cyc12::zero());
        assert_eq!(w_value(5, UnitPoint::MINUS_ONE), Cyc12::one());
        assert_eq!(w_value(12, UnitPoint::OMEGA), Cyc12::from_int(-2));
    }

    #[test]
    fn w_at_minus_one_is_signed_cyclotomic_value() {
        for n in 3..=200u64 {
            let sign = if (totient(n) / 2) % 2 == 0 { 1 } else { -1 };
            let expected = cyclotomic(n).eval_i64(-1) * sign;
            assert_eq!(
                w_value(n, UnitPoint::MINUS_ONE),
                Cyc12::from_int(expected),
                "n={n}"
            );
        }
    }

    #[test]
    fn lemma3_spot_checks() {
        assert!(check_lemma3(3, 3, UnitPoint::I).is_ok());
        assert!(check_lemma3(5, 3, UnitPoint::OMEGA).is_ok());
        assert!(check_lemma3(2, 9, UnitPoint::I).is_ok());
    }

    #[test]
    fn value_identity_spot_checks() {
        assert!(check_value_identity(5, 0).is_ok());
        assert!(check_value_identity(8, 4).is_ok());
        assert!(check_value_identity(12, 3).is_ok());
        for n in 3..=60u64 {
            for k in 0..=4u8 {
                assert!(check_value_identity(n, k).is_ok(), "n={n} k={k}");
            }
        }
    }
}
