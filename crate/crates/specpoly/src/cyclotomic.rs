//! Exact construction of cyclotomic polynomials and checks for the
//! substitution identities they satisfy.
//!
//! The construction first reduces to the squarefree radical: for
//! `n = rad * s` the polynomial is `C_rad(x^s)`. On the radical it evaluates
//! the Möbius product `C_rad(x) = prod_{d | rad} (x^{rad/d} - 1)^{mu(d)}`
//! one prime factor at a time, with every division performed exactly (a
//! nonzero remainder aborts).

use crate::numtheory::{is_prime, nu, radical, totient};
use crate::polyz::IntPoly;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

// Sweeps re-request small C_d constantly (divisor products, lemma checks),
// while large indices are usually seen once; cache only the small ones.
const CACHE_MAX_N: u64 = 4096;

fn cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, exact.
///
/// Monic of degree `totient(n)`, palindromic for `n >= 3`.
///
/// # Panics
/// Panics on `n = 0`.
pub fn cyclotomic(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic: n must be positive");
    if n <= CACHE_MAX_N {
        if let Some(p) = cache().lock().unwrap().get(&n) {
            return Arc::clone(p);
        }
    }
    let poly = Arc::new(compute(n));
    if n <= CACHE_MAX_N {
        cache()
            .lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::clone(&poly));
    }
    poly
}

fn compute(n: u64) -> IntPoly {
    if n == 1 {
        return IntPoly::from_i64(&[-1, 1]);
    }
    let rad = radical(n);
    if rad == n {
        moebius_product(n)
    } else {
        cyclotomic(rad).substitute_power((n / rad) as usize)
    }
}

/// Möbius product on a squarefree index, evaluated one prime at a time as
/// `C_{mp}(x) = C_m(x^p) / C_m(x)`. Ascending prime order keeps the divisor
/// degree small when the largest prime factor arrives.
fn moebius_product(rad: u64) -> IntPoly {
    let mut cur = IntPoly::from_i64(&[-1, 1]);
    for &(p, _) in crate::numtheory::factorize(rad).pairs() {
        cur = cur
            .substitute_power(p as usize)
            .exact_div(&cur)
            .expect("cyclotomic Möbius product divides exactly");
    }
    cur
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LemmaFailure {
    #[error("C_pn(x) = C_n(x^p) fails for p={p}, n={n}: first mismatch at coefficient {index}")]
    DividesRule { p: u64, n: u64, index: usize },
    #[error("C_pn(x) C_n(x) = C_n(x^p) fails for p={p}, n={n}: first mismatch at coefficient {index}")]
    CoprimeRule { p: u64, n: u64, index: usize },
    #[error("C_2n(x) = C_n(-x) fails for n={n}: first mismatch at coefficient {index}")]
    NegationRule { n: u64, index: usize },
    #[error("C_n(1) = nu(n) fails for n={n}: C_n(1) = {value}, nu(n) = {expected}")]
    ValueAtOne { n: u64, value: BigInt, expected: u64 },
}

fn first_mismatch(a: &IntPoly, b: &IntPoly) -> Option<usize> {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len).find(|&k| a.coeff(k) != b.coeff(k))
}

/// Checks the prime-index substitution identities for `C_{pn}`:
/// `C_{pn}(x) = C_n(x^p)` when `p | n`, `C_{pn}(x) C_n(x) = C_n(x^p)` when
/// `p` and `n` are coprime, and additionally `C_{2n}(x) = C_n(-x)` for odd
/// `n` when `p = 2`.
pub fn check_lemma1(p: u64, n: u64) -> Result<(), LemmaFailure> {
    assert!(is_prime(p), "check_lemma1: p must be prime");
    assert!(n >= 1);
    let cn = cyclotomic(n);
    let cpn = cyclotomic(p * n);
    let sub = cn.substitute_power(p as usize);
    if n % p == 0 {
        if let Some(index) = first_mismatch(&cpn, &sub) {
            return Err(LemmaFailure::DividesRule { p, n, index });
        }
    } else if let Some(index) = first_mismatch(&cpn.mul(&cn), &sub) {
        return Err(LemmaFailure::CoprimeRule { p, n, index });
    }
    // The negation identity needs odd n > 1: C_2(x) = x + 1 but
    // C_1(-x) = -x - 1, since C_1 is the one cyclotomic of odd degree.
    if p == 2 && n % 2 == 1 && n > 1 {
        let negated = cn.compose_linear(0, -1);
        if let Some(index) = first_mismatch(&cyclotomic(2 * n), &negated) {
            return Err(LemmaFailure::NegationRule { n, index });
        }
    }
    Ok(())
}

/// Checks `C_n(1) = nu(n)` for `n >= 2`.
pub fn check_lemma2(n: u64) -> Result<(), LemmaFailure> {
    assert!(n >= 2, "check_lemma2: n must be at least 2");
    let value = cyclotomic(n).eval_i64(1);
    let expected = nu(n);
    if value == BigInt::from(expected) {
        Ok(())
    } else {
        Err(LemmaFailure::ValueAtOne { n, value, expected })
    }
}

/// Degree of `cyclotomic(n)` without constructing it.
pub fn cyclotomic_degree(n: u64) -> u64 {
    totient(n)
}
