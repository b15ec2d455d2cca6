//! Lucas polynomials, the spread polynomials `Z_n(x) = 2 - L_n(2 - x)`,
//! their periodic value tables at `x` in `{0..4}`, and the reduction of a
//! palindromic polynomial into the Lucas basis.

use crate::polyz::IntPoly;
use num_bigint::BigInt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

const LUCAS_CACHE_MAX: u64 = 2048;

fn lucas_cache() -> &'static Mutex<Vec<Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<Vec<Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// Lucas polynomial `L_n`: `L_0 = 2`, `L_1 = x`, `L_n = x L_{n-1} - L_{n-2}`.
pub fn lucas(n: u64) -> Arc<IntPoly> {
    if n > LUCAS_CACHE_MAX {
        // outside the memo range, iterate with two temporaries
        let mut prev = IntPoly::constant(2);
        let mut cur = IntPoly::x();
        for _ in 1..n {
            let next = IntPoly::x().mul(&cur).sub(&prev);
            prev = cur;
            cur = next;
        }
        return Arc::new(cur);
    }
    let mut cache = lucas_cache().lock().unwrap();
    if cache.is_empty() {
        cache.push(Arc::new(IntPoly::constant(2)));
        cache.push(Arc::new(IntPoly::x()));
    }
    while (cache.len() as u64) <= n {
        let k = cache.len();
        let next = IntPoly::x().mul(&cache[k - 1]).sub(&cache[k - 2]);
        cache.push(Arc::new(next));
    }
    Arc::clone(&cache[n as usize])
}

/// Spread polynomial `Z_n(x) = 2 - L_n(2 - x)`; degree `n`, zero constant
/// term, characterized by `Z_n(4 sin^2 t) = 4 sin^2(n t)`.
pub fn spread(n: u64) -> IntPoly {
    assert!(n >= 1, "spread: n must be positive");
    IntPoly::constant(2).sub(&lucas(n).compose_linear(2, -1))
}

/// `Z_n(k)` for `k` in `{0..4}` via the periodic tables
/// (periods 1, 6, 4, 3, 2 for `k = 0..4`); `Z_0 = 0`.
pub fn spread_value(n: u64, k: u8) -> i64 {
    const AT_ONE: [i64; 6] = [0, 1, 3, 4, 3, 1];
    const AT_TWO: [i64; 4] = [0, 2, 4, 2];
    const AT_THREE: [i64; 3] = [0, 3, 3];
    const AT_FOUR: [i64; 2] = [0, 4];
    match k {
        0 => 0,
        1 => AT_ONE[(n % 6) as usize],
        2 => AT_TWO[(n % 4) as usize],
        3 => AT_THREE[(n % 3) as usize],
        4 => AT_FOUR[(n % 2) as usize],
        _ => panic!("spread_value: k must be in 0..=4"),
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LucasBasisError {
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("polynomial does not have even degree")]
    OddDegree,
}

/// Coefficients of a palindromic polynomial of degree `2m` in the Lucas
/// basis: `p(x)/x^m = c[0] + sum_{k=1..m} c[k] (x^k + x^{-k})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasCoeffs {
    c: Vec<BigInt>,
}

impl LucasCoeffs {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    /// Rebuilds the palindromic polynomial the coefficients came from:
    /// `c[0] x^m + sum_{k>=1} c[k] (x^{m+k} + x^{m-k})`.
    pub fn reconstruct_palindromic(&self) -> IntPoly {
        let m = self.c.len() - 1;
        let mut coeffs = vec![BigInt::from(0); 2 * m + 1];
        coeffs[m] = self.c[0].clone();
        for k in 1..=m {
            coeffs[m + k] = self.c[k].clone();
            coeffs[m - k] = self.c[k].clone();
        }
        IntPoly::new(coeffs)
    }
}

/// Reads off the Lucas-basis coefficients of a palindromic polynomial of
/// even degree `2m`: `c[0] = coeffs[m]`, `c[k] = coeffs[m+k]`.
pub fn palindromic_to_lucas(p: &IntPoly) -> Result<LucasCoeffs, LucasBasisError> {
    let deg = p.degree().ok_or(LucasBasisError::OddDegree)?;
    if deg % 2 != 0 {
        return Err(LucasBasisError::OddDegree);
    }
    if !p.is_palindromic() {
        return Err(LucasBasisError::NotPalindromic);
    }
    let m = deg / 2;
    Ok(LucasCoeffs {
        c: p.coeffs()[m..].to_vec(),
    })
}

/// `c[0] + sum_{k>=1} c[k] L_k(x)`.
///
/// The constant coefficient is added once, not multiplied by `L_0 = 2`;
/// this is the convention fixed by the worked reduction of `C_5`.
pub fn lucas_combination(c: &LucasCoeffs) -> IntPoly {
    let mut acc = IntPoly::new(vec![c.c[0].clone()]);
    for (k, ck) in c.c.iter().enumerate().skip(1) {
        acc = acc.add(&lucas(k as u64).scale(ck));
    }
    acc
}
