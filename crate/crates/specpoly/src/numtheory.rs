//! Multiplicative number theory on machine integers: factorization by trial
//! division, Euler's totient, the Möbius function, the prime-power indicator
//! `nu` and the radical.
//!
//! Trial division is deliberate: every sweep in this crate stays below
//! `n ~ 10^5`, where it is both simple and fast enough.

/// Prime factorization of a positive integer as `(prime, exponent)` pairs
/// with strictly increasing primes. `1` factorizes to the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn num_primes(&self) -> usize {
        self.pairs.len()
    }
}

/// Factorizes `n >= 1` by trial division.
///
/// # Panics
/// Panics on `n = 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize: n must be positive");
    let mut pairs = Vec::new();
    let mut m = n;
    let mut p: u64 = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Factorization { pairs }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut p = 3;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

/// Euler's totient function.
///
/// # Panics
/// Panics on `n = 0`.
pub fn totient(n: u64) -> u64 {
    let mut t = n;
    for &(p, _) in factorize(n).pairs() {
        t = t / p * (p - 1);
    }
    t
}

/// Möbius function: `0` unless `n` is squarefree, otherwise `(-1)^k` for
/// `k` distinct prime factors.
///
/// # Panics
/// Panics on `n = 0`.
pub fn moebius(n: u64) -> i32 {
    let f = factorize(n);
    if f.pairs.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.pairs.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Prime-power indicator: `p` when `n = p^k` with `k >= 1`, otherwise `1`.
///
/// `nu(1) = 1` by convention so that sweeps need no special case; the
/// theorems themselves only consult `nu(n)` for `n >= 2`.
pub fn nu(n: u64) -> u64 {
    let f = factorize(n);
    if f.num_primes() == 1 {
        f.pairs[0].0
    } else {
        1
    }
}

/// Product of the distinct prime divisors of `n`; `radical(1) = 1`.
pub fn radical(n: u64) -> u64 {
    factorize(n).pairs().iter().map(|&(p, _)| p).product()
}

/// All positive divisors of `n`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, e) in factorize(n).pairs() {
        let prev = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(prev.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}
