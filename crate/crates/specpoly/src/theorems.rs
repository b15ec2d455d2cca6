//! The five sign theorems relating `phi` values at `{0..4}` to the
//! prime-power indicator `nu(n)`, their sweep verification, and the value
//! tables.

use crate::cycloring::{w_value, Cyc12, UnitPoint};
use crate::minpoly::phi_eval;
use crate::numtheory::nu;
use num_bigint::BigInt;
use thiserror::Error;

/// Sign prediction for a theorem: `-1` when `nu(n)` is `-1` modulo the
/// given modulus, `+1` otherwise, with explicit overrides for the small
/// prime special cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignRule {
    pub modulus: u64,
    pub special_cases: &'static [(u64, i64)],
}

impl SignRule {
    pub fn sign(&self, v: u64) -> i64 {
        if let Some(&(_, s)) = self.special_cases.iter().find(|&&(sv, _)| sv == v) {
            s
        } else if v % self.modulus == self.modulus - 1 {
            -1
        } else {
            1
        }
    }

    pub fn predicted(&self, v: u64) -> BigInt {
        BigInt::from(self.sign(v)) * v
    }
}

/// `phi_{2n}(4)` and `phi_{4n}(2)`: `+nu(n)` when `nu(n) = 1 (mod 4)` or
/// `nu(n) = 2`, `-nu(n)` when `nu(n) = -1 (mod 4)`.
pub const RULE_MOD4: SignRule = SignRule {
    modulus: 4,
    special_cases: &[(2, 1)],
};

/// `phi_{3n}(3)`: `+nu(n)` when `nu(n) = 1 (mod 3)` or `nu(n) = 3`,
/// `-nu(n)` when `nu(n) = -1 (mod 3)`.
pub const RULE_MOD3: SignRule = SignRule {
    modulus: 3,
    special_cases: &[(3, 1)],
};

/// `phi_{6n}(1)`: `+nu(n)` when `nu(n) = 1 (mod 3)`, `-nu(n)` when
/// `nu(n) = -1 (mod 3)` or `nu(n)` is 2 or 3.
pub const RULE_MOD3_NEG23: SignRule = SignRule {
    modulus: 3,
    special_cases: &[(2, -1), (3, -1)],
};

/// One row of a theorem sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRow {
    pub n: u64,
    pub theorem: u8,
    pub computed: BigInt,
    pub predicted: BigInt,
    pub pass: bool,
}

fn row(n: u64, theorem: u8, computed: BigInt, predicted: BigInt) -> VerificationRow {
    let pass = computed == predicted;
    VerificationRow {
        n,
        theorem,
        computed,
        predicted,
        pass,
    }
}

/// `phi_n(0) = nu(n)` for `n > 2`.
pub fn theorem1(n: u64) -> VerificationRow {
    assert!(n > 2, "theorem1: n must exceed 2");
    row(n, 1, phi_eval(n, 0), BigInt::from(nu(n)))
}

/// `phi_{2n}(4)` against the mod-4 sign rule, `n >= 3`.
pub fn theorem2(n: u64) -> VerificationRow {
    assert!(n >= 3, "theorem2: n must be at least 3");
    row(n, 2, phi_eval(2 * n, 4), RULE_MOD4.predicted(nu(n)))
}

/// `phi_{4n}(2)` against the same rule as theorem 2, `n >= 3`.
pub fn theorem3(n: u64) -> VerificationRow {
    assert!(n >= 3, "theorem3: n must be at least 3");
    row(n, 3, phi_eval(4 * n, 2), RULE_MOD4.predicted(nu(n)))
}

/// `phi_{3n}(3)` against the mod-3 sign rule, `n >= 3`.
pub fn theorem4(n: u64) -> VerificationRow {
    assert!(n >= 3, "theorem4: n must be at least 3");
    row(n, 4, phi_eval(3 * n, 3), RULE_MOD3.predicted(nu(n)))
}

/// `phi_{6n}(1)` against the mod-3 rule with 2 and 3 negative, `n >= 3`.
pub fn theorem5(n: u64) -> VerificationRow {
    assert!(n >= 3, "theorem5: n must be at least 3");
    row(n, 5, phi_eval(6 * n, 1), RULE_MOD3_NEG23.predicted(nu(n)))
}

pub fn theorem_row(theorem: u8, n: u64) -> VerificationRow {
    match theorem {
        1 => theorem1(n),
        2 => theorem2(n),
        3 => theorem3(n),
        4 => theorem4(n),
        5 => theorem5(n),
        _ => panic!("theorem_row: theorem id must be 1..=5"),
    }
}

/// Runs one theorem over `lo..=hi`, optionally across threads. Rows come
/// back ordered by `n` regardless of completion order; all failures are
/// reported, not just the first.
pub fn sweep(theorem: u8, lo: u64, hi: u64, jobs: usize) -> Vec<VerificationRow> {
    assert!(theorem >= 1 && theorem <= 5);
    let lo = lo.max(3);
    if hi < lo {
        return Vec::new();
    }
    let jobs = jobs.max(1).min((hi - lo + 1) as usize);
    if jobs == 1 {
        return (lo..=hi).map(|n| theorem_row(theorem, n)).collect();
    }
    let mut parts: Vec<Vec<VerificationRow>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|t| {
                scope.spawn(move || {
                    (lo..=hi)
                        .filter(|n| ((n - lo) as usize) % jobs == t)
                        .map(|n| theorem_row(theorem, n))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        parts = handles.into_iter().map(|h| h.join().unwrap()).collect();
    });
    let mut rows: Vec<VerificationRow> = parts.into_iter().flatten().collect();
    rows.sort_by_key(|r| r.n);
    rows
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SigmaOmegaFailure {
    #[error("w(6*{n}, sigma) = w(3*{n}, omega) fails: lhs {lhs}, rhs {rhs}")]
    Regular { n: u64, lhs: Cyc12, rhs: Cyc12 },
    #[error("w(6*{n}, sigma) = -w(3*{n}, omega) fails at n = 3^k: lhs {lhs}, rhs {rhs}")]
    PowerOfThree { n: u64, lhs: Cyc12, rhs: Cyc12 },
}

pub fn is_power_of_three(n: u64) -> bool {
    let mut m = n;
    while m % 3 == 0 {
        m /= 3;
    }
    m == 1 && n > 1
}

/// Checks `w(6n, sigma) = w(3n, omega)` for `n >= 2`, with the sign flipped
/// at `n = 3^k` where `w(6*3^k, sigma) = -w(3^{k+1}, omega)` instead.
pub fn check_eq11_eq12(n: u64) -> Result<(), SigmaOmegaFailure> {
    assert!(n >= 2, "check_eq11_eq12: n must be at least 2");
    let lhs = w_value(6 * n, UnitPoint::SIGMA);
    let omega_side = w_value(3 * n, UnitPoint::OMEGA);
    if is_power_of_three(n) {
        let rhs = omega_side.neg();
        if lhs != rhs {
            return Err(SigmaOmegaFailure::PowerOfThree { n, lhs, rhs });
        }
    } else if lhs != omega_side {
        return Err(SigmaOmegaFailure::Regular {
            n,
            lhs,
            rhs: omega_side,
        });
    }
    Ok(())
}

/// One row of the value table: `n`, the five `phi` values and `nu(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u64,
    pub phi_n_0: BigInt,
    pub phi_2n_4: BigInt,
    pub phi_3n_3: BigInt,
    pub phi_4n_2: BigInt,
    pub phi_6n_1: BigInt,
    pub v_n: u64,
}

impl TableRow {
    /// The theorems only claim their sign rules from `n = 3` on; rows for
    /// `n` in `{1, 2}` are table entries outside that range.
    pub fn in_theorem_range(&self) -> bool {
        self.n >= 3
    }
}

/// Exact value table for `n = 1..=max_n`, reproducing the five displayed
/// sequences.
pub fn value_table(max_n: u64) -> Vec<TableRow> {
    assert!(max_n >= 1);
    (1..=max_n)
        .map(|n| TableRow {
            n,
            phi_n_0: phi_eval(n, 0),
            phi_2n_4: phi_eval(2 * n, 4),
            phi_3n_3: phi_eval(3 * n, 3),
            phi_4n_2: phi_eval(4 * n, 2),
            phi_6n_1: phi_eval(6 * n, 1),
            v_n: nu(n),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(r: &VerificationRow) -> i64 {
        use num_traits::ToPrimitive;
        assert!(r.pass, "row failed: {r:?}");
        r.computed.to_i64().unwrap()
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(val(&theorem1(11)), 11);
        assert_eq!(val(&theorem1(15)), 1);
        assert_eq!(val(&theorem1(16)), 2);
    }

    #[test]
    fn theorem2_examples() {
        assert_eq!(val(&theorem2(3)), -3);
        assert_eq!(val(&theorem2(5)), 5);
        assert_eq!(val(&theorem2(4)), 2);
    }

    #[test]
    fn theorem3_examples() {
        assert_eq!(val(&theorem3(3)), -3);
        assert_eq!(val(&theorem3(7)), -7);
        assert_eq!(val(&theorem3(13)), 13);
    }

    #[test]
    fn theorem4_examples() {
        assert_eq!(val(&theorem4(3)), 3);
        assert_eq!(val(&theorem4(5)), -5);
        assert_eq!(val(&theorem4(7)), 7);
    }

    #[test]
    fn theorem5_examples() {
        assert_eq!(val(&theorem5(3)), -3);
        assert_eq!(val(&theorem5(7)), 7);
        assert_eq!(val(&theorem5(4)), -2);
    }

    #[test]
    fn sweeps_pass_small_range() {
        for t in 1..=5u8 {
            for r in sweep(t, 3, 200, 1) {
                assert!(r.pass, "theorem {t} failed at n={}", r.n);
            }
        }
    }

    #[test]
    fn parallel_sweep_matches_serial() {
        for t in 1..=5u8 {
            assert_eq!(sweep(t, 3, 80, 4), sweep(t, 3, 80, 1));
        }
    }

    #[test]
    fn eq11_eq12_examples() {
        assert!(check_eq11_eq12(4).is_ok());
        assert!(check_eq11_eq12(3).is_ok());
        assert!(check_eq11_eq12(5).is_ok());
        // w(18, sigma) = -w(9, omega) = -3
        assert_eq!(
            w_value(18, UnitPoint::SIGMA),
            Cyc12::from_int(-3)
        );
        assert_eq!(w_value(9, UnitPoint::OMEGA), Cyc12::from_int(3));
    }

    #[test]
    fn table_examples() {
        let rows = value_table(23);
        assert_eq!(rows[1].phi_n_0, 4.into());
        assert!(!rows[1].in_theorem_range());
        let first = &rows[0];
        for v in [
            &first.phi_n_0,
            &first.phi_2n_4,
            &first.phi_3n_3,
            &first.phi_4n_2,
            &first.phi_6n_1,
        ] {
            assert_eq!(*v, 0.into());
        }
        assert_eq!(rows[22].phi_n_0, 23.into());
    }
}
