//! Dense polynomial arithmetic over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending degree order (`coeffs[k]` multiplies
//! `x^k`). The zero polynomial is the empty coefficient list; every
//! constructor and operation restores the invariant that the highest-index
//! coefficient is nonzero.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division: nonzero remainder term at degree {remainder_degree}")]
    InexactDivision { remainder_degree: usize },
}

/// Dense integer polynomial in one variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![BigInt::from(c)])
    }

    /// `c * x^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient at degree `k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = other.coeffs.get(k) {
                c += b;
            }
            out.push(c);
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Schoolbook product, skipping zero coefficients so sparse operands
    /// (e.g. `x^k - 1` factors) stay cheap.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact quotient `self / divisor`. Any nonzero remainder is an error,
    /// never a silent truncation: the divisions performed in this crate are
    /// exact by construction, so a remainder indicates an upstream bug.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        let db = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let da = self.degree().unwrap();
        if da < db {
            return Err(PolyError::InexactDivision {
                remainder_degree: da,
            });
        }
        let lead = &divisor.coeffs[db];
        // Nonzero divisor terms below the leading one; iterating these keeps
        // division by sparse divisors linear in the quotient length.
        let lower: Vec<(usize, &BigInt)> = divisor.coeffs[..db]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = std::mem::take(&mut rem[k + db]);
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Err(PolyError::InexactDivision {
                    remainder_degree: k + db,
                });
            }
            let q = &top / lead;
            for &(j, c) in &lower {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if let Some(i) = rem[..db].iter().rposition(|c| !c.is_zero()) {
            return Err(PolyError::InexactDivision {
                remainder_degree: i,
            });
        }
        Ok(IntPoly::new(quot))
    }

    /// Horner evaluation at an integer point, exact.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Evaluates at the exact rational value the given `f64` represents,
    /// rounding only the final result. Avoids the catastrophic cancellation
    /// a plain float Horner suffers once coefficients outgrow the value.
    pub fn eval_f64_exact(&self, x: f64) -> f64 {
        use num_rational::BigRational;
        use num_traits::ToPrimitive;
        let x = BigRational::from_float(x).expect("finite float");
        let mut acc = BigRational::from_integer(BigInt::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + BigRational::from_integer(c.clone());
        }
        acc.to_f64().unwrap()
    }

    /// `p(a + b x)`, exact substitution by Horner in the linear polynomial.
    pub fn compose_linear(&self, a: i64, b: i64) -> IntPoly {
        let lin = IntPoly::from_i64(&[a, b]);
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin);
            acc = acc.add(&IntPoly::new(vec![c.clone()]));
        }
        acc
    }

    /// `p(x^k)`: the coefficient at degree `j` moves to degree `j*k`.
    pub fn substitute_power(&self, k: usize) -> IntPoly {
        assert!(k >= 1, "substitute_power: k must be positive");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[j * k] = c.clone();
            }
        }
        IntPoly::new(out)
    }

    /// True iff `coeffs[j] = coeffs[deg - j]` for all `j`. The zero
    /// polynomial counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|j| self.coeffs[j] == self.coeffs[n - 1 - j])
    }
}

/// Ascending-power rendering matching the paper's style, e.g.
/// `7 - 14x + 7x^2 - x^3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.magnitude();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if i >= 1 {
                f.write_str("x")?;
            }
            if i >= 2 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
