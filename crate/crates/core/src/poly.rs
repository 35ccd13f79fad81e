//! Polynomials in one variable `q` with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coefficient `i` multiplies `q^i`; the highest stored coefficient is
/// nonzero unless the polynomial is zero (then nothing is stored).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Multiplies by `(q + a)`.
    pub fn mul_linear(&self, a: &BigInt) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] += c * a;
        }
        Self::from_coeffs(out)
    }

    /// The shift operator applied `t` times: returns `f(q - t)`.
    ///
    /// Expands `(q - t)^i = sum_k C(i,k) q^k (-t)^(i-k)` term by term.
    pub fn shift(&self, t: u64) -> Self {
        if t == 0 || self.is_zero() {
            return self.clone();
        }
        let len = self.coeffs.len();
        let neg_t = -BigInt::from(t);
        let mut pow = Vec::with_capacity(len);
        pow.push(BigInt::one());
        for j in 1..len {
            let next = &pow[j - 1] * &neg_t;
            pow.push(next);
        }
        let mut out = vec![BigInt::zero(); len];
        // binom holds row i of Pascal's triangle
        let mut binom: Vec<BigInt> = vec![BigInt::one()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                let mut next = vec![BigInt::one(); i + 1];
                for k in 1..i {
                    next[k] = &binom[k - 1] + &binom[k];
                }
                binom = next;
            }
            if a.is_zero() {
                continue;
            }
            for k in 0..=i {
                out[k] += a * &binom[k] * &pow[i - k];
            }
        }
        Self::from_coeffs(out)
    }
}

/// `q (q+1) ... (q+n)`, the falling factorial `(q+n)_{n+1}`. Its
/// coefficient of `q^k` is the unsigned Stirling number `c(n+1, k)`.
pub fn rising_factorial_poly(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::from_i64s(&[0, 1]), |acc, i| {
        acc.mul_linear(&BigInt::from(i))
    })
}

/// `f(q - t)`
pub fn shift_poly(f: &IntPolynomial, t: u64) -> IntPolynomial {
    f.shift(t)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rising_factorial_small() {
        assert_eq!(rising_factorial_poly(0), IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(
            rising_factorial_poly(2),
            IntPolynomial::from_i64s(&[0, 2, 3, 1])
        );
        assert_eq!(rising_factorial_poly(2).to_string(), "2q + 3q^2 + q^3");
    }

    #[test]
    fn shift_examples() {
        let sq = IntPolynomial::from_i64s(&[0, 0, 1]);
        assert_eq!(sq.shift(1), IntPolynomial::from_i64s(&[1, -2, 1]));
        assert_eq!(sq.shift(0), sq);
        // E((q)_t) = (q-1)_t
        let falling3 = IntPolynomial::from_i64s(&[0, 2, -3, 1]); // q(q-1)(q-2)
        let shifted = IntPolynomial::from_i64s(&[-6, 11, -6, 1]); // (q-1)(q-2)(q-3)
        assert_eq!(falling3.shift(1), shifted);
    }

    #[test]
    fn zero_polynomial_is_trimmed() {
        let z = IntPolynomial::from_i64s(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        let p = IntPolynomial::from_i64s(&[1, 2]);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_and_eval() {
        let p = rising_factorial_poly(3); // q(q+1)(q+2)(q+3)
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(24));
        // d/dq at 1 = 24 * (1 + 1/2 + 1/3 + 1/4) = 50
        assert_eq!(p.derivative().eval(&BigInt::from(1)), BigInt::from(50));
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-1000i64..1000, 0..8).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn shift_is_additive_in_t(f in arb_poly(), a in 0u64..20, b in 0u64..20) {
            prop_assert_eq!(f.shift(a).shift(b), f.shift(a + b));
        }

        #[test]
        fn shift_is_linear(f in arb_poly(), g in arb_poly(), t in 0u64..20) {
            prop_assert_eq!((&f + &g).shift(t), &f.shift(t) + &g.shift(t));
            prop_assert_eq!((-&f).shift(t), -&f.shift(t));
        }

        #[test]
        fn shift_matches_evaluation(f in arb_poly(), t in 0u64..20, q in -30i64..30) {
            let q = BigInt::from(q);
            prop_assert_eq!(f.shift(t).eval(&q), f.eval(&(&q - BigInt::from(t))));
        }

        #[test]
        fn product_evaluates_pointwise(f in arb_poly(), g in arb_poly(), q in -30i64..30) {
            let q = BigInt::from(q);
            prop_assert_eq!((&f * &g).eval(&q), f.eval(&q) * g.eval(&q));
        }
    }
}
