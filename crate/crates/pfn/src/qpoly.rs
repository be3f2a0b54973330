//! Dense univariate polynomials with exact integer coefficients.
//!
//! [`Poly`] is generic over the coefficient ring so the same arithmetic
//! runs on machine integers in tests and on [`num_bigint::BigInt`] for the
//! real computations, where coefficients of `q`-factorials outgrow `i64`
//! quickly.  The crate root exposes the working alias
//! [`QPoly`](crate::QPoly) for the `BigInt` instantiation.
//!
//! Everything here is exact: there is no floating point, and division is
//! only available through [`Poly::checked_div_exact`], which refuses to
//! produce a quotient unless the division leaves no remainder.

use num_traits::Signed;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficient ring bound: exact integer arithmetic with signs.
/// Blanket-implemented, so `i64`, `i128` and `BigInt` all qualify.
pub trait Coeff: num_integer::Integer + Signed + Clone + fmt::Debug + fmt::Display {}
impl<T: num_integer::Integer + Signed + Clone + fmt::Debug + fmt::Display> Coeff for T {}

/// A polynomial in one variable `q`, stored densely from the constant term
/// up, with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds from coefficients listed constant-term first, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficients from the constant term up, without trailing zeros.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at `x` by Horner's rule.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> C {
        self.coeffs
            .iter()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Exact long division: returns `self / divisor` when the remainder is
    /// zero and every leading-coefficient step divides evenly, else `None`.
    pub fn checked_div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dd, dn) = (self.degree()?, divisor.degree()?);
        if dd < dn {
            return None;
        }
        let lead = divisor.coeffs.last().cloned()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); dd - dn + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dn].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Poly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Coefficient-wise map into another ring, e.g. widening test
    /// fixtures written over `i64` into `BigInt`.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff + From<i64>> Poly<C> {
    /// Convenience constructor for golden values in tests and docs.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| C::from(c)).collect())
    }
}

// === arithmetic ===

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| C::zero() - c.clone()).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_value_ops {
    ($($op:ident :: $f:ident),*) => {$(
        impl<C: Coeff> $op for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl<C: Coeff> Mul<C> for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: C) -> Poly<C> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.clone() * rhs.clone()).collect())
    }
}

// === display ===

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Ascending powers, e.g. `1 + 2q + 2q^2 - q^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}
