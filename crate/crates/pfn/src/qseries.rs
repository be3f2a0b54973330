//! Length generating functions and their closed forms.
//!
//! The central objects are the polynomials `i(n, k)` — the generating
//! function of the length statistic over all size-`n` elements with
//! exactly `k` arcs — and their sum `p(n)` over all ranks.  Both are
//! computed two ways: by direct enumeration (the oracle) and by
//! closed-form products of Gaussian binomials and odd double factorials,
//! and the two must agree coefficient for coefficient.
//!
//! The same polynomials count fixed-rank alternating matrices over a
//! finite field, up to an explicit monomial factor; that relation is kept
//! in cleared-denominator form so that no rational functions appear, and
//! is cross-checked against brute-force matrix counts in
//! [`census`](crate::census).

use crate::involution::enumerate_arcs;
use crate::qpoly::Poly;
use crate::rank::length_pf;
use crate::QPoly;
use num_bigint::BigInt;

/// `C(m, 2)` as a plain integer.
fn binom2(m: usize) -> usize {
    m * (m.saturating_sub(1)) / 2
}

/// The q-integer `[n] = 1 + q + ... + q^(n-1)`; `[0] = 0`.
pub fn q_bracket(n: usize) -> QPoly {
    Poly::from_coeffs(vec![BigInt::from(1); n])
}

/// The q-factorial `[n]! = [1][2]...[n]`; empty product for `n = 0`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &q_bracket(i))
}

/// The Gaussian binomial `[n]! / ([k]! [n-k]!)`, zero when `k > n`.
///
/// Computed by exact polynomial division; the quotient is a theorem, so an
/// inexact division can only mean the arithmetic is broken and panics.
pub fn q_binomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return Poly::zero();
    }
    let denom = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n)
        .checked_div_exact(&denom)
        .expect("Gaussian binomial division must be exact")
}

/// The odd q-double factorial `[2k-1]!! = [1][3]...[2k-1]`; 1 for `k = 0`.
pub fn q_odd_double_factorial(k: usize) -> QPoly {
    (1..=k).fold(Poly::one(), |acc, i| &acc * &q_bracket(2 * i - 1))
}

/// Length generating function over all size-`n` elements with `k` arcs,
/// by direct enumeration.  Zero when `2k > n` (no such elements).
pub fn i_poly_enum(n: usize, k: usize) -> QPoly {
    enumerate_arcs(n, k)
        .iter()
        .fold(Poly::zero(), |acc, w| {
            &acc + &Poly::monomial(BigInt::from(1), length_pf(w))
        })
}

/// The closed form `q^C(n-2k,2) * binom(n, 2k) * [2k-1]!!`, which must
/// equal [`i_poly_enum`].  Zero when `2k > n`.
pub fn i_poly_closed(n: usize, k: usize) -> QPoly {
    if 2 * k > n {
        return Poly::zero();
    }
    let product = &q_binomial(n, 2 * k) * &q_odd_double_factorial(k);
    product.shift(binom2(n - 2 * k))
}

/// Checks `i(n+1, k) = q^n i(n, k) + [n] i(n-1, k-1)` by enumeration on
/// all three terms, with `i(m, -1) = 0` so the `k = 0` case degenerates to
/// a pure shift.  Requires `n >= 1`.
pub fn check_i_recurrence(n: usize, k: usize) -> bool {
    assert!(n >= 1, "recurrence needs n >= 1");
    let lhs = i_poly_enum(n + 1, k);
    let mut rhs = i_poly_enum(n, k).shift(n);
    if k > 0 {
        rhs = &rhs + &(&q_bracket(n) * &i_poly_enum(n - 1, k - 1));
    }
    lhs == rhs
}

/// Length generating function over all size-`n` elements.
pub fn p_poly(n: usize) -> QPoly {
    (0..=n / 2).fold(Poly::zero(), |acc, k| &acc + &i_poly_enum(n, k))
}

/// Checks `p(n+1) = q^n p(n) + [n] p(n-1)`.  Requires `n >= 1`.
pub fn check_p_recurrence(n: usize) -> bool {
    assert!(n >= 1, "recurrence needs n >= 1");
    let rhs = &p_poly(n).shift(n) + &(&q_bracket(n) * &p_poly(n - 1));
    p_poly(n + 1) == rhs
}

/// Checks the finite product expansion
/// `prod_{i=0}^{j-1} (1 + x q^i) = sum_k x^k q^C(k,2) binom(j, k)`,
/// treating both sides as polynomials in `x` with [`QPoly`] coefficients.
pub fn check_gauss_identity(j: usize) -> bool {
    // left side, expanded one factor at a time; index = power of x
    let mut lhs: Vec<QPoly> = vec![Poly::one()];
    for i in 0..j {
        let mut next = vec![Poly::zero(); lhs.len() + 1];
        for (k, c) in lhs.iter().enumerate() {
            next[k] = &next[k] + c;
            next[k + 1] = &next[k + 1] + &c.shift(i);
        }
        lhs = next;
    }
    let rhs: Vec<QPoly> = (0..=j)
        .map(|k| q_binomial(j, k).shift(binom2(k)))
        .collect();
    lhs == rhs
}

/// Number of `n x n` alternating matrices of rank `2k` over a `q`-element
/// field, as a polynomial in `q`:
/// `q^(2 C(k,2)) (q-1)^k binom(n, 2k) [2k-1]!!`.
pub fn skew_count_poly(n: usize, k: usize) -> QPoly {
    if 2 * k > n {
        return Poly::zero();
    }
    let q_minus_1: QPoly = Poly::from_i64s(&[-1, 1]);
    let product = &(&q_binomial(n, 2 * k) * &q_odd_double_factorial(k)) * &q_minus_1.pow(k as u32);
    product.shift(2 * binom2(k))
}

/// Checks the cleared-denominator relation between matrix counts and the
/// length generating function:
/// `q^C(n-2k,2) * skew_count_poly(n, k) = i(n, k) * q^(2 C(k,2)) * (q-1)^k`
/// with `i(n, k)` taken from the enumeration side.
pub fn check_skew_identity(n: usize, k: usize) -> bool {
    if 2 * k > n {
        return skew_count_poly(n, k).is_zero();
    }
    let lhs = skew_count_poly(n, k).shift(binom2(n - 2 * k));
    let q_minus_1: QPoly = Poly::from_i64s(&[-1, 1]);
    let rhs = &(&i_poly_enum(n, k) * &q_minus_1.pow(k as u32)).shift(2 * binom2(k));
    lhs == *rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::involution_number;

    fn p(coeffs: &[i64]) -> QPoly {
        Poly::from_i64s(coeffs)
    }

    // === q-analog building blocks ===

    #[test]
    fn bracket_factorial_binomial_basics() {
        assert!(q_bracket(0).is_zero());
        assert_eq!(q_bracket(3), p(&[1, 1, 1]));
        assert_eq!(q_factorial(0), QPoly::one());
        assert_eq!(q_factorial(3), &p(&[1, 1]) * &p(&[1, 1, 1]));
        // oracle: expand [4]! / ([2]! [2]!) by hand
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 0), QPoly::one());
        assert_eq!(q_binomial(3, 5), QPoly::zero());
        // [3]!! = [1][3]
        assert_eq!(q_odd_double_factorial(2), p(&[1, 1, 1]));
        assert_eq!(q_odd_double_factorial(0), QPoly::one());
    }

    #[test]
    fn binomials_are_symmetric_and_count_at_one() {
        for n in 0..=9 {
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert_eq!(b, q_binomial(n, n - k));
                // value at q = 1 is the ordinary binomial coefficient
                let ordinary: i64 = (1..=k as i64).fold(1, |acc, i| {
                    acc * (n as i64 - k as i64 + i) / i
                });
                assert_eq!(b.eval_at_one(), BigInt::from(ordinary), "({n},{k})");
            }
        }
    }

    // === rank-level generating functions ===

    #[test]
    fn i_poly_golden_values() {
        // the three full-rank size-4 elements have lengths 0, 1, 2
        assert_eq!(i_poly_enum(4, 2), p(&[1, 1, 1]));
        // the six one-arc size-4 elements sit at lengths 1, 2, 3, 3, 4, 5
        assert_eq!(i_poly_enum(4, 1), p(&[0, 1, 1, 2, 1, 1]));
        // only the zero matrix has no arcs; its length is C(n,2)
        for n in 0..=6 {
            assert_eq!(i_poly_enum(n, 0), QPoly::one().shift(binom2(n)));
        }
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for n in 0..=7 {
            for k in 0..=(n / 2 + 1) {
                assert_eq!(
                    i_poly_enum(n, k),
                    i_poly_closed(n, k),
                    "mismatch at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn closed_form_special_shapes() {
        // full rank: the binomial collapses, leaving the double factorial
        for k in 0..=3 {
            assert_eq!(i_poly_closed(2 * k, k), q_odd_double_factorial(k));
        }
        // one arc in size 5
        assert_eq!(i_poly_closed(5, 1), q_binomial(5, 2).shift(3));
    }

    #[test]
    fn i_recurrence_holds_everywhere_tested() {
        // spot check: i(4,2) = q^3 i(3,2) + [3] i(2,1), first term vanishing
        assert!(i_poly_enum(3, 2).is_zero());
        assert_eq!(i_poly_enum(4, 2), &q_bracket(3) * &i_poly_enum(2, 1));
        for n in 1..=6 {
            for k in 0..=((n + 1) / 2) {
                assert!(check_i_recurrence(n, k), "failed at ({n},{k})");
            }
        }
    }

    // === total length generating function ===

    #[test]
    fn p_poly_golden_values() {
        assert_eq!(p_poly(1), QPoly::one());
        assert_eq!(p_poly(2), p(&[1, 1]));
        assert_eq!(p_poly(3), p(&[1, 1, 1, 1]));
        assert_eq!(p_poly(4), p(&[1, 2, 2, 2, 1, 1, 1]));
    }

    #[test]
    fn p_poly_counts_and_degree() {
        for n in 1..=7 {
            let poly = p_poly(n);
            assert_eq!(poly.eval_at_one(), BigInt::from(involution_number(n)));
            assert_eq!(poly.degree(), Some(n * (n - 1) / 2));
            assert_eq!(poly.coeff(n * (n - 1) / 2), BigInt::from(1));
            assert!(check_p_recurrence(n));
        }
    }

    // === product expansions and matrix counts ===

    #[test]
    fn gauss_identity_small_and_swept() {
        // j = 3: coefficient of x^2 in (1+x)(1+xq)(1+xq^2) is q(1+q+q^2)
        let c2 = p(&[0, 1, 1, 1]);
        assert_eq!(q_binomial(3, 2).shift(1), c2);
        for j in 0..=10 {
            assert!(check_gauss_identity(j), "failed at j={j}");
        }
    }

    #[test]
    fn skew_count_golden_values() {
        assert_eq!(skew_count_poly(2, 1), p(&[-1, 1]));
        for n in 0..=6 {
            assert_eq!(skew_count_poly(n, 0), QPoly::one());
        }
        // rank-2 counts: (q-1) * binom(n, 2)
        assert_eq!(skew_count_poly(3, 1), &p(&[-1, 1]) * &q_binomial(3, 2));
        // all ranks together account for every matrix: sum = q^C(n,2)
        for n in 0..=6 {
            let total = (0..=n / 2).fold(QPoly::zero(), |acc, k| &acc + &skew_count_poly(n, k));
            assert_eq!(total, QPoly::one().shift(binom2(n)), "n={n}");
        }
    }

    #[test]
    fn skew_identity_holds_in_cleared_form() {
        for n in 0..=7 {
            for k in 0..=(n / 2 + 1) {
                assert!(check_skew_identity(n, k), "failed at ({n},{k})");
            }
        }
    }
}
