//! Brute-force rank census of alternating matrices over small prime fields.
//!
//! For a prime `q` and size `n`, every `n x n` alternating matrix over the
//! `q`-element field — zero diagonal, `a[j][i] = -a[i][j]` — is generated
//! from its strictly-upper triangle, its rank is computed by exact Gaussian
//! elimination mod `q`, and the counts are tallied by rank.  This is the
//! independent oracle for [`skew_count_poly`](crate::qseries::skew_count_poly):
//! the tally at rank `2k` must equal that polynomial evaluated at `q`.
//!
//! The zero-diagonal condition is part of the definition on purpose: in
//! characteristic 2 skew-symmetry alone does not force it, and the counting
//! formulas are about alternating matrices, so `q = 2` would silently
//! disagree without it.
//!
//! Only `q` in {2, 3, 5} is supported, with `n` capped so the search space
//! `q^C(n,2)` stays small.  The index space is split into contiguous blocks,
//! one worker thread per block, and the per-worker tallies are summed.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::thread;

/// Largest `n` accepted for a given field size.
fn max_n(q: u64) -> Option<usize> {
    match q {
        2 | 3 => Some(5),
        5 => Some(4),
        _ => None,
    }
}

/// Multiplicative inverse mod `q`, by scan — `q` is at most 5.
fn inv_mod(a: u64, q: u64) -> u64 {
    (1..q).find(|b| (a * b) % q == 1).expect("nonzero element")
}

/// Rank of `m` (row-major `n x n`, entries already reduced mod `q`) by
/// Gaussian elimination over the prime field.
fn rank_mod(mut m: Vec<u64>, n: usize, q: u64) -> usize {
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| m[r * n + col] != 0) else {
            continue;
        };
        for j in 0..n {
            m.swap(rank * n + j, pivot * n + j);
        }
        let scale = inv_mod(m[rank * n + col], q);
        for j in 0..n {
            m[rank * n + j] = (m[rank * n + j] * scale) % q;
        }
        for r in 0..n {
            if r != rank && m[r * n + col] != 0 {
                let factor = m[r * n + col];
                for j in 0..n {
                    let sub = (factor * m[rank * n + j]) % q;
                    m[r * n + j] = (m[r * n + j] + q - sub) % q;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Decodes matrix number `index` (base-`q` digits filling the strict upper
/// triangle row by row) into a full alternating matrix.
fn decode(mut index: u64, n: usize, q: u64) -> Vec<u64> {
    let mut m = vec![0u64; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let digit = index % q;
            index /= q;
            m[i * n + j] = digit;
            m[j * n + i] = (q - digit) % q;
        }
    }
    m
}

/// Tallies all `q^C(n,2)` alternating matrices by rank.
///
/// Alternating matrices have even rank, and the elimination is exact, so an
/// odd rank in the tally is an arithmetic bug and panics.  Unsupported `q`
/// or an `n` beyond the cap for that `q` is refused.
pub fn skew_rank_census(n: usize, q: u64) -> Result<BTreeMap<usize, u64>> {
    match max_n(q) {
        Some(cap) if n <= cap => {}
        _ => return Err(Error::UnsupportedCensus { n, q }),
    }
    let pairs = (n * n.saturating_sub(1) / 2) as u32;
    let total = q.pow(pairs);
    let workers = thread::available_parallelism().map_or(1, |p| p.get() as u64);
    let block = total.div_ceil(workers).max(1);

    let tallies: Vec<Vec<u64>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..total)
            .step_by(block as usize)
            .map(|start| {
                scope.spawn(move || {
                    let mut tally = vec![0u64; n + 1];
                    for index in start..(start + block).min(total) {
                        let rank = rank_mod(decode(index, n, q), n, q);
                        assert!(rank % 2 == 0, "odd rank {rank} from alternating matrix");
                        tally[rank] += 1;
                    }
                    tally
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut counts = BTreeMap::new();
    for tally in tallies {
        for (rank, c) in tally.into_iter().enumerate() {
            if c > 0 {
                *counts.entry(rank).or_insert(0) += c;
            }
        }
    }
    Ok(counts)
}

/// Every `(n, q)` pair [`skew_rank_census`] accepts, smallest first.
pub fn census_domain() -> Vec<(usize, u64)> {
    let mut pairs = Vec::new();
    for q in [2, 3, 5] {
        for n in 0..=max_n(q).unwrap() {
            pairs.push((n, q));
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::skew_count_poly;
    use num_bigint::BigInt;

    // === golden counts ===

    #[test]
    fn tiny_fields_by_hand() {
        let c = skew_rank_census(2, 2).unwrap();
        assert_eq!(c, BTreeMap::from([(0, 1), (2, 1)]));
        let c = skew_rank_census(3, 2).unwrap();
        assert_eq!(c, BTreeMap::from([(0, 1), (2, 7)]));
        let c = skew_rank_census(4, 3).unwrap();
        assert_eq!(c, BTreeMap::from([(0, 1), (2, 260), (4, 468)]));
        assert_eq!(c.values().sum::<u64>(), 729);
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(skew_rank_census(0, 2).unwrap(), BTreeMap::from([(0, 1)]));
        assert_eq!(skew_rank_census(1, 5).unwrap(), BTreeMap::from([(0, 1)]));
    }

    // === guards ===

    #[test]
    fn refuses_out_of_range_inputs() {
        for (n, q) in [(6, 2), (6, 3), (5, 5), (3, 4), (3, 7), (2, 1)] {
            assert!(
                matches!(skew_rank_census(n, q), Err(Error::UnsupportedCensus { .. })),
                "({n},{q}) should be refused"
            );
        }
    }

    // === agreement with the counting polynomials ===

    #[test]
    fn census_matches_polynomials_everywhere() {
        for (n, q) in census_domain() {
            let counts = skew_rank_census(n, q).unwrap();
            let total: u64 = counts.values().sum();
            assert_eq!(total, q.pow((n * n.saturating_sub(1) / 2) as u32));
            for k in 0..=n / 2 {
                let predicted = skew_count_poly(n, k).eval(&BigInt::from(q));
                let observed = BigInt::from(counts.get(&(2 * k)).copied().unwrap_or(0));
                assert_eq!(predicted, observed, "rank {} at (n={n}, q={q})", 2 * k);
            }
        }
    }
}
