//! Rank-control matrices and the length function.
//!
//! For an element `x` the rank-control matrix `R(x)` has `R[i][j]` = rank of
//! the upper-left `i x j` corner of the matrix of `x`.  Because a partial
//! permutation matrix has at most one 1 per row and column, that rank is
//! simply the number of 1s in the corner, so `R` is computed by counting arc
//! entries (both `(a,b)` and `(b,a)`), never by elimination.
//!
//! The Bruhat order is rank-control domination: `x <= y` iff `R(y) <= R(x)`
//! entrywise (see [`crate::poset::leq`]).  The length function counts
//! diagonal-step equalities in `R` and is exposed here in three equivalent
//! forms, kept as genuinely independent computations so they can check one
//! another.

use crate::involution::PartialInvolution;

/// The matrix of upper-left corner ranks of an element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RankControlMatrix {
    n: usize,
    r: Vec<usize>, // row-major n x n
}

impl RankControlMatrix {
    /// Builds the matrix by 2-dimensional prefix sums over the 1-entries.
    pub fn of(x: &PartialInvolution) -> Self {
        let n = x.n();
        let mut r = vec![0usize; n * n];
        for i in 1..=n {
            if let Some(j) = x.image(i) {
                r[(i - 1) * n + (j - 1)] = 1;
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut v = r[i * n + j];
                if i > 0 {
                    v += r[(i - 1) * n + j];
                }
                if j > 0 {
                    v += r[i * n + j - 1];
                }
                if i > 0 && j > 0 {
                    v -= r[(i - 1) * n + j - 1];
                }
                r[i * n + j] = v;
            }
        }
        RankControlMatrix { n, r }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Corner rank at 1-based `(i, j)`; row or column 0 reads as 0.
    pub fn get(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 {
            0
        } else {
            self.r[(i - 1) * self.n + (j - 1)]
        }
    }

    /// Entrywise `self >= other`; this is the raw comparison behind the
    /// Bruhat order.
    pub fn dominates(&self, other: &RankControlMatrix) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.r.iter().zip(&other.r).all(|(a, b)| a >= b)
    }

    /// The rows as owned vectors (for JSON export and golden tests).
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| self.r[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Number of positions `1 <= i <= j <= n` where the diagonal step
    /// `R[i][j] = R[i-1][j-1]` stalls.
    pub fn rho_leq(&self) -> usize {
        let mut count = 0;
        for i in 1..=self.n {
            for j in i..=self.n {
                if self.get(i, j) == self.get(i - 1, j - 1) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Same count restricted to strictly off-diagonal positions `i < j`.
    pub fn rho_lt(&self) -> usize {
        let mut count = 0;
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.get(i, j) == self.get(i - 1, j - 1) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// The rank-control matrix of `x`.
pub fn rank_control(x: &PartialInvolution) -> RankControlMatrix {
    RankControlMatrix::of(x)
}

/// Diagonal-stall count over `i <= j`.
pub fn rho_leq(x: &PartialInvolution) -> usize {
    RankControlMatrix::of(x).rho_leq()
}

/// Diagonal-stall count over `i < j`.
pub fn rho_lt(x: &PartialInvolution) -> usize {
    RankControlMatrix::of(x).rho_lt()
}

/// The length (graded rank) of `x` in the Bruhat order: `rho_lt`.  This
/// equals `rho_leq - (2n - matrix_rank)/2`: the diagonal of the rank-control
/// matrix climbs from 0 to `matrix_rank` in steps of 0 or 2, so exactly
/// `n - matrix_rank/2` of the `i = j` positions stall and the two counts
/// differ by that amount.  The equivalences are exercised wholesale by the
/// verification suites.
pub fn length_pf(x: &PartialInvolution) -> usize {
    rho_lt(x)
}

/// Independent length formula through the completion: list the arcs of the
/// completion in standard form as a word `lo1 hi1 lo2 hi2 ...`, count its
/// inversions, and add `n - a` for every fixed point `a` of the completion.
pub fn length_via_arcs(x: &PartialInvolution) -> usize {
    let v = x.complete();
    let n = x.n();
    let word: Vec<usize> = v
        .standard_form()
        .iter()
        .flat_map(|a| [a.lo, a.hi])
        .collect();
    let mut inv = 0;
    for p in 0..word.len() {
        for q in p + 1..word.len() {
            if word[p] > word[q] {
                inv += 1;
            }
        }
    }
    inv + v.fixed_points().iter().map(|a| n - a).sum::<usize>()
}
