//! Partial fixed-point-free involutions and their completions.
//!
//! A partial fixed-point-free involution of size `n` is a symmetric `n x n`
//! partial permutation matrix with no 1 on the diagonal.  We store it in
//! one-line notation: entry `i` (1-based) holds the column of the 1 in row
//! `i`, or 0 when row `i` is empty.  Symmetry forces the nonzero entries to
//! come in pairs `w[i] = j`, `w[j] = i` with `i != j`, so an element is the
//! same thing as a partial matching of `{1..n}`; each matched pair is an
//! [`Arc`].

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// An unordered matched pair `{lo, hi}` with `lo < hi`, i.e. the pair of
/// symmetric 1s at positions `(lo, hi)` and `(hi, lo)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Arc {
    pub lo: usize,
    pub hi: usize,
}

impl Arc {
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(0 < lo && lo < hi, "arc endpoints must satisfy 0 < lo < hi");
        Arc { lo, hi }
    }

    /// The two endpoints, smaller first.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo == i || self.hi == i
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// A partial fixed-point-free involution in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialInvolution {
    n: usize,
    w: Vec<usize>,
}

impl PartialInvolution {
    /// Validates and wraps a one-line word.  Entries must lie in `0..=n`,
    /// avoid the diagonal (`w[i] != i`), and be symmetric (`w[i] = j > 0`
    /// implies `w[j] = i`).
    pub fn from_one_line(w: Vec<usize>) -> Result<Self> {
        let n = w.len();
        for (idx, &j) in w.iter().enumerate() {
            let i = idx + 1;
            if j > n {
                return Err(Error::InvalidElement(format!(
                    "entry w[{i}]={j} out of range for n={n}"
                )));
            }
            if j == i {
                return Err(Error::InvalidElement(format!("fixed point at {i}")));
            }
            if j > 0 && w[j - 1] != i {
                return Err(Error::InvalidElement(format!(
                    "not symmetric: w[{i}]={j} but w[{j}]={}",
                    w[j - 1]
                )));
            }
        }
        Ok(PartialInvolution { n, w })
    }

    /// The all-empty element (the zero matrix), the unique maximum of the
    /// Bruhat order.
    pub fn zero(n: usize) -> Self {
        PartialInvolution { n, w: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The one-line word; `one_line()[i-1]` is the image of `i`, 0 = empty.
    pub fn one_line(&self) -> &[usize] {
        &self.w
    }

    /// Image of `i` (1-based), `None` when row `i` is empty.
    pub fn image(&self, i: usize) -> Option<usize> {
        match self.w[i - 1] {
            0 => None,
            j => Some(j),
        }
    }

    /// The arcs (matched pairs), sorted by smaller endpoint.
    pub fn arcs(&self) -> Vec<Arc> {
        (1..=self.n)
            .filter_map(|i| match self.w[i - 1] {
                j if j > i => Some(Arc::new(i, j)),
                _ => None,
            })
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs().len()
    }

    /// Matrix rank = number of 1s = twice the number of arcs.
    pub fn matrix_rank(&self) -> usize {
        self.w.iter().filter(|&&j| j > 0).count()
    }

    /// Indices with a nonzero entry, as a bitmask (bit `i-1` for index `i`).
    pub(crate) fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for i in 1..=self.n {
            if self.w[i - 1] > 0 {
                m |= 1 << (i - 1);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.w.iter().all(|&j| j == 0)
    }

    /// The completion: every empty row/column gets its diagonal 1, producing
    /// an honest involution of `{1..n}` whose fixed points are exactly the
    /// empty indices.
    pub fn complete(&self) -> Involution {
        let w = (1..=self.n)
            .map(|i| match self.w[i - 1] {
                0 => i,
                j => j,
            })
            .collect();
        Involution { n: self.n, w }
    }
}

impl fmt::Display for PartialInvolution {
    /// Comma-separated one-line notation, e.g. `2,1,0,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.w.iter().map(|j| j.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for PartialInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialInvolution({self})")
    }
}

impl FromStr for PartialInvolution {
    type Err = Error;

    /// Parses comma-separated one-line notation; the size is the number of
    /// entries.
    fn from_str(s: &str) -> Result<Self> {
        let w = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidElement(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PartialInvolution::from_one_line(w)
    }
}

/// A (total) involution of `{1..n}` in one-line notation; fixed points are
/// allowed.  Completions of partial fixed-point-free involutions land here.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Involution {
    n: usize,
    w: Vec<usize>,
}

impl Involution {
    pub fn from_one_line(w: Vec<usize>) -> Result<Self> {
        let n = w.len();
        for (idx, &j) in w.iter().enumerate() {
            let i = idx + 1;
            if j == 0 || j > n {
                return Err(Error::InvalidElement(format!(
                    "entry w[{i}]={j} out of range for n={n}"
                )));
            }
            if w[j - 1] != i {
                return Err(Error::InvalidElement(format!(
                    "not an involution: w[{i}]={j} but w[{j}]={}",
                    w[j - 1]
                )));
            }
        }
        Ok(Involution { n, w })
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            n,
            w: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one_line(&self) -> &[usize] {
        &self.w
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.w[i - 1]
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.w[i - 1] == i).collect()
    }

    /// The arcs (2-cycles), sorted by smaller endpoint.  Listing them in this
    /// order is the standard form of the involution.
    pub fn standard_form(&self) -> Vec<Arc> {
        (1..=self.n)
            .filter_map(|i| match self.w[i - 1] {
                j if j > i => Some(Arc::new(i, j)),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.w.iter().map(|j| j.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution({self})")
    }
}

/// The unique minimum of the Bruhat order on size-`n` elements: arcs
/// `(1,2), (3,4), ...`, with index `n` left empty when `n` is odd.
pub fn minimum_element(n: usize) -> PartialInvolution {
    let mut w = vec![0; n];
    let mut i = 1;
    while i + 1 <= n {
        w[i - 1] = i + 1;
        w[i] = i;
        i += 2;
    }
    PartialInvolution { n, w }
}

/// The unique maximum of the Bruhat order: the zero matrix.
pub fn maximum_element(n: usize) -> PartialInvolution {
    PartialInvolution::zero(n)
}

/// All partial fixed-point-free involutions of size `n`, in lexicographic
/// order of their one-line words.  This is the canonical element order used
/// everywhere in the crate.  `n = 0` yields the single empty element.
pub fn enumerate_pf(n: usize) -> Vec<PartialInvolution> {
    let mut out = Vec::new();
    let mut w = vec![0usize; n];
    fill(&mut w, 0, n, &mut out);
    out
}

/// Backtracking enumeration: at the first undecided index choose 0 or an arc
/// to a larger unused index, in increasing value order.  Every smaller index
/// is already decided, so this emits words in lexicographic order.
fn fill(w: &mut Vec<usize>, from: usize, n: usize, out: &mut Vec<PartialInvolution>) {
    let mut i = from;
    while i < n && w[i] != 0 {
        i += 1;
    }
    if i == n {
        out.push(PartialInvolution { n, w: w.clone() });
        return;
    }
    // Leave index i+1 empty (value 0 sorts first)...
    fill(w, i + 1, n, out);
    // ...or pair it with each larger unused index.
    for j in i + 1..n {
        if w[j] == 0 {
            w[i] = j + 1;
            w[j] = i + 1;
            fill(w, i + 1, n, out);
            w[i] = 0;
            w[j] = 0;
        }
    }
}

/// The elements of size `n` with exactly `k` arcs, in canonical order.
/// `k > floor(n/2)` yields an empty list.
pub fn enumerate_arcs(n: usize, k: usize) -> Vec<PartialInvolution> {
    enumerate_pf(n)
        .into_iter()
        .filter(|x| x.arc_count() == k)
        .collect()
}

/// Expected element count for size `m`, from the involution-number
/// recurrence `a(m) = a(m-1) + (m-1) a(m-2)`, `a(0) = a(1) = 1`.  Size-`m`
/// elements are in bijection with involutions of `{1..m}` via completion,
/// so the recurrence is an independent oracle for [`enumerate_pf`].
pub fn involution_number(m: usize) -> u64 {
    let (mut prev2, mut prev1) = (1u64, 1u64);
    for i in 2..=m {
        let cur = prev1 + (i as u64 - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    if m == 0 {
        1
    } else {
        prev1
    }
}
