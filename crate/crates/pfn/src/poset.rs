//! The Bruhat poset on partial fixed-point-free involutions of a fixed size.
//!
//! The order is rank-control domination: `x <= y` iff `R(y) <= R(x)`
//! entrywise (the zero matrix is the maximum, the dense matching
//! `2,1,4,3,...` the minimum).  [`Poset::build`] materializes the full order
//! as a bit matrix, takes the transitive reduction as the ground-truth Hasse
//! diagram, and cross-checks it against the length function: an edge is a
//! cover iff the lengths differ by exactly 1.  Construction fails loudly if
//! any structural invariant (unique bounds, gradedness, strict monotonicity
//! of length) does not hold, so downstream verification never runs on a
//! silently broken poset.

use crate::error::{Error, Result};
use crate::involution::{enumerate_pf, minimum_element, PartialInvolution};
use crate::rank::{rank_control, RankControlMatrix};
use std::collections::BTreeSet;

/// Default size guard for poset construction; larger n must be forced.
pub const DEFAULT_MAX_N: usize = 7;

/// Bruhat comparison of two elements: `x <= y` iff the rank-control matrix
/// of `x` dominates that of `y` entrywise.
pub fn leq(x: &PartialInvolution, y: &PartialInvolution) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    Ok(rank_control(x).dominates(&rank_control(y)))
}

/// Square bit matrix used for the dense order relation.
#[derive(Clone)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(m: usize) -> Self {
        let words = m.div_ceil(64);
        BitMatrix {
            words,
            bits: vec![0; words * m],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn rows_intersect(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// The full Bruhat poset on size-`n` elements.
pub struct Poset {
    n: usize,
    elements: Vec<PartialInvolution>,
    ranks: Vec<usize>,
    structural: Vec<usize>,
    above: BitMatrix, // above.get(i, j) == elements[i] < elements[j]
    up: Vec<Vec<usize>>,   // covers of i (parents), ascending
    down: Vec<Vec<usize>>, // cocovers of i (children), ascending
    min_idx: usize,
    max_idx: usize,
}

impl Poset {
    /// Builds the poset, refusing `n` beyond [`DEFAULT_MAX_N`].
    pub fn build(n: usize) -> Result<Poset> {
        if n > DEFAULT_MAX_N {
            return Err(Error::SizeGuard {
                n,
                limit: DEFAULT_MAX_N,
            });
        }
        Self::build_forced(n)
    }

    /// Builds the poset with no size guard.  Memory and time are quadratic
    /// in the number of elements, which grows like the involution numbers.
    pub fn build_forced(n: usize) -> Result<Poset> {
        let elements = enumerate_pf(n);
        let m = elements.len();
        let mats: Vec<RankControlMatrix> = elements.iter().map(rank_control).collect();
        let ranks: Vec<usize> = mats.iter().map(|r| r.rho_lt()).collect();

        // Dense strict order.  Distinct elements must have distinct
        // rank-control matrices; mutual domination would break antisymmetry.
        let mut above = BitMatrix::new(m);
        let mut below = BitMatrix::new(m);
        for i in 0..m {
            for j in 0..m {
                if i != j && mats[i].dominates(&mats[j]) {
                    if mats[j].dominates(&mats[i]) {
                        return Err(Error::Structure(format!(
                            "rank-control collision between {} and {}",
                            elements[i], elements[j]
                        )));
                    }
                    above.set(i, j);
                    below.set(j, i);
                }
            }
        }

        // Unique bounds: the dense matching is below everything, the zero
        // matrix above everything.
        let min_idx = elements
            .binary_search_by(|x| x.one_line().cmp(minimum_element(n).one_line()))
            .map_err(|_| Error::Structure("minimum element not enumerated".into()))?;
        let max_idx = elements
            .binary_search_by(|x| x.one_line().cmp(PartialInvolution::zero(n).one_line()))
            .map_err(|_| Error::Structure("maximum element not enumerated".into()))?;
        if above.row_count(min_idx) != m - 1 {
            return Err(Error::Structure("minimum is not below every element".into()));
        }
        if below.row_count(max_idx) != m - 1 {
            return Err(Error::Structure("maximum is not above every element".into()));
        }

        // Hasse diagram = transitive reduction: i -> j is a cover iff
        // nothing lies strictly between.
        let mut up = vec![Vec::new(); m];
        let mut down = vec![Vec::new(); m];
        for i in 0..m {
            for j in 0..m {
                if above.get(i, j) && !rows_intersect(above.row(i), below.row(j)) {
                    up[i].push(j);
                    down[j].push(i);
                }
            }
        }

        // Cross-check the reduction against the length function: covers are
        // exactly the comparable pairs at length distance 1.
        for i in 0..m {
            for j in 0..m {
                if !above.get(i, j) {
                    continue;
                }
                if ranks[j] <= ranks[i] {
                    return Err(Error::Structure(format!(
                        "length not strictly monotone on {} < {}",
                        elements[i], elements[j]
                    )));
                }
                let delta_one = ranks[j] == ranks[i] + 1;
                let is_cover = up[i].binary_search(&j).is_ok();
                if delta_one != is_cover {
                    return Err(Error::Structure(format!(
                        "cover shortcut mismatch on {} < {}: length gap {}, in reduction: {}",
                        elements[i],
                        elements[j],
                        ranks[j] - ranks[i],
                        is_cover
                    )));
                }
            }
        }

        // Structural graded rank: chain distance from the minimum along the
        // Hasse diagram.  Longest and shortest distances must agree with
        // each other and with the length function.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| ranks[i]); // a linear extension, by monotonicity above
        let mut structural = vec![0usize; m];
        for &i in &order {
            if i == min_idx {
                continue;
            }
            if down[i].is_empty() {
                return Err(Error::Structure(format!(
                    "{} has no cocover but is not the minimum",
                    elements[i]
                )));
            }
            let longest = down[i].iter().map(|&c| structural[c]).max().unwrap() + 1;
            let shortest = down[i].iter().map(|&c| structural[c]).min().unwrap() + 1;
            if longest != shortest {
                return Err(Error::Structure(format!(
                    "saturated chains to {} have different lengths",
                    elements[i]
                )));
            }
            structural[i] = longest;
        }
        for i in 0..m {
            if structural[i] != ranks[i] {
                return Err(Error::Structure(format!(
                    "structural rank {} != length {} at {}",
                    structural[i], ranks[i], elements[i]
                )));
            }
        }

        Ok(Poset {
            n,
            elements,
            ranks,
            structural,
            above,
            up,
            down,
            min_idx,
            max_idx,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in canonical (lexicographic) order.
    pub fn elements(&self) -> &[PartialInvolution] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &PartialInvolution {
        &self.elements[i]
    }

    /// Canonical index of an element, if it belongs to this poset.
    pub fn index_of(&self, x: &PartialInvolution) -> Option<usize> {
        if x.n() != self.n {
            return None;
        }
        self.elements
            .binary_search_by(|e| e.one_line().cmp(x.one_line()))
            .ok()
    }

    /// Length of the element at index `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Rank of the same element measured as chain distance from the minimum
    /// in the Hasse diagram (verified equal to [`Poset::rank`] at build
    /// time, but computed independently).
    pub fn structural_rank(&self, i: usize) -> usize {
        self.structural[i]
    }

    /// Length of the maximum, i.e. the common length of all maximal chains.
    pub fn top_rank(&self) -> usize {
        self.ranks[self.max_idx]
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        i == j || self.above.get(i, j)
    }

    pub fn lt_idx(&self, i: usize, j: usize) -> bool {
        self.above.get(i, j)
    }

    /// Indices covering `i` (its parents in the Hasse diagram), ascending.
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Indices covered by `i` (its children), ascending.
    pub fn cocovers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// All Hasse edges as `(child, parent)` pairs in canonical order.
    pub fn cover_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |i| self.up[i].iter().map(move |&j| (i, j)))
    }

    pub fn min_idx(&self) -> usize {
        self.min_idx
    }

    pub fn max_idx(&self) -> usize {
        self.max_idx
    }

    /// The closed interval `[bottom, top]`, members in canonical order.
    pub fn interval(&self, bottom: usize, top: usize) -> Result<Interval<'_>> {
        if !self.leq_idx(bottom, top) {
            return Err(Error::NotComparable {
                x: self.elements[bottom].to_string(),
                y: self.elements[top].to_string(),
            });
        }
        let members = (0..self.len())
            .filter(|&z| self.leq_idx(bottom, z) && self.leq_idx(z, top))
            .collect();
        Ok(Interval {
            poset: self,
            bottom,
            top,
            members,
        })
    }

    /// Möbius function of the interval `[bottom, top]`, by the defining
    /// recursion over lower parts.
    pub fn mobius(&self, bottom: usize, top: usize) -> Result<i64> {
        let iv = self.interval(bottom, top)?;
        let mut members = iv.members;
        members.sort_by_key(|&z| (self.ranks[z], z));
        let mut mu = vec![0i64; members.len()];
        mu[0] = 1; // members[0] == bottom
        for t in 1..members.len() {
            let mut acc = 0i64;
            for s in 0..t {
                if self.leq_idx(members[s], members[t]) && members[s] != members[t] {
                    acc += mu[s];
                }
            }
            mu[t] = -acc;
        }
        Ok(*mu.last().unwrap())
    }

    /// Möbius function `mu(0̂, 1̂)` of the rank-selected subposet: keep the
    /// elements whose length lies in `s`, then adjoin a bottom and a top if
    /// they are missing.
    pub fn mobius_rank_selected(&self, s: &BTreeSet<usize>) -> i64 {
        #[derive(PartialEq)]
        enum Node {
            Bottom,
            Real(usize),
            Top,
        }
        let mut members: Vec<usize> = (0..self.len())
            .filter(|&i| s.contains(&self.ranks[i]))
            .collect();
        members.sort_by_key(|&i| (self.ranks[i], i));

        // Rank 0 selects the unique minimum and the top rank the unique
        // maximum, so those selections supply real bounds; otherwise adjoin
        // virtual ones.  (In the one-element poset both bounds coincide.)
        let mut nodes = Vec::with_capacity(members.len() + 2);
        if !s.contains(&0) {
            nodes.push(Node::Bottom);
        }
        nodes.extend(members.into_iter().map(Node::Real));
        if !s.contains(&self.top_rank()) {
            nodes.push(Node::Top);
        }
        if nodes.len() == 1 {
            return 1; // bottom == top
        }

        let less = |a: &Node, b: &Node| match (a, b) {
            (Node::Bottom, Node::Bottom) | (Node::Top, _) | (_, Node::Bottom) => false,
            (Node::Bottom, _) => true,
            (_, Node::Top) => true,
            (Node::Real(u), Node::Real(v)) => self.lt_idx(*u, *v),
        };
        let mut mu = vec![0i64; nodes.len()];
        mu[0] = 1;
        for t in 1..nodes.len() {
            let mut acc = 0i64;
            for s in 0..t {
                if less(&nodes[s], &nodes[t]) {
                    acc += mu[s];
                }
            }
            mu[t] = -acc;
        }
        *mu.last().unwrap()
    }

    /// Calls `f` once per maximal chain (as the slice of element indices
    /// from minimum to maximum along cover edges), in lexicographic order of
    /// the index sequences.
    pub fn visit_maximal_chains<F: FnMut(&[usize])>(&self, f: &mut F) {
        let mut chain = vec![self.min_idx];
        self.chain_dfs(self.min_idx, &mut chain, f);
    }

    fn chain_dfs<F: FnMut(&[usize])>(&self, cur: usize, chain: &mut Vec<usize>, f: &mut F) {
        if cur == self.max_idx {
            f(chain);
            return;
        }
        for &next in &self.up[cur] {
            chain.push(next);
            self.chain_dfs(next, chain, f);
            chain.pop();
        }
    }
}

/// A closed interval of a [`Poset`].
pub struct Interval<'a> {
    pub poset: &'a Poset,
    pub bottom: usize,
    pub top: usize,
    /// Member indices in canonical order (inclusive of both endpoints).
    pub members: Vec<usize>,
}

impl Interval<'_> {
    /// Length of the interval as a graded poset: the rank difference of its
    /// endpoints.
    pub fn length(&self) -> usize {
        self.poset.rank(self.top) - self.poset.rank(self.bottom)
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}
