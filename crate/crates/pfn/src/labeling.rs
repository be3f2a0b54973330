//! EL-labeling of the Hasse diagram.
//!
//! Every cover `y -> x` (y lower) falls into one of three move classes,
//! recognized purely from the one-line diff — the poset itself is ground
//! truth, the taxonomy only classifies its edges:
//!
//! * **c-move**: matrix rank and zero support both unchanged; the arcs are
//!   rearranged.  On the completions this is one of two crossing
//!   transformations applied at a rise `(i1, i2)`: the non-crossing
//!   exceedance/exceedance case or the exceedance/deficiency case.  The
//!   witnessing rise is recovered by search and must be unique.
//! * **r-slide**: a single arc endpoint moves to a larger index.
//! * **r-removal**: one arc is deleted outright (matrix rank drops by 2).
//!   Covers that look like a removal in the one-line diff but factor
//!   through intermediate steps classify here too, by design.
//!
//! The labels attached to these moves form an EL-labeling: in every closed
//! interval exactly one maximal chain is weakly increasing, and that chain
//! is lexicographically first.  [`verify_el_poset`] checks this exhaustively
//! by enumerating the saturated chains of every interval.

use crate::error::{Error, Result};
use crate::involution::{Arc, Involution, PartialInvolution};
use crate::poset::Poset;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Move class of a cover edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum MoveType {
    /// Arc rearrangement at constant rank and support.
    C,
    /// One arc endpoint slides to a larger index.
    RSlide,
    /// One arc is deleted.
    RRemoval,
}

impl fmt::Display for MoveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveType::C => "c",
            MoveType::RSlide => "rs",
            MoveType::RRemoval => "rr",
        })
    }
}

/// Edge label, ordered lexicographically.  All c-moves label below all
/// r-moves: a c-label has first component `n - i1 < n`, an r-label
/// `endpoint + n > n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct CoverLabel {
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for CoverLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Is `(i1, i2)` a free rise of `v`?  A rise means `i1 < i2` with
/// `v(i1) < v(i2)`; free means no `k` strictly between `i1` and `i2` has
/// its value strictly between `v(i1)` and `v(i2)`.
///
/// Fixed points of `v` are transparent: they never block freeness.  A
/// same-support cover of partial elements is really a cover of the squeezed
/// involutions obtained by deleting the empty rows and columns, and the
/// deletion removes exactly the fixed points of the completions while
/// preserving the relative order of everything else.  Checking freeness on
/// the full-size completion with fixed points skipped is equivalent to
/// checking it after squeezing, and it keeps the witness — and hence the
/// label — in original coordinates.
fn is_free_rise(v: &Involution, i1: usize, i2: usize) -> bool {
    if i1 >= i2 || v.apply(i1) >= v.apply(i2) {
        return false;
    }
    let (lo, hi) = (v.apply(i1), v.apply(i2));
    (i1 + 1..i2).all(|k| v.apply(k) == k || !(lo < v.apply(k) && v.apply(k) < hi))
}

/// Rewires the two arcs through `i1` and `i2`: the partners of `i1` and
/// `i2` are exchanged.  Shared surgery for both `ct` transformations.
fn exchange_partners(v: &Involution, i1: usize, i2: usize) -> Result<Involution> {
    let (j1, j2) = (v.apply(i1), v.apply(i2));
    let mut w = v.one_line().to_vec();
    w[i1 - 1] = j2;
    w[j2 - 1] = i1;
    w[i2 - 1] = j1;
    w[j1 - 1] = i2;
    Involution::from_one_line(w)
}

/// Crossing transformation at a free non-crossing
/// exceedance/exceedance rise: requires `i1 < i2 < v(i1) < v(i2)`.  The
/// arcs `(i1, v(i1))` and `(i2, v(i2))` become `(i1, v(i2))` and
/// `(i2, v(i1))`.
pub fn ct_noncrossing_ee(v: &Involution, i1: usize, i2: usize) -> Result<Involution> {
    let fail = |reason: &str| Error::InvalidRise {
        v: v.to_string(),
        i1,
        i2,
        reason: reason.to_string(),
    };
    if !(1 <= i1 && i2 <= v.n() && i1 < i2) {
        return Err(fail("need 1 <= i1 < i2 <= n"));
    }
    if !(i2 < v.apply(i1) && v.apply(i1) < v.apply(i2)) {
        return Err(fail("need non-crossing exceedances i1 < i2 < v(i1) < v(i2)"));
    }
    if !is_free_rise(v, i1, i2) {
        return Err(fail("rise is not free"));
    }
    exchange_partners(v, i1, i2)
}

/// Crossing transformation at a free exceedance/deficiency rise: requires
/// `i1 < v(i1)` and `v(i2) < i2` with `(i1, i2)` a free rise.  The arcs
/// `(i1, v(i1))` and `(v(i2), i2)` become `(i1, v(i2))` and `(v(i1), i2)`.
pub fn ct_ed(v: &Involution, i1: usize, i2: usize) -> Result<Involution> {
    let fail = |reason: &str| Error::InvalidRise {
        v: v.to_string(),
        i1,
        i2,
        reason: reason.to_string(),
    };
    if !(1 <= i1 && i2 <= v.n() && i1 < i2) {
        return Err(fail("need 1 <= i1 < i2 <= n"));
    }
    if !(i1 < v.apply(i1) && v.apply(i2) < i2) {
        return Err(fail("need an exceedance at i1 and a deficiency at i2"));
    }
    if !is_free_rise(v, i1, i2) {
        return Err(fail("rise is not free"));
    }
    exchange_partners(v, i1, i2)
}

/// Finds the unique free rise `(i1, i2)` of the allowed types whose
/// crossing transformation maps `lower` to `upper` (both completions).
/// Zero or multiple witnesses falsify the c-move analysis and are hard
/// errors.
pub fn find_rise(lower: &Involution, upper: &Involution) -> Result<(usize, usize)> {
    let n = lower.n();
    let mut matches = Vec::new();
    for i1 in 1..=n {
        for i2 in i1 + 1..=n {
            for ct in [ct_noncrossing_ee, ct_ed] {
                if let Ok(t) = ct(lower, i1, i2) {
                    if t == *upper {
                        matches.push((i1, i2));
                    }
                }
            }
        }
    }
    match matches[..] {
        [rise] => Ok(rise),
        _ => Err(Error::RiseRecovery {
            lower: lower.to_string(),
            upper: upper.to_string(),
            found: matches.len(),
        }),
    }
}

/// Structural diff of a cover, before any rise search.
enum CoverDiff {
    CMove,
    /// `arc` lost endpoint `from`, gaining `to` instead (the kept endpoint
    /// stays on the same side of the moved one).
    Slide { arc: Arc, from: usize, to: usize },
    Removal { arc: Arc },
}

fn cover_diff(lower: &PartialInvolution, upper: &PartialInvolution) -> Result<CoverDiff> {
    let fail = |reason: String| Error::Unclassifiable {
        lower: lower.to_string(),
        upper: upper.to_string(),
        reason,
    };
    if lower.n() != upper.n() {
        return Err(fail(format!("size mismatch {} vs {}", lower.n(), upper.n())));
    }
    let arcs_lo: BTreeSet<Arc> = lower.arcs().into_iter().collect();
    let arcs_up: BTreeSet<Arc> = upper.arcs().into_iter().collect();

    if upper.matrix_rank() == lower.matrix_rank() {
        if lower.support_mask() == upper.support_mask() {
            if arcs_lo == arcs_up {
                return Err(fail("elements are equal, not a cover".into()));
            }
            return Ok(CoverDiff::CMove);
        }
        // Slide: exactly one arc trades exactly one endpoint, which must
        // move to a larger index on the same side of the kept endpoint.
        // Anything else (including an endpoint sliding past its partner)
        // is reported, never mislabeled.
        let removed: Vec<Arc> = arcs_lo.difference(&arcs_up).copied().collect();
        let added: Vec<Arc> = arcs_up.difference(&arcs_lo).copied().collect();
        let (&old, &new) = match (&removed[..], &added[..]) {
            ([o], [a]) => (o, a),
            _ => return Err(fail(format!(
                "rank and support pattern fits a slide but {} arcs changed",
                removed.len().max(added.len())
            ))),
        };
        return if old.lo == new.lo && new.hi > old.hi {
            Ok(CoverDiff::Slide { arc: old, from: old.hi, to: new.hi })
        } else if old.hi == new.hi && new.lo > old.lo {
            Ok(CoverDiff::Slide { arc: old, from: old.lo, to: new.lo })
        } else {
            Err(fail(format!("arc {old} -> {new} is not a one-endpoint forward slide")))
        };
    }

    if upper.matrix_rank() + 2 == lower.matrix_rank() {
        if !arcs_up.is_subset(&arcs_lo) {
            return Err(fail("rank drops by 2 but surviving arcs changed".into()));
        }
        let removed: Vec<Arc> = arcs_lo.difference(&arcs_up).copied().collect();
        return match removed[..] {
            [arc] => Ok(CoverDiff::Removal { arc }),
            _ => Err(fail("rank drops by 2 but not by deleting one arc".into())),
        };
    }

    Err(fail(format!(
        "rank changes from {} to {}",
        lower.matrix_rank(),
        upper.matrix_rank()
    )))
}

/// Move class of the cover `lower -> upper`.
pub fn classify_cover(lower: &PartialInvolution, upper: &PartialInvolution) -> Result<MoveType> {
    Ok(match cover_diff(lower, upper)? {
        CoverDiff::CMove => MoveType::C,
        CoverDiff::Slide { .. } => MoveType::RSlide,
        CoverDiff::Removal { .. } => MoveType::RRemoval,
    })
}

/// EL-label of the cover `lower -> upper`:
///
/// * c-move with witnessing rise `(i1, i2)` on the completions:
///   `(n - i1, n - i2)`;
/// * r-slide of arc `(a, b)`: `(b + n, a')` when the smaller endpoint moves
///   to `a'`, `(a + n, b')` when the larger moves to `b'`;
/// * r-removal of arc `(a, b)`: `(b + n, n + 1)`.
pub fn label_cover(lower: &PartialInvolution, upper: &PartialInvolution) -> Result<CoverLabel> {
    let n = lower.n();
    Ok(match cover_diff(lower, upper)? {
        CoverDiff::CMove => {
            let (i1, i2) = find_rise(&lower.complete(), &upper.complete())?;
            CoverLabel { a: n - i1, b: n - i2 }
        }
        CoverDiff::Slide { arc, from, to } => {
            if from == arc.lo {
                CoverLabel { a: arc.hi + n, b: to }
            } else {
                CoverLabel { a: arc.lo + n, b: to }
            }
        }
        CoverDiff::Removal { arc } => CoverLabel { a: arc.hi + n, b: n + 1 },
    })
}

/// The labels and move classes of every Hasse edge of a poset, keyed by
/// `(child, parent)` element indices.
pub struct ElLabeling {
    edges: HashMap<(usize, usize), (CoverLabel, MoveType)>,
}

impl ElLabeling {
    pub fn new(poset: &Poset) -> Result<Self> {
        let mut edges = HashMap::new();
        for (i, j) in poset.cover_edges() {
            let lower = poset.element(i);
            let upper = poset.element(j);
            let label = label_cover(lower, upper)?;
            let movetype = classify_cover(lower, upper)?;
            edges.insert((i, j), (label, movetype));
        }
        Ok(ElLabeling { edges })
    }

    /// Label of the cover edge `child -> parent`, if it is one.
    pub fn get(&self, child: usize, parent: usize) -> Option<(CoverLabel, MoveType)> {
        self.edges.get(&(child, parent)).copied()
    }

    fn label(&self, child: usize, parent: usize) -> CoverLabel {
        self.edges[&(child, parent)].0
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Result of checking one interval for the EL property.
#[derive(Clone, Debug, Serialize)]
pub struct ElIntervalReport {
    pub bottom: String,
    pub top: String,
    /// Number of weakly increasing maximal chains; must be exactly 1.
    pub increasing_chains: u64,
    /// Whether the lexicographically first chain is the increasing one.
    pub lex_smallest_ok: bool,
}

impl ElIntervalReport {
    pub fn pass(&self) -> bool {
        self.increasing_chains == 1 && self.lex_smallest_ok
    }
}

fn weakly_increasing(labels: &[CoverLabel]) -> bool {
    labels.windows(2).all(|w| w[0] <= w[1])
}

/// Enumerates every saturated chain of `[bottom, top]` and checks the two
/// EL conditions: a unique weakly increasing maximal chain, which is also
/// lexicographically first.  Failures land in the report, not in a panic.
pub fn verify_el_interval(
    poset: &Poset,
    labeling: &ElLabeling,
    bottom: usize,
    top: usize,
) -> ElIntervalReport {
    let mut increasing = 0u64;
    let mut lex_min: Option<Vec<CoverLabel>> = None;

    let mut labels = Vec::new();
    chain_walk(poset, labeling, bottom, top, &mut labels, &mut |seq| {
        if weakly_increasing(seq) {
            increasing += 1;
        }
        if lex_min.as_deref().is_none_or(|m| seq < m) {
            lex_min = Some(seq.to_vec());
        }
    });

    ElIntervalReport {
        bottom: poset.element(bottom).to_string(),
        top: poset.element(top).to_string(),
        increasing_chains: increasing,
        lex_smallest_ok: lex_min.as_deref().is_some_and(weakly_increasing),
    }
}

fn chain_walk<F: FnMut(&[CoverLabel])>(
    poset: &Poset,
    labeling: &ElLabeling,
    cur: usize,
    top: usize,
    labels: &mut Vec<CoverLabel>,
    f: &mut F,
) {
    if cur == top {
        f(labels);
        return;
    }
    for &next in poset.covers(cur) {
        if poset.leq_idx(next, top) {
            labels.push(labeling.label(cur, next));
            chain_walk(poset, labeling, next, top, labels, f);
            labels.pop();
        }
    }
}

/// Summary of an exhaustive EL check over every interval of a poset.
#[derive(Clone, Debug, Serialize)]
pub struct ElSummary {
    pub n: usize,
    pub intervals_checked: u64,
    pub failures: Vec<ElIntervalReport>,
    pub passed: bool,
}

/// Builds the poset and labeling for size `n` and checks the EL property on
/// every closed interval of length >= 1.
pub fn verify_el_poset(n: usize) -> Result<ElSummary> {
    let poset = Poset::build(n)?;
    let labeling = ElLabeling::new(&poset)?;
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for bottom in 0..poset.len() {
        for top in 0..poset.len() {
            if poset.lt_idx(bottom, top) {
                checked += 1;
                let report = verify_el_interval(&poset, &labeling, bottom, top);
                if !report.pass() {
                    failures.push(report);
                }
            }
        }
    }
    Ok(ElSummary {
        n,
        intervals_checked: checked,
        passed: failures.is_empty(),
        failures,
    })
}

/// Rank-selected chain/Möbius comparison for one rank set `s` (a subset of
/// the proper ranks `1..top_rank`): the number of maximal chains whose
/// label descent set is exactly `s` must equal
/// `(-1)^(|s| - 1) mu(0̂, 1̂)` of the rank-selected subposet.  Descents are
/// the positions `i` (1-based) with `label_i >= label_{i+1}`.
pub fn rank_selected_check(poset: &Poset, labeling: &ElLabeling, s: &BTreeSet<usize>) -> bool {
    let tally = descent_set_tally(poset, labeling);
    rank_selected_matches(poset, &tally, s)
}

/// Descent sets of all maximal chains, tallied.
pub fn descent_set_tally(
    poset: &Poset,
    labeling: &ElLabeling,
) -> HashMap<BTreeSet<usize>, i64> {
    let mut tally: HashMap<BTreeSet<usize>, i64> = HashMap::new();
    poset.visit_maximal_chains(&mut |chain: &[usize]| {
        let labels: Vec<CoverLabel> = chain
            .windows(2)
            .map(|e| labeling.label(e[0], e[1]))
            .collect();
        let descents: BTreeSet<usize> = (1..labels.len())
            .filter(|&i| labels[i - 1] >= labels[i])
            .collect();
        *tally.entry(descents).or_insert(0) += 1;
    });
    tally
}

pub(crate) fn rank_selected_matches(
    poset: &Poset,
    tally: &HashMap<BTreeSet<usize>, i64>,
    s: &BTreeSet<usize>,
) -> bool {
    let mu = poset.mobius_rank_selected(s);
    let signed = if s.len() % 2 == 1 { mu } else { -mu };
    let chains = tally.get(s).copied().unwrap_or(0);
    signed == chains
}

/// Runs [`rank_selected_check`] for every subset of the proper ranks
/// `1..top_rank`, tallying chains once, and returns the subsets that fail
/// (empty = all pass).  Exponential in the rank: meant for small sizes.
pub fn rank_selected_sweep(poset: &Poset, labeling: &ElLabeling) -> Vec<BTreeSet<usize>> {
    let tally = descent_set_tally(poset, labeling);
    let interior: Vec<usize> = (1..poset.top_rank()).collect();
    let mut failures = Vec::new();
    for mask in 0u64..(1 << interior.len()) {
        let s: BTreeSet<usize> = interior
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &r)| r)
            .collect();
        if !rank_selected_matches(poset, &tally, &s) {
            failures.push(s);
        }
    }
    failures
}
