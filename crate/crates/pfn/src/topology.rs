//! Order-complex topology certificates.
//!
//! The order complex of the proper part of the poset (everything strictly
//! between the bounds) is certified to be a ball by combining four
//! exhaustively checked facts: the poset is pure (every maximal chain has
//! the full length), EL-shellable, thin in the weak sense that length-2
//! intervals have 3 or 4 elements, and has vanishing reduced Euler
//! characteristic.  A shellable pseudomanifold-like complex of this kind is
//! a ball when the Euler characteristic vanishes and a sphere when it is
//! `(-1)^dim`; anything else stays `INCONCLUSIVE` — the verdict is only as
//! strong as the checks that feed it.
//!
//! The reduced Euler characteristic is computed twice, by genuinely
//! different routes: as `mu(0̂, 1̂)` via the Möbius recursion, and (for
//! small sizes) as the alternating sum of chain counts of the proper part.

use crate::error::Result;
use crate::labeling::verify_el_poset;
use crate::poset::Poset;
use serde::Serialize;
use std::fmt;

/// Dimension of the order complex of the full poset (bounds included):
/// the top rank, which equals `C(n,2)`.  Asserts the two agree.
pub fn complex_dimension(poset: &Poset) -> usize {
    let n = poset.n();
    let expected = n * (n - 1) / 2;
    assert_eq!(
        poset.top_rank(),
        expected,
        "top rank must be C(n,2) = {expected}"
    );
    expected
}

/// Counts maximal chains while asserting purity: every maximal chain must
/// run from the minimum to the maximum in exactly `top_rank` steps.
/// Returns `(count, pure)`.
pub fn maximal_chains(poset: &Poset) -> (u64, bool) {
    let expected = poset.top_rank() + 1;
    let mut count = 0u64;
    let mut pure = true;
    poset.visit_maximal_chains(&mut |chain: &[usize]| {
        count += 1;
        if chain.len() != expected {
            pure = false;
        }
    });
    (count, pure)
}

/// Thinness in the weak sense: every closed interval of length 2 has 3 or 4
/// elements, i.e. 1 or 2 interior points.
pub fn check_thin(poset: &Poset) -> ThinReport {
    let mut report = ThinReport {
        ok: true,
        size3: 0,
        size4: 0,
    };
    for lo in 0..poset.len() {
        for hi in 0..poset.len() {
            if poset.lt_idx(lo, hi) && poset.rank(hi) == poset.rank(lo) + 2 {
                let interior = (0..poset.len())
                    .filter(|&z| poset.lt_idx(lo, z) && poset.lt_idx(z, hi))
                    .count();
                match interior {
                    1 => report.size3 += 1,
                    2 => report.size4 += 1,
                    _ => report.ok = false,
                }
            }
        }
    }
    report
}

/// Tally of length-2 interval shapes.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ThinReport {
    pub ok: bool,
    /// Intervals with a single interior element (3 elements total).
    pub size3: u64,
    /// Diamond intervals (4 elements total).
    pub size4: u64,
}

/// Reduced Euler characteristic of the order complex of the proper part,
/// computed as `mu(0̂, 1̂)`.
pub fn reduced_euler(poset: &Poset) -> i64 {
    poset
        .mobius(poset.min_idx(), poset.max_idx())
        .expect("bounds are comparable")
}

/// The same number by direct face counting: chains of the proper part are
/// the faces of its order complex, so the reduced Euler characteristic is
/// `sum_k (-1)^(k-1) c_k` with `c_k` the number of `k`-element chains and
/// `c_0 = 1` for the empty chain.  Counting is by dynamic programming over
/// chain endpoints; nothing is materialized.
pub fn euler_via_chain_counts(poset: &Poset) -> i64 {
    let proper: Vec<usize> = (0..poset.len())
        .filter(|&z| z != poset.min_idx() && z != poset.max_idx())
        .collect();
    let top_len = poset.top_rank().saturating_sub(1).max(1);
    // ends[z][k] = number of (k+1)-element chains of the proper part ending at z
    let mut ends: Vec<Vec<i128>> = vec![vec![0; top_len]; poset.len()];
    let mut order = proper.clone();
    order.sort_by_key(|&z| poset.rank(z));
    for &z in &order {
        ends[z][0] = 1;
        for &w in &order {
            if poset.lt_idx(w, z) {
                for k in 1..top_len {
                    let inc = ends[w][k - 1];
                    ends[z][k] += inc;
                }
            }
        }
    }
    let mut euler: i128 = -1; // the empty chain, with sign (-1)^(0-1)
    for k in 0..top_len {
        let c: i128 = proper.iter().map(|&z| ends[z][k]).sum();
        let signed = if k % 2 == 0 { c } else { -c };
        euler += signed;
    }
    i64::try_from(euler).expect("Euler characteristic fits in i64")
}

/// Verdict of the topology certificate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    #[serde(rename = "BALL")]
    Ball,
    #[serde(rename = "SPHERE")]
    Sphere,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Ball => "BALL",
            Verdict::Sphere => "SPHERE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Exhaustively computed topology certificate for the proper-part order
/// complex at one size.
#[derive(Clone, Debug, Serialize)]
pub struct BallCertificate {
    pub n: usize,
    /// Dimension of the proper-part complex, `C(n,2) - 2`.
    pub dim_complex: i64,
    pub pure: bool,
    pub thin_ok: bool,
    pub shellable: bool,
    pub euler_reduced: i64,
    pub verdict: Verdict,
}

/// Builds the poset for size `n` and assembles the certificate.  The
/// verdict is `BALL` only when purity, thinness, shellability and vanishing
/// reduced Euler characteristic all hold; `SPHERE` when the first three
/// hold and the Euler characteristic matches the sphere of the complex's
/// dimension; otherwise `INCONCLUSIVE`.
pub fn ball_certificate(n: usize) -> Result<BallCertificate> {
    let poset = Poset::build(n)?;
    let dim_full = complex_dimension(&poset) as i64;
    let dim_complex = dim_full - 2;
    let (_, pure) = maximal_chains(&poset);
    let thin_ok = check_thin(&poset).ok;
    let shellable = verify_el_poset(n)?.passed;
    let euler_reduced = reduced_euler(&poset);

    let sphere_euler = if dim_complex.rem_euclid(2) == 0 { 1 } else { -1 };
    let verdict = if pure && thin_ok && shellable && euler_reduced == 0 {
        Verdict::Ball
    } else if pure && thin_ok && shellable && euler_reduced == sphere_euler {
        Verdict::Sphere
    } else {
        Verdict::Inconclusive
    };
    Ok(BallCertificate {
        n,
        dim_complex,
        pure,
        thin_ok,
        shellable,
        euler_reduced,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(n: usize) -> Poset {
        Poset::build(n).unwrap()
    }

    #[test]
    fn dimension_is_binomial() {
        for n in 2..=6 {
            assert_eq!(complex_dimension(&poset(n)), n * (n - 1) / 2);
        }
    }

    #[test]
    fn chain_counts_and_purity() {
        let (c3, pure3) = maximal_chains(&poset(3));
        assert_eq!((c3, pure3), (1, true));
        let (c4, pure4) = maximal_chains(&poset(4));
        // DP over the 13-edge diagram gives 6 paths.
        assert_eq!((c4, pure4), (6, true));
        for n in 2..=6 {
            assert!(maximal_chains(&poset(n)).1, "purity at n={n}");
        }
    }

    #[test]
    fn thinness_holds_and_sees_both_shapes() {
        for n in 2..=6 {
            let report = check_thin(&poset(n));
            assert!(report.ok, "thinness at n={n}");
            if n >= 3 {
                assert!(report.size3 > 0, "no 3-element interval at n={n}");
            }
            if n >= 4 {
                assert!(report.size4 > 0, "no diamond at n={n}");
            }
        }
    }

    #[test]
    fn euler_routes_agree() {
        // 2-chain: empty proper part, reduced Euler char of the empty complex
        assert_eq!(reduced_euler(&poset(2)), -1);
        assert_eq!(euler_via_chain_counts(&poset(2)), -1);
        for n in 3..=5 {
            let p = poset(n);
            assert_eq!(reduced_euler(&p), 0, "mu route at n={n}");
            assert_eq!(euler_via_chain_counts(&p), 0, "face route at n={n}");
        }
    }

    #[test]
    fn certificates_say_ball_for_3_to_5() {
        for n in 3..=5 {
            let cert = ball_certificate(n).unwrap();
            assert_eq!(cert.verdict, Verdict::Ball, "n={n}");
            assert_eq!(cert.dim_complex, (n * (n - 1) / 2) as i64 - 2);
            assert!(cert.pure && cert.thin_ok && cert.shellable);
            assert_eq!(cert.euler_reduced, 0);
        }
    }

    #[test]
    fn certificate_for_2_is_a_sphere() {
        // Empty proper part = the (-1)-dimensional sphere.
        let cert = ball_certificate(2).unwrap();
        assert_eq!(cert.dim_complex, -1);
        assert_eq!(cert.euler_reduced, -1);
        assert_eq!(cert.verdict, Verdict::Sphere);
    }

    #[test]
    fn certificate_serializes_verdict_as_screaming_case() {
        let cert = ball_certificate(3).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("\"verdict\":\"BALL\""), "{json}");
    }
}
