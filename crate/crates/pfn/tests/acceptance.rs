//! End-to-end acceptance checks.
//!
//! Each test verifies one headline fact about the poset family, from the
//! golden size-4 Hasse diagram through the finite-field census, and prints
//! a single pass line (visible with `--nocapture`).  Each test is
//! self-contained so a failure pinpoints the broken layer.

use num_bigint::BigInt;
use pfn::census::{census_domain, skew_rank_census};
use pfn::involution::{enumerate_pf, involution_number, PartialInvolution};
use pfn::labeling::{rank_selected_sweep, verify_el_poset, ElLabeling, MoveType};
use pfn::poset::Poset;
use pfn::qpoly::Poly;
use pfn::qseries::{
    check_gauss_identity, check_i_recurrence, check_p_recurrence, i_poly_closed, i_poly_enum,
    p_poly, q_odd_double_factorial, skew_count_poly,
};
use pfn::rank::{length_pf, length_via_arcs, rank_control, rho_leq, rho_lt};
use pfn::topology::ball_certificate;
use pfn::{QPoly, Verdict};
use std::time::Instant;

fn el(s: &str) -> PartialInvolution {
    s.parse().unwrap()
}

fn pass(number: u32, name: &str, started: Instant) {
    println!(
        "criterion {number:02} ({name}): PASS ({:.2?})",
        started.elapsed()
    );
}

#[test]
fn criterion_01_golden_hasse() {
    let started = Instant::now();
    let poset = Poset::build(4).unwrap();
    assert_eq!(poset.len(), 10, "the size-4 poset has 10 elements");
    let labeling = ElLabeling::new(&poset).unwrap();

    let golden: [(&str, &str, (usize, usize), MoveType); 13] = [
        ("2,1,4,3", "3,4,1,2", (3, 0), MoveType::C),
        ("2,1,4,3", "2,1,0,0", (8, 5), MoveType::RRemoval),
        ("3,4,1,2", "4,3,2,1", (3, 2), MoveType::C),
        ("3,4,1,2", "3,0,1,0", (8, 5), MoveType::RRemoval),
        ("2,1,0,0", "3,0,1,0", (5, 3), MoveType::RSlide),
        ("4,3,2,1", "4,0,0,1", (7, 5), MoveType::RRemoval),
        ("4,3,2,1", "0,3,2,0", (8, 5), MoveType::RRemoval),
        ("3,0,1,0", "4,0,0,1", (5, 4), MoveType::RSlide),
        ("3,0,1,0", "0,3,2,0", (7, 2), MoveType::RSlide),
        ("4,0,0,1", "0,4,0,2", (8, 2), MoveType::RSlide),
        ("0,3,2,0", "0,4,0,2", (6, 4), MoveType::RSlide),
        ("0,4,0,2", "0,0,4,3", (8, 3), MoveType::RSlide),
        ("0,0,4,3", "0,0,0,0", (8, 5), MoveType::RRemoval),
    ];
    assert_eq!(
        poset.cover_edges().count(),
        golden.len(),
        "the size-4 Hasse diagram has 13 edges"
    );
    for (lo, hi, (a, b), movetype) in golden {
        let child = poset.index_of(&el(lo)).unwrap();
        let parent = poset.index_of(&el(hi)).unwrap();
        let (label, found) = labeling
            .get(child, parent)
            .unwrap_or_else(|| panic!("{lo} -> {hi} is not a Hasse edge"));
        assert_eq!((label.a, label.b), (a, b), "label of {lo} -> {hi}");
        assert_eq!(found, movetype, "move class of {lo} -> {hi}");
    }
    pass(1, "golden size-4 Hasse diagram", started);
}

#[test]
fn criterion_02_length_examples() {
    let started = Instant::now();
    let pi = el("5,0,0,6,1,4");
    assert_eq!(length_pf(&pi), 8);
    assert_eq!(
        rank_control(&pi).rows(),
        vec![
            vec![0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1, 2],
            vec![1, 1, 1, 1, 2, 3],
            vec![1, 1, 1, 2, 3, 4],
        ]
    );
    let sigma = el("0,0,4,3");
    assert_eq!(length_pf(&sigma), 5);
    assert_eq!(
        rank_control(&sigma).rows(),
        vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 2],
        ]
    );
    pass(2, "length and rank-control examples", started);
}

#[test]
fn criterion_03_length_concordance() {
    let started = Instant::now();
    for n in 0..=8 {
        let poset = Poset::build_forced(n).unwrap();
        for (i, x) in poset.elements().iter().enumerate() {
            let by_stalls = rho_lt(x);
            assert_eq!(
                by_stalls,
                rho_leq(x) - (2 * n - x.matrix_rank()) / 2,
                "closure formula at {x}"
            );
            assert_eq!(by_stalls, length_via_arcs(x), "arc formula at {x}");
            assert_eq!(by_stalls, poset.rank(i), "graded rank at {x}");
            assert_eq!(by_stalls, poset.structural_rank(i), "chain rank at {x}");
        }
    }
    pass(3, "length formula concordance to n=8", started);
}

#[test]
fn criterion_04_el_shellability() {
    let started = Instant::now();
    for n in 2..=6 {
        let summary = verify_el_poset(n).unwrap();
        assert!(
            summary.passed,
            "EL property failed at n={n}: {:?}",
            summary.failures
        );
    }
    pass(4, "EL-shellability for n=2..6", started);
}

#[test]
fn criterion_05_ball_certificates() {
    let started = Instant::now();
    for n in 3..=6 {
        let cert = ball_certificate(n).unwrap();
        assert_eq!(cert.verdict, Verdict::Ball, "verdict at n={n}");
        assert_eq!(
            cert.dim_complex,
            (n * (n - 1) / 2) as i64 - 2,
            "dimension at n={n}"
        );
        assert!(cert.pure && cert.thin_ok && cert.shellable, "n={n}");
        assert_eq!(cert.euler_reduced, 0, "n={n}");
    }
    pass(5, "ball certificates for n=3..6", started);
}

#[test]
fn criterion_06_generating_functions() {
    let started = Instant::now();
    let golden: [(usize, &[i64]); 4] = [
        (1, &[1]),
        (2, &[1, 1]),
        (3, &[1, 1, 1, 1]),
        (4, &[1, 2, 2, 2, 1, 1, 1]),
    ];
    for (n, coeffs) in golden {
        assert_eq!(p_poly(n), Poly::from_i64s(coeffs), "p({n})");
    }
    for n in 0..=8 {
        for k in 0..=(n / 2 + 1) {
            assert_eq!(i_poly_enum(n, k), i_poly_closed(n, k), "({n},{k})");
        }
    }
    for n in 1..=7 {
        assert!(check_p_recurrence(n), "length recurrence at n={n}");
        for k in 0..=((n + 1) / 2) {
            assert!(check_i_recurrence(n, k), "arc recurrence at ({n},{k})");
        }
    }
    for k in 0..=4 {
        assert_eq!(i_poly_enum(2 * k, k), q_odd_double_factorial(k), "k={k}");
    }
    pass(6, "generating functions and recurrences", started);
}

#[test]
fn criterion_07_gauss_identity() {
    let started = Instant::now();
    for j in 0..=10 {
        assert!(check_gauss_identity(j), "j={j}");
    }
    pass(7, "product expansion identity to j=10", started);
}

#[test]
fn criterion_08_finite_field_census() {
    let started = Instant::now();
    let domain = census_domain();
    assert!(domain.contains(&(5, 2)) && domain.contains(&(5, 3)) && domain.contains(&(4, 5)));
    for (n, q) in domain {
        let counts = skew_rank_census(n, q).unwrap();
        let total: u64 = counts.values().sum();
        assert_eq!(
            total,
            q.pow((n * n.saturating_sub(1) / 2) as u32),
            "total at (n={n}, q={q})"
        );
        for k in 0..=n / 2 {
            let predicted = skew_count_poly(n, k).eval(&BigInt::from(q));
            let observed = BigInt::from(counts.get(&(2 * k)).copied().unwrap_or(0));
            assert_eq!(predicted, observed, "rank {} at (n={n}, q={q})", 2 * k);
        }
    }
    pass(8, "finite-field rank census", started);
}

#[test]
fn criterion_09_rank_selected_mobius() {
    let started = Instant::now();
    for n in 0..=5 {
        let poset = Poset::build(n).unwrap();
        let labeling = ElLabeling::new(&poset).unwrap();
        let failures = rank_selected_sweep(&poset, &labeling);
        assert!(failures.is_empty(), "n={n}: failing subsets {failures:?}");
    }
    pass(9, "rank-selected chain/Möbius counts to n=5", started);
}

#[test]
fn criterion_10_cardinalities() {
    let started = Instant::now();
    let expected: [u64; 7] = [1, 2, 4, 10, 26, 76, 232];
    for (n, &count) in (1..=7).zip(&expected) {
        assert_eq!(enumerate_pf(n).len() as u64, count, "n={n}");
        assert_eq!(involution_number(n), count, "oracle at n={n}");
    }
    pass(10, "cardinalities match the involution numbers", started);
}

// The degree-leading-coefficient shape of the full generating function is
// cheap to pin alongside the criteria proper.
#[test]
fn generating_function_degree_shape() {
    for n in 1..=8 {
        let poly: QPoly = p_poly(n);
        assert_eq!(poly.degree(), Some(n * (n - 1) / 2));
        assert_eq!(poly.coeff(n * (n - 1) / 2), BigInt::from(1));
    }
}
