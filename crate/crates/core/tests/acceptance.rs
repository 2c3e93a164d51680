//! Acceptance suite: one test per release criterion, each printing a
//! single pass/fail line. Runtime budgets are asserted with `Instant`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

use hollow_spectra::blowup::{
    build_blowup, decompose_blowup, psd_lift_blowup, Multiplicity,
};
use hollow_spectra::exactnum::{IntPolynomial, SpectralThreshold};
use hollow_spectra::matrixcore::{HollowSymMatrix, MembershipStatus, SwitchingVector};
use hollow_spectra::search::{
    certify_graph, certify_matrix, frontier_blowups, hollow_matrices_up_to_switching,
    random_graph_within_two, scan_minimal_forbidden_matrices, verify_root5_table,
    CertificateVerdict,
};
use hollow_spectra::signedgraph::SignedGraph;

fn rational(n: i64, d: i64) -> SpectralThreshold {
    SpectralThreshold::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap()
}

fn report(criterion: &str, start: Instant, budget: Option<Duration>) {
    let elapsed = start.elapsed();
    if let Some(budget) = budget {
        assert!(
            elapsed < budget,
            "criterion {criterion}: {elapsed:?} exceeds budget {budget:?}"
        );
    }
    println!("criterion {criterion}: pass ({elapsed:?})");
}

/// Criterion 1: every [[0,2,a],[2,0,b],[a,b,0]] with unequal a, b in {0,±1,±2}
/// has smallest eigenvalue at most -sqrt(5), with equality attained.
#[test]
fn criterion_1_two_heavy_entry_table() {
    let start = Instant::now();
    let table = verify_root5_table();
    assert!(table.passed(), "{table}");
    assert_eq!(table.lines.len(), 21);
    // The pair (1,0) attains equality: characteristic polynomial x^3-5x.
    let m = HollowSymMatrix::from_i64_rows(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]);
    assert_eq!(
        m.char_poly(),
        IntPolynomial::from_i64(&[0, -5, 0, 1]),
        "characteristic polynomial of the equality pair"
    );
    let root5 = SpectralThreshold::sqrt_of(5).unwrap();
    assert_eq!(m.membership_status(&root5), MembershipStatus::OnBoundary);
    report("1 (bounded table of two-heavy-entry matrices)", start, Some(Duration::from_secs(1)));
}

/// Criterion 2: the finiteness threshold is built by resultant elimination with
/// the expected minimal polynomial and decimal value, and the exact
/// ordering of the named thresholds holds.
#[test]
fn criterion_2_threshold_construction() {
    let start = Instant::now();
    let star = SpectralThreshold::finiteness_threshold();
    let expected: Vec<BigInt> = [-1i64, 0, 4, 0, -5, 0, 1].iter().map(|&c| c.into()).collect();
    assert_eq!(star.minpoly().coeffs(), &expected[..]);
    assert!((star.approx_f64() - 2.01980).abs() < 1e-5);

    let prime = SpectralThreshold::radius_threshold();
    assert!((prime.approx_f64() - 2.05817).abs() < 1e-5);
    assert_eq!(
        prime.minpoly(),
        &IntPolynomial::from_i64(&[-1, 0, -4, 0, 1])
    );

    let two = rational(2, 1);
    let root5 = SpectralThreshold::sqrt_of(5).unwrap();
    use std::cmp::Ordering::Less;
    assert_eq!(two.compare(&star), Less);
    assert_eq!(star.compare(&prime), Less);
    assert_eq!(prime.compare(&root5), Less);
    report("2 (threshold construction)", start, Some(Duration::from_secs(1)));
}

/// Criterion 3: 1000 randomized blow-ups of graphs within the family at 2 satisfy
/// the positive-semidefinite lift identity exactly and never classify
/// Outside at 2.
#[test]
fn criterion_3_blowup_lift() {
    let start = Instant::now();
    let two = rational(2, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let order = rng.gen_range(1..=6);
        let graph = random_graph_within_two(&mut rng, order);
        let mult = Multiplicity::new((0..order).map(|_| rng.gen_range(1..=4)).collect());
        let lift = psd_lift_blowup(&graph, &mult).unwrap();
        assert!(lift.identity_holds && lift.base_within_two);
        let blown = build_blowup(&graph, &mult).unwrap();
        let verdict = blown.classify_membership(&two);
        assert_ne!(verdict.status, MembershipStatus::Outside);
    }
    report("3 (blow-up lift identity, 1000 trials)", start, Some(Duration::from_secs(30)));
}

/// Criterion 4: 500 randomized switched, permuted blow-ups decompose back to a
/// graph switching-isomorphic to the original, with the reconstruction
/// invariant holding.
#[test]
fn criterion_4_decomposition_round_trip() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let order = rng.gen_range(1..=5);
        let graph = random_signed_graph(&mut rng, order);
        let mult = Multiplicity::new((0..order).map(|_| rng.gen_range(1..=3)).collect());
        let blown = build_blowup(&graph, &mult).unwrap();
        let n = blown.order();
        let signs: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let scrambled = blown
            .switch(&SwitchingVector::new(signs).unwrap())
            .unwrap()
            .permuted(&perm);
        let dec = decompose_blowup(&scrambled).unwrap();
        assert!(dec.verifies_against(&scrambled));
        assert_eq!(dec.graph.canonical_key(), graph.canonical_key());
    }
    report("4 (decomposition round-trip, 500 trials)", start, Some(Duration::from_secs(30)));
}

/// Criterion 5: the codimension-1 minimality shortcut agrees with full-subset
/// brute force: exhaustively at orders <= 4 with entries in {-2..2}
/// (up to switching), and on a random sample at order 5.
#[test]
fn criterion_5_shortcut_soundness() {
    let start = Instant::now();
    let thresholds = [
        rational(2, 1),
        rational(21, 10),
        SpectralThreshold::finiteness_threshold(),
        SpectralThreshold::sqrt_of(5).unwrap(),
    ];
    for order in 1..=4 {
        for m in hollow_matrices_up_to_switching(order, 2) {
            for threshold in &thresholds {
                assert_eq!(
                    certify_matrix(&m, threshold).verdict,
                    brute_force_verdict(&m, threshold),
                    "order {order} at {}\n{}",
                    threshold.display(),
                    m.to_hsm()
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let m = HollowSymMatrix::from_upper_fn(5, |_, _| BigInt::from(rng.gen_range(-2i64..=2)));
        let threshold = &thresholds[rng.gen_range(0..thresholds.len())];
        assert_eq!(
            certify_matrix(&m, threshold).verdict,
            brute_force_verdict(&m, threshold)
        );
    }
    report("5 (minimality shortcut soundness)", start, None);
}

/// Criterion 6: known minimal forbidden objects certify as such.
#[test]
fn criterion_6_known_minimal_objects() {
    let start = Instant::now();
    let two = rational(2, 1);
    let cert = certify_matrix(&HollowSymMatrix::from_i64_rows(&[&[0, 3], &[3, 0]]), &two);
    assert_eq!(cert.verdict, CertificateVerdict::MinimalForbidden);
    assert!(cert.recheck());

    let cert = certify_matrix(
        &HollowSymMatrix::from_i64_rows(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]),
        &two,
    );
    assert_eq!(cert.verdict, CertificateVerdict::MinimalForbidden);
    assert!(cert.recheck());

    let star5 = SignedGraph::positive_star(5);
    let cert = certify_graph(&star5, &two);
    assert_eq!(cert.verdict, CertificateVerdict::MinimalForbidden);
    assert!(cert.recheck());
    // Its smallest eigenvalue is exactly -sqrt(5).
    let root5 = SpectralThreshold::sqrt_of(5).unwrap();
    assert_eq!(
        star5.adjacency_matrix().membership_status(&root5),
        MembershipStatus::OnBoundary
    );
    report("6 (known minimal forbidden objects)", start, None);
}

/// Criterion 7: in an exhaustive scan with entry bound 3 at orders <= 4, every
/// certified minimal forbidden matrix of order >= 3 at 2 has entries of
/// absolute value at most 2. (The full order-10 classification at 2 is
/// out of desk-scale reach; this bounded scan plus certificate replay
/// substitutes for it.)
#[test]
fn criterion_7_entry_bound_scan() {
    let start = Instant::now();
    let two = rational(2, 1);
    let found = scan_minimal_forbidden_matrices(4, 3, &two);
    assert!(!found.is_empty());
    let three = BigInt::from(3);
    let mut saw_order_two_large = false;
    for cert in &found {
        assert!(cert.recheck());
        let m = cert.subject.matrix();
        let n = m.order();
        let large = (0..n).any(|i| (i + 1..n).any(|j| m.entry(i, j).abs() >= three));
        if n >= 3 {
            assert!(!large, "order {n} minimum with an entry of size 3:\n{}", m.to_hsm());
        } else if large {
            saw_order_two_large = true;
        }
    }
    // The 2x2 matrices are where size-3 entries appear.
    assert!(saw_order_two_large);
    report("7 (entry bound scan, orders <= 4, bound 3)", start, None);
}

/// Criterion 8: frontier searches: trivially empty closed frontiers for graphs
/// within the family at 2, and exact agreement with brute-force minima
/// on small graphs.
#[test]
fn criterion_8_frontier_searches() {
    let start = Instant::now();
    let lambda = rational(21, 10);
    for graph in [
        SignedGraph::edgeless(1),
        SignedGraph::from_edges(2, &[(0, 1, -1)]).unwrap(),
    ] {
        let result = frontier_blowups(&graph, &lambda, 8);
        assert!(result.minimal_bad.is_empty());
        assert!(result.closed);
    }

    let graphs = [
        SignedGraph::edgeless(1),
        SignedGraph::from_edges(2, &[(0, 1, 1)]).unwrap(),
        SignedGraph::from_edges(2, &[(0, 1, -1)]).unwrap(),
        SignedGraph::from_edges(3, &[(0, 1, 1), (1, 2, -1)]).unwrap(),
        SignedGraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap(),
    ];
    for lambda in [rational(3, 2), rational(7, 4), rational(21, 10)] {
        for graph in &graphs {
            let cap = 5;
            let result = frontier_blowups(graph, &lambda, cap);
            let found: Vec<Vec<u32>> = result
                .minimal_bad
                .iter()
                .map(|e| e.mult.values().to_vec())
                .collect();
            assert_eq!(
                found,
                brute_force_minimal_bad(graph, &lambda, cap),
                "graph {} at {}",
                graph.to_sg(),
                lambda.display()
            );
            for entry in &result.minimal_bad {
                assert!(entry.certificate.recheck());
            }
        }
    }
    report("8 (frontier searches)", start, Some(Duration::from_secs(60)));
}

/// Criterion 9: certificates and characteristic polynomials are invariant under
/// switching, over 1000 randomized trials.
#[test]
fn criterion_9_switching_invariance() {
    let start = Instant::now();
    let thresholds = [
        rational(2, 1),
        rational(21, 10),
        SpectralThreshold::sqrt_of(5).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=6);
        let m = HollowSymMatrix::from_upper_fn(n, |_, _| BigInt::from(rng.gen_range(-2i64..=2)));
        let signs: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        let switched = m.switch(&SwitchingVector::new(signs).unwrap()).unwrap();
        assert_eq!(m.char_poly(), switched.char_poly());
        let threshold = &thresholds[rng.gen_range(0..thresholds.len())];
        assert_eq!(
            certify_matrix(&m, threshold).verdict,
            certify_matrix(&switched, threshold).verdict
        );
    }
    report("9 (switching invariance, 1000 trials)", start, Some(Duration::from_secs(10)));
}

fn random_signed_graph(rng: &mut ChaCha8Rng, order: usize) -> SignedGraph {
    let mut edges = Vec::new();
    for v in 1..order {
        for u in 0..v {
            match rng.gen_range(0..3) {
                1 => edges.push((u, v, 1i8)),
                2 => edges.push((u, v, -1i8)),
                _ => {}
            }
        }
    }
    SignedGraph::from_edges(order, &edges).unwrap()
}

/// Independent minimality oracle: checks every proper nonempty
/// principal subset, not just codimension 1.
fn brute_force_verdict(
    m: &HollowSymMatrix,
    threshold: &SpectralThreshold,
) -> CertificateVerdict {
    if m.membership_status(threshold) != MembershipStatus::Outside {
        return CertificateVerdict::NotForbidden;
    }
    let n = m.order();
    for mask in 1u32..(1 << n) - 1 {
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub = m.principal_submatrix(&subset).unwrap();
        if sub.membership_status(threshold) == MembershipStatus::Outside {
            return CertificateVerdict::ForbiddenNotMinimal;
        }
    }
    CertificateVerdict::MinimalForbidden
}

/// Independent frontier oracle: classify every multiplicity vector in
/// the box directly and keep the componentwise-minimal bad ones.
fn brute_force_minimal_bad(
    graph: &SignedGraph,
    lambda: &SpectralThreshold,
    cap: u32,
) -> Vec<Vec<u32>> {
    let k = graph.order();
    let mut all: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..k {
        all = all
            .into_iter()
            .flat_map(|v| {
                (1..=cap).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    let bad: Vec<Vec<u32>> = all
        .into_iter()
        .filter(|v| {
            let m = build_blowup(graph, &Multiplicity::new(v.clone())).unwrap();
            m.membership_status(lambda) == MembershipStatus::Outside
        })
        .collect();
    let mut minimal: Vec<Vec<u32>> = bad
        .iter()
        .filter(|v| {
            !bad.iter()
                .any(|w| w != *v && w.iter().zip(v.iter()).all(|(x, y)| x <= y))
        })
        .cloned()
        .collect();
    minimal.sort_by_key(|v| (v.iter().sum::<u32>(), v.clone()));
    minimal
}
