//! Certification of minimal forbidden submatrices and subgraphs,
//! exhaustive bounded-order searches, the frontier search over blow-up
//! multiplicity vectors, and the built-in verification suite.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use thiserror::Error;

use crate::blowup::{
    build_blowup, decompose_blowup, psd_lift_blowup, psd_lift_rowmerge, Multiplicity,
};
use crate::exactnum::SpectralThreshold;
use crate::matrixcore::{HollowSymMatrix, MembershipStatus, SwitchingVector};
use crate::signedgraph::{enumerate_switching_classes, SignedGraph};

/// Largest order accepted by the exhaustive graph search.
pub const ENUMERATION_CAP: usize = 10;

/// Default per-coordinate cap for the frontier search.
pub const DEFAULT_FRONTIER_CAP: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("requested order {0} exceeds the enumeration cap {1}")]
    CapExceeded(usize, usize),
}

/// What a certificate is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateSubject {
    Matrix(HollowSymMatrix),
    Graph(SignedGraph),
}

impl CertificateSubject {
    pub fn order(&self) -> usize {
        match self {
            CertificateSubject::Matrix(m) => m.order(),
            CertificateSubject::Graph(g) => g.order(),
        }
    }

    /// The matrix the verdict is computed on: the subject itself, or the
    /// signed adjacency matrix of a graph subject.
    pub fn matrix(&self) -> HollowSymMatrix {
        match self {
            CertificateSubject::Matrix(m) => m.clone(),
            CertificateSubject::Graph(g) => g.adjacency_matrix(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateVerdict {
    /// Outside the family, with every codimension-1 subobject inside.
    MinimalForbidden,
    /// Inside the family (boundary included).
    NotForbidden,
    /// Outside, but so is some proper subobject.
    ForbiddenNotMinimal,
}

impl std::fmt::Display for CertificateVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CertificateVerdict::MinimalForbidden => "MinimalForbidden",
            CertificateVerdict::NotForbidden => "NotForbidden",
            CertificateVerdict::ForbiddenNotMinimal => "ForbiddenNotMinimal",
        };
        f.write_str(s)
    }
}

/// Replayable justification for a verdict. Deleting a single index from
/// the subject gives the codimension-1 subobjects; interlacing makes
/// deeper deletions redundant for minimality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateEvidence {
    /// Subject is `Outside`; `codim1[i]` is the status with index `i`
    /// deleted, and none of them is `Outside`.
    Minimal { codim1: Vec<MembershipStatus> },
    /// Subject status, not `Outside`.
    Membership { status: MembershipStatus },
    /// Subject is `Outside`, and so is this proper index subset.
    SmallerForbidden { subset: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub subject: CertificateSubject,
    pub threshold: SpectralThreshold,
    pub verdict: CertificateVerdict,
    pub evidence: CertificateEvidence,
}

impl Certificate {
    pub fn order(&self) -> usize {
        self.subject.order()
    }

    /// Re-verify every claim in the evidence from scratch, independently
    /// of how the certificate was produced.
    pub fn recheck(&self) -> bool {
        let m = self.subject.matrix();
        let n = m.order();
        match (&self.verdict, &self.evidence) {
            (CertificateVerdict::MinimalForbidden, CertificateEvidence::Minimal { codim1 }) => {
                if codim1.len() != n || n < 2 {
                    return false;
                }
                if m.membership_status(&self.threshold) != MembershipStatus::Outside {
                    return false;
                }
                (0..n).all(|drop| {
                    let keep: Vec<usize> = (0..n).filter(|&i| i != drop).collect();
                    let status = m
                        .principal_submatrix(&keep)
                        .expect("nonempty proper subset")
                        .membership_status(&self.threshold);
                    status == codim1[drop] && status != MembershipStatus::Outside
                })
            }
            (CertificateVerdict::NotForbidden, CertificateEvidence::Membership { status }) => {
                *status != MembershipStatus::Outside
                    && m.membership_status(&self.threshold) == *status
            }
            (
                CertificateVerdict::ForbiddenNotMinimal,
                CertificateEvidence::SmallerForbidden { subset },
            ) => {
                if subset.is_empty()
                    || subset.len() >= n
                    || subset.windows(2).any(|w| w[0] >= w[1])
                    || *subset.last().unwrap() >= n
                {
                    return false;
                }
                m.membership_status(&self.threshold) == MembershipStatus::Outside
                    && m.principal_submatrix(subset)
                        .expect("validated subset")
                        .membership_status(&self.threshold)
                        == MembershipStatus::Outside
            }
            _ => false,
        }
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(f, "threshold: {}", self.threshold.display())?;
        match &self.subject {
            CertificateSubject::Matrix(m) => write!(f, "subject matrix:\n{}", m.to_hsm())?,
            CertificateSubject::Graph(g) => write!(f, "subject graph:\n{}", g.to_sg())?,
        }
        match &self.evidence {
            CertificateEvidence::Minimal { codim1 } => {
                writeln!(f, "evidence: subject Outside; deletions:")?;
                for (i, s) in codim1.iter().enumerate() {
                    writeln!(f, "  delete {} -> {}", i + 1, s)?;
                }
            }
            CertificateEvidence::Membership { status } => {
                writeln!(f, "evidence: subject {}", status)?;
            }
            CertificateEvidence::SmallerForbidden { subset } => {
                let named: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
                writeln!(
                    f,
                    "evidence: subject Outside; subset {{{}}} already Outside",
                    named.join(",")
                )?;
            }
        }
        Ok(())
    }
}

/// Decide whether `matrix` is a minimal forbidden submatrix for the
/// family at `threshold`. Minimality is established from the `order`
/// codimension-1 principal submatrices alone: by interlacing, a deeper
/// principal submatrix outside the family forces some codimension-1 one
/// outside as well.
pub fn certify_matrix(matrix: &HollowSymMatrix, threshold: &SpectralThreshold) -> Certificate {
    let subject = CertificateSubject::Matrix(matrix.clone());
    certify_inner(subject, matrix, threshold)
}

/// Graph version of [`certify_matrix`]: verdicts through the signed
/// adjacency matrix, subobjects by vertex deletion.
pub fn certify_graph(graph: &SignedGraph, threshold: &SpectralThreshold) -> Certificate {
    let matrix = graph.adjacency_matrix();
    certify_inner(CertificateSubject::Graph(graph.clone()), &matrix, threshold)
}

fn certify_inner(
    subject: CertificateSubject,
    matrix: &HollowSymMatrix,
    threshold: &SpectralThreshold,
) -> Certificate {
    let n = matrix.order();
    let status = matrix.membership_status(threshold);
    if status != MembershipStatus::Outside {
        return Certificate {
            subject,
            threshold: threshold.clone(),
            verdict: CertificateVerdict::NotForbidden,
            evidence: CertificateEvidence::Membership { status },
        };
    }
    let mut codim1 = Vec::with_capacity(n);
    for drop in 0..n {
        let keep: Vec<usize> = (0..n).filter(|&i| i != drop).collect();
        let sub_status = matrix
            .principal_submatrix(&keep)
            .expect("order >= 2 since a 1x1 hollow matrix is never Outside")
            .membership_status(threshold);
        if sub_status == MembershipStatus::Outside {
            return Certificate {
                subject,
                threshold: threshold.clone(),
                verdict: CertificateVerdict::ForbiddenNotMinimal,
                evidence: CertificateEvidence::SmallerForbidden { subset: keep },
            };
        }
        codim1.push(sub_status);
    }
    Certificate {
        subject,
        threshold: threshold.clone(),
        verdict: CertificateVerdict::MinimalForbidden,
        evidence: CertificateEvidence::Minimal { codim1 },
    }
}

/// All minimal forbidden signed graphs at `threshold` with at most
/// `max_order` vertices, one certificate per switching-isomorphism
/// class, sorted by (order, canonical key).
///
/// The enumeration prunes hereditarily: a graph already outside the
/// family gets no extensions, since every extension keeps it as a proper
/// induced subgraph and so cannot be minimal.
pub fn search_minimal_forbidden_graphs(
    threshold: &SpectralThreshold,
    max_order: usize,
) -> Result<Vec<Certificate>, SearchError> {
    if max_order > ENUMERATION_CAP {
        return Err(SearchError::CapExceeded(max_order, ENUMERATION_CAP));
    }
    let levels = enumerate_switching_classes(max_order, |g| {
        g.adjacency_matrix().membership_status(threshold) != MembershipStatus::Outside
    });
    let mut out = Vec::new();
    for level in &levels {
        // Representatives arrive sorted by canonical key within a level.
        for g in level {
            if g.adjacency_matrix().membership_status(threshold) == MembershipStatus::Outside {
                let cert = certify_graph(g, threshold);
                if cert.verdict == CertificateVerdict::MinimalForbidden {
                    out.push(cert);
                }
            }
        }
    }
    Ok(out)
}

/// One minimal bad multiplicity vector, with the certificate of the
/// blow-up it produces.
#[derive(Clone, Debug)]
pub struct FrontierEntry {
    pub mult: Multiplicity,
    pub certificate: Certificate,
}

/// Outcome of the frontier search over blow-up multiplicities of a
/// fixed graph.
#[derive(Clone, Debug)]
pub struct FrontierResult {
    pub graph: SignedGraph,
    pub threshold: SpectralThreshold,
    /// Minimal elements of the upward-closed bad set, an antichain under
    /// componentwise order, restricted to the searched box.
    pub minimal_bad: Vec<FrontierEntry>,
    /// True when no multiplicity beyond the cap can add a minimal
    /// element: every direction was resolved inside the box.
    pub closed: bool,
    pub cap: u32,
}

/// Explore multiplicity vectors `1 <= a <= cap` componentwise, in
/// breadth-first order of total size, classifying the blow-up of `graph`
/// at each vector. The bad set (blow-up outside the family) is
/// upward-closed, so vectors dominating a known bad vector are skipped;
/// the surviving bad vectors are exactly the minimal ones in the box.
pub fn frontier_blowups(
    graph: &SignedGraph,
    threshold: &SpectralThreshold,
    cap: u32,
) -> FrontierResult {
    assert!(cap >= 1);
    let k = graph.order();

    // When the graph itself sits within the family at 2 and the
    // threshold is at least 2, the positive-semidefinite lift puts every
    // blow-up inside the family at 2, hence inside at the threshold: the
    // bad set is empty at every multiplicity, not just below the cap.
    let two = SpectralThreshold::from_rational(BigRational::from_integer(BigInt::from(2)))
        .expect("2 > 0");
    if threshold.compare(&two) != Ordering::Less
        && graph.adjacency_matrix().membership_status(&two) != MembershipStatus::Outside
    {
        return FrontierResult {
            graph: graph.clone(),
            threshold: threshold.clone(),
            minimal_bad: Vec::new(),
            closed: true,
            cap,
        };
    }

    let mut bad: Vec<Vec<u32>> = Vec::new();
    let mut good_on_boundary = false;
    for total in (k as u32)..=(cap * k as u32) {
        let mut stack = vec![Vec::<u32>::with_capacity(k)];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == k {
                if prefix.iter().sum::<u32>() != total {
                    continue;
                }
                if bad
                    .iter()
                    .any(|b| b.iter().zip(&prefix).all(|(x, y)| x <= y))
                {
                    continue;
                }
                let mult = Multiplicity::new(prefix.clone());
                let blown = build_blowup(graph, &mult).expect("matching order");
                if blown.membership_status(threshold) == MembershipStatus::Outside {
                    bad.push(prefix);
                } else if prefix.contains(&cap) {
                    good_on_boundary = true;
                }
                continue;
            }
            let used: u32 = prefix.iter().sum();
            let remaining = (k - prefix.len() - 1) as u32;
            for v in (1..=cap).rev() {
                if used + v + remaining <= total && used + v + remaining * cap >= total {
                    let mut next = prefix.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
    }

    let minimal_bad = bad
        .into_iter()
        .map(|values| {
            let mult = Multiplicity::new(values);
            let blown = build_blowup(graph, &mult).expect("matching order");
            let certificate = certify_matrix(&blown, threshold);
            FrontierEntry { mult, certificate }
        })
        .collect();
    FrontierResult {
        graph: graph.clone(),
        threshold: threshold.clone(),
        minimal_bad,
        closed: !good_on_boundary,
        cap,
    }
}

impl std::fmt::Display for FrontierResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "frontier at {} with cap {}: {} minimal bad multiplicit{}, {}",
            self.threshold.display(),
            self.cap,
            self.minimal_bad.len(),
            if self.minimal_bad.len() == 1 { "y" } else { "ies" },
            if self.closed { "closed" } else { "open" }
        )?;
        for entry in &self.minimal_bad {
            writeln!(
                f,
                "  {} (order {}) -> {}",
                entry.mult,
                entry.mult.total(),
                entry.certificate.verdict
            )?;
        }
        Ok(())
    }
}

/// One checked fact inside a [`Report`].
#[derive(Clone, Debug)]
pub struct ReportLine {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// A named section of pass/fail lines.
#[derive(Clone, Debug)]
pub struct Report {
    pub name: String,
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            lines: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.lines.push(ReportLine {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "== {}: {} ==",
            self.name,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for line in &self.lines {
            writeln!(
                f,
                "  [{}] {}: {}",
                if line.passed { "pass" } else { "FAIL" },
                line.label,
                line.detail
            )?;
        }
        Ok(())
    }
}

/// Check that every matrix [[0,2,a],[2,0,b],[a,b,0]] with unequal
/// a, b in {0, ±1, ±2} has smallest eigenvalue at most -sqrt(5),
/// reporting which pairs attain equality.
pub fn verify_root5_table() -> Report {
    let mut report = Report::new("two-heavy-entry table");
    let threshold = SpectralThreshold::sqrt_of(5).expect("5 is not a square");
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            if a == b {
                continue;
            }
            let m = HollowSymMatrix::from_i64_rows(&[&[0, 2, a], &[2, 0, b], &[a, b, 0]]);
            let status = m.membership_status(&threshold);
            let detail = match status {
                MembershipStatus::Outside => "smallest eigenvalue < -sqrt(5)",
                MembershipStatus::OnBoundary => "smallest eigenvalue = -sqrt(5) (equality)",
                MembershipStatus::StrictlyInside => "smallest eigenvalue > -sqrt(5): BOUND FAILS",
            };
            report.push(
                format!("(a,b) = ({},{})", a, b),
                status != MembershipStatus::StrictlyInside,
                detail,
            );
        }
    }
    let equality = report
        .lines
        .iter()
        .filter(|l| l.detail.contains("equality"))
        .count();
    report.push(
        "equality attained",
        equality >= 1,
        format!("{} of 20 pairs on the boundary", equality),
    );
    report
}

/// Run the full verification suite: threshold construction, the
/// two-heavy-entry table, randomized lift identities, decomposition
/// round-trips, interlacing spot checks, and the entry-bound scan.
pub fn verify_paper_suite(seed: u64) -> Vec<Report> {
    let mut sections = Vec::new();
    sections.push(verify_threshold_construction());
    sections.push(verify_root5_table());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sections.push(verify_lifts(&mut rng));
    sections.push(verify_round_trips(&mut rng));
    sections.push(verify_interlacing(&mut rng));
    sections.push(verify_entry_bound());
    sections
}

fn verify_threshold_construction() -> Report {
    let mut report = Report::new("threshold construction");
    let star = SpectralThreshold::finiteness_threshold();
    let expected: Vec<BigInt> = [-1i64, 0, 4, 0, -5, 0, 1].iter().map(|&c| c.into()).collect();
    report.push(
        "finiteness threshold minimal polynomial",
        star.minpoly().coeffs() == &expected[..],
        star.minpoly().to_string(),
    );
    let v = star.approx_f64();
    report.push(
        "finiteness threshold value",
        (v - 2.01980).abs() < 1e-5,
        format!("{:.6}", v),
    );
    let prime = SpectralThreshold::radius_threshold();
    let w = prime.approx_f64();
    report.push(
        "radius threshold value",
        (w - 2.05817).abs() < 1e-5,
        format!("{:.6}", w),
    );
    let two = SpectralThreshold::from_rational(BigRational::from_integer(BigInt::from(2)))
        .expect("2 > 0");
    let root5 = SpectralThreshold::sqrt_of(5).expect("5 is not a square");
    let chain = two.compare(&star) == Ordering::Less
        && star.compare(&prime) == Ordering::Less
        && prime.compare(&root5) == Ordering::Less;
    report.push(
        "ordering",
        chain,
        "2 < finiteness threshold < radius threshold < sqrt(5)",
    );
    report
}

fn random_graph(rng: &mut ChaCha8Rng, order: usize) -> SignedGraph {
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
    SignedGraph::from_edges(order, &edges).expect("valid edge list")
}

/// A random graph of the given order whose adjacency matrix stays within
/// the family at 2, by rejection.
pub fn random_graph_within_two(rng: &mut ChaCha8Rng, order: usize) -> SignedGraph {
    let two = SpectralThreshold::from_rational(BigRational::from_integer(BigInt::from(2)))
        .expect("2 > 0");
    loop {
        let g = random_graph(rng, order);
        if g.adjacency_matrix().membership_status(&two) != MembershipStatus::Outside {
            return g;
        }
    }
}

fn verify_lifts(rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new("positive-semidefinite lifts");
    let two = SpectralThreshold::from_rational(BigRational::from_integer(BigInt::from(2)))
        .expect("2 > 0");
    let trials = 200;
    let mut identity_ok = 0;
    let mut member_ok = 0;
    let mut merge_ok = 0;
    for _ in 0..trials {
        let order = rng.gen_range(1..=6);
        let graph = random_graph_within_two(rng, order);
        let mut mult_values: Vec<u32> = (0..order).map(|_| rng.gen_range(1..=4)).collect();
        mult_values[0] = mult_values[0].max(2);
        let mult = Multiplicity::new(mult_values);
        let lift = psd_lift_blowup(&graph, &mult).expect("matching order");
        if lift.identity_holds && lift.base_within_two {
            identity_ok += 1;
        }
        let blown = build_blowup(&graph, &mult).expect("matching order");
        if blown.classify_membership(&two).status != MembershipStatus::Outside {
            member_ok += 1;
        }
        // The first vertex has at least two copies, so the first two
        // rows of the blow-up merge.
        if psd_lift_rowmerge(&blown).map(|r| r.identity_holds) == Ok(true) {
            merge_ok += 1;
        }
    }
    report.push(
        "blow-up lift identity",
        identity_ok == trials,
        format!("{}/{} randomized instances", identity_ok, trials),
    );
    report.push(
        "blow-ups stay within the family at 2",
        member_ok == trials,
        format!("{}/{} randomized instances", member_ok, trials),
    );
    report.push(
        "row-merge lift identity",
        merge_ok == trials,
        format!("{}/{} randomized instances", merge_ok, trials),
    );
    report
}

fn verify_round_trips(rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new("blow-up decomposition round-trips");
    let trials = 100;
    let mut ok = 0;
    for _ in 0..trials {
        let order = rng.gen_range(1..=5);
        let graph = random_graph(rng, order);
        let mult = Multiplicity::new((0..order).map(|_| rng.gen_range(1..=3)).collect());
        let blown = build_blowup(&graph, &mult).expect("matching order");
        let n = blown.order();
        let signs: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let scrambled = blown
            .switch(&SwitchingVector::new(signs).expect("signs are unit"))
            .expect("length matches")
            .permuted(&perm);
        if let Ok(dec) = decompose_blowup(&scrambled) {
            if dec.verifies_against(&scrambled)
                && dec.graph.canonical_key() == graph.canonical_key()
            {
                ok += 1;
            }
        }
    }
    report.push(
        "round-trip",
        ok == trials,
        format!("{}/{} randomized instances", ok, trials),
    );
    report
}

fn verify_interlacing(rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new("interlacing spot checks");
    let thresholds = [
        SpectralThreshold::from_rational(BigRational::from_integer(BigInt::from(2)))
            .expect("2 > 0"),
        SpectralThreshold::sqrt_of(5).expect("5 is not a square"),
        SpectralThreshold::finiteness_threshold(),
    ];
    let trials = 60;
    let mut ok = 0;
    for _ in 0..trials {
        let n = rng.gen_range(2..=6);
        let m = HollowSymMatrix::from_upper_fn(n, |_, _| BigInt::from(rng.gen_range(-3i64..=3)));
        let threshold = &thresholds[rng.gen_range(0..thresholds.len())];
        let size = rng.gen_range(1..n);
        let mut subset: Vec<usize> = (0..n).collect();
        subset.shuffle(rng);
        subset.truncate(size);
        subset.sort_unstable();
        let sub = m.principal_submatrix(&subset).expect("nonempty subset");
        // Membership is hereditary: a member's principal submatrices are
        // members.
        let hereditary = !m.membership_status(threshold).is_member()
            || sub.membership_status(threshold).is_member();
        if hereditary {
            ok += 1;
        }
    }
    report.push(
        "membership hereditary under principal submatrices",
        ok == trials,
        format!("{}/{} randomized instances", ok, trials),
    );
    report
}

fn verify_entry_bound() -> Report {
    let mut report = Report::new("entry bound for minimal forbidden matrices");
    let two = SpectralThreshold::from_rational(BigRational::from_integer(BigInt::from(2)))
        .expect("2 > 0");
    let found = scan_minimal_forbidden_matrices(4, 3, &two);
    let three = BigInt::from(3);
    let mut large_entry_orders = Vec::new();
    for cert in &found {
        let m = cert.subject.matrix();
        let n = m.order();
        let has_large =
            (0..n).any(|i| (i + 1..n).any(|j| m.entry(i, j).abs() >= three));
        if has_large && n >= 3 {
            large_entry_orders.push(n);
        }
    }
    report.push(
        "scan found certified minimal forbidden matrices",
        !found.is_empty(),
        format!("{} certificates at orders <= 4, entries within 3", found.len()),
    );
    report.push(
        "no order >= 3 minimum has an entry of absolute value 3",
        large_entry_orders.is_empty(),
        if large_entry_orders.is_empty() {
            "large entries confined to order 2".to_string()
        } else {
            format!("violations at orders {:?}", large_entry_orders)
        },
    );
    report
}

/// All hollow symmetric matrices of the given order with entries in
/// `[-entry_bound, entry_bound]`, one representative per switching
/// class (the lexicographically smallest upper-triangle vector over the
/// 2^(order-1) switchings fixing the first sign).
pub fn hollow_matrices_up_to_switching(order: usize, entry_bound: i64) -> Vec<HollowSymMatrix> {
    assert!(order >= 1 && entry_bound >= 0);
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|i| (i + 1..order).map(move |j| (i, j)))
        .collect();
    let k = pairs.len();
    let mut out = Vec::new();
    let mut pattern = vec![-entry_bound; k];
    loop {
        // Keep only orbit-minimal patterns.
        let mut minimal = true;
        'switchings: for mask in 0u32..(1 << order.saturating_sub(1)) {
            let sign = |v: usize| -> i64 {
                if v > 0 && (mask >> (v - 1)) & 1 == 1 {
                    -1
                } else {
                    1
                }
            };
            for (slot, &(i, j)) in pairs.iter().enumerate() {
                let switched = sign(i) * sign(j) * pattern[slot];
                match switched.cmp(&pattern[slot]) {
                    Ordering::Less => {
                        minimal = false;
                        break 'switchings;
                    }
                    Ordering::Greater => continue 'switchings,
                    Ordering::Equal => {}
                }
            }
        }
        if minimal {
            let mut slot = 0;
            out.push(HollowSymMatrix::from_upper_fn(order, |_, _| {
                let v = BigInt::from(pattern[slot]);
                slot += 1;
                v
            }));
        }
        // Next pattern, odometer order.
        let mut carry = true;
        for v in pattern.iter_mut() {
            if *v < entry_bound {
                *v += 1;
                carry = false;
                break;
            }
            *v = -entry_bound;
        }
        if carry {
            break;
        }
    }
    out
}

/// Exhaustively certify every hollow symmetric matrix up to
/// `max_order` with entries within `entry_bound`, one per switching
/// class, returning the certificates with verdict `MinimalForbidden`.
pub fn scan_minimal_forbidden_matrices(
    max_order: usize,
    entry_bound: i64,
    threshold: &SpectralThreshold,
) -> Vec<Certificate> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        for m in hollow_matrices_up_to_switching(order, entry_bound) {
            if m.membership_status(threshold) == MembershipStatus::Outside {
                let cert = certify_matrix(&m, threshold);
                if cert.verdict == CertificateVerdict::MinimalForbidden {
                    out.push(cert);
                }
            }
        }
    }
    out
}
