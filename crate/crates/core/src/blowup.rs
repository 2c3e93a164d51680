//! Vertex blow-ups of signed graphs: construction, the constructive
//! decomposition of an arbitrary matrix into a switched blow-up, and the
//! two positive-semidefiniteness lifting identities.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactnum::SpectralThreshold;
use crate::matrixcore::{HollowSymMatrix, MembershipStatus, SwitchingVector};
use crate::signedgraph::SignedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("multiplicity domain has {0} vertices but the graph has {1}")]
    DomainMismatch(usize, usize),
    #[error("entry of absolute value {0} >= 3 at ({1},{2}); not a blow-up")]
    EntryTooLarge(BigInt, usize, usize),
    #[error("matrix is not switching equivalent to any blow-up: {0}")]
    NotBlowup(String),
    #[error("rows 1 and 2 do not merge: {0}")]
    PreconditionViolated(String),
}

/// A positive copy count per vertex of a paired signed graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multiplicity {
    values: Vec<u32>,
}

impl Multiplicity {
    pub fn new(values: Vec<u32>) -> Self {
        assert!(!values.is_empty() && values.iter().all(|&v| v >= 1));
        Multiplicity { values }
    }

    pub fn ones(len: usize) -> Self {
        Self::new(vec![1; len])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.values[v]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn total(&self) -> u32 {
        self.values.iter().sum()
    }

    /// Componentwise order.
    pub fn le(&self, other: &Self) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl std::fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (v, c) in self.values.iter().enumerate() {
            if v > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}:{}", v + 1, c)?;
        }
        Ok(())
    }
}

/// The matrix replacing each vertex `u` of `graph` by `mult(u)` indices:
/// 0 on the diagonal, +2 between copies of the same vertex, the edge sign
/// between copies of adjacent vertices, 0 otherwise. Indices are ordered
/// by (vertex, copy).
pub fn build_blowup(
    graph: &SignedGraph,
    mult: &Multiplicity,
) -> Result<HollowSymMatrix, BlowupError> {
    if mult.len() != graph.order() {
        return Err(BlowupError::DomainMismatch(mult.len(), graph.order()));
    }
    let index_map = blowup_index_map(mult);
    let n = index_map.len();
    Ok(HollowSymMatrix::from_upper_fn(n, |i, j| {
        let (u, _) = index_map[i];
        let (v, _) = index_map[j];
        if u == v {
            BigInt::from(2)
        } else {
            BigInt::from(graph.sign(u, v))
        }
    }))
}

/// The (vertex, copy) pair behind each matrix index of a blow-up, in
/// construction order.
pub fn blowup_index_map(mult: &Multiplicity) -> Vec<(usize, usize)> {
    let mut map = Vec::with_capacity(mult.total() as usize);
    for (v, &count) in mult.values().iter().enumerate() {
        for copy in 0..count as usize {
            map.push((v, copy));
        }
    }
    map
}

/// Witness that a matrix is switching equivalent to a blow-up.
#[derive(Clone, Debug)]
pub struct BlowupDecomposition {
    pub graph: SignedGraph,
    pub mult: Multiplicity,
    pub switching: SwitchingVector,
    /// `index_map[i]` is the (vertex, copy) behind matrix index `i`.
    pub index_map: Vec<(usize, usize)>,
}

impl BlowupDecomposition {
    /// Rebuild the matrix this decomposition describes.
    pub fn reconstruct(&self) -> HollowSymMatrix {
        let reference = blowup_index_map(&self.mult);
        let blown = build_blowup(&self.graph, &self.mult).expect("consistent decomposition");
        // Position of each (vertex, copy) inside the freshly built matrix.
        let perm: Vec<usize> = self
            .index_map
            .iter()
            .map(|pair| {
                reference
                    .iter()
                    .position(|p| p == pair)
                    .expect("index map is a bijection")
            })
            .collect();
        blown
            .permuted(&perm)
            .switch(&self.switching)
            .expect("switching length matches")
    }

    pub fn verifies_against(&self, original: &HollowSymMatrix) -> bool {
        &self.reconstruct() == original
    }
}

/// Constructively decompose `matrix` as a switched, reindexed blow-up.
/// Succeeds exactly when such a decomposition exists; the reconstruction
/// is re-checked before returning.
pub fn decompose_blowup(matrix: &HollowSymMatrix) -> Result<BlowupDecomposition, BlowupError> {
    let n = matrix.order();
    let two = BigInt::from(2);
    for i in 0..n {
        for j in (i + 1)..n {
            let a = matrix.entry(i, j);
            if a.abs() >= BigInt::from(3) {
                return Err(BlowupError::EntryTooLarge(a.clone(), i, j));
            }
        }
    }

    // Auxiliary graph: indices joined where |entry| = 2; its components
    // become the vertices of the recovered graph.
    let adjacent = |i: usize, j: usize| i != j && matrix.entry(i, j).abs() == two;
    let mut comp_of = vec![usize::MAX; n];
    let mut signs = vec![0i8; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for root in 0..n {
        if comp_of[root] != usize::MAX {
            continue;
        }
        let k = components.len();
        comp_of[root] = k;
        signs[root] = 1;
        let mut comp = vec![root];
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if comp_of[j] == usize::MAX && adjacent(i, j) {
                    comp_of[j] = k;
                    // BFS tree edge: switch so the entry becomes +2.
                    signs[j] = if matrix.entry(i, j) > &BigInt::zero() {
                        signs[i]
                    } else {
                        -signs[i]
                    };
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }

    let switching = SwitchingVector::new(signs).expect("all indices signed");
    let switched = matrix.switch(&switching).expect("length matches");

    // Block constancy: +2 inside components, one constant per component
    // pair elsewhere.
    let m = components.len();
    let mut cross = vec![vec![None::<BigInt>; m]; m];
    for i in 0..n {
        for j in (i + 1)..n {
            let (ki, kj) = (comp_of[i], comp_of[j]);
            let v = switched.entry(i, j);
            if ki == kj {
                if v != &two {
                    return Err(BlowupError::NotBlowup(format!(
                        "intra-block entry {} at ({},{})",
                        v, i, j
                    )));
                }
            } else {
                match &cross[ki][kj] {
                    None => {
                        cross[ki][kj] = Some(v.clone());
                        cross[kj][ki] = Some(v.clone());
                    }
                    Some(c) if c == v => {}
                    Some(c) => {
                        return Err(BlowupError::NotBlowup(format!(
                            "block ({},{}) mixes entries {} and {}",
                            ki, kj, c, v
                        )));
                    }
                }
            }
        }
    }

    let mut edges = Vec::new();
    for k in 0..m {
        for l in (k + 1)..m {
            if let Some(c) = &cross[k][l] {
                if !c.is_zero() {
                    let s = if c > &BigInt::zero() { 1i8 } else { -1 };
                    edges.push((k, l, s));
                }
            }
        }
    }
    let graph = SignedGraph::from_edges(m, &edges).expect("components are distinct");
    let mult = Multiplicity::new(components.iter().map(|c| c.len() as u32).collect());

    let mut index_map = vec![(0usize, 0usize); n];
    for (k, comp) in components.iter().enumerate() {
        for (copy, &i) in comp.iter().enumerate() {
            index_map[i] = (k, copy);
        }
    }

    let decomposition = BlowupDecomposition {
        graph,
        mult,
        switching,
        index_map,
    };
    if !decomposition.verifies_against(matrix) {
        return Err(BlowupError::NotBlowup(
            "reconstruction mismatch".to_string(),
        ));
    }
    Ok(decomposition)
}

/// Outcome of checking one of the lifting identities exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    /// The matrix identity itself, checked by exact multiplication.
    pub identity_holds: bool,
    /// Whether the smaller matrix has smallest eigenvalue >= -2.
    pub base_within_two: bool,
    /// Corollary: identity plus a positive semidefinite base force the
    /// lifted matrix to have smallest eigenvalue >= -2.
    pub lift_within_two: bool,
}

/// Check `A_{F,a} + 2I = B^T (A_F + 2I) B` with `B(u,(v,i)) = [u = v]`.
pub fn psd_lift_blowup(graph: &SignedGraph, mult: &Multiplicity) -> Result<LiftReport, BlowupError> {
    let blown = build_blowup(graph, mult)?;
    let base = graph.adjacency_matrix();
    let index_map = blowup_index_map(mult);
    let n = blown.order();
    let m = base.order();
    let two = BigInt::from(2);

    // (B^T (A_F + 2I) B)(i, j) = (A_F + 2I)(vertex(i), vertex(j))
    let mut identity_holds = true;
    'check: for i in 0..n {
        for j in 0..n {
            let (u, _) = index_map[i];
            let (v, _) = index_map[j];
            let mut base_entry = base.entry(u, v).clone();
            if u == v {
                base_entry += &two;
            }
            let mut lift_entry = blown.entry(i, j).clone();
            if i == j {
                lift_entry += &two;
            }
            if base_entry != lift_entry {
                identity_holds = false;
                break 'check;
            }
        }
    }
    debug_assert!(m <= n);

    let two_threshold = SpectralThreshold::from_rational(num_rational::BigRational::from_integer(
        BigInt::from(2),
    ))
    .expect("2 is positive");
    let base_within_two = base.membership_status(&two_threshold) != MembershipStatus::Outside;
    Ok(LiftReport {
        identity_holds,
        base_within_two,
        lift_within_two: identity_holds && base_within_two,
    })
}

/// Check `A + 2I = B^T (A' + 2I) B` where `A'` removes the first index and
/// `B` merges the first two indices. Requires entry (0,1) = 2 and rows 0, 1
/// equal beyond the first two columns.
pub fn psd_lift_rowmerge(matrix: &HollowSymMatrix) -> Result<LiftReport, BlowupError> {
    let n = matrix.order();
    if n < 2 {
        return Err(BlowupError::PreconditionViolated(
            "order must be at least 2".to_string(),
        ));
    }
    if matrix.entry(0, 1) != &BigInt::from(2) {
        return Err(BlowupError::PreconditionViolated(format!(
            "entry (1,2) is {}, not 2",
            matrix.entry(0, 1)
        )));
    }
    for k in 2..n {
        if matrix.entry(0, k) != matrix.entry(1, k) {
            return Err(BlowupError::PreconditionViolated(format!(
                "rows differ at column {}",
                k + 1
            )));
        }
    }
    let rest: Vec<usize> = (1..n).collect();
    let sub = matrix.principal_submatrix(&rest).expect("nonempty");
    let two = BigInt::from(2);

    // B maps index 0 and 1 of A to index 0 of A', and index k >= 2 to k-1;
    // so (B^T (A' + 2I) B)(i, j) = (A' + 2I)(merge(i), merge(j)).
    let merge = |i: usize| i.saturating_sub(1);
    let mut identity_holds = true;
    'check: for i in 0..n {
        for j in 0..n {
            let (mi, mj) = (merge(i), merge(j));
            let mut rhs = sub.entry(mi, mj).clone();
            if mi == mj {
                rhs += &two;
            }
            let mut lhs = matrix.entry(i, j).clone();
            if i == j {
                lhs += &two;
            }
            if lhs != rhs {
                identity_holds = false;
                break 'check;
            }
        }
    }

    let two_threshold = SpectralThreshold::from_rational(num_rational::BigRational::from_integer(
        BigInt::from(2),
    ))
    .expect("2 is positive");
    let base_within_two = sub.membership_status(&two_threshold) != MembershipStatus::Outside;
    Ok(LiftReport {
        identity_holds,
        base_within_two,
        lift_within_two: identity_holds && base_within_two,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn two() -> SpectralThreshold {
        SpectralThreshold::from_rational(BigRational::from_integer(BigInt::from(2))).unwrap()
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
        SignedGraph::from_edges(order, &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let k1 = SignedGraph::edgeless(1);
        assert_eq!(
            build_blowup(&k1, &Multiplicity::ones(1)).unwrap(),
            HollowSymMatrix::zero(1)
        );
        assert_eq!(
            build_blowup(&k1, &Multiplicity::new(vec![3])).unwrap(),
            HollowSymMatrix::from_i64_rows(&[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]])
        );
        let minus_edge = SignedGraph::from_edges(2, &[(0, 1, -1)]).unwrap();
        assert_eq!(
            build_blowup(&minus_edge, &Multiplicity::new(vec![1, 2])).unwrap(),
            HollowSymMatrix::from_i64_rows(&[&[0, -1, -1], &[-1, 0, 2], &[-1, 2, 0]])
        );
        assert!(matches!(
            build_blowup(&minus_edge, &Multiplicity::ones(3)),
            Err(BlowupError::DomainMismatch(3, 2))
        ));
    }

    #[test]
    fn decompose_simple_cases() {
        let m = HollowSymMatrix::from_i64_rows(&[&[0, 2], &[2, 0]]);
        let d = decompose_blowup(&m).unwrap();
        assert_eq!(d.graph.order(), 1);
        assert_eq!(d.mult.values(), &[2]);
        assert_eq!(d.switching.signs(), &[1, 1]);
        assert!(d.verifies_against(&m));

        assert!(matches!(
            decompose_blowup(&HollowSymMatrix::from_i64_rows(&[&[0, 3], &[3, 0]])),
            Err(BlowupError::EntryTooLarge(..))
        ));
    }

    #[test]
    fn decompose_round_trip_with_switching() {
        let minus_edge = SignedGraph::from_edges(2, &[(0, 1, -1)]).unwrap();
        let mult = Multiplicity::new(vec![1, 2]);
        let blown = build_blowup(&minus_edge, &mult).unwrap();
        let d_vec = SwitchingVector::new(vec![1, -1, 1]).unwrap();
        let switched = blown.switch(&d_vec).unwrap();
        let dec = decompose_blowup(&switched).unwrap();
        assert!(dec.verifies_against(&switched));
        assert_eq!(
            dec.graph.canonical_key(),
            minus_edge.canonical_key()
        );
        let mut counts = dec.mult.values().to_vec();
        counts.sort_unstable();
        assert_eq!(counts, vec![1, 2]);
    }

    #[test]
    fn decompose_rejects_block_violation() {
        // Entry (1,3) = 1 differs from (2,3) = 0 inside the 2-block's
        // neighborhood.
        let m = HollowSymMatrix::from_i64_rows(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]);
        assert!(matches!(
            decompose_blowup(&m),
            Err(BlowupError::NotBlowup(_))
        ));
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let order = rng.gen_range(1..=5);
            let graph = random_graph(&mut rng, order);
            let mult =
                Multiplicity::new((0..order).map(|_| rng.gen_range(1..=3)).collect());
            let blown = build_blowup(&graph, &mult).unwrap();
            let n = blown.order();
            let signs: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let scrambled = blown
                .switch(&SwitchingVector::new(signs).unwrap())
                .unwrap()
                .permuted(&perm);
            let dec = decompose_blowup(&scrambled)
                .unwrap_or_else(|e| panic!("decompose failed: {e} on {scrambled:?}"));
            assert!(dec.verifies_against(&scrambled));
            assert_eq!(dec.graph.canonical_key(), graph.canonical_key());
            let mut got: Vec<u32> = dec.mult.values().to_vec();
            let mut want: Vec<u32> = mult.values().to_vec();
            got.sort_unstable();
            want.sort_unstable();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn monotone_embedding_into_larger_blowup() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let order = rng.gen_range(1..=4);
            let graph = random_graph(&mut rng, order);
            let small: Vec<u32> = (0..order).map(|_| rng.gen_range(1..=3)).collect();
            let large: Vec<u32> = small.iter().map(|&v| v + rng.gen_range(0..=2)).collect();
            let a = Multiplicity::new(small);
            let b = Multiplicity::new(large);
            assert!(a.le(&b));
            let ma = build_blowup(&graph, &a).unwrap();
            let mb = build_blowup(&graph, &b).unwrap();
            // Natural embedding: the first a(u) copies of each vertex.
            let map_b = blowup_index_map(&b);
            let keep: Vec<usize> = map_b
                .iter()
                .enumerate()
                .filter(|(_, (v, copy))| (*copy as u32) < a.get(*v))
                .map(|(i, _)| i)
                .collect();
            assert_eq!(mb.principal_submatrix(&keep).unwrap(), ma);
        }
    }

    #[test]
    fn lift_blowup_examples() {
        let k1 = SignedGraph::edgeless(1);
        let report = psd_lift_blowup(&k1, &Multiplicity::new(vec![4])).unwrap();
        assert!(report.identity_holds);
        assert!(report.base_within_two);
        assert!(report.lift_within_two);
        // 2(J - I) of order 4 really has smallest eigenvalue -2.
        let m = build_blowup(&k1, &Multiplicity::new(vec![4])).unwrap();
        assert_eq!(m.membership_status(&two()), MembershipStatus::OnBoundary);

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let order = rng.gen_range(1..=5);
            let graph = random_graph(&mut rng, order);
            let mult = Multiplicity::new((0..order).map(|_| rng.gen_range(1..=4)).collect());
            let report = psd_lift_blowup(&graph, &mult).unwrap();
            assert!(report.identity_holds);
            if report.base_within_two {
                let m = build_blowup(&graph, &mult).unwrap();
                assert!(m.membership_status(&two()).is_member());
            }
        }
    }

    #[test]
    fn rowmerge_examples() {
        let m = HollowSymMatrix::from_i64_rows(&[&[0, 2], &[2, 0]]);
        let report = psd_lift_rowmerge(&m).unwrap();
        assert!(report.identity_holds && report.lift_within_two);

        let m = build_blowup(&SignedGraph::edgeless(1), &Multiplicity::new(vec![3])).unwrap();
        assert!(psd_lift_rowmerge(&m).unwrap().identity_holds);

        let m = HollowSymMatrix::from_i64_rows(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]);
        assert!(matches!(
            psd_lift_rowmerge(&m),
            Err(BlowupError::PreconditionViolated(_))
        ));
    }
}
