//! Signed graphs, switching-isomorphism canonical forms, and bounded-order
//! enumeration of switching classes.
//!
//! Canonicalization is exhaustive over vertex labelings, restricted by
//! switching-invariant vertex invariants and pruned by prefix comparison
//! against the best encoding found so far. Within a fixed labeling, signs
//! are normalized along a spanning forest (forest edges forced positive),
//! which is a complete invariant of the switching class.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::matrixcore::HollowSymMatrix;
use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge sign must be +1 or -1")]
    BadSign,
}

/// A graph on `{0..order-1}` whose edges carry signs in `{+1, -1}`.
/// The strict upper triangle is stored flat, grouped by the larger
/// endpoint, so adding a vertex appends entries at the end.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    order: usize,
    // signs[tri_index(u, v)] in {-1, 0, +1}; 0 means no edge
    signs: Vec<i8>,
}

fn tri_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// Root of `x` and the sign product along the path to it.
fn dsu_find(dsu: &[(usize, i8)], mut x: usize) -> (usize, i8) {
    let mut s = 1i8;
    while dsu[x].0 != x {
        s *= dsu[x].1;
        x = dsu[x].0;
    }
    (x, s)
}

impl std::fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SignedGraph(n={}, edges=[", self.order)?;
        for (i, (u, v, s)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}{}", u, if s > 0 { '+' } else { '-' }, v)?;
        }
        write!(f, "])")
    }
}

impl SignedGraph {
    pub fn edgeless(order: usize) -> Self {
        assert!(order > 0);
        SignedGraph {
            order,
            signs: vec![0; order * (order - 1) / 2],
        }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize, i8)]) -> Result<Self, GraphError> {
        assert!(order > 0);
        let mut g = Self::edgeless(order);
        for &(a, b, s) in edges {
            if a >= order {
                return Err(GraphError::VertexOutOfRange(a, order));
            }
            if b >= order {
                return Err(GraphError::VertexOutOfRange(b, order));
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if s != 1 && s != -1 {
                return Err(GraphError::BadSign);
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            let slot = &mut g.signs[tri_index(u, v)];
            if *slot != 0 {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            *slot = s;
        }
        Ok(g)
    }

    /// All-positive star with the center at vertex 0.
    pub fn positive_star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v, 1i8)).collect();
        Self::from_edges(leaves + 1, &edges).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sign of the edge between `a` and `b`; 0 when absent.
    pub fn sign(&self, a: usize, b: usize) -> i8 {
        if a == b {
            return 0;
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.signs[tri_index(u, v)]
    }

    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        let mut out = Vec::new();
        for v in 1..self.order {
            for u in 0..v {
                let s = self.signs[tri_index(u, v)];
                if s != 0 {
                    out.push((u, v, s));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s != 0).count()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.order).filter(|&u| self.sign(u, v) != 0).count()
    }

    pub fn adjacency_matrix(&self) -> HollowSymMatrix {
        HollowSymMatrix::from_upper_fn(self.order, |i, j| BigInt::from(self.sign(i, j)))
    }

    /// Keep exactly the vertices in `subset` (sorted, relabeled 0..k-1)
    /// and the edges among them.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Self, GraphError> {
        if subset.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let mut idx = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&v| v >= self.order) {
            return Err(GraphError::VertexOutOfRange(bad, self.order));
        }
        let mut g = Self::edgeless(idx.len());
        for (new_v, &old_v) in idx.iter().enumerate() {
            for (new_u, &old_u) in idx.iter().enumerate().take(new_v) {
                g.signs[tri_index(new_u, new_v)] = self.sign(old_u, old_v);
            }
        }
        Ok(g)
    }

    /// Connected components of the underlying unsigned graph, each sorted,
    /// ordered by smallest contained vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut comps = Vec::new();
        for root in 0..self.order {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in 0..self.order {
                    if !seen[u] && self.sign(u, v) != 0 {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        let mut g = Self::edgeless(self.order);
        for (u, v, s) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            g.signs[tri_index(a, b)] = s;
        }
        g
    }

    /// Reverse the sign of every edge across the cut defined by `signs`.
    pub fn switched(&self, vertex_signs: &[i8]) -> Self {
        assert_eq!(vertex_signs.len(), self.order);
        let mut g = self.clone();
        for v in 1..self.order {
            for u in 0..v {
                let i = tri_index(u, v);
                if g.signs[i] != 0 && vertex_signs[u] * vertex_signs[v] < 0 {
                    g.signs[i] = -g.signs[i];
                }
            }
        }
        g
    }

    /// One more vertex, adjacent to the existing vertices according to
    /// `new_signs` (one entry per old vertex, 0 for no edge).
    pub fn extended(&self, new_signs: &[i8]) -> Self {
        assert_eq!(new_signs.len(), self.order);
        let mut signs = self.signs.clone();
        signs.extend_from_slice(new_signs);
        SignedGraph {
            order: self.order + 1,
            signs,
        }
    }

    /// Per-vertex invariant preserved by relabeling and switching:
    /// (degree, unbalanced triangles through the vertex, balanced
    /// triangles through the vertex).
    fn vertex_invariants(&self) -> Vec<(usize, usize, usize)> {
        let n = self.order;
        let mut inv = vec![(0usize, 0usize, 0usize); n];
        for v in 0..n {
            inv[v].0 = self.degree(v);
        }
        for a in 0..n {
            for b in (a + 1)..n {
                let sab = self.sign(a, b);
                if sab == 0 {
                    continue;
                }
                for c in (b + 1)..n {
                    let sbc = self.sign(b, c);
                    let sac = self.sign(a, c);
                    if sbc == 0 || sac == 0 {
                        continue;
                    }
                    if sab * sbc * sac > 0 {
                        inv[a].2 += 1;
                        inv[b].2 += 1;
                        inv[c].2 += 1;
                    } else {
                        inv[a].1 += 1;
                        inv[b].1 += 1;
                        inv[c].1 += 1;
                    }
                }
            }
        }
        inv
    }

    /// Canonical byte string: equal keys exactly for switching-isomorphic
    /// graphs.
    pub fn canonical_key(&self) -> CanonicalKey {
        let inv = self.vertex_invariants();
        let mut target: Vec<(usize, usize, usize)> = inv.clone();
        target.sort_unstable_by(|a, b| b.cmp(a));

        let n = self.order;
        let mut best: Option<Vec<u8>> = None;
        let mut used = vec![false; n];
        let mut perm = Vec::with_capacity(n); // perm[pos] = original vertex
        let mut enc: Vec<u8> = Vec::with_capacity(n * (n - 1) / 2);
        // Union-find over positions with signs relative to each root;
        // tree edges normalize to +1, the rest to their cycle product.
        let mut dsu: Vec<(usize, i8)> = Vec::with_capacity(n);

        self.search_labelings(
            &inv,
            &target,
            &mut used,
            &mut perm,
            &mut enc,
            &mut dsu,
            &mut best,
        );

        let mut key = vec![n as u8];
        key.extend(best.expect("at least one labeling"));
        CanonicalKey(key)
    }

    #[allow(clippy::too_many_arguments)]
    fn search_labelings(
        &self,
        inv: &[(usize, usize, usize)],
        target: &[(usize, usize, usize)],
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        enc: &mut Vec<u8>,
        dsu: &mut Vec<(usize, i8)>,
        best: &mut Option<Vec<u8>>,
    ) {
        let n = self.order;
        let pos = perm.len();
        if pos == n {
            if best.as_ref().is_none_or(|b| enc.as_slice() < b.as_slice()) {
                *best = Some(enc.clone());
            }
            return;
        }
        for w in 0..n {
            if used[w] || inv[w] != target[pos] {
                continue;
            }
            let enc_len = enc.len();
            let dsu_snapshot = dsu.clone();
            used[w] = true;
            perm.push(w);
            dsu.push((pos, 1));

            // Append normalized bytes for pairs (0, pos) .. (pos-1, pos).
            for i in 0..pos {
                let sigma = self.sign(perm[i], w);
                if sigma == 0 {
                    enc.push(0);
                    continue;
                }
                let (ri, si) = dsu_find(dsu, i);
                let (rp, sp) = dsu_find(dsu, pos);
                if ri != rp {
                    // Spanning-forest edge: merge and force it to +1.
                    dsu[rp] = (ri, si * sp * sigma);
                    enc.push(1);
                } else {
                    enc.push(if si * sp * sigma > 0 { 1 } else { 2 });
                }
            }

            let keep = match best.as_ref() {
                Some(b) => enc.as_slice() <= &b[..enc.len()],
                None => true,
            };
            if keep {
                self.search_labelings(inv, target, used, perm, enc, dsu, best);
            }

            enc.truncate(enc_len);
            *dsu = dsu_snapshot;
            perm.pop();
            used[w] = false;
        }
    }

    /// Parse the `.sg` text format: "n m" then `m` lines "u v s" with
    /// 1-based `u < v` and `s` one of `+1`, `-1`, `+`, `-`.
    pub fn parse_sg(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| ParseError::at(1, "empty input"))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(ParseError::at(1, "expected header \"n m\""));
        }
        let n: usize = parts[0]
            .parse()
            .map_err(|_| ParseError::at(1, format!("bad order {:?}", parts[0])))?;
        let m: usize = parts[1]
            .parse()
            .map_err(|_| ParseError::at(1, format!("bad edge count {:?}", parts[1])))?;
        if n == 0 {
            return Err(ParseError::at(1, "order must be positive"));
        }
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| ParseError::at(k + 2, "missing edge line"))?;
            let lineno = lineno + 1;
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(ParseError::at(lineno, "expected \"u v s\""));
            }
            let u: usize = parts[0]
                .parse()
                .map_err(|_| ParseError::at(lineno, format!("bad vertex {:?}", parts[0])))?;
            let v: usize = parts[1]
                .parse()
                .map_err(|_| ParseError::at(lineno, format!("bad vertex {:?}", parts[1])))?;
            if u == 0 || v == 0 {
                return Err(ParseError::at(lineno, "vertices are 1-based"));
            }
            if !(u < v) {
                return Err(ParseError::at(lineno, "edges must have u < v"));
            }
            let s: i8 = match parts[2] {
                "+1" | "+" => 1,
                "-1" | "-" | "\u{2212}1" | "\u{2212}" => -1,
                other => {
                    return Err(ParseError::at(lineno, format!("bad sign {:?}", other)));
                }
            };
            edges.push((u - 1, v - 1, s));
        }
        Self::from_edges(n, &edges).map_err(|e| ParseError::at(1, e.to_string()))
    }

    pub fn to_sg(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.order, edges.len());
        for (u, v, s) in edges {
            out.push_str(&format!(
                "{} {} {}\n",
                u + 1,
                v + 1,
                if s > 0 { "+1" } else { "-1" }
            ));
        }
        out
    }
}

/// Opaque canonical identifier of a switching-isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in &self.0 {
            write!(f, "{:x}", b)?;
        }
        Ok(())
    }
}

/// One representative per switching-isomorphism class, per order
/// `1..=max_order`, generated by one-vertex extensions. When
/// `keep_extending` returns false for a representative, none of its
/// extensions are visited; the predicate must be hereditary for the
/// pruned enumeration to stay complete.
pub fn enumerate_switching_classes(
    max_order: usize,
    mut keep_extending: impl FnMut(&SignedGraph) -> bool,
) -> Vec<Vec<SignedGraph>> {
    assert!(max_order >= 1);
    let mut levels: Vec<Vec<SignedGraph>> = vec![vec![SignedGraph::edgeless(1)]];
    for k in 1..max_order {
        let mut classes: BTreeMap<CanonicalKey, SignedGraph> = BTreeMap::new();
        for g in &levels[k - 1] {
            if !keep_extending(g) {
                continue;
            }
            let mut pattern = vec![0i8; k];
            loop {
                let h = g.extended(&pattern);
                classes.entry(h.canonical_key()).or_insert(h);
                // next pattern over {0, +1, -1}^k
                let mut carry = true;
                for slot in pattern.iter_mut() {
                    *slot = match *slot {
                        0 => 1,
                        1 => -1,
                        _ => 0,
                    };
                    if *slot != 0 {
                        carry = false;
                        break;
                    }
                }
                if carry {
                    break;
                }
            }
        }
        levels.push(classes.into_values().collect());
    }
    levels
}

/// All switching-isomorphism classes of the given order, canonically
/// sorted.
pub fn switching_classes_of_order(order: usize) -> Vec<SignedGraph> {
    enumerate_switching_classes(order, |_| true)
        .pop()
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_examples() {
        let g = SignedGraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(
            g.adjacency_matrix(),
            HollowSymMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])
        );
        assert_eq!(
            SignedGraph::edgeless(3).adjacency_matrix(),
            HollowSymMatrix::zero(3)
        );
        let star = SignedGraph::positive_star(5);
        let m = star.adjacency_matrix();
        assert_eq!(m.order(), 6);
        for j in 1..6 {
            assert_eq!(m.entry(0, j), &BigInt::from(1));
        }
        assert_eq!(m.entry(1, 2), &BigInt::from(0));
    }

    #[test]
    fn induced_subgraph_cases() {
        let star = SignedGraph::positive_star(5);
        assert_eq!(star.induced_subgraph(&[0, 1, 2, 3, 4, 5]).unwrap(), star);
        assert_eq!(
            star.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(),
            SignedGraph::positive_star(4)
        );
        assert_eq!(
            star.induced_subgraph(&[1, 2, 3, 4, 5]).unwrap(),
            SignedGraph::edgeless(5)
        );
        assert_eq!(star.induced_subgraph(&[]), Err(GraphError::EmptySubset));
    }

    #[test]
    fn component_cases() {
        assert_eq!(
            SignedGraph::edgeless(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let g = SignedGraph::from_edges(3, &[(0, 1, -1)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2]]);
        assert!(SignedGraph::positive_star(5).is_connected());
    }

    #[test]
    fn canonical_key_switching_and_signs() {
        let plus = SignedGraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        let minus = SignedGraph::from_edges(2, &[(0, 1, -1)]).unwrap();
        assert_eq!(plus.canonical_key(), minus.canonical_key());

        // Balanced triangles: all-positive vs one +, two -
        let bal1 = SignedGraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let bal2 = SignedGraph::from_edges(3, &[(0, 1, 1), (1, 2, -1), (0, 2, -1)]).unwrap();
        assert_eq!(bal1.canonical_key(), bal2.canonical_key());

        let unbal = SignedGraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]).unwrap();
        assert_ne!(bal1.canonical_key(), unbal.canonical_key());
    }

    #[test]
    fn canonical_key_relabeling_invariance() {
        let g = SignedGraph::from_edges(
            5,
            &[(0, 1, 1), (1, 2, -1), (2, 3, 1), (3, 4, -1), (0, 4, 1), (1, 3, -1)],
        )
        .unwrap();
        let key = g.canonical_key();
        let perm = [3, 0, 4, 1, 2];
        assert_eq!(g.relabeled(&perm).canonical_key(), key);
        let switched = g.switched(&[1, -1, 1, -1, -1]);
        assert_eq!(switched.canonical_key(), key);
        assert_eq!(switched.relabeled(&perm).canonical_key(), key);
    }

    #[test]
    fn forests_normalize_to_all_positive() {
        let signed_path =
            SignedGraph::from_edges(4, &[(0, 1, -1), (1, 2, 1), (2, 3, -1)]).unwrap();
        let positive_path =
            SignedGraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(signed_path.canonical_key(), positive_path.canonical_key());
    }

    #[test]
    fn enumeration_counts_small_orders() {
        assert_eq!(switching_classes_of_order(1).len(), 1);
        assert_eq!(switching_classes_of_order(2).len(), 2);
        assert_eq!(switching_classes_of_order(3).len(), 5);
    }

    #[test]
    fn enumeration_matches_brute_force_order_4() {
        // All 3^6 sign patterns, deduplicated by canonical key.
        let mut keys = std::collections::BTreeSet::new();
        let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
        for mask in 0..3u32.pow(6) {
            let mut m = mask;
            let mut edges = Vec::new();
            for &(u, v) in &pairs {
                match m % 3 {
                    1 => edges.push((u, v, 1i8)),
                    2 => edges.push((u, v, -1i8)),
                    _ => {}
                }
                m /= 3;
            }
            keys.insert(SignedGraph::from_edges(4, &edges).unwrap().canonical_key());
        }
        let enumerated = switching_classes_of_order(4);
        assert_eq!(enumerated.len(), keys.len());
        let enum_keys: std::collections::BTreeSet<_> =
            enumerated.iter().map(|g| g.canonical_key()).collect();
        assert_eq!(enum_keys, keys);
    }

    #[test]
    fn hereditary_prune_cuts_extensions() {
        // Extend only edgeless graphs: all survivors are stars K_{1,k}
        // centered at the newest vertex.
        let levels = enumerate_switching_classes(4, |g| g.edge_count() == 0);
        assert_eq!(levels[2].len(), 3); // edgeless, one edge, path
        assert_eq!(levels[3].len(), 4); // K_{1,k} for k = 0..3
        // No triangles can appear: both order-3 triangle classes need an
        // edged parent.
        let full = enumerate_switching_classes(3, |_| true);
        assert_eq!(full[2].len(), 5);
    }

    #[test]
    fn sg_round_trip_and_errors() {
        let g = SignedGraph::from_edges(4, &[(0, 1, 1), (1, 3, -1)]).unwrap();
        let text = g.to_sg();
        assert_eq!(SignedGraph::parse_sg(&text).unwrap(), g);

        assert_eq!(SignedGraph::parse_sg("2 1\n2 1 +1\n").unwrap_err().line, 2);
        assert_eq!(SignedGraph::parse_sg("2 1\n1 2 3\n").unwrap_err().line, 2);
        assert_eq!(SignedGraph::parse_sg("2 2\n1 2 +\n").unwrap_err().line, 3);
        assert!(SignedGraph::parse_sg("3 1\n1 2 -\n")
            .unwrap()
            .sign(0, 1) == -1);
    }
}
