//! Symmetric hollow integer matrices: exact characteristic polynomials,
//! principal submatrices, smallest-eigenvalue threshold classification,
//! and switching.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{IntPolynomial, SpectralThreshold};
use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("index subset is empty")]
    EmptySubset,
    #[error("index {0} out of range for order {1}")]
    IndexOutOfRange(usize, usize),
    #[error("switching vector length {0} does not match matrix order {1}")]
    LengthMismatch(usize, usize),
    #[error("matrix orders {0} and {1} differ")]
    OrderMismatch(usize, usize),
    #[error("row {0} has wrong length")]
    RaggedRow(usize),
    #[error("order must be positive")]
    EmptyMatrix,
    #[error("entries ({0},{1}) and ({1},{0}) break symmetry")]
    NotSymmetric(usize, usize),
    #[error("diagonal entry at index {0} is nonzero")]
    NonzeroDiagonal(usize),
}

/// A symmetric integer matrix with zero diagonal, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HollowSymMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl std::fmt::Debug for HollowSymMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HollowSymMatrix[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl HollowSymMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::RaggedRow(i));
            }
        }
        for i in 0..n {
            if !rows[i][i].is_zero() {
                return Err(MatrixError::NonzeroDiagonal(i));
            }
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(MatrixError::NotSymmetric(i, j));
                }
            }
        }
        Ok(HollowSymMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("valid hollow symmetric rows")
    }

    /// Build from the strict upper triangle, `f(i, j)` with `i < j`.
    pub fn from_upper_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(n > 0);
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = f(i, j);
                entries[i * n + j] = v.clone();
                entries[j * n + i] = v;
            }
        }
        HollowSymMatrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        assert!(n > 0);
        HollowSymMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    /// det(xI - A) with exact integer coefficients, by the
    /// Faddeev-LeVerrier recurrence (every division is exact).
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        // m starts as the identity; each round does m <- A*m, then adds
        // the freshly computed coefficient to the diagonal.
        let mut m = vec![BigInt::zero(); n * n];
        for i in 0..n {
            m[i * n + i] = BigInt::one();
        }
        for k in 1..=n {
            m = self.mat_mul(&m);
            let mut tr = BigInt::zero();
            for i in 0..n {
                tr += &m[i * n + i];
            }
            let (q, r) = num_integer::Integer::div_rem(&-tr, &BigInt::from(k));
            debug_assert!(r.is_zero(), "trace division must be exact");
            for i in 0..n {
                m[i * n + i] += &q;
            }
            coeffs[n - k] = q;
        }
        IntPolynomial::new(coeffs)
    }

    fn mat_mul(&self, other: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Restriction to a subset of indices, kept in sorted order.
    pub fn principal_submatrix(&self, subset: &[usize]) -> Result<Self, MatrixError> {
        if subset.is_empty() {
            return Err(MatrixError::EmptySubset);
        }
        let mut idx = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.n) {
            return Err(MatrixError::IndexOutOfRange(bad, self.n));
        }
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in &idx {
            for &j in &idx {
                entries.push(self.entries[i * self.n + j].clone());
            }
        }
        Ok(HollowSymMatrix { n: k, entries })
    }

    /// Conjugation by the +/-1 diagonal matrix described by `signs`.
    pub fn switch(&self, signs: &SwitchingVector) -> Result<Self, MatrixError> {
        if signs.len() != self.n {
            return Err(MatrixError::LengthMismatch(signs.len(), self.n));
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut v = self.entries[i * n + j].clone();
                if signs.sign(i) * signs.sign(j) < 0 {
                    v = -v;
                }
                entries.push(v);
            }
        }
        Ok(HollowSymMatrix { n, entries })
    }

    /// Permute indices: entry (i, j) of the result is entry
    /// (perm[i], perm[j]) of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entries[perm[i] * n + perm[j]].clone());
            }
        }
        HollowSymMatrix { n, entries }
    }

    /// Find a switching vector `d` with `switch(other, d) == self`, if the
    /// two matrices are switching equivalent. Signs propagate along a
    /// spanning forest of the nonzero-entry support; the free sign of each
    /// component is +1 at its smallest index.
    pub fn switching_equivalent(
        &self,
        other: &Self,
    ) -> Result<Option<SwitchingVector>, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::OrderMismatch(self.n, other.n));
        }
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if self.entry(i, j).abs() != other.entry(i, j).abs() {
                    return Ok(None);
                }
            }
        }
        let mut signs = vec![0i8; n];
        for root in 0..n {
            if signs[root] != 0 {
                continue;
            }
            signs[root] = 1;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if signs[j] != 0 || self.entry(i, j).is_zero() {
                        continue;
                    }
                    // self_ij = d_i d_j other_ij, entries nonzero here
                    let same = self.entry(i, j).sign() == other.entry(i, j).sign();
                    signs[j] = if same { signs[i] } else { -signs[i] };
                    queue.push_back(j);
                }
            }
        }
        let d = SwitchingVector::new(signs).expect("all signs assigned");
        if &other.switch(&d).unwrap() == self {
            Ok(Some(d))
        } else {
            Ok(None)
        }
    }

    /// Status of the smallest eigenvalue against `-threshold`, computed
    /// exactly. No witness is produced; see
    /// [`classify_membership`](Self::classify_membership) for that.
    pub fn membership_status(&self, threshold: &SpectralThreshold) -> MembershipStatus {
        // Roots of q are the negated eigenvalues; an eigenvalue below
        // -threshold is a root of q above the threshold.
        let q = self.char_poly().reflect().squarefree_part();
        if let Some(point) = threshold.as_rational() {
            return status_at_rational(&q, &point);
        }
        let chain = q.sturm_chain();
        let boundary = threshold.is_root_of(&q);
        let expected = usize::from(boundary);
        let mut t = threshold.clone();
        loop {
            match IntPolynomial::sturm_count_with(&chain, t.isolation().lo(), t.isolation().hi())
            {
                Ok(c) if c == expected => break,
                _ => t = t.refined(&[&q]),
            }
        }
        let bound = q
            .root_bound()
            .max(t.isolation().hi() + BigRational::one());
        let above = IntPolynomial::sturm_count_with(&chain, t.isolation().hi(), &bound)
            .expect("endpoints clear of roots");
        if above > 0 {
            MembershipStatus::Outside
        } else if boundary {
            MembershipStatus::OnBoundary
        } else {
            MembershipStatus::StrictlyInside
        }
    }

    /// Full membership verdict. For an `Outside` matrix the witness is a
    /// locally minimal principal-index subset that is itself `Outside`.
    pub fn classify_membership(&self, threshold: &SpectralThreshold) -> MembershipVerdict {
        let status = self.membership_status(threshold);
        let witness = (status == MembershipStatus::Outside).then(|| {
            let mut subset: Vec<usize> = (0..self.n).collect();
            'shrink: while subset.len() > 1 {
                for drop in 0..subset.len() {
                    let mut smaller = subset.clone();
                    smaller.remove(drop);
                    let sub = self.principal_submatrix(&smaller).unwrap();
                    if sub.membership_status(threshold) == MembershipStatus::Outside {
                        subset = smaller;
                        continue 'shrink;
                    }
                }
                break;
            }
            subset
        });
        MembershipVerdict { status, witness }
    }

    /// Parse the `.hsm` text format: first line the order, then one line
    /// of space-separated integers per row.
    pub fn parse_hsm(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| ParseError::at(1, "empty input"))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| ParseError::at(1, format!("bad order {:?}", header.trim())))?;
        if n == 0 {
            return Err(ParseError::at(1, "order must be positive"));
        }
        let mut rows = Vec::with_capacity(n);
        for want in 0..n {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| ParseError::at(want + 2, "missing matrix row"))?;
            let row: Result<Vec<BigInt>, ParseError> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>()
                        .map_err(|_| ParseError::at(lineno + 1, format!("bad integer {:?}", tok)))
                })
                .collect();
            let row = row?;
            if row.len() != n {
                return Err(ParseError::at(
                    lineno + 1,
                    format!("expected {} entries, found {}", n, row.len()),
                ));
            }
            rows.push(row);
        }
        Self::from_rows(rows).map_err(|e| ParseError::at(1, e.to_string()))
    }

    pub fn to_hsm(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.entry(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A +/-1 sign per index; the diagonal of a switching matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingVector {
    signs: Vec<i8>,
}

impl SwitchingVector {
    pub fn new(signs: Vec<i8>) -> Result<Self, MatrixError> {
        if let Some(pos) = signs.iter().position(|&s| s != 1 && s != -1) {
            return Err(MatrixError::IndexOutOfRange(pos, signs.len()));
        }
        Ok(SwitchingVector { signs })
    }

    pub fn all_plus(n: usize) -> Self {
        SwitchingVector { signs: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

impl std::fmt::Display for SwitchingVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MembershipStatus {
    StrictlyInside,
    OnBoundary,
    Outside,
}

impl MembershipStatus {
    /// Membership in the family is non-strict: the boundary is inside.
    pub fn is_member(self) -> bool {
        self != MembershipStatus::Outside
    }
}

impl std::fmt::Display for MembershipStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MembershipStatus::StrictlyInside => "StrictlyInside",
            MembershipStatus::OnBoundary => "OnBoundary",
            MembershipStatus::Outside => "Outside",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub status: MembershipStatus,
    /// Present exactly when `status` is `Outside`; the named principal
    /// submatrix classifies `Outside` on its own.
    pub witness: Option<Vec<usize>>,
}

/// Verdict for a squarefree polynomial `q` against a rational point:
/// `Outside` when `q` has a root above `point`, `OnBoundary` when `point`
/// itself is the largest root.
fn status_at_rational(q: &IntPolynomial, point: &BigRational) -> MembershipStatus {
    let mut q = q.clone();
    let mut boundary = false;
    while q.eval(point).is_zero() {
        boundary = true;
        q = deflate_linear(&q, point);
    }
    if q.is_constant() {
        return if boundary {
            MembershipStatus::OnBoundary
        } else {
            MembershipStatus::StrictlyInside
        };
    }
    let bound = q.root_bound().max(point + BigRational::one());
    let above = q.sturm_count(point, &bound).expect("point is not a root");
    if above > 0 {
        MembershipStatus::Outside
    } else if boundary {
        MembershipStatus::OnBoundary
    } else {
        MembershipStatus::StrictlyInside
    }
}

/// Divide out one factor `x - point` (the point must be a root).
fn deflate_linear(p: &IntPolynomial, point: &BigRational) -> IntPolynomial {
    let coeffs = p.coeffs();
    let mut quot: Vec<BigRational> = vec![BigRational::zero(); coeffs.len() - 1];
    let mut carry = BigRational::zero();
    for i in (1..coeffs.len()).rev() {
        carry = BigRational::from_integer(coeffs[i].clone()) + carry * point;
        quot[i - 1] = carry.clone();
    }
    // Clear denominators; sign does not matter for root locations but is
    // preserved anyway.
    let mut lcm = BigInt::one();
    for c in &quot {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    IntPolynomial::new(
        quot.into_iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    )
}
