//! Integer polynomials with arbitrary-precision coefficients, plus the
//! Sturm-sequence machinery used for exact real-root counting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::error::ExactNumError;

/// A univariate polynomial with `BigInt` coefficients, stored lowest
/// degree first. The coefficient vector never has a trailing zero, so
/// `coeffs.len() - 1` is the degree of a nonzero polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}", abs)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Substitute `inner` for the variable (polynomial composition).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// The polynomial `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The gcd of the coefficients, always nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Divide out the (positive) content. Sign of the leading coefficient
    /// is preserved.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn monic_sign(&self) -> Self {
        let p = self.primitive_part();
        match p.leading() {
            Some(l) if l.is_negative() => p.neg(),
            _ => p,
        }
    }

    /// Greatest common divisor, returned primitive with a positive leading
    /// coefficient (or zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = to_rat(self);
        let mut b = to_rat(other);
        while !b.is_empty() {
            let r = rat_rem(&a, &b);
            a = b;
            b = r;
        }
        from_rat(&a).monic_sign()
    }

    /// `self / gcd(self, self')`; the radical with the same real roots,
    /// each simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.is_constant() {
            return self.monic_sign();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic_sign();
        }
        let q = rat_div_exact(&to_rat(self), &to_rat(&g));
        from_rat(&q).monic_sign()
    }

    /// A rational `B > 0` such that all real roots lie in `(-B, B)`
    /// (Cauchy bound).
    pub fn root_bound(&self) -> BigRational {
        let lead = match self.leading() {
            Some(l) => l.abs(),
            None => return BigRational::one(),
        };
        let mut maxc = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > maxc {
                maxc = a;
            }
        }
        BigRational::one() + BigRational::new(maxc, lead)
    }

    /// Sturm chain of this polynomial, scaled back to primitive integer
    /// polynomials at each step (positive scaling preserves signs).
    pub fn sturm_chain(&self) -> Vec<IntPolynomial> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = rat_rem(&to_rat(&chain[n - 2]), &to_rat(&chain[n - 1]));
            chain.push(from_rat(&r).primitive_part().neg());
        }
        chain.pop();
        chain
    }

    /// Number of distinct real roots strictly inside `(lo, hi)`.
    pub fn sturm_count(
        &self,
        lo: &BigRational,
        hi: &BigRational,
    ) -> Result<usize, ExactNumError> {
        if self.is_zero() {
            return Err(ExactNumError::ZeroPolynomial);
        }
        if lo > hi {
            return Ok(0);
        }
        if self.eval(lo).is_zero() || self.eval(hi).is_zero() {
            return Err(ExactNumError::EndpointRoot);
        }
        let chain = self.sturm_chain();
        Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
    }

    /// Like [`sturm_count`](Self::sturm_count) but with a precomputed chain.
    pub fn sturm_count_with(
        chain: &[IntPolynomial],
        lo: &BigRational,
        hi: &BigRational,
    ) -> Result<usize, ExactNumError> {
        let p = &chain[0];
        if p.is_zero() {
            return Err(ExactNumError::ZeroPolynomial);
        }
        if lo > hi {
            return Ok(0);
        }
        if p.eval(lo).is_zero() || p.eval(hi).is_zero() {
            return Err(ExactNumError::EndpointRoot);
        }
        Ok(sign_variations(chain, lo) - sign_variations(chain, hi))
    }

    /// Total number of distinct real roots.
    pub fn real_root_count(&self) -> Result<usize, ExactNumError> {
        let b = self.root_bound();
        self.sturm_count(&-b.clone(), &b)
    }
}

fn sign_variations(chain: &[IntPolynomial], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut variations = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                variations += 1;
            }
            last = s;
        }
    }
    variations
}

// Dense rational-coefficient helpers backing gcd and the Sturm chain.
// Vectors are lowest degree first with no trailing zeros.

fn to_rat(p: &IntPolynomial) -> Vec<BigRational> {
    p.coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn from_rat(p: &[BigRational]) -> IntPolynomial {
    // Clear denominators by a positive multiple.
    let mut denom_lcm = BigInt::one();
    for c in p {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    IntPolynomial::new(
        p.iter()
            .map(|c| {
                let scaled = c * BigRational::from_integer(denom_lcm.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect(),
    )
}

fn rat_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder of `a` divided by `b` (`b` nonzero).
fn rat_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r.last().unwrap() / lb;
        for i in 0..=db {
            let t = &b[i] * &factor;
            r[dr - db + i] -= t;
        }
        r.pop();
        rat_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Exact quotient `a / b`; panics in debug builds if the division is inexact.
fn rat_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r.last().unwrap() / lb;
        q[dr - db] = factor.clone();
        for i in 0..=db {
            let t = &b[i] * &factor;
            r[dr - db + i] -= t;
        }
        r.pop();
        rat_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}
