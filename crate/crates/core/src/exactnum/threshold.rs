//! Exact positive algebraic threshold values, represented as a squarefree
//! integer polynomial together with an isolating rational interval.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::error::ExactNumError;
use super::poly::IntPolynomial;

/// A closed rational interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }
}

impl std::fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// An exact positive real algebraic number: a squarefree primitive integer
/// polynomial plus a rational interval isolating exactly one of its real
/// roots. All comparisons against these values are exact; the decimal
/// string is advisory display only.
#[derive(Clone, Debug)]
pub struct SpectralThreshold {
    minpoly: IntPolynomial,
    chain: Vec<IntPolynomial>,
    isolation: RationalInterval,
    display: String,
}

impl PartialEq for SpectralThreshold {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl SpectralThreshold {
    /// Build from a defining polynomial and a bracketing interval. The
    /// polynomial is replaced by its squarefree primitive part; the
    /// interval must then isolate exactly one root, and that root must be
    /// positive.
    pub fn from_poly_interval(
        poly: IntPolynomial,
        lo: BigRational,
        hi: BigRational,
    ) -> Result<Self, ExactNumError> {
        let minpoly = poly.squarefree_part();
        if minpoly.is_zero() {
            return Err(ExactNumError::ZeroPolynomial);
        }
        let chain = minpoly.sturm_chain();
        let count = IntPolynomial::sturm_count_with(&chain, &lo, &hi)?;
        assert_eq!(count, 1, "interval does not isolate exactly one root");
        let mut t = SpectralThreshold {
            minpoly,
            chain,
            isolation: RationalInterval::new(lo, hi),
            display: String::new(),
        };
        // Positivity: shrink until the sign of the interval is determined.
        while t.isolation.lo.is_negative() && t.isolation.hi.is_positive() {
            t = t.refined(&[]);
        }
        if !t.isolation.hi.is_positive() {
            return Err(ExactNumError::NonPositive);
        }
        t.display = format!("{:.5}", t.approx_f64());
        Ok(t)
    }

    /// The threshold equal to a positive rational `q`.
    pub fn from_rational(q: BigRational) -> Result<Self, ExactNumError> {
        if !q.is_positive() {
            return Err(ExactNumError::NonPositive);
        }
        let minpoly = IntPolynomial::new(vec![-q.numer().clone(), q.denom().clone()]);
        let one = BigRational::one();
        Self::from_poly_interval(minpoly, &q - &one, &q + &one)
    }

    /// The threshold `sqrt(n)` for a non-square integer `n >= 2`.
    pub fn sqrt_of(n: u64) -> Result<Self, ExactNumError> {
        let big = BigInt::from(n);
        if n == 0 {
            return Err(ExactNumError::NonPositive);
        }
        let isqrt = big.sqrt();
        if &isqrt * &isqrt == big {
            return Err(ExactNumError::PerfectSquare { n: big, sqrt: isqrt });
        }
        let minpoly = IntPolynomial::new(vec![-big, BigInt::zero(), BigInt::one()]);
        let lo = BigRational::from_integer(isqrt.clone());
        let hi = BigRational::from_integer(isqrt + 1);
        Self::from_poly_interval(minpoly, lo, hi)
    }

    /// The threshold `rho^(1/2) + rho^(-1/2)` where `rho` is the real root
    /// of `x^3 = x + 1`. Constructed by eliminating `rho` with a resultant:
    /// if `t = rho + 1/rho` then `Res_x(x^3 - x - 1, x^2 - t x + 1) = 0`,
    /// and the value itself satisfies `t = x^2 - 2`.
    pub fn finiteness_threshold() -> Self {
        // Coefficients in x; each coefficient is a polynomial in t.
        let cubic = [
            IntPolynomial::from_i64(&[-1]),
            IntPolynomial::from_i64(&[-1]),
            IntPolynomial::zero(),
            IntPolynomial::from_i64(&[1]),
        ];
        let pair = [
            IntPolynomial::from_i64(&[1]),
            IntPolynomial::from_i64(&[0, -1]), // -t
            IntPolynomial::from_i64(&[1]),
        ];
        let res_in_t = sylvester_resultant(&cubic, &pair);
        let shift = IntPolynomial::from_i64(&[-2, 0, 1]); // x^2 - 2
        let minpoly = res_in_t.compose(&shift);
        Self::from_poly_interval(
            minpoly,
            BigRational::from_integer(BigInt::from(2)),
            BigRational::from_integer(BigInt::from(3)),
        )
        .expect("shift threshold construction")
    }

    /// The spectral-radius constant `sqrt(2 + sqrt(5))`, exposed for
    /// reporting only. Minimal polynomial `x^4 - 4x^2 - 1`.
    pub fn radius_threshold() -> Self {
        Self::from_poly_interval(
            IntPolynomial::from_i64(&[-1, 0, -4, 0, 1]),
            BigRational::from_integer(BigInt::from(2)),
            BigRational::from_integer(BigInt::from(3)),
        )
        .expect("radius threshold construction")
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn isolation(&self) -> &RationalInterval {
        &self.isolation
    }

    pub fn display(&self) -> &str {
        &self.display
    }

    /// Exact rational value, if the isolated root is rational (degree-1
    /// minimal polynomial factor through the interval is not detected;
    /// only a linear minpoly qualifies).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.minpoly.degree() == Some(1) {
            Some(BigRational::new(
                -self.minpoly.coeff(0),
                self.minpoly.coeff(1),
            ))
        } else {
            None
        }
    }

    /// One bisection step. The returned value represents the same real
    /// number with an interval of at most half the width; the split point
    /// avoids roots of `minpoly` and of every polynomial in `avoid`.
    pub fn refined(&self, avoid: &[&IntPolynomial]) -> Self {
        let c = pick_point(
            &self.isolation.lo,
            &self.isolation.hi,
            &self.minpoly,
            avoid,
        );
        let left = IntPolynomial::sturm_count_with(&self.chain, &self.isolation.lo, &c)
            .expect("split point is not a root");
        let (lo, hi) = if left == 1 {
            (self.isolation.lo.clone(), c)
        } else {
            (c, self.isolation.hi.clone())
        };
        SpectralThreshold {
            minpoly: self.minpoly.clone(),
            chain: self.chain.clone(),
            isolation: RationalInterval::new(lo, hi),
            display: self.display.clone(),
        }
    }

    /// Refine until the interval width is at most `w`.
    pub fn refined_to_width(&self, w: &BigRational) -> Self {
        let mut t = self.clone();
        while t.isolation.width() > *w {
            t = t.refined(&[]);
        }
        t
    }

    /// Double-precision approximation of the represented value (display
    /// and testing only; never used in verdicts).
    pub fn approx_f64(&self) -> f64 {
        let w = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000i64));
        let t = self.refined_to_width(&w);
        let m = t.isolation.midpoint();
        rational_to_f64(&m)
    }

    /// Does this threshold's root satisfy `q`?
    pub fn is_root_of(&self, q: &IntPolynomial) -> bool {
        if q.is_zero() {
            return true;
        }
        let g = self.minpoly.gcd(q);
        if g.is_constant() {
            return false;
        }
        // g divides minpoly, so the interval endpoints are not roots of g
        // and the root of g inside the interval, if any, is the isolated root.
        g.sturm_count(&self.isolation.lo, &self.isolation.hi)
            .expect("endpoints are not roots of the minimal polynomial")
            == 1
    }

    /// Exact trichotomy on the represented real values.
    pub fn compare(&self, other: &Self) -> Ordering {
        let g = self.minpoly.gcd(&other.minpoly);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.isolation.hi <= b.isolation.lo {
                return Ordering::Less;
            }
            if b.isolation.hi <= a.isolation.lo {
                return Ordering::Greater;
            }
            let lo = a.isolation.lo.clone().max(b.isolation.lo.clone());
            let hi = a.isolation.hi.clone().min(b.isolation.hi.clone());
            if !g.is_constant() && lo < hi {
                let both_inside = count_ok(&a.chain, &lo, &hi) == Some(1)
                    && count_ok(&b.chain, &lo, &hi) == Some(1);
                if both_inside {
                    if let Ok(c) = g.sturm_count(&lo, &hi) {
                        if c >= 1 {
                            return Ordering::Equal;
                        }
                    }
                }
            }
            a = a.refined(&[&b.minpoly, &g]);
            b = b.refined(&[&a.minpoly, &g]);
        }
    }

    /// Compare the represented value against a rational point.
    pub fn compare_rational(&self, q: &BigRational) -> Ordering {
        let v = self.minpoly.eval(q);
        if v.is_zero() {
            // q is a root of minpoly; equal iff q lies in the interval.
            if &self.isolation.lo < q && q < &self.isolation.hi {
                return Ordering::Equal;
            }
        }
        let mut t = self.clone();
        loop {
            if &t.isolation.hi <= q {
                return Ordering::Less;
            }
            if q <= &t.isolation.lo {
                return Ordering::Greater;
            }
            if t.minpoly.eval(q).is_zero() {
                return Ordering::Equal;
            }
            t = t.refined(&[]);
        }
    }
}

impl std::fmt::Display for SpectralThreshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "root of {} in {} (~{})",
            self.minpoly, self.isolation, self.display
        )
    }
}

fn count_ok(chain: &[IntPolynomial], lo: &BigRational, hi: &BigRational) -> Option<usize> {
    IntPolynomial::sturm_count_with(chain, lo, hi).ok()
}

fn rational_to_f64(q: &BigRational) -> f64 {
    // Good enough for display: scale to keep 15+ significant digits.
    let scale = BigInt::from(1u64 << 60);
    let scaled = (q * BigRational::from_integer(scale.clone())).to_integer();
    let mut x = 0.0f64;
    // Convert via string to avoid precision games with huge integers.
    if let Ok(v) = scaled.to_string().parse::<f64>() {
        x = v / (1u64 << 60) as f64;
    }
    x
}

/// A point strictly inside `(lo, hi)` that is not a root of `p` nor of any
/// polynomial in `avoid`. Exists because polynomials have finitely many
/// roots.
fn pick_point(
    lo: &BigRational,
    hi: &BigRational,
    p: &IntPolynomial,
    avoid: &[&IntPolynomial],
) -> BigRational {
    let width = hi - lo;
    for denom in 2u64.. {
        'numer: for numer in 1..denom {
            if num_integer::gcd(numer, denom) != 1 {
                continue;
            }
            let c = lo + &width * BigRational::new(BigInt::from(numer), BigInt::from(denom));
            if p.eval(&c).is_zero() {
                continue;
            }
            for q in avoid {
                if !q.is_zero() && q.eval(&c).is_zero() {
                    continue 'numer;
                }
            }
            return c;
        }
    }
    unreachable!()
}

/// Resultant of two polynomials in a main variable whose coefficients are
/// themselves integer polynomials in a second variable. Coefficients are
/// given lowest main-degree first. Computed as the determinant of the
/// Sylvester matrix by cofactor expansion (sizes here are tiny).
pub fn sylvester_resultant(p: &[IntPolynomial], q: &[IntPolynomial]) -> IntPolynomial {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut rows: Vec<Vec<IntPolynomial>> = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![IntPolynomial::zero(); size];
        for (k, c) in p.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![IntPolynomial::zero(); size];
        for (k, c) in q.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    poly_det(&rows)
}

fn poly_det(rows: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = rows.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det = IntPolynomial::zero();
    for (i, row) in rows.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPolynomial>> = rows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = row[0].mul(&poly_det(&minor));
        det = if i % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}
