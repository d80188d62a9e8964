//! Independent route to |H₁(Σ_p)| through the Alexander polynomial.
//!
//! Δ comes from the reduced Burau representation:
//! det(β − I) = ±tᵏ · Δ(t) · (1 + t + … + t^(n−1)).
//! For a knot, |H₁(Σ_p)| = ∏_{ζ^p = 1, ζ ≠ 1} |Δ(ζ)|, grouped by cyclotomic
//! factor as ∏_{d | p, d > 1} |Res(Φ_d, Δ)|. Every step is exact integer
//! arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::braid::{BraidWord, Sign};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Integer Laurent polynomial in t. No stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by t^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// f(t⁻¹).
    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (&e, c) in &other.terms {
            r.add_term(e, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut r = Self::zero();
        for (&e, c) in &self.terms {
            r.add_term(e, c * k);
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }

    /// Coefficients of t^min..=t^max as a dense vector, with min.
    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return (0, Vec::new());
        };
        (lo, (lo..=hi).map(|e| self.coeff(e)).collect())
    }

    fn from_dense(lo: i64, coeffs: &[BigInt]) -> Self {
        let mut r = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            r.add_term(lo + i as i64, c.clone());
        }
        r
    }

    /// Exact quotient, or None if `other` does not divide `self` in Z[t, t⁻¹].
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (lo_a, a) = self.to_dense();
        let (lo_b, b) = other.to_dense();
        poly_div_exact(&a, &b).map(|q| Self::from_dense(lo_a - lo_b, &q))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one() && e != 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Dense integer polynomial helpers; index = exponent.
fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

/// Quotient when `b` divides `a` exactly over Z, None otherwise.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = poly_divmod(a, b)?;
    r.is_empty().then_some(q)
}

/// Long division. Needs every step's quotient coefficient to be integral.
fn poly_divmod(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = b.last()?.clone();
    if a.len() < b.len() {
        return Some((Vec::new(), a));
    }
    let mut r = a;
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let top = r.last().expect("nonempty").clone();
        let (c, rem) = top.div_rem(&lead);
        if !rem.is_zero() {
            return None;
        }
        let k = r.len() - b.len();
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &c * y;
        }
        q[k] = c;
        r = trim(r);
    }
    Some((trim(q), r))
}

/// Φ_d as a dense coefficient vector.
pub fn cyclotomic(d: usize) -> Vec<BigInt> {
    assert!(d >= 1);
    let mut num = vec![BigInt::zero(); d + 1];
    num[0] = BigInt::from(-1);
    num[d] = BigInt::one();
    for e in (1..d).filter(|&e| d.is_multiple_of(e)) {
        num = poly_div_exact(&num, &cyclotomic(e)).expect("Φ_e divides t^d − 1");
    }
    num
}

/// Reduced Burau matrix of the braid, (n−1)×(n−1).
pub fn burau_reduced(b: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let m = b.strands() - 1;
    let mut acc = laurent_identity(m);
    for letter in b.letters() {
        acc = laurent_matmul(&acc, &burau_generator(m, letter.index, letter.sign));
    }
    acc
}

fn laurent_identity(m: usize) -> Vec<Vec<LaurentPoly>> {
    (0..m)
        .map(|i| (0..m).map(|j| if i == j { LaurentPoly::constant(1) } else { LaurentPoly::zero() }).collect())
        .collect()
}

fn laurent_matmul(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let m = a.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| (0..m).fold(LaurentPoly::zero(), |s, k| s.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn burau_generator(m: usize, index: usize, sign: Sign) -> Vec<Vec<LaurentPoly>> {
    let mut g = laurent_identity(m);
    let r = index - 1;
    let (left, diag, right) = match sign {
        Sign::Pos => (LaurentPoly::t(), LaurentPoly::monomial(-1, 1), LaurentPoly::constant(1)),
        Sign::Neg => (LaurentPoly::constant(1), LaurentPoly::monomial(-1, -1), LaurentPoly::monomial(1, -1)),
    };
    if r > 0 {
        g[r][r - 1] = left;
    }
    g[r][r] = diag;
    if r + 1 < m {
        g[r][r + 1] = right;
    }
    g
}

/// Fraction-free (Bareiss) determinant over Z[t, t⁻¹].
fn laurent_det(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::constant(1);
    }
    let mut sign = 1i64;
    let mut prev = LaurentPoly::constant(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&s| !a[s][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(&BigInt::from(sign))
}

/// Fraction-free determinant of an integer matrix.
pub fn int_det(m: &IntMatrix) -> BigInt {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&s| !a[s][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Symmetric, Δ(1) = 1 normalization of the Alexander polynomial of a knot.
pub fn alexander_poly(b: &BraidWord) -> Result<LaurentPoly> {
    if !b.is_knot() {
        return Err(Error::NotAKnot(b.closure_components()));
    }
    let n = b.strands();
    let mut m = burau_reduced(b);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i].sub(&LaurentPoly::constant(1));
    }
    let det = laurent_det(m);
    let geometric = LaurentPoly::from_dense(0, &vec![BigInt::one(); n]);
    let delta = det.div_exact(&geometric).expect("1 + t + … + t^(n−1) divides det(β − I)");
    Ok(normalize(&delta))
}

fn normalize(p: &LaurentPoly) -> LaurentPoly {
    let (Some(lo), Some(hi)) = (p.min_degree(), p.max_degree()) else {
        return p.clone();
    };
    debug_assert!((hi - lo) % 2 == 0, "knot Alexander polynomials have even span");
    let centered = p.shift(-(lo + hi) / 2);
    if centered.eval_at_one().is_negative() {
        centered.scale(&BigInt::from(-1))
    } else {
        centered
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoxOrder {
    Finite(BigInt),
    Infinite,
}

/// |Res(Φ_d, Δ)|: determinant of multiplication by Δ on Z[t]/(Φ_d).
fn cyclotomic_norm(delta: &LaurentPoly, d: usize) -> BigInt {
    let phi = cyclotomic(d);
    let deg = phi.len() - 1;
    // reduce exponents mod d first: t^d = 1 on the roots of Φ_d
    let mut folded = vec![BigInt::zero(); d];
    for (e, c) in delta.terms() {
        folded[e.rem_euclid(d as i64) as usize] += c;
    }
    let reduce = |v: &[BigInt]| {
        let (_, r) = poly_divmod(v, &phi).expect("Φ_d is monic");
        let mut r = r;
        r.resize(deg, BigInt::zero());
        r
    };
    let base = reduce(&folded);
    let mut cols = Vec::with_capacity(deg);
    let mut x_pow = vec![BigInt::one()];
    for _ in 0..deg {
        cols.push(reduce(&poly_mul(&base, &x_pow)));
        x_pow.insert(0, BigInt::zero());
    }
    int_det(&IntMatrix::from_fn(deg, deg, |i, j| cols[j][i].clone())).abs()
}

/// |H₁| of the p-fold cyclic branched cover of the closure of a knot braid.
pub fn h1_order_fox(b: &BraidWord, p: usize) -> Result<FoxOrder> {
    if p < 2 {
        return Err(Error::InvalidDegree(p));
    }
    let delta = alexander_poly(b)?;
    let mut order = BigInt::one();
    for d in (2..=p).filter(|&d| p.is_multiple_of(d)) {
        let norm = cyclotomic_norm(&delta, d);
        if norm.is_zero() {
            return Ok(FoxOrder::Infinite);
        }
        order *= norm;
    }
    Ok(FoxOrder::Finite(order))
}
