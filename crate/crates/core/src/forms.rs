//! Binary forms on V = <x, y>, their duals, and the small amount of
//! representation theory the monads need.
//!
//! Conventions, fixed once and used everywhere:
//! - S^d V has the plain monomial basis x^(d-i) y^i, i = 0..d; a `BinaryForm`
//!   stores the coefficient of x^(d-i) y^i at index i.
//! - Dual spaces use the plain dual basis with no binomial weights; a
//!   `DualBinaryForm` of degree d stores values[j] = f(x^(d-j) y^j).
//! - The multiplication map mu_r: S^r V (x) S^n V -> S^(n+r) V is the honest
//!   0/1 monomial multiplication table.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::Matrix;
use crate::{Rat, Result};

/// Homogeneous binary form of fixed degree; coeffs[i] multiplies x^(d-i) y^i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("a form needs at least one coefficient"));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![Rat::zero(); degree + 1] }
    }

    /// x^(d-i) y^i.
    pub fn monomial(degree: usize, i: usize) -> Result<Self> {
        if i > degree {
            return Err(Error::InvalidParameter("monomial index exceeds degree"));
        }
        let mut f = BinaryForm::zero(degree);
        f.coeffs[i] = Rat::one();
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        Ok(BinaryForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BinaryForm {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, s: &Rat) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Polynomial product; degrees add.
    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut coeffs = vec![Rat::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        BinaryForm { coeffs }
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let d = self.degree();
        let mut xp = vec![Rat::one(); d + 1];
        let mut yp = vec![Rat::one(); d + 1];
        for i in 1..=d {
            xp[i] = &xp[i - 1] * x;
            yp[i] = &yp[i - 1] * y;
        }
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &xp[d - i] * &yp[i];
            }
        }
        acc
    }

    /// Multiplicity of y as a factor: index of the first nonzero coefficient.
    /// Zero form reports 0.
    pub fn y_order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Scale so the lexicographically largest nonzero coefficient (smallest
    /// index, i.e. highest x power) becomes 1. Zero form stays zero.
    pub fn normalize_leading(&self) -> BinaryForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let inv = Rat::one() / lead.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Exact division: Some(q) with self = divisor * q, or None when the
    /// division leaves a remainder (or the divisor is zero).
    pub fn try_div(&self, divisor: &BinaryForm) -> Option<BinaryForm> {
        if divisor.is_zero() {
            return None;
        }
        if self.degree() < divisor.degree() {
            return if self.is_zero() { Some(BinaryForm::zero(0)) } else { None };
        }
        let quot_degree = self.degree() - divisor.degree();
        if self.is_zero() {
            return Some(BinaryForm::zero(quot_degree));
        }
        let (es, ps) = dehomogenize(self);
        let (ed, pd) = dehomogenize(divisor);
        if es < ed {
            return None;
        }
        let (q, r) = poly_divmod(&ps, &pd);
        if !r.is_empty() {
            return None;
        }
        Some(homogenize(&q, es - ed, quot_degree))
    }
}

/// Element of the dual of S^d V in the plain dual basis:
/// values[j] = f(x^(d-j) y^j).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualBinaryForm {
    values: Vec<Rat>,
}

impl DualBinaryForm {
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("a dual form needs at least one value"));
        }
        Ok(DualBinaryForm { values })
    }

    pub fn zero(degree: usize) -> Self {
        DualBinaryForm { values: vec![Rat::zero(); degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, j: usize) -> &Rat {
        &self.values[j]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, s: &Rat) -> DualBinaryForm {
        DualBinaryForm { values: self.values.iter().map(|v| v * s).collect() }
    }

    pub fn add(&self, other: &DualBinaryForm) -> Result<DualBinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.values.len(),
                found: other.values.len(),
            });
        }
        Ok(DualBinaryForm {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    /// Apply f to a form of matching degree: sum of coeff * value.
    pub fn apply(&self, form: &BinaryForm) -> Result<Rat> {
        if form.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.values.len(),
                found: form.degree() + 1,
            });
        }
        let mut acc = Rat::zero();
        for (c, v) in form.coeffs().iter().zip(&self.values) {
            if !c.is_zero() && !v.is_zero() {
                acc += c * v;
            }
        }
        Ok(acc)
    }

    /// Precomposition with the symmetric power of alpha:
    /// (f o S^d alpha)(m) = f(S^d alpha (m)), i.e.
    /// values' = gl_action_sym(alpha, d)^T * values.
    pub fn precompose_sym(&self, alpha: &Matrix) -> Result<DualBinaryForm> {
        let m = gl_action_sym(alpha, self.degree())?;
        let mt = m.transpose();
        let d = self.degree();
        let mut values = vec![Rat::zero(); d + 1];
        for (j, out) in values.iter_mut().enumerate() {
            for i in 0..=d {
                let w = mt.at(j, i);
                if !w.is_zero() {
                    *out += w * &self.values[i];
                }
            }
        }
        Ok(DualBinaryForm { values })
    }
}

/// A pair (alpha, beta) of invertible 2x2 matrices acting on V and W.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPair {
    alpha: Matrix,
    beta: Matrix,
}

impl GroupPair {
    pub fn new(alpha: Matrix, beta: Matrix) -> Result<Self> {
        for m in [&alpha, &beta] {
            if m.rows() != 2 || m.cols() != 2 {
                return Err(Error::ShapeMismatch { expected: (2, 2), found: (m.rows(), m.cols()) });
            }
            if !m.is_invertible() {
                return Err(Error::Singular);
            }
        }
        Ok(GroupPair { alpha, beta })
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }
}

/// The central one-parameter subgroup iota_n(lambda) = (lambda I, lambda^-n I);
/// pi_n of it is the identity.
pub fn iota_n(lambda: &Rat, n: usize) -> Result<GroupPair> {
    if lambda.is_zero() {
        return Err(Error::Singular);
    }
    let inv = Rat::one() / lambda.clone();
    let mut w = Rat::one();
    for _ in 0..n {
        w = &w * &inv;
    }
    GroupPair::new(Matrix::identity(2).scale(lambda), Matrix::identity(2).scale(&w))
}

/// Matrix of mu_r: S^r V (x) S^n V -> S^(n+r) V in monomial bases. Rows are
/// indexed by x^(n+r-s) y^s; the column for the basis tensor (i, m) sits at
/// index i*(n+1) + m and has its single 1 in row i+m.
pub fn sym_mult_matrix(r: usize, n: usize) -> Matrix {
    let mut m = Matrix::zero(n + r + 1, (r + 1) * (n + 1));
    for i in 0..=r {
        for j in 0..=n {
            m.set(i + j, i * (n + 1) + j, Rat::one());
        }
    }
    m
}

/// Catalecticant (Hankel) matrix of f in the dual of S^(2n+k) V: the matrix of
/// mu*_(n+k)(f): S^n V -> dual of S^(n+k) V, H[a][m] = values[a+m], with
/// n+k+1 rows and n+1 columns.
pub fn catalecticant(f: &DualBinaryForm, n: usize, k: usize) -> Result<Matrix> {
    let expected = 2 * n + k + 1;
    if f.values().len() != expected {
        return Err(Error::DegreeMismatch { expected, found: f.values().len() });
    }
    Ok(Matrix::from_fn(n + k + 1, n + 1, |a, m| f.value(a + m).clone()))
}

/// Matrix of S^d alpha on the monomial basis: column i is the coefficient
/// vector of (alpha x)^(d-i) (alpha y)^i. Multiplicative in alpha, and
/// det(S^d alpha) = det(alpha)^(d(d+1)/2).
pub fn gl_action_sym(alpha: &Matrix, d: usize) -> Result<Matrix> {
    if alpha.rows() != 2 || alpha.cols() != 2 {
        return Err(Error::ShapeMismatch { expected: (2, 2), found: (alpha.rows(), alpha.cols()) });
    }
    let ax = BinaryForm::new(vec![alpha.at(0, 0).clone(), alpha.at(1, 0).clone()])?;
    let ay = BinaryForm::new(vec![alpha.at(0, 1).clone(), alpha.at(1, 1).clone()])?;
    let mut out = Matrix::zero(d + 1, d + 1);
    for i in 0..=d {
        let mut prod = BinaryForm::new(vec![Rat::one()])?;
        for _ in 0..(d - i) {
            prod = prod.mul(&ax);
        }
        for _ in 0..i {
            prod = prod.mul(&ay);
        }
        debug_assert_eq!(prod.degree(), d);
        for j in 0..=d {
            out.set(j, i, prod.coeff(j).clone());
        }
    }
    Ok(out)
}

/// pi_n(alpha, beta) = S^n alpha (x) beta on S^n V (x) W, in the coordinate
/// order (m, eps) -> 2m + eps. The kernel of pi_n is exactly iota_n.
pub fn pi_n(g: &GroupPair, n: usize) -> Matrix {
    let sym = gl_action_sym(g.alpha(), n).expect("validated 2x2");
    sym.kronecker(g.beta())
}

/// The V(n) representation of GL(V) on V itself: det(alpha)^(n/2) * I for even
/// n, det(alpha)^((n-1)/2) * alpha for odd n. Central weight is n either way.
pub fn vn_rep(alpha: &Matrix, n: usize) -> Result<Matrix> {
    if alpha.rows() != 2 || alpha.cols() != 2 {
        return Err(Error::ShapeMismatch { expected: (2, 2), found: (alpha.rows(), alpha.cols()) });
    }
    let det = alpha.det()?;
    let half = n / 2;
    let mut w = Rat::one();
    for _ in 0..half {
        w = &w * &det;
    }
    if n.is_multiple_of(2) {
        Ok(Matrix::identity(2).scale(&w))
    } else {
        Ok(alpha.scale(&w))
    }
}

/// Gcd of two binary forms, normalized so the lexicographically largest
/// nonzero coefficient is 1. A common factor of y shows up as vanishing
/// leading coefficients and is tracked separately from the dehomogenized
/// Euclidean step, so the result is also correct at the point at infinity.
pub fn binary_gcd(p: &BinaryForm, q: &BinaryForm) -> Result<BinaryForm> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::BothZero),
        (true, false) => return Ok(q.normalize_leading()),
        (false, true) => return Ok(p.normalize_leading()),
        _ => {}
    }
    let (ep, pp) = dehomogenize(p);
    let (eq, pq) = dehomogenize(q);
    let g = poly_gcd(&pp, &pq);
    let e = ep.min(eq);
    let out = homogenize(&g, e, g.len() - 1 + e);
    Ok(out.normalize_leading())
}

/// Rational projective roots of a nonzero binary form, as (lambda, mu) pairs:
/// (1, 0) when mu divides the form, then each finite rational root (r, 1) in
/// increasing order. Root candidates come from the rational root theorem with
/// divisor enumeration by trial division (capped, so astronomically large
/// coefficients may hide a root; every returned pair is verified exactly).
pub fn rational_roots(form: &BinaryForm) -> Vec<(Rat, Rat)> {
    let mut out = Vec::new();
    if form.is_zero() {
        return out;
    }
    if form.y_order() >= 1 {
        out.push((Rat::one(), Rat::zero()));
    }
    let (_, poly) = dehomogenize(form);
    // strip roots at lambda = 0
    let low = poly.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let stripped: Vec<Rat> = poly[low..].to_vec();
    let mut finite: Vec<Rat> = Vec::new();
    if low > 0 {
        finite.push(Rat::zero());
    }
    if stripped.len() > 1 {
        // clear denominators to a primitive integer polynomial
        let mut lcm = BigInt::one();
        for c in &stripped {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = stripped.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let a0 = ints.first().unwrap().abs();
        let alead = ints.last().unwrap().abs();
        for p in bounded_divisors(&a0) {
            for q in bounded_divisors(&alead) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                    if eval_poly(&stripped, &cand).is_zero() && !finite.contains(&cand) {
                        finite.push(cand);
                    }
                }
            }
        }
    }
    finite.sort();
    out.extend(finite.into_iter().map(|r| (r, Rat::one())));
    out
}

/// Divisors of |v| found by trial division up to a fixed cap. Complete for
/// |v| <= 10^12; best effort above that.
fn bounded_divisors(v: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    if v.is_zero() {
        return out;
    }
    let cap = BigInt::from(1_000_000u64);
    let mut d = BigInt::one();
    while &d * &d <= *v && d <= cap {
        if (v % &d).is_zero() {
            out.push(d.clone());
            out.push(v / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

fn eval_poly(poly: &[Rat], at: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in poly.iter().rev() {
        acc = acc * at + c;
    }
    acc
}

/// Split a nonzero form into (y-order, dehomogenized polynomial in x).
/// poly[j] is the coefficient of x^j; the vector is trimmed so the leading
/// entry is nonzero. form = y^order * homogenization(poly).
fn dehomogenize(form: &BinaryForm) -> (usize, Vec<Rat>) {
    let d = form.degree();
    let mut poly: Vec<Rat> = (0..=d).map(|j| form.coeff(d - j).clone()).collect();
    while poly.len() > 1 && poly.last().is_some_and(Rat::is_zero) {
        poly.pop();
    }
    if poly.len() == 1 && poly[0].is_zero() {
        return (0, Vec::new());
    }
    (d - (poly.len() - 1), poly)
}

/// Homogenize poly (coefficient of x^j at index j) to total degree `degree`,
/// multiplying by y^extra, so the result is y^extra * x^j y^(deg-extra-j) terms.
fn homogenize(poly: &[Rat], extra: usize, degree: usize) -> BinaryForm {
    let mut f = BinaryForm::zero(degree);
    let pdeg = poly.len() - 1;
    debug_assert!(pdeg + extra <= degree);
    for (j, c) in poly.iter().enumerate() {
        // monomial x^j y^(degree-j): coefficient index i = degree - j
        f.coeffs[degree - j] = c.clone();
    }
    f
}

/// Euclidean remainder sequence over Q; result is monic in its leading
/// coefficient. Inputs/outputs use the trimmed coefficient-of-x^j encoding;
/// the empty vector is the zero polynomial.
fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let (_, r) = poly_divmod(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        let inv = Rat::one() / lead;
        for c in &mut a {
            *c *= inv.clone();
        }
    }
    a
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!den.is_empty(), "division by zero polynomial");
    if num.len() < den.len() {
        return (Vec::new(), num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut quot = vec![Rat::zero(); num.len() - den.len() + 1];
    let lead = den.last().unwrap();
    for shift in (0..quot.len()).rev() {
        let top = rem[shift + den.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let factor = top / lead.clone();
        for (i, d) in den.iter().enumerate() {
            let delta = d * &factor;
            rem[shift + i] -= delta;
        }
        quot[shift] = factor;
    }
    while rem.last().is_some_and(Rat::is_zero) {
        rem.pop();
    }
    (quot, rem)
}
