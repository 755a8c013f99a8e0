//! Monad construction and verification.
//!
//! A monad here is a complex of trivial-twist bundles on P^(2n+1),
//!
//! ```text
//!   O(-1)^(k+1) --a--> O^(2n+2k+2) --b--> O(1)^(k+1),
//! ```
//!
//! encoded by two matrices of linear forms in the 2n+2 homogeneous
//! coordinates.  The epimorphism side is a fixed matrix `b_0` (shifted
//! identity blocks); the monomorphism side is assembled from a (k+1)-tuple of
//! degree-(2n+k) dual forms, one column per form.  Both sides may be
//! precomposed with an invertible coordinate change.  The composition
//! b(z) a(z) vanishes identically for purely combinatorial reasons, so the
//! genuinely geometric condition — that `a` has full rank at every point of
//! projective space — is delegated to the catalecticant membership test in
//! the moduli module.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::forms::{gl_action_sym, DualBinaryForm, GroupPair};
use crate::linalg::{quadratic_coefficients, LinearMatrix, Matrix};
use crate::sample::{Sampler, COORDINATE_BOUND};
use crate::{Rat, Result};

/// Index bookkeeping for the 2n+2 homogeneous coordinates z_(m,eps),
/// 0 <= m <= n, eps in {0,1}, stored with eps fastest: (m, eps) -> 2m + eps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoordinateSystem {
    n: usize,
}

impl CoordinateSystem {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("n must be at least 1"));
        }
        Ok(CoordinateSystem { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of coordinates, 2n + 2.
    pub fn dim(&self) -> usize {
        2 * self.n + 2
    }

    /// Flat index of z_(m,eps).
    pub fn index(&self, m: usize, eps: usize) -> usize {
        debug_assert!(m <= self.n && eps <= 1);
        2 * m + eps
    }
}

/// A (k+1)-dimensional subspace of degree-(2n+k) dual forms, presented by an
/// explicit basis.  This is the raw datum from which a monad is built.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceU {
    n: usize,
    k: usize,
    basis: Vec<DualBinaryForm>,
}

impl SubspaceU {
    pub fn new(n: usize, k: usize, basis: Vec<DualBinaryForm>) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(Error::InvalidParameter("n and k must be at least 1"));
        }
        if basis.len() != k + 1 {
            return Err(Error::InvalidParameter("basis must hold exactly k+1 forms"));
        }
        let degree = 2 * n + k;
        for f in &basis {
            if f.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: f.degree(),
                });
            }
        }
        let rows = Matrix::from_fn(k + 1, degree + 1, |r, c| basis[r].value(c).clone());
        if rows.rank() != k + 1 {
            return Err(Error::DependentBasis);
        }
        Ok(SubspaceU { n, k, basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Common degree of the basis forms, 2n + k.
    pub fn form_degree(&self) -> usize {
        2 * self.n + self.k
    }

    pub fn basis(&self) -> &[DualBinaryForm] {
        &self.basis
    }

    /// Basis values as rows of a (k+1) x (2n+k+1) matrix.
    pub fn value_matrix(&self) -> Matrix {
        Matrix::from_fn(self.k + 1, self.form_degree() + 1, |r, c| {
            self.basis[r].value(c).clone()
        })
    }
}

/// The balanced monomial subspace spanned by the dual basis vectors
/// e_n, ..., e_(n+k).  Every nonzero combination has a catalecticant of full
/// column rank (pick the least index j with a nonzero coefficient; rows
/// j..j+n form an anti-triangular block with that coefficient on the
/// anti-diagonal), so this subspace passes the membership test for every
/// (n, k) and serves as a deterministic fixture.
pub fn monomial_member(n: usize, k: usize) -> Result<SubspaceU> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidParameter("n and k must be at least 1"));
    }
    let degree = 2 * n + k;
    let mut basis = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mut values = vec![Rat::zero(); degree + 1];
        values[n + j] = Rat::one();
        basis.push(DualBinaryForm::new(values)?);
    }
    SubspaceU::new(n, k, basis)
}

/// The linear-algebra payload of a monad: `a` of shape (2n+2k+2) x (k+1) and
/// `b` of shape (k+1) x (2n+2k+2), both matrices of linear forms in 2n+2
/// variables, with b(z) a(z) = 0 expected identically.
#[derive(Clone, Debug, PartialEq)]
pub struct Monad {
    n: usize,
    k: usize,
    a: LinearMatrix,
    b: LinearMatrix,
}

impl Monad {
    pub fn new(n: usize, k: usize, a: LinearMatrix, b: LinearMatrix) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(Error::InvalidParameter("n and k must be at least 1"));
        }
        let mid = 2 * n + 2 * k + 2;
        let nvars = 2 * n + 2;
        if a.rows() != mid || a.cols() != k + 1 || a.nvars() != nvars {
            return Err(Error::ShapeMismatch {
                expected: (mid, k + 1),
                found: (a.rows(), a.cols()),
            });
        }
        if b.rows() != k + 1 || b.cols() != mid || b.nvars() != nvars {
            return Err(Error::ShapeMismatch {
                expected: (k + 1, mid),
                found: (b.rows(), b.cols()),
            });
        }
        Ok(Monad { n, k, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Rank of the middle term, 2n + 2k + 2.
    pub fn middle_dim(&self) -> usize {
        2 * self.n + 2 * self.k + 2
    }

    pub fn a(&self) -> &LinearMatrix {
        &self.a
    }

    pub fn b(&self) -> &LinearMatrix {
        &self.b
    }
}

fn check_frame(g: &Matrix, nvars: usize) -> Result<()> {
    if g.rows() != nvars || g.cols() != nvars {
        return Err(Error::ShapeMismatch {
            expected: (nvars, nvars),
            found: (g.rows(), g.cols()),
        });
    }
    if !g.is_invertible() {
        return Err(Error::Singular);
    }
    Ok(())
}

/// The epimorphism matrix.  In the reference frame (g = None) the entry in
/// row c, column (a, eps) is z_(a-c,eps) when 0 <= a-c <= n and zero
/// otherwise; a general frame precomposes every entry with z -> g z.
pub fn build_b(n: usize, k: usize, g: Option<&Matrix>) -> Result<LinearMatrix> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidParameter("n and k must be at least 1"));
    }
    let nvars = 2 * n + 2;
    let mid = 2 * n + 2 * k + 2;
    let mut comps = vec![Matrix::zero(k + 1, mid); nvars];
    for c in 0..=k {
        for a in c..=(n + k) {
            let m = a - c;
            if m > n {
                continue;
            }
            for eps in 0..2 {
                comps[2 * m + eps].set(c, 2 * a + eps, Rat::one());
            }
        }
    }
    let b0 = LinearMatrix::new(comps)?;
    match g {
        None => Ok(b0),
        Some(g) => {
            check_frame(g, nvars)?;
            b0.substitute(g)
        }
    }
}

/// One column of the monomorphism, determined by a single dual form f of
/// degree 2n+k: the entry in row (a, eps) is
/// sign(eps) * sum_m f_(a+m) z_(m,1-eps), with sign(0) = +1 and
/// sign(1) = -1.
pub fn section_column(n: usize, k: usize, f: &DualBinaryForm) -> Result<LinearMatrix> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidParameter("n and k must be at least 1"));
    }
    let degree = 2 * n + k;
    if f.degree() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: f.degree(),
        });
    }
    let nvars = 2 * n + 2;
    let mid = 2 * n + 2 * k + 2;
    let mut comps = vec![Matrix::zero(mid, 1); nvars];
    for a in 0..=(n + k) {
        for eps in 0..2usize {
            for m in 0..=n {
                let v = f.value(a + m);
                if v.is_zero() {
                    continue;
                }
                let signed = if eps == 0 { v.clone() } else { -v.clone() };
                comps[2 * m + (1 - eps)].set(2 * a + eps, 0, signed);
            }
        }
    }
    LinearMatrix::new(comps)
}

/// The monomorphism matrix: one section column per basis form of `u`, in
/// basis order, precomposed with z -> g z when a frame is given.
pub fn build_a(u: &SubspaceU, g: Option<&Matrix>) -> Result<LinearMatrix> {
    let nvars = 2 * u.n() + 2;
    let mid = 2 * u.n() + 2 * u.k() + 2;
    let mut comps = vec![Matrix::zero(mid, u.k() + 1); nvars];
    for (j, f) in u.basis().iter().enumerate() {
        let col = section_column(u.n(), u.k(), f)?;
        for c in 0..nvars {
            for r in 0..mid {
                let v = col.component(c).at(r, 0);
                if !v.is_zero() {
                    comps[c].set(r, j, v.clone());
                }
            }
        }
    }
    let a0 = LinearMatrix::new(comps)?;
    match g {
        None => Ok(a0),
        Some(g) => {
            check_frame(g, nvars)?;
            a0.substitute(g)
        }
    }
}

/// Assembles both sides in a common frame.
pub fn build_monad(u: &SubspaceU, g: Option<&Matrix>) -> Result<Monad> {
    let a = build_a(u, g)?;
    let b = build_b(u.n(), u.k(), g)?;
    Monad::new(u.n(), u.k(), a, b)
}

/// Outcome of the monad checks: exact vanishing of the composition, and
/// full-rank spot checks of both maps at seeded sample points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// b(z) a(z) = 0 as an identity of quadratic coefficient matrices.
    pub composition_zero: bool,
    /// b(z) had full row rank k+1 at every sampled point.
    pub p_surjective: bool,
    /// a(z) had full column rank k+1 at every sampled point.
    pub i_injective: bool,
    /// Number of sample points used for the two rank checks.
    pub samples: usize,
}

impl VerificationReport {
    pub fn is_monad(&self) -> bool {
        self.composition_zero && self.p_surjective && self.i_injective
    }
}

/// Checks the composition exactly and evaluates both maps at `samples`
/// seeded nonzero rational points.  The point checks are necessary but not
/// sufficient for the subbundle condition — a finite sample can miss the bad
/// locus; the exact criterion is the membership test in the moduli module.
pub fn verify_monad(m: &Monad, samples: usize, seed: u64) -> Result<VerificationReport> {
    if samples < 1 {
        return Err(Error::InvalidParameter("samples must be at least 1"));
    }
    let composition_zero = quadratic_coefficients(m.b(), m.a())?
        .iter()
        .all(|(_, coeff)| coeff.is_zero());
    let mut sampler = Sampler::new(seed);
    let mut p_surjective = true;
    let mut i_injective = true;
    let full = m.k() + 1;
    for _ in 0..samples {
        let z = sampler.point(2 * m.n() + 2, COORDINATE_BOUND);
        if m.b().evaluate(&z)?.rank() != full {
            p_surjective = false;
        }
        if m.a().evaluate(&z)?.rank() != full {
            i_injective = false;
        }
    }
    Ok(VerificationReport {
        composition_zero,
        p_surjective,
        i_injective,
        samples,
    })
}

fn require_same_shape(m1: &Monad, m2: &Monad) -> Result<()> {
    if m1.n() != m2.n() || m1.k() != m2.k() {
        return Err(Error::ShapeMismatch {
            expected: (m1.n(), m1.k()),
            found: (m2.n(), m2.k()),
        });
    }
    Ok(())
}

/// Dimension of the space of morphisms m1 -> m2: triples
/// (m_minus, m_zero, m_plus) of constant matrices with
/// m_zero a1(z) = a2(z) m_minus and b2(z) m_zero = m_plus b1(z) identically
/// in z.  Computed as the nullity of one exact linear system in the stacked
/// unknowns [vec m_minus; vec m_zero; vec m_plus] (row-major).  A monad built
/// from a membership-passing subspace is simple: the dimension is 1.
pub fn hom_space_dim(m1: &Monad, m2: &Monad) -> Result<usize> {
    require_same_shape(m1, m2)?;
    let kk = m1.k() + 1;
    let mid = m1.middle_dim();
    let nvars = 2 * m1.n() + 2;
    let end = kk * kk;
    let off_zero = end;
    let off_plus = end + mid * mid;
    let unknowns = 2 * end + mid * mid;
    let nrows = nvars * 2 * mid * kk;
    let mut entries = Vec::with_capacity(nrows * unknowns);
    for c in 0..nvars {
        // coefficient of z_c in m_zero a1 - a2 m_minus, entry (i, j)
        let a1c = m1.a().component(c);
        let a2c = m2.a().component(c);
        for i in 0..mid {
            for j in 0..kk {
                let mut row = vec![Rat::zero(); unknowns];
                for l in 0..mid {
                    row[off_zero + i * mid + l] = a1c.at(l, j).clone();
                }
                for l in 0..kk {
                    row[l * kk + j] = -a2c.at(i, l).clone();
                }
                entries.extend(row);
            }
        }
        // coefficient of z_c in b2 m_zero - m_plus b1, entry (i, j)
        let b1c = m1.b().component(c);
        let b2c = m2.b().component(c);
        for i in 0..kk {
            for j in 0..mid {
                let mut row = vec![Rat::zero(); unknowns];
                for l in 0..mid {
                    row[off_zero + l * mid + j] = b2c.at(i, l).clone();
                }
                for l in 0..kk {
                    row[off_plus + i * kk + l] = -b1c.at(l, j).clone();
                }
                entries.extend(row);
            }
        }
    }
    let system = Matrix::new(nrows, unknowns, entries)?;
    Ok(unknowns - system.rank())
}

/// Exact check that the triple intertwines the two monads:
/// m_zero a1 = a2 m_minus and b2 m_zero = m_plus b1, componentwise in z.
pub fn is_monad_morphism(
    m1: &Monad,
    m2: &Monad,
    m_minus: &Matrix,
    m_zero: &Matrix,
    m_plus: &Matrix,
) -> Result<bool> {
    require_same_shape(m1, m2)?;
    let kk = m1.k() + 1;
    let mid = m1.middle_dim();
    for (m, shape) in [
        (m_minus, (kk, kk)),
        (m_zero, (mid, mid)),
        (m_plus, (kk, kk)),
    ] {
        if (m.rows(), m.cols()) != shape {
            return Err(Error::ShapeMismatch {
                expected: shape,
                found: (m.rows(), m.cols()),
            });
        }
    }
    for c in 0..(2 * m1.n() + 2) {
        let lhs = m_zero.mul(m1.a().component(c))?;
        let rhs = m2.a().component(c).mul(m_minus)?;
        if lhs != rhs {
            return Ok(false);
        }
        let lhs = m2.b().component(c).mul(m_zero)?;
        let rhs = m_plus.mul(m1.b().component(c))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The intertwiners realizing the group action on monads.  For a pair
/// g = (alpha, beta) the triple maps the monad built from the transported
/// subspace (every basis form precomposed by S^(2n+k) alpha) in frame g0 to
/// the monad built from the original subspace in frame pi_n(g) g0:
///
/// ```text
///   m_minus = det(beta)^(-1) id,
///   m_zero  = (S^(n+k) alpha  (x)  beta)^(-T),
///   m_plus  = (S^k alpha)^(-T).
/// ```
pub fn transport_intertwiners(g: &GroupPair, n: usize, k: usize) -> Result<(Matrix, Matrix, Matrix)> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidParameter("n and k must be at least 1"));
    }
    let det_beta = g.beta().det()?;
    let m_minus = Matrix::identity(k + 1).scale(&(Rat::one() / det_beta));
    let m_zero = gl_action_sym(g.alpha(), n + k)?
        .kronecker(g.beta())
        .inverse()?
        .transpose();
    let m_plus = gl_action_sym(g.alpha(), k)?.inverse()?.transpose();
    Ok((m_minus, m_zero, m_plus))
}

/// A basis for the space of column vectors s of linear forms with
/// b(z) s(z) = 0.  Each basis element is stored as its coefficient matrix:
/// row l holds the 2n+2 coefficients of the linear form s_l.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionSpace {
    n: usize,
    k: usize,
    basis: Vec<Matrix>,
}

impl SectionSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Exact test whether a candidate coefficient matrix lies in the span.
    pub fn contains(&self, s: &Matrix) -> Result<bool> {
        let mid = 2 * self.n + 2 * self.k + 2;
        let nvars = 2 * self.n + 2;
        if s.rows() != mid || s.cols() != nvars {
            return Err(Error::ShapeMismatch {
                expected: (mid, nvars),
                found: (s.rows(), s.cols()),
            });
        }
        let flat = |m: &Matrix| -> Vec<Rat> {
            (0..m.rows()).flat_map(|r| m.row_vec(r)).collect()
        };
        let mut entries: Vec<Rat> = Vec::new();
        for b in &self.basis {
            entries.extend(flat(b));
        }
        let span = Matrix::new(self.basis.len(), mid * nvars, entries.clone())?;
        entries.extend(flat(s));
        let extended = Matrix::new(self.basis.len() + 1, mid * nvars, entries)?;
        Ok(extended.rank() == span.rank())
    }
}

/// Solves b(z) s(z) = 0 for columns of linear forms.  For a genuine monad
/// the solutions are the degree-one global sections of the kernel bundle and
/// the dimension is 2n + k + 1.
pub fn kernel_sections(m: &Monad) -> Result<SectionSpace> {
    let mid = m.middle_dim();
    let nvars = 2 * m.n() + 2;
    let kk = m.k() + 1;
    let unknowns = mid * nvars; // s[l][c] at slot l * nvars + c
    let nrows = kk * nvars * (nvars + 1) / 2;
    let mut entries = Vec::with_capacity(nrows * unknowns);
    for r in 0..kk {
        for c1 in 0..nvars {
            for c2 in c1..nvars {
                // coefficient of z_c1 z_c2 in row r of b(z) s(z)
                let mut row = vec![Rat::zero(); unknowns];
                for l in 0..mid {
                    let v1 = m.b().component(c1).at(r, l);
                    if !v1.is_zero() {
                        row[l * nvars + c2] = v1.clone();
                    }
                    if c1 != c2 {
                        let v2 = m.b().component(c2).at(r, l);
                        if !v2.is_zero() {
                            row[l * nvars + c1] =
                                row[l * nvars + c1].clone() + v2.clone();
                        }
                    }
                }
                entries.extend(row);
            }
        }
    }
    let system = Matrix::new(nrows, unknowns, entries)?;
    let kernel = system.kernel_basis();
    let mut basis = Vec::with_capacity(kernel.cols());
    for j in 0..kernel.cols() {
        basis.push(Matrix::from_fn(mid, nvars, |l, c| {
            kernel.at(l * nvars + c, j).clone()
        }));
    }
    Ok(SectionSpace {
        n: m.n(),
        k: m.k(),
        basis,
    })
}

fn binom_big(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

fn binomial_power(sign: i64, e: usize, len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    let mut s = BigInt::one();
    for (j, slot) in out.iter_mut().enumerate().take(e.min(len - 1) + 1) {
        *slot = binom_big(e, j) * &s;
        s *= BigInt::from(sign);
    }
    out
}

fn mul_trunc(p: &[BigInt], q: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, pi) in p.iter().enumerate() {
        if pi.is_zero() {
            continue;
        }
        for (j, qj) in q.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += pi * qj;
        }
    }
    out
}

/// Chern-class bookkeeping for the kernel bundle: the reciprocal of
/// (1-t)^(k+1) (1+t)^(k+1) modulo t^(2n+2) must equal
/// sum_j binom(k+j, j) t^(2j).  Returns the computed coefficients (constant
/// term first) together with the comparison flag.
pub fn chern_check(n: usize, k: usize) -> Result<(Vec<BigInt>, bool)> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidParameter("n and k must be at least 1"));
    }
    let len = 2 * n + 2;
    let ends = mul_trunc(
        &binomial_power(-1, k + 1, len),
        &binomial_power(1, k + 1, len),
        len,
    );
    debug_assert!(ends[0].is_one());
    let mut series = vec![BigInt::zero(); len];
    series[0] = BigInt::one();
    for d in 1..len {
        let mut acc = BigInt::zero();
        for i in 1..=d {
            if !ends[i].is_zero() {
                acc += &ends[i] * &series[d - i];
            }
        }
        series[d] = -acc;
    }
    let mut ok = true;
    for (d, coeff) in series.iter().enumerate() {
        let expected = if d % 2 == 0 {
            binom_big(k + d / 2, d / 2)
        } else {
            BigInt::zero()
        };
        if *coeff != expected {
            ok = false;
        }
    }
    Ok((series, ok))
}
