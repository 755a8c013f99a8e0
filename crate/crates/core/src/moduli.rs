//! Moduli-space membership, the group action on subspaces, dimension and
//! stabilizer bookkeeping, and the trace invariants.
//!
//! The membership criterion is the heart of the matter: a subspace U of
//! degree-(2n+k) dual forms belongs to the moduli space iff every nonzero
//! element of U has a catalecticant of full column rank.  For k = 1 this is
//! decided exactly — the maximal minors of the catalecticant pencil are
//! binary forms in the pencil parameters, and their gcd is constant iff no
//! complex pencil member drops rank.  For k >= 2 no finite exact criterion
//! is implemented; the verdict is probabilistic with exact refutations.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::forms::{binary_gcd, catalecticant, rational_roots, BinaryForm, DualBinaryForm, GroupPair};
use crate::linalg::{combinations, maximal_minors, Matrix, Pencil};
use crate::monad::SubspaceU;
use crate::sample::Sampler;
use crate::{rat, Rat, Result};

/// The discrete invariants (n, k) of a moduli problem: bundles of quantum
/// number k+1 on projective (2n+1)-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuliContext {
    n: usize,
    k: usize,
}

impl ModuliContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(Error::InvalidParameter("n and k must be at least 1"));
        }
        Ok(ModuliContext { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Degree 2n+k of the dual forms spanning a subspace.
    pub fn form_degree(&self) -> usize {
        2 * self.n + self.k
    }
}

/// How a Member verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipMode {
    /// Pencil-gcd certificate; no complex element of U drops rank.
    Exact,
    /// Finitely many random elements and pencil slices passed.
    Probabilistic,
}

/// Verdict of the membership test.  A NotMember either exhibits a rational
/// witness — a nonzero element of U with rank-deficient catalecticant — or,
/// when the offending pencil parameter is irrational, the nonconstant gcd of
/// the pencil minors as a certificate.
#[derive(Clone, Debug, PartialEq)]
pub enum MembershipVerdict {
    Member {
        mode: MembershipMode,
        trials: usize,
    },
    NotMember {
        witness: Option<DualBinaryForm>,
        certificate: Option<BinaryForm>,
    },
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipVerdict::Member { .. })
    }
}

/// Combination sum_j coeffs[j] * basis[j] of the basis forms of u.
fn combine(u: &SubspaceU, coeffs: &[Rat]) -> Result<DualBinaryForm> {
    let mut acc = DualBinaryForm::zero(u.form_degree());
    for (c, f) in coeffs.iter().zip(u.basis()) {
        if !c.is_zero() {
            acc = acc.add(&f.scale(c))?;
        }
    }
    Ok(acc)
}

/// Exact pencil test on the span of two independent forms of degree 2n+k.
/// Returns Ok(None) when every complex combination has full catalecticant
/// rank, and Ok(Some(verdict)) with a NotMember otherwise.
fn pencil_test(
    n: usize,
    k: usize,
    f: &DualBinaryForm,
    g: &DualBinaryForm,
) -> Result<Option<MembershipVerdict>> {
    let hf = catalecticant(f, n, k)?;
    let hg = catalecticant(g, n, k)?;
    let minors = maximal_minors(&Pencil::new(hf, hg)?)?;
    let mut gcd: Option<BinaryForm> = None;
    for m in &minors {
        if m.is_zero() {
            continue;
        }
        gcd = Some(match gcd {
            None => m.normalize_leading(),
            Some(d) => binary_gcd(&d, m)?,
        });
        if let Some(d) = &gcd {
            if d.degree() == 0 {
                return Ok(None);
            }
        }
    }
    let gcd = match gcd {
        // every minor vanishes identically: already f itself drops rank
        None => {
            return Ok(Some(MembershipVerdict::NotMember {
                witness: Some(f.clone()),
                certificate: None,
            }));
        }
        Some(d) => d,
    };
    let roots = rational_roots(&gcd);
    if let Some((lambda, mu)) = roots.first() {
        let witness = f.scale(lambda).add(&g.scale(mu))?;
        debug_assert!(catalecticant(&witness, n, k)?.rank() < n + 1);
        Ok(Some(MembershipVerdict::NotMember {
            witness: Some(witness),
            certificate: Some(gcd),
        }))
    } else {
        // a complex root exists, but no rational one: certificate only
        Ok(Some(MembershipVerdict::NotMember {
            witness: None,
            certificate: Some(gcd),
        }))
    }
}

/// Decides whether u belongs to the moduli space.  k = 1 runs the exact
/// pencil test on the basis.  k >= 2 checks `trials` random elements for
/// full catalecticant rank and additionally runs the exact pencil test on
/// `trials` random two-dimensional slices; refutations are exact, a pass is
/// reported as probabilistic with the trial count.
pub fn membership(u: &SubspaceU, trials: usize, seed: u64) -> Result<MembershipVerdict> {
    if trials < 1 {
        return Err(Error::InvalidParameter("trials must be at least 1"));
    }
    if u.k() == 1 {
        return match pencil_test(u.n(), u.k(), &u.basis()[0], &u.basis()[1])? {
            Some(verdict) => Ok(verdict),
            None => Ok(MembershipVerdict::Member {
                mode: MembershipMode::Exact,
                trials: 0,
            }),
        };
    }
    let mut sampler = Sampler::new(seed);
    let dim = u.k() + 1;
    for _ in 0..trials {
        let coeffs = sampler.point(dim, 9);
        let f = combine(u, &coeffs)?;
        if catalecticant(&f, u.n(), u.k())?.rank() < u.n() + 1 {
            return Ok(MembershipVerdict::NotMember {
                witness: Some(f),
                certificate: None,
            });
        }
    }
    for _ in 0..trials {
        // a random two-dimensional slice, redrawn until independent
        let (f, g) = loop {
            let cf = sampler.point(dim, 9);
            let cg = sampler.point(dim, 9);
            let mut stacked = Vec::with_capacity(2 * dim);
            stacked.extend(cf.iter().cloned());
            stacked.extend(cg.iter().cloned());
            let m = Matrix::new(2, dim, stacked)?;
            if m.rank() == 2 {
                break (combine(u, &cf)?, combine(u, &cg)?);
            }
        };
        if let Some(verdict) = pencil_test(u.n(), u.k(), &f, &g)? {
            return Ok(verdict);
        }
    }
    Ok(MembershipVerdict::Member {
        mode: MembershipMode::Probabilistic,
        trials,
    })
}

/// Dimension of the moduli space together with its fibration summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionBreakdown {
    /// Grassmannian fiber dimension, 2n(k+1).
    pub fiber: usize,
    /// Base dimension, (2n+2)^2 - 7.
    pub base: usize,
    /// Total, fiber + base.
    pub total: usize,
}

/// 2n(k+1) + (2n+2)^2 - 7, split into the Grassmannian fiber over the base.
pub fn moduli_dimension(ctx: &ModuliContext) -> DimensionBreakdown {
    let fiber = 2 * ctx.n() * (ctx.k() + 1);
    let side = 2 * ctx.n() + 2;
    let base = side * side - 7;
    DimensionBreakdown {
        fiber,
        base,
        total: fiber + base,
    }
}

/// Transports a subspace along a group pair by precomposing every basis form
/// with the symmetric-power action of alpha.  The beta and determinant
/// factors act by scalars and base change on the span and are dropped; no
/// rank condition can see them.
pub fn g_n_transport(g: &GroupPair, u: &SubspaceU) -> Result<SubspaceU> {
    let transported = u
        .basis()
        .iter()
        .map(|f| f.precompose_sym(g.alpha()))
        .collect::<Result<Vec<_>>>()?;
    SubspaceU::new(u.n(), u.k(), transported)
}

/// A point of the Grassmannian of planes in S^nV + S^nV: two independent
/// vectors, each a pair of degree-n forms.
#[derive(Clone, Debug, PartialEq)]
pub struct GrassPoint2 {
    n: usize,
    u1: (BinaryForm, BinaryForm),
    u2: (BinaryForm, BinaryForm),
}

impl GrassPoint2 {
    pub fn new(n: usize, u1: (BinaryForm, BinaryForm), u2: (BinaryForm, BinaryForm)) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("n must be at least 1"));
        }
        for f in [&u1.0, &u1.1, &u2.0, &u2.1] {
            if f.degree() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: f.degree(),
                });
            }
        }
        let point = GrassPoint2 { n, u1, u2 };
        let rows = Matrix::new(
            2,
            2 * (n + 1),
            [point.vector(0), point.vector(1)].concat(),
        )?;
        if rows.rank() != 2 {
            return Err(Error::DependentBasis);
        }
        Ok(point)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coordinates of the i-th spanning vector in S^nV + S^nV.
    fn vector(&self, i: usize) -> Vec<Rat> {
        let (p, q) = if i == 0 { &self.u1 } else { &self.u2 };
        let mut out = Vec::with_capacity(2 * (self.n + 1));
        out.extend(p.coeffs().iter().cloned());
        out.extend(q.coeffs().iter().cloned());
        out
    }
}

/// Derivation (infinitesimal) action of a 2x2 matrix xi on S^nV in the
/// monomial basis: the derivative at the identity of the symmetric-power
/// action along exp(t xi).
pub fn derivation_sym(xi: &Matrix, n: usize) -> Result<Matrix> {
    if xi.rows() != 2 || xi.cols() != 2 {
        return Err(Error::ShapeMismatch {
            expected: (2, 2),
            found: (xi.rows(), xi.cols()),
        });
    }
    let (a, b) = (xi.at(0, 0), xi.at(0, 1));
    let (c, d) = (xi.at(1, 0), xi.at(1, 1));
    let mut out = Matrix::zero(n + 1, n + 1);
    for i in 0..=n {
        // xi . x^(n-i) y^i = (n-i) x^(n-i-1) (a x + c y) y^i
        //                  + i x^(n-i) y^(i-1) (b x + d y)
        let ni = rat((n - i) as i64);
        let ii = rat(i as i64);
        if i > 0 {
            out.set(i - 1, i, out.at(i - 1, i).clone() + ii.clone() * b.clone());
        }
        out.set(
            i,
            i,
            out.at(i, i).clone() + ni.clone() * a.clone() + ii * d.clone(),
        );
        if i < n {
            out.set(i + 1, i, out.at(i + 1, i).clone() + ni * c.clone());
        }
    }
    Ok(out)
}

/// The standard basis h, e, f of the trace-zero 2x2 matrices.
pub fn sl2_basis() -> [Matrix; 3] {
    [
        Matrix::from_integers(2, 2, &[1, 0, 0, -1]).unwrap(),
        Matrix::from_integers(2, 2, &[0, 1, 0, 0]).unwrap(),
        Matrix::from_integers(2, 2, &[0, 0, 1, 0]).unwrap(),
    ]
}

/// Dimension of the Lie-algebra stabilizer of a plane: trace-zero xi such
/// that the diagonal derivation action sends both spanning vectors back into
/// the plane.  The containment conditions are the vanishing of all 3x3
/// minors of [xi . u_i; u1; u2], which are linear in xi; the dimension is
/// the nullity of the assembled exact system in the three sl2 coordinates.
pub fn stabilizer_dim(point: &GrassPoint2) -> Result<usize> {
    let n = point.n();
    let width = 2 * (n + 1);
    let gens = sl2_basis();
    // images of each spanning vector under the three generators
    let mut images = Vec::with_capacity(2 * 3);
    for i in 0..2 {
        let (p, q) = if i == 0 { &point.u1 } else { &point.u2 };
        for gen in &gens {
            let rho = derivation_sym(gen, n)?;
            let pv = Matrix::new(n + 1, 1, p.coeffs().to_vec())?;
            let qv = Matrix::new(n + 1, 1, q.coeffs().to_vec())?;
            let mut w = rho.mul(&pv)?.col_vec(0);
            w.extend(rho.mul(&qv)?.col_vec(0));
            images.push(w);
        }
    }
    let u1 = point.vector(0);
    let u2 = point.vector(1);
    let triples = combinations(width, 3);
    let mut entries = Vec::with_capacity(2 * triples.len() * 3);
    for i in 0..2 {
        for t in &triples {
            for s in 0..3 {
                let w = &images[3 * i + s];
                let m = Matrix::from_fn(3, 3, |r, c| {
                    let col = t[c];
                    match r {
                        0 => w[col].clone(),
                        1 => u1[col].clone(),
                        _ => u2[col].clone(),
                    }
                });
                entries.push(m.det()?);
            }
        }
    }
    let system = Matrix::new(2 * triples.len(), 3, entries)?;
    Ok(3 - system.rank())
}

/// Report of the unipotent-kernel computation for alpha = (1 1; 0 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnipotentKernelReport {
    /// dim ker (S^n alpha - id)^r on S^nV; must be r.
    pub dim_single: usize,
    /// Kernel dimension of the same block doubled on S^nV + S^nV; must be 2r.
    pub dim_double: usize,
    /// Kernel equals the span of x^(n-r+1) times the degree-(r-1) monomials.
    pub matches: bool,
}

impl UnipotentKernelReport {
    pub fn passed(&self) -> bool {
        self.matches
    }
}

/// Computes ker((S^n alpha - id)^r) for the standard unipotent alpha and
/// verifies that it is spanned by the monomials x^(n-j) y^j for j < r.
pub fn unipotent_kernel_check(n: usize, r: usize) -> Result<UnipotentKernelReport> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1"));
    }
    if r < 1 || r > n + 1 {
        return Err(Error::InvalidParameter("r must satisfy 1 <= r <= n+1"));
    }
    let alpha = Matrix::from_integers(2, 2, &[1, 1, 0, 1])?;
    let sym = crate::forms::gl_action_sym(&alpha, n)?;
    let nil = sym.sub(&Matrix::identity(n + 1))?;
    let mut power = Matrix::identity(n + 1);
    for _ in 0..r {
        power = power.mul(&nil)?;
    }
    let kernel = power.kernel_basis();
    let dim_single = kernel.cols();
    // the expected span is the first r coordinate vectors, so membership is
    // just vanishing of every kernel entry in the rows >= r
    let mut matches = dim_single == r;
    if matches {
        for row in r..=n {
            for j in 0..kernel.cols() {
                if !kernel.at(row, j).is_zero() {
                    matches = false;
                }
            }
        }
    }
    let mut double = Matrix::zero(2 * (n + 1), 2 * (n + 1));
    for i in 0..(n + 1) {
        for j in 0..(n + 1) {
            let v = power.at(i, j).clone();
            double.set(i, j, v.clone());
            double.set(n + 1 + i, n + 1 + j, v);
        }
    }
    let dim_double = double.kernel_basis().cols();
    Ok(UnipotentKernelReport {
        dim_single,
        dim_double,
        matches: matches && dim_double == 2 * r,
    })
}

fn trace(m: &Matrix) -> Rat {
    debug_assert!(m.is_square());
    (0..m.rows()).map(|i| m.at(i, i).clone()).sum()
}

fn require_2x2(m: &Matrix) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::ShapeMismatch {
            expected: (2, 2),
            found: (m.rows(), m.cols()),
        });
    }
    Ok(())
}

/// The five trace coordinates (tr a1, tr a2, tr a1^2, tr a1 a2, tr a2^2) of
/// a pair of 2x2 matrices; exactly invariant under simultaneous conjugation.
pub fn trace_invariants_pair(a1: &Matrix, a2: &Matrix) -> Result<[Rat; 5]> {
    require_2x2(a1)?;
    require_2x2(a2)?;
    Ok([
        trace(a1),
        trace(a2),
        trace(&a1.mul(a1)?),
        trace(&a1.mul(a2)?),
        trace(&a2.mul(a2)?),
    ])
}

/// The ten trace words of the triple alpha_i = b_i b_1^(-1), i = 2, 3, 4:
/// (tr a2, tr a3, tr a4, tr a2^2, tr a3^2, tr a4^2, tr a2 a3, tr a2 a4,
/// tr a3 a4, tr a2 a3 a4).  Exactly invariant under b_i -> alpha b_i beta^T
/// for any group pair; requires b_1 invertible.
pub fn x1_invariants(b: &[Matrix; 4]) -> Result<[Rat; 10]> {
    for m in b.iter() {
        require_2x2(m)?;
    }
    if !b[0].is_invertible() {
        return Err(Error::Singular);
    }
    let inv = b[0].inverse()?;
    let a2 = b[1].mul(&inv)?;
    let a3 = b[2].mul(&inv)?;
    let a4 = b[3].mul(&inv)?;
    Ok([
        trace(&a2),
        trace(&a3),
        trace(&a4),
        trace(&a2.mul(&a2)?),
        trace(&a3.mul(&a3)?),
        trace(&a4.mul(&a4)?),
        trace(&a2.mul(&a3)?),
        trace(&a2.mul(&a4)?),
        trace(&a3.mul(&a4)?),
        trace(&a2.mul(&a3)?.mul(&a4)?),
    ])
}

/// Rejection-samples a membership-passing subspace: draws k+1 random dual
/// forms, keeps the draw iff it is independent and passes `membership` with
/// the given trial budget.  Deterministic in the seed.
pub fn random_member_subspace(ctx: &ModuliContext, trials: usize, seed: u64) -> Result<SubspaceU> {
    if trials < 1 {
        return Err(Error::InvalidParameter("trials must be at least 1"));
    }
    let mut sampler = Sampler::new(seed);
    for attempt in 0..1_000u64 {
        let basis: Vec<DualBinaryForm> = (0..=ctx.k())
            .map(|_| sampler.dual_form(ctx.form_degree(), -9, 9))
            .collect();
        let u = match SubspaceU::new(ctx.n(), ctx.k(), basis) {
            Ok(u) => u,
            Err(_) => continue,
        };
        if membership(&u, trials, seed ^ attempt)?.is_member() {
            return Ok(u);
        }
    }
    Err(Error::Internal("rejection sampling failed to find a member"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::iota_n;
    use crate::ratio;

    fn dual(values: &[i64]) -> DualBinaryForm {
        DualBinaryForm::new(values.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    fn form(coeffs: &[i64]) -> BinaryForm {
        BinaryForm::new(coeffs.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    fn member_11() -> SubspaceU {
        SubspaceU::new(1, 1, vec![dual(&[1, 0, 0, 1]), dual(&[0, 1, 0, 0])]).unwrap()
    }

    #[test]
    fn membership_member_example() {
        let verdict = membership(&member_11(), 1, 0).unwrap();
        assert_eq!(
            verdict,
            MembershipVerdict::Member {
                mode: MembershipMode::Exact,
                trials: 0
            }
        );
    }

    #[test]
    fn membership_rank_one_witness() {
        let u = SubspaceU::new(1, 1, vec![dual(&[1, 0, 0, 0]), dual(&[0, 0, 0, 1])]).unwrap();
        match membership(&u, 1, 0).unwrap() {
            MembershipVerdict::NotMember { witness, .. } => {
                assert_eq!(witness, Some(dual(&[1, 0, 0, 0])));
            }
            other => panic!("expected NotMember, got {other:?}"),
        }
    }

    #[test]
    fn membership_irrational_root_still_refuted() {
        // pencil gcd lambda^2 - 2 mu^2 has no rational root; the verdict
        // must still be NotMember, carrying the certificate only.
        // H(f) + H(g) built from f = (1,0,2,0), g = (0,1,0,2):
        // v = (l, m, 2l, 2m), H = [[l, m], [m, 2l], [2l, 2m]]
        // minors: 2l^2 - m^2, 2(lm - lm) = 0, 2m^2 - 4l^2 -> gcd 2l^2 - m^2
        let u = SubspaceU::new(1, 1, vec![dual(&[1, 0, 2, 0]), dual(&[0, 1, 0, 2])]).unwrap();
        match membership(&u, 1, 0).unwrap() {
            MembershipVerdict::NotMember { witness, certificate } => {
                assert!(witness.is_none());
                let c = certificate.expect("certificate expected");
                assert_eq!(c.degree(), 2);
            }
            other => panic!("expected NotMember, got {other:?}"),
        }
    }

    #[test]
    fn membership_probabilistic_k2() {
        let u = crate::monad::monomial_member(1, 2).unwrap();
        let verdict = membership(&u, 20, 42).unwrap();
        assert_eq!(
            verdict,
            MembershipVerdict::Member {
                mode: MembershipMode::Probabilistic,
                trials: 20
            }
        );
    }

    #[test]
    fn membership_k2_detects_bad_subspace() {
        // span(e4, e5, e6) at (n, k) = (2, 2): an element (0,...,0,a,b,c)
        // drops catalecticant rank exactly when a = 0, so the bad locus is a
        // line in the projectivized subspace and every random pencil slice
        // meets it at a rational parameter
        let u = SubspaceU::new(
            2,
            2,
            vec![
                dual(&[0, 0, 0, 0, 1, 0, 0]),
                dual(&[0, 0, 0, 0, 0, 1, 0]),
                dual(&[0, 0, 0, 0, 0, 0, 1]),
            ],
        )
        .unwrap();
        match membership(&u, 10, 7).unwrap() {
            MembershipVerdict::NotMember { witness, .. } => {
                let w = witness.expect("rational witness expected");
                assert!(catalecticant(&w, 2, 2).unwrap().rank() < 3);
                assert!(!w.is_zero());
            }
            other => panic!("expected NotMember, got {other:?}"),
        }
    }

    #[test]
    fn membership_rejects_zero_trials() {
        assert!(matches!(
            membership(&member_11(), 0, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn dimension_formula() {
        let d11 = moduli_dimension(&ModuliContext::new(1, 1).unwrap());
        assert_eq!((d11.total, d11.fiber, d11.base), (13, 4, 9));
        assert_eq!(moduli_dimension(&ModuliContext::new(1, 2).unwrap()).total, 15);
        assert_eq!(moduli_dimension(&ModuliContext::new(2, 1).unwrap()).total, 37);
    }

    #[test]
    fn transport_identity_and_scalars() {
        let u = member_11();
        let id = GroupPair::new(Matrix::identity(2), Matrix::identity(2)).unwrap();
        assert_eq!(g_n_transport(&id, &u).unwrap(), u);
        // central alpha scales every basis form: same span, same verdict
        let central = iota_n(&ratio(3, 1), 1).unwrap();
        let scaled = g_n_transport(&central, &u).unwrap();
        let stacked = Matrix::vstack(&[&u.value_matrix(), &scaled.value_matrix()]).unwrap();
        assert_eq!(stacked.rank(), 2);
        assert!(membership(&scaled, 1, 0).unwrap().is_member());
    }

    #[test]
    fn transport_preserves_membership() {
        let u = member_11();
        let mut sampler = Sampler::new(3);
        for _ in 0..10 {
            let g = sampler.group_pair();
            let moved = g_n_transport(&g, &u).unwrap();
            assert!(membership(&moved, 1, 0).unwrap().is_member());
        }
    }

    #[test]
    fn derivation_examples() {
        let [h, _, _] = sl2_basis();
        let rho = derivation_sym(&h, 2).unwrap();
        // rho(h) x^2 = 2 x^2, rho(h) y^2 = -2 y^2, rho(h) xy = 0
        let expected = Matrix::from_integers(3, 3, &[2, 0, 0, 0, 0, 0, 0, 0, -2]).unwrap();
        assert_eq!(rho, expected);
    }

    #[test]
    fn stabilizer_torus_direction() {
        // span((x^2, 0), (0, y^2)) is fixed by the diagonal torus
        let p = GrassPoint2::new(
            2,
            (form(&[1, 0, 0]), BinaryForm::zero(2)),
            (BinaryForm::zero(2), form(&[0, 0, 1])),
        )
        .unwrap();
        assert!(stabilizer_dim(&p).unwrap() >= 1);
    }

    #[test]
    fn stabilizer_of_semisimple_graph() {
        // n = 1, the graph of diag(1,2): centralizer dimension 1
        let p = GrassPoint2::new(
            1,
            (form(&[1, 0]), form(&[1, 0])),
            (form(&[0, 1]), form(&[0, 2])),
        )
        .unwrap();
        assert_eq!(stabilizer_dim(&p).unwrap(), 1);
    }

    #[test]
    fn stabilizer_generically_trivial() {
        let mut sampler = Sampler::new(99);
        let mut zero = 0usize;
        let total = 100usize;
        for _ in 0..total {
            let coeffs = |s: &mut Sampler| {
                BinaryForm::new((0..3).map(|_| rat(s.int_in(-9, 9))).collect()).unwrap()
            };
            let p = match GrassPoint2::new(
                2,
                (coeffs(&mut sampler), coeffs(&mut sampler)),
                (coeffs(&mut sampler), coeffs(&mut sampler)),
            ) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if stabilizer_dim(&p).unwrap() == 0 {
                zero += 1;
            }
        }
        assert!(zero >= 95, "only {zero} of {total} points had trivial stabilizer");
    }

    #[test]
    fn unipotent_kernels() {
        let r1 = unipotent_kernel_check(2, 1).unwrap();
        assert_eq!((r1.dim_single, r1.dim_double, r1.matches), (1, 2, true));
        let r3 = unipotent_kernel_check(2, 3).unwrap();
        assert_eq!((r3.dim_single, r3.dim_double, r3.matches), (3, 6, true));
        let r2 = unipotent_kernel_check(3, 2).unwrap();
        assert_eq!((r2.dim_single, r2.dim_double, r2.matches), (2, 4, true));
        for n in 1..=4usize {
            for r in 1..=(n + 1) {
                assert!(unipotent_kernel_check(n, r).unwrap().passed(), "n={n} r={r}");
            }
        }
        assert!(unipotent_kernel_check(2, 0).is_err());
        assert!(unipotent_kernel_check(2, 4).is_err());
    }

    #[test]
    fn trace_pair_examples() {
        let id = Matrix::identity(2);
        let five = trace_invariants_pair(&id, &id).unwrap();
        assert!(five.iter().all(|t| *t == rat(2)));
        let a1 = Matrix::from_integers(2, 2, &[1, 0, 0, 2]).unwrap();
        let a2 = Matrix::from_integers(2, 2, &[0, 1, 1, 0]).unwrap();
        let five = trace_invariants_pair(&a1, &a2).unwrap();
        assert_eq!(five, [rat(3), rat(0), rat(5), rat(0), rat(2)]);
    }

    #[test]
    fn trace_pair_conjugation_invariant() {
        let mut sampler = Sampler::new(17);
        for _ in 0..10 {
            let a1 = sampler.int_matrix(2, 2, -9, 9);
            let a2 = sampler.int_matrix(2, 2, -9, 9);
            let g = sampler.invertible_matrix(2, -5, 5);
            let gi = g.inverse().unwrap();
            let c1 = g.mul(&a1).unwrap().mul(&gi).unwrap();
            let c2 = g.mul(&a2).unwrap().mul(&gi).unwrap();
            assert_eq!(
                trace_invariants_pair(&a1, &a2).unwrap(),
                trace_invariants_pair(&c1, &c2).unwrap()
            );
        }
    }

    #[test]
    fn x1_examples() {
        let id = Matrix::identity(2);
        let ten = x1_invariants(&[id.clone(), id.clone(), id.clone(), id.clone()]).unwrap();
        assert!(ten.iter().all(|t| *t == rat(2)));
        let b = [
            Matrix::identity(2),
            Matrix::from_integers(2, 2, &[1, 0, 0, 2]).unwrap(),
            Matrix::from_integers(2, 2, &[0, 1, 1, 0]).unwrap(),
            Matrix::identity(2),
        ];
        let ten = x1_invariants(&b).unwrap();
        let expected: Vec<Rat> = [3, 0, 2, 5, 2, 2, 0, 3, 0, 0].iter().map(|&v| rat(v)).collect();
        assert_eq!(ten.to_vec(), expected);
    }

    #[test]
    fn x1_action_invariant() {
        let mut sampler = Sampler::new(29);
        for _ in 0..10 {
            let b: [Matrix; 4] = core::array::from_fn(|_| sampler.int_matrix(2, 2, -9, 9));
            if !b[0].is_invertible() {
                continue;
            }
            let g = sampler.group_pair();
            let bt = g.beta().transpose();
            let moved: [Matrix; 4] =
                core::array::from_fn(|i| g.alpha().mul(&b[i]).unwrap().mul(&bt).unwrap());
            assert_eq!(x1_invariants(&b).unwrap(), x1_invariants(&moved).unwrap());
        }
    }

    #[test]
    fn x1_rejects_singular_psi() {
        let b = [
            Matrix::zero(2, 2),
            Matrix::identity(2),
            Matrix::identity(2),
            Matrix::identity(2),
        ];
        assert!(matches!(x1_invariants(&b), Err(Error::Singular)));
    }

    #[test]
    fn x1_generically_separates() {
        let mut sampler = Sampler::new(31);
        let draw = |s: &mut Sampler| loop {
            let b: [Matrix; 4] = core::array::from_fn(|_| s.int_matrix(2, 2, -9, 9));
            if b[0].is_invertible() {
                return x1_invariants(&b).unwrap();
            }
        };
        for round in 0..50 {
            let left = draw(&mut sampler);
            let right = draw(&mut sampler);
            assert_ne!(left, right, "round {round}");
        }
    }

    #[test]
    fn random_member_generation() {
        let u = random_member_subspace(&ModuliContext::new(1, 1).unwrap(), 1, 5).unwrap();
        assert!(membership(&u, 1, 0).unwrap().is_member());
        let u2 = random_member_subspace(&ModuliContext::new(1, 2).unwrap(), 10, 5).unwrap();
        assert!(membership(&u2, 10, 99).unwrap().is_member());
    }
}
