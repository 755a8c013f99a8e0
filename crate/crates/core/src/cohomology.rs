//! Line-bundle cohomology on projective space and the natural-cohomology
//! table of an instanton.
//!
//! Everything here is Euler-characteristic bookkeeping: the table is not
//! computed from sheaves but from the exact formula for chi(E(l)) combined
//! with the case analysis that pins the unique allowed cohomological degree
//! for each twist in the window -2n-1 <= l <= 0.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::moduli::ModuliContext;
use crate::Result;

/// C(a, b) for nonnegative arguments, exact.
fn binom_u(a: u64, b: u64) -> Result<u64> {
    if b > a {
        return Ok(0);
    }
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc
            .checked_mul((a - i) as u128)
            .ok_or(Error::Internal("binomial overflow"))?
            / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Internal("binomial overflow"))
}

/// C(m + nproj, nproj) evaluated as a polynomial in m (signed binomial),
/// which is exactly chi(O(m)) on projective nproj-space.
pub fn chi_o(nproj: usize, m: i64) -> Result<i64> {
    let mut acc: i128 = 1;
    for j in 1..=(nproj as i64) {
        acc = acc
            .checked_mul((m + j) as i128)
            .ok_or(Error::Internal("chi overflow"))?
            / j as i128;
    }
    i64::try_from(acc).map_err(|_| Error::Internal("chi overflow"))
}

/// Dimensions (h^0, ..., h^nproj) of the cohomology of O(m) on projective
/// nproj-space: only h^0 (for m >= 0) or h^nproj (for m <= -nproj-1) can be
/// nonzero.
pub fn line_cohomology(nproj: usize, m: i64) -> Result<Vec<u64>> {
    if nproj < 1 {
        return Err(Error::InvalidParameter("projective dimension must be at least 1"));
    }
    let mut out = vec![0u64; nproj + 1];
    let np = nproj as i64;
    if m >= 0 {
        out[0] = binom_u((m + np) as u64, nproj as u64)?;
    } else if m < -np {
        out[nproj] = binom_u((-m - 1) as u64, nproj as u64)?;
    }
    Ok(out)
}

/// chi(E(l)) for the cohomology bundle of a monad with invariants (n, k):
/// the middle term contributes (2n+2k+2) chi(O(l)), the two end terms
/// subtract (k+1)(chi(O(l+1)) + chi(O(l-1))).
pub fn euler_char_e(ctx: &ModuliContext, l: i64) -> Result<i64> {
    let nproj = 2 * ctx.n() + 1;
    let mid = (2 * ctx.n() + 2 * ctx.k() + 2) as i64;
    let ends = (ctx.k() + 1) as i64;
    let chi_mid = chi_o(nproj, l)?
        .checked_mul(mid)
        .ok_or(Error::Internal("chi overflow"))?;
    let chi_ends = chi_o(nproj, l + 1)?
        .checked_add(chi_o(nproj, l - 1)?)
        .and_then(|s| s.checked_mul(ends))
        .ok_or(Error::Internal("chi overflow"))?;
    chi_mid
        .checked_sub(chi_ends)
        .ok_or(Error::Internal("chi overflow"))
}

/// Cohomology table of an instanton over the window -2n-1 <= l <= 0: for
/// each twist at most one cohomological degree is nonzero, and the table
/// stores exactly the nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    n: usize,
    k: usize,
    entries: BTreeMap<(usize, i64), u64>,
}

impl CohomologyTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// h^q(E(l)); zero for every pair not stored.
    pub fn entry(&self, q: usize, l: i64) -> u64 {
        self.entries.get(&(q, l)).copied().unwrap_or(0)
    }

    /// The nonzero entries, keyed by (q, l).
    pub fn entries(&self) -> &BTreeMap<(usize, i64), u64> {
        &self.entries
    }

    /// Twist window covered by the table: -2n-1 <= l <= 0.
    pub fn window(&self) -> (i64, i64) {
        (-(2 * self.n as i64) - 1, 0)
    }

    /// Alternating sum over q at a fixed twist.
    pub fn chi_row(&self, l: i64) -> i64 {
        self.entries
            .iter()
            .filter(|((_, ll), _)| *ll == l)
            .map(|((q, _), h)| {
                let signed = *h as i64;
                if q % 2 == 0 {
                    signed
                } else {
                    -signed
                }
            })
            .sum()
    }
}

/// Builds the natural-cohomology table from Euler characteristics.  The only
/// degrees that can carry cohomology are q = 2n at l = -2n-1 and q = 1 at
/// l in {-1, 0}; in the interior -2n <= l <= -2 every group vanishes.  The
/// construction cross-checks the sign of each chi against (-1)^q and the
/// vanishing in the interior; a mismatch signals a formula bug and surfaces
/// as an internal error.
pub fn natural_cohomology_table(ctx: &ModuliContext) -> Result<CohomologyTable> {
    let n = ctx.n();
    let k = ctx.k();
    let mut entries = BTreeMap::new();
    let lo = -(2 * n as i64) - 1;
    for l in lo..=0 {
        let chi = euler_char_e(ctx, l)?;
        let q = if l == lo {
            2 * n
        } else if l >= -1 {
            1
        } else {
            if chi != 0 {
                return Err(Error::Internal("nonzero chi in the vanishing window"));
            }
            continue;
        };
        if chi == 0 {
            continue;
        }
        let positive = chi > 0;
        if positive != (q % 2 == 0) {
            return Err(Error::Internal("chi sign incompatible with allowed degree"));
        }
        entries.insert((q, l), chi.unsigned_abs());
    }
    Ok(CohomologyTable { n, k, entries })
}
