//! Dense exact linear algebra over the rationals.
//!
//! Rank, kernel and determinant go through fraction-free (Bareiss) elimination
//! over big integers after clearing denominators row by row, so no rounding
//! ever happens. Pivoting is deterministic: first nonzero entry in column
//! order. Intended scale is small dense matrices (a few hundred rows).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::forms::BinaryForm;
use crate::{Rat, Result};

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: (rows, cols),
                found: (entries.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Build from integer literals; test and example helper.
    pub fn from_integers(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        if values.len() != rows * cols {
            return Err(Error::ShapeMismatch { expected: (rows, cols), found: (values.len(), 1) });
        }
        Ok(Matrix::from_fn(rows, cols, |i, j| crate::rat(values[i * cols + j])))
    }

    /// Permutation matrix P with P[perm[i], i] = 1, i.e. P e_i = e_perm[i].
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix::zero(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.set(p, i, Rat::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected: (self.cols, other.rows),
                found: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Rat, &Rat) -> Rat) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.at(i / other.rows, j / other.cols) * other.at(i % other.rows, j % other.cols)
        })
    }

    pub fn vstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let cols = blocks.first().map_or(0, |m| m.cols);
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::ShapeMismatch { expected: (b.rows, cols), found: (b.rows, b.cols) });
            }
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let transposed: Vec<Matrix> = blocks.iter().map(|m| m.transpose()).collect();
        let refs: Vec<&Matrix> = transposed.iter().collect();
        Ok(Matrix::vstack(&refs)?.transpose())
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rat> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Clear denominators and content row by row; the i-th returned factor f_i
    /// satisfies original_row_i = f_i * integer_row_i.
    fn cleared_int_rows(&self) -> (Vec<Vec<BigInt>>, Vec<Rat>) {
        let mut int_rows = Vec::with_capacity(self.rows);
        let mut factors = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let row = &self.entries[r * self.cols..(r + 1) * self.cols];
            let mut lcm = BigInt::one();
            for e in row {
                lcm = lcm.lcm(e.denom());
            }
            let scaled: Vec<BigInt> = row.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
            let mut content = BigInt::zero();
            for v in &scaled {
                content = content.gcd(v);
            }
            if content.is_zero() {
                content = BigInt::one();
            }
            let reduced: Vec<BigInt> = scaled.iter().map(|v| v / &content).collect();
            factors.push(Rat::new(content, lcm));
            int_rows.push(reduced);
        }
        (int_rows, factors)
    }

    /// Exact rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let (rows, _) = self.cleared_int_rows();
        let (_, pivots, _) = bareiss_echelon(rows, self.cols);
        pivots.len()
    }

    /// Exact determinant (fraction-free elimination plus the row factors).
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.rows),
                found: (self.rows, self.cols),
            });
        }
        if self.rows == 0 {
            return Ok(Rat::one());
        }
        let (rows, factors) = self.cleared_int_rows();
        let (echelon, pivots, swaps) = bareiss_echelon(rows, self.cols);
        if pivots.len() < self.rows {
            return Ok(Rat::zero());
        }
        let mut det = Rat::from_integer(echelon[self.rows - 1][self.cols - 1].clone());
        if swaps % 2 == 1 {
            det = -det;
        }
        for f in factors {
            det *= f;
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && !self.det().expect("square").is_zero()
    }

    /// Basis of the right kernel as matrix columns; `self * result == 0`
    /// exactly and the column count is `cols - rank`. Deterministic: free
    /// variables are set to 1 in column order and pivots back-substituted.
    pub fn kernel_basis(&self) -> Matrix {
        let (rows, _) = self.cleared_int_rows();
        let (echelon, pivots, _) = bareiss_echelon(rows, self.cols);
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set[*c]).collect();
        let mut basis = Matrix::zero(self.cols, free.len());
        for (out_col, &fc) in free.iter().enumerate() {
            let mut v = vec![Rat::zero(); self.cols];
            v[fc] = Rat::one();
            for t in (0..pivots.len()).rev() {
                let pc = pivots[t];
                let mut acc = Rat::zero();
                for j in (pc + 1)..self.cols {
                    if !echelon[t][j].is_zero() && !v[j].is_zero() {
                        acc += Rat::from_integer(echelon[t][j].clone()) * &v[j];
                    }
                }
                v[pc] = -acc / Rat::from_integer(echelon[t][pc].clone());
            }
            for (r, val) in v.into_iter().enumerate() {
                basis.set(r, out_col, val);
            }
        }
        basis
    }

    /// Exact inverse via Gauss-Jordan; `Err(Singular)` when not invertible.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.rows),
                found: (self.rows, self.cols),
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row = self.row_vec(i);
                row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(Error::Singular)?;
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for v in aug[col].iter_mut() {
                *v /= p.clone();
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let factor = aug[r][col].clone();
                    for j in 0..2 * n {
                        let delta = &factor * &aug[col][j];
                        aug[r][j] -= delta;
                    }
                }
            }
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug[i][j + n].clone());
            }
        }
        Ok(inv)
    }
}

/// Fraction-free row echelon form. Returns the echelon rows, the pivot column
/// indices (strictly increasing) and the number of row swaps performed.
///
/// One-step Bareiss update: m[i][j] <- (m[i][j]*pivot - m[i][p]*m[r][j]) / prev
/// where prev is the previous pivot; the division is exact by Sylvester's
/// determinant identity, which holds for any strictly increasing pivot column
/// selection.
fn bareiss_echelon(
    mut m: Vec<Vec<BigInt>>,
    ncols: usize,
) -> (Vec<Vec<BigInt>>, Vec<usize>, usize) {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(r, p);
            swaps += 1;
        }
        let pivot_row = m[r].clone();
        let pivot = pivot_row[c].clone();
        for row in m.iter_mut().skip(r + 1) {
            let lead = core::mem::replace(&mut row[c], BigInt::zero());
            for j in (c + 1)..ncols {
                let num = &row[j] * &pivot - &lead * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    (m, pivots, swaps)
}

/// Matrix of linear forms in `nvars` coordinates: M(z) = sum_c z_c * comps[c].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMatrix {
    rows: usize,
    cols: usize,
    comps: Vec<Matrix>,
}

impl LinearMatrix {
    pub fn new(comps: Vec<Matrix>) -> Result<Self> {
        let first = comps.first().ok_or(Error::InvalidParameter("at least one component"))?;
        let (rows, cols) = (first.rows(), first.cols());
        for c in &comps {
            if c.rows() != rows || c.cols() != cols {
                return Err(Error::ShapeMismatch {
                    expected: (rows, cols),
                    found: (c.rows(), c.cols()),
                });
            }
        }
        Ok(LinearMatrix { rows, cols, comps })
    }

    pub fn zero(rows: usize, cols: usize, nvars: usize) -> Self {
        LinearMatrix { rows, cols, comps: vec![Matrix::zero(rows, cols); nvars] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.comps.len()
    }

    pub fn component(&self, c: usize) -> &Matrix {
        &self.comps[c]
    }

    pub fn component_mut(&mut self, c: usize) -> &mut Matrix {
        &mut self.comps[c]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Matrix> {
        if point.len() != self.nvars() {
            return Err(Error::ShapeMismatch {
                expected: (self.nvars(), 1),
                found: (point.len(), 1),
            });
        }
        let mut out = Matrix::zero(self.rows, self.cols);
        for (z, comp) in point.iter().zip(&self.comps) {
            if z.is_zero() {
                continue;
            }
            out = out.add(&comp.scale(z))?;
        }
        Ok(out)
    }

    /// Coordinate substitution z -> g z: the result satisfies
    /// out(z) = self(g z). Component i of the result is sum_c g[c][i] comps[c].
    pub fn substitute(&self, g: &Matrix) -> Result<LinearMatrix> {
        let n = self.nvars();
        if g.rows() != n || g.cols() != n {
            return Err(Error::ShapeMismatch { expected: (n, n), found: (g.rows(), g.cols()) });
        }
        let mut comps = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Matrix::zero(self.rows, self.cols);
            for c in 0..n {
                let w = g.at(c, i);
                if !w.is_zero() {
                    acc = acc.add(&self.comps[c].scale(w))?;
                }
            }
            comps.push(acc);
        }
        Ok(LinearMatrix { rows: self.rows, cols: self.cols, comps })
    }

    pub fn left_mul(&self, m: &Matrix) -> Result<LinearMatrix> {
        let comps: Result<Vec<Matrix>> = self.comps.iter().map(|c| m.mul(c)).collect();
        LinearMatrix::new(comps?)
    }

    pub fn right_mul(&self, m: &Matrix) -> Result<LinearMatrix> {
        let comps: Result<Vec<Matrix>> = self.comps.iter().map(|c| c.mul(m)).collect();
        LinearMatrix::new(comps?)
    }

    pub fn scale(&self, s: &Rat) -> LinearMatrix {
        LinearMatrix {
            rows: self.rows,
            cols: self.cols,
            comps: self.comps.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn neg(&self) -> LinearMatrix {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &LinearMatrix) -> Result<LinearMatrix> {
        if self.nvars() != other.nvars() {
            return Err(Error::ShapeMismatch {
                expected: (self.nvars(), 1),
                found: (other.nvars(), 1),
            });
        }
        let comps: Result<Vec<Matrix>> =
            self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect();
        LinearMatrix::new(comps?)
    }

    /// Single column as a rows x 1 linear matrix.
    pub fn column(&self, j: usize) -> LinearMatrix {
        LinearMatrix {
            rows: self.rows,
            cols: 1,
            comps: self
                .comps
                .iter()
                .map(|c| Matrix::from_fn(self.rows, 1, |i, _| c.at(i, j).clone()))
                .collect(),
        }
    }

    /// Flatten a one-column linear matrix to the coefficient vector indexed by
    /// row-major (row, coordinate) pairs. Inverse of `from_flat_column`.
    pub fn flatten_column(&self) -> Result<Vec<Rat>> {
        if self.cols != 1 {
            return Err(Error::ShapeMismatch { expected: (self.rows, 1), found: (self.rows, self.cols) });
        }
        let n = self.nvars();
        let mut flat = Vec::with_capacity(self.rows * n);
        for r in 0..self.rows {
            for c in 0..n {
                flat.push(self.comps[c].at(r, 0).clone());
            }
        }
        Ok(flat)
    }

    pub fn from_flat_column(rows: usize, nvars: usize, flat: &[Rat]) -> Result<LinearMatrix> {
        if flat.len() != rows * nvars {
            return Err(Error::ShapeMismatch { expected: (rows * nvars, 1), found: (flat.len(), 1) });
        }
        let comps = (0..nvars)
            .map(|c| Matrix::from_fn(rows, 1, |r, _| flat[r * nvars + c].clone()))
            .collect();
        Ok(LinearMatrix { rows, cols: 1, comps })
    }
}

/// Coefficient matrices of the quadratic form (b*a)(z): for c1 <= c2 the
/// returned matrix is the coefficient of z_{c1} z_{c2} in b(z) a(z).
/// The product is zero identically iff every returned matrix is zero.
pub fn quadratic_coefficients(
    b: &LinearMatrix,
    a: &LinearMatrix,
) -> Result<Vec<((usize, usize), Matrix)>> {
    if b.cols() != a.rows() || b.nvars() != a.nvars() {
        return Err(Error::ShapeMismatch {
            expected: (b.cols(), b.nvars()),
            found: (a.rows(), a.nvars()),
        });
    }
    let n = b.nvars();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for c1 in 0..n {
        for c2 in c1..n {
            let m = if c1 == c2 {
                b.component(c1).mul(a.component(c2))?
            } else {
                b.component(c1)
                    .mul(a.component(c2))?
                    .add(&b.component(c2).mul(a.component(c1))?)?
            };
            out.push(((c1, c2), m));
        }
    }
    Ok(out)
}

/// Two-parameter pencil lambda * first + mu * second of equal-shape matrices.
#[derive(Clone, Debug)]
pub struct Pencil {
    first: Matrix,
    second: Matrix,
}

impl Pencil {
    pub fn new(first: Matrix, second: Matrix) -> Result<Self> {
        if first.rows() != second.rows() || first.cols() != second.cols() {
            return Err(Error::ShapeMismatch {
                expected: (first.rows(), first.cols()),
                found: (second.rows(), second.cols()),
            });
        }
        Ok(Pencil { first, second })
    }

    pub fn first(&self) -> &Matrix {
        &self.first
    }

    pub fn second(&self) -> &Matrix {
        &self.second
    }

    pub fn rows(&self) -> usize {
        self.first.rows()
    }

    pub fn cols(&self) -> usize {
        self.first.cols()
    }

    pub fn evaluate(&self, lambda: &Rat, mu: &Rat) -> Matrix {
        self.first.scale(lambda).add(&self.second.scale(mu)).expect("equal shapes")
    }
}

/// All maximal minors of a pencil with rows >= cols, as binary forms of
/// degree `cols` in (lambda, mu). Row subsets are enumerated in lexicographic
/// order; within a subset the determinant is expanded exactly over the
/// polynomial ring.
pub fn maximal_minors(p: &Pencil) -> Result<Vec<BinaryForm>> {
    let (rows, cols) = (p.rows(), p.cols());
    if rows < cols {
        return Err(Error::InvalidParameter("pencil needs at least as many rows as columns"));
    }
    let mut out = Vec::new();
    for subset in combinations(rows, cols) {
        let entries: Vec<Vec<BinaryForm>> = subset
            .iter()
            .map(|&r| {
                (0..cols)
                    .map(|c| {
                        BinaryForm::new(vec![p.first.at(r, c).clone(), p.second.at(r, c).clone()])
                            .expect("degree-1 form")
                    })
                    .collect()
            })
            .collect();
        out.push(form_det(&entries));
    }
    Ok(out)
}

/// Determinant of a square matrix of equal-degree binary forms, by Laplace
/// expansion along the first column. Fine for the small sizes used here.
fn form_det(m: &[Vec<BinaryForm>]) -> BinaryForm {
    let s = m.len();
    let entry_deg = m[0][0].degree();
    if s == 1 {
        return m[0][0].clone();
    }
    // an s x s determinant of degree-d entries is homogeneous of degree s*d
    let mut acc = BinaryForm::zero(s * entry_deg);
    for i in 0..s {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BinaryForm>> = (0..s)
            .filter(|&r| r != i)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let term = m[i][0].mul(&form_det(&minor));
        acc = if i % 2 == 0 { acc.add(&term).unwrap() } else { acc.sub(&term).unwrap() };
    }
    acc
}

/// All k-element subsets of 0..n in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(Matrix::zero(3, 3).rank(), 0);
        assert_eq!(Matrix::identity(4).rank(), 4);
    }

    #[test]
    fn rank_of_rectangular_example() {
        // rows 2 and 3 are 2x and 3x row 1
        let m = Matrix::from_integers(3, 2, &[1, 2, 2, 4, 3, 6]).unwrap();
        assert_eq!(m.rank(), 1);
        let m = Matrix::from_integers(3, 2, &[1, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let m = Matrix::new(
            2,
            2,
            vec![ratio(1, 2), ratio(1, 3), ratio(3, 2), rat(1)],
        )
        .unwrap();
        // det = 1/2 - 1/2 = 0
        assert_eq!(m.rank(), 1);
        assert_eq!(m.det().unwrap(), rat(0));
    }

    #[test]
    fn kernel_of_single_row() {
        let m = Matrix::from_integers(1, 2, &[1, 1]).unwrap();
        let k = m.kernel_basis();
        assert_eq!((k.rows(), k.cols()), (2, 1));
        assert!(m.mul(&k).unwrap().is_zero());
        // spans (1, -1): proportionality check
        assert_eq!(k.at(0, 0) * rat(-1), k.at(1, 0).clone());
    }

    #[test]
    fn kernel_dimension_counts() {
        assert_eq!(Matrix::identity(3).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zero(2, 3).kernel_basis().cols(), 3);
        let m = Matrix::from_integers(2, 4, &[1, 2, 3, 4, 2, 4, 6, 8]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 3);
        assert!(m.mul(&k).unwrap().is_zero());
        assert_eq!(m.rank() + k.cols(), m.cols());
    }

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_integers(2, 2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(m.det().unwrap(), rat(-2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(2));
        let s = Matrix::from_integers(2, 2, &[1, 2, 2, 4]).unwrap();
        assert_eq!(s.inverse().unwrap_err(), Error::Singular);
    }

    #[test]
    fn det_tracks_row_swaps() {
        let m = Matrix::from_integers(2, 2, &[0, 1, 1, 0]).unwrap();
        assert_eq!(m.det().unwrap(), rat(-1));
        let m = Matrix::from_integers(3, 3, &[0, 0, 1, 0, 1, 0, 1, 0, 0]).unwrap();
        assert_eq!(m.det().unwrap(), rat(-1));
    }

    #[test]
    fn kronecker_example() {
        let a = Matrix::from_integers(2, 2, &[1, 0, 0, 2]).unwrap();
        let b = Matrix::from_integers(2, 2, &[0, 1, 1, 0]).unwrap();
        let k = a.kronecker(&b);
        let expected = Matrix::from_integers(
            4,
            4,
            &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0],
        )
        .unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn linear_matrix_evaluate() {
        // M(z) = z0 * I + z1 * [[0,1],[0,0]]
        let m = LinearMatrix::new(vec![
            Matrix::identity(2),
            Matrix::from_integers(2, 2, &[0, 1, 0, 0]).unwrap(),
        ])
        .unwrap();
        let at = m.evaluate(&[rat(3), rat(5)]).unwrap();
        assert_eq!(at, Matrix::from_integers(2, 2, &[3, 5, 0, 3]).unwrap());
        assert!(m.evaluate(&[rat(0), rat(0)]).unwrap().is_zero());
        assert!(m.evaluate(&[rat(1)]).is_err());
    }

    #[test]
    fn substitute_matches_pointwise_evaluation() {
        let m = LinearMatrix::new(vec![
            Matrix::from_integers(2, 2, &[1, 2, 0, 1]).unwrap(),
            Matrix::from_integers(2, 2, &[0, 1, 1, 0]).unwrap(),
        ])
        .unwrap();
        let g = Matrix::from_integers(2, 2, &[2, 1, 1, 1]).unwrap();
        let sub = m.substitute(&g).unwrap();
        for z in [[rat(1), rat(0)], [rat(0), rat(1)], [rat(2), rat(-3)]] {
            let gz: Vec<Rat> = (0..2)
                .map(|i| g.at(i, 0) * &z[0] + g.at(i, 1) * &z[1])
                .collect();
            assert_eq!(sub.evaluate(&z).unwrap(), m.evaluate(&gz).unwrap());
        }
    }

    #[test]
    fn combinations_lex_order() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(4, 4), vec![vec![0, 1, 2, 3]]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn maximal_minors_of_membership_example() {
        // H_f = [[1,0],[0,0],[0,1]], H_g = [[0,1],[1,0],[0,0]]
        let hf = Matrix::from_integers(3, 2, &[1, 0, 0, 0, 0, 1]).unwrap();
        let hg = Matrix::from_integers(3, 2, &[0, 1, 1, 0, 0, 0]).unwrap();
        let minors = maximal_minors(&Pencil::new(hf, hg).unwrap()).unwrap();
        // row subsets {0,1}, {0,2}, {1,2} give -mu^2, lambda^2, lambda*mu
        assert_eq!(minors.len(), 3);
        assert_eq!(minors[0], BinaryForm::new(vec![rat(0), rat(0), rat(-1)]).unwrap());
        assert_eq!(minors[1], BinaryForm::new(vec![rat(1), rat(0), rat(0)]).unwrap());
        assert_eq!(minors[2], BinaryForm::new(vec![rat(0), rat(1), rat(0)]).unwrap());
    }

    #[test]
    fn maximal_minors_shape_errors() {
        let a = Matrix::zero(2, 3);
        let b = Matrix::zero(2, 3);
        assert!(maximal_minors(&Pencil::new(a, b).unwrap()).is_err());
        assert!(Pencil::new(Matrix::zero(2, 2), Matrix::zero(3, 2)).is_err());
    }

    #[test]
    fn minors_agree_with_pointwise_determinants() {
        // random-ish fixed pencil, compare minor forms evaluated at sample
        // (lambda, mu) against determinants of the evaluated pencil
        let a = Matrix::from_integers(3, 2, &[1, 2, 3, -1, 0, 2]).unwrap();
        let b = Matrix::from_integers(3, 2, &[0, 1, -2, 1, 1, 1]).unwrap();
        let pencil = Pencil::new(a, b).unwrap();
        let minors = maximal_minors(&pencil).unwrap();
        let subsets = combinations(3, 2);
        for (lam, mu) in [(rat(1), rat(0)), (rat(0), rat(1)), (rat(2), rat(3)), (ratio(1, 2), rat(-5))] {
            let at = pencil.evaluate(&lam, &mu);
            for (minor, subset) in minors.iter().zip(&subsets) {
                let sub = Matrix::from_fn(2, 2, |i, j| at.at(subset[i], j).clone());
                assert_eq!(minor.eval(&lam, &mu), sub.det().unwrap());
            }
        }
    }
}
