//! File formats shared by the subcommands.
//!
//! Rationals travel as strings "p/q" in lowest terms ("p" when the
//! denominator is 1) because JSON numbers cannot hold big rationals
//! losslessly.  Matrices are row-major nested arrays of such strings, and a
//! matrix of linear forms is the list of its coefficient matrices, one per
//! variable.

use std::str::FromStr;

use instanton_core::forms::{BinaryForm, DualBinaryForm};
use instanton_core::linalg::{LinearMatrix, Matrix};
use instanton_core::moduli::GrassPoint2;
use instanton_core::monad::{Monad, SubspaceU};
use instanton_core::Rat;
use serde::{Deserialize, Serialize};

pub fn show_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s.trim()).map_err(|_| format!("bad rational {s:?}"))
}

pub fn rats_to_strings(xs: &[Rat]) -> Vec<String> {
    xs.iter().map(show_rat).collect()
}

pub fn strings_to_rats(xs: &[String]) -> Result<Vec<Rat>, String> {
    xs.iter().map(|s| parse_rat(s)).collect()
}

pub fn matrix_to_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| show_rat(m.at(r, c))).collect())
        .collect()
}

pub fn matrix_from_rows(rows: &[Vec<String>]) -> Result<Matrix, String> {
    if rows.is_empty() {
        return Err("matrix has no rows".into());
    }
    let cols = rows[0].len();
    if cols == 0 {
        return Err("matrix has no columns".into());
    }
    let mut entries = Vec::with_capacity(rows.len() * cols);
    for row in rows {
        if row.len() != cols {
            return Err(format!("ragged matrix: row of length {} expected {cols}", row.len()));
        }
        for s in row {
            entries.push(parse_rat(s)?);
        }
    }
    Matrix::new(rows.len(), cols, entries).map_err(|e| e.to_string())
}

pub fn linear_to_comps(lm: &LinearMatrix) -> Vec<Vec<Vec<String>>> {
    (0..lm.nvars()).map(|c| matrix_to_rows(lm.component(c))).collect()
}

pub fn linear_from_comps(comps: &[Vec<Vec<String>>]) -> Result<LinearMatrix, String> {
    let mats = comps.iter().map(|m| matrix_from_rows(m)).collect::<Result<Vec<_>, _>>()?;
    LinearMatrix::new(mats).map_err(|e| e.to_string())
}

/// A subspace of dual forms: `basis` holds the value vectors, each of length
/// 2n+k+1.  `g` optionally carries a (2n+2)x(2n+2) coordinate frame that
/// build-monad applies; every other command ignores it.
#[derive(Serialize, Deserialize)]
pub struct SubspaceFile {
    pub n: usize,
    pub k: usize,
    pub basis: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Vec<String>>>,
}

impl SubspaceFile {
    pub fn from_core(u: &SubspaceU) -> Self {
        SubspaceFile {
            n: u.n(),
            k: u.k(),
            basis: u.basis().iter().map(|f| rats_to_strings(f.values())).collect(),
            g: None,
        }
    }

    pub fn subspace(&self) -> Result<SubspaceU, String> {
        let mut basis = Vec::with_capacity(self.basis.len());
        for values in &self.basis {
            let form = DualBinaryForm::new(strings_to_rats(values)?).map_err(|e| e.to_string())?;
            basis.push(form);
        }
        SubspaceU::new(self.n, self.k, basis).map_err(|e| e.to_string())
    }

    pub fn frame(&self) -> Result<Option<Matrix>, String> {
        self.g.as_deref().map(matrix_from_rows).transpose()
    }
}

/// Monad matrices: `a` and `b` are lists of 2n+2 coefficient matrices, one
/// per coordinate, of shapes (2n+2k+2)x(k+1) and (k+1)x(2n+2k+2).
#[derive(Serialize, Deserialize)]
pub struct MonadFile {
    pub n: usize,
    pub k: usize,
    pub a: Vec<Vec<Vec<String>>>,
    pub b: Vec<Vec<Vec<String>>>,
}

impl MonadFile {
    pub fn from_core(m: &Monad) -> Self {
        MonadFile {
            n: m.n(),
            k: m.k(),
            a: linear_to_comps(m.a()),
            b: linear_to_comps(m.b()),
        }
    }

    pub fn monad(&self) -> Result<Monad, String> {
        let a = linear_from_comps(&self.a)?;
        let b = linear_from_comps(&self.b)?;
        Monad::new(self.n, self.k, a, b).map_err(|e| e.to_string())
    }
}

/// Input for `invariants`: exactly one of `pair` (two 2x2 matrices) or
/// `quadruple` (four 2x2 matrices, the first one invertible).
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsFile {
    #[serde(default)]
    pub pair: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default)]
    pub quadruple: Option<Vec<Vec<Vec<String>>>>,
}

impl InvariantsFile {
    pub fn matrices(list: &[Vec<Vec<String>>], want: usize) -> Result<Vec<Matrix>, String> {
        if list.len() != want {
            return Err(format!("expected {want} matrices, found {}", list.len()));
        }
        list.iter().map(|m| matrix_from_rows(m)).collect()
    }
}

/// Input for `stabilizer`: a pair of planes in the degree-n forms, each given
/// by two coefficient vectors of length n+1.
#[derive(Deserialize)]
pub struct GrassFile {
    pub n: usize,
    pub u1: Vec<Vec<String>>,
    pub u2: Vec<Vec<String>>,
}

impl GrassFile {
    pub fn point(&self) -> Result<GrassPoint2, String> {
        let pair = |plane: &[Vec<String>]| -> Result<(BinaryForm, BinaryForm), String> {
            if plane.len() != 2 {
                return Err(format!("a plane needs 2 forms, found {}", plane.len()));
            }
            let f = BinaryForm::new(strings_to_rats(&plane[0])?).map_err(|e| e.to_string())?;
            let g = BinaryForm::new(strings_to_rats(&plane[1])?).map_err(|e| e.to_string())?;
            Ok((f, g))
        };
        GrassPoint2::new(self.n, pair(&self.u1)?, pair(&self.u2)?).map_err(|e| e.to_string())
    }
}
