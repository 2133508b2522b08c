//! Minimal multigraded free resolutions
//! `0 -> S^m -> S^(m+n-1) -> S^n -> S -> R -> 0`.
//!
//! Matrices are stored as scalars plus multidegree labels: the monomial part
//! of entry `(r, c)` is always `col_degree[c] / row_degree[r]`.

mod scarf;
mod syzygy;
mod taylor;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub use scarf::{scarf_faces, scarf_resolution};
pub use syzygy::{ordered_minimal_second_syzygies, second_syzygy, SyzygyVector};
pub use taylor::build_resolution;
pub use verify::{verify_resolution, ResolutionCheck};

/// A matrix of a multigraded map between free modules.
#[derive(Clone, Debug, PartialEq)]
pub struct MultigradedMatrix<F> {
    pub row_degrees: Vec<Monomial>,
    pub col_degrees: Vec<Monomial>,
    /// Nonzero scalars keyed by `(row, col)`.
    pub entries: BTreeMap<(usize, usize), F>,
}

impl<F: Field> MultigradedMatrix<F> {
    pub fn new(row_degrees: Vec<Monomial>, col_degrees: Vec<Monomial>) -> Self {
        MultigradedMatrix { row_degrees, col_degrees, entries: BTreeMap::new() }
    }

    pub fn rows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// The monomial an entry at `(r, c)` must carry, if any.
    pub fn monomial_at(&self, r: usize, c: usize) -> Option<Monomial> {
        self.col_degrees[c].div(self.row_degrees[r])
    }

    /// `(scalar, monomial)` of a nonzero entry.
    pub fn entry(&self, r: usize, c: usize) -> Option<(F, Monomial)> {
        let s = self.entries.get(&(r, c))?;
        Some((s.clone(), self.monomial_at(r, c).expect("homogeneous entry")))
    }

    /// Nonzero entries `(row, scalar, monomial)` of a column.
    pub fn column(&self, c: usize) -> Vec<(usize, F, Monomial)> {
        self.entries
            .range((0, 0)..)
            .filter(|((_, cc), _)| *cc == c)
            .map(|(&(r, _), s)| (r, s.clone(), self.monomial_at(r, c).expect("homogeneous entry")))
            .collect()
    }

    pub fn row(&self, r: usize) -> Vec<(usize, F, Monomial)> {
        self.entries
            .range((r, 0)..(r + 1, 0))
            .map(|(&(_, c), s)| (c, s.clone(), self.monomial_at(r, c).expect("homogeneous entry")))
            .collect()
    }

    /// Every nonzero entry sits where the row degree divides the column
    /// degree.
    pub fn is_homogeneous(&self) -> bool {
        self.entries.keys().all(|&(r, c)| self.row_degrees[r].divides(self.col_degrees[c]))
    }

    /// No nonzero entry is a unit.
    pub fn is_minimal(&self) -> bool {
        self.entries.keys().all(|&(r, c)| self.row_degrees[r] != self.col_degrees[c])
    }

    /// `self * other` is the zero map. Because both factors are
    /// homogeneous, every term of a product entry carries the same monomial
    /// and the check reduces to scalars.
    pub fn composes_to_zero(&self, other: &MultigradedMatrix<F>) -> bool {
        if self.cols() != other.rows() {
            return false;
        }
        let mut acc: BTreeMap<(usize, usize), F> = BTreeMap::new();
        for (&(r, k), a) in &self.entries {
            for (&(_, c), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                let e = acc.entry((r, c)).or_insert_with(F::zero);
                *e = e.add(&a.mul(b));
            }
        }
        acc.values().all(|v| v.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(&(r, c), s)| {
                let m = self.monomial_at(r, c).unwrap_or_default();
                json!([r, c, s.to_string(), [m.ax, m.ay, m.az]])
            })
            .collect();
        json!({
            "rows": self.rows(),
            "cols": self.cols(),
            "row_degrees": self.row_degrees.iter().map(|d| d.exps()).collect::<Vec<_>>(),
            "col_degrees": self.col_degrees.iter().map(|d| d.exps()).collect::<Vec<_>>(),
            "entries": entries,
        })
    }

    fn format_entry(&self, r: usize, c: usize) -> String {
        match self.entry(r, c) {
            None => "0".to_string(),
            Some((s, m)) => {
                let scalar = s.to_string();
                match (scalar.as_str(), m.is_one()) {
                    ("1", _) => m.to_string(),
                    ("-1", _) => format!("-{m}"),
                    (_, true) => scalar,
                    _ => format!("{scalar}*{m}"),
                }
            }
        }
    }
}

impl<F: Field> fmt::Display for MultigradedMatrix<F> {
    /// Bracketed display with right-aligned columns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows()).map(|r| (0..self.cols()).map(|c| self.format_entry(r, c)).collect()).collect();
        let widths: Vec<usize> =
            (0..self.cols()).map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(1)).collect();
        for row in &cells {
            write!(f, "[")?;
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>w$}", w = widths[c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A minimal free resolution of `R = S/I` of length three.
#[derive(Clone, Debug)]
pub struct Resolution<F> {
    pub f1: MultigradedMatrix<F>,
    pub f2: MultigradedMatrix<F>,
    pub f3: MultigradedMatrix<F>,
    /// Generator subsets labelling the columns of `f2` (pairs) and `f3`.
    pub f2_faces: Vec<Vec<usize>>,
    pub f3_faces: Vec<Vec<usize>>,
}

impl<F: Field> Resolution<F> {
    pub fn n(&self) -> usize {
        self.f1.cols()
    }

    pub fn m(&self) -> usize {
        self.f3.cols()
    }

    pub fn l(&self) -> usize {
        self.n().saturating_sub(1)
    }

    /// `(1, n, m+n-1, m)` as realised by the matrices.
    pub fn betti(&self) -> [usize; 4] {
        [self.f1.rows(), self.f1.cols(), self.f2.cols(), self.f3.cols()]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "betti": self.betti(),
            "f1": self.f1.to_json(),
            "f2": self.f2.to_json(),
            "f3": self.f3.to_json(),
            "f2_faces": self.f2_faces,
            "f3_faces": self.f3_faces,
        })
    }
}

impl<F: Field> fmt::Display for Resolution<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [b0, b1, b2, b3] = self.betti();
        writeln!(f, "0 -> S^{b3} -> S^{b2} -> S^{b1} -> S^{b0}")?;
        writeln!(f, "f1 ({}x{}):", self.f1.rows(), self.f1.cols())?;
        write!(f, "{}", self.f1)?;
        writeln!(f, "f2 ({}x{}):", self.f2.rows(), self.f2.cols())?;
        write!(f, "{}", self.f2)?;
        writeln!(f, "f3 ({}x{}):", self.f3.rows(), self.f3.cols())?;
        write!(f, "{}", self.f3)
    }
}

/// Builds a resolution, preferring the Taylor route and falling back to the
/// Scarf complex for generic ideals beyond the Taylor cap.
pub fn resolve<F: Field>(ideal: &MonomialIdeal, cfg: &Config) -> Result<Resolution<F>> {
    ideal.require_artinian()?;
    if ideal.n() > cfg.taylor_cap {
        if ideal.is_generic() {
            return scarf_resolution(ideal);
        }
        return Err(Error::TaylorCap { n: ideal.n(), cap: cfg.taylor_cap });
    }
    build_resolution(ideal, cfg.taylor_cap)
}

/// Simplicial boundary coefficient of removing the element at `pos`.
pub(crate) fn boundary_sign<F: Field>(pos: usize) -> F {
    if pos.is_multiple_of(2) {
        F::one()
    } else {
        F::one().neg()
    }
}

pub(crate) fn face_lcm(gens: &[Monomial], face: &[usize]) -> Monomial {
    face.iter().fold(Monomial::ONE, |acc, &i| acc.lcm(gens[i]))
}
