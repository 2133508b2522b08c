//! Sparse exact linear algebra.
//!
//! Vectors are sorted `(index, coefficient)` lists. All matrices that appear
//! in this crate are multigraded, so a vector only ever meets pivots of its
//! own multidegree during elimination and fill-in stays local.

use std::collections::HashMap;

use crate::field::Field;

/// Sorted sparse vector with no explicit zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// `v + c * w`.
pub fn axpy<F: Field>(v: &[(usize, F)], c: &F, w: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        if j == w.len() || (i < v.len() && v[i].0 < w[j].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i == v.len() || w[j].0 < v[i].0 {
            let val = c.mul(&w[j].1);
            if !val.is_zero() {
                out.push((w[j].0, val));
            }
            j += 1;
        } else {
            let val = v[i].1.add(&c.mul(&w[j].1));
            if !val.is_zero() {
                out.push((v[i].0, val));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(v: &[(usize, F)], c: &F) -> SparseVec<F> {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x.mul(c))).collect()
}

/// Builds a sparse vector from unsorted, possibly repeated entries.
pub fn collect_sparse<F: Field>(entries: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut raw: Vec<(usize, F)> = entries.into_iter().collect();
    raw.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F> = Vec::with_capacity(raw.len());
    for (i, x) in raw {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.add(&x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// A row-echelon basis keyed by pivot column. Rows are normalised so the
/// pivot coefficient is one; the pivot is the smallest index of the row.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: HashMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against every pivot it touches.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut cur: SparseVec<F> = v.to_vec();
        let mut pos = 0;
        loop {
            let hit = cur[pos.min(cur.len())..]
                .iter()
                .position(|(i, _)| self.rows.contains_key(i))
                .map(|k| k + pos.min(cur.len()));
            let Some(k) = hit else { break };
            let (pivot, coeff) = (cur[k].0, cur[k].1.clone());
            let row = &self.rows[&pivot];
            cur = axpy(&cur, &coeff.neg(), row);
            // everything left of the pivot is untouched by the row
            pos = cur.partition_point(|(i, _)| *i <= pivot);
        }
        cur
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns `true` when it was independent of the rows.
    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        let red = self.reduce(v);
        self.insert_reduced(red)
    }

    fn insert_reduced(&mut self, red: SparseVec<F>) -> bool {
        if red.is_empty() {
            return false;
        }
        let lead = red[0].1.inv();
        let pivot = red[0].0;
        self.rows.insert(pivot, scale(&red, &lead));
        true
    }
}

/// Rank of a family of vectors.
pub fn rank<F: Field>(vectors: &[SparseVec<F>]) -> usize {
    let mut e = Echelon::new();
    vectors.iter().filter(|v| e.insert(v)).count()
}

/// Kernel of the linear map whose `j`-th column is `columns[j]`. Every
/// column index must be `< target_dim`. Returns a basis of the kernel as
/// vectors over the column indices.
pub fn kernel<F: Field>(columns: &[SparseVec<F>], target_dim: usize) -> Vec<SparseVec<F>> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        debug_assert!(col.iter().all(|(i, _)| *i < target_dim));
        let mut aug = col.clone();
        aug.push((target_dim + j, F::one()));
        let red = ech.reduce(&aug);
        if red.first().is_none_or(|(i, _)| *i >= target_dim) {
            out.push(red.into_iter().map(|(i, x)| (i - target_dim, x)).collect());
        } else {
            ech.insert_reduced(red);
        }
    }
    out
}

/// Expresses vectors as combinations of a fixed family modulo a subspace.
///
/// `new(relations, basis)`: the relations span a subspace `B`, the basis
/// vectors are independent modulo `B`. `coordinates(v)` returns the unique
/// coefficients `c` with `v - sum c_j basis_j ∈ B`, or `None` when `v` is not in
/// `B + span(basis)`.
#[derive(Clone, Debug)]
pub struct QuotientCoordinates<F> {
    ech: Echelon<F>,
    offset: usize,
    basis_len: usize,
}

impl<F: Field> QuotientCoordinates<F> {
    /// `ambient_dim` bounds every index used by `relations`, `basis` and
    /// later queries.
    pub fn new(ambient_dim: usize, relations: &[SparseVec<F>], basis: &[SparseVec<F>]) -> Self {
        let mut ech = Echelon::new();
        for r in relations {
            ech.insert(r);
        }
        for (j, b) in basis.iter().enumerate() {
            let mut aug = b.clone();
            aug.push((ambient_dim + j, F::one()));
            let red = ech.reduce(&aug);
            assert!(
                red.first().is_some_and(|(i, _)| *i < ambient_dim),
                "basis vector {j} is dependent modulo the relations"
            );
            ech.insert_reduced(red);
        }
        QuotientCoordinates { ech, offset: ambient_dim, basis_len: basis.len() }
    }

    pub fn coordinates(&self, v: &[(usize, F)]) -> Option<SparseVec<F>> {
        let red = self.ech.reduce(v);
        if red.first().is_some_and(|(i, _)| *i < self.offset) {
            return None;
        }
        // v ≡ -(tag part) as a combination of basis tags
        let coords: SparseVec<F> = red.into_iter().map(|(i, x)| (i - self.offset, x.neg())).collect();
        debug_assert!(coords.iter().all(|(i, _)| *i < self.basis_len));
        Some(coords)
    }
}
