//! Finitely generated modules over the Artinian ring `R = S/I`, modelled as
//! subspaces of free modules `R^k` viewed as `k`-vector spaces.
//!
//! An element of `R^k` is a sparse vector over flat indices `g * D + u`
//! where `g` is the free generator and `u` a standard-monomial index.

use crate::field::Field;
use crate::ideal::QuotientRing;
use crate::linalg::{collect_sparse, kernel, Echelon, SparseVec};
use crate::monomial::Monomial;

/// `R^rank` over a quotient ring.
#[derive(Clone, Copy, Debug)]
pub struct FreeModule<'a> {
    pub ring: &'a QuotientRing,
    pub rank: usize,
}

impl<'a> FreeModule<'a> {
    pub fn new(ring: &'a QuotientRing, rank: usize) -> Self {
        FreeModule { ring, rank }
    }

    pub fn dim(&self) -> usize {
        self.rank * self.ring.dim()
    }

    /// `sum c * w * e_g` with the monomials reduced modulo `I`.
    pub fn element<F: Field>(&self, terms: impl IntoIterator<Item = (usize, Monomial, F)>) -> SparseVec<F> {
        let d = self.ring.dim();
        collect_sparse(
            terms
                .into_iter()
                .filter_map(|(g, w, c)| self.ring.index_of(w).map(|u| (g * d + u, c))),
        )
    }

    /// `w * v`.
    pub fn mul_monomial<F: Field>(&self, v: &[(usize, F)], w: Monomial) -> SparseVec<F> {
        let d = self.ring.dim();
        collect_sparse(v.iter().filter_map(|(idx, c)| {
            let (g, u) = (idx / d, idx % d);
            self.ring.mul_index(u, w).map(|t| (g * d + t, c.clone()))
        }))
    }

    /// Echelon basis of `m^k * <gens>`, i.e. the span of `w * g` over all
    /// standard monomials `w` of degree at least `k`.
    pub fn span_of_multiples<F: Field>(&self, gens: &[SparseVec<F>], min_degree: u32) -> Echelon<F> {
        let mut ech = Echelon::new();
        for g in gens {
            for &w in &self.ring.basis().monomials {
                if w.degree() < min_degree {
                    continue;
                }
                let v = self.mul_monomial(g, w);
                if !v.is_empty() {
                    ech.insert(&v);
                }
            }
        }
        ech
    }

    /// Minimal number of generators of the submodule generated by `gens`,
    /// computed as `dim U - dim mU`.
    pub fn minimal_generator_count<F: Field>(&self, gens: &[SparseVec<F>]) -> usize {
        self.minimal_generators(gens).len()
    }

    /// A minimal generating subset of `gens`, chosen greedily in order:
    /// a vector is kept when it is independent of `mU` and the vectors kept
    /// so far.
    pub fn minimal_generators<F: Field>(&self, gens: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
        let mut ech = self.span_of_multiples(gens, 1);
        gens.iter().filter(|g| ech.insert(g)).cloned().collect()
    }

    /// A `k`-basis of the syzygies of `gens`: the kernel of
    /// `R^gens.len() -> self`, `e_i -> gens[i]`, as vectors in
    /// `R^gens.len()`.
    pub fn syzygies<F: Field>(&self, gens: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
        let columns: Vec<SparseVec<F>> = gens
            .iter()
            .flat_map(|g| self.ring.basis().monomials.iter().map(move |&w| self.mul_monomial(g, w)))
            .collect();
        // column i * D + u is u * gens[i], matching flat indexing of R^gens.len()
        kernel(&columns, self.dim().max(1))
    }
}

/// Betti numbers `beta_0..beta_len` of the cokernel of the map `R^c -> R^k`
/// whose columns are `relations` (elements of `target`). Requires the map
/// to be minimal, so that `beta_0 = k`.
pub fn cokernel_betti<F: Field>(target: FreeModule<'_>, relations: &[SparseVec<F>], len: usize) -> Vec<usize> {
    let mut out = vec![target.rank];
    let mut module = target;
    let mut gens = relations.to_vec();
    for _ in 0..len {
        let minimal = module.minimal_generators(&gens);
        out.push(minimal.len());
        if out.len() > len {
            break;
        }
        let syz = module.syzygies(&minimal);
        module = FreeModule::new(module.ring, minimal.len());
        gens = syz;
    }
    out.truncate(len + 1);
    out
}
