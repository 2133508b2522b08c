//! Koszul complex of `x, y, z` over `R = S/I` and its homology algebra.
//!
//! `K_1 = R^3` has blocks `e1, e2, e3`, `K_2 = R^3` has `e12, e13, e23` and
//! `K_3 = R` has `e123`; flat index `block * D + u`.
//!
//! ```text
//! d1(u e_i)   = x_i u
//! d2(u e_ij)  = x_i u e_j - x_j u e_i
//! d3(u e123)  = z u e12 - y u e13 + x u e23
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{MonomialIdeal, QuotientRing};
use crate::linalg::{axpy, collect_sparse, kernel, rank, Echelon, QuotientCoordinates, SparseVec};
use crate::monomial::Monomial;

/// `(i, j)` for the blocks of `K_2`, with `i < j` as variable indices.
const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn pair_block(i: usize, j: usize) -> usize {
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => unreachable!("not an ordered pair of variables"),
    }
}

/// The Koszul complex as matrices over `k` in the standard monomial basis.
/// Each differential is stored as its list of columns.
pub struct KoszulModel<F> {
    pub ring: QuotientRing,
    /// `K_1 -> K_0`, `3D` columns of length `D`.
    pub d1: Vec<SparseVec<F>>,
    /// `K_2 -> K_1`, `3D` columns of length `3D`.
    pub d2: Vec<SparseVec<F>>,
    /// `K_3 -> K_2`, `D` columns of length `3D`.
    pub d3: Vec<SparseVec<F>>,
}

impl<F: Field> fmt::Debug for KoszulModel<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KoszulModel {{ dim: {} }}", self.ring.dim())
    }
}

pub fn build_koszul_model<F: Field>(ideal: &MonomialIdeal, dim_cap: usize) -> Result<KoszulModel<F>> {
    if F::characteristic() == 2 {
        return Err(Error::Characteristic2);
    }
    ideal.require_artinian()?;
    let ring = QuotientRing::new(ideal, dim_cap)?;
    let d = ring.dim();
    let one = F::one();
    let minus = one.neg();
    let shifted = |u: usize, v: usize, block: usize, c: &F| -> Option<(usize, F)> {
        ring.mul_index(u, Monomial::var(v)).map(|t| (block * d + t, c.clone()))
    };

    let mut d1 = Vec::with_capacity(3 * d);
    for i in 0..3 {
        for u in 0..d {
            d1.push(collect_sparse(shifted(u, i, 0, &one)));
        }
    }
    let mut d2 = Vec::with_capacity(3 * d);
    for &(i, j) in &PAIRS {
        for u in 0..d {
            d2.push(collect_sparse(shifted(u, i, j, &one).into_iter().chain(shifted(u, j, i, &minus))));
        }
    }
    let mut d3 = Vec::with_capacity(d);
    for u in 0..d {
        let terms = [shifted(u, 2, 0, &one), shifted(u, 1, 1, &minus), shifted(u, 0, 2, &one)];
        d3.push(collect_sparse(terms.into_iter().flatten()));
    }
    let model = KoszulModel { ring, d1, d2, d3 };
    if !model.is_complex() {
        return Err(Error::Internal("Koszul differentials do not compose to zero".into()));
    }
    Ok(model)
}

/// Applies a matrix given by columns to a vector.
fn apply<F: Field>(columns: &[SparseVec<F>], v: &[(usize, F)]) -> SparseVec<F> {
    v.iter().fold(Vec::new(), |acc, (j, c)| axpy(&acc, c, &columns[*j]))
}

impl<F: Field> KoszulModel<F> {
    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    /// `d1 d2 = 0` and `d2 d3 = 0`.
    pub fn is_complex(&self) -> bool {
        self.d2.iter().all(|c| apply(&self.d1, c).is_empty()) && self.d3.iter().all(|c| apply(&self.d2, c).is_empty())
    }

    /// Computes bases of `A_1, A_2, A_3` and the multiplication data.
    pub fn homology(&self) -> HomologyAlgebra<F> {
        HomologyAlgebra::new(self)
    }

    /// `a * b` for `a, b ∈ K_1`, landing in `K_2`.
    pub fn mul_11(&self, a: &[(usize, F)], b: &[(usize, F)]) -> SparseVec<F> {
        let d = self.dim();
        let mut terms = Vec::new();
        for (ia, ca) in a {
            for (ib, cb) in b {
                let (i, u) = (ia / d, ia % d);
                let (j, v) = (ib / d, ib % d);
                if i == j {
                    continue;
                }
                let Some(t) = self.ring.mul_index(u, self.ring.monomial(v)) else { continue };
                let c = ca.mul(cb);
                let c = if i < j { c } else { c.neg() };
                terms.push((pair_block(i.min(j), i.max(j)) * d + t, c));
            }
        }
        collect_sparse(terms)
    }

    /// `a * b` for `a ∈ K_1`, `b ∈ K_2`, landing in `K_3`.
    pub fn mul_12(&self, a: &[(usize, F)], b: &[(usize, F)]) -> SparseVec<F> {
        let d = self.dim();
        let mut terms = Vec::new();
        for (ia, ca) in a {
            for (ib, cb) in b {
                let (i, u) = (ia / d, ia % d);
                let (blk, v) = (ib / d, ib % d);
                // e_i ∧ e_jk: e1∧e23 = e123, e2∧e13 = -e123, e3∧e12 = e123
                let sign = match (i, blk) {
                    (0, 2) | (2, 0) => 1,
                    (1, 1) => -1,
                    _ => continue,
                };
                let Some(t) = self.ring.mul_index(u, self.ring.monomial(v)) else { continue };
                let c = ca.mul(cb);
                terms.push((t, if sign > 0 { c } else { c.neg() }));
            }
        }
        collect_sparse(terms)
    }
}

/// Homology classes with coordinates relative to chosen bases.
pub struct HomologyAlgebra<F> {
    /// Cycle representatives of the bases.
    pub a1: Vec<SparseVec<F>>,
    pub a2: Vec<SparseVec<F>>,
    pub a3: Vec<SparseVec<F>>,
    /// `mult_11[a][b]`: coordinates in `A_2` of `a1[a] * a1[b]`.
    pub mult_11: Vec<Vec<SparseVec<F>>>,
    /// `mult_12[a][b]`: coordinates in `A_3` of `a1[a] * a2[b]`.
    pub mult_12: Vec<Vec<SparseVec<F>>>,
    coords2: QuotientCoordinates<F>,
    coords3: QuotientCoordinates<F>,
    coords1: QuotientCoordinates<F>,
}

/// Cycles that are independent modulo the boundaries, in kernel order.
fn homology_basis<F: Field>(cycles: Vec<SparseVec<F>>, boundaries: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    let mut ech = Echelon::new();
    for b in boundaries {
        ech.insert(b);
    }
    cycles.into_iter().filter(|z| ech.insert(z)).collect()
}

impl<F: Field> HomologyAlgebra<F> {
    fn new(model: &KoszulModel<F>) -> Self {
        let d = model.dim();
        let z1 = kernel(&model.d1, d);
        let z2 = kernel(&model.d2, 3 * d);
        let z3 = kernel(&model.d3, 3 * d);
        let a1 = homology_basis(z1, &model.d2);
        let a2 = homology_basis(z2, &model.d3);
        let a3 = z3;
        let coords1 = QuotientCoordinates::new(3 * d, &model.d2, &a1);
        let coords2 = QuotientCoordinates::new(3 * d, &model.d3, &a2);
        let coords3 = QuotientCoordinates::new(d, &[], &a3);
        let project = |q: &QuotientCoordinates<F>, v: SparseVec<F>| {
            q.coordinates(&v).expect("product of cycles is a cycle")
        };
        let mult_11 = a1
            .iter()
            .map(|x| a1.iter().map(|y| project(&coords2, model.mul_11(x, y))).collect())
            .collect();
        let mult_12 = a1
            .iter()
            .map(|x| a2.iter().map(|y| project(&coords3, model.mul_12(x, y))).collect())
            .collect();
        HomologyAlgebra { a1, a2, a3, mult_11, mult_12, coords1, coords2, coords3 }
    }

    /// `(dim A_1, dim A_2, dim A_3)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a1.len(), self.a2.len(), self.a3.len())
    }

    /// Coordinates of a 1-cycle in the `A_1` basis.
    pub fn coordinates_1(&self, v: &[(usize, F)]) -> Option<SparseVec<F>> {
        self.coords1.coordinates(v)
    }

    pub fn coordinates_2(&self, v: &[(usize, F)]) -> Option<SparseVec<F>> {
        self.coords2.coordinates(v)
    }

    pub fn coordinates_3(&self, v: &[(usize, F)]) -> Option<SparseVec<F>> {
        self.coords3.coordinates(v)
    }

    /// `p = rank A_1^2`.
    pub fn rank_a1_squared(&self) -> usize {
        let all: Vec<SparseVec<F>> = self.mult_11.iter().flatten().cloned().collect();
        rank(&all)
    }

    /// `q = rank A_1 A_2`.
    pub fn rank_a1_a2(&self) -> usize {
        let all: Vec<SparseVec<F>> = self.mult_12.iter().flatten().cloned().collect();
        rank(&all)
    }

    /// `r = rank δ2` where `δ2(y)(x) = x y`.
    pub fn rank_delta2(&self) -> usize {
        let width = self.a3.len();
        let rows: Vec<SparseVec<F>> = (0..self.a2.len())
            .map(|b| {
                collect_sparse(
                    self.mult_12
                        .iter()
                        .enumerate()
                        .flat_map(|(a, row)| row[b].iter().map(move |(k, c)| (a * width + k, c.clone()))),
                )
            })
            .collect();
        rank(&rows)
    }
}

/// The minimal generators of `A_1` built from the generators of `I`: for
/// `m` with positive `x`-degree `(m/x) e1`; otherwise with positive
/// `y`-degree `(m/y) e2`; otherwise `(m/z) e3`. Returned as coefficient
/// monomial and block.
pub fn canonical_a1_generators(ideal: &MonomialIdeal) -> Vec<(Monomial, usize)> {
    ideal
        .generators()
        .iter()
        .map(|&m| {
            let v = (0..3).find(|&v| m.exp(v) > 0).expect("generator is not 1");
            (m.div(Monomial::var(v)).expect("variable divides generator"), v)
        })
        .collect()
}

/// The canonical generators as 1-cycles of the model.
pub fn canonical_a1_cycles<F: Field>(model: &KoszulModel<F>) -> Vec<SparseVec<F>> {
    let d = model.dim();
    canonical_a1_generators(model.ring.ideal())
        .into_iter()
        .map(|(w, block)| {
            let u = model.ring.index_of(w).expect("m / x_v is a standard monomial");
            vec![(block * d + u, F::one())]
        })
        .collect()
}

/// Whether `A_1^2` is spanned by the pairwise products of three canonical
/// generators, each product nonzero. Requires `p = 3`.
pub fn truncated_exterior_check<F: Field>(model: &KoszulModel<F>, alg: &HomologyAlgebra<F>) -> Result<bool> {
    let p = alg.rank_a1_squared();
    if p != 3 {
        return Err(Error::InvalidArgument(format!("truncated exterior check needs p = 3, got {p}")));
    }
    let gens = canonical_a1_cycles(model);
    let n = gens.len();
    let product = |i: usize, j: usize| alg.coordinates_2(&model.mul_11(&gens[i], &gens[j])).expect("cycle");
    for i in 0..n {
        for j in (i + 1)..n {
            let ij = product(i, j);
            if ij.is_empty() {
                continue;
            }
            for k in (j + 1)..n {
                let trio = [ij.clone(), product(i, k), product(j, k)];
                if trio.iter().all(|v| !v.is_empty()) && rank(&trio) == 3 {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Multiplies boundary-perturbed representatives and compares in homology.
/// Returns `false` if some product changes class.
pub fn products_well_defined<F: Field>(model: &KoszulModel<F>, alg: &HomologyAlgebra<F>) -> bool {
    let pick = |cols: &[SparseVec<F>], k: usize| -> SparseVec<F> {
        let nonzero: Vec<&SparseVec<F>> = cols.iter().filter(|c| !c.is_empty()).collect();
        if nonzero.is_empty() {
            Vec::new()
        } else {
            nonzero[k % nonzero.len()].clone()
        }
    };
    let two = F::from_i64(2);
    for (a, x) in alg.a1.iter().enumerate() {
        let x2 = axpy(x, &two, &pick(&model.d2, a));
        for (b, y) in alg.a1.iter().enumerate() {
            let y2 = axpy(y, &F::one(), &pick(&model.d2, a + 3 * b + 1));
            if alg.coordinates_2(&model.mul_11(&x2, &y2)).as_ref() != Some(&alg.mult_11[a][b]) {
                return false;
            }
        }
        for (b, y) in alg.a2.iter().enumerate() {
            let y2 = axpy(y, &two.neg(), &pick(&model.d3, a + b));
            if alg.coordinates_3(&model.mul_12(&x2, &y2)).as_ref() != Some(&alg.mult_12[a][b]) {
                return false;
            }
        }
    }
    true
}

/// Formats a multiplication table `rows x cols` of coordinate vectors.
pub fn format_table<F: Field>(table: &[Vec<SparseVec<F>>], left: &str, right: &str, target: &str) -> String {
    let cell = |v: &SparseVec<F>| -> String {
        if v.is_empty() {
            return "0".to_string();
        }
        v.iter()
            .enumerate()
            .map(|(k, (i, c))| {
                let s = c.to_string();
                let body = match s.as_str() {
                    "1" => format!("{target}{}", i + 1),
                    "-1" => format!("-{target}{}", i + 1),
                    _ => format!("{s}{target}{}", i + 1),
                };
                if k > 0 && !body.starts_with('-') {
                    format!("+{body}")
                } else {
                    body
                }
            })
            .collect()
    };
    let cols = table.first().map_or(0, |r| r.len());
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend((0..cols).map(|j| format!("{right}{}", j + 1)));
    cells.push(header);
    for (i, row) in table.iter().enumerate() {
        let mut line = vec![format!("{left}{}", i + 1)];
        line.extend(row.iter().map(cell));
        cells.push(line);
    }
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for line in cells {
        let joined: Vec<String> = line.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(joined.join(" ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Gf32003, Rational};

    fn model(s: &str) -> KoszulModel<Rational> {
        build_koszul_model(&s.parse().unwrap(), 10_000).unwrap()
    }

    #[test]
    fn square_of_maximal_ideal() {
        let m = model("x^2,x*y,x*z,y^2,y*z,z^2");
        assert_eq!(m.dim(), 4);
        assert_eq!(rank(&m.d1), 3);
        let alg = m.homology();
        assert_eq!(alg.dims(), (6, 8, 3));
        assert_eq!(alg.rank_a1_squared(), 0);
        assert_eq!(alg.rank_delta2(), 0);
    }

    #[test]
    fn exterior_algebra_of_complete_intersection() {
        let m = model("x^2,y^2,z^2");
        let alg = m.homology();
        assert_eq!(alg.dims(), (3, 3, 1));
        assert_eq!(alg.rank_a1_squared(), 3);
        assert_eq!(alg.rank_a1_a2(), 1);
        assert!(truncated_exterior_check(&m, &alg).unwrap());
    }

    #[test]
    fn example_three_one() {
        let m = model("x^3,x^2*y,y^3,z^3,x^2*z^2");
        let alg = m.homology();
        assert_eq!(alg.dims(), (5, 6, 2));
        assert_eq!((alg.rank_a1_squared(), alg.rank_a1_a2(), alg.rank_delta2()), (1, 1, 2));
        assert!(products_well_defined(&m, &alg));
        let gens = canonical_a1_generators(m.ring.ideal());
        assert_eq!(
            gens,
            vec![
                (Monomial::new(2, 0, 0), 0),
                (Monomial::new(1, 1, 0), 0),
                (Monomial::new(0, 2, 0), 1),
                (Monomial::new(0, 0, 2), 2),
                (Monomial::new(1, 0, 2), 0),
            ]
        );
        let cycles = canonical_a1_cycles(&m);
        let coords: Vec<SparseVec<Rational>> = cycles.iter().map(|c| alg.coordinates_1(c).unwrap()).collect();
        assert_eq!(rank(&coords), 5);
    }

    #[test]
    fn example_four_two() {
        let m = model("x^5,y^5,z^5,y^3*z^3,x*y^4*z^2,x*y^2*z^4");
        let alg = m.homology();
        assert_eq!(alg.dims(), (6, 11, 6));
        assert_eq!((alg.rank_a1_squared(), alg.rank_a1_a2(), alg.rank_delta2()), (3, 0, 0));
        assert!(!truncated_exterior_check(&m, &alg).unwrap());
    }

    #[test]
    fn truncated_exterior_algebra() {
        let m = model("x^3,y^3,z^3,x*y*z");
        let alg = m.homology();
        assert_eq!((alg.rank_a1_squared(), alg.rank_a1_a2(), alg.rank_delta2()), (3, 0, 0));
        assert!(truncated_exterior_check(&m, &alg).unwrap());
    }

    #[test]
    fn graded_commutativity() {
        let m = model("x^3,x^2*y,y^3,z^3,x^2*z^2");
        let alg = m.homology();
        for a in 0..alg.a1.len() {
            assert!(alg.mult_11[a][a].is_empty());
            for b in 0..alg.a1.len() {
                let neg: SparseVec<Rational> = alg.mult_11[b][a].iter().map(|(i, c)| (*i, c.neg())).collect();
                assert_eq!(alg.mult_11[a][b], neg);
            }
        }
    }

    #[test]
    fn prime_field_agrees() {
        let i: MonomialIdeal = "x^3,x^2*y,y^3,z^3,x^2*z^2".parse().unwrap();
        let m: KoszulModel<Gf32003> = build_koszul_model(&i, 10_000).unwrap();
        let alg = m.homology();
        assert_eq!((alg.rank_a1_squared(), alg.rank_a1_a2(), alg.rank_delta2()), (1, 1, 2));
    }

    #[test]
    fn characteristic_two_rejected() {
        let i: MonomialIdeal = "x^2,y^2,z^2".parse().unwrap();
        assert_eq!(build_koszul_model::<Fp<2>>(&i, 100).unwrap_err(), Error::Characteristic2);
    }

    #[test]
    fn corrupted_differential_detected() {
        let mut m = model("x^2,y^2,z^2");
        assert!(m.is_complex());
        m.d2[0] = vec![(0, Rational::one())];
        assert!(!m.is_complex());
    }
}
