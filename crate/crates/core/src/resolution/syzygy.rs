//! Pairwise syzygies `σ_ij = (m_ij/m_j) e_j - (m_ij/m_i) e_i` and the
//! ordered minimal ones.
//!
//! [`ordered_minimal_second_syzygies`] evaluates the minimality predicate
//! directly and is independent of the Taylor minimalisation.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::ideal::MonomialIdeal;
use crate::linalg::{collect_sparse, Echelon, SparseVec};
use crate::monomial::Monomial;

/// `σ_ij` with `i < j` (0-based generator indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SyzygyVector {
    pub i: usize,
    pub j: usize,
    /// `m_ij = lcm(m_i, m_j)`.
    pub lcm: Monomial,
    /// Coefficient of `e_j`, with sign `+`.
    pub coeff_j: Monomial,
    /// Coefficient of `e_i`, with sign `-`.
    pub coeff_i: Monomial,
}

impl fmt::Display for SyzygyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*e{} - {}*e{}", self.coeff_j, self.j + 1, self.coeff_i, self.i + 1)
    }
}

/// `σ_ij` for 0-based `i < j < n`.
pub fn second_syzygy(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<SyzygyVector> {
    let n = ideal.n();
    if i >= j || j >= n {
        return Err(Error::IndexOutOfRange(format!("need i < j < {n}, got ({i}, {j})")));
    }
    let g = ideal.generators();
    let lcm = g[i].lcm(g[j]);
    Ok(SyzygyVector {
        i,
        j,
        lcm,
        coeff_j: lcm.div(g[j]).expect("generator divides lcm"),
        coeff_i: lcm.div(g[i]).expect("generator divides lcm"),
    })
}

fn scalar_vector(i: usize, j: usize) -> SparseVec<Rational> {
    collect_sparse([(i, Rational::from_i64(-1)), (j, Rational::one())])
}

/// The syzygies `σ_ij` that are not a combination of syzygies of strictly
/// smaller lcm or of later syzygies with the same lcm, in dictionary order.
///
/// Since all `σ_kl` in a relation share multidegree `m_ij` after scaling by
/// monomials, the test reduces to a scalar span question in `k^n`.
pub fn ordered_minimal_second_syzygies(ideal: &MonomialIdeal) -> Result<Vec<SyzygyVector>> {
    ideal.require_artinian()?;
    let n = ideal.n();
    let g = ideal.generators();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    let lcms: Vec<Monomial> = pairs.iter().map(|&(i, j)| g[i].lcm(g[j])).collect();
    let mut out = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        let mut span: Echelon<Rational> = Echelon::new();
        for (b, &(k, l)) in pairs.iter().enumerate() {
            let later_same = b > a && lcms[b] == lcms[a];
            if later_same || lcms[b].strictly_divides(lcms[a]) {
                span.insert(&scalar_vector(k, l));
            }
        }
        if !span.contains(&scalar_vector(i, j)) {
            out.push(second_syzygy(ideal, i, j)?);
        }
    }
    Ok(out)
}
