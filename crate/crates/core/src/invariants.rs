//! Invariants read off the resolution: `p` from the columns of `f2`, and
//! `r̂`, `μ⁰`, `μ¹` from the presentation of the canonical module by the
//! transpose of `f3` over `R`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{MonomialIdeal, QuotientRing};
use crate::linalg::SparseVec;
use crate::module::FreeModule;
use crate::resolution::Resolution;

/// Number of `f2` columns all of whose nonzero entries lie in `I`.
pub fn count_p_structural<F: Field>(res: &Resolution<F>, ideal: &MonomialIdeal) -> usize {
    (0..res.f2.cols())
        .filter(|&c| res.f2.column(c).iter().all(|(_, _, m)| ideal.contains(*m)))
        .count()
}

/// The rows of `f3` as elements of `R^m`: the relations of the canonical
/// module.
pub fn canonical_presentation<F: Field>(res: &Resolution<F>, ring: &QuotientRing) -> Vec<SparseVec<F>> {
    let target = FreeModule::new(ring, res.m());
    (0..res.f3.rows())
        .map(|r| target.element(res.f3.row(r).into_iter().map(|(c, s, m)| (c, m, s))))
        .collect()
}

/// `μ¹` by the Nakayama count on the canonical presentation.
pub fn canonical_mu1<F: Field>(res: &Resolution<F>, ring: &QuotientRing) -> usize {
    let target = FreeModule::new(ring, res.m());
    target.minimal_generator_count(&canonical_presentation(res, ring))
}

/// `r̂ = (m + n - 1) - μ¹`.
pub fn dependent_row_count<F: Field>(res: &Resolution<F>, ideal: &MonomialIdeal, dim_cap: usize) -> Result<usize> {
    let ring = QuotientRing::new(ideal, dim_cap)?;
    Ok(res.f3.rows() - canonical_mu1(res, &ring))
}

/// For generic ideals: number of `f3` rows holding a pure-power generator.
pub fn dependent_row_count_generic<F: Field>(res: &Resolution<F>, ideal: &MonomialIdeal) -> Result<usize> {
    if !ideal.is_generic() {
        return Err(Error::NonGeneric);
    }
    Ok(pure_power_row_count(res, ideal))
}

/// Rows of `f3` containing an entry equal to a pure-power generator.
pub fn pure_power_row_count<F: Field>(res: &Resolution<F>, ideal: &MonomialIdeal) -> usize {
    (0..res.f3.rows())
        .filter(|&r| res.f3.row(r).iter().any(|(_, _, m)| ideal.is_pure_power_generator(*m)))
        .count()
}

/// The first two Bass numbers and the dependent row count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BassData {
    pub mu0: usize,
    pub mu1: usize,
    pub rhat: usize,
}

pub fn bass_mu0_mu1<F: Field>(res: &Resolution<F>, ideal: &MonomialIdeal, dim_cap: usize) -> Result<BassData> {
    let rhat = dependent_row_count(res, ideal, dim_cap)?;
    Ok(BassData { mu0: res.m(), mu1: res.f3.rows() - rhat, rhat })
}
