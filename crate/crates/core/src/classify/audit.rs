//! Checks of the conjectured shape of `f3` and of the class predicted from
//! the generator pattern. Nothing here asserts; every clause is reported.

use serde::Serialize;

use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::resolution::Resolution;

use super::KoszulClass;

/// Generator pattern cases, numbered as in the conjectured classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeCase {
    /// All mixed generators have full support.
    FullSupport,
    /// One variable carries a shared minimal exponent along a chain.
    BChain,
    /// Exactly one mixed generator of each double-support type, the rest
    /// full support.
    AllDoubles,
    Other,
}

impl ShapeCase {
    pub fn number(self) -> u8 {
        match self {
            ShapeCase::FullSupport => 1,
            ShapeCase::BChain => 2,
            ShapeCase::AllDoubles => 3,
            ShapeCase::Other => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRecord {
    /// Every `f3` entry lying in `I` equals a pure-power generator.
    pub ires_pure_power: bool,
    /// `μ¹ = m + n - 1 - #{f3 entries in I}`.
    pub ires_mu1: bool,
    /// `None` for complete intersections.
    pub compclass_match: Option<bool>,
    pub compclass_case: u8,
    pub f3_entries_in_ideal: usize,
    /// `f3` entries in `I` that are not pure-power generators.
    pub offending_entries: Vec<String>,
}

impl AuditRecord {
    pub fn is_clean(&self) -> bool {
        self.ires_pure_power && self.ires_mu1 && self.compclass_match != Some(false)
    }
}

/// The chain condition for variable `i`, if the mixed generators fit it.
fn b_chain_holds(mixed: &[Monomial], i: usize) -> Option<bool> {
    let c = mixed.iter().map(|g| g.exp(i)).min()?;
    if c == 0 {
        return None;
    }
    let alpha: Vec<Monomial> = mixed.iter().copied().filter(|g| g.exp(i) == c).collect();
    if alpha.len() < 2 {
        return None;
    }
    // the exponent in variable i is shared by the chain and exceeded elsewhere
    let others = [0, 1, 2].into_iter().filter(|&v| v != i).collect::<Vec<_>>();
    let fits = |s: usize, t: usize| {
        let mut chain = alpha.clone();
        chain.sort_by_key(|g| g.exp(s));
        let first = chain[0];
        let last = *chain.last().expect("chain has two elements");
        first.exp(s) == 0
            && last.exp(t) == 0
            && chain.windows(2).all(|w| w[0].exp(s) < w[1].exp(s) && w[0].exp(t) > w[1].exp(t))
    };
    Some(fits(others[0], others[1]) || fits(others[1], others[0]))
}

/// Classifies the generator pattern of `I`.
pub fn shape_case(ideal: &MonomialIdeal) -> ShapeCase {
    let mixed: Vec<Monomial> = ideal.mixed_generators().collect();
    if !mixed.is_empty() && mixed.iter().all(|g| g.support_size() == 3) {
        return ShapeCase::FullSupport;
    }
    let chain: Vec<bool> = (0..3).filter_map(|i| b_chain_holds(&mixed, i)).collect();
    if chain.len() == 1 && chain[0] {
        return ShapeCase::BChain;
    }
    let pairs = |a: usize, b: usize| {
        mixed.iter().filter(|g| g.support_size() == 2 && g.exp(a) > 0 && g.exp(b) > 0).count()
    };
    let only_doubles_and_full = mixed.iter().all(|g| g.support_size() >= 2);
    if only_doubles_and_full && pairs(0, 1) == 1 && pairs(0, 2) == 1 && pairs(1, 2) == 1 {
        return ShapeCase::AllDoubles;
    }
    ShapeCase::Other
}

/// Whether `cls` is what the pattern predicts.
pub fn shape_predicts(case: ShapeCase, cls: &KoszulClass) -> bool {
    match case {
        ShapeCase::FullSupport => *cls == KoszulClass::T,
        ShapeCase::BChain => *cls == KoszulClass::B,
        ShapeCase::AllDoubles => *cls == KoszulClass::H(0, 0),
        ShapeCase::Other => matches!(*cls, KoszulClass::H(a, b) if a + b >= 1),
    }
}

pub fn audit_conjectures<F: Field>(
    ideal: &MonomialIdeal,
    res: &Resolution<F>,
    mu1: usize,
    cls: &KoszulClass,
) -> AuditRecord {
    let mut in_ideal = 0;
    let mut offending = Vec::new();
    for &(r, c) in res.f3.entries.keys() {
        let m = res.f3.monomial_at(r, c).expect("homogeneous entry");
        if ideal.contains(m) {
            in_ideal += 1;
            if !ideal.is_pure_power_generator(m) {
                offending.push(format!("f3[{r},{c}] = {m}"));
            }
        }
    }
    let expected_mu1 = (res.f3.rows() as i64) - in_ideal as i64;
    let case = shape_case(ideal);
    let compclass_match = match cls {
        KoszulClass::C3 => None,
        _ => Some(shape_predicts(case, cls)),
    };
    AuditRecord {
        ires_pure_power: offending.is_empty(),
        ires_mu1: expected_mu1 == mu1 as i64,
        compclass_match,
        compclass_case: case.number(),
        f3_entries_in_ideal: in_ideal,
        offending_entries: offending,
    }
}
