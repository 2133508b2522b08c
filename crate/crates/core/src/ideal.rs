//! Monomial ideals, shape predicates and the standard-monomial basis of the
//! Artinian quotient.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::parse::parse_ideal;

/// Default cap on `dim_k R`.
pub const DEFAULT_DIM_CAP: usize = 20_000;

/// A monomial ideal given by its minimal generators, in a stable order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`, keeping the input order among survivors. A
    /// repeated generator keeps its first occurrence.
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let all: Vec<Monomial> = gens.into_iter().collect();
        let mut kept = Vec::new();
        for (i, &g) in all.iter().enumerate() {
            let redundant = all.iter().enumerate().any(|(j, &h)| {
                if h == g {
                    j < i
                } else {
                    h.divides(g)
                }
            });
            if !redundant {
                kept.push(g);
            }
        }
        MonomialIdeal { generators: kept }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn n(&self) -> usize {
        self.generators.len()
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Exponent `k` such that `x_v^k` is a generator.
    pub fn pure_power_exponent(&self, v: usize) -> Option<u32> {
        self.generators.iter().find(|g| g.pure_power_var() == Some(v)).map(|g| g.exp(v))
    }

    pub fn is_pure_power_generator(&self, m: Monomial) -> bool {
        m.pure_power_var().is_some() && self.generators.contains(&m)
    }

    /// Contains a pure power of every variable and lies inside `m^2`.
    pub fn is_primary_artinian(&self) -> bool {
        self.artinian_violation().is_none()
    }

    pub(crate) fn artinian_violation(&self) -> Option<String> {
        for v in 0..3 {
            if self.pure_power_exponent(v).is_none() {
                return Some(format!("no pure power of {}", crate::monomial::VARIABLES[v]));
            }
        }
        self.generators
            .iter()
            .find(|g| g.degree() < 2)
            .map(|g| format!("generator {g} has degree < 2"))
    }

    pub fn require_artinian(&self) -> Result<()> {
        match self.artinian_violation() {
            Some(why) => Err(Error::NotArtinian(why)),
            None => Ok(()),
        }
    }

    /// Any two generators with the same positive exponent in some variable
    /// have a third generator strongly dividing their lcm.
    pub fn is_generic(&self) -> bool {
        let g = &self.generators;
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                let shares = (0..3).any(|v| g[i].exp(v) > 0 && g[i].exp(v) == g[j].exp(v));
                if !shares {
                    continue;
                }
                let l = g[i].lcm(g[j]);
                let witnessed = g
                    .iter()
                    .enumerate()
                    .any(|(k, &mk)| k != i && k != j && mk.strongly_divides(l));
                if !witnessed {
                    return false;
                }
            }
        }
        true
    }

    /// `I = <x^a, y^b, z^c>`.
    pub fn is_complete_intersection(&self) -> bool {
        self.n() == 3 && self.generators.iter().all(|g| g.pure_power_var().is_some()) && self.is_primary_artinian()
    }

    /// Generators that are not pure powers.
    pub fn mixed_generators(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.generators.iter().copied().filter(|g| g.pure_power_var().is_none())
    }

    /// Standard monomials in degree-lexicographic order. Fails if the
    /// ideal is not Artinian or the count exceeds `cap`.
    pub fn standard_monomials(&self, cap: usize) -> Result<StandardBasis> {
        self.require_artinian()?;
        let mut out = Vec::new();
        let mut ax = 0;
        while !self.contains(Monomial::new(ax, 0, 0)) {
            let mut ay = 0;
            while !self.contains(Monomial::new(ax, ay, 0)) {
                let mut az = 0;
                while !self.contains(Monomial::new(ax, ay, az)) {
                    out.push(Monomial::new(ax, ay, az));
                    if out.len() > cap {
                        return Err(Error::DimensionCap { dim: self.count_standard_monomials(), cap });
                    }
                    az += 1;
                }
                ay += 1;
            }
            ax += 1;
        }
        out.sort_by_key(|m| (m.degree(), Reverse(m.ax), Reverse(m.ay)));
        let dim = out.len();
        Ok(StandardBasis { monomials: out, dim })
    }

    /// `dim_k R` without materialising the basis (column heights).
    pub fn count_standard_monomials(&self) -> usize {
        let mut count = 0usize;
        let mut ax = 0;
        while !self.contains(Monomial::new(ax, 0, 0)) {
            let mut ay = 0;
            while !self.contains(Monomial::new(ax, ay, 0)) {
                let h = self
                    .generators
                    .iter()
                    .filter(|g| g.ax <= ax && g.ay <= ay)
                    .map(|g| g.az)
                    .min()
                    .expect("Artinian ideal has a pure power of z");
                count += h as usize;
                ay += 1;
            }
            ax += 1;
        }
        count
    }

    /// Maximal standard monomials, i.e. a monomial basis of the socle of R.
    pub fn socle_monomials(&self) -> Vec<Monomial> {
        let basis = match self.standard_monomials(usize::MAX) {
            Ok(b) => b,
            Err(_) => return Vec::new(),
        };
        basis
            .monomials
            .into_iter()
            .filter(|&u| (0..3).all(|v| self.contains(u.mul(Monomial::var(v)))))
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ideal(s)
    }
}

/// Monomials outside `I`; a k-basis of `R = S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    pub monomials: Vec<Monomial>,
    pub dim: usize,
}

/// `R = S/I` as a finite-dimensional vector space with a monomial lookup.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ideal: MonomialIdeal,
    basis: StandardBasis,
    index: HashMap<Monomial, usize>,
}

impl QuotientRing {
    pub fn new(ideal: &MonomialIdeal, dim_cap: usize) -> Result<Self> {
        let basis = ideal.standard_monomials(dim_cap)?;
        let index = basis.monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Ok(QuotientRing { ideal: ideal.clone(), basis, index })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.basis.dim
    }

    pub fn basis(&self) -> &StandardBasis {
        &self.basis
    }

    pub fn monomial(&self, idx: usize) -> Monomial {
        self.basis.monomials[idx]
    }

    /// Basis index of `m`, or `None` when `m ∈ I`.
    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        self.index.get(&m).copied()
    }

    /// Index of `w * basis[idx]`, or `None` if the product lies in `I`.
    pub fn mul_index(&self, idx: usize, w: Monomial) -> Option<usize> {
        self.index_of(self.basis.monomials[idx].mul(w))
    }
}
