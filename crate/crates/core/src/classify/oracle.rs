//! Higher Bass numbers as Betti numbers of the canonical module.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::{Field, FieldKind, Gf32003, Rational};
use crate::ideal::{MonomialIdeal, QuotientRing};
use crate::invariants::canonical_presentation;
use crate::module::{cokernel_betti, FreeModule};
use crate::resolution::{resolve, Resolution};

/// Largest `len` accepted by [`canonical_betti_oracle`].
pub const MAX_ORACLE_LEN: usize = 4;

/// `β_0..β_len` of `ω_R` over `R`, by iterated minimal presentations.
pub fn canonical_betti_oracle(ideal: &MonomialIdeal, len: usize, cfg: &Config) -> Result<Vec<usize>> {
    match cfg.field {
        FieldKind::Qq => canonical_betti_with::<Rational>(ideal, len, cfg),
        FieldKind::Gf32003 => canonical_betti_with::<Gf32003>(ideal, len, cfg),
    }
}

pub fn canonical_betti_with<F: Field>(ideal: &MonomialIdeal, len: usize, cfg: &Config) -> Result<Vec<usize>> {
    let res: Resolution<F> = resolve(ideal, cfg)?;
    canonical_betti_from(&res, ideal, len, cfg.dim_cap)
}

pub fn canonical_betti_from<F: Field>(
    res: &Resolution<F>,
    ideal: &MonomialIdeal,
    len: usize,
    dim_cap: usize,
) -> Result<Vec<usize>> {
    if len > MAX_ORACLE_LEN {
        return Err(Error::InvalidArgument(format!("oracle length {len} exceeds {MAX_ORACLE_LEN}")));
    }
    let ring = QuotientRing::new(ideal, dim_cap)?;
    let rel = canonical_presentation(res, &ring);
    Ok(cokernel_betti(FreeModule::new(&ring, res.m()), &rel, len))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_three_one() {
        let i: MonomialIdeal = "x^3,x^2*y,y^3,z^3,x^2*z^2".parse().unwrap();
        assert_eq!(canonical_betti_oracle(&i, 1, &Config::default()).unwrap(), vec![2, 4]);
    }

    #[test]
    fn complete_intersection_is_gorenstein() {
        let i: MonomialIdeal = "x^2,y^3,z^2".parse().unwrap();
        assert_eq!(canonical_betti_oracle(&i, 2, &Config::default()).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn second_bass_number_matches_series() {
        // T: β2 - β1 - l β0 = -2;  H(3,0): -3
        let cfg = Config::default();
        let t: MonomialIdeal = "x^3,y^3,z^3,x*y*z".parse().unwrap();
        let b = canonical_betti_oracle(&t, 2, &cfg).unwrap();
        assert_eq!(b[2] as i64 - b[1] as i64 - 3 * b[0] as i64, -2);
        let h: MonomialIdeal = "x^5,y^5,z^5,y^3*z^3,x*y^4*z^2,x*y^2*z^4".parse().unwrap();
        let b = canonical_betti_oracle(&h, 2, &cfg).unwrap();
        assert_eq!(b[2] as i64 - b[1] as i64 - 5 * b[0] as i64, -3);
    }
}
