//! Seeded random ideals and exhaustive enumeration of small staircases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Attempts per ideal before sampling gives up.
const SAMPLING_BUDGET: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    /// Largest exponent of any generator; at least 2.
    pub max_exponent: u32,
    /// Inclusive range of generator counts; `n_min >= 3`.
    pub n_min: usize,
    pub n_max: usize,
    pub generic_only: bool,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig { seed: 0, max_exponent: 6, n_min: 3, n_max: 8, generic_only: false }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_exponent < 2 {
            return Err(Error::InvalidArgument("max_exponent must be at least 2".into()));
        }
        if self.n_min < 3 || self.n_min > self.n_max {
            return Err(Error::InvalidArgument(format!(
                "generator range {}..={} must satisfy 3 <= n_min <= n_max",
                self.n_min, self.n_max
            )));
        }
        Ok(())
    }
}

/// Mixes a base seed with an index (splitmix64).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn sample_once(cfg: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Option<MonomialIdeal> {
    let e = cfg.max_exponent;
    let powers = [rng.gen_range(2..=e), rng.gen_range(2..=e), rng.gen_range(2..=e)];
    let mut gens = vec![
        Monomial::new(powers[0], 0, 0),
        Monomial::new(0, powers[1], 0),
        Monomial::new(0, 0, powers[2]),
    ];
    let target = rng.gen_range(cfg.n_min..=cfg.n_max);
    let mut ideal = MonomialIdeal::new(gens.clone());
    for _ in 0..200 {
        if ideal.n() == target {
            break;
        }
        let m = Monomial::new(
            rng.gen_range(0..powers[0]),
            rng.gen_range(0..powers[1]),
            rng.gen_range(0..powers[2]),
        );
        if m.support_size() < 2 || ideal.contains(m) {
            continue;
        }
        let mut next = gens.clone();
        next.push(m);
        let candidate = MonomialIdeal::new(next);
        if candidate.n() <= target {
            gens = candidate.generators().to_vec();
            ideal = candidate;
        }
    }
    (ideal.n() >= cfg.n_min && ideal.n() <= cfg.n_max).then_some(ideal)
}

/// A random m-primary ideal inside `m^2`; deterministic in `cfg.seed`.
pub fn random_ideal(cfg: &GeneratorConfig) -> Result<MonomialIdeal> {
    cfg.validate()?;
    if cfg.generic_only {
        return random_generic_ideal(cfg);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..SAMPLING_BUDGET {
        if let Some(i) = sample_once(cfg, &mut rng) {
            return Ok(i);
        }
    }
    Err(Error::SamplingBudget(SAMPLING_BUDGET))
}

/// Nudges one exponent of a mixed generator by one.
fn perturb(ideal: &MonomialIdeal, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let mut gens = ideal.generators().to_vec();
    let mixed: Vec<usize> = (0..gens.len()).filter(|&i| gens[i].pure_power_var().is_none()).collect();
    if mixed.is_empty() {
        return ideal.clone();
    }
    let i = mixed[rng.gen_range(0..mixed.len())];
    let mut e = gens[i].exps();
    let v = rng.gen_range(0..3);
    if rng.gen_bool(0.5) || e[v] == 0 {
        e[v] += 1;
    } else {
        e[v] -= 1;
    }
    gens[i] = Monomial::from_exps(e);
    MonomialIdeal::new(gens)
}

/// A random generic ideal: rejection sampling with exponent perturbation.
pub fn random_generic_ideal(cfg: &GeneratorConfig) -> Result<MonomialIdeal> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let in_range = |i: &MonomialIdeal| {
        i.n() >= cfg.n_min
            && i.n() <= cfg.n_max
            && i.is_primary_artinian()
            && i.generators().iter().all(|g| g.exps().iter().all(|&x| x <= cfg.max_exponent))
    };
    let mut attempts = 0;
    while attempts < SAMPLING_BUDGET {
        let Some(mut ideal) = sample_once(cfg, &mut rng) else {
            attempts += 1;
            continue;
        };
        for _ in 0..20 {
            attempts += 1;
            if ideal.is_generic() {
                return Ok(ideal);
            }
            let next = perturb(&ideal, &mut rng);
            if in_range(&next) {
                ideal = next;
            }
        }
    }
    Err(Error::SamplingBudget(SAMPLING_BUDGET))
}

/// A staircase: the standard monomials of an m-primary ideal inside `m^2`
/// with every exponent bounded by a box side.
#[derive(Clone, Debug)]
pub struct Staircase {
    /// `heights[i][j]`: number of standard monomials `x^i y^j z^k`.
    pub heights: Vec<Vec<u32>>,
    /// Minimal generators, pure powers first.
    pub generators: Vec<Monomial>,
    /// Number of socle monomials, which is the last Betti number `m`.
    pub socle: usize,
}

impl Staircase {
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.generators.clone())
    }

    fn from_heights(h: &[Vec<u32>], e: usize) -> Staircase {
        let at = |i: usize, j: usize| if i < e && j < e { h[i][j] } else { 0 };
        let mut pure = [Monomial::ONE; 3];
        let mut mixed = Vec::new();
        let mut socle = 0;
        for i in 0..=e {
            for j in 0..=e {
                let k = at(i, j);
                let left = i == 0 || at(i - 1, j) > k;
                let below = j == 0 || at(i, j - 1) > k;
                if left && below {
                    let g = Monomial::new(i as u32, j as u32, k);
                    match g.pure_power_var() {
                        Some(v) => pure[v] = g,
                        None => mixed.push(g),
                    }
                }
                if k > 0 && at(i + 1, j) < k && at(i, j + 1) < k {
                    socle += 1;
                }
            }
        }
        mixed.sort_by(|a, b| b.ax.cmp(&a.ax).then(a.ay.cmp(&b.ay)).then(a.az.cmp(&b.az)));
        let mut generators = pure.to_vec();
        generators.extend(mixed);
        Staircase { heights: h.to_vec(), generators, socle }
    }
}

/// Visits every m-primary ideal `I ⊆ m^2` whose generators have all
/// exponents at most `max_exponent`.
pub fn enumerate_staircases(max_exponent: u32, mut visit: impl FnMut(&Staircase)) {
    let e = max_exponent as usize;
    assert!(e >= 2, "max_exponent must be at least 2");
    let mut h = vec![vec![0u32; e]; e];
    fn fill(h: &mut Vec<Vec<u32>>, pos: usize, e: usize, visit: &mut dyn FnMut(&Staircase)) {
        if pos == e * e {
            // x, y, z are standard
            if h[0][0] >= 2 && h[1][0] >= 1 && h[0][1] >= 1 {
                visit(&Staircase::from_heights(h, e));
            }
            return;
        }
        let (i, j) = (pos / e, pos % e);
        let mut bound = e as u32;
        if i > 0 {
            bound = bound.min(h[i - 1][j]);
        }
        if j > 0 {
            bound = bound.min(h[i][j - 1]);
        }
        for v in 0..=bound {
            h[i][j] = v;
            fill(h, pos + 1, e, visit);
        }
        h[i][j] = 0;
    }
    fill(&mut h, 0, e, &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_deterministic_and_valid() {
        let cfg = GeneratorConfig { seed: 7, ..GeneratorConfig::default() };
        let a = random_ideal(&cfg).unwrap();
        let b = random_ideal(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.is_primary_artinian());
        assert!(a.n() >= 3 && a.n() <= 8);
    }

    #[test]
    fn generic_sampler() {
        let cfg = GeneratorConfig { seed: 1, max_exponent: 6, n_min: 5, n_max: 5, generic_only: true };
        let i = random_ideal(&cfg).unwrap();
        assert!(i.is_generic());
        assert_eq!(i.n(), 5);
    }

    #[test]
    fn three_generators_are_pure_powers() {
        let cfg = GeneratorConfig { seed: 3, max_exponent: 5, n_min: 3, n_max: 3, generic_only: false };
        assert!(random_ideal(&cfg).unwrap().is_complete_intersection());
    }

    #[test]
    fn bad_config() {
        let cfg = GeneratorConfig { max_exponent: 1, ..GeneratorConfig::default() };
        assert!(random_ideal(&cfg).is_err());
    }

    #[test]
    fn enumeration_matches_direct_computation() {
        let mut count = 0;
        enumerate_staircases(3, |s| {
            count += 1;
            let ideal = s.ideal();
            assert_eq!(ideal.n(), s.generators.len());
            assert!(ideal.is_primary_artinian());
            assert_eq!(ideal.socle_monomials().len(), s.socle);
            let dim: u32 = s.heights.iter().flatten().sum();
            assert_eq!(ideal.count_standard_monomials(), dim as usize);
        });
        assert!(count > 100);
    }

    #[test]
    fn smallest_box() {
        let mut seen = Vec::new();
        enumerate_staircases(2, |s| seen.push(s.ideal().to_string()));
        assert_eq!(seen.len(), 9);
        assert!(seen.contains(&"x^2, y^2, z^2, x*z, x*y, y*z".to_string()));
        assert!(seen.contains(&"x^2, y^2, z^2".to_string()));
    }
}
