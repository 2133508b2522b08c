//! Parametrised ideal families with known classes.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::FamilyConstraint(msg.into()))
}

fn strictly_decreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

fn strictly_increasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn check_minimal(gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    let expected = gens.len();
    let ideal = MonomialIdeal::new(gens);
    if ideal.n() != expected {
        return fail(format!("generators are not minimal ({} of {expected} survive)", ideal.n()));
    }
    Ok(ideal)
}

/// `x^a, y^b, z^c, x^{a_1} z^{c'}, x^{a_i} y^{b_i} z^{c'} (1 < i < ρ), y^{b_ρ} z^{c'}`
/// with `xs = [a_1, ..., a_{ρ-1}]` and `ys = [b_2, ..., b_ρ]`.
pub fn family_bclass(a: u32, b: u32, c: u32, c_prime: u32, xs: &[u32], ys: &[u32]) -> Result<MonomialIdeal> {
    if xs.len() != ys.len() {
        return fail("xs and ys must have the same length ρ - 1");
    }
    if xs.is_empty() {
        return fail("ρ >= 2");
    }
    if !(0 < c_prime && c_prime < c) {
        return fail("0 < c' < c");
    }
    if !strictly_decreasing(xs) || xs.iter().any(|&x| x == 0 || x >= a) {
        return fail("a > a_1 > a_2 > ... > a_{ρ-1} > 0");
    }
    if !strictly_increasing(ys) || ys.iter().any(|&y| y == 0 || y >= b) {
        return fail("0 < b_2 < ... < b_ρ < b");
    }
    let rho = xs.len() + 1;
    let mut gens = vec![Monomial::new(a, 0, 0), Monomial::new(0, b, 0), Monomial::new(0, 0, c)];
    gens.push(Monomial::new(xs[0], 0, c_prime));
    for i in 1..rho - 1 {
        gens.push(Monomial::new(xs[i], ys[i - 1], c_prime));
    }
    gens.push(Monomial::new(0, ys[rho - 2], c_prime));
    check_minimal(gens)
}

/// `x^a, y^b, z^c, x^{a_i} y^{b_i} z^{c'}` for the given `(a_i, b_i)`.
pub fn family_tnongen(a: u32, b: u32, c: u32, c_prime: u32, pairs: &[(u32, u32)]) -> Result<MonomialIdeal> {
    if pairs.is_empty() {
        return fail("ρ >= 1");
    }
    if !(0 < c_prime && c_prime < c) {
        return fail("0 < c' < c");
    }
    let xs: Vec<u32> = pairs.iter().map(|p| p.0).collect();
    let ys: Vec<u32> = pairs.iter().map(|p| p.1).collect();
    if !strictly_decreasing(&xs) || xs.iter().any(|&x| x == 0 || x >= a) {
        return fail("a > a_1 > ... > a_ρ > 0");
    }
    if !strictly_increasing(&ys) || ys.iter().any(|&y| y == 0 || y >= b) {
        return fail("0 < b_1 < ... < b_ρ < b");
    }
    let mut gens = vec![Monomial::new(a, 0, 0), Monomial::new(0, b, 0), Monomial::new(0, 0, c)];
    gens.extend(pairs.iter().map(|&(x, y)| Monomial::new(x, y, c_prime)));
    check_minimal(gens)
}

/// `x^a, y^b, z^c, y^{b_i} z^{c_i}` for the given `(b_i, c_i)`.
pub fn family_staircase(a: u32, b: u32, c: u32, pairs: &[(u32, u32)]) -> Result<MonomialIdeal> {
    if pairs.is_empty() {
        return fail("ρ >= 1");
    }
    if a < 2 {
        return fail("a >= 2");
    }
    let ys: Vec<u32> = pairs.iter().map(|p| p.0).collect();
    let zs: Vec<u32> = pairs.iter().map(|p| p.1).collect();
    if !strictly_increasing(&ys) || ys.iter().any(|&y| y == 0 || y >= b) {
        return fail("0 < b_1 < ... < b_ρ < b");
    }
    if !strictly_decreasing(&zs) || zs.iter().any(|&z| z == 0 || z >= c) {
        return fail("c > c_1 > ... > c_ρ > 0");
    }
    if pairs.iter().any(|&(y, z)| y + z < 2) {
        return fail("generators lie in m^2");
    }
    let mut gens = vec![Monomial::new(a, 0, 0), Monomial::new(0, b, 0), Monomial::new(0, 0, c)];
    gens.extend(pairs.iter().map(|&(y, z)| Monomial::new(0, y, z)));
    check_minimal(gens)
}

/// A member of the B family with `m = ρ`.
pub fn bclass_instance(rho: usize) -> Result<MonomialIdeal> {
    if rho < 2 {
        return fail("ρ >= 2");
    }
    let r = rho as u32;
    let xs: Vec<u32> = (1..r).rev().collect();
    let ys: Vec<u32> = (1..r).collect();
    family_bclass(r, r, 3, 1, &xs, &ys)
}

/// A member of the non-generic T family with `m = ρ + 2`.
pub fn tnongen_instance(rho: usize) -> Result<MonomialIdeal> {
    if rho < 1 {
        return fail("ρ >= 1");
    }
    let r = rho as u32;
    let pairs: Vec<(u32, u32)> = (1..=r).map(|i| (r + 1 - i, i)).collect();
    family_tnongen(r + 1, r + 1, 3, 1, &pairs)
}

/// A member of the staircase family with `n` generators.
pub fn staircase_instance(n: usize) -> Result<MonomialIdeal> {
    if n < 4 {
        return fail("n >= 4");
    }
    let rho = (n - 3) as u32;
    let pairs: Vec<(u32, u32)> = (1..=rho).map(|i| (i, rho + 1 - i)).collect();
    family_staircase(2, rho + 1, rho + 1, &pairs)
}
