//! Taylor complex followed by cancellation of unit entries.
//!
//! Level `k` holds the `k`-subsets of generators in dictionary order. The
//! differential `d_k` maps level `k` to level `k-1`. Levels are minimalised
//! bottom-up; inside a level the dictionary-least row carrying a unit is
//! cancelled first, against its dictionary-least unit column. At level 3 this
//! rule keeps exactly the ordered minimal second syzygies.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::{boundary_sign, MultigradedMatrix, Resolution};

struct Level {
    faces: Vec<Vec<usize>>,
    degrees: Vec<Monomial>,
    alive: Vec<bool>,
}

/// Sparse matrix with both column and row access.
struct Differential<F> {
    cols: Vec<BTreeMap<usize, F>>,
    rows: Vec<BTreeSet<usize>>,
}

impl<F: Field> Differential<F> {
    fn new(rows: usize, cols: usize) -> Self {
        Differential { cols: vec![BTreeMap::new(); cols], rows: vec![BTreeSet::new(); rows] }
    }

    fn get(&self, r: usize, c: usize) -> Option<&F> {
        self.cols[c].get(&r)
    }

    fn set(&mut self, r: usize, c: usize, v: F) {
        if v.is_zero() {
            self.cols[c].remove(&r);
            self.rows[r].remove(&c);
        } else {
            self.cols[c].insert(r, v);
            self.rows[r].insert(c);
        }
    }

    fn clear_row(&mut self, r: usize) {
        for c in std::mem::take(&mut self.rows[r]) {
            self.cols[c].remove(&r);
        }
    }

    fn clear_col(&mut self, c: usize) {
        for r in std::mem::take(&mut self.cols[c]).into_keys() {
            self.rows[r].remove(&c);
        }
    }
}

/// k-subsets of `0..n` in dictionary order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Minimal resolution of an Artinian monomial ideal by Taylor complex
/// minimalisation. Fails when `n > taylor_cap`.
pub fn build_resolution<F: Field>(ideal: &MonomialIdeal, taylor_cap: usize) -> Result<Resolution<F>> {
    ideal.require_artinian()?;
    let n = ideal.n();
    if n > taylor_cap {
        return Err(Error::TaylorCap { n, cap: taylor_cap });
    }
    let gens = ideal.generators();

    let mut levels: Vec<Level> = Vec::with_capacity(n + 1);
    let mut lcm_of: HashMap<u32, Monomial> = HashMap::new();
    lcm_of.insert(0, Monomial::ONE);
    for k in 0..=n {
        let faces = subsets(n, k);
        let degrees = faces
            .iter()
            .map(|f| {
                let mask = mask_of(f);
                if let Some(&d) = lcm_of.get(&mask) {
                    return d;
                }
                let last = *f.last().expect("nonempty face");
                let d = lcm_of[&(mask & !(1 << last))].lcm(gens[last]);
                lcm_of.insert(mask, d);
                d
            })
            .collect();
        let alive = vec![true; faces.len()];
        levels.push(Level { faces, degrees, alive });
    }

    // d[k] : level k -> level k-1, for k in 1..=n (d[0] unused)
    let mut d: Vec<Differential<F>> = Vec::with_capacity(n + 1);
    d.push(Differential::new(0, 0));
    for k in 1..=n {
        let index: HashMap<u32, usize> =
            levels[k - 1].faces.iter().enumerate().map(|(i, f)| (mask_of(f), i)).collect();
        let mut diff = Differential::new(levels[k - 1].faces.len(), levels[k].faces.len());
        for (c, face) in levels[k].faces.iter().enumerate() {
            let mask = mask_of(face);
            for (pos, &t) in face.iter().enumerate() {
                let r = index[&(mask & !(1 << t))];
                diff.set(r, c, boundary_sign::<F>(pos));
            }
        }
        d.push(diff);
    }

    for k in 1..=n {
        let rows = levels[k - 1].faces.len();
        for b in 0..rows {
            if !levels[k - 1].alive[b] {
                continue;
            }
            let deg_b = levels[k - 1].degrees[b];
            let pivot_col = d[k].rows[b].iter().copied().find(|&a| levels[k].degrees[a] == deg_b);
            let Some(a) = pivot_col else { continue };
            cancel(&mut d, k, b, a);
            levels[k].alive[a] = false;
            levels[k - 1].alive[b] = false;
        }
    }

    for (k, level) in levels.iter().enumerate().skip(4) {
        if level.alive.iter().any(|&x| x) {
            return Err(Error::Internal(format!("level {k} survived minimalisation")));
        }
    }

    let survivors = |k: usize| -> Vec<usize> {
        if k > n {
            return Vec::new();
        }
        (0..levels[k].faces.len()).filter(|&i| levels[k].alive[i]).collect()
    };
    let s0 = survivors(0);
    let s1 = survivors(1);
    let s2 = survivors(2);
    let s3 = survivors(3);

    let extract = |k: usize, rows: &[usize], cols: &[usize]| -> MultigradedMatrix<F> {
        let rdeg = rows.iter().map(|&r| levels[k - 1].degrees[r]).collect();
        let cdeg = cols.iter().map(|&c| levels[k].degrees[c]).collect();
        let mut mat = MultigradedMatrix::new(rdeg, cdeg);
        if k <= n {
            for (ci, &c) in cols.iter().enumerate() {
                for (ri, &r) in rows.iter().enumerate() {
                    if let Some(v) = d[k].get(r, c) {
                        mat.set(ri, ci, v.clone());
                    }
                }
            }
        }
        mat
    };

    let f1 = extract(1, &s0, &s1);
    let f2 = extract(2, &s1, &s2);
    let f3 = if n >= 3 { extract(3, &s2, &s3) } else { MultigradedMatrix::new(Vec::new(), Vec::new()) };
    let f2_faces = s2.iter().map(|&i| levels[2].faces[i].clone()).collect();
    let f3_faces = if n >= 3 { s3.iter().map(|&i| levels[3].faces[i].clone()).collect() } else { Vec::new() };
    Ok(Resolution { f1, f2, f3, f2_faces, f3_faces })
}

fn mask_of(face: &[usize]) -> u32 {
    face.iter().fold(0u32, |m, &i| m | (1 << i))
}

/// Gaussian cancellation of the unit entry `d_k[b, a]`.
fn cancel<F: Field>(d: &mut [Differential<F>], k: usize, b: usize, a: usize) {
    let c = d[k].get(b, a).expect("pivot present").clone();
    let col_a: Vec<(usize, F)> =
        d[k].cols[a].iter().filter(|(&r, _)| r != b).map(|(&r, v)| (r, v.clone())).collect();
    let row_b: Vec<(usize, F)> = d[k].rows[b]
        .iter()
        .filter(|&&s| s != a)
        .map(|&s| (s, d[k].get(b, s).expect("row index in sync").div(&c)))
        .collect();
    for (s, factor) in &row_b {
        for (r, v) in &col_a {
            let old = d[k].get(*r, *s).cloned().unwrap_or_else(F::zero);
            d[k].set(*r, *s, old.sub(&v.mul(factor)));
        }
    }
    d[k].clear_row(b);
    d[k].clear_col(a);
    if k + 1 < d.len() {
        d[k + 1].clear_row(a);
    }
    if k >= 2 {
        d[k - 1].clear_col(b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf32003, Rational};

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    #[test]
    fn subsets_in_dictionary_order() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn example_three_one_shape() {
        let res: Resolution<Rational> = build_resolution(&ideal("x^3,x^2*y,y^3,z^3,x^2*z^2"), 20).unwrap();
        assert_eq!(res.betti(), [1, 5, 6, 2]);
        assert_eq!(res.f2_faces, vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]);
        // first column of f2 is -y e1 + x e2
        let col = res.f2.column(0);
        assert_eq!(col.len(), 2);
        assert_eq!(col[0].0, 0);
        assert_eq!(col[0].2, Monomial::new(0, 1, 0));
        assert!(col[0].1.is_negative());
        assert_eq!(col[1].2, Monomial::new(1, 0, 0));
    }

    #[test]
    fn example_four_two_shape() {
        let i = ideal("x^5,y^5,z^5,y^3*z^3,x*y^4*z^2,x*y^2*z^4");
        let res: Resolution<Rational> = build_resolution(&i, 20).unwrap();
        assert_eq!(res.betti(), [1, 6, 11, 6]);
        let res_p: Resolution<Gf32003> = build_resolution(&i, 20).unwrap();
        assert_eq!(res_p.betti(), [1, 6, 11, 6]);
    }

    #[test]
    fn complete_intersection_and_cube_of_maximal_ideal() {
        let res: Resolution<Rational> = build_resolution(&ideal("x^2,y^2,z^2"), 20).unwrap();
        assert_eq!(res.betti(), [1, 3, 3, 1]);
        assert_eq!(res.f3.column(0).len(), 3);
        let res: Resolution<Rational> = build_resolution(&ideal("x^2,x*y,x*z,y^2,y*z,z^2"), 20).unwrap();
        assert_eq!(res.betti(), [1, 6, 8, 3]);
    }

    #[test]
    fn cap_is_enforced() {
        let err = build_resolution::<Rational>(&ideal("x^2,y^2,z^2"), 2).unwrap_err();
        assert_eq!(err, Error::TaylorCap { n: 3, cap: 2 });
    }
}
