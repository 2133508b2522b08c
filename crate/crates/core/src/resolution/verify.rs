//! Sanity checks on a resolution.

use std::fmt;

use serde::Serialize;

use crate::field::Field;
use crate::ideal::MonomialIdeal;

use super::Resolution;

/// Pass/fail per check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionCheck {
    pub d_squared_zero: bool,
    pub homogeneous: bool,
    pub minimal: bool,
    /// `rank f2 = rank f1 + rank f3 - 1` and the Euler characteristic vanishes.
    pub euler: bool,
    /// `sum (-1)^i sum_b t^|b| = (1-t)^3 H_R(t)` coefficientwise.
    pub k_polynomial: bool,
    /// `f1` is the row of generators of `I`.
    pub generators: bool,
}

impl ResolutionCheck {
    pub fn all_pass(&self) -> bool {
        self.d_squared_zero && self.homogeneous && self.minimal && self.euler && self.k_polynomial && self.generators
    }
}

impl fmt::Display for ResolutionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        write!(
            f,
            "d^2=0 {}, homogeneous {}, minimal {}, euler {}, k-polynomial {}, generators {}",
            mark(self.d_squared_zero),
            mark(self.homogeneous),
            mark(self.minimal),
            mark(self.euler),
            mark(self.k_polynomial),
            mark(self.generators)
        )
    }
}

fn add_degree(poly: &mut Vec<i64>, deg: u32, sign: i64) {
    let d = deg as usize;
    if poly.len() <= d {
        poly.resize(d + 1, 0);
    }
    poly[d] += sign;
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn verify_resolution<F: Field>(res: &Resolution<F>, ideal: &MonomialIdeal) -> ResolutionCheck {
    let mats = [&res.f1, &res.f2, &res.f3];
    let d_squared_zero = res.f1.composes_to_zero(&res.f2) && res.f2.composes_to_zero(&res.f3);
    let homogeneous = mats.iter().all(|m| m.is_homogeneous());
    let minimal = mats.iter().all(|m| m.is_minimal());
    let [b0, b1, b2, b3] = res.betti();
    let chained = res.f1.cols() == res.f2.rows() && res.f2.cols() == res.f3.rows();
    let euler = chained && b0 == 1 && b2 + 1 == b1 + b3;

    let mut generators = res.f1.col_degrees.as_slice() == ideal.generators();
    generators &= res.f1.row_degrees.iter().all(|d| d.is_one());

    let mut lhs: Vec<i64> = Vec::new();
    add_degree(&mut lhs, 0, 1);
    for (i, m) in mats.iter().enumerate() {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        for d in &m.col_degrees {
            add_degree(&mut lhs, d.degree(), sign);
        }
    }
    let k_polynomial = match ideal.standard_monomials(usize::MAX) {
        Ok(basis) => {
            let mut hilbert: Vec<i64> = Vec::new();
            for u in &basis.monomials {
                add_degree(&mut hilbert, u.degree(), 1);
            }
            // multiply by (1-t)^3
            let mut rhs = hilbert;
            for _ in 0..3 {
                let mut next = vec![0; rhs.len() + 1];
                for (k, c) in rhs.iter().enumerate() {
                    next[k] += c;
                    next[k + 1] -= c;
                }
                rhs = next;
            }
            trim(lhs) == trim(rhs)
        }
        Err(_) => false,
    };

    ResolutionCheck { d_squared_zero, homogeneous, minimal, euler, k_polynomial, generators }
}
