//! Bass series as rational functions with integer coefficients.

use serde::Serialize;

use crate::error::{Error, Result};

use super::KoszulClass;

/// `num(t) / den(t)`, coefficients in ascending degree, `den[0] = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalSeries {
    pub num: Vec<i64>,
    pub den: Vec<i64>,
}

impl RationalSeries {
    pub fn new(num: Vec<i64>, den: Vec<i64>) -> Self {
        RationalSeries { num, den }
    }
}

fn poly_string(c: &[i64]) -> String {
    let mut out = String::new();
    for (k, &a) in c.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let sign = if a < 0 { "-" } else { "+" };
        let abs = a.unsigned_abs();
        let mono = match k {
            0 => abs.to_string(),
            1 if abs == 1 => "t".to_string(),
            1 => format!("{abs}t"),
            _ if abs == 1 => format!("t^{k}"),
            _ => format!("{abs}t^{k}"),
        };
        if out.is_empty() {
            if a < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl std::fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", poly_string(&self.num), poly_string(&self.den))
    }
}

/// The Bass series of a class, with `l = n - 1`.
pub fn bass_series(cls: &KoszulClass, n: usize, m: usize) -> Result<RationalSeries> {
    let (n, m) = (n as i64, m as i64);
    let l = n - 1;
    let s = match *cls {
        KoszulClass::T => RationalSeries::new(vec![m, l, -2, -1, 1], vec![1, -1, -l, -(m - 3), 0, -1]),
        KoszulClass::B => RationalSeries::new(vec![m, l - 2, -1, 0, 1], vec![1, -1, -l, -(m - 1), 1]),
        KoszulClass::G(r) => {
            let r = r as i64;
            RationalSeries::new(vec![m, l - r, -(r - 1), -1, 1], vec![1, -1, -l, -n, 1])
        }
        KoszulClass::H(0, 0) => RationalSeries::new(vec![m, l, 1, -1], vec![1, -1, -l, -m]),
        KoszulClass::H(p, q) => {
            let (p, q) = (p as i64, q as i64);
            RationalSeries::new(vec![m, l - q, -p, -1, 1], vec![1, -1, -l, -(m - p), q])
        }
        KoszulClass::C3 | KoszulClass::Unclassified(_) => return Err(Error::UnsupportedClass(cls.label())),
    };
    Ok(s)
}

/// Power-series coefficients `μ_0..μ_len` of `num / den`.
pub fn expand_series(rs: &RationalSeries, len: usize) -> Vec<i64> {
    assert_eq!(rs.den.first(), Some(&1), "denominator must have constant term 1");
    let mut out: Vec<i64> = Vec::with_capacity(len + 1);
    for k in 0..=len {
        let mut c = rs.num.get(k).copied().unwrap_or(0);
        for j in 1..=k.min(rs.den.len() - 1) {
            c -= rs.den[j] * out[k - j];
        }
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_three_one_discrimination() {
        let b = bass_series(&KoszulClass::B, 5, 2).unwrap();
        assert_eq!(b, RationalSeries::new(vec![2, 2, -1, 0, 1], vec![1, -1, -4, -1, 1]));
        assert_eq!(expand_series(&b, 1), vec![2, 4]);
        let h = bass_series(&KoszulClass::H(1, 1), 5, 2).unwrap();
        assert_eq!(h, RationalSeries::new(vec![2, 3, -1, -1, 1], vec![1, -1, -4, -1, 1]));
        assert_eq!(expand_series(&h, 1), vec![2, 5]);
    }

    #[test]
    fn constant_series() {
        assert_eq!(expand_series(&RationalSeries::new(vec![3], vec![1]), 4), vec![3, 0, 0, 0, 0]);
    }

    #[test]
    fn golod_row() {
        let s = bass_series(&KoszulClass::H(0, 0), 6, 3).unwrap();
        assert_eq!(s.num, vec![3, 5, 1, -1]);
        assert_eq!(expand_series(&s, 1), vec![3, 8]);
    }

    #[test]
    fn no_series_for_complete_intersection() {
        assert!(matches!(bass_series(&KoszulClass::C3, 3, 1), Err(Error::UnsupportedClass(_))));
    }

    #[test]
    fn display() {
        let b = bass_series(&KoszulClass::B, 5, 2).unwrap();
        assert_eq!(b.to_string(), "(2 + 2t - t^2 + t^4) / (1 - t - 4t^2 - t^3 + t^4)");
    }
}
