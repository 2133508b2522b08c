//! Monomials in `k[x, y, z]`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The variables, in the order used for exponent triples and for the
/// Koszul basis `e1, e2, e3`.
pub const VARIABLES: [char; 3] = ['x', 'y', 'z'];

/// `x^ax * y^ay * z^az`. `(0,0,0)` is the unit monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Monomial {
    pub ax: u32,
    pub ay: u32,
    pub az: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ax: 0, ay: 0, az: 0 };

    pub const fn new(ax: u32, ay: u32, az: u32) -> Self {
        Monomial { ax, ay, az }
    }

    /// The monomial `x_v` for variable index `v` in `0..3`.
    pub fn var(v: usize) -> Self {
        let mut e = [0; 3];
        e[v] = 1;
        Monomial::from_exps(e)
    }

    /// `x_v^k`.
    pub fn pure_power(v: usize, k: u32) -> Self {
        let mut e = [0; 3];
        e[v] = k;
        Monomial::from_exps(e)
    }

    pub fn from_exps(e: [u32; 3]) -> Self {
        Monomial { ax: e[0], ay: e[1], az: e[2] }
    }

    pub fn exps(self) -> [u32; 3] {
        [self.ax, self.ay, self.az]
    }

    pub fn exp(self, v: usize) -> u32 {
        self.exps()[v]
    }

    pub fn degree(self) -> u32 {
        self.ax + self.ay + self.az
    }

    pub fn is_one(self) -> bool {
        self == Monomial::ONE
    }

    /// Number of variables with positive exponent.
    pub fn support_size(self) -> usize {
        self.exps().iter().filter(|&&e| e > 0).count()
    }

    /// `Some(v)` when the monomial is a positive power of the single
    /// variable `x_v`.
    pub fn pure_power_var(self) -> Option<usize> {
        let e = self.exps();
        match self.support_size() {
            1 => e.iter().position(|&k| k > 0),
            _ => None,
        }
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.ax + other.ax, self.ay + other.ay, self.az + other.az)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial::new(self.ax - other.ax, self.ay - other.ay, self.az - other.az))
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.ax.max(other.ax), self.ay.max(other.ay), self.az.max(other.az))
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial::new(self.ax.min(other.ax), self.ay.min(other.ay), self.az.min(other.az))
    }

    /// Componentwise `self <= other`.
    pub fn divides(self, other: Monomial) -> bool {
        self.ax <= other.ax && self.ay <= other.ay && self.az <= other.az
    }

    /// Divides and is not equal.
    pub fn strictly_divides(self, other: Monomial) -> bool {
        self.divides(other) && self != other
    }

    /// `self` divides `other / x_v` for every variable `x_v` dividing `other`.
    pub fn strongly_divides(self, other: Monomial) -> bool {
        let (a, b) = (self.exps(), other.exps());
        (0..3).all(|v| {
            (0..3).all(|w| {
                if b[w] == 0 {
                    return true;
                }
                let bound = if v == w { b[v] - 1 } else { b[v] };
                a[v] <= bound
            })
        })
    }
}

/// Free function form of [`Monomial::lcm`].
pub fn lcm(m1: Monomial, m2: Monomial) -> Monomial {
    m1.lcm(m2)
}

pub fn divides(m1: Monomial, m2: Monomial) -> bool {
    m1.divides(m2)
}

pub fn strictly_divides(m1: Monomial, m2: Monomial) -> bool {
    m1.strictly_divides(m2)
}

pub fn strongly_divides(m1: Monomial, m2: Monomial) -> bool {
    m1.strongly_divides(m2)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.exps().into_iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VARIABLES[v])?;
            } else {
                write!(f, "{}^{}", VARIABLES[v], e)?;
            }
        }
        Ok(())
    }
}
