//! Polynomials in `u`, `v` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde_json::{json, Value};

use crate::triangle::TriangleEntry;

/// Sparse map from `(deg_u, deg_v)` to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, du: u32, dv: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((du, dv), c);
        }
        BivarPoly { terms }
    }

    pub fn u() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn coeff(&self, du: u32, dv: u32) -> BigInt {
        self.terms.get(&(du, dv)).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order: total degree, then `u`-degree, descending.
    pub fn terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut out: Vec<_> = self.terms.iter().map(|(&(a, b), c)| (a, b, c.clone())).collect();
        out.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        out
    }

    pub fn eval(&self, u: &BigInt, v: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * Pow::pow(u, a) * Pow::pow(v, b))
            .sum()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BivarPoly::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .into_iter()
                .map(|(a, b, c)| json!({"u": a, "v": b, "c": c.to_string()}))
                .collect(),
        )
    }
}

impl Zero for BivarPoly {
    fn zero() -> Self {
        BivarPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BivarPoly {
    fn one() -> Self {
        BivarPoly::constant(1)
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: BivarPoly) -> BivarPoly {
        &self + &rhs
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;

    fn neg(mut self) -> BivarPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: BivarPoly) -> BivarPoly {
        self + (-rhs)
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl Sum for BivarPoly {
    fn sum<I: Iterator<Item = BivarPoly>>(iter: I) -> Self {
        iter.fold(BivarPoly::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (a, b, c)) in self.terms().into_iter().enumerate() {
            let neg = c < BigInt::zero();
            let mag = if neg { -c } else { c };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (name, d) in [("u", a), ("v", b)] {
                match d {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{d}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl TriangleEntry for BivarPoly {
    fn to_json(&self) -> Value {
        BivarPoly::to_json(self)
    }

    fn to_text(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn arithmetic() {
        let u = BivarPoly::u();
        let v = BivarPoly::v();
        let one = BivarPoly::one();
        let two_minus_u_plus_v = BivarPoly::constant(2) - u.clone() + v.clone();
        let prod = &(&one + &v) * &two_minus_u_plus_v;
        assert_eq!(prod.eval(&n(1), &n(1)), n(4));
        assert_eq!(two_minus_u_plus_v.pow(0), one);
        let p = &(&u * &u) + &(&v + &one);
        assert_eq!(p.eval(&n(1), &n(1)), n(3));
        assert_eq!(p.to_string(), "u^2 + v + 1");
        assert_eq!((u.clone() - u.clone()), BivarPoly::zero());
        assert_eq!((-(u.clone() * v.clone()) + one.clone()).to_string(), "-u*v + 1");
        assert_eq!(BivarPoly::zero().to_string(), "0");
    }

    #[test]
    fn graded_lex_serialization() {
        let p = BivarPoly::u().pow(2) + BivarPoly::v() + BivarPoly::one() + BivarPoly::monomial(-3, 1, 1);
        let keys: Vec<(u32, u32)> = p.terms().iter().map(|t| (t.0, t.1)).collect();
        assert_eq!(keys, [(2, 0), (1, 1), (0, 1), (0, 0)]);
        assert_eq!(p.to_json()[1], json!({"u": 1, "v": 1, "c": "-3"}));
    }
}
