//! Exact sparse polynomials in `q` and `t` with nonnegative integer
//! coefficients, and the area/depth polynomials summed over path families.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::enumerate::{paths_with_multiset, paths_with_profile};
use crate::error::{Error, Result};
use crate::multiset::DegreeMultiset;
use crate::path::Profile;

/// `q^q * t^t`. Orders by `q` descending, then `t` ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub q: u32,
    pub t: u32,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.q.cmp(&self.q).then(self.t.cmp(&other.t))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QtPolynomial {
    terms: BTreeMap<Monomial, BigUint>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(q: u32, t: u32) -> Self {
        Self::term(q, t, BigUint::one())
    }

    pub fn term(q: u32, t: u32, coeff: BigUint) -> Self {
        let mut p = Self::zero();
        p.add_term(q, t, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigUint)> + '_ {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigUint {
        self.terms.get(&Monomial { q, t }).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, q: u32, t: u32, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry(Monomial { q, t }).or_default() += coeff;
    }

    pub fn add_monomial(&mut self, q: u32, t: u32) {
        self.add_term(q, t, BigUint::one());
    }

    /// Multiplies by `q^qe * t^te`.
    pub fn mono_mul(&self, qe: u32, te: u32) -> Self {
        QtPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { q: m.q + qe, t: m.t + te }, c.clone()))
                .collect(),
        }
    }

    /// Exchanges the exponents of `q` and `t` in every term.
    pub fn swap_qt(&self) -> Self {
        QtPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { q: m.t, t: m.q }, c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| self.terms.get(&Monomial { q: m.t, t: m.q }) == Some(c))
    }

    pub fn eval(&self, q: u64, t: u64) -> BigUint {
        let q = BigUint::from(q);
        let t = BigUint::from(t);
        self.terms
            .iter()
            .map(|(m, c)| c * q.pow(m.q) * t.pow(m.t))
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomials serialize")
    }
}

impl AddAssign<&QtPolynomial> for QtPolynomial {
    fn add_assign(&mut self, rhs: &QtPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.q, m.t, c.clone());
        }
    }
}

impl Add for &QtPolynomial {
    type Output = QtPolynomial;

    fn add(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QtPolynomial {
    type Output = QtPolynomial;

    fn add(mut self, rhs: QtPolynomial) -> QtPolynomial {
        self += &rhs;
        self
    }
}

impl Mul for &QtPolynomial {
    type Output = QtPolynomial;

    fn mul(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.q + b.q, a.t + b.t, ca * cb);
            }
        }
        out
    }
}

impl Mul for QtPolynomial {
    type Output = QtPolynomial;

    fn mul(self, rhs: QtPolynomial) -> QtPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for QtPolynomial {
    fn sum<I: Iterator<Item = QtPolynomial>>(iter: I) -> Self {
        iter.fold(QtPolynomial::zero(), Add::add)
    }
}

/// Terms joined by `" + "`, each as `c*q^a*t^b` with unit coefficients,
/// unit exponents and absent variables left out. The zero polynomial is `0`.
impl fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if !c.is_one() || (m.q == 0 && m.t == 0) {
                factors.push(c.to_string());
            }
            for (name, e) in [("q", m.q), ("t", m.t)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for QtPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Polynomial(format!("{what} in {s:?}"));
        let mut poly = QtPolynomial::zero();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = BigUint::one();
            let (mut q, mut t) = (0u32, 0u32);
            for factor in term.split('*').map(str::trim) {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b.trim(), e.trim().parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                match base {
                    "q" => q += exp,
                    "t" => t += exp,
                    digits if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
                        let c: BigUint = digits.parse().map_err(|_| bad("bad coefficient"))?;
                        coeff *= c.pow(exp);
                    }
                    _ => return Err(bad("unknown factor")),
                }
            }
            poly.add_term(q, t, coeff);
        }
        Ok(poly)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    q: u32,
    t: u32,
    c: String,
}

/// Array of `{"q", "t", "c"}` in canonical order, with `c` a decimal string.
impl Serialize for QtPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&JsonTerm { q: m.q, t: m.t, c: c.to_string() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QtPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let mut poly = QtPolynomial::zero();
        for term in Vec::<JsonTerm>::deserialize(deserializer)? {
            let c: BigUint = term.c.parse().map_err(serde::de::Error::custom)?;
            poly.add_term(term.q, term.t, c);
        }
        Ok(poly)
    }
}

/// Sum of `q^area * t^depth` over the paths selected as in
/// [`paths_with_multiset`]: all of `multiset`, plus a forced first and/or
/// last up-step.
pub fn c_tilde(multiset: &DegreeMultiset, first: Option<u32>, last: Option<u32>) -> QtPolynomial {
    let mut poly = QtPolynomial::zero();
    for path in paths_with_multiset(multiset, first, last) {
        poly.add_monomial(path.area() as u32, path.depth() as u32);
    }
    poly
}

/// Sum of `q^area * t^depth` over the paths with the given profile.
pub fn c_tilde_profile(profile: &Profile) -> QtPolynomial {
    let mut poly = QtPolynomial::zero();
    for path in paths_with_profile(profile) {
        poly.add_monomial(path.area() as u32, path.depth() as u32);
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> QtPolynomial {
        s.parse().unwrap()
    }

    fn m(s: &str) -> DegreeMultiset {
        s.parse().unwrap()
    }

    #[test]
    fn ring_operations() {
        let q = QtPolynomial::q();
        let t = QtPolynomial::t();
        assert_eq!(&q + &t, poly("q + t"));
        assert_eq!(&(&q + &t) * &QtPolynomial::one(), poly("q + t"));
        assert_eq!((&q + &t).mono_mul(1, 1), poly("q^2*t + q*t^2"));
        assert_eq!(&(&q + &t) * &(&q + &t), poly("q^2 + 2*q*t + t^2"));
        assert!((&q * &QtPolynomial::zero()).is_zero());
    }

    #[test]
    fn large_coefficients_stay_exact() {
        let big = QtPolynomial::term(0, 0, BigUint::from(u64::MAX));
        let square = &big * &big;
        assert_eq!(square.coeff(0, 0), BigUint::from(u64::MAX) * BigUint::from(u64::MAX));
    }

    #[test]
    fn symmetry() {
        assert_eq!(poly("q^2 + t").swap_qt(), poly("t^2 + q"));
        assert!(poly("q + t").is_symmetric());
        assert!(!poly("q^2 + t").is_symmetric());
        assert!(!poly("2*q + t").is_symmetric());
        assert!(QtPolynomial::zero().is_symmetric());
    }

    #[test]
    fn text_format() {
        assert_eq!(poly("t^3 + q*t + q^3 + q*t^2 + q^2*t").to_string(), "q^3 + q^2*t + q*t + q*t^2 + t^3");
        assert_eq!(poly("1 + q + t").to_string(), "q + 1 + t");
        assert_eq!(poly("7").to_string(), "7");
        assert_eq!(poly("3*q^2*t^4").to_string(), "3*q^2*t^4");
        assert_eq!(QtPolynomial::zero().to_string(), "0");
        assert!(poly("0").is_zero());
        for bad in ["", "q +", "x", "q^", "q^-1"] {
            assert!(bad.parse::<QtPolynomial>().is_err(), "{bad}");
        }
    }

    #[test]
    fn json_format() {
        let p = poly("q + t + 2");
        assert_eq!(
            p.to_json(),
            r#"[{"q":1,"t":0,"c":"1"},{"q":0,"t":0,"c":"2"},{"q":0,"t":1,"c":"1"}]"#
        );
        assert_eq!(serde_json::from_str::<QtPolynomial>(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn c_tilde_examples() {
        assert_eq!(c_tilde(&m(""), None, None), QtPolynomial::one());
        assert_eq!(c_tilde(&m(""), Some(1), Some(1)), poly("q + t"));
        assert_eq!(c_tilde(&m("1:2"), None, None), poly("q + t"));
        assert_eq!(c_tilde(&m("1:3"), None, None), poly("q^3 + q^2*t + q*t^2 + q*t + t^3"));
        assert_eq!(c_tilde(&m("0:1,1:1"), None, None), poly("1 + q + t"));
    }

    #[test]
    fn c_tilde_profile_examples() {
        assert_eq!(c_tilde_profile(&Profile::default()), QtPolynomial::one());
        assert_eq!(c_tilde_profile(&vec![1, 1].into()), poly("q + t"));
        assert_eq!(c_tilde_profile(&vec![0, 1].into()), QtPolynomial::one());
    }

    #[test]
    fn eval_counts_paths() {
        let p = c_tilde(&m("1:3"), None, None);
        assert_eq!(p.eval(1, 1), BigUint::from(5u32));
        assert_eq!(p.eval(2, 0), BigUint::from(8u32));
    }
}
