//! Truncated generating function of area and depth over profile multisets.
//!
//! A [`ProfileSeries`] stores, for each multiset `M` of up-step degrees, the
//! polynomial multiplying `z^|M| * prod_k p_k^(M_k)`. Decomposing a tree at
//! its root, a root with `k + 1` children marks `z * p_k`, and every internal
//! node under its `l`-th child gains `l - 1` left thorns (a factor of `t`)
//! and `k + 1 - l` right thorns (a factor of `q`):
//!
//! ```text
//! F(z) = 1 + z * sum_k p_k * prod_{l=1}^{k+1} F(z * q^(k+1-l) * t^(l-1))
//! ```

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::multiset::DegreeMultiset;
use crate::poly::{c_tilde, QtPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileSeries {
    order: usize,
    max_degree: u32,
    coeffs: BTreeMap<DegreeMultiset, QtPolynomial>,
}

impl ProfileSeries {
    pub fn zero(order: usize, max_degree: u32) -> Self {
        ProfileSeries { order, max_degree, coeffs: BTreeMap::new() }
    }

    pub fn one(order: usize, max_degree: u32) -> Self {
        let mut s = Self::zero(order, max_degree);
        s.add_coeff(DegreeMultiset::new(), &QtPolynomial::one());
        s
    }

    /// `z * p_degree` (zero when truncated away).
    pub fn marker(order: usize, max_degree: u32, degree: u32) -> Self {
        let mut s = Self::zero(order, max_degree);
        s.add_coeff(DegreeMultiset::from_counts([(degree, 1)]), &QtPolynomial::one());
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn coeff(&self, multiset: &DegreeMultiset) -> QtPolynomial {
        self.coeffs.get(multiset).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients.
    pub fn coeffs(&self) -> impl Iterator<Item = (&DegreeMultiset, &QtPolynomial)> + '_ {
        self.coeffs.iter()
    }

    fn admits(&self, multiset: &DegreeMultiset) -> bool {
        multiset.size() <= self.order && multiset.max_degree().is_none_or(|k| k <= self.max_degree)
    }

    /// Adds `poly` at `multiset`, dropping it if outside the truncation.
    pub fn add_coeff(&mut self, multiset: DegreeMultiset, poly: &QtPolynomial) {
        if poly.is_zero() || !self.admits(&multiset) {
            return;
        }
        *self.coeffs.entry(multiset).or_default() += poly;
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut out = self.clone();
        for (m, p) in &other.coeffs {
            out.add_coeff(m.clone(), p);
        }
        out
    }

    /// Cauchy product over multiset unions, truncated at the order.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut out = Self::zero(self.order, self.max_degree);
        for (left, a) in &self.coeffs {
            for (right, b) in &other.coeffs {
                if left.size() + right.size() > self.order {
                    continue;
                }
                out.add_coeff(left.union(right), &(a * b));
            }
        }
        out
    }

    /// Substitutes `z -> z * q^qe * t^te`: the coefficient at `M` gains
    /// `q^(qe*|M|) * t^(te*|M|)`.
    pub fn substitute_z(&self, qe: u32, te: u32) -> Self {
        let mut out = self.clone();
        for (m, p) in out.coeffs.iter_mut() {
            let size = m.size() as u32;
            *p = p.mono_mul(qe * size, te * size);
        }
        out
    }

    /// Restriction to multisets of size at most `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut out = Self::zero(order.min(self.order), self.max_degree);
        for (m, p) in &self.coeffs {
            out.add_coeff(m.clone(), p);
        }
        out
    }

    /// One application of the root decomposition to `self`.
    pub fn iterate(&self) -> Self {
        let mut next = Self::one(self.order, self.max_degree);
        for k in 0..=self.max_degree {
            let mut term = Self::marker(self.order, self.max_degree, k);
            for l in 1..=k + 1 {
                if term.coeffs.is_empty() {
                    break;
                }
                term = term.mul(&self.substitute_z(k + 1 - l, l - 1));
            }
            next = next.add(&term);
        }
        next
    }

    /// Fixed point of [`ProfileSeries::iterate`] starting from `1`.
    pub fn solve(order: usize, max_degree: u32) -> Self {
        let mut current = Self::one(order, max_degree);
        // Iterate m is exact up to size m, so order + 1 rounds reach the fixed point.
        for _ in 0..=order {
            let next = current.iterate();
            if next == current {
                break;
            }
            current = next;
        }
        current
    }

    /// Every multiset in range whose coefficient differs from the enumerated
    /// polynomial.
    pub fn mismatches(&self) -> Vec<SeriesMismatch> {
        DegreeMultiset::all_up_to(self.order, self.max_degree)
            .into_iter()
            .filter_map(|m| {
                let series = self.coeff(&m);
                let enumerated = c_tilde(&m, None, None);
                (series != enumerated).then_some(SeriesMismatch { multiset: m, series, enumerated })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialize")
    }

    fn check_shape(&self, other: &Self) {
        assert_eq!(
            (self.order, self.max_degree),
            (other.order, other.max_degree),
            "series truncations differ"
        );
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub multiset: DegreeMultiset,
    pub series: QtPolynomial,
    pub enumerated: QtPolynomial,
}

/// Solves the recursion at the given truncation and compares each
/// coefficient against enumeration. Empty on success.
pub fn verify_series(order: usize, max_degree: u32) -> Vec<SeriesMismatch> {
    ProfileSeries::solve(order, max_degree).mismatches()
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    multiset: String,
    poly: &'a QtPolynomial,
}

/// Array of `{"multiset", "poly"}` sorted by size, then multiset text.
impl Serialize for ProfileSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut entries: Vec<(usize, String, &QtPolynomial)> = self
            .coeffs
            .iter()
            .map(|(m, p)| (m.size(), m.to_string(), p))
            .collect();
        entries.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let mut seq = serializer.serialize_seq(Some(entries.len()))?;
        for (_, multiset, poly) in entries {
            seq.serialize_element(&JsonEntry { multiset, poly })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> DegreeMultiset {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> QtPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn mul_identity_and_binomial() {
        let a = ProfileSeries::solve(3, 2);
        assert_eq!(ProfileSeries::one(3, 2).mul(&a), a);
        let x = ProfileSeries::one(3, 2).add(&ProfileSeries::marker(3, 2, 1));
        let sq = x.mul(&x);
        // (1 + x)^2 = 1 + 2x + x^2
        assert_eq!(sq.coeff(&m("")), poly("1"));
        assert_eq!(sq.coeff(&m("1:1")), poly("2"));
        assert_eq!(sq.coeff(&m("1:2")), poly("1"));
        let x = ProfileSeries::one(1, 2).add(&ProfileSeries::marker(1, 2, 1));
        assert!(x.mul(&x).coeffs().all(|(m, _)| m.size() <= 1));
    }

    #[test]
    fn substitution() {
        let a = ProfileSeries::solve(3, 2);
        assert_eq!(a.substitute_z(0, 0), a);
        assert_eq!(a.substitute_z(1, 0).substitute_z(0, 1), a.substitute_z(1, 1));
        let x = ProfileSeries::one(2, 1).add(&ProfileSeries::marker(2, 1, 1));
        assert_eq!(x.substitute_z(1, 0).coeff(&m("1:1")), QtPolynomial::q());
    }

    #[test]
    fn solve_small_orders() {
        let f0 = ProfileSeries::solve(0, 3);
        assert_eq!(f0.coeffs().count(), 1);
        assert_eq!(f0.coeff(&m("")), QtPolynomial::one());

        let f1 = ProfileSeries::solve(1, 2);
        for k in 0..=2 {
            assert_eq!(f1.coeff(&DegreeMultiset::from_counts([(k, 1)])), QtPolynomial::one());
        }

        let f2 = ProfileSeries::solve(2, 2);
        assert_eq!(f2.coeff(&m("1:2")), poly("q + t"));
        assert_eq!(f2.coeff(&m("0:1,1:1")), poly("1 + q + t"));
    }

    #[test]
    fn stationary_and_truncation_consistent() {
        let f = ProfileSeries::solve(4, 2);
        assert_eq!(f.iterate(), f);
        for order in 0..4 {
            assert_eq!(f.truncate(order), ProfileSeries::solve(order, 2));
        }
    }

    #[test]
    fn verify_small() {
        assert!(verify_series(2, 2).is_empty());
        assert!(verify_series(3, 3).is_empty());
    }

    #[test]
    fn json_order() {
        let json = ProfileSeries::solve(2, 1).to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["multiset"].as_str().unwrap()).collect();
        assert_eq!(keys, vec!["", "0:1", "1:1", "0:1,1:1", "0:2", "1:2"]);
    }
}
