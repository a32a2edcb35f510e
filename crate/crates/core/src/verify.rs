//! Exhaustive verification of the bijections, involutions, and q,t-symmetry
//! properties over every path up to a given length.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::enumerate::{all_paths_up_to, paths_with_multiset};
use crate::involution::{lodestar_involution, mirror_involution};
use crate::multiset::DegreeMultiset;
use crate::path::{LukasPath, Profile};
use crate::poly::{c_tilde, c_tilde_profile, QtPolynomial};
use crate::series::ProfileSeries;
use crate::tree::PlaneTree;

/// Bounds for [`run`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub max_steps: usize,
    pub series_order: usize,
    pub series_degree: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_steps: 12, series_order: 5, series_degree: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs `test` on every item, keeping the first counterexample.
pub fn check_all<T, I, F>(name: &str, items: I, mut test: F) -> CheckResult
where
    I: IntoIterator<Item = T>,
    F: FnMut(T) -> Result<(), String>,
{
    let mut instances = 0;
    let mut counterexample = None;
    for item in items {
        instances += 1;
        if let Err(msg) = test(item) {
            counterexample.get_or_insert(msg);
        }
    }
    CheckResult { name: name.to_string(), instances, passed: counterexample.is_none(), counterexample }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Catalan numbers by `C_{n+1} = sum_i C_i C_{n-i}`.
pub fn catalan_numbers(up_to: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for n in 0..up_to {
        c.push((0..=n).map(|i| c[i] * c[n - i]).sum());
    }
    c
}

pub fn bijection_checks(paths: &[LukasPath], trees: &[PlaneTree]) -> Vec<CheckResult> {
    vec![
        check_all("tree_path_tree_round_trip", trees, |t| {
            expect(PlaneTree::from_path(&t.to_path()) == *t, || format!("tree {t}"))
        }),
        check_all("path_tree_path_round_trip", paths, |p| {
            expect(PlaneTree::from_path(p).to_path() == *p, || format!("path {p}"))
        }),
    ]
}

pub fn statistic_checks(paths: &[LukasPath]) -> Vec<CheckResult> {
    vec![
        check_all("area_vector_is_rthorn", paths, |p| {
            let thorns = PlaneTree::from_path(p).thorns();
            let rthorn: Vec<u64> = thorns.per_node.iter().map(|n| n.rthorn).collect();
            expect(p.area_vector().entries() == rthorn, || format!("path {p}"))
        }),
        check_all("depth_vector_is_lthorn", paths, |p| {
            let thorns = PlaneTree::from_path(p).thorns();
            let lthorn: Vec<u64> = thorns.per_node.iter().map(|n| n.lthorn).collect();
            expect(p.depth_vector().entries() == lthorn, || format!("path {p}"))
        }),
        check_all("scan_matching_equals_ray_matching", paths, |p| {
            expect(p.match_downs() == p.match_downs_by_ray(), || format!("path {p}"))
        }),
    ]
}

pub fn tree_map_checks(trees: &[PlaneTree]) -> Vec<CheckResult> {
    vec![
        check_all("mirror_exchanges_thorns", trees, |t| {
            let (a, b) = (t.thorns(), t.mirror().thorns());
            expect(a.lthorn == b.rthorn && a.rthorn == b.lthorn && t.mirror().mirror() == *t, || {
                format!("tree {t}")
            })
        }),
        check_all("lodestar_swap_preserves_thorns_and_degrees", trees, |t| {
            let s = t.lodestar_swap();
            let (a, b) = (t.thorns(), s.thorns());
            expect(
                a.lthorn == b.lthorn
                    && a.rthorn == b.rthorn
                    && t.internal_degree_multiset() == s.internal_degree_multiset(),
                || format!("tree {t}"),
            )
        }),
        check_all("lodestar_swap_is_involution", trees, |t| {
            expect(t.lodestar_swap().lodestar_swap() == *t, || format!("tree {t}"))
        }),
        check_all("right_lodestar_degree_irrelevant", trees, |t| {
            let Some(stars) = t.lodestars() else { return Ok(()) };
            let base = t.thorns().per_node;
            let degree = t.get(&stars.right).unwrap().degree();
            for other in (1..=degree + 2).filter(|&d| d != degree) {
                let mut changed = t.clone();
                *changed.get_mut(&stars.right).unwrap() = PlaneTree::star(other);
                if changed.thorns().per_node != base {
                    return Err(format!("tree {t}, right lodestar degree {degree} -> {other}"));
                }
            }
            Ok(())
        }),
    ]
}

pub fn involution_checks(paths: &[LukasPath]) -> Vec<CheckResult> {
    vec![
        check_all("mirror_involution", paths, |p| {
            let image = mirror_involution(p);
            expect(
                mirror_involution(&image) == *p
                    && image.area() == p.depth()
                    && image.depth() == p.area()
                    && image.first_up_degree() == p.first_up_degree()
                    && image.profile_multiset() == p.profile_multiset(),
                || format!("path {p} -> {image}"),
            )
        }),
        check_all("lodestar_involution", paths, |p| {
            let image = lodestar_involution(p);
            expect(
                lodestar_involution(&image) == *p
                    && image.area() == p.depth()
                    && image.depth() == p.area()
                    && image.first_up_degree() == p.first_up_degree()
                    && image.last_up_degree() == p.last_up_degree()
                    && image.profile_multiset() == p.profile_multiset(),
                || format!("path {p} -> {image}"),
            )
        }),
    ]
}

/// Area/depth polynomial of each profile multiset, summed over `paths`.
pub fn group_by_multiset(paths: &[LukasPath]) -> BTreeMap<DegreeMultiset, QtPolynomial> {
    let mut groups: BTreeMap<DegreeMultiset, QtPolynomial> = BTreeMap::new();
    for p in paths {
        groups
            .entry(p.profile_multiset())
            .or_default()
            .add_monomial(p.area() as u32, p.depth() as u32);
    }
    groups
}

fn describe(m: &DegreeMultiset, first: Option<u32>, last: Option<u32>) -> String {
    let mut s = format!("multiset {{{m}}}");
    if let Some(a) = first {
        s += &format!(" first {a}");
    }
    if let Some(b) = last {
        s += &format!(" last {b}");
    }
    s
}

/// Symmetry checks over every multiset realized by `paths`. `groups` is the
/// exhaustive tally from [`group_by_multiset`].
pub fn symmetry_checks(groups: &BTreeMap<DegreeMultiset, QtPolynomial>) -> Vec<CheckResult> {
    let multisets: Vec<&DegreeMultiset> = groups.keys().collect();
    let firsts: Vec<(DegreeMultiset, u32)> = multisets
        .iter()
        .flat_map(|m| m.distinct().map(move |a| (m.without(a).unwrap(), a)))
        .collect();
    let pairs: Vec<(DegreeMultiset, u32, u32)> = firsts
        .iter()
        .flat_map(|(rest, a)| rest.distinct().map(move |b| (rest.without(b).unwrap(), *a, b)))
        .collect();

    vec![
        check_all("enumeration_matches_exhaustive", groups, |(m, poly)| {
            expect(c_tilde(m, None, None) == *poly, || describe(m, None, None))
        }),
        check_all("count_equals_polynomial_at_one", groups, |(m, _)| {
            let count = paths_with_multiset(m, None, None).count();
            expect(c_tilde(m, None, None).eval(1, 1) == BigUint::from(count), || describe(m, None, None))
        }),
        check_all("symmetric_unconstrained", &multisets, |m| {
            expect(c_tilde(m, None, None).is_symmetric(), || describe(m, None, None))
        }),
        check_all("symmetric_first_fixed", &firsts, |(m, a)| {
            expect(c_tilde(m, Some(*a), None).is_symmetric(), || describe(m, Some(*a), None))
        }),
        check_all("symmetric_last_fixed", &firsts, |(m, b)| {
            expect(c_tilde(m, None, Some(*b)).is_symmetric(), || describe(m, None, Some(*b)))
        }),
        check_all("symmetric_first_and_last_fixed", &pairs, |(m, a, b)| {
            expect(c_tilde(m, Some(*a), Some(*b)).is_symmetric(), || describe(m, Some(*a), Some(*b)))
        }),
        // A lone up-step is both first and last, so the split needs |M| >= 1.
        check_all(
            "last_fixed_splits_over_first",
            firsts.iter().filter(|(m, _)| !m.is_empty()),
            |(m, b)| {
                let split: QtPolynomial = m
                    .distinct()
                    .map(|a| c_tilde(&m.without(a).unwrap(), Some(a), Some(*b)))
                    .sum();
                expect(c_tilde(m, None, Some(*b)) == split, || describe(m, None, Some(*b)))
            },
        ),
    ]
}

/// Path counts for `{1^n}` against Catalan numbers, `n <= max_n`.
pub fn catalan_check(max_n: usize) -> CheckResult {
    let catalan = catalan_numbers(max_n);
    check_all("dyck_counts_are_catalan", 0..=max_n, |n| {
        let m = DegreeMultiset::from_counts([(1, n as u32)]);
        let count = paths_with_multiset(&m, None, None).count() as u64;
        expect(count == catalan[n], || format!("n={n}: {count} paths, expected {}", catalan[n]))
    })
}

/// Every profile of length at most `max_len` with entries at most `max_entry`.
pub fn profiles_up_to(max_len: usize, max_entry: u32) -> Vec<Profile> {
    let mut out = vec![Profile::default()];
    let mut layer = vec![Profile::default()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|p| (0..=max_entry).map(move |k| p.extended(k)))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn profile_checks(max_len: usize, max_entry: u32) -> Vec<CheckResult> {
    let prefixes = profiles_up_to(max_len, max_entry);
    let triples: Vec<Profile> = prefixes.iter().filter(|p| p.len() == 3).cloned().collect();
    vec![
        check_all("last_up_degree_irrelevant", &prefixes, |k| {
            let base = c_tilde_profile(&k.extended(0));
            for a in 1..=max_entry {
                if c_tilde_profile(&k.extended(a)) != base {
                    return Err(format!("profile ({k}) extended by 0 vs {a}"));
                }
            }
            Ok(())
        }),
        check_all("length_three_profiles_symmetric", &triples, |k| {
            expect(c_tilde_profile(k).is_symmetric(), || format!("profile ({k})"))
        }),
    ]
}

pub fn series_check(order: usize, max_degree: u32) -> CheckResult {
    let series = ProfileSeries::solve(order, max_degree);
    let all = DegreeMultiset::all_up_to(order, max_degree);
    check_all("series_matches_enumeration", &all, |m| {
        expect(series.coeff(m) == c_tilde(m, None, None), || describe(m, None, None))
    })
}

/// Runs every check. Profile checks use lengths up to 4 and entries up to 3;
/// the Catalan check covers `n <= 8`.
pub fn run(config: VerifyConfig) -> VerifyReport {
    let paths = all_paths_up_to(config.max_steps);
    let trees: Vec<PlaneTree> = (1..=config.max_steps).flat_map(PlaneTree::all_with_nodes).collect();
    let groups = group_by_multiset(&paths);

    let mut checks = Vec::new();
    checks.extend(bijection_checks(&paths, &trees));
    checks.extend(statistic_checks(&paths));
    checks.extend(tree_map_checks(&trees));
    checks.extend(involution_checks(&paths));
    checks.extend(symmetry_checks(&groups));
    checks.push(catalan_check(8));
    checks.extend(profile_checks(4, 3));
    checks.push(series_check(config.series_order, config.series_degree));

    let overall = checks.iter().all(|c| c.passed);
    VerifyReport { config, checks, overall }
}
