//! Łukasiewicz paths and their area and depth statistics.
//!
//! A path is a word over the down-step `D = (1, -1)` and the up-steps
//! `U_k = (1, k)`, `k >= 0`, that stays at height `>= 0` until its last step,
//! which is always `D` and ends at height `-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, PathViolation, Result};
use crate::multiset::DegreeMultiset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Down,
    Up(u32),
}

impl Step {
    /// Height change of the step: `-1` for `D`, `k` for `U_k`.
    pub fn rise(self) -> i64 {
        match self {
            Step::Down => -1,
            Step::Up(k) => i64::from(k),
        }
    }

    pub fn degree(self) -> Option<u32> {
        match self {
            Step::Down => None,
            Step::Up(k) => Some(k),
        }
    }

    pub fn is_up(self) -> bool {
        matches!(self, Step::Up(_))
    }

    /// Integer code used by the JSON encoding: `-1` for `D`, `k` for `U_k`.
    pub fn code(self) -> i64 {
        self.rise()
    }

    pub fn from_code(code: i64) -> Result<Step> {
        match code {
            -1 => Ok(Step::Down),
            k if k >= 0 => u32::try_from(k)
                .map(Step::Up)
                .map_err(|_| Error::Token(k.to_string())),
            k => Err(Error::Token(k.to_string())),
        }
    }
}

// D < U_0 < U_1 < ... is the enumeration order.
impl Ord for Step {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.code().cmp(&other.code())
    }
}

impl PartialOrd for Step {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Down => f.write_str("D"),
            Step::Up(k) => write!(f, "U{k}"),
        }
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(token: &str) -> Result<Step> {
        if token == "D" {
            return Ok(Step::Down);
        }
        let digits = token
            .strip_prefix('U')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| Error::Token(token.to_string()))?;
        digits
            .parse()
            .map(Step::Up)
            .map_err(|_| Error::Token(token.to_string()))
    }
}

impl Serialize for Step {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.code())
    }
}

impl<'de> Deserialize<'de> for Step {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let code = i64::deserialize(deserializer)?;
        Step::from_code(code).map_err(serde::de::Error::custom)
    }
}

/// Checks the three path invariants on a raw step sequence.
pub fn check_steps(steps: &[Step]) -> std::result::Result<(), PathViolation> {
    let (last, body) = steps.split_last().ok_or(PathViolation::Empty)?;
    if *last != Step::Down {
        return Err(PathViolation::LastStepNotDown);
    }
    let mut height = 0i64;
    for (position, step) in body.iter().enumerate() {
        height += step.rise();
        if height < 0 {
            return Err(PathViolation::DipsBelowAxis { position });
        }
    }
    height -= 1;
    if height != -1 {
        return Err(PathViolation::WrongFinalHeight { height });
    }
    Ok(())
}

/// A validated Łukasiewicz path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LukasPath {
    steps: Vec<Step>,
}

impl LukasPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        check_steps(&steps).map_err(Error::InvalidPath)?;
        Ok(LukasPath { steps })
    }

    /// Wraps steps already known to form a path.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert_eq!(check_steps(&steps), Ok(()));
        LukasPath { steps }
    }

    /// The one-step path `D`, image of the single-node tree.
    pub fn single_down() -> Self {
        LukasPath {
            steps: vec![Step::Down],
        }
    }

    /// Parses either the token format (`"U1 U0 D D"`) or the JSON array
    /// format (`[1, 0, -1, -1]`).
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            let codes: Vec<serde_json::Value> =
                serde_json::from_str(trimmed).map_err(|e| Error::Token(e.to_string()))?;
            let steps = codes
                .iter()
                .map(|v| {
                    v.as_i64()
                        .ok_or_else(|| Error::Token(v.to_string()))
                        .and_then(Step::from_code)
                })
                .collect::<Result<Vec<_>>>()?;
            Self::new(steps)
        } else {
            let steps = trimmed
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<Vec<Step>>>()?;
            Self::new(steps)
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Always false: a path has at least its final `D`.
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("step codes serialize")
    }

    pub fn profile(&self) -> Profile {
        Profile::new(self.steps.iter().filter_map(|s| s.degree()).collect())
    }

    pub fn profile_multiset(&self) -> DegreeMultiset {
        self.steps.iter().filter_map(|s| s.degree()).collect()
    }

    pub fn first_up_degree(&self) -> Option<u32> {
        self.steps.iter().find_map(|s| s.degree())
    }

    pub fn last_up_degree(&self) -> Option<u32> {
        self.steps.iter().rev().find_map(|s| s.degree())
    }

    /// Height of the path before each step.
    pub fn start_heights(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0i64, |h, s| {
                let start = *h;
                *h += s.rise();
                Some(start)
            })
            .collect()
    }

    /// Starting height of every up-step, left to right.
    pub fn area_vector(&self) -> StatVector {
        let entries = self
            .steps
            .iter()
            .zip(self.start_heights())
            .filter(|(s, _)| s.is_up())
            .map(|(_, h)| h as u64)
            .collect();
        StatVector(entries)
    }

    pub fn area(&self) -> u64 {
        self.area_vector().sum()
    }

    /// Matches every down-step but the last with the nearest earlier up-step
    /// that still has unused capacity (its degree minus downs already matched).
    pub fn match_downs(&self) -> Matching {
        let mut pairs = BTreeMap::new();
        // (position, degree, matched so far) of up-steps with spare capacity
        let mut open: Vec<(usize, u32, u32)> = Vec::new();
        let last = self.steps.len() - 1;
        for (j, step) in self.steps.iter().enumerate() {
            match *step {
                Step::Up(0) => {}
                Step::Up(k) => open.push((j, k, 0)),
                Step::Down if j == last => {}
                Step::Down => {
                    let top = open
                        .last_mut()
                        .expect("valid path has an open up-step before every inner D");
                    top.2 += 1;
                    pairs.insert(j, MatchTarget { up: top.0, rank: top.2 });
                    if top.2 == top.1 {
                        open.pop();
                    }
                }
            }
        }
        Matching { pairs }
    }

    /// Matching by the geometric rule: a leftward ray from the midpoint of each
    /// inner down-step stops at the first up-step whose span crosses it.
    pub fn match_downs_by_ray(&self) -> Matching {
        let heights = self.start_heights();
        let last = self.steps.len() - 1;
        let mut hits: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (j, step) in self.steps.iter().enumerate() {
            if *step != Step::Down || j == last {
                continue;
            }
            // The midpoint sits at height h - 1/2; an up-step from y to y + k
            // crosses it strictly iff y < h <= y + k.
            let h = heights[j];
            let up = (0..j)
                .rev()
                .find(|&i| match self.steps[i] {
                    Step::Up(k) if k > 0 => heights[i] < h && h <= heights[i] + i64::from(k),
                    _ => false,
                })
                .expect("valid path: every inner D is crossed by an earlier up-step");
            hits.entry(up).or_default().push(j);
        }
        let mut pairs = BTreeMap::new();
        for (up, downs) in hits {
            for (r, down) in downs.into_iter().enumerate() {
                pairs.insert(down, MatchTarget { up, rank: r as u32 + 1 });
            }
        }
        Matching { pairs }
    }

    /// Values `d` at the up-steps, propagated through the matching.
    pub fn depth_vector(&self) -> StatVector {
        let matching = self.match_downs();
        let n = self.steps.len();
        let mut d = vec![0u64; n];
        let mut entries = Vec::new();
        // The final D never receives a value.
        for i in 0..n.saturating_sub(1) {
            d[i] = match self.steps[i] {
                Step::Up(_) if i == 0 => 0,
                Step::Up(_) => d[i - 1],
                Step::Down => {
                    let m = matching.pairs[&i];
                    d[m.up] + u64::from(m.rank)
                }
            };
            if self.steps[i].is_up() {
                entries.push(d[i]);
            }
        }
        StatVector(entries)
    }

    pub fn depth(&self) -> u64 {
        self.depth_vector().sum()
    }
}

impl fmt::Display for LukasPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for LukasPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LukasPath::parse(s)
    }
}

impl<'de> Deserialize<'de> for LukasPath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let steps = Vec::<Step>::deserialize(deserializer)?;
        LukasPath::new(steps).map_err(serde::de::Error::custom)
    }
}

/// Degrees of the up-steps of a path, left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Profile(Vec<u32>);

impl Profile {
    pub fn new(degrees: Vec<u32>) -> Self {
        Profile(degrees)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of down-steps of any path with this profile.
    pub fn down_count(&self) -> usize {
        1 + self.0.iter().map(|&k| k as usize).sum::<usize>()
    }

    /// `self` with one more degree appended.
    pub fn extended(&self, degree: u32) -> Profile {
        let mut degrees = self.0.clone();
        degrees.push(degree);
        Profile(degrees)
    }

    pub fn multiset(&self) -> DegreeMultiset {
        self.0.iter().copied().collect()
    }
}

impl From<Vec<u32>> for Profile {
    fn from(degrees: Vec<u32>) -> Self {
        Profile(degrees)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&text.join(","))
    }
}

/// Comma-separated degrees, e.g. `"1,0,2"`; the empty string is the empty profile.
impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Profile::default());
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Profile(format!("bad degree {:?}", part.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Profile)
    }
}

/// One entry per up-step, left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StatVector(pub Vec<u64>);

impl StatVector {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatchTarget {
    /// 0-based position of the up-step.
    pub up: usize,
    /// `rank`-th matching down-step of that up-step, starting from 1.
    pub rank: u32,
}

/// Inner down-step position (0-based) to its matched up-step.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: BTreeMap<usize, MatchTarget>,
}

impl Matching {
    pub fn get(&self, down: usize) -> Option<MatchTarget> {
        self.pairs.get(&down).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> LukasPath {
        LukasPath::parse(text).unwrap()
    }

    // Area by explicit running sums, independent of start_heights.
    fn area_by_prefix_sums(path: &LukasPath) -> Vec<u64> {
        let mut out = Vec::new();
        for (i, s) in path.steps().iter().enumerate() {
            if s.is_up() {
                let h: i64 = path.steps()[..i].iter().map(|s| s.rise()).sum();
                out.push(h as u64);
            }
        }
        out
    }

    #[test]
    fn parse_accepts_valid_paths() {
        assert_eq!(p("D").len(), 1);
        assert_eq!(p("U1 D D").len(), 3);
        assert_eq!(p("U1 D D"), p("[1, -1, -1]"));
        assert_eq!(p(&format!("U12{}", " D".repeat(13))).profile().degrees(), &[12]);
    }

    #[test]
    fn parse_rejects_bad_paths() {
        assert_eq!(
            LukasPath::parse("U1 D D D"),
            Err(Error::InvalidPath(PathViolation::DipsBelowAxis { position: 2 }))
        );
        assert_eq!(
            LukasPath::parse("U1 D"),
            Err(Error::InvalidPath(PathViolation::WrongFinalHeight { height: 0 }))
        );
        assert_eq!(
            LukasPath::parse("D U0"),
            Err(Error::InvalidPath(PathViolation::LastStepNotDown))
        );
        assert_eq!(LukasPath::parse(""), Err(Error::InvalidPath(PathViolation::Empty)));
        assert_eq!(LukasPath::parse("[]"), Err(Error::InvalidPath(PathViolation::Empty)));
        assert!(matches!(LukasPath::parse("U D"), Err(Error::Token(_))));
        assert!(matches!(LukasPath::parse("U-1 D"), Err(Error::Token(_))));
        assert!(matches!(LukasPath::parse("X"), Err(Error::Token(_))));
        assert!(matches!(LukasPath::parse("[-2]"), Err(Error::Token(_))));
        assert!(matches!(LukasPath::parse("[1, \"D\"]"), Err(Error::Token(_))));
    }

    #[test]
    fn display_round_trips() {
        for text in ["D", "U1 U0 D D", "U1 U2 D D D U0 D"] {
            assert_eq!(p(text).to_string(), text);
            assert_eq!(LukasPath::parse(&p(text).to_json()).unwrap(), p(text));
        }
        assert_eq!(p("U1 U0 D D").to_json(), "[1,0,-1,-1]");
    }

    #[test]
    fn profiles() {
        assert!(p("D").profile().is_empty());
        assert_eq!(p("U1 U0 D U2 D D D").profile(), Profile::new(vec![1, 0, 2]));
        assert_eq!(p("U1 D U1 D D").profile(), Profile::new(vec![1, 1]));
        assert_eq!(p("D").profile_multiset().to_string(), "");
        assert_eq!(p("U1 U0 D U2 D D D").profile_multiset().to_string(), "0:1,1:1,2:1");
        assert_eq!(p("U1 D U1 D D").profile_multiset().to_string(), "1:2");
    }

    #[test]
    fn area_examples() {
        let cases = [
            ("D", vec![], 0),
            ("U1 U0 D D", vec![0, 1], 1),
            ("U1 U1 U1 D D D D", vec![0, 1, 2], 3),
            ("U1 U2 D D D U0 D", vec![0, 1, 0], 1),
        ];
        for (text, vector, total) in cases {
            let path = p(text);
            assert_eq!(area_by_prefix_sums(&path), vector, "{text}");
            assert_eq!(path.area_vector().entries(), &vector[..], "{text}");
            assert_eq!(path.area(), total, "{text}");
        }
    }

    fn pairs(list: &[(usize, usize, u32)]) -> Matching {
        // 1-based positions, as written by hand
        Matching {
            pairs: list
                .iter()
                .map(|&(d, u, rank)| (d - 1, MatchTarget { up: u - 1, rank }))
                .collect(),
        }
    }

    #[test]
    fn matching_examples() {
        let cases = [
            ("U1 D D", pairs(&[(2, 1, 1)])),
            ("U1 U2 D D D U0 D", pairs(&[(3, 2, 1), (4, 2, 2), (5, 1, 1)])),
            ("U2 U1 D D D D", pairs(&[(3, 2, 1), (4, 1, 1), (5, 1, 2)])),
            ("D", pairs(&[])),
        ];
        for (text, expected) in cases {
            assert_eq!(p(text).match_downs(), expected, "{text}");
            assert_eq!(p(text).match_downs_by_ray(), expected, "{text}");
        }
    }

    #[test]
    fn depth_examples() {
        let cases = [
            ("D", vec![], 0),
            ("U1 D U1 D D", vec![0, 1], 1),
            ("U1 U2 D D D U0 D", vec![0, 0, 1], 1),
            ("U1 D U1 D U1 D D", vec![0, 1, 2], 3),
            ("U1 U1 D D D", vec![0, 0], 0),
        ];
        for (text, vector, total) in cases {
            let path = p(text);
            assert_eq!(path.depth_vector().entries(), &vector[..], "{text}");
            assert_eq!(path.depth(), total, "{text}");
        }
    }

    #[test]
    fn step_order_puts_down_first() {
        let mut steps = vec![Step::Up(2), Step::Up(0), Step::Down, Step::Up(1)];
        steps.sort();
        assert_eq!(steps, vec![Step::Down, Step::Up(0), Step::Up(1), Step::Up(2)]);
    }

    #[test]
    fn profile_text() {
        assert_eq!("1,0,2".parse::<Profile>().unwrap(), Profile::new(vec![1, 0, 2]));
        assert_eq!("".parse::<Profile>().unwrap(), Profile::default());
        assert!("1,,2".parse::<Profile>().is_err());
        assert!("a".parse::<Profile>().is_err());
        assert_eq!(Profile::new(vec![3, 1]).to_string(), "3,1");
    }
}
