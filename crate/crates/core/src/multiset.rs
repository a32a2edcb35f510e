use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Finite multiset of up-step degrees, stored as `degree -> multiplicity`
/// with no zero multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeMultiset {
    counts: BTreeMap<u32, u32>,
}

impl DegreeMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (k, c) in pairs {
            m.insert_many(k, c);
        }
        m
    }

    pub fn insert(&mut self, degree: u32) {
        self.insert_many(degree, 1);
    }

    pub fn insert_many(&mut self, degree: u32, count: u32) {
        if count > 0 {
            *self.counts.entry(degree).or_insert(0) += count;
        }
    }

    /// Removes one copy of `degree`; false if it was absent.
    pub fn remove(&mut self, degree: u32) -> bool {
        match self.counts.get_mut(&degree) {
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.counts.remove(&degree);
                }
                true
            }
            None => false,
        }
    }

    pub fn with(&self, degree: u32) -> Self {
        let mut m = self.clone();
        m.insert(degree);
        m
    }

    pub fn without(&self, degree: u32) -> Option<Self> {
        let mut m = self.clone();
        m.remove(degree).then_some(m)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (&k, &c) in &other.counts {
            m.insert_many(k, c);
        }
        m
    }

    pub fn multiplicity(&self, degree: u32) -> u32 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    /// Number of elements counted with multiplicity.
    pub fn size(&self) -> usize {
        self.counts.values().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Sum of all elements with multiplicity.
    pub fn total_degree(&self) -> usize {
        self.counts.iter().map(|(&k, &c)| k as usize * c as usize).sum()
    }

    /// Steps of any path whose profile has this multiset.
    pub fn path_len(&self) -> usize {
        self.size() + self.total_degree() + 1
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// Distinct degrees in increasing order.
    pub fn distinct(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts.keys().copied()
    }

    /// `(degree, multiplicity)` pairs in increasing degree order.
    pub fn counts(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    /// Elements with multiplicity, in increasing order.
    pub fn elements(&self) -> Vec<u32> {
        self.counts()
            .flat_map(|(k, c)| std::iter::repeat_n(k, c as usize))
            .collect()
    }

    /// Every multiset with at most `max_size` elements, all `<= max_degree`,
    /// ordered by size and then by canonical text.
    pub fn all_up_to(max_size: usize, max_degree: u32) -> Vec<Self> {
        fn fill(degree: u32, max_degree: u32, room: usize, cur: &mut DegreeMultiset, out: &mut Vec<DegreeMultiset>) {
            if degree > max_degree {
                out.push(cur.clone());
                return;
            }
            for c in 0..=room {
                cur.insert_many(degree, c as u32);
                fill(degree + 1, max_degree, room - c, cur, out);
                for _ in 0..c {
                    cur.remove(degree);
                }
            }
        }
        let mut out = Vec::new();
        fill(0, max_degree, max_size, &mut Self::new(), &mut out);
        out.sort_by_cached_key(|m| (m.size(), m.to_string()));
        out
    }

    /// Every degree shifted by `offset`.
    pub fn shifted(&self, offset: u32) -> Self {
        Self::from_counts(self.counts().map(|(k, c)| (k + offset, c)))
    }
}

impl FromIterator<u32> for DegreeMultiset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut m = Self::new();
        for k in iter {
            m.insert(k);
        }
        m
    }
}

impl Extend<u32> for DegreeMultiset {
    fn extend<I: IntoIterator<Item = u32>>(&mut self, iter: I) {
        for k in iter {
            self.insert(k);
        }
    }
}

/// `"0:1,1:2"`; the empty multiset renders as the empty string.
impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, c)) in self.counts().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}:{c}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut m = Self::new();
        if s.is_empty() {
            return Ok(m);
        }
        for pair in s.split(',') {
            let (k, c) = pair
                .split_once(':')
                .ok_or_else(|| Error::Multiset(format!("expected k:mult, got {pair:?}")))?;
            let k: u32 = k
                .trim()
                .parse()
                .map_err(|_| Error::Multiset(format!("bad degree in {pair:?}")))?;
            let c: u32 = c
                .trim()
                .parse()
                .map_err(|_| Error::Multiset(format!("bad multiplicity in {pair:?}")))?;
            if c == 0 {
                return Err(Error::Multiset(format!("zero multiplicity in {pair:?}")));
            }
            if m.multiplicity(k) > 0 {
                return Err(Error::Multiset(format!("degree {k} listed twice")));
            }
            m.insert_many(k, c);
        }
        Ok(m)
    }
}
