//! Backtracking enumeration of Łukasiewicz paths.
//!
//! Paths come out in lexicographic order for `D < U_0 < U_1 < ...`.

use crate::multiset::DegreeMultiset;
use crate::path::{LukasPath, Profile, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Source {
    Down,
    Profile,
    First,
    Last,
    Free,
}

#[derive(Debug, Clone, Copy)]
struct Choice {
    step: Step,
    source: Source,
}

/// Where the up-steps come from.
#[derive(Debug, Clone)]
enum Supply {
    /// A fixed sequence, consumed in order.
    Profile { degrees: Vec<u32>, next: usize },
    /// An unordered pool, with an optional forced first and last up-step.
    Multiset {
        free: DegreeMultiset,
        first: Option<u32>,
        first_pending: bool,
        last: Option<u32>,
        last_pending: bool,
    },
}

impl Supply {
    fn up_choices(&self, out: &mut Vec<Choice>) {
        match self {
            Supply::Profile { degrees, next } => {
                if let Some(&k) = degrees.get(*next) {
                    out.push(Choice { step: Step::Up(k), source: Source::Profile });
                }
            }
            Supply::Multiset { free, first, first_pending, last, last_pending } => {
                if *first_pending {
                    out.push(Choice { step: Step::Up(first.unwrap()), source: Source::First });
                } else if !free.is_empty() {
                    out.extend(free.distinct().map(|k| Choice { step: Step::Up(k), source: Source::Free }));
                } else if *last_pending {
                    out.push(Choice { step: Step::Up(last.unwrap()), source: Source::Last });
                }
            }
        }
    }

    fn take(&mut self, choice: Choice) {
        match (self, choice.source) {
            (Supply::Profile { next, .. }, Source::Profile) => *next += 1,
            (Supply::Multiset { first_pending, .. }, Source::First) => *first_pending = false,
            (Supply::Multiset { last_pending, .. }, Source::Last) => *last_pending = false,
            (Supply::Multiset { free, .. }, Source::Free) => {
                free.remove(choice.step.degree().unwrap());
            }
            _ => unreachable!("choice source does not match supply"),
        }
    }

    fn give_back(&mut self, choice: Choice) {
        match (self, choice.source) {
            (Supply::Profile { next, .. }, Source::Profile) => *next -= 1,
            (Supply::Multiset { first_pending, .. }, Source::First) => *first_pending = true,
            (Supply::Multiset { last_pending, .. }, Source::Last) => *last_pending = true,
            (Supply::Multiset { free, .. }, Source::Free) => free.insert(choice.step.degree().unwrap()),
            _ => unreachable!("choice source does not match supply"),
        }
    }
}

struct Frame {
    choices: Vec<Choice>,
    next: usize,
}

/// Lazy depth-first enumeration of all paths drawing up-steps from a supply.
pub struct PathIter {
    supply: Supply,
    len: usize,
    height: i64,
    ups_left: usize,
    downs_left: usize,
    steps: Vec<Step>,
    chosen: Vec<Choice>,
    stack: Vec<Frame>,
}

impl PathIter {
    fn start(supply: Supply, ups: usize, total_degree: usize) -> Self {
        let downs = total_degree + 1;
        let mut iter = PathIter {
            supply,
            len: ups + downs,
            height: 0,
            ups_left: ups,
            downs_left: downs,
            steps: Vec::with_capacity(ups + downs),
            chosen: Vec::with_capacity(ups + downs),
            stack: Vec::new(),
        };
        iter.push_frame();
        iter
    }

    fn push_frame(&mut self) {
        let mut choices = Vec::new();
        // Height + remaining up degrees - remaining downs is always -1, so at
        // height 0 with no ups left exactly the final D remains.
        if self.downs_left > 0 && (self.height >= 1 || self.ups_left == 0) {
            choices.push(Choice { step: Step::Down, source: Source::Down });
        }
        if self.ups_left > 0 {
            self.supply.up_choices(&mut choices);
        }
        self.stack.push(Frame { choices, next: 0 });
    }

    fn apply(&mut self, choice: Choice) {
        match choice.source {
            Source::Down => self.downs_left -= 1,
            _ => {
                self.ups_left -= 1;
                self.supply.take(choice);
            }
        }
        self.height += choice.step.rise();
        self.steps.push(choice.step);
        self.chosen.push(choice);
    }

    fn undo(&mut self) {
        let choice = self.chosen.pop().expect("undo with no step");
        self.steps.pop();
        self.height -= choice.step.rise();
        match choice.source {
            Source::Down => self.downs_left += 1,
            _ => {
                self.ups_left += 1;
                self.supply.give_back(choice);
            }
        }
    }
}

impl Iterator for PathIter {
    type Item = LukasPath;

    fn next(&mut self) -> Option<LukasPath> {
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next == frame.choices.len() {
                self.stack.pop();
                if !self.chosen.is_empty() {
                    self.undo();
                }
                continue;
            }
            let choice = frame.choices[frame.next];
            frame.next += 1;
            self.apply(choice);
            if self.steps.len() == self.len {
                let path = LukasPath::from_steps_unchecked(self.steps.clone());
                self.undo();
                return Some(path);
            }
            self.push_frame();
        }
    }
}

/// All paths whose up-step degrees, read left to right, are exactly `profile`.
pub fn paths_with_profile(profile: &Profile) -> PathIter {
    let degrees = profile.degrees().to_vec();
    let ups = degrees.len();
    let total = degrees.iter().map(|&k| k as usize).sum();
    PathIter::start(Supply::Profile { degrees, next: 0 }, ups, total)
}

/// Paths with profile multiset `multiset ⊎ {first, last}` whose first up-step
/// has degree `first` and last up-step has degree `last`, when given.
///
/// With both constraints absent this is every path with profile multiset
/// exactly `multiset`.
pub fn paths_with_multiset(
    multiset: &DegreeMultiset,
    first: Option<u32>,
    last: Option<u32>,
) -> PathIter {
    let mut full = multiset.clone();
    full.extend(first.into_iter().chain(last));
    let supply = Supply::Multiset {
        free: multiset.clone(),
        first,
        first_pending: first.is_some(),
        last,
        last_pending: last.is_some(),
    };
    PathIter::start(supply, full.size(), full.total_degree())
}

/// Every path with exactly `len` steps, generated by height alone.
pub fn all_paths_of_len(len: usize) -> Vec<LukasPath> {
    fn extend(steps: &mut Vec<Step>, remaining: usize, height: i64, out: &mut Vec<LukasPath>) {
        if remaining == 1 {
            if height == 0 {
                steps.push(Step::Down);
                out.push(LukasPath::from_steps_unchecked(steps.clone()));
                steps.pop();
            }
            return;
        }
        if height >= 1 {
            steps.push(Step::Down);
            extend(steps, remaining - 1, height - 1, out);
            steps.pop();
        }
        // After U_k the height h + k still needs h + k + 1 downs.
        let max_k = remaining as i64 - 2 - height;
        for k in 0..=max_k.max(-1) {
            steps.push(Step::Up(k as u32));
            extend(steps, remaining - 1, height + k, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        extend(&mut Vec::with_capacity(len), len, 0, &mut out);
    }
    out
}

/// Every path with at most `max_len` steps, shortest first.
pub fn all_paths_up_to(max_len: usize) -> Vec<LukasPath> {
    (1..=max_len).flat_map(all_paths_of_len).collect()
}
