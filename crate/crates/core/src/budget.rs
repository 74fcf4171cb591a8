//! Wall-clock budgets for the exhaustive searches.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Result of a budgeted search. `Absent` is only reported after the search
/// space was exhausted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome<T> {
    Found(T),
    Absent,
    Inconclusive,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Outcome::Absent)
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Outcome::Inconclusive)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Absent => Outcome::Absent,
            Outcome::Inconclusive => Outcome::Inconclusive,
        }
    }

    /// Converts an unbudgeted result. Panics on `Inconclusive`, which an
    /// unlimited budget never produces.
    pub(crate) fn unlimited(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            Outcome::Absent => None,
            Outcome::Inconclusive => unreachable!("unlimited search reported inconclusive"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { deadline: None }
    }

    pub fn millis(ms: u64) -> Self {
        Self::within(Duration::from_millis(ms))
    }

    pub fn within(d: Duration) -> Self {
        Self { deadline: Some(Instant::now() + d) }
    }

    pub fn until(deadline: Instant) -> Self {
        Self { deadline: Some(deadline) }
    }

    pub fn is_unlimited(&self) -> bool {
        self.deadline.is_none()
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Checks the clock every few thousand search nodes.
pub(crate) struct Ticker<'a> {
    budget: &'a Budget,
    count: u32,
    pub(crate) out_of_time: bool,
}

impl<'a> Ticker<'a> {
    pub(crate) fn new(budget: &'a Budget) -> Self {
        Self { budget, count: 0, out_of_time: false }
    }

    /// Returns true once the budget has run out.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.out_of_time {
            return true;
        }
        if self.budget.is_unlimited() {
            return false;
        }
        self.count = self.count.wrapping_add(1);
        if self.count & 0xfff == 0 && self.budget.expired() {
            self.out_of_time = true;
        }
        self.out_of_time
    }
}
