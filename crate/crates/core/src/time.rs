//! Time values and closed time intervals.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use ordered_float::NotNan;

/// Integer clock tick, the default time representation.
pub type Tick = i64;

/// Real-valued time for streams whose timestamps are not integral.
pub type RealTime = NotNan<f64>;

/// A totally ordered timestamp type.
///
/// Implemented for [`Tick`] (exact integer comparisons) and [`RealTime`].
pub trait Time: Copy + Ord + Hash + Debug + Display + FromStr + Send + Sync + 'static {
    /// `self + duration`, or `None` on overflow.
    fn checked_add(self, duration: Self) -> Option<Self>;

    /// Whether this value, read as a duration, is strictly positive.
    fn is_positive(self) -> bool;
}

impl Time for Tick {
    fn checked_add(self, duration: Self) -> Option<Self> {
        i64::checked_add(self, duration)
    }

    fn is_positive(self) -> bool {
        self > 0
    }
}

impl Time for RealTime {
    fn checked_add(self, duration: Self) -> Option<Self> {
        let sum = self.into_inner() + duration.into_inner();
        if sum.is_finite() {
            NotNan::new(sum).ok()
        } else {
            None
        }
    }

    fn is_positive(self) -> bool {
        self.into_inner() > 0.0
    }
}

/// Closed interval `[t0, t1]` with `t0 <= t1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval<T> {
    pub t0: T,
    pub t1: T,
}

impl<T: Time> Interval<T> {
    /// Panics if `t1 < t0`.
    pub fn new(t0: T, t1: T) -> Self {
        assert!(t1 >= t0, "interval end {t1} precedes start {t0}");
        Interval { t0, t1 }
    }

    pub fn try_new(t0: T, t1: T) -> Option<Self> {
        (t1 >= t0).then_some(Interval { t0, t1 })
    }

    /// Strictly positive length.
    pub fn is_positive(&self) -> bool {
        self.t1 > self.t0
    }

    pub fn contains(&self, t: T) -> bool {
        self.t0 <= t && t <= self.t1
    }

    pub fn covers(&self, other: &Interval<T>) -> bool {
        self.t0 <= other.t0 && other.t1 <= self.t1
    }

    /// Intersection has strictly positive length.
    pub fn overlaps_positively(&self, other: &Interval<T>) -> bool {
        self.t0.max(other.t0) < self.t1.min(other.t1)
    }

    /// Closed intervals share at least one point.
    pub fn meets(&self, other: &Interval<T>) -> bool {
        self.t0.max(other.t0) <= self.t1.min(other.t1)
    }

    pub fn intersection(&self, other: &Interval<T>) -> Option<Interval<T>> {
        Interval::try_new(self.t0.max(other.t0), self.t1.min(other.t1))
    }

    pub fn hull(&self, other: &Interval<T>) -> Interval<T> {
        Interval {
            t0: self.t0.min(other.t0),
            t1: self.t1.max(other.t1),
        }
    }
}

impl<T: Debug> Debug for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.t0, self.t1)
    }
}

impl<T: Display> Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.t0, self.t1)
    }
}

/// Unions a list of closed intervals, merging overlapping and touching ones.
/// The result is sorted and pairwise disjoint.
pub fn merge_intervals<T: Time>(mut intervals: Vec<Interval<T>>) -> Vec<Interval<T>> {
    intervals.sort_unstable();
    let mut merged: Vec<Interval<T>> = Vec::with_capacity(intervals.len());
    for iv in intervals {
        match merged.last_mut() {
            Some(last) if iv.t0 <= last.t1 => last.t1 = last.t1.max(iv.t1),
            _ => merged.push(iv),
        }
    }
    merged
}
