use std::fmt;

use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Exact rational coordinate on the real line.
pub type Point = Rational64;

/// A closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Point,
    hi: Point,
}

impl Interval {
    pub fn new(lo: Point, hi: Point) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInstance(format!(
                "interval [{lo}, {hi}] has lo > hi"
            )));
        }
        Ok(Interval { lo, hi })
    }

    /// Integer-endpoint shorthand; panics if `lo > hi`.
    pub fn int(lo: i64, hi: i64) -> Self {
        Interval::new(Point::from_integer(lo), Point::from_integer(hi))
            .expect("interval with lo <= hi")
    }

    pub fn lo(&self) -> Point {
        self.lo
    }

    pub fn hi(&self) -> Point {
        self.hi
    }

    /// Closed intervals meet when they share a point, endpoints included.
    pub fn meets(&self, other: &Interval) -> bool {
        self.lo.max(other.lo) <= self.hi.min(other.hi)
    }

    /// True iff `self` lies entirely within the open ray `(x, ∞)`.
    pub fn right_of(&self, x: Point) -> bool {
        self.lo > x
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalFamily {
    intervals: Vec<Interval>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Side {
    Left,
    Right,
}

impl IntervalFamily {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalFamily { intervals }
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        IntervalFamily::new(pairs.iter().map(|&(a, b)| Interval::int(a, b)).collect())
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, i: usize) -> Interval {
        self.intervals[i]
    }

    /// True iff all `2m` endpoint values are pairwise distinct.
    pub fn endpoints_distinct(&self) -> bool {
        let mut values: Vec<Point> = self
            .intervals
            .iter()
            .flat_map(|iv| [iv.lo, iv.hi])
            .collect();
        values.sort_unstable();
        values.windows(2).all(|w| w[0] != w[1])
    }

    /// Relabels endpoints by rank so that all of them become distinct
    /// integers while every pairwise meet/miss relation is kept.
    ///
    /// Endpoint occurrences are ordered by `(value, side, index)` with left
    /// endpoints before right endpoints at equal values, and replaced by
    /// their rank `1..=2m`. A right endpoint tied with a left endpoint lands
    /// after it, so touching intervals still meet; strict gaps stay strict.
    pub fn make_endpoints_distinct(&self) -> IntervalFamily {
        let mut occurrences: Vec<(Point, Side, usize)> =
            Vec::with_capacity(2 * self.intervals.len());
        for (i, iv) in self.intervals.iter().enumerate() {
            occurrences.push((iv.lo, Side::Left, i));
            occurrences.push((iv.hi, Side::Right, i));
        }
        occurrences.sort_unstable();
        let mut lo = vec![0i64; self.intervals.len()];
        let mut hi = vec![0i64; self.intervals.len()];
        for (rank, &(_, side, i)) in occurrences.iter().enumerate() {
            let rank = rank as i64 + 1;
            match side {
                Side::Left => lo[i] = rank,
                Side::Right => hi[i] = rank,
            }
        }
        IntervalFamily::new(
            lo.into_iter()
                .zip(hi)
                .map(|(a, b)| Interval::int(a, b))
                .collect(),
        )
    }
}

/// Renders a point as an integer when integral and as `p/q` otherwise.
pub fn format_point(p: Point) -> String {
    if p.is_integer() {
        p.to_integer().to_string()
    } else {
        format!("{}/{}", p.numer(), p.denom())
    }
}

pub fn point_to_f64(p: Point) -> f64 {
    p.to_f64().unwrap_or(f64::NAN)
}
