//! Colored parts and the two orders on them.
//!
//! A primary part `(k, p)` is a plain part of size `k` carrying one color.
//! A secondary part carries an ordered pair of colors `(p, q)`; it stands for
//! the sum of two primary halves that are consecutive in the natural order,
//! and its actual length is `2k + delta(p, q)` where `k` is the lower half's
//! size. The color pair fixes the length's parity, so `ab` only colors odd
//! parts while `ba` only colors even ones.
//!
//! Two orders matter:
//! * `gt_natural` — the total order on primary parts: by size, color as the
//!   tiebreak (`k_p > l_q  iff  k - l >= delta(p, q)`).
//! * `gt_strong` — the minimal-difference partial order on all parts that
//!   difference-condition chains decrease under.

use std::fmt;

use thiserror::Error;

use crate::color::{delta, Color};

/// A part `(k, p)` with a single primary color. Sizes are signed: the
/// crossing machinery works on all of `Z`, positivity is a chain-level
/// validation concern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimaryPart {
    pub size: i64,
    pub color: Color,
}

impl PrimaryPart {
    pub fn new(size: i64, color: Color) -> PrimaryPart {
        PrimaryPart { size, color }
    }
}

/// A part with a secondary color pair, stored as its lower half size plus the
/// two colors. The represented actual length is `2 * lower_size + delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SecondaryPart {
    pub lower_size: i64,
    pub upper_color: Color,
    pub lower_color: Color,
}

impl SecondaryPart {
    pub fn new(lower_size: i64, upper_color: Color, lower_color: Color) -> SecondaryPart {
        SecondaryPart {
            lower_size,
            upper_color,
            lower_color,
        }
    }

    /// Parity indicator of this part's length, `delta(upper, lower)`.
    pub fn parity(self) -> i64 {
        delta(self.upper_color, self.lower_color)
    }

    pub fn length(self) -> i64 {
        2 * self.lower_size + self.parity()
    }

    /// The larger of the two primary halves: `(k + delta, p)`.
    pub fn upper_half(self) -> PrimaryPart {
        PrimaryPart::new(self.lower_size + self.parity(), self.upper_color)
    }

    /// The smaller of the two primary halves: `(k, q)`.
    pub fn lower_half(self) -> PrimaryPart {
        PrimaryPart::new(self.lower_size, self.lower_color)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Primary(PrimaryPart),
    Secondary(SecondaryPart),
}

impl Part {
    pub fn primary(size: i64, color: Color) -> Part {
        Part::Primary(PrimaryPart::new(size, color))
    }

    pub fn secondary(lower_size: i64, upper: Color, lower: Color) -> Part {
        Part::Secondary(SecondaryPart::new(lower_size, upper, lower))
    }

    pub fn length(self) -> i64 {
        match self {
            Part::Primary(p) => p.size,
            Part::Secondary(s) => s.length(),
        }
    }

    pub fn is_primary(self) -> bool {
        matches!(self, Part::Primary(_))
    }

    pub fn is_secondary(self) -> bool {
        matches!(self, Part::Secondary(_))
    }

    /// Colors in reading order: one for a primary part, upper then lower for
    /// a secondary part.
    pub fn colors(self) -> Vec<Color> {
        match self {
            Part::Primary(p) => vec![p.color],
            Part::Secondary(s) => vec![s.upper_color, s.lower_color],
        }
    }

    pub fn max_color_index(self) -> usize {
        match self {
            Part::Primary(p) => p.color.index(),
            Part::Secondary(s) => s.upper_color.index().max(s.lower_color.index()),
        }
    }
}

impl From<PrimaryPart> for Part {
    fn from(p: PrimaryPart) -> Part {
        Part::Primary(p)
    }
}

impl From<SecondaryPart> for Part {
    fn from(s: SecondaryPart) -> Part {
        Part::Secondary(s)
    }
}

impl fmt::Display for PrimaryPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.size, self.color)
    }
}

impl fmt::Display for SecondaryPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}{}",
            self.length(),
            self.upper_color,
            self.lower_color
        )
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Primary(p) => p.fmt(f),
            Part::Secondary(s) => s.fmt(f),
        }
    }
}

/// The natural total order on primary parts: `x > y  iff  x.size - y.size >=
/// delta(x.color, y.color)`. Size decides; when sizes tie, the larger color
/// wins.
pub fn gt_natural(x: PrimaryPart, y: PrimaryPart) -> bool {
    x.size - y.size >= delta(x.color, y.color)
}

/// The minimal-difference partial order on all parts, case by kind:
///
/// * primary vs primary: `k - l >= 1 + delta(p, q)`
/// * primary vs secondary: `k - len(y) >= delta(p, q) + delta(q, r)`
/// * secondary vs primary: `len(x) - l >= 1 + delta(p, q) + delta(q, r)`
/// * secondary vs secondary: lower half of `x` beats upper half of `y`
///   in the natural order.
#[allow(clippy::int_plus_one)] // keep the inequalities in their documented form
pub fn gt_strong(x: Part, y: Part) -> bool {
    match (x, y) {
        (Part::Primary(x), Part::Primary(y)) => x.size - y.size >= 1 + delta(x.color, y.color),
        (Part::Primary(x), Part::Secondary(y)) => {
            x.size - y.length() >= delta(x.color, y.upper_color) + y.parity()
        }
        (Part::Secondary(x), Part::Primary(y)) => {
            x.length() - y.size >= 1 + x.parity() + delta(x.lower_color, y.color)
        }
        (Part::Secondary(x), Part::Secondary(y)) => gt_natural(x.lower_half(), y.upper_half()),
    }
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum MergeError {
    #[error("parts {hi} and {lo} are not consecutive in the natural order")]
    NotConsecutive { hi: PrimaryPart, lo: PrimaryPart },
}

/// Merge two primary parts that are consecutive in the natural order
/// (`hi > lo` but not strongly) into the secondary part they are the halves
/// of. Consecutive means exactly `hi.size - lo.size == delta(hi.color,
/// lo.color)`.
pub fn merge(hi: PrimaryPart, lo: PrimaryPart) -> Result<SecondaryPart, MergeError> {
    if hi.size - lo.size == delta(hi.color, lo.color) {
        Ok(SecondaryPart::new(lo.size, hi.color, lo.color))
    } else {
        Err(MergeError::NotConsecutive { hi, lo })
    }
}

/// Split a secondary part into its (upper, lower) halves. Inverse of `merge`.
pub fn split(s: SecondaryPart) -> (PrimaryPart, PrimaryPart) {
    (s.upper_half(), s.lower_half())
}
