//! Partitions of colored parts, their statistics, and chain validation.

use std::fmt;

use crate::color::ColorAlphabet;
use crate::part::{gt_natural, gt_strong, Part, PrimaryPart};

/// An ordered sequence of colored parts. The sequence itself is raw data:
/// intermediate states of the bijection hold arbitrary sequences, and
/// [`ColoredPartition::validate`] checks chain membership only at the
/// boundaries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    parts: Vec<Part>,
}

/// Which chain family a sequence is validated against.
///
/// * `CChain`: primary parts only, strictly decreasing in the natural order.
/// * `DChain`: any parts, strictly decreasing in the minimal-difference
///   order, all lengths positive, no secondary part of length 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    CChain,
    DChain,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::CChain => write!(f, "C"),
            Mode::DChain => write!(f, "D"),
        }
    }
}

/// Weight plus per-color part counts. `counts[i]` totals the parts whose
/// color mentions color `i`: primary parts colored `i`, mixed secondary
/// parts once, and same-color secondary parts (`i`, `i`) twice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StatVector {
    pub n: u64,
    pub counts: Vec<u64>,
}

impl StatVector {
    pub fn zero(m: usize) -> StatVector {
        StatVector {
            n: 0,
            counts: vec![0; m],
        }
    }
}

impl fmt::Display for StatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}; ", self.n)?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// A non-primary part inside a C-chain.
    NotPrimary,
    /// Part length is zero or negative.
    NonPositive,
    /// A secondary part of actual length 1, which no valid chain contains.
    UnitSecondary,
    /// Adjacent parts out of order for the requested mode.
    OrderViolation,
    /// Part mentions a color outside the alphabet.
    ColorOutOfRange,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::NotPrimary => "part is not primary",
            ViolationKind::NonPositive => "part length is not positive",
            ViolationKind::UnitSecondary => "secondary part of length 1",
            ViolationKind::OrderViolation => "adjacent parts out of order",
            ViolationKind::ColorOutOfRange => "color outside the alphabet",
        };
        f.write_str(s)
    }
}

/// A single validation finding at a 0-based part index. Order violations
/// point at the left part of the offending adjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parts[{}]: {}", self.index, self.kind)
    }
}

/// All violations found in one pass, in index order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub mode_checked: Option<Mode>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        if let Some(mode) = self.mode_checked {
            write!(f, "not a valid {mode}-chain: ")?;
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

impl ColoredPartition {
    pub fn new(parts: Vec<Part>) -> ColoredPartition {
        ColoredPartition { parts }
    }

    pub fn empty() -> ColoredPartition {
        ColoredPartition { parts: Vec::new() }
    }

    pub fn from_primary(parts: Vec<PrimaryPart>) -> ColoredPartition {
        ColoredPartition {
            parts: parts.into_iter().map(Part::Primary).collect(),
        }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Part> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of actual lengths.
    pub fn weight(&self) -> i64 {
        self.parts.iter().map(|p| p.length()).sum()
    }

    /// The primary parts, if every part is primary.
    pub fn primary_parts(&self) -> Option<Vec<PrimaryPart>> {
        self.parts
            .iter()
            .map(|p| match p {
                Part::Primary(pp) => Some(*pp),
                Part::Secondary(_) => None,
            })
            .collect()
    }

    /// Smallest alphabet size that covers every color mentioned.
    pub fn min_alphabet(&self) -> usize {
        self.parts
            .iter()
            .map(|p| p.max_color_index() + 1)
            .max()
            .unwrap_or(1)
    }

    /// Weight and per-color counts over an `m`-color alphabet. Works on raw
    /// sequences too; the weight must be nonnegative.
    pub fn stats(&self, m: usize) -> StatVector {
        let mut counts = vec![0u64; m];
        let mut n: i64 = 0;
        for part in &self.parts {
            n += part.length();
            match part {
                Part::Primary(p) => counts[p.color.index()] += 1,
                Part::Secondary(s) => {
                    counts[s.upper_color.index()] += 1;
                    counts[s.lower_color.index()] += 1;
                }
            }
        }
        debug_assert!(n >= 0, "negative total weight");
        StatVector {
            n: n.max(0) as u64,
            counts,
        }
    }

    /// Check chain membership, collecting every violation in index order
    /// rather than stopping at the first.
    pub fn validate(&self, mode: Mode, alphabet: ColorAlphabet) -> Result<(), ValidationReport> {
        let mut violations = Vec::new();
        for (i, part) in self.parts.iter().enumerate() {
            if part.max_color_index() >= alphabet.len() {
                violations.push(Violation {
                    index: i,
                    kind: ViolationKind::ColorOutOfRange,
                });
            }
            match mode {
                Mode::CChain => {
                    if !part.is_primary() {
                        violations.push(Violation {
                            index: i,
                            kind: ViolationKind::NotPrimary,
                        });
                    }
                    if part.length() < 1 {
                        violations.push(Violation {
                            index: i,
                            kind: ViolationKind::NonPositive,
                        });
                    }
                }
                Mode::DChain => {
                    if part.length() < 1 {
                        violations.push(Violation {
                            index: i,
                            kind: ViolationKind::NonPositive,
                        });
                    } else if part.is_secondary() && part.length() == 1 {
                        violations.push(Violation {
                            index: i,
                            kind: ViolationKind::UnitSecondary,
                        });
                    }
                }
            }
        }
        for i in 0..self.parts.len().saturating_sub(1) {
            let ordered = match mode {
                Mode::CChain => match (self.parts[i], self.parts[i + 1]) {
                    (Part::Primary(x), Part::Primary(y)) => gt_natural(x, y),
                    // kind violations already reported above
                    _ => true,
                },
                Mode::DChain => gt_strong(self.parts[i], self.parts[i + 1]),
            };
            if !ordered {
                violations.push(Violation {
                    index: i,
                    kind: ViolationKind::OrderViolation,
                });
            }
        }
        violations.sort_by_key(|v| v.index);
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ValidationReport {
                mode_checked: Some(mode),
                violations,
            })
        }
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromIterator<Part> for ColoredPartition {
    fn from_iter<T: IntoIterator<Item = Part>>(iter: T) -> ColoredPartition {
        ColoredPartition {
            parts: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;
    use crate::text::parse_partition;

    #[allow(non_snake_case)]
    fn A2() -> ColorAlphabet {
        ColorAlphabet::new(2)
    }

    #[test]
    fn stats_of_worked_image() {
        let nu = parse_partition("24:a+21:bb+16:a+13:bb+11:aa+7:b+6:a", A2()).unwrap();
        let st = nu.stats(2);
        assert_eq!(st.n, 98);
        assert_eq!(st.counts, vec![5, 5]);

        let lambda = parse_partition("24:a+17:b+11:b+10:a+9:b+8:b+6:a+5:a+4:b+4:a", A2()).unwrap();
        assert_eq!(lambda.stats(2), st);
    }

    #[test]
    fn stats_trivial_cases() {
        assert_eq!(ColoredPartition::empty().stats(2), StatVector::zero(2));
        let ba = ColoredPartition::new(vec![Part::secondary(4, Color(1), Color(0))]);
        let st = ba.stats(2);
        assert_eq!(st.n, 8);
        assert_eq!(st.counts, vec![1, 1]);
    }

    #[test]
    fn validate_worked_examples() {
        let lambda = parse_partition("24:a+17:b+11:b+10:a+9:b+8:b+6:a+5:a+4:b+4:a", A2()).unwrap();
        assert!(lambda.validate(Mode::CChain, A2()).is_ok());

        let nu = parse_partition("24:a+21:bb+16:a+13:bb+11:aa+7:b+6:a", A2()).unwrap();
        assert!(nu.validate(Mode::DChain, A2()).is_ok());
    }

    #[test]
    fn validate_rejects_unit_secondary() {
        let p = parse_partition("9:a+1:ab", A2()).unwrap();
        let err = p.validate(Mode::DChain, A2()).unwrap_err();
        assert!(err
            .violations
            .iter()
            .any(|v| v.index == 1 && v.kind == ViolationKind::UnitSecondary));
    }

    #[test]
    fn validate_reports_all_violations_in_order() {
        // 3:b fails under 5:bb in a C-chain twice over; 4:a+4:a ties.
        let p = parse_partition("5:bb+3:b+4:a+4:a", A2()).unwrap();
        let err = p.validate(Mode::CChain, A2()).unwrap_err();
        let kinds: Vec<(usize, ViolationKind)> =
            err.violations.iter().map(|v| (v.index, v.kind)).collect();
        assert_eq!(
            kinds,
            vec![
                (0, ViolationKind::NotPrimary),
                (1, ViolationKind::OrderViolation),
                (2, ViolationKind::OrderViolation),
            ]
        );
    }

    #[test]
    fn validate_checks_alphabet() {
        let p = parse_partition("3:c+1:a", ColorAlphabet::new(3)).unwrap();
        let err = p.validate(Mode::CChain, A2()).unwrap_err();
        assert_eq!(err.violations[0].kind, ViolationKind::ColorOutOfRange);
    }

    #[test]
    fn empty_is_valid_in_both_modes() {
        let e = ColoredPartition::empty();
        assert!(e.validate(Mode::CChain, A2()).is_ok());
        assert!(e.validate(Mode::DChain, A2()).is_ok());
    }
}
