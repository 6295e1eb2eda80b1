//! Textual and structured representations of parts and partitions.
//!
//! Text grammar: a part is `<len>:<colors>` where `<colors>` is one letter
//! for a primary part (`24:a`) or two letters for a secondary part (`19:ab`,
//! `8:ba`, `11:aa`). A partition joins parts with `+`. A secondary part's
//! length parity must equal the color pair's order indicator, e.g. `ab`
//! colors only odd lengths and `ba` only even ones.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::color::{delta, Color, ColorAlphabet};
use crate::part::{Part, PrimaryPart, SecondaryPart};
use crate::partition::ColoredPartition;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid part `{token}`: expected `<len>:<color>` or `<len>:<c1><c2>`")]
    Malformed { token: String },
    #[error("invalid length in `{token}`: expected a nonnegative integer")]
    BadLength { token: String },
    #[error("invalid colors in `{token}`: expected one or two letters from `a`..`{last}`")]
    BadColors { token: String, last: char },
    #[error("part `{token}`: length parity {parity} does not match color pair `{colors}`")]
    ParityMismatch {
        token: String,
        parity: i64,
        colors: String,
    },
}

/// Parse one `<len>:<colors>` token.
pub fn parse_part(token: &str, alphabet: ColorAlphabet) -> Result<Part, ParseError> {
    let token_owned = || token.trim().to_string();
    let t = token.trim();
    let (len_str, colors_str) = t.split_once(':').ok_or_else(|| ParseError::Malformed {
        token: token_owned(),
    })?;
    let len: i64 = len_str
        .trim()
        .parse()
        .map_err(|_| ParseError::BadLength {
            token: token_owned(),
        })
        .and_then(|n: i64| {
            if n >= 0 {
                Ok(n)
            } else {
                Err(ParseError::BadLength {
                    token: token_owned(),
                })
            }
        })?;
    let last = alphabet
        .color(alphabet.len() - 1)
        .and_then(Color::letter)
        .unwrap_or('z');
    let colors: Vec<Color> = colors_str
        .trim()
        .chars()
        .map(Color::from_letter)
        .collect::<Option<Vec<_>>>()
        .ok_or(ParseError::BadColors {
            token: token_owned(),
            last,
        })?;
    if colors.iter().any(|&c| !alphabet.contains(c)) || colors.is_empty() || colors.len() > 2 {
        return Err(ParseError::BadColors {
            token: token_owned(),
            last,
        });
    }
    match colors.as_slice() {
        [c] => Ok(Part::primary(len, *c)),
        [p, q] => {
            let d = delta(*p, *q);
            if (len - d) % 2 != 0 {
                return Err(ParseError::ParityMismatch {
                    token: token_owned(),
                    parity: len.rem_euclid(2),
                    colors: format!("{p}{q}"),
                });
            }
            Ok(Part::secondary((len - d) / 2, *p, *q))
        }
        _ => unreachable!(),
    }
}

/// Parse a `+`-joined partition; an empty (or all-whitespace) string is the
/// empty partition.
pub fn parse_partition(s: &str, alphabet: ColorAlphabet) -> Result<ColoredPartition, ParseError> {
    if s.trim().is_empty() {
        return Ok(ColoredPartition::empty());
    }
    s.split('+')
        .map(|tok| parse_part(tok, alphabet))
        .collect::<Result<Vec<_>, _>>()
        .map(ColoredPartition::new)
}

/// Smallest alphabet that covers every color letter in the input. Falls back
/// to one color for inputs without letters.
pub fn infer_alphabet(s: &str) -> ColorAlphabet {
    let m = s
        .chars()
        .filter(|c| c.is_ascii_lowercase())
        .map(|c| c as u8 - b'a' + 1)
        .max()
        .unwrap_or(1);
    ColorAlphabet::new(m as usize)
}

/// Structured form of a part: `{kind, k, colors, length}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PartRepr {
    pub kind: String,
    pub k: i64,
    pub colors: Vec<String>,
    pub length: i64,
}

impl From<Part> for PartRepr {
    fn from(p: Part) -> PartRepr {
        match p {
            Part::Primary(pp) => PartRepr {
                kind: "primary".into(),
                k: pp.size,
                colors: vec![pp.color.to_string()],
                length: pp.size,
            },
            Part::Secondary(s) => PartRepr {
                kind: "secondary".into(),
                k: s.lower_size,
                colors: vec![s.upper_color.to_string(), s.lower_color.to_string()],
                length: s.length(),
            },
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ReprError {
    #[error("unknown part kind `{0}`")]
    UnknownKind(String),
    #[error("bad color name `{0}`")]
    BadColor(String),
    #[error("expected {expected} colors, got {got}")]
    WrongColorCount { expected: usize, got: usize },
    #[error("stated length {stated} does not match computed length {computed}")]
    LengthMismatch { stated: i64, computed: i64 },
}

impl TryFrom<PartRepr> for Part {
    type Error = ReprError;

    fn try_from(r: PartRepr) -> Result<Part, ReprError> {
        let parse_color = |s: &String| -> Result<Color, ReprError> {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Color::from_letter(c).ok_or(ReprError::BadColor(s.clone())),
                _ => Err(ReprError::BadColor(s.clone())),
            }
        };
        let part = match r.kind.as_str() {
            "primary" => {
                if r.colors.len() != 1 {
                    return Err(ReprError::WrongColorCount {
                        expected: 1,
                        got: r.colors.len(),
                    });
                }
                Part::Primary(PrimaryPart::new(r.k, parse_color(&r.colors[0])?))
            }
            "secondary" => {
                if r.colors.len() != 2 {
                    return Err(ReprError::WrongColorCount {
                        expected: 2,
                        got: r.colors.len(),
                    });
                }
                Part::Secondary(SecondaryPart::new(
                    r.k,
                    parse_color(&r.colors[0])?,
                    parse_color(&r.colors[1])?,
                ))
            }
            other => return Err(ReprError::UnknownKind(other.to_string())),
        };
        if part.length() != r.length {
            return Err(ReprError::LengthMismatch {
                stated: r.length,
                computed: part.length(),
            });
        }
        Ok(part)
    }
}

/// Structured form of a whole partition.
pub fn partition_repr(p: &ColoredPartition) -> Vec<PartRepr> {
    p.parts().iter().map(|&part| PartRepr::from(part)).collect()
}
