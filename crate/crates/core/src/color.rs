//! Primary colors: a totally ordered finite alphabet `a < b < c < ...`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Index into an ordered color alphabet. Colors compare by index, so
/// `Color(0) < Color(1) < ...` matches the display order `a < b < c < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Color(pub u8);

impl Color {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Display letter for indices below 26 (`a`..`z`).
    pub fn letter(self) -> Option<char> {
        if self.0 < 26 {
            Some((b'a' + self.0) as char)
        } else {
            None
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        if c.is_ascii_lowercase() {
            Some(Color(c as u8 - b'a'))
        } else {
            None
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "c{}", self.0),
        }
    }
}

/// An alphabet of `m >= 1` primary colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorAlphabet {
    m: usize,
}

impl ColorAlphabet {
    /// Panics if `m == 0`; an empty alphabet has no parts at all.
    pub fn new(m: usize) -> ColorAlphabet {
        assert!(m >= 1, "alphabet needs at least one color");
        ColorAlphabet { m }
    }

    pub fn len(self) -> usize {
        self.m
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn contains(self, c: Color) -> bool {
        c.index() < self.m
    }

    pub fn color(self, index: usize) -> Option<Color> {
        if index < self.m {
            Some(Color(index as u8))
        } else {
            None
        }
    }

    pub fn colors(self) -> impl Iterator<Item = Color> {
        (0..self.m as u8).map(Color)
    }
}

/// The order indicator on colors: 1 if `p <= q`, else 0.
///
/// This single indicator drives every length parity and minimal-difference
/// constant in the library.
pub fn delta(p: Color, q: Color) -> i64 {
    (p.index() <= q.index()) as i64
}
