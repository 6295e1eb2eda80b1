//! Dilations from the colored level down to classical congruence-condition
//! partition theorems, generated minimal-difference tables, and the two
//! end-to-end verifiers.
//!
//! A dilation substitutes `q -> q^scale` and `a_i -> a_i q^{-shift_i}`, so a
//! primary part of size `k` in color `i` becomes an integer part
//! `scale*k - shift_i` and a secondary part maps to `scale*len - shift_upper
//! - shift_lower`. With `scale 4, shifts (3, 1)` the two-color families turn
//! into partitions into distinct odd parts versus partitions with
//! differences at least 5 refined mod 8; with `scale 10, shifts (6, 4, 1)`
//! the three-color families become the mod-10 / mod-20 statement verified by
//! `verify_corollary_three_color`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::color::{delta, Color, ColorAlphabet};
use crate::enumeration::for_each_d_chain_costed;
use crate::part::{gt_strong, Part};
use crate::partition::ColoredPartition;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DilationError {
    #[error("scale must be at least 1")]
    BadScale,
    #[error("shift {shift} for color {color} must lie in 0..scale ({scale})")]
    BadShift {
        color: Color,
        shift: i64,
        scale: i64,
    },
    #[error("part {part} uses a color outside the dilation's alphabet")]
    ColorOutOfRange { part: Part },
    #[error("part {part} dilates to the non-positive value {value}")]
    NonPositivePart { part: Part, value: i64 },
}

/// A modulus scale together with one shift per color. Shifts below the
/// scale keep every valid part positive after dilation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dilation {
    scale: i64,
    shifts: Vec<i64>,
}

impl Dilation {
    pub fn new(scale: i64, shifts: Vec<i64>) -> Result<Dilation, DilationError> {
        if scale < 1 {
            return Err(DilationError::BadScale);
        }
        for (i, &shift) in shifts.iter().enumerate() {
            if shift < 0 || shift >= scale {
                return Err(DilationError::BadShift {
                    color: Color(i as u8),
                    shift,
                    scale,
                });
            }
        }
        Ok(Dilation { scale, shifts })
    }

    /// Leaves every length unchanged.
    pub fn identity(m: usize) -> Dilation {
        Dilation {
            scale: 1,
            shifts: vec![0; m],
        }
    }

    /// The two-color dilation onto distinct-odd-parts territory:
    /// `q -> q^4, a -> a q^-3, b -> b q^-1`.
    pub fn siladic() -> Dilation {
        Dilation {
            scale: 4,
            shifts: vec![3, 1],
        }
    }

    /// The three-color dilation behind the mod-10 corollary:
    /// `q -> q^10` with shifts 6, 4, 1.
    pub fn three_color() -> Dilation {
        Dilation {
            scale: 10,
            shifts: vec![6, 4, 1],
        }
    }

    pub fn m(&self) -> usize {
        self.shifts.len()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn shift(&self, c: Color) -> Option<i64> {
        self.shifts.get(c.index()).copied()
    }

    /// Dilated value of one part.
    pub fn value(&self, part: Part) -> Result<i64, DilationError> {
        let shift_of = |c: Color| self.shift(c).ok_or(DilationError::ColorOutOfRange { part });
        Ok(match part {
            Part::Primary(p) => self.scale * p.size - shift_of(p.color)?,
            Part::Secondary(s) => {
                self.scale * s.length() - shift_of(s.upper_color)? - shift_of(s.lower_color)?
            }
        })
    }
}

/// One dilated part: its integer value plus the colored part it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DilatedPart {
    pub value: i64,
    pub source: Part,
}

impl fmt::Display for DilatedPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let colors: String = self.source.colors().iter().map(|c| c.to_string()).collect();
        write!(f, "{}[{}]", self.value, colors)
    }
}

/// Dilate a partition part by part, rejecting any non-positive result.
pub fn dilate_partition(
    partition: &ColoredPartition,
    dilation: &Dilation,
) -> Result<Vec<DilatedPart>, DilationError> {
    partition
        .parts()
        .iter()
        .map(|&part| {
            let value = dilation.value(part)?;
            if value < 1 {
                return Err(DilationError::NonPositivePart { part, value });
            }
            Ok(DilatedPart {
                value,
                source: part,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn matches(self, len: i64) -> bool {
        match self {
            Parity::Odd => len.rem_euclid(2) == 1,
            Parity::Even => len.rem_euclid(2) == 0,
        }
    }
}

/// A row or column class of a minimal-difference table: a primary color
/// (optionally split by length parity) or a secondary color pair (whose
/// parity is forced).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorClass {
    Primary {
        color: Color,
        parity: Option<Parity>,
    },
    Secondary {
        upper: Color,
        lower: Color,
    },
}

impl ColorClass {
    pub fn label(&self) -> String {
        match self {
            ColorClass::Primary { color, parity } => match parity {
                None => color.to_string(),
                Some(Parity::Odd) => format!("{color}_odd"),
                Some(Parity::Even) => format!("{color}_even"),
            },
            ColorClass::Secondary { upper, lower } => format!("{upper}{lower}"),
        }
    }

    /// A member part of the class with the given actual length, when the
    /// class contains one.
    pub fn member_of_length(&self, len: i64) -> Option<Part> {
        if len < 1 {
            return None;
        }
        match *self {
            ColorClass::Primary { color, parity } => match parity {
                Some(p) if !p.matches(len) => None,
                _ => Some(Part::primary(len, color)),
            },
            ColorClass::Secondary { upper, lower } => {
                let d = delta(upper, lower);
                if (len - d) % 2 == 0 && (len - d) / 2 >= 1 {
                    Some(Part::secondary((len - d) / 2, upper, lower))
                } else {
                    None
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Granularity {
    /// One class per color: primaries unsplit, all color pairs.
    Reduced,
    /// Primary colors split into odd and even length classes.
    ParitySplit,
}

/// Square table of minimal admissible differences between color classes.
#[derive(Clone, Debug)]
pub struct DiffTable {
    pub granularity: Granularity,
    pub classes: Vec<ColorClass>,
    entries: Vec<Vec<i64>>,
}

impl DiffTable {
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    pub fn entry_by_label(&self, row: &str, col: &str) -> Option<i64> {
        let r = self.classes.iter().position(|c| c.label() == row)?;
        let c = self.classes.iter().position(|c| c.label() == col)?;
        Some(self.entries[r][c])
    }

    /// Aligned ASCII rendering, rows = larger part's class.
    pub fn render(&self) -> String {
        let labels: Vec<String> = self.classes.iter().map(|c| c.label()).collect();
        let width = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(2) + 1;
        let mut out = String::new();
        out.push_str(&format!("{:>width$} |", ""));
        for l in &labels {
            out.push_str(&format!("{l:>width$}"));
        }
        out.push('\n');
        out.push_str(&format!("{:->width$}-+", ""));
        out.push_str(&"-".repeat(width * labels.len()));
        out.push('\n');
        for (r, l) in labels.iter().enumerate() {
            out.push_str(&format!("{l:>width$} |"));
            for c in 0..labels.len() {
                out.push_str(&format!("{:>width$}", self.entries[r][c]));
            }
            out.push('\n');
        }
        out
    }

    /// No cycle of zero-difference steps: the table induces a strict order.
    pub fn zero_entries_acyclic(&self) -> bool {
        let n = self.classes.len();
        // DFS over edges with entry 0 looking for a cycle
        let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        fn dfs(v: usize, entries: &[Vec<i64>], state: &mut [u8]) -> bool {
            state[v] = 1;
            for w in 0..entries.len() {
                if entries[v][w] == 0 {
                    if state[w] == 1 {
                        return false;
                    }
                    if state[w] == 0 && !dfs(w, entries, state) {
                        return false;
                    }
                }
            }
            state[v] = 2;
            true
        }
        (0..n).all(|v| state[v] != 0 || dfs(v, &self.entries, &mut state))
    }
}

/// Classes in canonical order: primaries (split when asked), then color
/// pairs with odd parity (upper <= lower), then pairs with even parity.
fn table_classes(alphabet: ColorAlphabet, granularity: Granularity) -> Vec<ColorClass> {
    let mut classes = Vec::new();
    for color in alphabet.colors() {
        match granularity {
            Granularity::Reduced => classes.push(ColorClass::Primary {
                color,
                parity: None,
            }),
            Granularity::ParitySplit => {
                classes.push(ColorClass::Primary {
                    color,
                    parity: Some(Parity::Odd),
                });
                classes.push(ColorClass::Primary {
                    color,
                    parity: Some(Parity::Even),
                });
            }
        }
    }
    for upper in alphabet.colors() {
        for lower in alphabet.colors() {
            if delta(upper, lower) == 1 {
                classes.push(ColorClass::Secondary { upper, lower });
            }
        }
    }
    for upper in alphabet.colors() {
        for lower in alphabet.colors() {
            if delta(upper, lower) == 0 {
                classes.push(ColorClass::Secondary { upper, lower });
            }
        }
    }
    classes
}

/// Minimal difference realized by an admissible ordered pair from the two
/// classes. The strong order compares pure length differences, so a single
/// large representative per parity decides each difference.
fn minimal_difference(row: &ColorClass, col: &ColorClass) -> i64 {
    for diff in 0..=12 {
        for base in [40i64, 41] {
            if let (Some(y), Some(x)) = (
                col.member_of_length(base),
                row.member_of_length(base + diff),
            ) {
                if gt_strong(x, y) {
                    return diff;
                }
            }
        }
    }
    unreachable!("every class pair admits a difference of at most 12")
}

/// Compute the full minimal-difference table from the order predicates.
pub fn generate_diff_table(alphabet: ColorAlphabet, granularity: Granularity) -> DiffTable {
    let classes = table_classes(alphabet, granularity);
    let entries = classes
        .iter()
        .map(|row| {
            classes
                .iter()
                .map(|col| minimal_difference(row, col))
                .collect()
        })
        .collect();
    DiffTable {
        granularity,
        classes,
        entries,
    }
}

// ---------------------------------------------------------------------------
// Two-color verifier: distinct odd parts vs the mod-8 difference conditions.
// ---------------------------------------------------------------------------

/// Pairwise difference condition of the dilated two-color theorem.
pub fn siladic_pair_ok(hi: i64, lo: i64) -> bool {
    let d = hi - lo;
    if d < 5 {
        return false;
    }
    match d {
        5 => matches!(hi.rem_euclid(8), 1 | 4),
        6 => matches!(hi.rem_euclid(8), 1 | 3 | 5 | 7),
        7 => matches!(hi.rem_euclid(8), 0 | 1 | 3 | 4 | 6 | 7),
        8 => matches!(hi.rem_euclid(8), 0 | 1 | 3 | 4 | 5 | 7),
        _ => true,
    }
}

/// Full condition set for one partition (parts in decreasing order): no
/// part equal to 2, and every adjacent pair passes `siladic_pair_ok`.
pub fn siladic_conditions_ok(parts: &[i64]) -> bool {
    parts.iter().all(|&p| p >= 1 && p != 2) && parts.windows(2).all(|w| siladic_pair_ok(w[0], w[1]))
}

fn push_sorted(bucket: &mut Vec<Vec<i64>>, mut partition: Vec<i64>) {
    partition.sort_unstable_by(|a, b| b.cmp(a));
    bucket.push(partition);
}

/// Partitions of `n` into distinct odd parts.
pub fn distinct_odd_partitions(n: i64) -> Vec<Vec<i64>> {
    fn rec(remaining: i64, max_part: i64, stack: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if remaining == 0 {
            out.push(stack.clone());
            return;
        }
        let mut v = max_part.min(remaining);
        if v % 2 == 0 {
            v -= 1;
        }
        while v >= 1 {
            stack.push(v);
            rec(remaining - v, v - 2, stack, out);
            stack.pop();
            v -= 2;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions of `n` satisfying the dilated two-color conditions, found by
/// direct search over integer parts (independent of the chain enumerator).
pub fn siladic_condition_partitions(n: i64) -> Vec<Vec<i64>> {
    fn rec(remaining: i64, prev: Option<i64>, stack: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if remaining == 0 {
            out.push(stack.clone());
            return;
        }
        let hi = match prev {
            Some(p) => (p - 5).min(remaining),
            None => remaining,
        };
        for v in (1..=hi).rev() {
            if v == 2 {
                continue;
            }
            if let Some(p) = prev {
                if !siladic_pair_ok(p, v) {
                    continue;
                }
            }
            stack.push(v);
            rec(remaining - v, Some(v), stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug)]
pub struct SiladicBucket {
    pub n: u64,
    /// Dilated images of the two-color D-chains of this weight.
    pub dilated: Vec<Vec<i64>>,
    /// Partitions found by checking the integer conditions directly.
    pub direct: Vec<Vec<i64>>,
    /// Partitions into distinct odd parts.
    pub distinct_odd: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct SiladicReport {
    pub max_n: u64,
    pub buckets: Vec<SiladicBucket>,
    pub failures: Vec<String>,
}

impl SiladicReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SiladicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "two-color dilation check, n<={}", self.max_n)?;
        for b in &self.buckets {
            writeln!(
                f,
                "  n={}: dilated={} direct={} distinct-odd={}",
                b.n,
                b.dilated.len(),
                b.direct.len(),
                b.distinct_odd.len()
            )?;
        }
        for failure in self.failures.iter().take(10) {
            writeln!(f, "  FAIL {failure}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// For every `n <= max_n`: the dilated D-chains, the directly enumerated
/// condition partitions, and the distinct-odd partitions must agree (the
/// first two as sets, the third in count).
pub fn verify_siladic(max_n: u64) -> SiladicReport {
    let alphabet = ColorAlphabet::new(2);
    let dilation = Dilation::siladic();
    let mut dilated: BTreeMap<u64, Vec<Vec<i64>>> = BTreeMap::new();
    for_each_d_chain_costed(
        alphabet,
        max_n as i64,
        |p| dilation.value(p).expect("two-color part"),
        |chain| {
            if chain.is_empty() {
                return;
            }
            let values: Vec<i64> = chain
                .iter()
                .map(|&p| dilation.value(p).expect("two-color part"))
                .collect();
            let n: i64 = values.iter().sum();
            push_sorted(dilated.entry(n as u64).or_default(), values);
        },
    );

    let mut buckets = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let mut dil = dilated.remove(&n).unwrap_or_default();
        dil.sort();
        let direct = siladic_condition_partitions(n as i64);
        let distinct_odd = distinct_odd_partitions(n as i64);
        for p in &dil {
            if !siladic_conditions_ok(p) {
                failures.push(format!(
                    "n={n}: dilated partition {p:?} breaks the conditions"
                ));
            }
        }
        if dil != direct {
            failures.push(format!(
                "n={n}: dilated set ({}) differs from direct search ({})",
                dil.len(),
                direct.len()
            ));
        }
        if dil.len() != distinct_odd.len() {
            failures.push(format!(
                "n={n}: {} condition partitions vs {} distinct-odd partitions",
                dil.len(),
                distinct_odd.len()
            ));
        }
        buckets.push(SiladicBucket {
            n,
            dilated: dil,
            direct,
            distinct_odd,
        });
    }
    SiladicReport {
        max_n,
        buckets,
        failures,
    }
}

// ---------------------------------------------------------------------------
// Three-color verifier: the mod-10 / mod-20 corollary.
// ---------------------------------------------------------------------------

/// Allowed residues of the larger part, per difference 9..=20. Differences
/// above 20 are unconditionally allowed, below 9 forbidden.
const COROLLARY_DIFF_ROWS: [(i64, &[i64]); 12] = [
    (9, &[4, 19]),
    (10, &[]),
    (11, &[4, 6, 10, 15]),
    (12, &[6, 15, 16]),
    (13, &[3, 6, 9, 16, 19]),
    (14, &[4, 9, 10, 13, 19]),
    (15, &[4, 5, 9, 10, 14, 15, 19]),
    (16, &[0, 4, 6, 9, 10, 15, 16, 19]),
    (17, &[0, 3, 6, 10, 13, 15, 16, 19]),
    (18, &[2, 3, 4, 6, 8, 13, 14, 16]),
    (19, &[2, 3, 4, 5, 9, 13, 14, 15, 18, 19]),
    (20, &[0, 3, 4, 5, 6, 9, 10, 13, 14, 15, 16, 19]),
];

pub fn corollary_pair_ok(hi: i64, lo: i64) -> bool {
    let d = hi - lo;
    if d < 9 {
        return false;
    }
    if d > 20 {
        return true;
    }
    let row = COROLLARY_DIFF_ROWS
        .iter()
        .find(|(diff, _)| *diff == d)
        .map(|(_, residues)| *residues)
        .unwrap_or(&[]);
    row.contains(&hi.rem_euclid(20))
}

/// Part exclusions of the corollary's difference-condition side.
pub fn corollary_part_allowed(v: i64) -> bool {
    if v < 1 || matches!(v, 2 | 3 | 5 | 8) {
        return false;
    }
    !matches!(v.rem_euclid(20), 1 | 7 | 11 | 12 | 17)
}

/// Residue statistics `(u, v, w)` of an integer partition under the
/// three-color dilation's residue classes.
pub fn corollary_stats(parts: &[i64]) -> (u64, u64, u64) {
    let mut u = 0;
    let mut v = 0;
    let mut w = 0;
    for &p in parts {
        let r10 = p.rem_euclid(10);
        let r20 = p.rem_euclid(20);
        if matches!(r10, 0 | 3 | 4) {
            u += 1;
        }
        if r20 == 18 {
            u += 2;
        }
        if matches!(r10, 0 | 5 | 6) {
            v += 1;
        }
        if r20 == 2 {
            v += 2;
        }
        if matches!(r10, 3 | 5 | 9) {
            w += 1;
        }
        if r20 == 8 {
            w += 2;
        }
    }
    (u, v, w)
}

/// A mod-10 partition together with its residue-class counts.
pub type ModTenPartition = (Vec<i64>, (u64, u64, u64));

/// Partitions of `n` into distinct parts congruent to 4, 6 or 9 mod 10,
/// with the count of each residue class.
pub fn corollary_a_partitions(n: i64) -> Vec<ModTenPartition> {
    fn rec(remaining: i64, max_part: i64, stack: &mut Vec<i64>, out: &mut Vec<ModTenPartition>) {
        if remaining == 0 {
            let mut stats = (0, 0, 0);
            for &p in stack.iter() {
                match p % 10 {
                    4 => stats.0 += 1,
                    6 => stats.1 += 1,
                    9 => stats.2 += 1,
                    _ => unreachable!(),
                }
            }
            out.push((stack.clone(), stats));
            return;
        }
        for v in (1..=max_part.min(remaining)).rev() {
            if !matches!(v % 10, 4 | 6 | 9) {
                continue;
            }
            stack.push(v);
            rec(remaining - v, v - 1, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Direct search for the corollary's difference-condition partitions of `n`,
/// reading residues and differences only.
pub fn corollary_b_partitions(n: i64) -> Vec<Vec<i64>> {
    fn rec(remaining: i64, prev: Option<i64>, stack: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if remaining == 0 {
            out.push(stack.clone());
            return;
        }
        let hi = match prev {
            Some(p) => (p - 9).min(remaining),
            None => remaining,
        };
        for v in (1..=hi).rev() {
            if !corollary_part_allowed(v) {
                continue;
            }
            if let Some(p) = prev {
                if !corollary_pair_ok(p, v) {
                    continue;
                }
            }
            stack.push(v);
            rec(remaining - v, Some(v), stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub type CorollaryKey = (u64, (u64, u64, u64));

#[derive(Clone, Debug, Default)]
pub struct CorollaryBucket {
    pub a_side: Vec<Vec<i64>>,
    pub b_dilated: Vec<Vec<i64>>,
    pub b_direct: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub max_n: u64,
    pub buckets: BTreeMap<CorollaryKey, CorollaryBucket>,
    pub failures: Vec<String>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn bucket(&self, n: u64, u: u64, v: u64, w: u64) -> Option<&CorollaryBucket> {
        self.buckets.get(&(n, (u, v, w)))
    }
}

impl fmt::Display for CorollaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "three-color dilation check, n<={}", self.max_n)?;
        writeln!(f, "  {} nonempty buckets", self.buckets.len())?;
        for failure in self.failures.iter().take(10) {
            writeln!(f, "  FAIL {failure}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Compare, for every `n <= max_n` and every statistics triple: the mod-10
/// side, the dilated three-color D-chains, and the direct difference-
/// condition search. The two difference-condition routes must agree as
/// sets, the mod-10 side in count, and the dilated statistics must match
/// the residue-derived statistics part for part.
pub fn verify_corollary_three_color(max_n: u64) -> CorollaryReport {
    let alphabet = ColorAlphabet::new(3);
    let dilation = Dilation::three_color();
    let mut buckets: BTreeMap<CorollaryKey, CorollaryBucket> = BTreeMap::new();
    let mut failures = Vec::new();

    for_each_d_chain_costed(
        alphabet,
        max_n as i64,
        |p| dilation.value(p).expect("three-color part"),
        |chain| {
            if chain.is_empty() {
                return;
            }
            let values: Vec<i64> = chain
                .iter()
                .map(|&p| dilation.value(p).expect("three-color part"))
                .collect();
            let n: i64 = values.iter().sum();
            let partition = ColoredPartition::new(chain.to_vec());
            let stats = partition.stats(3);
            let key = (
                n as u64,
                (stats.counts[0], stats.counts[1], stats.counts[2]),
            );
            if corollary_stats(&values) != (stats.counts[0], stats.counts[1], stats.counts[2]) {
                failures.push(format!(
                    "residue statistics of {values:?} disagree with colored statistics {stats}"
                ));
            }
            push_sorted(&mut buckets.entry(key).or_default().b_dilated, values);
        },
    );

    for n in 1..=max_n as i64 {
        for (partition, stats) in corollary_a_partitions(n) {
            buckets
                .entry((n as u64, stats))
                .or_default()
                .a_side
                .push(partition);
        }
        for partition in corollary_b_partitions(n) {
            let stats = corollary_stats(&partition);
            buckets
                .entry((n as u64, stats))
                .or_default()
                .b_direct
                .push(partition);
        }
    }

    for (key, bucket) in &mut buckets {
        bucket.a_side.sort();
        bucket.b_dilated.sort();
        bucket.b_direct.sort();
        if bucket.b_dilated != bucket.b_direct {
            failures.push(format!(
                "bucket {key:?}: dilated chains and direct search disagree ({} vs {})",
                bucket.b_dilated.len(),
                bucket.b_direct.len()
            ));
        }
        if bucket.a_side.len() != bucket.b_direct.len() {
            failures.push(format!(
                "bucket {key:?}: {} mod-10 partitions vs {} condition partitions",
                bucket.a_side.len(),
                bucket.b_direct.len()
            ));
        }
    }

    CorollaryReport {
        max_n,
        buckets,
        failures,
    }
}
