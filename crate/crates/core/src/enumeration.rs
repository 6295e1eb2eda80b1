//! Exhaustive generation of both chain families, statistic binning, and the
//! truncated product-series expansion that all three counting routes are
//! checked against.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::bijection::{phi, psi, Strategy};
use crate::color::{delta, ColorAlphabet};
use crate::part::{gt_strong, Part, PrimaryPart};
use crate::partition::{ColoredPartition, Mode, StatVector};

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("weight bound {requested} exceeds the cap {cap} for {m} colors (raise the cap explicitly to override)")]
    CapExceeded { requested: u64, cap: u64, m: usize },
}

/// Default weight caps; chain counts grow quickly with the color count.
pub fn default_cap(m: usize) -> u64 {
    match m {
        1 => 64,
        2 => 40,
        3 => 25,
        _ => 16,
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    /// Collect the actual partitions per bucket, not just counts.
    pub list: bool,
    /// Override the default per-`m` weight cap.
    pub cap: Option<u64>,
}

/// Counts per (weight, color-count) bucket.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    counts: BTreeMap<StatVector, u64>,
}

impl CountTable {
    pub fn count(&self, stat: &StatVector) -> u64 {
        self.counts.get(stat).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&StatVector, u64)> {
        self.counts.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of chains of a given weight, over all color counts.
    pub fn total_at(&self, n: u64) -> u64 {
        self.counts
            .iter()
            .filter(|(k, _)| k.n == n)
            .map(|(_, &v)| v)
            .sum()
    }

    fn record(&mut self, stat: StatVector) {
        *self.counts.entry(stat).or_insert(0) += 1;
    }

    fn absorb(&mut self, other: CountTable) {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
    }
}

/// Counts plus optional per-bucket listings, in generation order.
#[derive(Clone, Debug, Default)]
pub struct ChainEnumeration {
    pub table: CountTable,
    pub listings: Option<BTreeMap<StatVector, Vec<ColoredPartition>>>,
}

impl ChainEnumeration {
    fn new(list: bool) -> ChainEnumeration {
        ChainEnumeration {
            table: CountTable::default(),
            listings: if list { Some(BTreeMap::new()) } else { None },
        }
    }

    fn record(&mut self, m: usize, parts: &[Part]) {
        let partition = ColoredPartition::new(parts.to_vec());
        let stat = partition.stats(m);
        self.table.record(stat.clone());
        if let Some(listings) = &mut self.listings {
            listings.entry(stat).or_default().push(partition);
        }
    }

    fn absorb(&mut self, other: ChainEnumeration) {
        self.table.absorb(other.table);
        if let (Some(mine), Some(theirs)) = (&mut self.listings, other.listings) {
            for (k, v) in theirs {
                mine.entry(k).or_default().extend(v);
            }
        }
    }
}

/// All valid parts of one actual length: primary parts by color, then
/// secondary parts by color pair. Secondary parts exist only when the
/// length's parity matches the pair and the lower half is at least 1.
pub fn parts_of_length(alphabet: ColorAlphabet, len: i64) -> Vec<Part> {
    let mut out = Vec::new();
    if len < 1 {
        return out;
    }
    for c in alphabet.colors() {
        out.push(Part::primary(len, c));
    }
    for p in alphabet.colors() {
        for q in alphabet.colors() {
            let d = delta(p, q);
            if (len - d) % 2 == 0 && (len - d) / 2 >= 1 {
                out.push(Part::secondary((len - d) / 2, p, q));
            }
        }
    }
    out
}

fn d_chain_rec<C, F>(
    by_length: &[Vec<Part>],
    budget: i64,
    last: Option<Part>,
    stack: &mut Vec<Part>,
    cost: &C,
    visit: &mut F,
) where
    C: Fn(Part) -> i64,
    F: FnMut(&[Part]),
{
    visit(stack);
    let mut max_len = budget.min(by_length.len() as i64 - 1);
    if let Some(last) = last {
        max_len = max_len.min(last.length());
    }
    for len in (1..=max_len).rev() {
        for &part in &by_length[len as usize] {
            if cost(part) > budget {
                continue;
            }
            if let Some(last) = last {
                if !gt_strong(last, part) {
                    continue;
                }
            }
            stack.push(part);
            d_chain_rec(
                by_length,
                budget - cost(part),
                Some(part),
                stack,
                cost,
                visit,
            );
            stack.pop();
        }
    }
}

/// Visit every D-chain whose total `cost` stays within `budget`, including
/// the empty chain. `cost` must dominate the actual length (`cost(p) >=
/// p.length() >= 1`); the plain weight is `|p.length()|` itself.
pub fn for_each_d_chain_costed<C, F>(alphabet: ColorAlphabet, budget: i64, cost: C, mut visit: F)
where
    C: Fn(Part) -> i64,
    F: FnMut(&[Part]),
{
    let max_len = budget.max(0);
    let by_length: Vec<Vec<Part>> = (0..=max_len)
        .map(|len| parts_of_length(alphabet, len))
        .collect();
    let mut stack = Vec::new();
    d_chain_rec(&by_length, budget, None, &mut stack, &cost, &mut visit);
}

/// Visit every D-chain of weight at most `max_n`, including the empty one.
pub fn for_each_d_chain<F: FnMut(&[Part])>(alphabet: ColorAlphabet, max_n: i64, visit: F) {
    for_each_d_chain_costed(alphabet, max_n, |p| p.length(), visit)
}

fn c_chain_rec<F>(
    alphabet: ColorAlphabet,
    budget: i64,
    last: Option<PrimaryPart>,
    stack: &mut Vec<PrimaryPart>,
    visit: &mut F,
) where
    F: FnMut(&[PrimaryPart]),
{
    visit(stack);
    let max_len = match last {
        Some(last) => budget.min(last.size),
        None => budget,
    };
    for len in (1..=max_len).rev() {
        for c in alphabet.colors() {
            if let Some(last) = last {
                // strictly below `last` in the natural order
                if len == last.size && c >= last.color {
                    continue;
                }
            }
            let part = PrimaryPart::new(len, c);
            stack.push(part);
            c_chain_rec(alphabet, budget - len, Some(part), stack, visit);
            stack.pop();
        }
    }
}

/// Visit every C-chain of weight at most `max_n`, including the empty one.
pub fn for_each_c_chain<F: FnMut(&[PrimaryPart])>(
    alphabet: ColorAlphabet,
    max_n: i64,
    mut visit: F,
) {
    let mut stack = Vec::new();
    c_chain_rec(alphabet, max_n, None, &mut stack, &mut visit);
}

fn check_cap(
    alphabet: ColorAlphabet,
    max_n: u64,
    opts: &EnumerateOptions,
) -> Result<(), EnumerationError> {
    let cap = opts.cap.unwrap_or_else(|| default_cap(alphabet.len()));
    if max_n > cap {
        return Err(EnumerationError::CapExceeded {
            requested: max_n,
            cap,
            m: alphabet.len(),
        });
    }
    Ok(())
}

/// Enumerate C-chains of weight at most `max_n`, binned by statistics.
/// Subtrees under distinct first parts are independent and run in parallel.
pub fn enumerate_c_chains(
    alphabet: ColorAlphabet,
    max_n: u64,
    opts: &EnumerateOptions,
) -> Result<ChainEnumeration, EnumerationError> {
    check_cap(alphabet, max_n, opts)?;
    let m = alphabet.len();
    let budget = max_n as i64;
    let mut roots = Vec::new();
    for len in (1..=budget).rev() {
        for c in alphabet.colors() {
            roots.push(PrimaryPart::new(len, c));
        }
    }
    let partials: Vec<ChainEnumeration> = roots
        .into_par_iter()
        .map(|root| {
            let mut acc = ChainEnumeration::new(opts.list);
            let mut stack = vec![root];
            c_chain_rec(
                alphabet,
                budget - root.size,
                Some(root),
                &mut stack,
                &mut |chain: &[PrimaryPart]| {
                    let parts: Vec<Part> = chain.iter().map(|&p| p.into()).collect();
                    acc.record(m, &parts);
                },
            );
            acc
        })
        .collect();
    let mut result = ChainEnumeration::new(opts.list);
    result.record(m, &[]); // the empty chain
    for partial in partials {
        result.absorb(partial);
    }
    Ok(result)
}

/// Enumerate D-chains of weight at most `max_n`, binned by statistics.
pub fn enumerate_d_chains(
    alphabet: ColorAlphabet,
    max_n: u64,
    opts: &EnumerateOptions,
) -> Result<ChainEnumeration, EnumerationError> {
    check_cap(alphabet, max_n, opts)?;
    let m = alphabet.len();
    let budget = max_n as i64;
    let by_length: Vec<Vec<Part>> = (0..=budget)
        .map(|len| parts_of_length(alphabet, len))
        .collect();
    let mut roots = Vec::new();
    for len in (1..=budget).rev() {
        roots.extend(by_length[len as usize].iter().copied());
    }
    let partials: Vec<ChainEnumeration> = roots
        .into_par_iter()
        .map(|root| {
            let mut acc = ChainEnumeration::new(opts.list);
            let mut stack = vec![root];
            d_chain_rec(
                &by_length,
                budget - root.length(),
                Some(root),
                &mut stack,
                &|p| p.length(),
                &mut |chain: &[Part]| acc.record(m, chain),
            );
            acc
        })
        .collect();
    let mut result = ChainEnumeration::new(opts.list);
    result.record(m, &[]);
    for partial in partials {
        result.absorb(partial);
    }
    Ok(result)
}

/// Truncated expansion of `prod_i prod_{k=1..N} (1 + a_i q^k)` with exact
/// integer coefficients, stored sparsely by color-count vector per degree.
#[derive(Clone, Debug)]
pub struct MultiSeries {
    m: usize,
    max_n: u64,
    coeffs: Vec<BTreeMap<Vec<u64>, BigUint>>,
}

impl MultiSeries {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn truncation(&self) -> u64 {
        self.max_n
    }

    pub fn coefficient(&self, n: u64, u: &[u64]) -> BigUint {
        self.coeffs
            .get(n as usize)
            .and_then(|row| row.get(u))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (StatVector, &BigUint)> {
        self.coeffs.iter().enumerate().flat_map(|(n, row)| {
            row.iter().map(move |(u, c)| {
                (
                    StatVector {
                        n: n as u64,
                        counts: u.clone(),
                    },
                    c,
                )
            })
        })
    }
}

/// Expand the distinct-parts product generating function, truncated at
/// `q^max_n`.
pub fn expand_product(alphabet: ColorAlphabet, max_n: u64) -> MultiSeries {
    let m = alphabet.len();
    let n = max_n as usize;
    let mut coeffs: Vec<BTreeMap<Vec<u64>, BigUint>> = vec![BTreeMap::new(); n + 1];
    coeffs[0].insert(vec![0; m], BigUint::from(1u32));
    for color in 0..m {
        for k in 1..=n {
            // multiply by (1 + a_color q^k), descending so each source row
            // is still the pre-multiplication value
            for deg in (k..=n).rev() {
                let (lo, hi) = coeffs.split_at_mut(deg);
                let source = &lo[deg - k];
                let target = &mut hi[0];
                for (u, c) in source {
                    let mut shifted = u.clone();
                    shifted[color] += 1;
                    let entry = target.entry(shifted).or_default();
                    *entry += c;
                }
            }
        }
    }
    MultiSeries { m, max_n, coeffs }
}

/// Three-way counting comparison: generated C-chains, generated D-chains,
/// and the product-series coefficients must agree on every bucket.
#[derive(Clone, Debug)]
pub struct EquinumerosityReport {
    pub m: usize,
    pub max_n: u64,
    pub buckets_checked: usize,
    pub mismatches: Vec<BucketMismatch>,
}

#[derive(Clone, Debug)]
pub struct BucketMismatch {
    pub stat: StatVector,
    pub c_count: u64,
    pub d_count: u64,
    pub series: u64,
}

impl EquinumerosityReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for EquinumerosityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "equinumerosity m={} n<={}: {} buckets",
            self.m, self.max_n, self.buckets_checked
        )?;
        for mm in &self.mismatches {
            writeln!(
                f,
                "  MISMATCH {}: C={} D={} series={}",
                mm.stat, mm.c_count, mm.d_count, mm.series
            )?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn verify_equinumerosity(
    alphabet: ColorAlphabet,
    max_n: u64,
    opts: &EnumerateOptions,
) -> Result<EquinumerosityReport, EnumerationError> {
    let plain = EnumerateOptions {
        list: false,
        cap: opts.cap,
    };
    let c = enumerate_c_chains(alphabet, max_n, &plain)?;
    let d = enumerate_d_chains(alphabet, max_n, &plain)?;
    let series = expand_product(alphabet, max_n);

    let mut keys: std::collections::BTreeSet<StatVector> = std::collections::BTreeSet::new();
    keys.extend(c.table.iter().map(|(k, _)| k.clone()));
    keys.extend(d.table.iter().map(|(k, _)| k.clone()));
    keys.extend(series.iter().map(|(k, _)| k));

    let mut mismatches = Vec::new();
    for key in &keys {
        let c_count = c.table.count(key);
        let d_count = d.table.count(key);
        let coeff = series.coefficient(key.n, &key.counts);
        let series_count = u64::try_from(&coeff).unwrap_or(u64::MAX);
        if c_count != d_count || c_count != series_count {
            mismatches.push(BucketMismatch {
                stat: key.clone(),
                c_count,
                d_count,
                series: series_count,
            });
        }
    }
    Ok(EquinumerosityReport {
        m: alphabet.len(),
        max_n,
        buckets_checked: keys.len(),
        mismatches,
    })
}

/// Per-bucket bijectivity sweep: every C-chain maps to a valid D-chain with
/// the same statistics, the round trip is the identity, and the image of
/// each bucket fills the bucket exactly.
#[derive(Clone, Debug)]
pub struct BijectionSweepReport {
    pub m: usize,
    pub max_n: u64,
    pub chains_checked: u64,
    pub buckets_checked: usize,
    pub failures: Vec<String>,
}

impl BijectionSweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for BijectionSweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "bijection sweep m={} n<={}: {} chains, {} buckets",
            self.m, self.max_n, self.chains_checked, self.buckets_checked
        )?;
        for failure in self.failures.iter().take(10) {
            writeln!(f, "  FAIL {failure}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn verify_bijection_exhaustive(
    alphabet: ColorAlphabet,
    max_n: u64,
    opts: &EnumerateOptions,
) -> Result<BijectionSweepReport, EnumerationError> {
    check_cap(alphabet, max_n, opts)?;
    let m = alphabet.len();
    let d_table = enumerate_d_chains(
        alphabet,
        max_n,
        &EnumerateOptions {
            list: false,
            cap: opts.cap,
        },
    )?
    .table;

    struct Partial {
        chains: u64,
        images: BTreeMap<StatVector, HashSet<ColoredPartition>>,
        failures: Vec<String>,
    }

    let budget = max_n as i64;
    let mut roots = Vec::new();
    for len in (1..=budget).rev() {
        for c in alphabet.colors() {
            roots.push(PrimaryPart::new(len, c));
        }
    }

    let check_chain = |chain: &[PrimaryPart], partial: &mut Partial| {
        partial.chains += 1;
        let input = ColoredPartition::from_primary(chain.to_vec());
        let stat = input.stats(m);
        let run = match phi(&input, Strategy::SmallestIndex) {
            Ok(run) => run,
            Err(e) => {
                partial.failures.push(format!("phi rejected {input}: {e}"));
                return;
            }
        };
        if run.output.validate(Mode::DChain, alphabet).is_err() {
            partial
                .failures
                .push(format!("image of {input} is not a D-chain"));
            return;
        }
        if run.output.stats(m) != stat {
            partial
                .failures
                .push(format!("statistics changed for {input}"));
            return;
        }
        match psi(&run.output, Strategy::SmallestIndex) {
            Ok(back) if back.output == input => {}
            _ => {
                partial
                    .failures
                    .push(format!("round trip failed for {input}"));
                return;
            }
        }
        partial.images.entry(stat).or_default().insert(run.output);
    };

    let partials: Vec<Partial> = roots
        .into_par_iter()
        .map(|root| {
            let mut partial = Partial {
                chains: 0,
                images: BTreeMap::new(),
                failures: Vec::new(),
            };
            let mut stack = vec![root];
            c_chain_rec(
                alphabet,
                budget - root.size,
                Some(root),
                &mut stack,
                &mut |chain: &[PrimaryPart]| check_chain(chain, &mut partial),
            );
            partial
        })
        .collect();

    let mut chains = 1u64; // the empty chain, a fixed point
    let mut images: BTreeMap<StatVector, HashSet<ColoredPartition>> = BTreeMap::new();
    images
        .entry(StatVector::zero(m))
        .or_default()
        .insert(ColoredPartition::empty());
    let mut failures = Vec::new();
    for partial in partials {
        chains += partial.chains;
        failures.extend(partial.failures);
        for (k, set) in partial.images {
            images.entry(k).or_default().extend(set);
        }
    }

    let buckets_checked = images.len();
    for (stat, set) in &images {
        let d_count = d_table.count(stat);
        if set.len() as u64 != d_count {
            failures.push(format!(
                "bucket {stat}: {} distinct images vs {} D-chains",
                set.len(),
                d_count
            ));
        }
    }
    Ok(BijectionSweepReport {
        m,
        max_n,
        chains_checked: chains,
        buckets_checked,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;
    use crate::text::parse_partition;

    fn a1() -> ColorAlphabet {
        ColorAlphabet::new(1)
    }

    fn a2() -> ColorAlphabet {
        ColorAlphabet::new(2)
    }

    fn opts() -> EnumerateOptions {
        EnumerateOptions {
            list: true,
            cap: None,
        }
    }

    /// Partitions of n into exactly k parts (repeats allowed).
    fn partitions_exact(n: i64, k: i64) -> u64 {
        if k < 0 || n < 0 {
            return 0;
        }
        if n == 0 && k == 0 {
            return 1;
        }
        if n <= 0 || k <= 0 {
            return 0;
        }
        partitions_exact(n - 1, k - 1) + partitions_exact(n - k, k)
    }

    /// Partitions of n into u distinct parts, by shifting out a staircase.
    fn distinct_parts_count(n: u64, u: u64) -> u64 {
        let n = n as i64;
        let u = u as i64;
        partitions_exact(n - u * (u - 1) / 2, u)
    }

    #[test]
    fn c_counts_small_examples() {
        let c = enumerate_c_chains(a2(), 6, &opts()).unwrap();
        // weight 3 with one part of each color: 2:a+1:b and 2:b+1:a
        let stat = StatVector {
            n: 3,
            counts: vec![1, 1],
        };
        assert_eq!(c.table.count(&stat), 2);
        let listed = &c.listings.as_ref().unwrap()[&stat];
        let rendered: Vec<String> = listed.iter().map(|p| p.to_string()).collect();
        assert!(rendered.contains(&"2:a+1:b".to_string()));
        assert!(rendered.contains(&"2:b+1:a".to_string()));

        // the empty chain
        assert_eq!(c.table.count(&StatVector::zero(2)), 1);
    }

    #[test]
    fn c_counts_match_distinct_parts_recurrence() {
        let c = enumerate_c_chains(a1(), 30, &EnumerateOptions::default()).unwrap();
        for n in 0..=30u64 {
            for u in 0..=8u64 {
                let stat = StatVector { n, counts: vec![u] };
                assert_eq!(
                    c.table.count(&stat),
                    distinct_parts_count(n, u),
                    "n={n} u={u}"
                );
            }
        }
        // spot check from the statement: two partitions of 5 into 2 distinct parts
        assert_eq!(distinct_parts_count(5, 2), 2);
    }

    #[test]
    fn d_chains_never_contain_unit_secondaries() {
        let d = enumerate_d_chains(a2(), 10, &opts()).unwrap();
        for partitions in d.listings.as_ref().unwrap().values() {
            for p in partitions {
                for part in p.parts() {
                    assert!(part.length() >= 1);
                    if part.is_secondary() {
                        assert!(part.length() >= 2);
                    }
                }
            }
        }
    }

    #[test]
    fn product_coefficients_small() {
        let s1 = expand_product(a1(), 8);
        assert_eq!(s1.coefficient(0, &[0]), BigUint::from(1u32));
        assert_eq!(s1.coefficient(3, &[1]), BigUint::from(1u32));
        assert_eq!(s1.coefficient(3, &[2]), BigUint::from(1u32)); // 2+1
        assert_eq!(s1.coefficient(3, &[3]), BigUint::from(0u32));

        let s2 = expand_product(a2(), 8);
        assert_eq!(s2.coefficient(3, &[1, 1]), BigUint::from(2u32));
    }

    #[test]
    fn unbinned_totals_match_univariate_product() {
        // sum over color counts at fixed weight equals the coefficient of
        // prod (1+q^k)^m, computed here by a direct univariate expansion
        let max_n = 14usize;
        let m = 2;
        let mut uni = vec![0u64; max_n + 1];
        uni[0] = 1;
        for _ in 0..m {
            for k in 1..=max_n {
                for n in (k..=max_n).rev() {
                    uni[n] += uni[n - k];
                }
            }
        }
        let c = enumerate_c_chains(a2(), max_n as u64, &EnumerateOptions::default()).unwrap();
        for (n, &total) in uni.iter().enumerate() {
            assert_eq!(c.table.total_at(n as u64), total, "n={n}");
        }
    }

    #[test]
    fn equinumerosity_small_ranges() {
        let report = verify_equinumerosity(a2(), 14, &EnumerateOptions::default()).unwrap();
        assert!(report.passed(), "{report}");
        let report =
            verify_equinumerosity(ColorAlphabet::new(3), 10, &EnumerateOptions::default()).unwrap();
        assert!(report.passed(), "{report}");
        let report = verify_equinumerosity(a2(), 0, &EnumerateOptions::default()).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn bijection_sweep_small_range() {
        let report = verify_bijection_exhaustive(a2(), 12, &EnumerateOptions::default()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.chains_checked > 100);
    }

    #[test]
    fn worked_example_is_in_its_bucket() {
        let input = parse_partition("24:a+17:b+11:b+10:a+9:b+8:b+6:a+5:a+4:b+4:a", a2()).unwrap();
        let image = phi(&input, Strategy::SmallestIndex).unwrap().output;
        assert_eq!(image.stats(2), input.stats(2));
        let back = psi(&image, Strategy::SmallestIndex).unwrap();
        assert_eq!(back.output, input);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_c_chains(a2(), 100, &EnumerateOptions::default()).unwrap_err();
        assert!(matches!(err, EnumerationError::CapExceeded { .. }));
        assert!(enumerate_c_chains(
            a2(),
            41,
            &EnumerateOptions {
                list: false,
                cap: Some(45),
            }
        )
        .is_ok());
    }

    #[test]
    fn d_chain_generation_order_is_by_length_then_kind() {
        let parts = parts_of_length(a2(), 8);
        let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["8:a", "8:b", "8:ba"]);
        let parts = parts_of_length(a2(), 3);
        let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["3:a", "3:b", "3:aa", "3:ab", "3:bb"]);
    }

    #[test]
    fn three_color_part_universe() {
        // 2:c beats nothing unusual; check secondary universe for m=3
        let parts = parts_of_length(ColorAlphabet::new(3), 2);
        let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["2:a", "2:b", "2:c", "2:ba", "2:ca", "2:cb"]);
        assert_eq!(
            parts_of_length(ColorAlphabet::new(3), 2)[3],
            Part::secondary(1, Color(1), Color(0))
        );
    }
}
