//! The two mutually inverse maps between chain families, each implemented
//! twice: as an iterative crossing process with a pluggable crossing order,
//! and as a closed-form position prediction via gauge functions. The two
//! routes cross-validate each other.
//!
//! `phi` sends a C-chain (primary parts, strictly decreasing in the natural
//! order) to a D-chain (minimal-difference order): merge the troublesome
//! adjacent pairs into secondary parts, then cross primary parts leftward
//! past secondary parts until the strong order holds everywhere. `psi`
//! undoes it: uncross while some secondary part's lower half fails the
//! natural order against the primary part after it, then split every
//! secondary part into its halves.
//!
//! Throughout, *half positions* index the expanded sequence in which a
//! secondary part occupies two slots (upper then lower). Index sets and
//! permutations are 1-based to keep the interval formulas readable.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::color::{delta, Color, ColorAlphabet};
use crate::crossing::{cross, uncross};
use crate::part::{gt_natural, merge, Part, PrimaryPart};
use crate::partition::{ColoredPartition, Mode, ValidationReport};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct InvalidChain(pub ValidationReport);

/// Which violating pair to cross next when several are available. The final
/// result is independent of the choice; exposing it makes that confluence
/// testable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    SmallestIndex,
    LargestIndex,
    Random { seed: u64 },
}

/// One crossing, recorded against the working sequence at the time it was
/// applied. `index` is the 1-based position of the left part of the pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingStep {
    pub index: usize,
    pub before: (Part, Part),
    pub after: (Part, Part),
}

impl CrossingStep {
    pub fn render(&self, step_number: usize) -> String {
        format!(
            "step {}: cross at {}: {}+{} -> {}+{}",
            step_number, self.index, self.before.0, self.before.1, self.after.0, self.after.1
        )
    }
}

/// Result of one map application: the output partition, the crossing log,
/// and the permutation of half positions it induced.
#[derive(Clone, Debug)]
pub struct MapRun {
    pub output: ColoredPartition,
    pub steps: Vec<CrossingStep>,
    /// `positions[k-1]` is the final half position of the half originally
    /// at position `k`.
    pub positions: Vec<usize>,
}

/// The selection of troublesome pairs: `upper` holds the indices whose part
/// merges with its successor (the upper halves), `staying` the indices that
/// remain primary. `upper`, `upper + 1` and `staying` partition `1..=s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TroublesomeSelection {
    pub upper: Vec<usize>,
    pub staying: Vec<usize>,
    pub count: usize,
}

/// Greedy smallest-index-first selection of disjoint adjacent pairs that are
/// consecutive in the natural order (equivalently, adjacent pairs violating
/// the strong order).
pub fn select_troublesome(chain: &[PrimaryPart]) -> TroublesomeSelection {
    let s = chain.len();
    let mut upper = Vec::new();
    let mut staying = Vec::new();
    let mut i = 1usize;
    while i <= s {
        let consecutive =
            i < s && chain[i - 1].size - chain[i].size == delta(chain[i - 1].color, chain[i].color);
        if consecutive {
            upper.push(i);
            i += 2;
        } else {
            staying.push(i);
            i += 1;
        }
    }
    TroublesomeSelection {
        upper,
        staying,
        count: s,
    }
}

// A part in the working sequence, tagged with the original half positions it
// carries: (first, second) for a secondary part's upper and lower halves,
// first == second for a primary part.
#[derive(Clone, Copy, Debug)]
struct Tracked {
    part: Part,
    first: usize,
    second: usize,
}

fn pick(strategy: Strategy, rng: &mut Option<ChaCha8Rng>, candidates: &[usize]) -> usize {
    match strategy {
        Strategy::SmallestIndex => candidates[0],
        Strategy::LargestIndex => candidates[candidates.len() - 1],
        Strategy::Random { .. } => {
            let rng = rng.as_mut().expect("rng initialized for random strategy");
            candidates[rng.gen_range(0..candidates.len())]
        }
    }
}

fn make_rng(strategy: Strategy) -> Option<ChaCha8Rng> {
    match strategy {
        Strategy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    }
}

fn extract_positions(seq: &[Tracked], half_count: usize) -> Vec<usize> {
    let mut positions = vec![0usize; half_count];
    let mut pos = 1usize;
    for t in seq {
        match t.part {
            Part::Primary(_) => {
                positions[t.first - 1] = pos;
                pos += 1;
            }
            Part::Secondary(_) => {
                positions[t.first - 1] = pos;
                positions[t.second - 1] = pos + 1;
                pos += 2;
            }
        }
    }
    debug_assert_eq!(pos, half_count + 1);
    positions
}

/// Map a C-chain to its D-chain image.
pub fn phi(input: &ColoredPartition, strategy: Strategy) -> Result<MapRun, InvalidChain> {
    let alphabet = ColorAlphabet::new(input.min_alphabet());
    input
        .validate(Mode::CChain, alphabet)
        .map_err(InvalidChain)?;
    let chain = input.primary_parts().expect("validated C-chain is primary");
    let s = chain.len();
    let selection = select_troublesome(&chain);

    // Step 1: merge the selected pairs.
    let mut seq: Vec<Tracked> = Vec::new();
    {
        let mut idx = 1usize;
        let mut upper_iter = selection.upper.iter().peekable();
        while idx <= s {
            if upper_iter.peek() == Some(&&idx) {
                upper_iter.next();
                let merged = merge(chain[idx - 1], chain[idx])
                    .expect("selected pair is consecutive in the natural order");
                seq.push(Tracked {
                    part: merged.into(),
                    first: idx,
                    second: idx + 1,
                });
                idx += 2;
            } else {
                seq.push(Tracked {
                    part: chain[idx - 1].into(),
                    first: idx,
                    second: idx,
                });
                idx += 1;
            }
        }
    }

    // Step 2: cross while some primary part sits unordered before a
    // secondary part. The sum of secondary-part indices drops by exactly one
    // per crossing, which bounds the loop.
    let mut rng = make_rng(strategy);
    let mut steps = Vec::new();
    let potential = |seq: &[Tracked]| -> usize {
        seq.iter()
            .enumerate()
            .filter(|(_, t)| t.part.is_secondary())
            .map(|(i, _)| i + 1)
            .sum()
    };
    let mut pot = potential(&seq);
    let step_bound = s * s + s + 16;
    loop {
        let candidates: Vec<usize> = (0..seq.len().saturating_sub(1))
            .filter(|&i| match (seq[i].part, seq[i + 1].part) {
                (Part::Primary(_), Part::Secondary(_)) => {
                    !crate::part::gt_strong(seq[i].part, seq[i + 1].part)
                }
                _ => false,
            })
            .collect();
        if candidates.is_empty() {
            break;
        }
        let i = pick(strategy, &mut rng, &candidates);
        let (x, y) = match (seq[i].part, seq[i + 1].part) {
            (Part::Primary(x), Part::Secondary(y)) => (x, y),
            _ => unreachable!(),
        };
        let before = (seq[i].part, seq[i + 1].part);
        let (s2, p2) = cross(x, y);
        let left = Tracked {
            part: s2.into(),
            first: seq[i + 1].first,
            second: seq[i + 1].second,
        };
        let right = Tracked {
            part: p2.into(),
            first: seq[i].first,
            second: seq[i].second,
        };
        seq[i] = left;
        seq[i + 1] = right;
        steps.push(CrossingStep {
            index: i + 1,
            before,
            after: (s2.into(), p2.into()),
        });
        let new_pot = potential(&seq);
        assert_eq!(new_pot + 1, pot, "crossing must lower the potential by one");
        pot = new_pot;
        assert!(steps.len() <= step_bound, "crossing failed to terminate");
    }

    let positions = extract_positions(&seq, s);
    let output: ColoredPartition = seq.iter().map(|t| t.part).collect();
    debug_assert!(output.validate(Mode::DChain, alphabet).is_ok());
    Ok(MapRun {
        output,
        steps,
        positions,
    })
}

/// Map a D-chain back to its C-chain preimage.
pub fn psi(input: &ColoredPartition, strategy: Strategy) -> Result<MapRun, InvalidChain> {
    let alphabet = ColorAlphabet::new(input.min_alphabet());
    input
        .validate(Mode::DChain, alphabet)
        .map_err(InvalidChain)?;

    // Tag each part with its half positions.
    let mut seq: Vec<Tracked> = Vec::new();
    let mut next = 1usize;
    for &part in input.parts() {
        match part {
            Part::Primary(_) => {
                seq.push(Tracked {
                    part,
                    first: next,
                    second: next,
                });
                next += 1;
            }
            Part::Secondary(_) => {
                seq.push(Tracked {
                    part,
                    first: next,
                    second: next + 1,
                });
                next += 2;
            }
        }
    }
    let s = next - 1;

    // Step 1: uncross while some secondary part's lower half fails the
    // natural order against the primary part after it. The sum of
    // primary-part indices drops by exactly one per step.
    let mut rng = make_rng(strategy);
    let mut steps = Vec::new();
    let potential = |seq: &[Tracked]| -> usize {
        seq.iter()
            .enumerate()
            .filter(|(_, t)| t.part.is_primary())
            .map(|(i, _)| i + 1)
            .sum()
    };
    let mut pot = potential(&seq);
    let step_bound = s * s + s + 16;
    loop {
        let candidates: Vec<usize> = (0..seq.len().saturating_sub(1))
            .filter(|&i| match (seq[i].part, seq[i + 1].part) {
                (Part::Secondary(x), Part::Primary(y)) => !gt_natural(x.lower_half(), y),
                _ => false,
            })
            .collect();
        if candidates.is_empty() {
            break;
        }
        let i = pick(strategy, &mut rng, &candidates);
        let (x, y) = match (seq[i].part, seq[i + 1].part) {
            (Part::Secondary(x), Part::Primary(y)) => (x, y),
            _ => unreachable!(),
        };
        let before = (seq[i].part, seq[i + 1].part);
        let (p2, s2) = uncross(x, y);
        let left = Tracked {
            part: p2.into(),
            first: seq[i + 1].first,
            second: seq[i + 1].second,
        };
        let right = Tracked {
            part: s2.into(),
            first: seq[i].first,
            second: seq[i].second,
        };
        seq[i] = left;
        seq[i + 1] = right;
        steps.push(CrossingStep {
            index: i + 1,
            before,
            after: (p2.into(), s2.into()),
        });
        let new_pot = potential(&seq);
        assert_eq!(
            new_pot + 1,
            pot,
            "uncrossing must lower the potential by one"
        );
        pot = new_pot;
        assert!(steps.len() <= step_bound, "uncrossing failed to terminate");
    }

    let positions = extract_positions(&seq, s);

    // Step 2: split every secondary part in place.
    let output: ColoredPartition = seq
        .iter()
        .flat_map(|t| match t.part {
            Part::Primary(p) => vec![Part::Primary(p)],
            Part::Secondary(sec) => {
                vec![sec.upper_half().into(), sec.lower_half().into()]
            }
        })
        .collect();
    debug_assert!(output.validate(Mode::CChain, alphabet).is_ok());
    Ok(MapRun {
        output,
        steps,
        positions,
    })
}

/// Direction a position trace describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapDirection {
    /// C to D: troublesome pairs merge and travel left.
    Merge,
    /// D to C: secondary parts uncross rightward and split.
    Split,
}

/// Closed-form description of one map application: the index sets, the
/// interval functions, the gauge, and the predicted permutation of half
/// positions. All indices are 1-based.
#[derive(Clone, Debug)]
pub struct PositionTrace {
    pub direction: MapDirection,
    /// Half sizes `l_1..l_s` in original order.
    pub sizes: Vec<i64>,
    /// Half colors `c_1..c_s`.
    pub colors: Vec<Color>,
    /// Upper-half indices (the set I).
    pub upper: Vec<usize>,
    /// Indices staying primary (the set J).
    pub staying: Vec<usize>,
    /// Predicted permutation: `positions[k-1]` is where half `k` ends up.
    pub positions: Vec<usize>,
    // prefix[i-1] = Delta(1, i); stay_before[i-1] = |[1, i) ∩ J|;
    // stay_through[i-1] = |[1, i] ∩ J|
    prefix: Vec<i64>,
    stay_before: Vec<i64>,
    stay_through: Vec<i64>,
}

impl PositionTrace {
    pub fn half_count(&self) -> usize {
        self.sizes.len()
    }

    /// Signed count of weak color ascents between two positions; additive in
    /// the endpoints (Chasles' relation).
    pub fn delta(&self, i: usize, j: usize) -> i64 {
        self.prefix[j - 1] - self.prefix[i - 1]
    }

    /// Signed count of staying indices in `[i, j)`.
    pub fn alpha(&self, i: usize, j: usize) -> i64 {
        self.stay_before[j - 1] - self.stay_before[i - 1]
    }

    /// Signed count of staying indices in `(i, j]`.
    pub fn beta(&self, i: usize, j: usize) -> i64 {
        self.stay_through[j - 1] - self.stay_through[i - 1]
    }

    fn size(&self, i: usize) -> i64 {
        self.sizes[i - 1]
    }

    fn color(&self, i: usize) -> Color {
        self.colors[i - 1]
    }

    /// Merge-direction gauge on (staying, upper) index pairs. Negative
    /// exactly when the merged pair at `i` must travel past the part at `j`.
    pub fn phi_gauge(&self, j: usize, i: usize) -> i64 {
        let anchor = (i + 1) as i64 - self.alpha(j, i);
        debug_assert!(anchor >= 1 && anchor <= self.half_count() as i64);
        self.size(j)
            - 2 * self.size(i + 1)
            - self.delta(j, i + 1)
            - self.delta(anchor as usize, i + 1)
    }

    /// Split-direction gauge on (staying, upper) index pairs. Positive
    /// exactly when the secondary part at `i` must travel past the part at
    /// `j`.
    pub fn psi_gauge(&self, j: usize, i: usize) -> i64 {
        self.size(j) - self.size(i) - self.delta(j, i)
    }

    /// Predicted final half position of the half originally at `k`.
    pub fn position(&self, k: usize) -> usize {
        self.positions[k - 1]
    }

    /// The predicted final half at each position, by the vectorial-move
    /// rule: the half that lands at position `p` keeps that position's
    /// color and shifts its size by the signed ascent count it traveled.
    pub fn predicted_final_halves(&self) -> Vec<PrimaryPart> {
        let s = self.half_count();
        let mut inverse = vec![0usize; s];
        for k in 1..=s {
            inverse[self.position(k) - 1] = k;
        }
        (1..=s)
            .map(|p| {
                let k = inverse[p - 1];
                PrimaryPart::new(self.size(k) + self.delta(p, k), self.color(p))
            })
            .collect()
    }

    /// Assemble the predicted output partition from the predicted halves:
    /// for the merge direction, halves landing at the images of upper
    /// indices pair up into secondary parts; for the split direction every
    /// half stands alone.
    pub fn predicted_output(&self) -> ColoredPartition {
        let halves = self.predicted_final_halves();
        match self.direction {
            MapDirection::Split => ColoredPartition::from_primary(halves),
            MapDirection::Merge => {
                let starts: std::collections::BTreeSet<usize> =
                    self.upper.iter().map(|&i| self.position(i)).collect();
                let mut parts = Vec::new();
                let mut p = 1usize;
                while p <= halves.len() {
                    if starts.contains(&p) {
                        let merged = merge(halves[p - 1], halves[p])
                            .expect("predicted halves are consecutive");
                        parts.push(merged.into());
                        p += 2;
                    } else {
                        parts.push(halves[p - 1].into());
                        p += 1;
                    }
                }
                ColoredPartition::new(parts)
            }
        }
    }

    /// Structural checks on the trace: Chasles' relation for the three
    /// interval functions, the ascent-count bounds, gauge monotonicity, the
    /// direction's size-difference bounds, and permutation shape.
    pub fn check_invariants(&self) -> Result<(), String> {
        let s = self.half_count();
        let fail = |msg: String| -> Result<(), String> { Err(msg) };

        for i in 1..=s {
            for j in 1..=s {
                if self.delta(j, i) != -self.delta(i, j) {
                    return fail(format!("delta not antisymmetric at ({i},{j})"));
                }
                if i < j {
                    let chi = delta(self.color(i), self.color(j));
                    let d = self.delta(i, j);
                    if !(chi <= d && d <= (j - i) as i64) {
                        return fail(format!("ascent bounds broken at ({i},{j})"));
                    }
                }
                for k in 1..=s {
                    if self.delta(i, k) + self.delta(k, j) != self.delta(i, j) {
                        return fail(format!("Chasles fails for delta at ({i},{k},{j})"));
                    }
                    if self.alpha(i, k) + self.alpha(k, j) != self.alpha(i, j) {
                        return fail(format!("Chasles fails for alpha at ({i},{k},{j})"));
                    }
                    if self.beta(i, k) + self.beta(k, j) != self.beta(i, j) {
                        return fail(format!("Chasles fails for beta at ({i},{k},{j})"));
                    }
                }
            }
        }

        // gauge monotonicity: weakly decreasing along staying indices,
        // weakly increasing along upper indices
        let gauge = |j: usize, i: usize| match self.direction {
            MapDirection::Merge => self.phi_gauge(j, i),
            MapDirection::Split => self.psi_gauge(j, i),
        };
        for w in self.staying.windows(2) {
            for &i in &self.upper {
                if gauge(w[0], i) < gauge(w[1], i) {
                    return fail(format!(
                        "gauge not decreasing along staying at ({},{},{i})",
                        w[0], w[1]
                    ));
                }
            }
        }
        for w in self.upper.windows(2) {
            for &j in &self.staying {
                if gauge(j, w[0]) > gauge(j, w[1]) {
                    return fail(format!(
                        "gauge not increasing along upper at ({j},{},{})",
                        w[0], w[1]
                    ));
                }
            }
        }

        // size-difference bounds
        match self.direction {
            MapDirection::Merge => {
                for i in 1..=s {
                    for j in i..=s {
                        if self.size(i) - self.size(j) < self.alpha(i, j) + self.delta(i, j) {
                            return fail(format!("size gap below alpha+delta at ({i},{j})"));
                        }
                    }
                }
            }
            MapDirection::Split => {
                let doubled = |k: usize| -> i64 {
                    if self.staying.binary_search(&k).is_ok() {
                        self.size(k)
                    } else {
                        2 * self.size(k)
                    }
                };
                for k in 1..=s {
                    for k2 in k..=s {
                        if doubled(k) - doubled(k2) < self.beta(k, k2) + self.delta(k, k2) {
                            return fail(format!(
                                "doubled size gap below beta+delta at ({k},{k2})"
                            ));
                        }
                    }
                }
                let merged: Vec<usize> = (1..=s)
                    .filter(|k| self.staying.binary_search(k).is_err())
                    .collect();
                for w in 0..merged.len() {
                    for w2 in w..merged.len() {
                        let (i, i2) = (merged[w], merged[w2]);
                        if self.size(i) - self.size(i2) < self.delta(i, i2) {
                            return fail(format!("half size gap below delta at ({i},{i2})"));
                        }
                    }
                }
            }
        }

        // permutation shape
        let mut seen = vec![false; s];
        for k in 1..=s {
            let p = self.position(k);
            if p < 1 || p > s || seen[p - 1] {
                return fail(format!("positions are not a permutation at {k}"));
            }
            seen[p - 1] = true;
        }
        for &i in &self.upper {
            if self.position(i + 1) != self.position(i) + 1 {
                return fail(format!("halves split apart at {i}"));
            }
            match self.direction {
                MapDirection::Merge => {
                    if self.position(i) > i {
                        return fail(format!("merged pair moved right at {i}"));
                    }
                }
                MapDirection::Split => {
                    if self.position(i) < i {
                        return fail(format!("secondary moved left at {i}"));
                    }
                }
            }
        }
        for &j in &self.staying {
            match self.direction {
                MapDirection::Merge => {
                    if self.position(j) < j {
                        return fail(format!("staying part moved left at {j}"));
                    }
                }
                MapDirection::Split => {
                    if self.position(j) > j {
                        return fail(format!("staying part moved right at {j}"));
                    }
                }
            }
        }
        for set in [&self.upper, &self.staying] {
            for w in set.windows(2) {
                if self.position(w[0]) >= self.position(w[1]) {
                    return fail(format!("positions not increasing on {w:?}"));
                }
            }
        }
        Ok(())
    }
}

fn build_trace(
    direction: MapDirection,
    sizes: Vec<i64>,
    colors: Vec<Color>,
    upper: Vec<usize>,
    staying: Vec<usize>,
) -> PositionTrace {
    let s = sizes.len();
    let mut prefix = vec![0i64; s.max(1)];
    for i in 1..s {
        prefix[i] = prefix[i - 1] + delta(colors[i - 1], colors[i]);
    }
    let mut stay_before = vec![0i64; s.max(1)];
    let mut stay_through = vec![0i64; s.max(1)];
    {
        let mut iter = staying.iter().peekable();
        let mut before = 0i64;
        for i in 1..=s {
            stay_before[i - 1] = before;
            if iter.peek() == Some(&&i) {
                iter.next();
                before += 1;
            }
            stay_through[i - 1] = before;
        }
    }
    let mut trace = PositionTrace {
        direction,
        sizes,
        colors,
        upper,
        staying,
        positions: Vec::new(),
        prefix,
        stay_before,
        stay_through,
    };

    let mut positions = vec![0usize; s];
    let mut occupied = vec![false; s + 1];
    for &i in &trace.upper {
        let moved = match direction {
            MapDirection::Merge => {
                let travel = trace
                    .staying
                    .iter()
                    .filter(|&&j| j < i && trace.phi_gauge(j, i) < 0)
                    .count();
                i - travel
            }
            MapDirection::Split => {
                let travel = trace
                    .staying
                    .iter()
                    .filter(|&&j| j > i && trace.psi_gauge(j, i) > 0)
                    .count();
                i + travel
            }
        };
        positions[i - 1] = moved;
        positions[i] = moved + 1;
        occupied[moved - 1] = true;
        occupied[moved] = true;
    }
    let free: Vec<usize> = (1..=s).filter(|&p| !occupied[p - 1]).collect();
    for (&j, &p) in trace.staying.iter().zip(free.iter()) {
        positions[j - 1] = p;
    }
    trace.positions = positions;
    trace
}

/// Predict the merge-direction permutation and gauge table for a C-chain
/// without running any crossings.
pub fn predict_phi_positions(input: &ColoredPartition) -> Result<PositionTrace, InvalidChain> {
    let alphabet = ColorAlphabet::new(input.min_alphabet());
    input
        .validate(Mode::CChain, alphabet)
        .map_err(InvalidChain)?;
    let chain = input.primary_parts().expect("validated C-chain is primary");
    let selection = select_troublesome(&chain);
    let sizes = chain.iter().map(|p| p.size).collect();
    let colors = chain.iter().map(|p| p.color).collect();
    Ok(build_trace(
        MapDirection::Merge,
        sizes,
        colors,
        selection.upper,
        selection.staying,
    ))
}

/// Predict the split-direction permutation and gauge table for a D-chain,
/// indexing over all primary halves.
pub fn predict_psi_positions(input: &ColoredPartition) -> Result<PositionTrace, InvalidChain> {
    let alphabet = ColorAlphabet::new(input.min_alphabet());
    input
        .validate(Mode::DChain, alphabet)
        .map_err(InvalidChain)?;
    let mut sizes = Vec::new();
    let mut colors = Vec::new();
    let mut upper = Vec::new();
    let mut staying = Vec::new();
    for &part in input.parts() {
        match part {
            Part::Primary(p) => {
                staying.push(sizes.len() + 1);
                sizes.push(p.size);
                colors.push(p.color);
            }
            Part::Secondary(sec) => {
                upper.push(sizes.len() + 1);
                let (hi, lo) = crate::part::split(sec);
                sizes.push(hi.size);
                colors.push(hi.color);
                sizes.push(lo.size);
                colors.push(lo.color);
            }
        }
    }
    Ok(build_trace(
        MapDirection::Split,
        sizes,
        colors,
        upper,
        staying,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::ColorAlphabet;
    use crate::text::parse_partition;

    fn a2() -> ColorAlphabet {
        ColorAlphabet::new(2)
    }

    fn worked_input() -> ColoredPartition {
        parse_partition("24:a+17:b+11:b+10:a+9:b+8:b+6:a+5:a+4:b+4:a", a2()).unwrap()
    }

    fn worked_image() -> ColoredPartition {
        parse_partition("24:a+21:bb+16:a+13:bb+11:aa+7:b+6:a", a2()).unwrap()
    }

    #[test]
    fn selection_on_worked_example() {
        let chain = worked_input().primary_parts().unwrap();
        let sel = select_troublesome(&chain);
        assert_eq!(sel.upper, vec![4, 7, 9]);
        assert_eq!(sel.staying, vec![1, 2, 3, 6]);
    }

    #[test]
    fn selection_trivial_cases() {
        // strongly separated chain keeps everything
        let chain = parse_partition("20:a+10:b+3:a", a2())
            .unwrap()
            .primary_parts()
            .unwrap();
        let sel = select_troublesome(&chain);
        assert!(sel.upper.is_empty());
        assert_eq!(sel.staying, vec![1, 2, 3]);

        // one-color 2+1 merges
        let chain = parse_partition("2:a+1:a", ColorAlphabet::new(1))
            .unwrap()
            .primary_parts()
            .unwrap();
        assert_eq!(select_troublesome(&chain).upper, vec![1]);
    }

    #[test]
    fn phi_worked_example() {
        let run = phi(&worked_input(), Strategy::SmallestIndex).unwrap();
        assert_eq!(run.output, worked_image());
        // smallest-index crossing order, as in the step-by-step walkthrough
        let indices: Vec<usize> = run.steps.iter().map(|s| s.index).collect();
        assert_eq!(indices, vec![3, 2, 5, 4, 6, 5]);
    }

    #[test]
    fn phi_merges_before_crossing() {
        // after step 1 the worked example reads 24:a+17:b+11:b+19:ab+8:b+11:aa+8:ba
        let run = phi(&worked_input(), Strategy::SmallestIndex).unwrap();
        let first = &run.steps[0];
        assert_eq!(first.index, 3);
        assert_eq!(
            first.before.1,
            parse_partition("19:ab", a2()).unwrap().parts()[0]
        );
    }

    #[test]
    fn phi_fixes_strongly_separated_chains() {
        let p = parse_partition("20:a+10:b+3:a", a2()).unwrap();
        let run = phi(&p, Strategy::SmallestIndex).unwrap();
        assert_eq!(run.output, p);
        assert!(run.steps.is_empty());
        assert_eq!(run.positions, vec![1, 2, 3]);
    }

    #[test]
    fn phi_of_empty_is_empty() {
        let run = phi(&ColoredPartition::empty(), Strategy::SmallestIndex).unwrap();
        assert!(run.output.is_empty());
    }

    #[test]
    fn psi_worked_example() {
        let run = psi(&worked_image(), Strategy::SmallestIndex).unwrap();
        assert_eq!(run.output, worked_input());
    }

    #[test]
    fn psi_largest_reverses_phi_smallest() {
        let fwd = phi(&worked_input(), Strategy::SmallestIndex).unwrap();
        let bwd = psi(&worked_image(), Strategy::LargestIndex).unwrap();
        let fwd_idx: Vec<usize> = fwd.steps.iter().map(|s| s.index).collect();
        let mut bwd_idx: Vec<usize> = bwd.steps.iter().map(|s| s.index).collect();
        bwd_idx.reverse();
        assert_eq!(fwd_idx, bwd_idx);
        for (f, b) in fwd.steps.iter().zip(bwd.steps.iter().rev()) {
            assert_eq!(f.before, b.after);
            assert_eq!(f.after, b.before);
        }
    }

    #[test]
    fn psi_fixes_all_primary_chains() {
        let p = parse_partition("20:a+10:b+3:a", a2()).unwrap();
        let run = psi(&p, Strategy::SmallestIndex).unwrap();
        assert_eq!(run.output, p);
    }

    #[test]
    fn phi_rejects_invalid_input() {
        let p = parse_partition("3:a+9:b", a2()).unwrap();
        assert!(phi(&p, Strategy::SmallestIndex).is_err());
        let p = parse_partition("9:ab+3:a", a2()).unwrap();
        assert!(phi(&p, Strategy::SmallestIndex).is_err());
    }

    #[test]
    fn predicted_gauge_table_on_worked_example() {
        let trace = predict_phi_positions(&worked_input()).unwrap();
        assert_eq!(trace.upper, vec![4, 7, 9]);
        assert_eq!(trace.staying, vec![1, 2, 3, 6]);
        let expected = [
            ((1, 4), 1),
            ((1, 7), 6),
            ((1, 9), 8),
            ((2, 4), -4),
            ((2, 7), 1),
            ((2, 9), 2),
            ((3, 4), -9),
            ((3, 7), -3),
            ((3, 9), -2),
            ((6, 4), -9),
            ((6, 7), -4),
            ((6, 9), -2),
        ];
        for ((j, i), want) in expected {
            assert_eq!(trace.phi_gauge(j, i), want, "gauge at ({j},{i})");
        }
    }

    #[test]
    fn predicted_positions_on_worked_example() {
        let trace = predict_phi_positions(&worked_input()).unwrap();
        let expect = [
            (4, 2),
            (7, 5),
            (9, 7),
            (5, 3),
            (8, 6),
            (10, 8),
            (1, 1),
            (2, 4),
            (3, 9),
            (6, 10),
        ];
        for (k, p) in expect {
            assert_eq!(trace.position(k), p, "position of {k}");
        }
        trace.check_invariants().unwrap();
    }

    #[test]
    fn predicted_positions_match_simulation_on_worked_example() {
        let input = worked_input();
        let trace = predict_phi_positions(&input).unwrap();
        let run = phi(&input, Strategy::SmallestIndex).unwrap();
        assert_eq!(trace.positions, run.positions);
        assert_eq!(trace.predicted_output(), run.output);
    }

    #[test]
    fn split_prediction_inverts_merge_prediction() {
        let input = worked_input();
        let image = phi(&input, Strategy::SmallestIndex).unwrap().output;
        let p_trace = predict_phi_positions(&input).unwrap();
        let q_trace = predict_psi_positions(&image).unwrap();
        q_trace.check_invariants().unwrap();
        for k in 1..=p_trace.half_count() {
            assert_eq!(q_trace.position(p_trace.position(k)), k);
        }
        let run = psi(&image, Strategy::SmallestIndex).unwrap();
        assert_eq!(q_trace.positions, run.positions);
        assert_eq!(q_trace.predicted_output(), run.output);
    }

    #[test]
    fn identity_predictions_without_troublesome_pairs() {
        let p = parse_partition("20:a+10:b+3:a", a2()).unwrap();
        let trace = predict_phi_positions(&p).unwrap();
        assert!(trace.upper.is_empty());
        assert_eq!(trace.positions, vec![1, 2, 3]);
        let q = predict_psi_positions(&p).unwrap();
        assert_eq!(q.positions, vec![1, 2, 3]);
    }
}
