//! Randomized and exhaustive invariant checks across the public API.

use proptest::collection::btree_set;
use proptest::prelude::*;

use colored_partitions::{
    for_each_c_chain, for_each_d_chain, gt_natural, parse_partition, phi, predict_phi_positions,
    predict_psi_positions, psi, Color, ColorAlphabet, ColoredPartition, Mode, Part, PrimaryPart,
    Strategy as CrossOrder,
};

/// A valid C-chain: a set of distinct (size, color) pairs sorted into
/// decreasing natural order.
fn c_chain_strategy(m: usize, max_size: i64) -> impl Strategy<Value = ColoredPartition> {
    btree_set((1..=max_size, 0..m as u8), 0..14).prop_map(|set| {
        let mut parts: Vec<PrimaryPart> = set
            .into_iter()
            .map(|(size, c)| PrimaryPart::new(size, Color(c)))
            .collect();
        parts.sort_by(|a, b| {
            if gt_natural(*a, *b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        ColoredPartition::from_primary(parts)
    })
}

/// Any partition text round-trips through parse and print.
fn raw_partition_strategy(m: usize) -> impl Strategy<Value = ColoredPartition> {
    let part = (0..2, 0..=60i64, 0..m as u8, 0..m as u8).prop_filter_map(
        "valid part",
        |(kind, len, p, q)| {
            if kind == 0 {
                Some(Part::primary(len, Color(p)))
            } else {
                let d = colored_partitions::delta(Color(p), Color(q));
                if (len - d) % 2 == 0 {
                    Some(Part::secondary((len - d) / 2, Color(p), Color(q)))
                } else {
                    None
                }
            }
        },
    );
    proptest::collection::vec(part, 0..10).prop_map(ColoredPartition::new)
}

proptest! {
    #[test]
    fn parse_print_round_trip(p in raw_partition_strategy(3)) {
        let alphabet = ColorAlphabet::new(3);
        let printed = p.to_string();
        let reparsed = parse_partition(&printed, alphabet).unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn phi_image_is_a_d_chain_with_equal_statistics(input in c_chain_strategy(3, 30)) {
        let alphabet = ColorAlphabet::new(3);
        let run = phi(&input, CrossOrder::SmallestIndex).unwrap();
        prop_assert!(run.output.validate(Mode::DChain, alphabet).is_ok());
        prop_assert_eq!(run.output.stats(3), input.stats(3));
        let back = psi(&run.output, CrossOrder::SmallestIndex).unwrap();
        prop_assert_eq!(back.output, input);
    }

    #[test]
    fn phi_is_confluent(input in c_chain_strategy(3, 30), seed in 0u64..1000) {
        let smallest = phi(&input, CrossOrder::SmallestIndex).unwrap();
        let largest = phi(&input, CrossOrder::LargestIndex).unwrap();
        let random = phi(&input, CrossOrder::Random { seed }).unwrap();
        prop_assert_eq!(&smallest.output, &largest.output);
        prop_assert_eq!(&smallest.output, &random.output);
        prop_assert_eq!(&smallest.positions, &random.positions);
    }

    #[test]
    fn psi_is_confluent(input in c_chain_strategy(3, 30), seed in 0u64..1000) {
        let image = phi(&input, CrossOrder::SmallestIndex).unwrap().output;
        let smallest = psi(&image, CrossOrder::SmallestIndex).unwrap();
        let largest = psi(&image, CrossOrder::LargestIndex).unwrap();
        let random = psi(&image, CrossOrder::Random { seed }).unwrap();
        prop_assert_eq!(&smallest.output, &largest.output);
        prop_assert_eq!(&smallest.output, &random.output);
        prop_assert_eq!(&smallest.positions, &random.positions);
    }

    /// The gauge prediction matches the simulated crossing process in both
    /// directions, and every trace satisfies its structural invariants.
    #[test]
    fn predictions_match_simulation(input in c_chain_strategy(3, 30)) {
        let p_trace = predict_phi_positions(&input).unwrap();
        p_trace.check_invariants().map_err(TestCaseError::fail)?;
        let run = phi(&input, CrossOrder::SmallestIndex).unwrap();
        prop_assert_eq!(&p_trace.positions, &run.positions);
        prop_assert_eq!(p_trace.predicted_output(), run.output.clone());

        let q_trace = predict_psi_positions(&run.output).unwrap();
        q_trace.check_invariants().map_err(TestCaseError::fail)?;
        let back = psi(&run.output, CrossOrder::SmallestIndex).unwrap();
        prop_assert_eq!(&q_trace.positions, &back.positions);
        prop_assert_eq!(q_trace.predicted_output(), back.output);

        for k in 1..=p_trace.half_count() {
            prop_assert_eq!(q_trace.position(p_trace.position(k)), k);
        }
    }
}

/// Exhaustive statistics preservation at the scale the maps are specified
/// for: every chain of weight at most 25 over up to three colors.
#[test]
fn statistics_preserved_exhaustively() {
    for m in 1..=3usize {
        let alphabet = ColorAlphabet::new(m);
        let mut checked = 0u64;
        for_each_c_chain(alphabet, 25, |chain| {
            let input = ColoredPartition::from_primary(chain.to_vec());
            let stat = input.stats(m);
            let run = phi(&input, CrossOrder::SmallestIndex).unwrap();
            assert_eq!(run.output.stats(m), stat, "phi changed stats of {input}");
            let back = psi(&run.output, CrossOrder::SmallestIndex).unwrap();
            assert_eq!(back.output, input);
            checked += 1;
        });
        assert!(checked > 100);
    }
}

/// Both composition orders are the identity on chains of weight at most 18
/// over three colors (the heavier two-color sweep runs in the acceptance
/// suite).
#[test]
fn round_trips_exhaustively_three_colors() {
    let alphabet = ColorAlphabet::new(3);
    for_each_d_chain(alphabet, 18, |chain| {
        let input = ColoredPartition::new(chain.to_vec());
        let back = psi(&input, CrossOrder::SmallestIndex).unwrap();
        assert!(back.output.validate(Mode::CChain, alphabet).is_ok());
        let fwd = phi(&back.output, CrossOrder::SmallestIndex).unwrap();
        assert_eq!(fwd.output, input, "psi then phi moved {input}");
    });
}

/// Predicted positions agree with the simulation on every chain in a small
/// exhaustive range, not just on random samples.
#[test]
fn predictions_match_simulation_exhaustively() {
    let alphabet = ColorAlphabet::new(2);
    for_each_c_chain(alphabet, 16, |chain| {
        let input = ColoredPartition::from_primary(chain.to_vec());
        let trace = predict_phi_positions(&input).unwrap();
        trace.check_invariants().unwrap();
        let run = phi(&input, CrossOrder::SmallestIndex).unwrap();
        assert_eq!(trace.positions, run.positions, "prediction off for {input}");
        assert_eq!(trace.predicted_output(), run.output);
    });
    for_each_d_chain(alphabet, 16, |chain| {
        let input = ColoredPartition::new(chain.to_vec());
        let trace = predict_psi_positions(&input).unwrap();
        trace.check_invariants().unwrap();
        let run = psi(&input, CrossOrder::SmallestIndex).unwrap();
        assert_eq!(trace.positions, run.positions, "prediction off for {input}");
        assert_eq!(trace.predicted_output(), run.output);
    });
}
