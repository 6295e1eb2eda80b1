//! Colored integer partitions with primary and secondary colors.
//!
//! Parts carry one primary color or an ordered pair of colors; chains of
//! parts come in two families: C-chains (primary parts, strictly decreasing
//! in the natural size-then-color order) and D-chains (strictly decreasing
//! in the minimal-difference order). The library implements the two
//! mutually inverse maps between the families, predicts where every part
//! lands via gauge functions, enumerates both families exhaustively,
//! expands the shared product generating function, and specializes the
//! colored identity to integer congruence theorems through dilations.
//!
//! ```
//! use colored_partitions::{parse_partition, phi, psi, ColorAlphabet, Strategy};
//!
//! let alphabet = ColorAlphabet::new(2);
//! let chain = parse_partition("10:a+9:b+8:b", alphabet)?;
//! let run = phi(&chain, Strategy::SmallestIndex)?;
//! assert_eq!(run.output.to_string(), "19:ab+8:b");
//! assert_eq!(psi(&run.output, Strategy::SmallestIndex)?.output, chain);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod bijection;
pub mod color;
pub mod crossing;
pub mod dilation;
pub mod enumeration;
pub mod part;
pub mod partition;
pub mod text;

pub use bijection::{
    phi, predict_phi_positions, predict_psi_positions, psi, select_troublesome, CrossingStep,
    InvalidChain, MapDirection, MapRun, PositionTrace, Strategy, TroublesomeSelection,
};
pub use color::{delta, Color, ColorAlphabet};
pub use crossing::{
    cross, cross_order_equivalence, sweep_crossing_contracts, uncross, uncross_order_equivalence,
};
pub use dilation::{
    dilate_partition, generate_diff_table, verify_corollary_three_color, verify_siladic,
    ColorClass, DiffTable, DilatedPart, Dilation, DilationError, Granularity, Parity,
};
pub use enumeration::{
    default_cap, enumerate_c_chains, enumerate_d_chains, expand_product, for_each_c_chain,
    for_each_d_chain, for_each_d_chain_costed, parts_of_length, verify_bijection_exhaustive,
    verify_equinumerosity, ChainEnumeration, CountTable, EnumerateOptions, EnumerationError,
    MultiSeries,
};
pub use part::{gt_natural, gt_strong, merge, split, MergeError, Part, PrimaryPart, SecondaryPart};
pub use partition::{ColoredPartition, Mode, StatVector, ValidationReport, Violation};
pub use text::{infer_alphabet, parse_part, parse_partition, partition_repr, ParseError, PartRepr};
