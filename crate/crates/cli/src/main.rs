//! `cpart`: command-line front end for the colored-partitions library.
//!
//! Exit codes: 0 on success or PASS, 1 when a verification run fails,
//! 2 on usage or input parse errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use colored_partitions::{
    enumerate_c_chains, enumerate_d_chains, expand_product, generate_diff_table, infer_alphabet,
    parse_partition, partition_repr, phi, predict_phi_positions, predict_psi_positions, psi,
    sweep_crossing_contracts, verify_bijection_exhaustive, verify_corollary_three_color,
    verify_equinumerosity, verify_siladic, ChainEnumeration, ColorAlphabet, ColoredPartition,
    Dilation, EnumerateOptions, Granularity, MapDirection, MapRun, Mode, PositionTrace, Strategy,
};

#[derive(Parser)]
#[command(
    name = "cpart",
    version,
    about = "Colored partitions: bijections, enumeration, series, difference tables, verification",
    after_help = "Formats are documented in FORMATS.md at the repository root."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Smallest,
    Largest,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    C,
    D,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum GranularityArg {
    Reduced,
    ParitySplit,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Crossing,
    Bijection,
    Equinumerosity,
    Siladic,
    Corollary3,
    All,
}

#[derive(Args)]
struct MapArgs {
    /// Partition in the textual format, e.g. "24:a+17:b+19:ab"
    partition: String,
    /// Number of primary colors (default: inferred from the input letters)
    #[arg(long)]
    m: Option<usize>,
    /// Which violating pair to cross first
    #[arg(long, value_enum, default_value = "smallest")]
    strategy: StrategyArg,
    /// Seed for the random strategy
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the crossing log line by line
    #[arg(long)]
    log: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Map a distinct-parts chain (C) to its difference-condition image (D)
    Phi(MapArgs),
    /// Map a difference-condition chain (D) back to its preimage (C)
    Psi(MapArgs),
    /// Enumerate chains by weight and per-color statistics
    Enumerate {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
        /// List the partitions inside every bucket
        #[arg(long)]
        list: bool,
        /// Override the per-m weight cap
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Expand the distinct-parts product series and print its coefficients
    Series {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Print a minimal-difference table
    Table {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, value_enum, default_value = "reduced")]
        granularity: GranularityArg,
    },
    /// Run verification suites; exits 1 on FAIL
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        m: Option<usize>,
        /// Worker threads for the parallel sweeps
        #[arg(long)]
        jobs: Option<usize>,
        /// Seed for randomized crossing orders
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override the per-m weight cap
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Show selection, gauge table, predicted vs simulated positions, log
    Explain {
        partition: String,
        #[arg(long)]
        m: Option<usize>,
    },
}

fn main() -> ExitCode {
    // die quietly when the downstream pipe closes
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

// With an explicit --m the parser itself rejects letters outside the
// alphabet; without one, the alphabet is the smallest that covers the input.
fn alphabet_for(input: &str, m: Option<usize>) -> Result<ColorAlphabet, String> {
    match m {
        None => Ok(infer_alphabet(input)),
        Some(0) => Err("--m must be at least 1".into()),
        Some(m) => Ok(ColorAlphabet::new(m)),
    }
}

fn strategy_of(arg: StrategyArg, seed: u64) -> Strategy {
    match arg {
        StrategyArg::Smallest => Strategy::SmallestIndex,
        StrategyArg::Largest => Strategy::LargestIndex,
        StrategyArg::Random => Strategy::Random { seed },
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Phi(args) => run_map(args, true),
        Command::Psi(args) => run_map(args, false),
        Command::Enumerate {
            m,
            max_n,
            side,
            list,
            cap,
            format,
        } => run_enumerate(m, max_n, side, list, cap, format),
        Command::Series { m, max_n, format } => run_series(m, max_n, format),
        Command::Table { m, granularity } => {
            if m < 1 {
                return Err("--m must be at least 1".into());
            }
            let granularity = match granularity {
                GranularityArg::Reduced => Granularity::Reduced,
                GranularityArg::ParitySplit => Granularity::ParitySplit,
            };
            print!(
                "{}",
                generate_diff_table(ColorAlphabet::new(m), granularity).render()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            what,
            max_n,
            m,
            jobs,
            seed,
            cap,
        } => run_verify(what, max_n, m, jobs, seed, cap),
        Command::Explain { partition, m } => run_explain(&partition, m),
    }
}

fn run_map(args: MapArgs, forward: bool) -> Result<ExitCode, String> {
    let alphabet = alphabet_for(&args.partition, args.m)?;
    let input = parse_partition(&args.partition, alphabet).map_err(|e| e.to_string())?;
    let strategy = strategy_of(args.strategy, args.seed);
    let run: MapRun = if forward {
        phi(&input, strategy).map_err(|e| e.to_string())?
    } else {
        psi(&input, strategy).map_err(|e| e.to_string())?
    };
    match args.format {
        FormatArg::Json => {
            let mut value = serde_json::json!({ "parts": partition_repr(&run.output) });
            if args.log {
                let log: Vec<String> = run
                    .steps
                    .iter()
                    .enumerate()
                    .map(|(i, s)| s.render(i + 1))
                    .collect();
                value["log"] = serde_json::json!(log);
            }
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        _ => {
            if args.log {
                for (i, step) in run.steps.iter().enumerate() {
                    println!("{}", step.render(i + 1));
                }
            }
            println!("{}", run.output);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_enumeration(
    label: &str,
    header: bool,
    result: &ChainEnumeration,
    list: bool,
    format: FormatArg,
) {
    match format {
        FormatArg::Json => {
            let buckets: Vec<serde_json::Value> = result
                .table
                .iter()
                .map(|(stat, count)| {
                    let mut v = serde_json::json!({
                        "side": label,
                        "n": stat.n,
                        "counts": stat.counts,
                        "count": count,
                    });
                    if let Some(listings) = &result.listings {
                        let rendered: Vec<String> = listings
                            .get(stat)
                            .map(|ps| ps.iter().map(|p| p.to_string()).collect())
                            .unwrap_or_default();
                        v["partitions"] = serde_json::json!(rendered);
                    }
                    v
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&buckets).unwrap());
        }
        _ => {
            if header {
                println!("# {label}");
            }
            for (stat, count) in result.table.iter() {
                let counts: Vec<String> = stat.counts.iter().map(|c| c.to_string()).collect();
                println!("{}\t{}\t{}", stat.n, counts.join(","), count);
                if list {
                    if let Some(listings) = &result.listings {
                        for p in listings.get(stat).into_iter().flatten() {
                            println!("  {p}");
                        }
                    }
                }
            }
        }
    }
}

fn run_enumerate(
    m: usize,
    max_n: u64,
    side: SideArg,
    list: bool,
    cap: Option<u64>,
    format: FormatArg,
) -> Result<ExitCode, String> {
    if m < 1 {
        return Err("--m must be at least 1".into());
    }
    let alphabet = ColorAlphabet::new(m);
    let opts = EnumerateOptions { list, cap };
    let both = matches!(side, SideArg::Both);
    if matches!(side, SideArg::C | SideArg::Both) {
        let c = enumerate_c_chains(alphabet, max_n, &opts).map_err(|e| e.to_string())?;
        print_enumeration("C", both, &c, list, format);
    }
    if matches!(side, SideArg::D | SideArg::Both) {
        let d = enumerate_d_chains(alphabet, max_n, &opts).map_err(|e| e.to_string())?;
        print_enumeration("D", both, &d, list, format);
    }
    Ok(ExitCode::SUCCESS)
}

fn run_series(m: usize, max_n: u64, format: FormatArg) -> Result<ExitCode, String> {
    if m < 1 {
        return Err("--m must be at least 1".into());
    }
    let series = expand_product(ColorAlphabet::new(m), max_n);
    match format {
        FormatArg::Json => {
            let rows: Vec<serde_json::Value> = series
                .iter()
                .map(|(stat, coeff)| {
                    serde_json::json!({
                        "n": stat.n,
                        "counts": stat.counts,
                        "coefficient": coeff.to_string(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        _ => {
            for (stat, coeff) in series.iter() {
                let counts: Vec<String> = stat.counts.iter().map(|c| c.to_string()).collect();
                println!("{}\t{}\t{}", stat.n, counts.join(","), coeff);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

struct VerifySummary {
    failed: bool,
}

impl VerifySummary {
    fn new() -> VerifySummary {
        VerifySummary { failed: false }
    }

    fn check(&mut self, name: &str, passed: bool, detail: String) {
        let status = if passed { "PASS" } else { "FAIL" };
        println!("check {name}: {status} ({detail})");
        self.failed |= !passed;
    }
}

fn verify_crossing(summary: &mut VerifySummary, max_m: usize) {
    for m in 1..=max_m.min(3) {
        match sweep_crossing_contracts(m, 8) {
            Ok(pairs) => summary.check(
                &format!("crossing m={m}"),
                true,
                format!("{pairs} pairs: inverse, conservation, ordering"),
            ),
            Err(e) => summary.check(&format!("crossing m={m}"), false, e),
        }
    }
}

fn verify_bijection(summary: &mut VerifySummary, alphabet: ColorAlphabet, max_n: u64, seed: u64) {
    let m = alphabet.len();
    let mut failures: Vec<String> = Vec::new();
    let mut chains = 0u64;
    colored_partitions::for_each_c_chain(alphabet, max_n as i64, |chain| {
        chains += 1;
        let input = ColoredPartition::from_primary(chain.to_vec());
        let reference = phi(&input, Strategy::SmallestIndex).unwrap();
        if reference.output.validate(Mode::DChain, alphabet).is_err() {
            failures.push(format!("image of {input} invalid"));
            return;
        }
        if reference.output.stats(m) != input.stats(m) {
            failures.push(format!("statistics changed on {input}"));
        }
        for strategy in [Strategy::LargestIndex, Strategy::Random { seed }] {
            if phi(&input, strategy).unwrap().output != reference.output {
                failures.push(format!("confluence broken on {input}"));
            }
        }
        let trace = predict_phi_positions(&input).unwrap();
        if trace.positions != reference.positions {
            failures.push(format!("prediction off on {input}"));
        }
        if let Err(e) = trace.check_invariants() {
            failures.push(format!("trace invariants on {input}: {e}"));
        }
        let back = psi(&reference.output, Strategy::SmallestIndex).unwrap();
        if back.output != input {
            failures.push(format!("round trip broken on {input}"));
        }
    });
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{chains} chains: confluence, prediction, round trip")
    } else {
        failures.truncate(3);
        failures.join("; ")
    };
    summary.check(&format!("bijection sweep m={m} n<={max_n}"), passed, detail);
}

fn run_verify(
    what: VerifyWhat,
    max_n: Option<u64>,
    m: Option<usize>,
    jobs: Option<usize>,
    seed: u64,
    cap: Option<u64>,
) -> Result<ExitCode, String> {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    let mut summary = VerifySummary::new();
    let m = m.unwrap_or(2);
    if m < 1 {
        return Err("--m must be at least 1".into());
    }
    let alphabet = ColorAlphabet::new(m);

    match what {
        VerifyWhat::Crossing => verify_crossing(&mut summary, m.max(3)),
        VerifyWhat::Bijection => {
            verify_bijection(&mut summary, alphabet, max_n.unwrap_or(20), seed)
        }
        VerifyWhat::Equinumerosity => {
            let n = max_n.unwrap_or(25);
            let opts = EnumerateOptions { list: false, cap };
            let report = verify_equinumerosity(alphabet, n, &opts).map_err(|e| e.to_string())?;
            summary.check(
                &format!("equinumerosity m={m} n<={n}"),
                report.passed(),
                format!("{} buckets", report.buckets_checked),
            );
            let sweep =
                verify_bijection_exhaustive(alphabet, n, &opts).map_err(|e| e.to_string())?;
            summary.check(
                &format!("per-bucket bijectivity m={m} n<={n}"),
                sweep.passed(),
                format!("{} chains", sweep.chains_checked),
            );
        }
        VerifyWhat::Siladic => {
            let n = max_n.unwrap_or(40);
            let dilation = Dilation::siladic();
            println!(
                "dilation: q^{}, shifts a:{} b:{}",
                dilation.scale(),
                dilation.shift(colored_partitions::Color(0)).unwrap(),
                dilation.shift(colored_partitions::Color(1)).unwrap()
            );
            let report = verify_siladic(n);
            for b in &report.buckets {
                println!(
                    "n={}\tconditions={}\tdistinct-odd={}",
                    b.n,
                    b.dilated.len(),
                    b.distinct_odd.len()
                );
            }
            summary.check(
                &format!("two-color dilation n<={n}"),
                report.passed(),
                format!("{} weights compared", report.buckets.len()),
            );
        }
        VerifyWhat::Corollary3 => {
            let n = max_n.unwrap_or(60);
            let dilation = Dilation::three_color();
            println!(
                "dilation: q^{}, shifts a:{} b:{} c:{}",
                dilation.scale(),
                dilation.shift(colored_partitions::Color(0)).unwrap(),
                dilation.shift(colored_partitions::Color(1)).unwrap(),
                dilation.shift(colored_partitions::Color(2)).unwrap()
            );
            let report = verify_corollary_three_color(n);
            summary.check(
                &format!("three-color dilation n<={n}"),
                report.passed(),
                format!("{} buckets compared", report.buckets.len()),
            );
        }
        VerifyWhat::All => {
            let n = max_n.unwrap_or(25);
            verify_crossing(&mut summary, 3);
            verify_bijection(&mut summary, alphabet, n.min(22), seed);
            let opts = EnumerateOptions { list: false, cap };
            let report = verify_equinumerosity(alphabet, n, &opts).map_err(|e| e.to_string())?;
            summary.check(
                &format!("equinumerosity m={m} n<={n}"),
                report.passed(),
                format!("{} buckets", report.buckets_checked),
            );
            let sweep =
                verify_bijection_exhaustive(alphabet, n, &opts).map_err(|e| e.to_string())?;
            summary.check(
                &format!("per-bucket bijectivity m={m} n<={n}"),
                sweep.passed(),
                format!("{} chains", sweep.chains_checked),
            );
            let siladic = verify_siladic(n.min(40));
            summary.check(
                &format!("two-color dilation n<={}", n.min(40)),
                siladic.passed(),
                format!("{} weights compared", siladic.buckets.len()),
            );
            let corollary_n = n.clamp(48, 60);
            let corollary = verify_corollary_three_color(corollary_n);
            summary.check(
                &format!("three-color dilation n<={corollary_n}"),
                corollary.passed(),
                format!("{} buckets compared", corollary.buckets.len()),
            );
            let tables_ok = {
                let t2 = generate_diff_table(ColorAlphabet::new(2), Granularity::Reduced);
                let t3 = generate_diff_table(ColorAlphabet::new(3), Granularity::Reduced);
                t2.zero_entries_acyclic()
                    && t3.zero_entries_acyclic()
                    && t2.entry_by_label("aa", "a") == Some(3)
                    && t3.entry_by_label("c", "ba") == Some(0)
            };
            summary.check(
                "difference tables",
                tables_ok,
                "structure and spot entries".into(),
            );
        }
    }

    println!("{}", if summary.failed { "FAIL" } else { "PASS" });
    Ok(if summary.failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn render_gauge_table(trace: &PositionTrace) -> String {
    let mut out = String::new();
    let width = 7usize;
    out.push_str(&format!("{:>width$} |", "j\\i"));
    for &i in &trace.upper {
        out.push_str(&format!("{i:>width$}"));
    }
    out.push('\n');
    for &j in &trace.staying {
        out.push_str(&format!("{j:>width$} |"));
        for &i in &trace.upper {
            let g = match trace.direction {
                MapDirection::Merge => trace.phi_gauge(j, i),
                MapDirection::Split => trace.psi_gauge(j, i),
            };
            out.push_str(&format!("{g:>width$}"));
        }
        out.push('\n');
    }
    out
}

fn run_explain(partition: &str, m: Option<usize>) -> Result<ExitCode, String> {
    let alphabet = alphabet_for(partition, m)?;
    let input = parse_partition(partition, alphabet).map_err(|e| e.to_string())?;

    let (trace, run, direction) = if input.validate(Mode::CChain, alphabet).is_ok() {
        let trace = predict_phi_positions(&input).map_err(|e| e.to_string())?;
        let run = phi(&input, Strategy::SmallestIndex).map_err(|e| e.to_string())?;
        (trace, run, "merge (C -> D)")
    } else if input.validate(Mode::DChain, alphabet).is_ok() {
        let trace = predict_psi_positions(&input).map_err(|e| e.to_string())?;
        let run = psi(&input, Strategy::SmallestIndex).map_err(|e| e.to_string())?;
        (trace, run, "split (D -> C)")
    } else {
        let c_report = input.validate(Mode::CChain, alphabet).unwrap_err();
        let d_report = input.validate(Mode::DChain, alphabet).unwrap_err();
        return Err(format!("input is neither chain: {c_report}; {d_report}"));
    };

    println!("direction: {direction}");
    print!("halves:");
    for (k, (&size, &color)) in trace.sizes.iter().zip(&trace.colors).enumerate() {
        print!(" {}:{size}:{color}", k + 1);
    }
    println!();
    println!("upper half positions  I = {:?}", trace.upper);
    println!("staying positions     J = {:?}", trace.staying);
    if trace.upper.is_empty() {
        println!("no crossings required");
    } else {
        println!("gauge (rows: J, columns: I):");
        print!("{}", render_gauge_table(&trace));
    }
    println!("positions (half: predicted | simulated):");
    let mut agree = true;
    for k in 1..=trace.half_count() {
        let predicted = trace.position(k);
        let simulated = run.positions[k - 1];
        agree &= predicted == simulated;
        println!("  {k}: {predicted} | {simulated}");
    }
    if run.steps.is_empty() {
        println!("crossing log: empty");
    } else {
        println!("crossing log:");
        for (i, step) in run.steps.iter().enumerate() {
            println!("  {}", step.render(i + 1));
        }
    }
    trace
        .check_invariants()
        .map_err(|e| format!("trace invariant broken: {e}"))?;
    println!("result: {}", run.output);
    println!(
        "prediction agrees with simulation: {}",
        if agree { "yes" } else { "NO" }
    );
    if !agree {
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}
