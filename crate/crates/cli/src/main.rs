use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use potbip::gen::{generate, GenSpec};
use potbip::oracle::tabulate;
use potbip::{LcPolicy, SearchConfig};
use potbip_cli::bench::{self, Extremes};
use potbip_cli::input::is_skippable;
use potbip_cli::record::{decide_line, OutputRecord, Summary};
use potbip_cli::{lc_label, parse_lc, table};
use rayon::prelude::*;

/// Decide whether graphical degree sequences have bipartite realizations.
#[derive(Parser)]
#[command(name = "potbip", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one sequence given as arguments or on standard input.
    Decide {
        /// Degrees; read from standard input when absent.
        #[arg(allow_hyphen_values = true)]
        degrees: Vec<String>,
        /// Combination budget: an integer, "n", "<k>n" or "unlimited".
        #[arg(long, default_value = "n", value_parser = parse_lc)]
        lc: LcPolicy,
        /// Worker threads for the search.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide one sequence per line and write JSON lines.
    Batch {
        #[arg(long)]
        input: PathBuf,
        /// Defaults to standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "n", value_parser = parse_lc)]
        lc: LcPolicy,
        /// Worker threads across lines; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Census counts per length as tab-separated rows.
    Tables {
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value = "1", value_parser = parse_lc)]
        lc: LcPolicy,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Random graphical sequences with fixed extremes, one per line.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d1: usize,
        #[arg(long)]
        dn: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time decisions on generated instances.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value = "n", value_parser = parse_lc)]
        lc: LcPolicy,
        /// Draw d1 from [0.5n, 0.6n] and dn from [1, 0.1n] per instance.
        #[arg(long, conflicts_with_all = ["d1", "dn"])]
        hard: bool,
        #[arg(long, requires = "dn")]
        d1: Option<usize>,
        #[arg(long, requires = "d1")]
        dn: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decide {
            degrees,
            lc,
            threads,
            json,
        } => cmd_decide(degrees, lc, threads, json),
        Command::Batch {
            input,
            output,
            lc,
            threads,
        } => cmd_batch(&input, output.as_deref(), lc, threads),
        Command::Tables {
            n_min,
            n_max,
            lc,
            threads,
        } => cmd_tables(n_min, n_max, lc, threads),
        Command::Gen {
            n,
            d1,
            dn,
            count,
            seed,
        } => cmd_gen(GenSpec {
            n,
            d1,
            dn,
            seed,
            count,
        }),
        Command::Bench {
            n,
            trials,
            lc,
            hard,
            d1,
            dn,
            seed,
            threads,
        } => {
            let extremes = match (hard, d1, dn) {
                (_, Some(d1), Some(dn)) => Ok(Extremes::Fixed { d1, dn }),
                (true, _, _) => Ok(Extremes::Hard),
                _ => Err("bench needs --hard or both --d1 and --dn".to_string()),
            };
            extremes.and_then(|e| cmd_bench(n, trials, lc, e, seed, threads))
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn pool(threads: usize) -> Result<rayon::ThreadPool, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())
}

fn cmd_decide(
    degrees: Vec<String>,
    lc: LcPolicy,
    threads: usize,
    json: bool,
) -> Result<u8, String> {
    let text = if degrees.is_empty() {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| e.to_string())?;
        s
    } else {
        degrees.join(" ")
    };
    let config = SearchConfig {
        lc,
        parallel_width: threads.max(1),
        ..SearchConfig::default()
    };
    let record = decide_line(&text, &config);
    if record.verdict == "invalid" && !json {
        eprintln!(
            "error: {}",
            record.error.as_deref().unwrap_or("invalid input")
        );
    } else if json {
        println!(
            "{}",
            serde_json::to_string(&record).map_err(|e| e.to_string())?
        );
    } else {
        println!("{record}");
    }
    Ok(record.exit_code() as u8)
}

fn cmd_batch(
    input: &std::path::Path,
    output: Option<&std::path::Path>,
    lc: LcPolicy,
    threads: usize,
) -> Result<u8, String> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
    let lines: Vec<&str> = text.lines().filter(|l| !is_skippable(l)).collect();
    let config = SearchConfig::with_lc(lc);
    // Indexed collect keeps input order whatever the thread count.
    let records: Vec<OutputRecord> =
        pool(threads)?.install(|| lines.par_iter().map(|l| decide_line(l, &config)).collect());

    let mut out: Box<dyn Write> = match output {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| format!("cannot write {}: {e}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for r in &records {
        let line = serde_json::to_string(r).map_err(|e| e.to_string())?;
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    eprintln!("{}", Summary::tally(&records));
    Ok(0)
}

fn cmd_tables(n_min: usize, n_max: usize, lc: LcPolicy, threads: usize) -> Result<u8, String> {
    if n_max > 14 {
        eprintln!("warning: n = {n_max} is beyond desk scale; expect a very long run");
    }
    eprintln!("# lc = {}", lc_label(lc));
    let config = SearchConfig::with_lc(lc);
    let pool = pool(threads)?;
    println!("{}", table::HEADER);
    for n in n_min..=n_max {
        let row = pool.install(|| tabulate(n, &config));
        println!("{}", table::format_row(&row));
    }
    Ok(0)
}

fn cmd_gen(spec: GenSpec) -> Result<u8, String> {
    let seqs = generate(&spec).map_err(|e| e.to_string())?;
    let mut out = BufWriter::new(io::stdout().lock());
    for d in seqs {
        let parts: Vec<String> = d.degrees().iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", parts.join(" ")).map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(0)
}

fn cmd_bench(
    n: usize,
    trials: usize,
    lc: LcPolicy,
    extremes: Extremes,
    seed: u64,
    threads: usize,
) -> Result<u8, String> {
    let ds = bench::instances(n, trials, extremes, seed).map_err(|e| e.to_string())?;
    let config = SearchConfig {
        lc,
        parallel_width: threads.max(1),
        ..SearchConfig::default()
    };
    let report = bench::run(&ds, &config).map_err(|e| e.to_string())?;
    println!("n={n} lc={} {report}", lc_label(lc));
    Ok(0)
}
