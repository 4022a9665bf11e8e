mod cache;
mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vdlab::groebner::{GroebnerConfig, Oracle};

use crate::cache::DiskCache;

/// Exact experiments on Vandermonde varieties, Schur ideals and linear
/// recurrences.
#[derive(Parser, Debug)]
#[command(name = "vdlab", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Emit CSV rows instead of a JSON document.
    #[arg(long, global = true)]
    csv: bool,
    /// Do not read or write the Gröbner basis cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Cache directory (default: $VDLAB_CACHE_DIR, else ~/.cache/vdlab).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// S-pair budget per Gröbner run (default: $VDLAB_MAX_PAIRS or 1000000).
    #[arg(long, global = true)]
    max_pairs: Option<usize>,
    /// Degree budget per Gröbner run (default: $VDLAB_MAX_DEGREE or 1000).
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Record wall-clock milliseconds in each record.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FlavorArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "BC", alias = "bc")]
    Bc,
    Coarse,
    Confluent,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Degrevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "BC", alias = "bc")]
    Bc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FinalSignArg {
    Alternating,
    Flipped,
    Negative,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SchurMethod {
    Bialternant,
    JacobiTrudi,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur polynomial of a strictly increasing exponent set.
    Schur {
        /// Exponent set, e.g. 0,2,5.
        #[arg(long)]
        j: String,
        #[arg(long, value_enum, default_value = "bialternant")]
        method: SchurMethod,
        /// Use the gap sequence (j_1 - j_1, ..., j_k - j_1).
        #[arg(long)]
        reduced: bool,
    },
    /// Generators of a Vandermonde ideal.
    Ideal {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: String,
        #[arg(long, value_enum, default_value = "A")]
        flavor: FlavorArg,
        /// Partition for the confluent flavor, e.g. 2,1.
        #[arg(long)]
        lambda: Option<String>,
        /// Keep every k-subsequence in the A flavor.
        #[arg(long)]
        full: bool,
    },
    /// Reduced Gröbner basis of explicit generators separated by ';'.
    Gb {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long, value_enum, default_value = "degrevlex")]
        order: OrderArg,
    },
    /// Hilbert series of the quotient, compared with the closed forms.
    Hilbert {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: String,
        #[arg(long, value_enum, default_value = "A")]
        flavor: FlavorArg,
        /// Eagon-Northcott numerator convention: zero-anchored or as-stated.
        #[arg(long, default_value = "zero-anchored")]
        convention: String,
        /// BC conjecture reading: relation-degrees or as-printed.
        #[arg(long, default_value = "relation-degrees")]
        bc_reading: String,
    },
    /// Degree of the quotient, compared with the closed forms.
    Degree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: String,
        #[arg(long, value_enum, default_value = "A")]
        flavor: FlavorArg,
    },
    /// Linear relations among the generators of an m = k+1 tuple.
    Relations {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: String,
        #[arg(long, value_enum, default_value = "A")]
        family: FamilyArg,
        /// Closing sign of the BC family.
        #[arg(long, value_enum, default_value = "alternating")]
        final_sign: FinalSignArg,
        /// Certify the A family by monomial expansion instead of the Pieri rule.
        #[arg(long)]
        expanded: bool,
        /// Also expand det(H_l) for l = 0..k.
        #[arg(long)]
        det_hl: bool,
    },
    /// CKW predicate against the oracle for (h_a, h_b, h_c).
    Ckw {
        #[arg(long, requires_all = ["b", "c"], conflicts_with = "bound")]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        /// Scan every 1 <= a < b < c <= bound.
        #[arg(long, required_unless_present = "a")]
        bound: Option<u32>,
    },
    /// Expected-codimension scan of the A-localized ideal.
    ScanRegular {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        bound: u32,
    },
    /// Emptiness of the recurrence varieties, stratum by stratum.
    ScanEmpty {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        bound: u32,
        /// Discard points where a root ratio is a root of unity of order
        /// 2..=N; 0 keeps every point.
        #[arg(long, default_value_t = 6)]
        nondegenerate: u32,
        /// Also report tuples with two equal pairwise differences.
        #[arg(long)]
        all_tuples: bool,
        /// Every point off the BC arrangement, every tuple
        /// (same as --nondegenerate 0 --all-tuples).
        #[arg(long)]
        literal: bool,
    },
    /// Dimension of the A-variety as the last entry grows.
    ScanPeriod {
        #[arg(long)]
        k: usize,
        /// Fixed entries, starting 0,1.
        #[arg(long)]
        prefix: String,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// Zeros of a linear recurrence sequence.
    Recurrence {
        /// Coefficients a_1..a_k of t^k + a_1 t^(k-1) + ... + a_k.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "roots", required_unless_present = "roots")]
        coeffs: Option<String>,
        /// Rational characteristic roots.
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
        /// Initial values u_0..u_(k-1).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "weights", required_unless_present = "weights")]
        initial: Option<String>,
        /// Weights w_j for u_n = sum_j w_j x_j^n (requires --roots).
        #[arg(long, allow_hyphen_values = true, requires = "roots")]
        weights: Option<String>,
        #[arg(long, default_value_t = 60)]
        n_max: usize,
        #[arg(long, default_value_t = 12)]
        d_max: usize,
        /// Include the evaluated sequence.
        #[arg(long)]
        sequence: bool,
    },
    /// Whether vanishing on a base tuple forces vanishing at an extra index.
    Forcing {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        base: String,
        #[arg(long)]
        extra: u32,
        /// Ignore solutions where a root ratio is a root of unity of order
        /// 2..=N; 0 keeps every solution.
        #[arg(long, default_value_t = 6)]
        nondegenerate: u32,
        /// Same as --nondegenerate 0.
        #[arg(long)]
        literal: bool,
    },
}

impl Global {
    fn oracle(&self) -> Result<Oracle, String> {
        let mut config = GroebnerConfig::from_env();
        if let Some(p) = self.max_pairs {
            config.max_pairs = p;
        }
        if let Some(d) = self.max_degree {
            config.max_degree = d;
        }
        let oracle = Oracle::new(config);
        if self.no_cache {
            return Ok(oracle);
        }
        let dir = self.cache_dir.clone().unwrap_or_else(DiskCache::default_dir);
        let cache = DiskCache::open(&dir).map_err(|e| format!("cannot open cache {}: {e}", dir.display()))?;
        Ok(oracle.with_store(Arc::new(cache)))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    let oracle = match cli.global.oracle() {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match commands::run(&cli.command, &oracle, cli.global.timings) {
        Ok(out) => {
            let text = if cli.global.csv { out.to_csv() } else { out.to_json() };
            print!("{text}");
            ExitCode::from(if out.inconclusive() { 2 } else { 0 })
        }
        Err(commands::CliError::Inconclusive(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
