use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kron22::kron::EngineKind;
use kron22::IndexBox;

#[derive(Parser, Debug)]
#[command(
    name = "kron22",
    version,
    about = "Kronecker coefficients indexed by two two-row shapes"
)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Strategy for reduced coefficients.
    #[arg(long, global = true, value_enum, default_value_t = Engine::Chamber)]
    pub engine: Engine,

    /// Largest n for which character tables are built.
    #[arg(long, global = true, default_value_t = 20)]
    pub cap: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Directory for cached character tables.
    #[arg(long, global = true, env = "KRON22_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// g for three comma-separated partitions, e.g. `g 2,2 2,2 2,2`.
    G {
        lambda: String,
        mu: String,
        nu: String,
        /// Show the reduced terms and the chambers used.
        #[arg(long)]
        explain: bool,
    },
    /// The reduced coefficient ḡ_{(r),(s)}^{(g1,g2)}.
    Gbar {
        r: i64,
        s: i64,
        g1: i64,
        g2: i64,
        #[arg(long)]
        explain: bool,
    },
    /// Compare engines over a box of indices.
    Verify {
        #[arg(long = "box", default_value = "14")]
        bx: BoxSpec,
        /// Engines to compare.
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "count,chamber,oracle"
        )]
        engines: Vec<Engine>,
        /// Chamber catalog to test instead of the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Write the chamber catalog as JSON.
    ExportFan {
        /// Re-export a previously exported catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Stretching function N ↦ g(N·idx) and its exact fit.
    Stretch {
        n: i64,
        r: i64,
        s: i64,
        g1: i64,
        g2: i64,
        #[arg(long, default_value_t = 12)]
        n_max: u64,
    },
    /// Saturation counterexamples in a box, as JSON lines.
    Counterexamples {
        #[arg(long = "box", default_value = "12")]
        bx: BoxSpec,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Count,
    Chamber,
    Oracle,
}

impl From<Engine> for EngineKind {
    fn from(e: Engine) -> Self {
        match e {
            Engine::Count => EngineKind::Count,
            Engine::Chamber => EngineKind::Chamber,
            Engine::Oracle => EngineKind::Oracle,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

/// `N` for every index with `n <= N`, or a comma-separated list of
/// `coord=a..b` / `coord=a` with coordinates `n, r, s, g1, g2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxSpec(pub IndexBox);

fn parse_range(v: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad bound {x:?}: {e}"))
    };
    let (a, b) = match v.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let x = num(v)?;
            (x, x)
        }
    };
    if a < 0 || b < a {
        return Err(format!("range {v:?} must be nonnegative and ordered"));
    }
    Ok(a..=b)
}

impl FromStr for BoxSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Ok(n) = s.parse::<i64>() {
            if n < 0 {
                return Err("box bound must be nonnegative".into());
            }
            return Ok(BoxSpec(IndexBox::up_to(n)));
        }
        let mut bx = IndexBox::up_to(0);
        let mut saw_n = false;
        for item in s.split(',') {
            let (key, val) = item
                .split_once('=')
                .ok_or_else(|| format!("expected coord=a..b, got {item:?}"))?;
            let range = parse_range(val)?;
            match key.trim() {
                "n" => {
                    bx.n = range;
                    saw_n = true;
                }
                "r" => bx.r = range,
                "s" => bx.s = range,
                "g1" => bx.g1 = range,
                "g2" => bx.g2 = range,
                other => return Err(format!("unknown coordinate {other:?}")),
            }
        }
        if !saw_n {
            return Err("a box needs an n range".into());
        }
        Ok(BoxSpec(bx))
    }
}
