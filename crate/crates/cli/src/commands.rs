use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use kron22::chambers::{ChamberCatalog, CATALOG_SCHEMA_VERSION};
use kron22::index::to_kron_index;
use kron22::kron::{kron_full_with, reduced_terms, EngineKind, ReducedEngine};
use kron22::oracle::{default_cache_dir, Oracle, OracleConfig};
use kron22::stretch::{fit_quasipolynomial, stretch_samples_with, StretchProfile};
use kron22::verify::verify_box;
use kron22::{KronError, KronIndex, Normalized, Partition, ReducedIndex};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Engine, Format, RunArgs};

/// Version of every JSON record the CLI prints.
pub const OUTPUT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum Failure {
    /// Bad input or configuration: exit code 1.
    User(String),
    /// Engines or fits disagree: exit code 2.
    Inconsistent(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::User(_) => ExitCode::from(1),
            Failure::Inconsistent(_) => ExitCode::from(2),
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::User(m) | Failure::Inconsistent(m) => m,
        }
    }
}

impl From<KronError> for Failure {
    fn from(e: KronError) -> Self {
        match e {
            KronError::Disagreement(_) => Failure::Inconsistent(e.to_string()),
            _ => Failure::User(e.to_string()),
        }
    }
}

/// What a command produced: text for the output sink and the exit code.
pub struct Outcome {
    pub text: String,
    pub code: ExitCode,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            code: ExitCode::SUCCESS,
        }
    }
}

fn oracle_for(run: &RunArgs) -> Oracle {
    Oracle::new(OracleConfig {
        cap: run.cap,
        cache_dir: run.cache_dir.clone().or_else(default_cache_dir),
        ..OracleConfig::default()
    })
}

fn engine<'a>(e: Engine, catalog: &'a ChamberCatalog, oracle: &'a Oracle) -> ReducedEngine<'a> {
    match e {
        Engine::Count => ReducedEngine::Count,
        Engine::Chamber => ReducedEngine::Chamber(catalog),
        Engine::Oracle => ReducedEngine::Oracle(oracle),
    }
}

fn load_catalog(path: &Path) -> Result<ChamberCatalog, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::User(format!("cannot read {}: {e}", path.display())))?;
    Ok(ChamberCatalog::from_json(&text)?)
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>().map_err(Failure::from)
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json value");
    s.push('\n');
    s
}

/// Labels of the chambers whose closed cells contain `h`.
fn chamber_labels(catalog: &ChamberCatalog, h: ReducedIndex) -> Vec<String> {
    catalog
        .chambers_containing(h.point())
        .map(|cs| cs.iter().map(|c| c.label()).collect())
        .unwrap_or_default()
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    if let Some(w) = cli.run.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| Failure::User(format!("cannot start {w} workers: {e}")))?;
    }
    let run = &cli.run;
    match &cli.command {
        Command::G {
            lambda,
            mu,
            nu,
            explain,
        } => cmd_g(run, lambda, mu, nu, *explain),
        Command::Gbar {
            r,
            s,
            g1,
            g2,
            explain,
        } => cmd_gbar(run, ReducedIndex::new(*r, *s, *g1, *g2)?, *explain),
        Command::Verify {
            bx,
            engines,
            catalog,
        } => cmd_verify(run, &bx.0, engines, catalog.as_deref()),
        Command::ExportFan { catalog } => cmd_export_fan(catalog.as_deref()),
        Command::Stretch {
            n,
            r,
            s,
            g1,
            g2,
            n_max,
        } => cmd_stretch(run, KronIndex::new(*n, *r, *s, *g1, *g2)?, *n_max),
        Command::Counterexamples { bx } => cmd_counterexamples(run, &bx.0),
    }
}

fn cmd_g(
    run: &RunArgs,
    lambda: &str,
    mu: &str,
    nu: &str,
    explain: bool,
) -> Result<Outcome, Failure> {
    let (l, m, n) = (
        parse_partition(lambda)?,
        parse_partition(mu)?,
        parse_partition(nu)?,
    );
    let catalog = ChamberCatalog::standard();
    let oracle = oracle_for(run);
    let e = engine(run.engine, catalog, &oracle);
    let value = kron_full_with(&l, &m, &n, &e)?;
    let normalized = to_kron_index(&l, &m, &n)?;

    let mut terms = Vec::new();
    if explain {
        if let Normalized::Index(idx) = normalized {
            for (t, h) in reduced_terms(&idx)?.into_iter().enumerate() {
                let sign = if t == 1 { -1 } else { 1 };
                terms.push((sign, h, e.reduced_value(h)?, chamber_labels(catalog, h)));
            }
        }
    }

    let text = match run.format {
        Format::Json => {
            let mut v = json!({
                "schema_version": OUTPUT_SCHEMA_VERSION,
                "command": "g",
                "lambda": l, "mu": m, "nu": n,
                "engine": EngineKind::from(run.engine),
                "value": value,
            });
            if explain {
                v["index"] = match normalized {
                    Normalized::Index(idx) => json!(idx),
                    Normalized::Zero => Value::Null,
                };
                v["terms"] = terms
                    .iter()
                    .map(|(sign, h, val, cs)| {
                        json!({"sign": sign, "reduced": h.point(), "value": val, "chambers": cs})
                    })
                    .collect();
            }
            json_line(&v)
        }
        Format::Table => {
            let mut s = format!("{value}\n");
            if explain {
                match normalized {
                    Normalized::Zero => {
                        s.push_str("index: zero by the length condition on λ\n");
                    }
                    Normalized::Index(idx) => {
                        writeln!(s, "index (n, r, s, g1, g2): {idx}").unwrap();
                        writeln!(s, "engine: {}", EngineKind::from(run.engine)).unwrap();
                        for (sign, h, val, cs) in &terms {
                            let c = if cs.is_empty() {
                                "outside the cone".to_string()
                            } else {
                                format!("chambers {}", cs.join(" "))
                            };
                            let sg = if *sign < 0 { '-' } else { '+' };
                            writeln!(s, "  {sg} ḡ{h} = {val}    [{c}]").unwrap();
                        }
                    }
                }
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_gbar(run: &RunArgs, h: ReducedIndex, explain: bool) -> Result<Outcome, Failure> {
    let catalog = ChamberCatalog::standard();
    let oracle = oracle_for(run);
    let e = engine(run.engine, catalog, &oracle);
    let value = e.reduced_point(h)?;
    let chambers = chamber_labels(catalog, h);
    let path: Vec<String> = chambers
        .first()
        .and_then(|l| catalog.by_label(l))
        .map(|c| {
            catalog
                .evaluation_path(c)
                .into_iter()
                .map(|i| catalog.chamber(i).label())
                .collect()
        })
        .unwrap_or_default();

    let text = match run.format {
        Format::Json => {
            let mut v = json!({
                "schema_version": OUTPUT_SCHEMA_VERSION,
                "command": "gbar",
                "reduced": h.point(),
                "engine": EngineKind::from(run.engine),
                "value": value,
            });
            if explain {
                v["chambers"] = json!(chambers);
                v["path"] = json!(path);
            }
            json_line(&v)
        }
        Format::Table => {
            let mut s = format!("{value}\n");
            if explain {
                if chambers.is_empty() {
                    s.push_str("outside the cone: zero\n");
                } else {
                    writeln!(s, "chambers: {}", chambers.join(" ")).unwrap();
                    writeln!(s, "path from the root: {}", path.join(" -> ")).unwrap();
                }
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_verify(
    run: &RunArgs,
    bx: &kron22::IndexBox,
    engines: &[Engine],
    catalog: Option<&Path>,
) -> Result<Outcome, Failure> {
    let kinds: Vec<EngineKind> = engines.iter().map(|&e| e.into()).collect();
    let oracle = oracle_for(run);
    let uses_oracle = kinds.contains(&EngineKind::Oracle);
    if uses_oracle && bx.max_n() as u64 > run.cap {
        return Err(Failure::User(format!(
            "box reaches n = {} beyond the cap {}; raise --cap",
            bx.max_n(),
            run.cap
        )));
    }
    let owned;
    let catalog = match catalog {
        Some(p) => {
            owned = load_catalog(p)?;
            &owned
        }
        None => ChamberCatalog::standard(),
    };
    if uses_oracle && oracle.config().cache_dir.is_some() {
        for n in 0..=bx.max_n().max(0) as u32 {
            oracle.character_table(n)?;
        }
    }
    let report = verify_box(bx, &kinds, catalog, &oracle)?;
    let names: Vec<String> = kinds.iter().map(ToString::to_string).collect();
    let mut text = String::new();
    match run.format {
        Format::Json => {
            for m in &report.mismatches {
                text.push_str(&json_line(&json!({
                    "schema_version": OUTPUT_SCHEMA_VERSION,
                    "mismatch": m,
                })));
            }
            text.push_str(&json_line(&json!({
                "schema_version": OUTPUT_SCHEMA_VERSION,
                "summary": {
                    "engines": names,
                    "checked": report.checked,
                    "mismatches": report.mismatches.len(),
                },
            })));
        }
        Format::Table => {
            for m in &report.mismatches {
                let vals: Vec<String> = m.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(text, "MISMATCH {}  {}", m.index, vals.join(" ")).unwrap();
            }
            writeln!(
                text,
                "checked {} indices with {}: {} mismatches",
                report.checked,
                names.join(", "),
                report.mismatches.len()
            )
            .unwrap();
        }
    }
    Ok(Outcome {
        text,
        code: if report.is_clean() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(2)
        },
    })
}

fn cmd_export_fan(catalog: Option<&Path>) -> Result<Outcome, Failure> {
    let text = match catalog {
        Some(p) => load_catalog(p)?.to_json(),
        None => ChamberCatalog::standard().to_json(),
    };
    debug_assert!(text.contains(&format!("\"schema_version\": {CATALOG_SCHEMA_VERSION}")));
    Ok(Outcome::ok(text))
}

fn cmd_stretch(run: &RunArgs, idx: KronIndex, n_max: u64) -> Result<Outcome, Failure> {
    let catalog = ChamberCatalog::standard();
    let oracle = oracle_for(run);
    let e = engine(run.engine, catalog, &oracle);
    let samples = stretch_samples_with(&idx, n_max, &e)?;
    let fit = fit_quasipolynomial(&samples, 2, 2);
    let (text, code) = match (&fit, run.format) {
        (Ok(f), Format::Json) => {
            let profile = StretchProfile {
                base: idx,
                samples: samples.clone(),
                fitted: f.clone(),
            };
            let v = json!({
                "schema_version": OUTPUT_SCHEMA_VERSION,
                "profile": profile,
                "fitted_at_0": f.eval_integer(0),
            });
            (json_line(&v), ExitCode::SUCCESS)
        }
        (Err(err), Format::Json) => {
            let v = json!({
                "schema_version": OUTPUT_SCHEMA_VERSION,
                "base": idx,
                "samples": samples,
                "fit_error": err.to_string(),
            });
            (json_line(&v), ExitCode::from(2))
        }
        (_, Format::Table) => {
            let mut s = String::new();
            writeln!(s, "index: {idx}").unwrap();
            let vals: Vec<String> = samples.iter().map(|(_, v)| v.to_string()).collect();
            writeln!(s, "g(N·idx), N = 1..{n_max}: {}", vals.join(" ")).unwrap();
            match &fit {
                Ok(f) => {
                    writeln!(s, "fit: {f}").unwrap();
                    writeln!(s, "fit at N = 0: {}", f.eval(0)).unwrap();
                    (s, ExitCode::SUCCESS)
                }
                Err(err) => {
                    writeln!(s, "no fit: {err}").unwrap();
                    (s, ExitCode::from(2))
                }
            }
        }
    };
    Ok(Outcome { text, code })
}

fn cmd_counterexamples(run: &RunArgs, bx: &kron22::IndexBox) -> Result<Outcome, Failure> {
    let catalog = ChamberCatalog::standard();
    let oracle = oracle_for(run);
    // The oracle confirms every hit; the search itself uses a formula engine.
    let search = match run.engine {
        Engine::Count => ReducedEngine::Count,
        _ => ReducedEngine::Chamber(catalog),
    };
    let certs = kron22::stretch::find_sh_counterexamples_with(bx, &search, &oracle)?;
    let mut text = String::new();
    match run.format {
        Format::Json => {
            for c in &certs {
                text.push_str(&c.to_json_line());
                text.push('\n');
            }
        }
        Format::Table => {
            for c in &certs {
                let systems: Vec<String> = c.systems.iter().map(ToString::to_string).collect();
                writeln!(
                    text,
                    "{}  g = {}  g(2·) = {}  g({}·) = {}  systems: {}",
                    c.index,
                    c.at_1.oracle,
                    c.at_2.oracle,
                    c.odd_witness.stretch,
                    c.odd_witness.oracle,
                    systems.join(",")
                )
                .unwrap();
            }
        }
    }
    Ok(Outcome::ok(text))
}
