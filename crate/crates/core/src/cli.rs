//! Command-line front end.
//!
//! Exit codes: 0 success or confirmation, 1 I/O failure, 2 usage or invalid
//! input, 3 golden mismatch or oracle counter-observation, 4 tractability
//! bound exceeded, 5 internal consistency failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::character::{weight_system, weyl_dim, Character, CharacterJson, IrrepLabel};
use crate::classify::{
    classify_with_density, dual_highest_weight, enumerate_classification, product_thickness,
    Classification, EnumerationConfig, Mode, ProductLabel, ThicknessVerdict, VerdictRow,
    DEFAULT_DENSITY_BOUND,
};
use crate::error::Error;
use crate::oracle::{
    sample_thickness_evidence, verify_nonthick_witness, MatrixRep, RepKind, SamplerConfig,
    Thresholds,
};
use crate::poset::build_poset;
use crate::rootsystem::{CartanType, Family, RootSystem, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_INTRACTABLE: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

pub const CACHE_ENV: &str = "THICKREP_CACHE_DIR";

const GOLDEN_THICK_100_7: &str = include_str!("../golden/thick_maxdim100_rank7.tsv");
const GOLDEN_DENSE_20_5: &str = include_str!("../golden/dense_maxdim20_rank5.tsv");

/// Header of golden tables.
pub const GOLDEN_HEADER: &str = "family\trank\tlambda\tdim";

#[derive(Debug, Parser)]
#[command(
    name = "thickrep",
    version,
    about = "Thickness and density of irreducible representations of complex simple Lie groups"
)]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
    /// Directory for cached weight systems.
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct LabelArgs {
    /// Family letter A..G.
    pub family: Family,
    pub rank: usize,
    /// Highest weight in fundamental-weight coordinates, e.g. `1,0`.
    #[arg(allow_hyphen_values = true)]
    pub lambda: Weight,
}

impl LabelArgs {
    fn label(&self) -> Result<IrrepLabel, Error> {
        let rs = Arc::new(RootSystem::build(self.family, self.rank)?);
        IrrepLabel::new(rs, self.lambda.clone())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Thickness (and optionally density) verdict for one irreducible.
    Classify {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long)]
        dense: bool,
        #[arg(long, default_value_t = DEFAULT_DENSITY_BOUND)]
        density_bound: u128,
    },
    /// Classify every irreducible up to a dimension bound.
    Enumerate {
        #[arg(long, default_value = "thick")]
        mode: Mode,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        max_dim: u64,
        #[arg(long, default_value_t = 7)]
        max_rank: usize,
        /// Comma-separated family letters; all by default.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<Family>>,
        #[arg(long, default_value_t = DEFAULT_DENSITY_BOUND)]
        density_bound: u128,
        /// List every candidate rather than only positives.
        #[arg(long)]
        all: bool,
        /// Compare the positives with the shipped reference list for these bounds.
        #[arg(long)]
        golden: bool,
        /// Compare against this reference table instead.
        #[arg(long)]
        golden_file: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Weights and multiplicities, highest level first.
    Character {
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Weight poset covers, drawn as a chain when totally ordered.
    Poset {
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Highest weight of the dual representation.
    Dual {
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Thickness of an outer tensor product, factors like `A1:1 G2:1,0`.
    Product {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Numerical experiments on matrix realizations.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Debug, Args)]
pub struct RepArgs {
    /// sl-std, so-odd, so-even, sp-std, sym-sl2 or g2.
    #[arg(long)]
    pub rep: String,
    /// Size parameter: n for SL_n, SO_{2n+1}, SO_{2n}, Sp_{2n}; m for SᵐC².
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Search for group elements making random pairs transversal.
    Evidence {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long, default_value_t = 5)]
        retries: usize,
    },
    /// Check that the canonical non-thickness witness stays degenerate.
    Witness {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Intractable { .. } => EXIT_INTRACTABLE,
            Error::Consistency(_) | Error::Construction(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

/// Output produced by a successful or mismatching run.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses arguments and runs, writing to the given streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&config) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            let _ = err.write_all(o.stderr.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(config: &RunConfig) -> Result<Outcome, Failure> {
    let fmt = config.format;
    let cache = config.cache_dir.as_deref();
    match &config.command {
        Command::Classify {
            label,
            dense,
            density_bound,
        } => {
            let l = label.label()?;
            let v = if *dense {
                classify_with_density(&l, *density_bound)?
            } else {
                ThicknessVerdict::from_character(l.clone(), &cached_weight_system(&l, cache)?)
            };
            Ok(Outcome::ok(render_rows(fmt, &[v.row()], &v)?))
        }
        Command::Enumerate {
            mode,
            max_dim,
            max_rank,
            families,
            density_bound,
            all,
            golden,
            golden_file,
            threads,
        } => {
            let mut cfg = EnumerationConfig::new(*mode, *max_dim as u128, *max_rank);
            if let Some(f) = families {
                cfg.families = f.clone();
            }
            cfg.density_bound = *density_bound;
            let classification = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*t)
                    .build()
                    .map_err(|e| Failure {
                        code: EXIT_USAGE,
                        message: format!("thread pool: {e}"),
                    })?
                    .install(|| enumerate_classification(&cfg))?,
                None => enumerate_classification(&cfg)?,
            };
            if !classification.summary.not_evaluated.is_empty() {
                return Err(Failure {
                    code: EXIT_INTRACTABLE,
                    message: format!(
                        "density not evaluated for {} candidates above dimension {}: {}",
                        classification.summary.not_evaluated.len(),
                        cfg.density_bound,
                        classification.summary.not_evaluated.join(" ")
                    ),
                });
            }
            let reference = if let Some(path) = golden_file {
                Some(std::fs::read_to_string(path)?)
            } else if *golden {
                Some(shipped_golden(&cfg)?.to_string())
            } else {
                None
            };
            if let Some(reference) = reference {
                let diff = golden_diff(&reference, &classification)?;
                if !diff.is_empty() {
                    return Ok(Outcome {
                        code: EXIT_MISMATCH,
                        stdout: String::new(),
                        stderr: format!("golden mismatch:\n{diff}"),
                    });
                }
            }
            Ok(Outcome::ok(render_enumeration(fmt, &classification, *all)?))
        }
        Command::Character { label } => {
            let l = label.label()?;
            let c = cached_weight_system(&l, cache)?;
            Ok(Outcome::ok(render_character(fmt, &l, &c)?))
        }
        Command::Poset { label } => {
            let l = label.label()?;
            let p = build_poset(&cached_weight_system(&l, cache)?);
            let text = match fmt {
                Format::Json => json(&p.to_json())?,
                Format::Tsv => {
                    let mut s = String::from("upper\tlower\troot\n");
                    for c in p.covers() {
                        let _ = writeln!(s, "{}\t{}\t{}", c.upper, c.lower, c.root + 1);
                    }
                    s
                }
                Format::Pretty => p.render(),
            };
            Ok(Outcome::ok(text))
        }
        Command::Dual { label } => {
            let l = label.label()?;
            let dual = dual_highest_weight(&l);
            let name = l.root_system().name();
            let text = match fmt {
                Format::Json => json(&DualJson {
                    type_name: name,
                    lambda: l.highest_weight().0.clone(),
                    dual: dual.0.clone(),
                    self_dual: &dual == l.highest_weight(),
                })?,
                Format::Tsv => format!("type\tlambda\tdual\n{name}\t{}\t{dual}\n", l.highest_weight()),
                Format::Pretty => format!("{l}* = {name}[{dual}]\n"),
            };
            Ok(Outcome::ok(text))
        }
        Command::Product { factors } => {
            let labels = factors
                .iter()
                .map(|f| parse_factor(f))
                .collect::<Result<Vec<_>, Error>>()?;
            let v = product_thickness(&ProductLabel::new(labels)?)?;
            Ok(Outcome::ok(render_rows(fmt, &[v.row()], &v)?))
        }
        Command::Oracle { command } => run_oracle(fmt, command),
    }
}

#[derive(Serialize)]
struct DualJson {
    #[serde(rename = "type")]
    type_name: String,
    lambda: Vec<i64>,
    dual: Vec<i64>,
    self_dual: bool,
}

fn run_oracle(fmt: Format, command: &OracleCommand) -> Result<Outcome, Failure> {
    let build = |r: &RepArgs| -> Result<MatrixRep, Failure> {
        Ok(MatrixRep::build(RepKind::from_cli(&r.rep, r.n)?)?)
    };
    let sampler = SamplerConfig::default();
    let thresholds = Thresholds::default();
    match command {
        OracleCommand::Evidence {
            rep,
            m,
            pairs,
            retries,
        } => {
            let matrices = build(rep)?;
            let report = sample_thickness_evidence(
                &matrices, *m, *pairs, *retries, rep.seed, &sampler, &thresholds,
            )?;
            let code = if report.all_succeeded() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            let text = match fmt {
                Format::Json => json(&report)?,
                Format::Tsv => format!(
                    "rep\tm\tpairs\tretries\tsuccess_fraction\tmin_volume\tmedian_volume\n{}\t{}\t{}\t{}\t{}\t{:e}\t{:e}\n",
                    report.rep,
                    report.m,
                    report.pairs,
                    report.retries,
                    report.success_fraction,
                    report.min_volume,
                    report.median_volume
                ),
                Format::Pretty => {
                    let mut s = format!(
                        "rep {}  m = {}  pairs = {}  retries <= {}\nsuccess fraction {}  min volume {:.3e}  median volume {:.3e}\n",
                        report.rep,
                        report.m,
                        report.pairs,
                        report.retries,
                        report.success_fraction,
                        report.min_volume,
                        report.median_volume
                    );
                    for f in &report.failures {
                        let _ = writeln!(s, "no transversal element found for pair {}", f.pair_seed);
                    }
                    let _ = writeln!(s, "{}", report.note);
                    s
                }
            };
            Ok(Outcome {
                code,
                stdout: text,
                stderr: String::new(),
            })
        }
        OracleCommand::Witness { rep, trials } => {
            let matrices = build(rep)?;
            let witness = match matrices.kind.witness() {
                Some(w) => w?,
                None => {
                    return Err(Failure {
                        code: EXIT_USAGE,
                        message: format!("no non-thickness witness for {}", matrices.kind),
                    })
                }
            };
            let report = verify_nonthick_witness(
                &matrices,
                &witness,
                "split-form maximal isotropic pair",
                *trials,
                rep.seed,
                &sampler,
                &thresholds,
            )?;
            let code = if report.verdict { EXIT_OK } else { EXIT_MISMATCH };
            let text = match fmt {
                Format::Json => json(&report)?,
                Format::Tsv => format!(
                    "rep\ttrials\ttrials_run\tmax_volume\tverdict\n{}\t{}\t{}\t{:e}\t{}\n",
                    report.rep, report.trials, report.trials_run, report.max_volume, report.verdict
                ),
                Format::Pretty => format!(
                    "rep {}  witness: {}\ntrials {} of {}  max volume {:.3e}  threshold {:.0e}\nverdict: {}\n",
                    report.rep,
                    report.witness_kind,
                    report.trials_run,
                    report.trials,
                    report.max_volume,
                    report.threshold,
                    if report.verdict {
                        "witness confirmed, not thick"
                    } else {
                        "transversal element found"
                    }
                ),
            };
            Ok(Outcome {
                code,
                stdout: text,
                stderr: String::new(),
            })
        }
    }
}

/// Parses `A1:1` or `G2:1,0`.
pub fn parse_factor(s: &str) -> Result<IrrepLabel, Error> {
    let (ty, lambda) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("factor {s:?} must look like G2:1,0")))?;
    let family: Family = ty
        .get(..1)
        .ok_or_else(|| Error::Parse(format!("empty type in {s:?}")))?
        .parse()?;
    let rank: usize = ty[1..]
        .parse()
        .map_err(|e| Error::Parse(format!("bad rank in {s:?}: {e}")))?;
    let rs = Arc::new(RootSystem::new(CartanType::new(family, rank)?));
    IrrepLabel::new(rs, lambda.parse()?)
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure {
            code: EXIT_INTERNAL,
            message: format!("serialization: {e}"),
        })
}

fn render_rows(fmt: Format, rows: &[VerdictRow], single: &ThicknessVerdict) -> Result<String, Failure> {
    Ok(match fmt {
        Format::Json if rows.len() == 1 => json(&rows[0])?,
        Format::Json => json(&rows)?,
        Format::Tsv => {
            let mut s = format!("{}\n", VerdictRow::TSV_HEADER);
            for r in rows {
                let _ = writeln!(s, "{}", r.to_tsv());
            }
            s
        }
        Format::Pretty => {
            let v = single;
            let mut s = format!("{}  dim {}\n", v.label, v.dim);
            let _ = writeln!(s, "  weight multiplicity-free  {}", v.wmf);
            let _ = writeln!(s, "  weight poset is a chain   {}", v.chain);
            let _ = writeln!(s, "  thick                     {}", v.thick);
            if let Some(d) = v.dense {
                let _ = writeln!(s, "  dense                     {d}");
                if let Some(f) = &v.failing_m {
                    if !f.is_empty() {
                        let ms: Vec<String> = f.iter().map(|m| m.to_string()).collect();
                        let _ = writeln!(s, "  not m-dense for m in      {}", ms.join(","));
                    }
                }
            }
            let _ = writeln!(s, "  reason                    {}", v.reason);
            s
        }
    })
}

#[derive(Serialize)]
struct EnumerationJson<'a> {
    summary: &'a crate::classify::Summary,
    rows: Vec<VerdictRow>,
}

fn render_enumeration(fmt: Format, c: &Classification, all: bool) -> Result<String, Failure> {
    let rows: Vec<VerdictRow> = if all { &c.all } else { &c.positives }
        .iter()
        .map(|v| v.row())
        .collect();
    Ok(match fmt {
        Format::Json => json(&EnumerationJson {
            summary: &c.summary,
            rows,
        })?,
        Format::Tsv => {
            let mut s = format!("{}\n", VerdictRow::TSV_HEADER);
            for r in &rows {
                let _ = writeln!(s, "{}", r.to_tsv());
            }
            s
        }
        Format::Pretty => {
            let header: Vec<String> = VerdictRow::TSV_HEADER.split('\t').map(String::from).collect();
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.to_tsv().split('\t').map(String::from).collect())
                .collect();
            let mut s = table(&header, &body);
            let sum = &c.summary;
            let _ = writeln!(
                s,
                "{} {} of {} candidates with dim <= {} and rank <= {}",
                sum.positives, sum.mode, sum.candidates, sum.max_dim, sum.max_rank
            );
            s
        }
    })
}

fn table(header: &[String], body: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header);
    for row in body {
        s.push_str(&line(row));
    }
    s
}

fn render_character(fmt: Format, l: &IrrepLabel, c: &Character) -> Result<String, Failure> {
    Ok(match fmt {
        Format::Json => json(&c.to_json())?,
        Format::Tsv => {
            let mut s = String::from("weight\tmult\tlevel\n");
            for (w, m) in c.sorted_entries() {
                let _ = writeln!(s, "{w}\t{m}\t{}", c.height(&w));
            }
            s
        }
        Format::Pretty => {
            let header = ["weight", "mult", "level"].map(String::from);
            let body: Vec<Vec<String>> = c
                .sorted_entries()
                .into_iter()
                .map(|(w, m)| vec![w.to_string(), m.to_string(), c.height(&w).to_string()])
                .collect();
            let mut s = format!("{l}  dim {}  {} weights\n", c.dim(), c.support_len());
            s.push_str(&table(&header, &body));
            s
        }
    })
}

/// The shipped reference list for the given bounds.
pub fn shipped_golden(cfg: &EnumerationConfig) -> Result<&'static str, Failure> {
    let all_families = {
        let mut f = cfg.families.clone();
        f.sort();
        f.dedup();
        f == Family::ALL.to_vec()
    };
    match (cfg.mode, cfg.max_dim, cfg.max_rank, all_families) {
        (Mode::Thick, 100, 7, true) => Ok(GOLDEN_THICK_100_7),
        (Mode::Dense, 20, 5, true) => Ok(GOLDEN_DENSE_20_5),
        _ => Err(Failure {
            code: EXIT_USAGE,
            message: format!(
                "no shipped reference list for mode {} max-dim {} max-rank {} and these families; use --golden-file",
                cfg.mode, cfg.max_dim, cfg.max_rank
            ),
        }),
    }
}

/// Golden row for a verdict: family, rank, lambda, dim.
pub fn golden_row(v: &ThicknessVerdict) -> String {
    let r = v.row();
    let lambda: Vec<String> = r.lambda.iter().map(|c| c.to_string()).collect();
    format!("{}\t{}\t{}\t{}", r.family, r.rank, lambda.join(","), r.dim)
}

/// Lines missing from the run (`-`) and unexpected in the run (`+`).
pub fn golden_diff(reference: &str, c: &Classification) -> Result<String, Failure> {
    let mut lines = reference.lines().filter(|l| !l.trim().is_empty());
    if lines.next() != Some(GOLDEN_HEADER) {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("reference table must start with header {GOLDEN_HEADER:?}"),
        });
    }
    let expected: std::collections::BTreeSet<String> = lines.map(String::from).collect();
    let actual: std::collections::BTreeSet<String> = c.positives.iter().map(golden_row).collect();
    let mut diff = String::new();
    for l in expected.difference(&actual) {
        let _ = writeln!(diff, "- {l}");
    }
    for l in actual.difference(&expected) {
        let _ = writeln!(diff, "+ {l}");
    }
    Ok(diff)
}

fn cache_path(dir: &Path, l: &IrrepLabel) -> PathBuf {
    let coords: Vec<String> = l
        .highest_weight()
        .0
        .iter()
        .map(|c| c.to_string())
        .collect();
    dir.join(format!("{}_{}.json", l.root_system().name(), coords.join("_")))
}

/// Weight system, read from and written to the cache directory when one is
/// given. Unreadable or inconsistent cache entries are recomputed.
pub fn cached_weight_system(l: &IrrepLabel, cache: Option<&Path>) -> Result<Character, Failure> {
    let Some(dir) = cache else {
        return Ok(weight_system(l)?);
    };
    let path = cache_path(dir, l);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(j) = serde_json::from_str::<CharacterJson>(&text) {
            if let Ok(c) = Character::from_json(l.root_system().clone(), &j) {
                if c.dim() as u128 == weyl_dim(l) && c.multiplicity(l.highest_weight()) == 1 {
                    return Ok(c);
                }
            }
        }
    }
    let c = weight_system(l)?;
    std::fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("json.{}", std::process::id()));
    std::fs::write(&tmp, json(&c.to_json())?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(c)
}
