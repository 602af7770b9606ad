//! Command-line front end.
//!
//! Every numeric setting can come from a flag or from a TOML file passed
//! with `--config`; flags win. Output files are deterministic for a given
//! configuration.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::channel::{classify, ChannelParams};
use crate::error::{Error, Result};
use crate::geometry::{contains, gap, Frontier, GapSummary, RateGrid};
use crate::grid::linspace;
use crate::inner::{capacity_region, superposition_region, CapacityRegion};
use crate::log2_1p;
use crate::oracles::{run_suite, Suite};
use crate::outer::{
    bc_dms_hull, bc_dms_outer_bound, bc_pr_bound, degraded_bc_region, unifying_region, z_bc_dms_region, BoundGrids,
    SplitGrid,
};
use crate::report::VerificationReport;

#[derive(Debug, Parser)]
#[command(
    name = "cogregions",
    version,
    about = "Rate regions of the Gaussian cognitive interference channel"
)]
pub struct Cli {
    /// TOML file with default settings (keys as the long flags, `-` or `_`).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the interference regime as JSON.
    Classify(Settings),
    /// Compute one region and write its frontier.
    Region(Settings),
    /// Check that the `--bound` region lies inside the `--against` region.
    Compare {
        #[command(flatten)]
        settings: Settings,
        #[arg(long, value_enum)]
        against: BoundKind,
    },
    /// Run a verification suite; prints one JSON report per line.
    Verify {
        #[command(flatten)]
        settings: Settings,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Outer and inner frontiers at a=0.01, b=10, P1=P2=5 with their gap.
    Fig3(Settings),
    /// Summary of one region while one channel parameter varies.
    Sweep {
        #[command(flatten)]
        settings: Settings,
        #[arg(long, value_enum)]
        vary: SweepParam,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long, default_value_t = 11)]
        steps: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum BoundKind {
    #[value(name = "unifying")]
    #[serde(rename = "unifying")]
    Unifying,
    #[value(name = "cor2")]
    #[serde(rename = "cor2")]
    ZChannel,
    #[value(name = "bcdms")]
    #[serde(rename = "bcdms")]
    BcDms,
    #[value(name = "th1")]
    #[serde(rename = "th1")]
    BcDmsOuter,
    #[value(name = "bcpr")]
    #[serde(rename = "bcpr")]
    BcPr,
    #[value(name = "bergmans")]
    #[serde(rename = "bergmans")]
    DegradedBc,
    #[value(name = "schemeE")]
    #[serde(rename = "schemeE")]
    Superposition,
    #[value(name = "capacity")]
    #[serde(rename = "capacity")]
    Capacity,
}

impl BoundKind {
    fn name(&self) -> &'static str {
        match self {
            BoundKind::Unifying => "unifying",
            BoundKind::ZChannel => "cor2",
            BoundKind::BcDms => "bcdms",
            BoundKind::BcDmsOuter => "th1",
            BoundKind::BcPr => "bcpr",
            BoundKind::DegradedBc => "bergmans",
            BoundKind::Superposition => "schemeE",
            BoundKind::Capacity => "capacity",
        }
    }

    fn description(&self) -> &'static str {
        match self {
            BoundKind::Unifying => "unifying outer bound, union over the power split alpha",
            BoundKind::ZChannel => "closed-form BC-DMS outer bound for the Z-channel (a = 0), union over alpha",
            BoundKind::BcDms => "broadcast channel with degraded message set, convex closure over covariance splits",
            BoundKind::BcDmsOuter => "BC-DMS region intersected with the unifying bound (strong interference)",
            BoundKind::BcPr => {
                "private-rates broadcast region (dirty paper coding) intersected with the unifying bound"
            }
            BoundKind::DegradedBc => "degraded broadcast channel capacity region, X2 silent",
            BoundKind::Superposition => "superposition coding inner bound, time-sharing closure",
            BoundKind::Capacity => "capacity region where known, else inner and outer bounds",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Rates,
    Degradedness,
    Dominance,
    DominanceExact,
    Redundancy,
    Superposition,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Rates => Suite::Rates,
            SuiteArg::Degradedness => Suite::Degradedness,
            SuiteArg::Dominance => Suite::Dominance,
            SuiteArg::DominanceExact => Suite::DominanceExact,
            SuiteArg::Redundancy => Suite::Redundancy,
            SuiteArg::Superposition => Suite::Superposition,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    A,
    B,
    P1,
    P2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Settings shared by every subcommand. Unset values fall back to the
/// config file, then to built-in defaults.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    /// Cross gain at receiver 1 (from the primary transmitter).
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Cross gain at receiver 2; only |b| matters.
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Power of the cognitive transmitter.
    #[arg(long)]
    pub p1: Option<f64>,
    /// Power of the primary transmitter.
    #[arg(long)]
    pub p2: Option<f64>,
    /// Region to compute.
    #[arg(long, value_enum)]
    pub bound: Option<BoundKind>,
    /// Power-split samples for the closed-form bounds [default: 1001].
    #[arg(long)]
    #[serde(alias = "alpha-grid")]
    pub alpha_grid: Option<usize>,
    /// Private-layer fractions for superposition coding [default: 1001].
    #[arg(long)]
    #[serde(alias = "beta-grid")]
    pub beta_grid: Option<usize>,
    /// One count for every axis, or four comma-separated counts
    /// `alpha1,alpha2,rho1,rho2`.
    #[arg(long)]
    #[serde(alias = "split-grid")]
    pub split_grid: Option<String>,
    /// Uniform R1 samples used to trace each union.
    #[arg(long)]
    #[serde(alias = "rate-grid")]
    pub rate_grid: Option<usize>,
    /// Monte Carlo samples per check.
    #[arg(long)]
    pub samples: Option<u64>,
    /// Master seed for Monte Carlo checks.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Frontier output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when unset (for `fig3`, the file prefix).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Tolerance in bits for `compare` and `fig3`.
    #[arg(long)]
    pub tol: Option<f64>,
}

impl Settings {
    /// Fills every unset field from `base`.
    pub fn or(self, base: Settings) -> Settings {
        Settings {
            a: self.a.or(base.a),
            b: self.b.or(base.b),
            p1: self.p1.or(base.p1),
            p2: self.p2.or(base.p2),
            bound: self.bound.or(base.bound),
            alpha_grid: self.alpha_grid.or(base.alpha_grid),
            beta_grid: self.beta_grid.or(base.beta_grid),
            split_grid: self.split_grid.or(base.split_grid),
            rate_grid: self.rate_grid.or(base.rate_grid),
            samples: self.samples.or(base.samples),
            seed: self.seed.or(base.seed),
            format: self.format.or(base.format),
            out: self.out.or(base.out),
            tol: self.tol.or(base.tol),
        }
    }

    pub fn from_toml(text: &str) -> Result<Settings> {
        toml::from_str(text).map_err(|e| Error::InvalidParams(format!("config: {e}")))
    }

    fn params(&self) -> Result<ChannelParams> {
        let need = |v: Option<f64>, name: &str| v.ok_or_else(|| Error::InvalidParams(format!("missing --{name}")));
        ChannelParams::with_signed_b(
            self.a.unwrap_or(0.0),
            need(self.b, "b")?,
            need(self.p1, "p1")?,
            need(self.p2, "p2")?,
        )
    }

    fn grids(&self) -> Result<BoundGrids> {
        let d = BoundGrids::default();
        let grids = BoundGrids {
            alpha: self.alpha_grid.unwrap_or(d.alpha),
            beta: self.beta_grid.unwrap_or(d.beta),
            split: match &self.split_grid {
                Some(s) => parse_split_grid(s)?,
                None => d.split,
            },
            rate: RateGrid {
                points: self.rate_grid.unwrap_or(d.rate.points),
                corners: true,
            },
        };
        let split = grids.split;
        for (name, n) in [
            ("alpha-grid", grids.alpha),
            ("beta-grid", grids.beta),
            ("rate-grid", grids.rate.points),
            (
                "split-grid",
                split.alpha1.min(split.alpha2).min(split.rho1).min(split.rho2),
            ),
        ] {
            if n < 2 {
                return Err(Error::InvalidGrid(format!("--{name} needs at least 2 points, got {n}")));
            }
        }
        Ok(grids)
    }

    fn bound(&self) -> Result<BoundKind> {
        self.bound.ok_or_else(|| Error::InvalidParams("missing --bound".into()))
    }
}

pub fn parse_split_grid(s: &str) -> Result<SplitGrid> {
    let counts = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidGrid(format!("bad split grid {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    match counts[..] {
        [n] => Ok(SplitGrid::uniform(n)),
        [alpha1, alpha2, rho1, rho2] => Ok(SplitGrid {
            alpha1,
            alpha2,
            rho1,
            rho2,
        }),
        _ => Err(Error::InvalidGrid(format!("split grid takes 1 or 4 counts, got {s:?}"))),
    }
}

/// Computed region, with the inner bound alongside when capacity is open.
pub struct RegionOutput {
    pub frontier: Frontier,
    pub status: Option<&'static str>,
    pub inner: Option<Frontier>,
}

pub fn compute_region(kind: BoundKind, params: &ChannelParams, grids: &BoundGrids) -> Result<RegionOutput> {
    let plain = |frontier: Frontier| RegionOutput {
        frontier,
        status: None,
        inner: None,
    };
    Ok(match kind {
        BoundKind::Unifying => plain(unifying_region(params, grids.alpha, &grids.rate)?),
        BoundKind::ZChannel => plain(z_bc_dms_region(params, grids.alpha, &grids.rate)?),
        BoundKind::BcDms => plain(bc_dms_hull(params, &grids.split)?),
        BoundKind::BcDmsOuter => plain(bc_dms_outer_bound(params, grids)?),
        BoundKind::BcPr => plain(bc_pr_bound(params, grids)?),
        BoundKind::DegradedBc => {
            let alphas = linspace(0.0, 1.0, grids.alpha)?;
            plain(degraded_bc_region(params.p1, params.b, &alphas, &grids.rate)?)
        }
        BoundKind::Superposition => plain(superposition_region(params, grids.beta, &grids.rate)?),
        BoundKind::Capacity => match capacity_region(params, grids)? {
            CapacityRegion::Exact { frontier, .. } => RegionOutput {
                frontier,
                status: Some("exact"),
                inner: None,
            },
            CapacityRegion::Open { inner, outer } => RegionOutput {
                frontier: outer,
                status: Some("open"),
                inner: Some(inner),
            },
        },
    })
}

#[derive(Serialize)]
struct GridMeta {
    alpha: usize,
    beta: usize,
    split: SplitGrid,
    rate_points: usize,
}

impl From<&BoundGrids> for GridMeta {
    fn from(g: &BoundGrids) -> Self {
        Self {
            alpha: g.alpha,
            beta: g.beta,
            split: g.split,
            rate_points: g.rate.points,
        }
    }
}

#[derive(Serialize)]
struct Metadata<'a> {
    bound: &'a str,
    description: &'a str,
    params: ChannelParams,
    grids: GridMeta,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inner_file: Option<String>,
    units: &'a str,
}

fn render(f: &Frontier, format: Format) -> String {
    match format {
        Format::Csv => f.to_csv_string(),
        Format::Json => f.to_json() + "\n",
    }
}

/// `x.csv` -> `x.meta.json`
pub fn meta_path(out: &Path) -> PathBuf {
    out.with_extension("meta.json")
}

fn sibling(out: &Path, tag: &str) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("region");
    let ext = out.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    out.with_file_name(format!("{stem}.{tag}.{ext}"))
}

fn write_region(
    kind: BoundKind,
    params: &ChannelParams,
    grids: &BoundGrids,
    region: &RegionOutput,
    format: Format,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<()> {
    let Some(out) = out else {
        stdout.write_all(render(&region.frontier, format).as_bytes())?;
        if let Some(inner) = &region.inner {
            writeln!(stdout, "# inner bound")?;
            stdout.write_all(render(inner, format).as_bytes())?;
        }
        return Ok(());
    };
    write_file(out, render(&region.frontier, format))?;
    let inner_file = match &region.inner {
        Some(inner) => {
            let path = sibling(out, "inner");
            write_file(&path, render(inner, format))?;
            Some(path.display().to_string())
        }
        None => None,
    };
    let meta = Metadata {
        bound: kind.name(),
        description: kind.description(),
        params: *params,
        grids: grids.into(),
        status: region.status,
        inner_file,
        units: "bits per channel use",
    };
    write_file(meta_path(out), serde_json::to_string_pretty(&meta)? + "\n")?;
    Ok(())
}

#[derive(Serialize)]
struct CompareReport<'a> {
    bound: &'a str,
    against: &'a str,
    containment: VerificationReport,
    gap: GapSummary,
}

/// Gap profile and checks of the Fig.-3 style comparison.
#[derive(Debug, Clone, Serialize)]
pub struct Fig3Report {
    pub params: ChannelParams,
    pub dominance: VerificationReport,
    pub gap: VerificationReport,
    pub r2_floor: VerificationReport,
    pub summary: GapSummary,
    /// `(R1, outer - inner)` samples, denser near the top of the R1 range.
    pub profile: Vec<[f64; 2]>,
    /// `log2(1 + P1)` minus the largest inner-bound R1.
    pub r1_shortfall: f64,
}

impl Fig3Report {
    pub fn passed(&self) -> bool {
        self.dominance.passed && self.gap.passed && self.r2_floor.passed
    }
}

/// Default grids of the Fig.-3 comparison: the common-layer axis of the
/// split grid is refined since the BC-DMS boundary is traced along it.
pub fn fig3_grids() -> BoundGrids {
    BoundGrids {
        split: SplitGrid {
            alpha1: 1001,
            alpha2: 21,
            rho1: 21,
            rho2: 21,
        },
        ..BoundGrids::default()
    }
}

/// Outer (BC-DMS ∩ unifying) and inner (generalized superposition)
/// frontiers at `params`, with dominance, gap and R2-floor checks.
pub fn fig3(params: &ChannelParams, grids: &BoundGrids, gap_tol: f64) -> Result<(Frontier, Frontier, Fig3Report)> {
    let outer = bc_dms_outer_bound(params, grids)?;
    let inner = superposition_region(params, grids.beta, &grids.rate)?;
    let mut dominance = contains(&outer, &inner, 1e-3);
    dominance.name = "fig3_dominance".into();

    let r1_top = log2_1p(params.p1);
    let summary = gap(&outer, &inner);
    let gap_report = VerificationReport::new(
        "fig3_gap",
        summary.max_gap,
        gap_tol,
        (outer.len() + inner.len()) as u64,
        None,
        format!(
            "max gap at R1 = {:.6}; inner region ends {:.3e} bits short of R1 = {:.6}",
            summary.max_gap_r1,
            r1_top - inner.max_r1(),
            r1_top
        ),
    );

    let floor = outer
        .points()
        .iter()
        .chain(inner.points())
        .map(|p| p[1])
        .fold(f64::INFINITY, f64::min);
    let r2_floor = VerificationReport::new(
        "fig3_r2_above_1.5",
        (1.5 - floor).max(0.0),
        0.0,
        (outer.len() + inner.len()) as u64,
        None,
        format!("lowest R2 on either frontier: {floor:.6}"),
    );

    let hi = summary.common_max_r1;
    let mut xs = linspace(0.0, hi, 11)?;
    xs.extend([0.9, 0.95, 0.98, 0.99, 0.995, 0.999, 1.0].map(|t| t * hi));
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let profile = xs
        .into_iter()
        .filter_map(|x| Some([x, outer.value_at(x)? - inner.value_at(x)?]))
        .collect();

    let report = Fig3Report {
        params: *params,
        dominance,
        gap: gap_report,
        r2_floor,
        summary,
        profile,
        r1_shortfall: r1_top - inner.max_r1(),
    };
    Ok((outer, inner, report))
}

fn settings_with_config(cli_settings: Settings, config: Option<&Path>) -> Result<Settings> {
    match config {
        Some(path) => Ok(cli_settings.or(Settings::from_toml(&fs::read_to_string(path)?)?)),
        None => Ok(cli_settings),
    }
}

/// Runs one command. Returns whether every requested check passed.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<bool> {
    let config = cli.config.as_deref();
    match cli.command {
        Command::Classify(s) => {
            let s = settings_with_config(s, config)?;
            let report = classify(&s.params()?);
            writeln!(stdout, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(true)
        }
        Command::Region(s) => {
            let s = settings_with_config(s, config)?;
            let (kind, params, grids) = (s.bound()?, s.params()?, s.grids()?);
            let region = compute_region(kind, &params, &grids)?;
            write_region(
                kind,
                &params,
                &grids,
                &region,
                s.format.unwrap_or_default(),
                s.out.as_deref(),
                stdout,
            )?;
            Ok(true)
        }
        Command::Compare { settings, against } => {
            let s = settings_with_config(settings, config)?;
            let (kind, params, grids) = (s.bound()?, s.params()?, s.grids()?);
            let inner = compute_region(kind, &params, &grids)?.frontier;
            let outer = compute_region(against, &params, &grids)?.frontier;
            let mut containment = contains(&outer, &inner, s.tol.unwrap_or(1e-9));
            containment.name = format!("{} within {}", kind.name(), against.name());
            let report = CompareReport {
                bound: kind.name(),
                against: against.name(),
                gap: gap(&outer, &inner),
                containment,
            };
            let text = serde_json::to_string_pretty(&report)? + "\n";
            emit(&text, s.out.as_deref(), stdout)?;
            Ok(report.containment.passed)
        }
        Command::Verify { settings, suite } => {
            let s = settings_with_config(settings, config)?;
            let reports = run_suite(suite.into(), s.samples.unwrap_or(1_000_000), s.seed.unwrap_or(0))?;
            let text: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
            emit(&text, s.out.as_deref(), stdout)?;
            Ok(reports.iter().all(|r| r.passed))
        }
        Command::Fig3(s) => {
            let s = settings_with_config(s, config)?.or(Settings {
                a: Some(0.01),
                b: Some(10.0),
                p1: Some(5.0),
                p2: Some(5.0),
                split_grid: Some("1001,21,21,21".into()),
                ..Settings::default()
            });
            let (params, grids) = (s.params()?, s.grids()?);
            let (outer, inner, report) = fig3(&params, &grids, s.tol.unwrap_or(0.1))?;
            let format = s.format.unwrap_or_default();
            let prefix = s.out.clone().unwrap_or_else(|| PathBuf::from("fig3"));
            let ext = match format {
                Format::Csv => "csv",
                Format::Json => "json",
            };
            let name = |tag: &str| {
                let stem = prefix.file_name().and_then(|n| n.to_str()).unwrap_or("fig3");
                prefix.with_file_name(format!("{stem}_{tag}"))
            };
            write_file(name(&format!("outer.{ext}")), render(&outer, format))?;
            write_file(name(&format!("inner.{ext}")), render(&inner, format))?;
            let text = serde_json::to_string_pretty(&report)? + "\n";
            write_file(name("gap.json"), &text)?;
            stdout.write_all(text.as_bytes())?;
            Ok(report.passed())
        }
        Command::Sweep {
            settings,
            vary,
            from,
            to,
            steps,
        } => {
            let s = settings_with_config(settings, config)?;
            let (kind, grids) = (s.bound()?, s.grids()?);
            let mut text = String::from("value,max_r1_bits,max_r2_bits,max_sum_rate_bits\n");
            for v in linspace(from, to, steps)? {
                let mut point = s.clone();
                let slot = match vary {
                    SweepParam::A => &mut point.a,
                    SweepParam::B => &mut point.b,
                    SweepParam::P1 => &mut point.p1,
                    SweepParam::P2 => &mut point.p2,
                };
                *slot = Some(v);
                let f = compute_region(kind, &point.params()?, &grids)?.frontier;
                let sum = f.points().iter().map(|p| p[0] + p[1]).fold(0.0, f64::max);
                text.push_str(&format!("{v},{},{},{sum}\n", f.max_r1(), f.max_r2()));
            }
            emit(&text, s.out.as_deref(), stdout)?;
            Ok(true)
        }
    }
}

/// Writes `contents` to `path`, creating missing parent directories.
fn write_file(path: impl AsRef<Path>, contents: impl AsRef<[u8]>) -> Result<()> {
    let path = path.as_ref();
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, contents)?;
    Ok(())
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => write_file(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_grid_parsing() {
        assert_eq!(parse_split_grid("7").unwrap(), SplitGrid::uniform(7));
        let g = parse_split_grid("101, 3,4,5").unwrap();
        assert_eq!((g.alpha1, g.alpha2, g.rho1, g.rho2), (101, 3, 4, 5));
        assert!(parse_split_grid("1,2").is_err());
        assert!(parse_split_grid("x").is_err());
    }

    #[test]
    fn flags_override_config() {
        let file = Settings::from_toml("b = 3.0\np1 = 1.0\np2 = 1.0\nalpha-grid = 11\n").unwrap();
        let flags = Settings {
            b: Some(4.0),
            ..Settings::default()
        };
        let s = flags.or(file);
        assert_eq!(s.b, Some(4.0));
        assert_eq!(s.p1, Some(1.0));
        assert_eq!(s.alpha_grid, Some(11));
        assert!(Settings::from_toml("bogus = 1").is_err());
    }

    #[test]
    fn grid_validation() {
        let s = Settings {
            alpha_grid: Some(1),
            ..Settings::default()
        };
        assert!(s.grids().is_err());
        let s = Settings {
            split_grid: Some("1".into()),
            ..Settings::default()
        };
        assert!(s.grids().is_err());
    }

    #[test]
    fn missing_params_reported() {
        let err = Settings::default().params().unwrap_err();
        assert!(err.to_string().contains("--b"));
    }

    #[test]
    fn meta_sibling_names() {
        assert_eq!(meta_path(Path::new("out/x.csv")), PathBuf::from("out/x.meta.json"));
        assert_eq!(
            sibling(Path::new("out/x.csv"), "inner"),
            PathBuf::from("out/x.inner.csv")
        );
    }
}
