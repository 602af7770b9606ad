//! Independent checks of the closed forms and threshold conditions.
//!
//! Monte Carlo checks draw from ChaCha8 seeded explicitly and report the
//! discrepancy as a z-score (`|estimate - truth| / standard error`) against a
//! tolerance of 5. Grid biconditionals report a mismatch count against a
//! tolerance of 0. Composite deterministic checks report the largest
//! error-to-tolerance ratio against 1.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{z_bound_dominates_exact, ChannelParams, Thresholds};
use crate::error::{check_range, Error, Result};
use crate::geometry::{concavify, union_frontier, Frontier, RateGrid};
use crate::grid::{clustered_unit, linspace};
use crate::inner::{beta_of_alpha, superposition_constraints};
use crate::outer::{z_bc_dms_bound, z_bc_dms_boundary, Cov2};
use crate::report::VerificationReport;

/// z-score tolerance of every Monte Carlo check.
pub const MC_TOLERANCE: f64 = 5.0;
/// Slack in bits for `for all` inequalities evaluated on a grid.
pub const GRID_SLACK: f64 = 1e-12;
/// Smallest Monte Carlo sample count accepted.
pub const MIN_SAMPLES: u64 = 10_000;

fn check_samples(n: u64) -> Result<()> {
    if n < MIN_SAMPLES {
        return Err(Error::InvalidParams(format!(
            "need at least {MIN_SAMPLES} samples, got {n}"
        )));
    }
    Ok(())
}

/// Mean and standard error of a stream of values.
#[derive(Default)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    fn std_error(&self) -> f64 {
        (self.m2 / (self.n - 1) as f64 / self.n as f64).sqrt()
    }

    /// `|mean - truth|` in standard errors.
    fn z(&self, truth: f64) -> f64 {
        let diff = (self.mean - truth).abs();
        let se = self.std_error();
        if se > 0.0 {
            diff / se
        } else if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

/// Draws a zero-mean Gaussian pair with covariance `s`.
struct PairSampler {
    l11: f64,
    l21: f64,
    l22: f64,
}

impl PairSampler {
    fn new(s: &Cov2) -> Result<Self> {
        if !s.is_psd(1e-12) {
            return Err(Error::NotPsd(format!("{s:?}")));
        }
        let l11 = s.xx.max(0.0).sqrt();
        let l21 = if l11 > 0.0 { s.xy / l11 } else { 0.0 };
        let l22 = (s.yy - l21 * l21).max(0.0).sqrt();
        Ok(Self { l11, l21, l22 })
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> (f64, f64) {
        let g1: f64 = StandardNormal.sample(rng);
        let g2: f64 = StandardNormal.sample(rng);
        (self.l11 * g1, self.l21 * g1 + self.l22 * g2)
    }
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

/// Compares the empirical variance of `Y = h X + Z`, `X ~ N(0, s)`, with
/// `expected`.
pub fn mc_variance_check(
    name: &str,
    h: [f64; 2],
    s: &Cov2,
    expected: f64,
    n: u64,
    seed: u64,
) -> Result<VerificationReport> {
    check_samples(n)?;
    let sampler = PairSampler::new(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Moments::default();
    for _ in 0..n {
        let (x1, x2) = sampler.sample(&mut rng);
        let y = h[0] * x1 + h[1] * x2 + normal(&mut rng);
        m.push(y * y);
    }
    Ok(VerificationReport::new(
        name,
        m.z(expected),
        MC_TOLERANCE,
        n,
        Some(seed),
        format!(
            "expected Var(Y) = {expected}, estimate {} (se {})",
            m.mean,
            m.std_error()
        ),
    ))
}

/// Empirical `Var(h X + Z)` against `1 + h S h^T`.
pub fn mc_rate_check(h: [f64; 2], s: &Cov2, n: u64, seed: u64) -> Result<VerificationReport> {
    mc_variance_check("mc_rate", h, s, 1.0 + s.quad(h), n, seed)
}

/// One `log2(1 + h S h^T)` argument of a closed-form rate expression.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateArgument {
    pub name: String,
    pub h: [f64; 2],
    pub covariance: Cov2,
    /// The argument as the closed form writes it.
    pub closed_form: f64,
}

/// Arguments of the receiver-2 rate expressions of the unifying bound, the
/// Z-channel bound and the superposition scheme, each paired with the input
/// covariance that realizes it.
pub fn rate_arguments(params: &ChannelParams, alpha: f64, beta: f64) -> Result<Vec<RateArgument>> {
    check_range("alpha", alpha, 0.0, 1.0)?;
    check_range("beta", beta, 0.0, 1.0)?;
    let ChannelParams { b, p1, p2, .. } = *params;
    let b2 = b * b;
    let h2 = [b, 1.0];
    let coherent = |rest: f64| 1.0 + b2 * p1 + p2 + 2.0 * (rest * b2 * p1 * p2).sqrt();
    let aligned = p2.sqrt() + ((1.0 - beta) * b2 * p1).sqrt();
    Ok(vec![
        RateArgument {
            name: "unifying_r2".into(),
            h: h2,
            covariance: Cov2::with_correlation(p1, p2, (1.0 - alpha).sqrt()),
            closed_form: coherent(1.0 - alpha),
        },
        RateArgument {
            name: "z_bound_sum".into(),
            h: h2,
            covariance: Cov2::with_correlation(p1, p2, (1.0 - alpha).sqrt()),
            closed_form: 1.0 + p2 + b2 * p1 + 2.0 * ((1.0 - alpha) * b2 * p1 * p2).sqrt(),
        },
        RateArgument {
            name: "superposition_r2".into(),
            h: h2,
            // only the copy of X2 inside X1 adds coherently; U1 is decoded first
            covariance: Cov2::with_correlation((1.0 - beta) * p1, p2, 1.0),
            closed_form: 1.0 + aligned * aligned,
        },
        RateArgument {
            name: "superposition_sum".into(),
            h: h2,
            covariance: Cov2::with_correlation(p1, p2, (1.0 - beta).sqrt()),
            closed_form: coherent(1.0 - beta),
        },
    ])
}

/// Checks one rate argument: the closed form must equal `1 + h S h^T`
/// (relative error below 1e-12) and the Monte Carlo variance must match it.
pub fn check_rate_argument(arg: &RateArgument, n: u64, seed: u64) -> Result<VerificationReport> {
    let exact = 1.0 + arg.covariance.quad(arg.h);
    let rel = (exact - arg.closed_form).abs() / exact;
    let mut report = mc_variance_check(&arg.name, arg.h, &arg.covariance, arg.closed_form, n, seed)?;
    if rel > 1e-12 {
        report.passed = false;
        report.worst_case = format!(
            "closed form {} differs from 1 + hSh^T = {exact}; {}",
            arg.closed_form, report.worst_case
        );
    }
    Ok(report)
}

/// Closed-form `Cov(X1, X2, Y1)` for inputs with correlation `rho`.
pub fn output_covariance(params: &ChannelParams, rho: f64) -> [[f64; 3]; 3] {
    let ChannelParams { a, p1, p2, .. } = *params;
    let c = rho * (p1 * p2).sqrt();
    let c1y = p1 + a * c;
    let c2y = c + a * p2;
    let vy = p1 + a * a * p2 + 2.0 * a * c + 1.0;
    [[p1, c, c1y], [c, p2, c2y], [c1y, c2y, vy]]
}

/// Sample covariances of `(X1, X2, Y1)` and `(X1, X2, Y1~)` where
/// `Y1~ = (Y2 - X2)/b + a X2 + sqrt(1 - 1/b^2) Z0` is built from receiver
/// 2's output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegradednessEstimate {
    pub cov_y1: [[f64; 3]; 3],
    pub cov_y1_tilde: [[f64; 3]; 3],
    /// Standard error of the `Var(Y1~)` estimate.
    pub var_y1_tilde_se: f64,
    pub report: VerificationReport,
}

pub fn degradedness_estimate(params: &ChannelParams, rho: f64, n: u64, seed: u64) -> Result<DegradednessEstimate> {
    if params.b < 1.0 {
        return Err(Error::Precondition(format!(
            "construction requires |b| >= 1, got b = {}",
            params.b
        )));
    }
    check_range("rho", rho, -1.0, 1.0)?;
    check_samples(n)?;
    let ChannelParams { a, b, p1, p2 } = *params;
    let sampler = PairSampler::new(&Cov2::with_correlation(p1, p2, rho))?;
    let extra = (1.0 - 1.0 / (b * b)).max(0.0).sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // the X-only entries are shared; only entries involving the output differ
    let mut xx = [Moments::default(), Moments::default(), Moments::default()];
    let mut direct = [Moments::default(), Moments::default(), Moments::default()];
    let mut tilde = [Moments::default(), Moments::default(), Moments::default()];
    let mut diff = [Moments::default(), Moments::default(), Moments::default()];
    for _ in 0..n {
        let (x1, x2) = sampler.sample(&mut rng);
        let (z1, z2, z0) = (normal(&mut rng), normal(&mut rng), normal(&mut rng));
        let y1 = x1 + a * x2 + z1;
        let y2 = b * x1 + x2 + z2;
        let yt = (y2 - x2) / b + a * x2 + extra * z0;
        let d = [x1 * y1, x2 * y1, y1 * y1];
        let t = [x1 * yt, x2 * yt, yt * yt];
        for k in 0..3 {
            direct[k].push(d[k]);
            tilde[k].push(t[k]);
            diff[k].push(d[k] - t[k]);
        }
        xx[0].push(x1 * x1);
        xx[1].push(x1 * x2);
        xx[2].push(x2 * x2);
    }
    let build = |out: &[Moments; 3]| {
        [
            [xx[0].mean, xx[1].mean, out[0].mean],
            [xx[1].mean, xx[2].mean, out[1].mean],
            [out[0].mean, out[1].mean, out[2].mean],
        ]
    };
    let labels = ["Cov(X1,Y)", "Cov(X2,Y)", "Var(Y)"];
    let (worst, z) =
        diff.iter().map(|m| m.z(0.0)).enumerate().fold(
            (0, 0.0f64),
            |acc, (k, z)| if z > acc.1 || z.is_nan() { (k, z) } else { acc },
        );
    let report = VerificationReport::new(
        format!("degradedness(a={a},b={b},rho={rho})"),
        z,
        MC_TOLERANCE,
        n,
        Some(seed),
        format!(
            "{}: direct {} vs constructed {}",
            labels[worst], direct[worst].mean, tilde[worst].mean
        ),
    );
    Ok(DegradednessEstimate {
        cov_y1: build(&direct),
        cov_y1_tilde: build(&tilde),
        var_y1_tilde_se: tilde[2].std_error(),
        report,
    })
}

/// Checks that receiver 2's output can be turned into a statistically
/// identical copy of receiver 1's output, entry by entry of the joint
/// covariance with the inputs.
pub fn degradedness_check(params: &ChannelParams, rho: f64, n: u64, seed: u64) -> Result<VerificationReport> {
    Ok(degradedness_estimate(params, rho, n, seed)?.report)
}

/// Largest violation of `A + B <= C` over `values`, with its location.
fn worst_violation(values: &[f64], mut terms: impl FnMut(f64) -> Result<(f64, f64, f64)>) -> Result<(f64, f64)> {
    let mut worst = (f64::NEG_INFINITY, 0.0);
    for &v in values {
        let (a, b, c) = terms(v)?;
        let excess = a + b - c;
        if excess > worst.0 {
            worst = (excess, v);
        }
    }
    Ok(worst)
}

fn require_b_at_least_one(b: f64) -> Result<()> {
    if b < 1.0 {
        return Err(Error::Precondition(format!("requires |b| >= 1, got b = {b}")));
    }
    Ok(())
}

/// Which threshold the Z-bound dominance check predicts with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DominanceRule {
    /// `b >= sqrt(P2 + 1)`, the condition as usually stated.
    Published,
    /// `b^2 - b sqrt(P1 P2) - (1 + P2) >= 0`, which keeps the cross term.
    Exact,
}

impl DominanceRule {
    pub fn predicts(&self, params: &ChannelParams) -> bool {
        match self {
            DominanceRule::Published => params.b >= Thresholds::of(params).z_bound_dominates,
            DominanceRule::Exact => z_bound_dominates_exact(params),
        }
    }
}

/// Outcome of a `for all` test at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointOutcome {
    pub params: ChannelParams,
    pub holds_everywhere: bool,
    pub predicted: bool,
    pub max_excess: f64,
    pub at: f64,
}

impl PointOutcome {
    pub fn mismatch(&self) -> bool {
        self.holds_everywhere != self.predicted
    }

    fn describe(&self) -> String {
        let ChannelParams { b, p1, p2, .. } = self.params;
        let direction = if self.predicted {
            "predicted to hold but violated"
        } else {
            "predicted to fail but holds"
        };
        format!(
            "p1={p1}, p2={p2}, b={b}: {direction} (max excess {:.3e} at {:.6})",
            self.max_excess, self.at
        )
    }
}

/// Does `(4a) + (4b) <= (4c)` of the Z-channel bound hold at every `alpha`?
pub fn z_bound_dominance_at(p1: f64, p2: f64, b: f64, alphas: &[f64], rule: DominanceRule) -> Result<PointOutcome> {
    require_b_at_least_one(b)?;
    let params = ChannelParams::new(0.0, b, p1, p2)?;
    let (max_excess, at) = worst_violation(alphas, |alpha| Ok(z_bound_terms(&params, alpha)))?;
    Ok(PointOutcome {
        params,
        holds_everywhere: max_excess <= GRID_SLACK,
        predicted: rule.predicts(&params),
        max_excess,
        at,
    })
}

/// Raw Z-channel bound constraints, evaluated here independently of the
/// bound module.
fn z_bound_terms(params: &ChannelParams, alpha: f64) -> (f64, f64, f64) {
    let ChannelParams { b, p1, p2, .. } = *params;
    let b2 = b * b;
    let r1 = (alpha * p1).ln_1p() / std::f64::consts::LN_2;
    let amp = p2.sqrt() + (b2 * p1 * (1.0 - alpha) / (1.0 + alpha * p1)).sqrt();
    let r2 = (amp * amp).ln_1p() / std::f64::consts::LN_2;
    let sum = (p2 + b2 * p1 + 2.0 * ((1.0 - alpha) * b2 * p1 * p2).sqrt()).ln_1p() / std::f64::consts::LN_2;
    (r1, r2, sum)
}

/// Does the superposition sum constraint stay inactive at every `beta`?
pub fn sum_rate_redundancy_at(p1: f64, p2: f64, b: f64, betas: &[f64]) -> Result<PointOutcome> {
    require_b_at_least_one(b)?;
    let params = ChannelParams::new(0.0, b, p1, p2)?;
    let (max_excess, at) = worst_violation(betas, |beta| superposition_constraints(&params, beta))?;
    Ok(PointOutcome {
        params,
        holds_everywhere: max_excess <= GRID_SLACK,
        predicted: b >= Thresholds::of(&params).superposition_capacity,
        max_excess,
        at,
    })
}

/// `b^2 >= 1 + P2 + 2 sqrt(b^2 P1 P2)`, the intermediate form of the
/// superposition threshold.
pub fn redundancy_intermediate_form(p1: f64, p2: f64, b: f64) -> bool {
    b * b >= 1.0 + p2 + 2.0 * (b * b * p1 * p2).sqrt()
}

/// Box of `(P1, P2, b)` values checked exhaustively.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamGrid {
    pub p1: Vec<f64>,
    pub p2: Vec<f64>,
    pub b: Vec<f64>,
}

impl ParamGrid {
    /// `n^3` points over `[0.1, 10]^2 x [1, 15]`.
    pub fn standard(n: usize) -> Result<Self> {
        Ok(Self {
            p1: linspace(0.1, 10.0, n)?,
            p2: linspace(0.1, 10.0, n)?,
            b: linspace(1.0, 15.0, n)?,
        })
    }

    pub fn len(&self) -> usize {
        self.p1.len() * self.p2.len() * self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn triples(&self) -> Vec<(f64, f64, f64)> {
        let mut out = Vec::with_capacity(self.len());
        for &p1 in &self.p1 {
            for &p2 in &self.p2 {
                for &b in &self.b {
                    out.push((p1, p2, b));
                }
            }
        }
        out
    }
}

/// Default `for all` grid: 1001 points on `[0, 1]` clustered towards 0.
pub fn default_unit_grid() -> Vec<f64> {
    clustered_unit(1001).expect("1001 >= 2")
}

fn mismatch_report(name: &str, outcomes: &[PointOutcome], extra_mismatches: &[String]) -> VerificationReport {
    let bad: Vec<&PointOutcome> = outcomes.iter().filter(|o| o.mismatch()).collect();
    let count = bad.len() + extra_mismatches.len();
    let mut worst = bad
        .iter()
        .take(3)
        .map(|o| o.describe())
        .chain(extra_mismatches.iter().take(3).cloned())
        .collect::<Vec<_>>()
        .join("; ");
    if worst.is_empty() {
        worst = "no mismatches".into();
    } else if count > 3 {
        worst.push_str(&format!("; {count} mismatches in total"));
    }
    VerificationReport::new(name, count as f64, 0.0, outcomes.len() as u64, None, worst)
}

/// Biconditional `[for all alpha: (4a) + (4b) <= (4c)] <=> rule(p)` at one
/// point.
pub fn verify_z_bound_dominance(
    p1: f64,
    p2: f64,
    b: f64,
    alphas: &[f64],
    rule: DominanceRule,
) -> Result<VerificationReport> {
    let o = z_bound_dominance_at(p1, p2, b, alphas, rule)?;
    Ok(mismatch_report(&dominance_name(rule), &[o], &[]))
}

fn dominance_name(rule: DominanceRule) -> String {
    match rule {
        DominanceRule::Published => "z_bound_dominance".into(),
        DominanceRule::Exact => "z_bound_dominance_exact".into(),
    }
}

pub fn verify_z_bound_dominance_grid(
    grid: &ParamGrid,
    alphas: &[f64],
    rule: DominanceRule,
) -> Result<VerificationReport> {
    let outcomes = grid
        .triples()
        .into_par_iter()
        .map(|(p1, p2, b)| z_bound_dominance_at(p1, p2, b, alphas, rule))
        .collect::<Result<Vec<_>>>()?;
    Ok(mismatch_report(&dominance_name(rule), &outcomes, &[]))
}

/// Biconditional `[for all beta: A + B <= C] <=> b >= threshold` at one
/// point, plus agreement of the intermediate form with the threshold.
pub fn verify_sum_rate_redundancy(p1: f64, p2: f64, b: f64, betas: &[f64]) -> Result<VerificationReport> {
    verify_sum_rate_redundancy_grid(
        &ParamGrid {
            p1: vec![p1],
            p2: vec![p2],
            b: vec![b],
        },
        betas,
    )
}

pub fn verify_sum_rate_redundancy_grid(grid: &ParamGrid, betas: &[f64]) -> Result<VerificationReport> {
    let outcomes = grid
        .triples()
        .into_par_iter()
        .map(|(p1, p2, b)| sum_rate_redundancy_at(p1, p2, b, betas))
        .collect::<Result<Vec<_>>>()?;
    let form_mismatches: Vec<String> = outcomes
        .iter()
        .filter(|o| {
            let ChannelParams { b, p1, p2, .. } = o.params;
            redundancy_intermediate_form(p1, p2, b) != o.predicted
        })
        .map(|o| {
            let ChannelParams { b, p1, p2, .. } = o.params;
            format!("p1={p1}, p2={p2}, b={b}: intermediate form disagrees with threshold")
        })
        .collect();
    Ok(mismatch_report("sum_rate_redundancy", &outcomes, &form_mismatches))
}

/// In the superposition-capacity regime (`a = 0`, `b` above the threshold)
/// checks that the superposition scheme reproduces the Z-channel bound:
/// matching `A` and `B` under `beta = beta(alpha)` (1e-12), an inactive sum
/// constraint (1e-12), and equal frontiers at every `alpha` (1e-9 bits).
///
/// Reports the largest error-to-tolerance ratio.
pub fn verify_superposition_tightness(p1: f64, p2: f64, b: f64, alphas: &[f64]) -> Result<VerificationReport> {
    let params = ChannelParams::new(0.0, b, p1, p2)?;
    if b < Thresholds::of(&params).superposition_capacity {
        return Err(Error::Precondition(format!(
            "not in the superposition-capacity regime: b = {b} < {}",
            Thresholds::of(&params).superposition_capacity
        )));
    }
    let rate = RateGrid::default();
    let mut ratio = 0.0f64;
    let mut worst = String::from("exact agreement");
    let mut note = |r: f64, what: String| {
        if r > ratio || r.is_nan() {
            ratio = r;
            worst = what;
        }
    };

    let mut inner = Vec::with_capacity(alphas.len());
    let mut outer = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let beta = beta_of_alpha(alpha, p1)?;
        let (sa, sb, sc) = superposition_constraints(&params, beta)?;
        let (za, zb, _) = z_bound_terms(&params, alpha);
        note(
            (sa - za).abs() / 1e-12,
            format!("A differs at alpha={alpha}: {sa} vs {za}"),
        );
        note(
            (sb - zb).abs() / 1e-12,
            format!("B differs at alpha={alpha}: {sb} vs {zb}"),
        );
        note(
            (sa + sb - sc).max(0.0) / GRID_SLACK,
            format!("sum constraint active at alpha={alpha}"),
        );
        inner.push(crate::inner::superposition_pentagon(&params, beta)?);
        outer.push(z_bc_dms_bound(&params, alpha)?);
    }
    let inner_f = concavify(&union_frontier(&inner, &rate)?);
    let outer_f = union_frontier(&outer, &rate)?;
    for &alpha in alphas {
        let r1 = crate::log2_1p(alpha * p1);
        let exact = z_bc_dms_boundary(&params, r1, true)?.unwrap_or(f64::NAN);
        for (label, f) in [("inner", &inner_f), ("outer", &outer_f)] {
            let v = frontier_value(f, r1);
            note(
                (v - exact).abs() / 1e-9,
                format!("{label} frontier {v} vs {exact} at R1={r1}"),
            );
        }
    }
    Ok(VerificationReport::new(
        "superposition_tightness",
        ratio,
        1.0,
        alphas.len() as u64,
        None,
        worst,
    ))
}

/// Value at `r1`, with the right endpoint snapped to absorb roundoff.
fn frontier_value(f: &Frontier, r1: f64) -> f64 {
    f.value_at(r1)
        .or_else(|| (r1 - f.max_r1() <= 1e-12).then(|| f.r2_at_max_r1()))
        .unwrap_or(f64::NAN)
}

/// Named groups of checks runnable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Rates,
    Degradedness,
    Dominance,
    DominanceExact,
    Redundancy,
    Superposition,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Rates,
        Suite::Degradedness,
        Suite::Dominance,
        Suite::DominanceExact,
        Suite::Redundancy,
        Suite::Superposition,
    ];
}

/// Master-seed split so that every check draws from its own stream.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Five parameter points `(a = 0, b, P1, P2, alpha, beta)` drawn from
/// `seed`.
pub fn random_rate_points(seed: u64, count: usize) -> Vec<(ChannelParams, f64, f64)> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let params = ChannelParams::new(
                0.0,
                rng.random_range(1.0..12.0),
                rng.random_range(0.1..10.0),
                rng.random_range(0.1..10.0),
            )
            .expect("ranges are valid");
            (params, rng.random_range(0.0..=1.0), rng.random_range(0.0..=1.0))
        })
        .collect()
}

pub fn run_suite(suite: Suite, samples: u64, seed: u64) -> Result<Vec<VerificationReport>> {
    if suite == Suite::All {
        let parts = Suite::ALL
            .par_iter()
            .map(|&s| run_suite(s, samples, seed))
            .collect::<Result<Vec<_>>>()?;
        return Ok(parts.into_iter().flatten().collect());
    }
    let unit = default_unit_grid();
    match suite {
        Suite::Rates => {
            let mut jobs = Vec::new();
            for (params, alpha, beta) in random_rate_points(seed, 5) {
                jobs.extend(rate_arguments(&params, alpha, beta)?);
            }
            jobs.par_iter()
                .enumerate()
                .map(|(i, arg)| check_rate_argument(arg, samples, derive_seed(seed, i as u64)))
                .collect()
        }
        Suite::Degradedness => {
            let mut jobs = Vec::new();
            for b in [1.0, 2.0, 10.0] {
                for a in [0.0, 0.5] {
                    for rho in [0.0, 0.7] {
                        jobs.push((ChannelParams::new(a, b, 1.0, 1.0)?, rho));
                    }
                }
            }
            jobs.par_iter()
                .enumerate()
                .map(|(i, (params, rho))| degradedness_check(params, *rho, samples, derive_seed(seed, 1000 + i as u64)))
                .collect()
        }
        Suite::Dominance => Ok(vec![verify_z_bound_dominance_grid(
            &ParamGrid::standard(20)?,
            &unit,
            DominanceRule::Published,
        )?]),
        Suite::DominanceExact => Ok(vec![verify_z_bound_dominance_grid(
            &ParamGrid::standard(20)?,
            &unit,
            DominanceRule::Exact,
        )?]),
        Suite::Redundancy => Ok(vec![verify_sum_rate_redundancy_grid(&ParamGrid::standard(20)?, &unit)?]),
        Suite::Superposition => {
            let alphas = linspace(0.0, 1.0, 1001)?;
            Ok(vec![
                verify_superposition_tightness(1.0, 1.0, 3.0, &alphas)?,
                verify_superposition_tightness(1.0, 1.0, 10.0, &alphas)?,
            ])
        }
        Suite::All => unreachable!("handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noise_only_variance() {
        let s = Cov2::with_correlation(3.0, 2.0, 0.4);
        let r = mc_rate_check([0.0, 0.0], &s, 20_000, 1).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn rejects_small_samples_and_non_psd() {
        let s = Cov2::with_correlation(1.0, 1.0, 0.0);
        assert!(mc_rate_check([1.0, 1.0], &s, 100, 1).is_err());
        let bad = Cov2::new(1.0, 1.0, 2.0);
        assert!(mc_rate_check([1.0, 1.0], &bad, 20_000, 1).is_err());
    }

    #[test]
    fn mc_detects_wrong_closed_form() {
        let s = Cov2::with_correlation(1.0, 1.0, 0.5);
        let r = mc_variance_check("wrong", [3.0, 1.0], &s, 15.0, 100_000, 3).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn mc_is_reproducible() {
        let s = Cov2::with_correlation(1.0, 2.0, 0.3);
        let a = mc_rate_check([2.0, 1.0], &s, 20_000, 42).unwrap();
        let b = mc_rate_check([2.0, 1.0], &s, 20_000, 42).unwrap();
        assert_eq!(a.to_json_line(), b.to_json_line());
    }

    #[test]
    fn rate_argument_examples() {
        let params = ChannelParams::new(0.0, 3.0, 1.0, 1.0).unwrap();
        let args = rate_arguments(&params, 0.0, 0.5).unwrap();
        assert!((args[1].closed_form - 17.0).abs() < 1e-12);
        assert!((args[3].closed_form - (11.0 + 2.0 * 4.5f64.sqrt())).abs() < 1e-12);
        assert!((args[3].closed_form - 15.2426).abs() < 1e-4);
        for arg in &args {
            let exact = 1.0 + arg.covariance.quad(arg.h);
            assert!((exact - arg.closed_form).abs() < 1e-12 * exact, "{}", arg.name);
        }
    }

    #[test]
    fn output_covariance_hand_case() {
        let params = ChannelParams::new(0.5, 2.0, 1.0, 1.0).unwrap();
        assert_eq!(output_covariance(&params, 0.0)[2][2], 2.25);
    }

    #[test]
    fn degradedness_refuses_weak() {
        let params = ChannelParams::new(0.0, 0.5, 1.0, 1.0).unwrap();
        let err = degradedness_check(&params, 0.0, 20_000, 1).unwrap_err();
        assert!(err.to_string().contains("|b| >= 1"));
    }

    #[test]
    fn degradedness_small_run() {
        let params = ChannelParams::new(0.5, 2.0, 1.0, 1.0).unwrap();
        let r = degradedness_check(&params, 0.7, 50_000, 9).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn published_dominance_boundary_example_fails() {
        // the published condition calls this point a boundary case, yet the
        // inequality is violated for small alpha
        let alphas = default_unit_grid();
        let o = z_bound_dominance_at(1.0, 3.0, 2.0, &alphas, DominanceRule::Published).unwrap();
        assert!(o.predicted && !o.holds_everywhere);
        assert!(o.max_excess > 0.1);
        let exact = z_bound_dominance_at(1.0, 3.0, 2.0, &alphas, DominanceRule::Exact).unwrap();
        assert!(!exact.mismatch());
    }

    #[test]
    fn dominance_examples() {
        let alphas = default_unit_grid();
        let weak = z_bound_dominance_at(1.0, 3.0, 1.5, &alphas, DominanceRule::Published).unwrap();
        assert!(!weak.holds_everywhere && !weak.mismatch());
        let deep = z_bound_dominance_at(5.0, 5.0, 10.0, &alphas, DominanceRule::Published).unwrap();
        assert!(deep.holds_everywhere && !deep.mismatch());
        assert!(z_bound_dominance_at(1.0, 1.0, 0.5, &alphas, DominanceRule::Exact).is_err());
    }

    #[test]
    fn redundancy_examples() {
        let betas = default_unit_grid();
        assert!(verify_sum_rate_redundancy(1.0, 1.0, 3.0, &betas).unwrap().passed);
        let edge = sum_rate_redundancy_at(1.0, 1.0, 3f64.sqrt() + 1.0, &betas).unwrap();
        assert!(edge.max_excess <= GRID_SLACK);
        let fig = sum_rate_redundancy_at(5.0, 5.0, 10.0, &betas).unwrap();
        assert!(!fig.holds_everywhere && !fig.predicted);
    }

    #[test]
    fn superposition_tightness_examples() {
        let alphas = linspace(0.0, 1.0, 201).unwrap();
        assert!(verify_superposition_tightness(1.0, 1.0, 3.0, &alphas).unwrap().passed);
        assert!(verify_superposition_tightness(1.0, 1.0, 2.5, &alphas).is_err());
    }

    #[test]
    fn derived_seeds_differ() {
        let seeds: std::collections::HashSet<u64> = (0..100).map(|i| derive_seed(7, i)).collect();
        assert_eq!(seeds.len(), 100);
    }
}
