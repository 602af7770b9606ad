//! Outer bounds on the capacity region.
//!
//! * [`unifying_bound`]: the computable bound valid for every channel,
//!   parameterized by the fraction `alpha` of cognitive power that is
//!   independent of the primary input.
//! * [`bc_dms_pentagon`] / [`bc_dms_region`]: let both transmitters cooperate
//!   and receiver 2 decode both messages. The channel becomes a two-antenna
//!   broadcast channel with a degraded message set; with jointly Gaussian
//!   inputs `X = U + V`, `U ~ N(0, B1)`, `V ~ N(0, B2)` its region is
//!   `R1 <= I(U;Y1)`, `R2 <= I(X;Y2|U)`, `R1 + R2 <= I(X;Y2)`.
//! * [`z_bc_dms_bound`]: closed-form relaxation of the above for `a = 0`.
//! * [`bc_dms_outer_bound`]: the broadcast region intersected with the
//!   unifying bound, valid in strong interference (`b > 1`).
//! * [`bc_pr_bound`]: private-rates MIMO broadcast region (dirty paper coding,
//!   both encoding orders) intersected with the unifying bound.
//! * [`degraded_bc_pentagon`]: capacity of the degraded broadcast channel the
//!   model reduces to when `P2 = 0`.
//!
//! Outer-bound unions are returned raw (no time sharing), except the
//! broadcast components, whose exact regions are convex.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::ChannelParams;
use crate::error::{check_range, check_unit, Error, Result};
use crate::geometry::{
    hull_frontier, intersect_frontiers, pentagon_hull_points, union_frontier, Frontier, Pentagon, RateGrid,
};
use crate::grid::{clustered_top, linspace};
use crate::log2_1p;

/// Symmetric 2x2 matrix `[[xx, xy], [xy, yy]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cov2 {
    pub xx: f64,
    pub yy: f64,
    pub xy: f64,
}

impl Cov2 {
    pub fn new(xx: f64, yy: f64, xy: f64) -> Self {
        Self { xx, yy, xy }
    }

    /// Covariance of two inputs with powers `p1`, `p2` and correlation `rho`.
    pub fn with_correlation(p1: f64, p2: f64, rho: f64) -> Self {
        Self::new(p1, p2, rho * (p1 * p2).sqrt())
    }

    /// `h M h^T`
    pub fn quad(&self, h: [f64; 2]) -> f64 {
        h[0] * h[0] * self.xx + h[1] * h[1] * self.yy + 2.0 * h[0] * h[1] * self.xy
    }

    pub fn add(&self, other: &Cov2) -> Cov2 {
        Cov2::new(self.xx + other.xx, self.yy + other.yy, self.xy + other.xy)
    }

    pub fn is_psd(&self, tol: f64) -> bool {
        self.xx >= -tol && self.yy >= -tol && self.xx * self.yy - self.xy * self.xy >= -tol
    }
}

/// Receiver rows of the equivalent two-antenna broadcast channel.
pub fn channel_rows(params: &ChannelParams) -> ([f64; 2], [f64; 2]) {
    ([1.0, params.a], [params.b, 1.0])
}

/// Split of the input covariance `S = B1 + B2` between the common layer
/// (`B1`, carries the message decoded by both receivers) and the private
/// layer (`B2`). Diagonals always sum to `(P1, P2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovarianceSplit {
    pub alpha1: f64,
    pub alpha2: f64,
    pub rho1: f64,
    pub rho2: f64,
}

impl CovarianceSplit {
    pub fn new(alpha1: f64, alpha2: f64, rho1: f64, rho2: f64) -> Result<Self> {
        check_unit("alpha1", alpha1)?;
        check_unit("alpha2", alpha2)?;
        check_range("rho1", rho1, -1.0, 1.0)?;
        check_range("rho2", rho2, -1.0, 1.0)?;
        Ok(Self {
            alpha1,
            alpha2,
            rho1,
            rho2,
        })
    }

    /// Correlation coefficient of `S`.
    pub fn rho(&self) -> f64 {
        self.rho1 * (self.alpha1 * self.alpha2).sqrt() + self.rho2 * ((1.0 - self.alpha1) * (1.0 - self.alpha2)).sqrt()
    }

    pub fn common(&self, p1: f64, p2: f64) -> Cov2 {
        Cov2::with_correlation(self.alpha1 * p1, self.alpha2 * p2, self.rho1)
    }

    pub fn private(&self, p1: f64, p2: f64) -> Cov2 {
        Cov2::with_correlation((1.0 - self.alpha1) * p1, (1.0 - self.alpha2) * p2, self.rho2)
    }
}

/// Change of variable `alpha = alpha1 / (1 + (1 - alpha1) P1)` linking the
/// common-layer power fraction to the closed-form parameterization.
pub fn alpha_of_alpha1(alpha1: f64, p1: f64) -> f64 {
    alpha1 / (1.0 + (1.0 - alpha1) * p1)
}

/// Inverse of [`alpha_of_alpha1`].
pub fn alpha1_of_alpha(alpha: f64, p1: f64) -> f64 {
    alpha * (1.0 + p1) / (1.0 + alpha * p1)
}

/// Resolution of the covariance-split search, one count per axis.
///
/// `alpha1` samples are placed at [`alpha1_of_alpha`] of an `alpha` grid
/// clustered towards 1 (see [`clustered_top`]); `alpha2` is
/// uniform on `[0, 1]` and both correlations uniform on `[-1, 1]`. For
/// nonnegative gains the optimum has nonnegative correlations; the negative
/// half is kept since it is cheap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitGrid {
    pub alpha1: usize,
    pub alpha2: usize,
    pub rho1: usize,
    pub rho2: usize,
}

impl SplitGrid {
    pub fn uniform(n: usize) -> Self {
        Self {
            alpha1: n,
            alpha2: n,
            rho1: n,
            rho2: n,
        }
    }

    pub fn len(&self) -> usize {
        self.alpha1 * self.alpha2 * self.rho1 * self.rho2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every split of the grid, `alpha1` slowest.
    pub fn splits(&self, p1: f64) -> Result<Vec<CovarianceSplit>> {
        let axes = self.axes(p1)?;
        Ok(axes.alpha1.iter().flat_map(|&a1| axes.slice(a1)).collect())
    }

    fn axes(&self, p1: f64) -> Result<SplitAxes> {
        Ok(SplitAxes {
            alpha1: clustered_top(self.alpha1)?
                .into_iter()
                .map(|a| alpha1_of_alpha(a, p1).min(1.0))
                .collect(),
            alpha2: linspace(0.0, 1.0, self.alpha2)?,
            rho1: linspace(-1.0, 1.0, self.rho1)?,
            rho2: linspace(-1.0, 1.0, self.rho2)?,
        })
    }
}

impl Default for SplitGrid {
    fn default() -> Self {
        Self::uniform(21)
    }
}

struct SplitAxes {
    alpha1: Vec<f64>,
    alpha2: Vec<f64>,
    rho1: Vec<f64>,
    rho2: Vec<f64>,
}

impl SplitAxes {
    /// All splits sharing one `alpha1` value.
    fn slice(&self, alpha1: f64) -> impl Iterator<Item = CovarianceSplit> + '_ {
        self.alpha2.iter().flat_map(move |&alpha2| {
            self.rho1.iter().flat_map(move |&rho1| {
                self.rho2.iter().map(move |&rho2| CovarianceSplit {
                    alpha1,
                    alpha2,
                    rho1,
                    rho2,
                })
            })
        })
    }
}

/// Grid resolutions shared by every region computation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundGrids {
    pub alpha: usize,
    pub beta: usize,
    pub split: SplitGrid,
    pub rate: RateGrid,
}

impl Default for BoundGrids {
    fn default() -> Self {
        Self {
            alpha: 1001,
            beta: 1001,
            split: SplitGrid::default(),
            rate: RateGrid::default(),
        }
    }
}

/// The unifying outer bound at power split `alpha`:
///
/// ```text
/// R1      <= log2(1 + alpha P1)
/// R2      <= log2(1 + b^2 P1 + P2 + 2 sqrt((1-alpha) b^2 P1 P2))
/// R1 + R2 <= log2(1 + b^2 P1 + P2 + 2 sqrt((1-alpha) b^2 P1 P2))
///            + [log2(1 + alpha P1) - log2(1 + b^2 alpha P1)]^+
/// ```
///
/// For `P2 = 0`, `b > 1` the union over `alpha` is
/// `{R1 <= log2(1 + P1), R1 + R2 <= log2(1 + b^2 P1)}`.
pub fn unifying_bound(params: &ChannelParams, alpha: f64) -> Result<Pentagon> {
    check_unit("alpha", alpha)?;
    let ChannelParams { b, p1, p2, .. } = *params;
    let b2 = b * b;
    let r1 = log2_1p(alpha * p1);
    let coherent = 2.0 * ((1.0 - alpha) * b2 * p1 * p2).sqrt();
    let r2 = log2_1p(b2 * p1 + p2 + coherent);
    let excess = (r1 - log2_1p(b2 * alpha * p1)).max(0.0);
    Pentagon::new(r1, r2, r2 + excess)
}

pub fn unifying_region(params: &ChannelParams, alpha_points: usize, rate: &RateGrid) -> Result<Frontier> {
    let pentagons = linspace(0.0, 1.0, alpha_points)?
        .into_iter()
        .map(|a| unifying_bound(params, a))
        .collect::<Result<Vec<_>>>()?;
    union_frontier(&pentagons, rate)
}

/// Superposition region of the degraded broadcast channel with input power
/// `p1` and gains 1 (weak receiver) and `b` (strong receiver).
pub fn degraded_bc_pentagon(p1: f64, b: f64, alpha: f64) -> Result<Pentagon> {
    check_unit("alpha", alpha)?;
    let rest = 1.0 - alpha;
    Pentagon::rectangle(log2_1p(alpha * p1 / (rest * p1 + 1.0)), log2_1p(b * b * rest * p1))
}

pub fn degraded_bc_region(p1: f64, b: f64, alphas: &[f64], rate: &RateGrid) -> Result<Frontier> {
    let pentagons = alphas
        .iter()
        .map(|&a| degraded_bc_pentagon(p1, b, a))
        .collect::<Result<Vec<_>>>()?;
    union_frontier(&pentagons, rate)
}

fn require_z_strong(params: &ChannelParams) -> Result<()> {
    if params.a != 0.0 || params.b < 1.0 {
        return Err(Error::Precondition(format!(
            "Z-channel BC-DMS bound requires a = 0 and |b| >= 1 (Z strong interference), got a = {}, b = {}",
            params.a, params.b
        )));
    }
    Ok(())
}

/// Closed-form BC-DMS outer bound for the Z-channel (`a = 0`, `b >= 1`):
///
/// ```text
/// R1      <= log2(1 + alpha P1)
/// R2      <= log2(1 + (sqrt(P2) + sqrt(b^2 P1 (1-alpha) / (1 + alpha P1)))^2)
/// R1 + R2 <= log2(1 + P2 + b^2 P1 + 2 sqrt((1-alpha) b^2 P1 P2))
/// ```
pub fn z_bc_dms_bound(params: &ChannelParams, alpha: f64) -> Result<Pentagon> {
    require_z_strong(params)?;
    check_unit("alpha", alpha)?;
    let (r1, r2, sum) = z_bc_dms_terms(params, alpha);
    Pentagon::new(r1, r2, sum)
}

fn z_bc_dms_terms(params: &ChannelParams, alpha: f64) -> (f64, f64, f64) {
    let ChannelParams { b, p1, p2, .. } = *params;
    let b2 = b * b;
    let rest = 1.0 - alpha;
    let r1 = log2_1p(alpha * p1);
    let amp = p2.sqrt() + (b2 * p1 * rest / (1.0 + alpha * p1)).sqrt();
    let r2 = log2_1p(amp * amp);
    let sum = log2_1p(p2 + b2 * p1 + 2.0 * (rest * b2 * p1 * p2).sqrt());
    (r1, r2, sum)
}

pub fn z_bc_dms_region(params: &ChannelParams, alpha_points: usize, rate: &RateGrid) -> Result<Frontier> {
    let pentagons = linspace(0.0, 1.0, alpha_points)?
        .into_iter()
        .map(|a| z_bc_dms_bound(params, a))
        .collect::<Result<Vec<_>>>()?;
    union_frontier(&pentagons, rate)
}

/// Exact boundary of the continuous union over `alpha` of
/// [`z_bc_dms_bound`] at rate `r1` (`None` past `log2(1 + P1)`).
///
/// Every constraint but the first decreases in `alpha`, so the best
/// pentagon at `r1` is the one with `log2(1 + alpha P1) = r1`. With
/// `with_sum = false` the sum constraint is dropped, giving the plain
/// BC-DMS relaxation.
pub fn z_bc_dms_boundary(params: &ChannelParams, r1: f64, with_sum: bool) -> Result<Option<f64>> {
    require_z_strong(params)?;
    let r1_cap = log2_1p(params.p1);
    if r1 < 0.0 || r1 > r1_cap {
        return Ok(None);
    }
    let alpha = if params.p1 == 0.0 {
        0.0
    } else {
        (r1.exp2() - 1.0) / params.p1
    }
    .clamp(0.0, 1.0);
    let (_, r2, sum) = z_bc_dms_terms(params, alpha);
    Ok(Some(if with_sum { r2.min(sum - r1) } else { r2 }))
}

/// BC-DMS pentagon for one covariance split.
pub fn bc_dms_pentagon(params: &ChannelParams, split: &CovarianceSplit) -> Result<Pentagon> {
    let b1 = split.common(params.p1, params.p2);
    let b2 = split.private(params.p1, params.p2);
    if !b1.is_psd(1e-12) || !b2.is_psd(1e-12) {
        return Err(Error::NotPsd(format!("{split:?}")));
    }
    Ok(bc_dms_pentagon_unchecked(params, &b1, &b2))
}

/// Untightened constraint triple `(I(U;Y1), I(X;Y2|U), I(X;Y2))` of one split.
pub fn bc_dms_constraints(params: &ChannelParams, split: &CovarianceSplit) -> (f64, f64, f64) {
    bc_dms_terms(
        params,
        &split.common(params.p1, params.p2),
        &split.private(params.p1, params.p2),
    )
}

fn bc_dms_terms(params: &ChannelParams, b1: &Cov2, b2: &Cov2) -> (f64, f64, f64) {
    let (h1, h2) = channel_rows(params);
    let s = b1.add(b2);
    let common = log2_1p(b1.quad(h1).max(0.0) / (1.0 + b2.quad(h1).max(0.0)));
    let private = log2_1p(b2.quad(h2).max(0.0));
    let total = log2_1p(s.quad(h2).max(0.0));
    (common, private, total)
}

fn bc_dms_pentagon_unchecked(params: &ChannelParams, b1: &Cov2, b2: &Cov2) -> Pentagon {
    let (common, private, total) = bc_dms_terms(params, b1, b2);
    Pentagon::new(common, private, total).expect("rates are finite and nonnegative")
}

fn require_b_at_least_one(params: &ChannelParams, what: &str) -> Result<()> {
    if params.b < 1.0 {
        return Err(Error::Precondition(format!(
            "{what} requires |b| >= 1, got b = {}",
            params.b
        )));
    }
    Ok(())
}

fn map_split_slices<T, F>(params: &ChannelParams, grid: &SplitGrid, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut dyn Iterator<Item = CovarianceSplit>) -> T + Sync,
{
    if grid.is_empty() {
        return Err(Error::InvalidGrid("empty covariance-split grid".into()));
    }
    let axes = grid.axes(params.p1)?;
    Ok(axes
        .alpha1
        .par_iter()
        .map(|&alpha1| f(&mut axes.slice(alpha1)))
        .collect())
}

/// Raw union of [`bc_dms_pentagon`] over a covariance-split grid.
///
/// Materializes every pentagon; for large grids prefer [`bc_dms_hull`].
pub fn bc_dms_region(params: &ChannelParams, grid: &SplitGrid, rate: &RateGrid) -> Result<Frontier> {
    require_b_at_least_one(params, "BC-DMS region")?;
    let slices = map_split_slices(params, grid, |splits| {
        splits
            .map(|s| {
                bc_dms_pentagon_unchecked(
                    params,
                    &s.common(params.p1, params.p2),
                    &s.private(params.p1, params.p2),
                )
            })
            .collect::<Vec<_>>()
    })?;
    let pentagons: Vec<Pentagon> = slices.into_iter().flatten().collect();
    union_frontier(&pentagons, rate)
}

/// Convex closure of the BC-DMS union over a covariance-split grid,
/// computed slice by slice without materializing all pentagons.
pub fn bc_dms_hull(params: &ChannelParams, grid: &SplitGrid) -> Result<Frontier> {
    require_b_at_least_one(params, "BC-DMS region")?;
    let slices = map_split_slices(params, grid, |splits| {
        pentagon_hull_points(splits.map(|s| {
            bc_dms_pentagon_unchecked(
                params,
                &s.common(params.p1, params.p2),
                &s.private(params.p1, params.p2),
            )
        }))
    })?;
    hull_frontier(slices.into_iter().flatten().collect())
}

/// BC-DMS region intersected with the unifying bound. Requires strong
/// interference (`b > 1`).
pub fn bc_dms_outer_bound(params: &ChannelParams, grids: &BoundGrids) -> Result<Frontier> {
    if params.b <= 1.0 {
        return Err(Error::Precondition(format!(
            "BC-DMS outer bound requires |b| > 1 (strong interference), got b = {}",
            params.b
        )));
    }
    let bc = bc_dms_hull(params, &grids.split)?;
    let si = unifying_region(params, grids.alpha, &grids.rate)?;
    intersect_frontiers(&bc, &si)
}

/// Which user's codeword is dirty-paper encoded last (and so sees no
/// interference from the other).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EncodingOrder {
    User1Last,
    User2Last,
}

/// Private-rate pair achieved by dirty paper coding with user 1 on `B1` and
/// user 2 on `B2`.
pub fn dpc_rates(params: &ChannelParams, split: &CovarianceSplit, order: EncodingOrder) -> (f64, f64) {
    let (h1, h2) = channel_rows(params);
    let b1 = split.common(params.p1, params.p2);
    let b2 = split.private(params.p1, params.p2);
    let (q11, q12) = (b1.quad(h1).max(0.0), b2.quad(h1).max(0.0));
    let (q21, q22) = (b1.quad(h2).max(0.0), b2.quad(h2).max(0.0));
    match order {
        EncodingOrder::User2Last => (log2_1p(q11 / (1.0 + q12)), log2_1p(q22)),
        EncodingOrder::User1Last => (log2_1p(q11), log2_1p(q22 / (1.0 + q21))),
    }
}

/// Private-rates broadcast region (both encoding orders, time sharing)
/// intersected with the unifying bound. Valid for every `b`.
pub fn bc_pr_bound(params: &ChannelParams, grids: &BoundGrids) -> Result<Frontier> {
    let slices = map_split_slices(params, &grids.split, |splits| {
        let rects: Vec<Pentagon> = splits
            .flat_map(|s| {
                [EncodingOrder::User2Last, EncodingOrder::User1Last].map(|o| {
                    let (r1, r2) = dpc_rates(params, &s, o);
                    Pentagon::rectangle(r1, r2).expect("finite rates")
                })
            })
            .collect();
        pentagon_hull_points(rects)
    })?;
    let pr = hull_frontier(slices.into_iter().flatten().collect())?;
    let si = unifying_region(params, grids.alpha, &grids.rate)?;
    intersect_frontiers(&pr, &si)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, p1: f64, p2: f64) -> ChannelParams {
        ChannelParams::new(a, b, p1, p2).unwrap()
    }

    const EPS: f64 = 1e-12;

    #[test]
    fn unifying_degraded_reduction() {
        let params = p(0.0, 10.0, 5.0, 0.0);
        let f = unifying_region(&params, 1001, &RateGrid::default()).unwrap();
        assert_eq!(f.len(), 2);
        assert!((f.max_r2() - 501f64.log2()).abs() < 1e-9);
        assert!((f.max_r1() - 6f64.log2()).abs() < 1e-9);
        assert!((f.r2_at_max_r1() - (501f64.log2() - 6f64.log2())).abs() < 1e-9);
        assert!((f.max_r2() - 8.9687).abs() < 1e-4);
        assert!((f.max_r1() - 2.5850).abs() < 1e-4);
    }

    #[test]
    fn unifying_alpha_zero_and_one() {
        let params = p(0.0, 3.0, 1.0, 1.0);
        assert_eq!(unifying_bound(&params, 0.0).unwrap().r1_max(), 0.0);
        let at_one = unifying_bound(&params, 1.0).unwrap();
        assert!((at_one.r1_max() - 1.0).abs() < EPS);
        // no coherent gain left at alpha = 1: log2(1 + 9 + 1)
        assert!((at_one.sum_max() - 11f64.log2()).abs() < EPS);
        assert!(unifying_bound(&params, 1.5).is_err());
        assert!(unifying_bound(&params, -0.1).is_err());
    }

    #[test]
    fn unifying_weak_interference_excess() {
        let params = p(0.3, 0.5, 2.0, 1.0);
        let pent = unifying_bound(&params, 0.4).unwrap();
        let expect_excess = log2_1p(0.8) - log2_1p(0.25 * 0.8);
        assert!((pent.sum_max() - pent.r2_max() - expect_excess).abs() < EPS);
    }

    #[test]
    fn degraded_bc_endpoints() {
        let full = degraded_bc_pentagon(5.0, 10.0, 1.0).unwrap();
        assert!((full.r1_max() - 6f64.log2()).abs() < EPS);
        assert_eq!(full.r2_max(), 0.0);
        let none = degraded_bc_pentagon(5.0, 10.0, 0.0).unwrap();
        assert_eq!(none.r1_max(), 0.0);
        assert!((none.r2_max() - 501f64.log2()).abs() < EPS);
        let half = degraded_bc_pentagon(5.0, 10.0, 0.5).unwrap();
        assert!((half.r1_max() - (1.0 + 2.5 / 3.5f64).log2()).abs() < EPS);
        assert!((half.r1_max() - 0.7776).abs() < 1e-4);
        assert!((half.r2_max() - 251f64.log2()).abs() < EPS);
        assert!((half.r2_max() - 7.9715).abs() < 1e-4);
    }

    #[test]
    fn z_bound_values() {
        let params = p(0.0, 3.0, 1.0, 1.0);
        let (r1, r2, sum) = z_bc_dms_terms(&params, 1.0);
        assert!((r1 - 1.0).abs() < EPS && (r2 - 1.0).abs() < EPS);
        assert!((sum - 11f64.log2()).abs() < EPS);
        assert_eq!(z_bc_dms_bound(&params, 1.0).unwrap().sum_max(), 2.0);
        let (_, r2, sum) = z_bc_dms_terms(&params, 0.0);
        assert!((r2 - 17f64.log2()).abs() < EPS);
        assert!((sum - 17f64.log2()).abs() < EPS);
    }

    #[test]
    fn z_bound_preconditions() {
        assert!(z_bc_dms_bound(&p(0.1, 3.0, 1.0, 1.0), 0.5).is_err());
        assert!(z_bc_dms_bound(&p(0.0, 0.9, 1.0, 1.0), 0.5).is_err());
        assert!(z_bc_dms_bound(&p(0.0, 1.0, 1.0, 1.0), 0.5).is_ok());
    }

    #[test]
    fn z_bound_sum_equals_unifying_sum_in_strong_interference() {
        for &b in &[1.0, 2.0, 7.5] {
            let params = p(0.0, b, 2.0, 3.0);
            for i in 0..=100 {
                let alpha = i as f64 / 100.0;
                let z = z_bc_dms_bound(&params, alpha).unwrap();
                let u = unifying_bound(&params, alpha).unwrap();
                assert!(z.sum_max() <= u.sum_max() + EPS);
            }
        }
    }

    #[test]
    fn z_boundary_matches_union() {
        let params = p(0.0, 2.0, 1.5, 2.0);
        let f = z_bc_dms_region(&params, 1001, &RateGrid::default()).unwrap();
        for pt in f.points() {
            let exact = z_bc_dms_boundary(&params, pt[0], true).unwrap().unwrap();
            // a sampled union never exceeds the continuous one
            assert!(pt[1] <= exact + 1e-9, "{pt:?} vs {exact}");
        }
        assert_eq!(z_bc_dms_boundary(&params, 5.0, true).unwrap(), None);
    }

    #[test]
    fn change_of_variable_round_trip() {
        for i in 0..=50 {
            let a1 = i as f64 / 50.0;
            let alpha = alpha_of_alpha1(a1, 3.0);
            assert!((alpha1_of_alpha(alpha, 3.0) - a1).abs() < EPS);
            // (1 - alpha)/(1 + alpha P1) = 1 - alpha1
            assert!(((1.0 - alpha) / (1.0 + 3.0 * alpha) - (1.0 - a1)).abs() < EPS);
        }
    }

    #[test]
    fn split_validation_and_rho() {
        assert!(CovarianceSplit::new(1.1, 0.0, 0.0, 0.0).is_err());
        assert!(CovarianceSplit::new(0.5, 0.5, 1.5, 0.0).is_err());
        let s = CovarianceSplit::new(0.25, 0.64, 1.0, -1.0).unwrap();
        assert!((s.rho() - (0.4 - (0.75f64 * 0.36).sqrt())).abs() < EPS);
        let (b1, b2) = (s.common(2.0, 3.0), s.private(2.0, 3.0));
        let sum = b1.add(&b2);
        assert!((sum.xx - 2.0).abs() < EPS && (sum.yy - 3.0).abs() < EPS);
        assert!((sum.xy - s.rho() * 6f64.sqrt()).abs() < EPS);
        assert!(b1.is_psd(0.0) && b2.is_psd(1e-15));
    }

    #[test]
    fn bc_dms_reproduces_dpc_rates_at_a_zero() {
        let params = p(0.0, 3.0, 2.0, 1.5);
        for &(a1, r2) in &[(0.3, 0.0), (0.7, 0.5), (0.0, 1.0), (1.0, -0.4)] {
            let s = CovarianceSplit::new(a1, 0.0, 0.0, r2).unwrap();
            let pent = bc_dms_pentagon(&params, &s).unwrap();
            let expect_a = log2_1p(a1 * 2.0 / (1.0 + (1.0 - a1) * 2.0));
            let expect_b = log2_1p(9.0 * (1.0 - a1) * 2.0 + 1.5 + 2.0 * r2 * ((1.0 - a1) * 9.0 * 3.0).sqrt());
            assert!((pent.r1_max() - expect_a).abs() < EPS);
            assert!((pent.r2_max() - expect_b.min(pent.sum_max())).abs() < EPS);
        }
    }

    #[test]
    fn bc_dms_no_private_layer() {
        let params = p(0.2, 3.0, 2.0, 1.5);
        let s = CovarianceSplit::new(1.0, 1.0, 0.5, 0.0).unwrap();
        let pent = bc_dms_pentagon(&params, &s).unwrap();
        assert_eq!(pent.r2_max(), 0.0);
        let cov = Cov2::with_correlation(2.0, 1.5, 0.5);
        assert!((pent.r1_max() - log2_1p(cov.quad([1.0, 0.2]))).abs() < EPS);
    }

    #[test]
    fn bc_dms_private_never_exceeds_total() {
        let params = p(0.4, 2.0, 3.0, 2.0);
        let axes = SplitGrid::uniform(7).axes(3.0).unwrap();
        for &a1 in &axes.alpha1 {
            for s in axes.slice(a1) {
                let (h1, h2) = channel_rows(&params);
                let pent = bc_dms_pentagon_unchecked(&params, &s.common(3.0, 2.0), &s.private(3.0, 2.0));
                let _ = h1;
                let total = log2_1p(s.common(3.0, 2.0).add(&s.private(3.0, 2.0)).quad(h2));
                assert!(log2_1p(s.private(3.0, 2.0).quad(h2).max(0.0)) <= total + EPS);
                assert!(pent.sum_max() <= total + EPS);
            }
        }
    }

    #[test]
    fn bc_dms_region_degraded_when_primary_silent() {
        let params = p(0.0, 10.0, 5.0, 0.0);
        let grid = SplitGrid::uniform(11);
        let bc = bc_dms_region(&params, &grid, &RateGrid::default()).unwrap();
        let alphas: Vec<f64> = grid.axes(5.0).unwrap().alpha1;
        let bergmans = degraded_bc_region(5.0, 10.0, &alphas, &RateGrid::default()).unwrap();
        assert_eq!(bc.len(), bergmans.len());
        for (x, y) in bc.points().iter().zip(bergmans.points()) {
            assert!((x[0] - y[0]).abs() < EPS && (x[1] - y[1]).abs() < EPS, "{x:?} {y:?}");
        }
    }

    #[test]
    fn bc_dms_region_preconditions() {
        let weak = p(0.0, 0.5, 1.0, 1.0);
        assert!(bc_dms_region(&weak, &SplitGrid::uniform(3), &RateGrid::default()).is_err());
        let strong = p(0.0, 2.0, 1.0, 1.0);
        assert!(bc_dms_region(&strong, &SplitGrid::uniform(1), &RateGrid::default()).is_err());
        let grids = BoundGrids {
            split: SplitGrid::uniform(5),
            ..BoundGrids::default()
        };
        assert!(bc_dms_outer_bound(&p(0.0, 1.0, 1.0, 1.0), &grids).is_err());
        assert!(bc_pr_bound(&p(0.0, 0.5, 1.0, 1.0), &grids).is_ok());
    }

    #[test]
    fn dpc_no_private_layer_gives_single_user_rate() {
        let params = p(0.3, 2.0, 2.0, 1.0);
        let s = CovarianceSplit::new(1.0, 1.0, 1.0, 0.0).unwrap();
        let (r1, r2) = dpc_rates(&params, &s, EncodingOrder::User2Last);
        assert_eq!(r2, 0.0);
        let beam = (2f64.sqrt() + 0.3) * (2f64.sqrt() + 0.3);
        assert!((r1 - log2_1p(beam)).abs() < EPS);
        assert_eq!(dpc_rates(&params, &s, EncodingOrder::User1Last), (r1, 0.0));
    }

    #[test]
    fn outer_bound_below_unifying() {
        let params = p(0.0, 3.0, 1.0, 1.0);
        let grids = BoundGrids {
            split: SplitGrid::uniform(9),
            ..BoundGrids::default()
        };
        let th = bc_dms_outer_bound(&params, &grids).unwrap();
        let si = unifying_region(&params, grids.alpha, &grids.rate).unwrap();
        assert!(crate::geometry::contains(&si, &th, 1e-12).passed);
        let pr = bc_pr_bound(&params, &grids).unwrap();
        assert!(crate::geometry::contains(&pr, &th, 1e-12).passed);
    }
}
