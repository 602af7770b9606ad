//! Achievable regions and known capacity regions.
//!
//! The superposition scheme lets the cognitive transmitter send a scaled copy
//! of the primary codeword plus a private layer carrying a fraction `beta` of
//! its power:
//!
//! ```text
//! X1 = sqrt((1 - beta) P1 / P2) X2 + sqrt(beta P1) U1
//! ```
//!
//! Receiver 1 decodes `U1` treating everything else as noise, receiver 2
//! decodes both layers. For `a != 0` the same encoder is evaluated with the
//! `a X2` term added at receiver 1 ([`general_superposition_pentagon`]); this
//! is a simple stand-in for richer inner bounds, not a capacity result.

use serde::{Deserialize, Serialize};

use crate::channel::{classify, ChannelParams};
use crate::error::{check_unit, Error, Result};
use crate::geometry::{concavify, hull_frontier, union_frontier, Frontier, Pentagon, RateGrid};
use crate::grid::clustered_top;
use crate::log2_1p;
use crate::outer::{bc_dms_outer_bound, unifying_region, z_bc_dms_boundary, BoundGrids};

/// Private-layer fraction solving `beta / (1 + (1 - beta) P1) = alpha`,
/// i.e. `beta = alpha (1 + P1) / (1 + alpha P1)`. With it the first two
/// superposition constraints coincide with the Z-channel outer bound at
/// `alpha`.
pub fn beta_of_alpha(alpha: f64, p1: f64) -> Result<f64> {
    check_unit("alpha", alpha)?;
    Ok((alpha * (1.0 + p1) / (1.0 + alpha * p1)).min(1.0))
}

/// `beta` samples at [`beta_of_alpha`] of an `alpha` grid clustered towards 1.
pub fn beta_grid(p1: f64, points: usize) -> Result<Vec<f64>> {
    clustered_top(points)?
        .into_iter()
        .map(|a| beta_of_alpha(a, p1))
        .collect()
}

fn check_superposition(params: &ChannelParams, beta: f64) -> Result<()> {
    check_unit("beta", beta)?;
    if params.p2 == 0.0 && beta < 1.0 {
        return Err(Error::InvalidParams("degenerate superposition: set beta=1".into()));
    }
    Ok(())
}

/// Untightened `(A, B, C)` of the superposition scheme at `a = 0`.
pub fn superposition_constraints(params: &ChannelParams, beta: f64) -> Result<(f64, f64, f64)> {
    if params.a != 0.0 {
        return Err(Error::Precondition(format!(
            "superposition scheme requires a = 0, got a = {}; use the generalized scheme",
            params.a
        )));
    }
    check_superposition(params, beta)?;
    let rest = 1.0 - beta;
    let r1 = log2_1p(beta * params.p1 / (1.0 + rest * params.p1));
    let (r2, sum) = receiver2_terms(params, rest);
    Ok((r1, r2, sum))
}

fn receiver2_terms(params: &ChannelParams, rest: f64) -> (f64, f64) {
    let ChannelParams { b, p1, p2, .. } = *params;
    let b2 = b * b;
    let amp = p2.sqrt() + (rest * b2 * p1).sqrt();
    let r2 = log2_1p(amp * amp);
    let sum = log2_1p(p2 + b2 * p1 + 2.0 * (rest * b2 * p1 * p2).sqrt());
    (r2, sum)
}

pub fn superposition_pentagon(params: &ChannelParams, beta: f64) -> Result<Pentagon> {
    let (r1, r2, sum) = superposition_constraints(params, beta)?;
    Pentagon::new(r1, r2, sum)
}

/// Untightened `(A, B, C)` of the superposition encoder at any `a`.
pub fn general_superposition_constraints(params: &ChannelParams, beta: f64) -> Result<(f64, f64, f64)> {
    check_superposition(params, beta)?;
    let ChannelParams { a, p1, p2, .. } = *params;
    let rest = 1.0 - beta;
    // power of the X2-aligned component seen at receiver 1
    let aligned = rest * p1 + 2.0 * a * (rest * p1 * p2).sqrt() + a * a * p2;
    let r1 = log2_1p(beta * p1 / (1.0 + aligned));
    let (r2, sum) = receiver2_terms(params, rest);
    Ok((r1, r2, sum))
}

pub fn general_superposition_pentagon(params: &ChannelParams, beta: f64) -> Result<Pentagon> {
    let (r1, r2, sum) = general_superposition_constraints(params, beta)?;
    Pentagon::new(r1, r2, sum)
}

/// Time-sharing closure of the (generalized) superposition scheme over
/// `beta_points` values of `beta`.
pub fn superposition_region(params: &ChannelParams, beta_points: usize, rate: &RateGrid) -> Result<Frontier> {
    let pentagons = beta_grid(params.p1, beta_points)?
        .into_iter()
        .map(|beta| general_superposition_pentagon(params, beta))
        .collect::<Result<Vec<_>>>()?;
    Ok(concavify(&union_frontier(&pentagons, rate)?))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CapacityRegion {
    Exact { frontier: Frontier, basis: CapacityBasis },
    Open { inner: Frontier, outer: Frontier },
}

/// Which known result pins down the capacity region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CapacityBasis {
    /// `b = 0`: both users see clean point-to-point channels.
    NoInterference,
    /// Weak interference or the primary-decodes-cognitive regime: the
    /// unifying outer bound is achievable.
    UnifyingBound,
    /// `a = 0` above the superposition threshold: the Z-channel outer bound
    /// is achieved by superposition coding.
    ZChannelBound,
}

impl CapacityRegion {
    pub fn is_exact(&self) -> bool {
        matches!(self, CapacityRegion::Exact { .. })
    }

    /// The exact frontier, or the outer bound when capacity is open.
    pub fn frontier(&self) -> &Frontier {
        match self {
            CapacityRegion::Exact { frontier, .. } => frontier,
            CapacityRegion::Open { outer, .. } => outer,
        }
    }
}

/// Capacity region where it is known; otherwise the best inner and outer
/// bounds available here.
pub fn capacity_region(params: &ChannelParams, grids: &BoundGrids) -> Result<CapacityRegion> {
    let mut params = *params;
    if params.b == 0.0 {
        let frontier = Frontier::new(vec![
            [0.0, log2_1p(params.p2)],
            [log2_1p(params.p1), log2_1p(params.p2)],
        ])
        .or_else(|_| Frontier::new(vec![[0.0, log2_1p(params.p2)]]))?;
        return Ok(CapacityRegion::Exact {
            frontier,
            basis: CapacityBasis::NoInterference,
        });
    }
    if params.p2 == 0.0 {
        // a only scales a silent input
        params.a = 0.0;
    }
    let regime = classify(&params);
    let a_zero = params.a == 0.0;

    if params.b <= 1.0 || (a_zero && regime.pdc_capacity_known) {
        let raw = unifying_region(&params, grids.alpha, &grids.rate)?;
        return Ok(CapacityRegion::Exact {
            frontier: concavify(&raw),
            basis: CapacityBasis::UnifyingBound,
        });
    }
    if regime.superposition_capacity {
        return Ok(CapacityRegion::Exact {
            frontier: z_channel_frontier(&params, grids.rate.points)?,
            basis: CapacityBasis::ZChannelBound,
        });
    }
    Ok(CapacityRegion::Open {
        inner: superposition_region(&params, grids.beta, &grids.rate)?,
        outer: bc_dms_outer_bound(&params, grids)?,
    })
}

/// Closed-form Z-channel outer frontier sampled at `R1 = log2(1 + alpha P1)`
/// over `points` values of `alpha` clustered towards 1, then closed under
/// time sharing.
pub fn z_channel_frontier(params: &ChannelParams, points: usize) -> Result<Frontier> {
    let mut samples = Vec::with_capacity(points);
    for alpha in clustered_top(points)? {
        let r1 = log2_1p(alpha * params.p1);
        if let Some(r2) = z_bc_dms_boundary(params, r1, true)? {
            samples.push((r1, r2.max(0.0)));
        }
    }
    hull_frontier(samples)
}
