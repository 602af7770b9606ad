//! Channel instance and regime classification.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real-valued cognitive interference channel in canonical form.
///
/// Noise variances are fixed at 1. `b` is stored as a magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub a: f64,
    pub b: f64,
    pub p1: f64,
    pub p2: f64,
}

impl ChannelParams {
    pub fn new(a: f64, b: f64, p1: f64, p2: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::InvalidParams(format!("a must be finite, got {a}")));
        }
        for (name, v) in [("b", b), ("p1", p1), ("p2", p2)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParams(format!("{name} must be finite and >= 0, got {v}")));
            }
        }
        Ok(Self { a, b, p1, p2 })
    }

    /// Builds parameters from a possibly negative cross gain `b`; only `|b|`
    /// enters any region.
    pub fn with_signed_b(a: f64, b: f64, p1: f64, p2: f64) -> Result<Self> {
        Self::new(a, b.abs(), p1, p2)
    }

    pub fn is_z_channel(&self) -> bool {
        self.a == 0.0 || self.b == 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InterferenceClass {
    /// `b <= 1`
    Weak,
    /// `b > 1`
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZChannel {
    None,
    AZero,
    BZero,
}

/// Thresholds on `b` that the regime flags compare against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// `sqrt(1 + P2/(P1+1))`: upper end of the primary-decodes-cognitive regime.
    pub primary_decodes_cognitive: f64,
    /// `sqrt(P2 + 1)`: published condition for the BC-DMS R2 bound to be
    /// the binding one.
    #[serde(rename = "cor2_dominates")]
    pub z_bound_dominates: f64,
    /// Smallest `b` with `b^2 - b sqrt(P1 P2) - (1 + P2) >= 0`, the exact
    /// condition for the same statement to hold at every power split.
    #[serde(rename = "cor2_dominates_exact")]
    pub z_bound_dominates_exact: f64,
    /// `sqrt(1 + P2 (1 + P1)) + sqrt(P1 P2)`: superposition coding meets the
    /// Z-channel outer bound from here on.
    #[serde(rename = "th3_capacity")]
    pub superposition_capacity: f64,
}

impl Thresholds {
    pub fn of(params: &ChannelParams) -> Self {
        let ChannelParams { p1, p2, .. } = *params;
        let cross = (p1 * p2).sqrt();
        Self {
            primary_decodes_cognitive: (1.0 + p2 / (p1 + 1.0)).sqrt(),
            z_bound_dominates: (p2 + 1.0).sqrt(),
            z_bound_dominates_exact: 0.5 * (cross + (p1 * p2 + 4.0 * (1.0 + p2)).sqrt()),
            superposition_capacity: (1.0 + p2 * (1.0 + p1)).sqrt() + cross,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub interference_class: InterferenceClass,
    pub z_channel: ZChannel,
    pub pdc_capacity_known: bool,
    #[serde(rename = "cor2_dominates")]
    pub z_bound_dominates: bool,
    #[serde(rename = "cor2_dominates_exact")]
    pub z_bound_dominates_exact: bool,
    #[serde(rename = "th3_capacity")]
    pub superposition_capacity: bool,
    pub open_regime: bool,
    pub thresholds: Thresholds,
}

/// Classifies the interference regime by direct threshold comparison.
///
/// All comparisons are closed (`>=` / `<=`), matching every bound that
/// branches on the same threshold.
pub fn classify(params: &ChannelParams) -> RegimeReport {
    let t = Thresholds::of(params);
    let b = params.b;
    let a_zero = params.a == 0.0;

    let z_channel = if b == 0.0 {
        ZChannel::BZero
    } else if a_zero {
        ZChannel::AZero
    } else {
        ZChannel::None
    };
    let interference_class = if b <= 1.0 {
        InterferenceClass::Weak
    } else {
        InterferenceClass::Strong
    };

    let superposition_capacity = a_zero && b >= t.superposition_capacity;
    RegimeReport {
        interference_class,
        z_channel,
        pdc_capacity_known: b <= t.primary_decodes_cognitive,
        z_bound_dominates: b >= t.z_bound_dominates,
        z_bound_dominates_exact: b >= t.z_bound_dominates_exact,
        superposition_capacity,
        open_regime: a_zero && b > t.primary_decodes_cognitive && b < t.superposition_capacity,
        thresholds: t,
    }
}

/// Exact form of the dominance condition (see [`Thresholds::z_bound_dominates_exact`]).
pub fn z_bound_dominates_exact(params: &ChannelParams) -> bool {
    let ChannelParams { b, p1, p2, .. } = *params;
    b * b - b * (p1 * p2).sqrt() - (1.0 + p2) >= 0.0
}
