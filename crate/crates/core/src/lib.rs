//! Rate regions of the real-valued Gaussian cognitive interference channel
//! in canonical form
//!
//! ```text
//! Y1 = X1 + a X2 + Z1
//! Y2 = b X1 + X2 + Z2,    Zi ~ N(0, 1),  E[Xi^2] <= Pi
//! ```
//!
//! where transmitter 1 is cognitive (it knows both messages) and receiver 2
//! is the primary receiver. All rates are in bits per channel use (log base 2).
//!
//! The crate evaluates the known outer bounds (the unifying bound, the
//! broadcast-channel-with-degraded-message-set bound and its closed form for
//! the Z-channel, the private-rates MIMO broadcast bound), the superposition
//! inner bound, the capacity region where it is known, and a set of
//! independent oracles (grid searches, Monte Carlo) that check the closed
//! forms against each other.

pub mod channel;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod inner;
pub mod oracles;
pub mod outer;
pub mod report;

pub use channel::{classify, ChannelParams, RegimeReport};
pub use error::{Error, Result};
pub use geometry::{Frontier, Pentagon, RateGrid};
pub use report::VerificationReport;

/// `log2(1 + x)`, accurate for small `x`.
#[inline]
pub fn log2_1p(x: f64) -> f64 {
    x.ln_1p() / std::f64::consts::LN_2
}
