//! Parameter grids on `[0, 1]` and `[-1, 1]`.

use crate::error::{Error, Result};

/// `n` evenly spaced points from `lo` to `hi`, both included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidGrid(format!("need at least 2 points, got {n}")));
    }
    let last = (n - 1) as f64;
    Ok((0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * (i as f64 / last)
            }
        })
        .collect())
}

/// `n` points on `[0, 1]` clustered quadratically towards 0: `(i/(n-1))^2`.
///
/// Used by the `for all` grid oracles, whose violations near their
/// thresholds only show up at small power fractions.
pub fn clustered_unit(n: usize) -> Result<Vec<f64>> {
    Ok(linspace(0.0, 1.0, n)?.into_iter().map(|t| t * t).collect())
}

/// `n` points on `[0, 1]` clustered quadratically towards 1: `1 - (1 - i/(n-1))^2`.
///
/// Power splits sampled this way turn the `sqrt(1 - alpha)` terms of the
/// boundaries, whose slope blows up at `alpha = 1`, into linear ones.
pub fn clustered_top(n: usize) -> Result<Vec<f64>> {
    Ok(linspace(0.0, 1.0, n)?
        .into_iter()
        .map(|t| 1.0 - (1.0 - t) * (1.0 - t))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_exact() {
        let g = linspace(-1.0, 1.0, 21).unwrap();
        assert_eq!(g.len(), 21);
        assert_eq!(g[0], -1.0);
        assert_eq!(g[10], 0.0);
        assert_eq!(g[20], 1.0);
        let c = clustered_unit(1001).unwrap();
        assert_eq!((c[0], c[1000]), (0.0, 1.0));
        assert!((c[1] - 1e-6).abs() < 1e-18);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
        let t = clustered_top(1001).unwrap();
        assert_eq!((t[0], t[1000]), (0.0, 1.0));
        assert!((1.0 - t[999] - 1e-6).abs() < 1e-15);
        assert!(t.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn too_small() {
        assert!(linspace(0.0, 1.0, 1).is_err());
    }
}
