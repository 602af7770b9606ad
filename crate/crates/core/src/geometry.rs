//! Two-user rate-region geometry.
//!
//! Every region handled by the crate is comprehensive (closed under
//! decreasing either rate), so it is fully described by its upper-right
//! boundary. [`Pentagon`] is the single-parameter building block,
//! [`Frontier`] the boundary of a union of pentagons as a monotone polyline
//! with linear interpolation between vertices.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::VerificationReport;

/// Collinear vertices closer than this to the chord of their neighbours are
/// dropped from sampled frontiers.
const PRUNE_TOL: f64 = 1e-13;

/// Negative rates down to this magnitude are treated as roundoff and clamped.
const NEG_ROUNDOFF: f64 = 1e-12;

/// `{R1 <= r1_max, R2 <= r2_max, R1 + R2 <= sum_max}`; any field may be `+inf`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pentagon {
    r1_max: f64,
    r2_max: f64,
    sum_max: f64,
}

impl Pentagon {
    /// Builds a pentagon and tightens it so that no constraint is looser
    /// than what the other two imply.
    pub fn new(r1_max: f64, r2_max: f64, sum_max: f64) -> Result<Self> {
        let clamp = |name: &str, v: f64| -> Result<f64> {
            if v.is_nan() || v < -NEG_ROUNDOFF {
                return Err(Error::InvalidFrontier(format!("pentagon {name} = {v}")));
            }
            Ok(v.max(0.0))
        };
        let r1 = clamp("r1_max", r1_max)?;
        let r2 = clamp("r2_max", r2_max)?;
        let sum = clamp("sum_max", sum_max)?;
        let sum = sum.min(r1 + r2);
        Ok(Self {
            r1_max: r1.min(sum),
            r2_max: r2.min(sum),
            sum_max: sum,
        })
    }

    pub fn rectangle(r1_max: f64, r2_max: f64) -> Result<Self> {
        Self::new(r1_max, r2_max, f64::INFINITY)
    }

    pub fn r1_max(&self) -> f64 {
        self.r1_max
    }

    pub fn r2_max(&self) -> f64 {
        self.r2_max
    }

    pub fn sum_max(&self) -> f64 {
        self.sum_max
    }

    /// R1 at which the sum constraint starts to bind.
    pub fn knee(&self) -> f64 {
        (self.sum_max - self.r2_max).clamp(0.0, self.r1_max)
    }

    /// Largest admissible R2 at the given R1, `None` past `r1_max`.
    pub fn value_at(&self, r1: f64) -> Option<f64> {
        if r1 < 0.0 || r1 > self.r1_max {
            return None;
        }
        Some(self.r2_max.min(self.sum_max - r1).max(0.0))
    }

    pub fn contains_point(&self, r1: f64, r2: f64, tol: f64) -> bool {
        r1 <= self.r1_max + tol && r2 <= self.r2_max + tol && r1 + r2 <= self.sum_max + tol
    }

    fn is_bounded(&self) -> bool {
        self.r1_max.is_finite() && self.r2_max.is_finite()
    }

    /// Corner points whose hull is the pentagon's boundary.
    fn hull_points(&self) -> [(f64, f64); 3] {
        [
            (0.0, self.r2_max),
            (self.knee(), self.r2_max),
            (self.r1_max, self.r2_max.min(self.sum_max - self.r1_max).max(0.0)),
        ]
    }
}

/// Pareto-optimal vertices of a pentagon, ordered by increasing R1.
pub fn pentagon_corners(p: &Pentagon) -> Vec<(f64, f64)> {
    let mut candidates = vec![(0.0, p.r2_max), (p.r1_max, 0.0)];
    candidates.extend(p.hull_points().iter().skip(1).copied());
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0).then(y.1.total_cmp(&x.1)));
    candidates.dedup();
    let keep: Vec<(f64, f64)> = candidates
        .iter()
        .copied()
        .filter(|&(x, y)| !candidates.iter().any(|&(u, v)| (u, v) != (x, y) && u >= x && v >= y))
        .collect();
    keep
}

/// Sampling of the R1 axis used when tracing the envelope of a union.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateGrid {
    /// Uniform samples over `[0, max R1]`.
    pub points: usize,
    /// Also sample every pentagon corner and the point just past each
    /// pentagon's `r1_max`, which makes the traced envelope exact at all
    /// breakpoints except crossings of two sloped segments.
    pub corners: bool,
}

impl Default for RateGrid {
    fn default() -> Self {
        Self {
            points: 2001,
            corners: true,
        }
    }
}

/// A monotone Pareto boundary: R1 strictly increasing from 0, R2 non-increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Frontier {
    points: Vec<[f64; 2]>,
}

impl Frontier {
    pub fn new(points: Vec<[f64; 2]>) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::InvalidFrontier("no points".into()))?;
        if first[0] != 0.0 {
            return Err(Error::InvalidFrontier(format!(
                "must start at r1 = 0, starts at {}",
                first[0]
            )));
        }
        for (i, p) in points.iter().enumerate() {
            if !p[0].is_finite() || !p[1].is_finite() || p[1] < 0.0 {
                return Err(Error::InvalidFrontier(format!("bad point #{i}: {p:?}")));
            }
        }
        for (i, w) in points.windows(2).enumerate() {
            if w[1][0] <= w[0][0] {
                return Err(Error::InvalidFrontier(format!(
                    "r1 not strictly increasing at #{}",
                    i + 1
                )));
            }
            if w[1][1] > w[0][1] {
                return Err(Error::InvalidFrontier(format!("r2 increases at #{}", i + 1)));
            }
        }
        Ok(Self { points })
    }

    /// Builds a frontier from samples sorted by R1, repairing roundoff-level
    /// monotonicity defects and dropping collinear vertices.
    pub(crate) fn from_sorted_samples(samples: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let mut pts: Vec<[f64; 2]> = Vec::new();
        for (x, y) in samples {
            let y = y.max(0.0);
            match pts.last_mut() {
                Some(last) if x <= last[0] => last[1] = last[1].max(y),
                _ => pts.push([x, y]),
            }
        }
        if pts.is_empty() {
            return Err(Error::InvalidFrontier("no points".into()));
        }
        let mut running = f64::INFINITY;
        for p in pts.iter_mut() {
            running = running.min(p[1]);
            p[1] = running;
        }
        Self::new(prune_collinear(pts))
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_r1(&self) -> f64 {
        self.points[self.points.len() - 1][0]
    }

    /// R2 at the max-R1 vertex.
    pub fn r2_at_max_r1(&self) -> f64 {
        self.points[self.points.len() - 1][1]
    }

    pub fn max_r2(&self) -> f64 {
        self.points[0][1]
    }

    /// Linearly interpolated boundary value; `None` outside `[0, max_r1]`.
    pub fn value_at(&self, r1: f64) -> Option<f64> {
        if !(0.0..=self.max_r1()).contains(&r1) {
            return None;
        }
        let i = self.points.partition_point(|p| p[0] < r1);
        let hi = self.points[i];
        if hi[0] == r1 || i == 0 {
            return Some(hi[1]);
        }
        let lo = self.points[i - 1];
        let t = (r1 - lo[0]) / (hi[0] - lo[0]);
        Some(lo[1] + t * (hi[1] - lo[1]))
    }

    /// Whether every vertex lies on or below the chord of its neighbours.
    pub fn is_concave(&self, tol: f64) -> bool {
        self.points.windows(3).all(|w| {
            let t = (w[1][0] - w[0][0]) / (w[2][0] - w[0][0]);
            w[1][1] >= w[0][1] + t * (w[2][1] - w[0][1]) - tol
        })
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        wtr.write_record(["r1_bits", "r2_bits"])?;
        for p in &self.points {
            wtr.write_record([p[0].to_string(), p[1].to_string()])?;
        }
        wtr.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(r: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(r);
        let headers = rdr.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["r1_bits", "r2_bits"] {
            return Err(Error::InvalidFrontier(format!("unexpected CSV header {headers:?}")));
        }
        let mut points = Vec::new();
        for row in rdr.deserialize() {
            let (r1, r2): (f64, f64) = row?;
            points.push([r1, r2]);
        }
        Self::new(points)
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("frontier serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            points: Vec<[f64; 2]>,
        }
        let raw: Raw = serde_json::from_str(s)?;
        Self::new(raw.points)
    }
}

fn prune_collinear(pts: Vec<[f64; 2]>) -> Vec<[f64; 2]> {
    if pts.len() <= 2 {
        return pts;
    }
    let mut out: Vec<[f64; 2]> = Vec::with_capacity(pts.len());
    out.push(pts[0]);
    for i in 1..pts.len() - 1 {
        let prev = out[out.len() - 1];
        let (cur, next) = (pts[i], pts[i + 1]);
        let t = (cur[0] - prev[0]) / (next[0] - prev[0]);
        let chord = prev[1] + t * (next[1] - prev[1]);
        if (cur[1] - chord).abs() > PRUNE_TOL {
            out.push(cur);
        }
    }
    out.push(pts[pts.len() - 1]);
    out
}

#[derive(PartialEq)]
struct SumKey(f64, usize);

impl Eq for SumKey {}

impl PartialOrd for SumKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SumKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
    }
}

/// Upper envelope `max_k value_k(r)` of a pentagon family at ascending
/// query points, in O((N + Q) log N).
///
/// Sweeping R1 downwards, a pentagon enters the candidate set once
/// `r <= r1_max`. While `r > knee` its value is `sum_max - r` (tracked in a
/// max-heap on `sum_max`); once `r <= knee` it is flat at `r2_max` forever
/// after, so it moves to a running maximum and is lazily dropped from the heap.
fn envelope(pentagons: &[Pentagon], queries: &[f64]) -> Vec<f64> {
    let n = pentagons.len();
    let mut by_end: Vec<usize> = (0..n).collect();
    by_end.sort_by(|&i, &j| pentagons[j].r1_max.total_cmp(&pentagons[i].r1_max));
    let knees: Vec<f64> = pentagons.iter().map(Pentagon::knee).collect();
    let mut by_knee: Vec<usize> = (0..n).collect();
    by_knee.sort_by(|&i, &j| knees[j].total_cmp(&knees[i]));

    let mut out = vec![f64::NEG_INFINITY; queries.len()];
    let mut heap = BinaryHeap::new();
    let mut flat = f64::NEG_INFINITY;
    let (mut ie, mut ik) = (0, 0);
    for (qi, &r) in queries.iter().enumerate().rev() {
        while ie < n && pentagons[by_end[ie]].r1_max >= r {
            let k = by_end[ie];
            heap.push(SumKey(pentagons[k].sum_max, k));
            ie += 1;
        }
        while ik < n && knees[by_knee[ik]] >= r {
            flat = flat.max(pentagons[by_knee[ik]].r2_max);
            ik += 1;
        }
        while heap.peek().is_some_and(|top| knees[top.1] >= r) {
            heap.pop();
        }
        let sloped = heap.peek().map_or(f64::NEG_INFINITY, |top| top.0 - r);
        out[qi] = flat.max(sloped);
    }
    out
}

/// Boundary of the union of `pentagons` (no convexification).
pub fn union_frontier(pentagons: &[Pentagon], grid: &RateGrid) -> Result<Frontier> {
    if pentagons.is_empty() {
        return Err(Error::EmptyUnion);
    }
    if let Some(p) = pentagons.iter().find(|p| !p.is_bounded()) {
        return Err(Error::InvalidFrontier(format!("unbounded pentagon {p:?}")));
    }
    if grid.points < 2 {
        return Err(Error::InvalidGrid(format!(
            "rate grid needs at least 2 points, got {}",
            grid.points
        )));
    }
    let r_max = pentagons.iter().map(|p| p.r1_max).fold(0.0, f64::max);

    let mut queries: Vec<f64> = (0..grid.points)
        .map(|i| r_max * i as f64 / (grid.points - 1) as f64)
        .collect();
    queries.push(r_max);
    if grid.corners {
        for p in pentagons {
            queries.push(p.knee());
            queries.push(p.r1_max);
            if p.r1_max < r_max {
                queries.push(p.r1_max.next_up());
            }
        }
    }
    queries.sort_by(f64::total_cmp);
    queries.dedup();

    let values = envelope(pentagons, &queries);
    Frontier::from_sorted_samples(queries.into_iter().zip(values))
}

/// Upper concave envelope of a comprehensive point set.
pub(crate) fn upper_hull_points(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|p, q| p.0.total_cmp(&q.0).then(q.1.total_cmp(&p.1)));
    pts.dedup_by(|later, kept| later.0 == kept.0);
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for p in pts {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    // Free disposal: everything left of the highest point is flat at its height.
    let top = hull
        .iter()
        .enumerate()
        .max_by(|x, y| x.1 .1.total_cmp(&y.1 .1).then(y.0.cmp(&x.0)))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut out = hull.split_off(top);
    if let Some(&(x, y)) = out.first() {
        if x > 0.0 {
            out.insert(0, (0.0, y));
        }
    }
    out
}

/// Frontier of the convex hull of a comprehensive point set.
pub fn hull_frontier(points: Vec<(f64, f64)>) -> Result<Frontier> {
    if points.is_empty() {
        return Err(Error::EmptyUnion);
    }
    Frontier::from_sorted_samples(upper_hull_points(points))
}

/// Hull vertices of the union of `pentagons`; the union's convex closure is
/// the hull of these points.
pub fn pentagon_hull_points(pentagons: impl IntoIterator<Item = Pentagon>) -> Vec<(f64, f64)> {
    let pts: Vec<(f64, f64)> = pentagons.into_iter().flat_map(|p| p.hull_points()).collect();
    upper_hull_points(pts)
}

/// Time-sharing closure: the upper concave envelope of `f`.
pub fn concavify(f: &Frontier) -> Frontier {
    let pts = f.points.iter().map(|p| (p[0], p[1])).collect();
    Frontier::from_sorted_samples(upper_hull_points(pts)).expect("hull of a frontier is a frontier")
}

/// Merged, sorted vertex abscissae of two frontiers restricted to `[0, hi]`.
fn merged_abscissae(f: &Frontier, g: &Frontier, hi: f64) -> Vec<f64> {
    let mut xs: Vec<f64> = f
        .points
        .iter()
        .chain(g.points.iter())
        .map(|p| p[0])
        .filter(|&x| x <= hi)
        .collect();
    xs.push(hi);
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}

/// Pointwise minimum of two frontiers over the common R1 range.
pub fn intersect_frontiers(f: &Frontier, g: &Frontier) -> Result<Frontier> {
    let hi = f.max_r1().min(g.max_r1());
    let xs = merged_abscissae(f, g, hi);
    let diff = |x: f64| f.value_at(x).unwrap() - g.value_at(x).unwrap();
    let mut samples = Vec::with_capacity(xs.len() * 2);
    for (i, &x) in xs.iter().enumerate() {
        if i > 0 {
            let x0 = xs[i - 1];
            let (d0, d1) = (diff(x0), diff(x));
            if d0 * d1 < 0.0 {
                let xc = x0 + (x - x0) * d0 / (d0 - d1);
                if xc > x0 && xc < x {
                    samples.push((xc, f.value_at(xc).unwrap().min(g.value_at(xc).unwrap())));
                }
            }
        }
        samples.push((x, f.value_at(x).unwrap().min(g.value_at(x).unwrap())));
    }
    Frontier::from_sorted_samples(samples)
}

/// Signed vertical distance `outer - inner` over their common R1 range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapSummary {
    pub max_gap: f64,
    pub max_gap_r1: f64,
    pub min_gap: f64,
    pub min_gap_r1: f64,
    pub common_max_r1: f64,
}

pub fn gap(outer: &Frontier, inner: &Frontier) -> GapSummary {
    let hi = outer.max_r1().min(inner.max_r1());
    let mut s = GapSummary {
        max_gap: f64::NEG_INFINITY,
        max_gap_r1: 0.0,
        min_gap: f64::INFINITY,
        min_gap_r1: 0.0,
        common_max_r1: hi,
    };
    // Both are piecewise linear, so extremes sit on merged vertices.
    for x in merged_abscissae(outer, inner, hi) {
        let d = outer.value_at(x).unwrap() - inner.value_at(x).unwrap();
        if d > s.max_gap {
            s.max_gap = d;
            s.max_gap_r1 = x;
        }
        if d < s.min_gap {
            s.min_gap = d;
            s.min_gap_r1 = x;
        }
    }
    s
}

/// Checks `inner ⊆ outer` up to `tol` bits at every vertex of either
/// boundary. Inner vertices beyond `outer.max_r1()` count by their
/// horizontal excess.
pub fn contains(outer: &Frontier, inner: &Frontier, tol: f64) -> VerificationReport {
    let mut worst = 0.0f64;
    let mut at = (0.0, 0.0);
    let mut check = |r1: f64, r2: f64| {
        let violation = if r1 > outer.max_r1() {
            (r1 - outer.max_r1()).max(r2 - outer.r2_at_max_r1())
        } else {
            r2 - outer.value_at(r1).unwrap()
        };
        if violation > worst {
            worst = violation;
            at = (r1, r2);
        }
    };
    for p in &inner.points {
        check(p[0], p[1]);
    }
    for p in &outer.points {
        if let Some(v) = inner.value_at(p[0]) {
            check(p[0], v);
        }
    }
    let n = (inner.len() + outer.len()) as u64;
    VerificationReport::new(
        "contains",
        worst,
        tol,
        n,
        None,
        format!(
            "max violation {worst:.3e} bits at inner point ({:.6}, {:.6})",
            at.0, at.1
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pent(a: f64, b: f64, c: f64) -> Pentagon {
        Pentagon::new(a, b, c).unwrap()
    }

    fn fr(pts: &[(f64, f64)]) -> Frontier {
        Frontier::new(pts.iter().map(|&(x, y)| [x, y]).collect()).unwrap()
    }

    #[test]
    fn normalization_tightens() {
        let p = pent(5.0, 5.0, 3.0);
        assert_eq!((p.r1_max(), p.r2_max(), p.sum_max()), (3.0, 3.0, 3.0));
        let q = pent(1.0, 2.0, 10.0);
        assert_eq!(q.sum_max(), 3.0);
        assert!(Pentagon::new(f64::NAN, 1.0, 1.0).is_err());
        assert!(Pentagon::new(-1.0, 1.0, 1.0).is_err());
        assert_eq!(pent(-1e-15, 1.0, 1.0).r1_max(), 0.0);
    }

    #[test]
    fn corners_symmetric_pentagon() {
        assert_eq!(pentagon_corners(&pent(1.0, 1.0, 1.5)), vec![(0.5, 1.0), (1.0, 0.5)]);
    }

    #[test]
    fn corners_rectangle() {
        assert_eq!(pentagon_corners(&pent(1.0, 1.0, 3.0)), vec![(1.0, 1.0)]);
        assert_eq!(
            pentagon_corners(&Pentagon::rectangle(1.0, 1.0).unwrap()),
            vec![(1.0, 1.0)]
        );
    }

    #[test]
    fn corners_degraded_reduction() {
        // R1 <= log2 6, R1 + R2 <= log2 501 with R2 <= log2 501
        let (a, c) = (6f64.log2(), 501f64.log2());
        let cs = pentagon_corners(&pent(a, c, c));
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0], (0.0, c));
        assert_eq!(cs[1].0, a);
        assert!((cs[1].1 - (c - a)).abs() < 1e-15);
        assert!((cs[1].1 - 6.384).abs() < 1e-3);
    }

    #[test]
    fn corners_degenerate() {
        assert_eq!(pentagon_corners(&pent(0.0, 0.0, 0.0)), vec![(0.0, 0.0)]);
        assert_eq!(pentagon_corners(&pent(0.0, 2.0, 5.0)), vec![(0.0, 2.0)]);
        assert_eq!(pentagon_corners(&pent(2.0, 0.0, 5.0)), vec![(2.0, 0.0)]);
    }

    #[test]
    fn union_single_rectangle() {
        let f = union_frontier(&[Pentagon::rectangle(1.0, 1.0).unwrap()], &RateGrid::default()).unwrap();
        assert_eq!(f.points(), &[[0.0, 1.0], [1.0, 1.0]]);
    }

    #[test]
    fn union_staircase() {
        let ps = [
            Pentagon::rectangle(1.0, 2.0).unwrap(),
            Pentagon::rectangle(2.0, 1.0).unwrap(),
        ];
        let f = union_frontier(&ps, &RateGrid::default()).unwrap();
        assert_eq!(f.value_at(0.0), Some(2.0));
        assert_eq!(f.value_at(1.0), Some(2.0));
        assert_eq!(f.value_at(1.5), Some(1.0));
        assert_eq!(f.value_at(2.0), Some(1.0));
        assert_eq!(f.value_at(1.0f64.next_up()), Some(1.0));
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn union_empty_errors() {
        assert!(matches!(
            union_frontier(&[], &RateGrid::default()),
            Err(Error::EmptyUnion)
        ));
    }

    #[test]
    fn union_without_corners_is_sampled() {
        let ps = [pent(1.0, 1.0, 1.5)];
        let f = union_frontier(
            &ps,
            &RateGrid {
                points: 2,
                corners: false,
            },
        )
        .unwrap();
        assert_eq!(f.points(), &[[0.0, 1.0], [1.0, 0.5]]);
    }

    #[test]
    fn union_with_corners_matches_brute_force() {
        let ps = [
            pent(1.0, 3.0, 3.5),
            pent(2.0, 2.0, 3.0),
            pent(3.0, 0.5, 10.0),
            pent(1.5, 2.5, 3.2),
        ];
        let f = union_frontier(
            &ps,
            &RateGrid {
                points: 7,
                corners: true,
            },
        )
        .unwrap();
        for i in 0..=300 {
            let r = 3.0 * i as f64 / 300.0;
            let brute = ps
                .iter()
                .filter_map(|p| p.value_at(r))
                .fold(f64::NEG_INFINITY, f64::max);
            let v = f.value_at(r).unwrap();
            // interpolation never overshoots; exact where segments don't cross
            assert!(v <= brute + 1e-12, "r={r} v={v} brute={brute}");
        }
        for p in &ps {
            for (x, y) in pentagon_corners(p) {
                assert!(f.value_at(x).unwrap() >= y - 1e-12);
            }
        }
    }

    #[test]
    fn concavify_two_steps() {
        let f = fr(&[(0.0, 2.0), (1.0, 2.0), (1.0f64.next_up(), 1.0), (2.0, 1.0)]);
        let c = concavify(&f);
        assert_eq!(c.points(), &[[0.0, 2.0], [1.0, 2.0], [2.0, 1.0]]);
        assert_eq!(c.value_at(1.5), Some(1.5));
    }

    #[test]
    fn concavify_keeps_concave_input() {
        let f = fr(&[(0.0, 3.0), (1.0, 2.8), (2.0, 2.0), (2.5, 0.5)]);
        let c = concavify(&f);
        for p in f.points() {
            assert!((c.value_at(p[0]).unwrap() - p[1]).abs() <= 1e-12);
        }
    }

    #[test]
    fn hull_of_raised_interior_point() {
        let f = hull_frontier(vec![(0.5, 3.0), (1.0, 1.0), (0.0, 2.0)]).unwrap();
        assert_eq!(f.points(), &[[0.0, 3.0], [0.5, 3.0], [1.0, 1.0]]);
    }

    #[test]
    fn intersect_rectangles() {
        let f = fr(&[(0.0, 1.0), (1.0, 1.0)]);
        let g = fr(&[(0.0, 0.5), (2.0, 0.5)]);
        let h = intersect_frontiers(&f, &g).unwrap();
        assert_eq!(h.points(), &[[0.0, 0.5], [1.0, 0.5]]);
        assert_eq!(intersect_frontiers(&f, &f).unwrap(), f);
    }

    #[test]
    fn intersect_crossing_is_exact() {
        let f = fr(&[(0.0, 2.0), (2.0, 0.0)]);
        let g = fr(&[(0.0, 1.5), (2.0, 0.5)]);
        let h = intersect_frontiers(&f, &g).unwrap();
        assert_eq!(h.len(), 3);
        let x = h.points()[1][0];
        assert!((x - 1.0).abs() < 1e-12);
        assert!((h.value_at(x).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn contains_reflexive_and_strict() {
        let f = fr(&[(0.0, 2.0), (1.0, 1.5), (2.0, 0.0)]);
        let r = contains(&f, &f, 0.0);
        assert!(r.passed);
        assert_eq!(r.max_discrepancy, 0.0);

        let small = fr(&[(0.0, 1.0), (1.0, 1.0)]);
        assert!(contains(&f, &small, 0.0).passed);
        let rev = contains(&small, &f, 0.0);
        assert!(!rev.passed);
        assert!((rev.max_discrepancy - 1.0).abs() < 1e-12);
    }

    #[test]
    fn contains_detects_outer_dip_between_inner_vertices() {
        let outer = fr(&[(0.0, 2.0), (1.0, 0.5), (2.0, 0.4)]);
        let inner = fr(&[(0.0, 1.0), (2.0, 0.4)]);
        assert!(!contains(&outer, &inner, 1e-9).passed);
    }

    #[test]
    fn frontier_validation() {
        assert!(Frontier::new(vec![]).is_err());
        assert!(Frontier::new(vec![[0.1, 1.0]]).is_err());
        assert!(Frontier::new(vec![[0.0, 1.0], [0.0, 0.5]]).is_err());
        assert!(Frontier::new(vec![[0.0, 1.0], [1.0, 1.5]]).is_err());
        assert!(Frontier::new(vec![[0.0, 1.0], [1.0, f64::NAN]]).is_err());
        assert!(Frontier::new(vec![[0.0, 0.0]]).is_ok());
    }

    #[test]
    fn csv_and_json_formats() {
        let f = fr(&[(0.0, 2.0), (0.5, 1.25), (1.0, 0.0)]);
        let csv = f.to_csv_string();
        assert_eq!(csv, "r1_bits,r2_bits\n0,2\n0.5,1.25\n1,0\n");
        assert_eq!(Frontier::read_csv(csv.as_bytes()).unwrap(), f);
        assert_eq!(f.to_json(), r#"{"points":[[0.0,2.0],[0.5,1.25],[1.0,0.0]]}"#);
        assert_eq!(Frontier::from_json(&f.to_json()).unwrap(), f);
        assert!(Frontier::read_csv("x,y\n0,1\n".as_bytes()).is_err());
    }

    #[test]
    fn gap_summary() {
        let outer = fr(&[(0.0, 2.0), (1.0, 2.0), (2.0, 0.0)]);
        let inner = fr(&[(0.0, 2.0), (1.5, 0.5)]);
        let g = gap(&outer, &inner);
        assert_eq!(g.common_max_r1, 1.5);
        assert!((g.max_gap - 1.0).abs() < 1e-12);
        assert_eq!(g.max_gap_r1, 1.0);
        assert_eq!(g.min_gap, 0.0);
    }
}
