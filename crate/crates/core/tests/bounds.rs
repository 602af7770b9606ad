use cogregions::geometry::{contains, gap, RateGrid};
use cogregions::inner::{capacity_region, superposition_region, CapacityRegion};
use cogregions::outer::{
    bc_dms_outer_bound, bc_pr_bound, unifying_region, z_bc_dms_boundary, z_bc_dms_region, BoundGrids, SplitGrid,
};
use cogregions::ChannelParams;

// Sampled unions under-estimate by up to one grid step.
const GRID_TOL: f64 = 1e-3;

fn grids(alpha1: usize, rest: usize) -> BoundGrids {
    BoundGrids {
        split: SplitGrid {
            alpha1,
            alpha2: rest,
            rho1: rest,
            rho2: rest,
        },
        ..BoundGrids::default()
    }
}

#[test]
fn bc_dms_bound_is_strictly_tighter_without_primary_power() {
    let params = ChannelParams::new(0.0, 10.0, 5.0, 0.0).unwrap();
    let g = grids(1001, 3);
    let th1 = bc_dms_outer_bound(&params, &g).unwrap();
    let unifying = unifying_region(&params, g.alpha, &g.rate).unwrap();
    assert!(contains(&unifying, &th1, 1e-9).passed);
    let summary = gap(&unifying, &th1);
    assert!(summary.max_gap > 0.1, "max gap {}", summary.max_gap);
}

#[test]
fn bc_dms_bound_matches_z_bound_at_zero_crosstalk() {
    let params = ChannelParams::new(0.0, 3.0, 1.0, 1.0).unwrap();
    let g = grids(1001, 5);
    let th1 = bc_dms_outer_bound(&params, &g).unwrap();
    assert!((th1.max_r1() - 1.0).abs() < 1e-12);
    // compared with the closed-form boundary rather than a sampled union,
    // whose staircase drops vertically just below the R1 cap
    for p in th1.points() {
        let exact = z_bc_dms_boundary(&params, p[0], true).unwrap().unwrap();
        assert!(p[1] <= exact + 1e-9, "above at {p:?}: {exact}");
        assert!(exact - p[1] <= GRID_TOL, "below at {p:?}: {exact}");
    }
    let cor2 = z_bc_dms_region(&params, g.alpha, &g.rate).unwrap();
    assert!(contains(&th1, &cor2, GRID_TOL).passed);
}

#[test]
fn private_rates_region_contains_bc_dms_bound() {
    for (a, b, p1, p2) in [(0.0, 10.0, 5.0, 5.0), (0.3, 3.0, 1.0, 1.0), (0.01, 2.0, 2.0, 0.5)] {
        let params = ChannelParams::new(a, b, p1, p2).unwrap();
        let g = grids(401, 5);
        let th1 = bc_dms_outer_bound(&params, &g).unwrap();
        let bcpr = bc_pr_bound(&params, &g).unwrap();
        let r = contains(&bcpr, &th1, GRID_TOL);
        assert!(r.passed, "a={a}, b={b}: {}", r.worst_case);
    }
}

#[test]
fn open_regime_bounds_are_nested() {
    let params = ChannelParams::new(0.0, 1.8, 1.0, 1.0).unwrap();
    let g = grids(1001, 5);
    let CapacityRegion::Open { inner, outer } = capacity_region(&params, &g).unwrap() else {
        panic!("expected an open regime");
    };
    assert!(contains(&outer, &inner, GRID_TOL).passed);
    let unifying = unifying_region(&params, g.alpha, &g.rate).unwrap();
    assert!(contains(&unifying, &outer, 1e-9).passed);
    let again = superposition_region(&params, g.beta, &RateGrid::default()).unwrap();
    assert_eq!(again.points(), inner.points());
}
