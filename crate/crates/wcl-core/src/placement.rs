//! Sensor deployments: grid and uniform placements, self-localization error,
//! and the average node spacing used to normalize localization errors.

use crate::geometry::{Area, Point2};
use crate::numeric::sum_exact;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

/// How a deployment was generated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlacementKind {
    /// Centered square lattice; `spacing` is the lattice constant.
    FixedGrid { spacing: f64 },
    /// Same lattice, but the transmitter position was drawn uniformly
    /// inside the central lattice cell.
    RandomGrid { spacing: f64 },
    /// Independent uniform placement over the disk.
    UniformDisk,
}

/// A set of sensors with true and measured positions plus the transmitter
/// location. Immutable after construction; safe to share across trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deployment {
    pub true_positions: Vec<Point2>,
    pub measured_positions: Vec<Point2>,
    pub pu_position: Point2,
    pub area: Area,
    pub sigma_l: f64,
    pub placement_kind: PlacementKind,
}

impl Deployment {
    pub fn len(&self) -> usize {
        self.true_positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.true_positions.is_empty()
    }

    /// Distance from each node's true position to the transmitter.
    pub fn true_distances(&self) -> Vec<f64> {
        self.true_positions
            .iter()
            .map(|p| p.distance_to(self.pu_position))
            .collect()
    }

    /// Panics if any structural invariant is violated. Meant for tests and
    /// debug assertions, not for hot paths.
    pub fn check_invariants(&self) {
        assert_eq!(self.true_positions.len(), self.measured_positions.len());
        assert!(self.sigma_l >= 0.0);
        for p in &self.true_positions {
            assert!(p.is_finite());
            assert!(self.area.contains(*p), "node outside area: {p:?}");
        }
        if self.sigma_l == 0.0 {
            assert_eq!(self.true_positions, self.measured_positions);
        }
    }

    /// One row per node: `id,true_x,true_y,meas_x,meas_y`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,true_x,true_y,meas_x,meas_y\n");
        for (i, (t, m)) in self
            .true_positions
            .iter()
            .zip(&self.measured_positions)
            .enumerate()
        {
            out.push_str(&format!("{},{},{},{},{}\n", i, t.x, t.y, m.x, m.y));
        }
        out
    }
}

/// Lattice sites are at half-integer multiples of the spacing, so the grid is
/// symmetric about the origin and the origin sits at the center of a cell.
/// Returns the selection radius in lattice units and the realized node count:
/// the largest count not exceeding `n_target` that a uniform refinement of
/// this lattice can realize inside the disk.
fn lattice_selection(n_target: usize) -> (f64, usize) {
    assert!(n_target >= 4, "grid placement needs at least 4 nodes");
    let k_max = (n_target as f64).sqrt().ceil() as i64 + 3;
    // Squared radii (i+1/2)^2 + (j+1/2)^2 are exact dyadic rationals, so
    // grouping by equality is reliable.
    let mut levels: Vec<f64> = Vec::new();
    for i in 0..k_max {
        for j in 0..k_max {
            let x = i as f64 + 0.5;
            let y = j as f64 + 0.5;
            levels.push(x * x + y * y);
        }
    }
    levels.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut count = 0usize;
    let mut chosen_r2 = levels[0];
    let mut next_r2 = None;
    let mut idx = 0;
    while idx < levels.len() {
        let r2 = levels[idx];
        let mut group = 0;
        while idx < levels.len() && levels[idx] == r2 {
            group += 1;
            idx += 1;
        }
        // Each first-quadrant site stands for 4 mirrored sites.
        if count + 4 * group <= n_target {
            count += 4 * group;
            chosen_r2 = r2;
        } else {
            next_r2 = Some(r2);
            break;
        }
    }
    let next_r2 = next_r2.expect("lattice enumeration bound too small");
    let r_pick = 0.5 * (chosen_r2.sqrt() + next_r2.sqrt());
    (r_pick, count)
}

fn lattice_points(spacing: f64, r_pick: f64) -> Vec<Point2> {
    let k_max = r_pick.ceil() as i64 + 1;
    let mut pts = Vec::new();
    for i in 0..k_max {
        for j in 0..k_max {
            let u = i as f64 + 0.5;
            let v = j as f64 + 0.5;
            if u * u + v * v <= r_pick * r_pick {
                let x = u * spacing;
                let y = v * spacing;
                pts.push(Point2::new(x, y));
                pts.push(Point2::new(-x, y));
                pts.push(Point2::new(x, -y));
                pts.push(Point2::new(-x, -y));
            }
        }
    }
    pts.sort_by(|a, b| (a.y, a.x).partial_cmp(&(b.y, b.x)).unwrap());
    pts
}

/// Square lattice clipped to the disk of radius `radius`, with the spacing
/// refined until the realized count is the largest achievable count not
/// exceeding `n_target`. The transmitter sits at the area center.
pub fn place_fixed_grid(radius: f64, n_target: usize) -> Deployment {
    assert!(radius > 0.0);
    let (r_pick, _count) = lattice_selection(n_target);
    let spacing = radius / r_pick;
    let pts = lattice_points(spacing, r_pick);
    Deployment {
        measured_positions: pts.clone(),
        true_positions: pts,
        pu_position: Point2::ORIGIN,
        area: Area::Disk { radius },
        sigma_l: 0.0,
        placement_kind: PlacementKind::FixedGrid { spacing },
    }
}

/// Square-area variant of [`place_fixed_grid`]: an m-by-m centered lattice
/// with the largest even `m` satisfying `m*m <= n_target`.
pub fn place_fixed_grid_square(half_side: f64, n_target: usize) -> Deployment {
    assert!(half_side > 0.0);
    assert!(n_target >= 4, "grid placement needs at least 4 nodes");
    let mut m = (n_target as f64).sqrt().floor() as usize;
    if m % 2 == 1 {
        m -= 1;
    }
    let spacing = 2.0 * half_side / m as f64;
    let mut pts = Vec::with_capacity(m * m);
    for i in 0..m as i64 / 2 {
        for j in 0..m as i64 / 2 {
            let x = (i as f64 + 0.5) * spacing;
            let y = (j as f64 + 0.5) * spacing;
            pts.push(Point2::new(x, y));
            pts.push(Point2::new(-x, y));
            pts.push(Point2::new(x, -y));
            pts.push(Point2::new(-x, -y));
        }
    }
    pts.sort_by(|a, b| (a.y, a.x).partial_cmp(&(b.y, b.x)).unwrap());
    Deployment {
        measured_positions: pts.clone(),
        true_positions: pts,
        pu_position: Point2::ORIGIN,
        area: Area::Square { half_side },
        sigma_l: 0.0,
        placement_kind: PlacementKind::FixedGrid { spacing },
    }
}

/// `n` i.i.d. points uniform over the disk of radius `radius`.
pub fn place_uniform_disk(radius: f64, n: usize, rng: &mut impl Rng) -> Deployment {
    assert!(radius > 0.0);
    assert!(n >= 1);
    let mut pts = Vec::with_capacity(n);
    for _ in 0..n {
        let r = radius * rng.random::<f64>().sqrt();
        let theta = 2.0 * std::f64::consts::PI * rng.random::<f64>();
        pts.push(Point2::new(r * theta.cos(), r * theta.sin()));
    }
    Deployment {
        measured_positions: pts.clone(),
        true_positions: pts,
        pu_position: Point2::ORIGIN,
        area: Area::Disk { radius },
        sigma_l: 0.0,
        placement_kind: PlacementKind::UniformDisk,
    }
}

/// Fixed lattice with the transmitter drawn uniformly inside the central
/// lattice cell (the square of side `spacing` centered on the origin).
pub fn place_random_grid(radius: f64, n_target: usize, rng: &mut impl Rng) -> Deployment {
    let mut dep = place_fixed_grid(radius, n_target);
    let spacing = match dep.placement_kind {
        PlacementKind::FixedGrid { spacing } => spacing,
        _ => unreachable!(),
    };
    let x = (rng.random::<f64>() - 0.5) * spacing;
    let y = (rng.random::<f64>() - 0.5) * spacing;
    dep.pu_position = Point2::new(x, y);
    dep.placement_kind = PlacementKind::RandomGrid { spacing };
    dep
}

/// Adds i.i.d. per-axis Gaussian self-localization error to the true
/// positions. Noise is independent across nodes and of any other stream.
pub fn apply_position_noise(dep: &Deployment, sigma_l: f64, rng: &mut impl Rng) -> Deployment {
    assert!(sigma_l >= 0.0);
    let mut out = dep.clone();
    out.sigma_l = sigma_l;
    if sigma_l == 0.0 {
        out.measured_positions = out.true_positions.clone();
        return out;
    }
    out.measured_positions = out
        .true_positions
        .iter()
        .map(|p| {
            let dx: f64 = StandardNormal.sample(rng);
            let dy: f64 = StandardNormal.sample(rng);
            Point2::new(p.x + sigma_l * dx, p.y + sigma_l * dy)
        })
        .collect();
    out
}

/// Average node spacing `D = sqrt(area / N)`. On a full square lattice this
/// equals the lattice constant, and it scales as `1/sqrt(density)`.
pub fn average_node_spacing(dep: &Deployment) -> f64 {
    let n = dep.len();
    assert!(n >= 2, "spacing undefined for fewer than 2 nodes");
    (dep.area.measure() / n as f64).sqrt()
}
