//! Planar points and deployment areas.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

/// A 2-D position in meters.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance_to(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Unit vector in this direction, or `None` below the given norm floor.
    pub fn normalized(self, floor: f64) -> Option<Point2> {
        let n = self.norm();
        if n < floor {
            None
        } else {
            Some(Point2::new(self.x / n, self.y / n))
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// Deployment area: a disk around the origin or an axis-aligned square
/// centered on the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Area {
    Disk { radius: f64 },
    Square { half_side: f64 },
}

impl Area {
    /// Area measure in square meters.
    pub fn measure(self) -> f64 {
        match self {
            Area::Disk { radius } => std::f64::consts::PI * radius * radius,
            Area::Square { half_side } => 4.0 * half_side * half_side,
        }
    }

    pub fn contains(self, p: Point2) -> bool {
        match self {
            Area::Disk { radius } => p.x * p.x + p.y * p.y <= radius * radius,
            Area::Square { half_side } => p.x.abs() <= half_side && p.y.abs() <= half_side,
        }
    }

    /// Distance from an interior point to the nearest boundary
    /// (negative if the point lies outside).
    pub fn edge_distance(self, p: Point2) -> f64 {
        match self {
            Area::Disk { radius } => radius - p.norm(),
            Area::Square { half_side } => (half_side - p.x.abs()).min(half_side - p.y.abs()),
        }
    }

    /// Largest possible distance between two points of the area.
    pub fn max_extent(self) -> f64 {
        match self {
            Area::Disk { radius } => 2.0 * radius,
            Area::Square { half_side } => 2.0 * std::f64::consts::SQRT_2 * half_side,
        }
    }
}
