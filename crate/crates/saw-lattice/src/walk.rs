//! Walks on the hypercubic lattice Z^d.
//!
//! A walk is an ordered list of lattice points starting at the origin with
//! unit steps; it is self-avoiding when all points are pairwise distinct.

use crate::error::{Error, Result};

/// A point of Z^d.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub coords: Vec<i64>,
}

impl LatticePoint {
    pub fn origin(dim: usize) -> Self {
        LatticePoint { coords: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Squared Euclidean norm.
    pub fn norm_sq(&self) -> i64 {
        self.coords.iter().map(|&c| c * c).sum()
    }

    /// Squared Euclidean distance to another point of the same dimension.
    pub fn dist_sq(&self, other: &LatticePoint) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| (a - b) * (a - b))
            .sum()
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }
}

/// A nearest-neighbour walk rooted at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeWalk {
    pub dim: usize,
    pub points: Vec<LatticePoint>,
}

impl LatticeWalk {
    /// The trivial zero-step walk sitting at the origin.
    pub fn trivial(dim: usize) -> Result<Self> {
        if dim < 1 {
            return Err(Error::InvalidDimension(dim));
        }
        Ok(LatticeWalk {
            dim,
            points: vec![LatticePoint::origin(dim)],
        })
    }

    /// Builds a walk from explicit points, checking only dimensions.
    /// Geometric validity is a separate question answered by
    /// [`is_self_avoiding`].
    pub fn from_points(dim: usize, points: Vec<LatticePoint>) -> Result<Self> {
        if dim < 1 {
            return Err(Error::InvalidDimension(dim));
        }
        if points.is_empty() || points.iter().any(|p| p.dim() != dim) {
            return Err(Error::InvalidArgument(
                "walk needs at least the origin and consistent dimensions".into(),
            ));
        }
        Ok(LatticeWalk { dim, points })
    }

    /// Number of steps (points minus one).
    pub fn len(&self) -> usize {
        self.points.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn endpoint(&self) -> &LatticePoint {
        self.points.last().expect("walk has at least the origin")
    }
}

/// True iff the walk starts at the origin, moves by unit steps and never
/// revisits a point. Malformed geometry yields `false`, not an error.
pub fn is_self_avoiding(walk: &LatticeWalk) -> bool {
    let pts = &walk.points;
    if pts[0] != LatticePoint::origin(walk.dim) {
        return false;
    }
    for w in pts.windows(2) {
        if w[0].dist_sq(&w[1]) != 1 {
            return false;
        }
    }
    // Pairwise distinctness. Walk lengths here are small; quadratic scan
    // keeps this allocation-free and exact.
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            if pts[i] == pts[j] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walk2(points: &[[i64; 2]]) -> LatticeWalk {
        LatticeWalk {
            dim: 2,
            points: points.iter().map(|p| LatticePoint::from(p.to_vec())).collect(),
        }
    }

    #[test]
    fn unit_l_shape_is_self_avoiding() {
        assert!(is_self_avoiding(&walk2(&[[0, 0], [1, 0], [1, 1]])));
    }

    #[test]
    fn revisiting_origin_is_rejected() {
        assert!(!is_self_avoiding(&walk2(&[[0, 0], [1, 0], [0, 0]])));
    }

    #[test]
    fn non_unit_step_is_rejected() {
        assert!(!is_self_avoiding(&walk2(&[[0, 0], [2, 0]])));
    }

    #[test]
    fn walk_not_rooted_at_origin_is_rejected() {
        assert!(!is_self_avoiding(&walk2(&[[1, 0], [1, 1]])));
    }

    #[test]
    fn trivial_walk_is_self_avoiding() {
        assert!(is_self_avoiding(&LatticeWalk::trivial(3).unwrap()));
    }

    #[test]
    fn dimension_zero_rejected() {
        assert!(matches!(LatticeWalk::trivial(0), Err(Error::InvalidDimension(0))));
    }
}
