use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Periodic 1D spatial lattice with its derived momentum lattice.
///
/// Lengths are in units of the disorder correlation length. Sites are
/// `x_i = i * step` for `i = 0..n`, the domain volume is `length = n * step`,
/// and the momentum lattice is `k_j = 2*pi*j/length` for signed
/// `j in [-n/2, n/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    length: f64,
    step: f64,
    n: usize,
}

impl Grid {
    /// Build a grid from the domain length and the lattice step.
    ///
    /// `length/step` must be an even integer (within one part in 1e9); the
    /// even count is required by the half-step phase-space construction.
    pub fn new(length: f64, step: f64) -> Result<Self> {
        if !(length > 0.0) || !(step > 0.0) {
            return Err(Error::parameter(format!(
                "grid needs positive length and step, got length={length}, step={step}"
            )));
        }
        let n_real = length / step;
        let n = n_real.round();
        if (n_real - n).abs() > 1e-9 * n.max(1.0) {
            return Err(Error::parameter(format!(
                "length/step = {n_real} is not an integer site count"
            )));
        }
        let n = n as usize;
        if n < 4 || n % 2 != 0 {
            return Err(Error::parameter(format!(
                "site count must be even and at least 4, got {n}"
            )));
        }
        Ok(Grid { length, step, n })
    }

    /// Grid with a given site count; the length is `n * step`.
    pub fn from_points(n: usize, step: f64) -> Result<Self> {
        Grid::new(n as f64 * step, step)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Site coordinate `x_i`.
    pub fn x(&self, i: usize) -> f64 {
        i as f64 * self.step
    }

    /// Momentum for a signed lattice index.
    pub fn momentum(&self, j: i64) -> f64 {
        2.0 * PI * j as f64 / self.length
    }

    /// Momentum lattice spacing `2*pi/length`.
    pub fn momentum_cell(&self) -> f64 {
        2.0 * PI / self.length
    }

    /// Signed momentum indices in ascending order, `-n/2 ..= n/2 - 1`.
    pub fn momentum_indices(&self) -> impl Iterator<Item = i64> {
        let half = self.n as i64 / 2;
        -half..half
    }

    /// Momenta in ascending order, matching `momentum_indices`.
    pub fn momenta(&self) -> Vec<f64> {
        self.momentum_indices().map(|j| self.momentum(j)).collect()
    }

    /// Signed lattice index of `k0`, or an error when `k0` is not a lattice
    /// momentum.
    pub fn momentum_index_of(&self, k0: f64) -> Result<i64> {
        let j_real = k0 * self.length / (2.0 * PI);
        let j = j_real.round();
        if (j_real - j).abs() > 1e-9 * j.abs().max(1.0) {
            return Err(Error::parameter(format!(
                "k0={k0} is not on the momentum lattice (need 2*pi*j/L)"
            )));
        }
        let half = self.n as i64 / 2;
        let j = j as i64;
        if j < -half || j >= half {
            return Err(Error::parameter(format!(
                "k0={k0} lies outside the first Brillouin zone"
            )));
        }
        Ok(j)
    }

    /// Hopping amplitude of the finite-difference kinetic term, `1/(2 step^2)`.
    pub fn hopping(&self) -> f64 {
        1.0 / (2.0 * self.step * self.step)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_construction() {
        let g = Grid::new(200.0, 0.2).unwrap();
        assert_eq!(g.n(), 1000);
        assert!((g.length() - 200.0).abs() < 1e-12);
        assert!((g.x(3) - 0.6).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Grid::new(-1.0, 0.1).is_err());
        assert!(Grid::new(10.0, 0.0).is_err());
        // 7 sites: odd
        assert!(Grid::new(7.0, 1.0).is_err());
        // non-integer count
        assert!(Grid::new(10.0, 0.3).is_err());
    }

    #[test]
    fn paper_scale_grid_is_commensurate() {
        let g = Grid::new(300.0, 0.05).unwrap();
        assert_eq!(g.n(), 6000);
        assert!((g.n() as f64 * g.step() - g.length()).abs() <= 1e-9 * g.length());
    }

    #[test]
    fn momentum_lattice_roundtrip() {
        let g = Grid::new(100.0, 0.5).unwrap();
        for j in [-100i64, -1, 0, 1, 57] {
            let k = g.momentum(j);
            assert_eq!(g.momentum_index_of(k).unwrap(), j);
        }
        assert!(g.momentum_index_of(0.123456).is_err());
    }

    proptest! {
        #[test]
        fn count_times_step_matches_length(n in 2usize..2000, step in 1e-3f64..10.0) {
            let n = n * 2;
            if let Ok(g) = Grid::from_points(n, step) {
                prop_assert!((g.n() as f64 * g.step() - g.length()).abs() <= 1e-9 * g.length());
                prop_assert_eq!(g.n() % 2, 0);
            }
        }
    }
}
