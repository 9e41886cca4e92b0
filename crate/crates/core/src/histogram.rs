//! Uniform-bin histograms with weighted accumulation. Out-of-range mass is
//! tracked separately so normalization checks stay exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform bin layout over `[lo, lo + count*width)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bins {
    pub lo: f64,
    pub width: f64,
    pub count: usize,
}

impl Bins {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if !(hi > lo) || count == 0 {
            return Err(Error::parameter(format!(
                "bad bin layout: lo={lo}, hi={hi}, count={count}"
            )));
        }
        Ok(Bins {
            lo,
            width: (hi - lo) / count as f64,
            count,
        })
    }

    pub fn hi(&self) -> f64 {
        self.lo + self.width * self.count as f64
    }

    /// Bin index of `x`, or `None` when out of range.
    pub fn index_of(&self, x: f64) -> Option<usize> {
        if x < self.lo {
            return None;
        }
        let i = ((x - self.lo) / self.width) as usize;
        if i < self.count {
            Some(i)
        } else {
            None
        }
    }

    pub fn center(&self, i: usize) -> f64 {
        self.lo + (i as f64 + 0.5) * self.width
    }

    pub fn centers(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.center(i)).collect()
    }
}

/// Weighted histogram; densities are per unit of the binned variable.
#[derive(Debug, Clone)]
pub struct Histogram {
    pub bins: Bins,
    weights: Vec<f64>,
    below: f64,
    above: f64,
    samples: u64,
}

impl Histogram {
    pub fn new(bins: Bins) -> Self {
        Histogram {
            weights: vec![0.0; bins.count],
            bins,
            below: 0.0,
            above: 0.0,
            samples: 0,
        }
    }

    pub fn add(&mut self, x: f64, w: f64) {
        match self.bins.index_of(x) {
            Some(i) => self.weights[i] += w,
            None if x < self.bins.lo => self.below += w,
            None => self.above += w,
        }
        self.samples += 1;
    }

    pub fn add_sample(&mut self, x: f64) {
        self.add(x, 1.0);
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn samples(&self) -> u64 {
        self.samples
    }

    /// Total accumulated weight including out-of-range mass.
    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum::<f64>() + self.below + self.above
    }

    /// Mass that fell outside the bin range.
    pub fn overflow(&self) -> (f64, f64) {
        (self.below, self.above)
    }

    /// Density normalized so the in-range integral plus overflow equals 1.
    /// Signed weights are normalized by the signed total.
    pub fn density(&self) -> Vec<f64> {
        let total = self.total_weight();
        if total == 0.0 {
            return vec![0.0; self.bins.count];
        }
        let scale = 1.0 / (total * self.bins.width);
        self.weights.iter().map(|w| w * scale).collect()
    }

    /// Mean of the binned variable from bin centers (in-range mass only).
    pub fn mean(&self) -> f64 {
        let mut m = 0.0;
        let mut w_tot = 0.0;
        for (i, w) in self.weights.iter().enumerate() {
            m += w * self.bins.center(i);
            w_tot += w;
        }
        if w_tot == 0.0 {
            0.0
        } else {
            m / w_tot
        }
    }

    pub fn merge(&mut self, other: &Histogram) -> Result<()> {
        if self.bins != other.bins {
            return Err(Error::parameter("histogram bin layouts differ"));
        }
        for (a, b) in self.weights.iter_mut().zip(&other.weights) {
            *a += b;
        }
        self.below += other.below;
        self.above += other.above;
        self.samples += other.samples;
        Ok(())
    }
}

/// L1 distance between two densities on a shared bin layout.
pub fn l1_distance(bins: &Bins, a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .sum::<f64>()
        * bins.width
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn density_integrates_to_one() {
        let bins = Bins::new(0.0, 10.0, 20).unwrap();
        let mut h = Histogram::new(bins);
        for i in 0..1000 {
            h.add_sample((i as f64) * 0.01);
        }
        let integral: f64 = h.density().iter().sum::<f64>() * bins.width;
        assert!((integral - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_samples_land_in_one_bin() {
        let bins = Bins::new(0.0, 1.0, 10).unwrap();
        let mut h = Histogram::new(bins);
        for _ in 0..50 {
            h.add_sample(0.42);
        }
        let d = h.density();
        let nonzero: Vec<usize> = (0..10).filter(|&i| d[i] != 0.0).collect();
        assert_eq!(nonzero, vec![4]);
    }

    #[test]
    fn overflow_is_tracked() {
        let bins = Bins::new(0.0, 1.0, 4).unwrap();
        let mut h = Histogram::new(bins);
        h.add(-1.0, 0.25);
        h.add(2.0, 0.5);
        h.add(0.5, 0.25);
        assert_eq!(h.overflow(), (0.25, 0.5));
        assert!((h.total_weight() - 1.0).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn merge_matches_pooled(xs in prop::collection::vec(-5.0f64..5.0, 1..200), split in 0usize..200) {
            let bins = Bins::new(-5.0, 5.0, 16).unwrap();
            let split = split.min(xs.len());
            let mut h1 = Histogram::new(bins);
            let mut h2 = Histogram::new(bins);
            let mut pooled = Histogram::new(bins);
            for (i, &x) in xs.iter().enumerate() {
                if i < split { h1.add_sample(x) } else { h2.add_sample(x) }
                pooled.add_sample(x);
            }
            h1.merge(&h2).unwrap();
            for (a, b) in h1.weights().iter().zip(pooled.weights()) {
                prop_assert!((a - b).abs() < 1e-12);
            }
        }
    }
}
