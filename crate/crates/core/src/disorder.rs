//! Ensembles of 1D random potentials with controlled value statistics and
//! spatial correlations.
//!
//! All kinds are built by Fourier filtering of white Gaussian noise on the
//! periodic grid, so correlations wrap around circularly. The wrap-around
//! contribution is `O(exp(-(L/2)^2 / 2))` for the Gaussian-correlated kinds
//! and negligible for `L >= 50` correlation lengths, which every supported
//! protocol satisfies.
//!
//! * `SpeckleGauss` — a circular complex Gaussian field is low-pass filtered
//!   with the Gaussian amplitude filter `exp(-k^2/2)`, giving the field
//!   autocorrelation `exp(-x^2/4)`; the potential is the scaled intensity, so
//!   values are exponentially distributed with mean `V0`, non-negative, and
//!   the covariance is `V0^2 exp(-x^2/2)`.
//! * `SpeckleSinc` — same construction with a flat filter of half-width 1
//!   (field autocorrelation `sinc(x)`), giving covariance `V0^2 sinc^2(x)`.
//!   A lattice momentum landing exactly on the cutoff enters with weight 1/2.
//! * `GaussGauss` — real white noise filtered with `exp(-k^2/4)` and scaled
//!   to zero mean and standard deviation `V0`, giving a Gaussian marginal and
//!   covariance `V0^2 exp(-x^2/2)`.
//!
//! Filters are normalized analytically (not per realization), so the
//! ensemble mean is exact and per-realization fluctuations stay unbiased.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fft::{fft_in_place, ifft_in_place, signed_index};
use crate::grid::Grid;
use crate::histogram::{Bins, Histogram};

/// Disorder family and strength. `v0` is the single energy scale: the mean
/// for the speckle kinds and the standard deviation for `GaussGauss`. In the
/// units used here the dimensionless disorder strength `eta` equals `v0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum DisorderKind {
    SpeckleGauss { v0: f64 },
    SpeckleSinc { v0: f64 },
    GaussGauss { v0: f64 },
}

impl DisorderKind {
    pub fn v0(&self) -> f64 {
        match *self {
            DisorderKind::SpeckleGauss { v0 }
            | DisorderKind::SpeckleSinc { v0 }
            | DisorderKind::GaussGauss { v0 } => v0,
        }
    }

    pub fn is_speckle(&self) -> bool {
        !matches!(self, DisorderKind::GaussGauss { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            DisorderKind::SpeckleGauss { .. } => "speckle-gauss",
            DisorderKind::SpeckleSinc { .. } => "speckle-sinc",
            DisorderKind::GaussGauss { .. } => "gauss-gauss",
        }
    }

    pub fn from_name(name: &str, v0: f64) -> Result<Self> {
        match name {
            "speckle-gauss" => Ok(DisorderKind::SpeckleGauss { v0 }),
            "speckle-sinc" => Ok(DisorderKind::SpeckleSinc { v0 }),
            "gauss-gauss" => Ok(DisorderKind::GaussGauss { v0 }),
            _ => Err(Error::parameter(format!(
                "unknown disorder kind '{name}' (expected speckle-gauss, speckle-sinc, or gauss-gauss)"
            ))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let v0 = self.v0();
        if !(v0 > 0.0) || !v0.is_finite() {
            return Err(Error::parameter(format!(
                "disorder strength must be positive and finite, got {v0}"
            )));
        }
        Ok(())
    }
}

/// One realization of the random potential.
#[derive(Debug, Clone)]
pub struct Potential {
    pub grid: Grid,
    pub samples: Vec<f64>,
    pub kind: DisorderKind,
    pub seed: u64,
}

impl Potential {
    pub fn min(&self) -> f64 {
        self.samples.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.samples
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.samples.len() as f64
    }
}

/// Derive the seed for realization `index` of a campaign from the base seed.
/// SplitMix64-style avalanche mix: consecutive indices give statistically
/// independent, reproducible streams.
pub fn mix_seed(base_seed: u64, index: u64) -> u64 {
    let mut z = base_seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Amplitude filter of each kind on the momentum lattice.
fn filter_amplitude(kind: DisorderKind, k: f64) -> f64 {
    match kind {
        DisorderKind::SpeckleGauss { .. } => (-0.5 * k * k).exp(),
        DisorderKind::SpeckleSinc { .. } => {
            let a = k.abs();
            if (a - 1.0).abs() <= 1e-12 {
                0.5
            } else if a < 1.0 {
                1.0
            } else {
                0.0
            }
        }
        DisorderKind::GaussGauss { .. } => (-0.25 * k * k).exp(),
    }
}

/// Generate one realization. Identical `(grid, kind, seed)` inputs produce
/// bit-identical samples.
///
/// Draw order from `ChaCha8Rng::seed_from_u64(seed)`: the speckle kinds take
/// `2N` standard normals (real then imaginary part per site), `GaussGauss`
/// takes `N`.
pub fn gen_potential(grid: Grid, kind: DisorderKind, seed: u64) -> Result<Potential> {
    kind.validate()?;
    let n = grid.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = StandardNormal;

    let samples = if kind.is_speckle() {
        let mut field: Vec<Complex64> = (0..n)
            .map(|_| {
                let re: f64 = normal.sample(&mut rng);
                let im: f64 = normal.sample(&mut rng);
                Complex64::new(re, im)
            })
            .collect();
        fft_in_place(&mut field);
        let mut filter_power = 0.0;
        for (q, c) in field.iter_mut().enumerate() {
            let k = grid.momentum(signed_index(q, n));
            let f = filter_amplitude(kind, k);
            filter_power += f * f;
            *c *= f;
        }
        ifft_in_place(&mut field);
        // field[m] now holds N * a_m with E|a_m|^2 = (2/N) * sum_q f_q^2
        let mean_intensity = 2.0 * n as f64 * filter_power;
        let scale = kind.v0() / mean_intensity;
        field.iter().map(|a| a.norm_sqr() * scale).collect()
    } else {
        let mut noise: Vec<Complex64> = (0..n)
            .map(|_| {
                let x: f64 = normal.sample(&mut rng);
                Complex64::new(x, 0.0)
            })
            .collect();
        fft_in_place(&mut noise);
        let mut filter_power = 0.0;
        for (q, c) in noise.iter_mut().enumerate() {
            let k = grid.momentum(signed_index(q, n));
            let f = filter_amplitude(kind, k);
            filter_power += f * f;
            *c *= f;
        }
        ifft_in_place(&mut noise);
        // noise[m] holds N * b_m with Var(b_m) = (1/N) * sum_q f_q^2
        let std = (n as f64 * filter_power).sqrt();
        let scale = kind.v0() / std;
        noise.iter().map(|b| b.re * scale).collect()
    };

    Ok(Potential {
        grid,
        samples,
        kind,
        seed,
    })
}

/// Pooled value histogram and spatial autocovariance of an ensemble.
#[derive(Debug, Clone)]
pub struct DisorderStats {
    pub histogram: Histogram,
    /// Autocovariance `g(x) = <V(x')V(x'+x)> - <V>^2` for `x = m*step`,
    /// `m = 0 ..= N/2`.
    pub correlation: Vec<f64>,
    pub realizations: u64,
}

/// Streaming accumulator behind [`estimate_stats`]; also used by campaign
/// tasks so ensembles never need to be held in memory.
#[derive(Debug, Clone)]
pub struct StatsAccumulator {
    grid: Grid,
    kind: DisorderKind,
    histogram: Histogram,
    corr_sum: Vec<f64>,
    mean_sum: f64,
    count: u64,
}

impl StatsAccumulator {
    pub fn new(grid: Grid, kind: DisorderKind, bins: Bins) -> Self {
        StatsAccumulator {
            grid,
            kind,
            histogram: Histogram::new(bins),
            corr_sum: vec![0.0; grid.n()],
            mean_sum: 0.0,
            count: 0,
        }
    }

    pub fn push(&mut self, p: &Potential) -> Result<()> {
        if p.grid != self.grid || p.kind != self.kind {
            return Err(Error::MixedEnsemble);
        }
        for &v in &p.samples {
            self.histogram.add_sample(v);
        }
        // Circular autocorrelation via |FFT|^2.
        let n = self.grid.n();
        let mut buf: Vec<Complex64> = p.samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        fft_in_place(&mut buf);
        for c in buf.iter_mut() {
            *c = Complex64::new(c.norm_sqr(), 0.0);
        }
        ifft_in_place(&mut buf);
        let inv = 1.0 / (n as f64 * n as f64);
        for (s, c) in self.corr_sum.iter_mut().zip(&buf) {
            *s += c.re * inv;
        }
        self.mean_sum += p.mean();
        self.count += 1;
        Ok(())
    }

    pub fn merge(&mut self, other: &StatsAccumulator) -> Result<()> {
        if other.grid != self.grid || other.kind != self.kind {
            return Err(Error::MixedEnsemble);
        }
        self.histogram.merge(&other.histogram)?;
        for (a, b) in self.corr_sum.iter_mut().zip(&other.corr_sum) {
            *a += b;
        }
        self.mean_sum += other.mean_sum;
        self.count += other.count;
        Ok(())
    }

    pub fn finish(self) -> DisorderStats {
        let count = self.count.max(1) as f64;
        let mean = self.mean_sum / count;
        let half = self.grid.n() / 2;
        let correlation = (0..=half)
            .map(|m| self.corr_sum[m] / count - mean * mean)
            .collect();
        DisorderStats {
            histogram: self.histogram,
            correlation,
            realizations: self.count,
        }
    }
}

/// Pooled statistics of an ensemble sharing one grid and kind. The value
/// histogram uses `bins` when given, otherwise 200 bins spanning the pooled
/// range. The covariance is reported for separations in `[0, L/2]`.
pub fn estimate_stats(ensemble: &[Potential], bins: Option<Bins>) -> Result<DisorderStats> {
    let first = ensemble
        .first()
        .ok_or_else(|| Error::parameter("empty ensemble"))?;
    let bins = match bins {
        Some(b) => b,
        None => {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for p in ensemble {
                lo = lo.min(p.min());
                hi = hi.max(p.max());
            }
            // A constant ensemble still needs a nonempty range.
            let pad = (hi - lo).max(1e-12 * hi.abs().max(1.0)) * 1e-3;
            Bins::new(lo - pad, hi + pad, 200)?
        }
    };
    let mut acc = StatsAccumulator::new(first.grid, first.kind, bins);
    for p in ensemble {
        acc.push(p)?;
    }
    Ok(acc.finish())
}
