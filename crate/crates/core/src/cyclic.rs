//! Symmetric cyclic tridiagonal kernels: the periodic finite-difference
//! Hamiltonian has constant off-diagonal entries plus matching corner
//! entries, and everything here exploits that shape.
//!
//! The workhorse is a bordered LDL^T factorization eliminating sites
//! `0..n-1` first and the corner-coupled last site at the end. It yields
//! eigenvalue counts (Sylvester inertia / Sturm sequence), linear solves in
//! `O(n)`, and shifted solves for inverse iteration.

/// `A = tridiag(diag) + off * (shift by one, cyclically)`: entries
/// `A[i][i] = diag[i]`, `A[i][i+-1 mod n] = off`.
#[derive(Debug, Clone)]
pub struct CyclicTridiag {
    pub diag: Vec<f64>,
    pub off: f64,
}

impl CyclicTridiag {
    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// `y = A x`.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        let n = self.n();
        let t = self.off;
        y[0] = self.diag[0] * x[0] + t * (x[n - 1] + x[1]);
        for i in 1..n - 1 {
            y[i] = self.diag[i] * x[i] + t * (x[i - 1] + x[i + 1]);
        }
        y[n - 1] = self.diag[n - 1] * x[n - 1] + t * (x[n - 2] + x[0]);
    }

    /// Gershgorin bounds containing the whole spectrum.
    pub fn eigenvalue_bounds(&self) -> (f64, f64) {
        let r = 2.0 * self.off.abs();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &d in &self.diag {
            lo = lo.min(d - r);
            hi = hi.max(d + r);
        }
        (lo, hi)
    }

    fn pivot_floor(&self) -> f64 {
        let (lo, hi) = self.eigenvalue_bounds();
        let scale = lo.abs().max(hi.abs()).max(1.0);
        (f64::EPSILON * f64::EPSILON * scale).max(f64::MIN_POSITIVE)
    }

    /// Number of eigenvalues strictly below `mu` (count of negative pivots
    /// of the bordered LDL^T of `A - mu`).
    pub fn count_below(&self, mu: f64) -> usize {
        match self.count_below_fast(mu) {
            Some(c) => c,
            None => self.count_below_scaled(mu),
        }
    }

    /// Plain-f64 Sturm count; returns `None` when the border fill-in
    /// overflows and the scaled path is needed.
    fn count_below_fast(&self, mu: f64) -> Option<usize> {
        let n = self.n();
        let t = self.off;
        let pivmin = self.pivot_floor();
        let mut count = 0usize;
        let mut d = self.diag[0] - mu;
        if d.abs() < pivmin {
            d = -pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
        let mut f = t / d; // border fill of the last row
        let mut schur = f * f * d;
        for i in 1..n - 1 {
            let mut di = (self.diag[i] - mu) - t * t / d;
            if di.abs() < pivmin {
                di = -pivmin;
            }
            if di < 0.0 {
                count += 1;
            }
            let v = if i == n - 2 { t } else { 0.0 };
            f = (v - t * f) / di;
            schur += f * f * di;
            d = di;
        }
        let last = (self.diag[n - 1] - mu) - schur;
        if !last.is_finite() {
            return None;
        }
        if last < 0.0 || last.abs() < pivmin {
            count += 1;
        }
        Some(count)
    }

    /// Overflow-safe Sturm count keeping the border fill and the Schur sum
    /// in mantissa/exponent form. Slower; only used when the fast path
    /// detects overflow (strong transfer-matrix growth at the shift).
    fn count_below_scaled(&self, mu: f64) -> usize {
        let n = self.n();
        let t = self.off;
        let pivmin = self.pivot_floor();
        let mut count = 0usize;
        let mut d = self.diag[0] - mu;
        if d.abs() < pivmin {
            d = -pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
        let mut f = Scaled::from(t / d);
        let mut schur = Scaled::zero();
        schur.add(&f.sq_times(d));
        for i in 1..n - 1 {
            let mut di = (self.diag[i] - mu) - t * t / d;
            if di.abs() < pivmin {
                di = -pivmin;
            }
            if di < 0.0 {
                count += 1;
            }
            // f <- (v - t*f)/di with v nonzero only at the junction
            f.scale_by(-t / di);
            if i == n - 2 {
                f.add(&Scaled::from(t / di));
            }
            schur.add(&f.sq_times(di));
            d = di;
        }
        let mut last = Scaled::from(self.diag[n - 1] - mu);
        schur.negate();
        last.add(&schur);
        if last.is_negative() || last.magnitude_below(pivmin) {
            count += 1;
        }
        count
    }

    /// Bordered LDL^T of `A - mu` for linear solves. Near-singular pivots
    /// are floored so shifted solves at an eigenvalue stay usable for
    /// inverse iteration.
    pub fn factor(&self, mu: f64) -> Option<BorderedFactor> {
        let n = self.n();
        let t = self.off;
        let pivmin = self.pivot_floor();
        let mut d = vec![0.0; n];
        let mut l = vec![0.0; n.saturating_sub(2)];
        let mut f = vec![0.0; n - 1];
        d[0] = self.diag[0] - mu;
        if d[0].abs() < pivmin {
            d[0] = -pivmin;
        }
        f[0] = t / d[0];
        let mut schur = f[0] * f[0] * d[0];
        for i in 1..n - 1 {
            l[i - 1] = t / d[i - 1];
            let mut di = (self.diag[i] - mu) - t * l[i - 1];
            if di.abs() < pivmin {
                di = -pivmin;
            }
            d[i] = di;
            let v = if i == n - 2 { t } else { 0.0 };
            f[i] = (v - t * f[i - 1]) / di;
            schur += f[i] * f[i] * di;
        }
        let mut last = (self.diag[n - 1] - mu) - schur;
        if !last.is_finite() || f.iter().any(|x| !x.is_finite()) {
            return None;
        }
        if last.abs() < pivmin {
            last = -pivmin;
        }
        d[n - 1] = last;
        Some(BorderedFactor { d, l, f })
    }
}

/// Factorization produced by [`CyclicTridiag::factor`].
#[derive(Debug, Clone)]
pub struct BorderedFactor {
    d: Vec<f64>,
    l: Vec<f64>,
    f: Vec<f64>,
}

impl BorderedFactor {
    /// Solve `(A - mu) x = b` in place.
    pub fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.d.len();
        // L z = b
        for i in 1..n - 1 {
            b[i] -= self.l[i - 1] * b[i - 1];
        }
        let mut border = 0.0;
        for i in 0..n - 1 {
            border += self.f[i] * b[i];
        }
        b[n - 1] -= border;
        // D y = z
        for i in 0..n {
            b[i] /= self.d[i];
        }
        // L^T x = y
        b[n - 2] -= self.f[n - 2] * b[n - 1];
        for i in (0..n - 2).rev() {
            b[i] -= self.l[i] * b[i + 1] + self.f[i] * b[n - 1];
        }
    }
}

/// Small mantissa/exponent pair for the overflow-safe Sturm path.
#[derive(Debug, Clone, Copy)]
struct Scaled {
    mant: f64,
    exp2: i64,
}

impl Scaled {
    fn zero() -> Self {
        Scaled { mant: 0.0, exp2: 0 }
    }

    fn from(x: f64) -> Self {
        let mut s = Scaled { mant: x, exp2: 0 };
        s.renorm();
        s
    }

    fn renorm(&mut self) {
        if self.mant == 0.0 || !self.mant.is_finite() {
            self.exp2 = 0;
            return;
        }
        let e = self.mant.abs().log2().floor() as i64;
        if e.abs() > 256 {
            self.mant = ldexp(self.mant, -e);
            self.exp2 += e;
        }
    }

    fn scale_by(&mut self, x: f64) {
        self.mant *= x;
        self.renorm();
    }

    fn negate(&mut self) {
        self.mant = -self.mant;
    }

    /// Value of `self^2 * x` as a scaled number.
    fn sq_times(&self, x: f64) -> Scaled {
        let mut s = Scaled {
            mant: self.mant * self.mant,
            exp2: 2 * self.exp2,
        };
        s.renorm();
        s.scale_by(x);
        s
    }

    fn add(&mut self, other: &Scaled) {
        if other.mant == 0.0 {
            return;
        }
        if self.mant == 0.0 {
            *self = *other;
            return;
        }
        let diff = other.exp2 - self.exp2;
        if diff > 1074 {
            *self = *other;
        } else if diff >= -1074 {
            self.mant += ldexp(other.mant, diff);
        }
        self.renorm();
    }

    fn is_negative(&self) -> bool {
        self.mant < 0.0
    }

    fn magnitude_below(&self, threshold: f64) -> bool {
        if self.mant == 0.0 {
            return true;
        }
        let log_mag = self.mant.abs().log2() + self.exp2 as f64;
        log_mag < threshold.log2()
    }
}

fn ldexp(x: f64, e: i64) -> f64 {
    let mut y = x;
    let mut rem = e;
    while rem > 1000 {
        y *= 2f64.powi(1000);
        rem -= 1000;
    }
    while rem < -1000 {
        y *= 2f64.powi(-1000);
        rem += 1000;
    }
    y * 2f64.powi(rem as i32)
}
