//! RMS misfit of the combined model with the intercept and slope solved in
//! closed form for each standing-wave candidate.

use swchan_core::MeasurementSet;

pub(crate) struct Projected {
    alpha_db: f64,
    beta: f64,
    rss: f64,
}

impl Projected {
    pub fn alpha_db(&self) -> f64 {
        self.alpha_db
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Precomputed regressors of one measurement set.
pub(crate) struct Objective {
    y: Vec<f64>,
    x: Vec<f64>,
    x_centered: Vec<f64>,
    x_mean: f64,
    sxx: f64,
    /// `d - d0` per sample.
    offsets: Vec<f64>,
    /// `d_mid - d0`, the phase reference used by the local search.
    mid_offset: f64,
}

impl Objective {
    pub fn new(m: &MeasurementSet) -> Self {
        let d0 = m.d0_m();
        let x: Vec<f64> = m.distances().map(|d| 10.0 * (d / d0).log10()).collect();
        let n = x.len() as f64;
        let x_mean = x.iter().sum::<f64>() / n;
        let x_centered: Vec<f64> = x.iter().map(|v| v - x_mean).collect();
        let sxx = x_centered.iter().map(|v| v * v).sum();
        let offsets: Vec<f64> = m.distances().map(|d| d - d0).collect();
        let mid_offset = 0.5 * (offsets[0] + offsets[offsets.len() - 1]);
        Self {
            y: m.path_losses().collect(),
            x,
            x_centered,
            x_mean,
            sxx,
            offsets,
            mid_offset,
        }
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn mid_offset(&self) -> f64 {
        self.mid_offset
    }

    pub fn rms(&self, rss: f64) -> f64 {
        (rss / self.len() as f64).sqrt()
    }

    /// Least-squares line through `y + gain` and its residual sum of squares.
    ///
    /// `gain(i)` is the standing-wave gain in dB at sample `i`.
    #[inline]
    pub fn project(&self, gain: impl Fn(usize) -> f64) -> Projected {
        let n = self.len() as f64;
        let mut z_sum = 0.0;
        let mut xz = 0.0;
        let mut z = Vec::with_capacity(self.y.len());
        for (i, (&y, &xc)) in self.y.iter().zip(&self.x_centered).enumerate() {
            let zi = y + gain(i);
            z_sum += zi;
            xz += xc * zi;
            z.push(zi);
        }
        let beta = xz / self.sxx;
        let alpha = z_sum / n - beta * self.x_mean;
        let rss = z
            .iter()
            .zip(&self.x)
            .map(|(zi, xi)| {
                let e = zi - alpha - beta * xi;
                e * e
            })
            .sum();
        Projected {
            alpha_db: alpha,
            beta,
            rss,
        }
    }

    /// Candidate with the phase referenced at `d0`.
    pub fn eval(&self, magnitude: f64, phase: f64, k: f64) -> Projected {
        let g2 = 1.0 + magnitude * magnitude;
        let two_g = 2.0 * magnitude;
        self.project(|i| 10.0 * (g2 + two_g * (2.0 * k * self.offsets[i] + phase).cos()).log10())
    }

    /// Candidate with the phase referenced at the middle of the span.
    pub fn eval_mid(&self, magnitude: f64, mid_phase: f64, k: f64) -> Projected {
        self.eval(magnitude, mid_phase - 2.0 * k * self.mid_offset, k)
    }

    /// Sum of squares for the plain floating-intercept line.
    pub fn rss_plain(&self) -> f64 {
        self.project(|_| 0.0).rss
    }

    /// Best `(rss, gamma index, phase index)` over the magnitude and phase
    /// grids at one `k`. Ties keep the smaller magnitude, then the smaller
    /// phase index.
    pub fn grid_at_k(&self, k: f64, gammas: &[f64], phases: &[f64]) -> (f64, usize, usize) {
        let (c, s): (Vec<f64>, Vec<f64>) = self
            .offsets
            .iter()
            .map(|u| {
                let t = 2.0 * k * u;
                (t.cos(), t.sin())
            })
            .unzip();
        let mut best = (f64::INFINITY, 0, 0);
        let mut cos_sum = vec![0.0; self.len()];
        for (pi, &phase) in phases.iter().enumerate() {
            let (cp, sp) = (phase.cos(), phase.sin());
            for i in 0..self.len() {
                cos_sum[i] = c[i] * cp - s[i] * sp;
            }
            for (gi, &g) in gammas.iter().enumerate() {
                let rss = if g == 0.0 {
                    self.rss_plain()
                } else {
                    let g2 = 1.0 + g * g;
                    let two_g = 2.0 * g;
                    self.project(|i| 10.0 * (g2 + two_g * cos_sum[i]).log10())
                        .rss
                };
                if rss < best.0 || (rss == best.0 && (gi, pi) < (best.1, best.2)) {
                    best = (rss, gi, pi);
                }
            }
        }
        best
    }
}

impl Projected {
    pub fn rss(&self) -> f64 {
        self.rss
    }
}
