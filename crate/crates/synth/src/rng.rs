use std::f64::consts::TAU;

/// SplitMix64 (Steele, Lea and Flood, 2014).
///
/// Each step adds `0x9E3779B97F4A7C15` to the 64-bit state and returns the
/// state passed through the `mix64` finalizer:
///
/// ```text
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// z =  z ^ (z >> 31)
/// ```
///
/// All arithmetic wraps modulo 2^64. The seed is the initial state.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, 1)`: the top 53 bits scaled by 2^-53.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal draw by the Box-Muller cosine branch.
    ///
    /// Consumes two uniforms per call, `u1` first: `u1 = 1 - next_f64()`
    /// (so `u1` is in `(0, 1]`), `u2 = next_f64()`, and returns
    /// `sqrt(-2 ln u1) * cos(2π u2)`. The sine branch is discarded.
    pub fn next_gaussian(&mut self) -> f64 {
        let u1 = 1.0 - self.next_f64();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (TAU * u2).cos()
    }
}
