use num_complex::Complex64;
use swchan_core::ComplexReflection;

/// Net voltage of the forward and reflected waves and its squared magnitude.
///
/// `V_f = e^{-ik(d-d0)} A`, `V_r = G e^{ik(d-d0)} A`, `V = V_f + V_r` and
/// `|V|^2 = V conj(V)`, each evaluated as written with no algebraic
/// simplification.
pub fn oracle_standing_wave(
    gamma: &ComplexReflection,
    k: f64,
    d: f64,
    d0: f64,
    a: Complex64,
) -> (Complex64, f64) {
    let x = d - d0;
    let g = Complex64::from_polar(gamma.magnitude(), gamma.phase_rad());
    let v_f = Complex64::from_polar(1.0, -k * x) * a;
    let v_r = g * Complex64::from_polar(1.0, k * x) * a;
    let v_net = v_f + v_r;
    (v_net, (v_net * v_net.conj()).re)
}
