//! Powell's direction-set method with golden-section line searches.
//!
//! The first sweep is plain coordinate descent along the supplied scaled
//! axes; later sweeps swap in the net displacement of the previous sweep
//! when that direction pays off (Numerical Recipes criterion).

const GOLDEN: f64 = 1.618_033_988_749_895;
const LINE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowellOutcome<const N: usize> {
    pub x: [f64; N],
    pub value: f64,
    pub iterations: usize,
}

/// Minimizes `f` starting at `x0`.
///
/// `scales` are the initial coordinate steps. Stops after `max_iter` sweeps,
/// or after a sweep that lowers `f` by less than `tol`. Points where `f` is
/// not finite are treated as infeasible.
pub fn powell_minimize<const N: usize>(
    f: impl Fn(&[f64; N]) -> f64,
    x0: [f64; N],
    scales: [f64; N],
    max_iter: usize,
    tol: f64,
) -> PowellOutcome<N> {
    let eval = |x: &[f64; N]| {
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    let mut dirs = [[0.0; N]; N];
    for (i, d) in dirs.iter_mut().enumerate() {
        d[i] = scales[i];
    }
    let mut x = x0;
    let mut fx = eval(&x);
    let mut iterations = 0;

    while iterations < max_iter {
        iterations += 1;
        let x_start = x;
        let f_start = fx;
        let (mut big_drop, mut big_index) = (0.0, 0);
        for (i, dir) in dirs.iter().enumerate() {
            let before = fx;
            let (t, ft) = line_minimize(|t| eval(&along(&x, dir, t)), fx);
            if ft < fx {
                x = along(&x, dir, t);
                fx = ft;
            }
            if before - fx > big_drop {
                big_drop = before - fx;
                big_index = i;
            }
        }
        // inf - inf when started outside the feasible region
        let gained = f_start - fx;
        if gained.is_nan() || gained < tol {
            break;
        }
        let mut shift = [0.0; N];
        for i in 0..N {
            shift[i] = x[i] - x_start[i];
        }
        let f_ext = eval(&along(&x, &shift, 1.0));
        if f_ext < f_start {
            let t = 2.0 * (f_start - 2.0 * fx + f_ext) * (f_start - fx - big_drop).powi(2)
                - big_drop * (f_start - f_ext).powi(2);
            if t < 0.0 {
                let (s, fs) = line_minimize(|s| eval(&along(&x, &shift, s)), fx);
                if fs < fx {
                    x = along(&x, &shift, s);
                    fx = fs;
                }
                dirs[big_index] = dirs[N - 1];
                dirs[N - 1] = shift;
            }
        }
    }
    PowellOutcome {
        x,
        value: fx,
        iterations,
    }
}

fn along<const N: usize>(x: &[f64; N], dir: &[f64; N], t: f64) -> [f64; N] {
    let mut out = *x;
    for i in 0..N {
        out[i] += t * dir[i];
    }
    out
}

/// Minimizes `phi` near `t = 0`, where `phi(0) = f0`. Returns `(0, f0)`
/// when nothing lower is found.
fn line_minimize(phi: impl Fn(f64) -> f64, f0: f64) -> (f64, f64) {
    let (fp, fm) = (phi(1.0), phi(-1.0));
    let (lo, hi) = if fp >= f0 && fm >= f0 {
        (-1.0, 1.0)
    } else {
        // expand downhill until the function turns up
        let sign = if fp <= fm { 1.0 } else { -1.0 };
        let (mut a, mut b) = (0.0, sign);
        let mut fb = fp.min(fm);
        let mut bracket = None;
        for _ in 0..60 {
            let c = b + GOLDEN * (b - a);
            let fc = phi(c);
            if fc >= fb {
                bracket = Some((a, c));
                break;
            }
            a = b;
            b = c;
            fb = fc;
        }
        match bracket {
            Some((a, c)) => (a.min(c), a.max(c)),
            None => return (b, fb),
        }
    };
    let (t, ft) = golden_section(&phi, lo, hi);
    if ft < f0 {
        (t, ft)
    } else {
        (0.0, f0)
    }
}

fn golden_section(phi: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let r = GOLDEN - 1.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (phi(c), phi(d));
    let width = b - a;
    while b - a > LINE_TOL * width.max(1.0) {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = phi(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = phi(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}
