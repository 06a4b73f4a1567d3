//! One-dimensional bracketed root finding and derivative-free minimisation.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Absolute residual tolerance for bracketed solves.
pub const RESIDUAL_TOL: f64 = 1e-12;
/// Iteration cap for bracketed solves.
pub const MAX_ITER: usize = 200;

/// Brent's method on `[a, b]`. `f(a)` and `f(b)` must have opposite signs
/// (or one of them vanish). Stops when `|f| <= ftol` or the bracket
/// collapses to rounding level.
pub fn brent(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, ftol: f64) -> Result<f64> {
    let (mut a, mut b) = (a, b);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.is_finite() && fb.is_finite()) {
        return Err(Error::SolverFailure("non-finite value at bracket end"));
    }
    if fa.signum() == fb.signum() {
        return Err(Error::SolverFailure("root is not bracketed"));
    }
    if fa.abs() < fb.abs() {
        core::mem::swap(&mut a, &mut b);
        core::mem::swap(&mut fa, &mut fb);
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut mflag = true;
    for _ in 0..MAX_ITER {
        if fb.abs() <= ftol {
            return Ok(b);
        }
        let xtol = 4.0 * f64::EPSILON * b.abs().max(1e-300);
        if (b - a).abs() <= xtol {
            return Ok(b);
        }
        let mut s = if fa != fc && fb != fc {
            a * fb * fc / ((fa - fb) * (fa - fc))
                + b * fa * fc / ((fb - fa) * (fb - fc))
                + c * fa * fb / ((fc - fa) * (fc - fb))
        } else {
            b - fb * (b - a) / (fb - fa)
        };
        let lo = (3.0 * a + b) / 4.0;
        let between = if lo < b { s > lo && s < b } else { s > b && s < lo };
        let bisect = !between
            || (mflag && (s - b).abs() >= (b - c).abs() / 2.0)
            || (!mflag && (s - b).abs() >= (c - d).abs() / 2.0)
            || (mflag && (b - c).abs() < xtol)
            || (!mflag && (c - d).abs() < xtol);
        if bisect {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        let fs = f(s);
        if !fs.is_finite() {
            return Err(Error::SolverFailure("non-finite value inside bracket"));
        }
        d = c;
        c = b;
        fc = fb;
        if fa.signum() != fs.signum() {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if fa.abs() < fb.abs() {
            core::mem::swap(&mut a, &mut b);
            core::mem::swap(&mut fa, &mut fb);
        }
    }
    if fb.abs() <= ftol.max(1e3 * f64::EPSILON) {
        Ok(b)
    } else {
        Err(Error::SolverFailure("Brent iteration cap reached"))
    }
}

/// Expand geometrically from `x0` in steps of `step` (growing ×2) until the
/// sign of `f` differs from `f(x0)`. Returns the bracket `(x0', x1)` tightest
/// around the sign change, or `None` after `max_steps` expansions.
pub fn expand_bracket(
    mut f: impl FnMut(f64) -> f64,
    x0: f64,
    step: f64,
    max_steps: usize,
) -> Option<(f64, f64)> {
    let f0 = f(x0);
    if !f0.is_finite() {
        return None;
    }
    if f0 == 0.0 {
        return Some((x0, x0));
    }
    let mut prev = x0;
    let mut h = step;
    for _ in 0..max_steps {
        let x = x0 + h;
        let fx = f(x);
        if !fx.is_finite() {
            return None;
        }
        if fx == 0.0 || fx.signum() != f0.signum() {
            return Some((prev, x));
        }
        prev = x;
        h *= 2.0;
    }
    None
}

/// Golden-section minimisation of `f` on `[a, b]`.
pub fn golden_min(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, iters: usize) -> (f64, f64) {
    const R: f64 = 0.618_033_988_749_894_8;
    let (mut a, mut b) = (a, b);
    let mut x1 = b - R * (b - a);
    let mut x2 = a + R * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - R * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + R * (b - a);
            f2 = f(x2);
        }
        if (b - a).abs() <= 2.0 * f64::EPSILON * (a.abs() + b.abs()) {
            break;
        }
    }
    // the ends of the original interval are candidates as well
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    for x in [a, b] {
        let fx = f(x);
        if fx < best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Nelder-Mead simplex minimisation from `x0` with initial edge `step`.
pub fn nelder_mead(
    mut f: impl FnMut(&[f64]) -> f64,
    x0: &[f64],
    step: f64,
    max_evals: usize,
    ftol: f64,
) -> (Vec<f64>, f64) {
    let n = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step;
        let fx = f(&x);
        simplex.push((x, fx));
    }
    let mut evals = n + 1;
    while evals < max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0].1;
        let worst = simplex[n].1;
        if best <= ftol || (worst - best).abs() <= f64::EPSILON * best.abs() {
            break;
        }
        let centroid: Vec<f64> = (0..n)
            .map(|j| simplex[..n].iter().map(|s| s.0[j]).sum::<f64>() / n as f64)
            .collect();
        let along = |t: f64, w: &[f64]| -> Vec<f64> {
            centroid.iter().zip(w).map(|(c, x)| c + t * (x - c)).collect()
        };
        let xr = along(-1.0, &simplex[n].0);
        let fr = f(&xr);
        evals += 1;
        if fr < simplex[0].1 {
            let xe = along(-2.0, &simplex[n].0);
            let fe = f(&xe);
            evals += 1;
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
        } else {
            let xc = along(0.5, &simplex[n].0);
            let fc = f(&xc);
            evals += 1;
            if fc < simplex[n].1 {
                simplex[n] = (xc, fc);
            } else {
                let x_best = simplex[0].0.clone();
                for s in simplex.iter_mut().skip(1) {
                    let x: Vec<f64> = x_best.iter().zip(&s.0).map(|(b, x)| b + 0.5 * (x - b)).collect();
                    let fx = f(&x);
                    *s = (x, fx);
                }
                evals += n;
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, fx) = simplex.swap_remove(0);
    (x, fx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brent_finds_cubic_root() {
        let r = brent(|x| x * x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - libm::cbrt(2.0)).abs() < 1e-12);
    }

    #[test]
    fn brent_rejects_unbracketed() {
        assert!(brent(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn expansion_brackets_a_distant_root() {
        let (a, b) = expand_bracket(|x| x - 37.0, 0.0, 0.5, 20).unwrap();
        assert!(a <= 37.0 && 37.0 <= b);
        assert!(expand_bracket(|x| x * x + 1.0, 0.0, 0.5, 10).is_none());
    }

    #[test]
    fn golden_locates_minimum() {
        let (x, fx) = golden_min(|x| (x - 0.3).abs(), -1.0, 1.0, 200);
        assert!((x - 0.3).abs() < 1e-12 && fx < 1e-12);
    }

    #[test]
    fn nelder_mead_rosenbrock() {
        let (x, fx) = nelder_mead(
            |p| (1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2),
            &[-1.0, 1.0],
            0.5,
            5000,
            0.0,
        );
        assert!(fx < 1e-10, "{fx}");
        assert!((x[0] - 1.0).abs() < 1e-4);
    }
}
