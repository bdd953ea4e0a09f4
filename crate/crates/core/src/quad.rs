//! Quadrature primitives: tanh-sinh (double-exponential) rules and an
//! adaptive Gauss-Kronrod integrator for complex-valued integrands of one
//! real variable.

use crate::error::EvalError;
use crate::Cplx;
use serde::{Deserialize, Serialize};

/// Controls evaluation of the Bessel-type integral representations.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Integration cutoff for the hyperbolic variable `t`.
    pub max_t: f64,
    /// Node budget per evaluation.
    pub node_count: usize,
    /// Requested relative error.
    pub target_rel_err: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { max_t: 60.0, node_count: 4096, target_rel_err: 1e-12 }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<(), EvalError> {
        if !(self.max_t > 0.0) {
            return Err(EvalError::domain("QuadratureSpec", "max_t must be positive"));
        }
        if !(self.target_rel_err > 0.0 && self.target_rel_err <= 1e-4) {
            return Err(EvalError::domain(
                "QuadratureSpec",
                "target_rel_err must lie in (0, 1e-4]",
            ));
        }
        Ok(())
    }
}

/// Integral value together with the achieved-error estimate.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Cplx,
    pub est_error: f64,
    pub evals: usize,
}

/// Tanh-sinh quadrature of `f` on the finite interval `[a, b]`.
///
/// Levels are halved until the relative change drops below `rel_tol` or the
/// node budget is exhausted; the last inter-level difference is reported as
/// the error estimate. Handles integrable endpoint singularities.
pub fn tanh_sinh<F: FnMut(f64) -> Cplx>(
    mut f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    max_nodes: usize,
) -> QuadResult {
    let c = 0.5 * (a + b);
    let hw = 0.5 * (b - a);
    if hw == 0.0 {
        return QuadResult { value: Cplx::new(0.0, 0.0), est_error: 0.0, evals: 0 };
    }
    const T_MAX: f64 = 3.9;
    let node = |t: f64| -> (f64, f64) {
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        let x = c + hw * u.tanh();
        let w = hw * std::f64::consts::FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
        (x, w)
    };
    let mut evals = 0usize;
    let mut eval = |x: f64, w: f64, f: &mut F| -> Cplx {
        evals += 1;
        if w == 0.0 || !w.is_finite() {
            return Cplx::new(0.0, 0.0);
        }
        let v = f(x);
        if v.is_finite() {
            v * w
        } else {
            Cplx::new(0.0, 0.0)
        }
    };

    let mut h = 1.0f64;
    // level 0
    let (x0, w0) = node(0.0);
    let mut sum = eval(x0, w0, &mut f);
    let mut k = 1;
    while (k as f64) * h <= T_MAX {
        let t = k as f64 * h;
        let (xp, wp) = node(t);
        let (xm, wm) = node(-t);
        sum += eval(xp, wp, &mut f) + eval(xm, wm, &mut f);
        k += 1;
    }
    let mut value = sum * h;
    let mut est = f64::INFINITY;
    for _level in 0..12 {
        if evals >= max_nodes {
            break;
        }
        h *= 0.5;
        // midpoints only: odd multiples of the new h
        let mut add = Cplx::new(0.0, 0.0);
        let mut k = 1;
        while (k as f64) * h <= T_MAX {
            let t = k as f64 * h;
            let (xp, wp) = node(t);
            let (xm, wm) = node(-t);
            add += eval(xp, wp, &mut f) + eval(xm, wm, &mut f);
            k += 2;
        }
        let new_value = value * 0.5 + add * h;
        est = (new_value - value).norm();
        value = new_value;
        let scale = value.norm().max(1e-300);
        if est <= rel_tol * scale {
            break;
        }
    }
    QuadResult { value, est_error: est, evals }
}

// Gauss-Kronrod 7-15 pair (QUADPACK dqk15 constants).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15<F: FnMut(f64) -> Cplx>(f: &mut F, a: f64, b: f64) -> (Cplx, f64) {
    let c = 0.5 * (a + b);
    let hw = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = hw * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        kron += (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    let kron = kron * hw;
    let gauss = gauss * hw;
    (kron, (kron - gauss).norm())
}

/// Adaptive Gauss-Kronrod integration on `[a, b]`.
///
/// Splits the panel with the largest error estimate until both the absolute
/// and relative targets are met or `max_panels` is reached.
pub fn adaptive_gk<F: FnMut(f64) -> Cplx>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> QuadResult {
    #[derive(Debug)]
    struct Panel {
        a: f64,
        b: f64,
        value: Cplx,
        err: f64,
    }
    let (v, e) = gk15(&mut f, a, b);
    let mut panels = vec![Panel { a, b, value: v, err: e }];
    let mut evals = 15usize;
    loop {
        let total: Cplx = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        if err <= abs_tol.max(rel_tol * total.norm()) || panels.len() >= max_panels {
            return QuadResult { value: total, est_error: err, evals };
        }
        // split worst panel
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).unwrap())
            .unwrap();
        let Panel { a, b, .. } = panels.swap_remove(idx);
        let m = 0.5 * (a + b);
        let (v1, e1) = gk15(&mut f, a, m);
        let (v2, e2) = gk15(&mut f, m, b);
        evals += 30;
        panels.push(Panel { a, b: m, value: v1, err: e1 });
        panels.push(Panel { a: m, b, value: v2, err: e2 });
    }
}

/// Adaptive integration over the whole real line via `w = S tan(theta)`.
///
/// `scale` sets the width of the central region resolved before the
/// compactified tails; integrands must decay at least like `|w|^{-2}`.
pub fn adaptive_real_line<F: FnMut(f64) -> Cplx>(
    mut f: F,
    scale: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> QuadResult {
    let s = scale.max(1e-8);
    adaptive_gk(
        |theta: f64| {
            let w = s * theta.tan();
            let jac = s / theta.cos().powi(2);
            if !jac.is_finite() {
                return Cplx::new(0.0, 0.0);
            }
            f(w) * jac
        },
        -std::f64::consts::FRAC_PI_2,
        std::f64::consts::FRAC_PI_2,
        abs_tol,
        rel_tol,
        max_panels,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tanh_sinh_polynomial() {
        let r = tanh_sinh(|x| Cplx::new(x * x, 0.0), 0.0, 1.0, 1e-13, 4000);
        assert!((r.value.re - 1.0 / 3.0).abs() < 1e-13, "{:?}", r);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        // integral of 1/sqrt(x) on [0,1] = 2
        let r = tanh_sinh(|x| Cplx::new(1.0 / x.sqrt(), 0.0), 0.0, 1.0, 1e-13, 4000);
        assert!((r.value.re - 2.0).abs() < 1e-11, "{:?}", r);
    }

    #[test]
    fn gk_oscillatory() {
        // integral of cos(10 x) on [0, pi] = sin(10 pi)/10 = 0
        let r = adaptive_gk(|x| Cplx::new((10.0 * x).cos(), 0.0), 0.0, std::f64::consts::PI, 1e-13, 1e-13, 2000);
        assert!(r.value.re.abs() < 1e-12, "{:?}", r);
    }

    #[test]
    fn real_line_lorentzian() {
        // integral of 1/(1+w^2) over R = pi
        let r = adaptive_real_line(|w| Cplx::new(1.0 / (1.0 + w * w), 0.0), 1.0, 1e-13, 1e-13, 4000);
        assert!((r.value.re - std::f64::consts::PI).abs() < 1e-11, "{:?}", r);
    }
}
