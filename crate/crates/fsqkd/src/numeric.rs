//! Small numerics toolbox: adaptive quadrature, special functions, scalar
//! optimization and the displaced-Gaussian aperture overlap.

use crate::error::{Error, Result};

/// Error function (delegates to libm).
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Natural log of the Gamma function.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Adaptive Simpson quadrature on [a, b].
///
/// Classic recursion with a per-interval tolerance split; `max_depth`
/// bounds the recursion so pathological integrands fail loudly instead of
/// hanging.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> Result<f64> {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> std::result::Result<f64, ()> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol || (b - a) < 1e-14 * (b.abs() + a.abs() + 1.0) {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(());
        }
        let l = rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?;
        let r = rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?;
        Ok(l + r)
    }

    if !(b > a) {
        return Ok(0.0);
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    rec(f, a, b, fa, fm, fb, whole, tol, max_depth).map_err(|_| Error::Numeric {
        what: "adaptive_simpson",
        reason: format!("no convergence on [{a}, {b}] at tol {tol:.3e}"),
    })
}

/// Golden-section maximization of a unimodal scalar function on [lo, hi].
///
/// Returns (argmax, max). `xtol` is the absolute tolerance on the argument.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, xtol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > xtol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// P(noncentral chi-square, 2 d.o.f., noncentrality `lambda` <= `x`).
///
/// Series over Poisson-weighted central chi-square CDFs; both factors use
/// stable upward recursions. This is the overlap integral of a displaced
/// Gaussian beam with a circular aperture (Marcum 1 - Q1).
pub fn noncentral_chi2_cdf_2dof(lambda: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let h = 0.5 * lambda;
    let y = 0.5 * x;
    // poisson(j; h) * P(chi2_{2+2j} <= x), with P(chi2_{2+2j} <= x) =
    // 1 - e^{-y} sum_{i<=j} y^i/i!
    let mut pois = (-h).exp(); // j = 0 term
    if pois == 0.0 {
        // noncentrality far beyond representable weights: the aperture is
        // effectively empty at such displacements
        return 0.0;
    }
    let mut chi_tail = (-y).exp(); // e^{-y} sum_{i<=j} y^i/i!, starts at i=0
    let mut y_term = (-y).exp(); // e^{-y} y^j / j!
    let mut sum = 0.0;
    let mut j = 0usize;
    let max_j = 2000 + (h as usize) * 4;
    loop {
        let cdf_j = (1.0 - chi_tail).max(0.0);
        sum += pois * cdf_j;
        // remaining Poisson mass bounds the truncation error; cdf_j is
        // decreasing in j so the tail contributes less than (1 - cum_pois)*cdf_j
        if j > (h as usize) && pois * (j as f64 + 1.0) / ((j as f64 + 1.0) - h).max(1e-300) < 1e-16
        {
            break;
        }
        j += 1;
        if j > max_j {
            break;
        }
        pois *= h / j as f64;
        y_term *= y / j as f64;
        chi_tail += y_term;
    }
    sum.clamp(0.0, 1.0)
}

/// Binary search for the root of a monotone increasing function on [lo, hi].
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo < tol {
            break;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_polynomial_exact() {
        let v = adaptive_simpson(&|x: f64| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 1e-12, 40).unwrap();
        assert!((v - (4.0 - 4.0 + 2.0)).abs() < 1e-10);
    }

    #[test]
    fn simpson_oscillatory() {
        let v = adaptive_simpson(&|x: f64| (10.0 * x).cos(), 0.0, 3.0, 1e-12, 48).unwrap();
        assert!((v - (30.0f64).sin() / 10.0).abs() < 1e-9);
    }

    #[test]
    fn golden_finds_quadratic_peak() {
        let (x, v) = golden_max(|x| -(x - 0.7) * (x - 0.7) + 3.0, 0.0, 2.0, 1e-8);
        assert!((x - 0.7).abs() < 1e-6);
        assert!((v - 3.0).abs() < 1e-10);
    }

    #[test]
    fn marcum_centered_matches_closed_form() {
        // lambda = 0: P(chi2_2 <= x) = 1 - exp(-x/2)
        for &x in &[0.1, 1.0, 4.0, 10.0] {
            let got = noncentral_chi2_cdf_2dof(0.0, x);
            assert!((got - (1.0 - (-x / 2.0f64).exp())).abs() < 1e-12);
        }
    }

    #[test]
    fn marcum_large_displacement_vanishes() {
        assert!(noncentral_chi2_cdf_2dof(1e4, 1.0) < 1e-30);
        assert_eq!(noncentral_chi2_cdf_2dof(1e7, 1.0), 0.0);
    }

    #[test]
    fn marcum_monotone_in_x() {
        let mut prev = 0.0;
        for i in 1..100 {
            let v = noncentral_chi2_cdf_2dof(3.0, i as f64 * 0.2);
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn normal_cdf_symmetry() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((normal_cdf(1.0) + normal_cdf(-1.0) - 1.0).abs() < 1e-14);
        assert!((normal_cdf(1.959963984540054) - 0.975).abs() < 1e-9);
    }
}
