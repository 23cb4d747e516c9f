//! Independent references shared by the integration tests: adaptive
//! Gauss-Kronrod quadrature of the defining integrals.

#![allow(dead_code)]

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One G7-K15 panel: (Kronrod estimate, |Kronrod - Gauss|).
fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let pair = f(c - x) + f(c + x);
        k += pair * WGK[j];
        if j % 2 == 1 {
            g += pair * WG[j / 2];
        }
    }
    (k * h, ((k - g) * h).norm())
}

fn adapt<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Complex64 {
    let (k, err) = gk15(f, a, b);
    if err <= tol || depth == 0 {
        return k;
    }
    let m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth - 1) + adapt(f, m, b, 0.5 * tol, depth - 1)
}

/// Adaptive quadrature of a complex integrand over `[a, b]` to absolute
/// tolerance `tol`. The interval is pre-split into `panels` pieces so that
/// oscillatory integrands are resolved before the error estimate is trusted.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    panels: usize,
    tol: f64,
) -> Complex64 {
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + i as f64 * h;
            let hi = if i + 1 == panels { b } else { lo + h };
            adapt(&f, lo, hi, tol / panels as f64, 40)
        })
        .sum()
}

/// Panel count giving roughly a quarter cycle of `e^{i pi t^2 / 2}` per panel
/// on `[a, b]`.
fn chirp_panels(a: f64, b: f64) -> usize {
    let cycles = 0.25 * (b * b - a * a).abs();
    (4.0 * cycles).ceil().max(4.0) as usize
}

/// Fresnel integrals at each of the ascending points `xs` (all >= 0), by
/// integrating `e^{i pi t^2 / 2}` segment by segment.
pub fn fresnel_reference(xs: &[f64]) -> Vec<(f64, f64)> {
    let f = |t: f64| Complex64::from_polar(1.0, 0.5 * PI * t * t);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut prev = 0.0;
    xs.iter()
        .map(|&x| {
            assert!(x >= prev, "points must be ascending and non-negative");
            if x > prev {
                acc += integrate(f, prev, x, chirp_panels(prev, x), 1e-15);
            }
            prev = x;
            (acc.re, acc.im)
        })
        .collect()
}

/// `erf(x e^{i pi/4})` at each ascending non-negative `x`, from
/// `(2/sqrt(pi)) int_0^x e^{-i t^2} e^{i pi/4} dt` along the ray.
pub fn erf_ray_reference(xs: &[f64]) -> Vec<Complex64> {
    let f = |t: f64| Complex64::from_polar(1.0, -t * t);
    let scale = Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2) * (2.0 / PI.sqrt());
    let mut acc = Complex64::new(0.0, 0.0);
    let mut prev = 0.0;
    xs.iter()
        .map(|&x| {
            assert!(x >= prev, "points must be ascending and non-negative");
            if x > prev {
                // t^2 sweeps (x^2 - prev^2) radians
                let panels = ((x * x - prev * prev) / 1.5).ceil().max(4.0) as usize;
                acc += integrate(f, prev, x, panels, 1e-15);
            }
            prev = x;
            acc * scale
        })
        .collect()
}

/// Definite integral of `e^{-jk(a y^2 - b y)}` over `[y1, y2]`.
pub fn gaussian_phase_reference(a: f64, b: f64, k: f64, y1: f64, y2: f64) -> Complex64 {
    let phase = |y: f64| -k * (a * y * y - b * y);
    let span =
        (phase(y1) - phase(y2)).abs() + k * (a.abs() * (y2 - y1).powi(2) + b.abs() * (y2 - y1));
    let panels = (span / 1.5).ceil().max(8.0) as usize;
    integrate(
        |y| Complex64::from_polar(1.0, phase(y)),
        y1,
        y2,
        panels,
        1e-14,
    )
}
