mod common;

use holoirs::specfun::{
    erf_ray, fresnel_cs, gaussian_phase_antiderivative, gaussian_phase_integral, Ray,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn grid(step: f64, max: f64) -> Vec<f64> {
    let n = (max / step).round() as usize;
    (0..=n).map(|i| i as f64 * step).collect()
}

#[test]
fn fresnel_matches_quadrature_on_minus_50_to_50() {
    let xs = grid(0.01, 50.0);
    let reference = common::fresnel_reference(&xs);
    let mut worst = 0.0f64;
    for (&x, &(c_ref, s_ref)) in xs.iter().zip(&reference) {
        assert!(c_ref.is_finite() && s_ref.is_finite());
        let (c, s) = fresnel_cs(x);
        let (cn, sn) = fresnel_cs(-x);
        worst = worst
            .max((c - c_ref).abs())
            .max((s - s_ref).abs())
            .max((cn + c_ref).abs())
            .max((sn + s_ref).abs());
    }
    eprintln!("max abs error {worst:e}");
    assert!(worst < 1e-10, "max abs error {worst:e}");
}

#[test]
fn erf_ray_matches_quadrature_on_minus_50_to_50() {
    let xs = grid(0.01, 50.0);
    let reference = common::erf_ray_reference(&xs);
    let mut worst = 0.0f64;
    for (&x, &r) in xs.iter().zip(&reference) {
        assert!(r.re.is_finite() && r.im.is_finite());
        let plus = erf_ray(x, Ray::Plus45).unwrap();
        let minus = erf_ray(x, Ray::Minus45).unwrap();
        let plus_neg = erf_ray(-x, Ray::Plus45).unwrap();
        let minus_neg = erf_ray(-x, Ray::Minus45).unwrap();
        worst = worst
            .max((plus - r).norm())
            .max((minus - r.conj()).norm())
            .max((plus_neg + r).norm())
            .max((minus_neg + r.conj()).norm());
    }
    eprintln!("max abs error {worst:e}");
    assert!(worst < 1e-10, "max abs error {worst:e}");
}

#[test]
fn fresnel_bounded() {
    for x in grid(0.005, 60.0) {
        let (c, s) = fresnel_cs(x);
        assert!(c.abs() <= 0.9 && s.abs() <= 0.9, "x = {x}");
    }
}

#[test]
fn erf_ray_bounded() {
    let bound = 2f64.sqrt() * 2f64.sqrt() + 1e-12;
    for x in grid(0.005, 60.0) {
        assert!(erf_ray(x, Ray::Plus45).unwrap().norm() <= bound, "x = {x}");
    }
}

#[test]
fn gaussian_integral_matches_quadrature() {
    let cases = [
        (0.1, 0.3, 6287.6, 0.2),
        (-0.1, 0.3, 6287.6, 0.2),
        (2.5, -0.7, 6287.6, 0.2),
        (0.01, 1.2, 6287.6, 0.1),
        (1e-6, 0.05, 6287.6, 0.2),
        (-3.0, 0.0, 2000.0, 0.05),
        (0.25, 0.0, 6287.6, 0.2),
    ];
    for (a, b, k, l) in cases {
        let got = gaussian_phase_integral(a, b, k, -0.5 * l, 0.5 * l).unwrap();
        let want = common::gaussian_phase_reference(a, b, k, -0.5 * l, 0.5 * l);
        assert!(
            (got - want).norm() <= 1e-9 * want.norm(),
            "(a, b) = ({a}, {b}): {got} vs {want}"
        );
    }
}

#[test]
fn gaussian_integral_symmetric_interval_even_in_b() {
    // b -> -b mirrors the integrand about y = 0
    let (a, k, l) = (0.3, 6287.6, 0.2);
    for b in [0.0, 0.1, 0.6] {
        let p = gaussian_phase_integral(a, b, k, -0.5 * l, 0.5 * l).unwrap();
        let m = gaussian_phase_integral(a, -b, k, -0.5 * l, 0.5 * l).unwrap();
        assert!((p - m).norm() < 1e-14 * p.norm().max(1e-3));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn antiderivative_derivative_matches_integrand(
        a_mag in 0.01f64..10.0,
        negative in any::<bool>(),
        b in -2.0f64..2.0,
        k in 1.0e3f64..1.0e4,
        y in -0.1f64..0.1,
    ) {
        let a = if negative { -a_mag } else { a_mag };
        let h = 1e-7 * y.abs().max(1.0);
        let fp = gaussian_phase_antiderivative(a, b, k, y + h).unwrap();
        let fm = gaussian_phase_antiderivative(a, b, k, y - h).unwrap();
        let numeric = (fp - fm) / (2.0 * h);
        let completing = Complex64::from_polar(1.0, -k * b * b / (4.0 * a));
        let integrand = completing * Complex64::from_polar(1.0, -k * (a * y * y - b * y));
        prop_assert!(
            (numeric - integrand).norm() <= 1e-5 * integrand.norm(),
            "numeric {} vs {}", numeric, integrand
        );
    }

    #[test]
    fn integral_conjugation_symmetry(
        a in 0.001f64..5.0,
        b in -1.5f64..1.5,
        l in 0.01f64..0.2,
    ) {
        let k = 6287.6;
        let p = gaussian_phase_integral(a, b, k, -0.5 * l, 0.5 * l).unwrap();
        let m = gaussian_phase_integral(-a, -b, k, -0.5 * l, 0.5 * l).unwrap();
        prop_assert!((p - m.conj()).norm() <= 1e-13 * p.norm().max(1e-6));
    }
}
