//! Special functions behind the closed-form space factor.
//!
//! The only complex error function values needed are on the two diagonal
//! rays `z = x e^{+-i pi/4}`, where erf reduces to the Fresnel integrals:
//!
//! ```text
//! erf(x e^{i pi/4}) = (1 + i) [C(u) - i S(u)],   u = x sqrt(2/pi)
//! ```
//!
//! Internally erf on the ray is carried in the split form
//! `erf(x e^{i pi/4}) = sgn(x) (1 - R(|x|) e^{-i x^2})`, with `R` evaluated
//! directly (power series near the origin, continued fraction beyond). The
//! definite Gaussian-phase integral uses this form so that the large
//! completing-the-square phase `k b^2 / 4a` never has to be evaluated and
//! then cancelled.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Series / continued-fraction switchover in the Fresnel argument `u`.
pub const FRESNEL_SERIES_LIMIT: f64 = 1.6;

const SERIES_EPS: f64 = 1e-17;
const CF_EPS: f64 = 1e-16;
const CF_MAX_ITER: usize = 2000;
const SINC_SERIES_LIMIT: f64 = 1e-4;

/// Which diagonal of the complex plane the erf argument lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ray {
    /// `z = x e^{+i pi/4}`
    Plus45,
    /// `z = x e^{-i pi/4}`
    Minus45,
}

/// `sin(x) / x`, with the removable singularity at the origin.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < SINC_SERIES_LIMIT {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Fresnel integrals `C(x) = int_0^x cos(pi t^2 / 2) dt` and
/// `S(x) = int_0^x sin(pi t^2 / 2) dt`.
pub fn fresnel_cs(x: f64) -> (f64, f64) {
    let ax = x.abs();
    let (c, s) = if ax <= FRESNEL_SERIES_LIMIT {
        fresnel_series(ax)
    } else {
        fresnel_auxiliary(ax)
    };
    if x < 0.0 {
        (-c, -s)
    } else {
        (c, s)
    }
}

/// Power series for `C` and `S`, accurate for moderate `x >= 0`.
pub(crate) fn fresnel_series(x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (0.0, 0.0);
    }
    // C = sum_n (-1)^n t^{2n} x / ((2n)! (4n+1)),
    // S = sum_n (-1)^n t^{2n+1} x / ((2n+1)! (4n+3)),  t = pi x^2 / 2.
    // Walk the common factor t^m / m! and dispatch on parity.
    let t = 0.5 * PI * x * x;
    let mut c = 0.0;
    let mut s = 0.0;
    let mut fac = x;
    let mut m = 0usize;
    loop {
        let term = fac / (2 * m + 1) as f64;
        let signed = if (m / 2).is_multiple_of(2) {
            term
        } else {
            -term
        };
        if m.is_multiple_of(2) {
            c += signed;
        } else {
            s += signed;
        }
        if m > 2 && term.abs() < SERIES_EPS * (c.abs() + s.abs()) {
            break;
        }
        m += 1;
        fac *= t / m as f64;
    }
    (c, s)
}

/// Auxiliary-function form for `x >= FRESNEL_SERIES_LIMIT`:
/// `C + i S = (1 + i)/2 [1 - e^{i pi x^2 / 2} h(x)]`.
pub(crate) fn fresnel_auxiliary(x: f64) -> (f64, f64) {
    let h = fresnel_aux(x);
    let (sn, cs) = (0.5 * PI * x * x).sin_cos();
    let cs = Complex64::new(0.5, 0.5) * (1.0 - Complex64::new(cs, sn) * h);
    (cs.re, cs.im)
}

/// Continued fraction (modified Lentz) for the Fresnel auxiliary function
/// `h(u)`, defined by `C(u) + i S(u) = (1+i)/2 [1 - e^{i pi u^2/2} h(u)]`.
/// Converges for every `u > 0`, quickly once `pi u^2` is large.
fn fresnel_aux(u: f64) -> Complex64 {
    let pix2 = PI * u * u;
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, -pix2);
    let mut cc = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    let mut n = -1.0;
    for _ in 0..CF_MAX_ITER {
        n += 2.0;
        let a = -n * (n + 1.0);
        b += 4.0;
        d = (a * d + b).inv();
        cc = b + a / cc;
        let del = cc * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < CF_EPS {
            break;
        }
    }
    Complex64::new(u, -u) * h
}

const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;

/// Scaled complement on the +45 degree ray: `R(x)` for `x >= 0` such that
/// `erf(x e^{i pi/4}) = 1 - R(x) e^{-i x^2}`. `R(0) = 1` and
/// `R(x) ~ e^{i pi/4} / (sqrt(pi) x)` for large `x`.
pub(crate) fn ray_complement(x: f64) -> Complex64 {
    debug_assert!(x >= 0.0);
    let u = x * SQRT_2_OVER_PI;
    if u <= FRESNEL_SERIES_LIMIT {
        let (c, s) = fresnel_series(u);
        let erf = Complex64::new(1.0, 1.0) * Complex64::new(c, -s);
        let (sn, cs) = (x * x).sin_cos();
        (1.0 - erf) * Complex64::new(cs, sn)
    } else {
        fresnel_aux(u).conj()
    }
}

/// Complex error function on a diagonal ray, `erf(x e^{+-i pi/4})`.
pub fn erf_ray(x: f64, ray: Ray) -> Result<Complex64> {
    if !x.is_finite() {
        return Err(Error::Argument(format!("erf_ray needs finite x, got {x}")));
    }
    let (c, s) = fresnel_cs(x * SQRT_2_OVER_PI);
    let v = Complex64::new(1.0, 1.0) * Complex64::new(c, -s);
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Overflow("erf_ray"));
    }
    Ok(match ray {
        Ray::Plus45 => v,
        Ray::Minus45 => v.conj(),
    })
}

fn check_chirp(a: f64, b: f64, k: f64) -> Result<()> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::Argument(format!(
            "wavenumber must be positive, got {k}"
        )));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Argument(format!(
            "chirp coefficients must be finite, got a = {a}, b = {b}"
        )));
    }
    if a == 0.0 {
        return Err(Error::Argument(
            "quadratic coefficient a = 0 has no erf antiderivative; use the linear-phase form"
                .into(),
        ));
    }
    Ok(())
}

/// `sqrt(j k a)` on the principal branch: `sqrt(k|a|) e^{+i pi/4}` for
/// `a > 0`, `sqrt(k|a|) e^{-i pi/4}` for `a < 0`.
fn sqrt_jka(k: f64, a: f64) -> Complex64 {
    let m = (k * a.abs()).sqrt() * FRAC_1_SQRT_2;
    if a > 0.0 {
        Complex64::new(m, m)
    } else {
        Complex64::new(m, -m)
    }
}

/// Antiderivative of the Gaussian phase, without the completing-the-square
/// constant:
///
/// ```text
/// F(y) = sqrt(pi) / (2 sqrt(j k a)) erf( sqrt(j k a) (y - b / 2a) )
/// ```
///
/// `dF/dy = e^{-jk b^2/(4a)} e^{-jk(a y^2 - b y)}`, so the definite integral
/// of `e^{-jk(a y^2 - b y)}` is `e^{jk b^2/(4a)} [F(y2) - F(y1)]`; see
/// [`gaussian_phase_integral`] for a form that stays accurate when that
/// phase is large.
pub fn gaussian_phase_antiderivative(a: f64, b: f64, k: f64, y: f64) -> Result<Complex64> {
    check_chirp(a, b, k)?;
    let root = sqrt_jka(k, a);
    let x = (k * a.abs()).sqrt() * (y - b / (2.0 * a));
    let ray = if a > 0.0 { Ray::Plus45 } else { Ray::Minus45 };
    let erf = erf_ray(x, ray)?;
    Ok(PI.sqrt() / (2.0 * root) * erf)
}

/// Definite integral `int_{y1}^{y2} e^{-jk(a y^2 - b y)} dy` for `a != 0`.
pub fn gaussian_phase_integral(a: f64, b: f64, k: f64, y1: f64, y2: f64) -> Result<Complex64> {
    check_chirp(a, b, k)?;
    if !(y1.is_finite() && y2.is_finite()) {
        return Err(Error::Argument("integration limits must be finite".into()));
    }
    if a < 0.0 {
        // The integrand for (a, b) is the conjugate of the one for (-a, -b).
        return Ok(chirp_integral_positive(-a, -b, k, y1, y2)?.conj());
    }
    chirp_integral_positive(a, b, k, y1, y2)
}

fn chirp_integral_positive(a: f64, b: f64, k: f64, y1: f64, y2: f64) -> Result<Complex64> {
    let alpha = (k * a).sqrt();
    let y0 = b / (2.0 * a);
    let x1 = alpha * (y1 - y0);
    let x2 = alpha * (y2 - y0);
    let s1 = if x1 < 0.0 { -1.0 } else { 1.0 };
    let s2 = if x2 < 0.0 { -1.0 } else { 1.0 };

    // erf(x e^{i pi/4}) e^{jk b^2/4a} = s (e^{jk b^2/4a} - R(|x|) e^{-jk(a y^2 - b y)})
    let edge = |y: f64, x: f64| -> Complex64 {
        let phase = -k * (a * y * y - b * y);
        ray_complement(x.abs()) * Complex64::from_polar(1.0, phase)
    };
    let mut bracket = s1 * edge(y1, x1) - s2 * edge(y2, x2);
    if s1 != s2 {
        // The stationary point lies inside the interval, so |k b^2/4a| is
        // bounded by the aperture and evaluating it directly is harmless.
        bracket += (s2 - s1) * Complex64::from_polar(1.0, k * b * y0 / 2.0);
    }
    let prefactor = Complex64::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2) * (PI.sqrt() / (2.0 * alpha));
    let v = prefactor * bracket;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("gaussian_phase_integral"))
    }
}
