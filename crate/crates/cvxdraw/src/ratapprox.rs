//! Continued-fraction rationalization of floating-point values.
//!
//! Used to turn float search results into exact coordinates and to place
//! near-regular polygon corners at rational points of the unit circle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::scalar::Rational;

/// Best continued-fraction convergent of `x` with denominator at most
/// `max_denominator`. Exact for values that are already small rationals.
pub fn rationalize(x: f64, max_denominator: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let bound = i128::from(max_denominator.max(1));
    let neg = x < 0.0;
    let mut t = x.abs();
    // convergents p/q
    let (mut p_prev, mut q_prev) = (1i128, 0i128);
    let (mut p, mut q) = (t.floor() as i128, 1i128);
    for _ in 0..64 {
        let frac = t - t.floor();
        if frac.abs() < 1e-15 {
            break;
        }
        t = 1.0 / frac;
        let a = t.floor();
        if a >= 1e18 {
            break;
        }
        let a = a as i128;
        let p_next = match a.checked_mul(p).and_then(|v| v.checked_add(p_prev)) {
            Some(v) => v,
            None => break,
        };
        let q_next = match a.checked_mul(q).and_then(|v| v.checked_add(q_prev)) {
            Some(v) => v,
            None => break,
        };
        if q_next > bound {
            break;
        }
        (p_prev, q_prev) = (p, q);
        (p, q) = (p_next, q_next);
    }
    let mut r = Rational::new(BigInt::from(p), BigInt::from(q.max(1)));
    if neg {
        r = -r;
    }
    Some(r)
}

/// Rational points exactly on the unit circle near the regular `n`-gon
/// corners, counterclockwise from (1, 0). Uses the tangent-half-angle
/// parametrization `t -> ((1 - t^2)/(1 + t^2), 2t/(1 + t^2))` with `t`
/// rationalized under `den_bound`; antipodes cover the left half so the
/// parameter stays small everywhere.
pub fn circle_points(n: usize, den_bound: u64) -> Vec<(Rational, Rational)> {
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let theta = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64);
        // fold into (-pi/2, pi/2] and remember the sign flip
        let (theta, flip) =
            if theta > std::f64::consts::FRAC_PI_2 && theta <= 3.0 * std::f64::consts::FRAC_PI_2 {
                (theta - std::f64::consts::PI, true)
            } else if theta > 3.0 * std::f64::consts::FRAC_PI_2 {
                (theta - 2.0 * std::f64::consts::PI, false)
            } else {
                (theta, false)
            };
        let t = rationalize((theta / 2.0).tan(), den_bound).expect("finite tangent");
        let t2 = &t * &t;
        let den = &t2 + BigRational::one();
        let x = (BigRational::one() - &t2) / &den;
        let y = (BigRational::from_integer(2.into()) * &t) / den;
        if flip {
            out.push((-x, -y));
        } else {
            out.push((x, y));
        }
    }
    out
}
