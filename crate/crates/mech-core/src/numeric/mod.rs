//! Internal numeric support: double-double arithmetic, log-factorials,
//! fast integer powers, and deterministic pairwise summation.

pub(crate) mod dd;

use num_complex::Complex64;

/// ln(n!) for any order.
///
/// Exact digit-sum below 1024; 4-term Stirling series above, where its
/// relative error is far below f64 resolution.
pub(crate) fn ln_factorial(n: u32) -> f64 {
    if n < 2 {
        return 0.0;
    }
    if n <= 1024 {
        return (2..=n).map(|k| f64::from(k).ln()).sum();
    }
    let x = f64::from(n);
    let x2 = x * x;
    x * x.ln() - x + 0.5 * (core::f64::consts::TAU * x).ln() + 1.0 / (12.0 * x)
        - 1.0 / (360.0 * x * x2)
        + 1.0 / (1260.0 * x * x2 * x2)
}

/// `x^n` by binary exponentiation (f64; any u32 exponent).
pub(crate) fn powi_f64(x: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    let mut base = x;
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        n >>= 1;
        if n > 0 {
            base *= base;
        }
    }
    acc
}

/// Deterministic pairwise (tree) summation of complex terms.
pub(crate) fn pairwise_sum_complex(terms: &[Complex64]) -> Complex64 {
    match terms.len() {
        0 => Complex64::new(0.0, 0.0),
        1..=8 => terms.iter().sum(),
        n => {
            let (a, b) = terms.split_at(n / 2);
            pairwise_sum_complex(a) + pairwise_sum_complex(b)
        }
    }
}

/// Wrap an angle to (-pi, pi].
pub(crate) fn wrap_angle(x: f64) -> f64 {
    let y = x.rem_euclid(core::f64::consts::TAU);
    if y > core::f64::consts::PI {
        y - core::f64::consts::TAU
    } else {
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_factorial_matches_f64_product() {
        // n! is f64-representable up to 170; compare ln of the product.
        let mut prod = 1.0f64;
        for n in 2..=170u32 {
            prod *= f64::from(n);
            let reference = prod.ln();
            let got = ln_factorial(n);
            assert!(
                (got - reference).abs() <= 1e-11 * reference.max(1.0),
                "n={n}: {got} vs {reference}"
            );
        }
    }

    #[test]
    fn ln_factorial_stirling_agrees_with_sum_at_crossover() {
        // Direct sum is still cheap at 3000; check the Stirling branch against it.
        let direct: f64 = (2..=3000u32).map(|k| f64::from(k).ln()).sum();
        let got = ln_factorial(3000);
        assert!((got - direct).abs() <= 1e-10 * direct);
        // and continuity right at the threshold
        let below = ln_factorial(1024);
        let above = ln_factorial(1025);
        assert!((above - below - 1025f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn powi_matches_std_for_small_exponents() {
        for n in 0..=30u32 {
            let got = powi_f64(1.1, n);
            let reference = 1.1f64.powi(n as i32);
            assert!((got - reference).abs() <= 1e-13 * reference.abs());
        }
        assert_eq!(powi_f64(-2.0, 3), -8.0);
        assert_eq!(powi_f64(0.0, 5), 0.0);
        assert_eq!(powi_f64(0.0, 0), 1.0);
    }

    #[test]
    fn wrap_angle_range() {
        use core::f64::consts::PI;
        assert!((wrap_angle(3.0 * PI) - PI).abs() < 1e-12);
        assert!((wrap_angle(-0.5 * PI) + 0.5 * PI).abs() < 1e-15);
        assert_eq!(wrap_angle(0.0), 0.0);
        let w = wrap_angle(7.0 * PI + 0.1);
        assert!(w > -PI && w <= PI);
    }
}
