//! Double-double arithmetic: an unevaluated sum of two `f64`s giving ~31
//! significant decimal digits.
//!
//! The subset sums of the amplitude formula and the brute-force composition
//! products both reach magnitudes around 1e5-1e6 at desk scale while the
//! cross-checks demand 1e-11 *absolute* agreement, which is below one ulp of
//! plain f64 at that scale. Evaluating both routes in double-double keeps
//! each within ~1e-25 of the exact polynomial value in the shared inputs.
//!
//! Error-free transforms follow Dekker and Knuth (see Hida, Li, Bailey,
//! "Library for Double-Double and Quad-Double Arithmetic").

use num_complex::Complex64;

/// `a + b` with exact rounding error, no magnitude precondition (Knuth).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// `a + b` with exact rounding error; requires `|a| >= |b|` or `a == 0`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// `a * b` with exact rounding error via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

/// Double-double value `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        let s2 = s2 + self.lo;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub_f64(self, b: f64) -> Dd {
        self.add_f64(-b)
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let p2 = p2 + self.lo * b;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }

    /// `self^n` by binary exponentiation.
    pub fn powi(self, n: u32) -> Dd {
        let mut acc = Dd::ONE;
        let mut base = self;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(base);
            }
        }
        acc
    }
}

/// `n!` as a double-double; exact up to 18!, ~1e-31 relative beyond.
pub fn factorial_dd(n: u32) -> Dd {
    let mut acc = Dd::ONE;
    for k in 2..=n.max(1) {
        acc = acc.mul_f64(f64::from(k));
    }
    acc
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: Cdd = Cdd {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    #[inline]
    pub fn from_complex(z: Complex64) -> Cdd {
        Cdd {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    #[inline]
    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn conj(self) -> Cdd {
        Cdd {
            re: self.re,
            im: self.im.neg(),
        }
    }

    #[inline]
    pub fn neg(self) -> Cdd {
        Cdd {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    #[inline]
    pub fn add(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    #[inline]
    pub fn sub(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.sub(o.re),
            im: self.im.sub(o.im),
        }
    }

    #[inline]
    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn scale(self, s: Dd) -> Cdd {
        Cdd {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    /// Multiply by `(-i)^n`; exact component swaps and negations.
    #[inline]
    pub fn rotate_neg_i_pow(self, n: u32) -> Cdd {
        match n % 4 {
            0 => self,
            // -i * (re + i im) = im - i re
            1 => Cdd {
                re: self.im,
                im: self.re.neg(),
            },
            2 => self.neg(),
            _ => Cdd {
                re: self.im.neg(),
                im: self.re,
            },
        }
    }
}

/// Deterministic pairwise (tree) summation.
pub fn pairwise_sum_cdd(terms: &[Cdd]) -> Cdd {
    match terms.len() {
        0 => Cdd::ZERO,
        1..=8 => {
            let mut acc = Cdd::ZERO;
            for t in terms {
                acc = acc.add(*t);
            }
            acc
        }
        n => {
            let (a, b) = terms.split_at(n / 2);
            pairwise_sum_cdd(a).add(pairwise_sum_cdd(b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_recovers_rounding_error() {
        // 0.1 + 0.2 != 0.3 in f64; the dd sum keeps the residual.
        let s = Dd::from_f64(0.1).add_f64(0.2);
        let direct = 0.1f64 + 0.2f64;
        assert_eq!(s.hi, direct);
        assert!(s.lo != 0.0);
        // hi+lo is closer to 3/10 than the f64 sum: compare against 0.3's own error
        let err_dd = (s.hi - 0.3) + s.lo; // 0.3 also rounded, but residual is tiny
        assert!(err_dd.abs() < 1e-17);
    }

    #[test]
    fn mul_exact_on_integers() {
        let p = Dd::from_f64(3.0).powi(5);
        assert_eq!(p.to_f64(), 243.0);
        assert_eq!(p.lo, 0.0);
    }

    #[test]
    fn div_roundtrip() {
        let third = Dd::ONE.div(Dd::from_f64(3.0));
        let one = third.mul_f64(3.0);
        assert!((one.to_f64() - 1.0).abs() < 1e-30);
        assert!((one.hi - 1.0).abs() < 1e-16);
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let x = Dd::from_f64(1.7);
        let mut acc = Dd::ONE;
        for _ in 0..13 {
            acc = acc.mul(x);
        }
        let p = x.powi(13);
        let diff = p.sub(acc).to_f64().abs();
        assert!(diff <= 1e-25 * acc.to_f64().abs());
    }

    #[test]
    fn factorial_small_values_exact() {
        assert_eq!(factorial_dd(0).to_f64(), 1.0);
        assert_eq!(factorial_dd(1).to_f64(), 1.0);
        assert_eq!(factorial_dd(5).to_f64(), 120.0);
        assert_eq!(factorial_dd(12).to_f64(), 479_001_600.0);
        // 18! = 6402373705728000 < 2^53, still exact
        assert_eq!(factorial_dd(18).to_f64(), 6.402373705728e15);
        assert_eq!(factorial_dd(18).lo, 0.0);
    }

    #[test]
    fn complex_mul_matches_f64_at_f64_precision() {
        let a = Cdd::from_complex(Complex64::new(0.3, -1.2));
        let b = Cdd::from_complex(Complex64::new(-2.5, 0.7));
        let c = a.mul(b).to_complex();
        let r = Complex64::new(0.3, -1.2) * Complex64::new(-2.5, 0.7);
        assert!((c - r).norm() < 1e-15);
    }

    #[test]
    fn quadrant_rotation_cycles() {
        let z = Cdd::from_complex(Complex64::new(2.0, 3.0));
        let r1 = z.rotate_neg_i_pow(1).to_complex();
        assert_eq!(r1, Complex64::new(3.0, -2.0));
        let r4 = z.rotate_neg_i_pow(4).to_complex();
        assert_eq!(r4, Complex64::new(2.0, 3.0));
        let r2 = z.rotate_neg_i_pow(2).to_complex();
        assert_eq!(r2, Complex64::new(-2.0, -3.0));
    }

    #[test]
    fn pairwise_sum_handles_sizes() {
        let terms: Vec<Cdd> = (0..37)
            .map(|k| Cdd::from_complex(Complex64::new(k as f64, -(k as f64))))
            .collect();
        let s = pairwise_sum_cdd(&terms).to_complex();
        let expect = (0..37).map(|k| k as f64).sum::<f64>();
        assert_eq!(s, Complex64::new(expect, -expect));
    }
}
