//! Exact real-root isolation and certified enclosures.

use num_traits::{One, Signed, Zero};

use crate::exact::{to_f64, Rational, UniPoly};

/// Sturm chain of a squarefree polynomial.
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn sign_changes(chain: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = chain.iter().map(|p| p.eval(x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the half-open interval (a, b].
pub fn count_roots(chain: &[UniPoly], a: &Rational, b: &Rational) -> usize {
    sign_changes(chain, a).saturating_sub(sign_changes(chain, b))
}

/// Cauchy's bound: every root has modulus below it.
pub fn root_bound(p: &UniPoly) -> Rational {
    let lc = p.leading_coeff().abs();
    let m = p.terms().map(|(_, c)| c.abs() / &lc).fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

/// An interval (lo, hi] holding exactly one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// The largest real root of a squarefree polynomial, bisected until the
/// interval is narrower than `eps`. None if there is no real root.
pub fn largest_real_root(p: &UniPoly, eps: &Rational) -> Option<RootInterval> {
    let chain = sturm_chain(p);
    let b = root_bound(p);
    let mut lo = -b.clone();
    let mut hi = b;
    if count_roots(&chain, &lo, &hi) == 0 {
        return None;
    }
    while &(&hi - &lo) > eps {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if count_roots(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(RootInterval { lo, hi })
}

/// Newton steps in floating point; the exact interval stays the
/// certificate.
pub fn newton_polish(p: &UniPoly, start: f64, steps: usize) -> f64 {
    let coeffs: Vec<(i32, f64)> = p.terms().map(|(e, c)| (e as i32, to_f64(c))).collect();
    let dp = p.derivative();
    let dcoeffs: Vec<(i32, f64)> = dp.terms().map(|(e, c)| (e as i32, to_f64(c))).collect();
    let eval = |cs: &[(i32, f64)], x: f64| cs.iter().map(|(e, c)| c * x.powi(*e)).sum::<f64>();
    let mut x = start;
    for _ in 0..steps {
        let d = eval(&dcoeffs, x);
        if d == 0.0 {
            break;
        }
        x -= eval(&coeffs, x) / d;
    }
    x
}

/// Newton iteration in exact rationals started at the midpoint of
/// `interval`, each iterate rounded to a multiple of `2^-bits`. Returns a
/// subinterval of width `2 * 2^-bits` certified by a strict sign change.
/// Falls back to the input interval if the iterates leave it.
pub fn newton_refine(p: &UniPoly, interval: &RootInterval, steps: usize, bits: u32) -> RootInterval {
    let dp = p.derivative();
    let scale = Rational::from_integer(num_bigint::BigInt::from(1) << bits);
    let round = |x: &Rational| (x * &scale).round() / &scale;
    let mut x = interval.midpoint();
    for _ in 0..steps {
        let d = dp.eval(&x);
        if d.is_zero() {
            break;
        }
        x = round(&(&x - &(p.eval(&x) / d)));
    }
    let r = Rational::one() / &scale;
    let (lo, hi) = (&x - &r, &x + &r);
    let inside = lo >= interval.lo && hi <= interval.hi;
    let (a, b) = (p.eval(&lo), p.eval(&hi));
    if inside && (a.is_positive() && b.is_negative() || a.is_negative() && b.is_positive()) {
        RootInterval { lo, hi }
    } else {
        interval.clone()
    }
}

fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite")
}

/// Rationals `a <= x^(1/4)` and `b >= y^(1/4)` for 0 < x <= y, checked by
/// exact fourth powers.
pub fn fourth_root_bounds(x: &Rational, y: &Rational) -> (Rational, Rational) {
    let pow4 = |r: &Rational| {
        let s = r * r;
        &s * &s
    };
    let mut slack = 1e-15;
    let lo = loop {
        let c = from_f64(to_f64(x).powf(0.25) * (1.0 - slack));
        if pow4(&c) <= *x {
            break c;
        }
        slack *= 2.0;
    };
    let mut slack = 1e-15;
    let hi = loop {
        let c = from_f64(to_f64(y).powf(0.25) * (1.0 + slack));
        if pow4(&c) >= *y {
            break c;
        }
        slack *= 2.0;
    };
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    fn cubic() -> UniPoly {
        UniPoly::from_terms([(3, rat(1)), (2, rat(-102)), (1, rat(317)), (0, rat(-2048))])
    }

    #[test]
    fn cubic_has_one_real_root() {
        let g = cubic();
        let chain = sturm_chain(&g);
        let b = root_bound(&g);
        assert_eq!(count_roots(&chain, &-b.clone(), &b), 1);
        assert_eq!(count_roots(&chain, &rat(99), &rat(100)), 1);
        assert_eq!(count_roots(&chain, &rat(0), &rat(99)), 0);
    }

    #[test]
    fn sturm_counts_known_roots() {
        // (x - 1)(x - 2)(x + 3)
        let p = UniPoly::from_terms([(3, rat(1)), (1, rat(-7)), (0, rat(6))]);
        let chain = sturm_chain(&p);
        assert_eq!(count_roots(&chain, &rat(-10), &rat(10)), 3);
        assert_eq!(count_roots(&chain, &rat(0), &rat(1)), 1);
        assert_eq!(count_roots(&chain, &rat(1), &rat(2)), 1);
        assert_eq!(count_roots(&chain, &frac(3, 2), &rat(10)), 1);
        let r = largest_real_root(&p, &frac(1, 1 << 20)).unwrap();
        assert!(r.lo < rat(2) && rat(2) <= r.hi);
        let none = UniPoly::from_terms([(2, rat(1)), (0, rat(1))]);
        assert!(largest_real_root(&none, &frac(1, 8)).is_none());
    }

    #[test]
    fn newton_narrows_a_certified_interval() {
        let g = cubic();
        let coarse = largest_real_root(&g, &frac(1, 1 << 10)).unwrap();
        let fine = newton_refine(&g, &coarse, 6, 120);
        assert!(fine.lo >= coarse.lo && fine.hi <= coarse.hi);
        assert!(fine.width() < frac(1, 1 << 30) * frac(1, 1 << 30));
        let chain = sturm_chain(&g);
        assert_eq!(count_roots(&chain, &fine.lo, &fine.hi), 1);
    }

    #[test]
    fn fourth_roots_are_enclosed() {
        let (lo, hi) = fourth_root_bounds(&rat(16), &rat(16));
        assert!(lo <= rat(2) && rat(2) <= hi);
        assert!(&hi - &lo < frac(1, 1_000_000_000));
        let (lo, hi) = fourth_root_bounds(&frac(6561, 256), &frac(6561, 256));
        assert!(lo <= frac(9, 4) && frac(9, 4) <= hi);
    }
}
