use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rat, Rational};

/// Univariate polynomial with rational coefficients, stored sparsely as
/// exponent -> coefficient. No zero coefficient is ever stored.
///
/// Used both for the q-coefficients of Schubert elements and for
/// characteristic polynomials in t.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        UniPoly { coeffs }
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Self {
        let mut p = UniPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Builds from dense coefficients, index = exponent.
    pub fn from_dense(coeffs: &[Rational]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as u32, c.clone())))
    }

    fn add_term(&mut self, exp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.values().next_back().cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: u32) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // Horner over the dense range.
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for e in (0..=deg).rev() {
            acc = acc * x + self.coeff(e);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UniPoly::from_terms(
            self.coeffs
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c * rat(i64::from(*e)))),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.leading_coeff()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading_coeff();
        let mut quot = UniPoly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff() / &lc;
            let step = UniPoly::monomial(c, rd - dd);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        (quot, rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Substitutes x -> x^k.
    pub fn compose_power(&self, k: u32) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Formats with the given variable name, highest power first:
    /// `t^15 - 102 t^11 + 317 t^7 - 2048 t^3`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag} {mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&rat(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_dense(&c.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[1, 1]); // 1 + x
        let b = p(&[-1, 1]); // -1 + x
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a - &a, UniPoly::zero());
        assert_eq!(p(&[2, 0, 3]).eval(&frac(1, 3)), frac(7, 3));
        assert_eq!(p(&[5, 2, 3]).derivative(), p(&[2, 6]));
    }

    #[test]
    fn division_and_gcd() {
        let f = &p(&[-1, 1]) * &p(&[2, 1]);
        let g = &p(&[-1, 1]) * &p(&[3, 0, 1]);
        assert_eq!(f.gcd(&g), p(&[-1, 1]));
        let (q, r) = g.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[3, 0, 1]));
        assert!(p(&[-2048, 317, -102, 1]).is_squarefree());
        assert!(!(&p(&[1, 1]) * &p(&[1, 1])).is_squarefree());
    }

    #[test]
    fn display_sign_pattern() {
        let cp = UniPoly::from_terms([(15, rat(1)), (11, rat(-102)), (7, rat(317)), (3, rat(-2048))]);
        assert_eq!(cp.display_with("t"), "t^15 - 102 t^11 + 317 t^7 - 2048 t^3");
        assert_eq!(UniPoly::zero().display_with("t"), "0");
        assert_eq!(p(&[-1, 0, 2]).display_with("q"), "2 q^2 - 1");
    }
}
