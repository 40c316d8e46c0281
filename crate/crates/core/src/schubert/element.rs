use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::label::Label;
use super::SchubertError;
use crate::exact::{parse_rational, rat, Rational, UniPoly};

/// An element of the quantum cohomology ring: for each Schubert class a
/// polynomial in q.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SchubertElement {
    coeffs: BTreeMap<Label, UniPoly>,
}

impl SchubertElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(l: Label) -> Self {
        Self::term(l, 0, Rational::one())
    }

    pub fn unit() -> Self {
        Self::basis(Label::S0)
    }

    /// `c * q^k * l`
    pub fn term(l: Label, k: u32, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(l, k, c);
        e
    }

    pub fn add_term(&mut self, l: Label, k: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let p = self.coeffs.remove(&l).unwrap_or_default();
        let p = &p + &UniPoly::monomial(c, k);
        if !p.is_zero() {
            self.coeffs.insert(l, p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff_poly(&self, l: Label) -> UniPoly {
        self.coeffs.get(&l).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^k * l`.
    pub fn coeff(&self, l: Label, k: u32) -> Rational {
        self.coeffs.get(&l).map_or_else(Rational::zero, |p| p.coeff(k))
    }

    /// Nonzero terms `(q-exponent, label, coefficient)` sorted by q-exponent,
    /// then label.
    pub fn terms(&self) -> Vec<(u32, Label, Rational)> {
        let mut v: Vec<_> = self
            .coeffs
            .iter()
            .flat_map(|(l, p)| p.terms().map(move |(k, c)| (k, *l, c.clone())))
            .collect();
        v.sort_by_key(|t| (t.0, t.1));
        v
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_polys(|p| p.scale(c))
    }

    pub fn mul_poly(&self, f: &UniPoly) -> Self {
        self.map_polys(|p| p * f)
    }

    /// Multiplies by q^k.
    pub fn shift_q(&self, k: u32) -> Self {
        self.map_polys(|p| p.shift(k))
    }

    fn map_polys(&self, f: impl Fn(&UniPoly) -> UniPoly) -> Self {
        SchubertElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, p)| (*l, f(p)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Drops every positive power of q.
    pub fn classical(&self) -> Self {
        let mut out = Self::zero();
        for (l, p) in &self.coeffs {
            out.add_term(*l, 0, p.coeff(0));
        }
        out
    }

    /// Total degrees `deg(label) + 4k` occurring, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms().iter().map(|(k, l, _)| l.degree() + 4 * k).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms().iter().all(|(k, l, _)| l.degree() + 4 * k == d)
    }

    /// Coordinates in the 15 Schubert classes after setting q to `q_value`.
    pub fn specialize(&self, q_value: &Rational) -> Vec<Rational> {
        Label::ALL.iter().map(|l| self.coeff_poly(*l).eval(q_value)).collect()
    }

    pub fn max_q_power(&self) -> Option<u32> {
        self.coeffs.values().filter_map(UniPoly::degree).max()
    }
}

fn q_power(k: u32) -> String {
    match k {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{k}"),
    }
}

impl fmt::Display for SchubertElement {
    /// `s4 + 2*s4p`, `q^2*s6 + q^3*s2`, `2*q`, `-3/2*s1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, l, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            let mag = c.abs();
            let unit = *l == Label::S0;
            if !mag.is_one() || (unit && *k == 0) {
                factors.push(mag.to_string());
            }
            if *k > 0 {
                factors.push(q_power(*k));
            }
            if !unit {
                factors.push(l.to_string());
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for SchubertElement {
    type Err = SchubertError;

    /// Inverse of `Display`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SchubertError::ParseElement(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = SchubertElement::zero();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, piece.strip_prefix('+').unwrap_or(piece)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = rat(sign);
            let mut k = 0u32;
            let mut label = Label::S0;
            let mut seen_label = false;
            for factor in body.split('*') {
                if factor == "q" {
                    k += 1;
                } else if let Some(e) = factor.strip_prefix("q^") {
                    k += e.parse::<u32>().map_err(|_| bad())?;
                } else if let Ok(l) = factor.parse::<Label>() {
                    if seen_label {
                        return Err(bad());
                    }
                    label = l;
                    seen_label = true;
                } else {
                    coeff *= parse_rational(factor).map_err(|_| bad())?;
                }
            }
            out.add_term(label, k, coeff);
        }
        Ok(out)
    }
}

impl<'a> Add<&'a SchubertElement> for &'a SchubertElement {
    type Output = SchubertElement;
    fn add(self, rhs: &SchubertElement) -> SchubertElement {
        let mut out = self.clone();
        for (k, l, c) in rhs.terms() {
            out.add_term(l, k, c);
        }
        out
    }
}

impl<'a> Sub<&'a SchubertElement> for &'a SchubertElement {
    type Output = SchubertElement;
    fn sub(self, rhs: &SchubertElement) -> SchubertElement {
        let mut out = self.clone();
        for (k, l, c) in rhs.terms() {
            out.add_term(l, k, -c);
        }
        out
    }
}

impl Neg for &SchubertElement {
    type Output = SchubertElement;
    fn neg(self) -> SchubertElement {
        self.scale(&rat(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use proptest::prelude::*;

    fn el(s: &str) -> SchubertElement {
        s.parse().unwrap()
    }

    #[test]
    fn display_forms() {
        assert_eq!(el("s4 + 2*s4p + 2*s4pp").to_string(), "s4 + 2*s4p + 2*s4pp");
        assert_eq!(el("q^3*s2p + q^2*s6p + q^2*s6 + q^3*s2").to_string(), "q^2*s6 + q^2*s6p + q^3*s2 + q^3*s2p");
        assert_eq!(el("2*q").to_string(), "2*q");
        assert_eq!(el("q^4").to_string(), "q^4");
        assert_eq!(el("1").to_string(), "1");
        assert_eq!(el("s1 - s1").to_string(), "0");
        assert_eq!(el("-3/2*s1 + s2").to_string(), "-3/2*s1 + s2");
        assert_eq!(el("2*q*s0"), el("2*q"));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "s9", "2*s1*s2", "q^x", "s1 +", "*"] {
            assert!(s.parse::<SchubertElement>().is_err(), "{s:?} parsed");
        }
    }

    #[test]
    fn classical_and_degrees() {
        let x = el("2*s4 + 2*s4p + 2*q");
        assert_eq!(x.classical(), el("2*s4 + 2*s4p"));
        assert_eq!(x.degrees(), vec![4]);
        assert!(x.is_homogeneous_of(4));
        assert_eq!(x.coeff(Label::S0, 1), rat(2));
        assert_eq!(x.specialize(&frac(1, 2))[0], rat(1));
    }

    fn element() -> impl Strategy<Value = SchubertElement> {
        proptest::collection::vec((0usize..15, 0u32..5, -20i64..20, 1i64..4), 0..8).prop_map(|ts| {
            let mut e = SchubertElement::zero();
            for (l, k, n, d) in ts {
                e.add_term(Label::from_index(l), k, frac(n, d));
            }
            e
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(e in element()) {
            let back: SchubertElement = e.to_string().parse().unwrap();
            prop_assert_eq!(back, e);
        }
    }
}
