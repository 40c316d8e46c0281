use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntersectionError;
use crate::exact::{rat, MultiPoly, Rational, VarSet};

/// A virtual bundle known through its rank and total Chern class.
///
/// The total class is kept as a quotient `num / den` of two polynomials with
/// constant term 1, so differences cost nothing until a class is read.
/// Everything above `top` is discarded.
#[derive(Clone, Debug)]
pub struct FormalBundle {
    rank: i64,
    num: MultiPoly,
    den: MultiPoly,
    top: u32,
}

/// Inverse of a power series with constant term 1, up to degree `top`.
pub fn series_inverse(p: &MultiPoly, top: u32) -> MultiPoly {
    let vars = p.vars();
    let parts: Vec<MultiPoly> = (0..=top).map(|k| p.homogeneous_part(k)).collect();
    assert_eq!(parts[0], MultiPoly::one(vars), "series must start with 1");
    let mut inv = vec![MultiPoly::one(vars)];
    for k in 1..=top as usize {
        let mut acc = MultiPoly::zero(vars);
        for j in 1..=k {
            if !parts[j].is_zero() && !inv[k - j].is_zero() {
                acc = &acc - &(&parts[j] * &inv[k - j]);
            }
        }
        inv.push(acc);
    }
    inv.iter().fold(MultiPoly::zero(vars), |a, b| &a + b)
}

/// Binomial coefficient C(n, k) for any integer n.
fn binomial(n: i64, k: u32) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..i64::from(k) {
        num *= n - i;
        den *= i + 1;
    }
    Rational::new(num, den)
}

impl FormalBundle {
    pub fn from_chern(rank: i64, chern: MultiPoly, top: u32) -> Self {
        let den = MultiPoly::one(chern.vars());
        FormalBundle { rank, num: chern.truncate(top), den, top }
    }

    pub fn trivial(vars: &Arc<VarSet>, rank: i64, top: u32) -> Self {
        Self::from_chern(rank, MultiPoly::one(vars), top)
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line(c1: &MultiPoly, top: u32) -> Self {
        Self::from_chern(1, &MultiPoly::one(c1.vars()) + c1, top)
    }

    /// Direct sum of line bundles with the given Chern roots.
    pub fn split(vars: &Arc<VarSet>, roots: &[MultiPoly], top: u32) -> Self {
        roots.iter().fold(Self::trivial(vars, 0, top), |acc, r| acc.direct_sum(&Self::line(r, top)))
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.num.vars()
    }

    /// Total Chern class, truncated above `top`.
    pub fn chern(&self) -> MultiPoly {
        if self.den == MultiPoly::one(self.den.vars()) {
            return self.num.clone();
        }
        self.num.mul_truncated(&series_inverse(&self.den, self.top), self.top)
    }

    /// The degree-k Chern class.
    pub fn c(&self, k: u32) -> MultiPoly {
        if k > self.top {
            return MultiPoly::zero(self.vars());
        }
        self.chern().homogeneous_part(k)
    }

    pub fn direct_sum(&self, other: &FormalBundle) -> FormalBundle {
        let top = self.top.min(other.top);
        FormalBundle {
            rank: self.rank + other.rank,
            num: self.num.mul_truncated(&other.num, top),
            den: self.den.mul_truncated(&other.den, top),
            top,
        }
    }

    /// The virtual bundle `self - other`.
    pub fn difference(&self, other: &FormalBundle) -> FormalBundle {
        let top = self.top.min(other.top);
        FormalBundle {
            rank: self.rank - other.rank,
            num: self.num.mul_truncated(&other.den, top),
            den: self.den.mul_truncated(&other.num, top),
            top,
        }
    }

    /// Degree-k parts multiplied by (-1)^k; this is a ring map, so it can be
    /// applied to numerator and denominator separately.
    pub fn dual(&self) -> FormalBundle {
        let flip = |p: &MultiPoly| {
            (0..=self.top).fold(MultiPoly::zero(p.vars()), |acc, k| {
                let part = p.homogeneous_part(k);
                if k % 2 == 1 {
                    &acc - &part
                } else {
                    &acc + &part
                }
            })
        };
        FormalBundle { rank: self.rank, num: flip(&self.num), den: flip(&self.den), top: self.top }
    }

    /// Second exterior power, for ranks 1 to 3.
    ///
    /// With Chern roots x, y, z the roots of the result are the pairwise
    /// sums; in elementary symmetric functions that gives
    /// c1 = 2 e1, c2 = e1^2 + e2, c3 = e1 e2 - e3.
    pub fn exterior_square(&self) -> Result<FormalBundle, IntersectionError> {
        let e = |k| self.c(k);
        let one = MultiPoly::one(self.vars());
        let chern = match self.rank {
            1 => return Ok(Self::trivial(self.vars(), 0, self.top)),
            2 => return Ok(Self::line(&e(1), self.top)),
            3 => {
                let (e1, e2, e3) = (e(1), e(2), e(3));
                let c1 = e1.scale(&rat(2));
                let c2 = &(&e1 * &e1) + &e2;
                let c3 = &(&e1 * &e2) - &e3;
                [one, c1, c2, c3].iter().fold(MultiPoly::zero(self.vars()), |a, b| &a + b)
            }
            r => return Err(IntersectionError::UnsupportedRank(r)),
        };
        Ok(Self::from_chern(3, chern, self.top))
    }

    /// Top exterior power, the line bundle with c1 equal to c1 of `self`.
    pub fn determinant(&self) -> FormalBundle {
        Self::line(&self.c(1), self.top)
    }

    /// Tensor product with the line bundle of first Chern class `ell`:
    /// c_k(E (x) L) = sum_i C(r - i, k - i) c_i(E) ell^(k - i).
    /// The binomial is the polynomial one, so virtual ranks are fine.
    pub fn twist(&self, ell: &MultiPoly) -> FormalBundle {
        let vars = self.vars().clone();
        let cs: Vec<MultiPoly> = (0..=self.top).map(|i| self.c(i)).collect();
        let mut total = MultiPoly::zero(&vars);
        for k in 0..=self.top {
            for i in 0..=k {
                if cs[i as usize].is_zero() {
                    continue;
                }
                let b = binomial(self.rank - i64::from(i), k - i);
                if b.is_zero() {
                    continue;
                }
                total = &total + &(&cs[i as usize] * &ell.pow(k - i)).scale(&b);
            }
        }
        Self::from_chern(self.rank, total, self.top)
    }
}

/// `sum_i c_i(E) m^(r - i)`, the relation satisfied by the hyperplane class
/// m on the projective bundle of lines in E.
pub fn projective_bundle_relation(e: &FormalBundle, m: &MultiPoly) -> MultiPoly {
    let r = u32::try_from(e.rank()).expect("projective bundle of a bundle with nonnegative rank");
    (0..=r).fold(MultiPoly::zero(m.vars()), |acc, i| &acc + &(&e.c(i) * &m.pow(r - i)))
}

/// Relations of the Grassmann bundle of rank-k subbundles S of E: the
/// quotient E - S has rank n - k, so its Chern classes vanish in degrees
/// n - k + 1 through n.
pub fn grassmann_relations(e: &FormalBundle, s: &FormalBundle) -> Vec<MultiPoly> {
    let q = e.difference(s);
    let n = u32::try_from(e.rank()).expect("nonnegative rank");
    let k = u32::try_from(s.rank()).expect("nonnegative rank");
    (n - k + 1..=n).map(|d| q.c(d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Arc<VarSet> {
        VarSet::new([("h", 1), ("k", 1)])
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(&vars(), s).unwrap()
    }

    #[test]
    fn duals() {
        let l = FormalBundle::line(&p("h"), 3);
        assert_eq!(l.dual().chern(), p("1 - h"));
        let t = FormalBundle::trivial(&vars(), 3, 3);
        assert_eq!(t.dual().chern(), p("1"));
        let e = FormalBundle::from_chern(2, p("1 + h + h^2"), 3);
        assert_eq!(e.dual().chern(), p("1 - h + h^2"));
    }

    #[test]
    fn difference_is_series_division() {
        let v = vars();
        let q = FormalBundle::trivial(&v, 3, 3).difference(&FormalBundle::line(&p("-h"), 3));
        assert_eq!(q.rank(), 2);
        assert_eq!(q.chern(), p("1 + h + h^2 + h^3"));
        assert_eq!(series_inverse(&p("1 - h + k^2"), 2), p("1 + h + h^2 - k^2"));
    }

    #[test]
    fn exterior_square_cases() {
        let v = vars();
        let e = FormalBundle::split(&v, &[MultiPoly::zero(&v), p("h"), p("k")], 3);
        assert_eq!(e.exterior_square().unwrap().chern(), p("1 + h").mul_truncated(&p("1 + k"), 3).mul_truncated(&p("1 + h + k"), 3));
        assert_eq!(FormalBundle::trivial(&v, 3, 3).exterior_square().unwrap().chern(), p("1"));
        // c = 1 + c1 only: 1 + 2 c1 + c1^2 + 0.
        let f = FormalBundle::from_chern(3, p("1 + h"), 3);
        assert_eq!(f.exterior_square().unwrap().chern(), p("1 + 2*h + h^2"));
        assert!(matches!(
            FormalBundle::trivial(&v, 4, 3).exterior_square(),
            Err(IntersectionError::UnsupportedRank(4))
        ));
    }

    #[test]
    fn twists() {
        let v = vars();
        let e = FormalBundle::split(&v, &[p("h"), p("k"), p("h + k")], 3);
        let z = MultiPoly::zero(&v);
        assert_eq!(e.twist(&z).chern(), e.chern());
        let l = FormalBundle::line(&p("h"), 3).twist(&p("k"));
        assert_eq!(l.chern(), p("1 + h + k"));
        // A difference twisted termwise agrees with twisting the difference.
        let a = FormalBundle::split(&v, &[p("h"), p("k")], 3);
        let b = FormalBundle::line(&p("-h"), 3);
        let lhs = a.difference(&b).twist(&p("k"));
        let rhs = a.twist(&p("k")).difference(&b.twist(&p("k")));
        assert_eq!(lhs.chern(), rhs.chern());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), rat(10));
        assert_eq!(binomial(-1, 3), rat(-1));
        assert_eq!(binomial(2, 3), rat(0));
        assert_eq!(binomial(-2, 2), rat(3));
    }
}
