use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::SchubertError;

/// One of the fifteen Schubert classes, ordered by degree and then by
/// number of primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    S0,
    S1,
    S2,
    S2p,
    S3,
    S3p,
    S4,
    S4p,
    S4pp,
    S5,
    S5p,
    S6,
    S6p,
    S7,
    S8,
}

pub const DIMENSION: u32 = 8;

/// Even Betti numbers, index = complex degree.
pub const BETTI: [usize; 9] = [1, 1, 2, 2, 3, 2, 2, 1, 1];

impl Label {
    pub const ALL: [Label; 15] = [
        Label::S0,
        Label::S1,
        Label::S2,
        Label::S2p,
        Label::S3,
        Label::S3p,
        Label::S4,
        Label::S4p,
        Label::S4pp,
        Label::S5,
        Label::S5p,
        Label::S6,
        Label::S6p,
        Label::S7,
        Label::S8,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Label {
        Self::ALL[i]
    }

    pub fn degree(self) -> u32 {
        use Label::*;
        match self {
            S0 => 0,
            S1 => 1,
            S2 | S2p => 2,
            S3 | S3p => 3,
            S4 | S4p | S4pp => 4,
            S5 | S5p => 5,
            S6 | S6p => 6,
            S7 => 7,
            S8 => 8,
        }
    }

    /// Poincare dual class: the unique label pairing to 1 with this one.
    pub fn dual(self) -> Label {
        use Label::*;
        match self {
            S0 => S8,
            S1 => S7,
            S2 => S6,
            S2p => S6p,
            S3 => S5,
            S3p => S5p,
            S4 => S4,
            S4p => S4p,
            S4pp => S4pp,
            S5 => S3,
            S5p => S3p,
            S6 => S2,
            S6p => S2p,
            S7 => S1,
            S8 => S0,
        }
    }

    pub fn of_degree(d: u32) -> impl Iterator<Item = Label> {
        Self::ALL.into_iter().filter(move |l| l.degree() == d)
    }

    pub fn as_str(self) -> &'static str {
        use Label::*;
        match self {
            S0 => "s0",
            S1 => "s1",
            S2 => "s2",
            S2p => "s2p",
            S3 => "s3",
            S3p => "s3p",
            S4 => "s4",
            S4p => "s4p",
            S4pp => "s4pp",
            S5 => "s5",
            S5p => "s5p",
            S6 => "s6",
            S6p => "s6p",
            S7 => "s7",
            S8 => "s8",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = SchubertError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Label::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| SchubertError::UnknownLabel(s.to_string()))
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_histogram_and_rank() {
        let mut hist = [0usize; 9];
        for l in Label::ALL {
            hist[l.degree() as usize] += 1;
        }
        assert_eq!(hist, BETTI);
        assert_eq!(BETTI.iter().sum::<usize>(), 15);
    }

    #[test]
    fn duality_is_an_involution_onto_complementary_degree() {
        for l in Label::ALL {
            assert_eq!(l.dual().dual(), l);
            assert_eq!(l.degree() + l.dual().degree(), DIMENSION);
        }
        let self_dual: Vec<_> = Label::ALL.into_iter().filter(|l| l.dual() == *l).collect();
        assert_eq!(self_dual, vec![Label::S4, Label::S4p, Label::S4pp]);
    }

    #[test]
    fn parse_round_trip() {
        for (i, l) in Label::ALL.into_iter().enumerate() {
            assert_eq!(l.index(), i);
            assert_eq!(l.as_str().parse::<Label>().unwrap(), l);
        }
        assert!("s9".parse::<Label>().is_err());
        assert!("S4".parse::<Label>().is_err());
    }
}
