use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ExactError;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"`, `"n/d"` or a finite decimal such as `"-12.75"`
/// (surrounding whitespace allowed). Decimals are read exactly.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let err = || ExactError::ParseRational(s.to_string());
    if let Some((int, fr)) = t.split_once('.') {
        if fr.is_empty() || !fr.bytes().all(|b| b.is_ascii_digit()) || t.contains('/') {
            return Err(err());
        }
        let digits: BigInt = format!("{int}{fr}").parse().map_err(|_| err())?;
        return Ok(Rational::new(digits, BigInt::from(10u32).pow(fr.len() as u32)));
    }
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rational::from_integer).map_err(|_| err()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decimal expansion of `r` truncated toward zero after `digits` fractional
/// digits. Exact: no intermediate float.
pub fn format_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (r.numer().abs() * &scale).div_floor(r.denom());
    let s = scaled.to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int_part, frac_part) = s.split_at(s.len() - digits);
    let sign = if r.is_negative() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("13/36").unwrap(), frac(13, 36));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational("-12.75").unwrap(), frac(-51, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), frac(-1, 2));
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("1.5/2").is_err());
    }

    #[test]
    fn decimal_truncates() {
        assert_eq!(format_decimal(&frac(1, 3), 4), "0.3333");
        assert_eq!(format_decimal(&frac(-7, 2), 2), "-3.50");
        assert_eq!(format_decimal(&frac(1, 200), 2), "0.00");
        assert_eq!(format_decimal(&rat(12), 0), "12");
    }

    fn big_digits(len: usize) -> impl Strategy<Value = String> {
        proptest::collection::vec(0u8..10, len).prop_map(|v| {
            let mut s: String = v.iter().map(|d| char::from(b'0' + d)).collect();
            s.insert(0, '7');
            s
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip_200_digits(n in big_digits(199), d in big_digits(199), neg in any::<bool>()) {
            let n: BigInt = n.parse().unwrap();
            let n = if neg { -n } else { n };
            let d: BigInt = d.parse().unwrap();
            let r = Rational::new(n, d);
            let back = parse_rational(&r.to_string()).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
