//! Argument parsing for exact rationals and index lists.

use num_bigint::BigInt;
use num_traits::{Num, Zero};
use verma_core::Rational;

/// Accepts `3`, `-1/2` and exact decimals such as `0.5` or `-1.25`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("cannot parse {s:?} as an exact rational");
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_int(num).ok_or_else(bad)?;
        let den = parse_int(den).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let whole = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            parse_int(int_digits).ok_or_else(bad)?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac = parse_int(frac).ok_or_else(bad)?;
        let value = Rational::new(whole * &scale + frac, scale);
        return Ok(if negative { -value } else { value });
    }
    parse_int(s).map(Rational::from_integer).ok_or_else(bad)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str_radix(s.strip_prefix('+').unwrap_or(s), 10).ok()
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(parse_rational).collect()
}

/// `1,3` → `[1, 3]`; the empty string is the empty set.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("cannot parse {t:?} as a simple-root index"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3").unwrap(), r(3, 1));
        assert_eq!(parse_rational("-1/2").unwrap(), r(-1, 2));
        assert_eq!(parse_rational("4/6").unwrap(), r(2, 3));
        assert_eq!(parse_rational("0.5").unwrap(), r(1, 2));
        assert_eq!(parse_rational("-1.25").unwrap(), r(-5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), r(-1, 2));
        assert_eq!(parse_rational(".5").unwrap(), r(1, 2));
        assert_eq!(parse_rational("+2").unwrap(), r(2, 1));
        // 0.1 is exactly 1/10, not the nearest double
        assert_eq!(parse_rational("0.1").unwrap(), r(1, 10));
        for bad in ["", "1/0", "a", "1.", "1.2.3", "--1", "1/-", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn lists() {
        assert_eq!(
            parse_rational_list("0,-1/2,0").unwrap(),
            vec![r(0, 1), r(-1, 2), r(0, 1)]
        );
        assert_eq!(parse_index_list("1,3").unwrap(), vec![1, 3]);
        assert_eq!(parse_index_list("").unwrap(), Vec::<usize>::new());
        assert!(parse_index_list("1,x").is_err());
    }
}
