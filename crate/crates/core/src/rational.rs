//! Exact rationals, exact decimal parsing and decimal rendering.
//!
//! Decimal input such as `0.36` is parsed digit by digit into `36/100 = 9/25`;
//! no value ever passes through a float on the way in. Rendering rounds
//! half-to-even at a fixed number of significant digits, so output is
//! byte-identical across platforms.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not an exact decimal or fraction: {:?}", self.input)
    }
}

impl std::error::Error for ParseRationalError {}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

/// Parses `[+-]digits[.digits][e[+-]digits]` or `p/q` exactly.
pub fn parse_decimal(input: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError {
        input: input.to_string(),
    };
    let s = input.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }

    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = body[pos + 1..].parse().map_err(|_| err())?;
            (&body[..pos], exp)
        }
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if int_part.is_empty() && frac_part.is_empty()
        || !all_digits(int_part)
        || !all_digits(frac_part)
    {
        return Err(err());
    }

    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().map_err(|_| err())?;
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let magnitude = if scale >= 0 {
        Rational::from_integer(numer * Pow::pow(&ten, scale as u64))
    } else {
        Rational::new(numer, Pow::pow(&ten, scale.unsigned_abs()))
    };
    Ok(if negative { -magnitude } else { magnitude })
}

/// Always `num/den`, including integers (`1/1`).
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn round_half_even(x: &Rational) -> BigInt {
    let floor = x.floor().to_integer();
    let rem = x - Rational::from_integer(floor.clone());
    let half = ratio(1, 2);
    if rem > half || (rem == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    }
}

/// Renders `r` in plain decimal notation rounded half-to-even to `digits`
/// significant digits. With `trim`, trailing fractional zeros are dropped.
pub fn format_significant(r: &Rational, digits: u32, trim: bool) -> String {
    assert!(digits >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let x = r.abs();
    let ten = Rational::from_integer(BigInt::from(10));

    // Decimal exponent e with 10^e <= x < 10^(e+1).
    let mut e = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    let pow10 = |e: i64| -> Rational {
        if e >= 0 {
            Pow::pow(&ten, e as u64)
        } else {
            Pow::pow(&ten, e.unsigned_abs()).recip()
        }
    };
    while pow10(e) > x {
        e -= 1;
    }
    while pow10(e + 1) <= x {
        e += 1;
    }

    let mut shift = digits as i64 - 1 - e;
    let mut n = round_half_even(&(&x * pow10(shift)));
    if n.to_string().len() > digits as usize {
        // Rounded up to the next power of ten.
        n /= 10;
        shift -= 1;
    }

    let mut text = n.to_string();
    if shift <= 0 {
        text.push_str(&"0".repeat(shift.unsigned_abs() as usize));
        return format!("{sign}{text}");
    }
    let frac_len = shift as usize;
    if text.len() <= frac_len {
        text = format!("{}{}", "0".repeat(frac_len + 1 - text.len()), text);
    }
    let (int_part, frac_part) = text.split_at(text.len() - frac_len);
    let frac_part = if trim {
        frac_part.trim_end_matches('0')
    } else {
        frac_part
    };
    if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}
