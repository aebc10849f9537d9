//! Unit-interval probabilities backed by exact rationals.
//!
//! Every value in the crate is held as a [`BigRational`]; conversion to a
//! floating or decimal form happens only when something is displayed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A probability in `[0, 1]`, stored exactly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Probability(BigRational);

impl Probability {
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_negative() || value > BigRational::one() {
            return Err(Error::OutOfRange {
                value: exact_repr(&value),
            });
        }
        Ok(Probability(value))
    }

    /// `numer / denom`. Fails on a zero denominator or an out-of-range ratio.
    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Invalid("zero denominator".into()));
        }
        Self::new(BigRational::new(numer.into(), denom.into()))
    }

    pub fn zero() -> Self {
        Probability(BigRational::zero())
    }

    pub fn one() -> Self {
        Probability(BigRational::one())
    }

    pub fn half() -> Self {
        Probability(BigRational::new(1.into(), 2.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    /// `1 - p`.
    pub fn complement(&self) -> Self {
        Probability(BigRational::one() - &self.0)
    }

    /// Product of two probabilities, which stays in the unit interval.
    pub fn and(&self, other: &Probability) -> Self {
        Probability(&self.0 * &other.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Rounded decimal with `digits` significant digits.
    pub fn to_significant(&self, digits: u32) -> String {
        format_significant(&self.0, digits)
    }

    /// Terminating decimal when one exists, otherwise `n/d`.
    pub fn to_exact_string(&self) -> String {
        exact_repr(&self.0)
    }

    /// Always `n/d` in lowest terms (`0/1`, `1/1` for the endpoints).
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

impl FromStr for Probability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = parse_rational(s)
            .ok_or_else(|| Error::Invalid(format!("`{}` is not a decimal, percentage or fraction", s.trim())))?;
        Probability::new(value)
    }
}

/// Parses `0.4`, `40%`, `12.5%` or `2/5` into an exact rational.
///
/// No range check happens here; a leading sign is accepted so that callers can
/// report negative input as a range problem rather than a syntax problem.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some(percent) = text.strip_suffix('%') {
        return parse_decimal(percent.trim_end()).map(|v| v / BigRational::from_integer(100.into()));
    }
    if let Some((numer, denom)) = text.split_once('/') {
        let numer = parse_decimal(numer.trim())?;
        let denom = parse_decimal(denom.trim())?;
        if denom.is_zero() {
            return None;
        }
        return Some(numer / denom);
    }
    parse_decimal(text)
}

fn parse_decimal(text: &str) -> Option<BigRational> {
    let (negative, body) = match text.as_bytes().first()? {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(numer, denom);
    Some(if negative { -value } else { value })
}

/// Terminating decimal expansion of `value` if its reduced denominator has only
/// factors 2 and 5, otherwise the fraction `n/d`.
pub fn exact_repr(value: &BigRational) -> String {
    let mut denom = value.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut twos = 0usize;
    let mut fives = 0usize;
    while denom.is_multiple_of(&two) {
        denom /= &two;
        twos += 1;
    }
    while denom.is_multiple_of(&five) {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return format!("{}/{}", value.numer(), value.denom());
    }
    let places = twos.max(fives);
    let scaled = value * BigRational::from_integer(num_traits::pow(BigInt::from(10), places));
    format_scaled(&scaled.to_integer(), places)
}

/// Decimal rendering of `value` rounded (half away from zero) to `digits`
/// significant digits. Zero renders as `0.` followed by `digits - 1` zeros.
pub fn format_significant(value: &BigRational, digits: u32) -> String {
    let digits = digits.max(1) as i64;
    if value.is_zero() {
        return format_scaled(&BigInt::zero(), (digits - 1) as usize);
    }
    let magnitude = value.abs();
    // exponent e with 10^e <= |v| < 10^(e+1)
    let mut exponent = magnitude.to_f64().map(|f| f.log10().floor() as i64).unwrap_or(0);
    while pow10(exponent) > magnitude {
        exponent -= 1;
    }
    while pow10(exponent + 1) <= magnitude {
        exponent += 1;
    }
    loop {
        let places = digits - 1 - exponent;
        let scaled = value * pow10(places);
        let rounded = round_half_away(&scaled);
        let limit = num_traits::pow(BigInt::from(10), digits as usize);
        if rounded.abs() >= limit {
            exponent += 1;
            continue;
        }
        return if places >= 0 {
            format_scaled(&rounded, places as usize)
        } else {
            (rounded * num_traits::pow(BigInt::from(10), (-places) as usize)).to_string()
        };
    }
}

/// `value` rounded half away from zero to exactly `places` decimals.
pub fn format_fixed(value: &BigRational, places: usize) -> String {
    let scaled = value * pow10(places as i64);
    format_scaled(&round_half_away(&scaled), places)
}

fn pow10(exponent: i64) -> BigRational {
    let base = BigRational::from_integer(num_traits::pow(BigInt::from(10), exponent.unsigned_abs() as usize));
    if exponent >= 0 {
        base
    } else {
        base.recip()
    }
}

fn round_half_away(value: &BigRational) -> BigInt {
    let half = BigRational::new(1.into(), 2.into());
    if value.is_negative() {
        -((-value) + half).floor().to_integer()
    } else {
        (value + half).floor().to_integer()
    }
}

/// Writes `scaled / 10^places` with exactly `places` decimals.
fn format_scaled(scaled: &BigInt, places: usize) -> String {
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let body = if places == 0 {
        digits
    } else if digits.len() <= places {
        format!("0.{}{}", "0".repeat(places - digits.len()), digits)
    } else {
        let (int_part, frac_part) = digits.split_at(digits.len() - places);
        format!("{int_part}.{frac_part}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}
