use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub const DEFAULT_DIGITS: usize = 12;

/// Renders `q` to `digits` significant digits, rounding half to even.
///
/// Scientific notation (`d.ddde±E`, exponent without padding or `+`) is used
/// when `|q| >= 1e15` or `0 < |q| < 1e-4` after rounding; plain positional
/// notation otherwise. `digits` below 1 is treated as 1.
pub fn to_decimal(q: &BigRational, digits: usize) -> String {
    let digits = digits.max(1);
    if q.is_zero() {
        return pad_fraction("0".to_owned(), digits - 1);
    }
    let sign = if q.is_negative() { "-" } else { "" };
    let num = q.numer().abs();
    let den = q.denom().clone();

    let mut exp = decimal_exponent(&num, &den);
    let mut mantissa = round_scaled(&num, &den, digits as i64 - 1 - exp);
    if mantissa == pow10(digits as u32) {
        mantissa /= 10;
        exp += 1;
    }
    let s = mantissa.to_string();
    debug_assert_eq!(s.len(), digits);

    let body = if !(-4..15).contains(&exp) {
        let mut out = s[..1].to_owned();
        if digits > 1 {
            out.push('.');
            out.push_str(&s[1..]);
        }
        format!("{out}e{exp}")
    } else if exp >= digits as i64 - 1 {
        format!("{s}{}", "0".repeat((exp - (digits as i64 - 1)) as usize))
    } else if exp >= 0 {
        let split = exp as usize + 1;
        format!("{}.{}", &s[..split], &s[split..])
    } else {
        format!("0.{}{s}", "0".repeat((-exp - 1) as usize))
    };
    format!("{sign}{body}")
}

fn pad_fraction(int: String, zeros: usize) -> String {
    if zeros == 0 {
        int
    } else {
        format!("{int}.{}", "0".repeat(zeros))
    }
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// Largest `e` with `10^e <= num/den`, for positive `num/den`.
fn decimal_exponent(num: &BigInt, den: &BigInt) -> i64 {
    let ge = |e: i64| -> bool {
        if e >= 0 {
            num >= &(den * pow10(e as u32))
        } else {
            num * pow10((-e) as u32) >= *den
        }
    };
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    while !ge(e) {
        e -= 1;
    }
    while ge(e + 1) {
        e += 1;
    }
    e
}

/// `round_half_even(num/den * 10^shift)`.
fn round_scaled(num: &BigInt, den: &BigInt, shift: i64) -> BigInt {
    let (n, d) = if shift >= 0 {
        (num * pow10(shift as u32), den.clone())
    } else {
        (num.clone(), den * pow10((-shift) as u32))
    };
    let (quot, rem) = n.div_mod_floor(&d);
    let twice = rem << 1;
    if twice > d || (twice == d && quot.is_odd()) {
        quot + 1
    } else {
        quot
    }
}
