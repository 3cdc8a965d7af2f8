//! Small helpers around the exact rational type.

use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::Rational;

pub fn rat(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub fn to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub fn exact_isqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Exact square root of a non-negative rational, if it has one.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    Some(rat(exact_isqrt(*q.numer())?, exact_isqrt(*q.denom())?))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-10.5"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let d: i128 = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(rat(n.trim().parse().ok()?, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|ch| ch.is_ascii_digit()) || frac.len() > 18 {
            return None;
        }
        let negative = whole.trim_start().starts_with('-');
        let whole_abs: i128 = match whole.trim().trim_start_matches(['-', '+']) {
            "" => 0,
            w => w.parse().ok()?,
        };
        let scale = 10i128.pow(frac.len() as u32);
        let magnitude = rat(whole_abs * scale + frac.parse::<i128>().ok()?, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    t.parse::<i128>().ok().map(Rational::from_integer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-1/6"), Some(rat(-1, 6)));
        assert_eq!(parse_rational("4/2"), Some(int(2)));
        assert_eq!(parse_rational("-10.5"), Some(rat(-21, 2)));
        assert_eq!(parse_rational("-0.25"), Some(rat(-1, 4)));
        assert_eq!(parse_rational("0.5"), Some(rat(1, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1."), None);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&rat(85, 4)), "85/4");
        assert_eq!(format_rational(&rat(-6, 3)), "-2");
        assert_eq!(format_rational(&rat(0, 5)), "0");
    }

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(&rat(49, 36)), Some(rat(7, 6)));
        assert_eq!(exact_sqrt(&rat(37, 36)), None);
        assert_eq!(exact_sqrt(&rat(-1, 4)), None);
        assert_eq!(exact_isqrt(0), Some(0));
    }
}
