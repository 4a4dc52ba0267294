//! Exact rational arithmetic helpers.
//!
//! Every quantity the crate compares is a [`Rational`] (arbitrary-precision
//! integers underneath); floating point only ever appears in display output.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational p/q. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// n(n-1)/2 as a rational, for integer or rational `n`.
pub fn choose2(n: &Rational) -> Rational {
    n * (n - int(1)) / int(2)
}

/// Exact string form: `p` for integers, `p/q` otherwise.
pub fn exact_str(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal approximation with six significant digits. Display only.
pub fn decimal_str(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let x = r.to_f64().unwrap_or(f64::NAN);
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    // trim trailing zeros after rounding, but keep at least one digit
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        t.to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_strings() {
        assert_eq!(exact_str(&int(7)), "7");
        assert_eq!(exact_str(&frac(10, 6)), "5/3");
        assert_eq!(exact_str(&frac(-3, 9)), "-1/3");
    }

    #[test]
    fn decimal_six_significant_digits() {
        assert_eq!(decimal_str(&frac(4295, 378)), "11.3624");
        assert_eq!(decimal_str(&int(0)), "0");
        assert_eq!(decimal_str(&frac(1, 3)), "0.333333");
        assert_eq!(decimal_str(&int(9)), "9");
    }

    #[test]
    fn choose2_matches_binomial() {
        assert_eq!(choose2(&int(5)), int(10));
        assert_eq!(choose2(&int(2)), int(1));
        assert_eq!(choose2(&frac(12, 1)), int(66));
    }
}
