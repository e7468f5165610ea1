//! Helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number in canonical form (reduced, positive denominator).
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `10^-digits`.
pub fn pow10_neg(digits: u32) -> Rational {
    Rational::new(
        BigInt::one(),
        num_traits::pow(BigInt::from(10), digits as usize),
    )
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / rat(2)
}

/// A power of two `2^-k` with `2^-k <= w / 8`, for positive `w`.
pub fn dyadic_below(w: &Rational) -> Rational {
    let k = w.denom().bits() as i64 - w.numer().bits() as i64 + 4;
    let k = k.max(0) as usize;
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(2), k))
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Decimal rendering with exactly `digits` fractional digits, rounded half
/// away from zero.
pub fn to_decimal(q: &Rational, digits: u32) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits as usize);
    let scaled = q.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + Rational::new(BigInt::one(), BigInt::from(2)))
        .floor()
        .to_integer();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if q.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    let frac = frac_part.to_string();
    format!(
        "{sign}{int_part}.{}{frac}",
        "0".repeat(digits as usize - frac.len())
    )
}

/// Best-effort conversion for display and diagnostics only.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse::<Rational>().ok()
}

/// Joins `(coefficient, monomial)` pairs as `c*m + ... - c'*m'`, in the
/// order given. An empty monomial string denotes the constant term.
pub(crate) fn render_terms(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let a = c.abs();
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
