//! Fixed-point logarithms and decimal rendering for the asymptotic parameters.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Extra digits carried internally beyond the requested precision.
const GUARD_DIGITS: u32 = 20;

fn pow10(digits: u32) -> BigInt {
    BigInt::from(10u32).pow(digits)
}

/// `atanh(p/q)·scale` for `0 ≤ p/q < 1`, truncated term by term.
fn atanh_scaled(p: &BigInt, q: &BigInt, scale: &BigInt) -> BigInt {
    let p2 = p * p;
    let q2 = q * q;
    let mut term = scale * p / q;
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    while !term.is_zero() {
        sum += &term / k;
        term = term * &p2 / &q2;
        k += 2;
    }
    sum
}

/// `ln(n)` accurate to about `digits` decimal places, as an exact rational
/// approximation with denominator `10^(digits + guard)`.
pub fn ln_approx(n: &BigUint, digits: u32) -> BigRational {
    assert!(!n.is_zero(), "ln(0) is undefined");
    let work = digits + GUARD_DIGITS;
    let scale = pow10(work);
    let k = n.bits() - 1;
    let two_k = BigInt::one() << k;
    let n = BigInt::from(n.clone());
    // ln n = k ln 2 + 2 atanh((n − 2^k)/(n + 2^k)),  ln 2 = 2 atanh(1/3)
    let ln2 = 2 * atanh_scaled(&BigInt::one(), &BigInt::from(3), &scale);
    let rest = 2 * atanh_scaled(&(&n - &two_k), &(&n + &two_k), &scale);
    BigRational::new(ln2 * BigInt::from(k) + rest, scale)
}

/// Rounds half away from zero to `digits` places, e.g. `"-1.2500"`.
pub fn to_decimal_string(x: &BigRational, digits: u32) -> String {
    let scale = pow10(digits);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let rounded = if &r * 2 >= *scaled.denom() { q + 1 } else { q };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded_is_zero(&int_part, &frac_part) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!(
        "{sign}{int_part}.{:0>width$}",
        frac_part.to_string(),
        width = digits as usize
    )
}

fn rounded_is_zero(a: &BigInt, b: &BigInt) -> bool {
    a.is_zero() && b.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn logarithms() {
        // ln 2, ln 10 and ln 100 to 40 places
        let ln2 = "0.6931471805599453094172321214581765680755";
        let ln10 = "2.3025850929940456840179914546843642076011";
        assert_eq!(to_decimal_string(&ln_approx(&BigUint::from(2u32), 40), 40), ln2);
        assert_eq!(to_decimal_string(&ln_approx(&BigUint::from(10u32), 40), 40), ln10);
        let ln100 = ln_approx(&BigUint::from(100u32), 40);
        let twice = ln_approx(&BigUint::from(10u32), 40) * BigInt::from(2);
        assert!((ln100 - twice).abs() < rat(1, 1_000_000_000_000_000_000));
        assert!(ln_approx(&BigUint::from(1u32), 30).is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(to_decimal_string(&rat(7, 6), 4), "1.1667");
        assert_eq!(to_decimal_string(&rat(-5, 4), 1), "-1.3");
        assert_eq!(to_decimal_string(&rat(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal_string(&rat(3, 1), 0), "3");
    }
}
