//! Arbitrary-precision rationals, always in lowest terms with positive
//! denominator (maintained by `num_rational::BigRational`).

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rat = BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Parses `"n"`, `"n/d"` or `"-n/d"`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let bad = |e: &dyn std::fmt::Display| format!("invalid rational '{s}': {e}");
    match s.split_once('/') {
        None => Ok(Rat::from(s.parse::<BigInt>().map_err(|e| bad(&e))?)),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|e| bad(&e))?;
            let d = d.trim().parse::<BigInt>().map_err(|e| bad(&e))?;
            if d == BigInt::from(0) {
                return Err(bad(&"zero denominator"));
            }
            Ok(Rat::new(n, d))
        }
    }
}
