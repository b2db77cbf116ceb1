use alloc::string::ToString;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{Error, Result};

/// Exact coefficient type used throughout the algebraic side of the crate.
pub type Scalar = BigRational;

/// Parses `p`, `-p`, or `p/q` into an exact rational.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let err = || Error::Parse(t.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q == BigInt::from(0) {
                return Err(err());
            }
            Ok(BigRational::new(p, q))
        }
        None => BigInt::from_str(t).map(BigRational::from_integer).map_err(|_| err()),
    }
}

pub(crate) fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-2/4").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
