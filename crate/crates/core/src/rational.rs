//! Exact rationals, serialized as lowest-terms `"p/q"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub type Rational = BigRational;

pub fn from_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `"p/q"` with `q > 0`, always including the denominator.
pub fn to_pq(r: &Rational) -> String {
    // BigRational keeps itself reduced with a positive denominator.
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_pq(s: &str) -> Option<Rational> {
    let (p, q) = s.split_once('/')?;
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(p, q))
}

pub(crate) fn serialize_pq_seq<S: Serializer>(values: &[Rational], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&to_pq(v))?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_strings() {
        assert_eq!(to_pq(&ratio(11, 6)), "11/6");
        assert_eq!(to_pq(&ratio(-14, 12)), "-7/6");
        assert_eq!(to_pq(&ratio(3, -6)), "-1/2");
        assert_eq!(to_pq(&from_int(0)), "0/1");
        assert_eq!(parse_pq("-7/6"), Some(ratio(-7, 6)));
        assert_eq!(parse_pq("4/8"), Some(ratio(1, 2)));
        assert_eq!(parse_pq("1/0"), None);
        assert_eq!(parse_pq("3"), None);
    }
}
