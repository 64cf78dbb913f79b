use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Rat;

/// Parses `"p/q"` or `"p"`. A minus sign is accepted on the numerator only
/// and the denominator must be positive.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str, allow_sign: bool| {
        let body = if allow_sign {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = match den {
        Some(d) => {
            if !digits(d, false) {
                return Err(bad());
            }
            BigInt::from_str(d).map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(num, den))
}

/// `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_int_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (Pow::pow(&r, k) == *n).then_some(r)
}

/// The rational `r >= 0` (or the unique real root for odd `k`) with `r^k = q`,
/// if it exists. For even `k` only the nonnegative root is returned.
pub fn rational_nth_root(q: &Rat, k: u32) -> Option<Rat> {
    assert!(k >= 1, "root index must be positive");
    let num = exact_int_root(q.numer(), k)?;
    let den = exact_int_root(q.denom(), k)?;
    Some(Rat::new(num, den))
}

/// A rational that serializes as its `"p/q"` string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatStr(pub Rat);

impl From<Rat> for RatStr {
    fn from(q: Rat) -> Self {
        RatStr(q)
    }
}

impl From<&Rat> for RatStr {
    fn from(q: &Rat) -> Self {
        RatStr(q.clone())
    }
}

impl fmt::Display for RatStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rat(&self.0))
    }
}

impl fmt::Debug for RatStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RatStr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rat(s).map(RatStr)
    }
}

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rat(&s).map(RatStr).map_err(serde::de::Error::custom)
    }
}
