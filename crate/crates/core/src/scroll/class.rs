use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Parses `aH+bR` style strings. `tilde` selects the resolved spelling
/// `aH~+bR~`; the two spellings are never mixed.
fn parse_terms(input: &str, tilde: bool) -> Result<(BigInt, BigInt)> {
    let err = || Error::Parse(input.to_string());
    if input == "0" {
        return Ok((BigInt::zero(), BigInt::zero()));
    }
    let bytes = input.as_bytes();
    let mut pos = 0;
    let mut h: Option<BigInt> = None;
    let mut r: Option<BigInt> = None;
    while pos < bytes.len() {
        let negative = match bytes[pos] {
            b'+' if pos > 0 => {
                pos += 1;
                false
            }
            b'-' => {
                pos += 1;
                true
            }
            _ if pos == 0 => false,
            _ => return Err(err()),
        };
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mut coeff = if pos == digits_start {
            BigInt::one()
        } else {
            input[digits_start..pos].parse::<BigInt>().map_err(|_| err())?
        };
        if negative {
            coeff = -coeff;
        }
        let slot = match bytes.get(pos) {
            Some(b'H') => &mut h,
            Some(b'R') => &mut r,
            _ => return Err(err()),
        };
        pos += 1;
        if tilde {
            if bytes.get(pos) != Some(&b'~') {
                return Err(err());
            }
            pos += 1;
        }
        if slot.is_some() {
            return Err(err());
        }
        *slot = Some(coeff);
    }
    if h.is_none() && r.is_none() {
        return Err(err());
    }
    Ok((h.unwrap_or_default(), r.unwrap_or_default()))
}

fn write_terms(f: &mut fmt::Formatter<'_>, h: &BigInt, r: &BigInt, suffix: &str) -> fmt::Result {
    fn coeff(f: &mut fmt::Formatter<'_>, c: &BigInt) -> fmt::Result {
        if c.is_one() {
            Ok(())
        } else if *c == -BigInt::one() {
            f.write_str("-")
        } else {
            write!(f, "{c}")
        }
    }
    if h.is_zero() && r.is_zero() {
        return f.write_str("0");
    }
    if !h.is_zero() {
        coeff(f, h)?;
        write!(f, "H{suffix}")?;
    }
    if !r.is_zero() {
        if !h.is_zero() && r.is_positive() {
            f.write_str("+")?;
        }
        coeff(f, r)?;
        write!(f, "R{suffix}")?;
    }
    Ok(())
}

macro_rules! class_type {
    ($(#[$meta:meta])* $name:ident, $suffix:expr, $tilde:expr) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
        pub struct $name {
            /// Coefficient of the hyperplane class.
            pub h: BigInt,
            /// Coefficient of the ruling-plane class.
            pub r: BigInt,
        }

        impl $name {
            pub fn new(h: impl Into<BigInt>, r: impl Into<BigInt>) -> Self {
                Self { h: h.into(), r: r.into() }
            }

            pub fn hyperplane() -> Self {
                Self::new(1, 0)
            }

            pub fn ruling() -> Self {
                Self::new(0, 1)
            }

            pub fn scaled(&self, k: impl Into<BigInt>) -> Self {
                let k = k.into();
                Self { h: &self.h * &k, r: &self.r * &k }
            }

            /// `3h + r`, the degree of the class as a surface in P^5.
            pub fn total_degree(&self) -> BigInt {
                &self.h * 3 + &self.r
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                $name { h: self.h + rhs.h, r: self.r + rhs.r }
            }
        }

        impl<'a> Add<&'a $name> for &'a $name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name { h: &self.h + &rhs.h, r: &self.r + &rhs.r }
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                $name { h: self.h - rhs.h, r: self.r - rhs.r }
            }
        }

        impl<'a> Sub<&'a $name> for &'a $name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name { h: &self.h - &rhs.h, r: &self.r - &rhs.r }
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                $name { h: -self.h, r: -self.r }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_terms(f, &self.h, &self.r, $suffix)
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                parse_terms(s, $tilde).map(|(h, r)| $name { h, r })
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

class_type!(
    /// A Weil divisor class `hH + rR` on the 3-fold X.
    ///
    /// On S(1,1,1) and S(0,1,2) the pair is a free coordinate of Cl(X). On
    /// S(0,0,3) only [`total_degree`](Self::total_degree) is an invariant of
    /// the class, since there H ~ 3R.
    DivisorClass,
    "",
    false
);

class_type!(
    /// A class `hH~ + rR~` in Pic of the canonical resolution.
    ResolvedClass,
    "~",
    true
);

impl From<&DivisorClass> for ResolvedClass {
    /// The lift through Cl(X) = Pic(X~), valid on S(1,1,1) and S(0,1,2).
    fn from(c: &DivisorClass) -> Self {
        ResolvedClass {
            h: c.h.clone(),
            r: c.r.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_compact_forms() {
        assert_eq!(DivisorClass::new(0, 5).to_string(), "5R");
        assert_eq!(DivisorClass::new(1, -2).to_string(), "H-2R");
        assert_eq!(DivisorClass::new(3, 1).to_string(), "3H+R");
        assert_eq!(DivisorClass::new(-1, 0).to_string(), "-H");
        assert_eq!(DivisorClass::new(0, 0).to_string(), "0");
        assert_eq!(ResolvedClass::new(1, 1).to_string(), "H~+R~");
        assert_eq!(ResolvedClass::new(10, -3).to_string(), "10H~-3R~");
    }

    #[test]
    fn parses_compact_forms() {
        assert_eq!("4R".parse::<DivisorClass>().unwrap(), DivisorClass::new(0, 4));
        assert_eq!("H-2R".parse::<DivisorClass>().unwrap(), DivisorClass::new(1, -2));
        assert_eq!("-3H+R".parse::<DivisorClass>().unwrap(), DivisorClass::new(-3, 1));
        assert_eq!("R+H".parse::<DivisorClass>().unwrap(), DivisorClass::new(1, 1));
        assert_eq!("0".parse::<DivisorClass>().unwrap(), DivisorClass::default());
        assert_eq!("mH~+3R~".parse::<ResolvedClass>().ok(), None);
        assert_eq!("10H~+3R~".parse::<ResolvedClass>().unwrap(), ResolvedClass::new(10, 3));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "H R", "H+", "2", "HH", "H+H", "+H", "H~", "3x", "H--R"] {
            assert!(bad.parse::<DivisorClass>().is_err(), "{bad:?}");
        }
        for bad in ["H", "H~+R", "5R~~"] {
            assert!(bad.parse::<ResolvedClass>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn serde_uses_string_form() {
        let c = DivisorClass::new(3, -1);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "\"3H-R\"");
        assert_eq!(serde_json::from_str::<DivisorClass>(&json).unwrap(), c);
    }

    #[test]
    fn arithmetic() {
        let h = DivisorClass::hyperplane();
        let r = DivisorClass::ruling();
        assert_eq!(&h - &r.scaled(2), DivisorClass::new(1, -2));
        assert_eq!((h.clone() + r.clone()).total_degree(), BigInt::from(4));
        assert_eq!(-h, DivisorClass::new(-1, 0));
    }
}
