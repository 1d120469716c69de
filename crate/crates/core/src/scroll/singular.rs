//! Total-transform calculus on the cone S(0,0,3) with vertex line l.
//!
//! On S(0,0,3) every Weil divisor is a multiple of R, and H ~ 3R. A divisor
//! D is lifted to the resolution X~ in two ways: its proper transform
//! D~ = aH~ + bR~ and its integral total transform
//! D* = D~ + ceil(b/3) E, where E ~ H~ - 3R~ is the exceptional divisor.
//! Intersection degrees on X are computed from total transforms with a
//! correction depending on the fractional parts eps = ceil(q) - q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{resolved_triple_product, DivisorClass, ResolvedClass};
use crate::error::{Error, Result};

/// Integral total transform of a divisor on S(0,0,3).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalTransform {
    pub resolved: ResolvedClass,
    /// Coefficient of the exceptional class E ~ H~ - 3R~.
    #[serde(with = "crate::serde_str")]
    pub ceil_q: BigInt,
    /// `ceil(q) - q`, one of 0, 1/3, 2/3.
    #[serde(with = "crate::serde_str")]
    pub eps: BigRational,
}

/// Canonical representative `aH + bR` with `t = 3a + b`, `0 <= b < 3`, of the
/// class `tR` on S(0,0,3). This is also the proper transform of a generic
/// member of `|tR|`.
pub fn canonicalize_s003(t: &BigInt) -> Result<DivisorClass> {
    if t.is_negative() {
        return Err(Error::NotEffective(format!("{t}R")));
    }
    let (a, b) = t.div_mod_floor(&BigInt::from(3));
    Ok(DivisorClass { h: a, r: b })
}

/// Proper transform of a generic member of the class `cls` on S(0,0,3).
pub fn generic_proper_transform(cls: &DivisorClass) -> Result<ResolvedClass> {
    let canonical = canonicalize_s003(&cls.total_degree())?;
    Ok(ResolvedClass::from(&canonical))
}

/// Integral total transform of the proper transform `aH~ + bR~`, `b >= 0`.
pub fn total_transform(proper: &ResolvedClass) -> Result<TotalTransform> {
    if proper.r.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "{proper} is not a proper transform of a divisor on S(0,0,3)"
        )));
    }
    let three = BigInt::from(3);
    let ceil_q = proper.r.div_ceil(&three);
    let resolved = ResolvedClass {
        h: &proper.h + &ceil_q,
        r: &proper.r - &ceil_q * 3u32,
    };
    let eps = BigRational::from_integer(ceil_q.clone()) - BigRational::new(proper.r.clone(), three);
    Ok(TotalTransform { resolved, ceil_q, eps })
}

/// Degree of the scheme-theoretic intersection of two surfaces on S(0,0,3)
/// given by their proper transforms:
/// `D*.D'*.H~`, plus `3(eps + eps' - 1) + 1` when `floor(eps + eps') = 1`.
pub fn intersection_degree_s003(p1: &ResolvedClass, p2: &ResolvedClass) -> Result<BigInt> {
    let t1 = total_transform(p1)?;
    let t2 = total_transform(p2)?;
    let base = resolved_triple_product(&t1.resolved, &t2.resolved, &ResolvedClass::hyperplane());
    if base.is_negative() {
        return Err(Error::NegativeIntersection(base));
    }
    let sum = &t1.eps + &t2.eps;
    if sum.floor().to_integer().is_one() {
        let correction = (sum - BigRational::one()) * BigInt::from(3) + BigRational::one();
        debug_assert!(correction.is_integer());
        Ok(base + correction.to_integer())
    } else {
        Ok(base)
    }
}

/// Intersection multiplicity of two surfaces along the vertex line l:
/// `deg(D cap D') - D~.D~'.H~`.
pub fn multiplicity_along_l(p1: &ResolvedClass, p2: &ResolvedClass) -> Result<BigInt> {
    let total = intersection_degree_s003(p1, p2)?;
    let off_line = resolved_triple_product(p1, p2, &ResolvedClass::hyperplane());
    let mult = total - off_line;
    if mult.is_negative() {
        return Err(Error::NegativeIntersection(mult));
    }
    Ok(mult)
}

impl TotalTransform {
    /// The full class `D~ + ceil(q) E` on the resolution, which coincides
    /// with [`TotalTransform::resolved`].
    pub fn class_from_parts(proper: &ResolvedClass, ceil_q: &BigInt) -> ResolvedClass {
        let e = ResolvedClass::new(1, -3);
        proper + &e.scaled(ceil_q.clone())
    }

    pub fn eps_is_zero(&self) -> bool {
        self.eps.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rc(h: i64, r: i64) -> ResolvedClass {
        ResolvedClass::new(h, r)
    }

    fn generic(t: i64) -> ResolvedClass {
        generic_proper_transform(&DivisorClass::new(0, t)).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize_s003(&4.into()).unwrap(), DivisorClass::new(1, 1));
        assert_eq!(canonicalize_s003(&3.into()).unwrap(), DivisorClass::new(1, 0));
        assert_eq!(canonicalize_s003(&5.into()).unwrap(), DivisorClass::new(1, 2));
        assert_eq!(canonicalize_s003(&0.into()).unwrap(), DivisorClass::new(0, 0));
        assert!(canonicalize_s003(&(-1).into()).is_err());
    }

    #[test]
    fn total_transforms() {
        let t = total_transform(&rc(1, 1)).unwrap();
        assert_eq!(t.resolved, rc(2, -2));
        assert_eq!(t.eps, q(2, 3));
        let t = total_transform(&rc(0, 1)).unwrap();
        assert_eq!(t.resolved, rc(1, -2));
        assert_eq!(t.eps, q(2, 3));
        let t = total_transform(&rc(0, 3)).unwrap();
        assert_eq!(t.resolved, rc(1, 0));
        assert!(t.eps_is_zero());
        assert_eq!(TotalTransform::class_from_parts(&rc(0, 3), &t.ceil_q), t.resolved);
        assert!(total_transform(&rc(2, -1)).is_err());
    }

    #[test]
    fn total_transform_json_uses_rational_string() {
        let t = total_transform(&rc(1, 2)).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"resolved":"2H~-R~","ceil_q":"1","eps":"1/3"}"#);
        let back: TotalTransform = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn known_intersection_degrees() {
        let plane = rc(0, 1);
        assert_eq!(intersection_degree_s003(&generic(4), &generic(4)).unwrap(), 6.into());
        assert_eq!(intersection_degree_s003(&generic(5), &generic(5)).unwrap(), 8.into());
        assert_eq!(intersection_degree_s003(&generic(7), &plane).unwrap(), 3.into());
        assert_eq!(intersection_degree_s003(&generic(4), &plane).unwrap(), 2.into());
    }

    #[test]
    fn known_line_multiplicities() {
        // (m, b, w, a) = (10, 1, 2, 1): 3ab
        let f = rc(10, 3);
        assert_eq!(multiplicity_along_l(&f, &rc(2, 3)).unwrap(), 3.into());
        // (m, b, w, a) = (10, 1, 3, 2): 3b(w - a) + b
        assert_eq!(multiplicity_along_l(&f, &rc(2, 4)).unwrap(), 4.into());
        assert_eq!(multiplicity_along_l(&f, &rc(0, 5)).unwrap(), 5.into());
        assert_eq!(multiplicity_along_l(&rc(7, 0), &rc(2, 5)).unwrap(), 0.into());
    }

    #[test]
    fn eps_follows_residue() {
        for t in 0..30 {
            let eps = total_transform(&generic(t)).unwrap().eps;
            let expected = match t % 3 {
                0 => q(0, 1),
                1 => q(2, 3),
                _ => q(1, 3),
            };
            assert_eq!(eps, expected, "t = {t}");
        }
    }
}
