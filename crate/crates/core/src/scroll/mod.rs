//! Divisor calculus on the three cubic rational normal 3-folds in P^5.
//!
//! X is the image of P(E) for E = O(e1) + O(e2) + O(e3) over P^1 with
//! e1 + e2 + e3 = 3. Pic of the resolution X~ = P(E) is generated by the
//! tautological class H~ and the fiber class R~, with
//!
//! ```text
//! H~^3 = 3,  R~.H~^2 = 1,  R~^2.H~ = 0,  R~^3 = 0.
//! ```
//!
//! On S(1,1,1) and S(0,1,2) this form is also the intersection form on
//! Cl(X). On S(0,0,3) classes are only determined by their total degree and
//! intersections go through integral total transforms, see [`singular`].

mod class;
pub mod singular;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use class::{DivisorClass, ResolvedClass};
pub use singular::{
    canonicalize_s003, generic_proper_transform, intersection_degree_s003, multiplicity_along_l, total_transform,
    TotalTransform,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScrollType {
    /// Smooth scroll S(1,1,1).
    S111,
    /// Cone with a point vertex V, S(0,1,2).
    S012,
    /// Cone with a vertex line l, S(0,0,3).
    S003,
}

impl ScrollType {
    pub const ALL: [ScrollType; 3] = [ScrollType::S111, ScrollType::S012, ScrollType::S003];

    /// Degrees of the line bundle summands of E, ascending.
    pub fn splitting_degrees(self) -> [i64; 3] {
        match self {
            ScrollType::S111 => [1, 1, 1],
            ScrollType::S012 => [0, 1, 2],
            ScrollType::S003 => [0, 0, 3],
        }
    }

    /// Dimension of the singular locus, `None` for the smooth scroll.
    pub fn singular_locus_dim(self) -> Option<u8> {
        match self {
            ScrollType::S111 => None,
            ScrollType::S012 => Some(0),
            ScrollType::S003 => Some(1),
        }
    }

    /// Whether Cl(X) is freely generated by H and R.
    pub fn has_free_class_group(self) -> bool {
        self != ScrollType::S003
    }
}

impl fmt::Display for ScrollType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.splitting_degrees();
        write!(f, "S({a},{b},{c})")
    }
}

impl FromStr for ScrollType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "s111" => Ok(ScrollType::S111),
            "s012" => Ok(ScrollType::S012),
            "s003" => Ok(ScrollType::S003),
            _ => Err(Error::InvalidArgument(format!("unknown scroll type {s:?}"))),
        }
    }
}

/// Triple intersection on the resolution, expanded multilinearly from the
/// rules on H~ and R~.
pub fn resolved_triple_product(a: &ResolvedClass, b: &ResolvedClass, c: &ResolvedClass) -> BigInt {
    &a.h * &b.h * &c.h * 3 + &a.h * &b.h * &c.r + &a.h * &b.r * &c.h + &a.r * &b.h * &c.h
}

/// Triple intersection of Weil divisor classes on S(1,1,1) or S(0,1,2).
///
/// On S(0,0,3) the class group is not free of rank two, so only resolved
/// classes can be multiplied there; see [`resolved_triple_product`].
pub fn triple_product(scroll: ScrollType, a: &DivisorClass, b: &DivisorClass, c: &DivisorClass) -> Result<BigInt> {
    if !scroll.has_free_class_group() {
        return Err(Error::UnsupportedScroll {
            op: "triple_product on Weil classes",
            scroll,
        });
    }
    Ok(resolved_triple_product(&a.into(), &b.into(), &c.into()))
}

/// Degree of `D . D' . H`, i.e. of the intersection curve of two surfaces
/// without common components, on S(1,1,1) or S(0,1,2).
pub fn intersection_degree(scroll: ScrollType, a: &DivisorClass, b: &DivisorClass) -> Result<BigInt> {
    triple_product(scroll, a, b, &DivisorClass::hyperplane())
}

fn binomial_a2(a: &BigInt, k: u32) -> BigInt {
    // C(a+2, k) for k in {2, 3}, a >= 0
    let n2 = (a + 2u32) * (a + 1u32);
    match k {
        2 => n2 / 2u32,
        3 => n2 * a / 6u32,
        _ => unreachable!(),
    }
}

/// `3 C(a+2,3) + (b+1) C(a+2,2)`, the section count of O(aH~ + bR~) that
/// holds on every scroll type when `a >= 0` and `b >= -1`.
pub fn h0_closed_form(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if a.is_negative() || *b < BigInt::from(-1) {
        return None;
    }
    Some(binomial_a2(a, 3) * 3u32 + (b + 1u32) * binomial_a2(a, 2))
}

/// Section count of O(aH~ + bR~) by pushing forward to P^1:
/// the sum over degree-`a` multi-indices alpha of `max(0, alpha.e + b + 1)`.
///
/// The multi-index sum is evaluated one `alpha_3` slice at a time; inside a
/// slice the summand is linear in `alpha_2`, so its positive part is an
/// arithmetic series.
pub fn h0_pushforward(scroll: ScrollType, a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_negative() {
        return BigInt::zero();
    }
    let [e1, e2, e3] = scroll.splitting_degrees();
    let slope = BigInt::from(e2 - e1);
    let mut total = BigInt::zero();
    let mut t = BigInt::zero();
    while &t <= a {
        let n = a - &t;
        let c = &n * e1 + &t * e3 + b + 1u32;
        if slope.is_zero() {
            if c.is_positive() {
                total += (&n + 1u32) * &c;
            }
        } else {
            let u0 = if c.is_positive() {
                BigInt::zero()
            } else {
                (-&c).div_floor(&slope) + 1u32
            };
            if u0 <= n {
                let count = &n - &u0 + 1u32;
                total += &count * &c + &slope * (&u0 + &n) * &count / 2u32;
            }
        }
        t += 1u32;
    }
    total
}

/// h^0 of O(aH~ + bR~) on the resolution of `scroll`.
pub fn h0_resolved(scroll: ScrollType, cls: &ResolvedClass) -> BigInt {
    h0_closed_form(&cls.h, &cls.r).unwrap_or_else(|| h0_pushforward(scroll, &cls.h, &cls.r))
}

/// h^0 of the divisorial sheaf of a Weil class on X.
///
/// On S(0,0,3) the class is first reduced to its total degree and written
/// as `aH + bR` with `0 <= b < 3`.
pub fn h0_weil(scroll: ScrollType, cls: &DivisorClass) -> BigInt {
    match scroll {
        ScrollType::S003 => {
            let t = cls.total_degree();
            if t.is_negative() {
                return BigInt::zero();
            }
            let (a, b) = t.div_mod_floor(&BigInt::from(3));
            h0_closed_form(&a, &b).expect("canonical form has a, b >= 0")
        }
        _ => h0_resolved(scroll, &ResolvedClass::from(cls)),
    }
}

/// Canonical class of the resolution, `-3H~ + R~` for every scroll type.
pub fn canonical_class(_scroll: ScrollType) -> ResolvedClass {
    ResolvedClass::new(-3, 1)
}

/// Arithmetic genus of Y = X cap F cap G with F ~ fH, G ~ gH, by adjunction
/// on the resolution: `2 p_a(Y) - 2 = (K + F + G) . F . G`.
pub fn ci_curve_genus(f: i64, g: i64) -> Result<i64> {
    if f < 1 || g < 1 {
        return Err(Error::InvalidArgument(format!(
            "hypersurface degrees must be positive, got ({f}, {g})"
        )));
    }
    let hf = ResolvedClass::new(f, 0);
    let hg = ResolvedClass::new(g, 0);
    let adjoint = &(&canonical_class(ScrollType::S111) + &hf) + &hg;
    let twice = resolved_triple_product(&adjoint, &hf, &hg);
    let (half, rem) = twice.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero());
    (half + 1u32)
        .to_i64()
        .ok_or_else(|| Error::InvalidArgument(format!("genus of ({f}, {g}) complete intersection overflows i64")))
}

/// Whether a general member of the effective class `proper` (a class on the
/// resolution, i.e. a proper transform) is irreducible.
///
/// S(1,1,1), S(0,1,2): `a = 0, b = 1` or `a > 0, b >= -a`.
/// S(0,0,3): `a = 0, b = 1` or `a > 0, b >= 0`.
pub fn is_irreducible_class(scroll: ScrollType, proper: &ResolvedClass) -> Result<bool> {
    let (a, b) = (&proper.h, &proper.r);
    if a.is_negative() || h0_resolved(scroll, proper).is_zero() {
        return Err(Error::NotEffective(proper.to_string()));
    }
    let plane = a.is_zero() && *b == BigInt::from(1);
    let bound = match scroll {
        ScrollType::S003 => BigInt::zero(),
        _ => -a.clone(),
    };
    Ok(plane || (a.is_positive() && *b >= bound))
}
