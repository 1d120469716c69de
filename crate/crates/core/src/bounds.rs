//! The numerical characters of an extremal curve: the decomposition of
//! `(d, s)`, the h-vector of a general hyperplane section and the genus
//! bound it determines.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The tuple `(d, s, m, epsilon, w, v, k, delta, e)` attached to a degree
/// `d` and a minimal surface degree `s`.
///
/// ```text
/// d - 1 = s m + epsilon              0 <= epsilon <= s - 1
/// s - 1 = 3 w + v                    0 <= v <= 2
/// epsilon = k w + delta              if epsilon <  w (4 - v)   (e = 0)
/// epsilon + 3 - v = k (w + 1) + delta  otherwise               (e = 1)
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtremalParams {
    pub d: i64,
    pub s: i64,
    pub m: i64,
    pub epsilon: i64,
    pub w: i64,
    pub v: i64,
    pub k: i64,
    pub delta: i64,
    pub e: i64,
}

impl ExtremalParams {
    /// Degree of the curve C' linked to C on S by a hypersurface of degree
    /// `m + 1`, i.e. `s(m + 1) - d = s - epsilon - 1`.
    pub fn residual_degree(&self) -> i64 {
        self.s - self.epsilon - 1
    }

    /// Whether the profile plateau `w < n <= m` makes sense, i.e. `m >= w`.
    pub fn in_profile_domain(&self) -> bool {
        self.m >= self.w
    }

    pub fn is_admissible(&self) -> bool {
        admissible(self.d, self.s)
    }
}

pub fn decompose(d: i64, s: i64) -> Result<ExtremalParams> {
    if s < 4 {
        return Err(Error::SurfaceDegreeTooSmall(s));
    }
    if d <= s {
        return Err(Error::DegreeTooSmall { d, s });
    }
    let (m, epsilon) = ((d - 1) / s, (d - 1) % s);
    let (w, v) = ((s - 1) / 3, (s - 1) % 3);
    let (k, delta, e) = if epsilon < w * (4 - v) {
        (epsilon / w, epsilon % w, 0)
    } else {
        let n = epsilon + 3 - v;
        (n / (w + 1), n % (w + 1), 1)
    };
    Ok(ExtremalParams {
        d,
        s,
        m,
        epsilon,
        w,
        v,
        k,
        delta,
        e,
    })
}

/// `d > (2s/3) (24 s)^(11/6)`, decided as `(3d)^6 > (2s)^6 (24s)^11`.
pub fn admissible(d: i64, s: i64) -> bool {
    let lhs = BigInt::from(3 * d).pow(6u32);
    let rhs = BigInt::from(2 * s).pow(6u32) * BigInt::from(24 * s).pow(11u32);
    d > 0 && lhs > rhs
}

/// First difference `Delta h(0..=m+w+e)` of the Hilbert function of a
/// general hyperplane section of an extremal curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaHProfile(pub Vec<i64>);

impl DeltaHProfile {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Cumulative Hilbert function `h(n) = sum_{j <= n} Delta h(j)`.
    pub fn hilbert_function(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0, |acc, x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    /// `sum_{r > n} Delta h(r)`.
    pub fn tail_sum(&self, n: i64) -> i64 {
        let start = usize::try_from(n + 1).unwrap_or(0);
        self.0.iter().skip(start).sum()
    }
}

pub fn delta_h(params: &ExtremalParams) -> Result<DeltaHProfile> {
    let ExtremalParams {
        d,
        s,
        m,
        w,
        k,
        delta,
        e,
        ..
    } = *params;
    if m < w {
        return Err(Error::OutsideProfileDomain { d, s, m, w });
    }
    let values: Vec<i64> = (0..=m + w + e)
        .map(|n| {
            if n <= w {
                3 * n + 1
            } else if n <= m {
                s
            } else if n <= m + delta {
                s + k - 3 * (n - m)
            } else {
                s + k - 3 * (n - m) - 1
            }
        })
        .collect();
    let profile = DeltaHProfile(values);
    let sum = profile.degree();
    if sum != d || profile.0.iter().any(|&x| x < 0) {
        return Err(Error::ProfileInconsistent { d, sum });
    }
    Ok(profile)
}

/// Arithmetic genus of an ACM curve with the given h-vector,
/// `sum_{n >= 2} (n - 1) Delta h(n)`.
pub fn genus_from_profile(profile: &DeltaHProfile) -> i64 {
    profile.0.iter().zip(0i64..).skip(2).map(|(x, n)| (n - 1) * x).sum()
}

/// The maximal genus G(d, 5, s), computed through the profile.
pub fn max_genus(d: i64, s: i64) -> Result<i64> {
    let params = decompose(d, s)?;
    Ok(genus_from_profile(&delta_h(&params)?))
}

/// The closed expression
///
/// ```text
/// 1 + d/2 (m + w - 2) - (m + 1)/2 (w - 3) + v m/2 (w + 1) + rho
/// rho = -delta/2 (w - delta)                               if epsilon < w (4 - v)
/// rho = epsilon/2 - w/2 (3 - v) - delta/2 (w - delta + 1)  otherwise
/// ```
///
/// evaluated exactly. It does not agree with [`genus_from_profile`] and is
/// kept only as a comparison target.
pub fn closed_form_genus(p: &ExtremalParams) -> BigRational {
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let int = |n: i64| BigRational::from_integer(n.into());
    let rho = if p.epsilon < p.w * (4 - p.v) {
        q(-p.delta, 2) * int(p.w - p.delta)
    } else {
        q(p.epsilon, 2) - q(p.w, 2) * int(3 - p.v) - q(p.delta, 2) * int(p.w - p.delta + 1)
    };
    int(1) + q(p.d, 2) * int(p.m + p.w - 2) - q(p.m + 1, 2) * int(p.w - 3) + q(p.v * p.m, 2) * int(p.w + 1) + rho
}

/// `sum_{r > m + w - i} Delta h(r)`, the lower bound for
/// `h^0(I_{C''|X}(iH + R))`.
pub fn residual_dimension(params: &ExtremalParams, i: i64) -> Result<i64> {
    if !(0..=params.w).contains(&i) {
        return Err(Error::InvalidArgument(format!("i = {i} is outside 0..={}", params.w)));
    }
    Ok(delta_h(params)?.tail_sum(params.m + params.w - i))
}

/// Maximal genus of a curve of degree `s` in P^4 not on a surface of
/// degree < 3, from the capped profile `min(3n + 1, s)`.
pub fn castelnuovo_p4(s: i64) -> Result<i64> {
    if s < 4 {
        return Err(Error::SurfaceDegreeTooSmall(s));
    }
    Ok((1..).map(|n| s - (3 * n + 1).min(s)).take_while(|&x| x > 0).sum())
}

/// The closed value `w(w-1)(w-2)/2 + wv` for the P^4 bound. It differs
/// from [`castelnuovo_p4`] and is kept only as a comparison target.
pub fn closed_castelnuovo_p4(s: i64) -> i64 {
    let (w, v) = ((s - 1) / 3, (s - 1) % 3);
    w * (w - 1) * (w - 2) / 2 + w * v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(d: i64, s: i64) -> ExtremalParams {
        decompose(d, s).unwrap()
    }

    #[test]
    fn decompositions() {
        let cases = [
            ((96, 9), (10, 5, 2, 2, 2, 0, 1)),
            ((99, 9), (10, 8, 2, 2, 3, 0, 1)),
            ((93, 9), (10, 2, 2, 2, 1, 0, 0)),
            ((91, 9), (10, 0, 2, 2, 0, 0, 0)),
        ];
        for ((d, s), (m, eps, w, v, k, delta, e)) in cases {
            let x = p(d, s);
            assert_eq!(
                (x.m, x.epsilon, x.w, x.v, x.k, x.delta, x.e),
                (m, eps, w, v, k, delta, e)
            );
        }
    }

    #[test]
    fn decompose_rejects_small_inputs() {
        assert_eq!(decompose(50, 3), Err(Error::SurfaceDegreeTooSmall(3)));
        assert_eq!(decompose(9, 9), Err(Error::DegreeTooSmall { d: 9, s: 9 }));
    }

    #[test]
    fn admissibility_threshold() {
        assert!(!admissible(96, 9));
        assert!(admissible(200_000, 9));
        assert!(!admissible(114_283, 9));
        assert!(admissible(114_284, 9));
        // 24 s = 6^6 makes the threshold an integer: d = (2s/3) 6^11.
        let s = 1944;
        let d = 2 * s / 3 * 6i64.pow(11);
        assert!(!admissible(d, s));
        assert!(admissible(d + 1, s));
    }

    #[test]
    fn profiles() {
        assert_eq!(
            delta_h(&p(96, 9)).unwrap().0,
            [1, 4, 7, 9, 9, 9, 9, 9, 9, 9, 9, 7, 4, 1]
        );
        assert_eq!(delta_h(&p(99, 9)).unwrap().0[11..], [8, 5, 2]);
        assert_eq!(
            delta_h(&p(114, 11)).unwrap().0,
            [1, 4, 7, 10, 11, 11, 11, 11, 11, 11, 11, 8, 5, 2]
        );
        let h = delta_h(&p(96, 9)).unwrap().hilbert_function();
        assert_eq!(*h.last().unwrap(), 96);
    }

    #[test]
    fn profile_needs_m_at_least_w() {
        let params = p(341, 34);
        assert_eq!(params.m, 10);
        assert_eq!(params.w, 11);
        assert!(matches!(delta_h(&params), Err(Error::OutsideProfileDomain { .. })));
    }

    #[test]
    fn genera() {
        for ((d, s), g) in [
            ((99, 9), 562),
            ((96, 9), 529),
            ((93, 9), 496),
            ((91, 9), 475),
            ((114, 11), 648),
        ] {
            assert_eq!(max_genus(d, s).unwrap(), g, "({d}, {s})");
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(closed_form_genus(&p(99, 9)), BigRational::new(1069.into(), 2.into()));
        assert_eq!(closed_form_genus(&p(96, 9)), BigRational::from_integer(518.into()));
    }

    #[test]
    fn residual_dimensions() {
        assert_eq!(residual_dimension(&p(96, 9), 0).unwrap(), 1);
        assert_eq!(residual_dimension(&p(93, 9), 0).unwrap(), 0);
        assert_eq!(residual_dimension(&p(93, 9), 1).unwrap(), 3);
        assert_eq!(residual_dimension(&p(99, 9), 0).unwrap(), 2);
        assert!(residual_dimension(&p(99, 9), 3).is_err());
        assert!(residual_dimension(&p(99, 9), -1).is_err());
    }

    #[test]
    fn p4_bounds() {
        assert_eq!(castelnuovo_p4(9).unwrap(), 7);
        assert_eq!(castelnuovo_p4(10).unwrap(), 9);
        assert_eq!(castelnuovo_p4(4).unwrap(), 0);
        assert!(castelnuovo_p4(3).is_err());
        assert_eq!(closed_castelnuovo_p4(9), 4);
        for s in 4..200 {
            let (w, v) = ((s - 1) / 3, (s - 1) % 3);
            assert_eq!(castelnuovo_p4(s).unwrap(), 3 * w * (w - 1) / 2 + w * v);
        }
    }

    proptest! {
        #[test]
        fn decomposition_reconstructs(s in 4i64..400, m in 1i64..400, eps_frac in 0.0f64..1.0) {
            let eps = ((s as f64) * eps_frac) as i64;
            let d = s * m + eps + 1;
            let x = decompose(d, s).unwrap();
            prop_assert_eq!(x.d, x.s * x.m + x.epsilon + 1);
            prop_assert_eq!(x.s, 3 * x.w + x.v + 1);
            prop_assert!((0..=3).contains(&x.k));
            prop_assert_eq!(x.k == 3, x.epsilon == s - 1);
            prop_assert_eq!(x.k == 3, x.residual_degree() == 0);
            prop_assert_eq!(x.e == 0, x.epsilon < x.w * (4 - x.v));
            if x.e == 0 {
                prop_assert_eq!(x.epsilon, x.k * x.w + x.delta);
                prop_assert!(x.delta < x.w);
            } else {
                prop_assert_eq!(x.epsilon + 3 - x.v, x.k * (x.w + 1) + x.delta);
                prop_assert!(x.delta < x.w + 1);
            }
        }

        #[test]
        fn profile_tail_is_monotone(s in 4i64..200, extra in 0i64..20, eps_frac in 0.0f64..1.0) {
            let w = (s - 1) / 3;
            let m = w + extra;
            let eps = ((s as f64) * eps_frac) as i64;
            let x = decompose(s * m + eps + 1, s).unwrap();
            let profile = delta_h(&x).unwrap();
            let tail = &profile.values()[(x.m as usize + 1)..];
            prop_assert!(tail.windows(2).all(|pair| pair[0] >= pair[1]));
            let dims: Vec<i64> = (0..=x.w).map(|i| residual_dimension(&x, i).unwrap()).collect();
            prop_assert!(dims.windows(2).all(|pair| pair[0] <= pair[1]));
        }
    }
}
