//! Shape of the curve C' linked to an extremal curve C on its minimal
//! surface S, as a function of the case `k` and the scroll type.
//!
//! Every report carries the coarse case. The detailed list of possible
//! configurations is produced for the three combinations where it is known:
//! `k = 2` on S(0,1,2), `k = 1` on S(1,1,1) and `k = 0` on S(0,0,3).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bounds::{admissible, decompose, ExtremalParams};
use crate::error::{Error, Result};
use crate::scroll::{multiplicity_along_l, DivisorClass, ResolvedClass, ScrollType};

/// The linear equivalence class of the minimal surface S inside X.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SurfaceClassOfS {
    pub cls: DivisorClass,
}

impl SurfaceClassOfS {
    /// `(w + 1)H - (2 - v)R`.
    pub fn standard(w: i64, v: i64) -> Self {
        SurfaceClassOfS {
            cls: DivisorClass::new(w + 1, v - 2),
        }
    }

    /// `wH + R`, possible only when `v = 0`.
    pub fn alternative(w: i64) -> Self {
        SurfaceClassOfS {
            cls: DivisorClass::new(w, 1),
        }
    }

    /// All classes S can have for the given `(w, v)`.
    pub fn candidates(w: i64, v: i64) -> Vec<Self> {
        let mut out = vec![Self::standard(w, v)];
        if v == 0 {
            out.push(Self::alternative(w));
        }
        out
    }

    pub fn degree(&self) -> BigInt {
        self.cls.total_degree()
    }
}

impl fmt::Display for SurfaceClassOfS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cls.fmt(f)
    }
}

impl FromStr for SurfaceClassOfS {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(|cls| SurfaceClassOfS { cls })
    }
}

/// Which of the two admissible classes S has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SKind {
    Standard,
    HyperplanePlusRuling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoarseCase {
    /// `k = 3`: C is a complete intersection on S, C' is empty.
    CompleteIntersection,
    /// `k = 2`: C' is a plane curve.
    PlaneCurve,
    /// `k = 1`: C' lies on a surface of degree 2.
    OnDegree2Surface,
    /// `k = 0`: C' lies on a surface of degree 3.
    OnDegree3Surface,
}

impl CoarseCase {
    pub fn from_k(k: i64) -> Result<Self> {
        match k {
            3 => Ok(CoarseCase::CompleteIntersection),
            2 => Ok(CoarseCase::PlaneCurve),
            1 => Ok(CoarseCase::OnDegree2Surface),
            0 => Ok(CoarseCase::OnDegree3Surface),
            _ => Err(Error::InvalidArgument(format!("case k={k} is outside 0..=3"))),
        }
    }
}

/// The surface a component of C' or C'' lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Support {
    /// A plane of the ruling, class R.
    RulingPlane,
    /// The plane of class H - 2R on S(0,1,2).
    PlaneHMinus2R,
    /// A plane meeting X in a curve but not contained in it.
    OffScrollPlane,
    /// A quadric surface of class H - R.
    Quadric,
    /// A hyperplane section of a quadric cone of class H - R.
    QuadricConeSection,
    /// A hyperplane section L of X.
    HyperplaneSection,
    /// The vertex line l of S(0,0,3).
    VertexLine,
    /// One of the lines cut on X by an off-scroll plane.
    OffScrollLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexIncidence {
    Avoids,
    PassesThrough,
    Either,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualComponent {
    pub label: String,
    pub support: Support,
    pub degree: i64,
    /// Bidegree when the component is a curve on a smooth quadric.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub curve_type: Option<(i64, i64)>,
    pub vertex: VertexIncidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Incidence {
    pub between: (String, String),
    pub points: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub location: Option<String>,
}

/// One possible configuration of C'.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternative {
    pub description: String,
    pub components: Vec<ResidualComponent>,
    pub incidences: Vec<Incidence>,
    /// Proper transform of S on the resolution (S(0,0,3) only).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s_proper_transform: Option<ResolvedClass>,
    /// Multiplicity of the vertex line l in C' (S(0,0,3) only).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub line_multiplicity: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FineFamily {
    Plane,
    Quadric,
    Cubic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FineCase {
    pub family: FineFamily,
    pub alternatives: Vec<Alternative>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub constraints: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub params: ExtremalParams,
    pub scroll: ScrollType,
    pub surface_class: SurfaceClassOfS,
    pub k: i64,
    pub residual_degree: i64,
    pub coarse: CoarseCase,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fine: Option<FineCase>,
    pub nonexistent: bool,
    pub outside_theorem_range: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Run for `4 <= s <= 8`, below the range where the classification is
    /// proven. The report then carries a note.
    pub allow_small_s: bool,
}

fn resolve_s_class(
    p: &ExtremalParams,
    scroll: ScrollType,
    given: &SurfaceClassOfS,
) -> Result<(SurfaceClassOfS, SKind)> {
    let mismatch = || Error::InconsistentSurfaceClass {
        class: given.to_string(),
        w: p.w,
        v: p.v,
    };
    if given.degree() != BigInt::from(p.s) {
        return Err(mismatch());
    }
    if scroll == ScrollType::S003 {
        return Ok(if p.v == 0 {
            (SurfaceClassOfS::alternative(p.w), SKind::HyperplanePlusRuling)
        } else {
            (SurfaceClassOfS::standard(p.w, p.v), SKind::Standard)
        });
    }
    if *given == SurfaceClassOfS::standard(p.w, p.v) {
        Ok((given.clone(), SKind::Standard))
    } else if p.v == 0 && *given == SurfaceClassOfS::alternative(p.w) {
        Ok((given.clone(), SKind::HyperplanePlusRuling))
    } else {
        Err(mismatch())
    }
}

fn nonexistence(p: &ExtremalParams, scroll: ScrollType, kind: SKind) -> bool {
    if scroll != ScrollType::S111 || p.k != 1 {
        return false;
    }
    let (w, eps) = (p.w, p.epsilon);
    (p.v == 1 && ![w, w + 1, 2 * w - 1].contains(&eps))
        || (p.v == 0 && kind == SKind::Standard && ![w, w + 1].contains(&eps))
}

/// Whether no curve of maximal genus exists for these inputs.
pub fn is_nonexistent(d: i64, s: i64, scroll: ScrollType, s_class: &SurfaceClassOfS) -> Result<bool> {
    let p = decompose(d, s)?;
    let (_, kind) = resolve_s_class(&p, scroll, s_class)?;
    Ok(nonexistence(&p, scroll, kind))
}

pub fn classify(d: i64, s: i64, scroll: ScrollType, s_class: &SurfaceClassOfS) -> Result<ClassificationReport> {
    classify_with(d, s, scroll, s_class, ClassifyOptions::default())
}

pub fn classify_with(
    d: i64,
    s: i64,
    scroll: ScrollType,
    s_class: &SurfaceClassOfS,
    options: ClassifyOptions,
) -> Result<ClassificationReport> {
    if s < 9 && !(options.allow_small_s && s >= 4) {
        return Err(Error::ClassificationUnsupported(s));
    }
    let p = decompose(d, s)?;
    let (surface_class, kind) = resolve_s_class(&p, scroll, s_class)?;
    let mut notes = Vec::new();
    if s < 9 {
        notes.push(format!(
            "forced: s={s} is below 9, where the classification is not proven"
        ));
    }
    if scroll == ScrollType::S003 && p.v == 0 {
        notes.push("on S(0,0,3) the classes (w+1)H-2R and wH+R coincide; S~ ~ wH~+R~ is used".to_string());
    }
    let nonexistent = nonexistence(&p, scroll, kind);
    let fine = match (p.k, scroll) {
        (3, _) => {
            notes.push("C is a complete intersection on S; C' is empty".to_string());
            None
        }
        (2, ScrollType::S012) => Some(plane_case(&p, kind)),
        (1, ScrollType::S111) => {
            notes.push("nonexistence is decided on the smooth scroll S(1,1,1)".to_string());
            Some(quadric_case(&p, kind, nonexistent))
        }
        (0, ScrollType::S003) => Some(cubic_case(&p)?),
        (k, _) => {
            let detailed = match k {
                2 => ScrollType::S012,
                1 => ScrollType::S111,
                _ => ScrollType::S003,
            };
            notes.push(format!("detailed shapes for k={k} are only established on {detailed}"));
            None
        }
    };
    let outside_theorem_range = !admissible(d, s);
    if outside_theorem_range {
        notes.push("outside theorem range: d is below the admissibility threshold".to_string());
    }
    Ok(ClassificationReport {
        params: p,
        scroll,
        surface_class,
        k: p.k,
        residual_degree: p.residual_degree(),
        coarse: CoarseCase::from_k(p.k)?,
        fine,
        nonexistent,
        outside_theorem_range,
        notes,
    })
}

/// One report per admissible class of S (two when `v = 0` on S(1,1,1) or
/// S(0,1,2), one otherwise).
pub fn classify_auto(
    d: i64,
    s: i64,
    scroll: ScrollType,
    options: ClassifyOptions,
) -> Result<Vec<ClassificationReport>> {
    let p = decompose(d, s)?;
    let mut classes = SurfaceClassOfS::candidates(p.w, p.v);
    if scroll == ScrollType::S003 {
        classes.truncate(1);
    }
    classes
        .iter()
        .map(|c| classify_with(d, s, scroll, c, options))
        .collect()
}

/// The components added to C' to form C'', the curve linked to C by
/// X cap F cap G with deg F = m + 1, deg G = w + 1.
pub fn residual_composition(
    p: &ExtremalParams,
    scroll: ScrollType,
    s_class: &SurfaceClassOfS,
) -> Result<Vec<ResidualComponent>> {
    let (_, kind) = resolve_s_class(p, scroll, s_class)?;
    let plane = |label: &str| ResidualComponent {
        label: label.to_string(),
        support: Support::RulingPlane,
        degree: p.m + 1,
        curve_type: None,
        vertex: VertexIncidence::NotApplicable,
    };
    Ok(match (p.v, kind) {
        (2, _) => vec![],
        (1, _) => vec![plane("C_1")],
        (_, SKind::Standard) => vec![plane("C_1"), plane("C_2")],
        (_, SKind::HyperplanePlusRuling) => vec![ResidualComponent {
            label: "C_q".to_string(),
            support: Support::Quadric,
            degree: 2 * (p.m + 1),
            curve_type: Some((p.m + 1, p.m + 1)),
            vertex: VertexIncidence::NotApplicable,
        }],
    })
}

/// Proper transform of F ~ (m+1)H containing the hyperplane section
/// through l with multiplicity `b`: `(m + 1 - b)H~ + 3bR~`.
pub fn hypersurface_proper_transform(m: i64, b: i64) -> Result<ResolvedClass> {
    if !(0..=m + 1).contains(&b) {
        return Err(Error::InvalidArgument(format!("b={b} is outside 0..={}", m + 1)));
    }
    Ok(ResolvedClass::new(m + 1 - b, 3 * b))
}

/// Proper transform of S on S(0,0,3) in the parametrization of its `v`:
///
/// - `v = 2`: `(w + 1 - a)H~ + 3aR~`, `0 <= a <= w + 1`
/// - `v = 1`: `aH~ + (3w - 3a + 2)R~`, `0 <= a <= w`
/// - `v = 0`: `aH~ + (3w - 3a + 1)R~`, `0 <= a <= w`
pub fn surface_proper_transform(w: i64, v: i64, a: i64) -> Result<ResolvedClass> {
    let bad = || Error::InvalidArgument(format!("a={a} is not a valid parameter for w={w}, v={v}"));
    match v {
        2 if (0..=w + 1).contains(&a) => Ok(ResolvedClass::new(w + 1 - a, 3 * a)),
        1 if (0..=w).contains(&a) => Ok(ResolvedClass::new(a, 3 * w - 3 * a + 2)),
        0 if (0..=w).contains(&a) => Ok(ResolvedClass::new(a, 3 * w - 3 * a + 1)),
        _ => Err(bad()),
    }
}

/// Multiplicity of the vertex line l in C' = S cap F - C on S(0,0,3).
pub fn line_multiplicity_in_residual(s_tilde: &ResolvedClass, f_tilde: &ResolvedClass) -> Result<i64> {
    let mult = multiplicity_along_l(f_tilde, s_tilde)?;
    mult.to_i64()
        .ok_or_else(|| Error::InvalidArgument(format!("multiplicity {mult} overflows i64")))
}

fn comp(label: &str, support: Support, degree: i64, vertex: VertexIncidence) -> ResidualComponent {
    ResidualComponent {
        label: label.to_string(),
        support,
        degree,
        curve_type: None,
        vertex,
    }
}

fn typed(label: &str, support: Support, (a, b): (i64, i64), vertex: VertexIncidence) -> ResidualComponent {
    ResidualComponent {
        label: label.to_string(),
        support,
        degree: a + b,
        curve_type: Some((a, b)),
        vertex,
    }
}

fn meet(a: &str, b: &str, points: i64, location: Option<&str>) -> Incidence {
    Incidence {
        between: (a.to_string(), b.to_string()),
        points,
        location: location.map(str::to_string),
    }
}

fn alt(description: impl Into<String>, components: Vec<ResidualComponent>, incidences: Vec<Incidence>) -> Alternative {
    let components: Vec<ResidualComponent> = components.into_iter().filter(|c| c.degree > 0).collect();
    let present = |label: &String| components.iter().any(|c| &c.label == label);
    let incidences = incidences
        .into_iter()
        .filter(|i| i.points > 0 && present(&i.between.0) && present(&i.between.1))
        .collect();
    Alternative {
        description: description.into(),
        components,
        incidences,
        s_proper_transform: None,
        line_multiplicity: None,
    }
}

fn plane_case(p: &ExtremalParams, kind: SKind) -> FineCase {
    use Support::*;
    use VertexIncidence::*;
    let (w, c) = (p.w, p.residual_degree());
    let mut alternatives = Vec::new();
    let mut constraints = Vec::new();
    match (p.v, kind) {
        (2, _) => {
            alternatives.push(alt(
                "plane curve in pi ~ R",
                vec![comp("C'", RulingPlane, c, Avoids)],
                vec![],
            ));
            constraints.push(format!("1 <= deg C' <= w+1 = {}", w + 1));
        }
        (1, _) => {
            if c == w + 1 {
                alternatives.push(alt(
                    "plane curve in pi ~ R through the vertex",
                    vec![comp("C'", RulingPlane, c, PassesThrough)],
                    vec![],
                ));
            } else {
                alternatives.push(alt(
                    "plane curve in pi ~ R",
                    vec![comp("C'", RulingPlane, c, Either)],
                    vec![],
                ));
                alternatives.push(alt(
                    "plane curve in p ~ H-2R",
                    vec![comp("C'", PlaneHMinus2R, c, Either)],
                    vec![],
                ));
            }
            if c == 2 {
                alternatives.push(alt(
                    "two lines through the vertex spanning a plane not in X",
                    vec![
                        comp("r_1", OffScrollLine, 1, PassesThrough),
                        comp("r_2", OffScrollLine, 1, PassesThrough),
                    ],
                    vec![meet("r_1", "r_2", 1, Some("V"))],
                ));
                alternatives.push(alt(
                    "conic cut on a quadric cone ~ H-R by a plane not in X",
                    vec![comp("C'", QuadricConeSection, 2, Either)],
                    vec![],
                ));
            }
        }
        (_, SKind::Standard) => {
            constraints.push(format!("deg C' <= w-1 = {}", w - 1));
            constraints.push(format!("deg C' = w = {w} is excluded since S.p.H = w-1"));
            if c < w {
                alternatives.push(alt(
                    "plane curve in p ~ H-2R",
                    vec![comp("C'", PlaneHMinus2R, c, Either)],
                    vec![],
                ));
            }
            if c == 1 {
                alternatives.push(alt(
                    "line in pi ~ R through the vertex",
                    vec![comp("C'", RulingPlane, 1, PassesThrough)],
                    vec![],
                ));
            }
        }
        (_, SKind::HyperplanePlusRuling) => {
            alternatives.push(alt(
                "plane curve in pi ~ R",
                vec![comp("C'", RulingPlane, c, Either)],
                vec![],
            ));
        }
    }
    FineCase {
        family: FineFamily::Plane,
        alternatives,
        constraints,
    }
}

fn quadric_case(p: &ExtremalParams, kind: SKind, nonexistent: bool) -> FineCase {
    use Support::*;
    use VertexIncidence::NotApplicable as NA;
    let (w, v, eps) = (p.w, p.v, p.epsilon);
    let mut alternatives = Vec::new();
    let mut constraints = Vec::new();
    if nonexistent {
        constraints.push("no curve of maximal genus exists".to_string());
        return FineCase {
            family: FineFamily::Quadric,
            alternatives,
            constraints,
        };
    }
    if kind == SKind::Standard && (eps == w || eps == w + 1) {
        let ty = if eps == w { (w - 1 + v, w + 1) } else { (w - 1 + v, w) };
        alternatives.push(alt(
            format!("curve of type ({}, {}) on a smooth quadric Q ~ H-R", ty.0, ty.1),
            vec![typed("C'", Quadric, ty, NA)],
            vec![],
        ));
    }
    let two_planes = match (v, kind) {
        (2, _) => Some((2 * w + 1 - eps, w + 1)),
        (0, SKind::HyperplanePlusRuling) => Some((2 * w - eps, w)),
        _ => None,
    };
    if let Some((d1, d2)) = two_planes {
        alternatives.push(alt(
            "union of curves on two disjoint planes pi_1, pi_2 ~ R",
            vec![comp("C'_1", RulingPlane, d1, NA), comp("C'_2", RulingPlane, d2, NA)],
            vec![],
        ));
    }
    let second = match (v, eps) {
        (2, e) if e == 2 * w - 1 => Some((1, 1)),
        (2, e) if e == 2 * w => Some((0, 1)),
        (1, e) if e == 2 * w - 1 => Some((0, 1)),
        _ => None,
    };
    if let Some(ty) = second {
        alternatives.push(alt(
            "curve of degree w+1 on pi ~ R plus a curve on a plane sigma not in X",
            vec![
                comp("C'_1", RulingPlane, w + 1, NA),
                typed("C'_2", OffScrollPlane, ty, NA),
            ],
            vec![meet("C'_1", "C'_2", 1, None)],
        ));
    }
    FineCase {
        family: FineFamily::Quadric,
        alternatives,
        constraints,
    }
}

fn cubic_case(p: &ExtremalParams) -> Result<FineCase> {
    use Support::*;
    use VertexIncidence::NotApplicable as NA;
    let (w, v, eps, m) = (p.w, p.v, p.epsilon, p.m);
    let c = p.residual_degree();
    let on_l = Some("l");
    let mut alternatives = Vec::new();
    let with_line = |mut a: Alternative, s_tilde: ResolvedClass, contains_l: bool| -> Result<Alternative> {
        let f_tilde = hypersurface_proper_transform(m, i64::from(contains_l))?;
        a.line_multiplicity = Some(line_multiplicity_in_residual(&s_tilde, &f_tilde)?);
        a.s_proper_transform = Some(s_tilde);
        Ok(a)
    };
    let three_planes = |l_mult: i64, d12: i64, d3: i64, n12: i64, n3: i64| {
        alt(
            "L splits into three planes pi_i ~ R",
            vec![
                comp("l", VertexLine, l_mult, NA),
                comp("C'_1", RulingPlane, d12, NA),
                comp("C'_2", RulingPlane, d12, NA),
                comp("C'_3", RulingPlane, d3, NA),
            ],
            vec![
                meet("C'_1", "C'_2", n12, on_l),
                meet("C'_1", "C'_3", n3, on_l),
                meet("C'_2", "C'_3", n3, on_l),
            ],
        )
    };
    match eps {
        0 | 1 => {
            let linked = if eps == 0 { "a line" } else { "a conic" };
            alternatives.push(alt(
                format!("in a hyperplane section L, linked to {linked} by S cap L"),
                vec![comp("C'", HyperplaneSection, c, NA)],
                vec![],
            ));
        }
        _ => match v {
            2 => {
                for a in 0..=w - eps {
                    let s_tilde = surface_proper_transform(w, 2, a)?;
                    let shape = three_planes(3 * a, w + 1 - a, w - eps - a, w + 1 - a, w - eps - a);
                    alternatives.push(with_line(shape, s_tilde, true)?);
                }
            }
            1 => {
                for a in eps + 1..=w {
                    let s_tilde = surface_proper_transform(w, 1, a)?;
                    let shape = three_planes(3 * (w - a) + 2, a, a - eps - 1, w + 1 - a, w - eps - a);
                    alternatives.push(with_line(shape, s_tilde, true)?);
                }
            }
            _ => {
                let s_tilde = surface_proper_transform(w, 0, w)?;
                let shape = if eps == w - 1 {
                    with_line(three_planes(0, w, w - eps, w, w - eps), s_tilde, false)?
                } else {
                    with_line(three_planes(1, w, w - eps - 1, w, w - eps - 1), s_tilde, true)?
                };
                alternatives.push(shape);
            }
        },
    }
    if v == 0 && eps == w - 2 {
        alternatives.push(alt(
            "two planes pi_1, pi_2 ~ R and a plane sigma not in X",
            vec![
                comp("C'_1", RulingPlane, w, NA),
                comp("C'_2", RulingPlane, w, NA),
                comp("r_1", OffScrollLine, 1, NA),
                comp("r_2", OffScrollLine, 1, NA),
            ],
            vec![
                meet("C'_1", "C'_2", w, on_l),
                meet("r_1", "C'_1", 1, Some("common point of C'_1 and C'_2 on l")),
                meet("r_1", "C'_2", 1, Some("common point of C'_1 and C'_2 on l")),
                meet("r_2", "C'_1", 1, Some("common point of C'_1 and C'_2 on l")),
                meet("r_2", "C'_2", 1, Some("common point of C'_1 and C'_2 on l")),
            ],
        ));
    }
    Ok(FineCase {
        family: FineFamily::Cubic,
        alternatives,
        constraints: vec![],
    })
}
