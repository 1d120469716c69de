//! Grid sweeps that cross-check the h-vector genus against adjunction and
//! against the liaison reconstruction of every construction.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    castelnuovo_p4, closed_form_genus, decompose, delta_h, genus_from_profile, closed_castelnuovo_p4,
};
use crate::catalog::{expected_genus, recipe_for};
use crate::classifier::CoarseCase;
use crate::error::{Error, Result};
use crate::scroll::{ci_curve_genus, ScrollType};

/// One term of an m specification: a constant, or `w` plus an offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MTerm {
    Const(i64),
    W(i64),
}

impl MTerm {
    fn eval(self, w: i64) -> i64 {
        match self {
            MTerm::Const(c) => c,
            MTerm::W(off) => w + off,
        }
    }
}

impl FromStr for MTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::InvalidArgument(format!("bad m term {s:?}"));
        let s = s.trim();
        match s.strip_prefix('w') {
            Some("") => Ok(MTerm::W(0)),
            Some(rest) => {
                let off: i64 = rest.strip_prefix('+').unwrap_or(rest).parse().map_err(|_| err())?;
                if !rest.starts_with(['+', '-']) {
                    return Err(err());
                }
                Ok(MTerm::W(off))
            }
            None => s.parse().map(MTerm::Const).map_err(|_| err()),
        }
    }
}

/// Which values of m to sweep, as a comma-separated list of terms and
/// ranges in `w`, e.g. `w+5` or `w+2..w+6,10,50`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MSpec {
    text: String,
    items: Vec<(MTerm, MTerm)>,
}

impl MSpec {
    /// The distinct values of m for a given `w`, ascending, restricted to
    /// `m >= 1`.
    pub fn values(&self, w: i64) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .items
            .iter()
            .flat_map(|&(lo, hi)| lo.eval(w)..=hi.eval(w))
            .filter(|&m| m >= 1)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl FromStr for MSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let items = s
            .split(',')
            .map(|item| match item.split_once("..") {
                Some((lo, hi)) => Ok((lo.parse()?, hi.parse()?)),
                None => item.parse().map(|t| (t, t)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MSpec {
            text: s.to_string(),
            items,
        })
    }
}

impl fmt::Display for MSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Pass,
    Fail,
    /// No construction covers this case; only the profile genus is known.
    NoRecipe,
    /// `m < w`, where the h-vector profile is not defined.
    OutOfDomain,
}

impl CellStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::Pass => "pass",
            CellStatus::Fail => "fail",
            CellStatus::NoRecipe => "no-recipe",
            CellStatus::OutOfDomain => "out-of-domain",
        }
    }
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The outcome for one `(s, epsilon, m)` cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub s: i64,
    pub epsilon: i64,
    pub m: i64,
    pub d: i64,
    pub w: i64,
    pub v: i64,
    pub k: i64,
    pub delta: i64,
    pub e: i64,
    pub residual_degree: i64,
    /// Scroll the construction lives on, when there is one.
    pub scroll: Option<ScrollType>,
    pub genus_profile: Option<i64>,
    pub genus_liaison: Option<i64>,
    /// `p_a` of the complete intersection, checked when C is one.
    pub genus_adjunction: Option<i64>,
    pub status: CellStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl CellRecord {
    pub fn case(&self) -> Option<CoarseCase> {
        CoarseCase::from_k(self.k).ok()
    }
}

/// Checks one cell with `d = s m + epsilon + 1`.
pub fn verify_cell(s: i64, epsilon: i64, m: i64) -> Result<CellRecord> {
    if !(0..s).contains(&epsilon) || m < 1 {
        return Err(Error::InvalidArgument(format!(
            "cell (s={s}, epsilon={epsilon}, m={m}) is out of range"
        )));
    }
    let p = decompose(s * m + epsilon + 1, s)?;
    let mut record = CellRecord {
        s,
        epsilon,
        m,
        d: p.d,
        w: p.w,
        v: p.v,
        k: p.k,
        delta: p.delta,
        e: p.e,
        residual_degree: p.residual_degree(),
        scroll: None,
        genus_profile: None,
        genus_liaison: None,
        genus_adjunction: None,
        status: CellStatus::Pass,
        detail: None,
    };
    let profile = match delta_h(&p) {
        Ok(profile) => profile,
        Err(Error::OutsideProfileDomain { .. }) => {
            record.status = CellStatus::OutOfDomain;
            record.detail = Some(format!("m={m} < w={}", p.w));
            return Ok(record);
        }
        Err(other) => {
            record.status = CellStatus::Fail;
            record.detail = Some(other.to_string());
            return Ok(record);
        }
    };
    let genus = genus_from_profile(&profile);
    record.genus_profile = Some(genus);
    let mut failures = Vec::new();
    if p.k == 3 && p.v == 2 {
        let adj = ci_curve_genus(m + 1, p.w + 1)?;
        record.genus_adjunction = Some(adj);
        if adj != genus {
            failures.push(format!("adjunction gives {adj}"));
        }
    }
    match recipe_for(&p) {
        Ok(recipe) => {
            record.scroll = Some(recipe.required_scroll);
            if recipe.required_scroll != ScrollType::S111 {
                record.detail = Some(format!("construction requires {}", recipe.required_scroll));
            }
            let liaison = expected_genus(&recipe, &p)?;
            record.genus_liaison = Some(liaison);
            if liaison != genus {
                failures.push(format!("liaison gives {liaison}"));
            }
        }
        Err(Error::NoRecipe { .. }) => {
            if failures.is_empty() {
                record.status = CellStatus::NoRecipe;
            }
        }
        Err(other) => failures.push(other.to_string()),
    }
    if !failures.is_empty() {
        record.status = CellStatus::Fail;
        record.detail = Some(format!("profile gives {genus}; {}", failures.join("; ")));
    }
    Ok(record)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub cells: usize,
    pub pass: usize,
    pub fail: usize,
    pub no_recipe: usize,
    pub out_of_domain: usize,
}

impl Tally {
    pub fn of(records: &[CellRecord]) -> Self {
        let mut t = Tally {
            cells: records.len(),
            ..Tally::default()
        };
        for r in records {
            match r.status {
                CellStatus::Pass => t.pass += 1,
                CellStatus::Fail => t.fail += 1,
                CellStatus::NoRecipe => t.no_recipe += 1,
                CellStatus::OutOfDomain => t.out_of_domain += 1,
            }
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub s_min: i64,
    pub s_max: i64,
    pub m_spec: String,
    pub tally: Tally,
    pub cells: Vec<CellRecord>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.tally.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellRecord> {
        self.cells.iter().filter(|c| c.status == CellStatus::Fail)
    }
}

/// The grid cells `(s, epsilon, m)` in sweep order.
pub fn grid(s_range: RangeInclusive<i64>, m_spec: &MSpec) -> Result<Vec<(i64, i64, i64)>> {
    if s_range.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "empty s range {}..={}",
            s_range.start(),
            s_range.end()
        )));
    }
    if *s_range.start() < 4 {
        return Err(Error::SurfaceDegreeTooSmall(*s_range.start()));
    }
    let mut cells = Vec::new();
    for s in s_range {
        let w = (s - 1) / 3;
        for m in m_spec.values(w) {
            cells.extend((0..s).map(|eps| (s, eps, m)));
        }
    }
    Ok(cells)
}

pub fn verify_all(s_range: RangeInclusive<i64>, m_spec: &MSpec) -> Result<VerificationReport> {
    let (s_min, s_max) = (*s_range.start(), *s_range.end());
    let cells = grid(s_range, m_spec)?
        .into_iter()
        .map(|(s, eps, m)| verify_cell(s, eps, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        s_min,
        s_max,
        m_spec: m_spec.to_string(),
        tally: Tally::of(&cells),
        cells,
    })
}

/// One row of a sweep table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: i64,
    pub s: i64,
    pub m: i64,
    pub epsilon: i64,
    pub w: i64,
    pub v: i64,
    pub k: i64,
    pub delta: i64,
    pub e: i64,
    pub genus: Option<i64>,
    pub case: Option<CoarseCase>,
    pub residual_degree: i64,
    pub status: CellStatus,
}

impl From<&CellRecord> for SweepRow {
    fn from(r: &CellRecord) -> Self {
        SweepRow {
            d: r.d,
            s: r.s,
            m: r.m,
            epsilon: r.epsilon,
            w: r.w,
            v: r.v,
            k: r.k,
            delta: r.delta,
            e: r.e,
            genus: r.genus_profile,
            case: r.case(),
            residual_degree: r.residual_degree,
            status: r.status,
        }
    }
}

/// Comparison of a closed expression against the summed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusDiscrepancy {
    pub d: i64,
    pub s: i64,
    pub m: i64,
    pub epsilon: i64,
    pub profile: i64,
    #[serde(with = "crate::serde_str")]
    pub closed_form: BigRational,
    #[serde(with = "crate::serde_str")]
    pub difference: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct P4Discrepancy {
    pub s: i64,
    pub capped_profile: i64,
    pub closed_form: i64,
    pub difference: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub genus_cells: usize,
    pub genus_agree: usize,
    pub genus_non_integer: usize,
    pub genus_rows: Vec<GenusDiscrepancy>,
    pub p4_values: usize,
    pub p4_agree: usize,
    pub p4_rows: Vec<P4Discrepancy>,
}

/// Compares the closed genus expression and the closed P^4 value against
/// the summations on every in-domain cell of the grid. Only disagreeing
/// rows are listed.
pub fn discrepancy_report(s_range: RangeInclusive<i64>, m_spec: &MSpec) -> Result<DiscrepancyReport> {
    let mut genus_rows = Vec::new();
    let (mut genus_cells, mut genus_agree, mut genus_non_integer) = (0, 0, 0);
    for (s, eps, m) in grid(s_range.clone(), m_spec)? {
        let p = decompose(s * m + eps + 1, s)?;
        let Ok(profile) = delta_h(&p) else { continue };
        let genus = genus_from_profile(&profile);
        let closed = closed_form_genus(&p);
        genus_cells += 1;
        let difference = &closed - BigRational::from_integer(genus.into());
        if !closed.is_integer() {
            genus_non_integer += 1;
        }
        if difference == BigRational::from_integer(0.into()) {
            genus_agree += 1;
        } else {
            genus_rows.push(GenusDiscrepancy {
                d: p.d,
                s,
                m,
                epsilon: eps,
                profile: genus,
                closed_form: closed,
                difference,
            });
        }
    }
    let mut p4_rows = Vec::new();
    let mut p4_agree = 0;
    for s in s_range.clone() {
        let capped = castelnuovo_p4(s)?;
        let closed_form = closed_castelnuovo_p4(s);
        if capped == closed_form {
            p4_agree += 1;
        } else {
            p4_rows.push(P4Discrepancy {
                s,
                capped_profile: capped,
                closed_form,
                difference: closed_form - capped,
            });
        }
    }
    Ok(DiscrepancyReport {
        genus_cells,
        genus_agree,
        genus_non_integer,
        genus_rows,
        p4_values: s_range.count(),
        p4_agree,
        p4_rows,
    })
}
