use std::fmt::Write as _;
use std::process::ExitCode;

use maxgenus::bounds::castelnuovo_p4;
use maxgenus::catalog::{expected_genus, recipe_for};
use maxgenus::classifier::{classify_auto, classify_with, ClassifyOptions, SurfaceClassOfS};
use maxgenus::scroll::{
    generic_proper_transform, h0_weil, intersection_degree_s003, multiplicity_along_l, triple_product,
};
use maxgenus::verify::{discrepancy_report, verify_all, CellRecord, MSpec, SweepRow};
use maxgenus::{decompose, delta_h, genus_from_profile, DivisorClass, ResolvedClass, ScrollType};
use serde::Serialize;
use serde_json::json;

use crate::output::{big, csv, json, CliResult, Failure, Output};
use crate::{ClassifyArgs, DegreeArgs, Format, GridArgs, H0Args, IntersectArgs, PairArgs, VerifyArgs};

pub struct Context {
    pub format: Option<Format>,
    pub force: bool,
}

impl Context {
    fn format(&self, default: Format, allowed: &[Format]) -> CliResult<Format> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(Failure::usage("this command does not support the requested --format"))
        }
    }
}

pub fn bound(ctx: &Context, a: &DegreeArgs) -> CliResult<Output> {
    let p = decompose(a.d, a.s)?;
    let profile = delta_h(&p)?;
    let genus = genus_from_profile(&profile);
    let outside = !p.is_admissible();
    let p4 = castelnuovo_p4(p.s)?;
    let body = match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => json(&json!({
            "params": p,
            "delta_h": profile,
            "genus": genus,
            "residual_degree": p.residual_degree(),
            "castelnuovo_p4": p4,
            "outside_theorem_range": outside,
        }))?,
        _ => {
            let mut s = String::new();
            let values: Vec<String> = profile.values().iter().map(i64::to_string).collect();
            writeln!(s, "d={} s={}", p.d, p.s).unwrap();
            writeln!(
                s,
                "m={} epsilon={} w={} v={} k={} delta={} e={}",
                p.m, p.epsilon, p.w, p.v, p.k, p.delta, p.e
            )
            .unwrap();
            writeln!(s, "delta_h={}", values.join(",")).unwrap();
            writeln!(s, "G={genus}").unwrap();
            writeln!(s, "residual_degree={}", p.residual_degree()).unwrap();
            writeln!(s, "G(s,4)={p4}").unwrap();
            if outside {
                writeln!(s, "flag: outside-theorem-range").unwrap();
            }
            s
        }
    };
    Ok(Output::ok(body))
}

pub fn classify(ctx: &Context, a: &ClassifyArgs) -> CliResult<Output> {
    ctx.format(Format::Json, &[Format::Json, Format::Text])?;
    let options = ClassifyOptions {
        allow_small_s: ctx.force,
    };
    let (d, s) = (a.degree.d, a.degree.s);
    let body = if a.s_class == "auto" {
        let reports = classify_auto(d, s, a.scroll, options)?;
        match reports.as_slice() {
            [single] => json(single)?,
            many => json(many)?,
        }
    } else {
        let class: SurfaceClassOfS = a.s_class.parse()?;
        json(&classify_with(d, s, a.scroll, &class, options)?)?
    };
    Ok(Output::ok(body))
}

pub fn h0(ctx: &Context, a: &H0Args) -> CliResult<Output> {
    let class: DivisorClass = a.class.parse()?;
    let n = h0_weil(a.scroll, &class);
    let body = match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => json(&json!({ "scroll": a.scroll, "class": class, "h0": big(&n) }))?,
        _ => format!("{n}\n"),
    };
    Ok(Output::ok(body))
}

/// A surface on S(0,0,3): an explicit proper transform "aH~+bR~", or a
/// class "aH+bR" standing for its generic member.
fn s003_operand(text: &str) -> CliResult<ResolvedClass> {
    if text.contains('~') {
        Ok(text.parse()?)
    } else {
        Ok(generic_proper_transform(&text.parse()?)?)
    }
}

fn plain_class(text: &str) -> CliResult<DivisorClass> {
    if text.contains('~') {
        return Err(Failure::usage(format!(
            "{text}: resolved classes are only used on S(0,0,3)"
        )));
    }
    Ok(text.parse()?)
}

pub fn intersect(ctx: &Context, a: &IntersectArgs) -> CliResult<Output> {
    let format = ctx.format(Format::Text, &[Format::Text, Format::Json])?;
    let n = if a.scroll == ScrollType::S003 {
        if plain_class(&a.d3)? != DivisorClass::hyperplane() {
            return Err(Failure::usage("on S(0,0,3) the third class must be H"));
        }
        intersection_degree_s003(&s003_operand(&a.pair.d1)?, &s003_operand(&a.pair.d2)?)?
    } else {
        triple_product(
            a.scroll,
            &plain_class(&a.pair.d1)?,
            &plain_class(&a.pair.d2)?,
            &plain_class(&a.d3)?,
        )?
    };
    let body = match format {
        Format::Json => json(&json!({
            "scroll": a.scroll, "d1": a.pair.d1, "d2": a.pair.d2, "d3": a.d3, "intersection": big(&n),
        }))?,
        _ => format!("{n}\n"),
    };
    Ok(Output::ok(body))
}

pub fn multiplicity(ctx: &Context, a: &PairArgs) -> CliResult<Output> {
    let format = ctx.format(Format::Text, &[Format::Text, Format::Json])?;
    let n = multiplicity_along_l(&s003_operand(&a.d1)?, &s003_operand(&a.d2)?)?;
    let body = match format {
        Format::Json => json(&json!({ "scroll": ScrollType::S003, "d1": a.d1, "d2": a.d2, "multiplicity": big(&n) }))?,
        _ => format!("{n}\n"),
    };
    Ok(Output::ok(body))
}

pub fn construct(ctx: &Context, a: &DegreeArgs) -> CliResult<Output> {
    let p = decompose(a.d, a.s)?;
    let recipe = recipe_for(&p)?;
    let liaison = expected_genus(&recipe, &p)?;
    let profile = genus_from_profile(&delta_h(&p)?);
    let body = match ctx.format(Format::Json, &[Format::Text, Format::Json])? {
        Format::Json => json(&json!({
            "params": p,
            "recipe": recipe,
            "genus_liaison": liaison,
            "genus_profile": profile,
            "outside_theorem_range": !p.is_admissible(),
        }))?,
        _ => {
            let mut s = String::new();
            writeln!(s, "case k={} v={} on {}", recipe.k, recipe.v, recipe.required_scroll).unwrap();
            writeln!(s, "S ~ {}", recipe.s_class).unwrap();
            match recipe.seed_degree {
                Some(deg) => writeln!(s, "seed plane curve D of degree {deg}").unwrap(),
                None => writeln!(s, "C is a complete intersection on S").unwrap(),
            }
            writeln!(s, "C'' components:").unwrap();
            for c in &recipe.linked.components {
                writeln!(s, "  {} degree {} genus {}", c.label, c.degree, c.genus).unwrap();
            }
            for n in &recipe.linked.nodes {
                let (i, j) = n.pair;
                let (x, y) = (&recipe.linked.components[i].label, &recipe.linked.components[j].label);
                writeln!(s, "  {x} meets {y} in {} points", n.count).unwrap();
            }
            writeln!(
                s,
                "deg C''={} p_a(C'')={} deg(R cap C'')={}",
                recipe.linked.degree, recipe.linked.genus, recipe.linked.r_intersection
            )
            .unwrap();
            for note in &recipe.notes {
                writeln!(s, "note: {note}").unwrap();
            }
            writeln!(s, "genus via liaison={liaison} via h-vector={profile}").unwrap();
            s
        }
    };
    Ok(Output::ok(body))
}

fn parse_grid(g: &GridArgs) -> CliResult<MSpec> {
    if g.s_min > g.s_max {
        return Err(Failure::usage(format!("empty s range {}..{}", g.s_min, g.s_max)));
    }
    Ok(g.m_spec.parse()?)
}

#[derive(Serialize)]
struct VerifyRow<'a> {
    s: i64,
    epsilon: i64,
    m: i64,
    d: i64,
    k: i64,
    v: i64,
    scroll: Option<ScrollType>,
    genus_profile: Option<i64>,
    genus_liaison: Option<i64>,
    status: &'a str,
}

impl<'a> From<&'a CellRecord> for VerifyRow<'a> {
    fn from(c: &'a CellRecord) -> Self {
        VerifyRow {
            s: c.s,
            epsilon: c.epsilon,
            m: c.m,
            d: c.d,
            k: c.k,
            v: c.v,
            scroll: c.scroll,
            genus_profile: c.genus_profile,
            genus_liaison: c.genus_liaison,
            status: c.status.as_str(),
        }
    }
}

pub fn verify(ctx: &Context, a: &VerifyArgs) -> CliResult<Output> {
    let spec = parse_grid(&a.grid)?;
    let range = a.grid.s_min..=a.grid.s_max;
    if a.discrepancy {
        let report = discrepancy_report(range, &spec)?;
        let body = match ctx.format(Format::Text, &[Format::Text, Format::Json])? {
            Format::Json => json(&report)?,
            _ => {
                let mut s = String::new();
                writeln!(
                    s,
                    "closed genus expression: {} of {} cells agree with the h-vector sum ({} non-integer values)",
                    report.genus_agree, report.genus_cells, report.genus_non_integer
                )
                .unwrap();
                for r in &report.genus_rows {
                    writeln!(
                        s,
                        "  d={} s={} m={} epsilon={}: sum {} closed {} (diff {})",
                        r.d, r.s, r.m, r.epsilon, r.profile, r.closed_form, r.difference
                    )
                    .unwrap();
                }
                writeln!(
                    s,
                    "closed P^4 value: {} of {} agree with the capped sum",
                    report.p4_agree, report.p4_values
                )
                .unwrap();
                for r in &report.p4_rows {
                    writeln!(
                        s,
                        "  s={}: sum {} closed {} (diff {})",
                        r.s, r.capped_profile, r.closed_form, r.difference
                    )
                    .unwrap();
                }
                s
            }
        };
        return Ok(Output::ok(body));
    }
    let report = verify_all(range, &spec)?;
    let body = match ctx.format(Format::Text, &[Format::Text, Format::Json, Format::Csv])? {
        Format::Json => json(&report)?,
        Format::Csv => csv(report.cells.iter().map(VerifyRow::from))?,
        Format::Text => {
            let t = report.tally;
            let mut s = format!(
                "s={}..{} m={}: {} cells, {} pass, {} fail, {} no-recipe, {} out-of-domain\n",
                report.s_min, report.s_max, report.m_spec, t.cells, t.pass, t.fail, t.no_recipe, t.out_of_domain
            );
            for c in report.failures() {
                writeln!(
                    s,
                    "FAIL s={} epsilon={} m={} d={}: {}",
                    c.s,
                    c.epsilon,
                    c.m,
                    c.d,
                    c.detail.as_deref().unwrap_or("")
                )
                .unwrap();
            }
            s
        }
    };
    let exit = if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    Ok(Output { body, exit })
}

pub fn sweep(ctx: &Context, g: &GridArgs) -> CliResult<Output> {
    let spec = parse_grid(g)?;
    let report = verify_all(g.s_min..=g.s_max, &spec)?;
    let body = match ctx.format(Format::Csv, &[Format::Csv, Format::Json, Format::Text])? {
        Format::Json => json(&report.cells)?,
        _ => csv(report.cells.iter().map(SweepRow::from))?,
    };
    Ok(Output::ok(body))
}
