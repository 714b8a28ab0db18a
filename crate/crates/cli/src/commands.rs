use nichols_core::braiding::BraidingParams;
use nichols_core::oracles::{summary, verify_all, ClosedFormReport};
use nichols_core::scalars::{CyclotomicNumber, MultiPoly, ParamPoint, ScalarLiteral, Var};
use nichols_core::sym::{ek_table, orbit_partition, Limits};
use nichols_core::symmetrizer::{nichols_dimension, tilde_f, GradedProfile, ProfileStatus};
use serde::{Deserialize, Serialize};

use crate::args::{DimArgs, EtableArgs, Format, FtildeArgs, OrbitsArgs, VerifyArgs};
use crate::cache::ResultCache;
use crate::error::{CliError, EXIT_CAP_EXCEEDED, EXIT_OK, EXIT_VERIFY_FAILED};

/// Rendered output and the exit code it implies.
pub struct Outcome {
    pub body: String,
    pub code: u8,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: EXIT_OK }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub a: String,
    pub b: String,
    pub e: String,
}

/// The cached and emitted form of a dimension profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub point: PointRecord,
    pub ranks: Vec<usize>,
    pub status: ProfileStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total: Option<usize>,
}

impl From<&GradedProfile> for DimReport {
    fn from(p: &GradedProfile) -> Self {
        let [a, b, e] = p.point.labels();
        DimReport {
            point: PointRecord { a, b, e },
            ranks: p.ranks.clone(),
            status: p.status,
            total: p.total(),
        }
    }
}

#[derive(Serialize)]
struct DimRow<'a> {
    a: &'a str,
    b: &'a str,
    e: &'a str,
    degree: usize,
    rank: usize,
    status: &'static str,
    total: Option<usize>,
}

/// Literals are canonical, so equal points share a key.
fn dim_cache_key(point: &PointRecord, cap: usize) -> String {
    format!("dim/1\na={}\nb={}\ne={}\ncap={cap}", point.a, point.b, point.e)
}

pub fn dim(args: &DimArgs, format: Format, cache: Option<&ResultCache>) -> Result<Outcome, CliError> {
    let pt = ParamPoint::from_literals(args.a.clone(), args.b.clone(), args.e.clone())?;
    let [a, b, e] = pt.labels();
    let key = dim_cache_key(&PointRecord { a, b, e }, args.cap);
    let cached = cache.and_then(|c| c.get::<DimReport>(&key));
    let report = match cached {
        Some(r) => r,
        None => {
            let r = DimReport::from(&nichols_dimension(&pt, args.cap)?);
            if let Some(c) = cache {
                c.put(&key, &r)?;
            }
            r
        }
    };
    let body = match format {
        Format::Json => json(&report)?,
        Format::Csv => {
            let status = match report.status {
                ProfileStatus::Terminated { .. } => "terminated",
                ProfileStatus::CapExceeded { .. } => "cap_exceeded",
            };
            let p = &report.point;
            csv_rows(report.ranks.iter().enumerate().map(|(degree, &rank)| DimRow {
                a: &p.a,
                b: &p.b,
                e: &p.e,
                degree,
                rank,
                status,
                total: report.total,
            }))?
        }
        Format::Text => {
            let p = &report.point;
            let mut out = format!("point   a = {}, b = {}, e = {}\n", p.a, p.b, p.e);
            out.push_str("degree  rank\n");
            for (d, r) in report.ranks.iter().enumerate() {
                out.push_str(&format!("{d:<7} {r}\n"));
            }
            match report.status {
                ProfileStatus::Terminated { degree } => {
                    out.push_str(&format!("status  terminated at degree {degree}\n"));
                }
                ProfileStatus::CapExceeded { cap } => out.push_str(&format!(
                    "status  cap exceeded: every degree up to {cap} has positive rank; finiteness undecided\n"
                )),
            }
            if let Some(t) = report.total {
                out.push_str(&format!("total   {t}\n"));
            }
            out
        }
    };
    let code = match report.status {
        ProfileStatus::Terminated { .. } => EXIT_OK,
        ProfileStatus::CapExceeded { .. } => EXIT_CAP_EXCEEDED,
    };
    Ok(Outcome { body, code })
}

#[derive(Serialize)]
struct FtildeReport {
    x: String,
    y: String,
    set: std::collections::BTreeMap<&'static str, String>,
    value: String,
}

/// Computes `F~(x|y)` in `a, b, e`, then substitutes. Rational values may be
/// set one at a time; a root of unity needs all three parameters set.
pub fn ftilde(args: &FtildeArgs, format: Format) -> Result<Outcome, CliError> {
    let mut values: [Option<&ScalarLiteral>; 3] = [None; 3];
    for (var, lit) in &args.set {
        let slot = &mut values[var_index(*var)];
        if slot.is_some() {
            return Err(CliError::Usage(format!("parameter {} set twice", var.name())));
        }
        *slot = Some(lit);
    }
    let poly = tilde_f(&args.x, &args.y, &BraidingParams::<MultiPoly>::symbolic())?;
    let value = match values {
        [Some(a), Some(b), Some(e)] => {
            let pt = ParamPoint::from_literals(a.clone(), b.clone(), e.clone())?;
            poly.eval::<CyclotomicNumber>(pt.a(), pt.b(), pt.e()).to_string()
        }
        _ => {
            let mut p = poly;
            for (var, lit) in [Var::A, Var::B, Var::E].into_iter().zip(values) {
                let Some(lit) = lit else { continue };
                if lit.order != 1 {
                    return Err(CliError::Usage(format!(
                        "{}={lit} is irrational; set all of a, b, e to evaluate at roots of unity",
                        var.name()
                    )));
                }
                p = p.substitute(var, &lit.coeff);
            }
            p.to_string()
        }
    };
    let report = FtildeReport {
        x: args.x.to_string(),
        y: args.y.to_string(),
        set: [Var::A, Var::B, Var::E]
            .into_iter()
            .zip(values)
            .filter_map(|(v, lit)| Some((v.name(), lit?.to_string())))
            .collect(),
        value,
    };
    let body = match format {
        Format::Json => json(&report)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                x: &'a str,
                y: &'a str,
                value: &'a str,
            }
            csv_rows([Row {
                x: &report.x,
                y: &report.y,
                value: &report.value,
            }])?
        }
        Format::Text => format!("{}\n", report.value),
    };
    Ok(Outcome::ok(body))
}

fn var_index(v: Var) -> usize {
    match v {
        Var::A => 0,
        Var::B => 1,
        Var::E => 2,
    }
}

pub fn etable(args: &EtableArgs, format: Format) -> Result<Outcome, CliError> {
    let rows = ek_table(args.n, args.k_max, &Limits::default())?.rows();
    let body = match format {
        Format::Json => json(&rows)?,
        Format::Csv => csv_rows(&rows)?,
        Format::Text => {
            let mut out = String::from("n   k   s    count\n");
            for r in &rows {
                out.push_str(&format!("{:<3} {:<3} {:<4} {}\n", r.n, r.k, r.s, r.count));
            }
            out
        }
    };
    Ok(Outcome::ok(body))
}

pub fn orbits(args: &OrbitsArgs, format: Format) -> Result<Outcome, CliError> {
    let orbits = orbit_partition(args.n, &Limits::default())?;
    let body = match format {
        Format::Json => json(&orbits)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                size: usize,
                representative: String,
                label: String,
            }
            csv_rows(orbits.iter().map(|o| Row {
                size: o.size,
                representative: o.representative.to_string(),
                label: o.label.clone().unwrap_or_default(),
            }))?
        }
        Format::Text => {
            let width = args.n.max("representative".len());
            let mut out = format!("{:<8} {:<width$} label\n", "size", "representative");
            for o in &orbits {
                let label = o.label.as_deref().unwrap_or("-");
                out.push_str(&format!("{:<8} {:<width$} {label}\n", o.size, o.representative.to_string()));
            }
            out
        }
    };
    Ok(Outcome::ok(body))
}

pub fn verify(args: &VerifyArgs, format: Format) -> Result<Outcome, CliError> {
    let reports = verify_all(args.n_max, args.cap);
    let body = match format {
        Format::Json => json(&reports)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                name: &'a str,
                range: &'a str,
                checks: usize,
                status: &'static str,
                counterexamples: String,
            }
            csv_rows(reports.iter().map(|r: &ClosedFormReport| Row {
                name: &r.name,
                range: &r.range,
                checks: r.checks,
                status: if r.passed() { "pass" } else { "fail" },
                counterexamples: r
                    .counterexamples()
                    .iter()
                    .map(|c| format!("{}: expected {}, found {}", c.input, c.expected, c.found))
                    .collect::<Vec<_>>()
                    .join("; "),
            }))?
        }
        Format::Text => summary(&reports),
    };
    let code = if reports.iter().all(ClosedFormReport::passed) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    Ok(Outcome { body, code })
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}
