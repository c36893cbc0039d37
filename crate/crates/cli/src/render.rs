use std::io::{self, Write};

use serde::Serialize;

use superschur::asymptotics::{decimal, Law, RatioSeries};
use superschur::schur_centralizers::{DimEntry, DimensionRow, Method, Params, VerificationReport};

use crate::run::Config;
use crate::Format;

pub const TOOL: &str = "superschur";

/// Significant digits in decimal renderings.
const DIGITS: usize = 12;

#[derive(Serialize)]
pub struct Skipped {
    pub theorem: String,
    pub params: Params,
    pub reason: String,
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: Config,
    pub passed: bool,
    pub reports: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
}

#[derive(Serialize)]
pub struct EntryView {
    pub char: u64,
    pub computed: Option<u64>,
    pub method: Option<Method>,
    pub agrees: Option<bool>,
}

impl From<&DimEntry> for EntryView {
    fn from(e: &DimEntry) -> Self {
        EntryView {
            char: e.char,
            computed: e.computed,
            method: e.method,
            agrees: e.agrees(),
        }
    }
}

#[derive(Serialize)]
pub struct DimsRowView {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub image_s: EntryView,
    pub image_a: EntryView,
    pub centralizer_s: EntryView,
    pub centralizer_a: EntryView,
}

impl From<&DimensionRow> for DimsRowView {
    fn from(r: &DimensionRow) -> Self {
        DimsRowView {
            k: r.k,
            l: r.l,
            n: r.n,
            image_s: (&r.image_s).into(),
            image_a: (&r.image_a).into(),
            centralizer_s: (&r.centralizer_s).into(),
            centralizer_a: (&r.centralizer_a).into(),
        }
    }
}

#[derive(Serialize)]
pub struct DimsDoc {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: Config,
    pub passed: bool,
    pub rows: Vec<DimsRowView>,
    pub reports: Vec<VerificationReport>,
}

#[derive(Serialize)]
pub struct Exact {
    pub num: String,
    pub den: String,
}

#[derive(Serialize)]
pub struct PointView {
    pub n: u32,
    pub value: Exact,
    pub decimal: String,
    pub scaled: Option<f64>,
}

#[derive(Serialize)]
pub struct SeriesView {
    pub law: Law,
    pub k: Option<usize>,
    pub scale_exponent: Option<f64>,
    pub points: Vec<PointView>,
}

impl From<&RatioSeries> for SeriesView {
    fn from(s: &RatioSeries) -> Self {
        SeriesView {
            law: s.law,
            k: s.k,
            scale_exponent: s.scale_exponent,
            points: s
                .points
                .iter()
                .map(|p| PointView {
                    n: p.n,
                    value: Exact {
                        num: p.value.numer().to_string(),
                        den: p.value.denom().to_string(),
                    },
                    decimal: decimal(&p.value, DIGITS),
                    scaled: s.scaled(p),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct FitBlock {
    pub exponent: f64,
    pub constant: f64,
    pub residual: f64,
    pub window: [u32; 2],
    pub points: usize,
    pub parity: &'static str,
    pub reference_exponent: Option<f64>,
    pub reference_constant: Option<f64>,
}

#[derive(Serialize)]
pub struct AsymptoticsDoc {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: Config,
    pub series: SeriesView,
    /// For full-sym: `dim M₂(n) / n!`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub share: Option<SeriesView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit: Option<FitBlock>,
}

fn json<T: Serialize>(out: &mut dyn Write, doc: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)
}

fn csv_error(e: csv::Error) -> io::Error {
    io::Error::new(io::ErrorKind::Other, e)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn scaled_text(v: Option<f64>) -> String {
    v.map(|v| format!("{v:.10}")).unwrap_or_default()
}

pub fn verify(out: &mut dyn Write, format: Format, doc: &VerifyDoc) -> io::Result<()> {
    match format {
        Format::Json => json(out, doc),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["theorem", "k", "l", "n", "check", "expected", "actual", "pass"])
                .map_err(csv_error)?;
            for r in &doc.reports {
                for c in &r.checks {
                    w.write_record([
                        r.theorem.clone(),
                        r.params.k.to_string(),
                        r.params.l.to_string(),
                        r.params.n.to_string(),
                        c.name.clone(),
                        c.expected.to_string(),
                        c.actual.to_string(),
                        c.pass.to_string(),
                    ])
                    .map_err(csv_error)?;
                }
            }
            w.flush()
        }
        Format::Table => {
            for r in &doc.reports {
                report_table(out, r)?;
            }
            for s in &doc.skipped {
                writeln!(
                    out,
                    "{} k={} l={} n={}  skipped: {}",
                    s.theorem, s.params.k, s.params.l, s.params.n, s.reason
                )?;
            }
            let failed = doc.reports.iter().filter(|r| !r.passed()).count();
            writeln!(
                out,
                "{} reports, {} passed, {} failed, {} skipped",
                doc.reports.len(),
                doc.reports.len() - failed,
                failed,
                doc.skipped.len()
            )
        }
    }
}

fn report_table(out: &mut dyn Write, r: &VerificationReport) -> io::Result<()> {
    writeln!(
        out,
        "{} k={} l={} n={}  {}  [{}; {}] {} ms",
        r.theorem,
        r.params.k,
        r.params.l,
        r.params.n,
        if r.passed() { "PASS" } else { "FAIL" },
        serde_json::to_value(r.arithmetic.mode)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
        r.arithmetic.fields.join(", "),
        r.elapsed_ms
    )?;
    for c in &r.checks {
        writeln!(
            out,
            "  {:4}  {}  expected {}, got {}",
            if c.pass { "ok" } else { "FAIL" },
            c.name,
            c.expected,
            c.actual
        )?;
    }
    for o in &r.observations {
        writeln!(out, "  info  {} = {}", o.name, o.value)?;
    }
    Ok(())
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Char => "char",
        Method::Span => "span",
        Method::Gram => "gram",
        Method::Commutant => "commutant",
    }
}

fn entry_cell(e: &EntryView) -> String {
    match (e.computed, e.method) {
        (Some(c), Some(m)) if Some(true) == e.agrees => format!("{c} [{} ok]", method_name(m)),
        (Some(c), Some(m)) => format!("{c} [{} ≠ char {}]", method_name(m), e.char),
        _ => format!("{} [char]", e.char),
    }
}

fn entry_fields(e: &EntryView) -> [String; 3] {
    [
        e.computed.unwrap_or(e.char).to_string(),
        e.method.map(method_name).unwrap_or("char").to_string(),
        opt(e.agrees),
    ]
}

pub fn dims(out: &mut dyn Write, format: Format, doc: &DimsDoc) -> io::Result<()> {
    match format {
        Format::Json => json(out, doc),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["k".to_string(), "l".into(), "n".into()];
            for col in ["image_s", "image_a", "centralizer_s", "centralizer_a"] {
                header.extend([col.to_string(), format!("{col}_method"), format!("{col}_agrees")]);
            }
            w.write_record(&header).map_err(csv_error)?;
            for r in &doc.rows {
                let mut rec = vec![r.k.to_string(), r.l.to_string(), r.n.to_string()];
                for e in [&r.image_s, &r.image_a, &r.centralizer_s, &r.centralizer_a] {
                    rec.extend(entry_fields(e));
                }
                w.write_record(&rec).map_err(csv_error)?;
            }
            w.flush()
        }
        Format::Table => {
            let header = ["n", "dim φ*(FS_n)", "dim φ*(FA_n)", "dim 𝓑_n", "dim 𝒜_n"];
            let cells: Vec<[String; 5]> = doc
                .rows
                .iter()
                .map(|r| {
                    [
                        r.n.to_string(),
                        entry_cell(&r.image_s),
                        entry_cell(&r.image_a),
                        entry_cell(&r.centralizer_s),
                        entry_cell(&r.centralizer_a),
                    ]
                })
                .collect();
            let width = |i: usize| {
                cells
                    .iter()
                    .map(|c| c[i].chars().count())
                    .chain([header[i].chars().count()])
                    .max()
                    .unwrap_or(0)
            };
            let widths: Vec<usize> = (0..5).map(width).collect();
            let line = |out: &mut dyn Write, row: [&str; 5]| -> io::Result<()> {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                    .collect();
                writeln!(out, "{}", padded.join("  ").trim_end())
            };
            line(out, header)?;
            for c in &cells {
                line(out, [&c[0], &c[1], &c[2], &c[3], &c[4]])?;
            }
            let k = doc.config.k.unwrap_or(0);
            let l = doc.config.l.unwrap_or(0);
            for r in doc.reports.iter().filter(|r| !r.passed()) {
                for c in r.failures() {
                    writeln!(out, "FAIL n={}: {}", r.params.n, c.name)?;
                }
            }
            writeln!(
                out,
                "k={k} l={l}: {}",
                if doc.passed { "all dimensions agree" } else { "disagreements found" }
            )
        }
    }
}

pub fn asymptotics(out: &mut dyn Write, format: Format, doc: &AsymptoticsDoc) -> io::Result<()> {
    match format {
        Format::Json => json(out, doc),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "num", "den", "decimal", "scaled"]).map_err(csv_error)?;
            for p in &doc.series.points {
                w.write_record([
                    p.n.to_string(),
                    p.value.num.clone(),
                    p.value.den.clone(),
                    p.decimal.clone(),
                    scaled_text(p.scaled),
                ])
                .map_err(csv_error)?;
            }
            w.flush()
        }
        Format::Table => {
            let s = &doc.series;
            match s.k {
                Some(k) => writeln!(out, "{} k={k}", s.law)?,
                None => writeln!(out, "{}", s.law)?,
            }
            let scaled_head = match s.scale_exponent {
                Some(e) => format!("n^{e}·value"),
                None => String::new(),
            };
            writeln!(out, "{:>5}  {:<20}  {}", "n", "value", scaled_head)?;
            let shares = doc.share.as_ref().map(|sh| &sh.points);
            for (i, p) in s.points.iter().enumerate() {
                let extra = match shares.and_then(|sh| sh.get(i)) {
                    Some(sh) => format!("M₂/n! = {}", sh.decimal),
                    None => scaled_text(p.scaled),
                };
                writeln!(out, "{:>5}  {:<20}  {}", p.n, p.decimal, extra)?;
            }
            if let Some(f) = &doc.fit {
                writeln!(
                    out,
                    "fit over n in [{}, {}] ({} points, {} n): exponent {:.4}, constant {:.4}, rms residual {:.2e}",
                    f.window[0], f.window[1], f.points, f.parity, f.exponent, f.constant, f.residual
                )?;
                if let Some(e) = f.reference_exponent {
                    write!(out, "reference: exponent {e}")?;
                    if let Some(c) = f.reference_constant {
                        write!(out, ", constant {c:.4}")?;
                    }
                    writeln!(out)?;
                }
            }
            Ok(())
        }
    }
}
