use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use superschur::asymptotics::{
    c1_constant, c2_k1, dominant_parity, fit_power_law, full_sym_ratio, hook_count_law,
    ln_abs, m_ratio_series, sc_ratio_series, Law, RatioSeries, FULL_SYM_MAX_N,
};
use superschur::exact_linalg::{Arithmetic, LinalgError};
use superschur::schur_centralizers::{
    verify_classical_anomaly, verify_crossed_product, verify_dimensions, verify_hook_theorem,
    verify_invariant_decomposition, verify_pq, DimensionRow, Params, RunOptions,
    VerificationReport, VerifyError,
};

use crate::render::{self, AsymptoticsDoc, DimsDoc, FitBlock, Skipped, VerifyDoc};
use crate::{AsymptoticsArgs, DimsArgs, Failure, GlobalOpts, Target, VerifyArgs};

#[derive(Debug, Serialize)]
pub struct Config {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<Target>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub law: Option<Law>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nmax: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<[u32; 2]>,
    pub mode: Arithmetic,
    pub seed: u64,
    pub jobs: usize,
}

impl Config {
    fn new(command: &'static str, g: &GlobalOpts, jobs: usize) -> Self {
        Config {
            command,
            target: None,
            law: None,
            k: None,
            l: None,
            n: None,
            nmax: None,
            window: None,
            mode: g.mode.into(),
            seed: g.seed,
            jobs,
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Usage(format!("error: writing output: {e}"))
}

fn options(g: &GlobalOpts) -> RunOptions {
    RunOptions {
        mode: g.mode.into(),
        seed: g.seed,
    }
}

fn theorem_name(t: Target) -> &'static str {
    match t {
        Target::CrossedProduct => "crossed-product",
        Target::Hook => "hook",
        Target::Classical => "classical",
        Target::Pq => "pq",
        Target::Lemma14 => "lemma14",
        Target::All => "all",
    }
}

fn classify(context: &str, e: VerifyError) -> Failure {
    match e {
        VerifyError::Linalg(e @ LinalgError::PrimeDisagreement { .. }) => {
            Failure::Verification(format!("{context}: {e}"))
        }
        e => Failure::Usage(format!("{context}: {e}")),
    }
}

fn run_one(t: Target, k: usize, l: usize, n: usize, opts: &RunOptions) -> Result<VerificationReport, VerifyError> {
    match t {
        Target::CrossedProduct => verify_crossed_product(k, n, opts),
        Target::Hook => verify_hook_theorem(k, l, n, opts),
        Target::Classical => verify_classical_anomaly(k, n, opts),
        Target::Pq => verify_pq(k, l, n, opts),
        Target::Lemma14 => verify_invariant_decomposition(k, l, n, opts),
        Target::All => unreachable!("expanded before dispatch"),
    }
}

fn strip_timing(mut r: VerificationReport, no_timing: bool) -> VerificationReport {
    if no_timing {
        r.elapsed_ms = 0;
    }
    r
}

pub fn verify(a: &VerifyArgs, g: &GlobalOpts, jobs: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let k = a.k;
    let l = match (a.target, a.l) {
        (Target::CrossedProduct, l) => {
            let l = l.unwrap_or(k);
            if l != k {
                return Err(Failure::Usage(format!(
                    "crossed-product needs l = k (got k = {k}, l = {l})"
                )));
            }
            l
        }
        (Target::Classical, Some(l)) if l != 0 => {
            return Err(Failure::Usage(format!("classical needs l = 0 (got l = {l})")));
        }
        (_, l) => l.unwrap_or(0),
    };
    let targets: Vec<Target> = match a.target {
        Target::All => {
            let mut ts = vec![Target::Hook];
            if k == l {
                ts.push(Target::CrossedProduct);
            }
            if l == 0 {
                ts.push(Target::Classical);
            }
            if k != l {
                ts.push(Target::Pq);
            }
            ts.push(Target::Lemma14);
            ts
        }
        t => vec![t],
    };
    let explicit = a.target != Target::All;
    let opts = options(g);
    let tasks: Vec<(usize, Target)> = (a.n.0..=a.n.1)
        .flat_map(|n| targets.iter().map(move |t| (n, *t)))
        .collect();
    let results: Vec<_> = tasks
        .par_iter()
        .map(|&(n, t)| (n, t, run_one(t, k, l, n, &opts)))
        .collect();

    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let mut errors = Vec::new();
    for (n, t, r) in results {
        let context = format!("{} (k={k}, l={l}, n={n})", theorem_name(t));
        match r {
            Ok(r) => reports.push(strip_timing(r, g.no_timing)),
            Err(VerifyError::NotApplicable(reason)) if !explicit => skipped.push(Skipped {
                theorem: theorem_name(t).to_string(),
                params: Params { k, l, n },
                reason,
            }),
            Err(e) => errors.push(classify(&context, e)),
        }
    }

    let mut config = Config::new("verify", g, jobs);
    config.target = Some(a.target);
    config.k = Some(k);
    config.l = Some(l);
    config.n = Some([a.n.0, a.n.1]);
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} (k={}, l={}, n={})", r.theorem, r.params.k, r.params.l, r.params.n))
        .collect();
    let doc = VerifyDoc {
        tool: render::TOOL,
        version: env!("CARGO_PKG_VERSION"),
        config,
        passed: failing.is_empty() && errors.is_empty(),
        reports,
        skipped,
    };
    if !(doc.reports.is_empty() && !errors.is_empty()) {
        render::verify(out, g.format, &doc).map_err(io_failure)?;
    }
    finish(errors, failing)
}

/// Usage problems outrank verification failures.
fn finish(errors: Vec<Failure>, failing: Vec<String>) -> Result<(), Failure> {
    let (mut usage, mut verification) = (Vec::new(), Vec::new());
    for e in errors {
        match e {
            Failure::Usage(m) => usage.push(m),
            Failure::Verification(m) => verification.push(m),
        }
    }
    verification.extend(failing.into_iter().map(|f| format!("{f}: checks failed")));
    if !usage.is_empty() {
        return Err(Failure::Usage(usage.join("\n")));
    }
    if !verification.is_empty() {
        return Err(Failure::Verification(verification.join("\n")));
    }
    Ok(())
}

pub fn dims(a: &DimsArgs, g: &GlobalOpts, jobs: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let opts = options(g);
    let results: Vec<_> = (a.n.0..=a.n.1)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| (n, verify_dimensions(a.k, a.l, n, &opts)))
        .collect();
    let mut rows: Vec<DimensionRow> = Vec::new();
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for (n, r) in results {
        match r {
            Ok((report, row)) => {
                rows.push(row);
                reports.push(strip_timing(report, g.no_timing));
            }
            Err(e) => errors.push(classify(&format!("dims (k={}, l={}, n={n})", a.k, a.l), e)),
        }
    }
    let mut config = Config::new("dims", g, jobs);
    config.k = Some(a.k);
    config.l = Some(a.l);
    config.n = Some([a.n.0, a.n.1]);
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("dims (k={}, l={}, n={})", r.params.k, r.params.l, r.params.n))
        .collect();
    let doc = DimsDoc {
        tool: render::TOOL,
        version: env!("CARGO_PKG_VERSION"),
        config,
        passed: failing.is_empty() && errors.is_empty(),
        rows: rows.iter().map(render::DimsRowView::from).collect(),
        reports,
    };
    if !(doc.rows.is_empty() && !errors.is_empty()) {
        render::dims(out, g.format, &doc).map_err(io_failure)?;
    }
    finish(errors, failing)
}

/// Parity class carrying the nonzero self-conjugate values.
fn fit_parity(law: Law, k: usize) -> Option<u32> {
    match law {
        Law::ScRatio | Law::MRatio => Some(dominant_parity(k)),
        Law::HookCount | Law::FullSym => None,
    }
}

/// Known limits the fit can be read against; reported, never asserted.
fn reference(law: Law, k: usize) -> Option<(f64, Option<f64>)> {
    match law {
        Law::ScRatio => Some((-(k as f64), Some(ln_abs(&c1_constant(k)).exp()))),
        Law::HookCount => Some((0.0, Some(1.0))),
        Law::MRatio if k == 1 => Some((-0.5, Some(c2_k1()))),
        Law::MRatio => Some((-(k as f64) / 2.0, None)),
        Law::FullSym => None,
    }
}

pub fn asymptotics(a: &AsymptoticsArgs, g: &GlobalOpts, jobs: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let usage = |m: String| Failure::Usage(format!("error: {m}"));
    let (series, share) = match a.law {
        Law::FullSym => {
            if a.k.is_some() {
                return Err(usage("full-sym takes no --k".into()));
            }
            if a.fit {
                return Err(usage("full-sym reports values only; --fit is not available".into()));
            }
            if a.nmax > FULL_SYM_MAX_N {
                return Err(usage(format!("full-sym needs --nmax ≤ {FULL_SYM_MAX_N}")));
            }
            let (ratio, share) = full_sym_ratio(a.nmax).map_err(|e| usage(e.to_string()))?;
            (ratio, Some(share))
        }
        law => {
            let k = match a.k {
                Some(k) if k >= 1 => k,
                _ => return Err(usage(format!("{law} needs --k ≥ 1"))),
            };
            let s = match law {
                Law::ScRatio => sc_ratio_series(k, a.nmax),
                Law::HookCount => hook_count_law(k, a.nmax),
                _ => m_ratio_series(k, a.nmax),
            };
            (s, None)
        }
    };

    let fit = if a.fit {
        let k = a.k.unwrap_or(0);
        let window = match a.window {
            Some((lo, hi)) => (lo as u32, hi as u32),
            None => ((a.nmax / 4).max(1), a.nmax),
        };
        let parity = fit_parity(a.law, k);
        let subset: RatioSeries = match parity {
            Some(p) => series.retain(|n| n % 2 == p),
            None => series.clone(),
        };
        let fit = fit_power_law(&subset, window).map_err(|e| usage(e.to_string()))?;
        let reference = reference(a.law, k);
        Some(FitBlock {
            exponent: fit.exponent,
            constant: fit.constant,
            residual: fit.residual,
            window: [fit.window.0, fit.window.1],
            points: fit.points,
            parity: match parity {
                Some(0) => "even",
                Some(_) => "odd",
                None => "all",
            },
            reference_exponent: reference.map(|r| r.0),
            reference_constant: reference.and_then(|r| r.1),
        })
    } else {
        None
    };

    let mut config = Config::new("asymptotics", g, jobs);
    config.law = Some(a.law);
    config.k = a.k;
    config.nmax = Some(a.nmax);
    config.window = fit.as_ref().map(|f| f.window);
    let doc = AsymptoticsDoc {
        tool: render::TOOL,
        version: env!("CARGO_PKG_VERSION"),
        config,
        series: render::SeriesView::from(&series),
        share: share.as_ref().map(render::SeriesView::from),
        fit,
    };
    render::asymptotics(out, g.format, &doc).map_err(io_failure)
}
