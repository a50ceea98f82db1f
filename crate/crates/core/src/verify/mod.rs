//! Registry of checks, the runner, and report documents.

mod exact;
mod numeric;
mod oeis;
mod report;
mod sampled;
#[cfg(test)]
mod tests;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{DEFAULT_CAP, HARD_CAP};

pub use oeis::{
    cache_dir, load_local, load_reference, oeis_compare, parse_bfile, parse_sequence_file,
    Sequence, CACHE_ENV,
};
pub use report::{CheckSpec, Counterexample, Mode, Provenance, Report, Residual};

/// One declarative registry entry.
pub struct CheckEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub mode: Mode,
    pub n_max: usize,
    pub order: usize,
    pub tol: f64,
    pub samples: usize,
    /// Whether `n_max` (or `order`) drives a brute-force enumeration and so is capped.
    pub enumerates: bool,
    run: fn(&CheckSpec) -> Result<Report>,
}

const fn exact(
    id: &'static str,
    title: &'static str,
    n_max: usize,
    order: usize,
    enumerates: bool,
    run: fn(&CheckSpec) -> Result<Report>,
) -> CheckEntry {
    CheckEntry {
        id,
        title,
        mode: Mode::ExactSymbolic,
        n_max,
        order,
        tol: 0.0,
        samples: 0,
        enumerates,
        run,
    }
}

const fn sampled(
    id: &'static str,
    title: &'static str,
    n_max: usize,
    order: usize,
    run: fn(&CheckSpec) -> Result<Report>,
) -> CheckEntry {
    CheckEntry {
        id,
        title,
        mode: Mode::ExactSampled,
        n_max,
        order,
        tol: 0.0,
        samples: 0,
        enumerates: true,
        run,
    }
}

const fn numeric(
    id: &'static str,
    title: &'static str,
    order: usize,
    tol: f64,
    samples: usize,
    run: fn(&CheckSpec) -> Result<Report>,
) -> CheckEntry {
    CheckEntry {
        id,
        title,
        mode: Mode::Numeric,
        n_max: 0,
        order,
        tol,
        samples,
        enumerates: false,
        run,
    }
}

pub static REGISTRY: &[CheckEntry] = &[
    exact(
        "thm-P",
        "D^n(z) equals the exterior-labeling polynomial P_n",
        8,
        0,
        true,
        exact::thm_p,
    ),
    exact(
        "thm-Q",
        "D^n(w) equals the peak-labeling polynomial Q_n",
        8,
        0,
        true,
        exact::thm_q,
    ),
    exact(
        "cor-W",
        "D^n(w) with v = z equals W_n",
        8,
        0,
        true,
        exact::cor_w,
    ),
    exact(
        "insertion",
        "insertion children realise one application of D",
        6,
        0,
        true,
        exact::insertion,
    ),
    exact("conv", "convolution of P and Q", 7, 0, true, exact::conv),
    exact(
        "ode",
        "second-order equation for Gen(x^-1/2 z^-1/2)",
        0,
        14,
        false,
        exact::ode,
    ),
    exact(
        "gen-xinvz",
        "closed form of D^n(x^-1 z)",
        0,
        12,
        false,
        exact::gen_xinvz,
    ),
    exact(
        "quotient",
        "Gen(z)^2 Gen(x^-1/2 z^-1/2)^2 = Gen(x^-1 z)",
        0,
        12,
        false,
        exact::quotient,
    ),
    exact(
        "gen-w",
        "Gen(z) Gen(w) = Gen'(z)",
        0,
        12,
        false,
        exact::gen_w,
    ),
    exact(
        "grammar-g1",
        "g1 and the Eulerian polynomials",
        8,
        0,
        true,
        exact::grammar_g1,
    ),
    exact(
        "grammar-g2",
        "g2 and exterior peaks",
        8,
        0,
        true,
        exact::grammar_g2,
    ),
    exact(
        "grammar-g3",
        "g3 and Fu's polynomials",
        8,
        0,
        true,
        exact::grammar_g3,
    ),
    exact(
        "stats",
        "statistic identities",
        7,
        0,
        true,
        exact::stat_identities,
    ),
    exact(
        "ta-parity",
        "parity split over down-up permutations",
        8,
        0,
        true,
        exact::ta_parity,
    ),
    sampled(
        "gessel",
        "exterior peak generating function",
        0,
        9,
        sampled::gessel,
    ),
    sampled(
        "elizalde-noy",
        "proper double descents",
        0,
        9,
        sampled::elizalde_noy,
    ),
    sampled(
        "barry-basset",
        "no proper double descents",
        0,
        9,
        sampled::barry_basset,
    ),
    sampled("fu", "peaks and proper double descents", 0, 9, sampled::fu),
    sampled(
        "carlitz-scoville",
        "peaks, valleys, double rises and descents",
        0,
        9,
        sampled::carlitz_scoville,
    ),
    sampled("L", "consecutive 231 and 321", 0, 9, sampled::ln),
    sampled("T", "132 and 231 exterior peaks", 0, 9, sampled::tn),
    sampled("Tbar", "132 exterior peaks", 0, 9, sampled::tbar),
    sampled("Ttilde", "231 exterior peaks", 0, 9, sampled::ttilde),
    sampled(
        "TA",
        "exterior peaks of down-up permutations",
        0,
        9,
        sampled::ta,
    ),
    sampled(
        "involutions",
        "involutions and L_n(0)",
        8,
        0,
        sampled::involutions,
    ),
    sampled(
        "kitaev",
        "consecutive-pattern avoiders",
        0,
        9,
        sampled::kitaev,
    ),
    numeric(
        "gen-p-num",
        "closed form of Gen(z)",
        25,
        1e-8,
        8,
        numeric::gen_p,
    ),
    numeric(
        "gen-q-num",
        "closed form of Gen(w)",
        25,
        1e-8,
        8,
        numeric::gen_q,
    ),
    numeric(
        "gen-f-num",
        "closed form of Gen(x^-1/2 z^-1/2)",
        25,
        1e-8,
        8,
        numeric::gen_f,
    ),
    numeric(
        "special-closed",
        "reduced parabolic cylinder forms",
        0,
        1e-12,
        0,
        numeric::special_closed,
    ),
    numeric(
        "special-rec",
        "parabolic cylinder recurrences",
        0,
        1e-10,
        0,
        numeric::special_rec,
    ),
    numeric(
        "special-ode",
        "parabolic cylinder equation",
        0,
        1e-8,
        0,
        numeric::special_ode,
    ),
    numeric(
        "special-kummer",
        "Kummer and contiguous relations",
        12,
        1e-10,
        0,
        numeric::special_kummer,
    ),
    CheckEntry {
        id: "oeis-cache",
        title: "computed sequences against the offline cache",
        mode: Mode::ExactSymbolic,
        n_max: 8,
        order: 0,
        tol: 0.0,
        samples: 0,
        enumerates: true,
        run: oeis::cache_check,
    },
];

pub fn entry(id: &str) -> Result<&'static CheckEntry> {
    REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

impl CheckSpec {
    /// The registry defaults for `id`.
    pub fn for_id(id: &str) -> Result<CheckSpec> {
        let e = entry(id)?;
        Ok(CheckSpec {
            id: e.id.to_string(),
            mode: e.mode,
            n_max: e.n_max,
            order: e.order,
            tol: e.tol,
            samples: e.samples,
            seed: 20_240_601,
            cap: DEFAULT_CAP,
        })
    }
}

pub fn run_check(spec: &CheckSpec) -> Result<Report> {
    let e = entry(&spec.id)?;
    if spec.mode != e.mode {
        return Err(Error::ModeNotPermitted {
            id: spec.id.clone(),
            mode: spec.mode.to_string(),
        });
    }
    if spec.cap > HARD_CAP {
        return Err(Error::CapExceeded {
            n: spec.cap,
            cap: HARD_CAP,
        });
    }
    if e.enumerates {
        let n = spec.n_max.max(spec.order);
        if n > spec.cap {
            return Err(Error::CapExceeded { n, cap: spec.cap });
        }
    }
    if e.mode == Mode::Numeric && (spec.tol.is_nan() || spec.tol <= 0.0) {
        return Err(Error::Domain(format!(
            "{}: tolerance must be positive",
            spec.id
        )));
    }
    (e.run)(spec)
}

/// Runs `specs` on `jobs` workers; reports come back in registry order.
pub fn run_all(specs: &[CheckSpec], jobs: usize) -> Result<Vec<Result<Report>>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("cannot start workers: {e}")))?;
    let mut ordered: Vec<&CheckSpec> = specs.iter().collect();
    ordered.sort_by_key(|s| {
        REGISTRY
            .iter()
            .position(|e| e.id == s.id)
            .unwrap_or(usize::MAX)
    });
    Ok(pool.install(|| ordered.par_iter().map(|s| run_check(s)).collect()))
}

/// What one `verify` invocation writes as JSON.
#[derive(Debug, Serialize)]
pub struct RunDocument {
    pub passed: bool,
    pub reports: Vec<Report>,
    pub errors: Vec<RunError>,
}

#[derive(Debug, Serialize)]
pub struct RunError {
    pub id: String,
    pub error: String,
}

impl RunDocument {
    pub fn new(specs: &[CheckSpec], results: Vec<Result<Report>>) -> Self {
        let mut reports = Vec::new();
        let mut errors = Vec::new();
        let mut ordered: Vec<&CheckSpec> = specs.iter().collect();
        ordered.sort_by_key(|s| {
            REGISTRY
                .iter()
                .position(|e| e.id == s.id)
                .unwrap_or(usize::MAX)
        });
        for (spec, r) in ordered.into_iter().zip(results) {
            match r {
                Ok(rep) => reports.push(rep),
                Err(e) => errors.push(RunError {
                    id: spec.id.clone(),
                    error: e.to_string(),
                }),
            }
        }
        RunDocument {
            passed: errors.is_empty() && reports.iter().all(|r| r.passed),
            reports,
            errors,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
