//! Certification harness: every expansion is checked as an exact identity
//! between bi-alternant polynomials, and the sweep runs all checks over a
//! bounded grid of `(n, λ, k)`.

pub mod classical;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::bialternant::{complete, elementary, grothendieck, powersum, verify_powersum_identity};
use crate::error::{Error, Result};
use crate::expansion::{Basis, Expansion};
use crate::mnrule::{mn_coefficient, mn_coefficient_jsum, mn_expand, strip_geometry};
use crate::pieri::{pieri_e, pieri_h};
use crate::poly::Poly;
use crate::shapes::{partitions_above, partitions_in_box, Partition, SkewShape};

/// Memoized `G_λ` and `G̃_λ`, safe to share between sweep workers.
#[derive(Default)]
pub struct Oracle {
    cache: Mutex<HashMap<(Partition, usize, Basis), Arc<Poly>>>,
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, lambda: &Partition, n: usize, basis: Basis) -> Result<Arc<Poly>> {
        let key = (lambda.clone(), n, basis);
        if let Some(p) = self.cache.lock().expect("oracle cache poisoned").get(&key) {
            return Ok(Arc::clone(p));
        }
        let g = grothendieck(lambda, n)?;
        let poly = match basis {
            Basis::G => g,
            Basis::GTilde => g.beta_rescale(lambda.size() as i64)?,
        };
        let poly = Arc::new(poly);
        self.cache
            .lock()
            .expect("oracle cache poisoned")
            .insert(key, Arc::clone(&poly));
        Ok(poly)
    }

    /// `Σ_μ coeff_μ · basis_μ` as a polynomial.
    pub fn evaluate(&self, exp: &Expansion) -> Result<Poly> {
        let n = exp.n();
        let mut acc = Poly::zero(n);
        for (mu, c) in exp.terms() {
            let basis_poly = self.get(mu, n, exp.basis())?;
            acc = &acc + &(&c.to_poly(n) * &basis_poly);
        }
        Ok(acc)
    }
}

/// Outcome of one identity check; both sides are kept for diagnosis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: &'static str,
    pub ok: bool,
    pub lhs: Poly,
    pub rhs: Poly,
    pub expansion: Expansion,
    pub detail: Option<String>,
}

impl Report {
    pub fn to_json_value(&self) -> Result<serde_json::Value> {
        let mut v = json!({
            "check": self.check,
            "ok": self.ok,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "expansion": self.expansion.to_json_value()?,
        });
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        Ok(v)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(self.to_json_value()?.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieriKind {
    E,
    H,
}

impl Oracle {
    /// [`verify_mn`] or [`verify_mn_tilde`] against this cache.
    pub fn check_mn(&self, lambda: &Partition, k: usize, n: usize, basis: Basis) -> Result<Report> {
        mn_report(self, lambda, k, n, basis)
    }

    /// [`verify_pieri`] against this cache.
    pub fn check_pieri(&self, lambda: &Partition, k: usize, n: usize, kind: PieriKind) -> Result<Report> {
        pieri_report(self, lambda, k, n, kind)
    }
}

fn mn_report(oracle: &Oracle, lambda: &Partition, k: usize, n: usize, basis: Basis) -> Result<Report> {
    let expansion = mn_expand(lambda, k, n, basis)?;
    let lhs = &*oracle.get(lambda, n, basis)? * &powersum(k, n)?;
    let rhs = oracle.evaluate(&expansion)?;
    Ok(Report {
        check: match basis {
            Basis::G => "mn",
            Basis::GTilde => "mn_tilde",
        },
        ok: lhs == rhs,
        lhs,
        rhs,
        expansion,
        detail: None,
    })
}

/// `G_λ · p_k` against the rule's expansion evaluated on `G_μ`.
pub fn verify_mn(lambda: &Partition, k: usize, n: usize) -> Result<Report> {
    mn_report(&Oracle::new(), lambda, k, n, Basis::G)
}

/// The same identity in the `G̃` basis.
pub fn verify_mn_tilde(lambda: &Partition, k: usize, n: usize) -> Result<Report> {
    mn_report(&Oracle::new(), lambda, k, n, Basis::GTilde)
}

fn pieri_report(oracle: &Oracle, lambda: &Partition, k: usize, n: usize, kind: PieriKind) -> Result<Report> {
    let (expansion, factor, check) = match kind {
        PieriKind::E => (pieri_e(lambda, k, n)?, elementary(k, n)?, "pieri_e"),
        PieriKind::H => (pieri_h(lambda, k, n)?, complete(k, n)?, "pieri_h"),
    };
    let lhs = &*oracle.get(lambda, n, Basis::GTilde)? * &factor;
    let rhs = oracle.evaluate(&expansion)?;
    Ok(Report { check, ok: lhs == rhs, lhs, rhs, expansion, detail: None })
}

/// `G̃_λ · e_k` or `G̃_λ · h_k` against its tableau expansion.
pub fn verify_pieri(lambda: &Partition, k: usize, n: usize, kind: PieriKind) -> Result<Report> {
    pieri_report(&Oracle::new(), lambda, k, n, kind)
}

/// The `β = 0` part of the expansion of `G_λ · p_k` against the classical
/// ribbon rule, term by term, plus the Schur identity
/// `s_λ p_k = Σ c_μ s_μ` for the classical coefficients.
pub fn verify_classical(lambda: &Partition, k: usize, n: usize) -> Result<Report> {
    let expansion = mn_expand(lambda, k, n, Basis::G)?;
    let specialized = expansion.at_beta_zero();
    let classical_terms = classical::ribbon_rule(lambda, k, n)?;

    let lhs = &classical::schur(lambda, n)? * &powersum(k, n)?;
    let mut rhs = Poly::zero(n);
    for (mu, c) in &classical_terms {
        rhs = &rhs + &classical::schur(mu, n)?.scalar_mul(c);
    }

    let mut problems = Vec::new();
    if specialized != classical_terms {
        problems.push(format!(
            "beta=0 terms {} differ from ribbon rule {}",
            fmt_terms(&specialized),
            fmt_terms(&classical_terms)
        ));
    }
    if lhs != rhs {
        problems.push("ribbon rule does not reproduce s_lambda * p_k".to_string());
    }
    Ok(Report {
        check: "classical",
        ok: problems.is_empty(),
        lhs,
        rhs,
        expansion,
        detail: (!problems.is_empty()).then(|| problems.join("; ")),
    })
}

fn fmt_terms(terms: &std::collections::BTreeMap<Partition, BigInt>) -> String {
    let parts: Vec<String> = terms.iter().map(|(mu, c)| format!("{mu}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// All `μ ⊇ λ` with `l(μ) ≤ n` and `μ_1 ≤ λ_1 + k`: the box that the
/// expansion index set lives in, including disconnected and empty shapes.
pub fn candidates(lambda: &Partition, k: usize, n: usize) -> Vec<Partition> {
    partitions_above(lambda, lambda.first() + k, n)
}

/// Compares the closed-form coefficient with the composite-tableau sum for
/// every candidate `μ`; returns one line per mismatch.
pub fn verify_coefficient_paths(lambda: &Partition, k: usize, n: usize) -> Result<Vec<String>> {
    let mut mismatches = Vec::new();
    for mu in candidates(lambda, k, n) {
        let closed = mn_coefficient(lambda, &mu, k, n)?;
        let jsum = mn_coefficient_jsum(lambda, &mu, k, n)?;
        if closed.coeff() != jsum.coeff() {
            mismatches.push(format!("mu={mu}: closed form {closed}, j-sum {jsum}"));
            continue;
        }
        let shape = SkewShape::new(lambda.clone(), mu.clone())?;
        if !closed.is_zero() && closed.beta_power() as usize + k != shape.size() {
            mismatches.push(format!("mu={mu}: beta power {} for size {}", closed.beta_power(), shape.size()));
        }
    }
    Ok(mismatches)
}

/// Checks `|γ|` against a flood-fill component count and, for connected
/// shapes, `|η| = r − 1` and the northwest trace against `r + c − 1`.
pub fn verify_geometry(lambda: &Partition, k: usize, n: usize) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    for mu in candidates(lambda, k, n).into_iter().filter(|mu| mu != lambda) {
        let shape = SkewShape::new(lambda.clone(), mu.clone())?;
        let geo = strip_geometry(lambda, &mu, n)?;
        let components = shape.components();
        if geo.gamma_size != components {
            problems.push(format!("mu={mu}: |gamma|={} but {components} components", geo.gamma_size));
        }
        if geo.b_size != shape.cols() {
            problems.push(format!("mu={mu}: |B|={} but c={}", geo.b_size, shape.cols()));
        }
        if components == 1 {
            let (r, c) = (shape.rows(), shape.cols());
            if geo.eta_size != r - 1 {
                problems.push(format!("mu={mu}: |eta|={} but r-1={}", geo.eta_size, r - 1));
            }
            let trace = shape.nw_border_trace()?;
            if trace.size() != r + c - 1 || shape.max_nw_ribbon_size()? != r + c - 1 {
                problems.push(format!("mu={mu}: nw trace size {} but r+c-1={}", trace.size(), r + c - 1));
            }
            if !trace.is_ribbon() {
                problems.push(format!("mu={mu}: nw trace {trace} is not a ribbon"));
            }
        }
    }
    Ok(problems)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_part: usize,
    pub max_len: usize,
    pub max_k: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

/// Names of the checks run for each `(n, λ, k)`.
pub const SHAPE_CHECKS: [&str; 7] =
    ["mn", "mn_tilde", "pieri_e", "pieri_h", "classical", "coefficient_paths", "geometry"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub n: usize,
    pub lambda: Vec<usize>,
    pub k: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<serde_json::Value>,
}

impl Failure {
    fn sort_key(&self) -> (usize, usize, usize, Vec<usize>, String) {
        (self.n, self.lambda.iter().sum(), self.k, self.lambda.clone(), self.check.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Individual checks evaluated.
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// The failure with the smallest `(n, |λ|, k)`.
    pub fn minimal_counterexample(&self) -> Option<&Failure> {
        self.failures.first()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }
}

#[derive(Clone, Debug)]
enum Case {
    Shape { n: usize, lambda: Partition, k: usize, check: &'static str },
    PowerSum { n: usize, k: usize },
}

fn cases(config: &SweepConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=config.max_n {
        for lambda in partitions_in_box(config.max_part, config.max_len.min(n)) {
            for k in 1..=config.max_k {
                for check in SHAPE_CHECKS {
                    out.push(Case::Shape { n, lambda: lambda.clone(), k, check });
                }
            }
        }
        for k in 1..=config.max_k {
            out.push(Case::PowerSum { n, k });
        }
    }
    out
}

fn report_failure(report: Report, n: usize, lambda: &Partition, k: usize) -> Result<Option<Failure>> {
    if report.ok {
        return Ok(None);
    }
    Ok(Some(Failure {
        check: report.check.to_string(),
        n,
        lambda: lambda.parts().to_vec(),
        k,
        detail: report.detail.clone().unwrap_or_else(|| "polynomial sides differ".to_string()),
        report: Some(report.to_json_value()?),
    }))
}

fn lines_failure(check: &str, lines: Vec<String>, n: usize, lambda: &Partition, k: usize) -> Option<Failure> {
    (!lines.is_empty()).then(|| Failure {
        check: check.to_string(),
        n,
        lambda: lambda.parts().to_vec(),
        k,
        detail: lines.join("; "),
        report: None,
    })
}

fn run_case(oracle: &Oracle, case: &Case) -> Result<Option<Failure>> {
    match case {
        Case::PowerSum { n, k } => Ok((!verify_powersum_identity(*k, *n)?).then(|| Failure {
            check: "powersum_identity".to_string(),
            n: *n,
            lambda: Vec::new(),
            k: *k,
            detail: "p_k differs from the e/h sum".to_string(),
            report: None,
        })),
        Case::Shape { n, lambda, k, check } => {
            let (n, k) = (*n, *k);
            match *check {
                "mn" => report_failure(mn_report(oracle, lambda, k, n, Basis::G)?, n, lambda, k),
                "mn_tilde" => report_failure(mn_report(oracle, lambda, k, n, Basis::GTilde)?, n, lambda, k),
                "pieri_e" => report_failure(pieri_report(oracle, lambda, k, n, PieriKind::E)?, n, lambda, k),
                "pieri_h" => report_failure(pieri_report(oracle, lambda, k, n, PieriKind::H)?, n, lambda, k),
                "classical" => report_failure(verify_classical(lambda, k, n)?, n, lambda, k),
                "coefficient_paths" => {
                    Ok(lines_failure(check, verify_coefficient_paths(lambda, k, n)?, n, lambda, k))
                }
                "geometry" => Ok(lines_failure(check, verify_geometry(lambda, k, n)?, n, lambda, k)),
                other => unreachable!("unknown check {other}"),
            }
        }
    }
}

/// Runs every check over `n ≤ max_n`, `λ` in a `max_len × max_part` box
/// (and `l(λ) ≤ n`), `1 ≤ k ≤ max_k`, plus the power-sum identity for each
/// `(k, n)`. Output is independent of `jobs`.
pub fn sweep(config: SweepConfig) -> Result<Summary> {
    if config.max_n == 0 || config.max_part == 0 || config.max_len == 0 || config.max_k == 0 {
        return Err(Error::Parse("sweep bounds must be at least 1".to_string()));
    }
    let all = cases(&config);
    let oracle = Oracle::new();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Parse(e.to_string()))?;
    let results: Vec<Result<Option<Failure>>> =
        pool.install(|| all.par_iter().map(|case| run_case(&oracle, case)).collect());

    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    failures.sort_by_key(Failure::sort_key);
    Ok(Summary { cases: all.len(), failures })
}
