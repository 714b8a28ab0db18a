use rayon::prelude::*;
use serde::Serialize;

use super::closed_forms::*;
use crate::braiding::{diagonal_basis_braiding, BraidingParams};
use crate::scalars::{
    rat, CyclotomicNumber, Monomial, MultiPoly, ParamPoint, RationalFunction, Scalar, Var,
};
use crate::sym::{ek_table, named_representatives, orbit, orbit_partition, EkTable, Limits, Word};
use crate::symmetrizer::{nichols_dimension, tilde_f_diagonal_e1, tilde_f_k, SymmetrizerEngine};

/// One disagreement: the input and both values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReportStatus {
    Pass,
    Fail { counterexamples: Vec<Counterexample> },
}

/// Outcome of checking one closed form over a range. `expected` is always
/// the closed form, `found` the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub name: String,
    pub range: String,
    pub checks: usize,
    #[serde(flatten)]
    pub status: ReportStatus,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }

    pub fn counterexamples(&self) -> &[Counterexample] {
        match &self.status {
            ReportStatus::Pass => &[],
            ReportStatus::Fail { counterexamples } => counterexamples,
        }
    }
}

/// Adds `delta` to one closed-form `E_{k,s}^n` before it is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[doc(hidden)]
pub struct Perturbation {
    pub k: u32,
    pub s: u32,
    pub n: usize,
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest word length in every family of checks.
    pub n_max: usize,
    /// Largest degree computed by the dimension checks.
    pub degree_cap: usize,
    pub limits: Limits,
    #[doc(hidden)]
    pub perturbation: Option<Perturbation>,
}

impl VerifyConfig {
    pub fn new(n_max: usize, degree_cap: usize) -> Self {
        VerifyConfig {
            n_max,
            degree_cap,
            limits: Limits::default(),
            perturbation: None,
        }
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig::new(9, 14)
    }
}

struct Collector {
    name: String,
    range: String,
    checks: usize,
    failures: Vec<Counterexample>,
}

impl Collector {
    fn new(name: impl Into<String>, range: impl Into<String>) -> Self {
        Collector {
            name: name.into(),
            range: range.into(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check<T: PartialEq + ToString>(&mut self, input: impl FnOnce() -> String, expected: T, found: T) {
        self.checks += 1;
        if expected != found {
            self.failures.push(Counterexample {
                input: input(),
                expected: expected.to_string(),
                found: found.to_string(),
            });
        }
    }

    fn finish(self) -> ClosedFormReport {
        ClosedFormReport {
            name: self.name,
            range: self.range,
            checks: self.checks,
            status: if self.failures.is_empty() {
                ReportStatus::Pass
            } else {
                ReportStatus::Fail {
                    counterexamples: self.failures,
                }
            },
        }
    }
}

fn orbit_sizes(cfg: &VerifyConfig) -> ClosedFormReport {
    let max = cfg.n_max.min(2 * cfg.limits.full_scan);
    let mut c = Collector::new("orbit_size", format!("word length 1..={max}"));
    for len in 1..=max {
        let h = (len / 2) as u64;
        let parity = if len % 2 == 0 { LengthParity::Even } else { LengthParity::Odd };
        for (word, label) in named_representatives(len) {
            // Labels carry k as the exponent of the pair, absent for k = 0.
            let k = label
                .split("^")
                .last()
                .filter(|_| label.contains('('))
                .map_or(0, |x| x.parse::<u64>().expect("numeric exponent"));
            let expected = cf_orbit_size(h, k, parity).expect("k <= n");
            c.check(|| format!("{label} (length {len})"), expected, orbit(&word).len() as u64);
        }
    }
    c.finish()
}

fn orbit_decomposition(cfg: &VerifyConfig) -> ClosedFormReport {
    let max = cfg.n_max.min(2 * cfg.limits.full_scan);
    let mut c = Collector::new("orbit_decomposition", format!("word length 1..={max}"));
    for len in 1..=max {
        let parts = orbit_partition(len, &cfg.limits).expect("within cap");
        let total: usize = parts.iter().map(|o| o.size).sum();
        c.check(|| format!("sum of orbit sizes, length {len}"), 1usize << len, total);
        let unnamed = parts.iter().filter(|o| o.label.is_none()).count();
        c.check(|| format!("orbits without a named representative, length {len}"), 0, unnamed);
        c.check(
            || format!("number of orbits, length {len}"),
            named_representatives(len).len(),
            parts.len(),
        );
    }
    c.finish()
}

fn tilde_fk_report(cfg: &VerifyConfig, k: u32) -> ClosedFormReport {
    let mut c = Collector::new(format!("tilde_f_{k}"), format!("n = 2..={}", cfg.n_max));
    for n in 2..=cfg.n_max {
        c.check(|| format!("n = {n}"), cf_tilde_fk(k, n).expect("k <= 5"), tilde_f_k(n, k));
    }
    c.finish()
}

fn e_tables(cfg: &VerifyConfig) -> Vec<EkTable> {
    (2..=cfg.n_max.min(cfg.limits.subgroup))
        .map(|n| ek_table(n, Some(5), &cfg.limits).expect("within cap"))
        .collect()
}

fn e_report(cfg: &VerifyConfig, tables: &[EkTable], k: u32) -> ClosedFormReport {
    let hi = tables.last().map_or(1, |t| t.n);
    let mut c = Collector::new(format!("E_{k}"), format!("n = 2..={hi}, s = 0..={}", 3 * k));
    for t in tables {
        let n = t.n;
        let outside = t
            .counts
            .iter()
            .filter(|((kk, s), _)| *kk == k && *s > 3 * k)
            .count();
        c.check(|| format!("entries with s > 3k at n = {n}"), 0, outside);
        for s in 0..=3 * k {
            let mut closed = cf_e(k, s, n).expect("k <= 5");
            if let Some(p) = cfg.perturbation.filter(|p| (p.k, p.s, p.n) == (k, s, n)) {
                closed += p.delta;
            }
            c.check(|| format!("k = {k}, s = {s}, n = {n}"), closed, t.get(k, s) as i64);
        }
    }
    c.finish()
}

fn bridge_poly(t: &EkTable, k: u32) -> MultiPoly {
    MultiPoly::from_terms(
        t.counts
            .iter()
            .filter(|((kk, _), _)| *kk == k)
            .map(|(&(_, s), &count)| (Monomial::new((s - k) / 2, 0, 0), rat(count as i64))),
    )
}

fn bridge(tables: &[EkTable]) -> ClosedFormReport {
    let hi = tables.last().map_or(1, |t| t.n);
    let mut c = Collector::new("f_e_bridge", format!("n = 2..={hi}, k = 0..=5"));
    for t in tables {
        for k in 0..=5 {
            c.check(|| format!("n = {}, k = {k}", t.n), bridge_poly(t, k), tilde_f_k(t.n, k));
        }
    }
    c.finish()
}

fn cf_consistency(cfg: &VerifyConfig) -> ClosedFormReport {
    let mut c = Collector::new(
        "closed_form_consistency",
        format!("n = 2..={}, k = 0..=5", cfg.n_max),
    );
    for n in 2..=cfg.n_max {
        for k in 0..=5 {
            let from_e = MultiPoly::from_terms((0..=k).map(|i| {
                (Monomial::new(i, 0, 0), rat(cf_e(k, 2 * i + k, n).expect("k <= 5")))
            }));
            c.check(|| format!("n = {n}, k = {k}"), from_e, cf_tilde_fk(k, n).expect("k <= 5"));
        }
    }
    c.finish()
}

fn longest_element(cfg: &VerifyConfig) -> ClosedFormReport {
    let mut c = Collector::new("longest_element", format!("length 4..={}", cfg.n_max));
    for len in 4..=cfg.n_max {
        let p = tilde_f_diagonal_e1(len);
        let (top, lead) = cf_longest_element(len);
        let degree = p.degree_in(Var::B).map_or("none".to_string(), |d| d.to_string());
        c.check(|| format!("b-degree, length {len}"), top.to_string(), degree);
        c.check(|| format!("top coefficient, length {len}"), lead, p.coeff_of(Var::B, top));
    }
    c.finish()
}

fn q_factorials(cfg: &VerifyConfig) -> ClosedFormReport {
    let h_max = cfg.n_max / 2;
    let mut c = Collector::new("q_factorial_identity", format!("2n <= {}, 0 <= k <= n", cfg.n_max));
    let params = BraidingParams::new(MultiPoly::one(), MultiPoly::var(Var::B), MultiPoly::one())
        .expect("nonzero");
    let engine = SymmetrizerEngine::new(params);
    for h in 1..=h_max as u32 {
        for k in 0..=h {
            let mut letters = vec![2u8; 2 * (h - k) as usize];
            for _ in 0..k {
                letters.extend([1, 2]);
            }
            let x = Word::new(&letters).expect("valid letters");
            let found = engine.tilde_f(&x, &x).expect("same length");
            c.check(|| format!("n = {h}, k = {k}"), cf_qfactorial_product(h, k), found);
        }
    }
    c.finish()
}

fn b_minus_one(cfg: &VerifyConfig) -> ClosedFormReport {
    let m_max = (cfg.n_max.saturating_sub(1) / 2) as u32;
    let mut c = Collector::new("b_minus_one_entries", format!("m = 1..={m_max}"));
    let params = BraidingParams::new(
        MultiPoly::var(Var::A),
        MultiPoly::constant(rat(-1)),
        MultiPoly::var(Var::E),
    )
    .expect("nonzero");
    let engine = SymmetrizerEngine::new(params);
    for m in 1..=m_max {
        let odd = Word::repeat(1, 2 * m as usize + 1);
        let (ones, twos) = (Word::repeat(1, 2 * m as usize), Word::repeat(2, 2 * m as usize));
        let cases = [
            (BMinusOneVariant::OddPower, odd, odd),
            (BMinusOneVariant::EvenDiag, twos, twos),
            (BMinusOneVariant::EvenCross, twos, ones),
        ];
        for (variant, x, y) in cases {
            let expected = cf_bminus1_tilde(m, variant).expect("m >= 1");
            let found = engine.tilde_f(&x, &y).expect("same length");
            c.check(|| format!("m = {m}, {variant:?}"), expected, found);
        }
    }
    c.finish()
}

fn dimension_cases(cfg: &VerifyConfig) -> Vec<(DimensionCase, ParamPoint, usize)> {
    let d = cfg.degree_cap.min(cfg.n_max);
    let mut cases = Vec::new();
    let pt = |a: &str, b: &str, e: &str| ParamPoint::parse(a, b, e).expect("valid literals");
    if d >= 3 {
        cases.push((DimensionCase::CartanA1A1, pt("1", "-1", "1"), 3));
    }
    if d >= 9 {
        cases.push((DimensionCase::CartanA2, pt("1", "zeta(3)", "zeta(3)^2"), 9));
    }
    for n in (2u32..).take_while(|n| 2 * *n as usize - 1 <= d) {
        cases.push((DimensionCase::V1b1(n), pt("1", &format!("zeta({n})"), "1"), 2 * n as usize - 1));
    }
    for m in (2u32..).take_while(|m| 2 * *m as usize + 1 <= d) {
        cases.push((DimensionCase::BMinusOne(m), pt(&format!("zeta({m})"), "-1", "1"), 2 * m as usize + 1));
    }
    cases
}

fn dimensions(cfg: &VerifyConfig) -> Vec<ClosedFormReport> {
    let cases = dimension_cases(cfg);
    let d = cfg.degree_cap.min(cfg.n_max);
    let profiles: Vec<_> = cases
        .par_iter()
        .map(|(case, pt, _)| (*case, pt.clone(), nichols_dimension(pt, d)))
        .collect();
    let mut dims = Collector::new("dimension", format!("termination degree <= {d}"));
    let mut graded = Collector::new("v1b1_graded_dimensions", format!("termination degree <= {d}"));
    for (case, pt, profile) in &profiles {
        let expected = cf_dimension(*case).expect("hypotheses hold");
        let found = match profile {
            Ok(p) => p.total().map_or(format!("{:?}", p.status), |t| t.to_string()),
            Err(e) => e.to_string(),
        };
        dims.check(|| format!("{case:?} at {pt}"), expected.to_string(), found);
        if let (DimensionCase::V1b1(n), Ok(p)) = (case, profile) {
            let n = *n as usize;
            let square: Vec<usize> = (0..=2 * n - 1)
                .map(|deg| (0..n).filter(|i| deg >= *i && deg - i < n).count())
                .collect();
            graded.check(
                || format!("graded dimensions at {pt}"),
                format!("{square:?}"),
                format!("{:?}", p.ranks),
            );
        }
    }
    vec![dims.finish(), graded.finish()]
}

fn diagonal_basis() -> ClosedFormReport {
    let mut c = Collector::new("diagonal_basis_table", "formal a, b with e = b^2/a");
    let a = RationalFunction::var(Var::A);
    let b = RationalFunction::var(Var::B);
    let e = b.clone() * &b * &a.inverse().expect("a is nonzero");
    let table = BraidingParams::new(a, b, e)
        .and_then(|p| diagonal_basis_braiding(&p))
        .expect("diagonal by construction");
    c.check(|| "c(w_i w_j) is a multiple of w_j w_i".into(), true, table.transpositive);
    c.check(|| "q = [[b, -b], [-b, b]]".into(), true, table.matches_reference_q);
    let pt = ParamPoint::parse("1", "-1", "1").expect("valid");
    let t = diagonal_basis_braiding(&BraidingParams::<CyclotomicNumber>::specialized(&pt))
        .expect("diagonal");
    c.check(|| format!("q table at {pt}"), true, t.transpositive && t.matches_reference_q);
    c.finish()
}

/// Runs every closed-form check. Report order is fixed.
pub fn verify_with(cfg: &VerifyConfig) -> Vec<ClosedFormReport> {
    type Job<'a> = Box<dyn Fn() -> Vec<ClosedFormReport> + Send + Sync + 'a>;
    let tables = e_tables(cfg);
    let tables = &tables;
    let mut jobs: Vec<Job> = vec![
        Box::new(|| vec![orbit_sizes(cfg), orbit_decomposition(cfg)]),
    ];
    for k in 0..=5 {
        jobs.push(Box::new(move || vec![tilde_fk_report(cfg, k)]));
    }
    for k in 0..=5 {
        jobs.push(Box::new(move || vec![e_report(cfg, tables, k)]));
    }
    jobs.push(Box::new(|| vec![bridge(tables)]));
    jobs.push(Box::new(|| vec![cf_consistency(cfg)]));
    jobs.push(Box::new(|| vec![longest_element(cfg)]));
    jobs.push(Box::new(|| vec![q_factorials(cfg)]));
    jobs.push(Box::new(|| vec![b_minus_one(cfg)]));
    jobs.push(Box::new(|| dimensions(cfg)));
    jobs.push(Box::new(|| vec![diagonal_basis()]));
    let results: Vec<Vec<ClosedFormReport>> = jobs.par_iter().map(|j| j()).collect();
    results.into_iter().flatten().collect()
}

/// [`verify_with`] using the default caps.
pub fn verify_all(n_max: usize, degree_cap: usize) -> Vec<ClosedFormReport> {
    verify_with(&VerifyConfig::new(n_max, degree_cap))
}

/// One line per report.
pub fn summary(reports: &[ClosedFormReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!("{verdict:4}  {:28} {:5} checks  {}\n", r.name, r.checks, r.range));
        for ce in r.counterexamples() {
            out.push_str(&format!(
                "      {}: closed form {}, computed {}\n",
                ce.input, ce.expected, ce.found
            ));
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} reports, {failed} failed\n", reports.len()));
    out
}
