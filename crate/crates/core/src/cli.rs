//! Suite orchestration behind the `pastro` binary.
//!
//! [`run`] turns a [`RunConfig`] into a [`Report`] and an exit code. Bad or
//! resonant parameters never panic: they become `ERROR` checks.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{self, qhahn_embedding};
use crate::biorth::{make_grid_rep, verify_adjoint_gevp, verify_adjoints, verify_biorthogonality};
use crate::error::{Error, Result};
use crate::pastro::{
    baxter_coefficients, biorthogonal_partner, verify_baxter_coefficients, verify_baxter_system,
    verify_construction, verify_weights, PastroFamily,
};
use crate::qcore::{LaurentPoly, QParams, Rational};
use crate::qdiff::{verify_contiguity, verify_gevp, verify_qdiff_equation, verify_recurrence};
use crate::report::{Check, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Table,
    Verify,
    Biorth,
    Algebra,
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Parameters left as `None` are only required by the commands that use
/// them; a missing one is reported as an `ERROR` check.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub q: Option<Rational>,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub mu: Option<Rational>,
    pub n_max: usize,
    pub n_points: usize,
    pub format: Format,
    pub seed: u64,
    pub draws: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            q: None,
            a: None,
            b: None,
            mu: None,
            n_max: 8,
            n_points: 4,
            format: Format::Text,
            seed: 1,
            draws: 5,
        }
    }

    fn require<'a>(&'a self, value: &'a Option<Rational>, flag: &str) -> Result<&'a Rational> {
        value
            .as_ref()
            .ok_or_else(|| Error::InvalidParams(format!("missing --{flag}")))
    }

    fn params(&self) -> Result<QParams> {
        QParams::new(
            self.require(&self.q, "q")?.clone(),
            self.require(&self.a, "a")?.clone(),
            self.require(&self.b, "b")?.clone(),
        )
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    /// Human-readable lines printed ahead of the checks in text mode.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// 0 when everything passed, 2 on any `ERROR`, 1 on any `FAIL`.
    pub fn exit_code(&self) -> i32 {
        let has = |s| self.checks.iter().any(|c| c.status == s);
        if has(Status::Error) {
            2
        } else if has(Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Compact JSON with sorted keys. Checks keep their run order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string(&value).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.notes {
            out.push_str(line);
            out.push('\n');
        }
        for c in &self.checks {
            let _ = writeln!(out, "{c}");
        }
        out
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = self.to_json();
                s.push('\n');
                s
            }
        }
    }
}

fn error_check(name: &str, anchor: &str, err: Error) -> Check {
    Check::from_result(name, anchor, Err(err))
}

/// Runs the configured command.
pub fn run(config: &RunConfig) -> (Report, i32) {
    let report = match config.command {
        Command::Table => table(config),
        Command::Verify => verify(config),
        Command::Biorth => biorth(config),
        Command::Algebra => algebra_suite(config),
        Command::Sweep => sweep(config),
    };
    let code = report.exit_code();
    (report, code)
}

fn poly_record(degree: usize, p: &LaurentPoly) -> Value {
    json!({ "degree": degree, "coefficients": p })
}

pub fn table(config: &RunConfig) -> Report {
    let mut report = Report::default();
    let built = (|| -> Result<_> {
        let params = config.params()?;
        let family = PastroFamily::new(&params, config.n_max)?;
        let partners = (0..=config.n_max)
            .map(|n| biorthogonal_partner(n, &params))
            .collect::<Result<Vec<_>>>()?;
        let baxter = baxter_coefficients(config.n_max, &params)?;
        Ok((params, family, partners, baxter))
    })();
    let (params, family, partners, baxter) = match built {
        Ok(v) => v,
        Err(e) => {
            report.push(error_check(
                "table",
                "def Pastro, full poly Q, full norm h",
                e,
            ));
            return report;
        }
    };
    report.notes.push(format!("# {params}"));
    for (n, (p, r)) in family.polys().iter().zip(&partners).enumerate() {
        report.notes.push(format!("P_{n} = {p}"));
        report.notes.push(format!("R_{n} = {r}"));
        report.notes.push(format!(
            "alpha_{n} = {}  beta_{n} = {}  h_{n} = {}",
            baxter.alpha[n], baxter.beta[n], baxter.h[n]
        ));
    }
    report.data = Some(json!({
        "params": { "q": params.q(), "a": params.a(), "b": params.b() },
        "polynomials": family.polys().iter().enumerate().map(|(n, p)| poly_record(n, p)).collect::<Vec<_>>(),
        "partners": partners.iter().enumerate().map(|(n, r)| poly_record(n, r)).collect::<Vec<_>>(),
        "alpha": baxter.alpha,
        "beta": baxter.beta,
        "h": baxter.h,
    }));
    report.push(verify_construction(config.n_max, &params));
    report
}

/// Per-degree checks folded into one line per suite.
pub fn verify_suites(n_max: usize, params: &QParams) -> Vec<Check> {
    let per_n = |name: &str, anchor: &str, f: fn(usize, &QParams) -> Check| {
        Check::all(
            format!("{name} n<={n_max}"),
            anchor,
            (0..=n_max).map(|n| f(n, params)),
        )
        .with_params(params)
    };
    vec![
        per_n("gevp", "GEVP XY", verify_gevp),
        per_n("qdiff_equation", "diff eq Pastro", verify_qdiff_equation),
        per_n(
            "recurrence",
            "act rec X/Z, same rec rel Pastro, XZPn",
            verify_recurrence,
        ),
        per_n("contiguity", "ctg rel X/Y/Z, transf S", verify_contiguity),
        verify_baxter_coefficients(n_max, params),
        verify_baxter_system(n_max, params),
        verify_construction(n_max, params),
    ]
}

pub fn verify(config: &RunConfig) -> Report {
    let mut report = Report::default();
    // the recurrence and contiguity checks reach degree n_max + 1
    match config
        .params()
        .and_then(|p| p.validate(config.n_max + 1).map(|_| p))
    {
        Ok(params) => report.checks = verify_suites(config.n_max, &params),
        Err(e) => report.push(error_check("parameters", "admissible parameters", e)),
    }
    report
}

pub fn biorth(config: &RunConfig) -> Report {
    let mut report = Report::default();
    let n_points = config.n_points;
    let inputs = (|| -> Result<(Rational, Rational)> {
        if n_points == 0 {
            return Err(Error::InvalidParams("N must be at least 1".into()));
        }
        let q = config.require(&config.q, "q")?.clone();
        let b = config.require(&config.b, "b")?.clone();
        QParams::restricted(n_points, q.clone(), b.clone())?;
        Ok((q, b))
    })();
    let (q, b) = match inputs {
        Ok(v) => v,
        Err(e) => {
            report.push(error_check("parameters", "admissible parameters", e));
            return report;
        }
    };
    let bio = verify_biorthogonality(n_points, &b, &q);
    let rep = make_grid_rep(n_points, &b, &q).ok();
    report.push(verify_weights(n_points, &b, &q));
    report.push(bio.check.clone());
    report.push(verify_adjoints(n_points, &b, &q));
    report.push(
        Check::all(
            format!("adjoint_gevp n<{n_points}"),
            "adj GEVP XY, RnPn",
            (0..n_points).map(|n| verify_adjoint_gevp(n, n_points, &b, &q)),
        )
        .with_param("N", n_points)
        .with_param("b", &b)
        .with_param("q", &q),
    );
    if let Some(w) = &bio.weights {
        report.notes.push(format!("# N={n_points} q={q} b={b}"));
        let cells: Vec<String> = w.w.iter().map(ToString::to_string).collect();
        report.notes.push(format!("w = [{}]", cells.join(", ")));
    }
    if let Some(g) = &bio.gram {
        report.notes.push("Gram =".into());
        report
            .notes
            .extend(format!("{g:?}").lines().map(|l| format!("  {l}")));
    }
    report.data = Some(json!({
        "N": n_points,
        "q": q,
        "b": b,
        "grid": bio.weights.as_ref().map(|w| &w.grid),
        "weights": bio.weights.as_ref().map(|w| &w.w),
        "h": bio.h,
        "gram": bio.gram,
        "x_star": rep.as_ref().map(|r| &r.x_star),
        "y_star": rep.as_ref().map(|r| &r.y_star),
    }));
    report
}

pub fn algebra_suite(config: &RunConfig) -> Report {
    let mut report = Report::default();
    let params = match config.params() {
        Ok(p) => p,
        Err(e) => {
            report.push(error_check("parameters", "admissible parameters", e));
            return report;
        }
    };
    let mu = config.mu.clone().unwrap_or_else(Rational::one);
    report.checks = algebra::verify_all(&params, &mu);
    if let Ok(q_hahn) = qhahn_embedding(&params, &mu) {
        let k = &q_hahn.constants;
        report.notes.push(format!("# {params} mu={mu}"));
        report
            .notes
            .push(format!("alpha1 = {}  alpha2 = {}", k.alpha1, k.alpha2));
        report.notes.push(format!(
            "gamma1 = {}  gamma2 = {}  gamma3 = {}",
            k.gamma1, k.gamma2, k.gamma3
        ));
        if let Some(c) = &q_hahn.casimir_value {
            report.notes.push(format!("Q = {c}"));
        }
        if q_hahn.degenerate {
            report.notes.push("mu = 0: the pencil reduces to X'".into());
        }
        report.data = Some(json!({
            "constants": k,
            "casimir_value": q_hahn.casimir_value,
            "degenerate": q_hahn.degenerate,
            "aw": { "beta1": "0", "beta2": "1", "delta1": "0", "delta2": "1" },
        }));
    }
    report
}

/// A rational `p/r` with `1 <= |p| <= 5`, `1 <= r <= 5`.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p = if rng.gen_bool(0.5) {
        rng.gen_range(1..=5)
    } else {
        -rng.gen_range(1..=5)
    };
    Rational::new(p, rng.gen_range(1..=5))
}

fn draw_triple(rng: &mut ChaCha8Rng) -> (Rational, Rational, Rational) {
    (
        small_rational(rng),
        small_rational(rng),
        small_rational(rng),
    )
}

/// Reason a drawn triple cannot be used, or the parameters.
pub fn screen_draw(q: Rational, a: Rational, b: Rational, n_max: usize) -> Result<QParams> {
    let params = QParams::new(q, a, b)?;
    params.validate(n_max + 1)?;
    // contiguity evaluates at b q
    params.shift_b().validate(n_max)?;
    Ok(params)
}

/// Seeded stream of parameter triples, with admissibility decided per draw.
pub fn draw_params(seed: u64, draws: usize, n_max: usize) -> Vec<(String, Result<QParams>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..draws)
        .map(|_| {
            let (q, a, b) = draw_triple(&mut rng);
            let label = format!("q={q} a={a} b={b}");
            (label, screen_draw(q, a, b, n_max))
        })
        .collect()
}

/// Up to `count` admissible points from the seeded stream, plus every
/// rejected draw with its reason. Gives up after `100 (count + 1)` draws.
pub fn admissible_points(
    seed: u64,
    count: usize,
    n_max: usize,
) -> (Vec<QParams>, Vec<(String, Error)>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    let mut attempts = 0;
    while points.len() < count && attempts < 100 * (count + 1) {
        attempts += 1;
        let (q, a, b) = draw_triple(&mut rng);
        let label = format!("q={q} a={a} b={b}");
        match screen_draw(q, a, b, n_max) {
            Ok(p) => points.push(p),
            Err(e) => skipped.push((label, e)),
        }
    }
    (points, skipped)
}

/// Runs the verify suite at `draws` seeded parameter points. Inadmissible
/// draws are listed under `skipped` and do not count towards `draws`.
pub fn sweep(config: &RunConfig) -> Report {
    let mut report = Report::default();
    let (points, skipped) = admissible_points(config.seed, config.draws, config.n_max);
    for (label, e) in &skipped {
        report.notes.push(format!("skipped {label}: {e}"));
    }
    for (i, params) in points.iter().enumerate() {
        report.notes.push(format!("point {i}: {params}"));
        report.checks.extend(
            verify_suites(config.n_max, params)
                .into_iter()
                .map(|mut c| {
                    c.name = format!("point{i}/{}", c.name);
                    c
                }),
        );
    }
    if points.len() < config.draws {
        report.push(error_check(
            "sweep",
            "admissible parameters",
            Error::InvalidParams(format!("only {} admissible draws", points.len())),
        ));
    }
    report.data = Some(json!({
        "seed": config.seed,
        "n_max": config.n_max,
        "points": points.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "skipped": skipped
            .iter()
            .map(|(label, e)| json!({ "params": label, "reason": e.to_string() }))
            .collect::<Vec<_>>(),
    }));
    report
}
