//! Acceptance gate. Runs without the libtest harness so that each criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use pastro::algebra::{
    affine_generators, casimir, casimir_centrality_with, qhahn_relations, raw_relations,
    standardized_relations, structure_constants, verify_all, AlgebraConstants, CasimirCoefficients,
    RawCoefficients,
};
use pastro::biorth::{verify_adjoint_gevp, verify_adjoints, verify_biorthogonality};
use pastro::cli::admissible_points;
use pastro::pastro::{three_term_recurrence, verify_baxter_system, verify_weights};
use pastro::qdiff::{
    verify_contiguity, verify_gevp, verify_qdiff_equation, verify_recurrence, QDiffOperator,
};
use pastro::{rat, Check, QParams, Rational};

const SEED: u64 = 20240611;

/// First failure, if any.
type Verdict = Result<usize, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn tally(checks: impl IntoIterator<Item = Check>) -> Verdict {
    let mut count = 0;
    for c in checks {
        if !c.passed() {
            return Err(c.to_string());
        }
        count += 1;
    }
    Ok(count)
}

fn points(n_max: usize) -> Vec<QParams> {
    let (points, _) = admissible_points(SEED, 10, n_max);
    assert_eq!(points.len(), 10, "not enough admissible draws");
    points
}

/// Five `b` values per `q`, all with `(b;q)_(N-1) != 0` for `N <= 8`.
fn grid_cases() -> Vec<(Rational, Rational)> {
    let bs = [rat(1, 5), rat(-2, 5), rat(3, 1), rat(-7, 3), rat(5, 4)];
    [rat(1, 2), rat(-3, 5)]
        .into_iter()
        .flat_map(|q| bs.iter().map(move |b| (q.clone(), b.clone())))
        .collect()
}

fn criterion_1() -> Verdict {
    tally(
        points(12)
            .iter()
            .flat_map(|p| (0..=12).map(move |n| verify_gevp(n, p))),
    )
}

fn criterion_2() -> Verdict {
    let mut n_checks = 0;
    for p in points(12) {
        for n in 0..=12 {
            n_checks += tally([verify_qdiff_equation(n, &p), verify_recurrence(n, &p)])?;
            match three_term_recurrence(n, &p) {
                Ok(Ok(())) => n_checks += 1,
                Ok(Err(w)) => return Err(format!("three-term recurrence n={n} {p}: {w}")),
                Err(e) => return Err(format!("three-term recurrence n={n} {p}: {e}")),
            }
        }
    }
    Ok(n_checks)
}

fn criterion_3() -> Verdict {
    tally(
        points(10)
            .iter()
            .flat_map(|p| (0..=10).map(move |n| verify_contiguity(n, p))),
    )
}

fn criterion_4() -> Verdict {
    let mut n_checks = 0;
    for (q, b) in grid_cases() {
        for n_points in 1..=8 {
            n_checks += tally([
                verify_weights(n_points, &b, &q),
                verify_biorthogonality(n_points, &b, &q).check,
            ])?;
        }
    }
    Ok(n_checks)
}

fn criterion_5() -> Verdict {
    let baxter = tally(points(10).iter().map(|p| verify_baxter_system(10, p)))?;
    let grid = tally(grid_cases().into_iter().flat_map(|(q, b)| {
        (1..=8).flat_map(move |n_points| {
            let (q, b) = (q.clone(), b.clone());
            (0..n_points).map(move |n| verify_adjoint_gevp(n, n_points, &b, &q))
        })
    }))?;
    Ok(baxter + grid)
}

fn criterion_6() -> Verdict {
    tally(grid_cases().into_iter().flat_map(|(q, b)| {
        (1..=8).flat_map(move |n_points| {
            let (q, b) = (q.clone(), b.clone());
            std::iter::once(verify_adjoints(n_points, &b, &q))
                .chain((0..n_points).map(move |n| verify_adjoint_gevp(n, n_points, &b, &q)))
        })
    }))
}

/// Every single-coefficient corruption must break at least one relation.
fn mutations(p: &QParams) -> Result<usize, String> {
    let bump = rat(1, 3);
    let mut caught = 0;
    let mut expect_fail = |what: &str, failed: bool| {
        if failed {
            caught += 1;
            Ok(())
        } else {
            Err(format!("mutation not detected: {what} at {p}"))
        }
    };

    let raw = RawCoefficients::new(p);
    let fields: [fn(&mut RawCoefficients) -> &mut Rational; 8] = [
        |c| &mut c.xy_x,
        |c| &mut c.xy_y,
        |c| &mut c.yz_x,
        |c| &mut c.yz_y,
        |c| &mut c.yz_z,
        |c| &mut c.yz_const,
        |c| &mut c.zx_x,
        |c| &mut c.zx_z,
    ];
    for (i, field) in fields.iter().enumerate() {
        let mut c = raw.clone();
        let v = field(&mut c);
        *v = &*v + &bump;
        let failed = raw_relations(p, &c).iter().any(|r| r.outcome().is_err());
        expect_fail(&format!("raw coefficient {i}"), failed)?;
    }

    let gens = affine_generators(p).map_err(|e| e.to_string())?;
    let (alpha1, alpha2) = structure_constants(p);
    for (i, (a1, a2)) in [
        (&alpha1 + &bump, alpha2.clone()),
        (alpha1.clone(), &alpha2 + &bump),
    ]
    .iter()
    .enumerate()
    {
        let failed = standardized_relations(&gens, a1, a2)
            .iter()
            .any(|r| r.outcome().is_err());
        expect_fail(&format!("alpha_{}", i + 1), failed)?;
    }

    let cas = CasimirCoefficients::new(p);
    let cas_fields: [fn(&mut CasimirCoefficients) -> &mut Rational; 5] = [
        |c| &mut c.xyz,
        |c| &mut c.xx,
        |c| &mut c.x,
        |c| &mut c.y,
        |c| &mut c.z,
    ];
    for (i, field) in cas_fields.iter().enumerate() {
        let mut c = cas.clone();
        let v = field(&mut c);
        *v = &*v + &bump;
        let failed = casimir_centrality_with(p, &c).iter().any(|c| !c.passed());
        expect_fail(&format!("Casimir coefficient {i}"), failed)?;
    }

    let q_cas = casimir(&gens, &cas);
    let k = AlgebraConstants::new(p, &rat(2, 3), &q_cas);
    let corrupt: [fn(&mut AlgebraConstants, &Rational); 4] = [
        |k, d| k.gamma1 = &k.gamma1 + d,
        |k, d| k.gamma2 = &k.gamma2 + d,
        |k, d| k.gamma3 = &k.gamma3 + d,
        |k, d| k.gamma4 = &k.gamma4 + &QDiffOperator::scalar(k.gamma4.q(), d.clone()),
    ];
    for (i, f) in corrupt.iter().enumerate() {
        let mut bad = k.clone();
        f(&mut bad, &bump);
        let (_, _, rels) = qhahn_relations(&gens, &bad);
        expect_fail(
            &format!("gamma_{}", i + 1),
            rels.iter().any(|r| r.outcome().is_err()),
        )?;
    }
    Ok(caught)
}

fn criterion_7() -> Verdict {
    let mus = [rat(0, 1), rat(2, 3), rat(-5, 2)];
    let pts = points(12);
    let mut n_checks = 0;
    for p in &pts {
        for mu in &mus {
            n_checks += tally(verify_all(p, mu))?;
        }
    }
    for p in &pts[..3] {
        n_checks += mutations(p)?;
    }
    Ok(n_checks)
}

fn criterion_8() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_pastro");
    let invocations: [&[&str]; 7] = [
        &[
            "verify", "--q", "1/2", "--a", "3", "--b", "1/5", "--nmax", "8",
        ],
        &[
            "verify", "--q", "1/2", "--a", "3", "--b", "1/5", "--nmax", "8", "--format", "json",
        ],
        &[
            "table", "--q", "-3/4", "--a", "2/5", "--b", "-7/3", "--nmax", "6", "--format", "json",
        ],
        &[
            "biorth", "--q", "1/2", "--b", "1/5", "--N", "6", "--format", "json",
        ],
        &[
            "algebra", "--q", "1/2", "--a", "3", "--b", "1/5", "--mu", "2/3", "--format", "json",
        ],
        &["sweep", "--seed", "7", "--nmax", "5", "--format", "json"],
        &[
            "verify", "--q", "1", "--a", "3", "--b", "1/5", "--format", "json",
        ],
    ];
    for args in invocations {
        let run = || Command::new(bin).args(args).output().expect("binary runs");
        let (first, second) = (run(), run());
        if first.stdout.is_empty() || first.stdout != second.stdout || first.status != second.status
        {
            return Err(format!(
                "output differs between runs: pastro {}",
                args.join(" ")
            ));
        }
    }
    Ok(invocations.len())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "GEVP Y P_n = lambda_n X P_n, n<=12, 10 seeded points",
            criterion_1,
        ),
        (
            "q-difference equation, recurrence, x Z P_n = X P_n, n<=12",
            criterion_2,
        ),
        ("contiguity in b, n<=10", criterion_3),
        (
            "Gram = diag(h), sum w = 1, simple zeros of P_N, N<=8",
            criterion_4,
        ),
        (
            "Baxter Q_n(1/x) = R_n, n<=10; X* P*_n proportional to R_n, N<=8",
            criterion_5,
        ),
        ("adjoints, tau relations, adjoint GEVP, N<=8", criterion_6),
        (
            "algebra relations, Casimir, q-Hahn embedding, mutations",
            criterion_7,
        ),
        ("byte-identical CLI reports", criterion_8),
    ];
    let mut all = true;
    for (i, (what, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(n) => println!("criterion {}: PASS {what} ({n} checks, {secs:.2}s)", i + 1),
            Err(w) => {
                all = false;
                println!("criterion {}: FAIL {what}: {w}", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
