//! Acceptance criteria, one PASS/FAIL line each; exits non-zero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use finespec::kernels::{kernel_closed_form_symbolic, kernel_oracle, KernelSpec};
use finespec::opcalc::{functional_calculus, monomial_image, CliffordMatrix, CommutingParavectorOp, ResolventKind, SliceContour};
use finespec::scalar::{rat, ratio};
use finespec::special::aux_limit_constant;
use finespec::verify::{run_suite, Report, Suite, SuiteConfig};
use finespec::{Multivector, Paravector, Rational, Side};

const CLOSED_FORM_BUDGET: Duration = Duration::from_secs(120);
const QUADRATURE_BUDGET: Duration = Duration::from_secs(60);
const CAUCHY_TOL: f64 = 1e-10;
const MOMENT_TOL: f64 = 1e-9;
const INDEPENDENCE_TOL: f64 = 1e-9;
const CONVERGENCE_TOL: f64 = 1e-11;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn s_fixtures(n: usize) -> Vec<Paravector<Rational>> {
    vec![
        Paravector::real(n, rat(3)),
        Paravector::along(n, rat(2), 1, rat(1)),
        Paravector::new(ratio(1, 2), (0..n).map(|i| ratio(i as i64 % 3 - 1, 3)).collect()),
    ]
}

fn closed_form_vs_oracle() -> Outcome {
    let start = Instant::now();
    let (mut cases, mut first_bad) = (0, None);
    for n in [3u32, 5, 7] {
        for s in s_fixtures(n as usize) {
            for spec in KernelSpec::all(n) {
                cases += 1;
                let ok = kernel_closed_form_symbolic(&spec, &s).is_ok_and(|c| c.equal_rational(&kernel_oracle(&spec, &s)));
                if !ok && first_bad.is_none() {
                    first_bad = Some(format!("{spec:?} s={s:?}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    match first_bad {
        Some(b) => outcome(false, format!("mismatch at {b}")),
        None if elapsed > CLOSED_FORM_BUDGET => outcome(false, format!("{cases} exact matches but took {elapsed:.1?}")),
        None => outcome(true, format!("{cases} exact rational-function matches in {elapsed:.1?}")),
    }
}

fn suite(suite: Suite, n: Vec<u32>, k_max: u32) -> Report {
    let mut cfg = SuiteConfig::new(suite);
    cfg.n = n;
    cfg.k_max = k_max;
    run_suite(&cfg).expect("valid suite config")
}

fn checks_pass(report: &Report, names: &[&str]) -> Outcome {
    let mut lines = Vec::new();
    let mut passed = true;
    for name in names {
        match report.get(name) {
            Some(c) => {
                passed &= c.passed;
                if !c.passed {
                    lines.push(c.to_string());
                }
            }
            None => {
                passed = false;
                lines.push(format!("{name}: missing"));
            }
        }
    }
    if passed {
        outcome(true, format!("{} checks: {}", names.len(), names.join(", ")))
    } else {
        outcome(false, lines.join("; "))
    }
}

fn identity_grids() -> Outcome {
    let report = suite(Suite::Identities, vec![3, 5, 7], 20);
    checks_pass(&report, &["summ", "hrecorsive", "rell1", "pos_pow", "jac1", "coeff1_ab", "coeff1_c", "coeff1_def", "stifel"])
}

fn monomial_images() -> Outcome {
    let report = suite(Suite::Kernels, vec![5, 7], 10);
    checks_pass(&report, &["harm", "app3", "monomial_images"])
}

fn series() -> Outcome {
    let report = suite(Suite::Series, vec![3, 5, 7], 20);
    checks_pass(&report, &["series_q", "series_kernels", "series_tail_order", "series_operator"])
}

fn fueter_sce_and_axiality() -> Outcome {
    let report = suite(Suite::Oracle, vec![3, 5, 7], 20);
    checks_pass(&report, &["fueter_sce", "axiality"])
}

fn diag5() -> CommutingParavectorOp<f64> {
    CommutingParavectorOp::diagonal(&[
        Paravector::new(0.5, vec![0.3, 0.0, -0.2, 0.1, 0.0]),
        Paravector::new(-0.4, vec![0.0, 0.25, 0.0, 0.0, 0.2]),
        Paravector::real(5, 0.7),
    ])
    .expect("fixture")
}

fn s_pow(n: usize, k: usize) -> Vec<Multivector<f64>> {
    let mut f = vec![Multivector::zero(n); k + 1];
    f[k] = Multivector::one(n);
    f
}

fn circle(n: usize, r: f64) -> SliceContour {
    SliceContour::circle(SliceContour::axis(n, 1), 0.0, r, 256).expect("contour")
}

fn kind_of(spec: &KernelSpec) -> ResolventKind {
    match spec.side {
        Side::D => ResolventKind::D { beta: spec.beta, m: spec.m },
        Side::Dbar => ResolventKind::Dbar { beta: spec.beta, m: spec.m },
    }
}

fn quadrature() -> Outcome {
    let start = Instant::now();
    let t = diag5();
    let c = circle(5, 2.0);
    let mut worst = [0.0f64; 5];
    let mut errors = Vec::new();
    let mut record = |slot: usize, r: finespec::Result<f64>, label: String| match r {
        Ok(e) if e.is_nan() => errors.push(format!("{label}: NaN residual")),
        Ok(e) => worst[slot] = worst[slot].max(e),
        Err(err) => errors.push(format!("{label}: {err}")),
    };
    let calc = |kind: &ResolventKind, f: &[Multivector<f64>], c: &SliceContour| functional_calculus(kind, f, &t, c);

    record(0, calc(&ResolventKind::SLeft, &s_pow(5, 0), &c).map(|r| r.value.sub(&CliffordMatrix::identity(3, 5)).max_abs()), "(a)".into());

    let d_cube = calc(&ResolventKind::D { beta: 1, m: 1 }, &s_pow(5, 3), &c);
    let mut delta = 0.0;
    record(
        1,
        d_cube.map(|r| {
            delta = r.delta;
            r.value.sub(&CliffordMatrix::identity(3, 5).scale(&16.0)).max_abs()
        }),
        "(b)".into(),
    );

    let zero = CliffordMatrix::zeros(3, 5);
    for spec in KernelSpec::all(5) {
        for alpha in 0..(spec.beta + 2 * spec.m) as usize {
            record(2, calc(&kind_of(&spec), &s_pow(5, alpha), &c).map(|r| r.value.sub(&zero).max_abs()), format!("(c) {spec:?}"));
        }
    }
    for ell in 1..=3u32 {
        for nu in 0..=2 * ell - 2 {
            for g in 0..=(2 * ell - 2 - nu) as usize {
                record(2, calc(&ResolventKind::K2 { nu, ell }, &s_pow(5, g), &c).map(|r| r.value.max_abs()), format!("(c) K2 {nu} {ell}"));
            }
        }
    }

    let mut f = s_pow(5, 5);
    f[2] = Multivector::unit(5, 3).scale(&0.5);
    for kind in [ResolventKind::D { beta: 1, m: 1 }, ResolventKind::Dbar { beta: 2, m: 0 }, ResolventKind::F] {
        match calc(&kind, &f, &c) {
            Ok(base) => {
                let scale = base.value.max_abs().max(1.0);
                for other in [circle(5, 3.0), c.with_unit(vec![0.0, 0.6, 0.0, 0.8, 0.0])] {
                    record(3, calc(&kind, &f, &other).map(|r| r.value.sub(&base.value).max_abs() / scale), format!("(d) {kind:?}"));
                }
            }
            Err(e) => record(3, Err(e), format!("(d) {kind:?} base contour")),
        }
    }

    let x = Paravector::new(0.3, vec![0.2, -0.1, 0.0, 0.4, 0.1]);
    let one = CommutingParavectorOp::scalar(&x);
    for spec in KernelSpec::all(5) {
        for kappa in 0..=8u32 {
            let r = functional_calculus(&kind_of(&spec), &s_pow(5, kappa as usize), &one, &circle(5, 1.5))
                .and_then(|r| Ok((&r.value.entries[0] - &monomial_image(&spec, kappa, &x)?).max_abs()));
            record(4, r, format!("(e) {spec:?} kappa={kappa}"));
        }
    }

    let tols = [CAUCHY_TOL, CAUCHY_TOL, MOMENT_TOL, INDEPENDENCE_TOL, CAUCHY_TOL];
    let elapsed = start.elapsed();
    let within = worst.iter().zip(tols).all(|(w, t)| *w <= t);
    let passed = errors.is_empty() && within && delta < CONVERGENCE_TOL && elapsed <= QUADRATURE_BUDGET;
    let summary = format!(
        "worst (a) {:.1e} (b) {:.1e} delta {:.1e} (c) {:.1e} (d) {:.1e} (e) {:.1e} in {elapsed:.1?}",
        worst[0], worst[1], delta, worst[2], worst[3], worst[4]
    );
    if errors.is_empty() {
        outcome(passed, summary)
    } else {
        outcome(false, format!("{summary}; {}", errors.join("; ")))
    }
}

fn sign_constants() -> Outcome {
    let mut cases = 0;
    for n in [5u32, 7, 9] {
        for spec in KernelSpec::all(n) {
            cases += 1;
            let c = match aux_limit_constant(spec.beta, spec.m, spec.h(), spec.side) {
                Ok(c) => c,
                Err(e) => return outcome(false, format!("{spec:?}: {e}")),
            };
            let ok = match spec.side {
                Side::D => c < rat(0),
                Side::Dbar => c > rat(0),
            };
            if !ok {
                return outcome(false, format!("{spec:?}: constant {c} has the wrong sign"));
            }
        }
    }
    outcome(true, format!("{cases} constants with the expected sign"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("closed forms equal the symbolic oracle", closed_form_vs_oracle),
        ("identity grids", identity_grids),
        ("monomial images", monomial_images),
        ("series within tail bounds", series),
        ("quadrature calculi", quadrature),
        ("Fueter-Sce nullity and axiality", fueter_sce_and_axiality),
        ("sign constants", sign_constants),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.passed;
        println!("criterion {} ({name}): {} - {}", i + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
