//! Series truncations against closed forms, and contour calculi on certified operator fixtures.

use num_traits::Zero;
use rand::Rng;

use crate::clifford::{Multivector, Paravector};
use crate::kernels::{kernel_closed_form, qc_inv_pow, series_kernel, series_order_for, series_q_inv_pow, KernelSpec};
use crate::opcalc::{
    functional_calculus, monomial_image, op_norm_bound, op_series_order_for, q_f_det_abs, qc_det_abs, qc_op_inv_pow,
    series_qc_op_inv_pow, CliffordMatrix, CommutingParavectorOp, Mat, ResolventKind, SliceContour,
};
use crate::scalar::{ratio, Rational};
use crate::Side;

use super::{Check, CheckFn, SuiteConfig};

/// Ratios `|x|/|s|` exercised by the series checks.
const RATIOS: [(i64, i64); 3] = [(1, 4), (1, 2), (3, 4)];
/// Target for the bound-chosen truncation order.
const TAIL_TARGET: f64 = 1e-8;
/// Quadrature tolerances.
const CAUCHY_TOL: f64 = 1e-10;
const MOMENT_TOL: f64 = 1e-9;
const INDEPENDENCE_TOL: f64 = 1e-9;
const NODES: usize = 256;

pub(crate) fn series_checks() -> Vec<CheckFn> {
    vec![Box::new(series_q), Box::new(series_kernels), Box::new(series_tail_order), Box::new(series_operator)]
}

pub(crate) fn opcalc_checks() -> Vec<CheckFn> {
    vec![
        Box::new(cauchy_identity),
        Box::new(d_cube),
        Box::new(vanishing_moments),
        Box::new(contour_independence),
        Box::new(integral_representation),
        Box::new(commuting_fixtures),
        Box::new(spectra_agree),
        Box::new(guarded_contours),
    ]
}

/// Rational unit vectors of length 2 and 3.
const UNITS: [&[(i64, i64)]; 4] = [&[(3, 5), (4, 5)], &[(5, 13), (-12, 13)], &[(2, 3), (1, 3), (-2, 3)], &[(2, 7), (-3, 7), (6, 7)]];

/// A rational paravector of norm `len` supported on random coordinates (index 0 is the real part).
fn rational_direction(rng: &mut impl Rng, n: usize, len: &Rational) -> Paravector<Rational> {
    let unit = UNITS[rng.gen_range(0..UNITS.len())];
    let mut coords = vec![Rational::zero(); n + 1];
    let mut slots: Vec<usize> = (0..=n).collect();
    for &(p, q) in unit {
        let i = slots.swap_remove(rng.gen_range(0..slots.len()));
        coords[i] = ratio(p, q) * len;
    }
    Paravector::new(coords[0].clone(), coords[1..].to_vec())
}

/// Exact point pairs `(s, x)` with `|x| = ratio |s|`.
fn series_points(cfg: &SuiteConfig, n: usize, salt: u64) -> Vec<(f64, Paravector<Rational>, Paravector<Rational>)> {
    let mut rng = cfg.rng(salt);
    let mut out = Vec::new();
    for (num, den) in RATIOS {
        for _ in 0..2 {
            let sn = ratio(rng.gen_range(1..=6), rng.gen_range(1..=3));
            let s = rational_direction(&mut rng, n, &sn);
            let x = rational_direction(&mut rng, n, &(ratio(num, den) * &sn));
            out.push((num as f64 / den as f64, s, x));
        }
    }
    out
}

/// Residual `error / bound`; at most 1 when the bound holds.
fn bound_ratio(err: f64, bound: f64) -> f64 {
    if err == 0.0 {
        0.0
    } else {
        err / bound
    }
}

fn orders(ell: u32) -> [u32; 3] {
    [2 * ell, 12, 30]
}

fn series_q(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        for (ratio, s, x) in series_points(cfg, n as usize, 31) {
            for ell in 1..=cfg.l_max {
                let exact = qc_inv_pow(&s, &x, ell);
                for k in orders(ell) {
                    let label = format!("n={n} ratio={ratio} l={ell} K={k}");
                    let res = exact.as_ref().ok().zip(series_q_inv_pow(&s, &x, ell, k).ok());
                    cases.push(match res {
                        Some((e, r)) => (bound_ratio((&r.value - e).to_f64().norm(), r.tail_bound), label),
                        None => (f64::NAN, label),
                    });
                }
            }
        }
    }
    Check::float("series_q", 1.0, cases)
}

fn series_kernels(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let points = series_points(cfg, n as usize, 32);
        for spec in KernelSpec::all(n) {
            for (ratio, s, x) in points.iter().step_by(2) {
                let exact = kernel_closed_form(&spec, s, x);
                for k in [12, 30] {
                    let label = format!("{spec:?} ratio={ratio} K={k}");
                    let res = exact.as_ref().ok().zip(series_kernel(&spec, s, x, k).ok());
                    cases.push(match res {
                        Some((e, r)) => (bound_ratio((&r.value - e).to_f64().norm(), r.tail_bound), label),
                        None => (f64::NAN, label),
                    });
                }
            }
        }
    }
    Check::float("series_kernels", 1.0, cases)
}

/// At the order picked by bound inversion the bound meets the target and the error stays under it.
/// Floating evaluation suffices here since rounding sits far below the target.
fn series_tail_order(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        for (ratio, s, x) in series_points(cfg, n as usize, 33).into_iter().step_by(2) {
            let (s, x) = (s.to_f64(), x.to_f64());
            let mut push = |label: String, value: Option<(Multivector<f64>, Multivector<f64>, f64)>| {
                cases.push(match value {
                    Some((got, want, bound)) if bound <= TAIL_TARGET => ((&got - &want).norm() / TAIL_TARGET, label),
                    _ => (f64::NAN, label),
                })
            };
            for ell in 1..=cfg.l_max {
                let r = series_order_for(None, ell, &s, &x, TAIL_TARGET)
                    .and_then(|k| series_q_inv_pow(&s, &x, ell, k))
                    .and_then(|r| Ok((r.value, qc_inv_pow(&s, &x, ell)?, r.tail_bound)));
                push(format!("n={n} ratio={ratio} l={ell}"), r.ok());
            }
            for spec in KernelSpec::all(n).into_iter().filter(|sp| sp.beta + sp.m <= 3) {
                let r = series_order_for(Some(&spec), 0, &s, &x, TAIL_TARGET)
                    .and_then(|k| series_kernel(&spec, &s, &x, k))
                    .and_then(|r| Ok((r.value, kernel_closed_form(&spec, &s, &x)?, r.tail_bound)));
                push(format!("{spec:?} ratio={ratio}"), r.ok());
            }
        }
    }
    Check::float("series_tail_order", 1.0, cases)
}

/// Operator fixtures with `‖T‖/|s| = 1/2`.
fn series_operator(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let t = diag_fixture(n as usize);
        let tau = op_norm_bound(&t);
        let mut unit = vec![0.0; n as usize];
        unit[0] = 0.6;
        unit[n as usize - 1] = 0.8;
        for s in [Paravector::real(n as usize, 2.0 * tau), Paravector::new(0.0, unit).scale(&(2.0 * tau))] {
            for ell in 1..=cfg.l_max {
                let exact = match qc_op_inv_pow(&s, &t, ell) {
                    Ok(e) => e,
                    Err(_) => {
                        cases.push((f64::NAN, format!("n={n} l={ell} closed form")));
                        continue;
                    }
                };
                let chosen = op_series_order_for(&s, &t, ell, TAIL_TARGET).unwrap_or(0);
                for k in [2 * ell, 12, chosen] {
                    let label = format!("n={n} s0={} l={ell} K={k}", s.x0);
                    cases.push(match series_qc_op_inv_pow(&s, &t, ell, k) {
                        Ok(r) if k != chosen || r.tail_bound <= TAIL_TARGET => (bound_ratio(r.value.sub(&exact).norm(), r.tail_bound), label),
                        _ => (f64::NAN, label),
                    });
                }
            }
        }
    }
    Check::float("series_operator", 1.0, cases)
}

/// Diagonal operator with three joint eigen-paravectors in `R_n`.
pub(crate) fn diag_fixture(n: usize) -> CommutingParavectorOp<f64> {
    let along = |pairs: &[(usize, f64)]| {
        let mut v = vec![0.0; n];
        for &(i, c) in pairs {
            v[i % n] += c;
        }
        v
    };
    CommutingParavectorOp::diagonal(&[
        Paravector::new(0.5, along(&[(0, 0.3), (2, -0.2), (3, 0.1)])),
        Paravector::new(-0.4, along(&[(1, 0.25), (4, 0.2)])),
        Paravector::real(n, 0.7),
    ])
    .expect("consistent fixture")
}

fn kind_of(spec: &KernelSpec) -> ResolventKind {
    match spec.side {
        Side::D => ResolventKind::D { beta: spec.beta, m: spec.m },
        Side::Dbar => ResolventKind::Dbar { beta: spec.beta, m: spec.m },
    }
}

fn s_pow(n: usize, k: usize) -> Vec<Multivector<f64>> {
    let mut f = vec![Multivector::zero(n); k + 1];
    f[k] = Multivector::one(n);
    f
}

fn circle(n: usize, r: f64) -> SliceContour {
    SliceContour::circle(SliceContour::axis(n, 1), 0.0, r, NODES).expect("valid contour")
}

fn calc_diff(kind: &ResolventKind, f: &[Multivector<f64>], t: &CommutingParavectorOp<f64>, c: &SliceContour, want: &CliffordMatrix<f64>) -> f64 {
    functional_calculus(kind, f, t, c).map_or(f64::NAN, |r| r.value.sub(want).max_abs())
}

fn cauchy_identity(cfg: &SuiteConfig) -> Check {
    Check::float(
        "cauchy_identity",
        CAUCHY_TOL,
        cfg.n.iter().flat_map(|&n| {
            let t = diag_fixture(n as usize);
            let c = circle(n as usize, 2.0);
            [0usize, 1, 3].map(|k| {
                let want = t.to_clifford().pow(k as u32);
                (calc_diff(&ResolventKind::SLeft, &s_pow(n as usize, k), &t, &c, &want), format!("n={n} f=s^{k}"))
            })
        }),
    )
}

fn d_cube(_cfg: &SuiteConfig) -> Check {
    let t = diag_fixture(5);
    let want = CliffordMatrix::identity(3, 5).scale(&16.0);
    let kind = ResolventKind::D { beta: 1, m: 1 };
    let r = functional_calculus(&kind, &s_pow(5, 3), &t, &circle(5, 2.0));
    let cases = match r {
        Ok(r) => vec![(r.value.sub(&want).max_abs(), "value".to_string()), (r.delta * CAUCHY_TOL / 1e-11, "N vs 2N".to_string())],
        Err(e) => vec![(f64::NAN, e.to_string())],
    };
    Check::float("d_cube", CAUCHY_TOL, cases)
}

fn vanishing_moments(_cfg: &SuiteConfig) -> Check {
    let t = diag_fixture(5);
    let c = circle(5, 2.0);
    let zero = CliffordMatrix::zeros(3, 5);
    let mut cases = Vec::new();
    for spec in KernelSpec::all(5) {
        for alpha in 0..(spec.beta + 2 * spec.m) as usize {
            cases.push((calc_diff(&kind_of(&spec), &s_pow(5, alpha), &t, &c, &zero), format!("{spec:?} alpha={alpha}")));
        }
    }
    for ell in 1..=3u32 {
        for nu in 0..=2 * ell - 2 {
            for g in 0..=(2 * ell - 2 - nu) as usize {
                cases.push((calc_diff(&ResolventKind::K2 { nu, ell }, &s_pow(5, g), &t, &c, &zero), format!("K2 nu={nu} l={ell} g={g}")));
            }
        }
        for nu in 0..=(2 * ell).saturating_sub(3) {
            for g in 0..=(2 * ell as i64 - 3 - nu as i64) {
                cases.push((calc_diff(&ResolventKind::K1L { nu, ell }, &s_pow(5, g as usize), &t, &c, &zero), format!("K1 nu={nu} l={ell} g={g}")));
            }
        }
    }
    Check::float("vanishing_moments", MOMENT_TOL, cases)
}

fn contour_independence(_cfg: &SuiteConfig) -> Check {
    let t = diag_fixture(5);
    let mut f = s_pow(5, 5);
    f[2] = Multivector::unit(5, 3).scale(&0.5);
    let base_c = circle(5, 2.0);
    let others = [circle(5, 3.0), base_c.with_unit(vec![0.0, 0.6, 0.0, 0.8, 0.0])];
    let mut cases = Vec::new();
    for kind in [ResolventKind::D { beta: 1, m: 1 }, ResolventKind::Dbar { beta: 2, m: 0 }, ResolventKind::F] {
        let base = match functional_calculus(&kind, &f, &t, &base_c) {
            Ok(b) => b.value,
            Err(e) => {
                cases.push((f64::NAN, format!("{kind:?}: {e}")));
                continue;
            }
        };
        let scale = base.max_abs().max(1.0);
        for (i, c) in others.iter().enumerate() {
            cases.push((calc_diff(&kind, &f, &t, c, &base) / scale, format!("{kind:?} contour {i}")));
        }
    }
    Check::float("contour_independence", INDEPENDENCE_TOL, cases)
}

fn integral_representation(_cfg: &SuiteConfig) -> Check {
    let x = Paravector::new(0.3, vec![0.2, -0.1, 0.0, 0.4, 0.1]);
    let t = CommutingParavectorOp::scalar(&x);
    let c = circle(5, 1.5);
    let mut cases = Vec::new();
    for spec in KernelSpec::all(5) {
        for kappa in 0..=8u32 {
            let want = monomial_image(&spec, kappa, &x).map(|m| CliffordMatrix { d: 1, n: 5, entries: vec![m] });
            let err = want.map_or(f64::NAN, |w| calc_diff(&kind_of(&spec), &s_pow(5, kappa as usize), &t, &c, &w));
            cases.push((err, format!("{spec:?} kappa={kappa}")));
        }
    }
    Check::float("integral_representation", CAUCHY_TOL, cases)
}

fn commuting_fixtures(cfg: &SuiteConfig) -> Check {
    let v = Mat::from_rows(vec![vec![1.0, 1.0], vec![0.0, 1.0]]).expect("square");
    let vi = Mat::from_rows(vec![vec![1.0, -1.0], vec![0.0, 1.0]]).expect("square");
    let mut cases: Vec<(bool, String)> = cfg.n.iter().map(|&n| (diag_fixture(n as usize).validate_commuting(), format!("diagonal n={n}"))).collect();
    let conj = CommutingParavectorOp::conjugated(&[Paravector::new(0.2, vec![0.5, 0.0, 0.0]), Paravector::real(3, -0.3)], &v, &vi);
    cases.push((conj.is_ok_and(|t| t.validate_commuting()), "conjugated".into()));
    let a = Mat::from_rows(vec![vec![0.0, 1.0], vec![0.0, 0.0]]).expect("square");
    let b = Mat::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0]]).expect("square");
    let bad = CommutingParavectorOp::new(vec![Mat::identity(2), a, b], None);
    cases.push((bad.is_ok_and(|t| !t.validate_commuting()), "non-commuting rejected".into()));
    Check::exact("commuting_fixtures", cases)
}

/// `σ_S` and `σ_F` share their slices on a diagonal fixture.
fn spectra_agree(_cfg: &SuiteConfig) -> Check {
    let t = CommutingParavectorOp::diagonal(&[Paravector::new(1.0, vec![2.0, 0.0]), Paravector::real(2, 3.0)]).expect("fixture");
    let mut cases = Vec::new();
    for (u, v) in [(1.0, 2.0), (3.0, 0.0)] {
        for unit in [[1.0, 0.0], [0.6, 0.8]] {
            let s = Paravector::new(u, unit.iter().map(|c| c * v).collect());
            let (a, b) = (qc_det_abs(&s, &t).unwrap_or(f64::NAN), q_f_det_abs(&s, &t).unwrap_or(f64::NAN));
            cases.push((a.max(b), format!("on slice ({u}, {v}) unit {unit:?}")));
        }
    }
    let off = Paravector::new(2.0, vec![0.5, 0.0]);
    let off_det = qc_det_abs(&off, &t).unwrap_or(0.0).min(q_f_det_abs(&off, &t).unwrap_or(0.0));
    cases.push((if off_det > 1e-2 { 0.0 } else { f64::INFINITY }, "off spectrum".into()));
    Check::float("spectra_agree", 1e-12, cases)
}

fn guarded_contours(_cfg: &SuiteConfig) -> Check {
    let t = diag_fixture(5);
    let one = s_pow(5, 0);
    let small = functional_calculus(&ResolventKind::SLeft, &one, &t, &circle(5, 0.5));
    let mut uncertified = t.clone();
    uncertified.certificate = None;
    let crossing = functional_calculus(&ResolventKind::SLeft, &one, &uncertified, &circle(5, 0.7));
    Check::exact(
        "guarded_contours",
        [(small.is_err(), "contour inside the spectrum".to_string()), (crossing.is_err(), "contour through the spectrum".to_string())],
    )
}
