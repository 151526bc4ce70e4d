use finespec::kernels::{kernel_closed_form, KernelSpec};
use finespec::opcalc::{
    functional_calculus, monomial_image, monomial_image_op, q_f_det_abs, qc_det_abs, resolvent, CliffordMatrix,
    CommutingParavectorOp, Mat, ResolventKind, SliceContour,
};
use finespec::scalar::{rat, ratio};
use finespec::{Error, Multivector, Paravector, Side};

fn diag5() -> CommutingParavectorOp<f64> {
    CommutingParavectorOp::diagonal(&[
        Paravector::new(0.5, vec![0.3, 0.0, -0.2, 0.1, 0.0]),
        Paravector::new(-0.4, vec![0.0, 0.25, 0.0, 0.0, 0.2]),
        Paravector::real(5, 0.7),
    ])
    .unwrap()
}

fn s_pow(n: usize, k: usize) -> Vec<Multivector<f64>> {
    let mut f = vec![Multivector::zero(n); k + 1];
    f[k] = Multivector::one(n);
    f
}

fn max_diff(a: &CliffordMatrix<f64>, b: &CliffordMatrix<f64>) -> f64 {
    a.sub(b).max_abs()
}

fn circle(n: usize, r: f64) -> SliceContour {
    SliceContour::circle(SliceContour::axis(n, 1), 0.0, r, 256).unwrap()
}

#[test]
fn cauchy_reproduces_polynomials() {
    let t = diag5();
    let c = circle(5, 2.0);
    let one = functional_calculus(&ResolventKind::SLeft, &s_pow(5, 0), &t, &c).unwrap();
    assert!(max_diff(&one.value, &CliffordMatrix::identity(3, 5)) < 1e-10);
    let cube = functional_calculus(&ResolventKind::SLeft, &s_pow(5, 3), &t, &c).unwrap();
    let tc = t.to_clifford();
    assert!(max_diff(&cube.value, &tc.pow(3)) < 1e-10);
}

#[test]
fn d_calculus_of_cube() {
    let t = diag5();
    let r = functional_calculus(&ResolventKind::D { beta: 1, m: 1 }, &s_pow(5, 3), &t, &circle(5, 2.0)).unwrap();
    assert!(max_diff(&r.value, &CliffordMatrix::identity(3, 5).scale(&16.0)) < 1e-10);
    assert!(r.delta < 1e-11);
}

#[test]
fn vanishing_moments() {
    let t = diag5();
    let c = circle(5, 2.0);
    let zero = CliffordMatrix::zeros(3, 5);
    for spec in KernelSpec::all(5) {
        let kind = match spec.side {
            Side::D => ResolventKind::D { beta: spec.beta, m: spec.m },
            Side::Dbar => ResolventKind::Dbar { beta: spec.beta, m: spec.m },
        };
        for alpha in 0..(spec.beta + 2 * spec.m) as usize {
            let r = functional_calculus(&kind, &s_pow(5, alpha), &t, &c).unwrap();
            assert!(max_diff(&r.value, &zero) < 1e-9, "{spec:?} alpha={alpha}");
        }
    }
    for ell in 1..=3u32 {
        for nu in 0..=2 * ell - 2 {
            for g in 0..=(2 * ell - 2 - nu) as usize {
                let r = functional_calculus(&ResolventKind::K2 { nu, ell }, &s_pow(5, g), &t, &c).unwrap();
                assert!(max_diff(&r.value, &zero) < 1e-9, "K2 nu={nu} ell={ell} g={g}");
            }
        }
        for nu in 0..=(2 * ell).saturating_sub(3) {
            for g in 0..=(2 * ell as i64 - 3 - nu as i64) {
                let r = functional_calculus(&ResolventKind::K1L { nu, ell }, &s_pow(5, g as usize), &t, &c).unwrap();
                assert!(max_diff(&r.value, &zero) < 1e-9, "K1 nu={nu} ell={ell} g={g}");
            }
        }
    }
}

#[test]
fn contour_independence() {
    let t = diag5();
    let mut f = s_pow(5, 5);
    f[2] = Multivector::unit(5, 3).scale(&0.5);
    for kind in [ResolventKind::D { beta: 1, m: 1 }, ResolventKind::Dbar { beta: 2, m: 0 }, ResolventKind::F] {
        let base = functional_calculus(&kind, &f, &t, &circle(5, 2.0)).unwrap().value;
        let wide = functional_calculus(&kind, &f, &t, &circle(5, 3.0)).unwrap().value;
        let tilted = [0.0, 0.6, 0.0, 0.8, 0.0].to_vec();
        let other = functional_calculus(&kind, &f, &t, &circle(5, 2.0).with_unit(tilted)).unwrap().value;
        let scale = base.max_abs().max(1.0);
        assert!(max_diff(&base, &wide) <= 1e-9 * scale, "{kind:?}");
        assert!(max_diff(&base, &other) <= 1e-9 * scale, "{kind:?}");
    }
}

#[test]
fn integral_representation_matches_monomial_image() {
    let x = Paravector::new(0.3, vec![0.2, -0.1, 0.0, 0.4, 0.1]);
    let t = CommutingParavectorOp::scalar(&x);
    for spec in KernelSpec::all(5) {
        let kind = match spec.side {
            Side::D => ResolventKind::D { beta: spec.beta, m: spec.m },
            Side::Dbar => ResolventKind::Dbar { beta: spec.beta, m: spec.m },
        };
        for kappa in 0..=8u32 {
            let r = functional_calculus(&kind, &s_pow(5, kappa as usize), &t, &circle(5, 1.5)).unwrap();
            let want = monomial_image(&spec, kappa, &x).unwrap();
            assert!((&r.value.entries[0] - &want).max_abs() < 1e-10, "{spec:?} kappa={kappa}");
        }
    }
}

#[test]
fn operator_monomial_image_on_diagonal() {
    let eigs = [Paravector::new(rat(1), vec![rat(2), rat(0), rat(-1)]), Paravector::new(ratio(1, 2), vec![rat(0), rat(1), rat(0)])];
    let t = CommutingParavectorOp::diagonal(&eigs).unwrap();
    for spec in KernelSpec::all(3) {
        for kappa in 0..6 {
            let op = monomial_image_op(&spec, kappa, &t).unwrap();
            for (j, e) in eigs.iter().enumerate() {
                assert_eq!(op.get(j, j), &monomial_image(&spec, kappa, e).unwrap());
            }
        }
    }
}

#[test]
fn scalar_operator_matches_kernels() {
    let x = Paravector::new(ratio(1, 3), vec![rat(1), rat(0), ratio(-1, 2), rat(0), rat(2)]);
    let s = Paravector::new(rat(2), vec![rat(0), rat(1), rat(0), rat(0), rat(0)]);
    let t = CommutingParavectorOp::scalar(&x);
    for spec in KernelSpec::all(5) {
        let kind = match spec.side {
            Side::D => ResolventKind::D { beta: spec.beta, m: spec.m },
            Side::Dbar => ResolventKind::Dbar { beta: spec.beta, m: spec.m },
        };
        assert_eq!(resolvent(&kind, &s, &t).unwrap().entries[0], kernel_closed_form(&spec, &s, &x).unwrap());
    }
}

#[test]
fn s_and_f_spectra_agree() {
    let t = CommutingParavectorOp::diagonal(&[Paravector::new(1.0, vec![2.0, 0.0]), Paravector::real(2, 3.0)]).unwrap();
    for (u, v) in [(1.0, 2.0), (3.0, 0.0)] {
        for unit in [[1.0, 0.0], [0.6, 0.8]] {
            let s = Paravector::new(u, unit.iter().map(|c| c * v).collect());
            assert!(qc_det_abs(&s, &t).unwrap() < 1e-12);
            assert!(q_f_det_abs(&s, &t).unwrap() < 1e-12);
        }
    }
    let off = Paravector::new(2.0, vec![0.5, 0.0]);
    assert!(qc_det_abs(&off, &t).unwrap() > 1e-2);
    assert!(q_f_det_abs(&off, &t).unwrap() > 1e-2);
}

#[test]
fn guarded_failures() {
    let t = diag5();
    let small = circle(5, 0.5);
    assert!(matches!(
        functional_calculus(&ResolventKind::SLeft, &s_pow(5, 0), &t, &small),
        Err(Error::ContourMissesSpectrum { .. })
    ));
    let mut uncertified = t.clone();
    uncertified.certificate = None;
    assert!(matches!(
        functional_calculus(&ResolventKind::SLeft, &s_pow(5, 0), &uncertified, &circle(5, 0.7)),
        Err(Error::ContourIntersectsSpectrum { .. })
    ));
    let coarse = SliceContour::circle(SliceContour::axis(5, 1), 0.0, 0.75, 8).unwrap();
    let t = uncertified;
    assert!(matches!(
        functional_calculus(&ResolventKind::SLeft, &s_pow(5, 0), &t, &coarse),
        Err(Error::NonConvergent { .. })
    ));
}

#[test]
fn conjugated_fixture_commutes() {
    let v = Mat::from_rows(vec![vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
    let vi = Mat::from_rows(vec![vec![1.0, -1.0], vec![0.0, 1.0]]).unwrap();
    let t = CommutingParavectorOp::conjugated(&[Paravector::new(0.2, vec![0.5, 0.0, 0.0]), Paravector::real(3, -0.3)], &v, &vi).unwrap();
    assert!(t.validate_commuting());
    let r = functional_calculus(&ResolventKind::SLeft, &s_pow(3, 2), &t, &circle(3, 1.5)).unwrap();
    assert!(max_diff(&r.value, &t.to_clifford().pow(2)) < 1e-10);
}
