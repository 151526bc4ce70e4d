//! Checks against the symbolic oracle: closed forms, operator relations, monomial images, constants.

use num_traits::Zero;

use crate::clifford::Paravector;
use crate::kernels::{fit_bbar0, fueter_sce_kernel, kernel_closed_form, kernel_closed_form_symbolic, kernel_oracle, monomial_image_x, KernelSpec};
use crate::oracle::{
    axial_poly_fn, axiality_check, build_cauchy_kernel_symbolic, coordinate_fn, inv_norm_pow_fn, monomial_fn, xbar_fn,
    CliffordRationalFn, Letter, OperatorWord, SymbolicQ,
};
use crate::scalar::{rat, ratio, Rational};
use crate::special::binom::factorial_r;
use crate::special::{aux_limit_constant, bbar0_table, gamma, h_poly, p_poly, sigma};
use crate::Side;

use super::{random_paravector, Check, CheckFn, SuiteConfig};

pub(crate) fn oracle_checks() -> Vec<CheckFn> {
    vec![
        Box::new(closed_forms),
        Box::new(cauchy_forms),
        Box::new(word_examples),
        Box::new(factorization),
        Box::new(fueter_sce),
        Box::new(relations),
        Box::new(laplacian_powers),
        Box::new(pos_pow_symbolic),
        Box::new(axiality),
    ]
}

pub(crate) fn kernel_checks() -> Vec<CheckFn> {
    vec![
        Box::new(harm),
        Box::new(app3),
        Box::new(monomial_images),
        Box::new(pointwise),
        Box::new(aux_signs),
        Box::new(aux_restriction),
        Box::new(bbar0),
    ]
}

/// Three rational `s` fixtures in dimension `n`.
pub(crate) fn s_fixtures(n: usize) -> Vec<Paravector<Rational>> {
    vec![
        Paravector::real(n, rat(3)),
        Paravector::along(n, rat(2), 1, rat(1)),
        Paravector::new(ratio(1, 2), (0..n).map(|i| ratio(i as i64 % 3 - 1, 3)).collect()),
    ]
}

fn h_of(n: u32) -> u32 {
    (n - 1) / 2
}

fn closed_forms(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        for s in s_fixtures(n as usize) {
            for spec in KernelSpec::all(n) {
                let ok = kernel_closed_form_symbolic(&spec, &s).is_ok_and(|c| c.equal_rational(&kernel_oracle(&spec, &s)));
                cases.push((ok, format!("{spec:?} s={s:?}")));
            }
        }
    }
    Check::exact("closed_forms", cases)
}

fn cauchy_forms(cfg: &SuiteConfig) -> Check {
    Check::exact(
        "cauchy_forms",
        cfg.n.iter().flat_map(|&n| s_fixtures(n as usize)).map(|s| {
            let q = SymbolicQ::new(&s);
            (q.cauchy().equal_rational(&q.cauchy_form_one()), format!("s={s:?}"))
        }),
    )
}

/// `D x = 1 - n`, `D x̄ = 1 + n`.
fn word_examples(cfg: &SuiteConfig) -> Check {
    let d = OperatorWord(vec![Letter::D]);
    Check::exact(
        "word_examples",
        cfg.n.iter().flat_map(|&n| {
            let nn = n as usize;
            let one = |v: i64| CliffordRationalFn::constant(&crate::Multivector::scalar(nn, rat(v)));
            [
                (monomial_fn(nn, 1).apply_word(&d).equal_rational(&one(1 - n as i64)), format!("D x, n={n}")),
                (xbar_fn(nn).apply_word(&d).equal_rational(&one(1 + n as i64)), format!("D xbar, n={n}")),
            ]
        }),
    )
}

fn factorization(cfg: &SuiteConfig) -> Check {
    let words = [OperatorWord(vec![Letter::D, Letter::Dbar]), OperatorWord(vec![Letter::Dbar, Letter::D])];
    let lap = OperatorWord(vec![Letter::Lap]);
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let nn = n as usize;
        let mut fixtures = vec![("x^3".to_string(), monomial_fn(nn, 3))];
        fixtures.extend(s_fixtures(nn).into_iter().map(|s| (format!("cauchy s={s:?}"), build_cauchy_kernel_symbolic(&s))));
        for (label, f) in fixtures {
            let want = f.apply_word(&lap);
            for w in &words {
                cases.push((f.apply_word(w).equal_rational(&want), format!("n={n} {label} {w:?}")));
            }
        }
    }
    Check::exact("factorization", cases)
}

fn fueter_sce(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let h = h_of(n) as usize;
        let mut rng = cfg.rng(23);
        let x = random_paravector(&mut rng, n as usize);
        for s in s_fixtures(n as usize) {
            let lap = build_cauchy_kernel_symbolic(&s).apply_dirac_laplace(0, h, Side::D);
            cases.push((lap.apply_word(&OperatorWord(vec![Letter::D])).is_zero(), format!("nullity n={n} s={s:?}")));
            let pointwise = match (lap.eval(&x), fueter_sce_kernel(&s, &x, n)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            cases.push((pointwise, format!("closed form n={n} s={s:?}")));
        }
    }
    Check::exact("fueter_sce", cases)
}

/// The iterative relations for `D` and `D̄` on `(s - x̄) Q^{-m}` and `Q^{-m}`, `1 ≤ m ≤ h`.
fn relations(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let h = h_of(n) as i64;
        for s in s_fixtures(n as usize) {
            let q = SymbolicQ::new(&s);
            for m in 1..=h as u32 {
                let mi = m as i64;
                let (k1, k2) = (q.k1(0, m), q.k2(0, m));
                let d1 = k1.dirac(Side::D).equal_rational(&q.k2(0, m).scale_by(&rat(-2 * (h - mi + 1))));
                let d2 = k2.dirac(Side::D).equal_rational(&q.k2(1, m + 1).scale_by(&rat(4 * mi)).sub(&q.k1(0, m + 1).scale_by(&rat(2 * mi))));
                let b1 = k1
                    .dirac(Side::Dbar)
                    .equal_rational(&q.k2(0, m).scale_by(&rat(2 * (h - mi))).add(&q.k1(1, m + 1).scale_by(&rat(4 * mi))));
                let b2 = k2.dirac(Side::Dbar).equal_rational(&q.k1(0, m + 1).scale_by(&rat(2 * mi)));
                for (ok, tag) in [(d1, "D(s-xbar)Q^-m"), (d2, "D Q^-m"), (b1, "Dbar(s-xbar)Q^-m"), (b2, "Dbar Q^-m")] {
                    cases.push((ok, format!("{tag} n={n} m={m} s={s:?}")));
                }
            }
        }
    }
    Check::exact("relations", cases)
}

/// `Δ^m S_L^{-1} = γ_{n,m} (s - x̄) Q^{-m-1}`.
fn laplacian_powers(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let h = h_of(n);
        for s in s_fixtures(n as usize) {
            let q = SymbolicQ::new(&s);
            let mut f = q.cauchy();
            for m in 0..=h {
                let ok = gamma(h, m).is_ok_and(|g| f.equal_rational(&q.k1(0, m + 1).scale_by(&g)));
                cases.push((ok, format!("n={n} m={m} s={s:?}")));
                f = f.laplacian();
            }
        }
    }
    Check::exact("laplacian_powers", cases)
}

fn pos_pow_symbolic(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let nn = n as usize;
        for l in 1..=h_of(n) {
            let mut f = inv_norm_pow_fn(nn, l);
            for k in 1..=6u32 {
                let sign = if (k + 1) % 2 == 0 { rat(1) } else { rat(-1) };
                let want = axial_poly_fn(&h_poly(l, k + 2 * l - 2), nn)
                    .mul(&inv_norm_pow_fn(nn, k + l - 1))
                    .scale_by(&(factorial_r(k as i64 - 1) * sign));
                cases.push((f.equal_rational(&want), format!("n={n} l={l} k={k}")));
                f = f.partial(0);
            }
        }
    }
    Check::exact("pos_pow_symbolic", cases)
}

fn axiality(cfg: &SuiteConfig) -> Check {
    let samples = [(rat(1), rat(1)), (ratio(1, 2), rat(2)), (rat(-1), ratio(1, 3)), (rat(0), ratio(3, 2))];
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let nn = n as usize;
        let mut i1 = vec![rat(0); nn];
        i1[0] = rat(1);
        let mut i2 = vec![rat(0); nn];
        i2[1] = ratio(3, 5);
        i2[2] = ratio(4, 5);
        let s = Paravector::real(nn, rat(3));
        let check = |f: &CliffordRationalFn| axiality_check(f, &samples, &i1, &i2).unwrap_or(false);
        for spec in KernelSpec::all(n) {
            cases.push((check(&kernel_oracle(&spec, &s)), format!("{spec:?}")));
        }
        cases.push((check(&xbar_fn(nn)), format!("xbar n={n}")));
        cases.push((!check(&coordinate_fn(nn, 1)), format!("x1 rejected n={n}")));
    }
    Check::exact("axiality", cases)
}

fn sigma_for(cfg: &SuiteConfig, h: u32, l: u32) -> Option<Rational> {
    let s = sigma(h, l).ok()?;
    Some(if cfg.inject_failure { s + rat(1) } else { s })
}

/// `D Δ^{l-1} x^k = σ_{n,l} H_l^k(x)`.
fn harm(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let (nn, h) = (n as usize, h_of(n));
        for k in 0..=cfg.k_max.min(10) {
            let mut lap = monomial_fn(nn, k);
            for l in 1..=h {
                let ok = sigma_for(cfg, h, l).is_some_and(|s| {
                    lap.dirac(Side::D).equal_rational(&axial_poly_fn(&h_poly(l, k), nn).scale_by(&s))
                });
                cases.push((ok, format!("n={n} l={l} k={k}")));
                lap = lap.laplacian();
            }
        }
    }
    Check::exact("harm", cases)
}

/// `Δ^l x^k = γ_{n,l} P_l^k(x)`.
fn app3(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let (nn, h) = (n as usize, h_of(n));
        for k in 0..=cfg.k_max.min(10) {
            let mut lap = monomial_fn(nn, k).laplacian();
            for l in 1..=h {
                let ok = gamma(h, l).is_ok_and(|g| lap.equal_rational(&axial_poly_fn(&p_poly(l, k), nn).scale_by(&g)));
                cases.push((ok, format!("n={n} l={l} k={k}")));
                lap = lap.laplacian();
            }
        }
    }
    Check::exact("app3", cases)
}

/// Series coefficients against `D^β Δ^m x^κ` from the oracle, including the vanishing for `κ < 2m+β`.
fn monomial_images(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    let mut rng = cfg.rng(29);
    for &n in &cfg.n {
        let (nn, h) = (n as usize, h_of(n));
        let points: Vec<_> = (0..2).map(|_| random_paravector(&mut rng, nn)).collect();
        for kappa in 0..=cfg.k_max.min(10) {
            let mut lap = monomial_fn(nn, kappa);
            for m in 0..h {
                for side in [Side::D, Side::Dbar] {
                    let mut f = lap.clone();
                    for beta in 1..=h - m {
                        f = f.dirac(side);
                        let spec = KernelSpec { n, side, beta, m };
                        if kappa < 2 * m + beta {
                            let zero = monomial_image_x(&spec, kappa, &points[0]).is_ok_and(|v| v.is_zero());
                            cases.push((f.is_zero() && zero, format!("kernel span {spec:?} kappa={kappa}")));
                        }
                        for x in &points {
                            let ok = match (monomial_image_x(&spec, kappa, x), f.eval(x)) {
                                (Ok(a), Ok(b)) => a == b,
                                _ => false,
                            };
                            cases.push((ok, format!("{spec:?} kappa={kappa} x={x:?}")));
                        }
                    }
                }
                lap = lap.laplacian();
            }
        }
    }
    Check::exact("monomial_images", cases)
}

fn pointwise(cfg: &SuiteConfig) -> Check {
    let mut rng = cfg.rng(31);
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let x = random_paravector(&mut rng, n as usize);
        for s in s_fixtures(n as usize) {
            for spec in KernelSpec::all(n) {
                let ok = match (kernel_closed_form(&spec, &s, &x), kernel_closed_form_symbolic(&spec, &s).and_then(|f| f.eval(&x))) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                };
                cases.push((ok, format!("{spec:?} s={s:?}")));
            }
        }
    }
    Check::exact("pointwise", cases)
}

fn aux_signs(cfg: &SuiteConfig) -> Check {
    Check::exact(
        "aux_signs",
        cfg.n.iter().flat_map(|&n| KernelSpec::all(n)).map(|spec| {
            let ok = aux_limit_constant(spec.beta, spec.m, spec.h(), spec.side).is_ok_and(|c| match spec.side {
                Side::D => c < Rational::zero(),
                Side::Dbar => c > Rational::zero(),
            });
            (ok, format!("{spec:?}"))
        }),
    )
}

/// On the real axis the kernel is `aux (-1)^m (2m+β)! (s - x0)^{-2m-β-1}`.
fn aux_restriction(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let nn = n as usize;
        for s in s_fixtures(nn) {
            for x0 in [rat(0), ratio(-1, 2), rat(5)] {
                let x = Paravector::real(nn, x0.clone());
                for spec in KernelSpec::all(n) {
                    let ok = (|| -> crate::Result<bool> {
                        let order = 2 * spec.m + spec.beta;
                        let sign = if spec.m % 2 == 0 { rat(1) } else { rat(-1) };
                        let c = aux_limit_constant(spec.beta, spec.m, spec.h(), spec.side)? * sign * factorial_r(order as i64);
                        let base = s.sub(&x).inverse()?.pow(order + 1);
                        Ok(kernel_closed_form(&spec, &s, &x)? == base.scale(&c))
                    })()
                    .unwrap_or(false);
                    cases.push((ok, format!("{spec:?} s={s:?} x0={x0}")));
                }
            }
        }
    }
    Check::exact("aux_restriction", cases)
}

/// Shipped `b̄_0` entries reproduced by the exact fit.
fn bbar0(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let h = h_of(n);
        for k1 in (0..).take_while(|k1| 2 * k1 + 1 <= h) {
            for m in 0..=h - (2 * k1 + 1) {
                let ok = match (fit_bbar0(n, m, k1), bbar0_table(h, m, k1)) {
                    (Ok(a), Some(b)) => a == b,
                    _ => false,
                };
                cases.push((ok, format!("n={n} m={m} k1={k1}")));
            }
        }
    }
    Check::exact("bbar0", cases)
}
