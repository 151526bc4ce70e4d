//! Exact identities among the `H`/`P` coefficients, tables and Jacobi polynomials.

use num_traits::{One, Zero};

use crate::scalar::{rat, ratio, Rational};
use crate::special::axial::coeff_c_ext;
use crate::special::binom::{binom_top, factorial_r};
use crate::special::{
    binom, clifford_appell, h_poly, h_poly_via_jacobi, jacobi_at_minus_one, jacobi_eval, p_poly, Parity, XTable,
};

use super::{random_paravector, Check, CheckFn, SuiteConfig};

pub(crate) fn checks() -> Vec<CheckFn> {
    vec![
        Box::new(summ),
        Box::new(hrecorsive),
        Box::new(rell1),
        Box::new(pos_pow),
        Box::new(jac1),
        Box::new(minus1),
        Box::new(coeff1_ab),
        Box::new(coeff1_c),
        Box::new(coeff1_def),
        Box::new(stifel),
        Box::new(real_valued),
        Box::new(appell_scaling),
    ]
}

fn c(k: i64, j: i64, l: i64) -> Rational {
    coeff_c_ext(k, j, l)
}

/// `(l, k)` with `1 ≤ l ≤ l_max`, `2l-1 ≤ k ≤ k_max`.
fn lk_grid(cfg: &SuiteConfig) -> impl Iterator<Item = (u32, u32)> + '_ {
    (1..=cfg.l_max).flat_map(move |l| (2 * l - 1..=cfg.k_max).map(move |k| (l, k)))
}

fn summ(cfg: &SuiteConfig) -> Check {
    let bump = if cfg.inject_failure { rat(1) } else { Rational::zero() };
    Check::exact(
        "summ",
        lk_grid(cfg).map(|(l, k)| {
            let want = Rational::from_integer(binom(k as i64, 2 * l as i64 - 1)) + &bump;
            (h_poly(l, k).coeff_sum() == want, format!("l={l} k={k}"))
        }),
    )
}

fn hrecorsive(cfg: &SuiteConfig) -> Check {
    Check::exact(
        "hrecorsive",
        lk_grid(cfg).map(|(l, k)| {
            let lhs = h_poly(l + 1, k + 2)
                .to_table()
                .sub(&XTable::two_x0().mul(&h_poly(l + 1, k + 1).to_table()))
                .add(&XTable::norm_sq().mul(&h_poly(l + 1, k).to_table()));
            (lhs == h_poly(l, k).to_table(), format!("l={l} k={k}"))
        }),
    )
}

fn rell1(cfg: &SuiteConfig) -> Check {
    let xbar = XTable::monomial(0, 1, Rational::one());
    let mut rng = cfg.rng(11);
    let points: Vec<_> = (0..5).map(|_| random_paravector(&mut rng, 5)).collect();
    Check::exact(
        "rell1",
        (1..=cfg.l_max).flat_map(|l| (0..=cfg.k_max).map(move |k| (l, k))).flat_map(|(l, k)| {
            let (p, hk1, hk) = (p_poly(l, k), h_poly(l + 1, k + 1), h_poly(l + 1, k));
            let table = p.to_table() == hk1.to_table().sub(&xbar.mul(&hk.to_table()));
            let pts: Vec<(bool, String)> = points
                .iter()
                .map(|x| {
                    let rhs = &hk1.eval(x) - &(&x.conj().to_mv() * &hk.eval(x));
                    (p.eval(x) == rhs, format!("l={l} k={k} at {x:?}"))
                })
                .collect();
            std::iter::once((table, format!("table l={l} k={k}"))).chain(pts)
        }),
    )
}

/// `∂_{x0}^{k-1} |x|^{-2l} = (k-1)! (-1)^{k+1} H_l^{k-2+2l}(x) |x|^{-2k-2l+2}` as Laurent tables in `x`, `x̄`.
fn pos_pow(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for l in 1..=cfg.l_max as i32 {
        let mut lhs = XTable::monomial(-l, -l, Rational::one());
        let mut k = 1i32;
        while k - 2 + 2 * l <= cfg.k_max as i32 {
            let sign = if (k + 1) % 2 == 0 { rat(1) } else { rat(-1) };
            let e = -(k + l - 1);
            let rhs = h_poly(l as u32, (k - 2 + 2 * l) as u32)
                .to_table()
                .mul(&XTable::monomial(e, e, Rational::one()))
                .scale(&(factorial_r(k as i64 - 1) * sign));
            cases.push((lhs == rhs, format!("l={l} k={k}")));
            lhs = lhs.d_x0();
            k += 1;
        }
    }
    Check::exact("pos_pow", cases)
}

fn jac1(cfg: &SuiteConfig) -> Check {
    let mut rng = cfg.rng(13);
    let points: Vec<_> = (0..3).map(|_| random_paravector(&mut rng, 5)).filter(|x| !x.norm_sq().is_zero()).collect();
    let mut cases = Vec::new();
    for l in 1..=cfg.l_max {
        for m in 0..=cfg.m_max {
            for (parity, k) in [(Parity::Odd, 2 * m + 2 * l - 1), (Parity::Even, 2 * m + 2 * l)] {
                for x in &points {
                    let direct = h_poly(l, k).eval(x).scalar_part().clone();
                    let ok = h_poly_via_jacobi(l, m, parity, x).is_ok_and(|v| v == direct);
                    cases.push((ok, format!("{parity:?} l={l} m={m} at {x:?}")));
                }
            }
        }
    }
    Check::exact("jac1", cases)
}

fn minus1(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for l in 1..=cfg.l_max as i64 {
        let beta = ratio(2 * l - 1, 2);
        for alpha in [ratio(-1, 2), ratio(1, 2)] {
            for m in 0..=cfg.m_max {
                let sign = if m % 2 == 0 { rat(1) } else { rat(-1) };
                let closed = sign * binom_top(&(&beta + rat(m as i64)), m as i64);
                let ok = jacobi_eval(m, &alpha, &beta, &rat(-1)).is_ok_and(|v| v == closed) && jacobi_at_minus_one(m, &beta) == closed;
                cases.push((ok, format!("alpha={alpha} beta={beta} m={m}")));
            }
        }
    }
    Check::exact("minus1", cases)
}

/// Items a) and b): `k ≥ 1` with `k-1+2l ≤ k_max`.
fn coeff1_ab(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for l in 1..=cfg.l_max as i64 {
        for k in 1..=cfg.k_max as i64 + 1 - 2 * l {
            let a = rat(k + l - 1) * c(k - 2 + 2 * l, 0, l) == rat(k) * c(k - 1 + 2 * l, 0, l);
            let b = rat(k + l - 1) * c(k - 2 + 2 * l, k - 1, l) == rat(k) * c(k - 1 + 2 * l, k, l);
            cases.push((a, format!("a) l={l} k={k}")));
            cases.push((b, format!("b) l={l} k={k}")));
        }
    }
    Check::exact("coeff1_ab", cases)
}

/// Item c) over `1 ≤ j ≤ k-1`.
fn coeff1_c(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for l in 1..=cfg.l_max as i64 {
        for k in 1..=cfg.k_max as i64 + 1 - 2 * l {
            let top = k - 2 + 2 * l;
            for j in 1..k {
                let lhs = rat(k - j) * c(top, j - 1, l) + rat(j) * c(top, j, l) - rat(k + l - 1) * (c(top, j, l) + c(top, j - 1, l));
                cases.push((lhs == rat(-k) * c(k - 1 + 2 * l, j, l), format!("l={l} k={k} j={j}")));
            }
        }
    }
    Check::exact("coeff1_c", cases)
}

/// Items d), e) over `1 ≤ j ≤ k-2l`, f); `2l-1 ≤ k ≤ k_max`.
fn coeff1_def(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for (l, k) in lk_grid(cfg) {
        let (l, k) = (l as i64, k as i64);
        let d = c(k + 2, 0, l + 1) - c(k + 1, 0, l + 1) == c(k, 0, l);
        cases.push((d, format!("d) l={l} k={k}")));
        for j in 1..=k - 2 * l {
            let e = c(k + 2, j, l + 1) - c(k + 1, j, l + 1) - c(k + 1, j - 1, l + 1) + c(k, j - 1, l + 1) == c(k, j, l);
            cases.push((e, format!("e) l={l} k={k} j={j}")));
        }
        let top = k - 2 * l + 1;
        let f = c(k + 2, top, l + 1) - c(k + 1, top - 1, l + 1) == c(k, top, l);
        cases.push((f, format!("f) l={l} k={k}")));
    }
    Check::exact("coeff1_def", cases)
}

fn stifel(cfg: &SuiteConfig) -> Check {
    let k = cfg.k_max as i64;
    Check::exact(
        "stifel",
        (0..=k).flat_map(|n| (0..=n + 1).map(move |m| (n, m))).map(|(n, m)| {
            (binom(n, m) + binom(n, m - 1) == binom(n + 1, m), format!("n={n} m={m}"))
        }),
    )
}

fn real_valued(cfg: &SuiteConfig) -> Check {
    let mut rng = cfg.rng(17);
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let points: Vec<_> = (0..3).map(|_| random_paravector(&mut rng, n as usize)).collect();
        for (l, k) in lk_grid(cfg).filter(|&(_, k)| k <= 12) {
            let p = h_poly(l, k);
            for x in &points {
                cases.push((p.eval(x).is_scalar(), format!("n={n} l={l} k={k}")));
            }
        }
    }
    Check::exact("real_valued", cases)
}

/// `Q_n^k = (2h)!/k! P_h^k` entrywise, through `P_h^k` having the same exponent pattern.
fn appell_scaling(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let h = (n - 1) / 2;
        for k in 2 * h..=cfg.k_max {
            let q = clifford_appell(n, k);
            let p = p_poly(h, k);
            let factor = factorial_r(2 * h as i64) / factorial_r(k as i64);
            let ok = q.is_ok_and(|q| {
                q.terms.len() == p.terms.len()
                    && q.terms.iter().zip(&p.terms).all(|(a, b)| {
                        a.x_exp == b.x_exp && a.xbar_exp == b.xbar_exp && a.coeff == &b.coeff * &factor
                    })
            });
            cases.push((ok, format!("n={n} k={k}")));
        }
    }
    Check::exact("appell_scaling", cases)
}
