//! Ring axioms of `R_n` and paravector identities, exact over seeded random samples.

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::clifford::{Multivector, Paravector};
use crate::scalar::{rat, ratio, Rational};

use super::{random_multivector, random_paravector, random_rational, Check, CheckFn, SuiteConfig};

const SAMPLES: usize = 12;

pub(crate) fn checks() -> Vec<CheckFn> {
    vec![
        Box::new(associativity),
        Box::new(anticommutation),
        Box::new(paravector_closure),
        Box::new(inverse),
        Box::new(slice_round_trip),
        Box::new(powers),
    ]
}

fn associativity(cfg: &SuiteConfig) -> Check {
    let mut rng = cfg.rng(1);
    let mut cases = Vec::new();
    for &n in &cfg.n {
        for i in 0..SAMPLES {
            let (a, b, c) = (random_multivector(&mut rng, n as usize), random_multivector(&mut rng, n as usize), random_multivector(&mut rng, n as usize));
            cases.push((&(&a * &b) * &c == &a * &(&b * &c), format!("n={n} sample {i}")));
        }
    }
    Check::exact("associativity", cases)
}

fn anticommutation(cfg: &SuiteConfig) -> Check {
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let nn = n as usize;
        for i in 1..=nn {
            for j in 1..=nn {
                let (ei, ej) = (Multivector::<Rational>::unit(nn, i), Multivector::unit(nn, j));
                let want = Multivector::scalar(nn, rat(if i == j { -2 } else { 0 }));
                cases.push((&(&ei * &ej) + &(&ej * &ei) == want, format!("n={n} i={i} j={j}")));
            }
        }
    }
    Check::exact("anticommutation", cases)
}

fn paravector_closure(cfg: &SuiteConfig) -> Check {
    let mut rng = cfg.rng(2);
    let mut cases = Vec::new();
    for &n in &cfg.n {
        for i in 0..SAMPLES {
            let x = random_paravector(&mut rng, n as usize);
            let p = x.mul(&x.conj());
            cases.push((p == Multivector::scalar(n as usize, x.norm_sq()), format!("n={n} sample {i}")));
        }
    }
    Check::exact("paravector_closure", cases)
}

fn inverse(cfg: &SuiteConfig) -> Check {
    let mut rng = cfg.rng(3);
    let mut cases = Vec::new();
    for &n in &cfg.n {
        for i in 0..SAMPLES {
            let x = random_paravector(&mut rng, n as usize);
            let ok = x.norm_sq().is_zero() || x.inverse().is_ok_and(|inv| x.mul(&inv) == Multivector::one(n as usize));
            cases.push((ok, format!("n={n} sample {i}")));
        }
    }
    Check::exact("inverse", cases)
}

/// Units built from Pythagorean pairs keep `|x_und|` rational.
fn slice_round_trip(cfg: &SuiteConfig) -> Check {
    let mut rng = cfg.rng(4);
    let pairs = [(3, 4, 5), (5, 12, 13), (8, 15, 17)];
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let nn = n as usize;
        for i in 0..SAMPLES {
            let (a, b, c) = pairs[i % pairs.len()];
            let (p, q) = (rng.gen_range(0..nn), rng.gen_range(0..nn - 1));
            let q = if q >= p { q + 1 } else { q };
            let v = random_rational(&mut rng).abs() + ratio(1, 7);
            let mut xv = vec![Rational::zero(); nn];
            xv[p] = ratio(a, c) * &v;
            xv[q] = ratio(b, c) * &v;
            let x = Paravector::new(random_rational(&mut rng), xv);
            let ok = x.slice_decompose().is_ok_and(|t| t.v == v && t.reconstruct() == x);
            cases.push((ok, format!("n={n} sample {i}")));
        }
        let real = Paravector::real(nn, rat(5));
        cases.push((real.slice_decompose().is_ok_and(|t| t.unit.is_none() && t.reconstruct_in(nn) == real), format!("real n={n}")));
    }
    Check::exact("slice_round_trip", cases)
}

fn powers(cfg: &SuiteConfig) -> Check {
    let mut rng = cfg.rng(5);
    let mut cases = Vec::new();
    for &n in &cfg.n {
        let x = random_paravector(&mut rng, n as usize);
        for k in 0..=8 {
            cases.push((x.pow(k).is_paravector(), format!("n={n} k={k}")));
        }
    }
    Check::exact("powers", cases)
}
