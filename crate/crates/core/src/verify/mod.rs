//! Verification suites over parameter grids, reporting one line per check.

mod algebra;
mod calculus;
mod identities;
mod symbolic;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::parallel;
use crate::scalar::{ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Clifford,
    Oracle,
    Identities,
    Kernels,
    Series,
    Opcalc,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["clifford", "oracle", "identities", "kernels", "series", "opcalc", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Clifford, Suite::Oracle, Suite::Identities, Suite::Kernels, Suite::Series, Suite::Opcalc],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "clifford" => Suite::Clifford,
            "oracle" => Suite::Oracle,
            "identities" => Suite::Identities,
            "kernels" => Suite::Kernels,
            "series" => Suite::Series,
            "opcalc" => Suite::Opcalc,
            "all" => Suite::All,
            other => return Err(Error::Parse(format!("unknown suite '{other}' (expected one of {})", Suite::NAMES.join(", ")))),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub n: Vec<u32>,
    pub k_max: u32,
    pub l_max: u32,
    pub m_max: u32,
    pub seed: u64,
    /// Perturbs one structure constant so that the affected checks must fail.
    pub inject_failure: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig { suite, n: vec![3, 5, 7], k_max: 20, l_max: 4, m_max: 5, seed: 2024, inject_failure: false }
    }

    fn validate(&self) -> Result<()> {
        if let Some(n) = self.n.iter().find(|&&n| n < 3 || n % 2 == 0) {
            return Err(Error::OutOfRange(format!("n must be odd and at least 3, got {n}")));
        }
        if self.n.is_empty() {
            return Err(Error::OutOfRange("empty n list".into()));
        }
        if self.l_max < 1 {
            return Err(Error::OutOfRange("l_max must be at least 1".into()));
        }
        Ok(())
    }

    pub(crate) fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    /// Exact comparison: number of failing cases out of `cases`.
    Exact { cases: usize, mismatches: usize },
    /// Worst observed error against a pinned tolerance.
    Float { cases: usize, worst: f64, tol: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residual: Residual,
    /// First failing case, if any.
    pub detail: Option<String>,
}

impl Check {
    pub(crate) fn exact(name: &str, cases: impl IntoIterator<Item = (bool, String)>) -> Check {
        let (mut total, mut bad, mut detail) = (0, 0, None);
        for (ok, label) in cases {
            total += 1;
            if !ok {
                bad += 1;
                detail.get_or_insert(label);
            }
        }
        Check { name: name.into(), passed: bad == 0 && total > 0, residual: Residual::Exact { cases: total, mismatches: bad }, detail }
    }

    pub(crate) fn float(name: &str, tol: f64, cases: impl IntoIterator<Item = (f64, String)>) -> Check {
        let (mut total, mut worst, mut detail) = (0, 0.0f64, None);
        for (err, label) in cases {
            total += 1;
            if !(err <= tol) {
                detail.get_or_insert(format!("{label}: {err:e}"));
            }
            worst = if err.is_nan() { f64::NAN } else { worst.max(err) };
        }
        Check { name: name.into(), passed: detail.is_none() && total > 0, residual: Residual::Float { cases: total, worst, tol }, detail }
    }

    pub fn to_json(&self) -> Value {
        let residual = match &self.residual {
            Residual::Exact { cases, mismatches } => json!({ "kind": "exact", "cases": cases, "mismatches": mismatches }),
            Residual::Float { cases, worst, tol } => json!({ "kind": "float", "cases": cases, "worst": worst, "tol": tol }),
        };
        json!({ "name": self.name, "passed": self.passed, "residual": residual, "detail": self.detail })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        match &self.residual {
            Residual::Exact { cases, mismatches: 0 } => write!(f, "{}: {verdict} (exact) {cases} cases", self.name)?,
            Residual::Exact { cases, mismatches } => write!(f, "{}: {verdict} (exact) {mismatches} of {cases} cases differ", self.name)?,
            Residual::Float { cases, worst, tol } => write!(f, "{}: {verdict} (max residual {worst:.3e}, tol {tol:.0e}) {cases} cases", self.name)?,
        }
        if let Some(d) = &self.detail {
            write!(f, "; first failure: {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_human(&self) -> String {
        let mut out: String = self.checks.iter().map(|c| format!("{c}\n")).collect();
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({ "passed": self.passed(), "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>() })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,passed,kind,cases,residual,tol\n");
        for c in &self.checks {
            let row = match &c.residual {
                Residual::Exact { cases, mismatches } => format!("{},{},exact,{cases},{mismatches},0", c.name, c.passed),
                Residual::Float { cases, worst, tol } => format!("{},{},float,{cases},{worst:e},{tol:e}", c.name, c.passed),
            };
            out.push_str(&row);
            out.push('\n');
        }
        out
    }
}

pub(crate) type CheckFn = Box<dyn Fn(&SuiteConfig) -> Check + Send + Sync>;

fn checks_for(suite: Suite) -> Vec<CheckFn> {
    match suite {
        Suite::Clifford => algebra::checks(),
        Suite::Oracle => symbolic::oracle_checks(),
        Suite::Identities => identities::checks(),
        Suite::Kernels => symbolic::kernel_checks(),
        Suite::Series => calculus::series_checks(),
        Suite::Opcalc => calculus::opcalc_checks(),
        Suite::All => unreachable!("expanded by Suite::parts"),
    }
}

/// Runs every check of the configured suite; checks run in parallel and are reported sorted by name.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let fns: Vec<CheckFn> = cfg.suite.parts().into_iter().flat_map(checks_for).collect();
    let mut checks: Vec<Check> = parallel::install(|| fns.par_iter().map(|f| f(cfg)).collect());
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(Report { checks })
}

pub(crate) fn random_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub(crate) fn random_paravector(rng: &mut impl Rng, n: usize) -> Paravector<Rational> {
    Paravector::new(random_rational(rng), (0..n).map(|_| random_rational(rng)).collect())
}

pub(crate) fn random_multivector(rng: &mut impl Rng, n: usize) -> Multivector<Rational> {
    Multivector::from_coeffs(n, (0..1usize << n).map(|_| random_rational(rng)).collect()).expect("2^n coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for name in Suite::NAMES.iter().filter(|&&n| n != "all") {
            let mut cfg = SuiteConfig::new(name.parse().unwrap());
            cfg.k_max = 12;
            cfg.l_max = 3;
            cfg.m_max = 3;
            let t = std::time::Instant::now();
            let report = run_suite(&cfg).unwrap();
            eprintln!("{name}: {:?}\n{}", t.elapsed(), report.to_human());
            assert!(report.passed(), "{name}\n{}", report.to_human());
        }
    }

    #[test]
    fn injected_failure_is_reported() {
        let mut cfg = SuiteConfig::new(Suite::Identities);
        cfg.k_max = 8;
        cfg.inject_failure = true;
        let report = run_suite(&cfg).unwrap();
        assert!(!report.passed());
        assert!(!report.get("summ").unwrap().passed);
        assert!(report.get("stifel").unwrap().passed);
    }

    #[test]
    fn rejects_even_dimensions() {
        let mut cfg = SuiteConfig::new(Suite::Clifford);
        cfg.n = vec![4];
        assert!(run_suite(&cfg).is_err());
        assert!("bogus".parse::<Suite>().is_err());
    }
}
