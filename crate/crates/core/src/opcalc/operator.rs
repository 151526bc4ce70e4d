//! Paravector operators `T = T_0 + Σ e_i T_i` with pairwise commuting real components.

use serde_json::{json, Value};

use crate::clifford::Paravector;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};

use super::matrix::{CliffordMatrix, Mat};

/// Relative commutator tolerance for floating components.
pub const COMMUTE_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct CommutingParavectorOp<S> {
    pub n: usize,
    pub d: usize,
    pub mats: Vec<Mat<S>>,
    /// Joint eigen-paravectors `λ^(j)`, when the components are simultaneously diagonalizable with real spectra.
    pub certificate: Option<Vec<Paravector<S>>>,
}

impl<S: Scalar> CommutingParavectorOp<S> {
    pub fn new(mats: Vec<Mat<S>>, certificate: Option<Vec<Paravector<S>>>) -> Result<Self> {
        if mats.is_empty() {
            return Err(Error::Parse("operator needs at least T_0".into()));
        }
        let d = mats[0].d;
        if let Some(m) = mats.iter().find(|m| m.d != d) {
            return Err(Error::DimensionMismatch(d, m.d));
        }
        let n = mats.len() - 1;
        if let Some(c) = &certificate {
            if c.len() != d {
                return Err(Error::DimensionMismatch(d, c.len()));
            }
            if let Some(p) = c.iter().find(|p| p.n() != n) {
                return Err(Error::DimensionMismatch(n, p.n()));
            }
        }
        Ok(CommutingParavectorOp { n, d, mats, certificate })
    }

    /// Diagonal operator with the given joint eigen-paravectors.
    pub fn diagonal(eigs: &[Paravector<S>]) -> Result<Self> {
        let n = eigs.first().map(Paravector::n).ok_or_else(|| Error::Parse("empty spectrum".into()))?;
        let mats = (0..=n)
            .map(|mu| {
                let v: Vec<S> = eigs.iter().map(|p| if mu == 0 { p.x0.clone() } else { p.xv[mu - 1].clone() }).collect();
                Mat::diag(&v)
            })
            .collect();
        Self::new(mats, Some(eigs.to_vec()))
    }

    /// The `1 × 1` operator of a paravector.
    pub fn scalar(x: &Paravector<S>) -> Self {
        Self::diagonal(std::slice::from_ref(x)).expect("one eigenvalue")
    }

    /// `V diag(λ) V^{-1}` with a supplied inverse.
    pub fn conjugated(eigs: &[Paravector<S>], v: &Mat<S>, v_inv: &Mat<S>) -> Result<Self> {
        let diag = Self::diagonal(eigs)?;
        let mats = diag.mats.iter().map(|m| v.mul(m).mul(v_inv)).collect();
        Self::new(mats, Some(eigs.to_vec()))
    }

    pub fn t0(&self) -> &Mat<S> {
        &self.mats[0]
    }

    /// Pairwise commutators vanish (exactly, or relative to the component norms for floats).
    pub fn validate_commuting(&self) -> bool {
        for a in 0..self.mats.len() {
            for b in a + 1..self.mats.len() {
                let (x, y) = (&self.mats[a], &self.mats[b]);
                let c = x.mul(y).sub(&y.mul(x));
                let ok = match S::KIND {
                    ScalarKind::Rational => c.data.iter().all(|v| v.is_zero()),
                    ScalarKind::Float => c.frobenius() <= COMMUTE_TOL * (x.frobenius() * y.frobenius()).max(f64::MIN_POSITIVE),
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_clifford(&self) -> CliffordMatrix<S> {
        self.signed_clifford(S::one())
    }

    /// `T̄ = T_0 - Σ e_i T_i`.
    pub fn conj_clifford(&self) -> CliffordMatrix<S> {
        self.signed_clifford(-S::one())
    }

    fn signed_clifford(&self, sign: S) -> CliffordMatrix<S> {
        let mut acc = CliffordMatrix::from_real(self.t0(), self.n);
        for i in 1..=self.n {
            acc = acc.add(&CliffordMatrix::from_real_blade(&self.mats[i].scale(&sign), self.n, 1 << (i - 1)));
        }
        acc
    }

    /// `Σ_μ T_μ^2 = T T̄`.
    pub fn norm_sq_mat(&self) -> Mat<S> {
        self.mats.iter().fold(Mat::zeros(self.d), |acc, m| acc.add(&m.mul(m)))
    }

    /// `sqrt(Σ_μ |T_μ|_F^2)`.
    pub fn frobenius(&self) -> f64 {
        self.mats.iter().map(|m| m.frobenius().powi(2)).sum::<f64>().sqrt()
    }

    pub fn to_f64(&self) -> CommutingParavectorOp<f64> {
        CommutingParavectorOp {
            n: self.n,
            d: self.d,
            mats: self.mats.iter().map(Mat::to_f64).collect(),
            certificate: self.certificate.as_ref().map(|c| c.iter().map(Paravector::to_f64).collect()),
        }
    }

    pub fn to_json(&self) -> Value {
        let mats: Vec<Vec<Vec<Value>>> = self
            .mats
            .iter()
            .map(|m| (0..m.d).map(|i| (0..m.d).map(|j| m.get(i, j).to_json()).collect()).collect())
            .collect();
        let cert = match &self.certificate {
            Some(c) => json!({ "eigenparavectors": c.iter().map(Paravector::to_json).collect::<Vec<_>>() }),
            None => Value::Null,
        };
        json!({ "n": self.n, "d": self.d, "mats": mats, "certificate": cert })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("operator fixture: {m}"));
        let mats = v["mats"]
            .as_array()
            .ok_or_else(|| bad("missing mats"))?
            .iter()
            .map(|m| {
                let rows = m
                    .as_array()
                    .ok_or_else(|| bad("matrix must be an array of rows"))?
                    .iter()
                    .map(|r| {
                        r.as_array()
                            .ok_or_else(|| bad("row must be an array"))?
                            .iter()
                            .map(|c| S::from_json(c).ok_or_else(|| bad(&format!("bad entry {c}"))))
                            .collect::<Result<Vec<S>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Mat::from_rows(rows)
            })
            .collect::<Result<Vec<_>>>()?;
        let certificate = match &v["certificate"] {
            Value::Null => None,
            c => Some(
                c["eigenparavectors"]
                    .as_array()
                    .ok_or_else(|| bad("certificate needs eigenparavectors"))?
                    .iter()
                    .map(Paravector::from_json)
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let op = Self::new(mats, certificate)?;
        if let Some(n) = v["n"].as_u64() {
            if n as usize != op.n {
                return Err(Error::DimensionMismatch(n as usize, op.n));
            }
        }
        if let Some(d) = v["d"].as_u64() {
            if d as usize != op.d {
                return Err(Error::DimensionMismatch(d as usize, op.d));
            }
        }
        Ok(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    #[test]
    fn commuting_examples() {
        let diag = CommutingParavectorOp::diagonal(&[
            Paravector::new(rat(1), vec![rat(2), rat(0)]),
            Paravector::new(rat(3), vec![rat(0), rat(1)]),
        ])
        .unwrap();
        assert!(diag.validate_commuting());
        let z = rat(0);
        let a = Mat::from_rows(vec![vec![z.clone(), rat(1)], vec![z.clone(), z.clone()]]).unwrap();
        let b = Mat::from_rows(vec![vec![z.clone(), z.clone()], vec![rat(1), z.clone()]]).unwrap();
        let op = CommutingParavectorOp::<Rational>::new(vec![Mat::zeros(2), a, b], None).unwrap();
        assert!(!op.validate_commuting());
        assert!(CommutingParavectorOp::scalar(&Paravector::new(rat(1), vec![rat(5)])).validate_commuting());
    }

    #[test]
    fn json_round_trip() {
        let op = CommutingParavectorOp::diagonal(&[Paravector::new(rat(1), vec![rat(2)]), Paravector::real(1, rat(3))]).unwrap();
        assert_eq!(CommutingParavectorOp::from_json(&op.to_json()).unwrap(), op);
    }
}
