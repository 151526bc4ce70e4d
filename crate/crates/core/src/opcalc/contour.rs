//! Circular slice contours and trapezoidal quadrature of the functional calculi.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::parallel;

use super::matrix::CliffordMatrix;
use super::operator::CommutingParavectorOp;
use super::resolvent::{OperatorPoint, ResolventKind};
use super::spectrum::certified_slice;

/// Contour rejected when `min |det Q| < SAFETY_FACTOR * scale^d`.
pub const SAFETY_FACTOR: f64 = 1e-8;
/// Relative N versus 2N agreement required of a quadrature.
pub const CONVERGENCE_TOL: f64 = 1e-11;

/// Circle `center + radius e^{Iθ}` in the plane of the unit 1-vector `unit`, optionally with a
/// clockwise inner circle making an annulus.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceContour {
    pub unit: Vec<f64>,
    pub center: f64,
    pub radius: f64,
    pub nodes: usize,
    pub inner_radius: Option<f64>,
}

impl SliceContour {
    pub fn circle(unit: Vec<f64>, center: f64, radius: f64, nodes: usize) -> Result<Self> {
        let c = SliceContour { unit, center, radius, nodes, inner_radius: None };
        c.validate()?;
        Ok(c)
    }

    pub fn annulus(unit: Vec<f64>, center: f64, inner: f64, outer: f64, nodes: usize) -> Result<Self> {
        let c = SliceContour { unit, center, radius: outer, nodes, inner_radius: Some(inner) };
        c.validate()?;
        Ok(c)
    }

    /// Unit along `e_i`.
    pub fn axis(n: usize, i: usize) -> Vec<f64> {
        let mut v = vec![0.0; n];
        v[i - 1] = 1.0;
        v
    }

    pub fn n(&self) -> usize {
        self.unit.len()
    }

    pub fn with_nodes(&self, nodes: usize) -> Self {
        SliceContour { nodes, ..self.clone() }
    }

    pub fn with_radius(&self, radius: f64) -> Self {
        SliceContour { radius, ..self.clone() }
    }

    pub fn with_unit(&self, unit: Vec<f64>) -> Self {
        SliceContour { unit, ..self.clone() }
    }

    fn validate(&self) -> Result<()> {
        let norm: f64 = self.unit.iter().map(|c| c * c).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::OutOfRange(format!("contour unit must have norm 1, got {norm}")));
        }
        if !(self.radius > 0.0) {
            return Err(Error::OutOfRange("contour radius must be positive".into()));
        }
        if let Some(r) = self.inner_radius {
            if !(r > 0.0 && r < self.radius) {
                return Err(Error::OutOfRange("annulus needs 0 < inner < outer".into()));
            }
        }
        if !self.nodes.is_power_of_two() {
            return Err(Error::OutOfRange(format!("node count must be a power of two, got {}", self.nodes)));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "I": self.unit, "center": self.center, "radius": self.radius, "nodes": self.nodes });
        if let Some(r) = self.inner_radius {
            v["inner_radius"] = json!(r);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("contour: {m}"));
        let unit = v["I"]
            .as_array()
            .ok_or_else(|| bad("missing I"))?
            .iter()
            .map(|c| c.as_f64().ok_or_else(|| bad("I entries must be numbers")))
            .collect::<Result<Vec<_>>>()?;
        let c = SliceContour {
            unit,
            center: v["center"].as_f64().ok_or_else(|| bad("missing center"))?,
            radius: v["radius"].as_f64().ok_or_else(|| bad("missing radius"))?,
            nodes: v["nodes"].as_u64().ok_or_else(|| bad("missing nodes"))? as usize,
            inner_radius: v.get("inner_radius").and_then(Value::as_f64),
        };
        c.validate()?;
        Ok(c)
    }
}

fn circle_nodes(c: &SliceContour, radius: f64, orientation: f64, out: &mut Vec<(Paravector<f64>, Multivector<f64>)>) {
    for j in 0..c.nodes {
        let theta = 2.0 * PI * j as f64 / c.nodes as f64;
        let (sin, cos) = theta.sin_cos();
        let s = Paravector::new(c.center + radius * cos, c.unit.iter().map(|u| radius * sin * u).collect());
        let wr = orientation * radius / c.nodes as f64;
        let w = Paravector::new(wr * cos, c.unit.iter().map(|u| wr * sin * u).collect()).to_mv();
        out.push((s, w));
    }
}

/// Nodes `s_j` and weights `w_j` with `(1/2π)∮ g(s) ds_I ≈ Σ_j g(s_j) w_j`.
pub fn contour_nodes(c: &SliceContour) -> Vec<(Paravector<f64>, Multivector<f64>)> {
    let mut out = Vec::with_capacity(c.nodes * 2);
    circle_nodes(c, c.radius, 1.0, &mut out);
    if let Some(r) = c.inner_radius {
        circle_nodes(c, r, -1.0, &mut out);
    }
    out
}

/// `f(s) = Σ_ν s^ν α_ν` with right Clifford coefficients.
pub fn eval_right_poly(coeffs: &[Multivector<f64>], s: &Paravector<f64>) -> Multivector<f64> {
    let sm = s.to_mv();
    let mut acc = Multivector::zero(s.n());
    let mut p = Multivector::one(s.n());
    for a in coeffs {
        acc = &acc + &(&p * a);
        p = &p * &sm;
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct CalcResult {
    pub value: CliffordMatrix<f64>,
    pub nodes: usize,
    /// Largest entry of the difference between the N-node and 2N-node sums.
    pub delta: f64,
    pub min_det: f64,
}

impl CalcResult {
    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.to_json(),
            "diagnostics": { "nodes": self.nodes, "delta_n_2n": self.delta, "min_abs_det": self.min_det },
        })
    }
}

fn quadrature(
    kind: &ResolventKind,
    f: &[Multivector<f64>],
    t: &CommutingParavectorOp<f64>,
    c: &SliceContour,
) -> Result<(CliffordMatrix<f64>, f64, usize)> {
    let nodes = contour_nodes(c);
    let terms = kind.terms(t.n as u32)?;
    let evals: Vec<Result<(CliffordMatrix<f64>, f64)>> = parallel::install(|| {
        nodes
            .par_iter()
            .map(|(s, w)| {
                let pt = OperatorPoint::new(s, t)?;
                let r = pt.combination(&terms);
                Ok((r.right_mul(&(w * &eval_right_poly(f, s))), pt.det_abs))
            })
            .collect()
    });
    let mut acc = CliffordMatrix::zeros(t.d, t.n);
    let mut min_det = f64::INFINITY;
    let mut argmin = 0;
    for (j, e) in evals.into_iter().enumerate() {
        let (v, det) = e.map_err(|err| match err {
            Error::SpectralSingularity { det } => Error::ContourIntersectsSpectrum { min_det: det, threshold: 0.0, node: j },
            other => other,
        })?;
        if det < min_det {
            min_det = det;
            argmin = j;
        }
        acc = acc.add(&v);
    }
    Ok((acc, min_det, argmin))
}

/// Spectral-safety scale `(|center| + radius + |T|_F)^2`.
pub fn safety_scale(t: &CommutingParavectorOp<f64>, c: &SliceContour) -> f64 {
    (c.center.abs() + c.radius + t.frobenius()).powi(2)
}

/// Certified spectral traces must lie inside the disk (and outside the inner disk of an annulus).
fn check_enclosure(t: &CommutingParavectorOp<f64>, c: &SliceContour) -> Result<()> {
    let Some(slice) = certified_slice(t) else { return Ok(()) };
    for &(u, v) in &slice.points {
        let r = (u - c.center).hypot(v);
        if r >= c.radius || c.inner_radius.is_some_and(|inner| r <= inner) {
            return Err(Error::ContourMissesSpectrum { u, v });
        }
    }
    Ok(())
}

/// `(1/2π)∮ R(s, T) ds_I f(s)` by the periodic trapezoid, certified against the `2N`-node sum.
pub fn functional_calculus(
    kind: &ResolventKind,
    f: &[Multivector<f64>],
    t: &CommutingParavectorOp<f64>,
    c: &SliceContour,
) -> Result<CalcResult> {
    if c.n() != t.n {
        return Err(Error::DimensionMismatch(t.n, c.n()));
    }
    if let Some(a) = f.iter().find(|a| a.n() != t.n) {
        return Err(Error::DimensionMismatch(t.n, a.n()));
    }
    check_enclosure(t, c)?;
    let (value, min_det, node) = quadrature(kind, f, t, c)?;
    let threshold = SAFETY_FACTOR * safety_scale(t, c).powi(t.d as i32);
    if min_det < threshold {
        return Err(Error::ContourIntersectsSpectrum { min_det, threshold, node });
    }
    let (fine, _, _) = quadrature(kind, f, t, &c.with_nodes(2 * c.nodes))?;
    let delta = value.sub(&fine).max_abs();
    let tolerance = CONVERGENCE_TOL * value.max_abs().max(1.0);
    if delta > tolerance {
        return Err(Error::NonConvergent { delta, tolerance });
    }
    Ok(CalcResult { value, nodes: c.nodes, delta, min_det })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_nodes() {
        let c = SliceContour::circle(SliceContour::axis(2, 1), 0.0, 1.0, 4).unwrap();
        let nodes = contour_nodes(&c);
        let expect_s = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for ((s, w), (a, b)) in nodes.iter().zip(expect_s) {
            assert!((s.x0 - a).abs() < 1e-15 && (s.xv[0] - b).abs() < 1e-15);
            assert!((w.coeffs()[0] - a / 4.0).abs() < 1e-15 && (w.coeffs()[1] - b / 4.0).abs() < 1e-15);
        }
        assert!(SliceContour::circle(vec![1.0, 1.0], 0.0, 1.0, 4).is_err());
        assert!(SliceContour::circle(SliceContour::axis(2, 1), 0.0, 1.0, 6).is_err());
    }
}
