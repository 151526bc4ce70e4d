//! Traces of the S-spectrum on a slice plane.

use crate::clifford::Paravector;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::matrix::{det_f64, CliffordMatrix, Mat};
use super::operator::CommutingParavectorOp;
use super::resolvent::qc_det_abs;

/// Slice traces `(u, v)`, `v ≥ 0`, of the spectral spheres `[u + v I]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSlice {
    pub points: Vec<(f64, f64)>,
    /// True when the points come from a joint-eigenvalue certificate.
    pub certified: bool,
}

/// Rectangle `[u_min, u_max] × [v_min, v_max]` in the slice plane sampled on a `steps × steps` grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchGrid {
    pub u: (f64, f64),
    pub v: (f64, f64),
    pub steps: usize,
}

/// One grid sample of `|det Q_{c,s}(T)|` at `s = u + v I`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSample {
    pub u: f64,
    pub v: f64,
    pub det: f64,
}

fn slice_point(unit: &[f64], u: f64, v: f64) -> Paravector<f64> {
    Paravector::new(u, unit.iter().map(|c| v * c).collect())
}

fn sorted_unique(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite trace"));
    pts.dedup();
    pts
}

/// Sphere traces of the certificate's eigen-paravectors.
pub fn certified_slice<S: Scalar>(t: &CommutingParavectorOp<S>) -> Option<SpectrumSlice> {
    let cert = t.certificate.as_ref()?;
    let pts = cert.iter().map(|p| (p.x0.to_f64(), p.vector_norm_sq().to_f64().sqrt())).collect();
    Some(SpectrumSlice { points: sorted_unique(pts), certified: true })
}

/// `|det Q_{c,s}(T)|` over the grid, row-major in `u`.
pub fn scan(t: &CommutingParavectorOp<f64>, unit: &[f64], grid: &SearchGrid) -> Result<Vec<GridSample>> {
    if unit.len() != t.n {
        return Err(Error::DimensionMismatch(t.n, unit.len()));
    }
    if grid.steps < 2 {
        return Err(Error::OutOfRange("grid needs at least two steps per axis".into()));
    }
    let at = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * i as f64 / (grid.steps - 1) as f64;
    let mut out = Vec::with_capacity(grid.steps * grid.steps);
    for i in 0..grid.steps {
        for j in 0..grid.steps {
            let (u, v) = (at(grid.u.0, grid.u.1, i), at(grid.v.0, grid.v.1, j));
            out.push(GridSample { u, v, det: qc_det_abs(&slice_point(unit, u, v), t)? });
        }
    }
    Ok(out)
}

/// Golden-section minimisation of `f` on `[a, b]`.
fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..80 {
        let (c, d) = (b - g * (b - a), a + g * (b - a));
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    (a + b) / 2.0
}

/// Advisory trace: grid local minima of `|det|`, refined by alternating line searches and kept
/// when the refined determinant is below `tol · scale^d`.
pub fn scan_slice(t: &CommutingParavectorOp<f64>, unit: &[f64], grid: &SearchGrid, tol: f64) -> Result<SpectrumSlice> {
    let samples = scan(t, unit, grid)?;
    let n = grid.steps;
    let du = (grid.u.1 - grid.u.0) / (n - 1) as f64;
    let dv = (grid.v.1 - grid.v.0) / (n - 1) as f64;
    let det = |u: f64, v: f64| qc_det_abs(&slice_point(unit, u, v.abs()), t).unwrap_or(f64::INFINITY);
    let scale = (grid.u.0.abs().max(grid.u.1.abs()) + grid.v.0.abs().max(grid.v.1.abs()) + t.frobenius()).powi(2);
    let threshold = tol * scale.powi(t.d as i32);
    let mut pts = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let here = samples[i * n + j].det;
            let is_min = (i.saturating_sub(1)..(i + 2).min(n))
                .flat_map(|a| (j.saturating_sub(1)..(j + 2).min(n)).map(move |b| (a, b)))
                .all(|(a, b)| samples[a * n + b].det >= here);
            if !is_min {
                continue;
            }
            let (mut u, mut v) = (samples[i * n + j].u, samples[i * n + j].v);
            for _ in 0..4 {
                u = golden_min(|x| det(x, v), u - du, u + du);
                v = golden_min(|y| det(u, y), v - dv, v + dv).abs();
            }
            if det(u, v) < threshold {
                pts.push(((u * 1e9).round() / 1e9, (v * 1e9).round() / 1e9));
            }
        }
    }
    Ok(SpectrumSlice { points: sorted_unique(pts), certified: false })
}

/// Certified trace when available, otherwise the advisory grid scan.
pub fn spectrum_slice(t: &CommutingParavectorOp<f64>, unit: &[f64], search: Option<&SearchGrid>) -> Result<SpectrumSlice> {
    if let Some(c) = certified_slice(t) {
        return Ok(c);
    }
    match search {
        Some(g) => scan_slice(t, unit, g, 1e-10),
        None => Err(Error::OutOfRange("uncertified operator needs a search grid".into())),
    }
}

/// `T^2 - 2 s_0 T + |s|^2 I`, the noncommutative pseudo-resolvent operator.
pub fn q_f_op<S: Scalar>(s: &Paravector<S>, t: &CommutingParavectorOp<S>) -> Result<CliffordMatrix<S>> {
    if s.n() != t.n {
        return Err(Error::DimensionMismatch(t.n, s.n()));
    }
    let tc = t.to_clifford();
    let id = CliffordMatrix::identity(t.d, t.n);
    Ok(tc.mul(&tc).sub(&tc.scale(&(S::from_i64(2) * s.x0.clone()))).add(&id.scale(&s.norm_sq())))
}

/// `|det|` of the real representation of [`q_f_op`].
pub fn q_f_det_abs(s: &Paravector<f64>, t: &CommutingParavectorOp<f64>) -> Result<f64> {
    let r: Mat<f64> = q_f_op(s, t)?.real_representation();
    Ok(det_f64(&r).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certified_traces() {
        let x = CommutingParavectorOp::scalar(&Paravector::new(1.0, vec![2.0, 0.0]));
        assert_eq!(certified_slice(&x).unwrap().points, vec![(1.0, 2.0)]);
        let t = CommutingParavectorOp::diagonal(&[Paravector::new(1.0, vec![2.0, 0.0]), Paravector::real(2, 3.0)]).unwrap();
        assert_eq!(certified_slice(&t).unwrap().points, vec![(1.0, 2.0), (3.0, 0.0)]);
    }

    #[test]
    fn scan_finds_spheres() {
        let mut t = CommutingParavectorOp::diagonal(&[Paravector::new(1.0, vec![0.0, 2.0]), Paravector::real(2, 3.0)]).unwrap();
        t.certificate = None;
        let grid = SearchGrid { u: (-0.5, 4.5), v: (0.0, 3.0), steps: 41 };
        let found = spectrum_slice(&t, &[1.0, 0.0], Some(&grid)).unwrap();
        assert!(!found.certified);
        let want = [(1.0, 2.0), (3.0, 0.0)];
        assert_eq!(found.points.len(), 2, "{:?}", found.points);
        for (p, w) in found.points.iter().zip(want) {
            assert!((p.0 - w.0).abs() < 1e-6 && (p.1 - w.1).abs() < 1e-6, "{p:?}");
        }
    }
}
