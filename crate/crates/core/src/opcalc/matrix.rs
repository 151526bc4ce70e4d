//! Real matrices, matrices over a slice plane and matrices with Clifford entries.

use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::plane::{Plane, PlaneElt};
use crate::scalar::Scalar;

/// Dense square real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<S> {
    pub d: usize,
    pub data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(d: usize) -> Self {
        Mat { d, data: vec![S::zero(); d * d] }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d);
        for i in 0..d {
            m.data[i * d + i] = S::one();
        }
        m
    }

    pub fn diag(v: &[S]) -> Self {
        let mut m = Self::zeros(v.len());
        for (i, x) in v.iter().enumerate() {
            m.data[i * v.len() + i] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::Parse("matrix must be square".into()));
        }
        Ok(Mat { d, data: rows.into_iter().flatten().collect() })
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.d + j]
    }

    pub fn add(&self, o: &Self) -> Self {
        Mat { d: self.d, data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mat { d: self.d, data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect() }
    }

    pub fn scale(&self, k: &S) -> Self {
        Mat { d: self.d, data: self.data.iter().map(|a| a.clone() * k.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.d;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] = out.data[i * d + j].clone() + a.clone() * o.data[k * d + j].clone();
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.to_f64().abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v.to_f64().powi(2)).sum::<f64>().sqrt()
    }

    pub fn to_f64(&self) -> Mat<f64> {
        Mat { d: self.d, data: self.data.iter().map(Scalar::to_f64).collect() }
    }
}

/// Matrix whose entries lie in one slice plane; multiplication is commutative entrywise.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneMatrix<S> {
    pub d: usize,
    pub data: Vec<PlaneElt<S>>,
}

impl<S: Scalar> PlaneMatrix<S> {
    pub fn zeros(d: usize) -> Self {
        PlaneMatrix { d, data: vec![PlaneElt::zero(); d * d] }
    }

    pub fn identity(d: usize) -> Self {
        Self::from_real(&Mat::identity(d))
    }

    pub fn from_real(m: &Mat<S>) -> Self {
        PlaneMatrix { d: m.d, data: m.data.iter().map(|v| PlaneElt::real(v.clone())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        PlaneMatrix { d: self.d, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        PlaneMatrix { d: self.d, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, plane: &Plane<S>, k: &PlaneElt<S>) -> Self {
        PlaneMatrix { d: self.d, data: self.data.iter().map(|a| plane.mul(a, k)).collect() }
    }

    pub fn scale_real(&self, k: &S) -> Self {
        PlaneMatrix { d: self.d, data: self.data.iter().map(|a| a.scale(k)).collect() }
    }

    pub fn mul(&self, plane: &Plane<S>, o: &Self) -> Self {
        let d = self.d;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] = out.data[i * d + j].add(&plane.mul(a, &o.data[k * d + j]));
                }
            }
        }
        out
    }

    pub fn pow(&self, plane: &Plane<S>, k: u32) -> Self {
        let mut acc = Self::identity(self.d);
        for _ in 0..k {
            acc = acc.mul(plane, self);
        }
        acc
    }

    /// Inverse and determinant by partial-pivot elimination in the plane.
    pub fn inverse_det(&self, plane: &Plane<S>) -> (Option<Self>, PlaneElt<S>) {
        let d = self.d;
        let mut a = self.clone();
        let mut inv = Self::identity(d);
        let mut det = PlaneElt::one();
        for col in 0..d {
            let pivot = (col..d)
                .filter(|&r| !a.data[r * d + col].is_zero())
                .max_by(|&r1, &r2| {
                    let n1 = plane.norm_sq(&a.data[r1 * d + col]).to_f64();
                    let n2 = plane.norm_sq(&a.data[r2 * d + col]).to_f64();
                    n1.partial_cmp(&n2).unwrap_or(std::cmp::Ordering::Equal)
                });
            let Some(p) = pivot else {
                return (None, PlaneElt::zero());
            };
            if p != col {
                for j in 0..d {
                    a.data.swap(p * d + j, col * d + j);
                    inv.data.swap(p * d + j, col * d + j);
                }
                det = det.neg();
            }
            let pv = a.data[col * d + col].clone();
            det = plane.mul(&det, &pv);
            let pinv = match plane.inv(&pv) {
                Ok(v) => v,
                Err(_) => return (None, PlaneElt::zero()),
            };
            for j in 0..d {
                a.data[col * d + j] = plane.mul(&a.data[col * d + j], &pinv);
                inv.data[col * d + j] = plane.mul(&inv.data[col * d + j], &pinv);
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let f = a.data[r * d + col].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let t = plane.mul(&f, &a.data[col * d + j]);
                    a.data[r * d + j] = a.data[r * d + j].sub(&t);
                    let t = plane.mul(&f, &inv.data[col * d + j]);
                    inv.data[r * d + j] = inv.data[r * d + j].sub(&t);
                }
            }
        }
        (Some(inv), det)
    }

    pub fn to_clifford(&self, plane: &Plane<S>) -> CliffordMatrix<S> {
        CliffordMatrix { d: self.d, n: plane.n(), entries: self.data.iter().map(|e| plane.to_mv(e)).collect() }
    }
}

/// `d × d` matrix of multivectors; products use the geometric product entrywise.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordMatrix<S: Scalar> {
    pub d: usize,
    pub n: usize,
    pub entries: Vec<Multivector<S>>,
}

impl<S: Scalar> CliffordMatrix<S> {
    pub fn zeros(d: usize, n: usize) -> Self {
        CliffordMatrix { d, n, entries: vec![Multivector::zero(n); d * d] }
    }

    pub fn identity(d: usize, n: usize) -> Self {
        Self::from_real(&Mat::identity(d), n)
    }

    pub fn from_real(m: &Mat<S>, n: usize) -> Self {
        CliffordMatrix { d: m.d, n, entries: m.data.iter().map(|v| Multivector::scalar(n, v.clone())).collect() }
    }

    /// `m * e_mask`.
    pub fn from_real_blade(m: &Mat<S>, n: usize, mask: usize) -> Self {
        CliffordMatrix { d: m.d, n, entries: m.data.iter().map(|v| Multivector::blade(n, mask, v.clone())).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Multivector<S> {
        &self.entries[i * self.d + j]
    }

    pub fn add(&self, o: &Self) -> Self {
        CliffordMatrix { d: self.d, n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CliffordMatrix { d: self.d, n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: &S) -> Self {
        CliffordMatrix { d: self.d, n: self.n, entries: self.entries.iter().map(|a| a.scale(k)).collect() }
    }

    /// Every entry multiplied on the right by `m`.
    pub fn right_mul(&self, m: &Multivector<S>) -> Self {
        CliffordMatrix { d: self.d, n: self.n, entries: self.entries.iter().map(|a| a * m).collect() }
    }

    /// Every entry multiplied on the left by `m`.
    pub fn left_mul(&self, m: &Multivector<S>) -> Self {
        CliffordMatrix { d: self.d, n: self.n, entries: self.entries.iter().map(|a| m * a).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.d;
        let mut out = Self::zeros(d, self.n);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &o.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * d + j] = &out.entries[i * d + j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.d, self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Frobenius norm over all entries and blades.
    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm().powi(2)).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().flat_map(|e| e.coeffs().iter()).fold(0.0, |m, v| m.max(v.to_f64().abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Multivector::is_zero)
    }

    pub fn to_f64(&self) -> CliffordMatrix<f64> {
        CliffordMatrix { d: self.d, n: self.n, entries: self.entries.iter().map(Multivector::to_f64).collect() }
    }

    /// Real matrix of left multiplication on `R^d ⊗ R_n`, size `d 2^n`.
    pub fn real_representation(&self) -> Mat<S> {
        let b = 1usize << self.n;
        let size = self.d * b;
        let mut out = Mat::zeros(size);
        for i in 0..self.d {
            for j in 0..self.d {
                let e = &self.entries[i * self.d + j];
                for col_blade in 0..b {
                    let prod = e * &Multivector::blade(self.n, col_blade, S::one());
                    for (row_blade, v) in prod.coeffs().iter().enumerate() {
                        if !v.is_zero() {
                            out.data[(i * b + row_blade) * size + j * b + col_blade] = v.clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// Induced max-row-sum norm of the real representation; submultiplicative.
    pub fn op_norm_inf(&self) -> f64 {
        let r = self.real_representation();
        (0..r.d).map(|i| (0..r.d).map(|j| r.get(i, j).to_f64().abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// Induced max-column-sum norm of the real representation.
    pub fn op_norm_1(&self) -> f64 {
        let r = self.real_representation();
        (0..r.d).map(|j| (0..r.d).map(|i| r.get(i, j).to_f64().abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// Upper bound `sqrt(‖·‖_1 ‖·‖_∞)` on the spectral norm of the real representation.
    pub fn op_norm_2_bound(&self) -> f64 {
        (self.op_norm_1() * self.op_norm_inf()).sqrt()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<serde_json::Value>> =
            (0..self.d).map(|i| (0..self.d).map(|j| self.get(i, j).to_json()).collect()).collect();
        serde_json::json!({ "d": self.d, "n": self.n, "entries": rows })
    }
}

/// Determinant of a real matrix by partial-pivot elimination.
pub fn det_f64(m: &Mat<f64>) -> f64 {
    let d = m.d;
    let mut a = m.data.clone();
    let mut det = 1.0;
    for col in 0..d {
        let p = (col..d).max_by(|&x, &y| a[x * d + col].abs().partial_cmp(&a[y * d + col].abs()).unwrap()).unwrap();
        if a[p * d + col] == 0.0 {
            return 0.0;
        }
        if p != col {
            for j in 0..d {
                a.swap(p * d + j, col * d + j);
            }
            det = -det;
        }
        let pv = a[col * d + col];
        det *= pv;
        for r in col + 1..d {
            let f = a[r * d + col] / pv;
            if f != 0.0 {
                for j in col..d {
                    a[r * d + j] -= f * a[col * d + j];
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    #[test]
    fn plane_inverse_round_trip() {
        let plane = Plane::new(vec![rat(0), rat(2)]);
        let e = |a: i64, b: i64| PlaneElt::new(rat(a), rat(b));
        let m = PlaneMatrix { d: 2, data: vec![e(1, 1), e(0, 2), e(3, 0), e(1, -1)] };
        let (inv, det) = m.inverse_det(&plane);
        let inv = inv.unwrap();
        assert_eq!(m.mul(&plane, &inv), PlaneMatrix::identity(2));
        // det = (1+w)(1-w) - 2w*3 = 1 + 4 - 6w
        assert_eq!(det, e(5, -6));
    }

    #[test]
    fn real_representation_is_multiplicative() {
        let a = CliffordMatrix::<Rational>::from_real_blade(&Mat::diag(&[rat(1), rat(2)]), 2, 1)
            .add(&CliffordMatrix::identity(2, 2));
        let b = CliffordMatrix::<Rational>::from_real_blade(&Mat::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(3)]]).unwrap(), 2, 2);
        assert_eq!(a.mul(&b).real_representation(), a.real_representation().mul(&b.real_representation()));
        assert!((det_f64(&Mat::diag(&[2.0, 3.0])) - 6.0).abs() < 1e-15);
    }
}
