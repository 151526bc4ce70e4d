//! Coefficient families of the `D^β Δ^m` and `D̄^β Δ^m` kernels and the auxiliary limit constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, rat, Rational};
use crate::special::binom::{binom_r, factorial_r, gbinom, pow2};
use crate::special::constants::{c_bold, c_const, check_range};
use crate::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// `K1` is `(s - x̄)(s - x0)^ν Q^{-l}`, `K2` is `(s - x0)^ν Q^{-l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum BlockKind {
    K1,
    K2,
}

/// One summand `coeff * K_{nu, ell}` of a closed-form kernel.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelTerm {
    pub block: BlockKind,
    pub nu: u32,
    pub ell: u32,
    pub coeff: Rational,
}

/// The `a_j`, `b_j` arrays of one kernel; `half` is `k1` (odd β) or `k2` (even β).
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffFamily {
    pub side: Side,
    pub parity: Parity,
    pub half: u32,
    pub beta: u32,
    pub m: u32,
    pub h: u32,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

/// Oracle-fitted base coefficient `b̄_0` of the odd `D̄` family, keyed by `(h, m, k1)`.
///
/// Regenerate with `finespec table bbar0 --n <n>`.
const BBAR0: &[(u32, u32, u32, i64)] = &[
    (1, 0, 0, 0),
    (2, 0, 0, 1),
    (2, 1, 0, 0),
    (3, 0, 0, 2),
    (3, 0, 1, 0),
    (3, 1, 0, 1),
    (3, 2, 0, 0),
    (4, 0, 0, 3),
    (4, 0, 1, 2),
    (4, 1, 0, 2),
    (4, 1, 1, 0),
    (4, 2, 0, 2),
    (4, 3, 0, 0),
    (5, 0, 0, 4),
    (5, 0, 1, 6),
    (5, 0, 2, 0),
    (5, 1, 0, 3),
    (5, 1, 1, 4),
    (5, 2, 0, 4),
    (5, 2, 1, 0),
    (5, 3, 0, 6),
    (5, 4, 0, 0),
];

pub fn bbar0_table(h: u32, m: u32, k1: u32) -> Option<Rational> {
    BBAR0.iter().find(|e| e.0 == h && e.1 == m && e.2 == k1).map(|e| rat(e.3))
}

pub fn bbar0_entries() -> impl Iterator<Item = (u32, u32, u32, Rational)> {
    BBAR0.iter().map(|e| (e.0, e.1, e.2, rat(e.3)))
}

/// Coefficient family with `b̄_0` from the shipped table.
pub fn coeff_family(side: Side, beta: u32, m: u32, h: u32) -> Result<CoeffFamily> {
    let fam = coeff_family_with_base(side, beta, m, h, Rational::zero())?;
    if side == Side::Dbar && fam.parity == Parity::Odd {
        let base = bbar0_table(h, m, fam.half).ok_or_else(|| {
            Error::OutOfRange(format!(
                "no tabulated D̄ base coefficient for h={h}, m={m}, k1={}; regenerate with `finespec table bbar0`",
                fam.half
            ))
        })?;
        return coeff_family_with_base(side, beta, m, h, base);
    }
    Ok(fam)
}

/// Coefficient family with an explicit `b̄_0` (ignored except for odd `D̄`).
pub fn coeff_family_with_base(side: Side, beta: u32, m: u32, h: u32, bbar0: Rational) -> Result<CoeffFamily> {
    check_range(beta, m, h)?;
    let (hi, mi) = (h as i64, m as i64);
    let parity = if beta % 2 == 1 { Parity::Odd } else { Parity::Even };
    let half = beta / 2;
    let k = half as i64;
    let (a, b) = match (side, parity) {
        (Side::D, Parity::Odd) => {
            let b: Vec<Rational> = (0..=k)
                .map(|j| {
                    pow2(2 * j) * factorial_r(mi + k + j) * binom_r(hi - mi - k - j - 1, hi - mi - 2 * k - 1) * factorial_r(k + j)
                        / factorial_r(2 * j)
                })
                .collect();
            let a = (0..k).map(|j| rat(j + 1) / rat(k + j + 1) * &b[(j + 1) as usize]).collect();
            (a, b)
        }
        (Side::D, Parity::Even) => {
            let a: Vec<Rational> = (0..k)
                .map(|j| {
                    pow2(2 * j) * factorial_r(mi + k + j) * factorial_r(k + j - 1) / factorial_r(2 * j)
                        * binom_r(hi - mi - k - 1 - j, hi - mi - 2 * k)
                })
                .collect();
            let b = (0..k).map(|j| rat(2 * (k + j)) / rat(2 * j + 1) * &a[j as usize]).collect();
            (a, b)
        }
        (Side::Dbar, Parity::Odd) => {
            let a: Vec<Rational> = (0..=k)
                .map(|j| {
                    pow2(2 * j + 1) * factorial_r(mi + k + 1 + j) * factorial_r(k + j + 1) / factorial_r(2 * j + 1)
                        * gbinom(hi - mi - k - j - 2, k - j)
                })
                .collect();
            let mut b = vec![bbar0];
            b.extend((0..k).map(|j| &a[j as usize] / rat((j + 1) * (k - j))));
            (a, b)
        }
        (Side::Dbar, Parity::Even) => {
            let a: Vec<Rational> = (0..=k)
                .map(|j| {
                    pow2(2 * j) * factorial_r(mi + k + j) * factorial_r(k - j) * binom_r(k + j, 2 * j)
                        * gbinom(hi - mi - k - 1 - j, k - j)
                })
                .collect();
            let b = (0..k).map(|j| rat(2 * (k - j)) / rat(2 * j + 1) * &a[j as usize]).collect();
            (a, b)
        }
    };
    Ok(CoeffFamily { side, parity, half, beta, m, h, a, b })
}

impl CoeffFamily {
    /// `c_{β,m,h}` for `D`, `c̄_{β,m,h}` for `D̄`.
    pub fn prefactor(&self) -> Rational {
        match self.side {
            Side::D => c_const(self.beta, self.m, self.h),
            Side::Dbar => c_bold(self.beta, self.m, self.h),
        }
        .expect("range checked at construction")
    }

    /// The closed form as a linear combination of `K1`/`K2` blocks, prefactor included.
    pub fn kernel_terms(&self) -> Vec<KernelTerm> {
        let c = self.prefactor();
        let (m, k) = (self.m, self.half);
        let mut out = Vec::new();
        let mut push = |block, nu, ell, coeff: Rational| {
            if !coeff.is_zero() {
                out.push(KernelTerm { block, nu, ell, coeff: &c * coeff });
            }
        };
        let sign_b = if self.side == Side::D { rat(-1) } else { rat(1) };
        for (j, a) in self.a.iter().enumerate() {
            let j = j as u32;
            match self.parity {
                Parity::Odd => push(BlockKind::K1, 2 * j + 1, m + j + 2 + k, a.clone()),
                Parity::Even => push(BlockKind::K1, 2 * j, m + j + 1 + k, a.clone()),
            }
        }
        for (j, b) in self.b.iter().enumerate() {
            let j = j as u32;
            match self.parity {
                Parity::Odd => push(BlockKind::K2, 2 * j, m + 1 + k + j, &sign_b * b),
                Parity::Even => push(BlockKind::K2, 2 * j + 1, m + 1 + k + j, &sign_b * b),
            }
        }
        out
    }

    /// `Σa - Σb` for `D`, `Σa + Σb` for `D̄`: the kernel on the real axis is
    /// `prefactor * this * (s - x0)^{-2m-β-1}`.
    pub fn axis_sum(&self) -> Rational {
        let sa: Rational = self.a.iter().cloned().sum();
        let sb: Rational = self.b.iter().cloned().sum();
        match self.side {
            Side::D => sa - sb,
            Side::Dbar => sa + sb,
        }
    }

    /// CSV rows `side,beta,m,j,a_j,b_j`; missing entries are left empty.
    pub fn csv_rows(&self) -> Vec<String> {
        let side = match self.side {
            Side::D => "D",
            Side::Dbar => "Dbar",
        };
        let len = self.a.len().max(self.b.len());
        (0..len)
            .map(|j| {
                let f = |v: &Vec<Rational>| v.get(j).map(format_rational).unwrap_or_default();
                format!("{side},{},{},{j},{},{}", self.beta, self.m, f(&self.a), f(&self.b))
            })
            .collect()
    }
}

/// Auxiliary limit constant: `c(β,m)` (negative) for `D`, `c̃(β,m)` (positive) for `D̄`.
///
/// The kernel restricted to the real axis equals `aux * (-1)^m (2m+β)! (s - x0)^{-2m-β-1}`.
pub fn aux_limit_constant(beta: u32, m: u32, h: u32, side: Side) -> Result<Rational> {
    let fam = coeff_family(side, beta, m, h)?;
    let lower = match side {
        Side::D => h - m - 1,
        Side::Dbar => h - m,
    };
    Ok(fam.axis_sum() * pow2((beta + 2 * m) as i64) * factorial_r(h as i64)
        / (factorial_r(lower as i64) * factorial_r((2 * m + beta) as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_odd_base_case() {
        for h in 1..6 {
            for m in 0..h {
                let f = coeff_family(Side::D, 1, m, h).unwrap();
                assert!(f.a.is_empty());
                assert_eq!(f.b, vec![factorial_r(m as i64)]);
            }
        }
    }

    #[test]
    fn d_even_ratio() {
        for h in 2..7 {
            for beta in (2..=h).step_by(2) {
                for m in 0..=h - beta {
                    let f = coeff_family(Side::D, beta, m, h).unwrap();
                    let k2 = (beta / 2) as i64;
                    for (j, (a, b)) in f.a.iter().zip(&f.b).enumerate() {
                        let j = j as i64;
                        assert_eq!(b.clone(), rat(2 * (k2 + j)) / rat(2 * j + 1) * a);
                    }
                }
            }
        }
    }

    #[test]
    fn aux_signs() {
        for h in [2, 3, 4] {
            for beta in 1..=h {
                for m in 0..=h - beta {
                    assert!(aux_limit_constant(beta, m, h, Side::D).unwrap() < rat(0));
                    assert!(aux_limit_constant(beta, m, h, Side::Dbar).unwrap() > rat(0));
                }
            }
        }
    }

    #[test]
    fn range_errors() {
        assert!(coeff_family(Side::D, 0, 0, 2).is_err());
        assert!(coeff_family(Side::D, 2, 1, 2).is_err());
        assert!(coeff_family(Side::Dbar, 1, 0, 6).is_err());
    }
}
