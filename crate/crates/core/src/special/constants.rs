//! Structure constants of the fine-structure kernels.

use crate::error::{Error, Result};
use crate::scalar::{rat, Rational};
use crate::special::binom::{factorial_r, pochhammer_neg, pow2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantKind {
    Gamma,
    Sigma,
    C,
    CBold,
}

/// Sce exponent `(n-1)/2` for odd `n`.
pub fn sce_exponent(n: u32) -> Result<u32> {
    if n % 2 == 0 {
        return Err(Error::OutOfRange(format!("dimension must be odd, got {n}")));
    }
    Ok((n - 1) / 2)
}

/// `4^m m! (-h)_m`, the constant of `Δ^m S_L^{-1}`.
pub fn gamma(h: u32, m: u32) -> Result<Rational> {
    check(m <= h, || format!("gamma needs m <= h, got m={m}, h={h}"))?;
    Ok(pow2(2 * m as i64) * factorial_r(m as i64) * pochhammer_neg(h as i64, m as i64)?)
}

/// `2^(2l-1) (l-1)! (-h)_l`, the constant of `D Δ^(l-1) x^k`.
pub fn sigma(h: u32, l: u32) -> Result<Rational> {
    check(l >= 1 && l <= h, || format!("sigma needs 1 <= l <= h, got l={l}, h={h}"))?;
    Ok(pow2(2 * l as i64 - 1) * factorial_r(l as i64 - 1) * pochhammer_neg(h as i64, l as i64)?)
}

/// `2^β (h-m) γ_{n,m} / m!`, the prefactor of the `D` kernels.
pub fn c_const(beta: u32, m: u32, h: u32) -> Result<Rational> {
    check_range(beta, m, h)?;
    Ok(pow2(beta as i64) * rat((h - m) as i64) * gamma(h, m)? / factorial_r(m as i64))
}

/// `2^β 4^m (-h)_m`, the prefactor of the `D̄` kernels.
pub fn c_bold(beta: u32, m: u32, h: u32) -> Result<Rational> {
    check_range(beta, m, h)?;
    Ok(pow2(beta as i64 + 2 * m as i64) * pochhammer_neg(h as i64, m as i64)?)
}

/// Dispatch by kind; `a` is `m` (gamma), `l` (sigma) or `β` (c, c_bold) and `b` is `m` for the last two.
pub fn structure_constant(kind: ConstantKind, n: u32, a: u32, b: u32) -> Result<Rational> {
    let h = sce_exponent(n)?;
    match kind {
        ConstantKind::Gamma => gamma(h, a),
        ConstantKind::Sigma => sigma(h, a),
        ConstantKind::C => c_const(a, b, h),
        ConstantKind::CBold => c_bold(a, b, h),
    }
}

pub(crate) fn check_range(beta: u32, m: u32, h: u32) -> Result<()> {
    check(beta >= 1 && beta + m <= h, || format!("need beta >= 1 and beta + m <= h, got beta={beta}, m={m}, h={h}"))
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange(msg()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(structure_constant(ConstantKind::Gamma, 5, 1, 0).unwrap(), rat(-8));
        assert_eq!(structure_constant(ConstantKind::Sigma, 5, 2, 0).unwrap(), rat(16));
        for n in [3, 5, 7, 9] {
            assert_eq!(structure_constant(ConstantKind::Gamma, n, 0, 0).unwrap(), rat(1));
        }
        assert!(structure_constant(ConstantKind::C, 5, 2, 1).is_err());
        assert!(structure_constant(ConstantKind::Gamma, 4, 0, 0).is_err());
    }
}
