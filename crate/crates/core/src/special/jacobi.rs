//! Jacobi polynomials with half-integer parameters and `√π`-tagged Gamma values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::clifford::Paravector;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, rat, ratio, Rational};
use crate::special::binom::{binom_r, binom_top, factorial, rising};
use crate::special::coeffs::Parity;

/// `value * π^(sqrt_pi / 2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiTagged {
    pub value: Rational,
    pub sqrt_pi: i32,
}

impl PiTagged {
    pub fn rational(value: Rational) -> Self {
        PiTagged { value, sqrt_pi: 0 }
    }

    pub fn mul(&self, o: &Self) -> Self {
        PiTagged { value: &self.value * &o.value, sqrt_pi: self.sqrt_pi + o.sqrt_pi }
    }

    pub fn div(&self, o: &Self) -> Self {
        PiTagged { value: &self.value / &o.value, sqrt_pi: self.sqrt_pi - o.sqrt_pi }
    }

    /// The rational value, provided every `√π` cancelled.
    pub fn into_rational(self) -> Result<Rational> {
        if self.sqrt_pi != 0 {
            return Err(Error::UnmatchedSqrtPi(self.sqrt_pi));
        }
        Ok(self.value)
    }
}

/// `Γ(x)` for positive integers and half-integers, with `√π` kept as a tag.
pub fn gamma_tagged(x: &Rational) -> Result<PiTagged> {
    let two_x = x * rat(2);
    if !two_x.is_integer() {
        return Err(Error::OutOfRange(format!("gamma only supports integer and half-integer arguments, got {}", format_rational(x))));
    }
    if x.is_integer() {
        if !x.is_positive() {
            return Err(Error::GammaPole(format_rational(x)));
        }
        let n: u32 = x.to_integer().try_into().map_err(|_| Error::OutOfRange("gamma argument too large".into()))?;
        return Ok(PiTagged::rational(Rational::from_integer(factorial(n - 1))));
    }
    // x = k + 1/2
    let k: i64 = (x - ratio(1, 2)).to_integer().try_into().map_err(|_| Error::OutOfRange("gamma argument too large".into()))?;
    let value = if k >= 0 {
        let k = k as u32;
        Rational::new(factorial(2 * k), BigInt::from(4).pow(k) * factorial(k))
    } else {
        let k = (-k) as u32;
        let sign = if k.is_odd() { -BigInt::one() } else { BigInt::one() };
        Rational::new(sign * BigInt::from(4).pow(k) * factorial(k), factorial(2 * k))
    };
    Ok(PiTagged { value, sqrt_pi: 1 })
}

fn check_params(alpha: &Rational, beta: &Rational) -> Result<()> {
    if alpha <= &rat(-1) || beta <= &rat(-1) {
        return Err(Error::OutOfRange(format!(
            "Jacobi parameters must exceed -1, got ({}, {})",
            format_rational(alpha),
            format_rational(beta)
        )));
    }
    Ok(())
}

/// Weights `w_ν` with `P_n^{(α,β)}(z) = Σ_ν w_ν ((z-1)/2)^ν`, every Gamma ratio taken as a rising product.
fn shifted_weights(deg: u32, alpha: &Rational, beta: &Rational) -> Result<Vec<Rational>> {
    check_params(alpha, beta)?;
    let base = rat(deg as i64) + alpha + beta + rat(1);
    if deg > 0 && base.is_integer() && !base.is_positive() {
        return Err(Error::GammaPole(format_rational(&base)));
    }
    let nf = Rational::from_integer(factorial(deg));
    Ok((0..=deg)
        .map(|nu| {
            binom_r(deg as i64, nu as i64) * rising(&(alpha + rat(nu as i64 + 1)), deg - nu) * rising(&base, nu) / &nf
        })
        .collect())
}

/// `P_n^{(α,β)}(z)`.
pub fn jacobi_eval(deg: u32, alpha: &Rational, beta: &Rational, z: &Rational) -> Result<Rational> {
    let w = shifted_weights(deg, alpha, beta)?;
    let t = (z - rat(1)) / rat(2);
    Ok(w.iter().rev().fold(Rational::zero(), |acc, c| acc * &t + c))
}

/// Power-basis coefficients of `P_n^{(α,β)}` in `z`, lowest degree first.
pub fn jacobi_coefficients(deg: u32, alpha: &Rational, beta: &Rational) -> Result<Vec<Rational>> {
    let w = shifted_weights(deg, alpha, beta)?;
    let mut out = vec![Rational::zero(); deg as usize + 1];
    let half = ratio(1, 2);
    for (nu, c) in w.iter().enumerate() {
        // ((z-1)/2)^ν = 2^{-ν} Σ_i C(ν,i) z^i (-1)^{ν-i}
        let scale = c * num_traits::pow(half.clone(), nu);
        for i in 0..=nu {
            let sign = if (nu - i) % 2 == 0 { rat(1) } else { rat(-1) };
            out[i] += &scale * binom_r(nu as i64, i as i64) * sign;
        }
    }
    Ok(out)
}

/// `(-1)^m C(m+β, m)`, the value at `z = -1`.
pub fn jacobi_at_minus_one(m: u32, beta: &Rational) -> Rational {
    let sign = if m % 2 == 0 { rat(1) } else { rat(-1) };
    sign * binom_top(&(beta + rat(m as i64)), m as i64)
}

/// `H_l^{2m+2l-1}(x)` (odd) or `H_l^{2m+2l}(x)` (even) through the Jacobi closed form.
pub fn h_poly_via_jacobi(l: u32, m: u32, parity: Parity, x: &Paravector<Rational>) -> Result<Rational> {
    let r2 = x.norm_sq();
    if r2.is_zero() {
        return Err(Error::Pole);
    }
    let (li, mi) = (rat(l as i64), rat(m as i64));
    let sign = if m % 2 == 0 { rat(1) } else { rat(-1) };
    let sqrt_pi = PiTagged { value: sign, sqrt_pi: 1 };
    let (num, den_shift, alpha, extra) = match parity {
        Parity::Odd => (&mi + &li, ratio(1, 2), ratio(-1, 2), rat(1)),
        Parity::Even => (&mi + &li + rat(1), ratio(3, 2), ratio(1, 2), x.x0.clone()),
    };
    let pref = sqrt_pi
        .mul(&gamma_tagged(&num)?)
        .div(&gamma_tagged(&li)?.mul(&gamma_tagged(&(&mi + den_shift))?))
        .into_rational()?;
    let z = rat(1) - rat(2) * &x.x0 * &x.x0 / &r2;
    let p = jacobi_eval(m, &alpha, &(rat(2 * l as i64 - 1) / rat(2)), &z)?;
    Ok(pref * extra * num_traits::pow(r2, m as usize) * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let (a, b) = (ratio(-1, 2), ratio(1, 2));
        for z in [rat(0), rat(3), ratio(-2, 7)] {
            assert_eq!(jacobi_eval(0, &a, &b, &z).unwrap(), rat(1));
            assert_eq!(jacobi_eval(1, &a, &b, &z).unwrap(), &z - ratio(1, 2));
        }
        assert_eq!(jacobi_eval(1, &a, &b, &rat(-1)).unwrap(), ratio(-3, 2));
        assert_eq!(jacobi_coefficients(1, &a, &b).unwrap(), vec![ratio(-1, 2), rat(1)]);
        assert!(jacobi_eval(1, &rat(-1), &b, &rat(0)).is_err());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_tagged(&rat(5)).unwrap(), PiTagged::rational(rat(24)));
        assert_eq!(gamma_tagged(&ratio(1, 2)).unwrap(), PiTagged { value: rat(1), sqrt_pi: 1 });
        assert_eq!(gamma_tagged(&ratio(5, 2)).unwrap(), PiTagged { value: ratio(3, 4), sqrt_pi: 1 });
        assert_eq!(gamma_tagged(&ratio(-1, 2)).unwrap(), PiTagged { value: rat(-2), sqrt_pi: 1 });
        assert!(matches!(gamma_tagged(&rat(0)), Err(Error::GammaPole(_))));
        assert!(gamma_tagged(&ratio(1, 3)).is_err());
        assert!(gamma_tagged(&ratio(1, 2)).unwrap().into_rational().is_err());
    }
}
