use num_traits::{Signed, Zero};
use proptest::prelude::*;

use finespec::kernels::{kernel_closed_form, kernel_closed_form_symbolic, qc_inv_pow, series_q_inv_pow, KernelSpec};
use finespec::opcalc::{qc_op_inv_pow, CommutingParavectorOp};
use finespec::scalar::{rat, ratio};
use finespec::special::{binom, h_poly, jacobi_coefficients, jacobi_eval, p_poly};
use finespec::{Multivector, Paravector, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn multivector(n: usize) -> impl Strategy<Value = Multivector<Rational>> {
    proptest::collection::vec(small_rational(), 1 << n).prop_map(move |c| Multivector::from_coeffs(n, c).unwrap())
}

fn paravector(n: usize) -> impl Strategy<Value = Paravector<Rational>> {
    (small_rational(), proptest::collection::vec(small_rational(), n)).prop_map(|(x0, xv)| Paravector::new(x0, xv))
}

fn odd_n() -> impl Strategy<Value = usize> {
    prop_oneof![Just(3usize), Just(5), Just(7)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_is_associative((a, b, c) in odd_n().prop_flat_map(|n| (multivector(n), multivector(n), multivector(n)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn paravector_times_conjugate_is_norm(x in odd_n().prop_flat_map(paravector)) {
        prop_assert_eq!(x.mul(&x.conj()), Multivector::scalar(x.n(), x.norm_sq()));
    }

    #[test]
    fn paravector_powers_stay_axial(x in paravector(5), k in 0u32..7) {
        prop_assert!(x.pow(k).is_paravector());
    }

    #[test]
    fn coefficient_sum_is_binomial(l in 1u32..5, extra in 0u32..16) {
        let k = 2 * l - 1 + extra;
        prop_assert_eq!(h_poly(l, k).coeff_sum(), Rational::from_integer(binom(k as i64, 2 * l as i64 - 1)));
    }

    #[test]
    fn harmonic_polys_are_real(x in paravector(5), l in 1u32..4, extra in 0u32..6) {
        prop_assert!(h_poly(l, 2 * l - 1 + extra).eval(&x).is_scalar());
    }

    #[test]
    fn appell_relation_holds(x in paravector(3), l in 1u32..4, k in 0u32..9) {
        let rhs = &h_poly(l + 1, k + 1).eval(&x) - &(&x.conj().to_mv() * &h_poly(l + 1, k).eval(&x));
        prop_assert_eq!(p_poly(l, k).eval(&x), rhs);
    }

    #[test]
    fn jacobi_coefficients_evaluate(deg in 0u32..7, a in small_rational(), b in 0i64..6, z in small_rational()) {
        let alpha = a.abs();
        let beta = ratio(2 * b + 1, 2);
        let coeffs = jacobi_coefficients(deg, &alpha, &beta).unwrap();
        let horner = coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &z + c);
        prop_assert_eq!(jacobi_eval(deg, &alpha, &beta, &z).unwrap(), horner);
    }

    #[test]
    fn pointwise_kernel_matches_symbolic(x in paravector(3)) {
        let s = Paravector::new(rat(4), vec![rat(1), rat(0), ratio(1, 2)]);
        for spec in KernelSpec::all(3) {
            let symbolic = kernel_closed_form_symbolic(&spec, &s).unwrap().eval(&x);
            match (kernel_closed_form(&spec, &s, &x), symbolic) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (a, b) => prop_assert!(a.is_err() && b.is_err()),
            }
        }
    }

    #[test]
    fn series_error_within_tail_bound(x in paravector(3), l in 1u32..4, order in 1u32..14) {
        let s = Paravector::new(rat(0), vec![rat(12), rat(0), rat(5)]);
        prop_assume!(x.norm_sq() < ratio(169 * 81, 100));
        let exact = qc_inv_pow(&s, &x, l).unwrap();
        let r = series_q_inv_pow(&s, &x, l, order).unwrap();
        prop_assert!((&r.value - &exact).to_f64().norm() <= r.tail_bound);
    }

    #[test]
    fn diagonal_operator_inverts_entrywise(a in paravector(3), b in paravector(3), l in 1u32..3) {
        let s = Paravector::new(rat(0), vec![rat(30), rat(0), rat(0)]);
        let t = CommutingParavectorOp::diagonal(&[a.clone(), b.clone()]).unwrap();
        let q = qc_op_inv_pow(&s, &t, l).unwrap();
        prop_assert_eq!(q.get(0, 0), &qc_inv_pow(&s, &a, l).unwrap());
        prop_assert_eq!(q.get(1, 1), &qc_inv_pow(&s, &b, l).unwrap());
        prop_assert!(q.get(0, 1).is_zero());
    }
}
