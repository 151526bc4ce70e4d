use finespec::kernels::{kernel_closed_form, kernel_closed_form_symbolic, kernel_oracle, KernelSpec};
use finespec::scalar::{rat, ratio};
use finespec::{Paravector, Rational};

fn s_fixtures(n: usize) -> Vec<Paravector<Rational>> {
    vec![
        Paravector::real(n, rat(3)),
        Paravector::along(n, rat(2), 1, rat(1)),
        Paravector::new(ratio(1, 2), (0..n).map(|i| ratio(i as i64 % 3 - 1, 3)).collect()),
    ]
}

#[test]
fn closed_forms_match_oracle() {
    for n in [3u32, 5, 7] {
        for s in s_fixtures(n as usize) {
            for spec in KernelSpec::all(n) {
                let closed = kernel_closed_form_symbolic(&spec, &s).unwrap();
                let oracle = kernel_oracle(&spec, &s);
                assert!(closed.equal_rational(&oracle), "{spec:?} at s = {s:?}");
            }
        }
    }
}

#[test]
fn pointwise_agrees_with_symbolic() {
    let n = 5;
    let s = Paravector::along(n, rat(2), 2, rat(1));
    let x = Paravector::new(ratio(1, 3), vec![rat(1), ratio(-1, 2), rat(0), ratio(1, 4), rat(2)]);
    for spec in KernelSpec::all(n as u32) {
        let sym = kernel_closed_form_symbolic(&spec, &s).unwrap().eval(&x).unwrap();
        assert_eq!(kernel_closed_form(&spec, &s, &x).unwrap(), sym);
    }
}
