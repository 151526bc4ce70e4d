//! Symbolic rational functions of `x`: the Cauchy kernel, Dirac and Laplace operators,
//! and the Fueter-Sce map annihilated by one more `D`.
//!
//! ```bash
//! cargo run -p finespec --example symbolic_oracle
//! ```

use finespec::kernels::{fueter_sce_kernel, kernel_closed_form_symbolic, kernel_oracle, KernelSpec};
use finespec::oracle::{build_cauchy_kernel_symbolic, Letter, OperatorWord};
use finespec::scalar::{rat, ratio};
use finespec::{Paravector, Side};

fn main() -> finespec::Result<()> {
    let n = 5;
    let h = (n - 1) / 2;
    let s = Paravector::along(n, rat(2), 1, rat(1));
    let cauchy = build_cauchy_kernel_symbolic(&s);
    println!("S_L^-1(s, x): {} numerator terms", cauchy.num_term_count());

    let fs = cauchy.apply_dirac_laplace(0, h, Side::D);
    let x = Paravector::new(ratio(1, 3), vec![rat(1), rat(0), ratio(-1, 2), rat(0), rat(1)]);
    println!("Δ^{h} S_L^-1 at x = {}", fs.eval(&x)?);
    assert_eq!(fs.eval(&x)?, fueter_sce_kernel(&s, &x, n as u32)?);
    println!("D Δ^{h} S_L^-1 vanishes: {}", fs.apply_word(&OperatorWord(vec![Letter::D])).is_zero());

    for spec in KernelSpec::all(n as u32) {
        let oracle = kernel_oracle(&spec, &s);
        let closed = kernel_closed_form_symbolic(&spec, &s)?;
        println!("{:?} beta={} m={}: closed form equals oracle = {}", spec.side, spec.beta, spec.m, closed.equal_rational(&oracle));
    }
    Ok(())
}
