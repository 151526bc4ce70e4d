//! Closed-form kernels of `D^β Δ^m` and `D̄^β Δ^m` applied to the Cauchy kernel,
//! their coefficient families and the sign of the real-axis constant.
//!
//! ```bash
//! cargo run -p finespec --example fine_structure_kernels
//! ```

use finespec::kernels::{kernel_closed_form, KernelSpec};
use finespec::scalar::{rat, ratio};
use finespec::special::aux_limit_constant;
use finespec::Paravector;

fn main() -> finespec::Result<()> {
    let n = 7;
    let s = Paravector::new(rat(3), vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0)]);
    let x = Paravector::new(ratio(1, 2), vec![rat(0), ratio(1, 3), rat(0), rat(0), rat(1), rat(0), rat(0)]);
    println!("side,beta,m,j,a_j,b_j");
    for spec in KernelSpec::all(n) {
        for row in spec.family()?.csv_rows() {
            println!("{row}");
        }
    }
    for spec in KernelSpec::all(n) {
        let value = kernel_closed_form(&spec, &s, &x)?;
        let aux = aux_limit_constant(spec.beta, spec.m, spec.h(), spec.side)?;
        println!("{:?} beta={} m={}: kernel = {value}; axis constant {aux}", spec.side, spec.beta, spec.m);
    }
    Ok(())
}
