//! Expansions in powers of `s^{-1}` with rigorous tail bounds, and truncation orders
//! chosen from a target tolerance.
//!
//! ```bash
//! cargo run -p finespec --example kernel_series
//! ```

use finespec::kernels::{kernel_closed_form, qc_inv_pow, series_kernel, series_order_for, series_q_inv_pow, KernelSpec};
use finespec::opcalc::{op_norm_bound, op_series_order_for, qc_op_inv_pow, series_qc_op_inv_pow, CommutingParavectorOp};
use finespec::Paravector;

fn main() -> finespec::Result<()> {
    let s = Paravector::new(0.0, vec![4.0, 0.0, 0.0, 0.0, 0.0]);
    let x = Paravector::new(0.6, vec![0.0, 0.8, 0.0, 0.0, 0.0]);
    for order in [4, 16, 64] {
        let r = series_q_inv_pow(&s, &x, 2, order)?;
        let err = (&r.value - &qc_inv_pow(&s, &x, 2)?).norm();
        println!("Q^-2 K={order:>3}: error {err:.3e} <= bound {:.3e}", r.tail_bound);
    }

    let spec = KernelSpec::all(5)[0];
    let k = series_order_for(Some(&spec), 0, &s, &x, 1e-8)?;
    let r = series_kernel(&spec, &s, &x, k)?;
    let err = (&r.value - &kernel_closed_form(&spec, &s, &x)?).norm();
    println!("{spec:?}: K={k} gives bound {:.3e}, error {err:.3e}", r.tail_bound);

    let t = CommutingParavectorOp::diagonal(&[Paravector::new(0.2, vec![0.1, 0.0, 0.0]), Paravector::real(3, -0.3)])?;
    let s = Paravector::real(3, 2.0 * op_norm_bound(&t));
    let k = op_series_order_for(&s, &t, 1, 1e-8)?;
    let r = series_qc_op_inv_pow(&s, &t, 1, k)?;
    println!("operator Q^-1 at ‖T‖/|s| = 1/2: K={k}, bound {:.3e}, error {:.3e}", r.tail_bound, r.value.sub(&qc_op_inv_pow(&s, &t, 1)?).norm());
    Ok(())
}
