//! Contour functional calculi for a commuting paravector operator, with the
//! spectral-safety and convergence diagnostics, and a slice scan of the S-spectrum.
//!
//! ```bash
//! FINESPEC_THREADS=2 cargo run -p finespec --example operator_calculus
//! ```

use finespec::opcalc::{functional_calculus, scan, spectrum_slice, CommutingParavectorOp, ResolventKind, SearchGrid, SliceContour};
use finespec::{Multivector, Paravector};

fn main() -> finespec::Result<()> {
    let n = 5;
    let t = CommutingParavectorOp::diagonal(&[
        Paravector::new(0.5, vec![0.3, 0.0, -0.2, 0.1, 0.0]),
        Paravector::new(-0.4, vec![0.0, 0.25, 0.0, 0.0, 0.2]),
        Paravector::real(n, 0.7),
    ])?;
    println!("components commute: {}", t.validate_commuting());
    println!("certified slice traces: {:?}", spectrum_slice(&t, &SliceContour::axis(n, 1), None)?.points);

    let contour = SliceContour::circle(SliceContour::axis(n, 1), 0.0, 2.0, 256)?;
    let mut cube = vec![Multivector::zero(n); 4];
    cube[3] = Multivector::one(n);
    let r = functional_calculus(&ResolventKind::D { beta: 1, m: 1 }, &cube, &t, &contour)?;
    println!("D Δ (s^3) at T: diagonal {:?}", (0..3).map(|i| r.value.get(i, i).scalar_part()).collect::<Vec<_>>());
    println!("N = {}, |N - 2N| = {:.2e}, min |det| = {:.3}", r.nodes, r.delta, r.min_det);

    let small = contour.with_radius(0.5);
    match functional_calculus(&ResolventKind::SLeft, &cube, &t, &small) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("radius 0.5 rejected: {e}"),
    }

    let grid = SearchGrid { u: (-1.0, 1.0), v: (0.0, 1.0), steps: 5 };
    println!("u,v,abs_det");
    for p in scan(&t, &SliceContour::axis(n, 1), &grid)? {
        println!("{},{},{:.4e}", p.u, p.v, p.det);
    }
    Ok(())
}
