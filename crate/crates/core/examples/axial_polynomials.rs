//! Harmonic and Clifford-Appell type polynomials in `x`, `x̄`, and their Jacobi form.
//!
//! ```bash
//! cargo run -p finespec --example axial_polynomials
//! ```

use finespec::scalar::{rat, ratio};
use finespec::special::{binom, h_poly, h_poly_via_jacobi, jacobi_coefficients, p_poly, Parity};
use finespec::Paravector;

fn main() -> finespec::Result<()> {
    println!("l,k,j,C");
    for row in h_poly(2, 4).csv_rows().into_iter().chain(p_poly(1, 3).csv_rows()) {
        println!("{row}");
    }
    for k in 1..=8 {
        assert_eq!(h_poly(1, k).coeff_sum(), finespec::Rational::from_integer(binom(k as i64, 1)));
    }

    let x = Paravector::new(ratio(1, 2), vec![rat(1), rat(0), ratio(-1, 3)]);
    let (l, m) = (2, 1);
    let direct = h_poly(l, 2 * m + 2 * l - 1).eval(&x);
    let jacobi = h_poly_via_jacobi(l, m, Parity::Odd, &x)?;
    println!("H_{l}^{} at x: direct {direct}, Jacobi {jacobi}", 2 * m + 2 * l - 1);
    assert_eq!(direct.scalar_part(), &jacobi);

    let p = jacobi_coefficients(2, &ratio(-1, 2), &ratio(3, 2))?;
    println!("P_2^(-1/2, 3/2)(z) coefficients: {}", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
    Ok(())
}
