//! Exact arithmetic in `R_n`: products, paravector inverses and slice coordinates.
//!
//! ```bash
//! cargo run -p finespec --example clifford_algebra
//! ```

use finespec::clifford::parse_paravector;
use finespec::scalar::{rat, ratio};
use finespec::Multivector;

fn main() -> finespec::Result<()> {
    let n = 3;
    let e1 = Multivector::unit(n, 1);
    let e2 = Multivector::unit(n, 2);
    println!("e1 e2 = {}", &e1 * &e2);
    println!("e2 e1 = {}", &e2 * &e1);
    println!("e1^2  = {}", &e1 * &e1);

    let x = parse_paravector("1+3/5e1-4/5e3", n)?;
    println!("x     = {}", x.to_mv());
    println!("x x̄   = {}", x.mul(&x.conj()));
    println!("x^-1  = {}", x.inverse()?.to_mv());
    println!("x^3   = {}", x.pow(3));

    let slice = x.slice_decompose()?;
    let unit: Vec<String> = slice.unit.iter().flatten().map(|c| c.to_string()).collect();
    println!("slice: u = {}, v = {}, I = ({})", slice.u, slice.v, unit.join(", "));
    assert_eq!(slice.reconstruct(), x);

    let y = Multivector::scalar(n, ratio(1, 2)) + &e1 * &e2;
    let z = &(&y * &x.to_mv()) * &y;
    println!("y x y = {z}");
    assert_eq!(&(&y * &x.to_mv()) * &y, &y * &(&x.to_mv() * &y));
    assert_eq!(slice.v, rat(1));
    Ok(())
}
