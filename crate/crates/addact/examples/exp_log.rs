//! exp and log between the maximal ideal and the unipotent units, computed
//! exactly over the rationals.

use addact::artin::Presentation;
use addact::exactpoly::Poly;

fn main() -> addact::Result<()> {
    let algebra = Presentation::parse(&["x", "y"], &["x^4", "x^2*y", "x^3 - y^2"])?.build()?;
    let vars = algebra.vars().clone();

    let u = algebra.normal_form(&Poly::parse(&vars, "x + 2*y - 1/3*x^2")?)?;
    let e = algebra.exp_nilpotent(&u)?;
    println!("u     = {}", algebra.vector_to_poly(&u.to_scalars().unwrap()));
    println!("exp u = {}", algebra.vector_to_poly(&e.to_scalars().unwrap()));

    let back = algebra.log_unipotent(&e)?;
    println!("log exp u == u: {}", back.to_scalars() == u.to_scalars());

    // exp turns addition into multiplication
    let v = algebra.normal_form(&Poly::parse(&vars, "y + x^2")?)?;
    let both = algebra.exp_nilpotent(&u.try_add(&v)?)?;
    let product = algebra.mul_elements(&algebra.exp_nilpotent(&u)?, &algebra.exp_nilpotent(&v)?)?;
    println!(
        "exp(u + v) == exp(u) exp(v): {}",
        both.to_scalars() == product.to_scalars()
    );
    Ok(())
}
