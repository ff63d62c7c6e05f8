//! Build a finite-dimensional local algebra from its presentation and read
//! off the invariants: dimension, monomial basis, Hilbert function, socle,
//! Gorenstein property, nilpotency degree.

use addact::artin::Presentation;
use addact::exactpoly::Poly;

fn main() -> addact::Result<()> {
    let algebra = Presentation::parse(&["x", "y"], &["x^4", "x^2*y", "x^3 - y^2"])?.build()?;

    println!("dimension:  {}", algebra.dim());
    println!("basis:      {}", algebra.basis_names().join(", "));
    println!("hilbert:    {:?}", algebra.hilbert_function());
    println!("socle dim:  {}", algebra.socle().dim());
    println!("gorenstein: {}", algebra.is_gorenstein());
    println!("nilpotency: {}", algebra.nilpotency());

    // the binomial relation identifies two monomials
    let vars = algebra.vars().clone();
    let y2 = algebra.normal_form(&Poly::parse(&vars, "y^2")?)?;
    let x3 = algebra.normal_form(&Poly::parse(&vars, "x^3")?)?;
    println!("y^2 == x^3 in the quotient: {}", y2.to_scalars() == x3.to_scalars());
    Ok(())
}
