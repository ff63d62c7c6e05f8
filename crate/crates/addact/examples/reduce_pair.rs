//! Quotient a degenerate pair by the largest ideal inside U and confirm the
//! original equation is a cone over the reduced one.

use addact::cli::PresentationFile;
use addact::geometry::check_cone;

const PAIR: &str = "\
vars: x, y
relations:
  x^4
  x^2*y
  x^3 - y^2
U: x, y, x^2, x*y
complement: x^3
";

fn main() -> addact::Result<()> {
    let pair = PresentationFile::parse(PAIR)?.build_pair(None)?;
    let ideal = pair.degeneracy_ideal()?;
    println!("largest ideal inside U has dimension {}", ideal.dim());

    let outcome = pair.reduce(None)?;
    println!("pair dimension {} -> {}", pair.dim(), outcome.pair.dim());

    let big = pair.hypersurface_equation()?;
    let small = outcome.pair.hypersurface_equation()?;
    println!("original: {big}");
    println!("reduced:  {small}");
    println!("kept coordinates: {:?}", outcome.kept_z_indices);
    println!(
        "cone over the reduced equation: {}",
        check_cone(&big, &small, &outcome.kept_z_indices)?
    );
    Ok(())
}
