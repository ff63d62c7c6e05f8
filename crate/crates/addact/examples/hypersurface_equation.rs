//! From a pair (local algebra, generating subspace) to the projective
//! hypersurface it acts on.

use addact::cli::PresentationFile;
use addact::geometry::essential_variables;

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
    let f = pair.hypersurface_equation()?;
    println!("equation: {f}");
    println!("degree:   {}", f.degree());
    println!(
        "lives in P^{} and depends on {} of the {} coordinates",
        pair.dim() - 1,
        essential_variables(&f)?,
        pair.dim()
    );
    Ok(())
}
