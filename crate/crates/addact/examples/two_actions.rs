//! A degenerate pair's hypersurface carries at least two non-equivalent
//! actions.  Construct both and print the invariant telling them apart.

use addact::cli::PresentationFile;
use addact::construct::two_actions;

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
    let two = two_actions(&pair)?;
    println!("certificate: {}", two.certificate);
    println!("first:  {}", two.first.hypersurface_equation()?);
    println!("second: {}", two.second.hypersurface_equation()?);
    Ok(())
}
