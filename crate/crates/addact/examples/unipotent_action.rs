//! The additive-group action attached to a pair, printed as an exact matrix
//! of parameter polynomials, with its defining properties checked.

use addact::cli::PresentationFile;

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
    let action = pair.action_matrix()?;
    for row in action.row_strings() {
        println!("{row}");
    }
    let f = pair.hypersurface_equation()?;
    println!();
    println!("fixes the equation:  {}", action.leaves_invariant(&f)?);
    println!("group law holds:     {}", action.satisfies_group_law()?);
    println!("unipotent:           {}", action.is_unipotent()?);
    println!("fixed locus dim:     {}", pair.fixed_locus().dim());
    Ok(())
}
