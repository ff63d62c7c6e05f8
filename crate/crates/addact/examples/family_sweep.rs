//! One non-degenerate pair for every dimension and degree in a window:
//! dimension n+1, hypersurface degree d, always a unique action.

use addact::families::family_pair;

fn main() -> addact::Result<()> {
    println!(" n  d  dim  degree  unique action");
    for n in 2..=6 {
        for d in 2..=n {
            let pair = family_pair(n, d)?;
            let f = pair.hypersurface_equation()?;
            println!(
                "{n:>2} {d:>2} {:>4} {:>7}  {}",
                pair.dim(),
                f.degree(),
                pair.is_nondegenerate()?
            );
        }
    }
    Ok(())
}
