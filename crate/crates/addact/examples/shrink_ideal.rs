//! Ideal surgery: replace the last irredundant generator by its variable
//! multiples, growing the quotient by exactly one dimension.  The caller's
//! generator order decides which generator is distinguished, so the same
//! ideal can shrink in genuinely different directions.

use addact::artin::Presentation;
use addact::construct::shrink_generators;

fn main() -> addact::Result<()> {
    for relations in [["x^3 - y^2", "x*y"], ["x*y", "x^3 - y^2"]] {
        let p = Presentation::parse(&["x", "y"], &relations)?;
        let s = shrink_generators(p.vars(), p.relations())?;
        let printed: Vec<String> = s.shrunk_relations().iter().map(|r| r.to_string()).collect();
        println!("generators in order ({})", relations.join(", "));
        println!("  distinguished: {}", s.distinguished());
        println!("  shrunk ideal:  ({})", printed.join(", "));
        println!(
            "  dimension {} -> {}, stable from degree {}",
            s.dim_before(),
            s.dim_after(),
            s.certificate_degree()
        );
    }
    Ok(())
}
