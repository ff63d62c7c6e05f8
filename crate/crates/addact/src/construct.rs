//! Ideal surgery behind the "two actions" construction.
//!
//! A degenerate pair can be rebuilt from its reduced core in two genuinely
//! different ways: tack on a square-zero variable, or shrink the defining
//! ideal of the core by one dimension and re-normalize the old data inside
//! the bigger algebra.  Both rebuilds land on the same hypersurface, but the
//! ambient algebras have different embedding dimensions, so the actions they
//! induce cannot be conjugate.  This module implements the two rebuilds and
//! the exact ideal-membership test they lean on.
//!
//! Membership is decided by building the quotient algebra and reducing to
//! normal form.  For an m-primary ideal the truncated span underlying the
//! build contains the full degree-D slice of the ideal once the dimension
//! chain stabilizes, so a zero normal form is an exact certificate, not an
//! approximation.

use crate::artin::Presentation;
use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Scalar, Vars};
use crate::hpair::{invariant_vector, HPair};

/// Upper bound on full rewrite passes in `shrink_generators`.  After pruning,
/// the last generator of an irredundant system always shrinks strictly, so a
/// second pass only happens when the pruning had to keep a generator it could
/// not certify; the limit is a safety net, not a tuning knob.
pub const SHRINK_PASS_LIMIT: usize = 64;

/// Exact ideal membership for m-primary ideals: `f` lies in the ideal that
/// `relations` generate inside the localization at the irrelevant maximal
/// ideal.  An empty or all-zero relation list names the zero ideal.
///
/// Fails with `TruncationCapExceeded` when the quotient is not
/// finite-dimensional, since no truncation can then certify membership.
pub fn ideal_membership(vars: &Vars, relations: &[Poly], f: &Poly) -> Result<bool> {
    let live = nonzero(relations);
    if live.is_empty() {
        return Ok(f.is_zero());
    }
    let algebra = Presentation::new(vars.clone(), live)?.build()?;
    Ok(algebra.normal_form(f)?.is_zero())
}

/// Mutual containment of two relation lists, as ideals.
pub fn ideals_equal(vars: &Vars, left: &[Poly], right: &[Poly]) -> Result<bool> {
    Ok(contains_all(vars, left, right)? && contains_all(vars, right, left)?)
}

fn contains_all(vars: &Vars, ideal: &[Poly], members: &[Poly]) -> Result<bool> {
    let live = nonzero(ideal);
    if live.is_empty() {
        return Ok(members.iter().all(Poly::is_zero));
    }
    let algebra = Presentation::new(vars.clone(), live)?.build()?;
    for f in members {
        if !algebra.normal_form(f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn nonzero(relations: &[Poly]) -> Vec<Poly> {
    relations.iter().filter(|f| !f.is_zero()).cloned().collect()
}

/// Membership test used while pruning: is `f` in the ideal of the `others`?
///
/// `probe` is the stabilization degree of the full system plus a margin.  If
/// `f` were a member, the others would generate the very same ideal, which
/// stabilizes at the same degree and therefore builds under `probe`; so a cap
/// overflow here is an exact proof that the ideals differ and `f` must stay.
/// Capping the probe also keeps non-finite trial quotients from chewing
/// through huge truncated spans.
fn redundant_over(vars: &Vars, others: &[Poly], f: &Poly, probe: u32) -> Result<bool> {
    match Presentation::new(vars.clone(), others.to_vec())?.with_cap(probe).build() {
        Ok(algebra) => Ok(algebra.normal_form(f)?.is_zero()),
        Err(Error::TruncationCapExceeded { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Drop every relation that is a member of the ideal generated by the rest.
/// Walks from the back so that of two interchangeable generators the one with
/// the smaller index is retained.  Zero polynomials are dropped up front; an
/// empty result is the zero ideal, which cannot be shrunk.
fn prune_redundant(vars: &Vars, relations: &[Poly], probe: u32) -> Result<Vec<Poly>> {
    let mut kept = nonzero(relations);
    if kept.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let mut i = kept.len();
    while i > 0 && kept.len() > 1 {
        i -= 1;
        let mut others = kept.clone();
        others.remove(i);
        if redundant_over(vars, &others, &kept[i], probe)? {
            kept.remove(i);
        }
    }
    Ok(kept)
}

/// Outcome of one strict shrink of a relation system.
#[derive(Clone, Debug)]
pub struct ShrinkResult {
    generators: Vec<Poly>,
    shrunk_relations: Vec<Poly>,
    certificate_degree: u32,
    dim_before: usize,
    dim_after: usize,
    passes: usize,
}

impl ShrinkResult {
    /// The pruned input system, reordered so the distinguished generator is
    /// last.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// The generator that was traded for its variable multiples.
    pub fn distinguished(&self) -> &Poly {
        self.generators.last().expect("nonempty by construction")
    }

    /// Relation list of the shrunken ideal: the untouched generators in their
    /// original order, then one multiple of the distinguished generator per
    /// ambient variable.
    pub fn shrunk_relations(&self) -> &[Poly] {
        &self.shrunk_relations
    }

    /// Truncation degree at which the strictness of the shrink was verified.
    pub fn certificate_degree(&self) -> u32 {
        self.certificate_degree
    }

    pub fn dim_before(&self) -> usize {
        self.dim_before
    }

    pub fn dim_after(&self) -> usize {
        self.dim_after
    }

    /// Number of rewrite passes used; 1 unless pruning was inconclusive.
    pub fn passes(&self) -> usize {
        self.passes
    }
}

/// Shrink an m-primary ideal by one dimension.
///
/// After pruning redundant generators, walk the system from last to first;
/// for each candidate, replace it by its products with the ambient variables
/// and test whether the candidate survives in the trial quotient.  The first
/// strict shrink wins.  If no candidate is strict (possible only when pruning
/// kept an uncertified generator), the last trial system presents the same
/// ideal with the candidate pushed into higher degree, so it is adopted,
/// re-pruned, and the walk restarts.
///
/// The quotient dimension grows by exactly one: the old ideal is the shrunken
/// one plus the span of the distinguished generator, whose variable multiples
/// were all kept.
pub fn shrink_generators(vars: &Vars, relations: &[Poly]) -> Result<ShrinkResult> {
    let live = nonzero(relations);
    if live.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let full = Presentation::new(vars.clone(), live.clone())?.build()?;
    let dim_before = full.dim();
    // Probe cap for member and trial builds.  A one-step shrink contains the
    // maximal ideal times a generator, so it stabilizes at most one degree
    // later than the full ideal; anything needing more is a different ideal.
    let probe = full.stab_degree() + 2;
    let mut system = prune_redundant(vars, &live, probe)?;
    let variables: Vec<Poly> = (0..vars.len())
        .map(|i| Poly::var(vars, i))
        .collect::<Result<_>>()?;

    let mut passes = 0;
    loop {
        passes += 1;
        if passes > SHRINK_PASS_LIMIT {
            return Err(Error::PassLimitExceeded { passes: SHRINK_PASS_LIMIT });
        }
        let mut fallback = None;
        for i in (0..system.len()).rev() {
            let candidate = system[i].clone();
            let multiples: Vec<Poly> = variables
                .iter()
                .map(|x| x.try_mul(&candidate))
                .collect::<Result<_>>()?;
            let mut trial = system.clone();
            trial.splice(i..i + 1, multiples.iter().cloned());
            let built = Presentation::new(vars.clone(), trial.clone())?
                .with_cap(probe)
                .build()?;
            if !built.normal_form(&candidate)?.is_zero() {
                let dim_after = built.dim();
                if dim_after != dim_before + 1 {
                    return Err(Error::InternalInvariantViolation(format!(
                        "strict shrink changed the dimension from {dim_before} to {dim_after}"
                    )));
                }
                let mut generators = system;
                generators.remove(i);
                let mut shrunk_relations = generators.clone();
                generators.push(candidate);
                shrunk_relations.extend(multiples);
                return Ok(ShrinkResult {
                    generators,
                    shrunk_relations,
                    certificate_degree: built.stab_degree(),
                    dim_before,
                    dim_after,
                    passes,
                });
            }
            if fallback.is_none() {
                fallback = Some(trial);
            }
        }
        // Every candidate was recoverable from its own trial system, so the
        // ideal is unchanged; adopt the last trial and try again from clean.
        system = prune_redundant(vars, &fallback.expect("system is nonempty"), probe)?;
    }
}

/// Rebuild a pair one dimension up by adjoining a fresh square-zero variable
/// annihilated by the maximal ideal, and widening U by it.
///
/// The new variable is slotted in right after the degree-one block of U, so
/// the coordinate order of the synthesized equation keeps the old generators
/// in front.  The result reduces back to `base` by quotienting out the new
/// variable.
pub fn add_variable_pair(base: &HPair) -> Result<HPair> {
    let algebra = base.algebra();
    let old_vars = algebra.vars();
    let k = old_vars.len();
    let big_vars = Vars::new(
        old_vars
            .names()
            .iter()
            .cloned()
            .chain([fresh_name(old_vars)]),
    );
    let embed: Vec<usize> = (0..k).collect();

    let mut relations: Vec<Poly> = algebra
        .presentation()
        .relations()
        .iter()
        .map(|r| r.remap(&big_vars, &embed))
        .collect::<Result<_>>()?;
    let new_var = Poly::var(&big_vars, k)?;
    for i in 0..k {
        relations.push(Poly::var(&big_vars, i)?.try_mul(&new_var)?);
    }
    relations.push(new_var.pow(2));

    let big = Presentation::new(big_vars.clone(), relations)?
        .with_cap(algebra.presentation().cap())
        .build()?;
    if big.dim() != algebra.dim() + 1 {
        return Err(Error::InternalInvariantViolation(format!(
            "adding a square-zero variable moved the dimension from {} to {}",
            algebra.dim(),
            big.dim()
        )));
    }

    let lift = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        big.coords_of(&algebra.vector_to_poly(v).remap(&big_vars, &embed)?)
    };
    let old_u: Vec<Poly> = base.u_polys();
    let cut = old_u
        .iter()
        .take_while(|p| p.total_degree() == Some(1) && p.min_degree() == Some(1))
        .count();
    let mut u_vectors = Vec::with_capacity(base.u_vectors().len() + 1);
    for (pos, v) in base.u_vectors().iter().enumerate() {
        if pos == cut {
            u_vectors.push(big.coords_of(&new_var)?);
        }
        u_vectors.push(lift(v)?);
    }
    if cut == base.u_vectors().len() {
        u_vectors.push(big.coords_of(&new_var)?);
    }
    let complement = lift(base.complement())?;
    HPair::new(&big, u_vectors, Some(complement))
}

/// Re-present a pair over its embedding: variables that a linear relation
/// collapsed away are substituted out of the presentation.  Reduction leaves
/// such variables behind (the killed ideal generators join the relation list
/// verbatim), and shrinking a system that still lists a dead variable would
/// just resurrect it instead of deforming the ideal proper.
///
/// The staircase basis never mentions a collapsed variable, so the basis, and
/// with it every coordinate vector of the pair, carries over unchanged.
pub fn minimal_pair(pair: &HPair) -> Result<HPair> {
    let algebra = pair.algebra();
    let vars = algebra.vars();
    let mut keep: Vec<usize> = algebra
        .basis()
        .iter()
        .filter(|m| m.degree() == 1)
        .map(|m| m.exps().iter().position(|&e| e == 1).expect("degree one"))
        .collect();
    keep.sort_unstable();
    if keep.len() == vars.len() {
        return Ok(pair.clone());
    }
    for m in algebra.basis() {
        if m.exps().iter().enumerate().any(|(i, &e)| e > 0 && !keep.contains(&i)) {
            return Err(Error::InternalInvariantViolation(
                "a basis monomial mentions a collapsed variable".into(),
            ));
        }
    }

    let small_vars = Vars::new(keep.iter().map(|&i| vars.names()[i].clone()));
    let shift: Vec<usize> = (0..vars.len())
        .map(|i| keep.iter().position(|&k| k == i).unwrap_or(0))
        .collect();
    let mut images = Vec::with_capacity(vars.len());
    for i in 0..vars.len() {
        let v = algebra.coords_of(&Poly::var(vars, i)?)?;
        images.push(algebra.vector_to_poly(&v).remap(&small_vars, &shift)?);
    }
    let relations: Vec<Poly> = algebra
        .presentation()
        .relations()
        .iter()
        .map(|r| r.substitute(&images))
        .collect::<Result<_>>()?;
    let small = Presentation::new(small_vars, nonzero(&relations))?
        .with_cap(algebra.presentation().cap())
        .build()?;
    if small.basis_names() != algebra.basis_names() {
        return Err(Error::InternalInvariantViolation(
            "re-presenting over the embedding changed the basis".into(),
        ));
    }
    HPair::new(&small, pair.u_vectors().to_vec(), Some(pair.complement().to_vec()))
}

/// Rebuild a pair one dimension up by shrinking its defining ideal: the old
/// U generators re-normalize inside the bigger algebra, and the class of the
/// distinguished generator, nonzero there by the shrink certificate, joins
/// them as the last U vector.
pub fn shrunk_pair(base: &HPair) -> Result<HPair> {
    let base = minimal_pair(base)?;
    let algebra = base.algebra();
    let vars = algebra.vars();
    let shrink = shrink_generators(vars, algebra.presentation().relations())?;
    let big = Presentation::new(vars.clone(), shrink.shrunk_relations().to_vec())?
        .with_cap(algebra.presentation().cap())
        .build()?;
    if big.dim() != shrink.dim_after() {
        return Err(Error::InternalInvariantViolation(
            "rebuilt shrunken algebra disagrees with the shrink certificate".into(),
        ));
    }

    let mut u_vectors = Vec::with_capacity(base.u_vectors().len() + 1);
    for v in base.u_vectors() {
        u_vectors.push(big.coords_of(&algebra.vector_to_poly(v))?);
    }
    u_vectors.push(big.coords_of(shrink.distinguished())?);
    let complement = big.coords_of(&algebra.vector_to_poly(base.complement()))?;
    HPair::new(&big, u_vectors, Some(complement))
}

fn fresh_name(vars: &Vars) -> String {
    let taken = vars.names();
    for short in ["w", "v", "u"] {
        if taken.iter().all(|n| n != short) {
            return short.to_string();
        }
    }
    (1..)
        .map(|i| format!("w{i}"))
        .find(|c| taken.iter().all(|n| n != c))
        .expect("some numbered name is free")
}

/// Two provably non-equivalent actions living on the same hypersurface.
#[derive(Clone, Debug)]
pub struct TwoActions {
    pub first: HPair,
    pub second: HPair,
    /// Invariant separating the two ambient algebras, e.g. their embedding
    /// dimensions.
    pub certificate: String,
}

/// For a degenerate pair, produce two pairs of the same dimension that both
/// reduce to the same core but whose algebras are non-isomorphic, certified
/// by an invariant.  Fails with `NondegenerateInput` when the pair admits no
/// second action, i.e. when U contains no nonzero ideal.
pub fn two_actions(pair: &HPair) -> Result<TwoActions> {
    if pair.degeneracy_ideal()?.is_zero() {
        return Err(Error::NondegenerateInput);
    }
    let core = minimal_pair(&pair.reduce(None)?.pair)?;
    let gap = pair.dim() - core.dim();

    let mut first = core.clone();
    for _ in 0..gap {
        first = add_variable_pair(&first)?;
    }
    let mut second = shrunk_pair(&core)?;
    for _ in 1..gap {
        second = add_variable_pair(&second)?;
    }

    let e1 = first.algebra().embedding_dim();
    let e2 = second.algebra().embedding_dim();
    if e1 != e2 + 1 {
        return Err(Error::InternalInvariantViolation(format!(
            "rebuilt embedding dimensions {e1} and {e2} do not differ by one"
        )));
    }
    let certificate = invariant_vector(first.algebra())
        .nonequivalence_certificate(&invariant_vector(second.algebra()))
        .ok_or_else(|| {
            Error::InternalInvariantViolation(
                "rebuilt pairs are not separated by their invariants".into(),
            )
        })?;
    Ok(TwoActions { first, second, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpair::proxy_equal;

    fn vars(names: &[&str]) -> Vars {
        Vars::new(names.iter().copied())
    }

    fn polys(vs: &Vars, texts: &[&str]) -> Vec<Poly> {
        texts.iter().map(|t| Poly::parse(vs, t).unwrap()).collect()
    }

    // Relation order matters downstream: the shrink candidate is the last
    // irredundant generator, and x*y is the one whose multiples rebuild the
    // curve algebra.
    fn curve_core() -> HPair {
        let a = Presentation::parse(&["x", "y"], &["x^3 - y^2", "x*y"])
            .unwrap()
            .build()
            .unwrap();
        let names = a.basis_names();
        let pos = |n: &str| names.iter().position(|b| b == n).unwrap();
        let unit = |n: &str| {
            let mut v = vec![Scalar::from_integer(0.into()); a.dim()];
            v[pos(n)] = Scalar::from_integer(1.into());
            v
        };
        HPair::new(&a, vec![unit("x"), unit("y"), unit("x^2")], None).unwrap()
    }

    #[test]
    fn membership_matches_the_worked_examples() {
        let xy = vars(&["x", "y"]);
        let f = Poly::parse(&xy, "x*y").unwrap();
        assert!(ideal_membership(&xy, &polys(&xy, &["x*y", "x^3 - y^2"]), &f).unwrap());
        assert!(!ideal_membership(&xy, &polys(&xy, &["x^2*y", "x^4", "x^3 - y^2"]), &f).unwrap());

        let x = vars(&["x"]);
        let f5 = Poly::parse(&x, "x^5").unwrap();
        assert!(ideal_membership(&x, &polys(&x, &["x^4"]), &f5).unwrap());
        assert!(!ideal_membership(&x, &polys(&x, &["x^4"]), &Poly::parse(&x, "x^3").unwrap()).unwrap());
    }

    #[test]
    fn membership_needs_a_finite_quotient() {
        let xy = vars(&["x", "y"]);
        let err = ideal_membership(&xy, &polys(&xy, &["x*y"]), &Poly::parse(&xy, "x").unwrap())
            .unwrap_err();
        assert!(matches!(err, Error::TruncationCapExceeded { .. }));
    }

    #[test]
    fn membership_in_the_zero_ideal_is_being_zero() {
        let x = vars(&["x"]);
        assert!(ideal_membership(&x, &[], &Poly::zero(&x)).unwrap());
        assert!(!ideal_membership(&x, &[Poly::zero(&x)], &Poly::parse(&x, "x").unwrap()).unwrap());
    }

    #[test]
    fn equal_ideals_under_different_generators() {
        let xy = vars(&["x", "y"]);
        let shrunk = polys(&xy, &["x^3 - y^2", "x^2*y", "x*y^2"]);
        let original = polys(&xy, &["x^2*y", "x^4", "x^3 - y^2"]);
        assert!(ideals_equal(&xy, &shrunk, &original).unwrap());

        let alt = polys(&xy, &["x*y", "x^4 - x*y^2", "x^3*y - y^3"]);
        let monomial = polys(&xy, &["x*y", "x^4", "y^3"]);
        assert!(ideals_equal(&xy, &alt, &monomial).unwrap());
        assert!(!ideals_equal(&xy, &shrunk, &alt).unwrap());
    }

    #[test]
    fn shrink_on_the_minimal_curve_system() {
        let xy = vars(&["x", "y"]);
        let rels = polys(&xy, &["x^3 - y^2", "x*y"]);
        let out = shrink_generators(&xy, &rels).unwrap();
        assert_eq!(out.distinguished(), &rels[1]);
        assert_eq!(out.generators(), rels.as_slice());
        assert_eq!(
            out.shrunk_relations(),
            polys(&xy, &["x^3 - y^2", "x^2*y", "x*y^2"]).as_slice()
        );
        assert_eq!((out.dim_before(), out.dim_after()), (5, 6));
        assert_eq!(out.passes(), 1);
        assert!(out.certificate_degree() >= 3);
    }

    #[test]
    fn shrink_prunes_redundant_generators_first() {
        let xy = vars(&["x", "y"]);
        // x^4 and x^2*y are already in the ideal of the other two; walking
        // from the back keeps the earlier, irredundant generators.
        let rels = polys(&xy, &["x^4", "x^2*y", "x^3 - y^2", "x*y"]);
        let out = shrink_generators(&xy, &rels).unwrap();
        assert_eq!(out.generators(), polys(&xy, &["x^3 - y^2", "x*y"]).as_slice());
        assert_eq!(
            out.shrunk_relations(),
            polys(&xy, &["x^3 - y^2", "x^2*y", "x*y^2"]).as_slice()
        );
        assert_eq!((out.dim_before(), out.dim_after()), (5, 6));
    }

    #[test]
    fn shrink_follows_the_caller_order() {
        let xy = vars(&["x", "y"]);
        let rels = polys(&xy, &["x*y", "x^3 - y^2"]);
        let out = shrink_generators(&xy, &rels).unwrap();
        assert_eq!(out.distinguished(), &rels[1]);
        let expected = polys(&xy, &["x*y", "x^4 - x*y^2", "x^3*y - y^3"]);
        assert_eq!(out.shrunk_relations(), expected.as_slice());
        assert!(ideals_equal(&xy, out.shrunk_relations(), &polys(&xy, &["x*y", "x^4", "y^3"]))
            .unwrap());

        let built = Presentation::new(xy.clone(), expected).unwrap().build().unwrap();
        assert_eq!(built.hilbert_function(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn shrink_of_a_principal_ideal_bumps_the_exponent() {
        let x = vars(&["x"]);
        let out = shrink_generators(&x, &polys(&x, &["x^2"])).unwrap();
        assert_eq!(out.shrunk_relations(), polys(&x, &["x^3"]).as_slice());
        assert_eq!((out.dim_before(), out.dim_after()), (2, 3));
    }

    #[test]
    fn shrink_rejects_the_zero_ideal() {
        let x = vars(&["x"]);
        assert!(matches!(shrink_generators(&x, &[]), Err(Error::ZeroIdeal)));
        assert!(matches!(
            shrink_generators(&x, &[Poly::zero(&x)]),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn added_variable_extends_the_curve_core() {
        let core = curve_core();
        let big = add_variable_pair(&core).unwrap();
        assert_eq!(big.dim(), 6);
        assert_eq!(big.algebra().vars().names(), ["x", "y", "w"]);

        let listed: Vec<String> = big.u_polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(listed, ["x", "y", "w", "x^2"]);
        assert_eq!(big.complement_poly().to_string(), "x^3");
        assert_eq!(
            big.hypersurface_equation().unwrap().to_string(),
            "z0^2*z5 - z0*z1*z4 - 1/2*z0*z2^2 + 1/3*z1^3"
        );

        let back = big.reduce(None).unwrap().pair;
        assert!(proxy_equal(&back, &core).unwrap());
    }

    #[test]
    fn added_variables_pick_fresh_names() {
        let core = curve_core();
        let twice = add_variable_pair(&add_variable_pair(&core).unwrap()).unwrap();
        assert_eq!(twice.dim(), 7);
        assert_eq!(twice.algebra().vars().names(), ["x", "y", "w", "v"]);
        let listed: Vec<String> = twice.u_polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(listed, ["x", "y", "w", "v", "x^2"]);

        let back = twice.reduce(None).unwrap().pair;
        assert!(proxy_equal(&back, &core).unwrap());
    }

    #[test]
    fn shrunk_pair_lands_on_the_curve_pair() {
        let core = curve_core();
        let big = shrunk_pair(&core).unwrap();
        assert_eq!(big.dim(), 6);
        assert_eq!(big.algebra().embedding_dim(), 2);

        let listed: Vec<String> = big.u_polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(listed, ["x", "y", "x^2", "x*y"]);
        assert_eq!(big.complement_poly().to_string(), "x^3");
        assert_eq!(
            big.hypersurface_equation().unwrap().to_string(),
            "z0^2*z5 - z0*z1*z3 - 1/2*z0*z2^2 + 1/3*z1^3"
        );

        let back = big.reduce(None).unwrap().pair;
        assert!(proxy_equal(&back, &core).unwrap());
    }

    #[test]
    fn minimal_pair_substitutes_collapsed_variables_away() {
        // Reducing the added-variable pair leaves the dead w in the quotient
        // presentation; re-presenting must drop it without touching the basis.
        let core = curve_core();
        let reduced = add_variable_pair(&core).unwrap().reduce(None).unwrap().pair;
        assert_eq!(reduced.algebra().vars().len(), 3);
        let minimal = minimal_pair(&reduced).unwrap();
        assert_eq!(minimal.algebra().vars().names(), ["x", "y"]);
        assert_eq!(minimal.algebra().basis_names(), reduced.algebra().basis_names());
        assert_eq!(minimal.u_vectors(), reduced.u_vectors());
        assert!(proxy_equal(&minimal, &core).unwrap());

        // A pair that is already minimally presented passes through.
        let same = minimal_pair(&core).unwrap();
        assert_eq!(same.algebra().vars().names(), ["x", "y"]);
        assert_eq!(
            same.hypersurface_equation().unwrap(),
            core.hypersurface_equation().unwrap()
        );
    }

    #[test]
    fn minimal_pair_handles_linear_substitutions() {
        // x = y^2 collapses x entirely; the survivor is a chain in y.
        let a = Presentation::parse(&["x", "y"], &["x - y^2", "y^4"])
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(a.dim(), 4);
        let names = a.basis_names();
        let pos = |n: &str| names.iter().position(|b| b == n).unwrap();
        let unit = |n: &str| {
            let mut v = vec![Scalar::from_integer(0.into()); a.dim()];
            v[pos(n)] = Scalar::from_integer(1.into());
            v
        };
        let pair = HPair::new(&a, vec![unit("y"), unit("y^2")], None).unwrap();
        let minimal = minimal_pair(&pair).unwrap();
        assert_eq!(minimal.algebra().vars().names(), ["y"]);
        assert_eq!(minimal.algebra().basis_names(), a.basis_names());
        assert_eq!(
            minimal.hypersurface_equation().unwrap(),
            pair.hypersurface_equation().unwrap()
        );
    }

    #[test]
    fn two_actions_on_the_degenerate_curve_pair() {
        let core = curve_core();
        let degenerate = add_variable_pair(&core).unwrap();
        let out = two_actions(&degenerate).unwrap();
        assert_eq!(out.certificate, "embedding dims 3 vs 2");
        assert_eq!(
            out.first.hypersurface_equation().unwrap().to_string(),
            "z0^2*z5 - z0*z1*z4 - 1/2*z0*z2^2 + 1/3*z1^3"
        );
        assert_eq!(
            out.second.hypersurface_equation().unwrap().to_string(),
            "z0^2*z5 - z0*z1*z3 - 1/2*z0*z2^2 + 1/3*z1^3"
        );
        assert!(proxy_equal(&out.first.reduce(None).unwrap().pair, &core).unwrap());
        assert!(proxy_equal(&out.second.reduce(None).unwrap().pair, &core).unwrap());
    }

    #[test]
    fn two_actions_with_a_two_step_gap() {
        let core = curve_core();
        let degenerate = add_variable_pair(&add_variable_pair(&core).unwrap()).unwrap();
        let out = two_actions(&degenerate).unwrap();
        assert_eq!(out.certificate, "embedding dims 4 vs 3");
        assert_eq!(out.first.dim(), 7);
        assert_eq!(out.second.dim(), 7);
        assert!(proxy_equal(&out.first.reduce(None).unwrap().pair, &core).unwrap());
        assert!(proxy_equal(&out.second.reduce(None).unwrap().pair, &core).unwrap());
    }

    #[test]
    fn two_actions_refuses_a_nondegenerate_pair() {
        let core = curve_core();
        assert!(matches!(two_actions(&core), Err(Error::NondegenerateInput)));
    }
}
