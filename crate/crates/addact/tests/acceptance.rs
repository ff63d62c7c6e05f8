//! End-to-end acceptance suite: one test per advertised capability, so the
//! harness prints one pass/fail line for each.  Catalog rows whose recorded
//! values disagree with exact recomputation are pinned down separately in
//! `known_discrepancies.rs`; here the computed values are asserted.

mod common;

use std::time::{Duration, Instant};

use addact::artin::{LocalAlgebra, Presentation};
use addact::cli::{run_with_io, PresentationFile};
use addact::construct;
use addact::exactpoly::{int, ratio, Monomial, Poly, Scalar};
use addact::families;
use addact::geometry::{
    essential_variables, verify_singular_subspace, LinearSubspace, SingularVerdict,
};
use addact::hpair::{invariant_vector, proxy_equal, HPair};
use common::{core_pair, poly, unit, worked_pair};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EQ_X: &str = "z0^2*z5 - z0*z1*z3 - 1/2*z0*z2^2 + 1/3*z1^3";
const EQ_EXTENSION: &str = "z0^2*z5 - z0*z1*z4 - 1/2*z0*z2^2 + 1/3*z1^3";
const EQ_CORE: &str = "z0^2*z4 - z0*z1*z3 - 1/2*z0*z2^2 + 1/3*z1^3";

const WORKED_ROWS: [&str; 6] = [
    "z0",
    "z1 + t1*z0",
    "z2 + t2*z0",
    "z3 + t1*z1 + (1/2*t1^2 + t3)*z0",
    "z4 + t1*z2 + t2*z1 + (t1*t2 + t4)*z0",
    "z5 + t1*z3 + t2*z2 + (1/2*t1^2 + t3)*z1 + (1/6*t1^3 + t1*t3 + 1/2*t2^2)*z0",
];

// Rows of the action on the added-variable extension of the core.  The last
// row's z0 coefficient carries t1*t4: squaring t1*x + t4*x^2 contributes
// 2*t1*t4*x^3, and the transcribed display that omits it fails the group
// law (see known_discrepancies.rs).
const EXTENSION_ROWS: [&str; 6] = [
    "z0",
    "z1 + t1*z0",
    "z2 + t2*z0",
    "z3 + t3*z0",
    "z4 + t1*z1 + (1/2*t1^2 + t4)*z0",
    "z5 + t1*z4 + t2*z2 + (1/2*t1^2 + t4)*z1 + (1/6*t1^3 + t1*t4 + 1/2*t2^2)*z0",
];

#[test]
fn criterion_1_worked_pair_end_to_end() {
    let pair = worked_pair();
    let algebra = pair.algebra();
    assert_eq!(algebra.dim(), 6);
    assert_eq!(algebra.basis_names().join(", "), "1, x, y, x^2, x*y, x^3");

    let socle = algebra.socle();
    assert_eq!(socle.dim(), 2);
    assert!(socle.contains(&algebra.coords_of(&poly(algebra, "x*y")).unwrap()));
    assert!(socle.contains(&algebra.coords_of(&poly(algebra, "x^3")).unwrap()));
    assert!(!algebra.is_gorenstein());

    assert_eq!(pair.hypersurface_equation().unwrap().to_string(), EQ_X);

    let ideal = pair.degeneracy_ideal().unwrap();
    assert_eq!(ideal.dim(), 1);
    assert!(ideal.contains(&algebra.coords_of(&poly(algebra, "x*y")).unwrap()));

    let outcome = pair.reduce(None).unwrap();
    assert_eq!(outcome.kept_z_indices, vec![0, 1, 2, 3, 5]);
    let core = outcome.pair;
    assert_eq!(core.algebra().dim(), 5);
    let vars = core.algebra().vars();
    assert!(construct::ideals_equal(
        vars,
        core.algebra().presentation().relations(),
        &[
            Poly::parse(vars, "x*y").unwrap(),
            Poly::parse(vars, "x^3 - y^2").unwrap(),
        ],
    )
    .unwrap());
    let u_names: Vec<String> = core.u_polys().iter().map(|p| p.to_string()).collect();
    assert_eq!(u_names, ["x", "y", "x^2"]);
    assert_eq!(core.complement_poly().to_string(), "x^3");
    assert_eq!(core.hypersurface_equation().unwrap().to_string(), EQ_CORE);
    assert!(proxy_equal(&core, &core_pair()).unwrap());

    println!("criterion 1 (worked pair end to end): PASS");
}

#[test]
fn criterion_2_two_constructions_from_the_core() {
    let worked = worked_pair();
    let core = worked.reduce(None).unwrap().pair;

    let extension = construct::add_variable_pair(&core).unwrap();
    assert_eq!(
        extension.hypersurface_equation().unwrap().to_string(),
        EQ_EXTENSION
    );

    let shrunk = construct::shrunk_pair(&core).unwrap();
    assert_eq!(shrunk.hypersurface_equation().unwrap().to_string(), EQ_X);

    assert_eq!(extension.algebra().embedding_dim(), 3);
    assert_eq!(shrunk.algebra().embedding_dim(), 2);
    let cert = invariant_vector(extension.algebra())
        .nonequivalence_certificate(&invariant_vector(shrunk.algebra()));
    assert_eq!(cert.as_deref(), Some("embedding dims 3 vs 2"));

    let reference = core_pair();
    assert!(proxy_equal(&extension.reduce(None).unwrap().pair, &reference).unwrap());
    assert!(proxy_equal(&shrunk.reduce(None).unwrap().pair, &reference).unwrap());

    let two = construct::two_actions(&worked).unwrap();
    assert_eq!(two.certificate, "embedding dims 3 vs 2");
    assert_eq!(
        two.first.hypersurface_equation().unwrap().to_string(),
        EQ_EXTENSION
    );
    assert_eq!(two.second.hypersurface_equation().unwrap().to_string(), EQ_X);

    // Listing the core relations the other way round makes the shrink
    // distinguish x^3 - y^2 and deform the ideal to (xy, x^4, y^3); the
    // resulting algebra shares every cheap invariant with the shrunk one,
    // so the certificate between them is inconclusive.
    let flipped = Presentation::parse(&["x", "y"], &["x*y", "x^3 - y^2"]).unwrap();
    let shrink = construct::shrink_generators(flipped.vars(), flipped.relations()).unwrap();
    assert_eq!(shrink.distinguished().to_string(), "x^3 - y^2");
    assert!(construct::ideals_equal(
        flipped.vars(),
        shrink.shrunk_relations(),
        &[
            Poly::parse(flipped.vars(), "x*y").unwrap(),
            Poly::parse(flipped.vars(), "x^4").unwrap(),
            Poly::parse(flipped.vars(), "y^3").unwrap(),
        ],
    )
    .unwrap());
    let alternative = Presentation::new(
        flipped.vars().clone(),
        shrink.shrunk_relations().to_vec(),
    )
    .unwrap()
    .build()
    .unwrap();
    assert_eq!(alternative.hilbert_function(), vec![1, 2, 2, 1]);
    assert_eq!(shrunk.algebra().hilbert_function(), vec![1, 2, 2, 1]);
    let inconclusive = invariant_vector(&alternative)
        .nonequivalence_certificate(&invariant_vector(shrunk.algebra()));
    assert_eq!(inconclusive, None);

    println!("criterion 2 (two constructions from the core): PASS");
}

#[test]
fn criterion_3_action_formulas_and_fixed_loci() {
    let worked = worked_pair();
    let worked_eq = worked.hypersurface_equation().unwrap();
    let worked_action = worked.action_matrix().unwrap();
    assert_eq!(worked_action.row_strings(), WORKED_ROWS);
    assert!(worked_action.leaves_invariant(&worked_eq).unwrap());
    let fixed = worked.fixed_locus();
    assert_eq!(fixed.dim(), 2);
    assert!(fixed.contains(&unit(6, 4)));
    assert!(fixed.contains(&unit(6, 5)));

    let core = worked.reduce(None).unwrap().pair;
    let extension = construct::add_variable_pair(&core).unwrap();
    let extension_eq = extension.hypersurface_equation().unwrap();
    let extension_action = extension.action_matrix().unwrap();
    assert_eq!(extension_action.row_strings(), EXTENSION_ROWS);
    assert!(extension_action.leaves_invariant(&extension_eq).unwrap());
    let fixed = extension.fixed_locus();
    assert_eq!(fixed.dim(), 2);
    assert!(fixed.contains(&unit(6, 3)));
    assert!(fixed.contains(&unit(6, 5)));

    println!("criterion 3 (action formulas and fixed loci): PASS");
}

#[test]
fn criterion_4_dimension_six_census() {
    let entries = families::catalog6();
    assert_eq!(entries.len(), 6);
    let degrees: Vec<u32> = entries.iter().map(|e| e.expect_degree).collect();
    assert_eq!(degrees, [5, 4, 3, 3, 3, 2]);

    // What exact synthesis yields for the first entry; the recorded string
    // differs (it is not even homogeneous) and is pinned in
    // known_discrepancies.rs.
    let a1_computed = "z0^4*z5 - z0^3*z1*z4 - z0^3*z2*z3 + z0^2*z1^2*z3 \
                       + z0^2*z1*z2^2 - z0*z1^3*z2 + 1/5*z1^5";

    for (i, entry) in entries.iter().enumerate() {
        let pair = entry.build_pair().unwrap();
        let algebra = pair.algebra();
        assert_eq!(algebra.dim(), 6, "{}", entry.name);
        assert!(algebra.is_gorenstein(), "{}", entry.name);

        let report = pair.uniqueness_report().unwrap();
        assert!(report.nondegenerate, "{}", entry.name);
        assert_eq!(report.largest_ideal_dim, 0, "{}", entry.name);
        assert_eq!(report.message, "action is unique", "{}", entry.name);

        let equation = pair.hypersurface_equation().unwrap();
        assert_eq!(equation.degree(), entry.expect_degree, "{}", entry.name);
        if i == 0 {
            assert_eq!(equation.to_string(), a1_computed);
        } else {
            assert_eq!(equation.to_string(), entry.expect_equation, "{}", entry.name);
        }

        let locus = if entry.expect_singular.is_empty() {
            LinearSubspace::empty(pair.dim())
        } else {
            LinearSubspace::coordinate(pair.dim(), &entry.expect_singular).unwrap()
        };
        let verdict = verify_singular_subspace(&equation, &locus, true, 0, 100).unwrap();
        assert!(verdict.sample_failures.is_empty(), "{}", entry.name);
        match i {
            // Codimension-one singular loci refute normality exactly.
            0 | 1 => assert_eq!(verdict.verdict, SingularVerdict::NotNormal, "{}", entry.name),
            // Codimension two with the locus asserted entire.
            2 => assert_eq!(verdict.verdict, SingularVerdict::Normal, "{}", entry.name),
            // The recorded planes stick out of the singular set: the z0
            // partial survives on them.  The honest verdicts for the actual
            // components are checked below.
            3 | 4 => {
                assert_eq!(verdict.verdict, SingularVerdict::NotContained, "{}", entry.name);
                assert!(!verdict.all_vanish);
                assert_eq!(verdict.nonvanishing_partial, Some(0));
            }
            // A full-rank quadric is smooth.
            _ => assert_eq!(verdict.verdict, SingularVerdict::NormalSmooth, "{}", entry.name),
        }
        let recorded_normal = [false, false, true, false, false, true][i];
        assert_eq!(entry.expect_normal, recorded_normal, "{}", entry.name);
    }

    // The singular sets of the two mis-recorded rows each split into two
    // coordinate planes; every partial vanishes on those, and at projective
    // codimension two no normality conclusion is available without an
    // entirety assertion.
    for (i, extras) in [(3usize, [2usize, 3]), (4, [1, 2])] {
        let entry = &entries[i];
        let equation = entry.build_pair().unwrap().hypersurface_equation().unwrap();
        for extra in extras {
            let mut coords = entry.expect_singular.clone();
            coords.push(extra);
            let plane = LinearSubspace::coordinate(6, &coords).unwrap();
            let verdict = verify_singular_subspace(&equation, &plane, false, 0, 50).unwrap();
            assert!(verdict.all_vanish, "{} component {:?}", entry.name, coords);
            assert_eq!(verdict.codim_in_hypersurface, Some(2));
            assert_eq!(verdict.verdict, SingularVerdict::CodimensionOnly);
        }
    }

    println!("criterion 4 (dimension-six census): PASS");
}

#[test]
fn criterion_5_family_sweep() {
    let started = Instant::now();
    let mut cases = 0;
    for n in 2..=9usize {
        for d in 2..=n {
            let pair = families::family_pair(n, d).unwrap();
            let algebra = pair.algebra();
            assert_eq!(algebra.dim(), n + 1, "family ({n}, {d})");

            let socle = algebra.socle();
            let power = algebra.m_power(d as u32);
            assert_eq!(socle.dim(), 1, "family ({n}, {d})");
            assert_eq!(power.dim(), 1, "family ({n}, {d})");
            assert!(socle.contains_space(&power) && power.contains_space(&socle));

            let equation = pair.hypersurface_equation().unwrap();
            assert_eq!(equation.degree() as usize, d, "family ({n}, {d})");
            assert!(pair.is_nondegenerate().unwrap(), "family ({n}, {d})");
            cases += 1;
        }
    }
    assert_eq!(cases, 36);
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "sweep took {elapsed:?}");

    println!("criterion 5 (family sweep, 36 cases in {elapsed:?}): PASS");
}

fn random_nilpotent(algebra: &LocalAlgebra, rng: &mut ChaCha8Rng) -> addact::artin::Element {
    let coords: Vec<Scalar> = (0..algebra.dim())
        .map(|i| {
            if i == 0 {
                int(0)
            } else {
                ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
            }
        })
        .collect();
    algebra.element_from_scalars(coords).unwrap()
}

fn scalars(e: &addact::artin::Element) -> Vec<Scalar> {
    e.to_scalars().expect("scalar element")
}

/// Row-echelon span over the rationals, written out independently of the
/// library's linear algebra so membership has a second opinion.
struct Span {
    ncols: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Span {
    fn new(ncols: usize) -> Span {
        Span { ncols, rows: Vec::new() }
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for j in *pivot..self.ncols {
                if !row[j].is_zero() {
                    v[j] = &v[j] - &(&c * &row[j]);
                }
            }
        }
    }

    fn insert(&mut self, mut v: Vec<Scalar>) {
        self.reduce(&mut v);
        if let Some(pivot) = v.iter().position(|c| !c.is_zero()) {
            let lead = v[pivot].clone();
            for c in v.iter_mut() {
                if !c.is_zero() {
                    *c = &*c / &lead;
                }
            }
            let at = self.rows.partition_point(|(p, _)| *p < pivot);
            self.rows.insert(at, (pivot, v));
        }
    }

    fn contains(&self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        v.iter().all(|c| c.is_zero())
    }
}

fn exps_up_to(k: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for partial in &out {
            let used: u32 = partial.iter().sum();
            for e in 0..=(bound - used) {
                let mut v = partial.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn poly_to_vec(f: &Poly, columns: &std::collections::HashMap<Vec<u32>, usize>, ncols: usize) -> Vec<Scalar> {
    let mut v = vec![int(0); ncols];
    for (mon, coeff) in f.terms() {
        let idx = columns
            .get(mon.exps())
            .expect("term stays within the column range");
        v[*idx] = coeff.clone();
    }
    v
}

fn membership_oracle_agrees(label: &str, algebra: &LocalAlgebra, rng: &mut ChaCha8Rng) {
    let vars = algebra.vars();
    let relations = algebra.presentation().relations();
    let stab = algebra.stab_degree();
    let cap = stab + 2;

    let all_exps = exps_up_to(vars.len(), cap);
    let columns: std::collections::HashMap<Vec<u32>, usize> = all_exps
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let ncols = all_exps.len();

    let mut span = Span::new(ncols);
    for g in relations {
        let g_degree = g.total_degree().expect("relations are nonzero");
        for exps in &all_exps {
            let m_degree: u32 = exps.iter().sum();
            if m_degree + g_degree > cap {
                continue;
            }
            let multiple = Poly::monomial(vars, Monomial::from_exps(exps.clone()), int(1))
                .try_mul(g)
                .unwrap();
            span.insert(poly_to_vec(&multiple, &columns, ncols));
        }
    }

    let mut checked = 0;
    for exps in exps_up_to(vars.len(), stab) {
        let f = Poly::monomial(vars, Monomial::from_exps(exps), int(1));
        let lib = construct::ideal_membership(vars, relations, &f).unwrap();
        let brute = span.contains(poly_to_vec(&f, &columns, ncols));
        assert_eq!(lib, brute, "{label}: membership of {f} disagrees");
        checked += 1;
    }
    for _ in 0..10 {
        let mut f = Poly::zero(vars);
        for _ in 0..3 {
            let exps: Vec<u32> = (0..vars.len())
                .map(|_| rng.gen_range(0..=stab / vars.len() as u32 + 1))
                .collect();
            if exps.iter().sum::<u32>() > stab {
                continue;
            }
            let term = Poly::monomial(
                vars,
                Monomial::from_exps(exps),
                ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
            );
            f = f.try_add(&term).unwrap();
        }
        if f.is_zero() {
            continue;
        }
        let lib = construct::ideal_membership(vars, relations, &f).unwrap();
        let brute = span.contains(poly_to_vec(&f, &columns, ncols));
        assert_eq!(lib, brute, "{label}: membership of {f} disagrees");
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn criterion_6_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let entries = families::catalog6();

    // Exponential and logarithm: mutual inversion and the homomorphism law,
    // 100 random cases per catalog algebra.
    for entry in &entries {
        let algebra = entry.build_algebra().unwrap();
        for _ in 0..100 {
            let u = random_nilpotent(&algebra, &mut rng);
            let v = random_nilpotent(&algebra, &mut rng);
            let exp_u = algebra.exp_nilpotent(&u).unwrap();
            assert_eq!(scalars(&algebra.log_unipotent(&exp_u).unwrap()), scalars(&u));
            let exp_v = algebra.exp_nilpotent(&v).unwrap();
            let sum = u.try_add(&v).unwrap();
            assert_eq!(
                scalars(&algebra.exp_nilpotent(&sum).unwrap()),
                scalars(&algebra.mul_elements(&exp_u, &exp_v).unwrap()),
                "{}", entry.name
            );
        }
    }

    // Multiplication tables: commutativity and associativity over every
    // basis triple.
    let mut algebras: Vec<(String, LocalAlgebra)> = entries
        .iter()
        .map(|e| (e.name.clone(), e.build_algebra().unwrap()))
        .collect();
    algebras.push(("worked".into(), worked_pair().algebra().clone()));
    algebras.push(("core".into(), core_pair().algebra().clone()));
    for (name, algebra) in &algebras {
        let basis: Vec<_> = (0..algebra.dim())
            .map(|i| algebra.basis_element(i).unwrap())
            .collect();
        for a in &basis {
            for b in &basis {
                let ab = algebra.mul_elements(a, b).unwrap();
                let ba = algebra.mul_elements(b, a).unwrap();
                assert_eq!(scalars(&ab), scalars(&ba), "{name}");
                for c in &basis {
                    let left = algebra.mul_elements(&ab, c).unwrap();
                    let right = algebra.mul_elements(a, &algebra.mul_elements(b, c).unwrap()).unwrap();
                    assert_eq!(scalars(&left), scalars(&right), "{name}");
                }
            }
        }
    }

    // Pair-level laws across the fixture pairs: the action is a symbolic
    // one-parameter-group homomorphism, and the number of variables the
    // equation actually uses matches the degeneracy count.
    let worked = worked_pair();
    let core = worked.reduce(None).unwrap().pair;
    let extension = construct::add_variable_pair(&core).unwrap();
    let shrunk = construct::shrunk_pair(&core).unwrap();
    let mut fixtures: Vec<(String, HPair)> = vec![
        ("worked".into(), worked),
        ("core".into(), core),
        ("extension".into(), extension),
        ("shrunk".into(), shrunk),
        ("family 4 2".into(), families::family_pair(4, 2).unwrap()),
        ("family 5 3".into(), families::family_pair(5, 3).unwrap()),
    ];
    for entry in &entries {
        fixtures.push((entry.name.clone(), entry.build_pair().unwrap()));
    }
    for (name, pair) in &fixtures {
        assert!(
            pair.action_matrix().unwrap().satisfies_group_law().unwrap(),
            "{name}"
        );
        let equation = pair.hypersurface_equation().unwrap();
        let ideal_dim = pair.degeneracy_ideal().unwrap().dim();
        assert_eq!(
            essential_variables(&equation).unwrap(),
            pair.algebra().dim() - ideal_dim,
            "{name}"
        );
    }

    // Ideal membership against an independently written span oracle, on
    // every fixture ideal, for every monomial up to the stabilization
    // degree plus random polynomials.
    for (name, algebra) in &algebras {
        membership_oracle_agrees(name, algebra, &mut rng);
    }
    for (name, pair) in &fixtures {
        membership_oracle_agrees(name, pair.algebra(), &mut rng);
    }

    println!("criterion 6 (property suites): PASS");
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with_io(args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_file(name: &str, content: &str) -> String {
    let path = std::env::temp_dir().join(format!("addact_accept_{}_{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn criterion_7_uniqueness_dichotomy() {
    let mut files: Vec<String> = vec!["data/curve.alg".into()];
    for i in 1..=6 {
        files.push(format!("data/census/a{i}.alg"));
    }
    let (code, reduced, _) = cli(&["reduce", "data/curve.alg"]);
    assert_eq!(code, 0);
    files.push(temp_file("reduced.alg", &reduced));
    let (code, extended, _) = cli(&["addvar", files.last().unwrap()]);
    assert_eq!(code, 0);
    files.push(temp_file("extended.alg", &extended));
    let (code, family, _) = cli(&["family", "6", "3"]);
    assert_eq!(code, 0);
    files.push(temp_file("family.alg", &family));

    for file in &files {
        let text = std::fs::read_to_string(file).unwrap();
        let pair = PresentationFile::parse(&text).unwrap().build_pair(None).unwrap();
        let ideal_dim = pair.degeneracy_ideal().unwrap().dim();

        let (code, out, _) = cli(&["--format", "json", "analyze", file]);
        assert_eq!(code, 0, "{file}");
        let report: serde_json::Value = serde_json::from_str(&out).unwrap();
        let unique = report["unique_action"].as_bool().expect("verdict present");
        assert_eq!(unique, ideal_dim == 0, "{file}");

        let (code, out, err) = cli(&["two-actions", file]);
        if ideal_dim > 0 {
            assert_eq!(code, 0, "{file}");
            assert!(out.contains("certificate:"), "{file}");
        } else {
            assert_eq!(code, 1, "{file}");
            assert!(err.contains("NondegenerateInput"), "{file}");
        }
    }
    assert_eq!(files.len(), 10);

    println!("criterion 7 (uniqueness dichotomy): PASS");
}
