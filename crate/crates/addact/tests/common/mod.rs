//! Helpers shared by the integration suites.
#![allow(dead_code)]

use addact::artin::LocalAlgebra;
use addact::cli::PresentationFile;
use addact::exactpoly::{int, Poly, Scalar};
use addact::hpair::HPair;

pub const CURVE: &str = include_str!("../../data/curve.alg");

/// The running-example pair: K[x,y]/(x^4, x^2y, x^3 - y^2) with
/// U = <x, y, x^2, xy> and complement x^3.
pub fn worked_pair() -> HPair {
    PresentationFile::parse(CURVE)
        .expect("bundled pair parses")
        .build_pair(None)
        .expect("bundled pair builds")
}

/// The degeneracy-free core the running example reduces to, built directly:
/// K[x,y]/(xy, x^3 - y^2) with U = <x, y, x^2> and complement x^3.
pub fn core_pair() -> HPair {
    let algebra = addact::artin::Presentation::parse(&["x", "y"], &["x*y", "x^3 - y^2"])
        .expect("core presentation parses")
        .build()
        .expect("core builds");
    let coords = |text: &str| {
        algebra
            .coords_of(&poly(&algebra, text))
            .expect("core element has coordinates")
    };
    let u = vec![coords("x"), coords("y"), coords("x^2")];
    HPair::new(&algebra, u, Some(coords("x^3"))).expect("core pair is valid")
}

pub fn poly(algebra: &LocalAlgebra, text: &str) -> Poly {
    Poly::parse(algebra.vars(), text).expect("test polynomial parses")
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| int(if k == i { 1 } else { 0 })).collect()
}
