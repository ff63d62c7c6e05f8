//! Non-degenerate pairs for every dimension and degree, plus the bundled
//! census of dimension-six Gorenstein algebras.
//!
//! For 2 <= d <= n there is a local algebra of dimension n+1 whose socle is
//! m^d and whose pair (with U spanned by everything in m except the socle
//! generator) is non-degenerate, giving a non-degenerate hypersurface of
//! degree d in P^n.  The witness depends only on the gap n-d: a gap of zero
//! is a chain; an even gap glues k two-variable hyperbolic planes onto one
//! chain variable; an odd gap trades the last plane for a square.

use crate::artin::{unit_vec, LocalAlgebra, Presentation};
use crate::cli::PresentationFile;
use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Vars};
use crate::hpair::HPair;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    /// d = n: one variable, K[x]/(x^{n+1}).
    Chain,
    /// n - d = 2k > 0: generators s1..s{2k+1}, all products zero except
    /// s1*s2 = s3*s4 = ... = s{2k-1}*s{2k} = c^d for the chain variable c.
    Even,
    /// n - d = 2k - 1 > 0: generators s1..s{2k}, as above but with the last
    /// plane replaced by a square, s{2k-1}^2 = c^d.
    Odd,
}

#[derive(Clone, Copy, Debug)]
pub struct FamilySpec {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub branch: Branch,
}

impl FamilySpec {
    pub fn new(n: usize, d: usize) -> Result<FamilySpec> {
        if d < 2 || d > n {
            return Err(Error::InvalidRange(format!(
                "family needs 2 <= d <= n, got d = {d}, n = {n}"
            )));
        }
        let gap = n - d;
        let (branch, k) = if gap == 0 {
            (Branch::Chain, 0)
        } else if gap % 2 == 0 {
            (Branch::Even, gap / 2)
        } else {
            (Branch::Odd, gap.div_ceil(2))
        };
        Ok(FamilySpec { n, d, k, branch })
    }

    fn var_names(&self) -> Vec<String> {
        let count = match self.branch {
            Branch::Chain => 1,
            Branch::Even => 2 * self.k + 1,
            Branch::Odd => 2 * self.k,
        };
        if count <= 3 {
            ["x", "y", "z"][..count].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=count).map(|i| format!("s{i}")).collect()
        }
    }

    /// Index of the chain variable, whose d-th power spans the socle.
    fn chain_index(&self) -> usize {
        match self.branch {
            Branch::Chain => 0,
            Branch::Even => 2 * self.k,
            // The two-generator case is printed chain-first so that the
            // presentation comes out as K[x,y]/(xy, x^d - y^2).
            Branch::Odd if self.k == 1 => 0,
            Branch::Odd => 2 * self.k - 1,
        }
    }

    pub fn presentation(&self) -> Result<Presentation> {
        let d = self.d as u32;
        let vars = Vars::new(self.var_names());
        let m = vars.len();
        let var = |i: usize| Poly::var(&vars, i).expect("index built from m");
        let mut relations = Vec::new();
        match self.branch {
            Branch::Chain => relations.push(var(0).pow(d + 1)),
            Branch::Odd if self.k == 1 => {
                relations.push(var(0).try_mul(&var(1))?);
                relations.push(var(0).pow(d).try_sub(&var(1).pow(2))?);
            }
            _ => {
                let chain = self.chain_index();
                let socle = var(chain).pow(d);
                let paired = |i: usize, j: usize| {
                    // hyperbolic planes sit on consecutive indices (0,1), (2,3), ...
                    j == i + 1 && i % 2 == 0 && j < 2 * self.k && !(self.branch == Branch::Odd && j == 2 * self.k - 1)
                };
                let squared = self.branch == Branch::Odd;
                for i in 0..m {
                    if i != chain && !(squared && i == 2 * self.k - 2) {
                        relations.push(var(i).pow(2));
                    }
                }
                for i in 0..m {
                    for j in i + 1..m {
                        if !paired(i, j) {
                            relations.push(var(i).try_mul(&var(j))?);
                        }
                    }
                }
                // written socle-first so the canonical print leads with +c^d
                for i in 0..self.k - usize::from(squared) {
                    relations.push(socle.try_sub(&var(2 * i).try_mul(&var(2 * i + 1))?)?);
                }
                if squared {
                    relations.push(socle.try_sub(&var(2 * self.k - 2).pow(2))?);
                }
            }
        }
        Presentation::new(vars, relations)
    }

}

/// Build the family member for (n, d): U is spanned by every basis monomial
/// of the maximal ideal except the socle generator, which is the complement.
/// The socle is m^d and one-dimensional, so its generator is the unique
/// basis monomial of top degree d.
pub fn family_pair(n: usize, d: usize) -> Result<HPair> {
    let spec = FamilySpec::new(n, d)?;
    let algebra = spec.presentation()?.build()?;
    let mut u_vectors = Vec::with_capacity(algebra.dim().saturating_sub(2));
    let mut complement = None;
    for (i, mon) in algebra.basis().iter().enumerate() {
        if mon.is_one() {
            continue;
        }
        if mon.degree() == d as u32 {
            if complement.replace(unit_vec(algebra.dim(), i)).is_some() {
                return Err(Error::InternalInvariantViolation(
                    "family socle is not one-dimensional".into(),
                ));
            }
        } else {
            u_vectors.push(unit_vec(algebra.dim(), i));
        }
    }
    let complement = complement.ok_or_else(|| {
        Error::InternalInvariantViolation("family basis has no top-degree monomial".into())
    })?;
    HPair::new(&algebra, u_vectors, Some(complement))
}

/// One row of the bundled dimension-six census: a Gorenstein presentation,
/// its generating subspace, and the values its hypersurface is expected to
/// have.  The expectations are data, recorded as published; the checker
/// recomputes everything and reports disagreements rather than trusting them.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub name: String,
    pub file: PresentationFile,
    pub expect_equation: String,
    pub expect_degree: u32,
    /// Coordinates whose common zero locus is asserted to be the entire
    /// singular locus; empty asserts smoothness.
    pub expect_singular: Vec<usize>,
    pub expect_normal: bool,
}

impl CensusEntry {
    pub fn build_algebra(&self) -> Result<LocalAlgebra> {
        self.file.build(None)
    }

    pub fn build_pair(&self) -> Result<HPair> {
        self.file.build_pair(None)
    }
}

const CENSUS_SOURCES: [&str; 6] = [
    include_str!("../data/census/a1.alg"),
    include_str!("../data/census/a2.alg"),
    include_str!("../data/census/a3.alg"),
    include_str!("../data/census/a4.alg"),
    include_str!("../data/census/a5.alg"),
    include_str!("../data/census/a6.alg"),
];

/// The six dimension-six Gorenstein census entries, in catalog order.
/// Bundled data; a malformed entry is a packaging bug, hence the panics.
pub fn catalog6() -> Vec<CensusEntry> {
    CENSUS_SOURCES
        .iter()
        .map(|text| {
            let file = PresentationFile::parse(text).expect("bundled census entry parses");
            let name = file.name.clone().expect("census entry has a name");
            let expect_equation =
                file.expect_equation.clone().expect("census entry has an expected equation");
            let expect_degree = file.expect_degree.expect("census entry has an expected degree");
            let expect_singular = file
                .singular_indices(6)
                .expect("census singular coordinates are z0..z5")
                .expect("census entry states its singular locus");
            let expect_normal = file.expect_normal.expect("census entry states normality");
            CensusEntry { name, file, expect_equation, expect_degree, expect_singular, expect_normal }
        })
        .collect()
}
