//! Checks on the projective side: essential variables of a hypersurface,
//! verification of asserted singular loci with a normality verdict, and the
//! cone and invariance predicates tying equations back to their pairs.
//!
//! The locus checks are exact where exactness is possible.  Substituting a
//! linear parametrization into every partial derivative decides containment
//! in the singular locus symbolically; a contained locus of codimension one
//! in the hypersurface refutes normality outright.  The converse direction,
//! that the singular locus is no bigger than asserted, is supported by
//! deterministic point sampling and an exact rank computation for quadrics;
//! a normality verdict in codimension two and higher is therefore reported
//! only when the caller asserts the locus is the entire singular set.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactpoly::{int, Monomial, Poly, Scalar, Vars};
use crate::hpair::{ActionMatrix, HomogPoly};
use crate::linalg::{rref, Rref};

/// A linear subspace of projective space, stored as a reduced spanning basis
/// of its affine cone in K^num_vars.
#[derive(Clone, Debug)]
pub struct LinearSubspace {
    num_vars: usize,
    span: Rref,
}

impl LinearSubspace {
    pub fn new(num_vars: usize, spanning: Vec<Vec<Scalar>>) -> Result<LinearSubspace> {
        for row in &spanning {
            if row.len() != num_vars {
                return Err(Error::DimensionMismatch { expected: num_vars, got: row.len() });
            }
        }
        Ok(LinearSubspace { num_vars, span: rref(spanning, num_vars) })
    }

    /// The coordinate subspace where the listed coordinates vanish.
    pub fn coordinate(num_vars: usize, zero_coords: &[usize]) -> Result<LinearSubspace> {
        for &i in zero_coords {
            if i >= num_vars {
                return Err(Error::IndexOutOfRange { index: i, len: num_vars });
            }
        }
        let rows = (0..num_vars)
            .filter(|i| !zero_coords.contains(i))
            .map(|i| {
                let mut row = vec![Scalar::zero(); num_vars];
                row[i] = int(1);
                row
            })
            .collect();
        LinearSubspace::new(num_vars, rows)
    }

    /// The empty subspace of projective space (only the cone point).
    pub fn empty(num_vars: usize) -> LinearSubspace {
        LinearSubspace { num_vars, span: rref(Vec::new(), num_vars) }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Dimension of the affine cone.
    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    /// Projective dimension; None for the empty subspace.
    pub fn proj_dim(&self) -> Option<usize> {
        self.rank().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.rank() == 0
    }

    pub fn contains(&self, point: &[Scalar]) -> bool {
        point.len() == self.num_vars && self.span.contains(point)
    }

    /// Express the original coordinates as linear forms in fresh parameters,
    /// one per spanning row.
    fn parametrization(&self) -> Result<Vec<Poly>> {
        let r = self.rank();
        let params = Vars::new((1..=r).map(|j| format!("w{j}")));
        let mut assigns = vec![Poly::zero(&params); self.num_vars];
        for (j, row) in self.span.rows.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    let term = Poly::monomial(&params, Monomial::var(r, j), c.clone());
                    assigns[k] = assigns[k].try_add(&term)?;
                }
            }
        }
        Ok(assigns)
    }
}

/// Number of variables the hypersurface genuinely depends on after a linear
/// change of coordinates: the rank of the span of its partial derivatives.
pub fn essential_variables(f: &HomogPoly) -> Result<usize> {
    if f.poly().is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.num_vars();
    let partials: Vec<Poly> = (0..n)
        .map(|i| f.poly().partial_derivative(i))
        .collect::<Result<_>>()?;
    Ok(poly_span_rank(&partials))
}

fn poly_span_rank(polys: &[Poly]) -> usize {
    let mut columns: Vec<Monomial> = Vec::new();
    for p in polys {
        for (mon, _) in p.terms() {
            if !columns.contains(mon) {
                columns.push(mon.clone());
            }
        }
    }
    let rows: Vec<Vec<Scalar>> = polys
        .iter()
        .map(|p| columns.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    rref(rows, columns.len()).rank()
}

/// What the locus check could conclude.  Only `NotContained`, `NotNormal`
/// and `NormalSmooth` are exact on their own; `Normal` additionally trusts
/// the caller's word that the locus is the whole singular set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SingularVerdict {
    /// Some partial derivative is not identically zero on the locus, so the
    /// locus is not inside the singular set.  Exact.
    NotContained,
    /// The locus is singular and of codimension one in the hypersurface,
    /// which rules out normality.  Exact.
    NotNormal,
    /// The locus is singular of codimension at least two; granted the
    /// caller's assertion that it is the entire singular locus, the
    /// hypersurface is normal.
    Normal,
    /// The asserted singular locus is empty and the partial derivatives are
    /// linear of full rank, so the hypersurface is smooth, hence normal.
    /// Exact.
    NormalSmooth,
    /// The locus is singular of codimension at least two, but nothing was
    /// asserted (or could be proved) about the rest of the singular set.
    CodimensionOnly,
}

/// Outcome of checking an asserted singular locus.  Sampling failures are
/// collected rather than raised: a sampled point that is singular yet
/// outside the locus undermines the assertion without breaking the exact
/// part of the report.
#[derive(Clone, Debug)]
pub struct SingularReport {
    pub verdict: SingularVerdict,
    /// Every partial derivative vanishes identically on the locus.
    pub all_vanish: bool,
    /// Index of a partial derivative that does not vanish, when one exists.
    pub nonvanishing_partial: Option<usize>,
    pub locus_proj_dim: Option<usize>,
    pub hypersurface_dim: usize,
    pub codim_in_hypersurface: Option<usize>,
    pub asserted_entire: bool,
    pub samples_checked: usize,
    pub sample_failures: Vec<String>,
}

/// Check an asserted singular locus of the hypersurface `f = 0` and report
/// what that implies for normality.  `asserted_entire` states that the locus
/// is the whole singular set; `seed` and `samples` drive the deterministic
/// point sampling that probes the assertion.
pub fn verify_singular_subspace(
    f: &HomogPoly,
    locus: &LinearSubspace,
    asserted_entire: bool,
    seed: u64,
    samples: usize,
) -> Result<SingularReport> {
    let n = f.num_vars();
    if locus.num_vars() != n {
        return Err(Error::DimensionMismatch { expected: n, got: locus.num_vars() });
    }
    if n < 3 {
        return Err(Error::InvalidRange(format!(
            "a hypersurface needs at least 3 coordinates, got {n}"
        )));
    }
    let partials: Vec<Poly> = (0..n)
        .map(|i| f.poly().partial_derivative(i))
        .collect::<Result<_>>()?;

    let mut all_vanish = true;
    let mut nonvanishing_partial = None;
    if !locus.is_empty() {
        let assigns = locus.parametrization()?;
        for (i, p) in partials.iter().enumerate() {
            if !p.substitute(&assigns)?.is_zero() {
                all_vanish = false;
                nonvanishing_partial = Some(i);
                break;
            }
        }
    }

    let hypersurface_dim = n - 2;
    let locus_proj_dim = locus.proj_dim();
    let codim_in_hypersurface = if all_vanish {
        locus_proj_dim.map(|d| hypersurface_dim - d)
    } else {
        None
    };

    let verdict = if !all_vanish {
        SingularVerdict::NotContained
    } else {
        match codim_in_hypersurface {
            Some(c) if c <= 1 => SingularVerdict::NotNormal,
            Some(_) if asserted_entire => SingularVerdict::Normal,
            Some(_) => SingularVerdict::CodimensionOnly,
            // empty locus: smoothness is exact for quadrics, where the
            // partials are linear forms with no common nonzero zero
            None => {
                if f.degree() == 2 && poly_span_rank(&partials) == n {
                    SingularVerdict::NormalSmooth
                } else {
                    SingularVerdict::CodimensionOnly
                }
            }
        }
    };

    let (samples_checked, sample_failures) = sample_hypersurface(f, locus, &partials, seed, samples)?;

    Ok(SingularReport {
        verdict,
        all_vanish,
        nonvanishing_partial,
        locus_proj_dim,
        hypersurface_dim,
        codim_in_hypersurface,
        asserted_entire,
        samples_checked,
        sample_failures,
    })
}

/// Sample points of the hypersurface in the affine chart z0 = 1 and flag any
/// singular sample lying outside the asserted locus.  Requires the equation
/// to be linear in the last coordinate, which every synthesized equation is;
/// otherwise no samples are drawn.
fn sample_hypersurface(
    f: &HomogPoly,
    locus: &LinearSubspace,
    partials: &[Poly],
    seed: u64,
    samples: usize,
) -> Result<(usize, Vec<String>)> {
    let n = f.num_vars();
    let last = n - 1;
    let linear_in_last = f.poly().terms().all(|(mon, _)| mon.exps()[last] <= 1);
    if !linear_in_last || samples == 0 {
        return Ok((0, Vec::new()));
    }
    // f = c * z_last + r with c and r free of z_last
    let c = f.poly().partial_derivative(last)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut attempts = 0;
    while checked < samples && attempts < 16 * samples + 16 {
        attempts += 1;
        let mut point = vec![Scalar::zero(); n];
        point[0] = int(1);
        for coord in point.iter_mut().take(last).skip(1) {
            *coord = int(rng.gen_range(-9..=9));
        }
        let c_val = c.eval(&point)?;
        if c_val.is_zero() {
            continue;
        }
        let r_val = f.poly().eval(&point)?;
        point[last] = -(r_val / c_val);
        let singular = partials
            .iter()
            .map(|p| p.eval(&point))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(Scalar::is_zero);
        if singular && !locus.contains(&point) {
            let coords: Vec<String> = point.iter().map(Scalar::to_string).collect();
            failures.push(format!("singular sample outside the locus: [{}]", coords.join(", ")));
        }
        checked += 1;
    }
    Ok((checked, failures))
}

/// Does the action fix the hypersurface equation exactly?
pub fn check_invariance(action: &ActionMatrix, f: &HomogPoly) -> Result<bool> {
    action.leaves_invariant(f)
}

/// Is `f_big` the cone over `f_small` along the listed coordinates?  True
/// exactly when renaming variable `i` of `f_small` to coordinate `kept[i]`
/// reproduces `f_big`, which in particular forces `f_big` to involve only
/// the kept coordinates.
pub fn check_cone(f_big: &HomogPoly, f_small: &HomogPoly, kept: &[usize]) -> Result<bool> {
    if kept.len() != f_small.num_vars() {
        return Err(Error::DimensionMismatch { expected: f_small.num_vars(), got: kept.len() });
    }
    for &k in kept {
        if k >= f_big.num_vars() {
            return Err(Error::IndexOutOfRange { index: k, len: f_big.num_vars() });
        }
    }
    let lifted = f_small.poly().remap(f_big.poly().vars(), kept)?;
    Ok(f_big.poly().try_sub(&lifted)?.is_zero())
}
