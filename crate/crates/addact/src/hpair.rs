//! A *pair* couples a finite local algebra `A` with an ordered subspace
//! `U ⊂ m` of codimension two in `A` that generates `A` as an algebra,
//! plus a complement vector `e` with `m = U ⊕ ⟨e⟩`.  The pair fixes
//! projective coordinates on `P(A)`: `z0` is the unit, `z1..z_{N-2}` follow
//! the caller's order on `U`, and `z_{N-1}` is `e`.  In these coordinates
//! the orbit closure of `[1:0:…:0]` under the unipotent group
//! `exp(t1 u1 + … )` is a hypersurface; this module synthesizes its
//! equation, the matrix of the group action, the fixed locus, and the
//! reduction that strips the largest ideal of `A` contained in `U`.

use std::fmt;

use num_traits::{One, Zero};

use crate::artin::{unit_vec, Element, LocalAlgebra, QuotientMap, Subspace};
use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Poly, Scalar, Vars};
use crate::linalg;

/// Local algebra with an ordered generating subspace of codimension two and
/// a distinguished complement line.  Construction validates every axiom, so
/// a value of this type always carries a genuine pair.
#[derive(Clone, Debug)]
pub struct HPair {
    algebra: LocalAlgebra,
    u_vectors: Vec<Vec<Scalar>>,
    u_space: Subspace,
    complement: Vec<Scalar>,
    // inverse of the frame matrix whose columns are 1, u_1, ..., u_{N-2}, e;
    // row N-1 is the functional vanishing on <1> + U and sending e to 1
    frame_inv: Vec<Vec<Scalar>>,
}

impl HPair {
    /// Build a pair from an ordered independent spanning list for `U`.  The
    /// list order becomes the coordinate order `z1, z2, …`.  With
    /// `complement = None` the pair uses the last basis monomial (in listing
    /// order) that falls outside `U`.
    pub fn new(
        algebra: &LocalAlgebra,
        u_vectors: Vec<Vec<Scalar>>,
        complement: Option<Vec<Scalar>>,
    ) -> Result<HPair> {
        let n = algebra.dim();
        for v in &u_vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            if !v[0].is_zero() {
                return Err(Error::NotInMaximalIdeal);
            }
        }
        let u_space = Subspace::from_spanning(n, u_vectors.iter().cloned());
        if u_space.dim() != u_vectors.len() {
            return Err(Error::InvalidRange(
                "the spanning list for U is linearly dependent".into(),
            ));
        }
        if u_space.dim() + 2 != n {
            return Err(Error::WrongCodimension {
                expected: n.saturating_sub(2),
                got: u_space.dim(),
            });
        }
        if !algebra.generates_algebra(&u_space) {
            return Err(Error::DoesNotGenerate);
        }
        let complement = match complement {
            Some(e) => {
                if e.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: e.len(),
                    });
                }
                if !e[0].is_zero() {
                    return Err(Error::NotInMaximalIdeal);
                }
                if u_space.contains(&e) {
                    return Err(Error::ComplementInU);
                }
                e
            }
            None => default_complement(algebra, &u_space)?,
        };
        // frame matrix columns: 1, u_1, ..., u_{N-2}, e
        let mut cols: Vec<&[Scalar]> = Vec::with_capacity(n);
        let unit0 = unit_vec(n, 0);
        cols.push(&unit0);
        for u in &u_vectors {
            cols.push(u);
        }
        cols.push(&complement);
        let mat: Vec<Vec<Scalar>> = (0..n)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let frame_inv = linalg::invert(&mat).ok_or_else(|| {
            Error::InternalInvariantViolation("pair frame matrix is singular".into())
        })?;
        Ok(HPair {
            algebra: algebra.clone(),
            u_vectors,
            u_space,
            complement,
            frame_inv,
        })
    }

    /// Build a pair taking the coordinate order from the echelon basis of a
    /// subspace instead of an explicit list.
    pub fn from_subspace(
        algebra: &LocalAlgebra,
        u: &Subspace,
        complement: Option<Vec<Scalar>>,
    ) -> Result<HPair> {
        HPair::new(algebra, u.rows().to_vec(), complement)
    }

    pub fn algebra(&self) -> &LocalAlgebra {
        &self.algebra
    }

    /// Projective dimension count: the pair lives in `P^{N-1}` with `N` the
    /// algebra dimension.
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn u_vectors(&self) -> &[Vec<Scalar>] {
        &self.u_vectors
    }

    pub fn u_space(&self) -> &Subspace {
        &self.u_space
    }

    pub fn complement(&self) -> &[Scalar] {
        &self.complement
    }

    /// The `U` list rendered as polynomials in the algebra's presentation
    /// variables, in coordinate order.
    pub fn u_polys(&self) -> Vec<Poly> {
        self.u_vectors
            .iter()
            .map(|v| self.algebra.vector_to_poly(v))
            .collect()
    }

    pub fn complement_poly(&self) -> Poly {
        self.algebra.vector_to_poly(&self.complement)
    }

    /// Express algebra coordinates in the pair frame `(1, u_1, …, e)`.
    fn project_coords(&self, coords: &[Poly]) -> Result<Vec<Poly>> {
        let vars = coords[0].vars().clone();
        let n = self.dim();
        let mut out = Vec::with_capacity(n);
        for row in &self.frame_inv {
            let mut acc = Poly::zero(&vars);
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.try_add(&coords[k].scale(c))?;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// The homogeneous equation of the orbit-closure hypersurface in the
    /// pair coordinates `z0..z_{N-1}`.
    ///
    /// The generic orbit point is `exp`-parametrized, so its `z`-coordinates
    /// satisfy: the `e`-component of `log(z0^{-1} · point)` is a fixed
    /// polynomial in the others.  Clearing `z0` denominators homogenizes
    /// that relation; the result is monic in `z0^{D-1} z_{N-1}`.
    pub fn hypersurface_equation(&self) -> Result<HomogPoly> {
        let n = self.dim();
        let zvars = Vars::z_block(n);
        let mut w = self.algebra.zero_element().promote(&zvars)?;
        for (j, u) in self.u_vectors.iter().enumerate() {
            let term = Element::from_scalars(u.clone()).scale_poly(&Poly::var(&zvars, j + 1)?)?;
            w = w.try_add(&term)?;
        }
        let e_term = Element::from_scalars(self.complement.clone())
            .scale_poly(&Poly::var(&zvars, n - 1)?)?;
        w = w.try_add(&e_term)?;
        let arg = self.algebra.one_element().promote(&zvars)?.try_add(&w)?;
        let logw = self.algebra.log_unipotent(&arg)?;
        let phi = &self.frame_inv[n - 1];
        let mut p = Poly::zero(&zvars);
        for (k, c) in phi.iter().enumerate() {
            if !c.is_zero() {
                p = p.try_add(&logw.coord(k).scale(c))?;
            }
        }
        let df = p.total_degree().ok_or_else(|| {
            Error::InternalInvariantViolation("orbit projection vanished".into())
        })?;
        // the equation degree equals the nilpotency degree after stripping
        // the largest ideal inside U
        let j = self.algebra.largest_ideal_in(&self.u_space)?;
        let reduced_nilpotency = if j.is_zero() {
            self.algebra.nilpotency()
        } else {
            self.algebra.quotient_by_ideal(&j)?.0.nilpotency()
        };
        if df != reduced_nilpotency {
            return Err(Error::InternalInvariantViolation(format!(
                "equation degree {df} does not match reduced nilpotency {reduced_nilpotency}"
            )));
        }
        let z0 = Poly::var(&zvars, 0)?;
        let mut f = Poly::zero(&zvars);
        for i in 1..=df {
            let piece = p.homogeneous_component(i);
            if piece.is_zero() {
                continue;
            }
            f = f.try_add(&piece.try_mul(&z0.pow(df - i))?)?;
        }
        let eq = HomogPoly::from_poly(f)?;
        let mut anchor = vec![0u32; n];
        anchor[0] = df - 1;
        anchor[n - 1] = 1;
        if !eq.poly.coefficient(&Monomial::from_exps(anchor)).is_one() {
            return Err(Error::InternalInvariantViolation(
                "anchor coefficient of the equation is not 1".into(),
            ));
        }
        Ok(eq)
    }

    /// Matrix of the unipotent group element `exp(t1 u1 + … + t_{N-2} u_{N-2})`
    /// acting on the pair coordinates; entries are exact polynomials in the
    /// parameters `t1..t_{N-2}`.
    pub fn action_matrix(&self) -> Result<ActionMatrix> {
        let n = self.dim();
        let params = Vars::t_block(n - 2);
        let mut u = self.algebra.zero_element().promote(&params)?;
        for (j, uv) in self.u_vectors.iter().enumerate() {
            let term = Element::from_scalars(uv.clone()).scale_poly(&Poly::var(&params, j)?)?;
            u = u.try_add(&term)?;
        }
        let flow = self.algebra.exp_nilpotent(&u)?;
        let mut frames: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        frames.push(unit_vec(n, 0));
        frames.extend(self.u_vectors.iter().cloned());
        frames.push(self.complement.clone());
        let mut rows = vec![vec![Poly::zero(&params); n]; n];
        for (j, fr) in frames.iter().enumerate() {
            let moved = self
                .algebra
                .mul_elements(&flow, &Element::from_scalars(fr.clone()))?;
            let coords = self.project_coords(moved.coords())?;
            for (i, c) in coords.into_iter().enumerate() {
                rows[i][j] = c;
            }
        }
        Ok(ActionMatrix { params, rows })
    }

    /// The projective subspace fixed pointwise by the whole group: the
    /// annihilator of `U`, reported in pair coordinates.
    pub fn fixed_locus(&self) -> Subspace {
        let ann = self.algebra.annihilator(&self.u_space);
        let rows = ann
            .rows()
            .iter()
            .map(|r| linalg::mat_vec(&self.frame_inv, r));
        Subspace::from_spanning(self.dim(), rows)
    }

    /// The largest ideal of the algebra contained in `U`; zero exactly when
    /// the pair is non-degenerate.
    pub fn degeneracy_ideal(&self) -> Result<Subspace> {
        self.algebra.largest_ideal_in(&self.u_space)
    }

    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(self.degeneracy_ideal()?.is_zero())
    }

    /// Degeneracy verdict plus the uniqueness statement it certifies.  For a
    /// non-degenerate pair the theory forces the algebra to be Gorenstein
    /// with `m = U ⊕ Soc`; both facts are re-checked here.
    pub fn uniqueness_report(&self) -> Result<UniquenessReport> {
        let j = self.degeneracy_ideal()?;
        let nondegenerate = j.is_zero();
        if nondegenerate {
            if !self.algebra.is_gorenstein() {
                return Err(Error::InternalInvariantViolation(
                    "non-degenerate pair on a non-Gorenstein algebra".into(),
                ));
            }
            let soc = self.algebra.socle();
            let sum = self.u_space.sum(&soc);
            if sum.dim() != self.u_space.dim() + soc.dim() || sum.dim() + 1 != self.dim() {
                return Err(Error::InternalInvariantViolation(
                    "U and the socle do not split the maximal ideal".into(),
                ));
            }
        }
        let message = if nondegenerate {
            "action is unique".to_string()
        } else {
            "at least two non-equivalent actions exist".to_string()
        };
        Ok(UniquenessReport {
            nondegenerate,
            largest_ideal_dim: j.dim(),
            message,
        })
    }

    /// Quotient the pair by an ideal contained in `U` (default: the largest
    /// one).  The image of the `U` list keeps its order, skipping vectors
    /// that become dependent; `kept_z_indices` names the surviving source
    /// coordinates, so the old equation restricted to them is the new one.
    pub fn reduce(&self, ideal: Option<&Subspace>) -> Result<ReduceOutcome> {
        let n = self.dim();
        let default_ideal = ideal.is_none();
        let j = match ideal {
            Some(s) => s.clone(),
            None => self.degeneracy_ideal()?,
        };
        if !self.u_space.contains_space(&j) {
            return Err(Error::IdealNotInsideU);
        }
        if j.is_zero() {
            return Ok(ReduceOutcome {
                pair: self.clone(),
                map: QuotientMap::new(Subspace::zero(n)),
                kept_z_indices: (0..n).collect(),
                notes: Vec::new(),
            });
        }
        let (q, map) = self.algebra.quotient_by_ideal(&j)?;
        let mut kept_z = vec![0usize];
        let mut new_u: Vec<Vec<Scalar>> = Vec::new();
        let mut span = Subspace::zero(q.dim());
        for (idx, uv) in self.u_vectors.iter().enumerate() {
            let pv = map.project(uv);
            let grown =
                Subspace::from_spanning(q.dim(), span.rows().iter().cloned().chain([pv.clone()]));
            if grown.dim() > span.dim() {
                span = grown;
                new_u.push(pv);
                kept_z.push(idx + 1);
            }
        }
        let mut notes = Vec::new();
        let pe = map.project(&self.complement);
        let (new_e, e_survives) = if span.contains(&pe) {
            // unreachable for ideals inside U, kept as a guard for callers
            // that relax the containment in the future
            let fresh = default_complement(&q, &span)?;
            notes.push(format!(
                "complement image {} lies in the image of U; replaced by {}",
                q.vector_to_poly(&pe),
                q.vector_to_poly(&fresh)
            ));
            (fresh, false)
        } else {
            (pe, true)
        };
        if e_survives {
            kept_z.push(n - 1);
        }
        let pair = HPair::new(&q, new_u, Some(new_e))?;
        if default_ideal && !pair.is_nondegenerate()? {
            return Err(Error::InternalInvariantViolation(
                "reduction by the largest ideal left a degenerate pair".into(),
            ));
        }
        Ok(ReduceOutcome {
            pair,
            map,
            kept_z_indices: kept_z,
            notes,
        })
    }
}

/// Pick the last basis monomial (in listing order) not contained in `u`.
fn default_complement(algebra: &LocalAlgebra, u: &Subspace) -> Result<Vec<Scalar>> {
    let n = algebra.dim();
    for i in (1..n).rev() {
        let v = unit_vec(n, i);
        if !u.contains(&v) {
            return Ok(v);
        }
    }
    Err(Error::InternalInvariantViolation(
        "no basis monomial lies outside U".into(),
    ))
}

/// Outcome of [`HPair::reduce`]: the smaller pair, the quotient map on
/// algebra coordinates, the surviving projective coordinate indices, and
/// any notes about choices the reduction had to make.
#[derive(Clone, Debug)]
pub struct ReduceOutcome {
    pub pair: HPair,
    pub map: QuotientMap,
    pub kept_z_indices: Vec<usize>,
    pub notes: Vec<String>,
}

/// Degeneracy verdict for a pair together with the uniqueness statement it
/// supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessReport {
    pub nondegenerate: bool,
    pub largest_ideal_dim: usize,
    pub message: String,
}

/// Homogeneous polynomial over a `z0..z_{N-1}` coordinate block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPoly {
    poly: Poly,
    degree: u32,
}

impl HomogPoly {
    /// Wrap a polynomial, insisting it is homogeneous and nonzero.
    pub fn from_poly(poly: Poly) -> Result<HomogPoly> {
        let degree = poly
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidRange("polynomial is not homogeneous".into()))?;
        Ok(HomogPoly { poly, degree })
    }

    pub fn parse(num_vars: usize, text: &str) -> Result<HomogPoly> {
        HomogPoly::from_poly(Poly::parse(&Vars::z_block(num_vars), text)?)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.poly.vars().len()
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Square matrix of parameter polynomials describing how the group moves
/// the pair coordinates: new `z_i = Σ_j entry(i, j) · z_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionMatrix {
    params: Vars,
    rows: Vec<Vec<Poly>>,
}

impl ActionMatrix {
    pub fn params(&self) -> &Vars {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    /// The matrix at parameter value zero (constant terms only).
    pub fn at_zero(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(Poly::constant_term).collect())
            .collect()
    }

    pub fn is_identity_at_zero(&self) -> bool {
        self.at_zero().iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        })
    }

    /// One row in the traditional display `z_i + … + (coeff)*z0`, listing
    /// columns from the highest coordinate down.
    pub fn row_string(&self, i: usize) -> String {
        let n = self.rows.len();
        let mut pieces = Vec::new();
        for j in (0..n).rev() {
            let p = &self.rows[i][j];
            if p.is_zero() {
                continue;
            }
            let zj = format!("z{j}");
            if p.num_terms() == 1 {
                let s = p.to_string();
                if s == "1" {
                    pieces.push(zj);
                } else {
                    pieces.push(format!("{s}*{zj}"));
                }
            } else {
                pieces.push(format!("({p})*{zj}"));
            }
        }
        pieces.join(" + ")
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows.len()).map(|i| self.row_string(i)).collect()
    }

    /// Substitute the moved coordinates into a form of matching dimension.
    /// The result lives over the joint ambient `t1..t_m, z0..z_{N-1}`.
    pub fn apply_to_equation(&self, f: &HomogPoly) -> Result<Poly> {
        let n = self.rows.len();
        if f.num_vars() != n {
            return Err(Error::VariableMismatch);
        }
        let m = self.params.len();
        let joint = Vars::new(
            self.params
                .names()
                .iter()
                .cloned()
                .chain(f.poly().vars().names().iter().cloned()),
        );
        let tmap: Vec<usize> = (0..m).collect();
        let mut assigns = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Poly::zero(&joint);
            for j in 0..n {
                if self.rows[i][j].is_zero() {
                    continue;
                }
                let entry = self.rows[i][j].remap(&joint, &tmap)?;
                acc = acc.try_add(&entry.try_mul(&Poly::var(&joint, m + j)?)?)?;
            }
            assigns.push(acc);
        }
        f.poly().substitute(&assigns)
    }

    /// Exact check that the hypersurface form is invariant: `f` composed
    /// with the action equals `f` identically in parameters and coordinates.
    pub fn leaves_invariant(&self, f: &HomogPoly) -> Result<bool> {
        let composed = self.apply_to_equation(f)?;
        let m = self.params.len();
        let n = f.num_vars();
        let zmap: Vec<usize> = (m..m + n).collect();
        Ok(composed == f.poly().remap(composed.vars(), &zmap)?)
    }

    /// Exact check of additivity: the matrix at `t` times the matrix at `s`
    /// equals the matrix at `t + s`.
    pub fn satisfies_group_law(&self) -> Result<bool> {
        let m = self.params.len();
        let n = self.rows.len();
        let joint = Vars::new(
            self.params
                .names()
                .iter()
                .cloned()
                .chain((1..=m).map(|i| format!("s{i}"))),
        );
        let tmap: Vec<usize> = (0..m).collect();
        let smap: Vec<usize> = (m..2 * m).collect();
        let at_t = remap_rows(&self.rows, &joint, &tmap)?;
        let at_s = remap_rows(&self.rows, &joint, &smap)?;
        let prod = mat_mul(&at_t, &at_s)?;
        let mut sums = Vec::with_capacity(m);
        for j in 0..m {
            sums.push(Poly::var(&joint, j)?.try_add(&Poly::var(&joint, m + j)?)?);
        }
        for i in 0..n {
            for j in 0..n {
                if prod[i][j] != self.rows[i][j].substitute(&sums)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Exact check that the matrix minus the identity is nilpotent.
    pub fn is_unipotent(&self) -> Result<bool> {
        let n = self.rows.len();
        let one = Poly::one(&self.params);
        let mut shifted = self.rows.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = row[i].try_sub(&one)?;
        }
        let mut acc = shifted.clone();
        for _ in 1..n {
            if acc.iter().all(|r| r.iter().all(|p| p.is_zero())) {
                break;
            }
            acc = mat_mul(&acc, &shifted)?;
        }
        Ok(acc.iter().all(|r| r.iter().all(|p| p.is_zero())))
    }
}

fn remap_rows(rows: &[Vec<Poly>], target: &Vars, map: &[usize]) -> Result<Vec<Vec<Poly>>> {
    rows.iter()
        .map(|r| r.iter().map(|p| p.remap(target, map)).collect())
        .collect()
}

fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Result<Vec<Vec<Poly>>> {
    let n = a.len();
    let vars = a[0][0].vars().clone();
    let mut out = vec![vec![Poly::zero(&vars); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Poly::zero(&vars);
            for k in 0..n {
                if a[i][k].is_zero() || b[k][j].is_zero() {
                    continue;
                }
                acc = acc.try_add(&a[i][k].try_mul(&b[k][j])?)?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// Isomorphism invariants cheap enough to compute on every algebra; two
/// pairs with different vectors cannot be equivalent, while equality proves
/// nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVector {
    pub dim: usize,
    pub embedding_dim: usize,
    pub nilpotency: u32,
    pub hilbert: Vec<usize>,
    pub socle_dim: usize,
    pub gorenstein: bool,
}

pub fn invariant_vector(a: &LocalAlgebra) -> InvariantVector {
    InvariantVector {
        dim: a.dim(),
        embedding_dim: a.embedding_dim(),
        nilpotency: a.nilpotency(),
        hilbert: a.hilbert_function(),
        socle_dim: a.socle().dim(),
        gorenstein: a.is_gorenstein(),
    }
}

impl InvariantVector {
    /// `Some(reason)` when the two vectors differ in any entry, `None` when
    /// they agree everywhere (the comparison is then inconclusive).
    pub fn nonequivalence_certificate(&self, other: &InvariantVector) -> Option<String> {
        if self.dim != other.dim {
            return Some(format!("dims {} vs {}", self.dim, other.dim));
        }
        if self.embedding_dim != other.embedding_dim {
            return Some(format!(
                "embedding dims {} vs {}",
                self.embedding_dim, other.embedding_dim
            ));
        }
        if self.nilpotency != other.nilpotency {
            return Some(format!(
                "nilpotency degrees {} vs {}",
                self.nilpotency, other.nilpotency
            ));
        }
        if self.hilbert != other.hilbert {
            return Some(format!(
                "Hilbert functions {:?} vs {:?}",
                self.hilbert, other.hilbert
            ));
        }
        if self.socle_dim != other.socle_dim {
            return Some(format!(
                "socle dims {} vs {}",
                self.socle_dim, other.socle_dim
            ));
        }
        if self.gorenstein != other.gorenstein {
            return Some(format!(
                "Gorenstein {} vs {}",
                self.gorenstein, other.gorenstein
            ));
        }
        None
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim={} emb={} nilp={} hilbert={:?} socle={} gorenstein={}",
            self.dim, self.embedding_dim, self.nilpotency, self.hilbert, self.socle_dim,
            if self.gorenstein { "yes" } else { "no" }
        )
    }
}

/// Pairs are proxy-equal when their invariant vectors agree and their
/// equations coincide exactly.
pub fn proxy_equal(a: &HPair, b: &HPair) -> Result<bool> {
    Ok(invariant_vector(a.algebra()) == invariant_vector(b.algebra())
        && a.hypersurface_equation()? == b.hypersurface_equation()?)
}
