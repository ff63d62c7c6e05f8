//! Finite-dimensional local commutative algebras over the rationals.
//!
//! An algebra enters as a [`Presentation`]: an ambient variable list plus
//! relation polynomials without constant term. `build_algebra` row-reduces
//! degree-truncated multiples of the relations at increasing degree bounds
//! until the quotient dimension stabilizes; by Nakayama the stable bound D
//! certifies that every monomial of degree >= D vanishes in the local
//! quotient. The surviving (non-pivot) monomials label a basis, every lower
//! monomial gets a normal form, and all pairwise basis products are
//! tabulated. Everything downstream - socles, annihilators, largest ideals,
//! quotients, exponentials - is exact linear algebra over that table.
//!
//! Elements carry coordinate vectors whose entries are polynomials in an
//! auxiliary parameter ambient, so one code path serves both concrete
//! elements (constant coordinates) and parametric families such as
//! exp(t1*u1 + ... + tm*um).

mod subspace;

pub use subspace::{QuotientMap, Subspace};

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{ratio, Monomial, Poly, Scalar, Vars};
use crate::linalg;

/// Truncation bounds are searched up to this degree before a build gives up;
/// presentations that have not stabilized by then are rejected as not
/// visibly finite-dimensional.
pub const DEFAULT_TRUNCATION_CAP: u32 = 32;

/// All exponent vectors of the given total degree, sorted by the monomial
/// order (within one degree that is lexicographic on exponents).
pub(crate) fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(exps: &mut Vec<u32>, pos: usize, rem: u32, out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = rem;
            out.push(Monomial::from_exps(exps.clone()));
            exps[pos] = 0;
            return;
        }
        for e in 0..=rem {
            exps[pos] = e;
            rec(exps, pos + 1, rem - e, out);
        }
        exps[pos] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    rec(&mut exps, 0, degree, &mut out);
    out.sort();
    out
}

/// All monomials of degree strictly below `bound`, ascending.
pub(crate) fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    (0..bound)
        .flat_map(|d| monomials_of_degree(nvars, d))
        .collect()
}

/// A presentation K[vars] / (relations), with the degree cap used while
/// searching for a stable truncation bound.
#[derive(Clone, Debug)]
pub struct Presentation {
    vars: Vars,
    relations: Vec<Poly>,
    cap: u32,
}

impl Presentation {
    pub fn new(vars: Vars, relations: Vec<Poly>) -> Result<Presentation> {
        if vars.is_empty() {
            return Err(Error::InvalidRange(
                "a presentation needs at least one variable".into(),
            ));
        }
        for f in &relations {
            if f.vars() != &vars {
                return Err(Error::VariableMismatch);
            }
        }
        Ok(Presentation {
            vars,
            relations,
            cap: DEFAULT_TRUNCATION_CAP,
        })
    }

    /// Declare variables by name and parse each relation over them.
    pub fn parse<S: AsRef<str>>(vars: &[&str], relations: &[S]) -> Result<Presentation> {
        let ambient = Vars::new(vars.iter().copied());
        let rels = relations
            .iter()
            .map(|s| Poly::parse(&ambient, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(ambient, rels)
    }

    pub fn with_cap(mut self, cap: u32) -> Presentation {
        self.cap = cap.max(2);
        self
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn build(&self) -> Result<LocalAlgebra> {
        build_algebra(self)
    }
}

/// Row space of the relation multiples truncated below a degree bound,
/// over the monomial columns of that bound (ascending order).
pub(crate) struct SpanData {
    pub cols: Vec<Monomial>,
    pub rref: linalg::Rref,
    pub bound: u32,
}

impl SpanData {
    pub fn quotient_dim(&self) -> usize {
        self.cols.len() - self.rref.rank()
    }
}

/// Row-reduce every product (monomial multiplier) x (relation), truncated
/// below `bound`. Multiplier degrees up to bound - 1 - mindeg(relation)
/// suffice: anything larger only contributes terms that get truncated.
pub(crate) fn truncated_span(vars: &Vars, relations: &[Poly], bound: u32) -> SpanData {
    let cols = monomials_below(vars.len(), bound);
    let index: BTreeMap<Monomial, usize> = cols
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut rows = Vec::new();
    for f in relations {
        let fmin = match f.min_degree() {
            Some(d) => d,
            None => continue,
        };
        if fmin >= bound {
            continue;
        }
        for mu_deg in 0..=(bound - 1 - fmin) {
            for mu in monomials_of_degree(vars.len(), mu_deg) {
                let shifted = f
                    .try_mul(&Poly::monomial(vars, mu, Scalar::one()))
                    .expect("same ambient")
                    .truncate_at_degree(bound);
                if shifted.is_zero() {
                    continue;
                }
                let mut v = vec![Scalar::zero(); cols.len()];
                for (m, c) in shifted.terms() {
                    v[index[m]] = c.clone();
                }
                rows.push(v);
            }
        }
    }
    let rref = linalg::rref(rows, cols.len());
    SpanData { cols, rref, bound }
}

/// A finite-dimensional local algebra with a chosen monomial basis and the
/// full multiplication table. `basis()[0]` is always the class of 1; basis
/// labels are listed by degree with earlier-declared variables first.
#[derive(Clone, Debug)]
pub struct LocalAlgebra {
    presentation: Presentation,
    dim: usize,
    stab_degree: u32,
    basis: Vec<Monomial>,
    basis_index: BTreeMap<Monomial, usize>,
    normal_forms: BTreeMap<Monomial, Vec<Scalar>>,
    table: Vec<Vec<Vec<Scalar>>>,
    nilpotency: u32,
    warnings: Vec<String>,
}

pub fn build_algebra(p: &Presentation) -> Result<LocalAlgebra> {
    let mut warnings = Vec::new();
    for f in p.relations() {
        if !f.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm(f.to_string()));
        }
        if f.min_degree() == Some(1) {
            warnings.push(format!(
                "relation {f} has a linear term, so a variable is redundant \
                 and the embedding dimension drops"
            ));
        }
    }

    let mut prev: Option<SpanData> = None;
    for bound in 1..=p.cap() {
        let span = truncated_span(p.vars(), p.relations(), bound);
        if let Some(prev_span) = prev {
            if prev_span.quotient_dim() == span.quotient_dim() {
                return assemble(p, prev_span, warnings);
            }
        }
        prev = Some(span);
    }
    Err(Error::TruncationCapExceeded {
        cap: p.cap() as usize,
    })
}

/// Extract basis, normal forms, and the product table from the span at the
/// stable bound, then run structural self-checks.
fn assemble(p: &Presentation, span: SpanData, warnings: Vec<String>) -> Result<LocalAlgebra> {
    let stab_degree = span.bound;
    let pivot_row: BTreeMap<usize, usize> = span
        .rref
        .pivots
        .iter()
        .enumerate()
        .map(|(r, &c)| (c, r))
        .collect();

    let mut basis: Vec<Monomial> = span
        .cols
        .iter()
        .enumerate()
        .filter(|(c, _)| !pivot_row.contains_key(c))
        .map(|(_, m)| m.clone())
        .collect();
    basis.sort_by(|a, b| a.display_cmp(b));
    let dim = basis.len();
    if dim == 0 || !basis[0].is_one() {
        return Err(Error::InternalInvariantViolation(
            "the class of 1 must survive in a local quotient".into(),
        ));
    }
    let basis_index: BTreeMap<Monomial, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();

    // Normal form of every monomial below the stable bound. A pivot column
    // is rewritten by its echelon row; in reduced form the other nonzero
    // entries of that row sit at non-pivot columns, i.e. at basis labels.
    let mut normal_forms: BTreeMap<Monomial, Vec<Scalar>> = BTreeMap::new();
    for (c, mon) in span.cols.iter().enumerate() {
        let mut v = vec![Scalar::zero(); dim];
        match pivot_row.get(&c) {
            Some(&r) => {
                for (j, entry) in span.rref.rows[r].iter().enumerate() {
                    if j == c || entry.is_zero() {
                        continue;
                    }
                    let b = basis_index.get(&span.cols[j]).ok_or_else(|| {
                        Error::InternalInvariantViolation(
                            "echelon row supported outside the basis".into(),
                        )
                    })?;
                    v[*b] = -entry.clone();
                }
            }
            None => v[basis_index[mon]] = Scalar::one(),
        }
        normal_forms.insert(mon.clone(), v);
    }

    // Pairwise products through the normal forms; a product of degree at or
    // above the stable bound is zero in the quotient.
    let zero_vec = vec![Scalar::zero(); dim];
    let mut table: Vec<Vec<Vec<Scalar>>> = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let prod = basis[i].mul(&basis[j]);
            table[i][j] = match normal_forms.get(&prod) {
                Some(v) => v.clone(),
                None => zero_vec.clone(),
            };
        }
    }

    verify_associativity(dim, &table)?;

    let nilpotency = power_chain(dim, &table).len() as u32;
    let top = basis.iter().map(Monomial::degree).max().unwrap_or(0);
    // For a fresh build the normal form of a monomial only involves basis
    // labels of the same or higher degree, which forces the power filtration
    // to be the degree filtration; a mismatch means the table is corrupt.
    if nilpotency != top {
        return Err(Error::InternalInvariantViolation(format!(
            "socle degree {nilpotency} disagrees with the top basis degree {top}"
        )));
    }

    Ok(LocalAlgebra {
        presentation: p.clone(),
        dim,
        stab_degree,
        basis,
        basis_index,
        normal_forms,
        table,
        nilpotency,
        warnings,
    })
}

fn verify_associativity(dim: usize, table: &[Vec<Vec<Scalar>>]) -> Result<()> {
    // (b_i b_j) b_k vs b_i (b_j b_k); by commutativity the triple (k, j, i)
    // checks the same identity, so i <= k suffices.
    for i in 0..dim {
        for j in 0..dim {
            for k in i..dim {
                let left = mul_vec_by_unit(table, &table[i][j], k);
                let right = mul_vec_by_unit(table, &table[j][k], i);
                if left != right {
                    return Err(Error::InternalInvariantViolation(format!(
                        "associativity fails on basis triple ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// v * b_g through the table.
fn mul_vec_by_unit(table: &[Vec<Vec<Scalar>>], v: &[Scalar], g: usize) -> Vec<Scalar> {
    let dim = table.len();
    let mut out = vec![Scalar::zero(); dim];
    for (c, coef) in v.iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        for (t, e) in table[c][g].iter().enumerate() {
            if !e.is_zero() {
                out[t] += coef * e;
            }
        }
    }
    out
}

fn mul_scalar_coords(table: &[Vec<Vec<Scalar>>], a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let dim = table.len();
    let mut out = vec![Scalar::zero(); dim];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let c = ai * bj;
            for (k, e) in table[i][j].iter().enumerate() {
                if !e.is_zero() {
                    out[k] += &c * e;
                }
            }
        }
    }
    out
}

/// The strictly decreasing chain [m^1, m^2, ...] down to the last nonzero
/// power; its length is the nilpotency degree.
fn power_chain(dim: usize, table: &[Vec<Vec<Scalar>>]) -> Vec<Subspace> {
    let mut chain = Vec::new();
    let mut cur = Subspace::from_spanning(dim, (1..dim).map(|i| unit_vec(dim, i)));
    while !cur.is_zero() {
        chain.push(cur.clone());
        let mut rows = Vec::new();
        for row in cur.rows() {
            for g in 1..dim {
                rows.push(mul_vec_by_unit(table, row, g));
            }
        }
        cur = Subspace::from_spanning(dim, rows);
    }
    chain
}

pub(crate) fn unit_vec(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

impl LocalAlgebra {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn vars(&self) -> &Vars {
        self.presentation.vars()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The degree bound D with m^D = 0 certified by the build.
    pub fn stab_degree(&self) -> u32 {
        self.stab_degree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_names(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|m| Poly::monomial(self.vars(), m.clone(), Scalar::one()).to_string())
            .collect()
    }

    /// The basis label `i` as a polynomial (a canonical lift).
    pub fn basis_poly(&self, i: usize) -> Poly {
        Poly::monomial(self.vars(), self.basis[i].clone(), Scalar::one())
    }

    /// Largest j with m^j != 0.
    pub fn nilpotency(&self) -> u32 {
        self.nilpotency
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Same basis labels and same structure constants.
    pub fn structure_eq(&self, other: &LocalAlgebra) -> bool {
        self.dim == other.dim && self.basis == other.basis && self.table == other.table
    }

    /// The polynomial sum_t v[t] * basis label t, a canonical lift of the
    /// class with coordinates v.
    pub fn vector_to_poly(&self, v: &[Scalar]) -> Poly {
        let mut acc = Poly::zero(self.vars());
        for (t, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let term = Poly::monomial(self.vars(), self.basis[t].clone(), c.clone());
                acc = acc.try_add(&term).expect("same ambient");
            }
        }
        acc
    }

    /// Class of a polynomial: substitute normal forms term by term. Terms of
    /// degree at or above the stable bound vanish.
    pub fn normal_form(&self, f: &Poly) -> Result<Element> {
        if f.vars() != self.vars() {
            return Err(Error::VariableMismatch);
        }
        let mut coords = vec![Scalar::zero(); self.dim];
        for (mon, c) in f.terms() {
            if let Some(nf) = self.normal_forms.get(mon) {
                for (k, e) in nf.iter().enumerate() {
                    if !e.is_zero() {
                        coords[k] += c * e;
                    }
                }
            }
        }
        Ok(Element::from_scalars(coords))
    }

    /// Basis coordinates of a scalar polynomial's class.
    pub fn coords_of(&self, f: &Poly) -> Result<Vec<Scalar>> {
        self.normal_form(f)?.to_scalars().ok_or_else(|| {
            Error::InternalInvariantViolation(
                "scalar polynomial reduced to symbolic coordinates".into(),
            )
        })
    }

    pub fn zero_element(&self) -> Element {
        Element::from_scalars(vec![Scalar::zero(); self.dim])
    }

    pub fn one_element(&self) -> Element {
        Element::from_scalars(unit_vec(self.dim, 0))
    }

    pub fn basis_element(&self, i: usize) -> Result<Element> {
        if i >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.dim,
            });
        }
        Ok(Element::from_scalars(unit_vec(self.dim, i)))
    }

    pub fn element_from_scalars(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: coords.len(),
            });
        }
        Ok(Element::from_scalars(coords))
    }

    pub fn element_from_coords(&self, params: &Vars, coords: Vec<Poly>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: coords.len(),
            });
        }
        Element::from_coords(params, coords)
    }

    fn check_dim(&self, e: &Element) -> Result<()> {
        if e.coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: e.coords.len(),
            });
        }
        Ok(())
    }

    pub fn mul_elements(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        let (a, b) = align(a, b)?;
        if let (Some(x), Some(y)) = (a.to_scalars(), b.to_scalars()) {
            return Ok(Element::from_scalars(mul_scalar_coords(
                &self.table,
                &x,
                &y,
            )));
        }
        let params = a.params.clone();
        let mut out = vec![Poly::zero(&params); self.dim];
        for (i, ai) in a.coords.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let prod = ai.try_mul(bj)?;
                for (k, e) in self.table[i][j].iter().enumerate() {
                    if !e.is_zero() {
                        out[k] = out[k].try_add(&prod.scale(e))?;
                    }
                }
            }
        }
        Element::from_coords(&params, out)
    }

    /// exp(u) = sum_{i <= d} u^i / i! for u in the maximal ideal.
    pub fn exp_nilpotent(&self, u: &Element) -> Result<Element> {
        self.check_dim(u)?;
        if !u.coords[0].is_zero() {
            return Err(Error::NotNilpotent);
        }
        let mut acc = self.one_element().promote(&u.params)?;
        let mut term = self.one_element().promote(&u.params)?;
        for i in 1..=self.nilpotency {
            term = self.mul_elements(&term, u)?.scale(&ratio(1, i as i64));
            if term.is_zero() {
                break;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// log(u) = sum_{i <= d} (-1)^{i+1} (u - 1)^i / i for u with unit part 1.
    pub fn log_unipotent(&self, u: &Element) -> Result<Element> {
        self.check_dim(u)?;
        if u.coords[0] != Poly::one(&u.params) {
            return Err(Error::UnitPartNotOne);
        }
        let mut n = u.clone();
        n.coords[0] = Poly::zero(&u.params);
        let mut acc = self.zero_element().promote(&u.params)?;
        let mut pw = self.one_element().promote(&u.params)?;
        for i in 1..=self.nilpotency {
            pw = self.mul_elements(&pw, &n)?;
            if pw.is_zero() {
                break;
            }
            let sign = if i % 2 == 1 { 1 } else { -1 };
            acc = acc.try_add(&pw.scale(&ratio(sign, i as i64)))?;
        }
        Ok(acc)
    }

    /// The maximal ideal m as a subspace (all basis classes except 1).
    pub fn maximal_ideal(&self) -> Subspace {
        Subspace::from_spanning(self.dim, (1..self.dim).map(|i| unit_vec(self.dim, i)))
    }

    fn chain(&self) -> Vec<Subspace> {
        power_chain(self.dim, &self.table)
    }

    pub fn m_power(&self, j: u32) -> Subspace {
        if j == 0 {
            return Subspace::full(self.dim);
        }
        self.chain()
            .get(j as usize - 1)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.dim))
    }

    /// All a with a*s = 0 for every s in the subspace.
    pub fn annihilator(&self, s: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for srow in s.rows() {
            // prods[c] = b_c * s, so the k-th coordinate of a*s is
            // sum_c a_c * prods[c][k]; each (srow, k) gives one constraint.
            let prods: Vec<Vec<Scalar>> = (0..self.dim)
                .map(|c| {
                    let mut out = vec![Scalar::zero(); self.dim];
                    for (j, sj) in srow.iter().enumerate() {
                        if sj.is_zero() {
                            continue;
                        }
                        for (k, e) in self.table[c][j].iter().enumerate() {
                            if !e.is_zero() {
                                out[k] += sj * e;
                            }
                        }
                    }
                    out
                })
                .collect();
            for k in 0..self.dim {
                rows.push((0..self.dim).map(|c| prods[c][k].clone()).collect());
            }
        }
        let ker = linalg::rref(rows, self.dim).kernel();
        Subspace::from_spanning(self.dim, ker)
    }

    /// Soc A = the annihilator of the maximal ideal.
    pub fn socle(&self) -> Subspace {
        self.annihilator(&self.maximal_ideal())
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle().dim() == 1
    }

    /// (dim m^0/m^1, dim m^1/m^2, ..., dim m^d/m^{d+1}).
    pub fn hilbert_function(&self) -> Vec<usize> {
        let chain = self.chain();
        let mut dims = Vec::with_capacity(chain.len() + 2);
        dims.push(self.dim);
        dims.extend(chain.iter().map(Subspace::dim));
        dims.push(0);
        dims.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// dim m/m^2, the minimal number of algebra generators.
    pub fn embedding_dim(&self) -> usize {
        self.hilbert_function().get(1).copied().unwrap_or(0)
    }

    /// The largest ideal of the algebra contained in a subspace U of m.
    pub fn largest_ideal_in(&self, u: &Subspace) -> Result<Subspace> {
        for row in u.rows() {
            if !row[0].is_zero() {
                return Err(Error::NotInMaximalIdeal);
            }
        }
        let free = u.free_coords();
        let mut rows = Vec::new();
        for i in 0..self.dim {
            // a in J forces a*b_i into U; prods[c] is the canonical residual
            // of b_c*b_i modulo U, supported on the free coordinates.
            let prods: Vec<Vec<Scalar>> = (0..self.dim)
                .map(|c| u.reduce_vec(&self.table[c][i]))
                .collect();
            for &t in &free {
                rows.push((0..self.dim).map(|c| prods[c][t].clone()).collect());
            }
        }
        let ker = linalg::rref(rows, self.dim).kernel();
        Ok(Subspace::from_spanning(self.dim, ker))
    }

    /// Does the subspace, together with 1, generate the algebra
    /// multiplicatively?
    pub fn generates_algebra(&self, s: &Subspace) -> bool {
        let one = Subspace::from_spanning(self.dim, [unit_vec(self.dim, 0)]);
        let mut cur = s.sum(&one);
        loop {
            let mut rows: Vec<Vec<Scalar>> = cur.rows().to_vec();
            for a in cur.rows() {
                for b in s.rows() {
                    rows.push(mul_scalar_coords(&self.table, a, b));
                }
            }
            let next = Subspace::from_spanning(self.dim, rows);
            if next.dim() == cur.dim() {
                return cur.dim() == self.dim;
            }
            cur = next;
        }
    }

    /// Quotient by an ideal given as a subspace. The quotient keeps the
    /// surviving basis labels of the parent; its presentation is the parent's
    /// extended by canonical lifts of the ideal.
    pub fn quotient_by_ideal(&self, j: &Subspace) -> Result<(LocalAlgebra, QuotientMap)> {
        if j.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: j.ambient_dim(),
            });
        }
        for row in j.rows() {
            for g in 1..self.dim {
                if !j.contains(&mul_vec_by_unit(&self.table, row, g)) {
                    return Err(Error::NotAnIdeal);
                }
            }
        }
        if j.dim() == self.dim {
            return Err(Error::QuotientIsZero);
        }

        let map = QuotientMap::new(j.clone());
        let kept = map.kept().to_vec();
        let dim = kept.len();
        let basis: Vec<Monomial> = kept.iter().map(|&k| self.basis[k].clone()).collect();
        if !basis[0].is_one() {
            // a proper ideal cannot pivot on the unit coordinate
            return Err(Error::InternalInvariantViolation(
                "the unit class fell into the ideal".into(),
            ));
        }
        let basis_index: BTreeMap<Monomial, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();

        let mut table = vec![vec![Vec::new(); dim]; dim];
        for (a, &ka) in kept.iter().enumerate() {
            for (b, &kb) in kept.iter().enumerate() {
                table[a][b] = map.project(&self.table[ka][kb]);
            }
        }
        let normal_forms: BTreeMap<Monomial, Vec<Scalar>> = self
            .normal_forms
            .iter()
            .map(|(m, v)| (m.clone(), map.project(v)))
            .collect();

        let mut rels = self.presentation.relations().to_vec();
        for row in j.rows() {
            rels.push(self.vector_to_poly(row));
        }
        let presentation =
            Presentation::new(self.vars().clone(), rels)?.with_cap(self.presentation.cap());

        let nilpotency = power_chain(dim, &table).len() as u32;
        let quotient = LocalAlgebra {
            presentation,
            dim,
            stab_degree: self.stab_degree,
            basis,
            basis_index,
            normal_forms,
            table,
            nilpotency,
            warnings: self.warnings.clone(),
        };
        Ok((quotient, map))
    }

    pub fn basis_index_of(&self, m: &Monomial) -> Option<usize> {
        self.basis_index.get(m).copied()
    }
}

/// An algebra element as a coordinate vector over the basis. Coordinates are
/// polynomials in a parameter ambient; concrete elements use constant
/// coordinates over the empty ambient and promote on demand.
#[derive(Clone, PartialEq, Debug)]
pub struct Element {
    params: Vars,
    coords: Vec<Poly>,
}

impl Element {
    pub fn from_coords(params: &Vars, coords: Vec<Poly>) -> Result<Element> {
        for c in &coords {
            if c.vars() != params {
                return Err(Error::VariableMismatch);
            }
        }
        Ok(Element {
            params: params.clone(),
            coords,
        })
    }

    pub fn from_scalars(coords: Vec<Scalar>) -> Element {
        let params = Vars::empty();
        let coords = coords
            .into_iter()
            .map(|c| Poly::constant(&params, c))
            .collect();
        Element { params, coords }
    }

    pub fn params(&self) -> &Vars {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Poly {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    /// Lies in the maximal ideal, i.e. the coordinate of 1 vanishes.
    pub fn is_nilpotent(&self) -> bool {
        self.coords[0].is_zero()
    }

    /// Constant coordinates, if every entry is a scalar.
    pub fn to_scalars(&self) -> Option<Vec<Scalar>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Some(Scalar::zero())
                } else if c.num_terms() == 1 {
                    let (m, s) = c.terms().next().expect("nonzero");
                    if m.is_one() {
                        Some(s.clone())
                    } else {
                        None
                    }
                } else {
                    None
                }
            })
            .collect()
    }

    /// Reinterpret constant coordinates over a larger parameter ambient.
    pub fn promote(&self, target: &Vars) -> Result<Element> {
        if self.params.same(target) {
            return Ok(self.clone());
        }
        if !self.params.is_empty() {
            return Err(Error::VariableMismatch);
        }
        let coords = self
            .coords
            .iter()
            .map(|c| c.remap(target, &[]))
            .collect::<Result<Vec<_>>>()?;
        Element::from_coords(target, coords)
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.len(),
                got: other.coords.len(),
            });
        }
        let (a, b) = align(self, other)?;
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x.try_add(y))
            .collect::<Result<Vec<_>>>()?;
        Element::from_coords(&a.params, coords)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.try_add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            params: self.params.clone(),
            coords: self.coords.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Multiply every coordinate by a polynomial in the parameter ambient,
    /// promoting constant coordinates first.
    pub fn scale_poly(&self, c: &Poly) -> Result<Element> {
        let e = self.promote(c.vars())?;
        let coords = e
            .coords
            .iter()
            .map(|x| x.try_mul(c))
            .collect::<Result<Vec<_>>>()?;
        Element::from_coords(c.vars(), coords)
    }
}

/// Bring two elements over a common parameter ambient: equal ambients pass
/// through, constant coordinates promote, anything else is a mismatch.
fn align(a: &Element, b: &Element) -> Result<(Element, Element)> {
    if a.params.same(&b.params) {
        Ok((a.clone(), b.clone()))
    } else if a.params.is_empty() {
        Ok((a.promote(&b.params)?, b.clone()))
    } else if b.params.is_empty() {
        Ok((a.clone(), b.promote(&a.params)?))
    } else {
        Err(Error::VariableMismatch)
    }
}
