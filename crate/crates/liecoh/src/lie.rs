//! Lie algebras as structure constants, modules as action matrices, ideals,
//! quotients with a fixed linear section, derivation spaces and the induced
//! action on H¹(h, M).

use std::fmt;

use crate::error::{Error, Result};
use crate::exterior::Cochain;
use crate::field::Field;
use crate::linalg::{Matrix, QuotientPresentation, Subspace};

/// Finite-dimensional Lie algebra given by structure constants:
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    structure: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> fmt::Debug for LieAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}, basis {:?})", self.dim, self.labels)
    }
}

/// One declared bracket: (i, j, terms) with i < j.
pub type BracketTerm<E> = (usize, usize, Vec<(usize, E)>);

/// First failing axiom of a candidate Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraViolation {
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraViolation::Antisymmetry { i, j } => {
                write!(f, "antisymmetry fails at basis pair ({i}, {j})")
            }
            AlgebraViolation::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails at basis triple ({i}, {j}, {k})")
            }
        }
    }
}

/// First failing bracket-compatibility of a candidate module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleViolation {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "module axiom fails at basis pair ({}, {}): A_[ei,ej] ≠ [A_i, A_j]",
            self.i, self.j
        )
    }
}

impl<F: Field> LieAlgebra<F> {
    /// Builds from upper-triangular bracket data; antisymmetry is filled in.
    pub fn from_brackets(
        field: F,
        labels: Vec<String>,
        brackets: &[BracketTerm<F::Elem>],
    ) -> Self {
        let dim = labels.len();
        let mut structure = vec![vec![vec![field.zero(); dim]; dim]; dim];
        for (i, j, terms) in brackets {
            assert!(i < j, "only i<j bracket declarations allowed");
            for (k, c) in terms {
                structure[*i][*j][*k] = field.add(&structure[*i][*j][*k], c);
                structure[*j][*i][*k] = field.neg(&structure[*i][*j][*k]);
            }
        }
        LieAlgebra {
            field,
            dim,
            labels,
            structure,
        }
    }

    /// Builds from a full structure-constant table (no axioms assumed).
    pub fn from_structure(field: F, labels: Vec<String>, structure: Vec<Vec<Vec<F::Elem>>>) -> Self {
        let dim = labels.len();
        assert_eq!(structure.len(), dim);
        LieAlgebra {
            field,
            dim,
            labels,
            structure,
        }
    }

    pub fn abelian(field: F, labels: Vec<String>) -> Self {
        let brackets = [];
        LieAlgebra::from_brackets(field, labels, &brackets)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.structure[i][j]
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for i in 0..self.dim {
            if f.is_zero(&u[i]) {
                continue;
            }
            for j in 0..self.dim {
                if f.is_zero(&v[j]) {
                    continue;
                }
                let uv = f.mul(&u[i], &v[j]);
                for k in 0..self.dim {
                    let c = &self.structure[i][j][k];
                    if !f.is_zero(c) {
                        out[k] = f.add(&out[k], &f.mul(&uv, c));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`.
    pub fn ad(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.dim, self.dim, |r, c| {
            self.structure[i][c][r].clone()
        })
    }

    /// Checks antisymmetry (including `[e_i, e_i] = 0`) and the Jacobi
    /// identity on all basis triples; reports the first violation.
    pub fn validate(&self) -> std::result::Result<(), AlgebraViolation> {
        let f = &self.field;
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let lhs = &self.structure[i][j][k];
                    let rhs = f.neg(&self.structure[j][i][k]);
                    if *lhs != rhs {
                        return Err(AlgebraViolation::Antisymmetry { i, j });
                    }
                    if i == j && !f.is_zero(lhs) {
                        return Err(AlgebraViolation::Antisymmetry { i, j });
                    }
                }
            }
        }
        let basis =
            |i: usize| -> Vec<F::Elem> { unit_vector(&self.field, self.dim, i) };
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let a = self.bracket(&basis(i), &self.bracket(&basis(j), &basis(k)));
                    let b = self.bracket(&basis(j), &self.bracket(&basis(k), &basis(i)));
                    let c = self.bracket(&basis(k), &self.bracket(&basis(i), &basis(j)));
                    let mut sum = vec![f.zero(); self.dim];
                    for t in 0..self.dim {
                        sum[t] = f.add(&f.add(&a[t], &b[t]), &c[t]);
                    }
                    if sum.iter().any(|v| !f.is_zero(v)) {
                        return Err(AlgebraViolation::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn unit_vector<F: Field>(field: &F, dim: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

/// A module over a Lie algebra, one action matrix per algebra basis vector.
#[derive(Clone, PartialEq, Eq)]
pub struct LieModule<F: Field> {
    algebra: LieAlgebra<F>,
    dim: usize,
    action: Vec<Matrix<F>>,
}

impl<F: Field> fmt::Debug for LieModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieModule(dim {} over dim {})", self.dim, self.algebra.dim())
    }
}

impl<F: Field> LieModule<F> {
    pub fn new(algebra: LieAlgebra<F>, dim: usize, action: Vec<Matrix<F>>) -> Self {
        assert_eq!(action.len(), algebra.dim());
        for a in &action {
            assert_eq!((a.rows(), a.cols()), (dim, dim));
        }
        LieModule {
            algebra,
            dim,
            action,
        }
    }

    pub fn trivial(algebra: LieAlgebra<F>, dim: usize) -> Self {
        let field = algebra.field().clone();
        let action = (0..algebra.dim())
            .map(|_| Matrix::zeros(field.clone(), dim, dim))
            .collect();
        LieModule::new(algebra, dim, action)
    }

    pub fn adjoint(algebra: LieAlgebra<F>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        let dim = algebra.dim();
        LieModule::new(algebra, dim, action)
    }

    pub fn algebra(&self) -> &LieAlgebra<F> {
        &self.algebra
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action_basis(&self, i: usize) -> &Matrix<F> {
        &self.action[i]
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action_of(&self, u: &[F::Elem]) -> Matrix<F> {
        let f = self.field().clone();
        let mut out = Matrix::zeros(f.clone(), self.dim, self.dim);
        for (i, a) in self.action.iter().enumerate() {
            if f.is_zero(&u[i]) {
                continue;
            }
            out = out.add(&a.scale(&u[i]));
        }
        out
    }

    pub fn act(&self, u: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
        self.action_of(u).mul_vec(m)
    }

    /// Checks `A_[ei,ej] = A_i A_j − A_j A_i` on all basis pairs.
    pub fn validate(&self) -> std::result::Result<(), ModuleViolation> {
        let f = self.field();
        for i in 0..self.algebra.dim() {
            for j in i + 1..self.algebra.dim() {
                let lhs = {
                    let c = self.algebra.bracket_basis(i, j);
                    let mut m = Matrix::zeros(f.clone(), self.dim, self.dim);
                    for (k, ck) in c.iter().enumerate() {
                        if !f.is_zero(ck) {
                            m = m.add(&self.action[k].scale(ck));
                        }
                    }
                    m
                };
                let rhs = self.action[i]
                    .mul(&self.action[j])
                    .sub(&self.action[j].mul(&self.action[i]));
                if lhs != rhs {
                    return Err(ModuleViolation { i, j });
                }
            }
        }
        Ok(())
    }
}

/// Is `alpha : M1 → M2` a map of g-modules (same algebra)?
pub fn is_module_map<F: Field>(alpha: &Matrix<F>, m1: &LieModule<F>, m2: &LieModule<F>) -> bool {
    assert_eq!(m1.algebra().dim(), m2.algebra().dim());
    assert_eq!(alpha.rows(), m2.dim());
    assert_eq!(alpha.cols(), m1.dim());
    (0..m1.algebra().dim())
        .all(|i| alpha.mul(m1.action_basis(i)) == m2.action_basis(i).mul(alpha))
}

/// All g-module maps M1 → M2 as a subspace of Hom(M1, M2), flattened
/// column-major (`flat[c·dim M2 + r] = alpha[r][c]`).
pub fn module_map_space<F: Field>(m1: &LieModule<F>, m2: &LieModule<F>) -> Subspace<F> {
    let f = m1.field().clone();
    let (d1, d2) = (m1.dim(), m2.dim());
    let n = d1 * d2;
    let g_dim = m1.algebra().dim();
    let mut rows = Vec::new();
    for i in 0..g_dim {
        let a1 = m1.action_basis(i);
        let a2 = m2.action_basis(i);
        // (alpha·A1 − A2·alpha)[r][c] = 0
        for r in 0..d2 {
            for c in 0..d1 {
                let mut row = vec![f.zero(); n];
                for s in 0..d1 {
                    // alpha[r][s]·A1[s][c]
                    row[s * d2 + r] = f.add(&row[s * d2 + r], a1.at(s, c));
                }
                for s in 0..d2 {
                    // −A2[r][s]·alpha[s][c]
                    row[c * d2 + s] = f.sub(&row[c * d2 + s], a2.at(r, s));
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(f, n);
    }
    Matrix::from_rows(f, rows).kernel_basis()
}

pub fn flat_to_matrix<F: Field>(field: &F, rows: usize, cols: usize, flat: &[F::Elem]) -> Matrix<F> {
    assert_eq!(flat.len(), rows * cols);
    Matrix::from_fn(field.clone(), rows, cols, |r, c| flat[c * rows + r].clone())
}

pub fn matrix_to_flat<F: Field>(m: &Matrix<F>) -> Vec<F::Elem> {
    let mut flat = Vec::with_capacity(m.rows() * m.cols());
    for c in 0..m.cols() {
        for r in 0..m.rows() {
            flat.push(m.at(r, c).clone());
        }
    }
    flat
}

/// An ideal of `parent`, as a verified bracket-closed subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealData<F: Field> {
    parent: LieAlgebra<F>,
    span: Subspace<F>,
}

impl<F: Field> IdealData<F> {
    pub fn new(parent: LieAlgebra<F>, span: Subspace<F>) -> Result<Self> {
        assert_eq!(span.ambient_dim(), parent.dim());
        let f = parent.field();
        for i in 0..parent.dim() {
            let ei = unit_vector(f, parent.dim(), i);
            for j in 0..span.dim() {
                let b = span.basis().column(j);
                let w = parent.bracket(&ei, &b);
                if !span.contains(&w) {
                    return Err(Error::NotAnIdeal(format!(
                        "[{}, span basis {}] leaves the span",
                        parent.labels()[i],
                        j
                    )));
                }
            }
        }
        Ok(IdealData { parent, span })
    }

    pub fn zero(parent: LieAlgebra<F>) -> Self {
        let span = Subspace::zero(parent.field().clone(), parent.dim());
        IdealData { parent, span }
    }

    pub fn full(parent: LieAlgebra<F>) -> Self {
        let span = Subspace::full(parent.field().clone(), parent.dim());
        IdealData { parent, span }
    }

    pub fn parent(&self) -> &LieAlgebra<F> {
        &self.parent
    }

    pub fn span(&self) -> &Subspace<F> {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Coordinates w.r.t. the canonical ideal basis; the vector must lie in
    /// the ideal.
    pub fn coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.span
            .coordinates(v)
            .expect("vector does not lie in the ideal")
    }

    /// The ideal as a Lie algebra in its own right, together with the
    /// restricted module: structure constants and action matrices w.r.t.
    /// the canonical ideal basis.
    pub fn restricted(&self, m: &LieModule<F>) -> (LieAlgebra<F>, LieModule<F>) {
        let f = self.parent.field().clone();
        let k = self.dim();
        let mut structure = vec![vec![vec![f.zero(); k]; k]; k];
        for i in 0..k {
            let bi = self.span.basis().column(i);
            for j in 0..k {
                let bj = self.span.basis().column(j);
                let w = self.parent.bracket(&bi, &bj);
                structure[i][j] = self.coords(&w);
            }
        }
        let labels = (0..k).map(|i| format!("h{i}")).collect();
        let h_alg = LieAlgebra::from_structure(f, labels, structure);
        let action = (0..k)
            .map(|i| m.action_of(&self.span.basis().column(i)))
            .collect();
        let m_h = LieModule::new(h_alg.clone(), m.dim(), action);
        (h_alg, m_h)
    }
}

/// Quotient `g/h` with a fixed linear section `α` and the associated
/// 2-cochain `f_α(x∧y) = [α(x), α(y)] − α[x, y] ∈ h` (values in canonical
/// ideal coordinates).
#[derive(Debug, Clone)]
pub struct QuotientAlgebra<F: Field> {
    pub quotient: LieAlgebra<F>,
    /// Projection g → g/h.
    pub pi: Matrix<F>,
    /// Linear section g/h → g, with `pi ∘ alpha = id`.
    pub alpha: Matrix<F>,
    /// 2-cochain on g/h valued in h (ideal coordinates).
    pub f_alpha: Cochain<F>,
}

/// Quotient with the canonical section: the complement of the ideal is
/// spanned by the coordinates outside the pivot set of its echelon basis.
pub fn quotient_with_section<F: Field>(g: &LieAlgebra<F>, h: &IdealData<F>) -> QuotientAlgebra<F> {
    let f = g.field().clone();
    let pivots = leading_rows(h.span());
    let complement: Vec<usize> = (0..g.dim()).filter(|r| !pivots.contains(r)).collect();
    let mut alpha = Matrix::zeros(f.clone(), g.dim(), complement.len());
    for (j, &r) in complement.iter().enumerate() {
        alpha.set(r, j, f.one());
    }
    quotient_with_alpha(g, h, alpha)
}

/// Quotient with an explicit section (used for choice-independence checks).
pub fn quotient_with_alpha<F: Field>(
    g: &LieAlgebra<F>,
    h: &IdealData<F>,
    alpha: Matrix<F>,
) -> QuotientAlgebra<F> {
    let f = g.field().clone();
    let pivots = leading_rows(h.span());
    let complement: Vec<usize> = (0..g.dim()).filter(|r| !pivots.contains(r)).collect();
    let q_dim = complement.len();
    assert_eq!(alpha.rows(), g.dim());
    assert_eq!(alpha.cols(), q_dim);

    // π(v) = coordinates of v − (h-part of v) on the complement positions.
    let mut pi = Matrix::zeros(f.clone(), q_dim, g.dim());
    for (j, &qj) in complement.iter().enumerate() {
        for c in 0..g.dim() {
            // contribution of v[c]: direct if c = qj, minus h-basis parts
            let mut val = if c == qj { f.one() } else { f.zero() };
            for (i, &p) in pivots.iter().enumerate() {
                if c == p {
                    val = f.sub(&val, h.span().basis().at(qj, i));
                }
            }
            pi.set(j, c, val);
        }
    }
    debug_assert!(pi.mul(&alpha) == Matrix::identity(f.clone(), q_dim));

    // structure constants of g/h through the section
    let labels: Vec<String> = complement.iter().map(|&r| g.labels()[r].clone()).collect();
    let mut structure = vec![vec![vec![f.zero(); q_dim]; q_dim]; q_dim];
    for a in 0..q_dim {
        for b in 0..q_dim {
            let w = g.bracket(&alpha.column(a), &alpha.column(b));
            structure[a][b] = pi.mul_vec(&w);
        }
    }
    let quotient = LieAlgebra::from_structure(f.clone(), labels, structure);
    debug_assert!(quotient.validate().is_ok());

    // f_alpha(x∧y) = [α(x), α(y)] − α[x, y], expressed in ideal coordinates
    let mut f_alpha = Cochain::zero(f.clone(), q_dim, 2, h.dim());
    for (pos, tuple) in f_alpha.index().tuples().to_vec().into_iter().enumerate() {
        let (a, b) = (tuple[0], tuple[1]);
        let lie = g.bracket(&alpha.column(a), &alpha.column(b));
        let sect = alpha.mul_vec(quotient.bracket_basis(a, b));
        let diff: Vec<F::Elem> = lie.iter().zip(&sect).map(|(x, y)| f.sub(x, y)).collect();
        f_alpha.set_block(pos, &h.coords(&diff));
    }

    QuotientAlgebra {
        quotient,
        pi,
        alpha,
        f_alpha,
    }
}

/// Leading row of each column of a canonical (column echelon) basis.
fn leading_rows<F: Field>(s: &Subspace<F>) -> Vec<usize> {
    let f = s.field();
    (0..s.dim())
        .map(|j| {
            (0..s.ambient_dim())
                .find(|&r| !f.is_zero(s.basis().at(r, j)))
                .expect("basis column is nonzero")
        })
        .collect()
}

/// `M^S = {m : z·m = 0 for all z in the span}`.
pub fn invariant_subspace<F: Field>(m: &LieModule<F>, span: &Subspace<F>) -> Subspace<F> {
    let f = m.field().clone();
    let mut stacked = Matrix::zeros(f, 0, m.dim());
    for j in 0..span.dim() {
        stacked = stacked.vstack(&m.action_of(&span.basis().column(j)));
    }
    stacked.kernel_basis()
}

/// Fixed points under the whole algebra: `M^g` (this is H⁰).
pub fn algebra_invariants<F: Field>(m: &LieModule<F>) -> Subspace<F> {
    invariant_subspace(m, &Subspace::full(m.field().clone(), m.algebra().dim()))
}

/// Derivations h → M, inner derivations and their quotient H¹(h, M).
///
/// A derivation is stored as a dim(M) × dim(h) matrix, flattened
/// column-major; the flat layout agrees with degree-1 cochains.
#[derive(Debug, Clone)]
pub struct DerivationSpace<F: Field> {
    pub der: Subspace<F>,
    pub inner: Subspace<F>,
    pub h1: QuotientPresentation<F>,
    /// The map δ : M → Hom(h, M), m ↦ (z ↦ z·m), as an N × dim(M) matrix.
    pub delta: Matrix<F>,
}

/// Solves the derivation constraints `d[x,y] = x·d(y) − y·d(x)` for a
/// module over the given algebra.
pub fn derivation_space<F: Field>(alg: &LieAlgebra<F>, m: &LieModule<F>) -> DerivationSpace<F> {
    assert_eq!(m.algebra(), alg);
    let f = alg.field().clone();
    let (dh, dm) = (alg.dim(), m.dim());
    let n = dh * dm;

    let mut rows = Vec::new();
    for i in 0..dh {
        for j in i + 1..dh {
            let c = alg.bracket_basis(i, j);
            for r in 0..dm {
                let mut row = vec![f.zero(); n];
                for (k, ck) in c.iter().enumerate() {
                    row[k * dm + r] = f.add(&row[k * dm + r], ck);
                }
                for s in 0..dm {
                    // −A_i·d(e_j) + A_j·d(e_i)
                    row[j * dm + s] = f.sub(&row[j * dm + s], m.action_basis(i).at(r, s));
                    row[i * dm + s] = f.add(&row[i * dm + s], m.action_basis(j).at(r, s));
                }
                rows.push(row);
            }
        }
    }
    let der = if rows.is_empty() {
        Subspace::full(f.clone(), n)
    } else {
        Matrix::from_rows(f.clone(), rows).kernel_basis()
    };

    let delta = Matrix::from_fn(f.clone(), n, dm, |flat, c| {
        let (t, s) = (flat / dm, flat % dm);
        m.action_basis(t).at(s, c).clone()
    });
    let inner = delta.column_space();
    let h1 = QuotientPresentation::new(der.clone(), inner.clone())
        .expect("inner derivations are derivations");
    DerivationSpace {
        der,
        inner,
        h1,
        delta,
    }
}

/// The action `(^x d)(z) = x·d(z) − d[x, z]` of `x ∈ g` on a derivation
/// `d: h → M` (given and returned in dim(M) × dim(h) matrix form).
pub fn act_on_derivation<F: Field>(
    g: &LieAlgebra<F>,
    h: &IdealData<F>,
    m: &LieModule<F>,
    x: &[F::Elem],
    d: &Matrix<F>,
) -> Matrix<F> {
    let f = g.field().clone();
    let ax = m.action_of(x);
    let cols: Vec<Vec<F::Elem>> = (0..h.dim())
        .map(|t| {
            let bt = h.span().basis().column(t);
            let first = ax.mul_vec(&d.column(t));
            let br = g.bracket(x, &bt);
            let second = d.mul_vec(&h.coords(&br));
            first
                .iter()
                .zip(&second)
                .map(|(a, b)| f.sub(a, b))
                .collect()
        })
        .collect();
    Matrix::from_columns(f, m.dim(), cols)
}

/// The induced g/h-module structure on H¹(h, M): act with `α(basis)` on
/// canonical representatives and project back to classes.
pub fn h1_induced_module<F: Field>(
    g: &LieAlgebra<F>,
    h: &IdealData<F>,
    m: &LieModule<F>,
    quot: &QuotientAlgebra<F>,
    ders: &DerivationSpace<F>,
) -> LieModule<F> {
    let f = g.field().clone();
    let dm = m.dim();
    let h1_dim = ders.h1.dim();
    let action: Vec<Matrix<F>> = (0..quot.quotient.dim())
        .map(|j| {
            let cols: Vec<Vec<F::Elem>> = (0..h1_dim)
                .map(|c| {
                    let rep = ders.h1.reps().column(c);
                    let d = flat_to_matrix(&f, dm, h.dim(), &rep);
                    let acted = act_on_derivation(g, h, m, &quot.alpha.column(j), &d);
                    ders.h1.class_of(&matrix_to_flat(&acted))
                })
                .collect();
            Matrix::from_columns(f.clone(), h1_dim, cols)
        })
        .collect();
    let module = LieModule::new(quot.quotient.clone(), h1_dim, action);
    debug_assert!(module.validate().is_ok());
    module
}

/// The split extension `M ⋊ g`: M sits first as an abelian ideal.
pub fn semidirect_product<F: Field>(m: &LieModule<F>) -> LieAlgebra<F> {
    let g = m.algebra();
    let f = g.field().clone();
    let (dm, dg) = (m.dim(), g.dim());
    let dim = dm + dg;
    let mut labels: Vec<String> = (0..dm).map(|i| format!("m{i}")).collect();
    for l in g.labels() {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut structure = vec![vec![vec![f.zero(); dim]; dim]; dim];
    for i in 0..dg {
        for r in 0..dm {
            // [g_i, m_r] = A_i e_r
            for s in 0..dm {
                let v = m.action_basis(i).at(s, r).clone();
                structure[dm + i][r][s] = v.clone();
                structure[r][dm + i][s] = f.neg(&v);
            }
        }
        for j in 0..dg {
            for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                structure[dm + i][dm + j][dm + k] = c.clone();
            }
        }
    }
    let out = LieAlgebra::from_structure(f, labels, structure);
    debug_assert!(out.validate().is_ok());
    out
}
