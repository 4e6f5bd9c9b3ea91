//! Dense exact linear algebra: RREF, kernels, images, canonical subspaces
//! and quotient presentations.
//!
//! Subspaces are kept in a canonical form (reduced column echelon), so two
//! subspaces are equal as sets iff their basis matrices are identical. That
//! turns every "im = ker" exactness check downstream into a plain equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.field.format(self.at(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(field: F, ambient: usize, columns: Vec<Vec<F::Elem>>) -> Self {
        let c = columns.len();
        let mut m = Matrix::zeros(field, ambient, c);
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), ambient, "column length mismatch");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<F::Elem> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.cols, self.rows, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.add(self.at(r, c), other.at(r, c))
        })
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.sub(self.at(r, c), other.at(r, c))
        })
    }

    pub fn neg(&self) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.neg(self.at(r, c))
        })
    }

    pub fn scale(&self, s: &F::Elem) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.mul(self.at(r, c), s)
        })
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.at(r, c), &f.mul(a, other.at(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for c in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.at(r, c), &v[c]));
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field.clone(), self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.field.clone(), self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        })
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // first nonzero entry at or below `row`
            let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.at(r, col))) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let a = m.at(row, c).clone();
                    let b = m.at(p, c).clone();
                    m.set(row, c, b);
                    m.set(p, c, a);
                }
            }
            let inv = f.inv(m.at(row, col)).expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = f.mul(m.at(row, c), &inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || f.is_zero(m.at(r, col)) {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in 0..m.cols {
                    let v = f.sub(m.at(r, c), &f.mul(&factor, m.at(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel as a canonical subspace of the column-coordinate space.
    pub fn kernel_basis(&self) -> Subspace<F> {
        let f = self.field.clone();
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(i) = slot {
                    vec[col] = f.neg(r.at(*i, free));
                }
            }
            basis.push(vec);
        }
        Subspace::from_spanning(f, self.cols, basis)
    }

    /// Column space as a canonical subspace of the row-coordinate space.
    pub fn column_space(&self) -> Subspace<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::from_spanning(self.field.clone(), self.rows, cols)
    }

    /// Solves `self · x = b`; free variables are set to zero, so the choice
    /// of solution is deterministic.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let f = &self.field;
        let rhs = Matrix::from_columns(f.clone(), self.rows, vec![b.to_vec()]);
        let (r, pivots) = self.hstack(&rhs).rref();
        if pivots.contains(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.at(i, self.cols).clone();
        }
        Ok(x)
    }

    /// Solves `self · X = B` column by column (each with free variables zero).
    pub fn solve_matrix(&self, b: &Matrix<F>) -> Result<Matrix<F>> {
        assert_eq!(b.rows(), self.rows);
        let mut cols = Vec::with_capacity(b.cols());
        for j in 0..b.cols() {
            cols.push(self.solve(&b.column(j))?);
        }
        Ok(Matrix::from_columns(self.field.clone(), self.cols, cols))
    }

    /// The subspace `{v : self·v ∈ target}`.
    pub fn preimage_subspace(&self, target: &Subspace<F>) -> Subspace<F> {
        assert_eq!(target.ambient_dim(), self.rows);
        // v is a preimage iff (v, y) solves [self | -T]·(v, y) = 0.
        let stacked = self.hstack(&target.basis().neg());
        let ker = stacked.kernel_basis();
        let spanning: Vec<Vec<F::Elem>> = (0..ker.dim())
            .map(|j| ker.basis().column(j)[..self.cols].to_vec())
            .collect();
        Subspace::from_spanning(self.field.clone(), self.cols, spanning)
    }

    pub fn format_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.field.format(self.at(r, c))).collect())
            .collect()
    }
}

/// A linear subspace in canonical form.
///
/// The basis matrix holds the basis as columns in reduced column echelon
/// form (unit leading entries, ordered by leading row, zeros across the
/// other leading rows), so equal subspaces have identical basis matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient_dim: usize,
    basis: Matrix<F>,
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) basis = {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, ambient_dim, 0),
        }
    }

    pub fn full(field: F, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(field: F, ambient_dim: usize, spanning: Vec<Vec<F::Elem>>) -> Self {
        for v in &spanning {
            assert_eq!(v.len(), ambient_dim, "spanning vector length mismatch");
        }
        // Row-reduce the spanning set written as rows; the nonzero rows,
        // re-read as columns, are the canonical basis.
        let as_rows = Matrix::from_rows(field.clone(), spanning);
        let (r, pivots) = as_rows.rref();
        let basis_cols: Vec<Vec<F::Elem>> = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            ambient_dim,
            basis: Matrix::from_columns(field, ambient_dim, basis_cols),
        }
    }

    pub fn from_columns_of(m: &Matrix<F>) -> Self {
        m.column_space()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one column per basis vector.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies
    /// in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        match self.basis.solve(v) {
            Ok(x) => {
                if self.basis.mul_vec(&x) == v {
                    Some(x)
                } else {
                    None
                }
            }
            Err(_) => None,
        }
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        (0..other.dim()).all(|j| self.contains(&other.basis.column(j)))
    }

    /// Canonical form makes set equality literal equality.
    pub fn same_space(&self, other: &Subspace<F>) -> bool {
        self == other
    }
}

/// Presentation of a quotient `numerator / denominator` with canonical
/// representatives.
///
/// `reps` holds representative vectors (ambient coordinates, one column per
/// quotient basis vector); `project` maps ambient coordinates of a vector
/// in the numerator to its quotient coordinates. `project ∘ reps = id` and
/// `project` kills the denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotientPresentation<F: Field> {
    numerator: Subspace<F>,
    denominator: Subspace<F>,
    reps: Matrix<F>,
    project: Matrix<F>,
}

impl<F: Field> fmt::Debug for QuotientPresentation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Quotient(dim {} = {}/{})",
            self.dim(),
            self.numerator.dim(),
            self.denominator.dim()
        )
    }
}

impl<F: Field> QuotientPresentation<F> {
    pub fn new(numerator: Subspace<F>, denominator: Subspace<F>) -> Result<Self> {
        assert_eq!(numerator.ambient_dim(), denominator.ambient_dim());
        if !numerator.contains_subspace(&denominator) {
            return Err(Error::NotContained);
        }
        let f = numerator.field().clone();
        let ambient = numerator.ambient_dim();
        let k = denominator.dim();

        // Extend the denominator basis to a basis of the numerator by
        // greedily taking numerator basis columns that raise the rank.
        let mut chosen: Vec<Vec<F::Elem>> = (0..k).map(|j| denominator.basis().column(j)).collect();
        let mut rep_cols: Vec<Vec<F::Elem>> = Vec::new();
        let mut rank = k;
        for j in 0..numerator.dim() {
            let cand = numerator.basis().column(j);
            let mut cols = chosen.clone();
            cols.push(cand.clone());
            let test = Matrix::from_columns(f.clone(), ambient, cols);
            if test.rank() > rank {
                rank += 1;
                chosen.push(cand.clone());
                rep_cols.push(cand);
            }
        }
        let q = rep_cols.len();
        debug_assert_eq!(q, numerator.dim() - k);
        let reps = Matrix::from_columns(f.clone(), ambient, rep_cols);
        let full = Matrix::from_columns(f.clone(), ambient, chosen);

        // Left inverse X of `full` (X·full = id), row by row via the
        // transpose; `project` is its last q rows.
        let full_t = full.transpose();
        let mut project_rows = Vec::with_capacity(q);
        for i in k..k + q {
            let mut e = vec![f.zero(); k + q];
            e[i] = f.one();
            let xi = full_t.solve(&e).expect("full has full column rank");
            project_rows.push(xi);
        }
        let project = Matrix::from_rows(f.clone(), project_rows);
        let project = if q == 0 {
            Matrix::zeros(f, 0, ambient)
        } else {
            project
        };

        debug_assert!(project.mul(&reps) == Matrix::identity(project.field().clone(), q));
        debug_assert!(project.mul(denominator.basis()).is_zero());

        Ok(QuotientPresentation {
            numerator,
            denominator,
            reps,
            project,
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    pub fn numerator(&self) -> &Subspace<F> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace<F> {
        &self.denominator
    }

    /// Representative vectors, ambient coordinates, one column per class.
    pub fn reps(&self) -> &Matrix<F> {
        &self.reps
    }

    /// Quotient coordinates of a numerator vector (ambient coordinates in).
    pub fn project(&self) -> &Matrix<F> {
        &self.project
    }

    pub fn class_of(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.project.mul_vec(v)
    }

    pub fn representative(&self, class: &[F::Elem]) -> Vec<F::Elem> {
        self.reps.mul_vec(class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qmat(rows: &[&[i64]]) -> Matrix<Rationals> {
        let f = Rationals;
        Matrix::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(Rationals, 2);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::identity(Rationals, 2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = qmat(&[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, qmat(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_mod_two() {
        let f2 = PrimeField::new(2).unwrap();
        let m = Matrix::from_rows(f2, vec![vec![1, 2 % 2], vec![3 % 2, 4 % 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_rows(f2, vec![vec![1, 0], vec![0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let zero3 = Matrix::zeros(Rationals, 3, 3);
        assert_eq!(zero3.kernel_basis(), Subspace::full(Rationals, 3));

        let id = Matrix::identity(Rationals, 3);
        assert_eq!(id.kernel_basis(), Subspace::zero(Rationals, 3));

        let m = qmat(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        let f = Rationals;
        // canonical normalization of span{(1,-1)}
        assert_eq!(k.basis().column(0), vec![f.int(1), f.int(-1)]);
    }

    #[test]
    fn column_space_examples() {
        assert_eq!(
            Matrix::identity(Rationals, 2).column_space(),
            Subspace::full(Rationals, 2)
        );
        assert_eq!(
            Matrix::zeros(Rationals, 2, 3).column_space(),
            Subspace::zero(Rationals, 2)
        );
        let m = qmat(&[&[1], &[2]]);
        let s = m.column_space();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis().column(0), vec![Rationals.int(1), Rationals.int(2)]);
    }

    #[test]
    fn solve_examples() {
        let f = Rationals;
        let id = Matrix::identity(f, 3);
        let b = vec![f.int(1), f.int(2), f.int(3)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let z = Matrix::zeros(f, 2, 2);
        assert_eq!(z.solve(&[f.int(1), f.int(0)]), Err(Error::NoSolution));

        let m = qmat(&[&[1, 1]]);
        assert_eq!(m.solve(&[f.int(3)]).unwrap(), vec![f.int(3), f.int(0)]);
    }

    #[test]
    fn quotient_examples() {
        let f = Rationals;
        let v = Subspace::full(f, 2);

        let q = QuotientPresentation::new(v.clone(), v.clone()).unwrap();
        assert_eq!(q.dim(), 0);

        let q = QuotientPresentation::new(v.clone(), Subspace::zero(f, 2)).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(*q.project(), Matrix::identity(f, 2));

        let denom = Subspace::from_spanning(f, 2, vec![vec![f.int(1), f.int(1)]]);
        let q = QuotientPresentation::new(v, denom).unwrap();
        assert_eq!(q.dim(), 1);
        let a = q.class_of(&[f.int(1), f.int(0)]);
        let b = q.class_of(&[f.int(0), f.int(1)]);
        assert_eq!(a, vec![f.neg(&b[0])]);

        // NotContained
        let small = Subspace::from_spanning(f, 2, vec![vec![f.int(1), f.int(0)]]);
        let big = Subspace::from_spanning(f, 2, vec![vec![f.int(0), f.int(1)]]);
        assert_eq!(
            QuotientPresentation::new(small, big).unwrap_err(),
            Error::NotContained
        );
    }

    #[test]
    fn preimage_examples() {
        let f = Rationals;
        let m = qmat(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            m.preimage_subspace(&Subspace::full(f, 2)),
            Subspace::full(f, 2)
        );
        assert_eq!(
            m.preimage_subspace(&Subspace::zero(f, 2)),
            m.kernel_basis()
        );
        let target = Subspace::from_spanning(f, 2, vec![vec![f.int(1), f.int(0)]]);
        let pre = m.preimage_subspace(&target);
        assert_eq!(pre, target);
    }

    #[test]
    fn canonicity_of_spanning_sets() {
        let f = Rationals;
        let a = Subspace::from_spanning(
            f,
            3,
            vec![
                vec![f.int(1), f.int(2), f.int(3)],
                vec![f.int(0), f.int(1), f.int(1)],
            ],
        );
        let b = Subspace::from_spanning(
            f,
            3,
            vec![
                vec![f.int(1), f.int(3), f.int(4)],
                vec![f.int(2), f.int(5), f.int(7)],
                vec![f.int(3), f.int(8), f.int(11)],
            ],
        );
        assert_eq!(a, b);
    }
}
