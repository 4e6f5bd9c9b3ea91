//! Crossed modules of Lie algebras: axiom checking and the canonical
//! crossed extension `0 → M^h → M⋊h → Der(h,M)⋊g → H¹(h,M)⋊g/h → 0`.
//!
//! This module validates λ's input structurally; the map itself is
//! computed from the cocycle description in [`crate::seven`].

use std::fmt;

use crate::error::Result;
use crate::field::Field;
use crate::lie::{
    act_on_derivation, derivation_space, flat_to_matrix, h1_induced_module, matrix_to_flat,
    quotient_with_section, semidirect_product, unit_vector, IdealData, LieAlgebra, LieModule,
};
use crate::linalg::{Matrix, Subspace};

/// A candidate crossed module `δ : m → n` with an n-action on m.
#[derive(Debug, Clone)]
pub struct CrossedModuleData<F: Field> {
    pub m_alg: LieAlgebra<F>,
    pub n_alg: LieAlgebra<F>,
    /// Matrix of δ : m → n.
    pub delta: Matrix<F>,
    /// One dim(m) × dim(m) matrix per n basis vector.
    pub action: Vec<Matrix<F>>,
}

/// First failing crossed-module axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossedViolation {
    DeltaNotHomomorphism { i: usize, j: usize },
    ActionNotLieMap { i: usize, j: usize },
    ActionNotDerivation { n: usize, i: usize, j: usize },
    Equivariance { n: usize, m: usize },
    Peiffer { i: usize, j: usize },
}

impl fmt::Display for CrossedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossedViolation::DeltaNotHomomorphism { i, j } => {
                write!(f, "δ is not a homomorphism at m-basis pair ({i}, {j})")
            }
            CrossedViolation::ActionNotLieMap { i, j } => {
                write!(f, "the action does not respect [n_i, n_j] at ({i}, {j})")
            }
            CrossedViolation::ActionNotDerivation { n, i, j } => {
                write!(f, "n_{n} does not act by derivations at m-pair ({i}, {j})")
            }
            CrossedViolation::Equivariance { n, m } => {
                write!(f, "equivariance δ(^n m) = [n, δm] fails at ({n}, {m})")
            }
            CrossedViolation::Peiffer { i, j } => {
                write!(f, "Peiffer identity ^δ(m) m' = [m, m'] fails at ({i}, {j})")
            }
        }
    }
}

impl<F: Field> CrossedModuleData<F> {
    fn action_of(&self, n_elem: &[F::Elem]) -> Matrix<F> {
        let f = self.n_alg.field();
        let dm = self.m_alg.dim();
        let mut out = Matrix::zeros(f.clone(), dm, dm);
        for (i, c) in n_elem.iter().enumerate() {
            if !f.is_zero(c) {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    /// Checks the four crossed-module conditions on all basis pairs:
    /// δ is a homomorphism, the action is a Lie map acting by derivations,
    /// equivariance, and the Peiffer identity.
    pub fn validate(&self) -> std::result::Result<(), CrossedViolation> {
        let f = self.n_alg.field().clone();
        let (dm, dn) = (self.m_alg.dim(), self.n_alg.dim());
        let em = |i: usize| unit_vector(&f, dm, i);

        for i in 0..dm {
            for j in i + 1..dm {
                let lhs = self.delta.mul_vec(self.m_alg.bracket_basis(i, j));
                let rhs = self
                    .n_alg
                    .bracket(&self.delta.column(i), &self.delta.column(j));
                if lhs != rhs {
                    return Err(CrossedViolation::DeltaNotHomomorphism { i, j });
                }
            }
        }
        for i in 0..dn {
            for j in i + 1..dn {
                let lhs = self.action_of(self.n_alg.bracket_basis(i, j));
                let rhs = self.action[i]
                    .mul(&self.action[j])
                    .sub(&self.action[j].mul(&self.action[i]));
                if lhs != rhs {
                    return Err(CrossedViolation::ActionNotLieMap { i, j });
                }
            }
        }
        for n in 0..dn {
            for i in 0..dm {
                for j in i + 1..dm {
                    let lhs = self.action[n].mul_vec(self.m_alg.bracket_basis(i, j));
                    let t1 = self.m_alg.bracket(&self.action[n].column(i), &em(j));
                    let t2 = self.m_alg.bracket(&em(i), &self.action[n].column(j));
                    let rhs: Vec<F::Elem> =
                        t1.iter().zip(&t2).map(|(a, b)| f.add(a, b)).collect();
                    if lhs != rhs {
                        return Err(CrossedViolation::ActionNotDerivation { n, i, j });
                    }
                }
            }
        }
        for n in 0..dn {
            for m in 0..dm {
                let lhs = self.delta.mul_vec(&self.action[n].column(m));
                let rhs = self
                    .n_alg
                    .bracket(&unit_vector(&f, dn, n), &self.delta.column(m));
                if lhs != rhs {
                    return Err(CrossedViolation::Equivariance { n, m });
                }
            }
        }
        for i in 0..dm {
            for j in 0..dm {
                let lhs = self.action_of(&self.delta.column(i)).mul_vec(&em(j));
                let rhs = self.m_alg.bracket(&em(i), &em(j));
                if lhs != rhs {
                    return Err(CrossedViolation::Peiffer { i, j });
                }
            }
        }
        Ok(())
    }

    /// Image of δ; a consequence of the axioms is that it is an ideal of n.
    pub fn delta_image(&self) -> Subspace<F> {
        self.delta.column_space()
    }

    /// Kernel of δ; a consequence of the axioms is that it is central in m.
    pub fn delta_kernel(&self) -> Subspace<F> {
        self.delta.kernel_basis()
    }

    /// Is the image of δ bracket-closed under all of n?
    pub fn image_is_ideal(&self) -> bool {
        let f = self.n_alg.field();
        let image = self.delta_image();
        (0..self.n_alg.dim()).all(|i| {
            (0..image.dim()).all(|j| {
                let w = self
                    .n_alg
                    .bracket(&unit_vector(f, self.n_alg.dim(), i), &image.basis().column(j));
                image.contains(&w)
            })
        })
    }

    /// Does the kernel of δ bracket to zero with all of m?
    pub fn kernel_is_central(&self) -> bool {
        let f = self.m_alg.field();
        let kernel = self.delta_kernel();
        (0..self.m_alg.dim()).all(|i| {
            (0..kernel.dim()).all(|j| {
                let w = self
                    .m_alg
                    .bracket(&unit_vector(f, self.m_alg.dim(), i), &kernel.basis().column(j));
                w.iter().all(|v| f.is_zero(v))
            })
        })
    }
}

/// The canonical crossed extension attached to (g, h, M), with all four
/// connecting maps as matrices.
#[derive(Debug, Clone)]
pub struct CanonicalCrossedExtension<F: Field> {
    pub crossed: CrossedModuleData<F>,
    /// M^h → M⋊h.
    pub embed: Matrix<F>,
    /// Der(h,M)⋊g → H¹(h,M)⋊g/h.
    pub projection: Matrix<F>,
    /// The end algebra H¹(h,M) ⋊ g/h.
    pub end_alg: LieAlgebra<F>,
    pub exact: [bool; 4],
}

impl<F: Field> CanonicalCrossedExtension<F> {
    pub fn dims(&self) -> [usize; 4] {
        [
            self.embed.cols(),
            self.crossed.m_alg.dim(),
            self.crossed.n_alg.dim(),
            self.end_alg.dim(),
        ]
    }

    pub fn all_exact(&self) -> bool {
        self.exact.iter().all(|&b| b)
    }
}

/// Builds `0 → M^h → M⋊h → Der(h,M)⋊g → H¹(h,M)⋊g/h → 0` with the crossed
/// module `γ(m, z) = (−δ(m), z)` and the action
/// `^(d,x)(m, z) = (x·m + d(z), [x, z])`, and verifies exactness at every
/// node.
pub fn build_canonical_crossed_extension<F: Field>(
    g: &LieAlgebra<F>,
    h: &IdealData<F>,
    m: &LieModule<F>,
) -> Result<CanonicalCrossedExtension<F>> {
    let f = g.field().clone();
    let (dm, dh, dg) = (m.dim(), h.dim(), g.dim());
    let quot = quotient_with_section(g, h);
    let (h_alg, m_h) = h.restricted(m);
    let ders = derivation_space(&h_alg, &m_h);
    let induced = h1_induced_module(g, h, m, &quot, &ders);
    let dq = quot.quotient.dim();
    let (d_der, d_h1) = (ders.der.dim(), ders.h1.dim());

    // m-side: M ⋊ h
    let m_alg = semidirect_product(&m_h);

    // n-side: Der(h,M) ⋊ g, with g acting on derivations by ^x d
    let der_action: Vec<Matrix<F>> = (0..dg)
        .map(|i| {
            let cols: Vec<Vec<F::Elem>> = (0..d_der)
                .map(|c| {
                    let d = flat_to_matrix(&f, dm, dh, &ders.der.basis().column(c));
                    let acted =
                        act_on_derivation(g, h, m, &unit_vector(&f, dg, i), &d);
                    ders.der
                        .coordinates(&matrix_to_flat(&acted))
                        .expect("the action preserves derivations")
                })
                .collect();
            Matrix::from_columns(f.clone(), d_der, cols)
        })
        .collect();
    let der_module = LieModule::new(g.clone(), d_der, der_action);
    debug_assert!(der_module.validate().is_ok());
    let n_alg = semidirect_product(&der_module);

    // end algebra: H¹(h,M) ⋊ g/h over the induced action
    let end_alg = semidirect_product(&induced);

    // δ = γ : M⋊h → Der⋊g, (m, z) ↦ (−δ(m), z)
    let mut delta = Matrix::zeros(f.clone(), d_der + dg, dm + dh);
    for r in 0..dm {
        let inner_flat = ders.delta.column(r);
        let coords = ders
            .der
            .coordinates(&inner_flat)
            .expect("inner derivations are derivations");
        for (row, v) in coords.into_iter().enumerate() {
            delta.set(row, r, f.neg(&v));
        }
    }
    for t in 0..dh {
        for (row, v) in h.span().basis().column(t).into_iter().enumerate() {
            delta.set(d_der + row, dm + t, v);
        }
    }

    // action of Der⋊g on M⋊h: ^(d,x)(m,z) = (x·m + d(z), [x,z])
    let mut action = Vec::with_capacity(d_der + dg);
    for c in 0..d_der {
        let d_mat = flat_to_matrix(&f, dm, dh, &ders.der.basis().column(c));
        let mut a = Matrix::zeros(f.clone(), dm + dh, dm + dh);
        for t in 0..dh {
            for r in 0..dm {
                a.set(r, dm + t, d_mat.at(r, t).clone());
            }
        }
        action.push(a);
    }
    for i in 0..dg {
        let ei = unit_vector(&f, dg, i);
        let mut a = Matrix::zeros(f.clone(), dm + dh, dm + dh);
        let am = m.action_of(&ei);
        for r in 0..dm {
            for c in 0..dm {
                a.set(r, c, am.at(r, c).clone());
            }
        }
        for t in 0..dh {
            let br = g.bracket(&ei, &h.span().basis().column(t));
            for (r, v) in h.coords(&br).into_iter().enumerate() {
                a.set(dm + r, dm + t, v);
            }
        }
        action.push(a);
    }
    let crossed = CrossedModuleData {
        m_alg,
        n_alg,
        delta,
        action,
    };

    // embed: M^h → M⋊h (into the M block)
    let mh = crate::lie::invariant_subspace(m, h.span());
    let embed = {
        let top = mh.basis().clone();
        let bottom = Matrix::zeros(f.clone(), dh, mh.dim());
        top.vstack(&bottom)
    };

    // projection: Der⋊g → H¹⋊(g/h), (d, x) ↦ ([d], π(x))
    let mut projection = Matrix::zeros(f.clone(), d_h1 + dq, d_der + dg);
    for c in 0..d_der {
        let class = ders.h1.class_of(&ders.der.basis().column(c));
        for (r, v) in class.into_iter().enumerate() {
            projection.set(r, c, v);
        }
    }
    for c in 0..dg {
        for (r, v) in quot.pi.column(c).into_iter().enumerate() {
            projection.set(d_h1 + r, d_der + c, v);
        }
    }

    let exact = [
        embed.kernel_basis().dim() == 0,
        embed.column_space() == crossed.delta.kernel_basis(),
        crossed.delta.column_space() == projection.kernel_basis(),
        projection.column_space() == Subspace::full(f.clone(), d_h1 + dq),
    ];

    Ok(CanonicalCrossedExtension {
        crossed,
        embed,
        projection,
        end_alg,
        exact,
    })
}
