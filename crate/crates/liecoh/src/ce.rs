//! The Chevalley–Eilenberg complex: differentials, cohomology spaces,
//! the cocycle ↔ extension dictionary in degree 2, and cocycle-level
//! pullback/pushforward.
//!
//! The differential convention is
//! `(dⁿf)(x₀,…,x_n) = Σ_i (−1)^i x_i·f(…x̂_i…) + Σ_{i<j} (−1)^{i+j} f([x_i,x_j],…x̂_i…x̂_j…)`,
//! so in degree 1 `(d¹γ)(x∧y) = x·γ(y) − y·γ(x) − γ[x,y]` and derivations
//! are exactly the 1-cocycles.

use crate::error::{Error, Result};
use crate::exterior::{Cochain, ExteriorIndex};
use crate::field::Field;
use crate::lie::{is_module_map, LieAlgebra, LieModule};
use crate::linalg::{Matrix, QuotientPresentation, Subspace};

/// Matrix of `dⁿ : Cⁿ(g, M) → Cⁿ⁺¹(g, M)` over the ordered exterior bases.
pub fn ce_differential<F: Field>(g: &LieAlgebra<F>, m: &LieModule<F>, n: usize) -> Matrix<F> {
    assert_eq!(m.algebra(), g);
    let f = g.field().clone();
    let dm = m.dim();
    let dom = ExteriorIndex::new(g.dim(), n);
    let cod = ExteriorIndex::new(g.dim(), n + 1);
    let mut d = Matrix::zeros(f.clone(), cod.len() * dm, dom.len() * dm);

    for (pos_t, t) in cod.tuples().iter().enumerate() {
        // action terms: Σ_i (−1)^i x_{t_i} · f(t ∖ t_i)
        for i in 0..t.len() {
            let mut sub = t.clone();
            let xi = sub.remove(i);
            let pos_sub = dom.position(&sub);
            let a = m.action_basis(xi);
            let neg = i % 2 == 1;
            for r in 0..dm {
                for c in 0..dm {
                    let mut v = a.at(r, c).clone();
                    if neg {
                        v = f.neg(&v);
                    }
                    let cur = d.at(pos_t * dm + r, pos_sub * dm + c).clone();
                    d.set(pos_t * dm + r, pos_sub * dm + c, f.add(&cur, &v));
                }
            }
        }
        // bracket terms: Σ_{i<j} (−1)^{i+j} f([t_i, t_j] ∧ t ∖ {t_i, t_j})
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let mut rest = t.clone();
                rest.remove(j);
                rest.remove(i);
                let neg = (i + j) % 2 == 1;
                for (k, ck) in g.bracket_basis(t[i], t[j]).iter().enumerate() {
                    if f.is_zero(ck) {
                        continue;
                    }
                    let mut tuple = Vec::with_capacity(n);
                    tuple.push(k);
                    tuple.extend_from_slice(&rest);
                    let Some((pos_sub, sign)) = dom.position_signed(&tuple) else {
                        continue;
                    };
                    let mut coeff = ck.clone();
                    if neg {
                        coeff = f.neg(&coeff);
                    }
                    if sign < 0 {
                        coeff = f.neg(&coeff);
                    }
                    for r in 0..dm {
                        let cur = d.at(pos_t * dm + r, pos_sub * dm + r).clone();
                        d.set(pos_t * dm + r, pos_sub * dm + r, f.add(&cur, &coeff));
                    }
                }
            }
        }
    }
    d
}

/// `ker(dⁿ) / im(dⁿ⁻¹)` with canonical representatives.
#[derive(Debug, Clone)]
pub struct CohomologySpace<F: Field> {
    pub degree: usize,
    pub cocycles: Subspace<F>,
    pub coboundaries: Subspace<F>,
    pub quotient: QuotientPresentation<F>,
    d_out: Matrix<F>,
}

impl<F: Field> CohomologySpace<F> {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Canonical quotient coordinates of a cocycle.
    pub fn class_of(&self, c: &Cochain<F>) -> Result<Vec<F::Elem>> {
        let image = self.d_out.mul_vec(c.coeffs());
        if image.iter().any(|v| !self.d_out.field().is_zero(v)) {
            return Err(Error::NotACocycle);
        }
        Ok(self.quotient.class_of(c.coeffs()))
    }

    /// Canonical representative of a class, as a flat coefficient vector.
    pub fn representative(&self, class: &[F::Elem]) -> Vec<F::Elem> {
        self.quotient.representative(class)
    }
}

/// Hⁿ(g, M). Degrees beyond dim g give zero spaces.
pub fn cohomology_space<F: Field>(g: &LieAlgebra<F>, m: &LieModule<F>, n: usize) -> CohomologySpace<F> {
    let f = g.field().clone();
    let d_out = ce_differential(g, m, n);
    let cocycles = d_out.kernel_basis();
    let coboundaries = if n == 0 {
        Subspace::zero(f, cocycles.ambient_dim())
    } else {
        ce_differential(g, m, n - 1).column_space()
    };
    let quotient = QuotientPresentation::new(cocycles.clone(), coboundaries.clone())
        .expect("d∘d = 0 so coboundaries are cocycles");
    CohomologySpace {
        degree: n,
        cocycles,
        coboundaries,
        quotient,
        d_out,
    }
}

/// Determinant by Laplace expansion (the minors taken here are tiny).
fn det<F: Field>(f: &F, m: &Matrix<F>) -> F::Elem {
    let n = m.rows();
    assert_eq!(n, m.cols());
    match n {
        0 => f.one(),
        1 => m.at(0, 0).clone(),
        _ => {
            let mut acc = f.zero();
            for j in 0..n {
                if f.is_zero(m.at(0, j)) {
                    continue;
                }
                let minor = Matrix::from_fn(f.clone(), n - 1, n - 1, |r, c| {
                    m.at(r + 1, if c < j { c } else { c + 1 }).clone()
                });
                let term = f.mul(m.at(0, j), &det(f, &minor));
                acc = if j % 2 == 0 {
                    f.add(&acc, &term)
                } else {
                    f.sub(&acc, &term)
                };
            }
            acc
        }
    }
}

/// Multilinear alternating evaluation of a cochain on arbitrary vectors:
/// `f(v₁∧…∧v_n) = Σ_I det(V[I]) f(e_I)`.
pub fn eval_on_vectors<F: Field>(c: &Cochain<F>, vectors: &[Vec<F::Elem>]) -> Vec<F::Elem> {
    let f = c.field().clone();
    let n = c.degree();
    assert_eq!(vectors.len(), n);
    for v in vectors {
        assert_eq!(v.len(), c.dim_g());
    }
    let mut out = vec![f.zero(); c.module_dim()];
    for (pos, tuple) in c.index().tuples().iter().enumerate() {
        let minor = Matrix::from_fn(f.clone(), n, n, |r, col| vectors[col][tuple[r]].clone());
        let dt = det(&f, &minor);
        if f.is_zero(&dt) {
            continue;
        }
        for (o, b) in out.iter_mut().zip(c.block(pos)) {
            *o = f.add(o, &f.mul(&dt, b));
        }
    }
    out
}

/// An extension `0 → M → E → g → 0` with explicit embedding and projection.
#[derive(Debug, Clone)]
pub struct ExtensionData<F: Field> {
    pub total: LieAlgebra<F>,
    /// M → E.
    pub embed: Matrix<F>,
    /// E → g.
    pub project: Matrix<F>,
    pub module: LieModule<F>,
}

impl<F: Field> ExtensionData<F> {
    pub fn base(&self) -> &LieAlgebra<F> {
        self.module.algebra()
    }

    /// The deterministic linear section of `project` (free variables zero).
    pub fn canonical_section(&self) -> Matrix<F> {
        let g_dim = self.base().dim();
        let id = Matrix::identity(self.total.field().clone(), g_dim);
        self.project
            .solve_matrix(&id)
            .expect("project is surjective")
    }
}

/// The 2-cocycle `f(x∧y) = [s(x), s(y)] − s[x, y]` of an extension with a
/// chosen linear section.
pub fn cocycle_from_extension<F: Field>(ext: &ExtensionData<F>, s: &Matrix<F>) -> Result<Cochain<F>> {
    let f = ext.total.field().clone();
    let g = ext.base();
    if ext.project.mul(s) != Matrix::identity(f.clone(), g.dim()) {
        return Err(Error::SectionInvalid("p ∘ s ≠ id".to_string()));
    }
    let mut out = Cochain::zero(f.clone(), g.dim(), 2, ext.module.dim());
    for (pos, tuple) in out.index().tuples().to_vec().into_iter().enumerate() {
        let (x, y) = (tuple[0], tuple[1]);
        let lie = ext.total.bracket(&s.column(x), &s.column(y));
        let sect = s.mul_vec(g.bracket_basis(x, y));
        let diff: Vec<F::Elem> = lie.iter().zip(&sect).map(|(a, b)| f.sub(a, b)).collect();
        let coords = ext
            .embed
            .solve(&diff)
            .map_err(|_| Error::SectionInvalid("section defect leaves M".to_string()))?;
        if ext.embed.mul_vec(&coords) != diff {
            return Err(Error::SectionInvalid("section defect leaves M".to_string()));
        }
        out.set_block(pos, &coords);
    }
    Ok(out)
}

/// The extension of `g` by `M` built on `M × g` from a 2-cocycle, with the
/// bracket `[(m,x), (m',x')] = (x·m' − x'·m + f(x∧x'), [x,x'])`.
pub fn extension_from_cocycle<F: Field>(c: &Cochain<F>, m: &LieModule<F>) -> Result<ExtensionData<F>> {
    let g = m.algebra();
    let f = g.field().clone();
    assert_eq!(c.degree(), 2);
    assert_eq!(c.dim_g(), g.dim());
    assert_eq!(c.module_dim(), m.dim());
    let d2 = ce_differential(g, m, 2);
    if d2.mul_vec(c.coeffs()).iter().any(|v| !f.is_zero(v)) {
        return Err(Error::NotACocycle);
    }

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
            for s in 0..dm {
                let v = m.action_basis(i).at(s, r).clone();
                structure[dm + i][r][s] = v.clone();
                structure[r][dm + i][s] = f.neg(&v);
            }
        }
        for j in 0..dg {
            for (k, ck) in g.bracket_basis(i, j).iter().enumerate() {
                structure[dm + i][dm + j][dm + k] = ck.clone();
            }
            let val = c.value_on(&[i, j]);
            for (s, v) in val.iter().enumerate() {
                structure[dm + i][dm + j][s] = v.clone();
            }
        }
    }
    let total = LieAlgebra::from_structure(f.clone(), labels, structure);
    debug_assert!(total.validate().is_ok());

    let embed = Matrix::from_fn(f.clone(), dim, dm, |r, cc| {
        if r == cc {
            f.one()
        } else {
            f.zero()
        }
    });
    let project = Matrix::from_fn(f.clone(), dg, dim, |r, cc| {
        if cc == dm + r {
            f.one()
        } else {
            f.zero()
        }
    });
    Ok(ExtensionData {
        total,
        embed,
        project,
        module: m.clone(),
    })
}

/// `α ∘ f` for a g-module map `α : M → M'`.
pub fn pushforward_cocycle<F: Field>(
    alpha: &Matrix<F>,
    m_src: &LieModule<F>,
    m_dst: &LieModule<F>,
    c: &Cochain<F>,
) -> Result<Cochain<F>> {
    if !is_module_map(alpha, m_src, m_dst) {
        return Err(Error::NotModuleMap);
    }
    assert_eq!(c.module_dim(), m_src.dim());
    let f = c.field().clone();
    let mut out = Cochain::zero(f, c.dim_g(), c.degree(), m_dst.dim());
    for pos in 0..c.index().len() {
        out.set_block(pos, &alpha.mul_vec(c.block(pos)));
    }
    Ok(out)
}

/// `(τ*f)(x₁∧…∧x_n) = f(τx₁∧…∧τx_n)` for a Lie algebra map `τ : g' → g`.
pub fn pullback_cocycle<F: Field>(
    tau: &Matrix<F>,
    g_src: &LieAlgebra<F>,
    g_dst: &LieAlgebra<F>,
    c: &Cochain<F>,
) -> Result<Cochain<F>> {
    assert_eq!(tau.rows(), g_dst.dim());
    assert_eq!(tau.cols(), g_src.dim());
    assert_eq!(c.dim_g(), g_dst.dim());
    let f = c.field().clone();
    for i in 0..g_src.dim() {
        for j in i + 1..g_src.dim() {
            let lhs = tau.mul_vec(g_src.bracket_basis(i, j));
            let rhs = g_dst.bracket(&tau.column(i), &tau.column(j));
            if lhs != rhs {
                return Err(Error::NotAHomomorphism);
            }
        }
    }
    let mut out = Cochain::zero(f, g_src.dim(), c.degree(), c.module_dim());
    for (pos, tuple) in out.index().tuples().to_vec().into_iter().enumerate() {
        let vectors: Vec<Vec<F::Elem>> = tuple.iter().map(|&i| tau.column(i)).collect();
        out.set_block(pos, &eval_on_vectors(c, &vectors));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::Rationals;
    use crate::lie::semidirect_product;

    const Q: Rationals = Rationals;

    #[test]
    fn degree_one_differential_is_derivation_defect() {
        let g = catalog::heisenberg(Q, 1);
        let m = LieModule::adjoint(g.clone());
        let d1 = ce_differential(&g, &m, 1);
        // γ: arbitrary 1-cochain
        let coeffs: Vec<_> = (0..9).map(|i| Q.int(i as i64 * 3 - 7)).collect();
        let gamma = Cochain::from_coeffs(Q, 3, 1, 3, coeffs);
        let dgamma = Cochain::from_coeffs(Q, 3, 2, 3, d1.mul_vec(gamma.coeffs()));
        for i in 0..3 {
            for j in i + 1..3 {
                let ei = crate::lie::unit_vector(&Q, 3, i);
                let ej = crate::lie::unit_vector(&Q, 3, j);
                let mut expect = m.act(&ei, &gamma.value_on(&[j]));
                let second = m.act(&ej, &gamma.value_on(&[i]));
                let third = eval_on_vectors(&gamma, &[g.bracket(&ei, &ej)]);
                for ((e, s), t) in expect.iter_mut().zip(&second).zip(&third) {
                    *e = Q.sub(&Q.sub(e, s), t);
                }
                assert_eq!(dgamma.value_on(&[i, j]), expect);
            }
        }
    }

    #[test]
    fn abelian_trivial_has_zero_differentials() {
        let g = catalog::abelian(Q, 4);
        let m = LieModule::trivial(g.clone(), 2);
        for n in 0..=4 {
            assert!(ce_differential(&g, &m, n).is_zero());
        }
        for n in 0..=4 {
            let h = cohomology_space(&g, &m, n);
            assert_eq!(h.dim(), num_integer::binomial(4usize, n) * 2);
        }
    }

    #[test]
    fn heisenberg_degree_one() {
        let g = catalog::heisenberg(Q, 1);
        let m = LieModule::trivial(g.clone(), 1);
        let d1 = ce_differential(&g, &m, 1);
        assert_eq!(d1.rank(), 1);
        // d¹(x*) = −(x1*∧y1*): column 0, row of tuple (1,2)
        let ix2 = ExteriorIndex::new(3, 2);
        let row = ix2.position(&[1, 2]);
        assert_eq!(*d1.at(row, 0), Q.int(-1));
        assert!(Q.is_zero(d1.at(ix2.position(&[0, 1]), 0)));
    }

    #[test]
    fn d_after_d_is_zero() {
        for fx in catalog::fixtures(Q) {
            let g = &fx.algebra;
            let m = &fx.module;
            for n in 0..=g.dim() {
                let dn = ce_differential(g, m, n);
                let dn1 = ce_differential(g, m, n + 1);
                assert!(dn1.mul(&dn).is_zero(), "d∘d ≠ 0 for {} at degree {n}", fx.name);
            }
        }
    }

    #[test]
    fn heisenberg_cohomology_dimensions() {
        for m_size in 1..=2 {
            let g = catalog::heisenberg(Q, m_size);
            let k = LieModule::trivial(g.clone(), 1);
            let h1 = cohomology_space(&g, &k, 1);
            assert_eq!(h1.dim(), 2 * m_size);
            // classes kill x: representative coefficient on x vanishes
            for c in 0..h1.dim() {
                let rep = h1.quotient.reps().column(c);
                assert!(Q.is_zero(&rep[0]));
            }
        }
        // the m = 1 anomaly: dim H² = 2, not C(2,2) − 1 = 0
        let g = catalog::heisenberg(Q, 1);
        let k = LieModule::trivial(g.clone(), 1);
        assert_eq!(cohomology_space(&g, &k, 2).dim(), 2);
    }

    #[test]
    fn degree_zero_is_invariants() {
        let g = catalog::aff1(Q);
        let m = LieModule::adjoint(g.clone());
        let h0 = cohomology_space(&g, &m, 0);
        assert_eq!(h0.cocycles, crate::lie::algebra_invariants(&m));
        assert_eq!(h0.coboundaries.dim(), 0);
    }

    #[test]
    fn heisenberg_betti_numbers() {
        // g₁: (1, 2, 2, 1);  g₂: (1, 4, 5, 5, 4, 1)
        let g = catalog::heisenberg(Q, 1);
        let k = LieModule::trivial(g.clone(), 1);
        let betti: Vec<usize> = (0..=3).map(|n| cohomology_space(&g, &k, n).dim()).collect();
        assert_eq!(betti, vec![1, 2, 2, 1]);

        let g = catalog::heisenberg(Q, 2);
        let k = LieModule::trivial(g.clone(), 1);
        let betti: Vec<usize> = (0..=5).map(|n| cohomology_space(&g, &k, n).dim()).collect();
        assert_eq!(betti, vec![1, 4, 5, 5, 4, 1]);
    }

    #[test]
    fn class_of_examples() {
        let g = catalog::heisenberg(Q, 1);
        let k = LieModule::trivial(g.clone(), 1);
        let h2 = cohomology_space(&g, &k, 2);
        // a coboundary maps to zero
        let d1 = ce_differential(&g, &k, 1);
        let gamma: Vec<_> = vec![Q.int(2), Q.int(-1), Q.int(5)];
        let cob = Cochain::from_coeffs(Q, 3, 2, 1, d1.mul_vec(&gamma));
        assert!(h2.class_of(&cob).unwrap().iter().all(|v| Q.is_zero(v)));
        // a representative maps to a unit vector
        for c in 0..h2.dim() {
            let rep = Cochain::from_coeffs(Q, 3, 2, 1, h2.quotient.reps().column(c));
            let class = h2.class_of(&rep).unwrap();
            for (i, v) in class.iter().enumerate() {
                assert_eq!(Q.is_one(v), i == c);
            }
        }
        // f and f + δ¹γ share a class
        let f0 = Cochain::from_coeffs(Q, 3, 2, 1, h2.quotient.reps().column(0));
        let shifted = f0.add(&cob);
        assert_eq!(h2.class_of(&f0).unwrap(), h2.class_of(&shifted).unwrap());
        // non-cocycles are rejected: over the adjoint module d² ≠ 0
        let adj = LieModule::adjoint(g.clone());
        let h2a = cohomology_space(&g, &adj, 2);
        let d2 = ce_differential(&g, &adj, 2);
        let mut bad = None;
        'outer: for i in 0..d2.cols() {
            let mut coeffs = vec![Q.zero(); d2.cols()];
            coeffs[i] = Q.one();
            if d2.mul_vec(&coeffs).iter().any(|v| !Q.is_zero(v)) {
                bad = Some(Cochain::from_coeffs(Q, 3, 2, 3, coeffs));
                break 'outer;
            }
        }
        let bad = bad.expect("some basis 2-cochain is not a cocycle");
        assert_eq!(h2a.class_of(&bad), Err(Error::NotACocycle));
    }

    #[test]
    fn extension_roundtrip_canonical() {
        // f = 0 gives the semidirect product
        let g = catalog::aff1(Q);
        let m = catalog::aff1_module2(g.clone());
        let zero = Cochain::zero(Q, 2, 2, 2);
        let ext = extension_from_cocycle(&zero, &m).unwrap();
        assert_eq!(ext.total, semidirect_product(&m));

        // k² with f(e1∧e2) = 1 gives the Heisenberg algebra
        let ab = catalog::abelian(Q, 2);
        let k = LieModule::trivial(ab.clone(), 1);
        let mut c = Cochain::zero(Q, 2, 2, 1);
        c.set_block(0, &[Q.one()]);
        let ext = extension_from_cocycle(&c, &k).unwrap();
        assert!(ext.total.validate().is_ok());
        // center = m0, [e1-lift, e2-lift] = m0
        assert_eq!(ext.total.bracket_basis(1, 2), &[Q.one(), Q.zero(), Q.zero()]);

        // roundtrip with the canonical section is the identity on cocycles
        let back = cocycle_from_extension(&ext, &ext.canonical_section()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn split_extension_has_zero_cocycle() {
        let g = catalog::heisenberg(Q, 1);
        let m = LieModule::trivial(g.clone(), 2);
        let zero = Cochain::zero(Q, 3, 2, 2);
        let ext = extension_from_cocycle(&zero, &m).unwrap();
        let s = ext.canonical_section();
        assert!(cocycle_from_extension(&ext, &s).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_as_extension_of_plane() {
        // g₁ over k = span{x}: the section from the quotient construction
        // produces f(x̄₁∧ȳ₁) = 1
        let g = catalog::heisenberg(Q, 1);
        let h = catalog::heisenberg_center(&g);
        let quot = crate::lie::quotient_with_section(&g, &h);
        let m = LieModule::trivial(quot.quotient.clone(), 1);
        let ext = ExtensionData {
            total: g.clone(),
            embed: h.span().basis().clone(),
            project: quot.pi.clone(),
            module: m,
        };
        let c = cocycle_from_extension(&ext, &quot.alpha).unwrap();
        assert_eq!(c.value_on(&[0, 1]), vec![Q.one()]);
    }

    #[test]
    fn section_change_is_coboundary() {
        let g = catalog::heisenberg(Q, 2);
        let k = LieModule::trivial(g.clone(), 1);
        let h2 = cohomology_space(&g, &k, 2);
        let mut c = Cochain::zero(Q, 5, 2, 1);
        c.set_block(c.index().position(&[1, 2]), &[Q.int(3)]);
        let ext = extension_from_cocycle(&c, &k).unwrap();
        let s0 = ext.canonical_section();
        // perturb the section by a map into M that is not a derivation
        let mut pert = Matrix::zeros(Q, 6, 5);
        pert.set(0, 0, Q.int(2));
        pert.set(0, 4, Q.int(-5));
        let s1 = s0.add(&pert);
        let c0 = cocycle_from_extension(&ext, &s0).unwrap();
        let c1 = cocycle_from_extension(&ext, &s1).unwrap();
        assert_ne!(c0, c1);
        assert_eq!(h2.class_of(&c0).unwrap(), h2.class_of(&c1).unwrap());
    }

    #[test]
    fn invalid_section_rejected() {
        let g = catalog::heisenberg(Q, 1);
        let k = LieModule::trivial(g.clone(), 1);
        let ext = extension_from_cocycle(&Cochain::zero(Q, 3, 2, 1), &k).unwrap();
        let bad = Matrix::zeros(Q, 4, 3);
        assert!(matches!(
            cocycle_from_extension(&ext, &bad),
            Err(Error::SectionInvalid(_))
        ));
    }

    #[test]
    fn pushforward_examples() {
        let g = catalog::heisenberg(Q, 1);
        let k = LieModule::trivial(g.clone(), 1);
        let k2 = LieModule::trivial(g.clone(), 2);
        let mut c = Cochain::zero(Q, 3, 2, 1);
        c.set_block(0, &[Q.int(4)]);

        let id = Matrix::identity(Q, 1);
        assert_eq!(pushforward_cocycle(&id, &k, &k, &c).unwrap(), c);

        let zero = Matrix::zeros(Q, 1, 1);
        assert!(pushforward_cocycle(&zero, &k, &k, &c).unwrap().is_zero());

        let lambda = id.scale(&Q.int(7));
        assert_eq!(
            pushforward_cocycle(&lambda, &k, &k, &c).unwrap(),
            c.scale(&Q.int(7))
        );

        // diagonal embedding k → k²
        let diag = Matrix::from_rows(Q, vec![vec![Q.one()], vec![Q.one()]]);
        let pushed = pushforward_cocycle(&diag, &k, &k2, &c).unwrap();
        assert_eq!(pushed.block(0), &[Q.int(4), Q.int(4)]);

        // a non-module-map is rejected
        let adj = LieModule::adjoint(g.clone());
        let c3 = Cochain::zero(Q, 3, 2, 3);
        let not_map = Matrix::from_fn(Q, 3, 3, |r, c| Q.int((r * 3 + c) as i64 + 1));
        assert_eq!(
            pushforward_cocycle(&not_map, &adj, &adj, &c3),
            Err(Error::NotModuleMap)
        );
    }

    #[test]
    fn pullback_examples() {
        let g = catalog::heisenberg(Q, 1);
        let k = LieModule::trivial(g.clone(), 1);
        let mut c = Cochain::zero(Q, 3, 2, 1);
        c.set_block(c.index().position(&[0, 1]), &[Q.int(2)]);
        c.set_block(c.index().position(&[1, 2]), &[Q.int(-3)]);

        let id = Matrix::identity(Q, 3);
        assert_eq!(pullback_cocycle(&id, &g, &g, &c).unwrap(), c);

        let zero_map = Matrix::zeros(Q, 3, 2);
        let ab2 = catalog::abelian(Q, 2);
        assert!(pullback_cocycle(&zero_map, &ab2, &g, &c).unwrap().is_zero());

        // along a genuine homomorphism value is f(τa ∧ τb)
        let mut tau = Matrix::zeros(Q, 3, 2);
        tau.set(1, 0, Q.one()); // a ↦ x1
        tau.set(0, 1, Q.one()); // b ↦ x
        let pulled = pullback_cocycle(&tau, &ab2, &g, &c).unwrap();
        assert_eq!(pulled.value_on(&[0, 1]), vec![Q.int(-2)]);

        // non-homomorphisms are rejected: abelian → heisenberg hitting x1, y1
        let mut bad = Matrix::zeros(Q, 3, 2);
        bad.set(1, 0, Q.one());
        bad.set(2, 1, Q.one());
        assert_eq!(
            pullback_cocycle(&bad, &ab2, &g, &c),
            Err(Error::NotAHomomorphism)
        );
        drop(k);
    }

    #[test]
    fn pullback_and_pushforward_commute() {
        // α∘(τ*f) = τ*(α∘f) over trivial modules
        let g = catalog::heisenberg(Q, 2);
        let sub = catalog::heisenberg(Q, 1);
        // τ: g₁ → g₂ embedding x↦x, x1↦x1, y1↦y1
        let mut tau = Matrix::zeros(Q, 5, 3);
        tau.set(0, 0, Q.one());
        tau.set(1, 1, Q.one());
        tau.set(3, 2, Q.one());
        let k_g = LieModule::trivial(g.clone(), 1);
        let k2_g = LieModule::trivial(g.clone(), 2);
        let k_s = LieModule::trivial(sub.clone(), 1);
        let k2_s = LieModule::trivial(sub.clone(), 2);
        let alpha = Matrix::from_rows(Q, vec![vec![Q.int(2)], vec![Q.int(-1)]]);

        let mut c = Cochain::zero(Q, 5, 2, 1);
        for (pos, v) in [(0, 3), (2, -1), (5, 4)] {
            c.set_block(pos, &[Q.int(v)]);
        }
        let path1 = pushforward_cocycle(
            &alpha,
            &k_s,
            &k2_s,
            &pullback_cocycle(&tau, &sub, &g, &c).unwrap(),
        )
        .unwrap();
        let path2 = pullback_cocycle(
            &tau,
            &sub,
            &g,
            &pushforward_cocycle(&alpha, &k_g, &k2_g, &c).unwrap(),
        )
        .unwrap();
        assert_eq!(path1, path2);
    }
}
