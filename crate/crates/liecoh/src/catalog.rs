//! Built-in algebras, modules and (g, h, M) triples used by tests and the
//! CLI generator. Random structure constants essentially never satisfy the
//! Jacobi identity, so a catalog stands in for rejection sampling.

use crate::field::Field;
use crate::lie::{semidirect_product, BracketTerm, IdealData, LieAlgebra, LieModule};
use crate::linalg::{Matrix, Subspace};

/// The Heisenberg algebra g_m: basis `x, x1..xm, y1..ym` with
/// `[x_i, y_i] = x` and `x` central.
pub fn heisenberg<F: Field>(field: F, m: usize) -> LieAlgebra<F> {
    let mut labels = vec!["x".to_string()];
    labels.extend((1..=m).map(|i| format!("x{i}")));
    labels.extend((1..=m).map(|i| format!("y{i}")));
    let brackets: Vec<BracketTerm<F::Elem>> = (1..=m)
        .map(|i| (i, m + i, vec![(0, field.one())]))
        .collect();
    LieAlgebra::from_brackets(field, labels, &brackets)
}

/// The center `span{x}` of a Heisenberg algebra built by [`heisenberg`].
pub fn heisenberg_center<F: Field>(g: &LieAlgebra<F>) -> IdealData<F> {
    let f = g.field().clone();
    let mut v = vec![f.zero(); g.dim()];
    v[0] = f.one();
    let span = Subspace::from_spanning(f, g.dim(), vec![v]);
    IdealData::new(g.clone(), span).expect("the center is an ideal")
}

/// The 2-dimensional non-abelian algebra with `[e1, e2] = e2`.
pub fn aff1<F: Field>(field: F) -> LieAlgebra<F> {
    let one = field.one();
    LieAlgebra::from_brackets(
        field,
        vec!["e1".to_string(), "e2".to_string()],
        &[(0, 1, vec![(1, one)])],
    )
}

pub fn abelian<F: Field>(field: F, n: usize) -> LieAlgebra<F> {
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    LieAlgebra::abelian(field, labels)
}

/// Direct sum, with the summands' labels suffixed to stay distinct.
pub fn direct_sum<F: Field>(a: &LieAlgebra<F>, b: &LieAlgebra<F>) -> LieAlgebra<F> {
    let f = a.field().clone();
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("{l}A")).collect();
    labels.extend(b.labels().iter().map(|l| format!("{l}B")));
    let mut structure = vec![vec![vec![f.zero(); dim]; dim]; dim];
    for i in 0..da {
        for j in 0..da {
            for (k, c) in a.bracket_basis(i, j).iter().enumerate() {
                structure[i][j][k] = c.clone();
            }
        }
    }
    for i in 0..db {
        for j in 0..db {
            for (k, c) in b.bracket_basis(i, j).iter().enumerate() {
                structure[da + i][da + j][da + k] = c.clone();
            }
        }
    }
    LieAlgebra::from_structure(f, labels, structure)
}

/// The standard non-trivial 2-dimensional module over [`aff1`].
pub fn aff1_module2<F: Field>(g: LieAlgebra<F>) -> LieModule<F> {
    let f = g.field().clone();
    let a1 = Matrix::from_rows(
        f.clone(),
        vec![
            vec![f.zero(), f.zero()],
            vec![f.zero(), f.int(-1)],
        ],
    );
    let a2 = Matrix::from_rows(
        f.clone(),
        vec![
            vec![f.zero(), f.one()],
            vec![f.zero(), f.zero()],
        ],
    );
    LieModule::new(g, 2, vec![a1, a2])
}

/// A 2-dimensional non-trivial module over a Heisenberg algebra: `x1` acts
/// nilpotently, everything else acts by zero.
pub fn heisenberg_module2<F: Field>(g: LieAlgebra<F>) -> LieModule<F> {
    let f = g.field().clone();
    let mut action: Vec<Matrix<F>> = (0..g.dim()).map(|_| Matrix::zeros(f.clone(), 2, 2)).collect();
    let mut nil = Matrix::zeros(f.clone(), 2, 2);
    nil.set(0, 1, f.one());
    action[1] = nil;
    LieModule::new(g, 2, action)
}

/// An ideal spanned by the listed coordinate positions.
pub fn coordinate_ideal<F: Field>(g: &LieAlgebra<F>, coords: &[usize]) -> IdealData<F> {
    let f = g.field().clone();
    let spanning = coords
        .iter()
        .map(|&i| {
            let mut v = vec![f.zero(); g.dim()];
            v[i] = f.one();
            v
        })
        .collect();
    let span = Subspace::from_spanning(f, g.dim(), spanning);
    IdealData::new(g.clone(), span).expect("coordinate span is not an ideal")
}

/// A named (g, h, M) triple.
pub struct Fixture<F: Field> {
    pub name: String,
    pub algebra: LieAlgebra<F>,
    pub ideal: IdealData<F>,
    pub module: LieModule<F>,
}

impl<F: Field> Fixture<F> {
    fn new(name: &str, ideal: IdealData<F>, module: LieModule<F>) -> Self {
        Fixture {
            name: name.to_string(),
            algebra: ideal.parent().clone(),
            ideal,
            module,
        }
    }
}

/// The standard triples the exactness suite runs on: abelian examples,
/// Heisenberg m = 1..3, aff(1), a direct sum and a semidirect product, with
/// trivial, adjoint and 2-dimensional non-trivial coefficients, plus the
/// degenerate ideals h = 0 and h = g.
pub fn fixtures<F: Field>(field: F) -> Vec<Fixture<F>> {
    let mut out = Vec::new();

    let ab3 = abelian(field.clone(), 3);
    out.push(Fixture::new(
        "abelian3/e1/trivial1",
        coordinate_ideal(&ab3, &[0]),
        LieModule::trivial(ab3.clone(), 1),
    ));
    out.push(Fixture::new(
        "abelian3/e1e2/trivial2",
        coordinate_ideal(&ab3, &[0, 1]),
        LieModule::trivial(ab3.clone(), 2),
    ));

    for m in 1..=3 {
        let g = heisenberg(field.clone(), m);
        out.push(Fixture::new(
            &format!("heisenberg{m}/center/trivial1"),
            heisenberg_center(&g),
            LieModule::trivial(g.clone(), 1),
        ));
    }

    let g1 = heisenberg(field.clone(), 1);
    out.push(Fixture::new(
        "heisenberg1/center/adjoint",
        heisenberg_center(&g1),
        LieModule::adjoint(g1.clone()),
    ));
    out.push(Fixture::new(
        "heisenberg1/x,x1/trivial1",
        coordinate_ideal(&g1, &[0, 1]),
        LieModule::trivial(g1.clone(), 1),
    ));
    out.push(Fixture::new(
        "heisenberg1/center/module2",
        heisenberg_center(&g1),
        heisenberg_module2(g1.clone()),
    ));
    out.push(Fixture::new(
        "heisenberg1/full/trivial1",
        IdealData::full(g1.clone()),
        LieModule::trivial(g1.clone(), 1),
    ));
    out.push(Fixture::new(
        "heisenberg1/zero/adjoint",
        IdealData::zero(g1.clone()),
        LieModule::adjoint(g1.clone()),
    ));

    let aff = aff1(field.clone());
    out.push(Fixture::new(
        "aff1/e2/adjoint",
        coordinate_ideal(&aff, &[1]),
        LieModule::adjoint(aff.clone()),
    ));
    out.push(Fixture::new(
        "aff1/e2/module2",
        coordinate_ideal(&aff, &[1]),
        aff1_module2(aff.clone()),
    ));

    let sum = direct_sum(&g1, &abelian(field.clone(), 1));
    out.push(Fixture::new(
        "heis1+abelian1/xA,e1B/trivial1",
        coordinate_ideal(&sum, &[0, 3]),
        LieModule::trivial(sum.clone(), 1),
    ));

    // non-abelian ideals
    let aff_sum = direct_sum(&aff, &abelian(field.clone(), 1));
    out.push(Fixture::new(
        "aff1+abelian1/aff1-part/adjoint",
        coordinate_ideal(&aff_sum, &[0, 1]),
        LieModule::adjoint(aff_sum.clone()),
    ));
    let g2 = heisenberg(field.clone(), 2);
    out.push(Fixture::new(
        "heisenberg2/heis1-part/trivial1",
        coordinate_ideal(&g2, &[0, 1, 3]),
        LieModule::trivial(g2.clone(), 1),
    ));

    // semidirect product: aff(1) acting on its 2-dim module; the module
    // sits inside as an abelian ideal
    let sdp = semidirect_product(&aff1_module2(aff.clone()));
    out.push(Fixture::new(
        "aff1⋉k2/module-ideal/adjoint",
        coordinate_ideal(&sdp, &[0, 1]),
        LieModule::adjoint(sdp.clone()),
    ));

    out
}
