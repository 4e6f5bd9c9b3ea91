//! Ordered exterior basis of Λⁿ(kᵈ) and module-valued cochains over it.

use std::fmt;

use num_integer::binomial;

use crate::field::Field;

/// The lexicographically ordered strictly increasing n-tuples out of
/// `{0, …, dim-1}`: the standard basis of Λⁿ(kᵈⁱᵐ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorIndex {
    degree: usize,
    dim: usize,
    tuples: Vec<Vec<usize>>,
}

impl ExteriorIndex {
    pub fn new(dim: usize, degree: usize) -> Self {
        let mut tuples = Vec::with_capacity(binomial(dim, degree));
        if degree <= dim {
            let mut current: Vec<usize> = (0..degree).collect();
            loop {
                tuples.push(current.clone());
                // rightmost index that can still be incremented
                let Some(i) = (0..degree).rev().find(|&i| current[i] < dim - degree + i) else {
                    break;
                };
                current[i] += 1;
                for j in i + 1..degree {
                    current[j] = current[j - 1] + 1;
                }
            }
        }
        debug_assert_eq!(tuples.len(), binomial(dim, degree));
        ExteriorIndex {
            degree,
            dim,
            tuples,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple(&self, pos: usize) -> &[usize] {
        &self.tuples[pos]
    }

    /// Position of a strictly increasing tuple.
    pub fn position(&self, tuple: &[usize]) -> usize {
        self.tuples
            .binary_search_by(|t| t.as_slice().cmp(tuple))
            .expect("tuple not in exterior basis")
    }

    /// Sorts an arbitrary index tuple; returns the basis position and the
    /// sign of the sorting permutation, or None when an index repeats.
    pub fn position_signed(&self, tuple: &[usize]) -> Option<(usize, i64)> {
        let mut t = tuple.to_vec();
        let mut sign = 1i64;
        // insertion sort, counting transpositions
        for i in 1..t.len() {
            let mut j = i;
            while j > 0 && t[j - 1] > t[j] {
                t.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if t.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((self.position(&t), sign))
    }
}

/// An element of Hom(Λⁿ g, M): a flat coefficient vector over the ordered
/// exterior basis, blocked per tuple (block `t` holds the M-coordinates of
/// the value on basis tuple `t`).
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain<F: Field> {
    field: F,
    index: ExteriorIndex,
    module_dim: usize,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Cochain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cochain(deg {}, dim_g {}, dim_M {}): [{}]",
            self.index.degree(),
            self.index.dim(),
            self.module_dim,
            self.coeffs
                .iter()
                .map(|c| self.field.format(c))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

impl<F: Field> Cochain<F> {
    pub fn zero(field: F, dim_g: usize, degree: usize, module_dim: usize) -> Self {
        let index = ExteriorIndex::new(dim_g, degree);
        let coeffs = vec![field.zero(); index.len() * module_dim];
        Cochain {
            field,
            index,
            module_dim,
            coeffs,
        }
    }

    pub fn from_coeffs(field: F, dim_g: usize, degree: usize, module_dim: usize, coeffs: Vec<F::Elem>) -> Self {
        let index = ExteriorIndex::new(dim_g, degree);
        assert_eq!(coeffs.len(), index.len() * module_dim);
        Cochain {
            field,
            index,
            module_dim,
            coeffs,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.index.degree()
    }

    pub fn dim_g(&self) -> usize {
        self.index.dim()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn index(&self) -> &ExteriorIndex {
        &self.index
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn block(&self, pos: usize) -> &[F::Elem] {
        &self.coeffs[pos * self.module_dim..(pos + 1) * self.module_dim]
    }

    pub fn set_block(&mut self, pos: usize, value: &[F::Elem]) {
        assert_eq!(value.len(), self.module_dim);
        self.coeffs[pos * self.module_dim..(pos + 1) * self.module_dim].clone_from_slice(value);
    }

    /// Value on an arbitrary (not necessarily sorted) basis tuple; routes
    /// through sort-with-sign, zero on repeated indices.
    pub fn value_on(&self, tuple: &[usize]) -> Vec<F::Elem> {
        assert_eq!(tuple.len(), self.degree());
        match self.index.position_signed(tuple) {
            None => vec![self.field.zero(); self.module_dim],
            Some((pos, sign)) => {
                let block = self.block(pos);
                if sign == 1 {
                    block.to_vec()
                } else {
                    block.iter().map(|v| self.field.neg(v)).collect()
                }
            }
        }
    }

    pub fn add(&self, other: &Cochain<F>) -> Cochain<F> {
        assert_eq!(self.index, other.index);
        assert_eq!(self.module_dim, other.module_dim);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Cochain {
            field: self.field.clone(),
            index: self.index.clone(),
            module_dim: self.module_dim,
            coeffs,
        }
    }

    pub fn scale(&self, s: &F::Elem) -> Cochain<F> {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, s)).collect();
        Cochain {
            field: self.field.clone(),
            index: self.index.clone(),
            module_dim: self.module_dim,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn exterior_enumeration() {
        let ix = ExteriorIndex::new(4, 2);
        assert_eq!(ix.len(), 6);
        assert_eq!(
            ix.tuples(),
            &[
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(ExteriorIndex::new(3, 0).len(), 1);
        assert_eq!(ExteriorIndex::new(3, 4).len(), 0);
        assert_eq!(ExteriorIndex::new(5, 3).len(), 10);
    }

    #[test]
    fn signed_positions() {
        let ix = ExteriorIndex::new(4, 2);
        assert_eq!(ix.position_signed(&[1, 0]), Some((0, -1)));
        assert_eq!(ix.position_signed(&[0, 1]), Some((0, 1)));
        assert_eq!(ix.position_signed(&[2, 2]), None);
        let ix3 = ExteriorIndex::new(5, 3);
        assert_eq!(ix3.position_signed(&[2, 0, 1]), Some((ix3.position(&[0, 1, 2]), 1)));
        assert_eq!(ix3.position_signed(&[1, 0, 2]), Some((0, -1)));
    }

    #[test]
    fn cochain_evaluation() {
        let f = Rationals;
        let mut c = Cochain::zero(f, 3, 2, 2);
        c.set_block(0, &[f.int(5), f.int(7)]); // tuple (0,1)
        assert_eq!(c.value_on(&[0, 1]), vec![f.int(5), f.int(7)]);
        assert_eq!(c.value_on(&[1, 0]), vec![f.int(-5), f.int(-7)]);
        assert_eq!(c.value_on(&[1, 1]), vec![f.int(0), f.int(0)]);
    }
}
