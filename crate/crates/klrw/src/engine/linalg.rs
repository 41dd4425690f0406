//! Row-echelon linear algebra over an arbitrary field, on sparse rows with
//! `usize` column indices.  Scale is small (blocks of a few hundred
//! columns), so the implementation favours clarity.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::scalar::Field;

/// Sparse vector keyed by column.
pub type SparseVec<E> = BTreeMap<usize, E>;

/// Row-reduced span with remembered pivot columns.
#[derive(Debug, Clone)]
pub struct RowSpace<F: Field> {
    pub field: F,
    /// Rows in echelon form; `pivots[i]` is the leading column of `rows[i]`.
    pub rows: Vec<SparseVec<F::Elem>>,
    pub pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(field: F) -> Self {
        RowSpace { field, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span in place.
    pub fn reduce(&self, v: &mut SparseVec<F::Elem>) {
        let f = &self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = match v.get(&piv) {
                Some(c) if !f.is_zero(c) => c.clone(),
                _ => continue,
            };
            // v -= c * row  (rows are monic at their pivot)
            for (col, rv) in row {
                let delta = f.mul(&c, rv);
                let entry = v.entry(*col).or_insert_with(|| f.zero());
                *entry = f.sub(entry, &delta);
            }
            v.retain(|_, c| !f.is_zero(c));
        }
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, mut v: SparseVec<F::Elem>) -> bool {
        let f = self.field.clone();
        self.reduce(&mut v);
        let (&piv, lead) = match v.iter().next() {
            Some((c, l)) => (c, l.clone()),
            None => return false,
        };
        let inv = f.inv(&lead);
        let monic: SparseVec<F::Elem> =
            v.iter().map(|(c, x)| (*c, f.mul(x, &inv))).collect();
        // keep earlier rows reduced against the new pivot
        for row in self.rows.iter_mut() {
            let c = match row.get(&piv) {
                Some(c) if !f.is_zero(c) => c.clone(),
                _ => continue,
            };
            for (col, rv) in &monic {
                let delta = f.mul(&c, rv);
                let entry = row.entry(*col).or_insert_with(|| f.zero());
                *entry = f.sub(entry, &delta);
            }
            row.retain(|_, x| !f.is_zero(x));
        }
        let at = self.pivots.iter().position(|&p| p > piv).unwrap_or(self.pivots.len());
        self.pivots.insert(at, piv);
        self.rows.insert(at, monic);
        true
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }
}

/// Nullspace basis of a dense matrix (rows x cols), returned as dense
/// coordinate vectors.
pub fn nullspace<F: Field>(field: &F, rows: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let mut space: RowSpace<F> = RowSpace::new(field.clone());
    for r in rows {
        let v: SparseVec<F::Elem> = r
            .iter()
            .enumerate()
            .filter(|(_, x)| !field.is_zero(x))
            .map(|(i, x)| (i, x.clone()))
            .collect();
        space.insert(v);
    }
    let pivot_set: alloc::collections::BTreeSet<usize> = space.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = alloc::vec![field.zero(); cols];
        v[free] = field.one();
        // back substitute: pivot col value = -row[free]
        for (row, &piv) in space.rows.iter().zip(&space.pivots) {
            if let Some(c) = row.get(&free) {
                v[piv] = field.neg(c);
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::scalar::{PrimeField, Rationals};
    use alloc::vec;

    #[test]
    fn rank_and_membership() {
        let mut rs = RowSpace::new(Rationals);
        let f = Rationals;
        let row = |pairs: &[(usize, i64)]| -> SparseVec<_> {
            pairs.iter().map(|&(c, v)| (c, f.from_i128(v as i128))).collect()
        };
        assert!(rs.insert(row(&[(0, 1), (1, 2)])));
        assert!(rs.insert(row(&[(1, 1), (2, 1)])));
        assert!(!rs.insert(row(&[(0, 2), (1, 5), (2, 1)])));
        assert_eq!(rs.rank(), 2);
        assert!(rs.contains(&row(&[(0, 1), (2, -2)])));
        assert!(!rs.contains(&row(&[(2, 1)])));
    }

    #[test]
    fn nullspace_small() {
        let f = PrimeField::new(5).unwrap();
        // x + 2y = 0 over F5 in 2 variables: nullspace dim 1
        let rows = vec![vec![1u64, 2u64]];
        let ns = nullspace(&f, &rows, 2);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(f.add(&f.mul(&1, &v[0]), &f.mul(&2, &v[1])), 0);
    }
}
