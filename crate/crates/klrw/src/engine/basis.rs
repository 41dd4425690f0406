//! Enumeration of the diagram basis of a cell in a fixed degree.

use alloc::vec;
use alloc::vec::Vec;

use super::diagram::{crossing_degree, matchings, Slots};
use super::scalar::Field;
use super::{Algebra, Diagram};

impl<F: Field> Algebra<F> {
    /// Crossing degree of a matching on bottom labels.
    fn matching_degree(&self, bottom: &Slots, perm: &[u8]) -> i64 {
        let mut deg = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    deg += crossing_degree(&self.cd, self.lambda, bottom.0[i], bottom.0[j]);
                }
            }
        }
        deg
    }

    /// Minimal basis degree of the cell, if the cell is nonzero.
    pub fn cell_min_degree(&self, bottom: &Slots, top: &Slots) -> Option<i64> {
        matchings(bottom, top)
            .iter()
            .map(|p| self.matching_degree(bottom, p))
            .min()
    }

    /// All basis diagrams from `bottom` to `top` of degree exactly `degree`,
    /// in a fixed deterministic order.
    pub fn block_basis(&self, bottom: &Slots, top: &Slots, degree: i64) -> Vec<Diagram> {
        let n = bottom.len();
        let mut out = Vec::new();
        for perm in matchings(bottom, top) {
            let cdeg = self.matching_degree(bottom, &perm);
            let budget = degree - cdeg;
            if budget < 0 || budget % 2 != 0 {
                continue;
            }
            let k = (budget / 2) as u16;
            // distribute k dots over the black slots
            let black: Vec<usize> = (0..n).filter(|&i| bottom.0[i] != super::diagram::RED).collect();
            let mut dots = vec![0u16; n];
            distribute(&black, k, 0, &mut dots, &mut |d: &Vec<u16>| {
                out.push(Diagram { bottom: bottom.clone(), perm: perm.clone(), dots: d.clone() });
            });
        }
        out.sort();
        out
    }
}

fn distribute(
    black: &[usize],
    remaining: u16,
    idx: usize,
    dots: &mut Vec<u16>,
    emit: &mut dyn FnMut(&Vec<u16>),
) {
    if idx == black.len() {
        if remaining == 0 {
            emit(dots);
        }
        return;
    }
    if idx + 1 == black.len() {
        dots[black[idx]] = remaining;
        emit(dots);
        dots[black[idx]] = 0;
        return;
    }
    for d in 0..=remaining {
        dots[black[idx]] = d;
        distribute(black, remaining - d, idx + 1, dots, emit);
        dots[black[idx]] = 0;
    }
}
