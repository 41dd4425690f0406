//! Graded two-sided ideals of a block: per-cell row-reduced slices, exact
//! idempotent membership, graded dimensions of quotients and idempotent
//! truncations, and the full multiplication table of a finite quotient.
//!
//! All generators are homogeneous, so the degree-`d` piece of the ideal is
//! spanned by `x g y` with `deg x + deg g + deg y = d`; no iterative closure
//! is needed.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::cartan::{CartanDatum, RootVec, Weight};
use crate::combinatorics::{enumerate_idempotents, Idem, RedPlacement};
use crate::pressure::Pressure;
use crate::steadying::is_generator_zero;

use super::diagram::Slots;
use super::linalg::{RowSpace, SparseVec};
use super::scalar::Field;
use super::{Algebra, Diagram, Element, EngineError};

/// Homogeneous ideal generator with its cell data.
#[derive(Clone, Debug)]
pub struct GenEl<F: Field> {
    pub bottom: Slots,
    pub top: Slots,
    pub degree: i64,
    pub elem: Element<F>,
    /// Identity diagram on its slice: products through it collapse.
    pub is_idempotent: bool,
}

impl<F: Field> GenEl<F> {
    pub fn idempotent(alg: &Algebra<F>, idem: &Idem) -> Self {
        let slots = Slots::from_idem(idem);
        GenEl {
            bottom: slots.clone(),
            top: slots.clone(),
            degree: 0,
            elem: Element::from_diagram(&alg.field, Diagram::idem(slots)),
            is_idempotent: true,
        }
    }

    pub fn element(bottom: Slots, top: Slots, degree: i64, elem: Element<F>) -> Self {
        GenEl { bottom, top, degree, elem, is_idempotent: false }
    }
}

/// Cached per-cell, per-degree data: the diagram basis, its column index,
/// and the row-reduced ideal slice.
pub struct CellData<F: Field> {
    pub basis: Vec<Diagram>,
    pub index: BTreeMap<Diagram, usize>,
    pub space: RowSpace<F>,
}

/// A block together with a generating set of a graded two-sided ideal.
pub struct IdealContext<'a, F: Field> {
    pub alg: &'a Algebra<F>,
    /// Every slice of the block.
    pub slices: Vec<Slots>,
    /// Slices that are themselves idempotent generators; their cells lie in
    /// the ideal and are skipped when dimensions are summed.
    pub killed: Vec<bool>,
    pub gens: Vec<GenEl<F>>,
    cache: RefCell<BTreeMap<(Slots, Slots, i64), Rc<CellData<F>>>>,
}

/// Dimensions of the degree-`d` piece of the ideal inside each cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdealSlice {
    pub degree: i64,
    /// (bottom, top, ideal rank, cell dimension)
    pub cells: Vec<(Slots, Slots, usize, usize)>,
}

/// Graded dimension report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: BTreeMap<i64, u64>,
    /// True when the dims vanished on the trailing window below the cap.
    pub complete: bool,
    pub max_degree: i64,
    pub window: i64,
}

impl GradedDims {
    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }
}

/// Trailing-zero window used by the finite-dimensionality heuristic.
pub const COMPLETENESS_WINDOW: i64 = 4;

impl<'a, F: Field> IdealContext<'a, F> {
    /// The steadying ideal of the block `(Lambda, alpha)` at a generic
    /// pressure: generated by the escape-test idempotents.
    pub fn steadied(
        alg: &'a Algebra<F>,
        chi: &Pressure,
        lambda: &Weight,
        alpha: &RootVec,
    ) -> Result<Self, EngineError> {
        if alg.lambda != lambda.level_one_index() {
            return Err(EngineError::LevelNotOne);
        }
        if !chi.is_generic_below(&alg.cd, alpha) {
            return Err(EngineError::NonGenericPressure);
        }
        let idems = enumerate_idempotents(&alg.cd, lambda, alpha, RedPlacement::Anywhere)
            .map_err(|_| EngineError::LevelNotOne)?;
        let mut slices = Vec::new();
        let mut killed = Vec::new();
        let mut gens = Vec::new();
        for idem in &idems {
            let dead = is_generator_zero(&alg.cd, chi, idem);
            slices.push(Slots::from_idem(idem));
            killed.push(dead);
            if dead {
                gens.push(GenEl::idempotent(alg, idem));
            }
        }
        Ok(IdealContext { alg, slices, killed, gens, cache: RefCell::new(BTreeMap::new()) })
    }

    /// A block on explicit slices with explicit generators (used by the
    /// red-free cross-check quotients).
    pub fn with_generators(alg: &'a Algebra<F>, slices: Vec<Slots>, gens: Vec<GenEl<F>>) -> Self {
        let killed = slices
            .iter()
            .map(|s| {
                gens.iter().any(|g| {
                    g.degree == 0
                        && g.bottom == *s
                        && g.top == *s
                        && g.elem.terms.len() == 1
                        && g.elem.terms.keys().next() == Some(&Diagram::idem(s.clone()))
                })
            })
            .collect();
        IdealContext { alg, slices, killed, gens, cache: RefCell::new(BTreeMap::new()) }
    }

    fn elem_to_vec(
        &self,
        columns: &BTreeMap<Diagram, usize>,
        terms: &[(Diagram, F::Elem)],
    ) -> SparseVec<F::Elem> {
        let f = &self.alg.field;
        let mut v = SparseVec::new();
        for (d, c) in terms {
            if f.is_zero(c) {
                continue;
            }
            let col = *columns.get(d).expect("product lands in the cell basis");
            let entry = v.entry(col).or_insert_with(|| f.zero());
            *entry = f.add(entry, c);
        }
        v.retain(|_, c| !f.is_zero(c));
        v
    }

    /// Row-reduced ideal slice of the cell `(bottom, top)` in one degree,
    /// with its column basis.
    pub fn cell_slice(&self, bottom: &Slots, top: &Slots, degree: i64) -> Rc<CellData<F>> {
        let key = (bottom.clone(), top.clone(), degree);
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        let f = &self.alg.field;
        let basis = self.alg.block_basis(bottom, top, degree);
        let columns: BTreeMap<Diagram, usize> =
            basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let mut space = RowSpace::new(f.clone());
        if !basis.is_empty() {
            for gen in &self.gens {
                let lo = match self.alg.cell_min_degree(bottom, &gen.bottom) {
                    Some(d) => d,
                    None => continue,
                };
                let hi_min = match self.alg.cell_min_degree(&gen.top, top) {
                    Some(d) => d,
                    None => continue,
                };
                let mut a = lo;
                while a + gen.degree + hi_min <= degree {
                    let xs = self.alg.block_basis(bottom, &gen.bottom, a);
                    let ys = self.alg.block_basis(&gen.top, top, degree - gen.degree - a);
                    for x in &xs {
                        if gen.is_idempotent {
                            // x absorbs the generator
                            for y in &ys {
                                let Some(prod) = self.alg.compose_diagrams(x, y) else {
                                    continue;
                                };
                                let mut v = SparseVec::new();
                                for (d, m) in prod {
                                    let col = columns[&d];
                                    let c = f.from_i128(m);
                                    let entry = v.entry(col).or_insert_with(|| f.zero());
                                    *entry = f.add(entry, &c);
                                }
                                v.retain(|_, c| !f.is_zero(c));
                                space.insert(v);
                            }
                            continue;
                        }
                        let xe = Element::from_diagram(f, x.clone());
                        let xg = self.alg.multiply(&xe, &gen.elem);
                        if xg.is_zero() {
                            continue;
                        }
                        for y in &ys {
                            let ye = Element::from_diagram(f, y.clone());
                            let xgy = self.alg.multiply(&xg, &ye);
                            if xgy.is_zero() {
                                continue;
                            }
                            let terms: Vec<(Diagram, F::Elem)> =
                                xgy.terms.into_iter().collect();
                            let v = self.elem_to_vec(&columns, &terms);
                            space.insert(v);
                        }
                    }
                    a += 1;
                }
            }
        }
        let rc = Rc::new(CellData { basis, index: columns, space });
        self.cache.borrow_mut().insert(key, rc.clone());
        rc
    }

    /// Per-cell ideal ranks in one degree, over every cell of the block.
    pub fn ideal_degree_piece(&self, degree: i64) -> GradedIdealSlice {
        let mut cells = Vec::new();
        for b in &self.slices {
            for t in &self.slices {
                let slice = self.cell_slice(b, t, degree);
                if slice.basis.is_empty() {
                    continue;
                }
                cells.push((b.clone(), t.clone(), slice.space.rank(), slice.basis.len()));
            }
        }
        GradedIdealSlice { degree, cells }
    }

    /// Exact membership of the straight-line idempotent in the ideal,
    /// decided in its own degree-zero corner.
    pub fn idem_in_ideal(&self, idem: &Idem) -> bool {
        let slots = Slots::from_idem(idem);
        let slice = self.cell_slice(&slots, &slots, 0);
        let id = Diagram::idem(slots);
        let col = match slice.index.get(&id) {
            Some(&c) => c,
            None => return true, // empty cell: the block kills it outright
        };
        let f = &self.alg.field;
        let mut v = SparseVec::new();
        v.insert(col, f.one());
        slice.space.contains(&v)
    }

    fn surviving_slice_indices(&self) -> Vec<usize> {
        (0..self.slices.len()).filter(|&i| !self.killed[i]).collect()
    }

    /// Graded dimensions of the quotient by the ideal, over the chosen
    /// cells (all surviving cells when `restrict` is `None`).
    pub fn quotient_dims(&self, restrict: Option<&[Slots]>, max_degree: i64) -> GradedDims {
        let keep: Vec<Slots> = match restrict {
            Some(r) => r.to_vec(),
            None => self.surviving_slice_indices().iter().map(|&i| self.slices[i].clone()).collect(),
        };
        let mut dmin = i64::MAX;
        for b in &keep {
            for t in &keep {
                if let Some(d) = self.alg.cell_min_degree(b, t) {
                    dmin = dmin.min(d);
                }
            }
        }
        let mut dims = BTreeMap::new();
        if dmin == i64::MAX {
            return GradedDims { dims, complete: true, max_degree, window: COMPLETENESS_WINDOW };
        }
        let mut trailing_zeros = 0i64;
        let mut complete = false;
        let mut d = dmin;
        while d <= max_degree {
            let mut total = 0u64;
            for b in &keep {
                for t in &keep {
                    let slice = self.cell_slice(b, t, d);
                    total += (slice.basis.len() - slice.space.rank()) as u64;
                }
            }
            if total > 0 {
                dims.insert(d, total);
                trailing_zeros = 0;
            } else {
                trailing_zeros += 1;
                if trailing_zeros >= COMPLETENESS_WINDOW && d >= 0 {
                    complete = true;
                    break;
                }
            }
            d += 1;
        }
        GradedDims { dims, complete, max_degree, window: COMPLETENESS_WINDOW }
    }

    /// Surviving slices: block slices that are not generator idempotents.
    pub fn surviving_slices(&self) -> Vec<Slots> {
        self.surviving_slice_indices().iter().map(|&i| self.slices[i].clone()).collect()
    }

    /// Quotient basis of one cell in one degree: the cell basis diagrams
    /// whose columns are non-pivot in the ideal slice.
    pub(crate) fn quotient_cell_basis(&self, b: &Slots, t: &Slots, d: i64) -> Vec<Diagram> {
        let slice = self.cell_slice(b, t, d);
        let pivots: alloc::collections::BTreeSet<usize> =
            slice.space.pivots.iter().copied().collect();
        slice
            .basis
            .iter()
            .enumerate()
            .filter(|(i, _)| !pivots.contains(i))
            .map(|(_, dgm)| dgm.clone())
            .collect()
    }

    /// Reduce an element of a cell modulo the ideal slice and express it in
    /// the quotient cell basis (parallel coordinates).
    pub(crate) fn reduce_in_cell(
        &self,
        b: &Slots,
        t: &Slots,
        d: i64,
        elem: &Element<F>,
    ) -> Vec<(Diagram, F::Elem)> {
        let slice = self.cell_slice(b, t, d);
        let terms: Vec<(Diagram, F::Elem)> =
            elem.terms.iter().map(|(dg, c)| (dg.clone(), c.clone())).collect();
        let mut v = self.elem_to_vec(&slice.index, &terms);
        slice.space.reduce(&mut v);
        v.into_iter().map(|(col, c)| (slice.basis[col].clone(), c)).collect()
    }

    /// Full multiplication table of the quotient, restricted to the given
    /// slices (all surviving ones when `None`).  Requires the dimensions to
    /// be confirmed complete below `max_degree`.
    pub fn quotient_table(
        &self,
        restrict: Option<&[Slots]>,
        max_degree: i64,
    ) -> Result<QuotientTable<F>, EngineError> {
        let dims = self.quotient_dims(restrict, max_degree);
        if !dims.complete {
            return Err(EngineError::IncompleteDimensions);
        }
        let keep: Vec<Slots> = match restrict {
            Some(r) => r.to_vec(),
            None => self.surviving_slice_indices().iter().map(|&i| self.slices[i].clone()).collect(),
        };
        let top_degree = dims.dims.keys().max().copied().unwrap_or(0);
        let bottom_degree = dims.dims.keys().min().copied().unwrap_or(0);
        // collect basis
        let mut basis: Vec<(Diagram, i64)> = Vec::new();
        for b in &keep {
            for t in &keep {
                for d in bottom_degree..=top_degree {
                    for dg in self.quotient_cell_basis(b, t, d) {
                        basis.push((dg, d));
                    }
                }
            }
        }
        let index: BTreeMap<Diagram, usize> =
            basis.iter().enumerate().map(|(i, (dg, _))| (dg.clone(), i)).collect();
        let f = &self.alg.field;
        let n = basis.len();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, (x, dx)) in basis.iter().enumerate() {
            for (j, (y, dy)) in basis.iter().enumerate() {
                if x.top() != y.bottom {
                    continue;
                }
                let d = dx + dy;
                let prod = self.alg.multiply(
                    &Element::from_diagram(f, x.clone()),
                    &Element::from_diagram(f, y.clone()),
                );
                if prod.is_zero() {
                    continue;
                }
                if d > top_degree {
                    // must reduce to zero in the quotient; verify
                    let red = self.reduce_in_cell(&x.bottom, &y.top(), d, &prod);
                    debug_assert!(red.is_empty(), "degrees above the confirmed top must vanish");
                    continue;
                }
                let red = self.reduce_in_cell(&x.bottom, &y.top(), d, &prod);
                let mut row = Vec::new();
                for (dg, c) in red {
                    let k = *index.get(&dg).expect("reduced product lies in the quotient basis");
                    row.push((k, c));
                }
                row.sort_by_key(|(k, _)| *k);
                mult[i][j] = row;
            }
        }
        Ok(QuotientTable {
            field: f.clone(),
            degrees: basis.iter().map(|(_, d)| *d).collect(),
            bottoms: basis.iter().map(|(dg, _)| dg.bottom.clone()).collect(),
            tops: basis.iter().map(|(dg, _)| dg.top()).collect(),
            diagrams: basis.into_iter().map(|(dg, _)| dg).collect(),
            mult,
        })
    }
}

/// Multiplication table of a finite-dimensional quotient, with cell and
/// degree data per basis vector.
#[derive(Debug, Clone)]
pub struct QuotientTable<F: Field> {
    pub field: F,
    pub degrees: Vec<i64>,
    pub bottoms: Vec<Slots>,
    pub tops: Vec<Slots>,
    pub diagrams: Vec<Diagram>,
    pub mult: Vec<Vec<Vec<(usize, F::Elem)>>>,
}

impl<F: Field> QuotientTable<F> {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn graded_dims(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    /// Identity element coordinates: the sum of the idempotent diagrams.
    pub fn identity(&self) -> Vec<(usize, F::Elem)> {
        let mut out = Vec::new();
        for (i, dg) in self.diagrams.iter().enumerate() {
            if *dg == Diagram::idem(dg.bottom.clone()) {
                out.push((i, self.field.one()));
            }
        }
        out
    }

    /// Left-multiplication matrix of a basis vector.
    pub fn left_matrix(&self, i: usize) -> Vec<Vec<F::Elem>> {
        let n = self.dim();
        let f = &self.field;
        let mut m = vec![vec![f.zero(); n]; n];
        for j in 0..n {
            for (k, c) in &self.mult[i][j] {
                m[*k][j] = c.clone();
            }
        }
        m
    }
}

/// Convenience wrapper: graded dimensions of the steadied quotient.
pub fn quotient_graded_dims<F: Field>(
    alg: &Algebra<F>,
    chi: &Pressure,
    lambda: &Weight,
    alpha: &RootVec,
    max_degree: i64,
) -> Result<GradedDims, EngineError> {
    let ctx = IdealContext::steadied(alg, chi, lambda, alpha)?;
    Ok(ctx.quotient_dims(None, max_degree))
}

/// Graded dimensions of the idempotent truncation of the steadied quotient.
pub fn truncation_graded_dims<F: Field>(
    alg: &Algebra<F>,
    chi: &Pressure,
    lambda: &Weight,
    alpha: &RootVec,
    idems: &[Idem],
    max_degree: i64,
) -> Result<GradedDims, EngineError> {
    let ctx = IdealContext::steadied(alg, chi, lambda, alpha)?;
    let keep: Vec<Slots> = idems.iter().map(Slots::from_idem).collect();
    Ok(ctx.quotient_dims(Some(&keep), max_degree))
}

/// Exact ideal membership of one idempotent.
pub fn idem_in_ideal<F: Field>(
    alg: &Algebra<F>,
    chi: &Pressure,
    lambda: &Weight,
    alpha: &RootVec,
    idem: &Idem,
) -> Result<bool, EngineError> {
    let ctx = IdealContext::steadied(alg, chi, lambda, alpha)?;
    Ok(ctx.idem_in_ideal(idem))
}

/// The content check used by callers assembling custom blocks.
pub fn contents_match(cd: &CartanDatum, slices: &[Slots], alpha: &RootVec) -> bool {
    slices.iter().all(|s| s.content(cd) == *alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::scalar::Rationals;
    use crate::pressure::Pressure;
    #[allow(unused_imports)]
    use crate::weyl::{act_pressure, WeylWord};

    fn setup(e: usize) -> (Algebra<Rationals>, Weight) {
        let cd = CartanDatum::affine(e).unwrap();
        let l0 = Weight::fundamental(e, 0);
        (Algebra::new(cd, &l0, Rationals).unwrap(), l0)
    }

    #[test]
    fn empty_generators_empty_slice() {
        let (alg, _) = setup(2);
        let slots = Slots::from_idem(&Idem::from_word_red(&[0, 1], 0));
        let ctx = IdealContext::with_generators(&alg, vec![slots.clone()], Vec::new());
        let slice = ctx.cell_slice(&slots, &slots, 0);
        assert_eq!(slice.space.rank(), 0);
        assert!(!ctx.idem_in_ideal(&Idem::from_word_red(&[0, 1], 0)));
    }

    #[test]
    fn delta_block_cyclotomic_dimension_two() {
        // e = 2, alpha = delta, chi_0: the quotient has total dimension 2,
        // in degrees 0 and 2
        let (alg, l0) = setup(2);
        let chi0 = Pressure::uniform(2);
        let alpha = RootVec::new(alloc::vec![1, 1]);
        let dims = quotient_graded_dims(&alg, &chi0, &l0, &alpha, 12).unwrap();
        assert!(dims.complete);
        assert_eq!(dims.total(), 2);
        assert_eq!(dims.dims.get(&0), Some(&1));
        assert_eq!(dims.dims.get(&2), Some(&1));
    }

    #[test]
    fn alpha_zero_block_is_scalar() {
        let (alg, l0) = setup(2);
        let chi0 = Pressure::uniform(2);
        let alpha = RootVec::zero(2);
        let dims = quotient_graded_dims(&alg, &chi0, &l0, &alpha, 8).unwrap();
        assert_eq!(dims.total(), 1);
        assert_eq!(dims.dims.get(&0), Some(&1));
    }

    #[test]
    fn membership_monotone_under_generators() {
        // a generator idempotent is trivially in the ideal
        let (alg, l0) = setup(2);
        let chi0 = Pressure::uniform(2);
        let alpha = RootVec::new(alloc::vec![1, 1]);
        let ctx = IdealContext::steadied(&alg, &chi0, &l0, &alpha).unwrap();
        let killed = Idem::from_word_red(&[0, 1], 1);
        assert!(ctx.idem_in_ideal(&killed));
    }

    #[test]
    fn non_generic_pressure_rejected() {
        let (alg, l0) = setup(2);
        let wall = Pressure::new(alloc::vec![crate::rational(0, 1), crate::rational(-1, 1)])
            .unwrap();
        let alpha = RootVec::new(alloc::vec![1, 1]);
        assert!(matches!(
            quotient_graded_dims(&alg, &wall, &l0, &alpha, 8),
            Err(EngineError::NonGenericPressure)
        ));
    }

    #[test]
    fn ideal_slice_closure_sample() {
        // sampled closure check: products of slice rows with degree-zero
        // basis diagrams stay in the slice one degree up... degree 0 times
        // degree 0 stays in degree 0
        let (alg, l0) = setup(2);
        let chi0 = Pressure::uniform(2);
        let alpha = RootVec::new(alloc::vec![1, 1]);
        let ctx = IdealContext::steadied(&alg, &chi0, &l0, &alpha).unwrap();
        let piece = ctx.ideal_degree_piece(0);
        assert!(!piece.cells.is_empty());
        // pick a generator cell and multiply by the corner idempotent
        let gen = &ctx.gens[0];
        let e = gen.elem.clone();
        let prod = alg.multiply(&e, &e);
        let red = ctx.reduce_in_cell(&gen.bottom, &gen.top, 0, &prod);
        assert!(red.is_empty(), "generator squared stays in the ideal");
    }
}
