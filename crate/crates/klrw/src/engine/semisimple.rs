//! Semisimple-quotient analysis of a finite quotient table: Jacobson
//! radical over the rationals via the trace form, simple-factor counts via
//! central idempotent splitting, and the prime-field semisimple quotient
//! for nonnegatively graded tables with commutative degree-zero part.


use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ideal::QuotientTable;
use super::linalg::{nullspace, RowSpace, SparseVec};
use super::scalar::{Field, PrimeField, Rationals};
use super::EngineError;

/// Result of the simple-factor count over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleCountReport {
    pub count: usize,
    /// Every simple factor is a full matrix algebra over the rationals.
    pub split: bool,
    pub center_dim: usize,
    pub radical_dim: usize,
}

type Vecq = Vec<BigRational>;

struct QAlgebra {
    dim: usize,
    /// structure constants: mult[i][j] = coordinates of e_i e_j
    mult: Vec<Vec<Vecq>>,
    one: Vecq,
}

impl QAlgebra {
    fn from_table(table: &QuotientTable<Rationals>) -> Self {
        let n = table.dim();
        let mut mult = vec![vec![vec![BigRational::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &table.mult[i][j] {
                    mult[i][j][*k] = c.clone();
                }
            }
        }
        let mut one = vec![BigRational::zero(); n];
        for (i, c) in table.identity() {
            one[i] = c;
        }
        QAlgebra { dim: n, mult, one }
    }

    fn apply(&self, x: &Vecq, y: &Vecq) -> Vecq {
        let n = self.dim;
        let mut out = vec![BigRational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &c * m;
                    }
                }
            }
        }
        out
    }

    /// Trace of left multiplication by each basis vector.
    fn basis_traces(&self) -> Vecq {
        (0..self.dim).map(|i| {
            let mut t = BigRational::zero();
            for j in 0..self.dim {
                t += &self.mult[i][j][j];
            }
            t
        }).collect()
    }
}

fn to_sparse(v: &Vecq) -> SparseVec<BigRational> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// Count the simple factors of the semisimple quotient over the rationals.
pub fn count_simple_factors_q(table: &QuotientTable<Rationals>) -> Result<SimpleCountReport, EngineError> {
    let alg = QAlgebra::from_table(table);
    let n = alg.dim;
    if n == 0 {
        return Ok(SimpleCountReport { count: 0, split: true, center_dim: 0, radical_dim: 0 });
    }
    // radical of the trace form T(x, y) = tr(L_{xy})
    let traces = alg.basis_traces();
    let mut gram = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut t = BigRational::zero();
            for (k, c) in alg.mult[i][j].iter().enumerate() {
                if !c.is_zero() {
                    t += c * &traces[k];
                }
            }
            gram[i][j] = t;
        }
    }
    let rad = nullspace(&Rationals, &gram, n);
    let radical_dim = rad.len();
    // semisimple quotient: coordinates modulo the radical row space
    let mut rad_space: RowSpace<Rationals> = RowSpace::new(Rationals);
    for r in &rad {
        rad_space.insert(to_sparse(r));
    }
    let pivot_set: alloc::collections::BTreeSet<usize> = rad_space.pivots.iter().copied().collect();
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_set.contains(c)).collect();
    let s_dim = free_cols.len();
    let col_of = |c: usize| free_cols.iter().position(|&x| x == c);
    let project = |v: &Vecq| -> Vecq {
        let mut s = to_sparse(v);
        rad_space.reduce(&mut s);
        let mut out = vec![BigRational::zero(); s_dim];
        for (c, x) in s {
            out[col_of(c).expect("reduced vectors live on free columns")] = x;
        }
        out
    };
    // semisimple algebra structure constants on the projected basis
    let s_basis: Vec<Vecq> = free_cols
        .iter()
        .map(|&c| {
            let mut v = vec![BigRational::zero(); n];
            v[c] = BigRational::one();
            v
        })
        .collect();
    let s_mult: Vec<Vec<Vecq>> = s_basis
        .iter()
        .map(|x| s_basis.iter().map(|y| project(&alg.apply(x, y))).collect())
        .collect();
    let s_one = project(&alg.one);
    let s = SAlgebra { dim: s_dim, mult: s_mult, one: s_one };
    // center of S
    let center = s.center_basis();
    let center_dim = center.len();
    // split the center into primitive idempotent components
    let mut components = vec![Component { identity: s.one.clone() }];
    for z in &center {
        let mut next = Vec::new();
        for comp in components {
            next.extend(split_component(&s, comp, z)?);
        }
        components = next;
    }
    let count = components.len();
    // split diagnostic: every component of the center is one-dimensional
    // (spanned by its idempotent over Q) and every simple block has square
    // dimension
    let mut split = true;
    for comp in &components {
        // center component dimension: rank of {z * eps} over center basis
        let mut space: RowSpace<Rationals> = RowSpace::new(Rationals);
        for z in &center {
            space.insert(to_sparse(&s.apply(z, &comp.identity)));
        }
        if space.rank() != 1 {
            split = false;
        }
        // block dimension must be a perfect square
        let mut block: RowSpace<Rationals> = RowSpace::new(Rationals);
        for i in 0..s.dim {
            let mut v = vec![BigRational::zero(); s.dim];
            v[i] = BigRational::one();
            block.insert(to_sparse(&s.apply(&v, &comp.identity)));
        }
        let d = block.rank();
        let r = isqrt(d);
        if r * r != d {
            split = false;
        }
    }
    Ok(SimpleCountReport { count, split, center_dim, radical_dim })
}

fn isqrt(d: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= d {
        r += 1;
    }
    r
}

struct SAlgebra {
    dim: usize,
    mult: Vec<Vec<Vecq>>,
    one: Vecq,
}

struct Component {
    identity: Vecq,
}

impl SAlgebra {
    fn apply(&self, x: &Vecq, y: &Vecq) -> Vecq {
        let mut out = vec![BigRational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &c * m;
                    }
                }
            }
        }
        out
    }

    fn center_basis(&self) -> Vec<Vecq> {
        // solve z e_i = e_i z for all i
        let n = self.dim;
        let mut rows: Vec<Vecq> = Vec::new();
        for i in 0..n {
            // commutator with e_i as a linear map in z: row per output coord
            for k in 0..n {
                let mut row = vec![BigRational::zero(); n];
                for j in 0..n {
                    // coefficient of z_j in (z e_i - e_i z)_k
                    row[j] = &self.mult[j][i][k] - &self.mult[i][j][k];
                }
                rows.push(row);
            }
        }
        nullspace(&Rationals, &rows, n)
    }

    fn minimal_polynomial(&self, z: &Vecq, unit: &Vecq) -> Vec<BigRational> {
        // Krylov: powers of z relative to the component unit
        let mut powers: Vec<Vecq> = vec![unit.clone()];
        let mut rre: Vec<Vecq> = Vec::new();
        let mut combos: Vec<Vecq> = Vec::new();
        loop {
            let cur = powers.last().unwrap().clone();
            // attempt to express cur in the span of previous reduced rows
            let mut v = cur.clone();
            let mut combo = vec![BigRational::zero(); powers.len()];
            combo[powers.len() - 1] = BigRational::one();
            for (r, cmb) in rre.iter().zip(&combos) {
                let lead = r.iter().position(|c| !c.is_zero()).unwrap();
                let factor = v[lead].clone();
                if factor.is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    let t = &factor * &r[k];
                    v[k] -= t;
                }
                for (k, c) in cmb.iter().enumerate() {
                    let t = &factor * c;
                    combo[k] -= t;
                }
            }
            if v.iter().all(|c| c.is_zero()) {
                // combo encodes sum combo_k z^k = 0 with combo monic at top
                return combo;
            }
            // normalise the new row monic at its leading position
            let lead = v.iter().position(|c| !c.is_zero()).unwrap();
            let inv = v[lead].clone().recip();
            let row: Vecq = v.iter().map(|c| c * &inv).collect();
            let cmb: Vecq = combo.iter().map(|c| c * &inv).collect();
            let mut padded = cmb;
            padded.resize(powers.len() + 1, BigRational::zero());
            rre.push(row);
            combos.push(padded);
            for c in combos.iter_mut() {
                c.resize(powers.len() + 1, BigRational::zero());
            }
            let next = self.apply(&cur, z);
            powers.push(next);
        }
    }
}

/// Split a component along the action of a central element.
fn split_component(s: &SAlgebra, comp: Component, z: &Vecq) -> Result<Vec<Component>, EngineError> {
    let zc = s.apply(z, &comp.identity);
    let minpoly = s.minimal_polynomial(&zc, &comp.identity);
    let factors = factor_rational_poly(&minpoly)?;
    if factors.len() == 1 {
        return Ok(vec![comp]);
    }
    let mut out = Vec::new();
    for f in &factors {
        // cofactor h = minpoly / f, idempotent = h(z) * (h(z)|_{ker f})^{-1}
        let h = poly_div_exact(&minpoly, f);
        let hz = poly_eval(s, &h, &zc, &comp.identity);
        // invert h(z) on its component: find g with g * hz = eps, where eps
        // is the unit of the component cut by f.  Since f(z) kills it,
        // invert modulo f: u = h^{-1} mod f, eps = u(z) h(z)
        let u = poly_inverse_mod(&h, f).ok_or(EngineError::UnsupportedRadical)?;
        let uz = poly_eval(s, &u, &zc, &comp.identity);
        let eps = s.apply(&uz, &hz);
        out.push(Component { identity: eps });
    }
    Ok(out)
}

fn poly_eval(s: &SAlgebra, poly: &[BigRational], z: &Vecq, unit: &Vecq) -> Vecq {
    // Horner relative to the component unit
    let mut acc: Vecq = vec![BigRational::zero(); s.dim];
    for c in poly.iter().rev() {
        acc = s.apply(&acc, z);
        for k in 0..s.dim {
            let t = c * &unit[k];
            acc[k] += t;
        }
    }
    acc
}

// ---- rational polynomial helpers (dense, low to high degree) ----

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()) == Some(true) {
        p.pop();
    }
}

fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut rem = num.to_vec();
    let d = den.len() - 1;
    let lead = den.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); num.len().saturating_sub(d)];
    while rem.len() > d && !(rem.len() == 1 && rem[0].is_zero()) {
        let k = rem.len() - 1 - d;
        let c = rem.last().unwrap() / &lead;
        quot[k] = c.clone();
        for i in 0..=d {
            let t = &c * &den[i];
            rem[k + i] -= t;
        }
        poly_trim(&mut rem);
        if rem.iter().all(|c| c.is_zero()) {
            break;
        }
    }
    quot
}

fn poly_rem(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let mut rem = a.to_vec();
    let d = m.len() - 1;
    let lead = m.last().unwrap().clone();
    poly_trim(&mut rem);
    while rem.len() > d && !rem.iter().all(|c| c.is_zero()) {
        let k = rem.len() - 1 - d;
        let c = rem.last().unwrap() / &lead;
        for i in 0..=d {
            let t = &c * &m[i];
            rem[k + i] -= t;
        }
        poly_trim(&mut rem);
    }
    rem
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = x * y;
            out[i + j] += t;
        }
    }
    out
}

/// Inverse of `a` modulo `m` via extended Euclid, if coprime.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = m.to_vec();
    let mut r1 = poly_rem(a, m);
    let mut s0 = vec![BigRational::zero()];
    let mut s1 = vec![BigRational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        // q = r0 / r1
        let q = poly_div_exact_full(&r0, &r1);
        let qr = poly_mul(&q, &r1);
        let mut r2 = r0.clone();
        sub_into(&mut r2, &qr);
        poly_trim(&mut r2);
        let qs = poly_mul(&q, &s1);
        let mut s2 = s0.clone();
        sub_into(&mut s2, &qs);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd; invertible iff constant
    if r0.len() != 1 || r0[0].is_zero() {
        return None;
    }
    let inv = r0[0].clone().recip();
    let mut out: Vec<BigRational> = s0.iter().map(|c| c * &inv).collect();
    out = poly_rem(&out, m);
    Some(out)
}

fn poly_div_exact_full(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    // quotient of euclidean division (remainder discarded)
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let d = den.len() - 1;
    let lead = den.last().unwrap().clone();
    if rem.len() <= d {
        return vec![BigRational::zero()];
    }
    let mut quot = vec![BigRational::zero(); rem.len() - d];
    while rem.len() > d && !rem.iter().all(|c| c.is_zero()) {
        let k = rem.len() - 1 - d;
        let c = rem.last().unwrap() / &lead;
        quot[k] = c.clone();
        for i in 0..=d {
            let t = &c * &den[i];
            rem[k + i] -= t;
        }
        poly_trim(&mut rem);
    }
    quot
}

fn sub_into(a: &mut Vec<BigRational>, b: &[BigRational]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigRational::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i] -= c;
    }
}

/// Factor a squarefree monic rational polynomial into irreducibles: full
/// rational-root extraction, then quadratic or cubic residuals decided by
/// discriminant or root search.  Higher-degree residuals without rational
/// roots are reported unsupported.
fn factor_rational_poly(poly: &[BigRational]) -> Result<Vec<Vec<BigRational>>, EngineError> {
    let mut p = poly.to_vec();
    poly_trim(&mut p);
    // make monic
    let lead = p.last().unwrap().clone();
    for c in p.iter_mut() {
        *c = &*c / &lead;
    }
    let mut factors = Vec::new();
    // rational roots
    loop {
        if p.len() <= 1 {
            break;
        }
        if p.len() == 2 {
            factors.push(p.clone());
            return Ok(factors);
        }
        match find_rational_root(&p) {
            Some(r) => {
                let lin = vec![-r.clone(), BigRational::one()];
                p = poly_div_exact(&p, &lin);
                poly_trim(&mut p);
                factors.push(lin);
            }
            None => break,
        }
    }
    match p.len() {
        0 | 1 => {}
        3 => {
            // quadratic without rational roots is irreducible
            factors.push(p);
        }
        4 => {
            // cubic without rational roots is irreducible
            factors.push(p);
        }
        _ => return Err(EngineError::UnsupportedRadical),
    }
    Ok(factors)
}

fn find_rational_root(p: &[BigRational]) -> Option<BigRational> {
    // clear denominators to an integer polynomial
    let mut denom = BigInt::one();
    for c in p {
        denom = lcm(&denom, c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&denom / c.denom())).collect();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    if a0.is_zero() {
        return Some(BigRational::zero());
    }
    let ps = small_divisors(&a0)?;
    let qs = small_divisors(&an)?;
    for p_div in &ps {
        for q_div in &qs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(p_div * BigInt::from(sign), q_div.clone());
                if poly_value(p, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn poly_value(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_i128()?;
    let mut out = Vec::new();
    let mut d: i128 = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(n / d));
        }
        d += 1;
        if d > 1_000_000 {
            return None;
        }
    }
    out.sort();
    out.dedup();
    Some(out)
}

/// Simple-factor count of the steadied quotient of a block over the
/// rationals, computing the algebra to completion first.
///
/// The trace form pairs the cell piece `(a, b)` in degree `d` only with
/// `(b, a)` in degree `-d`, so the radical splits into small per-cell
/// kernels and the full multiplication table is never assembled; only the
/// semisimple quotient gets structure constants.
pub fn count_simple_factors_q_block(
    alg: &super::Algebra<Rationals>,
    chi: &crate::pressure::Pressure,
    lambda: &crate::cartan::Weight,
    alpha: &crate::cartan::RootVec,
) -> Result<SimpleCountReport, EngineError> {
    let ctx = super::ideal::IdealContext::steadied(alg, chi, lambda, alpha)?;
    let mut dims = None;
    for cap in [16i64, 24, 32, 48] {
        let d = ctx.quotient_dims(None, cap);
        if d.complete {
            dims = Some(d);
            break;
        }
    }
    let dims = dims.ok_or(EngineError::IncompleteDimensions)?;
    semisimple_quotient_of_block(alg, &ctx, &dims)
}

type CellKey = (Slots, Slots, i64);
use super::diagram::Slots;
use super::ideal::{GradedDims, IdealContext};
use super::{Algebra, Diagram, Element};

fn semisimple_quotient_of_block(
    alg: &Algebra<Rationals>,
    ctx: &IdealContext<Rationals>,
    dims: &GradedDims,
) -> Result<SimpleCountReport, EngineError> {
    let f = Rationals;
    let slices = ctx.surviving_slices();
    let lo = dims.dims.keys().min().copied().unwrap_or(0);
    let hi = dims.dims.keys().max().copied().unwrap_or(0);
    // quotient cell bases
    let mut qbasis: alloc::collections::BTreeMap<CellKey, Vec<Diagram>> = Default::default();
    for a in &slices {
        for b in &slices {
            for d in lo..=hi {
                let q = ctx.quotient_cell_basis(a, b, d);
                if !q.is_empty() {
                    qbasis.insert((a.clone(), b.clone(), d), q);
                }
            }
        }
    }
    // trace of left multiplication by each degree-zero corner basis diagram
    let mut corner_traces: alloc::collections::BTreeMap<(Slots, Diagram), BigRational> =
        Default::default();
    for a in &slices {
        let key = (a.clone(), a.clone(), 0i64);
        let Some(corner) = qbasis.get(&key) else { continue };
        for w in corner {
            let we = Element::from_diagram(&f, w.clone());
            let mut tr = BigRational::zero();
            for c in &slices {
                for g in lo..=hi {
                    let Some(zs) = qbasis.get(&(a.clone(), c.clone(), g)) else { continue };
                    for (zi, z) in zs.iter().enumerate() {
                        let ze = Element::from_diagram(&f, z.clone());
                        let prod = alg.multiply(&we, &ze);
                        if prod.is_zero() {
                            continue;
                        }
                        let red = ctx.reduce_in_cell(a, c, g, &prod);
                        for (dg, coeff) in red {
                            if dg == zs[zi] {
                                tr += coeff;
                            }
                        }
                    }
                }
            }
            corner_traces.insert((a.clone(), w.clone()), tr);
        }
    }
    // radical rows per cell and degree from the graded trace pairing
    let mut radical_rows: alloc::collections::BTreeMap<CellKey, RowSpace<Rationals>> =
        Default::default();
    let mut radical_dim = 0usize;
    for ((a, b, d), xs) in &qbasis {
        let Some(ys) = qbasis.get(&(b.clone(), a.clone(), -d)) else {
            // nothing to pair against: entire piece is radical
            let mut space = RowSpace::new(f.clone());
            for i in 0..xs.len() {
                let mut v = SparseVec::new();
                v.insert(i, BigRational::one());
                space.insert(v);
            }
            radical_dim += xs.len();
            radical_rows.insert((a.clone(), b.clone(), *d), space);
            continue;
        };
        // gram block
        let mut gram = alloc::vec![alloc::vec![BigRational::zero(); ys.len()]; xs.len()];
        for (i, x) in xs.iter().enumerate() {
            let xe = Element::from_diagram(&f, x.clone());
            for (j, y) in ys.iter().enumerate() {
                let ye = Element::from_diagram(&f, y.clone());
                let prod = alg.multiply(&xe, &ye);
                if prod.is_zero() {
                    continue;
                }
                let red = ctx.reduce_in_cell(a, a, 0, &prod);
                let mut t = BigRational::zero();
                for (dg, coeff) in red {
                    if let Some(tr) = corner_traces.get(&(a.clone(), dg)) {
                        t += coeff * tr;
                    }
                }
                gram[i][j] = t;
            }
        }
        let kernel = nullspace(&f, &transpose(&gram), xs.len());
        let mut space = RowSpace::new(f.clone());
        for v in kernel {
            space.insert(to_sparse(&v));
        }
        radical_dim += space.rank();
        radical_rows.insert((a.clone(), b.clone(), *d), space);
    }
    // semisimple basis: complement of the radical within each cell piece
    let mut s_index: Vec<(CellKey, Diagram)> = Vec::new();
    for ((a, b, d), xs) in &qbasis {
        let space = &radical_rows[&(a.clone(), b.clone(), *d)];
        let pivots: alloc::collections::BTreeSet<usize> = space.pivots.iter().copied().collect();
        for (i, x) in xs.iter().enumerate() {
            if !pivots.contains(&i) {
                s_index.push(((a.clone(), b.clone(), *d), x.clone()));
            }
        }
    }
    let s_dim = s_index.len();
    let lookup: alloc::collections::BTreeMap<(CellKey, Diagram), usize> = s_index
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    // express a quotient-cell element in semisimple coordinates
    let to_s_coords = |cell: &CellKey, terms: Vec<(Diagram, BigRational)>, out: &mut Vecq| {
        let xs = match qbasis.get(cell) {
            Some(xs) => xs,
            None => return,
        };
        let space = &radical_rows[cell];
        let mut v: SparseVec<BigRational> = SparseVec::new();
        for (dg, c) in terms {
            let col = xs.iter().position(|x| *x == dg).expect("reduced term in cell basis");
            let entry = v.entry(col).or_insert_with(BigRational::zero);
            *entry += c;
        }
        space.reduce(&mut v);
        for (col, c) in v {
            let idx = lookup[&(cell.clone(), xs[col].clone())];
            out[idx] += c;
        }
    };
    // structure constants
    let mut s_mult = alloc::vec![alloc::vec![alloc::vec![BigRational::zero(); s_dim]; s_dim]; s_dim];
    for (i, ((a, b, d), x)) in s_index.iter().enumerate() {
        let xe = Element::from_diagram(&f, x.clone());
        for (j, ((b2, c, g), y)) in s_index.iter().enumerate() {
            if b2 != b {
                continue;
            }
            let ye = Element::from_diagram(&f, y.clone());
            let prod = alg.multiply(&xe, &ye);
            if prod.is_zero() {
                continue;
            }
            let nd = d + g;
            if nd < lo || nd > hi {
                continue;
            }
            let red = ctx.reduce_in_cell(a, c, nd, &prod);
            let cell = (a.clone(), c.clone(), nd);
            let mut row = alloc::vec![BigRational::zero(); s_dim];
            to_s_coords(&cell, red, &mut row);
            s_mult[i][j] = row;
        }
    }
    // identity: sum of the corner idempotents
    let mut s_one = alloc::vec![BigRational::zero(); s_dim];
    for a in &slices {
        let id = Diagram::idem(a.clone());
        let e = Element::from_diagram(&f, id);
        let red = ctx.reduce_in_cell(a, a, 0, &e);
        to_s_coords(&(a.clone(), a.clone(), 0), red, &mut s_one);
    }
    let s = SAlgebra { dim: s_dim, mult: s_mult, one: s_one };
    let center = s.center_basis();
    let center_dim = center.len();
    let mut components = alloc::vec![Component { identity: s.one.clone() }];
    for z in &center {
        let mut next = Vec::new();
        for comp in components {
            next.extend(split_component(&s, comp, z)?);
        }
        components = next;
    }
    let count = components.len();
    let mut split = true;
    for comp in &components {
        let mut space: RowSpace<Rationals> = RowSpace::new(Rationals);
        for z in &center {
            space.insert(to_sparse(&s.apply(z, &comp.identity)));
        }
        if space.rank() != 1 {
            split = false;
        }
        let mut block: RowSpace<Rationals> = RowSpace::new(Rationals);
        for i in 0..s.dim {
            let mut v = alloc::vec![BigRational::zero(); s.dim];
            v[i] = BigRational::one();
            block.insert(to_sparse(&s.apply(&v, &comp.identity)));
        }
        let d = block.rank();
        let r = isqrt(d);
        if r * r != d {
            split = false;
        }
    }
    Ok(SimpleCountReport { count, split, center_dim, radical_dim })
}

fn transpose(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    if m.is_empty() {
        return Vec::new();
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut out = alloc::vec![alloc::vec![BigRational::zero(); rows]; cols];
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[j][i] = v.clone();
        }
    }
    out
}

/// Dimension of the semisimple quotient of a prime-field quotient table.
/// Requires a nonnegative grading with commutative degree-zero part; the
/// radical is then the positive part plus the Frobenius kernel of degree
/// zero.
pub fn semisimple_quotient_dim_fp(table: &QuotientTable<PrimeField>) -> Result<usize, EngineError> {
    let f = table.field.clone();
    if table.degrees.iter().any(|&d| d < 0) {
        return Err(EngineError::UnsupportedRadical);
    }
    let zero_idx: Vec<usize> =
        (0..table.dim()).filter(|&i| table.degrees[i] == 0).collect();
    let n0 = zero_idx.len();
    // degree-zero structure constants (products of degree-zero elements stay
    // in degree zero)
    let pos = |i: usize| zero_idx.iter().position(|&x| x == i);
    let mut mult0 = vec![vec![vec![f.zero(); n0]; n0]; n0];
    for (a, &i) in zero_idx.iter().enumerate() {
        for (b, &j) in zero_idx.iter().enumerate() {
            for (k, c) in &table.mult[i][j] {
                if let Some(kk) = pos(*k) {
                    mult0[a][b][kk] = c.clone();
                } else if !f.is_zero(c) {
                    return Err(EngineError::UnsupportedRadical);
                }
            }
        }
    }
    // commutativity check
    for a in 0..n0 {
        for b in 0..n0 {
            if mult0[a][b] != mult0[b][a] {
                return Err(EngineError::UnsupportedRadical);
            }
        }
    }
    // identity of the degree-zero part: the algebra identity is degree zero
    let mut one0 = vec![f.zero(); n0];
    for (i, c) in table.identity() {
        match pos(i) {
            Some(a) => one0[a] = c,
            None => return Err(EngineError::UnsupportedRadical),
        }
    }
    let apply0 = |x: &Vec<u64>, y: &Vec<u64>| -> Vec<u64> {
        let mut out = vec![f.zero(); n0];
        for a in 0..n0 {
            if f.is_zero(&x[a]) {
                continue;
            }
            for b in 0..n0 {
                if f.is_zero(&y[b]) {
                    continue;
                }
                let c = f.mul(&x[a], &y[b]);
                for (k, m) in mult0[a][b].iter().enumerate() {
                    out[k] = f.add(&out[k], &f.mul(&c, m));
                }
            }
        }
        out
    };
    // Frobenius iterate x -> x^{p^k} with p^k >= n0 is F_p-linear on a
    // commutative algebra; its kernel is the nilradical
    let mut k = 0u32;
    let mut pk: u128 = 1;
    while pk < n0 as u128 {
        pk *= f.p as u128;
        k += 1;
    }
    let frob = |x: &Vec<u64>| -> Vec<u64> {
        let mut acc = x.clone();
        for _ in 0..k {
            // acc = acc^p by repeated squaring in the exponent
            let mut powed = one0.clone();
            let mut base = acc.clone();
            let mut e = f.p;
            while e > 0 {
                if e & 1 == 1 {
                    powed = apply0(&powed, &base);
                }
                base = apply0(&base, &base);
                e >>= 1;
            }
            acc = powed;
        }
        acc
    };
    let mut rows = Vec::new();
    for a in 0..n0 {
        let mut x = vec![f.zero(); n0];
        x[a] = f.one();
        rows.push(frob(&x));
    }
    // rows are images; nilradical = kernel of the map: transpose into a
    // matrix whose columns are images
    let mut mat = vec![vec![f.zero(); n0]; n0];
    for (a, img) in rows.iter().enumerate() {
        for (kk, c) in img.iter().enumerate() {
            mat[kk][a] = c.clone();
        }
    }
    let kernel = nullspace(&f, &mat, n0);
    Ok(n0 - kernel.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    #[test]
    fn polynomial_helpers() {
        let one = BigRational::one();
        // (x - 1)(x - 2) = x^2 - 3x + 2
        let p = vec![rational(2, 1), rational(-3, 1), one.clone()];
        let factors = factor_rational_poly(&p).unwrap();
        assert_eq!(factors.len(), 2);
        // x^2 + 1 irreducible
        let p = vec![one.clone(), BigRational::zero(), one.clone()];
        let factors = factor_rational_poly(&p).unwrap();
        assert_eq!(factors.len(), 1);
        // roots at 1/2: 2x - 1 scaled monic
        let p = vec![rational(-1, 2), one.clone()];
        let factors = factor_rational_poly(&p).unwrap();
        assert_eq!(factors.len(), 1);
        // inverse mod: (x) mod (x - 1): x = 1, inverse 1
        let a = vec![BigRational::zero(), one.clone()];
        let m = vec![rational(-1, 1), one.clone()];
        let inv = poly_inverse_mod(&a, &m).unwrap();
        let prod = poly_rem(&poly_mul(&inv, &a), &m);
        assert_eq!(prod, vec![one.clone()]);
    }
}
