//! Idempotent combinatorics: label sequences around the red strand,
//! piecewise-linear pressure paths, their one-sided envelopes, slope data
//! with its preorder, residue sequences of standard tableaux, and
//! enumeration of straight-line idempotents.

use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cartan::{CartanDatum, RootVec, Weight};
use crate::pressure::Pressure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    NonGenericPressure,
    TotalMismatch,
    NotStandard,
    ShapeMismatch,
    LevelNotOne,
}

impl fmt::Display for CombinatoricsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombinatoricsError::NonGenericPressure => {
                write!(f, "pressure vanishes on a prefix sum; slope data needs genericity")
            }
            CombinatoricsError::TotalMismatch => write!(f, "slope data have different totals"),
            CombinatoricsError::NotStandard => write!(f, "tableau is not standard"),
            CombinatoricsError::ShapeMismatch => write!(f, "tableau does not fill the shape"),
            CombinatoricsError::LevelNotOne => write!(f, "enumeration requires a level-one weight"),
        }
    }
}

/// Straight-line idempotent: black labels left and right of the red strand,
/// both read outside-in (leftmost first on the left, rightmost first on the
/// right).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Idem {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Idem {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Self {
        Idem { left, right }
    }

    /// From the picture convention: the full black word left to right plus
    /// the red position (number of black strands left of the red).
    pub fn from_word_red(word: &[usize], red: usize) -> Self {
        let left = word[..red].to_vec();
        let mut right = word[red..].to_vec();
        right.reverse();
        Idem { left, right }
    }

    /// Back to the picture convention.
    pub fn to_word_red(&self) -> (Vec<usize>, usize) {
        let mut word = self.left.clone();
        let mut r = self.right.clone();
        r.reverse();
        word.extend(r);
        (word, self.left.len())
    }

    pub fn strands(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn content(&self, cd: &CartanDatum) -> RootVec {
        let mut coeffs = vec![0i64; cd.e];
        for &l in self.left.iter().chain(self.right.iter()) {
            coeffs[l] += 1;
        }
        RootVec::new(coeffs)
    }
}

/// Piecewise-linear function on `[0, oo)`: breakpoints with strictly
/// increasing `x` starting at `(0, 0)`, extended past the last breakpoint
/// with a fixed tail slope (zero for the one-sided `f` envelopes, the chord
/// slope for the `g` envelopes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLFunction {
    pub breakpoints: Vec<(BigRational, BigRational)>,
    pub tail_slope: BigRational,
}

impl PLFunction {
    pub fn new(breakpoints: Vec<(BigRational, BigRational)>, tail_slope: BigRational) -> Self {
        assert!(!breakpoints.is_empty());
        assert!(breakpoints[0].0.is_zero() && breakpoints[0].1.is_zero());
        for w in breakpoints.windows(2) {
            assert!(w[0].0 < w[1].0, "breakpoint x must strictly increase");
        }
        PLFunction { breakpoints, tail_slope }
    }

    pub fn constant_zero() -> Self {
        PLFunction {
            breakpoints: vec![(BigRational::zero(), BigRational::zero())],
            tail_slope: BigRational::zero(),
        }
    }

    pub fn last_x(&self) -> &BigRational {
        &self.breakpoints.last().unwrap().0
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        debug_assert!(!x.is_negative());
        let (lx, ly) = self.breakpoints.last().unwrap();
        if x >= lx {
            return ly + &self.tail_slope * (x - lx);
        }
        let mut i = 0;
        while &self.breakpoints[i + 1].0 < x {
            i += 1;
        }
        let (x0, y0) = &self.breakpoints[i];
        let (x1, y1) = &self.breakpoints[i + 1];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Pointwise comparison on `[0, oo)`.
    pub fn leq(&self, other: &PLFunction) -> bool {
        let mut xs: Vec<BigRational> = self
            .breakpoints
            .iter()
            .chain(other.breakpoints.iter())
            .map(|(x, _)| x.clone())
            .collect();
        xs.sort();
        xs.dedup();
        for x in &xs {
            if self.eval(x) > other.eval(x) {
                return false;
            }
        }
        self.tail_slope <= other.tail_slope
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn cross(
    o: &(BigRational, BigRational),
    a: &(BigRational, BigRational),
    b: &(BigRational, BigRational),
) -> BigRational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Upper concave hull of points with strictly increasing x; drops interior
/// collinear points.
fn upper_hull(points: &[(BigRational, BigRational)]) -> Vec<(BigRational, BigRational)> {
    let mut hull: Vec<(BigRational, BigRational)> = Vec::new();
    for p in points {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) >= BigRational::zero() {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull
}

fn lower_hull(points: &[(BigRational, BigRational)]) -> Vec<(BigRational, BigRational)> {
    let mut hull: Vec<(BigRational, BigRational)> = Vec::new();
    for p in points {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= BigRational::zero() {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull
}

/// The pressure path of a label word: breakpoints `(m, chi(prefix of m))`.
pub fn path_function(chi: &Pressure, word: &[usize]) -> PLFunction {
    let mut pts = Vec::with_capacity(word.len() + 1);
    let mut acc = BigRational::zero();
    pts.push((BigRational::zero(), BigRational::zero()));
    for (m, &l) in word.iter().enumerate() {
        acc += &chi.values[l];
        pts.push((q(m as i64 + 1), acc.clone()));
    }
    PLFunction::new(pts, BigRational::zero())
}

/// Minimal concave, weakly increasing function above the path: the rising
/// part of the upper hull, constant afterwards.
pub fn upper_envelope_f(path: &PLFunction) -> PLFunction {
    let hull = upper_hull(&path.breakpoints);
    let mut out = vec![hull[0].clone()];
    for i in 1..hull.len() {
        if hull[i].1 > out.last().unwrap().1 {
            out.push(hull[i].clone());
        } else {
            break;
        }
    }
    PLFunction::new(out, BigRational::zero())
}

/// Mirror of [`upper_envelope_f`]: follows the falling part of the lower
/// hull, constant afterwards.
pub fn lower_envelope_f(path: &PLFunction) -> PLFunction {
    let hull = lower_hull(&path.breakpoints);
    let mut out = vec![hull[0].clone()];
    for i in 1..hull.len() {
        if hull[i].1 < out.last().unwrap().1 {
            out.push(hull[i].clone());
        } else {
            break;
        }
    }
    PLFunction::new(out, BigRational::zero())
}

/// Two-sided hull envelopes with the chord tail: the least concave majorant
/// and greatest convex minorant on `[0, k]`, both continued past `k` along
/// the line through the origin and `(k, chi(total))`.
pub fn envelopes_g(path: &PLFunction, total: &RootVec, chi: &Pressure) -> (PLFunction, PLFunction) {
    let k = path.last_x().clone();
    let tail = if k.is_zero() {
        BigRational::zero()
    } else {
        chi.eval(total) / k
    };
    let up = PLFunction::new(upper_hull(&path.breakpoints), tail.clone());
    let lo = PLFunction::new(lower_hull(&path.breakpoints), tail);
    (up, lo)
}

/// Slope datum `(gamma_{-s}, ..., gamma_0, ..., gamma_t)`: the root-lattice
/// pieces cut out by the slope changes of the one-sided envelopes, with
/// `gamma_0` absorbing the remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeDatum {
    /// `gamma_{-s}, ..., gamma_{-1}` (escaping left, slopes strictly
    /// increasing and negative).
    pub neg: Vec<RootVec>,
    /// `gamma_0`, the part stuck to the red strand.
    pub zero: RootVec,
    /// `gamma_1, ..., gamma_t` (escaping right, slopes strictly increasing
    /// and positive).
    pub pos: Vec<RootVec>,
    /// Pressure values of the parts, parallel to `neg`/`pos`.
    pub neg_chi: Vec<BigRational>,
    pub pos_chi: Vec<BigRational>,
}

impl SlopeDatum {
    pub fn total(&self) -> RootVec {
        let mut t = self.zero.clone();
        for g in self.neg.iter().chain(self.pos.iter()) {
            t = t.add(g);
        }
        t
    }

    /// All parts in display order `gamma_{-s}, ..., gamma_0, ..., gamma_t`.
    pub fn parts(&self) -> Vec<RootVec> {
        let mut out = self.neg.clone();
        out.push(self.zero.clone());
        out.extend(self.pos.iter().cloned());
        out
    }

    /// Reconstructed lower envelope: segments `gamma_{-s}, ..., gamma_{-1}`
    /// from the origin, constant afterwards.
    pub fn f_minus(&self) -> PLFunction {
        let mut pts = vec![(BigRational::zero(), BigRational::zero())];
        let mut x = BigRational::zero();
        let mut y = BigRational::zero();
        for (g, c) in self.neg.iter().zip(&self.neg_chi) {
            x += q(g.height());
            y += c;
            pts.push((x.clone(), y.clone()));
        }
        PLFunction::new(pts, BigRational::zero())
    }

    /// Reconstructed upper envelope: segments `gamma_t, ..., gamma_1` from
    /// the origin, constant afterwards.
    pub fn f_plus(&self) -> PLFunction {
        let mut pts = vec![(BigRational::zero(), BigRational::zero())];
        let mut x = BigRational::zero();
        let mut y = BigRational::zero();
        for (g, c) in self.pos.iter().zip(&self.pos_chi).rev() {
            x += q(g.height());
            y += c;
            pts.push((x.clone(), y.clone()));
        }
        PLFunction::new(pts, BigRational::zero())
    }
}

fn side_groups(
    cd: &CartanDatum,
    chi: &Pressure,
    word: &[usize],
    lower: bool,
) -> Result<(Vec<RootVec>, Vec<BigRational>), CombinatoricsError> {
    // genericity: no nonempty prefix may have zero pressure
    let mut acc = BigRational::zero();
    for &l in word {
        acc += &chi.values[l];
        if acc.is_zero() {
            return Err(CombinatoricsError::NonGenericPressure);
        }
    }
    let path = path_function(chi, word);
    let env = if lower { lower_envelope_f(&path) } else { upper_envelope_f(&path) };
    let mut groups = Vec::new();
    let mut chis = Vec::new();
    for w in env.breakpoints.windows(2) {
        let (x0, y0) = &w[0];
        let (x1, y1) = &w[1];
        let a = x0.to_integer().to_usize().expect("envelope breakpoints sit on strand indices");
        let b = x1.to_integer().to_usize().expect("envelope breakpoints sit on strand indices");
        let mut g = cd.zero_root();
        for &l in &word[a..b] {
            g.coeffs[l] += 1;
        }
        groups.push(g);
        chis.push(y1 - y0);
    }
    Ok((groups, chis))
}

/// Slope datum of an idempotent under a generic pressure.
pub fn slope_datum(
    cd: &CartanDatum,
    chi: &Pressure,
    idem: &Idem,
) -> Result<SlopeDatum, CombinatoricsError> {
    let (neg, neg_chi) = side_groups(cd, chi, &idem.left, true)?;
    let (pos_rev, pos_chi_rev) = side_groups(cd, chi, &idem.right, false)?;
    // the first upper-envelope segment is the outermost group gamma_t
    let pos: Vec<RootVec> = pos_rev.into_iter().rev().collect();
    let pos_chi: Vec<BigRational> = pos_chi_rev.into_iter().rev().collect();
    let mut zero = idem.content(cd);
    for g in neg.iter().chain(pos.iter()) {
        zero = zero.sub(g);
    }
    let datum = SlopeDatum { neg, zero, pos, neg_chi, pos_chi };
    debug_assert!(slope_chain_is_strict(&datum));
    Ok(datum)
}

fn slope_chain_is_strict(d: &SlopeDatum) -> bool {
    let slope = |g: &RootVec, c: &BigRational| c / q(g.height());
    let mut prev: Option<BigRational> = None;
    for (g, c) in d.neg.iter().zip(&d.neg_chi) {
        let s = slope(g, c);
        if s >= BigRational::zero() {
            return false;
        }
        if let Some(p) = prev {
            if p >= s {
                return false;
            }
        }
        prev = Some(s);
    }
    let mut prev: Option<BigRational> = None;
    for (g, c) in d.pos.iter().zip(&d.pos_chi) {
        let s = slope(g, c);
        if s <= BigRational::zero() {
            return false;
        }
        if let Some(p) = prev {
            if p >= s {
                return false;
            }
        }
        prev = Some(s);
    }
    true
}

/// Preorder on slope data with equal totals: `a <= b` iff the reconstructed
/// envelopes satisfy `f+_a <= f+_b` and `f-_a >= f-_b` pointwise.
pub fn slope_preorder_leq(a: &SlopeDatum, b: &SlopeDatum) -> Result<bool, CombinatoricsError> {
    if a.total() != b.total() {
        return Err(CombinatoricsError::TotalMismatch);
    }
    Ok(a.f_plus().leq(&b.f_plus()) && b.f_minus().leq(&a.f_minus()))
}

/// A multipartition with one charge per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multipartition {
    /// Weakly decreasing row lengths per component.
    pub components: Vec<Vec<usize>>,
    pub charges: Vec<i64>,
}

impl Multipartition {
    pub fn level_one(rows: Vec<usize>) -> Self {
        Multipartition { components: vec![rows], charges: vec![0] }
    }

    pub fn boxes(&self) -> usize {
        self.components.iter().flat_map(|c| c.iter()).sum()
    }
}

/// Standard filling: entries per component, row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub entries: Vec<Vec<Vec<usize>>>,
}

impl Tableau {
    pub fn level_one(rows: Vec<Vec<usize>>) -> Self {
        Tableau { entries: vec![rows] }
    }
}

/// Residue word of a standard tableau: the `m`-th letter is
/// `(col - row + charge) mod e` of the box containing `m`.
pub fn residue_word(
    e: usize,
    shape: &Multipartition,
    tableau: &Tableau,
) -> Result<Vec<usize>, CombinatoricsError> {
    if tableau.entries.len() != shape.components.len() {
        return Err(CombinatoricsError::ShapeMismatch);
    }
    let n = shape.boxes();
    let mut residue_of_entry = vec![None; n + 1];
    for (ci, comp) in shape.components.iter().enumerate() {
        let rows = &tableau.entries[ci];
        if rows.len() != comp.len() {
            return Err(CombinatoricsError::ShapeMismatch);
        }
        for (ri, &len) in comp.iter().enumerate() {
            if rows[ri].len() != len {
                return Err(CombinatoricsError::ShapeMismatch);
            }
            for (col, &m) in rows[ri].iter().enumerate() {
                if m == 0 || m > n || residue_of_entry[m].is_some() {
                    return Err(CombinatoricsError::NotStandard);
                }
                // row increase
                if col > 0 && rows[ri][col - 1] >= m {
                    return Err(CombinatoricsError::NotStandard);
                }
                // column increase
                if ri > 0 && rows[ri - 1].len() > col && rows[ri - 1][col] >= m {
                    return Err(CombinatoricsError::NotStandard);
                }
                let r = (col as i64 - ri as i64 + shape.charges[ci]).rem_euclid(e as i64);
                residue_of_entry[m] = Some(r as usize);
            }
        }
    }
    residue_of_entry
        .into_iter()
        .skip(1)
        .map(|r| r.ok_or(CombinatoricsError::NotStandard))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RedPlacement {
    /// Red strand at every position from far left to far right.
    Anywhere,
    /// Red strand at the far left only (all blacks to its right).
    FarLeft,
}

/// All straight-line idempotents with the given content: every arrangement
/// of the letter multiset times every red position, in lexicographic order
/// of the picture word with the red position running innermost.
pub fn enumerate_idempotents(
    cd: &CartanDatum,
    lambda: &Weight,
    alpha: &RootVec,
    placement: RedPlacement,
) -> Result<Vec<Idem>, CombinatoricsError> {
    if lambda.level() != 1 {
        return Err(CombinatoricsError::LevelNotOne);
    }
    debug_assert_eq!(alpha.coeffs.len(), cd.e);
    let mut letters = Vec::new();
    for (i, &c) in alpha.coeffs.iter().enumerate() {
        for _ in 0..c {
            letters.push(i);
        }
    }
    let n = letters.len();
    let mut words = Vec::new();
    distinct_permutations(&mut letters.clone(), 0, &mut words);
    words.sort();
    words.dedup();
    let mut out = Vec::new();
    for w in &words {
        match placement {
            RedPlacement::Anywhere => {
                for red in 0..=n {
                    out.push(Idem::from_word_red(w, red));
                }
            }
            RedPlacement::FarLeft => out.push(Idem::from_word_red(w, 0)),
        }
    }
    Ok(out)
}

fn distinct_permutations(letters: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == letters.len() {
        out.push(letters.clone());
        return;
    }
    let mut seen = Vec::new();
    for i in start..letters.len() {
        if seen.contains(&letters[i]) {
            continue;
        }
        seen.push(letters[i]);
        letters.swap(start, i);
        distinct_permutations(letters, start + 1, out);
        letters.swap(start, i);
    }
}

/// The letter content of a word as a root vector.
pub fn word_content(cd: &CartanDatum, word: &[usize]) -> RootVec {
    let mut coeffs = vec![0i64; cd.e];
    for &l in word {
        coeffs[l] += 1;
    }
    RootVec::new(coeffs)
}
