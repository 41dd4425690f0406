//! RoCK-chamber data: the representative pressure, Gelfand–Graev words,
//! the distinguished idempotents, and reference graded dimensions of the
//! zigzag wreath product used to cross-check engine truncations.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::combinatorics::Idem;
use crate::pressure::Pressure;
use crate::rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RockError {
    RankTooSmall,
    DepthTooSmall,
    /// The zigzag reference needs at least two vertices; the `e = 2` bond is
    /// doubled and the analogue is not standard.
    ZigzagNeedsRankThree,
}

impl fmt::Display for RockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RockError::RankTooSmall => write!(f, "need e >= 2"),
            RockError::DepthTooSmall => write!(f, "need d >= 1"),
            RockError::ZigzagNeedsRankThree => {
                write!(f, "zigzag reference requires e >= 3 (doubled bond at e = 2)")
            }
        }
    }
}

/// Parameters of a RoCK chamber representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RockParams {
    pub e: usize,
    pub d: i64,
}

/// The representative pressure: `1 - d - 1/e` on `alpha_i` for `i != 0` and
/// `(e-1)(d-1) - 1/e` on `alpha_0`; the values sum to `-1`.
pub fn chi_rock(e: usize, d: i64) -> Result<Pressure, RockError> {
    if e < 2 {
        return Err(RockError::RankTooSmall);
    }
    if d < 1 {
        return Err(RockError::DepthTooSmall);
    }
    let ei = e as i64;
    let mut values: Vec<BigRational> = Vec::with_capacity(e);
    values.push(rational((ei - 1) * (d - 1) * ei - 1, ei));
    for _ in 1..e {
        values.push(rational((1 - d) * ei - 1, ei));
    }
    Ok(Pressure::new(values).expect("values sum to -1"))
}

/// Gelfand–Graev word `a_i = (i, i+1, ..., e-1, i-1, ..., 0)`.
pub fn gg_word(i: usize, e: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity(e);
    for j in i..e {
        w.push(j);
    }
    for j in (0..i).rev() {
        w.push(j);
    }
    w
}

/// All `e^d` idempotents with outside-in right word a concatenation of `d`
/// Gelfand–Graev words, placed entirely right of the red strand.
pub fn delta_idempotents(e: usize, d: usize) -> Vec<Idem> {
    let mut tuples = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for t in &tuples {
            for q in 0..e {
                let mut t2: Vec<usize> = t.clone();
                t2.push(q);
                next.push(t2);
            }
        }
        tuples = next;
    }
    tuples
        .into_iter()
        .map(|t| {
            let mut right = Vec::with_capacity(e * d);
            for q in t {
                right.extend(gg_word(q, e));
            }
            Idem { left: Vec::new(), right }
        })
        .collect()
}

/// Membership predicate for the corner idempotent `e_+`: no black strands
/// left of the red.
pub fn is_eplus(idem: &Idem) -> bool {
    idem.left.is_empty()
}

/// Graded dimensions of the zigzag algebra of the path with `vertices`
/// nodes, in the zigzag grading (vertices 0, arrows 1, loops 2).
fn zigzag_dims(vertices: usize) -> BTreeMap<i64, u64> {
    let mut dims = BTreeMap::new();
    dims.insert(0, vertices as u64);
    if vertices >= 2 {
        dims.insert(1, 2 * (vertices as u64 - 1));
    }
    dims.insert(2, vertices as u64);
    dims
}

/// Reference graded dimensions of the wreath product of the zigzag algebra
/// of `A_{e-1}` with the symmetric group on `d` letters.  The zigzag grading
/// (vertices 0, arrows 1, loops 2) already matches the diagram grading,
/// where a loop is a dot of degree two and an arrow is a single adjacent
/// crossing of degree one; the symmetric group sits in degree zero.
pub fn wreath_reference_dims(
    e: usize,
    d: usize,
    max_degree: i64,
) -> Result<BTreeMap<i64, u64>, RockError> {
    if e < 3 {
        return Err(RockError::ZigzagNeedsRankThree);
    }
    if d < 1 {
        return Err(RockError::DepthTooSmall);
    }
    let z = zigzag_dims(e - 1);
    // tensor power
    let mut acc: BTreeMap<i64, u64> = BTreeMap::new();
    acc.insert(0, 1);
    for _ in 0..d {
        let mut next = BTreeMap::new();
        for (&da, &ma) in &acc {
            for (&db, &mb) in &z {
                *next.entry(da + db).or_insert(0) += ma * mb;
            }
        }
        acc = next;
    }
    let factorial: u64 = (1..=d as u64).product();
    let mut out = BTreeMap::new();
    for (&deg, &m) in &acc {
        if deg <= max_degree {
            out.insert(deg, m * factorial);
        }
    }
    Ok(out)
}
