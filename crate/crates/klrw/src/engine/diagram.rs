//! Diagram bookkeeping: slot sequences, label-preserving matchings, the
//! grading, and canonical reduced words.
//!
//! A horizontal slice of a diagram is a sequence of slots, each the red
//! strand or a black strand with a label.  A basis diagram is a matching of
//! bottom to top slots (red to red), realised by the lexicographically
//! smallest reduced word in adjacent slot transpositions, with dot powers
//! attached to the black strands at the bottom.

use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanDatum, RootVec};
use crate::combinatorics::Idem;

/// Slot marker: red strand or black strand with its label.
pub const RED: u8 = u8::MAX;

/// A horizontal slice: one entry per slot, `RED` or a black label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slots(pub Vec<u8>);

impl Slots {
    pub fn from_idem(idem: &Idem) -> Self {
        let (word, red) = idem.to_word_red();
        let mut v: Vec<u8> = word.iter().map(|&l| l as u8).collect();
        v.insert(red, RED);
        Slots(v)
    }

    /// Black-only slice for algebras without a red strand.
    pub fn from_word(word: &[usize]) -> Self {
        Slots(word.iter().map(|&l| l as u8).collect())
    }

    pub fn to_idem(&self) -> Option<Idem> {
        let red = self.0.iter().position(|&s| s == RED)?;
        let word: Vec<usize> =
            self.0.iter().filter(|&&s| s != RED).map(|&s| s as usize).collect();
        Some(Idem::from_word_red(&word, red))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn swap(&self, t: usize) -> Slots {
        let mut v = self.0.clone();
        v.swap(t, t + 1);
        Slots(v)
    }

    pub fn apply_word(&self, word: &[u8]) -> Slots {
        let mut v = self.0.clone();
        for &t in word {
            v.swap(t as usize, t as usize + 1);
        }
        Slots(v)
    }

    pub fn content(&self, cd: &CartanDatum) -> RootVec {
        let mut coeffs = vec![0i64; cd.e];
        for &s in &self.0 {
            if s != RED {
                coeffs[s as usize] += 1;
            }
        }
        RootVec::new(coeffs)
    }
}

/// Matching of bottom slots to top slots.
pub type Perm = Vec<u8>;

pub fn identity_perm(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn apply_perm(bottom: &Slots, perm: &Perm) -> Slots {
    let mut v = vec![0u8; bottom.len()];
    for (i, &p) in perm.iter().enumerate() {
        v[p as usize] = bottom.0[i];
    }
    Slots(v)
}

pub fn perm_of_word(n: usize, word: &[u8]) -> Perm {
    // strand at bottom slot i ends at the slot tracked through the swaps
    let mut pos: Vec<u8> = (0..n as u8).collect();
    for &t in word {
        let t = t as usize;
        for p in pos.iter_mut() {
            if *p == t as u8 {
                *p = t as u8 + 1;
            } else if *p == t as u8 + 1 {
                *p = t as u8;
            }
        }
    }
    pos
}

pub fn inverse_perm(perm: &Perm) -> Perm {
    let mut inv = vec![0u8; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p as usize] = i as u8;
    }
    inv
}

/// Number of inversions, i.e. crossings of a reduced diagram.
pub fn perm_length(perm: &Perm) -> usize {
    let mut c = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                c += 1;
            }
        }
    }
    c
}

/// Lexicographically smallest reduced word, read bottom to top: at each step
/// take the smallest right descent.
pub fn canonical_word(perm: &Perm) -> Vec<u8> {
    let mut p = perm.clone();
    let mut word = Vec::with_capacity(perm_length(perm));
    loop {
        let mut descent = None;
        for t in 0..p.len().saturating_sub(1) {
            if p[t] > p[t + 1] {
                descent = Some(t);
                break;
            }
        }
        match descent {
            Some(t) => {
                word.push(t as u8);
                p.swap(t, t + 1);
            }
            None => break,
        }
    }
    word
}

/// Degree of a crossing of two bottom labels.
pub fn crossing_degree(cd: &CartanDatum, lambda: Option<usize>, a: u8, b: u8) -> i64 {
    match (a, b) {
        (RED, RED) => unreachable!("at most one red strand"),
        (RED, black) | (black, RED) => match lambda {
            Some(k) if k == black as usize => 1,
            _ => 0,
        },
        (i, j) if i == j => -2,
        (i, j) => -cd.cartan_entry(i as usize, j as usize),
    }
}

/// Degree of a basis diagram: two per dot plus the crossing degrees of the
/// matching's inversions, taken on bottom labels.
pub fn diagram_degree(
    cd: &CartanDatum,
    lambda: Option<usize>,
    bottom: &Slots,
    perm: &Perm,
    dots: &[u16],
) -> i64 {
    let mut deg: i64 = dots.iter().map(|&d| 2 * d as i64).sum();
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                deg += crossing_degree(cd, lambda, bottom.0[i], bottom.0[j]);
            }
        }
    }
    deg
}

/// All label-preserving matchings from `bottom` to `top` (red to red).
pub fn matchings(bottom: &Slots, top: &Slots) -> Vec<Perm> {
    if bottom.len() != top.len() {
        return Vec::new();
    }
    let n = bottom.len();
    // group top positions by label
    let mut by_label: alloc::collections::BTreeMap<u8, Vec<u8>> = alloc::collections::BTreeMap::new();
    for (i, &s) in top.0.iter().enumerate() {
        by_label.entry(s).or_default().push(i as u8);
    }
    // count bottom labels; must match
    let mut bottom_count: alloc::collections::BTreeMap<u8, usize> = alloc::collections::BTreeMap::new();
    for &s in &bottom.0 {
        *bottom_count.entry(s).or_default() += 1;
    }
    for (l, positions) in &by_label {
        if bottom_count.get(l).copied().unwrap_or(0) != positions.len() {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    let mut perm = vec![0u8; n];
    let mut used: alloc::collections::BTreeMap<u8, Vec<bool>> =
        by_label.iter().map(|(l, v)| (*l, vec![false; v.len()])).collect();
    fn rec(
        i: usize,
        n: usize,
        bottom: &Slots,
        by_label: &alloc::collections::BTreeMap<u8, Vec<u8>>,
        used: &mut alloc::collections::BTreeMap<u8, Vec<bool>>,
        perm: &mut Perm,
        out: &mut Vec<Perm>,
    ) {
        if i == n {
            out.push(perm.clone());
            return;
        }
        let label = bottom.0[i];
        let targets = &by_label[&label];
        for k in 0..targets.len() {
            if used[&label][k] {
                continue;
            }
            used.get_mut(&label).unwrap()[k] = true;
            perm[i] = targets[k];
            rec(i + 1, n, bottom, by_label, used, perm, out);
            used.get_mut(&label).unwrap()[k] = false;
        }
    }
    rec(0, n, bottom, &by_label, &mut used, &mut perm, &mut out);
    out.sort();
    out
}
