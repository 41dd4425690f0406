//! Rewriting of diagram words to the normal-form basis.
//!
//! A diagram word is a sequence of adjacent slot transpositions read bottom
//! to top over a fixed bottom slice; dots are carried at the bottom.  Normal
//! form is (matching, dots) with the matching realised by its canonical
//! reduced word.  Rewriting applies the local relations:
//!
//! * double crossings resolve to dot polynomials (zero for equal black
//!   labels, the bond polynomial otherwise, the cyclotomic dot power over
//!   the red strand);
//! * dots slide through crossings, with a crossing-deleting correction when
//!   the two strands are black with equal labels;
//! * braid moves are free except when the outer strands are black with equal
//!   labels: a black middle contributes the bond difference quotient, a red
//!   middle the dotted idempotent sum.
//!
//! Every correction strictly lowers the crossing count, which bounds the
//! recursion.  Coefficients stay integral, so one cached rewrite serves all
//! coefficient fields.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::cartan::CartanDatum;

use super::diagram::{canonical_word, identity_perm, Perm, Slots, RED};

/// Sign convention for sliding a same-label black crossing across the red
/// strand: crossing right of the red minus crossing left of it equals the
/// dotted idempotent sum, as the faithful polynomial action dictates.
const REDCROSS_SIGN: i128 = -1;

pub type NfKey = (Perm, Vec<u16>);
pub type NormMap = BTreeMap<NfKey, i128>;

fn add_term(out: &mut NormMap, key: NfKey, coeff: i128) {
    if coeff == 0 {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match out.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

pub struct Rewriter {
    pub cd: CartanDatum,
    /// Fundamental index carried by the red strand (level one), if any red
    /// strand is present in the slices handled.
    pub lambda: Option<usize>,
    cache: RefCell<BTreeMap<(Slots, Vec<u8>), Rc<NormMap>>>,
}

type CorrTerm = (Vec<u8>, Vec<u16>, i128);

impl Rewriter {
    pub fn new(cd: CartanDatum, lambda: Option<usize>) -> Self {
        Rewriter { cd, lambda, cache: RefCell::new(BTreeMap::new()) }
    }

    fn red_exponent(&self, black: u8) -> u16 {
        match self.lambda {
            Some(k) if k == black as usize => 1,
            _ => 0,
        }
    }

    fn same_black(&self, a: u8, b: u8) -> bool {
        a != RED && b != RED && a == b
    }

    /// Resolve the double crossing at slots `t, t+1` over `state` into dot
    /// monomials at the same height.
    fn resolve_double(&self, state: &Slots, t: usize) -> Vec<(Vec<u16>, i128)> {
        let n = state.len();
        let a = state.0[t];
        let b = state.0[t + 1];
        let mono = |pairs: &[(usize, u16)]| {
            let mut d = vec![0u16; n];
            for &(s, p) in pairs {
                d[s] += p;
            }
            d
        };
        if a == RED || b == RED {
            let (black_slot, black_label) = if a == RED { (t + 1, b) } else { (t, a) };
            let m = self.red_exponent(black_label);
            return vec![(mono(&[(black_slot, m)]), 1)];
        }
        if a == b {
            return Vec::new();
        }
        let (i, j) = (a as usize, b as usize);
        let e = self.cd.e;
        let up = (j + 1) % e == i; // i = j + 1
        let down = (i + 1) % e == j; // i = j - 1
        match (up, down) {
            (true, true) => vec![
                (mono(&[(t, 2)]), -1),
                (mono(&[(t, 1), (t + 1, 1)]), 2),
                (mono(&[(t + 1, 2)]), -1),
            ],
            (true, false) => vec![(mono(&[(t, 1)]), 1), (mono(&[(t + 1, 1)]), -1)],
            (false, true) => vec![(mono(&[(t, 1)]), -1), (mono(&[(t + 1, 1)]), 1)],
            (false, false) => vec![(mono(&[]), 1)],
        }
    }

    /// Correction for replacing the pattern `[x, y, x]` (bottom to top) by
    /// `[y, x, y]` over `state`.
    fn braid_correction(&self, state: &Slots, x: usize, y: usize) -> Vec<(Vec<u16>, i128)> {
        debug_assert_eq!(x.abs_diff(y), 1);
        let m = x.min(y);
        let dir: i128 = if x < y { 1 } else { -1 };
        let n = state.len();
        let outer1 = state.0[m];
        let mid = state.0[m + 1];
        let outer2 = state.0[m + 2];
        if outer1 == RED || outer2 == RED || outer1 != outer2 {
            return Vec::new();
        }
        let mono = |pairs: &[(usize, u16)]| {
            let mut d = vec![0u16; n];
            for &(s, p) in pairs {
                d[s] += p;
            }
            d
        };
        if mid == RED {
            let total = self.red_exponent(outer1);
            let mut out = Vec::new();
            for p in 0..total {
                let q = total - 1 - p;
                out.push((mono(&[(m, p), (m + 2, q)]), -dir * REDCROSS_SIGN));
            }
            return out;
        }
        let i = outer1 as usize;
        let j = mid as usize;
        if i == j {
            return Vec::new();
        }
        let e = self.cd.e;
        let up = (j + 1) % e == i;
        let down = (i + 1) % e == j;
        match (up, down) {
            (true, true) => vec![
                (mono(&[(m, 1)]), -dir),
                (mono(&[(m + 1, 1)]), 2 * dir),
                (mono(&[(m + 2, 1)]), -dir),
            ],
            (true, false) => vec![(mono(&[]), dir)],
            (false, true) => vec![(mono(&[]), -dir)],
            (false, false) => Vec::new(),
        }
    }

    /// Push dots sitting just above the crossing `sigma_t` over `bottom`
    /// down below it.  Returns (crossing kept, dots below, coefficient).
    fn push_dots_through_gen(
        &self,
        bottom: &Slots,
        t: usize,
        dots_above: &[u16],
    ) -> Vec<(bool, Vec<u16>, i128)> {
        let n = bottom.len();
        let interacting = self.same_black(bottom.0[t], bottom.0[t + 1]);
        let mut states = vec![(true, dots_above.to_vec(), vec![0u16; n], 1i128)];
        let mut done = Vec::new();
        while let Some((kept, mut above, mut below, coeff)) = states.pop() {
            let slot = above.iter().position(|&d| d > 0);
            let s = match slot {
                None => {
                    done.push((kept, below, coeff));
                    continue;
                }
                Some(s) => s,
            };
            above[s] -= 1;
            if !kept {
                below[s] += 1;
                states.push((kept, above, below, coeff));
                continue;
            }
            if s != t && s != t + 1 {
                below[s] += 1;
                states.push((kept, above, below, coeff));
                continue;
            }
            // principal: the dot follows its strand through the crossing
            let mut b2 = below.clone();
            let swapped = if s == t { t + 1 } else { t };
            b2[swapped] += 1;
            states.push((true, above.clone(), b2, coeff));
            if interacting {
                // correction deletes the crossing and consumes the dot
                let sign = if s == t { 1 } else { -1 };
                let mut b3 = below.clone();
                for (i, &d) in above.iter().enumerate() {
                    b3[i] += d;
                }
                done.push((false, b3, coeff * sign));
            }
        }
        done
    }

    /// Push a dot vector sitting at the top of `prefix` down to the bottom;
    /// crossings of the prefix may be deleted along the way.  Returns
    /// (surviving prefix word, dots at bottom, coefficient).
    pub(crate) fn lift_through_prefix(
        &self,
        bottom: &Slots,
        prefix: &[u8],
        dots: &[u16],
    ) -> Vec<CorrTerm> {
        if dots.iter().all(|&d| d == 0) {
            return vec![(prefix.to_vec(), dots.to_vec(), 1)];
        }
        if prefix.is_empty() {
            return vec![(Vec::new(), dots.to_vec(), 1)];
        }
        let (head, gen) = prefix.split_at(prefix.len() - 1);
        let g = gen[0] as usize;
        let state = bottom.apply_word(head);
        let mut out = Vec::new();
        for (kept, d2, m2) in self.push_dots_through_gen(&state, g, dots) {
            for (mut w3, d3, m3) in self.lift_through_prefix(bottom, head, &d2) {
                if kept {
                    w3.push(g as u8);
                }
                out.push((w3, d3, m2 * m3));
            }
        }
        out
    }

    /// Rewrite a reduced word into one starting with the letter `c`, which
    /// must be a right descent of its matching.  Returns the principal word
    /// plus correction terms (word, bottom dots, coefficient), all equal to
    /// the input as algebra elements.
    fn make_bottom(&self, bottom: &Slots, word: &[u8], c: usize) -> (Vec<u8>, Vec<CorrTerm>) {
        debug_assert!(!word.is_empty());
        #[cfg(debug_assertions)]
        {
            let p = super::diagram::perm_of_word(bottom.len(), word);
            debug_assert!(p[c] > p[c + 1], "c must be a right descent");
        }
        let a = word[0] as usize;
        if a == c {
            return (word.to_vec(), Vec::new());
        }
        let v = &word[1..];
        let bottom_v = bottom.swap(a);
        if a.abs_diff(c) >= 2 {
            let (pv, corr_v) = self.make_bottom(&bottom_v, v, c);
            let mut principal = vec![c as u8, a as u8];
            principal.extend_from_slice(&pv[1..]);
            let mut corrections = Vec::new();
            for (w2, d2, m2) in corr_v {
                for (kept, d3, m3) in self.push_dots_through_gen(bottom, a, &d2) {
                    let mut w3 = if kept { vec![a as u8] } else { Vec::new() };
                    w3.extend_from_slice(&w2);
                    corrections.push((w3, d3, m2 * m3));
                }
            }
            (principal, corrections)
        } else {
            let (p1, corr1) = self.make_bottom(&bottom_v, v, c);
            let u1 = &p1[1..];
            let bottom_u = bottom_v.swap(c);
            let (p2, corr2) = self.make_bottom(&bottom_u, u1, a);
            let u2 = &p2[1..];
            let mut principal = vec![c as u8, a as u8, c as u8];
            principal.extend_from_slice(u2);
            let mut corrections: Vec<CorrTerm> = Vec::new();
            for (mono, m) in self.braid_correction(bottom, a, c) {
                corrections.push((u2.to_vec(), mono, m));
            }
            for (w2, d2, m2) in corr2 {
                // replaced u1 inside [a, c] ++ u1
                for (pw, d3, m3) in self.lift_through_prefix(bottom, &[a as u8, c as u8], &d2) {
                    let mut w3 = pw;
                    w3.extend_from_slice(&w2);
                    corrections.push((w3, d3, m2 * m3));
                }
            }
            for (w2, d2, m2) in corr1 {
                // replaced v inside [a] ++ v
                for (pw, d3, m3) in self.lift_through_prefix(bottom, &[a as u8], &d2) {
                    let mut w3 = pw;
                    w3.extend_from_slice(&w2);
                    corrections.push((w3, d3, m2 * m3));
                }
            }
            (principal, corrections)
        }
    }

    /// Mirror of [`Self::make_bottom`]: rewrite a reduced word to end with
    /// the letter `t`, a left descent of its matching.
    fn make_top(&self, bottom: &Slots, word: &[u8], t: usize) -> (Vec<u8>, Vec<CorrTerm>) {
        debug_assert!(!word.is_empty());
        #[cfg(debug_assertions)]
        {
            let p = super::diagram::perm_of_word(bottom.len(), word);
            let inv = super::diagram::inverse_perm(&p);
            debug_assert!(inv[t] > inv[t + 1], "t must be a left descent");
        }
        let len = word.len();
        let b = word[len - 1] as usize;
        if b == t {
            return (word.to_vec(), Vec::new());
        }
        let v = &word[..len - 1];
        if b.abs_diff(t) >= 2 {
            let (pv, corr_v) = self.make_top(bottom, v, t);
            let mut principal = pv[..pv.len() - 1].to_vec();
            principal.push(b as u8);
            principal.push(t as u8);
            let corrections = corr_v
                .into_iter()
                .map(|(mut w, d, m)| {
                    w.push(b as u8);
                    (w, d, m)
                })
                .collect();
            (principal, corrections)
        } else {
            let (p1, corr1) = self.make_top(bottom, v, t);
            let u1 = &p1[..p1.len() - 1];
            let (p2, corr2) = self.make_top(bottom, u1, b);
            let u2 = &p2[..p2.len() - 1];
            let mut principal = u2.to_vec();
            principal.extend([t as u8, b as u8, t as u8]);
            let mut corrections: Vec<CorrTerm> = Vec::new();
            let state = bottom.apply_word(u2);
            for (mono, m) in self.braid_correction(&state, b, t) {
                for (pw, d2, m2) in self.lift_through_prefix(bottom, u2, &mono) {
                    corrections.push((pw, d2, m * m2));
                }
            }
            for (mut w, d, m) in corr2 {
                // replaced u1 inside v ~ u1 ++ [t], and word ~ v ++ [b]
                w.push(t as u8);
                w.push(b as u8);
                corrections.push((w, d, m));
            }
            for (mut w, d, m) in corr1 {
                w.push(b as u8);
                corrections.push((w, d, m));
            }
            (principal, corrections)
        }
    }

    /// Accumulate `coeff * dots * word` into `out` after normalising.
    fn accumulate(&self, out: &mut NormMap, bottom: &Slots, word: &[u8], dots: &[u16], coeff: i128) {
        if coeff == 0 {
            return;
        }
        let sub = self.normalize_word(bottom, word);
        for ((p, d), m) in sub.iter() {
            let nd: Vec<u16> = d.iter().zip(dots).map(|(a, b)| a + b).collect();
            add_term(out, (p.clone(), nd), m * coeff);
        }
    }

    /// Degree of a word over a bottom slice: crossing degrees along the way.
    #[cfg(debug_assertions)]
    fn word_degree(&self, bottom: &Slots, word: &[u8]) -> i64 {
        let mut state = bottom.clone();
        let mut deg = 0;
        for &t in word {
            let t = t as usize;
            deg += super::diagram::crossing_degree(&self.cd, self.lambda, state.0[t], state.0[t + 1]);
            state = state.swap(t);
        }
        deg
    }

    /// Normal form of a dot-free word over `bottom`.
    pub fn normalize_word(&self, bottom: &Slots, word: &[u8]) -> Rc<NormMap> {
        let key = (bottom.clone(), word.to_vec());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        let result = self.normalize_word_inner(bottom, word);
        #[cfg(debug_assertions)]
        {
            let expect = self.word_degree(bottom, word);
            for ((perm, dots), _) in result.iter() {
                let got = super::diagram::diagram_degree(&self.cd, self.lambda, bottom, perm, dots);
                debug_assert_eq!(
                    got, expect,
                    "inhomogeneous rewrite: bottom={bottom:?} word={word:?} perm={perm:?} dots={dots:?}"
                );
            }
        }
        let rc = Rc::new(result);
        self.cache.borrow_mut().insert(key, rc.clone());
        rc
    }

    fn normalize_word_inner(&self, bottom: &Slots, word: &[u8]) -> NormMap {
        let n = bottom.len();
        let mut perm = identity_perm(n);
        let mut inv = identity_perm(n);
        for (k, &tu) in word.iter().enumerate() {
            let t = tu as usize;
            debug_assert!(t + 1 < n, "letter out of range");
            if inv[t] < inv[t + 1] {
                let (u1, u2) = (inv[t] as usize, inv[t + 1] as usize);
                perm[u1] = t as u8 + 1;
                perm[u2] = t as u8;
                inv.swap(t, t + 1);
                continue;
            }
            // prefix word[..k] is reduced, appending t repeats a crossing
            let prefix = &word[..k];
            let rest = &word[k + 1..];
            let mut out = NormMap::new();
            if prefix.is_empty() {
                unreachable!("a single letter is always reduced");
            }
            let (principal_u, corrections) = self.make_top(bottom, prefix, t);
            let u = &principal_u[..principal_u.len() - 1];
            let state_u = bottom.apply_word(u);
            for (mono, c0) in self.resolve_double(&state_u, t) {
                for (pv, dots, c1) in self.lift_through_prefix(bottom, u, &mono) {
                    let mut w2 = pv;
                    w2.extend_from_slice(rest);
                    self.accumulate(&mut out, bottom, &w2, &dots, c0 * c1);
                }
            }
            for (cw, cdots, cc) in corrections {
                let mut w2 = cw;
                w2.push(t as u8);
                w2.extend_from_slice(rest);
                self.accumulate(&mut out, bottom, &w2, &cdots, cc);
            }
            return out;
        }
        // reduced word
        let canon = canonical_word(&perm);
        if word == canon.as_slice() {
            let mut m = NormMap::new();
            m.insert((perm, vec![0u16; n]), 1);
            return m;
        }
        // peel the canonical first letter to the bottom
        let c = canon[0] as usize;
        let (principal, corrections) = self.make_bottom(bottom, word, c);
        let u = &principal[1..];
        let sub = self.normalize_word(&bottom.swap(c), u);
        let mut out = NormMap::new();
        for ((p2, d2), m2) in sub.iter() {
            for (kept, dots, m3) in self.push_dots_through_gen(bottom, c, d2) {
                let coeff = m2 * m3;
                if kept {
                    let mut full = p2.clone();
                    full.swap(c, c + 1);
                    let cf = canonical_word(&full);
                    let sub_canon = canonical_word(p2);
                    if cf.first() == Some(&(c as u8)) && cf[1..] == sub_canon[..] {
                        add_term(&mut out, (full, dots), coeff);
                    } else {
                        let mut w2 = vec![c as u8];
                        w2.extend_from_slice(&sub_canon);
                        self.accumulate(&mut out, bottom, &w2, &dots, coeff);
                    }
                } else {
                    let w2 = canonical_word(p2);
                    self.accumulate(&mut out, bottom, &w2, &dots, coeff);
                }
            }
        }
        for (w2, d2, m2) in corrections {
            self.accumulate(&mut out, bottom, &w2, &d2, m2);
        }
        out
    }
}
