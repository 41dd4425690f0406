//! Affine Weyl group elements as words in the simple reflections, with the
//! three actions used downstream: the standard action on the root lattice,
//! the dual action on pressures, and the dotted action on a root relative
//! to a dominant weight.
//!
//! Words are stored with the leftmost letter applied last, matching the
//! usual notation `s_1 s_0` for "first `s_0`, then `s_1`".

use alloc::vec::Vec;
use core::fmt;

use crate::cartan::{CartanDatum, CartanError, RootVec, Weight, WeightPoint};

/// A word in the simple reflections `s_0, ..., s_{e-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylError {
    LetterOutOfRange,
    NotDominant,
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::LetterOutOfRange => write!(f, "reflection index out of range"),
            WeylError::NotDominant => write!(f, "expected a dominant weight point"),
        }
    }
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord { letters: Vec::new() }
    }

    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        WeylWord { letters }
    }

    pub fn compose(&self, right: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&right.letters);
        WeylWord { letters }
    }

    fn check(&self, cd: &CartanDatum) -> Result<(), WeylError> {
        if self.letters.iter().any(|&i| i >= cd.e) {
            return Err(WeylError::LetterOutOfRange);
        }
        Ok(())
    }
}

fn reflect_root(cd: &CartanDatum, i: usize, v: &RootVec) -> RootVec {
    // s_i(v) = v - <v, alpha_i^vee> alpha_i
    let mut pairing = 0;
    for (j, &c) in v.coeffs.iter().enumerate() {
        pairing += c * cd.cartan_entry(i, j);
    }
    let mut out = v.clone();
    out.coeffs[i] -= pairing;
    out
}

/// Standard action on the root lattice, rightmost letter first.
pub fn act_root(cd: &CartanDatum, w: &WeylWord, v: &RootVec) -> RootVec {
    debug_assert!(w.check(cd).is_ok());
    let mut cur = v.clone();
    for &i in w.letters.iter().rev() {
        cur = reflect_root(cd, i, &cur);
    }
    cur
}

/// Dual action on pressures: `(w . chi)(v) = chi(w^{-1} v)`.
pub fn act_pressure(
    cd: &CartanDatum,
    w: &WeylWord,
    chi: &crate::pressure::Pressure,
) -> crate::pressure::Pressure {
    let inv = w.inverse();
    let values = (0..cd.e)
        .map(|j| chi.eval(&act_root(cd, &inv, &cd.simple_root(j))))
        .collect();
    // delta is Weyl invariant, so the normalisation is preserved
    crate::pressure::Pressure::new_unchecked(values)
}

/// Dotted action `w . alpha = w(alpha - Lambda) + Lambda`, which satisfies
/// `Lambda - result = w(Lambda - alpha)`.
pub fn act_dotted(cd: &CartanDatum, w: &WeylWord, lambda: &Weight, alpha: &RootVec) -> RootVec {
    // act on Lambda - alpha as a weight point and read the root part back
    let mut pt = WeightPoint::new(lambda.clone(), alpha.clone());
    for &i in w.letters.iter().rev() {
        pt = pt.reflect(cd, i);
    }
    pt.minus
}

/// Length via the descent recursion: `s_i w` is shorter iff `w^{-1}(alpha_i)`
/// is a negative root.
pub fn length(cd: &CartanDatum, w: &WeylWord) -> usize {
    reduce(cd, w).len()
}

fn is_identity(cd: &CartanDatum, letters: &[usize]) -> bool {
    let w = WeylWord::new(letters.to_vec());
    (0..cd.e).all(|j| act_root(cd, &w, &cd.simple_root(j)) == cd.simple_root(j))
}

fn same_element(cd: &CartanDatum, a: &[usize], b: &[usize]) -> bool {
    let wa = WeylWord::new(a.to_vec());
    let wb = WeylWord::new(b.to_vec());
    (0..cd.e).all(|j| act_root(cd, &wa, &cd.simple_root(j)) == act_root(cd, &wb, &cd.simple_root(j)))
}

/// A reduced word for the same group element.
///
/// Letters are folded in one at a time; when a letter drops the length, the
/// exchange property guarantees some deletion of the current reduced word
/// realises the product, found by direct search.
pub fn reduce(cd: &CartanDatum, w: &WeylWord) -> WeylWord {
    let mut red: Vec<usize> = Vec::new();
    // fold left to right, multiplying on the right
    for &i in w.letters.iter() {
        let mut cand = red.clone();
        cand.push(i);
        // l(u s_i) > l(u) iff u(alpha_i) is a positive root
        let red_w = WeylWord::new(red.clone());
        let img = act_root(cd, &red_w, &cd.simple_root(i));
        if img.is_nonnegative() {
            red = cand;
        } else {
            // exchange: deleting one letter of red gives red * s_i
            let mut found = false;
            for k in 0..red.len() {
                let mut shorter: Vec<usize> = red.clone();
                shorter.remove(k);
                if same_element(cd, &shorter, &cand) {
                    red = shorter;
                    found = true;
                    break;
                }
            }
            debug_assert!(found, "exchange property must apply");
        }
    }
    WeylWord::new(red)
}

/// Shortest representative of the coset `w W_alpha`, where `W_alpha` is the
/// stabiliser of `Lambda - alpha`, generated by the `s_i` with
/// `<Lambda - alpha, alpha_i^vee> = 0`.  Requires `Lambda - alpha` dominant.
pub fn min_coset_rep(
    cd: &CartanDatum,
    w: &WeylWord,
    lambda: &Weight,
    alpha: &RootVec,
) -> Result<WeylWord, WeylError> {
    let pt = WeightPoint::new(lambda.clone(), alpha.clone());
    if !pt.is_dominant(cd) {
        return Err(WeylError::NotDominant);
    }
    let stab: Vec<usize> = (0..cd.e).filter(|&i| pt.pair_simple_coroot(cd, i) == 0).collect();
    let mut cur = reduce(cd, w);
    'outer: loop {
        for &i in &stab {
            // l(w s_i) < l(w) iff w(alpha_i) < 0
            if act_root(cd, &cur, &cd.simple_root(i)).is_nonpositive() {
                let mut letters = cur.letters.clone();
                letters.push(i);
                cur = reduce(cd, &WeylWord::new(letters));
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}

/// Stabiliser generators of `Lambda - alpha` among the simple reflections.
pub fn stabiliser_generators(cd: &CartanDatum, lambda: &Weight, alpha: &RootVec) -> Result<Vec<usize>, CartanError> {
    let pt = WeightPoint::new(lambda.clone(), alpha.clone());
    if !pt.is_dominant(cd) {
        return Err(CartanError::NotDominant);
    }
    Ok((0..cd.e).filter(|&i| pt.pair_simple_coroot(cd, i) == 0).collect())
}

pub fn is_identity_word(cd: &CartanDatum, w: &WeylWord) -> bool {
    is_identity(cd, &w.letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pressure::Pressure;
    use crate::rational;
    use alloc::vec;

    fn e2() -> CartanDatum {
        CartanDatum::affine(2).unwrap()
    }

    fn chi0(e: usize) -> Pressure {
        Pressure::new((0..e).map(|_| rational(-1, e as i64)).collect()).unwrap()
    }

    #[test]
    fn act_root_examples() {
        let cd = e2();
        let a0 = cd.simple_root(0);
        let a1 = cd.simple_root(1);
        assert_eq!(act_root(&cd, &WeylWord::identity(), &a0), a0);
        // s_0(alpha_1) = alpha_1 + 2 alpha_0 at e = 2
        assert_eq!(act_root(&cd, &WeylWord::new(vec![0]), &a1), RootVec::new(vec![2, 1]));
        // delta is invariant
        for w in [vec![0], vec![1, 0], vec![0, 1, 0, 1]] {
            assert_eq!(act_root(&cd, &WeylWord::new(w), &cd.delta()), cd.delta());
        }
    }

    #[test]
    fn act_pressure_examples() {
        let cd = e2();
        let s0 = act_pressure(&cd, &WeylWord::new(vec![0]), &chi0(2));
        assert_eq!(s0.values, vec![rational(1, 2), rational(-3, 2)]);
        let s1s0 = act_pressure(&cd, &WeylWord::new(vec![1, 0]), &chi0(2));
        assert_eq!(s1s0.values, vec![rational(-5, 2), rational(3, 2)]);
        // chi(delta) = -1 for every w
        for w in [vec![0], vec![1], vec![0, 1, 0]] {
            let chi = act_pressure(&cd, &WeylWord::new(w), &chi0(2));
            assert_eq!(chi.eval(&cd.delta()), rational(-1, 1));
        }
    }

    #[test]
    fn act_dotted_examples() {
        let cd = e2();
        let l0 = Weight::fundamental(2, 0);
        let two_delta = RootVec::new(vec![2, 2]);
        assert_eq!(
            act_dotted(&cd, &WeylWord::new(vec![0]), &l0, &two_delta),
            RootVec::new(vec![3, 2])
        );
        assert_eq!(
            act_dotted(&cd, &WeylWord::new(vec![1]), &l0, &two_delta),
            two_delta
        );
        assert_eq!(
            act_dotted(&cd, &WeylWord::new(vec![1, 0]), &l0, &two_delta),
            RootVec::new(vec![3, 4])
        );
    }

    #[test]
    fn dotted_action_composes() {
        let cd = CartanDatum::affine(3).unwrap();
        let l0 = Weight::fundamental(3, 0);
        let alpha = RootVec::new(vec![2, 1, 1]);
        let w1 = WeylWord::new(vec![0, 2]);
        let w2 = WeylWord::new(vec![1, 0]);
        let lhs = act_dotted(&cd, &w1, &l0, &act_dotted(&cd, &w2, &l0, &alpha));
        let rhs = act_dotted(&cd, &w1.compose(&w2), &l0, &alpha);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduce_examples() {
        let cd = e2();
        assert_eq!(reduce(&cd, &WeylWord::new(vec![0, 0])), WeylWord::identity());
        // s_0 s_1 s_0 s_1 is reduced of length 4 at e = 2
        let w = WeylWord::new(vec![0, 1, 0, 1]);
        assert_eq!(reduce(&cd, &w).len(), 4);
        assert_eq!(reduce(&cd, &WeylWord::new(vec![1, 1, 0])), WeylWord::new(vec![0]));
    }

    #[test]
    fn reduce_is_idempotent_and_preserves_element() {
        let cd = CartanDatum::affine(3).unwrap();
        let words = [
            vec![0, 1, 2, 1, 0, 1],
            vec![2, 2, 1, 0, 0, 1],
            vec![0, 1, 0, 1, 0, 1],
            vec![1, 2, 1, 2, 1, 2],
        ];
        for letters in words {
            let w = WeylWord::new(letters);
            let r = reduce(&cd, &w);
            assert!(same_element(&cd, &w.letters, &r.letters));
            assert_eq!(reduce(&cd, &r), r);
            assert!(r.len() <= w.len());
        }
    }

    #[test]
    fn reduce_matches_brute_force_length() {
        // brute force: shortest word representing the same element, found by
        // breadth-first search over products of generators
        use alloc::collections::BTreeMap;
        for e in [2usize, 3] {
            let cd = CartanDatum::affine(e).unwrap();
            // keys: images of all simple roots under the element
            let key = |letters: &[usize]| -> Vec<RootVec> {
                let w = WeylWord::new(letters.to_vec());
                (0..e).map(|j| act_root(&cd, &w, &cd.simple_root(j))).collect()
            };
            let mut dist: BTreeMap<Vec<RootVec>, usize> = BTreeMap::new();
            let mut frontier = vec![Vec::<usize>::new()];
            dist.insert(key(&[]), 0);
            for d in 1..=6usize {
                let mut next = Vec::new();
                for word in &frontier {
                    for i in 0..e {
                        let mut w2 = word.clone();
                        w2.push(i);
                        let k = key(&w2);
                        if !dist.contains_key(&k) {
                            dist.insert(k, d);
                            next.push(w2);
                        }
                    }
                }
                frontier = next;
            }
            // all words of length <= 4 reduce to the BFS distance
            let mut words = vec![Vec::<usize>::new()];
            for _ in 0..4 {
                let mut next = Vec::new();
                for w in &words {
                    for i in 0..e {
                        let mut w2 = w.clone();
                        w2.push(i);
                        next.push(w2);
                    }
                }
                words.extend(next.clone());
                words = words.into_iter().collect();
            }
            for w in words.iter().filter(|w| w.len() <= 4) {
                let r = reduce(&cd, &WeylWord::new(w.clone()));
                let k = key(w);
                assert_eq!(r.len(), *dist.get(&k).expect("BFS depth covers length"), "{w:?}");
            }
        }
    }

    #[test]
    fn min_coset_rep_examples() {
        let cd = e2();
        let l0 = Weight::fundamental(2, 0);
        let two_delta = RootVec::new(vec![2, 2]);
        // identity stays identity
        let r = min_coset_rep(&cd, &WeylWord::identity(), &l0, &two_delta).unwrap();
        assert!(r.is_empty());
        // s_0 s_1 collapses to s_0 because s_1 stabilises Lambda_0 - 2 delta
        let r = min_coset_rep(&cd, &WeylWord::new(vec![0, 1]), &l0, &two_delta).unwrap();
        assert_eq!(r, WeylWord::new(vec![0]));
        // dotted action unchanged by passing to the representative
        let orig = act_dotted(&cd, &WeylWord::new(vec![0, 1]), &l0, &two_delta);
        let repd = act_dotted(&cd, &r, &l0, &two_delta);
        assert_eq!(orig, repd);
        // stabiliser of d delta is the finite Weyl group
        for e in [2usize, 3, 4] {
            let cd = CartanDatum::affine(e).unwrap();
            let l0 = Weight::fundamental(e, 0);
            let dd = cd.delta().scale(3);
            let gens = stabiliser_generators(&cd, &l0, &dd).unwrap();
            assert_eq!(gens, (1..e).collect::<Vec<_>>());
        }
    }

    #[test]
    fn dual_action_identity() {
        let cd = CartanDatum::affine(3).unwrap();
        let chi = chi0(3);
        let vs = [RootVec::new(vec![1, 0, 2]), RootVec::new(vec![0, 1, 1])];
        for w in [vec![0], vec![2, 1], vec![0, 1, 2, 1]] {
            let w = WeylWord::new(w);
            let wc = act_pressure(&cd, &w, &chi);
            for v in &vs {
                assert_eq!(wc.eval(&act_root(&cd, &w, v)), chi.eval(v));
            }
        }
    }
}
