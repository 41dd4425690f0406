//! Pressure functions on the root lattice, their slopes, RoCK detection,
//! and Scopes wall/chamber classification.
//!
//! A pressure assigns an exact rational to each simple root, normalised so
//! the values sum to `-1` (the value on `delta`).  Sign patterns on a finite
//! wall set of positive roots cut pressure space into Scopes chambers; the
//! steadying ideal is constant on each chamber.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::cartan::{is_weight_of, CartanDatum, RootClass, RootVec, Weight, WeightPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PressureError {
    NotNormalised,
    LengthMismatch,
    ZeroHeight,
    NonGeneric,
    NotDominant,
}

impl fmt::Display for PressureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PressureError::NotNormalised => write!(f, "pressure values must sum to -1"),
            PressureError::LengthMismatch => write!(f, "pressure length does not match e"),
            PressureError::ZeroHeight => write!(f, "slope needs positive height"),
            PressureError::NonGeneric => {
                write!(f, "pressure vanishes on a root where genericity is required")
            }
            PressureError::NotDominant => write!(f, "expected Lambda - alpha dominant"),
        }
    }
}

/// Exact rational pressure per simple root, with `chi(delta) = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pressure {
    pub values: Vec<BigRational>,
}

impl Pressure {
    pub fn new(values: Vec<BigRational>) -> Result<Self, PressureError> {
        let sum: BigRational = values.iter().cloned().sum();
        if sum != -BigRational::from_integer(1.into()) {
            return Err(PressureError::NotNormalised);
        }
        Ok(Pressure { values })
    }

    /// For internal use when normalisation is already guaranteed.
    pub(crate) fn new_unchecked(values: Vec<BigRational>) -> Self {
        debug_assert_eq!(
            values.iter().cloned().sum::<BigRational>(),
            -BigRational::from_integer(1.into())
        );
        Pressure { values }
    }

    pub fn e(&self) -> usize {
        self.values.len()
    }

    /// The uniform pressure `chi_0` with all values `-1/e`.
    pub fn uniform(e: usize) -> Self {
        let v = crate::rational(-1, e as i64);
        Pressure { values: (0..e).map(|_| v.clone()).collect() }
    }

    /// Linear extension to the root lattice.
    pub fn eval(&self, v: &RootVec) -> BigRational {
        let mut s = BigRational::zero();
        for (val, &c) in self.values.iter().zip(&v.coeffs) {
            if c != 0 {
                s += val * BigRational::from_integer(c.into());
            }
        }
        s
    }

    pub fn sign(&self, v: &RootVec) -> Ordering {
        self.eval(v).cmp(&BigRational::zero())
    }

    /// `chi(v)/h(v)`; rejects zero height.
    pub fn slope(&self, v: &RootVec) -> Result<BigRational, PressureError> {
        let h = v.height();
        if h <= 0 {
            return Err(PressureError::ZeroHeight);
        }
        Ok(self.eval(v) / BigRational::from_integer(h.into()))
    }

    /// Generic on every positive root bounded by `alpha`.
    pub fn is_generic_below(&self, cd: &CartanDatum, alpha: &RootVec) -> bool {
        cd.positive_roots_below(alpha).iter().all(|b| !self.eval(b).is_zero())
    }
}

/// Sign pattern of a pressure on the Scopes wall set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberSignature {
    /// Wall root and the sign of the pressure there.
    pub signs: BTreeMap<RootVec, Ordering>,
}

impl ChamberSignature {
    /// Generic iff no wall value vanishes.
    pub fn is_generic(&self) -> bool {
        self.signs.values().all(|&s| s != Ordering::Equal)
    }
}

/// RoCK test: for every positive real root `beta` and `m >= 0` with
/// `beta + m delta <= alpha` componentwise, the signs of `chi(beta)` and
/// `chi(beta + m delta)` agree.
pub fn is_rock(cd: &CartanDatum, chi: &Pressure, alpha: &RootVec) -> bool {
    debug_assert!(alpha.is_nonnegative());
    let delta = cd.delta();
    for beta in cd.positive_roots_below(alpha) {
        if cd.classify(&beta) != RootClass::Real {
            continue;
        }
        let base_sign = chi.sign(&beta);
        let mut shifted = beta.add(&delta);
        while shifted.leq_componentwise(alpha) {
            if chi.sign(&shifted) != base_sign {
                return false;
            }
            shifted = shifted.add(&delta);
        }
    }
    true
}

/// The wall set `N_{Lambda - alpha}`: positive roots `beta` such that
/// `Lambda - alpha + beta` is a weight of the irreducible with highest
/// weight `Lambda`.  Requires `Lambda - alpha` dominant.
///
/// Enumeration is capped at height `h(alpha) + e * level`; the cap is
/// checked by verifying one extra height level adds nothing.
pub fn scopes_walls(
    cd: &CartanDatum,
    lambda: &Weight,
    alpha: &RootVec,
) -> Result<Vec<RootVec>, PressureError> {
    let pt = WeightPoint::new(lambda.clone(), alpha.clone());
    if !pt.is_dominant(cd) {
        return Err(PressureError::NotDominant);
    }
    let cap = alpha.height() + (cd.e as i64) * lambda.level();
    let walls = walls_up_to(cd, lambda, alpha, cap);
    let extended = walls_up_to(cd, lambda, alpha, cap + 1);
    assert_eq!(walls, extended, "wall enumeration bound must be stable");
    Ok(walls)
}

fn walls_up_to(cd: &CartanDatum, lambda: &Weight, alpha: &RootVec, cap: i64) -> Vec<RootVec> {
    let mut out = Vec::new();
    for beta in cd.positive_roots_up_to(cap) {
        let mu = WeightPoint::new(lambda.clone(), alpha.sub(&beta));
        if is_weight_of(cd, lambda, &mu).unwrap_or(false) {
            out.push(beta);
        }
    }
    out
}

/// Sign of the pressure on each Scopes wall.
pub fn chamber_signature(
    cd: &CartanDatum,
    chi: &Pressure,
    lambda: &Weight,
    alpha: &RootVec,
) -> Result<ChamberSignature, PressureError> {
    let walls = scopes_walls(cd, lambda, alpha)?;
    let signs = walls.into_iter().map(|b| {
        let s = chi.sign(&b);
        (b, s)
    });
    Ok(ChamberSignature { signs: signs.collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;
    use crate::weyl::{act_pressure, WeylWord};
    use alloc::vec;

    fn e2() -> CartanDatum {
        CartanDatum::affine(2).unwrap()
    }

    #[test]
    fn constructor_rejects_unnormalised() {
        assert!(Pressure::new(vec![rational(1, 2), rational(1, 2)]).is_err());
        assert!(Pressure::new(vec![rational(-1, 2), rational(-1, 2)]).is_ok());
    }

    #[test]
    fn eval_examples() {
        let cd = e2();
        let chi0 = Pressure::uniform(2);
        let v = RootVec::new(vec![1, 2]);
        assert_eq!(chi0.eval(&v), rational(-3, 2));
        let s1 = act_pressure(&cd, &WeylWord::new(vec![1]), &chi0);
        assert_eq!(s1.eval(&v), rational(-1, 2));
        let s1s0 = act_pressure(&cd, &WeylWord::new(vec![1, 0]), &chi0);
        assert_eq!(s1s0.eval(&v), rational(1, 2));
    }

    #[test]
    fn slope_examples() {
        let cd = e2();
        let chi0 = Pressure::uniform(2);
        assert_eq!(chi0.slope(&cd.delta()).unwrap(), rational(-1, 2));
        let rock = crate::rock::chi_rock(2, 2).unwrap();
        assert_eq!(rock.slope(&cd.simple_root(1)).unwrap(), rational(-3, 2));
        assert_eq!(rock.slope(&cd.simple_root(0)).unwrap(), rational(1, 2));
        assert!(chi0.slope(&RootVec::zero(2)).is_err());
    }

    #[test]
    fn is_rock_examples() {
        let cd = e2();
        let chi0 = Pressure::uniform(2);
        // all values negative: every sign pair agrees
        assert!(is_rock(&cd, &chi0, &cd.delta()));
        // s_0 chi_0 flips sign between alpha_0 and alpha_0 + delta inside 2 delta
        let s0 = act_pressure(&cd, &WeylWord::new(vec![0]), &chi0);
        assert!(!is_rock(&cd, &s0, &RootVec::new(vec![2, 2])));
        assert!(is_rock(&cd, &s0, &cd.delta()));
    }

    #[test]
    fn scopes_walls_examples() {
        let cd = e2();
        let l0 = Weight::fundamental(2, 0);
        // alpha = 0: no beta with Lambda_0 + beta a weight
        assert!(scopes_walls(&cd, &l0, &RootVec::zero(2)).unwrap().is_empty());
        // alpha = delta: walls are alpha_1 and delta
        let walls = scopes_walls(&cd, &l0, &cd.delta()).unwrap();
        assert_eq!(walls, vec![RootVec::new(vec![0, 1]), RootVec::new(vec![1, 1])]);
        // alpha = 2 delta: the wall hyperplanes on the finite root are
        // chi(alpha_1) = 1, 0, -1, given by alpha_1, alpha_1 + delta, alpha_0
        let walls = scopes_walls(&cd, &l0, &cd.delta().scale(2)).unwrap();
        assert!(walls.contains(&RootVec::new(vec![0, 1])));
        assert!(walls.contains(&RootVec::new(vec![1, 2])));
        assert!(walls.contains(&RootVec::new(vec![1, 0])));
        assert!(!walls.contains(&RootVec::new(vec![2, 1])));
    }

    #[test]
    fn chamber_signature_examples() {
        let cd = e2();
        let l0 = Weight::fundamental(2, 0);
        let two_delta = cd.delta().scale(2);
        let chi0 = Pressure::uniform(2);
        let sig = chamber_signature(&cd, &chi0, &l0, &two_delta).unwrap();
        assert!(sig.is_generic());
        assert!(sig.signs.values().all(|&s| s == Ordering::Less));
        // generic perturbation within the chamber keeps the signature
        let chi = Pressure::new(vec![rational(-2, 5), rational(-3, 5)]).unwrap();
        let sig2 = chamber_signature(&cd, &chi, &l0, &two_delta).unwrap();
        assert_eq!(sig, sig2);
        // the paper-style chart rows s_1 chi_0 and s_1 s_0 chi_0 live in
        // different chambers
        let s1 = act_pressure(&cd, &WeylWord::new(vec![1]), &chi0);
        let s1s0 = act_pressure(&cd, &WeylWord::new(vec![1, 0]), &chi0);
        let a = chamber_signature(&cd, &s1, &l0, &two_delta).unwrap();
        let b = chamber_signature(&cd, &s1s0, &l0, &two_delta).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn rock_chamber_membership() {
        // chi_rock satisfies chi(alpha_i) < 1 - d for i != 0
        for e in [2usize, 3] {
            for d in [1i64, 2, 3] {
                let chi = crate::rock::chi_rock(e, d).unwrap();
                let bound = rational(1 - d, 1);
                for i in 1..e {
                    assert!(chi.values[i] < bound);
                }
            }
        }
    }
}
