//! Idempotent tests for the steadying ideal: the direct prefix-sign escape
//! test, the root-reduced generator list, and the three-state classification
//! of straight-line idempotents.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Zero;

use crate::cartan::{CartanDatum, RootVec, Weight};
use crate::combinatorics::{enumerate_idempotents, Idem, RedPlacement};
use crate::pressure::{Pressure, PressureError};

/// True iff the idempotent is one of the ideal's defining generators: some
/// left outside-in prefix has negative pressure, or some right outside-in
/// prefix has positive pressure, so a group of strands escapes.
pub fn is_generator_zero(cd: &CartanDatum, chi: &Pressure, idem: &Idem) -> bool {
    let _ = cd;
    let mut acc = num_rational::BigRational::zero();
    for &l in &idem.left {
        acc += &chi.values[l];
        if acc < num_rational::BigRational::zero() {
            return true;
        }
    }
    let mut acc = num_rational::BigRational::zero();
    for &r in &idem.right {
        acc += &chi.values[r];
        if acc > num_rational::BigRational::zero() {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    LeftEscaping,
    RightEscaping,
}

/// The root-reduced generator description of the ideal: every positive root
/// bounded by `alpha` tagged by the side on which it escapes.  Imaginary
/// roots always escape left since `chi(n delta) = -n`.  Rejects pressures
/// vanishing on a root in range.
pub fn root_generators(
    cd: &CartanDatum,
    chi: &Pressure,
    alpha: &RootVec,
) -> Result<Vec<(Side, RootVec)>, PressureError> {
    let mut out = Vec::new();
    for beta in cd.positive_roots_below(alpha) {
        match chi.sign(&beta) {
            Ordering::Less => out.push((Side::LeftEscaping, beta)),
            Ordering::Greater => out.push((Side::RightEscaping, beta)),
            Ordering::Equal => return Err(PressureError::NonGeneric),
        }
    }
    Ok(out)
}

/// Classification outcome for one idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdemStatus {
    /// Killed by the escape test itself.
    GeneratorZero,
    /// Cleared the escape test and was confirmed nonzero exactly.
    Survivor,
    /// Cleared the escape test; exact confirmation was not requested.
    EngineRequired,
    /// Cleared the escape test but lies in the ideal anyway.
    ExactZero,
}

#[derive(Debug, Clone)]
pub struct IdemClassification {
    pub idem: Idem,
    pub status: IdemStatus,
}

/// Classify every straight-line idempotent of the block.  `confirm`, when
/// given, decides ideal membership exactly for idempotents the escape test
/// does not settle.
pub fn classify_idempotents(
    cd: &CartanDatum,
    chi: &Pressure,
    lambda: &Weight,
    alpha: &RootVec,
    mut confirm: Option<&mut dyn FnMut(&Idem) -> bool>,
) -> Result<Vec<IdemClassification>, PressureError> {
    if !chi.is_generic_below(cd, alpha) {
        return Err(PressureError::NonGeneric);
    }
    let idems = enumerate_idempotents(cd, lambda, alpha, RedPlacement::Anywhere)
        .map_err(|_| PressureError::NotDominant)?;
    let mut out = Vec::with_capacity(idems.len());
    for idem in idems {
        let status = if is_generator_zero(cd, chi, &idem) {
            IdemStatus::GeneratorZero
        } else {
            match confirm.as_mut() {
                None => IdemStatus::EngineRequired,
                Some(f) => {
                    if f(&idem) {
                        IdemStatus::ExactZero
                    } else {
                        IdemStatus::Survivor
                    }
                }
            }
        };
        out.push(IdemClassification { idem, status });
    }
    Ok(out)
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
    fn generator_zero_examples() {
        let cd = e2();
        let chi0 = Pressure::uniform(2);
        // any black strand left of the red dies under all-negative pressure
        assert!(is_generator_zero(&cd, &chi0, &Idem::from_word_red(&[0, 1, 0, 1], 1)));
        assert!(!is_generator_zero(&cd, &chi0, &Idem::from_word_red(&[0, 1, 0, 1], 0)));
        // s_0 chi_0: (red | 0,0,1,1) clears the escape test
        let s0 = act_pressure(&cd, &WeylWord::new(vec![0]), &chi0);
        assert!(!is_generator_zero(&cd, &s0, &Idem::from_word_red(&[0, 0, 1, 1], 0)));
        // s_1 s_0 chi_0: (red | 0,1,1,0) dies because chi(alpha_0 + 2 alpha_1) > 0
        let s1s0 = act_pressure(&cd, &WeylWord::new(vec![1, 0]), &chi0);
        assert!(is_generator_zero(&cd, &s1s0, &Idem::from_word_red(&[0, 1, 1, 0], 0)));
    }

    #[test]
    fn root_generators_examples() {
        let cd = e2();
        let two_delta = RootVec::new(vec![2, 2]);
        let chi0 = Pressure::uniform(2);
        let gens = root_generators(&cd, &chi0, &two_delta).unwrap();
        assert!(gens.iter().all(|(side, _)| *side == Side::LeftEscaping));
        assert_eq!(gens.len(), cd.positive_roots_below(&two_delta).len());

        let s0 = act_pressure(&cd, &WeylWord::new(vec![0]), &chi0);
        let gens = root_generators(&cd, &s0, &two_delta).unwrap();
        let right: Vec<_> = gens
            .iter()
            .filter(|(s, _)| *s == Side::RightEscaping)
            .map(|(_, b)| b.clone())
            .collect();
        assert_eq!(right, vec![RootVec::new(vec![1, 0])]);
        let left: Vec<_> = gens
            .iter()
            .filter(|(s, _)| *s == Side::LeftEscaping)
            .map(|(_, b)| b.clone())
            .collect();
        for b in [
            RootVec::new(vec![0, 1]),
            RootVec::new(vec![2, 1]),
            RootVec::new(vec![1, 2]),
            RootVec::new(vec![1, 1]),
            RootVec::new(vec![2, 2]),
        ] {
            assert!(left.contains(&b), "{b:?}");
        }

        // a wall pressure is rejected
        let wall = Pressure::new(vec![rational(0, 1), rational(-1, 1)]).unwrap();
        assert!(root_generators(&cd, &wall, &two_delta).is_err());
    }

    #[test]
    fn equal_signatures_give_equal_root_generators() {
        let cd = e2();
        let l0 = Weight::fundamental(2, 0);
        let two_delta = RootVec::new(vec![2, 2]);
        // two pressures in the cyclotomic chamber
        let a = Pressure::uniform(2);
        let b = Pressure::new(vec![rational(-2, 5), rational(-3, 5)]).unwrap();
        let sa = crate::pressure::chamber_signature(&cd, &a, &l0, &two_delta).unwrap();
        let sb = crate::pressure::chamber_signature(&cd, &b, &l0, &two_delta).unwrap();
        assert_eq!(sa, sb);
        assert_eq!(
            root_generators(&cd, &a, &two_delta).unwrap(),
            root_generators(&cd, &b, &two_delta).unwrap()
        );
    }

    #[test]
    fn classify_without_engine_marks_candidates() {
        let cd = e2();
        let chi0 = Pressure::uniform(2);
        let l0 = Weight::fundamental(2, 0);
        let alpha = RootVec::new(vec![2, 2]);
        let table = classify_idempotents(&cd, &chi0, &l0, &alpha, None).unwrap();
        assert_eq!(table.len(), 30);
        let candidates: Vec<_> = table
            .iter()
            .filter(|c| c.status == IdemStatus::EngineRequired)
            .map(|c| c.idem.clone())
            .collect();
        // exactly the six all-right idempotents clear the escape test at chi_0
        assert_eq!(candidates.len(), 6);
        assert!(candidates.iter().all(|i| i.left.is_empty()));
    }
}
