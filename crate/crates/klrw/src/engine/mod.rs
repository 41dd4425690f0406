//! Exact computation in the diagram algebra of a block: basis diagrams,
//! products in normal form, graded ideal slices, idempotent membership,
//! graded dimensions of steadied quotients and truncations, and semisimple
//! quotient analysis over the rationals.

pub mod basis;
pub mod diagram;
pub mod ideal;
pub mod linalg;
pub mod rewrite;
pub mod scalar;
pub mod semisimple;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::{CartanDatum, Weight};
use crate::combinatorics::Idem;

use diagram::{apply_perm, canonical_word, diagram_degree, identity_perm, Perm, Slots};
use rewrite::Rewriter;
use scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    LevelNotOne,
    IdempotentMismatch,
    NonGenericPressure,
    ContentMismatch,
    IncompleteDimensions,
    UnsupportedRadical,
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::LevelNotOne => write!(f, "algebra builds require a level-one weight"),
            EngineError::IdempotentMismatch => {
                write!(f, "top of the first factor differs from bottom of the second")
            }
            EngineError::NonGenericPressure => {
                write!(f, "pressure vanishes on a root bounded by the block content")
            }
            EngineError::ContentMismatch => write!(f, "slot contents do not match the block"),
            EngineError::IncompleteDimensions => {
                write!(f, "graded dimensions not confirmed complete below the cap")
            }
            EngineError::UnsupportedRadical => {
                write!(f, "prime-field radical implemented for nonnegative gradings with commutative degree-zero part")
            }
        }
    }
}

/// A basis diagram: bottom slice, label-preserving matching (realised by its
/// canonical reduced word) and dot powers on the bottom slots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    pub bottom: Slots,
    pub perm: Perm,
    pub dots: Vec<u16>,
}

impl Diagram {
    pub fn idem(slots: Slots) -> Self {
        let n = slots.len();
        Diagram { perm: identity_perm(n), dots: vec![0; n], bottom: slots }
    }

    pub fn top(&self) -> Slots {
        apply_perm(&self.bottom, &self.perm)
    }

    /// Single dot on a bottom slot.
    pub fn dot(slots: Slots, slot: usize) -> Self {
        let mut d = Diagram::idem(slots);
        d.dots[slot] += 1;
        d
    }

    /// Single crossing of adjacent slots.
    pub fn crossing(slots: Slots, t: usize) -> Self {
        let n = slots.len();
        let mut perm = identity_perm(n);
        perm.swap(t, t + 1);
        Diagram { perm, dots: vec![0; n], bottom: slots }
    }
}

/// Sparse scalar combination of basis diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element<F: Field> {
    pub terms: BTreeMap<Diagram, F::Elem>,
}

impl<F: Field> Element<F> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_diagram(field: &F, d: Diagram) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(d, field.one());
        Element { terms }
    }

    pub fn add_assign(&mut self, field: &F, other: &Element<F>) {
        for (d, c) in &other.terms {
            let entry = self.terms.entry(d.clone()).or_insert_with(|| field.zero());
            *entry = field.add(entry, c);
        }
        self.terms.retain(|_, c| !field.is_zero(c));
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Element<F> {
        if field.is_zero(c) {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(d, x)| (d.clone(), field.mul(x, c))).collect(),
        }
    }
}

/// The ambient algebra of one `(e, Lambda)` pair: relations and rewriting
/// caches shared by all blocks.
pub struct Algebra<F: Field> {
    pub cd: CartanDatum,
    /// Level-one fundamental index; `None` for the red-free algebra used by
    /// the cross-check oracles.
    pub lambda: Option<usize>,
    pub field: F,
    rewriter: Rewriter,
    product_cache: core::cell::RefCell<
        BTreeMap<(Slots, diagram::Perm, Vec<u16>, diagram::Perm), alloc::rc::Rc<Vec<(Diagram, i128)>>>,
    >,
}

impl<F: Field> Algebra<F> {
    pub fn new(cd: CartanDatum, lambda: &Weight, field: F) -> Result<Self, EngineError> {
        let idx = lambda.level_one_index().ok_or(EngineError::LevelNotOne)?;
        Ok(Algebra {
            cd,
            lambda: Some(idx),
            field,
            rewriter: Rewriter::new(cd, Some(idx)),
            product_cache: core::cell::RefCell::new(BTreeMap::new()),
        })
    }

    /// Red-free variant (the plain diagram algebra on black strands).
    pub fn red_free(cd: CartanDatum, field: F) -> Self {
        Algebra {
            cd,
            lambda: None,
            field,
            rewriter: Rewriter::new(cd, None),
            product_cache: core::cell::RefCell::new(BTreeMap::new()),
        }
    }

    pub fn degree(&self, d: &Diagram) -> i64 {
        diagram_degree(&self.cd, self.lambda, &d.bottom, &d.perm, &d.dots)
    }

    pub fn idem_element(&self, idem: &Idem) -> Element<F> {
        Element::from_diagram(&self.field, Diagram::idem(Slots::from_idem(idem)))
    }

    /// Stack `y` on top of `x`; `None` when the slices do not meet.  The
    /// bottom dots of `x` pass through untouched, so the cache is keyed on
    /// everything else.
    pub fn compose_diagrams(&self, x: &Diagram, y: &Diagram) -> Option<Vec<(Diagram, i128)>> {
        if x.top() != y.bottom {
            return None;
        }
        let key = (x.bottom.clone(), x.perm.clone(), y.dots.clone(), y.perm.clone());
        let cached = self.product_cache.borrow().get(&key).cloned();
        let base = match cached {
            Some(hit) => hit,
            None => {
                let computed =
                    alloc::rc::Rc::new(self.compose_dotless(&x.bottom, &x.perm, &y.dots, &y.perm));
                self.product_cache.borrow_mut().insert(key, computed.clone());
                computed
            }
        };
        let out: Vec<(Diagram, i128)> = if x.dots.iter().all(|&d| d == 0) {
            base.as_ref().clone()
        } else {
            base.iter()
                .map(|(d, m)| {
                    let dots: Vec<u16> =
                        d.dots.iter().zip(&x.dots).map(|(a, b)| a + b).collect();
                    (Diagram { bottom: d.bottom.clone(), perm: d.perm.clone(), dots }, *m)
                })
                .collect()
        };
        if cfg!(debug_assertions) {
            let dx = self.degree(x);
            let dy = self.degree(y);
            for (d, _) in &out {
                debug_assert_eq!(self.degree(d), dx + dy, "products must be homogeneous");
            }
        }
        Some(out)
    }

    fn compose_dotless(
        &self,
        bottom: &Slots,
        perm_x: &diagram::Perm,
        mid_dots: &[u16],
        perm_y: &diagram::Perm,
    ) -> Vec<(Diagram, i128)> {
        let word_x = canonical_word(perm_x);
        let word_y = canonical_word(perm_y);
        let mut out: BTreeMap<Diagram, i128> = BTreeMap::new();
        // push the interface dots through x's word, then normalise the join
        for (wx, low_dots, m0) in self.rewriter.lift_through_prefix(bottom, &word_x, mid_dots) {
            let mut full = wx;
            full.extend_from_slice(&word_y);
            let norm = self.rewriter.normalize_word(bottom, &full);
            for ((perm, d), m) in norm.iter() {
                let dots: Vec<u16> =
                    d.iter().zip(&low_dots).map(|(a, b)| a + b).collect();
                let key = Diagram { bottom: bottom.clone(), perm: perm.clone(), dots };
                let entry = out.entry(key).or_insert(0);
                *entry += m * m0;
            }
        }
        out.retain(|_, m| *m != 0);
        out.into_iter().collect()
    }

    /// Bilinear product; diagram pairs whose slices do not meet contribute
    /// zero (the idempotents are orthogonal).
    pub fn multiply(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        let f = &self.field;
        let mut out: BTreeMap<Diagram, F::Elem> = BTreeMap::new();
        for (x, cx) in &a.terms {
            for (y, cy) in &b.terms {
                let Some(prods) = self.compose_diagrams(x, y) else { continue };
                let c = f.mul(cx, cy);
                for (d, m) in prods {
                    let coeff = f.mul(&c, &f.from_i128(m));
                    let entry = out.entry(d).or_insert_with(|| f.zero());
                    *entry = f.add(entry, &coeff);
                }
            }
        }
        out.retain(|_, c| !f.is_zero(c));
        Element { terms: out }
    }

    /// Product with the strict interface contract: every diagram of `a` must
    /// meet every diagram of `b`.
    pub fn multiply_strict(&self, a: &Element<F>, b: &Element<F>) -> Result<Element<F>, EngineError> {
        for (x, _) in &a.terms {
            for (y, _) in &b.terms {
                if x.top() != y.bottom {
                    return Err(EngineError::IdempotentMismatch);
                }
            }
        }
        Ok(self.multiply(a, b))
    }
}
