//! Temporary cross-chamber consistency checks, round two.

use klrw::cartan::{CartanDatum, RootVec, Weight};
use klrw::combinatorics::Idem;
use klrw::engine::ideal::{truncation_graded_dims, IdealContext};
use klrw::engine::scalar::Rationals;
use klrw::engine::Algebra;
use klrw::pressure::Pressure;
use klrw::weyl::{act_pressure, WeylWord};

#[test]
fn wreath_corner_in_act10_chamber() {
    let cd = CartanDatum::affine(2).unwrap();
    let l0 = Weight::fundamental(2, 0);
    let alg = Algebra::new(cd, &l0, Rationals).unwrap();
    let alpha = RootVec::new(vec![2, 2]);
    let chi0 = Pressure::uniform(2);
    let s1s0 = act_pressure(&cd, &WeylWord::new(vec![1, 0]), &chi0);
    let e = Idem::from_word_red(&[1, 0, 1, 0], 0);
    let dims = truncation_graded_dims(&alg, &s1s0, &l0, &alpha, &[e], 12).unwrap();
    println!("(red|1010) corner at s1s0: {:?}", dims.dims);
}

#[test]
fn act1_cross_chamber_morita_corner() {
    let cd = CartanDatum::affine(2).unwrap();
    let l0 = Weight::fundamental(2, 0);
    let alg = Algebra::new(cd, &l0, Rationals).unwrap();
    let alpha = RootVec::new(vec![2, 2]);
    let chi0 = Pressure::uniform(2);
    let s1 = act_pressure(&cd, &WeylWord::new(vec![1]), &chi0);
    // (e2 + e3) corner at s1 chi0 is isomorphic to the full chi0 quotient
    let e2 = Idem::from_word_red(&[0, 1, 1, 0], 0);
    let e3 = Idem::from_word_red(&[1, 0, 1, 0], 1);
    let dims_a = truncation_graded_dims(&alg, &s1, &l0, &alpha, &[e2, e3], 16).unwrap();
    let ctx_b = IdealContext::steadied(&alg, &chi0, &l0, &alpha).unwrap();
    let dims_b = ctx_b.quotient_dims(None, 16);
    println!("s1 corner (e2+e3): {:?} total {}", dims_a.dims, dims_a.total());
    println!("chi0 full:          {:?} total {}", dims_b.dims, dims_b.total());
    assert_eq!(dims_a.dims, dims_b.dims);
}
