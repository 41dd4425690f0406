//! Block-level checks of the engine against worked idempotent charts and
//! reference dimensions.

use klrw::cartan::{CartanDatum, RootVec, Weight};
use klrw::combinatorics::Idem;
use klrw::engine::ideal::{quotient_graded_dims, truncation_graded_dims, IdealContext};
use klrw::engine::scalar::{PrimeField, Rationals};
use klrw::engine::Algebra;
use klrw::pressure::Pressure;
use klrw::weyl::{act_pressure, WeylWord};

fn setup(e: usize) -> (CartanDatum, Weight, Algebra<Rationals>) {
    let cd = CartanDatum::affine(e).unwrap();
    let l0 = Weight::fundamental(e, 0);
    let alg = Algebra::new(cd, &l0, Rationals).unwrap();
    (cd, l0, alg)
}

fn pressure_row(cd: &CartanDatum, word: &[usize]) -> Pressure {
    act_pressure(cd, &WeylWord::new(word.to_vec()), &Pressure::uniform(cd.e))
}

/// Exact survivor set of a block: all straight-line idempotents not in the
/// steadying ideal.
fn survivors(alg: &Algebra<Rationals>, chi: &Pressure, l: &Weight, alpha: &RootVec) -> Vec<Idem> {
    let ctx = IdealContext::steadied(alg, chi, l, alpha).unwrap();
    let idems = klrw::combinatorics::enumerate_idempotents(
        &alg.cd,
        l,
        alpha,
        klrw::combinatorics::RedPlacement::Anywhere,
    )
    .unwrap();
    idems.into_iter().filter(|i| !ctx.idem_in_ideal(i)).collect()
}

fn idem(word: &[usize], red: usize) -> Idem {
    Idem::from_word_red(word, red)
}

#[test]
fn cyclotomic_two_delta_survivors() {
    // chi_0, alpha = 2 delta: survivors are exactly (red|0101) and (red|0110)
    let (_, l0, alg) = setup(2);
    let alpha = RootVec::new(vec![2, 2]);
    let chi0 = Pressure::uniform(2);
    let mut got = survivors(&alg, &chi0, &l0, &alpha);
    got.sort();
    let mut expect = vec![idem(&[0, 1, 0, 1], 0), idem(&[0, 1, 1, 0], 0)];
    expect.sort();
    assert_eq!(got, expect);
}

#[test]
fn chart_row_s0_two_delta() {
    // s_0 chi_0: survivors e1 = (red|0011), e2 = (red|0101), e3 = (0|red|011)
    let (cd, l0, alg) = setup(2);
    let alpha = RootVec::new(vec![2, 2]);
    let chi = pressure_row(&cd, &[0]);
    let mut got = survivors(&alg, &chi, &l0, &alpha);
    got.sort();
    let mut expect = vec![
        idem(&[0, 0, 1, 1], 0),
        idem(&[0, 1, 0, 1], 0),
        idem(&[0, 0, 1, 1], 1),
    ];
    expect.sort();
    assert_eq!(got, expect);
}

#[test]
fn chart_row_s1_two_delta() {
    // s_1 chi_0: survivors (red|1010), (red|0110), (1|red|010)
    let (cd, l0, alg) = setup(2);
    let alpha = RootVec::new(vec![2, 2]);
    let chi = pressure_row(&cd, &[1]);
    let mut got = survivors(&alg, &chi, &l0, &alpha);
    got.sort();
    let mut expect = vec![
        idem(&[0, 1, 1, 0], 0),
        idem(&[1, 0, 1, 0], 0),
        idem(&[1, 0, 1, 0], 1),
    ];
    expect.sort();
    assert_eq!(got, expect);
}

#[test]
fn chart_row_s1s0_two_delta() {
    // s_1 s_0 chi_0: survivors (red|1100), (red|1010), (1|red|100),
    // (1|red|010), (11|red|00), (110|red|0)
    let (cd, l0, alg) = setup(2);
    let alpha = RootVec::new(vec![2, 2]);
    let chi = pressure_row(&cd, &[1, 0]);
    let mut got = survivors(&alg, &chi, &l0, &alpha);
    got.sort();
    // the extra red position 2 on the word 1100 is the free-move companion
    // of red position 0: moving a 1-strand across the red is free
    let mut expect = vec![
        idem(&[1, 0, 1, 0], 0),
        idem(&[1, 0, 1, 0], 1),
        idem(&[1, 1, 0, 0], 0),
        idem(&[1, 1, 0, 0], 1),
        idem(&[1, 1, 0, 0], 2),
        idem(&[1, 1, 0, 0], 3),
    ];
    expect.sort();
    assert_eq!(got, expect);
}

#[test]
fn wreath_corner_dimensions() {
    // s_0 chi_0, alpha = 2 delta: the corner at e2 = (red|0101) has graded
    // dimensions 2, 4, 2 in degrees 0, 2, 4
    let (cd, l0, alg) = setup(2);
    let alpha = RootVec::new(vec![2, 2]);
    let chi = pressure_row(&cd, &[0]);
    let e2 = idem(&[0, 1, 0, 1], 0);
    let dims = truncation_graded_dims(&alg, &chi, &l0, &alpha, &[e2], 12).unwrap();
    assert!(dims.complete);
    assert_eq!(dims.total(), 8);
    assert_eq!(dims.dims.get(&0), Some(&2));
    assert_eq!(dims.dims.get(&2), Some(&4));
    assert_eq!(dims.dims.get(&4), Some(&2));
}

#[test]
fn delta_block_dims_agree_across_fields() {
    let cd = CartanDatum::affine(2).unwrap();
    let l0 = Weight::fundamental(2, 0);
    let alpha = RootVec::new(vec![1, 1]);
    let chi0 = Pressure::uniform(2);
    let alg_q = Algebra::new(cd, &l0, Rationals).unwrap();
    let dims_q = quotient_graded_dims(&alg_q, &chi0, &l0, &alpha, 12).unwrap();
    for p in [2u64, 3] {
        let alg_p = Algebra::new(cd, &l0, PrimeField::new(p).unwrap()).unwrap();
        let dims_p = quotient_graded_dims(&alg_p, &chi0, &l0, &alpha, 12).unwrap();
        assert_eq!(dims_q.dims, dims_p.dims, "p = {p}");
    }
}

#[test]
fn zigzag_truncation_reference() {
    // e = 3, d = 1: the Gelfand-Graev truncation of the block at delta has
    // graded dimensions 2, 2, 2 in degrees 0, 2, 4, matching the zigzag
    // reference
    let (cd, l0, alg) = setup(3);
    let alpha = cd.delta();
    let chi = klrw::rock::chi_rock(3, 1).unwrap();
    let idems = klrw::rock::delta_idempotents(3, 1);
    let dims = truncation_graded_dims(&alg, &chi, &l0, &alpha, &idems, 12).unwrap();
    assert!(dims.complete);
    let reference = klrw::rock::wreath_reference_dims(3, 1, 12).unwrap();
    assert_eq!(dims.dims, reference);
}
