//! Temporary timing + count checks.

use std::time::Instant;

use klrw::cartan::{CartanDatum, RootVec, Weight};
use klrw::engine::scalar::Rationals;
use klrw::engine::semisimple::count_simple_factors_q_block;
use klrw::engine::Algebra;
use klrw::pressure::Pressure;
use klrw::weyl::{act_pressure, WeylWord};

#[test]
fn count_simples_both_chambers() {
    let cd = CartanDatum::affine(2).unwrap();
    let l0 = Weight::fundamental(2, 0);
    let alg = Algebra::new(cd, &l0, Rationals).unwrap();
    let alpha = RootVec::new(vec![2, 2]);
    let chi0 = Pressure::uniform(2);

    let t = Instant::now();
    let report = count_simple_factors_q_block(&alg, &chi0, &l0, &alpha).unwrap();
    println!("chi0: {:?} in {:.1?}", report, t.elapsed());
    assert_eq!(report.count, 2);
    assert!(report.split);

    let s1s0 = act_pressure(&cd, &WeylWord::new(vec![1, 0]), &chi0);
    let t = Instant::now();
    let report = count_simple_factors_q_block(&alg, &s1s0, &l0, &alpha).unwrap();
    println!("s1s0: {:?} in {:.1?}", report, t.elapsed());
    assert_eq!(report.count, 2);
    assert!(report.split);
}
