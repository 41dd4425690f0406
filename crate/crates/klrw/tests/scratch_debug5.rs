//! Temporary associativity fuzz in left-strand-rich cells.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use klrw::cartan::{CartanDatum, Weight};
use klrw::engine::diagram::{Slots, RED};
use klrw::engine::scalar::Rationals;
use klrw::engine::{Algebra, Diagram, Element};

fn random_diagram(rng: &mut StdRng, bottom: &Slots) -> Diagram {
    let n = bottom.len();
    // random word of random length
    let len = rng.gen_range(0..=6);
    let word: Vec<u8> = (0..len).map(|_| rng.gen_range(0..(n - 1) as u8)).collect();
    let perm = klrw::engine::diagram::perm_of_word(n, &word);
    let mut dots = vec![0u16; n];
    for (i, &s) in bottom.0.iter().enumerate() {
        if s != RED && rng.gen_bool(0.3) {
            dots[i] = rng.gen_range(1..=2);
        }
    }
    Diagram { bottom: bottom.clone(), perm, dots }
}

#[test]
fn associativity_fuzz() {
    let cd = CartanDatum::affine(2).unwrap();
    let l0 = Weight::fundamental(2, 0);
    let alg = Algebra::new(cd, &l0, Rationals).unwrap();
    let mut rng = StdRng::seed_from_u64(42);
    let bottoms = [
        Slots(vec![1, 1, 0, RED, 0]),
        Slots(vec![1, 0, RED, 0, 1]),
        Slots(vec![0, 1, RED, 1, 0]),
        Slots(vec![RED, 0, 1, 0, 1]),
        Slots(vec![1, 1, RED, 0, 0]),
    ];
    let f = &alg.field;
    for _round in 0..400 {
        let b = &bottoms[rng.gen_range(0..bottoms.len())];
        let x = random_diagram(&mut rng, b);
        let y = random_diagram(&mut rng, &x.top());
        let z = random_diagram(&mut rng, &y.top());
        let xe = Element::from_diagram(f, x.clone());
        let ye = Element::from_diagram(f, y.clone());
        let ze = Element::from_diagram(f, z.clone());
        let left = alg.multiply(&alg.multiply(&xe, &ye), &ze);
        let right = alg.multiply(&xe, &alg.multiply(&ye, &ze));
        assert_eq!(left, right, "associativity failure\nx={x:?}\ny={y:?}\nz={z:?}");
    }
}

#[test]
fn e3_associativity_fuzz() {
    let cd = CartanDatum::affine(3).unwrap();
    let l0 = Weight::fundamental(3, 0);
    let alg = Algebra::new(cd, &l0, Rationals).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    let bottoms = [
        Slots(vec![2, 1, RED, 0, 1]),
        Slots(vec![0, RED, 1, 2, 0]),
        Slots(vec![RED, 0, 1, 2]),
    ];
    let f = &alg.field;
    for _round in 0..300 {
        let b = &bottoms[rng.gen_range(0..bottoms.len())];
        let x = random_diagram(&mut rng, b);
        let y = random_diagram(&mut rng, &x.top());
        let z = random_diagram(&mut rng, &y.top());
        let xe = Element::from_diagram(f, x);
        let ye = Element::from_diagram(f, y);
        let ze = Element::from_diagram(f, z);
        let left = alg.multiply(&alg.multiply(&xe, &ye), &ze);
        let right = alg.multiply(&xe, &alg.multiply(&ye, &ze));
        assert_eq!(left, right, "associativity failure");
    }
}
