//! Temporary shrinker for the associativity failure.

use klrw::cartan::{CartanDatum, Weight};
use klrw::engine::diagram::{perm_of_word, Slots, RED};
use klrw::engine::scalar::Rationals;
use klrw::engine::{Algebra, Diagram, Element};

fn check(alg: &Algebra<Rationals>, x: &Diagram, y: &Diagram, z: &Diagram) -> bool {
    let f = &alg.field;
    let xe = Element::from_diagram(f, x.clone());
    let ye = Element::from_diagram(f, y.clone());
    let ze = Element::from_diagram(f, z.clone());
    let left = alg.multiply(&alg.multiply(&xe, &ye), &ze);
    let right = alg.multiply(&xe, &alg.multiply(&ye, &ze));
    left == right
}

#[test]
fn shrink_failure() {
    let cd = CartanDatum::affine(2).unwrap();
    let l0 = Weight::fundamental(2, 0);
    let alg = Algebra::new(cd, &l0, Rationals).unwrap();
    // small systematic scan over the 5-slot bottom with one red
    let bottoms = [
        Slots(vec![1, 1, 0, RED, 0]),
        Slots(vec![0, RED, 0]),
        Slots(vec![1, 0, RED, 0]),
        Slots(vec![0, 0, RED, 0]),
        Slots(vec![RED, 0, 0]),
        Slots(vec![0, RED, 0, 0]),
    ];
    let mut best: Option<(usize, Diagram, Diagram, Diagram)> = None;
    for bottom in &bottoms {
        let n = bottom.len();
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        for _ in 0..3 {
            let mut next = Vec::new();
            for w in &words {
                for t in 0..(n - 1) as u8 {
                    let mut w2 = w.clone();
                    w2.push(t);
                    next.push(w2);
                }
            }
            words.extend(next);
            words.dedup();
        }
        let mut diagrams = Vec::new();
        for w in &words {
            let perm = perm_of_word(n, w);
            for dotted in 0..=n {
                let mut dots = vec![0u16; n];
                if dotted < n {
                    if bottom.0[dotted] == RED {
                        continue;
                    }
                    dots[dotted] = 1;
                }
                diagrams.push(Diagram { bottom: bottom.clone(), perm: perm.clone(), dots: dots.clone() });
            }
        }
        diagrams.sort();
        diagrams.dedup();
        for x in &diagrams {
            let tx = x.top();
            for yw in &words {
                let yperm = perm_of_word(n, yw);
                for ydot in 0..=n {
                    let mut dots = vec![0u16; n];
                    if ydot < n {
                        if tx.0[ydot] == RED {
                            continue;
                        }
                        dots[ydot] = 1;
                    }
                    let y = Diagram { bottom: tx.clone(), perm: yperm.clone(), dots };
                    let ty = y.top();
                    for zw in &words {
                        let zperm = perm_of_word(n, zw);
                        let z = Diagram { bottom: ty.clone(), perm: zperm, dots: vec![0; n] };
                        let size = x.dots.iter().sum::<u16>() as usize
                            + y.dots.iter().sum::<u16>() as usize
                            + klrw::engine::diagram::perm_length(&x.perm)
                            + klrw::engine::diagram::perm_length(&y.perm)
                            + klrw::engine::diagram::perm_length(&z.perm);
                        if let Some((s, _, _, _)) = &best {
                            if size >= *s {
                                continue;
                            }
                        }
                        if !check(&alg, x, &y, &z) {
                            println!("smaller failure size={size}\n  x={x:?}\n  y={y:?}\n  z={z:?}");
                            best = Some((size, x.clone(), y.clone(), z.clone()));
                        }
                    }
                }
            }
        }
    }
    if let Some((s, x, y, z)) = best {
        panic!("minimal failure size={s}\n  x={x:?}\n  y={y:?}\n  z={z:?}");
    }
}
