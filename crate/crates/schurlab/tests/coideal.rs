use std::collections::BTreeMap;

use schurlab::algebra::{unit, Elem, Engine, Gen};
use schurlab::coideal::{
    embed_i, embed_j, generator_table, i_generator, i_weights, j_generator, j_matrices, transfer_i, transfer_j,
    truncate_i, verify_coideal_relations, IGen, JCoproduct, JFamily, JStage,
};
use schurlab::combinatorics::{is_i_matrix, j_compositions};
use schurlab::coproduct::{delta_elem, tensor_mul};
use schurlab::flag_oracle::convolve_poly;
use schurlab::schur_a::TypeA;
use schurlab::{Mat, QPoly, SchurError};

#[test]
fn rejects_even_or_small_n() {
    assert!(matches!(JFamily::new(4), Err(SchurError::Validation(_))));
    assert!(matches!(JFamily::new(1), Err(SchurError::Validation(_))));
    let fam = JFamily::new(5).unwrap();
    assert_eq!(fam.r(), 2);
    assert!(j_generator(&fam, &Gen::E(3, 1), 1).is_err());
}

/// One-step structure constants against interpolated isotropic flag counts.
#[test]
fn step_counts_match_isotropic_convolution() {
    let fam = JFamily::new(3).unwrap();
    for d in 0..=2u32 {
        for a in j_matrices(3, d) {
            for lower in [true, false] {
                let Some(g) = fam.generator_matrix(1, 1, &a.ro(), lower) else { continue };
                let want = convolve_poly(&g, &a, true).unwrap();
                let got: BTreeMap<Mat, QPoly> = fam
                    .step_counts(1, lower, &a)
                    .into_iter()
                    .map(|(m, p)| (m, QPoly::from_laurent(&p).expect("polynomial in q")))
                    .collect();
                assert_eq!(got, want, "{g} * {a}");
            }
        }
    }
}

fn j_engine(n: usize) -> Engine<JFamily> {
    Engine::new(JFamily::new(n).unwrap())
}

#[test]
fn multiplication_is_associative_and_bar_is_an_involution() {
    let eng = j_engine(3);
    let mats = j_matrices(3, 2);
    for a in &mats {
        let x = Elem::basis(a.clone());
        assert_eq!(eng.bar(&eng.bar(&x).unwrap()).unwrap(), x);
        for b in mats.iter().filter(|b| b.ro() == a.co()).take(4) {
            let y = Elem::basis(b.clone());
            let xy = eng.mul(&x, &y).unwrap();
            assert_eq!(eng.bar(&xy).unwrap(), eng.mul(&eng.bar(&x).unwrap(), &eng.bar(&y).unwrap()).unwrap());
            for c in mats.iter().filter(|c| c.ro() == b.co()).take(3) {
                let z = Elem::basis(c.clone());
                assert_eq!(eng.mul(&xy, &z).unwrap(), eng.mul(&x, &eng.mul(&y, &z).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn unit_acts_trivially() {
    let eng = j_engine(5);
    let one = unit(eng.family(), 1);
    for a in j_matrices(5, 1) {
        let x = Elem::basis(a);
        assert_eq!(eng.mul(&one, &x).unwrap(), x);
    }
}

#[test]
fn comultiplication_is_a_homomorphism() {
    let eng = j_engine(3);
    let aeng = Engine::new(TypeA::finite(3));
    let mats = j_matrices(3, 2);
    let cp = JCoproduct::new(eng.family().clone(), 1, 1, JStage::Renormalized);
    for a in &mats {
        for b in mats.iter().filter(|b| b.ro() == a.co()).take(4) {
            let (x, y) = (Elem::basis(a.clone()), Elem::basis(b.clone()));
            let lhs = delta_elem(&cp, &eng, &eng.mul(&x, &y).unwrap()).unwrap();
            let dx = delta_elem(&cp, &eng, &x).unwrap();
            let dy = delta_elem(&cp, &eng, &y).unwrap();
            assert_eq!(lhs, tensor_mul(&eng, &aeng, &dx, &dy).unwrap(), "{a} {b}");
        }
    }
}

#[test]
fn embedding_is_a_unital_homomorphism() {
    let eng = j_engine(3);
    let aeng = Engine::new(TypeA::finite(3));
    for d in 1..=2 {
        assert_eq!(embed_j(&eng, &unit(eng.family(), d)).unwrap(), unit(aeng.family(), d));
        let mats = j_matrices(3, d);
        for a in &mats {
            for b in mats.iter().filter(|b| b.ro() == a.co()).take(4) {
                let (x, y) = (Elem::basis(a.clone()), Elem::basis(b.clone()));
                let lhs = embed_j(&eng, &eng.mul(&x, &y).unwrap()).unwrap();
                let rhs = aeng.mul(&embed_j(&eng, &x).unwrap(), &embed_j(&eng, &y).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{a} {b}");
            }
        }
    }
}

#[test]
fn transfer_is_a_unital_homomorphism() {
    let eng = j_engine(3);
    let d = 3;
    assert_eq!(transfer_j(&eng, &unit(eng.family(), d)).unwrap(), unit(eng.family(), 0));
    let gens: Vec<Elem> = generator_table(eng.family(), d).unwrap().into_values().collect();
    for x in &gens {
        for y in &gens {
            let lhs = transfer_j(&eng, &eng.mul(x, y).unwrap()).unwrap();
            let rhs = eng.mul(&transfer_j(&eng, x).unwrap(), &transfer_j(&eng, y).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    assert!(transfer_j(&eng, &unit(eng.family(), 2)).is_err());
}

#[test]
fn generators_satisfy_the_coideal_relations() {
    for (n, dmax) in [(3usize, 3u32), (5, 1)] {
        let eng = j_engine(n);
        for d in 0..=dmax {
            let table = generator_table(eng.family(), d).unwrap();
            let cert = verify_coideal_relations(&eng, d, &table).unwrap();
            assert!(cert.passed(), "n={n} d={d}: {:?}", cert.witnesses);
        }
    }
}

#[test]
fn i_weights_have_unit_middle() {
    for d in 0..=3 {
        let w = i_weights(d, 5);
        assert!(w.iter().all(|l| l[2] == 1));
        // middle part 1 leaves d to distribute over the left half
        assert_eq!(w.len(), j_compositions(d, 5).iter().filter(|l| l[2] == 1).count());
        assert_eq!(w.len() as u64, (d as u64 + 1));
    }
}

#[test]
fn i_generators_live_on_the_truncation() {
    let fam = JFamily::new(5).unwrap();
    for d in 0..=2 {
        for g in [IGen::E(1), IGen::F(1), IGen::K(1, 1), IGen::T] {
            let x = i_generator(&fam, &g, d).unwrap();
            assert!(x.matrices().all(is_i_matrix));
            assert_eq!(truncate_i(&x), x);
        }
    }
    assert!(i_generator(&fam, &IGen::E(2), 1).is_err());
}

#[test]
fn i_maps_are_multiplicative() {
    let eng = j_engine(5);
    let aeng = Engine::new(TypeA::finite(5));
    let fam = eng.family().clone();
    let gens = |d| -> Vec<Elem> {
        [IGen::E(1), IGen::F(1), IGen::K(1, 1), IGen::T].iter().map(|g| i_generator(&fam, g, d).unwrap()).collect()
    };
    for x in &gens(2) {
        for y in &gens(2) {
            let xy = truncate_i(&eng.mul(x, y).unwrap());
            let lhs = embed_i(&eng, &xy).unwrap();
            let rhs = aeng.mul(&embed_i(&eng, x).unwrap(), &embed_i(&eng, y).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    for x in &gens(4) {
        for y in &gens(4) {
            let xy = truncate_i(&eng.mul(x, y).unwrap());
            let lhs = transfer_i(&eng, &xy).unwrap();
            let rhs = eng.mul(&transfer_i(&eng, x).unwrap(), &transfer_i(&eng, y).unwrap()).unwrap();
            assert_eq!(lhs, truncate_i(&rhs));
        }
    }
}
