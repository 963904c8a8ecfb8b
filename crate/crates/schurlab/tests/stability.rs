use schurlab::algebra::{Elem, Tensor};
use schurlab::combinatorics::is_i_matrix;
use schurlab::stability::{
    basis_matrices, check_positive_elem, check_positive_tensor, detect_stabilization, verify_affine_comult_positivity,
    verify_embedding_positivity, verify_idempotented_comult_positivity, verify_transfer_positivity, Engines, Kind,
};
use schurlab::{LaurentPoly, Mat, SchurError};

#[test]
fn expected_shifts() {
    assert_eq!(Kind::A.expected_shift(2), vec![1, 1]);
    assert_eq!(Kind::J.expected_shift(3), vec![2, 2, 2]);
    assert_eq!(Kind::I.expected_shift(3), vec![2, 0, 2]);
    assert_eq!(Kind::I.step(5), 4);
}

fn check_chains(kind: Kind, n: usize, seed_degree: u32, max_d: u32) {
    let engines = Engines::new(kind, n).unwrap();
    for seed in basis_matrices(kind, n, seed_degree) {
        let s = detect_stabilization(kind, &engines, &seed, max_d).unwrap();
        assert_eq!(s.shift, kind.expected_shift(n));
        let last = s.steps.last().unwrap();
        let diag = s.shift.iter().enumerate().map(|(k, x)| (k as i32 + 1, k as i32 + 1, -(*x as i64)));
        let below = last.top.add_at(&diag.collect::<Vec<_>>()).unwrap();
        assert_eq!(last.image, Elem::basis(below), "{seed}");
    }
}

#[test]
fn type_a_chains_stabilize_by_the_identity() {
    check_chains(Kind::A, 2, 1, 5);
    check_chains(Kind::A, 3, 1, 4);
}

#[test]
fn j_chains_stabilize_by_twice_the_identity() {
    check_chains(Kind::J, 3, 0, 6);
    check_chains(Kind::J, 3, 1, 4);
}

#[test]
fn i_chains_stabilize_with_an_empty_middle() {
    check_chains(Kind::I, 3, 0, 4);
    check_chains(Kind::I, 3, 1, 3);
}

#[test]
fn non_i_seeds_are_rejected() {
    let engines = Engines::new(Kind::I, 3).unwrap();
    let seed = Mat::diag(&[0, 3, 0], false);
    assert!(!is_i_matrix(&seed));
    assert!(matches!(detect_stabilization(Kind::I, &engines, &seed, 3), Err(SchurError::Validation(_))));
}

#[test]
fn comultiplication_positivity() {
    for (kind, n, d) in [(Kind::A, 2, 3), (Kind::A, 3, 2), (Kind::J, 3, 2), (Kind::I, 3, 2)] {
        for d1 in 0..=d {
            let cert = verify_idempotented_comult_positivity(kind, n, d, d1).unwrap();
            assert!(cert.passed(), "{kind:?} n={n} d={d} d1={d1}: {:?}", cert.witnesses);
        }
    }
    assert!(verify_idempotented_comult_positivity(Kind::A, 2, 1, 2).is_err());
}

#[test]
fn affine_comultiplication_positivity() {
    for d in 1..=2 {
        for d1 in 0..=d {
            let cert = verify_affine_comult_positivity(2, d, d1, 1).unwrap();
            assert!(cert.passed(), "{:?}", cert.witnesses);
        }
    }
}

#[test]
fn embedding_and_transfer_positivity() {
    for d in 1..=2 {
        assert!(verify_embedding_positivity(Kind::J, 3, d).unwrap().passed());
        assert!(verify_embedding_positivity(Kind::I, 3, d).unwrap().passed());
    }
    assert!(verify_embedding_positivity(Kind::A, 3, 1).is_err());
    assert!(verify_transfer_positivity(Kind::A, 2, 3).unwrap().passed());
    assert!(verify_transfer_positivity(Kind::J, 3, 3).unwrap().passed());
    assert!(verify_transfer_positivity(Kind::I, 3, 3).unwrap().passed());
}

#[test]
fn positivity_checks_catch_negative_coefficients() {
    let m = Mat::diag(&[1, 1], false);
    let neg = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let x = Elem::from_terms([(m.clone(), neg.clone())]);
    assert_eq!(check_positive_elem("x", &x).len(), 1);
    let mut t = Tensor::zero();
    t.add_term(vec![m.clone(), m.clone()], &LaurentPoly::one());
    assert!(check_positive_tensor("t", &t).is_empty());
    t.add_term(vec![m.clone(), Mat::diag(&[2, 0], false)], &neg);
    assert_eq!(check_positive_tensor("t", &t).len(), 1);
}
