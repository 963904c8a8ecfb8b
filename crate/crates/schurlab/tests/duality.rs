use schurlab::algebra::{Elem, Gen};
use schurlab::coideal::{embed_j, j_generator};
use schurlab::combinatorics::ZeroOneColumnMatrix;
use schurlab::duality::{kl_comparisons, verify_parabolic_kl, verify_tensor_positivity, verify_zeta_standard, TensorSpaces};
use schurlab::{LaurentPoly, SchurError};

#[test]
fn construction_is_validated() {
    assert!(matches!(TensorSpaces::new(1, 4), Err(SchurError::Validation(_))));
    assert!(matches!(TensorSpaces::new(0, 3), Err(SchurError::Validation(_))));
    let ts = TensorSpaces::new(2, 3).unwrap();
    assert!(ts.matrix_a(&ZeroOneColumnMatrix::new(3, vec![1]).unwrap()).is_err());
    // ζ only accepts the tensor slice
    let off = Elem::basis(schurlab::Mat::diag(&[1, 3, 1], false));
    assert!(ts.zeta(&off).is_err());
}

#[test]
fn slice_embedding_round_trips() {
    for (d, n) in [(1, 3), (2, 3), (3, 3), (2, 5)] {
        let ts = TensorSpaces::new(d, n).unwrap();
        assert_eq!(ts.basis().len(), n.pow(d as u32));
        for a in ts.basis() {
            let m = ts.matrix_a(&a).unwrap();
            assert_eq!(m.d_stat(), a.d_stat());
            assert_eq!(ts.unembed(&m), Some(a.clone()));
            assert!(ts.matrix_j(&a).unwrap().is_j_symmetric());
        }
    }
}

#[test]
fn zeta_sends_standard_to_standard() {
    for (d, n) in [(1, 3), (2, 3), (3, 3), (1, 5), (2, 5)] {
        let ts = TensorSpaces::new(d, n).unwrap();
        let cert = verify_zeta_standard(&ts).unwrap();
        assert!(cert.passed(), "d={d} n={n}: {:?}", cert.witnesses);
        assert_eq!(cert.checked, n.pow(d as u32));
    }
}

/// `ζ` intertwines the coideal action with its image under `ȷ`.
#[test]
fn zeta_intertwines_the_actions() {
    for (d, n) in [(1, 3), (2, 3)] {
        let ts = TensorSpaces::new(d, n).unwrap();
        let jeng = ts.j_engine();
        let aeng = ts.a_engine();
        let fam = jeng.family();
        for i in 1..=fam.r() {
            for g in [Gen::E(i, 1), Gen::F(i, 1), Gen::K(i, 1)] {
                let u = j_generator(fam, &g, d as u32).unwrap();
                let ju = embed_j(jeng, &u).unwrap();
                for a in ts.basis() {
                    let t = Elem::basis(ts.matrix_j(&a).unwrap());
                    let lhs = ts.zeta(&jeng.mul(&u, &t).unwrap()).unwrap();
                    let rhs = aeng.mul(&ju, &ts.zeta(&t).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{g} on {:?}", a.rows);
                }
            }
        }
    }
}

#[test]
fn tensor_canonical_bases_are_positive() {
    for (d, n) in [(1, 3), (2, 3), (3, 3), (2, 5)] {
        let ts = TensorSpaces::new(d, n).unwrap();
        let cert = verify_tensor_positivity(&ts).unwrap();
        assert!(cert.passed(), "d={d} n={n}: {:?}", cert.witnesses);
    }
}

#[test]
fn parabolic_kl_polynomials_agree() {
    for (d, n) in [(2, 3), (3, 3), (2, 5)] {
        let ts = TensorSpaces::new(d, n).unwrap();
        let rows = kl_comparisons(&ts).unwrap();
        assert!(rows.iter().all(|r| r.equal));
        assert!(verify_parabolic_kl(&rows, n, d).passed());
        // diagonal entries are 1 and off-diagonal ones lie in v^-1 Z[v^-1]
        for r in &rows {
            if r.a == r.b {
                assert_eq!(r.p_type_a, LaurentPoly::one());
            } else {
                assert!(r.p_type_a.in_v_inverse_z(), "{r:?}");
            }
        }
    }
}

#[test]
fn tensor_canonical_elements_have_unit_leading_terms() {
    let ts = TensorSpaces::new(2, 3).unwrap();
    for a in ts.basis() {
        let c = ts.canonical_a(&a).unwrap();
        assert!(c.coeff(&ts.matrix_a(&a).unwrap()).is_one());
        let cj = ts.canonical_j(&a).unwrap();
        assert!(cj.coeff(&ts.matrix_j(&a).unwrap()).is_one());
    }
}
