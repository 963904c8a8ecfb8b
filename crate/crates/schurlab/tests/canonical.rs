use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use schurlab::algebra::{Elem, Engine};
use schurlab::canonical::{check_canonical, verify_epsilon_rigidity, KlTable};
use schurlab::combinatorics::{compositions, finite_block, periodic_block};
use schurlab::schur_a::TypeA;
use schurlab::{LaurentPoly, Mat};

/// Solve the bar-invariance system for `{top}` by Gaussian elimination over
/// the rationals, with unknown coefficients `c_{A',k}` of `v^{-k}`. Returns
/// `None` when the solution is not unique.
fn brute_force(eng: &Engine<TypeA>, top: &Mat, block: &[Mat]) -> Option<BTreeMap<Mat, LaurentPoly>> {
    let dt = top.d_stat();
    let lower: Vec<&Mat> = block.iter().filter(|m| *m != top && m.bruhat_leq(top)).collect();
    let mut unknowns: Vec<(Mat, i64)> = Vec::new();
    for m in &lower {
        for k in 1..=(dt - m.d_stat() + 1).max(1) {
            unknowns.push(((*m).clone(), k));
        }
    }
    // row key (A'', exponent) -> linear form over unknowns plus constant
    let mut rows: BTreeMap<(Mat, i64), (Vec<BigRational>, BigRational)> = BTreeMap::new();
    let nu = unknowns.len();
    let mut add = |key: (Mat, i64), col: Option<usize>, c: BigInt| {
        let e = rows.entry(key).or_insert_with(|| (vec![BigRational::zero(); nu], BigRational::zero()));
        match col {
            Some(j) => e.0[j] += BigRational::from_integer(c),
            None => e.1 += BigRational::from_integer(c),
        }
    };
    // bar([top]) - [top]
    for (m, p) in eng.bar_basis(top).unwrap().iter() {
        for (k, c) in p.terms() {
            add((m.clone(), k), None, c.clone());
        }
    }
    add((top.clone(), 0), None, -BigInt::one());
    for (j, (m, k)) in unknowns.iter().enumerate() {
        // c v^{k} bar([m]) - c v^{-k} [m]
        for (m2, p) in eng.bar_basis(m).unwrap().iter() {
            for (e, c) in p.terms() {
                add((m2.clone(), e + k), Some(j), c.clone());
            }
        }
        add((m.clone(), -k), Some(j), -BigInt::one());
    }
    let mut mat: Vec<(Vec<BigRational>, BigRational)> = rows.into_values().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..nu {
        let Some(p) = (r..mat.len()).find(|&i| !mat[i].0[col].is_zero()) else { continue };
        mat.swap(r, p);
        let inv = BigRational::one() / mat[r].0[col].clone();
        let (row, rhs) = mat[r].clone();
        let row: Vec<BigRational> = row.iter().map(|x| x * &inv).collect();
        let rhs = rhs * &inv;
        for (i, other) in mat.iter_mut().enumerate() {
            if i != r && !other.0[col].is_zero() {
                let f = other.0[col].clone();
                for c in 0..nu {
                    other.0[c] -= &f * &row[c];
                }
                other.1 -= &f * &rhs;
            }
        }
        mat[r] = (row, rhs);
        pivots.push(col);
        r += 1;
    }
    if pivots.len() < nu || mat[r..].iter().any(|x| !x.1.is_zero()) {
        return None;
    }
    let mut out: BTreeMap<Mat, LaurentPoly> = BTreeMap::new();
    out.insert(top.clone(), LaurentPoly::one());
    for (i, &col) in pivots.iter().enumerate() {
        // form: Σ x + const = 0
        let val = -mat[i].1.clone();
        assert!(val.is_integer(), "non-integral coefficient");
        let (m, k) = &unknowns[col];
        let e = out.entry(m.clone()).or_insert_with(LaurentPoly::zero);
        *e += &LaurentPoly::monomial(val.to_integer(), -k);
    }
    out.retain(|_, p| !p.is_zero());
    Some(out)
}

#[test]
fn n2_d2_table_matches_brute_force_solve() {
    let eng = Engine::new(TypeA::finite(2));
    for ro in compositions(2, 2) {
        for co in compositions(2, 2) {
            let block = finite_block(&ro, &co);
            for a in &block {
                let want = brute_force(&eng, a, &block).expect("unique solution");
                let got = eng.kl_table(a).unwrap();
                assert_eq!(got.entries, want, "{{{a}}}");
            }
        }
    }
}

#[test]
fn n3_d2_table_matches_brute_force_solve() {
    let eng = Engine::new(TypeA::finite(3));
    for ro in compositions(2, 3) {
        for co in compositions(2, 3) {
            let block = finite_block(&ro, &co);
            for a in &block {
                let want = brute_force(&eng, a, &block).expect("unique solution");
                assert_eq!(eng.kl_table(a).unwrap().entries, want, "{{{a}}}");
            }
        }
    }
}

#[test]
fn minimal_element_is_its_own_canonical_element() {
    let eng = Engine::new(TypeA::finite(2));
    let a = Mat::finite(&[vec![2, 0], vec![0, 1]]).unwrap();
    assert_eq!(*eng.canonical(&a).unwrap(), Elem::basis(a));
    // a block with a single element
    let b = Mat::finite(&[vec![0, 2], vec![0, 0]]).unwrap();
    assert_eq!(*eng.canonical(&b).unwrap(), Elem::basis(b));
}

#[test]
fn known_s2_element() {
    // {[[0,1],[1,0]]} = [[0,1],[1,0]] + v^{-1}[[1,0],[0,1]] in S(2,2)
    let eng = Engine::new(TypeA::finite(2));
    let w = Mat::finite(&[vec![0, 1], vec![1, 0]]).unwrap();
    let e = Mat::finite(&[vec![1, 0], vec![0, 1]]).unwrap();
    let want = Elem::from_terms([(w.clone(), LaurentPoly::one()), (e, LaurentPoly::v_pow(-1))]);
    assert_eq!(*eng.canonical(&w).unwrap(), want);
}

#[test]
fn finite_soundness_and_order_independence() {
    for (n, d) in [(2usize, 3u32), (3, 3)] {
        let eng = Engine::new(TypeA::finite(n));
        let mut tables = Vec::new();
        for ro in compositions(d, n) {
            for co in compositions(d, n) {
                for a in finite_block(&ro, &co) {
                    let e = eng.canonical(&a).unwrap();
                    let bad = check_canonical(&eng, &a, &e).unwrap();
                    assert!(bad.is_empty(), "{bad:?}");
                    assert_eq!(eng.canonical_reversed(&a).unwrap(), *e);
                    tables.push(KlTable::from_elem(a.clone(), &e));
                }
            }
        }
        let cert = verify_epsilon_rigidity(&tables, n as i64 - 1);
        assert!(cert.passed(), "{:?}", cert.witnesses);
    }
}

#[test]
fn affine_soundness_small_slices() {
    let eng = Engine::new(TypeA::affine(2));
    let mut tables = Vec::new();
    for ro in compositions(2, 2) {
        for co in compositions(2, 2) {
            for a in periodic_block(&ro, &co, 2) {
                let e = eng.canonical(&a).unwrap();
                let bad = check_canonical(&eng, &a, &e).unwrap();
                assert!(bad.is_empty(), "{bad:?}");
                tables.push(eng.kl_table(&a).unwrap());
            }
        }
    }
    assert!(verify_epsilon_rigidity(&tables, 2).passed());
}

#[test]
fn fake_table_fails_rigidity() {
    let top = Mat::finite(&[vec![0, 1], vec![1, 0]]).unwrap();
    let other = Mat::finite(&[vec![1, 0], vec![1, 0]]).unwrap();
    let mut entries = BTreeMap::new();
    entries.insert(top.clone(), LaurentPoly::one());
    entries.insert(other, LaurentPoly::v_pow(-1));
    let cert = verify_epsilon_rigidity(&[KlTable { top, entries }], 1);
    assert!(!cert.passed());
}

#[test]
fn perturbation_breaks_a_defining_property() {
    let eng = Engine::new(TypeA::finite(2));
    let w = Mat::finite(&[vec![0, 1], vec![1, 0]]).unwrap();
    let e = Mat::finite(&[vec![1, 0], vec![0, 1]]).unwrap();
    let can = eng.canonical(&w).unwrap();
    for bump in [LaurentPoly::one(), &LaurentPoly::v_pow(1) + &LaurentPoly::v_pow(-1)] {
        let mut x = (*can).clone();
        x.add_term(e.clone(), &bump);
        assert!(!check_canonical(&eng, &w, &x).unwrap().is_empty());
    }
}

#[test]
fn change_of_basis_round_trip() {
    let eng = Engine::new(TypeA::finite(3));
    for ro in compositions(3, 3) {
        for co in compositions(3, 3) {
            for a in finite_block(&ro, &co) {
                let x = Elem::basis(a.clone());
                let c = eng.to_canonical(&x).unwrap();
                let mut back = Elem::zero();
                for (b, p) in c.iter() {
                    back.add_scaled(&eng.canonical(b).unwrap(), p);
                }
                assert_eq!(back, x, "[{a}]");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn canonical_elements_of_s3_are_bar_invariant(idx in 0usize..10_000) {
        let eng = Engine::new(TypeA::finite(3));
        let comps = compositions(3, 3);
        let ro = &comps[idx % comps.len()];
        let co = &comps[(idx / comps.len()) % comps.len()];
        let block = finite_block(ro, co);
        let a = &block[idx % block.len()];
        let e = eng.canonical(a).unwrap();
        prop_assert_eq!(eng.bar(&e).unwrap(), (*e).clone());
    }
}
