use std::collections::BTreeSet;

use proptest::prelude::*;

use schurlab::combinatorics::{compositions, finite_block, j_block, j_compositions};
use schurlab::flag_oracle::subspace::{all_subspaces, form};
use schurlab::flag_oracle::{classify, fiber_degree, Field, Guards, Oracle};
use schurlab::{Mat, SchurError};

fn gauss(m: u64, k: u64, q: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= q.pow((m - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Number of flags of type `comp` as a product of Gaussian binomials.
fn multinomial(comp: &[u32], q: u64) -> u64 {
    let mut left: u64 = comp.iter().map(|&c| c as u64).sum();
    let mut out = 1;
    for &c in comp {
        out *= gauss(left, c as u64, q);
        left -= c as u64;
    }
    out
}

#[test]
fn field_sizes_and_guards() {
    for q in [3, 5, 7, 9, 11, 13] {
        assert_eq!(Oracle::new(q).unwrap().q(), q);
    }
    assert!(matches!(Oracle::new(4), Err(SchurError::Validation(_))));
    let tight = Guards { max_q: 5, max_dim: 3, max_iso_dim: 3 };
    assert!(matches!(Oracle::with_guards(7, tight), Err(SchurError::ScaleExceeded(_))));
    let o = Oracle::with_guards(3, tight).unwrap();
    assert!(matches!(o.flags(&[2, 2]), Err(SchurError::ScaleExceeded(_))));
}

fn field_elems() -> impl Strategy<Value = (usize, u8, u8, u8)> {
    prop::sample::select(vec![3usize, 5, 7, 9, 11, 13])
        .prop_flat_map(|q| (Just(q), 0..q as u8, 0..q as u8, 0..q as u8))
}

proptest! {
    #[test]
    fn field_axioms((q, a, b, c) in field_elems()) {
        let f = Field::new(q).unwrap();
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}

#[test]
fn nonzero_elements_form_a_cyclic_group() {
    for q in [3usize, 5, 7, 9, 11, 13] {
        let f = Field::new(q).unwrap();
        let has_generator = (1..q as u8).any(|g| {
            let mut seen = BTreeSet::new();
            let mut x = 1u8;
            for _ in 0..q - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            seen.len() == q - 1
        });
        assert!(has_generator, "q = {q}");
    }
}

#[test]
fn subspace_counts_are_gaussian() {
    for q in [3usize, 5] {
        let f = Field::new(q).unwrap();
        for m in 0..=3 {
            for k in 0..=m {
                let subs = all_subspaces(&f, m, k);
                assert_eq!(subs.len() as u64, gauss(m as u64, k as u64, q as u64));
                for s in &subs {
                    assert_eq!(s.dim(), k);
                    assert_eq!(s.perp(&f).dim(), m - k);
                }
            }
        }
    }
}

#[test]
fn dimension_formula_for_pairs() {
    let f = Field::new(3).unwrap();
    let lines = all_subspaces(&f, 3, 1);
    let planes = all_subspaces(&f, 3, 2);
    for a in &lines {
        for b in &planes {
            assert_eq!(a.dim_sum(&f, b) + a.dim_intersection(&f, b), 3);
            assert!(a.contains(&f, &a.intersect(&f, b)));
        }
    }
}

#[test]
fn flag_counts_are_multinomial() {
    for q in [3usize, 5] {
        let o = Oracle::new(q).unwrap();
        for n in 1..=3 {
            for d in 0..=3 {
                for c in compositions(d, n) {
                    assert_eq!(o.flags(&c).unwrap().len() as u64, multinomial(&c, q as u64), "{c:?}");
                }
            }
        }
    }
}

#[test]
fn isotropic_line_counts() {
    // lines on a smooth quadric in dimension 2r+1 over F_q: (q^{2r} - 1)/(q - 1)
    for q in [3usize, 5, 7] {
        let o = Oracle::new(q).unwrap();
        for (comp, r) in [(vec![1, 1, 1], 1u32), (vec![1, 3, 1], 2)] {
            let want = (q.pow(2 * r) - 1) / (q - 1);
            assert_eq!(o.isotropic_flags(&comp).unwrap().len(), want);
        }
        for l in o.isotropic_flags(&[1, 1, 1]).unwrap().iter() {
            let x = &l.steps[0].rows()[0];
            assert_eq!(form(o.field(), x, x), 0);
        }
    }
}

#[test]
fn relative_positions_are_exactly_the_block() {
    let o = Oracle::new(3).unwrap();
    for ro in compositions(3, 3) {
        for co in compositions(3, 3) {
            let v = o.flags(&ro).unwrap()[0].clone();
            let mut seen = BTreeSet::new();
            let mut total = 0;
            for w in o.flags(&co).unwrap().iter() {
                seen.insert(classify(o.field(), &v, w));
                total += 1;
            }
            assert_eq!(seen, finite_block(&ro, &co).into_iter().collect::<BTreeSet<_>>());
            let fibers: u64 = seen.iter().map(|a| o.fiber_count(a, false).unwrap()).sum();
            assert_eq!(fibers, total);
        }
    }
}

#[test]
fn isotropic_positions_are_symmetric_blocks() {
    let o = Oracle::new(3).unwrap();
    for d in 0..=2 {
        for ro in j_compositions(d, 3) {
            for co in j_compositions(d, 3) {
                let block: BTreeSet<Mat> = j_block(&ro, &co).into_iter().collect();
                let fibers: u64 = block.iter().map(|a| o.fiber_count(a, true).unwrap()).sum();
                assert_eq!(fibers as usize, o.isotropic_flags(&co).unwrap().len());
            }
        }
    }
}

#[test]
fn fiber_degrees_are_d_statistics() {
    for d in 1..=2 {
        for ro in compositions(d, 3) {
            for co in compositions(d, 3) {
                for a in finite_block(&ro, &co) {
                    assert_eq!(fiber_degree(&a, false).unwrap() as i64, a.d_stat(), "{a}");
                }
            }
        }
    }
    for d in 0..=1 {
        for ro in j_compositions(d, 3) {
            for co in j_compositions(d, 3) {
                for a in j_block(&ro, &co) {
                    assert_eq!(fiber_degree(&a, true).unwrap() as i64, a.dj_stat().unwrap(), "{a}");
                }
            }
        }
    }
}

#[test]
fn convolution_with_a_diagonal_is_identity() {
    let o = Oracle::new(5).unwrap();
    for a in finite_block(&[1, 1, 1], &[2, 0, 1]) {
        let t = o.convolve(&Mat::diag(&[1, 1, 1], false), &a, false).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[&a], 1);
        let t = o.convolve(&a, &Mat::diag(&[2, 0, 1], false), false).unwrap();
        assert_eq!(t[&a], 1);
    }
    let b = Mat::diag(&[1, 1], false);
    let a = Mat::diag(&[2, 0], false);
    assert!(matches!(o.convolve(&b, &a, false), Err(SchurError::CompositionMismatch(_))));
}
