//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Every comparison is exact (Laurent polynomials with integer coefficients,
//! integer point counts), so the pinned tolerance is zero throughout.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use schurlab::algebra::{Elem, Engine, Gen};
use schurlab::canonical::{check_canonical, verify_epsilon_rigidity};
use schurlab::certificate::Certificate;
use schurlab::coideal::{
    generator_table, transferred_generator_table, verify_coideal_relations, verify_embedding_formulas,
    verify_embedding_injective, verify_i_formulas, verify_i_transfer_generators, verify_j_counting,
    verify_j_renormalized, verify_j_transfer_generators, verify_j_untwisted_generators, verify_mixed_coassociativity,
    compare_j_counts, j_matrices, JCoproduct, JFamily, JStage,
};
use schurlab::coproduct::delta_elem;
use schurlab::duality::{
    check_tensor_expansion, kl_comparisons, verify_parabolic_kl, verify_tensor_positivity, verify_zeta_standard,
    TensorSpaces,
};
use schurlab::flag_oracle::Oracle;
use schurlab::schur_a::{
    canonical_tables, compare_df_counts, df_product, epsilon_period, semisimple_slice, slice,
    verify_affine_delta_generators, verify_canonical_soundness, verify_df_oracle, verify_transfer_a_generators,
    verify_window_agreement, verify_xi, AffineStage, TypeA, TypeACoproduct,
};
use schurlab::stability::{
    basis_matrices, check_positive_tensor, detect_stabilization, tensor_to_canonical, verify_embedding_positivity,
    verify_idempotented_comult_positivity, verify_transfer_positivity, Engines, Kind,
};
use schurlab::{LaurentPoly, Mat, Result};

const Q_LIST: [usize; 5] = [3, 5, 7, 9, 11];
const XI_C: [i64; 5] = [-2, -1, 0, 1, 2];

/// Accumulates certificates and free-form failures for one criterion.
#[derive(Default)]
struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn cert(&mut self, c: Result<Certificate>) {
        match c {
            Ok(c) => {
                self.checked += c.checked;
                if !c.passed() {
                    let w = c.witnesses.first().cloned().unwrap_or_default();
                    self.failures.push(format!("{} {}: {w}", c.theorem, c.parameters));
                }
            }
            Err(e) => self.failures.push(format!("error: {e}")),
        }
    }

    fn expect(&mut self, ok: bool, what: String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what);
        }
    }
}

fn finite_and_affine_slices() -> Vec<(Engine<TypeA>, Vec<Mat>)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let eng = Engine::new(TypeA::finite(n));
        let mats: Vec<Mat> = (0..=3).flat_map(|d| slice(n, d, false, 0)).collect();
        out.push((eng, mats));
    }
    for n in 1..=3 {
        let eng = Engine::new(TypeA::affine(n));
        let mats: Vec<Mat> = (0..=3).flat_map(|d| slice(n, d, true, 2)).collect();
        out.push((eng, mats));
    }
    out
}

fn c1_df_oracle() -> Outcome {
    let mut o = Outcome::default();
    for n in [2, 3] {
        for d in 0..=3 {
            o.cert(verify_df_oracle(n, d, &Q_LIST));
        }
    }
    o
}

fn c2_canonical(slices: &[(Engine<TypeA>, Vec<Mat>)]) -> Outcome {
    let mut o = Outcome::default();
    for (eng, mats) in slices {
        o.cert(verify_canonical_soundness(eng, mats));
    }
    o
}

fn c3_xi(slices: &[(Engine<TypeA>, Vec<Mat>)]) -> Outcome {
    let mut o = Outcome::default();
    for (eng, mats) in slices {
        match canonical_tables(eng, mats) {
            Ok(t) => o.cert(Ok(verify_xi(&t, epsilon_period(eng.family()), &XI_C))),
            Err(e) => o.cert(Err(e)),
        }
    }
    o
}

fn c4_finite_positivity() -> Outcome {
    let mut o = Outcome::default();
    for d in 0..=3 {
        for d1 in 0..=d {
            o.cert(verify_idempotented_comult_positivity(Kind::A, 3, d, d1));
        }
    }
    o
}

fn c5_affine_delta() -> Outcome {
    let mut o = Outcome::default();
    for n in [2, 3] {
        for d in 0..=3 {
            for d1 in 0..=d {
                o.cert(verify_affine_delta_generators(n, d1, d - d1));
            }
            o.cert(verify_window_agreement(n, d));
        }
    }
    o
}

fn c6_j_comultiplication() -> Outcome {
    let mut o = Outcome::default();
    for d in 1..=2 {
        o.cert(verify_j_counting(3, d, &[3, 5, 7]));
    }
    for d in 0..=3 {
        o.cert(verify_j_untwisted_generators(3, d));
        o.cert(verify_j_renormalized(3, d));
        o.cert(verify_mixed_coassociativity(3, d));
    }
    o
}

fn c7_embedding() -> Outcome {
    let mut o = Outcome::default();
    for d in 0..=3 {
        o.cert(verify_embedding_formulas(3, d));
        o.cert(verify_embedding_positivity(Kind::J, 3, d));
    }
    for d in 0..=2 {
        o.cert(verify_embedding_injective(3, d));
    }
    o
}

fn c8_transfer() -> Outcome {
    let mut o = Outcome::default();
    for (n, d) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        o.cert(verify_transfer_a_generators(n, d));
    }
    for d in [3, 4] {
        o.cert(verify_j_transfer_generators(3, d));
    }
    for d in [2, 3] {
        o.cert(verify_i_transfer_generators(3, d));
    }
    for (kind, n, ds) in [(Kind::A, 2, 2..=3), (Kind::A, 3, 3..=3), (Kind::J, 3, 3..=3), (Kind::I, 3, 2..=3)] {
        for d in ds {
            o.cert(verify_transfer_positivity(kind, n, d));
        }
    }
    for (kind, n, seed_d, max_d) in [(Kind::A, 2, 1, 5), (Kind::A, 3, 1, 4), (Kind::J, 3, 0, 6), (Kind::I, 3, 1, 3)] {
        let engines = match Engines::new(kind, n) {
            Ok(e) => e,
            Err(e) => {
                o.cert(Err(e));
                continue;
            }
        };
        for seed in basis_matrices(kind, n, seed_d) {
            match detect_stabilization(kind, &engines, &seed, max_d) {
                Ok(s) => o.expect(
                    s.shift == kind.expected_shift(n),
                    format!("{kind:?} seed {seed}: shift {:?}", s.shift),
                ),
                Err(e) => o.cert(Err(e)),
            }
        }
    }
    o
}

fn c9_duality() -> Outcome {
    let mut o = Outcome::default();
    for (d, n) in [(1, 3), (2, 3), (3, 3), (1, 5), (2, 5)] {
        let ts = match TensorSpaces::new(d, n) {
            Ok(t) => t,
            Err(e) => {
                o.cert(Err(e));
                continue;
            }
        };
        o.cert(verify_zeta_standard(&ts));
        o.cert(verify_tensor_positivity(&ts));
        o.cert(kl_comparisons(&ts).map(|rows| verify_parabolic_kl(&rows, n, d)));
    }
    o
}

fn c10_ischur() -> Outcome {
    let mut o = Outcome::default();
    for d in 0..=2 {
        o.cert(verify_i_formulas(3, d));
        o.cert(verify_embedding_positivity(Kind::I, 3, d));
        for d1 in 0..=d {
            o.cert(verify_idempotented_comult_positivity(Kind::I, 3, d, d1));
        }
    }
    o
}

fn c11_relations() -> Outcome {
    let mut o = Outcome::default();
    for n in [3, 5] {
        let fam = match JFamily::new(n) {
            Ok(f) => f,
            Err(e) => {
                o.cert(Err(e));
                continue;
            }
        };
        let eng = Engine::new(fam.clone());
        for d in 0..=3 {
            o.cert(transferred_generator_table(&fam, d).and_then(|t| verify_coideal_relations(&eng, d, &t)));
            o.cert(generator_table(&fam, d).and_then(|t| verify_coideal_relations(&eng, d, &t)));
        }
    }
    o
}

/// Each verifier must reject a deliberately corrupted input.
fn c12_negative_controls() -> Outcome {
    let mut o = Outcome::default();
    let mut rejects = |name: &str, r: Result<bool>| match r {
        Ok(rejected) => o.expect(rejected, format!("{name}: corrupted input accepted")),
        Err(e) => o.expect(false, format!("{name}: error {e}")),
    };

    // multiplication formula with one sign flipped
    rejects("df-counts", (|| {
        let b = semisimple_slice(3, 2).into_iter().find(|b| !b.is_diagonal()).expect("nondiagonal B");
        let a = slice(3, 2, false, 0).into_iter().find(|a| a.ro() == b.co() && !a.is_diagonal()).expect("A");
        let mut pred = df_product(&b, &a)?;
        pred[0].1 = -pred[0].1.clone();
        let counts = Oracle::new(3)?.convolve(&b, &a, false)?;
        Ok(!compare_df_counts(&b, &a, &pred, &counts, 3)?.is_empty())
    })());

    // canonical element with one lower coefficient negated
    rejects("canonical", (|| {
        let eng = Engine::new(TypeA::finite(3));
        for a in slice(3, 3, false, 0) {
            let e = (*eng.canonical(&a)?).clone();
            let lower = e.iter().find(|(m, _)| **m != a).map(|(m, p)| (m.clone(), p.clone()));
            if let Some((m, p)) = lower {
                let bad = &e - &Elem::from_terms([(m, p.scale(&2.into()))]);
                return Ok(!check_canonical(&eng, &a, &bad)?.is_empty());
            }
        }
        Ok(false)
    })());

    // ε-class broken by a foreign entry in a canonical table
    rejects("epsilon-rigidity", (|| {
        let eng = Engine::new(TypeA::affine(2));
        let mats = slice(2, 2, true, 2);
        let (a, b) = mats
            .iter()
            .flat_map(|a| mats.iter().map(move |b| (a, b)))
            .find(|(a, b)| a.ro() == b.ro() && a.co() == b.co() && a.epsilon(1) != b.epsilon(1))
            .map(|(a, b)| (a.clone(), b.clone()))
            .expect("two ε-classes in one block");
        let mut t = eng.kl_table(&a)?;
        t.entries.insert(b, LaurentPoly::v_pow(-1));
        Ok(!verify_epsilon_rigidity([&t], 2).passed() && !verify_xi([&t], 2, &XI_C).passed())
    })());

    // comultiplication positivity with one coefficient negated
    rejects("comult-positivity", (|| {
        let fam = TypeA::finite(3);
        let eng = Engine::new(fam.clone());
        let cp = TypeACoproduct::new(fam, 1, 1, AffineStage::Twisted);
        let a = Mat::finite(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]])?;
        let can = eng.canonical(&a)?;
        let t = tensor_to_canonical(&eng, &eng, &delta_elem(&cp, &eng, &can)?)?;
        let (k, c) = t.iter().next().map(|(k, c)| (k.clone(), c.clone())).expect("nonzero");
        let mut bad = t.clone();
        bad.add_term(k, &c.scale(&(-2).into()));
        Ok(check_positive_tensor("Δ", &t).is_empty() && !check_positive_tensor("Δ", &bad).is_empty())
    })());

    // isotropic counting with one sign flipped
    rejects("j-counting", (|| {
        let fam = JFamily::new(3)?;
        let eng = Engine::new(fam.clone());
        let cp = JCoproduct::new(fam, 1, 1, JStage::Untwisted);
        let a = j_matrices(3, 2).into_iter().find(|m| !m.is_diagonal()).expect("A");
        let t = delta_elem(&cp, &eng, &Elem::basis(a.clone()))?;
        let counts = Oracle::new(3)?.comult_count_isotropic(&a, 1)?;
        let bad = t.scale(&(-1).into());
        Ok(compare_j_counts(&a, &t, &counts, 3)?.is_empty() && !compare_j_counts(&a, &bad, &counts, 3)?.is_empty())
    })());

    // tensor expansion with a flipped sign
    rejects("tensor-positivity", (|| {
        let ts = TensorSpaces::new(2, 3)?;
        let a = ts.basis().swap_remove(0);
        let mut e: BTreeMap<_, _> = ts.zeta_canonical_expansion(&a)?;
        let accepted = check_tensor_expansion(&a, &e).is_empty();
        if let Some(p) = e.get_mut(&a) {
            *p = -p.clone();
        }
        Ok(accepted && !check_tensor_expansion(&a, &e).is_empty())
    })());

    // parabolic KL with a corrupted type-B polynomial
    rejects("parabolic-kl", (|| {
        let ts = TensorSpaces::new(2, 3)?;
        let mut rows = kl_comparisons(&ts)?;
        rows[0].p_type_b = &rows[0].p_type_b + &LaurentPoly::v_pow(-1);
        Ok(!verify_parabolic_kl(&rows, 3, 2).passed())
    })());

    // coideal relations on a table with e_1 negated
    rejects("coideal-relations", (|| {
        let fam = JFamily::new(3)?;
        let eng = Engine::new(fam.clone());
        let mut t = generator_table(&fam, 2)?;
        let e = t[&Gen::E(1, 1)].scale(&(-1).into());
        t.insert(Gen::E(1, 1), e);
        Ok(!verify_coideal_relations(&eng, 2, &t)?.passed())
    })());
    o
}

fn main() -> ExitCode {
    let start = Instant::now();
    let slices = finite_and_affine_slices();
    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Run)> = vec![
        ("multiplication formulas vs flag oracle, n∈{2,3}, d≤3, q∈{3,5,7,9,11} + interpolation", Box::new(c1_df_oracle)),
        ("canonical soundness (bar, P∈v⁻¹ℤ[v⁻¹], ε-rigidity), finite n≤3 d≤3, affine n≤3 d≤3 spread≤2", Box::new(|| c2_canonical(&slices))),
        ("ξ eigenvectors, c∈[-2,2], same slices", Box::new(|| c3_xi(&slices))),
        ("finite Δ positivity, n=3, d≤3", Box::new(c4_finite_positivity)),
        ("affine Δ†/Δ generator formulas and window agreement, n∈{2,3}, d≤3", Box::new(c5_affine_delta)),
        ("ȷ comultiplication: counts at q∈{3,5,7}, renormalized formulas, mixed coassociativity", Box::new(c6_j_comultiplication)),
        ("embedding ȷ_d: generator images, injectivity d≤2, positivity", Box::new(c7_embedding)),
        ("transfer maps: generator images, positivity, stabilization shifts", Box::new(c8_transfer)),
        ("duality: ζ on standard bases, tensor positivity, parabolic KL", Box::new(c9_duality)),
        ("ıSchur: Δ^ı and ı_d formulas, positivity, n=3, d≤2", Box::new(c10_ischur)),
        ("coideal relations on φ^ȷ images and generators, n∈{3,5}, d≤3", Box::new(c11_relations)),
        ("negative controls: corrupted inputs rejected", Box::new(c12_negative_controls)),
    ];
    let mut all_pass = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let pass = out.failures.is_empty();
        all_pass &= pass;
        println!(
            "criterion {:>2}: {} [{} checks, tolerance exact, {:.1}s] {name}",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            out.checked,
            t.elapsed().as_secs_f64()
        );
        for f in out.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    println!("acceptance: {} in {:.1}s", if all_pass { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
