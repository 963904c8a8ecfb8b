//! Checks of the ȷ and ı formulas against independent computations: point
//! counts, generator words in type A, and direct multiplication.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::*;
use crate::algebra::unit;
use crate::certificate::Certificate;
use crate::combinatorics::j_block;
use crate::flag_oracle::Oracle;
use crate::schur_a::{AffineStage, TypeACoproduct};

fn tensor_of(x: &Elem, y: &Elem) -> Tensor {
    let mut t = Tensor::zero();
    for (a, c) in x.iter() {
        for (b, e) in y.iter() {
            t.add_term(vec![a.clone(), b.clone()], &(c * e));
        }
    }
    t
}

/// A type-A word acting on the unit of `S_d` with `n` steps.
fn a_word(n: usize, w: &[Gen], d: u32) -> Result<Elem> {
    let fam = TypeA::finite(n);
    act_word(&fam, w, &unit(&fam, d))
}

fn empty_middle(m: &Mat) -> bool {
    let mid = (m.n() as i32 + 1) / 2;
    (1..=m.n() as i32).all(|k| m.get(mid, k) == 0 && m.get(k, mid) == 0)
}

/// A type-A word between two copies of the idempotent that kills the middle
/// row and column.
fn a_word_j(n: usize, w: &[Gen], d: u32) -> Result<Elem> {
    let fam = TypeA::finite(n);
    let x = act_word(&fam, w, &unit(&fam, d).filter(empty_middle))?;
    Ok(x.filter(empty_middle))
}

fn j_word(fam: &JFamily, w: &[Gen], d: u32) -> Result<Elem> {
    act_word(fam, w, &unit(fam, d))
}

fn degree_one_gens(fam: &JFamily) -> Vec<Gen> {
    (1..=fam.r())
        .flat_map(|i| [Gen::E(i, 1), Gen::F(i, 1), Gen::K(i, 1), Gen::K(i, -1)])
        .collect()
}

fn i_gens(fam: &JFamily) -> Vec<IGen> {
    let mut out: Vec<IGen> = (1..fam.r())
        .flat_map(|i| [IGen::E(i), IGen::F(i), IGen::K(i, 1), IGen::K(i, -1)])
        .collect();
    out.push(IGen::T);
    out
}

/// All `Ξ^ȷ_d` matrices.
pub fn j_matrices(n: usize, d: u32) -> Vec<Mat> {
    let comps = j_compositions(d, n);
    let mut out = Vec::new();
    for ro in &comps {
        for co in &comps {
            out.extend(j_block(ro, co));
        }
    }
    out
}

/// Right-hand side of the untwisted three-term formulas on `e_i`, `f_i`,
/// `k_i^{±1}`, assembled from words in `S^ȷ_{d'}` and `S_{d''}`.
pub fn untwisted_generator_formula(fam: &JFamily, g: &Gen, d1: u32, d2: u32) -> Result<Tensor> {
    let n = fam.n() as i32;
    let t = |l: &[Gen], r: &[Gen]| -> Result<Tensor> { Ok(tensor_of(&j_word(fam, l, d1)?, &a_word(fam.n(), r, d2)?)) };
    let h = Gen::H;
    Ok(match *g {
        Gen::E(i, 1) => {
            &(&t(&[Gen::E(i, 1)], &[h(i + 1, 1), h(n - i, -1)])? + &t(&[h(i + 1, -1)], &[Gen::E(i, 1), h(n - i, -1)])?)
                + &t(&[h(i + 1, 1)], &[Gen::F(n - i, 1), h(i + 1, 1)])?
        }
        Gen::F(i, 1) => {
            &(&t(&[Gen::F(i, 1)], &[h(i, -1), h(n + 1 - i, 1)])? + &t(&[h(i, 1)], &[Gen::F(i, 1), h(n + 1 - i, 1)])?)
                + &t(&[h(i, -1)], &[Gen::E(n - i, 1), h(i, -1)])?
        }
        Gen::K(i, s) => t(&[Gen::K(i, s)], &[Gen::K(i, s), Gen::K(n - i, -s)])?,
        _ => return Err(SchurError::Validation(format!("{g} is not a degree-one generator"))),
    })
}

/// Right-hand side of the renormalized formulas on `e_i`, `f_i`, `k_i^{±1}`.
pub fn renormalized_generator_formula(fam: &JFamily, g: &Gen, d1: u32, d2: u32) -> Result<Tensor> {
    let n = fam.n() as i32;
    let t = |l: &[Gen], r: &[Gen]| -> Result<Tensor> { Ok(tensor_of(&j_word(fam, l, d1)?, &a_word(fam.n(), r, d2)?)) };
    Ok(match *g {
        Gen::E(i, 1) => {
            &(&t(&[Gen::E(i, 1)], &[Gen::K(i, 1)])? + &t(&[], &[Gen::E(i, 1)])?)
                + &t(&[Gen::K(i, 1)], &[Gen::F(n - i, 1), Gen::K(i, 1)])?
        }
        Gen::F(i, 1) => {
            &(&t(&[Gen::F(i, 1)], &[Gen::K(n - i, 1)])? + &t(&[Gen::K(i, -1)], &[Gen::K(n - i, 1), Gen::F(i, 1)])?)
                + &t(&[], &[Gen::E(n - i, 1)])?
        }
        Gen::K(i, s) => t(&[Gen::K(i, s)], &[Gen::K(i, s), Gen::K(n - i, -s)])?,
        _ => return Err(SchurError::Validation(format!("{g} is not a degree-one generator"))),
    })
}

/// Compare the predicted counts of an untwisted comultiplication of `[A]`
/// with isotropic flag counts at one `q`. The prediction is read off the
/// tensor after undoing the normalization `v^{-dim}` of each factor.
pub fn compare_j_counts(a: &Mat, predicted: &Tensor, counts: &BTreeMap<(Mat, Mat), u64>, q: i64) -> Result<Vec<String>> {
    let da = a.dj_stat()?;
    let mut pred = BTreeMap::new();
    for (k, c) in predicted.iter() {
        let e = da - k[0].dj_stat()? - k[1].d_stat();
        let val = c
            .shift(e)
            .eval_q(q)
            .ok_or_else(|| SchurError::ConsistencyFailure(format!("odd exponent in {c}")))?;
        if !val.is_zero() {
            pred.insert((k[0].clone(), k[1].clone()), val);
        }
    }
    let got: BTreeMap<(Mat, Mat), BigRational> = counts
        .iter()
        .map(|(k, v)| (k.clone(), BigRational::from_integer(BigInt::from(*v))))
        .collect();
    let mut keys: Vec<&(Mat, Mat)> = pred.keys().chain(got.keys()).collect();
    keys.sort();
    keys.dedup();
    Ok(keys
        .into_iter()
        .filter(|k| pred.get(*k) != got.get(*k))
        .map(|k| format!("q = {q}, A = {a}, ({}, {}): formula {:?} vs count {:?}", k.0, k.1, pred.get(k), got.get(k)))
        .collect())
}

/// `Δ̃^ȷ` on generators is given by the untwisted three-term formulas.
pub fn verify_j_untwisted_generators(n: usize, d: u32) -> Result<Certificate> {
    let fam = JFamily::new(n)?;
    let mut cert = Certificate::new("j-comultiplication-generators")
        .with_parameters(serde_json::json!({"type": "jmath", "n": n, "d": d}));
    for d1 in 0..=d {
        let cp = JCoproduct::new(fam.clone(), d1, d - d1, JStage::Untwisted);
        for g in degree_one_gens(&fam) {
            let got = delta_word(&cp, std::slice::from_ref(&g), d)?;
            let want = untwisted_generator_formula(&fam, &g, d1, d - d1)?;
            cert.check((got != want).then(|| format!("{g}, split {d1}+{}", d - d1)));
        }
    }
    Ok(cert)
}

/// `Δ̃^ȷ([A])`, extended multiplicatively from the generator formulas, against
/// isotropic flag counts for every `A ∈ Ξ^ȷ_d`, every split with `d'' ≥ 1`
/// and every listed `q`.
pub fn verify_j_counting(n: usize, d: u32, qs: &[usize]) -> Result<Certificate> {
    let fam = JFamily::new(n)?;
    let eng = Engine::new(fam.clone());
    let mut cert = Certificate::new("j-comultiplication-counting")
        .with_parameters(serde_json::json!({"type": "jmath", "n": n, "d": d, "q": qs}));
    let mats = j_matrices(n, d);
    for d2 in 1..=d {
        let cp = JCoproduct::new(fam.clone(), d - d2, d2, JStage::Untwisted);
        let deltas: Vec<Tensor> = mats
            .iter()
            .map(|a| delta_elem(&cp, &eng, &Elem::basis(a.clone())))
            .collect::<Result<_>>()?;
        for &q in qs {
            let oracle = Oracle::new(q)?;
            for (a, t) in mats.iter().zip(&deltas) {
                let counts = oracle.comult_count_isotropic(a, d2)?;
                cert.count();
                for w in compare_j_counts(a, t, &counts, q as i64)? {
                    cert.fail(format!("split {}+{d2}: {w}", d - d2));
                }
            }
        }
    }
    Ok(cert)
}

/// `Δ^ȷ_v` on generators against the renormalized three-term formulas.
pub fn verify_j_renormalized(n: usize, d: u32) -> Result<Certificate> {
    let fam = JFamily::new(n)?;
    let mut cert = Certificate::new("j-comultiplication-renormalized")
        .with_parameters(serde_json::json!({"type": "jmath", "n": n, "d": d}));
    for d1 in 0..=d {
        let cp = JCoproduct::new(fam.clone(), d1, d - d1, JStage::Renormalized);
        for g in degree_one_gens(&fam) {
            let got = delta_word(&cp, std::slice::from_ref(&g), d)?;
            let want = renormalized_generator_formula(&fam, &g, d1, d - d1)?;
            cert.check((got != want).then(|| format!("{g}, split {d1}+{}: {got:?} vs {want:?}", d - d1)));
        }
    }
    Ok(cert)
}

/// Apply a comultiplication to one factor of a tensor, splicing the two new
/// factors in place.
fn apply_to_factor<F: Family>(cp: &dyn Coproduct, eng: &Engine<F>, t: &Tensor, pos: usize) -> Result<Tensor> {
    let mut out = Tensor::zero();
    let mut memo: BTreeMap<Mat, Tensor> = BTreeMap::new();
    for (k, c) in t.iter() {
        if !memo.contains_key(&k[pos]) {
            memo.insert(k[pos].clone(), delta_elem(cp, eng, &Elem::basis(k[pos].clone()))?);
        }
        for (kk, x) in memo[&k[pos]].iter() {
            let mut key = k[..pos].to_vec();
            key.extend(kk.iter().cloned());
            key.extend(k[pos + 1..].iter().cloned());
            out.add_term(key, &(c * x));
        }
    }
    Ok(out)
}

/// `(Δ^ȷ_v ⊗ 1)Δ^ȷ_v = (1 ⊗ Δ_v)Δ^ȷ_v` on every standard basis element of
/// `S^ȷ_d`, for every split `d = d' + d'' + d'''`. Each side is compared
/// block by block, so a failure names the weights involved.
pub fn verify_mixed_coassociativity(n: usize, d: u32) -> Result<Certificate> {
    let fam = JFamily::new(n)?;
    let eng = Engine::new(fam.clone());
    let aeng = Engine::new(TypeA::finite(n));
    let mut cert = Certificate::new("mixed-coassociativity")
        .with_parameters(serde_json::json!({"type": "jmath", "n": n, "d": d}));
    let mats = j_matrices(n, d);
    for d1 in 0..=d {
        for d2 in 0..=d - d1 {
            let d3 = d - d1 - d2;
            let outer_l = JCoproduct::new(fam.clone(), d1 + d2, d3, JStage::Renormalized);
            let inner_l = JCoproduct::new(fam.clone(), d1, d2, JStage::Renormalized);
            let outer_r = JCoproduct::new(fam.clone(), d1, d2 + d3, JStage::Renormalized);
            let inner_r = TypeACoproduct::new(TypeA::finite(n), d2, d3, AffineStage::Twisted);
            for a in &mats {
                let x = Elem::basis(a.clone());
                let lhs = apply_to_factor(&inner_l, &eng, &delta_elem(&outer_l, &eng, &x)?, 0)?;
                let rhs = apply_to_factor(&inner_r, &aeng, &delta_elem(&outer_r, &eng, &x)?, 1)?;
                cert.check((lhs != rhs).then(|| format!("[{a}], split {d1}+{d2}+{d3}: {:?}", &lhs - &rhs)));
            }
        }
    }
    Ok(cert)
}

/// `ȷ_d(e_i) = E_i + K_i F_{n-i}`, `ȷ_d(f_i) = F_i K_{n-i} + E_{n-i}` and
/// `ȷ_d(k_i) = v^{δ_{i,r}} K_i K_{n-i}^{-1}`.
pub fn verify_embedding_formulas(n: usize, d: u32) -> Result<Certificate> {
    let fam = JFamily::new(n)?;
    let (m, r) = (n as i32, fam.r());
    let mut cert = Certificate::new("embedding-formulas")
        .with_parameters(serde_json::json!({"type": "jmath", "n": n, "d": d}));
    for i in 1..=r {
        let dr = (i == r) as i64;
        let cases = [
            (Gen::E(i, 1), &a_word(n, &[Gen::E(i, 1)], d)? + &a_word(n, &[Gen::K(i, 1), Gen::F(m - i, 1)], d)?),
            (Gen::F(i, 1), &a_word(n, &[Gen::F(i, 1), Gen::K(m - i, 1)], d)? + &a_word(n, &[Gen::E(m - i, 1)], d)?),
            (Gen::K(i, 1), a_word(n, &[Gen::K(i, 1), Gen::K(m - i, -1)], d)?.shift(dr)),
            (Gen::K(i, -1), a_word(n, &[Gen::K(i, -1), Gen::K(m - i, 1)], d)?.shift(-dr)),
        ];
        for (g, want) in cases {
            let got = embed_j_word(&fam, std::slice::from_ref(&g), d)?;
            cert.check((got != want).then(|| format!("ȷ({g}) = {got:?}, expected {want:?}")));
        }
    }
    Ok(cert)
}

/// Rank over `Q` of a family of elements after specializing `v` to an
/// integer.
pub fn rank_at(elems: &[Elem], v: i64) -> usize {
    let mut cols: BTreeMap<&Mat, usize> = BTreeMap::new();
    for x in elems {
        for m in x.matrices() {
            let k = cols.len();
            cols.entry(m).or_insert(k);
        }
    }
    let vq = BigRational::from_integer(BigInt::from(v));
    let eval = |p: &LaurentPoly| -> BigRational {
        p.terms().fold(BigRational::zero(), |acc, (k, c)| {
            let base = if k >= 0 { vq.clone() } else { vq.recip() };
            acc + num_traits::pow(base, k.unsigned_abs() as usize) * BigRational::from_integer(c.clone())
        })
    };
    let mut rows: Vec<Vec<BigRational>> = elems
        .iter()
        .map(|x| {
            let mut row = vec![BigRational::zero(); cols.len()];
            for (m, c) in x.iter() {
                row[cols[m]] = eval(c);
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The images `ȷ_d([A])`, `A ∈ Ξ^ȷ_d`, are linearly independent. Full rank
/// at one integer value of `v` implies independence over `Q(v)`.
pub fn verify_embedding_injective(n: usize, d: u32) -> Result<Certificate> {
    let eng = Engine::new(JFamily::new(n)?);
    let mats = j_matrices(n, d);
    let images: Vec<Elem> = mats
        .iter()
        .map(|a| embed_j(&eng, &Elem::basis(a.clone())))
        .collect::<Result<_>>()?;
    let rank = rank_at(&images, 2);
    let mut cert = Certificate::new("embedding-injective").with_parameters(
        serde_json::json!({"type": "jmath", "n": n, "d": d, "basis": mats.len(), "rank_at_v_2": rank}),
    );
    cert.check((rank != mats.len()).then(|| format!("rank {rank} of {} images at v = 2", mats.len())));
    Ok(cert)
}

/// Type-A indices behind the check operators on `n` steps: `i < r` keeps
/// `i`, `i = r` uses both middle steps, `i > r` moves up by one.
fn check_indices(n: usize, i: i32) -> Vec<i32> {
    let r = (n as i32 - 1) / 2;
    match i.cmp(&r) {
        std::cmp::Ordering::Less => vec![i],
        std::cmp::Ordering::Equal => vec![r, r + 1],
        std::cmp::Ordering::Greater => vec![i + 1],
    }
}

fn check_e(n: usize, i: i32) -> Vec<Gen> {
    check_indices(n, i).into_iter().rev().map(|j| Gen::E(j, 1)).collect()
}

fn check_f(n: usize, i: i32) -> Vec<Gen> {
    check_indices(n, i).into_iter().map(|j| Gen::F(j, 1)).collect()
}

fn check_k(n: usize, i: i32, s: i32) -> Vec<Gen> {
    check_indices(n, i).into_iter().map(|j| Gen::K(j, s)).collect()
}

fn cat(a: Vec<Gen>, b: Vec<Gen>) -> Vec<Gen> {
    a.into_iter().chain(b).collect()
}

/// `Δ^ı` and `ı_d` on `ě_i, f̌_i, ǩ_i^{±1}` (`i < r`) and on `ť`, against
/// the check-operator formulas with `ℓ = n − 1`.
pub fn verify_i_formulas(n: usize, d: u32) -> Result<Certificate> {
    let fam = JFamily::new(n)?;
    let eng = Engine::new(fam.clone());
    let (r, l) = (fam.r(), n as i32 - 1);
    let mut cert = Certificate::new("i-formulas").with_parameters(serde_json::json!({"type": "imath", "n": n, "d": d}));
    let aj = |w: Vec<Gen>, d: u32| a_word_j(n, &w, d);
    let ig = |g: &IGen, d: u32| i_generator(&fam, g, d);
    let one_i = |d: u32| Elem::from_terms(i_weights(d, n).iter().map(|w| (Mat::diag(w, false), LaurentPoly::one())));
    for g in i_gens(&fam) {
        for d1 in 0..=d {
            let d2 = d - d1;
            let want = match g {
                IGen::E(i) => {
                    &(&tensor_of(&ig(&g, d1)?, &aj(check_k(n, i, 1), d2)?) + &tensor_of(&one_i(d1), &aj(check_e(n, i), d2)?))
                        + &tensor_of(&ig(&IGen::K(i, 1), d1)?, &aj(cat(check_f(n, l - i), check_k(n, i, 1)), d2)?)
                }
                IGen::F(i) => {
                    &(&tensor_of(&ig(&g, d1)?, &aj(check_k(n, l - i, 1), d2)?)
                        + &tensor_of(&ig(&IGen::K(i, -1), d1)?, &aj(cat(check_k(n, l - i, 1), check_f(n, i)), d2)?))
                        + &tensor_of(&one_i(d1), &aj(check_e(n, l - i), d2)?)
                }
                IGen::K(i, s) => tensor_of(&ig(&g, d1)?, &aj(cat(check_k(n, i, s), check_k(n, l - i, -s)), d2)?),
                IGen::T => {
                    &(&tensor_of(&ig(&g, d1)?, &aj(check_k(n, r, 1), d2)?)
                        + &tensor_of(&one_i(d1), &aj(cat(check_k(n, r, 1), check_f(n, r)), d2)?.shift(1)))
                        + &tensor_of(&one_i(d1), &aj(check_e(n, r), d2)?)
                }
                IGen::Idem(_) => unreachable!(),
            };
            let got = comult_i(&eng, &ig(&g, d)?, d1, d2)?;
            cert.check((got != want).then(|| format!("Δ^ı({g:?}), split {d1}+{d2}: {got:?} vs {want:?}")));
        }
        let want = match g {
            IGen::E(i) => &aj(check_e(n, i), d)? + &aj(cat(check_k(n, i, 1), check_f(n, l - i)), d)?,
            IGen::F(i) => &aj(check_e(n, l - i), d)? + &aj(cat(check_k(n, l - i, 1), check_f(n, i)), d)?,
            IGen::K(i, s) => aj(cat(check_k(n, i, s), check_k(n, l - i, -s)), d)?,
            IGen::T => {
                &(&aj(check_e(n, r), d)? + &aj(cat(check_k(n, r, 1), check_f(n, r)), d)?.shift(1))
                    + &aj(check_k(n, r, 1), d)?
            }
            IGen::Idem(_) => unreachable!(),
        };
        let got = embed_i(&eng, &ig(&g, d)?)?;
        cert.check((got != want).then(|| format!("ı({g:?}) = {got:?}, expected {want:?}")));
    }
    Ok(cert)
}

/// `φ^ȷ` sends `e_i, f_i, k_i^{±1}` of degree `d` to the same generators of
/// degree `d − n`.
pub fn verify_j_transfer_generators(n: usize, d: u32) -> Result<Certificate> {
    let fam = JFamily::new(n)?;
    if d < n as u32 {
        return Err(SchurError::Validation(format!("transfer needs d ≥ {n}")));
    }
    let mut cert = Certificate::new("j-transfer-generators")
        .with_parameters(serde_json::json!({"type": "jmath", "n": n, "d": d}));
    for g in degree_one_gens(&fam) {
        let got = transfer_j_word(&fam, std::slice::from_ref(&g), d)?;
        let want = j_generator(&fam, &g, d - n as u32)?;
        cert.check((got != want).then(|| format!("φ({g}) = {got:?}, expected {want:?}")));
    }
    Ok(cert)
}

/// `φ^ı` sends `ě_i, f̌_i, ǩ_i^{±1}, ť` of degree `d` to the same generators
/// of degree `d − (n − 1)`.
pub fn verify_i_transfer_generators(n: usize, d: u32) -> Result<Certificate> {
    let fam = JFamily::new(n)?;
    let eng = Engine::new(fam.clone());
    let l = n as u32 - 1;
    if d < l {
        return Err(SchurError::Validation(format!("transfer needs d ≥ {l}")));
    }
    let mut cert = Certificate::new("i-transfer-generators")
        .with_parameters(serde_json::json!({"type": "imath", "n": n, "d": d}));
    for g in i_gens(&fam) {
        let got = transfer_i(&eng, &i_generator(&fam, &g, d)?)?;
        let want = i_generator(&fam, &g, d - l)?;
        cert.check((got != want).then(|| format!("φ^ı({g:?}) = {got:?}, expected {want:?}")));
    }
    Ok(cert)
}

/// Images of the degree-one generators `e_i, f_i, k_i^{±1}` in one `S^ȷ_d`,
/// keyed by `E(i,1)`, `F(i,1)`, `K(i,±1)`.
pub type GenTable = std::collections::BTreeMap<Gen, Elem>;

/// The generators of `S^ȷ_d` themselves.
pub fn generator_table(fam: &JFamily, d: u32) -> Result<GenTable> {
    let mut t = GenTable::new();
    for i in 1..=fam.r() {
        for g in [Gen::E(i, 1), Gen::F(i, 1), Gen::K(i, 1), Gen::K(i, -1)] {
            t.insert(g.clone(), j_generator(fam, &g, d)?);
        }
    }
    Ok(t)
}

/// `φ^ȷ_{d+n,d}` applied to the generators of `S^ȷ_{d+n}`.
pub fn transferred_generator_table(fam: &JFamily, d: u32) -> Result<GenTable> {
    let mut t = GenTable::new();
    let up = d + fam.n as u32;
    for i in 1..=fam.r() {
        for g in [Gen::E(i, 1), Gen::F(i, 1), Gen::K(i, 1), Gen::K(i, -1)] {
            t.insert(g.clone(), transfer_j_word(fam, std::slice::from_ref(&g), up)?);
        }
    }
    Ok(t)
}

/// Check the defining relations of the coideal subalgebra on a table of
/// generator images in `S^ȷ_d`.
pub fn verify_coideal_relations(eng: &Engine<JFamily>, d: u32, table: &GenTable) -> Result<Certificate> {
    let fam = eng.family();
    let r = fam.r();
    let mut cert = Certificate::new("coideal-relations")
        .with_parameters(serde_json::json!({"type": "jmath", "n": fam.n, "d": d}));
    let get = |g: Gen| -> Result<Elem> {
        table
            .get(&g)
            .cloned()
            .ok_or_else(|| SchurError::Validation(format!("generator table lacks {g}")))
    };
    let one = unit(fam, d);
    let mul = |xs: &[&Elem]| -> Result<Elem> {
        let mut cur = one.clone();
        for x in xs.iter().rev() {
            cur = eng.mul(x, &cur)?;
        }
        Ok(cur)
    };
    let vv = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
    let mut rel = |name: String, lhs: Elem, rhs: Elem| {
        cert.check((lhs != rhs).then(|| format!("{name}: {:?} ≠ {:?}", lhs, rhs)));
    };
    for i in 1..=r {
        let (ki, kim) = (get(Gen::K(i, 1))?, get(Gen::K(i, -1))?);
        rel(format!("k{i} k{i}^-1 = 1"), mul(&[&ki, &kim])?, one.clone());
        rel(format!("k{i}^-1 k{i} = 1"), mul(&[&kim, &ki])?, one.clone());
        // (k_i − k_i^{-1})/(v − v^{-1})
        let mut bracket = Elem::zero();
        for (m, c) in (&ki - &kim).iter() {
            bracket.add_term(m.clone(), &c.div_exact(&LaurentPoly::from_terms([(1, 1), (-1, -1)]))?);
        }
        for j in 1..=r {
            let (ej, fj, kj) = (get(Gen::E(j, 1))?, get(Gen::F(j, 1))?, get(Gen::K(j, 1))?);
            let ei = get(Gen::E(i, 1))?;
            let fi = get(Gen::F(i, 1))?;
            let a = 2 * (i == j) as i64 - (i == j + 1) as i64 - (i + 1 == j) as i64;
            let ex = a + (i == r && j == r) as i64;
            rel(format!("k{i} k{j} = k{j} k{i}"), mul(&[&ki, &kj])?, mul(&[&kj, &ki])?);
            rel(format!("k{i} e{j} = v^{ex} e{j} k{i}"), mul(&[&ki, &ej])?, mul(&[&ej, &ki])?.shift(ex));
            rel(format!("k{i} f{j} = v^{} f{j} k{i}", -ex), mul(&[&ki, &fj])?, mul(&[&fj, &ki])?.shift(-ex));
            if (i, j) != (r, r) {
                let lhs = &mul(&[&ei, &fj])? - &mul(&[&fj, &ei])?;
                let rhs = if i == j { bracket.clone() } else { Elem::zero() };
                rel(format!("[e{i}, f{j}]"), lhs, rhs);
            }
            if (i - j).abs() > 1 {
                rel(format!("e{i} e{j} = e{j} e{i}"), mul(&[&ei, &ej])?, mul(&[&ej, &ei])?);
                rel(format!("f{i} f{j} = f{j} f{i}"), mul(&[&fi, &fj])?, mul(&[&fj, &fi])?);
            }
            if (i - j).abs() == 1 {
                let lhs = &mul(&[&ei, &ei, &ej])? + &mul(&[&ej, &ei, &ei])?;
                rel(format!("Serre e{i} e{j}"), lhs, mul(&[&ei, &ej, &ei])?.scale(&vv));
                let lhs = &mul(&[&fi, &fi, &fj])? + &mul(&[&fj, &fi, &fi])?;
                rel(format!("Serre f{i} f{j}"), lhs, mul(&[&fi, &fj, &fi])?.scale(&vv));
            }
        }
    }
    let (e, f, k, km) = (get(Gen::E(r, 1))?, get(Gen::F(r, 1))?, get(Gen::K(r, 1))?, get(Gen::K(r, -1))?);
    let kk = &k.shift(1) + &km.shift(-1);
    let lhs = &mul(&[&e, &e, &f])? + &mul(&[&f, &e, &e])?;
    let rhs = (&mul(&[&e, &f, &e])? - &mul(&[&e, &kk])?).scale(&vv);
    rel(format!("e{r}^2 f{r} + f{r} e{r}^2"), lhs, rhs);
    let lhs = &mul(&[&f, &f, &e])? + &mul(&[&e, &f, &f])?;
    let rhs = (&mul(&[&f, &e, &f])? - &mul(&[&kk, &f])?).scale(&vv);
    rel(format!("f{r}^2 e{r} + e{r} f{r}^2"), lhs, rhs);
    Ok(cert)
}
