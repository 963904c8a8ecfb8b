//! Checks of the type-A constructions: products against flag counts,
//! canonical bases, ξ, the comultiplications on generators, the affine
//! window, and the transfer map.

use rayon::prelude::*;

use super::*;
use crate::algebra::{act_word, unit};
use crate::canonical::{check_canonical, verify_epsilon_rigidity, KlTable};
use crate::certificate::Certificate;
use crate::combinatorics::{finite_block, periodic_block};
use crate::coproduct::delta_word;
use crate::flag_oracle::flag_variety_dim;
use crate::ring::QPoly;

/// All matrices of `S_d` on `n` steps; affine ones are cut to `spread`.
pub fn slice(n: usize, d: u32, periodic: bool, spread: u32) -> Vec<Mat> {
    let comps = compositions(d, n);
    let mut out = Vec::new();
    for ro in &comps {
        for co in &comps {
            if periodic {
                out.extend(periodic_block(ro, co, spread));
            } else {
                out.extend(finite_block(ro, co));
            }
        }
    }
    out
}

/// Semisimple matrices of a finite slice, the left factors of the
/// multiplication formulas.
pub fn semisimple_slice(n: usize, d: u32) -> Vec<Mat> {
    slice(n, d, false, 0)
        .into_iter()
        .filter(|m| semisimple_shape(m).is_ok())
        .collect()
}

/// Compare predicted e-basis coefficients of `e_B * e_A` with counts at one
/// `q`.
pub fn compare_df_counts(
    b: &Mat,
    a: &Mat,
    predicted: &[(Mat, LaurentPoly)],
    counts: &BTreeMap<Mat, u64>,
    q: usize,
) -> Result<Vec<String>> {
    let mut pred = BTreeMap::new();
    for (m, c) in predicted {
        let val = c
            .eval_q(q as i64)
            .ok_or_else(|| SchurError::ConsistencyFailure(format!("odd exponent in {c}")))?;
        if !val.is_integer() {
            return Err(SchurError::NonInteger(format!("{val} at {m}")));
        }
        if !val.is_zero() {
            *pred.entry(m.clone()).or_insert_with(BigInt::zero) += val.to_integer();
        }
    }
    let got: BTreeMap<Mat, BigInt> = counts.iter().map(|(m, v)| (m.clone(), BigInt::from(*v))).collect();
    let mut keys: Vec<&Mat> = pred.keys().chain(got.keys()).collect();
    keys.sort();
    keys.dedup();
    Ok(keys
        .into_iter()
        .filter(|k| pred.get(*k) != got.get(*k))
        .map(|k| format!("q = {q}, B = {b}, A = {a}, C = {k}: formula {:?} vs count {:?}", pred.get(k), got.get(k)))
        .collect())
}

/// Interpolate each structure constant from counts at several `q` and
/// compare it with the predicted polynomial.
pub fn compare_df_interpolation(
    b: &Mat,
    a: &Mat,
    predicted: &[(Mat, LaurentPoly)],
    tables: &[(usize, BTreeMap<Mat, u64>)],
) -> Result<Vec<String>> {
    let bound = flag_variety_dim(&b.co(), false);
    if tables.len() < bound + 2 {
        return Ok(vec![format!("B = {b}: {} samples cannot fix degree {bound}", tables.len())]);
    }
    let mut pred: BTreeMap<Mat, LaurentPoly> = BTreeMap::new();
    for (m, c) in predicted {
        *pred.entry(m.clone()).or_insert_with(LaurentPoly::zero) += c;
    }
    pred.retain(|_, p| !p.is_zero());
    let mut keys: Vec<&Mat> = pred.keys().chain(tables.iter().flat_map(|(_, t)| t.keys())).collect();
    keys.sort();
    keys.dedup();
    let mut bad = Vec::new();
    for c in keys {
        let pts: Vec<(i64, BigInt)> = tables
            .iter()
            .map(|(q, t)| (*q as i64, BigInt::from(t.get(c).copied().unwrap_or(0))))
            .collect();
        let got = QPoly::interpolate(&pts, bound)?;
        let want = match pred.get(c) {
            Some(p) => QPoly::from_laurent(p)
                .ok_or_else(|| SchurError::ConsistencyFailure(format!("{p} is not a polynomial in q")))?,
            None => QPoly::zero(),
        };
        if got != want {
            bad.push(format!("B = {b}, A = {a}, C = {c}: formula {want} vs interpolated {got}"));
        }
    }
    Ok(bad)
}

/// The multiplication formulas for semisimple `B` against flag counts, for
/// all `B`, `A` in the finite slice of degree `d`: exactly at each `q`, and
/// as polynomials interpolated from all listed `q`.
pub fn verify_df_oracle(n: usize, d: u32, qs: &[usize]) -> Result<Certificate> {
    let mut cert = Certificate::new("multiplication-vs-oracle")
        .with_parameters(serde_json::json!({"type": "a", "n": n, "d": d, "q": qs}));
    let all = slice(n, d, false, 0);
    let mut pairs = Vec::new();
    for b in semisimple_slice(n, d) {
        for a in all.iter().filter(|a| a.ro() == b.co()) {
            pairs.push((b.clone(), a.clone()));
        }
    }
    let oracles: Vec<Oracle> = qs.iter().map(|&q| Oracle::new(q)).collect::<Result<_>>()?;
    let results: Vec<Result<Vec<String>>> = pairs
        .par_iter()
        .map(|(b, a)| {
            let pred = df_product(b, a)?;
            let mut bad = Vec::new();
            let mut tables = Vec::new();
            for o in &oracles {
                let counts = o.convolve(b, a, false)?;
                bad.extend(compare_df_counts(b, a, &pred, &counts, o.q())?);
                tables.push((o.q(), counts));
            }
            bad.extend(compare_df_interpolation(b, a, &pred, &tables)?);
            Ok(bad)
        })
        .collect();
    for r in results {
        cert.count();
        for w in r? {
            cert.fail(w);
        }
    }
    Ok(cert)
}

/// Canonical tables of a list of matrices.
pub fn canonical_tables(eng: &Engine<TypeA>, mats: &[Mat]) -> Result<Vec<KlTable>> {
    mats.iter().map(|a| eng.kl_table(a)).collect()
}

/// Number of `ε_i` that can be nonzero: `n − 1` finite, `n` affine.
pub fn epsilon_period(fam: &TypeA) -> i64 {
    if fam.periodic {
        fam.n as i64
    } else {
        fam.n as i64 - 1
    }
}

/// Bar invariance, `P ∈ v^{-1}Z[v^{-1}]` off the diagonal, and ε-rigidity
/// for the canonical elements of the given matrices.
pub fn verify_canonical_soundness(eng: &Engine<TypeA>, mats: &[Mat]) -> Result<Certificate> {
    let fam = eng.family();
    let mut cert = Certificate::new("canonical-soundness")
        .with_parameters(serde_json::json!({"type": if fam.periodic { "affine-a" } else { "a" }, "n": fam.n, "size": mats.len()}));
    let mut tables = Vec::new();
    for a in mats {
        let e = eng.canonical(a)?;
        cert.count();
        for w in check_canonical(eng, a, &e)? {
            cert.fail(w);
        }
        tables.push(KlTable::from_elem(a.clone(), &e));
    }
    cert.absorb(verify_epsilon_rigidity(&tables, epsilon_period(fam)));
    Ok(cert)
}

/// `ξ_{i,c}({A}) = v^{c ε_i(A)} {A}` for each table, each `i ≤ period` and
/// each `c`.
pub fn verify_xi<'a, I>(tables: I, period: i64, cs: &[i64]) -> Certificate
where
    I: IntoIterator<Item = &'a KlTable>,
{
    let mut cert = Certificate::new("xi-eigenvector").with_parameters(serde_json::json!({"period": period, "c": cs}));
    for t in tables {
        let e = t.to_elem();
        for i in 1..=period {
            for &c in cs {
                let want = e.shift(c * t.top.epsilon(i));
                cert.check((xi(&e, i, c) != want).then(|| format!("ξ_{{{i},{c}}}{{{}}} is not a multiple of {{{}}}", t.top, t.top)));
            }
        }
    }
    cert
}

fn tensor_of(x: &Elem, y: &Elem) -> Tensor {
    let mut t = Tensor::zero();
    for (a, c) in x.iter() {
        for (b, e) in y.iter() {
            t.add_term(vec![a.clone(), b.clone()], &(c * e));
        }
    }
    t
}

fn word(fam: &TypeA, w: &[Gen], d: u32, s: i64) -> Result<Elem> {
    Ok(act_word(fam, w, &unit(fam, d))?.shift(s))
}

/// The affine comultiplications on generators: `Δ†` carries the
/// corrections `v^{±δ_{i,n} d}` on the outer factors, `Δ = (ξ ⊗ ξ)Δ†` is
/// the plain Hopf formula.
pub fn verify_affine_delta_generators(n: usize, d1: u32, d2: u32) -> Result<Certificate> {
    let fam = TypeA::affine(n);
    let d = d1 + d2;
    let mut cert = Certificate::new("affine-comultiplication-generators")
        .with_parameters(serde_json::json!({"type": "affine-a", "n": n, "split": [d1, d2]}));
    let dagger = TypeACoproduct::new(fam.clone(), d1, d2, AffineStage::Twisted);
    let full = TypeACoproduct::new(fam.clone(), d1, d2, AffineStage::Full);
    let t = |l: &[Gen], r: &[Gen], s1: i64, s2: i64| -> Result<Tensor> {
        Ok(tensor_of(&word(&fam, l, d1, s1)?, &word(&fam, r, d2, s2)?))
    };
    for i in 1..=n as i32 {
        let dn = (i == n as i32) as i64;
        let (a1, a2) = (d1 as i64 * dn, d2 as i64 * dn);
        let cases = [
            ("Δ†", &dagger, Gen::E(i, 1), &t(&[Gen::E(i, 1)], &[Gen::K(i, 1)], a2, 0)? + &t(&[], &[Gen::E(i, 1)], 0, -a1)?),
            ("Δ†", &dagger, Gen::F(i, 1), &t(&[Gen::F(i, 1)], &[], -a2, 0)? + &t(&[Gen::K(i, -1)], &[Gen::F(i, 1)], 0, a1)?),
            ("Δ†", &dagger, Gen::K(i, 1), t(&[Gen::K(i, 1)], &[Gen::K(i, 1)], 0, 0)?),
            ("Δ", &full, Gen::E(i, 1), &t(&[Gen::E(i, 1)], &[Gen::K(i, 1)], 0, 0)? + &t(&[], &[Gen::E(i, 1)], 0, 0)?),
            ("Δ", &full, Gen::F(i, 1), &t(&[Gen::F(i, 1)], &[], 0, 0)? + &t(&[Gen::K(i, -1)], &[Gen::F(i, 1)], 0, 0)?),
            ("Δ", &full, Gen::K(i, 1), t(&[Gen::K(i, 1)], &[Gen::K(i, 1)], 0, 0)?),
        ];
        for (name, cp, g, want) in cases {
            let got = delta_word(cp, std::slice::from_ref(&g), d)?;
            cert.check((got != want).then(|| format!("{name}({g}): {got:?} vs {want:?}")));
        }
    }
    Ok(cert)
}

fn window_part(x: &Elem) -> Elem {
    x.filter(|m| m.is_window_supported())
}

fn to_periodic(x: &Elem) -> Result<Elem> {
    let mut out = Elem::zero();
    for (m, c) in x.iter() {
        out.add_term(m.with_periodic(true)?, c);
    }
    Ok(out)
}

fn tensor_to_periodic(t: &Tensor) -> Result<Tensor> {
    let mut out = Tensor::zero();
    for (k, c) in t.iter() {
        out.add_term(k.iter().map(|m| m.with_periodic(true)).collect::<Result<_>>()?, c);
    }
    Ok(out)
}

/// The finite algebra inside the affine one: products, canonical elements
/// and comultiplications of window-supported matrices agree with the finite
/// ones once the affine side is cut to the window.
pub fn verify_window_agreement(n: usize, d: u32) -> Result<Certificate> {
    let (ffam, afam) = (TypeA::finite(n), TypeA::affine(n));
    let (fe, ae) = (Engine::new(ffam.clone()), Engine::new(afam.clone()));
    let mut cert = Certificate::new("window-agreement").with_parameters(serde_json::json!({"n": n, "d": d}));
    let mats = slice(n, d, false, 0);
    let lift = |m: &Mat| m.with_periodic(true);
    for b in semisimple_slice(n, d) {
        for a in mats.iter().filter(|a| a.ro() == b.co()) {
            let f = fe.mul(&Elem::basis(b.clone()), &Elem::basis(a.clone()))?;
            let g = ae.mul(&Elem::basis(lift(&b)?), &Elem::basis(lift(a)?))?;
            cert.check((to_periodic(&f)? != window_part(&g)).then(|| format!("product [{b}][{a}]")));
        }
    }
    for a in &mats {
        let f = fe.canonical(a)?;
        let g = ae.canonical(&lift(a)?)?;
        cert.check((to_periodic(&f)? != window_part(&g)).then(|| format!("canonical {{{a}}}")));
    }
    for d1 in 0..=d {
        let fc = TypeACoproduct::new(ffam.clone(), d1, d - d1, AffineStage::Twisted);
        for stage in [AffineStage::Twisted, AffineStage::Full] {
            let ac = TypeACoproduct::new(afam.clone(), d1, d - d1, stage);
            for a in &mats {
                let f = delta_elem(&fc, &fe, &Elem::basis(a.clone()))?;
                let g = delta_elem(&ac, &ae, &Elem::basis(lift(a)?))?;
                cert.check((tensor_to_periodic(&f)? != g).then(|| format!("{stage:?} comultiplication of [{a}], split {d1}+{}", d - d1)));
            }
        }
    }
    Ok(cert)
}

/// `φ` sends `E_i, F_i, K_i^{±1}` of degree `d` to the same generators of
/// degree `d − n`, and is multiplicative on pairs of generators.
pub fn verify_transfer_a_generators(n: usize, d: u32) -> Result<Certificate> {
    let fam = TypeA::finite(n);
    if d < n as u32 {
        return Err(SchurError::Validation(format!("transfer needs d ≥ {n}")));
    }
    let eng = Engine::new(fam.clone());
    let mut cert = Certificate::new("transfer-generators")
        .with_parameters(serde_json::json!({"type": "a", "n": n, "d": d}));
    let gens: Vec<Gen> = (1..n as i32)
        .flat_map(|i| [Gen::E(i, 1), Gen::F(i, 1), Gen::K(i, 1), Gen::K(i, -1)])
        .collect();
    for g in &gens {
        let got = transfer(&eng, &word(&fam, std::slice::from_ref(g), d, 0)?)?;
        let want = word(&fam, std::slice::from_ref(g), d - n as u32, 0)?;
        cert.check((got != want).then(|| format!("φ({g}) = {got:?}, expected {want:?}")));
    }
    for g in &gens {
        for h in &gens {
            let w = [g.clone(), h.clone()];
            let got = transfer(&eng, &word(&fam, &w, d, 0)?)?;
            let want = word(&fam, &w, d - n as u32, 0)?;
            cert.check((got != want).then(|| format!("φ({g}{h})")));
        }
    }
    Ok(cert)
}
