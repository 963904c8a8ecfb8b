//! Stabilization of canonical bases along transfer maps, and positivity of
//! the comultiplications and embeddings in the canonical bases.
//!
//! The diagonal shift is observed, not assumed: for each step of a chain the
//! transfer image of `{A}` is expanded in the canonical basis, and when it is
//! a single element `{B}` the difference `A − B` is recorded.

use serde::Serialize;

use crate::algebra::{Elem, Engine, Family, Tensor};
use crate::certificate::Certificate;
use crate::coideal::{comult_i, embed_i, embed_j, is_i_weight, transfer_i, transfer_j, JCoproduct, JFamily, JStage};
use crate::combinatorics::{compositions, finite_block, is_i_matrix, j_block, j_compositions, Composition, Mat};
use crate::coproduct::delta_elem;
use crate::error::{Result, SchurError};
use crate::schur_a::{slice, transfer, AffineStage, TypeA, TypeACoproduct};

/// Which algebra a check runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    A,
    J,
    I,
}

impl Kind {
    /// Degree lost by one transfer step.
    pub fn step(self, n: usize) -> u32 {
        match self {
            Kind::A | Kind::J => n as u32,
            Kind::I => n as u32 - 1,
        }
    }

    /// Diagonal that a transfer step should remove.
    pub fn expected_shift(self, n: usize) -> Composition {
        match self {
            Kind::A => vec![1; n],
            Kind::J => vec![2; n],
            Kind::I => (0..n).map(|k| if k == n / 2 { 0 } else { 2 }).collect(),
        }
    }

    /// Degree of a matrix of this kind.
    pub fn degree(self, a: &Mat) -> u32 {
        match self {
            Kind::A => a.total(),
            Kind::J | Kind::I => (a.total() - 1) / 2,
        }
    }
}

/// All standard basis indices of the algebra in degree `d`.
pub fn basis_matrices(kind: Kind, n: usize, d: u32) -> Vec<Mat> {
    match kind {
        Kind::A => {
            let comps = compositions(d, n);
            comps
                .iter()
                .flat_map(|ro| comps.iter().flat_map(move |co| finite_block(ro, co)))
                .collect()
        }
        Kind::J | Kind::I => {
            let comps: Vec<Composition> = j_compositions(d, n)
                .into_iter()
                .filter(|l| kind == Kind::J || is_i_weight(l))
                .collect();
            let mut out = Vec::new();
            for ro in &comps {
                for co in &comps {
                    out.extend(j_block(ro, co).into_iter().filter(|m| kind == Kind::J || is_i_matrix(m)));
                }
            }
            out
        }
    }
}

/// The engines needed for one kind on `n` steps.
pub enum Engines {
    A(Engine<TypeA>),
    J(Engine<JFamily>, Engine<TypeA>),
}

impl Engines {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        Ok(match kind {
            Kind::A => Engines::A(Engine::new(TypeA::finite(n))),
            Kind::J | Kind::I => Engines::J(Engine::new(JFamily::new(n)?), Engine::new(TypeA::finite(n))),
        })
    }

    pub fn canonical(&self, a: &Mat) -> Result<Elem> {
        Ok(match self {
            Engines::A(e) => (*e.canonical(a)?).clone(),
            Engines::J(e, _) => (*e.canonical(a)?).clone(),
        })
    }

    pub fn to_canonical(&self, x: &Elem) -> Result<Elem> {
        match self {
            Engines::A(e) => e.to_canonical(x),
            Engines::J(e, _) => e.to_canonical(x),
        }
    }

    pub fn transfer(&self, kind: Kind, x: &Elem) -> Result<Elem> {
        match (self, kind) {
            (Engines::A(e), Kind::A) => transfer(e, x),
            (Engines::J(e, _), Kind::J) => transfer_j(e, x),
            (Engines::J(e, _), Kind::I) => transfer_i(e, x),
            _ => Err(SchurError::Validation("engine does not match the algebra kind".into())),
        }
    }
}

/// One step of a stabilization chain.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub degree: u32,
    pub top: Mat,
    /// Canonical expansion of the transfer image of `{top}`.
    pub image: Elem,
    /// `top − B` when the image is a single canonical element `{B}`.
    pub shift: Option<Vec<Vec<i64>>>,
}

/// Report of [`detect_stabilization`].
#[derive(Clone, Debug, Serialize)]
pub struct Stabilization {
    pub kind: Kind,
    pub seed: Mat,
    pub steps: Vec<ChainStep>,
    /// Observed diagonal shift, common to all steps from `stable_from` on.
    pub shift: Composition,
    /// Smallest degree from which every step maps `{A}` to `{A − shift}`.
    pub stable_from: u32,
}

fn difference(a: &Mat, b: &Mat) -> Vec<Vec<i64>> {
    let (da, db) = (a.dense(), b.dense());
    da.iter()
        .zip(&db)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| *p as i64 - *q as i64).collect())
        .collect()
}

fn as_diagonal(m: &[Vec<i64>]) -> Option<Composition> {
    let mut out = Vec::with_capacity(m.len());
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j && *x != 0 {
                return None;
            }
        }
        out.push(u32::try_from(row[i]).ok()?);
    }
    Some(out)
}

/// Follow `A, A + S, A + 2S, …` up to degree `max_d`, where `S` is the
/// diagonal a transfer step removes, and find from which degree on the
/// transfer maps `{A + pS}` to `{A + (p−1)S}`.
pub fn detect_stabilization(kind: Kind, engines: &Engines, seed: &Mat, max_d: u32) -> Result<Stabilization> {
    let n = seed.n();
    if kind == Kind::I && !is_i_matrix(seed) {
        return Err(SchurError::Validation(format!("{seed} is not an ı matrix")));
    }
    let expected = kind.expected_shift(n);
    let bump: Vec<(i32, i32, i64)> = expected
        .iter()
        .enumerate()
        .map(|(k, s)| (k as i32 + 1, k as i32 + 1, *s as i64))
        .collect();
    let mut steps = Vec::new();
    let mut top = seed.clone();
    loop {
        top = top
            .add_at(&bump)
            .ok_or_else(|| SchurError::Validation("diagonal shift left the matrix space".into()))?;
        let degree = kind.degree(&top);
        if degree > max_d {
            break;
        }
        let image = engines.to_canonical(&engines.transfer(kind, &engines.canonical(&top)?)?)?;
        let shift = match image.iter().collect::<Vec<_>>().as_slice() {
            [(b, c)] if c.is_one() => Some(difference(&top, b)),
            _ => None,
        };
        steps.push(ChainStep { degree, top: top.clone(), image, shift });
    }
    let stable = |s: &ChainStep| s.shift.as_deref().and_then(as_diagonal).as_ref() == Some(&expected);
    let tail = steps.iter().rev().take_while(|s| stable(s)).count();
    if tail == 0 {
        let last = steps.last().map(|s| format!("{:?}", s.image)).unwrap_or_else(|| "no steps".into());
        return Err(SchurError::NotStabilized(format!(
            "{seed} up to degree {max_d}: last image {last}"
        )));
    }
    let stable_from = steps[steps.len() - tail].degree;
    Ok(Stabilization { kind, seed: seed.clone(), steps, shift: expected, stable_from })
}

/// Expand a two-factor tensor in canonical ⊗ canonical.
pub fn tensor_to_canonical<F: Family, G: Family>(left: &Engine<F>, right: &Engine<G>, t: &Tensor) -> Result<Tensor> {
    let t = t.expand_factor(0, |m| left.to_canonical(&Elem::basis(m.clone())))?;
    t.expand_factor(1, |m| right.to_canonical(&Elem::basis(m.clone())))
}

fn comult_canonical(kind: Kind, engines: &Engines, x: &Elem, d1: u32, d2: u32) -> Result<Tensor> {
    match (engines, kind) {
        (Engines::A(e), Kind::A) => {
            let cp = TypeACoproduct::new(e.family().clone(), d1, d2, AffineStage::Twisted);
            tensor_to_canonical(e, e, &delta_elem(&cp, e, x)?)
        }
        (Engines::J(e, a), Kind::J) => {
            let cp = JCoproduct::new(e.family().clone(), d1, d2, JStage::Renormalized);
            tensor_to_canonical(e, a, &delta_elem(&cp, e, x)?)
        }
        (Engines::J(e, a), Kind::I) => tensor_to_canonical(e, a, &comult_i(e, x, d1, d2)?),
        _ => Err(SchurError::Validation("engine does not match the algebra kind".into())),
    }
}

/// Flag nonpositive coefficients of a canonical ⊗ canonical expansion.
pub fn check_positive_tensor(label: &str, t: &Tensor) -> Vec<String> {
    t.iter()
        .filter(|(_, c)| !c.is_positive())
        .map(|(k, c)| format!("{label}: coefficient {c} at {{{}}} ⊗ {{{}}}", k[0], k[1]))
        .collect()
}

/// Flag nonpositive coefficients of a canonical expansion.
pub fn check_positive_elem(label: &str, x: &Elem) -> Vec<String> {
    x.iter()
        .filter(|(_, c)| !c.is_positive())
        .map(|(m, c)| format!("{label}: coefficient {c} at {{{m}}}"))
        .collect()
}

/// The comultiplication of every canonical basis element of degree `d`
/// expands in canonical ⊗ canonical with coefficients in `N[v, v^{-1}]`.
pub fn verify_idempotented_comult_positivity(kind: Kind, n: usize, d: u32, d1: u32) -> Result<Certificate> {
    if d1 > d {
        return Err(SchurError::Validation(format!("split {d1} exceeds d = {d}")));
    }
    let engines = Engines::new(kind, n)?;
    let mut cert = Certificate::new("comultiplication-positivity")
        .with_parameters(serde_json::json!({"type": kind, "n": n, "d": d, "split": [d1, d - d1]}));
    for a in basis_matrices(kind, n, d) {
        let t = comult_canonical(kind, &engines, &engines.canonical(&a)?, d1, d - d1)?;
        cert.count();
        for w in check_positive_tensor(&format!("Δ{{{a}}}"), &t) {
            cert.fail(w);
        }
    }
    Ok(cert)
}

/// `ȷ_d({B})` (or `ı_d({B})`) expands in the type-A canonical basis with
/// coefficients `g_{B,A}` in `N[v, v^{-1}]`.
pub fn verify_embedding_positivity(kind: Kind, n: usize, d: u32) -> Result<Certificate> {
    let Engines::J(e, a) = Engines::new(kind, n)? else {
        return Err(SchurError::Validation("embedding positivity is a type-B statement".into()));
    };
    let mut cert = Certificate::new("embedding-positivity")
        .with_parameters(serde_json::json!({"type": kind, "n": n, "d": d}));
    for m in basis_matrices(kind, n, d) {
        let can = e.canonical(&m)?;
        let img = if kind == Kind::I { embed_i(&e, &can)? } else { embed_j(&e, &can)? };
        cert.count();
        for w in check_positive_elem(&format!("embedding of {{{m}}}"), &a.to_canonical(&img)?) {
            cert.fail(w);
        }
    }
    Ok(cert)
}

/// The transfer map sends each canonical basis element of degree `d` to a
/// combination of canonical basis elements with coefficients in
/// `N[v, v^{-1}]`.
pub fn verify_transfer_positivity(kind: Kind, n: usize, d: u32) -> Result<Certificate> {
    let engines = Engines::new(kind, n)?;
    let mut cert = Certificate::new("transfer-positivity")
        .with_parameters(serde_json::json!({"type": kind, "n": n, "d": d}));
    for m in basis_matrices(kind, n, d) {
        let img = engines.to_canonical(&engines.transfer(kind, &engines.canonical(&m)?)?)?;
        cert.count();
        for w in check_positive_elem(&format!("transfer of {{{m}}}"), &img) {
            cert.fail(w);
        }
    }
    Ok(cert)
}

/// Affine `Δ` of every canonical element `{A}` of a spread-bounded slice
/// that lies in the Chevalley image expands in canonical ⊗ canonical with
/// coefficients in `N[v, v^{-1}]`. Elements outside the image are skipped
/// and counted.
pub fn verify_affine_comult_positivity(n: usize, d: u32, d1: u32, spread: u32) -> Result<Certificate> {
    if d1 > d {
        return Err(SchurError::Validation(format!("split {d1} exceeds d = {d}")));
    }
    let fam = TypeA::affine(n);
    let eng = Engine::new(fam.clone());
    let cp = TypeACoproduct::new(fam, d1, d - d1, AffineStage::Full);
    let mut skipped = 0usize;
    let mut witnesses = Vec::new();
    let mut checked = 0usize;
    for a in slice(n, d, true, spread) {
        let can = eng.canonical(&a)?;
        let t = match delta_elem(&cp, &eng, &can) {
            Ok(t) => t,
            Err(SchurError::NotInChevalleyImage(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        checked += 1;
        witnesses.extend(check_positive_tensor(&format!("Δ{{{a}}}"), &tensor_to_canonical(&eng, &eng, &t)?));
    }
    let mut cert = Certificate::new("affine-comultiplication-positivity").with_parameters(serde_json::json!({
        "type": "affine-a", "n": n, "d": d, "split": [d1, d - d1], "spread": spread, "outside_chevalley_image": skipped
    }));
    for _ in 0..checked {
        cert.count();
    }
    for w in witnesses {
        cert.fail(w);
    }
    Ok(cert)
}
