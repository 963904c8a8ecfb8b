//! Canonical bases by the triangular bar-invariant algorithm.
//!
//! The only inputs are the bar images of standard basis elements and a degree
//! function that strictly decreases along the partial order; the engine
//! discovers the relevant index set itself by closing under bar supports.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Elem, Engine, Family};
use crate::certificate::Certificate;
use crate::combinatorics::Mat;
use crate::error::{Result, SchurError};
use crate::ring::LaurentPoly;

/// Order in which lower indices are solved; both are linear extensions of the
/// partial order when `degree` is strictly monotone along it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    Primary,
    Reversed,
}

/// Coefficients `P_{A,A'}` of `{A} = Σ P_{A,A'} [A']`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlTable {
    pub top: Mat,
    pub entries: BTreeMap<Mat, LaurentPoly>,
}

impl KlTable {
    pub fn to_elem(&self) -> Elem {
        Elem::from_terms(self.entries.iter().map(|(a, p)| (a.clone(), p.clone())))
    }

    pub fn from_elem(top: Mat, e: &Elem) -> Self {
        Self {
            top,
            entries: e.iter().map(|(a, p)| (a.clone(), p.clone())).collect(),
        }
    }
}

/// Solve for `{A}` given `bar` on standard basis elements.
pub fn solve<B, D>(a: &Mat, mut bar: B, degree: D, ext: Extension) -> Result<Elem>
where
    B: FnMut(&Mat) -> Result<Elem>,
    D: Fn(&Mat) -> Result<i64>,
{
    let mut cmat: BTreeMap<Mat, Elem> = BTreeMap::new();
    let mut queue = vec![a.clone()];
    while let Some(x) = queue.pop() {
        if cmat.contains_key(&x) {
            continue;
        }
        let bx = bar(&x)?;
        if !bx.coeff(&x).is_one() {
            return Err(SchurError::NoSolution(format!("bar of [{x}] has diagonal coefficient {}", bx.coeff(&x))));
        }
        let dx = degree(&x)?;
        for y in bx.matrices() {
            if y != &x && degree(y)? >= dx {
                return Err(SchurError::NoSolution(format!(
                    "bar of [{x}] involves [{y}] of no smaller degree"
                )));
            }
            if !cmat.contains_key(y) {
                queue.push(y.clone());
            }
        }
        cmat.insert(x, bx);
    }
    let mut lower: Vec<(i64, Mat)> = Vec::new();
    for x in cmat.keys() {
        if x != a {
            lower.push((degree(x)?, x.clone()));
        }
    }
    lower.sort_by(|p, q| match ext {
        Extension::Primary => q.0.cmp(&p.0).then_with(|| q.1.cmp(&p.1)),
        Extension::Reversed => q.0.cmp(&p.0).then_with(|| p.1.cmp(&q.1)),
    });
    let mut p: BTreeMap<Mat, LaurentPoly> = BTreeMap::new();
    p.insert(a.clone(), LaurentPoly::one());
    for (_, y) in &lower {
        let mut r = LaurentPoly::zero();
        for (x, px) in &p {
            r += &(&px.bar() * &cmat[x].coeff(y));
        }
        if !r.constant_term().eq(&0.into()) || r.bar() != -&r {
            return Err(SchurError::NoSolution(format!(
                "coefficient of [{y}] in {{{a}}}: residual {r} is not bar-antisymmetric"
            )));
        }
        let py = r.negative_part();
        if !py.is_zero() {
            p.insert(y.clone(), py);
        }
    }
    Ok(Elem::from_terms(p))
}

impl<F: Family> Engine<F> {
    /// Canonical basis element `{A}` in the standard basis.
    pub fn canonical(&self, a: &Mat) -> Result<Arc<Elem>> {
        if let Some(x) = self.canonical_cache().read().get(a) {
            return Ok(x.clone());
        }
        let fam = self.family();
        let e = Arc::new(solve(a, |x| self.bar_basis(x), |x| fam.d_stat(x), Extension::Primary)?);
        Ok(self.canonical_cache().write().entry(a.clone()).or_insert(e).clone())
    }

    /// Canonical basis element under the second linear extension; used to
    /// confirm order independence.
    pub fn canonical_reversed(&self, a: &Mat) -> Result<Elem> {
        let fam = self.family();
        solve(a, |x| self.bar_basis(x), |x| fam.d_stat(x), Extension::Reversed)
    }

    pub fn kl_table(&self, a: &Mat) -> Result<KlTable> {
        Ok(KlTable::from_elem(a.clone(), self.canonical(a)?.as_ref()))
    }

    /// Expansion of a standard-basis element in the canonical basis.
    pub fn to_canonical(&self, x: &Elem) -> Result<Elem> {
        let mut rest = x.clone();
        let mut out = Elem::zero();
        let fam = self.family();
        while !rest.is_empty() {
            // the top-degree term is a leading term of its canonical element
            let mut best: Option<(i64, Mat)> = None;
            for a in rest.matrices() {
                let d = fam.d_stat(a)?;
                if best.as_ref().is_none_or(|b| d > b.0 || (d == b.0 && *a > b.1)) {
                    best = Some((d, a.clone()));
                }
            }
            let (_, a) = best.expect("nonempty");
            let c = rest.coeff(&a);
            let can = self.canonical(&a)?;
            rest.add_scaled(&can, &-&c);
            if !rest.coeff(&a).is_zero() {
                return Err(SchurError::NoSolution(format!("failed to clear [{a}]")));
            }
            out.add_term(a, &c);
        }
        Ok(out)
    }
}

/// The two defining properties of a canonical element: bar invariance and
/// lower coefficients in `v^{-1} Z[v^{-1}]`.
pub fn check_canonical<F: Family>(eng: &Engine<F>, top: &Mat, e: &Elem) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    if !e.coeff(top).is_one() {
        bad.push(format!("{{{top}}}: leading coefficient {}", e.coeff(top)));
    }
    for (a, p) in e.iter() {
        if a != top && !p.in_v_inverse_z() {
            bad.push(format!("{{{top}}}: P at {a} is {p}"));
        }
        if a != top && !eng.family().leq(a, top) {
            bad.push(format!("{{{top}}}: {a} is not below the top"));
        }
    }
    if eng.bar(e)? != *e {
        bad.push(format!("{{{top}}} is not bar invariant"));
    }
    Ok(bad)
}

/// `P_{A,A'} ≠ 0` implies `ε_i(A) = ε_i(A')` for all `i`.
pub fn verify_epsilon_rigidity<'a, I>(tables: I, period: i64) -> Certificate
where
    I: IntoIterator<Item = &'a KlTable>,
{
    let mut cert = Certificate::new("epsilon-rigidity");
    for t in tables {
        for (a, p) in &t.entries {
            if p.is_zero() {
                continue;
            }
            cert.count();
            for i in 1..=period {
                if t.top.epsilon(i) != a.epsilon(i) {
                    cert.fail(format!(
                        "P({}, {a}) = {p} but ε_{i} differs: {} vs {}",
                        t.top,
                        t.top.epsilon(i),
                        a.epsilon(i)
                    ));
                }
            }
        }
    }
    cert
}

/// Downward closed set of matrices reached from `a` by bar supports, used
/// for exporting full tables.
pub fn bar_closure<F: Family>(eng: &Engine<F>, a: &Mat) -> Result<BTreeSet<Mat>> {
    let mut seen = BTreeSet::new();
    let mut queue = vec![a.clone()];
    while let Some(x) = queue.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for y in eng.bar_basis(&x)?.matrices() {
            if !seen.contains(y) {
                queue.push(y.clone());
            }
        }
    }
    Ok(seen)
}
