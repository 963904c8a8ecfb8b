//! Shared machinery for the Schur-type algebras: elements and tensors over
//! `Z[v, v^-1]`, generator words, and an engine that derives products, the
//! bar involution and monomial expansions from a handful of primitives
//! supplied by each algebra family.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::Arc;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Composition, Mat};
use crate::error::{Result, SchurError};
use crate::ring::LaurentPoly;

/// Finite `Z[v, v^-1]`-combination of basis elements indexed by matrices.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Elem {
    terms: BTreeMap<Mat, LaurentPoly>,
}

impl Elem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(a: Mat) -> Self {
        let mut e = Self::zero();
        e.terms.insert(a, LaurentPoly::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Mat, LaurentPoly)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (a, c) in it {
            e.add_term(a, &c);
        }
        e
    }

    pub fn add_term(&mut self, a: Mat, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&a) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&a);
                }
            }
            None => {
                self.terms.insert(a, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Elem, c: &LaurentPoly) {
        for (a, x) in &other.terms {
            self.add_term(a.clone(), &(x * c));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Mat, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Mat) -> LaurentPoly {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(a, x)| (a.clone(), x * c)))
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, x)| (a.clone(), x.shift(k))).collect(),
        }
    }

    /// Apply the bar map to the coefficients only.
    pub fn bar_coeffs(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, x)| (a.clone(), x.bar())).collect(),
        }
    }

    /// Multiply each term by a matrix-dependent power of `v`.
    pub fn twist_by<F: Fn(&Mat) -> i64>(&self, f: F) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, x)| (a.clone(), x.shift(f(a)))).collect(),
        }
    }

    pub fn filter<F: Fn(&Mat) -> bool>(&self, f: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| f(a))
                .map(|(a, x)| (a.clone(), x.clone()))
                .collect(),
        }
    }

    pub fn matrices(&self) -> impl Iterator<Item = &Mat> {
        self.terms.keys()
    }

    pub fn all_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl Add for &Elem {
    type Output = Elem;
    fn add(self, rhs: &Elem) -> Elem {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl Sub for &Elem {
    type Output = Elem;
    fn sub(self, rhs: &Elem) -> Elem {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::constant(-1));
        out
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, c)| format!("({c})[{a}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    matrix: Mat,
    coeff: LaurentPoly,
}

impl Serialize for Elem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(a, c)| TermRepr { matrix: a.clone(), coeff: c.clone() })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Elem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<TermRepr> = Vec::deserialize(d)?;
        Ok(Self::from_terms(v.into_iter().map(|t| (t.matrix, t.coeff))))
    }
}

/// Element of a tensor product of algebras; keys list one matrix per factor.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Tensor {
    terms: BTreeMap<Vec<Mat>, LaurentPoly>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, k: Vec<Mat>, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, c: &LaurentPoly) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), &(x * c));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Mat>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &[Mat]) -> LaurentPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn twist_by<F: Fn(&[Mat]) -> i64>(&self, f: F) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x.shift(f(k)))).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut t = Tensor::zero();
        t.add_scaled(self, c);
        t
    }

    /// Divide every coefficient exactly.
    pub fn div_exact(&self, c: &LaurentPoly) -> Result<Self> {
        let mut t = Tensor::zero();
        for (k, x) in &self.terms {
            t.add_term(k.clone(), &x.div_exact(c)?);
        }
        Ok(t)
    }

    pub fn all_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Replace factor `pos` of every term by an expansion of it.
    pub fn expand_factor<F>(&self, pos: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&Mat) -> Result<Elem>,
    {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            for (m, x) in f(&k[pos])?.iter() {
                let mut key = k.clone();
                key[pos] = m.clone();
                out.add_term(key, &(c * x));
            }
        }
        Ok(out)
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::constant(-1));
        out
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let f: Vec<String> = k.iter().map(|m| format!("[{m}]")).collect();
                format!("({c}){}", f.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermRepr {
    matrices: Vec<Mat>,
    coeff: LaurentPoly,
}

impl Serialize for Tensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TensorTermRepr> = self
            .terms
            .iter()
            .map(|(k, c)| TensorTermRepr { matrices: k.clone(), coeff: c.clone() })
            .collect();
        v.serialize(s)
    }
}

/// A generator of a Schur-type algebra acting on the left. The same labels
/// serve the type-A algebras (`E`, `F`, `K`, `H`) and the coideal ones
/// (`e`, `f`, `k`, `h`); the acting family decides the meaning.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    /// Divided power `E_i^{(a)}`.
    E(i32, u32),
    /// Divided power `F_i^{(a)}`.
    F(i32, u32),
    /// `K_i^m`.
    K(i32, i32),
    /// `H_a^m`.
    H(i32, i32),
    /// Idempotent `1_λ`.
    Idem(Composition),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i, 1) => write!(f, "E{i}"),
            Gen::E(i, a) => write!(f, "E{i}^({a})"),
            Gen::F(i, 1) => write!(f, "F{i}"),
            Gen::F(i, a) => write!(f, "F{i}^({a})"),
            Gen::K(i, m) => write!(f, "K{i}^{m}"),
            Gen::H(i, m) => write!(f, "H{i}^{m}"),
            Gen::Idem(l) => write!(f, "1{l:?}"),
        }
    }
}

/// Primitives supplied by an algebra family. Everything is expressed in the
/// standard basis `[A]`.
pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;

    /// Exponent `d` in `[A] = v^{-d} e_A`.
    fn d_stat(&self, a: &Mat) -> Result<i64>;

    /// Matrices `g_1, …, g_k` of the factors of the monomial `M_A`, leftmost
    /// first, so that `M_A = [g_1] ⋯ [g_k] 1_{co(A)}`.
    fn monomial_factors(&self, a: &Mat) -> Result<Vec<Mat>>;

    /// Left multiplication `[g] · x` by a factor matrix.
    fn apply_factor(&self, g: &Mat, x: &Elem) -> Result<Elem>;

    /// Left multiplication by a generator.
    fn act(&self, g: &Gen, x: &Elem) -> Result<Elem>;

    /// A factor matrix written as a word in divided-power generators,
    /// leftmost first, acting on `1_{co(g)}`.
    fn factor_word(&self, g: &Mat) -> Result<Vec<Gen>>;

    /// Partial order used for triangularity.
    fn leq(&self, a: &Mat, b: &Mat) -> bool;

    /// All compositions indexing idempotents of the algebra with total `d`.
    fn weights(&self, d: u32) -> Vec<Composition>;

    /// The diagonal matrix of the idempotent `1_λ`.
    fn idempotent(&self, lambda: &Composition) -> Mat;
}

/// Apply a word, rightmost generator first.
pub fn act_word(fam: &dyn Family, word: &[Gen], x: &Elem) -> Result<Elem> {
    let mut cur = x.clone();
    for g in word.iter().rev() {
        cur = fam.act(g, &cur)?;
    }
    Ok(cur)
}

/// The unit `Σ_λ 1_λ` in total degree `d`.
pub fn unit(fam: &dyn Family, d: u32) -> Elem {
    Elem::from_terms(
        fam.weights(d)
            .iter()
            .map(|l| (fam.idempotent(l), LaurentPoly::one())),
    )
}

type Cache = RwLock<HashMap<Mat, Arc<Elem>>>;

/// Products, bar involution and monomial data derived from a family.
pub struct Engine<F: Family> {
    fam: F,
    monomials: Cache,
    inverse: Cache,
    canonical: Cache,
}

impl<F: Family> Engine<F> {
    pub fn new(fam: F) -> Self {
        Self {
            fam,
            monomials: RwLock::new(HashMap::new()),
            inverse: RwLock::new(HashMap::new()),
            canonical: RwLock::new(HashMap::new()),
        }
    }

    pub fn family(&self) -> &F {
        &self.fam
    }

    fn cached<G>(cache: &Cache, a: &Mat, build: G) -> Result<Arc<Elem>>
    where
        G: FnOnce() -> Result<Elem>,
    {
        if let Some(x) = cache.read().get(a) {
            return Ok(x.clone());
        }
        let x = Arc::new(build()?);
        // insert-once: a concurrent writer computed the same value
        Ok(cache.write().entry(a.clone()).or_insert(x).clone())
    }

    /// Product of the monomial factors of `a` applied to `x`.
    fn apply_factors(&self, a: &Mat, x: &Elem) -> Result<Elem> {
        let mut cur = x.filter(|m| m.ro() == a.co());
        for g in self.fam.monomial_factors(a)?.iter().rev() {
            cur = self.fam.apply_factor(g, &cur)?;
        }
        Ok(cur)
    }

    /// Expansion `M_A = [A] + Σ_{A' ≺ A} S_{A,A'} [A']`, checked.
    pub fn monomial(&self, a: &Mat) -> Result<Arc<Elem>> {
        Self::cached(&self.monomials, a, || {
            let unit = Elem::basis(self.fam.idempotent(&a.co()));
            let m = self.apply_factors(a, &unit)?;
            if !m.coeff(a).is_one() {
                return Err(SchurError::TriangularityFailure(format!(
                    "monomial of {a} has leading coefficient {}",
                    m.coeff(a)
                )));
            }
            for b in m.matrices() {
                if b != a && !self.fam.leq(b, a) {
                    return Err(SchurError::TriangularityFailure(format!(
                        "monomial of {a} contains {b}, which is not below it"
                    )));
                }
            }
            Ok(m)
        })
    }

    /// Inverse expansion `[A] = Σ R_{A,A'} M_{A'}`.
    pub fn monomial_inverse(&self, a: &Mat) -> Result<Arc<Elem>> {
        if let Some(x) = self.inverse.read().get(a) {
            return Ok(x.clone());
        }
        let m = self.monomial(a)?;
        let mut r = Elem::basis(a.clone());
        for (b, s) in m.iter() {
            if b == a {
                continue;
            }
            let rb = self.monomial_inverse(b)?;
            r.add_scaled(&rb, &-s);
        }
        let r = Arc::new(r);
        Ok(self.inverse.write().entry(a.clone()).or_insert(r).clone())
    }

    /// `x · y`.
    pub fn mul(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        let mut out = Elem::zero();
        for (a, c) in x.iter() {
            let r = self.monomial_inverse(a)?;
            for (b, s) in r.iter() {
                let prod = self.apply_factors(b, y)?;
                out.add_scaled(&prod, &(c * s));
            }
        }
        Ok(out)
    }

    /// Bar involution: monomials are bar invariant.
    pub fn bar(&self, x: &Elem) -> Result<Elem> {
        let mut out = Elem::zero();
        for (a, c) in x.iter() {
            let r = self.monomial_inverse(a)?;
            for (b, s) in r.iter() {
                let m = self.monomial(b)?;
                out.add_scaled(&m, &(c.bar() * s.bar()));
            }
        }
        Ok(out)
    }

    /// `bar([A])`.
    pub fn bar_basis(&self, a: &Mat) -> Result<Elem> {
        self.bar(&Elem::basis(a.clone()))
    }

    pub(crate) fn canonical_cache(&self) -> &RwLock<HashMap<Mat, Arc<Elem>>> {
        &self.canonical
    }

    pub fn act_word(&self, word: &[Gen], x: &Elem) -> Result<Elem> {
        act_word(&self.fam, word, x)
    }
}
