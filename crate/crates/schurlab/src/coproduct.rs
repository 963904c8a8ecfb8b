//! Comultiplications evaluated through generators. A coproduct supplies the
//! images of degree-one generators and of idempotents in the untwisted form;
//! divided powers, words, standard basis elements and the final block twist
//! are handled here.

use crate::algebra::{Elem, Engine, Family, Gen, Tensor};
use crate::combinatorics::Composition;
use crate::error::{Result, SchurError};
use crate::ring::LaurentPoly;

/// One summand `coeff · left ⊗ right` of the image of a generator; words are
/// applied rightmost first.
#[derive(Clone, Debug)]
pub struct DeltaTerm {
    pub coeff: LaurentPoly,
    pub left: Vec<Gen>,
    pub right: Vec<Gen>,
}

impl DeltaTerm {
    pub fn new(left: Vec<Gen>, right: Vec<Gen>) -> Self {
        Self { coeff: LaurentPoly::one(), left, right }
    }

    pub fn with_coeff(mut self, c: LaurentPoly) -> Self {
        self.coeff = c;
        self
    }
}

pub trait Coproduct: Send + Sync {
    fn source(&self) -> &dyn Family;
    fn left(&self) -> &dyn Family;
    fn right(&self) -> &dyn Family;
    /// `(d', d'')`.
    fn split(&self) -> (u32, u32);
    /// Untwisted image of `1_λ`.
    fn unit(&self, lambda: &Composition) -> Tensor;
    /// Untwisted image of a degree-one generator (`E(i,1)`, `F(i,1)`,
    /// `K(i,±1)`, `H(a,±1)`).
    fn generator(&self, g: &Gen) -> Result<Vec<DeltaTerm>>;
    /// Block twist and renormalisation turning the untwisted map into the
    /// final one.
    fn finish(&self, t: &Tensor) -> Result<Tensor>;
}

fn apply_terms(cp: &dyn Coproduct, terms: &[DeltaTerm], t: &Tensor) -> Result<Tensor> {
    let mut out = Tensor::zero();
    for (k, c) in t.iter() {
        for term in terms {
            let l = crate::algebra::act_word(cp.left(), &term.left, &Elem::basis(k[0].clone()))?;
            if l.is_zero() {
                continue;
            }
            let r = crate::algebra::act_word(cp.right(), &term.right, &Elem::basis(k[1].clone()))?;
            let cc = c * &term.coeff;
            for (m1, x1) in l.iter() {
                let c1 = &cc * x1;
                for (m2, x2) in r.iter() {
                    out.add_term(vec![m1.clone(), m2.clone()], &(&c1 * x2));
                }
            }
        }
    }
    Ok(out)
}

/// Untwisted image of a generator applied to `t` from the left.
pub fn apply_gen(cp: &dyn Coproduct, g: &Gen, t: &Tensor) -> Result<Tensor> {
    match g {
        Gen::E(_, 0) | Gen::F(_, 0) | Gen::K(_, 0) | Gen::H(_, 0) => Ok(t.clone()),
        Gen::E(i, a) | Gen::F(i, a) => {
            let one = match g {
                Gen::E(..) => Gen::E(*i, 1),
                _ => Gen::F(*i, 1),
            };
            let terms = cp.generator(&one)?;
            let mut cur = t.clone();
            for _ in 0..*a {
                cur = apply_terms(cp, &terms, &cur)?;
            }
            if *a > 1 {
                cur = cur.div_exact(&LaurentPoly::quantum_factorial(*a))?;
            }
            Ok(cur)
        }
        Gen::K(i, m) | Gen::H(i, m) => {
            let s = m.signum();
            let one = match g {
                Gen::K(..) => Gen::K(*i, s),
                _ => Gen::H(*i, s),
            };
            let terms = cp.generator(&one)?;
            let mut cur = t.clone();
            for _ in 0..m.unsigned_abs() {
                cur = apply_terms(cp, &terms, &cur)?;
            }
            Ok(cur)
        }
        Gen::Idem(lambda) => {
            let keep: std::collections::BTreeSet<(Composition, Composition)> = cp
                .unit(lambda)
                .iter()
                .map(|(k, _)| (k[0].ro(), k[1].ro()))
                .collect();
            let mut out = Tensor::zero();
            for (k, c) in t.iter() {
                if keep.contains(&(k[0].ro(), k[1].ro())) {
                    out.add_term(k.clone(), c);
                }
            }
            Ok(out)
        }
    }
}

/// Untwisted image of a word acting on the unit of total degree `d`.
pub fn delta_word_untwisted(cp: &dyn Coproduct, word: &[Gen], d: u32) -> Result<Tensor> {
    let (d1, d2) = cp.split();
    if d1 + d2 != d {
        return Err(SchurError::Validation(format!(
            "split {d1}+{d2} does not add up to {d}"
        )));
    }
    let mut t = Tensor::zero();
    for l in cp.source().weights(d) {
        t.add_scaled(&cp.unit(&l), &LaurentPoly::one());
    }
    for g in word.iter().rev() {
        t = apply_gen(cp, g, &t)?;
    }
    Ok(t)
}

/// Image of a generator word (the word acts on the unit).
pub fn delta_word(cp: &dyn Coproduct, word: &[Gen], d: u32) -> Result<Tensor> {
    cp.finish(&delta_word_untwisted(cp, word, d)?)
}

/// Untwisted image of a monomial `M_A`.
fn delta_monomial<F: Family>(cp: &dyn Coproduct, eng: &Engine<F>, a: &crate::Mat) -> Result<Tensor> {
    let fam = eng.family();
    let mut t = cp.unit(&a.co());
    for g in fam.monomial_factors(a)?.iter().rev() {
        for x in fam.factor_word(g)?.iter().rev() {
            t = apply_gen(cp, x, &t)?;
        }
    }
    Ok(t)
}

/// Untwisted image of an element given in the standard basis.
pub fn delta_elem_untwisted<F: Family>(cp: &dyn Coproduct, eng: &Engine<F>, x: &Elem) -> Result<Tensor> {
    let mut out = Tensor::zero();
    let mut memo: std::collections::BTreeMap<crate::Mat, Tensor> = Default::default();
    for (a, c) in x.iter() {
        let r = eng.monomial_inverse(a)?;
        for (b, s) in r.iter() {
            if !memo.contains_key(b) {
                memo.insert(b.clone(), delta_monomial(cp, eng, b)?);
            }
            out.add_scaled(&memo[b], &(c * s));
        }
    }
    Ok(out)
}

/// Image of an element given in the standard basis.
pub fn delta_elem<F: Family>(cp: &dyn Coproduct, eng: &Engine<F>, x: &Elem) -> Result<Tensor> {
    cp.finish(&delta_elem_untwisted(cp, eng, x)?)
}

/// Product in a tensor product of two algebras.
pub fn tensor_mul<F: Family, G: Family>(
    left: &Engine<F>,
    right: &Engine<G>,
    x: &Tensor,
    y: &Tensor,
) -> Result<Tensor> {
    let mut out = Tensor::zero();
    for (k1, c1) in x.iter() {
        for (k2, c2) in y.iter() {
            if k1[0].co() != k2[0].ro() || k1[1].co() != k2[1].ro() {
                continue;
            }
            let l = left.mul(&Elem::basis(k1[0].clone()), &Elem::basis(k2[0].clone()))?;
            if l.is_zero() {
                continue;
            }
            let r = right.mul(&Elem::basis(k1[1].clone()), &Elem::basis(k2[1].clone()))?;
            let c = c1 * c2;
            for (m1, x1) in l.iter() {
                let cc = &c * x1;
                for (m2, x2) in r.iter() {
                    out.add_term(vec![m1.clone(), m2.clone()], &(&cc * x2));
                }
            }
        }
    }
    Ok(out)
}

/// The twist `Σ_{1≤i≤j≤n} b'_i b''_j − a'_i a''_j`.
pub fn block_twist(b1: &[u32], a1: &[u32], b2: &[u32], a2: &[u32]) -> i64 {
    let n = b1.len();
    let mut s = 0i64;
    for i in 0..n {
        for j in i..n {
            s += (b1[i] * b2[j]) as i64 - (a1[i] * a2[j]) as i64;
        }
    }
    s
}
