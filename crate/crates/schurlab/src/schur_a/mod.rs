//! The q-Schur algebras of type A, finite and affine.
//!
//! Products are computed with the Du-Fu formulas for semisimple generators
//! and extended to arbitrary elements through monomials. The comultiplication
//! is evaluated on generators; a second route through the flag oracle is
//! provided for cross-checks.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use parking_lot::RwLock;

use crate::algebra::{Elem, Engine, Family, Gen, Tensor};
use crate::combinatorics::{compositions, Composition, Mat};
use crate::coproduct::{block_twist, delta_elem, Coproduct, DeltaTerm};
use crate::error::{Result, SchurError};
use crate::flag_oracle::Oracle;
use crate::ring::{qbinom_v, LaurentPoly};

mod verify;
pub use verify::*;

type Row = BTreeMap<i32, u32>;

/// Rows `0..=n+1` of a matrix; rows `0` and `n+1` come from periodicity and
/// are empty for finite matrices.
fn rows_of(a: &Mat) -> Vec<Row> {
    let n = a.n() as i32;
    let mut rows = vec![Row::new(); a.n() + 2];
    for &(i, j, x) in a.entries() {
        rows[i as usize].insert(j, x);
        if a.is_periodic() {
            if i == n {
                rows[0].insert(j - n, x);
            }
            if i == 1 {
                rows[a.n() + 1].insert(j + n, x);
            }
        }
    }
    rows
}

/// All ways to write `total` as a sum over the columns of `caps`, bounded by
/// the caps.
fn distribute(total: u32, caps: &Row) -> Vec<Row> {
    let cols: Vec<(i32, u32)> = caps.iter().map(|(j, c)| (*j, *c)).collect();
    let mut out = Vec::new();
    fn rec(k: usize, rem: u32, cols: &[(i32, u32)], cur: &mut Row, out: &mut Vec<Row>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if k == cols.len() {
            return;
        }
        let (j, cap) = cols[k];
        for t in (0..=rem.min(cap)).rev() {
            if t > 0 {
                cur.insert(j, t);
            }
            rec(k + 1, rem - t, cols, cur, out);
            cur.remove(&j);
        }
    }
    rec(0, total, &cols, &mut Row::new(), &mut out);
    out
}

fn shifted(r: &Row, by: i32) -> Row {
    r.iter().map(|(j, x)| (j + by, *x)).collect()
}

fn at(r: &Row, j: i32) -> i64 {
    r.get(&j).copied().unwrap_or(0) as i64
}

/// Shape of a semisimple matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Semisimple {
    Diagonal,
    /// `α_i` at `(i, i+1)`, indexed `1..=n`.
    Upper(Vec<u32>),
    /// `β_i` at `(i+1, i)`, indexed `1..=n`.
    Lower(Vec<u32>),
}

pub fn semisimple_shape(g: &Mat) -> Result<Semisimple> {
    let n = g.n();
    let mut up = vec![0u32; n + 1];
    let mut lo = vec![0u32; n + 1];
    for &(i, j, x) in g.entries() {
        match j - i {
            0 => {}
            1 => up[i as usize] += x,
            -1 => {
                let k = if i == 1 { n } else { i as usize - 1 };
                lo[k] += x;
            }
            _ => {
                return Err(SchurError::Validation(format!("{g} is not semisimple")));
            }
        }
    }
    let has_up = up.iter().any(|x| *x > 0);
    let has_lo = lo.iter().any(|x| *x > 0);
    if n == 1 && g.is_periodic() && has_up && has_lo {
        return Err(SchurError::Validation(format!("{g} is not semisimple")));
    }
    match (has_up, has_lo) {
        (false, false) => Ok(Semisimple::Diagonal),
        (true, false) => Ok(Semisimple::Upper(up)),
        (false, true) => Ok(Semisimple::Lower(lo)),
        _ => Err(SchurError::Validation(format!("{g} is not semisimple"))),
    }
}

/// `e_B * e_A` in the e-basis, coefficients in `q = v^2`, for semisimple `B`.
pub fn df_product(b: &Mat, a: &Mat) -> Result<Vec<(Mat, LaurentPoly)>> {
    if b.co() != a.ro() {
        return Err(SchurError::CompositionMismatch(format!(
            "co(B) = {:?} but ro(A) = {:?}",
            b.co(),
            a.ro()
        )));
    }
    let n = a.n();
    let ni = n as i32;
    let periodic = a.is_periodic();
    let rows = rows_of(a);
    let shape = semisimple_shape(b)?;
    let (mults, upper) = match shape {
        Semisimple::Diagonal => return Ok(vec![(a.clone(), LaurentPoly::one())]),
        Semisimple::Upper(x) => (x, true),
        Semisimple::Lower(x) => (x, false),
    };
    let mut choices: Vec<Vec<Row>> = Vec::with_capacity(n);
    for i in 1..=n {
        let src = if upper { &rows[i + 1] } else { &rows[i] };
        let c = distribute(mults[i], src);
        if c.is_empty() {
            return Ok(vec![]);
        }
        choices.push(c);
    }
    let mut acc: BTreeMap<Mat, LaurentPoly> = BTreeMap::new();
    for pick in choices.iter().multi_cartesian_product() {
        // t[i] for i in 0..=n
        let mut t: Vec<Row> = Vec::with_capacity(n + 1);
        t.push(if periodic { shifted(pick[n - 1], -ni) } else { Row::new() });
        t.extend(pick.iter().map(|r| (*r).clone()));
        let mut exp = 0i64;
        let mut coeff = LaurentPoly::one();
        let mut entries: Vec<(i32, i32, i64)> = Vec::new();
        for i in 1..=n {
            let row = &rows[i];
            let cols: std::collections::BTreeSet<i32> = row
                .keys()
                .chain(t[i].keys())
                .chain(t[i - 1].keys())
                .copied()
                .collect();
            for &j in &cols {
                let aij = at(row, j);
                let (tij, tpj) = (at(&t[i], j), at(&t[i - 1], j));
                let c = if upper { aij + tij - tpj } else { aij - tij + tpj };
                entries.push((i as i32, j, c));
                if upper && tij > 0 {
                    coeff = &coeff * &qbinom_v(c, tij);
                }
                if !upper && tpj > 0 {
                    coeff = &coeff * &qbinom_v(c, tpj);
                }
            }
            if upper {
                // Σ_{j>l} (a_ij − t_{i−1,j}) t_il
                for (&l, &tl) in &t[i] {
                    for &j in cols.range(l + 1..) {
                        exp += (at(row, j) - at(&t[i - 1], j)) * tl as i64;
                    }
                }
            } else {
                // Σ_{j<l} (a_ij − t_ij) t_{i−1,l}
                for (&l, &tl) in &t[i - 1] {
                    for &j in cols.range(..l) {
                        exp += (at(row, j) - at(&t[i], j)) * tl as i64;
                    }
                }
            }
        }
        let c = Mat::from_entries(n, periodic, entries)?;
        let term = coeff.shift(2 * exp);
        let slot = acc.entry(c).or_default();
        *slot += &term;
    }
    Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// The finite (`periodic = false`) or affine q-Schur algebra with `n` steps.
#[derive(Clone)]
pub struct TypeA {
    n: usize,
    periodic: bool,
    checked_words: Arc<RwLock<HashSet<Mat>>>,
}

impl TypeA {
    pub fn new(n: usize, periodic: bool) -> Result<Self> {
        if n == 0 {
            return Err(SchurError::Validation("n must be positive".into()));
        }
        Ok(Self { n, periodic, checked_words: Arc::new(RwLock::new(HashSet::new())) })
    }

    pub fn finite(n: usize) -> Self {
        Self::new(n, false).expect("n > 0")
    }

    pub fn affine(n: usize) -> Self {
        Self::new(n, true).expect("n > 0")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_periodic(&self) -> bool {
        self.periodic
    }

    fn index(&self, i: i32) -> Result<i32> {
        let n = self.n as i32;
        if self.periodic {
            return Ok((i - 1).rem_euclid(n) + 1);
        }
        if i < 1 || i >= n {
            return Err(SchurError::Validation(format!("generator index {i} outside [1,{}]", n - 1)));
        }
        Ok(i)
    }

    fn weight_at(&self, lambda: &[u32], a: i32) -> i64 {
        let n = self.n as i32;
        lambda[((a - 1).rem_euclid(n)) as usize] as i64
    }

    /// Matrix of `E_i^{(a)} 1_λ` (`lower = true`) or `F_i^{(a)} 1_λ`.
    pub fn chevalley_matrix(&self, i: i32, a: u32, lambda: &[u32], lower: bool) -> Option<Mat> {
        let i = self.index(i).ok()?;
        let d = Mat::diag(lambda, self.periodic);
        let a = a as i64;
        if lower {
            d.add_at(&[(i, i, -a), (i + 1, i, a)])
        } else {
            d.add_at(&[(i + 1, i + 1, -a), (i, i + 1, a)])
        }
    }

    /// Cyclic order in which single-index divided powers compose to a
    /// semisimple matrix; `None` when every index is occupied.
    fn factor_order(&self, mults: &[u32], descending: bool) -> Option<Vec<i32>> {
        let n = self.n as i32;
        let gap = if self.periodic {
            (1..=n).find(|k| mults[*k as usize] == 0)?
        } else {
            n
        };
        let order = (1..n).map(|s| {
            let k = if descending { gap - s } else { gap + s };
            (k - 1).rem_euclid(n) + 1
        });
        Some(order.collect())
    }
}

impl Family for TypeA {
    fn name(&self) -> &'static str {
        if self.periodic {
            "affine-a"
        } else {
            "a"
        }
    }

    fn d_stat(&self, a: &Mat) -> Result<i64> {
        Ok(a.d_stat())
    }

    fn monomial_factors(&self, a: &Mat) -> Result<Vec<Mat>> {
        let n = self.n as i32;
        let mut cur = a.clone();
        let top = if self.periodic { a.spread() as i32 } else { n - 1 };
        let mut out = Vec::new();
        for k in (1..=top).rev() {
            let up: Vec<i32> = if self.periodic { (1..=n).collect() } else { (1..=n - k).collect() };
            let alpha: Vec<(i32, u32)> = up.iter().map(|&i| (i, cur.get(i, i + k))).filter(|x| x.1 > 0).collect();
            if !alpha.is_empty() {
                let ro = cur.ro();
                let mut e: Vec<(i32, i32, i64)> = (1..=n).map(|i| (i, i, ro[i as usize - 1] as i64)).collect();
                let mut moves = Vec::new();
                for &(i, x) in &alpha {
                    e.push((i, i, -(x as i64)));
                    e.push((i, i + 1, x as i64));
                    moves.push((i, i + k, -(x as i64)));
                    moves.push((i + 1, i + k, x as i64));
                }
                out.push(Mat::from_entries(self.n, self.periodic, e)?);
                cur = cur.add_at(&moves).expect("peeling keeps entries nonnegative");
            }
            let lo: Vec<i32> = if self.periodic { (1..=n).collect() } else { (k..n).collect() };
            let beta: Vec<(i32, u32)> = lo
                .iter()
                .map(|&i| (i, cur.get(i + 1, i + 1 - k)))
                .filter(|x| x.1 > 0)
                .collect();
            if !beta.is_empty() {
                let ro = cur.ro();
                let mut e: Vec<(i32, i32, i64)> = (1..=n).map(|i| (i, i, ro[i as usize - 1] as i64)).collect();
                let mut moves = Vec::new();
                for &(i, x) in &beta {
                    e.push((i + 1, i + 1, -(x as i64)));
                    e.push((i + 1, i, x as i64));
                    moves.push((i + 1, i + 1 - k, -(x as i64)));
                    moves.push((i, i + 1 - k, x as i64));
                }
                out.push(Mat::from_entries(self.n, self.periodic, e)?);
                cur = cur.add_at(&moves).expect("peeling keeps entries nonnegative");
            }
        }
        if !cur.is_diagonal() {
            return Err(SchurError::TriangularityFailure(format!("peeling {a} left {cur}")));
        }
        Ok(out)
    }

    fn apply_factor(&self, g: &Mat, x: &Elem) -> Result<Elem> {
        let dg = g.d_stat();
        let co = g.co();
        let mut out = Elem::zero();
        for (a, c) in x.iter() {
            if a.ro() != co {
                continue;
            }
            let base = -dg - a.d_stat();
            for (m, q) in df_product(g, a)? {
                let k = base + m.d_stat();
                out.add_term(m, &(c * &q.shift(k)));
            }
        }
        Ok(out)
    }

    fn act(&self, g: &Gen, x: &Elem) -> Result<Elem> {
        let mut out = Elem::zero();
        match g {
            Gen::E(i, a) | Gen::F(i, a) => {
                self.index(*i)?;
                let lower = matches!(g, Gen::E(..));
                for (m, c) in x.iter() {
                    if let Some(gm) = self.chevalley_matrix(*i, *a, &m.ro(), lower) {
                        out.add_scaled(&self.apply_factor(&gm, &Elem::basis(m.clone()))?, c);
                    }
                }
            }
            Gen::K(i, p) => {
                let i = self.index(*i)?;
                for (m, c) in x.iter() {
                    let l = m.ro();
                    let e = (self.weight_at(&l, i + 1) - self.weight_at(&l, i)) * *p as i64;
                    out.add_term(m.clone(), &c.shift(e));
                }
            }
            Gen::H(a, p) => {
                let n = self.n as i32;
                if !self.periodic && (*a < 1 || *a > n) {
                    return Err(SchurError::Validation(format!("H index {a} outside [1,{n}]")));
                }
                for (m, c) in x.iter() {
                    let e = self.weight_at(&m.ro(), *a) * *p as i64;
                    out.add_term(m.clone(), &c.shift(e));
                }
            }
            Gen::Idem(l) => {
                if l.len() != self.n {
                    return Err(SchurError::Validation(format!("weight {l:?} has wrong length")));
                }
                out = x.filter(|m| m.ro() == *l);
            }
        }
        Ok(out)
    }

    fn factor_word(&self, g: &Mat) -> Result<Vec<Gen>> {
        let word: Vec<Gen> = match semisimple_shape(g)? {
            Semisimple::Diagonal => vec![],
            Semisimple::Upper(alpha) => self
                .factor_order(&alpha, true)
                .ok_or_else(|| SchurError::NotInChevalleyImage(format!("{g}: every upper entry is occupied")))?
                .into_iter()
                .filter(|i| alpha[*i as usize] > 0)
                .map(|i| Gen::F(i, alpha[i as usize]))
                .collect(),
            Semisimple::Lower(beta) => self
                .factor_order(&beta, false)
                .ok_or_else(|| SchurError::NotInChevalleyImage(format!("{g}: every lower entry is occupied")))?
                .into_iter()
                .filter(|i| beta[*i as usize] > 0)
                .map(|i| Gen::E(i, beta[i as usize]))
                .collect(),
        };
        if !self.checked_words.read().contains(g) {
            let got = crate::algebra::act_word(self, &word, &Elem::basis(Mat::diag(&g.co(), self.periodic)))?;
            if got != Elem::basis(g.clone()) {
                return Err(SchurError::ConsistencyFailure(format!(
                    "generator word for {g} gives {got:?}"
                )));
            }
            self.checked_words.write().insert(g.clone());
        }
        Ok(word)
    }

    fn leq(&self, a: &Mat, b: &Mat) -> bool {
        a.bruhat_leq(b)
    }

    fn weights(&self, d: u32) -> Vec<Composition> {
        compositions(d, self.n)
    }

    fn idempotent(&self, lambda: &Composition) -> Mat {
        Mat::diag(lambda, self.periodic)
    }
}

/// Left multiplication by a generator on the unit: the element `g` of the
/// algebra in degree `d`.
pub fn generator(fam: &TypeA, g: &Gen, d: u32) -> Result<Elem> {
    fam.act(g, &crate::algebra::unit(fam, d))
}

/// Which normalisation of the affine comultiplication to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineStage {
    /// `Δ̃` with no twist.
    Untwisted,
    /// `Δ_v` (finite) or `Δ†` (affine): block twist only.
    Twisted,
    /// Affine `Δ = (ξ ⊗ ξ) Δ†`; same as `Twisted` in the finite case.
    Full,
}

/// The comultiplication `S_d → S_{d'} ⊗ S_{d''}` of type A.
pub struct TypeACoproduct {
    fam: TypeA,
    d1: u32,
    d2: u32,
    stage: AffineStage,
}

impl TypeACoproduct {
    pub fn new(fam: TypeA, d1: u32, d2: u32, stage: AffineStage) -> Self {
        Self { fam, d1, d2, stage }
    }
}

impl Coproduct for TypeACoproduct {
    fn source(&self) -> &dyn Family {
        &self.fam
    }
    fn left(&self) -> &dyn Family {
        &self.fam
    }
    fn right(&self) -> &dyn Family {
        &self.fam
    }
    fn split(&self) -> (u32, u32) {
        (self.d1, self.d2)
    }

    fn unit(&self, lambda: &Composition) -> Tensor {
        let mut t = Tensor::zero();
        for l1 in compositions(self.d1, self.fam.n) {
            if l1.iter().zip(lambda).any(|(x, y)| x > y) {
                continue;
            }
            let l2: Composition = lambda.iter().zip(&l1).map(|(y, x)| y - x).collect();
            t.add_term(
                vec![self.fam.idempotent(&l1), self.fam.idempotent(&l2)],
                &LaurentPoly::one(),
            );
        }
        t
    }

    fn generator(&self, g: &Gen) -> Result<Vec<DeltaTerm>> {
        Ok(match *g {
            Gen::E(i, 1) => vec![
                DeltaTerm::new(vec![Gen::E(i, 1)], vec![Gen::H(i + 1, 1)]),
                DeltaTerm::new(vec![Gen::H(i + 1, -1)], vec![Gen::E(i, 1)]),
            ],
            Gen::F(i, 1) => vec![
                DeltaTerm::new(vec![Gen::F(i, 1)], vec![Gen::H(i, -1)]),
                DeltaTerm::new(vec![Gen::H(i, 1)], vec![Gen::F(i, 1)]),
            ],
            Gen::K(i, s) => vec![DeltaTerm::new(vec![Gen::K(i, s)], vec![Gen::K(i, s)])],
            Gen::H(a, s) => vec![DeltaTerm::new(vec![Gen::H(a, s)], vec![Gen::H(a, s)])],
            _ => return Err(SchurError::Validation(format!("{g} is not a degree-one generator"))),
        })
    }

    fn finish(&self, t: &Tensor) -> Result<Tensor> {
        if self.stage == AffineStage::Untwisted {
            return Ok(t.clone());
        }
        let n = self.fam.n as i64;
        let (d1, d2) = (self.d1 as i64, self.d2 as i64);
        let full = self.stage == AffineStage::Full && self.fam.periodic;
        Ok(t.twist_by(|k| {
            let mut e = block_twist(&k[0].ro(), &k[0].co(), &k[1].ro(), &k[1].co());
            if full {
                e += d2 * k[0].epsilon(n) - d1 * k[1].epsilon(n);
            }
            e
        }))
    }
}

/// `ξ_{d,i,c}([A]) = v^{c ε_i(A)} [A]`.
pub fn xi(x: &Elem, i: i64, c: i64) -> Elem {
    x.twist_by(|a| c * a.epsilon(i))
}

/// `χ([M]) = v^{-d_M} det M` on `S_n`; nonzero only on permutation matrices.
pub fn chi(m: &Mat) -> Option<LaurentPoly> {
    let n = m.n();
    if m.total() as usize != n || m.entries().len() != n || m.entries().iter().any(|e| e.2 != 1) {
        return None;
    }
    let perm: Vec<i32> = m.entries().iter().map(|e| e.1).collect();
    if perm.iter().unique().count() != n || m.ro().iter().any(|x| *x != 1) {
        return None;
    }
    let inversions = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some(LaurentPoly::monomial(sign, -m.d_stat()))
}

/// Exponent `Σ_i (|V_i| − |V'_i|)` with `V` of type `ro` and `V'` of type
/// `co`. The transfer map rescales the first tensor factor of `Δ̃` by
/// `v` to this power; on the blocks that survive `χ` this equals the block
/// twist, so the result coincides with `(1 ⊗ χ) Δ_v`.
pub fn transfer_xi_exponent(m: &Mat) -> i64 {
    let (ro, co) = (m.ro(), m.co());
    let mut s = 0i64;
    let (mut cr, mut cc) = (0i64, 0i64);
    for i in 0..ro.len() {
        cr += ro[i] as i64;
        cc += co[i] as i64;
        s += cr - cc;
    }
    s
}

/// The transfer map `φ_{d,d-n}: S_d → S_{d-n}`, sending `E_i, F_i, K_i^{±1}`
/// to their namesakes.
pub fn transfer(eng: &Engine<TypeA>, x: &Elem) -> Result<Elem> {
    let fam = eng.family().clone();
    if fam.periodic {
        return Err(SchurError::Validation("the affine transfer map is not available".into()));
    }
    let n = fam.n as u32;
    let d = match x.matrices().next() {
        Some(a) => a.total(),
        None => return Ok(Elem::zero()),
    };
    if d < n {
        return Err(SchurError::Validation(format!("transfer needs d ≥ n, got d = {d}")));
    }
    let cp = TypeACoproduct::new(fam, d - n, n, AffineStage::Untwisted);
    let t = delta_elem(&cp, eng, x)?;
    let mut out = Elem::zero();
    for (k, c) in t.iter() {
        if let Some(ch) = chi(&k[1]) {
            out.add_term(k[0].clone(), &(c * &ch).shift(transfer_xi_exponent(&k[0])));
        }
    }
    Ok(out)
}

/// Oracle comultiplication counts of `e_A` at one `q`, in the e-basis.
pub fn comult_counts(a: &Mat, d2: u32, q: usize) -> Result<BTreeMap<(Mat, Mat), u64>> {
    Oracle::new(q)?.comult_count(a, d2)
}

/// Convert an untwisted `Δ̃([A])` to e-basis coefficients evaluated at `q`.
pub fn predicted_counts(a: &Mat, t: &Tensor, q: i64) -> Result<BTreeMap<(Mat, Mat), BigInt>> {
    let mut out = BTreeMap::new();
    for (k, c) in t.iter() {
        let e = a.d_stat() - k[0].d_stat() - k[1].d_stat();
        let val = c.shift(e).eval_q(q).ok_or_else(|| {
            SchurError::ConsistencyFailure(format!("odd exponent in Δ̃ coefficient {c}"))
        })?;
        if !val.is_integer() {
            return Err(SchurError::ConsistencyFailure(format!("non-integral count {val}")));
        }
        let v = val.to_integer();
        if !v.is_zero() {
            out.insert((k[0].clone(), k[1].clone()), v);
        }
    }
    Ok(out)
}
