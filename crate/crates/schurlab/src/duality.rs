//! Tensor spaces and the ζ map between the type-B and type-A dualities.
//!
//! `T_{d,n}` is realized as the column slice `co = 1^d 0^{d+1}` of a type-A
//! Schur algebra and `T^ȷ_{d,n}` as the slice `co = 1^{2d+1}` of a ȷSchur
//! algebra. Both live on `N = max(n, 2d+1)` steps, with the rows and the
//! columns placed in the middle so that central symmetry is preserved; the
//! extra steps are empty and do not change any statistic.

use std::collections::BTreeMap;

use crate::algebra::{Elem, Engine, Family};
use crate::certificate::Certificate;
use crate::coideal::{JCoproduct, JFamily, JStage};
use crate::combinatorics::{Mat, ZeroOneColumnMatrix};
use crate::coproduct::delta_elem;
use crate::error::{Result, SchurError};
use crate::schur_a::TypeA;

/// Both tensor spaces for fixed `(d, n)` with their ambient engines.
pub struct TensorSpaces {
    n: usize,
    d: usize,
    big: usize,
    jeng: Engine<JFamily>,
    aeng: Engine<TypeA>,
}

impl TensorSpaces {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if n.is_multiple_of(2) || n < 3 {
            return Err(SchurError::Validation(format!("type-B duality needs odd n ≥ 3, got {n}")));
        }
        if d == 0 {
            return Err(SchurError::Validation("tensor spaces need d ≥ 1".into()));
        }
        let big = n.max(2 * d + 1);
        Ok(Self {
            n,
            d,
            big,
            jeng: Engine::new(JFamily::new(big)?),
            aeng: Engine::new(TypeA::finite(big)),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn j_engine(&self) -> &Engine<JFamily> {
        &self.jeng
    }

    pub fn a_engine(&self) -> &Engine<TypeA> {
        &self.aeng
    }

    fn row_offset(&self) -> i32 {
        ((self.big - self.n) / 2) as i32
    }

    fn col_offset(&self) -> i32 {
        ((self.big - 2 * self.d - 1) / 2) as i32
    }

    fn embed(&self, a: &ZeroOneColumnMatrix) -> Result<Mat> {
        let (p, q) = (self.row_offset(), self.col_offset());
        Mat::from_entries(
            self.big,
            false,
            a.rows.iter().enumerate().map(|(j, &i)| (i as i32 + p, j as i32 + 1 + q, 1)),
        )
    }

    /// Column sums of the slice: `1` on the given range of middle columns.
    fn slice_co(&self, width: usize) -> Vec<u32> {
        let q = self.col_offset() as usize;
        (0..self.big).map(|k| u32::from(k >= q && k < q + width)).collect()
    }

    /// `A ∈ Π_{d,n}` as a matrix of the type-A slice.
    pub fn matrix_a(&self, a: &ZeroOneColumnMatrix) -> Result<Mat> {
        if a.n != self.n || a.cols() != self.d {
            return Err(SchurError::Validation(format!("{a:?} is not in Π_{{{},{}}}", self.d, self.n)));
        }
        self.embed(a)
    }

    /// `A^J ∈ Π^ȷ_{d,n}` as a matrix of the ȷ slice.
    pub fn matrix_j(&self, a: &ZeroOneColumnMatrix) -> Result<Mat> {
        self.embed(&self.matrix_a(a).map(|_| a.to_aj())??)
    }

    /// Read a slice matrix back as an element of `Π_{d,n}`.
    pub fn unembed(&self, m: &Mat) -> Option<ZeroOneColumnMatrix> {
        if m.co() != self.slice_co(self.d) {
            return None;
        }
        let (p, q) = (self.row_offset(), self.col_offset());
        let mut rows = vec![0u32; self.d];
        for &(i, j, x) in m.entries() {
            let (i, j) = (i - p, (j - q - 1) as usize);
            if x != 1 || i < 1 || i > self.n as i32 {
                return None;
            }
            rows[j] = i as u32;
        }
        ZeroOneColumnMatrix::new(self.n, rows).ok()
    }

    pub fn basis(&self) -> Vec<ZeroOneColumnMatrix> {
        ZeroOneColumnMatrix::all(self.n, self.d)
    }

    /// `ζ: T^ȷ_{d,n} → T_{d,n}`: the `(b', a', b'', 1^d 0^{d+1})` components of
    /// `Δ^ȷ_v` with `d' = 0`. The twist of `Δ^ȷ_v` on these blocks is
    /// `t_{b''} + Σ_{i≥r+1} b''_i`; the second term comes from `b' = ε_{r+1}`.
    pub fn zeta(&self, x: &Elem) -> Result<Elem> {
        let ones = self.slice_co(2 * self.d + 1);
        if x.matrices().any(|m| m.co() != ones) {
            return Err(SchurError::Validation("ζ is defined on the tensor slice".into()));
        }
        let target = self.slice_co(self.d);
        let cp = JCoproduct::new(self.jeng.family().clone(), 0, self.d as u32, JStage::Renormalized);
        let t = delta_elem(&cp, &self.jeng, x)?;
        let mut out = Elem::zero();
        for (k, c) in t.iter() {
            if k[1].co() == target {
                out.add_term(k[1].clone(), c);
            }
        }
        Ok(out)
    }

    /// Type-A tensor canonical basis element `^a{A}` (standard-basis expansion).
    pub fn canonical_a(&self, a: &ZeroOneColumnMatrix) -> Result<Elem> {
        Ok((*self.aeng.canonical(&self.matrix_a(a)?)?).clone())
    }

    /// Type-B tensor canonical basis element `{A^J}`.
    pub fn canonical_j(&self, a: &ZeroOneColumnMatrix) -> Result<Elem> {
        Ok((*self.jeng.canonical(&self.matrix_j(a)?)?).clone())
    }

    /// `ζ({A^J})` in the type-A tensor canonical basis, keyed by `B`.
    pub fn zeta_canonical_expansion(&self, a: &ZeroOneColumnMatrix) -> Result<BTreeMap<ZeroOneColumnMatrix, crate::LaurentPoly>> {
        let z = self.zeta(&self.canonical_j(a)?)?;
        let c = self.aeng.to_canonical(&z)?;
        let mut out = BTreeMap::new();
        for (m, p) in c.iter() {
            let b = self
                .unembed(m)
                .ok_or_else(|| SchurError::ConsistencyFailure(format!("ζ left the tensor slice at {m}")))?;
            out.insert(b, p.clone());
        }
        Ok(out)
    }

    /// Parabolic KL polynomials of both types for the pair `(B, A)`:
    /// `(P_{B^J,A^J}, P_{B,A})`.
    pub fn kl_pair(&self, b: &ZeroOneColumnMatrix, a: &ZeroOneColumnMatrix) -> Result<(crate::LaurentPoly, crate::LaurentPoly)> {
        let pj = self.jeng.canonical(&self.matrix_j(a)?)?.coeff(&self.matrix_j(b)?);
        let pa = self.aeng.canonical(&self.matrix_a(a)?)?.coeff(&self.matrix_a(b)?);
        Ok((pj, pa))
    }

    /// Whether `B^J ⪯ A^J`.
    pub fn j_leq(&self, b: &ZeroOneColumnMatrix, a: &ZeroOneColumnMatrix) -> Result<bool> {
        Ok(self.jeng.family().leq(&self.matrix_j(b)?, &self.matrix_j(a)?))
    }
}

/// `ζ([A^J]) = ^a[A]` for every `A ∈ Π_{d,n}`.
pub fn verify_zeta_standard(ts: &TensorSpaces) -> Result<Certificate> {
    let mut cert = Certificate::new("zeta-standard")
        .with_parameters(serde_json::json!({"n": ts.n, "d": ts.d}));
    for a in ts.basis() {
        let got = ts.zeta(&Elem::basis(ts.matrix_j(&a)?))?;
        let want = Elem::basis(ts.matrix_a(&a)?);
        cert.check((got != want).then(|| format!("ζ([{:?}^J]) = {got:?}", a.rows)));
    }
    Ok(cert)
}

/// Check one expansion `ζ({A^J}) = Σ c_{B,A} ^a{B}`: leading coefficient 1,
/// nonnegative lower coefficients, and lower terms only with `ro(B) ≠ ro(A)`.
pub fn check_tensor_expansion(
    a: &ZeroOneColumnMatrix,
    expansion: &BTreeMap<ZeroOneColumnMatrix, crate::LaurentPoly>,
) -> Vec<String> {
    let mut bad = Vec::new();
    match expansion.get(a) {
        Some(p) if p.is_one() => {}
        other => bad.push(format!("A = {:?}: leading coefficient {other:?}", a.rows)),
    }
    for (b, p) in expansion {
        if b == a {
            continue;
        }
        if !p.is_positive() {
            bad.push(format!("A = {:?}, B = {:?}: coefficient {p} is not positive", a.rows, b.rows));
        }
        if b.ro() == a.ro() {
            bad.push(format!("A = {:?}, B = {:?}: lower term with ro(B) = ro(A)", a.rows, b.rows));
        }
    }
    bad
}

/// Tensor positivity for every `A ∈ Π_{d,n}`.
pub fn verify_tensor_positivity(ts: &TensorSpaces) -> Result<Certificate> {
    let mut cert = Certificate::new("tensor-positivity")
        .with_parameters(serde_json::json!({"n": ts.n, "d": ts.d}));
    for a in ts.basis() {
        let e = ts.zeta_canonical_expansion(&a)?;
        cert.count();
        for w in check_tensor_expansion(&a, &e) {
            cert.fail(w);
        }
        for b in e.keys() {
            if b != &a && !ts.j_leq(b, &a)? {
                cert.fail(format!("A = {:?}, B = {:?}: B^J is not below A^J", a.rows, b.rows));
            }
        }
    }
    Ok(cert)
}

/// One row of the parabolic KL comparison.
#[derive(Clone, Debug, serde::Serialize)]
pub struct KlComparison {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub p_type_a: crate::LaurentPoly,
    pub p_type_b: crate::LaurentPoly,
    pub equal: bool,
}

/// All pairs with `ro(B) = ro(A)`.
pub fn kl_comparisons(ts: &TensorSpaces) -> Result<Vec<KlComparison>> {
    let basis = ts.basis();
    let mut out = Vec::new();
    for a in &basis {
        for b in &basis {
            if b.ro() != a.ro() {
                continue;
            }
            let (pj, pa) = ts.kl_pair(b, a)?;
            out.push(KlComparison {
                a: a.rows.clone(),
                b: b.rows.clone(),
                equal: pj == pa,
                p_type_a: pa,
                p_type_b: pj,
            });
        }
    }
    Ok(out)
}

/// `P_{B^J,A^J} = P_{B,A}` whenever `ro(B) = ro(A)`.
pub fn verify_parabolic_kl(rows: &[KlComparison], n: usize, d: usize) -> Certificate {
    let mut cert = Certificate::new("parabolic-kl").with_parameters(serde_json::json!({"n": n, "d": d}));
    for r in rows {
        cert.check((r.p_type_a != r.p_type_b).then(|| {
            format!("A = {:?}, B = {:?}: type A {} vs type B {}", r.a, r.b, r.p_type_a, r.p_type_b)
        }));
    }
    cert
}
