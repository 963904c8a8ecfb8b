//! Brute-force ground truth over finite fields: flags, isotropic flags, orbit
//! classification, convolution counts, comultiplication counts and degree
//! interpolation.

pub mod field;
pub mod subspace;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use parking_lot::Mutex;

use crate::combinatorics::{Composition, Mat};
use crate::error::{Result, SchurError};
use crate::ring::QPoly;

pub use field::Field;
pub use subspace::Subspace;

/// Odd prime powers used for interpolation, in order.
pub const Q_SAMPLES: [i64; 6] = [3, 5, 7, 9, 11, 13];

const ABS_MAX_Q: usize = 31;
const ABS_MAX_DIM: usize = 8;
const ABS_MAX_ISO_DIM: usize = 9;

/// Desk-scale guards; overridable by `SCHURLAB_MAX_Q` and `SCHURLAB_MAX_DIM`.
#[derive(Clone, Copy, Debug)]
pub struct Guards {
    pub max_q: usize,
    pub max_dim: usize,
    pub max_iso_dim: usize,
}

impl Guards {
    pub fn from_env() -> Self {
        let read = |k: &str| std::env::var(k).ok().and_then(|v| v.parse::<usize>().ok());
        let max_dim = read("SCHURLAB_MAX_DIM");
        Self {
            max_q: read("SCHURLAB_MAX_Q").unwrap_or(13).min(ABS_MAX_Q),
            max_dim: max_dim.unwrap_or(6).min(ABS_MAX_DIM),
            max_iso_dim: max_dim.map(|m| m.max(7)).unwrap_or(7).min(ABS_MAX_ISO_DIM),
        }
    }

    fn check_q(&self, q: usize) -> Result<()> {
        if q.is_multiple_of(2) {
            return Err(SchurError::Validation(format!("q = {q} must be odd")));
        }
        if q > self.max_q {
            return Err(SchurError::ScaleExceeded(format!(
                "q = {q} exceeds the limit {}",
                self.max_q
            )));
        }
        Ok(())
    }
}

/// An `n`-step flag `V_1 ⊆ … ⊆ V_n`, with `V_0 = 0` implicit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Flag {
    pub steps: Vec<Subspace>,
}

impl Flag {
    pub fn n(&self) -> usize {
        self.steps.len()
    }

    pub fn ambient(&self) -> usize {
        self.steps.last().map_or(0, |s| s.ambient())
    }

    pub fn composition(&self) -> Composition {
        let mut prev = 0;
        self.steps
            .iter()
            .map(|s| {
                let c = (s.dim() - prev) as u32;
                prev = s.dim();
                c
            })
            .collect()
    }

    fn step(&self, i: usize) -> Option<&Subspace> {
        (i > 0).then(|| &self.steps[i - 1])
    }

    /// Check `V_i = V_{n-i}^⊥` for the anti-diagonal form.
    pub fn is_isotropic(&self, f: &Field) -> bool {
        let n = self.n();
        (1..n).all(|i| self.steps[i - 1] == self.steps[n - i - 1].perp(f))
    }
}

/// Matrix of the relative position of two flags in the same space.
pub fn classify(f: &Field, v: &Flag, w: &Flag) -> Mat {
    let n = v.n();
    let mut dims = vec![vec![0i64; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            let (a, b) = (v.step(i).unwrap(), w.step(j).unwrap());
            dims[i][j] = a.dim_intersection(f, b) as i64;
        }
    }
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let m = dims[i][j] - dims[i - 1][j] - dims[i][j - 1] + dims[i - 1][j - 1];
            entries.push((i as i32, j as i32, m));
        }
    }
    Mat::from_entries(n, false, entries).expect("intersection dimensions are consistent")
}

/// Classification of an isotropic pair; checks the central symmetry.
pub fn classify_isotropic(f: &Field, v: &Flag, w: &Flag) -> Result<Mat> {
    let m = classify(f, v, w);
    if !m.is_j_symmetric() {
        return Err(SchurError::SymmetryViolation(format!("{m}")));
    }
    Ok(m)
}

type FlagCache = HashMap<(Composition, bool), Arc<Vec<Flag>>>;

/// Enumeration engine for one field, with memoized flag lists.
pub struct Oracle {
    field: Field,
    guards: Guards,
    flags: Mutex<FlagCache>,
}

impl Oracle {
    pub fn new(q: usize) -> Result<Self> {
        Self::with_guards(q, Guards::from_env())
    }

    pub fn with_guards(q: usize, guards: Guards) -> Result<Self> {
        guards.check_q(q)?;
        Ok(Self {
            field: Field::new(q)?,
            guards,
            flags: Mutex::new(HashMap::new()),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.q()
    }

    /// All flags of the given composition in `F_q^{|comp|}`.
    pub fn flags(&self, comp: &[u32]) -> Result<Arc<Vec<Flag>>> {
        let m: u32 = comp.iter().sum();
        if m as usize > self.guards.max_dim {
            return Err(SchurError::ScaleExceeded(format!(
                "flag dimension {m} exceeds the limit {}",
                self.guards.max_dim
            )));
        }
        let key = (comp.to_vec(), false);
        if let Some(v) = self.flags.lock().get(&key) {
            return Ok(v.clone());
        }
        let f = &self.field;
        let m = m as usize;
        let mut partial = vec![vec![]];
        let mut dim = 0usize;
        for (idx, c) in comp.iter().enumerate() {
            dim += *c as usize;
            let last = idx + 1 == comp.len();
            partial = partial
                .into_iter()
                .flat_map(|steps: Vec<Subspace>| {
                    let prev = steps.last().cloned().unwrap_or_else(|| Subspace::zero(m));
                    let exts = if last {
                        vec![Subspace::full(m)]
                    } else {
                        subspace::extensions(f, &prev, dim)
                    };
                    exts.into_iter().map(move |e| {
                        let mut s = steps.clone();
                        s.push(e);
                        s
                    })
                })
                .collect();
        }
        let out: Arc<Vec<Flag>> =
            Arc::new(partial.into_iter().map(|steps| Flag { steps }).collect());
        self.flags.lock().insert(key, out.clone());
        Ok(out)
    }

    /// All isotropic flags of a symmetric composition of `2d+1` into `n = 2r+1`
    /// parts, for the anti-diagonal form.
    pub fn isotropic_flags(&self, comp: &[u32]) -> Result<Arc<Vec<Flag>>> {
        let n = comp.len();
        let m: u32 = comp.iter().sum();
        if n.is_multiple_of(2) || m.is_multiple_of(2) || (0..n).any(|i| comp[i] != comp[n - 1 - i]) {
            return Err(SchurError::Validation(format!(
                "{comp:?} is not a symmetric composition of an odd number"
            )));
        }
        if m as usize > self.guards.max_iso_dim {
            return Err(SchurError::ScaleExceeded(format!(
                "isotropic dimension {m} exceeds the limit {}",
                self.guards.max_iso_dim
            )));
        }
        let key = (comp.to_vec(), true);
        if let Some(v) = self.flags.lock().get(&key) {
            return Ok(v.clone());
        }
        let f = &self.field;
        let m = m as usize;
        let r = n / 2;
        let mut partial: Vec<Vec<Subspace>> = vec![vec![]];
        let mut dim = 0usize;
        for c in &comp[..r] {
            dim += *c as usize;
            partial = partial
                .into_iter()
                .flat_map(|steps| {
                    let prev = steps.last().cloned().unwrap_or_else(|| Subspace::zero(m));
                    subspace::isotropic_extensions(f, &prev, dim)
                        .into_iter()
                        .map(move |e| {
                            let mut s = steps.clone();
                            s.push(e);
                            s
                        })
                })
                .collect();
        }
        let flags: Vec<Flag> = partial
            .into_iter()
            .map(|mut steps| {
                for k in (0..r).rev() {
                    let p = steps[k].perp(f);
                    steps.push(p);
                }
                steps.push(Subspace::full(m));
                Flag { steps }
            })
            .collect();
        let out = Arc::new(flags);
        self.flags.lock().insert(key, out.clone());
        Ok(out)
    }

    fn flags_of(&self, comp: &[u32], iso: bool) -> Result<Arc<Vec<Flag>>> {
        if iso {
            self.isotropic_flags(comp)
        } else {
            self.flags(comp)
        }
    }

    fn classify_of(&self, v: &Flag, w: &Flag, iso: bool) -> Result<Mat> {
        if iso {
            classify_isotropic(&self.field, v, w)
        } else {
            Ok(classify(&self.field, v, w))
        }
    }

    /// `|{V' : (V, V') ∈ O_A}|` for a fixed `V` of type `ro(A)`.
    pub fn fiber_count(&self, a: &Mat, iso: bool) -> Result<u64> {
        let x1 = self.flags_of(&a.ro(), iso)?[0].clone();
        let mut count = 0;
        for x2 in self.flags_of(&a.co(), iso)?.iter() {
            if self.classify_of(&x1, x2, iso)? == *a {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Convolution `e_B * e_A` in the e-basis: for each orbit `C`, the number of
    /// `x_2` with `(x_1,x_2) ∈ O_B`, `(x_2,x_3) ∈ O_A` for a fixed `(x_1,x_3) ∈ O_C`.
    pub fn convolve(&self, b: &Mat, a: &Mat, iso: bool) -> Result<BTreeMap<Mat, u64>> {
        if b.co() != a.ro() {
            return Err(SchurError::CompositionMismatch(format!(
                "co(B) = {:?} but ro(A) = {:?}",
                b.co(),
                a.ro()
            )));
        }
        let x1s = self.flags_of(&b.ro(), iso)?;
        let reps = [x1s[0].clone(), x1s[x1s.len() - 1].clone()];
        let mids = self.flags_of(&b.co(), iso)?;
        let ends = self.flags_of(&a.co(), iso)?;
        let mut results: Vec<BTreeMap<Mat, u64>> = Vec::new();
        for x1 in &reps {
            let mut fib = Vec::new();
            for x2 in mids.iter() {
                if self.classify_of(x1, x2, iso)? == *b {
                    fib.push(x2);
                }
            }
            // one x3 per orbit C, plus the last one seen for a second opinion
            let mut firsts: BTreeMap<Mat, (usize, usize)> = BTreeMap::new();
            for (k, x3) in ends.iter().enumerate() {
                let c = self.classify_of(x1, x3, iso)?;
                firsts.entry(c).and_modify(|e| e.1 = k).or_insert((k, k));
            }
            let mut table = BTreeMap::new();
            for (c, (k1, k2)) in firsts {
                let mut counts = [0u64; 2];
                for (slot, k) in [k1, k2].into_iter().enumerate() {
                    let x3 = &ends[k];
                    for x2 in &fib {
                        if self.classify_of(x2, x3, iso)? == *a {
                            counts[slot] += 1;
                        }
                    }
                }
                if counts[0] != counts[1] {
                    return Err(SchurError::RepresentativeDependence(format!(
                        "orbit {c}: {} vs {}",
                        counts[0], counts[1]
                    )));
                }
                if counts[0] > 0 {
                    table.insert(c, counts[0]);
                }
            }
            results.push(table);
        }
        if results[0] != results[1] {
            return Err(SchurError::RepresentativeDependence(
                "convolution depends on the chosen x_1".into(),
            ));
        }
        Ok(results.swap_remove(0))
    }

    /// Coefficients of `Δ̃(e_A) = Σ c · e_{A'} ⊗ e_{A''}` for `F_q^d = F_q^{d'} ⊕ F_q^{d''}`.
    pub fn comult_count(&self, a: &Mat, d2: u32) -> Result<BTreeMap<(Mat, Mat), u64>> {
        let f = &self.field;
        let d = a.total();
        if d2 > d {
            return Err(SchurError::Validation("split exceeds d".into()));
        }
        let d1 = d - d2;
        let (dm, d1u) = (d as usize, d1 as usize);
        let b = a.ro();
        let targets = self.flags(&a.co())?;
        let mut out = BTreeMap::new();
        for b1 in crate::combinatorics::compositions(d1, b.len()) {
            if b1.iter().zip(&b).any(|(x, y)| x > y) {
                continue;
            }
            let b2: Composition = b.iter().zip(&b1).map(|(x, y)| x - y).collect();
            let v1 = self.flags(&b1)?[0].clone();
            let v2 = self.flags(&b2)?[0].clone();
            let mut per_rep = Vec::new();
            for shear in [false, true] {
                let v = direct_sum(f, &v1, &v2, shear);
                let mut totals: BTreeMap<(Mat, Mat), u64> = BTreeMap::new();
                for t in targets.iter() {
                    if classify(f, &v, t) != *a {
                        continue;
                    }
                    let t1 = Flag {
                        steps: t.steps.iter().map(|s| s.project(f, 1, d1u)).collect(),
                    };
                    let tail = Subspace::coordinate(dm, d1u + 1, dm);
                    let t2 = Flag {
                        steps: t
                            .steps
                            .iter()
                            .map(|s| s.intersect(f, &tail).project(f, d1u + 1, dm))
                            .collect(),
                    };
                    let key = (classify(f, &v1, &t1), classify(f, &v2, &t2));
                    *totals.entry(key).or_default() += 1;
                }
                per_rep.push(totals);
            }
            if per_rep[0] != per_rep[1] {
                return Err(SchurError::RepresentativeDependence(format!(
                    "comultiplication block {b1:?} depends on the representative"
                )));
            }
            for ((m1, m2), total) in per_rep.swap_remove(0) {
                let f1 = self.fiber_count(&m1, false)?;
                let f2 = self.fiber_count(&m2, false)?;
                if total % (f1 * f2) != 0 {
                    return Err(SchurError::RepresentativeDependence(format!(
                        "count {total} not divisible by fiber sizes {f1}·{f2}"
                    )));
                }
                out.insert((m1, m2), total / (f1 * f2));
            }
        }
        Ok(out)
    }

    /// Coefficients of `Δ̃^ȷ(e_A) = Σ c · e_{A'} ⊗ e_{A''}` with
    /// `𝒟'' = span(e_1..e_{d''})` and `𝒟' = 𝒟''^⊥/𝒟''`.
    pub fn comult_count_isotropic(
        &self,
        a: &Mat,
        d2: u32,
    ) -> Result<BTreeMap<(Mat, Mat), u64>> {
        let f = &self.field;
        let big = a.total() as usize;
        let d2u = d2 as usize;
        if 2 * d2u > big {
            return Err(SchurError::Validation("split exceeds d".into()));
        }
        let dpp = Subspace::coordinate(big, 1, d2u);
        let dperp = Subspace::coordinate(big, 1, big - d2u);
        let images = |l: &Flag| -> (Flag, Flag) {
            let sharp = Flag {
                steps: l
                    .steps
                    .iter()
                    .map(|s| s.intersect(f, &dperp).project(f, d2u + 1, big - d2u))
                    .collect(),
            };
            let low = Flag {
                steps: l
                    .steps
                    .iter()
                    .map(|s| {
                        if d2u == 0 {
                            Subspace::zero(0)
                        } else {
                            s.intersect(f, &dpp).project(f, 1, d2u)
                        }
                    })
                    .collect(),
            };
            (sharp, low)
        };
        let sources = self.isotropic_flags(&a.ro())?;
        let targets = self.isotropic_flags(&a.co())?;
        // group sources by the types of their images
        let mut groups: BTreeMap<(Composition, Composition), Vec<usize>> = BTreeMap::new();
        for (k, l) in sources.iter().enumerate() {
            let (s, lo) = images(l);
            groups
                .entry((s.composition(), lo.composition()))
                .or_default()
                .push(k);
        }
        let mut out = BTreeMap::new();
        for idxs in groups.values() {
            let reps = [idxs[0], idxs[idxs.len() - 1]];
            let mut per_rep = Vec::new();
            for &k in &reps {
                let l = &sources[k];
                let (l1, l2) = images(l);
                let mut totals: BTreeMap<(Mat, Mat), u64> = BTreeMap::new();
                for t in targets.iter() {
                    if classify(f, l, t) != *a {
                        continue;
                    }
                    let (t1, t2) = images(t);
                    let m1 = classify_isotropic(f, &l1, &t1)?;
                    let m2 = classify(f, &l2, &t2);
                    *totals.entry((m1, m2)).or_default() += 1;
                }
                per_rep.push((totals, l1, l2));
            }
            if per_rep[0].0 != per_rep[1].0 {
                return Err(SchurError::RepresentativeDependence(
                    "isotropic comultiplication depends on the representative".into(),
                ));
            }
            let (totals, _, _) = per_rep.swap_remove(0);
            for ((m1, m2), total) in totals {
                let f1 = self.fiber_count(&m1, true)?;
                let f2 = self.fiber_count(&m2, false)?;
                if total % (f1 * f2) != 0 {
                    return Err(SchurError::RepresentativeDependence(format!(
                        "count {total} not divisible by fiber sizes {f1}·{f2}"
                    )));
                }
                out.insert((m1, m2), total / (f1 * f2));
            }
        }
        Ok(out)
    }
}

/// `V_i = V'_i ⊕ V''_i`, or the graph of a fixed shear when `shear` is set;
/// both lie in `Z_{V', V''}`.
fn direct_sum(f: &Field, v1: &Flag, v2: &Flag, shear: bool) -> Flag {
    let d1 = v1.ambient();
    let d2 = v2.ambient();
    let d = d1 + d2;
    let steps = v1
        .steps
        .iter()
        .zip(&v2.steps)
        .map(|(a, b)| {
            let mut rows: Vec<Vec<u8>> = a
                .rows()
                .iter()
                .map(|r| {
                    let mut v = vec![0u8; d];
                    v[..d1].copy_from_slice(r);
                    if shear && d2 > 0 {
                        for (k, x) in r.iter().enumerate() {
                            let t = d1 + k % d2;
                            v[t] = f.add(v[t], *x);
                        }
                    }
                    v
                })
                .collect();
            rows.extend(b.embed(d, d1).rows().iter().cloned());
            Subspace::span(f, d, &rows)
        })
        .collect();
    Flag { steps }
}

/// Dimension of the variety of flags of the given type (degree bound for
/// fiber counts).
pub fn flag_variety_dim(comp: &[u32], iso: bool) -> usize {
    if !iso {
        let mut s = 0;
        for i in 0..comp.len() {
            for j in i + 1..comp.len() {
                s += (comp[i] * comp[j]) as usize;
            }
        }
        return s;
    }
    // successive isotropic Grassmannians OG(k, m) of dimension k(m-k) - k(k+1)/2
    let r = comp.len() / 2;
    let mut m: i64 = comp.iter().sum::<u32>() as i64;
    let mut s = 0i64;
    for c in &comp[..r] {
        let k = *c as i64;
        s += k * (m - k) - k * (k + 1) / 2;
        m -= 2 * k;
    }
    s as usize
}

/// Interpolated point-count polynomials over the sample fields.
pub fn interpolate_counts<F>(degree_bound: usize, mut sample: F) -> Result<QPoly>
where
    F: FnMut(usize) -> Result<u64>,
{
    let guards = Guards::from_env();
    let mut pts = Vec::new();
    for q in Q_SAMPLES {
        if pts.len() == degree_bound + 2 {
            break;
        }
        if q as usize > guards.max_q {
            break;
        }
        pts.push((q, BigInt::from(sample(q as usize)?)));
    }
    if pts.len() < degree_bound + 2 {
        return Err(SchurError::ScaleExceeded(format!(
            "degree bound {degree_bound} needs {} sample fields",
            degree_bound + 2
        )));
    }
    QPoly::interpolate(&pts, degree_bound)
}

/// Degree in `q` of the fiber count of `A`.
pub fn fiber_degree(a: &Mat, iso: bool) -> Result<usize> {
    let bound = flag_variety_dim(&a.co(), iso);
    let p = interpolate_counts(bound, |q| Oracle::new(q)?.fiber_count(a, iso))?;
    p.degree()
        .ok_or_else(|| SchurError::ConsistencyFailure(format!("empty fiber for {a}")))
}

/// Structure constants of `e_B * e_A` as polynomials in `q`.
pub fn convolve_poly(b: &Mat, a: &Mat, iso: bool) -> Result<BTreeMap<Mat, QPoly>> {
    let bound = flag_variety_dim(&b.co(), iso);
    let mut tables = Vec::new();
    let guards = Guards::from_env();
    for q in Q_SAMPLES {
        if tables.len() == bound + 2 || q as usize > guards.max_q {
            break;
        }
        tables.push((q, Oracle::new(q as usize)?.convolve(b, a, iso)?));
    }
    if tables.len() < bound + 2 {
        return Err(SchurError::ScaleExceeded("not enough sample fields".into()));
    }
    let keys: std::collections::BTreeSet<Mat> =
        tables.iter().flat_map(|(_, t)| t.keys().cloned()).collect();
    let mut out = BTreeMap::new();
    for c in keys {
        let pts: Vec<(i64, BigInt)> = tables
            .iter()
            .map(|(q, t)| (*q, BigInt::from(t.get(&c).copied().unwrap_or(0))))
            .collect();
        let p = QPoly::interpolate(&pts, bound)?;
        if !p.is_zero() {
            out.insert(c, p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_counts() {
        let o = Oracle::new(3).unwrap();
        assert_eq!(o.flags(&[2]).unwrap().len(), 1);
        assert_eq!(o.flags(&[1, 1]).unwrap().len(), 4);
        assert_eq!(o.flags(&[1, 1, 1]).unwrap().len(), 52);
        assert_eq!(o.isotropic_flags(&[0, 1, 0]).unwrap().len(), 1);
        assert_eq!(o.isotropic_flags(&[1, 1, 1]).unwrap().len(), 4);
        assert!(o.isotropic_flags(&[1, 1, 1]).unwrap().iter().all(|l| l.is_isotropic(o.field())));
    }

    #[test]
    fn classify_self_is_diagonal() {
        let o = Oracle::new(3).unwrap();
        for v in o.flags(&[1, 1]).unwrap().iter() {
            assert_eq!(classify(o.field(), v, v), Mat::diag(&[1, 1], false));
        }
    }

    #[test]
    fn variety_dimensions() {
        assert_eq!(flag_variety_dim(&[1, 1, 1], false), 3);
        assert_eq!(flag_variety_dim(&[1, 1, 1], true), 1);
        assert_eq!(flag_variety_dim(&[1, 1, 1, 1, 1], true), 4);
        assert_eq!(flag_variety_dim(&[1, 3, 1], true), 3);
    }
}
