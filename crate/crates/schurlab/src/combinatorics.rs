//! Index sets: finite and periodic matrices, compositions, the statistics
//! `d_A`, `ε_i`, the Bruhat order, the twist `u(b, a)` and the 0-1 column
//! matrices indexing tensor spaces.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SchurError};

pub type Composition = Vec<u32>;

/// A finite `n × n` matrix or an `n`-periodic `Z × Z` matrix with nonnegative
/// entries. Only nonzero entries in window rows `1..=n` are stored, sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: usize,
    periodic: bool,
    entries: Vec<(i32, i32, u32)>,
}

fn fdiv(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn cdiv(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

impl Mat {
    /// Build from `(i, j, a)` triples. Periodic entries may use any row; they
    /// are folded into the window. Repeated positions are summed.
    pub fn from_entries<I>(n: usize, periodic: bool, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i32, i32, i64)>,
    {
        if n == 0 {
            return Err(SchurError::Validation("n must be positive".into()));
        }
        let mut acc: BTreeMap<(i32, i32), i64> = BTreeMap::new();
        for (i, j, a) in it {
            let (i, j) = if periodic {
                let i0 = (i - 1).rem_euclid(n as i32) + 1;
                (i0, j - (i - i0))
            } else {
                if i < 1 || i > n as i32 || j < 1 || j > n as i32 {
                    if a == 0 {
                        continue;
                    }
                    return Err(SchurError::Validation(format!(
                        "entry ({i},{j}) outside the {n}x{n} matrix"
                    )));
                }
                (i, j)
            };
            *acc.entry((i, j)).or_default() += a;
        }
        let mut entries = Vec::with_capacity(acc.len());
        for ((i, j), a) in acc {
            if a < 0 {
                return Err(SchurError::Validation(format!("negative entry at ({i},{j})")));
            }
            if a > 0 {
                entries.push((i, j, a as u32));
            }
        }
        Ok(Self { n, periodic, entries })
    }

    /// Finite matrix from dense rows.
    pub fn finite(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SchurError::Validation("matrix must be square".into()));
        }
        Self::from_entries(
            n,
            false,
            rows.iter().enumerate().flat_map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(move |(j, a)| (i as i32 + 1, j as i32 + 1, *a as i64))
            }),
        )
    }

    pub fn diag(comp: &[u32], periodic: bool) -> Self {
        Self::from_entries(
            comp.len(),
            periodic,
            comp.iter()
                .enumerate()
                .map(|(i, a)| (i as i32 + 1, i as i32 + 1, *a as i64)),
        )
        .expect("diagonal matrix is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_periodic(&self) -> bool {
        self.periodic
    }

    pub fn entries(&self) -> &[(i32, i32, u32)] {
        &self.entries
    }

    /// Entry `a_ij`, using periodicity when applicable.
    pub fn get(&self, i: i32, j: i32) -> u32 {
        let (i, j) = if self.periodic {
            let i0 = (i - 1).rem_euclid(self.n as i32) + 1;
            (i0, j - (i - i0))
        } else {
            (i, j)
        };
        match self.entries.binary_search_by(|e| (e.0, e.1).cmp(&(i, j))) {
            Ok(k) => self.entries[k].2,
            Err(_) => 0,
        }
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().map(|e| e.2).sum()
    }

    pub fn ro(&self) -> Composition {
        let mut r = vec![0; self.n];
        for &(i, _, a) in &self.entries {
            r[(i - 1) as usize] += a;
        }
        r
    }

    pub fn co(&self) -> Composition {
        let mut c = vec![0; self.n];
        for &(_, j, a) in &self.entries {
            c[(j - 1).rem_euclid(self.n as i32) as usize] += a;
        }
        c
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.iter().all(|e| e.0 == e.1)
    }

    pub fn spread(&self) -> u32 {
        self.entries
            .iter()
            .map(|e| (e.0 - e.1).unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Window support: every entry lies in `[1,n] × [1,n]`.
    pub fn is_window_supported(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.1 >= 1 && e.1 <= self.n as i32)
    }

    pub fn with_periodic(&self, periodic: bool) -> Result<Self> {
        if !periodic && !self.is_window_supported() {
            return Err(SchurError::Validation(
                "matrix is not window supported".into(),
            ));
        }
        Ok(Self {
            n: self.n,
            periodic,
            entries: self.entries.clone(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(
            self.n,
            self.periodic,
            self.entries.iter().map(|&(i, j, a)| (j, i, a as i64)),
        )
        .expect("transpose is valid")
    }

    /// Dense rows of a finite matrix.
    pub fn dense(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for &(i, j, a) in &self.entries {
            m[(i - 1) as usize][(j - 1) as usize] = a;
        }
        m
    }

    /// Add `delta` at `(i, j)`; `None` if an entry would become negative.
    pub fn add_at(&self, changes: &[(i32, i32, i64)]) -> Option<Self> {
        let base = self.entries.iter().map(|&(i, j, a)| (i, j, a as i64));
        Self::from_entries(self.n, self.periodic, base.chain(changes.iter().copied())).ok()
    }

    /// Statistic `d_A = Σ_{1≤i≤n, i≥k, j<l} a_ij a_kl`.
    pub fn d_stat(&self) -> i64 {
        let mut s = 0i64;
        let n = self.n as i64;
        for &(i, j, a) in &self.entries {
            for &(k0, l0, b) in &self.entries {
                let (i, j, k0, l0) = (i as i64, j as i64, k0 as i64, l0 as i64);
                if !self.periodic {
                    if i >= k0 && j < l0 {
                        s += (a * b) as i64;
                    }
                    continue;
                }
                // copies (k0 - m n, l0 - m n) with m >= 0 and k <= i, l > j
                let m_lo = cdiv(k0 - i, n).max(0);
                let m_hi = cdiv(l0 - j, n) - 1;
                if m_hi >= m_lo {
                    s += (m_hi - m_lo + 1) * (a * b) as i64;
                }
            }
        }
        s
    }

    /// `ε_i(A) = Σ_{r≤i<s} a_rs − Σ_{r>i≥s} a_rs`.
    pub fn epsilon(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let mut s = 0i64;
        for &(r, c, a) in &self.entries {
            let (r, c, a) = (r as i64, c as i64, a as i64);
            if self.periodic {
                s += a * (fdiv(i - r, n) - fdiv(i - c, n));
            } else if r <= i && i < c {
                s += a;
            } else if r > i && i >= c {
                s -= a;
            }
        }
        s
    }

    /// Partial sums used by the Bruhat order.
    pub fn sigma(&self, i: i64, j: i64) -> i64 {
        let n = self.n as i64;
        let mut s = 0i64;
        for &(r, c, a) in &self.entries {
            let (r, c, a) = (r as i64, c as i64, a as i64);
            if self.periodic {
                let cnt = if i < j {
                    fdiv(i - r, n) - cdiv(j - c, n) + 1
                } else {
                    fdiv(j - c, n) - cdiv(i - r, n) + 1
                };
                s += a * cnt.max(0);
            } else if (i < j && r <= i && c >= j) || (i > j && r >= i && c <= j) {
                s += a;
            }
        }
        s
    }

    /// Bruhat order `self ⪯ other`.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        if self.n != other.n
            || self.periodic != other.periodic
            || self.ro() != other.ro()
            || self.co() != other.co()
        {
            return false;
        }
        let n = self.n as i64;
        if !self.periodic {
            for i in 1..=n {
                for j in 1..=n {
                    if i != j && self.sigma(i, j) > other.sigma(i, j) {
                        return false;
                    }
                }
            }
            return true;
        }
        let reach = self.spread().max(other.spread()) as i64 + 1;
        for i in 1..=n {
            for j in (i - reach)..=(i + reach) {
                if i != j && self.sigma(i, j) > other.sigma(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Central symmetry `a_ij = a_{n+1-i, n+1-j}` of a finite matrix.
    pub fn is_j_symmetric(&self) -> bool {
        let n = self.n as i32;
        !self.periodic
            && self
                .entries
                .iter()
                .all(|&(i, j, a)| self.get(n + 1 - i, n + 1 - j) == a)
    }

    /// Statistic for the type-B standard basis:
    /// `½(Σ_{i≥k, j<l} a_ij a_kl − Σ_{i≥r+1>j} a_ij)`.
    pub fn dj_stat(&self) -> Result<i64> {
        if self.n.is_multiple_of(2) {
            return Err(SchurError::Validation("type-B matrices need odd n".into()));
        }
        let r = (self.n as i32 - 1) / 2;
        let lower: i64 = self
            .entries
            .iter()
            .filter(|e| e.0 > r && e.1 <= r)
            .map(|e| e.2 as i64)
            .sum();
        let two = self.d_stat() - lower;
        if two % 2 != 0 {
            return Err(SchurError::NonInteger(format!("{self}: half of {two}")));
        }
        Ok(two / 2)
    }

    /// Entries of `A`, reading `get(i,j)` for window rows and a column range.
    pub fn rows_in(&self, lo: i32, hi: i32) -> Vec<Vec<u32>> {
        (1..=self.n as i32)
            .map(|i| (lo..=hi).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.periodic {
            let rows: Vec<String> = self
                .dense()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            return write!(f, "[{}]", rows.join("; "));
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(i, j, a)| format!("({i},{j}):{a}"))
            .collect();
        write!(f, "periodic n={} {{{}}}", self.n, parts.join(" "))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct MatJson {
    n: usize,
    d: u32,
    periodic: bool,
    entries: Vec<(i32, i32, u32)>,
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatJson {
            n: self.n,
            d: self.total(),
            periodic: self.periodic,
            entries: self.entries.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let m = MatJson::deserialize(d)?;
        let mat = Mat::from_entries(
            m.n,
            m.periodic,
            m.entries.iter().map(|&(i, j, a)| (i, j, a as i64)),
        )
        .map_err(D::Error::custom)?;
        if mat.total() != m.d {
            return Err(D::Error::custom("entries do not sum to d"));
        }
        Ok(mat)
    }
}

/// All compositions of `d` into `n` nonnegative parts, lexicographically.
pub fn compositions(d: u32, n: usize) -> Vec<Composition> {
    fn rec(d: u32, n: usize, cur: &mut Composition, out: &mut Vec<Composition>) {
        if n == 1 {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=d).rev() {
            cur.push(a);
            rec(d - a, n - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(d, n, &mut Vec::new(), &mut out);
    out
}

/// Symmetric compositions `a_i = a_{n+1-i}` of `2d+1` into `n = 2r+1` parts.
pub fn j_compositions(d: u32, n: usize) -> Vec<Composition> {
    assert!(n % 2 == 1);
    let r = n / 2;
    let mut out = Vec::new();
    for half in 0..=d {
        for left in compositions(half, r) {
            let mid = 2 * (d - half) + 1;
            let mut c = left.clone();
            c.push(mid);
            c.extend(left.iter().rev());
            out.push(c);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// All finite matrices with the given row and column sums.
pub fn finite_block(ro: &[u32], co: &[u32]) -> Vec<Mat> {
    let n = ro.len();
    assert_eq!(n, co.len());
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut left: Vec<u32> = co.to_vec();
    fn rec(
        i: usize,
        ro: &[u32],
        left: &mut Vec<u32>,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Mat>,
    ) {
        let n = ro.len();
        if i == n {
            if left.iter().all(|x| *x == 0) {
                out.push(Mat::finite(rows).unwrap());
            }
            return;
        }
        let mut row = vec![0; n];
        fill(0, ro[i], i, ro, left, &mut row, rows, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn fill(
        j: usize,
        rem: u32,
        i: usize,
        ro: &[u32],
        left: &mut Vec<u32>,
        row: &mut Vec<u32>,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Mat>,
    ) {
        let n = ro.len();
        if j == n - 1 {
            if rem > left[j] {
                return;
            }
            row[j] = rem;
            left[j] -= rem;
            rows.push(row.clone());
            rec(i + 1, ro, left, rows, out);
            rows.pop();
            left[j] += rem;
            return;
        }
        for a in 0..=rem.min(left[j]) {
            row[j] = a;
            left[j] -= a;
            fill(j + 1, rem - a, i, ro, left, row, rows, out);
            left[j] += a;
        }
        row[j] = 0;
    }
    if ro.iter().sum::<u32>() != co.iter().sum::<u32>() {
        return out;
    }
    rec(0, ro, &mut left, &mut rows, &mut out);
    out.sort();
    out
}

/// Periodic matrices with given `ro`, `co` and entries only at `|i-j| ≤ spread`.
pub fn periodic_block(ro: &[u32], co: &[u32], spread: u32) -> Vec<Mat> {

    let s = spread as i32;
    let width = (2 * s + 1) as usize;
    let mut out = Vec::new();
    if ro.iter().sum::<u32>() != co.iter().sum::<u32>() {
        return out;
    }
    let mut cur: Vec<(i32, i32, i64)> = Vec::new();
    let mut left = co.to_vec();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        k: usize,
        rem: u32,
        ro: &[u32],
        s: i32,
        width: usize,
        left: &mut Vec<u32>,
        cur: &mut Vec<(i32, i32, i64)>,
        out: &mut Vec<Mat>,
    ) {
        let n = ro.len();
        if i == n {
            if left.iter().all(|x| *x == 0) {
                out.push(Mat::from_entries(n, true, cur.iter().copied()).unwrap());
            }
            return;
        }
        if k == width {
            if rem == 0 {
                let next = if i + 1 < n { ro[i + 1] } else { 0 };
                rec(i + 1, 0, next, ro, s, width, left, cur, out);
            }
            return;
        }
        let row = i as i32 + 1;
        let col = row - s + k as i32;
        let ci = (col - 1).rem_euclid(n as i32) as usize;
        for a in 0..=rem.min(left[ci]) {
            left[ci] -= a;
            if a > 0 {
                cur.push((row, col, a as i64));
            }
            rec(i, k + 1, rem - a, ro, s, width, left, cur, out);
            if a > 0 {
                cur.pop();
            }
            left[ci] += a;
        }
    }
    rec(0, 0, ro[0], ro, s, width, &mut left, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Centrally symmetric matrices with given (symmetric) row and column sums.
pub fn j_block(ro: &[u32], co: &[u32]) -> Vec<Mat> {
    let mut out: Vec<Mat> = finite_block(ro, co)
        .into_iter()
        .filter(|m| m.is_j_symmetric())
        .collect();
    out.sort();
    out
}

/// Matrices of `Ξ^ı`: middle row and column are the unit vector.
pub fn is_i_matrix(m: &Mat) -> bool {
    let n = m.n() as i32;
    let mid = (n + 1) / 2;
    m.is_j_symmetric()
        && (1..=n).all(|j| m.get(mid, j) == u32::from(j == mid) && m.get(j, mid) == u32::from(j == mid))
}

/// Twist `u(b, a) = ½(Σ_{i+j≥n+1} (b_i b_j − a_i a_j) + Σ_{i≥r+1} (a_i − b_i))`.
pub fn u_twist(b: &[u32], a: &[u32]) -> Result<i64> {
    let n = b.len();
    if n != a.len() || n.is_multiple_of(2) {
        return Err(SchurError::Validation("u(b,a) needs equal odd lengths".into()));
    }
    let r = n / 2;
    let mut s = 0i64;
    for i in 0..n {
        for j in 0..n {
            if i + j + 2 > n {
                s += (b[i] * b[j]) as i64 - (a[i] * a[j]) as i64;
            }
        }
    }
    for i in r..n {
        s += a[i] as i64 - b[i] as i64;
    }
    if s % 2 != 0 {
        return Err(SchurError::NonInteger(format!("u({b:?},{a:?}) = {s}/2")));
    }
    Ok(s / 2)
}

/// An `n × m` 0-1 matrix with unit column sums, stored as the row index
/// (1-based) of the nonzero entry in each column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ZeroOneColumnMatrix {
    pub n: usize,
    pub rows: Vec<u32>,
}

impl ZeroOneColumnMatrix {
    pub fn new(n: usize, rows: Vec<u32>) -> Result<Self> {
        if rows.iter().any(|r| *r == 0 || *r as usize > n) {
            return Err(SchurError::Validation("row index out of range".into()));
        }
        Ok(Self { n, rows })
    }

    pub fn all(n: usize, d: usize) -> Vec<Self> {
        let mut out = vec![Self { n, rows: vec![] }];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|m| {
                    (1..=n as u32).map(move |r| {
                        let mut rows = m.rows.clone();
                        rows.push(r);
                        Self { n, rows }
                    })
                })
                .collect();
        }
        out
    }

    pub fn cols(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: u32, j: usize) -> u32 {
        u32::from(self.rows[j - 1] == i)
    }

    pub fn ro(&self) -> Composition {
        let mut r = vec![0; self.n];
        for x in &self.rows {
            r[(*x - 1) as usize] += 1;
        }
        r
    }

    /// `Σ_{i≥k, j<l} a_ij a_kl`: pairs of columns `j < l` with `row_j ≥ row_l`.
    pub fn d_stat(&self) -> i64 {
        let w = &self.rows;
        let mut s = 0;
        for j in 0..w.len() {
            for l in j + 1..w.len() {
                if w[j] >= w[l] {
                    s += 1;
                }
            }
        }
        s
    }

    /// `A^J = (A | ε_{r+1} | J_n A J_d)`.
    pub fn to_aj(&self) -> Result<Self> {
        if self.n.is_multiple_of(2) {
            return Err(SchurError::Validation("A^J needs odd n".into()));
        }
        let n = self.n as u32;
        let mut rows = self.rows.clone();
        rows.push(n.div_ceil(2));
        rows.extend(self.rows.iter().rev().map(|x| n + 1 - x));
        Ok(Self { n: self.n, rows })
    }

    /// Inverse of [`Self::to_aj`]: the first `d` columns.
    pub fn from_aj(&self) -> Self {
        let d = (self.rows.len() - 1) / 2;
        Self {
            n: self.n,
            rows: self.rows[..d].to_vec(),
        }
    }

    pub fn is_pi_j(&self) -> bool {
        let m = self.rows.len();
        let n = self.n as u32;
        m % 2 == 1
            && self.n % 2 == 1
            && (0..m).all(|j| self.rows[j] == n + 1 - self.rows[m - 1 - j])
    }

    /// `ℓ_A = ½(Σ_{i≥k, j<l} a_ij a_kl − Σ_{i≥r+1, j<d+1} a_ij)` on `Π^ȷ`.
    pub fn ell_stat(&self) -> Result<i64> {
        if !self.is_pi_j() {
            return Err(SchurError::NonInteger("matrix is not in Π^ȷ".into()));
        }
        let r = (self.n as u32 - 1) / 2;
        let d = (self.rows.len() - 1) / 2;
        let lower = self.rows[..d].iter().filter(|x| **x > r).count() as i64;
        let two = self.d_stat() - lower;
        if two % 2 != 0 {
            return Err(SchurError::NonInteger(format!("half of {two}")));
        }
        Ok(two / 2)
    }
}

/// `t_b = ½(Σ_{i+j≥n+1} b_i b_j − Σ_{i≥r+1} b_i)`, the twist of the ζ map.
pub fn t_twist(b: &[u32]) -> Result<i64> {
    let zeros = vec![0; b.len()];
    // u(b, 0) without the a-terms is exactly t_b.
    u_twist(b, &zeros)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ro_co_examples() {
        let a = Mat::finite(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(a.ro(), vec![2, 1]);
        assert_eq!(a.co(), vec![1, 2]);
        let p = Mat::from_entries(2, true, [(1, 1, 1), (2, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(p.ro(), vec![1, 2]);
        assert_eq!(p.co(), vec![2, 1]);
    }

    #[test]
    fn epsilon_examples() {
        let a2 = Mat::from_entries(3, true, (1..=3).map(|i| (i, i, 2))).unwrap();
        assert!((1..=3).all(|i| a2.epsilon(i) == 0));
        let a = Mat::from_entries(3, true, (1..=3).flat_map(|i| [(i, i, 1), (i, i + 1, 1)])).unwrap();
        assert!((1..=6).all(|i| a.epsilon(i) == 1));
        let b = Mat::finite(&[vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(b.epsilon(1), -1);
    }

    #[test]
    fn d_stat_window_agrees() {
        let f = Mat::finite(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(f.d_stat(), 1);
        assert_eq!(f.with_periodic(true).unwrap().d_stat(), 1);
        assert_eq!(Mat::diag(&[2, 3], false).d_stat(), 0);
    }

    #[test]
    fn u_twist_examples() {
        assert_eq!(u_twist(&[1, 1, 1], &[1, 1, 1]).unwrap(), 0);
        // Σ_{i+j≥4} b_i b_j = 6 for b=(1,1,1), 9 for a=(0,3,0); Σ_{i≥2}(a_i−b_i) = 1.
        assert_eq!(u_twist(&[1, 1, 1], &[0, 3, 0]).unwrap(), -1);
    }

    #[test]
    fn aj_example() {
        let a = ZeroOneColumnMatrix::new(3, vec![1]).unwrap();
        let aj = a.to_aj().unwrap();
        assert_eq!(aj.rows, vec![1, 2, 3]);
        assert!(aj.is_pi_j());
        assert_eq!(aj.from_aj(), a);
        assert_eq!(aj.ell_stat().unwrap(), 0);
    }

    #[test]
    fn j_compositions_are_symmetric() {
        for c in j_compositions(2, 5) {
            assert_eq!(c.iter().sum::<u32>(), 5);
            assert_eq!(c[0], c[4]);
            assert_eq!(c[1], c[3]);
        }
        assert_eq!(j_compositions(1, 3).len(), 2);
    }
}
