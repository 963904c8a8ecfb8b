//! Subspaces of `F_q^m` in reduced row-echelon form.

use super::field::Field;

/// A subspace stored by its RREF basis; equality of values is equality of
/// subspaces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    m: usize,
    rows: Vec<Vec<u8>>,
}

/// Row-reduce in place, leaving zero rows at the bottom; returns pivot columns.
fn rref_in_place(f: &Field, rows: &mut [Vec<u8>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for k in 0..rows[i].len() {
                    let t = f.mul(factor, rows[r][k]);
                    rows[i][k] = f.sub(rows[i][k], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

impl Subspace {
    pub fn zero(m: usize) -> Self {
        Self { m, rows: vec![] }
    }

    pub fn full(m: usize) -> Self {
        Self {
            m,
            rows: (0..m)
                .map(|i| (0..m).map(|j| u8::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn span(f: &Field, m: usize, vectors: &[Vec<u8>]) -> Self {
        let mut rows: Vec<Vec<u8>> = vectors.to_vec();
        let rank = rref_in_place(f, &mut rows, m).len();
        rows.truncate(rank);
        Self { m, rows }
    }

    /// Span of the coordinate vectors `e_lo, …, e_hi` (1-based, inclusive).
    pub fn coordinate(m: usize, lo: usize, hi: usize) -> Self {
        Self {
            m,
            rows: (lo..=hi)
                .map(|i| (1..=m).map(|j| u8::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| *x != 0).unwrap())
            .collect()
    }

    pub fn sum(&self, f: &Field, other: &Self) -> Self {
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Self::span(f, self.m, &v)
    }

    pub fn dim_sum(&self, f: &Field, other: &Self) -> usize {
        if self.rows.is_empty() {
            return other.dim();
        }
        if other.rows.is_empty() {
            return self.dim();
        }
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        rref_in_place(f, &mut v, self.m).len()
    }

    pub fn dim_intersection(&self, f: &Field, other: &Self) -> usize {
        self.dim() + other.dim() - self.dim_sum(f, other)
    }

    pub fn contains(&self, f: &Field, other: &Self) -> bool {
        self.dim_sum(f, other) == self.dim()
    }

    pub fn contains_vector(&self, f: &Field, x: &[u8]) -> bool {
        let mut v = self.rows.clone();
        v.push(x.to_vec());
        rref_in_place(f, &mut v, self.m).len() == self.dim()
    }

    /// Intersection with another subspace of the same ambient space.
    pub fn intersect(&self, f: &Field, other: &Self) -> Self {
        // Kernel of the stacked basis gives pairs (a, b) with aU = bW.
        let k1 = self.dim();
        let k2 = other.dim();
        let total = k1 + k2;
        let mut aug: Vec<Vec<u8>> = self
            .rows
            .iter()
            .chain(other.rows.iter())
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..total).map(|j| u8::from(i == j)));
                row
            })
            .collect();
        rref_in_place(f, &mut aug, self.m);
        let mut vecs = Vec::new();
        for row in &aug {
            if row[..self.m].iter().all(|x| *x == 0) {
                let coeffs = &row[self.m..self.m + k1];
                let mut v = vec![0u8; self.m];
                for (c, b) in coeffs.iter().zip(&self.rows) {
                    if *c != 0 {
                        for k in 0..self.m {
                            v[k] = f.add(v[k], f.mul(*c, b[k]));
                        }
                    }
                }
                vecs.push(v);
            }
        }
        Self::span(f, self.m, &vecs)
    }

    /// Orthogonal complement for the anti-diagonal form `Q(e_i, e_j) = δ_{i, m+1-j}`.
    pub fn perp(&self, f: &Field) -> Self {
        // x ⊥ u  iff  Σ u_i x_{m+1-i} = 0, i.e. x is killed by reversed u.
        let reversed: Vec<Vec<u8>> = self
            .rows
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        Self::span(f, self.m, &right_kernel(f, &reversed, self.m))
    }

    pub fn is_isotropic(&self, f: &Field) -> bool {
        self.rows
            .iter()
            .all(|a| self.rows.iter().all(|b| form(f, a, b) == 0))
    }

    /// Keep coordinates `lo..=hi` (1-based) of each basis vector and re-span.
    pub fn project(&self, f: &Field, lo: usize, hi: usize) -> Self {
        let v: Vec<Vec<u8>> = self.rows.iter().map(|r| r[lo - 1..hi].to_vec()).collect();
        Self::span(f, hi + 1 - lo, &v)
    }

    /// Embed into a larger space, placing coordinates starting at `offset`.
    pub fn embed(&self, m: usize, offset: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![0u8; m];
                v[offset..offset + self.m].copy_from_slice(r);
                v
            })
            .collect();
        Self { m, rows }
    }
}

/// Anti-diagonal symmetric form.
pub fn form(f: &Field, a: &[u8], b: &[u8]) -> u8 {
    let m = a.len();
    (0..m).fold(0u8, |acc, i| f.add(acc, f.mul(a[i], b[m - 1 - i])))
}

/// Basis of `{x : M x = 0}` for the given rows of `M`.
pub fn right_kernel(f: &Field, rows: &[Vec<u8>], m: usize) -> Vec<Vec<u8>> {
    let mut r = rows.to_vec();
    let pivots = rref_in_place(f, &mut r, m);
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![0u8; m];
            x[fc] = 1;
            for (row, &pc) in r.iter().zip(&pivots) {
                x[pc] = f.neg(row[fc]);
            }
            x
        })
        .collect()
}

/// All `k`-dimensional subspaces of `F_q^m`, by RREF pivot pattern.
pub fn all_subspaces(f: &Field, m: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let q = f.q() as u8;
    for pivots in itertools::Itertools::combinations(0..m, k) {
        // free positions: (row, col) with col > pivot[row], col not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pv = &pivots;
                ((pv[r] + 1)..m)
                    .filter(move |c| !pv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut vals = vec![0u8; free.len()];
        loop {
            let mut rows = vec![vec![0u8; m]; k];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            for (idx, &(r, c)) in free.iter().enumerate() {
                rows[r][c] = vals[idx];
            }
            out.push(Subspace { m, rows });
            if !advance(&mut vals, q) {
                break;
            }
        }
    }
    out
}

/// Odometer step over `F_q^k`; false once every value has been visited.
fn advance(vals: &mut [u8], q: u8) -> bool {
    for v in vals.iter_mut() {
        *v += 1;
        if *v < q {
            return true;
        }
        *v = 0;
    }
    false
}

/// All subspaces `W ⊇ u` with `dim W = k`.
pub fn extensions(f: &Field, u: &Subspace, k: usize) -> Vec<Subspace> {
    let m = u.ambient();
    if k < u.dim() || k > m {
        return vec![];
    }
    let pivots = u.pivots();
    let comp: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    all_subspaces(f, comp.len(), k - u.dim())
        .into_iter()
        .map(|w| {
            let lifted: Vec<Vec<u8>> = w
                .rows()
                .iter()
                .map(|r| {
                    let mut v = vec![0u8; m];
                    for (x, &c) in r.iter().zip(&comp) {
                        v[c] = *x;
                    }
                    v
                })
                .collect();
            let mut all = u.rows().to_vec();
            all.extend(lifted);
            Subspace::span(f, m, &all)
        })
        .collect()
}

/// All totally isotropic `W ⊇ u` with `dim W = k` (`u` itself isotropic).
pub fn isotropic_extensions(f: &Field, u: &Subspace, k: usize) -> Vec<Subspace> {
    use std::collections::BTreeSet;
    let m = u.ambient();
    let mut level: BTreeSet<Subspace> = BTreeSet::new();
    level.insert(u.clone());
    for _ in u.dim()..k {
        let mut next = BTreeSet::new();
        for w in &level {
            let p = w.perp(f);
            // complement of w inside p: vectors of p vanishing on w's pivots
            let piv = w.pivots();
            let comp_rows: Vec<Vec<u8>> = {
                let cons: Vec<Vec<u8>> = piv
                    .iter()
                    .map(|&c| (0..m).map(|j| u8::from(j == c)).collect())
                    .collect();
                let coord = Subspace::span(f, m, &right_kernel(f, &cons, m));
                p.intersect(f, &coord).rows().to_vec()
            };
            for x in normalized_combinations(f, &comp_rows, m) {
                if form(f, &x, &x) != 0 {
                    continue;
                }
                let mut all = w.rows().to_vec();
                all.push(x);
                next.insert(Subspace::span(f, m, &all));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Nonzero combinations of `basis` whose leading coefficient is 1.
fn normalized_combinations(f: &Field, basis: &[Vec<u8>], m: usize) -> Vec<Vec<u8>> {
    let q = f.q() as u8;
    let k = basis.len();
    let mut out = Vec::new();
    for lead in 0..k {
        // coefficients: 0 before lead, 1 at lead, anything after
        let rest = k - lead - 1;
        let mut vals = vec![0u8; rest];
        loop {
            let mut v = basis[lead].clone();
            for (idx, c) in vals.iter().enumerate() {
                if *c != 0 {
                    let b = &basis[lead + 1 + idx];
                    for j in 0..m {
                        v[j] = f.add(v[j], f.mul(*c, b[j]));
                    }
                }
            }
            out.push(v);
            if !advance(&mut vals, q) {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_gaussian_binomials() {
        let f = Field::new(3).unwrap();
        assert_eq!(all_subspaces(&f, 4, 2).len(), 130);
        assert_eq!(all_subspaces(&f, 3, 1).len(), 13);
        assert_eq!(all_subspaces(&f, 3, 0).len(), 1);
        assert_eq!(all_subspaces(&f, 2, 2).len(), 1);
    }

    #[test]
    fn intersection_and_perp() {
        let f = Field::new(5).unwrap();
        let a = Subspace::coordinate(4, 1, 2);
        let b = Subspace::coordinate(4, 2, 3);
        assert_eq!(a.intersect(&f, &b), Subspace::coordinate(4, 2, 2));
        let l = Subspace::coordinate(5, 1, 2);
        assert_eq!(l.perp(&f), Subspace::coordinate(5, 1, 3));
        assert!(l.is_isotropic(&f));
    }

    #[test]
    fn isotropic_lines_of_conic() {
        for q in [3usize, 5, 7] {
            let f = Field::new(q).unwrap();
            let lines = isotropic_extensions(&f, &Subspace::zero(3), 1);
            assert_eq!(lines.len(), q + 1);
        }
    }
}
