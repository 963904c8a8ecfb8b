//! Small finite fields `F_q`, `q = p^k`, with precomputed tables.

use crate::error::{Result, SchurError};

#[derive(Clone, Debug)]
pub struct Field {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Digits of `x` in base `p`, least significant first.
fn digits(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    let mut v = vec![0; k];
    for d in v.iter_mut() {
        *d = x % p;
        x /= p;
    }
    v
}

fn undigits(v: &[usize], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, d| acc * p + d)
}

/// Multiply two polynomials over `F_p` modulo the monic `modulus` of degree `k`.
fn polymulmod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let k = a.len();
    let mut prod = vec![0; 2 * k];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // x^k = -(modulus[0] + ... + modulus[k-1] x^{k-1})
        for (i, m) in modulus.iter().enumerate() {
            let t = (c * m) % p;
            prod[deg - k + i] = (prod[deg - k + i] + p - t) % p;
        }
        prod[deg] = 0;
    }
    prod.truncate(k);
    prod
}

fn is_irreducible(modulus: &[usize], p: usize) -> bool {
    // The quotient ring is a field iff every nonzero residue is invertible.
    let k = modulus.len();
    let q = p.pow(k as u32);
    for a in 1..q {
        let da = digits(a, p, k);
        if !(1..q).any(|b| {
            let prod = polymulmod(&da, &digits(b, p, k), modulus, p);
            undigits(&prod, p) == 1
        }) {
            return false;
        }
    }
    true
}

impl Field {
    pub fn new(q: usize) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| SchurError::Validation(format!("{q} is not a prime power")))?;
        if q > 256 {
            return Err(SchurError::ScaleExceeded(format!("field size {q}")));
        }
        let modulus = if k == 1 {
            vec![0]
        } else {
            (0..p.pow(k as u32))
                .map(|m| digits(m, p, k))
                .find(|m| is_irreducible(m, p))
                .ok_or_else(|| SchurError::ConsistencyFailure("no irreducible polynomial".into()))?
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s, p) as u8;
                let m = if k == 1 {
                    (a * b) % p
                } else {
                    undigits(&polymulmod(&da, &db, &modulus, p), p)
                };
                mul[a * q + b] = m as u8;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|b| mul[a * q + b] == 1).unwrap() as u8
                }
            })
            .collect();
        Ok(Self { q, p, add, mul, neg, inv })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [3, 5, 7, 9, 25, 27] {
            let f = Field::new(q).unwrap();
            for a in 0..q as u8 {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q as u8 {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q as u8 {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
        assert!(Field::new(6).is_err());
    }
}
