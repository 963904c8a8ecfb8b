//! Exact Laurent polynomials in `v` and polynomials in `q` with big-integer
//! coefficients.
//!
//! `LaurentPoly` is the coefficient ring of every algebra in the crate. `QPoly`
//! holds point-count polynomials; substituting `q = v^2` maps one into the other.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SchurError};

/// Element of `Z[v, v^-1]`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn v_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Build from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// True if every exponent is strictly negative (the zero polynomial counts).
    pub fn in_v_inverse_z(&self) -> bool {
        self.max_exp().is_none_or(|k| k < 0)
    }

    /// Part with exponents `< 0`.
    pub fn negative_part(&self) -> Self {
        Self {
            terms: self.terms.range(..0).map(|(k, c)| (*k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quantum integer `[m] = (v^m - v^-m)/(v - v^-1)`; `[-m] = -[m]`.
    pub fn quantum_int(m: i64) -> Self {
        let sign = if m < 0 { -1 } else { 1 };
        let m = m.abs();
        Self::from_terms((0..m).map(|j| (m - 1 - 2 * j, sign)))
    }

    pub fn quantum_factorial(m: u32) -> Self {
        (1..=m as i64).fold(Self::one(), |acc, k| &acc * &Self::quantum_int(k))
    }

    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(SchurError::Arithmetic("division by zero".into()));
        }
        let dlo = divisor.min_exp().unwrap();
        let dhi = divisor.max_exp().unwrap();
        let lead = divisor.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(hi) = rem.max_exp() {
            let lo = rem.min_exp().unwrap();
            if hi - lo < dhi - dlo {
                break;
            }
            let c = &rem.terms[&hi];
            if !(c % &lead).is_zero() {
                break;
            }
            let t = Self::monomial(c / &lead, hi - dhi);
            rem -= &(&t * divisor);
            quot += &t;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(SchurError::Arithmetic(format!(
                "{self} is not divisible by {divisor}"
            )))
        }
    }

    /// Evaluate at `v^2 = q`. Only defined when every exponent is even.
    pub fn eval_q(&self, q: i64) -> Option<BigRational> {
        let q = BigRational::from_integer(BigInt::from(q));
        let mut acc = BigRational::zero();
        for (k, c) in &self.terms {
            if k % 2 != 0 {
                return None;
            }
            let p = if *k >= 0 {
                num_traits::pow(q.clone(), (*k / 2) as usize)
            } else {
                num_traits::pow(q.recip(), (-*k / 2) as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Some(acc)
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "v")?,
                1 => write!(f, "{abs}v")?,
                _ if unit => write!(f, "v^{k}")?,
                _ => write!(f, "{abs}v^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let inner: BTreeMap<String, String> = self
            .terms
            .iter()
            .map(|(k, c)| (k.to_string(), c.to_string()))
            .collect();
        let mut outer = BTreeMap::new();
        outer.insert("v", inner);
        outer.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let outer: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::deserialize(d)?;
        let inner = outer
            .get("v")
            .ok_or_else(|| D::Error::custom("missing key \"v\""))?;
        let mut p = LaurentPoly::zero();
        for (k, c) in inner {
            let k: i64 = k.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(k, c);
        }
        Ok(p)
    }
}

/// Polynomial in `q` with integer coefficients, stored densely by exponent.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| BigInt::from(*c)).collect())
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Self { coeffs: c }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Substitute `q = v^2`.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (2 * k as i64, c.clone())),
        )
    }

    /// Inverse of [`QPoly::to_laurent`]; `None` for odd or negative exponents.
    pub fn from_laurent(p: &LaurentPoly) -> Option<Self> {
        let mut coeffs = Vec::new();
        for (k, c) in p.terms() {
            if k < 0 || k % 2 != 0 {
                return None;
            }
            let idx = (k / 2) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, BigInt::zero());
            }
            coeffs[idx] = c.clone();
        }
        Some(Self::from_coeffs(coeffs))
    }

    /// Gaussian binomial `[l; a]_q`; zero unless `0 <= a <= l`.
    pub fn qbinom(l: i64, a: i64) -> Self {
        if a < 0 || l < 0 || a > l {
            return Self::zero();
        }
        // Pascal recursion [l; a] = [l-1; a-1] + q^a [l-1; a].
        let (l, a) = (l as usize, a as usize);
        let mut row: Vec<QPoly> = vec![QPoly::one()];
        for m in 1..=l {
            let mut next = vec![QPoly::zero(); m + 1];
            next[0] = QPoly::one();
            next[m] = QPoly::one();
            for k in 1..m {
                next[k] = &row[k - 1] + &(&QPoly::q_pow(k) * &row[k]);
            }
            row = next;
        }
        row.swap_remove(a)
    }

    /// Interpolate through `samples`, keeping the last one in reserve as a check.
    pub fn interpolate(samples: &[(i64, BigInt)], degree_bound: usize) -> Result<Self> {
        if samples.len() < degree_bound + 2 {
            return Err(SchurError::ConsistencyFailure(format!(
                "interpolation needs {} samples, got {}",
                degree_bound + 2,
                samples.len()
            )));
        }
        let pts = &samples[..degree_bound + 1];
        // Lagrange in exact rationals.
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); degree_bound + 1];
        for (i, (xi, yi)) in pts.iter().enumerate() {
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, (xj, _)) in pts.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b.clone();
                    next[k] -= b * BigRational::from_integer(BigInt::from(*xj));
                }
                basis = next;
                denom *= BigRational::from_integer(BigInt::from(xi - xj));
            }
            let scale = BigRational::from_integer(yi.clone()) / denom;
            for (k, b) in basis.into_iter().enumerate() {
                acc[k] += b * &scale;
            }
        }
        let mut coeffs = Vec::with_capacity(acc.len());
        for c in acc {
            if !c.is_integer() {
                return Err(SchurError::ConsistencyFailure(
                    "interpolated coefficient is not an integer".into(),
                ));
            }
            coeffs.push(c.to_integer());
        }
        let p = Self::from_coeffs(coeffs);
        for (x, y) in &samples[degree_bound + 1..] {
            if p.eval(&BigInt::from(*x)) != *y {
                return Err(SchurError::ConsistencyFailure(format!(
                    "reserve sample at q={x} does not match the interpolant"
                )));
            }
        }
        Ok(p)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut c = vec![BigInt::zero(); n];
        for (k, x) in self.coeffs.iter().enumerate() {
            c[k] += x;
        }
        for (k, x) in rhs.coeffs.iter().enumerate() {
            c[k] += x;
        }
        QPoly::from_coeffs(c)
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        QPoly::from_coeffs(c)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())?;
        write!(f, " (q=v^2)")
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}q^{k}"))
            .collect();
        write!(f, "QPoly({})", parts.join(" + "))
    }
}

/// `[l; a]` in `v` with `q = v^2`, as used by the multiplication formulas.
pub fn qbinom_v(l: i64, a: i64) -> LaurentPoly {
    QPoly::qbinom(l, a).to_laurent()
}

/// Convert a small integer exponent count to `i64`, saturating.
pub fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().unwrap_or(i64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(lp(&[(1, 1), (0, 1)]) + lp(&[(0, -1)]), lp(&[(1, 1)]));
        assert_eq!(
            lp(&[(1, 1), (-1, 1)]) * lp(&[(1, 1), (-1, -1)]),
            lp(&[(2, 1), (-2, -1)])
        );
        assert_eq!(lp(&[(2, 1), (0, 1)]) * lp(&[(1, 1)]), lp(&[(3, 1), (1, 1)]));
    }

    #[test]
    fn bar_and_positivity() {
        assert_eq!(lp(&[(2, 1), (-1, 2)]).bar(), lp(&[(-2, 1), (1, 2)]));
        assert!(lp(&[(1, 1), (0, 3)]).is_positive());
        assert!(!lp(&[(1, 1), (-1, -1)]).is_positive());
        assert!(LaurentPoly::zero().is_positive());
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(QPoly::qbinom(5, 0), QPoly::one());
        assert_eq!(QPoly::qbinom(2, 1), QPoly::from_ints(&[1, 1]));
        assert_eq!(QPoly::qbinom(4, 2), QPoly::from_ints(&[1, 1, 2, 1, 1]));
        assert!(QPoly::qbinom(2, 3).is_zero());
    }

    #[test]
    fn quantum_integers_divide() {
        let f3 = LaurentPoly::quantum_factorial(3);
        let q2 = LaurentPoly::quantum_int(2);
        let q3 = LaurentPoly::quantum_int(3);
        assert_eq!(f3.div_exact(&q2).unwrap(), q3);
        assert!(q3.div_exact(&q2).is_err());
        assert_eq!(LaurentPoly::quantum_int(-2), -LaurentPoly::quantum_int(2));
    }

    #[test]
    fn interpolation() {
        let s = [(3, BigInt::from(4)), (5, BigInt::from(6)), (7, BigInt::from(8))];
        assert_eq!(QPoly::interpolate(&s, 1).unwrap(), QPoly::from_ints(&[1, 1]));
        let bad = [(3, BigInt::from(4)), (5, BigInt::from(6)), (7, BigInt::from(9))];
        assert!(QPoly::interpolate(&bad, 1).is_err());
        let ones: Vec<_> = [3, 5].iter().map(|q| (*q, BigInt::one())).collect();
        assert_eq!(QPoly::interpolate(&ones, 0).unwrap(), QPoly::one());
    }

    #[test]
    fn json_round_trip() {
        let p = lp(&[(-3, -7), (0, 2), (5, 1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"v":{"-3":"-7","0":"2","5":"1"}}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(lp(&[(2, 2), (-1, -1), (0, 3)]).to_string(), "-v^-1 + 3 + 2v^2");
    }
}
