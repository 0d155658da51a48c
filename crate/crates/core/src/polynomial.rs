//! Sparse multivariate polynomials over an integer ring, divided differences,
//! Demazure operators and key polynomials.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::{Composition, ExponentVector};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A polynomial in `n` variables stored as a map from exponent vectors to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial<C> {
    n: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> SparsePolynomial<C> {
    pub fn zero(n: usize) -> Self {
        SparsePolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Composition::zeros(n), C::one())
    }

    /// `coeff * x^exp`; zero coefficients give the zero polynomial.
    pub fn monomial(exp: ExponentVector, coeff: C) -> Self {
        let n = exp.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        SparsePolynomial { n, terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut poly = Self::zero(n);
        for (exp, coeff) in terms {
            if exp.len() != n {
                return Err(Error::LengthMismatch { left: exp.len(), right: n });
            }
            poly.add_term(exp, coeff);
        }
        Ok(poly)
    }

    fn add_term(&mut self, exp: ExponentVector, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical order: exponent vectors lexicographically decreasing.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter().rev()
    }

    pub fn exponent_vectors(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Composition::size).max()
    }

    /// Maps every coefficient into another ring.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> SparsePolynomial<D> {
        let mut out = SparsePolynomial::zero(self.n);
        for (exp, c) in &self.terms {
            out.add_term(exp.clone(), f(c));
        }
        out
    }

    fn check_operator_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }

    /// `s_i f`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Result<Self> {
        self.check_operator_index(i)?;
        let mut out = Self::zero(self.n);
        for (exp, c) in &self.terms {
            out.terms.insert(exp.swapped(i, i + 1), c.clone());
        }
        Ok(out)
    }

    /// Multiplies by `x_var^power` (1-based variable index).
    pub fn times_variable_power(&self, var: usize, power: u32) -> Self {
        let mut out = Self::zero(self.n);
        for (exp, c) in &self.terms {
            let mut parts = exp.parts().to_vec();
            parts[var - 1] += power;
            out.terms.insert(Composition::new(parts), c.clone());
        }
        out
    }

    /// Divides by `x_i - x_{i+1}` exactly.
    ///
    /// Views `self` as univariate in `x_i` with coefficients free of `x_i` and
    /// runs synthetic division by the root `x_i = x_{i+1}`.
    pub fn divide_by_difference(&self, i: usize) -> Result<Self> {
        self.check_operator_index(i)?;
        let mut by_degree: BTreeMap<u32, Self> = BTreeMap::new();
        for (exp, c) in &self.terms {
            let degree = exp.get(i);
            let mut parts = exp.parts().to_vec();
            parts[i - 1] = 0;
            by_degree
                .entry(degree)
                .or_insert_with(|| Self::zero(self.n))
                .add_term(Composition::new(parts), c.clone());
        }
        let top = match by_degree.keys().next_back() {
            Some(&top) => top,
            None => return Ok(Self::zero(self.n)),
        };

        // q_{k-1} = a_k + x_{i+1} q_k, remainder = a_0 + x_{i+1} q_0.
        let mut carry = Self::zero(self.n);
        let mut quotient = Self::zero(self.n);
        for k in (1..=top).rev() {
            let a_k = by_degree.remove(&k).unwrap_or_else(|| Self::zero(self.n));
            carry = &a_k + &carry.times_variable_power(i + 1, 1);
            quotient = &quotient + &carry.times_variable_power(i, k - 1);
        }
        let a_0 = by_degree.remove(&0).unwrap_or_else(|| Self::zero(self.n));
        let remainder = &a_0 + &carry.times_variable_power(i + 1, 1);
        if !remainder.is_zero() {
            return Err(Error::NonzeroRemainder { i });
        }
        Ok(quotient)
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        let numerator = self - &self.swap_variables(i)?;
        numerator.divide_by_difference(i)
    }

    /// `π_i f = ∂_i (x_i f)`.
    pub fn demazure(&self, i: usize) -> Result<Self> {
        self.check_operator_index(i)?;
        self.times_variable_power(i, 1).divided_difference(i)
    }

    /// Applies `π_{i_1} π_{i_2} ... π_{i_k}`, i.e. the last index acts first.
    pub fn demazure_word(&self, word: &[usize]) -> Result<Self> {
        word.iter().rev().try_fold(self.clone(), |acc, &i| acc.demazure(i))
    }
}

impl<C: Coefficient> Add for &SparsePolynomial<C> {
    type Output = SparsePolynomial<C>;

    fn add(self, rhs: Self) -> SparsePolynomial<C> {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &SparsePolynomial<C> {
    type Output = SparsePolynomial<C>;

    fn sub(self, rhs: Self) -> SparsePolynomial<C> {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(exp.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &SparsePolynomial<C> {
    type Output = SparsePolynomial<C>;

    fn neg(self) -> SparsePolynomial<C> {
        SparsePolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Mul for &SparsePolynomial<C> {
    type Output = SparsePolynomial<C>;

    fn mul(self, rhs: Self) -> SparsePolynomial<C> {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = SparsePolynomial::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp: Vec<u32> = ea.parts().iter().zip(eb.parts()).map(|(a, b)| a + b).collect();
                out.add_term(Composition::new(exp), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for SparsePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if k > 0 {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            } else if negative {
                write!(f, "-")?;
            }
            let constant = exp.size() == 0;
            if !magnitude.is_one() || constant {
                write!(f, "{magnitude}")?;
            }
            for (var, &e) in exp.parts().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "x{}", var + 1)?,
                    _ => write!(f, "x{}^{}", var + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for SparsePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePolynomial(n={}, {})", self.n, self)
    }
}

/// Choice of ascent used by the key-polynomial recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    Leftmost,
    Rightmost,
}

/// `κ_α` computed by the Demazure recursion, without memoization.
///
/// Partitions map to `x^α`; otherwise pick an ascent `i` (`α_i < α_{i+1}`)
/// and return `π_i κ_{s_i α}`.
pub fn key_polynomial_with<C: Coefficient>(alpha: &Composition, pivot: Pivot) -> SparsePolynomial<C> {
    // Sorting toward the partition by adjacent swaps; record the ascents used.
    let mut word = Vec::new();
    let mut current = alpha.clone();
    loop {
        let ascent = match pivot {
            Pivot::Leftmost => current.ascents().next(),
            Pivot::Rightmost => current.ascents().last(),
        };
        match ascent {
            Some(i) => {
                word.push(i);
                current = current.swapped(i, i + 1);
            }
            None => break,
        }
    }
    SparsePolynomial::monomial(current, C::one())
        .demazure_word(&word)
        .expect("ascent indices are in range")
}

type KeyCache = RwLock<HashMap<Composition, Arc<SparsePolynomial<BigInt>>>>;

fn key_cache() -> &'static KeyCache {
    static CACHE: OnceLock<KeyCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `κ_α` over the integers, leftmost-ascent recursion, memoized process-wide.
pub fn key_polynomial(alpha: &Composition) -> Arc<SparsePolynomial<BigInt>> {
    if let Some(hit) = key_cache().read().expect("cache poisoned").get(alpha) {
        return Arc::clone(hit);
    }
    let value = match alpha.ascents().next() {
        None => SparsePolynomial::monomial(alpha.clone(), BigInt::one()),
        Some(i) => key_polynomial(&alpha.swapped(i, i + 1))
            .demazure(i)
            .expect("ascent index is in range"),
    };
    let value = Arc::new(value);
    // Results are deterministic, so a racing writer stores an equal value.
    key_cache()
        .write()
        .expect("cache poisoned")
        .insert(alpha.clone(), Arc::clone(&value));
    value
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    terms: Vec<TermJson>,
}

fn coeff_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

fn coeff_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(num) => num.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// JSON form `{"n": 3, "terms": [{"exp": [3,2,1], "coeff": 1}, ...]}`, terms
/// in canonical order. Coefficients outside `i64` are written as strings.
impl Serialize for SparsePolynomial<BigInt> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            n: self.n,
            terms: self
                .terms()
                .map(|(exp, c)| TermJson { exp: exp.parts().to_vec(), coeff: coeff_to_json(c) })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial<BigInt> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolynomialJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let coeff = coeff_from_json(&t.coeff)
                .ok_or_else(|| D::Error::custom(format!("bad coefficient {}", t.coeff)))?;
            if coeff.is_zero() {
                return Err(D::Error::custom("zero coefficient in term list"));
            }
            terms.push((Composition::new(t.exp), coeff));
        }
        SparsePolynomial::from_terms(raw.n, terms).map_err(D::Error::custom)
    }
}
