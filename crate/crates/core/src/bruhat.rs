//! Permutations, the Bruhat order and Bruhat interval polytopes.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::polynomial::key_polynomial;
use crate::polytope::{polytope_equal, VPolytope};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let n = one_line.len() as u32;
        let mut seen = vec![false; one_line.len()];
        for &v in &one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::InvalidPermutation(one_line));
            }
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// `w_0 = n ... 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    pub fn inversions(&self) -> usize {
        self.0.iter().tuple_combinations().filter(|(a, b)| a > b).count()
    }

    /// The one-line notation read as a composition.
    pub fn as_composition(&self) -> Composition {
        Composition::new(self.0.clone())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u32).permutations(n).map(Permutation)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", digits.join(" "))
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Permutation::new(Vec::<u32>::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

/// `u ≤ v` by the rank criterion: for all `i, j`,
/// `#{k ≤ i : u(k) ≥ j} ≤ #{k ≤ i : v(k) ≥ j}`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    let n = u.len();
    if v.len() != n {
        return Err(Error::LengthMismatch { left: n, right: v.len() });
    }
    for j in 1..=n as u32 {
        let mut count_u = 0usize;
        let mut count_v = 0usize;
        for k in 0..n {
            count_u += usize::from(u.0[k] >= j);
            count_v += usize::from(v.0[k] >= j);
            if count_u > count_v {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[u, v]`, by filtering all of `S_n`.
pub fn bruhat_interval(u: &Permutation, v: &Permutation) -> Result<BTreeSet<Permutation>> {
    if !bruhat_leq(u, v)? {
        return Err(Error::NotBruhatBelow { u: u.0.clone(), v: v.0.clone() });
    }
    let mut out = BTreeSet::new();
    for w in Permutation::all(u.len()) {
        if bruhat_leq(u, &w)? && bruhat_leq(&w, v)? {
            out.insert(w);
        }
    }
    Ok(out)
}

/// `Q_{u,v}`: hull of the one-line notations in `[u, v]`.
pub fn interval_polytope(u: &Permutation, v: &Permutation) -> Result<VPolytope> {
    let interval = bruhat_interval(u, v)?;
    VPolytope::new(u.len(), interval.iter().map(Permutation::as_composition))
}

/// `Newton(κ_w) = Q_{w, w_0}`.
pub fn verify_qww0(w: &Permutation) -> Result<bool> {
    let newton = VPolytope::newton(&*key_polynomial(&w.as_composition()))?;
    let q = interval_polytope(w, &Permutation::longest(w.len()))?;
    polytope_equal(&newton, &q)
}
