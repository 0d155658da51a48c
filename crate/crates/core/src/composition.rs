use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector of nonnegative integers `(a_1, ..., a_n)`.
///
/// Used both for the index of a key polynomial and for exponent vectors;
/// positions are 1-based in the public API (`get(1)` is the first part).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

pub type ExponentVector = Composition;

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Part at 1-based position `k`.
    pub fn get(&self, k: usize) -> u32 {
        self.0[k - 1]
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn max_part(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn min_part(&self) -> u32 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    /// Weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Parts sorted into weakly decreasing order.
    pub fn sorted_decreasing(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition(parts)
    }

    /// 1-based positions `i` with `a_i < a_{i+1}`.
    pub fn ascents(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .map(|(k, _)| k + 1)
    }

    /// Swap 1-based positions `i` and `j`.
    pub fn swapped(&self, i: usize, j: usize) -> Composition {
        let mut parts = self.0.clone();
        parts.swap(i - 1, j - 1);
        Composition(parts)
    }

    /// Every composition of length `n` with parts in `0..=max_part`, in
    /// lexicographic order.
    pub fn all(n: usize, max_part: u32) -> impl Iterator<Item = Composition> {
        let base = u64::from(max_part) + 1;
        let count = base.checked_pow(n as u32).expect("family too large");
        (0..count).map(move |mut code| {
            let mut parts = vec![0u32; n];
            for slot in parts.iter_mut().rev() {
                *slot = (code % base) as u32;
                code /= base;
            }
            Composition(parts)
        })
    }

    /// All compositions with lengths `1..=n_max` and parts `0..=max_part`.
    pub fn family(n_max: usize, max_part: u32) -> impl Iterator<Item = Composition> {
        (1..=n_max).flat_map(move |n| Composition::all(n, max_part))
    }
}

impl From<Vec<u32>> for Composition {
    fn from(parts: Vec<u32>) -> Self {
        Composition(parts)
    }
}

impl<const N: usize> From<[u32; N]> for Composition {
    fn from(parts: [u32; N]) -> Self {
        Composition(parts.to_vec())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", joined.join(","))
    }
}

/// Parses comma-separated nonnegative integers, e.g. `"1,3,2"`.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        s.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("'{tok}' is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let a: Composition = "1,3,2".parse().unwrap();
        assert_eq!(a, Composition::from([1, 3, 2]));
        assert_eq!(a.to_string(), "1,3,2");
        assert!("1,-1".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert!("1,,2".parse::<Composition>().is_err());
    }

    #[test]
    fn family_sizes() {
        assert_eq!(Composition::all(4, 4).count(), 625);
        assert_eq!(Composition::family(3, 1).count(), 2 + 4 + 8);
        let first: Vec<_> = Composition::all(2, 1).collect();
        assert_eq!(first, vec![[0, 0].into(), [0, 1].into(), [1, 0].into(), [1, 1].into()]);
    }

    #[test]
    fn ascents_and_shape() {
        let a = Composition::from([1, 3, 2, 4]);
        assert_eq!(a.ascents().collect::<Vec<_>>(), vec![1, 3]);
        assert!(Composition::from([3, 3, 1]).is_partition());
        assert_eq!(a.sorted_decreasing(), Composition::from([4, 3, 2, 1]));
    }
}
