//! Diagrams in the `n × n` grid stored column by column, skyline diagrams,
//! and the columnwise order `C ≤ D`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::composition::{Composition, ExponentVector};
use crate::error::{Error, Result};

/// A set of boxes `(row, column)` of the `n × n` grid, rows and columns
/// 1-based, row 1 at the top. Column `j` is stored as the sorted list of rows
/// holding a box in that column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diagram {
    n: usize,
    columns: Vec<Vec<u32>>,
}

impl Diagram {
    /// Builds a diagram from `n` column sets. Rows are sorted; duplicates or
    /// rows outside `1..=n` are rejected.
    pub fn new(n: usize, columns: Vec<Vec<u32>>) -> Result<Self> {
        if columns.len() != n {
            return Err(Error::InvalidDiagram(format!("expected {n} columns, got {}", columns.len())));
        }
        let mut sorted = Vec::with_capacity(n);
        for (j, mut col) in columns.into_iter().enumerate() {
            col.sort_unstable();
            if col.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDiagram(format!("column {} repeats a row", j + 1)));
            }
            if let Some(&bad) = col.iter().find(|&&r| r == 0 || r as usize > n) {
                return Err(Error::InvalidDiagram(format!("row {bad} in column {} is outside 1..={n}", j + 1)));
            }
            sorted.push(col);
        }
        Ok(Diagram { n, columns: sorted })
    }

    pub fn empty(n: usize) -> Self {
        Diagram { n, columns: vec![Vec::new(); n] }
    }

    /// `D(α)`: the first `α_i` boxes of row `i`.
    pub fn skyline(alpha: &Composition) -> Result<Self> {
        let n = alpha.len();
        if let Some(&part) = alpha.parts().iter().find(|&&p| p as usize > n) {
            return Err(Error::PartTooLarge { part, n });
        }
        let columns = (1..=n as u32)
            .map(|j| (1..=n as u32).filter(|&i| alpha.get(i as usize) >= j).collect())
            .collect();
        Ok(Diagram { n, columns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Rows of column `j` (1-based).
    pub fn column(&self, j: usize) -> &[u32] {
        &self.columns[j - 1]
    }

    pub fn contains(&self, row: u32, col: usize) -> bool {
        self.columns[col - 1].binary_search(&row).is_ok()
    }

    pub fn num_boxes(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Boxes `(row, col)` sorted by column then row.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |&r| (r, j + 1)))
    }

    /// Row lengths, if every row is left-justified (as in a skyline diagram).
    pub fn as_skyline(&self) -> Option<Composition> {
        let lengths: Vec<u32> = (1..=self.n as u32)
            .map(|i| self.columns.iter().filter(|c| c.binary_search(&i).is_ok()).count() as u32)
            .collect();
        let alpha = Composition::new(lengths);
        (Diagram::skyline(&alpha).ok().as_ref() == Some(self)).then_some(alpha)
    }
}

/// `R ≤ S`: same size and the k-th least element of `R` is at most the k-th
/// least element of `S`. Both slices must be sorted ascending.
pub fn subset_leq(r: &[u32], s: &[u32]) -> bool {
    r.len() == s.len() && r.iter().zip(s).all(|(a, b)| a <= b)
}

/// `C ≤ D` columnwise.
pub fn diagram_leq(c: &Diagram, d: &Diagram) -> Result<bool> {
    if c.n != d.n {
        return Err(Error::LengthMismatch { left: c.n, right: d.n });
    }
    Ok(c.columns.iter().zip(&d.columns).all(|(a, b)| subset_leq(a, b)))
}

/// All `|S|`-subsets `R` of `{1..n}` with `R ≤ S`, in lexicographic order.
pub fn lower_subsets(s: &[u32], n: usize) -> Vec<Vec<u32>> {
    // Position k of R may only use values up to s[k]; with R strictly
    // increasing that bound is enough to prune the search.
    fn extend(s: &[u32], start: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let k = prefix.len();
        if k == s.len() {
            out.push(prefix.clone());
            return;
        }
        for v in start..=s[k] {
            prefix.push(v);
            extend(s, v + 1, prefix, out);
            prefix.pop();
        }
    }
    debug_assert!(s.iter().all(|&v| v as usize <= n));
    let mut out = Vec::new();
    extend(s, 1, &mut Vec::with_capacity(s.len()), &mut out);
    out
}

/// Every diagram `C` with `C ≤ D`, each once. Columns vary independently;
/// the last column varies fastest.
pub fn enumerate_lower_diagrams(d: &Diagram) -> impl Iterator<Item = Diagram> + '_ {
    let n = d.n;
    d.columns
        .iter()
        .map(|s| lower_subsets(s, n))
        .multi_cartesian_product()
        .map(move |columns| Diagram { n, columns })
}

/// Exponent vector of `x^C`: entry `i` counts the boxes in row `i`.
pub fn monomial_of_diagram(c: &Diagram) -> ExponentVector {
    let mut counts = vec![0u32; c.n];
    for col in &c.columns {
        for &r in col {
            counts[r as usize - 1] += 1;
        }
    }
    Composition::new(counts)
}

#[derive(Deserialize)]
struct DiagramJson {
    n: usize,
    columns: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(deserializer)?;
        Diagram::new(raw.n, raw.columns).map_err(serde::de::Error::custom)
    }
}
