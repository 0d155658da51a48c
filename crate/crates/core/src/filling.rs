//! Column-strict flagged fillings of diagrams.
//!
//! A filling puts a positive integer in every box of a diagram. It is
//! column-strict when the entries of each column are distinct, and flagged
//! when the entry in row `i` is at most `i`. `F(D)` is the set of fillings
//! with both properties; `F_≤(D)` keeps those whose columns increase
//! downward.
//!
//! Besides enumeration, this module implements the column rearrangement
//! [`optimize`], the single descent step [`lemma_step`] turning a filling of
//! `D(α)` into one whose weight is one `t`/`m` move closer to `α`, the full
//! descent [`descend_to_alpha`], and the converse construction
//! [`witness_filling`] that realizes any move chain from `α` as a filling.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::diagram::{lower_subsets, Diagram};
use crate::error::{Error, Result};
use crate::kappa::{apply_move, Move, MoveChain, MoveKind};

/// Entries stored column-major: `values[j-1][k]` sits in row
/// `diagram.column(j)[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    diagram: Diagram,
    values: Vec<Vec<u32>>,
}

pub type Weight = Composition;

impl Filling {
    /// `values` must match the diagram shape column by column; every entry
    /// must lie in `1..=n`. Column strictness and flags are not required.
    pub fn new(diagram: Diagram, values: Vec<Vec<u32>>) -> Result<Self> {
        let n = diagram.n();
        if values.len() != n {
            return Err(Error::InvalidFilling(format!("expected {n} columns, got {}", values.len())));
        }
        for (j, (col, vals)) in diagram.columns().iter().zip(&values).enumerate() {
            if col.len() != vals.len() {
                return Err(Error::InvalidFilling(format!(
                    "column {} has {} boxes but {} entries",
                    j + 1,
                    col.len(),
                    vals.len()
                )));
            }
            if let Some(&v) = vals.iter().find(|&&v| v == 0 || v as usize > n) {
                return Err(Error::InvalidFilling(format!("entry {v} in column {} outside 1..={n}", j + 1)));
            }
        }
        Ok(Filling { diagram, values })
    }

    /// Builds a filling from `(row, col, val)` triples covering every box once.
    pub fn from_entries(diagram: Diagram, entries: &[(u32, usize, u32)]) -> Result<Self> {
        let mut values: Vec<Vec<Option<u32>>> = diagram.columns().iter().map(|c| vec![None; c.len()]).collect();
        for &(row, col, val) in entries {
            if col == 0 || col > diagram.n() {
                return Err(Error::InvalidFilling(format!("column {col} outside the grid")));
            }
            let k = diagram
                .column(col)
                .binary_search(&row)
                .map_err(|_| Error::InvalidFilling(format!("({row},{col}) is not a box of the diagram")))?;
            if values[col - 1][k].replace(val).is_some() {
                return Err(Error::InvalidFilling(format!("box ({row},{col}) filled twice")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(j, col)| {
                col.into_iter()
                    .enumerate()
                    .map(|(k, v)| {
                        v.ok_or_else(|| {
                            Error::InvalidFilling(format!("box ({},{}) left empty", diagram.column(j + 1)[k], j + 1))
                        })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::new(diagram, values)
    }

    /// `F_0`: every box holds its row index.
    pub fn row_index(diagram: &Diagram) -> Self {
        Filling { diagram: diagram.clone(), values: diagram.columns().to_vec() }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    /// Entries of column `j` (1-based), top to bottom.
    pub fn column_values(&self, j: usize) -> &[u32] {
        &self.values[j - 1]
    }

    pub fn entry(&self, row: u32, col: usize) -> Option<u32> {
        let k = self.diagram.column(col).binary_search(&row).ok()?;
        Some(self.values[col - 1][k])
    }

    /// `(row, col, val)` sorted by column, then row.
    pub fn entries(&self) -> impl Iterator<Item = (u32, usize, u32)> + '_ {
        self.diagram
            .columns()
            .iter()
            .zip(&self.values)
            .enumerate()
            .flat_map(|(j, (rows, vals))| rows.iter().zip(vals).map(move |(&r, &v)| (r, j + 1, v)))
    }

    fn column_contains(&self, col: usize, value: u32) -> bool {
        self.values[col - 1].contains(&value)
    }

    pub fn is_column_strict(&self) -> bool {
        self.values.iter().all(|col| col.iter().all_unique())
    }

    pub fn is_flagged(&self) -> bool {
        self.entries().all(|(r, _, v)| v <= r)
    }

    /// Membership in `F(D)`.
    pub fn is_valid(&self) -> bool {
        self.is_column_strict() && self.is_flagged()
    }

    /// Membership in `F_≤(D)`.
    pub fn is_sorted_valid(&self) -> bool {
        self.is_flagged() && self.values.iter().all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    /// Entries of each column resorted increasingly from top to bottom.
    pub fn sorted_columns(&self) -> Filling {
        let values = self
            .values
            .iter()
            .map(|col| {
                let mut col = col.clone();
                col.sort_unstable();
                col
            })
            .collect();
        Filling { diagram: self.diagram.clone(), values }
    }

    /// Diagram whose column `j` is the set of entries of column `j`.
    pub fn content_diagram(&self) -> Result<Diagram> {
        Diagram::new(self.n(), self.values.clone())
    }

    fn set(&mut self, row: u32, col: usize, value: u32) {
        let k = self.diagram.column(col).binary_search(&row).expect("box exists");
        self.values[col - 1][k] = value;
    }

    /// Replaces the entry `from` in column `col` with `to`.
    fn replace_in_column(&mut self, col: usize, from: u32, to: u32) {
        let slot = self.values[col - 1]
            .iter_mut()
            .find(|v| **v == from)
            .expect("value present in column");
        *slot = to;
    }
}

/// `wt(F)`: entry `i` counts the occurrences of `i`.
pub fn weight(f: &Filling) -> Weight {
    let mut counts = vec![0u32; f.n()];
    for col in &f.values {
        for &v in col {
            counts[v as usize - 1] += 1;
        }
    }
    Composition::new(counts)
}

/// Injective assignments `rows[k] -> value <= rows[k]`, lexicographic in the
/// value sequence.
fn flagged_injections(rows: &[u32]) -> Vec<Vec<u32>> {
    fn rec(rows: &[u32], used: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let k = used.len();
        if k == rows.len() {
            out.push(used.clone());
            return;
        }
        for v in 1..=rows[k] {
            if !used.contains(&v) {
                used.push(v);
                rec(rows, used, out);
                used.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(rows, &mut Vec::with_capacity(rows.len()), &mut out);
    out
}

/// Every element of `F(D)`, each once.
pub fn enumerate_fillings(d: &Diagram) -> impl Iterator<Item = Filling> + '_ {
    d.columns()
        .iter()
        .map(|rows| flagged_injections(rows))
        .multi_cartesian_product()
        .map(move |values| Filling { diagram: d.clone(), values })
}

/// Every element of `F_≤(D)`. An increasing flagged column is the same as a
/// set `C_j ≤ D_j`, so this reuses the lower-set enumeration.
pub fn enumerate_sorted_fillings(d: &Diagram) -> impl Iterator<Item = Filling> + '_ {
    let n = d.n();
    d.columns()
        .iter()
        .map(move |rows| lower_subsets(rows, n))
        .multi_cartesian_product()
        .map(move |values| Filling { diagram: d.clone(), values })
}

/// Distinct weights of `F(D)`.
pub fn filling_weights(d: &Diagram) -> BTreeSet<Weight> {
    enumerate_fillings(d).map(|f| weight(&f)).collect()
}

/// Distinct weights of `F_≤(D)`.
pub fn sorted_filling_weights(d: &Diagram) -> BTreeSet<Weight> {
    enumerate_sorted_fillings(d).map(|f| weight(&f)).collect()
}

/// `opt(F)`: in column `m`, take the values `i_1 < ... < i_k` that are also
/// rows of the column; for each in turn, if `i_r` is not already in row
/// `i_r` it sits lower, at some row `t`, and is swapped with the entry in row
/// `i_r`.
pub fn optimize(f: &Filling) -> Filling {
    let mut out = f.clone();
    for m in 1..=f.n() {
        let rows = f.diagram.column(m);
        let targets: Vec<u32> = f.values[m - 1]
            .iter()
            .copied()
            .filter(|v| rows.binary_search(v).is_ok())
            .sorted_unstable()
            .collect();
        let col = &mut out.values[m - 1];
        for target in targets {
            let home = rows.binary_search(&target).expect("target is a row of the column");
            if col[home] == target {
                continue;
            }
            let at = col.iter().position(|&v| v == target).expect("target value present");
            col.swap(home, at);
        }
    }
    out
}

/// Position chosen by the descent step: the topmost row `j` holding an entry
/// other than `j`, and within it the leftmost such entry `i` at column `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Defect {
    pub i: u32,
    pub h: usize,
    pub j: u32,
}

pub fn locate_defect(g: &Filling) -> Option<Defect> {
    (1..=g.n() as u32).find_map(|j| {
        (1..=g.n()).find_map(|h| match g.entry(j, h) {
            Some(i) if i != j => Some(Defect { i, h, j }),
            _ => None,
        })
    })
}

/// Case 1 rewrite: the entry `i` in box `(j, h)` becomes `j`.
///
/// Panics if `j` already occurs in column `h`; in an optimized filling that
/// cannot happen, because `j` would then occupy box `(j, h)`.
pub fn raise_entry(g: &Filling, defect: Defect) -> Filling {
    assert!(
        !g.column_contains(defect.h, defect.j),
        "value {} already present in column {}",
        defect.j,
        defect.h
    );
    let mut out = g.clone();
    out.set(defect.j, defect.h, defect.j);
    out
}

/// Case 2 rewrite: columns containing `i` but not `j` get `i -> j`,
/// columns containing `j` but not `i` get `j -> i`, all others unchanged.
pub fn exchange_values(g: &Filling, i: u32, j: u32) -> Filling {
    let mut out = g.clone();
    for m in 1..=g.n() {
        match (g.column_contains(m, i), g.column_contains(m, j)) {
            (true, false) => out.replace_in_column(m, i, j),
            (false, true) => out.replace_in_column(m, j, i),
            _ => {}
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaCase {
    /// `β_i ≤ β_j`: one entry raised, `wt(F) = m_{i,j}(wt(F'))`.
    Raise,
    /// `β_i > β_j`: values exchanged columnwise, `wt(F) = t_{i,j}(wt(F'))`.
    Exchange,
}

#[derive(Debug, Clone)]
pub struct LemmaStep {
    pub optimized: Filling,
    pub defect: Defect,
    pub case: LemmaCase,
    pub filling: Filling,
    /// Applying this move to `wt(filling)` gives `wt(F)`.
    pub mv: Move,
}

fn require_skyline(f: &Filling) -> Result<Composition> {
    f.diagram
        .as_skyline()
        .ok_or_else(|| Error::InvalidDiagram("expected a skyline diagram".into()))
}

/// One descent step on a filling `F ∈ F(D(α))` with `wt(F) ≠ α`.
///
/// Returns `F' ∈ F(D(α))` together with the move `mv` such that
/// `wt(F) = mv(wt(F'))`; `wt(F')` is lexicographically smaller than `wt(F)`.
pub fn lemma_step(f: &Filling) -> Result<LemmaStep> {
    let alpha = require_skyline(f)?;
    if !f.is_valid() {
        return Err(Error::InvalidFilling("not column-strict and flagged".into()));
    }
    if weight(f) == alpha {
        return Err(Error::AlreadyAtAlpha);
    }
    let optimized = optimize(f);
    let defect = locate_defect(&optimized).expect("weight differs from alpha, so some entry is off its row");
    assert!(defect.i < defect.j, "flag condition forces i < j");
    let beta = weight(&optimized);
    let (i, j) = (defect.i as usize, defect.j as usize);
    let (case, filling, mv) = if beta.get(i) <= beta.get(j) {
        (LemmaCase::Raise, raise_entry(&optimized, defect), Move::m(i, j))
    } else {
        (LemmaCase::Exchange, exchange_values(&optimized, defect.i, defect.j), Move::t(i, j))
    };
    assert!(filling.is_valid(), "descent step left F(D(alpha)) at {defect:?}");
    Ok(LemmaStep { optimized, defect, case, filling, mv })
}

/// Repeats [`lemma_step`] until the weight is `α`.
///
/// The result starts at `α` and lists the moves in the order they must be
/// applied to reach `wt(F)`.
pub fn descend_to_alpha(f: &Filling) -> Result<MoveChain> {
    let alpha = require_skyline(f)?;
    if !f.is_valid() {
        return Err(Error::InvalidFilling("not column-strict and flagged".into()));
    }
    let mut current = f.clone();
    let mut current_weight = weight(&current);
    let mut moves = Vec::new();
    while current_weight != alpha {
        let step = lemma_step(&current)?;
        let next_weight = weight(&step.filling);
        assert!(next_weight < current_weight, "weight must decrease lexicographically");
        moves.push(step.mv);
        current = step.filling;
        current_weight = next_weight;
    }
    moves.reverse();
    Ok(MoveChain { start: alpha, moves })
}

/// Builds `F' ∈ F(D(α))` with weight equal to the end of `chain`, starting
/// from the row-index filling and realizing one move at a time:
///
/// * `T(i,j)`: in the leftmost `v_j - v_i` columns holding `j` but not `i`,
///   replace `j` by `i`;
/// * `M(i,j)`: in the leftmost column holding `j` but not `i`, replace `j`
///   by `i`.
pub fn witness_filling(alpha: &Composition, chain: &MoveChain) -> Result<Filling> {
    if chain.start != *alpha {
        return Err(Error::Parse(format!("chain starts at {:?}, expected {alpha:?}", chain.start)));
    }
    let diagram = Diagram::skyline(alpha)?;
    let mut f = Filling::row_index(&diagram);
    let mut v = alpha.clone();
    for &mv in &chain.moves {
        let next = apply_move(&v, mv)?;
        let (i, j) = (mv.i as u32, mv.j as u32);
        let wanted = match mv.kind {
            MoveKind::T => (v.get(mv.j) - v.get(mv.i)) as usize,
            MoveKind::M => 1,
        };
        let columns: Vec<usize> = (1..=f.n())
            .filter(|&m| f.column_contains(m, j) && !f.column_contains(m, i))
            .take(wanted)
            .collect();
        assert_eq!(columns.len(), wanted, "not enough columns holding {j} without {i}");
        for m in columns {
            f.replace_in_column(m, j, i);
        }
        debug_assert!(f.is_valid());
        assert_eq!(weight(&f), next, "witness weight diverged from the chain");
        v = next;
    }
    Ok(f)
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    row: u32,
    col: usize,
    val: u32,
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    diagram: Diagram,
    entries: Vec<EntryJson>,
}

/// `{"diagram": {...}, "entries": [{"row": 2, "col": 1, "val": 1}, ...]}`,
/// entries sorted by `(col, row)`.
impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FillingJson {
            diagram: self.diagram.clone(),
            entries: self.entries().map(|(row, col, val)| EntryJson { row, col, val }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = FillingJson::deserialize(deserializer)?;
        let triples: Vec<_> = raw.entries.iter().map(|e| (e.row, e.col, e.val)).collect();
        Filling::from_entries(raw.diagram, &triples).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn skyline(parts: &[u32]) -> Diagram {
        Diagram::skyline(&Composition::new(parts.to_vec())).unwrap()
    }

    /// Every assignment of `1..=n` to the boxes, filtered.
    fn brute_force_fillings(d: &Diagram) -> Vec<Filling> {
        let boxes = d.num_boxes();
        let n = d.n() as u32;
        (0..boxes)
            .map(|_| 1..=n)
            .multi_cartesian_product()
            .map(|flat| {
                let mut it = flat.into_iter();
                let values = d.columns().iter().map(|c| it.by_ref().take(c.len()).collect()).collect();
                Filling::new(d.clone(), values).unwrap()
            })
            .filter(Filling::is_valid)
            .collect()
    }

    #[test]
    fn small_fillings() {
        let fs: Vec<_> = enumerate_fillings(&skyline(&[0, 1])).collect();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].entry(2, 1), Some(1));
        assert_eq!(fs[1].entry(2, 1), Some(2));
        let fs: Vec<_> = enumerate_fillings(&skyline(&[1, 0])).collect();
        assert_eq!(fs, vec![Filling::row_index(&skyline(&[1, 0]))]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for parts in [&[1, 3, 2][..], &[0, 2, 2], &[2, 0, 3], &[1, 1, 1]] {
            let d = skyline(parts);
            let fast: BTreeSet<_> = enumerate_fillings(&d).collect();
            let slow: BTreeSet<_> = brute_force_fillings(&d).into_iter().collect();
            assert_eq!(fast, slow, "{parts:?}");
            assert_eq!(enumerate_fillings(&d).count(), fast.len());

            let sorted_direct: BTreeSet<_> = enumerate_sorted_fillings(&d).collect();
            let sorted_filter: BTreeSet<_> = slow.into_iter().filter(Filling::is_sorted_valid).collect();
            assert_eq!(sorted_direct, sorted_filter, "{parts:?}");
        }
        // Columns {1,2,3}, {2,3}, {2}: 1 * (2 * 2) * 2 flagged injections.
        assert_eq!(enumerate_fillings(&skyline(&[1, 3, 2])).count(), 8);
    }

    #[test]
    fn single_box_sorted_equals_all() {
        let d = Diagram::new(3, vec![vec![], vec![3], vec![]]).unwrap();
        let all: Vec<_> = enumerate_fillings(&d).collect();
        let sorted: Vec<_> = enumerate_sorted_fillings(&d).collect();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn weights() {
        let alpha: Composition = [1, 3, 0, 2].into();
        assert_eq!(weight(&Filling::row_index(&Diagram::skyline(&alpha).unwrap())), alpha);
        assert_eq!(weight(&Filling::row_index(&Diagram::empty(3))), Composition::zeros(3));
        assert_eq!(weight(&fixtures::fig3a()), [4, 5, 2, 3, 0].into());
    }

    #[test]
    fn figure_three_and_four() {
        let a = fixtures::fig3a();
        let b = fixtures::fig3b();
        assert!(a.is_valid());
        assert!(!a.is_sorted_valid());
        assert!(b.is_sorted_valid());
        assert_eq!(a.sorted_columns(), b);
        assert_eq!(optimize(&a), fixtures::fig4_optimized());
    }

    #[test]
    fn optimize_is_identity_when_nothing_moves() {
        let d = skyline(&[2, 0, 3]);
        let f0 = Filling::row_index(&d);
        assert_eq!(optimize(&f0), f0);
        let f = Filling::from_entries(d.clone(), &[(1, 1, 1), (1, 2, 1), (3, 1, 2), (3, 2, 3), (3, 3, 1)]).unwrap();
        assert_eq!(optimize(&optimize(&f)), optimize(&f));
    }

    #[test]
    fn lemma_step_two_box_example() {
        let d = skyline(&[0, 1]);
        let f = Filling::from_entries(d, &[(2, 1, 1)]).unwrap();
        let step = lemma_step(&f).unwrap();
        assert_eq!(step.optimized, f);
        assert_eq!(step.defect, Defect { i: 1, h: 1, j: 2 });
        assert_eq!(step.case, LemmaCase::Exchange);
        assert_eq!(step.filling.entry(2, 1), Some(2));
        assert_eq!(step.mv, Move::t(1, 2));
        assert_eq!(apply_move(&weight(&step.filling), step.mv).unwrap(), weight(&f));
    }

    #[test]
    fn lemma_step_errors() {
        let d = skyline(&[1, 2]);
        assert_eq!(lemma_step(&Filling::row_index(&d)).unwrap_err(), Error::AlreadyAtAlpha);
        let off = Filling::from_entries(d, &[(1, 1, 1), (2, 1, 2), (2, 2, 1)]).unwrap();
        assert_eq!(lemma_step(&off).unwrap().mv, Move::t(1, 2));
        let not_sky = Filling::row_index(&fixtures::fig1_diagram());
        assert!(matches!(lemma_step(&not_sky), Err(Error::InvalidDiagram(_))));
        let unflagged = Filling::from_entries(skyline(&[1, 0]), &[(1, 1, 2)]).unwrap();
        assert!(matches!(lemma_step(&unflagged), Err(Error::InvalidFilling(_))));
    }

    #[test]
    fn figure_five_case_one() {
        let step = lemma_step(&fixtures::fig5_input()).unwrap();
        assert_eq!(step.optimized, fixtures::fig5_optimized());
        assert_eq!(step.defect, Defect { i: 3, h: 5, j: 6 });
        assert_eq!(step.case, LemmaCase::Raise);
        assert_eq!(step.filling, fixtures::fig5_output());
        assert_eq!(step.mv, Move::m(3, 6));
    }

    #[test]
    fn figure_six_rewrite_matches() {
        let opt = optimize(&fixtures::fig6_input());
        assert_eq!(opt, fixtures::fig6_optimized());
        let defect = locate_defect(&opt).unwrap();
        assert_eq!(defect, Defect { i: 3, h: 4, j: 5 });
        assert_eq!(exchange_values(&opt, 3, 5), fixtures::fig6_output());
    }

    #[test]
    fn descent_examples() {
        let alpha: Composition = [1, 3, 2].into();
        let d = Diagram::skyline(&alpha).unwrap();
        assert!(descend_to_alpha(&Filling::row_index(&d)).unwrap().is_empty());
        let target: Composition = [3, 2, 1].into();
        let mut seen = 0;
        for f in enumerate_fillings(&d).filter(|f| weight(f) == target) {
            let chain = descend_to_alpha(&f).unwrap();
            assert_eq!(chain.start, alpha);
            assert_eq!(chain.replay().unwrap(), target);
            seen += 1;
        }
        assert!(seen > 0);
    }

    #[test]
    fn witness_examples() {
        let alpha: Composition = [1, 3, 2].into();
        let empty = witness_filling(&alpha, &MoveChain::empty(alpha.clone())).unwrap();
        assert_eq!(empty, Filling::row_index(&Diagram::skyline(&alpha).unwrap()));

        let f = witness_filling(&alpha, &MoveChain { start: alpha.clone(), moves: vec![Move::m(1, 2)] }).unwrap();
        assert!(f.is_valid());
        assert_eq!(weight(&f), [2, 2, 2].into());

        let chain = MoveChain { start: alpha.clone(), moves: vec![Move::t(1, 2), Move::t(2, 3)] };
        let f = witness_filling(&alpha, &chain).unwrap();
        assert!(f.is_valid());
        assert_eq!(weight(&f), [3, 2, 1].into());

        let illegal = MoveChain { start: alpha.clone(), moves: vec![Move::m(1, 3)] };
        assert!(matches!(witness_filling(&alpha, &illegal), Err(Error::IllegalMove { .. })));
        let wrong_start = MoveChain::empty([3, 2, 1].into());
        assert!(witness_filling(&alpha, &wrong_start).is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let f = fixtures::fig3a();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains(r#""entries":[{"row":3,"col":1,"val":2}"#));
        assert_eq!(serde_json::from_str::<Filling>(&json).unwrap(), f);
        let missing = r#"{"diagram":{"n":2,"columns":[[1,2],[]]},"entries":[{"row":1,"col":1,"val":1}]}"#;
        assert!(serde_json::from_str::<Filling>(missing).is_err());
        let stray = r#"{"diagram":{"n":2,"columns":[[1],[]]},"entries":[{"row":1,"col":1,"val":1},{"row":2,"col":1,"val":1}]}"#;
        assert!(serde_json::from_str::<Filling>(stray).is_err());
    }
}
