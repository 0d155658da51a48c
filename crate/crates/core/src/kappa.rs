//! The moves `t_{i,j}` and `m_{i,j}`, the reachability order `≤_κ`, and the
//! dominance order on partitions.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// Swap positions `i` and `j`; legal when `v_i < v_j`.
    T,
    /// `v + e_i - e_j`; legal when `v_i < v_j - 1`.
    M,
}

/// A move with 1-based indices `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Move {
    pub kind: MoveKind,
    pub i: usize,
    pub j: usize,
}

impl Move {
    pub fn t(i: usize, j: usize) -> Self {
        Move { kind: MoveKind::T, i, j }
    }

    pub fn m(i: usize, j: usize) -> Self {
        Move { kind: MoveKind::M, i, j }
    }

    pub fn is_legal_on(&self, v: &Composition) -> bool {
        if self.i == 0 || self.i >= self.j || self.j > v.len() {
            return false;
        }
        let (a, b) = (v.get(self.i), v.get(self.j));
        match self.kind {
            MoveKind::T => a < b,
            MoveKind::M => a + 1 < b,
        }
    }

    /// Applies the move without checking the side condition.
    fn apply_unchecked(&self, v: &Composition) -> Composition {
        match self.kind {
            MoveKind::T => v.swapped(self.i, self.j),
            MoveKind::M => {
                let mut parts = v.parts().to_vec();
                parts[self.i - 1] += 1;
                parts[self.j - 1] -= 1;
                Composition::new(parts)
            }
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            MoveKind::T => 'T',
            MoveKind::M => 'M',
        };
        write!(f, "{tag}({},{})", self.i, self.j)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            kind: MoveKind,
            i: usize,
            j: usize,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.i == 0 || raw.i >= raw.j {
            return Err(serde::de::Error::custom(format!("move needs 1 <= i < j, got i={} j={}", raw.i, raw.j)));
        }
        Ok(Move { kind: raw.kind, i: raw.i, j: raw.j })
    }
}

/// Applies `mv` to `v`, checking indices and the side condition on `v`.
pub fn apply_move(v: &Composition, mv: Move) -> Result<Composition> {
    if mv.i == 0 || mv.i >= mv.j || mv.j > v.len() {
        return Err(Error::InvalidMoveIndices { i: mv.i, j: mv.j, n: v.len() });
    }
    if !mv.is_legal_on(v) {
        return Err(Error::IllegalMove { mv: mv.to_string(), vector: v.parts().to_vec() });
    }
    Ok(mv.apply_unchecked(v))
}

/// Moves applied in order starting from `start`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveChain {
    pub start: Composition,
    pub moves: Vec<Move>,
}

impl MoveChain {
    pub fn empty(start: Composition) -> Self {
        MoveChain { start, moves: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Every intermediate vector, starting with `start`. Each side condition
    /// is checked on the vector current at that step.
    pub fn trajectory(&self) -> Result<Vec<Composition>> {
        let mut path = Vec::with_capacity(self.moves.len() + 1);
        path.push(self.start.clone());
        for &mv in &self.moves {
            let next = apply_move(path.last().expect("nonempty"), mv)?;
            path.push(next);
        }
        Ok(path)
    }

    pub fn replay(&self) -> Result<Composition> {
        Ok(self.trajectory()?.pop().expect("nonempty"))
    }
}

/// Legal moves from `v` in the fixed order: all `T` before all `M`, each
/// group in lexicographic `(i, j)` order.
pub fn legal_moves(v: &Composition) -> impl Iterator<Item = Move> + '_ {
    let n = v.len();
    let pairs = move || (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
    pairs()
        .map(|(i, j)| Move::t(i, j))
        .chain(pairs().map(|(i, j)| Move::m(i, j)))
        .filter(move |mv| mv.is_legal_on(v))
}

/// Breadth-first search tree of everything reachable from a root by legal
/// moves.
#[derive(Debug, Clone)]
pub struct Reachable {
    root: Composition,
    order: Vec<Composition>,
    parent: HashMap<Composition, (Composition, Move)>,
}

impl Reachable {
    pub fn from_root(root: &Composition) -> Self {
        let (lo, hi, sum) = (root.min_part(), root.max_part(), root.size());
        let mut order = vec![root.clone()];
        let mut parent = HashMap::new();
        let mut queue = VecDeque::from([root.clone()]);
        while let Some(v) = queue.pop_front() {
            for mv in legal_moves(&v) {
                let next = mv.apply_unchecked(&v);
                assert_eq!(next.size(), sum, "move changed the coordinate sum");
                assert!(
                    next.parts().iter().all(|&p| (lo..=hi).contains(&p)),
                    "move left the coordinate range [{lo}, {hi}]"
                );
                if next != *root && !parent.contains_key(&next) {
                    parent.insert(next.clone(), (v.clone(), mv));
                    order.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Reachable { root: root.clone(), order, parent }
    }

    pub fn root(&self) -> &Composition {
        &self.root
    }

    /// Reachable vectors in discovery order, root first.
    pub fn vectors(&self) -> &[Composition] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, beta: &Composition) -> bool {
        *beta == self.root || self.parent.contains_key(beta)
    }

    /// Chain from the root to `beta` along BFS parent pointers.
    pub fn chain_to(&self, beta: &Composition) -> Option<MoveChain> {
        if !self.contains(beta) {
            return None;
        }
        let mut moves = Vec::new();
        let mut cur = beta;
        while let Some((prev, mv)) = self.parent.get(cur) {
            moves.push(*mv);
            cur = prev;
        }
        moves.reverse();
        Some(MoveChain { start: self.root.clone(), moves })
    }

    pub fn to_set(&self) -> BTreeSet<Composition> {
        self.order.iter().cloned().collect()
    }
}

/// `{β : β ≤_κ α}`, including `α` itself.
pub fn closure(alpha: &Composition) -> BTreeSet<Composition> {
    Reachable::from_root(alpha).to_set()
}

/// Decides `β ≤_κ α`; a witnessing chain from `α` is returned when it holds.
pub fn leq_kappa(beta: &Composition, alpha: &Composition) -> Result<Option<MoveChain>> {
    if beta.len() != alpha.len() {
        return Err(Error::LengthMismatch { left: beta.len(), right: alpha.len() });
    }
    if beta.size() != alpha.size()
        || beta.parts().iter().any(|p| !(alpha.min_part()..=alpha.max_part()).contains(p))
    {
        return Ok(None);
    }
    Ok(Reachable::from_root(alpha).chain_to(beta))
}

fn check_partition(p: &Composition) -> Result<()> {
    if p.is_partition() {
        Ok(())
    } else {
        Err(Error::NotPartition(p.parts().to_vec()))
    }
}

/// `μ ⊴ λ`: every prefix sum of `μ` is at most the matching prefix sum of `λ`.
pub fn dominance_leq(mu: &Composition, lambda: &Composition) -> Result<bool> {
    if mu.len() != lambda.len() {
        return Err(Error::LengthMismatch { left: mu.len(), right: lambda.len() });
    }
    check_partition(mu)?;
    check_partition(lambda)?;
    if mu.size() != lambda.size() {
        return Err(Error::SumMismatch { left: mu.size(), right: lambda.size() });
    }
    let mut mu_sum = 0u64;
    let mut lambda_sum = 0u64;
    for (&a, &b) in mu.parts().iter().zip(lambda.parts()) {
        mu_sum += u64::from(a);
        lambda_sum += u64::from(b);
        if mu_sum > lambda_sum {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partitions of `total` with exactly `len` parts (zeros allowed), weakly
/// decreasing, listed in reverse lexicographic order.
pub fn partitions(total: u32, len: usize) -> Vec<Composition> {
    fn rec(remaining: u32, cap: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Composition::new(prefix.clone()));
            }
            return;
        }
        // The remaining slots hold at most cap each.
        if u64::from(remaining) > u64::from(cap) * slots as u64 {
            return;
        }
        for part in (0..=cap.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, len, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Distinct rearrangements of `v`.
pub fn rearrangements(v: &Composition) -> BTreeSet<Composition> {
    let n = v.len();
    v.parts()
        .iter()
        .copied()
        .permutations(n)
        .map(Composition::new)
        .collect()
}

/// All rearrangements of partitions `μ ⊴ λ` of the same size and length.
pub fn dominated_rearrangements(lambda: &Composition) -> Result<BTreeSet<Composition>> {
    check_partition(lambda)?;
    let mut out = BTreeSet::new();
    for mu in partitions(lambda.size() as u32, lambda.len()) {
        if dominance_leq(&mu, lambda)? {
            out.extend(rearrangements(&mu));
        }
    }
    Ok(out)
}
