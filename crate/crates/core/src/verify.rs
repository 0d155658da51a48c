//! Batch cross-checks over families of compositions.
//!
//! Each suite compares two or more independently computed sets per case and
//! records either equality or the symmetric difference of the first unequal
//! pair. Cases run in parallel; results are collected in enumeration order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bruhat::{interval_polytope, verify_qww0, Permutation};
use crate::composition::Composition;
use crate::diagram::{enumerate_lower_diagrams, monomial_of_diagram, Diagram};
use crate::error::Error;
use crate::filling::{
    descend_to_alpha, enumerate_fillings, filling_weights, lemma_step, sorted_filling_weights, weight,
    witness_filling, LemmaCase,
};
use crate::fixtures;
use crate::kappa::{
    apply_move, closure, dominance_leq, dominated_rearrangements, partitions, rearrangements, Reachable,
};
use crate::polynomial::key_polynomial;
use crate::polytope::VPolytope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Lower diagrams of `D(α)` against the exponents of `κ_α`.
    Kk,
    /// Filling weights of `D(α)` against the exponents of `κ_α`.
    Ccc,
    /// Move closure, exponents and Newton lattice points.
    Lattice,
    /// Weights of sorted and unsorted fillings of arbitrary diagrams.
    Aa,
    /// Weakly increasing compositions and permutohedron inclusion.
    Rado,
    /// `Newton(κ_w) = Q_{w,w_0}` and its lattice points.
    Bruhat,
    /// Single descent steps on every filling.
    Lemma,
    /// Witness fillings for every chain, and descent back.
    Witness,
}

impl Suite {
    pub const ALL: [Suite; 8] =
        [Suite::Kk, Suite::Ccc, Suite::Lattice, Suite::Aa, Suite::Rado, Suite::Bruhat, Suite::Lemma, Suite::Witness];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kk => "kk",
            Suite::Ccc => "ccc",
            Suite::Lattice => "lattice",
            Suite::Aa => "aa",
            Suite::Rado => "rado",
            Suite::Bruhat => "bruhat",
            Suite::Lemma => "lemma",
            Suite::Witness => "witness",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub left: String,
    pub right: String,
    pub only_left: Vec<Vec<u32>>,
    pub only_right: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub case: String,
    pub compared: Vec<String>,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CaseOutcome {
    /// Compares named sets pairwise against the first; stops at the first
    /// mismatch.
    fn compare_sets(case: String, sets: &[(&str, &BTreeSet<Composition>)]) -> Self {
        let compared = sets.iter().map(|(name, _)| name.to_string()).collect();
        let (first_name, first) = sets[0];
        for (name, other) in &sets[1..] {
            if first != *other {
                return CaseOutcome {
                    case,
                    compared,
                    equal: false,
                    counterexample: Some(Counterexample {
                        left: first_name.to_string(),
                        right: name.to_string(),
                        only_left: first.difference(other).map(|c| c.parts().to_vec()).collect(),
                        only_right: other.difference(first).map(|c| c.parts().to_vec()).collect(),
                        note: None,
                    }),
                };
            }
        }
        CaseOutcome { case, compared, equal: true, counterexample: None }
    }

    fn property(case: String, property: &str, failure: Option<String>) -> Self {
        CaseOutcome {
            case,
            compared: vec![property.to_string()],
            equal: failure.is_none(),
            counterexample: failure.map(|note| Counterexample {
                left: property.to_string(),
                right: String::new(),
                only_left: Vec::new(),
                only_right: Vec::new(),
                note: Some(note),
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub cases: usize,
    pub failures: usize,
    pub elapsed_ms: u64,
    pub outcomes: Vec<CaseOutcome>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Family {
    pub n_max: usize,
    pub part_max: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub family: Family,
    pub pass: bool,
    pub elapsed_ms: u64,
    pub suites: Vec<SuiteReport>,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub part_max: u32,
    pub suites: Vec<Suite>,
    /// Adds `S_5` to the Bruhat suite.
    pub slow: bool,
    /// Zero every `elapsed_ms`, for byte-stable reports.
    pub timing: bool,
    /// Number of random diagrams in the `aa` suite.
    pub random_diagrams: usize,
    pub seed: u64,
}

impl VerifyOptions {
    pub fn new(n_max: usize, part_max: u32) -> Self {
        VerifyOptions {
            n_max,
            part_max,
            suites: Suite::ALL.to_vec(),
            slow: false,
            timing: true,
            random_diagrams: 50,
            seed: 0x006b_6579_706f_6c79,
        }
    }
}

/// Pads `α` with trailing zeros so that `D(α)` fits its square grid.
/// Trailing zeros leave `κ_α` and its move closure unchanged.
pub fn grid_padded(alpha: &Composition) -> Composition {
    let n = alpha.len().max(alpha.max_part() as usize);
    let mut parts = alpha.parts().to_vec();
    parts.resize(n, 0);
    Composition::new(parts)
}

fn padded_exponents(alpha: &Composition) -> BTreeSet<Composition> {
    let n = grid_padded(alpha).len();
    key_polynomial(alpha)
        .exponent_vectors()
        .into_iter()
        .map(|e| {
            let mut parts = e.into_parts();
            parts.resize(n, 0);
            Composition::new(parts)
        })
        .collect()
}

pub fn check_kk(alpha: &Composition) -> CaseOutcome {
    let d = Diagram::skyline(&grid_padded(alpha)).expect("padded composition fits its grid");
    let monomials: BTreeSet<_> = enumerate_lower_diagrams(&d).map(|c| monomial_of_diagram(&c)).collect();
    CaseOutcome::compare_sets(
        alpha.to_string(),
        &[("lower_diagram_monomials", &monomials), ("key_exponents", &padded_exponents(alpha))],
    )
}

pub fn check_ccc(alpha: &Composition) -> CaseOutcome {
    let d = Diagram::skyline(&grid_padded(alpha)).expect("padded composition fits its grid");
    CaseOutcome::compare_sets(
        alpha.to_string(),
        &[("filling_weights", &filling_weights(&d)), ("key_exponents", &padded_exponents(alpha))],
    )
}

/// Three-way check of closure, exponents and lattice points. `with_lattice`
/// skips the lattice-point leg when false.
pub fn check_lattice(alpha: &Composition, with_lattice: bool) -> CaseOutcome {
    let kappa = key_polynomial(alpha);
    let exponents = kappa.exponent_vectors();
    let reach = closure(alpha);
    if !with_lattice {
        return CaseOutcome::compare_sets(alpha.to_string(), &[("closure", &reach), ("key_exponents", &exponents)]);
    }
    let lattice = VPolytope::newton(&*kappa).expect("key polynomials are nonzero").lattice_points();
    CaseOutcome::compare_sets(
        alpha.to_string(),
        &[("closure", &reach), ("key_exponents", &exponents), ("newton_lattice_points", &lattice)],
    )
}

pub fn check_aa(label: String, d: &Diagram) -> CaseOutcome {
    CaseOutcome::compare_sets(
        label,
        &[("sorted_filling_weights", &sorted_filling_weights(d)), ("filling_weights", &filling_weights(d))],
    )
}

/// `closure(α)` against rearrangements of partitions dominated by `sort(α)`.
pub fn check_rado_increasing(alpha: &Composition) -> CaseOutcome {
    let lambda = alpha.sorted_decreasing();
    let dominated = dominated_rearrangements(&lambda).expect("sorted input is a partition");
    CaseOutcome::compare_sets(alpha.to_string(), &[("closure", &closure(alpha)), ("dominated_rearrangements", &dominated)])
}

/// `P_μ ⊆ P_λ` against `μ ⊴ λ`.
pub fn check_rado_inclusion(mu: &Composition, lambda: &Composition) -> CaseOutcome {
    let p_mu = VPolytope::new(mu.len(), rearrangements(mu)).expect("nonempty");
    let p_lambda = VPolytope::new(lambda.len(), rearrangements(lambda)).expect("nonempty");
    let included = p_mu.is_subset_of(&p_lambda).expect("same dimension");
    let dominated = dominance_leq(mu, lambda).expect("partitions of equal size");
    let failure = (included != dominated).then(|| format!("inclusion={included}, dominance={dominated}"));
    CaseOutcome::property(format!("{mu:?} in {lambda:?}"), "inclusion_iff_dominance", failure)
}

pub fn check_bruhat(w: &Permutation) -> CaseOutcome {
    let case = format!("{w:?}");
    if !verify_qww0(w).expect("valid permutation") {
        return CaseOutcome::property(case, "newton_equals_interval_polytope", Some("polytopes differ".into()));
    }
    let q = interval_polytope(w, &Permutation::longest(w.len())).expect("w <= w0");
    let lattice = q.lattice_points();
    let reach = closure(&w.as_composition());
    CaseOutcome::compare_sets(case, &[("interval_lattice_points", &lattice), ("closure", &reach)])
}

/// Every non-root filling of `D(α)` takes one valid descent step.
pub fn check_lemma(alpha: &Composition) -> CaseOutcome {
    let padded = grid_padded(alpha);
    let d = Diagram::skyline(&padded).expect("padded composition fits its grid");
    let mut failure = None;
    let mut raises = 0usize;
    let mut exchanges = 0usize;
    for f in enumerate_fillings(&d) {
        let before = weight(&f);
        if before == padded {
            continue;
        }
        let step = match lemma_step(&f) {
            Ok(step) => step,
            Err(e) => {
                failure = Some(format!("{e} on {}", serde_json::to_string(&f).unwrap_or_default()));
                break;
            }
        };
        let after = weight(&step.filling);
        let relation = apply_move(&after, step.mv).map(|w| w == before).unwrap_or(false);
        if !step.filling.is_valid() || !relation || after >= before {
            failure = Some(format!(
                "step {} from weight {before:?} to {after:?} breaks validity, the move relation or lex decrease",
                step.mv
            ));
            break;
        }
        match step.case {
            LemmaCase::Raise => raises += 1,
            LemmaCase::Exchange => exchanges += 1,
        }
    }
    let mut outcome = CaseOutcome::property(alpha.to_string(), "lemma_step", failure);
    if outcome.equal {
        outcome.compared.push(format!("raise={raises}"));
        outcome.compared.push(format!("exchange={exchanges}"));
    }
    outcome
}

/// For every `β ≤_κ α`: the witness of the BFS chain has weight `β`, and
/// descending from it replays to `β` again.
pub fn check_witness(alpha: &Composition) -> CaseOutcome {
    let padded = grid_padded(alpha);
    let reach = Reachable::from_root(&padded);
    let mut failure = None;
    for beta in reach.vectors() {
        let chain = reach.chain_to(beta).expect("reachable");
        let f = match witness_filling(&padded, &chain) {
            Ok(f) => f,
            Err(e) => {
                failure = Some(format!("witness for {beta:?}: {e}"));
                break;
            }
        };
        if !f.is_valid() || weight(&f) != *beta {
            failure = Some(format!("witness for {beta:?} has weight {:?}", weight(&f)));
            break;
        }
        match descend_to_alpha(&f).and_then(|c| c.replay().map(|end| (c.start, end))) {
            Ok((start, end)) if start == padded && end == *beta => {}
            Ok((start, end)) => {
                failure = Some(format!("descent from {beta:?} replays {start:?} -> {end:?}"));
                break;
            }
            Err(e) => {
                failure = Some(format!("descent from {beta:?}: {e}"));
                break;
            }
        }
    }
    CaseOutcome::property(alpha.to_string(), "witness_round_trip", failure)
}

/// Random diagrams with `1 <= n <= n_max`, each box present with
/// probability one half. Deterministic for a given seed.
pub fn random_diagrams(count: usize, n_max: usize, seed: u64) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=n_max.max(1));
            let columns = (0..n)
                .map(|_| (1..=n as u32).filter(|_| rng.random_bool(0.5)).collect())
                .collect();
            Diagram::new(n, columns).expect("rows within the grid")
        })
        .collect()
}

fn run_cases<T: Sync>(items: &[T], check: impl Fn(&T) -> CaseOutcome + Sync + Send) -> Vec<CaseOutcome> {
    items.par_iter().map(check).collect()
}

/// Equal-size partition pairs with at most `n_max` parts and size at most
/// `size_max`, each padded to length `n` for `n` in `1..=n_max`.
pub fn partition_pairs(n_max: usize, size_max: u32) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for size in 0..=size_max {
            let parts = partitions(size, n);
            for mu in &parts {
                for lambda in &parts {
                    out.push((mu.clone(), lambda.clone()));
                }
            }
        }
    }
    out
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let family: Vec<Composition> = Composition::family(opts.n_max, opts.part_max).collect();
    let small: Vec<Composition> = Composition::family(opts.n_max.min(3), opts.part_max.min(3)).collect();
    let outcomes = match suite {
        Suite::Kk => run_cases(&family, check_kk),
        Suite::Ccc => run_cases(&family, check_ccc),
        Suite::Lattice => run_cases(&family, |a| check_lattice(a, true)),
        Suite::Aa => {
            let mut diagrams = vec![("figure-1".to_string(), fixtures::fig1_diagram())];
            for (k, d) in random_diagrams(opts.random_diagrams, opts.n_max.min(4), opts.seed).into_iter().enumerate() {
                diagrams.push((format!("random-{k}:{}", serde_json::to_string(&d).unwrap_or_default()), d));
            }
            run_cases(&diagrams, |(label, d)| check_aa(label.clone(), d))
        }
        Suite::Rado => {
            let increasing: Vec<_> = family.iter().filter(|a| a.is_weakly_increasing()).cloned().collect();
            let mut outcomes = run_cases(&increasing, check_rado_increasing);
            let pairs = partition_pairs(opts.n_max.min(4), 10);
            outcomes.extend(run_cases(&pairs, |(mu, lambda)| check_rado_inclusion(mu, lambda)));
            outcomes
        }
        Suite::Bruhat => {
            let mut perms: Vec<Permutation> = (1..=opts.n_max.min(4)).flat_map(Permutation::all).collect();
            if opts.slow {
                perms.extend(Permutation::all(5));
            }
            run_cases(&perms, check_bruhat)
        }
        Suite::Lemma => run_cases(&small, check_lemma),
        Suite::Witness => run_cases(&small, check_witness),
    };
    let failures = outcomes.iter().filter(|o| !o.equal).count();
    SuiteReport {
        suite,
        pass: failures == 0,
        cases: outcomes.len(),
        failures,
        elapsed_ms: if opts.timing { start.elapsed().as_millis() as u64 } else { 0 },
        outcomes,
    }
}

pub fn verify(opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let mut suites: Vec<Suite> = opts.suites.clone();
    suites.sort();
    suites.dedup();
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, opts)).collect();
    VerificationReport {
        family: Family { n_max: opts.n_max, part_max: opts.part_max },
        pass: reports.iter().all(|r| r.pass),
        elapsed_ms: if opts.timing { start.elapsed().as_millis() as u64 } else { 0 },
        suites: reports,
    }
}
