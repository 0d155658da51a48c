//! Lattice polytopes given by generators, exact membership, lattice points
//! and saturation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::polynomial::SparsePolynomial;
use crate::scalar::{Coefficient, LpScalar};
use crate::simplex::FeasibilityProblem;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&Composition> for RationalVector {
    fn from(c: &Composition) -> Self {
        RationalVector(c.parts().iter().map(|&p| BigRational::from_integer(BigInt::from(p))).collect())
    }
}

/// Convex hull of a nonempty finite set of lattice points in `Z_{≥0}^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    n: usize,
    generators: BTreeSet<Composition>,
}

impl VPolytope {
    pub fn new<I: IntoIterator<Item = Composition>>(n: usize, generators: I) -> Result<Self> {
        let generators: BTreeSet<_> = generators.into_iter().collect();
        if generators.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch { left: g.len(), right: n });
        }
        Ok(VPolytope { n, generators })
    }

    /// `Newton(f)`: hull of the exponent vectors.
    pub fn newton<C: Coefficient>(f: &SparsePolynomial<C>) -> Result<Self> {
        VPolytope::new(f.num_vars(), f.exponent_vectors())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &BTreeSet<Composition> {
        &self.generators
    }

    /// Membership test over an arbitrary ordered field.
    ///
    /// Solves `λ >= 0, Σ λ_s = 1, Σ λ_s s = p`.
    pub fn contains_point<F: LpScalar>(&self, p: &[F]) -> Result<bool> {
        if p.len() != self.n {
            return Err(Error::LengthMismatch { left: p.len(), right: self.n });
        }
        let as_scalar = |v: u32| F::from_u32(v).expect("coordinate fits the scalar type");
        let k = self.generators.len();
        let mut rows = Vec::with_capacity(self.n + 1);
        rows.push(vec![F::one(); k]);
        for coord in 0..self.n {
            rows.push(self.generators.iter().map(|g| as_scalar(g.parts()[coord])).collect());
        }
        let mut rhs = Vec::with_capacity(self.n + 1);
        rhs.push(F::one());
        rhs.extend(p.iter().cloned());
        Ok(FeasibilityProblem::new(k, rows, rhs).is_feasible())
    }

    /// Exact membership of a rational point.
    pub fn contains(&self, p: &RationalVector) -> Result<bool> {
        self.contains_point(&p.0)
    }

    pub fn contains_lattice_point(&self, p: &Composition) -> Result<bool> {
        if p.len() != self.n {
            return Err(Error::LengthMismatch { left: p.len(), right: self.n });
        }
        if self.generators.contains(p) {
            return Ok(true);
        }
        self.contains(&RationalVector::from(p))
    }

    /// Every lattice point of the hull.
    ///
    /// Candidates range over the coordinatewise bounding box of the
    /// generators, cut down to the common coordinate sum when all generators
    /// share one.
    pub fn lattice_points(&self) -> BTreeSet<Composition> {
        let lo: Vec<u32> = (0..self.n).map(|c| self.generators.iter().map(|g| g.parts()[c]).min().unwrap()).collect();
        let hi: Vec<u32> = (0..self.n).map(|c| self.generators.iter().map(|g| g.parts()[c]).max().unwrap()).collect();
        let sums: BTreeSet<u64> = self.generators.iter().map(Composition::size).collect();
        let target = (sums.len() == 1).then(|| *sums.iter().next().unwrap());
        let candidates = box_points(&lo, &hi, target);
        candidates
            .into_par_iter()
            .filter(|c| self.contains_lattice_point(c).expect("dimensions agree"))
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    }

    /// Generator-wise inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &VPolytope) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        for g in &self.generators {
            if !other.contains_lattice_point(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Points of the box `lo..=hi`, optionally restricted to coordinate sum
/// `target`, in lexicographic order.
fn box_points(lo: &[u32], hi: &[u32], target: Option<u64>) -> Vec<Composition> {
    fn rec(lo: &[u32], hi: &[u32], target: Option<u64>, prefix: &mut Vec<u32>, sum: u64, out: &mut Vec<Composition>) {
        let k = prefix.len();
        if k == lo.len() {
            if target.is_none_or(|t| t == sum) {
                out.push(Composition::new(prefix.clone()));
            }
            return;
        }
        let rest_lo: u64 = lo[k + 1..].iter().map(|&v| u64::from(v)).sum();
        let rest_hi: u64 = hi[k + 1..].iter().map(|&v| u64::from(v)).sum();
        for v in lo[k]..=hi[k] {
            let s = sum + u64::from(v);
            if let Some(t) = target {
                if s + rest_lo > t || s + rest_hi < t {
                    continue;
                }
            }
            prefix.push(v);
            rec(lo, hi, target, prefix, s, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(lo, hi, target, &mut Vec::with_capacity(lo.len()), 0, &mut out);
    out
}

/// `P ⊆ Q` and `Q ⊆ P`, checked on generators.
pub fn polytope_equal(p: &VPolytope, q: &VPolytope) -> Result<bool> {
    Ok(p.is_subset_of(q)? && q.is_subset_of(p)?)
}

/// Whether every lattice point of `Newton(f)` is an exponent vector of `f`.
/// The zero polynomial counts as saturated.
pub fn snp_check<C: Coefficient>(f: &SparsePolynomial<C>) -> bool {
    match VPolytope::newton(f) {
        Ok(newton) => newton.lattice_points() == f.exponent_vectors(),
        Err(_) => true,
    }
}

/// Builds `BigRational` coordinates from numerator/denominator pairs.
pub fn rational_point(coords: &[(i64, i64)]) -> RationalVector {
    RationalVector(
        coords
            .iter()
            .map(|&(num, den)| {
                if den.is_one() {
                    BigRational::from_integer(num.into())
                } else {
                    assert!(!den.is_zero(), "zero denominator");
                    BigRational::new(num.into(), den.into())
                }
            })
            .collect(),
    )
}
