//! Cohomology of irreducible equivariant bundles on isotropic Grassmannians.
//!
//! A bundle is labeled by a partition alpha (the Schur functor applied to the
//! dual tautological subbundle) and a dominant integral weight beta of the
//! structure group of the symplectic/orthogonal subquotient. Cohomology is
//! computed by the usual dotted Weyl-group walk on rho + (alpha, beta): a
//! singular vector kills everything, otherwise exactly one degree survives.

use serde::{Deserialize, Serialize};

use crate::branching::BranchTarget;
use crate::diagrams::Partition;
use crate::weights::{
    classify_grassmannian, dominantize, is_singular, space_name, AmbientWeight, Classification,
    DominantWeight, Dominantized, Family, GroupType,
};
use crate::Error;

/// An isotropic Grassmannian accepted for cohomology computations.
///
/// Scope: 1 <= k <= n-2 in all three families, plus k = n-1 in type C where
/// the same subquotient picture still holds (flagged `extended`). Everything
/// else is refused with a classification-aware message.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GrassmannianSpace {
    family: Family,
    k: usize,
    n: usize,
    extended: bool,
}

impl GrassmannianSpace {
    pub fn new(family: Family, k: usize, n: usize) -> Result<Self, Error> {
        let cls = classify_grassmannian(family, k, n)?;
        let extended = family == Family::C && k + 1 == n;
        if k + 2 > n && !extended {
            let hint = match family {
                Family::C => "k <= n-1",
                _ => "k <= n-2",
            };
            return Err(Error::OutOfScope(format!(
                "{} is {}; cohomology routines here require {} so the subquotient \
                 carries a rank >= 2 structure group",
                space_name(family, k, n),
                cls,
                hint
            )));
        }
        Ok(GrassmannianSpace { family, k, n, extended })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True exactly for type C with k = n-1.
    pub fn extended(&self) -> bool {
        self.extended
    }

    pub fn ambient_group(&self) -> GroupType {
        GroupType::new(self.family, self.n).unwrap()
    }

    /// Rank of the symplectic/orthogonal factor of the Levi.
    pub fn levi_rank(&self) -> usize {
        self.n - self.k
    }

    pub fn levi_target(&self) -> BranchTarget {
        let m = self.levi_rank();
        match self.family {
            Family::B => BranchTarget::OrthogonalOdd(m),
            Family::C => BranchTarget::Symplectic(m),
            Family::D => BranchTarget::OrthogonalEven(m),
        }
    }

    pub fn levi_group(&self) -> GroupType {
        self.levi_target().group().unwrap()
    }

    /// Dimension of the subquotient (perpendicular mod tautological).
    pub fn subquotient_dim(&self) -> usize {
        self.levi_target().space_dim()
    }

    pub fn dim(&self) -> usize {
        let k = self.k;
        match self.family {
            // T = (subquotient tensor U^*) + Sym^2 U^*
            Family::C => k * self.subquotient_dim() + k * (k + 1) / 2,
            // T = (subquotient tensor U^*) + Alt^2 U^*
            Family::B | Family::D => k * self.subquotient_dim() + k * (k - 1) / 2,
        }
    }

    pub fn name(&self) -> String {
        space_name(self.family, self.k, self.n)
    }

    pub fn classification(&self) -> Classification {
        classify_grassmannian(self.family, self.k, self.n).unwrap()
    }
}

impl std::fmt::Display for GrassmannianSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Irreducible bundle Schur^alpha(U^*) tensor V^beta(subquotient).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct BundleSummand {
    alpha: Partition,
    beta: DominantWeight,
}

impl BundleSummand {
    pub fn new(space: &GrassmannianSpace, alpha: Partition, beta: DominantWeight) -> Result<Self, Error> {
        if alpha.height() > space.k {
            return Err(Error::HeightViolation { height: alpha.height(), cap: space.k });
        }
        if beta.rank() != space.levi_rank() {
            return Err(Error::Parse(format!(
                "beta has rank {}, expected {}",
                beta.rank(),
                space.levi_rank()
            )));
        }
        if !beta.is_integral() {
            return Err(Error::NotIntegral(format!(
                "spinor labels are not bundle weights here: {beta}"
            )));
        }
        Ok(BundleSummand { alpha, beta })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &DominantWeight {
        &self.beta
    }

    /// Ambient torus weight (alpha_1..alpha_k, beta_1..beta_m).
    pub fn ambient_weight(&self, space: &GrassmannianSpace) -> AmbientWeight {
        let mut twice = vec![0i64; space.n];
        for (i, t) in twice.iter_mut().enumerate().take(space.k) {
            *t = 2 * self.alpha.part(i + 1) as i64;
        }
        twice[space.k..space.n].copy_from_slice(self.beta.twice());
        AmbientWeight::from_twice(twice)
    }
}

impl std::fmt::Display for BundleSummand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}; {})", self.alpha, self.beta)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CohomResult {
    /// rho + weight is singular; all cohomology vanishes.
    Acyclic,
    /// Exactly one degree survives.
    Cohomology { degree: usize, weight: DominantWeight },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BbwOutcome {
    pub result: CohomResult,
    /// Propagated from the space (type C, k = n-1).
    pub extended: bool,
}

pub fn bbw_cohomology(space: &GrassmannianSpace, summand: &BundleSummand) -> BbwOutcome {
    let g = space.ambient_group();
    let rho = AmbientWeight::from_twice(g.rho_twice());
    let gamma = rho.add(&summand.ambient_weight(space));
    let result = if is_singular(&gamma, g) {
        CohomResult::Acyclic
    } else {
        match dominantize(&gamma, g) {
            Dominantized::Singular => unreachable!("nonsingular weights reach a chamber"),
            Dominantized::Chamber { length, weight } => {
                let twice: Vec<i64> = weight
                    .twice()
                    .iter()
                    .zip(g.rho_twice())
                    .map(|(c, r)| c - r)
                    .collect();
                let w = DominantWeight::new(twice, g)
                    .expect("strictly dominant chamber minus rho is dominant");
                debug_assert!(length <= space.dim());
                CohomResult::Cohomology { degree: length, weight: w }
            }
        }
    };
    BbwOutcome { result, extended: space.extended }
}

/// Partial-vanishing certificates that skip the reflection walk.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Vanishing {
    /// Every degree vanishes.
    AllDegrees,
    /// H^i = 0 for all i > 0.
    PositiveDegrees,
    /// H^i = 0 for 0 < i < bound.
    DegreesBelow(usize),
}

/// When height(alpha) + beta_1 <= k, the entry rho_{k+1} + beta_1 collides
/// with one of the untouched middle entries of gamma, so all cohomology dies
/// for beta != 0; for beta = 0 the weight is already dominant and only
/// sections survive.
pub fn small_weight_vanishing(space: &GrassmannianSpace, summand: &BundleSummand) -> Option<Vanishing> {
    let width = summand.beta.first_twice() / 2;
    debug_assert!(width >= 0);
    if summand.alpha.height() as i64 + width <= space.k as i64 {
        Some(if summand.beta.is_zero() {
            Vanishing::PositiveDegrees
        } else {
            Vanishing::AllDegrees
        })
    } else {
        None
    }
}

/// When height(alpha) <= j < k, any cohomology of the bundle sits in degree 0
/// or degree >= k - j, regardless of beta: the k - j trailing rho entries of
/// gamma are all inverted against the beta head or none are.
pub fn low_degree_vanishing(
    space: &GrassmannianSpace,
    summand: &BundleSummand,
    j: usize,
) -> Option<Vanishing> {
    if summand.alpha.height() <= j && j < space.k {
        Some(Vanishing::DegreesBelow(space.k - j))
    } else {
        None
    }
}
