//! Restriction of GL-irreducibles to symplectic and orthogonal subgroups.
//!
//! The classical rule: the multiplicity of the subgroup irreducible labeled
//! beta inside the Schur functor of shape lam is the sum over c^lam_{beta,
//! delta} with delta running over diagrams with all rows even (orthogonal) or
//! all columns even (symplectic). The rule is only valid in the stable range
//! height(lam) <= rank; outside it the caller gets an error and must fall
//! back to `candidate_restrictions`, which bounds what can possibly appear.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::diagrams::Partition;
use crate::schur::{gl_dim, skew_lr_count};
use crate::weights::{weyl_dim, DominantWeight, Family, GroupType, IrrepMultiset};
use crate::Error;

/// Structure group of an even symplectic or an odd/even orthogonal space.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchTarget {
    Symplectic(usize),
    OrthogonalOdd(usize),
    OrthogonalEven(usize),
}

impl BranchTarget {
    pub fn rank(self) -> usize {
        match self {
            BranchTarget::Symplectic(m)
            | BranchTarget::OrthogonalOdd(m)
            | BranchTarget::OrthogonalEven(m) => m,
        }
    }

    pub fn group(self) -> Result<GroupType, Error> {
        match self {
            BranchTarget::Symplectic(m) => GroupType::new(Family::C, m),
            BranchTarget::OrthogonalOdd(m) => GroupType::new(Family::B, m),
            BranchTarget::OrthogonalEven(m) => GroupType::new(Family::D, m),
        }
    }

    /// Dimension of the defining representation.
    pub fn space_dim(self) -> usize {
        match self {
            BranchTarget::Symplectic(m) | BranchTarget::OrthogonalEven(m) => 2 * m,
            BranchTarget::OrthogonalOdd(m) => 2 * m + 1,
        }
    }

    fn deltas_have_even_rows(self) -> bool {
        !matches!(self, BranchTarget::Symplectic(_))
    }
}

impl fmt::Display for BranchTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchTarget::Symplectic(m) => write!(f, "sp{}", 2 * m),
            BranchTarget::OrthogonalOdd(m) => write!(f, "so{}", 2 * m + 1),
            BranchTarget::OrthogonalEven(m) => write!(f, "so{}", 2 * m),
        }
    }
}

impl FromStr for BranchTarget {
    type Err = Error;
    /// Accepts "sp6"/"so7"/"so8" (dimension of the defining space).
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::Parse(format!("unknown branch target {s:?}"));
        let t = if let Some(d) = s.strip_prefix("sp") {
            let d: usize = d.parse().map_err(|_| bad())?;
            if !d.is_multiple_of(2) || d == 0 {
                return Err(bad());
            }
            BranchTarget::Symplectic(d / 2)
        } else if let Some(d) = s.strip_prefix("so") {
            let d: usize = d.parse().map_err(|_| bad())?;
            if d.is_multiple_of(2) {
                BranchTarget::OrthogonalEven(d / 2)
            } else {
                BranchTarget::OrthogonalOdd(d / 2)
            }
        } else {
            return Err(bad());
        };
        t.group()?;
        Ok(t)
    }
}

/// Partitions contained row-wise in `caps`.
fn subpartitions(caps: &[usize]) -> Vec<Partition> {
    fn rec(i: usize, prev: usize, caps: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(acc.clone()).unwrap());
        if i >= caps.len() {
            return;
        }
        for v in 1..=caps[i].min(prev) {
            acc.push(v);
            rec(i + 1, v, caps, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(0, usize::MAX, caps, &mut acc, &mut out);
    out
}

fn deltas(lam: &Partition, even_rows: bool) -> Vec<Partition> {
    let caps: Vec<usize> = lam.parts().to_vec();
    subpartitions(&caps)
        .into_iter()
        .filter(|d| {
            if even_rows {
                d.has_even_rows()
            } else {
                d.has_even_columns()
            }
        })
        .collect()
}

fn cache() -> &'static Mutex<HashMap<(Partition, BranchTarget), IrrepMultiset>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, BranchTarget), IrrepMultiset>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Decomposes the Schur functor of shape `lam` of the defining representation
/// under the given structure group. Requires the stable range
/// height(lam) <= rank; every label in the output is bounded row-wise by lam
/// and lam itself appears with multiplicity exactly one.
pub fn restrict(lam: &Partition, target: BranchTarget) -> Result<IrrepMultiset, Error> {
    let m = target.rank();
    if lam.height() > m {
        return Err(Error::OutOfStableRange {
            height: lam.height(),
            rank: m,
        });
    }
    if let Some(hit) = cache().lock().unwrap().get(&(lam.clone(), target)) {
        return Ok(hit.clone());
    }
    let g = target.group()?;
    let mut partition_mults: HashMap<Partition, u64> = HashMap::new();
    for delta in deltas(lam, target.deltas_have_even_rows()) {
        let rest = lam.size() - delta.size();
        for beta in subpartitions(lam.parts()) {
            if beta.size() != rest {
                continue;
            }
            let c = skew_lr_count(lam, &delta, &beta);
            if c > 0 {
                *partition_mults.entry(beta).or_insert(0) += c;
            }
        }
    }
    let mut out = IrrepMultiset::new();
    for (beta, mult) in partition_mults {
        debug_assert!(lam.contains(&beta));
        debug_assert!(beta.height() <= m);
        let w = DominantWeight::from_partition(&beta, g)?;
        // An even-orthogonal label of full height stands for a conjugate pair.
        if matches!(target, BranchTarget::OrthogonalEven(_)) && beta.height() == m {
            let mut twice = w.twice().to_vec();
            twice[m - 1] = -twice[m - 1];
            out.add(DominantWeight::new(twice, g)?, mult);
        }
        out.add(w, mult);
    }
    debug_assert_eq!(out.mult(&DominantWeight::from_partition(lam, g)?), 1);
    debug_assert_eq!(
        out.dimension(g)?,
        gl_dim(lam, target.space_dim()),
        "restriction of {lam} to {target} must preserve dimension"
    );
    cache()
        .lock()
        .unwrap()
        .insert((lam.clone(), target), out.clone());
    Ok(out)
}

/// Sound superset of the labels that can appear when `lam` is restricted
/// outside the stable range, each with a multiplicity bound.
///
/// Every label appearing in the true decomposition is bounded row-wise by
/// lam. Central characters force the label size to match |lam| mod 2 for the
/// symplectic and even orthogonal groups (not for odd orthogonal ones, where
/// the defining space has odd dimension). Multiplicity is bounded by the
/// dimension quotient.
pub fn candidate_restrictions(
    lam: &Partition,
    target: BranchTarget,
) -> Result<Vec<(DominantWeight, u64)>, Error> {
    let m = target.rank();
    let g = target.group()?;
    let total_dim = gl_dim(lam, target.space_dim());
    let parity_matters = !matches!(target, BranchTarget::OrthogonalOdd(_));
    let caps: Vec<usize> = (1..=m).map(|i| lam.part(i)).collect();
    let mut out = Vec::new();
    for beta in subpartitions(&caps) {
        if parity_matters && !(lam.size() + beta.size()).is_multiple_of(2) {
            continue;
        }
        let w = DominantWeight::from_partition(&beta, g)?;
        let bound = total_dim / weyl_dim(&w, g)?;
        if bound == 0 {
            continue;
        }
        let bound = bound.min(u64::MAX as u128) as u64;
        if matches!(target, BranchTarget::OrthogonalEven(_)) && beta.height() == m {
            let mut twice = w.twice().to_vec();
            twice[m - 1] = -twice[m - 1];
            out.push((DominantWeight::new(twice, g)?, bound));
        }
        out.push((w, bound));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn w(vals: &[i64], g: GroupType) -> DominantWeight {
        DominantWeight::from_ints(vals, g).unwrap()
    }

    #[test]
    fn symplectic_small_cases() {
        let t = BranchTarget::Symplectic(2);
        let g = t.group().unwrap();
        let r = restrict(&p(&[1, 1]), t).unwrap();
        assert_eq!(r.mult(&w(&[1, 1], g)), 1);
        assert_eq!(r.mult(&w(&[0, 0], g)), 1);
        assert_eq!(r.len(), 2);

        let r = restrict(&p(&[2]), t).unwrap();
        assert_eq!(r.mult(&w(&[2, 0], g)), 1);
        assert_eq!(r.len(), 1);

        let r = restrict(&p(&[2, 1]), t).unwrap();
        assert_eq!(r.mult(&w(&[2, 1], g)), 1);
        assert_eq!(r.mult(&w(&[1, 0], g)), 1);
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn orthogonal_small_cases() {
        let t = BranchTarget::OrthogonalOdd(2);
        let g = t.group().unwrap();
        let r = restrict(&p(&[2]), t).unwrap();
        assert_eq!(r.mult(&w(&[2, 0], g)), 1);
        assert_eq!(r.mult(&w(&[0, 0], g)), 1);
        assert_eq!(r.len(), 2);

        let r = restrict(&p(&[2, 2]), t).unwrap();
        assert_eq!(r.mult(&w(&[2, 2], g)), 1);
        assert_eq!(r.mult(&w(&[2, 0], g)), 1);
        assert_eq!(r.mult(&w(&[0, 0], g)), 1);
        assert_eq!(r.len(), 3);

        let r = restrict(&p(&[3, 2]), t).unwrap();
        assert_eq!(r.mult(&w(&[3, 2], g)), 1);
        assert_eq!(r.mult(&w(&[3, 0], g)), 1);
        assert_eq!(r.mult(&w(&[2, 1], g)), 1);
        assert_eq!(r.mult(&w(&[1, 0], g)), 1);
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn even_orthogonal_splits_full_height_labels() {
        let t = BranchTarget::OrthogonalEven(2);
        let g = t.group().unwrap();
        let r = restrict(&p(&[1, 1]), t).unwrap();
        assert_eq!(r.mult(&w(&[1, 1], g)), 1);
        assert_eq!(r.mult(&w(&[1, -1], g)), 1);
        assert_eq!(r.len(), 2);
        // so(4) is 6-dimensional.
        assert_eq!(r.dimension(g).unwrap(), 6);

        let t3 = BranchTarget::OrthogonalEven(3);
        let g3 = t3.group().unwrap();
        let r = restrict(&p(&[2, 1]), t3).unwrap();
        assert_eq!(r.mult(&w(&[2, 1, 0], g3)), 1);
        assert_eq!(r.mult(&w(&[1, 0, 0], g3)), 1);
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn rank_one_targets() {
        let t = BranchTarget::Symplectic(1);
        let g = t.group().unwrap();
        let r = restrict(&p(&[3]), t).unwrap();
        assert_eq!(r.mult(&w(&[3], g)), 1);
        assert_eq!(r.len(), 1);
        assert!(restrict(&p(&[1, 1]), t).is_err());
        assert!(matches!(
            restrict(&p(&[1, 1]), t),
            Err(Error::OutOfStableRange { height: 2, rank: 1 })
        ));
    }

    #[test]
    fn restriction_preserves_dimension() {
        // The defining identity sum(mult * dim) = dim Schur(lam) is also a
        // debug assertion inside restrict; exercise a grid of cases.
        for m in 1..=3usize {
            let targets = [
                Some(BranchTarget::Symplectic(m)),
                Some(BranchTarget::OrthogonalOdd(m)),
                (m >= 2).then_some(BranchTarget::OrthogonalEven(m)),
            ];
            for t in targets.into_iter().flatten() {
                for size in 0..=6usize {
                    for lam in crate::diagrams::enumerate_partitions(size, m, size.max(1)) {
                        let r = restrict(&lam, t).unwrap();
                        assert_eq!(
                            r.dimension(t.group().unwrap()).unwrap(),
                            gl_dim(&lam, t.space_dim()),
                            "lam={lam} target={t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn candidates_cover_small_known_decompositions() {
        // Third exterior power of the 5-space: so(5)-content is the adjoint,
        // label (1,1), which violates naive size parity; odd orthogonal
        // candidates must not be parity-filtered.
        let t = BranchTarget::OrthogonalOdd(2);
        let g = t.group().unwrap();
        let cands = candidate_restrictions(&p(&[1, 1, 1]), t).unwrap();
        assert!(cands.iter().any(|(b, m)| b == &w(&[1, 1], g) && *m >= 1));

        // Second exterior power of the symplectic 2-space is trivial.
        let t = BranchTarget::Symplectic(1);
        let cands = candidate_restrictions(&p(&[1, 1]), t).unwrap();
        assert_eq!(cands, vec![(DominantWeight::zero(1), 1)]);
    }

    #[test]
    fn candidate_bounds_dominate_stable_range_answers() {
        for m in 1..=2usize {
            let targets = [
                Some(BranchTarget::Symplectic(m)),
                Some(BranchTarget::OrthogonalOdd(m)),
                (m >= 2).then_some(BranchTarget::OrthogonalEven(m)),
            ];
            for t in targets.into_iter().flatten() {
                for size in 0..=5usize {
                    for lam in crate::diagrams::enumerate_partitions(size, m, size.max(1)) {
                        let exact = restrict(&lam, t).unwrap();
                        let cands = candidate_restrictions(&lam, t).unwrap();
                        for (beta, mult) in exact.iter() {
                            let bound = cands
                                .iter()
                                .find(|(b, _)| b == beta)
                                .map(|(_, m)| *m)
                                .unwrap_or(0);
                            assert!(bound >= mult, "lam={lam} target={t} beta={beta}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn target_parsing() {
        assert_eq!("sp6".parse::<BranchTarget>().unwrap(), BranchTarget::Symplectic(3));
        assert_eq!("so7".parse::<BranchTarget>().unwrap(), BranchTarget::OrthogonalOdd(3));
        assert_eq!("so8".parse::<BranchTarget>().unwrap(), BranchTarget::OrthogonalEven(4));
        assert_eq!("sp6".parse::<BranchTarget>().unwrap().to_string(), "sp6");
        assert!("so2".parse::<BranchTarget>().is_err());
        assert!("sp5".parse::<BranchTarget>().is_err());
        assert!("gl3".parse::<BranchTarget>().is_err());
    }
}
