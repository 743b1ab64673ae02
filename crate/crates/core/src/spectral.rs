//! Multiplicity bounds for the cohomology of exterior powers of the tangent
//! bundle, assembled from the equivariant filtration page.
//!
//! Lambda^j T is filtered with graded pieces
//! Lambda^{j-q}(subquotient tensor U^*) tensor Lambda^q(W), where W is
//! Sym^2 U^* in type C and Alt^2 U^* in types B and D. Expanding both factors
//! into Schur functors yields bundles handled by the dotted-walk computation;
//! the resulting table of irreducible multiplicities converges to
//! H^*(X, Lambda^j T), with every differential (on any page) moving content
//! between a cell (q, i) and cells (q', i-1) or (q', i+1) on the other side.
//! Everything is equivariant, so multiplicities of a fixed irreducible can
//! only cancel against matching content in those adjacent rows — that is the
//! certified lower bound. Upper bounds are the page content itself.
//!
//! When a subquotient factor falls outside the stable range of the
//! restriction rule, its contribution is tracked separately as `possible`
//! content: a sound superset with finite multiplicity bounds. Certified lower
//! bounds treat possible content as threats; upper bounds include it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::bbw::{bbw_cohomology, BundleSummand, CohomResult, GrassmannianSpace};
use crate::branching::{candidate_restrictions, restrict};
use crate::diagrams::{enumerate_partitions, Partition};
use crate::schur::{binomial, exterior_of_alt2, exterior_of_sym2, gl_dim};
use crate::weights::{Classification, DominantWeight, Family, IrrepMultiset};
use crate::Error;

/// One Schur-functor factor of a graded piece of Lambda^j T.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFactor {
    pub lam: Partition,
    /// GL(k)-side content: alpha with multiplicity, summed over admissible mu.
    pub gl: Vec<(Partition, u64)>,
    /// Exact subquotient decomposition, when lam is in the stable range.
    pub levi_known: Option<IrrepMultiset>,
    /// Bounded superset of the subquotient decomposition otherwise.
    pub levi_candidates: Option<Vec<(DominantWeight, u64)>>,
}

/// Schur expansion of Lambda^{j-q}(subquotient tensor U^*) tensor Lambda^q(W).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPiece {
    pub j: usize,
    pub q: usize,
    pub factors: Vec<GradedFactor>,
}

pub fn graded_piece(space: &GrassmannianSpace, j: usize, q: usize) -> Result<GradedPiece, Error> {
    assert!(q <= j);
    let k = space.k();
    let p = j - q;
    let mus: Vec<Partition> = match space.family() {
        Family::C => exterior_of_sym2(q),
        Family::B | Family::D => exterior_of_alt2(q),
    }
    .into_iter()
    .filter(|mu| mu.height() <= k)
    .collect();
    let mut factors = Vec::new();
    if mus.is_empty() {
        return Ok(GradedPiece { j, q, factors });
    }
    let target = space.levi_target();
    for lam in enumerate_partitions(p, space.subquotient_dim(), k) {
        let lam_t = lam.transpose();
        let mut gl: BTreeMap<Partition, u64> = BTreeMap::new();
        for mu in &mus {
            for (alpha, c) in crate::schur::lr_product(&lam_t, mu, k)?.iter() {
                *gl.entry(alpha.clone()).or_insert(0) += c;
            }
        }
        if gl.is_empty() {
            continue;
        }
        let (levi_known, levi_candidates) = if lam.height() <= space.levi_rank() {
            (Some(restrict(&lam, target)?), None)
        } else {
            (None, Some(candidate_restrictions(&lam, target)?))
        };
        factors.push(GradedFactor {
            lam,
            gl: gl.into_iter().collect(),
            levi_known,
            levi_candidates,
        });
    }
    Ok(GradedPiece { j, q, factors })
}

/// Consistency check on the expansion: summed over q, the graded pieces must
/// recover the full rank of Lambda^j T, which is C(dim X, j).
pub fn graded_rank_check(space: &GrassmannianSpace, j: usize) -> Result<bool, Error> {
    let k = space.k();
    let nsub = space.subquotient_dim();
    let mut total: u128 = 0;
    for q in 0..=j {
        for f in graded_piece(space, j, q)?.factors {
            let gl_rank: u128 = f
                .gl
                .iter()
                .map(|(alpha, c)| *c as u128 * gl_dim(alpha, k))
                .sum();
            total += gl_dim(&f.lam, nsub) * gl_rank;
        }
    }
    Ok(total == binomial(space.dim(), j))
}

/// Content of one (q, i) position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub q: usize,
    pub i: usize,
    /// Exact multiplicities from stable-range factors.
    pub known: IrrepMultiset,
    /// Bounded content from out-of-range factors.
    pub possible: IrrepMultiset,
}

/// An out-of-range factor, listed so callers can see why content is inexact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Taint {
    pub q: usize,
    pub lam: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E1Page {
    pub space: GrassmannianSpace,
    pub j: usize,
    /// Sorted by (q, i); positions with no content are omitted.
    pub cells: Vec<Cell>,
    pub taints: Vec<Taint>,
}

impl E1Page {
    pub fn cell(&self, q: usize, i: usize) -> Option<&Cell> {
        self.cells
            .binary_search_by_key(&(q, i), |c| (c.q, c.i))
            .ok()
            .map(|idx| &self.cells[idx])
    }

    /// Content in rows i-1 and i+1 that some differential could pair against
    /// a class of weight w sitting at (q, i).
    fn threats(&self, q: usize, i: usize, w: &DominantWeight) -> u64 {
        let mut t = 0;
        for c in &self.cells {
            if i > 0 && c.q > q && c.i == i - 1 {
                t += c.known.mult(w) + c.possible.mult(w);
            }
            if c.q < q && c.i == i + 1 {
                t += c.known.mult(w) + c.possible.mult(w);
            }
        }
        t
    }
}

fn build_page(space: &GrassmannianSpace, j: usize) -> Result<E1Page, Error> {
    let mut cells: BTreeMap<(usize, usize), (IrrepMultiset, IrrepMultiset)> = BTreeMap::new();
    let mut taints = Vec::new();
    for q in 0..=j {
        let piece = graded_piece(space, j, q)?;
        for f in piece.factors {
            if f.levi_known.is_none() {
                taints.push(Taint { q, lam: f.lam.clone() });
            }
            for (alpha, c_alpha) in &f.gl {
                let levi: Vec<(DominantWeight, u64, bool)> = match (&f.levi_known, &f.levi_candidates) {
                    (Some(ms), None) => ms.iter().map(|(b, m)| (b.clone(), m, true)).collect(),
                    (None, Some(cands)) => {
                        cands.iter().map(|(b, m)| (b.clone(), *m, false)).collect()
                    }
                    _ => unreachable!(),
                };
                for (beta, mult, exact) in levi {
                    let summand = BundleSummand::new(space, alpha.clone(), beta)?;
                    match bbw_cohomology(space, &summand).result {
                        CohomResult::Acyclic => {}
                        CohomResult::Cohomology { degree, weight } => {
                            let entry = cells.entry((q, degree)).or_default();
                            let slot = if exact { &mut entry.0 } else { &mut entry.1 };
                            slot.add(weight, c_alpha * mult);
                        }
                    }
                }
            }
        }
    }
    taints.sort();
    taints.dedup();
    Ok(E1Page {
        space: *space,
        j,
        cells: cells
            .into_iter()
            .map(|((q, i), (known, possible))| Cell { q, i, known, possible })
            .collect(),
        taints,
    })
}

fn page_memo() -> &'static Mutex<HashMap<(GrassmannianSpace, usize), E1Page>> {
    static MEMO: OnceLock<Mutex<HashMap<(GrassmannianSpace, usize), E1Page>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn disk_cache_path(space: &GrassmannianSpace, j: usize) -> Option<std::path::PathBuf> {
    let dir = std::env::var_os("ISOGR_CACHE_DIR")?;
    if dir.is_empty() {
        return None;
    }
    Some(std::path::PathBuf::from(dir).join(format!(
        "page_{}_n{}_k{}_j{}.json",
        space.family(),
        space.n(),
        space.k(),
        j
    )))
}

/// The multiplicity table for Lambda^j T, memoized in-process and, when
/// ISOGR_CACHE_DIR is set, on disk. Cache files that fail to parse or
/// describe a different computation are ignored and rewritten.
pub fn e1_page(space: &GrassmannianSpace, j: usize) -> Result<E1Page, Error> {
    if let Some(hit) = page_memo().lock().unwrap().get(&(*space, j)) {
        return Ok(hit.clone());
    }
    if let Some(path) = disk_cache_path(space, j) {
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(page) = serde_json::from_str::<E1Page>(&text) {
                if page.space == *space && page.j == j {
                    page_memo().lock().unwrap().insert((*space, j), page.clone());
                    return Ok(page);
                }
            }
        }
    }
    let page = build_page(space, j)?;
    if let Some(path) = disk_cache_path(space, j) {
        if let Some(parent) = path.parent() {
            let _ = std::fs::create_dir_all(parent);
        }
        if let Ok(text) = serde_json::to_string(&page) {
            let _ = std::fs::write(&path, text);
        }
    }
    page_memo().lock().unwrap().insert((*space, j), page.clone());
    Ok(page)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeStatus {
    /// Certified equals upper: the cohomology is computed exactly.
    Exact,
    /// No unresolved content lands in this degree, but differentials may
    /// cancel classes: the answer is between certified and upper.
    Bounded,
    /// Unresolved restrictions contribute directly to this degree.
    Undetermined,
}

/// Bounds for H^i(X, Lambda^j T) in one degree i.
///
/// Degrees absent from a report have empty page rows, which certifies that
/// the cohomology there vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBounds {
    pub i: usize,
    /// Multiplicities that survive no matter how differentials act and how
    /// unresolved content decomposes.
    pub certified: IrrepMultiset,
    /// The page content: nothing beyond this can appear.
    pub upper: IrrepMultiset,
    pub status: DegreeStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyBounds {
    pub space: GrassmannianSpace,
    pub j: usize,
    pub extended: bool,
    pub degrees: Vec<DegreeBounds>,
    pub taints: Vec<Taint>,
}

impl CohomologyBounds {
    pub fn degree(&self, i: usize) -> Option<&DegreeBounds> {
        self.degrees.iter().find(|d| d.i == i)
    }
}

pub fn bounds_from_page(page: &E1Page) -> CohomologyBounds {
    let rows: BTreeSet<usize> = page.cells.iter().map(|c| c.i).collect();
    let mut degrees = Vec::new();
    for i in rows {
        let mut certified = IrrepMultiset::new();
        let mut upper = IrrepMultiset::new();
        let mut row_has_possible = false;
        for cell in page.cells.iter().filter(|c| c.i == i) {
            upper.merge(&cell.known);
            upper.merge(&cell.possible);
            row_has_possible |= !cell.possible.is_empty();
            for (w, mult) in cell.known.iter() {
                let surviving = mult.saturating_sub(page.threats(cell.q, i, w));
                certified.add(w.clone(), surviving);
            }
        }
        let status = if row_has_possible {
            DegreeStatus::Undetermined
        } else if certified == upper {
            DegreeStatus::Exact
        } else {
            DegreeStatus::Bounded
        };
        degrees.push(DegreeBounds { i, certified, upper, status });
    }
    CohomologyBounds {
        space: page.space,
        j: page.j,
        extended: page.space.extended(),
        degrees,
        taints: page.taints.clone(),
    }
}

pub fn cohomology_bounds(space: &GrassmannianSpace, j: usize) -> Result<CohomologyBounds, Error> {
    Ok(bounds_from_page(&e1_page(space, j)?))
}

/// One Hochschild summand H^i(X, Lambda^j T) with i + j = l.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HochschildPart {
    pub i: usize,
    pub j: usize,
    pub bounds: DegreeBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HochschildBounds {
    pub space: GrassmannianSpace,
    pub l: usize,
    pub extended: bool,
    /// Parts with provably zero content are omitted.
    pub parts: Vec<HochschildPart>,
    pub certified: IrrepMultiset,
    pub upper: IrrepMultiset,
    pub status: DegreeStatus,
}

/// Degree-l Hochschild cohomology bounds via the sum of H^i(Lambda^j T)
/// over i + j = l.
pub fn hochschild(space: &GrassmannianSpace, l: usize) -> Result<HochschildBounds, Error> {
    let mut parts = Vec::new();
    let mut certified = IrrepMultiset::new();
    let mut upper = IrrepMultiset::new();
    let mut status = DegreeStatus::Exact;
    for j in 0..=l.min(space.dim()) {
        let i = l - j;
        if i > space.dim() {
            continue;
        }
        let bounds = cohomology_bounds(space, j)?;
        if let Some(d) = bounds.degree(i) {
            certified.merge(&d.certified);
            upper.merge(&d.upper);
            status = match (status, d.status) {
                (_, DegreeStatus::Undetermined) | (DegreeStatus::Undetermined, _) => {
                    DegreeStatus::Undetermined
                }
                (_, DegreeStatus::Bounded) | (DegreeStatus::Bounded, _) => DegreeStatus::Bounded,
                _ => DegreeStatus::Exact,
            };
            parts.push(HochschildPart { i, j, bounds: d.clone() });
        }
    }
    Ok(HochschildBounds {
        space: *space,
        l,
        extended: space.extended(),
        parts,
        certified,
        upper,
        status,
    })
}

/// A certified nonvanishing higher cohomology group of some Lambda^j T.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub l: usize,
    pub i: usize,
    pub j: usize,
    pub weight: DominantWeight,
    pub certified: u64,
}

/// A position where vanishing could not be certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnresolvedCell {
    pub l: usize,
    pub i: usize,
    pub j: usize,
    pub status: DegreeStatus,
    pub upper_total: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ScanVerdict {
    /// Some H^i(X, Lambda^j T) with i > 0 provably contains an irreducible.
    NotGlobal {
        primary: Witness,
        witnesses: Vec<Witness>,
        note: String,
    },
    /// No nonvanishing was certified through degree l_max; cells where
    /// vanishing was not certified either are listed.
    GlobalUpTo {
        l_max: usize,
        unresolved: Vec<UnresolvedCell>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub space: GrassmannianSpace,
    pub l_max: usize,
    pub verdict: ScanVerdict,
}

/// Scans all Hochschild degrees up to l_max for certified higher-cohomology
/// terms. Only nonspecial spaces are accepted: the special and curious
/// families are settled by structure theory, not by this bookkeeping.
pub fn globality_scan(space: &GrassmannianSpace, l_max: usize) -> Result<ScanReport, Error> {
    match space.classification() {
        Classification::Nonspecial => {}
        cls => {
            return Err(Error::OutOfScope(format!(
                "{} is {}; the globality scan applies to nonspecial spaces only",
                space.name(),
                cls
            )))
        }
    }
    let dim = space.dim();
    let mut witnesses = Vec::new();
    let mut unresolved = Vec::new();
    for l in 1..=l_max {
        for j in 0..=l.saturating_sub(1).min(dim) {
            let i = l - j;
            if i > dim {
                continue;
            }
            let bounds = cohomology_bounds(space, j)?;
            let Some(d) = bounds.degree(i) else { continue };
            let mut found = false;
            for (w, mult) in d.certified.iter() {
                if mult > 0 {
                    found = true;
                    witnesses.push(Witness {
                        l,
                        i,
                        j,
                        weight: w.clone(),
                        certified: mult,
                    });
                }
            }
            if !found && d.upper.total() > 0 {
                unresolved.push(UnresolvedCell {
                    l,
                    i,
                    j,
                    status: d.status,
                    upper_total: d.upper.total(),
                });
            }
        }
    }
    let verdict = if let Some(primary) = witnesses.first().cloned() {
        ScanVerdict::NotGlobal {
            primary,
            witnesses,
            note: "a certified H^i(X, Lambda^j T) != 0 with i > 0 also exhibits \
                   failure of Bott vanishing on this space"
                .to_string(),
        }
    } else {
        ScanVerdict::GlobalUpTo { l_max, unresolved }
    };
    Ok(ScanReport { space: *space, l_max, verdict })
}
