//! Weight lattices of the classical groups B_n, C_n, D_n in epsilon
//! coordinates. Entries may be half-integers, so every weight stores twice
//! its value and all arithmetic stays in integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::diagrams::Partition;
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Simple group of type B, C or D with its rank.
///
/// Ranks B_1, C_1 and D_2 are degenerate as ambient symmetry groups but occur
/// as structure groups of subbundles, so they are permitted here; ambient
/// assumptions are enforced where spaces are constructed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct GroupType {
    pub family: Family,
    pub rank: usize,
}

impl GroupType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let min = match family {
            Family::B | Family::C => 1,
            Family::D => 2,
        };
        if rank < min {
            return Err(Error::BadRank { family, rank });
        }
        Ok(GroupType { family, rank })
    }

    /// Half the sum of the positive roots, twice its value per entry:
    /// (n - eps, ..., 1 - eps) with eps = 0, 1/2, 1 for C, B, D.
    pub fn rho_twice(&self) -> Vec<i64> {
        let n = self.rank as i64;
        let eps2 = match self.family {
            Family::C => 0,
            Family::B => 1,
            Family::D => 2,
        };
        (1..=n).rev().map(|i| 2 * i - eps2).collect()
    }

    /// Underlying vector space dimension: 2n+1, 2n, 2n.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for GroupType {
    type Err = Error;
    /// Accepts "C4", "B5", "D6".
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam: Family = chars
            .next()
            .ok_or_else(|| Error::Parse("empty group".into()))?
            .to_string()
            .parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad group {s:?}")))?;
        GroupType::new(fam, rank)
    }
}

fn format_entries(twice: &[i64]) -> String {
    let body = twice
        .iter()
        .map(|&t| {
            if t % 2 == 0 {
                (t / 2).to_string()
            } else {
                format!("{t}/2")
            }
        })
        .collect::<Vec<_>>()
        .join(",");
    format!("[{body}]")
}

fn parse_entries(s: &str) -> Result<Vec<i64>, Error> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    let mut out = Vec::new();
    if inner.is_empty() {
        return Ok(out);
    }
    for tok in inner.split(',') {
        let tok = tok.trim();
        let twice = if let Some(num) = tok.strip_suffix("/2") {
            num.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad weight entry {tok:?}")))?
        } else {
            2 * tok
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad weight entry {tok:?}")))?
        };
        out.push(twice);
    }
    Ok(out)
}

/// Arbitrary point of the weight space in epsilon coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AmbientWeight {
    twice: Vec<i64>,
}

impl AmbientWeight {
    pub fn from_twice(twice: Vec<i64>) -> Self {
        AmbientWeight { twice }
    }

    pub fn from_ints(vals: &[i64]) -> Self {
        AmbientWeight {
            twice: vals.iter().map(|v| 2 * v).collect(),
        }
    }

    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    pub fn len(&self) -> usize {
        self.twice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twice.is_empty()
    }

    pub fn add(&self, other: &AmbientWeight) -> AmbientWeight {
        assert_eq!(self.len(), other.len());
        AmbientWeight {
            twice: self.twice.iter().zip(&other.twice).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &AmbientWeight) -> AmbientWeight {
        assert_eq!(self.len(), other.len());
        AmbientWeight {
            twice: self.twice.iter().zip(&other.twice).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for AmbientWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_entries(&self.twice))
    }
}

impl fmt::Debug for AmbientWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for AmbientWeight {
    type Err = Error;
    /// Accepts "[5/2,3/2,1/2]" and "[2,1,0]".
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(AmbientWeight { twice: parse_entries(s)? })
    }
}

/// Dominant weight of a specific group, length equal to the rank. In type D
/// the last entry may be negative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantWeight {
    twice: Vec<i64>,
}

impl DominantWeight {
    pub fn new(twice: Vec<i64>, g: GroupType) -> Result<Self, Error> {
        let w = AmbientWeight { twice };
        if !is_dominant(&w, g) {
            return Err(Error::NotDominant(format!("{w} for {g}")));
        }
        if !in_weight_lattice(&w, g) {
            return Err(Error::NotInLattice(format!("{w} for {g}")));
        }
        Ok(DominantWeight { twice: w.twice })
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight { twice: vec![0; rank] }
    }

    pub fn from_ints(vals: &[i64], g: GroupType) -> Result<Self, Error> {
        DominantWeight::new(vals.iter().map(|v| 2 * v).collect(), g)
    }

    /// Pads a partition with zeros up to the rank.
    pub fn from_partition(lam: &Partition, g: GroupType) -> Result<Self, Error> {
        if lam.height() > g.rank {
            return Err(Error::HeightViolation {
                height: lam.height(),
                cap: g.rank,
            });
        }
        let mut twice = vec![0i64; g.rank];
        for (i, &p) in lam.parts().iter().enumerate() {
            twice[i] = 2 * p as i64;
        }
        Ok(DominantWeight { twice })
    }

    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    pub fn rank(&self) -> usize {
        self.twice.len()
    }

    pub fn ambient(&self) -> AmbientWeight {
        AmbientWeight { twice: self.twice.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|&t| t == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.twice.iter().all(|&t| t % 2 == 0)
    }

    /// First entry (the dominant width); 0 for the zero weight.
    pub fn first_twice(&self) -> i64 {
        self.twice.first().copied().unwrap_or(0)
    }

    /// Number of nonzero entries when the weight is a partition.
    pub fn height(&self) -> usize {
        self.twice.iter().filter(|&&t| t != 0).count()
    }

    /// Integral dominant weight with nonnegative entries as a partition.
    pub fn to_partition(&self) -> Result<Partition, Error> {
        if !self.is_integral() || self.twice.iter().any(|&t| t < 0) {
            return Err(Error::NotIntegral(format!("{self}")));
        }
        Partition::new(self.twice.iter().map(|&t| (t / 2) as usize).collect())
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_entries(&self.twice))
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formal nonnegative combination of irreducibles, keyed by highest weight.
/// Serializes as a sequence of (weight, multiplicity) pairs so that JSON
/// output never needs non-string map keys.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct IrrepMultiset {
    terms: BTreeMap<DominantWeight, u64>,
}

impl Serialize for IrrepMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter())
    }
}

impl<'de> Deserialize<'de> for IrrepMultiset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(DominantWeight, u64)>::deserialize(d)?;
        Ok(pairs.into_iter().collect())
    }
}

impl IrrepMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: DominantWeight, mult: u64) {
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, w: &DominantWeight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DominantWeight, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn merge(&mut self, other: &IrrepMultiset) {
        for (w, m) in other.iter() {
            self.add(w.clone(), m);
        }
    }

    /// Total dimension under the given group.
    pub fn dimension(&self, g: GroupType) -> Result<u128, Error> {
        let mut sum: u128 = 0;
        for (w, m) in self.iter() {
            sum += weyl_dim(w, g)? * m as u128;
        }
        Ok(sum)
    }
}

impl FromIterator<(DominantWeight, u64)> for IrrepMultiset {
    fn from_iter<T: IntoIterator<Item = (DominantWeight, u64)>>(iter: T) -> Self {
        let mut s = IrrepMultiset::new();
        for (w, m) in iter {
            s.add(w, m);
        }
        s
    }
}

pub fn is_dominant(w: &AmbientWeight, g: GroupType) -> bool {
    if w.len() != g.rank {
        return false;
    }
    let t = &w.twice;
    let n = g.rank;
    let head = match g.family {
        Family::B | Family::C => n,
        Family::D => n - 1,
    };
    for i in 1..head {
        if t[i - 1] < t[i] {
            return false;
        }
    }
    match g.family {
        Family::B | Family::C => t[n - 1] >= 0,
        Family::D => t[n - 2] >= t[n - 1].abs(),
    }
}

fn in_weight_lattice(w: &AmbientWeight, g: GroupType) -> bool {
    match g.family {
        // Type C weights are integral; B and D also allow all-half-integral.
        Family::C => w.twice.iter().all(|t| t % 2 == 0),
        Family::B | Family::D => {
            w.twice.iter().all(|t| t % 2 == 0) || w.twice.iter().all(|t| t % 2 != 0)
        }
    }
}

/// A weight is singular when some Weyl reflection fixes it: two entries share
/// an absolute value, or (types B, C) an entry vanishes.
pub fn is_singular(w: &AmbientWeight, g: GroupType) -> bool {
    assert_eq!(w.len(), g.rank);
    let mut abs: Vec<i64> = w.twice.iter().map(|t| t.abs()).collect();
    match g.family {
        Family::B | Family::C => {
            if abs.contains(&0) {
                return true;
            }
        }
        Family::D => {}
    }
    abs.sort_unstable();
    abs.windows(2).any(|p| p[0] == p[1])
}

/// Result of moving a weight to the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dominantized {
    Singular,
    Chamber {
        /// Weyl length of the unique element carrying the input to the chamber.
        length: usize,
        weight: AmbientWeight,
    },
}

/// Applies simple reflections greedily until the weight is dominant, counting
/// the steps. For a nonsingular weight the step count is the Weyl length of
/// the reducing element and per-step it equals the number of positive roots
/// pairing negatively with the input.
pub fn dominantize(w: &AmbientWeight, g: GroupType) -> Dominantized {
    assert_eq!(w.len(), g.rank);
    if is_singular(w, g) {
        return Dominantized::Singular;
    }
    let mut t = w.twice.clone();
    let n = g.rank;
    let mut length = 0usize;
    loop {
        let mut acted = false;
        for i in 0..n - 1 {
            if t[i] < t[i + 1] {
                t.swap(i, i + 1);
                length += 1;
                acted = true;
            }
        }
        match g.family {
            Family::B | Family::C => {
                if t[n - 1] < 0 {
                    t[n - 1] = -t[n - 1];
                    length += 1;
                    acted = true;
                }
            }
            Family::D => {
                if t[n - 2] + t[n - 1] < 0 {
                    let (a, b) = (t[n - 2], t[n - 1]);
                    t[n - 2] = -b;
                    t[n - 1] = -a;
                    length += 1;
                    acted = true;
                }
            }
        }
        if !acted {
            break;
        }
    }
    let chamber = AmbientWeight { twice: t };
    debug_assert!(is_dominant(&chamber, g));
    debug_assert_eq!(length, negative_root_count(w, g));
    Dominantized::Chamber { length, weight: chamber }
}

/// Number of positive roots with negative pairing against w.
pub fn negative_root_count(w: &AmbientWeight, g: GroupType) -> usize {
    let t = &w.twice;
    let n = g.rank;
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if t[i] < t[j] {
                count += 1;
            }
            if t[i] + t[j] < 0 {
                count += 1;
            }
        }
        if matches!(g.family, Family::B | Family::C) && t[i] < 0 {
            count += 1;
        }
    }
    count
}

/// Dimension of the irreducible representation with the given highest weight.
pub fn weyl_dim(w: &DominantWeight, g: GroupType) -> Result<u128, Error> {
    assert_eq!(w.rank(), g.rank);
    let rho = g.rho_twice();
    let gam: Vec<i64> = w.twice.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let n = g.rank;
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(gam[i] * gam[i] - gam[j] * gam[j]);
            den *= BigInt::from(rho[i] * rho[i] - rho[j] * rho[j]);
        }
        if matches!(g.family, Family::B | Family::C) {
            num *= BigInt::from(gam[i]);
            den *= BigInt::from(rho[i]);
        }
    }
    let (q, r) = num_integer_div_rem(&num, &den);
    debug_assert!(r == BigInt::from(0), "Weyl dimension must divide exactly");
    q.abs()
        .to_u128()
        .ok_or_else(|| Error::Overflow(format!("dimension of {w} for {g}")))
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// Coefficients over the fundamental weights. Lattice membership makes every
/// coefficient an integer even when the epsilon-coordinates are half-integral.
pub fn fundamental_coords(w: &DominantWeight, g: GroupType) -> Result<Vec<i64>, Error> {
    assert_eq!(w.rank(), g.rank);
    let t = &w.twice;
    let n = g.rank;
    let mut c = vec![0i64; n];
    let half_diff = |a: i64, b: i64| {
        debug_assert_eq!((a - b) % 2, 0);
        (a - b) / 2
    };
    match g.family {
        Family::C => {
            for i in 0..n - 1 {
                c[i] = half_diff(t[i], t[i + 1]);
            }
            c[n - 1] = t[n - 1] / 2;
        }
        Family::B => {
            for i in 0..n - 1 {
                c[i] = half_diff(t[i], t[i + 1]);
            }
            c[n - 1] = t[n - 1];
        }
        Family::D => {
            for i in 0..n.saturating_sub(2) {
                c[i] = half_diff(t[i], t[i + 1]);
            }
            c[n - 2] = half_diff(t[n - 2], t[n - 1]);
            c[n - 1] = half_diff(t[n - 2], -t[n - 1]);
        }
    }
    Ok(c)
}

/// Inverse of `fundamental_coords`.
pub fn from_fundamental(coords: &[i64], g: GroupType) -> Result<DominantWeight, Error> {
    if coords.len() != g.rank {
        return Err(Error::Parse(format!(
            "expected {} fundamental coefficients, got {}",
            g.rank,
            coords.len()
        )));
    }
    if coords.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(format!("fundamental coefficients {coords:?}")));
    }
    let n = g.rank;
    let mut twice = vec![0i64; n];
    match g.family {
        Family::C => {
            let mut acc = 0;
            for i in (0..n).rev() {
                acc += coords[i];
                twice[i] = 2 * acc;
            }
        }
        Family::B => {
            twice[n - 1] = coords[n - 1];
            for i in (0..n - 1).rev() {
                twice[i] = twice[i + 1] + 2 * coords[i];
            }
        }
        Family::D => {
            twice[n - 1] = coords[n - 1] - coords[n - 2];
            twice[n - 2] = coords[n - 1] + coords[n - 2];
            for i in (0..n.saturating_sub(2)).rev() {
                twice[i] = twice[i + 1] + 2 * coords[i];
            }
        }
    }
    DominantWeight::new(twice, g)
}

/// Renders fundamental coefficients as "2*w1+w4", or "0".
pub fn fundamental_string(coords: &[i64]) -> String {
    let mut pieces = Vec::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 1 {
            pieces.push(format!("w{}", i + 1));
        } else if c != 0 {
            pieces.push(format!("{}*w{}", c, i + 1));
        }
    }
    if pieces.is_empty() {
        "0".into()
    } else {
        pieces.join("+")
    }
}

/// The weight (1,...,1,0,...,0) with i leading ones.
pub fn omega_tilde(i: usize, g: GroupType) -> DominantWeight {
    assert!(i <= g.rank);
    let mut twice = vec![0i64; g.rank];
    for t in twice.iter_mut().take(i) {
        *t = 2;
    }
    DominantWeight { twice }
}

/// Placement of an isotropic Grassmannian in the special/nonspecial taxonomy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Special(Vec<SpecialAttr>),
    Curious,
    Nonspecial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialAttr {
    Minuscule,
    Cominuscule,
    Adjoint,
    Coadjoint,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Special(attrs) => {
                let names: Vec<&str> = attrs
                    .iter()
                    .map(|a| match a {
                        SpecialAttr::Minuscule => "minuscule",
                        SpecialAttr::Cominuscule => "cominuscule",
                        SpecialAttr::Adjoint => "adjoint",
                        SpecialAttr::Coadjoint => "coadjoint",
                    })
                    .collect();
                write!(f, "special ({})", names.join(", "))
            }
            Classification::Curious => write!(f, "curious"),
            Classification::Nonspecial => write!(f, "nonspecial"),
        }
    }
}

/// Display name of the Grassmannian of isotropic k-planes for (family, k, n).
pub fn space_name(family: Family, k: usize, n: usize) -> String {
    match family {
        Family::B => format!("OGr({},{})", k, 2 * n + 1),
        Family::C => format!("IGr({},{})", k, 2 * n),
        Family::D => {
            if k >= n - 1 {
                format!("OGr+({},{})", n, 2 * n)
            } else {
                format!("OGr({},{})", k, 2 * n)
            }
        }
    }
}

/// Classifies the Grassmannian of isotropic k-planes by (family, k, n).
pub fn classify_grassmannian(family: Family, k: usize, n: usize) -> Result<Classification, Error> {
    let min_rank = match family {
        Family::B | Family::C => 2,
        Family::D => 3,
    };
    if n < min_rank {
        return Err(Error::BadRank { family, rank: n });
    }
    if k < 1 || k > n {
        return Err(Error::BadIsotropicK { k, n });
    }
    let mut attrs = Vec::new();
    match family {
        Family::B => {
            if k == n {
                attrs.push(SpecialAttr::Minuscule);
            }
            if k == 1 {
                attrs.push(SpecialAttr::Cominuscule);
                attrs.push(SpecialAttr::Coadjoint);
            }
            if k == 2 {
                attrs.push(SpecialAttr::Adjoint);
            }
        }
        Family::C => {
            if k == 1 {
                attrs.push(SpecialAttr::Minuscule);
                attrs.push(SpecialAttr::Adjoint);
            }
            if k == n {
                attrs.push(SpecialAttr::Cominuscule);
            }
            if k == 2 && k < n {
                attrs.push(SpecialAttr::Coadjoint);
            }
        }
        Family::D => {
            if k == 1 || k >= n - 1 {
                attrs.push(SpecialAttr::Minuscule);
                attrs.push(SpecialAttr::Cominuscule);
            }
            if k == 2 && n >= 4 {
                attrs.push(SpecialAttr::Adjoint);
                attrs.push(SpecialAttr::Coadjoint);
            }
        }
    }
    if !attrs.is_empty() {
        return Ok(Classification::Special(attrs));
    }
    if family == Family::B && k == n - 1 && n >= 4 {
        return Ok(Classification::Curious);
    }
    Ok(Classification::Nonspecial)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(family: Family, rank: usize) -> GroupType {
        GroupType::new(family, rank).unwrap()
    }

    fn aw(vals: &[i64]) -> AmbientWeight {
        AmbientWeight::from_ints(vals)
    }

    #[test]
    fn rho_values() {
        assert_eq!(g(Family::C, 4).rho_twice(), vec![8, 6, 4, 2]);
        assert_eq!(g(Family::B, 5).rho_twice(), vec![9, 7, 5, 3, 1]);
        assert_eq!(g(Family::D, 6).rho_twice(), vec![10, 8, 6, 4, 2, 0]);
    }

    #[test]
    fn singularity_rules() {
        assert!(is_singular(&aw(&[5, 3, 2, 2]), g(Family::C, 4)));
        assert!(is_singular(&aw(&[3, 2, 0]), g(Family::C, 3)));
        assert!(!is_singular(&aw(&[3, 2, 0]), g(Family::D, 3)));
        assert!(is_singular(&aw(&[3, -2, 2]), g(Family::D, 3)));
        assert!(is_singular(&aw(&[3, 0, 0]), g(Family::D, 3)));
        assert!(!is_singular(&aw(&[5, 3, 1]), g(Family::B, 3)));
    }

    #[test]
    fn dominance_rules() {
        assert!(is_dominant(&aw(&[3, 2, 2, 0]), g(Family::C, 4)));
        assert!(!is_dominant(&aw(&[3, 2, -1]), g(Family::B, 3)));
        assert!(is_dominant(&aw(&[3, 2, -1]), g(Family::D, 3)));
        assert!(!is_dominant(&aw(&[3, 1, -2]), g(Family::D, 3)));
    }

    #[test]
    fn dominantize_sorts_with_length() {
        // One exchange: length 1.
        let d = dominantize(&aw(&[5, 4, 2, 3]), g(Family::C, 4));
        assert_eq!(
            d,
            Dominantized::Chamber {
                length: 1,
                weight: aw(&[5, 4, 3, 2])
            }
        );
        // Singular input.
        assert_eq!(dominantize(&aw(&[5, 3, 2, 2]), g(Family::C, 4)), Dominantized::Singular);
        // Sign flip costs length in B/C.
        let d = dominantize(&aw(&[5, 3, -1]), g(Family::C, 3));
        match d {
            Dominantized::Chamber { length, weight } => {
                assert_eq!(weight, aw(&[5, 3, 1]));
                assert_eq!(length, 1);
            }
            _ => panic!("nonsingular"),
        }
        // Type D flips signs in pairs; a lone negative smallest entry stays.
        let d = dominantize(&aw(&[1, -3, 2]), g(Family::D, 3));
        match d {
            Dominantized::Chamber { length, weight } => {
                assert_eq!(weight, aw(&[3, 2, -1]));
                assert_eq!(length, 4);
            }
            _ => panic!("nonsingular"),
        }
    }

    #[test]
    fn dominantize_agrees_with_root_count() {
        // The debug assertion inside dominantize re-checks this; exercise a grid.
        let groups = [g(Family::B, 3), g(Family::C, 3), g(Family::D, 3)];
        for gg in groups {
            for a in -3i64..=3 {
                for b in -3i64..=3 {
                    for c in -3i64..=3 {
                        let w = aw(&[a, b, c]);
                        if !is_singular(&w, gg) {
                            dominantize(&w, gg);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_dims_match_known_representations() {
        // Defining representations.
        let v = |fam, n, w: &[i64]| {
            weyl_dim(&DominantWeight::from_ints(w, g(fam, n)).unwrap(), g(fam, n)).unwrap()
        };
        assert_eq!(v(Family::C, 4, &[1, 0, 0, 0]), 8);
        assert_eq!(v(Family::B, 5, &[1, 0, 0, 0, 0]), 11);
        assert_eq!(v(Family::D, 6, &[1, 0, 0, 0, 0, 0]), 12);
        // Adjoint representations: sp(8) = 36, so(11) = 55, so(12) = 66.
        assert_eq!(v(Family::C, 4, &[2, 0, 0, 0]), 36);
        assert_eq!(v(Family::B, 5, &[1, 1, 0, 0, 0]), 55);
        assert_eq!(v(Family::D, 6, &[1, 1, 0, 0, 0, 0]), 66);
        // Small SO(5) modules used elsewhere in the tests.
        assert_eq!(v(Family::B, 2, &[2, 2]), 35);
        assert_eq!(v(Family::B, 2, &[2, 0]), 14);
        // Type D conjugate pair has equal dimensions.
        assert_eq!(v(Family::D, 3, &[1, 1, 1]), v(Family::D, 3, &[1, 1, -1]));
        // Spin representations.
        let spin5 = DominantWeight::new(vec![1, 1], g(Family::B, 2)).unwrap();
        assert_eq!(weyl_dim(&spin5, g(Family::B, 2)).unwrap(), 4);
        let zero = DominantWeight::zero(4);
        assert_eq!(weyl_dim(&zero, g(Family::C, 4)).unwrap(), 1);
    }

    #[test]
    fn fundamental_coordinate_round_trip() {
        let c4 = g(Family::C, 4);
        let w = DominantWeight::from_ints(&[1, 1, 1, 1], c4).unwrap();
        assert_eq!(fundamental_coords(&w, c4).unwrap(), vec![0, 0, 0, 1]);
        assert_eq!(fundamental_string(&[0, 0, 0, 1]), "w4");

        let c6 = g(Family::C, 6);
        let w = DominantWeight::from_ints(&[3, 1, 1, 1, 1, 1], c6).unwrap();
        assert_eq!(fundamental_coords(&w, c6).unwrap(), vec![2, 0, 0, 0, 0, 1]);

        let b5 = g(Family::B, 5);
        let w = DominantWeight::from_ints(&[2, 2, 2, 2, 2], b5).unwrap();
        assert_eq!(fundamental_coords(&w, b5).unwrap(), vec![0, 0, 0, 0, 4]);

        let d6 = g(Family::D, 6);
        let w = DominantWeight::from_ints(&[2, 2, 2, 2, 2, 0], d6).unwrap();
        assert_eq!(fundamental_coords(&w, d6).unwrap(), vec![0, 0, 0, 0, 2, 2]);

        for gg in [c4, b5, d6, g(Family::D, 3), g(Family::B, 2)] {
            for trial in 0..50u64 {
                let coords: Vec<i64> =
                    (0..gg.rank).map(|i| ((trial * 7 + i as u64 * 13) % 4) as i64).collect();
                let w = from_fundamental(&coords, gg).unwrap();
                assert_eq!(fundamental_coords(&w, gg).unwrap(), coords);
            }
        }
    }

    #[test]
    fn omega_tilde_values() {
        let d6 = g(Family::D, 6);
        let w = omega_tilde(5, d6);
        assert_eq!(w.twice(), &[2, 2, 2, 2, 2, 0]);
        assert_eq!(fundamental_coords(&w, d6).unwrap(), vec![0, 0, 0, 0, 1, 1]);
        let b5 = g(Family::B, 5);
        assert_eq!(fundamental_coords(&omega_tilde(5, b5), b5).unwrap(), vec![0, 0, 0, 0, 2]);
    }

    #[test]
    fn classification_table() {
        use Classification::*;
        use SpecialAttr::*;
        let c = |f, k, n| classify_grassmannian(f, k, n).unwrap();
        assert_eq!(c(Family::B, 4, 4), Special(vec![Minuscule]));
        assert_eq!(c(Family::B, 1, 4), Special(vec![Cominuscule, Coadjoint]));
        assert_eq!(c(Family::B, 2, 4), Special(vec![Adjoint]));
        assert_eq!(c(Family::B, 3, 4), Curious);
        assert_eq!(c(Family::B, 4, 5), Curious);
        assert_eq!(c(Family::B, 3, 5), Nonspecial);
        assert_eq!(c(Family::B, 2, 3), Special(vec![Adjoint]));

        assert_eq!(c(Family::C, 1, 4), Special(vec![Minuscule, Adjoint]));
        assert_eq!(c(Family::C, 4, 4), Special(vec![Cominuscule]));
        assert_eq!(c(Family::C, 2, 4), Special(vec![Coadjoint]));
        assert_eq!(c(Family::C, 3, 4), Nonspecial);
        assert_eq!(c(Family::C, 3, 5), Nonspecial);
        assert_eq!(c(Family::C, 2, 2), Special(vec![Cominuscule]));

        assert_eq!(c(Family::D, 1, 5), Special(vec![Minuscule, Cominuscule]));
        assert_eq!(c(Family::D, 4, 5), Special(vec![Minuscule, Cominuscule]));
        assert_eq!(c(Family::D, 5, 5), Special(vec![Minuscule, Cominuscule]));
        assert_eq!(c(Family::D, 2, 5), Special(vec![Adjoint, Coadjoint]));
        assert_eq!(c(Family::D, 2, 3), Special(vec![Minuscule, Cominuscule]));
        assert_eq!(c(Family::D, 3, 5), Nonspecial);
        assert_eq!(c(Family::D, 3, 6), Nonspecial);
        // Every (family, k, n) in range resolves to exactly one class.
        for n in 2..=8usize {
            for k in 1..=n {
                for f in [Family::B, Family::C, Family::D] {
                    if f == Family::D && n < 3 {
                        continue;
                    }
                    c(f, k, n);
                }
            }
        }
        assert!(classify_grassmannian(Family::C, 5, 4).is_err());
        assert!(classify_grassmannian(Family::D, 1, 2).is_err());
    }

    #[test]
    fn weight_parsing_and_display() {
        let w: AmbientWeight = "[5/2,3/2,1/2]".parse().unwrap();
        assert_eq!(w.twice(), &[5, 3, 1]);
        assert_eq!(w.to_string(), "[5/2,3/2,1/2]");
        let w: AmbientWeight = "[4,3,2,1]".parse().unwrap();
        assert_eq!(w.to_string(), "[4,3,2,1]");
        let w: AmbientWeight = "[2,1,-1]".parse().unwrap();
        assert_eq!(w.twice(), &[4, 2, -2]);
        assert!("[1/3]".parse::<AmbientWeight>().is_err());
        assert_eq!("C4".parse::<GroupType>().unwrap(), g(Family::C, 4));
        assert!("E8".parse::<GroupType>().is_err());
        assert!("D1".parse::<GroupType>().is_err());
    }

    #[test]
    fn dominant_weight_validation() {
        let d3 = g(Family::D, 3);
        assert!(DominantWeight::from_ints(&[2, 1, -1], d3).is_ok());
        assert!(DominantWeight::from_ints(&[1, 1, -2], d3).is_err());
        let c3 = g(Family::C, 3);
        assert!(DominantWeight::from_ints(&[2, 1, -1], c3).is_err());
        // Mixed integral and half-integral entries are rejected.
        assert!(DominantWeight::new(vec![3, 2], g(Family::B, 2)).is_err());
        assert!(DominantWeight::new(vec![3, 1], g(Family::B, 2)).is_ok());
        // Type C has no half-integral weights.
        assert!(DominantWeight::new(vec![3, 1], g(Family::C, 2)).is_err());
    }
}
