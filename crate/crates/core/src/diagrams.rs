//! Young diagrams: partitions, hook coordinates, balanced diagrams.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Partition with weakly decreasing positive parts; trailing zeros are normalized away.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single row of length t; empty when t = 0.
    pub fn row(t: usize) -> Self {
        if t == 0 {
            Partition::empty()
        } else {
            Partition(vec![t])
        }
    }

    /// Single column of height t.
    pub fn column(t: usize) -> Self {
        Partition(vec![1; t])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Row i (1-based); 0 beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn width(&self) -> usize {
        self.part(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let mut cols = vec![0usize; self.width()];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Number of diagonal cells: max i with part(i) >= i.
    pub fn diagonal_length(&self) -> usize {
        (1..=self.height()).take_while(|&i| self.part(i) >= i).count()
    }

    /// Entrywise containment.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.height()).all(|i| self.part(i) >= other.part(i))
    }

    /// Frobenius coordinates relative to the main diagonal.
    pub fn to_hook(&self) -> HookForm {
        let d = self.diagonal_length();
        let t = self.transpose();
        HookForm {
            arms: (1..=d).map(|i| self.part(i) - i + 1).collect(),
            legs: (1..=d).map(|i| t.part(i) - i + 1).collect(),
        }
    }

    /// All rows are even.
    pub fn has_even_rows(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// All columns are even, i.e. rows come in equal pairs.
    pub fn has_even_columns(&self) -> bool {
        self.transpose().has_even_rows()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts "[3,1]", "3,1" and "[]".
    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        let mut parts = Vec::new();
        if !inner.is_empty() {
            for tok in inner.split(',') {
                parts.push(
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad partition entry {tok:?}")))?,
                );
            }
        }
        Partition::new(parts)
    }
}

/// Diagram in hook coordinates (a_1,...,a_d | b_1,...,b_d): arm a_i and leg b_i
/// count the cells weakly east resp. south of the i-th diagonal cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookForm {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl HookForm {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self, Error> {
        let h = HookForm { arms, legs };
        h.validate()?;
        Ok(h)
    }

    fn validate(&self) -> Result<(), Error> {
        let ok = self.arms.len() == self.legs.len()
            && strictly_decreasing_positive(&self.arms)
            && strictly_decreasing_positive(&self.legs);
        if ok {
            Ok(())
        } else {
            Err(Error::BadHookForm(format!("{self}")))
        }
    }

    pub fn diagonal_length(&self) -> usize {
        self.arms.len()
    }

    pub fn size(&self) -> usize {
        let d = self.diagonal_length();
        self.arms.iter().sum::<usize>() + self.legs.iter().sum::<usize>() - d
    }

    pub fn to_partition(&self) -> Partition {
        let d = self.diagonal_length();
        let mut rows: Vec<usize> = (0..d).map(|i| self.arms[i] + i).collect();
        // Rows below the diagonal are determined by the column heights b_j + j.
        let max_h = self.legs.first().copied().unwrap_or(0);
        for i in d + 1..=max_h {
            let r = (0..d).filter(|&j| self.legs[j] + j >= i).count();
            if r == 0 {
                break;
            }
            rows.push(r);
        }
        Partition(rows)
    }

    pub fn transpose(&self) -> HookForm {
        HookForm {
            arms: self.legs.clone(),
            legs: self.arms.clone(),
        }
    }

    /// Arms exceed legs by s in every hook.
    pub fn is_balanced(&self, s: i64) -> bool {
        self.arms
            .iter()
            .zip(&self.legs)
            .all(|(&a, &b)| a as i64 == b as i64 + s)
    }
}

impl fmt::Display for HookForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.arms), join(&self.legs))
    }
}

fn strictly_decreasing_positive(v: &[usize]) -> bool {
    v.iter().all(|&x| x > 0) && v.windows(2).all(|w| w[0] > w[1])
}

/// All partitions of `size` with at most `max_height` rows and parts at most
/// `max_width`, in lexicographically decreasing order.
pub fn enumerate_partitions(size: usize, max_height: usize, max_width: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec_partitions(size, max_height, max_width, &mut acc, &mut out);
    out
}

fn rec_partitions(
    rem: usize,
    rows_left: usize,
    cap: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rem == 0 {
        out.push(Partition(acc.clone()));
        return;
    }
    if rows_left == 0 {
        return;
    }
    let hi = rem.min(cap);
    // Largest first part first gives lexicographically decreasing output.
    for p in (1..=hi).rev() {
        if p * rows_left < rem {
            break;
        }
        acc.push(p);
        rec_partitions(rem - p, rows_left - 1, p, acc, out);
        acc.pop();
    }
}

/// s-balanced diagrams of the given size, lexicographically decreasing.
///
/// A diagram is s-balanced when a_i = b_i + s for every diagonal hook. Only
/// s = 1 and s = -1 occur here; both families have even size, and the legs
/// (s = 1) resp. arms (s = -1) form a strict partition of size/2.
pub fn enumerate_balanced(s: i64, size: usize) -> Result<Vec<Partition>, Error> {
    if s != 1 && s != -1 {
        return Err(Error::UnsupportedBalance(s));
    }
    if !size.is_multiple_of(2) {
        return Err(Error::OddBalancedSize(size));
    }
    let mut out = Vec::new();
    for strict in strict_partitions(size / 2) {
        let hook = if s == 1 {
            HookForm {
                arms: strict.iter().map(|b| b + 1).collect(),
                legs: strict.clone(),
            }
        } else {
            HookForm {
                arms: strict.clone(),
                legs: strict.iter().map(|a| a + 1).collect(),
            }
        };
        out.push(hook.to_partition());
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

fn strict_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=rem.min(cap)).rev() {
            acc.push(p);
            rec(rem - p, p.saturating_sub(1), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
        assert!(Partition::new(vec![1, 3]).is_err());
    }

    #[test]
    fn transpose_basics() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 3]).transpose(), p(&[2, 2, 2]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn transpose_is_involution() {
        for size in 0..=10 {
            for lam in enumerate_partitions(size, size, size) {
                assert_eq!(lam.transpose().transpose(), lam);
            }
        }
    }

    #[test]
    fn diagonal_lengths() {
        assert_eq!(p(&[3, 3]).diagonal_length(), 2);
        assert_eq!(p(&[4, 1, 1]).diagonal_length(), 1);
        assert_eq!(Partition::empty().diagonal_length(), 0);
        assert_eq!(p(&[3, 3, 3]).diagonal_length(), 3);
    }

    #[test]
    fn hook_coordinates_of_rows_and_columns() {
        // Single row (t) <-> (t|1), single column <-> (1|t).
        for t in 1..=6 {
            let row = Partition::row(t).to_hook();
            assert_eq!((row.arms.clone(), row.legs.clone()), (vec![t], vec![1]));
            let col = Partition::column(t).to_hook();
            assert_eq!((col.arms.clone(), col.legs.clone()), (vec![1], vec![t]));
        }
    }

    #[test]
    fn hook_coordinates_two_by_three() {
        let h = p(&[3, 3]).to_hook();
        assert_eq!(h, HookForm::new(vec![3, 2], vec![2, 1]).unwrap());
        assert_eq!(h.size(), 6);
        assert_eq!(h.to_partition(), p(&[3, 3]));
    }

    #[test]
    fn hook_round_trip_all_small() {
        for size in 0..=12 {
            for lam in enumerate_partitions(size, size, size) {
                let h = lam.to_hook();
                assert_eq!(h.size(), lam.size());
                assert_eq!(h.to_partition(), lam, "round trip of {lam}");
                assert_eq!(h.transpose().to_partition(), lam.transpose());
            }
        }
    }

    #[test]
    fn hook_validation() {
        assert!(HookForm::new(vec![2, 2], vec![2, 1]).is_err());
        assert!(HookForm::new(vec![2], vec![2, 1]).is_err());
        assert!(HookForm::new(vec![2, 0], vec![2, 1]).is_err());
    }

    #[test]
    fn balanced_small_sets() {
        let rb = |q: usize| enumerate_balanced(1, q).unwrap();
        let db = |q: usize| enumerate_balanced(-1, q).unwrap();
        assert_eq!(rb(0), vec![Partition::empty()]);
        assert_eq!(rb(2), vec![p(&[2])]);
        assert_eq!(rb(4), vec![p(&[3, 1])]);
        assert_eq!(rb(6), vec![p(&[4, 1, 1]), p(&[3, 3])]);
        assert_eq!(db(0), vec![Partition::empty()]);
        assert_eq!(db(2), vec![p(&[1, 1])]);
        assert_eq!(db(4), vec![p(&[2, 1, 1])]);
        assert_eq!(db(6), vec![p(&[3, 1, 1, 1]), p(&[2, 2, 2])]);
        assert!(enumerate_balanced(1, 3).is_err());
        assert!(enumerate_balanced(2, 4).is_err());
    }

    #[test]
    fn balanced_families_are_transpose_dual() {
        for q in (0..=12).step_by(2) {
            let rb = enumerate_balanced(1, q).unwrap();
            let mut db_t: Vec<Partition> =
                enumerate_balanced(-1, q).unwrap().iter().map(|d| d.transpose()).collect();
            db_t.sort_by(|a, b| b.cmp(a));
            assert_eq!(rb, db_t, "size {q}");
            for lam in &rb {
                assert!(lam.to_hook().is_balanced(1));
                assert_eq!(lam.size(), q);
            }
        }
    }

    #[test]
    fn balanced_height_extremes() {
        // Height of a balanced diagram of size 2r is at most r (s = 1) resp.
        // r + 1 (s = -1), attained by a unique diagram.
        for r in 1..=6 {
            let rb = enumerate_balanced(1, 2 * r).unwrap();
            assert_eq!(rb.iter().map(|l| l.height()).max().unwrap(), r);
            let tall: Vec<_> = rb.iter().filter(|l| l.height() == r).collect();
            assert_eq!(tall.len(), 1);
            let h = tall[0].to_hook();
            assert_eq!((h.arms, h.legs), (vec![r + 1], vec![r]));

            let db = enumerate_balanced(-1, 2 * r).unwrap();
            assert_eq!(db.iter().map(|l| l.height()).max().unwrap(), r + 1);
            let tall: Vec<_> = db.iter().filter(|l| l.height() == r + 1).collect();
            assert_eq!(tall.len(), 1);
            let h = tall[0].to_hook();
            assert_eq!((h.arms, h.legs), (vec![r], vec![r + 1]));
        }
    }

    #[test]
    fn partition_enumeration_respects_bounds() {
        let all = enumerate_partitions(6, 2, 4);
        assert!(all.iter().all(|l| l.size() == 6 && l.height() <= 2 && l.width() <= 4));
        assert_eq!(all, vec![p(&[4, 2]), p(&[3, 3])]);
        // Lexicographically decreasing order.
        let all = enumerate_partitions(5, 5, 5);
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 7);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 3]).to_hook().to_string(), "(3,2|2,1)");
    }
}
