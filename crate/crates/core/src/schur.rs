//! Decompositions of GL-representations: Littlewood-Richardson products and
//! exterior powers of tensor, symmetric and alternating squares.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::diagrams::{enumerate_balanced, enumerate_partitions, Partition};
use crate::Error;

/// Nonnegative combination of Schur functors, truncated to a height cap
/// (heights above the cap correspond to zero bundles on a rank-cap space).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GLRepSum {
    pub cap: usize,
    terms: BTreeMap<Partition, u64>,
}

impl GLRepSum {
    pub fn new(cap: usize) -> Self {
        GLRepSum { cap, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, lam: Partition, mult: u64) {
        if mult > 0 && lam.height() <= self.cap {
            *self.terms.entry(lam).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, lam: &Partition) -> u64 {
        self.terms.get(lam).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(l, &m)| (l, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total dimension over GL_n.
    pub fn dimension_at(&self, n: usize) -> u128 {
        self.iter().map(|(l, m)| gl_dim(l, n) * m as u128).sum()
    }
}

/// Dimension of the Schur functor of shape `lam` applied to an n-dimensional
/// space; zero when the shape is taller than n.
pub fn gl_dim(lam: &Partition, n: usize) -> u128 {
    if lam.height() > n {
        return 0;
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let li = lam.part(i) as i64;
            let lj = lam.part(j) as i64;
            num *= BigInt::from(li - lj + j as i64 - i as i64);
            den *= BigInt::from(j as i64 - i as i64);
        }
    }
    let q = num / den;
    q.to_u128().expect("GL dimension fits in u128")
}

/// Littlewood-Richardson coefficient as the number of semistandard fillings
/// of outer/inner with the given content whose reverse reading word is a
/// lattice word.
pub fn skew_lr_count(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if !outer.contains(inner) || outer.size() != inner.size() + content.size() {
        return 0;
    }
    if content.is_empty() {
        return 1;
    }
    // Cells in reverse reading order: rows top to bottom, right to left.
    let mut cells = Vec::new();
    for r in 0..outer.height() {
        for c in (inner.part(r + 1)..outer.part(r + 1)).rev() {
            cells.push((r, c));
        }
    }
    let m = content.height();
    let mut grid: Vec<Vec<usize>> = (0..outer.height())
        .map(|r| vec![0; outer.part(r + 1)])
        .collect();
    let mut used = vec![0usize; m + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
        content: &Partition,
        inner: &Partition,
        m: usize,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let right = if c + 1 < grid[r].len() && grid[r][c + 1] != 0 {
            grid[r][c + 1]
        } else {
            m
        };
        let above = if r > 0 && c >= inner.part(r) {
            grid[r - 1][c]
        } else {
            0
        };
        let mut total = 0;
        for v in above + 1..=right {
            if used[v] >= content.part(v) {
                continue;
            }
            // Lattice word: every prefix has at least as many v-1 as v.
            if v > 1 && used[v] + 1 > used[v - 1] {
                continue;
            }
            used[v] += 1;
            grid[r][c] = v;
            total += rec(idx + 1, cells, grid, used, content, inner, m);
            grid[r][c] = 0;
            used[v] -= 1;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut used, content, inner, m)
}

/// All partitions of `total` containing `base`, with at most `max_h` rows.
fn enumerate_supersets(base: &Partition, total: usize, max_h: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if total < base.size() || base.height() > max_h {
        return out;
    }
    let suffix: Vec<usize> = {
        // suffix[i] = sum of base parts from row i+1 on (0-based row i).
        let mut s = vec![0usize; max_h + 1];
        for i in (0..max_h).rev() {
            s[i] = s[i + 1] + base.part(i + 1);
        }
        s
    };
    #[allow(clippy::too_many_arguments)]
    fn rec(
        row: usize,
        prev: usize,
        rem: usize,
        base: &Partition,
        suffix: &[usize],
        max_h: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            if base.part(row + 1) == 0 {
                out.push(Partition::new(acc.clone()).unwrap());
            }
            return;
        }
        if row == max_h {
            return;
        }
        let lo = base.part(row + 1).max(1);
        let hi = prev.min(rem - suffix[row + 1]);
        if lo > hi {
            return;
        }
        for v in (lo..=hi).rev() {
            acc.push(v);
            rec(row + 1, v, rem - v, base, suffix, max_h, acc, out);
            acc.pop();
        }
    }
    rec(0, usize::MAX, total, base, &suffix, max_h, &mut Vec::new(), &mut out);
    out
}

/// Product of Schur functors expanded in the Schur basis, truncated to the
/// height cap.
pub fn lr_product(a: &Partition, b: &Partition, cap: usize) -> Result<GLRepSum, Error> {
    if a.height() > cap || b.height() > cap {
        return Err(Error::HeightViolation {
            height: a.height().max(b.height()),
            cap,
        });
    }
    // Count fillings with the smaller factor as content.
    let (small, large) = if a.size() <= b.size() { (a, b) } else { (b, a) };
    let mut out = GLRepSum::new(cap);
    let max_h = cap.min(a.height() + b.height());
    for gamma in enumerate_supersets(large, a.size() + b.size(), max_h) {
        let c = skew_lr_count(&gamma, large, small);
        out.add(gamma, c);
    }
    Ok(out)
}

/// Exterior power of a tensor product of two spaces: pairs (lam, lam^T) over
/// all partitions of q.
pub fn exterior_of_tensor(q: usize) -> Vec<(Partition, Partition)> {
    enumerate_partitions(q, q.max(1), q.max(1))
        .into_iter()
        .map(|l| {
            let t = l.transpose();
            (l, t)
        })
        .collect()
}

/// Exterior power of a symmetric square: 1-balanced shapes of size 2q.
pub fn exterior_of_sym2(q: usize) -> Vec<Partition> {
    enumerate_balanced(1, 2 * q).expect("even size")
}

/// Exterior power of an alternating square: (-1)-balanced shapes of size 2q.
pub fn exterior_of_alt2(q: usize) -> Vec<Partition> {
    enumerate_balanced(-1, 2 * q).expect("even size")
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    let q = num / den;
    q.to_u128().expect("binomial fits in u128")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn gl_dims() {
        assert_eq!(gl_dim(&Partition::empty(), 5), 1);
        assert_eq!(gl_dim(&p(&[1]), 7), 7);
        assert_eq!(gl_dim(&p(&[1, 1]), 4), 6);
        assert_eq!(gl_dim(&p(&[2]), 4), 10);
        assert_eq!(gl_dim(&p(&[2, 2]), 5), 50);
        assert_eq!(gl_dim(&p(&[2, 1]), 4), 20);
        assert_eq!(gl_dim(&p(&[1, 1, 1]), 2), 0);
    }

    #[test]
    fn lr_product_of_vectors() {
        let s = lr_product(&p(&[1]), &p(&[1]), 4).unwrap();
        assert_eq!(s.mult(&p(&[2])), 1);
        assert_eq!(s.mult(&p(&[1, 1])), 1);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn lr_famous_multiplicity_two() {
        let s = lr_product(&p(&[2, 1]), &p(&[2, 1]), 6).unwrap();
        assert_eq!(s.mult(&p(&[3, 2, 1])), 2);
        assert_eq!(s.mult(&p(&[4, 2])), 1);
        assert_eq!(s.mult(&p(&[4, 1, 1])), 1);
        assert_eq!(s.mult(&p(&[3, 3])), 1);
        assert_eq!(s.mult(&p(&[3, 1, 1, 1])), 1);
        assert_eq!(s.mult(&p(&[2, 2, 2])), 1);
        assert_eq!(s.mult(&p(&[2, 2, 1, 1])), 1);
        assert_eq!(s.len(), 7);
    }

    #[test]
    fn lr_truncation_by_cap() {
        let s = lr_product(&p(&[1, 1]), &p(&[1, 1]), 2).unwrap();
        assert_eq!(s.mult(&p(&[2, 2])), 1);
        assert_eq!(s.len(), 1);
        assert!(lr_product(&p(&[1, 1, 1]), &p(&[1]), 2).is_err());
    }

    #[test]
    fn lr_pieri_rows() {
        let s = lr_product(&p(&[3, 1]), &p(&[2]), 4).unwrap();
        assert_eq!(s.mult(&p(&[5, 1])), 1);
        assert_eq!(s.mult(&p(&[4, 2])), 1);
        assert_eq!(s.mult(&p(&[4, 1, 1])), 1);
        assert_eq!(s.mult(&p(&[3, 3])), 1);
        assert_eq!(s.mult(&p(&[3, 2, 1])), 1);
        assert_eq!(s.mult(&p(&[3, 1, 1])), 0);
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn lr_dimension_identity() {
        for (a, b, n) in [
            (p(&[2, 1]), p(&[2, 1]), 3),
            (p(&[3, 1]), p(&[2, 2]), 4),
            (p(&[2, 2, 1]), p(&[3]), 3),
            (p(&[1, 1, 1]), p(&[2, 1]), 5),
        ] {
            let s = lr_product(&a, &b, n).unwrap();
            assert_eq!(s.dimension_at(n), gl_dim(&a, n) * gl_dim(&b, n));
        }
    }

    #[test]
    fn lr_symmetry() {
        for a in enumerate_partitions(3, 3, 3) {
            for b in enumerate_partitions(4, 4, 4) {
                let ab = lr_product(&a, &b, 7).unwrap();
                let ba = lr_product(&b, &a, 7).unwrap();
                assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn exterior_tensor_pairs() {
        let pairs = exterior_of_tensor(2);
        assert_eq!(pairs, vec![(p(&[2]), p(&[1, 1])), (p(&[1, 1]), p(&[2]))]);
        assert_eq!(exterior_of_tensor(0), vec![(Partition::empty(), Partition::empty())]);
    }

    #[test]
    fn exterior_squares() {
        assert_eq!(exterior_of_sym2(2), vec![p(&[3, 1])]);
        assert_eq!(exterior_of_sym2(3), vec![p(&[4, 1, 1]), p(&[3, 3])]);
        assert_eq!(exterior_of_alt2(2), vec![p(&[2, 1, 1])]);
        assert_eq!(exterior_of_alt2(3), vec![p(&[3, 1, 1, 1]), p(&[2, 2, 2])]);
    }

    #[test]
    fn exterior_dimension_identities() {
        // Cauchy: sum over |lam| = q of dim_N(lam) * dim_M(lam^T) = C(NM, q).
        for n in 2..=4usize {
            for m in 2..=4usize {
                for q in 0..=5 {
                    let total: u128 = exterior_of_tensor(q)
                        .iter()
                        .map(|(l, t)| gl_dim(l, n) * gl_dim(t, m))
                        .sum();
                    assert_eq!(total, binomial(n * m, q), "n={n} m={m} q={q}");
                }
            }
        }
        // Plethysm ranks of the symmetric and alternating squares.
        for n in 2..=5usize {
            for q in 0..=6 {
                let sym: u128 = exterior_of_sym2(q).iter().map(|l| gl_dim(l, n)).sum();
                assert_eq!(sym, binomial(n * (n + 1) / 2, q), "sym n={n} q={q}");
                let alt: u128 = exterior_of_alt2(q).iter().map(|l| gl_dim(l, n)).sum();
                assert_eq!(alt, binomial(n * (n - 1) / 2, q), "alt n={n} q={q}");
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(12, 2), 66);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(33, 16), 1166803110);
    }
}
