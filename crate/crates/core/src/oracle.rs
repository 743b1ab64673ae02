//! Slow, independent recomputation paths used to cross-check the production
//! algorithms in tests. Nothing here is needed for normal operation.
//!
//! The implementations deliberately avoid the main code paths: characters
//! are expanded as explicit Laurent polynomials over small Weyl groups,
//! branching goes through monomial substitution and highest-weight peeling,
//! and dominantization walks the actual orbit. Everything is exponential in
//! the rank and only sane for rank <= 4.

use std::collections::BTreeMap;

use crate::branching::BranchTarget;
use crate::diagrams::Partition;
use crate::weights::{
    is_dominant, AmbientWeight, DominantWeight, Dominantized, Family, GroupType, IrrepMultiset,
};
use crate::Error;

/// Laurent polynomial in n variables; exponents are doubled so half-integral
/// weight vectors stay integral, mirroring the weight convention.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn monomial(exp: Vec<i64>, coeff: i64) -> Self {
        let n = exp.len();
        let mut p = LaurentPoly::zero(n);
        p.add_term(exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: Vec<i64>, coeff: i64) {
        assert_eq!(exp.len(), self.n);
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&mut self, other: &LaurentPoly) {
        assert_eq!(self.n, other.n);
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), c);
        }
    }

    pub fn sub_scaled(&mut self, other: &LaurentPoly, scale: i64) {
        assert_eq!(self.n, other.n);
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), -scale * c);
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.n, other.n);
        let mut out = LaurentPoly::zero(self.n);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let exp: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// Lexicographically largest exponent with its coefficient.
    pub fn leading(&self) -> Option<(&Vec<i64>, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    /// Exact division; panics when the remainder does not reach zero, which
    /// cannot happen for alternating-sum numerators of genuine characters.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.n, divisor.n);
        let (dl_exp, dl_coeff) = divisor.leading().expect("division by zero polynomial");
        let dl_exp = dl_exp.clone();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.n);
        while let Some((rl_exp, rl_coeff)) = rem.leading() {
            assert_eq!(rl_coeff % dl_coeff, 0, "non-exact character division");
            let c = rl_coeff / dl_coeff;
            let shift: Vec<i64> = rl_exp.iter().zip(&dl_exp).map(|(r, d)| r - d).collect();
            quot.add_term(shift.clone(), c);
            let scaled = LaurentPoly {
                n: self.n,
                terms: divisor
                    .terms
                    .iter()
                    .map(|(e, &k)| (e.iter().zip(&shift).map(|(x, s)| x + s).collect(), k))
                    .collect(),
            };
            rem.sub_scaled(&scaled, c);
        }
        quot
    }

    /// Value at all variables equal to one.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// All elements of the signed-permutation Weyl group as (permutation, signs,
/// determinant sign). Type D keeps only even numbers of sign flips.
fn weyl_elements(g: GroupType) -> Vec<(Vec<usize>, Vec<i64>, i64)> {
    let n = g.rank;
    assert!(n <= 4, "explicit Weyl group enumeration is meant for rank <= 4");
    let mut perms: Vec<(Vec<usize>, i64)> = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let mut inv = 0;
        for a in 0..n {
            for b in a + 1..n {
                if idx[a] > idx[b] {
                    inv += 1;
                }
            }
        }
        perms.push((idx.clone(), if inv % 2 == 0 { 1 } else { -1 }));
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| idx[i] < idx[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| idx[j] > idx[i]).unwrap();
        idx.swap(i, j);
        idx[i + 1..].reverse();
    }
    let mut out = Vec::new();
    for (perm, psign) in perms {
        for mask in 0u32..(1 << n) {
            let flips = mask.count_ones();
            if g.family == Family::D && flips % 2 == 1 {
                continue;
            }
            let signs: Vec<i64> = (0..n).map(|i| if mask & (1 << i) != 0 { -1 } else { 1 }).collect();
            let det = psign * if flips % 2 == 0 { 1 } else { -1 };
            out.push((perm.clone(), signs, det));
        }
    }
    out
}

fn orbit_sum(gamma_twice: &[i64], g: GroupType) -> LaurentPoly {
    let n = g.rank;
    let mut p = LaurentPoly::zero(n);
    for (perm, signs, det) in weyl_elements(g) {
        let exp: Vec<i64> = (0..n).map(|i| signs[i] * gamma_twice[perm[i]]).collect();
        p.add_term(exp, det);
    }
    p
}

/// Weyl character formula, expanded literally.
pub fn character(w: &DominantWeight, g: GroupType) -> LaurentPoly {
    assert_eq!(w.rank(), g.rank);
    let rho = g.rho_twice();
    let gamma: Vec<i64> = w.twice().iter().zip(&rho).map(|(a, b)| a + b).collect();
    orbit_sum(&gamma, g).exact_div(&orbit_sum(&rho, g))
}

/// Character dimension; cross-checks the product formula.
pub fn character_dim(w: &DominantWeight, g: GroupType) -> u64 {
    character(w, g).eval_at_one() as u64
}

fn ssyt_walk(lam: &Partition, n: usize, counts: &mut Vec<usize>, out: &mut impl FnMut(&[usize])) {
    // Fill row-major; rows[r][c] stored transiently on the stack via the grid.
    fn rec(
        lam: &Partition,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        r: usize,
        c: usize,
        counts: &mut Vec<usize>,
        out: &mut impl FnMut(&[usize]),
    ) {
        if r == lam.height() {
            out(counts);
            return;
        }
        let (nr, nc) = if c + 1 < lam.part(r + 1) { (r, c + 1) } else { (r + 1, 0) };
        let lo = {
            let left = if c > 0 { grid[r][c - 1] } else { 1 };
            let above = if r > 0 && lam.part(r) > c { grid[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        for v in lo..=n {
            grid[r][c] = v;
            counts[v - 1] += 1;
            rec(lam, n, grid, nr, nc, counts, out);
            counts[v - 1] -= 1;
        }
    }
    if lam.is_empty() {
        out(counts);
        return;
    }
    if lam.height() > n {
        return;
    }
    let mut grid: Vec<Vec<usize>> = (1..=lam.height()).map(|r| vec![0; lam.part(r)]).collect();
    rec(lam, n, &mut grid, 0, 0, counts, out);
}

/// Schur polynomial via semistandard tableaux, with doubled exponents.
pub fn gl_character(lam: &Partition, n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero(n);
    let mut counts = vec![0usize; n];
    ssyt_walk(lam, n, &mut counts, &mut |c| {
        p.add_term(c.iter().map(|&x| 2 * x as i64).collect(), 1);
    });
    p
}

/// Littlewood--Richardson expansion through straight polynomial arithmetic:
/// multiply two Schur polynomials and peel leading terms.
pub fn lr_by_characters(a: &Partition, b: &Partition, n: usize) -> Vec<(Partition, u64)> {
    let mut prod = gl_character(a, n).mul(&gl_character(b, n));
    let mut out = Vec::new();
    while let Some((exp, coeff)) = prod.leading() {
        assert!(coeff > 0, "peeling produced a negative coefficient");
        let parts: Vec<usize> = exp
            .iter()
            .map(|&e| {
                assert!(e >= 0 && e % 2 == 0);
                (e / 2) as usize
            })
            .collect();
        let gamma = Partition::new(parts).expect("leading exponent must be dominant");
        let c = coeff as u64;
        prod.sub_scaled(&gl_character(&gamma, n), coeff);
        out.push((gamma, c));
    }
    out.sort();
    out
}

/// Restriction of a Schur functor by character arithmetic: substitute the
/// torus of the target group into the Schur polynomial, then peel highest
/// weights. Valid for any lam (no stable-range constraint), which is what
/// makes it a useful referee.
pub fn branch_by_characters(lam: &Partition, target: BranchTarget) -> Result<IrrepMultiset, Error> {
    let g = target.group()?;
    let m = target.rank();
    let dim = target.space_dim();
    if lam.height() > dim {
        return Ok(IrrepMultiset::new());
    }
    let mut restricted = LaurentPoly::zero(m);
    let mut counts = vec![0usize; dim];
    ssyt_walk(lam, dim, &mut counts, &mut |c| {
        // Variables pair up as z_i and z_i^{-1}; odd-dimensional targets have
        // one torus-trivial middle variable.
        let mut exp = vec![0i64; m];
        for (v, &cnt) in c.iter().enumerate() {
            let cnt = cnt as i64;
            if v < m {
                exp[v] += 2 * cnt;
            } else if dim - v <= m {
                exp[dim - v - 1] -= 2 * cnt;
            }
        }
        restricted.add_term(exp, 1);
    });
    let mut out = IrrepMultiset::new();
    while let Some((exp, coeff)) = restricted.leading() {
        assert!(coeff > 0, "peeling produced a negative coefficient");
        let w = DominantWeight::new(exp.clone(), g).expect("leading exponent must be dominant");
        let c = coeff as u64;
        restricted.sub_scaled(&character(&w, g), coeff);
        out.add(w, c);
    }
    Ok(out)
}

/// Dominantization by brute force: breadth-first search over simple
/// reflections. Reports singularity when the orbit is smaller than the Weyl
/// group, otherwise the dominant representative and the walk length.
pub fn orbit_dominantize(w: &AmbientWeight, g: GroupType) -> Dominantized {
    let n = g.rank;
    let start: Vec<i64> = w.twice().to_vec();
    let reflect = |v: &[i64], s: usize| -> Vec<i64> {
        let mut r = v.to_vec();
        if s + 1 < n {
            r.swap(s, s + 1);
        } else {
            match g.family {
                Family::B | Family::C => r[n - 1] = -r[n - 1],
                Family::D => {
                    r.swap(n - 2, n - 1);
                    r[n - 2] = -r[n - 2];
                    r[n - 1] = -r[n - 1];
                }
            }
        }
        r
    };
    let mut dist: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    dist.insert(start.clone(), 0);
    let mut frontier = vec![start];
    let mut found: Option<(Vec<i64>, usize)> = None;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in frontier {
            let d = dist[&v];
            if found.is_none() && is_dominant(&AmbientWeight::from_twice(v.clone()), g) {
                found = Some((v.clone(), d));
            }
            for s in 0..n {
                let r = reflect(&v, s);
                if !dist.contains_key(&r) {
                    dist.insert(r.clone(), d + 1);
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    let order = weyl_elements(g).len();
    if dist.len() < order {
        return Dominantized::Singular;
    }
    let (rep, length) = found.expect("full orbit contains a dominant vector");
    Dominantized::Chamber {
        length,
        weight: AmbientWeight::from_twice(rep),
    }
}
