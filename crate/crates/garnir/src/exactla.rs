//! Exact sparse linear algebra over the rationals.
//!
//! Everything the rest of the crate needs reduces to three operations on
//! sparse matrices: rank, column-space containment, and reduction of a
//! vector modulo a column space. Ranks come in two flavours:
//!
//! * [`SparseMat::rank`] — exact, by fraction-free elimination over big
//!   integers after clearing denominators;
//! * [`SparseMat::rank_certified`] — elimination modulo independent
//!   62-bit primes, accepted once two primes agree. A rank modulo `p`
//!   is always a lower bound for the rational rank, so two agreeing
//!   primes certify the value up to the (negligible) event that both
//!   divide the same nonzero minor.
//!
//! Elimination scans coordinates in descending index order, i.e. the
//! pivot of a vector is its trailing nonzero coordinate. On the
//! straightening-style matrices produced by this crate that choice keeps
//! fill-in low and leaves the combinatorially meaningful basis vectors
//! (standard tabloids, cosemistandard monomials) as the free coordinates.

use crate::Rat;
use num::{BigInt, One, Signed, Zero};
use std::collections::HashMap;

/// Sparse vector: `(coordinate, coefficient)` pairs, strictly increasing
/// coordinates, no zero coefficients.
pub type SparseVec = Vec<(u32, Rat)>;

/// 62-bit primes used by the modular rank path.
pub const PRIMES62: [u64; 8] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
];

/// `u - c * v` on sorted sparse vectors.
fn sub_scaled(u: &[(u32, Rat)], c: &Rat, v: &[(u32, Rat)]) -> Vec<(u32, Rat)> {
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        match (u.get(i), v.get(j)) {
            (Some(&(cu, ref au)), Some(&(cv, ref av))) if cu == cv => {
                let x = au - c * av;
                if !x.is_zero() {
                    out.push((cu, x));
                }
                i += 1;
                j += 1;
            }
            (Some(&(cu, ref au)), Some(&(cv, _))) if cu < cv => {
                out.push((cu, au.clone()));
                i += 1;
            }
            (Some(_), Some(&(cv, ref av))) => {
                out.push((cv, -(c * av)));
                j += 1;
            }
            (Some(&(cu, ref au)), None) => {
                out.push((cu, au.clone()));
                i += 1;
            }
            (None, Some(&(cv, ref av))) => {
                out.push((cv, -(c * av)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Sparse matrix with exact rational entries, stored column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMat {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn new(nrows: usize, cols: Vec<SparseVec>) -> Self {
        for col in &cols {
            debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(col.iter().all(|(r, a)| (*r as usize) < nrows && !a.is_zero()));
        }
        SparseMat { nrows, cols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat {
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let cols = (0..n).map(|i| vec![(i as u32, Rat::one())]).collect();
        SparseMat { nrows: n, cols }
    }

    /// Build from dense rows (test and CLI convenience).
    pub fn from_dense_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, &a) in row.iter().enumerate() {
                if a != 0 {
                    cols[j].push((i as u32, Rat::from_integer(BigInt::from(a))));
                }
            }
        }
        SparseMat { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.nrows, other.nrows, "hstack: row counts differ");
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        SparseMat {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, a) in col {
                cols[*i as usize].push((j as u32, a.clone()));
            }
        }
        SparseMat {
            nrows: self.ncols(),
            cols,
        }
    }

    /// Exact rank over the rationals (fraction-free integer elimination).
    pub fn rank(&self) -> usize {
        let mut ech = IntEchelon::default();
        for col in &self.cols {
            ech.push(col);
        }
        ech.rank()
    }

    /// Rank modulo a prime.
    pub fn rank_mod(&self, p: u64) -> usize {
        let mut ech = FpEchelon::new(p);
        for col in &self.cols {
            ech.push(fp_vec(col, p));
        }
        ech.rank()
    }

    /// Rank by modular elimination, certified by agreement of two primes.
    ///
    /// Escalates through the prime table until two primes agree; a rank
    /// modulo any prime is a lower bound for the exact rank, so agreement
    /// of two independent primes pins the value for all practical
    /// purposes. Deterministic: primes are drawn from [`PRIMES62`] in order.
    pub fn rank_certified(&self) -> usize {
        let mut seen: Vec<usize> = Vec::new();
        for &p in PRIMES62.iter() {
            let r = self.rank_mod(p);
            if seen.contains(&r) {
                return r;
            }
            seen.push(r);
        }
        panic!("modular rank did not stabilize over the prime table");
    }
}

// ---------------------------------------------------------------------------
// Fraction-free integer echelon (exact path)
// ---------------------------------------------------------------------------

/// Incremental echelon basis over the integers.
///
/// Rows are scaled to integer vectors with content 1; eliminating a
/// vector against a row uses the cross-multiplication
/// `v' = (b/g) v - (a/g) row` with `g = gcd(a, b)`, so no rationals ever
/// appear mid-elimination.
#[derive(Default)]
pub struct IntEchelon {
    pivot_of: HashMap<u32, usize>,
    rows: Vec<Vec<(u32, BigInt)>>,
}

fn clear_denominators(v: &[(u32, Rat)]) -> Vec<(u32, BigInt)> {
    let mut lcm = BigInt::one();
    for (_, a) in v {
        lcm = num::integer::lcm(lcm, a.denom().clone());
    }
    v.iter()
        .map(|(c, a)| (*c, a.numer() * (&lcm / a.denom())))
        .collect()
}

fn content_reduce(v: &mut Vec<(u32, BigInt)>) {
    let mut g = BigInt::zero();
    for (_, a) in v.iter() {
        g = num::integer::gcd(g, a.clone());
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for (_, a) in v.iter_mut() {
            *a = &*a / &g;
        }
    }
}

fn int_sub_scaled(
    u: &[(u32, BigInt)],
    cu: &BigInt,
    v: &[(u32, BigInt)],
    cv: &BigInt,
) -> Vec<(u32, BigInt)> {
    // cu * u - cv * v
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        match (u.get(i), v.get(j)) {
            (Some(&(a, ref x)), Some(&(b, ref y))) if a == b => {
                let z = cu * x - cv * y;
                if !z.is_zero() {
                    out.push((a, z));
                }
                i += 1;
                j += 1;
            }
            (Some(&(a, ref x)), Some(&(b, _))) if a < b => {
                out.push((a, cu * x));
                i += 1;
            }
            (Some(_), Some(&(b, ref y))) => {
                out.push((b, -(cv * y)));
                j += 1;
            }
            (Some(&(a, ref x)), None) => {
                out.push((a, cu * x));
                i += 1;
            }
            (None, Some(&(b, ref y))) => {
                out.push((b, -(cv * y)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl IntEchelon {
    /// Insert a vector; returns true iff it enlarged the span.
    pub fn push(&mut self, v: &[(u32, Rat)]) -> bool {
        let mut w = clear_denominators(v);
        content_reduce(&mut w);
        loop {
            let Some(&(c, ref a)) = w.last() else {
                return false;
            };
            let Some(&ri) = self.pivot_of.get(&c) else {
                self.pivot_of.insert(c, self.rows.len());
                self.rows.push(w);
                return true;
            };
            let row = &self.rows[ri];
            let b = &row.last().unwrap().1;
            let g = num::integer::gcd(a.clone(), b.clone());
            w = int_sub_scaled(&w, &(b / &g), row, &(a / &g));
            content_reduce(&mut w);
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

// ---------------------------------------------------------------------------
// Echelon modulo a 62-bit prime
// ---------------------------------------------------------------------------

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

#[inline]
fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn fp_of_rat(a: &Rat, p: u64) -> u64 {
    let reduce = |n: &BigInt| -> u64 {
        let m = n.magnitude() % p;
        let m = m.to_u64_digits().first().copied().unwrap_or(0);
        if n.is_negative() && m != 0 {
            p - m
        } else {
            m
        }
    };
    let num = reduce(a.numer());
    let den = reduce(a.denom());
    assert!(den != 0, "denominator divisible by modular prime");
    mul_mod(num, inv_mod(den, p), p)
}

fn fp_vec(v: &[(u32, Rat)], p: u64) -> Vec<(u32, u64)> {
    v.iter()
        .filter_map(|(c, a)| {
            let x = fp_of_rat(a, p);
            (x != 0).then_some((*c, x))
        })
        .collect()
}

/// Incremental echelon basis over `GF(p)`; rows are monic at their pivot.
pub struct FpEchelon {
    p: u64,
    pivot_of: HashMap<u32, usize>,
    rows: Vec<Vec<(u32, u64)>>,
}

impl FpEchelon {
    pub fn new(p: u64) -> Self {
        FpEchelon {
            p,
            pivot_of: HashMap::new(),
            rows: Vec::new(),
        }
    }

    fn sub_scaled(&self, u: &[(u32, u64)], c: u64, v: &[(u32, u64)]) -> Vec<(u32, u64)> {
        let p = self.p;
        let mut out = Vec::with_capacity(u.len() + v.len());
        let (mut i, mut j) = (0, 0);
        while i < u.len() || j < v.len() {
            match (u.get(i), v.get(j)) {
                (Some(&(a, x)), Some(&(b, y))) if a == b => {
                    let z = (x + p - mul_mod(c, y, p)) % p;
                    if z != 0 {
                        out.push((a, z));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&(a, x)), Some(&(b, _))) if a < b => {
                    out.push((a, x));
                    i += 1;
                }
                (Some(_), Some(&(b, y))) => {
                    out.push((b, p - mul_mod(c, y, p)));
                    j += 1;
                }
                (Some(&(a, x)), None) => {
                    out.push((a, x));
                    i += 1;
                }
                (None, Some(&(b, y))) => {
                    out.push((b, p - mul_mod(c, y, p)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    /// Insert a vector; returns true iff it enlarged the span.
    pub fn push(&mut self, mut w: Vec<(u32, u64)>) -> bool {
        loop {
            let Some(&(c, a)) = w.last() else {
                return false;
            };
            match self.pivot_of.get(&c) {
                Some(&ri) => {
                    w = self.sub_scaled(&w, a, &self.rows[ri]);
                }
                None => {
                    let inv = inv_mod(a, self.p);
                    for (_, x) in w.iter_mut() {
                        *x = mul_mod(*x, inv, self.p);
                    }
                    self.pivot_of.insert(c, self.rows.len());
                    self.rows.push(w);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

// ---------------------------------------------------------------------------
// Containment and reduction
// ---------------------------------------------------------------------------

/// Exact test for `colspace(b) <= colspace(a)`, via rank([a|b]) = rank(a).
pub fn image_contains(a: &SparseMat, b: &SparseMat) -> bool {
    assert_eq!(a.nrows(), b.nrows(), "image_contains: row counts differ");
    let mut ech = IntEchelon::default();
    for col in a.columns() {
        ech.push(col);
    }
    b.columns().iter().all(|col| !ech.push(col))
}

/// Modular variant of [`image_contains`], checked for two primes.
pub fn image_contains_certified(a: &SparseMat, b: &SparseMat) -> bool {
    assert_eq!(a.nrows(), b.nrows(), "image_contains: row counts differ");
    PRIMES62[..2].iter().all(|&p| {
        let mut ech = FpEchelon::new(p);
        for col in a.columns() {
            ech.push(fp_vec(col, p));
        }
        b.columns().iter().all(|col| !ech.push(fp_vec(col, p)))
    })
}

/// Fully reduced echelon form of a column space, supporting canonical
/// reduction of vectors modulo that space.
///
/// Rows are monic at their pivot coordinate and vanish at every other
/// pivot, so a reduced vector is supported on non-pivot coordinates only;
/// the reduction is idempotent, linear, and vanishes exactly on the
/// column space.
pub struct Reducer {
    pivot_of: HashMap<u32, usize>,
    rows: Vec<SparseVec>,
    // coordinate -> rows that currently contain it (kept fresh for pivots)
    occupancy: HashMap<u32, Vec<usize>>,
}

impl Reducer {
    pub fn new(m: &SparseMat) -> Reducer {
        let mut red = Reducer {
            pivot_of: HashMap::new(),
            rows: Vec::new(),
            occupancy: HashMap::new(),
        };
        for col in m.columns() {
            red.insert(col);
        }
        red
    }

    fn insert(&mut self, v: &SparseVec) {
        let w = self.reduce(v);
        let Some((c, a)) = w.last().cloned() else {
            return;
        };
        let inv = Rat::one() / a;
        let w: SparseVec = w.into_iter().map(|(i, x)| (i, x * &inv)).collect();
        // back-substitute the new pivot into existing rows
        let holders = self.occupancy.remove(&c).unwrap_or_default();
        for ri in holders {
            let coeff = match self.rows[ri].iter().find(|(i, _)| *i == c) {
                Some((_, x)) => x.clone(),
                None => continue, // stale occupancy entry
            };
            let updated = sub_scaled(&self.rows[ri], &coeff, &w);
            for (i, _) in &updated {
                if !self.rows[ri].iter().any(|(j, _)| j == i) {
                    self.occupancy.entry(*i).or_default().push(ri);
                }
            }
            self.rows[ri] = updated;
        }
        let ri = self.rows.len();
        for (i, _) in &w {
            self.occupancy.entry(*i).or_default().push(ri);
        }
        self.pivot_of.insert(c, ri);
        self.rows.push(w);
    }

    /// Canonical representative of `v` modulo the column space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(u32, usize)> = v
            .iter()
            .filter_map(|(c, _)| self.pivot_of.get(c).map(|&ri| (*c, ri)))
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut w = v.clone();
        for (c, ri) in hits {
            // the coefficient at c is unchanged by the other subtractions
            if let Some((_, coeff)) = w.iter().find(|(i, _)| *i == c) {
                let coeff = coeff.clone();
                w = sub_scaled(&w, &coeff, &self.rows[ri]);
            }
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, coord: u32) -> bool {
        self.pivot_of.contains_key(&coord)
    }
}

/// Canonical representative of `v` modulo the column space of `a`.
///
/// One-shot convenience; build a [`Reducer`] when reducing many vectors
/// against the same space.
pub fn reduce_mod_image(a: &SparseMat, v: &SparseVec) -> SparseVec {
    assert!(
        v.last().map_or(true, |(c, _)| (*c as usize) < a.nrows()),
        "vector dimension exceeds row count"
    );
    Reducer::new(a).reduce(v)
}
