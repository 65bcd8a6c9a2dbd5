//! The exterior algebra of `Q^n` with exact signs, and the equivariant
//! maps built from its multiplication and comultiplication.
//!
//! Basis monomials of `Lambda^a` are strictly increasing index sets in
//! `{1..n}`, enumerated lexicographically; tensor products are enumerated
//! row-major (first factor slowest). Every map is available both as a
//! materialized sparse matrix over these bases ([`build_map`]) and as a
//! per-monomial evaluator ([`image_of`]) so that weight-space restrictions
//! never have to touch the full basis.
//!
//! Signs are computed by counting inversions during merges and splits;
//! no symbolic permutation objects appear anywhere.

use crate::combinat::{binomial, k_subsets, Partition};
use crate::exactla::{SparseMat, SparseVec};
use crate::{Error, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;

/// A strictly increasing set of indices from `{1..n}`; a basis monomial
/// `e_{i_1} e_{i_2} ... e_{i_a}` of `Lambda^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    pub fn new(indices: Vec<u32>, n: usize) -> Result<Self, Error> {
        let ok = indices.windows(2).all(|w| w[0] < w[1])
            && indices.iter().all(|&i| i >= 1 && i as usize <= n);
        if !ok {
            return Err(Error::BadIndexSet(indices, n));
        }
        Ok(IndexSet(indices))
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl std::fmt::Display for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Product in the exterior algebra: `None` when an index repeats,
/// otherwise the merge sign and the sorted union.
pub fn wedge(x: &IndexSet, y: &IndexSet) -> Option<(i32, IndexSet)> {
    let mut out = Vec::with_capacity(x.0.len() + y.0.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < x.0.len() && j < y.0.len() {
        if x.0[i] == y.0[j] {
            return None;
        }
        if x.0[i] < y.0[j] {
            out.push(x.0[i]);
            i += 1;
        } else {
            // y[j] jumps over the remaining entries of x
            inversions += x.0.len() - i;
            out.push(y.0[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&x.0[i..]);
    out.extend_from_slice(&y.0[j..]);
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some((sign, IndexSet(out)))
}

/// All splits of `x` into `(first, second)` with `|first| = a`, together
/// with the shuffle sign; this is the comultiplication component
/// `Delta_{a, |x|-a}` on a basis monomial.
pub fn splits(x: &IndexSet, a: usize) -> Vec<(i32, IndexSet, IndexSet)> {
    let d = x.0.len();
    assert!(a <= d, "split size exceeds degree");
    let mut out = Vec::with_capacity(choose_usize(d, a));
    for pos in k_subsets(d, a) {
        let mut exp = 0usize;
        let mut first = Vec::with_capacity(a);
        let mut in_first = vec![false; d];
        for (i, &p) in pos.iter().enumerate() {
            exp += p - i;
            first.push(x.0[p]);
            in_first[p] = true;
        }
        let second: Vec<u32> = (0..d).filter(|&p| !in_first[p]).map(|p| x.0[p]).collect();
        let sign = if exp % 2 == 0 { 1 } else { -1 };
        out.push((sign, IndexSet(first), IndexSet(second)));
    }
    out
}

fn choose_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

// ---------------------------------------------------------------------------
// Shapes, tensor monomials, vectors
// ---------------------------------------------------------------------------

/// Factor degrees of a tensor product `Lambda^{nu_1} x ... x Lambda^{nu_l}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(factors: Vec<usize>) -> Self {
        Shape(factors)
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn basis_size(&self, n: usize) -> usize {
        self.0.iter().map(|&d| choose_usize(n, d)).product()
    }

    /// Rank of a monomial in the row-major basis order.
    pub fn rank(&self, n: usize, mono: &TensorMonomial) -> usize {
        assert_eq!(mono.0.len(), self.0.len());
        let mut r = 0usize;
        for (factor, &d) in mono.0.iter().zip(&self.0) {
            assert_eq!(factor.degree(), d, "monomial does not match shape");
            r = r * choose_usize(n, d) + subset_rank(n, factor.indices());
        }
        r
    }

    pub fn unrank(&self, n: usize, mut r: usize) -> TensorMonomial {
        let mut ranks = Vec::with_capacity(self.0.len());
        for &d in self.0.iter().rev() {
            let size = choose_usize(n, d);
            ranks.push(r % size);
            r /= size;
        }
        ranks.reverse();
        let factors = ranks
            .into_iter()
            .zip(&self.0)
            .map(|(fr, &d)| IndexSet(subset_unrank(n, d, fr)))
            .collect();
        TensorMonomial(factors)
    }

    /// All monomials of this shape, in basis order.
    pub fn basis(&self, n: usize) -> Vec<TensorMonomial> {
        (0..self.basis_size(n)).map(|r| self.unrank(n, r)).collect()
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn subset_rank(n: usize, s: &[u32]) -> usize {
    let k = s.len();
    let mut rank = 0usize;
    let mut prev = 0u32;
    for (i, &si) in s.iter().enumerate() {
        for v in prev + 1..si {
            rank += choose_usize(n - v as usize, k - 1 - i);
        }
        prev = si;
    }
    rank
}

fn subset_unrank(n: usize, k: usize, mut r: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    let mut v: u32 = 1;
    for i in 0..k {
        loop {
            let c = choose_usize(n - v as usize, k - 1 - i);
            if r < c {
                out.push(v);
                v += 1;
                break;
            }
            r -= c;
            v += 1;
        }
    }
    out
}

/// Basis element of `Lambda^nu`: one index set per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorMonomial(Vec<IndexSet>);

impl TensorMonomial {
    pub fn new(factors: Vec<IndexSet>) -> Self {
        TensorMonomial(factors)
    }

    pub fn factors(&self) -> &[IndexSet] {
        &self.0
    }

    pub fn shape(&self) -> Shape {
        Shape(self.0.iter().map(IndexSet::degree).collect())
    }
}

impl std::fmt::Display for TensorMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|f| f.to_string()).collect();
        write!(f, "{}", s.join("(x)"))
    }
}

/// Sparse exact-rational vector over the monomial basis of one shape.
#[derive(Debug, Clone, PartialEq)]
pub struct QVec {
    shape: Shape,
    n: usize,
    terms: BTreeMap<u32, Rat>,
}

impl QVec {
    pub fn zero(shape: Shape, n: usize) -> Self {
        QVec {
            shape,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(mono: &TensorMonomial, n: usize) -> Self {
        let shape = mono.shape();
        let r = shape.rank(n, mono) as u32;
        let mut terms = BTreeMap::new();
        terms.insert(r, Rat::one());
        QVec { shape, n, terms }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, mono: &TensorMonomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let r = self.shape.rank(self.n, mono) as u32;
        self.add_index_term(r, coeff);
    }

    fn add_index_term(&mut self, r: u32, coeff: Rat) {
        let entry = self.terms.entry(r).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn coeff(&self, mono: &TensorMonomial) -> Rat {
        let r = self.shape.rank(self.n, mono) as u32;
        self.terms.get(&r).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms as `(monomial, coefficient)`, in basis order.
    pub fn monomial_terms(&self) -> Vec<(TensorMonomial, Rat)> {
        self.terms
            .iter()
            .map(|(&r, a)| (self.shape.unrank(self.n, r as usize), a.clone()))
            .collect()
    }

    pub fn scaled(&self, c: &Rat) -> QVec {
        if c.is_zero() {
            return QVec::zero(self.shape.clone(), self.n);
        }
        QVec {
            shape: self.shape.clone(),
            n: self.n,
            terms: self.terms.iter().map(|(&r, a)| (r, a * c)).collect(),
        }
    }

    pub fn add(&self, other: &QVec) -> QVec {
        assert_eq!(self.shape, other.shape);
        let mut out = self.clone();
        for (&r, a) in &other.terms {
            out.add_index_term(r, a.clone());
        }
        out
    }

    pub fn sub(&self, other: &QVec) -> QVec {
        self.add(&other.scaled(&-Rat::one()))
    }

    pub fn to_sparse(&self) -> SparseVec {
        self.terms.iter().map(|(&r, a)| (r, a.clone())).collect()
    }

    pub fn from_sparse(shape: Shape, n: usize, v: &SparseVec) -> Self {
        QVec {
            shape,
            n,
            terms: v.iter().map(|(r, a)| (*r, a.clone())).collect(),
        }
    }
}

/// Comultiplication component `Delta_{a,b}` applied to a monomial:
/// the signed sum over all `(a,b)`-shuffles of `x`.
pub fn comult(x: &IndexSet, a: usize, b: usize, n: usize) -> Result<QVec, Error> {
    if x.degree() != a + b {
        return Err(Error::ShapeMismatch {
            expected: format!("monomial of degree {}", a + b),
            got: format!("degree {}", x.degree()),
        });
    }
    let mut out = QVec::zero(Shape::new(vec![a, b]), n);
    for (sign, first, second) in splits(x, a) {
        out.add_term(
            &TensorMonomial(vec![first, second]),
            Rat::from_integer(sign.into()),
        );
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Map descriptors and construction
// ---------------------------------------------------------------------------

/// Description of one of the equivariant maps used throughout.
///
/// Parameters follow the text: `delta_t, theta_t, Phi_t` act on
/// `Lambda^a x Lambda^b`; `phi_k, psi_k` are the exchange maps on the same
/// space; `beta_k, gamma_k` map `Lambda^a x Lambda^k x Lambda^{b-k}` to
/// `Lambda^a x Lambda^b`; `Extended` places a map on factors
/// `pos, pos+1, ...` of an ambient tensor product; `ThetaMu` is the direct
/// sum of extended `theta_1` maps whose cokernel is the Schur module.
#[derive(Debug, Clone, PartialEq)]
pub enum MapDescriptor {
    Delta { a: usize, b: usize, t: usize },
    Theta { a: usize, b: usize, t: usize },
    PhiT { a: usize, b: usize, t: usize },
    PhiLower { a: usize, b: usize, k: usize },
    Psi { a: usize, b: usize, k: usize },
    Beta { a: usize, b: usize, k: usize },
    Gamma { a: usize, b: usize, k: usize },
    Identity { shape: Vec<usize> },
    Extended {
        ambient: Vec<usize>,
        pos: usize,
        inner: Box<MapDescriptor>,
    },
    ThetaMu { mu: Partition },
}

impl MapDescriptor {
    /// Source shape (single-block descriptors only).
    pub fn source_shape(&self) -> Result<Shape, Error> {
        use MapDescriptor::*;
        Ok(match self {
            Delta { a, b, .. } | Theta { a, b, .. } | PhiT { a, b, .. }
            | PhiLower { a, b, .. } | Psi { a, b, .. } => Shape::new(vec![*a, *b]),
            Beta { a, b, k } | Gamma { a, b, k } => Shape::new(vec![*a, *k, *b - *k]),
            Identity { shape } => Shape::new(shape.clone()),
            Extended { ambient, pos, inner } => {
                let inner_src = inner.source_shape()?;
                let inner_tgt = inner.target_shape();
                let mut f = ambient.clone();
                f.splice(
                    *pos..*pos + inner_tgt.factors().len(),
                    inner_src.factors().iter().copied(),
                );
                Shape::new(f)
            }
            ThetaMu { .. } => {
                return Err(Error::BadDescriptor(
                    "theta_mu has a direct-sum source".into(),
                ))
            }
        })
    }

    pub fn target_shape(&self) -> Shape {
        use MapDescriptor::*;
        match self {
            Delta { a, b, t } => Shape::new(vec![a + t, b - t]),
            Theta { a, b, t } => Shape::new(vec![a - t, b + t]),
            PhiT { a, b, .. } | PhiLower { a, b, .. } | Psi { a, b, .. } => {
                Shape::new(vec![*a, *b])
            }
            Beta { a, b, .. } | Gamma { a, b, .. } => Shape::new(vec![*a, *b]),
            Identity { shape } => Shape::new(shape.clone()),
            Extended { ambient, .. } => Shape::new(ambient.clone()),
            ThetaMu { mu } => Shape::new(mu.parts().to_vec()),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        use MapDescriptor::*;
        let ok = match self {
            Delta { b, t, .. } => t <= b,
            Theta { a, t, .. } => t <= a,
            PhiT { a: _, b, t } => t <= b,
            PhiLower { a, b, k } | Psi { a, b, k } => k <= b && k <= a,
            Beta { a, b, k } | Gamma { a, b, k } => *k >= 1 && k <= b && k <= a,
            Identity { .. } => true,
            Extended { ambient, pos, inner } => {
                inner.validate()?;
                let t = inner.target_shape();
                let l = t.factors().len();
                if *pos + l > ambient.len() || ambient[*pos..*pos + l] != *t.factors() {
                    return Err(Error::BadDescriptor(format!(
                        "inner target {t} does not match ambient factors at position {pos}"
                    )));
                }
                true
            }
            ThetaMu { mu } => mu.len() >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadDescriptor(format!("{self:?}")))
        }
    }
}

/// Image of a single basis monomial under the map, as signed monomials.
///
/// This is the work-horse behind [`build_map`]; weight-space restrictions
/// call it directly so that only the needed columns are ever evaluated.
pub fn image_of(
    d: &MapDescriptor,
    n: usize,
    mono: &TensorMonomial,
) -> Result<Vec<(TensorMonomial, Rat)>, Error> {
    d.validate()?;
    let mut acc: BTreeMap<TensorMonomial, Rat> = BTreeMap::new();
    image_into(d, n, mono, &Rat::one(), &mut acc)?;
    Ok(acc.into_iter().filter(|(_, a)| !a.is_zero()).collect())
}

fn add_acc(acc: &mut BTreeMap<TensorMonomial, Rat>, m: TensorMonomial, a: Rat) {
    let e = acc.entry(m).or_insert_with(Rat::zero);
    *e += a;
}

fn rat_i(s: i32) -> Rat {
    Rat::from_integer(s.into())
}

fn image_into(
    d: &MapDescriptor,
    n: usize,
    mono: &TensorMonomial,
    scale: &Rat,
    acc: &mut BTreeMap<TensorMonomial, Rat>,
) -> Result<(), Error> {
    use MapDescriptor::*;
    let factors = mono.factors();
    match d {
        Identity { .. } => add_acc(acc, mono.clone(), scale.clone()),
        Delta { t, .. } => {
            let (x, y) = (&factors[0], &factors[1]);
            for (s1, piece, rest) in splits(y, *t) {
                if let Some((s2, xt)) = wedge(x, &piece) {
                    add_acc(
                        acc,
                        TensorMonomial(vec![xt, rest]),
                        scale * rat_i(s1 * s2),
                    );
                }
            }
        }
        Theta { a, t, .. } => {
            let (x, y) = (&factors[0], &factors[1]);
            for (s1, keep, piece) in splits(x, a - t) {
                if let Some((s2, ty)) = wedge(&piece, y) {
                    add_acc(
                        acc,
                        TensorMonomial(vec![keep, ty]),
                        scale * rat_i(s1 * s2),
                    );
                }
            }
        }
        PhiT { a, b, t } => {
            // theta_t after delta_t
            let delta = Delta { a: *a, b: *b, t: *t };
            let theta = Theta { a: a + t, b: b - t, t: *t };
            let mut mid: BTreeMap<TensorMonomial, Rat> = BTreeMap::new();
            image_into(&delta, n, mono, scale, &mut mid)?;
            for (m, c) in mid {
                if !c.is_zero() {
                    image_into(&theta, n, &m, &c, acc)?;
                }
            }
        }
        PhiLower { a, k, .. } => {
            let (x, y) = (&factors[0], &factors[1]);
            for (s1, keep_x, give_x) in splits(x, a - k) {
                for (s2, give_y, keep_y) in splits(y, *k) {
                    if let (Some((s3, f1)), Some((s4, f2))) =
                        (wedge(&keep_x, &give_y), wedge(&give_x, &keep_y))
                    {
                        add_acc(
                            acc,
                            TensorMonomial(vec![f1, f2]),
                            scale * rat_i(s1 * s2 * s3 * s4),
                        );
                    }
                }
            }
        }
        Psi { a, b, k } => {
            let c = Rat::from_integer(binomial(*b as i64, *k as i64));
            add_acc(acc, mono.clone(), scale * c);
            image_into(&PhiLower { a: *a, b: *b, k: *k }, n, mono, &-scale.clone(), acc)?;
        }
        Beta { a, k, .. } => {
            let (x, y, z) = (&factors[0], &factors[1], &factors[2]);
            for (s1, keep_x, give_x) in splits(x, a - k) {
                if let (Some((s2, f1)), Some((s3, f2))) =
                    (wedge(&keep_x, y), wedge(&give_x, z))
                {
                    add_acc(
                        acc,
                        TensorMonomial(vec![f1, f2]),
                        scale * rat_i(s1 * s2 * s3),
                    );
                }
            }
        }
        Gamma { a, b, k } => {
            let (x, y, z) = (&factors[0], &factors[1], &factors[2]);
            if let Some((s, yz)) = wedge(y, z) {
                add_acc(acc, TensorMonomial(vec![x.clone(), yz]), scale * rat_i(s));
            }
            image_into(&Beta { a: *a, b: *b, k: *k }, n, mono, &-scale.clone(), acc)?;
        }
        Extended { ambient, pos, inner } => {
            let inner_src = inner.source_shape()?;
            let l_src = inner_src.factors().len();
            let l_tgt = inner.target_shape().factors().len();
            let _ = ambient;
            let middle = TensorMonomial(factors[*pos..*pos + l_src].to_vec());
            for (m, c) in image_of(inner, n, &middle)? {
                debug_assert_eq!(m.factors().len(), l_tgt);
                let mut f = factors[..*pos].to_vec();
                f.extend(m.0);
                f.extend_from_slice(&factors[*pos + l_src..]);
                add_acc(acc, TensorMonomial(f), scale * c);
            }
        }
        ThetaMu { .. } => {
            return Err(Error::BadDescriptor(
                "theta_mu is a direct sum; evaluate its blocks".into(),
            ))
        }
    }
    Ok(())
}

/// An equivariant map materialized as an exact sparse matrix over the
/// deterministic monomial bases.
///
/// `sources` is a list of source shapes (direct sum); it has one entry
/// for every map except `theta_mu`. Columns are images of the source
/// basis, blocks concatenated in order.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    sources: Vec<Shape>,
    target: Shape,
    n: usize,
    cols: Vec<SparseVec>,
}

impl LinearMap {
    pub fn sources(&self) -> &[Shape] {
        &self.sources
    }

    /// The source shape of a single-block map.
    pub fn source_shape(&self) -> Result<&Shape, Error> {
        if self.sources.len() == 1 {
            Ok(&self.sources[0])
        } else {
            Err(Error::BadDescriptor(
                "map has a direct-sum source".into(),
            ))
        }
    }

    pub fn target_shape(&self) -> &Shape {
        &self.target
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source_dim(&self) -> usize {
        self.cols.len()
    }

    pub fn target_dim(&self) -> usize {
        self.target.basis_size(self.n)
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn identity(shape: Shape, n: usize) -> LinearMap {
        let size = shape.basis_size(n);
        let cols = (0..size).map(|i| vec![(i as u32, Rat::one())]).collect();
        LinearMap {
            sources: vec![shape.clone()],
            target: shape,
            n,
            cols,
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &QVec) -> Result<QVec, Error> {
        let src = self.source_shape()?;
        if v.shape() != src || v.n() != self.n {
            return Err(Error::ShapeMismatch {
                expected: format!("vector of shape {} over n={}", src, self.n),
                got: format!("shape {} over n={}", v.shape(), v.n()),
            });
        }
        let mut out = QVec::zero(self.target.clone(), self.n);
        for (r, a) in &v.terms {
            for (i, c) in &self.cols[*r as usize] {
                out.add_index_term(*i, a * c);
            }
        }
        Ok(out)
    }

    /// Matrix product `self . first` (apply `first`, then `self`).
    pub fn compose(&self, first: &LinearMap) -> Result<LinearMap, Error> {
        let mid = self.source_shape()?;
        if first.target != *mid || first.n != self.n {
            return Err(Error::ShapeMismatch {
                expected: format!("{} over n={}", mid, self.n),
                got: format!("{} over n={}", first.target, first.n),
            });
        }
        let cols = first
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
                for (r, a) in col {
                    for (i, c) in &self.cols[*r as usize] {
                        let e = acc.entry(*i).or_insert_with(Rat::zero);
                        *e += a * c;
                    }
                }
                acc.into_iter().filter(|(_, a)| !a.is_zero()).collect()
            })
            .collect();
        Ok(LinearMap {
            sources: first.sources.clone(),
            target: self.target.clone(),
            n: self.n,
            cols,
        })
    }

    /// Pointwise linear combination of maps with equal source and target.
    pub fn linear_combination(terms: &[(Rat, &LinearMap)]) -> Result<LinearMap, Error> {
        let (_, first) = terms.first().expect("empty combination");
        for (_, m) in terms {
            if m.sources != first.sources || m.target != first.target || m.n != first.n {
                return Err(Error::ShapeMismatch {
                    expected: format!("all maps {} -> {}", first.sources[0], first.target),
                    got: "mismatched map in combination".into(),
                });
            }
        }
        let cols = (0..first.cols.len())
            .map(|j| {
                let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
                for (c, m) in terms {
                    for (i, a) in &m.cols[j] {
                        let e = acc.entry(*i).or_insert_with(Rat::zero);
                        *e += a * c;
                    }
                }
                acc.into_iter().filter(|(_, a)| !a.is_zero()).collect()
            })
            .collect();
        Ok(LinearMap {
            sources: first.sources.clone(),
            target: first.target.clone(),
            n: first.n,
            cols,
        })
    }

    pub fn scaled(&self, c: &Rat) -> LinearMap {
        LinearMap {
            sources: self.sources.clone(),
            target: self.target.clone(),
            n: self.n,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, a)| (*i, a * c)).collect())
                .collect(),
        }
    }

    /// The underlying matrix (rows indexed by the target basis).
    pub fn to_mat(&self) -> SparseMat {
        SparseMat::new(self.target_dim(), self.cols.clone())
    }
}

/// Materialize a map as a sparse matrix over the monomial bases.
///
/// The default ambient dimension callers should use is the total degree
/// of the shape; all faithfulness statements assume `n` at least that big.
pub fn build_map(d: &MapDescriptor, n: usize) -> Result<LinearMap, Error> {
    if n < 1 {
        return Err(Error::BadAmbient);
    }
    d.validate()?;
    if let MapDescriptor::ThetaMu { mu } = d {
        return build_theta_mu(mu, n);
    }
    let source = d.source_shape()?;
    let target = d.target_shape();
    let cols = source
        .basis(n)
        .iter()
        .map(|mono| {
            let mut col: SparseVec = image_of(d, n, mono)?
                .into_iter()
                .map(|(m, a)| (target.rank(n, &m) as u32, a))
                .collect();
            col.sort_by_key(|(i, _)| *i);
            Ok(col)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(LinearMap {
        sources: vec![source],
        target,
        n,
        cols,
    })
}

/// The extended `theta_1` block at column pair `c` of `mu`.
pub fn theta_mu_block(mu: &Partition, c: usize, n: usize) -> Result<LinearMap, Error> {
    let parts = mu.parts();
    assert!(c + 1 < parts.len());
    let inner = MapDescriptor::Theta {
        a: parts[c] + 1,
        b: parts[c + 1] - 1,
        t: 1,
    };
    build_map(
        &MapDescriptor::Extended {
            ambient: parts.to_vec(),
            pos: c,
            inner: Box::new(inner),
        },
        n,
    )
}

/// `theta_mu`: the direct sum over column pairs of extended `theta_1`
/// maps into `Lambda^mu`; its cokernel is the Schur module `L_mu`.
pub fn build_theta_mu(mu: &Partition, n: usize) -> Result<LinearMap, Error> {
    let target = Shape::new(mu.parts().to_vec());
    let mut sources = Vec::new();
    let mut cols = Vec::new();
    for c in 0..mu.len().saturating_sub(1) {
        let block = theta_mu_block(mu, c, n)?;
        sources.push(block.sources[0].clone());
        cols.extend(block.cols);
    }
    Ok(LinearMap {
        sources,
        target,
        n,
        cols,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn ixs(v: &[u32], n: usize) -> IndexSet {
        IndexSet::new(v.to_vec(), n).unwrap()
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    #[test]
    fn wedge_examples() {
        let n = 3;
        let (s, m) = wedge(&ixs(&[1, 3], n), &ixs(&[2], n)).unwrap();
        assert_eq!((s, m.indices()), (-1, &[1, 2, 3][..]));
        assert!(wedge(&ixs(&[1, 2], n), &ixs(&[2, 3], n)).is_none());
        let (s, m) = wedge(&IndexSet::empty(), &ixs(&[1], n)).unwrap();
        assert_eq!((s, m.indices()), (1, &[1][..]));
    }

    #[test]
    fn comult_examples() {
        let v = comult(&ixs(&[1, 2], 2), 1, 1, 2).unwrap();
        let terms = v.monomial_terms();
        assert_eq!(terms.len(), 2);
        assert_eq!(
            v.coeff(&TensorMonomial::new(vec![ixs(&[1], 2), ixs(&[2], 2)])),
            rat(1)
        );
        assert_eq!(
            v.coeff(&TensorMonomial::new(vec![ixs(&[2], 2), ixs(&[1], 2)])),
            rat(-1)
        );

        // trivial split
        let x = ixs(&[1, 3, 4], 4);
        let v = comult(&x, 3, 0, 4).unwrap();
        assert_eq!(v.num_terms(), 1);
        assert_eq!(
            v.coeff(&TensorMonomial::new(vec![x.clone(), IndexSet::empty()])),
            rat(1)
        );

        // three shuffles of {1,2,3} into (2,1)
        let v = comult(&ixs(&[1, 2, 3], 3), 2, 1, 3).unwrap();
        let expect = [
            (vec![1, 2], vec![3], 1),
            (vec![1, 3], vec![2], -1),
            (vec![2, 3], vec![1], 1),
        ];
        assert_eq!(v.num_terms(), 3);
        for (a, b, c) in expect {
            assert_eq!(
                v.coeff(&TensorMonomial::new(vec![ixs(&a, 3), ixs(&b, 3)])),
                rat(c)
            );
        }
    }

    #[test]
    fn comult_term_count_and_unit_coefficients() {
        for deg in 0..=8usize {
            let n = deg.max(1);
            let x = IndexSet::new((1..=deg as u32).collect(), n).unwrap();
            for a in 0..=deg {
                let v = comult(&x, a, deg - a, n).unwrap();
                assert_eq!(v.num_terms(), choose_usize(deg, a));
                for (_, c) in v.monomial_terms() {
                    assert!(c == rat(1) || c == rat(-1));
                }
            }
        }
    }

    #[test]
    fn subset_rank_unrank_roundtrip() {
        for n in 1..=8usize {
            for k in 0..=n {
                for (r, s) in k_subsets(n, k).iter().enumerate() {
                    let s1: Vec<u32> = s.iter().map(|&i| i as u32 + 1).collect();
                    assert_eq!(subset_rank(n, &s1), r);
                    assert_eq!(subset_unrank(n, k, r), s1);
                }
            }
        }
    }

    #[test]
    fn phi_zero_is_identity() {
        for (a, b) in [(1usize, 1usize), (2, 1), (2, 2), (3, 2)] {
            let n = a + b;
            let phi0 = build_map(&MapDescriptor::PhiT { a, b, t: 0 }, n).unwrap();
            let id = LinearMap::identity(Shape::new(vec![a, b]), n);
            assert_eq!(phi0, id);
        }
    }

    #[test]
    fn theta_hand_example() {
        let m = build_map(&MapDescriptor::Theta { a: 2, b: 1, t: 1 }, 3).unwrap();
        let src = TensorMonomial::new(vec![ixs(&[1, 2], 3), ixs(&[3], 3)]);
        let out = m.apply(&QVec::from_monomial(&src, 3)).unwrap();
        let e1_e23 = TensorMonomial::new(vec![ixs(&[1], 3), ixs(&[2, 3], 3)]);
        let e2_e13 = TensorMonomial::new(vec![ixs(&[2], 3), ixs(&[1, 3], 3)]);
        assert_eq!(out.coeff(&e1_e23), rat(1));
        assert_eq!(out.coeff(&e2_e13), rat(-1));
        assert_eq!(out.num_terms(), 2);
    }

    #[test]
    fn psi_hand_example() {
        let m = build_map(&MapDescriptor::Psi { a: 1, b: 1, k: 1 }, 2).unwrap();
        let src = TensorMonomial::new(vec![ixs(&[1], 2), ixs(&[2], 2)]);
        let out = m.apply(&QVec::from_monomial(&src, 2)).unwrap();
        let swapped = TensorMonomial::new(vec![ixs(&[2], 2), ixs(&[1], 2)]);
        assert_eq!(out.coeff(&src), rat(1));
        assert_eq!(out.coeff(&swapped), rat(-1));
    }

    #[test]
    fn apply_is_linear_and_kills_zero() {
        let m = build_map(&MapDescriptor::Delta { a: 2, b: 2, t: 1 }, 4).unwrap();
        let shape = Shape::new(vec![2, 2]);
        let zero = QVec::zero(shape.clone(), 4);
        assert!(m.apply(&zero).unwrap().is_zero());
        let b = shape.basis(4);
        let v = QVec::from_monomial(&b[0], 4);
        let w = QVec::from_monomial(&b[5], 4).scaled(&rat(3));
        let lhs = m.apply(&v.add(&w)).unwrap();
        let rhs = m.apply(&v).unwrap().add(&m.apply(&w).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_composition_rule() {
        // delta_s . delta_t = C(s+t, t) delta_{s+t}, theta likewise
        for (a, b) in [(1usize, 2usize), (2, 2), (1, 3), (2, 3), (3, 3), (2, 4)] {
            let n = a + b;
            for t in 0..=b {
                for s in 0..=(b - t) {
                    let dt = build_map(&MapDescriptor::Delta { a, b, t }, n).unwrap();
                    let ds =
                        build_map(&MapDescriptor::Delta { a: a + t, b: b - t, t: s }, n).unwrap();
                    let dst = build_map(&MapDescriptor::Delta { a, b, t: s + t }, n).unwrap();
                    let c = Rat::from_integer(binomial((s + t) as i64, t as i64));
                    assert_eq!(ds.compose(&dt).unwrap(), dst.scaled(&c), "delta a={a} b={b} s={s} t={t}");
                }
            }
            for t in 0..=b.min(a) {
                for s in 0..=(b.min(a) - t) {
                    let tt = build_map(&MapDescriptor::Theta { a, b, t }, n).unwrap();
                    let ts =
                        build_map(&MapDescriptor::Theta { a: a - t, b: b + t, t: s }, n).unwrap();
                    let tst = build_map(&MapDescriptor::Theta { a, b, t: s + t }, n).unwrap();
                    let c = Rat::from_integer(binomial((s + t) as i64, t as i64));
                    assert_eq!(ts.compose(&tt).unwrap(), tst.scaled(&c), "theta a={a} b={b} s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn compose_with_identity() {
        let m = build_map(&MapDescriptor::Theta { a: 2, b: 2, t: 1 }, 4).unwrap();
        let id_src = LinearMap::identity(Shape::new(vec![2, 2]), 4);
        let id_tgt = LinearMap::identity(Shape::new(vec![1, 3]), 4);
        assert_eq!(m.compose(&id_src).unwrap(), m);
        assert_eq!(id_tgt.compose(&m).unwrap(), m);
    }

    #[test]
    fn hopf_compatibility_of_comultiplication() {
        // Delta on a product equals the signed double-split formula.
        let cases: &[(&[u32], &[u32])] = &[
            (&[1, 3], &[2, 5]),
            (&[2], &[1, 4, 6]),
            (&[1, 2, 3], &[4, 5, 6]),
            (&[4, 6], &[1, 2, 3]),
            (&[5], &[2, 3]),
        ];
        for &(xs, ys) in cases {
            let deg = xs.len() + ys.len();
            let n = 6;
            let x = ixs(xs, n);
            let y = ixs(ys, n);
            let (s_xy, xy) = wedge(&x, &y).unwrap();
            let (a1, a2) = (x.degree(), y.degree());
            for t in 0..=deg {
                let direct = comult(&xy, deg - t, t, n).unwrap().scaled(&rat(s_xy as i64));
                let mut formula = QVec::zero(Shape::new(vec![deg - t, t]), n);
                for t1 in 0..=t.min(a1) {
                    let t2 = t - t1;
                    if t2 > a2 {
                        continue;
                    }
                    let sign_exp = (a2 - t2) * t1;
                    for (s1, xu, xu2) in splits(&x, a1 - t1) {
                        for (s2, yv, yv2) in splits(&y, a2 - t2) {
                            let (Some((s3, f1)), Some((s4, f2))) =
                                (wedge(&xu, &yv), wedge(&xu2, &yv2))
                            else {
                                continue;
                            };
                            let mut s = s1 * s2 * s3 * s4;
                            if sign_exp % 2 == 1 {
                                s = -s;
                            }
                            formula.add_term(
                                &TensorMonomial::new(vec![f1, f2]),
                                rat(s as i64),
                            );
                        }
                    }
                }
                assert_eq!(direct, formula, "x={x} y={y} t={t}");
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_disjoint_sets() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
            proptest::collection::btree_set(1u32..=10, 0..=8).prop_flat_map(|s| {
                let v: Vec<u32> = s.into_iter().collect();
                let len = v.len();
                proptest::collection::vec(proptest::bool::ANY, len).prop_map(move |mask| {
                    let (mut x, mut y) = (Vec::new(), Vec::new());
                    for (i, &e) in v.iter().enumerate() {
                        if mask[i] {
                            x.push(e);
                        } else {
                            y.push(e);
                        }
                    }
                    (x, y)
                })
            })
        }

        proptest! {
            #[test]
            fn wedge_is_graded_antisymmetric((xs, ys) in arb_disjoint_sets()) {
                let n = 10;
                let x = IndexSet::new(xs, n).unwrap();
                let y = IndexSet::new(ys, n).unwrap();
                let (s_xy, m_xy) = wedge(&x, &y).unwrap();
                let (s_yx, m_yx) = wedge(&y, &x).unwrap();
                prop_assert_eq!(&m_xy, &m_yx);
                let flip = (x.degree() * y.degree()) % 2 == 1;
                prop_assert_eq!(s_xy == s_yx, !flip);
            }

            #[test]
            fn comult_components_swap_with_sign((xs, ys) in arb_disjoint_sets()) {
                // the (a,b) and (b,a) splits of the same monomial agree
                // term-by-term up to the sign (-1)^{ab}
                let n = 10;
                let (_, xy) = wedge(
                    &IndexSet::new(xs, n).unwrap(),
                    &IndexSet::new(ys, n).unwrap(),
                )
                .unwrap();
                let d = xy.degree();
                for a in 0..=d {
                    let b = d - a;
                    let fwd = comult(&xy, a, b, n).unwrap();
                    let bwd = comult(&xy, b, a, n).unwrap();
                    let sign = if (a * b) % 2 == 0 { 1i64 } else { -1 };
                    for (mono, coeff) in fwd.monomial_terms() {
                        let swapped = TensorMonomial::new(vec![
                            mono.factors()[1].clone(),
                            mono.factors()[0].clone(),
                        ]);
                        prop_assert_eq!(bwd.coeff(&swapped) * rat(sign), coeff);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_descriptors_rejected() {
        assert!(build_map(&MapDescriptor::Delta { a: 1, b: 1, t: 2 }, 2).is_err());
        assert!(build_map(&MapDescriptor::Psi { a: 2, b: 3, k: 3 }, 5).is_err());
        assert!(build_map(&MapDescriptor::Gamma { a: 2, b: 2, k: 0 }, 4).is_err());
        assert!(build_map(&MapDescriptor::Theta { a: 1, b: 2, t: 1 }, 0).is_err());
    }

    #[test]
    fn theta_mu_assembles_blocks() {
        let mu = Partition::new(vec![2, 1, 1]).unwrap();
        let m = build_theta_mu(&mu, 4).unwrap();
        assert_eq!(m.sources().len(), 2);
        // block sources: (3,0,1) and (2,2,0)
        assert_eq!(m.sources()[0].factors(), &[3, 0, 1]);
        assert_eq!(m.sources()[1].factors(), &[2, 2, 0]);
        assert_eq!(m.target_dim(), Shape::new(vec![2, 1, 1]).basis_size(4));
        assert_eq!(
            m.source_dim(),
            Shape::new(vec![3, 0, 1]).basis_size(4) + Shape::new(vec![2, 2, 0]).basis_size(4)
        );
    }

    #[test]
    fn lemma_basis_change_involution() {
        // A(k,t) = (-1)^k C(b-k, b-t) squares to the identity
        for b in 0..=12i64 {
            let dim = (b + 1) as usize;
            let a_mat = |k: i64, t: i64| {
                let v = binomial(b - k, b - t);
                if k % 2 == 0 {
                    v
                } else {
                    -v
                }
            };
            for i in 0..dim as i64 {
                for j in 0..dim as i64 {
                    let mut acc = num::BigInt::from(0);
                    for l in 0..dim as i64 {
                        acc += a_mat(i, l) * a_mat(l, j);
                    }
                    let expect = if i == j { 1 } else { 0 };
                    assert_eq!(acc, num::BigInt::from(expect), "b={b} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn phi_lower_in_terms_of_phi_t() {
        // phi_k = sum_t (-1)^t C(b-t, k-t) Phi_t as exact matrices
        for (a, b) in [(1usize, 1usize), (2, 1), (2, 2), (3, 2), (3, 3), (4, 2)] {
            let n = a + b;
            for k in 0..=b.min(a) {
                let phi_k = build_map(&MapDescriptor::PhiLower { a, b, k }, n).unwrap();
                let terms: Vec<(Rat, LinearMap)> = (0..=k)
                    .map(|t| {
                        let c = binomial((b - t) as i64, (k - t) as i64);
                        let c = if t % 2 == 0 { c } else { -c };
                        (
                            Rat::from_integer(c),
                            build_map(&MapDescriptor::PhiT { a, b, t }, n).unwrap(),
                        )
                    })
                    .collect();
                let refs: Vec<(Rat, &LinearMap)> =
                    terms.iter().map(|(c, m)| (c.clone(), m)).collect();
                let combo = LinearMap::linear_combination(&refs).unwrap();
                assert_eq!(phi_k, combo, "a={a} b={b} k={k}");
            }
        }
    }
}
