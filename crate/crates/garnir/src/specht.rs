//! Column tabloids, Garnir-type relation families, quotient dimensions,
//! and the weight-space bridge to the general linear group side.
//!
//! A column tabloid is a filling of the diagram of `lambda` whose columns
//! are sorted ascending; sorting a raw filling contributes the sign of the
//! per-column sorting permutations. The tabloid basis is enumerated in the
//! same order as the weight-`(1^r)` monomial basis of `Lambda^mu`, so the
//! Schur functor is literally an index-preserving identification here.

use crate::combinat::{binomial, k_subsets, tabloid_count, ExchangeVector, Partition};
use crate::exactla::{SparseMat, SparseVec};
use crate::exalg::{image_of, IndexSet, MapDescriptor, Shape, TensorMonomial};
use crate::{Error, Rat};
use num::Zero;
use std::collections::HashMap;

/// Canonical column tabloid: columns listed left to right, each strictly
/// increasing, together partitioning `{1..r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnTabloid {
    cols: Vec<Vec<u32>>,
}

impl ColumnTabloid {
    pub fn columns(&self) -> &[Vec<u32>] {
        &self.cols
    }
}

impl std::fmt::Display for ColumnTabloid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cols: Vec<String> = self
            .cols
            .iter()
            .map(|c| {
                c.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "({})", cols.join("|"))
    }
}

/// A tabloid with the sign picked up while sorting its columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTabloid {
    pub sign: i32,
    pub tabloid: ColumnTabloid,
}

fn sort_parity(col: &[u32]) -> i32 {
    let mut inv = 0usize;
    for i in 0..col.len() {
        for j in i + 1..col.len() {
            if col[i] > col[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sort each column of a raw filling, collecting the sign.
pub fn canonical_tabloid(raw: &[Vec<u32>], lambda: &Partition) -> Result<SignedTabloid, Error> {
    let mu = lambda.conjugate();
    let r = lambda.size();
    if raw.len() != mu.len() || raw.iter().zip(mu.parts()).any(|(c, &h)| c.len() != h) {
        return Err(Error::BadFilling(format!(
            "column sizes must be {:?}",
            mu.parts()
        )));
    }
    let mut seen = vec![false; r + 1];
    for &e in raw.iter().flatten() {
        if e == 0 || e as usize > r || seen[e as usize] {
            return Err(Error::BadFilling(format!(
                "entries must partition 1..={r}"
            )));
        }
        seen[e as usize] = true;
    }
    let mut sign = 1;
    let cols = raw
        .iter()
        .map(|col| {
            sign *= sort_parity(col);
            let mut sorted = col.clone();
            sorted.sort_unstable();
            sorted
        })
        .collect();
    Ok(SignedTabloid {
        sign,
        tabloid: ColumnTabloid { cols },
    })
}

/// All ordered set partitions of `{1..r}` with the given block sizes,
/// blocks sorted ascending, enumerated lexicographically.
fn ordered_set_partitions(sizes: &[usize], r: usize) -> Vec<Vec<Vec<u32>>> {
    fn rec(sizes: &[usize], avail: &[u32], acc: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&s, rest)) = sizes.split_first() else {
            out.push(acc.clone());
            return;
        };
        for pos in k_subsets(avail.len(), s) {
            let block: Vec<u32> = pos.iter().map(|&i| avail[i]).collect();
            let remaining: Vec<u32> = avail
                .iter()
                .enumerate()
                .filter(|(i, _)| !pos.contains(i))
                .map(|(_, &v)| v)
                .collect();
            acc.push(block);
            rec(rest, &remaining, acc, out);
            acc.pop();
        }
    }
    let avail: Vec<u32> = (1..=r as u32).collect();
    let mut out = Vec::new();
    rec(sizes, &avail, &mut Vec::new(), &mut out);
    out
}

/// The ordered basis of canonical column tabloids of shape `lambda`,
/// with constant-time index lookup.
pub struct TabloidBasis {
    lambda: Partition,
    mu: Partition,
    list: Vec<ColumnTabloid>,
    index: HashMap<ColumnTabloid, u32>,
}

pub fn tabloid_basis(lambda: &Partition) -> TabloidBasis {
    let mu = lambda.conjugate();
    let list: Vec<ColumnTabloid> = ordered_set_partitions(mu.parts(), lambda.size())
        .into_iter()
        .map(|cols| ColumnTabloid { cols })
        .collect();
    debug_assert_eq!(list.len() as u64, tabloid_count(lambda));
    let index = list
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i as u32))
        .collect();
    TabloidBasis {
        lambda: lambda.clone(),
        mu,
        list,
        index,
    }
}

impl TabloidBasis {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn tabloids(&self) -> &[ColumnTabloid] {
        &self.list
    }

    pub fn index_of(&self, t: &ColumnTabloid) -> u32 {
        *self
            .index
            .get(t)
            .unwrap_or_else(|| panic!("tabloid {t} not of shape {}", self.lambda))
    }
}

/// Which relations to span: Garnir exchanges of fixed sizes, their
/// symmetrizations, or the classical single-exchange family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationFamily {
    /// `GR(k)`: for each designated exchanged set of `k_c` entries of
    /// column `c+1`, the tabloid minus its exchanges with column `c`.
    Gr(ExchangeVector),
    /// `SGR(k)`: `C(mu_{c+1}, k_c) T` minus the sum over all pairs of
    /// `k_c`-subsets of both columns.
    Sgr(ExchangeVector),
    /// All single exchanges (`GR` with every `k_c = 1`); spans the
    /// classical presentation in characteristic zero.
    Classic,
}

impl RelationFamily {
    fn exchange_sizes(&self, lambda: &Partition) -> Result<Vec<usize>, Error> {
        match self {
            RelationFamily::Gr(k) | RelationFamily::Sgr(k) => {
                // revalidate against this shape
                ExchangeVector::new(lambda, k.ks().to_vec()).map(|v| v.ks().to_vec())
            }
            RelationFamily::Classic => Ok(vec![1; lambda.first() - 1]),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            RelationFamily::Gr(_) => "gr",
            RelationFamily::Sgr(_) => "sgr",
            RelationFamily::Classic => "classic",
        }
    }
}

/// The exchanged tableau: `give` positions of column `c` receive the
/// designated entries of column `c+1` in ascending order and vice versa,
/// then both columns are re-sorted with signs.
fn exchange(
    tab: &ColumnTabloid,
    c: usize,
    give_positions: &[usize],
    take_positions: &[usize],
) -> (i32, ColumnTabloid) {
    let mut cols = tab.cols.clone();
    let taken: Vec<u32> = take_positions.iter().map(|&p| cols[c + 1][p]).collect();
    let given: Vec<u32> = give_positions.iter().map(|&p| cols[c][p]).collect();
    for (&p, &v) in give_positions.iter().zip(&taken) {
        cols[c][p] = v;
    }
    for (&p, &v) in take_positions.iter().zip(&given) {
        cols[c + 1][p] = v;
    }
    let sign = sort_parity(&cols[c]) * sort_parity(&cols[c + 1]);
    cols[c].sort_unstable();
    cols[c + 1].sort_unstable();
    (sign, ColumnTabloid { cols })
}

/// Generate the relation family as sparse vectors over the tabloid basis.
///
/// Relations are emitted per canonical tabloid, per column pair, and (for
/// `GR`) per designated exchanged subset of column `c+1`; every Garnir
/// relation of a non-canonical tableau equals one of these up to sign.
pub fn relation_vectors(
    basis: &TabloidBasis,
    family: &RelationFamily,
) -> Result<Vec<SparseVec>, Error> {
    let lambda = basis.lambda();
    let ks = family.exchange_sizes(lambda)?;
    let heights = basis.mu().parts();
    let symmetrized = matches!(family, RelationFamily::Sgr(_));
    let mut rows = Vec::new();
    for (it, tab) in basis.tabloids().iter().enumerate() {
        for c in 0..heights.len().saturating_sub(1) {
            let k = ks[c];
            let take_sets = k_subsets(heights[c + 1], k);
            let give_sets = k_subsets(heights[c], k);
            let mut emit = |takes: &[Vec<usize>]| {
                let mut acc: HashMap<u32, Rat> = HashMap::new();
                let lead = if symmetrized {
                    Rat::from_integer(binomial(heights[c + 1] as i64, k as i64))
                } else {
                    Rat::from_integer(1.into())
                };
                acc.insert(it as u32, lead);
                for take in takes {
                    for give in &give_sets {
                        let (sign, s) = exchange(tab, c, give, take);
                        let idx = basis.index_of(&s);
                        let e = acc.entry(idx).or_insert_with(Rat::zero);
                        *e -= Rat::from_integer(sign.into());
                    }
                }
                let mut row: SparseVec = acc.into_iter().filter(|(_, a)| !a.is_zero()).collect();
                row.sort_by_key(|(i, _)| *i);
                rows.push(row);
            };
            if symmetrized {
                emit(&take_sets);
            } else {
                for take in &take_sets {
                    emit(std::slice::from_ref(take));
                }
            }
        }
    }
    Ok(rows)
}

/// `dim M^lambda / span(family) = tabloid count - rank of the relations`,
/// with the rank computed exactly.
pub fn quotient_dim(lambda: &Partition, family: &RelationFamily) -> Result<u64, Error> {
    let basis = tabloid_basis(lambda);
    let rows = relation_vectors(&basis, family)?;
    let mat = SparseMat::new(basis.len(), rows);
    Ok(basis.len() as u64 - mat.rank() as u64)
}

/// A map restricted to the weight-`(1^r)` subspaces: the Schur functor
/// applied to a single-block descriptor.
///
/// Source and target bases are ordered set partitions with the shapes'
/// block sizes; when the target shape is the column-height partition
/// `mu = lambda'`, the target basis coincides index-for-index with
/// [`tabloid_basis`]`(lambda)`.
pub struct WeightMap {
    source_shape: Shape,
    target_shape: Shape,
    source_basis: Vec<TensorMonomial>,
    target_size: usize,
    cols: Vec<SparseVec>,
}

impl WeightMap {
    pub fn source_shape(&self) -> &Shape {
        &self.source_shape
    }

    pub fn target_shape(&self) -> &Shape {
        &self.target_shape
    }

    pub fn source_basis(&self) -> &[TensorMonomial] {
        &self.source_basis
    }

    pub fn source_dim(&self) -> usize {
        self.cols.len()
    }

    pub fn target_dim(&self) -> usize {
        self.target_size
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn to_mat(&self) -> SparseMat {
        SparseMat::new(self.target_size, self.cols.clone())
    }
}

fn weight_basis(shape: &Shape, r: usize) -> Vec<TensorMonomial> {
    ordered_set_partitions(shape.factors(), r)
        .into_iter()
        .map(|blocks| {
            TensorMonomial::new(
                blocks
                    .into_iter()
                    .map(|b| IndexSet::new(b, r).expect("sorted block"))
                    .collect(),
            )
        })
        .collect()
}

/// Restrict a map to the weight-`(1^r)` subspace, with `n = r`.
///
/// Columns are evaluated monomial by monomial, so the full `Lambda^mu`
/// basis is never materialized.
pub fn schur_functor_restrict(d: &MapDescriptor, r: usize) -> Result<WeightMap, Error> {
    let source_shape = d.source_shape()?;
    let target_shape = d.target_shape();
    if source_shape.total_degree() != r || target_shape.total_degree() != r {
        return Err(Error::ShapeMismatch {
            expected: format!("total degree {r} on both sides"),
            got: format!("{source_shape} -> {target_shape}"),
        });
    }
    let source_basis = weight_basis(&source_shape, r);
    let target_basis = weight_basis(&target_shape, r);
    let target_index: HashMap<TensorMonomial, u32> = target_basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i as u32))
        .collect();
    let cols = source_basis
        .iter()
        .map(|mono| {
            let mut col: SparseVec = image_of(d, r, mono)?
                .into_iter()
                .map(|(m, a)| {
                    let idx = *target_index
                        .get(&m)
                        .expect("weight-preserving map left the weight space");
                    (idx, a)
                })
                .collect();
            col.sort_by_key(|(i, _)| *i);
            Ok(col)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(WeightMap {
        source_shape,
        target_shape,
        source_basis,
        target_size: target_basis.len(),
        cols,
    })
}

/// Action of the adjacent transposition `(i, i+1)` on a vector over the
/// tabloid basis: relabel entries and re-canonicalize with signs.
pub fn sym_action(basis: &TabloidBasis, i: usize, v: &SparseVec) -> SparseVec {
    let r = basis.lambda().size();
    assert!(i >= 1 && i < r, "transposition (i, i+1) needs 1 <= i < r");
    let (a, b) = (i as u32, i as u32 + 1);
    let mut out: SparseVec = v
        .iter()
        .map(|(idx, coeff)| {
            let tab = &basis.tabloids()[*idx as usize];
            let relabeled: Vec<Vec<u32>> = tab
                .columns()
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|&e| {
                            if e == a {
                                b
                            } else if e == b {
                                a
                            } else {
                                e
                            }
                        })
                        .collect()
                })
                .collect();
            let signed = canonical_tabloid(&relabeled, basis.lambda()).expect("valid relabeling");
            let new_idx = basis.index_of(&signed.tabloid);
            (new_idx, coeff * Rat::from_integer(signed.sign.into()))
        })
        .collect();
    out.sort_by_key(|(i, _)| *i);
    out
}
