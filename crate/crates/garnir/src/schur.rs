//! Concrete models of the Schur modules `L_mu` as cokernels of `theta_mu`,
//! Pieri dimension splits, and empirical extraction of the scalar by which
//! an equivariant endomorphism acts on each Pieri summand.

use crate::combinat::Partition;
use crate::exactla::Reducer;
use crate::exalg::{build_map, build_theta_mu, LinearMap, MapDescriptor, QVec, Shape};
use crate::{Error, Rat};
use std::sync::OnceLock;

/// A Schur module `L_mu` realized as the cokernel of `theta_mu` on
/// `Lambda^mu`, together with the projection `pi_mu` as a canonical
/// coset-representative map.
///
/// The reduction operator is built lazily on first use; ranks and
/// dimensions are available immediately.
pub struct SchurModel {
    mu: Partition,
    n: usize,
    theta: LinearMap,
    basis_dim: usize,
    rank_theta: usize,
    reducer: OnceLock<Reducer>,
}

/// Build the model of `L_mu` over ambient dimension `n`.
///
/// A nonzero module requires `n >= mu_1`; the faithfulness statements in
/// the text additionally assume `n >= |mu|`, which
/// [`SchurModel::ambient_faithful`] reports.
pub fn schur_model(mu: &Partition, n: usize) -> Result<SchurModel, Error> {
    let theta = build_theta_mu(mu, n)?;
    let basis_dim = theta.target_dim();
    let rank_theta = theta.to_mat().rank();
    Ok(SchurModel {
        mu: mu.clone(),
        n,
        theta,
        basis_dim,
        rank_theta,
        reducer: OnceLock::new(),
    })
}

impl SchurModel {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `dim L_mu = dim Lambda^mu - rank(theta_mu)`.
    pub fn dimension(&self) -> usize {
        self.basis_dim - self.rank_theta
    }

    pub fn basis_dim(&self) -> usize {
        self.basis_dim
    }

    pub fn rank_theta(&self) -> usize {
        self.rank_theta
    }

    /// Whether `n >= |mu|`, the ambient bound the theorems assume.
    pub fn ambient_faithful(&self) -> bool {
        self.n >= self.mu.size()
    }

    fn reducer(&self) -> &Reducer {
        self.reducer.get_or_init(|| Reducer::new(&self.theta.to_mat()))
    }

    /// Canonical representative of `v` modulo `Im(theta_mu)`; realizes
    /// `pi_mu`. Idempotent, linear, and zero exactly on the image.
    ///
    /// Zero-degree factors in the vector's shape are immaterial (they
    /// have a one-element basis and leave monomial ranks unchanged), so
    /// shapes are compared with zero factors dropped.
    pub fn reduce(&self, v: &QVec) -> Result<QVec, Error> {
        let stripped: Vec<usize> = v
            .shape()
            .factors()
            .iter()
            .copied()
            .filter(|&d| d != 0)
            .collect();
        if stripped != self.mu.parts() || v.n() != self.n {
            return Err(Error::ShapeMismatch {
                expected: format!(
                    "{} over n={}",
                    Shape::new(self.mu.parts().to_vec()),
                    self.n
                ),
                got: format!("{} over n={}", v.shape(), v.n()),
            });
        }
        let reduced = self.reducer().reduce(&v.to_sparse());
        Ok(QVec::from_sparse(v.shape().clone(), self.n, &reduced))
    }
}

/// Number of cosemistandard tableaux of shape `mu` with entries in
/// `{1..n}`: rows strictly increasing left to right, columns weakly
/// increasing top to bottom. Counted by direct backtracking.
pub fn cosemistandard_count(mu: &Partition, n: usize) -> u64 {
    fn rec(rows: &[usize], above: &[u32], n: u32) -> u64 {
        let Some((&len, rest)) = rows.split_first() else {
            return 1;
        };
        // enumerate one strictly increasing row of the given length,
        // bounded below cell-wise by the row above
        fn row_rec(
            len: usize,
            pos: usize,
            min: u32,
            above: &[u32],
            cur: &mut Vec<u32>,
            rest: &[usize],
            n: u32,
        ) -> u64 {
            if pos == len {
                return rec(rest, cur, n);
            }
            let lo = min.max(above.get(pos).copied().unwrap_or(1));
            let mut total = 0;
            for v in lo..=n {
                cur.push(v);
                total += row_rec(len, pos + 1, v + 1, above, cur, rest, n);
                cur.pop();
            }
            total
        }
        row_rec(len, 0, 1, above, &mut Vec::new(), rest, n)
    }
    rec(mu.parts(), &[], n as u32)
}

/// Dimensions of the Pieri summands `L_(a+i, b-i)` of
/// `Lambda^a x Lambda^b`, for `i = 0..=b`. Summands with `a + i > n`
/// vanish.
pub fn pieri_dims(a: usize, b: usize, n: usize) -> Vec<u64> {
    assert!(a >= b, "pieri_dims requires a >= b");
    (0..=b)
        .map(|i| {
            if a + i > n {
                return 0;
            }
            let parts = if b == i {
                vec![a + i]
            } else {
                vec![a + i, b - i]
            };
            let mu = Partition::new(parts).expect("valid two-row shape");
            schur_model(&mu, n).expect("valid model").dimension() as u64
        })
        .collect()
}

/// Dimension of the cokernel: target basis size minus exact rank.
pub fn coker_dim(m: &LinearMap) -> usize {
    m.target_dim() - m.to_mat().rank()
}

/// The scalar by which an endomorphism `Phi` of `Lambda^a x Lambda^b`
/// acts on the Pieri summand `L_(a+j, b-j)`, extracted empirically:
/// the unique `s` with `pi . delta_j . Phi = s . pi . delta_j`.
///
/// Sweeps the basis columns deterministically; an inconsistent candidate
/// signals an implementation bug and aborts with an error.
pub fn summand_scalar_empirical(
    d: &MapDescriptor,
    j: usize,
    n: usize,
) -> Result<Rat, Error> {
    let model = scalar_model(d, j, n)?;
    summand_scalar_with_model(&model, d, j)
}

fn endo_degrees(d: &MapDescriptor) -> Result<(usize, usize), Error> {
    let src = d.source_shape()?;
    let tgt = d.target_shape();
    if src != tgt || src.factors().len() != 2 {
        return Err(Error::BadDescriptor(format!(
            "summand scalars need an endomorphism of a two-factor shape, got {src} -> {tgt}"
        )));
    }
    Ok((src.factors()[0], src.factors()[1]))
}

/// The Schur model of the summand `L_(a+j, b-j)` probed by
/// [`summand_scalar_empirical`]; exposed so sweeps over many maps can
/// share one model.
pub fn scalar_model(d: &MapDescriptor, j: usize, n: usize) -> Result<SchurModel, Error> {
    let (a, b) = endo_degrees(d)?;
    if j > b {
        return Err(Error::BadDescriptor(format!("summand index {j} exceeds {b}")));
    }
    let parts = if b == j { vec![a + j] } else { vec![a + j, b - j] };
    schur_model(&Partition::new(parts).expect("valid two-row shape"), n)
}

/// As [`summand_scalar_empirical`], reusing a prebuilt summand model.
pub fn summand_scalar_with_model(
    model: &SchurModel,
    d: &MapDescriptor,
    j: usize,
) -> Result<Rat, Error> {
    let n = model.n();
    let (a, b) = endo_degrees(d)?;
    let phi = build_map(d, n)?;
    let delta_j = build_map(&MapDescriptor::Delta { a, b, t: j }, n)?;
    let probe = delta_j.compose(&phi)?;

    let shape = delta_j.target_shape().clone();
    let reduce_col = |m: &LinearMap, c: usize| -> Result<QVec, Error> {
        let v = QVec::from_sparse(shape.clone(), n, &m.columns()[c].clone());
        model.reduce(&v)
    };

    let mut scalar: Option<Rat> = None;
    for c in 0..delta_j.source_dim() {
        let r0 = reduce_col(&delta_j, c)?;
        let r1 = reduce_col(&probe, c)?;
        match &scalar {
            None => {
                if r0.is_zero() {
                    if !r1.is_zero() {
                        return Err(Error::ScalarInconsistent {
                            candidate: "none".into(),
                            column: c,
                        });
                    }
                    continue;
                }
                let (m0, c0) = &r0.monomial_terms()[0];
                let s = r1.coeff(m0) / c0;
                if r1 != r0.scaled(&s) {
                    return Err(Error::ScalarInconsistent {
                        candidate: s.to_string(),
                        column: c,
                    });
                }
                scalar = Some(s);
            }
            Some(s) => {
                if r1 != r0.scaled(s) {
                    return Err(Error::ScalarInconsistent {
                        candidate: s.to_string(),
                        column: c,
                    });
                }
            }
        }
    }
    scalar.ok_or(Error::ScalarProbeZero)
}
