//! Partition arithmetic, dimension counts and enumeration primitives.

use crate::{Error, Int};
use num::{One, Signed, ToPrimitive, Zero};

/// A partition: weakly decreasing sequence of positive integers.
///
/// `lambda` denotes the Specht-side shape; its conjugate `mu = lambda'`
/// lists the column heights of the diagram and is the shape used on the
/// general linear group side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty()
            || parts.iter().any(|&p| p == 0)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            return Err(Error::BadPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Size `r = |lambda|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // partitions are nonempty by construction
    }

    /// First (largest) part.
    pub fn first(&self) -> usize {
        self.parts[0]
    }

    /// Conjugate partition: `lambda'_c = #{i : lambda_i >= c}`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// One exchange count per pair of consecutive columns of `lambda`.
///
/// Entry `k_c` (for `c = 1..lambda_1 - 1`, stored 0-indexed) must satisfy
/// `1 <= k_c <= mu_{c+1}` where `mu = lambda'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeVector {
    ks: Vec<usize>,
}

impl ExchangeVector {
    pub fn new(lambda: &Partition, ks: Vec<usize>) -> Result<Self, Error> {
        let mu = lambda.conjugate();
        let ok = ks.len() == lambda.first() - 1
            && ks
                .iter()
                .enumerate()
                .all(|(c, &k)| k >= 1 && k <= mu.parts()[c + 1]);
        if !ok {
            return Err(Error::BadExchangeVector {
                ks,
                mu: mu.parts().to_vec(),
            });
        }
        Ok(ExchangeVector { ks })
    }

    /// All exchanges equal to 1 (the minimal, always admissible choice).
    pub fn ones(lambda: &Partition) -> Self {
        ExchangeVector {
            ks: vec![1; lambda.first() - 1],
        }
    }

    /// Maximal exchanges: `k_c = mu_{c+1}`.
    pub fn max(lambda: &Partition) -> Self {
        let mu = lambda.conjugate();
        ExchangeVector {
            ks: mu.parts()[1..].to_vec(),
        }
    }

    /// Every admissible exchange vector for `lambda`, in lexicographic order.
    pub fn all(lambda: &Partition) -> Vec<Self> {
        let mu = lambda.conjugate();
        let bounds: Vec<usize> = mu.parts()[1..].to_vec();
        let mut out = vec![ExchangeVector { ks: vec![1; bounds.len()] }];
        loop {
            let mut next = out.last().unwrap().ks.clone();
            let mut pos = bounds.len();
            while pos > 0 {
                if next[pos - 1] < bounds[pos - 1] {
                    next[pos - 1] += 1;
                    for v in &mut next[pos..] {
                        *v = 1;
                    }
                    break;
                }
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            out.push(ExchangeVector { ks: next });
        }
        out
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }
}

/// Binomial coefficient over arbitrary-precision integers.
///
/// Returns 0 when `k < 0`, `k > n` or `n < 0`; this convention silently
/// implements the truncations the arithmetic criteria rely on.
pub fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || n < 0 || k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// Number of standard Young tableaux of shape `lambda` (hook length formula),
/// which is the dimension of the Specht module `S^lambda`.
pub fn hook_dim(lambda: &Partition) -> u64 {
    let mu = lambda.conjugate();
    let mut denom = Int::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = mu.parts()[j] - i - 1;
            denom *= Int::from(arm + leg + 1);
        }
    }
    let dim = factorial(lambda.size()) / denom;
    assert!(dim.is_positive());
    dim.to_u64().expect("hook dimension fits in u64 at desk scale")
}

/// Number of canonical column tabloids of shape `lambda`:
/// `r! / prod_c mu_c!` with `mu = lambda'`.
pub fn tabloid_count(lambda: &Partition) -> u64 {
    let mu = lambda.conjugate();
    let mut count = factorial(lambda.size());
    for &h in mu.parts() {
        count /= factorial(h);
    }
    count.to_u64().expect("tabloid count fits in u64 at desk scale")
}

/// All partitions of `r`, in reverse-lexicographic order:
/// `(r)` first, `(1,...,1)` last.
pub fn partitions_of(r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec(r, r, &mut stack, &mut out);
    return out;

    fn rec(remaining: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
}

/// All partitions of every `r <= r_max`, ordered by `r` then reverse-lex.
pub fn partitions_up_to(r_max: usize) -> Vec<Partition> {
    (1..=r_max).flat_map(partitions_of).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All `k`-element sub-multisets of `items` (by position), lex order.
pub fn k_subsets_of<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    k_subsets(items.len(), k)
        .into_iter()
        .map(|ix| ix.into_iter().map(|i| items[i].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent oracle: count standard Young tableaux of shape `lambda`
    /// by direct backtracking (place 1..r in order, keeping rows and
    /// columns increasing).
    fn syt_count(lambda: &Partition) -> u64 {
        fn rec(lambda: &[usize], fill: &mut Vec<usize>, next: usize, r: usize) -> u64 {
            if next > r {
                return 1;
            }
            let mut total = 0;
            for (row, &len) in lambda.iter().enumerate() {
                let used = fill[row];
                if used < len {
                    // cell (row, used): row constraint is automatic since we
                    // place entries in increasing order; column constraint
                    // needs the row above to have passed this column.
                    if row == 0 || fill[row - 1] > used {
                        fill[row] += 1;
                        total += rec(lambda, fill, next + 1, r);
                        fill[row] -= 1;
                    }
                }
            }
            total
        }
        let mut fill = vec![0; lambda.len()];
        rec(lambda.parts(), &mut fill, 1, lambda.size())
    }

    /// Independent oracle: enumerate canonical column tabloids directly.
    fn tabloid_enumeration_count(lambda: &Partition) -> u64 {
        fn rec(heights: &[usize], avail: Vec<usize>) -> u64 {
            match heights.split_first() {
                None => 1,
                Some((&h, rest)) => {
                    let mut total = 0;
                    for sub in k_subsets(avail.len(), h) {
                        let remaining: Vec<usize> = avail
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| !sub.contains(i))
                            .map(|(_, &v)| v)
                            .collect();
                        total += rec(rest, remaining);
                    }
                    total
                }
            }
        }
        let mu = lambda.conjugate();
        rec(mu.parts(), (1..=lambda.size()).collect())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(p(&[2, 2, 2, 2, 1]).conjugate(), p(&[5, 4]));
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
    }

    #[test]
    fn conjugate_is_involution() {
        for lam in partitions_up_to(10) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn hook_dim_examples_against_syt_oracle() {
        assert_eq!(hook_dim(&p(&[2, 2])), 2);
        assert_eq!(syt_count(&p(&[2, 2])), 2);
        assert_eq!(hook_dim(&p(&[2, 2, 2, 2, 1])), 42);
        assert_eq!(syt_count(&p(&[2, 2, 2, 2, 1])), 42);
        assert_eq!(hook_dim(&p(&[5, 4])), 42);
        assert_eq!(hook_dim(&p(&[1, 1, 1])), 1);
    }

    #[test]
    fn hook_dim_matches_syt_enumeration_up_to_8() {
        for lam in partitions_up_to(8) {
            assert_eq!(hook_dim(&lam), syt_count(&lam), "shape {lam}");
        }
    }

    #[test]
    fn hook_dim_conjugation_invariant() {
        for lam in partitions_up_to(8) {
            assert_eq!(hook_dim(&lam), hook_dim(&lam.conjugate()));
        }
    }

    #[test]
    fn plancherel_identity() {
        for r in 1..=8usize {
            let total: u64 = partitions_of(r)
                .iter()
                .map(|lam| hook_dim(lam).pow(2))
                .sum();
            let rfact: u64 = (1..=r as u64).product();
            assert_eq!(total, rfact, "r = {r}");
        }
    }

    #[test]
    fn tabloid_count_examples() {
        assert_eq!(tabloid_count(&p(&[2, 2])), 6);
        assert_eq!(tabloid_count(&p(&[2, 1])), 3);
        assert_eq!(tabloid_count(&p(&[1, 1, 1, 1])), 1);
    }

    #[test]
    fn tabloid_count_matches_enumeration_up_to_8() {
        for lam in partitions_up_to(8) {
            assert_eq!(
                tabloid_count(&lam),
                tabloid_enumeration_count(&lam),
                "shape {lam}"
            );
        }
    }

    #[test]
    fn partition_enumeration_order() {
        let of3 = partitions_of(3);
        assert_eq!(of3, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_up_to(1), vec![p(&[1])]);
        // ordered by r, deterministic
        let all = partitions_up_to(3);
        assert_eq!(all, vec![p(&[1]), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn binomial_truncations() {
        assert_eq!(binomial(5, 2), Int::from(10));
        assert_eq!(binomial(5, -1), Int::zero());
        assert_eq!(binomial(3, 4), Int::zero());
        assert_eq!(binomial(-2, 0), Int::zero());
        assert_eq!(binomial(0, 0), Int::one());
    }

    #[test]
    fn subsets_lex_order() {
        assert_eq!(
            k_subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(k_subsets(2, 3), Vec::<Vec<usize>>::new());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_partition() -> impl Strategy<Value = Partition> {
            proptest::collection::vec(1usize..=9, 1..=7).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(v).unwrap()
            })
        }

        proptest! {
            #[test]
            fn conjugate_involution(lam in arb_partition()) {
                prop_assert_eq!(lam.conjugate().conjugate(), lam);
            }

            #[test]
            fn conjugate_preserves_size_and_swaps_extents(lam in arb_partition()) {
                let conj = lam.conjugate();
                prop_assert_eq!(conj.size(), lam.size());
                prop_assert_eq!(conj.first(), lam.len());
                prop_assert_eq!(conj.len(), lam.first());
            }
        }
    }

    #[test]
    fn exchange_vectors() {
        let lam = p(&[2, 2, 2, 2, 1]); // mu = (5,4)
        assert!(ExchangeVector::new(&lam, vec![4]).is_ok());
        assert!(ExchangeVector::new(&lam, vec![5]).is_err());
        assert!(ExchangeVector::new(&lam, vec![0]).is_err());
        assert!(ExchangeVector::new(&lam, vec![1, 1]).is_err());
        assert_eq!(ExchangeVector::max(&lam).ks(), &[4]);
        assert_eq!(ExchangeVector::all(&lam).len(), 4);

        let lam = p(&[3, 3]); // mu = (2,2,2)
        assert_eq!(ExchangeVector::all(&lam).len(), 4);
        assert_eq!(ExchangeVector::ones(&lam).ks(), &[1, 1]);
    }
}
