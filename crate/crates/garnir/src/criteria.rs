//! Closed-form arithmetic criteria: summand scalars, eigenvalue sums,
//! cokernel identification, and the partition-level verdicts for the
//! symmetrized (`sgr`) and plain (`gr`) Garnir relation families.
//!
//! Everything here is pure big-integer arithmetic; binomials vanish
//! outside their natural range, which silently implements the
//! truncations the formulas rely on.

use crate::combinat::{binomial, ExchangeVector, Partition};
use crate::{Error, Int, Rat};
use num::{One, Zero};

/// Which range of summand indices a verdict quantifies over.
///
/// `Full` checks `j = 1..=mu_{c+1}` (the range the cokernel argument
/// needs); `Short` checks only `j = 1..=k_c`, the range given in one
/// published correction. Exhaustive scans adjudicate between the two
/// empirically; this crate's brute-force results match `Full`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JRange {
    Full,
    Short,
}

impl std::fmt::Display for JRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            JRange::Full => write!(f, "full"),
            JRange::Short => write!(f, "short"),
        }
    }
}

/// A failed quantifier instance: column pair `c` (1-based), summand
/// index `j` where applicable, and the exact offending value.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub c: usize,
    pub j: Option<usize>,
    pub value: Rat,
}

/// Verdict of an arithmetic criterion, with witnesses for every
/// violated instance. `pass` holds exactly when `witnesses` is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    pub criterion: String,
    pub j_range: Option<JRange>,
}

impl CriterionReport {
    fn new(criterion: String, j_range: Option<JRange>, witnesses: Vec<Witness>) -> Self {
        CriterionReport {
            pass: witnesses.is_empty(),
            witnesses,
            criterion,
            j_range,
        }
    }
}

/// `c_t(a,b,i) = C(i,t) C(a-b+t+i,t)`, the scalar by which `Phi_t` acts
/// on the Pieri summand `L_(a+i, b-i)`. Zero when `t > i`.
pub fn c_scalar(a: usize, b: usize, t: usize, i: usize) -> Int {
    let (a, b, t, i) = (a as i64, b as i64, t as i64, i as i64);
    binomial(i, t) * binomial(a - b + t + i, t)
}

/// Eigenvalue of `sum_t coeffs[t] Phi_t` on the summand `L_(a+j, b-j)`:
/// `sum_{t=0}^{j} coeffs[t] c_t(a,b,j)`.
pub fn eigen_sum(coeffs: &[Rat], a: usize, b: usize, j: usize) -> Rat {
    let mut acc = Rat::zero();
    for (t, coeff) in coeffs.iter().enumerate().take(j + 1) {
        acc += coeff * Rat::from_integer(c_scalar(a, b, t, j));
    }
    acc
}

/// Outcome of the irreducible-cokernel test for an endomorphism of
/// `Lambda^a x Lambda^b` written in the `Phi_t` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CokerVerdict {
    /// The cokernel is the single summand `L_(a+i, b-i)`.
    Irreducible(usize),
    /// Zero or more than one eigenvalue vanishes; the zero set is
    /// returned for diagnosis (empty means the map is onto).
    NotIrreducible { zeros: Vec<usize> },
}

/// The cokernel of `sum_t coeffs[t] Phi_t` is `L_(a+i,b-i)` iff its
/// eigenvalue vanishes at `i` and nowhere else.
pub fn identify_coker(coeffs: &[Rat], a: usize, b: usize) -> CokerVerdict {
    let zeros: Vec<usize> = (0..=b)
        .filter(|&j| eigen_sum(coeffs, a, b, j).is_zero())
        .collect();
    if zeros.len() == 1 {
        CokerVerdict::Irreducible(zeros[0])
    } else {
        CokerVerdict::NotIrreducible { zeros }
    }
}

/// The sum `Sigma(k,j)` controlling the symmetrized Garnir family on a
/// column pair with heights `(a, b)`:
/// `sum_{t=1}^{j} (-1)^{t-1} C(b-t, b-k) C(j,t) C(a-b+j+t, t)`.
pub fn sigma_sum(a: usize, b: usize, k: usize, j: usize) -> Int {
    let (a, b, k, j) = (a as i64, b as i64, k as i64, j as i64);
    let mut acc = Int::zero();
    for t in 1..=j {
        let term = binomial(b - t, b - k) * binomial(j, t) * binomial(a - b + j + t, t);
        if (t - 1) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Coefficients of `psi_k` in the `Phi_t` basis:
/// `a_0 = 0`, `a_t = (-1)^{t-1} C(b-t, b-k)`.
pub fn psi_coeffs(b: usize, k: usize) -> Vec<Rat> {
    (0..=b)
        .map(|t| {
            if t == 0 {
                return Rat::zero();
            }
            let c = binomial(b as i64 - t as i64, b as i64 - k as i64);
            Rat::from_integer(if (t - 1) % 2 == 0 { c } else { -c })
        })
        .collect()
}

/// Sufficient condition for the cokernel of `sum_c extended(Psi_c)` on
/// `Lambda^mu` to be `L_mu`: every column pair must have `a_0 = 0` and all
/// partial eigenvalue sums nonzero for `j = 1..=mu_{c+1}`.
///
/// `coeffs_for(c)` supplies the `Phi_t`-basis coefficients of the map
/// placed on the (0-based) column pair `c`.
pub fn multirow_coker_verdict(
    mu: &Partition,
    coeffs_for: impl Fn(usize) -> Vec<Rat>,
) -> CriterionReport {
    assert!(mu.len() >= 2, "multirow verdict needs at least two parts");
    let parts = mu.parts();
    let mut witnesses = Vec::new();
    for c in 0..parts.len() - 1 {
        let (a, b) = (parts[c], parts[c + 1]);
        let coeffs = coeffs_for(c);
        if let Some(a0) = coeffs.first() {
            if !a0.is_zero() {
                witnesses.push(Witness {
                    c: c + 1,
                    j: Some(0),
                    value: a0.clone(),
                });
                continue;
            }
        }
        for j in 1..=b {
            let v = eigen_sum(&coeffs, a, b, j);
            if v.is_zero() {
                witnesses.push(Witness {
                    c: c + 1,
                    j: Some(j),
                    value: v,
                });
            }
        }
    }
    CriterionReport::new("multirow-coker: a_0 = 0 and eigenvalue sums nonzero".into(), None, witnesses)
}

/// Arithmetic verdict for the symmetrized Garnir family `SGR(k)` on
/// `lambda`: pass iff `Sigma(k_c, j) != 0` for every column pair and
/// every `j` in the chosen range.
pub fn sgr_verdict(lambda: &Partition, k: &ExchangeVector, j_range: JRange) -> CriterionReport {
    let mu = lambda.conjugate();
    let parts = mu.parts();
    let mut witnesses = Vec::new();
    for c in 0..parts.len().saturating_sub(1) {
        let (a, b) = (parts[c], parts[c + 1]);
        let kc = k.ks()[c];
        let jmax = match j_range {
            JRange::Full => b,
            JRange::Short => kc,
        };
        for j in 1..=jmax {
            let v = sigma_sum(a, b, kc, j);
            if v.is_zero() {
                witnesses.push(Witness {
                    c: c + 1,
                    j: Some(j),
                    value: Rat::from_integer(v),
                });
            }
        }
    }
    CriterionReport::new(
        "sgr: Sigma(k_c, j) != 0 for all column pairs".into(),
        Some(j_range),
        witnesses,
    )
}

/// The admissible window `p <= t <= q` for the coefficients `d_k`:
/// `p = i - min(b-k, i)`, `q = min(k, i)`.
pub fn pq_window(b: usize, k: usize, i: usize) -> (usize, usize) {
    (i - (b - k).min(i), k.min(i))
}

/// Coefficient `d_k(a,b,t)` at summand index `i`:
/// `1 - sum_{j=p}^{t} (-1)^j C(a-k+j, a-k) C(b-k-i+t, t-j)`.
///
/// The dependence on `i` enters through the window `p` and the second
/// binomial, so `i` is an explicit argument here.
pub fn d_coeff(a: usize, b: usize, k: usize, i: usize, t: usize) -> Result<Int, Error> {
    let (p, q) = pq_window(b, k, i);
    if t < p || t > q {
        return Err(Error::OutsideWindow { t, p, q });
    }
    let (ai, bi, ki, ii, ti) = (a as i64, b as i64, k as i64, i as i64, t as i64);
    let mut acc = Int::one();
    for j in p as i64..=ti {
        let term = binomial(ai - ki + j, ai - ki) * binomial(bi - ki - ii + ti, ti - j);
        if j % 2 == 0 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// Whether `coker(gamma_k)` on `Lambda^a x Lambda^b` is the Schur module
/// `L_(a,b)`: true iff `a > k` or `a = b = k = 1`.
///
/// Also evaluates the coefficient route (for every `1 <= i <= b` some
/// `d_k(a,b,t)` with `p <= t <= q` is nonzero) and asserts the two
/// criteria agree.
pub fn gamma_two_row_verdict(a: usize, b: usize, k: usize) -> bool {
    assert!(a >= b && b >= k && k >= 1);
    let closed_form = a > k || (a == 1 && b == 1 && k == 1);
    let coefficient_route = (1..=b).all(|i| {
        let (p, q) = pq_window(b, k, i);
        (p..=q).any(|t| !d_coeff(a, b, k, i, t).unwrap().is_zero())
    });
    assert_eq!(
        closed_form, coefficient_route,
        "closed form and d-coefficient route disagree at a={a} b={b} k={k}"
    );
    closed_form
}

/// Verdict for the plain Garnir family `GR(k)` on `lambda`: pass iff
/// `mu_c > mu_{c+1}` for every pair with `k_c = mu_{c+1} > 1`.
///
/// For two-column shapes this hypothesis coincides with the exact
/// if-and-only-if condition (`mu_1 > k` or `mu_1 = mu_2 = k = 1`), and
/// the report says so.
pub fn gr_verdict(lambda: &Partition, k: &ExchangeVector) -> CriterionReport {
    let mu = lambda.conjugate();
    let parts = mu.parts();
    let mut witnesses = Vec::new();
    for c in 0..parts.len().saturating_sub(1) {
        let kc = k.ks()[c];
        if kc == parts[c + 1] && kc > 1 && parts[c] == parts[c + 1] {
            witnesses.push(Witness {
                c: c + 1,
                j: None,
                value: Rat::zero(),
            });
        }
    }
    let criterion = if lambda.first() == 2 {
        // two columns: the hypothesis is exact
        let k1 = k.ks()[0];
        debug_assert_eq!(
            witnesses.is_empty(),
            parts[0] > k1 || (parts[0] == 1 && parts[1] == 1 && k1 == 1)
        );
        "gr: mu_c > mu_{c+1} whenever k_c = mu_{c+1} > 1 (exact iff for two columns)"
    } else {
        "gr: mu_c > mu_{c+1} whenever k_c = mu_{c+1} > 1"
    };
    CriterionReport::new(criterion.into(), None, witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_up_to;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    fn rat(v: i64) -> Rat {
        Rat::from_integer(Int::from(v))
    }

    #[test]
    fn c_scalar_examples() {
        assert_eq!(c_scalar(3, 2, 1, 1), int(3));
        assert_eq!(c_scalar(5, 3, 0, 2), int(1));
        assert_eq!(c_scalar(2, 2, 2, 2), int(6));
        assert_eq!(c_scalar(2, 2, 2, 1), int(0)); // t > i
    }

    #[test]
    fn eigen_sum_examples() {
        // psi_1 on (3,2): j(a-b+j+1) at j=1 is 3
        assert_eq!(eigen_sum(&psi_coeffs(2, 1), 3, 2, 1), rat(3));
        // psi_2 on (5,4) vanishes at j=3
        assert_eq!(eigen_sum(&psi_coeffs(4, 2), 5, 4, 3), rat(0));
        assert_eq!(eigen_sum(&vec![rat(0); 3], 4, 2, 2), rat(0));
    }

    #[test]
    fn identify_coker_examples() {
        // Phi_1 alone kills only the j=0 summand
        let mut phi1 = vec![rat(0); 4];
        phi1[1] = rat(1);
        assert_eq!(identify_coker(&phi1, 3, 3), CokerVerdict::Irreducible(0));
        // the identity is onto
        let mut id = vec![rat(0); 4];
        id[0] = rat(1);
        assert_eq!(
            identify_coker(&id, 3, 3),
            CokerVerdict::NotIrreducible { zeros: vec![] }
        );
        // psi_2 on (2,2) vanishes at j=0 and j=2
        assert_eq!(
            identify_coker(&psi_coeffs(2, 2), 2, 2),
            CokerVerdict::NotIrreducible { zeros: vec![0, 2] }
        );
    }

    #[test]
    fn sigma_sum_examples() {
        assert_eq!(sigma_sum(2, 2, 2, 2), int(0));
        assert_eq!(sigma_sum(3, 2, 2, 2), int(-2));
        assert_eq!(sigma_sum(3, 2, 1, 1), int(3));
        assert_eq!(sigma_sum(5, 4, 2, 3), int(0));
    }

    #[test]
    fn sigma_closed_forms() {
        // k=1: Sigma(1,j) = j(a-b+j+1)
        for a in 1..=6usize {
            for b in 1..=a.min(6) {
                for j in 1..=b {
                    let expect = (j * (a - b + j + 1)) as i64;
                    assert_eq!(sigma_sum(a, b, 1, j), int(expect));
                }
            }
        }
        // k=b: Sigma(b,j) = 1 - (-1)^j C(a-b+j, j)
        for a in 1..=6usize {
            for b in 1..=a {
                for j in 1..=b {
                    let c = binomial((a - b + j) as i64, j as i64);
                    let expect = if j % 2 == 0 { Int::one() - c } else { Int::one() + c };
                    assert_eq!(sigma_sum(a, b, b, j), expect, "a={a} b={b} j={j}");
                }
            }
        }
        // k=2: Sigma(2,j) = (b-1) j (a-b+j+1) - C(j,2) C(a-b+j+2, 2)
        for a in 2..=6usize {
            for b in 2..=a {
                for j in 1..=b {
                    let lin = int(((b - 1) * j * (a - b + j + 1)) as i64);
                    let quad = binomial(j as i64, 2) * binomial((a - b + j + 2) as i64, 2);
                    assert_eq!(sigma_sum(a, b, 2, j), lin - quad, "a={a} b={b} j={j}");
                }
            }
        }
    }

    #[test]
    fn sigma_equals_psi_eigenvalues() {
        // the two routes through the formulas agree
        for a in 1..=6usize {
            for b in 1..=a.min(9 - a) {
                for k in 1..=b {
                    let coeffs = psi_coeffs(b, k);
                    for j in 0..=b {
                        let via_eigen = eigen_sum(&coeffs, a, b, j);
                        let direct = Rat::from_integer(sigma_sum(a, b, k, j));
                        assert_eq!(via_eigen, direct, "a={a} b={b} k={k} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn multirow_verdict_examples() {
        // mu = (5,4) with psi_2 coefficients fails at (c=1, j=3)
        let mu = p(&[5, 4]);
        let rep = multirow_coker_verdict(&mu, |c| {
            let b = mu.parts()[c + 1];
            psi_coeffs(b, 2)
        });
        assert!(!rep.pass);
        assert_eq!(rep.witnesses.len(), 1);
        assert_eq!((rep.witnesses[0].c, rep.witnesses[0].j), (1, Some(3)));
        assert!(rep.witnesses[0].value.is_zero());

        // psi_1 coefficients pass for any mu
        for mu in partitions_up_to(6).into_iter().filter(|m| m.len() >= 2) {
            let rep = multirow_coker_verdict(&mu, |c| psi_coeffs(mu.parts()[c + 1], 1));
            assert!(rep.pass, "mu={mu}");
        }

        // nonzero a_0 is witnessed as such
        let rep = multirow_coker_verdict(&p(&[2, 2]), |_| vec![rat(1), rat(0), rat(0)]);
        assert!(!rep.pass);
        assert_eq!(rep.witnesses[0].j, Some(0));
        assert_eq!(rep.witnesses[0].value, rat(1));
    }

    #[test]
    fn sgr_verdict_examples() {
        let lam = p(&[2, 2]);
        let k = ExchangeVector::new(&lam, vec![2]).unwrap();
        for range in [JRange::Full, JRange::Short] {
            let rep = sgr_verdict(&lam, &k, range);
            assert!(!rep.pass);
            assert_eq!((rep.witnesses[0].c, rep.witnesses[0].j), (1, Some(2)));
        }

        // k = all ones always passes
        for lam in partitions_up_to(7) {
            let rep = sgr_verdict(&lam, &ExchangeVector::ones(&lam), JRange::Full);
            assert!(rep.pass, "lambda={lam}");
        }

        // the range question: (5,4) with k=2 fails at j=3 in the full
        // range but passes the short range
        let lam = p(&[2, 2, 2, 2, 1]);
        let k = ExchangeVector::new(&lam, vec![2]).unwrap();
        let full = sgr_verdict(&lam, &k, JRange::Full);
        assert!(!full.pass);
        assert_eq!((full.witnesses[0].c, full.witnesses[0].j), (1, Some(3)));
        let short = sgr_verdict(&lam, &k, JRange::Short);
        assert!(short.pass);
    }

    #[test]
    fn d_coeff_examples() {
        assert_eq!(d_coeff(2, 2, 2, 2, 2).unwrap(), int(0));
        assert_eq!(d_coeff(3, 2, 2, 1, 1).unwrap(), int(3));
        assert_eq!(d_coeff(3, 3, 2, 3, 2).unwrap(), int(-2));
        assert!(matches!(
            d_coeff(3, 2, 2, 1, 2),
            Err(Error::OutsideWindow { t: 2, p: 1, q: 1 })
        ));
    }

    #[test]
    fn d_coeff_special_values() {
        // d_k(a,b,1) = 1 + a - b + i whenever the window starts at 0
        for a in 2..=6usize {
            for b in 1..=a {
                for k in 1..=b {
                    for i in 1..=b {
                        let (pw, q) = pq_window(b, k, i);
                        if pw == 0 && q >= 1 {
                            assert_eq!(
                                d_coeff(a, b, k, i, 1).unwrap(),
                                int((1 + a - b + i) as i64)
                            );
                        }
                        // d_k(a,b,p) = 1 - (-1)^p C(a-k+p, a-k) for p > 0
                        if pw > 0 {
                            let c = binomial((a - k + pw) as i64, (a - k) as i64);
                            let expect = if pw % 2 == 0 { Int::one() - c } else { Int::one() + c };
                            assert_eq!(d_coeff(a, b, k, i, pw).unwrap(), expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_verdict_examples() {
        assert!(gamma_two_row_verdict(3, 2, 2));
        assert!(!gamma_two_row_verdict(2, 2, 2));
        assert!(gamma_two_row_verdict(1, 1, 1));
    }

    #[test]
    fn gamma_verdict_routes_agree_exhaustively() {
        // the assert inside the call compares closed form vs d-route
        for a in 1..=9usize {
            for b in 1..=a.min(10 - a) {
                for k in 1..=b {
                    gamma_two_row_verdict(a, b, k);
                }
            }
        }
    }

    #[test]
    fn gr_verdict_examples() {
        let lam = p(&[2, 2]);
        let k = ExchangeVector::new(&lam, vec![2]).unwrap();
        let rep = gr_verdict(&lam, &k);
        assert!(!rep.pass);
        assert_eq!(rep.witnesses[0].c, 1);

        let lam = p(&[3, 2]).conjugate(); // mu = (3,2)
        let k = ExchangeVector::new(&lam, vec![2]).unwrap();
        assert!(gr_verdict(&lam, &k).pass);

        for lam in partitions_up_to(7) {
            assert!(gr_verdict(&lam, &ExchangeVector::ones(&lam)).pass);
        }
    }

    #[test]
    fn sgr_max_matches_distinct_parts_pattern() {
        // with maximal exchanges, the verdict reproduces the hypothesis
        // "conjugate parts distinct above 1"
        for lam in partitions_up_to(8) {
            let mu = lam.conjugate();
            let parts = mu.parts();
            let hypothesis = (0..parts.len() - 1)
                .all(|c| parts[c] > parts[c + 1] || parts[c + 1] == 1);
            let verdict = sgr_verdict(&lam, &ExchangeVector::max(&lam), JRange::Full);
            assert_eq!(verdict.pass, hypothesis, "lambda={lam}");
        }
    }
}
