//! Partitions: statistics, conjugation, the transpose-dominance order and
//! automorphism counts of nilpotent Jordan modules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, HallError, Result};
use crate::exactnum::LaurentPoly;

/// A weakly decreasing sequence of positive integers. The empty partition
/// labels the zero module.
///
/// The derived order is lexicographic on the parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates and wraps `parts`. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{parts:?} is not a partition"));
        }
        Ok(Self(parts))
    }

    /// Sorts `parts` decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self(vec![1; n as usize])
    }

    /// `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// `λ'_k`, 1-based; zero past the end.
    pub fn conj_part(&self, k: u32) -> u32 {
        self.0.iter().filter(|&&p| p >= k).count() as u32
    }

    /// Union of multisets of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::from_unsorted(v)
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = HallError;

    /// Accepts `[2,1]`, `(2,1)`, `2,1`, `2 1`, and `[]`/`()` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let mut parts = Vec::new();
        for tok in inner.split([',', ' ']).filter(|t| !t.is_empty()) {
            let p: u32 = tok
                .parse()
                .map_err(|_| HallError::Parse(format!("bad partition part {tok:?} in {s:?}")))?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|e| HallError::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// `n(λ) = Σ_i (i−1) λ_i`.
pub fn nstat(lambda: &Partition) -> u64 {
    lambda
        .0
        .iter()
        .enumerate()
        .map(|(i, &p)| i as u64 * p as u64)
        .sum()
}

pub fn conjugate(lambda: &Partition) -> Partition {
    Partition((1..=lambda.largest()).map(|k| lambda.conj_part(k)).collect())
}

/// `m[i-1]` is the number of parts equal to `i`, for `i = 1..=λ_1`.
pub fn multiplicities(lambda: &Partition) -> Vec<u32> {
    let mut m = vec![0; lambda.largest() as usize];
    for &p in &lambda.0 {
        m[p as usize - 1] += 1;
    }
    m
}

/// `a_{I_λ} = q^{|λ|+2n(λ)} Π_i Π_{k=1}^{l_i} (1 − q^{-k})` as a polynomial in `q`.
pub fn aut_poly(lambda: &Partition) -> LaurentPoly {
    let mut acc = LaurentPoly::monomial(1, lambda.size() as i64 + 2 * nstat(lambda) as i64);
    for &l in &multiplicities(lambda) {
        for k in 1..=l as i64 {
            acc = &acc * &LaurentPoly::from_terms([(0, 1), (-k, -1)]);
        }
    }
    debug_assert!(acc.is_polynomial());
    acc
}

/// All partitions of `n`, in lexicographic (increasing) order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

/// All partitions of size at most `n`, by size then lexicographically.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn weighted_sums(lambda: &Partition, upto: u32) -> Vec<u64> {
    let m = multiplicities(lambda);
    (1..=upto)
        .map(|i| {
            m.iter()
                .enumerate()
                .map(|(j, &l)| (j as u64 + 1).min(i as u64) * l as u64)
                .sum()
        })
        .collect()
}

/// `ν ⪯ λ` in the transpose of the dominance order, stated through weighted
/// multiplicity sums: `Σ_j min(j,i) l_j ≤ Σ_j min(j,i) m_j` for all `i`.
pub fn transpose_dominance_leq(nu: &Partition, lambda: &Partition) -> Result<bool> {
    if nu.size() != lambda.size() {
        return domain(format!(
            "transpose_dominance_leq: sizes differ ({} vs {})",
            nu.size(),
            lambda.size()
        ));
    }
    let upto = nu.largest().max(lambda.largest()).max(1);
    let ws_l = weighted_sums(lambda, upto);
    let ws_n = weighted_sums(nu, upto);
    let by_weights = ws_l.iter().zip(&ws_n).all(|(a, b)| a <= b);
    let by_conjugates = conjugate_dominance_leq(nu, lambda);
    assert_eq!(
        by_weights, by_conjugates,
        "order formulations disagree on {nu} vs {lambda}"
    );
    Ok(by_weights)
}

/// The same order via conjugates: `ν ⪯ λ` iff `ν'` dominates `λ'`
/// (equivalently `λ` dominates `ν`). Sizes are assumed equal.
pub fn conjugate_dominance_leq(nu: &Partition, lambda: &Partition) -> bool {
    // Σ_j min(j,i) l_j = λ'_1 + ⋯ + λ'_i
    let upto = nu.largest().max(lambda.largest());
    let mut sl = 0;
    let mut sn = 0;
    for k in 1..=upto {
        sl += lambda.conj_part(k);
        sn += nu.conj_part(k);
        if sl > sn {
            return false;
        }
    }
    true
}

/// Ordinary dominance `λ ⊴ μ`: partial sums of `λ` bounded by those of `μ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> bool {
    let n = lambda.len().max(mu.len());
    let (mut a, mut b) = (0u32, 0u32);
    for i in 0..n {
        a += lambda.0.get(i).copied().unwrap_or(0);
        b += mu.0.get(i).copied().unwrap_or(0);
        if a > b {
            return false;
        }
    }
    true
}

/// Linear extension of `⪯` on a set of partitions of one size: repeatedly
/// emit the lexicographically least minimal element.
pub fn refinement_order(parts: &[Partition]) -> Vec<Partition> {
    let mut rest: Vec<Partition> = parts.to_vec();
    rest.sort();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let idx = (0..rest.len())
            .find(|&i| {
                rest.iter()
                    .enumerate()
                    .all(|(j, p)| j == i || !conjugate_dominance_leq(p, &rest[i]))
            })
            .expect("a finite poset has a minimal element");
        out.push(rest.remove(idx));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("(1,1)".parse::<Partition>().unwrap(), p(&[1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,x]".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn nstat_examples() {
        assert_eq!(nstat(&p(&[1])), 0);
        assert_eq!(nstat(&p(&[2, 1])), 1);
        assert_eq!(nstat(&p(&[1, 1, 1])), 3);
    }

    #[test]
    fn aut_poly_examples() {
        let q = LaurentPoly::var();
        let one = LaurentPoly::one();
        assert_eq!(aut_poly(&p(&[1])), &q - &one);
        let q2 = q.pow(2);
        assert_eq!(aut_poly(&p(&[1, 1])), &(&q2 - &one) * &(&q2 - &q));
        let q3 = q.pow(3);
        assert_eq!(aut_poly(&p(&[2, 1])), &(&q3 - &q2) * &(&q2 - &q));
        assert_eq!(aut_poly(&p(&[2])), &q2 - &q);
        assert_eq!(aut_poly(&Partition::empty()), one);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&p(&[3])), p(&[1, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn conjugation_and_nstat_up_to_ten() {
        for l in partitions_up_to(10) {
            let c = conjugate(&l);
            assert_eq!(conjugate(&c), l);
            let s: u64 = c
                .parts()
                .iter()
                .map(|&k| k as u64 * (k as u64).saturating_sub(1) / 2)
                .sum();
            assert_eq!(nstat(&l), s);
        }
    }

    #[test]
    fn partition_counts_and_order() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for n in 0..=8 {
            let ps = partitions_of(n);
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn order_examples() {
        assert!(transpose_dominance_leq(&p(&[1, 1]), &p(&[2])).unwrap());
        assert!(!transpose_dominance_leq(&p(&[2]), &p(&[1, 1])).unwrap());
        assert!(transpose_dominance_leq(&p(&[2, 1]), &p(&[2, 1])).unwrap());
        assert!(!transpose_dominance_leq(&p(&[3]), &p(&[1, 1, 1])).unwrap());
        assert!(matches!(
            transpose_dominance_leq(&p(&[3]), &p(&[1])),
            Err(HallError::Domain(_))
        ));
    }

    #[test]
    fn order_is_partial_order_and_matches_dominance() {
        for n in 0..=8 {
            let ps = partitions_of(n);
            for a in &ps {
                assert!(transpose_dominance_leq(a, a).unwrap());
                for b in &ps {
                    let ab = transpose_dominance_leq(a, b).unwrap();
                    let ba = transpose_dominance_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    assert_eq!(ab, dominance_leq(a, b));
                    for c in &ps {
                        if ab && transpose_dominance_leq(b, c).unwrap() {
                            assert!(transpose_dominance_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lex_order_extends_the_order() {
        for n in 0..=8 {
            let ps = partitions_of(n);
            assert_eq!(refinement_order(&ps), ps);
        }
    }

    #[test]
    fn serde_as_array() {
        let l = p(&[3, 1]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(v in proptest::collection::vec(1u32..8, 0..8)) {
            let l = Partition::from_unsorted(v);
            prop_assert_eq!(conjugate(&conjugate(&l)), l.clone());
            prop_assert_eq!(conjugate(&l).size(), l.size());
        }
    }
}
