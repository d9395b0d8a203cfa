use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactnum::Scalar;

/// An element of the K-group `Z^r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KClass(pub Vec<i64>);

impl KClass {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, c: i64) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Add for &KClass {
    type Output = KClass;
    fn add(self, o: &KClass) -> KClass {
        assert_eq!(self.0.len(), o.0.len(), "K-classes of different rank");
        KClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &KClass {
    type Output = KClass;
    fn sub(self, o: &KClass) -> KClass {
        assert_eq!(self.0.len(), o.0.len(), "K-classes of different rank");
        KClass(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass(self.0.iter().map(|a| -a).collect())
    }
}

/// `[M]k_α`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Basis<L> {
    pub label: L,
    pub k: KClass,
}

impl<L> Basis<L> {
    pub fn new(label: L, k: KClass) -> Self {
        Self { label, k }
    }
}

/// `[A]⁺ K_δ [B]⁻` in the reduced double.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DoubleKey<L> {
    pub plus: L,
    pub k: KClass,
    pub minus: L,
}

/// A finitely supported linear combination. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct Lin<K, S> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord, S> Default for Lin<K, S> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, S: Scalar> Lin<K, S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: S) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: K, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                let s = v.plus(&c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &K) -> Option<&S> {
        self.terms.get(k)
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.negated());
        }
        out
    }

    pub fn negated(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.negated())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::new();
        for (k, v) in self.terms() {
            out.add_term(k.clone(), v.times(c));
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, S> {
        self.terms
    }
}

impl<K: Ord + Clone, S: Scalar> FromIterator<(K, S)> for Lin<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

pub type HallElement<L, S> = Lin<Basis<L>, S>;
pub type TensorElement<L, S> = Lin<(Basis<L>, Basis<L>), S>;
pub type Tensor3<L, S> = Lin<(Basis<L>, Basis<L>, Basis<L>), S>;
pub type DoubleElement<L, S> = Lin<DoubleKey<L>, S>;
