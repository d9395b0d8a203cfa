use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::KClass;
use crate::classical::{self, Classical};
use crate::error::{domain, HallError, Result};
use crate::exactnum::{Field, LaurentPoly, QrtScalar, RatFunc, Scalar};
use crate::partitions::{aut_poly, partitions_of, Partition};
use crate::quiverrep::{IsoLabel, Quiver, RepCategory};

/// A finitary category with finite subobjects, seen through its Hall data.
///
/// `Scalar` holds structure constants; `Pair` holds values of the Green
/// pairing, which need `1/a_M`.
pub trait Backend: Send + Sync {
    type Label: Clone + Ord + Hash + Debug + Display + Serialize + Send + Sync + 'static;
    type Scalar: Scalar;
    type Pair: Field;

    fn name(&self) -> String;

    /// Rank of the K-group.
    fn rank(&self) -> usize;

    /// All isomorphism classes of K-class `k` (empty for non-effective `k`).
    fn labels(&self, k: &KClass) -> Result<Vec<Self::Label>>;

    fn weight(&self, l: &Self::Label) -> KClass;

    fn zero_label(&self) -> Self::Label;

    /// `⟨α,β⟩_a`.
    fn euler_add(&self, a: &KClass, b: &KClass) -> i64;

    /// `(α,β)_a = ⟨α,β⟩_a + ⟨β,α⟩_a`.
    fn symmetric_add(&self, a: &KClass, b: &KClass) -> i64 {
        self.euler_add(a, b) + self.euler_add(b, a)
    }

    fn scalar_int(&self, n: i64) -> Self::Scalar;

    /// `ν^e`.
    fn nu_pow(&self, e: i64) -> Self::Scalar;

    fn to_pair(&self, s: &Self::Scalar) -> Self::Pair;

    /// `G^R_{MN} = #{L ⊂ R : L ≅ N, R/L ≅ M}`.
    fn count_submodules(&self, r: &Self::Label, m: &Self::Label, n: &Self::Label) -> Result<Self::Scalar>;

    /// `a_M = |Aut M|`.
    fn aut_count(&self, m: &Self::Label) -> Result<Self::Scalar>;

    /// `Σ_R G^R_{MN} [R]`, without the Euler twist.
    fn hall_product(&self, m: &Self::Label, n: &Self::Label) -> Result<Vec<(Self::Label, Self::Scalar)>>;

    /// `(M, N, a_M a_N G^R_{MN} / a_R)` over all nonzero entries, without the
    /// Euler twist. `M` is the quotient.
    fn hall_coproduct(&self, r: &Self::Label) -> Result<Vec<(Self::Label, Self::Label, Self::Scalar)>>;

    /// `1/a_M`.
    fn inv_aut(&self, m: &Self::Label) -> Result<Self::Pair> {
        self.to_pair(&self.aut_count(m)?)
            .inverse()
            .ok_or_else(|| HallError::Consistency(format!("|Aut {m}| is not invertible")))
    }

    /// K-classes `β` with `0 ≤ β ≤ k` componentwise.
    fn sub_classes(&self, k: &KClass) -> Vec<KClass> {
        let mut out = vec![Vec::new()];
        for &c in &k.0 {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..=c.max(0)).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(KClass).collect()
    }
}

/// The classical Hall algebra, generic in `t`, with K-group `Z` and a
/// vanishing Euler form.
#[derive(Debug, Clone)]
pub struct ClassicalGeneric {
    max_degree: u32,
}

impl Default for ClassicalGeneric {
    fn default() -> Self {
        Self { max_degree: 16 }
    }
}

impl ClassicalGeneric {
    pub fn new(max_degree: u32) -> Self {
        Self { max_degree }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn cl(&self) -> &'static Classical {
        classical::global()
    }

    fn check(&self, n: u32) -> Result<()> {
        if n > self.max_degree {
            return Err(HallError::Resource(format!(
                "degree {n} exceeds the classical budget {}",
                self.max_degree
            )));
        }
        Ok(())
    }
}

impl Backend for ClassicalGeneric {
    type Label = Partition;
    type Scalar = LaurentPoly;
    type Pair = RatFunc;

    fn name(&self) -> String {
        "classical".into()
    }

    fn rank(&self) -> usize {
        1
    }

    fn labels(&self, k: &KClass) -> Result<Vec<Partition>> {
        if k.0.len() != 1 {
            return domain(format!("classical K-classes have rank 1, got {k}"));
        }
        if k.0[0] < 0 {
            return Ok(Vec::new());
        }
        self.check(k.0[0] as u32)?;
        Ok(partitions_of(k.0[0] as u32))
    }

    fn weight(&self, l: &Partition) -> KClass {
        KClass(vec![l.size() as i64])
    }

    fn zero_label(&self) -> Partition {
        Partition::empty()
    }

    fn euler_add(&self, _a: &KClass, _b: &KClass) -> i64 {
        0
    }

    fn scalar_int(&self, n: i64) -> LaurentPoly {
        LaurentPoly::constant(n)
    }

    fn nu_pow(&self, e: i64) -> LaurentPoly {
        assert!(e % 2 == 0, "odd power of t^(1/2) requested from the classical backend");
        LaurentPoly::monomial(1, e / 2)
    }

    fn to_pair(&self, s: &LaurentPoly) -> RatFunc {
        RatFunc::from_laurent(s.clone())
    }

    fn count_submodules(&self, r: &Partition, m: &Partition, n: &Partition) -> Result<LaurentPoly> {
        self.check(r.size())?;
        self.cl().hall_poly(r, m, n)
    }

    fn aut_count(&self, m: &Partition) -> Result<LaurentPoly> {
        Ok(aut_poly(m))
    }

    fn hall_product(&self, m: &Partition, n: &Partition) -> Result<Vec<(Partition, LaurentPoly)>> {
        self.check(m.size() + n.size())?;
        Ok(self
            .cl()
            .try_product_basis(m, n)?
            .terms()
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect())
    }

    fn hall_coproduct(&self, r: &Partition) -> Result<Vec<(Partition, Partition, LaurentPoly)>> {
        self.check(r.size())?;
        Ok(self
            .cl()
            .comult_basis(r)?
            .terms()
            .map(|((a, b), c)| (a.clone(), b.clone(), c.clone()))
            .collect())
    }

    fn inv_aut(&self, m: &Partition) -> Result<RatFunc> {
        Ok(RatFunc::new(LaurentPoly::one(), aut_poly(m)).expect("a_λ is a nonzero polynomial"))
    }
}

/// Representations of a quiver (or nilpotent Jordan modules) over `F_q`.
#[derive(Debug)]
pub struct QuiverAtQ {
    cat: RepCategory,
    name: String,
}

impl QuiverAtQ {
    pub fn new(cat: RepCategory, name: impl Into<String>) -> Self {
        Self { cat, name: name.into() }
    }

    pub fn from_quiver(quiver: &Quiver, q: u32, nilpotent: bool) -> Result<Self> {
        Ok(Self::new(RepCategory::new(quiver, q, nilpotent)?, "quiver"))
    }

    pub fn jordan(q: u32) -> Result<Self> {
        Ok(Self::new(RepCategory::jordan(q)?, "jordan"))
    }

    pub fn category(&self) -> &RepCategory {
        &self.cat
    }

    pub fn q(&self) -> u64 {
        self.cat.q() as u64
    }

    /// The simple representation at vertex `i`.
    pub fn simple(&self, i: usize) -> Result<IsoLabel> {
        if i >= self.cat.n_vertices() {
            return domain(format!("vertex {i} out of range"));
        }
        let mut d = vec![0; self.cat.n_vertices()];
        d[i] = 1;
        let labels = self.cat.labels_of_dim(&d)?;
        if labels.len() != 1 {
            return Err(HallError::Consistency(format!(
                "{} classes of dimension ε_{i}",
                labels.len()
            )));
        }
        Ok(labels.into_iter().next().unwrap())
    }

    fn dims(k: &KClass) -> Option<Vec<usize>> {
        k.0.iter().map(|&c| usize::try_from(c).ok()).collect()
    }

    fn rational(&self, r: BigRational) -> QrtScalar {
        QrtScalar::from_rational(self.q(), r)
    }
}

impl Backend for QuiverAtQ {
    type Label = IsoLabel;
    type Scalar = QrtScalar;
    type Pair = QrtScalar;

    fn name(&self) -> String {
        format!("{}@q={}", self.name, self.cat.q())
    }

    fn rank(&self) -> usize {
        self.cat.n_vertices()
    }

    fn labels(&self, k: &KClass) -> Result<Vec<IsoLabel>> {
        if k.0.len() != self.rank() {
            return domain(format!("K-class {k} for a category of rank {}", self.rank()));
        }
        match Self::dims(k) {
            Some(d) => self.cat.labels_of_dim(&d),
            None => Ok(Vec::new()),
        }
    }

    fn weight(&self, l: &IsoLabel) -> KClass {
        KClass(self.cat.dim_of(l).into_iter().map(|d| d as i64).collect())
    }

    fn zero_label(&self) -> IsoLabel {
        self.cat.zero_label()
    }

    fn euler_add(&self, a: &KClass, b: &KClass) -> i64 {
        self.cat
            .euler_add(&a.0, &b.0)
            .expect("K-classes of matching rank")
    }

    fn scalar_int(&self, n: i64) -> QrtScalar {
        QrtScalar::from_int(self.q(), n)
    }

    fn nu_pow(&self, e: i64) -> QrtScalar {
        QrtScalar::nu_pow(self.q(), e)
    }

    fn to_pair(&self, s: &QrtScalar) -> QrtScalar {
        s.clone()
    }

    fn count_submodules(&self, r: &IsoLabel, m: &IsoLabel, n: &IsoLabel) -> Result<QrtScalar> {
        Ok(self.scalar_int(self.cat.hall_number(r, m, n)? as i64))
    }

    fn aut_count(&self, m: &IsoLabel) -> Result<QrtScalar> {
        Ok(QrtScalar::from_int(self.q(), self.cat.aut(m)?))
    }

    fn hall_product(&self, m: &IsoLabel, n: &IsoLabel) -> Result<Vec<(IsoLabel, QrtScalar)>> {
        let d: Vec<usize> = self
            .cat
            .dim_of(m)
            .iter()
            .zip(self.cat.dim_of(n))
            .map(|(a, b)| a + b)
            .collect();
        let mut out = Vec::new();
        for r in self.cat.labels_of_dim(&d)? {
            let g = self.cat.hall_number(&r, m, n)?;
            if g != 0 {
                out.push((r, self.scalar_int(g as i64)));
            }
        }
        Ok(out)
    }

    fn hall_coproduct(&self, r: &IsoLabel) -> Result<Vec<(IsoLabel, IsoLabel, QrtScalar)>> {
        let table = self.cat.hall_table(r)?;
        let ar = BigInt::from(self.cat.aut(r)?);
        let mut entries: Vec<_> = table.iter().collect();
        entries.sort();
        let mut out = Vec::with_capacity(entries.len());
        for ((m, n), &g) in entries {
            let num = BigInt::from(self.cat.aut(m)?) * BigInt::from(self.cat.aut(n)?) * BigInt::from(g);
            out.push((m.clone(), n.clone(), self.rational(BigRational::new(num, ar.clone()))));
        }
        Ok(out)
    }
}
