//! Categories of (nilpotent) representations over `F_q` with deterministic
//! isomorphism-class labels, Hall numbers and automorphism counts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::fp::{is_prime, primitive_root, Mat};
use super::quiver::{euler_form_arrows, Quiver};
use super::rep::{self, QuiverRep};
use crate::error::{domain, HallError, Result};
use crate::partitions::{conjugate, partitions_of, Partition};

/// Default cap on enumerated points (matrix tuples, endomorphisms, ...).
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Canonical name of an isomorphism class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum IsoLabel {
    /// The orbit with the given position among the orbits of one dimension
    /// vector, ordered by their lexicographically least point.
    Orbit {
        dim: Vec<usize>,
        index: usize,
        min_point: u64,
    },
    /// Jordan type of a nilpotent operator.
    Partition(Partition),
    /// Cyclic quiver: entry `s` lists the lengths of the indecomposable
    /// summands whose socle sits at vertex `s`.
    Cyclic(Vec<Partition>),
}

impl fmt::Display for IsoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoLabel::Orbit { dim, index, .. } => {
                let d: Vec<String> = dim.iter().map(|x| x.to_string()).collect();
                write!(f, "c{index}@({})", d.join(","))
            }
            IsoLabel::Partition(p) => write!(f, "{p}"),
            IsoLabel::Cyclic(ps) => {
                let inner: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "I({})", inner.join(","))
            }
        }
    }
}

/// How isomorphism classes are identified.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classifier {
    /// Full orbit enumeration of the representation space.
    Orbit,
    /// Ranks of powers of the nilpotent operator (Jordan quiver).
    Jordan,
    /// Socle filtration (cyclic quiver, nilpotent representations).
    Cyclic,
}

/// The result of enumerating every point of one representation space.
pub struct OrbitData {
    pub classes: Vec<OrbitClass>,
    point_class: Vec<u32>,
    pub total_points: u64,
    pub nilpotent_points: u64,
}

pub struct OrbitClass {
    pub min_point: u64,
    pub size: u64,
    pub rep: QuiverRep,
}

/// One isomorphism class of a fixed dimension vector.
#[derive(Clone, Debug)]
pub struct IsoClass {
    pub label: IsoLabel,
    pub rep: QuiverRep,
    pub orbit_size: u128,
}

/// `(quotient label, sub label) → number of such subobjects`.
pub type HallTable = HashMap<(IsoLabel, IsoLabel), u64>;

const UNSEEN: u32 = u32::MAX;
const NOT_NILPOTENT: u32 = u32::MAX - 1;

pub struct RepCategory {
    quiver: Option<Quiver>,
    n: usize,
    arrows: Vec<(usize, usize)>,
    q: u32,
    nilpotent: bool,
    classifier: Classifier,
    budget: u64,
    orbits: RwLock<HashMap<Vec<usize>, Arc<OrbitData>>>,
    halls: RwLock<HashMap<IsoLabel, Arc<HallTable>>>,
    auts: RwLock<HashMap<IsoLabel, u64>>,
}

impl fmt::Debug for RepCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RepCategory")
            .field("n", &self.n)
            .field("arrows", &self.arrows)
            .field("q", &self.q)
            .field("nilpotent", &self.nilpotent)
            .field("classifier", &self.classifier)
            .finish()
    }
}

fn check_field(q: u32) -> Result<()> {
    if !is_prime(q) || q >= 1 << 15 {
        return domain(format!("q = {q} must be a prime below 32768"));
    }
    Ok(())
}

impl RepCategory {
    /// Representations of `quiver` over `F_q`. With `nilpotent` set on a
    /// cyclic quiver the socle classifier is used; otherwise orbits.
    pub fn new(quiver: &Quiver, q: u32, nilpotent: bool) -> Result<Self> {
        check_field(q)?;
        let classifier = if nilpotent && quiver.is_oriented_cycle() {
            Classifier::Cyclic
        } else {
            Classifier::Orbit
        };
        Ok(Self {
            quiver: Some(quiver.clone()),
            n: quiver.n_vertices(),
            arrows: quiver.arrows().to_vec(),
            q,
            nilpotent: nilpotent || !quiver.has_oriented_cycle(),
            classifier,
            budget: DEFAULT_BUDGET,
            orbits: Default::default(),
            halls: Default::default(),
            auts: Default::default(),
        })
    }

    /// Nilpotent representations of the Jordan quiver over `F_q`.
    pub fn jordan(q: u32) -> Result<Self> {
        check_field(q)?;
        Ok(Self {
            quiver: None,
            n: 1,
            arrows: vec![(0, 0)],
            q,
            nilpotent: true,
            classifier: Classifier::Jordan,
            budget: DEFAULT_BUDGET,
            orbits: Default::default(),
            halls: Default::default(),
            auts: Default::default(),
        })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Switches the classifier. Orbit classification is always available;
    /// the closed forms need the matching quiver shape.
    pub fn with_classifier(mut self, c: Classifier) -> Result<Self> {
        let ok = match c {
            Classifier::Orbit => true,
            Classifier::Jordan => self.quiver.is_none(),
            Classifier::Cyclic => {
                self.nilpotent && self.quiver.as_ref().is_some_and(|q| q.is_oriented_cycle())
            }
        };
        if !ok {
            return domain(format!("classifier {c:?} does not apply to this category"));
        }
        self.classifier = c;
        self.orbits = Default::default();
        self.halls = Default::default();
        self.auts = Default::default();
        Ok(self)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn quiver(&self) -> Option<&Quiver> {
        self.quiver.as_ref()
    }

    pub fn is_jordan(&self) -> bool {
        self.quiver.is_none()
    }

    pub fn nilpotent(&self) -> bool {
        self.nilpotent
    }

    pub fn classifier(&self) -> Classifier {
        self.classifier
    }

    fn needs_nilpotency_filter(&self) -> bool {
        self.quiver.as_ref().is_none_or(|q| q.has_oriented_cycle()) && self.nilpotent
    }

    pub fn euler_add(&self, a: &[i64], b: &[i64]) -> Result<i64> {
        euler_form_arrows(self.n, &self.arrows, a, b)
    }

    fn check_dims(&self, d: &[usize]) -> Result<()> {
        if d.len() != self.n {
            return domain(format!("dimension vector {d:?} for {} vertices", self.n));
        }
        Ok(())
    }

    /// Number of matrix entries of a representation of dimension `d`.
    pub fn entries(&self, d: &[usize]) -> usize {
        self.arrows.iter().map(|&(s, t)| d[s] * d[t]).sum()
    }

    /// `q^{Σ_h d_t d_s}`, or `None` on overflow.
    pub fn total_points(&self, d: &[usize]) -> Option<u64> {
        (self.q as u64).checked_pow(self.entries(d) as u32)
    }

    fn decode(&self, d: &[usize], mut point: u64) -> QuiverRep {
        let n = self.entries(d);
        let mut digits = vec![0u32; n];
        for k in (0..n).rev() {
            digits[k] = (point % self.q as u64) as u32;
            point /= self.q as u64;
        }
        let mut it = digits.into_iter();
        let mats = self
            .arrows
            .iter()
            .map(|&(s, t)| {
                let mut m = Mat::zeros(d[t], d[s]);
                for v in m.data.iter_mut() {
                    *v = it.next().unwrap();
                }
                m
            })
            .collect();
        QuiverRep {
            q: self.q,
            dims: d.to_vec(),
            arrows: self.arrows.clone(),
            mats,
        }
    }

    fn encode(&self, r: &QuiverRep) -> u64 {
        r.mats
            .iter()
            .flat_map(|m| m.data.iter())
            .fold(0u64, |acc, &v| acc * self.q as u64 + v as u64)
    }

    /// Generators of `Π_i GL(d_i)` as `(vertex, g, g^{-1})`.
    fn group_generators(&self, d: &[usize]) -> Vec<(usize, Mat, Mat)> {
        let p = self.q;
        let w = primitive_root(p);
        let mut gens = Vec::new();
        for (i, &n) in d.iter().enumerate() {
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        let mut g = Mat::identity(n);
                        g.set(a, b, 1);
                        let mut gi = Mat::identity(n);
                        gi.set(a, b, p - 1);
                        gens.push((i, g, gi));
                    }
                }
            }
            if n > 0 && w != 1 {
                let mut g = Mat::identity(n);
                g.set(0, 0, w);
                let mut gi = Mat::identity(n);
                gi.set(0, 0, super::fp::inv_mod(w, p));
                gens.push((i, g, gi));
            }
        }
        gens
    }

    fn act(&self, r: &QuiverRep, (i, g, gi): &(usize, Mat, Mat)) -> QuiverRep {
        let mut out = r.clone();
        for (h, &(s, t)) in self.arrows.iter().enumerate() {
            let mut m = out.mats[h].clone();
            if t == *i {
                m = g.mul(&m, self.q);
            }
            if s == *i {
                m = m.mul(gi, self.q);
            }
            out.mats[h] = m;
        }
        out
    }

    /// Enumerates every point of the representation space of dimension `d`
    /// (restricted to nilpotent points when required) and splits it into
    /// orbits under base change.
    pub fn orbit_data(&self, d: &[usize]) -> Result<Arc<OrbitData>> {
        self.check_dims(d)?;
        if let Some(o) = self.orbits.read().unwrap().get(d) {
            return Ok(o.clone());
        }
        let total = match self.total_points(d) {
            Some(t) if t <= self.budget => t,
            _ => {
                return Err(HallError::Resource(format!(
                    "representation space of dimension {d:?} has q^{} points, over budget {}",
                    self.entries(d),
                    self.budget
                )))
            }
        };
        let gens = self.group_generators(d);
        let filter = self.needs_nilpotency_filter();
        let mut point_class = vec![UNSEEN; total as usize];
        let mut classes = Vec::new();
        let mut nilpotent_points = 0u64;
        for start in 0..total {
            if point_class[start as usize] != UNSEEN {
                continue;
            }
            let rep0 = self.decode(d, start);
            if filter && !rep0.is_nilpotent() {
                point_class[start as usize] = NOT_NILPOTENT;
                continue;
            }
            let id = classes.len() as u32;
            point_class[start as usize] = id;
            let mut stack = vec![rep0.clone()];
            let mut size = 1u64;
            while let Some(r) = stack.pop() {
                for g in &gens {
                    let r2 = self.act(&r, g);
                    let pt = self.encode(&r2) as usize;
                    if point_class[pt] == UNSEEN {
                        point_class[pt] = id;
                        size += 1;
                        stack.push(r2);
                    }
                }
            }
            nilpotent_points += size;
            classes.push(OrbitClass {
                min_point: start,
                size,
                rep: rep0,
            });
        }
        let data = Arc::new(OrbitData {
            classes,
            point_class,
            total_points: total,
            nilpotent_points,
        });
        self.orbits.write().unwrap().insert(d.to_vec(), data.clone());
        Ok(data)
    }

    fn orbit_label(&self, d: &[usize], index: usize, min_point: u64) -> IsoLabel {
        IsoLabel::Orbit {
            dim: d.to_vec(),
            index,
            min_point,
        }
    }

    /// The vertex feeding into each vertex of an oriented cycle.
    fn predecessors(&self) -> Vec<usize> {
        let mut pred = vec![0; self.n];
        for &(s, t) in &self.arrows {
            pred[t] = s;
        }
        pred
    }

    fn block_rep(&self, blocks: &[(usize, u32)]) -> QuiverRep {
        let pred = self.predecessors();
        let mut acc = QuiverRep::zero(self.q, vec![0; self.n], self.arrows.clone());
        for &(socle, len) in blocks {
            // basis b_0..b_{len-1}, b_k at pred^k(socle), arrows send b_k ↦ b_{k-1}
            let mut at = Vec::with_capacity(len as usize);
            let mut v = socle;
            for _ in 0..len {
                at.push(v);
                v = pred[v];
            }
            let mut dims = vec![0usize; self.n];
            let mut coord = Vec::with_capacity(len as usize);
            for &u in &at {
                coord.push(dims[u]);
                dims[u] += 1;
            }
            let mut mats: Vec<Mat> = self.arrows.iter().map(|&(s, t)| Mat::zeros(dims[t], dims[s])).collect();
            for k in 1..len as usize {
                let (src, tgt) = (at[k], at[k - 1]);
                let h = self
                    .arrows
                    .iter()
                    .position(|&a| a == (src, tgt))
                    .expect("consecutive block vertices are joined by an arrow");
                mats[h].set(coord[k - 1], coord[k], 1);
            }
            let block = QuiverRep {
                q: self.q,
                dims,
                arrows: self.arrows.clone(),
                mats,
            };
            acc = acc.direct_sum(&block);
        }
        acc
    }

    fn cyclic_blocks(tuple: &[Partition]) -> Vec<(usize, u32)> {
        tuple
            .iter()
            .enumerate()
            .flat_map(|(s, p)| p.parts().iter().map(move |&l| (s, l)))
            .collect()
    }

    fn cyclic_dim(&self, tuple: &[Partition]) -> Vec<usize> {
        let pred = self.predecessors();
        let mut d = vec![0; self.n];
        for (s, l) in Self::cyclic_blocks(tuple) {
            let mut v = s;
            for _ in 0..l {
                d[v] += 1;
                v = pred[v];
            }
        }
        d
    }

    /// All tuples of partitions (one per vertex) of total size `n`.
    fn partition_tuples(&self, n: u32) -> Vec<Vec<Partition>> {
        fn rec(k: usize, left: u32, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
            if k == 0 {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for size in 0..=left {
                for p in partitions_of(size) {
                    cur.push(p);
                    rec(k - 1, left - size, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(self.n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Labels of all classes of dimension vector `d`, in increasing order.
    pub fn labels_of_dim(&self, d: &[usize]) -> Result<Vec<IsoLabel>> {
        self.check_dims(d)?;
        match self.classifier {
            Classifier::Orbit => {
                let od = self.orbit_data(d)?;
                Ok(od
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(i, c)| self.orbit_label(d, i, c.min_point))
                    .collect())
            }
            Classifier::Jordan => Ok(partitions_of(d[0] as u32)
                .into_iter()
                .map(IsoLabel::Partition)
                .collect()),
            Classifier::Cyclic => {
                let total: usize = d.iter().sum();
                Ok(self
                    .partition_tuples(total as u32)
                    .into_iter()
                    .filter(|t| self.cyclic_dim(t) == d)
                    .map(IsoLabel::Cyclic)
                    .collect())
            }
        }
    }

    pub fn dim_of(&self, label: &IsoLabel) -> Vec<usize> {
        match label {
            IsoLabel::Orbit { dim, .. } => dim.clone(),
            IsoLabel::Partition(p) => vec![p.size() as usize],
            IsoLabel::Cyclic(t) => self.cyclic_dim(t),
        }
    }

    pub fn zero_label(&self) -> IsoLabel {
        let d = vec![0; self.n];
        self.labels_of_dim(&d)
            .expect("the zero space is always enumerable")
            .remove(0)
    }

    /// A representative of `label`.
    pub fn representative(&self, label: &IsoLabel) -> Result<QuiverRep> {
        match (label, self.classifier) {
            (IsoLabel::Orbit { dim, index, min_point }, Classifier::Orbit) => {
                let od = self.orbit_data(dim)?;
                match od.classes.get(*index) {
                    Some(c) if c.min_point == *min_point => Ok(c.rep.clone()),
                    _ => domain(format!("unknown class {label}")),
                }
            }
            (IsoLabel::Partition(p), Classifier::Jordan) => Ok(self.block_rep(
                &p.parts().iter().map(|&l| (0usize, l)).collect::<Vec<_>>(),
            )),
            (IsoLabel::Cyclic(t), Classifier::Cyclic) if t.len() == self.n => {
                Ok(self.block_rep(&Self::cyclic_blocks(t)))
            }
            _ => domain(format!("label {label} does not belong to this category")),
        }
    }

    /// Jordan type from ranks: `#{blocks of length ≥ l} = rk X^{l−1} − rk X^l`.
    pub fn jordan_type(&self, r: &QuiverRep) -> Result<Partition> {
        let x = r.total_operator();
        let n = x.rows;
        let mut ranks = vec![n];
        let mut pw = Mat::identity(n);
        for _ in 0..n {
            pw = pw.mul(&x, self.q);
            ranks.push(pw.rank(self.q));
        }
        if ranks[n] != 0 {
            return domain("operator is not nilpotent");
        }
        let conj: Vec<u32> = ranks
            .windows(2)
            .map(|w| (w[0] - w[1]) as u32)
            .filter(|&c| c > 0)
            .collect();
        Ok(conjugate(&Partition::new(conj)?))
    }

    /// Socle-vertex decomposition: the number of summands of length `≥ l`
    /// with socle at `s` is `dim (Im X^{l−1} ∩ Ker X)_s`.
    pub fn socle_type(&self, r: &QuiverRep) -> Result<Vec<Partition>> {
        if !r.is_nilpotent() {
            return domain("representation is not nilpotent");
        }
        let p = self.q;
        let pred = self.predecessors();
        let arrow_into: Vec<usize> = (0..self.n)
            .map(|t| self.arrows.iter().position(|&(_, tt)| tt == t).unwrap())
            .collect();
        let arrow_out: Vec<usize> = (0..self.n)
            .map(|s| self.arrows.iter().position(|&(ss, _)| ss == s).unwrap())
            .collect();
        let total = r.total_dim();
        let mut out = Vec::with_capacity(self.n);
        for s in 0..self.n {
            let ds = r.dims[s];
            let kernel = r.mats[arrow_out[s]].nullspace(p);
            // path matrix from pred^m(s) to s
            let mut path = Mat::identity(ds);
            let mut src = s;
            let mut counts = Vec::new();
            for _ in 0..=total {
                let img_rank = path.rank(p);
                let inter = if img_rank == 0 || kernel.is_empty() {
                    0
                } else {
                    let img = path.transpose();
                    let ker = Mat::from_vectors(&kernel, ds);
                    img_rank + kernel.len() - img.vstack(&ker).rank(p)
                };
                counts.push(inter as u32);
                if inter == 0 {
                    break;
                }
                let h = arrow_into[src];
                path = path.mul(&r.mats[h], p);
                src = pred[src];
            }
            let mut parts = Vec::new();
            for l in 0..counts.len() {
                let here = counts[l] - counts.get(l + 1).copied().unwrap_or(0);
                for _ in 0..here {
                    parts.push(l as u32 + 1);
                }
            }
            out.push(Partition::from_unsorted(parts));
        }
        Ok(out)
    }

    /// The label of the class containing `r`.
    pub fn classify(&self, r: &QuiverRep) -> Result<IsoLabel> {
        if r.q != self.q || r.arrows != self.arrows {
            return domain("representation belongs to another category");
        }
        match self.classifier {
            Classifier::Orbit => {
                let od = self.orbit_data(&r.dims)?;
                let id = od.point_class[self.encode(r) as usize];
                if id == NOT_NILPOTENT || id == UNSEEN {
                    return domain("representation is not nilpotent");
                }
                let c = &od.classes[id as usize];
                Ok(self.orbit_label(&r.dims, id as usize, c.min_point))
            }
            Classifier::Jordan => Ok(IsoLabel::Partition(self.jordan_type(r)?)),
            Classifier::Cyclic => Ok(IsoLabel::Cyclic(self.socle_type(r)?)),
        }
    }

    /// Every class of dimension `d` with a representative and orbit size.
    pub fn enumerate_iso_classes(&self, d: &[usize]) -> Result<Vec<IsoClass>> {
        let labels = self.labels_of_dim(d)?;
        let mut out = Vec::with_capacity(labels.len());
        let od = match self.classifier {
            Classifier::Orbit => Some(self.orbit_data(d)?),
            _ => None,
        };
        for (i, label) in labels.into_iter().enumerate() {
            let rep = self.representative(&label)?;
            let orbit_size = match &od {
                Some(od) => od.classes[i].size as u128,
                None => rep.gl_order() / self.aut(&label)? as u128,
            };
            out.push(IsoClass {
                label,
                rep,
                orbit_size,
            });
        }
        Ok(out)
    }

    /// `|Aut M|`: enumerated within budget, otherwise by socle inversion.
    pub fn aut_count(&self, m: &QuiverRep) -> Result<u64> {
        match rep::aut_count_enumerate(m, self.budget) {
            Err(HallError::Resource(msg)) => {
                if self.nilpotent || m.is_nilpotent() {
                    rep::aut_count_mobius(m)
                } else {
                    Err(HallError::Resource(msg))
                }
            }
            other => other,
        }
    }

    pub fn aut(&self, label: &IsoLabel) -> Result<u64> {
        if let Some(a) = self.auts.read().unwrap().get(label) {
            return Ok(*a);
        }
        let a = self.aut_count(&self.representative(label)?)?;
        self.auts.write().unwrap().insert(label.clone(), a);
        Ok(a)
    }

    pub fn hom_dim(&self, m: &QuiverRep, n: &QuiverRep) -> Result<usize> {
        rep::hom_dim(m, n)
    }

    pub fn is_isomorphic(&self, m: &QuiverRep, n: &QuiverRep) -> Result<bool> {
        rep::is_isomorphic(m, n, self.budget)
    }

    /// `#{L ⊂ R : L ≅ N, R/L ≅ M}`.
    pub fn count_submodules(&self, r: &QuiverRep, m: &IsoLabel, n: &IsoLabel) -> Result<u64> {
        let (dm, dn) = (self.dim_of(m), self.dim_of(n));
        let sum: Vec<usize> = dm.iter().zip(&dn).map(|(a, b)| a + b).collect();
        if sum != r.dims {
            return domain(format!(
                "dim {dm:?} + dim {dn:?} does not equal dim R = {:?}",
                r.dims
            ));
        }
        let mut count = 0u64;
        let mut err = None;
        rep::subrepresentations(r, &dn, |sq| {
            if err.is_some() {
                return;
            }
            match (self.classify(&sq.sub), self.classify(&sq.quotient)) {
                (Ok(a), Ok(b)) => {
                    if &a == n && &b == m {
                        count += 1;
                    }
                }
                (Err(e), _) | (_, Err(e)) => err = Some(e),
            }
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(count),
        }
    }

    /// All Hall numbers `G^R_{MN}` for one `R`.
    pub fn hall_table(&self, r_label: &IsoLabel) -> Result<Arc<HallTable>> {
        if let Some(t) = self.halls.read().unwrap().get(r_label) {
            return Ok(t.clone());
        }
        let r = self.representative(r_label)?;
        let mut table = HallTable::new();
        let mut err = None;
        for e in sub_dims(&r.dims) {
            rep::subrepresentations(&r, &e, |sq| {
                if err.is_some() {
                    return;
                }
                match (self.classify(&sq.quotient), self.classify(&sq.sub)) {
                    (Ok(m), Ok(n)) => *table.entry((m, n)).or_default() += 1,
                    (Err(e), _) | (_, Err(e)) => err = Some(e),
                }
            })?;
        }
        if let Some(e) = err {
            return Err(e);
        }
        let table = Arc::new(table);
        self.halls.write().unwrap().insert(r_label.clone(), table.clone());
        Ok(table)
    }

    pub fn hall_number(&self, r: &IsoLabel, m: &IsoLabel, n: &IsoLabel) -> Result<u64> {
        Ok(self
            .hall_table(r)?
            .get(&(m.clone(), n.clone()))
            .copied()
            .unwrap_or(0))
    }

    /// `|Ext¹(M,N)| = |Hom(M,N)| Σ_R a_M a_N G^R_{MN} / a_R`.
    pub fn ext1_count(&self, m: &IsoLabel, n: &IsoLabel) -> Result<BigInt> {
        let (dm, dn) = (self.dim_of(m), self.dim_of(n));
        let d: Vec<usize> = dm.iter().zip(&dn).map(|(a, b)| a + b).collect();
        let hom = self.hom_dim(&self.representative(m)?, &self.representative(n)?)?;
        let am = BigInt::from(self.aut(m)?);
        let an = BigInt::from(self.aut(n)?);
        let mut acc = BigRational::zero();
        for r in self.labels_of_dim(&d)? {
            let g = self.hall_number(&r, m, n)?;
            if g == 0 {
                continue;
            }
            acc += BigRational::new(&am * &an * BigInt::from(g), BigInt::from(self.aut(&r)?));
        }
        let total = acc * BigRational::from_integer(BigInt::from(self.q).pow(hom as u32));
        if !total.is_integer() {
            return Err(HallError::Consistency(format!(
                "extension count {total} for ({m}, {n}) is not an integer"
            )));
        }
        Ok(total.to_integer())
    }

    /// Labels of every class with dimension vector componentwise `≤ d`,
    /// grouped by dimension vector.
    pub fn labels_up_to(&self, d: &[usize]) -> Result<BTreeMap<Vec<usize>, Vec<IsoLabel>>> {
        let mut out = BTreeMap::new();
        for e in sub_dims(d) {
            out.insert(e.clone(), self.labels_of_dim(&e)?);
        }
        Ok(out)
    }
}

/// Dimension vectors componentwise between `0` and `d`.
pub fn sub_dims(d: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &di in d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=di).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// Number of nilpotent `n × n` matrices over `F_q`: `q^{n(n−1)}`.
pub fn nilpotent_matrix_count(n: u32, q: u32) -> BigInt {
    BigInt::from(q).pow(n * n.saturating_sub(1))
}
