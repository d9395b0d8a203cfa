//! Backend-generic Hopf structure of extended Hall algebras.
//!
//! Basis elements are `[M]k_α`; Green's coproduct puts the quotient in the
//! left factor.

mod backend;
mod element;

use std::collections::HashMap;
use std::sync::RwLock;

use serde_json::{json, Value};

pub use backend::{Backend, ClassicalGeneric, QuiverAtQ};
pub use element::{Basis, DoubleElement, DoubleKey, HallElement, KClass, Lin, Tensor3, TensorElement};

use crate::error::{domain, HallError, Result};
use crate::exactnum::{balanced_factorial, Field, QrtScalar, Scalar};
use crate::quiverrep::{IsoLabel, Quiver};
use crate::render;

pub type H<B> = HallElement<<B as Backend>::Label, <B as Backend>::Scalar>;
pub type T<B> = TensorElement<<B as Backend>::Label, <B as Backend>::Scalar>;
pub type T3<B> = Tensor3<<B as Backend>::Label, <B as Backend>::Scalar>;
pub type D<B> = DoubleElement<<B as Backend>::Label, <B as Backend>::Pair>;
type B_<B> = Basis<<B as Backend>::Label>;

pub struct Engine<B: Backend> {
    backend: B,
    antipodes: RwLock<HashMap<B::Label, H<B>>>,
    antipodes_inv: RwLock<HashMap<B::Label, H<B>>>,
}

impl<B: Backend> Engine<B> {
    pub fn new(backend: B) -> Self {
        Self {
            backend,
            antipodes: Default::default(),
            antipodes_inv: Default::default(),
        }
    }

    pub fn backend(&self) -> &B {
        &self.backend
    }

    pub fn zero_k(&self) -> KClass {
        KClass::zero(self.backend.rank())
    }

    fn s_one(&self) -> B::Scalar {
        self.backend.scalar_int(1)
    }

    fn p_zero(&self) -> B::Pair {
        self.backend.to_pair(&self.backend.scalar_int(0))
    }

    fn p_nu(&self, e: i64) -> B::Pair {
        self.backend.to_pair(&self.backend.nu_pow(e))
    }

    pub fn is_zero_label(&self, l: &B::Label) -> bool {
        self.backend.weight(l).is_zero()
    }

    pub fn one(&self) -> H<B> {
        self.basis_k(self.backend.zero_label(), self.zero_k())
    }

    pub fn basis(&self, l: B::Label) -> H<B> {
        self.basis_k(l, self.zero_k())
    }

    pub fn basis_k(&self, l: B::Label, k: KClass) -> H<B> {
        Lin::single(Basis::new(l, k), self.s_one())
    }

    pub fn k(&self, alpha: KClass) -> H<B> {
        self.basis_k(self.backend.zero_label(), alpha)
    }

    /// K-class of an element's label; `k_α` has weight zero.
    pub fn weight(&self, b: &B_<B>) -> KClass {
        self.backend.weight(&b.label)
    }

    /// `1_γ = Σ_{M̄=γ} [M]`.
    pub fn one_gamma(&self, gamma: &KClass) -> Result<H<B>> {
        Ok(self
            .backend
            .labels(gamma)?
            .into_iter()
            .map(|l| (Basis::new(l, self.zero_k()), self.s_one()))
            .collect())
    }

    /// Every basis label of K-class componentwise at most `bound`.
    pub fn labels_up_to(&self, bound: &KClass) -> Result<Vec<B::Label>> {
        let mut out = Vec::new();
        for k in self.backend.sub_classes(bound) {
            out.extend(self.backend.labels(&k)?);
        }
        Ok(out)
    }

    /// Every effective K-class of total size at most `n`.
    pub fn classes_of_total_at_most(&self, n: i64) -> Vec<KClass> {
        let r = self.backend.rank();
        self.backend
            .sub_classes(&KClass(vec![n; r]))
            .into_iter()
            .filter(|k| k.total() <= n)
            .collect()
    }

    /// Every label whose K-class has total size at most `n`.
    pub fn labels_of_total_at_most(&self, n: i64) -> Result<Vec<B::Label>> {
        let mut out = Vec::new();
        for k in self.classes_of_total_at_most(n) {
            out.extend(self.backend.labels(&k)?);
        }
        Ok(out)
    }

    fn mul_basis(&self, x: &B_<B>, y: &B_<B>) -> Result<H<B>> {
        let (wm, wn) = (self.weight(x), self.weight(y));
        let twist = self.backend.symmetric_add(&x.k, &wn) + self.backend.euler_add(&wm, &wn);
        let c = self.backend.nu_pow(twist);
        let k = &x.k + &y.k;
        Ok(self
            .backend
            .hall_product(&x.label, &y.label)?
            .into_iter()
            .map(|(r, g)| (Basis::new(r, k.clone()), g.times(&c)))
            .collect())
    }

    /// `([M]k_α)([N]k_β) = (α,N̄)_m ⟨M,N⟩_m Σ_R G^R_{MN} [R]k_{α+β}`.
    pub fn multiply(&self, x: &H<B>, y: &H<B>) -> Result<H<B>> {
        let mut out = Lin::new();
        for (a, u) in x.terms() {
            for (b, w) in y.terms() {
                let c = u.times(w);
                for (key, v) in self.mul_basis(a, b)?.into_terms() {
                    out.add_term(key, v.times(&c));
                }
            }
        }
        Ok(out)
    }

    pub fn product(&self, xs: &[H<B>]) -> Result<H<B>> {
        let mut acc = self.one();
        for x in xs {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn power(&self, x: &H<B>, n: u32) -> Result<H<B>> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    fn comult_basis(&self, b: &B_<B>, extended: bool) -> Result<T<B>> {
        let mut out = Lin::new();
        for (m, n, c) in self.backend.hall_coproduct(&b.label)? {
            let (wm, wn) = (self.backend.weight(&m), self.backend.weight(&n));
            let coeff = c.times(&self.backend.nu_pow(self.backend.euler_add(&wm, &wn)));
            let left_k = if extended { &wn + &b.k } else { b.k.clone() };
            out.add_term((Basis::new(m, left_k), Basis::new(n, b.k.clone())), coeff);
        }
        Ok(out)
    }

    /// `Δ([R]k_α) = Σ ⟨M,N⟩_m (a_M a_N / a_R) G^R_{MN} [M]k_{N̄+α} ⊗ [N]k_α`.
    pub fn comultiply(&self, x: &H<B>) -> Result<T<B>> {
        let mut out = Lin::new();
        for (b, c) in x.terms() {
            for (key, v) in self.comult_basis(b, true)?.into_terms() {
                out.add_term(key, v.times(c));
            }
        }
        Ok(out)
    }

    /// The coproduct of the plain Hall algebra, `[R] ↦ Σ ⟨M,N⟩_m (a_M a_N / a_R) G^R_{MN} [M]⊗[N]`.
    pub fn coproduct_plain(&self, x: &H<B>) -> Result<T<B>> {
        let mut out = Lin::new();
        for (b, c) in x.terms() {
            if !b.k.is_zero() {
                return domain("the plain coproduct is defined on elements without k symbols");
            }
            for (key, v) in self.comult_basis(b, false)?.into_terms() {
                out.add_term(key, v.times(c));
            }
        }
        Ok(out)
    }

    /// `ε([M]k_α) = δ_{M,0}`.
    pub fn counit(&self, x: &H<B>) -> B::Scalar {
        let mut acc = self.backend.scalar_int(0);
        for (b, c) in x.terms() {
            if self.is_zero_label(&b.label) {
                acc = acc.plus(c);
            }
        }
        acc
    }

    /// `(Δ⊗1)Δ`.
    pub fn coproduct3(&self, x: &H<B>) -> Result<T3<B>> {
        let mut out = Lin::new();
        for ((a, b), c) in self.comultiply(x)?.into_terms() {
            for ((a1, a2), v) in self.comult_basis(&a, true)?.into_terms() {
                out.add_term((a1, a2, b.clone()), v.times(&c));
            }
        }
        Ok(out)
    }

    /// `(1⊗Δ)Δ`.
    pub fn coproduct3_right(&self, x: &H<B>) -> Result<T3<B>> {
        let mut out = Lin::new();
        for ((a, b), c) in self.comultiply(x)?.into_terms() {
            for ((b1, b2), v) in self.comult_basis(&b, true)?.into_terms() {
                out.add_term((a.clone(), b1, b2), v.times(&c));
            }
        }
        Ok(out)
    }

    fn tensor_mul_impl(&self, x: &T<B>, y: &T<B>, twisted: bool) -> Result<T<B>> {
        let mut out = Lin::new();
        for ((a, b), u) in x.terms() {
            for ((c, d), w) in y.terms() {
                let mut coeff = u.times(w);
                if twisted {
                    let e = self.backend.symmetric_add(&self.weight(b), &self.weight(c));
                    coeff = coeff.times(&self.backend.nu_pow(e));
                }
                let left = self.mul_basis(a, c)?;
                let right = self.mul_basis(b, d)?;
                for (l, lv) in left.terms() {
                    for (r, rv) in right.terms() {
                        out.add_term((l.clone(), r.clone()), lv.times(rv).times(&coeff));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(x⊗y)(z⊗w) = xz⊗yw`.
    pub fn tensor_multiply(&self, x: &T<B>, y: &T<B>) -> Result<T<B>> {
        self.tensor_mul_impl(x, y, false)
    }

    /// `(x⊗y)(z⊗w) = (wt y, wt z)_m xz⊗yw`.
    pub fn tensor_multiply_twisted(&self, x: &T<B>, y: &T<B>) -> Result<T<B>> {
        self.tensor_mul_impl(x, y, true)
    }

    pub fn tensor_of(&self, x: &H<B>, y: &H<B>) -> T<B> {
        let mut out = Lin::new();
        for (a, u) in x.terms() {
            for (b, w) in y.terms() {
                out.add_term((a.clone(), b.clone()), u.times(w));
            }
        }
        out
    }

    /// `m: x⊗y ↦ xy`.
    pub fn mul_tensor(&self, t: &T<B>) -> Result<H<B>> {
        let mut out = Lin::new();
        for ((a, b), c) in t.terms() {
            for (key, v) in self.mul_basis(a, b)?.into_terms() {
                out.add_term(key, v.times(c));
            }
        }
        Ok(out)
    }

    /// Applies `f⊗g` to a tensor and multiplies the factors.
    pub fn mul_apply(
        &self,
        t: &T<B>,
        f: impl Fn(&H<B>) -> Result<H<B>>,
        g: impl Fn(&H<B>) -> Result<H<B>>,
    ) -> Result<H<B>> {
        let mut out = Lin::new();
        for ((a, b), c) in t.terms() {
            let fa = f(&Lin::single(a.clone(), self.s_one()))?;
            let gb = g(&Lin::single(b.clone(), self.s_one()))?;
            out = out.plus(&self.multiply(&fa, &gb)?.scale(c));
        }
        Ok(out)
    }

    fn pairing_basis(&self, x: &B_<B>, y: &B_<B>) -> Result<Option<B::Pair>> {
        if x.label != y.label {
            return Ok(None);
        }
        let inv = self.backend.inv_aut(&x.label)?;
        Ok(Some(inv.times(&self.p_nu(self.backend.symmetric_add(&x.k, &y.k)))))
    }

    /// `([M]k_α, [N]k_β) = δ_{MN} (α,β)_m / a_M`.
    pub fn pairing(&self, x: &H<B>, y: &H<B>) -> Result<B::Pair> {
        let mut acc = self.p_zero();
        for (a, u) in x.terms() {
            for (b, w) in y.terms() {
                if let Some(p) = self.pairing_basis(a, b)? {
                    acc = acc.plus(&p.times(&self.backend.to_pair(&u.times(w))));
                }
            }
        }
        Ok(acc)
    }

    /// `(x⊗y, z⊗w) = (x,z)(y,w)`.
    pub fn tensor_pairing(&self, x: &T<B>, y: &T<B>) -> Result<B::Pair> {
        let mut acc = self.p_zero();
        for ((a, b), u) in x.terms() {
            for ((c, d), w) in y.terms() {
                let (Some(p), Some(r)) = (self.pairing_basis(a, c)?, self.pairing_basis(b, d)?) else {
                    continue;
                };
                acc = acc.plus(&p.times(&r).times(&self.backend.to_pair(&u.times(w))));
            }
        }
        Ok(acc)
    }

    /// The middle terms `[A]k_{N̄}⊗[N]` of `Δ[M]`, both factors nonzero.
    fn middle_terms(&self, m: &B::Label) -> Result<Vec<(B_<B>, B::Label, B::Scalar)>> {
        let b = Basis::new(m.clone(), self.zero_k());
        Ok(self
            .comult_basis(&b, true)?
            .into_terms()
            .into_iter()
            .filter(|((a, n), _)| !self.is_zero_label(&a.label) && !self.is_zero_label(&n.label))
            .map(|((a, n), c)| (a, n.label, c))
            .collect())
    }

    /// `S([M]) = −k_{−M}([M] + Σ_middle c [A]k_N S([N]))`.
    fn antipode_label(&self, m: &B::Label) -> Result<H<B>> {
        if self.is_zero_label(m) {
            return Ok(self.one());
        }
        if let Some(v) = self.antipodes.read().unwrap().get(m) {
            return Ok(v.clone());
        }
        let mut inner = self.basis(m.clone());
        for (a, n, c) in self.middle_terms(m)? {
            let sn = self.antipode_label(&n)?;
            let term = self.multiply(&Lin::single(a, c), &sn)?;
            inner = inner.plus(&term);
        }
        let km = self.k(-&self.backend.weight(m));
        let out = self.multiply(&km, &inner)?.negated();
        self.antipodes.write().unwrap().insert(m.clone(), out.clone());
        Ok(out)
    }

    /// Antipode by the counit recursion; `S([M]k_α) = k_{−α} S([M])`.
    pub fn antipode(&self, x: &H<B>) -> Result<H<B>> {
        let mut out = Lin::new();
        for (b, c) in x.terms() {
            let s = self.antipode_label(&b.label)?;
            out = out.plus(&self.multiply(&self.k(-&b.k), &s)?.scale(c));
        }
        Ok(out)
    }

    /// `S⁻¹([M]) = −([M] + Σ_middle c S⁻¹([N]) [A]k_N) k_{−M}`.
    fn antipode_inv_label(&self, m: &B::Label) -> Result<H<B>> {
        if self.is_zero_label(m) {
            return Ok(self.one());
        }
        if let Some(v) = self.antipodes_inv.read().unwrap().get(m) {
            return Ok(v.clone());
        }
        let mut inner = self.basis(m.clone());
        for (a, n, c) in self.middle_terms(m)? {
            let sn = self.antipode_inv_label(&n)?;
            let term = self.multiply(&sn, &Lin::single(a, c))?;
            inner = inner.plus(&term);
        }
        let km = self.k(-&self.backend.weight(m));
        let out = self.multiply(&inner, &km)?.negated();
        self.antipodes_inv.write().unwrap().insert(m.clone(), out.clone());
        Ok(out)
    }

    /// Inverse antipode, the antipode for the opposite coproduct;
    /// `S⁻¹([M]k_α) = k_{−α} S⁻¹([M])`.
    pub fn antipode_inv(&self, x: &H<B>) -> Result<H<B>> {
        let mut out = Lin::new();
        for (b, c) in x.terms() {
            let s = self.antipode_inv_label(&b.label)?;
            out = out.plus(&self.multiply(&self.k(-&b.k), &s)?.scale(c));
        }
        Ok(out)
    }

    /// Strict filtrations `M = M_0 ⊋ M_1 ⊋ ⋯ ⊋ M_r = 0` grouped by the
    /// sequence of factors `(M_0/M_1, …, M_{r−1}/M_r)`, with their counts.
    pub fn filtration_counts(&self, m: &B::Label) -> Result<Vec<(Vec<B::Label>, B::Scalar)>> {
        let mut memo = HashMap::new();
        self.filtrations_memo(m, &mut memo)
    }

    #[allow(clippy::type_complexity)]
    fn filtrations_memo(
        &self,
        m: &B::Label,
        memo: &mut HashMap<B::Label, Vec<(Vec<B::Label>, B::Scalar)>>,
    ) -> Result<Vec<(Vec<B::Label>, B::Scalar)>> {
        if self.is_zero_label(m) {
            return Ok(vec![(Vec::new(), self.s_one())]);
        }
        if let Some(v) = memo.get(m) {
            return Ok(v.clone());
        }
        let mut acc: std::collections::BTreeMap<Vec<B::Label>, B::Scalar> = Default::default();
        for (x, l, _) in self.backend.hall_coproduct(m)? {
            if self.is_zero_label(&x) {
                continue;
            }
            let g = self.backend.count_submodules(m, &x, &l)?;
            for (rest, f) in self.filtrations_memo(&l, memo)? {
                let mut seq = vec![x.clone()];
                seq.extend(rest);
                let v = g.times(&f);
                match acc.get_mut(&seq) {
                    Some(e) => *e = e.plus(&v),
                    None => {
                        acc.insert(seq, v);
                    }
                }
            }
        }
        let out: Vec<_> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        memo.insert(m.clone(), out.clone());
        Ok(out)
    }

    /// `S([M]) = Σ_{r≥1} (−1)^r Σ_{X_1..X_r ≠ 0} F^M_{X_1⋯X_r}
    /// Π_i ⟨X_i, X_{i+1}+⋯+X_r⟩_m (Π a_{X_i} / a_M) k_M^{-1}[X_1]⋯[X_r]`.
    fn antipode_closed_label(&self, m: &B::Label) -> Result<H<B>> {
        if self.is_zero_label(m) {
            return Ok(self.one());
        }
        let am = self.backend.aut_count(m)?;
        let mut sum = Lin::new();
        for (seq, f) in self.filtration_counts(m)? {
            let mut num = f;
            for x in &seq {
                num = num.times(&self.backend.aut_count(x)?);
            }
            let mut c = num.try_div(&am).ok_or_else(|| {
                HallError::Consistency(format!("filtration weight of {m} is not exact"))
            })?;
            let weights: Vec<KClass> = seq.iter().map(|x| self.backend.weight(x)).collect();
            let mut tail = self.zero_k();
            let mut twist = 0;
            for w in weights.iter().rev() {
                twist += self.backend.euler_add(w, &tail);
                tail = &tail + w;
            }
            c = c.times(&self.backend.nu_pow(twist));
            if seq.len() % 2 == 1 {
                c = c.negated();
            }
            let factors: Vec<H<B>> = seq.iter().map(|x| self.basis(x.clone())).collect();
            sum = sum.plus(&self.product(&factors)?.scale(&c));
        }
        self.multiply(&self.k(-&self.backend.weight(m)), &sum)
    }

    /// Antipode by the closed filtration formula.
    pub fn antipode_closed(&self, x: &H<B>) -> Result<H<B>> {
        let mut out = Lin::new();
        for (b, c) in x.terms() {
            let s = self.antipode_closed_label(&b.label)?;
            out = out.plus(&self.multiply(&self.k(-&b.k), &s)?.scale(c));
        }
        Ok(out)
    }

    /// `Δ(xy) − Δ(x)Δ(y)` for the plain coproduct and the twisted tensor product.
    pub fn green_compat_residual(&self, x: &H<B>, y: &H<B>) -> Result<T<B>> {
        let lhs = self.coproduct_plain(&self.multiply(x, y)?)?;
        let rhs = self.tensor_multiply_twisted(&self.coproduct_plain(x)?, &self.coproduct_plain(y)?)?;
        Ok(lhs.minus(&rhs))
    }

    /// `Δ(xy) − Δ(x)Δ(y)` in the extended algebra with the ordinary tensor product.
    pub fn green_compat_residual_extended(&self, x: &H<B>, y: &H<B>) -> Result<T<B>> {
        let lhs = self.comultiply(&self.multiply(x, y)?)?;
        let rhs = self.tensor_multiply(&self.comultiply(x)?, &self.comultiply(y)?)?;
        Ok(lhs.minus(&rhs))
    }

    /// `y⁺ x⁻` in the normal form `[A]⁺ K_δ [B]⁻`, with `k⁺_α k⁻_α = 1`.
    pub fn double_normal(&self, y_plus: &B_<B>, x_minus: &B_<B>) -> (DoubleKey<B::Label>, B::Pair) {
        let wb = self.weight(x_minus);
        let key = DoubleKey {
            plus: y_plus.label.clone(),
            k: &y_plus.k - &x_minus.k,
            minus: x_minus.label.clone(),
        };
        (key, self.p_nu(-self.backend.symmetric_add(&x_minus.k, &wb)))
    }

    /// The product `y⁺ x⁻`, already ordered.
    pub fn double_product(&self, y_plus: &H<B>, x_minus: &H<B>) -> D<B> {
        let mut out = Lin::new();
        for (y, u) in y_plus.terms() {
            for (x, w) in x_minus.terms() {
                let (key, c) = self.double_normal(y, x);
                out.add_term(key, c.times(&self.backend.to_pair(&u.times(w))));
            }
        }
        out
    }

    /// Reorders `x⁻ y⁺` into `Σ (x_(1), y_(3)) (S⁻¹(x_(3)), y_(1)) y_(2)⁺ x_(2)⁻`.
    pub fn drinfeld_cross(&self, x_minus: &H<B>, y_plus: &H<B>) -> Result<D<B>> {
        let xs = self.coproduct3(x_minus)?;
        let ys = self.coproduct3(y_plus)?;
        let mut inv_cache: HashMap<B_<B>, H<B>> = HashMap::new();
        let mut out = Lin::new();
        for ((x1, x2, x3), cx) in xs.terms() {
            let s3 = match inv_cache.get(x3) {
                Some(v) => v.clone(),
                None => {
                    let v = self.antipode_inv(&Lin::single(x3.clone(), self.s_one()))?;
                    inv_cache.insert(x3.clone(), v.clone());
                    v
                }
            };
            for ((y1, y2, y3), cy) in ys.terms() {
                let Some(p1) = self.pairing_basis(x1, y3)? else {
                    continue;
                };
                let p2 = self.pairing(&s3, &Lin::single(y1.clone(), self.s_one()))?;
                if p2.is_zero() {
                    continue;
                }
                let (key, c) = self.double_normal(y2, x2);
                let coeff = p1
                    .times(&p2)
                    .times(&c)
                    .times(&self.backend.to_pair(&cx.times(cy)));
                out.add_term(key, coeff);
            }
        }
        Ok(out)
    }

    fn basis_str(&self, b: &B_<B>) -> String {
        let kpart = if b.k.is_zero() { String::new() } else { format!("k{}", b.k) };
        if self.is_zero_label(&b.label) {
            if kpart.is_empty() {
                "1".into()
            } else {
                kpart
            }
        } else {
            format!("{}{}", b.label, kpart)
        }
    }

    fn sort_key(&self, b: &B_<B>) -> (KClass, B::Label, KClass) {
        (self.weight(b), b.label.clone(), b.k.clone())
    }

    fn sorted<'a, K: Ord + 'a, S: 'a>(
        &self,
        terms: impl Iterator<Item = (&'a K, &'a S)>,
        key: impl Fn(&K) -> Vec<(KClass, B::Label, KClass)>,
    ) -> Vec<(&'a K, &'a S)> {
        let mut v: Vec<_> = terms.collect();
        v.sort_by_cached_key(|(k, _)| key(k));
        v
    }

    pub fn render(&self, x: &H<B>) -> String {
        let terms = self.sorted(x.terms(), |b| vec![self.sort_key(b)]);
        render::join_terms(
            terms
                .into_iter()
                .map(|(b, c)| render::term(&c.to_string(), &self.basis_str(b))),
        )
    }

    pub fn render_tensor(&self, t: &T<B>) -> String {
        let terms = self.sorted(t.terms(), |(a, b)| vec![self.sort_key(a), self.sort_key(b)]);
        render::join_terms(terms.into_iter().map(|((a, b), c)| {
            render::term(&c.to_string(), &format!("{}⊗{}", self.basis_str(a), self.basis_str(b)))
        }))
    }

    pub fn render_double(&self, d: &D<B>) -> String {
        let mut terms: Vec<_> = d.terms().collect();
        terms.sort_by_cached_key(|(k, _)| {
            (self.backend.weight(&k.plus), k.plus.clone(), k.k.clone(), self.backend.weight(&k.minus), k.minus.clone())
        });
        render::join_terms(terms.into_iter().map(|(k, c)| {
            let mut s = String::new();
            if !self.is_zero_label(&k.plus) {
                s.push_str(&format!("{}⁺", k.plus));
            }
            if !k.k.is_zero() {
                s.push_str(&format!("K{}", k.k));
            }
            if !self.is_zero_label(&k.minus) {
                s.push_str(&format!("{}⁻", k.minus));
            }
            if s.is_empty() {
                s.push('1');
            }
            render::term(&c.to_string(), &s)
        }))
    }

    fn label_json(&self, l: &B::Label) -> Value {
        Value::String(l.to_string())
    }

    /// `[{label, k_offset, coeff}]`, ordered by K-class then label.
    pub fn to_json(&self, x: &H<B>) -> Value {
        let terms = self.sorted(x.terms(), |b| vec![self.sort_key(b)]);
        Value::Array(
            terms
                .into_iter()
                .map(|(b, c)| json!({"label": self.label_json(&b.label), "k_offset": b.k, "coeff": c.to_string()}))
                .collect(),
        )
    }

    pub fn tensor_to_json(&self, t: &T<B>) -> Value {
        let terms = self.sorted(t.terms(), |(a, b)| vec![self.sort_key(a), self.sort_key(b)]);
        Value::Array(
            terms
                .into_iter()
                .map(|((a, b), c)| {
                    json!({
                        "left": {"label": self.label_json(&a.label), "k_offset": a.k},
                        "right": {"label": self.label_json(&b.label), "k_offset": b.k},
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }

    pub fn double_to_json(&self, d: &D<B>) -> Value {
        let mut terms: Vec<_> = d.terms().collect();
        terms.sort_by_cached_key(|(k, _)| (self.backend.weight(&k.plus), k.plus.clone(), k.k.clone(), k.minus.clone()));
        Value::Array(
            terms
                .into_iter()
                .map(|(k, c)| {
                    json!({
                        "plus": self.label_json(&k.plus),
                        "k_offset": k.k,
                        "minus": self.label_json(&k.minus),
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl Engine<QuiverAtQ> {
    /// `[S_i]^{(l)} = [S_i]^l / [l]!`.
    pub fn divided_power(&self, i: usize, l: u32) -> Result<H<QuiverAtQ>> {
        let s = self.basis(self.backend.simple(i)?);
        let f = balanced_factorial(l).eval_at_sqrt_q(self.backend.q());
        let inv = Field::inverse(&f).expect("[l]! is nonzero at v = √q");
        Ok(self.power(&s, l)?.scale(&inv))
    }

    /// `Σ_{l=0}^{1−a_ij} (−1)^l [S_i]^{(l)} [S_j] [S_i]^{(1−a_ij−l)}`.
    pub fn serre_residual(&self, i: usize, j: usize) -> Result<H<QuiverAtQ>> {
        let Some(quiver) = self.backend.category().quiver() else {
            return domain("quantum Serre relations need a quiver without loops");
        };
        if i == j || i >= quiver.n_vertices() || j >= quiver.n_vertices() {
            return domain(format!("vertices ({i},{j}) must be distinct and in range"));
        }
        let n = (1 - quiver.cartan(i, j)) as u32;
        let sj = self.basis(self.backend.simple(j)?);
        let mut out = Lin::new();
        for l in 0..=n {
            let term = self.product(&[self.divided_power(i, l)?, sj.clone(), self.divided_power(i, n - l)?])?;
            out = if l % 2 == 0 { out.plus(&term) } else { out.minus(&term) };
        }
        Ok(out)
    }
}

/// The quantum Serre residual for `Q` over `F_q`.
pub fn serre_residual(quiver: &Quiver, q: u32, i: usize, j: usize) -> Result<HallElement<IsoLabel, QrtScalar>> {
    Engine::new(QuiverAtQ::from_quiver(quiver, q, false)?).serre_residual(i, j)
}

#[cfg(test)]
mod tests;
