//! The generic classical Hall algebra of the Jordan quiver.
//!
//! Basis `[I_λ]` indexed by partitions, coefficients in `Z[t, t^{-1}]`. Hall
//! polynomials come from the column formula for `P^ν_{μ,(1^r)}` and the
//! unitriangular change of basis between `[I_λ]` and elementary products of
//! columns. The Euler form vanishes, so no twists appear.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{domain, HallError, Result};
use crate::exactnum::{gauss_binomial_or_zero, LaurentPoly, RatFunc};
use crate::partitions::{
    aut_poly, conjugate, multiplicities, nstat, partitions_of, refinement_order,
    transpose_dominance_leq, Partition,
};
use crate::render;

/// Finitely supported `Partition → Z[t,t^{-1}]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GenericHallElement {
    terms: BTreeMap<Partition, LaurentPoly>,
}

/// Finitely supported `Partition × Partition → Z[t,t^{-1}]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GenericTensor {
    terms: BTreeMap<(Partition, Partition), LaurentPoly>,
}

/// An element of the ring of symmetric functions, in the elementary basis
/// `e_ρ = e_{ρ_1} e_{ρ_2} ⋯`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunElement {
    terms: BTreeMap<Partition, LaurentPoly>,
}

macro_rules! linear_map_impl {
    ($ty:ident, $key:ty) => {
        impl $ty {
            pub fn zero() -> Self {
                Self::default()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn add_term(&mut self, key: $key, c: LaurentPoly) {
                if c.is_zero() {
                    return;
                }
                let e = self.terms.entry(key.clone()).or_default();
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }

            pub fn terms(&self) -> impl Iterator<Item = (&$key, &LaurentPoly)> {
                self.terms.iter()
            }

            pub fn coeff(&self, key: &$key) -> LaurentPoly {
                self.terms.get(key).cloned().unwrap_or_default()
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn scale(&self, c: &LaurentPoly) -> Self {
                let mut out = Self::zero();
                for (k, v) in &self.terms {
                    out.add_term(k.clone(), v * c);
                }
                out
            }

            pub fn plus(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (k, v) in &other.terms {
                    out.add_term(k.clone(), v.clone());
                }
                out
            }

            pub fn minus(&self, other: &Self) -> Self {
                self.plus(&other.scale(&LaurentPoly::constant(-1)))
            }
        }

        impl FromIterator<($key, LaurentPoly)> for $ty {
            fn from_iter<I: IntoIterator<Item = ($key, LaurentPoly)>>(iter: I) -> Self {
                let mut out = Self::zero();
                for (k, v) in iter {
                    out.add_term(k, v);
                }
                out
            }
        }
    };
}

linear_map_impl!(GenericHallElement, Partition);
linear_map_impl!(GenericTensor, (Partition, Partition));
linear_map_impl!(SymFunElement, Partition);

fn label_str(p: &Partition) -> String {
    if p.is_empty() {
        "1".into()
    } else {
        p.to_string()
    }
}

impl GenericHallElement {
    /// `[I_λ]`.
    pub fn basis(lambda: Partition) -> Self {
        Self::from_iter([(lambda, LaurentPoly::one())])
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    /// Degree-`n` component.
    pub fn component(&self, n: u32) -> Self {
        self.terms
            .iter()
            .filter(|(k, _)| k.size() == n)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }
}

impl GenericTensor {
    /// Swaps the two tensor factors.
    pub fn flip(&self) -> Self {
        self.terms
            .iter()
            .map(|((a, b), v)| ((b.clone(), a.clone()), v.clone()))
            .collect()
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn mul(&self, other: &Self, cl: &Classical) -> Self {
        let mut out = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let left = cl.product_basis(a, c);
                let right = cl.product_basis(b, d);
                let xy = x * y;
                for (l, u) in left.terms() {
                    for (r, w) in right.terms() {
                        out.add_term((l.clone(), r.clone()), &xy * &(u * w));
                    }
                }
            }
        }
        out
    }
}

impl SymFunElement {
    /// `e_ρ`.
    pub fn e(rho: Partition) -> Self {
        Self::from_iter([(rho, LaurentPoly::one())])
    }

    /// Product in the e-basis: `e_λ e_μ = e_{λ∪μ}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for GenericHallElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| render::term(&v.to_string(), &label_str(k)));
        f.write_str(&render::join_terms(terms))
    }
}

impl fmt::Debug for GenericHallElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GenericTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|((a, b), v)| {
            render::term(&v.to_string(), &format!("{}⊗{}", label_str(a), label_str(b)))
        });
        f.write_str(&render::join_terms(terms))
    }
}

impl fmt::Debug for GenericTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SymFunElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(k, v)| {
            let basis = if k.is_empty() {
                "1".to_string()
            } else {
                k.parts().iter().map(|p| format!("e{p}")).collect::<Vec<_>>().join("*")
            };
            render::term(&v.to_string(), &basis)
        });
        f.write_str(&render::join_terms(terms))
    }
}

impl fmt::Debug for SymFunElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    partition: Partition,
    laurent: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct TensorRecord {
    left: Partition,
    right: Partition,
    laurent: LaurentPoly,
}

impl Serialize for GenericHallElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(k, c)| TermRecord {
                partition: k.clone(),
                laurent: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenericHallElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermRecord>::deserialize(d)?;
        Ok(v.into_iter().map(|r| (r.partition, r.laurent)).collect())
    }
}

impl Serialize for GenericTensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TensorRecord> = self
            .terms
            .iter()
            .map(|((a, b), c)| TensorRecord {
                left: a.clone(),
                right: b.clone(),
                laurent: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

/// `P^ν_{μ,(1^r)}(t)`: the number of submodules `L ≅ I_{(1^r)}` of `I_ν` with
/// `I_ν/L ≅ I_μ`.
///
/// With `ν = (1^{l_1},…,n^{l_n})` let `r_i` be the dimension of the part of
/// `L` lying in `Im x^i ∩ Ker x`; then `r_0 = r`, `r_n = 0` and
/// `r_{i−1} − r_i = ν'_i − μ'_i`. The count is a product of Gaussian binomials
/// times the rank of an affine fibration.
pub fn hall_poly_col(nu: &Partition, mu: &Partition, r: u32) -> Result<LaurentPoly> {
    if nu.size() != mu.size() + r {
        return domain(format!(
            "hall_poly_col: |{nu}| != |{mu}| + {r}"
        ));
    }
    let n = nu.largest() as usize;
    let l: Vec<u32> = {
        let mut m = multiplicities(nu);
        m.resize(n, 0);
        m
    };
    let mut rs: Vec<i64> = Vec::with_capacity(n + 1);
    rs.push(r as i64);
    for i in 1..=n {
        let d = nu.conj_part(i as u32) as i64 - mu.conj_part(i as u32) as i64;
        rs.push(rs[i - 1] - d);
    }
    if mu.largest() as usize > n || rs[n] != 0 {
        return Ok(LaurentPoly::zero());
    }
    for i in 1..=n {
        let step = rs[i - 1] - rs[i];
        if rs[i] < 0 || step < 0 || step > l[i - 1] as i64 {
            return Ok(LaurentPoly::zero());
        }
    }
    // consistency with the multiplicity relation m_i = l_i + 2r_i − r_{i−1} − r_{i+1}
    let m_mu = {
        let mut m = multiplicities(mu);
        m.resize(n, 0);
        m
    };
    for i in 1..=n {
        let next = if i < n { rs[i + 1] } else { 0 };
        let m = l[i - 1] as i64 + 2 * rs[i] - rs[i - 1] - next;
        if m != m_mu[i - 1] as i64 {
            return Err(HallError::Consistency(format!(
                "column formula multiplicity mismatch for {nu}, {mu}, {r}"
            )));
        }
    }
    let mut acc = LaurentPoly::one();
    for i in 1..=n {
        acc = &acc * &gauss_binomial_or_zero(l[i - 1], (rs[i - 1] - rs[i]) as u32);
    }
    let mut rank: i64 = 0;
    for i in 0..n.saturating_sub(1) {
        let tail: i64 = l[i + 1..].iter().map(|&x| x as i64).sum();
        rank += (rs[i] - rs[i + 1]) * (tail - rs[i + 1]);
    }
    Ok(acc.shift(rank))
}

/// The elementary products `E_κ` of one degree in the `[I_ν]` basis,
/// their inverse matrix, in the refinement order.
struct DegreeData {
    order: Vec<Partition>,
    elementary: BTreeMap<Partition, GenericHallElement>,
    /// `[I_λ] = Σ_κ inverse[λ][κ] E_κ`
    inverse: BTreeMap<Partition, BTreeMap<Partition, LaurentPoly>>,
}

/// Memoized generic classical Hall algebra.
///
/// Caches are transparent: every entry is a pure function of its key.
#[derive(Default)]
pub struct Classical {
    degrees: RwLock<HashMap<u32, std::sync::Arc<DegreeData>>>,
    products: RwLock<HashMap<(Partition, Partition), GenericHallElement>>,
    coproducts: RwLock<HashMap<Partition, GenericTensor>>,
    antipodes: RwLock<HashMap<Partition, GenericHallElement>>,
}

/// The process-wide instance used by the free functions of this module.
pub fn global() -> &'static Classical {
    static G: OnceLock<Classical> = OnceLock::new();
    G.get_or_init(Classical::default)
}

impl Classical {
    pub fn new() -> Self {
        Self::default()
    }

    /// `x · [I_{(1^c)}]` via the column formula.
    fn right_mul_column(&self, x: &GenericHallElement, c: u32) -> GenericHallElement {
        let mut out = GenericHallElement::zero();
        for (mu, coeff) in x.terms() {
            for nu in partitions_of(mu.size() + c) {
                let p = hall_poly_col(&nu, mu, c).expect("sizes match by construction");
                if !p.is_zero() {
                    out.add_term(nu, coeff * &p);
                }
            }
        }
        out
    }

    /// `x · E_κ`, multiplying the columns of `κ` in ascending order.
    fn right_mul_elementary(&self, x: &GenericHallElement, kappa: &Partition) -> GenericHallElement {
        let cols = conjugate(kappa);
        let mut acc = x.clone();
        for &c in cols.parts().iter().rev() {
            acc = self.right_mul_column(&acc, c);
        }
        acc
    }

    fn degree(&self, n: u32) -> Result<std::sync::Arc<DegreeData>> {
        if let Some(d) = self.degrees.read().unwrap().get(&n) {
            return Ok(d.clone());
        }
        let order = refinement_order(&partitions_of(n));
        let mut elementary = BTreeMap::new();
        for kappa in &order {
            let e = self.right_mul_elementary(&GenericHallElement::one(), kappa);
            if e.coeff(kappa) != LaurentPoly::one() {
                return Err(HallError::Consistency(format!(
                    "elementary product for {kappa} has diagonal {}",
                    e.coeff(kappa)
                )));
            }
            for (nu, c) in e.terms() {
                if nu != kappa && !transpose_dominance_leq(nu, kappa)? {
                    return Err(HallError::Consistency(format!(
                        "elementary product for {kappa} has term {nu} outside the order"
                    )));
                }
                if !c.is_polynomial() {
                    return Err(HallError::Consistency(format!(
                        "non-polynomial coefficient {c} in elementary product for {kappa}"
                    )));
                }
            }
            elementary.insert(kappa.clone(), e);
        }
        // forward substitution along the refinement order
        let mut inverse: BTreeMap<Partition, BTreeMap<Partition, LaurentPoly>> = BTreeMap::new();
        for kappa in &order {
            let mut row: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
            row.insert(kappa.clone(), LaurentPoly::one());
            for (nu, a) in elementary[kappa].terms() {
                if nu == kappa {
                    continue;
                }
                for (k2, b) in &inverse[nu] {
                    let e = row.entry(k2.clone()).or_default();
                    *e -= &(a * b);
                }
            }
            row.retain(|_, v| !v.is_zero());
            inverse.insert(kappa.clone(), row);
        }
        let data = std::sync::Arc::new(DegreeData {
            order,
            elementary,
            inverse,
        });
        self.degrees.write().unwrap().insert(n, data.clone());
        Ok(data)
    }

    /// The change-of-basis rows `E_κ = Σ_ν A_{κν}[I_ν]` of degree `n`, in refinement order.
    pub fn elementary_matrix(&self, n: u32) -> Result<Vec<(Partition, GenericHallElement)>> {
        let d = self.degree(n)?;
        Ok(d.order
            .iter()
            .map(|k| (k.clone(), d.elementary[k].clone()))
            .collect())
    }

    /// `E_κ` in the `[I]` basis.
    pub fn elementary_product(&self, kappa: &Partition) -> Result<GenericHallElement> {
        Ok(self.degree(kappa.size())?.elementary[kappa].clone())
    }

    /// `[I_λ]` as a combination of elementary products.
    pub fn in_elementary_basis(&self, lambda: &Partition) -> Result<BTreeMap<Partition, LaurentPoly>> {
        Ok(self.degree(lambda.size())?.inverse[lambda].clone())
    }

    /// `[I_μ]·[I_λ]`.
    pub fn product_basis(&self, mu: &Partition, lambda: &Partition) -> GenericHallElement {
        self.try_product_basis(mu, lambda)
            .expect("classical products are internally consistent")
    }

    pub fn try_product_basis(&self, mu: &Partition, lambda: &Partition) -> Result<GenericHallElement> {
        let key = (mu.clone(), lambda.clone());
        if let Some(v) = self.products.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let start = GenericHallElement::basis(mu.clone());
        let mut out = GenericHallElement::zero();
        for (kappa, b) in self.in_elementary_basis(lambda)? {
            out = out.plus(&self.right_mul_elementary(&start, &kappa).scale(&b));
        }
        for (nu, c) in out.terms() {
            if !c.is_polynomial() {
                return Err(HallError::Consistency(format!(
                    "Hall polynomial P^{nu}_{{{mu},{lambda}}} = {c} is not in Z[t]"
                )));
            }
        }
        self.products.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// `P^ν_{μ,λ}(t)`; zero when the sizes do not add up.
    pub fn hall_poly(&self, nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<LaurentPoly> {
        if nu.size() != mu.size() + lambda.size() {
            return Ok(LaurentPoly::zero());
        }
        Ok(self.try_product_basis(mu, lambda)?.coeff(nu))
    }

    pub fn mult(&self, x: &GenericHallElement, y: &GenericHallElement) -> GenericHallElement {
        let mut out = GenericHallElement::zero();
        for (a, u) in x.terms() {
            for (b, w) in y.terms() {
                out = out.plus(&self.product_basis(a, b).scale(&(u * w)));
            }
        }
        out
    }

    /// `Δ[I_ν] = Σ (a_μ a_λ / a_ν) P^ν_{μλ} [I_μ]⊗[I_λ]`.
    pub fn comult_basis(&self, nu: &Partition) -> Result<GenericTensor> {
        if let Some(v) = self.coproducts.read().unwrap().get(nu) {
            return Ok(v.clone());
        }
        let n = nu.size();
        let a_nu = aut_poly(nu);
        let mut out = GenericTensor::zero();
        for k in 0..=n {
            for mu in partitions_of(k) {
                for lambda in partitions_of(n - k) {
                    let p = self.hall_poly(nu, &mu, &lambda)?;
                    if p.is_zero() {
                        continue;
                    }
                    let num = &(&aut_poly(&mu) * &aut_poly(&lambda)) * &p;
                    let c = RatFunc::new(num, a_nu.clone()).unwrap();
                    let Some(c) = c.to_laurent() else {
                        return Err(HallError::Consistency(format!(
                            "coproduct coefficient of {mu}⊗{lambda} in Δ{nu} is {c}, not Laurent"
                        )));
                    };
                    out.add_term((mu.clone(), lambda), c);
                }
            }
        }
        self.coproducts.write().unwrap().insert(nu.clone(), out.clone());
        Ok(out)
    }

    pub fn comult(&self, x: &GenericHallElement) -> Result<GenericTensor> {
        let mut out = GenericTensor::zero();
        for (nu, c) in x.terms() {
            out = out.plus(&self.comult_basis(nu)?.scale(c));
        }
        Ok(out)
    }

    /// `S[I_λ] = −[I_λ] − Σ_{middle A⊗B} [A]·S[B]`.
    pub fn antipode_basis(&self, lambda: &Partition) -> Result<GenericHallElement> {
        if lambda.is_empty() {
            return Ok(GenericHallElement::one());
        }
        if let Some(v) = self.antipodes.read().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let mut out = GenericHallElement::basis(lambda.clone()).scale(&LaurentPoly::constant(-1));
        for ((a, b), c) in self.comult_basis(lambda)?.terms() {
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let sb = self.antipode_basis(b)?;
            let prod = self.mult(&GenericHallElement::basis(a.clone()), &sb);
            out = out.minus(&prod.scale(c));
        }
        self.antipodes.write().unwrap().insert(lambda.clone(), out.clone());
        Ok(out)
    }

    pub fn antipode(&self, x: &GenericHallElement) -> Result<GenericHallElement> {
        let mut out = GenericHallElement::zero();
        for (l, c) in x.terms() {
            out = out.plus(&self.antipode_basis(l)?.scale(c));
        }
        Ok(out)
    }

    /// `Φ`: `[I_λ] = Σ_κ B_{λκ} E_κ ↦ Σ_κ B_{λκ} t^{−n(κ)} e_{κ'}`.
    pub fn to_symfun(&self, x: &GenericHallElement) -> Result<SymFunElement> {
        let mut out = SymFunElement::zero();
        for (lambda, c) in x.terms() {
            for (kappa, b) in self.in_elementary_basis(lambda)? {
                let coeff = (c * &b).shift(-(nstat(&kappa) as i64));
                out.add_term(conjugate(&kappa), coeff);
            }
        }
        Ok(out)
    }

    /// `Φ^{-1}`: `e_ρ ↦ t^{n(ρ')} E_{ρ'}`.
    pub fn from_symfun(&self, f: &SymFunElement) -> Result<GenericHallElement> {
        let mut out = GenericHallElement::zero();
        for (rho, c) in f.terms() {
            let kappa = conjugate(rho);
            let e = self.elementary_product(&kappa)?;
            out = out.plus(&e.scale(&c.shift(nstat(&kappa) as i64)));
        }
        Ok(out)
    }
}

/// See [`Classical::hall_poly`].
pub fn hall_poly(nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<LaurentPoly> {
    global().hall_poly(nu, mu, lambda)
}

pub fn mult_generic(x: &GenericHallElement, y: &GenericHallElement) -> GenericHallElement {
    global().mult(x, y)
}

pub fn comult_generic(x: &GenericHallElement) -> Result<GenericTensor> {
    global().comult(x)
}

pub fn antipode_generic(x: &GenericHallElement) -> Result<GenericHallElement> {
    global().antipode(x)
}

/// `([I_λ],[I_μ]) = δ_{λμ} / a_λ`, extended bilinearly.
pub fn green_pairing_generic(x: &GenericHallElement, y: &GenericHallElement) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (l, c) in x.terms() {
        let d = y.coeff(l);
        if d.is_zero() {
            continue;
        }
        acc = &acc + &RatFunc::new(c * &d, aut_poly(l)).unwrap();
    }
    acc
}

pub fn to_symfun(x: &GenericHallElement) -> Result<SymFunElement> {
    global().to_symfun(x)
}

pub fn from_symfun(f: &SymFunElement) -> Result<GenericHallElement> {
    global().from_symfun(f)
}

/// The power sum `p_r` in the e-basis, by Newton's identities.
pub fn newton_p_in_e(r: u32) -> Result<SymFunElement> {
    if r == 0 {
        return domain("newton_p_in_e: r must be positive");
    }
    let mut ps: Vec<SymFunElement> = Vec::with_capacity(r as usize);
    for k in 1..=r {
        let sign = |e: u32| if e.is_multiple_of(2) { 1 } else { -1 };
        let mut pk = SymFunElement::e(Partition::row(k))
            .scale(&LaurentPoly::constant(sign(k - 1) * k as i64));
        for i in 1..k {
            let term = SymFunElement::e(Partition::row(k - i)).mul(&ps[i as usize - 1]);
            pk = pk.plus(&term.scale(&LaurentPoly::constant(sign(k - 1 + i))));
        }
        ps.push(pk);
    }
    Ok(ps.pop().unwrap())
}

/// The Hall–Littlewood scalar product: the Green pairing transported through `Φ`,
/// evaluated at `t = q`.
pub fn hl_pairing(f: &SymFunElement, g: &SymFunElement, q: i64) -> Result<BigRational> {
    if q == 1 {
        return domain("hl_pairing: q = 1 is a pole of the pairing");
    }
    let x = from_symfun(f)?;
    let y = from_symfun(g)?;
    let pr = green_pairing_generic(&x, &y);
    if pr.is_zero() {
        return Ok(BigRational::zero());
    }
    pr.eval_at(&BigRational::from_integer(BigInt::from(q)))
        .ok_or_else(|| HallError::Domain(format!("hl_pairing: pole at q = {q}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn b(v: &[u32]) -> GenericHallElement {
        GenericHallElement::basis(p(v))
    }
    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn column_formula_examples() {
        assert_eq!(hall_poly_col(&p(&[1, 1]), &p(&[1]), 1).unwrap(), lp(&[(1, 1), (0, 1)]));
        assert_eq!(hall_poly_col(&p(&[2, 1]), &p(&[2]), 1).unwrap(), lp(&[(1, 1)]));
        for n in 1..=6 {
            for r in 0..=n {
                assert_eq!(
                    hall_poly_col(&Partition::row(n), &Partition::row(n - r), r).unwrap(),
                    if r <= 1 { LaurentPoly::one() } else { LaurentPoly::zero() },
                    "n={n} r={r}"
                );
            }
        }
        assert!(hall_poly_col(&p(&[2]), &p(&[1]), 2).is_err());
    }

    #[test]
    fn hall_poly_examples() {
        assert_eq!(hall_poly(&p(&[1, 1]), &p(&[1]), &p(&[1])).unwrap(), lp(&[(1, 1), (0, 1)]));
        assert_eq!(hall_poly(&p(&[2]), &p(&[1]), &p(&[1])).unwrap(), LaurentPoly::one());
        assert_eq!(hall_poly(&p(&[2, 1]), &p(&[2]), &p(&[1])).unwrap(), lp(&[(1, 1)]));
        assert_eq!(hall_poly(&p(&[2, 1]), &p(&[1]), &p(&[2])).unwrap(), lp(&[(1, 1)]));
        assert!(hall_poly(&p(&[3]), &p(&[2]), &p(&[2])).unwrap().is_zero());
    }

    #[test]
    fn row_hall_poly_is_one() {
        // P^{(n)}_{(n-r),(r)} = 1
        for n in 1..=6 {
            for r in 0..=n {
                assert_eq!(
                    hall_poly(&Partition::row(n), &Partition::row(n - r), &Partition::row(r)).unwrap(),
                    LaurentPoly::one()
                );
            }
        }
    }

    #[test]
    fn products() {
        assert_eq!(mult_generic(&b(&[1]), &b(&[1])).to_string(), "(t+1)[1,1] + [2]");
        assert_eq!(mult_generic(&b(&[1]), &b(&[2])).to_string(), "t[2,1] + [3]");
        let x = b(&[2, 1]).plus(&b(&[1]).scale(&lp(&[(-1, 3)])));
        assert_eq!(mult_generic(&GenericHallElement::one(), &x), x);
    }

    #[test]
    fn coproducts() {
        assert_eq!(comult_generic(&b(&[1])).unwrap().to_string(), "1⊗[1] + [1]⊗1");
        let d2 = comult_generic(&b(&[2])).unwrap();
        let mut expect = GenericTensor::zero();
        expect.add_term((Partition::empty(), p(&[2])), LaurentPoly::one());
        expect.add_term((p(&[1]), p(&[1])), lp(&[(0, 1), (-1, -1)]));
        expect.add_term((p(&[2]), Partition::empty()), LaurentPoly::one());
        assert_eq!(d2, expect);
    }

    #[test]
    fn antipodes() {
        assert_eq!(antipode_generic(&b(&[1])).unwrap().to_string(), "-[1]");
        assert_eq!(
            antipode_generic(&b(&[1, 1])).unwrap(),
            b(&[2]).plus(&b(&[1, 1])).scale(&lp(&[(-1, 1)]))
        );
        assert_eq!(
            antipode_generic(&b(&[2])).unwrap(),
            b(&[2]).scale(&lp(&[(-1, -1)])).plus(&b(&[1, 1]).scale(&lp(&[(1, 1), (-1, -1)])))
        );
    }

    #[test]
    fn antipode_column_closed_form() {
        for n in 1..=5u32 {
            let e = (n as i64) * (n as i64 - 1) / 2;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let mut expect = GenericHallElement::zero();
            for mu in partitions_of(n) {
                expect.add_term(mu, LaurentPoly::monomial(sign, -e));
            }
            assert_eq!(antipode_generic(&GenericHallElement::basis(Partition::column(n))).unwrap(), expect);
        }
    }

    #[test]
    fn pairing_values() {
        let one = green_pairing_generic(&b(&[1]), &b(&[1]));
        assert_eq!(one, RatFunc::new(LaurentPoly::one(), lp(&[(1, 1), (0, -1)])).unwrap());
        assert!(green_pairing_generic(&b(&[1]), &b(&[2])).is_zero());
        let v = green_pairing_generic(&b(&[2, 1]), &b(&[2, 1]));
        let a = &lp(&[(3, 1), (2, -1)]) * &lp(&[(2, 1), (1, -1)]);
        assert_eq!(v, RatFunc::new(LaurentPoly::one(), a).unwrap());
    }

    #[test]
    fn symfun_bridge() {
        assert_eq!(to_symfun(&b(&[1])).unwrap(), SymFunElement::e(p(&[1])));
        assert_eq!(
            to_symfun(&b(&[1, 1])).unwrap(),
            SymFunElement::e(p(&[2])).scale(&lp(&[(-1, 1)]))
        );
        for l in partitions_up_to(5) {
            let x = GenericHallElement::basis(l);
            assert_eq!(from_symfun(&to_symfun(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn newton_examples() {
        assert_eq!(newton_p_in_e(1).unwrap(), SymFunElement::e(p(&[1])));
        let p2 = SymFunElement::e(p(&[1, 1])).minus(&SymFunElement::e(p(&[2])).scale(&LaurentPoly::constant(2)));
        assert_eq!(newton_p_in_e(2).unwrap(), p2);
        let p3 = SymFunElement::e(p(&[1, 1, 1]))
            .minus(&SymFunElement::e(p(&[2, 1])).scale(&LaurentPoly::constant(3)))
            .plus(&SymFunElement::e(p(&[3])).scale(&LaurentPoly::constant(3)));
        assert_eq!(newton_p_in_e(3).unwrap(), p3);
    }

    #[test]
    fn hl_pairing_examples() {
        let p1 = newton_p_in_e(1).unwrap();
        let p2 = newton_p_in_e(2).unwrap();
        assert_eq!(hl_pairing(&p1, &p1, 2).unwrap(), BigRational::from_integer(1.into()));
        assert!(hl_pairing(&p1, &p2, 3).unwrap().is_zero());
        assert_eq!(
            hl_pairing(&p2, &p2, 3).unwrap(),
            BigRational::new(1.into(), 4.into())
        );
        assert!(matches!(hl_pairing(&p1, &p1, 1), Err(HallError::Domain(_))));
    }
}
