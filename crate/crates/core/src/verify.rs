//! Structural identity checks bundled into reports.

use std::fmt::{self, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classical::{self, GenericTensor};
use crate::engine::{Backend, DoubleKey, Engine, KClass, Lin, QuiverAtQ};
use crate::error::{HallError, Result};
use crate::exactnum::{LaurentPoly, QrtScalar};
use crate::partitions::{aut_poly, partitions_of, transpose_dominance_leq, Partition};
use crate::quiverrep::{fp::gl_order, sub_dims, Classifier, IsoLabel, Quiver, RepCategory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, id: impl Into<String>, ok: bool, lhs: impl Into<String>, rhs: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: lhs.into(),
            rhs: rhs.into(),
        });
    }

    pub fn check_eq<T: PartialEq + Display>(&mut self, id: impl Into<String>, lhs: &T, rhs: &T) {
        self.record(id, lhs == rhs, lhs.to_string(), rhs.to_string());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn n_failed(&self) -> usize {
        self.failures().count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "id", "status", "lhs", "rhs"]).expect("in-memory write");
        for c in &self.checks {
            let st = if c.status == Status::Pass { "pass" } else { "fail" };
            w.write_record([self.suite.as_str(), &c.id, st, &c.lhs, &c.rhs]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let st = if c.status == Status::Pass { "PASS" } else { "FAIL" };
            if c.status == Status::Pass {
                out.push_str(&format!("{st} {}\n", c.id));
            } else {
                out.push_str(&format!("{st} {}\n  lhs: {}\n  rhs: {}\n", c.id, c.lhs, c.rhs));
            }
        }
        let total = self.checks.len();
        let failed = self.n_failed();
        out.push_str(&format!(
            "{}: {} of {total} checks passed{}\n",
            self.suite,
            total - failed,
            if failed == 0 { String::new() } else { format!(", {failed} failed") }
        ));
        out
    }
}

/// Names of the shipped suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Green,
    Serre,
    HopfPairing,
    Antipode,
    Steinitz,
    HlNorms,
    DoubleA1,
    OrbitStabilizer,
    OneGamma,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Green,
        Suite::Serre,
        Suite::HopfPairing,
        Suite::Antipode,
        Suite::Steinitz,
        Suite::HlNorms,
        Suite::DoubleA1,
        Suite::OrbitStabilizer,
        Suite::OneGamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Green => "green",
            Suite::Serre => "serre",
            Suite::HopfPairing => "hopf-pairing",
            Suite::Antipode => "antipode",
            Suite::Steinitz => "steinitz",
            Suite::HlNorms => "hl-norms",
            Suite::DoubleA1 => "double-a1",
            Suite::OrbitStabilizer => "orbit-stabilizer",
            Suite::OneGamma => "one-gamma",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HallError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| HallError::Parse(format!("unknown suite {s:?}")))
    }
}

fn basis_pairs<B: Backend>(e: &Engine<B>, max_total: i64) -> Result<Vec<(B::Label, B::Label)>> {
    let labels = e.labels_of_total_at_most(max_total)?;
    let mut out = Vec::new();
    for x in &labels {
        for y in &labels {
            if (&e.backend().weight(x) + &e.backend().weight(y)).total() <= max_total {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(out)
}

/// Green compatibility (plain coproduct with the twisted tensor product, and
/// the extended coproduct), associativity and coassociativity.
pub fn green<B: Backend>(e: &Engine<B>, max_total: i64) -> Result<Report> {
    let mut r = Report::new(Suite::Green.name());
    for (x, y) in basis_pairs(e, max_total)? {
        let (bx, by) = (e.basis(x.clone()), e.basis(y.clone()));
        let res = e.green_compat_residual(&bx, &by)?;
        r.record(format!("green {x} {y}"), res.is_zero(), e.render_tensor(&res), "0");
        let res = e.green_compat_residual_extended(&bx, &by)?;
        r.record(format!("green-extended {x} {y}"), res.is_zero(), e.render_tensor(&res), "0");
    }
    let labels = e.labels_of_total_at_most(max_total)?;
    for x in &labels {
        for y in &labels {
            let wxy = &e.backend().weight(x) + &e.backend().weight(y);
            for z in &labels {
                if (&wxy + &e.backend().weight(z)).total() > max_total {
                    continue;
                }
                let (bx, by, bz) = (e.basis(x.clone()), e.basis(y.clone()), e.basis(z.clone()));
                let lhs = e.multiply(&e.multiply(&bx, &by)?, &bz)?;
                let rhs = e.multiply(&bx, &e.multiply(&by, &bz)?)?;
                r.record(format!("assoc {x} {y} {z}"), lhs == rhs, e.render(&lhs), e.render(&rhs));
            }
        }
        let bx = e.basis(x.clone());
        let l = e.coproduct3(&bx)?;
        let rr = e.coproduct3_right(&bx)?;
        r.record(format!("coassoc {x}"), l == rr, format!("{} terms", l.len()), format!("{} terms", rr.len()));
    }
    Ok(r)
}

/// `(xy, z) = (x⊗y, Δ(z))`, plain and with `k` symbols, and the diagonal Gram matrix.
pub fn hopf_pairing<B: Backend>(e: &Engine<B>, max_total: i64) -> Result<Report> {
    let mut r = Report::new(Suite::HopfPairing.name());
    let rank = e.backend().rank();
    let (ka, kb) = (KClass::unit(rank, 0), KClass::unit(rank, rank - 1));
    for (x, y) in basis_pairs(e, max_total)? {
        let w = &e.backend().weight(&x) + &e.backend().weight(&y);
        for z in e.backend().labels(&w)? {
            let (bx, by, bz) = (e.basis(x.clone()), e.basis(y.clone()), e.basis(z.clone()));
            let lhs = e.pairing(&e.multiply(&bx, &by)?, &bz)?;
            let rhs = e.tensor_pairing(&e.tensor_of(&bx, &by), &e.coproduct_plain(&bz)?)?;
            r.check_eq(format!("pairing {x} {y} {z}"), &lhs, &rhs);

            let bx = e.basis_k(x.clone(), ka.clone());
            let by = e.basis_k(y.clone(), kb.clone());
            let bz = e.basis_k(z.clone(), ka.clone());
            let lhs = e.pairing(&e.multiply(&bx, &by)?, &bz)?;
            let rhs = e.tensor_pairing(&e.tensor_of(&bx, &by), &e.comultiply(&bz)?)?;
            r.check_eq(format!("pairing-extended {x} {y} {z}"), &lhs, &rhs);
        }
    }
    for k in e.classes_of_total_at_most(max_total) {
        let labels = e.backend().labels(&k)?;
        for m in &labels {
            for n in &labels {
                let v = e.pairing(&e.basis(m.clone()), &e.basis(n.clone()))?;
                let expect = if m == n { e.backend().inv_aut(m)? } else { e.backend().to_pair(&e.backend().scalar_int(0)) };
                r.check_eq(format!("gram {m} {n}"), &v, &expect);
            }
        }
    }
    Ok(r)
}

/// `Δ(1_γ) = Σ_{α+β=γ} ⟨α,β⟩_m^{-1} 1_α⊗1_β` for the plain coproduct.
pub fn one_gamma<B: Backend>(e: &Engine<B>, classes: &[KClass]) -> Result<Report> {
    let mut r = Report::new(Suite::OneGamma.name());
    for g in classes {
        let lhs = e.coproduct_plain(&e.one_gamma(g)?)?;
        let mut rhs = Lin::new();
        for a in e.backend().sub_classes(g) {
            let b = g - &a;
            let c = e.backend().nu_pow(-e.backend().euler_add(&a, &b));
            rhs = rhs.plus(&e.tensor_of(&e.one_gamma(&a)?, &e.one_gamma(&b)?).scale(&c));
        }
        r.record(format!("one-gamma {g}"), lhs == rhs, e.render_tensor(&lhs), e.render_tensor(&rhs));
    }
    Ok(r)
}

/// Antipode axioms, the closed formula, and `S⁻¹` as a two-sided inverse.
pub fn antipode<B: Backend>(e: &Engine<B>, max_total: i64) -> Result<Report> {
    let mut r = Report::new(Suite::Antipode.name());
    let rank = e.backend().rank();
    for l in e.labels_of_total_at_most(max_total)? {
        for k in [KClass::zero(rank), KClass::unit(rank, 0)] {
            let x = e.basis_k(l.clone(), k.clone());
            let tag = if k.is_zero() { format!("{l}") } else { format!("{l}k{k}") };
            let d = e.comultiply(&x)?;
            let eps = e.one().scale(&e.counit(&x));
            let left = e.mul_apply(&d, |y| Ok(y.clone()), |y| e.antipode(y))?;
            r.record(format!("m(1⊗S)Δ {tag}"), left == eps, e.render(&left), e.render(&eps));
            let right = e.mul_apply(&d, |y| e.antipode(y), |y| Ok(y.clone()))?;
            r.record(format!("m(S⊗1)Δ {tag}"), right == eps, e.render(&right), e.render(&eps));
            let s = e.antipode(&x)?;
            let sc = e.antipode_closed(&x)?;
            r.record(format!("closed {tag}"), s == sc, e.render(&s), e.render(&sc));
            let back = e.antipode_inv(&s)?;
            r.record(format!("S⁻¹S {tag}"), back == x, e.render(&back), e.render(&x));
            let fwd = e.antipode(&e.antipode_inv(&x)?)?;
            r.record(format!("SS⁻¹ {tag}"), fwd == x, e.render(&fwd), e.render(&x));
        }
    }
    Ok(r)
}

/// Commutativity, the column coproduct, and triangularity of elementary products.
pub fn steinitz(deg: u32) -> Result<Report> {
    let mut r = Report::new(Suite::Steinitz.name());
    let cl = classical::global();
    for n in 0..=deg {
        for a in 0..=n {
            for mu in partitions_of(a) {
                for lambda in partitions_of(n - a) {
                    if mu > lambda {
                        continue;
                    }
                    let x = cl.try_product_basis(&mu, &lambda)?;
                    let y = cl.try_product_basis(&lambda, &mu)?;
                    r.check_eq(format!("commute {mu} {lambda}"), &x, &y);
                }
            }
        }
    }
    for n in 0..=deg {
        let lhs = cl.comult_basis(&Partition::column(n))?;
        let rhs: GenericTensor = (0..=n)
            .map(|k| {
                let e = -((k * (n - k)) as i64);
                ((Partition::column(k), Partition::column(n - k)), LaurentPoly::monomial(1, e))
            })
            .collect();
        r.check_eq(format!("column-coproduct {n}"), &lhs, &rhs);
    }
    for n in 1..=deg {
        for (kappa, e) in cl.elementary_matrix(n)? {
            let diag = e.coeff(&kappa);
            r.check_eq(format!("unit-diagonal {kappa}"), &diag, &LaurentPoly::one());
            let mut outside = Vec::new();
            for (nu, _) in e.terms() {
                if nu != &kappa && !transpose_dominance_leq(nu, &kappa)? {
                    outside.push(nu.to_string());
                }
            }
            r.record(format!("triangular {kappa}"), outside.is_empty(), outside.join(" "), "");
        }
    }
    Ok(r)
}

/// `{p_r, p_s} = δ_{rs} r/(q^r − 1)` and `a_λ(q) = |Aut I_λ|` by enumeration.
pub fn hl_norms(qs: &[u32], rmax: u32, aut_max: u32, budget: u64) -> Result<Report> {
    let mut r = Report::new(Suite::HlNorms.name());
    let ps: Vec<_> = (1..=rmax).map(classical::newton_p_in_e).collect::<Result<_>>()?;
    for &q in qs {
        for i in 1..=rmax {
            for j in 1..=rmax {
                let v = classical::hl_pairing(&ps[i as usize - 1], &ps[j as usize - 1], q as i64)?;
                let expect = if i == j {
                    BigRational::new(BigInt::from(i), BigInt::from(q).pow(i) - 1)
                } else {
                    BigRational::zero()
                };
                r.check_eq(format!("norm q={q} p{i} p{j}"), &v, &expect);
            }
        }
        let cat = RepCategory::jordan(q)?.with_budget(budget);
        for n in 0..=aut_max {
            for l in partitions_of(n) {
                let brute = BigInt::from(crate::quiverrep::aut_count_enumerate(
                    &cat.representative(&IsoLabel::Partition(l.clone()))?,
                    cat.budget(),
                )?);
                let poly = aut_poly(&l)
                    .eval_int_exact(q as i64)
                    .expect("a_λ is a polynomial");
                r.check_eq(format!("aut q={q} {l}"), &poly, &brute);
            }
        }
    }
    Ok(r)
}

/// Quantum Serre relations for every ordered pair of distinct vertices.
pub fn serre(e: &Engine<QuiverAtQ>) -> Result<Report> {
    let mut r = Report::new(Suite::Serre.name());
    let Some(quiver) = e.backend().category().quiver() else {
        return Err(HallError::Domain("the Serre suite needs a quiver without loops".into()));
    };
    let n = quiver.n_vertices();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let res = e.serre_residual(i, j)?;
            r.record(
                format!("serre q={} i={} j={}", e.backend().q(), quiver.names()[i], quiver.names()[j]),
                res.is_zero(),
                e.render(&res),
                "0",
            );
        }
    }
    Ok(r)
}

/// The A_1 double: reorders `[S]⁻[S]⁺` and recovers
/// `[S]⁺[S]⁻ − [S]⁻[S]⁺ = u (K_S − K_S^{-1})/(v − v^{-1})`.
pub fn double_a1(q: u32) -> Result<(Report, QrtScalar)> {
    let mut r = Report::new(Suite::DoubleA1.name());
    let e = Engine::new(QuiverAtQ::from_quiver(&Quiver::point(), q, false)?);
    let s = e.basis(e.backend().simple(0)?);
    let crossed = e.drinfeld_cross(&s, &s)?;
    let comm = e.double_product(&s, &s).minus(&crossed);
    let zero = e.backend().zero_label();
    let kk = |a: i64| DoubleKey {
        plus: zero.clone(),
        k: KClass(vec![a]),
        minus: zero.clone(),
    };
    let c = comm
        .coeff(&kk(1))
        .cloned()
        .unwrap_or_else(|| QrtScalar::zero(q as u64));
    let mut shape: Lin<DoubleKey<IsoLabel>, QrtScalar> = Lin::new();
    shape.add_term(kk(1), c.clone());
    shape.add_term(kk(-1), -&c);
    r.record(
        format!("shape q={q}"),
        comm == shape && !c.is_zero(),
        e.render_double(&comm),
        "c·K(1) - c·K(-1), c ≠ 0",
    );
    let v = QrtScalar::sqrt_q(q as u64);
    let vv = &v - &v.inverse().expect("v ≠ 0");
    let u = &c * &vv;
    let unit = u.inverse().is_some();
    r.record(format!("unit q={q}"), unit, format!("u = {u}"), "invertible");
    // hand expansion of the reordering sum
    let expect_c = QrtScalar::from_rational(
        q as u64,
        BigRational::new(BigInt::from(-1), BigInt::from(q) - BigInt::one()),
    );
    r.check_eq(format!("oracle q={q}"), &c, &expect_c);
    let one = e.one();
    let triv = e.drinfeld_cross(&one, &s)?;
    r.record(
        format!("unit-minus q={q}"),
        triv == e.double_product(&s, &one),
        e.render_double(&triv),
        e.render_double(&e.double_product(&s, &one)),
    );
    let ka = e.k(KClass(vec![1]));
    let got = e.drinfeld_cross(&ka, &s)?;
    let mut expect: Lin<DoubleKey<IsoLabel>, QrtScalar> = Lin::new();
    expect.add_term(
        DoubleKey {
            plus: e.backend().simple(0)?,
            k: KClass(vec![-1]),
            minus: zero.clone(),
        },
        QrtScalar::nu_pow(q as u64, -2),
    );
    r.record(format!("k-minus q={q}"), got == expect, e.render_double(&got), e.render_double(&expect));
    Ok((r, u))
}

/// Orbit–stabilizer and total-count identities on every dimension vector of
/// total size at most `max_total`, plus `|Ext¹| = q^{dim Hom − ⟨M,N⟩}` on pairs
/// of total size at most `ext_total`.
pub fn orbit_stabilizer(cat: &RepCategory, max_total: usize, ext_total: usize) -> Result<Report> {
    let mut r = Report::new(Suite::OrbitStabilizer.name());
    let q = cat.q();
    let tag = match cat.quiver() {
        Some(qv) => format!("q={q} arrows={:?}", qv.arrows()),
        None => format!("jordan q={q}"),
    };
    let orbit_cat = match cat.classifier() {
        Classifier::Orbit => None,
        _ if cat.is_jordan() => None,
        _ => Some(
            RepCategory::new(cat.quiver().unwrap(), q, cat.nilpotent())?
                .with_classifier(Classifier::Orbit)?
                .with_budget(cat.budget()),
        ),
    };
    let n = cat.n_vertices();
    let mut dims: Vec<Vec<usize>> = sub_dims(&vec![max_total; n])
        .into_iter()
        .filter(|d| d.iter().sum::<usize>() <= max_total)
        .collect();
    dims.sort();
    for d in &dims {
        let od = match &orbit_cat {
            Some(c) => c.orbit_data(d)?,
            None => cat.orbit_data(d)?,
        };
        let gl: u128 = d.iter().map(|&x| gl_order(x, q)).product();
        let sum: u64 = od.classes.iter().map(|c| c.size).sum();
        r.check_eq(format!("{tag} dim={d:?} orbit-sum"), &sum, &od.nilpotent_points);
        for (i, c) in od.classes.iter().enumerate() {
            let a = cat.aut_count(&c.rep)?;
            r.check_eq(format!("{tag} dim={d:?} orbit {i} size·aut"), &(c.size as u128 * a as u128), &gl);
            if cat.nilpotent() {
                let m = crate::quiverrep::aut_count_mobius(&c.rep)?;
                r.check_eq(format!("{tag} dim={d:?} orbit {i} aut-mobius"), &m, &a);
            }
        }
        let classes = cat.enumerate_iso_classes(d)?;
        r.check_eq(format!("{tag} dim={d:?} class-count"), &classes.len(), &od.classes.len());
        let total: u128 = classes.iter().map(|c| c.orbit_size).sum();
        r.check_eq(format!("{tag} dim={d:?} class-sum"), &total, &(od.nilpotent_points as u128));
        let expect_points = if cat.is_jordan() {
            crate::quiverrep::nilpotent_matrix_count(d[0] as u32, q)
        } else if cat.quiver().is_some_and(|x| !x.has_oriented_cycle()) {
            BigInt::from(od.total_points)
        } else {
            BigInt::from(od.nilpotent_points)
        };
        r.check_eq(format!("{tag} dim={d:?} points"), &BigInt::from(od.nilpotent_points), &expect_points);
    }
    let labels: Vec<IsoLabel> = dims
        .iter()
        .filter(|d| d.iter().sum::<usize>() <= ext_total)
        .map(|d| cat.labels_of_dim(d))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    for m in &labels {
        for nn in &labels {
            let (dm, dn) = (cat.dim_of(m), cat.dim_of(nn));
            if dm.iter().chain(&dn).sum::<usize>() > ext_total {
                continue;
            }
            let ext = cat.ext1_count(m, nn)?;
            let hom = cat.hom_dim(&cat.representative(m)?, &cat.representative(nn)?)? as i64;
            let a: Vec<i64> = dm.iter().map(|&x| x as i64).collect();
            let b: Vec<i64> = dn.iter().map(|&x| x as i64).collect();
            let e = hom - cat.euler_add(&a, &b)?;
            let expect = if e >= 0 { BigInt::from(q).pow(e as u32) } else { BigInt::zero() };
            r.check_eq(format!("{tag} ext {m} {nn}"), &ext, &expect);
        }
    }
    Ok(r)
}
