//! The field `Q(√q)`, home of `ν = √q` for Hall algebras over `F_q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Result};

/// `rational_part + root_part·√q` with exact rational parts.
///
/// When `q` is a perfect square the root part is folded into the rational
/// part, so the representation stays canonical and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QrtScalar {
    q: u64,
    rational: BigRational,
    root: BigRational,
}

fn perfect_sqrt(q: u64) -> Option<u64> {
    let s = q.sqrt();
    (s * s == q).then_some(s)
}

impl QrtScalar {
    pub fn new(q: u64, rational: BigRational, root: BigRational) -> Self {
        assert!(q > 0, "QrtScalar base must be positive");
        let mut x = Self { q, rational, root };
        if let Some(s) = perfect_sqrt(q) {
            let r = std::mem::replace(&mut x.root, BigRational::zero());
            x.rational += r * BigRational::from_integer(s.into());
        }
        x
    }

    pub fn zero(q: u64) -> Self {
        Self::new(q, BigRational::zero(), BigRational::zero())
    }

    pub fn one(q: u64) -> Self {
        Self::from_int(q, 1)
    }

    pub fn from_int(q: u64, c: impl Into<BigInt>) -> Self {
        Self::new(q, BigRational::from_integer(c.into()), BigRational::zero())
    }

    pub fn from_rational(q: u64, r: BigRational) -> Self {
        Self::new(q, r, BigRational::zero())
    }

    /// `√q` itself.
    pub fn sqrt_q(q: u64) -> Self {
        Self::new(q, BigRational::zero(), BigRational::one())
    }

    /// `ν^e` with `ν = √q` (the positive root).
    pub fn nu_pow(q: u64, e: i64) -> Self {
        let qq = BigRational::from_integer(q.into());
        let half = e.div_euclid(2);
        let p = if half >= 0 {
            num_traits::pow(qq, half as usize)
        } else {
            num_traits::pow(qq.recip(), (-half) as usize)
        };
        if e.rem_euclid(2) == 0 {
            Self::new(q, p, BigRational::zero())
        } else {
            Self::new(q, BigRational::zero(), p)
        }
    }

    pub fn base(&self) -> u64 {
        self.q
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn root_part(&self) -> &BigRational {
        &self.root
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.root.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rational.is_one() && self.root.is_zero()
    }

    /// True when every denominator is a power of `q`, i.e. the value lies in `Z[√q, 1/√q]`.
    pub fn has_q_power_denominators(&self) -> bool {
        let q = BigInt::from(self.q);
        [&self.rational, &self.root].iter().all(|r| {
            let mut d = r.denom().clone();
            while !d.is_one() {
                if self.q == 1 || !(&d % &q).is_zero() {
                    return false;
                }
                d /= &q;
            }
            true
        })
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        let c = BigRational::from_integer(c.clone());
        Self::new(self.q, &self.rational * &c, &self.root * &c)
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        Self::new(self.q, &self.rational * c, &self.root * c)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return domain(format!(
                "QrtScalar base mismatch: {} vs {}",
                self.q, other.q
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(
            self.q,
            &self.rational + &other.rational,
            &self.root + &other.root,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let qq = BigRational::from_integer(self.q.into());
        let a = &self.rational * &other.rational + &self.root * &other.root * qq;
        let b = &self.rational * &other.root + &self.root * &other.rational;
        Ok(Self::new(self.q, a, b))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let qq = BigRational::from_integer(self.q.into());
        let norm = &self.rational * &self.rational - &self.root * &self.root * qq;
        Some(Self::new(
            self.q,
            &self.rational / &norm,
            -(&self.root / &norm),
        ))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        match other.inverse() {
            Some(inv) => self.try_mul(&inv),
            None => domain("division by zero in Q(√q)"),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.q), |acc, _| &acc * self)
    }

    /// The rational value if the root part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.root.is_zero().then_some(&self.rational)
    }

    /// Renders with `v` standing for `√q`, e.g. `1/2v` for `ν^{-1}` at `q = 2`.
    pub fn render(&self) -> String {
        fn rat(r: &BigRational) -> String {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        match (self.rational.is_zero(), self.root.is_zero()) {
            (true, true) => "0".into(),
            (false, true) => rat(&self.rational),
            (a_zero, false) => {
                let b = &self.root;
                let babs = b.abs();
                let mono = if babs.is_one() {
                    "v".to_string()
                } else {
                    format!("{}v", rat(&babs))
                };
                if a_zero {
                    if b.is_negative() {
                        format!("-{mono}")
                    } else {
                        mono
                    }
                } else {
                    let sign = if b.is_negative() { '-' } else { '+' };
                    format!("{}{sign}{mono}", rat(&self.rational))
                }
            }
        }
    }
}

impl fmt::Display for QrtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for QrtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QrtScalar(q={}, {})", self.q, self.render())
    }
}

impl Add<&QrtScalar> for &QrtScalar {
    type Output = QrtScalar;
    fn add(self, rhs: &QrtScalar) -> QrtScalar {
        self.try_add(rhs).expect("QrtScalar addition")
    }
}

impl Sub<&QrtScalar> for &QrtScalar {
    type Output = QrtScalar;
    fn sub(self, rhs: &QrtScalar) -> QrtScalar {
        self.try_sub(rhs).expect("QrtScalar subtraction")
    }
}

impl Mul<&QrtScalar> for &QrtScalar {
    type Output = QrtScalar;
    fn mul(self, rhs: &QrtScalar) -> QrtScalar {
        self.try_mul(rhs).expect("QrtScalar multiplication")
    }
}

impl Neg for &QrtScalar {
    type Output = QrtScalar;
    fn neg(self) -> QrtScalar {
        QrtScalar {
            q: self.q,
            rational: -self.rational.clone(),
            root: -self.root.clone(),
        }
    }
}

impl Neg for QrtScalar {
    type Output = QrtScalar;
    fn neg(self) -> QrtScalar {
        -&self
    }
}

/// Free-function form of the checked product.
pub fn qrt_mul(x: &QrtScalar, y: &QrtScalar) -> Result<QrtScalar> {
    x.try_mul(y)
}

#[derive(Serialize, Deserialize)]
struct QrtRepr {
    q: u64,
    rational_part: String,
    root_part: String,
}

fn rat_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rat(s: &str) -> std::result::Result<BigRational, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|e| format!("{e}"))?;
    let d: BigInt = d.trim().parse().map_err(|e| format!("{e}"))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(n, d))
}

impl Serialize for QrtScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QrtRepr {
            q: self.q,
            rational_part: rat_string(&self.rational),
            root_part: rat_string(&self.root),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QrtScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = QrtRepr::deserialize(d)?;
        if r.q == 0 {
            return Err(D::Error::custom("q must be positive"));
        }
        Ok(QrtScalar::new(
            r.q,
            parse_rat(&r.rational_part).map_err(D::Error::custom)?,
            parse_rat(&r.root_part).map_err(D::Error::custom)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::LaurentPoly;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn root_squared_is_q() {
        for q in [2u64, 3, 5, 7] {
            let s = QrtScalar::sqrt_q(q);
            assert_eq!(&s * &s, QrtScalar::from_int(q, q));
        }
    }

    #[test]
    fn nu_inverse() {
        let q = 3;
        let inv = QrtScalar::new(q, rat(0, 1), rat(1, 3));
        assert_eq!(inv, QrtScalar::nu_pow(q, -1));
        assert!((&inv * &QrtScalar::nu_pow(q, 1)).is_one());
        assert!(inv.has_q_power_denominators());
    }

    #[test]
    fn difference_of_squares() {
        let q = 5;
        let a = &QrtScalar::one(q) + &QrtScalar::sqrt_q(q);
        let b = &QrtScalar::one(q) - &QrtScalar::sqrt_q(q);
        assert_eq!(&a * &b, QrtScalar::from_int(q, 1 - 5));
    }

    #[test]
    fn mismatched_base_is_domain_error() {
        let a = QrtScalar::one(2);
        let b = QrtScalar::one(3);
        assert!(matches!(qrt_mul(&a, &b), Err(crate::HallError::Domain(_))));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn nu_powers_compose() {
        for q in [2u64, 3] {
            for a in -5..5 {
                for b in -5..5 {
                    assert_eq!(
                        &QrtScalar::nu_pow(q, a) * &QrtScalar::nu_pow(q, b),
                        QrtScalar::nu_pow(q, a + b)
                    );
                }
            }
        }
    }

    #[test]
    fn perfect_square_base_is_canonical() {
        let x = QrtScalar::sqrt_q(4);
        assert_eq!(x, QrtScalar::from_int(4, 2));
    }

    #[test]
    fn render_forms() {
        assert_eq!(QrtScalar::nu_pow(2, -1).render(), "1/2v");
        assert_eq!(QrtScalar::nu_pow(3, 1).render(), "v");
        assert_eq!((-QrtScalar::nu_pow(3, 1)).render(), "-v");
        assert_eq!(QrtScalar::from_rational(3, rat(-1, 2)).render(), "-1/2");
        let x = &QrtScalar::one(2) - &QrtScalar::nu_pow(2, 3);
        assert_eq!(x.render(), "1-2v");
    }

    #[test]
    fn serde_round_trip() {
        let x = QrtScalar::new(3, rat(1, 9), rat(-2, 3));
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"{"q":3,"rational_part":"1/9","root_part":"-2/3"}"#);
        let back: QrtScalar = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-4i64..5, -6i64..7), 0..5).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), qi in 0usize..3) {
            let q = [2u64, 3, 5][qi];
            let ea = a.eval_at_sqrt_q(q);
            let eb = b.eval_at_sqrt_q(q);
            prop_assert_eq!((&a * &b).eval_at_sqrt_q(q), &ea * &eb);
            prop_assert_eq!((&a + &b).eval_at_sqrt_q(q), &ea + &eb);
        }

        #[test]
        fn inverse_is_inverse(a in -20i64..20, b in -20i64..20, d in 1i64..5) {
            let x = QrtScalar::new(2, rat(a, d), rat(b, 1));
            prop_assume!(!x.is_zero());
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }
}
