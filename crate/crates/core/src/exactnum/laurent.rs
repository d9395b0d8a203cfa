//! Integer Laurent polynomials in one formal variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::qrt::QrtScalar;

/// An element of `Z[t, t^{-1}]`, stored sparsely as exponent → coefficient.
///
/// No zero coefficient is ever stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `t^i`.
    pub fn from_dense(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as i64, c)))
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Iterates over `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// True for `c·t^e` (including zero).
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// `p(t) → p(t^{-1})`.
    pub fn invert_var(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Integer content (gcd of coefficients), zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_int(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = BTreeMap::new();
        for (e, c) in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.insert(*e, q);
        }
        Some(Self { coeffs: out })
    }

    /// Exact division in `Z[t, t^{-1}]`.
    ///
    /// Returns `None` when `divisor` is zero or the quotient is not an integer
    /// Laurent polynomial.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dshift = divisor.min_exp().unwrap();
        let nshift = self.min_exp().unwrap();
        let d = divisor.shift(-dshift);
        let mut rem = self.shift(-nshift);
        let ddeg = d.max_exp().unwrap();
        let dlead = d.leading_coeff().unwrap().clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let rdeg = rem.max_exp().unwrap();
            if rdeg < ddeg {
                return None;
            }
            let (c, r) = rem.leading_coeff().unwrap().div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(c, rdeg - ddeg);
            rem = &rem - &(&step * &d);
            quot = &quot + &step;
        }
        Some(quot.shift(nshift - dshift))
    }

    /// Evaluates at a rational point. Fails only at zero with a negative exponent.
    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            if x.is_zero() && *e < 0 {
                return None;
            }
            let xe = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), (-*e) as usize)
            };
            acc += xe * BigRational::from_integer(c.clone());
        }
        Some(acc)
    }

    /// Evaluates at an integer `t = q` (q ≠ 0).
    pub fn eval_int(&self, q: i64) -> BigRational {
        self.eval_rational(&BigRational::from_integer(q.into()))
            .expect("evaluation at a nonzero integer")
    }

    /// Evaluates a polynomial (no negative exponents) at an integer.
    pub fn eval_int_exact(&self, q: i64) -> Option<BigInt> {
        if !self.is_polynomial() {
            return None;
        }
        let v = self.eval_int(q);
        Some(v.to_integer())
    }

    /// Evaluates at `v = √q`, landing in `Q(√q)`.
    pub fn eval_at_sqrt_q(&self, q: u64) -> QrtScalar {
        let mut acc = QrtScalar::zero(q);
        for (e, c) in &self.coeffs {
            acc = &acc + &QrtScalar::nu_pow(q, *e).scale_int(c);
        }
        acc
    }

    /// Evaluates at `t = q` as an element of `Q(√q)`.
    pub fn eval_at_q(&self, q: u64) -> QrtScalar {
        QrtScalar::from_rational(q, self.eval_int(q as i64))
    }

    /// Decimal rendering in the variable `var`, highest exponent first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mono = match *e {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&abs.to_string());
                out.push_str(&mono);
            }
        }
        out
    }

    /// Parses the output of [`render`](Self::render) (and mild variants with
    /// spaces, `*`, and parenthesised negative exponents such as `t^(-1)`).
    pub fn parse(s: &str, var: char) -> crate::Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || crate::HallError::Parse(format!("cannot parse Laurent polynomial {s:?}"));
        if compact.is_empty() {
            return Err(err());
        }
        let bytes: Vec<char> = compact.chars().collect();
        let mut out = Self::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i != 0 {
                return Err(err());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if i > start {
                bytes[start..i].iter().collect::<String>().parse().map_err(|_| err())?
            } else {
                BigInt::one()
            };
            if i < bytes.len() && bytes[i] == '*' {
                i += 1;
            }
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == var {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == '^' {
                    i += 1;
                    let paren = i < bytes.len() && bytes[i] == '(';
                    if paren {
                        i += 1;
                    }
                    let es = i;
                    if i < bytes.len() && bytes[i] == '-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = bytes[es..i].iter().collect::<String>().parse().map_err(|_| err())?;
                    if paren {
                        if i >= bytes.len() || bytes[i] != ')' {
                            return Err(err());
                        }
                        i += 1;
                    }
                }
            } else if i == start {
                return Err(err());
            }
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.render("t"))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in map {
            let e: i64 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(dense: &[i64]) -> LaurentPoly {
        LaurentPoly::from_dense(dense)
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &lp(&[1, 1]) - &lp(&[1, 1]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
        assert_eq!(LaurentPoly::monomial(0, 5), LaurentPoly::zero());
    }

    #[test]
    fn exact_division() {
        let a = lp(&[1, 2, 1]);
        let b = lp(&[1, 1]);
        assert_eq!(a.exact_div(&b), Some(b.clone()));
        assert_eq!(lp(&[1, 0, 1]).exact_div(&b), None);
        // (t^2 - t) / (t - 1) = t, with Laurent shifts on both sides
        let num = lp(&[0, -1, 1]).shift(-3);
        assert_eq!(num.exact_div(&lp(&[-1, 1])), Some(LaurentPoly::monomial(1, -2)));
        assert_eq!(lp(&[2, 2]).exact_div(&LaurentPoly::constant(2)), Some(b));
        assert_eq!(lp(&[1, 2]).exact_div(&LaurentPoly::constant(2)), None);
        assert_eq!(a.exact_div(&LaurentPoly::zero()), None);
    }

    #[test]
    fn render_and_parse() {
        let p = LaurentPoly::from_terms([(1, 1), (0, 1)]);
        assert_eq!(p.to_string(), "t+1");
        let q = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        assert_eq!(q.to_string(), "t-t^-1");
        assert_eq!(LaurentPoly::monomial(-3, 2).to_string(), "-3t^2");
        for s in ["t+1", "t-t^-1", "-3t^2", "1", "-t^-1+2", "2t^3-t+5"] {
            let parsed = LaurentPoly::parse(s, 't').unwrap();
            assert_eq!(LaurentPoly::parse(&parsed.to_string(), 't').unwrap(), parsed);
        }
        assert_eq!(
            LaurentPoly::parse("1 - t^(-1)", 't').unwrap(),
            LaurentPoly::from_terms([(0, 1), (-1, -1)])
        );
        assert!(LaurentPoly::parse("t+", 't').is_err());
        assert!(LaurentPoly::parse("x", 't').is_err());
    }

    #[test]
    fn serde_map_of_strings() {
        let p = LaurentPoly::from_terms([(-1, -2), (3, 7)]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"-1":"-2","3":"7"}"#);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}
