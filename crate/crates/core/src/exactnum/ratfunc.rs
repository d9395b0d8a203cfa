//! Rational functions in one variable over Q, kept in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::laurent::LaurentPoly;

/// `num / den` with `num` a Laurent polynomial and `den` an integer polynomial
/// with nonzero constant term and positive leading coefficient.
///
/// Numerator and denominator are coprime in `Z[t]` (including contents), so
/// the value is a Laurent polynomial exactly when `den == 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Pseudo-remainder of polynomials `a` by `b` (both with nonnegative exponents).
fn prem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.max_exp().unwrap();
    let lb = b.leading_coeff().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().unwrap().clone();
        r = &r.scale(&lb) - &b.shift(dr - db).scale(&lr);
    }
    r
}

fn primitive(p: &LaurentPoly) -> LaurentPoly {
    let c = p.content();
    if c.is_zero() {
        return p.clone();
    }
    let mut out = p.div_int(&c).unwrap();
    if out.leading_coeff().is_some_and(|l| l.is_negative()) {
        out = -out;
    }
    out
}

/// Gcd in `Z[t]` of two polynomials, normalized with positive leading coefficient.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return primitive(b).scale(&b.content());
    }
    if b.is_zero() {
        return primitive(a).scale(&a.content());
    }
    let c = a.content().gcd(&b.content());
    let (mut x, mut y) = (primitive(a), primitive(b));
    if x.max_exp() < y.max_exp() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = prem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x).scale(&c)
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        // clear negative exponents and factors of t from both sides
        let nmin = num.min_exp().unwrap();
        let dmin = den.min_exp().unwrap();
        let mut n = num.shift(-nmin);
        let mut d = den.shift(-dmin);
        let g = poly_gcd(&n, &d);
        n = n.exact_div(&g).unwrap();
        d = d.exact_div(&g).unwrap();
        if d.leading_coeff().unwrap().is_negative() {
            n = -n;
            d = -d;
        }
        Some(Self {
            num: n.shift(nmin - dmin),
            den: d,
        })
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.num.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self * &inv)
    }

    /// Evaluates at a rational point; `None` at a pole.
    pub fn eval_at(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(x)? / d)
    }

    pub fn eval_int(&self, q: i64) -> Option<BigRational> {
        self.eval_at(&BigRational::from_integer(BigInt::from(q)))
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_laurent() {
            self.num.render(var)
        } else {
            let n = if self.num.is_monomial() {
                self.num.render(var)
            } else {
                format!("({})", self.num.render(var))
            };
            let d = if self.den.is_monomial() {
                self.den.render(var)
            } else {
                format!("({})", self.den.render(var))
            };
            format!("{n}/{d}")
        }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.render("t"))
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn lp(d: &[i64]) -> LaurentPoly {
        LaurentPoly::from_dense(d)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (t^2 - 1)/(t - 1) = t + 1
        let r = RatFunc::new(lp(&[-1, 0, 1]), lp(&[-1, 1])).unwrap();
        assert!(r.is_laurent());
        assert_eq!(r.to_laurent().unwrap(), lp(&[1, 1]));
        // (t^2 - t)/(t^3) = t^-1 - t^-2
        let r = RatFunc::new(lp(&[0, -1, 1]), LaurentPoly::monomial(1, 3)).unwrap();
        assert_eq!(r.to_laurent().unwrap(), LaurentPoly::from_terms([(-1, 1), (-2, -1)]));
        // 2/(4t - 4) = 1/(2t - 2)
        let r = RatFunc::new(lp(&[2]), lp(&[-4, 4])).unwrap();
        assert_eq!(r.denom(), &lp(&[-2, 2]));
        assert!(!r.is_laurent());
        assert!(RatFunc::new(lp(&[1]), LaurentPoly::zero()).is_none());
    }

    #[test]
    fn field_identities() {
        let a = RatFunc::new(lp(&[1, 1]), lp(&[-1, 0, 1])).unwrap();
        let b = RatFunc::new(lp(&[0, 2]), lp(&[1, 3])).unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) * &b.inverse().unwrap(), a);
        assert_eq!(a.to_string(), "1/(t-1)");
        let x = BigRational::from_integer(2.into());
        assert_eq!(a.eval_at(&x).unwrap(), BigRational::one());
        assert!(a.eval_int(1).is_none());
    }

    #[test]
    fn gcd_examples() {
        let g = poly_gcd(&lp(&[-1, 0, 1]), &lp(&[1, 2, 1]));
        assert_eq!(g, lp(&[1, 1]));
        let g = poly_gcd(&lp(&[6, 6]), &lp(&[4, 4]));
        assert_eq!(g, lp(&[2, 2]));
    }
}
