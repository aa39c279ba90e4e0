use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{PolyError, Rational};

/// a + b·√d with a, b ∈ Q and d a squarefree integer (d = −1 gives Q(i)).
/// Rational values are stored with d = 1 so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl QuadExt {
    pub fn rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero(), d: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        let (s, core) = split_square(&d);
        let b = b * Rational::from_integer(s);
        if b.is_zero() || core.is_one() {
            let a = if core.is_one() { a + b } else { a };
            return Self::rational(a);
        }
        QuadExt { a, b, d: core }
    }

    /// √q for rational q, in canonical form.
    pub fn sqrt(q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let n = q.numer() * q.denom();
        let den = q.denom().clone();
        Self::new(Rational::zero(), Rational::new(BigInt::one(), den), n)
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one(), BigInt::from(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero() || self.d.is_positive()
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    fn common(&self, o: &QuadExt) -> Result<BigInt, PolyError> {
        if self.b.is_zero() {
            Ok(o.d.clone())
        } else if o.b.is_zero() || self.d == o.d {
            Ok(self.d.clone())
        } else {
            Err(PolyError::MixedRadicands)
        }
    }

    pub fn add(&self, o: &QuadExt) -> Result<Self, PolyError> {
        let d = self.common(o)?;
        Ok(Self::new(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn sub(&self, o: &QuadExt) -> Result<Self, PolyError> {
        let d = self.common(o)?;
        Ok(Self::new(&self.a - &o.a, &self.b - &o.b, d))
    }

    pub fn mul(&self, o: &QuadExt) -> Result<Self, PolyError> {
        let d = self.common(o)?;
        let dr = Rational::from_integer(d.clone());
        Ok(Self::new(
            &self.a * &o.a + &self.b * &o.b * dr,
            &self.a * &o.b + &self.b * &o.a,
            d,
        ))
    }

    pub fn neg(&self) -> Self {
        QuadExt { a: -self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    /// Field norm a² − d·b².
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(PolyError::DivisibilityError);
        }
        Ok(QuadExt { a: &self.a / &n, b: -&self.b / &n, d: self.d.clone() })
    }

    pub fn div(&self, o: &QuadExt) -> Result<Self, PolyError> {
        self.mul(&o.inv()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.a * k, &self.b * k, self.d.clone())
    }

    /// Exact sign of a real element; `None` for non-real ones.
    pub fn signum(&self) -> Option<Ordering> {
        if self.b.is_zero() {
            return Some(self.a.cmp(&Rational::zero()));
        }
        if self.d.is_negative() {
            return None;
        }
        // sign(a + b√d): compare a² with b²d when the terms disagree
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sa == Ordering::Equal {
            return Some(sb);
        }
        if sa == sb {
            return Some(sa);
        }
        let a2 = &self.a * &self.a;
        let bd = &self.b * &self.b * Rational::from_integer(self.d.clone());
        Some(match a2.cmp(&bd) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        })
    }

    pub fn re_im_f64(&self) -> (f64, f64) {
        let a = rat_f64(&self.a);
        let b = rat_f64(&self.b);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        if d >= 0.0 {
            (a + b * d.sqrt(), 0.0)
        } else {
            (a, b * (-d).sqrt())
        }
    }
}

pub(crate) fn rat_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// n = s²·core with core squarefree (trial division; large cofactors are kept
/// unless they are perfect squares).
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut s = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &p * &p <= m && p < limit {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            s *= num_traits::pow(p.clone(), e / 2);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if m > BigInt::one() {
        let r = m.sqrt();
        if &r * &r == m {
            s *= r;
        } else {
            core *= m;
        }
    }
    (s, core * sign)
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = if self.d == BigInt::from(-1) {
            "i".to_string()
        } else {
            format!("sqrt({})", self.d)
        };
        let bpart = if self.b.is_one() {
            root
        } else if (-self.b.clone()).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{}", self.b, root)
        };
        if self.a.is_zero() {
            write!(f, "{bpart}")
        } else if let Some(rest) = bpart.strip_prefix('-') {
            write!(f, "{} - {}", self.a, rest)
        } else {
            write!(f, "{} + {}", self.a, bpart)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt_is_canonical() {
        let r = QuadExt::sqrt(&q(8, 9)); // 2√2/3
        assert_eq!(r.d, BigInt::from(2));
        assert_eq!(r.b, q(2, 3));
        assert_eq!(QuadExt::sqrt(&q(4, 9)), QuadExt::rational(q(2, 3)));
        assert_eq!(QuadExt::sqrt(&q(-1, 1)), QuadExt::i());
    }

    #[test]
    fn arithmetic_and_norm() {
        let s = QuadExt::sqrt(&q(2, 1));
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, QuadExt::rational(q(2, 1)));
        let z = QuadExt::new(q(1, 1), q(1, 1), 3.into());
        let inv = z.inv().unwrap();
        assert_eq!(z.mul(&inv).unwrap(), QuadExt::one());
        assert!(s.add(&QuadExt::sqrt(&q(3, 1))).is_err());
    }

    #[test]
    fn exact_sign() {
        // 3 - 2√2 > 0, 1 - √2 < 0
        assert_eq!(QuadExt::new(q(3, 1), q(-2, 1), 2.into()).signum(), Some(Ordering::Greater));
        assert_eq!(QuadExt::new(q(1, 1), q(-1, 1), 2.into()).signum(), Some(Ordering::Less));
        assert_eq!(QuadExt::i().signum(), None);
    }
}
