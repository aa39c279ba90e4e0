use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{radd, rmul, MPoly, Monomial, PolyError, Rational, Var};

/// Dense univariate polynomial over Q, coefficients stored low degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| Rational::from_integer(n.into())).collect())
    }

    pub fn zero() -> Self {
        UPoly { c: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(a: Rational) -> Self {
        Self::new(vec![a])
    }

    /// x - r
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.c.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with −1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lc(&self) -> Rational {
        self.c.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        if x.is_integer() && self.c.iter().all(|a| a.is_integer()) {
            let xi = x.numer();
            let mut acc = BigInt::zero();
            for a in self.c.iter().rev() {
                acc = acc * xi + a.numer();
            }
            return Rational::from_integer(acc);
        }
        let mut acc = Rational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Evaluate the homogenisation f(p/q)·q^deg, i.e. the binary form at (p, q).
    pub fn eval_homogeneous(&self, p: &Rational, q: &Rational, deg: usize) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in self.c.iter().enumerate() {
            acc += a * num_traits::pow(p.clone(), i) * num_traits::pow(q.clone(), deg - i);
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> UPoly {
        UPoly::new(self.c.iter().map(|a| rmul(a, k)).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut r = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                radd(&mut r[i + j], &rmul(a, b));
            }
        }
        UPoly::new(r)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = &r[i + dd] * &inv;
            if !t.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[i + j] -= &t * b;
                }
            }
            q[i] = t;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    pub fn exact_div(&self, d: &UPoly) -> Result<UPoly, PolyError> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::DivisibilityError)
        }
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        // primitive remainder sequence over Z
        let ints = |p: &UPoly| p.primitive().integer_coeffs().expect("primitive part is integral");
        let (mut a, mut b) = (ints(self), ints(o));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = int_prem(&a, &b);
            a = b;
            b = int_primitive(r);
            if b.is_empty() {
                break;
            }
        }
        if b.len() == 1 {
            return UPoly::one();
        }
        UPoly::new(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Returns (g, s, t) with s·self + t·o = g monic.
    pub fn ext_gcd(&self, o: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        let k = r0.lc().recip();
        (r0.scale(&k), s0.scale(&k), t0.scale(&k))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() <= 0
    }

    /// Integer primitive part with positive leading coefficient.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for a in &self.c {
            num = num.gcd(a.numer());
            den = den.lcm(a.denom());
        }
        let mut k = Rational::new(den, num);
        if self.lc().is_negative() {
            k = -k;
        }
        self.scale(&k)
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.c
            .iter()
            .map(|a| if a.is_integer() { Some(a.to_integer()) } else { None })
            .collect()
    }

    /// f(x + a)
    pub fn shift(&self, a: &Rational) -> UPoly {
        let lin = UPoly::new(vec![a.clone(), Rational::one()]);
        let mut acc = UPoly::zero();
        for coef in self.c.iter().rev() {
            acc = acc.mul(&lin).add(&UPoly::constant(coef.clone()));
        }
        acc
    }

    pub fn to_mpoly(&self, v: Var) -> MPoly {
        MPoly::from_terms(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| (Monomial::var(v, i as u32), a.clone())),
        )
    }

    /// View a polynomial involving only `v` as univariate.
    pub fn from_mpoly(p: &MPoly, v: Var) -> Result<UPoly, PolyError> {
        let mut c = vec![Rational::zero(); p.degree_in(v) as usize + 1];
        for (m, a) in p.terms() {
            if m.degree() != m.exp(v) {
                return Err(PolyError::UnsupportedShape);
            }
            c[m.exp(v) as usize] = a.clone();
        }
        Ok(UPoly::new(c))
    }

    /// Dehomogenise a binary form in (a, b) to f(t) = F(t, 1), t standing for a.
    pub fn from_binary_form(p: &MPoly, a: Var, b: Var) -> Result<UPoly, PolyError> {
        let mut c = vec![Rational::zero(); p.degree() as usize + 1];
        for (m, k) in p.terms() {
            if m.degree() != m.exp(a) + m.exp(b) {
                return Err(PolyError::UnsupportedShape);
            }
            c[m.exp(a) as usize] += k;
        }
        Ok(UPoly::new(c))
    }

    /// Homogenise to a binary form of degree `d` in (a, b).
    pub fn to_binary_form(&self, a: Var, b: Var, d: u32) -> MPoly {
        MPoly::from_terms(self.c.iter().enumerate().map(|(i, k)| {
            (
                Monomial::var(a, i as u32).mul(&Monomial::var(b, d - i as u32)),
                k.clone(),
            )
        }))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly(Var::X))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly(Var::X))
    }
}

fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= bc * &lr;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn int_primitive(mut r: Vec<BigInt>) -> Vec<BigInt> {
    let g = r.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in r.iter_mut() {
            *c = &*c / &g;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_and_gcd() {
        let a = UPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = UPoly::from_ints(&[1, 1]); // x + 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let g = a.gcd(&UPoly::from_ints(&[1, 2, 1]));
        assert_eq!(g, b);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = UPoly::from_ints(&[1, 0, 1]);
        let b = UPoly::from_ints(&[2, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, UPoly::one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), UPoly::one());
    }

    #[test]
    fn shift_matches_composition() {
        let f = UPoly::from_ints(&[3, -2, 0, 1]);
        let a = Rational::new(1.into(), 3.into());
        let g = f.shift(&a);
        let t = Rational::new(5.into(), 7.into());
        assert_eq!(g.eval(&t), f.eval(&(&t + &a)));
    }
}
