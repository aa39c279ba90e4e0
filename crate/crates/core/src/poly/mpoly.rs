use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Rational};

/// The six indeterminates: affine `x, y`, homogeneous `X, Y, Z`, and the
/// line-offset unknown `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    PX,
    PY,
    PZ,
    W,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::X, Var::Y, Var::PX, Var::PY, Var::PZ, Var::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "X", "Y", "Z", "W"][self.index()]
    }
}

/// Exponent vector, ordered graded-lexicographically with x ≻ y ≻ X ≻ Y ≻ Z ≻ W.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 6]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; 6])
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; 6];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        Monomial(m)
    }

    pub fn checked_div(&self, o: &Monomial) -> Option<Monomial> {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            if *a < *b {
                return None;
            }
            *a -= b;
        }
        Some(Monomial(m))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                add_to(e, c);
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one()))
        } else {
            None
        }
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, |m| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.uses(v)).collect()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term().map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, super::rmul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn diff(&self, v: Var) -> MPoly {
        let i = v.index();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut n = *m;
                n.0[i] -= 1;
                out.terms.insert(n, c * rat(e as i64));
            }
        }
        out
    }

    pub fn diff_n(&self, v: Var, n: u32) -> MPoly {
        let mut p = self.clone();
        for _ in 0..n {
            if p.is_zero() {
                break;
            }
            p = p.diff(v);
        }
        p
    }

    /// Simultaneous substitution of the listed variables.
    pub fn subst(&self, subs: &[(Var, MPoly)]) -> MPoly {
        let mut powers: Vec<Vec<MPoly>> = subs.iter().map(|(_, p)| vec![MPoly::one(), p.clone()]).collect();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut t = MPoly::one();
            for (k, (v, _)) in subs.iter().enumerate() {
                let e = rest.0[v.index()] as usize;
                rest.0[v.index()] = 0;
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e {
                    let next = &powers[k][powers[k].len() - 1] * &powers[k][1];
                    powers[k].push(next);
                }
                t = &t * &powers[k][e];
            }
            out += &t.mul_monomial(&rest).scale(c);
        }
        out
    }

    pub fn subst_value(&self, v: Var, val: &Rational) -> MPoly {
        self.subst(&[(v, MPoly::constant(val.clone()))])
    }

    /// Evaluate at a full assignment (unassigned variables count as 0).
    pub fn eval(&self, point: &[(Var, Rational)]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let val = point
                    .iter()
                    .find(|(w, _)| *w == v)
                    .map(|(_, r)| r.clone())
                    .unwrap_or_else(Rational::zero);
                t *= num_traits::pow(val, e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Coefficients with respect to `v`: `self = Σ out[i]·v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let mut n = *m;
            let e = n.0[v.index()] as usize;
            n.0[v.index()] = 0;
            out[e].terms.insert(n, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, cs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in cs.iter().enumerate() {
            out += &c.mul_monomial(&Monomial::var(v, i as u32));
        }
        out
    }

    /// Exact quotient; fails unless `d` divides `self` in Q[vars].
    pub fn exact_div(&self, d: &MPoly) -> Result<MPoly, PolyError> {
        let lm = match d.leading_term() {
            None => return Err(PolyError::DivisibilityError),
            Some((m, _)) => *m,
        };
        if let Some(c) = d.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        // Work with integer numerators: for a primitive integer divisor the
        // quotient of an integer polynomial is integral (Gauss), so a
        // non-integral step already proves non-divisibility.
        let (da, a) = self.integer_form();
        let (dd, dv) = d.integer_form();
        let cont = dv.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        let dv: Vec<(Monomial, BigInt)> = dv.into_iter().map(|(m, c)| (m, c / &cont)).collect();
        let lc = dv.iter().find(|(m, _)| *m == lm).map(|(_, c)| c.clone()).expect("leading term");
        let mut r: BTreeMap<Monomial, BigInt> = a.into_iter().collect();
        let mut q: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((m, c)) = r.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let qm = m.checked_div(&lm).ok_or(PolyError::DivisibilityError)?;
            let (qc, rem) = c.div_rem(&lc);
            if !rem.is_zero() {
                return Err(PolyError::DivisibilityError);
            }
            for (dm, dc) in &dv {
                let key = dm.mul(&qm);
                let e = r.entry(key).or_default();
                *e -= dc * &qc;
                if e.is_zero() {
                    r.remove(&key);
                }
            }
            q.push((qm, qc));
        }
        let k = Rational::new(dd, da * cont);
        Ok(MPoly::from_terms(q.into_iter().map(|(m, c)| (m, &Rational::from_integer(c) * &k))))
    }

    pub fn divides(&self, f: &MPoly) -> bool {
        f.exact_div(self).is_ok()
    }

    /// Multiplicity of `d` as a factor of `self` (self must be nonzero).
    pub fn factor_exponent(&self, d: &MPoly) -> u32 {
        if self.is_zero() || d.is_constant() {
            return 0;
        }
        let mut e = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_div(d) {
            e += 1;
            cur = q;
        }
        e
    }

    /// Positive rational c with `self / c` having coprime integer coefficients.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    /// Primitive integer form with positive leading coefficient (in the monomial order).
    pub fn normalized(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let (_, ints) = self.integer_form();
        let mut g = BigInt::zero();
        for (_, n) in &ints {
            g = g.gcd(n);
        }
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        MPoly {
            terms: ints.into_iter().map(|(m, n)| (m, Rational::from_integer(n / &g))).collect(),
        }
    }

    pub fn monic(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// True when `self = c·other` for some nonzero rational c.
    pub fn proportional_to(&self, other: &MPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.monic() == other.monic()
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// `Z^(d - deg)`-padded homogenisation of a polynomial in x, y (x→X, y→Y).
    pub fn homogenize(&self, d: u32) -> Result<MPoly, PolyError> {
        let deg = self.degree();
        if deg > d {
            return Err(PolyError::InvalidDegree);
        }
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(Var::PX) + m.exp(Var::PY) + m.exp(Var::PZ) + m.exp(Var::W) > 0 {
                return Err(PolyError::UnsupportedShape);
            }
            let mut n = [0u32; 6];
            n[Var::PX.index()] = m.exp(Var::X);
            n[Var::PY.index()] = m.exp(Var::Y);
            n[Var::PZ.index()] = d - m.degree();
            out.terms.insert(Monomial(n), c.clone());
        }
        Ok(out)
    }

    /// Inverse of [`homogenize`](Self::homogenize): set Z = 1 and X, Y → x, y.
    pub fn dehomogenize(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut n = [0u32; 6];
            n[Var::X.index()] = m.exp(Var::PX) + m.exp(Var::X);
            n[Var::Y.index()] = m.exp(Var::PY) + m.exp(Var::Y);
            n[Var::W.index()] = m.exp(Var::W);
            out.add_term(Monomial(n), c.clone());
        }
        out
    }

    /// Rename variables pointwise (must be injective on the used set).
    pub fn rename(&self, map: &[(Var, Var)]) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut n = *m;
            for (from, _) in map {
                n.0[from.index()] = 0;
            }
            for (from, to) in map {
                n.0[to.index()] += m.exp(*from);
            }
            out.add_term(n, c.clone());
        }
        out
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.degree() == 0 {
                factors.push(a.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        // multiply integer numerators over common denominators, reduce once per term
        let (da, a) = self.integer_form();
        let (db, b) = rhs.integer_form();
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &a {
            for (m2, c2) in &b {
                *acc.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| {
                let c = if den.is_one() { Rational::from_integer(c) } else { Rational::new(c, den.clone()) };
                (m, c)
            })
            .collect();
        MPoly { terms }
    }
}

fn add_to(e: &mut Rational, c: Rational) {
    super::radd(e, &c)
}

impl MPoly {
    /// (d, terms) with self = (1/d)·Σ n_m·m for integers n_m.
    fn integer_form(&self) -> (BigInt, Vec<(Monomial, BigInt)>) {
        let den = self.terms.values().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let n = if c.denom().is_one() { c.numer() * &den } else { c.numer() * (&den / c.denom()) };
                (*m, n)
            })
            .collect();
        (den, terms)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Shorthand constructors used throughout the crate and its tests.
pub fn x() -> MPoly {
    MPoly::var(Var::X)
}
pub fn y() -> MPoly {
    MPoly::var(Var::Y)
}

/// Parse a small polynomial written with `x y X Y Z W`, integers or `a/b`,
/// `+ - * ^` and parentheses. Intended for tests and fixtures.
pub fn parse(s: &str) -> Result<MPoly, PolyError> {
    let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { toks, pos: 0 };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(PolyError::Parse(s.to_string()));
    }
    Ok(r)
}

struct Parser {
    toks: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).copied()
    }

    fn err(&self) -> PolyError {
        PolyError::Parse(self.toks.iter().collect())
    }

    fn expr(&mut self) -> Result<MPoly, PolyError> {
        let mut neg = false;
        if self.peek() == Some('-') {
            neg = true;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        while let Some(c) = self.peek() {
            if c == '+' || c == '-' {
                self.pos += 1;
                let t = self.term()?;
                acc = if c == '+' { acc + t } else { acc - t };
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(c) if c == '(' || c.is_ascii_alphabetic() || c.is_ascii_digit() => {
                    acc = acc * self.power()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err())?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err());
        }
        let s: String = self.toks[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err())
    }

    fn atom(&mut self) -> Result<MPoly, PolyError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err());
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err());
                    }
                    return Ok(MPoly::constant(Rational::new(n, d)));
                }
                Ok(MPoly::constant(Rational::from_integer(n)))
            }
            Some(c) => {
                let v = match c {
                    'x' => Var::X,
                    'y' => Var::Y,
                    'X' => Var::PX,
                    'Y' => Var::PY,
                    'Z' => Var::PZ,
                    'W' => Var::W,
                    _ => return Err(self.err()),
                };
                self.pos += 1;
                Ok(MPoly::var(v))
            }
            None => Err(self.err()),
        }
    }
}
