//! Invariant straight lines: verification, multiplicities, extraction of the
//! full configuration from H, and direction-wise solving for the offsets.

mod qpoly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use qpoly::QPoly;

use crate::comitants::{AffineComitants, ComitantTable, CubicSystem};
use crate::error::Error;
use crate::poly::{self, AffineMap, MPoly, Monomial, QuadExt, Rational, UPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Realness {
    Real,
    /// The entry stands for the line and its complex conjugate.
    ComplexConjugatePair,
}

/// The affine line u·x + v·y + w = 0, normalised so that the first nonzero of
/// (u, v) is 1. All coefficients lie in one field Q(√d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub u: QuadExt,
    pub v: QuadExt,
    pub w: QuadExt,
    pub realness: Realness,
    /// Exponent of the line in E = P·X(Q) − Q·X(P).
    pub multiplicity: u32,
    /// Exponent of the line in H.
    pub h_exponent: u32,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn common_radicand(cs: &[&QuadExt]) -> Result<Option<BigInt>, Error> {
    let mut d: Option<BigInt> = None;
    for c in cs {
        if c.is_rational() {
            continue;
        }
        match &d {
            None => d = Some(c.d.clone()),
            Some(e) if *e == c.d => {}
            Some(_) => return Err(Error::UnsupportedExtension),
        }
    }
    Ok(d)
}

impl Line {
    pub fn new(u: QuadExt, v: QuadExt, w: QuadExt) -> Result<Self, Error> {
        let d = common_radicand(&[&u, &v, &w])?;
        let lead = if !u.is_zero() {
            u.clone()
        } else if !v.is_zero() {
            v.clone()
        } else {
            return Err(Error::InternalInconsistency("line with u = v = 0".into()));
        };
        let inv = lead.inv()?;
        let (u, v, w) = (u.mul(&inv)?, v.mul(&inv)?, w.mul(&inv)?);
        let realness = match d {
            Some(d) if d.is_negative() && !(u.is_rational() && v.is_rational() && w.is_rational()) => {
                Realness::ComplexConjugatePair
            }
            _ => Realness::Real,
        };
        Ok(Line { u, v, w, realness, multiplicity: 1, h_exponent: 0 })
    }

    pub fn rational(u: i64, v: i64, w: i64) -> Self {
        let r = |n| QuadExt::rational(q(n));
        Self::new(r(u), r(v), r(w)).expect("rational line")
    }

    pub fn is_rational(&self) -> bool {
        self.u.is_rational() && self.v.is_rational() && self.w.is_rational()
    }

    pub fn radicand(&self) -> Option<BigInt> {
        common_radicand(&[&self.u, &self.v, &self.w]).ok().flatten()
    }

    pub fn conj(&self) -> Line {
        Line { u: self.u.conj(), v: self.v.conj(), w: self.w.conj(), ..self.clone() }
    }

    /// Number of lines the entry stands for.
    pub fn weight(&self) -> u32 {
        match self.realness {
            Realness::Real => 1,
            Realness::ComplexConjugatePair => 2,
        }
    }

    pub fn linear_form(&self) -> QPoly {
        QPoly::linear(&self.u, &self.v, &self.w)
    }

    /// The line itself when rational, otherwise its product with the conjugate
    /// (a polynomial over Q), normalised.
    pub fn defining_factor(&self) -> MPoly {
        let to_mpoly = |p: &QPoly, deg: usize| -> MPoly {
            let mut out = MPoly::zero();
            for i in 0..=deg {
                for j in 0..=deg - i {
                    let c = p.coeff(i, j);
                    debug_assert!(c.is_rational());
                    out.add_term(Monomial::var(Var::X, i as u32).mul(&Monomial::var(Var::Y, j as u32)), c.a);
                }
            }
            out.normalized()
        };
        if self.is_rational() {
            return to_mpoly(&self.linear_form(), 1);
        }
        let prod = self.linear_form().mul(&self.conj().linear_form()).expect("same radicand");
        to_mpoly(&prod, 2)
    }

    pub fn direction(&self) -> (QuadExt, QuadExt) {
        (self.u.clone(), self.v.clone())
    }

    /// The same line written in the new coordinates of `map`
    /// (old = M·new + shift).
    pub fn pullback(&self, map: &AffineMap) -> Result<Line, Error> {
        let m = |r: &Rational| QuadExt::rational(r.clone());
        let nu = self.u.mul(&m(&map.m[0][0]))?.add(&self.v.mul(&m(&map.m[1][0]))?)?;
        let nv = self.u.mul(&m(&map.m[0][1]))?.add(&self.v.mul(&m(&map.m[1][1]))?)?;
        let nw = self.w.add(&self.u.mul(&m(&map.shift[0]))?)?.add(&self.v.mul(&m(&map.shift[1]))?)?;
        let mut out = Line::new(nu, nv, nw)?;
        out.multiplicity = self.multiplicity;
        out.h_exponent = self.h_exponent;
        Ok(out)
    }

    /// Representative of a conjugate pair with positive radical part in the
    /// first coefficient that has one.
    pub fn canonical(&self) -> Line {
        if self.realness == Realness::Real {
            return self.clone();
        }
        let first = [&self.u, &self.v, &self.w].into_iter().find(|c| !c.is_rational());
        match first {
            Some(c) if c.b.is_negative() => self.conj(),
            _ => self.clone(),
        }
    }

    pub fn equation(&self) -> String {
        format!("{} = 0", self.linear_form().to_string_xy())
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.equation())?;
        if self.realness == Realness::ComplexConjugatePair {
            write!(f, " (and conjugate)")?;
        }
        if self.multiplicity > 1 {
            write!(f, " [mult {}]", self.multiplicity)?;
        }
        Ok(())
    }
}

/// Returns the cofactor R with u·P + v·Q = (u·x + v·y + w)·R when the line is
/// invariant, `None` otherwise.
pub fn is_invariant_line(s: &CubicSystem, l: &Line) -> Result<Option<QPoly>, Error> {
    let lhs = QPoly::from_mpoly(s.p()).scale(&l.u)?.add(&QPoly::from_mpoly(s.q()).scale(&l.v)?)?;
    let (r, ok) = lhs.div_linear(&l.u, &l.v, &l.w)?;
    Ok(ok.then_some(r))
}

/// Exponent of the line's defining factor in E = P·X(Q) − Q·X(P).
pub fn algebraic_multiplicity(s: &CubicSystem, l: &Line) -> Result<u32, Error> {
    multiplicity_in(&s.extactic(), l)
}

/// As [`algebraic_multiplicity`], with E already computed.
pub fn multiplicity_in(e: &MPoly, l: &Line) -> Result<u32, Error> {
    if e.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    Ok(e.factor_exponent(&l.defining_factor()))
}

/// (exponent of Z in H) + 1.
pub fn infinite_line_multiplicity(h: &MPoly) -> u32 {
    h.min_degree_in(Var::PZ) + 1
}

/// k parallel lines α·x + β·y = θ, θ running over the roots of an irreducible
/// polynomial of degree k > 2 (not split further).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnsplitBlock {
    pub factor: MPoly,
    pub degree: u32,
    pub real_lines: u32,
    pub direction: (Rational, Rational),
    pub multiplicity: u32,
    pub h_exponent: u32,
}

impl UnsplitBlock {
    /// Midpoints of isolating intervals of width ≤ `width` for the offsets θ of
    /// the real lines α·x + β·y = θ.
    pub fn real_offsets(&self, width: &Rational) -> Vec<Rational> {
        let Some((_, phi)) = parallel_block(&self.factor) else { return vec![] };
        let two = q(2);
        poly::real_root_intervals(&phi)
            .iter()
            .map(|iv| {
                let r = poly::refine(&phi, iv, width);
                (&r.lo + &r.hi) / &two
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConfigType {
    T3311,
    T3221,
    Other,
}

impl ConfigType {
    pub fn label(self) -> &'static str {
        match self {
            ConfigType::T3311 => "(3,3,1,1)",
            ConfigType::T3221 => "(3,2,2,1)",
            ConfigType::Other => "other",
        }
    }
}

impl fmt::Display for ConfigType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineConfiguration {
    pub lines: Vec<Line>,
    pub blocks: Vec<UnsplitBlock>,
    pub infinite_multiplicity: u32,
    pub total_multiplicity: u32,
    /// Multiplicity mass of the affine lines per direction, largest first.
    pub slope_partition: Vec<u32>,
    pub config_type: ConfigType,
    /// Factors of H that do not consist of invariant lines.
    pub extraneous: Vec<MPoly>,
    pub h: MPoly,
}

impl LineConfiguration {
    pub fn affine_multiplicity(&self) -> u32 {
        self.lines.iter().map(|l| l.weight() * l.multiplicity).sum::<u32>()
            + self.blocks.iter().map(|b| b.degree * b.multiplicity).sum::<u32>()
    }

    /// Every individual line (conjugate pairs expanded), canonical order.
    pub fn expanded_lines(&self) -> Vec<Line> {
        let mut out = Vec::new();
        for l in &self.lines {
            out.push(l.clone());
            if l.realness == Realness::ComplexConjugatePair {
                out.push(l.conj());
            }
        }
        out
    }
}

pub fn configuration_type(c: &LineConfiguration) -> ConfigType {
    type_of(&c.slope_partition, c.total_multiplicity)
}

fn type_of(partition: &[u32], total: u32) -> ConfigType {
    if total != 9 {
        return ConfigType::Other;
    }
    match partition {
        [3, 3, 1, 1] => ConfigType::T3311,
        [3, 2, 2, 1] => ConfigType::T3221,
        _ => ConfigType::Other,
    }
}

fn mono3(i: u32, j: u32, k: u32) -> Monomial {
    Monomial::var(Var::PX, i).mul(&Monomial::var(Var::PY, j)).mul(&Monomial::var(Var::PZ, k))
}

/// Split an irreducible ternary quadratic form into a conjugate pair of lines
/// over Q(√d); returns one of them as (u, v, w).
fn split_pair(f: &MPoly) -> Option<[QuadExt; 3]> {
    let c = |i, j, k| f.coeff(&mono3(i, j, k));
    let (a, b, cc, e, ff, g) = (c(2, 0, 0), c(1, 1, 0), c(0, 2, 0), c(1, 0, 1), c(0, 1, 1), c(0, 0, 2));
    // lines X + αY + βZ, or Y + αX + βZ when X² is absent
    let swap = a.is_zero();
    let (a, cc, e, ff) = if swap { (cc, a, ff, e) } else { (a, cc, e, ff) };
    if a.is_zero() {
        return None;
    }
    let (b, cc, e, ff, g) = (b / &a, cc / &a, e / &a, ff / &a, g / &a);
    let half = Rational::new(1.into(), 2.into());
    let disc_a = &b * &b - q(4) * &cc;
    let (alpha, beta) = if !disc_a.is_zero() {
        let alpha = QuadExt::rational(&b * &half).add(&QuadExt::sqrt(&disc_a).scale(&half)).ok()?;
        if alpha.is_rational() {
            return None;
        }
        let d = Rational::from_integer(alpha.d.clone());
        let b0 = &e * &half;
        let b1 = (q(2) * &alpha.a * &b0 - &ff) / (q(2) * &alpha.b * d);
        let beta = QuadExt::new(b0, b1, alpha.d.clone());
        (alpha, beta)
    } else {
        let disc_b = &e * &e - q(4) * &g;
        let beta = QuadExt::rational(&e * &half).add(&QuadExt::sqrt(&disc_b).scale(&half)).ok()?;
        (QuadExt::rational(&b * &half), beta)
    };
    let r = QuadExt::rational;
    let ok = alpha.add(&alpha.conj()).ok()? == r(b)
        && alpha.mul(&alpha.conj()).ok()? == r(cc)
        && beta.add(&beta.conj()).ok()? == r(e)
        && beta.mul(&beta.conj()).ok()? == r(g)
        && alpha.mul(&beta.conj()).ok()?.add(&alpha.conj().mul(&beta).ok()?).ok()? == r(ff);
    if !ok {
        return None;
    }
    Some(if swap { [alpha, QuadExt::one(), beta] } else { [QuadExt::one(), alpha, beta] })
}

/// Parallel family: f = φ(α·x + β·y) with a rational direction.
fn parallel_block(f: &MPoly) -> Option<((Rational, Rational), UPoly)> {
    let k = f.degree();
    let top = f.homogeneous_part(k);
    let fz = poly::factor(&top).ok()?;
    if fz.factors.len() != 1 || fz.factors[0].poly.degree() != 1 {
        return None;
    }
    let l = &fz.factors[0].poly;
    let (al, be) = (l.coeff(&Monomial::var(Var::X, 1)), l.coeff(&Monomial::var(Var::Y, 1)));
    // constant along (β, −α)
    let along = f.diff(Var::X).scale(&be) - f.diff(Var::Y).scale(&al);
    if !along.is_zero() {
        return None;
    }
    // φ(t) = f at a point with α·x + β·y = t
    let t = MPoly::var(Var::W);
    let phi = if !al.is_zero() {
        f.subst(&[(Var::X, t.scale(&al.recip())), (Var::Y, MPoly::zero())])
    } else {
        f.subst(&[(Var::X, MPoly::zero()), (Var::Y, t.scale(&be.recip()))])
    };
    Some(((al, be), UPoly::from_mpoly(&phi, Var::W).ok()?))
}

fn direction_key(l: &Line) -> String {
    format!("{}|{}", l.u, l.v)
}

/// All invariant lines of a non-degenerate cubic system, read off from H.
pub fn extract_configuration(s: &CubicSystem) -> Result<LineConfiguration, Error> {
    let table = ComitantTable::new(s);
    if table.c(3).is_zero() {
        return Err(Error::LineAtInfinityDegenerate);
    }
    if s.is_degenerate() {
        return Err(Error::DegenerateSystem);
    }
    let aff = AffineComitants::new(s)?;
    extract_with(s, &aff.h)
}

/// Extraction given H (already computed).
pub fn extract_with(s: &CubicSystem, h: &MPoly) -> Result<LineConfiguration, Error> {
    let e = s.extactic();
    if e.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    let mut lines = Vec::new();
    let mut blocks = Vec::new();
    let mut extraneous = Vec::new();
    let infinite_multiplicity = infinite_line_multiplicity(h);
    let fz = if h.is_constant() { None } else { Some(poly::factor(h)?) };
    for fac in fz.iter().flat_map(|f| f.factors.iter()) {
        let big_f = &fac.poly;
        if big_f.vars() == [Var::PZ] {
            continue;
        }
        let f = big_f.dehomogenize();
        let mult = e.factor_exponent(&f);
        let mut push_line = |l: Line| -> Result<bool, Error> {
            if is_invariant_line(s, &l)?.is_none() {
                return Ok(false);
            }
            lines.push(Line { multiplicity: mult, h_exponent: fac.exponent, ..l });
            Ok(true)
        };
        match f.degree() {
            1 => {
                let c = |m: Monomial| QuadExt::rational(f.coeff(&m));
                let l = Line::new(
                    c(Monomial::var(Var::X, 1)),
                    c(Monomial::var(Var::Y, 1)),
                    c(Monomial::one()),
                )?;
                if !push_line(l)? {
                    extraneous.push(f);
                }
            }
            2 if split_pair(big_f).is_some() => {
                let [u, v, w] = split_pair(big_f).expect("checked");
                let l = Line::new(u, v, w)?;
                let ok = match l.realness {
                    Realness::ComplexConjugatePair => push_line(l.canonical())?,
                    Realness::Real => push_line(l.conj())? && push_line(l)?,
                };
                if !ok {
                    extraneous.push(f);
                }
            }
            k => match parallel_block(&f) {
                Some(((al, be), phi)) => {
                    let lhs = &s.p().scale(&al) + &s.q().scale(&be);
                    if !f.divides(&lhs) {
                        extraneous.push(f);
                        continue;
                    }
                    blocks.push(UnsplitBlock {
                        real_lines: poly::real_root_count(&phi) as u32,
                        factor: f.clone(),
                        degree: k,
                        direction: (al, be),
                        multiplicity: mult,
                        h_exponent: fac.exponent,
                    });
                }
                None => extraneous.push(f),
            },
        }
    }
    lines.sort_by_key(|l| (l.realness, l.canonical().equation()));

    let mut mass: BTreeMap<String, u32> = BTreeMap::new();
    for l in &lines {
        *mass.entry(direction_key(l)).or_default() += l.multiplicity;
        if l.realness == Realness::ComplexConjugatePair {
            *mass.entry(direction_key(&l.conj())).or_default() += l.multiplicity;
        }
    }
    for b in &blocks {
        let dir = Line::new(
            QuadExt::rational(b.direction.0.clone()),
            QuadExt::rational(b.direction.1.clone()),
            QuadExt::zero(),
        )?;
        *mass.entry(direction_key(&dir)).or_default() += b.degree * b.multiplicity;
    }
    let mut slope_partition: Vec<u32> = mass.into_values().collect();
    slope_partition.sort_by(|a, b| b.cmp(a));

    let affine: u32 = lines.iter().map(|l| l.weight() * l.multiplicity).sum::<u32>()
        + blocks.iter().map(|b| b.degree * b.multiplicity).sum::<u32>();
    let total_multiplicity = affine + infinite_multiplicity;
    Ok(LineConfiguration {
        config_type: type_of(&slope_partition, total_multiplicity),
        lines,
        blocks,
        infinite_multiplicity,
        total_multiplicity,
        slope_partition,
        extraneous,
        h: h.clone(),
    })
}

/// Lines u·x + v·y + W = 0 of a fixed rational direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionSolve {
    pub direction: (Rational, Rational),
    /// Coefficients (in W) of u·P + v·Q restricted to the line, by power of the
    /// free coordinate; all must vanish.
    pub residuals: Vec<(u32, MPoly)>,
    pub offset_polynomial: MPoly,
    pub solutions: Vec<QuadExt>,
    /// Irreducible factors of degree > 2 of the offset polynomial.
    pub unsplit: Vec<MPoly>,
}

impl DirectionSolve {
    pub fn lines(&self) -> Result<Vec<Line>, Error> {
        let (u, v) = (QuadExt::rational(self.direction.0.clone()), QuadExt::rational(self.direction.1.clone()));
        self.solutions.iter().map(|w| Line::new(u.clone(), v.clone(), w.clone())).collect()
    }
}

/// Roots in Q(√d) of a univariate polynomial in W, plus the factors of higher degree.
fn roots_in_quadratic_fields(f: &MPoly) -> Result<(Vec<QuadExt>, Vec<MPoly>), Error> {
    let mut roots = Vec::new();
    let mut rest = Vec::new();
    if f.is_constant() {
        return Ok((roots, rest));
    }
    let half = Rational::new(1.into(), 2.into());
    for fac in poly::factor(f)?.factors {
        let u = UPoly::from_mpoly(&fac.poly, Var::W)?;
        match u.degree() {
            1 => roots.push(QuadExt::rational(-u.coeff(0) / u.coeff(1))),
            2 => {
                let (a, b, c) = (u.coeff(2), u.coeff(1), u.coeff(0));
                let disc = &b * &b - q(4) * &a * &c;
                let base = QuadExt::rational(-&b / (q(2) * &a));
                let r = QuadExt::sqrt(&disc).scale(&(half.clone() / &a));
                roots.push(base.add(&r)?);
                roots.push(base.sub(&r)?);
            }
            _ => rest.push(fac.poly),
        }
    }
    Ok((roots, rest))
}

pub fn lines_in_direction(s: &CubicSystem, u: &Rational, v: &Rational) -> Result<DirectionSolve, Error> {
    if u.is_zero() && v.is_zero() {
        return Err(Error::NotAnAsymptoticDirection);
    }
    let c3 = ComitantTable::new(s).c(3).clone();
    if !c3.eval(&[(Var::X, -v.clone()), (Var::Y, u.clone())]).is_zero() {
        return Err(Error::NotAnAsymptoticDirection);
    }
    let lhs = &s.p().scale(u) + &s.q().scale(v);
    let w = MPoly::var(Var::W);
    let (restricted, free) = if !u.is_zero() {
        let xs = (&MPoly::var(Var::Y).scale(v) + &w).scale(&(-u.recip()));
        (lhs.subst(&[(Var::X, xs)]), Var::Y)
    } else {
        (lhs.subst(&[(Var::Y, w.scale(&(-v.recip())))]), Var::X)
    };
    let residuals: Vec<(u32, MPoly)> =
        restricted.coeffs_in(free).into_iter().enumerate().map(|(i, c)| (i as u32, c)).collect();
    let offset_polynomial = poly::gcd_many(residuals.iter().map(|(_, c)| c));
    let (mut solutions, unsplit) = if offset_polynomial.is_zero() {
        (vec![], vec![])
    } else {
        roots_in_quadratic_fields(&offset_polynomial)?
    };
    solutions.sort_by_key(|r| r.to_string());
    Ok(DirectionSolve { direction: (u.clone(), v.clone()), residuals, offset_polynomial, solutions, unsplit })
}
