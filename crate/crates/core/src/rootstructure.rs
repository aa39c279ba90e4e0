//! Signs of binary forms and the root structure of the quartic C3.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::comitants::ComitantTable;
use crate::error::Error;
use crate::poly::{self, arc_samples, MPoly, Rational, UPoly, Var};

/// Sign behaviour of a binary form over ℝ². "Semidefinite" forms keep one sign
/// but vanish on some real directions; they satisfy the weak reading of S > 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignClass {
    ZeroPoly,
    PositiveDefinite,
    NegativeDefinite,
    PositiveSemidefinite,
    NegativeSemidefinite,
    Indefinite,
}

impl SignClass {
    /// Satisfies "S > 0".
    pub fn is_positive(self) -> bool {
        matches!(self, SignClass::PositiveDefinite | SignClass::PositiveSemidefinite)
    }

    /// Satisfies "S < 0".
    pub fn is_negative(self) -> bool {
        matches!(self, SignClass::NegativeDefinite | SignClass::NegativeSemidefinite)
    }

    pub fn is_zero(self) -> bool {
        self == SignClass::ZeroPoly
    }

    pub fn name(self) -> &'static str {
        match self {
            SignClass::ZeroPoly => "zero",
            SignClass::PositiveDefinite => "positive definite",
            SignClass::NegativeDefinite => "negative definite",
            SignClass::PositiveSemidefinite => "positive semidefinite",
            SignClass::NegativeSemidefinite => "negative semidefinite",
            SignClass::Indefinite => "indefinite",
        }
    }
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn sgn(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// f(t, 1) for a binary form f in x, y.
fn chart(f: &MPoly) -> UPoly {
    UPoly::from_binary_form(f, Var::X, Var::Y).expect("binary form in x, y")
}

/// Exact sign pattern of a homogeneous form in x, y (constants included).
pub fn sign_class(f: &MPoly) -> SignClass {
    if f.is_zero() {
        return SignClass::ZeroPoly;
    }
    debug_assert!(f.is_homogeneous());
    if f.degree() % 2 == 1 {
        return SignClass::Indefinite;
    }
    let g = chart(f);
    let root_at_infinity = g.degree() < f.degree() as isize;
    let mut signs: Vec<i8> = arc_samples(&g).iter().map(|t| sgn(&g.eval(t))).collect();
    if !root_at_infinity {
        signs.push(sgn(&g.lc()));
    }
    let has_roots = root_at_infinity || poly::real_root_count(&g) > 0;
    match (signs.iter().all(|&s| s > 0), signs.iter().all(|&s| s < 0), has_roots) {
        (true, _, false) => SignClass::PositiveDefinite,
        (true, _, true) => SignClass::PositiveSemidefinite,
        (_, true, false) => SignClass::NegativeDefinite,
        (_, true, true) => SignClass::NegativeSemidefinite,
        _ => SignClass::Indefinite,
    }
}

/// Distinct real roots of a univariate polynomial in `v`.
pub fn real_root_count(f: &MPoly, v: Var) -> Result<usize, Error> {
    Ok(poly::real_root_count(&UPoly::from_mpoly(f, v)?))
}

/// Projective real roots of a binary form (the direction y = 0 included).
fn projective_real_roots(f: &MPoly) -> usize {
    let g = chart(f);
    poly::real_root_count(&g) + usize::from(g.degree() < f.degree() as isize)
}

/// The nine root configurations of a nonzero quartic binary form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum C3Case {
    /// four simple real roots
    I,
    /// two simple real, one conjugate pair
    II,
    /// two conjugate pairs
    III,
    /// one real double, two simple real
    IV,
    /// one real double, one conjugate pair
    V,
    /// one real triple, one simple real
    VI,
    /// two real doubles
    VII,
    /// a double conjugate pair
    VIII,
    /// one real quadruple
    IX,
}

impl C3Case {
    pub const ALL: [C3Case; 9] = [
        C3Case::I,
        C3Case::II,
        C3Case::III,
        C3Case::IV,
        C3Case::V,
        C3Case::VI,
        C3Case::VII,
        C3Case::VIII,
        C3Case::IX,
    ];

    pub fn roman(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"][self as usize]
    }

    /// (multiplicity, real?) of each distinct root, sorted.
    pub fn partition(self) -> Vec<(u32, bool)> {
        let mut p = match self {
            C3Case::I => vec![(1, true); 4],
            C3Case::II => vec![(1, true), (1, true), (1, false), (1, false)],
            C3Case::III => vec![(1, false); 4],
            C3Case::IV => vec![(2, true), (1, true), (1, true)],
            C3Case::V => vec![(2, true), (1, false), (1, false)],
            C3Case::VI => vec![(3, true), (1, true)],
            C3Case::VII => vec![(2, true), (2, true)],
            C3Case::VIII => vec![(2, false), (2, false)],
            C3Case::IX => vec![(4, true)],
        };
        p.sort_by(|a, b| b.cmp(a));
        p
    }

    fn from_partition(mut p: Vec<(u32, bool)>) -> Option<C3Case> {
        p.sort_by(|a, b| b.cmp(a));
        C3Case::ALL.into_iter().find(|c| c.partition() == p)
    }
}

impl fmt::Display for C3Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.roman())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootStructure {
    pub case: C3Case,
    /// (multiplicity, real?) per distinct projective root, largest first.
    pub partition: Vec<(u32, bool)>,
}

impl RootStructure {
    fn of(case: C3Case) -> Self {
        RootStructure { case, partition: case.partition() }
    }
}

fn scalar(f: &MPoly) -> Rational {
    f.constant_value().expect("scalar invariant")
}

/// Decide the root structure of C3 from the signs of 𝒟₁..𝒟₄.
pub fn c3_structure_from_comitants(t: &ComitantTable) -> Result<RootStructure, Error> {
    if t.c(3).is_zero() {
        return Err(Error::LineAtInfinityDegenerate);
    }
    let d1 = scalar(t.cal_d(1));
    let (d2, d3) = (t.cal_d(2), t.cal_d(3));
    let (s2, s3) = (sign_class(d2), sign_class(d3));
    let case = if d1.is_positive() {
        if s2.is_positive() && s3.is_positive() {
            C3Case::I
        } else if never_both_positive(d2, d3) {
            C3Case::III
        } else {
            return Err(Error::InconsistentRootStructure);
        }
    } else if d1.is_negative() {
        C3Case::II
    } else if !d3.is_zero() {
        if s3.is_positive() {
            C3Case::IV
        } else if s3.is_negative() {
            C3Case::V
        } else {
            return Err(Error::InconsistentRootStructure);
        }
    } else if !d2.is_zero() {
        if scalar(t.cal_d(4)).is_zero() {
            C3Case::VI
        } else if s2.is_positive() {
            C3Case::VII
        } else if s2.is_negative() {
            C3Case::VIII
        } else {
            return Err(Error::InconsistentRootStructure);
        }
    } else {
        C3Case::IX
    };
    Ok(RootStructure::of(case))
}

/// True when at every real direction with 𝒟₂𝒟₃ ≠ 0 one of them is negative.
/// The real roots of 𝒟₂𝒟₃ cut the circle of directions into arcs on which both
/// signs are constant; one rational direction per arc decides the predicate.
fn never_both_positive(d2: &MPoly, d3: &MPoly) -> bool {
    let prod = d2 * d3;
    if prod.is_zero() {
        return true;
    }
    let g = chart(&prod);
    let mut dirs: Vec<(Rational, Rational)> =
        arc_samples(&g).into_iter().map(|t| (t, Rational::from_integer(1.into()))).collect();
    dirs.push((Rational::from_integer(1.into()), Rational::zero()));
    dirs.iter().all(|(a, b)| {
        let pt = [(Var::X, a.clone()), (Var::Y, b.clone())];
        let (v2, v3) = (d2.eval(&pt), d3.eval(&pt));
        v2.is_zero() || v3.is_zero() || v2.is_negative() || v3.is_negative()
    })
}

/// Root structure of C3 by factoring it over Q.
pub fn c3_structure_direct(c3: &MPoly) -> Result<RootStructure, Error> {
    if c3.is_zero() {
        return Err(Error::LineAtInfinityDegenerate);
    }
    let fz = poly::factor(c3)?;
    let mut partition = Vec::new();
    for f in &fz.factors {
        let real = projective_real_roots(&f.poly);
        let deg = f.poly.degree() as usize;
        for k in 0..deg {
            partition.push((f.exponent, k < real));
        }
    }
    let case = C3Case::from_partition(partition.clone()).ok_or(Error::InconsistentRootStructure)?;
    Ok(RootStructure { case, partition: case.partition() })
}
