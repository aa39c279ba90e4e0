use std::fmt;

use crate::error::Error;
use crate::poly::{AffineMap, MPoly, Monomial, Rational, Var};

/// Coefficient names of ẋ = a+cx+dy+gx²+2hxy+ky²+px³+3qx²y+3rxy²+sy³,
/// ẏ = b+ex+fy+lx²+2mxy+ny²+tx³+3ux²y+3vxy²+wy³.
pub const LETTERS: [char; 20] = [
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'k', 'l', 'm', 'n', 'p', 'q', 'r', 's', 't', 'u', 'v', 'w',
];

// (letter, in P?, x-exponent, y-exponent, binomial weight)
const LAYOUT: [(char, bool, u32, u32, i64); 20] = [
    ('a', true, 0, 0, 1),
    ('b', false, 0, 0, 1),
    ('c', true, 1, 0, 1),
    ('d', true, 0, 1, 1),
    ('e', false, 1, 0, 1),
    ('f', false, 0, 1, 1),
    ('g', true, 2, 0, 1),
    ('h', true, 1, 1, 2),
    ('k', true, 0, 2, 1),
    ('l', false, 2, 0, 1),
    ('m', false, 1, 1, 2),
    ('n', false, 0, 2, 1),
    ('p', true, 3, 0, 1),
    ('q', true, 2, 1, 3),
    ('r', true, 1, 2, 3),
    ('s', true, 0, 3, 1),
    ('t', false, 3, 0, 1),
    ('u', false, 2, 1, 3),
    ('v', false, 1, 2, 3),
    ('w', false, 0, 3, 1),
];

fn xy(i: u32, j: u32) -> Monomial {
    Monomial::var(Var::X, i).mul(&Monomial::var(Var::Y, j))
}

/// A planar polynomial system ẋ = P(x, y), ẏ = Q(x, y) of degree exactly 3.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicSystem {
    p: MPoly,
    q: MPoly,
}

impl CubicSystem {
    pub fn new(p: MPoly, q: MPoly) -> Result<Self, Error> {
        for f in [&p, &q] {
            if f.vars().iter().any(|v| !matches!(v, Var::X | Var::Y)) || f.degree() > 3 {
                return Err(Error::NotCubic);
            }
        }
        if p.homogeneous_part(3).is_zero() && q.homogeneous_part(3).is_zero() {
            return Err(Error::NotCubic);
        }
        Ok(CubicSystem { p, q })
    }

    pub fn parse(p: &str, q: &str) -> Result<Self, Error> {
        Self::new(crate::poly::parse(p)?, crate::poly::parse(q)?)
    }

    /// Build from the 20 letter coefficients, in the order of [`LETTERS`].
    pub fn from_letters(vals: &[Rational; 20]) -> Result<Self, Error> {
        let (mut p, mut q) = (MPoly::zero(), MPoly::zero());
        for ((_, in_p, i, j, w), val) in LAYOUT.iter().zip(vals) {
            let c = val * Rational::from_integer((*w).into());
            if *in_p {
                p.add_term(xy(*i, *j), c);
            } else {
                q.add_term(xy(*i, *j), c);
            }
        }
        Self::new(p, q)
    }

    pub fn letters(&self) -> [Rational; 20] {
        let mut out: [Rational; 20] = Default::default();
        for (slot, (_, in_p, i, j, w)) in out.iter_mut().zip(LAYOUT.iter()) {
            let f = if *in_p { &self.p } else { &self.q };
            *slot = f.coeff(&xy(*i, *j)) / Rational::from_integer((*w).into());
        }
        out
    }

    pub fn letter(&self, name: char) -> Option<Rational> {
        let k = LETTERS.iter().position(|&c| c == name)?;
        Some(self.letters()[k].clone())
    }

    pub fn p(&self) -> &MPoly {
        &self.p
    }

    pub fn q(&self) -> &MPoly {
        &self.q
    }

    /// Homogeneous parts p_i, q_i.
    pub fn p_i(&self, i: u32) -> MPoly {
        self.p.homogeneous_part(i)
    }

    pub fn q_i(&self, i: u32) -> MPoly {
        self.q.homogeneous_part(i)
    }

    pub fn transform(&self, map: &AffineMap) -> Result<Self, Error> {
        let (p, q) = map.transform_field(&self.p, &self.q);
        Self::new(p, q)
    }

    /// The vector field as a derivation: X(h) = P·h_x + Q·h_y.
    pub fn derive(&self, h: &MPoly) -> MPoly {
        &self.p * &h.diff(Var::X) + &self.q * &h.diff(Var::Y)
    }

    /// E = P·X(Q) − Q·X(P); invariant lines of multiplicity m divide it m times.
    pub fn extactic(&self) -> MPoly {
        &self.p * &self.derive(&self.q) - &self.q * &self.derive(&self.p)
    }

    pub fn is_degenerate(&self) -> bool {
        !crate::poly::gcd(&self.p, &self.q).is_constant()
    }
}

impl fmt::Debug for CubicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x' = {}, y' = {}", self.p, self.q)
    }
}

impl fmt::Display for CubicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn letters_round_trip() {
        let vals: [Rational; 20] = std::array::from_fn(|i| rat(i as i64 - 7));
        let s = CubicSystem::from_letters(&vals).unwrap();
        assert_eq!(s.letters(), vals);
        assert_eq!(s.letter('h'), Some(rat(0)));
        assert_eq!(s.p().coeff(&xy(1, 1)), rat(0));
        assert_eq!(s.q().coeff(&xy(2, 1)), rat(3 * 10));
    }

    #[test]
    fn rejects_non_cubic() {
        assert_eq!(CubicSystem::parse("x^2", "y").unwrap_err(), Error::NotCubic);
        assert_eq!(CubicSystem::parse("x^4", "y^3").unwrap_err(), Error::NotCubic);
        assert_eq!(CubicSystem::parse("X", "y^3").unwrap_err(), Error::NotCubic);
        assert!(CubicSystem::parse("x", "y - x^3").is_ok());
    }

    #[test]
    fn extactic_of_diagonal_cubes() {
        let s = CubicSystem::parse("x^3", "y^3").unwrap();
        // E = 3x³y³(y² − x²)
        assert_eq!(s.extactic(), crate::poly::parse("3x^3y^5 - 3x^5y^3").unwrap());
    }
}
