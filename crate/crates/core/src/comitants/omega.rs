use crate::error::Error;
use crate::poly::{gcd_many, subresultant_formal, MPoly, Monomial, Var};

use super::CubicSystem;

const FORMAL_DEGREES: [u32; 3] = [8, 10, 12];

/// The affine comitants G1..G3 and their homogenised gcd H(X, Y, Z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineComitants {
    pub g: [MPoly; 3],
    pub h: MPoly,
}

// Part of f that is homogeneous of degree `d` in the local coordinates (X, Y).
fn local_part(f: &MPoly, d: u32) -> MPoly {
    MPoly::from_terms(
        f.terms()
            .filter(|(m, _)| m.exp(Var::PX) + m.exp(Var::PY) == d)
            .map(|(m, c)| (*m, c.clone())),
    )
}

/// C_i of the system translated to the symbolic point (x, y), in local
/// coordinates (X, Y), restricted to the chart X = 1, Y = W.
fn translated_c(s: &CubicSystem, i: u32) -> MPoly {
    let shift = [
        (Var::X, MPoly::var(Var::X) + MPoly::var(Var::PX)),
        (Var::Y, MPoly::var(Var::Y) + MPoly::var(Var::PY)),
    ];
    let pt = s.p().subst(&shift);
    let qt = s.q().subst(&shift);
    let ci = &MPoly::var(Var::PY) * &local_part(&pt, i) - &MPoly::var(Var::PX) * &local_part(&qt, i);
    ci.subst(&[(Var::PX, MPoly::one()), (Var::PY, MPoly::var(Var::W))])
}

/// G_i(x, y) = Res_γ(C_i(ã, 1, γ), C_0(ã, 1, γ)) with ã the system translated to
/// (x, y). The resultant is taken with formal degrees i+1 and 1 in γ, i.e. as the
/// resultant of the binary forms, so a vanishing leading coefficient is harmless.
pub fn g_comitant(s: &CubicSystem, i: u32) -> Result<MPoly, Error> {
    assert!((1..=3).contains(&i));
    let c0 = translated_c(s, 0);
    if c0.is_zero() {
        return Err(Error::DegenerateOmega);
    }
    let ci = translated_c(s, i);
    Ok(subresultant_formal(&ci, i as usize + 1, &c0, 1, Var::W, 0)?)
}

impl AffineComitants {
    pub fn new(s: &CubicSystem) -> Result<Self, Error> {
        let g = [g_comitant(s, 1)?, g_comitant(s, 2)?, g_comitant(s, 3)?];
        Ok(AffineComitants { h: line_gcd(&g)?, g })
    }

    /// Exact quotient of the homogenised G_i by H (i = 1..3).
    pub fn cofactor(&self, i: usize) -> Result<MPoly, Error> {
        let gi = self.g[i - 1].homogenize(FORMAL_DEGREES[i - 1])?;
        gi.exact_div(&self.h)
            .map_err(|_| Error::InternalInconsistency(format!("H does not divide G{i}")))
    }

    pub fn homogenized_g(&self, i: usize) -> MPoly {
        self.g[i - 1].homogenize(FORMAL_DEGREES[i - 1]).expect("degree within the formal bound")
    }
}

/// H = gcd of the G_i homogenised to degrees 8, 10, 12. Homogenisation turns an
/// affine gcd g into hom(g), and the Z-powers contribute Z^min(formal − deg).
fn line_gcd(g: &[MPoly; 3]) -> Result<MPoly, Error> {
    let nonzero: Vec<(usize, &MPoly)> = g.iter().enumerate().filter(|(_, f)| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::DegenerateOmega);
    }
    let affine = gcd_many(nonzero.iter().map(|(_, f)| *f));
    let zexp = nonzero
        .iter()
        .map(|(i, f)| FORMAL_DEGREES[*i] - f.degree())
        .min()
        .unwrap_or(0);
    let h = affine.homogenize(affine.degree())?;
    Ok(h.mul_monomial(&Monomial::var(Var::PZ, zexp)).normalized())
}
