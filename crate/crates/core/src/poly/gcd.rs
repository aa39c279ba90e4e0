use num_traits::Zero;

use super::{rat, MPoly, Rational, UPoly, Var};

/// Greatest common divisor in Q[x, y, X, Y, Z, W], normalised (primitive,
/// positive leading coefficient). gcd(0, 0) = 0.
pub fn gcd(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() {
        return g.normalized();
    }
    if g.is_zero() {
        return f.normalized();
    }
    let v = match Var::ALL.iter().copied().find(|&v| f.uses(v) || g.uses(v)) {
        Some(v) => v,
        None => return MPoly::one(),
    };
    if !f.uses(v) {
        return gcd_with_coeffs(f, g, v);
    }
    if !g.uses(v) {
        return gcd_with_coeffs(g, f, v);
    }
    let (cf, pf) = content_pp(f, v);
    let (cg, pg) = content_pp(g, v);
    let c = gcd(&cf, &cg);
    let mut vars: Vec<Var> = pf.vars();
    vars.extend(pg.vars());
    vars.sort();
    vars.dedup();
    let h = match vars[..] {
        [a, b] => {
            let w = if a == v { b } else { a };
            interp_gcd(&pf, &pg, v, w).unwrap_or_else(|| prs_gcd(pf, pg, v))
        }
        _ => prs_gcd(pf, pg, v),
    };
    (&c * &h).normalized()
}

pub fn gcd_many<'a, I: IntoIterator<Item = &'a MPoly>>(it: I) -> MPoly {
    let mut acc = MPoly::zero();
    for p in it {
        acc = gcd(&acc, p);
        if acc.is_constant() && !acc.is_zero() {
            return MPoly::one();
        }
    }
    acc
}

// `c` is free of v; gcd(c, g) divides every v-coefficient of g.
fn gcd_with_coeffs(c: &MPoly, g: &MPoly, v: Var) -> MPoly {
    let mut acc = c.normalized();
    for k in g.coeffs_in(v) {
        if acc.is_constant() {
            return MPoly::one();
        }
        acc = gcd(&acc, &k);
    }
    acc
}

/// Content with respect to `v` (a polynomial in the other variables) and the
/// corresponding primitive part.
pub(crate) fn content_pp(f: &MPoly, v: Var) -> (MPoly, MPoly) {
    let cs = f.coeffs_in(v);
    let c = gcd_many(cs.iter());
    if c.is_constant() {
        return (MPoly::one(), f.normalized());
    }
    let pp = f.exact_div(&c).expect("content divides");
    (c, pp.normalized())
}

/// Newton interpolation through the given nodes.
fn interpolate(pts: &[(Rational, Rational)]) -> UPoly {
    let n = pts.len();
    let mut dd: Vec<Rational> = pts.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&pts[i].0 - &pts[i - j].0);
        }
    }
    let mut out = UPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        out = out.mul(&UPoly::linear_root(&pts[i].0)).add(&UPoly::constant(dd[i].clone()));
    }
    out
}

// Evaluation/interpolation gcd of primitive polynomials in v whose coefficients
// lie in Q[w]. Images at w = a are normalised by γ(a), γ = gcd of the leading
// coefficients, so the interpolant is γ·h/lc(h); the primitive part is checked
// by trial division. Gives up (None) after too many unlucky points.
fn interp_gcd(f: &MPoly, g: &MPoly, v: Var, w: Var) -> Option<MPoly> {
    let to_u = |p: &MPoly| -> Vec<UPoly> {
        p.coeffs_in(v)
            .iter()
            .map(|c| UPoly::from_mpoly(c, w).expect("coefficients lie in Q[w]"))
            .collect()
    };
    let (fc, gc) = (to_u(f), to_u(g));
    let (lf, lg) = (fc.last()?, gc.last()?);
    let gamma = lf.gcd(lg);
    let need = gamma.degree().max(0) as usize + f.degree_in(w).min(g.degree_in(w)) as usize + 1;
    let image = |cs: &[UPoly], a: &Rational| UPoly::new(cs.iter().map(|c| c.eval(a)).collect());
    let mut best = usize::MAX;
    let mut pts: Vec<(Rational, UPoly)> = Vec::new();
    for step in 0..(4 * need + 64) as i64 {
        let a = rat(if step % 2 == 0 { step / 2 } else { -(step + 1) / 2 });
        let ga = gamma.eval(&a);
        if ga.is_zero() || lf.eval(&a).is_zero() || lg.eval(&a).is_zero() {
            continue;
        }
        let h = image(&fc, &a).gcd(&image(&gc, &a));
        let d = h.degree() as usize;
        if d == 0 {
            return Some(MPoly::one());
        }
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            pts.clear();
        }
        pts.push((a, h.scale(&ga)));
        if pts.len() >= need {
            let coeffs: Vec<MPoly> = (0..=best)
                .map(|i| {
                    let nodes: Vec<(Rational, Rational)> =
                        pts.iter().map(|(a, h)| (a.clone(), h.coeff(i))).collect();
                    interpolate(&nodes).to_mpoly(w)
                })
                .collect();
            let cand = content_pp(&MPoly::from_coeffs_in(v, &coeffs), v).1;
            if cand.divides(f) && cand.divides(g) {
                return Some(cand);
            }
        }
    }
    None
}

fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r: Vec<MPoly> = a.to_vec();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &(bc * &lr);
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        e -= 1;
    }
    if e > 0 {
        let k = lcb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &k;
        }
    }
    r
}

// Subresultant PRS; inputs are primitive with positive degree in v.
fn prs_gcd(f: MPoly, g: MPoly, v: Var) -> MPoly {
    let (mut a, mut b) = (f.coeffs_in(v), g.coeffs_in(v));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut gg = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return MPoly::one();
        }
        let div = &gg * &h.pow(delta);
        let r: Vec<MPoly> = r
            .iter()
            .map(|c| c.exact_div(&div).expect("subresultant PRS division is exact"))
            .collect();
        a = std::mem::replace(&mut b, r);
        gg = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            gg.pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant PRS division is exact")
        };
    }
    let last = MPoly::from_coeffs_in(v, &b);
    content_pp(&last, v).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn p(s: &str) -> MPoly {
        parse(s).unwrap()
    }

    #[test]
    fn univariate_gcd() {
        assert_eq!(gcd(&p("x^2-1"), &p("x^2+2x+1")), p("x+1"));
        assert_eq!(gcd(&p("x^2+1"), &p("x-3")), p("1"));
    }

    #[test]
    fn bivariate_gcd() {
        let a = p("(x-y)*(x^2+y+1)^2*(2x+3)");
        let b = p("(x^2+y+1)*(x-y)^3*(y-5)");
        assert_eq!(gcd(&a, &b), p("(x-y)*(x^2+y+1)").normalized());
    }

    #[test]
    fn interpolation_through_nodes() {
        let f = UPoly::from_ints(&[3, -1, 0, 2]);
        let nodes: Vec<_> = (-2..2).map(|a| (rat(a), f.eval(&rat(a)))).collect();
        assert_eq!(interpolate(&nodes), f);
    }

    #[test]
    fn bivariate_gcd_with_leading_coefficient_content() {
        // leading coefficients in x share the factor y, the gcd does not contain it
        let a = p("(y*x^2 + x + y^2)*(y*x - 1)*(x + 2)");
        let b = p("(y*x^2 + x + y^2)*(y*x + 3)^2");
        assert_eq!(gcd(&a, &b), p("y*x^2 + x + y^2").normalized());
        assert_eq!(gcd(&a, &p("x*y - 7")), p("1"));
    }

    #[test]
    fn trivariate_forms() {
        let a = p("Z^2*(X-Y)*(X^2+Z^2)");
        let b = p("Z*(X^2+Z^2)*(Y+Z)");
        assert_eq!(gcd(&a, &b), p("Z*(X^2+Z^2)").normalized());
    }

    #[test]
    fn gcd_with_zero_and_constants() {
        assert_eq!(gcd(&MPoly::zero(), &p("-2x+4")), p("x-2"));
        assert_eq!(gcd(&p("6"), &p("4")), p("1"));
        assert!(gcd(&MPoly::zero(), &MPoly::zero()).is_zero());
    }
}
