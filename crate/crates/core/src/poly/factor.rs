//! Factorisation over Q of univariate polynomials, bivariate polynomials and
//! binary/ternary forms of total degree at most 12.
//!
//! Univariate: Zassenhaus (Cantor–Zassenhaus mod p, linear multifactor Hensel
//! lifting mod p^k, subset recombination). Bivariate: specialise one variable,
//! factor, lift t-adically and recombine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gcd::{content_pp, gcd};
use super::modp::{Fp, PolyP};
use super::{MPoly, Monomial, PolyError, Rational, UPoly, Var};

pub const MAX_FACTOR_DEGREE: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: MPoly,
    pub exponent: u32,
}

/// `unit · Π factor^exponent`, factors primitive with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn expand(&self) -> MPoly {
        self.factors
            .iter()
            .fold(MPoly::constant(self.unit.clone()), |acc, f| &acc * &f.poly.pow(f.exponent))
    }
}

pub fn factor(f: &MPoly) -> Result<Factorization, PolyError> {
    if f.is_zero() {
        return Err(PolyError::UnsupportedShape);
    }
    if f.degree() > MAX_FACTOR_DEGREE {
        return Err(PolyError::UnsupportedShape);
    }
    let vars = f.vars();
    let mut list: Vec<(MPoly, u32)> = match vars.len() {
        0 => vec![],
        1 => {
            let u = UPoly::from_mpoly(f, vars[0])?;
            factor_univariate(&u)
                .into_iter()
                .map(|(g, e)| (g.to_mpoly(vars[0]), e))
                .collect()
        }
        2 if f.is_homogeneous() => factor_binary_form(f, vars[0], vars[1]),
        2 => factor_bivariate(f, vars[0], vars[1]),
        3 if f.is_homogeneous() => factor_ternary_form(f, &vars)?,
        _ => return Err(PolyError::UnsupportedShape),
    };
    for (g, _) in list.iter_mut() {
        *g = g.normalized();
    }
    list.sort_by_key(|a| (a.0.degree(), a.0.to_string()));
    let mut merged: Vec<Factor> = Vec::new();
    for (g, e) in list {
        match merged.iter_mut().find(|h| h.poly == g) {
            Some(h) => h.exponent += e,
            None => merged.push(Factor { poly: g, exponent: e }),
        }
    }
    let lc_prod = merged
        .iter()
        .fold(Rational::one(), |acc, h| acc * num_traits::pow(h.poly.leading_coeff(), h.exponent as usize));
    Ok(Factorization {
        unit: f.leading_coeff() / lc_prod,
        factors: merged,
    })
}

/// Yun's squarefree decomposition over Q[v] (v the first variable used).
pub fn squarefree(f: &MPoly) -> Vec<(MPoly, u32)> {
    let v = match f.vars().first() {
        Some(&v) => v,
        None => return vec![],
    };
    squarefree_in(f, v)
}

// f primitive with respect to v is assumed by the caller for the full
// decomposition; content in other variables is left inside the first part.
fn squarefree_in(f: &MPoly, v: Var) -> Vec<(MPoly, u32)> {
    let mut out = Vec::new();
    let df = f.diff(v);
    let c = gcd(f, &df);
    let mut w = f.exact_div(&c).unwrap();
    let mut yy = df.exact_div(&c).unwrap();
    let mut z = &yy - &w.diff(v);
    let mut i = 1;
    while !w.is_constant() {
        let g = gcd(&w, &z);
        if !g.is_constant() {
            out.push((g.clone(), i));
        }
        w = w.exact_div(&g).unwrap();
        yy = z.exact_div(&g).unwrap();
        z = &yy - &w.diff(v);
        i += 1;
    }
    out
}

/// Irreducible factors over Q with multiplicities (primitive integer polynomials,
/// positive leading coefficient). Constants are dropped.
pub fn factor_univariate(f: &UPoly) -> Vec<(UPoly, u32)> {
    if f.degree() <= 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for (g, e) in squarefree_upoly(f) {
        for h in zassenhaus(&g) {
            out.push((h, e));
        }
    }
    out.sort_by_key(|a| (a.0.degree(), a.0.coeffs().to_vec()));
    out
}

fn squarefree_upoly(f: &UPoly) -> Vec<(UPoly, u32)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let c = f.gcd(&df);
    let mut w = f.exact_div(&c).unwrap();
    let mut yy = df.exact_div(&c).unwrap();
    let mut z = yy.sub(&w.derivative());
    let mut i = 1;
    while w.degree() > 0 {
        let g = w.gcd(&z);
        if g.degree() > 0 {
            out.push((g.primitive(), i));
        }
        w = w.exact_div(&g).unwrap();
        yy = z.exact_div(&g).unwrap();
        z = yy.sub(&w.derivative());
        i += 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Univariate: Zassenhaus over Z.

type ZPoly = Vec<BigInt>;

fn to_zpoly(f: &UPoly) -> ZPoly {
    f.primitive().integer_coeffs().expect("primitive part is integral")
}

fn from_zpoly(f: &ZPoly) -> UPoly {
    UPoly::new(f.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn zmod(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zmul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r.iter().map(|c| zmod(c, m)).collect()
}

fn to_fp(a: &ZPoly, fp: &Fp) -> PolyP {
    let p = BigInt::from(fp.p);
    fp.trim(a.iter().map(|c| zmod(c, &p).to_u64().unwrap()).collect())
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..2000).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

// Irreducible factors of a squarefree polynomial over Q.
fn zassenhaus(f: &UPoly) -> Vec<UPoly> {
    let fz = to_zpoly(f);
    let n = fz.len() - 1;
    if n <= 1 {
        return vec![from_zpoly(&fz)];
    }
    let lc = fz[n].clone();

    // choose a prime with few modular factors
    let mut best: Option<(u64, usize)> = None;
    let mut tried = 0;
    for p in small_primes() {
        let fp = Fp::new(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fm = fp.monic(&to_fp(&fz, &fp));
        if !fp.is_squarefree(&fm) {
            continue;
        }
        let count: usize = fp.ddf(&fm).iter().map(|(g, d)| (Fp::deg(g) as usize) / d).sum();
        if best.is_none_or(|(_, c)| count < c) {
            best = Some((p, count));
        }
        tried += 1;
        if tried >= 5 || count == 1 {
            break;
        }
    }
    let (p, count) = best.expect("some prime keeps f squarefree");
    if count == 1 {
        return vec![from_zpoly(&fz)];
    }
    let fp = Fp::new(p);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let fm = fp.monic(&to_fp(&fz, &fp));
    let gs = fp.factor_squarefree(&fm, &mut rng);

    // Mignotte-style bound on coefficients of lc·(any factor)
    let norm1: BigInt = fz.iter().map(|c| c.abs()).sum();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(&fz, &gs, &fp, k);

    // recombination
    let mut remaining: Vec<ZPoly> = lifted;
    let mut cur = fz.clone();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = None;
        for subset in combinations(remaining.len(), s) {
            let lc_cur = cur.last().unwrap().clone();
            let mut g: ZPoly = vec![zmod(&lc_cur, &pk)];
            for &i in &subset {
                g = zmul_mod(&g, &remaining[i], &pk);
            }
            let g: ZPoly = g.iter().map(|c| symmetric(c, &pk)).collect();
            let gu = from_zpoly(&g).primitive();
            let cu = from_zpoly(&cur);
            if let Ok(q) = cu.exact_div(&gu) {
                if q.coeffs().iter().all(|c| c.is_integer()) {
                    found = Some((subset, gu, q));
                    break;
                }
            }
        }
        match found {
            Some((subset, gu, q)) => {
                out.push(gu);
                cur = q.integer_coeffs().unwrap();
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => s += 1,
        }
    }
    if cur.len() > 1 {
        out.push(from_zpoly(&cur).primitive());
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

// Linear multifactor Hensel lifting of the monic modular factors `gs` of
// f/lc(f) mod p up to p^k. Returns monic lifts with coefficients in [0, p^k).
fn hensel_lift(f: &ZPoly, gs: &[PolyP], fp: &Fp, k: u32) -> Vec<ZPoly> {
    let p = BigInt::from(fp.p);
    let pk = num_traits::pow(p.clone(), k as usize);
    let n = f.len() - 1;
    let lc_inv = {
        // inverse of lc modulo p^k via Newton iteration from the mod-p inverse
        let lc = zmod(&f[n], &pk);
        let mut inv = BigInt::from(fp.inv(zmod(&f[n], &p).to_u64().unwrap()));
        let mut m = p.clone();
        while m < pk {
            m = (&m * &m).min(pk.clone());
            inv = zmod(&(&inv * (BigInt::from(2) - &lc * &inv)), &m);
        }
        inv
    };
    let fhat: ZPoly = f.iter().map(|c| zmod(&(c * &lc_inv), &pk)).collect();

    let r = gs.len();
    // Bezout cofactors: s_i ≡ (Π_{j≠i} g_j)^{-1} mod g_i
    let svec: Vec<PolyP> = (0..r)
        .map(|i| {
            let others = (0..r)
                .filter(|&j| j != i)
                .fold(vec![1u64], |acc, j| fp.poly_mul(&acc, &gs[j]));
            let (_, s, _) = fp.ext_gcd(&others, &gs[i]);
            s
        })
        .collect();

    let mut lifted: Vec<ZPoly> = gs
        .iter()
        .map(|g| g.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let mut pj = p.clone();
    for _ in 1..k {
        let pj1 = &pj * &p;
        let prod = lifted.iter().fold(vec![BigInt::one()], |acc, g| zmul_mod(&acc, g, &pj1));
        let e: ZPoly = (0..=n)
            .map(|i| {
                let a = fhat.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                zmod(&(a - b), &pj1)
            })
            .collect();
        let e_red: ZPoly = e.iter().map(|c| c / &pj).collect();
        let e_p = to_fp(&e_red, fp);
        if !e_p.is_empty() {
            for i in 0..r {
                let delta = fp.rem(&fp.poly_mul(&svec[i], &e_p), &gs[i]);
                for (d, &c) in delta.iter().enumerate() {
                    lifted[i][d] = zmod(&(&lifted[i][d] + BigInt::from(c) * &pj), &pj1);
                }
            }
        }
        pj = pj1;
    }
    lifted
}

// ---------------------------------------------------------------------------
// Forms and bivariate polynomials.

fn factor_binary_form(f: &MPoly, a: Var, b: Var) -> Vec<(MPoly, u32)> {
    let d = f.degree();
    let eb = f.min_degree_in(b);
    let mut out = Vec::new();
    if eb > 0 {
        out.push((MPoly::var(b), eb));
    }
    let u = UPoly::from_binary_form(f, a, b).expect("binary form");
    let mut used = eb;
    for (g, e) in factor_univariate(&u) {
        let k = g.degree() as u32;
        used += k * e;
        out.push((g.to_binary_form(a, b, k), e));
    }
    debug_assert_eq!(used, d);
    out
}

fn factor_ternary_form(f: &MPoly, vars: &[Var]) -> Result<Vec<(MPoly, u32)>, PolyError> {
    let (a, b, c) = (vars[0], vars[1], vars[2]);
    let mut out = Vec::new();
    let ec = f.min_degree_in(c);
    if ec > 0 {
        out.push((MPoly::var(c), ec));
    }
    // dehomogenise c = 1
    let g = f.subst_value(c, &Rational::one());
    let inner = factor(&g)?;
    for h in inner.factors {
        let k = h.poly.degree();
        // homogenise each factor to its own degree with c
        let hom = MPoly::from_terms(h.poly.terms().map(|(m, coef)| {
            let mut n = *m;
            n.0[c.index()] = k - m.degree();
            (n, coef.clone())
        }));
        debug_assert!(hom.uses(a) || hom.uses(b));
        out.push((hom, h.exponent));
    }
    Ok(out)
}

fn factor_bivariate(f: &MPoly, xv: Var, tv: Var) -> Vec<(MPoly, u32)> {
    let mut out = Vec::new();
    let (cont, pp) = content_pp(f, xv);
    if !cont.is_constant() {
        let u = UPoly::from_mpoly(&cont, tv).expect("content is univariate in t");
        for (g, e) in factor_univariate(&u) {
            out.push((g.to_mpoly(tv), e));
        }
    }
    if pp.degree_in(xv) == 0 {
        return out;
    }
    for (g, e) in squarefree_in(&pp, xv) {
        for h in factor_bivariate_squarefree(&g, xv, tv) {
            out.push((h, e));
        }
    }
    out
}

type Series = Vec<UPoly>; // coefficient of t^j as a polynomial in x

fn ser_mul(a: &Series, b: &Series, k: usize) -> Series {
    let mut out = vec![UPoly::zero(); k];
    for (i, ai) in a.iter().enumerate().take(k) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(k - i) {
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

fn to_series(f: &MPoly, xv: Var, tv: Var, k: usize) -> Series {
    let mut out = vec![UPoly::zero(); k];
    for (j, cj) in f.coeffs_in(tv).into_iter().enumerate().take(k) {
        out[j] = UPoly::from_mpoly(&cj, xv).expect("bivariate");
    }
    out
}

fn from_series(s: &Series, xv: Var, tv: Var) -> MPoly {
    let mut acc = MPoly::zero();
    for (j, c) in s.iter().enumerate() {
        acc += &c.to_mpoly(xv).mul_monomial(&Monomial::var(tv, j as u32));
    }
    acc
}

// f primitive in xv and squarefree, deg_x f ≥ 1.
fn factor_bivariate_squarefree(f: &MPoly, xv: Var, tv: Var) -> Vec<MPoly> {
    let n = f.degree_in(xv) as usize;
    if f.degree_in(tv) == 0 {
        let u = UPoly::from_mpoly(f, xv).expect("univariate");
        return factor_univariate(&u).into_iter().map(|(g, _)| g.to_mpoly(xv)).collect();
    }
    if n == 1 {
        return vec![f.clone()];
    }
    // good specialisation point
    let mut shift = None;
    for i in 0..200i64 {
        let a = Rational::from_integer(BigInt::from(if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 }));
        let u = UPoly::from_mpoly(&f.subst_value(tv, &a), xv).expect("univariate");
        if u.degree() as usize == n && u.is_squarefree() {
            shift = Some((a, u));
            break;
        }
    }
    let (a, f0) = shift.expect("a squarefree specialisation exists");
    let t_plus_a = &MPoly::var(tv) + &MPoly::constant(a.clone());
    let t_minus_a = &MPoly::var(tv) - &MPoly::constant(a.clone());
    let mut cur = f.subst(&[(tv, t_plus_a)]);
    let kprec = cur.degree_in(tv) as usize + 1;

    let uf = factor_univariate(&f0);
    if uf.len() == 1 {
        return vec![f.clone()];
    }
    let gs: Vec<UPoly> = uf.iter().map(|(g, _)| g.monic()).collect();
    let r = gs.len();

    // monic version of cur as a t-adic series
    let lc_t = UPoly::from_mpoly(&cur.coeffs_in(xv)[n], tv).expect("lc is univariate in t");
    let lc_series: Vec<Rational> = (0..kprec).map(|j| lc_t.coeff(j)).collect();
    let mut inv = vec![Rational::zero(); kprec];
    inv[0] = lc_series[0].recip();
    for j in 1..kprec {
        let mut s = Rational::zero();
        for i in 1..=j {
            s += &lc_series[i] * &inv[j - i];
        }
        inv[j] = -s * &inv[0];
    }
    let fser = to_series(&cur, xv, tv, kprec);
    let inv_ser: Series = inv.iter().map(|c| UPoly::constant(c.clone())).collect();
    let fm = ser_mul(&fser, &inv_ser, kprec);

    let svec: Vec<UPoly> = (0..r)
        .map(|i| {
            let others = (0..r).filter(|&j| j != i).fold(UPoly::one(), |acc, j| acc.mul(&gs[j]));
            let (_, s, _) = others.ext_gcd(&gs[i]);
            s
        })
        .collect();
    let mut lifted: Vec<Series> = gs
        .iter()
        .map(|g| {
            let mut s = vec![UPoly::zero(); kprec];
            s[0] = g.clone();
            s
        })
        .collect();
    for j in 1..kprec {
        let prod = lifted
            .iter()
            .fold(vec![UPoly::one()], |acc, g| ser_mul(&acc, g, j + 1));
        let e = fm[j].sub(&prod[j]);
        if e.is_zero() {
            continue;
        }
        for i in 0..r {
            lifted[i][j] = svec[i].mul(&e).rem(&gs[i]);
        }
    }

    let mut remaining = lifted;
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = None;
        for subset in combinations(remaining.len(), s) {
            let lc_cur = cur.coeffs_in(xv).last().unwrap().clone();
            let lc_ser: Series = (0..kprec)
                .map(|j| {
                    UPoly::constant(
                        UPoly::from_mpoly(&lc_cur, tv).expect("univariate lc").coeff(j),
                    )
                })
                .collect();
            let mut g = lc_ser;
            for &i in &subset {
                g = ser_mul(&g, &remaining[i], kprec);
            }
            let cand = from_series(&g, xv, tv);
            if cand.degree_in(xv) == 0 {
                continue;
            }
            let (_, cand) = content_pp(&cand, xv);
            if let Ok(q) = cur.exact_div(&cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand.subst(&[(tv, t_minus_a.clone())]).normalized());
                cur = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => s += 1,
        }
    }
    if cur.degree_in(xv) > 0 {
        out.push(cur.subst(&[(tv, t_minus_a)]).normalized());
    }
    out
}
