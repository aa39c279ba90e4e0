mod fixtures;

use cubiclines::classifier::{classify, matching_classes};
use cubiclines::comitants::AffineComitants;
use cubiclines::lines::{algebraic_multiplicity, extract_configuration, is_invariant_line, Line};
use cubiclines::poly::{factor, gcd, subresultant, transvectant, AffineMap, MPoly, Monomial, QuadExt, Rational, Var};
use cubiclines::rootstructure::{c3_structure_from_comitants, sign_class, SignClass};
use cubiclines::{ComitantTable, CubicSystem};
use num_traits::Zero;
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn small() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |r| !r.is_zero())
}

fn binary_form(d: u32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(small(), d as usize + 1).prop_map(move |cs| {
        MPoly::from_terms(cs.into_iter().enumerate().map(|(i, c)| {
            let i = i as u32;
            (Monomial::var(Var::X, d - i).mul(&Monomial::var(Var::Y, i)), c)
        }))
    })
}

fn univariate(d: usize) -> impl Strategy<Value = MPoly> {
    (prop::collection::vec(-5i64..=5, d), prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3])).prop_map(
        |(lower, lead)| {
            let mut f = MPoly::term(Monomial::var(Var::X, lower.len() as u32), q(lead));
            for (i, c) in lower.into_iter().enumerate() {
                f.add_term(Monomial::var(Var::X, i as u32), q(c));
            }
            f
        },
    )
}

fn system() -> impl Strategy<Value = CubicSystem> {
    prop::array::uniform20(-4i64..=4)
        .prop_filter_map("cubic", |l| CubicSystem::from_letters(&l.map(q)).ok())
}

fn affine_map() -> impl Strategy<Value = AffineMap> {
    (
        prop::array::uniform4(-3i64..=3),
        small(),
        small(),
        prop::sample::select(vec![q(1), q(-1), q(2), q(-2), Rational::new(1.into(), 2.into()), q(3)]),
    )
        .prop_filter_map("invertible", |(m, x0, y0, tau)| {
            AffineMap::new([[q(m[0]), q(m[1])], [q(m[2]), q(m[3])]], [x0, y0], tau).ok()
        })
}

// products of elementary shears and a sign flip: integer matrices of determinant ±1
fn unimodular() -> impl Strategy<Value = [[i64; 2]; 2]> {
    (prop::collection::vec((any::<bool>(), -3i64..=3), 1..5), any::<bool>()).prop_map(|(steps, flip)| {
        let mut m = [[1i64, 0], [0, if flip { -1 } else { 1 }]];
        for (lower, k) in steps {
            let e = if lower { [[1, 0], [k, 1]] } else { [[1, k], [0, 1]] };
            m = [
                [m[0][0] * e[0][0] + m[0][1] * e[1][0], m[0][0] * e[0][1] + m[0][1] * e[1][1]],
                [m[1][0] * e[0][0] + m[1][1] * e[1][0], m[1][0] * e[0][1] + m[1][1] * e[1][1]],
            ];
        }
        m
    })
}

fn linear_subst(f: &MPoly, m: [[i64; 2]; 2]) -> MPoly {
    let (x, y) = (MPoly::var(Var::X), MPoly::var(Var::Y));
    let nx = &x.scale(&q(m[0][0])) + &y.scale(&q(m[0][1]));
    let ny = &x.scale(&q(m[1][0])) + &y.scale(&q(m[1][1]));
    f.subst(&[(Var::X, nx), (Var::Y, ny)])
}

fn has_rational_root(f: &MPoly) -> bool {
    fn divisors(n: i64) -> Vec<i64> {
        let n = n.abs();
        (1..=n).filter(|d| n % d == 0).collect()
    }
    let d = f.degree_in(Var::X);
    let coeff = |i: u32| f.coeff(&Monomial::var(Var::X, i));
    let to_i64 = |r: Rational| -> i64 { r.to_integer().try_into().expect("small coefficients") };
    if coeff(0).is_zero() {
        return true;
    }
    let (a0, an) = (to_i64(coeff(0)), to_i64(coeff(d)));
    divisors(a0).into_iter().any(|p| {
        divisors(an).into_iter().any(|r| {
            [p, -p].into_iter().any(|p| f.eval(&[(Var::X, Rational::new(p.into(), r.into()))]).is_zero())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transvectant_is_symmetric_up_to_sign(
        (f, g) in (0u32..=4, 0u32..=4).prop_flat_map(|(m, n)| (binary_form(m), binary_form(n))),
        k in 0u32..=4,
    ) {
        let fg = transvectant(&f, &g, k);
        let gf = transvectant(&g, &f, k);
        prop_assert_eq!(&fg, &(if k % 2 == 0 { gf } else { -gf }));
        if !fg.is_zero() {
            prop_assert!(fg.is_homogeneous());
            prop_assert_eq!(fg.degree() + 2 * k, f.degree() + g.degree());
        }
    }

    #[test]
    fn subresultants_vanish_below_the_planted_gcd(
        h in (1usize..=3).prop_flat_map(univariate),
        a in (1usize..=3).prop_flat_map(univariate),
        b in (1usize..=3).prop_flat_map(univariate),
    ) {
        prop_assume!(gcd(&a, &b).is_constant());
        let k = h.degree() as usize;
        let f = &h * &a;
        let g = &h * &b;
        for j in 0..k {
            prop_assert!(subresultant(&f, &g, Var::X, j).unwrap().is_zero(), "R^({}) should vanish", j);
        }
        prop_assert!(!subresultant(&f, &g, Var::X, k).unwrap().is_zero());
    }

    #[test]
    fn factorization_round_trips(parts in prop::collection::vec((1usize..=3).prop_flat_map(univariate), 1..=3), c in nonzero()) {
        let f = parts.iter().fold(MPoly::constant(c), |acc, p| &acc * p);
        let fz = factor(&f).unwrap();
        prop_assert_eq!(fz.expand(), f);
        for fac in &fz.factors {
            prop_assert!(fac.exponent >= 1);
            prop_assert_eq!(&fac.poly.normalized(), &fac.poly);
            let d = fac.poly.degree();
            prop_assert!(d >= 1);
            if (2..=3).contains(&d) {
                prop_assert!(!has_rational_root(&fac.poly), "{} is reducible", fac.poly);
            }
        }
    }

    #[test]
    fn c3_is_a_gl_covariant(s in system(), m in unimodular()) {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let map = AffineMap::new([[q(m[0][0]), q(m[0][1])], [q(m[1][0]), q(m[1][1])]], [q(0), q(0)], q(1)).unwrap();
        let t = s.transform(&map).unwrap();
        let (a, b) = (ComitantTable::new(&s), ComitantTable::new(&t));
        prop_assert_eq!(b.c(3), &linear_subst(a.c(3), m).scale(&q(det)));
    }

    #[test]
    fn l1_l2_l3_are_translation_invariant(s in system(), x0 in small(), y0 in small()) {
        let t = s.transform(&AffineMap::translation(x0, y0)).unwrap();
        let (a, b) = (ComitantTable::new(&s), ComitantTable::new(&t));
        for i in 1..=3 {
            prop_assert_eq!(a.l(i), b.l(i), "L{}", i);
        }
    }

    #[test]
    fn n1_does_not_see_translations_on_the_diagonal_family(
        a in small(), b in small(), c in small(), x0 in small(), y0 in small()
    ) {
        let p = format!("({a}) + ({c})*x + x^3");
        let qq = format!("({b}) + ({c})*y + y^3");
        let s = CubicSystem::parse(&p, &qq).unwrap();
        let t = s.transform(&AffineMap::translation(x0, y0)).unwrap();
        let (ta, tb) = (ComitantTable::new(&s), ComitantTable::new(&t));
        prop_assert_eq!(ta.n(1), tb.n(1));
    }

    #[test]
    fn sign_class_is_gl_invariant_on_definite_forms(
        quads in prop::collection::vec((1i64..=4, -3i64..=3, 1i64..=4), 1..=2),
        neg in any::<bool>(),
        m in prop::array::uniform4(-3i64..=3),
    ) {
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let mut f = MPoly::int(if neg { -1 } else { 1 });
        for (a, b, c) in quads {
            prop_assume!(b * b < 4 * a * c);
            f = &f * &cubiclines::poly::parse(&format!("{a}x^2 + ({b})x*y + {c}y^2")).unwrap();
        }
        let sc = sign_class(&f);
        prop_assert_eq!(sc, if neg { SignClass::NegativeDefinite } else { SignClass::PositiveDefinite });
        prop_assert_eq!(sign_class(&linear_subst(&f, [[m[0], m[1]], [m[2], m[3]]])), sc);
    }

    #[test]
    fn forms_with_a_rational_root_are_never_definite(l in binary_form(1), g in (0u32..=2).prop_flat_map(|d| binary_form(2 * d + 1))) {
        prop_assume!(!l.is_zero() && !g.is_zero());
        let f = &l * &g;
        prop_assert!(factor(&f).unwrap().factors.iter().any(|fac| fac.poly.degree() == 1));
        prop_assert!(!matches!(sign_class(&f), SignClass::PositiveDefinite | SignClass::NegativeDefinite));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn h_divides_every_g(s in system()) {
        prop_assume!(!s.is_degenerate());
        let Ok(a) = AffineComitants::new(&s) else { return Ok(()) };
        for i in 1..=3 {
            prop_assert!(a.cofactor(i).is_ok(), "H does not divide G{}", i);
        }
        prop_assert!(a.h.degree() <= 8);
    }

    // x = α and y = β are planted; whatever else appears must be consistent too
    #[test]
    fn extracted_lines_are_invariant_with_their_multiplicity(
        al in small(), be in small(),
        a in prop::array::uniform6(-3i64..=3), b in prop::array::uniform6(-3i64..=3),
        map in affine_map(),
    ) {
        let quad = |c: [i64; 6]| format!("({})*x^2 + ({})*x*y + ({})*y^2 + ({})*x + ({})*y + ({})", c[0], c[1], c[2], c[3], c[4], c[5]);
        let p = format!("(x - ({al}))*({})", quad(a));
        let qq = format!("(y - ({be}))*({})", quad(b));
        let Ok(s) = CubicSystem::parse(&p, &qq) else { return Ok(()) };
        prop_assume!(!s.is_degenerate() && !ComitantTable::new(&s).c(3).is_zero());
        let s = s.transform(&map).unwrap();
        let c = extract_configuration(&s).unwrap();
        prop_assert!(c.total_multiplicity <= 9);
        let h = c.h.subst(&[(Var::PZ, MPoly::one())]).rename(&[(Var::PX, Var::X), (Var::PY, Var::Y)]);
        let keys: Vec<_> = c.expanded_lines().iter().map(|l| (l.u.clone(), l.v.clone(), l.w.clone())).collect();
        for l in c.expanded_lines() {
            prop_assert!(is_invariant_line(&s, &l).unwrap().is_some(), "{} not invariant", l.equation());
            prop_assert_eq!(algebraic_multiplicity(&s, &l).unwrap(), l.multiplicity);
            let conj = l.conj();
            prop_assert!(keys.contains(&(conj.u.clone(), conj.v.clone(), conj.w.clone())));
        }
        for l in &c.lines {
            prop_assert!(h.factor_exponent(&l.defining_factor()) >= l.multiplicity, "{}", l.equation());
        }
        let r = QuadExt::rational;
        for planted in [Line::new(r(q(1)), r(q(0)), r(-al)), Line::new(r(q(0)), r(q(1)), r(-be))] {
            let mapped = planted.unwrap().pullback(&map).unwrap().canonical();
            prop_assert!(keys.contains(&(mapped.u, mapped.v, mapped.w)));
        }
    }

    #[test]
    fn classification_survives_affine_maps(row in 0usize..23, map in affine_map()) {
        let (p, qq) = fixtures::CANONICAL[row];
        let s = CubicSystem::parse(p, qq).unwrap().transform(&map).unwrap();
        let v = classify(&s).unwrap();
        prop_assert_eq!(v.class(), Some(row as u8 + 1));
        let t = ComitantTable::new(&s);
        prop_assert!(t.l(1).is_zero() && t.l(2).is_zero());
    }
}

#[test]
fn condition_sets_are_mutually_exclusive() {
    for (i, (p, qq)) in fixtures::CANONICAL.iter().enumerate() {
        let t = ComitantTable::new(&CubicSystem::parse(p, qq).unwrap());
        let root = c3_structure_from_comitants(&t).unwrap();
        assert_eq!(matching_classes(&t, &root), vec![i as u8 + 1]);
    }
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let mut hits = 0;
    for _ in 0..1000 {
        let l: [Rational; 20] = std::array::from_fn(|_| q(rng.gen_range(-5..=5)));
        let Ok(s) = CubicSystem::from_letters(&l) else { continue };
        let t = ComitantTable::new(&s);
        let Ok(root) = c3_structure_from_comitants(&t) else { continue };
        let m = matching_classes(&t, &root);
        assert!(m.len() <= 1, "{m:?}");
        hits += m.len();
    }
    assert!(hits < 10);
}

#[test]
fn rational_root_helper() {
    assert!(has_rational_root(&cubiclines::poly::parse("2x^2 - 3x + 1").unwrap()));
    assert!(!has_rational_root(&cubiclines::poly::parse("x^2 + 1").unwrap()));
}
