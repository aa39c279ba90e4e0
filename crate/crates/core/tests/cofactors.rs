use cubiclines::comitants::AffineComitants;
use cubiclines::poly::{parse, AffineMap, MPoly, Rational};
use cubiclines::CubicSystem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rq(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=3).into())
}

// substitute values for single-letter parameters, then parse
fn inst(tpl: &str, vals: &[(char, &Rational)]) -> MPoly {
    let mut s = String::new();
    for ch in tpl.chars() {
        match vals.iter().find(|(c, _)| *c == ch) {
            Some((_, v)) => s.push_str(&format!("({v})")),
            None => s.push(ch),
        }
    }
    parse(&s).unwrap()
}

fn nondegenerate(p: MPoly, qq: MPoly) -> Option<CubicSystem> {
    CubicSystem::new(p, qq).ok().filter(|s| !s.is_degenerate())
}

#[test]
fn cofactors_of_the_diagonal_cubic_family() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut done = 0;
    while done < 10 {
        let (a, b, c, f) = (rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng));
        let v = [('a', &a), ('b', &b), ('c', &c), ('f', &f)];
        let Some(s) = nondegenerate(inst("a + c*x + x^3", &v), inst("b + f*y", &v)) else { continue };
        let g = AffineComitants::new(&s).unwrap();
        let cubic = inst("a*Z^3 + c*X*Z^2 + X^3", &v);
        assert!(g.h.proportional_to(&(&inst("Z^2*(f*Y + Z*b)", &v) * &cubic)), "H = {}", g.h);
        assert!(g.cofactor(1).unwrap().proportional_to(&inst("3X^2 + (c - f)*Z^2", &v)));
        assert!(g.cofactor(3).unwrap().proportional_to(&cubic.pow(2)));
        done += 1;
    }
}

#[test]
fn cofactors_of_the_family_with_a_triple_on_x() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut done = 0;
    while done < 10 {
        let (a, c, f, m) = (rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng));
        let v = [('a', &a), ('c', &c), ('f', &f), ('m', &m)];
        let Some(s) = nondegenerate(inst("a + c*x + x^3", &v), inst("f*y + 2m*x*y + 3x^2*y", &v)) else { continue };
        let g = AffineComitants::new(&s).unwrap();
        let cubic = inst("a*Z^3 + c*X*Z^2 + X^3", &v);
        assert!(g.h.proportional_to(&(&parse("Y").unwrap() * &cubic)), "H = {}", g.h);
        let t = inst(
            "-6X^4 - 8m*X^3*Z - (3f + 4m^2 + 3c)*X^2*Z^2 - 2(3a + 2f*m)*X*Z^3 - (2a*m + f^2 - c*f)*Z^4",
            &v,
        );
        let s2 = &inst("3a*Z^3 + 2m*f*Z^3 + 4Z^2*m^2*X + 3Z^2*X*f + 3c*X*Z^2 + 12m*X^2*Z + 12X^3", &v) * &cubic;
        assert!(g.cofactor(1).unwrap().proportional_to(&t));
        assert!(g.cofactor(2).unwrap().proportional_to(&s2));
        done += 1;
    }
}

#[test]
fn pure_cubes_put_both_axes_into_h() {
    let s = CubicSystem::parse("x^3", "y^3").unwrap();
    let h = AffineComitants::new(&s).unwrap().h;
    for axis in ["X^3", "Y^3"] {
        assert!(parse(axis).unwrap().divides(&h), "{axis} does not divide {h}");
    }
}

#[test]
fn homothety_with_time_rescaling_keeps_the_cubic_part() {
    // x = 2 x1, y = 2 y1, t = t1 / 4
    let map = AffineMap::new([[q(2), q(0)], [q(0), q(2)]], [q(0), q(0)], Rational::new(1.into(), 4.into())).unwrap();
    let s = CubicSystem::parse("3 + 5x - y + 2x^2 - x*y + 7x^3 - y^3", "-1 + y + 4y^2 + x^2*y - 2x*y^2").unwrap();
    let t = s.transform(&map).unwrap();
    let halves = [q(1) / q(8), q(1) / q(4), q(1) / q(2), q(1)];
    for i in 0..=3u32 {
        assert_eq!(t.p_i(i), s.p_i(i).scale(&halves[i as usize]), "degree {i} of p");
        assert_eq!(t.q_i(i), s.q_i(i).scale(&halves[i as usize]), "degree {i} of q");
    }
}

#[test]
fn shear_sends_the_binomial_cubic_part_to_pure_cubes() {
    // x1 = x - y, y1 = y, i.e. x = x1 + y1
    let map = AffineMap::new([[q(1), q(1)], [q(0), q(1)]], [q(0), q(0)], q(1)).unwrap();
    let s = CubicSystem::parse("1 - x + x*y + x^3 - 3x^2*y + 3x*y^2", "2 + y - x^2 + y^3").unwrap();
    let t = s.transform(&map).unwrap();
    assert_eq!(t.p_i(3), parse("x^3").unwrap());
    assert_eq!(t.q_i(3), parse("y^3").unwrap());
}
