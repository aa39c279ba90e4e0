use cubiclines::poly::{parse, MPoly, Rational};
use cubiclines::{ComitantTable, CubicSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn quartic(c: [Rational; 5]) -> MPoly {
    let mut f = MPoly::zero();
    for (k, m) in ["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"].iter().enumerate() {
        f = &f + &parse(m).unwrap().scale(&c[k]);
    }
    f
}

// V4 and U2 rebuilt from the 2x2 minors of the 6x2 matrix of cubic-coefficient minors
fn minor_forms(s: &CubicSystem) -> (MPoly, MPoly) {
    let g = |c: char| s.letter(c).unwrap();
    let (p, q, r, ss, t, u, v, w) = (g('p'), g('q'), g('r'), g('s'), g('t'), g('u'), g('v'), g('w'));
    let m = [[q.clone(), &u - &p, -t], [r.clone(), &v - &q, -u], [ss, &w - &r, -v]];
    // columns i,j; rows k,l
    let um = |i: usize, j: usize, k: usize, l: usize| {
        &m[k - 1][i - 1] * &m[l - 1][j - 1] - &m[k - 1][j - 1] * &m[l - 1][i - 1]
    };
    let b = [
        [-um(1, 3, 1, 2), -um(2, 3, 1, 2)],
        [-um(1, 2, 1, 2) - um(1, 3, 1, 3), -um(1, 3, 1, 2) - um(2, 3, 1, 3)],
        [um(1, 2, 1, 2), um(1, 3, 1, 2)],
        [-um(1, 3, 2, 3), -um(2, 3, 2, 3)],
        [um(1, 2, 1, 3) + um(1, 3, 2, 3), um(1, 3, 1, 3) + um(2, 3, 2, 3)],
        [um(1, 2, 2, 3), um(1, 3, 2, 3)],
    ];
    let mm = |i: usize, j: usize| &b[i - 1][0] * &b[j - 1][1] - &b[i - 1][1] * &b[j - 1][0];
    let v4 = quartic([
        mm(1, 2) + mm(1, 3),
        int(3) * mm(1, 4) + mm(1, 5) - mm(2, 3),
        int(3) * (mm(1, 6) + mm(3, 4)),
        mm(2, 6) + int(3) * mm(3, 6) - mm(4, 5),
        mm(4, 6) + mm(5, 6),
    ])
    .scale(&int(1024 * 243));
    let u2 = quartic([
        mm(1, 3),
        mm(1, 4) + mm(1, 5) + mm(2, 3),
        int(2) * mm(1, 6) + mm(2, 5) - mm(3, 4),
        mm(2, 6) + mm(3, 6) + mm(4, 5),
        mm(4, 6),
    ])
    .scale(&int(4096 * 243 * 5));
    (v4, u2)
}

#[test]
fn v4_and_u2_match_minor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..15 {
        let l: [Rational; 20] = std::array::from_fn(|_| int(rng.gen_range(-4..=4)));
        let Ok(s) = CubicSystem::from_letters(&l) else { continue };
        let (v4, u2) = minor_forms(&s);
        let t = ComitantTable::new(&s);
        assert_eq!(t.v(4), &v4);
        assert_eq!(t.u(2), &u2);
    }
}
