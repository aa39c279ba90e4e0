// Second evaluation route for the comitant table: the defining display is
// retyped as text, parsed by a small interpreter, and every transvectant is
// taken with the Omega process on separated variables.
use std::collections::HashMap;

use cubiclines::poly::{MPoly, Rational, Var};
use cubiclines::{ComitantTable, CubicSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// (f, g)^(k): Omega = d/dx1 d/dy2 - d/dy1 d/dx2 applied k times to f(x1,y1) g(x2,y2),
// then x1 = x2 = x, y1 = y2 = y. Copy 1 lives in (PX, PY), copy 2 in (X, Y).
fn omega_transvectant(f: &MPoly, g: &MPoly, k: u32) -> MPoly {
    let mut h = &f.rename(&[(Var::X, Var::PX), (Var::Y, Var::PY)]) * g;
    for _ in 0..k {
        h = &h.diff(Var::PX).diff(Var::Y) - &h.diff(Var::PY).diff(Var::X);
    }
    h.rename(&[(Var::PX, Var::X), (Var::PY, Var::Y)])
}

const DISPLAY: &[(&str, &str)] = &[
    ("T1", "(C0,C1)^(1)"),
    ("T2", "(C0,C2)^(1)"),
    ("T3", "(C0,D2)^(1)"),
    ("T4", "(C0,C3)^(1)"),
    ("T5", "(C0,D3)^(1)"),
    ("T6", "(C1,C1)^(2)"),
    ("T7", "(C1,C2)^(1)"),
    ("T8", "(C1,C2)^(2)"),
    ("T9", "(C1,D2)^(1)"),
    ("T10", "(C1,C3)^(1)"),
    ("T11", "(C1,C3)^(2)"),
    ("T12", "(C1,D3)^(1)"),
    ("T13", "(C1,D3)^(2)"),
    ("T14", "(C2,C2)^(2)"),
    ("T15", "(C2,D2)^(1)"),
    ("T16", "(C2,C3)^(1)"),
    ("T17", "(C2,C3)^(2)"),
    ("T18", "(C2,C3)^(3)"),
    ("T19", "(C2,D3)^(1)"),
    ("T20", "(C2,D3)^(2)"),
    ("T21", "(D2,C3)^(1)"),
    ("T22", "(D2,D3)^(1)"),
    ("T23", "(C3,C3)^(2)"),
    ("T24", "(C3,C3)^(4)"),
    ("T25", "(C3,D3)^(1)"),
    ("T26", "(C3,D3)^(2)"),
    ("T27", "(D3,D3)^(2)"),
    ("calD1", "6*T24^3 - ((C3,T23)^(4))^2"),
    ("calD2", "-T23"),
    ("calD3", "(T23,T23)^(2) - 6*C3*(C3,T23)^(4)"),
    ("calD4", "(C3,calD2)^(4)"),
    ("V1", "T23 + 2*D3^2"),
    ("V2", "T26"),
    ("V3", "6*T25 - 3*T23 - 2*D3^2"),
    ("V4", "C3*((C3,T23)^(4) + 36*(D3,T26)^(2))"),
    (
        "L1",
        "9*C2*(T24 + 24*T27) - 12*D3*(T20 + 8*T22) - 12*(T16,D3)^(2) - 3*(T23,C2)^(2) \
         - 16*(T19,C3)^(2) + 12*(5*T20 + 24*T22,C3)^(1)",
    ),
    // D1*T26 enters with +1944 (the sign that vanishes on the maximal systems)
    (
        "L2",
        "32*(13*T19 + 33*T21,D2)^(1) + 84*(9*T11 - 2*T14,D3)^(1) + 8*D2*(12*T22 + 35*T18 - 73*T20) \
         - 448*(T18,C2)^(1) - 56*(T17,C2)^(2) - 63*(T23,C1)^(2) + 756*D3*T13 + 1944*D1*T26 \
         + 112*(T17,D2)^(1) - 378*(T26,C1)^(1) + 9*C1*(48*T27 - 35*T24)",
    ),
    ("L3", "(T23,D3)^(2)*((D2,T22)^(1) - D1*T27)"),
    ("L4", "T25"),
    (
        "N1",
        "4*C2*(27*D1*D3 - 8*D2^2) + 2*C2*(20*T15 - 4*T14 + 39*T12) + 18*C1*(3*T21 - D2*D3) \
         + 54*D3*(3*T4 - T7) - 288*C3*T9 + 54*(T7,C3)^(1) - 567*(T4,C3)^(1) + 135*C0*D3^2",
    ),
    ("N2", "2*C2*D3 - 3*C3*D2"),
    ("N3", "C2*D3 + 3*T16"),
    ("N4", "D2*D3 + 9*T21 - 2*T17"),
    ("N5", "T17 + 2*T19"),
    ("N6", "6*C3*(T12 + 6*T11) - 9*C1*(T23 + T25) - 8*(T16,C2)^(1) - C3*D2^2"),
    (
        "N7",
        "6*C3*(12*T11 - T12 - 6*D1*D3) - 21*C1*T23 - 24*(T16,C2)^(1) + 3*C1*T25 \
         + 4*D2*(T16 + 2*D2*C3 - C2*D3)",
    ),
    ("N8", "D2^2 - 4*D1*D3"),
    ("N9", "C2^2 - 3*C1*C3"),
    ("N10", "2*C2*D1 + 3*T4"),
    ("U1", "T24 - 4*T27"),
    // with -8*T27 and an overall factor 5, matching the minor expansion
    (
        "U2",
        "5*(6*(T23 - 3*T25,T26)^(1) - 3*T23*(T24 - 8*T27) - 24*T26^2 + 2*C3*(C3,T23)^(4) \
         + 24*D3*(D3,T26)^(1) + 24*D3^2*T27)",
    ),
    ("U3", "D3*((C3,T23)^(4) + 36*(D3,T26)^(2))"),
];

struct Eval<'a> {
    src: &'a [u8],
    pos: usize,
    env: &'a HashMap<String, MPoly>,
}

impl Eval<'_> {
    fn skip(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) {
        assert!(self.eat(c), "expected '{}' at {}", c as char, self.pos);
    }

    fn int(&mut self) -> u32 {
        self.skip();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap()
    }

    fn expr(&mut self) -> MPoly {
        let mut acc = self.term();
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term();
            } else if self.eat(b'-') {
                acc = &acc - &self.term();
            } else {
                return acc;
            }
        }
    }

    fn term(&mut self) -> MPoly {
        let mut acc = self.unary();
        while self.eat(b'*') {
            acc = &acc * &self.unary();
        }
        acc
    }

    fn unary(&mut self) -> MPoly {
        if self.eat(b'-') {
            return -self.unary();
        }
        let base = self.atom();
        if self.eat(b'^') {
            let e = self.int();
            return base.pow(e);
        }
        base
    }

    fn atom(&mut self) -> MPoly {
        self.skip();
        let c = self.src[self.pos];
        if c == b'(' {
            self.pos += 1;
            let a = self.expr();
            if !self.eat(b',') {
                self.expect(b')');
                return a;
            }
            let b = self.expr();
            self.expect(b')');
            self.expect(b'^');
            self.expect(b'(');
            let k = self.int();
            self.expect(b')');
            return omega_transvectant(&a, &b, k);
        }
        if c.is_ascii_digit() {
            return MPoly::int(self.int() as i64);
        }
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        self.env.get(name).unwrap_or_else(|| panic!("unbound {name}")).clone()
    }
}

fn evaluate(s: &CubicSystem) -> HashMap<String, MPoly> {
    let (x, y) = (MPoly::var(Var::X), MPoly::var(Var::Y));
    let mut env = HashMap::new();
    for i in 0..=3u32 {
        let (p, q) = (s.p().homogeneous_part(i), s.q().homogeneous_part(i));
        env.insert(format!("C{i}"), &(&y * &p) - &(&x * &q));
        if i > 0 {
            env.insert(format!("D{i}"), &p.diff(Var::X) + &q.diff(Var::Y));
        }
    }
    for (name, text) in DISPLAY {
        let mut ev = Eval { src: text.as_bytes(), pos: 0, env: &env };
        let v = ev.expr();
        ev.skip();
        assert_eq!(ev.pos, text.len(), "trailing input in {name}");
        env.insert(name.to_string(), v);
    }
    env
}

#[test]
fn omega_process_matches_library_transvectant() {
    let f = cubiclines::poly::parse("3x^3 - x^2*y + 5y^3").unwrap();
    let g = cubiclines::poly::parse("x^2 - 7x*y + 2y^2").unwrap();
    for k in 0..=3 {
        assert_eq!(omega_transvectant(&f, &g, k), cubiclines::poly::transvectant(&f, &g, k));
    }
}

#[test]
fn display_evaluates_to_the_table() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 20 {
        let l: [Rational; 20] =
            std::array::from_fn(|_| Rational::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=3).into()));
        let Ok(s) = CubicSystem::from_letters(&l) else { continue };
        let env = evaluate(&s);
        let t = ComitantTable::new(&s);
        for (name, _) in DISPLAY {
            assert_eq!(t.get(name), env.get(*name), "{name} differs");
        }
        done += 1;
    }
}
