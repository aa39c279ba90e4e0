use crate::poly::{transvectant as tv, MPoly};

use super::CubicSystem;

fn k(n: i64) -> crate::poly::Rational {
    crate::poly::rat(n)
}

fn lin(terms: &[(i64, &MPoly)]) -> MPoly {
    let mut acc = MPoly::zero();
    for (c, f) in terms {
        acc += &f.scale(&k(*c));
    }
    acc
}

/// Every named comitant of one cubic system, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComitantTable {
    c: [MPoly; 4],
    d: [MPoly; 4],
    t: Vec<MPoly>,
    cal_d: [MPoly; 4],
    v: [MPoly; 4],
    l: [MPoly; 4],
    n: [MPoly; 10],
    u: [MPoly; 3],
}

/// Names in reporting order.
pub const NAMES: &[&str] = &[
    "C0", "C1", "C2", "C3", "D1poly", "D2poly", "D3poly", "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8",
    "T9", "T10", "T11", "T12", "T13", "T14", "T15", "T16", "T17", "T18", "T19", "T20", "T21", "T22", "T23",
    "T24", "T25", "T26", "T27", "calD1", "calD2", "calD3", "calD4", "V1", "V2", "V3", "V4", "L1", "L2",
    "L3", "L4", "N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8", "N9", "N10", "U1", "U2", "U3",
];

impl ComitantTable {
    pub fn new(s: &CubicSystem) -> Self {
        let c: [MPoly; 4] = std::array::from_fn(|i| {
            let i = i as u32;
            &crate::poly::y() * &s.p_i(i) - &crate::poly::x() * &s.q_i(i)
        });
        let d: [MPoly; 4] = std::array::from_fn(|j| {
            if j == 0 {
                MPoly::zero()
            } else {
                let j = j as u32;
                s.p_i(j).diff(crate::poly::Var::X) + s.q_i(j).diff(crate::poly::Var::Y)
            }
        });
        let [c0, c1, c2, c3] = &c;
        let [_, d1, d2, d3] = &d;

        let pairs: [(&MPoly, &MPoly, u32); 27] = [
            (c0, c1, 1),
            (c0, c2, 1),
            (c0, d2, 1),
            (c0, c3, 1),
            (c0, d3, 1),
            (c1, c1, 2),
            (c1, c2, 1),
            (c1, c2, 2),
            (c1, d2, 1),
            (c1, c3, 1),
            (c1, c3, 2),
            (c1, d3, 1),
            (c1, d3, 2),
            (c2, c2, 2),
            (c2, d2, 1),
            (c2, c3, 1),
            (c2, c3, 2),
            (c2, c3, 3),
            (c2, d3, 1),
            (c2, d3, 2),
            (d2, c3, 1),
            (d2, d3, 1),
            (c3, c3, 2),
            (c3, c3, 4),
            (c3, d3, 1),
            (c3, d3, 2),
            (d3, d3, 2),
        ];
        let mut t = vec![MPoly::zero()];
        t.extend(pairs.iter().map(|(f, g, k)| tv(f, g, *k)));

        let c3t23 = tv(c3, &t[23], 4);
        let d3t26 = tv(d3, &t[26], 2);
        let d3sq = d3 * d3;

        let cal_d2 = -&t[23];
        let cal_d = [
            t[24].pow(3).scale(&k(6)) - &c3t23 * &c3t23,
            cal_d2.clone(),
            tv(&t[23], &t[23], 2) - (c3 * &c3t23).scale(&k(6)),
            tv(c3, &cal_d2, 4),
        ];

        let v = [
            &t[23] + &d3sq.scale(&k(2)),
            t[26].clone(),
            lin(&[(6, &t[25]), (-3, &t[23]), (-2, &d3sq)]),
            c3 * &(&c3t23 + &d3t26.scale(&k(36))),
        ];

        let l1 = lin(&[
            (9, &(c2 * &lin(&[(1, &t[24]), (24, &t[27])]))),
            (-12, &(d3 * &lin(&[(1, &t[20]), (8, &t[22])]))),
            (-12, &tv(&t[16], d3, 2)),
            (-3, &tv(&t[23], c2, 2)),
            (-16, &tv(&t[19], c3, 2)),
            (12, &tv(&lin(&[(5, &t[20]), (24, &t[22])]), c3, 1)),
        ]);
        let l2 = lin(&[
            (32, &tv(&lin(&[(13, &t[19]), (33, &t[21])]), d2, 1)),
            (84, &tv(&lin(&[(9, &t[11]), (-2, &t[14])]), d3, 1)),
            (8, &(d2 * &lin(&[(12, &t[22]), (35, &t[18]), (-73, &t[20])]))),
            (-448, &tv(&t[18], c2, 1)),
            (-56, &tv(&t[17], c2, 2)),
            (-63, &tv(&t[23], c1, 2)),
            (756, &(d3 * &t[13])),
            // +1944: with −1944, L2 fails to vanish on the canonical maximal systems
            (1944, &(d1 * &t[26])),
            (112, &tv(&t[17], d2, 1)),
            (-378, &tv(&t[26], c1, 1)),
            (9, &(c1 * &lin(&[(48, &t[27]), (-35, &t[24])]))),
        ]);
        let l3 = &tv(&t[23], d3, 2) * &(tv(d2, &t[22], 1) - d1 * &t[27]);
        let l = [l1, l2, l3, t[25].clone()];

        let t16c2 = tv(&t[16], c2, 1);
        let n = [
            lin(&[
                (4, &(c2 * &lin(&[(27, &(d1 * d3)), (-8, &(d2 * d2))]))),
                (2, &(c2 * &lin(&[(20, &t[15]), (-4, &t[14]), (39, &t[12])]))),
                (18, &(c1 * &(t[21].scale(&k(3)) - d2 * d3))),
                (54, &(d3 * &(t[4].scale(&k(3)) - &t[7]))),
                (-288, &(c3 * &t[9])),
                (54, &tv(&t[7], c3, 1)),
                (-567, &tv(&t[4], c3, 1)),
                (135, &(c0 * &d3sq)),
            ]),
            lin(&[(2, &(c2 * d3)), (-3, &(c3 * d2))]),
            &(c2 * d3) + &t[16].scale(&k(3)),
            lin(&[(1, &(d2 * d3)), (9, &t[21]), (-2, &t[17])]),
            lin(&[(1, &t[17]), (2, &t[19])]),
            lin(&[
                (6, &(c3 * &lin(&[(1, &t[12]), (6, &t[11])]))),
                (-9, &(c1 * &(&t[23] + &t[25]))),
                (-8, &t16c2),
                (-1, &(c3 * &(d2 * d2))),
            ]),
            lin(&[
                (6, &(c3 * &lin(&[(12, &t[11]), (-1, &t[12]), (-6, &(d1 * d3))]))),
                (-21, &(c1 * &t[23])),
                (-24, &t16c2),
                (3, &(c1 * &t[25])),
                (4, &(d2 * &lin(&[(1, &t[16]), (2, &(d2 * c3)), (-1, &(c2 * d3))]))),
            ]),
            lin(&[(1, &(d2 * d2)), (-4, &(d1 * d3))]),
            lin(&[(1, &(c2 * c2)), (-3, &(c1 * c3))]),
            lin(&[(2, &(c2 * d1)), (3, &t[4])]),
        ];

        let u = [
            lin(&[(1, &t[24]), (-4, &t[27])]),
            // scaled by 5 so that U2 matches the minor expansion and V4 = −U2/20
            lin(&[
                (30, &tv(&lin(&[(1, &t[23]), (-3, &t[25])]), &t[26], 1)),
                // −8·T27: with +8·T27, U2 fails to vanish on systems with a triple line
                (-15, &(&t[23] * &lin(&[(1, &t[24]), (-8, &t[27])]))),
                (-120, &(&t[26] * &t[26])),
                (10, &(c3 * &c3t23)),
                (120, &(d3 * &tv(d3, &t[26], 1))),
                (120, &(&d3sq * &t[27])),
            ]),
            d3 * &(&c3t23 + &d3t26.scale(&k(36))),
        ];

        ComitantTable { c, d, t, cal_d, v, l, n, u }
    }

    /// C_i, i = 0..3.
    pub fn c(&self, i: usize) -> &MPoly {
        &self.c[i]
    }

    /// The trace comitant D_j = ∂p_j/∂x + ∂q_j/∂y, j = 1..3.
    pub fn d(&self, j: usize) -> &MPoly {
        assert!((1..=3).contains(&j));
        &self.d[j]
    }

    pub fn t(&self, i: usize) -> &MPoly {
        assert!((1..=27).contains(&i));
        &self.t[i]
    }

    /// The root-structure invariants 𝒟₁..𝒟₄ (𝒟₁, 𝒟₄ scalars; 𝒟₂, 𝒟₃ forms).
    pub fn cal_d(&self, i: usize) -> &MPoly {
        &self.cal_d[i - 1]
    }

    pub fn v(&self, i: usize) -> &MPoly {
        &self.v[i - 1]
    }

    pub fn l(&self, i: usize) -> &MPoly {
        &self.l[i - 1]
    }

    pub fn n(&self, i: usize) -> &MPoly {
        &self.n[i - 1]
    }

    pub fn u(&self, i: usize) -> &MPoly {
        &self.u[i - 1]
    }

    pub fn get(&self, name: &str) -> Option<&MPoly> {
        let idx = |prefix: &str, lo: usize, hi: usize| -> Option<usize> {
            let i: usize = name.strip_prefix(prefix)?.parse().ok()?;
            (lo..=hi).contains(&i).then_some(i)
        };
        if let Some(j) = name.strip_suffix("poly").and_then(|s| s.strip_prefix('D')) {
            let j: usize = j.parse().ok()?;
            return (1..=3).contains(&j).then(|| self.d(j));
        }
        if let Some(i) = idx("calD", 1, 4) {
            return Some(self.cal_d(i));
        }
        let first = name.chars().next()?;
        match first {
            'C' => idx("C", 0, 3).map(|i| self.c(i)),
            'T' => idx("T", 1, 27).map(|i| self.t(i)),
            'V' => idx("V", 1, 4).map(|i| self.v(i)),
            'L' => idx("L", 1, 4).map(|i| self.l(i)),
            'N' => idx("N", 1, 10).map(|i| self.n(i)),
            'U' => idx("U", 1, 3).map(|i| self.u(i)),
            _ => None,
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&'static str, &MPoly)> {
        NAMES.iter().map(move |n| (*n, self.get(n).expect("listed name")))
    }

    pub fn gauge(&self) -> Vec<GaugeEntry> {
        self.entries()
            .map(|(name, f)| GaugeEntry {
                name,
                coeff_degree: coefficient_degree(name),
                xy_degree: (!f.is_zero()).then(|| f.degree()),
                zero: f.is_zero(),
            })
            .collect()
    }
}

/// Per-comitant metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeEntry {
    pub name: &'static str,
    pub coeff_degree: Option<u32>,
    pub xy_degree: Option<u32>,
    pub zero: bool,
}

/// Degree in the system's coefficients of each named comitant.
pub fn coefficient_degree(name: &str) -> Option<u32> {
    Some(match name {
        "C0" | "C1" | "C2" | "C3" | "D1poly" | "D2poly" | "D3poly" => 1,
        n if n.starts_with('T') => 2,
        "calD1" => 6,
        "calD2" => 2,
        "calD3" => 4,
        "calD4" => 3,
        "V1" | "V2" | "V3" => 2,
        "V4" => 4,
        "L1" | "L2" => 3,
        "L3" => 6,
        "L4" => 2,
        "N1" | "N6" | "N7" => 3,
        "N2" | "N3" | "N4" | "N5" | "N8" | "N9" | "N10" => 2,
        "U1" => 2,
        "U2" | "U3" => 4,
        "G1" => 3,
        "G2" => 4,
        "G3" => 5,
        _ => return None,
    })
}
