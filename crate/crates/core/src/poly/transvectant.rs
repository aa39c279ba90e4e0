use num_bigint::BigInt;

use super::{MPoly, Rational, Var};

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// The k-th transvectant of f and g in the affine variables x, y:
/// Σ_h (−1)^h C(k,h) ∂^k f/∂x^(k−h)∂y^h · ∂^k g/∂x^h∂y^(k−h).
pub fn transvectant(f: &MPoly, g: &MPoly, k: u32) -> MPoly {
    let mut acc = MPoly::zero();
    for h in 0..=k {
        let df = f.diff_n(Var::X, k - h).diff_n(Var::Y, h);
        if df.is_zero() {
            continue;
        }
        let dg = g.diff_n(Var::X, h).diff_n(Var::Y, k - h);
        if dg.is_zero() {
            continue;
        }
        let mut c = binomial(k, h);
        if h % 2 == 1 {
            c = -c;
        }
        acc += &(&df * &dg).scale(&Rational::from_integer(BigInt::from(c)));
    }
    acc
}
