use super::{MPoly, PolyError, Var};

/// Determinant of a square matrix of polynomials.
pub fn determinant(m: Vec<Vec<MPoly>>) -> MPoly {
    if m.len() <= 12 {
        expansion_determinant(&m)
    } else {
        bareiss_determinant(m)
    }
}

/// Division-free expansion by rows, summing over sets of used columns; cheap
/// for the small sparse Sylvester matrices that occur here.
fn expansion_determinant(m: &[Vec<MPoly>]) -> MPoly {
    use std::collections::BTreeMap;
    let mut acc: BTreeMap<u32, MPoly> = BTreeMap::from([(0, MPoly::one())]);
    for row in m {
        let mut next: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (mask, val) in &acc {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() || mask & (1 << j) != 0 {
                    continue;
                }
                let mut term = val * e;
                if (mask >> (j + 1)).count_ones() % 2 == 1 {
                    term = -term;
                }
                let slot = next.entry(mask | (1 << j)).or_insert_with(MPoly::zero);
                *slot = &*slot + &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.is_empty() {
            return MPoly::zero();
        }
        acc = next;
    }
    acc.into_values().next().unwrap_or_else(MPoly::zero)
}

/// Fraction-free (Bareiss) elimination.
fn bareiss_determinant(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return MPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step is an exact division");
            }
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// k-th subresultant with explicitly given formal degrees: `f` is treated as
/// having degree `n` and `g` degree `m` in `v` (leading coefficients may vanish).
///
/// The matrix has size m+n−2k: m−k shifted rows of f's coefficients (highest
/// first) followed by n−k rows of g's, the latter listed with decreasing shift
/// so the last row starts at column 0.
pub fn subresultant_formal(
    f: &MPoly,
    n: usize,
    g: &MPoly,
    m: usize,
    v: Var,
    k: usize,
) -> Result<MPoly, PolyError> {
    if f.degree_in(v) as usize > n || g.degree_in(v) as usize > m {
        return Err(PolyError::InvalidDegree);
    }
    if k > n.min(m) {
        return Err(PolyError::InvalidIndex);
    }
    let fc = f.coeffs_in(v);
    let gc = g.coeffs_in(v);
    // a_i = coefficient of v^(n-i)
    let a = |i: usize| -> MPoly { fc.get(n - i).cloned().unwrap_or_else(MPoly::zero) };
    let b = |i: usize| -> MPoly { gc.get(m - i).cloned().unwrap_or_else(MPoly::zero) };
    let w = m + n - 2 * k;
    let mut rows = Vec::with_capacity(w);
    for shift in 0..m - k {
        rows.push(
            (0..w)
                .map(|col| {
                    if col >= shift && col - shift <= n {
                        a(col - shift)
                    } else {
                        MPoly::zero()
                    }
                })
                .collect::<Vec<_>>(),
        );
    }
    for shift in (0..n - k).rev() {
        rows.push(
            (0..w)
                .map(|col| {
                    if col >= shift && col - shift <= m {
                        b(col - shift)
                    } else {
                        MPoly::zero()
                    }
                })
                .collect::<Vec<_>>(),
        );
    }
    Ok(determinant(rows))
}

/// k-th subresultant R^(k)_v(f, g) using the actual degrees in `v`.
pub fn subresultant(f: &MPoly, g: &MPoly, v: Var, k: usize) -> Result<MPoly, PolyError> {
    let n = f.degree_in(v) as usize;
    let m = g.degree_in(v) as usize;
    if n == 0 && m == 0 {
        return Err(PolyError::DegenerateResultant);
    }
    subresultant_formal(f, n, g, m, v, k)
}

pub fn resultant(f: &MPoly, g: &MPoly, v: Var) -> Result<MPoly, PolyError> {
    subresultant(f, g, v, 0)
}
