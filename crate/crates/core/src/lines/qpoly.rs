use crate::error::Error;
use crate::poly::{MPoly, QuadExt, Var};

/// Dense polynomial in x, y over a quadratic field: `c[i][j]` is the
/// coefficient of xⁱyʲ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    c: Vec<Vec<QuadExt>>,
}

impl QPoly {
    pub fn zero(deg: usize) -> Self {
        QPoly { c: vec![vec![QuadExt::zero(); deg + 1]; deg + 1] }
    }

    pub fn from_mpoly(f: &MPoly) -> Self {
        let deg = f.degree() as usize;
        let mut out = Self::zero(deg);
        for (m, c) in f.terms() {
            out.c[m.exp(Var::X) as usize][m.exp(Var::Y) as usize] = QuadExt::rational(c.clone());
        }
        out
    }

    pub fn linear(u: &QuadExt, v: &QuadExt, w: &QuadExt) -> Self {
        let mut out = Self::zero(1);
        out.c[1][0] = u.clone();
        out.c[0][1] = v.clone();
        out.c[0][0] = w.clone();
        out
    }

    fn size(&self) -> usize {
        self.c.len()
    }

    pub fn coeff(&self, i: usize, j: usize) -> QuadExt {
        self.c.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(QuadExt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().flatten().all(QuadExt::is_zero)
    }

    pub fn scale(&self, k: &QuadExt) -> Result<Self, Error> {
        let mut out = self.clone();
        for e in out.c.iter_mut().flatten() {
            *e = e.mul(k)?;
        }
        Ok(out)
    }

    pub fn add(&self, o: &QPoly) -> Result<Self, Error> {
        let n = self.size().max(o.size());
        let mut out = Self::zero(n - 1);
        for i in 0..n {
            for j in 0..n {
                out.c[i][j] = self.coeff(i, j).add(&o.coeff(i, j))?;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &QPoly) -> Result<Self, Error> {
        let mut out = Self::zero(self.size() + o.size() - 2);
        for (i, row) in self.c.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, orow) in o.c.iter().enumerate() {
                    for (l, b) in orow.iter().enumerate() {
                        if !b.is_zero() {
                            out.c[i + k][j + l] = out.c[i + k][j + l].add(&a.mul(b)?)?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn transpose(&self) -> Self {
        let n = self.size();
        let mut out = Self::zero(n - 1);
        for i in 0..n {
            for j in 0..n {
                out.c[j][i] = self.c[i][j].clone();
            }
        }
        out
    }

    /// Divide by u·x + v·y + w; returns (quotient, remainder-is-zero).
    pub fn div_linear(&self, u: &QuadExt, v: &QuadExt, w: &QuadExt) -> Result<(QPoly, bool), Error> {
        if u.is_zero() {
            if v.is_zero() {
                return Err(Error::InternalInconsistency("degenerate linear form".into()));
            }
            let (q, ok) = self.transpose().div_linear(v, u, w)?;
            return Ok((q.transpose(), ok));
        }
        let n = self.size();
        let inv = u.inv()?;
        let mut r = self.c.clone();
        let mut q = Self::zero(n.saturating_sub(2));
        // eliminate the x-degree from the top: r_i(y) = q_{i-1}(y)·u + ...
        for i in (1..n).rev() {
            for j in 0..n {
                let qij = r[i][j].mul(&inv)?;
                if qij.is_zero() {
                    continue;
                }
                r[i][j] = QuadExt::zero();
                // subtract qij·x^(i-1)y^j·(v·y + w) from row i-1
                r[i - 1][j] = r[i - 1][j].sub(&qij.mul(w)?)?;
                if !v.is_zero() {
                    if j + 1 >= n {
                        return Ok((q, false));
                    }
                    r[i - 1][j + 1] = r[i - 1][j + 1].sub(&qij.mul(v)?)?;
                }
                if i - 1 < q.size() && j < q.size() {
                    q.c[i - 1][j] = qij;
                } else {
                    return Ok((q, false));
                }
            }
        }
        let ok = r.iter().flatten().all(QuadExt::is_zero);
        Ok((q, ok))
    }

    /// Human-readable form in x, y.
    pub fn to_string_xy(&self) -> String {
        let mut parts = Vec::new();
        for deg in (0..2 * self.size()).rev() {
            for i in (0..=deg).rev() {
                let j = deg - i;
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    _ => {
                        let p = |v: &str, e: usize| match e {
                            0 => String::new(),
                            1 => v.to_string(),
                            _ => format!("{v}^{e}"),
                        };
                        let mut s = p("x", i);
                        s += &p("y", j);
                        s
                    }
                };
                let cs = if c.is_rational() { format!("{c}") } else { format!("({c})") };
                parts.push(match (mono.is_empty(), cs.as_str()) {
                    (true, _) => cs.clone(),
                    (false, "1") => mono,
                    (false, "-1") => format!("-{mono}"),
                    _ => format!("{cs}*{mono}"),
                });
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}
