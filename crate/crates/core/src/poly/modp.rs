//! Dense polynomials over a prime field F_p (p odd, below 2^31).

use rand::Rng;

pub type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        Fp { p }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut f: PolyP) -> PolyP {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn deg(f: &PolyP) -> isize {
        f.len() as isize - 1
    }

    pub fn poly_sub(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(r)
    }

    pub fn poly_mul(&self, a: &PolyP, b: &PolyP) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % self.p;
            }
        }
        self.trim(r)
    }

    pub fn scale(&self, a: &PolyP, k: u64) -> PolyP {
        self.trim(a.iter().map(|&x| self.mul(x, k)).collect())
    }

    pub fn monic(&self, a: &PolyP) -> PolyP {
        match a.last() {
            None => vec![],
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn divrem(&self, a: &PolyP, d: &PolyP) -> (PolyP, PolyP) {
        assert!(!d.is_empty());
        if a.len() < d.len() {
            return (vec![], a.clone());
        }
        let mut r = a.clone();
        let dd = d.len() - 1;
        let inv = self.inv(d[dd]);
        let mut q = vec![0u64; a.len() - dd];
        for i in (0..q.len()).rev() {
            let t = self.mul(r[i + dd], inv);
            if t != 0 {
                for (j, &c) in d.iter().enumerate() {
                    r[i + j] = self.sub(r[i + j], self.mul(t, c));
                }
            }
            q[i] = t;
        }
        r.truncate(dd);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &PolyP, d: &PolyP) -> PolyP {
        self.divrem(a, d).1
    }

    pub fn gcd(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// (g, s, t) with s·a + t·b = g monic.
    pub fn ext_gcd(&self, a: &PolyP, b: &PolyP) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], vec![]);
        let (mut t0, mut t1) = (vec![], vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let k = self.inv(*r0.last().expect("nonzero gcd"));
        (self.scale(&r0, k), self.scale(&s0, k), self.scale(&t0, k))
    }

    pub fn derivative(&self, a: &PolyP) -> PolyP {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn powmod(&self, base: &PolyP, mut e: u128, m: &PolyP) -> PolyP {
        let mut r = vec![1u64];
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                r = self.rem(&self.poly_mul(&r, &b), m);
            }
            b = self.rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        r
    }

    pub fn is_squarefree(&self, f: &PolyP) -> bool {
        Fp::deg(&self.gcd(f, &self.derivative(f))) == 0
    }

    /// Distinct-degree factorisation of a monic squarefree polynomial.
    pub fn ddf(&self, f: &PolyP) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 1;
        while Fp::deg(&f) >= 2 * d as isize {
            h = self.powmod(&h, self.p as u128, &f);
            let g = self.gcd(&self.poly_sub(&h, &x), &f);
            if Fp::deg(&g) > 0 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
            d += 1;
        }
        if Fp::deg(&f) > 0 {
            let n = Fp::deg(&f) as usize;
            out.push((f, n));
        }
        out
    }

    /// Equal-degree splitting (Cantor–Zassenhaus) of a product of degree-d irreducibles.
    pub fn edf<R: Rng>(&self, f: &PolyP, d: usize, rng: &mut R) -> Vec<PolyP> {
        let n = Fp::deg(f) as usize;
        if n == d {
            return vec![f.clone()];
        }
        let e = ((self.p as u128).pow(d as u32) - 1) / 2;
        loop {
            let a: PolyP = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if Fp::deg(&a) < 1 {
                continue;
            }
            let b = self.poly_sub(&self.powmod(&a, e, f), &vec![1]);
            let g = self.gcd(&b, f);
            let k = Fp::deg(&g);
            if k > 0 && (k as usize) < n {
                let h = self.divrem(f, &g).0;
                let mut out = self.edf(&g, d, rng);
                out.extend(self.edf(&self.monic(&h), d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, f: &PolyP, rng: &mut R) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            out.extend(self.edf(&g, d, rng));
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factors_over_f7() {
        let fp = Fp::new(7);
        // x^4 - 1 = (x-1)(x+1)(x^2+1) over F_7 (x^2+1 irreducible mod 7)
        let f = vec![6, 0, 0, 0, 1];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let fs = fp.factor_squarefree(&f, &mut rng);
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(vec![1u64], |a, b| fp.poly_mul(&a, b));
        assert_eq!(prod, f);
    }

    #[test]
    fn ext_gcd_identity() {
        let fp = Fp::new(13);
        let a = vec![1, 0, 1];
        let b = vec![3, 1];
        let (g, s, t) = fp.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        let lhs = fp.poly_sub(&fp.poly_mul(&s, &a), &fp.scale(&fp.poly_mul(&t, &b), 12));
        assert_eq!(lhs, vec![1]);
    }
}
