use num_traits::{One, Zero};

use super::{MPoly, PolyError, Rational, Var};

/// Affine change of coordinates with time rescaling:
/// (x, y)_old = M·(x, y)_new + shift,  t_old = tau·t_new.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub m: [[Rational; 2]; 2],
    pub shift: [Rational; 2],
    pub tau: Rational,
}

impl AffineMap {
    pub fn new(m: [[Rational; 2]; 2], shift: [Rational; 2], tau: Rational) -> Result<Self, PolyError> {
        let map = AffineMap { m, shift, tau };
        if map.det().is_zero() || map.tau.is_zero() {
            return Err(PolyError::SingularTransform);
        }
        Ok(map)
    }

    pub fn identity() -> Self {
        let (o, z) = (Rational::one(), Rational::zero());
        AffineMap {
            m: [[o.clone(), z.clone()], [z.clone(), o.clone()]],
            shift: [z.clone(), z],
            tau: o,
        }
    }

    pub fn translation(x0: Rational, y0: Rational) -> Self {
        AffineMap { shift: [x0, y0], ..Self::identity() }
    }

    pub fn det(&self) -> Rational {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn inverse_linear(&self) -> [[Rational; 2]; 2] {
        let d = self.det();
        [
            [&self.m[1][1] / &d, -&self.m[0][1] / &d],
            [-&self.m[1][0] / &d, &self.m[0][0] / &d],
        ]
    }

    /// Old x and y written in the new coordinates.
    pub fn old_coords(&self) -> (MPoly, MPoly) {
        let (x, y) = (MPoly::var(Var::X), MPoly::var(Var::Y));
        let ox = &(&x.scale(&self.m[0][0]) + &y.scale(&self.m[0][1])) + &MPoly::constant(self.shift[0].clone());
        let oy = &(&x.scale(&self.m[1][0]) + &y.scale(&self.m[1][1])) + &MPoly::constant(self.shift[1].clone());
        (ox, oy)
    }

    /// Pull back a function of the old coordinates: f ↦ f(M·new + shift).
    pub fn pullback(&self, f: &MPoly) -> MPoly {
        let (ox, oy) = self.old_coords();
        f.subst(&[(Var::X, ox), (Var::Y, oy)])
    }

    /// Transform a vector field (P, Q) to the new coordinates and time.
    pub fn transform_field(&self, p: &MPoly, q: &MPoly) -> (MPoly, MPoly) {
        let pp = self.pullback(p);
        let qq = self.pullback(q);
        let inv = self.inverse_linear();
        let np = (&pp.scale(&inv[0][0]) + &qq.scale(&inv[0][1])).scale(&self.tau);
        let nq = (&pp.scale(&inv[1][0]) + &qq.scale(&inv[1][1])).scale(&self.tau);
        (np, nq)
    }

    /// Composition: first `self`, then `other` (coordinates of `other` are newest).
    pub fn then(&self, other: &AffineMap) -> AffineMap {
        let mut m: [[Rational; 2]; 2] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = &self.m[i][0] * &other.m[0][j] + &self.m[i][1] * &other.m[1][j];
            }
        }
        let shift = [
            &self.m[0][0] * &other.shift[0] + &self.m[0][1] * &other.shift[1] + &self.shift[0],
            &self.m[1][0] * &other.shift[0] + &self.m[1][1] * &other.shift[1] + &self.shift[1],
        ];
        AffineMap { m, shift, tau: &self.tau * &other.tau }
    }
}
