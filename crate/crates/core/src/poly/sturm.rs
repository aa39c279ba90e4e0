use num_traits::{One, Signed, Zero};

use super::{Rational, UPoly};

/// Isolating interval of a real root: the exact root when `lo == hi`, otherwise
/// the open interval (lo, hi) containing exactly one root, with f(lo), f(hi) ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }
}

pub fn sturm_sequence(f: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![f.clone()];
    if f.degree() <= 0 {
        return seq;
    }
    seq.push(f.derivative());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rational::one()));
    }
    seq
}

fn sign_changes<I: IntoIterator<Item = Rational>>(vals: I) -> usize {
    let mut prev = 0i8;
    let mut n = 0;
    for v in vals {
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if prev != 0 && s != prev {
                n += 1;
            }
            prev = s;
        }
    }
    n
}

fn changes_at(seq: &[UPoly], x: &Rational) -> usize {
    sign_changes(seq.iter().map(|p| p.eval(x)))
}

fn changes_at_infinity(seq: &[UPoly], positive: bool) -> usize {
    sign_changes(seq.iter().map(|p| {
        let lc = p.lc();
        if !positive && p.degree() % 2 == 1 {
            -lc
        } else {
            lc
        }
    }))
}

fn squarefree_part(f: &UPoly) -> UPoly {
    let g = f.gcd(&f.derivative());
    if g.degree() <= 0 {
        f.clone()
    } else {
        f.exact_div(&g).expect("gcd divides")
    }
}

/// Number of distinct real roots.
pub fn real_root_count(f: &UPoly) -> usize {
    if f.degree() <= 0 {
        return 0;
    }
    let seq = sturm_sequence(&squarefree_part(f));
    changes_at_infinity(&seq, false) - changes_at_infinity(&seq, true)
}

fn cauchy_bound(f: &UPoly) -> Rational {
    let lc = f.lc().abs();
    let m = f
        .coeffs()
        .iter()
        .take(f.coeffs().len() - 1)
        .map(|a| a.abs() / &lc)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

/// Sorted isolating intervals for the distinct real roots of `f`.
pub fn real_root_intervals(f: &UPoly) -> Vec<RootInterval> {
    if f.degree() <= 0 {
        return vec![];
    }
    let g = squarefree_part(f);
    let seq = sturm_sequence(&g);
    let b = cauchy_bound(&g);
    let mut out = Vec::new();
    let lo = -b.clone();
    let n = changes_at(&seq, &lo) - changes_at(&seq, &b);
    isolate(&g, &seq, lo, b, n, &mut out);
    out
}

// Roots of g in the open interval (lo, hi); `count` is known in advance.
fn isolate(g: &UPoly, seq: &[UPoly], lo: Rational, hi: Rational, count: usize, out: &mut Vec<RootInterval>) {
    if count == 0 {
        return;
    }
    if count == 1 {
        // keep endpoints off the roots so neighbouring arcs have interior points
        let (mut lo, mut hi) = (lo, hi);
        while g.eval(&lo).is_zero() || g.eval(&hi).is_zero() {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            if g.eval(&mid).is_zero() {
                out.push(RootInterval { lo: mid.clone(), hi: mid });
                return;
            }
            if changes_at(seq, &lo) - changes_at(seq, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(RootInterval { lo, hi });
        return;
    }
    let mid = (&lo + &hi) / Rational::from_integer(2.into());
    let vlo = changes_at(seq, &lo);
    let vmid = changes_at(seq, &mid);
    // V(a) − V(b) counts the roots in (a, b]; hi may itself be a root
    let vhi = changes_at(seq, &hi) + usize::from(g.eval(&hi).is_zero());
    if g.eval(&mid).is_zero() {
        isolate(g, seq, lo, mid.clone(), vlo - vmid - 1, out);
        out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
        isolate(g, seq, mid, hi, vmid - vhi, out);
    } else {
        isolate(g, seq, lo, mid.clone(), vlo - vmid, out);
        isolate(g, seq, mid, hi, vmid - vhi, out);
    }
}

/// Shrink an isolating interval of a root of `f` below the given width.
pub fn refine(f: &UPoly, iv: &RootInterval, width: &Rational) -> RootInterval {
    let mut iv = iv.clone();
    let two = Rational::from_integer(2.into());
    while !iv.is_exact() && &(&iv.hi - &iv.lo) > width {
        let mid = (&iv.lo + &iv.hi) / &two;
        let fm = f.eval(&mid);
        if fm.is_zero() {
            return RootInterval { lo: mid.clone(), hi: mid };
        }
        let flo = f.eval(&iv.lo);
        if flo.is_positive() == fm.is_positive() {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    iv
}

/// One rational point inside each open arc of ℝ cut out by the real roots.
pub fn arc_samples(f: &UPoly) -> Vec<Rational> {
    let roots = real_root_intervals(f);
    if roots.is_empty() {
        return vec![Rational::zero()];
    }
    let two = Rational::from_integer(2.into());
    let mut pts = vec![&roots[0].lo - Rational::one()];
    for w in roots.windows(2) {
        let (a, b) = (&w[0].hi, &w[1].lo);
        pts.push(if a == b { a.clone() } else { (a + b) / &two });
    }
    pts.push(&roots[roots.len() - 1].hi + Rational::one());
    pts
}
