//! Reference implementations used as oracles. Nothing here calls into the
//! library's own polynomial or curve code.

#![allow(dead_code)]

use ceresa_core::Rat;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

pub fn r(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Rational with numerator in `[-num, num]` and denominator in `[1, den]`.
pub fn rand_rat<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rat {
    q(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Affine point or `None` for the point at infinity.
pub type Pt = Option<(Rat, Rat)>;

/// Textbook chord-and-tangent law on `y² = x³ + Ax + B`.
pub struct Ell {
    pub a: Rat,
    pub b: Rat,
}

impl Ell {
    pub fn new(a: Rat, b: Rat) -> Self {
        Ell { a, b }
    }

    pub fn on_curve(&self, p: &Pt) -> bool {
        match p {
            None => true,
            Some((x, y)) => y * y == x * x * x + &self.a * x + &self.b,
        }
    }

    pub fn add(&self, p: &Pt, q: &Pt) -> Pt {
        let (Some((x1, y1)), Some((x2, y2))) = (p, q) else {
            return p.clone().or_else(|| q.clone());
        };
        let lam = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return None;
            }
            (r(3) * x1 * x1 + &self.a) / (r(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lam * &lam - x1 - x2;
        let y3 = lam * (x1 - &x3) - y1;
        Some((x3, y3))
    }

    /// `nP` by repeated addition.
    pub fn mul(&self, n: u32, p: &Pt) -> Pt {
        let mut acc = None;
        for _ in 0..n {
            acc = self.add(&acc, p);
        }
        acc
    }

    /// Smallest `n ≤ bound` with `nP = O`.
    pub fn order_upto(&self, p: &Pt, bound: u32) -> Option<u32> {
        let mut acc = p.clone();
        for n in 1..=bound {
            if acc.is_none() {
                return Some(n);
            }
            acc = self.add(&acc, p);
        }
        None
    }
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut acc = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            acc = -acc;
        }
        let p = m[col][col].clone();
        acc *= &p;
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            let f = &row[col] / &p;
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(pivot_row).skip(col) {
                *x -= &f * y;
            }
        }
    }
    acc
}

/// Sylvester matrix of two polynomials given high-degree-first.
pub fn sylvester(f: &[Rat], g: &[Rat]) -> Vec<Vec<Rat>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![Rat::zero(); size];
        for (k, c) in f.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Rat::zero(); size];
        for (k, c) in g.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `disc(x⁴ + ax² + bx + c)` as `Res(f, f')` from the Sylvester determinant,
/// with sign `(−1)^{4·3/2} = 1`.
pub fn sylvester_disc(a: &Rat, b: &Rat, c: &Rat) -> Rat {
    let f = [r(1), r(0), a.clone(), b.clone(), c.clone()];
    let df = [r(4), r(0), r(2) * a, b.clone()];
    det(sylvester(&f, &df))
}

/// Integral points of `y² = x³ + B` (integral `B`) allowed by Nagell–Lutz:
/// `y = 0` or `y² | 27B²`.
pub fn nagell_lutz_candidates(b: i64) -> Vec<(i64, i64)> {
    let bound = 27 * (b as i128) * (b as i128);
    let mut out = Vec::new();
    let mut y: i128 = 0;
    while y * y <= bound {
        if y == 0 || bound % (y * y) == 0 {
            let rhs = y * y - b as i128;
            if let Some(x) = icbrt(rhs) {
                out.push((x as i64, y as i64));
                if y != 0 {
                    out.push((x as i64, -(y as i64)));
                }
            }
        }
        y += 1;
    }
    out.sort();
    out
}

fn icbrt(v: i128) -> Option<i128> {
    let neg = v < 0;
    let a = v.unsigned_abs();
    let mut x = (a as f64).cbrt().round() as i128;
    for cand in [x - 1, x, x + 1] {
        if cand >= 0 && (cand * cand * cand) as u128 == a {
            x = cand;
            return Some(if neg { -x } else { x });
        }
    }
    None
}

/// Rational roots of an integer polynomial (high-degree-first) by the
/// rational root theorem.
pub fn int_poly_rational_roots(coeffs: &[i64]) -> Vec<Rat> {
    let mut cs: Vec<i64> = coeffs.to_vec();
    let mut roots = Vec::new();
    while cs.last() == Some(&0) {
        cs.pop();
        if !roots.contains(&Rat::zero()) {
            roots.push(Rat::zero());
        }
    }
    let lead = cs[0].abs();
    let tail = cs[cs.len() - 1].abs();
    let divs = |n: i64| (1..=n).filter(move |d| n % d == 0);
    for p in divs(tail) {
        for qd in divs(lead) {
            for s in [1, -1] {
                let x = q(s * p, qd);
                let mut acc = Rat::zero();
                for c in &cs {
                    acc = acc * &x + r(*c);
                }
                if acc.is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Number of index triples `i < j < k` with `eᵢ + eⱼ + e_k ≡ 0 (mod L)`.
pub fn brute_triples(exps: &[i64], level: i64) -> u64 {
    let n = exps.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if (exps[i] + exps[j] + exps[k]).rem_euclid(level) == 0 {
                    count += 1;
                }
            }
        }
    }
    count
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
