//! Short Weierstrass curves `y² = x³ + Ax + B`: chord-tangent group law,
//! torsion decision over `Q`, rational torsion of `j = 0` curves, and the
//! 3-isogeny with kernel `{x = 0}` on `y² = x³ + D`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::Scalar;
use crate::{Point, Rat};

/// Largest order of a rational torsion point over `Q`.
pub const MAZUR_BOUND: u32 = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ECPoint<T> {
    Infinity,
    Affine(T, T),
}

impl<T: Scalar> ECPoint<T> {
    pub fn affine(x: T, y: T) -> Self {
        ECPoint::Affine(x, y)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn neg(&self) -> Self {
        match self {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(x, y) => ECPoint::Affine(x.clone(), -y.clone()),
        }
    }

    pub fn coords(&self) -> Option<(&T, &T)> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine(x, y) => Some((x, y)),
        }
    }
}

impl<T: fmt::Display> fmt::Display for ECPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => f.write_str("O"),
            ECPoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl<T: fmt::Display> fmt::Debug for ECPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `y² = x³ + Ax + B` with `4A³ + 27B² ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve<T> {
    a: T,
    b: T,
}

impl<T: Scalar> WeierstrassCurve<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        let delta = T::int(4) * a.powu(3) + T::int(27) * b.powu(2);
        if delta.is_zero() {
            return Err(Error::Singular("4A³ + 27B² = 0".into()));
        }
        Ok(WeierstrassCurve { a, b })
    }

    /// `y² = x³ + D`
    pub fn j0(d: T) -> Result<Self> {
        Self::new(T::zero(), d)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn contains(&self, p: &ECPoint<T>) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine(x, y) => {
                y.clone() * y.clone() == x.powu(3) + self.a.clone() * x.clone() + self.b.clone()
            }
        }
    }

    fn check(&self, p: &ECPoint<T>) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffCurve)
        }
    }

    pub fn add(&self, p: &ECPoint<T>, q: &ECPoint<T>) -> Result<ECPoint<T>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &ECPoint<T>, q: &ECPoint<T>) -> ECPoint<T> {
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Infinity, _) => return q.clone(),
            (_, ECPoint::Infinity) => return p.clone(),
            (ECPoint::Affine(x1, y1), ECPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if y1.clone() + y2.clone() == T::zero() {
                return ECPoint::Infinity;
            }
            (T::int(3) * x1.powu(2) + self.a.clone()) / (T::int(2) * y1.clone())
        } else {
            (y2.clone() - y1.clone()) / (x2.clone() - x1.clone())
        };
        let x3 = slope.clone() * slope.clone() - x1.clone() - x2.clone();
        let y3 = slope * (x1.clone() - x3.clone()) - y1.clone();
        ECPoint::Affine(x3, y3)
    }

    /// `n·P` by double-and-add.
    pub fn scalar_mul(&self, n: i64, p: &ECPoint<T>) -> Result<ECPoint<T>> {
        self.check(p)?;
        let base = if n < 0 { p.neg() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &pow);
            }
            pow = self.add_unchecked(&pow, &pow);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Least `n ≤ 12` with `n·P = O`, or `None` when no such `n` exists.
    ///
    /// Over `Q` the Mazur bound makes `None` equivalent to infinite order.
    pub fn torsion_order(&self, p: &ECPoint<T>) -> Result<Option<u32>> {
        self.check(p)?;
        let mut q = p.clone();
        for n in 1..=MAZUR_BOUND {
            if q.is_infinity() {
                return Ok(Some(n));
            }
            q = self.add_unchecked(&q, p);
        }
        Ok(None)
    }
}

impl<T: fmt::Display> fmt::Display for WeierstrassCurve<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})x + ({})", self.a, self.b)
    }
}

impl<T: fmt::Display> fmt::Debug for WeierstrassCurve<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The isomorphism `(x, y) ↦ (4x, 4y)` from `y² = 4x³ + D` to
/// `y² = x³ + 16D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledModelMap<T> {
    pub d: T,
}

impl<T: Scalar> DoubledModelMap<T> {
    pub fn apply(&self, p: &ECPoint<T>) -> ECPoint<T> {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(x, y) => ECPoint::Affine(T::int(4) * x.clone(), T::int(4) * y.clone()),
        }
    }

    pub fn invert(&self, p: &ECPoint<T>) -> ECPoint<T> {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(x, y) => ECPoint::Affine(x.clone() / T::int(4), y.clone() / T::int(4)),
        }
    }

    /// Whether `p` satisfies `y² = 4x³ + D`.
    pub fn source_contains(&self, p: &ECPoint<T>) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine(x, y) => {
                y.clone() * y.clone() == T::int(4) * x.powu(3) + self.d.clone()
            }
        }
    }
}

/// Converts `y² = 4x³ + D` to short form.
pub fn from_doubled_model<T: Scalar>(d: T) -> Result<(WeierstrassCurve<T>, DoubledModelMap<T>)> {
    if d.is_zero() {
        return Err(Error::Singular("y² = 4x³ is singular".into()));
    }
    let curve = WeierstrassCurve::j0(T::int(16) * d.clone())?;
    Ok((curve, DoubledModelMap { d }))
}

/// Degree-3 isogeny `y² = x³ + D → y² = x³ − 27D` with kernel `{O, (0, ±√D)}`:
/// `(x, y) ↦ ((x³ + 4D)/x², y(x³ − 8D)/x³)`.
#[derive(Clone)]
pub struct ThreeIsogeny<T> {
    d: T,
    source: WeierstrassCurve<T>,
    target: WeierstrassCurve<T>,
}

impl<T: Scalar> ThreeIsogeny<T> {
    pub fn source(&self) -> &WeierstrassCurve<T> {
        &self.source
    }

    pub fn target(&self) -> &WeierstrassCurve<T> {
        &self.target
    }

    pub fn apply(&self, p: &ECPoint<T>) -> Result<ECPoint<T>> {
        self.source.check(p)?;
        let (x, y) = match p {
            ECPoint::Infinity => return Ok(ECPoint::Infinity),
            ECPoint::Affine(x, _) if x.is_zero() => return Ok(ECPoint::Infinity),
            ECPoint::Affine(x, y) => (x, y),
        };
        let x3 = x.powu(3);
        let d = self.d.clone();
        let nx = (x3.clone() + T::int(4) * d.clone()) / x.powu(2);
        let ny = y.clone() * (x3.clone() - T::int(8) * d) / x3;
        Ok(ECPoint::Affine(nx, ny))
    }
}

impl<T: fmt::Display> fmt::Debug for ThreeIsogeny<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThreeIsogeny({} -> {})", self.source, self.target)
    }
}

pub fn velu_3isogeny<T: Scalar>(d: T) -> Result<ThreeIsogeny<T>> {
    let source = WeierstrassCurve::j0(d.clone())?;
    let target = WeierstrassCurve::j0(-(T::int(27) * d.clone()))?;
    Ok(ThreeIsogeny { d, source, target })
}

/// The full rational torsion subgroup of `y² = x³ + D`, Infinity first and
/// the rest in ascending `(x, y)` order.
///
/// Seeds are the 2-torsion points (rational roots of `x³ + D`) and the
/// 3-torsion points (rational roots `x` of `ψ₃ = 3x⁴ + 12Dx` whose
/// `x³ + D` is a rational square), closed under the group law.
pub fn rational_torsion_j0(d: &Rat) -> Result<Vec<Point>> {
    let curve = WeierstrassCurve::j0(d.clone())?;
    let mut seeds: Vec<Point> = Vec::new();
    let two_div = crate::UPoly::new(vec![d.clone(), Rat::zero(), Rat::zero(), Rat::int(1)]);
    for x in two_div.rational_roots()? {
        seeds.push(ECPoint::Affine(x, Rat::zero()));
    }
    let three_div = crate::UPoly::new(vec![
        Rat::zero(),
        Rat::int(12) * d.clone(),
        Rat::zero(),
        Rat::zero(),
        Rat::int(3),
    ]);
    for x in three_div.rational_roots()? {
        let rhs = x.powu(3) + d.clone();
        if let Some(y) = crate::exactmath::rational_nth_root(&rhs, 2) {
            seeds.push(ECPoint::Affine(x.clone(), y.clone()));
            seeds.push(ECPoint::Affine(x, -y));
        }
    }
    let mut group: Vec<Point> = vec![ECPoint::Infinity];
    for s in seeds {
        if !group.contains(&s) {
            group.push(s);
        }
    }
    loop {
        let mut fresh = Vec::new();
        for p in &group {
            for q in &group {
                let s = curve.add_unchecked(p, q);
                if !group.contains(&s) && !fresh.contains(&s) {
                    fresh.push(s);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        group.extend(fresh);
    }
    group.sort();
    Ok(group)
}
