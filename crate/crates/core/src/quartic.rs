//! Invariant theory of depressed quartics `x^4 + a x^2 + b x + c`, the
//! weighted `G_m`-action `λ·(a, b, c) = (λ²a, λ³b, λ⁴c)`, and equality of
//! points of the weighted projective space `P(2,3,4)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{rational_nth_root, Poly, Scalar};
use crate::Rat;

/// Coefficients of `f = x^4 + a x^2 + b x + c`. The discriminant may vanish.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepressedQuartic<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

/// `I`, `J` and the discriminant of a quartic; always satisfies
/// `J² = 4I³ − 27·disc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticInvariants<T> {
    pub i: T,
    pub j: T,
    pub disc: T,
}

impl<T: Scalar> QuarticInvariants<T> {
    pub fn syzygy_holds(&self) -> bool {
        self.j.clone() * self.j.clone()
            == T::int(4) * self.i.powu(3) - T::int(27) * self.disc.clone()
    }
}

impl<T: Scalar> DepressedQuartic<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        DepressedQuartic { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(T::int(a), T::int(b), T::int(c))
    }

    pub fn is_origin(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn to_poly(&self) -> Poly<T> {
        Poly::new(vec![
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
            T::zero(),
            T::one(),
        ])
    }

    /// Closed-form discriminant.
    pub fn discriminant(&self) -> T {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let k = T::int;
        -k(4) * a.powu(3) * b.powu(2) - k(27) * b.powu(4)
            + k(16) * a.powu(4) * c.clone()
            + k(144) * a.clone() * b.powu(2) * c.clone()
            - k(128) * a.powu(2) * c.powu(2)
            + k(256) * c.powu(3)
    }

    /// `(I, J, disc)` with `I = a² + 12c` and `J = 72ac − 2a³ − 27b²`.
    ///
    /// Panics if the syzygy fails, which would be an arithmetic bug.
    pub fn invariants(&self) -> QuarticInvariants<T> {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let k = T::int;
        let inv = QuarticInvariants {
            i: a.powu(2) + k(12) * c.clone(),
            j: k(72) * a.clone() * c.clone() - k(2) * a.powu(3) - k(27) * b.powu(2),
            disc: self.discriminant(),
        };
        assert!(inv.syzygy_holds(), "syzygy violated for {self:?}");
        inv
    }

    /// `λ·(a, b, c) = (λ²a, λ³b, λ⁴c)`.
    pub fn gm_scale(&self, lam: &T) -> Result<Self> {
        if lam.is_zero() {
            return Err(Error::domain("G_m scaling by zero"));
        }
        Ok(DepressedQuartic {
            a: lam.powu(2) * self.a.clone(),
            b: lam.powu(3) * self.b.clone(),
            c: lam.powu(4) * self.c.clone(),
        })
    }

    /// Whether the two quartics define the same point of `P(2,3,4)` over an
    /// algebraic closure.
    ///
    /// Zero patterns must agree; then the weight-balanced cross relations
    /// `a₁³b₂² = a₂³b₁²`, `a₁²c₂ = a₂²c₁` and `b₁⁴c₂³ = b₂⁴c₁³` are checked for
    /// each pair of nonzero coordinates. With a single nonzero coordinate the
    /// required root always exists in the closure.
    pub fn moduli_equal_geometric(&self, other: &Self) -> Result<bool> {
        if self.is_origin() || other.is_origin() {
            return Err(Error::domain("(0, 0, 0) is not a point of P(2,3,4)"));
        }
        let pattern = |q: &Self| (q.a.is_zero(), q.b.is_zero(), q.c.is_zero());
        if pattern(self) != pattern(other) {
            return Ok(false);
        }
        let (p, q) = (self, other);
        let (za, zb, zc) = pattern(p);
        if !za && !zb && p.a.powu(3) * q.b.powu(2) != q.a.powu(3) * p.b.powu(2) {
            return Ok(false);
        }
        if !za && !zc && p.a.powu(2) * q.c.clone() != q.a.powu(2) * p.c.clone() {
            return Ok(false);
        }
        if !zb && !zc && p.b.powu(4) * q.c.powu(3) != q.b.powu(4) * p.c.powu(3) {
            return Ok(false);
        }
        Ok(true)
    }

    /// The inverse of `f ↦ (−2a/3, b)`: for `(α, β)` on
    /// `y² = x³ − Ix/3 − J/27`, the quartic
    /// `x⁴ − 3αx²/2 + βx + (I/12 − 3α²/16)` has invariants `(I, J)`.
    pub fn from_curve_point(i: &T, alpha: &T, beta: &T) -> Self {
        let k = T::int;
        DepressedQuartic {
            a: -(k(3) * alpha.clone()) / k(2),
            b: beta.clone(),
            c: i.clone() / k(12) - k(3) * alpha.powu(2) / k(16),
        }
    }

    /// `(−2a/3, b)`
    pub fn to_curve_point(&self) -> (T, T) {
        (-(T::int(2) * self.a.clone()) / T::int(3), self.b.clone())
    }
}

impl DepressedQuartic<Rat> {
    /// A rational `λ` with `λ·self = other`, if one exists.
    ///
    /// Candidates come from the lowest-weight nonzero coordinate
    /// (`λ² = a₂/a₁`, else `λ³ = b₂/b₁`, else `λ⁴ = c₂/c₁`) and are verified
    /// on all three coordinates.
    pub fn moduli_equal_rational(&self, other: &Self) -> Result<Option<Rat>> {
        if self.is_origin() || other.is_origin() {
            return Err(Error::domain("(0, 0, 0) is not a point of P(2,3,4)"));
        }
        let candidates: Vec<Rat> = if !self.a.is_zero() {
            signed_roots(&(&other.a / &self.a), 2)
        } else if !self.b.is_zero() {
            signed_roots(&(&other.b / &self.b), 3)
        } else {
            signed_roots(&(&other.c / &self.c), 4)
        };
        for lam in candidates {
            if lam.is_zero() {
                continue;
            }
            if self.gm_scale(&lam)? == *other {
                return Ok(Some(lam));
            }
        }
        Ok(None)
    }
}

fn signed_roots(q: &Rat, k: u32) -> Vec<Rat> {
    match rational_nth_root(q, k) {
        Some(r) if k.is_multiple_of(2) => vec![r.clone(), -r],
        Some(r) => vec![r],
        None => Vec::new(),
    }
}
