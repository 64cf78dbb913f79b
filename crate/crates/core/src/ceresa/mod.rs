//! Ceresa verdicts for Picard curves `C_f: y³ = f(x)`.
//!
//! The Ceresa cycle `κ_f` is torsion in the Chow group exactly when
//! `P_f = (I(f), J(f))` is torsion on `E_f: y² = 4x³ − 27·disc(f)`. In the
//! Griffiths group it is always torsion. The reported order is `ord(P_f)`;
//! `ord(κ_f)` agrees with it only up to a universal constant that is not
//! effective, so it is never claimed.

mod scan;

pub use scan::{parse_range, scan, to_csv, Grid, ScanOptions, ScanOutcome, ScanRecord, CSV_HEADER};

use num_traits::Zero;

use crate::elliptic::{from_doubled_model, rational_torsion_j0, velu_3isogeny, ECPoint};
use crate::error::{Error, Result};
use crate::exactmath::Scalar;
use crate::{Curve, Invariants, Point, Quartic, Rat};

/// A depressed quartic with nonzero discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PicardCurve {
    quartic: Quartic,
}

impl PicardCurve {
    pub fn new(quartic: Quartic) -> Result<Self> {
        if quartic.discriminant().is_zero() {
            return Err(Error::domain(
                "disc(f) = 0: y³ = f(x) is not a smooth Picard curve",
            ));
        }
        Ok(PicardCurve { quartic })
    }

    pub fn from_coeffs(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        Self::new(Quartic::new(a, b, c))
    }

    pub fn quartic(&self) -> &Quartic {
        &self.quartic
    }

    pub fn invariants(&self) -> Invariants {
        self.quartic.invariants()
    }
}

/// `P_f` on the doubled model `y² = 4x³ + D` and its image on the short
/// model `y² = x³ + 16D`, with `D = −27·disc`.
#[derive(Clone, Debug)]
pub struct InvariantPoint {
    pub invariants: Invariants,
    pub doubled_d: Rat,
    pub short_curve: Curve,
    pub p_f: Point,
    pub p_f_short: Point,
}

pub fn picard_invariant_point(curve: &PicardCurve) -> InvariantPoint {
    let invariants = curve.invariants();
    let doubled_d = -(Rat::int(27) * invariants.disc.clone());
    let (short_curve, map) = from_doubled_model(doubled_d.clone()).expect("disc ≠ 0");
    let p_f = ECPoint::Affine(invariants.i.clone(), invariants.j.clone());
    debug_assert!(map.source_contains(&p_f));
    let p_f_short = map.apply(&p_f);
    debug_assert!(short_curve.contains(&p_f_short));
    InvariantPoint {
        invariants,
        doubled_d,
        short_curve,
        p_f,
        p_f_short,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChowVerdict {
    /// `P_f` has this finite order in `E_f(Q)`.
    Torsion {
        point_order: u32,
    },
    NonTorsion,
}

impl ChowVerdict {
    pub fn is_torsion(&self) -> bool {
        matches!(self, ChowVerdict::Torsion { .. })
    }

    pub fn point_order(&self) -> Option<u32> {
        match self {
            ChowVerdict::Torsion { point_order } => Some(*point_order),
            ChowVerdict::NonTorsion => None,
        }
    }
}

/// Modulo algebraic equivalence the Ceresa cycle of a Picard curve is always
/// torsion, so there is only one verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GriffithsVerdict {
    Torsion,
}

#[derive(Clone, Debug)]
pub struct CeresaVerdict {
    pub curve: PicardCurve,
    pub chow: ChowVerdict,
    pub griffiths: GriffithsVerdict,
    pub invariants: Invariants,
    pub short_curve: Curve,
    /// `P_f` on the short model.
    pub point: Point,
}

pub fn decide(curve: &PicardCurve) -> CeresaVerdict {
    let ip = picard_invariant_point(curve);
    let order = ip
        .short_curve
        .torsion_order(&ip.p_f_short)
        .expect("P_f lies on E_f by the syzygy");
    let chow = match order {
        Some(point_order) => ChowVerdict::Torsion { point_order },
        None => ChowVerdict::NonTorsion,
    };
    CeresaVerdict {
        curve: curve.clone(),
        chow,
        griffiths: GriffithsVerdict::Torsion,
        invariants: ip.invariants,
        short_curve: ip.short_curve,
        point: ip.p_f_short,
    }
}

/// Intermediate values of the bielliptic check for `f = x⁴ + ax² + c`.
#[derive(Clone, Debug)]
pub struct BiellipticChain {
    /// `D' = 4c(a² − 4c)²`, the `j = 0` curve through `Q_f`.
    pub source_d: Rat,
    /// `Q_f = (a² − 4c, a(a² − 4c))`
    pub q_f: Point,
    /// `φ(Q_f)` on `y² = x³ − 27D'`.
    pub image: Point,
    /// `(4x, 8y)` applied to the image, on `y² = x³ − 432·disc`.
    pub scaled: Point,
    pub p_f_short: Point,
    pub consistent: bool,
}

pub fn bielliptic_chain(a: &Rat, c: &Rat) -> Result<BiellipticChain> {
    let quartic = Quartic::new(a.clone(), Rat::zero(), c.clone());
    let picard = PicardCurve::new(quartic)?;
    let m = a.powu(2) - Rat::int(4) * c.clone();
    if m.is_zero() {
        return Err(Error::domain("a² − 4c = 0"));
    }
    let source_d = Rat::int(4) * c.clone() * m.powu(2);
    let q_f = ECPoint::Affine(m.clone(), a.clone() * m);
    let phi = velu_3isogeny(source_d.clone())?;
    let image = phi.apply(&q_f)?;
    let scaled = match &image {
        ECPoint::Infinity => ECPoint::Infinity,
        ECPoint::Affine(x, y) => ECPoint::Affine(Rat::int(4) * x.clone(), Rat::int(8) * y.clone()),
    };
    let ip = picard_invariant_point(&picard);
    debug_assert!(ip.short_curve.contains(&scaled));
    let consistent = scaled == ip.p_f_short || scaled == ip.p_f_short.neg();
    Ok(BiellipticChain {
        source_d,
        q_f,
        image,
        scaled,
        p_f_short: ip.p_f_short,
        consistent,
    })
}

/// Whether the 3-isogeny image of `Q_f` is `±P_f` (after rescaling models).
pub fn bielliptic_consistency(a: &Rat, c: &Rat) -> Result<bool> {
    bielliptic_chain(a, c).map(|chain| chain.consistent)
}

/// `g_(I,J)(t) = t³ − It/3 − J/27`
pub fn family_g(i: &Rat, j: &Rat, t: &Rat) -> Rat {
    t.powu(3) - i.clone() * t.clone() / Rat::int(3) - j.clone() / Rat::int(27)
}

/// Member `f_(I,J),t` of the rational curve of Picard curves with
/// `P_f` a twist of `(I, J) ∈ E₀: y² = 4x³ − 27`.
///
/// With `g = g_(I,J)(t)`, `α = t·g`, `β = g²`:
/// `f = x⁴ − (3α/2)x² + βx + (g²·I/12 − 3α²/16)`, whose invariants are
/// `(g²I, g³J)` and discriminant `g⁶`.
pub fn family_generate(i: &Rat, j: &Rat, t: &Rat) -> Result<PicardCurve> {
    if j.powu(2) != Rat::int(4) * i.powu(3) - Rat::int(27) {
        return Err(Error::domain("(I, J) is not on E₀: J² = 4I³ − 27"));
    }
    family_member(i, j, t)
}

pub(crate) fn family_member(i: &Rat, j: &Rat, t: &Rat) -> Result<PicardCurve> {
    let g = family_g(i, j, t);
    if g.is_zero() {
        return Err(Error::DegenerateParameter("g_(I,J)(t) = 0".into()));
    }
    let alpha = t.clone() * g.clone();
    let beta = g.powu(2);
    let a = -(Rat::int(3) * alpha.clone()) / Rat::int(2);
    let c = g.powu(2) * i.clone() / Rat::int(12) - Rat::int(3) * alpha.powu(2) / Rat::int(16);
    PicardCurve::new(Quartic::new(a, beta, c))
}

/// Rational torsion of `E₀: y² = 4x³ − 27` in doubled-model coordinates.
pub fn e0_rational_torsion() -> Vec<Point> {
    let d = -Rat::int(27);
    let (short, map) = from_doubled_model(d).expect("E₀ is nonsingular");
    let mut pts: Vec<Point> = rational_torsion_j0(short.b())
        .expect("E₀ is nonsingular")
        .iter()
        .map(|p| map.invert(p))
        .collect();
    pts.sort();
    pts
}

/// `I³/disc` and `J²/disc`, constant along every generated family.
pub fn twist_normalized(inv: &Invariants) -> (Rat, Rat) {
    (
        inv.i.powu(3) / inv.disc.clone(),
        inv.j.powu(2) / inv.disc.clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn pt(x: i64, y: i64) -> Point {
        ECPoint::Affine(r(x), r(y))
    }

    fn curve(a: i64, b: i64, c: i64) -> PicardCurve {
        PicardCurve::new(Quartic::from_ints(a, b, c)).unwrap()
    }

    #[test]
    fn rejects_singular_quartics() {
        assert!(PicardCurve::new(Quartic::from_ints(0, 0, 0)).is_err());
        // (x² − 1)² = x⁴ − 2x² + 1
        assert!(PicardCurve::new(Quartic::from_ints(-2, 0, 1)).is_err());
    }

    #[test]
    fn invariant_point_examples() {
        let ip = picard_invariant_point(&curve(1, 0, 1));
        assert_eq!(ip.p_f, pt(13, 70));
        assert_eq!(ip.p_f_short, pt(52, 280));
        assert_eq!(ip.short_curve, Curve::j0(r(-62208)).unwrap());

        let ip = picard_invariant_point(&curve(-12, 1, -12));
        assert_eq!(ip.p_f, pt(0, 13797));
        assert_eq!(ip.doubled_d, r(13797 * 13797));

        let ip = picard_invariant_point(&curve(0, 0, -1));
        assert_eq!(ip.p_f, pt(-12, 0));
    }

    #[test]
    fn decide_examples() {
        assert_eq!(
            decide(&curve(-12, 1, -12)).chow,
            ChowVerdict::Torsion { point_order: 3 }
        );
        assert_eq!(decide(&curve(1, 0, 1)).chow, ChowVerdict::NonTorsion);
        assert_eq!(
            decide(&curve(0, 0, -1)).chow,
            ChowVerdict::Torsion { point_order: 2 }
        );
        assert_eq!(decide(&curve(1, 0, 1)).griffiths, GriffithsVerdict::Torsion);
    }

    #[test]
    fn bielliptic_examples() {
        let chain = bielliptic_chain(&r(1), &r(1)).unwrap();
        assert_eq!(chain.source_d, r(36));
        assert_eq!(chain.q_f, pt(-3, -3));
        assert_eq!(chain.image, pt(13, -35));
        assert_eq!(chain.scaled, pt(52, -280));
        assert_eq!(chain.scaled, chain.p_f_short.neg());
        assert!(chain.consistent);

        assert!(bielliptic_consistency(&r(-12), &r(-12)).unwrap());

        let chain = bielliptic_chain(&r(0), &r(5)).unwrap();
        assert!(chain.consistent);
        assert_eq!(chain.image.coords().unwrap().1, &r(0));

        assert!(bielliptic_consistency(&r(2), &r(1)).is_err()); // a² = 4c
        assert!(bielliptic_consistency(&r(0), &r(0)).is_err());
    }

    #[test]
    fn family_examples() {
        let f = family_generate(&r(3), &r(9), &r(0)).unwrap();
        assert_eq!(f.quartic(), &Quartic::new(r(0), q(1, 9), q(1, 36)));
        let inv = f.invariants();
        assert_eq!((inv.i, inv.j, inv.disc), (q(1, 3), q(-1, 3), q(1, 729)));

        let f = family_generate(&r(3), &r(9), &r(1)).unwrap();
        assert_eq!(f.quartic(), &Quartic::new(q(1, 2), q(1, 9), q(1, 144)));

        assert!(family_generate(&r(3), &r(8), &r(0)).is_err());
    }

    #[test]
    fn family_degenerate_parameter() {
        // g has no rational root at either rational point of E₀, so the guard
        // is exercised off E₀: g_(0,0)(t) = t³.
        assert!(matches!(
            family_member(&r(0), &r(0), &r(0)),
            Err(Error::DegenerateParameter(_))
        ));
        for j in [r(9), r(-9)] {
            let g = crate::UPoly::new(vec![-j.clone() / r(27), r(-1), r(0), r(1)]);
            assert!(g.rational_roots().unwrap().is_empty());
        }
    }

    #[test]
    fn e0_torsion() {
        assert_eq!(
            e0_rational_torsion(),
            vec![ECPoint::Infinity, pt(3, -9), pt(3, 9)]
        );
        for p in e0_rational_torsion() {
            if let ECPoint::Affine(i, j) = p {
                let v = decide(&family_generate(&i, &j, &r(0)).unwrap());
                assert!(v.chow.is_torsion());
            }
        }
    }
}
