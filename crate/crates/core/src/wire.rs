//! JSON wire formats. Rationals are `"p/q"` strings, points are
//! `{"x": .., "y": ..}` or the string `"infinity"`.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::ceresa::{CeresaVerdict, ChowVerdict};
use crate::elliptic::ECPoint;
use crate::exactmath::RatStr;
use crate::{Curve, Invariants, Point, Quartic};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticJson {
    pub a: RatStr,
    pub b: RatStr,
    pub c: RatStr,
}

impl From<&Quartic> for QuarticJson {
    fn from(q: &Quartic) -> Self {
        QuarticJson {
            a: (&q.a).into(),
            b: (&q.b).into(),
            c: (&q.c).into(),
        }
    }
}

impl From<QuarticJson> for Quartic {
    fn from(q: QuarticJson) -> Self {
        Quartic::new(q.a.0, q.b.0, q.c.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    #[serde(rename = "I")]
    pub i: RatStr,
    #[serde(rename = "J")]
    pub j: RatStr,
    pub disc: RatStr,
}

impl From<&Invariants> for InvariantsJson {
    fn from(v: &Invariants) -> Self {
        InvariantsJson {
            i: (&v.i).into(),
            j: (&v.j).into(),
            disc: (&v.disc).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointJson {
    Infinity,
    Affine { x: RatStr, y: RatStr },
}

impl From<&Point> for PointJson {
    fn from(p: &Point) -> Self {
        match p {
            ECPoint::Infinity => PointJson::Infinity,
            ECPoint::Affine(x, y) => PointJson::Affine {
                x: x.into(),
                y: y.into(),
            },
        }
    }
}

impl From<PointJson> for Point {
    fn from(p: PointJson) -> Self {
        match p {
            PointJson::Infinity => ECPoint::Infinity,
            PointJson::Affine { x, y } => ECPoint::Affine(x.0, y.0),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AffineRepr {
    x: RatStr,
    y: RatStr,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Tag(String),
    Affine(AffineRepr),
}

impl Serialize for PointJson {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            PointJson::Infinity => serializer.serialize_str("infinity"),
            PointJson::Affine { x, y } => AffineRepr {
                x: x.clone(),
                y: y.clone(),
            }
            .serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for PointJson {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match PointRepr::deserialize(deserializer)? {
            PointRepr::Tag(s) if s == "infinity" => Ok(PointJson::Infinity),
            PointRepr::Tag(s) => Err(de::Error::custom(format!("unknown point tag `{s}`"))),
            PointRepr::Affine(AffineRepr { x, y }) => Ok(PointJson::Affine { x, y }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    #[serde(rename = "A")]
    pub a: RatStr,
    #[serde(rename = "B")]
    pub b: RatStr,
}

impl From<&Curve> for CurveJson {
    fn from(c: &Curve) -> Self {
        CurveJson {
            a: c.a().into(),
            b: c.b().into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChowJson {
    pub torsion: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_order: Option<u32>,
}

impl From<&ChowVerdict> for ChowJson {
    fn from(v: &ChowVerdict) -> Self {
        ChowJson {
            torsion: v.is_torsion(),
            point_order: v.point_order(),
        }
    }
}

/// Verdict record emitted by `decide`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub curve: QuarticJson,
    #[serde(rename = "I")]
    pub i: RatStr,
    #[serde(rename = "J")]
    pub j: RatStr,
    pub disc: RatStr,
    /// Short model `y² = x³ + 16·(−27·disc)` carrying `P`.
    #[serde(rename = "E")]
    pub e: CurveJson,
    #[serde(rename = "P")]
    pub p: PointJson,
    pub chow: ChowJson,
    pub griffiths: String,
}

impl From<&CeresaVerdict> for VerdictJson {
    fn from(v: &CeresaVerdict) -> Self {
        VerdictJson {
            curve: v.curve.quartic().into(),
            i: (&v.invariants.i).into(),
            j: (&v.invariants.j).into(),
            disc: (&v.invariants.disc).into(),
            e: (&v.short_curve).into(),
            p: (&v.point).into(),
            chow: (&v.chow).into(),
            griffiths: "torsion".to_string(),
        }
    }
}
