//! JSON schemas for every subcommand. Each type deserializes back from the
//! text it serializes to.

use ceresa_core::ceresa::{BiellipticChain, ScanRecord};
use ceresa_core::exactmath::RatStr;
use ceresa_core::repcrit::CriteriaReport;
use ceresa_core::wire::{ChowJson, CurveJson, InvariantsJson, PointJson, QuarticJson};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsOut {
    pub curve: QuarticJson,
    #[serde(flatten)]
    pub invariants: InvariantsJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionOut {
    pub curve: CurveJson,
    pub point: PointJson,
    pub torsion: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyOut {
    #[serde(rename = "I")]
    pub i: RatStr,
    #[serde(rename = "J")]
    pub j: RatStr,
    pub t: RatStr,
    pub g: RatStr,
    pub curve: QuarticJson,
    pub invariants: InvariantsJson,
    /// `I³/disc`
    pub i3_over_disc: RatStr,
    /// `J²/disc`
    pub j2_over_disc: RatStr,
    pub chow: ChowJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E0TorsionOut {
    pub curve: String,
    pub points: Vec<PointJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiellipticOut {
    pub a: RatStr,
    pub c: RatStr,
    /// `D'` of the source curve `y² = x³ + D'`.
    pub source_d: RatStr,
    #[serde(rename = "Q")]
    pub q: PointJson,
    pub image: PointJson,
    pub scaled: PointJson,
    #[serde(rename = "P")]
    pub p: PointJson,
    pub consistent: bool,
}

impl BiellipticOut {
    pub fn new(a: &ceresa_core::Rat, c: &ceresa_core::Rat, chain: &BiellipticChain) -> Self {
        BiellipticOut {
            a: a.into(),
            c: c.into(),
            source_d: (&chain.source_d).into(),
            q: (&chain.q_f).into(),
            image: (&chain.image).into(),
            scaled: (&chain.scaled).into(),
            p: (&chain.p_f_short).into(),
            consistent: chain.consistent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepcritOut {
    pub profile: String,
    #[serde(flatten)]
    pub report: CriteriaReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionOut {
    pub profile: String,
    /// `"a"` or `"b"`.
    pub criterion: String,
    pub applies: bool,
    /// The invariant dimension that must vanish.
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOut {
    pub consistent: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub a: RatStr,
    pub b: RatStr,
    pub c: RatStr,
    #[serde(rename = "I")]
    pub i: RatStr,
    #[serde(rename = "J")]
    pub j: RatStr,
    pub disc: RatStr,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_order: Option<u32>,
}

impl From<&ScanRecord> for ScanRow {
    fn from(r: &ScanRecord) -> Self {
        ScanRow {
            a: (&r.quartic.a).into(),
            b: (&r.quartic.b).into(),
            c: (&r.quartic.c).into(),
            i: (&r.invariants.i).into(),
            j: (&r.invariants.j).into(),
            disc: (&r.invariants.disc).into(),
            verdict: r.verdict_label().to_string(),
            point_order: r.point_order(),
        }
    }
}
