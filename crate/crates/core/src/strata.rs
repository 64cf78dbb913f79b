//! Automorphism strata `X_G` of non-hyperelliptic genus-3 curves, their
//! closure relations, and which strata lie in the Ceresa vanishing loci
//! `V₃^rat` (rational equivalence) and `V₃^alg` (algebraic equivalence).
//!
//! The hyperelliptic locus, where the Ceresa cycle vanishes outright, is not
//! part of this table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ceresa::{decide, PicardCurve};
use crate::error::{Error, Result};
use crate::repcrit;
use crate::Quartic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StratumLabel {
    Id,
    C2,
    C2xC2,
    C3,
    D4,
    S3,
    C6,
    G16,
    S4,
    C9,
    G48,
    G96,
    GL3F2,
}

impl StratumLabel {
    pub const ALL: [StratumLabel; 13] = [
        Self::Id,
        Self::C2,
        Self::C2xC2,
        Self::C3,
        Self::D4,
        Self::S3,
        Self::C6,
        Self::G16,
        Self::S4,
        Self::C9,
        Self::G48,
        Self::G96,
        Self::GL3F2,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Id => "Id",
            Self::C2 => "C2",
            Self::C2xC2 => "C2xC2",
            Self::C3 => "C3",
            Self::D4 => "D4",
            Self::S3 => "S3",
            Self::C6 => "C6",
            Self::G16 => "G16",
            Self::S4 => "S4",
            Self::C9 => "C9",
            Self::G48 => "G48",
            Self::G96 => "G96",
            Self::GL3F2 => "GL3F2",
        }
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StratumLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_uppercase();
        let label = match norm.as_str() {
            "ID" | "1" | "TRIVIAL" => Self::Id,
            "C2" => Self::C2,
            "C2XC2" | "C2^2" | "V4" => Self::C2xC2,
            "C3" => Self::C3,
            "D4" => Self::D4,
            "S3" => Self::S3,
            "C6" => Self::C6,
            "G16" => Self::G16,
            "S4" => Self::S4,
            "C9" => Self::C9,
            "G48" => Self::G48,
            "G96" => Self::G96,
            "GL3F2" | "GL3(F2)" | "GL(3,2)" | "G168" => Self::GL3F2,
            _ => return Err(Error::UnknownStratum(s.to_string())),
        };
        Ok(label)
    }
}

impl Serialize for StratumLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for StratumLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub label: StratumLabel,
    pub dim: u32,
    /// Strata one step down in the closure of this one.
    pub closure_children: Vec<StratumLabel>,
    pub in_vrat: bool,
    pub in_valg: bool,
    pub gap_label: Option<String>,
    pub model_equation: Option<String>,
}

fn record(
    label: StratumLabel,
    dim: u32,
    children: &[StratumLabel],
    in_vrat: bool,
    in_valg: bool,
    gap_label: Option<&str>,
    model: Option<&str>,
) -> StratumRecord {
    StratumRecord {
        label,
        dim,
        closure_children: children.to_vec(),
        in_vrat,
        in_valg,
        gap_label: gap_label.map(str::to_string),
        model_equation: model.map(str::to_string),
    }
}

/// The 13 strata with their closure edges and vanishing verdicts.
pub fn shipped_table() -> Vec<StratumRecord> {
    use StratumLabel::*;
    vec![
        record(Id, 6, &[C2, C3], false, false, None, None),
        record(C2, 4, &[C2xC2, S3, C6], false, false, None, None),
        record(C2xC2, 3, &[D4], false, false, None, None),
        record(
            C3,
            2,
            &[C6, C9],
            false,
            true,
            None,
            Some("y^3 = x^4 + a x^2 + b x + c"),
        ),
        record(D4, 2, &[G16, S4], false, false, None, None),
        record(S3, 2, &[S4], false, false, None, None),
        record(
            C6,
            1,
            &[G48],
            false,
            true,
            None,
            Some("y^3 = x^4 + a x^2 + c"),
        ),
        record(G16, 1, &[G48, G96], false, false, Some("(16,13)"), None),
        record(S4, 1, &[G96, GL3F2], false, false, None, None),
        record(C9, 0, &[], true, true, None, Some("y^3 z = x^4 + x z^3")),
        record(
            G48,
            0,
            &[],
            true,
            true,
            Some("(48,33)"),
            Some("y^3 z = x^4 + z^4"),
        ),
        record(
            G96,
            0,
            &[],
            false,
            false,
            Some("(96,64)"),
            Some("x^4 + y^4 + z^4 = 0"),
        ),
        record(
            GL3F2,
            0,
            &[],
            false,
            false,
            None,
            Some("x^3 y + y^3 z + z^3 x = 0"),
        ),
    ]
}

pub fn stratum_info(label: &str) -> Result<StratumRecord> {
    let label: StratumLabel = label.parse()?;
    Ok(shipped_table()
        .into_iter()
        .find(|r| r.label == label)
        .expect("every label is in the table"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Locus {
    Rat,
    Alg,
}

/// An independently established fact pinning one verdict bit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub label: StratumLabel,
    pub locus: Locus,
    pub contained: bool,
    pub source: String,
}

/// Verdicts fixed by computation in this crate or by cited results.
///
/// * `C3 ⊂ V^alg`: the `μ₃` profile has `(∧³V)^G = 0`.
/// * `C9 ⊂ V^rat`: the `C₉` profile has `H³_prim^G = 0`.
/// * `C6 ⊄ V^rat`: `y³ = x⁴ + x² + 1` (a bielliptic Picard curve) has
///   non-torsion Ceresa class since `P_f` has infinite order.
/// * `G48 ⊂ V^rat`: `H³(J)^G = 0` for `y³ = x⁴ + 1` (cited).
/// * `G96, GL3F2 ⊄ V^alg`: the Fermat and Klein quartics have Ceresa
///   classes of infinite order in the Griffiths group (cited).
pub fn shipped_evidence() -> Vec<Evidence> {
    use StratumLabel::*;
    let computed = |label, locus, contained: bool, what: &str| Evidence {
        label,
        locus,
        contained,
        source: format!("computed: {what}"),
    };
    let cited = |label, locus, contained: bool, what: &str| Evidence {
        label,
        locus,
        contained,
        source: format!("cited: {what}"),
    };
    let c3 = repcrit::thm_b_applies(&repcrit::picard_c3()).expect("valid preset");
    let c9 = repcrit::thm_a_applies(&repcrit::c9_x4px()).expect("valid preset");
    let bielliptic = PicardCurve::new(Quartic::from_ints(1, 0, 1)).expect("disc = 144");
    let c6_nonvanishing = !decide(&bielliptic).chow.is_torsion();
    vec![
        computed(
            C3,
            Locus::Alg,
            c3,
            "(∧³V)^{μ3} = 0 on the picard_c3 profile",
        ),
        computed(C9, Locus::Rat, c9, "H³_prim^G = 0 on the c9_x4px profile"),
        computed(
            C6,
            Locus::Rat,
            !c6_nonvanishing,
            "P_f of y³ = x⁴ + x² + 1 has infinite order",
        ),
        cited(G48, Locus::Rat, true, "H³(J)^G = 0 for y³ = x⁴ + 1"),
        cited(
            G96,
            Locus::Alg,
            false,
            "Fermat quartic Ceresa class non-torsion in Griffiths group",
        ),
        cited(
            GL3F2,
            Locus::Alg,
            false,
            "Klein quartic Ceresa class non-torsion in Griffiths group",
        ),
    ]
}

/// Every way `table` contradicts the structural rules or the evidence.
///
/// Rules: `in_vrat ⇒ in_valg`; for each closure edge `G → H`, membership of
/// `X_G` in a vanishing locus forces membership of `X_H`; evidence about a
/// label present in the table must match. Labels absent from the table are
/// ignored.
pub fn violations(table: &[StratumRecord], evidence: &[Evidence]) -> Vec<String> {
    let mut out = Vec::new();
    let find = |l: StratumLabel| table.iter().find(|r| r.label == l);
    for r in table {
        if r.in_vrat && !r.in_valg {
            out.push(format!("{}: in V^rat but not in V^alg", r.label));
        }
        for child in &r.closure_children {
            let Some(c) = find(*child) else { continue };
            if r.in_vrat && !c.in_vrat {
                out.push(format!(
                    "{} ⊂ V^rat but {} in its closure is not",
                    r.label, c.label
                ));
            }
            if r.in_valg && !c.in_valg {
                out.push(format!(
                    "{} ⊂ V^alg but {} in its closure is not",
                    r.label, c.label
                ));
            }
        }
    }
    for e in evidence {
        let Some(r) = find(e.label) else { continue };
        let have = match e.locus {
            Locus::Rat => r.in_vrat,
            Locus::Alg => r.in_valg,
        };
        if have != e.contained {
            out.push(format!(
                "{} {:?}: table says {have}, evidence ({}) says {}",
                e.label, e.locus, e.source, e.contained
            ));
        }
    }
    out
}

pub fn verdict_consistency(table: &[StratumRecord], evidence: &[Evidence]) -> bool {
    violations(table, evidence).is_empty()
}

/// Self-test of the shipped table.
pub fn check_shipped() -> bool {
    verdict_consistency(&shipped_table(), &shipped_evidence())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_examples() {
        let c9 = stratum_info("C9").unwrap();
        assert_eq!(c9.dim, 0);
        assert!(c9.in_vrat && c9.in_valg);
        assert_eq!(c9.model_equation.as_deref(), Some("y^3 z = x^4 + x z^3"));

        let klein = stratum_info("GL3F2").unwrap();
        assert_eq!(klein.dim, 0);
        assert!(!klein.in_vrat && !klein.in_valg);

        let c2 = stratum_info("C2").unwrap();
        assert_eq!(c2.dim, 4);
        assert!(!c2.in_vrat && !c2.in_valg);

        assert_eq!(
            stratum_info("G48").unwrap().gap_label.as_deref(),
            Some("(48,33)")
        );
        assert!(matches!(stratum_info("A5"), Err(Error::UnknownStratum(_))));
    }

    #[test]
    fn shipped_table_is_consistent() {
        assert!(
            check_shipped(),
            "{:?}",
            violations(&shipped_table(), &shipped_evidence())
        );
    }

    #[test]
    fn empty_table_is_vacuously_consistent() {
        assert!(verdict_consistency(&[], &shipped_evidence()));
    }

    #[test]
    fn clearing_c9_alg_is_detected() {
        let mut t = shipped_table();
        t.iter_mut()
            .find(|r| r.label == StratumLabel::C9)
            .unwrap()
            .in_valg = false;
        assert!(!verdict_consistency(&t, &shipped_evidence()));
    }
}
