//! Command-line front end for `ceresa-core`.
//!
//! Exit codes: 0 on success, 1 on usage errors (bad flags, unreadable files,
//! unsupported output format), 2 when the library rejects the input.

pub mod output;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use ceresa_core::ceresa::{self, ChowVerdict, PicardCurve, ScanOptions};
use ceresa_core::elliptic::ECPoint;
use ceresa_core::exactmath::{format_rat, parse_rat};
use ceresa_core::repcrit::{self, ActionProfile};
use ceresa_core::strata::{self, StratumRecord};
use ceresa_core::wire::{ChowJson, InvariantsJson, QuarticJson, VerdictJson};
use ceresa_core::{Curve, Quartic, Rat};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::output::*;

/// Environment variable capping the number of scan worker threads.
pub const THREADS_ENV: &str = "CERESA_KIT_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "ceresa-kit",
    version,
    about = "Ceresa cycles of Picard curves, decided exactly"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// I, J and disc of x^4 + ax^2 + bx + c.
    Invariants {
        #[arg(short = 'a', allow_hyphen_values = true, value_parser = rat_arg)]
        a: Rat,
        #[arg(short = 'b', allow_hyphen_values = true, value_parser = rat_arg)]
        b: Rat,
        #[arg(short = 'c', allow_hyphen_values = true, value_parser = rat_arg)]
        c: Rat,
    },
    /// Torsion verdicts for the Ceresa cycle of y^3 = x^4 + ax^2 + bx + c.
    Decide {
        #[arg(short = 'a', allow_hyphen_values = true, value_parser = rat_arg)]
        a: Rat,
        #[arg(short = 'b', allow_hyphen_values = true, value_parser = rat_arg)]
        b: Rat,
        #[arg(short = 'c', allow_hyphen_values = true, value_parser = rat_arg)]
        c: Rat,
    },
    /// Order of (x, y) on y^2 = x^3 + Ax + B.
    Torsion {
        #[arg(short = 'A', allow_hyphen_values = true, value_parser = rat_arg)]
        big_a: Rat,
        #[arg(short = 'B', allow_hyphen_values = true, value_parser = rat_arg)]
        big_b: Rat,
        #[arg(short = 'x', allow_hyphen_values = true, value_parser = rat_arg)]
        x: Rat,
        #[arg(short = 'y', allow_hyphen_values = true, value_parser = rat_arg)]
        y: Rat,
    },
    /// Member of the Picard family over a point (I, J) of y^2 = 4x^3 - 27.
    Family {
        #[arg(short = 'I', allow_hyphen_values = true, value_parser = rat_arg)]
        i: Rat,
        #[arg(short = 'J', allow_hyphen_values = true, value_parser = rat_arg)]
        j: Rat,
        #[arg(short = 't', allow_hyphen_values = true, value_parser = rat_arg)]
        t: Rat,
    },
    /// Rational torsion points of y^2 = 4x^3 - 27.
    E0Torsion,
    /// 3-isogeny check for the bielliptic curve y^3 = x^4 + ax^2 + c.
    Bielliptic {
        #[arg(short = 'a', allow_hyphen_values = true, value_parser = rat_arg)]
        a: Rat,
        #[arg(short = 'c', allow_hyphen_values = true, value_parser = rat_arg)]
        c: Rat,
    },
    /// Vanishing criteria for a group action profile (JSON file or preset).
    Repcrit {
        #[arg(long)]
        profile: String,
        #[arg(long, value_enum)]
        criterion: Option<Criterion>,
    },
    /// Vanishing criterion for the dihedral family with parameters (m, a, b).
    Dihedral {
        #[arg(short = 'm')]
        m: u64,
        #[arg(short = 'a')]
        a: u64,
        #[arg(short = 'b')]
        b: u64,
    },
    /// Automorphism strata of genus-3 curves and their vanishing verdicts.
    Strata {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        check: bool,
    },
    /// Decide every curve on a grid of (a, b, c).
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        a_range: String,
        #[arg(long, allow_hyphen_values = true)]
        b_range: String,
        #[arg(long, allow_hyphen_values = true)]
        c_range: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Criterion {
    /// Rational equivalence: H^3_prim invariants vanish.
    A,
    /// Algebraic equivalence: wedge^3 V invariants vanish.
    B,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(ceresa_core::Error),
}

impl From<ceresa_core::Error> for Failure {
    fn from(e: ceresa_core::Error) -> Self {
        Failure::Domain(e)
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match execute(&cli) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn no_csv(cmd: &str) -> Failure {
    Failure::Usage(format!("--format csv is not supported by `{cmd}`"))
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Invariants { a, b, c } => {
            invariants(fmt, Quartic::new(a.clone(), b.clone(), c.clone()))
        }
        Command::Decide { a, b, c } => decide(fmt, Quartic::new(a.clone(), b.clone(), c.clone())),
        Command::Torsion { big_a, big_b, x, y } => torsion(fmt, big_a, big_b, x, y),
        Command::Family { i, j, t } => family(fmt, i, j, t),
        Command::E0Torsion => e0_torsion(fmt),
        Command::Bielliptic { a, c } => bielliptic(fmt, a, c),
        Command::Repcrit { profile, criterion } => repcrit_cmd(fmt, profile, *criterion),
        Command::Dihedral { m, a, b } => dihedral(fmt, *m, *a, *b),
        Command::Strata { group, check } => strata_cmd(fmt, group.as_deref(), *check),
        Command::Scan {
            a_range,
            b_range,
            c_range,
            out,
            threads,
        } => scan_cmd(fmt, [a_range, b_range, c_range], out.as_ref(), *threads),
    }
}

/// `x^4 + ax^2 + bx + c` with zero terms dropped and signs folded.
pub fn quartic_text(q: &Quartic) -> String {
    use num_traits::{One, Signed, Zero};
    let mut s = String::from("x^4");
    for (coef, mono) in [(&q.a, "x^2"), (&q.b, "x"), (&q.c, "")] {
        if coef.is_zero() {
            continue;
        }
        let sign = if coef.is_negative() { '-' } else { '+' };
        let mag = coef.abs();
        let body = match (mag.is_one(), mono.is_empty(), mag.is_integer()) {
            (true, false, _) => mono.to_string(),
            (_, true, _) => format_rat(&mag),
            (false, false, true) => format!("{}{mono}", format_rat(&mag)),
            (false, false, false) => format!("({}){mono}", format_rat(&mag)),
        };
        let _ = write!(s, " {sign} {body}");
    }
    s
}

fn chow_text(v: &ChowVerdict) -> String {
    match v {
        ChowVerdict::Torsion { point_order } => format!("torsion (P_f of order {point_order})"),
        ChowVerdict::NonTorsion => "non-torsion (P_f of infinite order)".to_string(),
    }
}

fn csv_quartic_row(q: &Quartic, inv: &ceresa_core::Invariants) -> String {
    [&q.a, &q.b, &q.c, &inv.i, &inv.j, &inv.disc]
        .map(format_rat)
        .join(",")
}

fn invariants(fmt: Format, q: Quartic) -> Result<String, Failure> {
    let inv = q.invariants();
    match fmt {
        Format::Json => json(&InvariantsOut {
            curve: (&q).into(),
            invariants: (&inv).into(),
        }),
        Format::Csv => Ok(format!("a,b,c,I,J,disc\n{}\n", csv_quartic_row(&q, &inv))),
        Format::Text => Ok(format!(
            "f = {}\nI = {}\nJ = {}\ndisc = {}\n",
            quartic_text(&q),
            format_rat(&inv.i),
            format_rat(&inv.j),
            format_rat(&inv.disc)
        )),
    }
}

fn decide(fmt: Format, q: Quartic) -> Result<String, Failure> {
    let verdict = ceresa::decide(&PicardCurve::new(q)?);
    match fmt {
        Format::Json => json(&VerdictJson::from(&verdict)),
        Format::Csv => {
            let row = csv_quartic_row(verdict.curve.quartic(), &verdict.invariants);
            let label = if verdict.chow.is_torsion() {
                "torsion"
            } else {
                "non-torsion"
            };
            let order = verdict
                .chow
                .point_order()
                .map(|n| n.to_string())
                .unwrap_or_default();
            Ok(format!("{}\n{row},{label},{order}\n", ceresa::CSV_HEADER))
        }
        Format::Text => {
            let inv = &verdict.invariants;
            Ok(format!(
                "C: y^3 = {}\nI = {}, J = {}, disc = {}\nE: {}\nP = {}\nchow: {}\ngriffiths: torsion\n",
                quartic_text(verdict.curve.quartic()),
                format_rat(&inv.i),
                format_rat(&inv.j),
                format_rat(&inv.disc),
                verdict.short_curve,
                verdict.point,
                chow_text(&verdict.chow),
            ))
        }
    }
}

fn torsion(fmt: Format, a: &Rat, b: &Rat, x: &Rat, y: &Rat) -> Result<String, Failure> {
    let curve = Curve::new(a.clone(), b.clone())?;
    let p = ECPoint::Affine(x.clone(), y.clone());
    let order = curve.torsion_order(&p)?;
    match fmt {
        Format::Json => json(&TorsionOut {
            curve: (&curve).into(),
            point: (&p).into(),
            torsion: order.is_some(),
            order,
        }),
        Format::Csv => Err(no_csv("torsion")),
        Format::Text => Ok(match order {
            Some(n) => format!("{p} on {curve} has order {n}\n"),
            None => format!("{p} on {curve} has infinite order\n"),
        }),
    }
}

fn family(fmt: Format, i: &Rat, j: &Rat, t: &Rat) -> Result<String, Failure> {
    let curve = ceresa::family_generate(i, j, t)?;
    let g = ceresa::family_g(i, j, t);
    let verdict = ceresa::decide(&curve);
    let inv = &verdict.invariants;
    let (i3, j2) = ceresa::twist_normalized(inv);
    match fmt {
        Format::Json => json(&FamilyOut {
            i: i.into(),
            j: j.into(),
            t: t.into(),
            g: (&g).into(),
            curve: QuarticJson::from(curve.quartic()),
            invariants: InvariantsJson::from(inv),
            i3_over_disc: (&i3).into(),
            j2_over_disc: (&j2).into(),
            chow: ChowJson::from(&verdict.chow),
        }),
        Format::Csv => Err(no_csv("family")),
        Format::Text => Ok(format!(
            "g = {}\nC: y^3 = {}\nI = {}, J = {}, disc = {}\nI^3/disc = {}, J^2/disc = {}\nchow: {}\n",
            format_rat(&g),
            quartic_text(curve.quartic()),
            format_rat(&inv.i),
            format_rat(&inv.j),
            format_rat(&inv.disc),
            format_rat(&i3),
            format_rat(&j2),
            chow_text(&verdict.chow),
        )),
    }
}

const E0_EQUATION: &str = "y^2 = 4x^3 - 27";

fn e0_torsion(fmt: Format) -> Result<String, Failure> {
    let pts = ceresa::e0_rational_torsion();
    match fmt {
        Format::Json => json(&E0TorsionOut {
            curve: E0_EQUATION.to_string(),
            points: pts.iter().map(Into::into).collect(),
        }),
        Format::Csv => Err(no_csv("e0-torsion")),
        Format::Text => {
            let list: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
            Ok(format!(
                "E0: {E0_EQUATION}\ntorsion: {{{}}}\n",
                list.join(", ")
            ))
        }
    }
}

fn bielliptic(fmt: Format, a: &Rat, c: &Rat) -> Result<String, Failure> {
    let chain = ceresa::bielliptic_chain(a, c)?;
    match fmt {
        Format::Json => json(&BiellipticOut::new(a, c, &chain)),
        Format::Csv => Err(no_csv("bielliptic")),
        Format::Text => Ok(format!(
            "Q = {} on y^2 = x^3 + {}\nphi(Q) = {}\n(4x, 8y) -> {}\nP = {}\nconsistent: {}\n",
            chain.q_f,
            format_rat(&chain.source_d),
            chain.image,
            chain.scaled,
            chain.p_f_short,
            if chain.consistent { "yes" } else { "no" },
        )),
    }
}

fn load_profile(profile_arg: &str) -> Result<ActionProfile, Failure> {
    let path = std::path::Path::new(profile_arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{profile_arg}: {e}")))?;
        return Ok(ActionProfile::from_json(&text)?);
    }
    if profile_arg.ends_with(".json") {
        return Err(Failure::Usage(format!(
            "profile file `{profile_arg}` not found"
        )));
    }
    Ok(repcrit::preset(profile_arg)?)
}

fn repcrit_cmd(
    fmt: Format,
    profile_arg: &str,
    criterion: Option<Criterion>,
) -> Result<String, Failure> {
    let profile = load_profile(profile_arg)?;
    if fmt == Format::Csv {
        return Err(no_csv("repcrit"));
    }
    match criterion {
        None => {
            let report = repcrit::criteria_report(&profile)?;
            match fmt {
                Format::Json => json(&RepcritOut {
                    profile: profile_arg.to_string(),
                    report,
                }),
                _ => Ok(format!(
                    "profile {profile_arg}: |G| = {}, genus {}\n\
                     dim (wedge^3 V)^G = {}\n\
                     dim (wedge^3 H^1)^G = {}\n\
                     dim (H^1)^G = {}\n\
                     dim (H^3_prim)^G = {}\n\
                     criterion a (rational equivalence): {}\n\
                     criterion b (algebraic equivalence): {}\n",
                    profile.group_order,
                    report.genus,
                    report.wedge3_v,
                    report.wedge3_h1,
                    report.h1_invariants,
                    report.h3_prim_invariants,
                    holds(report.thm_a),
                    holds(report.thm_b),
                )),
            }
        }
        Some(which) => {
            let (name, dim) = match which {
                Criterion::A => ("a", repcrit::h3_prim_invariants(&profile)?),
                Criterion::B => ("b", repcrit::dim_inv_wedge3(&profile, repcrit::Space::V)?),
            };
            let out = CriterionOut {
                profile: profile_arg.to_string(),
                criterion: name.to_string(),
                applies: dim == 0,
                dim,
            };
            match fmt {
                Format::Json => json(&out),
                _ => {
                    let space = if name == "a" { "H^3_prim" } else { "wedge^3 V" };
                    Ok(format!(
                        "criterion {name}: dim ({space})^G = {dim}: {}\n",
                        holds(out.applies)
                    ))
                }
            }
        }
    }
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn dihedral(fmt: Format, m: u64, a: u64, b: u64) -> Result<String, Failure> {
    let report = repcrit::dihedral_report(m, a, b)?;
    match fmt {
        Format::Json => json(&report),
        Format::Csv => Err(no_csv("dihedral")),
        Format::Text => Ok(match report.triple {
            Some((n1, n2, n3)) => format!(
                "genus {}; (⋀³V)^{{D_{m}}} ≠ 0: criterion fails (triple {n1}+{n2}+{n3})\n",
                report.genus
            ),
            None => format!(
                "genus {}; (⋀³V)^{{D_{m}}} = 0: criterion holds\n",
                report.genus
            ),
        }),
    }
}

fn strata_row(r: &StratumRecord) -> [String; 7] {
    let children: Vec<&str> = r.closure_children.iter().map(|c| c.as_str()).collect();
    [
        r.label.to_string(),
        r.dim.to_string(),
        if children.is_empty() {
            "-".into()
        } else {
            children.join(",")
        },
        r.in_vrat.to_string(),
        r.in_valg.to_string(),
        r.gap_label.clone().unwrap_or_else(|| "-".into()),
        r.model_equation.clone().unwrap_or_else(|| "-".into()),
    ]
}

fn strata_table_text(rows: &[StratumRecord]) -> String {
    let header = [
        "stratum", "dim", "closure", "V^rat", "V^alg", "gap", "model",
    ]
    .map(String::from);
    let body: Vec<[String; 7]> = rows.iter().map(strata_row).collect();
    let mut widths = header.clone().map(|h| h.chars().count());
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut s = String::new();
    for row in std::iter::once(&header).chain(&body) {
        let cells: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn strata_cmd(fmt: Format, group: Option<&str>, check: bool) -> Result<String, Failure> {
    if fmt == Format::Csv {
        return Err(no_csv("strata"));
    }
    if check {
        let violations = strata::violations(&strata::shipped_table(), &strata::shipped_evidence());
        let out = CheckOut {
            consistent: violations.is_empty(),
            violations,
        };
        let text = match fmt {
            Format::Json => json(&out)?,
            _ if out.consistent => "verdict table consistent\n".to_string(),
            _ => out
                .violations
                .iter()
                .map(|v| format!("violation: {v}\n"))
                .collect(),
        };
        if !out.consistent {
            return Err(Failure::Domain(ceresa_core::Error::Domain(format!(
                "strata table inconsistent\n{text}"
            ))));
        }
        return Ok(text);
    }
    match group {
        Some(g) => {
            let record = strata::stratum_info(g)?;
            match fmt {
                Format::Json => json(&record),
                _ => {
                    let [label, dim, closure, rat, alg, gap, model] = strata_row(&record);
                    Ok(format!(
                        "stratum: {label}\ndim: {dim}\nclosure: {closure}\nin V^rat: {rat}\n\
                         in V^alg: {alg}\ngap: {gap}\nmodel: {model}\n"
                    ))
                }
            }
        }
        None => {
            let table = strata::shipped_table();
            match fmt {
                Format::Json => json(&table),
                _ => Ok(strata_table_text(&table)),
            }
        }
    }
}

/// Worker count from `--threads` capped by `CERESA_KIT_THREADS`.
fn scan_threads(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    let cap = match std::env::var(THREADS_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| {
                    Failure::Usage(format!(
                        "{THREADS_ENV} must be a positive integer, got `{v}`"
                    ))
                })?,
        ),
        Err(_) => None,
    };
    if flag == Some(0) {
        return Err(Failure::Usage("--threads must be positive".into()));
    }
    Ok(match (flag, cap) {
        (Some(f), Some(c)) => Some(f.min(c)),
        (f, c) => f.or(c),
    })
}

fn scan_cmd(
    fmt: Format,
    ranges: [&String; 3],
    out: Option<&PathBuf>,
    threads: Option<usize>,
) -> Result<String, Failure> {
    let [a, b, c] = ranges.map(|r| ceresa::parse_range(r));
    let grid = ceresa::Grid::new(a?, b?, c?);
    let options = ScanOptions {
        threads: scan_threads(threads)?,
    };
    let records = ceresa::scan(&grid, &options)?;
    let body = match fmt {
        Format::Json => json(&records.iter().map(ScanRow::from).collect::<Vec<_>>())?,
        Format::Text | Format::Csv => ceresa::to_csv(&records),
    };
    match out {
        None => Ok(body),
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let count = |label: &str| {
                records
                    .iter()
                    .filter(|r| r.verdict_label() == label)
                    .count()
            };
            Ok(format!(
                "wrote {} rows to {} ({} torsion, {} non-torsion, {} skipped)\n",
                records.len(),
                path.display(),
                count("torsion"),
                count("non-torsion"),
                count("skipped"),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_text_folds_signs() {
        assert_eq!(
            quartic_text(&Quartic::from_ints(-12, 1, -12)),
            "x^4 - 12x^2 + x - 12"
        );
        assert_eq!(quartic_text(&Quartic::from_ints(0, 0, -1)), "x^4 - 1");
        let q = Quartic::new(
            Rat::new((-3).into(), 2.into()),
            Rat::from_integer(0.into()),
            Rat::new(1.into(), 36.into()),
        );
        assert_eq!(quartic_text(&q), "x^4 - (3/2)x^2 + 1/36");
    }

    #[test]
    fn threads_flag_without_cap() {
        if std::env::var(THREADS_ENV).is_err() {
            assert_eq!(scan_threads(Some(3)).unwrap(), Some(3));
            assert_eq!(scan_threads(None).unwrap(), None);
        }
        assert!(scan_threads(Some(0)).is_err());
    }
}
