use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{decide, CeresaVerdict, ChowVerdict, PicardCurve};
use crate::error::{Error, Result};
use crate::exactmath::{format_rat, parse_rat};
use crate::{Invariants, Quartic, Rat};

pub const CSV_HEADER: &str = "a,b,c,I,J,disc,verdict,point_order";

/// Upper bound on the number of values a single range may expand to.
const MAX_RANGE_LEN: usize = 100_000;

/// Cartesian grid of coefficient values, scanned in lexicographic
/// `(a, b, c)` order.
#[derive(Clone, Debug, Default)]
pub struct Grid {
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
    pub c: Vec<Rat>,
}

impl Grid {
    pub fn new(a: Vec<Rat>, b: Vec<Rat>, c: Vec<Rat>) -> Self {
        Grid { a, b, c }
    }

    pub fn len(&self) -> usize {
        self.a.len() * self.b.len() * self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn points(&self) -> Vec<Quartic> {
        let mut out = Vec::with_capacity(self.len());
        for a in &self.a {
            for b in &self.b {
                for c in &self.c {
                    out.push(Quartic::new(a.clone(), b.clone(), c.clone()));
                }
            }
        }
        out
    }
}

/// Parses one axis of a grid: a single value `v`, a list `v1,v2,...`, or an
/// inclusive range `lo..hi` with optional step `lo..hi:step` (default 1).
pub fn parse_range(s: &str) -> Result<Vec<Rat>> {
    let s = s.trim();
    if let Some((lo, rest)) = s.split_once("..") {
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (hi, parse_rat(step)?),
            None => (rest, Rat::from_integer(1.into())),
        };
        let lo = parse_rat(lo)?;
        let hi = parse_rat(hi)?;
        if !step.is_positive() {
            return Err(Error::Parse(format!(
                "range step must be positive in `{s}`"
            )));
        }
        let mut out = Vec::new();
        let mut v = lo;
        while v <= hi {
            if out.len() >= MAX_RANGE_LEN {
                return Err(Error::Parse(format!("range `{s}` is too long")));
            }
            out.push(v.clone());
            v += &step;
        }
        return Ok(out);
    }
    s.split(',').map(parse_rat).collect()
}

#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

#[derive(Clone, Debug)]
pub enum ScanOutcome {
    Decided(ChowVerdict),
    /// The grid point lies on the discriminant locus.
    Skipped,
}

#[derive(Clone, Debug)]
pub struct ScanRecord {
    pub quartic: Quartic,
    pub invariants: Invariants,
    pub outcome: ScanOutcome,
}

impl ScanRecord {
    fn evaluate(q: Quartic) -> Self {
        let invariants = q.invariants();
        let outcome = if invariants.disc.is_zero() {
            ScanOutcome::Skipped
        } else {
            let curve = PicardCurve::new(q.clone()).expect("disc ≠ 0");
            let CeresaVerdict { chow, .. } = decide(&curve);
            ScanOutcome::Decided(chow)
        };
        ScanRecord {
            quartic: q,
            invariants,
            outcome,
        }
    }

    pub fn verdict_label(&self) -> &'static str {
        match self.outcome {
            ScanOutcome::Decided(ChowVerdict::Torsion { .. }) => "torsion",
            ScanOutcome::Decided(ChowVerdict::NonTorsion) => "non-torsion",
            ScanOutcome::Skipped => "skipped",
        }
    }

    pub fn point_order(&self) -> Option<u32> {
        match self.outcome {
            ScanOutcome::Decided(v) => v.point_order(),
            ScanOutcome::Skipped => None,
        }
    }

    pub fn csv_line(&self) -> String {
        let q = &self.quartic;
        let inv = &self.invariants;
        format!(
            "{},{},{},{},{},{},{},{}",
            format_rat(&q.a),
            format_rat(&q.b),
            format_rat(&q.c),
            format_rat(&inv.i),
            format_rat(&inv.j),
            format_rat(&inv.disc),
            self.verdict_label(),
            self.point_order()
                .map(|n| n.to_string())
                .unwrap_or_default(),
        )
    }
}

/// Decides every grid point. Records come back in grid order whatever the
/// thread count.
pub fn scan(grid: &Grid, options: &ScanOptions) -> Result<Vec<ScanRecord>> {
    if grid.is_empty() {
        return Err(Error::domain("empty scan grid"));
    }
    let points = grid.points();
    let run =
        move || -> Vec<ScanRecord> { points.into_par_iter().map(ScanRecord::evaluate).collect() };
    match options.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::domain(format!("cannot start scan workers: {e}")))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}

pub fn to_csv(records: &[ScanRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&n| Rat::from_integer(n.into())).collect()
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-2..1").unwrap(), ints(&[-2, -1, 0, 1]));
        assert_eq!(parse_range("3").unwrap(), ints(&[3]));
        assert_eq!(parse_range("1,5,-7").unwrap(), ints(&[1, 5, -7]));
        assert_eq!(
            parse_range("0..1:1/2").unwrap(),
            vec![
                Rat::from_integer(0.into()),
                Rat::new(1.into(), 2.into()),
                Rat::from_integer(1.into())
            ]
        );
        assert!(parse_range("0..1:0").is_err());
        assert!(parse_range("x").is_err());
        assert!(parse_range("2..1").unwrap().is_empty());
    }

    #[test]
    fn picard_family_grid() {
        let grid = Grid::new(ints(&[-12]), ints(&[1, 2, 3]), ints(&[-12]));
        let recs = scan(&grid, &ScanOptions::default()).unwrap();
        assert_eq!(recs.len(), 3);
        assert!(recs.iter().all(|r| r.point_order() == Some(3)));
    }

    #[test]
    fn single_point_non_torsion() {
        let grid = Grid::new(ints(&[1]), ints(&[0]), ints(&[1]));
        let recs = scan(&grid, &ScanOptions::default()).unwrap();
        assert_eq!(recs[0].verdict_label(), "non-torsion");
        assert_eq!(recs[0].csv_line(), "1,0,1,13,70,144,non-torsion,");
    }

    #[test]
    fn discriminant_locus_is_skipped() {
        let grid = Grid::new(ints(&[0]), ints(&[0]), ints(&[0, -1]));
        let recs = scan(&grid, &ScanOptions { threads: Some(2) }).unwrap();
        assert_eq!(recs[0].verdict_label(), "skipped");
        assert_eq!(recs[1].point_order(), Some(2));
        assert_eq!(recs[0].csv_line(), "0,0,0,0,0,0,skipped,");
    }

    #[test]
    fn empty_grid_is_an_error() {
        let grid = Grid::new(vec![], ints(&[1]), ints(&[1]));
        assert!(scan(&grid, &ScanOptions::default()).is_err());
    }
}
