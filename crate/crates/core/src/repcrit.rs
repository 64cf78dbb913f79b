//! Vanishing criteria from the action of a finite group `G` on
//! `V = H⁰(C, Ω¹)`.
//!
//! The input is an [`ActionProfile`]: for each conjugacy class its size and
//! the eigenvalues of a representative on `V`, written as exponents of a
//! primitive `L`-th root of unity. Invariant dimensions are class-size
//! weighted character averages evaluated exactly in `Q(ζ_L)`.
//!
//! * Griffiths-group criterion: `(∧³V)^G = 0`.
//! * Chow-group criterion: `H³_prim^G = 0`, computed as
//!   `dim (∧³H¹)^G − dim (H¹)^G` with `H¹ = V ⊕ V̄`.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::CycNum;
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub size: u64,
    pub exps: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionProfile {
    pub group_order: u64,
    pub level: u64,
    pub classes: Vec<ClassEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// `H⁰(C, Ω¹)`
    V,
    /// `H¹ = V ⊕ V̄`
    H1,
}

impl ActionProfile {
    pub fn new(group_order: u64, level: u64, classes: Vec<ClassEntry>) -> Result<Self> {
        let p = ActionProfile {
            group_order,
            level,
            classes,
        };
        p.validate()?;
        Ok(p)
    }

    /// Cyclic group of order `n` generated by an element with the given
    /// eigenvalue exponents at level `L`; one class per power `g^k`.
    pub fn cyclic(n: u64, level: u64, generator: &[i64]) -> Result<Self> {
        let classes = (0..n as i64)
            .map(|k| ClassEntry {
                size: 1,
                exps: generator
                    .iter()
                    .map(|e| (k * e).rem_euclid(level as i64))
                    .collect(),
            })
            .collect();
        Self::new(n, level, classes)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let p: ActionProfile =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("profile JSON: {e}")))?;
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedProfile(m));
        if self.group_order == 0 || self.level == 0 {
            return bad("group order and level must be positive".into());
        }
        if self.classes.is_empty() {
            return bad("no conjugacy classes".into());
        }
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.group_order {
            return bad(format!(
                "class sizes sum to {total}, group order is {}",
                self.group_order
            ));
        }
        if self.classes.iter().any(|c| c.size == 0) {
            return bad("empty conjugacy class".into());
        }
        let g = self.classes[0].exps.len();
        if self.classes.iter().any(|c| c.exps.len() != g) {
            return bad("eigenvalue lists have different lengths".into());
        }
        let l = self.level as i64;
        if !self
            .classes
            .iter()
            .any(|c| c.exps.iter().all(|e| e.rem_euclid(l) == 0))
        {
            return bad("identity class (all exponents 0) is missing".into());
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.classes[0].exps.len()
    }
}

/// Element of the group ring `Z[Z/L]`: multiplicities of each `ζ_L^e`.
#[derive(Clone, Debug)]
struct ExpCounts {
    counts: Vec<i128>,
}

impl ExpCounts {
    /// Multiset `{k·e mod L}`, i.e. the eigenvalues of `g^k`.
    fn powers(exps: &[i64], k: i64, level: u64) -> Self {
        let l = level as i64;
        let mut counts = vec![0i128; level as usize];
        for e in exps {
            counts[(k * e).rem_euclid(l) as usize] += 1;
        }
        ExpCounts { counts }
    }

    fn conv(&self, other: &Self) -> Self {
        let l = self.counts.len();
        let mut counts = vec![0i128; l];
        for (i, &x) in self.counts.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in other.counts.iter().enumerate().filter(|(_, y)| **y != 0) {
                counts[(i + j) % l] += x * y;
            }
        }
        ExpCounts { counts }
    }

    fn axpy(&mut self, k: i128, other: &Self) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += k * b;
        }
    }

    /// `6·χ_{∧³W}(g) = χ(g)³ − 3χ(g)χ(g²) + 2χ(g³)`
    fn wedge3_times6(exps: &[i64], level: u64) -> Self {
        let c1 = Self::powers(exps, 1, level);
        let c2 = Self::powers(exps, 2, level);
        let c3 = Self::powers(exps, 3, level);
        let mut out = c1.conv(&c1).conv(&c1);
        out.axpy(-3, &c1.conv(&c2));
        out.axpy(2, &c3);
        out
    }

    fn to_cyc(&self, level: u64) -> CycNum {
        let big: Vec<num_bigint::BigInt> = self.counts.iter().map(|&c| c.into()).collect();
        CycNum::from_exponent_counts(level, &big)
    }
}

fn space_exps(cls: &ClassEntry, space: Space) -> Vec<i64> {
    match space {
        Space::V => cls.exps.clone(),
        Space::H1 => cls
            .exps
            .iter()
            .copied()
            .chain(cls.exps.iter().map(|e| -e))
            .collect(),
    }
}

/// `χ_V(g^k) = Σᵢ ζ_L^(k·eᵢ)`.
pub fn char_power(cls: &ClassEntry, k: i64, level: u64) -> CycNum {
    ExpCounts::powers(&cls.exps, k, level).to_cyc(level)
}

fn averaged_dimension(
    profile: &ActionProfile,
    total: &ExpCounts,
    divisor: u64,
    what: &str,
) -> Result<u64> {
    let value = total
        .to_cyc(profile.level)
        .scale(&Rat::new(1.into(), (divisor * profile.group_order).into()))
        .to_rational()
        .map_err(|_| {
            Error::MalformedProfile(format!("{what}: character average is not rational"))
        })?;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::MalformedProfile(format!(
            "{what}: character average {value} is not a nonnegative integer"
        )));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::MalformedProfile(format!("{what}: dimension out of range")))
}

fn check(profile: &ActionProfile) -> Result<()> {
    profile.validate()?;
    if profile.genus() < 3 {
        return Err(Error::domain("dim V must be at least 3"));
    }
    Ok(())
}

/// `dim (∧³W)^G` for `W = V` or `W = H¹`.
pub fn dim_inv_wedge3(profile: &ActionProfile, space: Space) -> Result<u64> {
    check(profile)?;
    let mut total = ExpCounts {
        counts: vec![0; profile.level as usize],
    };
    for cls in &profile.classes {
        let w = ExpCounts::wedge3_times6(&space_exps(cls, space), profile.level);
        total.axpy(cls.size as i128, &w);
    }
    averaged_dimension(profile, &total, 6, "∧³ invariants")
}

/// `dim W^G`
pub fn dim_invariants(profile: &ActionProfile, space: Space) -> Result<u64> {
    profile.validate()?;
    let mut total = ExpCounts {
        counts: vec![0; profile.level as usize],
    };
    for cls in &profile.classes {
        total.axpy(
            cls.size as i128,
            &ExpCounts::powers(&space_exps(cls, space), 1, profile.level),
        );
    }
    averaged_dimension(profile, &total, 1, "invariants")
}

/// Whether `H⁰(J, Ω³)^G = (∧³V)^G` vanishes. The resulting vanishing of the
/// Ceresa class modulo algebraic equivalence is conditional on the Hodge
/// conjecture.
pub fn thm_b_applies(profile: &ActionProfile) -> Result<bool> {
    Ok(dim_inv_wedge3(profile, Space::V)? == 0)
}

/// `dim H³_prim^G = dim (∧³H¹)^G − dim (H¹)^G`.
pub fn h3_prim_invariants(profile: &ActionProfile) -> Result<u64> {
    let d3 = dim_inv_wedge3(profile, Space::H1)?;
    let d1 = dim_invariants(profile, Space::H1)?;
    d3.checked_sub(d1).ok_or_else(|| {
        Error::MalformedProfile(format!(
            "dim (∧³H¹)^G = {d3} is smaller than dim (H¹)^G = {d1}"
        ))
    })
}

/// Whether `H³_prim^G` vanishes, which forces the Ceresa class to vanish
/// modulo rational equivalence.
pub fn thm_a_applies(profile: &ActionProfile) -> Result<bool> {
    Ok(h3_prim_invariants(profile)? == 0)
}

/// All invariant dimensions for a profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub genus: usize,
    pub wedge3_v: u64,
    pub wedge3_h1: u64,
    pub h1_invariants: u64,
    pub h3_prim_invariants: u64,
    pub thm_a: bool,
    pub thm_b: bool,
}

pub fn criteria_report(profile: &ActionProfile) -> Result<CriteriaReport> {
    let wedge3_v = dim_inv_wedge3(profile, Space::V)?;
    let wedge3_h1 = dim_inv_wedge3(profile, Space::H1)?;
    let h1_invariants = dim_invariants(profile, Space::H1)?;
    let h3_prim = h3_prim_invariants(profile)?;
    Ok(CriteriaReport {
        genus: profile.genus(),
        wedge3_v,
        wedge3_h1,
        h1_invariants,
        h3_prim_invariants: h3_prim,
        thm_a: h3_prim == 0,
        thm_b: wedge3_v == 0,
    })
}

// ---------------------------------------------------------------------------
// Dihedral families y^m = ((x+1)/(x-1))^a ((x+t)/(x-t))^b

fn check_dihedral(m: u64, a: u64, b: u64) -> Result<()> {
    if !(0 < a && a < b && 2 * b < m) {
        return Err(Error::domain(format!(
            "need 0 < a < b < m/2, got (m, a, b) = ({m}, {a}, {b})"
        )));
    }
    if m.gcd(&a).gcd(&b) != 1 {
        return Err(Error::domain(format!(
            "gcd(m, a, b) must be 1 for ({m}, {a}, {b})"
        )));
    }
    Ok(())
}

/// `g = m + 1 − gcd(a, m) − gcd(b, m)`
pub fn dihedral_genus(m: u64, a: u64, b: u64) -> Result<u64> {
    check_dihedral(m, a, b)?;
    Ok(m + 1 - a.gcd(&m) - b.gcd(&m))
}

/// `ε(n) = 1` iff `m ∤ na` and `m ∤ nb`.
pub fn dihedral_epsilon(m: u64, a: u64, b: u64, n: u64) -> bool {
    !(n * a).is_multiple_of(m) && !(n * b).is_multiple_of(m)
}

/// The `n ∈ [1, m)` with `ε(n) = 1`: the characters `χⁿ` of `μ_m` on `V`.
pub fn dihedral_characters(m: u64, a: u64, b: u64) -> Result<Vec<u64>> {
    check_dihedral(m, a, b)?;
    Ok((1..m).filter(|&n| dihedral_epsilon(m, a, b, n)).collect())
}

/// Profile of the `μ_m` subgroup acting on `V(C_t)`.
pub fn dihedral_profile(m: u64, a: u64, b: u64) -> Result<ActionProfile> {
    let chars = dihedral_characters(m, a, b)?;
    let genus = dihedral_genus(m, a, b)?;
    assert_eq!(
        chars.len() as u64,
        genus,
        "character count disagrees with genus for ({m}, {a}, {b})"
    );
    let gen: Vec<i64> = chars.iter().map(|&n| n as i64).collect();
    ActionProfile::cyclic(m, m, &gen)
}

/// First `n₁ < n₂ < n₃` with all `ε(nᵢ) = 1` and `n₁ + n₂ + n₃ = m`.
pub fn dihedral_triple(m: u64, a: u64, b: u64) -> Result<Option<(u64, u64, u64)>> {
    let chars = dihedral_characters(m, a, b)?;
    for (i, &n1) in chars.iter().enumerate() {
        for (j, &n2) in chars.iter().enumerate().skip(i + 1) {
            for &n3 in chars.iter().skip(j + 1) {
                if n1 + n2 + n3 == m {
                    return Ok(Some((n1, n2, n3)));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralReport {
    pub m: u64,
    pub a: u64,
    pub b: u64,
    pub genus: u64,
    pub characters: Vec<u64>,
    pub triple: Option<(u64, u64, u64)>,
    /// `dim (∧³V)^{μ_m}`
    pub invariant_dim: u64,
    pub vanishing: bool,
}

/// Decides `(∧³V)^{D_m} = 0` by the triple criterion and cross-checks it
/// against the `μ_m` invariant dimension.
pub fn dihedral_report(m: u64, a: u64, b: u64) -> Result<DihedralReport> {
    let genus = dihedral_genus(m, a, b)?;
    if genus < 3 {
        return Err(Error::domain(format!(
            "genus {genus} < 3 for ({m}, {a}, {b})"
        )));
    }
    let triple = dihedral_triple(m, a, b)?;
    let invariant_dim = dim_inv_wedge3(&dihedral_profile(m, a, b)?, Space::V)?;
    let vanishing = triple.is_none();
    assert_eq!(
        vanishing,
        invariant_dim == 0,
        "triple criterion and μ_m invariants disagree for ({m}, {a}, {b})"
    );
    Ok(DihedralReport {
        m,
        a,
        b,
        genus,
        characters: dihedral_characters(m, a, b)?,
        triple,
        invariant_dim,
        vanishing,
    })
}

pub fn dihedral_vanishing(m: u64, a: u64, b: u64) -> Result<bool> {
    dihedral_report(m, a, b).map(|r| r.vanishing)
}

// ---------------------------------------------------------------------------
// Presets

pub const PRESET_NAMES: &[&str] = &["picard_c3", "c9_x4px", "klein_c7", "dihedral:m,a,b"];

/// `μ₃` on a Picard curve: `V ≃ χ ⊕ χ ⊕ χ²`.
pub fn picard_c3() -> ActionProfile {
    ActionProfile::cyclic(3, 3, &[1, 1, 2]).expect("valid preset")
}

/// `C₉` on `y³ = x⁴ + x` via `(x, y) ↦ (ζ₉³x, ζ₉y)`, acting on the basis
/// `dx/y², x dx/y², dx/y`.
pub fn c9_x4px() -> ActionProfile {
    ActionProfile::cyclic(9, 9, &[1, 4, 2]).expect("valid preset")
}

/// An order-7 subgroup of the automorphisms of the Klein quartic.
pub fn klein_c7() -> ActionProfile {
    ActionProfile::cyclic(7, 7, &[1, 2, 4]).expect("valid preset")
}

pub fn preset(name: &str) -> Result<ActionProfile> {
    match name {
        "picard_c3" => Ok(picard_c3()),
        "c9_x4px" => Ok(c9_x4px()),
        "klein_c7" => Ok(klein_c7()),
        _ => {
            let Some(args) = name.strip_prefix("dihedral:") else {
                return Err(Error::Parse(format!(
                    "unknown preset `{name}` (known: {})",
                    PRESET_NAMES.join(", ")
                )));
            };
            let nums: Vec<u64> = args
                .split(',')
                .map(|t| t.trim().parse::<u64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad dihedral preset `{name}`")))?;
            match nums[..] {
                [m, a, b] => dihedral_profile(m, a, b),
                _ => Err(Error::Parse(format!(
                    "dihedral preset needs m,a,b: `{name}`"
                ))),
            }
        }
    }
}
