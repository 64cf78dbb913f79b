use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{Rat, UPoly};

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `level`-th cyclotomic polynomial, obtained by dividing `x^L - 1` by
/// `Φ_d` for every proper divisor `d` of `L`.
pub fn cyclotomic_polynomial(level: u64) -> UPoly {
    assert!(level >= 1, "cyclotomic level must be positive");
    let mut table: BTreeMap<u64, UPoly> = BTreeMap::new();
    for d in divisors(level) {
        let mut phi = &UPoly::monomial(Rat::one(), d as usize) - &UPoly::from_ints(&[1]);
        for (e, phi_e) in &table {
            if d % e == 0 {
                let (q, r) = phi.div_rem(phi_e).expect("cyclotomic divisor is nonzero");
                debug_assert!(r.is_zero());
                phi = q;
            }
        }
        table.insert(d, phi);
    }
    table.remove(&level).expect("level is its own divisor")
}

/// An element of `Q(ζ_L)` stored as a polynomial in `ζ_L` of degree below
/// `φ(L)`, fully reduced modulo `Φ_L`.
#[derive(Clone)]
pub struct CycNum {
    level: u64,
    rep: UPoly,
    modulus: Arc<UPoly>,
}

impl CycNum {
    fn with_modulus(level: u64, rep: &UPoly, modulus: Arc<UPoly>) -> Self {
        let rep = rep.rem(&modulus).expect("cyclotomic modulus is nonzero");
        CycNum {
            level,
            rep,
            modulus,
        }
    }

    /// Reduces an arbitrary polynomial in `ζ_L`.
    pub fn from_poly(level: u64, rep: &UPoly) -> Self {
        Self::with_modulus(level, rep, Arc::new(cyclotomic_polynomial(level)))
    }

    pub fn from_rat(level: u64, q: Rat) -> Self {
        CycNum {
            level,
            rep: UPoly::constant(q),
            modulus: Arc::new(cyclotomic_polynomial(level)),
        }
    }

    /// `Σ_e counts[e] ζ_L^e`, for `counts` indexed by exponent mod `L`.
    pub fn from_exponent_counts<C>(level: u64, counts: &[C]) -> Self
    where
        C: Clone + Into<num_bigint::BigInt>,
    {
        let coeffs = counts
            .iter()
            .map(|c| Rat::from_integer(c.clone().into()))
            .collect();
        Self::from_poly(level, &UPoly::new(coeffs))
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn rep(&self) -> &UPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The same element viewed in `Q(ζ_M)` for a multiple `M` of the level,
    /// via `ζ_L = ζ_M^(M/L)`.
    pub fn lift(&self, level: u64) -> Self {
        assert!(
            level.is_multiple_of(self.level),
            "can only lift to a multiple of the level"
        );
        if level == self.level {
            return self.clone();
        }
        let k = (level / self.level) as usize;
        Self::from_poly(level, &self.rep.inflate(k))
    }

    fn align(&self, other: &Self) -> (Self, Self) {
        if self.level == other.level {
            return (self.clone(), other.clone());
        }
        let l = self.level.lcm(&other.level);
        (self.lift(l), other.lift(l))
    }

    pub fn scale(&self, q: &Rat) -> Self {
        CycNum {
            level: self.level,
            rep: self.rep.scale(q),
            modulus: self.modulus.clone(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = CycNum {
            level: self.level,
            rep: UPoly::constant(Rat::one()),
            modulus: self.modulus.clone(),
        };
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// The rational value, when the element lies in `Q`.
    pub fn to_rational(&self) -> Result<Rat> {
        match self.rep.degree() {
            None => Ok(Rat::zero()),
            Some(0) => Ok(self.rep.coeff(0)),
            Some(_) => Err(Error::NotRational),
        }
    }
}

/// `ζ_L^e`.
pub fn root_of_unity(level: u64, e: i64) -> CycNum {
    assert!(level >= 1, "cyclotomic level must be positive");
    let e = e.rem_euclid(level as i64) as usize;
    CycNum::from_poly(level, &UPoly::monomial(Rat::one(), e))
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.rep == other.rep;
        }
        let (a, b) = self.align(other);
        a.rep == b.rep
    }
}

impl Eq for CycNum {}

impl Add for &CycNum {
    type Output = CycNum;

    fn add(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.align(rhs);
        CycNum {
            level: a.level,
            rep: &a.rep + &b.rep,
            modulus: a.modulus,
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;

    fn sub(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.align(rhs);
        CycNum {
            level: a.level,
            rep: &a.rep - &b.rep,
            modulus: a.modulus,
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;

    fn mul(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.align(rhs);
        CycNum::with_modulus(a.level, &(&a.rep * &b.rep), a.modulus)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        CycNum {
            level: self.level,
            rep: -&self.rep,
            modulus: self.modulus.clone(),
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.level, self.rep)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // render in ζ rather than x
        let s = self.rep.to_string().replace('x', "ζ");
        f.write_str(&s)
    }
}
