//! Arithmetic in the prime field `F_p` and on the projective line
//! `F_p ∪ {∞}`, including cross-ratio evaluation.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A field element, a residue in `[0, p)`.
///
/// Kept as a bare `u32`; every operation goes through [`Prime`], which owns
/// the modulus and normalises its results. `p < 2^31`, so a product of two
/// residues fits a `u64` with room to add another product.
pub type Elem = u32;

/// An odd prime modulus below `2^31`.
///
/// Construction runs a deterministic primality check (trial division —
/// exact at this scale). Copyable context object for all `F_p` arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= (1 << 31) || p % 2 == 0 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 3u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p));
            }
            d += 2;
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn elem(self, v: i64) -> Elem {
        let p = self.0 as i64;
        (v.rem_euclid(p)) as Elem
    }

    #[inline]
    pub fn add(self, a: Elem, b: Elem) -> Elem {
        let s = a as u64 + b as u64;
        let p = self.0 as u64;
        if s >= p { (s - p) as Elem } else { s as Elem }
    }

    #[inline]
    pub fn sub(self, a: Elem, b: Elem) -> Elem {
        let p = self.0 as u64;
        ((a as u64 + p - b as u64) % p) as Elem
    }

    #[inline]
    pub fn neg(self, a: Elem) -> Elem {
        if a == 0 { 0 } else { self.0 - a }
    }

    #[inline]
    pub fn mul(self, a: Elem, b: Elem) -> Elem {
        ((a as u64 * b as u64) % self.0 as u64) as Elem
    }

    pub fn pow(self, mut base: Elem, mut exp: u64) -> Elem {
        let mut acc: Elem = 1;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; errors on 0.
    pub fn inv(self, x: Elem) -> Result<Elem> {
        if x % self.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        // p prime, so x^(p-2) = x^-1.
        Ok(self.pow(x, self.0 as u64 - 2))
    }

    #[inline]
    pub fn div(self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Table of inverses for all of `[1, p)`; index 0 is unused (set to 0).
    ///
    /// Built in O(p) by the standard recurrence `inv(i) = -(p/i)·inv(p mod i)`.
    pub fn inverse_table(self) -> Vec<Elem> {
        let p = self.0 as usize;
        let mut inv = vec![0 as Elem; p];
        if p > 1 {
            inv[1] = 1;
            for i in 2..p {
                let q = (self.0 / i as u32) as u64;
                let r = (self.0 % i as u32) as usize;
                inv[i] = ((self.0 as u64 - (q * inv[r] as u64) % self.0 as u64)
                    % self.0 as u64) as Elem;
            }
        }
        inv
    }

    /// Prime factors of `p - 1`, ascending, without multiplicity.
    pub fn factor_pm1(self) -> Vec<u32> {
        let mut n = self.0 - 1;
        let mut out = Vec::new();
        let mut d = 2u32;
        while (d as u64) * (d as u64) <= n as u64 {
            if n % d == 0 {
                out.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    /// Smallest primitive root of `F_p`, by trial over the factored p-1.
    pub fn primitive_root(self) -> Elem {
        let pm1 = self.0 as u64 - 1;
        let factors = self.factor_pm1();
        'g: for g in 2..self.0 {
            for &q in &factors {
                if self.pow(g, pm1 / q as u64) == 1 {
                    continue 'g;
                }
            }
            return g;
        }
        unreachable!("every prime field has a primitive root")
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(v: u64) -> Result<Self> {
        Prime::new(v)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0 as u64
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A point of the projective line `F_p ∪ {∞}`.
///
/// Used for slopes of directions through the origin and for cross-ratio
/// arguments pinned at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    Finite(Elem),
    Infinity,
}

impl ProjPoint {
    /// Homogeneous coordinates `(x0 : x1)` with `x ↦ (x : 1)`, `∞ ↦ (1 : 0)`.
    #[inline]
    fn homogeneous(self) -> (Elem, Elem) {
        match self {
            ProjPoint::Finite(x) => (x, 1),
            ProjPoint::Infinity => (1, 0),
        }
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProjPoint::Finite(x) => write!(f, "{x}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// The bracket `⟨a, b⟩ = a0·b1 − a1·b0` on homogeneous coordinates.
///
/// For finite points this is `a − b`; it vanishes exactly when the two
/// projective points coincide.
fn bracket(p: Prime, a: ProjPoint, b: ProjPoint) -> Elem {
    let (a0, a1) = a.homogeneous();
    let (b0, b1) = b.homogeneous();
    p.sub(p.mul(a0, b1), p.mul(a1, b0))
}

/// Cross-ratio `[a,b,c,d] = (a−b)(c−d) / ((a−c)(b−d))` of four pairwise
/// distinct points of the projective line.
///
/// Implemented on homogeneous brackets, so an `∞` argument is handled by
/// exact factor cancellation rather than a limit: `[a,b,c,∞] = (a−b)/(a−c)`
/// and so on. The value of a pairwise distinct quadruple is always a finite
/// element, never 0 or 1.
pub fn cross_ratio(p: Prime, a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> Result<Elem> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::DegenerateQuadruple);
            }
        }
    }
    let num = p.mul(bracket(p, a, b), bracket(p, c, d));
    let den = p.mul(bracket(p, a, c), bracket(p, b, d));
    // den != 0: all pairwise brackets of distinct points are nonzero.
    p.div(num, den)
}

/// Cross-ratio of four finite field elements.
pub fn cross_ratio_elems(p: Prime, a: Elem, b: Elem, c: Elem, d: Elem) -> Result<Elem> {
    cross_ratio(
        p,
        ProjPoint::Finite(a),
        ProjPoint::Finite(b),
        ProjPoint::Finite(c),
        ProjPoint::Finite(d),
    )
}
