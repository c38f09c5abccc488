//! The pinned-ratio expander `R[A]`, the full cross-ratio set `C[A]`, their
//! symmetries, cross-ratio energies, and growth monitors.
//!
//! Two pinned-ratio variants are kept side by side: the inclusive one
//! allows the two moving points to coincide (so `1` is always a value,
//! `0` never is), and the strict one requires all three points pairwise
//! distinct. The involution `R = 1 − R` and the containment in `C[A]` are
//! exact only for the strict variant; the inclusive variant is the strict
//! one plus `{1}`.

use crate::field::{cross_ratio_elems, Elem};
use crate::sets::FpSet;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

/// Pinned-ratio variant selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioVariant {
    /// `{(b−a)/(c−a) : b, c ≠ a}`, `b = c` allowed.
    Inclusive,
    /// `{(b−a)/(c−a) : a, b, c pairwise distinct}`.
    Strict,
}

/// The set of pinned ratios `(b−a)/(c−a)` over triples of `A`.
///
/// Needs `|A| ≥ 2` (inclusive) or `|A| ≥ 3` (strict). `O(|A|³)`.
pub fn pinned_ratios(a: &FpSet, variant: RatioVariant) -> Result<FpSet> {
    let need = match variant {
        RatioVariant::Inclusive => 2,
        RatioVariant::Strict => 3,
    };
    if a.len() < need {
        return Err(Error::TooSmall { need, got: a.len() });
    }
    let p = a.prime();
    let inv = p.inverse_table();
    let mut out = Vec::new();
    for pin in a.iter() {
        for c in a.iter() {
            if c == pin {
                continue;
            }
            let r = inv[p.sub(c, pin) as usize];
            for b in a.iter() {
                if b == pin || (variant == RatioVariant::Strict && b == c) {
                    continue;
                }
                out.push(p.mul(p.sub(b, pin), r));
            }
        }
    }
    Ok(FpSet::new(p, out))
}

/// `C[A]`: cross-ratios of all pairwise distinct quadruples of `A`.
/// `O(|A|⁴)`; needs `|A| ≥ 4`.
pub fn cross_ratio_set(a: &FpSet) -> Result<FpSet> {
    if a.len() < 4 {
        return Err(Error::TooSmall { need: 4, got: a.len() });
    }
    let p = a.prime();
    let v: Vec<Elem> = a.iter().collect();
    let mut out = Vec::new();
    for (i, &x) in v.iter().enumerate() {
        for (j, &y) in v.iter().enumerate() {
            if j == i {
                continue;
            }
            for (k, &z) in v.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                for (l, &w) in v.iter().enumerate() {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    out.push(cross_ratio_elems(p, x, y, z, w).expect("pairwise distinct"));
                }
            }
        }
    }
    Ok(FpSet::new(p, out))
}

/// `{(x − a)^{-1} : x ∈ A, x ≠ a}` — the inverted punctured shift used by
/// the cross-ratio energy decomposition.
pub fn inverted_shift(a: &FpSet, pin: Elem) -> FpSet {
    let p = a.prime();
    FpSet::new(
        p,
        a.iter()
            .filter(move |&x| x != pin)
            .map(move |x| p.inv(p.sub(x, pin)).expect("nonzero")),
    )
}

/// Multiset of pinned ratios over pairwise distinct triples, keyed by value.
fn strict_ratio_census(a: &FpSet) -> BTreeMap<Elem, u64> {
    let p = a.prime();
    let inv = p.inverse_table();
    let mut counts = BTreeMap::new();
    for pin in a.iter() {
        for c in a.iter() {
            if c == pin {
                continue;
            }
            let r = inv[p.sub(c, pin) as usize];
            for b in a.iter() {
                if b == pin || b == c {
                    continue;
                }
                *counts.entry(p.mul(p.sub(b, pin), r)).or_insert(0) += 1;
            }
        }
    }
    counts
}

/// `E_R(A,B)`: solutions of `(a₁−a)/(a₂−a) = (b₁−b)/(b₂−b)` over pairwise
/// distinct triples of `A` and of `B` (the distinctness implicit in the
/// ratios — it is what makes the decomposition identity below exact).
pub fn ratio_energy(a: &FpSet, b: &FpSet) -> u128 {
    let ca = strict_ratio_census(a);
    let cb = strict_ratio_census(b);
    ca.iter()
        .map(|(v, &m)| m as u128 * cb.get(v).copied().unwrap_or(0) as u128)
        .sum()
}

/// `E_C(A)`: solutions of `[a,b,c,d] = [a',b',c',d']` over pairwise
/// distinct quadruples on both sides.
pub fn cross_ratio_energy(a: &FpSet, budget: u64) -> Result<u128> {
    let n = a.len() as u64;
    let cost = n.saturating_pow(4);
    if cost > budget {
        return Err(Error::BudgetExceeded { cost, budget });
    }
    if a.len() < 4 {
        return Ok(0);
    }
    let p = a.prime();
    let v: Vec<Elem> = a.iter().collect();
    let mut counts: BTreeMap<Elem, u64> = BTreeMap::new();
    for (i, &x) in v.iter().enumerate() {
        for (j, &y) in v.iter().enumerate() {
            if j == i {
                continue;
            }
            for (k, &z) in v.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                for (l, &w) in v.iter().enumerate() {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    *counts
                        .entry(cross_ratio_elems(p, x, y, z, w).expect("pairwise distinct"))
                        .or_insert(0) += 1;
                }
            }
        }
    }
    Ok(counts.values().map(|&c| c as u128 * c as u128).sum())
}

/// Both cross-ratio energies `(E_R(A,B), E_C(A))`.
///
/// The decomposition `E_C(A) = Σ_{a,b∈A} E_R((A−a)^{-1}, (A−b)^{-1})` holds
/// exactly with these conventions and is asserted in the tests.
pub fn cross_ratio_energies(a: &FpSet, b: &FpSet, budget: u64) -> Result<(u128, u128)> {
    let n = a.len().max(b.len()) as u64;
    let cost = n.saturating_pow(6);
    if cost > budget {
        return Err(Error::BudgetExceeded { cost, budget });
    }
    Ok((ratio_energy(a, b), cross_ratio_energy(a, budget)?))
}

/// Per-instance growth record for the pinned-ratio set.
#[derive(Clone, Debug, Serialize)]
pub struct RatioGrowthRecord {
    pub p: u64,
    pub set_size: u64,
    pub ratio_set_size: u64,
    /// `small` when `|A| ≤ p^{5/12}`, `large` when `|A| ≥ p^{3/5}`, else
    /// `intermediate`.
    pub regime: String,
    /// `|R| · log^{8/15}|A| / |A|^{8/5}`.
    pub small_constant: f64,
    /// `|R| / min(p, |A|^{5/2}/p^{1/2})`.
    pub large_constant: f64,
    /// `|R| / min(p, |A|^{3/2+1/22} · log^{-4/9}|A|)`.
    pub uniform_constant: f64,
}

/// Compute `R[A]` (inclusive variant) and the implied constants of the
/// three growth bounds it is monitored against.
pub fn ratio_growth_monitor(a: &FpSet) -> Result<RatioGrowthRecord> {
    if a.len() < 3 {
        return Err(Error::TooSmall { need: 3, got: a.len() });
    }
    let r = pinned_ratios(a, RatioVariant::Inclusive)?;
    let p = a.prime().get() as f64;
    let n = a.len() as f64;
    let rs = r.len() as f64;
    let ln = n.ln();
    let regime = if n <= p.powf(5.0 / 12.0) {
        "small"
    } else if n >= p.powf(3.0 / 5.0) {
        "large"
    } else {
        "intermediate"
    };
    Ok(RatioGrowthRecord {
        p: a.prime().get() as u64,
        set_size: a.len() as u64,
        ratio_set_size: r.len() as u64,
        regime: regime.to_string(),
        small_constant: rs * ln.powf(8.0 / 15.0) / n.powf(1.6),
        large_constant: rs / p.min(n.powf(2.5) / p.sqrt()),
        uniform_constant: rs / p.min(n.powf(1.5 + 1.0 / 22.0) * ln.powf(-4.0 / 9.0)),
    })
}
