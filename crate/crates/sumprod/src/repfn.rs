//! Representation functions and additive/multiplicative energies.
//!
//! The multiplicative energies use the cross-multiplied convention
//! `a·b' = a'·b` rather than ratio equality, so they stay defined when a
//! set contains 0. Under this convention the shifted multiplicative energy
//! of `(A−a, A−b)` counts exactly the ordered pairs (triples) of points of
//! `A×A` collinear with the pivot `(a,b)`, which is what makes the
//! triple/quadruple identities in [`crate::triples`] exact; see the
//! oracle tests there.

use crate::field::Elem;
use crate::sets::{FpSet, SetOp};
use serde::Serialize;
use std::collections::BTreeMap;

/// A sparse multiset `value → count` with its total mass.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RepFn {
    counts: BTreeMap<Elem, u64>,
    total: u128,
}

impl RepFn {
    pub fn from_counts(counts: BTreeMap<Elem, u64>) -> Self {
        let total = counts.values().map(|&c| c as u128).sum();
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        RepFn { counts, total }
    }

    pub fn get(&self, x: Elem) -> u64 {
        self.counts.get(&x).copied().unwrap_or(0)
    }

    /// Total mass `Σ_x r(x)`.
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    pub fn support(&self) -> impl Iterator<Item = Elem> + '_ {
        self.counts.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Elem, u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// `Σ_x r(x)^k` in exact integers.
    pub fn moment(&self, k: u32) -> u128 {
        self.counts.values().map(|&c| (c as u128).pow(k)).sum()
    }

    /// `Σ_x r(x)^(3/2)` in double precision.
    pub fn moment_three_halves(&self) -> f64 {
        self.counts.values().map(|&c| (c as f64).powf(1.5)).sum()
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, u64> =
            self.counts.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        serde_json::to_string(&map).expect("repfn serialisation cannot fail")
    }
}

/// `r_{A∘B}(x) = #{(a,b) ∈ A×B : a ∘ b = x}`.
///
/// For `Ratio`, pairs with `b = 0` are skipped, so the total mass is
/// `|A|·|B|` minus the skipped pairs.
pub fn rep_fn(a: &FpSet, b: &FpSet, op: SetOp) -> RepFn {
    assert_eq!(a.prime(), b.prime());
    let p = a.prime();
    let mut dense = vec![0u64; p.get() as usize];
    match op {
        SetOp::Sum => {
            for x in a.iter() {
                for y in b.iter() {
                    dense[p.add(x, y) as usize] += 1;
                }
            }
        }
        SetOp::Diff => {
            for x in a.iter() {
                for y in b.iter() {
                    dense[p.sub(x, y) as usize] += 1;
                }
            }
        }
        SetOp::Prod => {
            for x in a.iter() {
                for y in b.iter() {
                    dense[p.mul(x, y) as usize] += 1;
                }
            }
        }
        SetOp::Ratio => {
            let inv = p.inverse_table();
            for y in b.iter() {
                if y == 0 {
                    continue;
                }
                let iy = inv[y as usize];
                for x in a.iter() {
                    dense[p.mul(x, iy) as usize] += 1;
                }
            }
        }
    }
    RepFn::from_counts(
        dense
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(x, c)| (x as Elem, c))
            .collect(),
    )
}

/// Direction-class census of the pair set `X×Y ⊂ F_p²`, the common core of
/// the cross-multiplied multiplicative energies.
///
/// Two pairs satisfy `x·y' = x'·y` exactly when they are linearly dependent
/// as vectors, so the energy is read off the sizes of the parallel classes:
/// the zero vector (present iff `0 ∈ X` and `0 ∈ Y`) is dependent with
/// everything.
struct DirectionCensus {
    /// Sizes of the nonzero parallel classes.
    class_sizes: Vec<u64>,
    /// 1 if the zero vector occurs in X×Y, else 0.
    zero: u64,
    /// |X|·|Y|.
    mass: u64,
}

fn direction_census(x: &FpSet, y: &FpSet) -> DirectionCensus {
    assert_eq!(x.prime(), y.prime());
    let p = x.prime();
    let inv = p.inverse_table();
    // class index: slope v/u in [0,p) for u != 0; p for vertical (u = 0, v != 0)
    let mut counts = vec![0u64; p.get() as usize + 1];
    let mut zero = 0u64;
    for u in x.iter() {
        if u == 0 {
            for v in y.iter() {
                if v == 0 {
                    zero += 1;
                } else {
                    counts[p.get() as usize] += 1;
                }
            }
        } else {
            let iu = inv[u as usize];
            for v in y.iter() {
                counts[p.mul(v, iu) as usize] += 1;
            }
        }
    }
    DirectionCensus {
        class_sizes: counts.into_iter().filter(|&c| c > 0).collect(),
        zero,
        mass: x.len() as u64 * y.len() as u64,
    }
}

impl DirectionCensus {
    /// `#{(x,x',y,y') : x·y' = x'·y}`.
    fn energy2(&self) -> u128 {
        let pairs: u128 = self.class_sizes.iter().map(|&c| (c as u128) * (c as u128)).sum();
        pairs + self.zero as u128 * (2 * self.mass as u128 - 1)
    }

    /// `#{(x1,x2,x3,y1,y2,y3) : xi·yj = xj·yi for all pairs (i,j)}`.
    ///
    /// All three pairwise conditions are required; with zero rows the
    /// two-condition chain is strictly weaker.
    fn energy3(&self) -> u128 {
        let cubes: u128 = self.class_sizes.iter().map(|&c| (c as u128).pow(3)).sum();
        let squares: u128 = self.class_sizes.iter().map(|&c| (c as u128) * (c as u128)).sum();
        cubes + self.zero as u128 * (3 * squares + 3 * self.mass as u128 - 2)
    }
}

/// Additive energy `E(A,B) = #{(a,a',b,b') : a+b = a'+b'}`.
pub fn additive_energy(a: &FpSet, b: &FpSet) -> u128 {
    rep_fn(a, b, SetOp::Sum).moment(2)
}

/// Third additive energy `E₃(A,B) = #{a1−b1 = a2−b2 = a3−b3}`.
pub fn additive_energy3(a: &FpSet, b: &FpSet) -> u128 {
    rep_fn(a, b, SetOp::Diff).moment(3)
}

/// `E_{3/2}(A,B) = Σ_d r_{A−B}(d)^{3/2}`, the only non-integer energy.
pub fn additive_energy_three_halves(a: &FpSet, b: &FpSet) -> f64 {
    rep_fn(a, b, SetOp::Diff).moment_three_halves()
}

/// Multiplicative energy, cross-multiplied and zero-aware.
pub fn mult_energy(a: &FpSet, b: &FpSet) -> u128 {
    direction_census(a, b).energy2()
}

/// Third multiplicative energy, all-pairs proportionality, zero-aware.
pub fn mult_energy3(a: &FpSet, b: &FpSet) -> u128 {
    direction_census(a, b).energy3()
}

/// `Σ_d r_{A*/B*}(d)^{3/2}` over the zero-stripped sets (the group form —
/// a 3/2 moment has no zero-aware extension that keeps Hölder exact).
pub fn mult_energy_three_halves(a: &FpSet, b: &FpSet) -> f64 {
    let (a, b) = (a.without_zero(), b.without_zero());
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    rep_fn(&a, &b, SetOp::Ratio).moment_three_halves()
}

/// Energy kind selector for the generic dispatcher.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergyKind {
    Additive,
    Multiplicative,
}

/// Moment order selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergyOrder {
    Two,
    Three,
    ThreeHalves,
}

/// Exact or floating energy value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EnergyValue {
    Count(u128),
    Real(f64),
}

impl EnergyValue {
    pub fn as_f64(self) -> f64 {
        match self {
            EnergyValue::Count(c) => c as f64,
            EnergyValue::Real(r) => r,
        }
    }
}

impl std::fmt::Display for EnergyValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EnergyValue::Count(c) => write!(f, "{c}"),
            EnergyValue::Real(r) => write!(f, "{r}"),
        }
    }
}

/// Dispatcher over kind and order.
pub fn energy(a: &FpSet, b: &FpSet, kind: EnergyKind, order: EnergyOrder) -> EnergyValue {
    match (kind, order) {
        (EnergyKind::Additive, EnergyOrder::Two) => EnergyValue::Count(additive_energy(a, b)),
        (EnergyKind::Additive, EnergyOrder::Three) => EnergyValue::Count(additive_energy3(a, b)),
        (EnergyKind::Additive, EnergyOrder::ThreeHalves) => {
            EnergyValue::Real(additive_energy_three_halves(a, b))
        }
        (EnergyKind::Multiplicative, EnergyOrder::Two) => EnergyValue::Count(mult_energy(a, b)),
        (EnergyKind::Multiplicative, EnergyOrder::Three) => EnergyValue::Count(mult_energy3(a, b)),
        (EnergyKind::Multiplicative, EnergyOrder::ThreeHalves) => {
            EnergyValue::Real(mult_energy_three_halves(a, b))
        }
    }
}

/// `E^×(A−a, A−b)` (order 2) or `E₃^×(A−a, A−b)` (order 3) for a pivot
/// `(a, b)`; geometrically the number of ordered pairs/triples of points of
/// `A×A` collinear with `(a, b)`.
pub fn shifted_mult_energy(a_set: &FpSet, a: Elem, b: Elem, order: u32) -> u128 {
    let p = a_set.prime();
    let shifted_a = a_set.translate(p.neg(a));
    let shifted_b = a_set.translate(p.neg(b));
    match order {
        2 => mult_energy(&shifted_a, &shifted_b),
        3 => mult_energy3(&shifted_a, &shifted_b),
        _ => panic!("shifted_mult_energy supports orders 2 and 3"),
    }
}
