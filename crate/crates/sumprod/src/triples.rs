//! Collinear triples `T(A)` and quadruples `Q(A)` of the grid `A×A`,
//! computed by four mutually validating methods, together with the ratio
//! functions `t(x)` and `q(x,y)` and asymptotic residual monitors.
//!
//! The authoritative quantities are
//!
//! * `N₃ = #{ordered (u,v,w) ∈ (A×A)³ : some line contains all three}`,
//! * `N₄ = #{ordered (u,v,w,z) ∈ (A×A)⁴ : some line contains all four}`,
//!
//! with repeated points collinear by definition. The exact identities used
//! by the ratio method are
//!
//! ```text
//! N₃ = Σ_x t(x)²   + 3|A|⁴ − 2|A|³
//! N₄ = Σ_xy q(x,y)² + N₃ + 2|A|⁴(|A|−1)
//! ```
//!
//! where the correction terms count the triples/quadruples whose first and
//! third point agree in a coordinate (the 6-tuple behind `Σ t²` ranges over
//! base pairs in general position only): by inclusion-exclusion over
//! {same column, same row}, triples split as 2·|A|³(|A|−1) (vertical +
//! horizontal base) + |A|⁴ (coincident base), and quadruples as
//! 2·|A|⁴(|A|−1) + N₃. Both identities are validated exhaustively against
//! the brute-force oracle in the acceptance suite.

use crate::field::{Elem, Prime};
use crate::repfn::{shifted_mult_energy, RepFn};
use crate::sets::FpSet;
use crate::{incidence, Error, Result};
use std::collections::BTreeMap;

/// The sparse quadruple-ratio function `q(x,y)`.
///
/// Total mass `|A|³(|A|−1)`; symmetric under `(x,y) ↦ (1−x, 1−y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFn {
    counts: BTreeMap<(Elem, Elem), u64>,
    total: u128,
}

impl QFn {
    pub fn get(&self, x: Elem, y: Elem) -> u64 {
        self.counts.get(&(x, y)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Elem, Elem), u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    pub fn moment2(&self) -> u128 {
        self.counts.values().map(|&c| c as u128 * c as u128).sum()
    }
}

/// `t(x) = #{(a,b,c) ∈ A³ : c ≠ a, b − a = x·(c − a)}`.
///
/// Total mass `|A|²(|A|−1)`; `t(0) = t(1) = |A|(|A|−1)` and the support is
/// the pinned-ratio set plus `{0, 1}`.
pub fn t_fn(a: &FpSet) -> RepFn {
    let p = a.prime();
    let inv = p.inverse_table();
    let mut dense = vec![0u64; p.get() as usize];
    for x in a.iter() {
        for c in a.iter() {
            if c == x {
                continue;
            }
            let r = inv[p.sub(c, x) as usize];
            for b in a.iter() {
                dense[p.mul(p.sub(b, x), r) as usize] += 1;
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

/// `q(x,y) = #{(a,b,c,d) ∈ A⁴ : c ≠ a, b−a = x(c−a), d−a = y(c−a)}` as a
/// sparse map. Cost `|A|⁴`, budget-checked; use [`q_count`] when only
/// `Σ q²` is needed at scale.
pub fn q_fn(a: &FpSet, budget: u64) -> Result<QFn> {
    let n = a.len() as u64;
    let cost = n.saturating_mul(n).saturating_mul(n).saturating_mul(n);
    if cost > budget {
        return Err(Error::BudgetExceeded { cost, budget });
    }
    let p = a.prime();
    let inv = p.inverse_table();
    let mut counts: BTreeMap<(Elem, Elem), u64> = BTreeMap::new();
    for a0 in a.iter() {
        for c in a.iter() {
            if c == a0 {
                continue;
            }
            let r = inv[p.sub(c, a0) as usize];
            let xs: Vec<Elem> = a.iter().map(|b| p.mul(p.sub(b, a0), r)).collect();
            for &x in &xs {
                for &y in &xs {
                    *counts.entry((x, y)).or_insert(0) += 1;
                }
            }
        }
    }
    let total = counts.values().map(|&c| c as u128).sum();
    Ok(QFn { counts, total })
}

/// Method selector for [`t_count`] and [`q_count`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// Direct loop over point tuples with a collinearity test. The oracle;
    /// triples up to `|A| ≤ 12`, quadruples up to `|A| ≤ 8`.
    Brute,
    /// Second moment of `t` (resp. `q`) plus the exact correction terms.
    Ratio,
    /// Pivot sum of cross-multiplied multiplicative energies of shifts.
    ShiftedEnergy,
    /// Third/fourth falling moments of the incidence histogram.
    Line,
}

pub const ALL_METHODS: [CountMethod; 4] = [
    CountMethod::Brute,
    CountMethod::Ratio,
    CountMethod::ShiftedEnergy,
    CountMethod::Line,
];

impl std::fmt::Display for CountMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CountMethod::Brute => "brute",
            CountMethod::Ratio => "ratio",
            CountMethod::ShiftedEnergy => "shifted_energy",
            CountMethod::Line => "line",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for CountMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(CountMethod::Brute),
            "ratio" => Ok(CountMethod::Ratio),
            "shifted_energy" | "shifted" => Ok(CountMethod::ShiftedEnergy),
            "line" => Ok(CountMethod::Line),
            other => Err(Error::Parse(format!("unknown method {other}"))),
        }
    }
}

fn grid_points(a: &FpSet) -> Vec<(Elem, Elem)> {
    a.iter().flat_map(|x| a.iter().map(move |y| (x, y))).collect()
}

/// Collinearity of three points: the difference vectors from `u` are
/// linearly dependent. Repeated points are collinear by definition.
#[inline]
fn collinear3(p: Prime, u: (Elem, Elem), v: (Elem, Elem), w: (Elem, Elem)) -> bool {
    let d1 = (p.sub(v.0, u.0), p.sub(v.1, u.1));
    let d2 = (p.sub(w.0, u.0), p.sub(w.1, u.1));
    p.mul(d1.0, d2.1) == p.mul(d1.1, d2.0)
}

fn brute_t(a: &FpSet) -> u128 {
    let p = a.prime();
    let pts = grid_points(a);
    let mut n = 0u128;
    for &u in &pts {
        for &v in &pts {
            for &w in &pts {
                if collinear3(p, u, v, w) {
                    n += 1;
                }
            }
        }
    }
    n
}

/// Direct quadruple scan. Four points share a line iff the triples
/// (u,v,w), (u,v,z), (u,w,z) each do, so the z-loop can hide behind the
/// first test without changing what is counted.
fn brute_q(a: &FpSet) -> u128 {
    let p = a.prime();
    let pts = grid_points(a);
    let mut n = 0u128;
    for &u in &pts {
        for &v in &pts {
            for &w in &pts {
                if !collinear3(p, u, v, w) {
                    continue;
                }
                for &z in &pts {
                    if collinear3(p, u, v, z) && collinear3(p, u, w, z) {
                        n += 1;
                    }
                }
            }
        }
    }
    n
}

/// Σ_x t(x)² streamed from a dense table (no RepFn materialisation).
fn t_second_moment(a: &FpSet) -> u128 {
    let p = a.prime();
    let inv = p.inverse_table();
    let mut dense = vec![0u64; p.get() as usize];
    for x in a.iter() {
        for c in a.iter() {
            if c == x {
                continue;
            }
            let r = inv[p.sub(c, x) as usize];
            for b in a.iter() {
                dense[p.mul(p.sub(b, x), r) as usize] += 1;
            }
        }
    }
    dense.iter().map(|&c| c as u128 * c as u128).sum()
}

/// Σ_{x,y} q(x,y)² streamed from a dense `p×p` table when it fits, else
/// from a hash map.
fn q_second_moment(a: &FpSet) -> u128 {
    let p = a.prime();
    let pv = p.get() as usize;
    let inv = p.inverse_table();
    // dense p*p u32 table up to ~64 MB; q(x,y) <= |A|(|A|-1) < 2^32
    if pv <= 4096 {
        let mut dense = vec![0u32; pv * pv];
        let mut vals = vec![0usize; a.len()];
        let mut rows = vec![0usize; a.len()];
        for a0 in a.iter() {
            for c in a.iter() {
                if c == a0 {
                    continue;
                }
                let r = inv[p.sub(c, a0) as usize];
                for (i, b) in a.iter().enumerate() {
                    let v = p.mul(p.sub(b, a0), r) as usize;
                    vals[i] = v;
                    rows[i] = v * pv;
                }
                for &row in &rows {
                    for &y in &vals {
                        dense[row + y] += 1;
                    }
                }
            }
        }
        dense.iter().map(|&c| c as u128 * c as u128).sum()
    } else {
        let mut map: std::collections::HashMap<u64, u64> = std::collections::HashMap::new();
        for a0 in a.iter() {
            for c in a.iter() {
                if c == a0 {
                    continue;
                }
                let r = inv[p.sub(c, a0) as usize];
                let xs: Vec<u64> = a.iter().map(|b| p.mul(p.sub(b, a0), r) as u64).collect();
                for &x in &xs {
                    let key = x * p.get() as u64;
                    for &y in &xs {
                        *map.entry(key + y).or_insert(0) += 1;
                    }
                }
            }
        }
        map.values().map(|&c| c as u128 * c as u128).sum()
    }
}

fn check_budget(cost: u64, budget: u64) -> Result<()> {
    if cost > budget {
        Err(Error::BudgetExceeded { cost, budget })
    } else {
        Ok(())
    }
}

/// `N₃`, the number of ordered collinear triples of `A×A`, by the chosen
/// method. All methods return the same integer; `brute` is capped at
/// `|A| ≤ 12`.
pub fn t_count(a: &FpSet, method: CountMethod, budget: u64) -> Result<u128> {
    let n = a.len() as u64;
    if n == 0 {
        return Ok(0);
    }
    let n128 = n as u128;
    match method {
        CountMethod::Brute => {
            if n > 12 {
                return Err(Error::MethodUnavailable(
                    "brute triple count is capped at |A| <= 12".into(),
                ));
            }
            check_budget(n.pow(6), budget)?;
            Ok(brute_t(a))
        }
        CountMethod::Ratio => {
            check_budget(n.pow(3) + a.prime().get() as u64, budget)?;
            Ok(t_second_moment(a) + 3 * n128.pow(4) - 2 * n128.pow(3))
        }
        CountMethod::ShiftedEnergy => {
            check_budget(n.pow(4), budget)?;
            let mut total = 0u128;
            for x in a.iter() {
                for y in a.iter() {
                    total += shifted_mult_energy(a, x, y, 2);
                }
            }
            Ok(total)
        }
        CountMethod::Line => {
            let h = incidence::incidence_histogram(a, budget)?;
            let pts = n128 * n128;
            Ok(pts + 3 * pts * (pts - 1) + h.falling_moment3())
        }
    }
}

/// `N₄`, the number of ordered collinear quadruples of `A×A`. `brute` is
/// capped at `|A| ≤ 8`.
pub fn q_count(a: &FpSet, method: CountMethod, budget: u64) -> Result<u128> {
    let n = a.len() as u64;
    if n == 0 {
        return Ok(0);
    }
    let n128 = n as u128;
    match method {
        CountMethod::Brute => {
            if n > 8 {
                return Err(Error::MethodUnavailable(
                    "brute quadruple count is capped at |A| <= 8".into(),
                ));
            }
            check_budget(n.pow(8), budget)?;
            Ok(brute_q(a))
        }
        CountMethod::Ratio => {
            check_budget(n.pow(4), budget)?;
            let t = t_count(a, CountMethod::Ratio, budget)?;
            Ok(q_second_moment(a) + t + 2 * n128.pow(4) * (n128 - 1))
        }
        CountMethod::ShiftedEnergy => {
            check_budget(n.pow(4), budget)?;
            let mut total = 0u128;
            for x in a.iter() {
                for y in a.iter() {
                    total += shifted_mult_energy(a, x, y, 3);
                }
            }
            Ok(total)
        }
        CountMethod::Line => {
            let h = incidence::incidence_histogram(a, budget)?;
            let pts = n128 * n128;
            Ok(pts + 7 * pts * (pts - 1) + 36 * h.binomial_moment(3) + 24 * h.binomial_moment(4))
        }
    }
}

/// Cheapest available method at the given scale: the `O(|A|³)` ratio route
/// unless the `O(p|A|²)` line route is cheaper (quadruples: `|A|⁴` vs
/// `p|A|²`).
pub fn t_count_auto(a: &FpSet, budget: u64) -> Result<u128> {
    t_count(a, CountMethod::Ratio, budget)
}

pub fn q_count_auto(a: &FpSet, budget: u64) -> Result<u128> {
    let n = a.len() as u64;
    let p = a.prime().get() as u64;
    if p.saturating_mul(n * n) < n.saturating_pow(4) {
        q_count(a, CountMethod::Line, budget)
    } else {
        q_count(a, CountMethod::Ratio, budget)
    }
}

/// Signed residuals of the asymptotic formulas
/// `T = |A|⁶/p + O(p^{1/2}|A|^{7/2})` and `Q = |A|⁸/p² + O(|A|⁵ ln|A|)`.
pub fn asymptotic_residuals(a: &FpSet, budget: u64) -> Result<(f64, f64)> {
    let n = a.len() as f64;
    let p = a.prime().get() as f64;
    let t = t_count_auto(a, budget)? as f64;
    let q = q_count_auto(a, budget)? as f64;
    let rho_t = (t - n.powi(6) / p) / (p.sqrt() * n.powf(3.5));
    let rho_q = (q - n.powi(8) / (p * p)) / (n.powi(5) * n.ln());
    Ok((rho_t, rho_q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn fp(p: u64, elems: &[u32]) -> FpSet {
        FpSet::new(Prime::new(p).unwrap(), elems.iter().copied())
    }

    #[test]
    fn t_fn_examples() {
        let a = fp(5, &[0, 1]);
        let t = t_fn(&a);
        assert_eq!(t.get(0), 2);
        assert_eq!(t.get(1), 2);
        assert_eq!(t.total(), 4); // |A|^2 (|A|-1)
    }

    #[test]
    fn t_fn_boundary_values() {
        let mut g = SplitMix64::new(21);
        let p = Prime::new(31).unwrap();
        for _ in 0..10 {
            let n = 2 + g.below(10) as usize;
            let a = FpSet::new(p, g.sample_distinct(31, n).iter().map(|&x| x as Elem));
            let t = t_fn(&a);
            let n = a.len() as u64;
            assert_eq!(t.total(), (n * n * (n - 1)) as u128);
            assert_eq!(t.get(0), n * (n - 1));
            assert_eq!(t.get(1), n * (n - 1));
            // symmetry t(x) = t(1-x)
            let pr = a.prime();
            for (x, c) in t.iter() {
                assert_eq!(c, t.get(pr.sub(1, x)));
            }
        }
    }

    #[test]
    fn q_fn_examples() {
        let a = fp(5, &[0, 1]);
        let q = q_fn(&a, u64::MAX).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(q.get(x, y), 2);
            }
        }
        assert_eq!(q.total(), 8); // |A|^3 (|A|-1)
        assert_eq!(q.moment2(), 16);
        assert_eq!(q.get(0, 0), 2); // |A|(|A|-1)
    }

    #[test]
    fn q_fn_symmetry() {
        let mut g = SplitMix64::new(5);
        let p = Prime::new(13).unwrap();
        for _ in 0..6 {
            let n = 2 + g.below(5) as usize;
            let a = FpSet::new(p, g.sample_distinct(13, n).iter().map(|&x| x as Elem));
            let q = q_fn(&a, u64::MAX).unwrap();
            let n = a.len() as u128;
            assert_eq!(q.total(), n * n * n * (n - 1));
            for ((x, y), c) in q.iter() {
                assert_eq!(c, q.get(p.sub(1, x), p.sub(1, y)));
            }
        }
    }

    #[test]
    fn pinned_counts() {
        let a = fp(5, &[0, 1]);
        for m in ALL_METHODS {
            assert_eq!(t_count(&a, m, u64::MAX).unwrap(), 40, "T method {m}");
            assert_eq!(q_count(&a, m, u64::MAX).unwrap(), 88, "Q method {m}");
        }
    }

    #[test]
    fn singleton_counts() {
        let a = fp(5, &[3]);
        for m in ALL_METHODS {
            assert_eq!(t_count(&a, m, u64::MAX).unwrap(), 1);
            assert_eq!(q_count(&a, m, u64::MAX).unwrap(), 1);
        }
    }

    #[test]
    fn subgroup_instance_methods_agree() {
        let a = fp(7, &[1, 2, 4]);
        let t0 = t_count(&a, CountMethod::Brute, u64::MAX).unwrap();
        let q0 = q_count(&a, CountMethod::Brute, u64::MAX).unwrap();
        for m in ALL_METHODS {
            assert_eq!(t_count(&a, m, u64::MAX).unwrap(), t0);
            assert_eq!(q_count(&a, m, u64::MAX).unwrap(), q0);
        }
    }

    #[test]
    fn methods_agree_on_random_sets() {
        let mut g = SplitMix64::new(1);
        for &q in &[5u64, 7, 11, 13, 17] {
            let p = Prime::new(q).unwrap();
            for _ in 0..4 {
                let n = 1 + g.below(q.min(8)) as usize;
                let a = FpSet::new(p, g.sample_distinct(q, n).iter().map(|&x| x as Elem));
                let t0 = t_count(&a, CountMethod::Brute, u64::MAX).unwrap();
                let q0 = q_count(&a, CountMethod::Brute, u64::MAX).unwrap();
                for m in ALL_METHODS {
                    assert_eq!(t_count(&a, m, u64::MAX).unwrap(), t0, "T at |A|={}", a.len());
                    assert_eq!(q_count(&a, m, u64::MAX).unwrap(), q0, "Q at |A|={}", a.len());
                }
            }
        }
    }

    #[test]
    fn moment_residual_bounds() {
        // |N3 - (Σt² + |A|⁴)| <= 3|A|⁴ and |N4 - (Σq² + |A|⁵)| <= N3 + 2|A|⁵
        let mut g = SplitMix64::new(2);
        let p = Prime::new(13).unwrap();
        for _ in 0..8 {
            let n = 2 + g.below(6) as usize;
            let a = FpSet::new(p, g.sample_distinct(13, n).iter().map(|&x| x as Elem));
            let n = a.len() as i128;
            let t = t_count(&a, CountMethod::Ratio, u64::MAX).unwrap() as i128;
            let q = q_count(&a, CountMethod::Ratio, u64::MAX).unwrap() as i128;
            let st2 = t_fn(&a).moment(2) as i128;
            let sq2 = q_fn(&a, u64::MAX).unwrap().moment2() as i128;
            assert!((t - (st2 + n.pow(4))).abs() <= 3 * n.pow(4));
            assert!((q - (sq2 + n.pow(5))).abs() <= t + 2 * n.pow(5));
        }
    }

    #[test]
    fn brute_caps() {
        let p = Prime::new(101).unwrap();
        let a = FpSet::new(p, 0..13);
        assert!(matches!(
            t_count(&a, CountMethod::Brute, u64::MAX),
            Err(Error::MethodUnavailable(_))
        ));
        let b = FpSet::new(p, 0..9);
        assert!(matches!(
            q_count(&b, CountMethod::Brute, u64::MAX),
            Err(Error::MethodUnavailable(_))
        ));
        assert!(matches!(
            q_count(&b, CountMethod::Ratio, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn residuals_smoke() {
        let a = fp(5, &[3]);
        let (rho_t, _rho_q) = asymptotic_residuals(&a, u64::MAX).unwrap();
        assert!(rho_t.is_finite());
    }
}
