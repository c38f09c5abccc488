//! The symplectic (area) form `ω[(u₁,u₂),(v₁,v₂)] = u₁v₂ − u₂v₁`, its
//! distinct-value sets `ω(P)`, the cross-ratio-of-slopes correspondence,
//! the six-term `Φ` map and its identity, and the equation-counting
//! apparatus behind the `ω(P)` growth bounds.

use crate::field::{cross_ratio, Elem, Prime, ProjPoint};
use crate::incidence::PointSet2D;
use crate::sets::FpSet;
use crate::{Error, Result};
use std::collections::BTreeMap;

pub type Point2 = (Elem, Elem);

/// `ω(u, v) = u₁v₂ − u₂v₁`.
#[inline]
pub fn omega(p: Prime, u: Point2, v: Point2) -> Elem {
    p.sub(p.mul(u.0, v.1), p.mul(u.1, v.0))
}

/// `ω(P) = {ω(u, u') : u, u' ∈ P} \ {0}`.
///
/// Empty exactly when `P` lies on a single line through the origin.
pub fn omega_set(pts: &PointSet2D) -> FpSet {
    let p = pts.prime();
    let mut out = Vec::new();
    for &u in pts.points() {
        for &v in pts.points() {
            let w = omega(p, u, v);
            if w != 0 {
                out.push(w);
            }
        }
    }
    FpSet::new(p, out)
}

/// Slope of the line through the origin and `a ≠ 0`, as a projective point
/// (`∞` for vertical).
pub fn slope(p: Prime, a: Point2) -> Result<ProjPoint> {
    if a == (0, 0) {
        return Err(Error::DegenerateQuadruple);
    }
    if a.0 == 0 {
        Ok(ProjPoint::Infinity)
    } else {
        Ok(ProjPoint::Finite(p.div(a.1, a.0)?))
    }
}

/// A quadruple of nonzero points spanning four pairwise distinct
/// directions through the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quad {
    pts: [Point2; 4],
    slopes: [ProjPoint; 4],
}

impl Quad {
    pub fn new(p: Prime, pts: [Point2; 4]) -> Result<Quad> {
        let slopes = [
            slope(p, pts[0])?,
            slope(p, pts[1])?,
            slope(p, pts[2])?,
            slope(p, pts[3])?,
        ];
        for i in 0..4 {
            for j in i + 1..4 {
                if slopes[i] == slopes[j] {
                    return Err(Error::DegenerateQuadruple);
                }
            }
        }
        Ok(Quad { pts, slopes })
    }

    pub fn points(&self) -> [Point2; 4] {
        self.pts
    }

    pub fn slopes(&self) -> [ProjPoint; 4] {
        self.slopes
    }
}

/// The six pairwise ω-values `Φ(a,b,c,d) = (t_ad, t_bc, t_ac, t_bd, t_ab, t_cd)`.
pub fn phi(p: Prime, q: [Point2; 4]) -> [Elem; 6] {
    let [a, b, c, d] = q;
    [
        omega(p, a, d),
        omega(p, b, c),
        omega(p, a, c),
        omega(p, b, d),
        omega(p, a, b),
        omega(p, c, d),
    ]
}

/// The six-term identity `t_ad·t_bc = t_ac·t_bd − t_ab·t_cd`, evaluated on
/// both sides. A polynomial identity: true for every quadruple, degenerate
/// ones included.
pub fn quad_identity(p: Prime, q: [Point2; 4]) -> bool {
    let [t_ad, t_bc, t_ac, t_bd, t_ab, t_cd] = phi(p, q);
    p.mul(t_ad, t_bc) == p.sub(p.mul(t_ac, t_bd), p.mul(t_ab, t_cd))
}

/// `t_ab·t_cd / (t_ac·t_bd) = [δ_a, δ_b, δ_c, δ_d]` for quadruples with
/// pairwise distinct slopes (which makes the denominator nonzero).
pub fn slope_cross_ratio_check(p: Prime, q: &Quad) -> bool {
    let [a, b, c, d] = q.pts;
    let num = p.mul(omega(p, a, b), omega(p, c, d));
    let den = p.mul(omega(p, a, c), omega(p, b, d));
    let lhs = p.div(num, den).expect("distinct slopes make t_ac, t_bd nonzero");
    let [sa, sb, sc, sd] = q.slopes;
    let rhs = cross_ratio(p, sa, sb, sc, sd).expect("distinct slopes");
    lhs == rhs
}

/// Fibers of `Φ` over all quadruples taking one point per given direction.
///
/// Keys are `Φ` images, values the quadruples mapping there. Every fiber
/// has size at most 2 (for `p ≥ 3`), and a size-2 fiber is an antipodal
/// pair: `(a',d') = x·(a,d)`, `(b',c') = x⁻¹·(b,c)` with `x = −1`.
pub fn phi_fibers(
    p: Prime,
    directions: [ProjPoint; 4],
    pts: &PointSet2D,
) -> Result<BTreeMap<[Elem; 6], Vec<[Point2; 4]>>> {
    for i in 0..4 {
        for j in i + 1..4 {
            if directions[i] == directions[j] {
                return Err(Error::DegenerateQuadruple);
            }
        }
    }
    let mut per_dir: [Vec<Point2>; 4] = Default::default();
    for &pt in pts.points() {
        if pt == (0, 0) {
            continue;
        }
        let s = slope(p, pt)?;
        for (i, &d) in directions.iter().enumerate() {
            if s == d {
                per_dir[i].push(pt);
            }
        }
    }
    for (i, v) in per_dir.iter().enumerate() {
        if v.is_empty() {
            return Err(Error::EmptyDirection(i));
        }
    }
    let mut fibers: BTreeMap<[Elem; 6], Vec<[Point2; 4]>> = BTreeMap::new();
    for &a in &per_dir[0] {
        for &b in &per_dir[1] {
            for &c in &per_dir[2] {
                for &d in &per_dir[3] {
                    fibers.entry(phi(p, [a, b, c, d])).or_default().push([a, b, c, d]);
                }
            }
        }
    }
    Ok(fibers)
}

/// Sorted fiber-size multiset.
pub fn fiber_sizes(fibers: &BTreeMap<[Elem; 6], Vec<[Point2; 4]>>) -> Vec<usize> {
    let mut sizes: Vec<usize> = fibers.values().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}

/// Counts for the six-variable equation `t₁t₂ = t₃t₄ − t₅t₆` over `T`.
#[derive(Clone, Copy, Debug)]
pub struct TeqCounts {
    /// `N₆ = Σ_{s≠0} r_TT(s) · r_{TT−TT}(s)`.
    pub solutions: u128,
    /// `Σ_s r_{TT−TT}(s)²`.
    pub second_moment: u128,
    /// `max_{s≠0} r_{TT−TT}(s)`.
    pub max_pointwise: u64,
    /// `second_moment / |T|^{13/2}`.
    pub second_moment_constant: f64,
    /// `max_pointwise / |T|^{11/4}`.
    pub pointwise_constant: f64,
}

/// Count solutions of `t₁t₂ = t₃t₄ − t₅t₆` and the moments of `r_{TT−TT}`.
///
/// `r_TT` is an `O(|T|²)` table; `r_{TT−TT}` is its difference
/// self-convolution, `O(min(p,|T|²)²)`, which is the budgeted cost.
pub fn count_teq_solutions(t: &FpSet, budget: u64) -> Result<TeqCounts> {
    let p = t.prime();
    let pv = p.get() as usize;
    let n = t.len() as u64;
    let support = (n * n).min(p.get() as u64);
    let cost = support.saturating_mul(support).saturating_add(n * n);
    if cost > budget {
        return Err(Error::BudgetExceeded { cost, budget });
    }

    let mut r_tt = vec![0u64; pv];
    for x in t.iter() {
        for y in t.iter() {
            r_tt[p.mul(x, y) as usize] += 1;
        }
    }
    let support: Vec<(u32, u64)> = r_tt
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(s, &c)| (s as u32, c))
        .collect();

    let mut r_diff = vec![0u64; pv];
    for &(s1, c1) in &support {
        for &(s2, c2) in &support {
            r_diff[p.sub(s1, s2) as usize] += c1 * c2;
        }
    }

    let mut solutions = 0u128;
    let mut max_pointwise = 0u64;
    for s in 1..pv {
        solutions += r_tt[s] as u128 * r_diff[s] as u128;
        max_pointwise = max_pointwise.max(r_diff[s]);
    }
    let second_moment: u128 = r_diff.iter().map(|&c| c as u128 * c as u128).sum();

    let nf = t.len() as f64;
    Ok(TeqCounts {
        solutions,
        second_moment,
        max_pointwise,
        second_moment_constant: second_moment as f64 / nf.powf(6.5),
        pointwise_constant: max_pointwise as f64 / nf.powf(2.75),
    })
}

/// Split `P` by origin-line richness: `P₂` holds the points on lines
/// through the origin carrying at least `w` points of `P`, `P₁` the rest.
///
/// The origin itself, if present, lies on every such line and is excluded
/// from both parts.
pub fn split_by_line_richness(pts: &PointSet2D, w: u64) -> (PointSet2D, PointSet2D) {
    assert!(w >= 1);
    let p = pts.prime();
    let mut classes: BTreeMap<ProjPoint, Vec<Point2>> = BTreeMap::new();
    for &pt in pts.points() {
        if pt == (0, 0) {
            continue;
        }
        classes
            .entry(slope(p, pt).expect("nonzero point"))
            .or_default()
            .push(pt);
    }
    let mut sparse = Vec::new();
    let mut rich = Vec::new();
    for (_, class) in classes {
        if class.len() as u64 >= w {
            rich.extend(class);
        } else {
            sparse.extend(class);
        }
    }
    (PointSet2D::new(p, sparse), PointSet2D::new(p, rich))
}
