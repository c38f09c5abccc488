//! Finite subsets of `F_p`: construction of set families and all
//! set-arithmetic operators (sums, differences, products, ratios, dilates,
//! iterated expressions).

use crate::field::{Elem, Prime};
use crate::rng::SplitMix64;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// A finite subset of `F_p`, kept both as a sorted element list and as a
/// bitset of length `p`. The two views always agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpSet {
    prime: Prime,
    elems: Vec<Elem>,
    bits: Vec<u64>,
}

impl FpSet {
    pub fn new(prime: Prime, elements: impl IntoIterator<Item = Elem>) -> Self {
        let p = prime.get() as usize;
        let mut bits = vec![0u64; (p + 63) / 64];
        for e in elements {
            let e = e % prime.get();
            bits[e as usize / 64] |= 1 << (e % 64);
        }
        let mut elems = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut m = word;
            while m != 0 {
                let b = m.trailing_zeros();
                elems.push((w * 64) as Elem + b as Elem);
                m &= m - 1;
            }
        }
        FpSet { prime, elems, bits }
    }

    pub fn empty(prime: Prime) -> Self {
        Self::new(prime, std::iter::empty())
    }

    /// The whole field `F_p`.
    pub fn full(prime: Prime) -> Self {
        Self::new(prime, 0..prime.get())
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.prime
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        debug_assert!(e < self.prime.get());
        self.bits[e as usize / 64] & (1 << (e % 64)) != 0
    }

    #[inline]
    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elems.iter().copied()
    }

    /// The set without 0, for multiplicative-group arguments.
    pub fn without_zero(&self) -> FpSet {
        FpSet::new(self.prime, self.iter().filter(|&e| e != 0))
    }

    /// `{x^-1 : x ∈ A, x ≠ 0}`.
    pub fn invert_elements(&self) -> FpSet {
        let p = self.prime;
        FpSet::new(
            p,
            self.iter().filter(|&e| e != 0).map(|e| p.inv(e).expect("nonzero")),
        )
    }

    /// `{a − c : a ∈ A}` for a fixed `c`, i.e. the translate `A − c`.
    pub fn translate(&self, c: Elem) -> FpSet {
        let p = self.prime;
        FpSet::new(p, self.iter().map(|a| p.add(a, c)))
    }

    pub fn intersection(&self, other: &FpSet) -> FpSet {
        assert_eq!(self.prime, other.prime);
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        let mut elems = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut m = word;
            while m != 0 {
                let b = m.trailing_zeros();
                elems.push((w * 64) as Elem + b as Elem);
                m &= m - 1;
            }
        }
        FpSet { prime: self.prime, elems, bits }
    }

    pub fn is_subset_of(&self, other: &FpSet) -> bool {
        assert_eq!(self.prime, other.prime);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Multiplicative closure test: `A·A = A` (zero excluded from the test
    /// when `A = Γ ∪ {0}` is not intended — callers pass the exact set).
    pub fn is_mult_subgroup(&self) -> bool {
        if self.is_empty() || self.contains(0) {
            return false;
        }
        combine(self, self, SetOp::Prod).map(|p| p == *self).unwrap_or(false)
    }
}

/// Pairwise set operation selector for [`combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetOp {
    Sum,
    Diff,
    Prod,
    Ratio,
}

/// `{a ∘ b : a ∈ A, b ∈ B}` exactly. For `Ratio`, pairs with `b = 0` are
/// omitted (so `0 ∈ A/B` whenever `0 ∈ A` and `B` has a nonzero element).
pub fn combine(a: &FpSet, b: &FpSet, op: SetOp) -> Result<FpSet> {
    assert_eq!(a.prime, b.prime);
    let p = a.prime;
    let mut out = Vec::with_capacity(a.len() * b.len());
    match op {
        SetOp::Sum => {
            for &x in &a.elems {
                for &y in &b.elems {
                    out.push(p.add(x, y));
                }
            }
        }
        SetOp::Diff => {
            for &x in &a.elems {
                for &y in &b.elems {
                    out.push(p.sub(x, y));
                }
            }
        }
        SetOp::Prod => {
            for &x in &a.elems {
                for &y in &b.elems {
                    out.push(p.mul(x, y));
                }
            }
        }
        SetOp::Ratio => {
            let inv = p.inverse_table();
            for &y in &b.elems {
                if y == 0 {
                    continue;
                }
                let iy = inv[y as usize];
                for &x in &a.elems {
                    out.push(p.mul(x, iy));
                }
            }
            if out.is_empty() && !a.is_empty() && !b.is_empty() {
                return Err(Error::EmptyResult);
            }
        }
    }
    Ok(FpSet::new(p, out))
}

/// `{λ·a + μ : a ∈ A}`; requires `λ ≠ 0`, so the output has `|A|` elements.
pub fn dilate_translate(a: &FpSet, lambda: Elem, mu: Elem) -> Result<FpSet> {
    if lambda % a.prime.get() == 0 {
        return Err(Error::ZeroDilation);
    }
    let p = a.prime;
    Ok(FpSet::new(p, a.iter().map(|x| p.add(p.mul(lambda, x), mu))))
}

/// Declarative description of a set family instance.
///
/// Families instantiate the standard test sets: seeded random subsets,
/// arithmetic and geometric progressions, multiplicative subgroups,
/// intervals, and explicit lists. For a fixed `(spec, p)` the output is
/// deterministic; randomness comes only from the embedded seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilySpec {
    Random { size: u32, seed: u64 },
    Ap { start: u32, step: u32, len: u32 },
    Geometric { start: u32, ratio: u32, len: u32 },
    Subgroup { order: u32 },
    Interval { start: u32, len: u32 },
    Explicit { elements: Vec<u32> },
}

impl FamilySpec {
    /// Short label without commas, safe for CSV cells.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Random { .. } => "random".into(),
            FamilySpec::Ap { start, step, .. } => format!("ap[{start};{step}]"),
            FamilySpec::Geometric { start, ratio, .. } => format!("geo[{start};{ratio}]"),
            FamilySpec::Subgroup { order } => format!("subgroup[{order}]"),
            FamilySpec::Interval { start, .. } => format!("interval[{start}]"),
            FamilySpec::Explicit { .. } => "explicit".into(),
        }
    }

    /// A copy of the template with its size parameter replaced by `n`.
    ///
    /// For the subgroup kind the requested size is rounded down to the
    /// largest divisor of `p − 1` not exceeding `n` (orders must divide
    /// `p − 1`).
    pub fn with_size(&self, n: u32, p: Prime) -> FamilySpec {
        match self {
            FamilySpec::Random { seed, .. } => FamilySpec::Random { size: n, seed: *seed },
            FamilySpec::Ap { start, step, .. } => {
                FamilySpec::Ap { start: *start, step: *step, len: n }
            }
            FamilySpec::Geometric { start, ratio, .. } => {
                FamilySpec::Geometric { start: *start, ratio: *ratio, len: n }
            }
            FamilySpec::Subgroup { .. } => {
                let pm1 = p.get() - 1;
                let mut best = 1;
                for d in 1..=n.min(pm1) {
                    if pm1 % d == 0 {
                        best = d;
                    }
                }
                FamilySpec::Subgroup { order: best }
            }
            FamilySpec::Interval { start, .. } => FamilySpec::Interval { start: *start, len: n },
            FamilySpec::Explicit { elements } => FamilySpec::Explicit { elements: elements.clone() },
        }
    }
}

/// Materialise a family instance over `F_p`.
pub fn make_family(spec: &FamilySpec, p: Prime) -> Result<FpSet> {
    match spec {
        FamilySpec::Random { size, seed } => {
            if *size > p.get() {
                return Err(Error::SizeTooLarge { size: *size, p: p.get() });
            }
            let mut g = SplitMix64::new(*seed);
            let picked = g.sample_distinct(p.get() as u64, *size as usize);
            Ok(FpSet::new(p, picked.into_iter().map(|x| x as Elem)))
        }
        FamilySpec::Ap { start, step, len } => {
            if *len > p.get() {
                return Err(Error::SizeTooLarge { size: *len, p: p.get() });
            }
            if *step % p.get() == 0 && *len > 1 {
                return Err(Error::InvalidFamily("ap step must be nonzero".into()));
            }
            let mut x = *start % p.get();
            let mut out = Vec::with_capacity(*len as usize);
            for _ in 0..*len {
                out.push(x);
                x = p.add(x, *step % p.get());
            }
            Ok(FpSet::new(p, out))
        }
        FamilySpec::Geometric { start, ratio, len } => {
            if *len > p.get() {
                return Err(Error::SizeTooLarge { size: *len, p: p.get() });
            }
            let (s, r) = (*start % p.get(), *ratio % p.get());
            if *len > 0 && (s == 0 || r == 0) {
                return Err(Error::InvalidFamily("geometric start and ratio must be nonzero".into()));
            }
            let mut x = s;
            let mut out = Vec::with_capacity(*len as usize);
            for _ in 0..*len {
                out.push(x);
                x = p.mul(x, r);
            }
            let set = FpSet::new(p, out);
            if set.len() != *len as usize {
                return Err(Error::InvalidFamily(format!(
                    "geometric progression cycles before length {len}"
                )));
            }
            Ok(set)
        }
        FamilySpec::Subgroup { order } => {
            let pm1 = p.get() - 1;
            if *order == 0 || pm1 % order != 0 {
                return Err(Error::BadOrder { order: *order, pm1 });
            }
            let g = p.primitive_root();
            let h = p.pow(g, (pm1 / order) as u64);
            let mut x: Elem = 1;
            let mut out = Vec::with_capacity(*order as usize);
            for _ in 0..*order {
                out.push(x);
                x = p.mul(x, h);
            }
            Ok(FpSet::new(p, out))
        }
        FamilySpec::Interval { start, len } => make_family(
            &FamilySpec::Ap { start: *start, step: 1, len: *len },
            p,
        ),
        FamilySpec::Explicit { elements } => {
            Ok(FpSet::new(p, elements.iter().map(|&e| e % p.get())))
        }
    }
}

/// Expression tree over named base sets, evaluated exactly.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum SetExpr {
    /// A named base set, looked up in the evaluation environment.
    Base(String),
    Sum(Box<SetExpr>, Box<SetExpr>),
    Diff(Box<SetExpr>, Box<SetExpr>),
    Prod(Box<SetExpr>, Box<SetExpr>),
    Ratio(Box<SetExpr>, Box<SetExpr>),
    /// `λ·X + μ`.
    Dilate(Box<SetExpr>, Elem, Elem),
    /// `{x^-1 : x ∈ X, x ≠ 0}`.
    InvertElements(Box<SetExpr>),
}

impl SetExpr {
    pub fn base(name: &str) -> SetExpr {
        SetExpr::Base(name.to_string())
    }
}

/// Evaluate an expression tree against an environment of named sets.
pub fn eval_expr(expr: &SetExpr, env: &[(&str, &FpSet)]) -> Result<FpSet> {
    match expr {
        SetExpr::Base(name) => env
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| (*s).clone())
            .ok_or_else(|| Error::Parse(format!("unknown set name {name}"))),
        SetExpr::Sum(a, b) => combine(&eval_expr(a, env)?, &eval_expr(b, env)?, SetOp::Sum),
        SetExpr::Diff(a, b) => combine(&eval_expr(a, env)?, &eval_expr(b, env)?, SetOp::Diff),
        SetExpr::Prod(a, b) => combine(&eval_expr(a, env)?, &eval_expr(b, env)?, SetOp::Prod),
        SetExpr::Ratio(a, b) => combine(&eval_expr(a, env)?, &eval_expr(b, env)?, SetOp::Ratio),
        SetExpr::Dilate(a, l, m) => dilate_translate(&eval_expr(a, env)?, *l, *m),
        SetExpr::InvertElements(a) => Ok(eval_expr(a, env)?.invert_elements()),
    }
}

/// On-disk set file: `{"p": <int>, "elements": [<ints>]}`.
#[derive(Serialize, Deserialize)]
struct SetFile {
    p: u64,
    elements: Vec<u32>,
}

/// Serialise a set to its canonical JSON form (sorted elements, compact).
pub fn to_json(set: &FpSet) -> String {
    serde_json::to_string(&SetFile {
        p: set.prime.get() as u64,
        elements: set.elems.clone(),
    })
    .expect("set serialisation cannot fail")
}

pub fn from_json(s: &str) -> Result<FpSet> {
    let f: SetFile = serde_json::from_str(s)?;
    let p = Prime::new(f.p)?;
    for &e in &f.elements {
        if e >= p.get() {
            return Err(Error::Parse(format!("element {e} is not a residue mod {p}")));
        }
    }
    Ok(FpSet::new(p, f.elements))
}

pub fn save(set: &FpSet, path: impl AsRef<Path>) -> Result<()> {
    Ok(std::fs::write(path, to_json(set) + "\n")?)
}

pub fn load(path: impl AsRef<Path>) -> Result<FpSet> {
    from_json(&std::fs::read_to_string(path)?)
}

/// Iterated sumset `kA − lA` (k plus-copies, l minus-copies of `A`).
pub fn iterated_sumset(a: &FpSet, k: u32, l: u32) -> Result<FpSet> {
    assert!(k + l >= 1);
    let mut acc: Option<FpSet> = None;
    for _ in 0..k {
        acc = Some(match acc {
            None => a.clone(),
            Some(s) => combine(&s, a, SetOp::Sum)?,
        });
    }
    for _ in 0..l {
        acc = Some(match acc {
            None => dilate_translate(a, a.prime().get() - 1, 0)?,
            Some(s) => combine(&s, a, SetOp::Diff)?,
        });
    }
    Ok(acc.expect("k + l >= 1"))
}
