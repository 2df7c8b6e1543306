//! Radio labeling semantics.
//!
//! A labeling `f` of G is radio when `|f(u) - f(v)| >= D + 1 - d(u,v)` for
//! every pair. Labels are then injective, so a labeling is determined up to
//! its gaps by the order in which it visits the vertices; this module goes
//! back and forth between the two views.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{d_rect, manhattan, GridGraph, Vertex};

/// A permutation `u_1, ..., u_n` of the vertices of a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    grid: GridGraph,
    seq: Vec<Vertex>,
}

impl Ordering {
    pub fn new(grid: GridGraph, seq: Vec<Vertex>) -> Result<Self> {
        if seq.len() != grid.n() {
            return Err(Error::Input(format!(
                "ordering has {} vertices, {grid} has {}",
                seq.len(),
                grid.n()
            )));
        }
        let mut seen = vec![false; grid.n()];
        for &v in &seq {
            grid.check(v)?;
            let i = grid.index(v);
            if seen[i] {
                return Err(Error::Input(format!(
                    "vertex {v} appears twice in the ordering"
                )));
            }
            seen[i] = true;
        }
        Ok(Ordering { grid, seq })
    }

    pub fn grid(&self) -> GridGraph {
        self.grid
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.seq
    }

    /// Sum of consecutive distances, `sum d(u_i, u_{i+1})`.
    pub fn distance_sum(&self) -> usize {
        self.seq.windows(2).map(|w| manhattan(w[0], w[1])).sum()
    }

    /// The same ordering on the transposed grid.
    pub fn transposed(&self) -> Ordering {
        Ordering {
            grid: self.grid.transpose(),
            seq: self.seq.iter().map(|v| v.transposed()).collect(),
        }
    }
}

/// A labeling of every vertex of a grid, stored densely in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    grid: GridGraph,
    labels: Vec<u64>,
}

impl Labeling {
    /// `labels[i]` is the label of `grid.vertex(i)`.
    pub fn new(grid: GridGraph, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != grid.n() {
            return Err(Error::Input(format!(
                "{} labels given for the {} vertices of {grid}",
                labels.len(),
                grid.n()
            )));
        }
        Ok(Labeling { grid, labels })
    }

    /// Builds a labeling from `(vertex, label)` pairs covering every vertex once.
    pub fn from_pairs<I>(grid: GridGraph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, u64)>,
    {
        let mut labels: Vec<Option<u64>> = vec![None; grid.n()];
        for (v, l) in pairs {
            grid.check(v)?;
            let slot = &mut labels[grid.index(v)];
            if slot.is_some() {
                return Err(Error::Input(format!("vertex {v} is labeled twice")));
            }
            *slot = Some(l);
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| {
                l.ok_or_else(|| Error::Input(format!("vertex {} has no label", grid.vertex(i))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Labeling { grid, labels })
    }

    pub fn grid(&self) -> GridGraph {
        self.grid
    }

    pub fn get(&self, v: Vertex) -> Result<u64> {
        self.grid.check(v)?;
        Ok(self.labels[self.grid.index(v)])
    }

    /// Labels in row-major vertex order.
    pub fn as_slice(&self) -> &[u64] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u64)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (self.grid.vertex(i), l))
    }

    pub fn transposed(&self) -> Labeling {
        let t = self.grid.transpose();
        let mut labels = vec![0; t.n()];
        for (v, l) in self.iter() {
            labels[t.index(v.transposed())] = l;
        }
        Labeling { grid: t, labels }
    }

    /// Shifts all labels so the smallest is 0.
    pub fn normalized(&self) -> Labeling {
        let lo = self.labels.iter().copied().min().unwrap_or(0);
        Labeling {
            grid: self.grid,
            labels: self.labels.iter().map(|l| l - lo).collect(),
        }
    }
}

/// A pair of vertices whose labels are too close.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub required_gap: u64,
    pub actual_gap: u64,
}

#[inline]
fn requirement(g: &GridGraph, u: Vertex, v: Vertex) -> u64 {
    (g.diameter() + 1 - manhattan(u, v)) as u64
}

/// Every unordered pair that breaks the radio condition, each listed once
/// with `u` before `v` in row-major order. Empty iff `f` is a radio labeling.
pub fn validate(f: &Labeling) -> Vec<Violation> {
    let g = f.grid;
    let mut out = Vec::new();
    for i in 0..g.n() {
        let u = g.vertex(i);
        for j in i + 1..g.n() {
            let v = g.vertex(j);
            let required_gap = requirement(&g, u, v);
            let actual_gap = f.labels[i].abs_diff(f.labels[j]);
            if actual_gap < required_gap {
                out.push(Violation {
                    u,
                    v,
                    required_gap,
                    actual_gap,
                });
            }
        }
    }
    out
}

/// Largest label minus smallest label.
pub fn span(f: &Labeling) -> u64 {
    let lo = f.labels.iter().min().copied().unwrap_or(0);
    let hi = f.labels.iter().max().copied().unwrap_or(0);
    hi - lo
}

/// The vertices sorted by increasing label. Fails on repeated labels, which
/// no radio labeling has.
pub fn ordering_of(f: &Labeling) -> Result<Ordering> {
    let g = f.grid;
    let mut idx: Vec<usize> = (0..g.n()).collect();
    idx.sort_by_key(|&i| f.labels[i]);
    if let Some(w) = idx.windows(2).find(|w| f.labels[w[0]] == f.labels[w[1]]) {
        return Err(Error::Input(format!(
            "vertices {} and {} share label {}",
            g.vertex(w[0]),
            g.vertex(w[1]),
            f.labels[w[0]]
        )));
    }
    Ordering::new(g, idx.into_iter().map(|i| g.vertex(i)).collect())
}

/// Labels along `s`: `f(u_1) = 0` and each later vertex gets the smallest
/// label compatible with everything placed before it.
///
/// This is the minimum-span radio labeling among those ordered by `s`. Any
/// such labeling `h` satisfies `h(u_i) - h(u_1) >= f(u_i)` by induction on
/// `i`: the constraint that attains the max for `f(u_i)` forces it on `h`.
pub fn min_span_labeling(s: &Ordering) -> Labeling {
    let g = s.grid;
    let along = labels_along(s);
    let mut labels = vec![0; g.n()];
    for (v, l) in s.seq.iter().zip(along) {
        labels[g.index(*v)] = l;
    }
    Labeling { grid: g, labels }
}

fn labels_along(s: &Ordering) -> Vec<u64> {
    let g = s.grid;
    let seq = &s.seq;
    let mut f = Vec::with_capacity(seq.len());
    for (i, &u) in seq.iter().enumerate() {
        let l = (0..i)
            .map(|j| f[j] + requirement(&g, u, seq[j]))
            .max()
            .unwrap_or(0);
        f.push(l);
    }
    f
}

/// A positive bump in a minimal labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BumpEvent {
    /// Step `i`, 1-based: the gap from `u_i` to `u_{i+1}`.
    pub step: usize,
    pub magnitude: u64,
    /// Largest `c > 1` such that `u_{i+1-c}` is a tightness neighbor of `u_{i+1}`.
    pub offset: usize,
}

/// Per-step metrics of the minimal labeling of an ordering. Index `i - 1`
/// of each vector describes step `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    pub labels: Vec<u64>,
    pub d: Vec<usize>,
    pub f_gaps: Vec<u64>,
    pub bumps: Vec<u64>,
    /// `d_rect(u_{i-1}, u_{i+1}; u_i)`, absent for the first step.
    pub d_rect: Vec<Option<usize>>,
    pub bump_events: Vec<BumpEvent>,
}

impl StepReport {
    pub fn distance_sum(&self) -> usize {
        self.d.iter().sum()
    }

    pub fn span(&self) -> u64 {
        self.f_gaps.iter().sum()
    }

    pub fn bump_total(&self) -> u64 {
        self.bumps.iter().sum()
    }
}

pub fn step_report(s: &Ordering) -> StepReport {
    let g = s.grid;
    let seq = &s.seq;
    let labels = labels_along(s);
    let steps = seq.len().saturating_sub(1);
    let mut r = StepReport {
        labels,
        d: Vec::with_capacity(steps),
        f_gaps: Vec::with_capacity(steps),
        bumps: Vec::with_capacity(steps),
        d_rect: Vec::with_capacity(steps),
        bump_events: Vec::new(),
    };
    for i in 0..steps {
        let (u, w) = (seq[i], seq[i + 1]);
        let d = manhattan(u, w);
        let gap = r.labels[i + 1] - r.labels[i];
        let bump = gap - requirement(&g, u, w);
        r.d.push(d);
        r.f_gaps.push(gap);
        r.bumps.push(bump);
        r.d_rect.push((i > 0).then(|| d_rect(seq[i - 1], w, u)));
        if bump > 0 {
            let offset = (2..=i + 1)
                .rev()
                .find(|&c| {
                    r.labels[i + 1] - r.labels[i + 1 - c] == requirement(&g, w, seq[i + 1 - c])
                })
                .expect("a bumped label is pinned by some earlier vertex");
            r.bump_events.push(BumpEvent {
                step: i + 1,
                magnitude: bump,
                offset,
            });
        }
    }
    r
}

/// Vertices `v` with `|f(u) - f(v)| = D + 1 - d(u,v)`, in row-major order.
pub fn tightness_neighbors(f: &Labeling, u: Vertex) -> Result<Vec<Vertex>> {
    let g = f.grid;
    let fu = f.get(u)?;
    Ok(g.vertices()
        .filter(|&v| v != u && f.labels[g.index(v)].abs_diff(fu) == requirement(&g, u, v))
        .collect())
}

/// Whether the constraint between `u_{k-2}` and `u_k` is stronger than the
/// two consecutive constraints chained through `u_{k-1}`, i.e. whether the
/// step into `u_k` must carry a bump when its label comes from `u_{k-1}` alone.
///
/// `prev_bump` is the bump on the step `u_{k-2} -> u_{k-1}`. The condition is
/// `2 * d_rect(u_{k-2}, u_k; u_{k-1}) > D + 1 + prev_bump`.
pub fn bump_condition_holds(
    g: &GridGraph,
    u_km2: Vertex,
    u_km1: Vertex,
    u_k: Vertex,
    prev_bump: u64,
) -> Result<bool> {
    let r = g.d_rect(u_km2, u_k, u_km1)? as u64;
    Ok(2 * r > g.diameter() as u64 + 1 + prev_bump)
}
