//! Exact, brute-force ground truth for small grids.
//!
//! Nothing here uses the closed forms or the constructions, so agreement
//! between the two is evidence rather than tautology.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::grid::{manhattan, GridGraph, Vertex};
use crate::labeling::{min_span_labeling, span, step_report, Labeling, Ordering};

/// Default size guard for [`oracle_t_plus`].
pub const T_PLUS_MAX_N: usize = 22;
/// Default size guard for [`oracle_rn`].
pub const RN_MAX_N: usize = 12;
/// Largest grid for which [`oracle_rn`] builds the subset table used as its
/// pruning bound. Above it the bound degrades to one unit per remaining step.
pub const RN_TABLE_MAX_N: usize = 20;
/// Size guard for [`exhaustive_min_span_check`].
pub const EXHAUSTIVE_MAX_N: usize = 9;

/// Resource guards. `None` means the oracle's own default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n: Option<usize>,
    pub max_nodes: Option<u64>,
}

impl OracleLimits {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleLimits {
            max_n: Some(max_n),
            max_nodes: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub value: u64,
    /// For t+, a path attaining the value; for rn, an ordering whose minimal
    /// labeling attains it.
    pub witness: Ordering,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl OracleResult {
    pub fn labeling(&self) -> Labeling {
        min_span_labeling(&self.witness)
    }
}

fn guard(g: &GridGraph, limit: usize, what: &str) -> Result<()> {
    if g.n() > limit {
        return Err(Error::ResourceLimit {
            what: format!("{what} on {g} has n = {} above the guard {limit}", g.n()),
            incumbent: None,
        });
    }
    Ok(())
}

/// Held-Karp table for the longest Hamiltonian path under `w`:
/// `table[mask * n + v]` is the best weight of a path covering exactly
/// `mask` and ending at `v` (`u16::MAX` if impossible). By reversal it is also
/// the best path starting at `v`.
struct PathTable {
    n: usize,
    table: Vec<u16>,
}

const NONE: u16 = u16::MAX;

impl PathTable {
    fn build(n: usize, w: &[u16]) -> Self {
        let mut table = vec![NONE; (1usize << n) * n];
        for v in 0..n {
            table[(1 << v) * n + v] = 0;
        }
        for mask in 1usize..1 << n {
            for v in 0..n {
                let cur = table[mask * n + v];
                if cur == NONE {
                    continue;
                }
                let mut free = !mask & ((1 << n) - 1);
                while free != 0 {
                    let u = free.trailing_zeros() as usize;
                    free &= free - 1;
                    let slot = &mut table[(mask | 1 << u) * n + u];
                    let cand = cur + w[v * n + u];
                    if *slot == NONE || cand > *slot {
                        *slot = cand;
                    }
                }
            }
        }
        PathTable { n, table }
    }

    fn get(&self, mask: usize, v: usize) -> u16 {
        self.table[mask * self.n + v]
    }

    /// Best full path and its weight.
    fn best_path(&self, w: &[u16]) -> (u16, Vec<usize>) {
        let n = self.n;
        let full = (1usize << n) - 1;
        let mut last = (0..n)
            .max_by_key(|&v| (self.get(full, v), std::cmp::Reverse(v)))
            .unwrap();
        let value = self.get(full, last);
        let mut path = vec![last];
        let mut mask = full;
        while mask.count_ones() > 1 {
            let rest = mask & !(1 << last);
            let target = self.get(mask, last);
            let prev = (0..n)
                .find(|&u| {
                    rest >> u & 1 == 1 && {
                        let p = self.get(rest, u);
                        p != NONE && p + w[u * n + last] == target
                    }
                })
                .expect("table entries are attained by some predecessor");
            path.push(prev);
            mask = rest;
            last = prev;
        }
        path.reverse();
        (value, path)
    }
}

fn distance_matrix(g: &GridGraph, f: impl Fn(Vertex, Vertex) -> usize) -> Vec<u16> {
    let n = g.n();
    let mut w = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            w[i * n + j] = f(g.vertex(i), g.vertex(j)) as u16;
        }
    }
    w
}

fn max_path_oracle(
    g: &GridGraph,
    limits: OracleLimits,
    w: Vec<u16>,
    what: &str,
) -> Result<OracleResult> {
    guard(g, limits.max_n.unwrap_or(T_PLUS_MAX_N), what)?;
    let start = Instant::now();
    let n = g.n();
    let t = PathTable::build(n, &w);
    let (value, path) = t.best_path(&w);
    Ok(OracleResult {
        value: value as u64,
        witness: Ordering::new(*g, path.into_iter().map(|i| g.vertex(i)).collect())?,
        nodes_explored: ((1u64 << n) * n as u64),
        elapsed: start.elapsed(),
    })
}

/// Exact `t+(G)`: the longest Hamiltonian path in the distance metric.
pub fn oracle_t_plus(g: &GridGraph, limits: OracleLimits) -> Result<OracleResult> {
    max_path_oracle(g, limits, distance_matrix(g, manhattan), "oracle_t_plus")
}

/// Exact maximum of `sum |x_{i+1} - x_i|` over orderings of G.
pub fn oracle_max_dx(g: &GridGraph, limits: OracleLimits) -> Result<OracleResult> {
    max_path_oracle(
        g,
        limits,
        distance_matrix(g, |u, v| u.x.abs_diff(v.x)),
        "oracle_max_dx",
    )
}

/// Images of vertex index `i` under the symmetries of the grid.
fn orbit(g: &GridGraph, i: usize) -> Vec<usize> {
    let (a, b) = (g.a(), g.b());
    let u = g.vertex(i);
    let mut imgs = vec![
        u,
        Vertex::new(a + 1 - u.x, u.y),
        Vertex::new(u.x, b + 1 - u.y),
        Vertex::new(a + 1 - u.x, b + 1 - u.y),
    ];
    if a == b {
        let t: Vec<Vertex> = imgs.iter().map(|v| v.transposed()).collect();
        imgs.extend(t);
    }
    imgs.into_iter().map(|v| g.index(v)).collect()
}

struct Search<'a> {
    n: usize,
    d1: u64,
    req: Vec<u64>,
    table: Option<&'a PathTable>,
    seq: Vec<usize>,
    labels: Vec<u64>,
    best: u64,
    best_seq: Vec<usize>,
    nodes: u64,
    max_nodes: Option<u64>,
    aborted: bool,
}

impl Search<'_> {
    /// Lower bound on how much the label must still grow after `last` to
    /// place every vertex of `rest`.
    fn residual(&self, last: usize, rest: usize) -> u64 {
        let k = rest.count_ones() as u64;
        if k == 0 {
            return 0;
        }
        match self.table {
            Some(t) => k * self.d1 - t.get(rest | 1 << last, last) as u64,
            None => k,
        }
    }

    fn label_for(&self, w: usize) -> u64 {
        self.seq
            .iter()
            .zip(&self.labels)
            .map(|(&u, &l)| l + self.req[u * self.n + w])
            .max()
            .unwrap_or(0)
    }

    fn dfs(&mut self, rest: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            self.aborted = true;
            return;
        }
        let mut children: Vec<(u64, u64, usize)> = Vec::new();
        let mut free = rest;
        while free != 0 {
            let w = free.trailing_zeros() as usize;
            free &= free - 1;
            let l = self.label_for(w);
            let lb = l + self.residual(w, rest & !(1 << w));
            if lb < self.best {
                children.push((lb, l, w));
            }
        }
        children.sort_unstable();
        for (lb, l, w) in children {
            if lb >= self.best {
                break;
            }
            self.seq.push(w);
            self.labels.push(l);
            let left = rest & !(1 << w);
            if left == 0 {
                self.best = l;
                self.best_seq = self.seq.clone();
            } else {
                self.dfs(left);
            }
            self.seq.pop();
            self.labels.pop();
        }
    }
}

/// Exact `rn(G)` by branch-and-bound over orderings.
///
/// Each partial ordering carries its greedy labels, which are optimal for
/// that prefix. A branch is cut when its label plus a lower bound on the
/// remaining growth reaches the incumbent. The first vertex ranges over one
/// representative per symmetry orbit.
pub fn oracle_rn(g: &GridGraph, limits: OracleLimits) -> Result<OracleResult> {
    guard(g, limits.max_n.unwrap_or(RN_MAX_N), "oracle_rn")?;
    if g.n() > usize::BITS as usize - 1 {
        return Err(Error::ResourceLimit {
            what: format!("oracle_rn cannot index {g}"),
            incumbent: None,
        });
    }
    let start = Instant::now();
    let n = g.n();
    let d1 = g.diameter() as u64 + 1;
    let dist = distance_matrix(g, manhattan);
    let table = (n <= RN_TABLE_MAX_N).then(|| PathTable::build(n, &dist));
    let req = dist.iter().map(|&d| d1 - d as u64).collect();

    // Any ordering gives an upper bound; row-major is as good a start as any.
    let row_major = Ordering::new(*g, g.vertices().collect())?;
    let mut s = Search {
        n,
        d1,
        req,
        table: table.as_ref(),
        seq: Vec::with_capacity(n),
        labels: Vec::with_capacity(n),
        best: span(&min_span_labeling(&row_major)),
        best_seq: (0..n).collect(),
        nodes: 0,
        max_nodes: limits.max_nodes,
        aborted: false,
    };
    let all = (1usize << n) - 1;
    for first in 0..n {
        if orbit(g, first).into_iter().min() != Some(first) {
            continue;
        }
        if n == 1 {
            s.best = 0;
            break;
        }
        if s.residual(first, all & !(1 << first)) >= s.best {
            continue;
        }
        s.seq.push(first);
        s.labels.push(0);
        s.dfs(all & !(1 << first));
        s.seq.clear();
        s.labels.clear();
    }
    if s.aborted {
        return Err(Error::ResourceLimit {
            what: format!("oracle_rn on {g} stopped after {} nodes", s.nodes - 1),
            incumbent: Some(s.best),
        });
    }
    let witness = Ordering::new(*g, s.best_seq.iter().map(|&i| g.vertex(i)).collect())?;
    debug_assert_eq!(step_report(&witness).span(), s.best);
    Ok(OracleResult {
        value: s.best,
        witness,
        nodes_explored: s.nodes,
        elapsed: start.elapsed(),
    })
}

/// Exact maximum of `sum (d_i - b_i)` over orderings, `(n-1)(D+1) - rn(G)`.
pub fn oracle_max_d_minus_b(g: &GridGraph, limits: OracleLimits) -> Result<u64> {
    let rn = oracle_rn(g, limits)?.value;
    Ok((g.n() as u64 - 1) * (g.diameter() as u64 + 1) - rn)
}

/// Whether no radio labeling visiting the vertices in the order `s` has a
/// smaller span than the greedy one, decided by trying every label sequence
/// with `f(u_1) = 0` and span below the greedy span.
pub fn exhaustive_min_span_check(s: &Ordering) -> Result<bool> {
    let g = s.grid();
    guard(&g, EXHAUSTIVE_MAX_N, "exhaustive_min_span_check")?;
    let seq = s.as_slice();
    let n = seq.len();
    if n < 2 {
        return Ok(true);
    }
    let target = span(&min_span_labeling(s));
    let d1 = g.diameter() as u64 + 1;
    let req = |i: usize, j: usize| d1 - manhattan(seq[i], seq[j]) as u64;
    // tail[i]: consecutive requirements from u_i to u_n, a floor on f(u_n) - f(u_i).
    let mut tail = vec![0u64; n];
    for i in (0..n - 1).rev() {
        tail[i] = tail[i + 1] + req(i, i + 1);
    }

    fn search(
        i: usize,
        f: &mut Vec<u64>,
        n: usize,
        target: u64,
        tail: &[u64],
        req: &dyn Fn(usize, usize) -> u64,
    ) -> bool {
        if i == n {
            return true;
        }
        let lo = f[i - 1] + 1;
        for l in lo..target {
            if l + tail[i] >= target {
                break;
            }
            if (0..i).all(|j| l - f[j] >= req(j, i)) {
                f.push(l);
                let found = search(i + 1, f, n, target, tail, req);
                f.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }

    let mut f = vec![0u64];
    Ok(!search(1, &mut f, n, target, &tail, &req))
}
