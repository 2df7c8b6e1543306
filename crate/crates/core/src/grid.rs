//! Grid graph model: coordinates, distances, regions and orientation.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A vertex of a grid, 1-indexed. `x` runs along the `a` side, `y` along `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
}

impl Vertex {
    pub const fn new(x: usize, y: usize) -> Self {
        Vertex { x, y }
    }

    pub fn transposed(self) -> Self {
        Vertex {
            x: self.y,
            y: self.x,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The grid G_{a,b}: the Cartesian product of paths on `a` and `b` vertices.
///
/// Any positive dimensions are accepted here so that the metric and the exact
/// oracles work on degenerate grids too. The closed forms and constructions
/// check for `a, b >= 3` themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridGraph {
    a: usize,
    b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParityCase {
    EvenEven,
    EvenOdd,
    OddOdd,
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityCase::EvenEven => "even-even",
            ParityCase::EvenOdd => "even-odd",
            ParityCase::OddOdd => "odd-odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    QuadrantI,
    QuadrantII,
    QuadrantIII,
    QuadrantIV,
    /// The middle row `y = (b+1)/2` of an odd `b`, off the middle column.
    XMedian,
    /// The middle column `x = (a+1)/2` of an odd `a`, off the middle row.
    YMedian,
    MedianIntersection,
}

impl GridGraph {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Input(format!(
                "grid dimensions must be positive, got {a}x{b}"
            )));
        }
        Ok(GridGraph { a, b })
    }

    /// Like [`GridGraph::new`] but rejects ladders and paths.
    pub fn supported(a: usize, b: usize) -> Result<Self> {
        if a < 3 || b < 3 {
            return Err(Error::UnsupportedSize { a, b });
        }
        Ok(GridGraph { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.a * self.b
    }

    pub fn diameter(&self) -> usize {
        self.a + self.b - 2
    }

    pub fn is_supported(&self) -> bool {
        self.a >= 3 && self.b >= 3
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.a).contains(&v.x) && (1..=self.b).contains(&v.y)
    }

    pub fn check(&self, v: Vertex) -> Result<Vertex> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(Error::OutOfBounds {
                x: v.x,
                y: v.y,
                a: self.a,
                b: self.b,
            })
        }
    }

    /// Row-major index: `(1,1)` is 0, `(a,1)` is `a-1`, `(1,2)` is `a`.
    pub fn index(&self, v: Vertex) -> usize {
        debug_assert!(self.contains(v));
        (v.y - 1) * self.a + (v.x - 1)
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        debug_assert!(i < self.n());
        Vertex {
            x: i % self.a + 1,
            y: i / self.a + 1,
        }
    }

    /// All vertices in row-major order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n()).map(move |i| self.vertex(i))
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        Ok(manhattan(u, v))
    }

    /// Distance from `probe` to the axis-aligned rectangle spanned by the two
    /// corners. Twice this is the slack in the triangle inequality through
    /// `probe`.
    pub fn d_rect(&self, corner1: Vertex, corner2: Vertex, probe: Vertex) -> Result<usize> {
        self.check(corner1)?;
        self.check(corner2)?;
        self.check(probe)?;
        Ok(d_rect(corner1, corner2, probe))
    }

    pub fn parity_case(&self) -> ParityCase {
        match (self.a.is_multiple_of(2), self.b.is_multiple_of(2)) {
            (true, true) => ParityCase::EvenEven,
            (false, false) => ParityCase::OddOdd,
            _ => ParityCase::EvenOdd,
        }
    }

    pub fn transpose(&self) -> GridGraph {
        GridGraph {
            a: self.b,
            b: self.a,
        }
    }

    pub fn classify_region(&self, v: Vertex) -> Result<Region> {
        self.check(v)?;
        // Low and high halves per axis; for an odd side the middle line is
        // in neither.
        let side = |c: usize, len: usize| -> Option<bool> {
            if len % 2 == 1 && c == len.div_ceil(2) {
                None
            } else {
                Some(c > len / 2)
            }
        };
        Ok(match (side(v.x, self.a), side(v.y, self.b)) {
            (Some(true), Some(true)) => Region::QuadrantI,
            (Some(false), Some(true)) => Region::QuadrantII,
            (Some(false), Some(false)) => Region::QuadrantIII,
            (Some(true), Some(false)) => Region::QuadrantIV,
            (Some(_), None) => Region::XMedian,
            (None, Some(_)) => Region::YMedian,
            (None, None) => Region::MedianIntersection,
        })
    }
}

impl fmt::Display for GridGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G_{{{},{}}}", self.a, self.b)
    }
}

/// Unchecked Manhattan distance.
#[inline]
pub fn manhattan(u: Vertex, v: Vertex) -> usize {
    u.x.abs_diff(v.x) + u.y.abs_diff(v.y)
}

#[inline]
fn gap(lo: usize, hi: usize, p: usize) -> usize {
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    lo.saturating_sub(p) + p.saturating_sub(hi)
}

/// Unchecked rectangle distance, see [`GridGraph::d_rect`].
#[inline]
pub fn d_rect(corner1: Vertex, corner2: Vertex, probe: Vertex) -> usize {
    gap(corner1.x, corner2.x, probe.x) + gap(corner1.y, corner2.y, probe.y)
}

/// Puts a supported grid into the orientation the constructions are written
/// for: the even side first when parities differ, otherwise `a <= b`.
/// Returns the normalized grid and whether it is the transpose of the input.
pub fn normalize_orientation(a: usize, b: usize) -> Result<(GridGraph, bool)> {
    let g = GridGraph::supported(a, b)?;
    let swap = match (a.is_multiple_of(2), b.is_multiple_of(2)) {
        (false, true) => true,
        (true, false) => false,
        _ => a > b,
    };
    Ok(if swap {
        (g.transpose(), true)
    } else {
        (g, false)
    })
}
