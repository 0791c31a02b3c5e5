//! Four-step lattice paths in the first quadrant.
//!
//! Steps are `NE: (x,y) -> (x+1,y+1)`, `SE: (x,y) -> (x+1,y-1)`,
//! `S: (x,y) -> (x,y-1)` and `E: (x,0) -> (x+1,0)`. A south step only follows
//! a north-east step, an east step only happens at height 0, and a nonempty
//! path ends at height 0 with `SE` or `S`. A peak is the vertex between a
//! north-east step and a following `S` (NES peak) or `SE` (NESE peak).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    NE,
    SE,
    S,
    E,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::NE, Step::SE, Step::S, Step::E];

    pub fn is_down(self) -> bool {
        matches!(self, Step::SE | Step::S)
    }

    fn dx(self) -> i64 {
        match self {
            Step::S => 0,
            _ => 1,
        }
    }

    fn dy(self) -> i64 {
        match self {
            Step::NE => 1,
            Step::SE | Step::S => -1,
            Step::E => 0,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Step::NE => "NE",
            Step::SE => "SE",
            Step::S => "S",
            Step::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for Step {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "NE" => Ok(Step::NE),
            "SE" => Ok(Step::SE),
            "S" => Ok(Step::S),
            "E" => Ok(Step::E),
            other => Err(Error::InvalidObject(format!("unknown step {other:?}"))),
        }
    }
}

/// A path given by its starting height on the y-axis and its steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePath {
    pub start: u32,
    pub steps: Vec<Step>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PeakKind {
    NES,
    NESE,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Peak {
    pub x: i64,
    pub y: i64,
    /// Number of south steps strictly to the left of the peak.
    pub u: usize,
    pub kind: PeakKind,
    /// Parity of the number of east steps to the left of the peak.
    pub east_parity: u8,
    /// Position of the peak's north-east step in `steps`.
    pub ne_index: usize,
}

impl LatticePath {
    pub fn new(start: u32, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Parses a compact description such as `"SE NE S SE"`.
    pub fn parse(start: u32, steps: &str) -> Result<Self> {
        let steps = steps
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(Step::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { start, steps })
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every vertex `(x, y)` in walk order, starting with `(0, start)`.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0i64, self.start as i64);
        out.push((x, y));
        for s in &self.steps {
            x += s.dx();
            y += s.dy();
            out.push((x, y));
        }
        out
    }

    /// Checks the step rules without regard to `(k, i)`.
    pub fn is_well_formed(&self) -> bool {
        let mut y = self.start as i64;
        let mut prev: Option<Step> = None;
        for &s in &self.steps {
            match s {
                Step::S if prev != Some(Step::NE) => return false,
                Step::E if y != 0 => return false,
                _ => {}
            }
            y += s.dy();
            if y < 0 {
                return false;
            }
            prev = Some(s);
        }
        match prev {
            None => self.start == 0,
            Some(last) => last.is_down() && y == 0,
        }
    }

    pub fn max_height(&self) -> i64 {
        self.vertices().into_iter().map(|v| v.1).max().unwrap_or(0)
    }

    pub fn peaks(&self) -> Vec<Peak> {
        peaks(self)
    }

    pub fn major_index(&self) -> u64 {
        major_index(self)
    }

    pub fn south_steps(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::S).count()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}:", self.start)?;
        for s in &self.steps {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

/// True when the path is well formed, starts at height `k-i` and stays below `k`.
pub fn validate(p: &LatticePath, k: usize, i: usize) -> bool {
    k >= 1 && (1..=k).contains(&i) && p.start as usize == k - i && p.is_well_formed() && p.max_height() < k as i64
}

/// Peaks from left to right.
pub fn peaks(p: &LatticePath) -> Vec<Peak> {
    let mut out = Vec::new();
    let (mut x, mut y) = (0i64, p.start as i64);
    let (mut south, mut east) = (0usize, 0u8);
    for (idx, &s) in p.steps.iter().enumerate() {
        x += s.dx();
        y += s.dy();
        if s == Step::NE {
            if let Some(&next) = p.steps.get(idx + 1) {
                if next.is_down() {
                    out.push(Peak {
                        x,
                        y,
                        u: south,
                        kind: if next == Step::S { PeakKind::NES } else { PeakKind::NESE },
                        east_parity: east,
                        ne_index: idx,
                    });
                }
            }
        }
        match s {
            Step::S => south += 1,
            Step::E => east ^= 1,
            _ => {}
        }
    }
    out
}

/// Sum of the abscissae of the peaks.
pub fn major_index(p: &LatticePath) -> u64 {
    peaks(p).iter().map(|pk| pk.x as u64).sum()
}

/// Relative height of every peak, left to right.
///
/// For a peak at `(x, y)` and a candidate `h`, the nearest vertex at height
/// `y-h` before the peak and the nearest one after it are the best possible
/// witnesses, since widening the window can only add obstructing peaks.
pub fn relative_heights(p: &LatticePath) -> Vec<usize> {
    let verts = p.vertices();
    let pks = peaks(p);
    pks.iter()
        .map(|pk| {
            let v = pk.ne_index + 1;
            let mut best = 0;
            for h in 1..=pk.y {
                let level = pk.y - h;
                let Some(left) = (0..v).rev().find(|&w| verts[w].1 == level) else {
                    continue;
                };
                let Some(right) = (v + 1..verts.len()).find(|&w| verts[w].1 == level) else {
                    continue;
                };
                let clear = pks.iter().all(|q| {
                    let w = q.ne_index + 1;
                    w <= left || w >= right || q.y < pk.y || (q.y == pk.y && q.x >= pk.x)
                });
                if clear {
                    best = h as usize;
                }
            }
            best
        })
        .collect()
}

/// `(n_1, ..., n_{k-1})` where `n_j` counts peaks of relative height at least `j`.
pub fn relative_height_profile(p: &LatticePath, k: usize) -> Vec<usize> {
    let rh = relative_heights(p);
    (1..k).map(|j| rh.iter().filter(|&&h| h >= j).count()).collect()
}

/// Every `(k, i)`-path of major index exactly `n`, in depth-first order with
/// step preference `NE, SE, S, E`.
pub fn enumerate_paths(k: usize, i: usize, n: u64) -> Vec<LatticePath> {
    let mut out = Vec::new();
    for_each_path_upto(k, i, n, |p, m| {
        if m == n {
            out.push(p.clone());
        }
    });
    out
}

/// Calls `f(path, major_index)` on every `(k, i)`-path of major index at most `nmax`.
///
/// Pruning: a north-east step landing at abscissa `x` forces a later peak at
/// abscissa at least `x`, and an east step landing at `x` forces one at
/// abscissa at least `x + 1`, since the path cannot end at height 0 after an
/// east step without climbing again. Every step except `S` advances `x` and
/// the height stays in `[0, k-1]`, so the search is finite.
pub fn for_each_path_upto<F: FnMut(&LatticePath, u64)>(k: usize, i: usize, nmax: u64, mut f: F) {
    if k < 1 || i < 1 || i > k {
        return;
    }
    let mut path = LatticePath::new((k - i) as u32, Vec::new());
    let start = (k - i) as i64;
    dfs(&mut path, k as i64, 0, start, 0, nmax, &mut f);
}

fn dfs<F: FnMut(&LatticePath, u64)>(path: &mut LatticePath, k: i64, x: i64, y: i64, m: u64, nmax: u64, f: &mut F) {
    let last = path.steps.last().copied();
    if y == 0 && last.is_none_or(Step::is_down) {
        f(path, m);
    }
    for s in Step::ALL {
        let (nx, ny) = (x + s.dx(), y + s.dy());
        let mut nm = m;
        match s {
            Step::NE => {
                if ny > k - 1 || m + nx as u64 > nmax {
                    continue;
                }
            }
            Step::SE | Step::S => {
                if y == 0 || (s == Step::S && last != Some(Step::NE)) {
                    continue;
                }
                if last == Some(Step::NE) {
                    nm += x as u64;
                    if nm > nmax {
                        continue;
                    }
                }
            }
            Step::E => {
                if y != 0 || m + nx as u64 + 1 > nmax {
                    continue;
                }
            }
        }
        path.steps.push(s);
        dfs(path, k, nx, ny, nm, nmax, f);
        path.steps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn short_path() -> LatticePath {
        LatticePath::parse(2, "SE NE S SE NE SE NE S NE SE").unwrap()
    }

    #[test]
    fn short_path_peaks_and_major_index() {
        let p = short_path();
        assert!(validate(&p, 3, 1));
        let pk = peaks(&p);
        let xy: Vec<_> = pk.iter().map(|q| (q.x, q.y, q.kind)).collect();
        assert_eq!(
            xy,
            vec![(2, 2, PeakKind::NES), (4, 1, PeakKind::NESE), (6, 1, PeakKind::NES), (7, 1, PeakKind::NESE)]
        );
        assert_eq!(major_index(&p), 19);
    }

    #[test]
    fn rule_violations_are_rejected() {
        assert!(!LatticePath::parse(1, "NE E SE SE").unwrap().is_well_formed());
        assert!(!LatticePath::parse(1, "S").unwrap().is_well_formed());
        assert!(!LatticePath::parse(0, "E").unwrap().is_well_formed());
        assert!(validate(&LatticePath::new(0, vec![]), 3, 3));
    }

    #[test]
    fn enumeration_at_zero_is_the_descent() {
        for k in 2..5 {
            for i in 1..=k {
                let ps = enumerate_paths(k, i, 0);
                assert_eq!(ps.len(), 1);
                assert_eq!(ps[0].steps, vec![Step::SE; k - i]);
            }
        }
    }

    #[test]
    fn single_tent_has_relative_height_one() {
        let p = LatticePath::parse(0, "NE SE").unwrap();
        assert_eq!(relative_heights(&p), vec![1]);
    }
}
