//! Constructive correspondences between the families.
//!
//! | map | from | to |
//! |-----|------|----|
//! | [`frobenius_to_overpartition`] | Frobenius symbol | overpartition (hook algorithm) |
//! | [`durfee_frobenius`] | Frobenius symbol | overpartition (columns become the Durfee size) |
//! | [`path_to_frobenius`] | `(k,i)`-path | symbol with ranks in `[2-i, 2k-i-1]` |
//! | [`burge_f`] | multiplicity sequence | multiplicity sequence of smaller weight |
//! | [`uplift`] | [`UpliftCertificate`] | `(k,i)`-path |
//!
//! Each has an inverse except [`burge_f`], which is only used for counting.

use serde::{Deserialize, Serialize};

use crate::objects::{
    generalized_durfee_size, multuple_division, FrobeniusSymbol, Mult, MultiplicitySequence, Overpartition, Part,
};
use crate::paths::{peaks, relative_heights, validate, LatticePath, PeakKind, Step};
use crate::{Error, Result};

/// Hook algorithm: columns are read right to left, an overlined bottom entry
/// wraps a hook around the partition built so far, and a plain one adds a
/// column to it while its top entry becomes an overlined part.
pub fn frobenius_to_overpartition(f: &FrobeniusSymbol) -> Overpartition {
    let mut alpha: Vec<u32> = Vec::new();
    let mut beta: Vec<u32> = Vec::new();
    for (&a, b) in f.top().iter().zip(f.bottom()).rev() {
        let a = a + 1;
        let b_len = b.v as usize;
        if b.o {
            let mut next = Vec::with_capacity(b_len + 1);
            next.push(a);
            next.extend(alpha.iter().map(|&p| p + 1));
            next.resize(b_len + 1, 1);
            alpha = next;
        } else {
            if alpha.len() < b_len {
                alpha.resize(b_len, 0);
            }
            for p in alpha.iter_mut().take(b_len) {
                *p += 1;
            }
            beta.push(a);
        }
    }
    let parts = alpha.into_iter().map(Part::plain).chain(beta.into_iter().map(Part::over)).collect();
    Overpartition::from_unsorted(parts).expect("hook algorithm yields an overpartition")
}

/// Inverse of [`frobenius_to_overpartition`], peeling columns from the left.
pub fn overpartition_to_frobenius(op: &Overpartition) -> FrobeniusSymbol {
    let mut alpha = op.plain_values();
    let mut beta = op.overlined_values();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    while !alpha.is_empty() || !beta.is_empty() {
        let hook = match (alpha.first(), beta.first()) {
            (Some(&a), Some(&b)) => a > b,
            (Some(_), None) => true,
            _ => false,
        };
        if hook {
            top.push(alpha[0] - 1);
            bottom.push(Part::over(alpha.len() as u32 - 1));
            alpha = alpha[1..].iter().map(|&p| p - 1).filter(|&p| p > 0).collect();
        } else {
            top.push(beta.remove(0) - 1);
            bottom.push(Part::plain(alpha.len() as u32));
            alpha = alpha.iter().map(|&p| p - 1).filter(|&p| p > 0).collect();
        }
    }
    FrobeniusSymbol::new(top, bottom).expect("peeling an overpartition yields a valid symbol")
}

/// Intermediate objects of [`durfee_frobenius`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DurfeeTrace {
    pub beta: Vec<u32>,
    pub delta: Vec<u32>,
    pub alpha: Vec<u32>,
    pub gamma: Overpartition,
    pub lambda: Overpartition,
}

fn conjugate(p: &[u32]) -> Vec<u32> {
    let Some(&first) = p.first() else {
        return Vec::new();
    };
    (1..=first).map(|c| p.iter().filter(|&&v| v >= c).count() as u32).collect()
}

/// Sends a symbol with `N` columns and `j` plain bottom entries to an
/// overpartition with generalized Durfee square of size `N` and `j`
/// overlined parts, recording the intermediate objects.
pub fn durfee_frobenius_trace(f: &FrobeniusSymbol) -> DurfeeTrace {
    let beta: Vec<u32> = f.top().iter().map(|&a| a + 1).collect();
    let mut alpha: Vec<u32> = f.bottom().iter().map(|b| b.v).collect();
    let mut delta = Vec::new();
    for (idx, b) in f.bottom().iter().enumerate() {
        if b.o {
            for a in alpha.iter_mut().take(idx) {
                *a -= 1;
            }
            delta.push(idx as u32);
        }
    }
    delta.reverse();
    let mut gamma: Vec<Part> = beta.iter().map(|&b| Part::over(b)).collect();
    for &d in &delta {
        let g = &mut gamma[d as usize];
        g.v += d;
        g.o = false;
    }
    let gamma = Overpartition::from_unsorted(gamma).expect("gamma is an overpartition");
    let mut parts = gamma.parts().to_vec();
    parts.extend(conjugate(&alpha).into_iter().map(Part::plain));
    let lambda = Overpartition::from_unsorted(parts).expect("lambda is an overpartition");
    DurfeeTrace { beta, delta, alpha, gamma, lambda }
}

pub fn durfee_frobenius(f: &FrobeniusSymbol) -> Overpartition {
    durfee_frobenius_trace(f).lambda
}

/// Inverse of [`durfee_frobenius`].
pub fn durfee_frobenius_inverse(op: &Overpartition) -> FrobeniusSymbol {
    let n = generalized_durfee_size(op);
    let over = op.overlined_values();
    let plain = op.plain_values();
    let take = n - over.len();
    let gamma_plain = &plain[..take];
    let mut alpha = conjugate(&plain[take..]);
    alpha.resize(n, 0);

    let mut beta = Vec::with_capacity(n);
    let mut delta = Vec::new();
    let (mut io, mut ip) = (0, 0);
    for p in 1..=n {
        let pick_plain = match (over.get(io), gamma_plain.get(ip)) {
            (Some(&go), Some(&gp)) => gp as usize >= go as usize + p,
            (None, Some(_)) => true,
            _ => false,
        };
        if pick_plain {
            beta.push(gamma_plain[ip] - (p as u32 - 1));
            delta.push(p - 1);
            ip += 1;
        } else {
            beta.push(over[io]);
            io += 1;
        }
    }
    let top: Vec<u32> = beta.iter().map(|&b| b - 1).collect();
    let bottom: Vec<Part> = (1..=n)
        .map(|j| Part {
            v: alpha[j - 1] + delta.iter().filter(|&&d| d >= j).count() as u32,
            o: delta.contains(&(j - 1)),
        })
        .collect();
    FrobeniusSymbol::new(top, bottom).expect("inverse Durfee map yields a valid symbol")
}

/// Reads each peak as a column; the `t`-th peak from the right gives column `t`.
pub fn path_to_frobenius(p: &LatticePath, k: usize, i: usize) -> Result<FrobeniusSymbol> {
    if !validate(p, k, i) {
        return Err(Error::InvalidObject(format!("path {p} violates the ({k},{i}) conditions")));
    }
    let a = (k - i) as i64;
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for pk in peaks(p).iter().rev() {
        let (x, y, u) = (pk.x, pk.y, pk.u as i64);
        let (s2, t2) = if pk.east_parity == 0 {
            (x + a - y + u, x - a + y - 2 - u)
        } else {
            (x + a + y - 1 + u, x - a - y - 1 - u)
        };
        debug_assert!(s2 % 2 == 0 && t2 % 2 == 0 && s2 >= 0 && t2 >= 0);
        top.push((s2 / 2) as u32);
        bottom.push(Part { v: (t2 / 2) as u32, o: pk.kind == PeakKind::NESE });
    }
    FrobeniusSymbol::new(top, bottom)
}

/// The unique `(k,i)`-path whose peaks give the columns of `f`.
pub fn frobenius_to_path(f: &FrobeniusSymbol, k: usize, i: usize) -> Result<LatticePath> {
    if k < 2 || i < 1 || i > k {
        return Err(Error::InvalidParameters(format!("k={k}, i={i}")));
    }
    let a = (k - i) as i64;
    let (lo, hi) = (2 - i as i64, 2 * k as i64 - i as i64 - 1);
    let ranks = f.successive_ranks();
    for (col, &r) in ranks.iter().enumerate() {
        if r < lo || r > hi {
            return Err(Error::RankOutOfRange { column: col + 1, rank: r, lo, hi });
        }
    }
    let n = f.columns();
    let mut steps = Vec::new();
    let (mut x0, mut y0, mut parity) = (0i64, a, 0u8);
    let bad = |why: &str| Error::InvalidObject(format!("no path realizes {f}: {why}"));
    for col in (0..n).rev() {
        let r = ranks[col];
        let s = f.top()[col] as i64;
        let t = f.bottom()[col].v as i64;
        let (y, kind) = if r <= a { (a + 1 - r, 0u8) } else { (r - a, 1u8) };
        let x = s + t + 1;
        let forced = x - x0 - y0 - y;
        if forced > 0 {
            if (forced % 2) as u8 != kind ^ parity {
                return Err(bad("east run has the wrong parity"));
            }
            steps.extend(std::iter::repeat_n(Step::SE, y0 as usize));
            steps.extend(std::iter::repeat_n(Step::E, forced as usize));
            steps.extend(std::iter::repeat_n(Step::NE, y as usize));
            parity ^= (forced % 2) as u8;
        } else {
            if kind != parity {
                return Err(bad("type change without an east step"));
            }
            let d2 = x - x0 + y0 - y;
            if d2 < 0 || d2 % 2 != 0 {
                return Err(bad("peaks are not reachable"));
            }
            let d = d2 / 2;
            let m = x - x0 - d;
            if m < 1 {
                return Err(bad("peaks are too close"));
            }
            steps.extend(std::iter::repeat_n(Step::SE, d as usize));
            steps.extend(std::iter::repeat_n(Step::NE, m as usize));
        }
        if f.bottom()[col].o {
            steps.push(Step::SE);
            x0 = x + 1;
        } else {
            steps.push(Step::S);
            x0 = x;
        }
        y0 = y - 1;
    }
    steps.extend(std::iter::repeat_n(Step::SE, y0 as usize));
    let path = LatticePath::new(a as u32, steps);
    if path_to_frobenius(&path, k, i).ok().as_ref() != Some(f) {
        return Err(bad("reconstruction does not read back"));
    }
    Ok(path)
}

/// Applies the map F to every multuple: the last multiplicity of the
/// multuple drops by one, the first rises by one, and the overline moves to
/// the first entry. A resulting multiplicity of the part 0 is discarded.
pub fn burge_f(ms: &MultiplicitySequence) -> MultiplicitySequence {
    let (multuples, _) = multuple_division(ms);
    let mut e: Vec<Mult> = ms.entries().to_vec();
    for mu in &multuples {
        let m = mu.start;
        let end = m + mu.length();
        if e[end].count == 1 && e[end].o {
            e[end].o = false;
            e[m].o = true;
        } else if mu.length() > 1 {
            e[end - 1].o = false;
            e[m].o = true;
        }
        e[end].count -= 1;
        e[m].count += 1;
    }
    e[0] = Mult::default();
    MultiplicitySequence::from_entries(e).expect("F keeps a valid multiplicity sequence")
}

/// Data from which [`uplift`] builds a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpliftCertificate {
    /// Path without south steps, starting at `k-i` (or `k-2` when `i = 1`),
    /// staying below height `k-1`.
    pub base: LatticePath,
    /// Distinct parts in `[0, n_1 - 1]`, decreasing.
    pub lambda: Vec<u32>,
    /// `n_1 - n_2` nonincreasing nonnegative parts.
    pub b: Vec<u32>,
    pub k: usize,
    pub i: usize,
}

impl UpliftCertificate {
    /// Number of peaks of the uplifted path.
    pub fn n1(&self) -> usize {
        peaks(&self.base).len() + self.b.len()
    }

    pub fn check(&self) -> Result<()> {
        let (k, i) = (self.k, self.i);
        if k < 2 || i < 1 || i > k {
            return Err(Error::InvalidParameters(format!("k={k}, i={i}")));
        }
        let base_start = if i == 1 { k - 2 } else { k - i };
        let base = &self.base;
        if base.start as usize != base_start
            || !base.is_well_formed()
            || base.max_height() >= k as i64 - 1
            || base.steps.contains(&Step::S)
        {
            return Err(Error::InvalidObject(format!("base path {base} is not admissible")));
        }
        let n1 = self.n1() as u32;
        if self.lambda.windows(2).any(|w| w[0] <= w[1]) || self.lambda.iter().any(|&l| l >= n1) {
            return Err(Error::InvalidObject("lambda must have distinct decreasing parts below n_1".into()));
        }
        if self.b.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidObject("b must be nonincreasing".into()));
        }
        Ok(())
    }

    /// Major index gained over the base path.
    pub fn weight_gain(&self) -> u64 {
        let n1 = self.n1() as u64;
        n1 * (n1 + 1) / 2
            + if self.i == 1 { n1 } else { 0 }
            + self.lambda.iter().map(|&l| l as u64).sum::<u64>()
            + self.b.iter().map(|&v| v as u64).sum::<u64>()
    }
}

fn is_peak_at(steps: &[Step], s: usize) -> bool {
    steps.get(s) == Some(&Step::NE) && steps.get(s + 1).is_some_and(|d| d.is_down())
}

/// Moves the peak whose north-east step is at `s` one unit to the right.
/// If it meets the next peak, the rightmost peak of the run of adjacent peaks
/// is moved instead. Returns the new position of the moved peak.
pub fn move_peak_right(steps: &mut Vec<Step>, mut s: usize) -> usize {
    debug_assert!(is_peak_at(steps, s));
    while steps.get(s + 2) == Some(&Step::NE) && is_peak_at(steps, s + 2) {
        s += 2;
    }
    let next = if s + 2 < steps.len() { steps.remove(s + 2) } else { Step::E };
    steps.insert(s, next);
    s + 1
}

/// Mirror of [`move_peak_right`]: if the peak at `s` touches a peak on its
/// left, the leftmost peak of that run is moved instead. Returns the new
/// position of the moved peak.
pub fn move_peak_left(steps: &mut Vec<Step>, mut s: usize) -> usize {
    debug_assert!(is_peak_at(steps, s));
    while s >= 2 && is_peak_at(steps, s - 2) {
        s -= 2;
    }
    let prev = steps.remove(s - 1);
    steps.insert(s + 1, prev);
    if prev == Step::E && s + 2 == steps.len() {
        steps.pop();
    }
    s - 1
}

fn nth_peak_from_right(steps: &[Step], start: u32, pred: impl Fn(usize) -> bool, j: usize) -> usize {
    let p = LatticePath::new(start, steps.to_vec());
    let pk = peaks(&p);
    let rh = relative_heights(&p);
    pk.iter()
        .zip(&rh)
        .rev()
        .filter(|(_, &h)| pred(h))
        .nth(j - 1)
        .map(|(q, _)| q.ne_index)
        .expect("certificate supplies enough peaks")
}

/// Builds a `(k,i)`-path from a certificate: raise every peak by inserting a
/// NES peak on it, prepend `n_1-n_2` NES peaks (and an `SE` when `i = 1`),
/// turn the `j`-th peak from the right into a NESE peak for each part `j-1`
/// of `lambda`, then move the `j`-th peak of relative height one from the
/// right `b_j` times.
pub fn uplift(c: &UpliftCertificate) -> Result<LatticePath> {
    uplift_observed(c, |_| {})
}

/// [`uplift`] that calls `observe` on the path after each single move.
pub fn uplift_observed<F: FnMut(&LatticePath)>(c: &UpliftCertificate, mut observe: F) -> Result<LatticePath> {
    c.check()?;
    let mut steps = Vec::new();
    if c.i == 1 {
        steps.push(Step::SE);
    }
    for _ in 0..c.b.len() {
        steps.extend([Step::NE, Step::S]);
    }
    for (idx, &s) in c.base.steps.iter().enumerate() {
        steps.push(s);
        if is_peak_at(&c.base.steps, idx) {
            steps.extend([Step::NE, Step::S]);
        }
    }
    let start = (c.k - c.i) as u32;
    let all = peaks(&LatticePath::new(start, steps.clone()));
    for &part in &c.lambda {
        let pk = &all[all.len() - 1 - part as usize];
        steps[pk.ne_index + 1] = Step::SE;
    }
    for (j, &moves) in c.b.iter().enumerate() {
        if moves == 0 {
            continue;
        }
        let mut s = nth_peak_from_right(&steps, start, |h| h == 1, j + 1);
        for _ in 0..moves {
            s = move_peak_right(&mut steps, s);
            observe(&LatticePath::new(start, steps.clone()));
        }
    }
    let path = LatticePath::new(start, steps);
    if !validate(&path, c.k, c.i) {
        return Err(Error::InvalidObject(format!("uplift produced an invalid path {path}")));
    }
    Ok(path)
}

/// Recovers the certificate of a `(k,i)`-path.
pub fn uplift_inverse(p: &LatticePath, k: usize, i: usize) -> Result<UpliftCertificate> {
    if !validate(p, k, i) {
        return Err(Error::InvalidObject(format!("path {p} violates the ({k},{i}) conditions")));
    }
    let start = p.start;
    let mut steps = p.steps.clone();
    let rh = relative_heights(p);
    let m = rh.iter().filter(|&&h| h == 1).count();
    let begin = usize::from(i == 1);
    let mut b = vec![0u32; m];
    for t in 0..m {
        let target = begin + 2 * t;
        let path = LatticePath::new(start, steps.clone());
        let pk = peaks(&path);
        let rh = relative_heights(&path);
        let mut s = pk
            .iter()
            .zip(&rh)
            .skip(t)
            .find(|(_, &h)| h == 1)
            .map(|(q, _)| q.ne_index)
            .ok_or_else(|| Error::InvalidObject("missing peak of relative height one".into()))?;
        let mut count = 0u32;
        loop {
            let mut probe = s;
            while probe >= 2 && probe > target && is_peak_at(&steps, probe - 2) {
                probe -= 2;
            }
            if probe <= target {
                break;
            }
            s = move_peak_left(&mut steps, s);
            count += 1;
        }
        b[m - 1 - t] = count;
    }

    let path = LatticePath::new(start, steps.clone());
    let pk = peaks(&path);
    let mut lambda = Vec::new();
    for (j, q) in pk.iter().rev().enumerate() {
        if q.kind == PeakKind::NESE {
            lambda.push(j as u32);
            steps[q.ne_index + 1] = Step::S;
        }
    }
    lambda.reverse();

    let bad = || Error::InvalidObject(format!("path {p} has no uplift certificate"));
    if i == 1 {
        if steps.first() != Some(&Step::SE) {
            return Err(bad());
        }
        steps.remove(0);
    }
    for _ in 0..m {
        if steps.len() < 2 || steps[0] != Step::NE || steps[1] != Step::S {
            return Err(bad());
        }
        steps.drain(0..2);
    }
    let mut base = Vec::with_capacity(steps.len());
    let mut idx = 0;
    while idx < steps.len() {
        if idx >= 1 && steps[idx] == Step::NE && steps.get(idx + 1) == Some(&Step::S) {
            if steps[idx - 1] != Step::NE {
                return Err(bad());
            }
            idx += 2;
        } else {
            base.push(steps[idx]);
            idx += 1;
        }
    }
    let cert = UpliftCertificate {
        base: LatticePath::new(if i == 1 { (k - 2) as u32 } else { start }, base),
        lambda,
        b,
        k,
        i,
    };
    cert.check()?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_table_example() {
        let f =
            FrobeniusSymbol::from_rows(&[7, 5, 4, 2, 0], &[(6, false), (4, true), (4, false), (3, false), (1, true)])
                .unwrap();
        let op = frobenius_to_overpartition(&f);
        assert_eq!(op.to_string(), "(8\u{305},7,5,5,5\u{305},4,3,3\u{305},1)");
        assert_eq!(overpartition_to_frobenius(&op), f);
    }

    #[test]
    fn burge_single_multuple() {
        let ms = MultiplicitySequence::from_pairs(&[(0, false), (1, false), (1, true), (3, true)]).unwrap();
        let out = burge_f(&ms);
        assert_eq!(out.to_string(), "(0,2\u{305},1,2\u{305})");
        assert_eq!(out.weight(), 10);
    }

    #[test]
    fn empty_objects() {
        assert!(frobenius_to_overpartition(&FrobeniusSymbol::empty()).is_empty());
        assert_eq!(overpartition_to_frobenius(&Overpartition::empty()), FrobeniusSymbol::empty());
        let e = LatticePath::new(0, vec![]);
        assert_eq!(path_to_frobenius(&e, 3, 3).unwrap(), FrobeniusSymbol::empty());
        assert_eq!(frobenius_to_path(&FrobeniusSymbol::empty(), 3, 3).unwrap(), e);
    }
}
