//! Domain objects and the statistics computed directly on them.
//!
//! - [`Overpartition`] and [`Superpartition`], stored in canonical order
//!   (among equal values the overlined copy comes last).
//! - [`FrobeniusSymbol`], whose bottom row stores the overlined copy first.
//! - [`MultiplicitySequence`] and its division into [`Multuple`]s.
//! - [`TwoModularDiagram`], a Ferrers diagram filled with twos and corner ones.
//! - [`DurfeeProfile`], the block sizes of a successive Durfee dissection.
//!
//! Enumeration order for overpartitions: value sequences in decreasing
//! lexicographic order, then overline flags compared starting from the
//! smallest distinct value (unflagged before flagged). For `n = 3` this gives
//! `3, 3̄, 21, 2̄1, 21̄, 2̄1̄, 111, 111̄`.

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// One part of an overpartition or one bottom entry of a Frobenius symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Part {
    pub v: u32,
    pub o: bool,
}

impl Part {
    pub const fn plain(v: u32) -> Self {
        Part { v, o: false }
    }

    pub const fn over(v: u32) -> Self {
        Part { v, o: true }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.o {
            write!(f, "{}\u{0305}", self.v)
        } else {
            write!(f, "{}", self.v)
        }
    }
}

fn fmt_seq<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (idx, item) in items.iter().enumerate() {
        if idx > 0 {
            write!(f, ",")?;
        }
        write!(f, "{item}")?;
    }
    write!(f, ")")
}

fn canonical_key(p: &Part) -> (Reverse<u32>, bool) {
    (Reverse(p.v), p.o)
}

fn check_overpartition_parts(parts: &[Part], allow_zero_bar: bool) -> Result<()> {
    for (idx, p) in parts.iter().enumerate() {
        if p.v == 0 && !(allow_zero_bar && p.o) {
            return Err(Error::InvalidObject(format!("part {idx} is zero")));
        }
    }
    for w in parts.windows(2) {
        if canonical_key(&w[0]) >= canonical_key(&w[1]) && !(w[0].v > w[1].v) {
            if w[0] == w[1] && !w[0].o {
                continue;
            }
            return Err(Error::InvalidObject(format!(
                "parts {} and {} are out of canonical order or repeat an overline",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// Overpartition: nonincreasing positive parts where the final occurrence of
/// each value may be overlined.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartsRepr")]
pub struct Overpartition {
    parts: Vec<Part>,
}

#[derive(Deserialize)]
struct PartsRepr {
    parts: Vec<Part>,
}

impl TryFrom<PartsRepr> for Overpartition {
    type Error = Error;
    fn try_from(r: PartsRepr) -> Result<Self> {
        Overpartition::new(r.parts)
    }
}

impl Overpartition {
    /// Builds an overpartition from parts already in canonical order.
    pub fn new(parts: Vec<Part>) -> Result<Self> {
        check_overpartition_parts(&parts, false)?;
        Ok(Overpartition { parts })
    }

    /// Sorts the parts into canonical order before validating.
    pub fn from_unsorted(mut parts: Vec<Part>) -> Result<Self> {
        parts.sort_by_key(canonical_key);
        Self::new(parts)
    }

    /// Convenience constructor from `(value, overlined)` pairs in any order.
    pub fn from_pairs(pairs: &[(u32, bool)]) -> Result<Self> {
        Self::from_unsorted(pairs.iter().map(|&(v, o)| Part { v, o }).collect())
    }

    pub fn empty() -> Self {
        Overpartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.v as u64).sum()
    }

    pub fn overlined_count(&self) -> usize {
        self.parts.iter().filter(|p| p.o).count()
    }

    /// Overlined values in decreasing order.
    pub fn overlined_values(&self) -> Vec<u32> {
        self.parts.iter().filter(|p| p.o).map(|p| p.v).collect()
    }

    /// Non-overlined values in nonincreasing order.
    pub fn plain_values(&self) -> Vec<u32> {
        self.parts.iter().filter(|p| !p.o).map(|p| p.v).collect()
    }

    pub fn multiplicity_sequence(&self) -> MultiplicitySequence {
        multiplicity_sequence(self)
    }

    pub fn to_canonical_json(&self) -> String {
        canonical_json(self)
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_seq(f, &self.parts)
    }
}

/// Serializes any value with sorted object keys and no insignificant whitespace.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("domain objects always serialize");
    serde_json::to_string(&v).expect("json values always serialize")
}

/// Sum of the part values.
pub fn weight(op: &Overpartition) -> u64 {
    op.weight()
}

/// Calls `f` on every overpartition of `n`, in the documented canonical order.
pub fn for_each_overpartition<F: FnMut(&Overpartition)>(n: u32, mut f: F) {
    let mut values = Vec::new();
    value_partitions(n, n, &mut values, &mut |vals: &[u32]| {
        let mut distinct: Vec<u32> = vals.to_vec();
        distinct.dedup();
        let r = distinct.len();
        let mut op = Overpartition { parts: vals.iter().map(|&v| Part::plain(v)).collect() };
        // Index of the final occurrence of each distinct value.
        let mut last = Vec::with_capacity(r);
        for (idx, &v) in vals.iter().enumerate() {
            if idx + 1 == vals.len() || vals[idx + 1] != v {
                last.push(idx);
            }
        }
        for mask in 0u64..(1u64 << r) {
            for (t, &idx) in last.iter().enumerate() {
                op.parts[idx].o = (mask >> t) & 1 == 1;
            }
            f(&op);
        }
    });
}

fn value_partitions<F: FnMut(&[u32])>(n: u32, max: u32, cur: &mut Vec<u32>, f: &mut F) {
    if n == 0 {
        f(cur);
        return;
    }
    for v in (1..=max.min(n)).rev() {
        cur.push(v);
        value_partitions(n - v, v, cur, f);
        cur.pop();
    }
}

/// All ordinary partitions of `n` in decreasing lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    value_partitions(n, n, &mut Vec::new(), &mut |v: &[u32]| out.push(v.to_vec()));
    out
}

/// Every overpartition of `n`, each exactly once, in canonical order.
pub fn enumerate_overpartitions(n: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for_each_overpartition(n, |op| out.push(op.clone()));
    out
}

/// Overpartition that may also contain a single part `0̄`, stored last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartsRepr")]
pub struct Superpartition {
    parts: Vec<Part>,
}

impl TryFrom<PartsRepr> for Superpartition {
    type Error = Error;
    fn try_from(r: PartsRepr) -> Result<Self> {
        Superpartition::new(r.parts)
    }
}

impl Superpartition {
    pub fn new(parts: Vec<Part>) -> Result<Self> {
        check_overpartition_parts(&parts, true)?;
        Ok(Superpartition { parts })
    }

    pub fn from_overpartition(op: &Overpartition, zero_bar: bool) -> Self {
        let mut parts = op.parts.clone();
        if zero_bar {
            parts.push(Part::over(0));
        }
        Superpartition { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.v as u64).sum()
    }

    pub fn has_zero_bar(&self) -> bool {
        self.parts.last().is_some_and(|p| p.v == 0)
    }

    /// The overpartition obtained by raising every overlined part by one.
    pub fn raise_overlined(&self) -> Overpartition {
        Overpartition::from_unsorted(self.parts.iter().map(|p| if p.o { Part::over(p.v + 1) } else { *p }).collect())
            .expect("raising overlined parts keeps them distinct and positive")
    }

    /// Inverse of [`Superpartition::raise_overlined`].
    pub fn lower_overlined(op: &Overpartition) -> Self {
        let mut parts: Vec<Part> = op.parts.iter().map(|p| if p.o { Part::over(p.v - 1) } else { *p }).collect();
        parts.sort_by_key(canonical_key);
        Superpartition { parts }
    }
}

impl fmt::Display for Superpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_seq(f, &self.parts)
    }
}

/// Every superpartition of `n`: each overpartition of `n` with and without `0̄`.
pub fn enumerate_superpartitions(n: u32) -> Vec<Superpartition> {
    let mut out = Vec::new();
    for_each_overpartition(n, |op| {
        out.push(Superpartition::from_overpartition(op, false));
        out.push(Superpartition::from_overpartition(op, true));
    });
    out
}

/// Two-rowed array with a strictly decreasing top row and an
/// overpartition-style bottom row.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FrobeniusRepr")]
pub struct FrobeniusSymbol {
    top: Vec<u32>,
    bottom: Vec<Part>,
}

#[derive(Deserialize)]
struct FrobeniusRepr {
    top: Vec<u32>,
    bottom: Vec<Part>,
}

impl TryFrom<FrobeniusRepr> for FrobeniusSymbol {
    type Error = Error;
    fn try_from(r: FrobeniusRepr) -> Result<Self> {
        FrobeniusSymbol::new(r.top, r.bottom)
    }
}

impl FrobeniusSymbol {
    pub fn new(top: Vec<u32>, bottom: Vec<Part>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidObject(format!("rows have lengths {} and {}", top.len(), bottom.len())));
        }
        if top.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidObject("top row is not strictly decreasing".into()));
        }
        for w in bottom.windows(2) {
            if w[0].v < w[1].v {
                return Err(Error::InvalidObject("bottom row is not nonincreasing".into()));
            }
            if w[0].v == w[1].v && w[1].o {
                return Err(Error::InvalidObject(format!(
                    "overlined bottom entry {} is not the first occurrence",
                    w[1]
                )));
            }
        }
        Ok(FrobeniusSymbol { top, bottom })
    }

    /// Builds a symbol from a top row and `(value, overlined)` bottom pairs.
    pub fn from_rows(top: &[u32], bottom: &[(u32, bool)]) -> Result<Self> {
        Self::new(top.to_vec(), bottom.iter().map(|&(v, o)| Part { v, o }).collect())
    }

    pub fn empty() -> Self {
        FrobeniusSymbol::default()
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[Part] {
        &self.bottom
    }

    pub fn columns(&self) -> usize {
        self.top.len()
    }

    pub fn weight(&self) -> u64 {
        self.top.len() as u64
            + self.top.iter().map(|&a| a as u64).sum::<u64>()
            + self.bottom.iter().map(|b| b.v as u64).sum::<u64>()
    }

    pub fn plain_bottom_count(&self) -> usize {
        self.bottom.iter().filter(|b| !b.o).count()
    }

    pub fn successive_ranks(&self) -> Vec<i64> {
        successive_ranks(self)
    }

    pub fn to_canonical_json(&self) -> String {
        canonical_json(self)
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, a) in self.top.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, " / ")?;
        for (idx, b) in self.bottom.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// `r_i = a_i - b_i - #{non-overlined entries among b_{i+1}, ..., b_N}`.
pub fn successive_ranks(f: &FrobeniusSymbol) -> Vec<i64> {
    let n = f.columns();
    let mut out = vec![0i64; n];
    let mut plain_right = 0i64;
    for idx in (0..n).rev() {
        out[idx] = f.top[idx] as i64 - f.bottom[idx].v as i64 - plain_right;
        if !f.bottom[idx].o {
            plain_right += 1;
        }
    }
    out
}

/// Calls `f` on every Frobenius symbol of weight `n`.
///
/// Order: by number of columns, then by top row in decreasing lexicographic
/// order, then by bottom values likewise, then by overline flags.
pub fn for_each_frobenius<F: FnMut(&FrobeniusSymbol)>(n: u32, mut f: F) {
    for cols in 0..=n as usize {
        let rest = n as usize - cols;
        // The top row needs at least 0 + 1 + ... + (cols-1).
        let min_top = cols * cols.saturating_sub(1) / 2;
        if min_top > rest {
            break;
        }
        for top_sum in (min_top..=rest).rev() {
            let mut tops = Vec::new();
            distinct_rows(top_sum as u32, cols, u32::MAX, &mut Vec::new(), &mut tops);
            let bottom_sum = (rest - top_sum) as u32;
            let mut bottoms = Vec::new();
            nonincreasing_rows(bottom_sum, cols, bottom_sum, &mut Vec::new(), &mut bottoms);
            for top in &tops {
                for vals in &bottoms {
                    let firsts: Vec<usize> = (0..cols).filter(|&idx| idx == 0 || vals[idx - 1] != vals[idx]).collect();
                    for mask in 0u64..(1u64 << firsts.len()) {
                        let mut bottom: Vec<Part> = vals.iter().map(|&v| Part::plain(v)).collect();
                        for (t, &idx) in firsts.iter().enumerate() {
                            bottom[idx].o = (mask >> t) & 1 == 1;
                        }
                        f(&FrobeniusSymbol { top: top.clone(), bottom });
                    }
                }
            }
        }
    }
}

/// Every Frobenius symbol of weight `n`.
pub fn enumerate_frobenius(n: u32) -> Vec<FrobeniusSymbol> {
    let mut out = Vec::new();
    for_each_frobenius(n, |s| out.push(s.clone()));
    out
}

fn distinct_rows(sum: u32, len: usize, below: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if len == 0 {
        if sum == 0 {
            out.push(cur.clone());
        }
        return;
    }
    // The remaining len-1 entries need at least (len-1)(len-2)/2.
    let tail_min = ((len - 1) * len.saturating_sub(2) / 2) as u32;
    let lo = (len - 1) as u32;
    let hi = below.saturating_sub(1).min(sum.saturating_sub(tail_min));
    if below == 0 || hi < lo || sum < tail_min {
        return;
    }
    for v in (lo..=hi).rev() {
        cur.push(v);
        distinct_rows(sum - v, len - 1, v, cur, out);
        cur.pop();
    }
}

fn nonincreasing_rows(sum: u32, len: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if len == 0 {
        if sum == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let lo = sum.div_ceil(len as u32);
    for v in (lo..=max.min(sum)).rev() {
        cur.push(v);
        nonincreasing_rows(sum - v, len - 1, v, cur, out);
        cur.pop();
    }
}

/// One multiplicity `f_j`, overlined when the value `j` appears overlined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mult {
    pub count: u32,
    pub o: bool,
}

impl fmt::Display for Mult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Part { v: self.count, o: self.o }.fmt(f)
    }
}

/// `(f_0, f_1, ..., f_M)` with `f_0 = 0` always materialized and trailing
/// zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplicitySequence {
    entries: Vec<Mult>,
}

impl Default for MultiplicitySequence {
    fn default() -> Self {
        MultiplicitySequence { entries: vec![Mult::default()] }
    }
}

impl MultiplicitySequence {
    /// Builds a sequence from `(count, overlined)` pairs starting at `f_0`.
    pub fn from_pairs(pairs: &[(u32, bool)]) -> Result<Self> {
        let entries: Vec<Mult> = pairs.iter().map(|&(count, o)| Mult { count, o }).collect();
        Self::from_entries(entries)
    }

    pub fn from_entries(mut entries: Vec<Mult>) -> Result<Self> {
        if entries.is_empty() {
            entries.push(Mult::default());
        }
        if entries[0] != Mult::default() {
            return Err(Error::InvalidObject("f_0 must be 0".into()));
        }
        if let Some(m) = entries.iter().find(|m| m.o && m.count == 0) {
            return Err(Error::InvalidObject(format!("overlined zero multiplicity {m}")));
        }
        while entries.len() > 1 && entries.last() == Some(&Mult::default()) {
            entries.pop();
        }
        Ok(MultiplicitySequence { entries })
    }

    pub fn entries(&self) -> &[Mult] {
        &self.entries
    }

    pub fn get(&self, j: usize) -> Mult {
        self.entries.get(j).copied().unwrap_or_default()
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().enumerate().map(|(j, m)| j as u64 * m.count as u64).sum()
    }

    pub fn to_overpartition(&self) -> Overpartition {
        let mut parts = Vec::new();
        for (j, m) in self.entries.iter().enumerate().skip(1).rev() {
            for c in 0..m.count {
                parts.push(Part { v: j as u32, o: m.o && c + 1 == m.count });
            }
        }
        Overpartition { parts }
    }

    /// Sum of the lengths of the multuples.
    pub fn length(&self) -> usize {
        multuple_division(self).1
    }

    pub fn multuples(&self) -> Vec<Multuple> {
        multuple_division(self).0
    }
}

impl fmt::Display for MultiplicitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_seq(f, &self.entries)
    }
}

/// `f_j` = number of occurrences of `j`, overlined iff `j` occurs overlined.
pub fn multiplicity_sequence(op: &Overpartition) -> MultiplicitySequence {
    let max = op.parts.first().map_or(0, |p| p.v as usize);
    let mut entries = vec![Mult::default(); max + 1];
    for p in &op.parts {
        let m = &mut entries[p.v as usize];
        m.count += 1;
        m.o |= p.o;
    }
    MultiplicitySequence { entries }
}

/// A slice `(f_m, ..., f_{m+l})` with `f_{m+l} > 0`, `f_m` not overlined and
/// every interior entry overlined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multuple {
    pub start: usize,
    pub values: Vec<Mult>,
}

impl Multuple {
    pub fn length(&self) -> usize {
        self.values.len() - 1
    }

    pub fn weight(&self) -> u64 {
        self.values.iter().enumerate().map(|(t, m)| (self.start + t) as u64 * m.count as u64).sum()
    }
}

impl fmt::Display for Multuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_seq(f, &self.values)
    }
}

/// Splits a multiplicity sequence into multuples, scanning right to left: a
/// positive multiplicity closes a multuple, which opens at the nearest
/// non-overlined multiplicity to its left. Returns the multuples from left
/// to right together with the total length `N`.
pub fn multuple_division(ms: &MultiplicitySequence) -> (Vec<Multuple>, usize) {
    let e = &ms.entries;
    let mut out = Vec::new();
    let mut total = 0;
    let mut p = e.len();
    while p > 1 {
        p -= 1;
        if e[p].count == 0 {
            continue;
        }
        let mut m = p - 1;
        while e[m].o {
            m -= 1;
        }
        out.push(Multuple { start: m, values: e[m..=p].to_vec() });
        total += p - m;
        p = m;
    }
    out.reverse();
    (out, total)
}

/// Largest `N` with `#overlined + #{non-overlined parts >= N} >= N`.
pub fn generalized_durfee_size(op: &Overpartition) -> usize {
    n_durfee_size(op, 0)
}

/// Greatest `N` with `#{overlined parts > n} + #{non-overlined parts >= N + n} >= N - n`.
/// The result is always at least `n`.
pub fn n_durfee_size(op: &Overpartition, n: usize) -> usize {
    let over = op.parts.iter().filter(|p| p.o && p.v as usize > n).count();
    let mut big = n;
    loop {
        let next = big + 1;
        let plain = op.parts.iter().filter(|p| !p.o && p.v as usize >= next + n).count();
        if over + plain >= next - n {
            big = next;
        } else {
            return big;
        }
    }
}

/// Block sizes `n_1 >= ... >= n_{k-1}` of a successive Durfee dissection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DurfeeProfile {
    pub k: usize,
    pub sizes: Vec<usize>,
}

fn check_ki(k: usize, i: usize) -> Result<()> {
    if k < 2 || i < 1 || i > k {
        return Err(Error::InvalidParameters(format!("need k >= 2 and 1 <= i <= k, got k={k}, i={i}")));
    }
    Ok(())
}

/// Dissects an overpartition into `i-1` successive Durfee squares followed by
/// `k-i` successive Durfee rectangles, returning the block sizes when nothing
/// is left below the last block.
///
/// Overlined parts are drawn above the non-overlined ones. The first block is
/// generalized: every overlined row counts toward it. A square of side `d`
/// takes `d` rows of length at least `d`. A rectangle of side `d` takes `d+1`
/// rows of length at least `d`, and the partition to its right may have at
/// most `d` parts, so row `d+1` has length exactly `d` and is not overlined.
pub fn durfee_dissection(op: &Overpartition, k: usize, i: usize) -> Result<Option<DurfeeProfile>> {
    check_ki(k, i)?;
    let over = op.overlined_count();
    let plain: Vec<usize> = op.plain_values().into_iter().map(|v| v as usize).collect();
    let mut sizes = Vec::with_capacity(k - 1);

    let mut rest: &[usize] = if i >= 2 {
        let n1 = generalized_durfee_size(op);
        sizes.push(n1);
        &plain[n1 - over..]
    } else {
        if op.is_empty() {
            sizes.push(0);
            &plain[..]
        } else {
            let mut n1 = 0;
            while over + plain.iter().filter(|&&v| v > n1).count() >= n1 + 2 {
                n1 += 1;
            }
            if over > n1 || plain[n1 - over] != n1 {
                return Ok(None);
            }
            sizes.push(n1);
            &plain[n1 + 1 - over..]
        }
    };

    for block in 2..k {
        if block < i {
            let d = rest.iter().enumerate().take_while(|&(idx, &v)| v > idx).count();
            sizes.push(d);
            rest = &rest[d..];
        } else if rest.is_empty() {
            sizes.push(0);
        } else {
            let d = rest.iter().enumerate().take_while(|&(idx, &v)| v >= idx).count() - 1;
            if rest[d] != d {
                return Ok(None);
            }
            sizes.push(d);
            rest = &rest[d + 1..];
        }
    }
    Ok(rest.is_empty().then_some(DurfeeProfile { k, sizes }))
}

/// The multiplicity condition of family B: `f_1 < i` and, for every `l >= 0`,
/// `f_l + f_{l+1} < k + 1` when `l` occurs overlined and `< k` otherwise.
pub fn multiplicity_condition(op: &Overpartition, k: usize) -> bool {
    let ms = multiplicity_sequence(op);
    let e = ms.entries();
    (0..e.len()).all(|l| {
        let s = e[l].count as usize + ms.get(l + 1).count as usize;
        s < if e[l].o { k + 1 } else { k }
    })
}

/// The difference form: `λ_l - λ_{l+k-1} >= 1` if `λ_{l+k-1}` is overlined and
/// `>= 2` otherwise.
pub fn gap_condition(op: &Overpartition, k: usize) -> bool {
    let p = op.parts();
    if k < 2 {
        return p.is_empty();
    }
    p.windows(k).all(|w| {
        let (hi, lo) = (w[0], w[k - 1]);
        hi.v >= lo.v + if lo.o { 1 } else { 2 }
    })
}

/// Membership in family B for the pair `(k, i)`.
pub fn in_b_class(op: &Overpartition, k: usize, i: usize) -> bool {
    let ones = op.parts().iter().rev().take_while(|p| p.v == 1).count();
    ones < i && multiplicity_condition(op, k)
}

/// A 2-modular Ferrers diagram recorded by its row sums; a row ends in a one
/// exactly when its sum is odd.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoModularDiagram {
    rows: Vec<u32>,
}

impl TwoModularDiagram {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidObject("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1] || (w[0] == w[1] && w[0] % 2 == 1)) {
            return Err(Error::InvalidObject("rows must be nonincreasing with distinct odd sums".into()));
        }
        Ok(TwoModularDiagram { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn weight(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().filter(|&&r| r % 2 == 1).count()
    }
}

/// Erases the twos and turns each one into a marked corner.
pub fn phi_two_modular(d: &TwoModularDiagram) -> Overpartition {
    Overpartition { parts: d.rows.iter().map(|&r| Part { v: r.div_ceil(2), o: r % 2 == 1 }).collect() }
}

/// Inverse of [`phi_two_modular`].
pub fn phi_two_modular_inverse(op: &Overpartition) -> TwoModularDiagram {
    TwoModularDiagram { rows: op.parts.iter().map(|p| 2 * p.v - p.o as u32).collect() }
}

/// Every 2-modular diagram of weight `n`, i.e. every partition of `n` whose
/// odd parts are distinct.
pub fn enumerate_two_modular(n: u32) -> Vec<TwoModularDiagram> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.windows(2).all(|w| !(w[0] == w[1] && w[0] % 2 == 1)))
        .map(|rows| TwoModularDiagram { rows })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(pairs: &[(u32, bool)]) -> Overpartition {
        Overpartition::from_pairs(pairs).unwrap()
    }

    #[test]
    fn canonical_order_is_enforced() {
        assert!(Overpartition::new(vec![Part::over(3), Part::plain(3)]).is_err());
        assert!(Overpartition::new(vec![Part::plain(3), Part::over(3)]).is_ok());
        assert!(Overpartition::new(vec![Part::over(3), Part::over(3)]).is_err());
        assert!(Overpartition::new(vec![Part::plain(1), Part::plain(2)]).is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(op(&[(5, true), (4, false), (3, false), (3, true)]).weight(), 15);
        assert_eq!(Overpartition::empty().weight(), 0);
        assert_eq!(op(&[(3, false), (1, false), (1, false), (1, true)]).weight(), 6);
    }

    #[test]
    fn multiplicity_sequence_example() {
        let o = op(&[(6, false), (6, false), (5, false), (4, false), (4, false), (4, true), (3, false), (1, true)]);
        assert_eq!(o.multiplicity_sequence().to_string(), "(0,1\u{305},0,1,3\u{305},1,2)");
        assert_eq!(Overpartition::empty().multiplicity_sequence().to_string(), "(0)");
        assert_eq!(o.multiplicity_sequence().to_overpartition(), o);
    }

    #[test]
    fn rank_and_durfee_examples() {
        let f = FrobeniusSymbol::from_rows(&[7, 4, 2, 0], &[(3, true), (3, false), (1, false), (0, true)]).unwrap();
        assert_eq!(f.successive_ranks(), vec![2, 0, 1, 0]);
        let g = op(&[(7, true), (4, false), (3, false), (3, true), (2, false), (1, true)]);
        assert_eq!(generalized_durfee_size(&g), 4);
    }

    #[test]
    fn frobenius_enumeration_has_valid_distinct_symbols() {
        for n in 0..10 {
            let all = enumerate_frobenius(n);
            let set: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            for s in &all {
                assert_eq!(s.weight(), n as u64);
                assert!(FrobeniusSymbol::new(s.top.clone(), s.bottom.clone()).is_ok());
            }
            assert_eq!(all.len(), enumerate_overpartitions(n).len());
        }
    }

    #[test]
    fn dissection_with_a_rectangle() {
        let o = op(&[
            (6, false),
            (5, false),
            (5, true),
            (4, false),
            (4, false),
            (3, false),
            (2, false),
            (2, false),
            (2, true),
            (1, false),
        ]);
        let p = durfee_dissection(&o, 4, 1).unwrap().unwrap();
        assert_eq!(p.sizes, vec![4, 2, 1]);
        let squares = durfee_dissection(&o, 5, 5).unwrap().unwrap();
        assert_eq!(squares.sizes, vec![4, 3, 2, 1]);
        assert_eq!(durfee_dissection(&o, 4, 4).unwrap(), None);
    }
}
