//! Identity checks that count each family independently and compare the
//! tallies with each other and with series coefficients.
//!
//! Every check returns a [`Report`]. Enumeration sizes are capped by
//! [`Limits`], which can be raised through the `GORDON_LIMITS` environment
//! variable (for example `GORDON_LIMITS=weight=26,k=6,q=90`).

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::json;

use crate::bijections::{
    durfee_frobenius, durfee_frobenius_inverse, frobenius_to_overpartition, frobenius_to_path,
    overpartition_to_frobenius, path_to_frobenius, uplift, uplift_inverse, uplift_observed, UpliftCertificate,
};
use crate::objects::{
    durfee_dissection, enumerate_superpartitions, enumerate_two_modular, for_each_frobenius, for_each_overpartition,
    generalized_durfee_size, in_b_class, multuple_division, n_durfee_size, phi_two_modular, successive_ranks,
    Overpartition,
};
use crate::paths::{for_each_path_upto, major_index, peaks, relative_height_profile, LatticePath, Step};
use crate::qseries::{
    d_series, e_n_series, e_series, gamma_n_series, j_series, n_durfee_identity_check, n_durfee_term, product_side,
    recurrence_tables, required_input_qmax, ProductSide, Series,
};
use crate::{Error, Result};

/// Resource ceilings for exhaustive checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_weight: u32,
    pub max_k: usize,
    pub max_qmax: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_weight: 24, max_k: 6, max_qmax: 90 }
    }
}

impl Limits {
    /// Defaults overridden by `GORDON_LIMITS` (`weight=..,k=..,q=..`).
    pub fn from_env() -> Result<Self> {
        match std::env::var("GORDON_LIMITS") {
            Ok(spec) => Self::parse(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let mut out = Self::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) =
                item.split_once('=').ok_or_else(|| Error::InvalidParameters(format!("bad limit {item:?}")))?;
            let value: usize =
                value.parse().map_err(|_| Error::InvalidParameters(format!("bad limit value {item:?}")))?;
            match key {
                "weight" => out.max_weight = value as u32,
                "k" => out.max_k = value,
                "q" => out.max_qmax = value,
                _ => return Err(Error::InvalidParameters(format!("unknown limit {key:?}"))),
            }
        }
        Ok(out)
    }

    pub fn check_weight(&self, n: u32) -> Result<()> {
        if n > self.max_weight {
            return Err(Error::ResourceLimit(format!("weight {n} exceeds the limit {}", self.max_weight)));
        }
        Ok(())
    }

    pub fn check_k(&self, k: usize) -> Result<()> {
        if k > self.max_k {
            return Err(Error::ResourceLimit(format!("k={k} exceeds the limit {}", self.max_k)));
        }
        Ok(())
    }

    pub fn check_qmax(&self, q: usize) -> Result<()> {
        if q > self.max_qmax {
            return Err(Error::ResourceLimit(format!("q-degree {q} exceeds the limit {}", self.max_qmax)));
        }
        Ok(())
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub identity: String,
    pub params: serde_json::Value,
    pub pass: bool,
    pub checked: u64,
    pub first_discrepancy: Option<serde_json::Value>,
    pub elapsed_ms: u128,
}

struct ReportBuilder {
    report: Report,
    start: Instant,
}

impl ReportBuilder {
    fn start(identity: &str, params: serde_json::Value) -> Self {
        ReportBuilder {
            report: Report {
                identity: identity.to_string(),
                params,
                pass: true,
                checked: 0,
                first_discrepancy: None,
                elapsed_ms: 0,
            },
            start: Instant::now(),
        }
    }

    fn tick(&mut self) {
        self.report.checked += 1;
    }

    fn fail(&mut self, detail: serde_json::Value) {
        if self.report.pass {
            self.report.pass = false;
            self.report.first_discrepancy = Some(detail);
        }
    }

    fn failed(&self) -> bool {
        !self.report.pass
    }

    fn finish(mut self) -> Report {
        self.report.elapsed_ms = self.start.elapsed().as_millis();
        self.report
    }
}

/// The four families of the main identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    B,
    C,
    D,
    E,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::B, Family::C, Family::D, Family::E];

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            _ => Err(Error::InvalidParameters(format!("unknown family {s:?}"))),
        }
    }
}

/// Cell `(n, j, N)` to count.
pub type Cell = (u32, u32, u32);

/// Tally of one family by weight `n`, marker `j` and refinement `N`.
///
/// - B: overpartitions under the multiplicity condition; `j` overlined parts,
///   `N` the length of the multiplicity sequence.
/// - C: Frobenius symbols with ranks in the window; `j` plain bottom
///   entries, `N` columns.
/// - D: overpartitions with the prescribed Durfee dissection; `j` overlined
///   parts, `N` the generalized Durfee size.
/// - E: paths; `j` south steps, `N` peaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub family: Family,
    pub k: usize,
    pub i: usize,
    pub nmax: u32,
    pub cells: BTreeMap<Cell, u64>,
}

impl CountTable {
    pub fn total(&self, n: u32) -> u64 {
        self.cells.iter().filter(|(c, _)| c.0 == n).map(|(_, v)| v).sum()
    }

    /// Counts by `(n, j)`, summing over the refinement.
    pub fn by_weight_and_marker(&self) -> BTreeMap<(u32, u32), u64> {
        let mut out = BTreeMap::new();
        for (&(n, j, _), &v) in &self.cells {
            *out.entry((n, j)).or_insert(0) += v;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<_> =
            self.cells.iter().map(|(&(n, j, big), &count)| json!({"n": n, "j": j, "N": big, "count": count})).collect();
        json!({"family": self.family, "k": self.k, "i": self.i, "nmax": self.nmax, "cells": cells})
    }
}

fn check_ki(k: usize, i: usize) -> Result<()> {
    if k < 2 || i < 1 || i > k {
        return Err(Error::InvalidParameters(format!("need k >= 2 and 1 <= i <= k, got k={k}, i={i}")));
    }
    Ok(())
}

/// Counts one family exhaustively; no family reuses another's code path.
pub fn count_family(family: Family, k: usize, i: usize, nmax: u32) -> Result<CountTable> {
    let window = (2 - i as i64, 2 * k as i64 - i as i64 - 1);
    count_family_with_window(family, k, i, nmax, window)
}

/// Like [`count_family`] but family C uses the given rank window.
pub fn count_family_with_window(
    family: Family,
    k: usize,
    i: usize,
    nmax: u32,
    window: (i64, i64),
) -> Result<CountTable> {
    check_ki(k, i)?;
    let limits = Limits::from_env()?;
    limits.check_weight(nmax)?;
    limits.check_k(k)?;
    let mut cells = BTreeMap::new();
    let mut bump = |c: Cell| *cells.entry(c).or_insert(0u64) += 1;
    match family {
        Family::B => {
            for n in 0..=nmax {
                for_each_overpartition(n, |op| {
                    if in_b_class(op, k, i) {
                        let (_, len) = multuple_division(&op.multiplicity_sequence());
                        bump((n, op.overlined_count() as u32, len as u32));
                    }
                });
            }
        }
        Family::C => {
            for n in 0..=nmax {
                for_each_frobenius(n, |f| {
                    if successive_ranks(f).iter().all(|&r| window.0 <= r && r <= window.1) {
                        bump((n, f.plain_bottom_count() as u32, f.columns() as u32));
                    }
                });
            }
        }
        Family::D => {
            for n in 0..=nmax {
                for_each_overpartition(n, |op| {
                    if let Ok(Some(p)) = durfee_dissection(op, k, i) {
                        bump((n, op.overlined_count() as u32, p.sizes[0] as u32));
                    }
                });
            }
        }
        Family::E => {
            for_each_path_upto(k, i, nmax as u64, |p, m| {
                bump((m as u32, p.south_steps() as u32, peaks(p).len() as u32));
            });
        }
    }
    Ok(CountTable { family, k, i, nmax, cells })
}

fn compare_tables(b: &mut ReportBuilder, left: &CountTable, right: &CountTable) {
    let keys: std::collections::BTreeSet<_> = left.cells.keys().chain(right.cells.keys()).collect();
    for key in keys {
        b.tick();
        let l = left.cells.get(key).copied().unwrap_or(0);
        let r = right.cells.get(key).copied().unwrap_or(0);
        if l != r {
            b.fail(json!({
                "n": key.0, "j": key.1, "N": key.2,
                "left": {"family": left.family, "count": l},
                "right": {"family": right.family, "count": r},
            }));
            return;
        }
    }
}

/// Compares the four `(n, j, N)` tables cell by cell.
pub fn verify_main(k: usize, i: usize, nmax: u32) -> Result<Report> {
    let window = (2 - i as i64, 2 * k as i64 - i as i64 - 1);
    verify_main_with_window(k, i, nmax, window)
}

/// [`verify_main`] with a custom rank window for family C.
pub fn verify_main_with_window(k: usize, i: usize, nmax: u32, window: (i64, i64)) -> Result<Report> {
    let mut b = ReportBuilder::start("main", json!({"k": k, "i": i, "nmax": nmax, "window": [window.0, window.1]}));
    let tables =
        Family::ALL.iter().map(|&f| count_family_with_window(f, k, i, nmax, window)).collect::<Result<Vec<_>>>()?;
    for t in &tables[1..] {
        compare_tables(&mut b, &tables[0], t);
    }
    Ok(b.finish())
}

fn compare_series_with_tally(
    b: &mut ReportBuilder,
    s: &Series,
    tally: &BTreeMap<(usize, usize, i32), u64>,
    qmax: usize,
    xmax: usize,
) {
    for x in 0..=xmax {
        for q in 0..=qmax {
            let poly = s.apoly(q, x);
            let mut seen: std::collections::BTreeSet<i32> = poly.keys().copied().collect();
            seen.extend(tally.keys().filter(|t| t.0 == q && t.1 == x).map(|t| t.2));
            for a in seen {
                b.tick();
                let want = BigInt::from(tally.get(&(q, x, a)).copied().unwrap_or(0));
                let got = s.coeff_x(a, q, x);
                if want != got {
                    b.fail(json!({"q": q, "x": x, "a": a, "series": got.to_string(), "count": want.to_string()}));
                    return;
                }
            }
        }
    }
}

/// Bivariate coefficients of the bilateral series against path tallies.
pub fn check_e_series(k: usize, i: usize, nmax: u32) -> Result<Report> {
    let mut b = ReportBuilder::start("path-series", json!({"k": k, "i": i, "nmax": nmax}));
    let table = count_family(Family::E, k, i, nmax)?;
    let mut tally = BTreeMap::new();
    for ((n, j), v) in table.by_weight_and_marker() {
        tally.insert((n as usize, 0, j as i32), v);
    }
    let s = e_series(k, i, nmax as usize)?;
    compare_series_with_tally(&mut b, &s, &tally, nmax as usize, 0);
    Ok(b.finish())
}

/// Closed forms for the peak-refined series against the recurrence evaluator,
/// and their sum over `N` against the bilateral series.
pub fn check_closed_forms(k: usize, nmax_peaks: usize, qmax: usize) -> Result<Report> {
    let mut b = ReportBuilder::start("closed-forms", json!({"k": k, "N": nmax_peaks, "qmax": qmax}));
    Limits::from_env()?.check_qmax(qmax)?;
    let (e, g) = recurrence_tables(k, nmax_peaks, qmax)?;
    for (n, (e_row, g_row)) in e.iter().zip(&g).enumerate() {
        for (i, want) in e_row.iter().enumerate().skip(1) {
            b.tick();
            if e_n_series(k, i, n, qmax)? != *want {
                b.fail(json!({"series": "E", "i": i, "N": n}));
            }
        }
        for (i, want) in g_row.iter().enumerate() {
            b.tick();
            if gamma_n_series(k, i, n, qmax)? != *want {
                b.fail(json!({"series": "Gamma", "i": i, "N": n}));
            }
        }
    }
    for i in 1..=k {
        let mut total = Series::zero(qmax);
        let mut n = 0;
        while n * (n + 1) / 2 <= qmax {
            total = total.add(&e_n_series(k, i, n, qmax)?);
            n += 1;
        }
        b.tick();
        if total != e_series(k, i, qmax)? {
            b.fail(json!({"series": "sum over N", "i": i}));
        }
    }
    Ok(b.finish())
}

/// Durfee multi-sum against the bilateral series, and against Durfee tallies.
pub fn check_durfee_series(k: usize, i: usize, qmax: usize, nmax: u32) -> Result<Report> {
    let mut b = ReportBuilder::start("durfee-series", json!({"k": k, "i": i, "qmax": qmax, "nmax": nmax}));
    Limits::from_env()?.check_qmax(qmax)?;
    let d = d_series(k, i, qmax)?;
    b.tick();
    if d != e_series(k, i, qmax)? {
        b.fail(json!({"reason": "multi-sum differs from the bilateral series"}));
    }
    let table = count_family(Family::D, k, i, nmax)?;
    let mut tally = BTreeMap::new();
    for ((n, j), v) in table.by_weight_and_marker() {
        tally.insert((n as usize, 0, j as i32), v);
    }
    compare_series_with_tally(&mut b, &d.truncate(nmax as usize, 0), &tally, nmax as usize, 0);
    Ok(b.finish())
}

/// Specialization of the bilateral series against its infinite product.
pub fn check_product(which: ProductSide, k: usize, i: usize, qmax: usize) -> Result<Report> {
    let mut b = ReportBuilder::start("products", json!({"product": which.name(), "k": k, "i": i, "qmax": qmax}));
    let (coef, e, m) = which.substitution();
    let input = required_input_qmax(e, m, qmax);
    Limits::from_env()?.check_qmax(input.max(qmax))?;
    let spec = e_series(k, i, input)?.specialize(coef, e, m, qmax)?;
    let prod = product_side(which, k, i, qmax)?;
    for q in 0..=qmax {
        b.tick();
        if spec.coeff(0, q) != prod.coeff(0, q) {
            b.fail(json!({"q": q, "series": spec.coeff(0, q).to_string(), "product": prod.coeff(0, q).to_string()}));
            break;
        }
    }
    Ok(b.finish())
}

/// The `n`-Durfee identity as series, and stratum by stratum against
/// overpartitions tallied by their `n`-Durfee size.
pub fn check_n_durfee(n: i64, qmax: usize, wmax: u32) -> Result<Report> {
    let mut b = ReportBuilder::start("n-durfee", json!({"n": n, "qmax": qmax, "wmax": wmax}));
    b.tick();
    if !n_durfee_identity_check(n, qmax) {
        b.fail(json!({"reason": "strata do not sum to the overpartition series"}));
    }
    if n >= 0 {
        let mut strata: BTreeMap<usize, BTreeMap<(usize, usize, i32), u64>> = BTreeMap::new();
        for w in 0..=wmax {
            for_each_overpartition(w, |op| {
                let big = n_durfee_size(op, n as usize);
                *strata.entry(big).or_default().entry((w as usize, 0, op.overlined_count() as i32)).or_insert(0) += 1;
            });
        }
        let top = strata.keys().copied().max().unwrap_or(0) + 1;
        for big in n as usize..=top {
            let empty = BTreeMap::new();
            let tally = strata.get(&big).unwrap_or(&empty);
            let term = n_durfee_term(n, big, wmax as usize);
            compare_series_with_tally(&mut b, &term, tally, wmax as usize, 0);
            if b.failed() {
                b.report.first_discrepancy.as_mut().unwrap()["N"] = json!(big);
                break;
            }
        }
    }
    Ok(b.finish())
}

/// `J_{k,i}(-a,x,q)` against B tallies refined by the number of parts.
pub fn check_j_series(k: usize, i: usize, nmax: u32) -> Result<Report> {
    let mut b = ReportBuilder::start("part-series", json!({"k": k, "i": i, "nmax": nmax}));
    Limits::from_env()?.check_weight(nmax)?;
    let qmax = nmax as usize;
    let j = j_series(k, i, qmax, qmax)?.negate_a();
    let mut tally = BTreeMap::new();
    for n in 0..=nmax {
        for_each_overpartition(n, |op| {
            if in_b_class(op, k, i) {
                *tally.entry((n as usize, op.len(), op.overlined_count() as i32)).or_insert(0) += 1;
            }
        });
    }
    compare_series_with_tally(&mut b, &j, &tally, qmax, qmax);
    Ok(b.finish())
}

/// Round trips of the hook and Durfee maps on every overpartition and every
/// symbol of weight at most `wmax`.
pub fn check_frobenius_roundtrips(wmax: u32) -> Result<Report> {
    let mut b = ReportBuilder::start("roundtrip-frobenius", json!({"wmax": wmax}));
    Limits::from_env()?.check_weight(wmax)?;
    for n in 0..=wmax {
        let mut images = std::collections::HashSet::new();
        let mut images_d = std::collections::HashSet::new();
        for_each_frobenius(n, |f| {
            b.tick();
            let op = frobenius_to_overpartition(f);
            if op.weight() != n as u64 || overpartition_to_frobenius(&op) != *f || !images.insert(op) {
                b.fail(json!({"map": "hook", "symbol": f.to_string()}));
            }
            let d = durfee_frobenius(f);
            let stats_ok = generalized_durfee_size(&d) == f.columns() && d.overlined_count() == f.plain_bottom_count();
            if d.weight() != n as u64 || durfee_frobenius_inverse(&d) != *f || !stats_ok || !images_d.insert(d) {
                b.fail(json!({"map": "durfee", "symbol": f.to_string()}));
            }
        });
        for_each_overpartition(n, |op| {
            b.tick();
            if frobenius_to_overpartition(&overpartition_to_frobenius(op)) != *op {
                b.fail(json!({"map": "hook inverse", "overpartition": op.to_string()}));
            }
            if durfee_frobenius(&durfee_frobenius_inverse(op)) != *op {
                b.fail(json!({"map": "durfee inverse", "overpartition": op.to_string()}));
            }
        });
    }
    Ok(b.finish())
}

/// Path and rank correspondence on every `(k,i)`-path of major index at most `nmax`.
pub fn check_rank_roundtrips(k: usize, i: usize, nmax: u32) -> Result<Report> {
    let mut b = ReportBuilder::start("roundtrip-ranks", json!({"k": k, "i": i, "nmax": nmax}));
    check_ki(k, i)?;
    Limits::from_env()?.check_weight(nmax)?;
    let (lo, hi) = (2 - i as i64, 2 * k as i64 - i as i64 - 1);
    for_each_path_upto(k, i, nmax as u64, |p, m| {
        b.tick();
        let ok = match path_to_frobenius(p, k, i) {
            Ok(f) => {
                f.weight() == m
                    && f.plain_bottom_count() == p.south_steps()
                    && f.columns() == peaks(p).len()
                    && f.successive_ranks().iter().all(|&r| lo <= r && r <= hi)
                    && frobenius_to_path(&f, k, i).as_ref() == Ok(p)
            }
            Err(_) => false,
        };
        if !ok {
            b.fail(json!({"path": p.to_string()}));
        }
    });
    Ok(b.finish())
}

/// Uplift round trip on every `(k,i)`-path of major index at most `nmax`.
pub fn check_uplift_roundtrips(k: usize, i: usize, nmax: u32) -> Result<Report> {
    let mut b = ReportBuilder::start("roundtrip-uplift", json!({"k": k, "i": i, "nmax": nmax}));
    check_ki(k, i)?;
    Limits::from_env()?.check_weight(nmax)?;
    for_each_path_upto(k, i, nmax as u64, |p, m| {
        b.tick();
        let ok = match uplift_inverse(p, k, i) {
            Ok(c) => {
                let base_profile = relative_height_profile(&c.base, k - 1);
                let mut want = vec![c.n1()];
                want.extend(base_profile.into_iter().take(k.saturating_sub(2)));
                uplift(&c).as_ref() == Ok(p)
                    && major_index(&c.base) + c.weight_gain() == m
                    && relative_height_profile(p, k) == want
            }
            Err(_) => false,
        };
        if !ok {
            b.fail(json!({"path": p.to_string()}));
        }
    });
    Ok(b.finish())
}

/// Base paths admissible for [`UpliftCertificate`]: no south steps, start
/// `k-i` (or `k-2` when `i = 1`), height below `k-1`.
pub fn base_paths(k: usize, i: usize, nmax: u32) -> Vec<LatticePath> {
    let inner = if i == 1 { 1 } else { i - 1 };
    let mut out = Vec::new();
    for_each_path_upto(k - 1, inner, nmax as u64, |p, _| {
        if !p.steps.contains(&Step::S) {
            out.push(p.clone());
        }
    });
    out
}

/// Random certificates whose moves are checked one at a time: every single
/// move must keep the relative-height profile.
pub fn check_moves(seed: u64, trials: usize) -> Result<Report> {
    let mut b = ReportBuilder::start("moves", json!({"seed": seed, "trials": trials}));
    let mut rng = StdRng::seed_from_u64(seed);
    let pools: Vec<(usize, usize, Vec<LatticePath>)> =
        (2..=4).flat_map(|k| (1..=k).map(move |i| (k, i))).map(|(k, i)| (k, i, base_paths(k, i, 8))).collect();
    let mut moves = 0usize;
    while moves < trials && !b.failed() {
        let (k, i, pool) = &pools[rng.gen_range(0..pools.len())];
        let base = pool[rng.gen_range(0..pool.len())].clone();
        let extra = rng.gen_range(1..=4usize);
        let n1 = peaks(&base).len() + extra;
        let lambda: Vec<u32> = (0..n1 as u32).rev().filter(|_| rng.gen_bool(0.4)).collect();
        let mut bs: Vec<u32> = (0..extra).map(|_| rng.gen_range(0..6)).collect();
        bs.sort_unstable_by(|x, y| y.cmp(x));
        let staged = UpliftCertificate { base: base.clone(), lambda: lambda.clone(), b: vec![0; extra], k: *k, i: *i };
        let before = relative_height_profile(&uplift(&staged)?, *k);
        let cert = UpliftCertificate { b: bs, ..staged };
        let mut bad = None;
        let out = uplift_observed(&cert, |p| {
            moves += 1;
            b.tick();
            if bad.is_none() && relative_height_profile(p, *k) != before {
                bad = Some(p.to_string());
            }
        });
        if let Some(p) = bad {
            b.fail(json!({"k": k, "i": i, "path": p, "certificate": serde_json::to_value(&cert).unwrap()}));
        }
        if out.is_err() {
            b.fail(json!({"k": k, "i": i, "certificate": serde_json::to_value(&cert).unwrap()}));
        }
    }
    Ok(b.finish())
}

/// Which partition identity [`verify_specialization`] checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// Five-way equality at `a -> 1/q, q -> q^2`.
    TwoModular,
    /// `B_{k,i} + B_{k,i+1}` against superpartitions.
    AdjacentSum,
    /// Lowered B-class against two overpartition congruence classes.
    Superpartitions,
}

impl Specialization {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "two-modular" => Ok(Specialization::TwoModular),
            "adjacent-sum" => Ok(Specialization::AdjacentSum),
            "superpartitions" => Ok(Specialization::Superpartitions),
            _ => Err(Error::InvalidParameters(format!("unknown identity {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Specialization::TwoModular => "two-modular",
            Specialization::AdjacentSum => "adjacent-sum",
            Specialization::Superpartitions => "superpartitions",
        }
    }
}

fn avoids(v: u32, modulus: u32, residues: &[i64]) -> bool {
    let r = (v % modulus) as i64;
    residues.iter().all(|&x| x.rem_euclid(modulus as i64) != r)
}

fn plain_parts_avoid(parts: &[crate::objects::Part], modulus: u32, residues: &[i64]) -> bool {
    parts.iter().filter(|p| !p.o).all(|p| avoids(p.v, modulus, residues))
}

fn b_total(k: usize, i: usize, n: u32) -> u64 {
    let mut c = 0;
    for_each_overpartition(n, |op| {
        if in_b_class(op, k, i) {
            c += 1;
        }
    });
    c
}

/// Partition identities obtained from specializations of the main theorem.
pub fn verify_specialization(which: Specialization, k: usize, i: usize, nmax: u32) -> Result<Report> {
    let mut b = ReportBuilder::start(which.name(), json!({"k": k, "i": i, "nmax": nmax}));
    let limits = Limits::from_env()?;
    limits.check_weight(nmax)?;
    limits.check_k(k)?;
    match which {
        Specialization::TwoModular => {
            check_ki(k, i)?;
            let m4k = 4 * k as u32;
            let odd_res = 2 * i as i64 - 1;
            // Overpartition weight m with j overlines has 2-modular weight 2m - j >= m.
            let mut c_side = vec![0u64; nmax as usize + 1];
            let mut d_side = vec![0u64; nmax as usize + 1];
            for n in 0..=nmax {
                for d in enumerate_two_modular(n) {
                    let op = phi_two_modular(&d);
                    let f = overpartition_to_frobenius(&op);
                    if successive_ranks(&f).iter().all(|&r| 2 - i as i64 <= r && r < 2 * k as i64 - i as i64) {
                        c_side[n as usize] += 1;
                    }
                    if matches!(durfee_dissection(&op, k, i), Ok(Some(_))) {
                        d_side[n as usize] += 1;
                    }
                }
            }
            let mut e_side = vec![0u64; nmax as usize + 1];
            for_each_path_upto(k, i, nmax as u64, |p, m| {
                let w = 2 * m as i64 - p.south_steps() as i64;
                if w <= nmax as i64 {
                    e_side[w as usize] += 1;
                }
            });
            for n in 0..=nmax {
                let products = crate::objects::enumerate_partitions(n)
                    .into_iter()
                    .filter(|p| p.iter().all(|&v| v % 4 != 2 && avoids(v, m4k, &[0, odd_res, -odd_res])))
                    .count() as u64;
                let gaps = crate::objects::enumerate_partitions(n)
                    .into_iter()
                    .filter(|p| two_modular_gap_condition(p, k, i))
                    .count() as u64;
                let row = [products, gaps, c_side[n as usize], d_side[n as usize], e_side[n as usize]];
                b.tick();
                if row.iter().any(|&v| v != row[0]) {
                    b.fail(json!({"n": n, "counts": row}));
                }
            }
        }
        Specialization::AdjacentSum => {
            if k < 2 || i < 1 || i >= k {
                return Err(Error::InvalidParameters(format!("need 1 <= i <= k-1, got k={k}, i={i}")));
            }
            let m = 2 * k as u32;
            for n in 0..=nmax {
                let left = b_total(k, i, n) + b_total(k, i + 1, n);
                let right = enumerate_superpartitions(n)
                    .iter()
                    .filter(|s| plain_parts_avoid(s.parts(), m, &[0, i as i64, -(i as i64)]))
                    .count() as u64;
                b.tick();
                if left != right {
                    b.fail(json!({"n": n, "left": left, "right": right}));
                }
            }
        }
        Specialization::Superpartitions => {
            if k < 3 || i < 2 || i >= k {
                return Err(Error::InvalidParameters(format!("need 2 <= i <= k-1, got k={k}, i={i}")));
            }
            let m = 2 * k as u32;
            for n in 0..=nmax {
                let left =
                    enumerate_superpartitions(n).iter().filter(|s| in_b_class(&s.raise_overlined(), k, i)).count()
                        as u64;
                let mut right = 0u64;
                for_each_overpartition(n, |op| {
                    for r in [i as i64, i as i64 - 1] {
                        if plain_parts_avoid(op.parts(), m, &[0, r, -r]) {
                            right += 1;
                        }
                    }
                });
                b.tick();
                if left != right {
                    b.fail(json!({"n": n, "left": left, "right": right}));
                }
            }
        }
    }
    Ok(b.finish())
}

/// Partitions with unrepeated odd parts where `λ_l - λ_{l+k-1}` is at least 3
/// when `λ_{l+k-1}` is even and at least 2 when it is odd, and `f_1 + f_2 < i`.
pub fn two_modular_gap_condition(p: &[u32], k: usize, i: usize) -> bool {
    if p.windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1) {
        return false;
    }
    let small = p.iter().filter(|&&v| v <= 2).count();
    small < i
        && p.windows(k).all(|w| {
            let lo = w[k - 1];
            w[0] >= lo + if lo % 2 == 0 { 3 } else { 2 }
        })
}

/// An overpartition check that the tables above do not cover: the first
/// rank window and the Durfee dissection agree on the empty object.
pub fn empty_objects_agree(k: usize, i: usize) -> bool {
    let e = Overpartition::empty();
    in_b_class(&e, k, i) && matches!(durfee_dissection(&e, k, i), Ok(Some(_)))
}
