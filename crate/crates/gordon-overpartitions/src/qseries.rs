//! Exact truncated power series in `q` (and optionally `x`) whose
//! coefficients are Laurent polynomials in the marker `a` with
//! arbitrary-precision integer coefficients.
//!
//! Infinite sums are cut where the minimal `q`-degree of a term exceeds the
//! truncation degree; every term's minimal degree is quadratic in the summation
//! index, so each sum is finite.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Laurent polynomial in `a`: exponent to nonzero coefficient.
pub type APoly = BTreeMap<i32, BigInt>;

fn apoly_add_scaled(dst: &mut APoly, src: &APoly, coef: i64, shift: i32) {
    for (&e, c) in src {
        let key = e + shift;
        let entry = dst.entry(key).or_insert_with(BigInt::zero);
        *entry += c * coef;
        if entry.is_zero() {
            dst.remove(&key);
        }
    }
}

fn apoly_add_product(dst: &mut APoly, lhs: &APoly, rhs: &APoly) {
    for (&e1, c1) in lhs {
        for (&e2, c2) in rhs {
            let key = e1 + e2;
            let entry = dst.entry(key).or_insert_with(BigInt::zero);
            *entry += c1 * c2;
            if entry.is_zero() {
                dst.remove(&key);
            }
        }
    }
}

/// Signed monomial `coef * a^a * q^q * x^x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coef: i64,
    pub a: i32,
    pub q: i64,
    pub x: i64,
}

impl Monomial {
    pub const fn new(coef: i64, a: i32, q: i64) -> Self {
        Monomial { coef, a, q, x: 0 }
    }

    pub const fn q(q: i64) -> Self {
        Monomial::new(1, 0, q)
    }

    pub const fn with_x(self, x: i64) -> Self {
        Monomial { x, ..self }
    }
}

/// Truncated series: `c[x][q]` holds the `a`-polynomial of `x^x q^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    qmax: usize,
    xmax: usize,
    c: Vec<Vec<APoly>>,
}

impl Series {
    pub fn zero(qmax: usize) -> Self {
        Self::zero_x(qmax, 0)
    }

    pub fn zero_x(qmax: usize, xmax: usize) -> Self {
        Series { qmax, xmax, c: vec![vec![APoly::new(); qmax + 1]; xmax + 1] }
    }

    pub fn one(qmax: usize) -> Self {
        Self::monomial(Monomial::q(0), qmax, 0)
    }

    pub fn monomial(m: Monomial, qmax: usize, xmax: usize) -> Self {
        let mut s = Self::zero_x(qmax, xmax);
        s.add_monomial(m);
        s
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    pub fn xmax(&self) -> usize {
        self.xmax
    }

    /// Adds a monomial, silently dropping it when it lies beyond the truncation.
    pub fn add_monomial(&mut self, m: Monomial) {
        assert!(m.q >= 0 && m.x >= 0, "negative exponent in {m:?}");
        if m.coef == 0 || m.q as usize > self.qmax || m.x as usize > self.xmax {
            return;
        }
        let mut p = APoly::new();
        p.insert(m.a, BigInt::from(m.coef));
        apoly_add_scaled(&mut self.c[m.x as usize][m.q as usize], &p, 1, 0);
    }

    /// Coefficient of `a^a q^q` (at `x^0`).
    pub fn coeff(&self, a: i32, q: usize) -> BigInt {
        self.coeff_x(a, q, 0)
    }

    pub fn coeff_x(&self, a: i32, q: usize, x: usize) -> BigInt {
        self.c.get(x).and_then(|row| row.get(q)).and_then(|p| p.get(&a)).cloned().unwrap_or_default()
    }

    /// The `a`-polynomial of `x^x q^q`.
    pub fn apoly(&self, q: usize, x: usize) -> &APoly {
        &self.c[x][q]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().flatten().all(|p| p.is_empty())
    }

    /// Restricts to a smaller truncation.
    pub fn truncate(&self, qmax: usize, xmax: usize) -> Series {
        assert!(qmax <= self.qmax && xmax <= self.xmax);
        Series { qmax, xmax, c: self.c[..=xmax].iter().map(|row| row[..=qmax].to_vec()).collect() }
    }

    fn same_shape(&self, other: &Series) -> Result<()> {
        if self.qmax != other.qmax || self.xmax != other.xmax {
            return Err(Error::Series(format!(
                "truncations differ: (q{}, x{}) vs (q{}, x{})",
                self.qmax, self.xmax, other.qmax, other.xmax
            )));
        }
        Ok(())
    }

    pub fn add_assign_scaled(&mut self, other: &Series, coef: i64) {
        self.same_shape(other).expect("series shapes must agree");
        for (row, orow) in self.c.iter_mut().zip(&other.c) {
            for (p, op) in row.iter_mut().zip(orow) {
                apoly_add_scaled(p, op, coef, 0);
            }
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = self.clone();
        out.add_assign_scaled(other, 1);
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        let mut out = self.clone();
        out.add_assign_scaled(other, -1);
        out
    }

    /// Multiplies by a monomial, which must have nonnegative `q` and `x` degree.
    pub fn shift(&self, m: Monomial) -> Series {
        assert!(m.q >= 0 && m.x >= 0, "negative shift {m:?}");
        let mut out = Series::zero_x(self.qmax, self.xmax);
        let (dq, dx) = (m.q as usize, m.x as usize);
        for x in 0..=self.xmax {
            for q in 0..=self.qmax {
                if x + dx <= self.xmax && q + dq <= self.qmax {
                    apoly_add_scaled(&mut out.c[x + dx][q + dq], &self.c[x][q], m.coef, m.a);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Series) -> Series {
        self.same_shape(other).expect("series shapes must agree");
        let mut out = Series::zero_x(self.qmax, self.xmax);
        for x1 in 0..=self.xmax {
            for q1 in 0..=self.qmax {
                let p1 = &self.c[x1][q1];
                if p1.is_empty() {
                    continue;
                }
                for x2 in 0..=self.xmax - x1 {
                    for q2 in 0..=self.qmax - q1 {
                        let p2 = &other.c[x2][q2];
                        if !p2.is_empty() {
                            apoly_add_product(&mut out.c[x1 + x2][q1 + q2], p1, p2);
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiplies by `(1 + m)`.
    pub fn mul_one_plus(&self, m: Monomial) -> Series {
        let mut out = self.clone();
        if m.q >= 0 && m.x >= 0 {
            out.add_assign_scaled(&self.shift(m), 1);
        }
        out
    }

    /// Divides by `(1 + m)`, where `m` must have positive `q`- or `x`-degree.
    pub fn div_one_plus(&self, m: Monomial) -> Series {
        assert!(m.q >= 0 && m.x >= 0 && (m.q, m.x) != (0, 0), "non-invertible divisor {m:?}");
        let mut out = self.clone();
        let (dq, dx) = (m.q as usize, m.x as usize);
        for x in dx..=self.xmax {
            for q in dq..=self.qmax {
                let prev = out.c[x - dx][q - dq].clone();
                apoly_add_scaled(&mut out.c[x][q], &prev, -m.coef, m.a);
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `±a^e`.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = &self.c[0][0];
        let (e0, unit) = match c0.iter().next() {
            Some((&e, c)) if c0.len() == 1 && c.abs().is_one() => (e, c.clone()),
            _ => return Err(Error::Series("constant term is not a unit".into())),
        };
        let mut out = Series::zero_x(self.qmax, self.xmax);
        for x in 0..=self.xmax {
            for q in 0..=self.qmax {
                let mut acc = APoly::new();
                if (x, q) == (0, 0) {
                    acc.insert(0, BigInt::one());
                }
                for x2 in 0..=x {
                    for q2 in 0..=q {
                        if (x2, q2) == (0, 0) {
                            continue;
                        }
                        let mut prod = APoly::new();
                        apoly_add_product(&mut prod, &self.c[x2][q2], &out.c[x - x2][q - q2]);
                        apoly_add_scaled(&mut acc, &prod, -1, 0);
                    }
                }
                let mut scaled = APoly::new();
                for (e, c) in acc {
                    scaled.insert(e - e0, c * &unit);
                }
                out.c[x][q] = scaled;
            }
        }
        Ok(out)
    }

    /// Substitutes `a -> -a`.
    pub fn negate_a(&self) -> Series {
        let mut out = self.clone();
        for p in out.c.iter_mut().flatten() {
            for (e, c) in p.iter_mut() {
                if e.rem_euclid(2) == 1 {
                    *c = -c.clone();
                }
            }
        }
        out
    }

    /// Substitutes `x -> x q`, dropping terms pushed past `qmax`.
    pub fn x_to_xq(&self) -> Series {
        let mut out = Series::zero_x(self.qmax, self.xmax);
        for x in 0..=self.xmax {
            for q in 0..=self.qmax.saturating_sub(x) {
                if q + x <= self.qmax {
                    out.c[x][q + x] = self.c[x][q].clone();
                }
            }
        }
        out
    }

    /// Sets `x = 1` (or keeps only `x^0` when `at_one` is false).
    pub fn collapse_x(&self, at_one: bool) -> Series {
        let mut out = Series::zero(self.qmax);
        for x in 0..=self.xmax {
            if x > 0 && !at_one {
                break;
            }
            for q in 0..=self.qmax {
                apoly_add_scaled(&mut out.c[0][q], &self.c[x][q], 1, 0);
            }
        }
        out
    }

    /// True when no coefficient involves a negative power of `a`.
    pub fn is_a_polynomial(&self) -> bool {
        self.c.iter().flatten().all(|p| p.keys().all(|&e| e >= 0))
    }

    /// Largest power of `a` that occurs.
    pub fn a_degree(&self) -> i32 {
        self.c.iter().flatten().filter_map(|p| p.keys().next_back().copied()).max().unwrap_or(0)
    }

    /// Substitutes `a -> coef * q^e` and `q -> q^m` into an `x`-free series,
    /// returning a series truncated at `out_qmax`.
    ///
    /// With `e < 0` a coefficient of `q^n` may contribute at degree `mn + ej`,
    /// so the input must be long enough. Completeness is judged with the
    /// bound `j(j+1)/2 <= n` on the `a`-degree, which holds for every series
    /// counting overpartitions by their overlined parts.
    pub fn specialize(&self, coef: i64, e: i64, m: u32, out_qmax: usize) -> Result<Series> {
        if self.xmax != 0 {
            return Err(Error::Series("specialization needs an x-free series".into()));
        }
        if m == 0 {
            return Err(Error::Series("q -> q^0 is not a valid substitution".into()));
        }
        let needed = required_input_qmax(e, m, out_qmax);
        if self.qmax < needed {
            return Err(Error::Series(format!(
                "input truncated at q^{} but q^{} is needed for output q^{}",
                self.qmax, needed, out_qmax
            )));
        }
        let mut out = Series::zero(out_qmax);
        for n in 0..=self.qmax {
            for (&j, c) in &self.c[0][n] {
                if coef == 0 && j != 0 {
                    continue;
                }
                if j < 0 {
                    return Err(Error::Series(format!("negative power a^{j} cannot be specialized")));
                }
                let deg = m as i64 * n as i64 + e * j as i64;
                if deg < 0 {
                    return Err(Error::Series(format!("term a^{j} q^{n} maps to negative degree {deg}")));
                }
                if deg as usize <= out_qmax {
                    let scale = BigInt::from(coef).pow(j as u32);
                    let slot = out.c[0][deg as usize].entry(0).or_insert_with(BigInt::zero);
                    *slot += c * scale;
                }
            }
        }
        for p in out.c[0].iter_mut() {
            p.retain(|_, c| !c.is_zero());
        }
        Ok(out)
    }

    /// Coefficient table as JSON: one entry per `q`-degree (and `x`-degree
    /// when present) listing the nonzero `a`-coefficients as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term {
            a: i32,
            c: String,
        }
        let mut rows = Vec::new();
        for x in 0..=self.xmax {
            for q in 0..=self.qmax {
                let terms: Vec<Term> = self.c[x][q].iter().map(|(&a, c)| Term { a, c: c.to_string() }).collect();
                let mut row = serde_json::json!({ "q": q, "terms": terms });
                if self.xmax > 0 {
                    row["x"] = serde_json::json!(x);
                }
                rows.push(row);
            }
        }
        serde_json::Value::Array(rows)
    }
}

/// Largest `j` with `j(j+1)/2 <= n`.
pub fn a_degree_bound(n: usize) -> usize {
    let mut j = 0;
    while (j + 1) * (j + 2) / 2 <= n {
        j += 1;
    }
    j
}

/// Input truncation needed so that [`Series::specialize`] produces every
/// coefficient up to `out_qmax`.
pub fn required_input_qmax(e: i64, m: u32, out_qmax: usize) -> usize {
    let m = m as i64;
    if e >= 0 {
        return out_qmax / m as usize;
    }
    let out = out_qmax as i64;
    let mut q = 0i64;
    // Beyond this point m*n - |e|*sqrt(2n) is increasing.
    let horizon = out + 4 * e.abs() * e.abs() + 16;
    for n in 0..=horizon {
        let low = m * n + e * a_degree_bound(n as usize) as i64;
        if low <= out {
            q = n;
        }
    }
    q as usize
}

/// Infinite or finite count for [`poch`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    Infinite,
}

/// `(m; q^base)_count = prod_{j < count} (1 - m q^{base j})`.
pub fn poch(m: Monomial, base: u32, count: Count, qmax: usize) -> Result<Series> {
    if m.q < 0 || m.x < 0 {
        return Err(Error::Series(format!("prefactor {m:?} has a negative exponent")));
    }
    let n = match count {
        Count::Finite(n) => n,
        Count::Infinite => {
            if base == 0 {
                return Err(Error::Series("infinite product with base q^0 diverges".into()));
            }
            (qmax + 1) / base as usize + 2
        }
    };
    let mut out = Series::one(qmax);
    for j in 0..n {
        let factor = Monomial { coef: -m.coef, a: m.a, q: m.q + (base as i64) * j as i64, x: m.x };
        if factor.q as usize > qmax && factor.x == 0 {
            if count == Count::Infinite {
                break;
            }
            continue;
        }
        out = out.mul_one_plus(factor);
    }
    Ok(out)
}

/// `1 / (q; q)_n` (with `n = None` meaning the infinite product).
pub fn inv_q_poch(n: Option<usize>, s: &Series) -> Series {
    let upto = n.unwrap_or(s.qmax()).min(s.qmax());
    let mut out = s.clone();
    for j in 1..=upto {
        out = out.div_one_plus(Monomial::new(-1, 0, j as i64));
    }
    out
}

/// Gaussian binomial coefficient `[n, k]`; zero outside `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64, qmax: usize) -> Series {
    if k < 0 || n < 0 || k > n {
        return Series::zero(qmax);
    }
    let mut out = Series::one(qmax);
    for j in 1..=k {
        out = out.mul_one_plus(Monomial::new(-1, 0, n - k + j));
        out = out.div_one_plus(Monomial::new(-1, 0, j));
    }
    out
}

/// `prod_{j < len} (a + q^{start + j})`, i.e. `a^len (-q^start / a)_len`.
pub fn a_plus_q_product(start: i64, len: usize, qmax: usize) -> Series {
    let mut out = Series::one(qmax);
    for j in 0..len {
        // (a + q^d) = a (1 + q^d / a)
        out = out.shift(Monomial::new(1, 1, 0));
        out = out.mul_one_plus(Monomial::new(1, -1, start + j as i64));
    }
    out
}

fn check_ki(k: usize, i: usize) -> Result<()> {
    if k < 2 || i < 1 || i > k {
        return Err(Error::InvalidParameters(format!("need k >= 2 and 1 <= i <= k, got k={k}, i={i}")));
    }
    Ok(())
}

/// `(-aq)_inf / (q)_inf`, the generating function of all overpartitions.
pub fn overpartition_series(qmax: usize) -> Series {
    let num = poch(Monomial::new(-1, 1, 1), 1, Count::Infinite, qmax).expect("valid product");
    inv_q_poch(None, &num)
}

/// Generating function of the `(k,i)`-paths by major index and south steps,
/// as the bilateral sum `(-aq)_inf/(q)_inf sum_n (-1)^n a^n q^{kn^2+(k-i+1)n} (-1/a)_n/(-aq)_n`.
///
/// For `n = -m < 0` the term is rewritten as
/// `(-1)^m q^{km^2-(k-i)m} prod_{j<m}(a+q^j) / (-aq)_m`.
pub fn e_series(k: usize, i: usize, qmax: usize) -> Result<Series> {
    check_ki(k, i)?;
    let (k, i) = (k as i64, i as i64);
    let mut sum = Series::zero(qmax);
    for (sign_n, lin) in [(1i64, k - i + 1), (-1, -(k - i))] {
        let first = if sign_n == 1 { 0 } else { 1 };
        for m in first.. {
            let deg = k * m * m + lin * m;
            if deg > qmax as i64 {
                break;
            }
            let mut term = a_plus_q_product(0, m as usize, qmax);
            for j in 1..=m {
                term = term.div_one_plus(Monomial::new(1, 1, j));
            }
            let sign = if m % 2 == 0 { 1 } else { -1 };
            sum.add_assign_scaled(&term.shift(Monomial::new(sign, 0, deg)), 1);
        }
    }
    Ok(overpartition_series(qmax).mul(&sum))
}

/// Closed form for the paths with exactly `N` peaks:
/// `a^N q^{C(N+1,2)} (-1/a)_N sum_{n=-N}^{N} (-1)^n q^{kn^2+n(k-i)-C(n,2)} / ((q)_{N-n}(q)_{N+n})`.
pub fn e_n_series(k: usize, i: usize, n_peaks: usize, qmax: usize) -> Result<Series> {
    if k < 2 || i > k + 1 {
        return Err(Error::InvalidParameters(format!("k={k}, i={i}")));
    }
    let (k, i, big) = (k as i64, i as i64, n_peaks as i64);
    closed_form(big, big * (big + 1) / 2, -big..=big, qmax, |n| {
        (k * n * n + n * (k - i) - n * (n - 1) / 2, big - n, big + n)
    })
}

/// Closed form for the paths obtained by deleting the initial `NE` step:
/// `a^N q^{C(N,2)} (-1/a)_N sum_{n=-N}^{N-1} (-1)^n q^{kn^2+n(k-i)-C(n+1,2)} / ((q)_{N-n-1}(q)_{N+n})`.
pub fn gamma_n_series(k: usize, i: usize, n_peaks: usize, qmax: usize) -> Result<Series> {
    if k < 2 || i >= k {
        return Err(Error::InvalidParameters(format!("need 0 <= i < k, got k={k}, i={i}")));
    }
    let (k, i, big) = (k as i64, i as i64, n_peaks as i64);
    closed_form(big, big * (big - 1) / 2, -big..=big - 1, qmax, |n| {
        (k * n * n + n * (k - i) - n * (n + 1) / 2, big - n - 1, big + n)
    })
}

fn closed_form(
    big: i64,
    pre_deg: i64,
    range: std::ops::RangeInclusive<i64>,
    qmax: usize,
    term: impl Fn(i64) -> (i64, i64, i64),
) -> Result<Series> {
    let mut sum = Series::zero(qmax);
    for n in range {
        let (deg, p1, p2) = term(n);
        let total = pre_deg + deg;
        if total < 0 {
            return Err(Error::Series(format!("negative degree {total} in closed form")));
        }
        if total as usize > qmax {
            continue;
        }
        let mut t = Series::monomial(Monomial::new(if n.rem_euclid(2) == 0 { 1 } else { -1 }, 0, total), qmax, 0);
        t = inv_q_poch(Some(p1 as usize), &t);
        t = inv_q_poch(Some(p2 as usize), &t);
        sum.add_assign_scaled(&t, 1);
    }
    Ok(a_plus_q_product(0, big as usize, qmax).mul(&sum))
}

/// Series indexed by `[N][i]`.
pub type SeriesTable = Vec<Vec<Series>>;

/// Evaluates the peak-refined generating functions from the recurrences
/// `E(0) = 1`, `Gamma_0 = 0`,
/// `Gamma_i(N) = q^N Gamma_{i-1}(N) + (a + q^{N-1}) E_{i+1}(N-1)`,
/// `E_k(N) = q^N/(1-q^N) Gamma_{k-1}(N)` and
/// `E_i(N) = q^N (E_{i+1}(N) + Gamma_{i-1}(N))`.
///
/// Returns `e[N][i]` for `1 <= i <= k` and `g[N][i]` for `0 <= i < k`.
pub fn recurrence_tables(k: usize, nmax: usize, qmax: usize) -> Result<(SeriesTable, SeriesTable)> {
    check_ki(k, 1)?;
    let zero = Series::zero(qmax);
    let mut e = vec![vec![zero.clone(); k + 1]; nmax + 1];
    let mut g = vec![vec![zero.clone(); k]; nmax + 1];
    for cell in &mut e[0][1..] {
        *cell = Series::one(qmax);
    }
    for n in 1..=nmax {
        let qn = Monomial::q(n as i64);
        for i in 1..k {
            let from_prev =
                e[n - 1][i + 1].shift(Monomial::new(1, 1, 0)).add(&e[n - 1][i + 1].shift(Monomial::q(n as i64 - 1)));
            g[n][i] = g[n][i - 1].shift(qn).add(&from_prev);
        }
        e[n][k] = g[n][k - 1].shift(qn).div_one_plus(Monomial::new(-1, 0, n as i64));
        for i in (1..k).rev() {
            e[n][i] = e[n][i + 1].add(&g[n][i - 1]).shift(qn);
        }
    }
    Ok((e, g))
}

/// Multi-sum over Durfee profiles `n_1 >= ... >= n_{k-1} >= 0`:
/// `q^{C(n_1+1,2) + n_i + ... + n_{k-1}} (-1/a)_{n_1} a^{n_1} / (q)_{n_1}`
/// times `prod_{t >= 2} q^{n_t^2} [n_{t-1}, n_t]`.
pub fn d_series(k: usize, i: usize, qmax: usize) -> Result<Series> {
    check_ki(k, i)?;
    let mut total = Series::zero(qmax);
    let mut profile = Vec::with_capacity(k - 1);
    let mut n1 = 0usize;
    while n1 * (n1 + 1) / 2 <= qmax {
        profile.clear();
        profile.push(n1);
        let head = inv_q_poch(Some(n1), &a_plus_q_product(0, n1, qmax));
        d_profiles(k, i, qmax, &mut profile, n1 * (n1 + 1) / 2, &head, &mut total);
        n1 += 1;
    }
    Ok(total)
}

fn d_profiles(k: usize, i: usize, qmax: usize, profile: &mut Vec<usize>, deg: usize, acc: &Series, total: &mut Series) {
    if profile.len() == k - 1 {
        let extra: usize = profile[i - 1..].iter().sum();
        if deg + extra <= qmax {
            total.add_assign_scaled(&acc.shift(Monomial::q((deg + extra) as i64)), 1);
        }
        return;
    }
    let prev = *profile.last().expect("profile starts with n_1");
    for nt in 0..=prev {
        if deg + nt * nt > qmax {
            break;
        }
        let next = acc.mul(&qbinom(prev as i64, nt as i64, qmax));
        profile.push(nt);
        d_profiles(k, i, qmax, profile, deg + nt * nt, &next, total);
        profile.pop();
    }
}

/// `H_{k,i}(a, x q^s, q) = sum_n x^{kn} q^{s k n + kn^2 + n - in} a^n
/// (1 - x^i q^{si + 2ni}) (a x q^{n+1+s})_inf (1/a)_n / ((q)_n (x q^{n+s})_inf)`.
///
/// With `s = 0` the factor `1/(1-x)` is expanded in `x`, so the result is
/// exact only through `x^xmax`.
pub fn h_series_shifted(k: usize, i: usize, s: usize, qmax: usize, xmax: usize) -> Result<Series> {
    if k < 2 || i > k {
        return Err(Error::InvalidParameters(format!("need 0 <= i <= k, got k={k}, i={i}")));
    }
    let (ki, ii, si) = (k as i64, i as i64, s as i64);
    let mut sum = Series::zero_x(qmax, xmax);
    if i == 0 {
        return Ok(sum);
    }
    for n in 0i64.. {
        let deg = si * ki * n + ki * n * n + n - ii * n;
        if deg > qmax as i64 || ki * n > xmax as i64 {
            break;
        }
        let mut t = Series::monomial(Monomial::q(0), qmax, xmax);
        for j in 0..n {
            t = t.shift(Monomial::new(1, 1, 0)).mul_one_plus(Monomial::new(-1, -1, j));
        }
        t = t.mul_one_plus(Monomial::new(-1, 0, si * ii + 2 * n * ii).with_x(ii));
        for d in n + 1 + si..=qmax as i64 {
            t = t.mul_one_plus(Monomial::new(-1, 1, d).with_x(1));
        }
        for j in 1..=n {
            t = t.div_one_plus(Monomial::new(-1, 0, j));
        }
        for d in n + si..=qmax as i64 {
            t = t.div_one_plus(Monomial::new(-1, 0, d).with_x(1));
        }
        sum.add_assign_scaled(&t.shift(Monomial::q(deg).with_x(ki * n)), 1);
    }
    Ok(sum)
}

/// `H_{k,i}(a, x, q)`.
pub fn h_series(k: usize, i: usize, qmax: usize, xmax: usize) -> Result<Series> {
    h_series_shifted(k, i, 0, qmax, xmax)
}

/// `J_{k,i}(a,x,q) = H_{k,i}(a,xq,q) - a x q H_{k,i-1}(a,xq,q)`.
pub fn j_series(k: usize, i: usize, qmax: usize, xmax: usize) -> Result<Series> {
    check_ki(k, i)?;
    let h = h_series_shifted(k, i, 1, qmax, xmax)?;
    let h_prev = h_series_shifted(k, i - 1, 1, qmax, xmax)?;
    Ok(h.sub(&h_prev.shift(Monomial::new(1, 1, 1).with_x(1))))
}

/// `(q^{r_1}, ..., q^{r_t}; q^m)_inf`.
fn theta(residues: &[i64], m: u32, qmax: usize) -> Series {
    let mut out = Series::one(qmax);
    for &r in residues {
        let p = poch(Monomial::q(r), m, Count::Infinite, qmax).expect("nonnegative residues");
        out = out.mul(&p);
    }
    out
}

/// Which product formula [`product_side`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductSide {
    /// `a = 0`.
    Eq3,
    /// `a -> 1/q, q -> q^2`.
    Eq4,
    /// `a = 1`.
    Eq5,
    /// `a -> 1/q`.
    Eq6,
}

impl ProductSide {
    pub const ALL: [ProductSide; 4] = [ProductSide::Eq3, ProductSide::Eq4, ProductSide::Eq5, ProductSide::Eq6];

    /// `(coef, e, m)` of the substitution `a -> coef q^e`, `q -> q^m`.
    pub fn substitution(self) -> (i64, i64, u32) {
        match self {
            ProductSide::Eq3 => (0, 0, 1),
            ProductSide::Eq4 => (1, -1, 2),
            ProductSide::Eq5 => (1, 0, 1),
            ProductSide::Eq6 => (1, -1, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductSide::Eq3 => "eq3",
            ProductSide::Eq4 => "eq4",
            ProductSide::Eq5 => "eq5",
            ProductSide::Eq6 => "eq6",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ProductSide::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown product {s:?}")))
    }
}

/// Infinite-product side of each specialization of [`e_series`].
pub fn product_side(which: ProductSide, k: usize, i: usize, qmax: usize) -> Result<Series> {
    check_ki(k, i)?;
    let (k, i) = (k as i64, i as i64);
    let inv_q = |s: &Series| inv_q_poch(None, s);
    let over = inv_q(&poch(Monomial::new(-1, 0, 1), 1, Count::Infinite, qmax)?);
    Ok(match which {
        ProductSide::Eq3 => {
            let m = 2 * k + 1;
            inv_q(&theta(&[i, m - i, m], m as u32, qmax))
        }
        ProductSide::Eq4 => {
            let m = 4 * k;
            let t = theta(&[2], 4, qmax).mul(&theta(&[2 * i - 1, m + 1 - 2 * i, m], m as u32, qmax));
            inv_q(&t)
        }
        ProductSide::Eq5 => {
            let m = 2 * k;
            let mut sum = Series::zero(qmax);
            for j in 0..=2 * (k - i) {
                let t = theta(&[i + j, m - i - j, m], m as u32, qmax);
                sum.add_assign_scaled(&t, if j % 2 == 0 { 1 } else { -1 });
            }
            over.mul(&sum)
        }
        ProductSide::Eq6 => {
            let m = 2 * k;
            let sum = theta(&[i, m - i, m], m as u32, qmax).add(&theta(&[i - 1, m + 1 - i, m], m as u32, qmax));
            over.mul(&sum)
        }
    })
}

/// Both sides of the Jacobi triple product for `z = coef q^e` in base `q^m`:
/// `(-1/z, -zq, q; q)_inf` and `sum_n z^n q^{C(n+1,2)}`, with `-m <= e <= 0`.
pub fn jtp_sides(coef: i64, e: i64, m: u32, qmax: usize) -> Result<(Series, Series)> {
    if coef.abs() != 1 || e > 0 || e < -(m as i64) || m == 0 {
        return Err(Error::InvalidParameters(format!(
            "need z = ±q^e with -m <= e <= 0, got coef={coef}, e={e}, m={m}"
        )));
    }
    let mi = m as i64;
    let prod = poch(Monomial::new(-coef, 0, -e), m, Count::Infinite, qmax)?
        .mul(&poch(Monomial::new(-coef, 0, e + mi), m, Count::Infinite, qmax)?)
        .mul(&poch(Monomial::q(mi), m, Count::Infinite, qmax)?);
    let mut sum = Series::zero(qmax);
    let bound = (2 * qmax as i64 + 4).max(4);
    for n in -bound..=bound {
        let deg = e * n + mi * n * (n + 1) / 2;
        if deg >= 0 && deg as usize <= qmax {
            let sign = if coef < 0 && n.rem_euclid(2) == 1 { -1 } else { 1 };
            sum.add_monomial(Monomial::new(sign, 0, deg));
        }
    }
    Ok((prod, sum))
}

/// True when both sides of the triple product agree through `qmax`.
pub fn jtp_check(coef: i64, e: i64, m: u32, qmax: usize) -> Result<bool> {
    let (p, s) = jtp_sides(coef, e, m, qmax)?;
    Ok(p == s)
}

/// Stratum `N` of the `n`-Durfee decomposition:
/// `(-aq)_n (-q^n/a)_{N-n} q^{C(N+1,2)-C(n+1,2)} a^{N-n} / ((q)_{N+n}(q)_{N-n})`.
/// Negative `n` uses the same expression with `|n|`.
pub fn n_durfee_term(n: i64, big: usize, qmax: usize) -> Series {
    let n = n.unsigned_abs() as usize;
    if big < n {
        return Series::zero(qmax);
    }
    let deg = big * (big + 1) / 2 - n * (n + 1) / 2;
    if deg > qmax {
        return Series::zero(qmax);
    }
    let mut t = poch(Monomial::new(-1, 1, 1), 1, Count::Finite(n), qmax).expect("valid product");
    t = t.mul(&a_plus_q_product(n as i64, big - n, qmax));
    t = inv_q_poch(Some(big + n), &t);
    t = inv_q_poch(Some(big - n), &t);
    t.shift(Monomial::q(deg as i64))
}

/// Sum of all strata for a given `n`.
pub fn n_durfee_sum(n: i64, qmax: usize) -> Series {
    let mut sum = Series::zero(qmax);
    let start = n.unsigned_abs() as usize;
    let mut big = start;
    while big * (big + 1) / 2 - start * (start + 1) / 2 <= qmax {
        sum.add_assign_scaled(&n_durfee_term(n, big, qmax), 1);
        big += 1;
    }
    sum
}

/// True when the strata for `n` sum to the overpartition generating function.
pub fn n_durfee_identity_check(n: i64, qmax: usize) -> bool {
    n_durfee_sum(n, qmax) == overpartition_series(qmax)
}
