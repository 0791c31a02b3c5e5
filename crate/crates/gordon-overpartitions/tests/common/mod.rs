//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the library's series, enumeration or bijection
//! code. Series use plain `i128` coefficients on a dense `(a, q)` grid, path
//! counts come from a memoized transfer recursion instead of enumeration, and
//! the combinatorial classes are tested through their gap forms.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

/// Truncated series in `q` with Laurent-polynomial coefficients in `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ser {
    pub qmax: usize,
    pub c: BTreeMap<(i32, usize), i128>,
}

impl Ser {
    pub fn zero(qmax: usize) -> Self {
        Ser { qmax, c: BTreeMap::new() }
    }

    pub fn one(qmax: usize) -> Self {
        Self::mono(1, 0, 0, qmax)
    }

    pub fn mono(coef: i128, a: i32, q: i64, qmax: usize) -> Self {
        let mut s = Self::zero(qmax);
        if q >= 0 && q as usize <= qmax && coef != 0 {
            s.c.insert((a, q as usize), coef);
        }
        s
    }

    pub fn get(&self, a: i32, q: usize) -> i128 {
        self.c.get(&(a, q)).copied().unwrap_or(0)
    }

    /// Coefficient of `q^n` with `a = 1`.
    pub fn at_a1(&self, q: usize) -> i128 {
        self.c.iter().filter(|((_, d), _)| *d == q).map(|(_, v)| v).sum()
    }

    pub fn add(&self, o: &Ser) -> Ser {
        let mut out = self.clone();
        for (&k, &v) in &o.c {
            *out.c.entry(k).or_insert(0) += v;
        }
        out.c.retain(|_, v| *v != 0);
        out
    }

    pub fn scale(&self, s: i128) -> Ser {
        let mut out = self.clone();
        for v in out.c.values_mut() {
            *v *= s;
        }
        out.c.retain(|_, v| *v != 0);
        out
    }

    pub fn mul(&self, o: &Ser) -> Ser {
        let mut out = Ser::zero(self.qmax.min(o.qmax));
        for (&(a1, q1), &v1) in &self.c {
            for (&(a2, q2), &v2) in &o.c {
                if q1 + q2 <= out.qmax {
                    *out.c.entry((a1 + a2, q1 + q2)).or_insert(0) += v1 * v2;
                }
            }
        }
        out.c.retain(|_, v| *v != 0);
        out
    }

    /// Multiplies by `1 + coef a^a q^q`.
    pub fn times_binomial(&self, coef: i128, a: i32, q: usize) -> Ser {
        self.add(&self.mul(&Ser::mono(coef, a, q as i64, self.qmax)))
    }

    /// Divides by `1 - q^d` (`d >= 1`) via the geometric series.
    pub fn over_one_minus(&self, d: usize) -> Ser {
        let mut out = self.clone();
        for q in d..=self.qmax {
            let prev: Vec<(i32, i128)> =
                out.c.iter().filter(|((_, qq), _)| *qq == q - d).map(|(&(a, _), &v)| (a, v)).collect();
            for (a, v) in prev {
                *out.c.entry((a, q)).or_insert(0) += v;
            }
        }
        out.c.retain(|_, v| *v != 0);
        out
    }

    /// Divides by `1 + a q^d` (`d >= 1`).
    pub fn over_one_plus_a(&self, d: usize) -> Ser {
        let mut out = self.clone();
        for q in d..=self.qmax {
            let prev: Vec<(i32, i128)> =
                out.c.iter().filter(|((_, qq), _)| *qq == q - d).map(|(&(a, _), &v)| (a, v)).collect();
            for (a, v) in prev {
                *out.c.entry((a + 1, q)).or_insert(0) -= v;
            }
        }
        out.c.retain(|_, v| *v != 0);
        out
    }
}

/// `prod_{j>=1} (1 + a q^j) / (1 - q^j)`.
pub fn overpartitions(qmax: usize) -> Ser {
    let mut s = Ser::one(qmax);
    for j in 1..=qmax {
        s = s.times_binomial(1, 1, j).over_one_minus(j);
    }
    s
}

/// The bilateral series for `(k,i)`-paths, straight from its defining sum.
pub fn e_series(k: usize, i: usize, qmax: usize) -> Ser {
    let (k, i) = (k as i64, i as i64);
    let mut total = Ser::zero(qmax);
    // n >= 0: (-1)^n a^n q^{kn^2+(k-i+1)n} (-1/a)_n / (-aq)_n, with
    // a^n (-1/a)_n = prod_{j<n} (a + q^j).
    let mut n = 0i64;
    while k * n * n + (k - i + 1) * n <= qmax as i64 {
        let mut t = Ser::mono(if n % 2 == 0 { 1 } else { -1 }, 0, k * n * n + (k - i + 1) * n, qmax);
        for j in 0..n {
            t = t.mul(&Ser::mono(1, 1, 0, qmax).add(&Ser::mono(1, 0, j, qmax)));
        }
        for j in 1..=n {
            t = t.over_one_plus_a(j as usize);
        }
        total = total.add(&t);
        n += 1;
    }
    let mut m = 1i64;
    while k * m * m - (k - i) * m <= qmax as i64 {
        let mut t = Ser::mono(if m % 2 == 0 { 1 } else { -1 }, 0, k * m * m - (k - i) * m, qmax);
        for j in 0..m {
            t = t.mul(&Ser::mono(1, 1, 0, qmax).add(&Ser::mono(1, 0, j, qmax)));
        }
        for j in 1..=m {
            t = t.over_one_plus_a(j as usize);
        }
        total = total.add(&t);
        m += 1;
    }
    total.mul(&overpartitions(qmax))
}

/// `(q^r; q^m)_inf` for `r >= 1`, or `(1; q^m)_inf = 0` when `r = 0`.
pub fn poch_inf(r: usize, m: usize, qmax: usize) -> Ser {
    if r == 0 {
        return Ser::zero(qmax);
    }
    let mut s = Ser::one(qmax);
    let mut d = r;
    while d <= qmax {
        s = s.times_binomial(-1, 0, d);
        d += m;
    }
    s
}

pub fn over_q_inf(s: &Ser) -> Ser {
    let mut out = s.clone();
    for j in 1..=s.qmax {
        out = out.over_one_minus(j);
    }
    out
}

/// Counts of `(k,i)`-paths by `(major, south steps, peaks)` up to major
/// `nmax`, from a memoized recursion over `(x, y, previous step)`.
pub fn path_counts(k: usize, i: usize, nmax: usize) -> BTreeMap<(usize, usize, usize), u64> {
    // prev: 0 = start or down step, 1 = NE, 2 = E
    type Memo = HashMap<(i64, i64, u8), BTreeMap<(usize, usize, usize), u64>>;
    fn go(x: i64, y: i64, prev: u8, k: i64, nmax: usize, memo: &mut Memo) -> BTreeMap<(usize, usize, usize), u64> {
        if let Some(v) = memo.get(&(x, y, prev)) {
            return v.clone();
        }
        let mut out: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
        if y == 0 && prev == 0 {
            *out.entry((0, 0, 0)).or_insert(0) += 1;
        }
        if x as usize <= nmax + k as usize + 2 {
            let mut merge = |sub: BTreeMap<(usize, usize, usize), u64>, dm: usize, ds: usize, dp: usize| {
                for ((m, s, p), c) in sub {
                    if m + dm <= nmax {
                        *out.entry((m + dm, s + ds, p + dp)).or_insert(0) += c;
                    }
                }
            };
            if y + 1 < k {
                merge(go(x + 1, y + 1, 1, k, nmax, memo), 0, 0, 0);
            }
            if y > 0 {
                let peak = prev == 1;
                let dm = if peak { x as usize } else { 0 };
                merge(go(x + 1, y - 1, 0, k, nmax, memo), dm, 0, peak as usize);
                if peak {
                    merge(go(x, y - 1, 0, k, nmax, memo), dm, 1, 1);
                }
            }
            if y == 0 {
                merge(go(x + 1, 0, 2, k, nmax, memo), 0, 0, 0);
            }
        }
        memo.insert((x, y, prev), out.clone());
        out
    }
    let mut memo = Memo::new();
    go(0, (k - i) as i64, 0, k as i64, nmax, &mut memo)
}

/// All partitions of `n` as nonincreasing vectors.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=max.min(rest)).rev() {
            cur.push(v);
            rec(rest - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All overpartitions of `n` as `(value, overlined)` lists, largest first,
/// with the overlined copy of a value placed last among its equals.
pub fn overpartitions_of(n: u32) -> Vec<Vec<(u32, bool)>> {
    let mut out = Vec::new();
    for p in partitions(n) {
        let mut distinct: Vec<u32> = p.clone();
        distinct.dedup();
        for mask in 0u32..(1 << distinct.len()) {
            let over: Vec<u32> =
                distinct.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
            let mut parts = Vec::new();
            for (idx, &v) in p.iter().enumerate() {
                let last = p.get(idx + 1) != Some(&v);
                parts.push((v, last && over.contains(&v)));
            }
            out.push(parts);
        }
    }
    out
}

/// Gap form of the class counted by family B: consecutive windows of `k`
/// parts drop by at least 1 when the last part is overlined and by 2
/// otherwise, and at most `i-1` parts equal 1.
pub fn b_class_gap_form(parts: &[(u32, bool)], k: usize, i: usize) -> bool {
    let ones = parts.iter().filter(|p| p.0 == 1).count();
    ones < i
        && parts.windows(k).all(|w| {
            let (lo, lo_over) = w[k - 1];
            w[0].0 >= lo + if lo_over { 1 } else { 2 }
        })
}

/// A symbol as `(top, bottom)` with bottom entries `(value, overlined)`.
pub type RawSymbol = (Vec<u32>, Vec<(u32, bool)>);

/// Frobenius symbols of weight `n` as `(top, bottom)` with bottom entries
/// `(value, overlined)`, generated by brute force over column counts.
pub fn frobenius_symbols(n: u32) -> Vec<RawSymbol> {
    let mut out = Vec::new();
    let mut cols = 0u32;
    while cols * (cols + 1) / 2 <= n {
        // top: distinct nonnegative; bottom: nonincreasing, overline allowed
        // only on the first of equal entries.
        for top_sum in 0..=(n - cols) {
            for top in distinct_rows(top_sum, cols) {
                let bsum = n - cols - top_sum;
                for bottom in nonincreasing_rows(bsum, cols) {
                    let mut distinct: Vec<u32> = bottom.clone();
                    distinct.dedup();
                    for mask in 0u32..(1 << distinct.len()) {
                        let row: Vec<(u32, bool)> = bottom
                            .iter()
                            .enumerate()
                            .map(|(idx, &v)| {
                                let first = idx == 0 || bottom[idx - 1] != v;
                                let pos = distinct.iter().position(|&d| d == v).unwrap();
                                (v, first && mask >> pos & 1 == 1)
                            })
                            .collect();
                        out.push((top.clone(), row));
                    }
                }
            }
        }
        cols += 1;
    }
    out
}

fn distinct_rows(sum: u32, len: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, len: u32, below: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..below.min(rest + 1) {
            cur.push(v);
            rec(rest - v, len - 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(sum, len, sum + 1, &mut Vec::new(), &mut out);
    out
}

fn nonincreasing_rows(sum: u32, len: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, len: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=cap.min(rest) {
            cur.push(v);
            rec(rest - v, len - 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(sum, len, sum, &mut Vec::new(), &mut out);
    out
}

/// `r_j = a_j - b_j - #{plain bottom entries right of column j}`.
pub fn ranks(top: &[u32], bottom: &[(u32, bool)]) -> Vec<i64> {
    (0..top.len())
        .map(|j| {
            let plain_right = bottom[j + 1..].iter().filter(|b| !b.1).count() as i64;
            top[j] as i64 - bottom[j].0 as i64 - plain_right
        })
        .collect()
}
