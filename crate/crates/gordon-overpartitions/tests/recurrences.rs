//! The multuple map drives a recurrence system on B-class tallies. These
//! tests tally the classes by brute force and check each relation on the
//! tallies themselves, without going through any series code.

use std::collections::BTreeMap;

use gordon_overpartitions::bijections::burge_f;
use gordon_overpartitions::objects::{for_each_overpartition, in_b_class, multuple_division, Overpartition};

const NMAX: u32 = 16;

/// Tally keyed by `(weight, overlined parts)`.
type Tally = BTreeMap<(i64, i64), i64>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Leading {
    /// No multuple starts at `f_0`.
    None,
    /// A multuple `(f_0, f_1)` with `f_1` not equal to an overlined 1.
    Short,
    /// A multuple starting at `f_0` of length above 1, or ending in an overlined 1.
    Long,
}

fn leading(op: &Overpartition) -> Leading {
    let (multuples, _) = multuple_division(&op.multiplicity_sequence());
    match multuples.first() {
        Some(m) if m.start == 0 => {
            let last = m.values[m.values.len() - 1];
            if m.length() == 1 && !(last.count == 1 && last.o) {
                Leading::Short
            } else {
                Leading::Long
            }
        }
        _ => Leading::None,
    }
}

fn length(op: &Overpartition) -> usize {
    multuple_division(&op.multiplicity_sequence()).1
}

fn image(op: &Overpartition) -> Overpartition {
    burge_f(&op.multiplicity_sequence()).to_overpartition()
}

struct Tables {
    k: usize,
    /// `b[i][N]` for `1 <= i <= k+1`, with the last row equal to row `k`.
    b: Vec<Vec<Tally>>,
    /// `g[i][N]` for `1 <= i <= k`: images of B-class members of index `i+1`
    /// that have a short leading multuple.
    g: Vec<Vec<Tally>>,
}

fn tables(k: usize) -> Tables {
    let nmax_len = NMAX as usize + 1;
    let mut b = vec![vec![Tally::new(); nmax_len]; k + 2];
    let mut g = vec![vec![Tally::new(); nmax_len]; k + 1];
    for n in 0..=NMAX {
        for_each_overpartition(n, |op| {
            let len = length(op);
            let key = (n as i64, op.overlined_count() as i64);
            for i in 1..=k + 1 {
                if in_b_class(op, k, i.min(k)) {
                    *b[i][len].entry(key).or_insert(0) += 1;
                    if i >= 2 && leading(op) == Leading::Short {
                        let f = image(op);
                        let fkey = (f.weight() as i64, f.overlined_count() as i64);
                        *g[i - 1][len].entry(fkey).or_insert(0) += 1;
                    }
                }
            }
        });
    }
    Tables { k, b, g }
}

fn shift(t: &Tally, dq: i64, da: i64) -> Tally {
    t.iter().map(|(&(q, a), &c)| ((q + dq, a + da), c)).collect()
}

fn plus(parts: &[Tally]) -> Tally {
    let mut out = Tally::new();
    for t in parts {
        for (&k, &v) in t {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Compares two tallies on weights up to `bound`.
fn agree(left: &Tally, right: &Tally, bound: i64) -> bool {
    let cut =
        |t: &Tally| -> Tally { t.iter().filter(|(k, v)| k.0 <= bound && **v != 0).map(|(&k, &v)| (k, v)).collect() };
    cut(left) == cut(right)
}

#[test]
fn multuple_map_sorts_members_into_the_three_classes() {
    for k in 2..=4 {
        for i in 1..=k {
            for n in 1..=14 {
                for_each_overpartition(n, |op| {
                    if !in_b_class(op, k, i) {
                        return;
                    }
                    let len = length(op);
                    let f = image(op);
                    assert_eq!(f.weight() + len as u64, n as u64, "{op}");
                    let ov = op.overlined_count();
                    match leading(op) {
                        Leading::Long => {
                            assert!(i > 1);
                            assert_eq!(f.overlined_count() + 1, ov, "{op}");
                            assert!(in_b_class(&f, k, i), "{op} -> {f}");
                            assert_eq!(length(&f) + 1, len, "{op} -> {f}");
                        }
                        Leading::Short => {
                            assert!(i > 1);
                            assert_eq!(f.overlined_count(), ov, "{op}");
                        }
                        Leading::None => {
                            assert_eq!(f.overlined_count(), ov, "{op}");
                            assert!(in_b_class(&f, k, (i + 1).min(k)), "{op} -> {f}");
                            assert_eq!(length(&f), len, "{op} -> {f}");
                        }
                    }
                });
            }
        }
    }
}

#[test]
fn b_tallies_satisfy_the_multuple_recurrences() {
    let bound = NMAX as i64;
    for k in 2..=4 {
        let t = tables(k);
        let (b, g) = (&t.b, &t.g);
        assert_eq!(t.k, k);
        assert!(g[1].iter().any(|t| !t.is_empty()), "the G-class tallies are empty");
        let one = Tally::from([((0, 0), 1)]);
        for (i, row) in b.iter().enumerate().take(k + 1).skip(1) {
            assert_eq!(row[0], one, "k={k}, i={i}, N=0");
        }
        for big in 1..=NMAX as usize {
            let n = big as i64;
            assert!(agree(&b[1][big], &shift(&b[2][big], n, 0), bound), "k={k}, B_1, N={big}");
            for i in 2..=k {
                let rhs =
                    shift(&plus(&[b[i + 1][big].clone(), g[i - 1][big].clone(), shift(&b[i][big - 1], 0, 1)]), n, 0);
                assert!(agree(&b[i][big], &rhs, bound), "k={k}, B_{i}, N={big}");
            }
            assert!(agree(&g[1][big], &shift(&b[2][big - 1], n - 1, 0), bound - n), "k={k}, G_1, N={big}");
            for i in 2..k {
                let rhs = plus(&[
                    shift(&b[i + 1][big - 1], n - 1, 0),
                    shift(&g[i - 1][big], n, 0),
                    shift(&b[i][big - 1], n, 1),
                ]);
                assert!(agree(&g[i][big], &rhs, bound - n), "k={k}, G_{i}, N={big}");
            }
        }
    }
}
