//! Lists the overpartitions of a small weight, marks which of them satisfy
//! the multiplicity condition, and prints one of them as canonical JSON.
//!
//! ```text
//! cargo run --example enumerate -- 5 3 2
//! ```

use gordon_overpartitions::objects::{canonical_json, enumerate_overpartitions, in_b_class};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let n = args.first().copied().unwrap_or(5) as u32;
    let k = args.get(1).copied().unwrap_or(3);
    let i = args.get(2).copied().unwrap_or(2);

    let all = enumerate_overpartitions(n);
    println!("{} overpartitions of {n}; members of the (k,i)=({k},{i}) class are starred", all.len());
    for op in &all {
        let star = if in_b_class(op, k, i) { "*" } else { " " };
        println!("{star} {op:<24} {} overlined, {} parts", op.overlined_count(), op.len());
    }
    if let Some(last) = all.last() {
        println!("\n{}", canonical_json(last));
    }
}
