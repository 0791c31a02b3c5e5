//! Four-step lattice paths: peaks, major index, and the correspondence with
//! Frobenius symbols whose successive ranks lie in a window.

use gordon_overpartitions::bijections::{frobenius_to_path, path_to_frobenius};
use gordon_overpartitions::objects::successive_ranks;
use gordon_overpartitions::paths::{enumerate_paths, major_index, peaks, validate, LatticePath};

fn main() -> gordon_overpartitions::Result<()> {
    let (k, i) = (5, 3);
    let p = LatticePath::parse(2, "SE SE NE NE NE NE SE SE NE S SE NE NE SE SE SE E NE NE SE NE NE NE S SE SE SE")?;
    println!("path   {p}");
    println!("valid for (k,i) = ({k},{i}): {}", validate(&p, k, i));
    for q in peaks(&p) {
        println!("  peak at x={:<3} y={} with {} south steps to its left ({:?})", q.x, q.y, q.u, q.kind);
    }
    println!("major index {}", major_index(&p));

    let f = path_to_frobenius(&p, k, i)?;
    println!("\nsymbol {f}");
    println!("ranks  {:?}", successive_ranks(&f));
    println!("round trip restores the path: {}", frobenius_to_path(&f, k, i)? == p);

    println!("\npaths with major index 6 for (k,i) = (3,1):");
    for q in enumerate_paths(3, 1, 6) {
        println!("  {q}");
    }
    Ok(())
}
