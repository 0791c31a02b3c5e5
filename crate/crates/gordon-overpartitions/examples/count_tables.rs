//! Tallies the four families of objects by weight and marker statistic and
//! shows that their tables coincide.

use gordon_overpartitions::verify::{count_family, Family};

fn main() -> gordon_overpartitions::Result<()> {
    let (k, i, nmax) = (3, 2, 12);
    let families = [Family::B, Family::C, Family::D, Family::E];
    let tables =
        families.iter().map(|&f| count_family(f, k, i, nmax)).collect::<gordon_overpartitions::Result<Vec<_>>>()?;

    println!("totals by weight for (k,i) = ({k},{i})");
    println!("{:>3} {:>6} {:>6} {:>6} {:>6}", "n", "B", "C", "D", "E");
    for n in 0..=nmax {
        let row: Vec<String> = tables.iter().map(|t| format!("{:>6}", t.total(n))).collect();
        println!("{n:>3} {}", row.join(" "));
    }

    let reference = tables[0].by_weight_and_marker();
    for (f, t) in families.iter().zip(&tables).skip(1) {
        let same = t.by_weight_and_marker() == reference;
        println!("{f:?} agrees with B on every (n, j) cell: {same}");
    }
    println!("full (n, j, N) tables identical: {}", tables.windows(2).all(|w| w[0].cells == w[1].cells));
    Ok(())
}
