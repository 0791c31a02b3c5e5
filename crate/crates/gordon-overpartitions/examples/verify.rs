//! Runs a handful of identity checks and prints their JSON reports, then
//! shows what a report looks like when a count table is deliberately wrong.

use gordon_overpartitions::objects::canonical_json;
use gordon_overpartitions::qseries::ProductSide;
use gordon_overpartitions::verify::{
    check_moves, check_product, check_rank_roundtrips, verify_main, verify_main_with_window, Report,
};

fn show(r: &Report) {
    let mut r = r.clone();
    r.elapsed_ms = 0;
    println!("{}", canonical_json(&r));
}

fn main() -> gordon_overpartitions::Result<()> {
    show(&verify_main(3, 2, 14)?);
    show(&check_product(ProductSide::Eq5, 3, 1, 30)?);
    show(&check_rank_roundtrips(4, 2, 14)?);
    show(&check_moves(7, 2000)?);

    println!("\nwith the rank window narrowed, the first differing cell is reported:");
    show(&verify_main_with_window(3, 2, 10, (0, 2))?);
    Ok(())
}
