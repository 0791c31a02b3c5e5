//! Frobenius symbols: successive ranks, the hook map and the Durfee map,
//! with the intermediate rows the Durfee map builds along the way.

use gordon_overpartitions::bijections::{
    durfee_frobenius_inverse, durfee_frobenius_trace, frobenius_to_overpartition, overpartition_to_frobenius,
};
use gordon_overpartitions::objects::{generalized_durfee_size, successive_ranks, FrobeniusSymbol};

fn main() -> gordon_overpartitions::Result<()> {
    let f = FrobeniusSymbol::from_rows(&[7, 5, 4, 2, 0], &[(6, false), (4, true), (4, false), (3, false), (1, true)])?;
    println!("symbol            {f}  (weight {})", f.weight());
    println!("successive ranks  {:?}", successive_ranks(&f));

    let hooked = frobenius_to_overpartition(&f);
    println!("\nhook map          {hooked}");
    println!("and back          {}", overpartition_to_frobenius(&hooked));

    let t = durfee_frobenius_trace(&f);
    println!("\nDurfee map");
    println!("  beta            {:?}", t.beta);
    println!("  delta           {:?}", t.delta);
    println!("  alpha           {:?}", t.alpha);
    println!("  gamma           {}", t.gamma);
    println!("  result          {}", t.lambda);
    println!("  Durfee size     {} (symbol has {} columns)", generalized_durfee_size(&t.lambda), f.columns());
    println!("  inverse         {}", durfee_frobenius_inverse(&t.lambda));
    Ok(())
}
