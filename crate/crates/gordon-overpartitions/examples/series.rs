//! Exact truncated q-series: the bilateral series, its Durfee multi-sum,
//! and the four product specializations.

use gordon_overpartitions::qseries::{d_series, e_series, product_side, ProductSide, Series};
use gordon_overpartitions::verify::{count_family, Family};

fn at_a_equals_one(s: &Series, q: usize) -> num_bigint::BigInt {
    s.apoly(q, 0).values().sum()
}

fn main() -> gordon_overpartitions::Result<()> {
    let (k, i, qmax) = (3, 2, 16);
    let e = e_series(k, i, qmax)?;
    let d = d_series(k, i, qmax)?;
    let counts = count_family(Family::B, k, i, qmax as u32)?;
    println!("coefficients at a = 1 for (k,i) = ({k},{i})");
    for q in 0..=qmax {
        println!(
            "  q^{q:<2} series {:>6}  multi-sum {:>6}  B-class count {:>6}",
            at_a_equals_one(&e, q),
            at_a_equals_one(&d, q),
            counts.total(q as u32)
        );
    }

    println!("\nthe a-refined coefficient of q^8: {}", e.to_json()[8]);

    let qmax = 30;
    for side in [ProductSide::Eq3, ProductSide::Eq4, ProductSide::Eq5, ProductSide::Eq6] {
        let (coef, a_exp, q_mul) = side.substitution();
        let spec = e_series(k, i, 2 * qmax)?.specialize(coef, a_exp, q_mul, qmax)?;
        let prod = product_side(side, k, i, qmax)?;
        let first: Vec<String> = (0..12).map(|q| prod.coeff(0, q).to_string()).collect();
        println!("{:<4} equal to q^{qmax}: {:<5}  product begins {}", side.name(), spec == prod, first.join(" "));
    }
    Ok(())
}
