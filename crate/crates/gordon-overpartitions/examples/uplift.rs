//! Peels a path into an uplift certificate and rebuilds it, printing every
//! intermediate path along with its relative heights.

use gordon_overpartitions::bijections::{uplift_inverse, uplift_observed, UpliftCertificate};
use gordon_overpartitions::paths::{major_index, relative_height_profile, relative_heights, LatticePath};

fn main() -> gordon_overpartitions::Result<()> {
    let (k, i) = (5, 2);
    let base = LatticePath::parse(3, "SE SE NE SE SE NE NE NE SE NE SE SE SE")?;
    let cert = UpliftCertificate { base, lambda: vec![5, 4, 3, 1], b: vec![2, 1, 1, 0], k, i };
    println!("base         {}   heights {:?}", cert.base, relative_heights(&cert.base));
    println!("lambda {:?}, b {:?}, weight gain {}", cert.lambda, cert.b, cert.weight_gain());

    let mut step = 0;
    let lifted = uplift_observed(&cert, |p| {
        step += 1;
        println!("move {step:>2}      {p}");
    })?;
    println!("uplifted     {lifted}");
    println!("heights      {:?}", relative_heights(&lifted));
    println!("profile      {:?}", relative_height_profile(&lifted, k));
    println!("major index  {} = {} + {}", major_index(&lifted), major_index(&cert.base), cert.weight_gain());

    let back = uplift_inverse(&lifted, k, i)?;
    println!("inverse recovers the certificate: {}", back == cert);
    Ok(())
}
