//! The nested sum of (a - b q^k)/(c - z q^k) against its closed binomial form at rational points.

use num_rational::BigRational;
use qharmonic::verify::{check_fulas, check_fulas_specialization, fulas_campaign, FulasPoint};

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn main() {
    let point = FulasPoint {
        n: 4,
        m: 3,
        a: r(2, 1),
        b: r(-1, 3),
        c: r(5, 2),
        z: r(1, 7),
        q: r(2, 5),
    };
    println!("{}", check_fulas(&point).unwrap().summary());

    let pole = FulasPoint {
        c: r(2, 5),
        z: r(1, 1),
        ..point
    };
    println!("pole: {}", check_fulas(&pole).unwrap_err());

    println!(
        "{}",
        check_fulas_specialization(3, 2, r(1, 3)).unwrap().summary()
    );

    let reports = fulas_campaign(42, 25, 5, 5).unwrap();
    let holding = reports.iter().filter(|r| r.holds()).count();
    println!("random points: {holding}/{} hold", reports.len());
}
