//! Truncated n -> infinity limits with rigorous tail bounds.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use qharmonic::compositions::{dual, Composition};
use qharmonic::sums::{qzeta_truncated, truncated_limit, SumKind};
use qharmonic::verify::{check_identity, uchimura_sides, IdentityId, Params};

fn approx(x: &BigRational) -> f64 {
    x.to_f64().unwrap()
}

fn main() {
    let q0 = BigRational::new(1.into(), 2.into());
    let s: Composition = "2,1".parse().unwrap();
    let d = dual(&s).unwrap();
    for big_n in [5, 10, 20, 40] {
        let z = truncated_limit(SumKind::ZWeak, &s, &q0, big_n).unwrap();
        let a = truncated_limit(SumKind::AWeak, &d, &q0, big_n).unwrap();
        println!(
            "N={big_n:>2}  Z[{s}] ~ {:.15}  A[{d}] ~ {:.15}  tails {:.1e} {:.1e}",
            approx(&z.value),
            approx(&a.value),
            approx(&z.tail_bound),
            approx(&a.tail_bound)
        );
    }

    let (l, r) = uchimura_sides(&q0, 40).unwrap();
    println!(
        "alternating side ~ {:.15}, harmonic side ~ {:.15}",
        approx(&l.value),
        approx(&r.value)
    );
    let report = check_identity(IdentityId::UchimuraLimit, &Params::new()).unwrap();
    println!("{}", report.summary());

    let z = qzeta_truncated(&"2,1".parse().unwrap(), &q0, 30).unwrap();
    assert_eq!(z.series.value, z.via_strict);
    println!(
        "zeta[2,1; 1/2] ~ {:.15} (tail <= {:.1e})",
        approx(&z.series.value),
        approx(&z.series.tail_bound)
    );
}
