//! Evaluate the five kinds of nested sums symbolically, at q = 1, and at a rational point.
//!
//! cargo run --example eval_sums -- 2,1 4

use num_rational::BigRational;
use qharmonic::compositions::parse_composition;
use qharmonic::sums::{eval_q1, eval_sum, eval_sum_brute, SumKind};

fn main() {
    let mut args = std::env::args().skip(1);
    let s = parse_composition(&args.next().unwrap_or_else(|| "2,1".into())).expect("composition");
    let n: usize = args.next().map(|a| a.parse().expect("n")).unwrap_or(4);
    let q0 = BigRational::new(1.into(), 3.into());

    for kind in SumKind::ALL {
        let f = eval_sum(kind, &s, n);
        // The brute-force oracle enumerates every index tuple independently.
        assert_eq!(f, eval_sum_brute(kind, &s, n).unwrap());
        println!("{kind}_{n}[{s}] = {f}");
        println!(
            "    q=1: {}    q=1/3: {}",
            eval_q1(kind, &s, n).unwrap(),
            f.eval_at(&q0).unwrap()
        );
    }
}
