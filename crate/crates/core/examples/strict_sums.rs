//! Strict sums: the sign identity for strings of ones, and how weak sums expand into strict ones.

use qharmonic::compositions::{coarsenings, Composition};
use qharmonic::qpoly::QRatFun;
use qharmonic::sums::{eval_q1, eval_sum, SumKind};
use qharmonic::verify::{check_identity, strict_expansion_corrected, IdentityId, Params};

fn main() {
    for m in 0..=4 {
        let r = check_identity(IdentityId::Thm2StrictOnes, &Params::new().m(m).n(6)).unwrap();
        println!("{}", r.summary());
    }

    let s: Composition = "1,2".parse().unwrap();
    let n = 3;
    let weak = eval_sum(SumKind::ZWeak, &s, n);
    let naive: QRatFun = coarsenings(&s)
        .unwrap()
        .iter()
        .map(|t| eval_sum(SumKind::ZStrict, t, n))
        .sum();
    println!("Z_{n}[{s}]                    = {weak}");
    println!("Z>_{n}[1,2] + Z>_{n}[3]         = {naive}");

    // At q = 1 merging equal indices just adds exponents.
    let mut at_one = eval_q1(SumKind::ZStrict, &"1,2".parse().unwrap(), n).unwrap();
    at_one += eval_q1(SumKind::ZStrict, &"3".parse().unwrap(), n).unwrap();
    assert_eq!(at_one, eval_q1(SumKind::ZWeak, &s, n).unwrap());
    println!("at q = 1 both are {at_one}");

    // For general q the diagonal term is q^{2k}/[k]^3 = q^k/[k]^3 + (q-1) q^k/[k]^2.
    let corrected = strict_expansion_corrected(&s, n).unwrap();
    assert_eq!(corrected, weak);
    println!("Z>_{n}[1,2] + Z>_{n}[3] + (q-1) Z>_{n}[2] = {corrected}");
}
