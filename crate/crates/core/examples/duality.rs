//! The duality involution on compositions, its word form, and the (a, b) parameters.

use qharmonic::compositions::{
    alpha, coarsenings, dual, encode_word, theorem1_form, theorem1_params, word_dual, Composition,
};
use qharmonic::sums::{eval_sum, SumKind};

fn main() {
    for text in ["2,2", "1,1,3,1", "4", "1,1,1"] {
        let s: Composition = text.parse().unwrap();
        let d = dual(&s).unwrap();
        let w = encode_word(&s).unwrap();
        println!("{s:>8} -> {d:<8} word {w} -> {}", word_dual(&w).unwrap());
        println!("         partial sums {:?}", alpha(&s).unwrap());
        let (a, b) = theorem1_params(&s).unwrap();
        assert_eq!(theorem1_form(&a, &b).unwrap(), (s.clone(), d.clone()));
        println!("         a = {a:?}, b = {b:?}");
        assert_eq!(
            eval_sum(SumKind::ZWeak, &s, 4),
            eval_sum(SumKind::AWeak, &d, 4)
        );
    }

    let s: Composition = "1,2,3".parse().unwrap();
    let all: Vec<String> = coarsenings(&s)
        .unwrap()
        .iter()
        .map(|t| format!("({t})"))
        .collect();
    println!("coarsenings of ({s}): {}", all.join(" "));
}
