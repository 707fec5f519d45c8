use std::collections::HashSet;

use qharmonic::compositions::{
    coarsenings, compositions_of_weight, compositions_up_to, decode_word, dual, encode_word,
    theorem1_form, theorem1_params, word_dual, Composition,
};

#[test]
fn dual_is_an_involution_up_to_weight_10() {
    let all = compositions_up_to(10);
    assert_eq!(all.len(), (1 << 10) - 1);
    for s in &all {
        let d = dual(s).unwrap();
        assert_eq!(dual(&d).unwrap(), *s);
        assert_eq!(d.weight(), s.weight());
        let w = encode_word(s).unwrap();
        assert_eq!(decode_word(&w).unwrap(), *s);
        assert_eq!(word_dual(&w).unwrap(), encode_word(&d).unwrap());
    }
}

#[test]
fn dual_permutes_each_weight_class() {
    for w in 1..=10 {
        let class = compositions_of_weight(w);
        assert_eq!(class.len(), 1 << (w - 1));
        let image: HashSet<Composition> = class.iter().map(|s| dual(s).unwrap()).collect();
        let original: HashSet<Composition> = class.into_iter().collect();
        assert_eq!(image, original);
    }
}

#[test]
fn parameter_form_is_a_bijection_up_to_weight_6() {
    let mut seen = HashSet::new();
    for s in compositions_up_to(6) {
        let (a, b) = theorem1_params(&s).unwrap();
        assert!(seen.insert((a.clone(), b.clone())));
        let (left, right) = theorem1_form(&a, &b).unwrap();
        assert_eq!(left, s);
        assert_eq!(right, dual(&s).unwrap());
    }
    // Every (a, b) with r <= 3 and entries <= 3 gives a dual pair.
    let mut count = 0;
    for r in 1..=3usize {
        let total = 3usize.pow(2 * r as u32);
        for code in 0..total {
            let digits: Vec<u32> = (0..2 * r)
                .map(|i| (code / 3usize.pow(i as u32) % 3) as u32 + 1)
                .collect();
            let (a, b) = digits.split_at(r);
            let (left, right) = theorem1_form(a, b).unwrap();
            assert_eq!(right, dual(&left).unwrap());
            count += 1;
        }
    }
    assert_eq!(count, 9 + 81 + 729);
}

#[test]
fn coarsenings_are_distinct_and_weight_preserving() {
    for s in compositions_up_to(7) {
        let cs = coarsenings(&s).unwrap();
        assert_eq!(cs.len(), 1 << (s.len() - 1));
        assert!(cs.iter().all(|t| t.weight() == s.weight()));
        let set: HashSet<_> = cs.iter().collect();
        assert_eq!(set.len(), cs.len());
        assert_eq!(cs[0], s);
        assert_eq!(cs.last().unwrap().len(), 1);
    }
}
