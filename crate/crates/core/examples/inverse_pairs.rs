//! Inverse pair relations: push a sequence through the first relation, confirm the second,
//! and watch the duality theorem appear after q -> 1/q.

use qharmonic::compositions::Composition;
use qharmonic::verify::{
    check_prodinger_equivalence, check_prodinger_theorem1, prodinger_campaign, prodinger_forward,
    random_ratfun, seeded_rng, theorem1_sequences,
};

fn main() {
    let mut rng = seeded_rng(7);
    let alpha: Vec<_> = (0..=3).map(|_| random_ratfun(&mut rng)).collect();
    for (k, b) in prodinger_forward(&alpha, 3).unwrap().iter().enumerate() {
        println!("beta_{k} = {b}");
    }
    println!(
        "{}",
        check_prodinger_equivalence(&alpha, 3).unwrap().summary()
    );

    let s: Composition = "2".parse().unwrap();
    let (a, b) = theorem1_sequences(&s, 3).unwrap();
    println!(
        "alpha = [{}]",
        a.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "beta  = [{}]",
        b.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("{}", check_prodinger_theorem1(&s, 4).unwrap().summary());

    let campaign = prodinger_campaign(1, 20).unwrap();
    let holding = campaign.iter().filter(|r| r.holds()).count();
    println!("random sequences: {holding}/{} hold", campaign.len());
}
