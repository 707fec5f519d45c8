use num_rational::BigRational;

use qharmonic::compositions::{compositions_up_to, dual, Composition};
use qharmonic::qpoly::{q_integer, QPoly, QRatFun};
use qharmonic::sums::{eval_sum, eval_sum_brute, SumKind};
use qharmonic::verify::{
    check_identity, check_theorem1, compare_symbolic, sweep, IdentityId, Method, Params,
    SweepBounds, Verdict,
};

fn c(text: &str) -> Composition {
    text.parse().unwrap()
}

fn points() -> Vec<BigRational> {
    [(1, 2), (1, 3), (2, 7), (5, 11), (9, 10)]
        .iter()
        .map(|&(p, r)| BigRational::new(p.into(), r.into()))
        .collect()
}

#[test]
fn symbolic_holds_survive_pointwise_re_evaluation() {
    for s in compositions_up_to(4) {
        let d = dual(&s).unwrap();
        for n in 1..=5 {
            let r = check_theorem1(&s, n).unwrap();
            assert_eq!((r.verdict, r.method), (Verdict::Holds, Method::Symbolic));
            let z = eval_sum(SumKind::ZWeak, &s, n);
            let a = eval_sum(SumKind::AWeak, &d, n);
            for x in points() {
                assert_eq!(
                    z.eval_at(&x).unwrap(),
                    a.eval_at(&x).unwrap(),
                    "{s} n={n} q={x}"
                );
            }
        }
    }
}

#[test]
fn reflected_family_holds() {
    let b = SweepBounds {
        max_weight: 5,
        max_n: 5,
        ..Default::default()
    };
    for r in sweep(IdentityId::Theorem1, &b).unwrap() {
        assert!(r.holds());
        let s = c(&r.params["s"]);
        let n: usize = r.params["n"].parse().unwrap();
        assert!(check_theorem1(&dual(&s).unwrap(), n).unwrap().holds());
    }
}

#[test]
fn brute_force_oracle_agrees_beyond_the_acceptance_grid() {
    for s in ["1,1,1,1", "2,1,2", "3,3", "1,4", "0,2,1"] {
        let s = c(s);
        for kind in SumKind::ALL {
            for n in 0..=4 {
                assert_eq!(
                    eval_sum_brute(kind, &s, n).unwrap(),
                    eval_sum(kind, &s, n),
                    "{kind} {s} {n}"
                );
            }
        }
    }
}

#[test]
fn corrupting_one_coefficient_is_caught() {
    let s = c("2,1,1");
    let n = 4;
    let z = eval_sum(SumKind::ZWeak, &s, n);
    let a = eval_sum(SumKind::AWeak, &dual(&s).unwrap(), n);
    assert!(compare_symbolic(IdentityId::Theorem1, Default::default(), &z, &a).holds());
    let mut coeffs = z.num().coeffs().to_vec();
    let last = coeffs.len() - 1;
    coeffs[last] += BigRational::from_integer(1.into());
    let corrupted = QRatFun::new(QPoly::from_coeffs(coeffs), z.den().clone()).unwrap();
    let r = compare_symbolic(IdentityId::Theorem1, Default::default(), &corrupted, &a);
    assert_eq!(r.verdict, Verdict::Fails);
    let w = r.witness.unwrap();
    assert_eq!(w.lhs, corrupted.to_string());
    assert_eq!(w.rhs, a.to_string());
}

#[test]
fn worked_identities() {
    let george = check_identity(IdentityId::George, &Params::new().n(10)).unwrap();
    assert!(george.holds());
    let an01m = check_identity(IdentityId::An01m, &Params::new().n(5).m(3)).unwrap();
    assert!(an01m.holds());
    let direct = eval_sum(SumKind::AWeak, &c("0,1,1,1"), 5);
    assert_eq!(
        direct,
        QRatFun::from_poly(q_integer(5).pow(3)).recip().unwrap()
    );
    assert!(
        check_identity(IdentityId::Thm2StrictOnes, &Params::new().n(0).m(0))
            .unwrap()
            .holds()
    );
    for n in 1..=6 {
        assert!(check_identity(IdentityId::Qkarl, &Params::new().m(0).n(n))
            .unwrap()
            .holds());
    }
}

#[test]
fn weak_strict_expansion_as_stated_fails_for_q_not_one() {
    let r = check_identity(
        IdentityId::WeakStrictExpansion,
        &Params::new().s(c("1,2")).n(4),
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Fails);
    assert!(r.witness.is_some());
}

#[test]
fn examples_from_the_duality_theorem() {
    assert!(check_theorem1(&c("1,1,3,1"), 3).unwrap().holds());
    assert!(check_theorem1(&c("2,2"), 4).unwrap().holds());
    assert_eq!(dual(&c("1,1,3,1")).unwrap(), c("3,1,2"));
}
