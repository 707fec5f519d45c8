//! Polynomials and rational functions in q, Gaussian binomials, q-shifted powers.

use num_rational::BigRational;
use qharmonic::qpoly::{
    q_binomial, q_factorial, q_integer, q_shifted_power, QBinomialMethod, QPoly, QRatFun,
};

fn main() {
    for n in 0..=5 {
        let row: Vec<String> = (0..=n)
            .map(|k| q_binomial(n, k, QBinomialMethod::PascalSecond).to_string())
            .collect();
        println!("[{n}, k]: {}", row.join(" | "));
    }

    // [6,3] (q;q)_3 (q;q)_3 = (q;q)_6
    let lhs = &(&q_binomial(6, 3, QBinomialMethod::Product) * &q_factorial(3)) * &q_factorial(3);
    assert_eq!(lhs, q_factorial(6));

    let one = BigRational::from_integer(1.into());
    println!("(1 + q)_q^3 = {}", q_shifted_power(&one, &one, 3));

    // Canonical form: common factors cancel and the denominator is monic.
    let f = QRatFun::new(
        QPoly::from_int_coeffs(&[0, 2, 2]),
        QPoly::from_int_coeffs(&[2, 2]),
    )
    .unwrap();
    println!("(2q + 2q^2)/(2 + 2q) = {f}");

    let g = &QRatFun::from_poly(q_integer(3)) / &QRatFun::from_poly(q_integer(2));
    let h = &g + &QRatFun::q_pow(-1);
    println!("[3]/[2] + 1/q = {h}");
    println!(
        "at q = 1/2: {}",
        h.eval_at(&BigRational::new(1.into(), 2.into())).unwrap()
    );
    println!("with q -> 1/q: {}", h.substitute_reciprocal());
}
