//! Polynomial GCD over the rationals.
//!
//! Both inputs are reduced to primitive integer polynomials. The GCD is
//! first attempted with the heuristic evaluation/interpolation scheme
//! (integer GCD of values at a large point, then balanced base-ξ
//! reconstruction); a candidate is accepted only after it divides both
//! inputs exactly over the integers. When the heuristic gives up, a
//! primitive pseudo-remainder sequence finishes the job.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QPoly, QPolyError};

/// Heuristic attempts before falling back to the remainder sequence.
const HEU_ATTEMPTS: usize = 6;

/// Monic greatest common divisor of `a` and `b`.
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> Result<QPoly, QPolyError> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(QPolyError::GcdUndefined),
        (true, false) => return Ok(b.monic()),
        (false, true) => return Ok(a.monic()),
        _ => {}
    }
    if a.is_constant() || b.is_constant() {
        return Ok(QPoly::one());
    }
    // Powers of q split off cheaply and are common in this crate.
    let shift = a.low_order().min(b.low_order());
    let a0 = a.unshift(a.low_order());
    let b0 = b.unshift(b.low_order());
    let core = if a0.is_constant() || b0.is_constant() {
        QPoly::one()
    } else {
        let g = int_gcd_poly(a0.primitive_part(), b0.primitive_part());
        QPoly::from_integer_parts(g, &BigInt::one()).monic()
    };
    Ok(core.shift(shift))
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Divides out the content and fixes the sign so the leading coefficient is
/// positive. Trailing zeros are trimmed.
pub(crate) fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        return p;
    }
    let mut g = content(&p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    p
}

fn int_gcd_poly(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    if let Some(g) = heuristic_gcd(&a, &b) {
        return g;
    }
    prs_gcd(a, b)
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Balanced base-`xi` digits of `v`, i.e. the polynomial whose value at
/// `xi` is `v` with coefficients in `(-xi/2, xi/2]`.
fn interpolate(mut v: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi >> 1u32;
    let mut out = Vec::new();
    while !v.is_zero() {
        let mut d = v.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        v = (v - &d) / xi;
        out.push(d);
    }
    out
}

fn heuristic_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let bound = max_norm(a).min(max_norm(b));
    let mut xi: BigInt = bound * 2u32 + 29u32;
    let max_bits = 64 * 1024 * 8;
    for _ in 0..HEU_ATTEMPTS {
        let deg = a.len().max(b.len()) as u64;
        if xi.bits() * deg > max_bits {
            return None;
        }
        let va = eval_int(a, &xi);
        let vb = eval_int(b, &xi);
        let gamma = va.gcd(&vb);
        let cand = primitive(interpolate(gamma, &xi));
        if !cand.is_empty() && int_divides(&cand, a) && int_divides(&cand, b) {
            return Some(cand);
        }
        xi = (xi * 73794u32) / 27011u32;
    }
    None
}

/// Exact divisibility of `p` by the primitive `d` over the integers. By
/// Gauss's lemma this coincides with divisibility over the rationals.
pub(crate) fn int_divides(d: &[BigInt], p: &[BigInt]) -> bool {
    int_exact_quotient(p, d).is_some()
}

pub(crate) fn int_exact_quotient(p: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = d.len().checked_sub(1)?;
    if p.is_empty() {
        return Some(Vec::new());
    }
    if p.len() <= dd {
        return None;
    }
    let lc = &d[dd];
    let mut rem = p.to_vec();
    let mut quot = vec![BigInt::zero(); p.len() - dd];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + dd];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, dj) in d.iter().enumerate() {
            if !dj.is_zero() {
                rem[i + j] -= &c * dj;
            }
        }
        quot[i] = c;
    }
    if rem[..dd].iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

/// Pseudo-remainder of `a` by `b` (deg a >= deg b).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let top = r.pop().unwrap();
        let shift = r.len() - db;
        for c in r.iter_mut() {
            *c *= lc;
        }
        if !top.is_zero() {
            for (j, bj) in b[..db].iter().enumerate() {
                r[shift + j] -= &top * bj;
            }
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Primitive PRS: Euclid with each pseudo-remainder made primitive.
fn prs_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    primitive(a)
}

#[cfg(test)]
fn ints(c: &[i64]) -> Vec<BigInt> {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(c)
    }

    #[test]
    fn gcd_common_root() {
        assert_eq!(
            poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            p(&[-1, 1])
        );
    }

    #[test]
    fn gcd_coprime() {
        assert_eq!(poly_gcd(&p(&[0, 1]), &p(&[1, 1])).unwrap(), QPoly::one());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // 1 - q^4 and 1 - q^2 share 1 - q^2, normalized to q^2 - 1.
        let g = poly_gcd(&p(&[1, 0, 0, 0, -1]), &p(&[1, 0, -1])).unwrap();
        assert_eq!(g, p(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_both_zero_is_an_error() {
        assert_eq!(
            poly_gcd(&QPoly::zero(), &QPoly::zero()),
            Err(QPolyError::GcdUndefined)
        );
        assert_eq!(
            poly_gcd(&QPoly::zero(), &p(&[2, 4])).unwrap(),
            p(&[1, 2]).monic()
        );
    }

    #[test]
    fn gcd_extracts_q_powers() {
        let g = poly_gcd(&p(&[0, 0, 1, 1]), &p(&[0, 1, 0, 0, 1])).unwrap();
        // q^2(1+q) and q(1+q^3) = q(1+q)(1-q+q^2)
        assert_eq!(g, p(&[0, 1, 1]));
    }

    #[test]
    fn prs_and_heuristic_agree() {
        let a = int_poly_product(&[&[1, 1], &[1, 0, 1], &[3, -2, 5]]);
        let b = int_poly_product(&[&[1, 1], &[3, -2, 5], &[7, 0, 0, 1]]);
        let expected = primitive(int_poly_product(&[&[1, 1], &[3, -2, 5]]));
        assert_eq!(prs_gcd(a.clone(), b.clone()), expected);
        assert_eq!(heuristic_gcd(&a, &b), Some(expected));
    }

    #[test]
    fn exact_quotient_detects_remainders() {
        assert_eq!(
            int_exact_quotient(&ints(&[-1, 0, 1]), &ints(&[-1, 1])),
            Some(ints(&[1, 1]))
        );
        assert_eq!(int_exact_quotient(&ints(&[1, 0, 1]), &ints(&[-1, 1])), None);
        assert_eq!(int_exact_quotient(&ints(&[1, 2]), &ints(&[0, 2])), None);
    }

    fn int_poly_product(fs: &[&[i64]]) -> Vec<BigInt> {
        fs.iter().fold(ints(&[1]), |acc, f| {
            super::super::poly::int_poly_mul(&acc, &ints(f))
        })
    }
}
