//! Canonical rational functions in `q`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{poly_gcd, QPoly, QPolyError};

/// A quotient `num / den` of polynomials in `q` in canonical form: the two
/// parts are coprime and `den` is monic. Two values are the same function
/// exactly when their fields are identical, so `==` is function equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRatFun {
    num: QPoly,
    den: QPoly,
}

impl QRatFun {
    /// Canonicalizes `num / den`.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, QPolyError> {
        if den.is_zero() {
            return Err(QPolyError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Ok(Self::normalize_lead(num, den))
    }

    /// Assembles a value whose parts are already coprime; only the leading
    /// coefficient of the denominator is normalized.
    pub(crate) fn from_coprime(num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        Self::normalize_lead(num, den)
    }

    fn normalize_lead(num: QPoly, den: QPoly) -> Self {
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            QRatFun { num, den }
        } else {
            let inv = lc.recip();
            QRatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        QRatFun {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRatFun {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QPoly::from_int(c))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    /// `q^e` for any integer `e`; negative powers land in the denominator.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(QPoly::q_pow(e as usize))
        } else {
            QRatFun {
                num: QPoly::one(),
                den: QPoly::q_pow(e.unsigned_abs() as usize),
            }
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self, QPolyError> {
        if self.is_zero() {
            return Err(QPolyError::ZeroDenominator);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        Self::from_coprime(self.num.pow(e), self.den.pow(e))
    }

    /// Integer power, negative exponents through the reciprocal.
    pub fn powi(&self, e: i64) -> Result<Self, QPolyError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        Ok(base.pow(e.unsigned_abs() as u32))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact value at `q0`.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational, QPolyError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(QPolyError::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// The function `q -> f(1/q)`, again in canonical form.
    pub fn substitute_reciprocal(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // p(1/q) = rev(p) / q^deg p after stripping low powers of q.
        let (nl, dl) = (self.num.low_order(), self.den.low_order());
        let num_rev = self.num.unshift(nl).reversed();
        let den_rev = self.den.unshift(dl).reversed();
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        // f(1/q) = num_rev * q^(dd - dn) / den_rev, and reversal preserves
        // coprimality once powers of q are stripped from both sides.
        let e = dd - dn;
        let (num, den) = if e >= 0 {
            (num_rev.shift(e as usize), den_rev)
        } else {
            (num_rev, den_rev.shift((-e) as usize))
        };
        Self::new(num, den).expect("reversed denominator is nonzero")
    }

    fn add_impl(&self, other: &QRatFun) -> QRatFun {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let g = poly_gcd(&self.den, &other.den).expect("nonzero denominators");
        if g.is_one() {
            let num = &(&self.num * &other.den) + &(&other.num * &self.den);
            return Self::from_coprime(num, &self.den * &other.den);
        }
        let ad = self.den.exact_div(&g);
        let bd = other.den.exact_div(&g);
        let t = &(&self.num * &bd) + &(&other.num * &ad);
        if t.is_zero() {
            return Self::zero();
        }
        // Only factors of g can still cancel.
        let g2 = poly_gcd(&t, &g).expect("nonzero");
        let num = t.exact_div(&g2);
        let den = &ad * &other.den.exact_div(&g2);
        Self::from_coprime(num, den)
    }

    fn mul_impl(&self, other: &QRatFun) -> QRatFun {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = poly_gcd(&self.num, &other.den).expect("nonzero");
        let g2 = poly_gcd(&other.num, &self.den).expect("nonzero");
        let num = &self.num.exact_div(&g1) * &other.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &other.den.exact_div(&g1);
        Self::from_coprime(num, den)
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, p: &QPoly) -> QRatFun {
        if self.is_zero() || p.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(p, &self.den).expect("nonzero");
        Self::from_coprime(&self.num * &p.exact_div(&g), self.den.exact_div(&g))
    }

    /// Checked division.
    pub fn checked_div(&self, other: &QRatFun) -> Result<QRatFun, QPolyError> {
        Ok(self.mul_impl(&other.recip()?))
    }
}

impl Add for &QRatFun {
    type Output = QRatFun;
    fn add(self, rhs: &QRatFun) -> QRatFun {
        self.add_impl(rhs)
    }
}

impl Sub for &QRatFun {
    type Output = QRatFun;
    fn sub(self, rhs: &QRatFun) -> QRatFun {
        self.add_impl(&-rhs)
    }
}

impl Mul for &QRatFun {
    type Output = QRatFun;
    fn mul(self, rhs: &QRatFun) -> QRatFun {
        self.mul_impl(rhs)
    }
}

impl Div for &QRatFun {
    type Output = QRatFun;
    /// Panics on division by the zero function; see [`QRatFun::checked_div`].
    fn div(self, rhs: &QRatFun) -> QRatFun {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

impl Neg for &QRatFun {
    type Output = QRatFun;
    fn neg(self) -> QRatFun {
        QRatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRatFun {
    type Output = QRatFun;
    fn neg(self) -> QRatFun {
        QRatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRatFun {
            type Output = QRatFun;
            fn $m(self, rhs: QRatFun) -> QRatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRatFun> for QRatFun {
            type Output = QRatFun;
            fn $m(self, rhs: &QRatFun) -> QRatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for QRatFun {
    fn sum<I: Iterator<Item = QRatFun>>(iter: I) -> Self {
        iter.fold(QRatFun::zero(), |acc, x| &acc + &x)
    }
}

impl From<QPoly> for QRatFun {
    fn from(p: QPoly) -> Self {
        QRatFun::from_poly(p)
    }
}

impl fmt::Display for QRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatFun({self})")
    }
}
