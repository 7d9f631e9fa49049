//! Arbitrary-precision rational scalars and the number-theoretic primitives
//! built on them: factorials, binomials, Bernoulli numbers in both sign
//! conventions, Bernoulli polynomials and the Faulhaber evaluation of power
//! sums.
//!
//! Every value is exact. There is no floating-point mode anywhere in this
//! crate; equality of two [`Rational`]s is equality of the quantities they
//! denote.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Integer value of an integral rational.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power, with negative exponents meaning powers of the inverse.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Rational::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

impl fmt::Display for Rational {
    /// Prints `p/q`, or just `p` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim())
                .map_err(|_| Error::InvalidArgument(format!("not an integer: {t:?}")))
        };
        match s.split_once('/') {
            None => Ok(Rational::from_int(parse_int(s)?)),
            Some((p, q)) => {
                let denom = parse_int(q)?;
                if denom.is_zero() {
                    return Err(Error::InvalidArgument("zero denominator".into()));
                }
                Ok(Rational::new(parse_int(p)?, denom))
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_int(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(std::ops::$trait::$method(&self.0, &rhs.0))
            }
        }
        impl std::ops::$trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl std::ops::AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl std::ops::SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl std::ops::MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

static BERNOULLI_TABLE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number B_m in the convention B_1 = -1/2, computed from the
/// defining recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0 and memoized.
pub fn bernoulli_number(m: usize) -> Rational {
    let mut table = BERNOULLI_TABLE.lock().expect("bernoulli table poisoned");
    while table.len() <= m {
        let j = table.len();
        if j == 0 {
            table.push(Rational::one());
            continue;
        }
        if j >= 3 && j % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        let mut sum = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            sum += &(&Rational::from_int(binomial(j as u64 + 1, k as u64)) * b);
        }
        let value = -sum / Rational::from_int(j as u64 + 1);
        table.push(value);
    }
    table[m].clone()
}

/// Bernoulli number B_m^+ in the convention B_1^+ = +1/2; all other values
/// coincide with [`bernoulli_number`].
pub fn bernoulli_plus(m: usize) -> Rational {
    if m == 1 {
        Rational::new(BigInt::one(), BigInt::from(2))
    } else {
        bernoulli_number(m)
    }
}

/// Bernoulli polynomial B_m(x) = sum_k C(m,k) B_k x^{m-k}.
pub fn bernoulli_poly(m: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=m {
        let term = &Rational::from_int(binomial(m as u64, k as u64))
            * &bernoulli_number(k)
            * x.pow((m - k) as i64);
        acc += &term;
    }
    acc
}

/// Faulhaber evaluation (1/(2g)!) p_{2g}(1, ..., N) via the closed form
/// sum_{k=0}^{2g} (B_k^+ / k!) N^{2g+1-k} / (2g+1-k)!.
pub fn faulhaber(two_g: usize, n: u64) -> Rational {
    assert!(two_g >= 2 && two_g.is_multiple_of(2), "faulhaber needs an even exponent >= 2");
    let nr = Rational::from_int(n);
    let mut acc = Rational::zero();
    for k in 0..=two_g {
        let term = &bernoulli_plus(k) * nr.pow((two_g + 1 - k) as i64)
            / Rational::from_int(factorial(k as u64) * factorial((two_g + 1 - k) as u64));
        acc += &term;
    }
    acc
}

/// Rounds a rational that must be an integer down to a machine integer.
pub fn expect_i64(value: &Rational) -> Option<i64> {
    value.to_integer().and_then(|n| n.to_i64())
}
