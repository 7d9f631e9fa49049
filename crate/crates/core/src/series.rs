//! Truncated formal power series over exact rationals.
//!
//! [`Series1`] is a dense univariate series truncated at an explicit cap;
//! [`SeriesN`] is a sparse multivariate series with a per-variable degree cap.
//! Truncation caps are always explicit: every generating-series identity in
//! this crate dictates its own order, so there is no global default.
//!
//! The only transcendental function provided is the hyperbolic kernel
//! `S(x) = sinh(x/2)/(x/2)` that powers all the generating series here.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};

/// Univariate power series with exact coefficients for degrees `0..=cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series1 {
    coeffs: Vec<Rational>,
}

impl Series1 {
    /// The zero series truncated at `cap`.
    pub fn zero(cap: usize) -> Self {
        Series1 { coeffs: vec![Rational::zero(); cap + 1] }
    }

    /// The constant series 1 truncated at `cap`.
    pub fn one(cap: usize) -> Self {
        let mut s = Series1::zero(cap);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Builds a series from coefficients indexed by degree; the cap is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Series1 { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact coefficient of `t^degree`; degrees above the cap are an error,
    /// never silently zero.
    pub fn coeff(&self, degree: usize) -> Result<&Rational> {
        self.coeffs
            .get(degree)
            .ok_or(Error::DegreeAboveCap { degree, cap: self.cap() })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Product truncated at the smaller of the two caps.
    pub fn mul(&self, other: &Series1) -> Series1 {
        let cap = self.cap().min(other.cap());
        let mut out = Series1::zero(cap);
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }

    /// Integer power by repeated squaring, preserving the cap.
    pub fn pow(&self, mut e: u32) -> Series1 {
        let mut acc = Series1::one(self.cap());
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Multiplicative inverse through the same cap.
    pub fn invert(&self) -> Result<Series1> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let c0_inv = c0.recip();
        let mut out = Series1::zero(self.cap());
        out.coeffs[0] = c0_inv.clone();
        for m in 1..=self.cap() {
            let mut sum = Rational::zero();
            for j in 0..m {
                let a = &self.coeffs[m - j];
                if a.is_zero() || out.coeffs[j].is_zero() {
                    continue;
                }
                sum += &(&out.coeffs[j] * a);
            }
            out.coeffs[m] = -(sum) * &c0_inv;
        }
        Ok(out)
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, factor: &Rational) -> Series1 {
        Series1 { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Shifts the series by `t^k` (degrees falling above the cap are dropped).
    pub fn shift(&self, k: usize) -> Series1 {
        let mut out = Series1::zero(self.cap());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= self.cap() {
                out.coeffs[i + k] = c.clone();
            }
        }
        out
    }
}

/// Expansion of the hyperbolic kernel S(scale * t) = sinh(scale*t/2)/(scale*t/2)
/// through degree `cap`: the coefficient of t^{2k} is scale^{2k} / (4^k (2k+1)!)
/// and all odd coefficients vanish.
pub fn s_kernel(scale: &Rational, cap: usize) -> Series1 {
    let mut out = Series1::zero(cap);
    let four = Rational::from_int(4);
    let mut k = 0usize;
    while 2 * k <= cap {
        let denom = four.pow(k as i64) * Rational::from_int(factorial(2 * k as u64 + 1));
        out.coeffs[2 * k] = scale.pow(2 * k as i64) / denom;
        k += 1;
    }
    out
}

/// Sparse multivariate series with per-variable degree caps. The variable
/// count is fixed at construction; exponent keys always have that length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesN {
    caps: Vec<u32>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SeriesN {
    pub fn one(caps: Vec<u32>) -> Self {
        let n = caps.len();
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; n], Rational::one());
        SeriesN { caps, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.caps.len()
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    fn insert(&mut self, exps: Vec<u32>, value: Rational) {
        if value.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += &value;
        if slot.is_zero() {
            // keep the map sparse
            let key: Vec<u32> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry just created");
            self.terms.remove(&key);
        }
    }

    /// Product of two series over the same variables, truncated by the caps.
    pub fn mul(&self, other: &SeriesN) -> SeriesN {
        assert_eq!(self.caps, other.caps, "variable mismatch in SeriesN::mul");
        let mut out = SeriesN { caps: self.caps.clone(), terms: BTreeMap::new() };
        for (ea, va) in &self.terms {
            for (eb, vb) in &other.terms {
                let mut exps = Vec::with_capacity(ea.len());
                let mut ok = true;
                for (i, (&x, &y)) in ea.iter().zip(eb).enumerate() {
                    let e = x + y;
                    if e > self.caps[i] {
                        ok = false;
                        break;
                    }
                    exps.push(e);
                }
                if ok {
                    out.insert(exps, va * vb);
                }
            }
        }
        out
    }

    /// Multiplies by a univariate series substituted into variable `var`.
    pub fn mul_univariate(&self, var: usize, f: &Series1) -> SeriesN {
        let mut out = SeriesN { caps: self.caps.clone(), terms: BTreeMap::new() };
        for (exps, v) in &self.terms {
            for (deg, c) in f.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = exps[var] + deg as u32;
                if e > self.caps[var] {
                    break;
                }
                let mut key = exps.clone();
                key[var] = e;
                out.insert(key, v * c);
            }
        }
        out
    }

    /// Multiplies by `f(z_1 + ... + z_b)`, distributing each power of the
    /// variable sum over exponent vectors with multinomial weights and
    /// applying the per-variable caps during the expansion.
    pub fn mul_sum_substitution(&self, f: &Series1) -> SeriesN {
        let expanded = SeriesN::from_sum_substitution(f, self.caps.clone());
        self.mul(&expanded)
    }

    /// Expands `f(z_1 + ... + z_b)` as a [`SeriesN`] with the given caps.
    pub fn from_sum_substitution(f: &Series1, caps: Vec<u32>) -> SeriesN {
        let b = caps.len();
        let mut out = SeriesN { caps, terms: BTreeMap::new() };
        for (deg, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = deg as u32;
            let m_fact = Rational::from_int(factorial(m as u64));
            // all exponent vectors with sum m within the caps
            let mut exps = vec![0u32; b];
            distribute(&mut exps, 0, m, &out.caps.clone(), &mut |e| {
                let mut weight = m_fact.clone();
                for &x in e {
                    weight = weight / Rational::from_int(factorial(x as u64));
                }
                out.insert(e.to_vec(), c * &weight);
            });
        }
        out
    }

    /// Exact coefficient of the requested monomial; exponents above the caps
    /// are an error, never silently zero.
    pub fn multi_extract(&self, exps: &[u32]) -> Result<Rational> {
        assert_eq!(exps.len(), self.num_vars(), "exponent vector length mismatch");
        for (i, (&e, &cap)) in exps.iter().zip(&self.caps).enumerate() {
            if e > cap {
                return Err(Error::DegreeAboveCap { degree: e as usize, cap: self.caps[i] as usize });
            }
        }
        Ok(self.terms.get(exps).cloned().unwrap_or_else(Rational::zero))
    }
}

fn distribute(exps: &mut [u32], i: usize, left: u32, caps: &[u32], emit: &mut impl FnMut(&[u32])) {
    if i + 1 == exps.len() {
        if left <= caps[i] {
            exps[i] = left;
            emit(exps);
        }
        return;
    }
    for e in 0..=left.min(caps[i]) {
        exps[i] = e;
        distribute(exps, i + 1, left - e, caps, emit);
    }
}
