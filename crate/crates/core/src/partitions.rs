//! Integer partitions, conjugacy-class sizes in symmetric groups, and the
//! elementary/power-sum symmetric function evaluations used by the weighted
//! psi-class formulas.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};

/// A partition: weakly decreasing positive parts. The empty partition (of 0)
/// is allowed; it shows up as the profile of an empty cover component.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, sorting the parts into weakly decreasing order.
    /// Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-part partition `(d)`.
    pub fn single(d: u32) -> Self {
        assert!(d > 0);
        Partition { parts: vec![d] }
    }

    /// The partition `(q, q, ..., q)` with `count` parts.
    pub fn uniform(q: u32, count: usize) -> Self {
        assert!(q > 0);
        Partition { parts: vec![q; count] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Size d = sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Length n = number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicities of the distinct part values, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// |Aut| of the partition seen as a tuple: the product of the factorials
    /// of the part multiplicities.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m as u64))
            .product()
    }

    /// Number of permutations in S_d with this cycle type:
    /// d! / (prod parts * prod multiplicities!).
    pub fn class_size(&self) -> BigInt {
        let mut z = BigInt::one();
        for &p in &self.parts {
            z *= p;
        }
        z *= self.aut_order();
        factorial(self.size()) / z
    }

    /// Parts as exact rationals, for symmetric-function evaluations.
    pub fn parts_as_rationals(&self) -> Vec<Rational> {
        self.parts.iter().map(|&p| Rational::from(p)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated list of positive integers, e.g. `3,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty part list".into()));
        }
        Partition::new(parts)
    }
}

/// All partitions of `d`, each exactly once, in reverse-lexicographic order:
/// (d), (d-1,1), ..., (1,...,1).
pub fn all_partitions(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let mut p = max_part.min(remaining);
        while p >= 1 {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    rec(d, d, &mut current, &mut out);
    out
}

/// Number of partitions of `d`.
pub fn partition_count(d: u32) -> usize {
    all_partitions(d).len()
}

/// Elementary symmetric polynomial e_j of the given values; e_0 = 1 and
/// e_j = 0 for j beyond the number of values.
pub fn elementary_symmetric(j: usize, values: &[Rational]) -> Rational {
    if j > values.len() {
        return Rational::zero();
    }
    // incremental product (1 + v_i X), keeping degrees <= j
    let mut e = vec![Rational::zero(); j + 1];
    e[0] = Rational::one();
    for v in values {
        for k in (1..=j).rev() {
            let bump = &e[k - 1] * v;
            e[k] += &bump;
        }
    }
    e[j].clone()
}

/// Power sum p_k of the given values; p_0 counts the values.
pub fn power_sum(k: usize, values: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for v in values {
        acc += &v.pow(k as i64);
    }
    acc
}
