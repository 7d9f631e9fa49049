//! Exact evaluation of the intersection-theoretic quantities used by the
//! verification suites: psi-class integrals in genus zero and one, the
//! Witten-Kontsevich (DVV) recursion, linear Hodge integrals through the
//! hyperbolic-kernel generating series, degree-one Chiodo-class coefficient
//! data, and closed generating series for several families of Chiodo
//! integrals.
//!
//! Every "integral" here is an exact rational; no cohomology-ring object
//! model is built because each implemented formula is already scalar-valued.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli_poly, binomial, factorial, Rational};
use crate::partitions::{elementary_symmetric, power_sum, Partition};
use crate::series::{s_kernel, Series1, SeriesN};

/// psi-class intersection number on the genus-zero moduli space:
/// the multinomial (n-3)! / prod a_i! when the exponents sum to n-3,
/// and zero otherwise.
pub fn psi_genus0(exponents: &[u32]) -> Rational {
    let n = exponents.len();
    assert!(n >= 3, "genus-zero psi integrals need n >= 3 marked points");
    let total: u32 = exponents.iter().sum();
    if total as usize != n - 3 {
        return Rational::zero();
    }
    let mut denom = BigInt::from(1);
    for &a in exponents {
        denom *= factorial(a as u64);
    }
    Rational::new(factorial((n - 3) as u64), denom)
}

/// Memoized Witten-Kontsevich recursion for psi-class intersection numbers
/// in arbitrary genus, normalized by the genus-zero three-point value 1 and
/// the one-point genus-one value 1/24.
///
/// Callers own their tables, so concurrent use means one instance per thread.
#[derive(Default)]
pub struct PsiIntersections {
    memo: HashMap<(u32, Vec<u32>), Rational>,
}

fn double_factorial_odd(n: i64) -> BigInt {
    // (2k+1)!! with the convention (-1)!! = 1
    if n <= 0 {
        return BigInt::from(1);
    }
    let mut acc = BigInt::from(1);
    let mut k = n;
    while k > 0 {
        acc *= k;
        k -= 2;
    }
    acc
}

impl PsiIntersections {
    pub fn new() -> Self {
        Self::default()
    }

    /// The intersection number of psi_1^{k_1} ... psi_n^{k_n} in genus `g`.
    /// Zero whenever the dimension constraint sum k_i = 3g - 3 + n fails.
    pub fn value(&mut self, g: u32, exponents: &[u32]) -> Rational {
        let mut key: Vec<u32> = exponents.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.eval(g, key)
    }

    fn eval(&mut self, g: u32, key: Vec<u32>) -> Rational {
        let n = key.len();
        if n == 0 {
            return Rational::zero();
        }
        let sum: u32 = key.iter().sum();
        if sum as i64 != 3 * g as i64 + n as i64 - 3 {
            return Rational::zero();
        }
        if g == 0 && n < 3 {
            return Rational::zero();
        }
        if g == 0 && n == 3 {
            return Rational::one(); // tau_0^3
        }
        if g == 1 && n == 1 {
            return Rational::new(BigInt::from(1), BigInt::from(24)); // base: psi on the one-point genus-one space
        }
        if let Some(v) = self.memo.get(&(g, key.clone())) {
            return v.clone();
        }

        let k1 = key[0];
        let rest: Vec<u32> = key[1..].to_vec();
        let value = if k1 == 0 {
            // string equation: all exponents are zero here only in the base
            // cases, so some entry of `rest` is positive
            let mut acc = Rational::zero();
            for j in 0..rest.len() {
                if rest[j] == 0 {
                    continue;
                }
                let mut next = rest.clone();
                next[j] -= 1;
                acc += &self.value(g, &next);
            }
            acc
        } else {
            // DVV recursion on the largest exponent
            let mut lhs = Rational::zero();
            for j in 0..rest.len() {
                let kj = rest[j];
                let coeff = Rational::new(
                    double_factorial_odd(2 * (k1 as i64 + kj as i64) - 1),
                    double_factorial_odd(2 * kj as i64 - 1),
                );
                let mut next: Vec<u32> = Vec::with_capacity(rest.len());
                next.extend(rest.iter().take(j));
                next.extend(rest.iter().skip(j + 1));
                next.push(k1 + kj - 1);
                lhs += &(&coeff * &self.value(g, &next));
            }
            if k1 >= 2 {
                let half = Rational::new(BigInt::from(1), BigInt::from(2));
                for a in 0..=(k1 - 2) {
                    let b = k1 - 2 - a;
                    let weight = Rational::from_int(
                        double_factorial_odd(2 * a as i64 + 1) * double_factorial_odd(2 * b as i64 + 1),
                    );
                    // non-separating
                    if g >= 1 {
                        let mut next = rest.clone();
                        next.push(a);
                        next.push(b);
                        lhs += &(&half * &weight * &self.value(g - 1, &next));
                    }
                    // separating
                    let m = rest.len();
                    for mask in 0..(1u32 << m) {
                        let mut left: Vec<u32> = Vec::new();
                        let mut right: Vec<u32> = Vec::new();
                        for (i, &kv) in rest.iter().enumerate() {
                            if mask >> i & 1 == 1 {
                                left.push(kv);
                            } else {
                                right.push(kv);
                            }
                        }
                        left.push(a);
                        right.push(b);
                        for g1 in 0..=g {
                            let vl = self.value(g1, &left);
                            if vl.is_zero() {
                                continue;
                            }
                            let vr = self.value(g - g1, &right);
                            if vr.is_zero() {
                                continue;
                            }
                            lhs += &(&half * &weight * &vl * &vr);
                        }
                    }
                }
            }
            lhs / Rational::from_int(double_factorial_odd(2 * k1 as i64 + 1))
        };
        self.memo.insert((g, key), value.clone());
        value
    }
}

/// One-shot DVV evaluation.
pub fn psi_dvv(g: u32, exponents: &[u32]) -> Rational {
    PsiIntersections::new().value(g, exponents)
}

/// Weighted genus-one psi integral of 1 / prod (1 - w_i psi_i):
/// (1/24) [ d^n - sum_{j=2}^{n} (j-2)! d^{n-j} e_j(w) ] with d = sum w_i.
pub fn genus1_weighted(weights: &[Rational]) -> Rational {
    let n = weights.len();
    assert!(n >= 1);
    let d: Rational = weights.iter().fold(Rational::zero(), |acc, w| acc + w);
    let mut bracket = d.pow(n as i64);
    for j in 2..=n {
        let term = &Rational::from_int(factorial(j as u64 - 2))
            * &d.pow((n - j) as i64)
            * &elementary_symmetric(j, weights);
        bracket -= &term;
    }
    bracket / Rational::from(24u32)
}

/// Unstable weighted psi integrals: 1/x^2 for one point, 1/(x+y) for two.
pub fn unstable_psi(weights: &[Rational]) -> Result<Rational> {
    match weights {
        [x] => Ok(x.pow(-2)),
        [x, y] => {
            let sum = x + y;
            if sum.is_zero() {
                return Err(Error::InvalidArgument("two-point convention needs x + y != 0".into()));
            }
            Ok(sum.recip())
        }
        _ => Err(Error::UnstableSignature(weights.len())),
    }
}

/// Linear Hodge integral int lambda-alternating / (1 - d psi) over the
/// one-point space: (1/d^2) [t^{2g}] S(dt)^{d-1}. For g = 0 this reduces to
/// the unstable convention 1/d^2.
pub fn linear_hodge(g: u32, d: u32) -> Rational {
    assert!(d >= 1);
    let cap = 2 * g as usize;
    let series = s_kernel(&Rational::from(d), cap).pow(d - 1);
    let coeff = series.coeff(cap).expect("within cap").clone();
    coeff / Rational::from(d).pow(2)
}

/// Identifies a (scaled) Chiodo class: order r, twist s, marked-point
/// residues taken modulo r in the window 1..=r, and the degree scaling x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiodoSpec {
    r: u32,
    s: u32,
    residues: Vec<u32>,
    x: Rational,
}

impl ChiodoSpec {
    /// `residues` are canonicalized modulo `r` into 1..=r, so `-1` may be
    /// given as `r - 1` and a residue divisible by r as `r`.
    pub fn new(r: u32, s: u32, residues: Vec<i64>, x: Rational) -> Result<Self> {
        if r == 0 || s == 0 || s > r {
            return Err(Error::InvalidArgument("need 1 <= s <= r".into()));
        }
        if x.is_zero() {
            return Err(Error::InvalidArgument("the scaling x must be nonzero".into()));
        }
        let canon: Vec<u32> = residues
            .iter()
            .map(|&a| {
                let m = a.rem_euclid(r as i64) as u32;
                if m == 0 {
                    r
                } else {
                    m
                }
            })
            .collect();
        Ok(ChiodoSpec { r, s, residues: canon, x })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.residues.len()
    }

    /// Existence condition a_1 + ... + a_n = (2g - 2 + n) s  (mod r).
    pub fn existence_holds(&self, g: u32) -> bool {
        let n = self.residues.len() as i64;
        let lhs: i64 = self.residues.iter().map(|&a| a as i64).sum();
        let rhs = (2 * g as i64 - 2 + n) * self.s as i64;
        (lhs - rhs).rem_euclid(self.r as i64) == 0
    }
}

/// Degree-one coefficient data of a scaled Chiodo class, linear in the
/// scaling x: the kappa_1 coefficient x B_2(s/r)/2, the psi_i coefficients
/// -x B_2(a_i/r)/2 and the boundary coefficients x (r/2) B_2(a/r)/2 for
/// a = 0..r-1. The degree-one part of the scaled class is the *negative* of
/// this data paired with (kappa_1, psi_i, j_a), matching the sign (-x)^k (k-1)!
/// at k = 1 in the exponential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree1ChiodoData {
    pub kappa1_coeff: Rational,
    pub psi_coeffs: Vec<Rational>,
    pub boundary_coeffs: Vec<Rational>,
}

/// Degree-one Chiodo data for the given spec on the genus-g, n-point space.
pub fn chiodo_ch1(spec: &ChiodoSpec, g: u32) -> Result<Degree1ChiodoData> {
    if !spec.existence_holds(g) {
        return Err(Error::ExistenceCondition);
    }
    let r = Rational::from(spec.r);
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let b2 = |num: u32| bernoulli_poly(2, &(Rational::from(num) / &r));
    let kappa1_coeff = spec.x() * &half * b2(spec.s);
    let psi_coeffs = spec
        .residues
        .iter()
        .map(|&a| -(spec.x() * &half * b2(a)))
        .collect();
    let boundary_coeffs = (0..spec.r)
        .map(|a| spec.x() * &half * &r * &half * b2(a))
        .collect();
    Ok(Degree1ChiodoData { kappa1_coeff, psi_coeffs, boundary_coeffs })
}

/// Riemann-Roch rank ((2g - 2 + n)s - sum a_i)/r - g + 1 of the twisted
/// r-th-root bundle; a non-integral value signals inconsistent residues.
pub fn rr_rank(g: u32, spec: &ChiodoSpec) -> Result<i64> {
    let n = spec.residues.len() as i64;
    let total: i64 = spec.residues.iter().map(|&a| a as i64).sum();
    let numerator = (2 * g as i64 - 2 + n) * spec.s as i64 - total;
    if numerator.rem_euclid(spec.r as i64) != 0 {
        return Err(Error::NonIntegralRank);
    }
    Ok(numerator / spec.r as i64 - g as i64 + 1)
}

/// Genus-zero right side of the one-part comparison: the degree-zero Chiodo
/// class contributes 1, the pushforward contributes 1/d, and the weighted
/// psi integral is the multinomial sum over exponent vectors. The sum is
/// walked with an incrementally maintained multinomial weight.
pub fn chiodo_g0_one_part_rhs(mu: &Partition) -> Result<Rational> {
    let n = mu.len();
    if n < 3 {
        return Err(Error::UnstableSignature(n));
    }
    let d = mu.size();
    let parts: Vec<BigInt> = mu.parts().iter().map(|&p| BigInt::from(p)).collect();
    let mut total = BigInt::zero();
    // assign exponents slot by slot; `weight` carries the running product
    // multinomial(assigned) * prod mu_i^{a_i}
    fn rec(
        parts: &[BigInt],
        i: usize,
        left: u32,
        weight: &BigInt,
        total: &mut BigInt,
    ) {
        if i + 1 == parts.len() {
            *total += weight * parts[i].pow(left);
            return;
        }
        let mut choose = BigInt::one(); // C(left, e) built incrementally
        let mut power = BigInt::one(); // parts[i]^e
        for e in 0..=left {
            if e > 0 {
                choose = choose * (left - e + 1) / e;
                power *= &parts[i];
            }
            let next = weight * &choose * &power;
            rec(parts, i + 1, left - e, &next, total);
        }
    }
    rec(&parts, 0, (n - 3) as u32, &BigInt::one(), &mut total);
    Ok(Rational::new(total, BigInt::from(d)))
}

/// The five exactly-evaluated pieces of the degree-(0,1) Chiodo contribution
/// to the genus-one comparison at all-ones residues: the degree-zero term,
/// the kappa_1 term, the psi term, the separating two-vertex stable graph,
/// and the non-separating loop graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusOneChiodoParts {
    pub degree_zero: Rational,
    pub kappa: Rational,
    pub psi: Rational,
    pub separating: Rational,
    pub nonseparating: Rational,
}

impl GenusOneChiodoParts {
    pub fn total(&self) -> Rational {
        let mut acc = self.degree_zero.clone();
        acc += &self.kappa;
        acc += &self.psi;
        acc += &self.separating;
        acc += &self.nonseparating;
        acc
    }
}

// [ dd^dd - sum_{j=2}^{dd} (j-2)! dd^{dd-j} C(dd, j) ], the all-ones
// genus-one bracket; 24 times the weighted integral.
fn all_ones_genus1_bracket(dd: u32) -> Rational {
    let base = Rational::from(dd);
    let mut acc = base.pow(dd as i64);
    for j in 2..=dd as u64 {
        let term = &Rational::from_int(factorial(j - 2) * binomial(dd as u64, j))
            * &base.pow(dd as i64 - j as i64);
        acc -= &term;
    }
    acc
}

/// Degree-(0,1) Chiodo contribution in the genus-one comparison, evaluated
/// summand by summand.
pub fn chiodo_g1_deg01_parts(d: u32) -> GenusOneChiodoParts {
    assert!(d >= 1);
    let dr = Rational::from(d);
    let d64 = d as u64;
    let c24 = Rational::from(24u32);
    let c288 = Rational::from(288u32); // 12 * 24

    let degree_zero = &dr / &c24 * all_ones_genus1_bracket(d);

    // kappa term: -(d^2 / (12*24)) [ C(d+1,2) d^{d-1}
    //   - sum_{j=2}^{d+1} (j-2)! ( C(d+1-j,2) d^{d-1-j} C(d,j)
    //                            + C(d+1-j,1) d^{d-j} C(d,j-1) ) ]
    let mut kappa_bracket = &Rational::from_int(binomial(d64 + 1, 2)) * &dr.pow(d as i64 - 1);
    for j in 2..=d64 + 1 {
        let mut inner = Rational::zero();
        let b2 = binomial(d64 + 1 - j, 2);
        if !b2.is_zero() {
            inner += &(&Rational::from_int(b2 * binomial(d64, j)) * &dr.pow(d as i64 - 1 - j as i64));
        }
        let b1 = binomial(d64 + 1 - j, 1);
        if !b1.is_zero() {
            inner += &(&Rational::from_int(b1 * binomial(d64, j - 1)) * &dr.pow(d as i64 - j as i64));
        }
        kappa_bracket -= &(&Rational::from_int(factorial(j - 2)) * &inner);
    }
    let kappa = -(&dr * &dr / &c288 * &kappa_bracket);

    // psi term: + d (d^2 - 6d + 6)/(12*24) [ d^d - (d-1)^d
    //   - sum_{j=2}^{d} (j-2)! ( d^{d-j} C(d,j) - (d-1)^{d-j} C(d-1,j) ) ]
    let dm1 = Rational::from(d - 1);
    let mut psi_bracket = dr.pow(d as i64) - dm1.pow(d as i64);
    for j in 2..=d64 {
        let mut inner = &Rational::from_int(binomial(d64, j)) * &dr.pow(d as i64 - j as i64);
        let bm = binomial(d64 - 1, j);
        if !bm.is_zero() {
            inner -= &(&Rational::from_int(bm) * &dm1.pow(d as i64 - j as i64));
        }
        psi_bracket -= &(&Rational::from_int(factorial(j - 2)) * &inner);
    }
    let d_sq_poly = Rational::from_int(d as i64 * d as i64 - 6 * d as i64 + 6);
    let psi = &dr * &d_sq_poly / &c288 * &psi_bracket;

    // separating graphs: -(d/24) sum_{a=0}^{d-2} (d^2 - 6ad + 6a^2) C(d,a)
    //   [ a^{a+1} - sum_{j=2}^{a+1} (j-2)! a^{a+1-j} C(a,j) ] (d-a)^{d-a-2}
    let mut separating = Rational::zero();
    for a in 0..d.saturating_sub(1) {
        let ar = Rational::from(a);
        let mut bracket = ar.pow(a as i64 + 1);
        for j in 2..=(a as u64 + 1) {
            let bj = binomial(a as u64, j);
            if bj.is_zero() {
                continue;
            }
            bracket -= &(&Rational::from_int(factorial(j - 2) * bj) * &ar.pow(a as i64 + 1 - j as i64));
        }
        let weight = Rational::from_int(
            d as i64 * d as i64 - 6 * (a as i64) * d as i64 + 6 * (a as i64) * (a as i64),
        );
        let graph_count = Rational::from_int(binomial(d64, a as u64));
        let genus0_factor = Rational::from(d - a).pow(d as i64 - a as i64 - 2);
        separating -= &(&dr / &c24 * &weight * &graph_count * &bracket * &genus0_factor);
    }

    let nonseparating = -(dr.pow(d as i64) / &c24);

    GenusOneChiodoParts { degree_zero, kappa, psi, separating, nonseparating }
}

/// Total degree-(0,1) Chiodo contribution in the genus-one comparison;
/// exactly zero at d = 1, where it is the full answer.
pub fn chiodo_g1_deg01(d: u32) -> Rational {
    chiodo_g1_deg01_parts(d).total()
}

/// Integral of the all-ones Chiodo class against 1/prod(1 - psi_i/d) on the
/// genus-g, d-point space: (1/d) [t^{2g}] S(t)^{d-1}.
pub fn chiodo_integral_allones(g: u32, d: u32) -> Result<Rational> {
    if d == 0 || 2 * g as i64 - 2 + d as i64 <= 0 {
        return Err(Error::InvalidArgument(format!(
            "all-ones Chiodo integral needs 2g - 2 + d > 0, got g = {g}, d = {d}"
        )));
    }
    let cap = 2 * g as usize;
    let series = s_kernel(&Rational::one(), cap).pow(d - 1);
    Ok(series.coeff(cap).expect("within cap") / Rational::from(d))
}

/// Single-part Chiodo integral evaluation by parity, through power sums:
/// for odd d, (2/d) p_{2g}(1, ..., (d-1)/2) / (2g)!;
/// for even d, (2^{1-2g}/d) p_{2g}(1, 3, ..., d-1) / (2g)!.
/// For d = 1 the odd form holds with an empty power sum, and g = 0 gives 1.
pub fn chiodo_integral_single(g: u32, d: u32) -> Rational {
    assert!(d >= 1);
    if g == 0 {
        return Rational::one();
    }
    let two_g = 2 * g as usize;
    let dr = Rational::from(d);
    let fact = Rational::from_int(factorial(two_g as u64));
    if !d.is_multiple_of(2) {
        let values: Vec<Rational> = (1..=(d - 1) / 2).map(Rational::from).collect();
        &Rational::from(2u32) / &dr * power_sum(two_g, &values) / fact
    } else {
        let values: Vec<Rational> = (1..d).step_by(2).map(Rational::from).collect();
        &Rational::from(2u32).pow(1 - 2 * g as i64) / &dr * power_sum(two_g, &values) / fact
    }
}

/// The same single-part evaluation through the Faulhaber closed form, using
/// for even d the odd-value identity
/// p_{2g}(1, 3, ..., 2N-1) = p_{2g}(1..2N) - 2^{2g} p_{2g}(1..N).
pub fn chiodo_integral_single_faulhaber(g: u32, d: u32) -> Rational {
    assert!(g >= 1 && d >= 1);
    let two_g = 2 * g as usize;
    let dr = Rational::from(d);
    if !d.is_multiple_of(2) {
        let n = (d as u64 - 1) / 2;
        let f = if n == 0 { Rational::zero() } else { crate::exact::faulhaber(two_g, n) };
        &Rational::from(2u32) / &dr * f
    } else {
        let odd_sum = crate::exact::faulhaber(two_g, d as u64)
            - Rational::from(2u32).pow(2 * g as i64) * crate::exact::faulhaber(two_g, d as u64 / 2);
        &Rational::from(2u32).pow(1 - 2 * g as i64) / &dr * odd_sum
    }
}

/// Chiodo integral in the spin normalization via the multivariate extraction:
/// (d^{3g-4+n} / r^{1-g+b}) * (1/b!) [z_1^r ... z_b^r] of
/// prod_j S(d z_j) * prod_i S(mu_i z_\[b\]) * z_\[b\]^{n-1} / S(z_\[b\]),
/// with b = (2g - 1 + n)/r. Returns None when b is not a positive integer.
pub fn chiodo_integral_spin(g: u32, mu: &Partition, r: u32) -> Option<Rational> {
    let n = mu.len();
    let d = mu.size();
    let b = spin_branch_count(g, n, r)?;
    let extraction = spin_wedge_extraction(g, mu, r)?;
    let a_exp = 1 - g as i64 + b as i64;
    let value = Rational::from_int(d).pow(3 * g as i64 - 4 + n as i64)
        / Rational::from(r).pow(a_exp)
        * extraction;
    Some(value)
}

/// Number of higher-order branch points b = (2g - 1 + n)/r, when integral.
/// The unstable one-point genus-zero case has 2g - 1 + n = 0 and b = 0,
/// where the extraction degenerates to the constant term.
pub fn spin_branch_count(g: u32, n: usize, r: u32) -> Option<u64> {
    assert!(n >= 1 && r >= 1);
    let num = 2 * g as u64 + n as u64 - 1; // 2g - 1 + n
    if !num.is_multiple_of(r as u64) {
        return None;
    }
    Some(num / r as u64)
}

/// The normalized coefficient extraction shared by the spin Hurwitz series
/// and the spin Chiodo integrals:
/// (1/b!) [z_1^r ... z_b^r] prod_j S(d z_j) prod_i S(mu_i z_\[b\])
///                           z_\[b\]^{n-1} / S(z_\[b\]).
pub fn spin_wedge_extraction(g: u32, mu: &Partition, r: u32) -> Option<Rational> {
    let n = mu.len();
    let d = mu.size();
    let b = spin_branch_count(g, n, r)? as usize;
    let total_cap = r as usize * b;

    // univariate factor G(t) = t^{n-1} prod_i S(mu_i t) / S(t)
    let mut univ = Series1::one(total_cap);
    for &part in mu.parts() {
        univ = univ.mul(&s_kernel(&Rational::from(part), total_cap));
    }
    univ = univ.mul(&s_kernel(&Rational::one(), total_cap).invert().expect("S has unit constant term"));
    univ = univ.shift(n - 1);

    if b == 0 {
        // no extraction variables: the series collapses at z = 0
        return Some(univ.coeff(0).expect("constant term").clone());
    }

    let caps = vec![r; b];
    let mut series = SeriesN::from_sum_substitution(&univ, caps);
    let d_kernel = s_kernel(&Rational::from_int(d), r as usize);
    for j in 0..b {
        series = series.mul_univariate(j, &d_kernel);
    }
    let extraction = series.multi_extract(&vec![r; b]).expect("target within caps");
    Some(extraction / Rational::from_int(factorial(b as u64)))
}

/// A Chiodo integral together with the scaling x and psi weights it was
/// evaluated at, so that the scaling identity can be applied bookkeeping-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedChiodoIntegral {
    pub scaling: Rational,
    pub weights: Vec<Rational>,
    pub value: Rational,
}

/// Scaling identity for top-degree Chiodo integrands: rescaling the class
/// parameter from x to x' multiplies the integral by (x'/x)^{3g-3+n} and each
/// psi weight by x'/x.
pub fn scale_chiodo_integral(
    from: &WeightedChiodoIntegral,
    x_to: &Rational,
    g: u32,
) -> WeightedChiodoIntegral {
    let n = from.weights.len();
    let ratio = x_to / &from.scaling;
    let dim = 3 * g as i64 - 3 + n as i64;
    WeightedChiodoIntegral {
        scaling: x_to.clone(),
        weights: from.weights.iter().map(|w| w * &ratio).collect(),
        value: &from.value * ratio.pow(dim),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, den: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(den))
    }

    #[test]
    fn genus0_psi_values() {
        assert_eq!(psi_genus0(&[1, 0, 0, 0]), Rational::one());
        assert_eq!(psi_genus0(&[2, 0, 0, 0, 0]), Rational::one());
        assert_eq!(psi_genus0(&[1, 1, 0, 0, 0]), Rational::from(2u32));
        assert_eq!(psi_genus0(&[1, 0, 0]), Rational::zero()); // dimension mismatch
    }

    #[test]
    fn genus0_multinomial_sum_is_power_of_d() {
        // sum over exponent vectors of the multinomials equals d^{d-3}
        for d in 3u32..=8 {
            let mut total = Rational::zero();
            let mut exps = vec![0u32; d as usize];
            fn rec(exps: &mut [u32], i: usize, left: u32, total: &mut Rational) {
                if i + 1 == exps.len() {
                    exps[i] = left;
                    *total += &psi_genus0(exps);
                    return;
                }
                for e in 0..=left {
                    exps[i] = e;
                    rec(exps, i + 1, left - e, total);
                }
            }
            rec(&mut exps, 0, d - 3, &mut total);
            assert_eq!(total, Rational::from(d).pow(d as i64 - 3), "d = {d}");
        }
    }

    #[test]
    fn dvv_bases_and_known_values() {
        let mut psi = PsiIntersections::new();
        assert_eq!(psi.value(1, &[1]), q(1, 24));
        assert_eq!(psi.value(1, &[0, 2]), q(1, 24));
        assert_eq!(psi.value(1, &[1, 1]), q(1, 24));
        assert_eq!(psi.value(2, &[4]), q(1, 1152));
        assert_eq!(psi.value(2, &[0, 5]), q(1, 1152));
        assert_eq!(psi.value(3, &[7]), q(1, 82944));
        assert_eq!(psi.value(2, &[3, 1]), Rational::zero()); // dimension mismatch
    }

    #[test]
    fn dvv_agrees_with_genus0_closed_form() {
        // every stable genus-zero query with n <= 8 marked points
        let mut psi = PsiIntersections::new();
        for n in 3usize..=8 {
            let mut exps = vec![0u32; n];
            fn rec(exps: &mut Vec<u32>, i: usize, left: u32, psi: &mut PsiIntersections) {
                if i + 1 == exps.len() {
                    exps[i] = left;
                    assert_eq!(
                        psi.value(0, exps),
                        psi_genus0(exps),
                        "exponents {exps:?}"
                    );
                    return;
                }
                for e in 0..=left {
                    exps[i] = e;
                    rec(exps, i + 1, left - e, psi);
                }
            }
            rec(&mut exps, 0, (n - 3) as u32, &mut psi);
        }
    }

    #[test]
    fn genus1_weighted_matches_dvv_expansion() {
        let mut psi = PsiIntersections::new();
        // all integer weight vectors in {0,1,2,3}^n for n <= 3 plus spot
        // checks at n = 4
        let mut grids: Vec<Vec<Rational>> = Vec::new();
        for n in 1usize..=3 {
            let mut w = vec![0i64; n];
            loop {
                grids.push(w.iter().map(|&x| q(x, 1)).collect());
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    if w[i] < 3 {
                        w[i] += 1;
                        break;
                    }
                    w[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        grids.push(vec![q(1, 1), q(1, 1), q(1, 1), q(2, 1)]);
        grids.push(vec![q(3, 1), q(2, 1), q(1, 1), q(1, 1)]);
        for weights in grids {
            let n = weights.len();
            // expand 1/prod(1 - w_i psi_i) degree by degree: only total degree
            // n contributes on the n-point genus-one space
            let mut expansion = Rational::zero();
            let mut exps = vec![0u32; n];
            fn rec(
                exps: &mut Vec<u32>,
                i: usize,
                left: u32,
                weights: &[Rational],
                psi: &mut PsiIntersections,
                acc: &mut Rational,
            ) {
                if i + 1 == exps.len() {
                    exps[i] = left;
                    let mut term = psi.value(1, exps);
                    if !term.is_zero() {
                        for (w, &e) in weights.iter().zip(exps.iter()) {
                            term *= &w.pow(e as i64);
                        }
                        *acc += &term;
                    }
                    return;
                }
                for e in 0..=left {
                    exps[i] = e;
                    rec(exps, i + 1, left - e, weights, psi, acc);
                }
            }
            rec(&mut exps, 0, n as u32, &weights, &mut psi, &mut expansion);
            assert_eq!(genus1_weighted(&weights), expansion, "weights {weights:?}");
        }
    }

    #[test]
    fn genus1_weighted_examples() {
        assert_eq!(genus1_weighted(&[Rational::one()]), q(1, 24));
        // all-ones closed form
        for d in 1u32..=6 {
            let weights = vec![Rational::one(); d as usize];
            assert_eq!(
                genus1_weighted(&weights),
                all_ones_genus1_bracket(d) / Rational::from(24u32),
                "d = {d}"
            );
        }
    }

    #[test]
    fn unstable_conventions() {
        assert_eq!(unstable_psi(&[q(3, 1)]).unwrap(), q(1, 9));
        assert_eq!(unstable_psi(&[q(1, 1), q(1, 1)]).unwrap(), q(1, 2));
        assert_eq!(unstable_psi(&[Rational::one()]).unwrap(), Rational::one());
        assert!(unstable_psi(&[q(1, 1), q(1, 1), q(1, 1)]).is_err());
    }

    #[test]
    fn linear_hodge_values() {
        for d in 1u32..=9 {
            assert_eq!(linear_hodge(1, d), q(d as i64 - 1, 24), "g = 1, d = {d}");
            assert_eq!(linear_hodge(0, d), Rational::from(d).pow(-2));
        }
        for g in 1u32..=5 {
            assert_eq!(linear_hodge(g, 1), Rational::zero(), "g = {g}");
        }
        assert_eq!(linear_hodge(2, 2), q(1, 480));
    }

    #[test]
    fn linear_hodge_is_polynomial_in_d() {
        // for fixed g the integral is a polynomial in d of degree
        // 3g - 3 + n with n = 1: Lagrange interpolation on 3g nodes must
        // reproduce 10 further evaluations exactly.
        for g in 1u32..=4 {
            let degree = 3 * g as usize - 2;
            let nodes: Vec<(Rational, Rational)> = (1..=degree as u32 + 1)
                .map(|d| (Rational::from(d), linear_hodge(g, d)))
                .collect();
            for d in degree as u32 + 2..=degree as u32 + 11 {
                let x = Rational::from(d);
                let mut acc = Rational::zero();
                for (i, (xi, yi)) in nodes.iter().enumerate() {
                    let mut term = yi.clone();
                    for (j, (xj, _)) in nodes.iter().enumerate() {
                        if i != j {
                            term = term * (&x - xj) / (xi - xj);
                        }
                    }
                    acc += &term;
                }
                assert_eq!(acc, linear_hodge(g, d), "g = {g}, d = {d}");
            }
        }
    }

    #[test]
    fn chiodo_ch1_examples() {
        // (d, d; d-1, ..., d-1) at x = 1, as in the genus-one comparison
        for d in 2u32..=6 {
            let spec = ChiodoSpec::new(d, d, vec![d as i64 - 1; d as usize], Rational::one()).unwrap();
            assert!(spec.existence_holds(1));
            let data = chiodo_ch1(&spec, 1).unwrap();
            assert_eq!(data.kappa1_coeff, q(1, 12));
            let expected_psi = q(
                (d as i64) * (d as i64) - 6 * d as i64 + 6,
                12 * (d as i64) * (d as i64),
            );
            for c in &data.psi_coeffs {
                assert_eq!(c, &(-expected_psi.clone()));
            }
            for (a, c) in data.boundary_coeffs.iter().enumerate() {
                let a = a as i64;
                let expect = &q(d as i64, 4)
                    * &q(
                        (d as i64) * (d as i64) - 6 * a * d as i64 + 6 * a * a,
                        6 * (d as i64) * (d as i64),
                    );
                assert_eq!(c, &expect);
            }
        }
        // s = r, a_i = r at d = 1: psi coefficient -B_2(1)/2 = -1/12
        let spec = ChiodoSpec::new(1, 1, vec![1], Rational::one()).unwrap();
        let data = chiodo_ch1(&spec, 1).unwrap();
        assert_eq!(data.psi_coeffs, vec![q(-1, 12)]);
        // linearity in x
        let spec3 = ChiodoSpec::new(1, 1, vec![1], q(3, 1)).unwrap();
        let data3 = chiodo_ch1(&spec3, 1).unwrap();
        assert_eq!(data3.psi_coeffs[0], q(-1, 4));
        assert_eq!(data3.kappa1_coeff, &data.kappa1_coeff * &q(3, 1));
    }

    #[test]
    fn chiodo_ch1_boundary_symmetry() {
        // B_2(a/r) = B_2((r-a)/r) makes the boundary data symmetric
        let spec = ChiodoSpec::new(7, 7, vec![6; 7], Rational::one()).unwrap();
        let data = chiodo_ch1(&spec, 1).unwrap();
        for a in 1..7usize {
            assert_eq!(data.boundary_coeffs[a], data.boundary_coeffs[7 - a]);
        }
    }

    #[test]
    fn chiodo_existence_violation_is_an_error() {
        let spec = ChiodoSpec::new(5, 5, vec![1, 1], Rational::one()).unwrap();
        assert!(!spec.existence_holds(0));
        assert_eq!(chiodo_ch1(&spec, 0).unwrap_err(), Error::ExistenceCondition);
    }

    #[test]
    fn riemann_roch_ranks() {
        // one-part genus-zero tuning: rank 0
        for d in 3u32..=8 {
            let spec = ChiodoSpec::new(d, d, vec![d as i64 - 1; d as usize], Rational::one()).unwrap();
            assert_eq!(rr_rank(0, &spec).unwrap(), 0, "d = {d}");
        }
        // general one-part mu: a_i = d - mu_i, s = r = d, rank 0 in genus 0
        for parts in [vec![2, 1], vec![3, 2, 1], vec![4, 1, 1]] {
            let mu = Partition::new(parts).unwrap();
            let d = mu.size() as i64;
            let residues: Vec<i64> = mu.parts().iter().map(|&m| d - m as i64).collect();
            let spec = ChiodoSpec::new(d as u32, d as u32, residues, Rational::one()).unwrap();
            assert_eq!(rr_rank(0, &spec).unwrap(), 0, "mu = {mu}");
        }
        // r = s = 1, a_i = 1 in genus one: rank 0
        let spec = ChiodoSpec::new(1, 1, vec![1; 4], Rational::one()).unwrap();
        assert_eq!(rr_rank(1, &spec).unwrap(), 0);
    }

    #[test]
    fn genus0_one_part_rhs() {
        // times the comparison prefactor 1/d^{d-2} this is 1/d^2
        for d in 3u32..=9 {
            let mu = Partition::uniform(1, d as usize);
            let rhs = chiodo_g0_one_part_rhs(&mu).unwrap();
            let total = &Rational::from(d).pow(-(d as i64 - 2)) * &rhs;
            assert_eq!(total, Rational::from(d).pow(-2), "d = {d}");
        }
        // general mu: (1/d) d^{n-3} so that d^2 * value = d^{n-2}
        for parts in [vec![2, 1, 1], vec![3, 2, 1], vec![5, 1, 1, 1]] {
            let mu = Partition::new(parts).unwrap();
            let d = Rational::from_int(mu.size());
            let n = mu.len() as i64;
            let rhs = chiodo_g0_one_part_rhs(&mu).unwrap();
            assert_eq!(rhs, d.pow(n - 4), "mu = {mu}");
        }
        assert!(chiodo_g0_one_part_rhs(&Partition::new(vec![1, 1]).unwrap()).is_err());
    }

    #[test]
    fn genus1_chiodo_parts() {
        let parts = chiodo_g1_deg01_parts(1);
        assert_eq!(parts.degree_zero, q(1, 24));
        assert_eq!(parts.kappa, q(-1, 288));
        assert_eq!(parts.psi, q(1, 288));
        assert_eq!(parts.separating, Rational::zero());
        assert_eq!(parts.nonseparating, q(-1, 24));
        assert_eq!(parts.total(), Rational::zero());
        assert_eq!(chiodo_g1_deg01(1), Rational::zero());

        for d in 1u32..=7 {
            assert_eq!(
                chiodo_g1_deg01_parts(d).nonseparating,
                -(Rational::from(d).pow(d as i64) / Rational::from(24u32))
            );
        }
        // frozen regression values for the truncated contribution
        assert_eq!(chiodo_g1_deg01(2), Rational::zero());
        assert_eq!(chiodo_g1_deg01(3), q(27, 32));
        assert_eq!(chiodo_g1_deg01(4), q(539, 12));
        assert_eq!(chiodo_g1_deg01(5), q(203185, 144));
    }

    #[test]
    fn allones_integral() {
        for d in 1u32..=9 {
            assert_eq!(
                chiodo_integral_allones(1, d).unwrap(),
                q(d as i64 - 1, 24 * d as i64),
                "d = {d}"
            );
        }
        // genus 0 needs d >= 3 and equals 1/d
        for d in 3u32..=9 {
            assert_eq!(chiodo_integral_allones(0, d).unwrap(), q(1, d as i64));
        }
        assert!(chiodo_integral_allones(0, 2).is_err());
        assert!(chiodo_integral_allones(0, 1).is_err());
    }

    #[test]
    fn single_integral_both_routes() {
        assert_eq!(chiodo_integral_single(1, 3), q(1, 3));
        assert_eq!(chiodo_integral_single(2, 4), q(41, 384));
        assert_eq!(chiodo_integral_single(3, 5), q(13, 360));
        for g in 1u32..=4 {
            for d in 1u32..=9 {
                assert_eq!(
                    chiodo_integral_single(g, d),
                    chiodo_integral_single_faulhaber(g, d),
                    "g = {g}, d = {d}"
                );
            }
        }
        // d = 1 vanishes for positive genus (empty power sum)
        for g in 1u32..=5 {
            assert_eq!(chiodo_integral_single(g, 1), Rational::zero());
        }
    }

    #[test]
    fn single_integral_matches_kernel_quotient() {
        // (2g)!-normalized two-sided power sums against [t^{2g}] S(dt)/S(t)
        for g in 0u32..=4 {
            for d in 1u32..=9 {
                let cap = 2 * g as usize;
                let series = s_kernel(&Rational::from(d), cap)
                    .mul(&s_kernel(&Rational::one(), cap).invert().unwrap());
                assert_eq!(
                    chiodo_integral_single(g, d),
                    series.coeff(cap).unwrap().clone(),
                    "g = {g}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn scaling_identity() {
        let base = WeightedChiodoIntegral {
            scaling: Rational::one(),
            weights: vec![q(1, 2); 3],
            value: q(5, 7),
        };
        let same = scale_chiodo_integral(&base, &Rational::one(), 2);
        assert_eq!(same, base);
        let scaled = scale_chiodo_integral(&base, &q(2, 1), 2);
        assert_eq!(scaled.weights, vec![Rational::one(); 3]);
        // dim = 3*2 - 3 + 3 = 6
        assert_eq!(scaled.value, &base.value * &q(64, 1));
        // scaling there and back is the identity
        let back = scale_chiodo_integral(&scaled, &Rational::one(), 2);
        assert_eq!(back, base);
    }

    #[test]
    fn spin_chiodo_integral_divisibility() {
        let mu = Partition::new(vec![1, 1]).unwrap();
        // 2g - 1 + n = 3: divisible by 3 and 1, not by 2
        assert!(chiodo_integral_spin(1, &mu, 2).is_none());
        assert!(chiodo_integral_spin(1, &mu, 3).is_some());
        assert!(chiodo_integral_spin(1, &mu, 1).is_some());
    }

    #[test]
    fn allones_vanishes_at_degree_one() {
        for g in 1u32..=4 {
            assert_eq!(chiodo_integral_allones(g, 1).unwrap(), Rational::zero());
        }
    }
}
