//! Closed-form and recursive computation of one-part double, orbifold and
//! spin one-part Hurwitz numbers: numerically, as symbolic polynomials in
//! the parts, and through the cut-and-join class algebra as a route
//! independent of the factorization oracle.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Rational};
use crate::moduli::{spin_branch_count, spin_wedge_extraction};
use crate::partitions::{all_partitions, partition_count, Partition};
use crate::series::s_kernel;

/// One-part double Hurwitz number d^{2g-2+n} [t^{2g}] prod_i S(t mu_i) / S(t).
pub fn one_part(genus: u32, mu: &Partition) -> Rational {
    let d = mu.size();
    assert!(d >= 1, "one-part numbers need a nonempty profile");
    let n = mu.len();
    let cap = 2 * genus as usize;
    let mut series = s_kernel(&Rational::one(), cap)
        .invert()
        .expect("S has unit constant term");
    for &part in mu.parts() {
        series = series.mul(&s_kernel(&Rational::from(part), cap));
    }
    let coeff = series.coeff(cap).expect("within cap").clone();
    Rational::from_int(d).pow(2 * genus as i64 - 2 + n as i64) * coeff
}

/// A symmetric polynomial in mu_1, ..., mu_n written in the monomial
/// symmetric basis: each key is a weakly decreasing list of even exponents
/// (the empty key is the constant term) and each sum ranges over the
/// distinct monomials with those exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SymmetricPoly {
    pub fn new(n: usize, terms: BTreeMap<Vec<u32>, Rational>) -> Self {
        for key in terms.keys() {
            assert!(key.len() <= n, "monomial uses more variables than available");
            assert!(key.windows(2).all(|w| w[0] >= w[1]), "exponents must be sorted");
            assert!(key.iter().all(|&e| e > 0), "zero exponents are implicit");
        }
        SymmetricPoly { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn has_only_even_exponents(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(|&e| e % 2 == 0))
    }

    /// Exact evaluation; each monomial sum ranges over assignments of its
    /// exponents to distinct variables.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.n, "evaluation needs one value per variable");
        let mut acc = Rational::zero();
        for (exps, coeff) in &self.terms {
            if coeff.is_zero() {
                continue;
            }
            acc += &(coeff * &monomial_symmetric(exps, values));
        }
        acc
    }
}

/// Monomial symmetric sum with the given exponents, evaluated at `values`.
/// Walks the variables in order; each picks one of the remaining exponent
/// groups or stays absent. Equal exponents live in one counted group, so
/// every distinct monomial is produced exactly once.
fn monomial_symmetric(exponents: &[u32], values: &[Rational]) -> Rational {
    if exponents.is_empty() {
        return Rational::one();
    }
    if exponents.len() > values.len() {
        return Rational::zero();
    }
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &e in exponents {
        match groups.last_mut() {
            Some((v, m)) if *v == e => *m += 1,
            _ => groups.push((e, 1)),
        }
    }
    fn assign(
        values: &[Rational],
        vi: usize,
        groups: &mut Vec<(u32, usize)>,
        current: &Rational,
        acc: &mut Rational,
    ) {
        let remaining: usize = groups.iter().map(|g| g.1).sum();
        if remaining == 0 {
            *acc += current;
            return;
        }
        if remaining > values.len() - vi {
            return;
        }
        assign(values, vi + 1, groups, current, acc);
        for gi in 0..groups.len() {
            if groups[gi].1 == 0 {
                continue;
            }
            groups[gi].1 -= 1;
            let next = current * values[vi].pow(groups[gi].0 as i64);
            assign(values, vi + 1, groups, &next, acc);
            groups[gi].1 += 1;
        }
    }
    let mut acc = Rational::zero();
    assign(values, 0, &mut groups, &Rational::one(), &mut acc);
    acc
}

/// The symmetric polynomial P_{g,n} with
/// one_part(g, mu) = d^{2g-2+n} P_{g,n}(mu_1^2, ..., mu_n^2).
/// The coefficient of the monomial sum whose mu^2-exponents form the
/// partition lambda is [t^{2(g-|lambda|)}](1/S) * prod_k [t^{2 lambda_k}] S.
pub fn one_part_polynomial(genus: u32, n: usize) -> SymmetricPoly {
    assert!(n >= 1);
    let cap = 2 * genus as usize;
    let kernel = s_kernel(&Rational::one(), cap);
    let inverse = kernel.invert().expect("S has unit constant term");
    let mut terms = BTreeMap::new();
    for weight in 0..=genus {
        let lambdas: Vec<Vec<u32>> = if weight == 0 {
            vec![Vec::new()]
        } else {
            all_partitions(weight)
                .into_iter()
                .filter(|p| p.len() <= n)
                .map(|p| p.parts().to_vec())
                .collect()
        };
        for lambda in lambdas {
            let mut coeff = inverse
                .coeff(2 * (genus - weight) as usize)
                .expect("within cap")
                .clone();
            for &part in &lambda {
                coeff *= kernel.coeff(2 * part as usize).expect("within cap");
            }
            if coeff.is_zero() {
                continue;
            }
            let key: Vec<u32> = lambda.iter().map(|&p| 2 * p).collect();
            terms.insert(key, coeff);
        }
    }
    SymmetricPoly::new(n, terms)
}

/// Connected double Hurwitz number by the cut-and-join route: a dynamic
/// program in the class algebra of the symmetric group yields
/// possibly-disconnected factorization counts, connected counts follow by
/// removing the component of a marked sheet, and the weight normalization is
/// applied last. Entirely independent of the depth-first oracle.
pub fn double_cutjoin(
    genus: u32,
    mu: &Partition,
    nu: &Partition,
    budget: &BigInt,
) -> Result<Rational> {
    if mu.size() != nu.size() {
        return Err(Error::ProfileSizeMismatch { mu: mu.size(), nu: nu.size() });
    }
    let d = mu.size();
    let m = 2 * genus as i64 - 2 + mu.len() as i64 + nu.len() as i64;
    if m < 0 {
        return Ok(Rational::zero());
    }
    let m = m as usize;

    let d32 = d
        .to_u32()
        .ok_or_else(|| Error::InvalidArgument("profile size too large".into()))?;
    // cost guard: the DP fills p(d)^2 (m+1) cells and the class-algebra
    // construction touches p(d) C(d,2) products
    let classes = partition_count(d32) as u64;
    let estimate = BigInt::from(classes * classes * (m as u64 + 1))
        + BigInt::from(classes) * BigInt::from(d * d.saturating_sub(1) / 2);
    if &estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget: budget.clone() });
    }

    let mut engine = CutJoin::default();
    let connected = engine.connected(m, mu, nu);
    Ok(Rational::new(
        mu.aut_order() * connected,
        factorial(d) * factorial(m as u64),
    ))
}

/// Per-degree class algebra: classes of S_d, and for a fixed permutation of
/// each class, how many transpositions carry it into each other class.
struct ClassAlgebra {
    classes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    step: Vec<Vec<u64>>,
    /// (start class, steps) -> counts of (sigma_0 in start, tau_1..tau_k)
    /// whose running product lies in each class
    states: HashMap<(usize, usize), Vec<BigInt>>,
}

impl ClassAlgebra {
    fn new(d: u32) -> Self {
        let classes = all_partitions(d);
        let index: HashMap<Partition, usize> =
            classes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = d as usize;
        let mut step = vec![vec![0u64; classes.len()]; classes.len()];
        for (i, class) in classes.iter().enumerate() {
            let perm = canonical_permutation(class, n);
            for a in 0..n {
                for b in (a + 1)..n {
                    let mut image = perm.clone();
                    for entry in image.iter_mut() {
                        if *entry == a {
                            *entry = b;
                        } else if *entry == b {
                            *entry = a;
                        }
                    }
                    let target = cycle_type_of(&image);
                    step[i][index[&target]] += 1;
                }
            }
        }
        ClassAlgebra { classes, index, step, states: HashMap::new() }
    }

    fn state(&mut self, start: usize, steps: usize) -> Vec<BigInt> {
        if let Some(v) = self.states.get(&(start, steps)) {
            return v.clone();
        }
        let vector = if steps == 0 {
            let mut v = vec![BigInt::zero(); self.classes.len()];
            v[start] = self.classes[start].class_size();
            v
        } else {
            let prev = self.state(start, steps - 1);
            let mut v = vec![BigInt::zero(); self.classes.len()];
            for (i, count) in prev.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for (j, &ways) in self.step[i].iter().enumerate() {
                    if ways != 0 {
                        v[j] += count * ways;
                    }
                }
            }
            v
        };
        self.states.insert((start, steps), vector.clone());
        vector
    }
}

fn canonical_permutation(class: &Partition, d: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..d).collect();
    let mut start = 0usize;
    for &part in class.parts() {
        let len = part as usize;
        for i in 0..len {
            perm[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    perm
}

fn cycle_type_of(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for i in 0..perm.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0u32;
        let mut x = i;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("cycle lengths are positive")
}

#[derive(Default)]
struct CutJoin {
    algebras: HashMap<u32, ClassAlgebra>,
    connected_memo: HashMap<(Partition, Partition, usize), BigInt>,
}

impl CutJoin {
    /// Possibly-disconnected count of (sigma_0 of type nu, tau_1, ..., tau_m)
    /// with product of type mu; no transitivity requirement.
    fn disconnected(&mut self, m: usize, mu: &Partition, nu: &Partition) -> BigInt {
        debug_assert_eq!(mu.size(), nu.size());
        if mu.is_empty() {
            return if m == 0 { BigInt::one() } else { BigInt::zero() };
        }
        let d = mu.size() as u32;
        let algebra = self.algebras.entry(d).or_insert_with(|| ClassAlgebra::new(d));
        let start = algebra.index[nu];
        let target = algebra.index[mu];
        algebra.state(start, m)[target].clone()
    }

    /// Connected count: subtract configurations whose marked-sheet component
    /// is proper. The component containing a fixed sheet has some profile
    /// pair (mu1, nu1) and receives m1 of the m transpositions, so
    ///   disc(m; mu, nu) = sum C(d-1, d1-1) C(m, m1)
    ///                         conn(m1; mu1, nu1) disc(m-m1; rest),
    /// and solving for the full term gives the recursion.
    fn connected(&mut self, m: usize, mu: &Partition, nu: &Partition) -> BigInt {
        let key = (mu.clone(), nu.clone(), m);
        if let Some(v) = self.connected_memo.get(&key) {
            return v.clone();
        }
        let d = mu.size();
        let mut value = self.disconnected(m, mu, nu);
        for (mu1, mu_rest) in sub_multisets(mu) {
            if mu1.is_empty() {
                continue;
            }
            let d1 = mu1.size();
            for (nu1, nu_rest) in sub_multisets(nu) {
                if nu1.size() != d1 {
                    continue;
                }
                let sheets = binomial(d - 1, d1 - 1);
                for m1 in 0..=m {
                    if mu1 == *mu && nu1 == *nu && m1 == m {
                        continue; // that is the connected term being solved for
                    }
                    let rest = self.disconnected(m - m1, &mu_rest, &nu_rest);
                    if rest.is_zero() {
                        continue;
                    }
                    let conn = self.connected(m1, &mu1, &nu1);
                    if conn.is_zero() {
                        continue;
                    }
                    value -= sheets.clone() * binomial(m as u64, m1 as u64) * conn * rest;
                }
            }
        }
        self.connected_memo.insert(key, value.clone());
        value
    }
}

/// All distinct sub-multisets of a partition, paired with their complements.
fn sub_multisets(p: &Partition) -> Vec<(Partition, Partition)> {
    let groups = p.multiplicities();
    let mut out = Vec::new();
    let mut taken: Vec<usize> = vec![0; groups.len()];
    loop {
        let mut sub = Vec::new();
        let mut rest = Vec::new();
        for (i, &(value, mult)) in groups.iter().enumerate() {
            for _ in 0..taken[i] {
                sub.push(value);
            }
            for _ in taken[i]..mult {
                rest.push(value);
            }
        }
        out.push((
            Partition::new(sub).expect("parts positive"),
            Partition::new(rest).expect("parts positive"),
        ));
        // odometer increment
        let mut i = 0;
        loop {
            if i == groups.len() {
                return out;
            }
            if taken[i] < groups[i].1 {
                taken[i] += 1;
                break;
            }
            taken[i] = 0;
            i += 1;
        }
    }
}

/// Spin one-part Hurwitz number through the multivariate hyperbolic-kernel
/// series: d^{b-1} times the normalized [z_1^r ... z_b^r] extraction, with
/// b = (2g - 1 + n)/r. Returns zero when b is not a positive integer (the
/// count vanishes because no valid number of higher-order branch points
/// exists); use [`spin_is_divisible`] to distinguish that case.
pub fn spin_one_part(genus: u32, mu: &Partition, r: u32) -> Rational {
    assert!(r >= 1);
    let Some(b) = spin_branch_count(genus, mu.len(), r) else {
        return Rational::zero();
    };
    let extraction = spin_wedge_extraction(genus, mu, r).expect("b was just checked");
    Rational::from_int(mu.size()).pow(b as i64 - 1) * extraction
}

/// Whether the spin branch-point count b = (2g - 1 + n)/r is a positive
/// integer for these parameters.
pub fn spin_is_divisible(genus: u32, n: usize, r: u32) -> bool {
    spin_branch_count(genus, n, r).is_some()
}
