//! Brute-force ground truth for double Hurwitz numbers: enumerate transitive
//! transposition factorizations in the symmetric group and weight them.
//!
//! A tuple (sigma_0, tau_1, ..., tau_m, sigma_inf) is counted when sigma_0
//! has cycle type nu, sigma_inf has cycle type mu, every tau_i is a
//! transposition, the product sigma_inf tau_m ... tau_1 sigma_0 is the
//! identity, and the subgroup generated by the entries acts transitively on
//! the sheets. The weighted number is then |Aut(mu)| * count / (d! m!).
//!
//! The enumeration fixes one canonical representative of the class nu and
//! multiplies by the class size (the count is conjugation-invariant), then
//! walks transposition sequences depth-first with the running product and a
//! rollback union-find, pruning branches that can no longer reach the target
//! cycle type or merge all sheet components in the remaining steps.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};
use crate::partitions::Partition;

/// Default tuple budget for the enumeration guard.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// One enumerative query: genus, profile over infinity, profile over zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzQuery {
    pub genus: u32,
    pub mu: Partition,
    pub nu: Partition,
}

impl HurwitzQuery {
    pub fn new(genus: u32, mu: Partition, nu: Partition) -> Result<Self> {
        if mu.size() != nu.size() {
            return Err(Error::ProfileSizeMismatch { mu: mu.size(), nu: nu.size() });
        }
        Ok(HurwitzQuery { genus, mu, nu })
    }

    /// Number of simple branch points 2g - 2 + l(mu) + l(nu).
    pub fn branch_points(&self) -> i64 {
        2 * self.genus as i64 - 2 + self.mu.len() as i64 + self.nu.len() as i64
    }

    /// A priori tuple estimate class_size(nu) * C(d,2)^m used by the budget
    /// guard.
    pub fn tuple_estimate(&self) -> BigInt {
        let m = self.branch_points();
        if m < 0 {
            return BigInt::zero();
        }
        let d = self.mu.size();
        let pairs = BigInt::from(d * d.saturating_sub(1) / 2);
        self.nu.class_size() * pairs.pow(m as u32)
    }
}

/// Union-find over sheets with an undo log, so the depth-first search can
/// merge on entry and roll back on exit.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
    log: Vec<(usize, usize)>, // (child root attached, parent root)
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu { parent: (0..n).collect(), size: vec![1; n], components: n, log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        // no path compression: keeps rollback trivial
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns true if a merge happened (and records it).
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        self.log.push((rb, ra));
        true
    }

    fn mark(&self) -> usize {
        self.log.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (child, parent) = self.log.pop().expect("log nonempty");
            self.parent[child] = child;
            self.size[parent] -= self.size[child];
            self.components += 1;
        }
    }
}

/// One-line permutation with its inverse, supporting in-place left
/// multiplication by transpositions.
#[derive(Clone)]
struct TrackedPerm {
    perm: Vec<usize>,
    inv: Vec<usize>,
    cycles: usize,
}

impl TrackedPerm {
    fn from_cycle_type(nu: &Partition, d: usize) -> Self {
        let mut perm: Vec<usize> = (0..d).collect();
        let mut start = 0usize;
        for &part in nu.parts() {
            let len = part as usize;
            for i in 0..len {
                perm[start + i] = start + (i + 1) % len;
            }
            start += len;
        }
        let mut inv = vec![0usize; d];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let cycles = nu.len() + (d - start); // trailing fixed points, if any
        TrackedPerm { perm, inv, cycles }
    }

    /// Whether points a and b lie in the same cycle.
    fn same_cycle(&self, a: usize, b: usize) -> bool {
        let mut x = self.perm[a];
        while x != a {
            if x == b {
                return true;
            }
            x = self.perm[x];
        }
        false
    }

    /// Left-multiplies by the transposition (a b), updating the cycle count.
    fn apply_transposition(&mut self, a: usize, b: usize) {
        if self.same_cycle(a, b) {
            self.cycles += 1; // cut
        } else {
            self.cycles -= 1; // join
        }
        let ia = self.inv[a];
        let ib = self.inv[b];
        self.perm[ia] = b;
        self.perm[ib] = a;
        self.inv.swap(a, b);
    }

    fn cycle_type(&self) -> Vec<u32> {
        let d = self.perm.len();
        let mut seen = vec![false; d];
        let mut parts = Vec::new();
        for i in 0..d {
            if seen[i] {
                continue;
            }
            let mut len = 0u32;
            let mut x = i;
            while !seen[x] {
                seen[x] = true;
                x = self.perm[x];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

struct Search<'a> {
    target_parts: &'a [u32],
    target_cycles: usize,
    pairs: &'a [(usize, usize)],
}

impl Search<'_> {
    fn count(&self, state: &mut TrackedPerm, dsu: &mut RollbackDsu, remaining: usize) -> u64 {
        // reachability pruning: every completing sequence still needs
        // `merges` cross-component transpositions, each of which joins two
        // cycles; the remaining steps change the cycle count by one each
        let merges = dsu.components - 1;
        if merges > remaining {
            return 0;
        }
        let after_merges = state.cycles as i64 - merges as i64;
        let diff = (after_merges - self.target_cycles as i64).unsigned_abs() as usize;
        let slack = remaining - merges;
        if diff > slack || !(slack - diff).is_multiple_of(2) {
            return 0;
        }
        if remaining == 0 {
            if dsu.components == 1 && state.cycle_type() == self.target_parts {
                return 1;
            }
            return 0;
        }
        let mut total = 0u64;
        for &(a, b) in self.pairs {
            let mark = dsu.mark();
            dsu.union(a, b);
            state.apply_transposition(a, b);
            total += self.count(state, dsu, remaining - 1);
            state.apply_transposition(a, b);
            dsu.rollback(mark);
        }
        total
    }
}

/// Number of transitive factorization tuples for the query, as defined in
/// the module documentation. Refuses queries whose a priori tuple estimate
/// exceeds the budget.
pub fn raw_count(query: &HurwitzQuery, budget: &BigInt) -> Result<BigInt> {
    let m = query.branch_points();
    if m < 0 {
        return Ok(BigInt::zero());
    }
    let estimate = query.tuple_estimate();
    if &estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget: budget.clone() });
    }
    let d = query.mu.size() as usize;
    if d == 0 {
        return Ok(BigInt::zero());
    }

    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|a| ((a + 1)..d).map(move |b| (a, b)))
        .collect();
    let target_parts: Vec<u32> = query.mu.parts().to_vec();
    let search = Search {
        target_parts: &target_parts,
        target_cycles: query.mu.len(),
        pairs: &pairs,
    };

    let base = TrackedPerm::from_cycle_type(&query.nu, d);
    let mut base_dsu = RollbackDsu::new(d);
    for (i, &p) in base.perm.iter().enumerate() {
        base_dsu.union(i, p);
    }
    base_dsu.log.clear(); // the sigma_0 merges are permanent

    let m = m as usize;
    let per_representative: u64 = if m == 0 {
        let mut state = base;
        let mut dsu = base_dsu;
        search.count(&mut state, &mut dsu, 0)
    } else {
        // parallelize over the first transposition; the reduction is an
        // integer sum, so the result is schedule-independent
        pairs
            .par_iter()
            .map(|&(a, b)| {
                let mut state = base.clone();
                let mut dsu = RollbackDsu {
                    parent: base_dsu.parent.clone(),
                    size: base_dsu.size.clone(),
                    components: base_dsu.components,
                    log: Vec::new(),
                };
                dsu.union(a, b);
                state.apply_transposition(a, b);
                search.count(&mut state, &mut dsu, m - 1)
            })
            .sum()
    };

    Ok(query.nu.class_size() * per_representative)
}

/// The weighted double Hurwitz number |Aut(mu)| raw / (d! m!), with mu the
/// profile over infinity.
pub fn double_hurwitz(query: &HurwitzQuery, budget: &BigInt) -> Result<Rational> {
    let m = query.branch_points();
    if m < 0 {
        return Ok(Rational::zero());
    }
    let raw = raw_count(query, budget)?;
    let d = query.mu.size();
    let weight = Rational::new(
        query.mu.aut_order() * raw,
        factorial(d) * factorial(m as u64),
    );
    Ok(weight)
}

/// One-part specialization nu = (d).
pub fn one_part_oracle(genus: u32, mu: &Partition, budget: &BigInt) -> Result<Rational> {
    let d = mu.size().to_u32().ok_or_else(|| {
        Error::InvalidArgument("profile size too large for enumeration".into())
    })?;
    double_hurwitz(&HurwitzQuery::new(genus, mu.clone(), Partition::single(d))?, budget)
}

/// Orbifold specialization nu = (q, q, ..., q); q must divide d.
pub fn orbifold_oracle(genus: u32, mu: &Partition, q: u32, budget: &BigInt) -> Result<Rational> {
    let d = mu.size();
    if q == 0 || !d.is_multiple_of(q as u64) {
        return Err(Error::NotADivisor { q, d });
    }
    let nu = Partition::uniform(q, (d / q as u64) as usize);
    double_hurwitz(&HurwitzQuery::new(genus, mu.clone(), nu)?, budget)
}
