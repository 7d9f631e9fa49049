//! Tabulated reference polynomials for the one-part numbers through genus
//! five, stored as frozen integer coefficients over one denominator per
//! genus. Keys are the mu-exponent partitions of the monomial symmetric
//! basis, so `h = d^{2g-2+n} * (sum of coefficient * monomial sum) / DENOM`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::exact::Rational;
use crate::hurwitz::SymmetricPoly;

/// Per-genus common denominator.
pub const DENOMINATORS: [u64; 6] = [1, 24, 5760, 967680, 464486400, 122624409600];

/// Frozen numerators: (mu-exponents, coefficient) per genus.
pub const COEFFICIENTS: [&[(&[u32], i64)]; 6] = [
    // genus 0
    &[(&[], 1)],
    // genus 1
    &[(&[2], 1), (&[], -1)],
    // genus 2
    &[(&[4], 3), (&[2, 2], 10), (&[2], -10), (&[], 7)],
    // genus 3
    &[
        (&[6], 3),
        (&[4, 2], 21),
        (&[2, 2, 2], 70),
        (&[4], -21),
        (&[2, 2], -70),
        (&[2], 49),
        (&[], -31),
    ],
    // genus 4
    &[
        (&[8], 5),
        (&[6, 2], 60),
        (&[4, 4], 126),
        (&[4, 2, 2], 420),
        (&[2, 2, 2, 2], 1400),
        (&[6], -60),
        (&[4, 2], -420),
        (&[2, 2, 2], -1400),
        (&[4], 294),
        (&[2, 2], 980),
        (&[2], -620),
        (&[], 381),
    ],
    // genus 5
    &[
        (&[10], 3),
        (&[8, 2], 55),
        (&[6, 4], 198),
        (&[6, 2, 2], 660),
        (&[4, 4, 2], 1386),
        (&[4, 2, 2, 2], 4620),
        (&[2, 2, 2, 2, 2], 15400),
        (&[8], -55),
        (&[6, 2], -660),
        (&[4, 4], -1386),
        (&[4, 2, 2], -4620),
        (&[2, 2, 2, 2], -15400),
        (&[6], 462),
        (&[4, 2], 3234),
        (&[2, 2, 2], 10780),
        (&[4], -2046),
        (&[2, 2], -6820),
        (&[2], 4191),
        (&[], -2555),
    ],
];

/// The reference polynomial for genus g restricted to n variables: monomials
/// needing more than n distinct variables drop out.
pub fn reference_polynomial(g: u32, n: usize) -> SymmetricPoly {
    assert!(g <= 5, "reference table covers genus <= 5");
    let denom = Rational::from(DENOMINATORS[g as usize]);
    let mut terms = BTreeMap::new();
    for &(exponents, numerator) in COEFFICIENTS[g as usize] {
        if exponents.len() > n {
            continue;
        }
        terms.insert(
            exponents.to_vec(),
            Rational::from_int(BigInt::from(numerator)) / &denom,
        );
    }
    SymmetricPoly::new(n, terms)
}
