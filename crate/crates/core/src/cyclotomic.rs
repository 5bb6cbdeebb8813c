//! Exact arithmetic of roots of unity at the level of Galois orbits.
//!
//! Integrality of characteristic polynomials forces eigenvalues of finite
//! order to come in full Galois orbits, so a single pair `(d, r)` — the order
//! of the root and the number of full orbits — is all that ever needs to be
//! stored. The eigenvalue `-1` is the orbit of order 2, `+1` the orbit of
//! order 1.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::{Error, Result};

/// Divisors of n in ascending order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Euler's totient φ(n).
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi: n must be positive");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Sum of all primitive n-th roots of unity: 0 if n has a square factor,
/// (−1)^t if n is a product of t distinct primes (the Möbius function).
pub fn primitive_root_sum(n: u64) -> i64 {
    assert!(n >= 1, "primitive_root_sum: n must be positive");
    let mut n = n;
    let mut sign = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Ramanujan sum c_n(a): the sum of a-th powers of all primitive n-th roots
/// of unity, computed exactly as (φ(n)/φ(n'))·R(n') with n' = n/gcd(n, a).
pub fn ramanujan_sum(n: u64, a: i64) -> i64 {
    assert!(n >= 1, "ramanujan_sum: n must be positive");
    let g = n.gcd(&a.unsigned_abs());
    let n_prime = n / g;
    let ratio = (euler_phi(n) / euler_phi(n_prime)) as i64;
    ratio * primitive_root_sum(n_prime)
}

/// A multiset of full Galois orbits of roots of unity with multiplicities,
/// modelling the eigenvalue list of an automorphism on H².
///
/// Canonical form: entries `(d, r)` sorted ascending by the order `d`, equal
/// orders merged, every multiplicity `r >= 1`. Two profiles with the same
/// multiset content always serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitProfile {
    orbits: Vec<(u64, u64)>,
}

impl OrbitProfile {
    /// Build a profile from (order, multiplicity) pairs; canonicalizes.
    pub fn new(entries: &[(u64, u64)]) -> Self {
        let mut map: BTreeMap<u64, u64> = BTreeMap::new();
        for &(d, r) in entries {
            assert!(d >= 1, "orbit order must be positive");
            if r > 0 {
                *map.entry(d).or_insert(0) += r;
            }
        }
        OrbitProfile {
            orbits: map.into_iter().collect(),
        }
    }

    /// The identity profile of the given dimension: `dim` copies of the
    /// eigenvalue 1.
    pub fn identity(dim: u64) -> Self {
        OrbitProfile::new(&[(1, dim)])
    }

    /// Orbits as canonical (order, multiplicity) pairs, ascending in order.
    pub fn orbits(&self) -> &[(u64, u64)] {
        &self.orbits
    }

    /// Total dimension Σ r·φ(d).
    pub fn dimension(&self) -> u64 {
        self.orbits.iter().map(|&(d, r)| r * euler_phi(d)).sum()
    }

    /// Multiplicity of the orbit of order `d` (0 if absent).
    pub fn multiplicity(&self, d: u64) -> u64 {
        self.orbits
            .iter()
            .find(|&&(order, _)| order == d)
            .map_or(0, |&(_, r)| r)
    }

    /// True if the full orbit of order `d` appears at least once.
    pub fn contains_order(&self, d: u64) -> bool {
        self.multiplicity(d) > 0
    }

    /// Least common multiple of the orbit orders: the order of any linear map
    /// with this eigenvalue multiset.
    pub fn order(&self) -> u64 {
        self.orbits.iter().fold(1u64, |acc, &(d, _)| acc.lcm(&d))
    }
}

impl fmt::Display for OrbitProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(d, r) in &self.orbits {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{d}^{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for OrbitProfile {
    type Err = Error;

    /// Parse the `d^r` token grammar. Tokens in non-canonical order are
    /// re-canonicalized, never rejected.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for token in s.split_whitespace() {
            let (d, r) = token
                .split_once('^')
                .ok_or_else(|| Error::BadProfileToken(token.to_string()))?;
            let d: u64 = d
                .parse()
                .map_err(|_| Error::BadProfileToken(token.to_string()))?;
            let r: u64 = r
                .parse()
                .map_err(|_| Error::BadProfileToken(token.to_string()))?;
            if d == 0 || r == 0 {
                return Err(Error::BadProfileToken(token.to_string()));
            }
            entries.push((d, r));
        }
        Ok(OrbitProfile::new(&entries))
    }
}

/// Image of a profile under the a-th power map: each orbit `(d, r)` maps to
/// `(d', r·φ(d)/φ(d'))` with `d' = d/gcd(d, a)`. Dimension is preserved.
pub fn profile_power(p: &OrbitProfile, a: i64) -> OrbitProfile {
    let entries: Vec<(u64, u64)> = p
        .orbits()
        .iter()
        .map(|&(d, r)| {
            let d_prime = d / d.gcd(&a.unsigned_abs());
            (d_prime, r * euler_phi(d) / euler_phi(d_prime))
        })
        .collect();
    OrbitProfile::new(&entries)
}

/// Trace of the a-th power of any linear map with eigenvalue multiset `p`:
/// Σ r·c_d(a) over the orbits.
pub fn profile_trace(p: &OrbitProfile, a: i64) -> i64 {
    p.orbits()
        .iter()
        .map(|&(d, r)| r as i64 * ramanujan_sum(d, a))
        .sum()
}

/// Dimension of the fixed subspace of the a-th power: the multiplicity of the
/// trivial orbit in `profile_power(p, a)`.
pub fn invariant_dim(p: &OrbitProfile, a: i64) -> u64 {
    profile_power(p, a).multiplicity(1)
}

/// The n-th cyclotomic polynomial Φ_n, ascending coefficients.
fn cyclotomic_poly(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    if n == 1 {
        return vec![-1, 1];
    }
    // (x^n - 1) / prod over proper divisors d of Phi_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd && den[dd] != 0);
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd] / den[dd];
        quot[k] = c;
        for j in 0..=dd {
            rem[k + j] -= c * den[j];
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    quot
}

/// Characteristic polynomial of any linear map with eigenvalue multiset `p`:
/// the product of Φ_d^r expanded, ascending integer coefficients, of degree
/// equal to the dimension of `p`.
pub fn char_poly(p: &OrbitProfile) -> Vec<i64> {
    let mut out = vec![1i64];
    for &(d, r) in p.orbits() {
        let phi_d = cyclotomic_poly(d);
        for _ in 0..r {
            out = poly_mul(&out, &phi_d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(60), 16);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(66), 20);
    }

    #[test]
    fn primitive_root_sums() {
        assert_eq!(primitive_root_sum(4), 0);
        assert_eq!(primitive_root_sum(30), -1);
        assert_eq!(primitive_root_sum(1), 1);
        assert_eq!(primitive_root_sum(6), 1);
        assert_eq!(primitive_root_sum(60), 0);
    }

    #[test]
    fn ramanujan_values() {
        // the full order-60 orbit powers to sixteen copies of -1
        assert_eq!(ramanujan_sum(60, 30), -16);
        for n in 1..=20 {
            assert_eq!(ramanujan_sum(n, 0), euler_phi(n) as i64);
        }
        assert_eq!(ramanujan_sum(12, 2), 2);
    }

    #[test]
    fn ramanujan_matches_float_oracle() {
        // independent oracle: literally sum exp(2*pi*i*k*a/n) over k coprime to n
        for n in 1..=120u64 {
            for a in 0..=120i64 {
                let mut re = 0.0f64;
                for k in 1..=n {
                    if k.gcd(&n) == 1 {
                        let theta =
                            2.0 * std::f64::consts::PI * (k as f64) * (a as f64) / (n as f64);
                        re += theta.cos();
                    }
                }
                let exact = ramanujan_sum(n, a);
                assert!(
                    (re - exact as f64).abs() < 1e-6,
                    "c_{n}({a}): float {re} vs exact {exact}"
                );
            }
        }
    }

    fn profile_60() -> OrbitProfile {
        // [1, zeta_60:16, zeta_12:4, 1]
        OrbitProfile::new(&[(1, 2), (12, 1), (60, 1)])
    }

    #[test]
    fn canonical_form_and_parsing() {
        let p = OrbitProfile::new(&[(60, 1), (1, 1), (12, 1), (1, 1)]);
        assert_eq!(p, profile_60());
        assert_eq!(p.to_string(), "1^2 12^1 60^1");
        let q: OrbitProfile = "60^1 1^2 12^1".parse().unwrap();
        assert_eq!(q, p);
        let r: OrbitProfile = "1^1 1^1 12^1 60^1".parse().unwrap();
        assert_eq!(r, p);
        assert!("1^0".parse::<OrbitProfile>().is_err());
        assert!("junk".parse::<OrbitProfile>().is_err());
        assert_eq!(p.dimension(), 22);
        assert_eq!(p.order(), 60);
    }

    #[test]
    fn power_images() {
        let p = profile_60();
        assert_eq!(
            profile_power(&p, 30),
            OrbitProfile::new(&[(1, 2), (2, 20)])
        );
        assert_eq!(
            profile_power(&p, 10),
            OrbitProfile::new(&[(1, 2), (6, 10)])
        );
        assert_eq!(profile_power(&p, 1), p);
        assert_eq!(profile_power(&p, 30).dimension(), 22);
    }

    #[test]
    fn traces() {
        let p = profile_60();
        assert_eq!(profile_trace(&p, 12), 2);
        let q = OrbitProfile::new(&[(1, 2), (10, 1), (60, 1)]);
        assert_eq!(profile_trace(&q, 30), -10);
        assert_eq!(profile_trace(&OrbitProfile::identity(22), 7), 22);
    }

    #[test]
    fn invariant_dims() {
        let p = profile_60();
        assert_eq!(invariant_dim(&p, 30), 2);
        let q = OrbitProfile::new(&[(1, 2), (10, 1), (60, 1)]);
        assert_eq!(invariant_dim(&q, 30), 6);
        assert_eq!(invariant_dim(&OrbitProfile::identity(22), 1), 22);
    }

    // test-only naive polynomial oracle, independent of char_poly's path
    fn oracle_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    #[test]
    fn char_poly_small() {
        // [1, 1] -> x^2 - 2x + 1
        let p = OrbitProfile::new(&[(1, 2)]);
        assert_eq!(char_poly(&p), vec![1, -2, 1]);
    }

    #[test]
    fn char_poly_order_60_profile() {
        // (x-1)^2 * Phi_60 * Phi_12 via an independent expansion oracle
        let phi_60 = super::cyclotomic_poly(60);
        let phi_12 = super::cyclotomic_poly(12);
        // Phi_12 = x^4 - x^2 + 1, known closed form
        assert_eq!(phi_12, vec![1, 0, -1, 0, 1]);
        let mut expect = oracle_mul(&[1, -1], &[1, -1]);
        expect = oracle_mul(&expect, &phi_60);
        expect = oracle_mul(&expect, &phi_12);
        let got = char_poly(&profile_60());
        assert_eq!(got, expect);
        assert_eq!(got.len(), 23);
    }

    #[test]
    fn char_poly_binomial_expansion() {
        // (x+1)^8 (x-1)^14 via binomial-coefficient oracle
        let p = OrbitProfile::new(&[(2, 8), (1, 14)]);
        let mut expect = vec![1i64];
        for _ in 0..8 {
            expect = oracle_mul(&expect, &[1, 1]);
        }
        for _ in 0..14 {
            expect = oracle_mul(&expect, &[-1, 1]);
        }
        assert_eq!(char_poly(&p), expect);
    }
}
