//! Admissible eigenvalue profiles for a given order signature.
//!
//! An automorphism of total order N = m·n acts on the regular 2-form through
//! a cyclic group of order n; the kernel of that action has order m. We write
//! the signature as `m.n`. For 2 ≤ m ≤ 8 the eigenvalue profile of the
//! symplectic part is pinned by a fixed table; enumeration produces every
//! integrality-admissible profile of dimension 22 compatible with the
//! signature.

use std::fmt;
use std::str::FromStr;

use crate::cyclotomic::{divisors, euler_phi, profile_power, profile_trace, OrbitProfile};
use crate::{Error, Result};

/// The pair `m.n`: symplectic kernel order m, non-symplectic image order n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderSignature {
    pub m: u64,
    pub n: u64,
}

impl OrderSignature {
    pub fn new(m: u64, n: u64) -> Self {
        assert!(m >= 1 && n >= 1);
        OrderSignature { m, n }
    }

    /// Total order N = m·n.
    pub fn total(&self) -> u64 {
        self.m * self.n
    }
}

impl fmt::Display for OrderSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.m, self.n)
    }
}

impl FromStr for OrderSignature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (m, n) = s
            .split_once('.')
            .ok_or_else(|| Error::BadSignature(s.to_string()))?;
        let m: u64 = m.parse().map_err(|_| Error::BadSignature(s.to_string()))?;
        let n: u64 = n.parse().map_err(|_| Error::BadSignature(s.to_string()))?;
        if m == 0 || n == 0 {
            return Err(Error::BadSignature(s.to_string()));
        }
        Ok(OrderSignature { m, n })
    }
}

/// A row of the symplectic table: the eigenvalue profile on H² of a tame
/// symplectic automorphism of order m, together with its fixed-point count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticDatum {
    pub order: u64,
    pub profile: OrbitProfile,
    pub fixed_points: u64,
}

/// The eigenvalue profile of a tame symplectic automorphism of order
/// m ∈ [2, 8]. The table is exhaustive: fixed-point counts are
/// (2,8), (3,6), (4,4), (5,4), (6,2), (7,3), (8,2), and no tame symplectic
/// automorphism of order > 8 exists.
pub fn symplectic_profile(m: u64) -> Result<SymplecticDatum> {
    let entries: &[(u64, u64)] = match m {
        2 => &[(1, 14), (2, 8)],
        3 => &[(1, 10), (3, 6)],
        4 => &[(1, 8), (2, 6), (4, 4)],
        5 => &[(1, 6), (5, 4)],
        6 => &[(1, 6), (2, 4), (3, 4), (6, 2)],
        7 => &[(1, 4), (7, 3)],
        8 => &[(1, 4), (2, 4), (4, 3), (8, 2)],
        _ => return Err(Error::NoSymplecticOrder(m)),
    };
    let profile = OrbitProfile::new(entries);
    debug_assert_eq!(profile.dimension(), 22);
    let fixed_points = (2 + profile_trace(&profile, 1)) as u64;
    Ok(SymplecticDatum {
        order: m,
        profile,
        fixed_points,
    })
}


/// Enumerate all admissible eigenvalue profiles of the given dimension for an
/// order signature.
///
/// Every returned profile (a) contains the trivial orbit at least once (the
/// class of an invariant ample divisor), (b) contains the full orbit of order
/// n at least once, and (c), when 2 ≤ m ≤ 8, powers under n to the symplectic
/// profile of order m. Orbit orders are restricted to divisors of N = m·n.
/// Output is duplicate-free and sorted lexicographically by serialization.
pub fn enumerate_profiles(signature: OrderSignature, dim: u64) -> Result<Vec<OrbitProfile>> {
    if dim != 22 {
        return Err(Error::WrongDimension(dim, 22));
    }
    let m = signature.m;
    let n = signature.n;
    if m != 1 && !(2..=8).contains(&m) {
        return Err(Error::UnsupportedKernel(m));
    }
    let total = signature.total();
    let divs = divisors(total);
    let symplectic = if m >= 2 {
        Some(symplectic_profile(m)?.profile)
    } else {
        None
    };

    // seed with the forced orbits, then fill the residual dimension with
    // orbits of any divisor order
    let seed = if n == 1 {
        vec![(1u64, 1u64)]
    } else {
        vec![(1u64, 1u64), (n, 1u64)]
    };
    let seed_dim: u64 = seed.iter().map(|&(d, r)| r * euler_phi(d)).sum();
    if seed_dim > dim {
        return Ok(Vec::new());
    }
    let residual = dim - seed_dim;

    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(&divs, 0, residual, &mut stack, &mut |extra| {
        let mut entries = seed.clone();
        entries.extend_from_slice(extra);
        let p = OrbitProfile::new(&entries);
        if let Some(sym) = &symplectic {
            if &profile_power(&p, n as i64) != sym {
                return;
            }
        }
        out.push(p);
    });
    out.sort_by_key(|p| p.to_string());
    out.dedup();
    Ok(out)
}

/// Fill `remaining` dimensions with orbits drawn from `divs[from..]`,
/// non-decreasing in order so each multiset is produced exactly once.
fn fill(
    divs: &[u64],
    from: usize,
    remaining: u64,
    stack: &mut Vec<(u64, u64)>,
    emit: &mut impl FnMut(&[(u64, u64)]),
) {
    if remaining == 0 {
        emit(stack);
        return;
    }
    for (i, &d) in divs.iter().enumerate().skip(from) {
        let phi = euler_phi(d);
        if phi > remaining {
            continue;
        }
        stack.push((d, 1));
        fill(divs, i, remaining - phi, stack, emit);
        stack.pop();
    }
}

/// Feasibility of a non-symplectic order N in characteristic p (p = 0 for
/// the complex case): p must not divide N, N ≠ 60, and φ(N) ≤ 20.
pub fn nonsymplectic_order_feasible(p: u64, n: u64) -> bool {
    debug_assert!(p == 0 || is_prime(p), "p must be 0 or prime");
    let tame = p == 0 || n % p != 0;
    tame && n != 60 && euler_phi(n) <= 20
}

/// All feasible non-symplectic orders up to `max`, ascending.
pub fn feasible_orders(p: u64, max: u64) -> Vec<u64> {
    (1..=max)
        .filter(|&n| nonsymplectic_order_feasible(p, n))
        .collect()
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::char_poly;

    #[test]
    fn signature_parsing() {
        let s: OrderSignature = "1.60".parse().unwrap();
        assert_eq!((s.m, s.n), (1, 60));
        assert_eq!(s.total(), 60);
        assert_eq!(s.to_string(), "1.60");
        assert!("60".parse::<OrderSignature>().is_err());
        assert!("0.5".parse::<OrderSignature>().is_err());
    }

    #[test]
    fn symplectic_table() {
        let expected_fixed = [(2, 8), (3, 6), (4, 4), (5, 4), (6, 2), (7, 3), (8, 2)];
        for (m, f) in expected_fixed {
            let datum = symplectic_profile(m).unwrap();
            assert_eq!(datum.fixed_points, f, "order {m}");
            assert_eq!(datum.profile.dimension(), 22);
        }
        let five = symplectic_profile(5).unwrap();
        assert_eq!(five.profile, OrbitProfile::new(&[(1, 6), (5, 4)]));
        let two = symplectic_profile(2).unwrap();
        assert_eq!(two.profile, OrbitProfile::new(&[(1, 14), (2, 8)]));
        assert!(symplectic_profile(9).is_err());
        assert!(symplectic_profile(1).is_err());
    }

    // independent enumeration oracle: brute-force over multiplicity vectors
    fn oracle_enumerate_1_60() -> Vec<OrbitProfile> {
        let divs = [1u64, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60];
        let mut found = Vec::new();
        // multiplicity of each divisor is at most 22/phi(d)
        fn rec(divs: &[u64], idx: usize, left: u64, current: &mut Vec<(u64, u64)>, out: &mut Vec<OrbitProfile>) {
            if idx == divs.len() {
                if left == 0 {
                    let p = OrbitProfile::new(current);
                    if p.contains_order(1) && p.contains_order(60) {
                        out.push(p);
                    }
                }
                return;
            }
            let phi = euler_phi(divs[idx]);
            let max_r = left / phi;
            for r in 0..=max_r {
                if r > 0 {
                    current.push((divs[idx], r));
                }
                rec(divs, idx + 1, left - r * phi, current, out);
                if r > 0 {
                    current.pop();
                }
            }
        }
        rec(&divs, 0, 22, &mut Vec::new(), &mut found);
        found.sort_by_key(|p| p.to_string());
        found
    }

    #[test]
    fn enumerate_1_60_matches_oracle() {
        let sig = OrderSignature::new(1, 60);
        let got = enumerate_profiles(sig, 22).unwrap();
        let oracle = oracle_enumerate_1_60();
        assert_eq!(got, oracle);
        assert_eq!(got.len(), 36);
        let a: OrbitProfile = "1^2 12^1 60^1".parse().unwrap();
        let b: OrbitProfile = "1^1 2^1 10^1 60^1".parse().unwrap();
        assert!(got.contains(&a));
        assert!(got.contains(&b));
    }

    #[test]
    fn enumerate_5_12_contains_survivor() {
        let sig = OrderSignature::new(5, 12);
        let got = enumerate_profiles(sig, 22).unwrap();
        let survivor: OrbitProfile = "1^2 12^1 60^1".parse().unwrap();
        assert!(got.contains(&survivor));
        assert_eq!(got.len(), 42);
        let five = symplectic_profile(5).unwrap().profile;
        for p in &got {
            assert_eq!(profile_power(p, 12), five, "{p}");
            assert!(p.contains_order(12));
            assert_eq!(p.dimension(), 22);
        }
    }

    #[test]
    fn enumerate_trivial_signature() {
        let got = enumerate_profiles(OrderSignature::new(1, 1), 22).unwrap();
        assert_eq!(got, vec![OrbitProfile::identity(22)]);
    }

    #[test]
    fn enumerated_profiles_have_integer_char_poly() {
        let got = enumerate_profiles(OrderSignature::new(1, 60), 22).unwrap();
        for p in &got {
            let cp = char_poly(p);
            assert_eq!(cp.len(), 23);
            assert_eq!(*cp.last().unwrap(), 1);
        }
    }

    #[test]
    fn unsupported_kernel_is_rejected() {
        assert!(enumerate_profiles(OrderSignature::new(9, 2), 22).is_err());
    }

    #[test]
    fn order_feasibility() {
        assert!(!nonsymplectic_order_feasible(7, 60));
        assert!(!nonsymplectic_order_feasible(7, 14));
        assert!(nonsymplectic_order_feasible(13, 66));
        assert!(!nonsymplectic_order_feasible(0, 60));
        assert!(nonsymplectic_order_feasible(0, 66));
    }

    #[test]
    fn max_feasible_order_is_66() {
        // oracle scan: nothing beyond 66 passes the totient bound
        let max = (1..=10_000u64)
            .filter(|&n| nonsymplectic_order_feasible(0, n))
            .max()
            .unwrap();
        assert_eq!(max, 66);
    }

    #[test]
    fn feasible_orders_scan() {
        let orders = feasible_orders(7, 100);
        assert!(!orders.contains(&60));
        assert!(orders.contains(&66));
        assert!(orders.iter().all(|n| n % 7 != 0));
    }
}
