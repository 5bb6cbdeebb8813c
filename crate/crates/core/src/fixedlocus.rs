//! Fixed-locus bookkeeping: Lefschetz Euler numbers, decomposition
//! hypotheses, Riemann–Hurwitz feasibility and orbit partitions.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{profile_trace, OrbitProfile};
use crate::{Error, Result};

/// Role tag for a fixed curve inside a [`FixedLocusModel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveRole {
    Plain,
    Section,
    KSection(u64),
    RationalComponent,
}

/// A hypothesis for the fixed locus of a power of the automorphism: a number
/// of isolated points plus a multiset of fixed smooth curves with genera.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLocusModel {
    pub points: u64,
    /// (genus, role) per curve, sorted descending by genus.
    pub curves: Vec<(u64, CurveRole)>,
}

impl FixedLocusModel {
    pub fn new(points: u64, mut curves: Vec<(u64, CurveRole)>) -> Self {
        curves.sort_by(|a, b| b.cmp(a));
        FixedLocusModel { points, curves }
    }

    /// Euler characteristic: points + Σ (2 − 2g) over the curves.
    pub fn euler(&self) -> i64 {
        self.points as i64
            + self
                .curves
                .iter()
                .map(|&(g, _)| 2 - 2 * g as i64)
                .sum::<i64>()
    }

    /// Number of rational curves in the model.
    pub fn rational_curves(&self) -> u64 {
        self.curves.iter().filter(|&&(g, _)| g == 0).count() as u64
    }

    /// The genus of the positive-genus curve, if the model has one.
    pub fn positive_genus(&self) -> Option<u64> {
        self.curves.iter().map(|&(g, _)| g).find(|&g| g >= 1)
    }

    /// Human-readable label, e.g. `3xP1 + C8`.
    pub fn label(&self) -> String {
        let d = self.rational_curves();
        let mut parts = Vec::new();
        if self.points > 0 {
            parts.push(format!("{}pts", self.points));
        }
        if d > 0 {
            parts.push(format!("{d}xP1"));
        }
        for &(g, _) in &self.curves {
            if g >= 1 {
                parts.push(format!("C{g}"));
            }
        }
        if parts.is_empty() {
            parts.push("empty".to_string());
        }
        parts.join(" + ")
    }
}

/// Lefschetz fixed-point Euler number of the a-th power on a K3 profile:
/// 2 + Tr(g^a | H²). H⁰ and H⁴ contribute 1 each, H¹ = H³ = 0.
///
/// An exponent that is trivial on the profile (a ≡ 0 mod its order) is
/// rejected: the fixed locus of the identity is the whole surface, with Euler
/// number 24, and is not described by this formula.
pub fn lefschetz_euler(p: &OrbitProfile, a: i64) -> Result<i64> {
    let dim = p.dimension();
    if dim != 22 {
        return Err(Error::WrongDimension(dim, 22));
    }
    let order = p.order();
    if a.rem_euclid(order as i64) == 0 {
        return Err(Error::TrivialExponent(a, order));
    }
    Ok(2 + profile_trace(p, a))
}

/// Largest genus a fixed curve on a K3 can have: a single fixed curve already
/// contributes 2 − 2g to an Euler number bounded below by 2 − 22 = −20.
const GENUS_CAP: u64 = 11;

/// All fixed-locus hypotheses with the given Euler number.
///
/// `max_curves` bounds the number of curves (each fixed curve contributes an
/// invariant class, so the caller passes an invariant-dimension bound). With
/// `involution_axiom` set, the model describes the fixed locus of a
/// non-symplectic involution in odd characteristic: a disjoint union of
/// smooth curves, no isolated points, at most one curve of genus ≥ 1. Without
/// the axiom, per-curve genera are capped at 11, the K3 range.
pub fn decompose_fixed_locus(
    e: i64,
    max_curves: u64,
    allow_points: bool,
    involution_axiom: bool,
) -> Vec<FixedLocusModel> {
    let mut out = Vec::new();
    if involution_axiom {
        // d rational curves plus at most one curve of genus >= 1; no points
        for d in 0..=max_curves {
            if 2 * d as i64 == e {
                out.push(FixedLocusModel::new(
                    0,
                    vec![(0, CurveRole::RationalComponent); d as usize],
                ));
            }
            if d + 1 > max_curves {
                continue;
            }
            // 2d + (2 - 2g) = e
            let twice_g = 2 * d as i64 + 2 - e;
            if twice_g >= 2 && twice_g % 2 == 0 {
                let g = (twice_g / 2) as u64;
                if g <= GENUS_CAP {
                    let mut curves = vec![(0, CurveRole::RationalComponent); d as usize];
                    curves.push((g, CurveRole::Plain));
                    out.push(FixedLocusModel::new(0, curves));
                }
            }
        }
    } else {
        // multisets of genera; the point count is determined by the Euler
        // equation and must be admissible
        let mut genera = Vec::new();
        enumerate_genera(max_curves, GENUS_CAP, 0, &mut genera, &mut |gs| {
            let curve_euler: i64 = gs.iter().map(|&g| 2 - 2 * g as i64).sum();
            let points = e - curve_euler;
            if points < 0 || (!allow_points && points != 0) {
                return;
            }
            let curves = gs
                .iter()
                .map(|&g| {
                    if g == 0 {
                        (0, CurveRole::RationalComponent)
                    } else {
                        (g, CurveRole::Plain)
                    }
                })
                .collect();
            out.push(FixedLocusModel::new(points as u64, curves));
        });
    }
    out.sort_by_key(|m| (m.curves.len(), m.curves.clone(), m.points));
    out.dedup();
    out
}

fn enumerate_genera(
    max_curves: u64,
    cap: u64,
    min_genus: u64,
    stack: &mut Vec<u64>,
    emit: &mut impl FnMut(&[u64]),
) {
    emit(stack);
    if stack.len() as u64 == max_curves {
        return;
    }
    for g in min_genus..=cap {
        stack.push(g);
        enumerate_genera(max_curves, cap, g, stack, emit);
        stack.pop();
    }
}

/// Riemann–Hurwitz feasibility for a tame cyclic action of prime order n on a
/// smooth curve of genus `g_top` with `f` fixed points: true iff some integer
/// quotient genus g' ≥ 0 satisfies 2·g_top − 2 = n(2g' − 2) + f(n − 1).
pub fn rh_feasible(n: u64, g_top: u64, f: u64) -> bool {
    debug_assert!(n >= 2);
    let lhs = 2 * g_top as i64 - 2 - f as i64 * (n as i64 - 1);
    if lhs.rem_euclid(n as i64) != 0 {
        return false;
    }
    let twice_quotient = lhs / n as i64; // 2g' - 2
    twice_quotient >= -2 && twice_quotient % 2 == 0
}

/// All multisets of divisors of `group_order` summing to `d`, each sorted
/// ascending, listed in ascending lexicographic order.
pub fn orbit_partitions(d: u64, group_order: u64) -> Vec<Vec<u64>> {
    let divs: Vec<u64> = (1..=group_order).filter(|k| group_order % k == 0).collect();
    let mut out = Vec::new();
    fn rec(divs: &[u64], from: usize, left: u64, stack: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(stack.clone());
            return;
        }
        for (i, &part) in divs.iter().enumerate().skip(from) {
            if part > left {
                break;
            }
            stack.push(part);
            rec(divs, i, left - part, stack, out);
            stack.pop();
        }
    }
    rec(&divs, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile_60() -> OrbitProfile {
        OrbitProfile::new(&[(1, 2), (12, 1), (60, 1)])
    }

    #[test]
    fn lefschetz_chain() {
        let p = profile_60();
        assert_eq!(lefschetz_euler(&p, 30).unwrap(), -16);
        assert_eq!(lefschetz_euler(&p, 10).unwrap(), 14);
        assert_eq!(lefschetz_euler(&p, 12).unwrap(), 4);
        assert_eq!(lefschetz_euler(&p, 1).unwrap(), 4);
        assert!(matches!(
            lefschetz_euler(&p, 60),
            Err(Error::TrivialExponent(60, 60))
        ));
        assert!(matches!(
            lefschetz_euler(&p, 0),
            Err(Error::TrivialExponent(0, 60))
        ));
        let small = OrbitProfile::new(&[(1, 3)]);
        assert!(matches!(
            lefschetz_euler(&small, 1),
            Err(Error::WrongDimension(3, 22))
        ));
    }

    #[test]
    fn lefschetz_commutes_with_power() {
        use crate::cyclotomic::profile_power;
        let p = profile_60();
        for a in 1..60 {
            let direct = lefschetz_euler(&p, a).unwrap();
            let via_power = 2 + profile_trace(&profile_power(&p, a), 1);
            assert_eq!(direct, via_power, "a = {a}");
        }
    }

    #[test]
    fn decompose_involution_families() {
        // d rational curves plus one curve of genus d+5, d = 0..5
        let models = decompose_fixed_locus(-8, 6, false, true);
        assert_eq!(models.len(), 6);
        for (d, model) in models.iter().enumerate() {
            assert_eq!(model.points, 0);
            assert_eq!(model.rational_curves(), d as u64);
            assert_eq!(model.positive_genus(), Some(d as u64 + 5));
            assert_eq!(model.euler(), -8);
        }

        // genus 9, or a section plus a curve of genus 10
        let models = decompose_fixed_locus(-16, 2, false, true);
        assert_eq!(models.len(), 2);
        assert_eq!(models[0].positive_genus(), Some(9));
        assert_eq!(models[0].curves.len(), 1);
        assert_eq!(models[1].positive_genus(), Some(10));
        assert_eq!(models[1].rational_curves(), 1);
    }

    #[test]
    fn decompose_points_only() {
        let models = decompose_fixed_locus(4, 0, true, false);
        assert_eq!(
            models,
            vec![FixedLocusModel::new(4, vec![])]
        );
        // negative Euler number cannot be points alone
        assert!(decompose_fixed_locus(-3, 0, true, false).is_empty());
    }

    #[test]
    fn decompose_models_satisfy_euler_equation() {
        for e in [-16, -8, 0, 3, 14] {
            for model in decompose_fixed_locus(e, 4, true, false) {
                assert_eq!(model.euler(), e);
            }
            for model in decompose_fixed_locus(e, 4, false, true) {
                assert_eq!(model.euler(), e);
                assert_eq!(model.points, 0);
                let positive = model.curves.iter().filter(|&&(g, _)| g >= 1).count();
                assert!(positive <= 1);
            }
        }
    }

    #[test]
    fn rh_infeasible_cases() {
        assert!(!rh_feasible(3, 5, 16));
        assert!(!rh_feasible(2, 8, 0));
        assert!(!rh_feasible(3, 8, 13));
        // an involution of P1 fixes two points
        assert!(rh_feasible(2, 0, 2));
        assert!(rh_feasible(3, 10, 12));
        assert!(rh_feasible(2, 10, 2));
    }

    #[test]
    fn rh_matches_brute_force_oracle() {
        // oracle: search quotient genus directly
        for n in [2u64, 3, 5, 7] {
            for g_top in 0..=20u64 {
                for f in 0..=40u64 {
                    let oracle = (0..=50i64).any(|gq| {
                        2 * g_top as i64 - 2 == n as i64 * (2 * gq - 2) + f as i64 * (n as i64 - 1)
                    });
                    assert_eq!(rh_feasible(n, g_top, f), oracle, "n={n} g={g_top} f={f}");
                }
            }
        }
    }

    #[test]
    fn orbit_partition_lists() {
        assert_eq!(
            orbit_partitions(3, 60),
            vec![vec![1, 1, 1], vec![1, 2], vec![3]]
        );
        assert_eq!(orbit_partitions(0, 30), vec![Vec::<u64>::new()]);
        let parts = orbit_partitions(12, 30);
        assert!(parts.contains(&vec![1, 1, 10]));
        for p in &parts {
            assert_eq!(p.iter().sum::<u64>(), 12);
            assert!(p.iter().all(|&l| 30 % l == 0));
        }
    }
}
