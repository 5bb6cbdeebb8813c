//! Cyclic quotient-singularity resolution data for order 5, the canonical
//! self-intersection count on the resolved quotient, and the fractional
//! intersection-number integrality scan.
//!
//! Only the two order-5 singularity types that occur on the quotient by a
//! non-symplectic order-5 action are tabulated; the labels are opaque keys.

use num_rational::Rational64;
use num_traits::Zero;

use crate::{Error, Result};

/// Resolution data of a cyclic quotient singularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityType {
    pub label: String,
    /// Number of exceptional curves of the minimal resolution.
    pub exceptional_curves: u64,
    /// K_Y · D_p for the discrepancy divisor D_p of the point.
    pub kd: Rational64,
    /// Possible values of D_p · C' for the proper transform of a fixed curve
    /// through the point.
    pub curve_contributions: Vec<Rational64>,
}

/// Table lookup by label. Known labels: `1/5(3,3)`, `1/5(2,4)`, `smooth`.
pub fn resolution_data(label: &str) -> Result<SingularityType> {
    let (exceptional_curves, kd, contributions) = match label {
        "1/5(3,3)" => (1, Rational64::new(9, 5), vec![Rational64::new(3, 5)]),
        "1/5(2,4)" => (
            2,
            Rational64::new(2, 5),
            vec![Rational64::new(1, 5), Rational64::new(2, 5)],
        ),
        "smooth" => (0, Rational64::zero(), vec![Rational64::zero()]),
        _ => return Err(Error::UnknownSingularity(label.to_string())),
    };
    Ok(SingularityType {
        label: label.to_string(),
        exceptional_curves,
        kd,
        curve_contributions: contributions,
    })
}

/// Solve for the number of singular points of each type on a quotient with
/// numerically trivial canonical class upstairs.
///
/// The system is Σ counts = `total_points` together with the two evaluations
/// of K_Y² on the minimal resolution: 10 − (ρ' + Σ count·exceptional) and
/// −Σ count·(K_Y·D_p) must agree. Returns the counts in the order of
/// `types`; errors when no nonnegative integer solution exists.
pub fn solve_counts(
    rho_quotient: i64,
    types: &[SingularityType],
    total_points: u64,
) -> Result<Vec<u64>> {
    let mut solution = None;
    let mut counts = vec![0u64; types.len()];
    if search_counts(rho_quotient, types, total_points, 0, &mut counts, &mut solution) {
        Ok(solution.unwrap())
    } else {
        Err(Error::InfeasibleCounts)
    }
}

fn search_counts(
    rho_quotient: i64,
    types: &[SingularityType],
    left: u64,
    idx: usize,
    counts: &mut Vec<u64>,
    solution: &mut Option<Vec<u64>>,
) -> bool {
    if idx == types.len() {
        if left != 0 {
            return false;
        }
        let rho_y: i64 = rho_quotient
            + types
                .iter()
                .zip(counts.iter())
                .map(|(t, &c)| (t.exceptional_curves * c) as i64)
                .sum::<i64>();
        let k_squared_picard = Rational64::from_integer(10 - rho_y);
        let k_squared_discrepancy: Rational64 = -types
            .iter()
            .zip(counts.iter())
            .map(|(t, &c)| t.kd * Rational64::from_integer(c as i64))
            .sum::<Rational64>();
        if k_squared_picard == k_squared_discrepancy {
            *solution = Some(counts.clone());
            return true;
        }
        return false;
    }
    for c in 0..=left {
        counts[idx] = c;
        if search_counts(rho_quotient, types, left - c, idx + 1, counts, solution) {
            return true;
        }
    }
    counts[idx] = 0;
    false
}

/// For each curve, the set of possible values of K_Y·C' = −Σ (one
/// contribution per singular point on the curve), and whether the set
/// contains no integer (a contradiction, since an intersection number of
/// divisors on a smooth surface is an integer).
pub fn integrality_scan(
    curve_points: &[(String, Vec<SingularityType>)],
) -> Vec<(String, Vec<Rational64>, bool)> {
    curve_points
        .iter()
        .map(|(curve, types)| {
            let mut values = vec![Rational64::zero()];
            for t in types {
                let mut next = Vec::new();
                for v in &values {
                    for c in &t.curve_contributions {
                        next.push(*v - *c);
                    }
                }
                values = next;
            }
            values.sort();
            values.dedup();
            let contradiction = !values.iter().any(|v| v.is_integer());
            (curve.clone(), values, contradiction)
        })
        .collect()
}

/// Render a value set the way certificates record it: ascending, joined by
/// commas.
pub fn render_value_set(values: &[Rational64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The full pigeonhole scan for four fixed points, one of type 1/5(3,3) and
/// three of type 1/5(2,4), split two-and-two over the curves `R` and `C10`.
///
/// There are two assignments (the 1/5(3,3) point sits on `R` or on `C10`);
/// each returns the per-curve value sets and contradiction flags. In both
/// assignments one curve carries two 1/5(2,4) points and its value set
/// contains no integer.
pub fn claim8_scan() -> Result<Vec<(String, Vec<(String, String, bool)>)>> {
    let heavy = resolution_data("1/5(3,3)")?;
    let light = resolution_data("1/5(2,4)")?;
    let mut out = Vec::new();
    for heavy_on_r in [true, false] {
        let (r_types, c_types) = if heavy_on_r {
            (
                vec![heavy.clone(), light.clone()],
                vec![light.clone(), light.clone()],
            )
        } else {
            (
                vec![light.clone(), light.clone()],
                vec![heavy.clone(), light.clone()],
            )
        };
        let label = format!(
            "R:{{{}}} C10:{{{}}}",
            r_types
                .iter()
                .map(|t| t.label.as_str())
                .collect::<Vec<_>>()
                .join(","),
            c_types
                .iter()
                .map(|t| t.label.as_str())
                .collect::<Vec<_>>()
                .join(",")
        );
        let scan = integrality_scan(&[
            ("R".to_string(), r_types),
            ("C10".to_string(), c_types),
        ]);
        let verdicts = scan
            .into_iter()
            .map(|(curve, values, contradiction)| {
                (curve, render_value_set(&values), contradiction)
            })
            .collect();
        out.push((label, verdicts));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let heavy = resolution_data("1/5(3,3)").unwrap();
        assert_eq!(heavy.exceptional_curves, 1);
        assert_eq!(heavy.kd, Rational64::new(9, 5));
        assert_eq!(heavy.curve_contributions, vec![Rational64::new(3, 5)]);

        let light = resolution_data("1/5(2,4)").unwrap();
        assert_eq!(light.exceptional_curves, 2);
        assert_eq!(light.kd, Rational64::new(2, 5));
        assert_eq!(
            light.curve_contributions,
            vec![Rational64::new(1, 5), Rational64::new(2, 5)]
        );

        let smooth = resolution_data("smooth").unwrap();
        assert_eq!(smooth.exceptional_curves, 0);
        assert_eq!(smooth.kd, Rational64::zero());

        assert!(resolution_data("1/7(1,3)").is_err());
    }

    fn both_types() -> Vec<SingularityType> {
        vec![
            resolution_data("1/5(3,3)").unwrap(),
            resolution_data("1/5(2,4)").unwrap(),
        ]
    }

    #[test]
    fn counts_for_quotient_picard_six() {
        let counts = solve_counts(6, &both_types(), 4).unwrap();
        assert_eq!(counts, vec![1, 3]);
    }

    #[test]
    fn counts_infeasible_for_wrong_picard() {
        assert!(matches!(
            solve_counts(5, &both_types(), 4),
            Err(Error::InfeasibleCounts)
        ));
    }

    #[test]
    fn counts_trivial_case() {
        let counts = solve_counts(10, &[], 0).unwrap();
        assert!(counts.is_empty());
    }

    #[test]
    fn counts_satisfy_both_expressions() {
        let types = both_types();
        let counts = solve_counts(6, &types, 4).unwrap();
        let rho_y: i64 = 6 + counts
            .iter()
            .zip(types.iter())
            .map(|(&c, t)| (c * t.exceptional_curves) as i64)
            .sum::<i64>();
        let lhs = Rational64::from_integer(10 - rho_y);
        let rhs: Rational64 = -types
            .iter()
            .zip(counts.iter())
            .map(|(t, &c)| t.kd * Rational64::from_integer(c as i64))
            .sum::<Rational64>();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Rational64::from_integer(-3));
    }

    #[test]
    fn two_light_points_on_a_curve_contradict() {
        let light = resolution_data("1/5(2,4)").unwrap();
        let scan = integrality_scan(&[("R".to_string(), vec![light.clone(), light])]);
        let (curve, values, contradiction) = &scan[0];
        assert_eq!(curve, "R");
        assert_eq!(
            values,
            &vec![
                Rational64::new(-4, 5),
                Rational64::new(-3, 5),
                Rational64::new(-2, 5)
            ]
        );
        assert!(*contradiction);
    }

    #[test]
    fn smooth_curve_has_no_contradiction() {
        let scan = integrality_scan(&[("F".to_string(), vec![])]);
        assert_eq!(scan[0].1, vec![Rational64::zero()]);
        assert!(!scan[0].2);
    }

    #[test]
    fn heavy_plus_light_curve_reaches_an_integer() {
        // -(3/5 + 2/5) = -1 is an integer, so no contradiction from the
        // curve carrying the 1/5(3,3) point
        let scan = integrality_scan(&[(
            "R".to_string(),
            vec![
                resolution_data("1/5(3,3)").unwrap(),
                resolution_data("1/5(2,4)").unwrap(),
            ],
        )]);
        assert!(!scan[0].2);
        assert!(scan[0].1.contains(&Rational64::from_integer(-1)));
    }

    #[test]
    fn full_scan_is_a_pigeonhole() {
        let scan = claim8_scan().unwrap();
        assert_eq!(scan.len(), 2);
        for (assignment, verdicts) in &scan {
            // in every assignment some curve carries two 1/5(2,4) points and
            // contradicts with the expected value set
            let contradicting: Vec<_> = verdicts.iter().filter(|(_, _, c)| *c).collect();
            assert!(
                !contradicting.is_empty(),
                "assignment {assignment} has no contradiction"
            );
            for (_, set, _) in &contradicting {
                assert_eq!(set, "-4/5,-3/5,-2/5");
            }
        }
    }
}
