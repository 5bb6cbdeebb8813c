//! The generic elimination engine.
//!
//! Given a concrete eigenvalue profile and an order signature, the engine
//! propagates the fixed-point constraints that every power of the
//! automorphism must satisfy, and either closes every case branch with a
//! named contradiction or reports survival. The search is deliberately
//! bounded and best-effort: a surviving certificate means no contradiction
//! was found with these rules, not that the profile is realized.
//!
//! Rules, in the order they fire:
//!
//! * symplectic bounds — when the symplectic kernel has order m ∈ [2, 8], the
//!   m-th table row pins `Fix(g^n)` to finitely many points, so `e(g^a)` for
//!   a | n is squeezed into `[0, f(m)]`;
//! * involution structure — when the total order is even and the kernel odd,
//!   `g^{N/2}` is a non-symplectic involution; its fixed locus is a disjoint
//!   union of smooth curves, at most one of positive genus, with at most
//!   `invariant_dim` components;
//! * per-model constraint propagation — for every orbit partition of the
//!   rational curves and every possible pointwise-fix period of the
//!   positive-genus curve, each exponent dividing N/2 must reproduce the
//!   Euler numbers from preserved rational curves (2 each) plus a
//!   nonnegative, divisibility-monotone point count on the curve, subject to
//!   Riemann–Hurwitz whenever the restricted action has prime order.

use num_integer::Integer;

use crate::certificate::{Certificate, Step};
use crate::cyclotomic::{divisors, invariant_dim, profile_power, OrbitProfile};
use crate::fixedlocus::{decompose_fixed_locus, lefschetz_euler, orbit_partitions, FixedLocusModel};
use crate::profiles::{symplectic_profile, OrderSignature};
use crate::{Error, Result};

const MAX_MODELS: usize = 12;
const MAX_PARTITION_CURVES: u64 = 6;

/// Run the engine on one profile.
pub fn eliminate(profile: &OrbitProfile, signature: OrderSignature) -> Result<Certificate> {
    if profile.dimension() != 22 {
        return Err(Error::WrongDimension(profile.dimension(), 22));
    }
    let mut cert = Certificate::new(profile);
    let n = signature.n;
    let m = signature.m;
    let total = signature.total();

    if (2..=8).contains(&m) {
        let datum = symplectic_profile(m)?;
        if profile_power(profile, n as i64) != datum.profile {
            cert.push(
                Step::new("R-symplectic", n as i64)
                    .val("m", m as i64)
                    .val("f", datum.fixed_points as i64)
                    .text("power_profile", &profile_power(profile, n as i64).to_string())
                    .contradiction("symplectic-power-mismatch"),
            );
            cert.finalize();
            return Ok(cert);
        }
        let f = datum.fixed_points as i64;
        cert.push(
            Step::new("R-symplectic", n as i64)
                .val("m", m as i64)
                .val("f", f),
        );
        for a in divisors(n) {
            if a == n {
                continue;
            }
            let e = lefschetz_euler(profile, a as i64)?;
            cert.push(Step::new("R-euler", a as i64).val("e", e));
            if e < 0 {
                cert.push(
                    Step::new("R-pointsign", a as i64)
                        .val("e", e)
                        .contradiction("negative-euler-on-finite-locus"),
                );
                cert.finalize();
                return Ok(cert);
            }
            if e > f {
                cert.push(
                    Step::new("R-subset", a as i64)
                        .val("e", e)
                        .val("lo", 0)
                        .val("hi", f)
                        .contradiction("exceeds-symplectic-fixed-points"),
                );
                cert.finalize();
                return Ok(cert);
            }
        }
    } else if m != 1 {
        return Err(Error::UnsupportedKernel(m));
    }

    // the unique involution g^{N/2} is non-symplectic iff m is odd
    if total % 2 == 0 && m % 2 == 1 {
        let half = total / 2;
        let e_half = lefschetz_euler(profile, half as i64)?;
        let exponents: Vec<u64> = divisors(half).into_iter().filter(|&a| a != half).collect();
        for &a in &exponents {
            let e = lefschetz_euler(profile, a as i64)?;
            cert.push(Step::new("R-euler", a as i64).val("e", e));
        }
        cert.push(Step::new("R-euler", half as i64).val("e", e_half));
        let max_curves = invariant_dim(profile, half as i64);
        cert.push(Step::new("R-curvecount", half as i64).val("max_curves", max_curves as i64));
        let models = decompose_fixed_locus(e_half, max_curves, false, true);
        let mut structure = Step::new("R-structure", half as i64)
            .val("e", e_half)
            .val("max_curves", max_curves as i64)
            .val("models", models.len() as i64);
        if models.is_empty() {
            structure = structure.contradiction("no-fixed-locus-model");
        } else {
            structure = structure.split();
        }
        cert.push(structure);
        if models.len() > MAX_MODELS {
            cert.push(
                Step::new("note", half as i64)
                    .text("bound", "model count exceeds the search bound; not pursued"),
            );
            cert.finalize();
            return Ok(cert);
        }
        for model in &models {
            cert.branches
                .push(analyze_model(profile, half, &exponents, model)?);
        }
    }

    cert.finalize();
    Ok(cert)
}

fn model_label(model: &FixedLocusModel) -> String {
    format!(
        "rational={:02} genus={:02}",
        model.rational_curves(),
        model.positive_genus().unwrap_or(0)
    )
}

fn analyze_model(
    profile: &OrbitProfile,
    half: u64,
    exponents: &[u64],
    model: &FixedLocusModel,
) -> Result<Certificate> {
    let mut cert = Certificate::new(profile);
    cert.push(
        Step::new("case-split", half as i64)
            .text("on", "model")
            .text("hypothesis", &model_label(model))
            .split(),
    );
    let d = model.rational_curves();
    if d > MAX_PARTITION_CURVES {
        cert.push(Step::new("note", half as i64).text(
            "bound",
            "rational-curve count exceeds the partition search bound; not pursued",
        ));
        cert.finalize();
        return Ok(cert);
    }
    for partition in orbit_partitions(d, half) {
        cert.branches
            .push(analyze_partition(profile, half, exponents, model, &partition)?);
    }
    cert.finalize();
    Ok(cert)
}

fn partition_label(partition: &[u64]) -> String {
    if partition.is_empty() {
        "none".to_string()
    } else {
        partition
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

fn analyze_partition(
    profile: &OrbitProfile,
    half: u64,
    exponents: &[u64],
    model: &FixedLocusModel,
    partition: &[u64],
) -> Result<Certificate> {
    let mut cert = Certificate::new(profile);
    cert.push(
        Step::new("case-split", half as i64)
            .text("on", "orbit-partition")
            .text("hypothesis", &partition_label(partition))
            .split(),
    );

    // preserved rational curves of g^a: orbits whose length divides a
    let preserved = |a: u64| -> i64 {
        partition
            .iter()
            .filter(|&&len| a % len == 0)
            .sum::<u64>() as i64
    };
    let euler = |a: u64| lefschetz_euler(profile, a as i64);

    match model.positive_genus() {
        None => {
            // every fixed point lies on a preserved rational curve, each of
            // which contributes exactly 2
            for &a in exponents {
                let e = euler(a)?;
                let k = preserved(a);
                if e != 2 * k {
                    cert.push(
                        Step::new("R-p1", a as i64)
                            .val("e", e)
                            .val("preserved", k)
                            .val("exact", 1)
                            .contradiction("preserved-curve-count-mismatch"),
                    );
                    break;
                }
            }
        }
        Some(genus) => {
            for s in divisors(half) {
                cert.branches.push(analyze_period(
                    profile, half, exponents, genus, s, &preserved,
                )?);
            }
        }
    }
    cert.finalize();
    Ok(cert)
}

/// Analyze the hypothesis that the positive-genus curve is fixed pointwise by
/// g^a exactly when s divides a.
fn analyze_period(
    profile: &OrbitProfile,
    half: u64,
    exponents: &[u64],
    genus: u64,
    s: u64,
    preserved: &impl Fn(u64) -> i64,
) -> Result<Certificate> {
    let mut cert = Certificate::new(profile);
    cert.push(
        Step::new("case-split", half as i64)
            .text("on", "curve-period")
            .text("hypothesis", &format!("period={s:02}"))
            .split(),
    );
    let g = genus as i64;
    let mut points: Vec<(u64, i64)> = Vec::new();
    let mut closed = false;
    for &a in exponents {
        let e = lefschetz_euler(profile, a as i64)?;
        let k = preserved(a);
        if a % s == 0 {
            // curve pointwise fixed: Euler number is forced exactly
            if e != 2 - 2 * g + 2 * k {
                closed = cert.push_checked(
                    Step::new("R-structure", a as i64)
                        .val("e", e)
                        .val("preserved", k)
                        .val("genus", g)
                        .contradiction("curve-status-infeasible"),
                );
                break;
            }
        } else {
            // curve not fixed: finitely many fixed points on it
            let pts = e - 2 * k;
            if pts < 0 {
                closed = cert.push_checked(
                    Step::new("R-p1", a as i64)
                        .val("e", e)
                        .val("preserved", k)
                        .contradiction("negative-point-count-on-curve"),
                );
                break;
            }
            points.push((a, pts));
        }
    }

    if !closed {
        // Fix(g^a) ∩ C ⊆ Fix(g^b) ∩ C whenever a | b
        'outer: for &(a, pa) in &points {
            for &(b, pb) in &points {
                if a < b && b % a == 0 && pa > pb {
                    cert.push(
                        Step::new("R-subset", b as i64)
                            .val("a_small", a as i64)
                            .val("e_small", lefschetz_euler(profile, a as i64)?)
                            .val("k_small", preserved(a))
                            .val("pts_small", pa)
                            .val("e_large", lefschetz_euler(profile, b as i64)?)
                            .val("k_large", preserved(b))
                            .val("pts_large", pb)
                            .contradiction("point-count-not-monotone"),
                    );
                    closed = true;
                    break 'outer;
                }
            }
        }
    }

    if !closed {
        // g^a and g^gcd(a, s) generate the same cyclic group on the curve
        for &(a, pa) in &points {
            let base = a.gcd(&s);
            if base == a {
                continue;
            }
            let pb = points.iter().find(|&&(x, _)| x == base).map(|&(_, p)| p);
            if let Some(pb) = pb {
                if pa != pb {
                    cert.push(
                        Step::new("R-coprime", a as i64)
                            .val("base", base as i64)
                            .val("pts", pa)
                            .val("pts_base", pb)
                            .contradiction("same-cyclic-subgroup-on-curve"),
                    );
                    closed = true;
                    break;
                }
            }
        }
    }

    if !closed {
        // restricted action of g^a on the curve has order s / gcd(s, a)
        for &(a, pts) in &points {
            let ord = s / s.gcd(&a);
            if ord >= 2 && crate::profiles::is_prime(ord) {
                let feasible = crate::fixedlocus::rh_feasible(ord, genus, pts as u64);
                let mut step = Step::new("R-rh", a as i64)
                    .val("n", ord as i64)
                    .val("genus", g)
                    .val("fixed", pts);
                if !feasible {
                    step = step.contradiction("riemann-hurwitz-infeasible");
                    cert.push(step);
                    break;
                }
                cert.push(step);
            }
        }
    }

    let _ = half;
    cert.finalize();
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::enumerate_profiles;

    fn sig(s: &str) -> OrderSignature {
        s.parse().unwrap()
    }

    #[test]
    fn order_ten_family_is_eliminated() {
        let p: OrbitProfile = "1^2 10^1 60^1".parse().unwrap();
        let cert = eliminate(&p, sig("1.60")).unwrap();
        assert!(cert.is_eliminated());
        cert.check().unwrap();
    }

    #[test]
    fn five_orbit_family_dies_by_pointsign() {
        let p: OrbitProfile = "1^2 5^4 12^1".parse().unwrap();
        let cert = eliminate(&p, sig("5.12")).unwrap();
        assert!(cert.is_eliminated());
        // e(g^6) = -4 < 0 against a finite fixed locus
        let steps = cert.walk_steps();
        let killing = steps
            .iter()
            .find(|(_, s)| s.rule == "R-pointsign" && s.is_contradiction())
            .expect("expected an R-pointsign contradiction");
        assert_eq!(killing.1.a, 6);
        assert_eq!(killing.1.int("e"), Some(-4));
        cert.check().unwrap();
    }

    #[test]
    fn survivor_profile_survives() {
        let p: OrbitProfile = "1^2 12^1 60^1".parse().unwrap();
        let cert = eliminate(&p, sig("5.12")).unwrap();
        assert!(!cert.is_eliminated());
        assert!(!cert.surviving_leaves().is_empty());
        cert.check().unwrap();
    }

    #[test]
    fn engine_eliminates_all_but_one_for_1_60() {
        let profiles = enumerate_profiles(sig("1.60"), 22).unwrap();
        let survivor: OrbitProfile = "1^2 12^1 60^1".parse().unwrap();
        let mut survivors = Vec::new();
        for p in &profiles {
            let cert = eliminate(p, sig("1.60")).unwrap();
            cert.check().unwrap();
            if !cert.is_eliminated() {
                survivors.push(p.clone());
            }
        }
        // the engine alone cannot close the surviving profile; the scripted
        // singular-quotient analysis finishes it
        assert_eq!(survivors, vec![survivor]);
    }

    #[test]
    fn engine_eliminates_all_but_one_for_5_12() {
        let profiles = enumerate_profiles(sig("5.12"), 22).unwrap();
        let survivor: OrbitProfile = "1^2 12^1 60^1".parse().unwrap();
        let mut survivors = Vec::new();
        for p in &profiles {
            let cert = eliminate(p, sig("5.12")).unwrap();
            cert.check().unwrap();
            if !cert.is_eliminated() {
                survivors.push(p.clone());
            }
        }
        assert_eq!(survivors, vec![survivor]);
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        let p = OrbitProfile::identity(21);
        assert!(matches!(
            eliminate(&p, sig("1.60")),
            Err(Error::WrongDimension(21, 22))
        ));
    }
}
