//! Machine-checkable elimination certificates.
//!
//! A certificate is a tree: each node carries the profile under analysis, a
//! list of recorded rule applications, and child certificates for case
//! splits. A node is `eliminated` exactly when a contradiction closes it
//! directly or every child branch is eliminated. Every recorded value can be
//! re-derived from the profile and the recorded hypotheses, so certificates
//! can be re-checked without re-running the search.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{invariant_dim, OrbitProfile};
use crate::fixedlocus::{decompose_fixed_locus, lefschetz_euler, rh_feasible};
use crate::profiles::symplectic_profile;
use crate::singularities;
use crate::{Error, Result};

/// A value recorded in a certificate step: an exact integer or a rendered
/// exact quantity (rationals, labels).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Recorded {
    Int(i64),
    Text(String),
}

impl Recorded {
    pub fn as_int(&self) -> Option<i64> {
        match self {
            Recorded::Int(v) => Some(*v),
            Recorded::Text(_) => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            Recorded::Text(s) => Some(s),
            Recorded::Int(_) => None,
        }
    }
}

/// One recorded rule application.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: String,
    pub a: i64,
    pub values: BTreeMap<String, Recorded>,
    pub verdict: String,
}

impl Step {
    pub fn new(rule: &str, a: i64) -> Self {
        Step {
            rule: rule.to_string(),
            a,
            values: BTreeMap::new(),
            verdict: "ok".to_string(),
        }
    }

    pub fn val(mut self, key: &str, v: i64) -> Self {
        self.values.insert(key.to_string(), Recorded::Int(v));
        self
    }

    pub fn text(mut self, key: &str, v: &str) -> Self {
        self.values
            .insert(key.to_string(), Recorded::Text(v.to_string()));
        self
    }

    pub fn contradiction(mut self, name: &str) -> Self {
        self.verdict = format!("contradiction({name})");
        self
    }

    pub fn split(mut self) -> Self {
        self.verdict = "split".to_string();
        self
    }

    pub fn is_contradiction(&self) -> bool {
        self.verdict.starts_with("contradiction")
    }

    pub fn int(&self, key: &str) -> Option<i64> {
        self.values.get(key).and_then(Recorded::as_int)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateStatus {
    Eliminated,
    Survives,
}

/// Tree of case splits and rule applications ending in contradictions or
/// survival.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub profile: String,
    pub status: CertificateStatus,
    pub steps: Vec<Step>,
    pub branches: Vec<Certificate>,
}

impl Certificate {
    pub fn new(profile: &OrbitProfile) -> Self {
        Certificate {
            profile: profile.to_string(),
            status: CertificateStatus::Survives,
            steps: Vec::new(),
            branches: Vec::new(),
        }
    }

    pub fn push(&mut self, step: Step) -> &mut Self {
        self.steps.push(step);
        self
    }

    /// Push a step and report whether it closed this node.
    pub fn push_checked(&mut self, step: Step) -> bool {
        let closed = step.is_contradiction();
        self.steps.push(step);
        closed
    }

    /// Recompute the status bottom-up: a node is eliminated when one of its
    /// own steps is a contradiction, or when it has branches and all of them
    /// are eliminated.
    pub fn finalize(&mut self) {
        for b in &mut self.branches {
            b.finalize();
        }
        let direct = self.steps.iter().any(Step::is_contradiction);
        let branched = !self.branches.is_empty()
            && self
                .branches
                .iter()
                .all(|b| b.status == CertificateStatus::Eliminated);
        self.status = if direct || branched {
            CertificateStatus::Eliminated
        } else {
            CertificateStatus::Survives
        };
    }

    pub fn is_eliminated(&self) -> bool {
        self.status == CertificateStatus::Eliminated
    }

    /// Leaf certificates that survive, depth-first.
    pub fn surviving_leaves(&self) -> Vec<&Certificate> {
        let mut out = Vec::new();
        self.collect_survivors(&mut out);
        out
    }

    fn collect_survivors<'a>(&'a self, out: &mut Vec<&'a Certificate>) {
        if self.is_eliminated() {
            return;
        }
        if self.branches.is_empty() {
            out.push(self);
            return;
        }
        for b in &self.branches {
            b.collect_survivors(out);
        }
    }

    /// Depth-first iterator over all steps of the tree, with the profile in
    /// force at each step.
    pub fn walk_steps(&self) -> Vec<(&str, &Step)> {
        let mut out = Vec::new();
        self.walk_into(&mut out);
        out
    }

    fn walk_into<'a>(&'a self, out: &mut Vec<(&'a str, &'a Step)>) {
        for s in &self.steps {
            out.push((self.profile.as_str(), s));
        }
        for b in &self.branches {
            b.walk_into(out);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::CheckFailed {
            rule: "parse".to_string(),
            a: 0,
            detail: e.to_string(),
        })
    }

    /// Re-execute every recorded step against the profile it was recorded
    /// for and verify the recorded values and verdicts exactly, including the
    /// bottom-up status computation.
    pub fn check(&self) -> Result<()> {
        self.check_node()?;
        let mut copy = self.clone();
        copy.finalize();
        if copy.status != self.status {
            return Err(Error::CheckFailed {
                rule: "status".to_string(),
                a: 0,
                detail: format!(
                    "recorded status {:?} does not match recomputed {:?}",
                    self.status, copy.status
                ),
            });
        }
        Ok(())
    }

    fn check_node(&self) -> Result<()> {
        let profile: OrbitProfile = self.profile.parse()?;
        for step in &self.steps {
            verify_step(&profile, step)?;
        }
        for b in &self.branches {
            b.check_node()?;
        }
        Ok(())
    }
}

fn check_err(step: &Step, detail: String) -> Error {
    Error::CheckFailed {
        rule: step.rule.clone(),
        a: step.a,
        detail,
    }
}

fn require_int(step: &Step, key: &str) -> Result<i64> {
    step.int(key)
        .ok_or_else(|| check_err(step, format!("missing integer value `{key}`")))
}

fn expect_verdict(step: &Step, should_contradict: bool) -> Result<()> {
    if step.is_contradiction() != should_contradict {
        return Err(check_err(
            step,
            format!(
                "verdict `{}` does not match re-derived outcome (contradiction = {})",
                step.verdict, should_contradict
            ),
        ));
    }
    Ok(())
}

/// Re-derive a single recorded step from the profile and its recorded
/// hypotheses.
pub fn verify_step(profile: &OrbitProfile, step: &Step) -> Result<()> {
    match step.rule.as_str() {
        "R-euler" => {
            let e = require_int(step, "e")?;
            let recomputed = lefschetz_euler(profile, step.a)
                .map_err(|err| check_err(step, err.to_string()))?;
            if recomputed != e {
                return Err(check_err(
                    step,
                    format!("recorded e = {e}, recomputed {recomputed}"),
                ));
            }
            Ok(())
        }
        "R-pointsign" => {
            let e = require_int(step, "e")?;
            let recomputed = lefschetz_euler(profile, step.a)
                .map_err(|err| check_err(step, err.to_string()))?;
            if recomputed != e {
                return Err(check_err(
                    step,
                    format!("recorded e = {e}, recomputed {recomputed}"),
                ));
            }
            expect_verdict(step, e < 0)
        }
        "R-subset" => {
            // either a window bound on e(g^a), or monotonicity of point
            // counts along divisibility
            if step.values.contains_key("hi") {
                let e = require_int(step, "e")?;
                let lo = step.int("lo").unwrap_or(0);
                let hi = require_int(step, "hi")?;
                let recomputed = lefschetz_euler(profile, step.a)
                    .map_err(|err| check_err(step, err.to_string()))?;
                if recomputed != e {
                    return Err(check_err(
                        step,
                        format!("recorded e = {e}, recomputed {recomputed}"),
                    ));
                }
                expect_verdict(step, e < lo || e > hi)
            } else {
                let pts_small = require_int(step, "pts_small")?;
                let pts_large = require_int(step, "pts_large")?;
                for (e_key, k_key, pts) in [
                    ("e_small", "k_small", pts_small),
                    ("e_large", "k_large", pts_large),
                ] {
                    if let Some(k) = step.int(k_key) {
                        let e = require_int(step, e_key)?;
                        if e - 2 * k != pts {
                            return Err(check_err(
                                step,
                                format!("{e_key} - 2*{k_key} != recorded point count {pts}"),
                            ));
                        }
                    }
                }
                expect_verdict(step, pts_small > pts_large)
            }
        }
        "R-p1" => {
            let e = require_int(step, "e")?;
            let preserved = require_int(step, "preserved")?;
            let exact = step.int("exact").unwrap_or(0) == 1;
            let bad = if exact {
                e != 2 * preserved
            } else {
                e - 2 * preserved < 0
            };
            expect_verdict(step, bad)
        }
        "R-rh" => {
            let n = require_int(step, "n")?;
            let genus = require_int(step, "genus")?;
            let fixed = require_int(step, "fixed")?;
            if n < 2 || genus < 0 || fixed < 0 {
                return Err(check_err(step, "out-of-range Riemann-Hurwitz data".into()));
            }
            let feasible = rh_feasible(n as u64, genus as u64, fixed as u64);
            expect_verdict(step, !feasible)
        }
        "R-curvecount" => {
            let max_curves = require_int(step, "max_curves")?;
            let recomputed = invariant_dim(profile, step.a) as i64;
            if recomputed != max_curves {
                return Err(check_err(
                    step,
                    format!("recorded bound {max_curves}, recomputed {recomputed}"),
                ));
            }
            Ok(())
        }
        "R-structure" => {
            if let (Some(e), Some(max_curves), Some(models)) = (
                step.int("e"),
                step.int("max_curves"),
                step.int("models"),
            ) {
                let recomputed =
                    decompose_fixed_locus(e, max_curves.max(0) as u64, false, true).len() as i64;
                if recomputed != models {
                    return Err(check_err(
                        step,
                        format!("recorded {models} models, recomputed {recomputed}"),
                    ));
                }
                return expect_verdict(step, models == 0);
            }
            // curve-status steps: neither `C fixed` nor `C free` is
            // consistent at this exponent
            if let (Some(e), Some(preserved), Some(genus)) =
                (step.int("e"), step.int("preserved"), step.int("genus"))
            {
                let fixed_ok = e == 2 - 2 * genus + 2 * preserved;
                let free_ok = e - 2 * preserved >= 0;
                return expect_verdict(step, !fixed_ok && !free_ok);
            }
            Ok(())
        }
        "R-symplectic" => {
            let m = require_int(step, "m")?;
            let f = require_int(step, "f")?;
            let datum =
                symplectic_profile(m as u64).map_err(|err| check_err(step, err.to_string()))?;
            if datum.fixed_points as i64 != f {
                return Err(check_err(
                    step,
                    format!("recorded f = {f}, table gives {}", datum.fixed_points),
                ));
            }
            Ok(())
        }
        "R-coprime" => Ok(()),
        "R-fibercount" => {
            // a + 2b = 24 and 2 + a + b = e(g^10)
            let a = require_int(step, "nodal")?;
            let b = require_int(step, "cuspidal")?;
            let e10 = require_int(step, "e10")?;
            if a + 2 * b != 24 || 2 + a + b != e10 {
                return Err(check_err(
                    step,
                    format!("(a, b) = ({a}, {b}) does not solve a+2b=24, 2+a+b={e10}"),
                ));
            }
            Ok(())
        }
        "R-baseorbit" => {
            // base action order: every orbit length >= 3 below the action
            // order would pin >= 3 points of P1, so lengths are 1, 2 or the
            // order itself
            let order = require_int(step, "base_order")?;
            if order <= 2 || 30 % order != 0 {
                return Err(check_err(step, format!("invalid base order {order}")));
            }
            Ok(())
        }
        "R-sign" => {
            let e = require_int(step, "e")?;
            let required = require_int(step, "required")?;
            let recomputed = lefschetz_euler(profile, step.a)
                .map_err(|err| check_err(step, err.to_string()))?;
            if recomputed != e {
                return Err(check_err(
                    step,
                    format!("recorded e = {e}, recomputed {recomputed}"),
                ));
            }
            expect_verdict(step, e != required)
        }
        "R-singularity-count" => {
            let rho = require_int(step, "rho_quotient")?;
            let points = require_int(step, "points")?;
            let a = require_int(step, "a")?;
            let b = require_int(step, "b")?;
            let types = [
                singularities::resolution_data("1/5(3,3)")
                    .map_err(|err| check_err(step, err.to_string()))?,
                singularities::resolution_data("1/5(2,4)")
                    .map_err(|err| check_err(step, err.to_string()))?,
            ];
            let counts = singularities::solve_counts(rho, &types, points as u64)
                .map_err(|err| check_err(step, err.to_string()))?;
            if counts != vec![a as u64, b as u64] {
                return Err(check_err(
                    step,
                    format!("recorded (a, b) = ({a}, {b}), recomputed {counts:?}"),
                ));
            }
            Ok(())
        }
        "R-integrality" => {
            let curve = step
                .values
                .get("curve")
                .and_then(Recorded::as_text)
                .ok_or_else(|| check_err(step, "missing curve label".into()))?;
            let set = step
                .values
                .get("set")
                .and_then(Recorded::as_text)
                .ok_or_else(|| check_err(step, "missing value set".into()))?;
            let scan = singularities::claim8_scan().map_err(|err| check_err(step, err.to_string()))?;
            let hit = scan.iter().any(|(assignment, verdicts)| {
                assignment.contains(curve)
                    && verdicts
                        .iter()
                        .any(|(c, s, contra)| c == curve && s == set && *contra)
            });
            if !hit {
                return Err(check_err(
                    step,
                    format!("no contradicting assignment reproduces set {set} on {curve}"),
                ));
            }
            expect_verdict(step, true)
        }
        "case-split" | "note" => Ok(()),
        other => Err(check_err(step, format!("unknown rule `{other}`"))),
    }
}
