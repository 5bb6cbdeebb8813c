//! Exact-arithmetic verification engine for K3 surfaces with an order-60
//! symmetry.
//!
//! Everything here is exact: eigenvalue bookkeeping on the 22-dimensional
//! second cohomology of a K3 surface is done at the level of Galois orbits of
//! roots of unity, fixed-locus analysis uses integer Euler characteristics,
//! quotient-singularity data is exact rational arithmetic, and the
//! characteristic-p probes count points over explicit finite fields. Floating
//! point appears only in test oracles.
//!
//! The crate is organised around the steps of the verification:
//!
//! * [`cyclotomic`] — totients, Möbius sums, Ramanujan sums and
//!   [`OrbitProfile`], the multiset of Galois orbits modelling an eigenvalue
//!   list on H².
//! * [`profiles`] — enumeration of admissible profiles for an order signature
//!   `m.n` and the fixed table of symplectic eigenvalue profiles.
//! * [`fixedlocus`] — Lefschetz Euler numbers, fixed-locus decomposition,
//!   Riemann–Hurwitz feasibility and orbit partitions.
//! * [`certificate`] — machine-checkable elimination certificates.
//! * [`eliminate`] — the generic constraint-propagation engine.
//! * [`replay`] — scripted re-derivations of the individual case analyses.
//! * [`singularities`] — cyclic quotient-singularity resolution data and the
//!   fractional intersection-number scan.
//! * [`weierstrass`] — exact binary forms, discriminants, restricted Kodaira
//!   fiber classification and the distinguished order-60 surface.
//! * [`charp`] — point counting over `F_p` and `F_{p²}` and the
//!   supersingularity probes.

pub mod certificate;
pub mod charp;
pub mod cyclotomic;
pub mod eliminate;
pub mod fixedlocus;
pub mod profiles;
pub mod replay;
pub mod singularities;
pub mod weierstrass;

pub use certificate::{Certificate, CertificateStatus, Step};
pub use cyclotomic::{
    char_poly, euler_phi, invariant_dim, primitive_root_sum, profile_power, profile_trace,
    ramanujan_sum, OrbitProfile,
};
pub use fixedlocus::{
    decompose_fixed_locus, lefschetz_euler, orbit_partitions, rh_feasible, CurveRole,
    FixedLocusModel,
};
pub use profiles::{
    enumerate_profiles, feasible_orders, nonsymplectic_order_feasible, symplectic_profile,
    OrderSignature, SymplecticDatum,
};

use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("profile has dimension {0}, expected {1}")]
    WrongDimension(u64, u64),
    #[error("exponent {0} is trivial for a profile of order {1}")]
    TrivialExponent(i64, u64),
    #[error("no tame symplectic automorphism of order {0}")]
    NoSymplecticOrder(u64),
    #[error("unsupported symplectic kernel order {0}")]
    UnsupportedKernel(u64),
    #[error("cannot parse profile token `{0}`")]
    BadProfileToken(String),
    #[error("cannot parse order signature `{0}`, expected `m.n`")]
    BadSignature(String),
    #[error("unknown replay id `{0}`")]
    UnknownReplay(String),
    #[error("replay of `{id}` diverged at step `{step}`: {detail}")]
    ReplayMismatch {
        id: String,
        step: String,
        detail: String,
    },
    #[error("certificate check failed at `{rule}` (a = {a}): {detail}")]
    CheckFailed { rule: String, a: i64, detail: String },
    #[error("unknown singularity label `{0}`")]
    UnknownSingularity(String),
    #[error("no nonnegative integer solution for the singularity counts")]
    InfeasibleCounts,
    #[error("binary form has degree {0}, expected {1}")]
    BadFormDegree(usize, usize),
    #[error("discriminant vanishes identically")]
    ZeroDiscriminant,
    #[error("unsupported characteristic {0} for this operation")]
    BadCharacteristic(u64),
    #[error("Weierstrass data is non-minimal at a place (v(A) >= 4 and v(B) >= 6)")]
    NonMinimal,
    #[error("refused: {0}")]
    Refused(String),
    #[error("cannot parse field element `{0}`")]
    BadFieldElement(String),
    #[error("cannot parse field spec `{0}`, expected `Q` or `Fp:<p>`")]
    BadFieldSpec(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
