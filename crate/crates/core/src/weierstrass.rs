//! Exact binary-form arithmetic, discriminants, restricted Kodaira fiber
//! classification, invariant-form solving for diagonal actions, and the
//! construction of the order-60 surface.
//!
//! Binary forms in (t₀, t₁) are used instead of affine polynomials so the
//! place t₀ = 0 needs no special casing. Coefficients live either in the
//! rationals or in a prime field; both are exact.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Coefficient field for binary forms: exact, with a runtime context (the
/// prime for F_p, nothing for Q).
pub trait FormField: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Ctx: Clone + PartialEq + fmt::Debug;

    fn characteristic(ctx: &Self::Ctx) -> u64;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, v: i64) -> Self;
    fn parse(ctx: &Self::Ctx, s: &str) -> Result<Self>;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

/// A rational coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Rat(pub BigRational);

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FormField for Rat {
    type Ctx = ();

    fn characteristic(_: &()) -> u64 {
        0
    }
    fn zero(_: &()) -> Self {
        Rat(BigRational::zero())
    }
    fn one(_: &()) -> Self {
        Rat(BigRational::one())
    }
    fn from_int(_: &(), v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }
    fn parse(_: &(), s: &str) -> Result<Self> {
        let parse_int = |t: &str| -> Result<BigInt> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::BadFieldElement(s.to_string()))
        };
        match s.split_once('/') {
            Some((num, den)) => {
                let den = parse_int(den)?;
                if Zero::is_zero(&den) {
                    return Err(Error::BadFieldElement(s.to_string()));
                }
                Ok(Rat(BigRational::new(parse_int(num)?, den)))
            }
            None => Ok(Rat(BigRational::from_integer(parse_int(s)?))),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(&self.0) {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.0)
    }
}

/// An element of a prime field F_p, carried with its modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fp {
    pub value: u64,
    pub p: u64,
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl FormField for Fp {
    type Ctx = u64;

    fn characteristic(ctx: &u64) -> u64 {
        *ctx
    }
    fn zero(ctx: &u64) -> Self {
        Fp { value: 0, p: *ctx }
    }
    fn one(ctx: &u64) -> Self {
        Fp {
            value: 1 % *ctx,
            p: *ctx,
        }
    }
    fn from_int(ctx: &u64, v: i64) -> Self {
        let p = *ctx as i128;
        Fp {
            value: (v as i128).rem_euclid(p) as u64,
            p: *ctx,
        }
    }
    fn parse(ctx: &u64, s: &str) -> Result<Self> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::BadFieldElement(s.to_string()))?;
        Ok(Self::from_int(ctx, v))
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            value: (self.value + rhs.value) % self.p,
            p: self.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            value: (self.value + self.p - rhs.value) % self.p,
            p: self.p,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            value: (self.value as u128 * rhs.value as u128 % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(Fp {
                value: mod_pow(self.value, self.p - 2, self.p),
                p: self.p,
            })
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

/// A homogeneous binary form of fixed degree. The coefficient of
/// t₀^(deg−j)·t₁^j sits at index j. The zero form is permitted.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<F: FormField> {
    pub ctx: F::Ctx,
    pub degree: usize,
    pub coeffs: Vec<F>,
}

impl<F: FormField> BinaryForm<F> {
    pub fn new(ctx: F::Ctx, degree: usize, coeffs: Vec<F>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::BadFormDegree(coeffs.len().saturating_sub(1), degree));
        }
        Ok(BinaryForm { ctx, degree, coeffs })
    }

    pub fn zero(ctx: F::Ctx, degree: usize) -> Self {
        let coeffs = vec![F::zero(&ctx); degree + 1];
        BinaryForm { ctx, degree, coeffs }
    }

    pub fn from_ints(ctx: F::Ctx, degree: usize, ints: &[(usize, i64)]) -> Self {
        let mut form = Self::zero(ctx, degree);
        for &(j, v) in ints {
            form.coeffs[j] = F::from_int(&form.ctx, v);
        }
        form
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.ctx.clone(), self.degree + rhs.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.degree != rhs.degree {
            return Err(Error::BadFormDegree(rhs.degree, self.degree));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(rhs.coeffs.iter())
            .map(|(a, b)| a.add(b))
            .collect();
        BinaryForm::new(self.ctx.clone(), self.degree, coeffs)
    }

    pub fn scale(&self, c: &F) -> Self {
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = BinaryForm {
            ctx: self.ctx.clone(),
            degree: 0,
            coeffs: vec![F::one(&self.ctx)],
        };
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Evaluate at a point (x0, x1).
    pub fn eval(&self, x0: &F, x1: &F) -> F {
        // Horner in x1 with powers of x0
        let mut acc = F::zero(&self.ctx);
        for j in (0..=self.degree).rev() {
            acc = acc.mul(x1).add(&self.coeffs[j].mul(&pow_f(x0, (self.degree - j) as u32, &self.ctx)));
        }
        acc
    }

    /// Multiplicity of t₀ (the place at infinity): degree minus the largest
    /// index with a nonzero coefficient. The zero form reports None.
    fn t0_valuation(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|j| self.degree - j)
    }

    /// The dehomogenization f(t) = F(1, t), trimmed.
    fn univariate(&self) -> UniPoly<F> {
        UniPoly::new(self.ctx.clone(), self.coeffs.clone())
    }
}

fn pow_f<F: FormField>(x: &F, n: u32, ctx: &F::Ctx) -> F {
    let mut acc = F::one(ctx);
    for _ in 0..n {
        acc = acc.mul(x);
    }
    acc
}

impl<F: FormField> fmt::Display for BinaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let monomial = match (self.degree - j, j) {
                (0, 0) => String::new(),
                (i, 0) => format!("t0^{i}"),
                (0, j) => format!("t1^{j}"),
                (i, j) => format!("t0^{i}*t1^{j}"),
            };
            if monomial.is_empty() {
                terms.push(format!("{c}"));
            } else {
                terms.push(format!("{c}*{monomial}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

// ---------------------------------------------------------------------------
// univariate helpers (monic-normalized arithmetic over the field)

#[derive(Debug, Clone, PartialEq)]
struct UniPoly<F: FormField> {
    ctx: F::Ctx,
    coeffs: Vec<F>, // ascending, trimmed
}

impl<F: FormField> UniPoly<F> {
    fn new(ctx: F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, F::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(F::zero(&ctx));
        }
        UniPoly { ctx, coeffs }
    }

    fn zero(ctx: F::Ctx) -> Self {
        UniPoly::new(ctx.clone(), vec![F::zero(&ctx)])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.ctx.clone());
        }
        let mut out = vec![F::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(self.ctx.clone(), out)
    }

    /// Division with remainder; panics only on division by zero.
    fn div_rem(&self, den: &Self) -> (Self, Self) {
        assert!(!den.is_zero(), "univariate division by zero");
        let mut rem = self.coeffs.clone();
        let dd = den.degree();
        if self.degree() < dd || self.is_zero() {
            return (Self::zero(self.ctx.clone()), self.clone());
        }
        let lead_inv = den.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut quot = vec![F::zero(&self.ctx); self.degree() - dd + 1];
        for k in (0..=self.degree() - dd).rev() {
            let c = rem[k + dd].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for j in 0..=dd {
                rem[k + j] = rem[k + j].sub(&c.mul(&den.coeffs[j]));
            }
        }
        (
            UniPoly::new(self.ctx.clone(), quot),
            UniPoly::new(self.ctx.clone(), rem),
        )
    }

    fn exact_div(&self, den: &Self) -> Self {
        let (q, r) = self.div_rem(den);
        assert!(r.is_zero(), "non-exact univariate division");
        q
    }

    /// Monic gcd.
    fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .coeffs
            .last()
            .unwrap()
            .inv()
            .expect("nonzero leading coefficient");
        UniPoly::new(
            self.ctx.clone(),
            self.coeffs.iter().map(|c| c.mul(&inv)).collect(),
        )
    }

    fn derivative(&self) -> Self {
        if self.is_constant() {
            return Self::zero(self.ctx.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&F::from_int(&self.ctx, i as i64)))
            .collect();
        UniPoly::new(self.ctx.clone(), coeffs)
    }

    /// Squarefree decomposition: pairs (multiplicity, monic squarefree
    /// factor), multiplicities ascending. Handles positive characteristic by
    /// peeling p-th powers.
    fn squarefree_decomposition(&self) -> Vec<(usize, UniPoly<F>)> {
        let p = F::characteristic(&self.ctx) as usize;
        let f = self.monic();
        if f.is_constant() {
            return Vec::new();
        }
        let deriv = f.derivative();
        if deriv.is_zero() {
            // f = h(t^p) with p > 0; over F_p the coefficients are their own
            // p-th roots
            assert!(p > 0, "zero derivative in characteristic 0");
            let mut coeffs = Vec::new();
            for (i, c) in f.coeffs.iter().enumerate() {
                if i % p == 0 {
                    coeffs.push(c.clone());
                } else {
                    assert!(c.is_zero(), "inconsistent p-th power shape");
                }
            }
            let root = UniPoly::new(f.ctx.clone(), coeffs);
            return root
                .squarefree_decomposition()
                .into_iter()
                .map(|(m, q)| (m * p, q))
                .collect();
        }

        // Yun's algorithm; in characteristic p the gcd chain leaves behind
        // the factors of p-divisible multiplicity, recovered by recursion
        let mut out: Vec<(usize, UniPoly<F>)> = Vec::new();
        let g = f.gcd(&deriv);
        let mut w = f.exact_div(&g);
        let mut c = g;
        let mut i = 1usize;
        while !w.is_constant() {
            let y = w.gcd(&c);
            let z = w.exact_div(&y);
            if !z.is_constant() {
                out.push((i, z));
            }
            w = y.clone();
            c = c.exact_div(&y);
            i += 1;
            if i > self.degree() + 1 {
                break;
            }
        }
        if !c.is_constant() {
            // what remains is a p-th power carrying its true multiplicities
            out.extend(c.squarefree_decomposition());
        }
        merge_decomposition(out)
    }
}

fn merge_decomposition<F: FormField>(
    mut parts: Vec<(usize, UniPoly<F>)>,
) -> Vec<(usize, UniPoly<F>)> {
    parts.sort_by_key(|(m, _)| *m);
    let mut out: Vec<(usize, UniPoly<F>)> = Vec::new();
    for (m, q) in parts {
        if let Some(last) = out.last_mut() {
            if last.0 == m {
                last.1 = last.1.mul(&q);
                continue;
            }
        }
        out.push((m, q));
    }
    out
}

// ---------------------------------------------------------------------------
// discriminant and fiber classification

/// Δ = −4A³ − 27B² for Weierstrass data y² + x³ + A(t₀,t₁)x + B(t₀,t₁),
/// with deg A = 8 and deg B = 12; the result has degree 24.
pub fn form_discriminant<F: FormField>(
    a: &BinaryForm<F>,
    b: &BinaryForm<F>,
) -> Result<BinaryForm<F>> {
    if a.degree != 8 {
        return Err(Error::BadFormDegree(a.degree, 8));
    }
    if b.degree != 12 {
        return Err(Error::BadFormDegree(b.degree, 12));
    }
    let minus4 = F::from_int(&a.ctx, -4);
    let minus27 = F::from_int(&a.ctx, -27);
    let a3 = a.pow(3).scale(&minus4);
    let b2 = b.pow(2).scale(&minus27);
    a3.add(&b2)
}

/// Kodaira type of a singular fiber, restricted to the multiplicative and
/// small additive types away from characteristics 2 and 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KodairaType {
    In(u64),
    II,
    III,
    IV,
    Unsupported,
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::In(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::Unsupported => write!(f, "unsupported"),
        }
    }
}

impl KodairaType {
    pub fn local_euler(&self) -> Option<u64> {
        match self {
            KodairaType::In(n) => Some(*n),
            KodairaType::II => Some(2),
            KodairaType::III => Some(3),
            KodairaType::IV => Some(4),
            KodairaType::Unsupported => None,
        }
    }
}

/// One group of places of Δ sharing the same valuation data. `place` is a
/// squarefree form whose roots are the fibers of the report; `degree` counts
/// them (with multiplicity one each), and `multiplicity` is v(Δ) there.
#[derive(Debug, Clone)]
pub struct FiberReport<F: FormField> {
    pub place: BinaryForm<F>,
    pub degree: usize,
    pub multiplicity: usize,
    /// None encodes infinite valuation (the form vanishes identically).
    pub v_a: Option<usize>,
    pub v_b: Option<usize>,
    pub kodaira_type: KodairaType,
    pub local_euler: Option<u64>,
}

/// Classification summary for one Weierstrass model.
#[derive(Debug, Clone)]
pub struct FibrationReport<F: FormField> {
    pub fibers: Vec<FiberReport<F>>,
    /// Σ local_euler · deg(place) over classified fibers.
    pub euler_sum: u64,
}

/// Classify the singular fibers of y² + x³ + A x + B.
///
/// Places of Δ are grouped by the valuation triple (v(Δ), v(A), v(B)); each
/// group is reported once, with its degree counting the geometric fibers in
/// it. Characteristics 2 and 3 are rejected, as is vanishing Δ, and
/// non-minimal data (v(A) ≥ 4 and v(B) ≥ 6 somewhere).
pub fn classify_fibers<F: FormField>(
    a: &BinaryForm<F>,
    b: &BinaryForm<F>,
) -> Result<FibrationReport<F>> {
    let p = F::characteristic(&a.ctx);
    if p == 2 || p == 3 {
        return Err(Error::BadCharacteristic(p));
    }
    let delta = form_discriminant(a, b)?;
    if delta.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }

    let mut groups: Vec<(PlaceGroup<F>, usize)> = Vec::new(); // (place data, vΔ)

    // the place t0 = 0, read off coefficient positions
    if let Some(v_delta) = nonzero_t0_valuation(&delta) {
        groups.push((
            PlaceGroup {
                place_univ: None,
                v_a: a.t0_valuation(),
                v_b: b.t0_valuation(),
            },
            v_delta,
        ));
    }

    // finite places, grouped by valuation signature
    let delta_univ = delta.univariate();
    for (mult, q) in delta_univ.squarefree_decomposition() {
        for (q_part, v_a) in split_by_valuation(&q, a) {
            for (q_fine, v_b) in split_by_valuation(&q_part, b) {
                groups.push((
                    PlaceGroup {
                        place_univ: Some(q_fine),
                        v_a,
                        v_b,
                    },
                    mult,
                ));
            }
        }
    }

    let mut fibers = Vec::new();
    let mut euler_sum = 0u64;
    for (group, v_delta) in groups {
        let v_a = group.v_a;
        let v_b = group.v_b;
        if v_a.map_or(true, |v| v >= 4) && v_b.map_or(true, |v| v >= 6) {
            return Err(Error::NonMinimal);
        }
        let kodaira_type = match (v_a, v_b) {
            (Some(0), _) => KodairaType::In(v_delta as u64),
            (_, Some(1)) => KodairaType::II,
            (Some(1), _) => KodairaType::III,
            (_, Some(2)) => KodairaType::IV,
            _ => KodairaType::Unsupported,
        };
        let (place, degree) = match &group.place_univ {
            None => {
                // the form t0
                let mut f = BinaryForm::zero(a.ctx.clone(), 1);
                f.coeffs[0] = F::one(&a.ctx);
                (f, 1)
            }
            Some(q) => {
                let deg = q.degree();
                let mut coeffs = q.coeffs.clone();
                coeffs.resize(deg + 1, F::zero(&a.ctx));
                (BinaryForm::new(a.ctx.clone(), deg, coeffs)?, deg)
            }
        };
        let local_euler = kodaira_type.local_euler();
        if let Some(e) = local_euler {
            euler_sum += e * degree as u64;
        }
        fibers.push(FiberReport {
            place,
            degree,
            multiplicity: v_delta,
            v_a,
            v_b,
            kodaira_type,
            local_euler,
        });
    }
    fibers.sort_by_key(|f| (f.degree, f.multiplicity, format!("{}", f.place)));
    Ok(FibrationReport { fibers, euler_sum })
}

struct PlaceGroup<F: FormField> {
    /// None marks the place t0 = 0.
    place_univ: Option<UniPoly<F>>,
    v_a: Option<usize>,
    v_b: Option<usize>,
}

fn nonzero_t0_valuation<F: FormField>(f: &BinaryForm<F>) -> Option<usize> {
    match f.t0_valuation() {
        Some(0) | None => None,
        Some(v) => Some(v),
    }
}

/// Split a squarefree polynomial q by the valuation of `form` at its roots.
/// Returns (factor, v) pairs; v = None for the zero form (infinite
/// valuation).
fn split_by_valuation<F: FormField>(
    q: &UniPoly<F>,
    form: &BinaryForm<F>,
) -> Vec<(UniPoly<F>, Option<usize>)> {
    if form.is_zero() {
        return vec![(q.clone(), None)];
    }
    split_by_valuation_poly(q, &form.univariate())
        .into_iter()
        .map(|(part, v)| (part, Some(v)))
        .collect()
}

/// Valuation split of a squarefree q against an arbitrary nonzero poly f:
/// repeatedly gcd out one copy of the surviving places.
fn split_by_valuation_poly<F: FormField>(
    q: &UniPoly<F>,
    f: &UniPoly<F>,
) -> Vec<(UniPoly<F>, usize)> {
    let mut out = Vec::new();
    let mut active = q.monic();
    let mut rest = f.clone();
    let mut level = 0usize;
    loop {
        if active.is_constant() {
            break;
        }
        let deeper = active.gcd(&rest);
        let at_level = active.exact_div(&deeper);
        if !at_level.is_constant() {
            out.push((at_level, level));
        }
        if deeper.is_constant() {
            break;
        }
        rest = rest.exact_div(&deeper);
        active = deeper;
        level += 1;
    }
    out
}

// ---------------------------------------------------------------------------
// invariant forms and the diagonal action

/// The monomial exponents j ∈ [0, degree] with weight·j ≡ target (mod
/// order): the span of {t₀^(deg−j) t₁^j} over those j is the full space of
/// forms transforming by ζ^target under t₁ ↦ ζ^weight t₁.
pub fn invariant_form_space(degree: u64, weight_t1: i64, target: i64, order: u64) -> Vec<u64> {
    (0..=degree)
        .filter(|&j| (weight_t1 * j as i64 - target).rem_euclid(order as i64) == 0)
        .collect()
}

/// Character of the 2-form dx∧dt/y under the diagonal action x ↦ ζ^wx x,
/// y ↦ ζ^wy y, t ↦ ζ^wt t: the exponent (wx + wt − wy) mod order, and its
/// multiplicative order.
pub fn two_form_character(wx: i64, wy: i64, wt: i64, order: u64) -> (u64, u64) {
    let exponent = (wx + wt - wy).rem_euclid(order as i64) as u64;
    let mult_order = order / num_integer::gcd(order, exponent);
    (exponent, mult_order)
}

/// The distinguished Weierstrass data: A = 0, B = t₀t₁¹¹ − t₀¹¹t₁, with the
/// diagonal action weights (2, 3, 6) on (x, y, t₁) for a root of unity of
/// order 60.
pub struct X60<F: FormField> {
    pub a: BinaryForm<F>,
    pub b: BinaryForm<F>,
    pub weights: (i64, i64, i64),
    /// exponent by which the defining polynomial scales under the action
    pub equivariance_exponent: u64,
}

/// Build the order-60 surface over the requested field. Characteristics 2, 3
/// and 5 are rejected (the surface has bad reduction there). The returned
/// equivariance exponent is checked monomial by monomial in exponent
/// arithmetic mod 60.
pub fn build_x60<F: FormField>(ctx: F::Ctx) -> Result<X60<F>> {
    let p = F::characteristic(&ctx);
    if p == 2 || p == 3 || p == 5 {
        return Err(Error::BadCharacteristic(p));
    }
    let a = BinaryForm::<F>::zero(ctx.clone(), 8);
    let b = BinaryForm::<F>::from_ints(ctx, 12, &[(11, 1), (1, -1)]);
    let (wx, wy, wt) = (2i64, 3i64, 6i64);

    // weights mod 60 of the monomials of y^2 + x^3 + A x + B must agree
    let mut weights_seen = Vec::new();
    weights_seen.push((2 * wy).rem_euclid(60)); // y^2
    weights_seen.push((3 * wx).rem_euclid(60)); // x^3
    for (j, c) in a.coeffs.iter().enumerate() {
        if !c.is_zero() {
            weights_seen.push((wx + wt * j as i64).rem_euclid(60));
        }
    }
    for (j, c) in b.coeffs.iter().enumerate() {
        if !c.is_zero() {
            weights_seen.push((wt * j as i64).rem_euclid(60));
        }
    }
    weights_seen.dedup();
    if weights_seen.len() != 1 {
        return Err(Error::Refused(format!(
            "action does not scale the defining polynomial by a single factor: {weights_seen:?}"
        )));
    }
    Ok(X60 {
        a,
        b,
        weights: (wx, wy, wt),
        equivariance_exponent: weights_seen[0] as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> Rat {
        <Rat as FormField>::from_int(&(), v)
    }

    #[test]
    fn discriminant_of_x60() {
        let x60 = build_x60::<Rat>(()).unwrap();
        let delta = form_discriminant(&x60.a, &x60.b).unwrap();
        // -27 * t0^2 t1^2 (t1^10 - t0^10)^2
        // = -27*(t0^2 t1^22 - 2 t0^12 t1^12 + t0^22 t1^2)
        let mut expect = BinaryForm::<Rat>::zero((), 24);
        expect.coeffs[22] = rat(-27);
        expect.coeffs[12] = rat(54);
        expect.coeffs[2] = rat(-27);
        assert_eq!(delta, expect);
    }

    #[test]
    fn discriminant_of_zero_is_zero() {
        let a = BinaryForm::<Rat>::zero((), 8);
        let b = BinaryForm::<Rat>::zero((), 12);
        assert!(form_discriminant(&a, &b).unwrap().is_zero());
        assert!(form_discriminant(&BinaryForm::<Rat>::zero((), 7), &b).is_err());
    }

    #[test]
    fn discriminant_matches_naive_oracle() {
        // oracle: expand -4A^3 - 27B^2 with a plain nested-loop convolution
        let a = BinaryForm::<Rat>::from_ints((), 8, &[(0, 3), (3, -2), (8, 1)]);
        let b = BinaryForm::<Rat>::from_ints((), 12, &[(1, 5), (6, 7), (12, -1)]);
        let delta = form_discriminant(&a, &b).unwrap();

        let conv = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
            let mut out = vec![rat(0); x.len() + y.len() - 1];
            for i in 0..x.len() {
                for j in 0..y.len() {
                    out[i + j] = FormField::add(&out[i + j], &x[i].mul(&y[j]));
                }
            }
            out
        };
        let a3 = conv(&conv(&a.coeffs, &a.coeffs), &a.coeffs);
        let b2 = conv(&b.coeffs, &b.coeffs);
        for j in 0..=24usize {
            let expect = FormField::add(
                &a3[j].mul(&rat(-4)),
                &b2[j].mul(&rat(-27)),
            );
            assert_eq!(delta.coeffs[j], expect, "coefficient {j}");
        }
    }

    #[test]
    fn x60_has_twelve_cuspidal_fibers() {
        let x60 = build_x60::<Rat>(()).unwrap();
        let report = classify_fibers(&x60.a, &x60.b).unwrap();
        let cusp_count: usize = report
            .fibers
            .iter()
            .filter(|f| f.kodaira_type == KodairaType::II)
            .map(|f| f.degree)
            .sum();
        assert_eq!(cusp_count, 12);
        assert_eq!(report.euler_sum, 24);
        assert!(report
            .fibers
            .iter()
            .all(|f| f.kodaira_type == KodairaType::II && f.multiplicity == 2));
    }

    #[test]
    fn x60_over_prime_field() {
        let x60 = build_x60::<Fp>(11).unwrap();
        assert_eq!(x60.equivariance_exponent, 6);
        assert_eq!(x60.b.coeffs[1].value, 10);
        assert_eq!(x60.b.coeffs[11].value, 1);
        let report = classify_fibers(&x60.a, &x60.b).unwrap();
        let cusp_count: usize = report
            .fibers
            .iter()
            .filter(|f| f.kodaira_type == KodairaType::II)
            .map(|f| f.degree)
            .sum();
        assert_eq!(cusp_count, 12);
        assert_eq!(report.euler_sum, 24);
        assert!(matches!(build_x60::<Fp>(5), Err(Error::BadCharacteristic(5))));
        assert!(matches!(build_x60::<Fp>(2), Err(Error::BadCharacteristic(2))));
    }

    #[test]
    fn nodal_fiber_at_simple_root() {
        // A = t0^8 (nonvanishing at t1 = 0... i.e. at places away from t0=0
        // the valuation of A is 0), B chosen to make Δ have simple roots
        let a = BinaryForm::<Rat>::from_ints((), 8, &[(0, 1)]);
        let b = BinaryForm::<Rat>::from_ints((), 12, &[(0, 1), (1, 1)]);
        let report = classify_fibers(&a, &b).unwrap();
        // v(A) = 0 at every root of Δ here, so every fiber is I_n
        assert!(report
            .fibers
            .iter()
            .all(|f| matches!(f.kodaira_type, KodairaType::In(_))));
        let total: usize = report.fibers.iter().map(|f| f.degree * f.multiplicity).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn squarefree_discriminant_gives_24_nodal_fibers() {
        // generic data over F_101: Δ squarefree (checked by the grouping)
        let a = BinaryForm::<Fp>::from_ints(101, 8, &[(0, 1), (8, 1)]);
        let b = BinaryForm::<Fp>::from_ints(101, 12, &[(0, 1), (1, 3), (12, 2)]);
        let report = classify_fibers(&a, &b).unwrap();
        let i1: usize = report
            .fibers
            .iter()
            .filter(|f| f.kodaira_type == KodairaType::In(1))
            .map(|f| f.degree)
            .sum();
        assert_eq!(i1, 24);
        assert_eq!(report.euler_sum, 24);
    }

    #[test]
    fn characteristic_three_rejected() {
        let a = BinaryForm::<Fp>::zero(3, 8);
        let b = BinaryForm::<Fp>::from_ints(3, 12, &[(0, 1)]);
        assert!(matches!(
            classify_fibers(&a, &b),
            Err(Error::BadCharacteristic(3))
        ));
    }

    #[test]
    fn zero_discriminant_rejected() {
        let a = BinaryForm::<Rat>::zero((), 8);
        let b = BinaryForm::<Rat>::zero((), 12);
        assert!(matches!(
            classify_fibers(&a, &b),
            Err(Error::ZeroDiscriminant)
        ));
    }

    #[test]
    fn invariant_form_spaces() {
        assert!(invariant_form_space(8, 6, 4, 60).is_empty());
        assert_eq!(invariant_form_space(12, 6, 6, 60), vec![1, 11]);
        assert_eq!(
            invariant_form_space(12, 0, 0, 1),
            (0..=12).collect::<Vec<_>>()
        );
    }

    #[test]
    fn invariant_space_matches_exponent_substitution_oracle() {
        // oracle: substitute the root of unity as an exponent and test each
        // monomial individually
        for (deg, w, c, n) in [(8u64, 6i64, 4i64, 60u64), (12, 6, 6, 60), (10, 3, 9, 12)] {
            let got = invariant_form_space(deg, w, c, n);
            let oracle: Vec<u64> = (0..=deg)
                .filter(|&j| {
                    let lhs = (w * j as i64).rem_euclid(n as i64);
                    lhs == c.rem_euclid(n as i64)
                })
                .collect();
            assert_eq!(got, oracle);
        }
    }

    #[test]
    fn two_form_characters() {
        assert_eq!(two_form_character(2, 3, 6, 60), (5, 12));
        assert_eq!(two_form_character(0, 0, 0, 60), (0, 1));
        assert_eq!(two_form_character(20, 30, 0, 60), (50, 6));
    }

    #[test]
    fn x60_equivariance_factor() {
        let x60 = build_x60::<Rat>(()).unwrap();
        assert_eq!(x60.equivariance_exponent, 6);
        assert_eq!(x60.weights, (2, 3, 6));
        // the 2-form character has order 12: the symplectic kernel has order
        // 60 / 12 = 5
        let (exp, ord) = two_form_character(2, 3, 6, 60);
        assert_eq!((exp, ord), (5, 12));
    }

    #[test]
    fn form_evaluation() {
        let b = build_x60::<Fp>(11).unwrap().b;
        // B(1, t) = t^11 - t vanishes identically on F_11
        for t in 0..11u64 {
            let v = b.eval(&Fp { value: 1, p: 11 }, &Fp { value: t, p: 11 });
            assert!(v.is_zero(), "t = {t}");
        }
        // at infinity: coefficient of t1^12 is 0
        let v = b.eval(&Fp { value: 0, p: 11 }, &Fp { value: 1, p: 11 });
        assert!(v.is_zero());
    }
}
