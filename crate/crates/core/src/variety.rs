//! Exact intersection numbers on a catalog of projective manifolds.
//!
//! Most entries are products of smooth complete intersections `X_t ⊂ ℙ^{N_t}`.
//! Their cohomology is modelled by the monomial ring generated by the
//! restricted hyperplane classes `h_t`, with `h_t^{dim X_t + 1} = 0` and the
//! top-degree evaluation `Π h_t^{dim X_t} ↦ Π deg X_t`. This ring sees every
//! class needed here: `L`, `K_X` and all Chern classes of `X`.
//!
//! Abelian varieties only need `L^n`, since every Chern class and `K_X`
//! vanish. Tabulated entries carry their intersection numbers directly.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chern::{twist_chern_class, twisted_monomial, ChernExpr, Twist};
use crate::error::{invalid, Error, Result};
use crate::partitions::{all_partitions_up_to, Partition};
use crate::poly::{big, binomial, factorial, int, MultiPoly, Rational};

const BUILTIN_CATALOG: &str = include_str!("../catalog/default.json");

/// Environment variable naming the default catalog file for the CLI.
pub const CATALOG_ENV: &str = "CHERNBOUND_CATALOG";

fn one_i64() -> i64 {
    1
}

fn yes() -> bool {
    true
}

/// Ampleness flags of the canonical class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(rename = "K_ample", default)]
    pub k_ample: bool,
    #[serde(rename = "minusK_ample", default)]
    pub minus_k_ample: bool,
}

/// A smooth complete intersection of the given degrees, of dimension `n`.
/// No degrees means `ℙ^n` itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub n: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VarietyKind {
    ProjectiveSpace {
        n: u32,
        #[serde(default = "one_i64")]
        polarization: i64,
    },
    Hypersurface {
        n: u32,
        degree: u32,
        #[serde(default = "one_i64")]
        polarization: i64,
    },
    CompleteIntersection {
        n: u32,
        degrees: Vec<u32>,
        #[serde(default = "one_i64")]
        polarization: i64,
    },
    ProductOfProjectiveSpaces {
        dims: Vec<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        polarization: Option<Vec<i64>>,
    },
    /// Product of complete intersections.
    Product {
        factors: Vec<FactorSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        polarization: Option<Vec<i64>>,
    },
    /// Abelian variety with a polarization of type `(d_1, …, d_n)`, so that
    /// `L^n = n!·Π d_i`.
    Abelian { n: u32, polarization_type: Vec<u32> },
    /// Intersection numbers supplied directly: `kl[i] = K^i·L^{n−i}` and
    /// `chern["2,1"] = c_2·c_1·L^{n−3}`.
    Tabulated {
        n: u32,
        kl: Vec<i64>,
        chern: BTreeMap<String, i64>,
        #[serde(default = "yes")]
        ample: bool,
    },
}

/// A catalog entry: a manifold together with its polarization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietySpec {
    pub id: String,
    #[serde(flatten)]
    pub kind: VarietyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<Flags>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Factor {
    dim: u32,
    degrees: Vec<u32>,
}

impl Factor {
    fn ambient(&self) -> u32 {
        self.dim + self.degrees.len() as u32
    }

    fn degree(&self) -> BigInt {
        self.degrees.iter().map(|&a| BigInt::from(a)).product()
    }

    /// `K = (Σ a_j − N − 1)·h` by adjunction.
    fn canonical_coeff(&self) -> i64 {
        self.degrees.iter().map(|&a| a as i64).sum::<i64>() - self.ambient() as i64 - 1
    }
}

/// Graded ring `Q[h_1, …, h_r] / (h_t^{dim_t + 1})` with its top-degree
/// evaluation, plus the polarization `L = Σ l_t h_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    factors: Vec<Factor>,
    polarization: Vec<i64>,
    vars: Vec<String>,
}

impl RingPresentation {
    fn new(factors: Vec<Factor>, polarization: Vec<i64>) -> Self {
        let vars = (1..=factors.len()).map(|t| format!("h{t}")).collect();
        RingPresentation { factors, polarization, vars }
    }

    pub fn dimension(&self) -> u32 {
        self.factors.iter().map(|f| f.dim).sum()
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(&self.vars)
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::one(&self.vars)
    }

    pub fn hyperplane(&self, t: usize) -> MultiPoly {
        MultiPoly::var(&self.vars, &self.vars[t]).expect("own variable")
    }

    /// `Σ c_t h_t`.
    pub fn divisor(&self, coeffs: &[Rational]) -> MultiPoly {
        let mut out = self.zero();
        for (t, c) in coeffs.iter().enumerate() {
            out = &out + &self.hyperplane(t).scale(c);
        }
        out
    }

    pub fn polarization(&self) -> MultiPoly {
        let c: Vec<Rational> = self.polarization.iter().map(|&l| int(l)).collect();
        self.divisor(&c)
    }

    pub fn canonical(&self) -> MultiPoly {
        let c: Vec<Rational> = self.factors.iter().map(|f| int(f.canonical_coeff())).collect();
        self.divisor(&c)
    }

    fn reduce(&self, mut p: MultiPoly) -> MultiPoly {
        p.retain(|e| e.iter().zip(&self.factors).all(|(&k, f)| k <= f.dim));
        p
    }

    pub fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        self.reduce(a * b)
    }

    pub fn pow(&self, a: &MultiPoly, k: u32) -> MultiPoly {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `(1 + u)^{-1}` for `u` without constant term.
    fn inverse_one_plus(&self, u: &MultiPoly) -> MultiPoly {
        let neg = -u;
        let mut acc = self.one();
        let mut power = self.one();
        for _ in 0..self.dimension() {
            power = self.mul(&power, &neg);
            acc = &acc + &power;
        }
        acc
    }

    /// Degree of a top-degree class.
    pub fn top(&self, p: &MultiPoly) -> Rational {
        let dims: Vec<u32> = self.factors.iter().map(|f| f.dim).collect();
        let coeff = p.coeff(&dims);
        let deg: BigInt = self.factors.iter().map(Factor::degree).product();
        coeff * big(deg)
    }

    /// `c(X) = Π_t (1 + h_t)^{N_t + 1} · Π_j (1 + a_j h_t)^{-1}`.
    pub fn total_chern(&self) -> MultiPoly {
        self.twisted_total_chern(&self.zero())
    }

    /// `c(T_X ⊗ M)` with `c_1(M) = δ`, computed from the virtual splitting
    /// `T_{X_t} = O(h_t)^{N_t + 1} − O − ⊕_j O(a_j h_t)` of each factor.
    pub fn twisted_total_chern(&self, delta: &MultiPoly) -> MultiPoly {
        let one = self.one();
        let mut total = self.one();
        for (t, f) in self.factors.iter().enumerate() {
            let h = self.hyperplane(t);
            let plus = &(&one + &h) + delta;
            total = self.mul(&total, &self.pow(&plus, f.ambient() + 1));
            total = self.mul(&total, &self.inverse_one_plus(delta));
            for &a in &f.degrees {
                let normal = &h.scale(&int(a as i64)) + delta;
                total = self.mul(&total, &self.inverse_one_plus(&normal));
            }
        }
        total
    }

    /// `c_j(X)`.
    pub fn chern_class(&self, j: u32) -> MultiPoly {
        self.total_chern().homogeneous_part(j)
    }
}

/// `(K^i·L^{n−i})_{i=0..n}` and `c_λ(X)·L^{n−|λ|}` for every `λ ∈ P(d, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionVector {
    pub n: u32,
    pub kl: Vec<BigInt>,
    pub chern: BTreeMap<Partition, BigInt>,
}

impl IntersectionVector {
    /// `L^n`.
    pub fn volume(&self) -> Rational {
        big(self.kl[0].clone())
    }

    /// `K·L^{n−1}`.
    pub fn canonical_degree(&self) -> Rational {
        big(self.kl[1].clone())
    }

    pub fn kl_rational(&self) -> Vec<Rational> {
        self.kl.iter().cloned().map(big).collect()
    }

    /// `(L^n, K·L^{n−1})`, the point at which the bivariate bounds are
    /// evaluated.
    pub fn point(&self) -> [Rational; 2] {
        [self.volume(), self.canonical_degree()]
    }

    /// `c_μ·L^{n−|μ|}`; the empty partition gives `L^n`.
    pub fn chern_number(&self, mu: &Partition) -> Result<BigInt> {
        if mu.is_empty() {
            return Ok(self.kl[0].clone());
        }
        self.chern
            .get(mu)
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("no Chern number for ({mu}) in dimension {}", self.n)))
    }

    /// Integrates `expr · L^{n − deg}` term by term.
    pub fn evaluate(&self, expr: &ChernExpr) -> Result<Rational> {
        let mut total = Rational::zero();
        for (mono, c) in expr.terms() {
            total += c * big(self.chern_number(&mono.partition())?);
        }
        Ok(total)
    }

    fn check(&self, id: &str) -> Result<()> {
        if self.kl.len() != self.n as usize + 1 {
            return Err(Error::Integrity(format!("{id}: kl has {} entries", self.kl.len())));
        }
        if self.kl[0] < BigInt::one() {
            return Err(Error::Integrity(format!("{id}: L^n = {} < 1", self.kl[0])));
        }
        for d in 1..=self.n {
            let c1 = self.chern_number(&Partition::ones(d))?;
            let expect = if d % 2 == 0 { self.kl[d as usize].clone() } else { -self.kl[d as usize].clone() };
            if c1 != expect {
                return Err(Error::Integrity(format!(
                    "{id}: c_1^{d}·L^(n-{d}) = {c1} but (-K)^{d}·L^(n-{d}) = {expect}"
                )));
            }
        }
        Ok(())
    }
}

/// A divisor class `k·K + l·L + Σ_t h_t·H_t`; the hyperplane part is only
/// meaningful on ring-presented entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub k: Rational,
    pub l: Rational,
    pub h: Vec<Rational>,
}

impl Divisor {
    pub fn kl(k: Rational, l: Rational) -> Self {
        Divisor { k, l, h: Vec::new() }
    }

    pub fn polarization() -> Self {
        Self::kl(Rational::zero(), Rational::one())
    }

    /// `K_X + (n+1)L`, which is always nef.
    pub fn adjoint(n: u32) -> Self {
        Self::kl(Rational::one(), int(n as i64 + 1))
    }

    pub fn hyperplanes(h: &[i64]) -> Self {
        Divisor { k: Rational::zero(), l: Rational::zero(), h: h.iter().map(|&c| int(c)).collect() }
    }
}

impl VarietySpec {
    pub fn dimension(&self) -> u32 {
        match &self.kind {
            VarietyKind::ProjectiveSpace { n, .. }
            | VarietyKind::Hypersurface { n, .. }
            | VarietyKind::CompleteIntersection { n, .. }
            | VarietyKind::Abelian { n, .. }
            | VarietyKind::Tabulated { n, .. } => *n,
            VarietyKind::ProductOfProjectiveSpaces { dims, .. } => dims.iter().sum(),
            VarietyKind::Product { factors, .. } => factors.iter().map(|f| f.n).sum(),
        }
    }

    /// The ring presentation, for every kind except abelian and tabulated.
    pub fn presentation(&self) -> Option<RingPresentation> {
        let single =
            |n: u32, degrees: Vec<u32>, l: i64| RingPresentation::new(vec![Factor { dim: n, degrees }], vec![l]);
        let product = |factors: Vec<Factor>, pol: &Option<Vec<i64>>| {
            let pol = pol.clone().unwrap_or_else(|| vec![1; factors.len()]);
            RingPresentation::new(factors, pol)
        };
        match &self.kind {
            VarietyKind::ProjectiveSpace { n, polarization } => Some(single(*n, vec![], *polarization)),
            VarietyKind::Hypersurface { n, degree, polarization } => Some(single(*n, vec![*degree], *polarization)),
            VarietyKind::CompleteIntersection { n, degrees, polarization } => {
                Some(single(*n, degrees.clone(), *polarization))
            }
            VarietyKind::ProductOfProjectiveSpaces { dims, polarization } => {
                Some(product(dims.iter().map(|&d| Factor { dim: d, degrees: vec![] }).collect(), polarization))
            }
            VarietyKind::Product { factors, polarization } => Some(product(
                factors.iter().map(|f| Factor { dim: f.n, degrees: f.degrees.clone() }).collect(),
                polarization,
            )),
            VarietyKind::Abelian { .. } | VarietyKind::Tabulated { .. } => None,
        }
    }

    /// Checks the entry's parameters. Non-ample polarizations are reported as
    /// [`Error::NotAmple`].
    pub fn validate(&self) -> Result<()> {
        let n = self.dimension();
        if n < 1 {
            return Err(Error::Catalog(format!("{}: dimension must be at least 1", self.id)));
        }
        if let Some(ring) = self.presentation() {
            if ring.polarization.len() != ring.factors.len() {
                return Err(Error::Catalog(format!(
                    "{}: {} polarization coefficients for {} factors",
                    self.id,
                    ring.polarization.len(),
                    ring.factors.len()
                )));
            }
            for f in &ring.factors {
                if f.dim < 1 || f.degrees.iter().any(|&a| a < 1) {
                    return Err(Error::Catalog(format!("{}: bad factor {f:?}", self.id)));
                }
            }
            if ring.polarization.iter().any(|&l| l <= 0) {
                return Err(Error::NotAmple(self.id.clone()));
            }
            if let Some(flags) = self.flags {
                if flags != self.computed_flags() {
                    return Err(Error::Catalog(format!("{}: flags disagree with the presentation", self.id)));
                }
            }
        }
        match &self.kind {
            VarietyKind::Abelian { n, polarization_type } => {
                if polarization_type.len() != *n as usize || polarization_type.contains(&0) {
                    return Err(Error::Catalog(format!("{}: polarization type needs {n} positive entries", self.id)));
                }
            }
            VarietyKind::Tabulated { n, kl, chern, ample } => {
                if !ample {
                    return Err(Error::NotAmple(self.id.clone()));
                }
                if kl.len() != *n as usize + 1 {
                    return Err(Error::Catalog(format!("{}: kl needs {} entries", self.id, n + 1)));
                }
                for key in chern.keys() {
                    let mu: Partition = key.parse()?;
                    if !mu.fits(*n) {
                        return Err(Error::Catalog(format!("{}: partition ({key}) out of range", self.id)));
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }

    fn computed_flags(&self) -> Flags {
        match self.presentation() {
            Some(ring) => {
                let k: Vec<i64> = ring.factors.iter().map(Factor::canonical_coeff).collect();
                Flags { k_ample: k.iter().all(|&c| c > 0), minus_k_ample: k.iter().all(|&c| c < 0) }
            }
            None => Flags::default(),
        }
    }

    /// Ampleness of `±K_X`: computed for ring presentations, declared for
    /// tabulated entries, and false for abelian varieties.
    pub fn flags(&self) -> Flags {
        match &self.kind {
            VarietyKind::Tabulated { .. } => self.flags.unwrap_or_default(),
            _ => self.computed_flags(),
        }
    }

    /// True when `K_X` is numerically trivial.
    pub fn k_trivial(&self) -> bool {
        match (&self.kind, self.presentation()) {
            (_, Some(ring)) => ring.factors.iter().all(|f| f.canonical_coeff() == 0),
            (VarietyKind::Abelian { .. }, None) => true,
            (VarietyKind::Tabulated { kl, .. }, None) => kl[1..].iter().all(|&v| v == 0),
            _ => false,
        }
    }

    pub fn intersection_vector(&self) -> Result<IntersectionVector> {
        self.validate()?;
        let n = self.dimension();
        let iv = match (&self.kind, self.presentation()) {
            (_, Some(ring)) => {
                let l = ring.polarization();
                let k = ring.canonical();
                let l_pows: Vec<MultiPoly> = (0..=n).map(|e| ring.pow(&l, e)).collect();
                let to_int = |r: Rational| -> Result<BigInt> {
                    if !r.is_integer() {
                        return Err(Error::Integrity(format!("{}: non-integral intersection {r}", self.id)));
                    }
                    Ok(r.to_integer())
                };
                let kl = (0..=n)
                    .map(|i| to_int(ring.top(&ring.mul(&ring.pow(&k, i), &l_pows[(n - i) as usize]))))
                    .collect::<Result<Vec<_>>>()?;
                let total = ring.total_chern();
                let classes: Vec<MultiPoly> = (0..=n).map(|j| total.homogeneous_part(j)).collect();
                let mut chern = BTreeMap::new();
                for lambda in all_partitions_up_to(n) {
                    let mut prod = l_pows[(n - lambda.weight()) as usize].clone();
                    for &part in lambda.parts() {
                        prod = ring.mul(&prod, &classes[part as usize]);
                    }
                    chern.insert(lambda, to_int(ring.top(&prod))?);
                }
                IntersectionVector { n, kl, chern }
            }
            (VarietyKind::Abelian { polarization_type, .. }, None) => {
                let vol = factorial(n as u64) * polarization_type.iter().map(|&d| BigInt::from(d)).product::<BigInt>();
                let mut kl = vec![BigInt::zero(); n as usize + 1];
                kl[0] = vol;
                let chern = all_partitions_up_to(n).into_iter().map(|l| (l, BigInt::zero())).collect();
                IntersectionVector { n, kl, chern }
            }
            (VarietyKind::Tabulated { kl, chern, .. }, None) => {
                let mut table = BTreeMap::new();
                for (key, v) in chern {
                    table.insert(key.parse::<Partition>()?, BigInt::from(*v));
                }
                for lambda in all_partitions_up_to(n) {
                    if !table.contains_key(&lambda) {
                        return Err(Error::Catalog(format!("{}: missing Chern number ({lambda})", self.id)));
                    }
                }
                IntersectionVector { n, kl: kl.iter().map(|&v| BigInt::from(v)).collect(), chern: table }
            }
            _ => unreachable!("every ring-free kind is handled"),
        };
        iv.check(&self.id)?;
        Ok(iv)
    }

    /// `χ(X, kL)` computed without the Todd class: Koszul resolutions of the
    /// complete intersections and Künneth for products; `L^n k^n / n!` for
    /// abelian varieties. Tabulated entries have no independent route.
    pub fn euler_characteristic(&self, k: i64) -> Result<Rational> {
        self.validate()?;
        if let Some(ring) = self.presentation() {
            let mut total = Rational::one();
            for (f, &l) in ring.factors.iter().zip(&ring.polarization) {
                total *= ci_euler_characteristic(f.ambient(), &f.degrees, k * l);
            }
            return Ok(total);
        }
        match &self.kind {
            VarietyKind::Abelian { n, polarization_type } => {
                let d: BigInt = polarization_type.iter().map(|&d| BigInt::from(d)).product();
                Ok(big(d) * num_traits::pow(int(k), *n as usize))
            }
            _ => invalid(format!("{}: no independent Euler characteristic", self.id)),
        }
    }

    /// Intersection number `A^p·B^q` with `p + q = n`.
    pub fn intersect(&self, a: &Divisor, p: u32, b: &Divisor, q: u32) -> Result<Rational> {
        let n = self.dimension();
        if p + q != n {
            return invalid(format!("A^{p}·B^{q} is not top-dimensional for n = {n}"));
        }
        match self.presentation() {
            Some(ring) => {
                let ea = self.ring_class(&ring, a)?;
                let eb = self.ring_class(&ring, b)?;
                Ok(ring.top(&ring.mul(&ring.pow(&ea, p), &ring.pow(&eb, q))))
            }
            None => {
                if a.h.iter().chain(&b.h).any(|c| !c.is_zero()) {
                    return Err(Error::NotInRing(self.id.clone()));
                }
                // x ↔ L, y ↔ K
                let iv = self.intersection_vector()?;
                let lin = |d: &Divisor| -> MultiPoly {
                    MultiPoly::from_terms(&["x", "y"], [(vec![1, 0], d.l.clone()), (vec![0, 1], d.k.clone())])
                        .expect("canonical")
                };
                let prod = &lin(a).pow(p) * &lin(b).pow(q);
                Ok(prod.terms().map(|(e, c)| c * big(iv.kl[e[1] as usize].clone())).sum())
            }
        }
    }

    fn ring_class(&self, ring: &RingPresentation, d: &Divisor) -> Result<MultiPoly> {
        if d.h.len() > ring.num_factors() {
            return Err(Error::NotInRing(self.id.clone()));
        }
        let h = ring.divisor(&d.h);
        Ok(&(&ring.canonical().scale(&d.k) + &ring.polarization().scale(&d.l)) + &h)
    }

    /// Sufficient nefness test: a nonnegative combination of the `h_t` on
    /// ring presentations, or of `K + (n+1)L` and `L` otherwise.
    pub fn is_nef(&self, d: &Divisor) -> Result<bool> {
        match self.presentation() {
            Some(ring) => {
                let class = self.ring_class(&ring, d)?;
                Ok((0..ring.num_factors()).all(|t| {
                    let mut e = vec![0; ring.num_factors()];
                    e[t] = 1;
                    !class.coeff(&e).is_negative()
                }))
            }
            None => {
                if d.h.iter().any(|c| !c.is_zero()) {
                    return Err(Error::NotInRing(self.id.clone()));
                }
                let n1 = int(self.dimension() as i64 + 1);
                Ok(!d.k.is_negative() && d.l >= &d.k * n1)
            }
        }
    }
}

/// `P_N(t) = χ(ℙ^N, O(t)) = (t+1)⋯(t+N)/N!` as a polynomial in `t`.
fn projective_euler(ambient: u32, t: i64) -> Rational {
    let num: BigInt = (1..=ambient as i64).map(|i| BigInt::from(t + i)).product();
    Rational::new(num, factorial(ambient as u64))
}

/// `χ(X, O(t))` for a complete intersection `X ⊂ ℙ^N` via the Koszul complex.
fn ci_euler_characteristic(ambient: u32, degrees: &[u32], t: i64) -> Rational {
    let mut total = Rational::zero();
    for mask in 0u32..(1 << degrees.len()) {
        let shift: i64 = (0..degrees.len()).filter(|&j| mask & (1 << j) != 0).map(|j| degrees[j] as i64).sum();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += projective_euler(ambient, t - shift) * int(sign);
    }
    total
}

/// Margins of `c_1(E)^d·L^{n−d} ≥ c_λ(E)·L^{n−d} ≥ 0` for the nef bundle
/// `E = T_X ⊗ O(K_X + nA)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefChainReport {
    pub variety: String,
    pub lambda: Partition,
    /// `c_λ(E)·L^{n−d}` from the symbolic expansion.
    pub value: Rational,
    /// `c_1(E)^d·L^{n−d}`.
    pub upper: Rational,
    /// The same two numbers computed directly in the ring, when available.
    pub ring_value: Option<(Rational, Rational)>,
    pub pass: bool,
}

/// Evaluates the nef chain on `variety` two ways when possible: through the
/// symbolic expansion of `c_λ(E)` and, for ring presentations, through the
/// Chern classes of `E` computed in the ring.
pub fn check_nef_chain(variety: &VarietySpec, lambda: &Partition) -> Result<NefChainReport> {
    let n = variety.dimension();
    if !lambda.fits(n) {
        return invalid(format!("({lambda}) is not in P(d, {n})"));
    }
    let d = lambda.weight();
    let iv = variety.intersection_vector()?;
    let twist = Twist::adjoint(n);
    let value = iv.evaluate(&twisted_monomial(lambda, n, &twist)?)?;
    let upper = iv.evaluate(&twist_chern_class(1, n, &twist)?.pow(d))?;

    let ring_value = variety.presentation().map(|ring| {
        let k = ring.canonical();
        let l = ring.polarization();
        // c_1 = −K
        let delta = &k.scale(&-twist.c1.clone()) + &l.scale(&twist.l);
        let total = ring.twisted_total_chern(&delta);
        let l_rest = ring.pow(&l, n - d);
        let mut prod = l_rest.clone();
        for &part in lambda.parts() {
            prod = ring.mul(&prod, &total.homogeneous_part(part));
        }
        let c1 = total.homogeneous_part(1);
        (ring.top(&prod), ring.top(&ring.mul(&ring.pow(&c1, d), &l_rest)))
    });

    let chain = !value.is_negative() && value <= upper;
    let agree = ring_value.as_ref().is_none_or(|(v, u)| *v == value && *u == upper);
    Ok(NefChainReport {
        variety: variety.id.clone(),
        lambda: lambda.clone(),
        value,
        upper,
        ring_value,
        pass: chain && agree,
    })
}

/// `s_k = A^k·B^{n−k}` and the indices where `s_k² ≥ s_{k−1}s_{k+1}` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogConcavityReport {
    pub variety: String,
    pub sequence: Vec<Rational>,
    pub failures: Vec<usize>,
    pub pass: bool,
}

pub fn check_log_concavity(variety: &VarietySpec, a: &Divisor, b: &Divisor) -> Result<LogConcavityReport> {
    for d in [a, b] {
        if !variety.is_nef(d)? {
            return Err(Error::NotNef(variety.id.clone()));
        }
    }
    let n = variety.dimension();
    let sequence = (0..=n).map(|k| variety.intersect(a, k, b, n - k)).collect::<Result<Vec<_>>>()?;
    let failures: Vec<usize> =
        (1..n as usize).filter(|&k| &sequence[k] * &sequence[k] < &sequence[k - 1] * &sequence[k + 1]).collect();
    Ok(LogConcavityReport { variety: variety.id.clone(), pass: failures.is_empty(), sequence, failures })
}

/// An immutable list of validated catalog entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<VarietySpec>,
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_CATALOG).expect("built-in catalog is valid")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<VarietySpec> = serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        Self::new(entries)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn new(entries: Vec<VarietySpec>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for e in &entries {
            if !seen.insert(e.id.clone()) {
                return Err(Error::Catalog(format!("duplicate id `{}`", e.id)));
            }
            e.validate()?;
            e.intersection_vector()?;
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[VarietySpec] {
        &self.entries
    }

    pub fn by_dimension(&self, n: u32) -> Vec<&VarietySpec> {
        self.entries.iter().filter(|e| e.dimension() == n).collect()
    }

    pub fn get(&self, id: &str) -> Result<&VarietySpec> {
        self.entries.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownVariety(id.to_owned()))
    }
}

/// `C(k + n, n)`, the number of degree-`k` monomials in `n + 1` variables.
pub fn monomial_count(n: u32, k: u32) -> BigInt {
    binomial((k + n) as u64, n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn spec(json: &str) -> VarietySpec {
        serde_json::from_str(json).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn total_chern_examples() {
        let p2 = spec(r#"{"id":"P2","kind":"projective_space","n":2}"#);
        let ring = p2.presentation().unwrap();
        assert_eq!(ring.total_chern().to_string(), "3*h1^2 + 3*h1 + 1");

        let k3 = spec(r#"{"id":"K3","kind":"hypersurface","n":2,"degree":4}"#);
        let ring = k3.presentation().unwrap();
        assert_eq!(ring.total_chern().to_string(), "6*h1^2 + 1");
        assert_eq!(ring.top(&ring.chern_class(2)), int(24));
    }

    #[test]
    fn intersection_vectors() {
        let p2 = spec(r#"{"id":"P2","kind":"projective_space","n":2}"#).intersection_vector().unwrap();
        assert_eq!(p2.kl, ints(&[1, -3, 9]));
        assert_eq!(p2.chern[&p(&[1])], BigInt::from(3));
        assert_eq!(p2.chern[&p(&[2])], BigInt::from(3));
        assert_eq!(p2.chern[&p(&[1, 1])], BigInt::from(9));

        let q =
            spec(r#"{"id":"P1xP1","kind":"product_of_projective_spaces","dims":[1,1]}"#).intersection_vector().unwrap();
        assert_eq!(q.kl, ints(&[2, -4, 8]));
        assert_eq!(q.chern[&p(&[2])], BigInt::from(4));

        let k3 = spec(r#"{"id":"K3","kind":"hypersurface","n":2,"degree":4}"#).intersection_vector().unwrap();
        assert_eq!(k3.kl, ints(&[4, 0, 0]));
        assert_eq!(k3.chern[&p(&[2])], BigInt::from(24));

        let ab = spec(r#"{"id":"A","kind":"abelian","n":2,"polarization_type":[1,1]}"#).intersection_vector().unwrap();
        assert_eq!(ab.kl, ints(&[2, 0, 0]));
        assert!(ab.chern.values().all(Zero::is_zero));

        // quintic threefold: c_3 = −200, c_2·H = 50
        let q3 = spec(r#"{"id":"Q","kind":"hypersurface","n":3,"degree":5}"#).intersection_vector().unwrap();
        assert_eq!(q3.chern[&p(&[3])], BigInt::from(-200));
        assert_eq!(q3.chern[&p(&[2])], BigInt::from(50));
    }

    #[test]
    fn curves_have_expected_genus() {
        for (deg, two_g_minus_two) in [(2, -2), (3, 0), (4, 4), (5, 10)] {
            let c = spec(&format!(r#"{{"id":"C","kind":"hypersurface","n":1,"degree":{deg}}}"#));
            let iv = c.intersection_vector().unwrap();
            assert_eq!(iv.kl[1], BigInt::from(two_g_minus_two));
            assert_eq!(iv.chern[&p(&[1])], BigInt::from(-two_g_minus_two));
        }
    }

    #[test]
    fn non_ample_refused() {
        let bad = spec(r#"{"id":"bad","kind":"product_of_projective_spaces","dims":[1,1],"polarization":[1,0]}"#);
        assert!(matches!(bad.intersection_vector(), Err(Error::NotAmple(_))));
        let tab = spec(r#"{"id":"t","kind":"tabulated","n":1,"kl":[1,0],"chern":{"1":0},"ample":false}"#);
        assert!(matches!(tab.validate(), Err(Error::NotAmple(_))));
    }

    #[test]
    fn tabulated_entries() {
        let good = spec(
            r#"{"id":"t","kind":"tabulated","n":2,"kl":[1,-3,9],"chern":{"1":3,"2":3,"1,1":9},"flags":{"minusK_ample":true}}"#,
        );
        assert_eq!(good.intersection_vector().unwrap().kl, ints(&[1, -3, 9]));
        assert!(good.flags().minus_k_ample);
        let bad = spec(r#"{"id":"t","kind":"tabulated","n":2,"kl":[1,-3,9],"chern":{"1":3,"2":3,"1,1":8}}"#);
        assert!(matches!(bad.intersection_vector(), Err(Error::Integrity(_))));
        let missing = spec(r#"{"id":"t","kind":"tabulated","n":2,"kl":[1,-3,9],"chern":{"1":3,"1,1":9}}"#);
        assert!(matches!(missing.intersection_vector(), Err(Error::Catalog(_))));
        assert!(missing.euler_characteristic(1).is_err());
    }

    #[test]
    fn flags_and_triviality() {
        let p2 = spec(r#"{"id":"P2","kind":"projective_space","n":2}"#);
        assert_eq!(p2.flags(), Flags { k_ample: false, minus_k_ample: true });
        let quintic = spec(r#"{"id":"Q","kind":"hypersurface","n":2,"degree":5}"#);
        assert_eq!(quintic.flags(), Flags { k_ample: true, minus_k_ample: false });
        let k3 = spec(r#"{"id":"K3","kind":"hypersurface","n":2,"degree":4}"#);
        assert!(k3.k_trivial());
        let wrong = spec(r#"{"id":"P2","kind":"projective_space","n":2,"flags":{"K_ample":true}}"#);
        assert!(wrong.validate().is_err());
    }

    #[test]
    fn euler_characteristics() {
        let p2 = spec(r#"{"id":"P2","kind":"projective_space","n":2}"#);
        for k in 0..=10 {
            assert_eq!(p2.euler_characteristic(k).unwrap(), big(monomial_count(2, k as u32)));
        }
        let k3 = spec(r#"{"id":"K3","kind":"hypersurface","n":2,"degree":4}"#);
        for k in 0..=10 {
            assert_eq!(k3.euler_characteristic(k).unwrap(), int(2 * k * k + 2));
        }
        let p1 = spec(r#"{"id":"P1","kind":"projective_space","n":1}"#);
        assert_eq!(p1.euler_characteristic(4).unwrap(), int(5));
        let ab = spec(r#"{"id":"A","kind":"abelian","n":2,"polarization_type":[1,2]}"#);
        assert_eq!(ab.euler_characteristic(3).unwrap(), int(18));
    }

    #[test]
    fn log_concavity_examples() {
        let q = spec(r#"{"id":"P1xP1","kind":"product_of_projective_spaces","dims":[1,1]}"#);
        let r = check_log_concavity(&q, &Divisor::hyperplanes(&[1, 1]), &Divisor::hyperplanes(&[1, 0])).unwrap();
        assert_eq!(r.sequence, vec![int(0), int(1), int(2)]);
        assert!(r.pass);

        let p3 = spec(r#"{"id":"P3","kind":"projective_space","n":3}"#);
        let r = check_log_concavity(&p3, &Divisor::polarization(), &Divisor::polarization()).unwrap();
        assert_eq!(r.sequence, vec![int(1); 4]);

        let p2 = spec(r#"{"id":"P2","kind":"projective_space","n":2}"#);
        let r = check_log_concavity(&p2, &Divisor::adjoint(2), &Divisor::polarization()).unwrap();
        assert_eq!(r.sequence, vec![int(1), int(0), int(0)]);
        assert!(r.pass);

        assert!(matches!(
            check_log_concavity(&p2, &Divisor::kl(int(1), int(0)), &Divisor::polarization()),
            Err(Error::NotNef(_))
        ));
        let ab = spec(r#"{"id":"A","kind":"abelian","n":2,"polarization_type":[1,1]}"#);
        assert!(matches!(
            check_log_concavity(&ab, &Divisor::hyperplanes(&[1]), &Divisor::polarization()),
            Err(Error::NotInRing(_))
        ));
        let r = check_log_concavity(&ab, &Divisor::adjoint(2), &Divisor::polarization()).unwrap();
        assert_eq!(r.sequence, vec![int(2), int(6), int(18)]);
    }

    #[test]
    fn nef_chain_examples() {
        let p2 = spec(r#"{"id":"P2","kind":"projective_space","n":2}"#);
        for lambda in [p(&[2]), p(&[1, 1]), p(&[1])] {
            let r = check_nef_chain(&p2, &lambda).unwrap();
            assert!(r.pass, "{r:?}");
            assert_eq!(r.ring_value, Some((r.value.clone(), r.upper.clone())));
        }
        let ab = spec(r#"{"id":"A","kind":"abelian","n":2,"polarization_type":[1,1]}"#);
        let r = check_nef_chain(&ab, &p(&[1, 1])).unwrap();
        assert!(r.pass && r.ring_value.is_none());
        // degree one: c_1(E)·L = (9K + 92L)·L on ℙ²
        let r = check_nef_chain(&p2, &p(&[1])).unwrap();
        assert_eq!(r.value, int(9 * -3 + 92));
        assert_eq!(r.value, r.upper);
    }

    #[test]
    fn divisor_intersections_without_ring() {
        let ab = spec(r#"{"id":"A","kind":"abelian","n":3,"polarization_type":[1,1,2]}"#);
        assert_eq!(ab.intersect(&Divisor::polarization(), 3, &Divisor::polarization(), 0).unwrap(), int(12));
        assert_eq!(ab.intersect(&Divisor::kl(ratio(1, 2), int(0)), 1, &Divisor::polarization(), 2).unwrap(), int(0));
    }

    #[test]
    fn builtin_catalog_loads() {
        let cat = Catalog::builtin();
        for n in 1..=4 {
            assert!(cat.by_dimension(n).len() >= 8, "dimension {n}");
        }
        assert!(cat.get("P2").is_ok());
        assert!(matches!(cat.get("nope"), Err(Error::UnknownVariety(_))));
        let dup = r#"[{"id":"a","kind":"projective_space","n":1},{"id":"a","kind":"projective_space","n":2}]"#;
        assert!(Catalog::from_json(dup).is_err());
        assert!(Catalog::from_json("[{]").is_err());
    }
}
