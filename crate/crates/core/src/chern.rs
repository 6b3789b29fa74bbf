//! Chern classes of the tangent bundle twisted by a line bundle.
//!
//! Expressions live in the symbols `c_1(X), …, c_n(X)` and `L`. The canonical
//! class is always rewritten as `K_X = −c_1(X)`, so a single symbol set is in
//! play everywhere.
//!
//! The central object is the bundle `E = T_X ⊗ O(K_X + nA)` with
//! `A = 2K_X + C_n L`, whose first Chern class is
//! `c_1(E) = (n(2n+1) − 1)·K_X + n²C_n·L`. Multiplying out `c_λ(E)` and
//! collecting terms yields the leading constant `C_λ` on `c_λ(X)` and the
//! lower-order constants `C_{λ,μ,n}` on `c_μ(X)·L^{d−|μ|}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partitions::Partition;
use crate::poly::{big, binomial, int, parse_rational, Rational};

/// `C_n = 2 + C(3n+1, n)`: for every ample `L`, `2K_X + mL` is very ample
/// once `m ≥ C_n`.
pub fn fujita_constant(n: u32) -> BigInt {
    BigInt::from(2) + binomial(3 * n as u64 + 1, n as u64)
}

/// A monomial `c_{j_1}(X)⋯c_{j_r}(X) · c_1(X)^a · L^b` with every `j_i ≥ 2`.
///
/// Factors of `c_1` are kept only in `c1_power`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChernMonomial {
    chern_parts: Partition,
    c1_power: u32,
    l_power: u32,
}

impl ChernMonomial {
    /// `c_μ(X)·L^{l_power}`; parts equal to one move into the `c_1` power.
    pub fn new(mu: &Partition, l_power: u32) -> Self {
        let c1_power = mu.ones_count();
        let chern_parts = Partition::new(mu.parts().iter().copied().filter(|&p| p >= 2));
        ChernMonomial { chern_parts, c1_power, l_power }
    }

    pub fn one() -> Self {
        Self::default()
    }

    /// Parts `≥ 2`.
    pub fn chern_parts(&self) -> &Partition {
        &self.chern_parts
    }

    pub fn c1_power(&self) -> u32 {
        self.c1_power
    }

    pub fn l_power(&self) -> u32 {
        self.l_power
    }

    /// The full partition `μ`, with the `c_1` factors as parts equal to one.
    pub fn partition(&self) -> Partition {
        self.chern_parts.merge(&Partition::ones(self.c1_power))
    }

    /// Degree of the Chern part, `|μ|`.
    pub fn chern_degree(&self) -> u32 {
        self.chern_parts.weight() + self.c1_power
    }

    pub fn degree(&self) -> u32 {
        self.chern_degree() + self.l_power
    }

    pub fn mul(&self, other: &ChernMonomial) -> ChernMonomial {
        ChernMonomial {
            chern_parts: self.chern_parts.merge(&other.chern_parts),
            c1_power: self.c1_power + other.c1_power,
            l_power: self.l_power + other.l_power,
        }
    }
}

impl fmt::Display for ChernMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        let parts = self.chern_parts.parts();
        let mut i = 0;
        while i < parts.len() {
            let j = parts[i];
            let run = parts[i..].iter().take_while(|&&p| p == j).count();
            factors.push(if run == 1 { format!("c{j}") } else { format!("c{j}^{run}") });
            i += run;
        }
        match self.c1_power {
            0 => {}
            1 => factors.push("c1".into()),
            k => factors.push(format!("c1^{k}")),
        }
        match self.l_power {
            0 => {}
            1 => factors.push("L".into()),
            k => factors.push(format!("L^{k}")),
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// Rational linear combination of [`ChernMonomial`]s on a manifold of
/// dimension `n`. Terms of degree above `n` are dropped on insertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ChernExprJson", try_from = "ChernExprJson")]
pub struct ChernExpr {
    dimension: u32,
    terms: BTreeMap<ChernMonomial, Rational>,
}

impl ChernExpr {
    pub fn zero(n: u32) -> Self {
        ChernExpr { dimension: n, terms: BTreeMap::new() }
    }

    pub fn constant(n: u32, c: Rational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(ChernMonomial::one(), c);
        e
    }

    pub fn one(n: u32) -> Self {
        Self::constant(n, Rational::one())
    }

    /// `c_j(X)`; `c_0 = 1` and `c_j = 0` for `j > n`.
    pub fn chern(n: u32, j: u32) -> Self {
        match j {
            0 => Self::one(n),
            _ => Self::monomial(n, ChernMonomial::new(&Partition::new([j]), 0), Rational::one()),
        }
    }

    /// The polarization class `L`.
    pub fn polarization(n: u32) -> Self {
        Self::monomial(n, ChernMonomial::new(&Partition::empty(), 1), Rational::one())
    }

    pub fn monomial(n: u32, mono: ChernMonomial, c: Rational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(mono, c);
        e
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChernMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &ChernMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: ChernMonomial, c: Rational) {
        if c.is_zero() || mono.degree() > self.dimension {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    /// The common degree of all terms, or `None` for an inhomogeneous
    /// expression. The zero expression counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(ChernMonomial::degree);
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub fn degree_part(&self, k: u32) -> ChernExpr {
        ChernExpr {
            dimension: self.dimension,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &ChernExpr) -> ChernExpr {
        let mut out = self.clone();
        out.dimension = self.dimension.min(other.dimension);
        out.terms.retain(|m, _| m.degree() <= out.dimension);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ChernExpr) -> ChernExpr {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ChernExpr {
        let mut out = ChernExpr::zero(self.dimension);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &ChernExpr) -> ChernExpr {
        let mut out = ChernExpr::zero(self.dimension.min(other.dimension));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> ChernExpr {
        (0..k).fold(ChernExpr::one(self.dimension), |acc, _| acc.mul(self))
    }

    /// Terms in display order: decreasing degree, then decreasing monomial.
    pub fn sorted_terms(&self) -> Vec<(&ChernMonomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        terms
    }
}

impl fmt::Display for ChernExpr {
    /// Text such as `c2 + 3*c1^2 - 5*c1*L`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_unit = *m == ChernMonomial::one();
            if is_unit {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ChernExprJson {
    dimension: u32,
    terms: Vec<ChernTermJson>,
}

#[derive(Serialize, Deserialize)]
struct ChernTermJson {
    chern_parts: Vec<u32>,
    c1_power: u32,
    #[serde(rename = "L_power")]
    l_power: u32,
    num: String,
    den: String,
}

impl From<ChernExpr> for ChernExprJson {
    fn from(e: ChernExpr) -> Self {
        let terms = e
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| ChernTermJson {
                chern_parts: m.chern_parts.parts().to_vec(),
                c1_power: m.c1_power,
                l_power: m.l_power,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        ChernExprJson { dimension: e.dimension, terms }
    }
}

impl TryFrom<ChernExprJson> for ChernExpr {
    type Error = Error;

    fn try_from(j: ChernExprJson) -> Result<Self> {
        let mut e = ChernExpr::zero(j.dimension);
        for t in j.terms {
            if t.chern_parts.iter().any(|&p| p < 2) {
                return Err(Error::Parse("chern_parts must be at least 2".into()));
            }
            let mono =
                ChernMonomial { chern_parts: Partition::new(t.chern_parts), c1_power: t.c1_power, l_power: t.l_power };
            e.add_term(mono, parse_rational(&format!("{}/{}", t.num, t.den))?);
        }
        Ok(e)
    }
}

/// A divisor class `δ = a·c_1(X) + b·L` used to twist the tangent bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub c1: Rational,
    pub l: Rational,
}

impl Twist {
    pub fn new(c1: Rational, l: Rational) -> Self {
        Twist { c1, l }
    }

    pub fn zero() -> Self {
        Twist { c1: Rational::zero(), l: Rational::zero() }
    }

    /// `K_X + nA` with `A = 2K_X + C_n L`, i.e. `(2n+1)K_X + nC_n L`
    /// written as `−(2n+1)c_1 + nC_n L`.
    pub fn adjoint(n: u32) -> Self {
        Twist { c1: int(-(2 * n as i64 + 1)), l: big(BigInt::from(n) * fujita_constant(n)) }
    }

    pub fn as_expr(&self, n: u32) -> ChernExpr {
        ChernExpr::chern(n, 1).scale(&self.c1).add(&ChernExpr::polarization(n).scale(&self.l))
    }
}

/// Coefficients of `c_k(T ⊗ M) = Σ_j C(n−j, k−j) c_j δ^{k−j}` for a rank
/// `n` bundle `T`, as `(j, C(n−j, k−j))` pairs with `j = 0..=k`.
pub fn twist_coefficients(k: u32, n: u32) -> Result<Vec<(u32, BigInt)>> {
    if k > n {
        return invalid(format!("c_{k} of a rank {n} bundle"));
    }
    Ok((0..=k).map(|j| (j, binomial((n - j) as u64, (k - j) as u64))).collect())
}

/// `c_k(T_X ⊗ M)` where `c_1(M) = δ`, expanded in `c_j(X)` and `L`.
pub fn twist_chern_class(k: u32, n: u32, twist: &Twist) -> Result<ChernExpr> {
    let delta = twist.as_expr(n);
    let mut out = ChernExpr::zero(n);
    for (j, coeff) in twist_coefficients(k, n)? {
        let term = ChernExpr::chern(n, j).mul(&delta.pow(k - j)).scale(&big(coeff));
        out = out.add(&term);
    }
    Ok(out)
}

/// `c_1(E) = a·K_X + b·L` for the adjoint twist, returned as `(a, b)`.
pub fn adjoint_first_chern_kl(n: u32) -> (Rational, Rational) {
    let n_big = BigInt::from(n);
    let a = &n_big * BigInt::from(2 * n + 1) - BigInt::one();
    let b = &n_big * &n_big * fujita_constant(n);
    (big(a), big(b))
}

/// `c_λ(T_X ⊗ M) = Π_i c_{λ_i}(T_X ⊗ M)`.
pub fn twisted_monomial(lambda: &Partition, n: u32, twist: &Twist) -> Result<ChernExpr> {
    if lambda.max_part() > n || lambda.weight() > n {
        return invalid(format!("partition ({lambda}) does not fit dimension {n}"));
    }
    let mut acc = ChernExpr::one(n);
    for &part in lambda.parts() {
        acc = acc.mul(&twist_chern_class(part, n, twist)?);
    }
    Ok(acc)
}

/// `c_λ(E) = C_λ c_λ(X) + Σ_μ C_{λ,μ,n} c_μ(X)·L^{d−|μ|}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedExpansion {
    pub lambda: Partition,
    pub n: u32,
    /// `C_λ`.
    pub leading: Rational,
    /// `μ ↦ C_{λ,μ,n}`; the `L` power of each term is `|λ| − |μ|`.
    pub lower: BTreeMap<Partition, Rational>,
}

impl TwistedExpansion {
    pub fn degree(&self) -> u32 {
        self.lambda.weight()
    }

    /// Reassembles the expansion as a [`ChernExpr`].
    pub fn to_expr(&self) -> ChernExpr {
        let d = self.degree();
        let mut e = ChernExpr::monomial(self.n, ChernMonomial::new(&self.lambda, 0), self.leading.clone());
        for (mu, c) in &self.lower {
            e.add_term(ChernMonomial::new(mu, d - mu.weight()), c.clone());
        }
        e
    }
}

/// Whether `μ` sits strictly below `λ` in the order the linear bounds are
/// built along: either `c_μ` carries a positive power of `L`, or it has the
/// same degree and is strictly closer to a power of `c_1`.
pub fn precedes(mu: &Partition, lambda: &Partition) -> bool {
    mu.distance() <= lambda.distance() && (mu.weight() < lambda.weight() || mu.distance() < lambda.distance())
}

/// Expands `c_λ(T_X ⊗ O(K_X + nA))` and splits off the coefficient of
/// `c_λ(X)`.
pub fn expand_twisted_monomial(lambda: &Partition, n: u32) -> Result<TwistedExpansion> {
    expand_with_twist(lambda, n, &Twist::adjoint(n))
}

/// [`expand_twisted_monomial`] for an arbitrary twist `δ`.
pub fn expand_with_twist(lambda: &Partition, n: u32, twist: &Twist) -> Result<TwistedExpansion> {
    if !lambda.fits(n) {
        return invalid(format!("({lambda}) is not in P(d, {n})"));
    }
    let d = lambda.weight();
    let expr = twisted_monomial(lambda, n, twist)?;
    let target = ChernMonomial::new(lambda, 0);
    let mut leading = Rational::zero();
    let mut lower = BTreeMap::new();
    for (mono, c) in expr.terms() {
        if mono.degree() != d {
            return Err(Error::Integrity(format!(
                "term {mono} of degree {} in expansion of degree {d}",
                mono.degree()
            )));
        }
        if *mono == target {
            leading = c.clone();
            continue;
        }
        let mu = mono.partition();
        if !precedes(&mu, lambda) {
            return Err(Error::Integrity(format!("term c_({mu}) does not precede c_({lambda})")));
        }
        lower.insert(mu, c.clone());
    }
    if leading.is_zero() {
        return Err(Error::DegenerateConstant { lambda: lambda.to_string(), n });
    }
    Ok(TwistedExpansion { lambda: lambda.clone(), n, leading, lower })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::all_partitions_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn fujita_values() {
        let expect = [6, 23, 122, 717, 4370];
        for (n, e) in (1..=5).zip(expect) {
            assert_eq!(fujita_constant(n), BigInt::from(e));
        }
    }

    #[test]
    fn first_chern_of_twist() {
        // c_1(T ⊗ M) = c_1 + n δ
        for n in 1..=5 {
            let tw = Twist::adjoint(n);
            let got = twist_chern_class(1, n, &tw).unwrap();
            let want = ChernExpr::chern(n, 1).add(&tw.as_expr(n).scale(&int(n as i64)));
            assert_eq!(got, want);
        }
        // n = 2: c_1(E) = −9 c_1 + 92 L, i.e. 9 K + 92 L
        let e = twist_chern_class(1, 2, &Twist::adjoint(2)).unwrap();
        assert_eq!(e.to_string(), "-9*c1 + 92*L");
        assert_eq!(adjoint_first_chern_kl(2), (int(9), int(92)));
        assert_eq!(twist_chern_class(0, 3, &Twist::adjoint(3)).unwrap(), ChernExpr::one(3));
        assert!(twist_chern_class(3, 2, &Twist::zero()).is_err());
    }

    #[test]
    fn rank_one_twist() {
        let tw = Twist::new(int(3), int(-7));
        let got = twist_chern_class(1, 1, &tw).unwrap();
        assert_eq!(got, ChernExpr::chern(1, 1).add(&tw.as_expr(1)));
    }

    #[test]
    fn degree_two_twist_n2() {
        // c_2(E) = c_2 + c_1 δ + δ², δ = −5 c_1 + 46 L
        let n = 2;
        let delta = Twist::adjoint(n).as_expr(n);
        assert_eq!(delta.to_string(), "-5*c1 + 46*L");
        let want = ChernExpr::chern(n, 2).add(&ChernExpr::chern(n, 1).mul(&delta)).add(&delta.pow(2));
        let got = twist_chern_class(2, n, &Twist::adjoint(n)).unwrap();
        assert_eq!(got, want);
        let ex = expand_twisted_monomial(&p(&[2]), n).unwrap();
        assert_eq!(ex.leading, int(1));
        assert!(ex.lower.keys().all(|mu| mu.distance() == 0));
        // c_1 δ + δ² = 20 c_1² − 414 c_1 L + 2116 L²
        assert_eq!(ex.lower[&p(&[1, 1])], int(20));
        assert_eq!(ex.lower[&p(&[1])], int(-414));
        assert_eq!(ex.lower[&p(&[])], int(2116));
    }

    #[test]
    fn expansion_of_degree_one() {
        for n in 1..=5 {
            let ex = expand_twisted_monomial(&p(&[1]), n).unwrap();
            let nn = n as i64;
            assert_eq!(ex.leading, int(1 - nn * (2 * nn + 1)));
            let cn = fujita_constant(n);
            assert_eq!(ex.lower.len(), 1);
            assert_eq!(ex.lower[&Partition::empty()], big(BigInt::from(n * n) * cn));
        }
    }

    #[test]
    fn expansion_of_c1_squared_n2() {
        // ((1 − 10) c_1 + 92 L)² = 81 c_1² − 1656 c_1 L + 8464 L²
        let ex = expand_twisted_monomial(&p(&[1, 1]), 2).unwrap();
        assert_eq!(ex.leading, int(81));
        assert_eq!(ex.lower[&p(&[1])], int(-1656));
        assert_eq!(ex.lower[&Partition::empty()], int(8464));
    }

    /// Independent route: multiply the factors `c_{λ_i}(E)` written out term
    /// by term from the double binomial sum, over plain integer triples
    /// `(j, c1 power, L power)`.
    fn termwise(lambda: &Partition, n: u32) -> BTreeMap<ChernMonomial, Rational> {
        let nn = n as i64;
        let cn = fujita_constant(n);
        let mut acc: BTreeMap<ChernMonomial, Rational> = BTreeMap::new();
        acc.insert(ChernMonomial::one(), int(1));
        for &li in lambda.parts() {
            let mut factor: Vec<(ChernMonomial, Rational)> = Vec::new();
            for j in 0..=li {
                for k in 0..=(li - j) {
                    let e = li - j - k;
                    let coeff = big(binomial((n - j) as u64, (li - j) as u64)
                        * binomial((li - j) as u64, k as u64)
                        * num_traits::pow(BigInt::from(2 * nn + 1), e as usize)
                        * num_traits::pow(BigInt::from(nn) * &cn, k as usize))
                        * int(if e % 2 == 0 { 1 } else { -1 });
                    let cj = if j == 0 { Partition::empty() } else { Partition::new([j]) };
                    let mono = ChernMonomial::new(&cj.merge(&Partition::ones(e)), k);
                    factor.push((mono, coeff));
                }
            }
            let mut next = BTreeMap::new();
            for (ma, ca) in &acc {
                for (mb, cb) in &factor {
                    *next.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
                }
            }
            next.retain(|_, c: &mut Rational| !c.is_zero());
            acc = next;
        }
        acc
    }

    #[test]
    fn expansion_matches_termwise_oracle() {
        for n in 1..=5 {
            for lambda in all_partitions_up_to(n) {
                let got = twisted_monomial(&lambda, n, &Twist::adjoint(n)).unwrap();
                let got: BTreeMap<_, _> = got.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
                assert_eq!(got, termwise(&lambda, n), "lambda = ({lambda}), n = {n}");
            }
        }
    }

    #[test]
    fn expansion_invariants() {
        for n in 1..=6 {
            for lambda in all_partitions_up_to(n) {
                let ex = expand_twisted_monomial(&lambda, n).unwrap();
                assert_eq!(ex.to_expr().homogeneous_degree(), Some(lambda.weight()));
                for mu in ex.lower.keys() {
                    assert!(mu.weight() <= lambda.weight());
                    assert!(mu.distance() <= lambda.distance());
                    assert!(precedes(mu, &lambda));
                }
                // C_λ = (1 − n(2n+1))^{#ones}
                let base = int(1 - (n as i64) * (2 * n as i64 + 1));
                assert_eq!(ex.leading, num_traits::pow(base, lambda.ones_count() as usize));
            }
        }
    }

    #[test]
    fn same_distance_terms_carry_polarization() {
        // c_2(E)·c_1(E) contains 1098·c_2·L for n = 3: same distance as (2,1),
        // strictly smaller Chern degree.
        let ex = expand_twisted_monomial(&p(&[2, 1]), 3).unwrap();
        assert_eq!(ex.lower[&p(&[2])], int(1098));
        assert_eq!(p(&[2]).distance(), p(&[2, 1]).distance());
    }

    #[test]
    fn zero_twist_is_identity() {
        for n in 1..=5 {
            for lambda in all_partitions_up_to(n) {
                let ex = expand_with_twist(&lambda, n, &Twist::zero()).unwrap();
                assert_eq!(ex.leading, int(1));
                assert!(ex.lower.is_empty());
            }
        }
    }

    #[test]
    fn degenerate_constant_reported() {
        // δ = −c_1 makes c_1(T ⊗ M) = 0 in rank one.
        let err = expand_with_twist(&p(&[1]), 1, &Twist::new(int(-1), int(0))).unwrap_err();
        assert!(matches!(err, Error::DegenerateConstant { .. }));
    }

    #[test]
    fn text_and_json() {
        let e = ChernExpr::chern(3, 2)
            .add(&ChernExpr::chern(3, 1).pow(2).scale(&int(3)))
            .sub(&ChernExpr::chern(3, 1).mul(&ChernExpr::polarization(3)).scale(&int(5)));
        assert_eq!(e.to_string(), "c2 + 3*c1^2 - 5*c1*L");
        let js = serde_json::to_string(&e).unwrap();
        let back: ChernExpr = serde_json::from_str(&js).unwrap();
        assert_eq!(back, e);
        assert!(js.contains(r#""L_power":1"#));
        let mono = ChernMonomial::new(&p(&[3, 2, 2, 1]), 2);
        assert_eq!(mono.to_string(), "c3*c2^2*c1*L^2");
        assert_eq!(ChernExpr::chern(2, 3).to_string(), "0");
    }
}
