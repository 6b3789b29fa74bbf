//! Universal bounds on Chern numbers.
//!
//! Write `x_i = K_X^i·L^{n−i}`, `x = L^n` and `y = K_X·L^{n−1}`. For every
//! `λ ∈ P(d, n)` this module constructs
//!
//! * linear forms `P_λ^− ≤ c_λ(X)·L^{n−d} ≤ P_λ^+` in `x_0, …, x_d`,
//! * polynomials `R_i^− ≤ (K^i·L^{n−i})·x^{i−1} ≤ R_i^+` in `(x, y)`,
//! * polynomials `Q_λ^− ≤ (c_λ·L^{n−d})·x^{d−1} ≤ Q_λ^+` in `(x, y)`,
//! * and the single polynomial `Q_λ ≥ max(Q_λ^+, −Q_λ^−)`, valid wherever
//!   `y ≥ −(n+1)x`, which bounds `|c_λ·L^{n−d}|·x^{d−1}`.
//!
//! The linear forms come from the positivity of the Chern classes of the nef
//! bundle `E = T_X ⊗ O(K_X + nA)`, `A = 2K_X + C_n L`:
//! `c_1(E)^d·L^{n−d} ≥ c_λ(E)·L^{n−d} ≥ 0`. Expanding `c_λ(E)` leaves `c_λ(X)`
//! with a nonzero constant plus lower terms that are already bounded, so the
//! construction recurses down to pure powers of `c_1`, where the value is
//! known exactly. The bounds on `K^i·L^{n−i}` come from nefness of
//! `K_X + (n+1)L` and the Khovanskii–Teissier inequalities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::chern::{adjoint_first_chern_kl, expand_twisted_monomial};
use crate::error::{invalid, Error, Result};
use crate::partitions::{all_partitions_up_to, enumerate_partitions, Partition};
use crate::poly::{big, binomial, indexed_vars, int, MultiPoly, Rational};

/// Variables of the bivariate bounds: `x = L^n`, `y = K·L^{n−1}`.
pub const XY: [&str; 2] = ["x", "y"];

/// A linear form `Σ_{i=0}^{d} a_i x_i` where `x_i` stands for `K^i·L^{n−i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearBoundForm {
    coefficients: Vec<Rational>,
}

impl LinearBoundForm {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "a linear form has at least x_0");
        LinearBoundForm { coefficients }
    }

    /// The zero form in `x_0, …, x_d`.
    pub fn zero(d: u32) -> Self {
        LinearBoundForm { coefficients: vec![Rational::zero(); d as usize + 1] }
    }

    /// `c · x_i` in `x_0, …, x_d`.
    pub fn unit(d: u32, i: u32, c: Rational) -> Self {
        let mut f = Self::zero(d);
        f.coefficients[i as usize] = c;
        f
    }

    /// Index of the last variable.
    pub fn degree(&self) -> u32 {
        self.coefficients.len() as u32 - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: u32) -> Rational {
        self.coefficients.get(i as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Evaluates at `(K^i·L^{n−i})_i`; extra entries are ignored.
    pub fn eval(&self, kl: &[Rational]) -> Result<Rational> {
        if kl.len() < self.coefficients.len() {
            return invalid(format!("need {} intersection numbers, got {}", self.coefficients.len(), kl.len()));
        }
        Ok(self.coefficients.iter().zip(kl).map(|(a, v)| a * v).sum())
    }

    /// Pads with zero coefficients up to `x_d`.
    pub fn embed(&self, d: u32) -> Self {
        let mut c = self.coefficients.clone();
        c.resize(c.len().max(d as usize + 1), Rational::zero());
        LinearBoundForm { coefficients: c }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let a = self.embed(len as u32 - 1);
        let b = other.embed(len as u32 - 1);
        LinearBoundForm { coefficients: a.coefficients.iter().zip(&b.coefficients).map(|(p, q)| p + q).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LinearBoundForm { coefficients: self.coefficients.iter().map(|a| a * c).collect() }
    }

    /// The form as a polynomial in `x0, …, xd`.
    pub fn to_poly(&self) -> MultiPoly {
        let vars = indexed_vars("x", self.coefficients.len());
        let len = vars.len();
        let terms = self.coefficients.iter().enumerate().map(|(i, c)| {
            let mut e = vec![0; len];
            e[i] = 1;
            (e, c.clone())
        });
        MultiPoly::from_terms(&vars, terms).expect("indexed variables are canonical")
    }
}

impl fmt::Display for LinearBoundForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// `P_λ^− ≤ c_λ(X)·L^{n−d} ≤ P_λ^+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearBounds {
    pub lambda: Partition,
    pub n: u32,
    pub lower: LinearBoundForm,
    pub upper: LinearBoundForm,
}

/// A lower and an upper polynomial bound in `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: MultiPoly,
    pub upper: MultiPoly,
}

/// `Q_λ^±` and the symmetric bound `Q_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainBound {
    pub lambda: Partition,
    pub n: u32,
    pub lower: MultiPoly,
    pub upper: MultiPoly,
    pub symmetric: MultiPoly,
}

impl MainBound {
    pub fn degree(&self) -> u32 {
        self.lambda.weight()
    }
}

/// `c_1(E)^d·L^{n−d}` as a linear form: with `c_1(E) = aK + bL`, the
/// coefficient of `x_i` is `C(d, i)·a^i·b^{d−i}`.
pub fn top_form(n: u32, d: u32) -> LinearBoundForm {
    let (a, b) = adjoint_first_chern_kl(n);
    LinearBoundForm::new(
        (0..=d)
            .map(|i| {
                big(binomial(d as u64, i as u64))
                    * num_traits::pow(a.clone(), i as usize)
                    * num_traits::pow(b.clone(), (d - i) as usize)
            })
            .collect(),
    )
}

/// Memoizing builder for all bounds in a fixed dimension `n`.
#[derive(Debug)]
pub struct BoundBuilder {
    n: u32,
    linear: HashMap<Partition, LinearBounds>,
    k_powers: Vec<BoundPair>,
    main: HashMap<Partition, MainBound>,
}

impl BoundBuilder {
    pub fn new(n: u32) -> Result<Self> {
        if n < 1 {
            return invalid("dimension must be at least 1");
        }
        Ok(BoundBuilder { n, linear: HashMap::new(), k_powers: Vec::new(), main: HashMap::new() })
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    fn check_partition(&self, lambda: &Partition) -> Result<()> {
        if !lambda.fits(self.n) {
            return invalid(format!("({lambda}) is not in P(d, {})", self.n));
        }
        Ok(())
    }

    /// `P_λ^±`.
    pub fn linear_bounds(&mut self, lambda: &Partition) -> Result<LinearBounds> {
        self.check_partition(lambda)?;
        self.linear_rec(lambda)
    }

    // The empty partition is allowed here: c_∅·L^n = x_0.
    fn linear_rec(&mut self, lambda: &Partition) -> Result<LinearBounds> {
        if let Some(b) = self.linear.get(lambda) {
            return Ok(b.clone());
        }
        let n = self.n;
        let d = lambda.weight();
        let (lower, upper) = if lambda.is_c1_power() {
            // c_1^d·L^{n−d} = (−K)^d·L^{n−d} = (−1)^d x_d exactly.
            let sign = if d.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
            let form = LinearBoundForm::unit(d, d, sign);
            (form.clone(), form)
        } else {
            let ex = expand_twisted_monomial(lambda, n)?;
            // Lower and upper bounds on Σ_μ C_{λ,μ,n} c_μ·L^{n−|μ|}.
            let mut sum_lo = LinearBoundForm::zero(d);
            let mut sum_hi = LinearBoundForm::zero(d);
            for (mu, c) in &ex.lower {
                let b = self.linear_rec(mu)?;
                let (lo, hi) = if c.is_negative() { (&b.upper, &b.lower) } else { (&b.lower, &b.upper) };
                sum_lo = sum_lo.add(&lo.scale(c));
                sum_hi = sum_hi.add(&hi.scale(c));
            }
            let inv = ex.leading.recip();
            // From C_λ c_λ ≤ c_1(E)^d − Σ and C_λ c_λ ≥ −Σ.
            let from_top = top_form(n, d).add(&sum_lo.scale(&-Rational::one())).scale(&inv);
            let from_zero = sum_hi.scale(&-inv);
            if ex.leading.is_positive() {
                (from_zero, from_top)
            } else {
                (from_top, from_zero)
            }
        };
        if lower.degree() != d || upper.degree() != d {
            return Err(Error::Integrity(format!("linear bound for ({lambda}) has wrong length")));
        }
        let b = LinearBounds { lambda: lambda.clone(), n, lower, upper };
        self.linear.insert(lambda.clone(), b.clone());
        Ok(b)
    }

    /// `R_i^±` for `1 ≤ i ≤ n`.
    pub fn k_power_bounds(&mut self, i: u32) -> Result<BoundPair> {
        if i < 1 || i > self.n {
            return invalid(format!("R_i needs 1 <= i <= n = {}, got i = {i}", self.n));
        }
        while (self.k_powers.len() as u32) < i {
            let next = self.k_powers.len() as u32 + 1;
            let pair = self.build_k_power(next)?;
            self.k_powers.push(pair);
        }
        Ok(self.k_powers[i as usize - 1].clone())
    }

    fn build_k_power(&self, i: u32) -> Result<BoundPair> {
        let x = MultiPoly::var(&XY, "x")?;
        let y = MultiPoly::var(&XY, "y")?;
        if i == 1 {
            return Ok(BoundPair { lower: y.clone(), upper: y });
        }
        let np1 = int(self.n as i64 + 1);
        // Σ_{j=0}^{i} C(i,j)(n+1)^{i−j} K^j·L^{n−j} = (K+(n+1)L)^i·L^{n−i} ∈ [0, ((n+1)x + y)^i / x^{i−1}]
        let base = x.pow(i).scale(&num_traits::pow(np1.clone(), i as usize));
        let mut lower = -&base;
        let mut upper = &(&x.scale(&np1) + &y).pow(i) - &base;
        for j in 1..i {
            let c = big(binomial(i as u64, j as u64)) * num_traits::pow(np1.clone(), (i - j) as usize);
            let shift = [i - j, 0];
            let prev = &self.k_powers[j as usize - 1];
            lower = &lower - &prev.upper.shift(&shift).scale(&c);
            upper = &upper - &prev.lower.shift(&shift).scale(&c);
        }
        if lower.degree() > i || upper.degree() > i {
            return Err(Error::Integrity(format!("R_{i} exceeds degree {i}")));
        }
        Ok(BoundPair { lower, upper })
    }

    /// `Q_λ^±` and `Q_λ`.
    pub fn main_bound(&mut self, lambda: &Partition) -> Result<MainBound> {
        self.check_partition(lambda)?;
        if let Some(b) = self.main.get(lambda) {
            return Ok(b.clone());
        }
        let d = lambda.weight();
        let p = self.linear_rec(lambda)?;
        let x = MultiPoly::var(&XY, "x")?;
        let mut upper = x.pow(d).scale(&p.upper.coefficient(0));
        let mut lower = x.pow(d).scale(&p.lower.coefficient(0));
        for i in 1..=d {
            let r = self.k_power_bounds(i)?;
            let shift = [d - i, 0];
            let cu = p.upper.coefficient(i);
            let r_up = if cu.is_negative() { &r.lower } else { &r.upper };
            upper = &upper + &r_up.shift(&shift).scale(&cu);
            let cl = p.lower.coefficient(i);
            let r_lo = if cl.is_negative() { &r.upper } else { &r.lower };
            lower = &lower + &r_lo.shift(&shift).scale(&cl);
        }
        let symmetric = symmetrize(&upper, &lower, self.n);
        for (name, q) in [("Q+", &upper), ("Q-", &lower), ("Q", &symmetric)] {
            if q.degree() > d {
                return Err(Error::Integrity(format!("{name} for ({lambda}) exceeds degree {d}")));
            }
        }
        let b = MainBound { lambda: lambda.clone(), n: self.n, lower, upper, symmetric };
        self.main.insert(lambda.clone(), b.clone());
        Ok(b)
    }
}

/// `Q = Σ max(a⁺_ij, −a⁻_ij) x^i y^j + Σ |a⁺_ij + a⁻_ij| (n+1)^j x^{i+j}`.
pub fn symmetrize(upper: &MultiPoly, lower: &MultiPoly, n: u32) -> MultiPoly {
    let np1 = int(n as i64 + 1);
    let mut keys: Vec<Vec<u32>> = upper.terms().map(|(e, _)| e.to_vec()).collect();
    keys.extend(lower.terms().map(|(e, _)| e.to_vec()));
    keys.sort();
    keys.dedup();
    let mut q = MultiPoly::zero(&XY);
    for e in keys {
        let (i, j) = (e[0], e[1]);
        let ap = upper.coeff(&e);
        let am = lower.coeff(&e);
        let neg_am = -&am;
        let top = if ap > neg_am { ap.clone() } else { neg_am };
        q.add_term(e.clone(), top);
        let gap = (ap + am).abs();
        q.add_term(vec![i + j, 0], gap * num_traits::pow(np1.clone(), j as usize));
    }
    q
}

/// Every bound for dimension `n`, built once and then shared read-only.
#[derive(Clone, Debug)]
pub struct BoundTable {
    pub n: u32,
    pub linear: BTreeMap<Partition, LinearBounds>,
    pub k_powers: Vec<BoundPair>,
    pub main: BTreeMap<Partition, MainBound>,
}

impl BoundTable {
    pub fn build(n: u32) -> Result<Self> {
        let mut b = BoundBuilder::new(n)?;
        let mut linear = BTreeMap::new();
        let mut main = BTreeMap::new();
        for lambda in all_partitions_up_to(n) {
            linear.insert(lambda.clone(), b.linear_bounds(&lambda)?);
            main.insert(lambda.clone(), b.main_bound(&lambda)?);
        }
        let k_powers = (1..=n).map(|i| b.k_power_bounds(i)).collect::<Result<Vec<_>>>()?;
        Ok(BoundTable { n, linear, k_powers, main })
    }

    pub fn linear(&self, lambda: &Partition) -> Result<&LinearBounds> {
        self.linear.get(lambda).ok_or_else(|| Error::InvalidArgument(format!("({lambda}) is not in P(d, {})", self.n)))
    }

    pub fn main(&self, lambda: &Partition) -> Result<&MainBound> {
        self.main.get(lambda).ok_or_else(|| Error::InvalidArgument(format!("({lambda}) is not in P(d, {})", self.n)))
    }

    pub fn k_power(&self, i: u32) -> Result<&BoundPair> {
        self.k_powers
            .get((i as usize).wrapping_sub(1))
            .ok_or_else(|| Error::InvalidArgument(format!("R_{i} out of range for n = {}", self.n)))
    }
}

/// `(P_λ^−, P_λ^+)`.
pub fn build_p_pm(lambda: &Partition, n: u32) -> Result<(LinearBoundForm, LinearBoundForm)> {
    let b = BoundBuilder::new(n)?.linear_bounds(lambda)?;
    Ok((b.lower, b.upper))
}

/// `R_i^±`.
pub fn build_r_pm(i: u32, n: u32) -> Result<BoundPair> {
    BoundBuilder::new(n)?.k_power_bounds(i)
}

/// `Q_λ^−, Q_λ^+` and `Q_λ`.
pub fn build_q(lambda: &Partition, n: u32) -> Result<MainBound> {
    BoundBuilder::new(n)?.main_bound(lambda)
}

/// The Chern-ratio constant `c_n` with the partition that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioBound {
    pub n: u32,
    pub value: Rational,
    pub witness: Partition,
    /// `+1` when attained on the slice `y = x` (`K` ample, `L = K`), `−1` on
    /// `y = −x` (`−K` ample, `L = −K`).
    pub sign: i8,
}

/// `Σ_i |b_i|` where `Q(x, s·x) = Σ_i b_i x^i`.
pub fn diagonal_abs_sum(q: &MultiPoly, sign: i8) -> Rational {
    let mut b: BTreeMap<u32, Rational> = BTreeMap::new();
    for (e, c) in q.terms() {
        let c = if sign < 0 && e[1] % 2 == 1 { -c } else { c.clone() };
        *b.entry(e[0] + e[1]).or_insert_with(Rational::zero) += c;
    }
    b.values().map(Signed::abs).sum()
}

/// `c_n`: for `K_X` or `−K_X` ample, `|c_λ(X)/c_1(X)^n| ≤ c_n` for every
/// `λ ∈ P(n, n)`.
///
/// Taking `L = K_X` puts `(L^n, K·L^{n−1})` on the diagonal `y = x`; taking
/// `L = −K_X` puts it on `y = −x`. Both slices are covered.
pub fn chern_ratio_bound(n: u32) -> Result<RatioBound> {
    let mut builder = BoundBuilder::new(n)?;
    ratio_bound_with(&mut builder)
}

pub(crate) fn ratio_bound_with(builder: &mut BoundBuilder) -> Result<RatioBound> {
    let n = builder.dimension();
    let mut best: Option<RatioBound> = None;
    for lambda in enumerate_partitions(n, n)? {
        let q = builder.main_bound(&lambda)?.symmetric;
        for sign in [1i8, -1] {
            let value = diagonal_abs_sum(&q, sign);
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(RatioBound { n, value, witness: lambda.clone(), sign });
            }
        }
    }
    best.ok_or_else(|| Error::Integrity("P(n, n) is empty".into()))
}

/// Same as [`chern_ratio_bound`] but reading the polynomials from a table.
pub fn ratio_bound_from_table(table: &BoundTable) -> Result<RatioBound> {
    let n = table.n;
    let mut best: Option<RatioBound> = None;
    for lambda in enumerate_partitions(n, n)? {
        let q = &table.main(&lambda)?.symmetric;
        for sign in [1i8, -1] {
            let value = diagonal_abs_sum(q, sign);
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(RatioBound { n, value, witness: lambda.clone(), sign });
            }
        }
    }
    best.ok_or_else(|| Error::Integrity("P(n, n) is empty".into()))
}

fn rpow(base: &Rational, exp: i64) -> Rational {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// Supremum of `c·x^a·y^j` over `1 ≤ x ≤ v`, `lo ≤ y ≤ hi`.
fn monomial_sup(c: &Rational, a: i64, j: u32, v: &Rational, lo: &Rational, hi: &Rational) -> Rational {
    let mut g = vec![c * num_traits::pow(lo.clone(), j as usize), c * num_traits::pow(hi.clone(), j as usize)];
    if j > 0 && lo.is_negative() && hi.is_positive() {
        g.push(Rational::zero());
    }
    let f = [Rational::one(), rpow(v, a)];
    f.iter().flat_map(|fx| g.iter().map(move |gy| fx * gy)).max().expect("nonempty")
}

/// `c(n, v, w)`: a bound on `|c_λ·L^{n−d}|` valid whenever `L^n ≤ v` and
/// `K·L^{n−1} ≤ w`.
///
/// `Q_λ(x, y)/x^{d−1}` is bounded term by term by its supremum over the box
/// `1 ≤ x ≤ v`, `−(n+1)v ≤ y ≤ w`, which contains every admissible point.
pub fn uniform_bound(n: u32, v: &Rational, w: &Rational, lambda: &Partition) -> Result<Rational> {
    if *v < Rational::one() {
        return invalid(format!("v = {v} must be at least 1"));
    }
    let lo = -int(n as i64 + 1) * v;
    if *w < lo {
        return Err(Error::EmptyBox { w: w.to_string(), min: lo.to_string() });
    }
    let q = build_q(lambda, n)?.symmetric;
    Ok(uniform_bound_of(&q, lambda.weight(), n, v, w))
}

pub(crate) fn uniform_bound_of(q: &MultiPoly, d: u32, n: u32, v: &Rational, w: &Rational) -> Rational {
    let lo = -int(n as i64 + 1) * v;
    q.terms().map(|(e, c)| monomial_sup(c, e[0] as i64 - (d as i64 - 1), e[1], v, &lo, w)).sum()
}
