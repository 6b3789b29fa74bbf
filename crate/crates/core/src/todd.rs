//! Todd classes, Hilbert polynomials and the Riemann–Roch tail bound.
//!
//! The Todd class is generated from `Π x_k/(1 − e^{−x_k})`: its logarithm is
//! `Σ_k α_k p_k` in the power sums of the Chern roots, and the power sums are
//! rewritten in Chern classes with Newton's identities.

use num_traits::{Signed, Zero};

use crate::bounds::{BoundTable, XY};
use crate::chern::ChernExpr;
use crate::error::{invalid, Result};
use crate::partitions::enumerate_partitions;
use crate::poly::{big, factorial, int, MultiPoly, Rational};
use crate::variety::VarietySpec;

/// Variables of the tail bound: `x = L^n`, `y = K·L^{n−1}` and the
/// multiple `z = k` of the polarization.
pub const XYZ: [&str; 3] = ["x", "y", "z"];

/// `S_i(X)`, the degree `i` part of the Todd class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToddComponent {
    pub degree: u32,
    pub expr: ChernExpr,
}

/// Coefficients of `log(x/(1 − e^{−x}))` up to `x^max`.
fn log_todd_series(max: u32) -> Vec<Rational> {
    let len = max as usize + 1;
    // g = (1 − e^{−x})/x = Σ (−1)^k x^k/(k+1)!
    let g: Vec<Rational> = (0..len)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            int(sign) / big(factorial(k as u64 + 1))
        })
        .collect();
    // log f = −log g, and (log g)' = g'/g solved term by term
    let mut log_g = vec![Rational::zero(); len];
    let mut ratio = vec![Rational::zero(); len];
    for k in 0..len.saturating_sub(1) {
        // g'_k = (k+1) g_{k+1};  ratio = g'/g
        let mut r = int(k as i64 + 1) * &g[k + 1];
        for j in 0..k {
            r -= &ratio[j] * &g[k - j];
        }
        ratio[k] = r;
        log_g[k + 1] = &ratio[k] / int(k as i64 + 1);
    }
    log_g.into_iter().map(|c| -c).collect()
}

/// Power sums `p_1..p_max` of the Chern roots, in Chern classes.
fn power_sums(max: u32) -> Vec<ChernExpr> {
    let c = |j: u32| ChernExpr::chern(max, j);
    let mut p: Vec<ChernExpr> = vec![ChernExpr::zero(max)];
    for k in 1..=max {
        // p_k = Σ_{i=1}^{k−1} (−1)^{i−1} c_i p_{k−i} + (−1)^{k−1} k c_k
        let mut acc = c(k).scale(&int(if k % 2 == 1 { k as i64 } else { -(k as i64) }));
        for i in 1..k {
            let term = c(i).mul(&p[(k - i) as usize]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        p.push(acc);
    }
    p
}

/// The full Todd class through degree `max`, as one inhomogeneous expression.
pub fn todd_class(max: u32) -> ChernExpr {
    if max == 0 {
        return ChernExpr::one(0);
    }
    let alpha = log_todd_series(max);
    let p = power_sums(max);
    let mut u = ChernExpr::zero(max);
    for k in 1..=max {
        u = u.add(&p[k as usize].scale(&alpha[k as usize]));
    }
    // exp(u), u without constant term
    let mut td = ChernExpr::one(max);
    let mut power = ChernExpr::one(max);
    for j in 1..=max {
        power = power.mul(&u).scale(&(int(1) / int(j as i64)));
        td = td.add(&power);
    }
    td
}

/// `S_i(X)` as a combination of the `c_μ`, `|μ| = i`.
pub fn todd_component(i: u32) -> ToddComponent {
    ToddComponent { degree: i, expr: todd_class(i).degree_part(i) }
}

/// `χ(X, kL) = Σ_i a_i k^{n−i}` with `a_i = S_i(X)·L^{n−i}/(n−i)!`, and a
/// truncation index `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub n: u32,
    pub coefficients: Vec<Rational>,
    pub truncation: u32,
}

impl HilbertData {
    fn partial(&self, k: &Rational, range: impl Iterator<Item = u32>) -> Rational {
        range.map(|i| &self.coefficients[i as usize] * num_traits::pow(k.clone(), (self.n - i) as usize)).sum()
    }

    /// `χ(X, kL)`.
    pub fn chi(&self, k: &Rational) -> Rational {
        self.partial(k, 0..=self.n)
    }

    /// `Σ_{i ≤ m} a_i k^{n−i}`.
    pub fn truncated(&self, k: &Rational) -> Rational {
        self.partial(k, 0..=self.truncation)
    }

    /// `Σ_{i > m} a_i k^{n−i}`.
    pub fn tail(&self, k: &Rational) -> Rational {
        self.partial(k, self.truncation + 1..=self.n)
    }

    /// `χ(X, kL)` as a polynomial in `z = k`.
    pub fn polynomial(&self) -> MultiPoly {
        let terms = self.coefficients.iter().enumerate().map(|(i, a)| (vec![self.n - i as u32], a.clone()));
        MultiPoly::from_terms(&["z"], terms).expect("single variable")
    }
}

/// Hilbert polynomial coefficients of `(X, L)` from the Todd class and the
/// exact intersection numbers of the catalog entry.
pub fn hilbert_coefficients(variety: &VarietySpec, m: u32) -> Result<HilbertData> {
    let n = variety.dimension();
    if m > n {
        return invalid(format!("truncation m = {m} exceeds n = {n}"));
    }
    let iv = variety.intersection_vector()?;
    let coefficients = (0..=n)
        .map(|i| {
            let s = iv.evaluate(&todd_component(i).expr)?;
            Ok(s / big(factorial((n - i) as u64)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertData { n, coefficients, truncation: m })
}

/// `Q(x, y, z)` with `|Σ_{i>m} a_i k^{n−i}| ≤ Q(L^n, K·L^{n−1}, k)` for every
/// polarized manifold of dimension `n` and `k ≥ 0`.
///
/// Writing `S_i = Σ_μ t_μ c_μ`, the coefficient of `z^{n−i}` is
/// `Σ_μ |t_μ| Q_μ(x, y)/(n−i)!`. It dominates `|a_i|` because
/// `|c_μ·L^{n−i}| ≤ Q_μ/x^{i−1} ≤ Q_μ` once `x = L^n ≥ 1`.
pub fn rr_tail_bound(n: u32, m: u32) -> Result<MultiPoly> {
    rr_tail_bound_from_table(&BoundTable::build(n)?, m)
}

/// Same as [`rr_tail_bound`] reading `Q_μ` from a prebuilt table.
pub fn rr_tail_bound_from_table(table: &BoundTable, m: u32) -> Result<MultiPoly> {
    let n = table.n;
    if m >= n {
        return invalid(format!("nothing to bound: m = {m} but n = {n}"));
    }
    let mut q = MultiPoly::zero(&XYZ);
    for i in m + 1..=n {
        let s = todd_component(i).expr;
        let scale = int(1) / big(factorial((n - i) as u64));
        let mut coeff = MultiPoly::zero(&XY);
        for mu in enumerate_partitions(i, n)? {
            let t = s.terms().filter(|(mono, _)| mono.partition() == mu).map(|(_, c)| c.abs()).sum::<Rational>();
            if !t.is_zero() {
                coeff = &coeff + &table.main(&mu)?.symmetric.scale(&t);
            }
        }
        for (e, c) in coeff.terms() {
            q.add_term(vec![e[0], e[1], n - i], c * &scale);
        }
    }
    Ok(q)
}

/// `Q` evaluated at `(x, y, k)`.
pub fn eval_tail_bound(q: &MultiPoly, x: &Rational, y: &Rational, k: &Rational) -> Result<Rational> {
    q.eval_at(&[x.clone(), y.clone(), k.clone()])
}

/// Degree of `Q` in `z`.
pub fn z_degree(q: &MultiPoly) -> u32 {
    q.terms().map(|(e, _)| e[2]).max().unwrap_or(0)
}

/// True when every coefficient is nonnegative.
pub fn has_nonnegative_coefficients(q: &MultiPoly) -> bool {
    q.terms().all(|(_, c)| !c.is_negative())
}
