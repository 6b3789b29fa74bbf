//! The inequality suite, run over every catalog entry of one dimension.
//!
//! Each check becomes a [`Row`] carrying the exact rationals involved, so a
//! report can be re-audited without recomputing anything. Rows come out in
//! catalog order and, within an entry, in a fixed order, regardless of how
//! the entries were scheduled.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{ratio_bound_from_table, BoundTable, RatioBound};
use crate::error::{Error, Result};
use crate::partitions::{all_partitions_up_to, enumerate_partitions, Partition};
use crate::poly::{big, int, MultiPoly, Rational};
use crate::todd::{eval_tail_bound, hilbert_coefficients, rr_tail_bound_from_table};
use crate::variety::{check_log_concavity, check_nef_chain, Catalog, Divisor, VarietyKind, VarietySpec};

/// Version tag written at the top of every report.
pub const SCHEMA: &str = "v1";

/// Largest `k` used for the Riemann–Roch checks.
pub const MAX_K: i64 = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub variety: String,
    pub lambda: Option<Partition>,
    pub quantity: String,
    pub lower: Option<String>,
    pub value: String,
    pub upper: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub varieties: usize,
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub n: u32,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

/// Everything that depends only on `n`, shared by all entries.
pub struct Context {
    pub n: u32,
    pub table: BoundTable,
    pub ratio: RatioBound,
    pub tails: Vec<MultiPoly>,
}

impl Context {
    pub fn new(n: u32) -> Result<Self> {
        let table = BoundTable::build(n)?;
        let ratio = ratio_bound_from_table(&table)?;
        let tails = (0..n).map(|m| rr_tail_bound_from_table(&table, m)).collect::<Result<Vec<_>>>()?;
        Ok(Context { n, table, ratio, tails })
    }
}

struct Rows<'a> {
    variety: &'a str,
    rows: Vec<Row>,
}

impl Rows<'_> {
    fn push(
        &mut self,
        lambda: Option<&Partition>,
        quantity: impl Into<String>,
        lower: Option<&Rational>,
        value: &Rational,
        upper: Option<&Rational>,
    ) {
        let pass = lower.is_none_or(|l| l <= value) && upper.is_none_or(|u| value <= u);
        self.push_with(lambda, quantity, lower, value, upper, pass);
    }

    fn push_with(
        &mut self,
        lambda: Option<&Partition>,
        quantity: impl Into<String>,
        lower: Option<&Rational>,
        value: &Rational,
        upper: Option<&Rational>,
        pass: bool,
    ) {
        self.rows.push(Row {
            variety: self.variety.to_owned(),
            lambda: lambda.cloned(),
            quantity: quantity.into(),
            lower: lower.map(ToString::to_string),
            value: value.to_string(),
            upper: upper.map(ToString::to_string),
            pass,
        });
    }
}

/// Runs every check on one entry of dimension `ctx.n`.
pub fn verify_variety(v: &VarietySpec, ctx: &Context) -> Result<Vec<Row>> {
    let n = ctx.n;
    if v.dimension() != n {
        return Err(Error::InvalidArgument(format!("{} has dimension {}, not {n}", v.id, v.dimension())));
    }
    let iv = v.intersection_vector()?;
    let kl = iv.kl_rational();
    let [x, y] = iv.point();
    let xy = [x.clone(), y.clone()];
    let np1 = int(n as i64 + 1);
    let mut out = Rows { variety: &v.id, rows: Vec::new() };

    // the bivariate bounds need x ≥ 1 and y ≥ −(n+1)x
    let floor = -&np1 * &x;
    let admissible = x >= Rational::one() && y >= floor;
    out.push_with(None, "admissibility", Some(&floor), &y, None, admissible);

    for d in 1..=n {
        let c1 = big(iv.chern_number(&Partition::ones(d))?);
        let expect = if d % 2 == 0 { kl[d as usize].clone() } else { -&kl[d as usize] };
        out.push(Some(&Partition::ones(d)), "consistency", Some(&expect), &c1, Some(&expect));
    }

    for lambda in all_partitions_up_to(n) {
        let d = lambda.weight();
        let c = big(iv.chern_number(&lambda)?);
        let p = ctx.table.linear(&lambda)?;
        out.push(Some(&lambda), "P", Some(&p.lower.eval(&kl)?), &c, Some(&p.upper.eval(&kl)?));

        let scaled = &c * num_traits::pow(x.clone(), d as usize - 1);
        let q = ctx.table.main(&lambda)?;
        let q_lo = q.lower.eval_at(&xy)?;
        let q_hi = q.upper.eval_at(&xy)?;
        let q_sym = q.symmetric.eval_at(&xy)?;
        out.push(Some(&lambda), "Qpm", Some(&q_lo), &scaled, Some(&q_hi));
        out.push(Some(&lambda), "Q", Some(&-&q_sym), &scaled, Some(&q_sym));
        let major = if q_hi > -&q_lo { q_hi } else { -q_lo };
        out.push(Some(&lambda), "Q_majorization", None, &major, Some(&q_sym));

        let chain = check_nef_chain(v, &lambda)?;
        out.push_with(
            Some(&lambda),
            "nef_chain",
            Some(&Rational::zero()),
            &chain.value,
            Some(&chain.upper),
            chain.pass,
        );
    }

    for i in 1..=n {
        let r = ctx.table.k_power(i)?;
        let value = &kl[i as usize] * num_traits::pow(x.clone(), i as usize - 1);
        out.push(None, format!("R_{i}"), Some(&r.lower.eval_at(&xy)?), &value, Some(&r.upper.eval_at(&xy)?));
    }

    let lc = check_log_concavity(v, &Divisor::adjoint(n), &Divisor::polarization())?;
    for k in 1..n as usize {
        let s = &lc.sequence;
        out.push(None, format!("log_concavity_{k}"), Some(&(&s[k - 1] * &s[k + 1])), &(&s[k] * &s[k]), None);
    }

    let flags = v.flags();
    if flags.k_ample || flags.minus_k_ample {
        let c1n = big(iv.chern_number(&Partition::ones(n))?);
        for lambda in enumerate_partitions(n, n)? {
            let ratio = (big(iv.chern_number(&lambda)?) / &c1n).abs();
            out.push(Some(&lambda), "chern_ratio", None, &ratio, Some(&ctx.ratio.value));
        }
    }

    let hilbert = hilbert_coefficients(v, n)?;
    for (m, q) in ctx.tails.iter().enumerate() {
        let h = crate::todd::HilbertData { truncation: m as u32, ..hilbert.clone() };
        for k in 1..=MAX_K {
            let k = int(k);
            let bound = eval_tail_bound(q, &x, &y, &k)?;
            out.push(None, format!("rr_tail_m{m}_k{k}"), None, &h.tail(&k).abs(), Some(&bound));
        }
    }

    if !matches!(v.kind, VarietyKind::Tabulated { .. }) {
        for k in 0..=MAX_K {
            let oracle = v.euler_characteristic(k)?;
            out.push(None, format!("chi_{k}"), Some(&oracle), &hilbert.chi(&int(k)), Some(&oracle));
        }
    }
    Ok(out.rows)
}

/// Runs the suite on every entry of dimension `n`, in parallel.
pub fn verify_catalog(catalog: &Catalog, n: u32) -> Result<Report> {
    let ctx = Context::new(n)?;
    let entries = catalog.by_dimension(n);
    let per_entry: Vec<Vec<Row>> = entries.par_iter().map(|v| verify_variety(v, &ctx)).collect::<Result<Vec<_>>>()?;
    let rows: Vec<Row> = per_entry.into_iter().flatten().collect();
    let passed = rows.iter().filter(|r| r.pass).count();
    let summary = Summary { varieties: entries.len(), rows: rows.len(), passed, failed: rows.len() - passed };
    Ok(Report { schema: SCHEMA, n, rows, summary })
}
