//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::path::PathBuf;
use std::time::Instant;

use chern_bounds::bounds::{build_p_pm, build_r_pm, chern_ratio_bound, LinearBoundForm};
use chern_bounds::chern::fujita_constant;
use chern_bounds::cli::{emit, Format, Kind};
use chern_bounds::partitions::{all_partitions_up_to, Partition};
use chern_bounds::poly::{big, binomial, factorial, indexed_vars, int, ratio, MultiPoly, Rational};
use chern_bounds::todd::{hilbert_coefficients, rr_tail_bound_from_table, todd_component, z_degree};
use chern_bounds::variety::{check_log_concavity, Catalog, Divisor};
use chern_bounds::verify::{verify_catalog, Context, Report};
use num_bigint::BigInt;
use num_traits::One;

type Outcome = Result<String, String>;

struct Sweep {
    reports: Vec<Report>,
    seconds: f64,
}

impl Sweep {
    fn check(&self, what: &str, pick: impl Fn(&str) -> bool) -> Outcome {
        let mut count = 0;
        for report in &self.reports {
            for row in report.rows.iter().filter(|r| pick(&r.quantity)) {
                count += 1;
                if !row.pass {
                    return Err(format!(
                        "{} {:?} {}: {:?} <= {} <= {:?}",
                        row.variety, row.lambda, row.quantity, row.lower, row.value, row.upper
                    ));
                }
            }
        }
        if count == 0 {
            return Err(format!("no {what} rows"));
        }
        Ok(format!("{count} {what} checks"))
    }
}

fn fujita() -> Outcome {
    let got: Vec<BigInt> = (1..=5).map(fujita_constant).collect();
    let want: Vec<BigInt> = [6, 23, 122, 717, 4370].into_iter().map(BigInt::from).collect();
    if got == want {
        Ok("C_1..C_5 = 6, 23, 122, 717, 4370".into())
    } else {
        Err(format!("{got:?}"))
    }
}

fn linear_sandwich(sweep: &Sweep, cat: &Catalog) -> Outcome {
    for n in 1..=4 {
        if cat.by_dimension(n).len() < 8 {
            return Err(format!("fewer than 8 entries in dimension {n}"));
        }
    }
    if sweep.seconds >= 60.0 {
        return Err(format!("sweep took {:.1}s", sweep.seconds));
    }
    sweep.check("P", |q| q == "P").map(|s| format!("{s} in {:.1}s", sweep.seconds))
}

fn k_power_sandwich(sweep: &Sweep) -> Outcome {
    for n in 2..=4u32 {
        let xy = ["x", "y"];
        let x = MultiPoly::var(&xy, "x").unwrap();
        let y = MultiPoly::var(&xy, "y").unwrap();
        let a = x.scale(&int(n as i64 + 1));
        let by_hand = &(&(&a + &y).pow(2) - &a.pow(2)) - &(&a * &y).scale(&int(2));
        let built = build_r_pm(2, n).map_err(|e| e.to_string())?.upper;
        if by_hand != y.pow(2) || built != by_hand {
            return Err(format!("R_2^+ for n = {n} is {built}, expected {by_hand}"));
        }
    }
    sweep.check("R_i", |q| q.starts_with("R_")).map(|s| s + ", R_2^+ = y^2 symbolically")
}

fn bivariate_bound(sweep: &Sweep) -> Outcome {
    sweep.check("admissibility", |q| q == "admissibility")?;
    sweep.check("Q", |q| q == "Q" || q == "Qpm" || q == "Q_majorization")
}

fn degenerate() -> Outcome {
    for n in 1..=4 {
        for d in 1..=n {
            let sign = if d % 2 == 0 { int(1) } else { int(-1) };
            let unit = LinearBoundForm::unit(d, d, sign);
            let (lo, hi) = build_p_pm(&Partition::ones(d), n).map_err(|e| e.to_string())?;
            if lo != unit || hi != unit {
                return Err(format!("n = {n}, d = {d}: {lo} / {hi}"));
            }
        }
    }
    Ok("P^+ = P^- = (-1)^d x_d for n <= 4".into())
}

fn consistency(sweep: &Sweep) -> Outcome {
    degenerate().and_then(|s| sweep.check("consistency", |q| q == "consistency").map(|t| format!("{s}; {t}")))
}

fn log_concavity(cat: &Catalog) -> Outcome {
    let mut count = 0;
    for v in cat.entries() {
        let n = v.dimension();
        let r = check_log_concavity(v, &Divisor::adjoint(n), &Divisor::polarization()).map_err(|e| e.to_string())?;
        if !r.pass {
            return Err(format!("{}: {:?}", v.id, r.sequence));
        }
        count += 1;
    }
    Ok(format!("{count} entries"))
}

/// `x/(1 − e^{−x})` by inverting `(1 − e^{−x})/x`.
fn todd_series(max: usize) -> Vec<Rational> {
    let g: Vec<Rational> =
        (0..=max).map(|k| int(if k % 2 == 0 { 1 } else { -1 }) / big(factorial(k as u64 + 1))).collect();
    let mut f = vec![Rational::one()];
    for k in 1..=max {
        f.push(-(1..=k).map(|j| &g[j] * &f[k - j]).sum::<Rational>());
    }
    f
}

fn todd_matches_series(i: u32) -> bool {
    let vars = indexed_vars("x", i.max(1) as usize);
    let f = todd_series(i as usize);
    let mut prod = MultiPoly::one(&vars);
    for k in 0..i as usize {
        let mut factor = MultiPoly::zero(&vars);
        for (e, c) in f.iter().enumerate() {
            let mut exps = vec![0; vars.len()];
            exps[k] = e as u32;
            factor.add_term(exps, c.clone());
        }
        prod = &prod * &factor;
        prod.retain(|e| e.iter().sum::<u32>() <= i);
    }
    let elementary = |j: u32| {
        let mut out = MultiPoly::zero(&vars);
        for mask in 0u32..(1 << i) {
            if mask.count_ones() == j {
                out.add_term((0..vars.len()).map(|b| (mask >> b) & 1).collect(), Rational::one());
            }
        }
        out
    };
    let mut sub = MultiPoly::zero(&vars);
    for (mono, c) in todd_component(i).expr.terms() {
        let mut term = MultiPoly::constant(&vars, c.clone());
        for &part in mono.partition().parts() {
            term = &term * &elementary(part);
        }
        sub = &sub + &term;
    }
    sub == prod.homogeneous_part(i)
}

fn todd_anchors(cat: &Catalog) -> Outcome {
    for i in 0..=5 {
        if !todd_matches_series(i) {
            return Err(format!("Todd component {i} differs from the series"));
        }
    }
    let chi = |id: &str| hilbert_coefficients(cat.get(id).unwrap(), 0).unwrap();
    let (p2, p3, k3) = (chi("P2"), chi("P3"), chi("quartic_K3"));
    for k in 0..=10i64 {
        let kk = int(k);
        let ok = p2.chi(&kk) == ratio((k + 1) * (k + 2), 2)
            && p3.chi(&kk) == big(binomial(k as u64 + 3, 3))
            && k3.chi(&kk) == int(2 * k * k + 2);
        if !ok {
            return Err(format!("Hilbert polynomial mismatch at k = {k}"));
        }
    }
    Ok("series oracle through degree 5; P2, P3, K3 for k = 0..10".into())
}

fn tail_bound(sweep: &Sweep, contexts: &[Context]) -> Outcome {
    for ctx in contexts {
        for m in 0..ctx.n {
            let q = rr_tail_bound_from_table(&ctx.table, m).map_err(|e| e.to_string())?;
            if z_degree(&q) > ctx.n - m - 1 {
                return Err(format!("deg_z Q = {} for n = {}, m = {m}", z_degree(&q), ctx.n));
            }
        }
    }
    sweep.check("tail", |q| q.starts_with("rr_tail"))
}

fn chern_ratio(sweep: &Sweep, cat: &Catalog) -> Outcome {
    let c2 = chern_ratio_bound(2).map_err(|e| e.to_string())?.value;
    let iv = cat.get("P2").unwrap().intersection_vector().unwrap();
    let p2_ratio = big(iv.chern[&Partition::new([2])].clone()) / big(iv.chern[&Partition::ones(2)].clone());
    if c2 < Rational::one() || c2 < p2_ratio || p2_ratio != ratio(1, 3) {
        return Err(format!("c_2 = {c2}"));
    }
    let mut count = 0;
    for report in sweep.reports.iter().filter(|r| r.n <= 3) {
        for row in report.rows.iter().filter(|r| r.quantity == "chern_ratio") {
            count += 1;
            if !row.pass {
                return Err(format!("{} {:?}: {} > {:?}", row.variety, row.lambda, row.value, row.upper));
            }
        }
    }
    if count == 0 {
        return Err("no chern_ratio rows".into());
    }
    Ok(format!("c_2 = {c2} >= 1 >= 1/3; {count} ratio checks for n <= 3"))
}

fn golden() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/v1");
    let mut count = 0;
    for n in 1..=3 {
        let mut cases: Vec<(String, Option<Partition>, Option<u32>, Kind)> = Vec::new();
        for lambda in all_partitions_up_to(n) {
            for kind in [Kind::P, Kind::Qpm, Kind::Q] {
                cases.push((format!("{}_{}.txt", kind.name(), lambda.file_stem()), Some(lambda.clone()), None, kind));
            }
        }
        for i in 1..=n {
            cases.push((format!("R_{i}.txt"), None, Some(i), Kind::R));
        }
        for (file, lambda, i, kind) in cases {
            let path = dir.join(format!("n{n}")).join(&file);
            let first = emit(n, lambda.clone(), i, kind, Format::Text).map_err(|e| e.to_string())?;
            let second = emit(n, lambda, i, kind, Format::Text).map_err(|e| e.to_string())?;
            let stored = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            if first != second || first != stored {
                return Err(format!("{} differs", path.display()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} golden files"))
}

fn main() {
    let cat = Catalog::builtin();
    let start = Instant::now();
    let contexts: Vec<Context> = (1..=4).map(|n| Context::new(n).expect("bounds build")).collect();
    let reports: Vec<Report> = (1..=4).map(|n| verify_catalog(&cat, n).expect("suite runs")).collect();
    let sweep = Sweep { reports, seconds: start.elapsed().as_secs_f64() };

    let criteria: Vec<(&str, Outcome)> = vec![
        ("Fujita constants", fujita()),
        ("linear sandwich P_lambda^-/+", linear_sandwich(&sweep, &cat)),
        ("K-power sandwich R_i^-/+", k_power_sandwich(&sweep)),
        ("bivariate bound Q_lambda", bivariate_bound(&sweep)),
        ("degenerate exactness", consistency(&sweep)),
        ("nef chain", sweep.check("nef chain", |q| q == "nef_chain")),
        ("log-concavity", log_concavity(&cat)),
        ("Todd / Riemann-Roch anchors", todd_anchors(&cat)),
        ("Riemann-Roch tail bound", tail_bound(&sweep, &contexts)),
        ("Chern ratio", chern_ratio(&sweep, &cat)),
        ("emit determinism", golden()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in criteria.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
