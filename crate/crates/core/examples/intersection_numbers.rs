//! Intersection numbers of catalog entries, plus the two positivity checks
//! the bounds rest on.
//!
//! Usage: `cargo run --example intersection_numbers -- quintic_3fold`

use chern_bounds::partitions::all_partitions_up_to;
use chern_bounds::variety::{check_log_concavity, check_nef_chain, Catalog, Divisor};

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "P2".to_owned());
    let catalog = Catalog::builtin();
    let v = catalog.get(&id).unwrap();
    let n = v.dimension();
    let iv = v.intersection_vector().unwrap();

    let kl: Vec<String> = iv.kl.iter().map(ToString::to_string).collect();
    println!("{id}: n = {n}, K^i L^(n-i) = [{}], flags = {:?}", kl.join(", "), v.flags());
    for lambda in all_partitions_up_to(n) {
        let chain = check_nef_chain(v, &lambda).unwrap();
        println!(
            "  c_({lambda}) L^{} = {:>8}   0 <= c_({lambda})(E) = {} <= {}",
            n - lambda.weight(),
            iv.chern[&lambda],
            chain.value,
            chain.upper
        );
    }
    let lc = check_log_concavity(v, &Divisor::adjoint(n), &Divisor::polarization()).unwrap();
    let seq: Vec<String> = lc.sequence.iter().map(ToString::to_string).collect();
    println!("  (K+(n+1)L)^k L^(n-k) = [{}], log-concave: {}", seq.join(", "), lc.pass);
}
