//! Todd classes, Hilbert polynomials and the tail bound on them.
//!
//! Usage: `cargo run --example riemann_roch -- quartic_K3 1`

use chern_bounds::poly::int;
use chern_bounds::todd::{eval_tail_bound, hilbert_coefficients, rr_tail_bound, todd_component};
use chern_bounds::variety::Catalog;

fn main() {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "P2".to_owned());
    let m: u32 = args.next().map_or(0, |s| s.parse().expect("truncation"));

    for i in 0..=4 {
        println!("td_{i} = {}", todd_component(i).expr);
    }

    let catalog = Catalog::builtin();
    let v = catalog.get(&id).unwrap();
    let n = v.dimension();
    let h = hilbert_coefficients(v, m).unwrap();
    println!("{id}: chi(kL) = {}", h.polynomial());

    let q = rr_tail_bound(n, m).unwrap();
    println!("tail bound for n = {n}, m = {m}: {q}");
    let [x, y] = v.intersection_vector().unwrap().point();
    for k in 1..=5 {
        let k = int(k);
        let bound = eval_tail_bound(&q, &x, &y, &k).unwrap();
        println!("  k = {k}: tail = {} within +-{bound}", h.tail(&k));
    }
}
