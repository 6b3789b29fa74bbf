//! The Chern-ratio constant and the uniform bound c(n, v, w).

use chern_bounds::bounds::{chern_ratio_bound, uniform_bound};
use chern_bounds::partitions::enumerate_partitions;
use chern_bounds::poly::int;

fn main() {
    for n in 1..=3 {
        let r = chern_ratio_bound(n).unwrap();
        let slice = if r.sign > 0 { "K ample" } else { "-K ample" };
        println!("c_{n} = {} attained by ({}) with {slice}", r.value, r.witness);
    }
    let (n, v, w) = (2, int(10), int(5));
    for lambda in enumerate_partitions(2, n).unwrap() {
        println!("c({n}, {v}, {w}) for ({lambda}) = {}", uniform_bound(n, &v, &w, &lambda).unwrap());
    }
}
