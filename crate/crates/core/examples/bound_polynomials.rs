//! Prints every bound polynomial in one dimension.
//!
//! Usage: `cargo run --example bound_polynomials -- 3`

use chern_bounds::bounds::BoundTable;

fn main() {
    let n: u32 = std::env::args().nth(1).map_or(2, |s| s.parse().expect("dimension"));
    let table = BoundTable::build(n).unwrap();

    println!("linear bounds in x_i = K^i L^(n-i):");
    for (lambda, p) in &table.linear {
        println!("  ({lambda})  {}  <=  c  <=  {}", p.lower, p.upper);
    }
    println!("bounds on K^i L^(n-i) (L^n)^(i-1) in x = L^n, y = K L^(n-1):");
    for (i, r) in table.k_powers.iter().enumerate() {
        println!("  i = {}  {}  <=  .  <=  {}", i + 1, r.lower, r.upper);
    }
    println!("symmetric bounds Q on |c_lambda L^(n-d)| (L^n)^(d-1):");
    for (lambda, q) in &table.main {
        println!("  ({lambda})  {}", q.symmetric);
    }
}
