//! Expands c_λ(T_X ⊗ M) for the twist used throughout the bounds.
//!
//! Usage: `cargo run --example twisted_expansion -- 3 2,1`

use chern_bounds::chern::{expand_twisted_monomial, fujita_constant, Twist};
use chern_bounds::Partition;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(2, |s| s.parse().expect("dimension"));
    let lambda: Partition = args.next().map_or_else(|| Partition::new([2]), |s| s.parse().expect("partition"));

    let twist = Twist::adjoint(n);
    println!("C_{n} = {}, twist = {} c1 + {} L", fujita_constant(n), twist.c1, twist.l);
    let e = expand_twisted_monomial(&lambda, n).unwrap();
    println!("c_({lambda})(E) = {} c_({lambda}) + lower terms:", e.leading);
    for (mu, c) in &e.lower {
        let d = lambda.weight() - mu.weight();
        if mu.is_empty() {
            println!("  {c} * L^{d}");
        } else {
            println!("  {c} * c_({mu}) * L^{d}");
        }
    }
}
