//! Runs the whole inequality suite over a catalog and summarizes it.
//!
//! Usage: `cargo run --example verify_catalog -- [catalog.json]`

use chern_bounds::variety::Catalog;
use chern_bounds::verify::verify_catalog;

fn main() {
    let catalog = match std::env::args().nth(1) {
        Some(path) => Catalog::load(path).unwrap(),
        None => Catalog::builtin(),
    };
    for n in 1..=4 {
        let report = verify_catalog(&catalog, n).unwrap();
        let s = &report.summary;
        println!("n = {n}: {} varieties, {} checks, {} failed", s.varieties, s.rows, s.failed);
        for row in report.failures() {
            println!("  {} {:?} {}: {}", row.variety, row.lambda, row.quantity, row.value);
        }
    }
}
