//! Checks a variety given only by its intersection numbers.
//!
//! The entry below is a smooth cubic surface written out by hand; any data
//! satisfying c_1^d L^(n-d) = (-K)^d L^(n-d) is accepted.

use chern_bounds::variety::Catalog;
use chern_bounds::verify::verify_catalog;

const ENTRY: &str = r#"[{
    "id": "cubic_surface_by_hand",
    "kind": "tabulated",
    "n": 2,
    "kl": [3, -3, 3],
    "chern": {"1": 3, "1,1": 3, "2": 9},
    "flags": {"minusK_ample": true}
}]"#;

fn main() {
    let catalog = Catalog::from_json(ENTRY).unwrap();
    let report = verify_catalog(&catalog, 2).unwrap();
    for row in &report.rows {
        let lambda = row.lambda.as_ref().map(ToString::to_string).unwrap_or_default();
        println!("{:<16} {:<6} {:>4}  {}", row.quantity, lambda, if row.pass { "ok" } else { "FAIL" }, row.value);
    }
}
