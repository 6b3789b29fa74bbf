//! Lists the monomial Chern classes that appear in each dimension.

use chern_bounds::partitions::{enumerate_partitions, partition_count};

fn main() {
    for n in 1..=5 {
        println!("n = {n}");
        for d in 1..=n {
            let list = enumerate_partitions(d, n).unwrap();
            let names: Vec<String> = list.iter().map(|l| format!("({l})")).collect();
            println!("  d = {d} [{} partitions]: {}", partition_count(d), names.join(" "));
        }
    }
}
