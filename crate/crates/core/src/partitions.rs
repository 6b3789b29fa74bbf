//! Partitions indexing monomial Chern classes.
//!
//! A [`Partition`] is stored weakly decreasing with no zero parts, so that
//! equal partitions compare and hash equal regardless of how they were
//! written down.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The empty partition, indexing the constant class `1`.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1, …, 1)` with `d` ones, i.e. the class `c_1^d`.
    pub fn ones(d: u32) -> Self {
        Partition(vec![1; d as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`, the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to one.
    pub fn ones_count(&self) -> u32 {
        self.0.iter().filter(|&&p| p == 1).count() as u32
    }

    /// `Σ (λ_i − 1)`: how far `c_λ` is from a pure power of `c_1`.
    pub fn distance(&self) -> u32 {
        self.0.iter().map(|&p| p - 1).sum()
    }

    /// True when every part is one (including the empty partition).
    pub fn is_c1_power(&self) -> bool {
        self.distance() == 0
    }

    /// True when `λ ∈ P(d, n)` for `d = |λ|`, i.e. `1 ≤ |λ| ≤ n` and every
    /// part is at most `n`.
    pub fn fits(&self, n: u32) -> bool {
        let d = self.weight();
        d >= 1 && d <= n && self.max_part() <= n
    }

    /// Union of the parts of two partitions.
    pub fn merge(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Parts joined with `_`, for use in file names.
    pub fn file_stem(&self) -> String {
        if self.0.is_empty() {
            return "empty".to_owned();
        }
        self.0.iter().map(u32::to_string).collect::<Vec<_>>().join("_")
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    /// Comma separated parts, e.g. `2,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let part: u32 = tok.parse().map_err(|_| Error::Parse(format!("bad partition part `{tok}` in `{s}`")))?;
            if part == 0 {
                return Err(Error::Parse(format!("zero part in partition `{s}`")));
            }
            parts.push(part);
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `d` with parts at most `max_part`, in lexicographically
/// decreasing order. `d = 0` yields the single empty partition.
pub fn partitions_bounded(d: u32, max_part: u32) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, max_part, &mut Vec::new(), &mut out);
    out
}

/// `P(d, n)`: every partition of `d` with parts at most `n`, in
/// lexicographically decreasing order.
pub fn enumerate_partitions(d: u32, n: u32) -> Result<Vec<Partition>> {
    if d < 1 || n < 1 || d > n {
        return invalid(format!("P(d, n) needs 1 <= d <= n, got d = {d}, n = {n}"));
    }
    Ok(partitions_bounded(d, n))
}

/// Every partition in `P(d, n)` for `d = 1..=n`, grouped by increasing `d`.
pub fn all_partitions_up_to(n: u32) -> Vec<Partition> {
    (1..=n).flat_map(|d| partitions_bounded(d, n)).collect()
}

/// `p(n)`, the number of partitions of `n`.
pub fn partition_count(n: u32) -> u64 {
    // counts[k] = partitions of k using parts seen so far
    let n = n as usize;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            counts[k] += counts[k - part];
        }
    }
    counts[n]
}

/// `Σ (λ_i − 1)` for `λ`.
pub fn partition_distance(lambda: &Partition) -> u32 {
    lambda.distance()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Brute force: all compositions of `d` with parts ≤ `n`, sorted and
    /// deduplicated.
    fn brute_force(d: u32, n: u32) -> BTreeSet<Partition> {
        fn comps(rest: u32, n: u32, prefix: &mut Vec<u32>, out: &mut BTreeSet<Partition>) {
            if rest == 0 {
                out.insert(Partition::new(prefix.clone()));
                return;
            }
            for part in 1..=rest.min(n) {
                prefix.push(part);
                comps(rest - part, n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = BTreeSet::new();
        comps(d, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_partitions(2, 2).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_partitions(1, 5).unwrap(), vec![p(&[1])]);
        assert_eq!(
            enumerate_partitions(4, 4).unwrap(),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn bad_arguments() {
        assert!(enumerate_partitions(0, 3).is_err());
        assert!(enumerate_partitions(1, 0).is_err());
        assert!(enumerate_partitions(4, 3).is_err());
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=8 {
            for d in 1..=n {
                let list = enumerate_partitions(d, n).unwrap();
                let set: BTreeSet<_> = list.iter().cloned().collect();
                assert_eq!(set.len(), list.len(), "duplicates for d={d}, n={n}");
                assert_eq!(set, brute_force(d, n));
                assert!(list.iter().all(|l| l.weight() == d && l.max_part() <= n));
                // lexicographically decreasing
                assert!(list.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(partition_count(1), 1);
        assert_eq!(partition_count(2), 2);
        assert_eq!(partition_count(5), 7);
        for n in 1..=12 {
            assert_eq!(partition_count(n), enumerate_partitions(n, n).unwrap().len() as u64);
        }
    }

    #[test]
    fn distance() {
        assert_eq!(partition_distance(&p(&[1, 1, 1])), 0);
        assert_eq!(partition_distance(&p(&[3, 2])), 3);
        assert_eq!(partition_distance(&p(&[2, 1, 1])), 1);
        for n in 1..=7 {
            for lambda in all_partitions_up_to(n) {
                assert_eq!(lambda.distance() == 0, lambda == Partition::ones(lambda.weight()));
            }
        }
    }

    #[test]
    fn canonical_form_and_text() {
        assert_eq!(p(&[1, 2, 0, 1]), p(&[2, 1, 1]));
        assert_eq!(p(&[1, 2, 1]).to_string(), "2,1,1");
        assert_eq!("1, 2,1".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert!("2,x".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[1,3]").unwrap();
        assert_eq!(back, p(&[3, 1]));
    }
}
