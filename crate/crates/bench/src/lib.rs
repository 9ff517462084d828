//! Fixtures shared by the criterion benchmarks.

use ncsym::partition::enumerate;
use ncsym::SetPartition;

/// Every partition of `{1..n}`.
pub fn all_partitions(n: usize) -> Vec<SetPartition> {
    enumerate(n).collect()
}
