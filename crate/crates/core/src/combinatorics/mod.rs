//! Partitions, permutations, conjugacy classes, hooks, contents and dimensions.

mod partition;
mod permutation;

pub use partition::{
    binomial, conjugacy_class_size, content_polynomial, dimension, factorial, hook_partition, partitions_of,
    HookPartition, Partition,
};
pub use permutation::{all_permutations, enumerate_class, AllPermutations, Permutation};

pub(crate) use permutation::cycle_count;
