//! Exhaustive enumeration of permutation factorizations of the identity.
//!
//! In every search the last factor is solved rather than enumerated: it is
//! the inverse of the product of the others, and it has the same cycle type
//! as that product, so only the product is needed.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::combinatorics::{
    all_permutations, conjugacy_class_size, cycle_count, enumerate_class, factorial, Partition, Permutation,
};
use crate::{Error, Result};

use super::{check_budget, GenusHistogram, OracleConfig};

fn compose_into(a: &[usize], b: &[usize], out: &mut [usize]) {
    for (o, &i) in out.iter_mut().zip(b) {
        *o = a[i];
    }
}

fn check_weight(n: usize, lambda: &Partition) -> Result<()> {
    if n == 0 || lambda.weight() != n {
        return Err(Error::Usage(format!("{lambda:?} is not a partition of n = {n}")));
    }
    if n > 64 {
        return Err(Error::Domain("exhaustive search supports n <= 64".into()));
    }
    Ok(())
}

/// `|C(λ)|·(n−1)!·(n!)^{m−2}`: tuples visited by [`enumerate_factorizations`].
pub fn factorization_space(m: usize, n: usize, lambda: &Partition) -> BigUint {
    conjugacy_class_size(lambda) * factorial(n - 1) * factorial(n).pow((m - 2) as u32)
}

/// Genus histogram of `𝓜_m(n, λ)`: tuples `φσ₀σ₁⋯σ_{m−1} = id` with
/// `φ ∈ C(λ)` and `σ₀` an `n`-cycle, genus
/// `1 + ((m−1)n − ℓ(λ) − Σ cyc(σᵢ))/2`.
pub fn enumerate_factorizations(
    m: usize,
    n: usize,
    lambda: &Partition,
    config: &OracleConfig,
) -> Result<GenusHistogram> {
    if m < 2 {
        return Err(Error::Domain(format!("m must be at least 2, got {m}")));
    }
    check_weight(n, lambda)?;
    check_budget(&factorization_space(m, n, lambda), config)?;

    let phis: Vec<Permutation> = enumerate_class(lambda).collect();
    let long_cycles: Vec<Permutation> = enumerate_class(&Partition::row(n)).collect();
    let free: Vec<Permutation> = if m > 2 {
        all_permutations(n).collect()
    } else {
        Vec::new()
    };
    let free_levels = m - 2;
    // 2g = 2 + (m−1)n − ℓ(λ) − Σ cyc
    let base = 2 + (m - 1) * n - lambda.len();

    let partials: Result<Vec<BTreeMap<usize, u64>>> = phis
        .par_iter()
        .map(|phi| {
            let mut hist = BTreeMap::new();
            // prefix[j] = φσ₀⋯σ_j
            let mut prefix = vec![vec![0usize; n]; free_levels + 1];
            let mut cycles = vec![0usize; free_levels + 1];
            for sigma0 in &long_cycles {
                compose_into(phi.images(), sigma0.images(), &mut prefix[0]);
                cycles[0] = 1;
                walk_free(&free, &mut prefix, &mut cycles, 0, &mut |last_cycles, cyc_sum| {
                    let total = cyc_sum + last_cycles;
                    let twice = base
                        .checked_sub(total)
                        .filter(|t| t % 2 == 0)
                        .ok_or_else(|| Error::Consistency(format!("odd or negative 2g for cycle sum {total}")))?;
                    *hist.entry(twice / 2).or_insert(0) += 1;
                    Ok(())
                })?;
            }
            Ok(hist)
        })
        .collect();
    Ok(GenusHistogram::merge_all(partials?))
}

/// Depth-first over the free factors; `visit(cyc(last), Σ cyc so far)`.
fn walk_free(
    free: &[Permutation],
    prefix: &mut [Vec<usize>],
    cycles: &mut [usize],
    level: usize,
    visit: &mut dyn FnMut(usize, usize) -> Result<()>,
) -> Result<()> {
    if level + 1 == prefix.len() {
        let sum: usize = cycles.iter().sum();
        return visit(cycle_count(&prefix[level]), sum);
    }
    for sigma in free {
        let (done, rest) = prefix.split_at_mut(level + 1);
        compose_into(&done[level], sigma.images(), &mut rest[0]);
        cycles[level + 1] = cycle_count(sigma.images());
        walk_free(free, prefix, cycles, level + 1, visit)?;
    }
    Ok(())
}

/// Genus histogram of rotation systems `(φ∘, σ∘, φ•, σ•)` with
/// `φ∘σ∘φ•σ• = id`, `σ•` an `n`-cycle and `σ∘ ∈ C(λ)`, genus from
/// `Σ cyc = 2n + 2 − 2g`.
pub fn enumerate_bieulerian_4tuples(n: usize, lambda: &Partition, config: &OracleConfig) -> Result<GenusHistogram> {
    check_weight(n, lambda)?;
    check_budget(&factorization_space(3, n, lambda), config)?;
    let white: Vec<Permutation> = enumerate_class(lambda).collect();
    let black: Vec<Permutation> = enumerate_class(&Partition::row(n)).collect();
    let free: Vec<Permutation> = all_permutations(n).collect();
    let white_cycles = lambda.len();

    let partials: Result<Vec<BTreeMap<usize, u64>>> = white
        .par_iter()
        .map(|sigma_white| {
            let mut hist = BTreeMap::new();
            let mut left = vec![0usize; n];
            let mut prod = vec![0usize; n];
            for phi_black in &free {
                let phi_black_cycles = cycle_count(phi_black.images());
                compose_into(sigma_white.images(), phi_black.images(), &mut left);
                for sigma_black in &black {
                    compose_into(&left, sigma_black.images(), &mut prod);
                    // φ∘ is the inverse of σ∘φ•σ•
                    let total = 1 + white_cycles + phi_black_cycles + cycle_count(&prod);
                    let twice = (2 * n + 2)
                        .checked_sub(total)
                        .filter(|t| t % 2 == 0)
                        .ok_or_else(|| Error::Consistency(format!("odd or negative 2g for cycle sum {total}")))?;
                    *hist.entry(twice / 2).or_insert(0) += 1;
                }
            }
            Ok(hist)
        })
        .collect();
    Ok(GenusHistogram::merge_all(partials?))
}

/// Brute-force count of `(σ₁, …, σ_k)` with `σᵢ ∈ C(μ⁽ⁱ⁾)` and `σ₁⋯σ_k = id`.
pub fn count_factorizations_exhaustive(cycle_types: &[Partition], config: &OracleConfig) -> Result<BigUint> {
    let Some((last, init)) = cycle_types.split_last() else {
        return Err(Error::Usage("need at least one cycle type".into()));
    };
    let n = last.weight();
    if cycle_types.iter().any(|mu| mu.weight() != n) {
        return Err(Error::Usage("cycle types must all have the same weight".into()));
    }
    let space: BigUint = init.iter().map(conjugacy_class_size).product();
    check_budget(&space, config)?;
    let classes: Vec<Vec<Permutation>> = init.iter().map(|mu| enumerate_class(mu).collect()).collect();

    let mut count = 0u64;
    let mut stack = vec![Permutation::identity(n)];
    let mut idx = vec![0usize; classes.len()];
    // odometer with a running product stack
    let mut level = 0;
    loop {
        if level == classes.len() {
            if &stack[level].cycle_type() == last {
                count += 1;
            }
            if level == 0 {
                break;
            }
            level -= 1;
            idx[level] += 1;
            stack.truncate(level + 1);
            continue;
        }
        if idx[level] == classes[level].len() {
            if level == 0 {
                break;
            }
            idx[level] = 0;
            level -= 1;
            idx[level] += 1;
            stack.truncate(level + 1);
            continue;
        }
        let next = stack[level].compose(&classes[level][idx[level]])?;
        stack.push(next);
        level += 1;
    }
    Ok(BigUint::from(count))
}
