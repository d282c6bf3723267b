use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::polyring::ExactPoly;
use crate::{Error, Result};

/// An integer partition stored as its non-increasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Usage(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Usage(format!(
                "partition parts must be non-increasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts first; zero parts are still rejected.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `[n]`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The weight `n = Σ λᵢ`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `mᵢ(λ)` of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.first().copied().unwrap_or(0);
        let parts = (0..rows)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Cells `(column, row)` of the French Ferrers diagram, lower-left cell at `(0, 0)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| (col, row)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated form `"3,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Usage(format!("bad partition part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of `n` in reverse-lexicographic order, `[n]` first and `[1^n]` last.
///
/// `partitions_of(0)` is the single empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts_unchecked(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `|C(λ)| = n! / ∏ᵢ i^{mᵢ} mᵢ!`.
pub fn conjugacy_class_size(lambda: &Partition) -> BigUint {
    let mut denom = BigUint::one();
    for (part, mult) in lambda.multiplicities() {
        denom *= BigUint::from(part).pow(mult as u32) * factorial(mult);
    }
    factorial(lambda.weight()) / denom
}

/// Leg length `a` and weight `n` of the hook `[n−a, 1^a]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HookPartition {
    n: usize,
    a: usize,
}

impl HookPartition {
    pub fn new(n: usize, a: usize) -> Result<Self> {
        if n == 0 || a >= n {
            return Err(Error::Domain(format!(
                "hook leg a={a} must lie in [0, {}] for n={n}",
                n.saturating_sub(1)
            )));
        }
        Ok(HookPartition { n, a })
    }

    pub fn weight(&self) -> usize {
        self.n
    }

    pub fn leg(&self) -> usize {
        self.a
    }

    pub fn to_partition(self) -> Partition {
        let mut parts = vec![self.n - self.a];
        parts.extend(std::iter::repeat_n(1, self.a));
        Partition::from_parts_unchecked(parts)
    }
}

pub fn hook_partition(n: usize, a: usize) -> Result<Partition> {
    HookPartition::new(n, a).map(HookPartition::to_partition)
}

/// `H_θ(x) = ∏_w (x + c(w))` with content `c(w) = column − row`.
pub fn content_polynomial(theta: &Partition) -> ExactPoly {
    theta.cells().fold(ExactPoly::one(), |acc, (col, row)| {
        acc * ExactPoly::linear_root_shift(col as i64 - row as i64)
    })
}

/// Number of standard Young tableaux, by the hook-length formula.
pub fn dimension(theta: &Partition) -> BigUint {
    let conj = theta.conjugate();
    let mut hooks = BigUint::one();
    for (col, row) in theta.cells() {
        let arm = theta.parts()[row] - col - 1;
        let leg = conj.parts()[col] - row - 1;
        hooks *= arm + leg + 1;
    }
    factorial(theta.weight()) / hooks
}
