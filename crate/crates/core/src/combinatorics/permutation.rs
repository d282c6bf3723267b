use std::fmt;

use crate::{Error, Result};

use super::Partition;

/// A permutation of `{0, …, n−1}` stored as its image list.
///
/// Products are function composition: `a.compose(&b)` maps `i` to `a(b(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Usage(format!("not a bijection of 0..{n}: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from the 1-based image list `σ(1), …, σ(n)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Usage("1-based images must be positive".into()));
        }
        Self::new(images.iter().map(|&i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The cycle `0 → 1 → ⋯ → n−1 → 0`.
    pub fn canonical_n_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::Usage(format!(
                "cannot compose permutations of sizes {} and {}",
                self.size(),
                other.size()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        cycle_lengths(&self.images)
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lengths = self.cycle_lengths();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts_unchecked(lengths)
    }

    /// `cyc(σ)`, the number of cycles including fixed points.
    pub fn cycle_count(&self) -> usize {
        cycle_count(&self.images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// Cycle notation with 1-based points, fixed points included: `(1 2)(3)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub(crate) fn cycle_lengths(images: &[usize]) -> Vec<usize> {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// Allocation-free cycle count for permutations of at most 64 points.
pub(crate) fn cycle_count(images: &[usize]) -> usize {
    debug_assert!(images.len() <= 64);
    let mut seen: u64 = 0;
    let mut count = 0;
    for start in 0..images.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        count += 1;
        let mut i = start;
        while seen >> i & 1 == 0 {
            seen |= 1 << i;
            i = images[i];
        }
    }
    count
}

/// Lexicographic successor in place; returns `false` after the last permutation.
fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every permutation of `n` points in lexicographic order of image lists.
pub struct AllPermutations {
    current: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.current.as_mut()?;
        let out = Permutation {
            images: current.clone(),
        };
        if !next_lex(current) {
            self.current = None;
        }
        Some(out)
    }
}

pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        current: Some((0..n).collect()),
    }
}

/// The conjugacy class `C(μ)` as a stream, in lexicographic order.
pub fn enumerate_class(mu: &Partition) -> impl Iterator<Item = Permutation> + '_ {
    all_permutations(mu.weight()).filter(move |p| {
        let mut lengths = p.cycle_lengths();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths == mu.parts()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{conjugacy_class_size, factorial, partitions_of};
    use num_bigint::BigUint;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let s = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        assert_eq!(s.cycle_type(), "2,1".parse().unwrap());
        assert_eq!(s.cycle_count(), 2);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert_eq!(s.to_string(), "(1 2)(3)");
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(s.compose(&Permutation::identity(2)).is_err());
        assert_eq!(Permutation::canonical_n_cycle(5).cycle_type(), Partition::row(5));
    }

    #[test]
    fn composition_order() {
        // a = (1 2), b = (2 3); a∘b sends 3 → 2 → 1.
        let a = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        let b = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        assert_eq!(a.compose(&b).unwrap().apply(2), 0);
    }

    #[test]
    fn class_enumeration_sizes() {
        assert_eq!(enumerate_class(&"2,2".parse().unwrap()).count(), 3);
        assert_eq!(all_permutations(5).count(), 120);
        for n in 1..=6 {
            for mu in partitions_of(n) {
                let count = enumerate_class(&mu).count();
                assert_eq!(BigUint::from(count), conjugacy_class_size(&mu), "{mu:?}");
            }
        }
        assert_eq!(BigUint::from(all_permutations(6).count()), factorial(6));
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::new(images).unwrap())
    }

    proptest! {
        #[test]
        fn group_axioms(a in perm_strategy(7), b in perm_strategy(7), c in perm_strategy(7)) {
            let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
            let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(a.compose(&a.inverse()).unwrap().cycle_type(), Partition::column(7));
            prop_assert_eq!(a.compose(&Permutation::identity(7)).unwrap(), a.clone());
            // conjugation preserves cycle type
            let conj = b.compose(&a).unwrap().compose(&b.inverse()).unwrap();
            prop_assert_eq!(conj.cycle_type(), a.cycle_type());
            prop_assert_eq!(a.cycle_count(), a.cycle_type().len());
        }
    }
}
