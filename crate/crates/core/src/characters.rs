//! Irreducible characters of the symmetric group.
//!
//! Two independent routes are provided: the general Murnaghan–Nakayama
//! recursion ([`mn_character`]), and the generating function for hook
//! characters ([`r_poly`], [`hook_character`]), which reads `χ^{[n−a,1^a]}_λ`
//! off the coefficients of `∏(1 − z^{λⱼ}) / (1 − z)`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{conjugacy_class_size, dimension, factorial, partitions_of, Partition};
use crate::polyring::ExactPoly;
use crate::{Error, Result};

/// Memo table for `χ^θ_μ`, safe to share between threads.
#[derive(Debug, Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<(Partition, Partition), BigInt>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `χ^θ_μ` by border-strip removal, the largest part of `μ` first.
    pub fn character(&self, theta: &Partition, mu: &Partition) -> Result<BigInt> {
        if theta.weight() != mu.weight() {
            return Err(Error::Usage(format!(
                "character χ^{theta:?}_{mu:?} needs partitions of equal weight"
            )));
        }
        Ok(self.eval(theta, mu.parts()))
    }

    fn eval(&self, theta: &Partition, mu: &[usize]) -> BigInt {
        let Some((&first, rest)) = mu.split_first() else {
            return BigInt::one();
        };
        if rest.is_empty() {
            // A single strip of full size exists only for hooks.
            return if theta.is_hook() {
                if (theta.len() - 1).is_multiple_of(2) {
                    BigInt::one()
                } else {
                    -BigInt::one()
                }
            } else {
                BigInt::zero()
            };
        }
        let key = (theta.clone(), Partition::from_parts_unchecked(mu.to_vec()));
        if let Some(v) = self.table.read().unwrap().get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (smaller, height) in remove_border_strips(theta, first) {
            let sub = self.eval(&smaller, rest);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.table.write().unwrap().insert(key, total.clone());
        total
    }
}

/// Every way to remove a border strip of `size` cells from `theta`, with the
/// strip height (rows spanned minus one).
fn remove_border_strips(theta: &Partition, size: usize) -> Vec<(Partition, usize)> {
    // Beta-set encoding: removing a strip of length r moves one bead down by r.
    let len = theta.len();
    let beta: Vec<usize> = theta
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < size {
            continue;
        }
        let target = b - size;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push((Partition::from_parts_unchecked(parts), height));
    }
    out
}

fn global_cache() -> &'static CharacterCache {
    static CACHE: OnceLock<CharacterCache> = OnceLock::new();
    CACHE.get_or_init(CharacterCache::new)
}

/// `χ^θ_μ` through the process-wide cache.
pub fn mn_character(theta: &Partition, mu: &Partition) -> Result<BigInt> {
    global_cache().character(theta, mu)
}

/// `R_{n,λ}(z) = ∏ⱼ (1 − z^{λⱼ}) / (1 − z)`, a polynomial of degree `n − 1`.
pub fn r_poly(n: usize, lambda: &Partition) -> Result<ExactPoly> {
    Ok(ExactPoly::from_coeffs(
        r_poly_integer(n, lambda)?
            .into_iter()
            .map(BigRational::from_integer)
            .collect(),
    ))
}

/// Integer coefficient list of `R_{n,λ}`, constant term first.
pub fn r_poly_integer(n: usize, lambda: &Partition) -> Result<Vec<BigInt>> {
    if n == 0 || lambda.weight() != n {
        return Err(Error::Usage(format!("{lambda:?} is not a partition of {n}")));
    }
    let mut prod = vec![BigInt::zero(); n + 1];
    prod[0] = BigInt::one();
    let mut deg = 0;
    for &part in lambda.parts() {
        for k in (0..=deg).rev() {
            let c = prod[k].clone();
            if !c.is_zero() {
                prod[k + part] -= c;
            }
        }
        deg += part;
    }
    // Divide by (1 − z): the quotient coefficients are prefix sums.
    let mut quot = Vec::with_capacity(n);
    let mut acc = BigInt::zero();
    for c in &prod[..n] {
        acc += c;
        quot.push(acc.clone());
    }
    acc += &prod[n];
    if !acc.is_zero() {
        return Err(Error::Consistency(format!(
            "1 - z does not divide the product for {lambda:?}"
        )));
    }
    Ok(quot)
}

/// The values `χ^{[n−a,1^a]}_λ` for `a = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookCharVector {
    pub n: usize,
    pub lambda: Partition,
    pub values: Vec<BigInt>,
}

impl HookCharVector {
    pub fn new(n: usize, lambda: &Partition) -> Result<Self> {
        let values = r_poly_integer(n, lambda)?
            .into_iter()
            .enumerate()
            .map(|(a, c)| if a % 2 == 0 { c } else { -c })
            .collect();
        Ok(HookCharVector {
            n,
            lambda: lambda.clone(),
            values,
        })
    }
}

/// `χ^{[n−a,1^a]}_λ = (−1)^a [z^a] R_{n,λ}(z)`.
pub fn hook_character(n: usize, a: usize, lambda: &Partition) -> Result<BigInt> {
    if a >= n {
        return Err(Error::Domain(format!("hook leg a={a} out of range for n={n}")));
    }
    Ok(HookCharVector::new(n, lambda)?.values.swap_remove(a))
}

/// Number of tuples `(σ₁, …, σ_k)` with `σᵢ ∈ C(μ⁽ⁱ⁾)` and `σ₁⋯σ_k = id`, by
/// the Frobenius character sum.
pub fn frobenius_count(cycle_types: &[Partition]) -> Result<BigUint> {
    let Some(first) = cycle_types.first() else {
        return Err(Error::Usage("need at least one cycle type".into()));
    };
    let n = first.weight();
    if cycle_types.iter().any(|mu| mu.weight() != n) {
        return Err(Error::Usage("cycle types must all have the same weight".into()));
    }
    let k = cycle_types.len() as i64;
    let mut sum = BigRational::zero();
    for theta in partitions_of(n) {
        let f = BigInt::from(dimension(&theta));
        let mut term = BigRational::one();
        for mu in cycle_types {
            term *= BigRational::from_integer(mn_character(&theta, mu)?);
            if term.is_zero() {
                break;
            }
        }
        if term.is_zero() {
            continue;
        }
        let exp = 2 - k;
        let fpow = BigRational::from_integer(f.pow(exp.unsigned_abs() as u32));
        term = if exp >= 0 { term * fpow } else { term / fpow };
        sum += term;
    }
    let classes = cycle_types
        .iter()
        .fold(BigInt::one(), |acc, mu| acc * BigInt::from(conjugacy_class_size(mu)));
    let count = sum * BigRational::from_integer(classes) / BigRational::from_integer(factorial(n).into());
    if !count.is_integer() || count.is_negative() {
        return Err(Error::Consistency(format!("Frobenius sum is not a count: {count}")));
    }
    let (sign, mag) = count.to_integer().into_parts();
    debug_assert!(sign != Sign::Minus);
    Ok(mag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{binomial, content_polynomial, hook_partition};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn r_poly_examples() {
        assert_eq!(r_poly(4, &p("4")).unwrap(), ExactPoly::from_int_coeffs(&[1, 1, 1, 1]));
        assert_eq!(r_poly(3, &p("2,1")).unwrap(), ExactPoly::from_int_coeffs(&[1, 0, -1]));
        let one_minus_z = ExactPoly::from_int_coeffs(&[1, -1]);
        assert_eq!(r_poly(5, &p("1,1,1,1,1")).unwrap(), one_minus_z.pow(4));
        assert!(r_poly(4, &p("2,1")).is_err());
    }

    #[test]
    fn r_poly_structure() {
        for n in 1..=9 {
            for lambda in partitions_of(n) {
                let r = r_poly_integer(n, &lambda).unwrap();
                assert_eq!(r.len(), n);
                assert_eq!(r[0], int(1));
                let top = if lambda.len() % 2 == 1 { 1 } else { -1 };
                assert_eq!(r[n - 1], int(top));
                // 1 is a root of multiplicity ℓ(λ) − 1
                let poly = r_poly(n, &lambda).unwrap();
                let root = ExactPoly::from_int_coeffs(&[-1, 1]);
                let mult = (0..n)
                    .take_while(|&k| poly.exact_div(&root.pow(k as u32 + 1)).is_some())
                    .count();
                assert_eq!(mult, lambda.len() - 1, "{lambda:?}");
            }
        }
    }

    #[test]
    fn hook_character_examples() {
        for n in 1..=7 {
            for a in 0..n {
                let sign = if a % 2 == 0 { 1 } else { -1 };
                assert_eq!(hook_character(n, a, &Partition::row(n)).unwrap(), int(sign));
                assert_eq!(
                    hook_character(n, a, &Partition::column(n)).unwrap(),
                    BigInt::from(binomial(n - 1, a))
                );
            }
            let v = HookCharVector::new(n, &Partition::row(n)).unwrap();
            assert_eq!(v.values[0], int(1));
        }
        assert_eq!(hook_character(3, 1, &p("2,1")).unwrap(), int(0));
        assert!(hook_character(3, 3, &p("3")).is_err());
    }

    #[test]
    fn sign_character_is_last_hook() {
        for n in 1..=7 {
            for lambda in partitions_of(n) {
                let v = HookCharVector::new(n, &lambda).unwrap();
                let sign = if (n - lambda.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(v.values[n - 1], int(sign));
            }
        }
    }

    #[test]
    fn mn_examples() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(mn_character(&Partition::row(n), &mu).unwrap(), int(1));
            }
            for theta in partitions_of(n) {
                assert_eq!(
                    mn_character(&theta, &Partition::column(n)).unwrap(),
                    BigInt::from(dimension(&theta))
                );
            }
        }
        assert_eq!(mn_character(&p("2,2"), &p("2,2")).unwrap(), int(2));
        assert!(mn_character(&p("2,2"), &p("3")).is_err());
    }

    #[test]
    fn s3_table() {
        // rows [3], [2,1], [1,1,1]; columns [1,1,1], [2,1], [3]
        let expected = [[1, 1, 1], [2, 0, -1], [1, -1, 1]];
        let thetas = [p("3"), p("2,1"), p("1,1,1")];
        let mus = [p("1,1,1"), p("2,1"), p("3")];
        for (i, theta) in thetas.iter().enumerate() {
            for (j, mu) in mus.iter().enumerate() {
                assert_eq!(mn_character(theta, mu).unwrap(), int(expected[i][j]));
            }
        }
    }

    #[test]
    fn hook_routes_agree() {
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                for a in 0..n {
                    let via_mn = mn_character(&hook_partition(n, a).unwrap(), &lambda).unwrap();
                    assert_eq!(hook_character(n, a, &lambda).unwrap(), via_mn, "n={n} a={a} {lambda:?}");
                }
            }
        }
    }

    #[test]
    fn non_hooks_vanish_on_long_cycle() {
        for n in 1..=7 {
            for theta in partitions_of(n).into_iter().filter(|t| !t.is_hook()) {
                assert_eq!(mn_character(&theta, &Partition::row(n)).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=5 {
            let parts = partitions_of(n);
            for mu in &parts {
                for nu in &parts {
                    let s: BigInt = parts
                        .iter()
                        .map(|t| mn_character(t, mu).unwrap() * mn_character(t, nu).unwrap())
                        .sum();
                    let expected = if mu == nu {
                        BigInt::from(factorial(n) / conjugacy_class_size(mu))
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn content_identity() {
        for n in 1..=6 {
            for theta in partitions_of(n) {
                let mut lhs = ExactPoly::zero();
                for mu in partitions_of(n) {
                    let c = BigInt::from(conjugacy_class_size(&mu)) * mn_character(&theta, &mu).unwrap();
                    lhs = lhs + ExactPoly::monomial(BigRational::from_integer(c), mu.len());
                }
                let f = BigRational::from_integer(dimension(&theta).into());
                assert_eq!(lhs, content_polynomial(&theta).scale(&f), "{theta:?}");
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_count(&[p("1,1,1")]).unwrap(), BigUint::from(1u32));
        assert_eq!(frobenius_count(&[p("3")]).unwrap(), BigUint::from(0u32));
        assert_eq!(frobenius_count(&[p("4"), p("4")]).unwrap(), BigUint::from(6u32));
        assert_eq!(frobenius_count(&[p("3"), p("3"), p("3")]).unwrap(), BigUint::from(2u32));
        assert!(frobenius_count(&[]).is_err());
        assert!(frobenius_count(&[p("3"), p("2")]).is_err());
    }

    #[test]
    fn cache_is_consistent() {
        let cache = CharacterCache::new();
        let theta = p("3,2,1");
        let mu = p("2,2,1,1");
        let first = cache.character(&theta, &mu).unwrap();
        assert!(!cache.is_empty());
        assert_eq!(cache.character(&theta, &mu).unwrap(), first);
        assert_eq!(CharacterCache::new().character(&theta, &mu).unwrap(), first);
    }
}
