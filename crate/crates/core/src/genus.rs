//! Genus polynomials from symmetric-group characters.
//!
//! The central object is `P⁽ᵐ⁾_{n,λ}(t) = t^{(m−1)n+1} Γ⁽ᵐ⁾_{n,λ}(t^{−2})`,
//! which has two closed forms:
//!
//! ```text
//! character route: |C(λ)|/n · t^ℓ(λ) · Σₐ (−1)ᵃ H_{n,a}(t)^{m−1} χ^{[n−a,1ᵃ]}_λ
//! operator route:  |C(λ)|/n · t^ℓ(λ) · R_{n,λ}(T) H_{n,0}(t)^{m−1}
//! ```
//!
//! where `T` is the backward shift. The two are computed independently and
//! must agree exactly.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{mn_character, r_poly};
use crate::combinatorics::{conjugacy_class_size, factorial, hook_partition, Partition};
use crate::oracle::{total_embeddings, EulerianDigraph};
use crate::polyring::{apply_operator, falling_factorial_h, ExactPoly};
use crate::serde_util;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Constellation,
    Digraph,
    Bouquet,
    Dipole,
    Fan,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Constellation => "constellation",
            Family::Digraph => "digraph",
            Family::Bouquet => "bouquet",
            Family::Dipole => "dipole",
            Family::Fan => "fan",
        };
        f.write_str(name)
    }
}

/// Genus-indexed counts with their provenance.
///
/// `m` is only meaningful for constellations and is `None` for the digraph
/// families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusPolynomial {
    family: Family,
    m: Option<usize>,
    n: usize,
    lambda: Partition,
    #[serde(with = "serde_util::biguint_vec")]
    coeffs: Vec<BigUint>,
}

impl GenusPolynomial {
    pub fn new(family: Family, m: Option<usize>, n: usize, lambda: Partition, mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        GenusPolynomial {
            family,
            m,
            n,
            lambda,
            coeffs,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> Option<usize> {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> BigUint {
        self.coeffs.get(g).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `Γ(1)`, the total number of counted objects.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn to_exact_poly(&self) -> ExactPoly {
        ExactPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
                .collect(),
        )
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string().bytes().map(|b| DIGITS[(b - b'0') as usize]).collect()
}

/// `c₀ + c₁x + c₂x² + …`, zero terms omitted, unit coefficients printed bare.
pub fn format_counts(coeffs: &[BigUint]) -> String {
    let mut terms = Vec::new();
    for (g, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = match g {
            0 => c.to_string(),
            _ => {
                let coeff = if c.is_one() { String::new() } else { c.to_string() };
                let power = if g == 1 { String::new() } else { superscript(g) };
                format!("{coeff}x{power}")
            }
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_counts(&self.coeffs))
    }
}

/// Which closed form [`p_poly`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Character,
    Operator,
}

/// `P⁽ᵐ⁾_{n,λ}(t)` together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PPoly {
    pub poly: ExactPoly,
    pub m: usize,
    pub n: usize,
    pub lambda: Partition,
}

impl PPoly {
    /// `(m−1)n + 1`, the exponent of `t` that corresponds to genus 0.
    pub fn top_exponent(&self) -> usize {
        (self.m - 1) * self.n + 1
    }
}

fn check_params(m: usize, n: usize, lambda: &Partition) -> Result<()> {
    if m < 2 {
        return Err(Error::Domain(format!("m must be at least 2, got {m}")));
    }
    if n == 0 || lambda.weight() != n {
        return Err(Error::Usage(format!("{lambda:?} is not a partition of n = {n}")));
    }
    Ok(())
}

pub fn p_poly(m: usize, n: usize, lambda: &Partition, route: Route) -> Result<PPoly> {
    check_params(m, n, lambda)?;
    let power = (m - 1) as u32;
    let sum = match route {
        Route::Character => {
            let mut acc = ExactPoly::zero();
            for a in 0..n {
                let chi = mn_character(&hook_partition(n, a)?, lambda)?;
                if chi.is_zero() {
                    continue;
                }
                let signed = if a % 2 == 0 { chi } else { -chi };
                let h = falling_factorial_h(n, a)?.pow(power);
                acc = acc + h.scale(&BigRational::from_integer(signed));
            }
            acc
        }
        Route::Operator => apply_operator(&r_poly(n, lambda)?, &falling_factorial_h(n, 0)?.pow(power)),
    };
    let prefactor = BigRational::new(BigInt::from(conjugacy_class_size(lambda)), BigInt::from(n));
    let poly = sum.scale(&prefactor).shift_up(lambda.len());
    let p = PPoly {
        poly,
        m,
        n,
        lambda: lambda.clone(),
    };
    check_p_invariants(&p)?;
    Ok(p)
}

fn check_p_invariants(p: &PPoly) -> Result<()> {
    let top = p.top_exponent();
    if p.poly.degree().is_some_and(|d| d > top) {
        return Err(Error::Consistency(format!(
            "deg P = {:?} exceeds {top}",
            p.poly.degree()
        )));
    }
    for (e, c) in p.poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !(top - e).is_multiple_of(2) {
            return Err(Error::Consistency(format!(
                "P has a coefficient at t^{e} of the wrong parity"
            )));
        }
        if e < p.lambda.len() {
            return Err(Error::Consistency(format!("t^{} does not divide P", p.lambda.len())));
        }
    }
    Ok(())
}

/// Reads `[x^g]Γ = [t^{(m−1)n+1−2g}]P` and checks that every value is a count.
pub fn p_to_gamma(p: &PPoly) -> Result<GenusPolynomial> {
    check_p_invariants(p)?;
    let top = p.top_exponent();
    let mut coeffs = vec![BigUint::zero(); top / 2 + 1];
    for (e, c) in p.poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Consistency(format!(
                "[t^{e}]P = {c} is not a non-negative integer"
            )));
        }
        coeffs[(top - e) / 2] = c.to_integer().magnitude().clone();
    }
    Ok(GenusPolynomial::new(
        Family::Constellation,
        Some(p.m),
        p.n,
        p.lambda.clone(),
        coeffs,
    ))
}

/// Genus polynomial of `𝓜_m(n, λ)`, the one-face m-constellations.
pub fn gamma_constellation(m: usize, n: usize, lambda: &Partition) -> Result<GenusPolynomial> {
    p_to_gamma(&p_poly(m, n, lambda, Route::Character)?)
}

/// `(∏λᵢ!)² ∏mᵢ(λ)! / n!`, relating `Γ_{n,λ}` to `Γ⁽³⁾_{n,λ}`.
pub fn digraph_factor(n: usize, lambda: &Partition) -> BigRational {
    let parts: BigUint = lambda.parts().iter().map(|&p| factorial(p)).product();
    let mults: BigUint = lambda.multiplicities().iter().map(|&(_, m)| factorial(m)).product();
    BigRational::new(BigInt::from(parts.pow(2) * mults), BigInt::from(factorial(n)))
}

fn scale_counts(coeffs: &[BigUint], factor: &BigRational) -> Result<Vec<BigUint>> {
    coeffs
        .iter()
        .map(|c| {
            let v = BigRational::from_integer(BigInt::from(c.clone())) * factor;
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Consistency(format!("scaled coefficient {v} is not a count")));
            }
            Ok(v.to_integer().magnitude().clone())
        })
        .collect()
}

/// Genus polynomial `Γ_{n,λ}` of the bipartite digraph `D_{n,λ}`.
pub fn gamma_digraph(n: usize, lambda: &Partition) -> Result<GenusPolynomial> {
    let constellation = gamma_constellation(3, n, lambda)?;
    let coeffs = scale_counts(constellation.coeffs(), &digraph_factor(n, lambda))?;
    Ok(GenusPolynomial::new(Family::Digraph, None, n, lambda.clone(), coeffs))
}

/// Directed bouquet `B_n`, equal to `Γ_{n,[1ⁿ]}`.
pub fn bouquet_gamma(n: usize) -> Result<GenusPolynomial> {
    let g = gamma_digraph(n, &Partition::column(n))?;
    Ok(GenusPolynomial {
        family: Family::Bouquet,
        ..g
    })
}

/// Directed dipole `D_{n,[n]}`.
pub fn dipole_gamma(n: usize) -> Result<GenusPolynomial> {
    let g = gamma_digraph(n, &Partition::row(n))?;
    Ok(GenusPolynomial {
        family: Family::Dipole,
        ..g
    })
}

/// Vertices whose removal leaves a directed forest.
pub fn fan_handles(d: &EulerianDigraph) -> Vec<usize> {
    (0..d.vertex_count()).filter(|&v| fan_partition(d, v).is_ok()).collect()
}

/// The partition of the handle in-degree by in-edges per forest component.
pub fn fan_partition(d: &EulerianDigraph, handle: usize) -> Result<Partition> {
    if handle >= d.vertex_count() {
        return Err(Error::Usage(format!("handle {handle} is not a vertex")));
    }
    if d.half_degree(handle) == 0 {
        return Err(Error::NotAFan(format!("handle {handle} has no edges")));
    }
    if d.edges().iter().any(|&(t, h)| t == handle && h == handle) {
        return Err(Error::NotAFan(format!("handle {handle} carries a loop")));
    }
    if !d.is_forest_without(handle) {
        return Err(Error::NotAFan(format!(
            "removing vertex {handle} does not leave a forest"
        )));
    }
    let labels = d.components(Some(handle));
    let comps = labels.iter().filter(|&&l| l != usize::MAX).max().map_or(0, |&l| l + 1);
    let mut incoming = vec![0usize; comps];
    for &e in d.in_edges(handle) {
        incoming[labels[d.edges()[e].0]] += 1;
    }
    Partition::from_unsorted(incoming)
}

/// Genus polynomial of an Eulerian fan, as the multiple of `Γ_{n,λ}` with the
/// right total number of embeddings.
pub fn fan_gamma(d: &EulerianDigraph, handle: usize) -> Result<GenusPolynomial> {
    let lambda = fan_partition(d, handle)?;
    let n = lambda.weight();
    let base = gamma_digraph(n, &lambda)?;
    let factor = BigRational::new(BigInt::from(total_embeddings(d)), BigInt::from(base.total()));
    let coeffs = scale_counts(base.coeffs(), &factor)?;
    Ok(GenusPolynomial::new(Family::Fan, None, n, lambda, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn counts(g: &GenusPolynomial) -> Vec<u64> {
        g.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn p_poly_examples() {
        for route in [Route::Character, Route::Operator] {
            assert_eq!(
                p_poly(3, 2, &p("2"), route).unwrap().poly,
                ExactPoly::from_int_coeffs(&[0, 0, 0, 1, 0, 1])
            );
            assert_eq!(
                p_poly(2, 3, &p("3"), route).unwrap().poly,
                ExactPoly::from_int_coeffs(&[0, 0, 2, 0, 2])
            );
            for m in 2..=5 {
                let expected = ExactPoly::monomial(BigRational::one(), m);
                assert_eq!(p_poly(m, 1, &p("1"), route).unwrap().poly, expected);
            }
        }
        assert!(matches!(p_poly(1, 2, &p("2"), Route::Character), Err(Error::Domain(_))));
        assert!(matches!(p_poly(3, 3, &p("2"), Route::Operator), Err(Error::Usage(_))));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(counts(&gamma_constellation(3, 2, &p("2")).unwrap()), vec![1, 1]);
        assert_eq!(counts(&gamma_constellation(3, 3, &p("3")).unwrap()), vec![2, 16, 6]);
        assert_eq!(counts(&gamma_constellation(2, 3, &p("3")).unwrap()), vec![2, 2]);
        assert_eq!(counts(&gamma_constellation(4, 1, &p("1")).unwrap()), vec![1]);
        assert_eq!(counts(&gamma_digraph(2, &p("2")).unwrap()), vec![2, 2]);
        assert_eq!(counts(&gamma_digraph(3, &p("1,1,1")).unwrap()), vec![10, 2]);
        assert_eq!(counts(&gamma_digraph(1, &p("1")).unwrap()), vec![1]);
    }

    #[test]
    fn p_to_gamma_rejects_bad_parity() {
        let bad = PPoly {
            poly: ExactPoly::from_int_coeffs(&[0, 0, 0, 0, 1]),
            m: 3,
            n: 2,
            lambda: p("2"),
        };
        assert!(matches!(p_to_gamma(&bad), Err(Error::Consistency(_))));
        let negative = PPoly {
            poly: ExactPoly::from_int_coeffs(&[0, 0, 0, -1, 0, 1]),
            m: 3,
            n: 2,
            lambda: p("2"),
        };
        assert!(matches!(p_to_gamma(&negative), Err(Error::Consistency(_))));
    }

    #[test]
    fn routes_agree_and_normalize() {
        for n in 1..=7 {
            for lambda in partitions_of(n) {
                for m in 2..=4 {
                    let a = p_poly(m, n, &lambda, Route::Character).unwrap();
                    let b = p_poly(m, n, &lambda, Route::Operator).unwrap();
                    assert_eq!(a, b, "m={m} {lambda:?}");
                    let gamma = p_to_gamma(&a).unwrap();
                    let expected = conjugacy_class_size(&lambda) * factorial(n - 1) * factorial(n).pow(m as u32 - 2);
                    assert_eq!(gamma.total(), expected);
                    assert!(!gamma.coeff(0).is_zero());
                    let bound = ((m - 1) * n + 1 - lambda.len()) / 2;
                    assert!(gamma.degree().unwrap() <= bound);
                }
            }
        }
    }

    #[test]
    fn tables() {
        assert_eq!(counts(&bouquet_gamma(3).unwrap()), vec![10, 2]);
        assert_eq!(counts(&bouquet_gamma(5).unwrap()), vec![1008, 1680, 192]);
        assert_eq!(
            counts(&bouquet_gamma(8).unwrap()),
            vec![7207200, 60540480, 104781600, 30683520]
        );
        assert_eq!(counts(&dipole_gamma(3).unwrap()), vec![12, 96, 36]);
        assert_eq!(
            counts(&dipole_gamma(5).unwrap()),
            vec![2880, 230400, 2594880, 4752000, 714240]
        );
        assert_eq!(counts(&dipole_gamma(1).unwrap()), vec![1]);
        assert_eq!(dipole_gamma(3).unwrap().family(), Family::Dipole);
    }

    #[test]
    fn display_format() {
        assert_eq!(dipole_gamma(3).unwrap().to_string(), "12 + 96x + 36x²");
        assert_eq!(gamma_constellation(3, 2, &p("2")).unwrap().to_string(), "1 + x");
        assert_eq!(bouquet_gamma(1).unwrap().to_string(), "1");
        let wide = GenusPolynomial::new(Family::Fan, None, 1, p("1"), vec![BigUint::from(3u32); 12]);
        assert!(wide.to_string().ends_with("3x¹¹"));
    }

    #[test]
    fn fans() {
        let triangle = EulerianDigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(counts(&fan_gamma(&triangle, 0).unwrap()), vec![1]);
        let worked = EulerianDigraph::new(3, vec![(0, 1), (0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        let g = fan_gamma(&worked, 0).unwrap();
        assert_eq!(counts(&g), vec![2, 2]);
        assert_eq!(g.lambda(), &p("2"));
        for lambda in partitions_of(4) {
            let d = EulerianDigraph::bipartite(&lambda).unwrap();
            let g = fan_gamma(&d, 0).unwrap();
            assert_eq!(g.coeffs(), gamma_digraph(4, &lambda).unwrap().coeffs());
        }
        let bouquet = EulerianDigraph::bouquet(2).unwrap();
        assert!(matches!(fan_gamma(&bouquet, 0), Err(Error::NotAFan(_))));
        let k4ish = EulerianDigraph::new(3, vec![(0, 1), (1, 2), (2, 1), (1, 0)]).unwrap();
        assert!(matches!(fan_gamma(&k4ish, 0), Err(Error::NotAFan(_))));
        assert!(matches!(fan_gamma(&triangle, 7), Err(Error::Usage(_))));
    }

    #[test]
    fn json_shape() {
        let g = dipole_gamma(3).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(
            text,
            r#"{"family":"dipole","m":null,"n":3,"lambda":[3],"coeffs":["12","96","36"]}"#
        );
        let back: GenusPolynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }
}
