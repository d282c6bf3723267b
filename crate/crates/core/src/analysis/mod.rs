//! Certificates and statistics for genus polynomials.
//!
//! The genus moments are stated for the shifted variable
//! `X = (m−1)n + 1 − 2g`, the exponent of `t` in `P⁽ᵐ⁾_{n,λ}`. Closed forms
//! ([`expected_x`], [`variance_x`]) are cross-checked against moments read
//! directly off a distribution ([`moments_from_gamma`]).

mod decimal;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::r_poly_integer;
use crate::combinatorics::{factorial, Partition};
use crate::genus::GenusPolynomial;
use crate::polyring::{Bound, ExactPoly};
use crate::serde_util;
use crate::{Error, Result};

pub use decimal::{ln_approx, to_decimal_string};

pub const DEFAULT_DIGITS: u32 = 50;

/// Outcome of the log-concavity test `a_k² ≥ a_{k−1}a_{k+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LogConcavity {
    LogConcave,
    /// First interior index where the inequality fails.
    Violated {
        index: usize,
    },
    /// The sequence has a zero entry, outside the definition.
    NotApplicable,
}

impl LogConcavity {
    pub fn holds(self) -> bool {
        self == LogConcavity::LogConcave
    }
}

pub fn is_log_concave(seq: &[BigUint]) -> LogConcavity {
    if seq.is_empty() || seq.iter().any(Zero::is_zero) {
        return LogConcavity::NotApplicable;
    }
    for k in 1..seq.len().saturating_sub(1) {
        if &seq[k] * &seq[k] < &seq[k - 1] * &seq[k + 1] {
            return LogConcavity::Violated { index: k };
        }
    }
    LogConcavity::LogConcave
}

/// [`is_log_concave`] on the range from the first to the last nonzero entry.
pub fn log_concave_on_support(seq: &[BigUint]) -> LogConcavity {
    let Some(first) = seq.iter().position(|c| !c.is_zero()) else {
        return LogConcavity::NotApplicable;
    };
    let last = seq.iter().rposition(|c| !c.is_zero()).unwrap();
    match is_log_concave(&seq[first..=last]) {
        LogConcavity::Violated { index } => LogConcavity::Violated { index: index + first },
        other => other,
    }
}

/// Exact root-location certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCertificate {
    pub real_rooted: bool,
    /// `None` when the polynomial is not real-rooted.
    pub all_roots_nonpositive: Option<bool>,
}

impl RootCertificate {
    pub fn passes(&self) -> bool {
        self.real_rooted && self.all_roots_nonpositive == Some(true)
    }
}

/// Real-rootedness from Sturm counts of the square-free factors (weighted by
/// multiplicity); non-positivity from a Sturm count on `(0, ∞)`, with the
/// sign pattern of the coefficients as a fast path.
pub fn certify_real_rooted_nonpositive(p: &ExactPoly) -> Result<RootCertificate> {
    let Some(degree) = p.degree() else {
        return Err(Error::Domain("cannot certify the zero polynomial".into()));
    };
    let real_rooted = p.real_root_count_with_multiplicity()? == degree;
    if !real_rooted {
        return Ok(RootCertificate {
            real_rooted,
            all_roots_nonpositive: None,
        });
    }
    let signs_agree = {
        let lead_positive = p.leading_coeff().unwrap() > &BigRational::zero();
        p.coeffs()
            .iter()
            .all(|c| c.is_zero() || (c > &BigRational::zero()) == lead_positive)
    };
    let nonpositive = signs_agree || p.sturm_count(&Bound::Finite(BigRational::zero()), &Bound::PosInf)? == 0;
    Ok(RootCertificate {
        real_rooted,
        all_roots_nonpositive: Some(nonpositive),
    })
}

pub fn certify_gamma(gamma: &GenusPolynomial) -> Result<RootCertificate> {
    certify_real_rooted_nonpositive(&gamma.to_exact_poly())
}

/// `Σ_{k=1}^{n} 1/k^power`, summed over the common denominator `lcm(1..n)^power`.
fn harmonic(n: usize, power: u32) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    let mut lcm = BigUint::one();
    for k in 2..=n as u64 {
        let r: u64 = (&lcm % k).try_into().unwrap();
        lcm *= k / k.gcd(&r);
    }
    let numer: BigUint = (1..=n as u64).map(|k| (&lcm / k).pow(power)).sum();
    BigRational::new(numer.into(), lcm.pow(power).into())
}

fn check_params(m: usize, n: usize, lambda: &Partition) -> Result<()> {
    if m < 3 {
        return Err(Error::Domain(format!("moment formulas need m >= 3, got {m}")));
    }
    if n == 0 || lambda.weight() != n {
        return Err(Error::Usage(format!("{lambda:?} is not a partition of n = {n}")));
    }
    Ok(())
}

/// `E[X] = ℓ(λ) + (m−1) H_n`.
pub fn expected_x(m: usize, n: usize, lambda: &Partition) -> Result<BigRational> {
    check_params(m, n, lambda)?;
    Ok(BigRational::from_integer(lambda.len().into()) + harmonic(n, 1) * BigInt::from(m - 1))
}

/// The extra `m = 3` variance term `2n⁻² Σ_{k=1}^{n−1} C(n−1,k−1)⁻² [z^k]R_{n,λ}`.
pub fn m3_variance_correction(n: usize, lambda: &Partition) -> Result<BigRational> {
    let r = r_poly_integer(n, lambda)?;
    if n < 2 {
        return Ok(BigRational::zero());
    }
    // C(n−1,k−1)⁻² = ((k−1)!(n−k)!)² / ((n−1)!)²; walk w_k = ((k−1)!(n−k)!)².
    let mut weight = BigInt::from(factorial(n - 1).pow(2));
    let denom = weight.clone() * BigInt::from(n * n);
    let mut numer = BigInt::zero();
    for (k, coeff) in r.iter().enumerate().take(n).skip(1) {
        if !coeff.is_zero() {
            numer += &weight * coeff;
        }
        let (up, down) = (BigInt::from(k * k), BigInt::from((n - k) * (n - k)));
        weight = weight * up / down;
    }
    Ok(BigRational::new(numer * 2, denom))
}

/// `Var[X] = (m−1) Σ_{k≤n}(1/k − 1/k²)`, plus [`m3_variance_correction`] when `m = 3`.
pub fn variance_x(m: usize, n: usize, lambda: &Partition) -> Result<BigRational> {
    check_params(m, n, lambda)?;
    let base = (harmonic(n, 1) - harmonic(n, 2)) * BigInt::from(m - 1);
    if m == 3 {
        Ok(base + m3_variance_correction(n, lambda)?)
    } else {
        Ok(base)
    }
}

/// `E[g] = ((m−1)n + 1 − E[X]) / 2`.
pub fn expected_genus(m: usize, n: usize, lambda: &Partition) -> Result<BigRational> {
    let top = BigRational::from_integer(((m - 1) * n + 1).into());
    Ok((top - expected_x(m, n, lambda)?) / BigInt::from(2))
}

/// `Var[g] = Var[X] / 4`.
pub fn variance_genus(m: usize, n: usize, lambda: &Partition) -> Result<BigRational> {
    Ok(variance_x(m, n, lambda)? / BigInt::from(4))
}

/// Exact moments of a distribution, for `g` and for `X = (m−1)n + 1 − 2g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionMoments {
    pub mean_genus: BigRational,
    pub var_genus: BigRational,
    pub mean_x: BigRational,
    pub var_x: BigRational,
}

/// Moments of the normalized coefficient distribution of `gamma`. Digraph
/// families carry no `m`; they are scaled `m = 3` constellations.
pub fn moments_from_gamma(gamma: &GenusPolynomial) -> Result<DistributionMoments> {
    let total = BigInt::from(gamma.total());
    if total.is_zero() {
        return Err(Error::Domain("moments of the zero polynomial".into()));
    }
    let mut first = BigInt::zero();
    let mut second = BigInt::zero();
    for (g, c) in gamma.coeffs().iter().enumerate() {
        let c = BigInt::from(c.clone());
        first += &c * g;
        second += c * (g * g);
    }
    let mean = BigRational::new(first, total.clone());
    let var = BigRational::new(second, total) - &mean * &mean;
    let m = gamma.m().unwrap_or(3);
    let top = BigRational::from_integer(((m - 1) * gamma.n() + 1).into());
    Ok(DistributionMoments {
        mean_x: top - &mean * BigInt::from(2),
        var_x: &var * BigInt::from(4),
        mean_genus: mean,
        var_genus: var,
    })
}

/// A decimal approximation together with the rational it was rendered from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighPrecision {
    pub value: String,
    pub digits: u32,
    #[serde(skip)]
    pub approx: BigRational,
}

impl HighPrecision {
    fn new(approx: BigRational, digits: u32) -> Self {
        HighPrecision {
            value: to_decimal_string(&approx, digits),
            digits,
            approx,
        }
    }
}

/// Centering and scaling of the limiting normal law of the genus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticParams {
    pub mu: HighPrecision,
    pub sigma2: HighPrecision,
}

/// `μ_m = ((m−1)n − ℓ(λ))/2 − (m−1)/2·ln n` and `σ_m² = (m−1)/4·ln n`.
pub fn asymptotic_params(m: usize, n: usize, lambda: &Partition, digits: u32) -> Result<AsymptoticParams> {
    check_params(m, n, lambda)?;
    let ln_n = ln_approx(&BigUint::from(n), digits);
    let linear = BigRational::new(BigInt::from((m - 1) * n) - BigInt::from(lambda.len()), BigInt::from(2));
    let mu = linear - &ln_n * BigRational::new(BigInt::from(m - 1), BigInt::from(2));
    let sigma2 = ln_n * BigRational::new(BigInt::from(m - 1), BigInt::from(4));
    Ok(AsymptoticParams {
        mu: HighPrecision::new(mu, digits),
        sigma2: HighPrecision::new(sigma2, digits),
    })
}

/// Everything known about the genus moments of one `(m, n, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentReport {
    pub m: usize,
    pub n: usize,
    pub lambda: Partition,
    #[serde(with = "serde_util::rational")]
    pub expected_x: BigRational,
    #[serde(with = "serde_util::rational")]
    pub variance_x: BigRational,
    #[serde(with = "serde_util::rational")]
    pub expected_genus: BigRational,
    #[serde(with = "serde_util::rational")]
    pub variance_genus: BigRational,
    pub asymptotic: AsymptoticParams,
}

pub fn moment_report(m: usize, n: usize, lambda: &Partition, digits: u32) -> Result<MomentReport> {
    let expected_x = expected_x(m, n, lambda)?;
    let variance_x = variance_x(m, n, lambda)?;
    let top = BigRational::from_integer(((m - 1) * n + 1).into());
    Ok(MomentReport {
        m,
        n,
        lambda: lambda.clone(),
        expected_genus: (top - &expected_x) / BigInt::from(2),
        variance_genus: &variance_x / BigInt::from(4),
        expected_x,
        variance_x,
        asymptotic: asymptotic_params(m, n, lambda, digits)?,
    })
}
