//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Besides ring arithmetic this module provides the backward shift
//! `T: p(t) ↦ p(t−1)`, operator application `R(T)p`, the falling-factorial
//! products `H_{n,a}`, and exact real-root counting by Sturm chains.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Coefficients are stored constant term first with no trailing zeros; the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigRational>,
}

impl ExactPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_int_coeffs<I: Into<BigInt> + Copy>(coeffs: &[I]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `x + c`.
    pub fn linear_root_shift(c: i64) -> Self {
        Self::from_int_coeffs(&[c, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Exponent of the largest power of `t` dividing `self`.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, k: &BigRational) -> ExactPoly {
        if k.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> ExactPoly {
        let mut base = self.clone();
        let mut acc = ExactPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> ExactPoly {
        if self.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ExactPoly { coeffs }
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self, order: usize) -> ExactPoly {
        let mut p = self.clone();
        for _ in 0..order {
            let coeffs = p
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect();
            p = ExactPoly::from_coeffs(coeffs);
        }
        p
    }

    /// The backward shift `p(t) ↦ p(t−1)`.
    pub fn shift(&self) -> ExactPoly {
        self.translate(&-BigRational::one())
    }

    /// `p(t−k)`, i.e. the backward shift applied `k` times.
    pub fn shift_by(&self, k: i64) -> ExactPoly {
        self.translate(&BigRational::from_integer((-k).into()))
    }

    /// `p(t + h)` by repeated synthetic division (Taylor shift).
    pub fn translate(&self, h: &BigRational) -> ExactPoly {
        let mut c = self.coeffs.clone();
        let d = c.len();
        if h.is_zero() || d < 2 {
            return self.clone();
        }
        for i in 0..d - 1 {
            for j in (i..d - 1).rev() {
                let carry = &c[j + 1] * h;
                c[j] += carry;
            }
        }
        ExactPoly::from_coeffs(c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &ExactPoly) -> (ExactPoly, ExactPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (ExactPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lead;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (ExactPoly::from_coeffs(quot), ExactPoly::from_coeffs(rem))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &ExactPoly) -> Option<ExactPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> ExactPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => ExactPoly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ExactPoly) -> ExactPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's algorithm: `self = c · ∏ qᵢ^i` with each `qᵢ` monic and square-free.
    ///
    /// Returns `(qᵢ, i)` pairs for the non-constant factors.
    pub fn square_free_decomposition(&self) -> Vec<(ExactPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative(1);
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative(1);
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative(1);
            i += 1;
        }
        out
    }

    pub fn square_free_part(&self) -> ExactPoly {
        let g = self.gcd(&self.derivative(1));
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn sturm_count(&self, lo: &Bound, hi: &Bound) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Domain("Sturm count of the zero polynomial".into()));
        }
        let chain = SturmChain::new(&self.square_free_part());
        Ok(chain.count(lo, hi))
    }

    /// Number of real roots counted with multiplicity.
    pub fn real_root_count_with_multiplicity(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Domain("root count of the zero polynomial".into()));
        }
        let mut total = 0;
        for (factor, mult) in self.square_free_decomposition() {
            total += mult * SturmChain::new(&factor).count(&Bound::NegInf, &Bound::PosInf);
        }
        Ok(total)
    }

    /// Coefficients as decimal strings, constant term first. The zero polynomial gives `[]`.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Endpoint of a Sturm interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl From<BigRational> for Bound {
    fn from(x: BigRational) -> Self {
        Bound::Finite(x)
    }
}

/// Sturm sequence of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<ExactPoly>,
}

impl SturmChain {
    pub fn new(p: &ExactPoly) -> Self {
        let mut chain = vec![p.clone()];
        let mut next = p.derivative(1);
        while !next.is_zero() {
            let (_, r) = chain.last().unwrap().div_rem(&next);
            chain.push(next);
            // Positive rescaling keeps signs and stops coefficient growth.
            next = -r.scale_to_primitive();
        }
        SturmChain { chain }
    }

    pub fn polys(&self) -> &[ExactPoly] {
        &self.chain
    }

    fn sign_at(p: &ExactPoly, x: &Bound) -> i32 {
        let Some(deg) = p.degree() else { return 0 };
        let lead_sign = if p.leading_coeff().unwrap().is_positive() {
            1
        } else {
            -1
        };
        match x {
            Bound::PosInf => lead_sign,
            Bound::NegInf => {
                if deg % 2 == 0 {
                    lead_sign
                } else {
                    -lead_sign
                }
            }
            Bound::Finite(v) => {
                let y = p.evaluate(v);
                if y.is_zero() {
                    0
                } else if y.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Bound) -> usize {
        let mut last = 0;
        let mut changes = 0;
        for p in &self.chain {
            let s = Self::sign_at(p, x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct roots in `(lo, hi]`; empty intervals give 0.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let ordered = match (lo, hi) {
            (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => true,
        };
        if !ordered {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

impl ExactPoly {
    /// Positive multiple with coprime integer coefficients.
    fn scale_to_primitive(&self) -> ExactPoly {
        if self.is_zero() {
            return ExactPoly::zero();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ExactPoly::from_coeffs(ints.into_iter().map(|c| BigRational::from_integer(c / &g)).collect())
    }
}

/// `H_{n,a}(t) = ∏_{k=−a}^{n−a−1} (t + k)` for `0 ≤ a ≤ n−1`.
pub fn falling_factorial_h(n: usize, a: usize) -> Result<ExactPoly> {
    if n == 0 || a >= n {
        return Err(Error::Domain(format!("H_(n,a) needs 0 <= a <= n-1, got n={n}, a={a}")));
    }
    let lo = -(a as i64);
    let hi = n as i64 - a as i64 - 1;
    Ok((lo..=hi).fold(ExactPoly::one(), |acc, k| acc * ExactPoly::linear_root_shift(k)))
}

/// `R(T) p = Σ_k [z^k]R · p(t−k)`.
pub fn apply_operator(r: &ExactPoly, p: &ExactPoly) -> ExactPoly {
    let mut acc = ExactPoly::zero();
    let mut current = p.clone();
    for (k, c) in r.coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &current.scale(c);
        }
        if k + 1 < r.coeffs.len() {
            current = current.shift();
        }
    }
    acc
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({self})")
    }
}

/// Constant term first, e.g. `12 + 96t + 36t^2`.
impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    f.write_str("t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;

    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;

    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;

    fn neg(self) -> ExactPoly {
        -&self
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;

    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        self + &(-rhs)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;

    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for ExactPoly {
            type Output = ExactPoly;
            fn $method(self, rhs: ExactPoly) -> ExactPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $method(self, rhs: &ExactPoly) -> ExactPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> ExactPoly {
        ExactPoly::from_int_coeffs(c)
    }

    fn t() -> ExactPoly {
        ExactPoly::x()
    }

    #[test]
    fn ring_examples() {
        assert_eq!((t() + ip(&[1])) * (t() - ip(&[1])), ip(&[-1, 0, 1]));
        assert_eq!((t() * (t() + ip(&[1]))).pow(2), ip(&[0, 0, 1, 2, 1]));
        assert_eq!(ip(&[3, 4]) * ExactPoly::zero(), ExactPoly::zero());
        assert_eq!(ip(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(ExactPoly::zero().degree(), None);
    }

    #[test]
    fn h_polynomials() {
        assert_eq!(falling_factorial_h(2, 0).unwrap(), ip(&[0, 1, 1]));
        assert_eq!(falling_factorial_h(2, 1).unwrap(), ip(&[0, -1, 1]));
        assert_eq!(falling_factorial_h(3, 1).unwrap().evaluate(&rat(1, 1)), rat(0, 1));
        assert!(falling_factorial_h(3, 3).is_err());
        assert_eq!(falling_factorial_h(4, 0).unwrap().evaluate(&rat(1, 1)), rat(24, 1));
        for n in 1..=7 {
            let h0 = falling_factorial_h(n, 0).unwrap();
            for a in 0..n {
                assert_eq!(h0.shift_by(a as i64), falling_factorial_h(n, a).unwrap());
            }
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(ip(&[0, 0, 1]).shift(), ip(&[1, -2, 1]));
        assert_eq!(ip(&[7]).shift(), ip(&[7]));
        // expand both sides for (n, a) = (4, 2): (t-2)(t-1)t(t+1)
        let lhs = falling_factorial_h(4, 0).unwrap().shift().shift();
        let rhs = ip(&[-2, 1]) * ip(&[-1, 1]) * t() * ip(&[1, 1]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn operator_examples() {
        let p = ip(&[0, 0, 1]);
        assert_eq!(apply_operator(&ExactPoly::one(), &p), p);
        assert_eq!(apply_operator(&t(), &p), p.shift());
        assert_eq!(apply_operator(&ip(&[1, -1]), &p), ip(&[-1, 2]));
    }

    #[test]
    fn calculus_examples() {
        assert_eq!(ip(&[0, 0, 0, 1]).derivative(1), ip(&[0, 0, 3]));
        let h = falling_factorial_h(3, 0).unwrap();
        let v = h.pow(2).shift_by(1).derivative(2).evaluate(&rat(1, 1));
        assert_eq!(v, rat(8, 1));
    }

    #[test]
    fn sturm_examples() {
        use Bound::*;
        let zero = Finite(rat(0, 1));
        assert_eq!(ip(&[-1, 0, 1]).sturm_count(&NegInf, &zero).unwrap(), 1);
        assert_eq!(ip(&[1, 0, 1]).sturm_count(&NegInf, &PosInf).unwrap(), 0);
        assert_eq!(ip(&[12, 96, 36]).sturm_count(&NegInf, &zero).unwrap(), 2);
        assert!(ExactPoly::zero().sturm_count(&NegInf, &PosInf).is_err());
        // root exactly at the right endpoint is counted, at the left it is not
        let p = ip(&[0, -1, 1]); // t(t-1)
        assert_eq!(p.sturm_count(&Finite(rat(0, 1)), &Finite(rat(1, 1))).unwrap(), 1);
        assert_eq!(p.sturm_count(&Finite(rat(-1, 1)), &Finite(rat(0, 1))).unwrap(), 1);
        assert_eq!(p.sturm_count(&Finite(rat(1, 1)), &Finite(rat(0, 1))).unwrap(), 0);
        // repeated roots counted once
        let sq = ip(&[1, 1]).pow(3) * ip(&[-2, 1]);
        assert_eq!(sq.sturm_count(&NegInf, &PosInf).unwrap(), 2);
        assert_eq!(sq.real_root_count_with_multiplicity().unwrap(), 4);
    }

    #[test]
    fn yun_decomposition() {
        let p = ip(&[1, 1]).pow(3) * ip(&[-2, 1]).pow(2) * ip(&[1, 0, 1]);
        let mut dec = p.square_free_decomposition();
        dec.sort_by_key(|(_, m)| *m);
        assert_eq!(dec, vec![(ip(&[1, 0, 1]), 1), (ip(&[-2, 1]), 2), (ip(&[1, 1]), 3)]);
    }

    fn small_poly() -> impl Strategy<Value = ExactPoly> {
        prop::collection::vec(-5i64..=5, 0..5).prop_map(|c| ExactPoly::from_int_coeffs(&c))
    }

    proptest! {
        #[test]
        fn shift_is_ring_homomorphism(p in small_poly(), q in small_poly()) {
            prop_assert_eq!((&p * &q).shift(), &p.shift() * &q.shift());
            prop_assert_eq!((&p + &q).shift(), &p.shift() + &q.shift());
        }

        #[test]
        fn operator_composition(r1 in small_poly(), r2 in small_poly(), p in small_poly()) {
            prop_assert_eq!(
                apply_operator(&(&r1 * &r2), &p),
                apply_operator(&r1, &apply_operator(&r2, &p))
            );
        }

        #[test]
        fn division_identity(p in small_poly(), q in small_poly()) {
            prop_assume!(!q.is_zero());
            let (quot, rem) = p.div_rem(&q);
            prop_assert_eq!(&(&quot * &q) + &rem, p);
            prop_assert!(rem.degree().is_none_or(|d| d < q.degree().unwrap()));
        }

        #[test]
        fn sturm_matches_integer_roots(roots in prop::collection::vec(-4i64..=4, 1..5), probe in -5i64..=5) {
            let p = roots.iter().fold(ExactPoly::one(), |acc, &r| acc * ip(&[-r, 1]));
            let mut distinct = roots.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let below = distinct.iter().filter(|&&r| r <= probe).count();
            prop_assert_eq!(p.sturm_count(&Bound::NegInf, &Bound::Finite(rat(probe, 1))).unwrap(), below);
            prop_assert_eq!(p.real_root_count_with_multiplicity().unwrap(), roots.len());
        }
    }
}
