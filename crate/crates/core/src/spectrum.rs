//! Schmidt spectra with exact values and merged multiplicities.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{fraction_string, from_biguint, Rational};

/// Default cap on the number of distinct entries a tensor power may produce.
pub const DEFAULT_DISTINCT_CAP: usize = 2_000_000;

/// Default cap on the dense expansion used by [`tensor_power_dense`].
pub const DEFAULT_ORACLE_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub distinct_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            distinct_cap: DEFAULT_DISTINCT_CAP,
        }
    }
}

/// One distinct Schmidt probability and how often it occurs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Entry {
    pub value: Rational,
    pub multiplicity: BigUint,
}

/// Canonical Schmidt spectrum: values strictly descending, all positive,
/// summing to exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchmidtSpectrum {
    entries: Vec<Entry>,
    dim: BigUint,
}

impl SchmidtSpectrum {
    /// Sorts, merges equal values and drops zero weights. Callers guarantee a
    /// total of one.
    fn from_weighted(mut pairs: Vec<(Rational, BigUint)>) -> Self {
        pairs.retain(|(v, m)| !v.is_zero() && !m.is_zero());
        pairs.sort_by(|a, b| b.0.cmp(&a.0));
        let mut entries: Vec<Entry> = Vec::with_capacity(pairs.len());
        for (value, multiplicity) in pairs {
            match entries.last_mut() {
                Some(last) if last.value == value => last.multiplicity += multiplicity,
                _ => entries.push(Entry {
                    value,
                    multiplicity,
                }),
            }
        }
        let dim = entries.iter().map(|e| &e.multiplicity).sum();
        let s = SchmidtSpectrum { entries, dim };
        debug_assert!(s.total().is_one());
        s
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Schmidt rank (number of nonzero coefficients, with multiplicity).
    pub fn dim(&self) -> &BigUint {
        &self.dim
    }

    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    pub fn largest(&self) -> &Rational {
        &self.entries[0].value
    }

    pub fn smallest(&self) -> &Rational {
        &self.entries[self.entries.len() - 1].value
    }

    pub fn is_product(&self) -> bool {
        self.dim.is_one()
    }

    /// Σ value × multiplicity, exactly.
    pub fn total(&self) -> Rational {
        self.entries
            .iter()
            .map(|e| &e.value * from_biguint(&e.multiplicity))
            .sum()
    }

    /// Emits every value `multiplicity` times, in descending order.
    pub fn expand(&self, cap: u64) -> Result<Vec<Rational>> {
        if self.dim > BigUint::from(cap) {
            return Err(Error::OracleCapExceeded {
                size: self.dim.clone(),
                cap,
            });
        }
        let mut out = Vec::new();
        for e in &self.entries {
            let m = e.multiplicity.to_usize().expect("bounded by cap");
            out.extend(std::iter::repeat_n(e.value.clone(), m));
        }
        Ok(out)
    }
}

impl fmt::Display for SchmidtSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if e.multiplicity.is_one() {
                write!(f, "{}", e.value)?;
            } else {
                write!(f, "{}×{}", e.value, e.multiplicity)?;
            }
        }
        write!(f, "]")
    }
}

pub fn make_spectrum(probs: &[Rational]) -> Result<SchmidtSpectrum> {
    if let Some((index, value)) = probs.iter().enumerate().find(|(_, p)| p.is_negative()) {
        return Err(Error::NegativeEntry {
            index,
            value: value.clone(),
        });
    }
    let sum: Rational = probs.iter().sum();
    if !sum.is_one() {
        let deficit = Rational::one() - &sum;
        return Err(Error::SumNotOne { sum, deficit });
    }
    Ok(SchmidtSpectrum::from_weighted(
        probs.iter().map(|p| (p.clone(), BigUint::one())).collect(),
    ))
}

/// Uniform spectrum `(1/d, …, 1/d)`.
///
/// Panics if `d == 0`.
pub fn maximally_entangled(d: usize) -> SchmidtSpectrum {
    assert!(d >= 1, "maximally entangled state needs d >= 1");
    let value = Rational::new(BigInt::one(), BigInt::from(d));
    SchmidtSpectrum::from_weighted(vec![(value, BigUint::from(d))])
}

pub fn tensor_product(a: &SchmidtSpectrum, b: &SchmidtSpectrum) -> SchmidtSpectrum {
    let mut pairs = Vec::with_capacity(a.entries.len() * b.entries.len());
    for x in &a.entries {
        for y in &b.entries {
            pairs.push((&x.value * &y.value, &x.multiplicity * &y.multiplicity));
        }
    }
    SchmidtSpectrum::from_weighted(pairs)
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Upper bound on the distinct values of `a^{⊗k}`: the number of
/// compositions of `k` into `m` parts, `C(k+m-1, m-1)`.
pub fn estimated_distinct(a: &SchmidtSpectrum, k: u32) -> BigUint {
    let m = a.entries.len() as u64;
    binomial(k as u64 + m - 1, m - 1)
}

/// Calls `visit` with every composition `(c_1..c_m)` of `k`.
fn for_each_composition(m: usize, k: u32, visit: &mut impl FnMut(&[u32])) {
    fn rec(parts: &mut Vec<u32>, m: usize, left: u32, visit: &mut impl FnMut(&[u32])) {
        if parts.len() + 1 == m {
            parts.push(left);
            visit(parts);
            parts.pop();
            return;
        }
        for c in (0..=left).rev() {
            parts.push(c);
            rec(parts, m, left - c, visit);
            parts.pop();
        }
    }
    rec(&mut Vec::with_capacity(m), m, k, visit);
}

/// `a^{⊗k}` with the default distinct-entry cap.
pub fn tensor_power(a: &SchmidtSpectrum, k: u32) -> Result<SchmidtSpectrum> {
    tensor_power_capped(a, k, Limits::default())
}

/// `a^{⊗k}` by multinomial expansion over the distinct values of `a`.
///
/// A composition `(c_1..c_m)` of `k` contributes the product `Π v_i^{c_i}`
/// with multiplicity `k!/(Π c_i!) · Π mult_i^{c_i}`. Equal products from
/// different compositions are merged afterwards.
pub fn tensor_power_capped(a: &SchmidtSpectrum, k: u32, limits: Limits) -> Result<SchmidtSpectrum> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "number of copies must be at least 1".into(),
        ));
    }
    if k == 1 {
        return Ok(a.clone());
    }
    let estimated = estimated_distinct(a, k);
    if estimated > BigUint::from(limits.distinct_cap) {
        return Err(Error::MemoryCapExceeded {
            estimated,
            cap: limits.distinct_cap,
        });
    }

    let kk = k as usize;
    let value_pows: Vec<Vec<Rational>> = a
        .entries
        .iter()
        .map(|e| (0..=kk).map(|c| Pow::pow(&e.value, c)).collect())
        .collect();
    let mult_pows: Vec<Vec<BigUint>> = a
        .entries
        .iter()
        .map(|e| (0..=kk).map(|c| Pow::pow(&e.multiplicity, c)).collect())
        .collect();
    let mut factorial = vec![BigUint::one(); kk + 1];
    for i in 1..=kk {
        factorial[i] = &factorial[i - 1] * BigUint::from(i);
    }

    let mut pairs = Vec::with_capacity(estimated.to_usize().unwrap_or(0));
    for_each_composition(a.entries.len(), k, &mut |parts| {
        let mut value = Rational::one();
        let mut mult = factorial[kk].clone();
        for (i, &c) in parts.iter().enumerate() {
            let c = c as usize;
            if c == 0 {
                continue;
            }
            value *= &value_pows[i][c];
            mult = mult / &factorial[c] * &mult_pows[i][c];
        }
        pairs.push((value, mult));
    });
    Ok(SchmidtSpectrum::from_weighted(pairs))
}

/// `a^{⊗k}` by enumerating all `dim^k` products one by one. Slow; exists as
/// an independent check on [`tensor_power`].
pub fn tensor_power_dense(a: &SchmidtSpectrum, k: u32, cap: u64) -> Result<SchmidtSpectrum> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "number of copies must be at least 1".into(),
        ));
    }
    let size = Pow::pow(a.dim(), k);
    if size > BigUint::from(cap) {
        return Err(Error::OracleCapExceeded { size, cap });
    }
    let base = a.expand(cap)?;
    let mut products = vec![Rational::one()];
    for _ in 0..k {
        products = products
            .iter()
            .flat_map(|p| base.iter().map(move |b| p * b))
            .collect();
    }
    Ok(SchmidtSpectrum::from_weighted(
        products.into_iter().map(|p| (p, BigUint::one())).collect(),
    ))
}

/// Entropy of entanglement in bits, `-Σ v log2 v`, in double precision.
pub fn entropy(a: &SchmidtSpectrum) -> f64 {
    a.entries
        .iter()
        .filter(|e| !e.value.is_one())
        .map(|e| {
            let v = e.value.to_f64().unwrap_or(0.0);
            // log2 of numerator and denominator separately keeps tiny values accurate.
            let log2 = log2_big(e.value.numer()) - log2_big(e.value.denom());
            -e.multiplicity.to_f64().unwrap_or(f64::INFINITY) * v * log2
        })
        .sum()
}

fn log2_big(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::NAN).log2();
    }
    let shift = bits - 64;
    let top = (n.magnitude() >> shift).to_f64().unwrap_or(f64::NAN);
    top.log2() + shift as f64
}

/// Shorthand for the debug form `[(value, mult), …]` with fractions.
pub fn describe(a: &SchmidtSpectrum) -> String {
    a.entries
        .iter()
        .map(|e| format!("({},{})", fraction_string(&e.value), e.multiplicity))
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn to_bigint(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}
