//! Dense reference implementations. Every check here walks the full
//! expanded vector position by position and shares no code with the
//! compressed breakpoint evaluation in the library.

#![allow(dead_code)]

use locc_lab::rational::{parse_decimal, ratio};
use locc_lab::{make_spectrum, Rational, SchmidtSpectrum};
use num_traits::{One, Zero};
use rand::Rng;

pub fn spec(xs: &[&str]) -> SchmidtSpectrum {
    make_spectrum(
        &xs.iter()
            .map(|x| parse_decimal(x).unwrap())
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

pub fn dense(s: &SchmidtSpectrum) -> Vec<Rational> {
    s.expand(1_000_000).unwrap()
}

/// All `len^k` products, sorted descending.
pub fn brute_power(values: &[Rational], k: u32) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for p in &out {
            for v in values {
                next.push(p * v);
            }
        }
        out = next;
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn at(v: &[Rational], i: usize) -> Rational {
    v.get(i).cloned().unwrap_or_else(Rational::zero)
}

/// Prefix-sum test at every position `m = 1..=max(len)`.
pub fn dense_majorized(x: &[Rational], y: &[Rational]) -> bool {
    let n = x.len().max(y.len());
    let (mut sx, mut sy) = (Rational::zero(), Rational::zero());
    for i in 0..n {
        sx += at(x, i);
        sy += at(y, i);
        if sx > sy {
            return false;
        }
    }
    true
}

/// `min_{l=1..len(y)} E_l(x)/E_l(y)` evaluated at every `l`.
pub fn dense_pmax(x: &[Rational], y: &[Rational]) -> Rational {
    if x.len() < y.len() {
        return Rational::zero();
    }
    let (mut ex, mut ey) = (Rational::one(), Rational::one());
    let mut best: Option<Rational> = None;
    for l in 0..y.len() {
        let r = &ex / &ey;
        if best.as_ref().is_none_or(|b| &r < b) {
            best = Some(r);
        }
        ex -= &x[l];
        ey -= &y[l];
    }
    best.unwrap()
}

/// Random spectrum of rank at most `max_dim`: integer weights in 0..=9
/// normalized exactly, so ties and zeros both occur.
pub fn random_spectrum(rng: &mut impl Rng, max_dim: usize) -> SchmidtSpectrum {
    loop {
        let d = rng.gen_range(1..=max_dim);
        let w: Vec<i64> = (0..d).map(|_| rng.gen_range(0..=9)).collect();
        let total: i64 = w.iter().sum();
        if total == 0 {
            continue;
        }
        return make_spectrum(&w.iter().map(|&x| ratio(x, total)).collect::<Vec<_>>()).unwrap();
    }
}

/// Random full-rank spectrum with exactly `d` positive coefficients.
pub fn random_full_rank(rng: &mut impl Rng, d: usize, scale: i64) -> SchmidtSpectrum {
    let w: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=scale)).collect();
    let total: i64 = w.iter().sum();
    make_spectrum(&w.iter().map(|&x| ratio(x, total)).collect::<Vec<_>>()).unwrap()
}
