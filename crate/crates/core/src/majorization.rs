//! Majorization on compressed spectra.
//!
//! Both the prefix-sum difference `S_x(m) - S_y(m)` and the tail ratio
//! `E_l(x) / E_l(y)` are piecewise linear (resp. piecewise linear-fractional)
//! in the position, with pieces delimited by the block boundaries of either
//! spectrum. Their extrema are therefore attained at those boundaries, and
//! only the boundaries are evaluated: the cost is linear in the number of
//! distinct values, not in the Schmidt rank.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::spectrum::{to_bigint, SchmidtSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparability {
    SourceToTarget,
    TargetToSource,
    Equivalent,
    Incomparable,
}

impl fmt::Display for Comparability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparability::SourceToTarget => "SourceToTarget",
            Comparability::TargetToSource => "TargetToSource",
            Comparability::Equivalent => "Equivalent",
            Comparability::Incomparable => "Incomparable",
        })
    }
}

/// Cumulative block layout of a spectrum: block `i` covers positions
/// `(ends[i-1], ends[i]]` and `sums[i]` is the prefix sum at `ends[i]`.
struct Blocks<'a> {
    spectrum: &'a SchmidtSpectrum,
    ends: Vec<BigInt>,
    sums: Vec<Rational>,
}

impl<'a> Blocks<'a> {
    fn new(spectrum: &'a SchmidtSpectrum) -> Self {
        let mut ends = Vec::with_capacity(spectrum.distinct_len());
        let mut sums = Vec::with_capacity(spectrum.distinct_len());
        let mut end = BigInt::zero();
        let mut sum = Rational::zero();
        for e in spectrum.entries() {
            let m = to_bigint(&e.multiplicity);
            sum += &e.value * Rational::from_integer(m.clone());
            end += m;
            ends.push(end.clone());
            sums.push(sum.clone());
        }
        Blocks {
            spectrum,
            ends,
            sums,
        }
    }

    fn cursor(&self) -> Cursor<'_, 'a> {
        Cursor {
            blocks: self,
            idx: 0,
        }
    }
}

/// Evaluates prefix sums at non-decreasing positions.
struct Cursor<'b, 'a> {
    blocks: &'b Blocks<'a>,
    idx: usize,
}

impl Cursor<'_, '_> {
    fn prefix_at(&mut self, pos: &BigInt) -> Rational {
        let b = self.blocks;
        while self.idx < b.ends.len() && &b.ends[self.idx] < pos {
            self.idx += 1;
        }
        if self.idx == b.ends.len() {
            return Rational::one();
        }
        let (start, before) = match self.idx {
            0 => (BigInt::zero(), Rational::zero()),
            i => (b.ends[i - 1].clone(), b.sums[i - 1].clone()),
        };
        let value = &b.spectrum.entries()[self.idx].value;
        before + value * Rational::from_integer(pos - start)
    }
}

fn merged_positions(x: &Blocks, y: &Blocks, extra: &[BigInt]) -> Vec<BigInt> {
    let mut pos: Vec<BigInt> = x.ends.iter().chain(&y.ends).chain(extra).cloned().collect();
    pos.sort();
    pos.dedup();
    pos
}

/// `x ≺ y`: every descending prefix sum of `x` is at most that of `y`.
/// The shorter spectrum is implicitly padded with zeros.
pub fn majorized_by(x: &SchmidtSpectrum, y: &SchmidtSpectrum) -> bool {
    let bx = Blocks::new(x);
    let by = Blocks::new(y);
    let (mut cx, mut cy) = (bx.cursor(), by.cursor());
    merged_positions(&bx, &by, &[])
        .iter()
        .all(|p| cx.prefix_at(p) <= cy.prefix_at(p))
}

/// Whether `source` converts to `target` with certainty under LOCC.
pub fn converts_deterministically(source: &SchmidtSpectrum, target: &SchmidtSpectrum) -> bool {
    majorized_by(source, target)
}

/// Optimal probability of exact (conclusive) conversion,
/// `min_l E_l(source) / E_l(target)` with `E_l = 1 - Σ_{i<l} v_i`.
///
/// Zero when the source has smaller Schmidt rank than the target.
pub fn conclusive_pmax(source: &SchmidtSpectrum, target: &SchmidtSpectrum) -> Rational {
    if source.dim() < target.dim() {
        return Rational::zero();
    }
    let bx = Blocks::new(source);
    let by = Blocks::new(target);
    // t = l - 1 ranges over 0..=dim(target)-1, where the target tail is positive.
    let last: BigInt = to_bigint(target.dim()) - 1;
    let positions = merged_positions(&bx, &by, &[BigInt::zero(), last.clone()]);
    let (mut cx, mut cy) = (bx.cursor(), by.cursor());
    positions
        .iter()
        .take_while(|t| **t <= last)
        .map(|t| (Rational::one() - cx.prefix_at(t)) / (Rational::one() - cy.prefix_at(t)))
        .min()
        .expect("position 0 is always evaluated")
}

pub fn compare(a: &SchmidtSpectrum, b: &SchmidtSpectrum) -> Comparability {
    if a == b {
        return Comparability::Equivalent;
    }
    match (majorized_by(a, b), majorized_by(b, a)) {
        (true, false) => Comparability::SourceToTarget,
        (false, true) => Comparability::TargetToSource,
        (true, true) => unreachable!("mutual majorization of distinct canonical spectra"),
        (false, false) => Comparability::Incomparable,
    }
}
