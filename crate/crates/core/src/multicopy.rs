//! Multi-copy behaviour of state pairs: minimal copy counts for deterministic
//! conversion, classification of incomparable pairs, and p_max scans.

use std::fmt;

use num_traits::{Pow, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::majorization::{compare, conclusive_pmax, majorized_by, Comparability};
use crate::rational::Rational;
use crate::spectrum::{tensor_power_capped, Limits, SchmidtSpectrum};

/// Default copy bound for classification.
pub const DEFAULT_K_MAX: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    AToB,
    BToA,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::AToB => "A→B",
            Direction::BToA => "B→A",
        })
    }
}

/// Which strict-inequality pattern on the extreme coefficients holds.
/// `d` is the common (zero-padded) rank the smallest coefficients refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrongBranch {
    /// `α₁ < β₁` and `α_d < β_d`.
    BothSmaller { d: u64 },
    /// `α₁ > β₁` and `α_d > β_d`.
    BothLarger { d: u64 },
}

fn subscript(n: u64) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

impl fmt::Display for StrongBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (op, d) = match *self {
            StrongBranch::BothSmaller { d } => ('<', d),
            StrongBranch::BothLarger { d } => ('>', d),
        };
        let s = subscript(d);
        write!(f, "α₁{op}β₁ ∧ α{s}{op}β{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairClassification {
    /// Not incomparable: one copy already decides the pair.
    ComparableSingleCopy(Comparability),
    /// Incomparable for every `n <= k`, deterministic at `k + 1` copies.
    KCopyLoccIncomparable { k: u32, direction: Direction },
    /// Excluded for every copy count, with or without catalysts.
    StronglyIncomparable(StrongBranch),
    /// Incomparable up to `k_max` copies with no sufficient condition firing.
    UndecidedUpTo(u32),
}

impl fmt::Display for PairClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairClassification::ComparableSingleCopy(Comparability::Equivalent) => {
                write!(f, "Equivalent (comparable with 1 copy)")
            }
            PairClassification::ComparableSingleCopy(Comparability::SourceToTarget) => {
                write!(f, "Comparable with 1 copy (A→B)")
            }
            PairClassification::ComparableSingleCopy(Comparability::TargetToSource) => {
                write!(f, "Comparable with 1 copy (B→A)")
            }
            PairClassification::ComparableSingleCopy(Comparability::Incomparable) => {
                unreachable!("incomparable pairs are never tagged comparable")
            }
            PairClassification::KCopyLoccIncomparable { k, direction } => {
                write!(
                    f,
                    "{k}-copy LOCC incomparable ({direction} at {} copies)",
                    k + 1
                )
            }
            PairClassification::StronglyIncomparable(branch) => {
                write!(f, "Strongly incomparable ({branch})")
            }
            PairClassification::UndecidedUpTo(k) => {
                write!(f, "Undecided (incomparable up to {k} copies)")
            }
        }
    }
}

/// Largest and smallest coefficient of each spectrum, with the shorter one
/// padded by zeros to the common rank.
fn extremes<'a>(
    a: &'a SchmidtSpectrum,
    b: &'a SchmidtSpectrum,
) -> (&'a Rational, Rational, &'a Rational, Rational) {
    let zero = Rational::zero();
    let a_min = if a.dim() < b.dim() {
        zero.clone()
    } else {
        a.smallest().clone()
    };
    let b_min = if b.dim() < a.dim() {
        zero
    } else {
        b.smallest().clone()
    };
    (a.largest(), a_min, b.largest(), b_min)
}

fn common_rank(a: &SchmidtSpectrum, b: &SchmidtSpectrum) -> u64 {
    let d = a.dim().max(b.dim());
    u64::try_from(d).unwrap_or(u64::MAX)
}

/// Necessary condition for `source^{⊗k} → target^{⊗k}` under LOCC or
/// catalysis-assisted LOCC for any `k`: `α₁ ≤ β₁` and `α_d ≥ β_d`.
/// `false` rules out every copy count and every catalyst.
pub fn extremal_condition(source: &SchmidtSpectrum, target: &SchmidtSpectrum) -> bool {
    let (a_max, a_min, b_max, b_min) = extremes(source, target);
    a_max <= b_max && a_min >= b_min
}

/// Sufficient condition for strong incomparability: the largest and the
/// smallest coefficients are both strictly ordered the same way.
pub fn strong_incomparability(a: &SchmidtSpectrum, b: &SchmidtSpectrum) -> Option<StrongBranch> {
    let (a_max, a_min, b_max, b_min) = extremes(a, b);
    let d = common_rank(a, b);
    if a_max < b_max && a_min < b_min {
        Some(StrongBranch::BothSmaller { d })
    } else if a_max > b_max && a_min > b_min {
        Some(StrongBranch::BothLarger { d })
    } else {
        None
    }
}

/// Smallest `n <= k_max` with `source^{⊗n} ≺ target^{⊗n}`.
pub fn min_deterministic_copies(
    source: &SchmidtSpectrum,
    target: &SchmidtSpectrum,
    k_max: u32,
    limits: Limits,
) -> Result<Option<u32>> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    if !extremal_condition(source, target) {
        return Ok(None);
    }
    for n in 1..=k_max {
        let s = tensor_power_capped(source, n, limits)?;
        let t = tensor_power_capped(target, n, limits)?;
        if majorized_by(&s, &t) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Classifies a pair. Directions are tried A→B first, then B→A; at most one
/// can ever become deterministic.
pub fn classify_pair(
    a: &SchmidtSpectrum,
    b: &SchmidtSpectrum,
    k_max: u32,
    limits: Limits,
) -> Result<PairClassification> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let single = compare(a, b);
    if single != Comparability::Incomparable {
        return Ok(PairClassification::ComparableSingleCopy(single));
    }
    if let Some(branch) = strong_incomparability(a, b) {
        return Ok(PairClassification::StronglyIncomparable(branch));
    }
    for (src, tgt, direction) in [(a, b, Direction::AToB), (b, a, Direction::BToA)] {
        if let Some(n) = min_deterministic_copies(src, tgt, k_max, limits)? {
            return Ok(PairClassification::KCopyLoccIncomparable {
                k: n - 1,
                direction,
            });
        }
    }
    Ok(PairClassification::UndecidedUpTo(k_max))
}

/// Optimal conclusive probability of reaching the `d`-dimensional maximally
/// entangled state: `d · α_d`, with `α_d = 0` when `dim(s) < d`.
pub fn pmax_mes(s: &SchmidtSpectrum, d: usize) -> Result<Rational> {
    let rank = s.dim();
    if *rank > d.into() {
        return Err(Error::InvalidArgument(format!(
            "MES dimension {d} is below the Schmidt rank {rank}"
        )));
    }
    if *rank < d.into() {
        return Ok(Rational::zero());
    }
    Ok(Rational::from_integer(d.into()) * s.smallest())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub k: u32,
    pub pmax: Rational,
    /// `(α_d/β_d)^k`, present when `α_d < β_d`.
    pub decay_bound: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmaxScan {
    pub rows: Vec<ScanRow>,
}

impl PmaxScan {
    /// Copy count with the largest p_max (first one on ties).
    pub fn argmax(&self) -> Option<u32> {
        let mut best: Option<&ScanRow> = None;
        for row in &self.rows {
            if best.is_none_or(|b| row.pmax > b.pmax) {
                best = Some(row);
            }
        }
        best.map(|r| r.k)
    }

    pub fn row(&self, k: u32) -> Option<&ScanRow> {
        self.rows.get(k.checked_sub(1)? as usize)
    }
}

/// `p_max(source^{⊗k} → target^{⊗k})` for `k = 1..=k_max`. Rows are computed
/// in parallel and collected in order.
pub fn pmax_scan(
    source: &SchmidtSpectrum,
    target: &SchmidtSpectrum,
    k_max: u32,
    limits: Limits,
) -> Result<PmaxScan> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let (_, a_min, _, b_min) = extremes(source, target);
    let ratio = (a_min < b_min).then(|| &a_min / &b_min);
    let rows = (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let s = tensor_power_capped(source, k, limits)?;
            let t = tensor_power_capped(target, k, limits)?;
            Ok(ScanRow {
                k,
                pmax: conclusive_pmax(&s, &t),
                decay_bound: ratio.as_ref().map(|r| Pow::pow(r, k)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PmaxScan { rows })
}

/// Numerical evidence for the multi-copy monotonicity conjecture: given
/// deterministic conversion at `k + 1` copies, whether it persists for each
/// `n` in `k+2..=n_max`. Only evidence for the scanned range; it proves
/// nothing beyond it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureEvidence {
    pub k: u32,
    pub rows: Vec<(u32, bool)>,
}

impl ConjectureEvidence {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|&(_, ok)| ok)
    }
}

pub fn conjecture_scan(
    source: &SchmidtSpectrum,
    target: &SchmidtSpectrum,
    k: u32,
    n_max: u32,
    limits: Limits,
) -> Result<ConjectureEvidence> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let base = k + 1;
    let holds = |n: u32| -> Result<bool> {
        Ok(majorized_by(
            &tensor_power_capped(source, n, limits)?,
            &tensor_power_capped(target, n, limits)?,
        ))
    };
    if !holds(base)? {
        return Err(Error::NotDeterministicAtKPlus1 { copies: base });
    }
    let rows = (base + 1..=n_max)
        .into_par_iter()
        .map(|n| holds(n).map(|ok| (n, ok)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureEvidence { k, rows })
}
