//! Catalysis-assisted conversion: checking a proposed catalyst and searching
//! for one on a rational grid.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::majorization::majorized_by;
use crate::multicopy::extremal_condition;
use crate::rational::Rational;
use crate::spectrum::{
    make_spectrum, tensor_power_capped, tensor_product, Limits, SchmidtSpectrum,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalystSearchConfig {
    /// Catalyst Schmidt ranks to try, ascending.
    pub dims: RangeInclusive<usize>,
    /// Candidate coefficients are multiples of `1/grid_q`.
    pub grid_q: u32,
    /// Search a catalyst for the `copies`-fold pair.
    pub copies: u32,
    /// Skip the search when the extremal necessary condition fails.
    pub prune_necessary: bool,
}

impl Default for CatalystSearchConfig {
    fn default() -> Self {
        CatalystSearchConfig {
            dims: 2..=4,
            grid_q: 20,
            copies: 1,
            prune_necessary: true,
        }
    }
}

impl CatalystSearchConfig {
    pub fn new(dims: RangeInclusive<usize>, grid_q: u32, copies: u32) -> Result<Self> {
        let cfg = CatalystSearchConfig {
            dims,
            grid_q,
            copies,
            prune_necessary: true,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = (*self.dims.start(), *self.dims.end());
        if lo < 2 {
            return Err(Error::InvalidArgument(format!(
                "catalyst rank must be at least 2, got {lo}"
            )));
        }
        if hi < lo {
            return Err(Error::InvalidArgument(format!(
                "empty catalyst rank range {lo}..{hi}"
            )));
        }
        if (self.grid_q as usize) < hi {
            return Err(Error::InvalidArgument(format!(
                "grid 1/{} cannot hold a rank-{hi} distribution",
                self.grid_q
            )));
        }
        if self.copies == 0 {
            return Err(Error::InvalidArgument("copies must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SchmidtSpectrum),
    /// No grid point works; says nothing about finer grids.
    NoneAtResolution {
        grid_q: u32,
    },
    /// The necessary condition fails, so no catalyst of any kind exists.
    ExcludedByNecessaryCondition,
}

impl SearchOutcome {
    pub fn catalyst(&self) -> Option<&SchmidtSpectrum> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// `source ⊗ catalyst ≺ target ⊗ catalyst`.
pub fn catalyzes(
    source: &SchmidtSpectrum,
    target: &SchmidtSpectrum,
    catalyst: &SchmidtSpectrum,
) -> bool {
    majorized_by(
        &tensor_product(source, catalyst),
        &tensor_product(target, catalyst),
    )
}

/// `source^{⊗k} ⊗ catalyst ≺ target^{⊗k} ⊗ catalyst`.
pub fn multicopy_elocc_check(
    source: &SchmidtSpectrum,
    target: &SchmidtSpectrum,
    catalyst: &SchmidtSpectrum,
    k: u32,
    limits: Limits,
) -> Result<bool> {
    let s = tensor_power_capped(source, k, limits)?;
    let t = tensor_power_capped(target, k, limits)?;
    Ok(catalyzes(&s, &t, catalyst))
}

/// Partitions of `q` into exactly `parts` positive parts, non-increasing
/// within each partition, listed in descending lexicographic order.
pub fn grid_points(parts: usize, q: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, parts: usize, left: u32, cap: u32, out: &mut Vec<Vec<u32>>) {
        let remaining = parts - prefix.len();
        if remaining == 0 {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // Each of the remaining parts is at least 1 and at most `first`.
        let hi = cap.min(left - (remaining as u32 - 1));
        let lo = left.div_ceil(remaining as u32);
        for first in (lo..=hi).rev() {
            prefix.push(first);
            rec(prefix, parts, left - first, first, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && q as usize >= parts {
        rec(&mut Vec::with_capacity(parts), parts, q, q, &mut out);
    }
    out
}

fn grid_spectrum(point: &[u32], q: u32) -> SchmidtSpectrum {
    let probs: Vec<Rational> = point
        .iter()
        .map(|&p| Rational::new(p.into(), q.into()))
        .collect();
    make_spectrum(&probs).expect("grid points sum to q")
}

/// First grid catalyst in enumeration order (ranks ascending, then
/// descending lexicographic), for the `cfg.copies`-fold pair.
pub fn search_catalyst(
    source: &SchmidtSpectrum,
    target: &SchmidtSpectrum,
    cfg: &CatalystSearchConfig,
    limits: Limits,
) -> Result<SearchOutcome> {
    cfg.validate()?;
    let s = tensor_power_capped(source, cfg.copies, limits)?;
    let t = tensor_power_capped(target, cfg.copies, limits)?;
    if cfg.prune_necessary && !extremal_condition(&s, &t) {
        return Ok(SearchOutcome::ExcludedByNecessaryCondition);
    }
    for rank in cfg.dims.clone() {
        let points = grid_points(rank, cfg.grid_q);
        let hit = points.par_iter().find_map_first(|p| {
            let chi = grid_spectrum(p, cfg.grid_q);
            catalyzes(&s, &t, &chi).then_some(chi)
        });
        if let Some(chi) = hit {
            debug_assert_eq!(*chi.dim(), BigUint::from(rank));
            return Ok(SearchOutcome::Found(chi));
        }
    }
    Ok(SearchOutcome::NoneAtResolution { grid_q: cfg.grid_q })
}
