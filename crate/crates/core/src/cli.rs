//! Command implementations behind the `locc-lab` binary. Each command
//! renders its report into a `String`; the binary only prints and maps
//! errors to exit codes.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::Path;

use num_traits::ToPrimitive;

use crate::catalysis::{
    multicopy_elocc_check, search_catalyst, CatalystSearchConfig, SearchOutcome,
};
use crate::error::Error;
use crate::fixtures::{fixture, FIXTURES};
use crate::majorization::{compare, conclusive_pmax, Comparability};
use crate::multicopy::{classify_pair, PmaxScan};
use crate::rational::{format_significant, fraction_string, Rational};
use crate::spectrum::{entropy, Limits, SchmidtSpectrum};
use crate::statefile::{Mode, StateFile};

pub const MEM_CAP_ENV: &str = "LOCC_LAB_MEM_CAP";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Cap(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Cap(m) | CliError::Io(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_cap() {
            CliError::Cap(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct InputOptions {
    pub mode: Mode,
    pub normalize: bool,
}

#[derive(Debug, Clone)]
pub struct LoadedState {
    pub name: String,
    pub spectrum: SchmidtSpectrum,
}

/// Loads a state from a file path, or from a built-in fixture when no such
/// file exists. Fixtures always hold probabilities.
pub fn load_state(arg: &str, opts: InputOptions) -> Result<LoadedState, CliError> {
    let path = Path::new(arg);
    let file = if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
        StateFile::parse(arg, &text, opts.mode)
    } else if let Some(f) = fixture(arg) {
        let text = f.coefficients.join("\n");
        StateFile::parse(f.name, &text, Mode::Probabilities)
    } else {
        return Err(CliError::Input(format!(
            "{arg}: no such file or built-in fixture"
        )));
    };
    let file = file.map_err(|e| CliError::Input(e.to_string()))?;
    let spectrum = file
        .spectrum(opts.normalize)
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(LoadedState {
        name: file.name,
        spectrum,
    })
}

pub fn limits_from_env() -> Result<Limits, CliError> {
    match std::env::var(MEM_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|distinct_cap| Limits { distinct_cap })
            .map_err(|_| {
                CliError::Input(format!("{MEM_CAP_ENV}={v:?} is not a non-negative integer"))
            }),
        Err(_) => Ok(Limits::default()),
    }
}

/// Accepts `LO..HI`, `LO..=HI` or a single rank.
pub fn parse_dims(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("invalid rank range {s:?}, expected LO..HI");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

fn exact_and_decimal(r: &Rational) -> String {
    let exact = r.to_string();
    let decimal = format_significant(r, 4, true);
    if exact == decimal {
        exact
    } else {
        format!("{exact} = {decimal}")
    }
}

pub fn compare_report(a: &LoadedState, b: &LoadedState) -> String {
    let tag = compare(&a.spectrum, &b.spectrum);
    let mut out = if tag == Comparability::Equivalent {
        "Equivalent; p_max = 1".to_string()
    } else {
        format!(
            "{tag}; p_max(A→B) = {}; p_max(B→A) = {}",
            exact_and_decimal(&conclusive_pmax(&a.spectrum, &b.spectrum)),
            exact_and_decimal(&conclusive_pmax(&b.spectrum, &a.spectrum)),
        )
    };
    let _ = write!(
        out,
        "\nA = {} {}\nB = {} {}\n",
        a.name, a.spectrum, b.name, b.spectrum
    );
    out
}

pub fn classify_report(
    a: &LoadedState,
    b: &LoadedState,
    k_max: u32,
    limits: Limits,
) -> Result<String, CliError> {
    let class = classify_pair(&a.spectrum, &b.spectrum, k_max, limits)?;
    Ok(format!("{class}\n"))
}

const CSV_HEADER: &str = "k,pmax_exact,pmax_decimal,decay_bound_exact";

pub fn scan_csv(scan: &PmaxScan) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &scan.rows {
        let bound = row
            .decay_bound
            .as_ref()
            .map(fraction_string)
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.k,
            fraction_string(&row.pmax),
            format_significant(&row.pmax, 15, false),
            bound
        );
    }
    out
}

pub fn scan_table(scan: &PmaxScan) -> String {
    let cells: Vec<[String; 4]> = scan
        .rows
        .iter()
        .map(|r| {
            [
                r.k.to_string(),
                fraction_string(&r.pmax),
                format_significant(&r.pmax, 15, false),
                r.decay_bound
                    .as_ref()
                    .map(fraction_string)
                    .unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    let header = ["k", "p_max (exact)", "p_max (decimal)", "decay bound"];
    let mut widths = header.map(|h| h.chars().count());
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cols: [&str; 4]| {
        let text = cols
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(header);
    for row in &cells {
        line([&row[0], &row[1], &row[2], &row[3]]);
    }
    if let Some(k) = scan.argmax() {
        let _ = writeln!(out, "max p_max at k = {k}");
    }
    out
}

/// Writes `contents` to `path`; `-` means stdout.
pub fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    if path == Path::new("-") {
        print!("{contents}");
        return Ok(());
    }
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn catalyst_check_report(
    a: &LoadedState,
    b: &LoadedState,
    catalyst: &LoadedState,
    copies: u32,
    limits: Limits,
) -> Result<String, CliError> {
    if copies == 0 {
        return Err(CliError::Input("--copies must be at least 1".into()));
    }
    let ok = multicopy_elocc_check(&a.spectrum, &b.spectrum, &catalyst.spectrum, copies, limits)?;
    Ok(format!("{ok}\n"))
}

pub fn catalyst_find_report(
    a: &LoadedState,
    b: &LoadedState,
    cfg: &CatalystSearchConfig,
    limits: Limits,
) -> Result<String, CliError> {
    let outcome = search_catalyst(&a.spectrum, &b.spectrum, cfg, limits)?;
    Ok(match outcome {
        SearchOutcome::Found(chi) => {
            let mut exact = Vec::new();
            let mut decimal = Vec::new();
            for e in chi.entries() {
                for _ in 0..e.multiplicity.to_u64().unwrap_or(0) {
                    exact.push(e.value.to_string());
                    decimal.push(format_significant(&e.value, 4, true));
                }
            }
            format!("catalyst: ({}) = ({})\n", exact.join(", "), decimal.join(", "))
        }
        SearchOutcome::NoneAtResolution { grid_q } => format!("none at resolution 1/{grid_q}\n"),
        SearchOutcome::ExcludedByNecessaryCondition => {
            "none (necessary condition α₁ ≤ β₁ and α_d ≥ β_d fails; no catalyst exists at any resolution)\n".into()
        }
    })
}

pub fn entropy_report(a: &LoadedState) -> String {
    format!("E({}) = {} bits\n", a.name, entropy(&a.spectrum))
}

pub fn fixtures_report() -> String {
    let mut out = String::new();
    for f in FIXTURES {
        let _ = writeln!(
            out,
            "{:<5} ({})  {}",
            f.name,
            f.coefficients.join(", "),
            f.description
        );
    }
    out
}
