//! Built-in example states. Coefficients are Schmidt probabilities written
//! exactly as decimal strings; they are parsed exactly on use.

use crate::error::Result;
use crate::rational::{parse_decimal, Rational};
use crate::spectrum::{make_spectrum, SchmidtSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub coefficients: &'static [&'static str],
    pub description: &'static str,
}

impl Fixture {
    pub fn probabilities(&self) -> Vec<Rational> {
        self.coefficients
            .iter()
            .map(|c| parse_decimal(c).expect("fixture coefficients are valid decimals"))
            .collect()
    }

    pub fn spectrum(&self) -> Result<SchmidtSpectrum> {
        make_spectrum(&self.probabilities())
    }
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "eq2",
        coefficients: &["0.4", "0.36", "0.14", "0.1"],
        description: "4x4 source; incomparable with eq3 at one copy, deterministic at two",
    },
    Fixture {
        name: "eq3",
        coefficients: &["0.5", "0.25", "0.25"],
        description: "3x3 target paired with eq2",
    },
    Fixture {
        name: "eq4",
        coefficients: &[
            ".16", ".144", ".144", ".1296", ".056", ".056", ".0504", ".0504", ".04", ".04", ".036",
            ".036", ".0196", ".014", ".014", ".001",
        ],
        description:
            "two-copy spectrum of eq2 with a known typo kept verbatim (last entry should read .01; sums to 0.991)",
    },
    Fixture {
        name: "eq5",
        coefficients: &[
            ".25", ".125", ".125", ".125", ".125", ".0625", ".0625", ".0625", ".0625", "0", "0",
            "0", "0", "0", "0", "0",
        ],
        description: "two-copy spectrum of eq3, zero-padded to 16 entries",
    },
    Fixture {
        name: "eq6",
        coefficients: &["0.4", "0.4", "0.1", "0.1"],
        description: "source of a 2-copy LOCC incomparable pair with eq7",
    },
    Fixture {
        name: "eq7",
        coefficients: &["0.5", "0.27", "0.23"],
        description: "target paired with eq6; deterministic at three copies",
    },
    Fixture {
        name: "eq8",
        coefficients: &["0.4", "0.4", "0.1", "0.1"],
        description: "source of a 5-copy LOCC incomparable pair with eq9",
    },
    Fixture {
        name: "eq9",
        coefficients: &["0.48", "0.27", "0.25"],
        description: "target paired with eq8; deterministic at six copies",
    },
    Fixture {
        name: "eq12",
        coefficients: &["0.4", "0.4", "0.2"],
        description: "3x3 state strongly incomparable with eq13, higher entropy",
    },
    Fixture {
        name: "eq13",
        coefficients: &["0.5", "0.25", "0.25"],
        description: "3x3 state strongly incomparable with eq12",
    },
    Fixture {
        name: "chi",
        coefficients: &["0.6", "0.4"],
        description: "two-level catalyst for the eq2 -> eq3 conversion",
    },
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
