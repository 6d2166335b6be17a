//! Norm-generic orthogonality deciders.

mod bj;
mod iso;
mod roberts;
mod si;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::C64;

pub use bj::{bj_check, xplus_xminus, XReport};
pub use iso::iso_check;
pub use roberts::{roberts_check, roberts_check_with_probes, ROBERTS_COMPLEX_GRID, ROBERTS_REAL_GRID};
pub use si::{bj_from_si, iso_from_double_bj, si_check, si_check_depth, DEFAULT_SI_DEPTH};

/// Margins below −`INCONCLUSIVE_FACTOR`·band are decisive failures.
pub const INCONCLUSIVE_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    BirkhoffJames,
    Isosceles,
    Roberts,
    ROrthogonal,
    StrongIsosceles,
    XPlus,
    XMinus,
    DisjointSupport,
}

impl Relation {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::BirkhoffJames => "bj",
            Relation::Isosceles => "iso",
            Relation::Roberts => "roberts",
            Relation::ROrthogonal => "r-orth",
            Relation::StrongIsosceles => "si",
            Relation::XPlus => "x-plus",
            Relation::XMinus => "x-minus",
            Relation::DisjointSupport => "disjoint",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Holds,
    Fails,
    Inconclusive,
}

impl Decision {
    pub fn name(&self) -> &'static str {
        match self {
            Decision::Holds => "holds",
            Decision::Fails => "fails",
            Decision::Inconclusive => "inconclusive",
        }
    }

    /// Both decisive and different.
    pub fn contradicts(self, other: Decision) -> bool {
        matches!(
            (self, other),
            (Decision::Holds, Decision::Fails) | (Decision::Fails, Decision::Holds)
        )
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How much a `Holds` verdict is worth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Confidence {
    /// Decided by a convergent minimization or closed-form comparison.
    Exact,
    /// Universal claim checked on a finite grid of this many points.
    Grid { points: usize },
    /// Existential sequence found down to this dyadic depth.
    Depth { depth: u32 },
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Evidence {
    /// Minimizing or violating scalar.
    pub lambda: Option<C64>,
    /// Objective value at `lambda`.
    pub value: Option<f64>,
    pub witness: Option<Vec<C64>>,
    /// Strong isosceles sequence, in units of the original y.
    pub roots: Vec<f64>,
    pub quantities: Vec<(&'static str, f64)>,
}

impl Evidence {
    pub fn quantity(&self, name: &str) -> Option<f64> {
        self.quantities.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

/// Outcome of an orthogonality query.
///
/// `margin` is signed: nonnegative values (within `band`) mean the relation
/// holds, values below `-10·band` mean it decisively fails.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthReport {
    pub relation: Relation,
    pub decision: Decision,
    pub margin: f64,
    pub band: f64,
    pub evidence: Evidence,
    pub confidence: Confidence,
    pub trivial: bool,
    pub notes: Vec<String>,
}

impl OrthReport {
    pub fn from_margin(relation: Relation, margin: f64, band: f64) -> OrthReport {
        OrthReport {
            relation,
            decision: classify(margin, band),
            margin,
            band,
            evidence: Evidence::default(),
            confidence: Confidence::Exact,
            trivial: false,
            notes: Vec::new(),
        }
    }

    pub fn trivially_holds(relation: Relation) -> OrthReport {
        OrthReport { trivial: true, ..OrthReport::from_margin(relation, 0.0, 0.0) }
    }

    pub fn holds(&self) -> bool {
        self.decision == Decision::Holds
    }

    pub fn fails(&self) -> bool {
        self.decision == Decision::Fails
    }

    /// Holds with the margin clear of the band.
    pub fn decisively_holds(&self) -> bool {
        self.holds() && self.margin > self.band
    }
}

/// Three-valued decision from a signed margin and tolerance band.
pub fn classify(margin: f64, band: f64) -> Decision {
    if margin >= -band {
        Decision::Holds
    } else if margin < -INCONCLUSIVE_FACTOR * band {
        Decision::Fails
    } else {
        Decision::Inconclusive
    }
}
