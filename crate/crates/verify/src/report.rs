//! Serializable reports. Field names are the stable JSON interface; indices
//! are 1-based and vectors are in Bourbaki order.

use lmp_core::analysis::{CheckedCertificate, ConfigAnalysis, VanishingResult};
use lmp_core::vanishing::{CertificateFailure, CertificateReport, ExtremalPath};
use lmp_core::{Parabolic, RootSystemType};
use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Config {
    pub family: String,
    pub rank: usize,
    /// Omitted simple root of the maximal parabolic.
    pub parabolic: usize,
}

impl Config {
    pub fn new(kind: RootSystemType, omitted: usize) -> Self {
        Self {
            family: kind.family().to_string(),
            rank: kind.rank(),
            parabolic: omitted + 1,
        }
    }

    pub fn kind(&self) -> Result<RootSystemType> {
        Ok(RootSystemType::new(self.family.parse()?, self.rank)?)
    }

    pub fn parabolic(&self) -> Result<Parabolic> {
        if self.parabolic == 0 || self.parabolic > self.rank {
            return Err(VerifyError::Config(format!(
                "parabolic index {} out of range 1..={}",
                self.parabolic, self.rank
            )));
        }
        Ok(Parabolic::maximal(self.rank, self.parabolic - 1)?)
    }

    pub fn label(&self) -> String {
        format!("{}{}/P{}", self.family, self.rank, self.parabolic)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub root_coords: Vec<i64>,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessStep {
    pub root_coords: Vec<i64>,
    pub multiplicity: i64,
    /// Weights in fundamental coordinates.
    pub from: Vec<i64>,
    pub to: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseOutcome {
    pub passed: bool,
    pub detail: Option<String>,
}

impl ClauseOutcome {
    fn from_result<T>(r: &Result<T, CertificateFailure>) -> Self {
        match r {
            Ok(_) => Self {
                passed: true,
                detail: None,
            },
            Err(f) => Self {
                passed: false,
                detail: Some(describe_failure(f)),
            },
        }
    }
}

pub fn describe_failure(f: &CertificateFailure) -> String {
    let vec = |v: &[i64]| format!("{v:?}");
    match f {
        CertificateFailure::Skipped => "not evaluated".into(),
        CertificateFailure::WrongSystem { expected, found } => {
            format!("certificate is for {found}, expected {expected}")
        }
        CertificateFailure::Empty => "no entries".into(),
        CertificateFailure::NotAPositiveRoot { entry, coords } => {
            format!("entry {} {} is not a positive root", entry + 1, vec(coords))
        }
        CertificateFailure::InLevi { entry, coords } => {
            format!(
                "entry {} {} lies in the Levi of P_d",
                entry + 1,
                vec(coords)
            )
        }
        CertificateFailure::ZeroMultiplicity { entry } => {
            format!("entry {} has multiplicity 0", entry + 1)
        }
        CertificateFailure::RepeatedRoot { first, second } => {
            format!("entries {} and {} repeat a root", first + 1, second + 1)
        }
        CertificateFailure::SumMismatch { expected, actual } => {
            format!("sum is {}, target is {}", vec(actual), vec(expected))
        }
        CertificateFailure::NotCommuting { first, second } => {
            format!("entries {} and {} sum to a root", first + 1, second + 1)
        }
        CertificateFailure::NoLadder {
            start,
            reached_depth,
        } => format!(
            "no ordering gives an extremal ladder from {} (longest partial ladder {})",
            vec(start),
            reached_depth
        ),
        CertificateFailure::CostMismatch {
            cost,
            coefficient_bound,
            dijkstra,
        } => format!(
            "cost {cost}, coefficient bound {}, shortest ladder {dijkstra}",
            coefficient_bound.map_or("n/a".into(), |c| c.to_string())
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clauses {
    pub well_formed: ClauseOutcome,
    pub a_sum: ClauseOutcome,
    pub b_commuting: ClauseOutcome,
    pub c_ladder: ClauseOutcome,
    pub d_minimal: ClauseOutcome,
    /// Informational: pairwise orthogonality of the roots.
    pub orthogonal: bool,
    /// Entry numbers in a valid ladder order.
    pub ladder_order: Option<Vec<usize>>,
    pub passed: bool,
}

impl From<&CertificateReport> for Clauses {
    fn from(r: &CertificateReport) -> Self {
        Self {
            well_formed: ClauseOutcome::from_result(&r.well_formed),
            a_sum: ClauseOutcome::from_result(&r.sum),
            b_commuting: ClauseOutcome::from_result(&r.commuting),
            c_ladder: ClauseOutcome::from_result(&r.ladder),
            d_minimal: ClauseOutcome::from_result(&r.minimal),
            orthogonal: r.orthogonal,
            ladder_order: r
                .ladder
                .as_ref()
                .ok()
                .map(|o| o.iter().map(|j| j + 1).collect()),
            passed: r.passed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEcho {
    pub source: String,
    pub cost: u32,
    pub entries: Vec<RootEntry>,
    pub clauses: Clauses,
}

impl From<&CheckedCertificate> for CertificateEcho {
    fn from(c: &CheckedCertificate) -> Self {
        Self {
            source: c.source.as_str().to_string(),
            cost: c.certificate.cost(),
            entries: c
                .certificate
                .entries
                .iter()
                .map(|e| RootEntry {
                    root_coords: e.root.coords().to_vec(),
                    multiplicity: e.multiplicity,
                })
                .collect(),
            clauses: Clauses::from(&c.report),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub d: usize,
    /// `ω_d + τ(i(ω_d))` in simple-root coordinates.
    pub target: Vec<i64>,
    pub m_dijkstra: u32,
    pub m_relaxed: Option<u32>,
    pub m_lattice_lb: Option<u32>,
    pub c_alpha: Option<u32>,
    pub certificate_cost: Option<u32>,
    pub agreed: bool,
    pub certificate: Option<CertificateEcho>,
    pub witness: Option<Vec<WitnessStep>>,
}

fn witness_steps(path: &ExtremalPath) -> Vec<WitnessStep> {
    path.steps
        .iter()
        .map(|s| WitnessStep {
            root_coords: s.root.coords().to_vec(),
            multiplicity: s.multiplicity,
            from: s.from.coords().to_vec(),
            to: s.to.coords().to_vec(),
        })
        .collect()
}

impl Row {
    pub fn from_result(r: &VanishingResult, with_witness: bool) -> Self {
        Self {
            d: r.d + 1,
            target: r.target.clone(),
            m_dijkstra: r.m_dijkstra,
            m_relaxed: r.m_relaxed,
            m_lattice_lb: r.m_lattice_lb,
            c_alpha: r.c_alpha,
            certificate_cost: r.certificate_cost(),
            agreed: r.agreed(),
            certificate: r.certificate.as_ref().map(CertificateEcho::from),
            witness: with_witness.then(|| witness_steps(&r.witness)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: Config,
    pub minuscule: bool,
    pub rows: Vec<Row>,
    pub sum_m: u32,
    pub dim_gp: u32,
    pub lmp_identity: bool,
    pub all_agreed: bool,
}

impl VerificationReport {
    pub fn from_analysis(a: &ConfigAnalysis, with_witness: bool) -> Result<Self> {
        let omitted = a.parabolic.omitted_index()?;
        Ok(Self {
            config: Config::new(a.kind, omitted),
            minuscule: a.minuscule,
            rows: a
                .rows
                .iter()
                .map(|r| Row::from_result(r, with_witness))
                .collect(),
            sum_m: a.sum_m,
            dim_gp: a.dim_gp,
            lmp_identity: a.lmp_identity(),
            all_agreed: a.all_agreed(),
        })
    }

    pub fn profile(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.m_dijkstra).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleRootImage {
    pub simple: usize,
    pub image: Vec<i64>,
}

/// `τ` for a parabolic: its reduced word and action on simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauReport {
    pub config: Config,
    /// Letters applied right to left.
    pub word: Vec<usize>,
    pub length: usize,
    pub action: Vec<SimpleRootImage>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinusculeListing {
    pub family: String,
    pub rank: usize,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub config: Config,
    pub d: usize,
    pub target: Vec<i64>,
    pub m_dijkstra: u32,
    pub c_alpha: Option<u32>,
    pub cost: u32,
    pub clauses: Clauses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expectation {
    /// `Σ m_d = dim G/P` computed directly, with every route agreeing.
    Identity,
    /// The identity is established on an isomorphic variety; the native
    /// computation is reported alongside.
    Isomorphic { via: Config },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub report: VerificationReport,
    pub expectation: Expectation,
    /// Computed only as the target of an isomorphism.
    pub auxiliary: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub max_rank: usize,
    pub entries: Vec<SuiteEntry>,
    pub cross_checks: Vec<CrossCheck>,
    pub failures: Vec<String>,
    pub all_passed: bool,
}
