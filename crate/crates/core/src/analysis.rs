//! Per-configuration profiles: every route to `m_d` for each `d`, and the
//! identity `Σ m_d = dim G/P`.

use alloc::vec::Vec;

use crate::certificates::{certificate, CertificateSource};
use crate::classify::{dim_gp, is_minuscule};
use crate::error::Result;
use crate::rootsys::{Parabolic, RootSystem, RootSystemType};
use crate::vanishing::{
    allowed_roots, check_certificate_against, coefficient_lower_bound, ladder_search,
    lattice_lower_bound, target_weight, Certificate, CertificateReport, EdgeSet, ExtremalPath,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Also compute the ladder value with every positive root allowed.
    pub relaxed_edges: bool,
    pub lattice: bool,
    pub certificates: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            relaxed_edges: false,
            lattice: true,
            certificates: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedCertificate {
    pub certificate: Certificate,
    pub source: CertificateSource,
    pub report: CertificateReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingResult {
    pub d: usize,
    /// `ω_d + τ(i(ω_d))` in simple-root coordinates.
    pub target: Vec<i64>,
    pub m_dijkstra: u32,
    pub m_relaxed: Option<u32>,
    /// `None` when not computed or infeasible.
    pub m_lattice_lb: Option<u32>,
    /// `None` when no distinguished root is declared.
    pub c_alpha: Option<u32>,
    pub certificate: Option<CheckedCertificate>,
    pub witness: ExtremalPath,
}

impl VanishingResult {
    pub fn certificate_cost(&self) -> Option<u32> {
        self.certificate.as_ref().map(|c| c.certificate.cost())
    }

    /// Every computed route equals `m_dijkstra` and the certificate, if any,
    /// passes.
    pub fn agreed(&self) -> bool {
        let m = self.m_dijkstra;
        [self.m_lattice_lb, self.c_alpha, self.certificate_cost()]
            .into_iter()
            .flatten()
            .all(|v| v == m)
            && self.certificate.as_ref().is_none_or(|c| c.report.passed())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigAnalysis {
    pub kind: RootSystemType,
    pub parabolic: Parabolic,
    /// `P` is maximal and its omitted fundamental weight is minuscule.
    pub minuscule: bool,
    pub rows: Vec<VanishingResult>,
    pub sum_m: u32,
    pub dim_gp: u32,
}

impl ConfigAnalysis {
    pub fn profile(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.m_dijkstra).collect()
    }

    pub fn lmp_identity(&self) -> bool {
        self.sum_m == self.dim_gp
    }

    pub fn all_agreed(&self) -> bool {
        self.rows.iter().all(VanishingResult::agreed)
    }
}

pub fn analyze_row(
    rs: &RootSystem,
    parabolic: &Parabolic,
    d: usize,
    options: &Options,
) -> Result<VanishingResult> {
    let target = target_weight(rs, parabolic, d)?;
    let search = |edges| {
        ladder_search(
            rs,
            &allowed_roots(rs, d, edges),
            &target.source,
            &target.sink,
        )
    };
    let witness = search(EdgeSet::Strict)?;
    let m_relaxed = if options.relaxed_edges {
        Some(search(EdgeSet::Relaxed)?.cost)
    } else {
        None
    };
    let m_lattice_lb = if options.lattice {
        lattice_lower_bound(rs, parabolic, d)?.value()
    } else {
        None
    };
    let c_alpha = coefficient_lower_bound(rs, parabolic, d)?;
    let certificate = if options.certificates {
        let (cert, source) = certificate(rs, parabolic, d)?;
        let report = check_certificate_against(rs, &cert, witness.cost, c_alpha)?;
        Some(CheckedCertificate {
            certificate: cert,
            source,
            report,
        })
    } else {
        None
    };
    Ok(VanishingResult {
        d,
        target: target.root_coords,
        m_dijkstra: witness.cost,
        m_relaxed,
        m_lattice_lb,
        c_alpha,
        certificate,
        witness,
    })
}

pub fn analyze(
    rs: &RootSystem,
    parabolic: &Parabolic,
    options: &Options,
) -> Result<ConfigAnalysis> {
    let rows = (0..rs.rank())
        .map(|d| analyze_row(rs, parabolic, d, options))
        .collect::<Result<Vec<_>>>()?;
    let minuscule = match parabolic.omitted_index() {
        Ok(p) => is_minuscule(rs, p)?,
        Err(_) => false,
    };
    Ok(ConfigAnalysis {
        kind: rs.kind(),
        parabolic: parabolic.clone(),
        minuscule,
        sum_m: rows.iter().map(|r| r.m_dijkstra).sum(),
        dim_gp: dim_gp(rs, parabolic) as u32,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn e6_profile() {
        let e6 = RootSystem::new("E6".parse().unwrap()).unwrap();
        let a = analyze(&e6, &Parabolic::maximal(6, 0).unwrap(), &Options::default()).unwrap();
        assert!(a.minuscule);
        assert_eq!(a.profile(), vec![2, 2, 3, 4, 3, 2]);
        assert_eq!((a.sum_m, a.dim_gp), (16, 16));
        assert!(a.lmp_identity());
        assert!(a.all_agreed(), "{:?}", a.rows);
    }

    #[test]
    fn c3_p1_is_short() {
        let c3 = RootSystem::new("C3".parse().unwrap()).unwrap();
        let a = analyze(&c3, &Parabolic::maximal(3, 0).unwrap(), &Options::default()).unwrap();
        assert!(a.minuscule);
        assert_eq!(a.profile(), vec![1, 1, 1]);
        assert_eq!(a.dim_gp, 5);
        assert!(!a.lmp_identity());
    }
}
