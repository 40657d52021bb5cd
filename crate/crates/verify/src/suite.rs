//! Single-configuration verification and the full sweep over minuscule
//! flag varieties.

use std::collections::HashMap;

use lmp_core::analysis::{analyze, Options};
use lmp_core::classify::list_minuscule;
use lmp_core::vanishing::{
    check_certificate_against, coefficient_lower_bound, dijkstra_order, target_weight, EdgeSet,
};
use lmp_core::weyl::longest_element;
use lmp_core::{Family, Root, RootSystem, RootSystemType};
use rayon::prelude::*;

use crate::certfile::CertificateFile;
use crate::error::{Result, VerifyError};
use crate::report::{
    CertificateCheck, Clauses, Config, CrossCheck, Expectation, MinusculeListing, SimpleRootImage,
    SuiteEntry, SuiteReport, TauReport, VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub relaxed_edges: bool,
    pub witnesses: bool,
}

pub fn verify(config: &Config, options: VerifyOptions) -> Result<VerificationReport> {
    let rs = RootSystem::new(config.kind()?)?;
    let analysis = analyze(
        &rs,
        &config.parabolic()?,
        &Options {
            relaxed_edges: options.relaxed_edges,
            ..Options::default()
        },
    )?;
    VerificationReport::from_analysis(&analysis, options.witnesses)
}

pub fn tau_report(config: &Config) -> Result<TauReport> {
    let rs = RootSystem::new(config.kind()?)?;
    let parabolic = config.parabolic()?;
    let tau = longest_element(&rs, &parabolic.retained())?;
    let action = (0..rs.rank())
        .map(|i| {
            let image = tau.act_on_root(&rs, &Root::simple(rs.rank(), i))?;
            Ok(SimpleRootImage {
                simple: i + 1,
                image: image.into_coords(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TauReport {
        config: config.clone(),
        word: tau.letters().iter().map(|l| l + 1).collect(),
        length: tau.len(),
        action,
    })
}

pub fn minuscule_listing(kind: RootSystemType) -> Result<MinusculeListing> {
    let rs = RootSystem::new(kind)?;
    Ok(MinusculeListing {
        family: kind.family().to_string(),
        rank: kind.rank(),
        indices: list_minuscule(&rs).into_iter().map(|d| d + 1).collect(),
    })
}

pub fn check_certificate_file(file: &CertificateFile) -> Result<CertificateCheck> {
    let cert = file.to_certificate()?;
    let rs = RootSystem::new(cert.kind)?;
    let target = target_weight(&rs, &cert.parabolic, cert.d)?;
    let m = dijkstra_order(&rs, &cert.parabolic, cert.d, EdgeSet::Strict)?.cost;
    let c_alpha = coefficient_lower_bound(&rs, &cert.parabolic, cert.d)?;
    let report = check_certificate_against(&rs, &cert, m, c_alpha)?;
    Ok(CertificateCheck {
        config: Config::new(cert.kind, cert.parabolic.omitted_index()?),
        d: file.d,
        target: target.root_coords,
        m_dijkstra: m,
        c_alpha,
        cost: cert.cost(),
        clauses: Clauses::from(&report),
    })
}

fn config(family: Family, rank: usize, parabolic: usize) -> Result<Config> {
    Ok(Config::new(
        RootSystemType::new(family, rank)?,
        parabolic - 1,
    ))
}

/// The configurations swept at a rank ceiling, in report order.
///
/// * `A_n` with every `P_c`; `C_n/P_n`; `D_n` (`n ≥ 4`) with `P_1`, `P_{n−1}`,
///   `P_n`; `E_6` with `P_1`, `P_6`; `E_7/P_7`: identity checked directly.
/// * `B_n/P_n` through `D_{n+1}/P_{n+1}`, and `C_n/P_1` through
///   `A_{2n−1}/P_1`, with the native values reported alongside.
pub fn suite_plan(max_rank: usize) -> Result<Vec<(Config, Expectation)>> {
    let mut plan = Vec::new();
    for n in 1..=max_rank {
        for c in 1..=n {
            plan.push((config(Family::A, n, c)?, Expectation::Identity));
        }
    }
    for n in 2..=max_rank {
        plan.push((
            config(Family::B, n, n)?,
            Expectation::Isomorphic {
                via: config(Family::D, n + 1, n + 1)?,
            },
        ));
    }
    for n in 2..=max_rank {
        plan.push((
            config(Family::C, n, 1)?,
            Expectation::Isomorphic {
                via: config(Family::A, 2 * n - 1, 1)?,
            },
        ));
        plan.push((config(Family::C, n, n)?, Expectation::Identity));
    }
    for n in 4..=max_rank {
        for p in [1, n - 1, n] {
            plan.push((config(Family::D, n, p)?, Expectation::Identity));
        }
    }
    if max_rank >= 6 {
        plan.push((config(Family::E, 6, 1)?, Expectation::Identity));
        plan.push((config(Family::E, 6, 6)?, Expectation::Identity));
    }
    if max_rank >= 7 {
        plan.push((config(Family::E, 7, 7)?, Expectation::Identity));
    }
    Ok(plan)
}

pub fn verify_suite(max_rank: usize, options: VerifyOptions) -> Result<SuiteReport> {
    let plan = suite_plan(max_rank)?;
    let mut all: Vec<(Config, Expectation, bool)> = plan
        .iter()
        .map(|(c, e)| (c.clone(), e.clone(), false))
        .collect();
    for (_, e) in &plan {
        if let Expectation::Isomorphic { via } = e {
            if !all.iter().any(|(c, _, _)| c == via) {
                all.push((via.clone(), Expectation::Identity, true));
            }
        }
    }

    let reports: Vec<VerificationReport> = all
        .par_iter()
        .map(|(c, _, _)| verify(c, options))
        .collect::<Result<Vec<_>>>()?;
    let by_config: HashMap<&Config, &VerificationReport> =
        all.iter().map(|(c, _, _)| c).zip(&reports).collect();

    let direct_ok = |r: &VerificationReport| r.lmp_identity && r.all_agreed;
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for ((c, expectation, auxiliary), report) in all.iter().zip(&reports) {
        let passed = match expectation {
            Expectation::Identity => direct_ok(report),
            Expectation::Isomorphic { via } => {
                report.all_agreed
                    && by_config.get(via).is_some_and(|r| direct_ok(r))
                    && by_config
                        .get(via)
                        .is_some_and(|r| r.dim_gp == report.dim_gp)
            }
        };
        if !passed {
            failures.push(format!(
                "{}: sum m_d = {}, dim G/P = {}, routes agree: {}",
                c.label(),
                report.sum_m,
                report.dim_gp,
                report.all_agreed
            ));
        }
        entries.push(SuiteEntry {
            report: report.clone(),
            expectation: expectation.clone(),
            auxiliary: *auxiliary,
            passed,
        });
    }

    let cross_checks = cross_checks(max_rank, &by_config)?;
    failures.extend(
        cross_checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail)),
    );
    Ok(SuiteReport {
        max_rank,
        all_passed: failures.is_empty(),
        entries,
        cross_checks,
        failures,
    })
}

fn cross_checks(
    max_rank: usize,
    by_config: &HashMap<&Config, &VerificationReport>,
) -> Result<Vec<CrossCheck>> {
    let get = |c: &Config| -> Result<&VerificationReport> {
        by_config
            .get(c)
            .copied()
            .ok_or_else(|| VerifyError::Config(format!("{} missing from the suite", c.label())))
    };
    let mut out = Vec::new();

    for n in 2..=max_rank {
        let b = get(&config(Family::B, n, n)?)?;
        let d = get(&config(Family::D, n + 1, n + 1)?)?;
        let (mb, md) = (b.profile(), d.profile());
        // Spin nodes: B_n's α_n against D_{n+1}'s α_{n+1}.
        let mut expected = md[..n - 1].to_vec();
        expected.push(md[n]);
        let passed = mb == expected && b.dim_gp == d.dim_gp;
        out.push(CrossCheck {
            name: format!("B{n}/P{n} ~ D{}/P{}", n + 1, n + 1),
            passed,
            detail: format!(
                "B profile {mb:?}, D profile {md:?}; dim {} vs {}; native B sum {} vs D sum {}",
                b.dim_gp, d.dim_gp, b.sum_m, d.sum_m
            ),
        });
    }

    for n in 2..=max_rank {
        let c = get(&config(Family::C, n, 1)?)?;
        let a = get(&config(Family::A, 2 * n - 1, 1)?)?;
        let passed = c.dim_gp == a.dim_gp && c.sum_m < c.dim_gp;
        out.push(CrossCheck {
            name: format!("C{n}/P1 ~ A{}/P1", 2 * n - 1),
            passed,
            detail: format!(
                "dim {} vs {}; native C sum {} falls short of dim, projective-space sum {}",
                c.dim_gp, a.dim_gp, c.sum_m, a.sum_m
            ),
        });
    }

    for n in 4..=max_rank {
        let pn = get(&config(Family::D, n, n)?)?.profile();
        let pn1 = get(&config(Family::D, n, n - 1)?)?.profile();
        let split = if n % 2 == 0 {
            (n as u32 / 2 - 1, n as u32 / 2)
        } else {
            ((n as u32 - 1) / 2, (n as u32 - 1) / 2)
        };
        let tail = (pn[n - 2], pn[n - 1]);
        let mut swapped = pn1.clone();
        swapped.swap(n - 2, n - 1);
        let passed = tail == split && tail.0 + tail.1 == n as u32 - 1 && swapped == pn;
        out.push(CrossCheck {
            name: format!("D{n} spin split"),
            passed,
            detail: format!(
                "P{n}: (m_{}, m_{n}) = {tail:?}, expected {split:?}; P{} profile {pn1:?}",
                n - 1,
                n - 1
            ),
        });
    }

    if max_rank >= 6 {
        let p1 = get(&config(Family::E, 6, 1)?)?.profile();
        let p6 = get(&config(Family::E, 6, 6)?)?.profile();
        let sigma = [5, 1, 4, 3, 2, 0];
        let mapped: Vec<u32> = (0..6).map(|k| p1[sigma[k]]).collect();
        out.push(CrossCheck {
            name: "E6 diagram symmetry".into(),
            passed: mapped == p6,
            detail: format!("P1 profile {p1:?}, P6 profile {p6:?}"),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_small() {
        let plan = suite_plan(4).unwrap();
        let labels: Vec<String> = plan.iter().map(|(c, _)| c.label()).collect();
        assert!(labels.contains(&"A4/P2".to_string()));
        assert!(labels.contains(&"B3/P3".to_string()));
        assert!(labels.contains(&"D4/P3".to_string()));
        assert!(!labels.iter().any(|l| l.starts_with('E')));
    }

    #[test]
    fn tau_e6() {
        let t = tau_report(&config(Family::E, 6, 1).unwrap()).unwrap();
        // Levi of type D5 has 20 positive roots.
        assert_eq!(t.length, 20);
        assert_eq!(t.action[0].image, vec![1, 2, 2, 3, 2, 1]);
    }
}
