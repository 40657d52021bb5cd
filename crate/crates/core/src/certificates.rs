//! Explicit root tuples realizing `m_d`.
//!
//! Exceptional tuples are stored in the two-row display used for `E_6` and
//! `E_7` diagrams: the top row lists the coefficients of
//! `(α_1, α_3, α_4, α_5, α_6[, α_7])`, the bottom entry is `α_2`. Classical
//! tuples are generated from `ε`-coordinates.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rootsys::{Family, Parabolic, Root, RootSystem, RootSystemType};
use crate::vanishing::{dijkstra_order, Certificate, CertificateEntry, EdgeSet};

/// Converts an `ε`-combination to simple-root coordinates.
///
/// `A_n` uses `n + 1` coordinates with zero sum; `B_n`, `C_n`, `D_n` use `n`.
pub fn epsilon_to_root(kind: RootSystemType, rs: &RootSystem, expr: &[i64]) -> Result<Root> {
    let n = kind.rank();
    let reject = || Error::NotAnEpsilonRoot(expr.to_vec());
    let expected_len = match kind.family() {
        Family::A => n + 1,
        Family::B | Family::C | Family::D => n,
        _ => {
            return Err(Error::InvalidType {
                family: kind.family(),
                rank: n,
                reason: "no epsilon realization",
            })
        }
    };
    if expr.len() != expected_len {
        return Err(reject());
    }
    let prefix: Vec<i64> = expr
        .iter()
        .scan(0, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect();
    let coords = match kind.family() {
        Family::A => {
            if prefix[n] != 0 {
                return Err(reject());
            }
            prefix[..n].to_vec()
        }
        Family::B => prefix,
        Family::C => {
            let mut c = prefix;
            if c[n - 1] % 2 != 0 {
                return Err(reject());
            }
            c[n - 1] /= 2;
            c
        }
        Family::D => {
            let mut c = prefix.clone();
            let spin_minus = prefix[n - 2] - expr[n - 1];
            let spin_plus = prefix[n - 1];
            if spin_minus % 2 != 0 || spin_plus % 2 != 0 {
                return Err(reject());
            }
            c[n - 2] = spin_minus / 2;
            c[n - 1] = spin_plus / 2;
            c
        }
        _ => unreachable!(),
    };
    if !rs.is_root(&coords) {
        return Err(reject());
    }
    Ok(Root::new(coords))
}

/// `a·ε_i + b·ε_j` with 1-based `i`, `j`, in `len` coordinates.
fn eps(len: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; len];
    for &(i, c) in terms {
        v[i - 1] += c;
    }
    v
}

/// Where a certificate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateSource {
    /// Case-analysis data: embedded exceptional tables or classical formulas.
    Paper,
    /// Read off a shortest extremal ladder.
    Generated,
}

impl CertificateSource {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateSource::Paper => "paper",
            CertificateSource::Generated => "generated",
        }
    }
}

/// The case-analysis certificate for `(G, P, d)`.
///
/// Covered: `A_n` with any `P`, `C_n/P_n`, `D_n` with `P_1`, `P_{n-1}`, `P_n`,
/// `E_6` with `P_1`, `P_6`, and `E_7/P_7`.
pub fn paper_certificate(rs: &RootSystem, parabolic: &Parabolic, d: usize) -> Result<Certificate> {
    let kind = rs.kind();
    let n = kind.rank();
    if d >= n {
        return Err(Error::IndexOutOfRange { index: d, rank: n });
    }
    let p = parabolic.omitted_index()?;
    let roots: Vec<Root> = match (kind.family(), n) {
        (Family::A, _) => type_a(rs, p, d)?,
        (Family::C, _) if p == n - 1 => type_c_pn(rs, d)?,
        (Family::D, _) if n >= 4 && p == 0 => dn_p1(rs, d, d + 1)?,
        (Family::D, _) if n >= 4 && p == n - 1 => type_d_pn(rs, d)?,
        (Family::D, _) if n >= 4 && p == n - 2 => {
            let swap = |k: usize| match k {
                k if k == n - 2 => n - 1,
                k if k == n - 1 => n - 2,
                k => k,
            };
            type_d_pn(rs, swap(d))?
                .into_iter()
                .map(|r| permute(&r, swap))
                .collect()
        }
        (Family::E, 6) if p == 0 => e6_p1(d),
        (Family::E, 6) if p == 5 => {
            let sigma = |k: usize| [5, 1, 4, 3, 2, 0][k];
            e6_p1(sigma(d)).iter().map(|r| permute(r, sigma)).collect()
        }
        (Family::E, 7) if p == 6 => e7_p7(d),
        _ => return Err(Error::NoPaperCertificate),
    };
    Ok(Certificate {
        kind,
        parabolic: parabolic.clone(),
        d,
        entries: roots
            .into_iter()
            .map(|r| CertificateEntry::new(r, 1))
            .collect(),
    })
}

/// Applies a diagram automorphism `k ↦ sigma(k)` to root coordinates.
fn permute(root: &Root, sigma: impl Fn(usize) -> usize) -> Root {
    let c = root.coords();
    let mut out = vec![0; c.len()];
    for (k, &x) in c.iter().enumerate() {
        out[sigma(k)] = x;
    }
    Root::new(out)
}

/// `SL(N)/P_c` with `N = n + 1`; the `d`-tuple (or `c`-tuple) of roots
/// `ε_i − ε_j` pairing the first `c` coordinates against the last `N − c`.
fn type_a(rs: &RootSystem, p: usize, d: usize) -> Result<Vec<Root>> {
    let n = rs.rank();
    let big_n = n + 1;
    let (c1, d1) = (p + 1, d + 1);
    if c1 > big_n - c1 {
        // Reverse the diagram: P_c ↔ P_{N−c}.
        let rev = |k: usize| n - 1 - k;
        return Ok(type_a(rs, rev(p), rev(d))?
            .into_iter()
            .map(|r| permute(&r, rev))
            .collect());
    }
    let pairs: Vec<(usize, usize)> = if d1 < c1 {
        (1..=d1).map(|i| (i, c1 + d1 + 1 - i)).collect()
    } else if d1 <= big_n - c1 {
        (1..=c1).map(|i| (i, d1 + c1 + 1 - i)).collect()
    } else {
        (1..=big_n - d1).map(|i| (c1 + 1 - i, d1 + i)).collect()
    };
    pairs
        .into_iter()
        .map(|(i, j)| epsilon_to_root(rs.kind(), rs, &eps(big_n, &[(i, 1), (j, -1)])))
        .collect()
}

/// `Sp(2n)/P_n`: `ε_i + ε_{n+1−i}` pairs, then `2ε_j` in the middle.
fn type_c_pn(rs: &RootSystem, d: usize) -> Result<Vec<Root>> {
    let n = rs.rank();
    let d1 = d + 1;
    let mut terms: Vec<Vec<i64>> = Vec::new();
    if d1 < n + 1 - d1 {
        terms.extend((1..=d1).map(|i| eps(n, &[(i, 1), (n + 1 - i, 1)])));
    } else {
        terms.extend((1..=n - d1).map(|i| eps(n, &[(i, 1), (n + 1 - i, 1)])));
        terms.extend((n - d1 + 1..=d1).map(|j| eps(n, &[(j, 2)])));
    }
    terms
        .iter()
        .map(|e| epsilon_to_root(rs.kind(), rs, e))
        .collect()
}

/// `SO(2n)/P_1` with the pair `{ε_1 − ε_j, ε_1 + ε_j}` for `d ≤ n − 2`
/// (`j` is 1-based, `d + 1 < j ≤ n`), and single roots for the spin indices.
pub fn dn_p1(rs: &RootSystem, d: usize, j: usize) -> Result<Vec<Root>> {
    let n = rs.rank();
    let d1 = d + 1;
    let kind = rs.kind();
    if kind.family() != Family::D {
        return Err(Error::NoPaperCertificate);
    }
    let terms: Vec<Vec<i64>> = if d1 <= n - 2 {
        let j = j.max(d1 + 1);
        if j > n {
            return Err(Error::IndexOutOfRange { index: j, rank: n });
        }
        vec![eps(n, &[(1, 1), (j, -1)]), eps(n, &[(1, 1), (j, 1)])]
    } else if d1 == n - 1 {
        vec![eps(n, &[(1, 1), (n, -1)])]
    } else {
        vec![eps(n, &[(1, 1), (n, 1)])]
    };
    terms.iter().map(|e| epsilon_to_root(kind, rs, e)).collect()
}

/// `SO(2n)/P_n`.
fn type_d_pn(rs: &RootSystem, d: usize) -> Result<Vec<Root>> {
    let n = rs.rank();
    let d1 = d + 1;
    let pairs: Vec<(usize, usize)> = if d1 <= n - 2 {
        if d1 < n + 1 - d1 {
            (1..=d1).map(|i| (i, n + 1 - i)).collect()
        } else {
            (1..=d1).map(|i| (i, n - d1 + i)).collect()
        }
    } else if d1 == n - 1 {
        if n.is_multiple_of(2) {
            (2..=n / 2).map(|i| (i, n + 1 - i)).collect()
        } else {
            (1..=(n - 1) / 2).map(|i| (i, n - i)).collect()
        }
    } else if n.is_multiple_of(2) {
        (1..=n / 2).map(|i| (i, n + 1 - i)).collect()
    } else {
        (2..=n.div_ceil(2)).map(|i| (i, n + 2 - i)).collect()
    };
    pairs
        .into_iter()
        .map(|(i, j)| epsilon_to_root(rs.kind(), rs, &eps(n, &[(i, 1), (j, 1)])))
        .collect()
}

/// Two-row display `(top, bottom)` to Bourbaki coordinates.
fn display(top: &[i64], bottom: i64) -> Root {
    let mut c = vec![top[0], bottom];
    c.extend_from_slice(&top[1..]);
    Root::new(c)
}

type Display6 = ([i64; 5], i64);
type Display7 = ([i64; 6], i64);

const E6_P1: [&[Display6]; 6] = [
    &[([1, 1, 1, 0, 0], 0), ([1, 1, 1, 1, 0], 1)],
    &[([1, 1, 2, 2, 1], 1), ([1, 1, 1, 0, 0], 1)],
    &[
        ([1, 1, 1, 1, 1], 0),
        ([1, 2, 2, 1, 0], 1),
        ([1, 1, 1, 0, 0], 1),
    ],
    &[
        ([1, 2, 2, 2, 1], 1),
        ([1, 1, 2, 1, 0], 1),
        ([1, 1, 1, 1, 1], 1),
        ([1, 1, 1, 0, 0], 0),
    ],
    &[
        ([1, 2, 3, 2, 1], 1),
        ([1, 1, 1, 1, 0], 0),
        ([1, 1, 1, 1, 1], 1),
    ],
    &[([1, 1, 1, 1, 1], 0), ([1, 2, 3, 2, 1], 2)],
];

const E7_P7: [&[Display7]; 7] = [
    &[([1, 2, 3, 2, 1, 1], 2), ([1, 1, 1, 1, 1, 1], 0)],
    &[
        ([0, 1, 2, 2, 1, 1], 1),
        ([1, 1, 1, 1, 1, 1], 1),
        ([1, 2, 3, 2, 2, 1], 1),
    ],
    &[
        ([1, 2, 3, 2, 2, 1], 1),
        ([1, 2, 2, 2, 1, 1], 1),
        ([1, 1, 1, 1, 1, 1], 1),
        ([0, 1, 2, 1, 1, 1], 1),
    ],
    &[
        ([1, 2, 3, 3, 2, 1], 1),
        ([1, 2, 2, 2, 2, 1], 1),
        ([0, 1, 2, 2, 1, 1], 1),
        ([1, 2, 2, 1, 1, 1], 1),
        ([1, 1, 2, 1, 1, 1], 1),
        ([0, 0, 1, 1, 1, 1], 1),
    ],
    &[
        ([1, 2, 3, 3, 2, 1], 1),
        ([0, 1, 2, 2, 1, 1], 1),
        ([0, 1, 1, 1, 1, 1], 1),
        ([1, 1, 2, 2, 2, 1], 1),
        ([1, 1, 2, 1, 1, 1], 1),
    ],
    &[
        ([1, 2, 3, 2, 2, 1], 1),
        ([1, 1, 2, 2, 1, 1], 1),
        ([0, 1, 2, 2, 2, 1], 1),
        ([0, 1, 1, 1, 1, 1], 1),
    ],
    &[
        ([0, 1, 2, 2, 2, 1], 1),
        ([1, 2, 2, 2, 1, 1], 1),
        ([1, 1, 2, 1, 1, 1], 1),
    ],
];

fn e6_p1(d: usize) -> Vec<Root> {
    E6_P1[d].iter().map(|(t, b)| display(t, *b)).collect()
}

fn e7_p7(d: usize) -> Vec<Root> {
    E7_P7[d].iter().map(|(t, b)| display(t, *b)).collect()
}

/// A certificate read off the lexicographically least shortest ladder,
/// merging repeated roots into multiplicities.
pub fn generated_certificate(
    rs: &RootSystem,
    parabolic: &Parabolic,
    d: usize,
) -> Result<Certificate> {
    let path = dijkstra_order(rs, parabolic, d, EdgeSet::Strict)?;
    let mut entries: Vec<CertificateEntry> = Vec::new();
    for step in path.steps {
        match entries.iter_mut().find(|e| e.root == step.root) {
            Some(e) => e.multiplicity += step.multiplicity as u32,
            None => entries.push(CertificateEntry::new(step.root, step.multiplicity as u32)),
        }
    }
    Ok(Certificate {
        kind: rs.kind(),
        parabolic: parabolic.clone(),
        d,
        entries,
    })
}

/// The case-analysis certificate when one exists, otherwise a generated one.
pub fn certificate(
    rs: &RootSystem,
    parabolic: &Parabolic,
    d: usize,
) -> Result<(Certificate, CertificateSource)> {
    match paper_certificate(rs, parabolic, d) {
        Ok(c) => Ok((c, CertificateSource::Paper)),
        Err(Error::NoPaperCertificate) => Ok((
            generated_certificate(rs, parabolic, d)?,
            CertificateSource::Generated,
        )),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vanishing::{check_certificate, target_weight};
    use alloc::format;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name.parse().unwrap()).unwrap()
    }

    fn p(rank: usize, d: usize) -> Parabolic {
        Parabolic::maximal(rank, d).unwrap()
    }

    #[test]
    fn epsilon_examples() {
        let a3 = rs("A3");
        assert_eq!(
            epsilon_to_root(a3.kind(), &a3, &[1, -1, 0, 0])
                .unwrap()
                .coords(),
            &[1, 0, 0]
        );
        let d5 = rs("D5");
        assert_eq!(
            epsilon_to_root(d5.kind(), &d5, &[1, 0, 0, 0, 1])
                .unwrap()
                .coords(),
            &[1, 1, 1, 0, 1]
        );
        let c4 = rs("C4");
        assert_eq!(
            epsilon_to_root(c4.kind(), &c4, &[0, 2, 0, 0])
                .unwrap()
                .coords(),
            &[0, 2, 2, 1]
        );
        let b3 = rs("B3");
        assert_eq!(
            epsilon_to_root(b3.kind(), &b3, &[0, 1, 0])
                .unwrap()
                .coords(),
            &[0, 1, 1]
        );
    }

    #[test]
    fn epsilon_rejections() {
        let d4 = rs("D4");
        assert!(epsilon_to_root(d4.kind(), &d4, &[2, 0, 0, 0]).is_err());
        assert!(epsilon_to_root(d4.kind(), &d4, &[1, 0, 0, 0]).is_err());
        let c3 = rs("C3");
        assert!(epsilon_to_root(c3.kind(), &c3, &[1, 0, 0]).is_err());
        let a2 = rs("A2");
        assert!(epsilon_to_root(a2.kind(), &a2, &[1, 1, 0]).is_err());
        assert!(epsilon_to_root(a2.kind(), &a2, &[1, -1]).is_err());
        let e6 = rs("E6");
        assert!(epsilon_to_root(e6.kind(), &e6, &[1, 0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn e7_case7_data() {
        let e7 = rs("E7");
        let cert = paper_certificate(&e7, &p(7, 6), 6).unwrap();
        let coords: Vec<&[i64]> = cert.entries.iter().map(|e| e.root.coords()).collect();
        assert_eq!(
            coords,
            vec![
                &[0, 1, 1, 2, 2, 2, 1][..],
                &[1, 1, 2, 2, 2, 1, 1][..],
                &[1, 1, 1, 2, 1, 1, 1][..],
            ]
        );
    }

    #[test]
    fn exceptional_data_sums_to_target() {
        for (name, pd) in [("E6", 0), ("E6", 5), ("E7", 6)] {
            let g = rs(name);
            let n = g.rank();
            for d in 0..n {
                let cert = paper_certificate(&g, &p(n, pd), d).unwrap();
                let mut sum = vec![0; n];
                for e in &cert.entries {
                    assert!(g.positive_index(e.root.coords()).is_some(), "{name} d={d}");
                    for (s, c) in sum.iter_mut().zip(e.root.coords()) {
                        *s += c;
                    }
                }
                let target = target_weight(&g, &p(n, pd), d).unwrap();
                assert_eq!(sum, target.root_coords, "{name}/P{} d={}", pd + 1, d + 1);
            }
        }
    }

    #[test]
    fn small_classical_certificates_pass() {
        for (name, pd) in [
            ("A4", 1),
            ("A5", 3),
            ("C4", 3),
            ("D5", 0),
            ("D5", 4),
            ("D6", 4),
        ] {
            let g = rs(name);
            let n = g.rank();
            for d in 0..n {
                let cert = paper_certificate(&g, &p(n, pd), d).unwrap();
                let report = check_certificate(&g, &cert).unwrap();
                assert!(
                    report.passed(),
                    "{name}/P{} d={}: {report:?}",
                    pd + 1,
                    d + 1
                );
            }
        }
    }

    #[test]
    fn uncovered_configurations() {
        let b3 = rs("B3");
        assert_eq!(
            paper_certificate(&b3, &p(3, 2), 0),
            Err(Error::NoPaperCertificate)
        );
        let e8 = rs("E8");
        assert_eq!(
            paper_certificate(&e8, &p(8, 0), 0),
            Err(Error::NoPaperCertificate)
        );
        let c3 = rs("C3");
        assert_eq!(
            paper_certificate(&c3, &p(3, 0), 0),
            Err(Error::NoPaperCertificate)
        );
    }

    #[test]
    fn generated_b_certificates_pass() {
        for n in 2..=5 {
            let b = rs(&format!("B{n}"));
            for d in 0..n {
                let (cert, source) = certificate(&b, &p(n, n - 1), d).unwrap();
                assert_eq!(source, CertificateSource::Generated);
                let report = check_certificate(&b, &cert).unwrap();
                assert!(report.passed(), "B{n} d={}: {report:?}", d + 1);
            }
        }
    }
}
