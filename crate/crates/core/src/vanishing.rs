//! Vanishing orders `m_d` and the routes that bound or realize them.
//!
//! * [`dijkstra_order`]: cheapest ladder of reflections `χ → χ − rβ`,
//!   `r = ⟨χ, β∨⟩ ≥ 1`, through the extremal weights of `V(i(ω_d))`, from
//!   `τ(i(ω_d))` to `−ω_d`. Each step costs `r`.
//! * [`lattice_lower_bound`]: fewest roots summing to the target, ignoring
//!   the extremal-weight constraint.
//! * [`coefficient_lower_bound`]: the coefficient of a simple root that
//!   occurs at most once in every positive root.
//! * [`check_certificate`]: validates an explicit tuple of roots.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use hashbrown::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::rootsys::{Family, Parabolic, Root, RootSystem, RootSystemType, Weight};
use crate::weyl::{longest_element, weyl_involution, OrbitGraph};

/// Which positive roots may label ladder steps for index `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeSet {
    /// Roots involving `α_d`, i.e. `R⁺ ∖ R⁺_{P_d}`.
    #[default]
    Strict,
    /// Every positive root.
    Relaxed,
}

/// `ω_d + τ(i(ω_d))` together with the ladder endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetWeight {
    pub d: usize,
    /// Ladder start `τ(i(ω_d))`.
    pub source: Weight,
    /// Ladder end `−ω_d`.
    pub sink: Weight,
    /// `ω_d + τ(i(ω_d))` in fundamental coordinates.
    pub value: Weight,
    /// Simple-root coordinates of `value`; always non-negative integers.
    pub root_coords: Vec<i64>,
}

pub fn target_weight(rs: &RootSystem, parabolic: &Parabolic, d: usize) -> Result<TargetWeight> {
    let n = rs.rank();
    let omega = rs.fundamental_weight(d)?;
    if parabolic.rank() != n {
        return Err(Error::Inconsistent(format!(
            "parabolic of rank {} used with {}",
            parabolic.rank(),
            rs.kind()
        )));
    }
    let tau = longest_element(rs, &parabolic.retained())?;
    let source = tau.act(rs, &weyl_involution(rs, &omega)?)?;
    let value = omega.add(&source);
    let root_coords = rs
        .to_root_lattice(&value)?
        .filter(|c| c.iter().all(|&x| x >= 0))
        .ok_or_else(|| {
            Error::Inconsistent(format!(
                "ω_{} + τ(i(ω_{})) = {:?} is not a non-negative root-lattice element",
                d + 1,
                d + 1,
                value.coords()
            ))
        })?;
    Ok(TargetWeight {
        d,
        source,
        sink: omega.negate(),
        value,
        root_coords,
    })
}

/// Indices of the positive roots usable as ladder steps for index `d`.
pub fn allowed_roots(rs: &RootSystem, d: usize, edges: EdgeSet) -> Vec<usize> {
    rs.positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, b)| edges == EdgeSet::Relaxed || b.coords()[d] > 0)
        .map(|(k, _)| k)
        .collect()
}

/// The orbit graph on the extremal weights of `V(i(ω_d))`.
///
/// It depends only on `d` and the edge set, so one graph serves every
/// parabolic.
pub fn extremal_graph(rs: &RootSystem, d: usize, edges: EdgeSet) -> Result<OrbitGraph<'_>> {
    let seed = weyl_involution(rs, &rs.fundamental_weight(d)?)?;
    OrbitGraph::new(rs, &seed, allowed_roots(rs, d, edges))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderStep {
    pub root: Root,
    /// `⟨from, β∨⟩`, the exponent of the root vector at this step.
    pub multiplicity: i64,
    pub from: Weight,
    pub to: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalPath {
    pub cost: u32,
    pub steps: Vec<LadderStep>,
}

/// Cheapest path from `source` to `sink` in a fully built orbit graph.
///
/// Distances are computed backwards from the sink. The witness then walks
/// forward taking, among optimal continuations, the next weight that is
/// lexicographically least in fundamental coordinates, which yields the
/// lexicographically least optimal weight sequence.
pub fn shortest_ladder(
    graph: &OrbitGraph<'_>,
    source: &Weight,
    sink: &Weight,
) -> Result<ExtremalPath> {
    let missing = |w: &Weight| {
        Error::Inconsistent(format!(
            "{:?} is not an extremal weight of the graph",
            w.coords()
        ))
    };
    let s = graph.node_id(source).ok_or_else(|| missing(source))?;
    let t = graph.node_id(sink).ok_or_else(|| missing(sink))?;

    let mut dist = vec![i64::MAX; graph.len()];
    let mut heap = BinaryHeap::new();
    dist[t as usize] = 0;
    heap.push(Reverse((0i64, t)));
    while let Some(Reverse((du, u))) = heap.pop() {
        if du > dist[u as usize] {
            continue;
        }
        if u == s {
            break;
        }
        graph.for_each_in_edge(u, |e| {
            let cand = du + e.cost;
            if cand < dist[e.from as usize] {
                dist[e.from as usize] = cand;
                heap.push(Reverse((cand, e.from)));
            }
        });
    }
    if dist[s as usize] == i64::MAX {
        return Err(Error::Unreachable);
    }

    let rs = graph.root_system();
    let mut steps = Vec::new();
    let mut u = s;
    while u != t {
        let mut best: Option<crate::weyl::OrbitEdge> = None;
        graph.for_each_out_edge(u, |e| {
            let dv = dist[e.to as usize];
            // Tentative distances never undercut true ones, so a tight edge
            // is always optimal.
            let tight = dv != i64::MAX && e.cost + dv == dist[u as usize];
            if tight && best.is_none_or(|b| graph.node(e.to) < graph.node(b.to)) {
                best = Some(e);
            }
        });
        let e = best.ok_or_else(|| Error::Inconsistent("broken shortest-path tree".into()))?;
        steps.push(LadderStep {
            root: rs.positive_root(e.root).clone(),
            multiplicity: e.cost,
            from: graph.node(u).clone(),
            to: graph.node(e.to).clone(),
        });
        u = e.to;
    }
    Ok(ExtremalPath {
        cost: dist[s as usize] as u32,
        steps,
    })
}

/// Cheapest ladder from `source` to `sink` using reflections in `roots`
/// (indices into the positive roots), discovering weights on demand.
///
/// The search runs backwards from the sink. Reversed steps add `rβ` with
/// `β > 0`, so every weight on a ladder lies between the sink and the source
/// in root coordinates; weights outside that box are never generated.
/// `max_k ⌈rem_k / M_k⌉` on the remaining root coordinates, `M_k` the largest
/// `α_k`-coefficient among the roots, is a consistent A* estimate. Expansion
/// continues through every weight whose estimate still allows total cost
/// `m`, so all optimal continuations are known and the witness follows the
/// same rule as [`shortest_ladder`].
pub fn ladder_search(
    rs: &RootSystem,
    roots: &[usize],
    source: &Weight,
    sink: &Weight,
) -> Result<ExtremalPath> {
    let n = rs.rank();
    let total = match rs.to_root_lattice(&source.sub(sink))? {
        Some(t) if t.iter().all(|&c| c >= 0) => t,
        _ => return Err(Error::Unreachable),
    };
    let max_coef: Vec<i64> = (0..n)
        .map(|k| {
            roots
                .iter()
                .map(|&r| rs.positive_root(r).coords()[k])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let estimate = |offset: &[i64]| -> Option<i64> {
        let mut h = 0;
        for k in 0..n {
            let rem = total[k] - offset[k];
            if rem < 0 || (rem > 0 && max_coef[k] == 0) {
                return None;
            }
            if rem > 0 {
                h = h.max((rem + max_coef[k] - 1) / max_coef[k]);
            }
        }
        Some(h)
    };
    let Some(h0) = estimate(&vec![0; n]) else {
        return Err(Error::Unreachable);
    };

    let mut nodes: Vec<Vec<i64>> = vec![sink.coords().to_vec()];
    let mut offsets: Vec<Vec<i64>> = vec![vec![0; n]];
    let mut heuristic: Vec<i64> = vec![h0];
    let mut dist: Vec<i64> = vec![0];
    let mut index: HashMap<Vec<i64>, u32> = HashMap::new();
    index.insert(sink.coords().to_vec(), 0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((h0, 0i64, 0u32)));
    let mut scratch = vec![0i64; n];
    let mut found: Option<(u32, i64)> = None;
    while let Some(Reverse((f, du, u))) = heap.pop() {
        if du > dist[u as usize] {
            continue;
        }
        if let Some((_, best)) = found {
            if f > best {
                break;
            }
        } else if nodes[u as usize] == source.coords() {
            found = Some((u, du));
            continue;
        }
        let chi = nodes[u as usize].clone();
        let offset = offsets[u as usize].clone();
        for &k in roots {
            // χ' = s_β χ with ⟨χ', β∨⟩ = −⟨χ, β∨⟩ = r ≥ 1
            let r = -rs.pairing_positive(&chi, k);
            if r < 1 {
                continue;
            }
            for ((s, c), b) in scratch.iter_mut().zip(&chi).zip(rs.positive_as_weight(k)) {
                *s = c + r * b;
            }
            let cand = du + r;
            match index.get(scratch.as_slice()) {
                Some(&v) => {
                    if cand < dist[v as usize] {
                        dist[v as usize] = cand;
                        heap.push(Reverse((cand + heuristic[v as usize], cand, v)));
                    }
                }
                None => {
                    let next_offset: Vec<i64> = offset
                        .iter()
                        .zip(rs.positive_root(k).coords())
                        .map(|(o, b)| o + r * b)
                        .collect();
                    let Some(h) = estimate(&next_offset) else {
                        continue;
                    };
                    let v = nodes.len() as u32;
                    nodes.push(scratch.clone());
                    offsets.push(next_offset);
                    heuristic.push(h);
                    index.insert(scratch.clone(), v);
                    dist.push(cand);
                    heap.push(Reverse((cand + h, cand, v)));
                }
            }
        }
    }
    let (s, cost) = found.ok_or(Error::Unreachable)?;

    let mut steps = Vec::new();
    let mut u = s;
    while u != 0 {
        let chi = &nodes[u as usize];
        let mut best: Option<(u32, usize, i64)> = None;
        for &k in roots {
            let r = rs.pairing_positive(chi, k);
            if r < 1 {
                continue;
            }
            for ((s, c), b) in scratch.iter_mut().zip(chi).zip(rs.positive_as_weight(k)) {
                *s = c - r * b;
            }
            let Some(&v) = index.get(scratch.as_slice()) else {
                continue;
            };
            let tight = r + dist[v as usize] == dist[u as usize];
            if tight && best.is_none_or(|(b, _, _)| nodes[v as usize] < nodes[b as usize]) {
                best = Some((v, k, r));
            }
        }
        let (v, k, r) =
            best.ok_or_else(|| Error::Inconsistent("broken shortest-path tree".into()))?;
        steps.push(LadderStep {
            root: rs.positive_root(k).clone(),
            multiplicity: r,
            from: Weight::new(chi.clone()),
            to: Weight::new(nodes[v as usize].clone()),
        });
        u = v;
    }
    Ok(ExtremalPath {
        cost: cost as u32,
        steps,
    })
}

/// `m_d` as the shortest extremal ladder from `τ(i(ω_d))` to `−ω_d`.
pub fn dijkstra_order(
    rs: &RootSystem,
    parabolic: &Parabolic,
    d: usize,
    edges: EdgeSet,
) -> Result<ExtremalPath> {
    let target = target_weight(rs, parabolic, d)?;
    ladder_search(
        rs,
        &allowed_roots(rs, d, edges),
        &target.source,
        &target.sink,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeBound {
    Minimum(u32),
    Infeasible,
}

impl LatticeBound {
    pub fn value(self) -> Option<u32> {
        match self {
            LatticeBound::Minimum(m) => Some(m),
            LatticeBound::Infeasible => None,
        }
    }
}

/// Fewest roots from `R⁺ ∖ R⁺_{P_d}` (with repetition) summing to the target.
pub fn lattice_lower_bound(
    rs: &RootSystem,
    parabolic: &Parabolic,
    d: usize,
) -> Result<LatticeBound> {
    let target = target_weight(rs, parabolic, d)?;
    let roots: Vec<&[i64]> = allowed_roots(rs, d, EdgeSet::Strict)
        .into_iter()
        .map(|k| rs.positive_root(k).coords())
        .collect();
    min_root_decomposition(&target.root_coords, &roots)
}

/// Minimum number of vectors from `roots` (repetition allowed) summing to
/// `target`. All vectors are non-negative; zero vectors are ignored.
///
/// Searches over remainders. Any decomposition can be ordered so that each
/// step's root starts at the first nonzero coordinate of the current
/// remainder, so only those roots are branched on. Iterative deepening over
/// the depth `K` starts from the admissible estimate `max_k ⌈rem_k / M_k⌉`,
/// `M_k` the largest `k`-th coordinate among the roots, and prunes any
/// remainder whose estimate no longer fits.
pub fn min_root_decomposition(target: &[i64], roots: &[&[i64]]) -> Result<LatticeBound> {
    let n = target.len();
    if target.iter().any(|&c| c < 0) {
        return Ok(LatticeBound::Infeasible);
    }
    let mut by_start: Vec<Vec<&[i64]>> = vec![Vec::new(); n];
    for r in roots {
        if let Some(k) = r.iter().position(|&c| c != 0) {
            by_start[k].push(r);
        }
    }
    let max_coef: Vec<i64> = (0..n)
        .map(|k| roots.iter().map(|r| r[k]).max().unwrap_or(0))
        .collect();
    let estimate = |rem: &[i64]| -> Option<i64> {
        let mut h = 0;
        for k in 0..n {
            if rem[k] > 0 {
                if max_coef[k] <= 0 {
                    return None;
                }
                h = h.max((rem[k] + max_coef[k] - 1) / max_coef[k]);
            }
        }
        Some(h)
    };
    let Some(start) = estimate(target) else {
        return Ok(LatticeBound::Infeasible);
    };
    if start == 0 {
        return Ok(LatticeBound::Minimum(0));
    }
    // Every nonzero vector has coordinate sum ≥ 1.
    let ceiling: i64 = target.iter().sum();
    let mut next_rem = vec![0i64; n];
    for depth in start..=ceiling {
        let mut layer: Vec<Vec<i64>> = vec![target.to_vec()];
        for step in 1..=depth {
            let mut seen: HashSet<Vec<i64>> = HashSet::new();
            let mut next = Vec::new();
            for rem in &layer {
                let Some(k) = rem.iter().position(|&c| c != 0) else {
                    continue;
                };
                'roots: for r in &by_start[k] {
                    for i in k..n {
                        next_rem[i] = rem[i] - r[i];
                        if next_rem[i] < 0 {
                            continue 'roots;
                        }
                    }
                    next_rem[..k].fill(0);
                    match estimate(&next_rem) {
                        Some(h) if step + h <= depth => {}
                        _ => continue,
                    }
                    if !seen.contains(next_rem.as_slice()) {
                        seen.insert(next_rem.clone());
                        next.push(next_rem.clone());
                    }
                }
            }
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
        if layer.iter().any(|rem| rem.iter().all(|&c| c == 0)) {
            return Ok(LatticeBound::Minimum(depth as u32));
        }
    }
    Ok(LatticeBound::Infeasible)
}

/// The simple root used for the coefficient bound, when one is declared for
/// this configuration.
///
/// * `A_n`: `α_d` itself.
/// * `C_n`: `α_n`.
/// * `D_n`: `α_1` for `P_1`, `α_{n-1}` for `P_{n-1}`, `α_n` for `P_n`.
/// * `E_6`: `α_1` for `P_1`, `α_6` for `P_6`.
/// * `E_7`: `α_7` for `P_7`.
pub fn distinguished_index(kind: RootSystemType, parabolic: &Parabolic, d: usize) -> Option<usize> {
    let n = kind.rank();
    let p = parabolic.omitted_index().ok()?;
    match (kind.family(), n) {
        (Family::A, _) => Some(d),
        (Family::C, _) => Some(n - 1),
        (Family::D, _) if p == 0 || p == n - 2 || p == n - 1 => Some(p),
        (Family::E, 6) if p == 0 || p == 5 => Some(p),
        (Family::E, 7) if p == 6 => Some(p),
        _ => None,
    }
}

/// `c_α`, the coefficient of the distinguished simple root in the target.
///
/// `Ok(None)` when no distinguished root is declared. An error if the
/// declared root ever occurs with coefficient ≥ 2 in a positive root.
pub fn coefficient_lower_bound(
    rs: &RootSystem,
    parabolic: &Parabolic,
    d: usize,
) -> Result<Option<u32>> {
    let Some(alpha) = distinguished_index(rs.kind(), parabolic, d) else {
        return Ok(None);
    };
    if let Some(bad) = rs.positive_roots().iter().find(|b| b.coords()[alpha] > 1) {
        return Err(Error::Inconsistent(format!(
            "α_{} has coefficient {} in the positive root {:?}",
            alpha + 1,
            bad.coords()[alpha],
            bad.coords()
        )));
    }
    let target = target_weight(rs, parabolic, d)?;
    Ok(Some(target.root_coords[alpha] as u32))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateEntry {
    pub root: Root,
    pub multiplicity: u32,
}

impl CertificateEntry {
    pub fn new(root: Root, multiplicity: u32) -> Self {
        Self { root, multiplicity }
    }
}

/// A tuple of roots `β_j ∈ R⁺ ∖ R⁺_{P_d}` with multiplicities `n_j` claiming
/// to realize `m_d` for the parabolic `P` and index `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: RootSystemType,
    pub parabolic: Parabolic,
    pub d: usize,
    pub entries: Vec<CertificateEntry>,
}

impl Certificate {
    pub fn cost(&self) -> u32 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateFailure {
    /// An earlier clause failed, so this one was not evaluated.
    Skipped,
    WrongSystem {
        expected: RootSystemType,
        found: RootSystemType,
    },
    Empty,
    NotAPositiveRoot {
        entry: usize,
        coords: Vec<i64>,
    },
    /// The root does not involve `α_d`, so it lies in `R⁺_{P_d}`.
    InLevi {
        entry: usize,
        coords: Vec<i64>,
    },
    ZeroMultiplicity {
        entry: usize,
    },
    RepeatedRoot {
        first: usize,
        second: usize,
    },
    SumMismatch {
        expected: Vec<i64>,
        actual: Vec<i64>,
    },
    /// `β_i + β_j` is a root, so the root vectors do not commute.
    NotCommuting {
        first: usize,
        second: usize,
    },
    /// No ordering of the entries is a chain of extremal reflection steps.
    NoLadder {
        start: Vec<i64>,
        reached_depth: usize,
    },
    CostMismatch {
        cost: u32,
        coefficient_bound: Option<u32>,
        dijkstra: u32,
    },
}

/// Clause-by-clause outcome of [`check_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub cost: u32,
    /// Well-formedness: positive roots outside the Levi of `P_d`,
    /// multiplicities ≥ 1, no repeated root.
    pub well_formed: Result<(), CertificateFailure>,
    /// (a) `Σ n_j β_j = ω_d + τ(i(ω_d))`.
    pub sum: Result<(), CertificateFailure>,
    /// (b) the root vectors `X_{−β_j}` commute pairwise (`β_i + β_j ∉ R`).
    pub commuting: Result<(), CertificateFailure>,
    /// Whether the roots are also pairwise orthogonal, which makes the
    /// reflections commute as well.
    pub orthogonal: bool,
    /// (c) an ordering of the entries whose steps `χ → χ − n_j β_j` all have
    /// `⟨χ, β_j∨⟩ = n_j`, ending at `−ω_d`; holds the entry order found.
    pub ladder: Result<Vec<usize>, CertificateFailure>,
    /// (d) the cost equals the coefficient bound (when declared) and the
    /// shortest-ladder value.
    pub minimal: Result<(), CertificateFailure>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<(&'static str, &CertificateFailure)> {
        let clauses: [(&'static str, Option<&CertificateFailure>); 5] = [
            ("well-formed", self.well_formed.as_ref().err()),
            ("a", self.sum.as_ref().err()),
            ("b", self.commuting.as_ref().err()),
            ("c", self.ladder.as_ref().err()),
            ("d", self.minimal.as_ref().err()),
        ];
        clauses
            .into_iter()
            .find_map(|(name, f)| f.map(|f| (name, f)))
    }
}

/// Validates a certificate, computing the comparison values itself.
pub fn check_certificate(rs: &RootSystem, cert: &Certificate) -> Result<CertificateReport> {
    let m = dijkstra_order(rs, &cert.parabolic, cert.d, EdgeSet::Strict)?.cost;
    let c_alpha = coefficient_lower_bound(rs, &cert.parabolic, cert.d)?;
    check_certificate_against(rs, cert, m, c_alpha)
}

/// Validates a certificate against already-computed `m_d` and `c_α`.
pub fn check_certificate_against(
    rs: &RootSystem,
    cert: &Certificate,
    dijkstra: u32,
    coefficient_bound: Option<u32>,
) -> Result<CertificateReport> {
    let skipped = || Err::<(), _>(CertificateFailure::Skipped);
    let mut report = CertificateReport {
        cost: cert.cost(),
        well_formed: Ok(()),
        sum: skipped(),
        commuting: skipped(),
        orthogonal: false,
        ladder: Err(CertificateFailure::Skipped),
        minimal: skipped(),
    };
    report.well_formed = well_formed(rs, cert);
    if report.well_formed.is_err() {
        return Ok(report);
    }
    let target = target_weight(rs, &cert.parabolic, cert.d)?;
    let n = rs.rank();
    let entries = &cert.entries;

    let mut total = vec![0i64; n];
    for e in entries {
        for (t, c) in total.iter_mut().zip(e.root.coords()) {
            *t += i64::from(e.multiplicity) * c;
        }
    }
    report.sum = if total == target.root_coords {
        Ok(())
    } else {
        Err(CertificateFailure::SumMismatch {
            expected: target.root_coords.clone(),
            actual: total,
        })
    };

    report.commuting = Ok(());
    report.orthogonal = true;
    'outer: for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            let (a, b) = (&entries[i].root, &entries[j].root);
            if rs.inner_product(a, b) != 0 {
                report.orthogonal = false;
            }
            let sum: Vec<i64> = a
                .coords()
                .iter()
                .zip(b.coords())
                .map(|(x, y)| x + y)
                .collect();
            if rs.is_root(&sum) {
                report.commuting = Err(CertificateFailure::NotCommuting {
                    first: i,
                    second: j,
                });
                break 'outer;
            }
        }
    }

    report.ladder = find_ladder(rs, entries, &target);

    report.minimal =
        if coefficient_bound.is_none_or(|c| c == report.cost) && report.cost == dijkstra {
            Ok(())
        } else {
            Err(CertificateFailure::CostMismatch {
                cost: report.cost,
                coefficient_bound,
                dijkstra,
            })
        };
    Ok(report)
}

fn well_formed(rs: &RootSystem, cert: &Certificate) -> Result<(), CertificateFailure> {
    if cert.kind != rs.kind() {
        return Err(CertificateFailure::WrongSystem {
            expected: rs.kind(),
            found: cert.kind,
        });
    }
    if cert.entries.is_empty() {
        return Err(CertificateFailure::Empty);
    }
    for (i, e) in cert.entries.iter().enumerate() {
        let coords = e.root.coords();
        if rs.positive_index(coords).is_none() {
            return Err(CertificateFailure::NotAPositiveRoot {
                entry: i,
                coords: coords.to_vec(),
            });
        }
        if coords[cert.d] == 0 {
            return Err(CertificateFailure::InLevi {
                entry: i,
                coords: coords.to_vec(),
            });
        }
        if e.multiplicity == 0 {
            return Err(CertificateFailure::ZeroMultiplicity { entry: i });
        }
        if let Some(j) = cert.entries[..i].iter().position(|f| f.root == e.root) {
            return Err(CertificateFailure::RepeatedRoot {
                first: j,
                second: i,
            });
        }
    }
    Ok(())
}

/// Depth-first search over entry orderings; states are subsets of entries,
/// since the current weight is determined by which entries were used.
fn find_ladder(
    rs: &RootSystem,
    entries: &[CertificateEntry],
    target: &TargetWeight,
) -> Result<Vec<usize>, CertificateFailure> {
    let k = entries.len();
    if k > 24 {
        return Err(CertificateFailure::NoLadder {
            start: target.source.coords().to_vec(),
            reached_depth: 0,
        });
    }
    let weights: Vec<Weight> = entries
        .iter()
        .map(|e| rs.root_as_weight(&e.root).expect("validated root"))
        .collect();
    let mut dead: HashSet<u32> = HashSet::new();
    let mut order = Vec::new();
    let mut deepest = 0;

    fn go(
        rs: &RootSystem,
        entries: &[CertificateEntry],
        weights: &[Weight],
        sink: &Weight,
        chi: &Weight,
        used: u32,
        order: &mut Vec<usize>,
        dead: &mut HashSet<u32>,
        deepest: &mut usize,
    ) -> bool {
        *deepest = (*deepest).max(order.len());
        if order.len() == entries.len() {
            return chi == sink;
        }
        if dead.contains(&used) {
            return false;
        }
        for (j, e) in entries.iter().enumerate() {
            if used & (1 << j) != 0 {
                continue;
            }
            let r = rs.pairing(chi, &e.root).expect("validated root");
            if r != i64::from(e.multiplicity) {
                continue;
            }
            let next = chi.scaled_sub(r, &weights[j]);
            order.push(j);
            if go(
                rs,
                entries,
                weights,
                sink,
                &next,
                used | (1 << j),
                order,
                dead,
                deepest,
            ) {
                return true;
            }
            order.pop();
        }
        dead.insert(used);
        false
    }

    if go(
        rs,
        entries,
        &weights,
        &target.sink,
        &target.source,
        0,
        &mut order,
        &mut dead,
        &mut deepest,
    ) {
        Ok(order)
    } else {
        Err(CertificateFailure::NoLadder {
            start: target.source.coords().to_vec(),
            reached_depth: deepest,
        })
    }
}
