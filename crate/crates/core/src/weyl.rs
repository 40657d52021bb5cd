//! Weyl group elements as words, longest elements, the Weyl involution and
//! orbits of dominant weights.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::rootsys::{Parabolic, Root, RootSystem, Weight};

/// A word `s_{l_0} s_{l_1} ⋯ s_{l_{k-1}}` in the simple reflections.
///
/// Acting on a weight applies the letters right to left, so the last letter
/// acts first. Two words name the same group element iff they act equally on
/// `ρ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self { letters }
    }

    /// Product `self · other`.
    pub fn compose(&self, other: &WeylWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn act(&self, rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
        let mut out = lambda.clone();
        for &i in self.letters.iter().rev() {
            out = rs.simple_reflection(i, &out)?;
        }
        Ok(out)
    }

    pub fn act_on_root(&self, rs: &RootSystem, beta: &Root) -> Result<Root> {
        let mut out = beta.clone();
        for &i in self.letters.iter().rev() {
            out = rs.simple_reflection_root(i, &out)?;
        }
        Ok(out)
    }

    pub fn same_element(&self, rs: &RootSystem, other: &WeylWord) -> Result<bool> {
        let rho = rs.rho();
        Ok(self.act(rs, &rho)? == other.act(rs, &rho)?)
    }
}

/// Longest element of the parabolic subgroup generated by `subset`.
///
/// Greedy descent on `Σ_{j ∈ subset} ω_j`, always reflecting in the smallest
/// index whose coordinate is still positive. The recorded reflections, read as
/// a word, send every positive root supported on `subset` to a negative root.
pub fn longest_element(rs: &RootSystem, subset: &[usize]) -> Result<WeylWord> {
    let n = rs.rank();
    if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: n,
        });
    }
    let mut v = Weight::zero(n).coords().to_vec();
    for &j in subset {
        v[j] = 1;
    }
    let mut applied = Vec::new();
    let mut sorted: Vec<usize> = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    while let Some(&j) = sorted.iter().find(|&&j| v[j] > 0) {
        rs.reflect_in_place(j, &mut v);
        applied.push(j);
    }
    applied.reverse();
    Ok(WeylWord::from_letters(applied))
}

/// `w₀`, the longest element of `W`.
pub fn longest_word(rs: &RootSystem) -> WeylWord {
    let all: Vec<usize> = (0..rs.rank()).collect();
    longest_element(rs, &all).expect("indices are in range")
}

/// `τ(α_d)` for a maximal parabolic `P_d`, with `τ` the longest element of `W_P`.
pub fn tau_on_omitted_root(rs: &RootSystem, parabolic: &Parabolic) -> Result<Root> {
    let d = parabolic.omitted_index()?;
    let tau = longest_element(rs, &parabolic.retained())?;
    let image = tau.act_on_root(rs, &Root::simple(rs.rank(), d))?;
    if !image.is_positive() {
        return Err(Error::Inconsistent(alloc::format!(
            "τ(α_{}) = {:?} is not positive",
            d + 1,
            image.coords()
        )));
    }
    Ok(image)
}

/// The Weyl involution `i = −w₀`.
pub fn weyl_involution(rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
    Ok(longest_word(rs).act(rs, lambda)?.negate())
}

/// The induced permutation of fundamental indices: `i(ω_d) = ω_{σ(d)}`.
pub fn involution_permutation(rs: &RootSystem) -> Vec<usize> {
    let w0 = longest_word(rs);
    (0..rs.rank())
        .map(|d| {
            let image = w0
                .act(rs, &Weight::fundamental(rs.rank(), d))
                .expect("in range")
                .negate();
            image
                .coords()
                .iter()
                .position(|&c| c == 1)
                .expect("−w₀ permutes fundamental weights")
        })
        .collect()
}

/// The W-orbit of a dominant weight, in breadth-first order from the seed
/// with reflections tried in index order.
pub fn orbit(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            coords: lambda.coords().to_vec(),
            len: lambda.rank(),
            rank: rs.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords().to_vec()));
    }
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.coords().to_vec(), ());
    queue.push_back(lambda.coords().to_vec());
    while let Some(chi) = queue.pop_front() {
        for i in 0..rs.rank() {
            if chi[i] == 0 {
                continue;
            }
            let mut next = chi.clone();
            rs.reflect_in_place(i, &mut next);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                queue.push_back(next);
            }
        }
        out.push(Weight::new(chi));
    }
    Ok(out)
}

/// Node lookup; weights are packed into one `u128` when every coordinate
/// fits in a signed byte and the rank is at most 16.
#[derive(Debug, Clone)]
enum NodeIndex {
    Packed(HashMap<u128, u32>),
    Wide(HashMap<Vec<i64>, u32>),
}

fn pack_i8(coords: &[i64]) -> Option<u128> {
    if coords.len() > 16 {
        return None;
    }
    let mut key = 0u128;
    for (i, &c) in coords.iter().enumerate() {
        let b = i8::try_from(c).ok()? as u8;
        key |= u128::from(b) << (8 * i);
    }
    Some(key)
}

impl NodeIndex {
    fn new(nodes: &[Weight]) -> Self {
        let packed: Option<HashMap<u128, u32>> = nodes
            .iter()
            .enumerate()
            .map(|(k, w)| pack_i8(w.coords()).map(|key| (key, k as u32)))
            .collect();
        match packed {
            Some(map) => NodeIndex::Packed(map),
            None => NodeIndex::Wide(
                nodes
                    .iter()
                    .enumerate()
                    .map(|(k, w)| (w.coords().to_vec(), k as u32))
                    .collect(),
            ),
        }
    }

    fn get(&self, coords: &[i64]) -> Option<u32> {
        match self {
            NodeIndex::Packed(map) => map.get(&pack_i8(coords)?).copied(),
            NodeIndex::Wide(map) => map.get(coords).copied(),
        }
    }
}

/// One edge `χ → s_β χ = χ − rβ` of an [`OrbitGraph`], where `r = ⟨χ, β∨⟩ ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitEdge {
    pub from: u32,
    pub to: u32,
    /// Index into the root system's positive roots.
    pub root: usize,
    pub cost: i64,
}

/// The orbit of a dominant weight with reflection edges along a chosen set
/// of positive roots.
///
/// Edges are generated on demand; storing them would cost far more than
/// recomputing pairings.
#[derive(Debug, Clone)]
pub struct OrbitGraph<'a> {
    rs: &'a RootSystem,
    nodes: Vec<Weight>,
    index: NodeIndex,
    roots: Vec<usize>,
}

impl<'a> OrbitGraph<'a> {
    /// `roots` are indices into `rs.positive_roots()`.
    pub fn new(rs: &'a RootSystem, seed: &Weight, roots: Vec<usize>) -> Result<Self> {
        let nodes = orbit(rs, seed)?;
        let index = NodeIndex::new(&nodes);
        Ok(Self {
            rs,
            nodes,
            index,
            roots,
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Weight] {
        &self.nodes
    }

    pub fn node(&self, id: u32) -> &Weight {
        &self.nodes[id as usize]
    }

    pub fn node_id(&self, chi: &Weight) -> Option<u32> {
        self.index.get(chi.coords())
    }

    pub fn edge_roots(&self) -> &[usize] {
        &self.roots
    }

    /// Calls `f` for every edge leaving `u`, in edge-root order.
    pub fn for_each_out_edge(&self, u: u32, mut f: impl FnMut(OrbitEdge)) {
        let chi = self.nodes[u as usize].coords();
        let mut scratch = chi.to_vec();
        for &k in &self.roots {
            let r = self.rs.pairing_positive(chi, k);
            if r >= 1 {
                let bw = self.rs.positive_as_weight(k);
                for ((s, c), b) in scratch.iter_mut().zip(chi).zip(bw) {
                    *s = c - r * b;
                }
                let to = self
                    .index
                    .get(&scratch)
                    .expect("orbit is closed under reflections");
                f(OrbitEdge {
                    from: u,
                    to,
                    root: k,
                    cost: r,
                });
            }
        }
    }

    /// Calls `f` for every edge entering `v`.
    pub fn for_each_in_edge(&self, v: u32, mut f: impl FnMut(OrbitEdge)) {
        let chi = self.nodes[v as usize].coords();
        let mut scratch = chi.to_vec();
        for &k in &self.roots {
            // s_β χ' = χ with ⟨χ, β∨⟩ = −⟨χ', β∨⟩
            let r = -self.rs.pairing_positive(chi, k);
            if r >= 1 {
                let bw = self.rs.positive_as_weight(k);
                for ((s, c), b) in scratch.iter_mut().zip(chi).zip(bw) {
                    *s = c + r * b;
                }
                let from = self
                    .index
                    .get(&scratch)
                    .expect("orbit is closed under reflections");
                f(OrbitEdge {
                    from,
                    to: v,
                    root: k,
                    cost: r,
                });
            }
        }
    }

    pub fn out_edges(&self, u: u32) -> Vec<OrbitEdge> {
        let mut out = Vec::new();
        self.for_each_out_edge(u, |e| out.push(e));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystemType;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name.parse::<RootSystemType>().unwrap()).unwrap()
    }

    #[test]
    fn a1_longest_is_single_reflection() {
        let a1 = rs("A1");
        assert_eq!(longest_element(&a1, &[0]).unwrap().letters(), &[0]);
    }

    #[test]
    fn e6_levi_tau_on_simple_roots() {
        let e6 = rs("E6");
        let tau = longest_element(&e6, &[1, 2, 3, 4, 5]).unwrap();
        let img = |j| tau.act_on_root(&e6, &Root::simple(6, j)).unwrap();
        assert_eq!(img(1), Root::simple(6, 2).negate());
        assert_eq!(img(2), Root::simple(6, 1).negate());
        for j in 3..6 {
            assert_eq!(img(j), Root::simple(6, j).negate());
        }
    }

    #[test]
    fn e7_levi_tau_swaps_ends() {
        let e7 = rs("E7");
        let tau = longest_element(&e7, &[0, 1, 2, 3, 4, 5]).unwrap();
        let img = |j| tau.act_on_root(&e7, &Root::simple(7, j)).unwrap();
        assert_eq!(img(0), Root::simple(7, 5).negate());
        assert_eq!(img(2), Root::simple(7, 4).negate());
        assert_eq!(img(1), Root::simple(7, 1).negate());
        assert_eq!(img(3), Root::simple(7, 3).negate());
    }

    #[test]
    fn tau_on_omitted_exceptional() {
        let e6 = rs("E6");
        let p1 = Parabolic::maximal(6, 0).unwrap();
        assert_eq!(
            tau_on_omitted_root(&e6, &p1).unwrap().coords(),
            &[1, 2, 2, 3, 2, 1]
        );
        let e7 = rs("E7");
        let p7 = Parabolic::maximal(7, 6).unwrap();
        assert_eq!(
            tau_on_omitted_root(&e7, &p7).unwrap().coords(),
            &[2, 2, 3, 4, 3, 2, 1]
        );
        let not_maximal = Parabolic::new(7, [0, 6]).unwrap();
        assert!(matches!(
            tau_on_omitted_root(&e7, &not_maximal),
            Err(Error::NotMaximal(_))
        ));
    }

    #[test]
    fn tau_on_omitted_type_a_matches_permutation() {
        // In S_N, τ = (c c−1 ⋯ 1 N N−1 ⋯ c+1) in one-line notation, so
        // τ(α_c) = ε_{τ(c)} − ε_{τ(c+1)} = ε_1 − ε_N: every coefficient 1.
        for n in 1..=9usize {
            let a = rs(&alloc::format!("A{n}"));
            let big_n = n + 1;
            for c in 1..=n {
                let perm = |i: usize| if i <= c { c + 1 - i } else { big_n + c + 1 - i };
                let (lo, hi) = (perm(c), perm(c + 1));
                assert!(lo < hi);
                let mut expect = alloc::vec![0i64; n];
                for k in lo..hi {
                    expect[k - 1] = 1;
                }
                let p = Parabolic::maximal(n, c - 1).unwrap();
                assert_eq!(tau_on_omitted_root(&a, &p).unwrap().coords(), &expect[..]);
            }
        }
    }

    #[test]
    fn weyl_involution_examples() {
        let d5 = rs("D5");
        assert_eq!(
            weyl_involution(&d5, &Weight::fundamental(5, 3)).unwrap(),
            Weight::fundamental(5, 4)
        );
        let d6 = rs("D6");
        assert_eq!(involution_permutation(&d6), alloc::vec![0, 1, 2, 3, 4, 5]);
        let e7 = rs("E7");
        assert_eq!(involution_permutation(&e7), (0..7).collect::<Vec<_>>());
        let e6 = rs("E6");
        assert_eq!(involution_permutation(&e6), alloc::vec![5, 1, 4, 3, 2, 0]);
        for n in 1..=8 {
            let a = rs(&alloc::format!("A{n}"));
            let perm = involution_permutation(&a);
            for d in 0..n {
                assert_eq!(perm[d], n - 1 - d);
            }
        }
    }

    #[test]
    fn orbit_sizes() {
        let a1 = rs("A1");
        let o = orbit(&a1, &Weight::fundamental(1, 0)).unwrap();
        assert_eq!(
            o,
            alloc::vec![Weight::new(alloc::vec![1]), Weight::new(alloc::vec![-1])]
        );
        assert_eq!(
            orbit(&rs("E7"), &Weight::fundamental(7, 6)).unwrap().len(),
            56
        );
        assert_eq!(
            orbit(&rs("E6"), &Weight::fundamental(6, 1)).unwrap().len(),
            72
        );
        assert!(matches!(
            orbit(&a1, &Weight::new(alloc::vec![-1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn longest_element_length_is_root_count() {
        for name in ["A4", "B3", "C4", "D5", "E6", "F4", "G2"] {
            let r = rs(name);
            assert_eq!(longest_word(&r).len(), r.positive_roots().len(), "{name}");
        }
    }

    #[test]
    fn orbit_graph_edges_are_reflections() {
        let e6 = rs("E6");
        let all: Vec<usize> = (0..e6.positive_roots().len()).collect();
        let g = OrbitGraph::new(&e6, &Weight::fundamental(6, 0), all).unwrap();
        assert_eq!(g.len(), 27);
        for u in 0..g.len() as u32 {
            for e in g.out_edges(u) {
                let beta = e6.positive_root(e.root);
                let expect = e6.reflect_by_root(g.node(u), beta).unwrap();
                assert_eq!(g.node(e.to), &expect);
                assert_eq!(e.cost, 1, "minuscule orbits only take unit steps");
            }
        }
    }
}
