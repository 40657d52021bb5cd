//! Finite crystallographic root systems in Bourbaki numbering.
//!
//! Indices are 0-based throughout: simple root `i` here is Bourbaki's
//! `α_{i+1}`. Roots carry integer coordinates in the simple-root basis and
//! weights carry integer coordinates in the fundamental-weight basis
//! (`λ_i = ⟨λ, α_i∨⟩`).

use alloc::collections::VecDeque;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational used for root-basis coordinates.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }
}

/// A (family, rank) pair that names a simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reason = match family {
            Family::A if rank < 1 => Some("type A needs rank >= 1"),
            Family::B if rank < 2 => Some("type B needs rank >= 2"),
            Family::C if rank < 2 => Some("type C needs rank >= 2"),
            Family::D if rank < 3 => Some("type D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("type E needs rank 6, 7 or 8"),
            Family::F if rank != 4 => Some("type F needs rank 4"),
            Family::G if rank != 2 => Some("type G needs rank 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidType {
                family,
                rank,
                reason,
            }),
            None => Ok(Self { family, rank }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots from the classical formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    /// Parses names like `E6` or `d5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let family: Family = head.to_string().parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        Self::new(family, rank)
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Self(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    /// Height: sum of the simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    /// True when some simple root outside `retained` has a non-zero coefficient.
    pub fn leaves(&self, retained: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .any(|(i, &c)| c != 0 && !retained.contains(&i))
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn fundamental(rank: usize, d: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[d] = 1;
        Self(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Weight) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled_sub(&self, k: i64, other: &Weight) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - k * b)
                .collect(),
        )
    }
}

/// A standard parabolic, described by the simple roots left out of its Levi.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Parabolic {
    rank: usize,
    omitted: Vec<usize>,
}

impl Parabolic {
    pub fn new(rank: usize, omitted: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut omitted: Vec<usize> = omitted.into_iter().collect();
        omitted.sort_unstable();
        omitted.dedup();
        if let Some(&bad) = omitted.iter().find(|&&i| i >= rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        Ok(Self { rank, omitted })
    }

    /// The maximal parabolic `P_d` obtained by omitting simple root `d`.
    pub fn maximal(rank: usize, d: usize) -> Result<Self> {
        Self::new(rank, [d])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn omitted(&self) -> &[usize] {
        &self.omitted
    }

    pub fn retained(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|i| !self.omitted.contains(i))
            .collect()
    }

    /// The omitted index of a maximal parabolic.
    pub fn omitted_index(&self) -> Result<usize> {
        match self.omitted.as_slice() {
            [d] => Ok(*d),
            other => Err(Error::NotMaximal(other.to_vec())),
        }
    }
}

/// Per-root data used by pairings and reflections.
#[derive(Debug, Clone)]
struct RootData {
    /// `(β, β) / 2` in the normalization where short roots have value 1.
    half_norm: i64,
    /// Coordinates of `β∨` in the simple-coroot basis.
    coroot: Vec<i64>,
    /// `β` in fundamental-weight coordinates.
    as_weight: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootSystemType,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩`.
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive: Vec<Root>,
    data: Vec<RootData>,
    index: HashMap<Vec<i64>, usize>,
    inverse_cartan: Vec<Vec<Rational>>,
}

fn cartan_matrix(kind: RootSystemType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = kind.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut d = vec![1i64; n];
    match kind.family() {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(2, 3);
            link(3, 1);
            for i in 3..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            for i in 0..3 {
                link(i, i + 1);
            }
        }
        Family::G => link(0, 1),
    }
    match kind.family() {
        // alpha_n short
        Family::B => {
            a[n - 1][n - 2] = -2;
            d = vec![2; n];
            d[n - 1] = 1;
        }
        // alpha_n long
        Family::C => {
            a[n - 2][n - 1] = -2;
            d[n - 1] = 2;
        }
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        Family::F => {
            a[2][1] = -2;
            d = vec![2, 2, 1, 1];
        }
        // alpha_1 short, alpha_2 long
        Family::G => {
            a[0][1] = -3;
            d = vec![1, 3];
        }
        _ => {}
    }
    (a, d)
}

/// Gauss-Jordan inverse over the rationals.
fn invert(matrix: &[Vec<i64>]) -> Result<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let q = |v: i64| Rational::from_integer(BigInt::from(v));
    let mut m: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&v| q(v)).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Inconsistent("singular Cartan matrix".to_string()))?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v = &*v / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

impl RootSystem {
    /// Builds the root system, enumerating positive roots as the closure of
    /// the simple roots under simple reflections.
    pub fn new(kind: RootSystemType) -> Result<Self> {
        let n = kind.rank();
        let (cartan, symmetrizer) = cartan_matrix(kind);
        let inverse_cartan = invert(&cartan)?;
        let mut rs = Self {
            kind,
            cartan,
            symmetrizer,
            positive: Vec::new(),
            data: Vec::new(),
            index: HashMap::new(),
            inverse_cartan,
        };

        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        for r in &queue {
            seen.insert(r.coords().to_vec(), ());
        }
        let mut found = Vec::new();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let image = rs.reflect_root_unchecked(i, &beta);
                if image.coords().iter().all(|&c| c >= 0) && !seen.contains_key(image.coords()) {
                    seen.insert(image.coords().to_vec(), ());
                    queue.push_back(image);
                }
            }
            found.push(beta);
        }
        found.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coords().cmp(a.coords()))
        });
        for beta in found {
            let data = rs.root_data(&beta);
            rs.index.insert(beta.coords().to_vec(), rs.positive.len());
            rs.positive.push(beta);
            rs.data.push(data);
        }
        Ok(rs)
    }

    fn root_data(&self, beta: &Root) -> RootData {
        let n = self.rank();
        let c = beta.coords();
        let norm: i64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| c[i] * c[j] * self.symmetrizer[i] * self.cartan[i][j])
            .sum();
        let half_norm = norm / 2;
        let coroot = (0..n)
            .map(|j| c[j] * self.symmetrizer[j] / half_norm)
            .collect();
        let as_weight = (0..n)
            .map(|i| (0..n).map(|j| self.cartan[i][j] * c[j]).sum())
            .collect();
        RootData {
            half_norm,
            coroot,
            as_weight,
        }
    }

    pub fn kind(&self) -> RootSystemType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height, ties by reverse-lexicographic coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn positive_root(&self, k: usize) -> &Root {
        &self.positive[k]
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn positive_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Membership test for the full root system (positive or negative).
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if coords.len() != self.rank() {
            return false;
        }
        if self.index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// Positive roots of the Levi of `parabolic`.
    pub fn levi_positive_count(&self, parabolic: &Parabolic) -> usize {
        let retained = parabolic.retained();
        self.positive
            .iter()
            .filter(|b| !b.leaves(&retained))
            .count()
    }

    /// Highest root: the unique positive root of maximal height.
    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root systems are non-empty")
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    fn check_len(&self, coords: &[i64]) -> Result<()> {
        if coords.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                coords: coords.to_vec(),
                len: coords.len(),
                rank: self.rank(),
            })
        }
    }

    /// Index into the positive roots for `±β`, with the sign.
    fn root_lookup(&self, beta: &Root) -> Result<(usize, i64)> {
        self.check_len(beta.coords())?;
        if let Some(k) = self.positive_index(beta.coords()) {
            return Ok((k, 1));
        }
        let neg = beta.negate();
        match self.positive_index(neg.coords()) {
            Some(k) => Ok((k, -1)),
            None => Err(Error::NotARoot(beta.coords().to_vec())),
        }
    }

    pub fn fundamental_weight(&self, d: usize) -> Result<Weight> {
        self.check_index(d)?;
        Ok(Weight::fundamental(self.rank(), d))
    }

    /// `ρ = Σ ω_j`.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    /// `(β, γ)` for the invariant form normalized so short roots have `(β, β) = 2`.
    pub fn inner_product(&self, beta: &Root, gamma: &Root) -> i64 {
        let n = self.rank();
        let (b, g) = (beta.coords(), gamma.coords());
        let mut total = 0;
        for i in 0..n {
            if b[i] == 0 {
                continue;
            }
            for j in 0..n {
                total += b[i] * g[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        total
    }

    /// `⟨λ, β∨⟩` for an integral weight and a root.
    pub fn pairing(&self, lambda: &Weight, beta: &Root) -> Result<i64> {
        self.check_len(lambda.coords())?;
        let (k, sign) = self.root_lookup(beta)?;
        Ok(sign * self.pairing_positive(lambda.coords(), k))
    }

    /// `⟨λ, β∨⟩` where `β` is the `k`-th positive root. No bounds checks.
    #[inline]
    pub fn pairing_positive(&self, lambda: &[i64], k: usize) -> i64 {
        self.data[k]
            .coroot
            .iter()
            .zip(lambda)
            .map(|(c, l)| c * l)
            .sum()
    }

    /// `⟨γ, β∨⟩` for two roots.
    pub fn root_pairing(&self, gamma: &Root, beta: &Root) -> Result<i64> {
        let w = self.root_as_weight(gamma)?;
        self.pairing(&w, beta)
    }

    /// `(β, β) / 2` for a root.
    pub fn half_norm(&self, beta: &Root) -> Result<i64> {
        let (k, _) = self.root_lookup(beta)?;
        Ok(self.data[k].half_norm)
    }

    /// Fundamental-weight coordinates of any element of the root lattice.
    pub fn root_as_weight(&self, beta: &Root) -> Result<Weight> {
        self.check_len(beta.coords())?;
        let n = self.rank();
        let c = beta.coords();
        Ok(Weight::new(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * c[j]).sum())
                .collect(),
        ))
    }

    /// Fundamental-weight coordinates of the `k`-th positive root.
    pub fn positive_as_weight(&self, k: usize) -> &[i64] {
        &self.data[k].as_weight
    }

    /// Coroot coordinates of the `k`-th positive root.
    pub fn positive_coroot(&self, k: usize) -> &[i64] {
        &self.data[k].coroot
    }

    /// Exact simple-root coordinates of `λ`.
    pub fn to_root_basis(&self, lambda: &Weight) -> Result<Vec<Rational>> {
        self.check_len(lambda.coords())?;
        let l: Vec<Rational> = lambda
            .coords()
            .iter()
            .map(|&v| Rational::from_integer(BigInt::from(v)))
            .collect();
        Ok(self
            .inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&l)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Integral simple-root coordinates, when `λ` lies in the root lattice.
    pub fn to_root_lattice(&self, lambda: &Weight) -> Result<Option<Vec<i64>>> {
        let coords = self.to_root_basis(lambda)?;
        Ok(coords
            .iter()
            .map(|q| {
                if q.is_integer() {
                    i64::try_from(q.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect())
    }

    /// `(s_i λ)_j = λ_j − λ_i · A[j][i]`.
    pub fn simple_reflection(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_len(lambda.coords())?;
        let mut out = lambda.clone();
        self.reflect_in_place(i, &mut out.0);
        Ok(out)
    }

    #[inline]
    pub(crate) fn reflect_in_place(&self, i: usize, coords: &mut [i64]) {
        let li = coords[i];
        if li != 0 {
            for (j, c) in coords.iter_mut().enumerate() {
                *c -= li * self.cartan[j][i];
            }
        }
    }

    fn reflect_root_unchecked(&self, i: usize, beta: &Root) -> Root {
        let c = beta.coords();
        let p: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * c[j]).sum();
        let mut out = c.to_vec();
        out[i] -= p;
        Root(out)
    }

    /// `s_i β = β − ⟨β, α_i∨⟩ α_i` on simple-root coordinates.
    pub fn simple_reflection_root(&self, i: usize, beta: &Root) -> Result<Root> {
        self.check_index(i)?;
        self.check_len(beta.coords())?;
        Ok(self.reflect_root_unchecked(i, beta))
    }

    /// `s_β λ = λ − ⟨λ, β∨⟩ β`.
    pub fn reflect_by_root(&self, lambda: &Weight, beta: &Root) -> Result<Weight> {
        let r = self.pairing(lambda, beta)?;
        let bw = self.root_as_weight(beta)?;
        Ok(lambda.scaled_sub(r, &bw))
    }

    /// Dominant representative of the orbit of `λ`.
    pub fn dominant_conjugate(&self, lambda: &Weight) -> Weight {
        let mut coords = lambda.coords().to_vec();
        while let Some(i) = coords.iter().position(|&c| c < 0) {
            self.reflect_in_place(i, &mut coords);
        }
        Weight(coords)
    }
}
