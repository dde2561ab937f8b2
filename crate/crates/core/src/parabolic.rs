//! Standard parabolic subalgebras `𝔭_S ⊇ 𝔟` indexed by subsets `S` of simple
//! roots, their Levi/nilradical root split, and parabolic Verma module
//! reducibility.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{Family, LieType, Root, RootSystem};
use crate::weights::{self, is_nonneg_integer, ReducibilityHit, Weight};

/// A set of simple-root indices, numbered from 1 as on the Dynkin diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ParabolicSubset {
    nodes: BTreeSet<usize>,
}

impl ParabolicSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(rank: usize) -> Self {
        Self {
            nodes: (1..=rank).collect(),
        }
    }

    /// Builds and validates a subset for a system of the given rank.
    pub fn new<I: IntoIterator<Item = usize>>(nodes: I, rank: usize) -> Result<Self> {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        if let Some(&bad) = nodes.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        Ok(Self { nodes })
    }

    /// 1-based node indices, ascending.
    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Membership test for a 0-based position.
    pub fn contains_position(&self, pos: usize) -> bool {
        self.nodes.contains(&(pos + 1))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.nodes.is_subset(&other.nodes)
    }

    pub fn max_node(&self) -> Option<usize> {
        self.nodes.last().copied()
    }

    fn check_rank(&self, rank: usize) -> Result<()> {
        match self.max_node() {
            Some(i) if i > rank => Err(Error::IndexOutOfRange { index: i, rank }),
            _ => Ok(()),
        }
    }
}

/// Writes `{1,3}`, or `∅` for the empty set.
impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nodes.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (k, i) in self.nodes.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Root-theoretic data of `𝔭_S = 𝔯_S ⊕ 𝔲_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicData {
    pub subset: ParabolicSubset,
    /// `Δ^S₊`: positive roots supported inside `S`.
    pub levi_roots: Vec<Root>,
    /// `Δ₊(S)`: the remaining positive roots, spanning `𝔲_S`.
    pub nilradical_roots: Vec<Root>,
    /// Dynkin types of the connected components of `S`, sorted.
    pub levi_type: Vec<LieType>,
    /// `ℓ − |S|`, the dimension of the centre of `𝔯_S`.
    pub center_rank: usize,
}

impl ParabolicData {
    pub fn levi_dim(&self) -> usize {
        self.levi_roots.len()
    }

    pub fn nilradical_dim(&self) -> usize {
        self.nilradical_roots.len()
    }

    pub fn levi_rank(&self) -> usize {
        self.levi_type.iter().map(LieType::rank).sum()
    }
}

pub fn analyze(rs: &RootSystem, subset: &ParabolicSubset) -> Result<ParabolicData> {
    subset.check_rank(rs.rank())?;
    let (levi_roots, nilradical_roots): (Vec<Root>, Vec<Root>) = rs
        .positive_roots()
        .iter()
        .cloned()
        .partition(|beta| beta.support().iter().all(|&p| subset.contains_position(p)));
    Ok(ParabolicData {
        subset: subset.clone(),
        levi_roots,
        nilradical_roots,
        levi_type: classify_subdiagram(rs, subset),
        center_rank: rs.rank() - subset.len(),
    })
}

/// All subsets of simple roots, ordered by size and then lexicographically.
pub fn all_subsets(rank: usize) -> Vec<ParabolicSubset> {
    let mut subsets: Vec<Vec<usize>> = (0u64..1 << rank)
        .map(|mask| (0..rank).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
        .into_iter()
        .map(|v| ParabolicSubset {
            nodes: v.into_iter().collect(),
        })
        .collect()
}

pub fn enumerate_all(rs: &RootSystem) -> Vec<ParabolicData> {
    all_subsets(rs.rank())
        .iter()
        .map(|s| analyze(rs, s).expect("generated subsets are in range"))
        .collect()
}

/// Membership of `Λ` in `P_S`: `Λ(h_i) ∈ ℤ_{≥0}` for all `i ∈ S`.
pub fn is_ps_dominant(weight: &Weight, subset: &ParabolicSubset) -> bool {
    first_violation(weight, subset).is_none()
}

fn first_violation(weight: &Weight, subset: &ParabolicSubset) -> Option<usize> {
    subset
        .nodes()
        .find(|&i| weight.labels().get(i - 1).is_none_or(|x| !is_nonneg_integer(x)))
}

pub(crate) fn require_ps_dominant(weight: &Weight, subset: &ParabolicSubset) -> Result<()> {
    match first_violation(weight, subset) {
        None => Ok(()),
        Some(i) => Err(Error::NotDominant {
            index: i,
            label: weight
                .labels()
                .get(i - 1)
                .map_or_else(|| "missing".to_string(), |x| x.to_string()),
        }),
    }
}

/// A reducibility hit of a parabolic Verma module together with its target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PvmHit {
    pub hit: ReducibilityHit,
    pub target: Weight,
    /// Whether `Λ − mβ` is again in `P_S`.
    pub target_dominant: bool,
}

/// Reducibility of `V_S^{M(Λ)}`: the BGG hits restricted to `β ∈ Δ₊(S)`.
pub fn pvm_reducibility_set(
    rs: &RootSystem,
    subset: &ParabolicSubset,
    weight: &Weight,
) -> Result<Vec<PvmHit>> {
    subset.check_rank(rs.rank())?;
    weight.check_rank(rs)?;
    require_ps_dominant(weight, subset)?;
    weights::reducibility_set(rs, weight)?
        .into_iter()
        .filter(|h| {
            h.beta
                .support()
                .iter()
                .any(|&p| !subset.contains_position(p))
        })
        .map(|hit| {
            let target = weights::shift(rs, weight, &hit)?;
            let target_dominant = is_ps_dominant(&target, subset);
            Ok(PvmHit {
                hit,
                target,
                target_dominant,
            })
        })
        .collect()
}

/// Dynkin types of the connected components of the subdiagram on `S`.
///
/// Components come out in normal form: rank-1 pieces are `A1`, a `D3`
/// tail is the path `A3`, and a `D2` tail is two disconnected `A1`s.
pub fn classify_subdiagram(rs: &RootSystem, subset: &ParabolicSubset) -> Vec<LieType> {
    let a = rs.cartan();
    let nodes: Vec<usize> = subset.nodes().map(|i| i - 1).collect();
    let mut seen = BTreeSet::new();
    let mut types = Vec::new();
    for &start in &nodes {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &nodes {
                if a[u][v] != 0 && u != v && seen.insert(v) {
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        types.push(classify_component(rs.lie_type().family(), a, &comp));
    }
    types.sort();
    types
}

fn classify_component(ambient: Family, a: &[Vec<i64>], comp: &[usize]) -> LieType {
    let n = comp.len();
    let ty = |f| LieType::new(f, n).expect("component is non-empty");
    if n == 1 {
        return ty(Family::A);
    }
    let degree = |u: usize| comp.iter().filter(|&&v| v != u && a[u][v] != 0).count();
    if comp.iter().any(|&u| degree(u) >= 3) {
        return ty(Family::D);
    }
    // in a classical diagram the only double bond is the tail of B_ℓ or C_ℓ,
    // so a component containing it inherits the ambient orientation
    let has_double = comp.iter().any(|&u| comp.iter().any(|&v| a[u][v] == -2));
    if has_double {
        ty(ambient)
    } else {
        ty(Family::A)
    }
}
