//! Embedding graphs of (parabolic) Verma modules.
//!
//! Starting from a seed `Λ`, every reducibility hit `(β, m)` gives an
//! embedding `V^{Λ−mβ} → V^Λ`; closing under these shifts yields a finite
//! DAG whose vertices lie in the `ρ`-shifted Weyl orbit of the seed.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::parabolic::{pvm_reducibility_set, require_ps_dominant, ParabolicSubset};
use crate::rootsys::{Root, RootSystem};
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub beta: Root,
    pub m: BigInt,
}

/// A shift whose target left `P_S`; only recorded on request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DroppedTarget {
    pub from: usize,
    pub beta: Root,
    pub m: BigInt,
    pub target: Weight,
}

#[derive(Debug, Clone, Default)]
pub struct BuildOptions {
    /// Vertex bound; defaults to `|W|·|Δ₊|`.
    pub cap: Option<usize>,
    /// Keep shifts to non-`P_S`-dominant weights as annotated leaves.
    pub keep_dropped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletGraph {
    pub seed: Weight,
    pub subset: ParabolicSubset,
    pub vertices: Vec<Weight>,
    /// Root-basis coordinates of `seed − vertex`.
    pub depths: Vec<Vec<BigInt>>,
    pub edges: Vec<Edge>,
    pub dropped: Vec<DroppedTarget>,
}

struct PendingEdge {
    from: usize,
    target: Weight,
    beta: Root,
    m: BigInt,
}

pub fn build(
    rs: &RootSystem,
    subset: &ParabolicSubset,
    seed: &Weight,
    opts: &BuildOptions,
) -> Result<MultipletGraph> {
    seed.check_rank(rs)?;
    if let Some(i) = subset.max_node() {
        if i > rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: rs.rank(),
            });
        }
    }
    require_ps_dominant(seed, subset)?;
    let cap = opts.cap.unwrap_or_else(|| {
        let bound = rs.lie_type().weyl_order() * rs.positive_roots().len();
        bound.to_usize().unwrap_or(usize::MAX)
    });

    let mut vertices = vec![seed.clone()];
    let mut depths = vec![vec![BigInt::zero(); rs.rank()]];
    let mut index: HashMap<Weight, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut edges = Vec::new();
    let mut dropped = Vec::new();
    let mut frontier = 0..1;

    while !frontier.is_empty() {
        let mut pending = Vec::new();
        for from in frontier.clone() {
            for h in pvm_reducibility_set(rs, subset, &vertices[from])? {
                if h.target_dominant {
                    pending.push(PendingEdge {
                        from,
                        target: h.target,
                        beta: h.hit.beta,
                        m: h.hit.m,
                    });
                } else if opts.keep_dropped {
                    dropped.push(DroppedTarget {
                        from,
                        beta: h.hit.beta,
                        m: h.hit.m,
                        target: h.target,
                    });
                }
            }
        }

        let mut fresh: Vec<&PendingEdge> = pending
            .iter()
            .filter(|e| !index.contains_key(&e.target))
            .collect();
        // one representative per new weight, new weights in label order
        fresh.sort_by(|a, b| a.target.cmp(&b.target));
        fresh.dedup_by(|a, b| a.target == b.target);

        let start = vertices.len();
        for e in fresh {
            let depth: Vec<BigInt> = depths[e.from]
                .iter()
                .zip(e.beta.coeffs())
                .map(|(d, &b)| d + &e.m * b)
                .collect();
            index.insert(e.target.clone(), vertices.len());
            vertices.push(e.target.clone());
            depths.push(depth);
            if vertices.len() > cap {
                return Err(Error::CapExceeded { cap });
            }
        }
        for e in pending {
            let to = index[&e.target];
            edges.push(Edge {
                from: e.from,
                to,
                beta: e.beta,
                m: e.m,
            });
        }
        frontier = start..vertices.len();
    }

    Ok(MultipletGraph {
        seed: seed.clone(),
        subset: subset.clone(),
        vertices,
        depths,
        edges,
        dropped,
    })
}

impl MultipletGraph {
    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.from == v).count()
    }

    /// Vertices without outgoing edges.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.out_degree(v) == 0)
            .collect()
    }

    /// Kahn's algorithm; true iff every vertex gets removed.
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            indeg[e.to] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for e in self.edges.iter().filter(|e| e.from == v) {
                indeg[e.to] -= 1;
                if indeg[e.to] == 0 {
                    stack.push(e.to);
                }
            }
        }
        removed == n
    }

    /// DOT rendering: nodes labeled by Dynkin labels, edges by `m·β`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph multiplet {\n");
        out.push_str("  node [shape=box];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{v}\"];");
        }
        for (k, d) in self.dropped.iter().enumerate() {
            let _ = writeln!(
                out,
                "  x{k} [label=\"{}\", style=dashed];",
                d.target
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{}\"];",
                e.from,
                e.to,
                edge_label(&e.m, &e.beta)
            );
        }
        for (k, d) in self.dropped.iter().enumerate() {
            let _ = writeln!(
                out,
                "  v{} -> x{k} [label=\"{}\", style=dashed];",
                d.from,
                edge_label(&d.m, &d.beta)
            );
        }
        out.push_str("}\n");
        out
    }
}

/// `3·α1`, or `2·(α1+α2)` for non-simple roots.
pub fn edge_label(m: &BigInt, beta: &Root) -> String {
    if beta.height() == 1 {
        format!("{m}·{beta}")
    } else {
        format!("{m}·({beta})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::hc_parameter;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn rank_one_pair() {
        let a1 = rs("A1");
        for m in 1..5i64 {
            let g = build(
                &a1,
                &ParabolicSubset::empty(),
                &Weight::from_ints(&[m - 1]),
                &BuildOptions::default(),
            )
            .unwrap();
            assert_eq!(g.vertices.len(), 2);
            assert_eq!(g.edges.len(), 1);
            assert_eq!(g.edges[0].m, BigInt::from(m));
            assert_eq!(g.vertices[1], Weight::from_ints(&[-m - 1]));
        }
    }

    #[test]
    fn irreducible_seed_is_single_vertex() {
        let g = build(
            &rs("A1"),
            &ParabolicSubset::empty(),
            &Weight::from_ints(&[-1]),
            &BuildOptions::default(),
        )
        .unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());
        let dot = g.to_dot();
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("[label=").count(), 1);
    }

    #[test]
    fn a3_counts() {
        let a3 = rs("A3");
        let full = build(&a3, &ParabolicSubset::empty(), &Weight::zero(3), &Default::default()).unwrap();
        assert_eq!(full.vertices.len(), 24);
        assert_eq!(full.sinks().len(), 1);
        let sink = full.sinks()[0];
        // antidominant member of the shifted orbit of 0 is −2ρ
        assert_eq!(full.vertices[sink], Weight::from_ints(&[-2, -2, -2]));

        let s13 = ParabolicSubset::new([1, 3], 3).unwrap();
        let six = build(&a3, &s13, &Weight::zero(3), &Default::default()).unwrap();
        assert_eq!(six.vertices.len(), 6);
        assert!(six.is_acyclic());
    }

    #[test]
    fn edges_are_consistent() {
        for (ty, seed) in [("A3", vec![0, 0, 0]), ("B3", vec![0, 1, 0]), ("C3", vec![2, 0, 1]), ("D4", vec![0, 0, 0, 0])] {
            let r = rs(ty);
            let g = build(&r, &ParabolicSubset::empty(), &Weight::from_ints(&seed), &Default::default()).unwrap();
            assert!(g.is_acyclic());
            for e in &g.edges {
                let m = hc_parameter(&r, &g.vertices[e.from], &e.beta).unwrap();
                assert_eq!(m, crate::weights::Rational::from_integer(e.m.clone()));
                let back = hc_parameter(&r, &g.vertices[e.to], &e.beta).unwrap();
                assert_eq!(back, -m);
                let s_from: BigInt = g.depths[e.from].iter().sum();
                let s_to: BigInt = g.depths[e.to].iter().sum();
                assert!(s_to > s_from);
            }
        }
    }

    #[test]
    fn non_dominant_seed_is_rejected() {
        let s2 = ParabolicSubset::new([2], 3).unwrap();
        let err = build(&rs("A3"), &s2, &Weight::from_ints(&[0, -1, 0]), &Default::default());
        assert!(matches!(err, Err(Error::NotDominant { index: 2, .. })));
    }

    #[test]
    fn tiny_cap_reports_internal_error() {
        let opts = BuildOptions {
            cap: Some(3),
            ..Default::default()
        };
        let err = build(&rs("A3"), &ParabolicSubset::empty(), &Weight::zero(3), &opts);
        assert_eq!(err, Err(Error::CapExceeded { cap: 3 }));
    }

    #[test]
    fn dropped_targets_are_optional_leaves() {
        let s13 = ParabolicSubset::new([1, 3], 3).unwrap();
        let a3 = rs("A3");
        let plain = build(&a3, &s13, &Weight::zero(3), &Default::default()).unwrap();
        let opts = BuildOptions {
            keep_dropped: true,
            ..Default::default()
        };
        let annotated = build(&a3, &s13, &Weight::zero(3), &opts).unwrap();
        assert_eq!(plain.vertices, annotated.vertices);
        assert_eq!(plain.edges, annotated.edges);
        assert!(plain.dropped.is_empty());
        assert!(!annotated.dropped.is_empty());
        assert!(annotated.to_dot().contains("style=dashed"));
    }

    #[test]
    fn dot_is_deterministic() {
        let a3 = rs("A3");
        let s13 = ParabolicSubset::new([1, 3], 3).unwrap();
        let a = build(&a3, &s13, &Weight::zero(3), &Default::default()).unwrap().to_dot();
        let b = build(&a3, &s13, &Weight::zero(3), &Default::default()).unwrap().to_dot();
        assert_eq!(a, b);
        assert_eq!(a.matches(" [label=\"(").count(), 6);
        let g = build(&rs("A1"), &ParabolicSubset::empty(), &Weight::from_ints(&[2]), &Default::default()).unwrap();
        assert!(g.to_dot().contains("v0 -> v1 [label=\"3·α1\"]"));
    }
}
