//! Acyclic quivers, their bilinear forms and sink/source mutation.

mod dynkin;

pub use dynkin::{DynkinComponent, DynkinType};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::IntVector;

/// A single arrow. Its id is its position in [`Quiver::arrows`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Sink,
    Source,
    Neither,
    Isolated,
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            VertexKind::Sink => "sink",
            VertexKind::Source => "source",
            VertexKind::Neither => "neither sink nor source",
            VertexKind::Isolated => "isolated",
        }
    }
}

/// Finite directed multigraph on vertices `1..=n` with no loops and no
/// oriented cycles. Parallel arrows are distinct records.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quiver {
    n: usize,
    arrows: Vec<Arrow>,
}

/// Underlying unoriented multigraph `|Q|`. Edges keep the arrow order of the
/// quiver they came from and are stored as `(min, max)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UnderlyingGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl UnderlyingGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop { source_vertex: a, target: b });
            }
            out.push((a.min(b), a.max(b)));
        }
        Ok(UnderlyingGraph { n, edges: out })
    }

    /// Number of edges between `i` and `j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        let key = (i.min(j), i.max(j));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// Distinct neighbours of `i`, ascending.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        set.into_iter().collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Whether `vertices` induces a connected subgraph. The empty set is not
    /// connected.
    pub fn induces_connected(&self, vertices: &[usize]) -> bool {
        let Some(&start) = vertices.first() else {
            return false;
        };
        let members: BTreeSet<usize> = vertices.iter().copied().collect();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if members.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == members.len()
    }
}

impl Quiver {
    /// Build a quiver from `(source, target)` pairs; arrow ids follow list order.
    pub fn new(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let arrows: Vec<Arrow> = arrows
            .iter()
            .map(|&(source, target)| Arrow { source, target })
            .collect();
        for a in &arrows {
            for v in [a.source, a.target] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a.source == a.target {
                return Err(Error::Loop { source_vertex: a.source, target: a.target });
            }
        }
        let q = Quiver { n, arrows };
        if q.topological_order().is_none() {
            return Err(Error::CyclicQuiver);
        }
        Ok(q)
    }

    /// Quiver with `n` vertices and no arrows.
    pub fn discrete(n: usize) -> Self {
        Quiver { n, arrows: Vec::new() }
    }

    /// Linearly oriented path `1 → 2 → … → n`.
    pub fn linear_a(n: usize) -> Self {
        let arrows: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Quiver::new(n, &arrows).expect("path is acyclic")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> Arrow {
        self.arrows[id]
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::VertexOutOfRange { vertex: i, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Ids of arrows ending at `i`, ascending.
    pub fn incoming(&self, i: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target == i).collect()
    }

    /// Ids of arrows starting at `i`, ascending.
    pub fn outgoing(&self, i: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == i).collect()
    }

    /// Kahn's algorithm, smallest available vertex first; `None` on a cycle.
    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n + 1];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: BTreeSet<usize> = (1..=self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        ready.insert(a.target);
                    }
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn underlying_graph(&self) -> UnderlyingGraph {
        UnderlyingGraph {
            n: self.n,
            edges: self
                .arrows
                .iter()
                .map(|a| (a.source.min(a.target), a.source.max(a.target)))
                .collect(),
        }
    }

    /// Euler–Ringel form `Σ βᵢγᵢ − Σ_{a:i→j} βᵢγⱼ`.
    pub fn euler_form(&self, beta: &IntVector, gamma: &IntVector) -> Result<BigInt> {
        beta.check_len(self.n)?;
        gamma.check_len(self.n)?;
        let diag: BigInt = beta.coords().iter().zip(gamma.coords()).map(|(b, g)| b * g).sum();
        let off: BigInt = self
            .arrows
            .iter()
            .map(|a| beta.at(a.source) * gamma.at(a.target))
            .sum();
        Ok(diag - off)
    }

    /// Symmetrised form `(β,γ) = ⟨β,γ⟩ + ⟨γ,β⟩`.
    pub fn sym_form(&self, beta: &IntVector, gamma: &IntVector) -> Result<BigInt> {
        Ok(self.euler_form(beta, gamma)? + self.euler_form(gamma, beta)?)
    }

    /// Gram matrix of the symmetric form on the simple roots (generalised
    /// Cartan matrix), zero-indexed.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; self.n]; self.n];
        for (k, row) in c.iter_mut().enumerate() {
            row[k] = 2;
        }
        for a in &self.arrows {
            c[a.source - 1][a.target - 1] -= 1;
            c[a.target - 1][a.source - 1] -= 1;
        }
        c
    }

    pub fn vertex_kind(&self, i: usize) -> Result<VertexKind> {
        self.check_vertex(i)?;
        let ins = self.arrows.iter().any(|a| a.target == i);
        let outs = self.arrows.iter().any(|a| a.source == i);
        Ok(match (ins, outs) {
            (false, false) => VertexKind::Isolated,
            (true, false) => VertexKind::Sink,
            (false, true) => VertexKind::Source,
            (true, true) => VertexKind::Neither,
        })
    }

    /// Vertices that are sinks (isolated vertices excluded).
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.vertex_kind(i) == Ok(VertexKind::Sink))
            .collect()
    }

    /// `μᵢ(Q)`: reverse every arrow at a sink, source or isolated vertex.
    /// Arrow ids are preserved.
    pub fn mutate_at(&self, i: usize) -> Result<Quiver> {
        let kind = self.vertex_kind(i)?;
        if kind == VertexKind::Neither {
            return Err(Error::WrongVertexKind {
                vertex: i,
                kind: kind.name(),
                expected: "sink, source or isolated",
            });
        }
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.source == i || a.target == i {
                    Arrow { source: a.target, target: a.source }
                } else {
                    *a
                }
            })
            .collect();
        Ok(Quiver { n: self.n, arrows })
    }

    /// Drop every arrow incident to `i`; the vertex itself stays (isolated),
    /// so coordinates keep their meaning. Remaining arrows are renumbered in
    /// their original order.
    pub fn delete_vertex(&self, i: usize) -> Result<Quiver> {
        self.check_vertex(i)?;
        let arrows = self
            .arrows
            .iter()
            .filter(|a| a.source != i && a.target != i)
            .copied()
            .collect();
        Ok(Quiver { n: self.n, arrows })
    }

    pub fn dynkin_type(&self) -> DynkinType {
        DynkinType::classify(&self.underlying_graph())
    }

    /// Every acyclic orientation of the same underlying graph, in the order
    /// obtained by flipping arrows as a binary counter. Arrow ids are kept.
    pub fn all_orientations(&self) -> Vec<Quiver> {
        let m = self.arrows.len();
        assert!(m < 20, "too many arrows to enumerate orientations");
        (0u32..(1 << m))
            .filter_map(|mask| {
                let arrows: Vec<_> = self
                    .arrows
                    .iter()
                    .enumerate()
                    .map(|(k, a)| {
                        if mask & (1 << k) != 0 {
                            (a.target, a.source)
                        } else {
                            (a.source, a.target)
                        }
                    })
                    .collect();
                Quiver::new(self.n, &arrows).ok()
            })
            .collect()
    }

    pub fn simple_root(&self, i: usize) -> IntVector {
        IntVector::unit(self.n, i)
    }

    pub fn zero_vector(&self) -> IntVector {
        IntVector::zeros(self.n)
    }

    /// Whether the underlying graph is connected on the support of `v`.
    pub fn has_connected_support(&self, v: &IntVector) -> bool {
        self.underlying_graph().induces_connected(&v.support())
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(n={};", self.n)?;
        for (k, a) in self.arrows.iter().enumerate() {
            write!(f, "{}{}->{}", if k == 0 { " " } else { ", " }, a.source, a.target)?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuiverJson {
            n: self.n,
            arrows: self.arrows.iter().map(|a| (a.source, a.target)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QuiverJson::deserialize(d)?;
        Quiver::new(raw.n, &raw.arrows).map_err(serde::de::Error::custom)
    }
}
