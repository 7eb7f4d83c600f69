use std::fmt;

use serde::Serialize;

use super::UnderlyingGraph;

/// Type of one connected component of `|Q|`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DynkinComponent {
    A(usize),
    D(usize),
    E(usize),
    NotDynkin,
}

impl fmt::Display for DynkinComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinComponent::A(m) => write!(f, "A{m}"),
            DynkinComponent::D(m) => write!(f, "D{m}"),
            DynkinComponent::E(m) => write!(f, "E{m}"),
            DynkinComponent::NotDynkin => write!(f, "NotDynkin"),
        }
    }
}

impl Serialize for DynkinComponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Per-component classification, components ordered by smallest vertex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DynkinType {
    pub components: Vec<DynkinComponent>,
}

impl DynkinType {
    pub fn classify(graph: &UnderlyingGraph) -> Self {
        let components = graph
            .components()
            .iter()
            .map(|comp| classify_component(graph, comp))
            .collect();
        DynkinType { components }
    }

    /// True when every component is of type A, D or E.
    pub fn is_dynkin(&self) -> bool {
        !self.components.contains(&DynkinComponent::NotDynkin)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn classify_component(graph: &UnderlyingGraph, comp: &[usize]) -> DynkinComponent {
    let edges: Vec<(usize, usize)> = graph
        .edges
        .iter()
        .copied()
        .filter(|(a, _)| comp.binary_search(a).is_ok())
        .collect();
    // simply laced trees only
    let mut distinct = edges.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != edges.len() || edges.len() + 1 != comp.len() {
        return DynkinComponent::NotDynkin;
    }
    let degree = |v: usize| graph.neighbours(v).len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch[..] {
        [] => DynkinComponent::A(comp.len()),
        [centre] if degree(centre) == 3 => {
            let mut legs: Vec<usize> = graph
                .neighbours(centre)
                .into_iter()
                .map(|start| leg_length(graph, centre, start))
                .collect();
            legs.sort_unstable();
            match legs[..] {
                [1, 1, c] => DynkinComponent::D(c + 3),
                [1, 2, 2] => DynkinComponent::E(6),
                [1, 2, 3] => DynkinComponent::E(7),
                [1, 2, 4] => DynkinComponent::E(8),
                _ => DynkinComponent::NotDynkin,
            }
        }
        _ => DynkinComponent::NotDynkin,
    }
}

/// Vertices on the path leaving `centre` through `start`, assuming every
/// vertex past `centre` has degree ≤ 2.
fn leg_length(graph: &UnderlyingGraph, centre: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, start, 1);
    loop {
        let next: Vec<usize> = graph.neighbours(cur).into_iter().filter(|&w| w != prev).collect();
        match next[..] {
            [w] => {
                prev = cur;
                cur = w;
                len += 1;
            }
            _ => return len,
        }
    }
}
