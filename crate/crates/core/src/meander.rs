//! Meander graphs of seaweed types.
//!
//! Vertices `v1..vn` sit on a line. Inside every top block of size `a` the
//! first vertex is joined to the last, the second to the second-to-last, and
//! so on; bottom blocks are handled the same way. Each vertex therefore has at
//! most one top arc and at most one bottom arc, so every connected component
//! is a path (possibly a single vertex) or a cycle.

use serde::Serialize;

use crate::typesym::{Composition, SeaweedType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

/// Undirected meander. Vertices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meander {
    seaweed_type: SeaweedType,
    top_arcs: Vec<(usize, usize)>,
    bottom_arcs: Vec<(usize, usize)>,
    // index 0 unused
    top_mate: Vec<Option<usize>>,
    bottom_mate: Vec<Option<usize>>,
}

fn arcs_of(comp: &Composition) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    let mut offset = 0;
    for &a in comp.parts() {
        // j + k = 2 * offset + a + 1
        for j in 1..=a / 2 {
            arcs.push((offset + j, offset + a + 1 - j));
        }
        offset += a;
    }
    arcs.sort_unstable();
    arcs
}

fn mates(n: usize, arcs: &[(usize, usize)]) -> Vec<Option<usize>> {
    let mut mate = vec![None; n + 1];
    for &(j, k) in arcs {
        mate[j] = Some(k);
        mate[k] = Some(j);
    }
    mate
}

pub fn build_meander(t: &SeaweedType) -> Meander {
    let n = t.n();
    let top_arcs = arcs_of(t.top());
    let bottom_arcs = arcs_of(t.bottom());
    Meander {
        seaweed_type: t.clone(),
        top_mate: mates(n, &top_arcs),
        bottom_mate: mates(n, &bottom_arcs),
        top_arcs,
        bottom_arcs,
    }
}

impl Meander {
    pub fn n(&self) -> usize {
        self.seaweed_type.n()
    }

    pub fn seaweed_type(&self) -> &SeaweedType {
        &self.seaweed_type
    }

    /// Top arcs as `(smaller, larger)` pairs, sorted.
    pub fn top_arcs(&self) -> &[(usize, usize)] {
        &self.top_arcs
    }

    pub fn bottom_arcs(&self) -> &[(usize, usize)] {
        &self.bottom_arcs
    }

    pub fn arcs(&self, side: Side) -> &[(usize, usize)] {
        match side {
            Side::Top => &self.top_arcs,
            Side::Bottom => &self.bottom_arcs,
        }
    }

    pub fn mate(&self, side: Side, v: usize) -> Option<usize> {
        match side {
            Side::Top => self.top_mate[v],
            Side::Bottom => self.bottom_mate[v],
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.top_mate[v].is_some() as usize + self.bottom_mate[v].is_some() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.top_arcs.len() + self.bottom_arcs.len()
    }

    /// Walk from `start`, leaving along `side` first and alternating after
    /// that. Stops at a dead end or when the walk returns to `start`.
    fn walk(&self, start: usize, side: Side) -> Vec<usize> {
        let mut seq = vec![start];
        let mut cur = start;
        let mut side = side;
        while let Some(next) = self.mate(side, cur) {
            if next == start {
                break;
            }
            seq.push(next);
            cur = next;
            side = side.other();
        }
        seq
    }

    pub fn orient(&self) -> DirectedMeander {
        orient(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Path,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub kind: ComponentKind,
    /// Vertices in walk order. Paths start at their smaller endpoint, cycles
    /// at their smallest vertex.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub paths: usize,
    pub cycles: usize,
    pub components: Vec<Component>,
}

pub fn components(m: &Meander) -> ComponentReport {
    let n = m.n();
    let mut seen = vec![false; n + 1];
    let mut comps = Vec::new();

    // Paths first: start from every unvisited endpoint (degree <= 1).
    for v in 1..=n {
        if seen[v] || m.degree(v) > 1 {
            continue;
        }
        let side = if m.mate(Side::Top, v).is_some() { Side::Top } else { Side::Bottom };
        let vertices = m.walk(v, side);
        for &u in &vertices {
            seen[u] = true;
        }
        comps.push(Component {
            kind: ComponentKind::Path,
            vertices,
        });
    }
    // Whatever is left has every vertex of degree 2.
    for v in 1..=n {
        if seen[v] {
            continue;
        }
        let vertices = m.walk(v, Side::Top);
        for &u in &vertices {
            seen[u] = true;
        }
        comps.push(Component {
            kind: ComponentKind::Cycle,
            vertices,
        });
    }
    comps.sort_by_key(|c| c.vertices.iter().copied().min());

    let paths = comps.iter().filter(|c| c.kind == ComponentKind::Path).count();
    ComponentReport {
        paths,
        cycles: comps.len() - paths,
        components: comps,
    }
}

/// A meander is Frobenius when it is a single path through all vertices.
pub fn is_frobenius(m: &Meander) -> bool {
    // n - 1 edges on n vertices with no cycle means one tree; with maximum
    // degree two that tree is a path. Cheaper than a full component walk.
    if m.edge_count() + 1 != m.n() {
        return false;
    }
    let report = components(m);
    report.paths == 1 && report.cycles == 0
}

/// Index of the seaweed from its meander: `2 * cycles + paths - 1`.
pub fn graph_index(m: &Meander) -> usize {
    let r = components(m);
    2 * r.cycles + r.paths - 1
}

/// Meander with top arcs oriented right-to-left and bottom arcs
/// left-to-right. Its edge set supports the Dergachev–Kirillov functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedMeander {
    meander: Meander,
    top_edges: Vec<(usize, usize)>,
    bottom_edges: Vec<(usize, usize)>,
}

pub fn orient(m: &Meander) -> DirectedMeander {
    DirectedMeander {
        top_edges: m.top_arcs.iter().map(|&(j, k)| (k, j)).collect(),
        bottom_edges: m.bottom_arcs.clone(),
        meander: m.clone(),
    }
}

impl DirectedMeander {
    pub fn from_type(t: &SeaweedType) -> DirectedMeander {
        orient(&build_meander(t))
    }

    pub fn n(&self) -> usize {
        self.meander.n()
    }

    pub fn seaweed_type(&self) -> &SeaweedType {
        self.meander.seaweed_type()
    }

    pub fn undirected(&self) -> &Meander {
        &self.meander
    }

    /// Top edges `(i, j)` with `i > j`.
    pub fn top_edges(&self) -> &[(usize, usize)] {
        &self.top_edges
    }

    /// Bottom edges `(i, j)` with `i < j`.
    pub fn bottom_edges(&self) -> &[(usize, usize)] {
        &self.bottom_edges
    }

    /// All directed edges, top edges first.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.top_edges.iter().chain(&self.bottom_edges).copied()
    }

    /// Whether the edge between `u` and its `side` mate points away from `u`.
    pub fn leaves(&self, side: Side, u: usize) -> Option<bool> {
        let w = self.meander.mate(side, u)?;
        Some(match side {
            Side::Top => u > w,
            Side::Bottom => u < w,
        })
    }

    pub fn is_frobenius(&self) -> bool {
        is_frobenius(&self.meander)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typesym::parse_type;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn m(s: &str) -> Meander {
        build_meander(&parse_type(s).unwrap())
    }

    #[test]
    fn figure_meander_arcs() {
        let mm = m("2|4/1|2|3");
        assert_eq!(mm.top_arcs(), &[(1, 2), (3, 6), (4, 5)]);
        assert_eq!(mm.bottom_arcs(), &[(2, 3), (4, 6)]);
    }

    #[test]
    fn single_vertex() {
        let mm = m("1/1");
        assert!(mm.top_arcs().is_empty() && mm.bottom_arcs().is_empty());
        assert_eq!(mm.n(), 1);
    }

    #[test]
    fn larger_meander_arcs() {
        let mm = m("6|5|3/14");
        assert_eq!(mm.top_arcs(), &[(1, 6), (2, 5), (3, 4), (7, 11), (8, 10), (12, 14)]);
        assert_eq!(
            mm.bottom_arcs(),
            &[(1, 14), (2, 13), (3, 12), (4, 11), (5, 10), (6, 9), (7, 8)]
        );
    }

    #[test]
    fn orientation() {
        let dm = m("2|4/1|2|3").orient();
        let edges: BTreeSet<_> = dm.edges().collect();
        let expected: BTreeSet<_> = [(2, 1), (6, 3), (5, 4), (2, 3), (4, 6)].into_iter().collect();
        assert_eq!(edges, expected);
        assert_eq!(m("1/1").orient().edges().count(), 0);
        assert_eq!(m("2/1|1").orient().edges().collect::<Vec<_>>(), vec![(2, 1)]);
    }

    #[test]
    fn component_classification() {
        let r = components(&m("2|4/1|2|3"));
        assert_eq!((r.paths, r.cycles), (1, 0));
        assert_eq!(r.components[0].vertices.len(), 6);
        assert_eq!(r.components[0].vertices, vec![1, 2, 3, 6, 4, 5]);

        let r = components(&m("1/1"));
        assert_eq!((r.paths, r.cycles), (1, 0));

        let r = components(&m("2/2"));
        assert_eq!((r.paths, r.cycles), (0, 1));
        assert_eq!(r.components[0].vertices, vec![1, 2]);
    }

    #[test]
    fn frobenius_and_index() {
        assert!(is_frobenius(&m("2|4/1|2|3")));
        assert!(!is_frobenius(&m("2/2")));
        assert!(is_frobenius(&m("1/1")));
        assert_eq!(graph_index(&m("2|4/1|2|3")), 0);
        assert_eq!(graph_index(&m("2/2")), 1);
        assert_eq!(graph_index(&m("1|1/1|1")), 1);
        assert_eq!(graph_index(&m("4/4")), 3);
    }

    fn arb_type() -> impl Strategy<Value = SeaweedType> {
        (1usize..=12).prop_flat_map(|n| {
            let masks = 1u64 << (n - 1);
            (0..masks, 0..masks).prop_map(move |(a, b)| {
                let top = Composition::all(n).nth(a as usize).unwrap();
                let bottom = Composition::all(n).nth(b as usize).unwrap();
                SeaweedType::new(top, bottom).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn arc_invariants(t in arb_type()) {
            let mm = build_meander(&t);
            let floor_sum = |c: &Composition| c.parts().iter().map(|a| a / 2).sum::<usize>();
            prop_assert_eq!(mm.top_arcs().len(), floor_sum(t.top()));
            prop_assert_eq!(mm.bottom_arcs().len(), floor_sum(t.bottom()));
            for side in [Side::Top, Side::Bottom] {
                let mut used = vec![0; t.n() + 1];
                for &(j, k) in mm.arcs(side) {
                    used[j] += 1;
                    used[k] += 1;
                }
                prop_assert!(used.iter().all(|&u| u <= 1));
            }
            let r = components(&mm);
            let covered: usize = r.components.iter().map(|c| c.vertices.len()).sum();
            prop_assert_eq!(covered, t.n());
            for c in &r.components {
                let all_deg2 = c.vertices.iter().all(|&v| mm.degree(v) == 2);
                prop_assert_eq!(c.kind == ComponentKind::Cycle, all_deg2);
            }
            if is_frobenius(&mm) {
                prop_assert_eq!(mm.edge_count(), t.n() - 1);
            }
        }

        #[test]
        fn flip_preserves_components(t in arb_type()) {
            let a = components(&build_meander(&t));
            let b = components(&build_meander(&t.flipped()));
            prop_assert_eq!((a.paths, a.cycles), (b.paths, b.cycles));
            let sets = |r: &ComponentReport| r.components.iter().map(|c| c.vertices.iter().copied().collect::<BTreeSet<_>>()).collect::<BTreeSet<_>>();
            prop_assert_eq!(sets(&a), sets(&b));
        }

        #[test]
        fn orientation_invariants(t in arb_type()) {
            let dm = DirectedMeander::from_type(&t);
            prop_assert!(dm.top_edges().iter().all(|&(i, j)| i > j));
            prop_assert!(dm.bottom_edges().iter().all(|&(i, j)| i < j));
            let mut undirected: Vec<_> = dm.top_edges().iter().map(|&(i, j)| (j, i)).collect();
            undirected.sort_unstable();
            prop_assert_eq!(&undirected[..], dm.undirected().top_arcs());
        }
    }
}
