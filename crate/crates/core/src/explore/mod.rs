//! Breadth-first search over diagrams reachable by moves, building the
//! weighted crossing graph whose components are tribes and whose edge
//! parities split them into phratries.

mod canonical;
mod compare;
mod parity;
mod sphere;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

pub use compare::{compare_with_classifier, ComparisonReport, GraphVerdict, PairCheck};
pub use sphere::flat_sphere_diagrams;

use crate::diagram::{CrossingId, TangleDiagram};
use crate::moves::{apply_move, enumerate_moves, Move, MoveBudget, MoveTrace};
use canonical::canonical_form;
use parity::ParityUnionFind;

/// Bounds on the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExploreBudget {
    pub max_crossings: usize,
    pub max_word_len: usize,
    pub max_depth: usize,
    /// Stop expanding once this many distinct diagrams are known.
    pub max_states: usize,
}

impl Default for ExploreBudget {
    fn default() -> Self {
        ExploreBudget { max_crossings: 4, max_word_len: 1, max_depth: 3, max_states: 4000 }
    }
}

/// An edge between two root crossings with its parity and the state and
/// move that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub v: CrossingId,
    pub w: CrossingId,
    pub weight: u8,
    pub via: String,
}

/// A connected set of root crossings. `parity` is relative to the first member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphComponent {
    pub members: Vec<CrossingId>,
    pub parity: Vec<u8>,
    pub self_dual: bool,
}

impl GraphComponent {
    pub fn position(&self, v: &CrossingId) -> Option<usize> {
        self.members.iter().position(|m| m == v)
    }
}

/// Result of the search, restricted to the root diagram's crossings.
#[derive(Debug, Clone)]
pub struct PhratryGraph {
    pub vertices: Vec<CrossingId>,
    pub edges: Vec<GraphEdge>,
    pub components: Vec<GraphComponent>,
    /// The search stopped at a budget before exhausting the move space.
    pub incomplete: bool,
    pub states: usize,
    parents: Vec<Option<(usize, Move)>>,
}

impl PhratryGraph {
    pub fn component_of(&self, v: &CrossingId) -> Option<&GraphComponent> {
        self.components.iter().find(|c| c.position(v).is_some())
    }

    /// Moves leading from the root to state `s`.
    pub fn trace_to(&self, root: &TangleDiagram, mut s: usize) -> crate::Result<MoveTrace> {
        let mut moves = Vec::new();
        while let Some(Some((p, m))) = self.parents.get(s) {
            moves.push(m.clone());
            s = *p;
        }
        moves.reverse();
        Ok(crate::moves::replay_moves(root, moves)?.1)
    }
}

struct State {
    diagram: TangleDiagram,
    nodes: BTreeMap<CrossingId, usize>,
    labels: BTreeMap<usize, CrossingId>,
    depth: usize,
}

fn add_state(
    diagram: TangleDiagram,
    labeling: &BTreeMap<CrossingId, usize>,
    depth: usize,
    uf: &mut ParityUnionFind,
    states: &mut Vec<State>,
) -> usize {
    let nodes: BTreeMap<CrossingId, usize> = diagram.crossings().keys().map(|v| (v.clone(), uf.add())).collect();
    let labels = labeling.iter().map(|(v, l)| (*l, v.clone())).collect();
    states.push(State { diagram, nodes, labels, depth });
    states.len() - 1
}

/// A second-move pair seen during the search, as union-find nodes.
struct PairEvent {
    a: usize,
    b: usize,
    via: String,
}

/// Explores diagrams reachable from `d` within `budget` and returns the
/// crossing graph on `d`'s crossings.
pub fn build_phratry_graph(d: &TangleDiagram, budget: &ExploreBudget) -> PhratryGraph {
    let moves_budget =
        MoveBudget { max_crossings: budget.max_crossings, max_word_len: budget.max_word_len, insertions: true };
    let mut uf = ParityUnionFind::default();
    let mut states: Vec<State> = Vec::new();
    let mut parents: Vec<Option<(usize, Move)>> = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut pairs: Vec<PairEvent> = Vec::new();
    let mut incomplete = false;

    let root = canonical_form(d);
    add_state(d.clone(), &root.labelings[0], 0, &mut uf, &mut states);
    parents.push(None);
    seen.insert(root.key, 0);
    let mut queue = VecDeque::from([0usize]);

    while let Some(s) = queue.pop_front() {
        if states[s].depth >= budget.max_depth {
            incomplete = true;
            continue;
        }
        let here = states[s].diagram.clone();
        for (mi, m) in enumerate_moves(&here, &moves_budget).into_iter().enumerate() {
            let Ok(applied) = apply_move(&here, &m) else { continue };
            let via = format!("s{s}m{mi}");
            if let Move::R2Remove { x, y } = &m {
                pairs.push(PairEvent { a: states[s].nodes[x], b: states[s].nodes[y], via: via.clone() });
            }
            let form = canonical_form(&applied.diagram);
            let maps: Vec<BTreeMap<CrossingId, usize>> = match seen.get(&form.key) {
                Some(&t) => {
                    // node of each new crossing, once per labelling attaining the key
                    let maps = form
                        .labelings
                        .iter()
                        .map(|lab| {
                            lab.iter().map(|(v, l)| (v.clone(), states[t].nodes[&states[t].labels[l]])).collect()
                        })
                        .collect();
                    maps
                }
                None => {
                    if states.len() >= budget.max_states {
                        incomplete = true;
                        continue;
                    }
                    let t = add_state(
                        applied.diagram.clone(),
                        &form.labelings[0],
                        states[s].depth + 1,
                        &mut uf,
                        &mut states,
                    );
                    parents.push(Some((s, m.clone())));
                    seen.insert(form.key, t);
                    queue.push_back(t);
                    vec![states[t].nodes.clone()]
                }
            };
            for map in &maps {
                for (v, &node) in &states[s].nodes {
                    if let Some(&n2) = map.get(v) {
                        if !applied.removed.contains(v) {
                            uf.union(node, n2, 0);
                        }
                    }
                }
            }
            if let (Move::R2Add { .. }, Some((x, y))) = (&m, &applied.dual_pair) {
                let map = &maps[0];
                pairs.push(PairEvent { a: map[x], b: map[y], via });
            }
        }
    }
    for p in &pairs {
        uf.union(p.a, p.b, 1);
    }
    summarize(d, &states[0], &mut uf, &pairs, incomplete, states.len(), parents)
}

fn summarize(
    d: &TangleDiagram,
    root: &State,
    uf: &mut ParityUnionFind,
    pairs: &[PairEvent],
    incomplete: bool,
    states: usize,
    parents: Vec<Option<(usize, Move)>>,
) -> PhratryGraph {
    let vertices = d.crossings_in_walk_order();
    let mut components: Vec<GraphComponent> = Vec::new();
    let mut class_of: BTreeMap<usize, usize> = BTreeMap::new();
    for v in &vertices {
        let (r, par) = uf.find(root.nodes[v]);
        match class_of.get(&r) {
            Some(&c) => {
                let comp = &mut components[c];
                let base = uf.find(root.nodes[&comp.members[0]]).1;
                comp.members.push(v.clone());
                comp.parity.push(par ^ base);
            }
            None => {
                class_of.insert(r, components.len());
                components.push(GraphComponent {
                    members: vec![v.clone()],
                    parity: vec![0],
                    self_dual: uf.is_contradictory(r),
                });
            }
        }
    }
    // translate each pair event to an edge between root crossings of its classes
    let mut edges: Vec<GraphEdge> = Vec::new();
    for p in pairs {
        let (ra, pa) = uf.find(p.a);
        let (rb, pb) = uf.find(p.b);
        let (Some(&ca), Some(&cb)) = (class_of.get(&ra), class_of.get(&rb)) else { continue };
        let (va, vb) = (&components[ca].members[0], &components[cb].members[0]);
        let weight = pa ^ uf.find(root.nodes[va]).1 ^ 1 ^ pb ^ uf.find(root.nodes[vb]).1;
        let edge = GraphEdge { v: va.clone(), w: vb.clone(), weight, via: p.via.clone() };
        if !edges.iter().any(|e| e.v == edge.v && e.w == edge.w && e.weight == edge.weight) {
            edges.push(edge);
        }
    }
    // the members themselves are joined through these representatives
    for c in &components {
        for (m, par) in c.members.iter().zip(&c.parity).skip(1) {
            edges.push(GraphEdge { v: c.members[0].clone(), w: m.clone(), weight: *par, via: "closure".into() });
        }
    }
    PhratryGraph { vertices, edges, components, incomplete, states, parents }
}

impl fmt::Display for PhratryGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edges {
            writeln!(f, "{} {} ε={} via={}", e.v, e.w, e.weight, e.via)?;
        }
        for c in &self.components {
            let names: Vec<&str> = c.members.iter().map(|m| m.as_str()).collect();
            if c.self_dual {
                writeln!(f, "self-dual tribe {{{}}}", names.join(","))?;
            } else {
                let side = |p: u8| {
                    c.members
                        .iter()
                        .zip(&c.parity)
                        .filter(|(_, q)| **q == p)
                        .map(|(m, _)| m.as_str())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                writeln!(f, "tribe {{{}}} phratries {{{}}} {{{}}}", names.join(","), side(0), side(1))?;
            }
        }
        writeln!(f, "states={} complete={}", self.states, if self.incomplete { "no" } else { "yes" })
    }
}
