//! The left-cell graph, cell partitions and the preorders `<=_L`, `<=_R`.

use std::collections::{BTreeSet, VecDeque};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::kl::KlEngine;
use crate::error::Result;
use crate::symgroup::{Permutation, Side};

/// Directed graph on `S_n` with an edge `x -> x'` iff `L(x)` is not
/// contained in `L(x')` and `mu(x|x') != 0`. A path `y => w` means
/// `y <=_L w`. Vertices are lexicographic ranks.
#[derive(Debug, Clone)]
pub struct CellGraph {
    elements: Vec<Permutation>,
    successors: Vec<Vec<usize>>,
    predecessors: Vec<Vec<usize>>,
    mu: Vec<Vec<i64>>,
}

impl CellGraph {
    pub fn build(engine: &KlEngine) -> Self {
        engine.warm();
        let g = engine.group();
        let order = g.order();
        // Each unordered pair with nonzero mu shows up once, in the list of
        // its longer member.
        let pairs: Vec<Vec<(usize, usize, i64)>> = (0..order)
            .into_par_iter()
            .map(|w| {
                let mut out = Vec::new();
                for &(z, m) in engine.mu_list_idx(w).iter() {
                    let z = z as usize;
                    let (lz, lw) = (g.left_descents(z), g.left_descents(w));
                    if !lz.is_subset(lw) {
                        out.push((z, w, m));
                    }
                    if !lw.is_subset(lz) {
                        out.push((w, z, m));
                    }
                }
                out
            })
            .collect();
        let mut successors = vec![Vec::new(); order];
        let mut predecessors = vec![Vec::new(); order];
        let mut mu = vec![Vec::new(); order];
        for (x, y, m) in pairs.into_iter().flatten() {
            successors[x].push((y, m));
            predecessors[y].push(x);
        }
        let successors = successors
            .into_iter()
            .enumerate()
            .map(|(x, mut list)| {
                list.sort_unstable();
                mu[x] = list.iter().map(|&(_, m)| m).collect();
                list.into_iter().map(|(y, _)| y).collect()
            })
            .collect();
        for list in &mut predecessors {
            list.sort_unstable();
        }
        CellGraph {
            elements: g.elements().to_vec(),
            successors,
            predecessors,
            mu,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn successors(&self, x: usize) -> &[usize] {
        &self.successors[x]
    }

    /// All edges `(x, x', mu(x|x'))`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(move |(x, list)| list.iter().zip(&self.mu[x]).map(move |(&y, &m)| (x, y, m)))
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    fn search(&self, start: usize, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let next = if forward {
                &self.successors[x]
            } else {
                &self.predecessors[x]
            };
            for &y in next {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Vertices reachable from `x`, i.e. every `w` with `x <=_L w`.
    pub fn reachable_from(&self, x: usize) -> Vec<bool> {
        self.search(x, true)
    }

    /// Vertices that reach `w`, i.e. every `y` with `y <=_L w`.
    pub fn reaching(&self, w: usize) -> Vec<bool> {
        self.search(w, false)
    }

    /// `{y : y <=_L w}`.
    pub fn closure(&self, w: usize) -> BTreeSet<Permutation> {
        self.reaching(w)
            .into_iter()
            .enumerate()
            .filter(|&(_, r)| r)
            .map(|(y, _)| self.elements[y].clone())
            .collect()
    }

    /// Graphviz rendering, one edge per line labelled with `mu`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph left_cells {\n");
        for w in &self.elements {
            out.push_str(&format!("  \"{w}\";\n"));
        }
        for (x, y, m) in self.edges() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{m}\"];\n",
                self.elements[x], self.elements[y]
            ));
        }
        out.push_str("}\n");
        out
    }

    /// `{"kind": "left-cell", "vertices": [...], "edges": [{"from","to","mu"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .edges()
            .map(|(x, y, m)| json!({"from": self.elements[x], "to": self.elements[y], "mu": m}))
            .collect();
        json!({"kind": "left-cell", "vertices": self.elements, "edges": edges})
    }
}

/// `left_cell_graph(n)` with a fresh engine.
pub fn left_cell_graph(n: usize) -> Result<CellGraph> {
    Ok(CellGraph::build(&KlEngine::new(n)?))
}

/// Left or right cells of `S_n` with the partial order induced on them.
/// Cells are sorted internally and by least element; `order` holds the
/// pairs `(a, b)`, `a != b`, with cell `a` below cell `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellPartition {
    side: Side,
    cells: Vec<Vec<Permutation>>,
    order: Vec<(usize, usize)>,
    #[serde(skip)]
    cell_of: Vec<usize>,
}

impl CellPartition {
    /// Strongly connected components of the left-cell graph, mapped through
    /// inversion for right cells.
    pub fn from_graph(graph: &CellGraph, side: Side) -> Self {
        let order_n = graph.len();
        let mut pg: DiGraph<(), ()> = DiGraph::with_capacity(order_n, graph.edge_count());
        for _ in 0..order_n {
            pg.add_node(());
        }
        for (x, y, _) in graph.edges() {
            pg.add_edge((x as u32).into(), (y as u32).into(), ());
        }
        let mut comps: Vec<Vec<usize>> = tarjan_scc(&pg)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|v| v.index()).collect();
                if side == Side::Right {
                    c = c
                        .into_iter()
                        .map(|x| graph.elements[x].inverse().rank())
                        .collect();
                }
                c.sort_unstable();
                c
            })
            .collect();
        comps.sort();
        let mut cell_of = vec![0; order_n];
        for (k, c) in comps.iter().enumerate() {
            for &x in c {
                cell_of[x] = k;
            }
        }
        // Condensation edges, then transitive closure by search per cell.
        let to_side = |x: usize| match side {
            Side::Left => x,
            Side::Right => graph.elements[x].inverse().rank(),
        };
        let mut dag: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); comps.len()];
        for (x, y, _) in graph.edges() {
            let (a, b) = (cell_of[to_side(x)], cell_of[to_side(y)]);
            if a != b {
                dag[a].insert(b);
            }
        }
        let mut order = Vec::new();
        for a in 0..comps.len() {
            let mut seen = vec![false; comps.len()];
            let mut stack: Vec<usize> = dag[a].iter().copied().collect();
            while let Some(b) = stack.pop() {
                if !seen[b] {
                    seen[b] = true;
                    stack.extend(dag[b].iter().copied());
                }
            }
            order.extend((0..comps.len()).filter(|&b| seen[b] && b != a).map(|b| (a, b)));
        }
        let cells = comps
            .into_iter()
            .map(|c| c.into_iter().map(|x| graph.elements[x].clone()).collect())
            .collect();
        CellPartition {
            side,
            cells,
            order,
            cell_of,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn cells(&self) -> &[Vec<Permutation>] {
        &self.cells
    }

    pub fn order(&self) -> &[(usize, usize)] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Index of the cell containing `w`.
    pub fn cell_of(&self, w: &Permutation) -> usize {
        self.cell_of[w.rank()]
    }

    pub fn same_cell(&self, y: &Permutation, w: &Permutation) -> bool {
        self.cell_of(y) == self.cell_of(w)
    }

    /// `y <= w` in the preorder of this side.
    pub fn leq(&self, y: &Permutation, w: &Permutation) -> bool {
        let (a, b) = (self.cell_of(y), self.cell_of(w));
        a == b || self.order.binary_search(&(a, b)).is_ok()
    }

    /// The partition as sets, forgetting order and labels.
    pub fn as_sets(&self) -> BTreeSet<BTreeSet<Permutation>> {
        self.cells.iter().map(|c| c.iter().cloned().collect()).collect()
    }
}

/// `cells(n, side)` with a fresh engine.
pub fn cells(n: usize, side: Side) -> Result<CellPartition> {
    Ok(CellPartition::from_graph(&left_cell_graph(n)?, side))
}

/// `{y : y <=_L w}`, read off the left-cell graph.
pub fn left_closure(engine: &KlEngine, w: &Permutation) -> Result<BTreeSet<Permutation>> {
    let wi = engine.group().index_of(w)?;
    Ok(CellGraph::build(engine).closure(wi))
}
