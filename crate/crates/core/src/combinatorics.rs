//! Graphs, hypergraphs, the predicted generic initial ideal of generalized
//! binomial edge ideals, the labeled-incidence-graph cycle criterion,
//! forest-of-complete recognition, and the obstruction family.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use crate::algebra::{Monomial, Polynomial, RingConfig, TermOrder};
use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;

/// Subset-enumeration cap; plain bitmask enumeration is adequate below it.
pub const ENUMERATION_CAP: usize = 16;

/// Simple undirected graph on vertex set `[n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("loop at vertex {a}")));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::InvalidParameter(format!(
                    "edge {{{a},{b}}} out of range for n = {n}"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).tuple_combinations().collect();
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All 2^C(n,2) labeled graphs on `[n]`, ordered by edge bitmask.
    pub fn enumerate_all(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e);
                Graph::new(n, edges).expect("pairs are in range")
            })
            .collect()
    }

    /// True when the subgraph induced on `subset` is connected (singletons
    /// are connected, the empty set is not).
    pub fn induced_connected(&self, subset: &BTreeSet<usize>) -> bool {
        let Some(&start) = subset.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if subset.contains(&w) && seen.insert(w) {
                    queue.push(w);
                }
            }
        }
        seen.len() == subset.len()
    }
}

/// An s-uniform hypergraph on vertex set `[n]`; graphs are the s = 2 case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypergraph {
    n: usize,
    s: usize,
    edges: BTreeSet<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, s: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if s < 2 {
            return Err(Error::InvalidParameter(format!(
                "uniformity must be at least 2, got {s}"
            )));
        }
        let mut set = BTreeSet::new();
        for edge in edges {
            let mut e = edge;
            e.sort_unstable();
            e.dedup();
            if e.len() != s {
                return Err(Error::InvalidParameter(format!(
                    "edge {e:?} does not have {s} distinct vertices"
                )));
            }
            if e[0] < 1 || e[e.len() - 1] > n {
                return Err(Error::InvalidParameter(format!(
                    "edge {e:?} out of range for n = {n}"
                )));
            }
            set.insert(e);
        }
        Ok(Hypergraph { n, s, edges: set })
    }

    pub fn complete(n: usize, s: usize) -> Result<Self> {
        let edges: Vec<Vec<usize>> = (1..=n).combinations(s).collect();
        Hypergraph::new(n, s, edges)
    }

    pub fn from_graph(g: &Graph) -> Self {
        Hypergraph {
            n: g.n,
            s: 2,
            edges: g.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        }
    }

    pub fn as_graph(&self) -> Option<Graph> {
        if self.s != 2 {
            return None;
        }
        Some(Graph {
            n: self.n,
            edges: self.edges.iter().map(|e| (e[0], e[1])).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn edges(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True when the edge set is all s-subsets of `[n]` (vacuously true for
    /// n < s).
    pub fn is_complete(&self) -> bool {
        let expected = if self.n < self.s {
            0
        } else {
            binomial(self.n, self.s)
        };
        self.edges.len() == expected
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Parses the graph/hypergraph file format: first line `n s`, one edge per
/// subsequent line as space-separated vertices; `#` starts a comment.
pub fn parse_hypergraph_file(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .map(|l| match l.find('#') {
            Some(k) => &l[..k],
            None => l,
        })
        .map(str::trim)
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse {
            offset: 0,
            message: "empty graph file".into(),
        })?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            offset: 0,
            message: "expected header line `n s`".into(),
        })?;
    let s: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            offset: 0,
            message: "expected header line `n s`".into(),
        })?;
    let mut edges = Vec::new();
    for line in lines {
        let verts: std::result::Result<Vec<usize>, _> =
            line.split_whitespace().map(str::parse).collect();
        let verts = verts.map_err(|_| Error::Parse {
            offset: 0,
            message: format!("bad edge line {line:?}"),
        })?;
        edges.push(verts);
    }
    Hypergraph::new(n, s, edges)
}

/// All nonempty `A ⊆ [n]` inducing a connected subgraph, ordered by size then
/// lexicographically.
pub fn connected_subsets(g: &Graph) -> Result<Vec<BTreeSet<usize>>> {
    if g.n > ENUMERATION_CAP {
        return Err(Error::InvalidParameter(format!(
            "vertex count {} exceeds the enumeration cap {ENUMERATION_CAP}",
            g.n
        )));
    }
    let mut out = Vec::new();
    for mask in 1u64..1 << g.n {
        let subset: BTreeSet<usize> = (1..=g.n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if g.induced_connected(&subset) {
            out.push(subset);
        }
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().cmp(b.iter()))
    });
    Ok(out)
}

/// The closed-form generic initial ideal of the generalized binomial edge
/// ideal: for every connected A with |A| >= 2, all monomials picking row i_j
/// in column j (j in A) with sum_j i_j <= m(|A| - 1), minimalized.
pub fn predict_gin_generators(g: &Graph, m: usize, prime: u64) -> Result<MonomialIdeal> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "row count must be at least 2, got {m}"
        )));
    }
    let ring = RingConfig::uniform(g.n, m, prime)?;
    let mut gens: Vec<Monomial> = Vec::new();
    for subset in connected_subsets(g)? {
        if subset.len() < 2 {
            continue;
        }
        let cols: Vec<usize> = subset.iter().copied().collect();
        let bound = m as u32 * (cols.len() as u32 - 1);
        let mut rows = vec![1u32; cols.len()];
        loop {
            let total: u32 = rows.iter().sum();
            if total <= bound {
                let mut exps = vec![0u8; ring.var_count()];
                for (k, &j) in cols.iter().enumerate() {
                    exps[ring.column_positions(j)[rows[k] as usize - 1]] = 1;
                }
                gens.push(Monomial::from_exps(exps));
            }
            // advance the row tuple
            let mut k = 0;
            loop {
                if k == rows.len() {
                    break;
                }
                rows[k] += 1;
                if rows[k] <= m as u32 {
                    break;
                }
                rows[k] = 1;
                k += 1;
            }
            if k == rows.len() {
                break;
            }
        }
    }
    Ok(MonomialIdeal::new(ring, gens))
}

// ---------------------------------------------------------------------------
// labeled incidence multigraph and the cycle criterion

/// Edge of the labeled incidence multigraph: vertices are indices into the
/// degree family, the label is the shared column.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LabeledEdge {
    pub a: usize,
    pub b: usize,
    pub label: usize,
}

/// Labeled multigraph G(A) on the members of a degree family: one edge
/// labeled j between members l < k for every j in their intersection.
/// Parallel edges are kept; loops cannot occur.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledMultigraph {
    r: usize,
    edges: Vec<LabeledEdge>,
}

impl LabeledMultigraph {
    pub fn vertex_count(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }
}

pub fn build_label_graph(family: &[BTreeSet<usize>]) -> LabeledMultigraph {
    let mut edges = Vec::new();
    for l in 0..family.len() {
        for k in l + 1..family.len() {
            for &j in family[l].intersection(&family[k]) {
                edges.push(LabeledEdge { a: l, b: k, label: j });
            }
        }
    }
    LabeledMultigraph {
        r: family.len(),
        edges,
    }
}

/// Searches for a cycle whose edge labels are not all equal; parallel edges
/// count as 2-cycles. Returns the witness cycle when one exists.
///
/// A cycle lies inside a single biconnected block, and any two edges of a
/// block lie on a common cycle, so a mixed cycle exists iff some block
/// carries two distinct labels. The witness is recovered by a path search
/// inside such a block.
pub fn has_nonconstant_label_cycle(lm: &LabeledMultigraph) -> Option<Vec<LabeledEdge>> {
    for block in biconnected_blocks(lm) {
        if block.len() < 2 {
            continue;
        }
        let first_label = lm.edges[block[0]].label;
        if block.iter().all(|&e| lm.edges[e].label == first_label) {
            continue;
        }
        // deterministic pick: the first edge whose label differs from some
        // other edge of the block
        let e0 = *block
            .iter()
            .find(|&&e| block.iter().any(|&f| lm.edges[f].label != lm.edges[e].label))
            .expect("mixed block has a mixed edge");
        if let Some(cycle) = mixed_cycle_through(lm, &block, e0) {
            return Some(cycle);
        }
    }
    None
}

/// Biconnected blocks of the multigraph, each as a list of edge indices.
fn biconnected_blocks(lm: &LabeledMultigraph) -> Vec<Vec<usize>> {
    let n = lm.r;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, e) in lm.edges.iter().enumerate() {
        adj[e.a].push((e.b, id));
        adj[e.b].push((e.a, id));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut edge_seen = vec![false; lm.edges.len()];
    let mut stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    let mut time = 0usize;

    struct Dfs<'s> {
        adj: &'s [Vec<(usize, usize)>],
        disc: &'s mut [usize],
        low: &'s mut [usize],
        edge_seen: &'s mut [bool],
        stack: &'s mut Vec<usize>,
        blocks: &'s mut Vec<Vec<usize>>,
        time: &'s mut usize,
    }

    impl Dfs<'_> {
        fn run(&mut self, u: usize, parent_edge: Option<usize>) {
            self.disc[u] = *self.time;
            self.low[u] = *self.time;
            *self.time += 1;
            for &(w, eid) in &self.adj[u] {
                if Some(eid) == parent_edge || self.edge_seen[eid] {
                    continue;
                }
                self.edge_seen[eid] = true;
                self.stack.push(eid);
                if self.disc[w] == usize::MAX {
                    self.run(w, Some(eid));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut block = Vec::new();
                        while let Some(&top) = self.stack.last() {
                            self.stack.pop();
                            block.push(top);
                            if top == eid {
                                break;
                            }
                        }
                        block.sort_unstable();
                        self.blocks.push(block);
                    }
                } else {
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }

    let mut dfs = Dfs {
        adj: &adj,
        disc: &mut disc,
        low: &mut low,
        edge_seen: &mut edge_seen,
        stack: &mut stack,
        blocks: &mut blocks,
        time: &mut time,
    };
    for v in 0..n {
        if dfs.disc[v] == usize::MAX {
            dfs.run(v, None);
        }
    }
    blocks
}

/// Simple cycle through `e0` inside the block with at least one edge labeled
/// differently from `e0`.
fn mixed_cycle_through(
    lm: &LabeledMultigraph,
    block: &[usize],
    e0: usize,
) -> Option<Vec<LabeledEdge>> {
    let base = lm.edges[e0];
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); lm.r];
    for &id in block {
        if id == e0 {
            continue;
        }
        let e = lm.edges[id];
        adj[e.a].push((e.b, id));
        adj[e.b].push((e.a, id));
    }

    struct Search<'s> {
        lm: &'s LabeledMultigraph,
        adj: &'s [Vec<(usize, usize)>],
        target: usize,
        base_label: usize,
        visited: Vec<usize>,
        path: Vec<usize>,
    }

    impl Search<'_> {
        fn dfs(&mut self, at: usize, mixed: bool) -> bool {
            for k in 0..self.adj[at].len() {
                let (w, eid) = self.adj[at][k];
                let now_mixed = mixed || self.lm.edges[eid].label != self.base_label;
                if w == self.target {
                    if now_mixed {
                        self.path.push(eid);
                        return true;
                    }
                    continue;
                }
                if self.visited.contains(&w) {
                    continue;
                }
                self.visited.push(w);
                self.path.push(eid);
                if self.dfs(w, now_mixed) {
                    return true;
                }
                self.path.pop();
                self.visited.pop();
            }
            false
        }
    }

    let mut search = Search {
        lm,
        adj: &adj,
        target: base.a,
        base_label: base.label,
        visited: vec![base.a, base.b],
        path: vec![e0],
    };
    if search.dfs(base.b, false) {
        Some(search.path.into_iter().map(|id| lm.edges[id]).collect())
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// forests of complete hypergraphs

/// One peeling step of a forest decomposition: the support of the removed
/// complete cluster and the edge count it accounted for.
#[derive(Clone, Debug)]
pub struct ForestStep {
    pub cluster: Vec<usize>,
    pub edges_removed: usize,
}

#[derive(Clone, Debug, Default)]
pub struct ForestTrace {
    pub steps: Vec<ForestStep>,
}

/// Recognizes forests of complete s-uniform hypergraphs by peeling
/// inclusion-maximal complete clusters with backtracking. The edgeless
/// hypergraph counts as an (empty) forest.
pub fn is_forest_of_complete(h: &Hypergraph) -> Result<Option<ForestTrace>> {
    if h.n > ENUMERATION_CAP {
        return Err(Error::InvalidParameter(format!(
            "vertex count {} exceeds the enumeration cap {ENUMERATION_CAP}",
            h.n
        )));
    }
    let vertices: BTreeSet<usize> = (1..=h.n).collect();
    let mut trace = ForestTrace::default();
    if forest_search(&vertices, &h.edges, h.s, &mut trace) {
        Ok(Some(trace))
    } else {
        Ok(None)
    }
}

fn forest_search(
    vertices: &BTreeSet<usize>,
    edges: &BTreeSet<Vec<usize>>,
    s: usize,
    trace: &mut ForestTrace,
) -> bool {
    if edges.is_empty() {
        return true;
    }
    // base case: complete on the current vertex set
    if vertices.len() >= s && edges.len() == binomial(vertices.len(), s) {
        trace.steps.push(ForestStep {
            cluster: vertices.iter().copied().collect(),
            edges_removed: edges.len(),
        });
        return true;
    }
    for cluster in maximal_complete_clusters(edges, s) {
        let cluster_set: BTreeSet<usize> = cluster.iter().copied().collect();
        let removed: BTreeSet<Vec<usize>> = cluster
            .iter()
            .copied()
            .combinations(s)
            .collect();
        let remaining: BTreeSet<Vec<usize>> = edges.difference(&removed).cloned().collect();
        let support: BTreeSet<usize> = remaining.iter().flatten().copied().collect();
        // vertices outside the cluster must live on the recursive side
        let rest: BTreeSet<usize> = support
            .union(&vertices.difference(&cluster_set).copied().collect())
            .copied()
            .collect();
        if rest.intersection(&cluster_set).count() > 1 {
            continue;
        }
        trace.steps.push(ForestStep {
            cluster: cluster.clone(),
            edges_removed: removed.len(),
        });
        if forest_search(&rest, &remaining, s, trace) {
            return true;
        }
        trace.steps.pop();
    }
    false
}

/// Inclusion-maximal vertex sets B with binom(B, s) contained in the edge
/// set, in descending size order.
fn maximal_complete_clusters(edges: &BTreeSet<Vec<usize>>, s: usize) -> Vec<Vec<usize>> {
    let support: Vec<usize> = edges
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let edge_set: HashSet<&Vec<usize>> = edges.iter().collect();
    let mut clusters: Vec<BTreeSet<usize>> = Vec::new();
    for edge in edges {
        let mut cluster: BTreeSet<usize> = edge.iter().copied().collect();
        // greedy closure: extend while completeness is preserved
        loop {
            let candidate = support.iter().copied().find(|&v| {
                !cluster.contains(&v)
                    && cluster
                        .iter()
                        .copied()
                        .combinations(s - 1)
                        .all(|mut sub| {
                            sub.push(v);
                            sub.sort_unstable();
                            edge_set.contains(&sub)
                        })
            });
            match candidate {
                Some(v) => {
                    cluster.insert(v);
                }
                None => break,
            }
        }
        if !clusters.contains(&cluster) {
            clusters.push(cluster);
        }
    }
    // keep inclusion-maximal ones
    let maximal: Vec<Vec<usize>> = clusters
        .iter()
        .filter(|c| !clusters.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
        .map(|c| c.iter().copied().collect())
        .collect();
    let mut out = maximal;
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// obstruction family

/// The m-uniform hypergraph of Proposition-style obstructions: a chain of t
/// windows of width m overlapping in single vertices, closed up through
/// vertex 1. Requires m >= 3, t >= 1, and (t+1)(m-1)+1 <= n.
pub fn obstruction_hypergraph(m: usize, t: usize, n: usize) -> Result<Hypergraph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "obstruction family needs m >= 3, got {m}"
        )));
    }
    if t < 1 {
        return Err(Error::InvalidParameter("obstruction family needs t >= 1".into()));
    }
    if (t + 1) * (m - 1) + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "obstruction family needs (t+1)(m-1)+1 <= n; got m = {m}, t = {t}, n = {n}"
        )));
    }
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for l in 1..=t {
        let start = (l - 1) * (m - 1) + 1;
        edges.push((start..start + m).collect());
    }
    let start = t * (m - 1) + 1;
    let last = (t + 1) * (m - 1) + 1;
    let mut closing: Vec<usize> = (start..start + m).filter(|&v| v != last).collect();
    closing.push(1);
    edges.push(closing);
    Hypergraph::new(n, m, edges)
}

// ---------------------------------------------------------------------------
// regular-sequence certificates and the classifier

/// True iff the leading terms are pairwise coprime, a sufficient certificate
/// that the generators form a regular sequence. Meant for the diagonal
/// (row-major lex) order, where a minor leads with its main diagonal.
pub fn lead_coprime_regular_sequence(gens: &[Polynomial], order: &TermOrder) -> bool {
    let lts: Vec<&Monomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_term(order).expect("nonzero").0)
        .collect();
    for a in 0..lts.len() {
        for b in a + 1..lts.len() {
            if !lts[a].coprime(lts[b]) {
                return false;
            }
        }
    }
    true
}

/// How a regular sequence was certified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RegSeqCertificate {
    /// Pairwise-coprime leading terms under the diagonal order.
    LeadCoprime,
    /// All edges except one are integer column windows with start gaps > 1
    /// (a prime complete intersection), and the remaining edge has a
    /// multidegree different from every window, hence is a nonzerodivisor.
    WindowChainPlusOne { windows: Vec<usize>, extra: Vec<usize> },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HypergraphClass {
    CsMaximalMinors,
    CsByForest,
    NotCsByCycle,
    Unknown,
}

impl HypergraphClass {
    pub fn name(&self) -> &'static str {
        match self {
            HypergraphClass::CsMaximalMinors => "CS_MAXIMAL_MINORS",
            HypergraphClass::CsByForest => "CS_BY_FOREST",
            HypergraphClass::NotCsByCycle => "NOT_CS_BY_CYCLE",
            HypergraphClass::Unknown => "UNKNOWN",
        }
    }

    /// Whether the class decides the CS question.
    pub fn is_decisive(&self) -> bool {
        !matches!(self, HypergraphClass::Unknown)
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub class: HypergraphClass,
    pub forest: Option<ForestTrace>,
    pub cycle: Option<Vec<LabeledEdge>>,
    pub regular_sequence: Option<RegSeqCertificate>,
}

/// Combinatorial CS classification of a hypergraph minor ideal:
/// complete uniform hypergraphs with s in {2, min(m,n)} are CS (maximal
/// minors), forests of complete s-uniform hypergraphs with s = m are CS, and
/// a certified regular sequence whose degree supports carry a mixed-label
/// cycle is not CS. Everything else is left undecided.
pub fn classify_hypergraph(h: &Hypergraph, m: usize, prime: u64) -> Result<Classification> {
    if h.edge_count() == 0 {
        return Ok(Classification {
            class: HypergraphClass::CsByForest,
            forest: Some(ForestTrace::default()),
            cycle: None,
            regular_sequence: None,
        });
    }
    if h.is_complete() && (h.s() == 2 || h.s() == m.min(h.n())) {
        return Ok(Classification {
            class: HypergraphClass::CsMaximalMinors,
            forest: None,
            cycle: None,
            regular_sequence: None,
        });
    }
    let forest = if h.s() == m {
        is_forest_of_complete(h)?
    } else {
        None
    };
    if let Some(trace) = forest {
        return Ok(Classification {
            class: HypergraphClass::CsByForest,
            forest: Some(trace),
            cycle: None,
            regular_sequence: None,
        });
    }

    let ideal = crate::models::hypergraph_minor_ideal(h, m, prime)?;
    let family: Vec<BTreeSet<usize>> = ideal
        .gens()
        .iter()
        .map(|g| {
            let d = g
                .homogeneous_multidegree(ideal.ring())
                .expect("minors are homogeneous");
            d.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, _)| j + 1)
                .collect()
        })
        .collect();
    let cycle = has_nonconstant_label_cycle(&build_label_graph(&family));

    let diag = TermOrder::lex();
    let mut certificate = if lead_coprime_regular_sequence(ideal.gens(), &diag) {
        Some(RegSeqCertificate::LeadCoprime)
    } else {
        None
    };
    if certificate.is_none() && h.s() == m {
        certificate = window_chain_certificate(h);
    }

    let class = if certificate.is_some() && cycle.is_some() {
        HypergraphClass::NotCsByCycle
    } else {
        HypergraphClass::Unknown
    };
    Ok(Classification {
        class,
        forest: None,
        cycle,
        regular_sequence: certificate,
    })
}

/// Regular-sequence certificate in the shape of the obstruction argument:
/// all edges but exactly one are integer windows {j, ..., j+m-1} whose sorted
/// starts differ by more than 1 (their maximal minors form a prime complete
/// intersection), and the leftover edge is a different column set, so its
/// minor lies outside the chain ideal for degree reasons.
fn window_chain_certificate(h: &Hypergraph) -> Option<RegSeqCertificate> {
    let edges: Vec<&Vec<usize>> = h.edges().collect();
    let is_window = |e: &[usize]| e.windows(2).all(|w| w[1] == w[0] + 1);
    let extras: Vec<usize> = (0..edges.len())
        .filter(|&k| !is_window(edges[k]))
        .collect();
    if extras.len() != 1 {
        return None;
    }
    let extra = edges[extras[0]].clone();
    let mut starts: Vec<usize> = edges
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != extras[0])
        .map(|(_, e)| e[0])
        .collect();
    starts.sort_unstable();
    if !starts.windows(2).all(|w| w[1] - w[0] > 1) {
        return None;
    }
    // distinct edges of an s-uniform hypergraph are distinct column sets, so
    // the leftover multidegree automatically differs from every window
    Some(RegSeqCertificate::WindowChainPlusOne {
        windows: starts,
        extra,
    })
}
