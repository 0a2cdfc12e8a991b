//! Coxeter diagrams and the small-graph utilities consumed by the girth and
//! classification arguments.
//!
//! Convention: label 2 encodes a non-edge of the diagram, and infinity is an
//! explicit symbol, never a sentinel integer.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum EdgeLabel {
    Finite(u32),
    Infinity,
}

impl EdgeLabel {
    pub fn finite(&self) -> Option<u32> {
        match self {
            EdgeLabel::Finite(m) => Some(*m),
            EdgeLabel::Infinity => None,
        }
    }

    /// Diagram edges are the pairs with label >= 3.
    pub fn is_edge(&self) -> bool {
        !matches!(self, EdgeLabel::Finite(2))
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Finite(m) => write!(f, "{m}"),
            EdgeLabel::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("label on {0:?}-{1:?} must be >= 2")]
    BadLabel(String, String),
    #[error("self-pair {0:?}")]
    SelfPair(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Labeled simplicial graph seeding every construction in the crate.
///
/// Vertices are ordered; the order fixes ShortLex and every other
/// deterministic tie-break downstream.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterDiagram {
    names: Vec<String>,
    /// labels[i][j] for i < j, defined for every unordered pair.
    labels: BTreeMap<(usize, usize), EdgeLabel>,
}

impl CoxeterDiagram {
    pub fn new(names: &[&str]) -> Result<CoxeterDiagram, DiagramError> {
        let mut seen = BTreeSet::new();
        for n in names {
            if !seen.insert(n.to_string()) {
                return Err(DiagramError::DuplicateVertex(n.to_string()));
            }
        }
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let mut labels = BTreeMap::new();
        for i in 0..names.len() {
            for j in (i + 1)..names.len() {
                labels.insert((i, j), EdgeLabel::Finite(2));
            }
        }
        Ok(CoxeterDiagram { names, labels })
    }

    pub fn set_label(&mut self, u: &str, v: &str, m: EdgeLabel) -> Result<(), DiagramError> {
        if u == v {
            return Err(DiagramError::SelfPair(u.to_string()));
        }
        if let EdgeLabel::Finite(k) = m {
            if k < 2 {
                return Err(DiagramError::BadLabel(u.to_string(), v.to_string()));
            }
        }
        let i = self.vertex_index(u)?;
        let j = self.vertex_index(v)?;
        let key = (i.min(j), i.max(j));
        self.labels.insert(key, m);
        Ok(())
    }

    /// Linear diagram `names[0] - names[1] - ...` with the given consecutive labels.
    pub fn linear(names: &[&str], ms: &[u32]) -> CoxeterDiagram {
        assert_eq!(names.len(), ms.len() + 1);
        let mut d = CoxeterDiagram::new(names).expect("distinct names");
        for (k, &m) in ms.iter().enumerate() {
            d.set_label(names[k], names[k + 1], EdgeLabel::Finite(m))
                .expect("valid label");
        }
        d
    }

    /// Rank-2 diagram I2(m); `None` gives the infinite dihedral diagram.
    pub fn dihedral(m: Option<u32>) -> CoxeterDiagram {
        let mut d = CoxeterDiagram::new(&["a", "b"]).unwrap();
        let label = match m {
            Some(m) => EdgeLabel::Finite(m),
            None => EdgeLabel::Infinity,
        };
        d.set_label("a", "b", label).unwrap();
        d
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, DiagramError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| DiagramError::UnknownVertex(name.to_string()))
    }

    pub fn label(&self, i: usize, j: usize) -> EdgeLabel {
        assert!(i != j, "no self-pairs");
        *self.labels.get(&(i.min(j), i.max(j))).expect("total label map")
    }

    /// Diagram edges (label >= 3) as index pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.labels
            .iter()
            .filter(|(_, l)| l.is_edge())
            .map(|(&p, _)| p)
            .collect()
    }

    pub fn finite_labels(&self) -> Vec<u32> {
        self.labels.values().filter_map(|l| l.finite()).collect()
    }

    pub fn has_infinite_label(&self) -> bool {
        self.labels.values().any(|l| *l == EdgeLabel::Infinity)
    }

    /// Underlying simplicial graph (edges where the label is >= 3).
    pub fn underlying_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.rank());
        for (i, j) in self.edges() {
            g.add_edge(i, j);
        }
        g
    }

    /// Induced subdiagram on a vertex subset (indices into this diagram).
    pub fn induced(&self, verts: &[usize]) -> CoxeterDiagram {
        let names: Vec<&str> = verts.iter().map(|&v| self.names[v].as_str()).collect();
        let mut d = CoxeterDiagram::new(&names).expect("distinct names");
        for a in 0..verts.len() {
            for b in (a + 1)..verts.len() {
                d.labels
                    .insert((a, b), self.label(verts[a], verts[b]));
            }
        }
        d
    }

    /// Stable content hash of the canonical text form.
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(self.to_text().as_bytes());
        let out = h.finalize();
        out.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// Canonical text form: `vertex` lines in declared order, `edge` lines
    /// sorted, labels >= 3 only. Round-trips bit-exact through `parse`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for n in &self.names {
            s.push_str(&format!("vertex {n}\n"));
        }
        for (&(i, j), l) in &self.labels {
            if l.is_edge() {
                s.push_str(&format!("edge {} {} {}\n", self.names[i], self.names[j], l));
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<CoxeterDiagram, DiagramError> {
        let mut names: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String, EdgeLabel)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["vertex", name] => names.push(name.to_string()),
                ["edge", u, v, label] => {
                    let l = if *label == "inf" {
                        EdgeLabel::Infinity
                    } else {
                        let m = label.parse::<u32>().map_err(|_| DiagramError::Parse {
                            line: lineno + 1,
                            msg: format!("bad label {label:?}"),
                        })?;
                        EdgeLabel::Finite(m)
                    };
                    if l == EdgeLabel::Finite(2) {
                        return Err(DiagramError::Parse {
                            line: lineno + 1,
                            msg: "edge lines carry labels >= 3".to_string(),
                        });
                    }
                    edges.push((u.to_string(), v.to_string(), l));
                }
                _ => {
                    return Err(DiagramError::Parse {
                        line: lineno + 1,
                        msg: format!("unrecognized line {line:?}"),
                    })
                }
            }
        }
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut d = CoxeterDiagram::new(&name_refs)?;
        for (u, v, l) in edges {
            d.set_label(&u, &v, l)?;
        }
        Ok(d)
    }
}

/// Finite simplicial graph: no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> SimpleGraph {
        SimpleGraph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n.saturating_sub(1) {
            g.add_edge(u, u + 1);
        }
        g
    }

    /// K_{k,l} on vertices 0..k | k..k+l.
    pub fn complete_bipartite(k: usize, l: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(k + l);
        for u in 0..k {
            for v in k..(k + l) {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        assert!(u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(&v)
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().copied()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    pub fn has_triangle(&self) -> bool {
        for (u, v) in self.edges() {
            if self.adj[u].intersection(&self.adj[v]).next().is_some() {
                return true;
            }
        }
        false
    }

    /// Any 4-cycle subgraph (not necessarily induced): two vertices with two
    /// common neighbours.
    pub fn has_embedded_four_cycle(&self) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u].intersection(&self.adj[v]).count() >= 2 {
                    return true;
                }
            }
        }
        false
    }
}

/// Complement over unordered pairs; an involution.
pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    let mut c = SimpleGraph::new(g.n);
    for u in 0..g.n {
        for v in (u + 1)..g.n {
            if !g.has_edge(u, v) {
                c.add_edge(u, v);
            }
        }
    }
    c
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

/// Length of a shortest embedded cycle; `Infinite` for forests.
///
/// Per-root BFS: the shortest cycle through the BFS root is detected when two
/// distinct branches meet; min over roots is exact.
pub fn girth(g: &SimpleGraph) -> Girth {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut q = VecDeque::new();
        q.push_back(root);
        while let Some(u) = q.pop_front() {
            for v in g.neighbours(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    // non-tree edge: cycle through root of length <= d(u)+d(v)+1
                    let len = dist[u] + dist[v] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    match best {
        Some(b) => Girth::Finite(b),
        None => Girth::Infinite,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriangleFreeClass {
    FiveCycle,
    K23,
    K23Minus,
    K33,
    K33Minus,
}

impl TriangleFreeClass {
    pub fn model(&self) -> SimpleGraph {
        match self {
            TriangleFreeClass::FiveCycle => SimpleGraph::cycle(5),
            TriangleFreeClass::K23 => SimpleGraph::complete_bipartite(2, 3),
            TriangleFreeClass::K23Minus => {
                let mut g = SimpleGraph::complete_bipartite(2, 3);
                g.remove_edge(0, 2);
                g
            }
            TriangleFreeClass::K33 => SimpleGraph::complete_bipartite(3, 3),
            TriangleFreeClass::K33Minus => {
                let mut g = SimpleGraph::complete_bipartite(3, 3);
                g.remove_edge(0, 3);
                g
            }
        }
    }

    pub const ALL: [TriangleFreeClass; 5] = [
        TriangleFreeClass::FiveCycle,
        TriangleFreeClass::K23,
        TriangleFreeClass::K23Minus,
        TriangleFreeClass::K33,
        TriangleFreeClass::K33Minus,
    ];
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("hypotheses hold but graph matches none of the five classes (checker bug)")]
    Unclassified,
}

/// Classification witness: `relabel[model_vertex] = input_vertex`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    pub class: TriangleFreeClass,
    pub relabel: Vec<usize>,
}

/// Classify a graph with >= 5 vertices, no isolated vertices, no triangles,
/// and complement free of embedded 4-cycles as one of the five exceptional
/// graphs, with the lexicographically least isomorphism as witness.
pub fn classify_triangle_free(g: &SimpleGraph) -> Result<Classification, ClassifyError> {
    if g.vertex_count() < 5 {
        return Err(ClassifyError::PreconditionViolated("fewer than 5 vertices"));
    }
    if g.has_isolated_vertex() {
        return Err(ClassifyError::PreconditionViolated("isolated vertex"));
    }
    if g.has_triangle() {
        return Err(ClassifyError::PreconditionViolated("embedded 3-cycle"));
    }
    if complement(g).has_embedded_four_cycle() {
        return Err(ClassifyError::PreconditionViolated(
            "complement has embedded 4-cycle",
        ));
    }
    for class in TriangleFreeClass::ALL {
        let model = class.model();
        if let Some(relabel) = least_isomorphism(&model, g) {
            return Ok(Classification { class, relabel });
        }
    }
    Err(ClassifyError::Unclassified)
}

/// Lex-least bijection `model -> g` that is a graph isomorphism, if any.
fn least_isomorphism(model: &SimpleGraph, g: &SimpleGraph) -> Option<Vec<usize>> {
    if model.vertex_count() != g.vertex_count() {
        return None;
    }
    let n = model.vertex_count();
    let mut assign: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        model: &SimpleGraph,
        g: &SimpleGraph,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = assign.len();
        if k == model.vertex_count() {
            return true;
        }
        for cand in 0..g.vertex_count() {
            if used[cand] {
                continue;
            }
            if model.degree(k) != g.degree(cand) {
                continue;
            }
            let ok = (0..k).all(|prev| model.has_edge(prev, k) == g.has_edge(assign[prev], cand));
            if ok {
                assign.push(cand);
                used[cand] = true;
                if rec(model, g, assign, used) {
                    return true;
                }
                assign.pop();
                used[cand] = false;
            }
        }
        false
    }
    if rec(model, g, &mut assign, &mut used) {
        Some(assign)
    } else {
        None
    }
}

/// Connected components of `g` with a vertex set restricted to `keep` and a
/// vertex `cut` removed.
fn components_without(g: &SimpleGraph, keep: Option<&BTreeSet<usize>>, cut: usize) -> Vec<BTreeSet<usize>> {
    let n = g.vertex_count();
    let in_scope = |v: usize| v != cut && keep.map_or(true, |k| k.contains(&v));
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if !in_scope(start) || seen[start] {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut q = VecDeque::new();
        q.push_back(start);
        seen[start] = true;
        while let Some(u) = q.pop_front() {
            comp.insert(u);
            for v in g.neighbours(u) {
                if in_scope(v) && !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

/// Whether the induced subdiagram on `sub` is admissible in `diagram`:
/// every pair separated by a vertex x inside the subdiagram is separated by x
/// in the whole diagram.
pub fn is_admissible_subdiagram(diagram: &CoxeterDiagram, sub: &[usize]) -> bool {
    let g = diagram.underlying_graph();
    let sub_set: BTreeSet<usize> = sub.iter().copied().collect();
    for &x in sub {
        let comps_in = components_without(&g, Some(&sub_set), x);
        let comps_out = components_without(&g, None, x);
        let comp_of = |v: usize, comps: &[BTreeSet<usize>]| {
            comps.iter().position(|c| c.contains(&v)).expect("vertex in a component")
        };
        for &u in sub {
            for &w in sub {
                if u >= w || u == x || w == x {
                    continue;
                }
                let sep_in = comp_of(u, &comps_in) != comp_of(w, &comps_in);
                if sep_in {
                    let sep_out = comp_of(u, &comps_out) != comp_of(w, &comps_out);
                    if !sep_out {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Irreducible finite-type names plus the composite tags; the catalogue is
/// the standard classification of finite Coxeter groups.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SphericalType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H3,
    H4,
    I2(u32),
    ReducibleSpherical(Vec<SphericalType>),
    NotSpherical,
}

/// Recognize the type of the (possibly reducible) diagram against the finite
/// catalogue. For rank <= 3 this agrees with brute-force enumeration; tests
/// cross-check that.
pub fn spherical_type(diagram: &CoxeterDiagram) -> SphericalType {
    let g = diagram.underlying_graph();
    let n = diagram.rank();
    if n == 0 {
        return SphericalType::ReducibleSpherical(vec![]);
    }
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut q = VecDeque::new();
        q.push_back(start);
        seen[start] = true;
        while let Some(u) = q.pop_front() {
            comp.push(u);
            for v in g.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        match irreducible_type(diagram, &comp) {
            Some(t) => parts.push(t),
            None => return SphericalType::NotSpherical,
        }
    }
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        SphericalType::ReducibleSpherical(parts)
    }
}

fn irreducible_type(diagram: &CoxeterDiagram, comp: &[usize]) -> Option<SphericalType> {
    let n = comp.len();
    if n == 1 {
        return Some(SphericalType::A(1));
    }
    let label = |a: usize, b: usize| diagram.label(comp[a], comp[b]);
    if n == 2 {
        return match label(0, 1) {
            EdgeLabel::Finite(m) => Some(SphericalType::I2(m)),
            EdgeLabel::Infinity => None,
        };
    }
    // Trees only beyond rank 2.
    let edges: Vec<(usize, usize, u32)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .filter_map(|(a, b)| match label(a, b) {
            EdgeLabel::Finite(2) => None,
            EdgeLabel::Finite(m) => Some((a, b, m)),
            EdgeLabel::Infinity => Some((a, b, u32::MAX)),
        })
        .collect();
    if edges.iter().any(|&(_, _, m)| m == u32::MAX) || edges.len() != n - 1 {
        return None; // infinite label, or a cycle in a connected component
    }
    let mut deg = vec![0usize; n];
    for &(a, b, _) in &edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let branch_vertices: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    let heavy: Vec<u32> = edges.iter().map(|&(_, _, m)| m).filter(|&m| m > 3).collect();
    if branch_vertices.len() > 1 || deg.iter().any(|&d| d > 3) || heavy.len() > 1 {
        return None;
    }
    if branch_vertices.is_empty() {
        // Path; order it from one end.
        let seq = path_labels(&edges, &deg, n)?;
        return match (n, seq.as_slice()) {
            (_, s) if s.iter().all(|&m| m == 3) => Some(SphericalType::A(n)),
            (_, s) if s[0] == 4 && s[1..].iter().all(|&m| m == 3) => Some(SphericalType::B(n)),
            (_, s) if *s.last().unwrap() == 4 && s[..n - 2].iter().all(|&m| m == 3) => {
                Some(SphericalType::B(n))
            }
            (3, [5, 3]) | (3, [3, 5]) => Some(SphericalType::H3),
            (4, [5, 3, 3]) | (4, [3, 3, 5]) => Some(SphericalType::H4),
            (4, [3, 4, 3]) => Some(SphericalType::F4),
            _ => None,
        };
    }
    // One branch vertex of degree 3: D or E shapes, all labels 3.
    if heavy.first().is_some() {
        return None;
    }
    let b = branch_vertices[0];
    let mut arms = arm_lengths(&edges, n, b);
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, k] => Some(SphericalType::D(k + 3)),
        [1, 2, 2] => Some(SphericalType::E(6)),
        [1, 2, 3] => Some(SphericalType::E(7)),
        [1, 2, 4] => Some(SphericalType::E(8)),
        _ => None,
    }
}

fn path_labels(edges: &[(usize, usize, u32)], deg: &[usize], n: usize) -> Option<Vec<u32>> {
    let start = (0..n).find(|&v| deg[v] == 1)?;
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for &(a, b, m) in edges {
        adj[a].push((b, m));
        adj[b].push((a, m));
    }
    let mut seq = Vec::new();
    let mut prev = usize::MAX;
    let mut cur = start;
    while seq.len() < n - 1 {
        let &(next, m) = adj[cur].iter().find(|&&(v, _)| v != prev)?;
        seq.push(m);
        prev = cur;
        cur = next;
    }
    Some(seq)
}

fn arm_lengths(edges: &[(usize, usize, u32)], n: usize, b: usize) -> Vec<usize> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(x, y, _) in edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    adj[b]
        .iter()
        .map(|&first| {
            let mut len = 1;
            let mut prev = b;
            let mut cur = first;
            while let Some(&next) = adj[cur].iter().find(|&&v| v != prev) {
                len += 1;
                prev = cur;
                cur = next;
            }
            len
        })
        .collect()
}

/// Maximal sizes of spherical vertex subsets; informational only (used by the
/// CLI report).
pub fn max_spherical_subset_size(diagram: &CoxeterDiagram) -> usize {
    let n = diagram.rank();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if verts.len() <= best {
            continue;
        }
        let sub = diagram.induced(&verts);
        if spherical_type(&sub) != SphericalType::NotSpherical {
            best = verts.len();
        }
    }
    best
}
