//! 353-square complexes: the five local axioms, simple connectivity, cube
//! corners, minimal disc diagrams, thickenings, and the layer-peeling
//! contractibility engine with its homology oracle.

pub mod disc;
pub mod peel;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use thiserror::Error;

pub use disc::{
    corner_diagram, diagram_hyperplanes, gauss_bonnet, grid_diagram, strip_diagram,
    AngleAssignment, CurvatureConvention, CurvatureReport, DiagramHyperplane, DiscDiagram,
};
pub use peel::{contract_by_peeling, replay_trace, CollapseStep, FailureReport, PeelTrace};

pub use crate::homology::{homology, Coefficients, Homology};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SquareError {
    #[error("vertex {0:?} is unknown")]
    UnknownVertex(String),
    #[error("edge {0}-{1} joins two vertices on the same side")]
    NotBipartite(usize, usize),
    #[error("square {0:?} is not an embedded alternating 4-cycle")]
    BadSquare([usize; 4]),
    #[error("duplicate square {0:?}")]
    DuplicateSquare([usize; 4]),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    D,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::D,
            Side::D => Side::A,
        }
    }
}

/// Bipartite square complex: simplicial bipartite graph plus marked squares
/// (embedded alternating 4-cycles). Not every 4-cycle need be a square.
#[derive(Clone, Debug)]
pub struct SquareComplex {
    names: Vec<String>,
    side: Vec<Side>,
    adj: Vec<BTreeSet<usize>>,
    /// canonical form: [x0, y0, x1, y1] with {x0,x1}, {y0,y1} the diagonals,
    /// x0 = min(x0,x1), y0 = min(y0,y1)
    squares: Vec<[usize; 4]>,
    square_set: BTreeSet<[usize; 4]>,
}

pub fn canonical_square(cycle: [usize; 4]) -> [usize; 4] {
    let (x0, x1) = (cycle[0].min(cycle[2]), cycle[0].max(cycle[2]));
    let (y0, y1) = (cycle[1].min(cycle[3]), cycle[1].max(cycle[3]));
    [x0, y0, x1, y1]
}

impl SquareComplex {
    pub fn new() -> SquareComplex {
        SquareComplex {
            names: Vec::new(),
            side: Vec::new(),
            adj: Vec::new(),
            squares: Vec::new(),
            square_set: BTreeSet::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str, side: Side) -> usize {
        self.names.push(name.to_string());
        self.side.push(side);
        self.adj.push(BTreeSet::new());
        self.names.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), SquareError> {
        if self.side[u] == self.side[v] {
            return Err(SquareError::NotBipartite(u, v));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Mark the 4-cycle v0 v1 v2 v3 as a square (its edges are added).
    pub fn add_square(&mut self, cycle: [usize; 4]) -> Result<(), SquareError> {
        let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
        if distinct.len() != 4
            || self.side[cycle[0]] != self.side[cycle[2]]
            || self.side[cycle[1]] != self.side[cycle[3]]
            || self.side[cycle[0]] == self.side[cycle[1]]
        {
            return Err(SquareError::BadSquare(cycle));
        }
        for i in 0..4 {
            self.add_edge(cycle[i], cycle[(i + 1) % 4])?;
        }
        let canon = canonical_square(cycle);
        if !self.square_set.insert(canon) {
            return Err(SquareError::DuplicateSquare(canon));
        }
        self.squares.push(canon);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn side_of(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn vertices_of_side(&self, side: Side) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.side[v] == side).collect()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<usize, SquareError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| SquareError::UnknownVertex(name.to_string()))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(&v)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn squares(&self) -> &[[usize; 4]] {
        &self.squares
    }

    pub fn is_square(&self, cycle: [usize; 4]) -> bool {
        self.square_set.contains(&canonical_square(cycle))
    }

    /// Fourth corners of marked squares containing the 2-path x - y - z.
    pub fn square_across(&self, x: usize, y: usize, z: usize) -> Vec<usize> {
        if x == z || !self.has_edge(x, y) || !self.has_edge(y, z) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for &t in &self.adj[x] {
            if t != y && self.adj[z].contains(&t) && self.is_square([y, x, t, z]) {
                out.push(t);
            }
        }
        out
    }

    /// Vertices on the same side sharing a square.
    pub fn close(&self, u: usize, v: usize) -> bool {
        if u == v || self.side[u] != self.side[v] {
            return false;
        }
        self.squares.iter().any(|sq| {
            (sq[0] == u.min(v) && sq[2] == u.max(v)) || (sq[1] == u.min(v) && sq[3] == u.max(v))
        })
    }

    /// All embedded 4-cycles (marked or not), canonically.
    pub fn all_four_cycles(&self) -> Vec<[usize; 4]> {
        let mut out = BTreeSet::new();
        let n = self.vertex_count();
        for x0 in 0..n {
            for x1 in (x0 + 1)..n {
                if self.side[x0] != self.side[x1] {
                    continue;
                }
                let common: Vec<usize> =
                    self.adj[x0].intersection(&self.adj[x1]).copied().collect();
                for i in 0..common.len() {
                    for j in (i + 1)..common.len() {
                        out.insert([x0, common[i], x1, common[j]]);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// The same complex with the two sides swapped.
    pub fn swapped(&self) -> SquareComplex {
        let mut c = self.clone();
        for s in c.side.iter_mut() {
            *s = s.flip();
        }
        c
    }

    /// Text format: `A <name>` / `D <name>` vertex lines, `edge a d` for
    /// edges outside every square, `square a d a' d'`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in 0..self.vertex_count() {
            let tag = match self.side[v] {
                Side::A => "A",
                Side::D => "D",
            };
            s.push_str(&format!("{tag} {}\n", self.names[v]));
        }
        let mut square_edges = BTreeSet::new();
        for sq in &self.squares {
            for (a, b) in square_edge_pairs(sq) {
                square_edges.insert((a.min(b), a.max(b)));
            }
        }
        for (u, v) in self.edges() {
            if !square_edges.contains(&(u, v)) {
                let (a, d) = if self.side[u] == Side::A { (u, v) } else { (v, u) };
                s.push_str(&format!("edge {} {}\n", self.names[a], self.names[d]));
            }
        }
        for sq in &self.squares {
            s.push_str(&format!(
                "square {} {} {} {}\n",
                self.names[sq[0]], self.names[sq[1]], self.names[sq[2]], self.names[sq[3]]
            ));
        }
        s
    }

    pub fn parse(text: &str) -> Result<SquareComplex, SquareError> {
        let mut c = SquareComplex::new();
        let mut pending_edges = Vec::new();
        let mut pending_squares = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| SquareError::Parse {
                line: lineno + 1,
                msg,
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["A", name] => {
                    c.add_vertex(name, Side::A);
                }
                ["D", name] => {
                    c.add_vertex(name, Side::D);
                }
                ["edge", a, d] => pending_edges.push((a.to_string(), d.to_string())),
                ["square", a, d, a2, d2] => {
                    pending_squares.push([a.to_string(), d.to_string(), a2.to_string(), d2.to_string()])
                }
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }
        for (a, d) in pending_edges {
            let u = c.vertex_by_name(&a)?;
            let v = c.vertex_by_name(&d)?;
            c.add_edge(u, v)?;
        }
        for sq in pending_squares {
            let ids = [
                c.vertex_by_name(&sq[0])?,
                c.vertex_by_name(&sq[1])?,
                c.vertex_by_name(&sq[2])?,
                c.vertex_by_name(&sq[3])?,
            ];
            c.add_square(ids)?;
        }
        Ok(c)
    }

    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(self.to_text().as_bytes());
        let out = h.finalize();
        out.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

impl Default for SquareComplex {
    fn default() -> Self {
        SquareComplex::new()
    }
}

fn square_edge_pairs(sq: &[usize; 4]) -> [(usize, usize); 4] {
    [
        (sq[0], sq[1]),
        (sq[1], sq[2]),
        (sq[2], sq[3]),
        (sq[3], sq[0]),
    ]
}

/// Verdict of a budgeted check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
    Indeterminate,
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// A cube corner mapped into X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeCornerInX {
    pub centre: usize,
    pub squares: [usize; 3],
    /// the three centre-adjacent boundary vertices
    pub mids: [usize; 3],
    /// boundary 6-cycle [p, x, q, y, r, z] with mids x, y, z
    pub boundary: [usize; 6],
    pub minimal: Option<bool>,
}

/// All cube-corner maps into X (up to the corner's automorphisms), with
/// minimality decided by disc search of area <= 2 over the boundary 6-cycle.
pub fn cube_corners(x: &SquareComplex, decide_minimality: bool) -> Vec<CubeCornerInX> {
    let mut seen: BTreeSet<(usize, [usize; 3])> = BTreeSet::new();
    let mut out = Vec::new();
    for c in 0..x.vertex_count() {
        // (square index, its two centre-adjacent vertices, outer corner)
        let through: Vec<(usize, usize, usize, usize)> = x
            .squares()
            .iter()
            .enumerate()
            .filter_map(|(i, sq)| {
                let [a0, d0, a1, d1] = *sq;
                if a0 == c {
                    Some((i, d0, d1, a1))
                } else if a1 == c {
                    Some((i, d0, d1, a0))
                } else if d0 == c {
                    Some((i, a0, a1, d1))
                } else if d1 == c {
                    Some((i, a0, a1, d0))
                } else {
                    None
                }
            })
            .collect();
        for (i1, s1) in through.iter().enumerate() {
            for (i2, s2) in through.iter().enumerate().skip(i1 + 1) {
                for s3 in through.iter().skip(i2 + 1) {
                    let shared = |a: &(usize, usize, usize, usize),
                                  b: &(usize, usize, usize, usize)|
                     -> Option<usize> {
                        let common: Vec<usize> = [a.1, a.2]
                            .into_iter()
                            .filter(|v| *v == b.1 || *v == b.2)
                            .collect();
                        if common.len() == 1 {
                            Some(common[0])
                        } else {
                            None
                        }
                    };
                    let (Some(xm), Some(ym), Some(zm)) =
                        (shared(s1, s2), shared(s2, s3), shared(s3, s1))
                    else {
                        continue;
                    };
                    if xm == ym || ym == zm || xm == zm {
                        continue;
                    }
                    let mut key_sq = [s1.0, s2.0, s3.0];
                    key_sq.sort_unstable();
                    if !seen.insert((c, key_sq)) {
                        continue;
                    }
                    let (p, q, r) = (s1.3, s2.3, s3.3);
                    // s1 holds {xm, zm}, s2 {xm, ym}, s3 {ym, zm}
                    let boundary = [p, xm, q, ym, r, zm];
                    let minimal = if decide_minimality {
                        let found = minimal_disc_diagram(x, &boundary, 2);
                        Some(!matches!(found, DiscSearch::Found(_)))
                    } else {
                        None
                    };
                    out.push(CubeCornerInX {
                        centre: c,
                        squares: key_sq,
                        mids: [xm, ym, zm],
                        boundary,
                        minimal,
                    });
                }
            }
        }
    }
    out
}

/// Outcome of the budgeted minimal-disc search.
#[derive(Clone, Debug)]
pub enum DiscSearch {
    Found(DiscDiagram),
    Indeterminate,
}

#[derive(Clone, Debug)]
enum SearchMove {
    /// fold the spur at boundary position i (middle of u v u)
    Fold(usize),
    /// attach a square along the arc starting at boundary position pos
    Attach {
        pos: usize,
        arity: usize,
        fourth: usize,
    },
}

fn canonical_cycle(cycle: &[usize]) -> (Vec<usize>, usize, bool) {
    if cycle.is_empty() {
        return (Vec::new(), 0, false);
    }
    let n = cycle.len();
    let mut best: Option<(Vec<usize>, usize, bool)> = None;
    for rev in [false, true] {
        let c: Vec<usize> = if rev {
            cycle.iter().rev().copied().collect()
        } else {
            cycle.to_vec()
        };
        for r in 0..n {
            let rot: Vec<usize> = (0..n).map(|i| c[(i + r) % n]).collect();
            if best.as_ref().map_or(true, |(b, _, _)| rot < *b) {
                best = Some((rot, r, rev));
            }
        }
    }
    best.unwrap()
}

fn apply_cycle_map(items: &[usize], r: usize, rev: bool) -> Vec<usize> {
    let n = items.len();
    let c: Vec<usize> = if rev {
        items.iter().rev().copied().collect()
    } else {
        items.to_vec()
    };
    (0..n).map(|i| c[(i + r) % n]).collect()
}

/// Minimal-area disc diagram with the given boundary cycle, searched by
/// 0-1 BFS on area: square attachments glue along boundary arcs of length
/// 2, 3, or 4 and spurs fold freely. `Indeterminate` when no filling exists
/// within the area budget. The returned diagram is verified reduced.
pub fn minimal_disc_diagram(x: &SquareComplex, boundary: &[usize], budget: usize) -> DiscSearch {
    let (start, _, _) = canonical_cycle(boundary);
    let mut dist: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut parent: HashMap<Vec<usize>, (Vec<usize>, SearchMove)> = HashMap::new();
    let mut dq: VecDeque<(usize, Vec<usize>)> = VecDeque::new();
    dist.insert(start.clone(), 0);
    dq.push_back((0, start.clone()));
    let mut reached_goal = false;
    while let Some((d0, state)) = dq.pop_front() {
        if dist.get(&state) != Some(&d0) {
            continue;
        }
        if state.is_empty() {
            reached_goal = true;
            break;
        }
        for (cost, raw_next, mv) in search_moves(x, &state) {
            let nd = d0 + cost;
            if nd > budget {
                continue;
            }
            let (canon, _, _) = canonical_cycle(&raw_next);
            if dist.get(&canon).map_or(true, |&old| nd < old) {
                dist.insert(canon.clone(), nd);
                parent.insert(canon.clone(), (state.clone(), mv));
                if cost == 0 {
                    dq.push_front((nd, canon));
                } else {
                    dq.push_back((nd, canon));
                }
            }
        }
    }
    if !reached_goal {
        return DiscSearch::Indeterminate;
    }
    // move chain from start to empty
    let mut chain: Vec<(Vec<usize>, SearchMove)> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    while cur != start {
        let (prev, mv) = parent.get(&cur).expect("parent chain").clone();
        chain.push((prev.clone(), mv));
        cur = prev;
    }
    chain.reverse();
    let diagram = replay_search(x, boundary, &chain);
    DiscSearch::Found(diagram)
}

fn search_moves(x: &SquareComplex, state: &[usize]) -> Vec<(usize, Vec<usize>, SearchMove)> {
    let n = state.len();
    let mut out = Vec::new();
    if n == 2 {
        // a doubled edge sews shut
        out.push((0, Vec::new(), SearchMove::Fold(0)));
        return out;
    }
    for i in 0..n {
        let prev = state[(i + n - 1) % n];
        let next = state[(i + 1) % n];
        if prev == next && n >= 4 {
            let mut reduced = Vec::with_capacity(n - 2);
            for (j, &v) in state.iter().enumerate() {
                if j != i && j != (i + 1) % n {
                    reduced.push(v);
                }
            }
            out.push((0, reduced, SearchMove::Fold(i)));
        }
    }
    for pos in 0..n {
        let u = state[pos];
        let v = state[(pos + 1) % n];
        let w = state[(pos + 2) % n];
        if u != w {
            for &t in &x.square_across(u, v, w) {
                let mut nextb = state.to_vec();
                nextb[(pos + 1) % n] = t;
                out.push((
                    1,
                    nextb,
                    SearchMove::Attach {
                        pos,
                        arity: 2,
                        fourth: t,
                    },
                ));
            }
        }
        if n >= 6 {
            let t = state[(pos + 3) % n];
            let distinct: BTreeSet<usize> = [u, v, w, t].into_iter().collect();
            if distinct.len() == 4 && x.is_square([u, v, w, t]) {
                let skip1 = (pos + 1) % n;
                let skip2 = (pos + 2) % n;
                let mut nextb = Vec::with_capacity(n - 2);
                for (j, &vv) in state.iter().enumerate() {
                    if j != skip1 && j != skip2 {
                        nextb.push(vv);
                    }
                }
                out.push((
                    1,
                    nextb,
                    SearchMove::Attach {
                        pos,
                        arity: 3,
                        fourth: t,
                    },
                ));
            }
        }
        if n == 4 && pos == 0 {
            let t = state[3];
            let distinct: BTreeSet<usize> = [u, v, w, t].into_iter().collect();
            if distinct.len() == 4 && x.is_square([u, v, w, t]) {
                out.push((
                    1,
                    Vec::new(),
                    SearchMove::Attach {
                        pos,
                        arity: 4,
                        fourth: t,
                    },
                ));
            }
        }
    }
    out
}

/// Rebuild an explicit labelled diagram from the move chain. Domain vertices
/// are fresh copies; folds identify them through a union-find.
fn replay_search(
    x: &SquareComplex,
    boundary: &[usize],
    chain: &[(Vec<usize>, SearchMove)],
) -> DiscDiagram {
    let mut labels: Vec<usize> = Vec::new();
    let mut dsu: Vec<usize> = Vec::new();
    fn find(d: &mut Vec<usize>, v: usize) -> usize {
        if d[v] != v {
            let r = find(d, d[v]);
            d[v] = r;
        }
        d[v]
    }
    let mut fresh = |label: usize, labels: &mut Vec<usize>, dsu: &mut Vec<usize>| -> usize {
        labels.push(label);
        dsu.push(labels.len() - 1);
        labels.len() - 1
    };
    // align the domain boundary with the canonical form of the input cycle
    let (_, r, rev) = canonical_cycle(boundary);
    let dom_initial: Vec<usize> = boundary
        .iter()
        .map(|&l| fresh(l, &mut labels, &mut dsu))
        .collect();
    let mut dom: Vec<usize> = apply_cycle_map(&dom_initial, r, rev);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (state, mv) in chain {
        debug_assert_eq!(
            dom.iter().map(|&dv| labels[find(&mut dsu, dv)]).collect::<Vec<_>>(),
            *state
        );
        let n = state.len();
        match *mv {
            SearchMove::Fold(i) if n == 2 => {
                dom.clear();
            }
            SearchMove::Fold(i) => {
                let a = dom[(i + n - 1) % n];
                let b = dom[(i + 1) % n];
                let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
                if ra != rb {
                    dsu[ra] = rb;
                }
                let skip1 = i;
                let skip2 = (i + 1) % n;
                dom = dom
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip1 && *j != skip2)
                    .map(|(_, &v)| v)
                    .collect();
            }
            SearchMove::Attach { pos, arity: 2, fourth } => {
                let du = dom[pos];
                let dv = dom[(pos + 1) % n];
                let dw = dom[(pos + 2) % n];
                let dt = fresh(fourth, &mut labels, &mut dsu);
                cells.push(vec![du, dv, dw, dt]);
                dom[(pos + 1) % n] = dt;
            }
            SearchMove::Attach { pos, arity: 3, .. } => {
                let du = dom[pos];
                let dv = dom[(pos + 1) % n];
                let dw = dom[(pos + 2) % n];
                let dt = dom[(pos + 3) % n];
                cells.push(vec![du, dv, dw, dt]);
                let skip1 = (pos + 1) % n;
                let skip2 = (pos + 2) % n;
                dom = dom
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip1 && *j != skip2)
                    .map(|(_, &v)| v)
                    .collect();
            }
            SearchMove::Attach { arity: 4, .. } => {
                cells.push(vec![dom[0], dom[1], dom[2], dom[3]]);
                dom.clear();
            }
        }
        // re-canonicalize the domain alignment to match the next state
        if !dom.is_empty() {
            let labelled: Vec<usize> = dom.iter().map(|&dv| labels[find(&mut dsu, dv)]).collect();
            let (_, r, rev) = canonical_cycle(&labelled);
            dom = apply_cycle_map(&dom, r, rev);
        }
    }
    // compress the domain
    let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
    let mut final_labels: Vec<usize> = Vec::new();
    let mut compress = |v: usize, dsu: &mut Vec<usize>, remap: &mut BTreeMap<usize, usize>, final_labels: &mut Vec<usize>, labels: &Vec<usize>| -> usize {
        let root = find(dsu, v);
        if let Some(&id) = remap.get(&root) {
            return id;
        }
        let id = final_labels.len();
        final_labels.push(labels[root]);
        remap.insert(root, id);
        id
    };
    let cells: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| {
            c.iter()
                .map(|&v| compress(v, &mut dsu, &mut remap, &mut final_labels, &labels))
                .collect()
        })
        .collect();
    let boundary_dom: Vec<usize> = dom_initial
        .iter()
        .map(|&v| compress(v, &mut dsu, &mut remap, &mut final_labels, &labels))
        .collect();
    let d = DiscDiagram::new(final_labels.len(), cells, boundary_dom, None)
        .with_labels(final_labels);
    d.verify().expect("search diagrams are planar and contractible");
    assert!(is_reduced(x, &d), "minimal diagrams must be reduced");
    d
}

/// Local injectivity off the vertices: no two cells sharing an edge fold
/// onto each other (mirror-equal labels).
pub fn is_reduced(x: &SquareComplex, d: &DiscDiagram) -> bool {
    let _ = x;
    let labels = d.labels.as_ref().expect("labelled diagram");
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (ci, cell) in d.cells.iter().enumerate() {
        for i in 0..cell.len() {
            let (a, b) = (cell[i], cell[(i + 1) % cell.len()]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(ci);
        }
    }
    for (&(a, b), cs) in &by_edge {
        if cs.len() != 2 {
            continue;
        }
        let (c1, c2) = (&d.cells[cs[0]], &d.cells[cs[1]]);
        if cs[0] == cs[1] {
            return false;
        }
        // mirror fold: the two cells agree on labels after reflecting
        // across the shared edge
        let other1 = mirror_partner(c1, a, b);
        let other2 = mirror_partner(c2, a, b);
        if let (Some((p1, q1)), Some((p2, q2))) = (other1, other2) {
            if labels[p1] == labels[p2] && labels[q1] == labels[q2] {
                return false;
            }
        }
    }
    true
}

/// For a square cell containing edge (a, b): the neighbours of a and b away
/// from the edge, as (neighbour of a, neighbour of b).
fn mirror_partner(cell: &[usize], a: usize, b: usize) -> Option<(usize, usize)> {
    let n = cell.len();
    for i in 0..n {
        let (u, v) = (cell[i], cell[(i + 1) % n]);
        if (u == a && v == b) || (u == b && v == a) {
            let before = cell[(i + n - 1) % n];
            let after = cell[(i + 2) % n];
            let (na, nb) = if u == a { (before, after) } else { (after, before) };
            return Some((na, nb));
        }
    }
    None
}

/// Per-axiom verdicts of the 353-square-complex definition.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    /// doubled squares close up: fails with (d, a, a', d1, d2)
    pub axiom1: Verdict<(usize, usize, usize, usize, usize)>,
    /// no square through the two outer corners at a two-square corner vertex
    pub axiom2: Verdict<(usize, usize, usize, usize)>,
    /// the extension square condition at cube corners
    pub axiom3: Verdict<(usize, usize, usize)>,
    /// the ten-cycle replacement condition
    pub axiom4: Verdict<usize>,
    /// all of the above with the sides interchanged
    pub axiom5: Box<Option<AxiomReport>>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.axiom1.holds()
            && self.axiom2.holds()
            && self.axiom3.holds()
            && self.axiom4.holds()
            && self
                .axiom5
                .as_ref()
                .as_ref()
                .map_or(true, |r| r.all_hold())
    }

    pub fn summary(&self) -> String {
        fn tag<W>(v: &Verdict<W>) -> &'static str {
            match v {
                Verdict::Holds => "holds",
                Verdict::Fails(_) => "fails",
                Verdict::Indeterminate => "indeterminate",
            }
        }
        let mut s = format!(
            "(1) {} (2) {} (3) {} (4) {}",
            tag(&self.axiom1),
            tag(&self.axiom2),
            tag(&self.axiom3),
            tag(&self.axiom4)
        );
        if let Some(sw) = self.axiom5.as_ref() {
            s.push_str(&format!(
                " swapped: (1) {} (2) {} (3) {} (4) {}",
                tag(&sw.axiom1),
                tag(&sw.axiom2),
                tag(&sw.axiom3),
                tag(&sw.axiom4)
            ));
        }
        s
    }
}

/// Check axioms (1)-(4) and, through `swapped`, the symmetric clause (5).
pub fn check_axioms(x: &SquareComplex, budget: usize) -> AxiomReport {
    let mut report = check_axioms_one_side(x, budget);
    let swapped = check_axioms_one_side(&x.swapped(), budget);
    report.axiom5 = Box::new(Some(swapped));
    report
}

fn check_axioms_one_side(x: &SquareComplex, budget: usize) -> AxiomReport {
    AxiomReport {
        axiom1: check_axiom1(x),
        axiom2: check_axiom2(x),
        axiom3: check_axiom3(x),
        axiom4: check_axiom4(x, budget),
        axiom5: Box::new(None),
    }
}

/// (1) If d a d1 a' and d a d2 a' are squares then d1 a d2 a' is a square.
fn check_axiom1(x: &SquareComplex) -> Verdict<(usize, usize, usize, usize, usize)> {
    // group squares by (corner d, diagonal pair {a, a'})
    let mut by_corner: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
    for sq in x.squares() {
        let [p0, q0, p1, q1] = *sq;
        for (corner, diag, far) in [
            (q0, (p0, p1), q1),
            (q1, (p0, p1), q0),
            (p0, (q0, q1), p1),
            (p1, (q0, q1), p0),
        ] {
            by_corner
                .entry((corner, diag.0, diag.1))
                .or_default()
                .push(far);
        }
    }
    for (&(d, a, a2), fars) in &by_corner {
        for i in 0..fars.len() {
            for j in (i + 1)..fars.len() {
                let (d1, d2) = (fars[i], fars[j]);
                if d1 != d2 && !x.is_square([d1, a, d2, a2]) {
                    return Verdict::Fails((d, a, a2, d1, d2));
                }
            }
        }
    }
    Verdict::Holds
}

/// Configuration at a minimal cube corner: a vertex of the boundary adjacent
/// to the centre lies in exactly two of the corner's squares.
struct TwoSquareVertex {
    /// the mid vertex d
    mid: usize,
    centre: usize,
    /// outer corners of the two squares through mid
    outer: (usize, usize),
    /// remaining mids of those two squares
    other_mids: (usize, usize),
}

fn two_square_vertices(corner: &CubeCornerInX) -> Vec<TwoSquareVertex> {
    let [xm, ym, zm] = corner.mids;
    let [p, _x, q, _y, r, _z] = corner.boundary;
    // boundary [p, xm, q, ym, r, zm]; squares: s1 = (c, xm, p, zm),
    // s2 = (c, xm, q, ym), s3 = (c, ym, r, zm)
    vec![
        TwoSquareVertex {
            mid: xm,
            centre: corner.centre,
            outer: (p, q),
            other_mids: (zm, ym),
        },
        TwoSquareVertex {
            mid: ym,
            centre: corner.centre,
            outer: (q, r),
            other_mids: (xm, zm),
        },
        TwoSquareVertex {
            mid: zm,
            centre: corner.centre,
            outer: (r, p),
            other_mids: (ym, xm),
        },
    ]
}

/// (2) at a minimal cube corner, the two outer corners a1, a2 over a
/// two-square vertex d admit no square d' a1 d a2.
fn check_axiom2(x: &SquareComplex) -> Verdict<(usize, usize, usize, usize)> {
    for corner in cube_corners(x, true) {
        if corner.minimal != Some(true) {
            continue;
        }
        for cfg in two_square_vertices(&corner) {
            let (a1, a2) = cfg.outer;
            for dp in x.square_across(a1, cfg.mid, a2) {
                return Verdict::Fails((dp, a1, cfg.mid, a2));
            }
        }
    }
    Verdict::Holds
}

/// (3) at a minimal cube corner, if a' != a extends both outer corners then
/// a' neighbours the other mids and the two closing squares are present.
fn check_axiom3(x: &SquareComplex) -> Verdict<(usize, usize, usize)> {
    for corner in cube_corners(x, true) {
        if corner.minimal != Some(true) {
            continue;
        }
        for cfg in two_square_vertices(&corner) {
            let (a1, a2) = cfg.outer;
            let d = cfg.mid;
            let a = cfg.centre;
            let (d1, d2) = cfg.other_mids;
            // candidates a' with a1 d a' and a2 d a' in squares
            for ap in x.neighbours(d) {
                if ap == a || ap == a1 || ap == a2 {
                    continue;
                }
                let ext1 = !x.square_across(a1, d, ap).is_empty();
                let ext2 = !x.square_across(a2, d, ap).is_empty();
                if ext1 && ext2 {
                    let ok = x.has_edge(ap, d1)
                        && x.has_edge(ap, d2)
                        && x.is_square([a, d, ap, d1])
                        && x.is_square([a, d, ap, d2]);
                    if !ok {
                        return Verdict::Fails((d, a, ap));
                    }
                }
            }
        }
    }
    Verdict::Holds
}

/// The flower complex E of axiom (4): hub d, petals a_1..a_5, rim d_1..d_5
/// and outer a'_1..a'_5, ten squares; and the wheel E' with hub a'.
pub fn axiom4_flower() -> SquareComplex {
    let mut e = SquareComplex::new();
    let hub = e.add_vertex("d", Side::D);
    let a: Vec<usize> = (0..5).map(|i| e.add_vertex(&format!("a{i}"), Side::A)).collect();
    let d: Vec<usize> = (0..5).map(|i| e.add_vertex(&format!("d{i}"), Side::D)).collect();
    let ap: Vec<usize> = (0..5).map(|i| e.add_vertex(&format!("ap{i}"), Side::A)).collect();
    for i in 0..5 {
        let j = (i + 1) % 5;
        // radial square (a_i, hub, a_j, d_j) and outer (a_i, d_j, a'_i, d_i)
        e.add_square([a[i], hub, a[j], d[j]]).unwrap();
        e.add_square([a[i], d[j], ap[i], d[i]]).unwrap();
    }
    e
}

pub fn axiom4_wheel() -> SquareComplex {
    let mut w = SquareComplex::new();
    let hub = w.add_vertex("aprime", Side::A);
    let d: Vec<usize> = (0..5).map(|i| w.add_vertex(&format!("d{i}"), Side::D)).collect();
    let ap: Vec<usize> = (0..5).map(|i| w.add_vertex(&format!("ap{i}"), Side::A)).collect();
    for i in 0..5 {
        let j = (i + 1) % 5;
        w.add_square([hub, d[i], ap[i], d[j]]).unwrap();
    }
    w
}

/// (4) every flower diagram with minimal corners extends to a wheel with the
/// same boundary whose hub neighbours the flower's hub image.
fn check_axiom4(x: &SquareComplex, budget: usize) -> Verdict<usize> {
    let e = axiom4_flower();
    let maps = match enumerate_flower_maps(x, &e, budget) {
        Some(maps) => maps,
        None => return Verdict::Indeterminate,
    };
    let hub = 0usize;
    'maps: for f in maps {
        // corner minimality: corners of E sit at the petals a_i with
        // boundary (a_{i-1}... in X-image terms the 6-cycle around petal i
        let mut all_minimal = true;
        for i in 0..5usize {
            let j = (i + 1) % 5;
            let prev = (i + 4) % 5;
            // petal corner boundary: images of (a_{i-1}, d, a_{i+1}, d_{i+1}, a'_i, d_i)
            let bd = [
                f[1 + prev],
                f[hub],
                f[1 + j],
                f[6 + j],
                f[11 + i],
                f[6 + i],
            ];
            if matches!(minimal_disc_diagram(x, &bd, 2), DiscSearch::Found(_)) {
                all_minimal = false;
                break;
            }
        }
        if !all_minimal {
            continue;
        }
        // boundary of E: d_i and a'_i images; search a wheel hub
        for cand in 0..x.vertex_count() {
            if x.side_of(cand) != x.side_of(f[1]) {
                continue;
            }
            if !x.has_edge(cand, f[hub]) {
                continue;
            }
            let mut ok = true;
            for i in 0..5usize {
                let j = (i + 1) % 5;
                if !x.is_square([cand, f[6 + i], f[11 + i], f[6 + j]]) {
                    ok = false;
                    break;
                }
            }
            if ok {
                continue 'maps;
            }
        }
        return Verdict::Fails(f[hub]);
    }
    Verdict::Holds
}

/// All side-preserving combinatorial maps of the flower into X, by
/// backtracking over its vertices; `None` when the budget is exhausted.
fn enumerate_flower_maps(
    x: &SquareComplex,
    e: &SquareComplex,
    budget: usize,
) -> Option<Vec<Vec<usize>>> {
    // vertex order: hub, a_0..a_4, d_0..d_4, ap_0..ap_4 (ids in e)
    let n = e.vertex_count();
    let mut maps = Vec::new();
    let mut assign: Vec<usize> = Vec::new();
    let mut steps = 0usize;
    fn rec(
        x: &SquareComplex,
        e: &SquareComplex,
        assign: &mut Vec<usize>,
        maps: &mut Vec<Vec<usize>>,
        steps: &mut usize,
        budget: usize,
    ) -> bool {
        if *steps > budget {
            return false;
        }
        let k = assign.len();
        if k == e.vertex_count() {
            maps.push(assign.clone());
            return true;
        }
        'cand: for cand in 0..x.vertex_count() {
            if x.side_of(cand) != e.side_of(k) {
                continue;
            }
            *steps += 1;
            if *steps > budget {
                return false;
            }
            for prev in 0..k {
                if e.has_edge(prev, k) && !x.has_edge(assign[prev], cand) {
                    continue 'cand;
                }
            }
            // squares fully assigned must be marked in X
            for sq in e.squares() {
                if sq.iter().all(|&v| v < k || v == k) && sq.contains(&k) {
                    let img = [
                        if sq[0] == k { cand } else { assign[sq[0]] },
                        if sq[1] == k { cand } else { assign[sq[1]] },
                        if sq[2] == k { cand } else { assign[sq[2]] },
                        if sq[3] == k { cand } else { assign[sq[3]] },
                    ];
                    let distinct: BTreeSet<usize> = img.iter().copied().collect();
                    if distinct.len() == 4 && !x.is_square(img) {
                        continue 'cand;
                    }
                    if distinct.len() != 4 {
                        // degenerate square image is not combinatorial
                        continue 'cand;
                    }
                }
            }
            assign.push(cand);
            if !rec(x, e, assign, maps, steps, budget) {
                return false;
            }
            assign.pop();
        }
        true
    }
    let complete = rec(x, e, &mut assign, &mut maps, &mut steps, budget);
    let _ = n;
    if complete {
        Some(maps)
    } else {
        None
    }
}

/// Simple connectivity: sound `false` needs nonzero first homology; `true`
/// comes from collapsing the presentation by Tietze moves within budget.
pub fn simply_connected(x: &SquareComplex, budget: usize) -> Verdict<Vec<usize>> {
    // connectivity
    let n = x.vertex_count();
    if n == 0 {
        return Verdict::Indeterminate;
    }
    let mut seen = vec![false; n];
    let mut q = VecDeque::new();
    seen[0] = true;
    q.push_back(0);
    let mut tree_parent: Vec<Option<usize>> = vec![None; n];
    while let Some(u) = q.pop_front() {
        for v in x.neighbours(u) {
            if !seen[v] {
                seen[v] = true;
                tree_parent[v] = Some(u);
                q.push_back(v);
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        return Verdict::Indeterminate;
    }
    // generators = non-tree edges
    let mut tree_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in 0..n {
        if let Some(u) = tree_parent[v] {
            tree_edges.insert((u.min(v), u.max(v)));
        }
    }
    let gens: Vec<(usize, usize)> = x
        .edges()
        .into_iter()
        .filter(|e| !tree_edges.contains(e))
        .collect();
    if gens.is_empty() {
        return Verdict::Holds;
    }
    let gen_index: HashMap<(usize, usize), usize> = gens
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    // relators: square boundaries as signed generator words
    let mut relators: Vec<Vec<i64>> = Vec::new();
    for sq in x.squares() {
        let cyc = [sq[0], sq[1], sq[2], sq[3]];
        let mut word = Vec::new();
        for i in 0..4 {
            let (a, b) = (cyc[i], cyc[(i + 1) % 4]);
            let key = (a.min(b), a.max(b));
            if let Some(&g) = gen_index.get(&key) {
                let sign = if a < b { 1 } else { -1 };
                word.push((g as i64 + 1) * sign);
            }
        }
        if !word.is_empty() {
            relators.push(word);
        }
    }
    // witness for a sound `false`: a fundamental cycle independent of the
    // square boundaries over GF(2)
    if let Some(witness_edge) = gf2_independent_cycle(&gens, &relators) {
        let (u, v) = gens[witness_edge];
        // fundamental cycle through the tree
        let path_u = tree_path(&tree_parent, u);
        let path_v = tree_path(&tree_parent, v);
        let mut loop_verts = vec![v, u];
        let _ = (path_u, path_v);
        loop_verts = fundamental_cycle(&tree_parent, u, v);
        return Verdict::Fails(loop_verts);
    }
    // Tietze reduction
    let mut relators: Vec<Vec<i64>> = relators;
    let mut alive: Vec<bool> = vec![true; gens.len()];
    for _round in 0..budget {
        let mut changed = false;
        for r in relators.iter_mut() {
            free_cyclic_reduce(r);
        }
        relators.retain(|r| !r.is_empty());
        // a length-1 relator kills its generator
        let singls: Vec<i64> = relators
            .iter()
            .filter(|r| r.len() == 1)
            .map(|r| r[0].abs())
            .collect();
        for g in singls {
            let gi = (g - 1) as usize;
            if alive[gi] {
                alive[gi] = false;
                changed = true;
            }
            for r in relators.iter_mut() {
                r.retain(|&l| l.abs() != g);
            }
        }
        // a generator occurring exactly once overall can be eliminated with
        // its relator
        let mut occurrence: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
        for (ri, r) in relators.iter().enumerate() {
            for &l in r {
                occurrence[(l.abs() - 1) as usize].push(ri);
            }
        }
        for (gi, occ) in occurrence.iter().enumerate() {
            if alive[gi] && occ.len() == 1 {
                let ri = occ[0];
                // solve for gi and substitute (the relator dies with it)
                alive[gi] = false;
                relators[ri] = Vec::new();
                changed = true;
            }
        }
        relators.retain(|r| !r.is_empty());
        if !changed {
            break;
        }
    }
    if alive.iter().all(|&a| !a) {
        Verdict::Holds
    } else {
        Verdict::Indeterminate
    }
}

fn free_cyclic_reduce(word: &mut Vec<i64>) {
    loop {
        let mut out: Vec<i64> = Vec::with_capacity(word.len());
        for &l in word.iter() {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        let mut shrunk = out.len() != word.len();
        while out.len() >= 2 && out.first().copied() == out.last().map(|l| -l) {
            out.pop();
            out.remove(0);
            shrunk = true;
        }
        *word = out;
        if !shrunk {
            return;
        }
    }
}

fn gf2_independent_cycle(gens: &[(usize, usize)], relators: &[Vec<i64>]) -> Option<usize> {
    // columns: relators as GF(2) vectors over the generators
    let n = gens.len();
    let words = n.div_ceil(64);
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for r in relators {
        let mut v = vec![0u64; words];
        for &l in r {
            let g = (l.abs() - 1) as usize;
            v[g / 64] ^= 1 << (g % 64);
        }
        for b in &basis {
            let lead = b.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| (i, w.trailing_zeros()));
            if let Some((i, t)) = lead {
                if v[i] >> t & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
            }
        }
        if v.iter().any(|w| *w != 0) {
            basis.push(v);
        }
    }
    // generator e_g not in the GF(2) span of the relators: reduce e_g
    for g in 0..n {
        let mut v = vec![0u64; words];
        v[g / 64] ^= 1 << (g % 64);
        for b in &basis {
            let lead = b
                .iter()
                .enumerate()
                .find(|(_, w)| **w != 0)
                .map(|(i, w)| (i, w.trailing_zeros()));
            if let Some((i, t)) = lead {
                if v[i] >> t & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
            }
        }
        if v.iter().any(|w| *w != 0) {
            return Some(g);
        }
    }
    None
}

fn tree_path(parent: &[Option<usize>], mut v: usize) -> Vec<usize> {
    let mut path = vec![v];
    while let Some(p) = parent[v] {
        path.push(p);
        v = p;
    }
    path
}

fn fundamental_cycle(parent: &[Option<usize>], u: usize, v: usize) -> Vec<usize> {
    let pu = tree_path(parent, u);
    let pv = tree_path(parent, v);
    let su: BTreeSet<usize> = pu.iter().copied().collect();
    let meet = *pv.iter().find(|x| su.contains(x)).expect("common root");
    let mut cycle: Vec<usize> = pu.iter().take_while(|&&x| x != meet).copied().collect();
    cycle.push(meet);
    let tail: Vec<usize> = pv.iter().take_while(|&&x| x != meet).copied().collect();
    cycle.extend(tail.iter().rev());
    cycle
}

/// Thickening: the flag complex on the vertex set with the original edges
/// plus close pairs, given by its maximal simplices.
#[derive(Clone, Debug)]
pub struct Thickening {
    pub n: usize,
    pub adjacency: Vec<BTreeSet<usize>>,
    pub maximal: Vec<Vec<usize>>,
    pub wide: bool,
    /// on finite complexes stability reduces to taking S' = S
    pub stable_finite: bool,
}

pub fn thickening(x: &SquareComplex) -> Thickening {
    let n = x.vertex_count();
    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            if x.has_edge(u, v) || x.close(u, v) {
                adjacency[u].insert(v);
                adjacency[v].insert(u);
            }
        }
    }
    let maximal = maximal_cliques(&adjacency);
    let wide = maximal.iter().all(|m| {
        let a = m.iter().filter(|&&v| x.side_of(v) == Side::A).count();
        let d = m.len() - a;
        a >= 2 && d >= 2
    });
    Thickening {
        n,
        adjacency,
        maximal,
        wide,
        stable_finite: true,
    }
}

pub fn maximal_cliques(adjacency: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    let n = adjacency.len();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut r = Vec::new();
    let p: Vec<usize> = (0..n).collect();
    bron_kerbosch(adjacency, &mut r, p, Vec::new(), &mut out);
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    adjacency: &[BTreeSet<usize>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&v| adjacency[v].len());
    let candidates: Vec<usize> = match pivot {
        Some(piv) => p.iter().copied().filter(|v| !adjacency[piv].contains(v)).collect(),
        None => p.clone(),
    };
    let mut p = p;
    let mut x = x;
    for v in candidates {
        r.push(v);
        let np: Vec<usize> = p.iter().copied().filter(|&u| adjacency[v].contains(&u)).collect();
        let nx: Vec<usize> = x.iter().copied().filter(|&u| adjacency[v].contains(&u)).collect();
        bron_kerbosch(adjacency, r, np, nx, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// Homology of the thickening through the clique complex.
pub fn thickening_homology(t: &Thickening, coeffs: Coefficients) -> Homology {
    let simplices = crate::homology::close_under_faces(&t.maximal);
    homology(&simplices, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rat;

    /// n x m grid as a square complex (A side = even coordinate sum).
    pub fn grid_complex(w: usize, h: usize) -> SquareComplex {
        let mut x = SquareComplex::new();
        let mut ids = HashMap::new();
        for i in 0..=w {
            for j in 0..=h {
                let side = if (i + j) % 2 == 0 { Side::A } else { Side::D };
                let v = x.add_vertex(&format!("v{i}_{j}"), side);
                ids.insert((i, j), v);
            }
        }
        for i in 0..w {
            for j in 0..h {
                x.add_square([
                    ids[&(i, j)],
                    ids[&(i + 1, j)],
                    ids[&(i + 1, j + 1)],
                    ids[&(i, j + 1)],
                ])
                .unwrap();
            }
        }
        x
    }

    fn single_square() -> SquareComplex {
        grid_complex(1, 1)
    }

    /// Cube corner as a standalone complex.
    pub fn corner_complex() -> SquareComplex {
        let mut x = SquareComplex::new();
        let c = x.add_vertex("c", Side::A);
        let m: Vec<usize> = (0..3).map(|i| x.add_vertex(&format!("m{i}"), Side::D)).collect();
        let o: Vec<usize> = (0..3).map(|i| x.add_vertex(&format!("o{i}"), Side::A)).collect();
        x.add_square([c, m[0], o[0], m[1]]).unwrap();
        x.add_square([c, m[1], o[1], m[2]]).unwrap();
        x.add_square([c, m[2], o[2], m[0]]).unwrap();
        x
    }

    /// Boundary of the 3-cube: 8 vertices, 6 squares.
    pub fn cube_boundary() -> SquareComplex {
        let mut x = SquareComplex::new();
        let mut ids = Vec::new();
        for v in 0..8u32 {
            let side = if v.count_ones() % 2 == 0 { Side::A } else { Side::D };
            ids.push(x.add_vertex(&format!("c{v}"), side));
        }
        // faces: fix one coordinate
        for axis in 0..3 {
            for val in [0u32, 1] {
                let others: Vec<u32> = (0..3).filter(|&a| a != axis).collect();
                let corner = |b0: u32, b1: u32| -> usize {
                    let mut v = val << axis;
                    v |= b0 << others[0];
                    v |= b1 << others[1];
                    ids[v as usize]
                };
                x.add_square([corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1)])
                    .unwrap();
            }
        }
        x
    }

    #[test]
    fn format_round_trip() {
        let x = corner_complex();
        let text = x.to_text();
        let back = SquareComplex::parse(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert_eq!(back.squares().len(), 3);
    }

    #[test]
    fn single_square_passes_all_axioms() {
        let x = single_square();
        let report = check_axioms(&x, 100_000);
        assert!(report.all_hold(), "{}", report.summary());
        assert!(simply_connected(&x, 100).holds());
    }

    #[test]
    fn axiom1_violation_detected() {
        // squares d a d1 a' and d a d2 a' without d1 a d2 a'
        let mut x = SquareComplex::new();
        let d = x.add_vertex("d", Side::D);
        let a = x.add_vertex("a", Side::A);
        let d1 = x.add_vertex("d1", Side::D);
        let ap = x.add_vertex("ap", Side::A);
        let d2 = x.add_vertex("d2", Side::D);
        x.add_square([a, d, ap, d1]).unwrap();
        x.add_square([a, d, ap, d2]).unwrap();
        let report = check_axioms(&x, 100_000);
        assert!(matches!(report.axiom1, Verdict::Fails(_)));
        // marking the third square fixes it
        x.add_square([a, d1, ap, d2]).unwrap();
        let report = check_axioms(&x, 100_000);
        assert!(report.all_hold(), "{}", report.summary());
    }

    #[test]
    fn corner_complex_passes_and_cube_boundary_fails() {
        let x = corner_complex();
        let report = check_axioms(&x, 100_000);
        assert!(report.all_hold(), "{}", report.summary());
        assert!(simply_connected(&x, 100).holds());

        // the full cube boundary has the extra square violating axiom (2)
        let cube = cube_boundary();
        let report = check_axioms(&cube, 100_000);
        assert!(!report.all_hold());
    }

    #[test]
    fn grids_pass_axioms() {
        for (w, h) in [(2, 2), (3, 2), (1, 4)] {
            let x = grid_complex(w, h);
            let report = check_axioms(&x, 200_000);
            assert!(report.all_hold(), "grid {w}x{h}: {}", report.summary());
            assert!(simply_connected(&x, 100).holds());
        }
    }

    #[test]
    fn empty_four_cycle_is_not_simply_connected() {
        let mut x = SquareComplex::new();
        let a = x.add_vertex("a", Side::A);
        let d = x.add_vertex("d", Side::D);
        let a2 = x.add_vertex("a2", Side::A);
        let d2 = x.add_vertex("d2", Side::D);
        for (u, v) in [(a, d), (d, a2), (a2, d2), (d2, a)] {
            x.add_edge(u, v).unwrap();
        }
        match simply_connected(&x, 100) {
            Verdict::Fails(cycle) => assert_eq!(cycle.len(), 4),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn cube_corner_enumeration() {
        let x = single_square();
        assert!(cube_corners(&x, true).is_empty());

        let c = corner_complex();
        let corners = cube_corners(&c, true);
        assert_eq!(corners.len(), 1);
        assert_eq!(corners[0].minimal, Some(true));
        assert_eq!(corners[0].centre, 0);

        // full cube boundary: 8 corners, all minimal (complement needs 3)
        let cube = cube_boundary();
        let corners = cube_corners(&cube, true);
        assert_eq!(corners.len(), 8);
        assert!(corners.iter().all(|c| c.minimal == Some(true)));
    }

    #[test]
    fn minimal_disc_search_examples() {
        let x = single_square();
        let sq = x.squares()[0];
        let boundary = [sq[0], sq[1], sq[2], sq[3]];
        match minimal_disc_diagram(&x, &boundary, 3) {
            DiscSearch::Found(d) => {
                assert_eq!(d.area(), 1);
                d.verify().unwrap();
            }
            DiscSearch::Indeterminate => panic!("square fills itself"),
        }

        // corner boundary needs exactly 3 squares
        let c = corner_complex();
        let bd = cube_corners(&c, false)[0].boundary;
        assert!(matches!(minimal_disc_diagram(&c, &bd, 2), DiscSearch::Indeterminate));
        match minimal_disc_diagram(&c, &bd, 3) {
            DiscSearch::Found(d) => {
                assert_eq!(d.area(), 3);
                let labels = d.labels.as_ref().unwrap();
                assert!(labels.contains(&0), "filling passes through the centre");
            }
            DiscSearch::Indeterminate => panic!("corner fills with 3 squares"),
        }

        // a loop in a complex with no squares has no filling
        let mut empty = SquareComplex::new();
        let a = empty.add_vertex("a", Side::A);
        let d = empty.add_vertex("d", Side::D);
        let a2 = empty.add_vertex("a2", Side::A);
        let d2 = empty.add_vertex("d2", Side::D);
        for (u, v) in [(a, d), (d, a2), (a2, d2), (d2, a)] {
            empty.add_edge(u, v).unwrap();
        }
        assert!(matches!(
            minimal_disc_diagram(&empty, &[a, d, a2, d2], 5),
            DiscSearch::Indeterminate
        ));
    }

    #[test]
    fn minimal_diagram_curvature_total() {
        let c = corner_complex();
        let bd = cube_corners(&c, false)[0].boundary;
        let DiscSearch::Found(d) = minimal_disc_diagram(&c, &bd, 3) else {
            panic!()
        };
        let gb = gauss_bonnet(
            &d,
            &AngleAssignment::right_angles(&d),
            CurvatureConvention::Standard,
        )
        .unwrap();
        assert_eq!(gb.total, Rat::int(2));
    }

    #[test]
    fn four_cycles_in_passing_fixtures_are_squares() {
        for x in [single_square(), corner_complex(), grid_complex(2, 2), grid_complex(3, 2)] {
            let report = check_axioms(&x, 200_000);
            assert!(report.all_hold());
            for cyc in x.all_four_cycles() {
                assert!(x.is_square(cyc), "unmarked 4-cycle {cyc:?}");
            }
        }
    }

    #[test]
    fn pairwise_close_triples_have_common_neighbour() {
        for x in [corner_complex(), grid_complex(2, 2), grid_complex(3, 3)] {
            assert!(check_axioms(&x, 200_000).all_hold());
            let n = x.vertex_count();
            for a1 in 0..n {
                for a2 in (a1 + 1)..n {
                    for a3 in (a2 + 1)..n {
                        if x.close(a1, a2) && x.close(a1, a3) && x.close(a2, a3) {
                            let common = (0..n).any(|d| {
                                x.has_edge(d, a1) && x.has_edge(d, a2) && x.has_edge(d, a3)
                            });
                            assert!(common, "close triple {a1} {a2} {a3}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn thickening_of_single_square_is_a_solid_simplex() {
        let x = single_square();
        let t = thickening(&x);
        assert_eq!(t.maximal, vec![vec![0, 1, 2, 3]]);
        assert!(t.wide);
        assert!(t.stable_finite);
        let h = thickening_homology(&t, Coefficients::Integer);
        assert!(h.is_point());
    }

    #[test]
    fn thickening_of_two_squares_sharing_an_edge() {
        // two squares sharing edge a-d: 6 vertices, two 4-cliques glued
        // along the shared edge's close pairs
        let mut x = SquareComplex::new();
        let a = x.add_vertex("a", Side::A);
        let d = x.add_vertex("d", Side::D);
        let a1 = x.add_vertex("a1", Side::A);
        let d1 = x.add_vertex("d1", Side::D);
        let a2 = x.add_vertex("a2", Side::A);
        let d2 = x.add_vertex("d2", Side::D);
        x.add_square([a, d, a1, d1]).unwrap();
        x.add_square([a, d, a2, d2]).unwrap();
        let t = thickening(&x);
        // a1 and a2 are not close (no common square), so two maximal cliques
        assert_eq!(t.maximal.len(), 2);
        assert!(t.maximal.iter().all(|m| m.len() == 4));
        let h = thickening_homology(&t, Coefficients::Integer);
        assert!(h.is_point());
    }

    #[test]
    fn square_free_graph_thickening_is_flag_closure() {
        let mut x = SquareComplex::new();
        let a = x.add_vertex("a", Side::A);
        let d = x.add_vertex("d", Side::D);
        let a2 = x.add_vertex("a2", Side::A);
        x.add_edge(a, d).unwrap();
        x.add_edge(a2, d).unwrap();
        let t = thickening(&x);
        assert_eq!(t.maximal, vec![vec![0, 1], vec![1, 2]]);
        assert!(!t.wide);
    }

    #[test]
    fn hyperplanes_in_minimal_diagrams_behave() {
        let c = corner_complex();
        let bd = cube_corners(&c, false)[0].boundary;
        let DiscSearch::Found(d) = minimal_disc_diagram(&c, &bd, 3) else {
            panic!()
        };
        let hs = diagram_hyperplanes(&d);
        assert_eq!(hs.len(), 3);
        for i in 0..hs.len() {
            assert!(hs[i].is_embedded());
            assert!(!hs[i].is_circle);
            for j in (i + 1)..hs.len() {
                assert!(disc::crossing_count(&hs[i], &hs[j]) <= 1);
            }
        }
    }
}
