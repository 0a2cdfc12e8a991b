//! Disc diagrams: finite contractible planar 2-complexes with a boundary
//! cycle, angle assignments, the combinatorial Gauss-Bonnet audit, and
//! hyperplanes of square diagrams.
//!
//! Curvature convention: kappa(v) = 2 pi - pi * chi(lk v) - sum of angles,
//! which gives 2 pi - sum at interior vertices and (2 - n_v) pi - sum at
//! boundary vertices with n_v link components. The formula read literally
//! off the source text ((2 - n_v) pi - sum everywhere, counting components)
//! is available behind [`CurvatureConvention::ComponentCount`]; it disagrees
//! at interior vertices and fails the flat-grid sanity case.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::exact::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiscError {
    #[error("angle sum of cell {0} is not (p - 2) pi")]
    AngleSumViolation(usize),
    #[error("diagram is not connected")]
    NotConnected,
    #[error("Euler characteristic is {0}, not 1")]
    NotContractible(i64),
    #[error("edge {0:?} lies in more than two squares")]
    Overfull((usize, usize)),
    #[error("rotation system traces genus > 0")]
    NotPlanar,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A 2-cell, stored as its boundary vertex cycle.
pub type Cell = Vec<usize>;

/// Disc diagram with optional rotation system and optional labels into a
/// target complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscDiagram {
    pub vertex_count: usize,
    pub edges: BTreeSet<(usize, usize)>,
    pub cells: Vec<Cell>,
    /// boundary cycle (attaching walk of the cell at infinity)
    pub boundary: Vec<usize>,
    /// cyclic order of neighbours at each vertex, when an embedding is known
    pub rotations: Option<Vec<Vec<usize>>>,
    /// vertex labels into a target complex
    pub labels: Option<Vec<usize>>,
}

fn edge_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl DiscDiagram {
    pub fn new(
        vertex_count: usize,
        cells: Vec<Cell>,
        boundary: Vec<usize>,
        rotations: Option<Vec<Vec<usize>>>,
    ) -> DiscDiagram {
        let mut edges = BTreeSet::new();
        for c in &cells {
            for i in 0..c.len() {
                edges.insert(edge_key(c[i], c[(i + 1) % c.len()]));
            }
        }
        for i in 0..boundary.len() {
            edges.insert(edge_key(boundary[i], boundary[(i + 1) % boundary.len()]));
        }
        DiscDiagram {
            vertex_count,
            edges,
            cells,
            boundary,
            rotations,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> DiscDiagram {
        assert_eq!(labels.len(), self.vertex_count);
        self.labels = Some(labels);
        self
    }

    pub fn area(&self) -> usize {
        self.cells.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.cells.len() as i64
    }

    /// Planarity/contractibility certificate: connected, chi = 1, each edge
    /// in at most two 2-cells, and (when rotations are present) the rotation
    /// system traces a sphere together with the outer cell.
    pub fn verify(&self) -> Result<(), DiscError> {
        if self.vertex_count == 0 {
            return Err(DiscError::NotConnected);
        }
        // connectivity over edges
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut q = VecDeque::new();
        seen[0] = true;
        q.push_back(0);
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(DiscError::NotConnected);
        }
        let chi = self.euler_characteristic();
        if chi != 1 {
            return Err(DiscError::NotContractible(chi));
        }
        let mut edge_use: HashMap<(usize, usize), usize> = HashMap::new();
        for c in &self.cells {
            for i in 0..c.len() {
                *edge_use.entry(edge_key(c[i], c[(i + 1) % c.len()])).or_insert(0) += 1;
            }
        }
        for (&e, &n) in &edge_use {
            if n > 2 {
                return Err(DiscError::Overfull(e));
            }
        }
        if let Some(rot) = &self.rotations {
            // face count from the rotation system must give the sphere with
            // the outer face: V - E + (cells + 1) = 2
            let faces = trace_faces(self.vertex_count, &self.edges, rot);
            let chi_rot = self.vertex_count as i64 - self.edges.len() as i64 + faces as i64;
            if chi_rot != 2 {
                return Err(DiscError::NotPlanar);
            }
        }
        Ok(())
    }

    /// Corners of each cell: (cell index, position); the vertex is
    /// cells[c][i].
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (c, cell) in self.cells.iter().enumerate() {
            for i in 0..cell.len() {
                out.push((c, i));
            }
        }
        out
    }

    pub fn link_component_count(&self, v: usize) -> usize {
        let germs: Vec<usize> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .map(|&(a, b)| if a == v { b } else { a })
            .collect();
        let mut dsu: Vec<usize> = (0..germs.len()).collect();
        fn find(d: &mut Vec<usize>, x: usize) -> usize {
            if d[x] != x {
                let r = find(d, d[x]);
                d[x] = r;
            }
            d[x]
        }
        for cell in &self.cells {
            let p = cell.len();
            for i in 0..p {
                if cell[i] == v {
                    let left = cell[(i + p - 1) % p];
                    let right = cell[(i + 1) % p];
                    let gi = germs.iter().position(|&g| g == left).unwrap();
                    let gj = germs.iter().position(|&g| g == right).unwrap();
                    let (a, b) = (find(&mut dsu, gi), find(&mut dsu, gj));
                    if a != b {
                        dsu[a] = b;
                    }
                }
            }
        }
        let comps: BTreeSet<usize> = (0..germs.len()).map(|g| find(&mut dsu, g)).collect();
        comps.len()
    }

    /// Serialize as a rotation system: one line per vertex with the cyclic
    /// order of neighbours, then cell and boundary lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let rot = self
            .rotations
            .as_ref()
            .expect("serialization needs a rotation system");
        for (v, order) in rot.iter().enumerate() {
            let ns: Vec<String> = order.iter().map(|n| n.to_string()).collect();
            s.push_str(&format!("vertex {} : {}\n", v, ns.join(" ")));
        }
        for c in &self.cells {
            let vs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            s.push_str(&format!("cell {}\n", vs.join(" ")));
        }
        let bs: Vec<String> = self.boundary.iter().map(|v| v.to_string()).collect();
        s.push_str(&format!("boundary {}\n", bs.join(" ")));
        s
    }

    pub fn parse(text: &str) -> Result<DiscDiagram, DiscError> {
        let mut rotations: Vec<Vec<usize>> = Vec::new();
        let mut cells = Vec::new();
        let mut boundary = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| DiscError::Parse {
                line: lineno + 1,
                msg,
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.first() {
                Some(&"vertex") => {
                    let id: usize = toks
                        .get(1)
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("bad vertex id".into()))?;
                    if toks.get(2) != Some(&":") {
                        return Err(err("expected ':'".into()));
                    }
                    let ns: Result<Vec<usize>, _> = toks[3..].iter().map(|t| t.parse()).collect();
                    let ns = ns.map_err(|_| err("bad neighbour".into()))?;
                    if rotations.len() != id {
                        return Err(err("vertex ids must be consecutive".into()));
                    }
                    rotations.push(ns);
                }
                Some(&"cell") => {
                    let vs: Result<Vec<usize>, _> = toks[1..].iter().map(|t| t.parse()).collect();
                    cells.push(vs.map_err(|_| err("bad cell vertex".into()))?);
                }
                Some(&"boundary") => {
                    let vs: Result<Vec<usize>, _> = toks[1..].iter().map(|t| t.parse()).collect();
                    boundary = vs.map_err(|_| err("bad boundary vertex".into()))?;
                }
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }
        Ok(DiscDiagram::new(
            rotations.len(),
            cells,
            boundary,
            Some(rotations),
        ))
    }
}

/// Count faces traced by a rotation system (including the outer face).
fn trace_faces(n: usize, edges: &BTreeSet<(usize, usize)>, rot: &[Vec<usize>]) -> usize {
    // darts (v, w); next dart of (v, w) is (w, u) where u follows v in the
    // rotation at w
    let mut visited: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = 0;
    let _ = n;
    for &(a, b) in edges {
        for start in [(a, b), (b, a)] {
            if visited.contains(&start) {
                continue;
            }
            faces += 1;
            let mut dart = start;
            loop {
                visited.insert(dart);
                let (v, w) = dart;
                let order = &rot[w];
                let idx = order.iter().position(|&u| u == v).expect("rotation lists neighbour");
                let next = order[(idx + 1) % order.len()];
                dart = (w, next);
                if dart == start {
                    break;
                }
            }
        }
    }
    faces
}

/// Angle assignment: per-corner rational multiples of pi.
#[derive(Clone, Debug)]
pub struct AngleAssignment {
    /// angles[cell][corner position], as coefficients of pi
    pub angles: Vec<Vec<Rat>>,
}

impl AngleAssignment {
    /// All angles pi/2 on squares (or the flat (p-2)/p on p-gons).
    pub fn right_angles(d: &DiscDiagram) -> AngleAssignment {
        let angles = d
            .cells
            .iter()
            .map(|c| {
                let p = c.len() as i128;
                vec![Rat::new(p - 2, p); c.len()]
            })
            .collect();
        AngleAssignment { angles }
    }

    pub fn check_cell_sums(&self, d: &DiscDiagram) -> Result<(), DiscError> {
        for (ci, cell) in d.cells.iter().enumerate() {
            let sum = self.angles[ci]
                .iter()
                .fold(Rat::ZERO, |acc, &a| acc + a);
            if sum != Rat::int(cell.len() as i128 - 2) {
                return Err(DiscError::AngleSumViolation(ci));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurvatureConvention {
    /// interior 2 pi - sum; boundary (2 - n_v) pi - sum via link chi
    Standard,
    /// (2 - n_v) pi - sum everywhere, n_v = number of link components
    ComponentCount,
}

/// Per-vertex curvatures (as coefficients of pi) and their total.
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    pub per_vertex: Vec<Rat>,
    pub total: Rat,
}

/// Combinatorial Gauss-Bonnet: with valid angles the total is exactly 2 pi
/// under the standard convention.
pub fn gauss_bonnet(
    d: &DiscDiagram,
    angles: &AngleAssignment,
    convention: CurvatureConvention,
) -> Result<CurvatureReport, DiscError> {
    angles.check_cell_sums(d)?;
    let mut angle_sum = vec![Rat::ZERO; d.vertex_count];
    for (ci, cell) in d.cells.iter().enumerate() {
        for (i, &v) in cell.iter().enumerate() {
            angle_sum[v] = angle_sum[v] + angles.angles[ci][i];
        }
    }
    let per_vertex: Vec<Rat> = (0..d.vertex_count)
        .map(|v| {
            let base = match convention {
                CurvatureConvention::Standard => Rat::int(2) - Rat::int(link_arc_chi(d, v)),
                CurvatureConvention::ComponentCount => {
                    Rat::int(2) - Rat::int(d.link_component_count(v) as i128)
                }
            };
            base - angle_sum[v]
        })
        .collect();
    let total = per_vertex.iter().fold(Rat::ZERO, |acc, &x| acc + x);
    Ok(CurvatureReport { per_vertex, total })
}

/// chi of the link of v: germs minus corner-arcs (per component this is 1
/// for arcs and isolated germs, 0 for circles).
fn link_arc_chi(d: &DiscDiagram, v: usize) -> i128 {
    let germ_count = d
        .edges
        .iter()
        .filter(|&&(a, b)| a == v || b == v)
        .count() as i128;
    let mut arcs = 0i128;
    for cell in &d.cells {
        for i in 0..cell.len() {
            if cell[i] == v {
                arcs += 1;
            }
        }
    }
    germ_count - arcs
}

/// A hyperplane of a square diagram: the 1-manifold through midpoints of
/// opposite edges.
#[derive(Clone, Debug)]
pub struct DiagramHyperplane {
    /// dual edges crossed, in traversal order
    pub dual_edges: Vec<(usize, usize)>,
    /// squares traversed (cell indices, one per consecutive pair of duals)
    pub squares: Vec<usize>,
    pub is_circle: bool,
}

impl DiagramHyperplane {
    pub fn is_embedded(&self) -> bool {
        let set: BTreeSet<(usize, usize)> = self.dual_edges.iter().copied().collect();
        set.len() == self.dual_edges.len()
    }
}

/// Trace all hyperplanes of a diagram whose 2-cells are squares.
pub fn diagram_hyperplanes(d: &DiscDiagram) -> Vec<DiagramHyperplane> {
    for c in &d.cells {
        assert_eq!(c.len(), 4, "hyperplanes need square cells");
    }
    // midcube adjacency: edge e, square s containing e -> opposite edge
    let opposite = |cell: &Cell, e: (usize, usize)| -> (usize, usize) {
        let pos = (0..4)
            .find(|&i| edge_key(cell[i], cell[(i + 1) % 4]) == e)
            .expect("edge in cell");
        edge_key(cell[(pos + 2) % 4], cell[(pos + 3) % 4])
    };
    let squares_of_edge = |e: (usize, usize)| -> Vec<usize> {
        d.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| (0..4).any(|i| edge_key(c[i], c[(i + 1) % 4]) == e))
            .map(|(i, _)| i)
            .collect()
    };
    let mut used: BTreeSet<(usize, (usize, usize))> = BTreeSet::new(); // (square, entry edge)
    let mut out = Vec::new();
    let all_edges: Vec<(usize, usize)> = d.edges.iter().copied().collect();
    for &start_edge in &all_edges {
        for &start_sq in &squares_of_edge(start_edge) {
            if used.contains(&(start_sq, start_edge)) {
                continue;
            }
            // walk forward from this crossing
            let mut dual_edges = vec![start_edge];
            let mut squares = Vec::new();
            let mut cur_edge = start_edge;
            let mut cur_sq = Some(start_sq);
            let mut is_circle = false;
            while let Some(sq) = cur_sq {
                if used.contains(&(sq, cur_edge)) {
                    is_circle = true;
                    break;
                }
                used.insert((sq, cur_edge));
                let next_edge = opposite(&d.cells[sq], cur_edge);
                used.insert((sq, next_edge));
                squares.push(sq);
                dual_edges.push(next_edge);
                cur_edge = next_edge;
                cur_sq = squares_of_edge(cur_edge)
                    .into_iter()
                    .find(|&s| s != sq && !used.contains(&(s, cur_edge)));
                if cur_sq.is_none() {
                    // dead end; try continuing a circle closure
                    let back = squares_of_edge(cur_edge)
                        .into_iter()
                        .find(|&s| s != sq && s == start_sq && cur_edge == start_edge);
                    if back.is_some() {
                        is_circle = true;
                    }
                }
            }
            // walk backward from the start edge to complete the manifold
            let mut cur_edge = start_edge;
            loop {
                let prev = squares_of_edge(cur_edge)
                    .into_iter()
                    .find(|&s| !used.contains(&(s, cur_edge)));
                let Some(sq) = prev else { break };
                used.insert((sq, cur_edge));
                let next_edge = opposite(&d.cells[sq], cur_edge);
                used.insert((sq, next_edge));
                squares.insert(0, sq);
                dual_edges.insert(0, next_edge);
                cur_edge = next_edge;
            }
            if !squares.is_empty() {
                out.push(DiagramHyperplane {
                    dual_edges,
                    squares,
                    is_circle,
                });
            }
        }
    }
    // lone edges with no squares still carry a degenerate midpoint; skip them
    out
}

/// Number of squares in which two hyperplanes cross.
pub fn crossing_count(h1: &DiagramHyperplane, h2: &DiagramHyperplane) -> usize {
    let s1: BTreeSet<usize> = h1.squares.iter().copied().collect();
    let s2: BTreeSet<usize> = h2.squares.iter().copied().collect();
    s1.intersection(&s2).count()
}

/// Axis-aligned unit-square diagram from a set of grid cells (x, y),
/// with rotation systems from the plane embedding. The cell set must be
/// simply connected.
pub fn grid_diagram(cells: &[(i64, i64)]) -> DiscDiagram {
    let mut verts: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut id = |p: (i64, i64), verts: &mut BTreeMap<(i64, i64), usize>| -> usize {
        let next = verts.len();
        *verts.entry(p).or_insert(next)
    };
    let mut cell_list = Vec::new();
    for &(x, y) in cells {
        let corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
        let c: Vec<usize> = corners.iter().map(|&p| id(p, &mut verts)).collect();
        cell_list.push(c);
    }
    // rotations: neighbours in CCW order around each lattice point
    let mut adj: BTreeMap<usize, BTreeSet<(i64, i64)>> = BTreeMap::new();
    for c in &cell_list {
        let _ = c;
    }
    let mut edge_set: BTreeSet<((i64, i64), (i64, i64))> = BTreeSet::new();
    for &(x, y) in cells {
        let corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
        for i in 0..4 {
            let (p, q) = (corners[i], corners[(i + 1) % 4]);
            edge_set.insert((p.min(q), p.max(q)));
        }
    }
    for &(p, q) in &edge_set {
        adj.entry(verts[&p]).or_default().insert(q);
        adj.entry(verts[&q]).or_default().insert(p);
    }
    let coords: BTreeMap<usize, (i64, i64)> = verts.iter().map(|(&p, &v)| (v, p)).collect();
    let mut rotations = vec![Vec::new(); verts.len()];
    for (&v, nbrs) in &adj {
        let (x, y) = coords[&v];
        // CCW starting east
        let order = [(1, 0), (0, 1), (-1, 0), (0, -1)];
        for (dx, dy) in order {
            let p = (x + dx, y + dy);
            if nbrs.contains(&p) {
                rotations[v].push(verts[&p]);
            }
        }
    }
    // boundary: trace the outer face by walking with the rotation system
    let edges: BTreeSet<(usize, usize)> = edge_set
        .iter()
        .map(|&(p, q)| edge_key(verts[&p], verts[&q]))
        .collect();
    let boundary = outer_boundary(&coords, &edges, &rotations);
    DiscDiagram::new(verts.len(), cell_list, boundary, Some(rotations))
}

fn outer_boundary(
    coords: &BTreeMap<usize, (i64, i64)>,
    edges: &BTreeSet<(usize, usize)>,
    rotations: &[Vec<usize>],
) -> Vec<usize> {
    // start at the lexicographically least coordinate, go clockwise so the
    // outer face is traced with the interior on the left
    let (&start, _) = coords
        .iter()
        .min_by_key(|(_, &(x, y))| (x, y))
        .expect("nonempty");
    let _ = edges;
    // first dart: from start toward its rotation-first neighbour works for
    // the outer face as long as we walk face-traversal in clockwise order;
    // use next-dart rule (w, prev-in-rotation) to go around the outer face
    let first = rotations[start]
        .last()
        .copied()
        .expect("boundary vertex has neighbours");
    let mut walk = vec![start];
    let mut dart = (start, first);
    loop {
        let (v, w) = dart;
        let order = &rotations[w];
        let idx = order.iter().position(|&u| u == v).unwrap();
        let next = order[(idx + order.len() - 1) % order.len()];
        if w == start && walk.len() > 1 {
            break;
        }
        walk.push(w);
        dart = (w, next);
        assert!(walk.len() <= edges.len() * 2 + 2, "outer walk must close");
    }
    walk
}

/// Strip of n unit squares in a row.
pub fn strip_diagram(n: usize) -> DiscDiagram {
    grid_diagram(&(0..n as i64).map(|x| (x, 0)).collect::<Vec<_>>())
}

/// The cube-corner diagram: three squares around a central vertex, as the
/// corner of a 3-cube flattened into the plane.
pub fn corner_diagram() -> DiscDiagram {
    // centre 0; squares (0,1,2,3), (0,3,4,5), (0,5,6,1)
    let cells = vec![vec![0, 1, 2, 3], vec![0, 3, 4, 5], vec![0, 5, 6, 1]];
    let rotations = vec![
        vec![1, 3, 5],
        vec![2, 0, 6],
        vec![3, 1],
        vec![0, 2, 4],
        vec![5, 3],
        vec![0, 4, 6],
        vec![1, 5],
    ];
    let boundary = vec![1, 2, 3, 4, 5, 6];
    DiscDiagram::new(7, cells, boundary, Some(rotations))
}
