//! Hyperplane arrangements: dual face complexes (sign vectors), gate
//! projections, Salvetti complexes, collapse maps to sub-arrangements, and
//! deconings of central arrangements.
//!
//! Two face-enumeration backends fill the same [`FaceComplex`] structure:
//! a Coxeter-combinatorial one (faces are parabolic cosets, signs come from
//! length comparisons) and an exact geometric one for explicit rational
//! arrangements in low dimension (see [`geometry`]).

pub mod geometry;

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::coxeter::{ElemId, Group};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("arrangement is not central")]
    NotCentral,
    #[error("hyperplane index {0} out of range")]
    BadHyperplane(usize),
    #[error("geometric backend supports affine dim <= 2 and central dim 3, got {0}")]
    UnsupportedDimension(usize),
}

/// Sign of a face at a hyperplane: -1, 0, +1.
pub type Sign = i8;
pub type SignVector = Vec<Sign>;

/// Covector order: `u <= v` iff u agrees with v wherever u is nonzero.
/// Equivalently the fan of u lies in the closure of the fan of v, so the
/// cell of v is a face of the cell of u.
pub fn covector_leq(u: &[Sign], v: &[Sign]) -> bool {
    u.iter().zip(v).all(|(&a, &b)| a == 0 || a == b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub sign: SignVector,
    /// cell dimension in the dual complex (chambers are 0-cells)
    pub dim: usize,
    /// vertex set of the cell: chamber indices, sorted
    pub verts: Vec<usize>,
}

/// Dual complex Sigma of an arrangement, encoded by its faces' sign vectors.
///
/// Vertices are the chambers (total sign vectors); each 1-cell is dual to
/// exactly one hyperplane.
#[derive(Clone, Debug)]
pub struct FaceComplex {
    pub ambient_dim: usize,
    pub n_hyperplanes: usize,
    pub central: bool,
    pub faces: Vec<Face>,
    /// face index of each chamber, in chamber order
    pub chambers: Vec<usize>,
    chamber_by_sign: HashMap<SignVector, usize>,
    face_by_sign: HashMap<SignVector, usize>,
    /// chamber graph: neighbours via shared walls
    adjacency: Vec<Vec<usize>>,
}

impl FaceComplex {
    /// Assemble the complex from the set of realizable sign vectors.
    pub fn from_sign_vectors(
        ambient_dim: usize,
        n_hyperplanes: usize,
        central: bool,
        mut signs: Vec<SignVector>,
    ) -> FaceComplex {
        signs.sort();
        signs.dedup();
        let total: Vec<SignVector> = signs
            .iter()
            .filter(|s| s.iter().all(|&x| x != 0))
            .cloned()
            .collect();
        // cell dimension = longest covector chain up to a total vector;
        // process in order of decreasing covectors (fewer zeros first)
        let n = signs.len();
        let mut dim = vec![0usize; n];
        let mut order_by_zeros: Vec<usize> = (0..n).collect();
        order_by_zeros.sort_by_key(|&i| signs[i].iter().filter(|&&x| x == 0).count());
        for &i in &order_by_zeros {
            for &j in &order_by_zeros {
                if i != j && covector_leq(&signs[i], &signs[j]) {
                    dim[i] = dim[i].max(dim[j] + 1);
                }
            }
        }
        let chamber_by_sign: HashMap<SignVector, usize> = total
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut faces = Vec::with_capacity(n);
        for i in 0..n {
            let verts: Vec<usize> = total
                .iter()
                .enumerate()
                .filter(|(_, t)| covector_leq(&signs[i], t))
                .map(|(c, _)| c)
                .collect();
            faces.push(Face {
                sign: signs[i].clone(),
                dim: dim[i],
                verts,
            });
        }
        let face_by_sign: HashMap<SignVector, usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.sign.clone(), i))
            .collect();
        let chambers: Vec<usize> = total.iter().map(|s| face_by_sign[s]).collect();
        // adjacency through 1-cells
        let mut adjacency = vec![Vec::new(); total.len()];
        for f in &faces {
            if f.dim == 1 {
                assert_eq!(f.verts.len(), 2, "1-cells have two vertices");
                let (a, b) = (f.verts[0], f.verts[1]);
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        for l in &mut adjacency {
            l.sort_unstable();
            l.dedup();
        }
        FaceComplex {
            ambient_dim,
            n_hyperplanes,
            central,
            faces,
            chambers,
            chamber_by_sign,
            face_by_sign,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.chambers.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn chamber_sign(&self, v: usize) -> &SignVector {
        &self.faces[self.chambers[v]].sign
    }

    pub fn face_of_sign(&self, s: &SignVector) -> Option<usize> {
        self.face_by_sign.get(s).copied()
    }

    pub fn chamber_of_sign(&self, s: &SignVector) -> Option<usize> {
        self.chamber_by_sign.get(s).copied()
    }

    /// Faces of the given cell (cells whose covector dominates it).
    pub fn subfaces(&self, f: usize) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&g| g != f && covector_leq(&self.faces[f].sign, &self.faces[g].sign))
            .collect()
    }

    /// Facets: subcells of dimension exactly dim-1.
    pub fn facets(&self, f: usize) -> Vec<usize> {
        let d = self.faces[f].dim;
        self.subfaces(f)
            .into_iter()
            .filter(|&g| self.faces[g].dim + 1 == d)
            .collect()
    }

    /// The unique hyperplane an edge is dual to.
    pub fn dual_hyperplane(&self, edge: usize) -> usize {
        assert_eq!(self.faces[edge].dim, 1);
        let zeros: Vec<usize> = self.faces[edge]
            .sign
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == 0)
            .map(|(i, _)| i)
            .collect();
        let (a, b) = (self.faces[edge].verts[0], self.faces[edge].verts[1]);
        let sa = self.chamber_sign(a);
        let sb = self.chamber_sign(b);
        let mut diff: Vec<usize> = zeros
            .iter()
            .copied()
            .filter(|&h| sa[h] != sb[h])
            .collect();
        assert_eq!(diff.len(), 1, "each edge is dual to exactly one hyperplane");
        diff.pop().unwrap()
    }

    /// The edge cell on two adjacent chambers, if any.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.faces.len()).find(|&f| self.faces[f].dim == 1 && self.faces[f].verts == {
            let mut v = vec![a.min(b), a.max(b)];
            v.dedup();
            v
        })
    }

    /// A hyperplane crosses a face iff it is dual to an edge of that face,
    /// equivalently the face's sign there is 0.
    pub fn crosses(&self, h: usize, f: usize) -> bool {
        self.faces[f].sign[h] == 0
    }

    /// BFS distance in the 1-skeleton; equals the number of separating
    /// hyperplanes (tested exhaustively).
    pub fn graph_distance(&self, x: usize, y: usize) -> usize {
        self.bfs_from(x)[y]
    }

    pub fn bfs_from(&self, x: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[x] = 0;
        let mut q = VecDeque::new();
        q.push_back(x);
        while let Some(u) = q.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }

    pub fn sign_difference(&self, x: usize, y: usize) -> usize {
        self.chamber_sign(x)
            .iter()
            .zip(self.chamber_sign(y))
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Gate projection: the unique vertex of F closest to x.
    pub fn gate(&self, x: usize, f: usize) -> usize {
        let dist = self.bfs_from(x);
        let best = *self.faces[f]
            .verts
            .iter()
            .min_by_key(|&&v| dist[v])
            .expect("faces have vertices");
        for &v in &self.faces[f].verts {
            assert!(
                v == best || dist[v] > dist[best],
                "gate must be the unique distance minimizer"
            );
        }
        best
    }

    /// Face-level gate: the face F' of F with vertex set gate(E^0).
    pub fn gate_face(&self, e: usize, f: usize) -> usize {
        let mut image: Vec<usize> = self.faces[e].verts.iter().map(|&v| self.gate(v, f)).collect();
        image.sort_unstable();
        image.dedup();
        let target = (0..self.faces.len())
            .find(|&g| self.faces[g].verts == image && covector_leq(&self.faces[f].sign, &self.faces[g].sign));
        target.expect("gate image is the vertex set of a face of F")
    }
}

/// Reflection arrangement of a finite Coxeter group, with its face complex.
///
/// Hyperplanes are the reflections; chambers biject with group elements via
/// chamber sign vectors, and faces biject with cosets w W_T.
pub struct ReflectionArrangement {
    pub group: Group,
    pub reflections: Vec<ElemId>,
    pub complex: FaceComplex,
    /// (generator mask, coset-min) per face, aligned with complex.faces
    pub face_cosets: Vec<(u32, ElemId)>,
}

pub fn reflection_arrangement(group: &Group) -> ReflectionArrangement {
    let reflections = group.reflections();
    let n = group.rank();
    let mut signs = Vec::new();
    let mut coset_of_sign: HashMap<SignVector, (u32, ElemId)> = HashMap::new();
    let chamber_signs: Vec<SignVector> = group
        .all_elements()
        .map(|w| group.chamber_sign_vector(&reflections, w))
        .collect();
    for mask in 0u32..(1 << n) {
        let gens: Vec<usize> = (0..n).filter(|&s| mask & (1 << s) != 0).collect();
        let parabolic = group.parabolic_elements(&gens);
        let mut seen_cosets = std::collections::BTreeSet::new();
        for w in group.all_elements() {
            let key = group.coset_min(w, &parabolic);
            if !seen_cosets.insert(key) {
                continue;
            }
            let members: Vec<ElemId> = parabolic.iter().map(|&x| group.mult(key, x)).collect();
            let mut sign: SignVector = chamber_signs[members[0] as usize].clone();
            for &m in &members[1..] {
                for (i, s) in chamber_signs[m as usize].iter().enumerate() {
                    if sign[i] != *s {
                        sign[i] = 0;
                    }
                }
            }
            coset_of_sign.insert(sign.clone(), (mask, key));
            signs.push(sign);
        }
    }
    let complex = FaceComplex::from_sign_vectors(n, reflections.len(), true, signs);
    // chamber v <-> element id v (chamber signs are injective and sorted consistently?)
    // Reindex check: chamber order in the complex is sign-sorted, so build the
    // face_cosets aligned to complex.faces.
    let face_cosets: Vec<(u32, ElemId)> = complex
        .faces
        .iter()
        .map(|f| coset_of_sign[&f.sign])
        .collect();
    ReflectionArrangement {
        group: group.clone(),
        reflections,
        complex,
        face_cosets,
    }
}

impl ReflectionArrangement {
    /// Chamber index of a group element.
    pub fn chamber_of_element(&self, w: ElemId) -> usize {
        let sign = self.group.chamber_sign_vector(&self.reflections, w);
        self.complex.chamber_of_sign(&sign).expect("chambers are elements")
    }

    /// Group element of a chamber.
    pub fn element_of_chamber(&self, v: usize) -> ElemId {
        let f = self.complex.chambers[v];
        self.face_cosets[f].1
    }

    /// Face of the coset w W_T (T given as a generator mask).
    pub fn face_of_coset(&self, w: ElemId, mask: u32) -> usize {
        let gens: Vec<usize> = (0..self.group.rank()).filter(|&s| mask & (1 << s) != 0).collect();
        let parabolic = self.group.parabolic_elements(&gens);
        let key = self.group.coset_min(w, &parabolic);
        (0..self.complex.face_count())
            .find(|&f| self.face_cosets[f] == (mask, key))
            .expect("every coset is a face")
    }

    /// Left translation w . F on faces.
    pub fn translate_face(&self, w: ElemId, f: usize) -> usize {
        let (mask, rep) = self.face_cosets[f];
        self.face_of_coset(self.group.mult(w, rep), mask)
    }
}

/// One cell [F, v] of the Salvetti complex: F a face of Sigma, v a vertex of
/// F (the canonical class representative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalvettiCell {
    pub face: usize,
    pub rep: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct SalvettiComplex {
    pub sigma: FaceComplex,
    pub cells: Vec<SalvettiCell>,
    cell_index: HashMap<(usize, usize), usize>,
    /// boundary cells of each cell: [E, gate_E(rep)] over facets E
    pub boundary: Vec<Vec<usize>>,
}

/// Oriented edge data of a 1-cell [F, v]: runs from v to the other vertex of
/// F (the endpoint farther from v).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeEnds {
    pub start: usize,
    pub end: usize,
    pub dual: usize,
}

impl SalvettiComplex {
    pub fn cell(&self, face: usize, v: usize) -> usize {
        let rep = self.sigma.gate(v, face);
        self.cell_index[&(face, rep)]
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells_of_dim(&self, d: usize) -> Vec<usize> {
        (0..self.cells.len()).filter(|&c| self.cells[c].dim == d).collect()
    }

    pub fn edge_ends(&self, c: usize) -> EdgeEnds {
        let cell = &self.cells[c];
        assert_eq!(cell.dim, 1);
        let verts = &self.sigma.faces[cell.face].verts;
        let end = verts.iter().copied().find(|&v| v != cell.rep).unwrap();
        EdgeEnds {
            start: cell.rep,
            end,
            dual: self.sigma.dual_hyperplane(cell.face),
        }
    }

    /// Positively oriented edge from chamber `a` to adjacent chamber `b`.
    pub fn positive_edge(&self, a: usize, b: usize) -> usize {
        let f = self
            .sigma
            .edge_between(a, b)
            .expect("chambers must be adjacent");
        self.cell_index[&(f, a)]
    }

    /// Source and sink of a 2-cell: its representative and the antipode.
    pub fn two_cell_source_sink(&self, c: usize) -> (usize, usize) {
        let cell = &self.cells[c];
        assert_eq!(cell.dim, 2);
        let verts = &self.sigma.faces[cell.face].verts;
        let dist = self.sigma.bfs_from(cell.rep);
        let sink = *verts.iter().max_by_key(|&&v| dist[v]).unwrap();
        for &v in verts {
            assert!(v == sink || dist[v] < dist[sink], "unique antipode in a polygon");
        }
        (cell.rep, sink)
    }

    /// The two minimal positive boundary paths of a 2-cell, as chamber
    /// sequences from source to sink.
    pub fn two_cell_boundary_paths(&self, c: usize) -> (Vec<usize>, Vec<usize>) {
        let cell = &self.cells[c];
        let (source, sink) = self.two_cell_source_sink(c);
        let cycle = polygon_cycle(&self.sigma, cell.face);
        let pos = cycle.iter().position(|&v| v == source).unwrap();
        let k = cycle.len() / 2;
        let mut left = Vec::with_capacity(k + 1);
        let mut right = Vec::with_capacity(k + 1);
        for i in 0..=k {
            left.push(cycle[(pos + i) % cycle.len()]);
            right.push(cycle[(pos + cycle.len() - i) % cycle.len()]);
        }
        assert_eq!(*left.last().unwrap(), sink);
        assert_eq!(*right.last().unwrap(), sink);
        (left, right)
    }

    /// Path of positively oriented edges along a chamber sequence.
    pub fn positive_path(&self, chambers: &[usize]) -> SalvettiPath {
        let mut steps = Vec::new();
        for w in chambers.windows(2) {
            steps.push((self.positive_edge(w[0], w[1]), true));
        }
        SalvettiPath {
            start: chambers[0],
            steps,
        }
    }
}

/// Cyclic vertex order of a polygonal 2-cell.
pub fn polygon_cycle(sigma: &FaceComplex, face: usize) -> Vec<usize> {
    let verts = &sigma.faces[face].verts;
    assert!(verts.len() >= 4 && verts.len() % 2 == 0);
    let inside: std::collections::BTreeSet<usize> = verts.iter().copied().collect();
    let start = verts[0];
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = sigma.adjacency[cur]
            .iter()
            .copied()
            .find(|&v| v != prev && inside.contains(&v))
            .expect("2-cell boundary is a cycle");
        if next == start {
            break;
        }
        prev = cur;
        cur = next;
        cycle.push(cur);
        assert!(cycle.len() <= verts.len(), "polygon traversal must close");
    }
    assert_eq!(cycle.len(), verts.len());
    cycle
}

/// Edge path in the Salvetti 1-skeleton: steps traverse oriented edges
/// forward or backward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalvettiPath {
    pub start: usize,
    pub steps: Vec<(usize, bool)>,
}

impl SalvettiPath {
    pub fn endpoints(&self, hat: &SalvettiComplex) -> (usize, usize) {
        let mut cur = self.start;
        for &(e, fwd) in &self.steps {
            let ends = hat.edge_ends(e);
            cur = if fwd {
                assert_eq!(cur, ends.start);
                ends.end
            } else {
                assert_eq!(cur, ends.end);
                ends.start
            };
        }
        (self.start, cur)
    }

    pub fn concat(mut self, other: &SalvettiPath) -> SalvettiPath {
        self.steps.extend(other.steps.iter().copied());
        self
    }
}

/// Salvetti complex of a face complex: cells [F, v] with v in F^0, doubled
/// oriented edges, and boundary incidence through gates.
pub fn salvetti(sigma: &FaceComplex) -> SalvettiComplex {
    let mut cells = Vec::new();
    let mut cell_index = HashMap::new();
    for (f, face) in sigma.faces.iter().enumerate() {
        for &v in &face.verts {
            let id = cells.len();
            cells.push(SalvettiCell {
                face: f,
                rep: v,
                dim: face.dim,
            });
            cell_index.insert((f, v), id);
        }
    }
    let mut boundary = vec![Vec::new(); cells.len()];
    for (c, cell) in cells.iter().enumerate() {
        for e in sigma.facets(cell.face) {
            let rep = sigma.gate(cell.rep, e);
            boundary[c].push(cell_index[&(e, rep)]);
        }
        boundary[c].sort_unstable();
    }
    SalvettiComplex {
        sigma: sigma.clone(),
        cells,
        cell_index,
        boundary,
    }
}

/// Cellular map between Salvetti complexes (or to itself), cell by cell;
/// `None` marks a degenerate image (cell collapsed to lower dimension).
#[derive(Clone, Debug)]
pub struct CellMap {
    pub image: Vec<Option<usize>>,
    /// vertex image on chambers
    pub vertex_image: Vec<usize>,
}

/// Retraction of the Salvetti complex onto the standard subcomplex over F:
/// [E, u] maps to [gate_face(E, F), gate(u)].
pub fn retraction_to_standard(hat: &SalvettiComplex, f: usize) -> CellMap {
    let sigma = &hat.sigma;
    let vertex_image: Vec<usize> = (0..sigma.vertex_count()).map(|v| sigma.gate(v, f)).collect();
    let image = hat
        .cells
        .iter()
        .map(|cell| {
            let img_face = sigma.gate_face(cell.face, f);
            let img_rep = sigma.gate(cell.rep, f);
            if sigma.faces[img_face].dim < cell.dim {
                None
            } else {
                Some(hat.cell(img_face, img_rep))
            }
        })
        .collect();
    CellMap {
        image,
        vertex_image,
    }
}

impl CellMap {
    /// Image of a path; degenerate edges drop out. Returns the image path
    /// and its signed length (forward steps minus backward steps).
    pub fn apply_path(
        &self,
        hat: &SalvettiComplex,
        path: &SalvettiPath,
    ) -> (SalvettiPath, i64) {
        let mut steps = Vec::new();
        let mut signed = 0i64;
        let start = self.vertex_image[path.start];
        let mut cur = path.start;
        for &(e, fwd) in &path.steps {
            let ends = hat.edge_ends(e);
            let (from, to) = if fwd {
                (ends.start, ends.end)
            } else {
                (ends.end, ends.start)
            };
            assert_eq!(cur, from);
            cur = to;
            if let Some(img) = self.image[e] {
                let img_ends = hat.edge_ends(img);
                let ifrom = self.vertex_image[from];
                let ito = self.vertex_image[to];
                if ifrom == img_ends.start && ito == img_ends.end {
                    steps.push((img, true));
                    signed += 1;
                } else if ifrom == img_ends.end && ito == img_ends.start {
                    steps.push((img, false));
                    signed -= 1;
                } else {
                    panic!("image edge does not connect image vertices");
                }
            } else {
                assert_eq!(self.vertex_image[from], self.vertex_image[to]);
            }
        }
        (
            SalvettiPath {
                start,
                steps,
            },
            signed,
        )
    }
}

/// Collapse onto a sub-arrangement: restrict sign vectors to the kept
/// hyperplanes. Returns the sub-complex and the face map kappa.
pub struct Collapse {
    pub sub: FaceComplex,
    pub face_map: Vec<usize>,
    pub vertex_map: Vec<usize>,
}

pub fn collapse_map(sigma: &FaceComplex, keep: &[usize]) -> Collapse {
    for &h in keep {
        assert!(h < sigma.n_hyperplanes);
    }
    let restricted: Vec<SignVector> = sigma
        .faces
        .iter()
        .map(|f| keep.iter().map(|&h| f.sign[h]).collect())
        .collect();
    let sub = FaceComplex::from_sign_vectors(
        sigma.ambient_dim,
        keep.len(),
        sigma.central,
        restricted.clone(),
    );
    let face_map: Vec<usize> = restricted
        .iter()
        .map(|s| sub.face_of_sign(s).expect("restriction is a face"))
        .collect();
    let vertex_map: Vec<usize> = (0..sigma.vertex_count())
        .map(|v| {
            let s: SignVector = keep.iter().map(|&h| sigma.chamber_sign(v)[h]).collect();
            sub.chamber_of_sign(&s).expect("restricted chamber")
        })
        .collect();
    Collapse {
        sub,
        face_map,
        vertex_map,
    }
}

impl Collapse {
    /// Induced map on Salvetti cells: [F, v] maps to [kappa F, kappa v].
    pub fn salvetti_map(&self, hat: &SalvettiComplex, sub_hat: &SalvettiComplex) -> CellMap {
        let image = hat
            .cells
            .iter()
            .map(|cell| {
                let f = self.face_map[cell.face];
                let v = self.vertex_map[cell.rep];
                if self.sub.faces[f].dim < cell.dim {
                    None
                } else {
                    Some(sub_hat.cell(f, v))
                }
            })
            .collect();
        CellMap {
            image,
            vertex_image: self.vertex_map.clone(),
        }
    }
}

/// Deconing of a central arrangement at hyperplane h: the positive-side
/// sub-poset, reindexed over the remaining hyperplanes.
pub fn decone(sigma: &FaceComplex, h: usize) -> Result<FaceComplex, ArrangementError> {
    if !sigma.central {
        return Err(ArrangementError::NotCentral);
    }
    if h >= sigma.n_hyperplanes {
        return Err(ArrangementError::BadHyperplane(h));
    }
    let keep: Vec<usize> = (0..sigma.n_hyperplanes).filter(|&i| i != h).collect();
    let signs: Vec<SignVector> = sigma
        .faces
        .iter()
        .filter(|f| f.sign[h] == 1)
        .map(|f| keep.iter().map(|&i| f.sign[i]).collect())
        .collect();
    Ok(FaceComplex::from_sign_vectors(
        sigma.ambient_dim.saturating_sub(1),
        keep.len(),
        false,
        signs,
    ))
}

/// Count of maximal subpaths of a Salvetti path running over edges dual to
/// hyperplane l.
pub fn ell_segments(hat: &SalvettiComplex, path: &SalvettiPath, l: usize) -> usize {
    let mut count = 0;
    let mut in_run = false;
    for &(e, _) in &path.steps {
        let is_l = hat.edge_ends(e).dual == l;
        if is_l && !in_run {
            count += 1;
        }
        in_run = is_l;
    }
    count
}

/// The loop Delta_x of a central line arrangement: a minimal positive path
/// from x to its antipode followed by one back, both read along positive
/// orientations. Ties are broken toward the smaller chamber index.
pub fn delta_word(hat: &SalvettiComplex, x: usize) -> SalvettiPath {
    let sigma = &hat.sigma;
    assert!(sigma.central, "delta words live over central line arrangements");
    let top = (0..sigma.face_count())
        .filter(|&f| sigma.faces[f].verts.len() == sigma.vertex_count() && sigma.faces[f].dim == 2)
        .next()
        .expect("central line arrangement has a single top 2-cell");
    let cycle = polygon_cycle(sigma, top);
    let k = cycle.len() / 2;
    let pos = cycle.iter().position(|&v| v == x).unwrap();
    let antipode = cycle[(pos + k) % cycle.len()];
    // choose the arc whose first chamber is smaller
    let fwd_first = cycle[(pos + 1) % cycle.len()];
    let bwd_first = cycle[(pos + cycle.len() - 1) % cycle.len()];
    let dir_fwd = fwd_first <= bwd_first;
    let mut out: Vec<usize> = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let idx = if dir_fwd {
            (pos + i) % cycle.len()
        } else {
            (pos + cycle.len() - i) % cycle.len()
        };
        out.push(cycle[idx]);
    }
    debug_assert_eq!(*out.last().unwrap(), antipode);
    let mut back: Vec<usize> = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let idx = if dir_fwd {
            (pos + k + i) % cycle.len()
        } else {
            (pos + 2 * cycle.len() - k - i) % cycle.len()
        };
        back.push(cycle[idx]);
    }
    debug_assert_eq!(back[0], antipode);
    debug_assert_eq!(*back.last().unwrap(), x);
    hat.positive_path(&out).concat(&hat.positive_path(&back))
}

/// Group action on Salvetti cells of a reflection arrangement:
/// w . [F, v] = [wF, wv].
pub fn act_on_salvetti_cell(
    arr: &ReflectionArrangement,
    hat: &SalvettiComplex,
    w: ElemId,
    cell: usize,
) -> usize {
    let c = &hat.cells[cell];
    let f = arr.translate_face(w, c.face);
    let v_elem = arr.element_of_chamber(c.rep);
    let v = arr.chamber_of_element(arr.group.mult(w, v_elem));
    hat.cell(f, v)
}

/// Per-cell orbit census under the whole group; used for presentation-complex
/// cell counts.
pub fn salvetti_orbit_counts(arr: &ReflectionArrangement, hat: &SalvettiComplex) -> BTreeMap<usize, usize> {
    let mut seen = vec![false; hat.cell_count()];
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for c in 0..hat.cell_count() {
        if seen[c] {
            continue;
        }
        *counts.entry(hat.cells[c].dim).or_insert(0) += 1;
        for w in arr.group.all_elements() {
            let img = act_on_salvetti_cell(arr, hat, w, c);
            seen[img] = true;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::enumerate;
    use crate::diagram::CoxeterDiagram;

    fn i2_arrangement(m: u32) -> ReflectionArrangement {
        let g = enumerate(&CoxeterDiagram::dihedral(Some(m)), 1000).unwrap();
        reflection_arrangement(&g)
    }

    #[test]
    fn i23_is_a_hexagon() {
        let arr = i2_arrangement(3);
        let sigma = &arr.complex;
        assert_eq!(sigma.n_hyperplanes, 3);
        assert_eq!(sigma.vertex_count(), 6);
        let edges = (0..sigma.face_count()).filter(|&f| sigma.faces[f].dim == 1).count();
        let two_cells = (0..sigma.face_count()).filter(|&f| sigma.faces[f].dim == 2).count();
        assert_eq!(edges, 6);
        assert_eq!(two_cells, 1);
    }

    #[test]
    fn a1_is_an_edge() {
        let g = enumerate(&CoxeterDiagram::new(&["a"]).unwrap(), 10).unwrap();
        let arr = reflection_arrangement(&g);
        assert_eq!(arr.complex.n_hyperplanes, 1);
        assert_eq!(arr.complex.vertex_count(), 2);
        let edges = (0..arr.complex.face_count())
            .filter(|&f| arr.complex.faces[f].dim == 1)
            .count();
        assert_eq!(edges, 1);
    }

    #[test]
    fn h3_vertex_count() {
        let g = enumerate(&CoxeterDiagram::linear(&["a", "b", "c"], &[3, 5]), 10_000).unwrap();
        let arr = reflection_arrangement(&g);
        assert_eq!(arr.complex.n_hyperplanes, 15);
        assert_eq!(arr.complex.vertex_count(), 120);
    }

    #[test]
    fn distance_law_on_dihedral() {
        for m in [3u32, 5] {
            let arr = i2_arrangement(m);
            let sigma = &arr.complex;
            for x in 0..sigma.vertex_count() {
                for y in 0..sigma.vertex_count() {
                    assert_eq!(sigma.graph_distance(x, y), sigma.sign_difference(x, y));
                }
            }
        }
    }

    #[test]
    fn antipodal_distance_in_hexagon() {
        let arr = i2_arrangement(3);
        let sigma = &arr.complex;
        let x = 0;
        let y = (0..sigma.vertex_count())
            .max_by_key(|&v| sigma.sign_difference(x, v))
            .unwrap();
        assert_eq!(sigma.graph_distance(x, y), 3);
    }

    #[test]
    fn gate_properties_dihedral_and_b3() {
        let b3 = enumerate(&CoxeterDiagram::linear(&["s1", "s2", "s3"], &[3, 4]), 10_000).unwrap();
        for arr in [i2_arrangement(3), i2_arrangement(5), reflection_arrangement(&b3)] {
            let sigma = &arr.complex;
            for f in 0..sigma.face_count() {
                for x in 0..sigma.vertex_count() {
                    let g = sigma.gate(x, f);
                    // gate property: d(x, g) + d(g, z) = d(x, z) for z in F^0
                    let dx = sigma.bfs_from(x);
                    let dg = sigma.bfs_from(g);
                    for &z in &sigma.faces[f].verts {
                        assert_eq!(dx[g] + dg[z], dx[z]);
                    }
                    // idempotence on F's vertices
                    if sigma.faces[f].verts.contains(&x) {
                        assert_eq!(g, x);
                    }
                }
            }
        }
    }

    #[test]
    fn gate_face_on_hexagon() {
        let arr = i2_arrangement(3);
        let sigma = &arr.complex;
        // opposite edges of the hexagon project to a single vertex
        let edges: Vec<usize> = (0..sigma.face_count())
            .filter(|&f| sigma.faces[f].dim == 1)
            .collect();
        for &e in &edges {
            for &f in &edges {
                if e == f {
                    continue;
                }
                let de = sigma.dual_hyperplane(e);
                let df = sigma.dual_hyperplane(f);
                let img = sigma.gate_face(e, f);
                if de == df {
                    assert_eq!(sigma.faces[img].dim, 1);
                } else {
                    assert_eq!(sigma.faces[img].dim, 0);
                }
            }
        }
        // E a face of F: gate_face(E, F) = E
        for f in 0..sigma.face_count() {
            for e in 0..sigma.face_count() {
                if covector_leq(&sigma.faces[f].sign, &sigma.faces[e].sign) {
                    assert_eq!(sigma.gate_face(e, f), e);
                }
            }
        }
    }

    #[test]
    fn salvetti_cell_counts() {
        // single hyperplane: 2 vertices, 2 oriented edges forming a circle
        let g = enumerate(&CoxeterDiagram::new(&["a"]).unwrap(), 10).unwrap();
        let arr = reflection_arrangement(&g);
        let hat = salvetti(&arr.complex);
        assert_eq!(hat.cells_of_dim(0).len(), 2);
        assert_eq!(hat.cells_of_dim(1).len(), 2);

        // hexagon: 6 vertices, 12 edges, 6 two-cells
        let arr = i2_arrangement(3);
        let hat = salvetti(&arr.complex);
        assert_eq!(hat.cells_of_dim(0).len(), 6);
        assert_eq!(hat.cells_of_dim(1).len(), 12);
        assert_eq!(hat.cells_of_dim(2).len(), 6);

        // quotient by W: presentation complex has 1 vertex, 2 edges, 1 cell
        let counts = salvetti_orbit_counts(&arr, &hat);
        assert_eq!(counts.get(&0), Some(&1));
        assert_eq!(counts.get(&1), Some(&2));
        assert_eq!(counts.get(&2), Some(&1));
    }

    #[test]
    fn salvetti_edge_orientation_farther_endpoint() {
        let arr = i2_arrangement(3);
        let hat = salvetti(&arr.complex);
        for c in hat.cells_of_dim(1) {
            let ends = hat.edge_ends(c);
            let d = hat.sigma.bfs_from(hat.cells[c].rep);
            assert_eq!(ends.start, hat.cells[c].rep);
            assert!(d[ends.end] > d[ends.start]);
        }
    }

    #[test]
    fn retraction_laws() {
        let arr = i2_arrangement(3);
        let sigma = &arr.complex;
        let hat = salvetti(sigma);
        // F = whole top cell of a central arrangement: identity
        let top = (0..sigma.face_count()).find(|&f| sigma.faces[f].dim == 2).unwrap();
        let r = retraction_to_standard(&hat, top);
        for c in 0..hat.cell_count() {
            assert_eq!(r.image[c], Some(c));
        }
        // general: idempotent, and image of Ehat is over gate_face(E, F)
        for f in 0..sigma.face_count() {
            let r = retraction_to_standard(&hat, f);
            for c in 0..hat.cell_count() {
                if let Some(img) = r.image[c] {
                    assert_eq!(r.image[img], Some(img), "retraction is idempotent");
                    let img_face = hat.cells[img].face;
                    assert_eq!(img_face, sigma.gate_face(hat.cells[c].face, f));
                }
            }
        }
    }

    #[test]
    fn retraction_of_two_cell_loop_has_signed_length_zero() {
        let arr = i2_arrangement(3);
        let hat = salvetti(&arr.complex);
        let sigma = &arr.complex;
        let edges: Vec<usize> = (0..sigma.face_count())
            .filter(|&f| sigma.faces[f].dim == 1)
            .collect();
        let two = hat.cells_of_dim(2)[0];
        let (left, right) = hat.two_cell_boundary_paths(two);
        let mut rev = right.clone();
        rev.reverse();
        let loop_path = {
            let up = hat.positive_path(&left);
            // walk back along the right path against its positive orientation
            let mut steps = up.steps.clone();
            for w in rev.windows(2) {
                let e = hat.positive_edge(w[1], w[0]);
                steps.push((e, false));
            }
            SalvettiPath {
                start: up.start,
                steps,
            }
        };
        for &e in &edges {
            let r = retraction_to_standard(&hat, e);
            let (img, signed) = r.apply_path(&hat, &loop_path);
            let _ = img;
            assert_eq!(signed, 0);
        }
    }

    #[test]
    fn collapse_functorial_and_hexagon_to_square() {
        let arr = i2_arrangement(3);
        let sigma = &arr.complex;
        // drop one line: 2 lines remain, 4 chambers, square
        let c = collapse_map(sigma, &[0, 1]);
        assert_eq!(c.sub.vertex_count(), 4);
        // identity collapse
        let idc = collapse_map(sigma, &[0, 1, 2]);
        assert_eq!(idc.sub.vertex_count(), sigma.vertex_count());
        // empty collapse: one-face complex
        let e = collapse_map(sigma, &[]);
        assert_eq!(e.sub.vertex_count(), 1);
        assert_eq!(e.sub.face_count(), 1);
        // functoriality: restricting 3 -> 2 -> 1 hyperplanes factors
        let c21 = collapse_map(&c.sub, &[0]);
        let direct = collapse_map(sigma, &[0]);
        for f in 0..sigma.face_count() {
            let via = c21.face_map[c.face_map[f]];
            let dir = direct.face_map[f];
            assert_eq!(c21.sub.faces[via].sign, direct.sub.faces[dir].sign);
        }
    }

    #[test]
    fn decone_examples() {
        // I2(3) deconed: the positive side of one line, a path of 3 chambers
        // (2 points on the slice line), matching the geometric backend
        let arr = i2_arrangement(3);
        let d = decone(&arr.complex, 0).unwrap();
        assert_eq!(d.vertex_count(), 3);
        let edges = (0..d.face_count()).filter(|&f| d.faces[f].dim == 1).count();
        assert_eq!(edges, 2);
        assert!(!d.central);

        // single hyperplane deconed at itself: empty arrangement, one face
        let g = enumerate(&CoxeterDiagram::new(&["a"]).unwrap(), 10).unwrap();
        let arr1 = reflection_arrangement(&g);
        let d1 = decone(&arr1.complex, 0).unwrap();
        assert_eq!(d1.vertex_count(), 1);
        assert_eq!(d1.n_hyperplanes, 0);
    }

    #[test]
    fn delta_word_lengths() {
        // single line in R^1 is not a line arrangement in R^2; use I2(3)
        let arr = i2_arrangement(3);
        let hat = salvetti(&arr.complex);
        let d = delta_word(&hat, 0);
        assert_eq!(d.steps.len(), 6);
        let (s, e) = d.endpoints(&hat);
        assert_eq!(s, 0);
        assert_eq!(e, 0);
        // all steps positively oriented
        assert!(d.steps.iter().all(|&(_, fwd)| fwd));
    }

    #[test]
    fn ell_segments_on_two_cell_boundaries() {
        let arr = i2_arrangement(3);
        let hat = salvetti(&arr.complex);
        for two in hat.cells_of_dim(2) {
            let (left, right) = hat.two_cell_boundary_paths(two);
            let mut rev = right;
            rev.reverse();
            let mut loop_chambers = left;
            loop_chambers.extend(&rev[1..]);
            let path = hat.positive_path(&loop_chambers);
            for l in 0..arr.complex.n_hyperplanes {
                assert_eq!(ell_segments(&hat, &path, l), 2);
            }
        }
        // path with no l-dual edges
        let verts = &arr.complex.faces[arr.complex.chambers[0]];
        let _ = verts;
        let single = SalvettiPath {
            start: 0,
            steps: vec![],
        };
        assert_eq!(ell_segments(&hat, &single, 0), 0);
    }

    #[test]
    fn chambers_biject_with_elements() {
        let g = enumerate(&CoxeterDiagram::linear(&["s1", "s2", "s3"], &[3, 4]), 10_000).unwrap();
        let arr = reflection_arrangement(&g);
        assert_eq!(arr.complex.vertex_count(), g.order());
        for w in g.all_elements() {
            let v = arr.chamber_of_element(w);
            assert_eq!(arr.element_of_chamber(v), w);
        }
        // faces biject with cosets over all parabolic types
        let mut count = 0usize;
        for mask in 0u32..(1 << 3) {
            let gens: Vec<usize> = (0..3).filter(|&s| mask & (1 << s) != 0).collect();
            let p = g.parabolic_elements(&gens);
            count += g.order() / p.len();
        }
        assert_eq!(arr.complex.face_count(), count);
    }
}
