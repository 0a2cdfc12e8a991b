//! Finite flag simplicial complexes with a type function, plus the shared
//! cell-exchange text/JSON format.
//!
//! A `TypedComplex` stores its 1-skeleton only; simplices are the cliques
//! (the complex is flag by construction). Adjacent vertices must carry
//! distinct types.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("adjacent vertices {0} and {1} share type {2}")]
    AdjacentSameType(usize, usize, String),
    #[error("vertex index {0} out of range")]
    BadVertex(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedComplex {
    type_names: Vec<String>,
    vertex_types: Vec<usize>,
    adj: Vec<BTreeSet<usize>>,
    vertex_attrs: Vec<BTreeMap<String, String>>,
}

impl TypedComplex {
    pub fn new(type_names: Vec<String>) -> TypedComplex {
        TypedComplex {
            type_names,
            vertex_types: Vec::new(),
            adj: Vec::new(),
            vertex_attrs: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, type_id: usize) -> usize {
        assert!(type_id < self.type_names.len());
        self.vertex_types.push(type_id);
        self.adj.push(BTreeSet::new());
        self.vertex_attrs.push(BTreeMap::new());
        self.vertex_types.len() - 1
    }

    pub fn set_attr(&mut self, v: usize, key: &str, value: String) {
        self.vertex_attrs[v].insert(key.to_string(), value);
    }

    pub fn attr(&self, v: usize, key: &str) -> Option<&str> {
        self.vertex_attrs[v].get(key).map(|s| s.as_str())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), ComplexError> {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return Err(ComplexError::BadVertex(u.max(v)));
        }
        if self.vertex_types[u] == self.vertex_types[v] {
            return Err(ComplexError::AdjacentSameType(
                u,
                v,
                self.type_names[self.vertex_types[u]].clone(),
            ));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_types.len()
    }

    pub fn type_of(&self, v: usize) -> usize {
        self.vertex_types[v]
    }

    pub fn type_name(&self, t: usize) -> &str {
        &self.type_names[t]
    }

    pub fn type_names(&self) -> &[String] {
        &self.type_names
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(&v)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
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

    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Link of a vertex: induced complex on its neighbours, with a map back
    /// to ambient vertex ids.
    pub fn link(&self, v: usize) -> (TypedComplex, Vec<usize>) {
        let verts: Vec<usize> = self.adj[v].iter().copied().collect();
        (self.induced(&verts), verts)
    }

    /// Full subcomplex on `verts`; the returned complex reindexes vertices in
    /// the given order.
    pub fn induced(&self, verts: &[usize]) -> TypedComplex {
        let mut c = TypedComplex::new(self.type_names.clone());
        let mut back = HashMap::new();
        for (new, &old) in verts.iter().enumerate() {
            let nv = c.add_vertex(self.vertex_types[old]);
            debug_assert_eq!(nv, new);
            c.vertex_attrs[new] = self.vertex_attrs[old].clone();
            back.insert(old, new);
        }
        for (i, &u) in verts.iter().enumerate() {
            for &v in verts[i + 1..].iter() {
                if self.has_edge(u, v) {
                    c.add_edge(back[&u], back[&v]).expect("types already distinct");
                }
            }
        }
        c
    }

    /// All maximal cliques (maximal simplices), sorted for determinism.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut r = Vec::new();
        let p: Vec<usize> = (0..n).collect();
        let x = Vec::new();
        self.bron_kerbosch(&mut r, p, x, &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p.iter().chain(x.iter()).copied().max_by_key(|&v| self.degree(v));
        let candidates: Vec<usize> = match pivot {
            Some(piv) => p.iter().copied().filter(|&v| !self.has_edge(piv, v)).collect(),
            None => p.clone(),
        };
        let mut p = p;
        let mut x = x;
        for v in candidates {
            r.push(v);
            let np: Vec<usize> = p.iter().copied().filter(|&u| self.has_edge(u, v)).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&u| self.has_edge(u, v)).collect();
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }

    /// All cliques (simplices), listed by sorted vertex tuples.
    pub fn all_simplices(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(c: &TypedComplex, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            for v in start..c.vertex_count() {
                if cur.iter().all(|&u| c.has_edge(u, v)) {
                    cur.push(v);
                    out.push(cur.clone());
                    rec(c, v + 1, cur, out);
                    cur.pop();
                }
            }
        }
        rec(self, 0, &mut cur, &mut out);
        let _ = n;
        out
    }

    pub fn graph_distance(&self, from: usize, to: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[from] = 0;
        let mut q = VecDeque::new();
        q.push_back(from);
        while let Some(u) = q.pop_front() {
            if u == to {
                return Some(dist[u]);
            }
            for v in self.neighbours(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        None
    }

    pub fn bfs_distances(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[from] = 0;
        let mut q = VecDeque::new();
        q.push_back(from);
        while let Some(u) = q.pop_front() {
            for v in self.neighbours(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// Iterative degree/type refinement hash of the typed graph; isomorphic
    /// typed graphs hash equal. Used for desk-scale link-isomorphism checks.
    pub fn canonical_hash(&self, rounds: usize) -> u64 {
        let n = self.vertex_count();
        let mut colors: Vec<u64> = (0..n)
            .map(|v| fnv(&[self.vertex_types[v] as u64 + 1]))
            .collect();
        for _ in 0..rounds {
            let mut next = Vec::with_capacity(n);
            for v in 0..n {
                let mut neigh: Vec<u64> = self.neighbours(v).map(|u| colors[u]).collect();
                neigh.sort_unstable();
                let mut data = vec![colors[v]];
                data.extend(neigh);
                next.push(fnv(&data));
            }
            colors = next;
        }
        colors.sort_unstable();
        fnv(&colors)
    }

    /// Euler characteristic computed over all simplices.
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for s in self.all_simplices() {
            if s.len() % 2 == 1 {
                chi += 1;
            } else {
                chi -= 1;
            }
        }
        chi
    }

    pub fn to_exchange(&self) -> ExchangeDoc {
        let mut cells = Vec::new();
        let simplices = self.all_simplices();
        // id per simplex: position among same-dimension cells in sorted order
        let mut by_dim: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        for s in simplices {
            by_dim.entry(s.len() - 1).or_default().push(s);
        }
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        for (dim, mut cells_of_dim) in by_dim.clone() {
            cells_of_dim.sort();
            for (i, s) in cells_of_dim.iter().enumerate() {
                ids.insert(s.clone(), i);
                let mut attrs = BTreeMap::new();
                if dim == 0 {
                    let v = s[0];
                    attrs.insert(
                        "type".to_string(),
                        self.type_names[self.vertex_types[v]].clone(),
                    );
                    for (k, val) in &self.vertex_attrs[v] {
                        attrs.insert(k.clone(), val.clone());
                    }
                }
                let boundary = if dim == 0 {
                    Vec::new()
                } else {
                    let mut b = Vec::new();
                    for skip in 0..s.len() {
                        let mut face: Vec<usize> = s.clone();
                        face.remove(skip);
                        b.push(ids[&face]);
                    }
                    b.sort_unstable();
                    b
                };
                cells.push(ExchangeCell {
                    dim,
                    id: i,
                    boundary,
                    attrs,
                });
            }
        }
        ExchangeDoc { cells }
    }
}

/// One cell of the shared complex-exchange format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeCell {
    pub dim: usize,
    pub id: usize,
    pub boundary: Vec<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub attrs: BTreeMap<String, String>,
}

/// Structured cell list, canonically ordered by (dimension, id).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeDoc {
    pub cells: Vec<ExchangeCell>,
}

impl ExchangeDoc {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cells {
            s.push_str(&format!("cell {} {}", c.dim, c.id));
            if !c.boundary.is_empty() {
                s.push_str(" [");
                let b: Vec<String> = c.boundary.iter().map(|x| x.to_string()).collect();
                s.push_str(&b.join(" "));
                s.push(']');
            }
            for (k, v) in &c.attrs {
                s.push_str(&format!(" {k}={v}"));
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn parse(text: &str) -> Result<ExchangeDoc, ComplexError> {
        let mut cells = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| ComplexError::Parse {
                line: lineno + 1,
                msg,
            };
            let rest = line
                .strip_prefix("cell ")
                .ok_or_else(|| err(format!("expected cell line, got {line:?}")))?;
            let (head, tail) = match rest.find('[') {
                Some(i) => (&rest[..i], Some(&rest[i..])),
                None => (rest, None),
            };
            let mut head_toks = head.split_whitespace();
            let dim: usize = head_toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| err("missing dim".into()))?;
            let id: usize = head_toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| err("missing id".into()))?;
            let mut boundary = Vec::new();
            let mut attr_str = head_toks.collect::<Vec<_>>().join(" ");
            if let Some(tail) = tail {
                let close = tail.find(']').ok_or_else(|| err("unclosed boundary".into()))?;
                for t in tail[1..close].split_whitespace() {
                    boundary.push(t.parse().map_err(|_| err(format!("bad boundary id {t:?}")))?);
                }
                attr_str = tail[close + 1..].trim().to_string();
            }
            let mut attrs = BTreeMap::new();
            for kv in attr_str.split_whitespace() {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| err(format!("bad attribute {kv:?}")))?;
                attrs.insert(k.to_string(), v.to_string());
            }
            cells.push(ExchangeCell {
                dim,
                id,
                boundary,
                attrs,
            });
        }
        Ok(ExchangeDoc { cells })
    }
}

fn fnv(data: &[u64]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &x in data {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> TypedComplex {
        let mut c = TypedComplex::new(vec!["s".into(), "t".into(), "p".into()]);
        let a0 = c.add_vertex(0);
        let b0 = c.add_vertex(1);
        let c0 = c.add_vertex(2);
        let a1 = c.add_vertex(0);
        for (u, v) in [(a0, b0), (b0, c0), (a0, c0), (a1, b0), (a1, c0)] {
            c.add_edge(u, v).unwrap();
        }
        c
    }

    #[test]
    fn rejects_same_type_edge() {
        let mut c = TypedComplex::new(vec!["s".into()]);
        let u = c.add_vertex(0);
        let v = c.add_vertex(0);
        assert!(matches!(
            c.add_edge(u, v),
            Err(ComplexError::AdjacentSameType(_, _, _))
        ));
    }

    #[test]
    fn maximal_simplices_of_two_triangles() {
        let c = two_triangles();
        assert_eq!(c.maximal_simplices(), vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn link_is_induced() {
        let c = two_triangles();
        let (lk, back) = c.link(1);
        assert_eq!(back, vec![0, 2, 3]);
        assert_eq!(lk.vertex_count(), 3);
        assert!(lk.has_edge(0, 1) && lk.has_edge(1, 2) && !lk.has_edge(0, 2));
    }

    #[test]
    fn exchange_round_trip() {
        let c = two_triangles();
        let doc = c.to_exchange();
        let text = doc.to_text();
        let parsed = ExchangeDoc::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.to_text(), text);
        let json: ExchangeDoc = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(json, doc);
    }

    #[test]
    fn canonical_hash_distinguishes_and_matches() {
        let c1 = two_triangles();
        let c2 = two_triangles();
        assert_eq!(c1.canonical_hash(3), c2.canonical_hash(3));
        let mut c3 = two_triangles();
        let extra = c3.add_vertex(1);
        c3.add_edge(extra, 0).unwrap();
        assert_ne!(c1.canonical_hash(3), c3.canonical_hash(3));
    }
}
