//! Finite posets, typed order views on complexes, bowtie/flag predicates,
//! and joins/meets under the bowtie-free weakly-graded hypotheses.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::complex::TypedComplex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation is not irreflexive: {0} < {0}")]
    Reflexive(usize),
    #[error("relation is not antisymmetric: {0} and {1}")]
    Antisymmetric(usize, usize),
    #[error("relation is not transitive: {0} < {1} < {2} but not {0} < {2}")]
    NotTransitive(usize, usize, usize),
    #[error("supplied rank is not a poset map at {0} < {1}")]
    BadRank(usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
}

/// Finite strict poset with an optional rank function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    lt: Vec<Vec<bool>>,
    rank: Vec<i64>,
    rank_supplied: bool,
}

impl FinitePoset {
    /// Build from an explicit strict relation; errors unless it is already
    /// irreflexive, antisymmetric, and transitive.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<FinitePoset, PosetError> {
        let mut lt = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a == b {
                return Err(PosetError::Reflexive(a));
            }
            lt[a][b] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if lt[a][b] && lt[b][a] {
                    return Err(PosetError::Antisymmetric(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if lt[a][b] {
                    for c in 0..n {
                        if lt[b][c] && !lt[a][c] {
                            return Err(PosetError::NotTransitive(a, b, c));
                        }
                    }
                }
            }
        }
        let mut p = FinitePoset {
            n,
            lt,
            rank: Vec::new(),
            rank_supplied: false,
        };
        p.rank = p.longest_chain_rank();
        Ok(p)
    }

    /// Build from cover pairs, taking the transitive closure.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<FinitePoset, PosetError> {
        let mut lt = vec![vec![false; n]; n];
        for &(a, b) in covers {
            if a == b {
                return Err(PosetError::Reflexive(a));
            }
            lt[a][b] = true;
        }
        // Warshall closure; a cycle shows up as a[i][i].
        for k in 0..n {
            for i in 0..n {
                if lt[i][k] {
                    for j in 0..n {
                        if lt[k][j] {
                            lt[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            if lt[i][i] {
                return Err(PosetError::Reflexive(i));
            }
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| lt[a][b])
            .collect();
        FinitePoset::from_relation(n, &pairs)
    }

    pub fn with_rank(mut self, rank: Vec<i64>) -> Result<FinitePoset, PosetError> {
        assert_eq!(rank.len(), self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt[a][b] && rank[a] >= rank[b] {
                    return Err(PosetError::BadRank(a, b));
                }
            }
        }
        self.rank = rank;
        self.rank_supplied = true;
        Ok(self)
    }

    fn longest_chain_rank(&self) -> Vec<i64> {
        // longest chain ending at each element; a poset map for any finite poset
        let mut rank = vec![0i64; self.n];
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (0..self.n).filter(|&u| self.lt[u][v]).count());
        for &v in &order {
            for u in 0..self.n {
                if self.lt[u][v] {
                    rank[v] = rank[v].max(rank[u] + 1);
                }
            }
        }
        rank
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a][b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.lt[a][b]
    }

    pub fn rank_of(&self, a: usize) -> i64 {
        self.rank[a]
    }

    /// The rank certificate makes every finite poset weakly graded; a
    /// supplied rank may fail and is rejected in `with_rank`.
    pub fn is_weakly_graded(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| !self.lt[a][b] || self.rank[a] < self.rank[b]))
    }

    pub fn upper_bounds(&self, q: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| q.iter().all(|&v| self.leq(v, x)))
            .collect()
    }

    pub fn lower_bounds(&self, q: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| q.iter().all(|&v| self.leq(x, v)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| !self.lt[x][y]))
            .collect()
    }

    /// Poset text format: `elem <id> rank <n>` then `lt <a> <b>` cover lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in 0..self.n {
            s.push_str(&format!("elem {} rank {}\n", v, self.rank[v]));
        }
        // covers: a < b with nothing strictly between
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt[a][b] && !(0..self.n).any(|c| self.lt[a][c] && self.lt[c][b]) {
                    s.push_str(&format!("lt {a} {b}\n"));
                }
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<FinitePoset, PosetError> {
        let mut ranks: Vec<(usize, i64)> = Vec::new();
        let mut covers: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| PosetError::Parse {
                line: lineno + 1,
                msg,
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["elem", id, "rank", r] => {
                    let id = id.parse().map_err(|_| err("bad id".into()))?;
                    let r = r.parse().map_err(|_| err("bad rank".into()))?;
                    ranks.push((id, r));
                }
                ["lt", a, b] => {
                    let a = a.parse().map_err(|_| err("bad id".into()))?;
                    let b = b.parse().map_err(|_| err("bad id".into()))?;
                    covers.push((a, b));
                }
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }
        let n = ranks.iter().map(|&(id, _)| id + 1).max().unwrap_or(0);
        let mut rank = vec![0i64; n];
        for (id, r) in ranks {
            rank[id] = r;
        }
        FinitePoset::from_covers(n, &covers)?.with_rank(rank)
    }
}

/// A bowtie x1 y1 x2 y2 (x_i < y_j for all i, j) with its resolution status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bowtie {
    pub x1: usize,
    pub x2: usize,
    pub y1: usize,
    pub y2: usize,
    /// middle element z with x_i <= z <= y_j, if any
    pub resolved_by: Option<usize>,
}

pub trait OrderLike {
    fn size(&self) -> usize;
    fn lt(&self, a: usize, b: usize) -> bool;
    fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }
}

impl OrderLike for FinitePoset {
    fn size(&self) -> usize {
        self.n
    }
    fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a][b]
    }
}

/// All bowties of the order, each flagged with a resolving middle element if
/// one exists; bowtie free iff all are resolved.
pub fn bowties<P: OrderLike>(p: &P) -> Vec<Bowtie> {
    let n = p.size();
    let mut out = Vec::new();
    for x1 in 0..n {
        for x2 in (x1 + 1)..n {
            for y1 in 0..n {
                if y1 == x1 || y1 == x2 {
                    continue;
                }
                for y2 in (y1 + 1)..n {
                    if y2 == x1 || y2 == x2 {
                        continue;
                    }
                    let all = [x1, x2]
                        .iter()
                        .all(|&x| [y1, y2].iter().all(|&y| p.lt(x, y)));
                    if !all {
                        continue;
                    }
                    let resolved_by = (0..n).find(|&z| {
                        [x1, x2].iter().all(|&x| p.leq(x, z))
                            && [y1, y2].iter().all(|&y| p.leq(z, y))
                    });
                    out.push(Bowtie {
                        x1,
                        x2,
                        y1,
                        y2,
                        resolved_by,
                    });
                }
            }
        }
    }
    out
}

pub fn is_bowtie_free<P: OrderLike>(p: &P) -> bool {
    bowties(p).iter().all(|b| b.resolved_by.is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Element(usize),
    NoBound,
}

/// Join of a subset under the bowtie-free weakly-graded hypotheses
/// (both checked; violations are errors). Finite case folds pairwise joins;
/// each pairwise join is the unique minimum of the common upper bounds.
pub fn join(p: &FinitePoset, q: &[usize]) -> Result<Bound, PosetError> {
    bound_of(p, q, true)
}

pub fn meet(p: &FinitePoset, q: &[usize]) -> Result<Bound, PosetError> {
    bound_of(p, q, false)
}

fn bound_of(p: &FinitePoset, q: &[usize], upper: bool) -> Result<Bound, PosetError> {
    if !is_bowtie_free(p) {
        return Err(PosetError::HypothesisFailed("poset has an unresolved bowtie".into()));
    }
    if !p.is_weakly_graded() {
        return Err(PosetError::HypothesisFailed("rank is not a poset map".into()));
    }
    if q.is_empty() {
        return Ok(Bound::NoBound);
    }
    let mut acc = q[0];
    for &v in &q[1..] {
        match pair_bound(p, acc, v, upper) {
            Some(z) => acc = z,
            None => return Ok(Bound::NoBound),
        }
    }
    Ok(Bound::Element(acc))
}

fn pair_bound(p: &FinitePoset, a: usize, b: usize, upper: bool) -> Option<usize> {
    let bounds = if upper {
        p.upper_bounds(&[a, b])
    } else {
        p.lower_bounds(&[a, b])
    };
    if bounds.is_empty() {
        return None;
    }
    // the extremum exists and is unique under the hypotheses
    let best = *bounds
        .iter()
        .min_by_key(|&&x| if upper { p.rank[x] } else { -p.rank[x] })
        .unwrap();
    for &x in &bounds {
        let ok = if upper { p.leq(best, x) } else { p.leq(x, best) };
        assert!(
            ok,
            "bowtie-free weakly graded poset must have unique pairwise bounds"
        );
    }
    Some(best)
}

/// Flag-condition report with counterexample triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagReport {
    pub upward_flag: bool,
    pub downward_flag: bool,
    pub weakly_upward_flag: bool,
    pub weakly_downward_flag: bool,
    pub upward_witness: Option<(usize, usize, usize)>,
    pub downward_witness: Option<(usize, usize, usize)>,
    pub weakly_upward_witness: Option<(usize, usize, usize)>,
    pub weakly_downward_witness: Option<(usize, usize, usize)>,
}

pub fn flag_checks(p: &FinitePoset) -> FlagReport {
    let maximal: BTreeSet<usize> = p.maximal_elements().into_iter().collect();
    let minimal: BTreeSet<usize> = (0..p.n)
        .filter(|&x| (0..p.n).all(|y| !p.lt[y][x]))
        .collect();
    let up = flag_scan(p, true, None);
    let down = flag_scan(p, false, None);
    let wup = flag_scan(p, true, Some(&maximal));
    let wdown = flag_scan(p, false, Some(&minimal));
    FlagReport {
        upward_flag: up.is_none(),
        downward_flag: down.is_none(),
        weakly_upward_flag: wup.is_none(),
        weakly_downward_flag: wdown.is_none(),
        upward_witness: up,
        downward_witness: down,
        weakly_upward_witness: wup,
        weakly_downward_witness: wdown,
    }
}

/// For the weak variants, `excluded` holds the extremal elements that do not
/// count as pairwise bounds.
fn flag_scan(
    p: &FinitePoset,
    upward: bool,
    excluded: Option<&BTreeSet<usize>>,
) -> Option<(usize, usize, usize)> {
    let n = p.n;
    let pair_bounded = |a: usize, b: usize| {
        (0..n).any(|z| {
            let bounds = if upward {
                p.leq(a, z) && p.leq(b, z)
            } else {
                p.leq(z, a) && p.leq(z, b)
            };
            bounds && excluded.map_or(true, |ex| !ex.contains(&z))
        })
    };
    for a in 0..n {
        for b in (a + 1)..n {
            if !pair_bounded(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if pair_bounded(a, c) && pair_bounded(b, c) {
                    let common = (0..n).any(|z| {
                        if upward {
                            p.leq(a, z) && p.leq(b, z) && p.leq(c, z)
                        } else {
                            p.leq(z, a) && p.leq(z, b) && p.leq(z, c)
                        }
                    });
                    if !common {
                        return Some((a, b, c));
                    }
                }
            }
        }
    }
    None
}

/// The relation induced on a typed complex by a total order on its types:
/// x < y iff x, y adjacent and Type(x) < Type(y).
#[derive(Clone, Debug)]
pub struct TypedOrderView<'a> {
    pub complex: &'a TypedComplex,
    /// position of each type in the chosen total order
    pub type_position: Vec<usize>,
    /// vertices whose neighbourhoods are complete (window honesty); `None`
    /// means the whole complex is exact.
    pub certified: Option<Vec<bool>>,
}

impl<'a> TypedOrderView<'a> {
    pub fn new(complex: &'a TypedComplex, type_order: &[usize]) -> TypedOrderView<'a> {
        assert_eq!(type_order.len(), complex.type_names().len());
        let mut pos = vec![usize::MAX; type_order.len()];
        for (i, &t) in type_order.iter().enumerate() {
            pos[t] = i;
        }
        assert!(pos.iter().all(|&p| p != usize::MAX), "total order on all types");
        TypedOrderView {
            complex,
            type_position: pos,
            certified: None,
        }
    }

    pub fn with_certified(mut self, certified: Vec<bool>) -> Self {
        assert_eq!(certified.len(), self.complex.vertex_count());
        self.certified = Some(certified);
        self
    }

    fn is_certified(&self, v: usize) -> bool {
        self.certified.as_ref().map_or(true, |c| c[v])
    }

    /// Materialize as a FinitePoset; only valid when the relation is a
    /// partial order.
    pub fn to_poset(&self) -> Result<FinitePoset, PosetError> {
        let n = self.complex.vertex_count();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        FinitePoset::from_relation(n, &pairs)
    }
}

impl OrderLike for TypedOrderView<'_> {
    fn size(&self) -> usize {
        self.complex.vertex_count()
    }
    fn lt(&self, a: usize, b: usize) -> bool {
        self.complex.has_edge(a, b)
            && self.type_position[self.complex.type_of(a)] < self.type_position[self.complex.type_of(b)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderVerdict {
    /// no violation and no uncertified vertices
    Holds,
    /// no violation among certified triples; uncertified region unchecked
    HoldsOnCertified,
    /// transitivity violation with all three vertices certified
    Fails((usize, usize, usize)),
}

/// Transitivity check of the induced relation: a violating triple is
/// x < y < z with x, z not adjacent.
pub fn is_partial_order(view: &TypedOrderView) -> OrderVerdict {
    let n = view.size();
    let mut any_uncertified = false;
    for v in 0..n {
        if !view.is_certified(v) {
            any_uncertified = true;
        }
    }
    for y in 0..n {
        for x in 0..n {
            if !view.lt(x, y) {
                continue;
            }
            for z in 0..n {
                if view.lt(y, z) && !view.lt(x, z) {
                    if view.is_certified(x) && view.is_certified(y) && view.is_certified(z) {
                        return OrderVerdict::Fails((x, y, z));
                    }
                }
            }
        }
    }
    if any_uncertified {
        OrderVerdict::HoldsOnCertified
    } else {
        OrderVerdict::Holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn boolean_lattice_3() -> FinitePoset {
        // subsets of {0,1,2} ordered by inclusion; id = bitmask
        let mut pairs = Vec::new();
        for a in 0u8..8 {
            for b in 0u8..8 {
                if a != b && a & b == a {
                    pairs.push((a as usize, b as usize));
                }
            }
        }
        FinitePoset::from_relation(8, &pairs).unwrap()
    }

    #[test]
    fn construction_rejects_non_transitive() {
        assert!(matches!(
            FinitePoset::from_relation(3, &[(0, 1), (1, 2)]),
            Err(PosetError::NotTransitive(0, 1, 2))
        ));
        assert!(FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).is_ok());
    }

    #[test]
    fn bowtie_detection_and_resolution() {
        // 2x2 grid without middle: one unresolved bowtie
        let p = FinitePoset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let bs = bowties(&p);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].resolved_by, None);
        assert!(!is_bowtie_free(&p));

        // adding a middle resolves it (and creates further resolved bowties
        // through the middle, e.g. {0,4} < {2,3})
        let p = FinitePoset::from_covers(5, &[(0, 4), (1, 4), (4, 2), (4, 3)]).unwrap();
        let bs = bowties(&p);
        assert!(bs.iter().all(|b| b.resolved_by == Some(4)));
        assert!(bs
            .iter()
            .any(|b| (b.x1, b.x2, b.y1, b.y2) == (0, 1, 2, 3)));
        assert!(is_bowtie_free(&p));
    }

    #[test]
    fn face_poset_of_square_has_no_bowtie() {
        // vertices 0..4, edges 4..8, square 8; covers vertex < incident edges < square
        let covers = vec![
            (0, 4),
            (1, 4),
            (1, 5),
            (2, 5),
            (2, 6),
            (3, 6),
            (3, 7),
            (0, 7),
            (4, 8),
            (5, 8),
            (6, 8),
            (7, 8),
        ];
        let p = FinitePoset::from_covers(9, &covers).unwrap();
        // opposite vertices and opposite edges never satisfy x_i < y_j for all i,j
        assert!(bowties(&p).iter().all(|b| b.resolved_by.is_some()));
    }

    #[test]
    fn join_examples() {
        let p = boolean_lattice_3();
        assert_eq!(join(&p, &[3]).unwrap(), Bound::Element(3));
        assert_eq!(join(&p, &[1, 2]).unwrap(), Bound::Element(3));
        assert_eq!(meet(&p, &[3, 5]).unwrap(), Bound::Element(1));
        assert_eq!(join(&p, &[1, 2, 4]).unwrap(), Bound::Element(7));
    }

    #[test]
    fn join_rejects_bowtie_poset() {
        let p = FinitePoset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(matches!(join(&p, &[0, 1]), Err(PosetError::HypothesisFailed(_))));
    }

    /// Random bowtie-free weakly graded posets; join must equal the
    /// brute-force least upper bound.
    #[test]
    fn join_matches_brute_force_on_random_posets() {
        let mut rng = StdRng::seed_from_u64(7);
        let mut tested = 0;
        while tested < 200 {
            let n = rng.gen_range(4..=12);
            let mut covers = Vec::new();
            for b in 1..n {
                for a in 0..b {
                    if rng.gen_bool(0.25) {
                        covers.push((a, b));
                    }
                }
            }
            let p = match FinitePoset::from_covers(n, &covers) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if !is_bowtie_free(&p) {
                continue;
            }
            tested += 1;
            for _ in 0..10 {
                let k = rng.gen_range(1..=3.min(n));
                let q: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
                let ub = p.upper_bounds(&q);
                let brute = ub
                    .iter()
                    .copied()
                    .find(|&x| ub.iter().all(|&y| p.leq(x, y)));
                match join(&p, &q).unwrap() {
                    Bound::Element(j) => assert_eq!(Some(j), brute),
                    Bound::NoBound => assert!(ub.is_empty()),
                }
            }
        }
    }

    #[test]
    fn flag_checks_examples() {
        // chain: all flags hold
        let chain = FinitePoset::from_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = flag_checks(&chain);
        assert!(r.upward_flag && r.downward_flag && r.weakly_upward_flag && r.weakly_downward_flag);

        // three atoms with only pairwise tops: upward flag fails
        let covers = vec![(0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)];
        let p = FinitePoset::from_covers(6, &covers).unwrap();
        let r = flag_checks(&p);
        assert!(!r.upward_flag);
        assert_eq!(r.upward_witness, Some((0, 1, 2)));
        // all pair-tops are maximal, so the weak variant holds vacuously
        assert!(r.weakly_upward_flag);
    }

    #[test]
    fn typed_order_view_transitivity() {
        // single triangle with ordered types: partial order
        let mut c = TypedComplex::new(vec!["s".into(), "t".into(), "p".into()]);
        let a = c.add_vertex(0);
        let b = c.add_vertex(1);
        let d = c.add_vertex(2);
        c.add_edge(a, b).unwrap();
        c.add_edge(b, d).unwrap();
        c.add_edge(a, d).unwrap();
        let view = TypedOrderView::new(&c, &[0, 1, 2]);
        assert_eq!(is_partial_order(&view), OrderVerdict::Holds);

        // path x-y-z with increasing types and xz missing: fails
        let mut c2 = TypedComplex::new(vec!["s".into(), "t".into(), "p".into()]);
        let x = c2.add_vertex(0);
        let y = c2.add_vertex(1);
        let z = c2.add_vertex(2);
        c2.add_edge(x, y).unwrap();
        c2.add_edge(y, z).unwrap();
        let view = TypedOrderView::new(&c2, &[0, 1, 2]);
        assert_eq!(is_partial_order(&view), OrderVerdict::Fails((x, y, z)));

        // same complex, middle vertex uncertified: no certified violation
        let view = TypedOrderView::new(&c2, &[0, 1, 2]).with_certified(vec![true, false, true]);
        assert_eq!(is_partial_order(&view), OrderVerdict::HoldsOnCertified);
    }

    #[test]
    fn restriction_of_passing_view_passes() {
        // property: restricting a passing view to a full subcomplex passes
        let mut c = TypedComplex::new(vec!["s".into(), "t".into(), "p".into()]);
        let v0 = c.add_vertex(0);
        let v1 = c.add_vertex(1);
        let v2 = c.add_vertex(2);
        let v3 = c.add_vertex(0);
        for (a, b) in [(v0, v1), (v1, v2), (v0, v2), (v3, v1), (v3, v2)] {
            c.add_edge(a, b).unwrap();
        }
        let view = TypedOrderView::new(&c, &[0, 1, 2]);
        assert_eq!(is_partial_order(&view), OrderVerdict::Holds);
        let sub = c.induced(&[v0, v1, v2]);
        let view_sub = TypedOrderView::new(&sub, &[0, 1, 2]);
        assert_eq!(is_partial_order(&view_sub), OrderVerdict::Holds);
    }

    #[test]
    fn poset_text_round_trip() {
        let p = boolean_lattice_3();
        let text = p.to_text();
        let back = FinitePoset::parse(&text).unwrap();
        assert_eq!(back.n, p.n);
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(back.lt(a, b), p.lt(a, b));
            }
        }
        assert_eq!(back.to_text(), text);
    }
}
