//! Rewriting oracles for desk validation, independent of the Garside
//! normal-form code path.
//!
//! [`DihedralOracle`] decides the word problem of A(I2(m)) exactly through
//! the convergent rewriting system of the torus-knot / central-extension
//! presentation: for odd m, A(I2(m)) = <x,y | x^2 = y^m> with x = Delta and
//! y = ab; for even m = 2k, A(I2(m)) = <x,y | x y^k = y^k x> with x = a and
//! y = ab. In both cases z (= x^2 = y^m, resp. y^k) is central of infinite
//! order and the quotient is a free product of cyclic groups, so the pair
//! (z-exponent, syllable normal form) is a complete invariant.
//!
//! [`BraidBfsOracle`] applies braid relations, free reductions, and bounded
//! insertions breadth-first with state caps; it is three-valued and is
//! cross-checked against the dihedral oracle in tests.

use std::collections::{HashSet, VecDeque};

use crate::diagram::{CoxeterDiagram, EdgeLabel};

use super::{generator_classes, Letter, SignedWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Syllable {
    /// x-syllable; the exponent is always 1 for odd m (x has order 2 mod z)
    X(i64),
    /// y-syllable with exponent in 1..order
    Y(i64),
}

/// Central exponent plus syllable word: a complete invariant for elements of
/// the dihedral Artin group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmalgamForm {
    m: u32,
    pub z: i64,
    pub syls: VecDeque<Syllable>,
}

/// Exact word-problem oracle for the dihedral Artin group A(I2(m)), m >= 2.
pub struct DihedralOracle {
    m: u32,
}

impl DihedralOracle {
    pub fn new(m: u32) -> DihedralOracle {
        assert!(m >= 2);
        DihedralOracle { m }
    }

    pub fn identity(&self) -> AmalgamForm {
        AmalgamForm {
            m: self.m,
            z: 0,
            syls: VecDeque::new(),
        }
    }

    pub fn form_of(&self, word: &[Letter]) -> AmalgamForm {
        let mut f = self.identity();
        for &l in word {
            f.push_right(l.gen, l.inverse);
        }
        f
    }

    /// Complete invariant (central exponent, syllable word).
    pub fn canonical(&self, word: &[Letter]) -> (i64, Vec<Syllable>) {
        let f = self.form_of(word);
        (f.z, f.syls.into_iter().collect())
    }

    pub fn equal(&self, u: &[Letter], v: &[Letter]) -> bool {
        self.canonical(u) == self.canonical(v)
    }

    pub fn is_identity(&self, u: &[Letter]) -> bool {
        let f = self.form_of(u);
        f.z == 0 && f.syls.is_empty()
    }
}

impl AmalgamForm {
    fn odd(&self) -> bool {
        self.m % 2 == 1
    }

    /// y-order in the free-product quotient: m for odd, m/2 for even.
    fn y_order(&self) -> i64 {
        if self.odd() {
            self.m as i64
        } else {
            (self.m / 2) as i64
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.z == 0 && self.syls.is_empty()
    }

    /// Multiply by an Artin generator (or inverse) on the right.
    pub fn push_right(&mut self, gen: usize, inverse: bool) {
        assert!(gen < 2, "dihedral words use two generators");
        let half_down = ((self.m as i64) - 1) / 2;
        let half_up = ((self.m as i64) + 1) / 2;
        if self.odd() {
            // a = y^-(m-1)/2 x, b = x^-1 y^(m+1)/2
            match (gen, inverse) {
                (0, false) => {
                    self.y_right(-half_down);
                    self.x_right(1);
                }
                (0, true) => {
                    self.x_right(-1);
                    self.y_right(half_down);
                }
                (1, false) => {
                    self.x_right(-1);
                    self.y_right(half_up);
                }
                _ => {
                    self.y_right(-half_up);
                    self.x_right(1);
                }
            }
        } else {
            // a = x, b = x^-1 y
            match (gen, inverse) {
                (0, false) => self.x_right(1),
                (0, true) => self.x_right(-1),
                (1, false) => {
                    self.x_right(-1);
                    self.y_right(1);
                }
                _ => {
                    self.y_right(-1);
                    self.x_right(1);
                }
            }
        }
    }

    /// Multiply by an Artin generator (or inverse) on the left.
    pub fn push_left(&mut self, gen: usize, inverse: bool) {
        assert!(gen < 2, "dihedral words use two generators");
        let half_down = ((self.m as i64) - 1) / 2;
        let half_up = ((self.m as i64) + 1) / 2;
        // push the image word right-to-left
        if self.odd() {
            match (gen, inverse) {
                (0, false) => {
                    self.x_left(1);
                    self.y_left(-half_down);
                }
                (0, true) => {
                    self.y_left(half_down);
                    self.x_left(-1);
                }
                (1, false) => {
                    self.y_left(half_up);
                    self.x_left(-1);
                }
                _ => {
                    self.x_left(1);
                    self.y_left(-half_up);
                }
            }
        } else {
            match (gen, inverse) {
                (0, false) => self.x_left(1),
                (0, true) => self.x_left(-1),
                (1, false) => {
                    self.y_left(1);
                    self.x_left(-1);
                }
                _ => {
                    self.x_left(1);
                    self.y_left(-1);
                }
            }
        }
    }

    fn x_right(&mut self, e: i64) {
        if e == 0 {
            return;
        }
        if self.odd() {
            // x^-1 = z^-1 x; every pushed x merges with an x-tail into z
            self.z += e.min(0);
            for _ in 0..e.unsigned_abs() {
                match self.syls.back() {
                    Some(Syllable::X(_)) => {
                        self.syls.pop_back();
                        self.z += 1;
                        self.merge_back();
                    }
                    _ => self.syls.push_back(Syllable::X(1)),
                }
            }
        } else {
            match self.syls.back_mut() {
                Some(Syllable::X(j)) => {
                    *j += e;
                    if *j == 0 {
                        self.syls.pop_back();
                        self.merge_back();
                    }
                }
                _ => self.syls.push_back(Syllable::X(e)),
            }
        }
    }

    fn y_right(&mut self, e: i64) {
        if e == 0 {
            return;
        }
        let order = self.y_order();
        if order == 1 {
            self.z += e;
            return;
        }
        let mut total = e;
        if let Some(Syllable::Y(j)) = self.syls.back() {
            total += j;
            self.syls.pop_back();
        }
        self.z += total.div_euclid(order);
        let r = total.rem_euclid(order);
        if r != 0 {
            self.syls.push_back(Syllable::Y(r));
        } else {
            self.merge_back();
        }
    }

    fn x_left(&mut self, e: i64) {
        if e == 0 {
            return;
        }
        if self.odd() {
            self.z += e.min(0);
            for _ in 0..e.unsigned_abs() {
                match self.syls.front() {
                    Some(Syllable::X(_)) => {
                        self.syls.pop_front();
                        self.z += 1;
                        self.merge_front();
                    }
                    _ => self.syls.push_front(Syllable::X(1)),
                }
            }
        } else {
            match self.syls.front_mut() {
                Some(Syllable::X(j)) => {
                    *j += e;
                    if *j == 0 {
                        self.syls.pop_front();
                        self.merge_front();
                    }
                }
                _ => self.syls.push_front(Syllable::X(e)),
            }
        }
    }

    fn y_left(&mut self, e: i64) {
        if e == 0 {
            return;
        }
        let order = self.y_order();
        if order == 1 {
            self.z += e;
            return;
        }
        let mut total = e;
        if let Some(Syllable::Y(j)) = self.syls.front() {
            total += j;
            self.syls.pop_front();
        }
        self.z += total.div_euclid(order);
        let r = total.rem_euclid(order);
        if r != 0 {
            self.syls.push_front(Syllable::Y(r));
        } else {
            self.merge_front();
        }
    }

    fn merge_back(&mut self) {
        let n = self.syls.len();
        if n < 2 {
            return;
        }
        match (self.syls[n - 2], self.syls[n - 1]) {
            (Syllable::X(a), Syllable::X(b)) => {
                self.syls.pop_back();
                self.syls.pop_back();
                if self.odd() {
                    debug_assert_eq!((a, b), (1, 1));
                    self.z += 1;
                    self.merge_back();
                } else if a + b != 0 {
                    self.syls.push_back(Syllable::X(a + b));
                } else {
                    self.merge_back();
                }
            }
            (Syllable::Y(a), Syllable::Y(b)) => {
                let order = self.y_order();
                self.syls.pop_back();
                self.syls.pop_back();
                let total = a + b;
                self.z += total.div_euclid(order);
                let r = total.rem_euclid(order);
                if r != 0 {
                    self.syls.push_back(Syllable::Y(r));
                } else {
                    self.merge_back();
                }
            }
            _ => {}
        }
    }

    fn merge_front(&mut self) {
        if self.syls.len() < 2 {
            return;
        }
        match (self.syls[0], self.syls[1]) {
            (Syllable::X(a), Syllable::X(b)) => {
                self.syls.pop_front();
                self.syls.pop_front();
                if self.odd() {
                    debug_assert_eq!((a, b), (1, 1));
                    self.z += 1;
                    self.merge_front();
                } else if a + b != 0 {
                    self.syls.push_front(Syllable::X(a + b));
                } else {
                    self.merge_front();
                }
            }
            (Syllable::Y(a), Syllable::Y(b)) => {
                let order = self.y_order();
                self.syls.pop_front();
                self.syls.pop_front();
                let total = a + b;
                self.z += total.div_euclid(order);
                let r = total.rem_euclid(order);
                if r != 0 {
                    self.syls.push_front(Syllable::Y(r));
                } else {
                    self.merge_front();
                }
            }
            _ => {}
        }
    }
}

/// Fixed-depth breadth-first application of braid relations, free
/// reductions, and insertions, with caps. Three-valued: `None` means the
/// budget was exhausted; `Some(false)` only comes from the abelianization.
pub struct BraidBfsOracle<'a> {
    pub diagram: &'a CoxeterDiagram,
    pub max_states: usize,
    pub max_len: usize,
}

impl<'a> BraidBfsOracle<'a> {
    pub fn new(diagram: &'a CoxeterDiagram) -> BraidBfsOracle<'a> {
        BraidBfsOracle {
            diagram,
            max_states: 50_000,
            max_len: 20,
        }
    }

    pub fn equal(&self, u: &[Letter], v: &[Letter]) -> Option<bool> {
        let u = free_reduce(u);
        let v = free_reduce(v);
        if u == v {
            return Some(true);
        }
        if self.class_exponents(&u) != self.class_exponents(&v) {
            return Some(false);
        }
        let mut seen_u: HashSet<SignedWord> = HashSet::new();
        let mut seen_v: HashSet<SignedWord> = HashSet::new();
        let mut qu = VecDeque::new();
        let mut qv = VecDeque::new();
        seen_u.insert(u.clone());
        seen_v.insert(v.clone());
        qu.push_back(u);
        qv.push_back(v);
        while !qu.is_empty() || !qv.is_empty() {
            if seen_u.len() + seen_v.len() > self.max_states {
                return None;
            }
            if let Some(w) = qu.pop_front() {
                for next in self.moves(&w) {
                    if seen_v.contains(&next) {
                        return Some(true);
                    }
                    if seen_u.insert(next.clone()) {
                        qu.push_back(next);
                    }
                }
            }
            if let Some(w) = qv.pop_front() {
                for next in self.moves(&w) {
                    if seen_u.contains(&next) {
                        return Some(true);
                    }
                    if seen_v.insert(next.clone()) {
                        qv.push_back(next);
                    }
                }
            }
        }
        None
    }

    fn class_exponents(&self, w: &[Letter]) -> Vec<i64> {
        let classes = generator_classes(self.diagram);
        let k = classes.iter().max().map(|&c| c + 1).unwrap_or(0);
        let mut out = vec![0i64; k];
        for l in w {
            out[classes[l.gen]] += if l.inverse { -1 } else { 1 };
        }
        out
    }

    fn moves(&self, w: &[Letter]) -> Vec<SignedWord> {
        let mut out = Vec::new();
        // free reductions
        for i in 0..w.len().saturating_sub(1) {
            if w[i].gen == w[i + 1].gen && w[i].inverse != w[i + 1].inverse {
                let mut next = w.to_vec();
                next.drain(i..i + 2);
                out.push(next);
            }
        }
        // braid substitutions on uniform-sign alternating runs
        for i in 0..w.len() {
            for j in 0..self.diagram.rank() {
                let s = w[i].gen;
                if j == s {
                    continue;
                }
                let m = match self.diagram.label(s, j) {
                    EdgeLabel::Finite(m) => m as usize,
                    EdgeLabel::Infinity => continue,
                };
                if m < 2 || i + m > w.len() {
                    continue;
                }
                let sign = w[i].inverse;
                let matches = (0..m).all(|k| {
                    w[i + k].inverse == sign && w[i + k].gen == if k % 2 == 0 { s } else { j }
                });
                if matches {
                    let mut next = w.to_vec();
                    for (k, slot) in next[i..i + m].iter_mut().enumerate() {
                        slot.gen = if k % 2 == 0 { j } else { s };
                    }
                    out.push(next);
                }
            }
        }
        // insertions
        if w.len() + 2 <= self.max_len {
            for i in 0..=w.len() {
                for g in 0..self.diagram.rank() {
                    for first_inverse in [false, true] {
                        let mut next = w.to_vec();
                        next.insert(
                            i,
                            Letter {
                                gen: g,
                                inverse: !first_inverse,
                            },
                        );
                        next.insert(
                            i,
                            Letter {
                                gen: g,
                                inverse: first_inverse,
                            },
                        );
                        out.push(next);
                    }
                }
            }
        }
        out
    }
}

pub fn free_reduce(w: &[Letter]) -> SignedWord {
    let mut out: SignedWord = Vec::with_capacity(w.len());
    for &l in w {
        if let Some(&last) = out.last() {
            if last.gen == l.gen && last.inverse != l.inverse {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::parse_word;

    fn letters(diagram: &CoxeterDiagram, text: &str) -> SignedWord {
        parse_word(diagram, text).unwrap()
    }

    #[test]
    fn dihedral_oracle_braid_relation() {
        for m in [2u32, 3, 4, 5, 6] {
            let oracle = DihedralOracle::new(m);
            let d = CoxeterDiagram::dihedral(Some(m));
            let lhs: Vec<&str> = (0..m).map(|k| if k % 2 == 0 { "a" } else { "b" }).collect();
            let rhs: Vec<&str> = (0..m).map(|k| if k % 2 == 0 { "b" } else { "a" }).collect();
            let u = letters(&d, &lhs.join(" "));
            let v = letters(&d, &rhs.join(" "));
            assert!(oracle.equal(&u, &v), "braid relation for m = {m}");
            assert!(!oracle.is_identity(&u));
            assert!(!oracle.equal(&u, &letters(&d, "a")));
        }
    }

    #[test]
    fn dihedral_oracle_relations_and_center() {
        let d = CoxeterDiagram::dihedral(Some(3));
        let o = DihedralOracle::new(3);
        assert!(o.is_identity(&letters(&d, "a A")));
        assert!(o.is_identity(&letters(&d, "B b")));
        // aba = bab gives abA = Bab and abaB = ba
        assert!(o.equal(&letters(&d, "a b A"), &letters(&d, "B a b")));
        assert!(o.equal(&letters(&d, "a b a B"), &letters(&d, "b a")));
        let d2 = letters(&d, "a b a a b a");
        for g in ["a", "b", "A", "B"] {
            let mut left = letters(&d, g);
            left.extend(d2.iter().copied());
            let mut right = d2.clone();
            right.extend(letters(&d, g));
            assert!(o.equal(&left, &right), "Delta^2 commutes with {g}");
        }
    }

    #[test]
    fn dihedral_oracle_distinguishes_powers() {
        let o = DihedralOracle::new(3);
        for i in -4i64..=4 {
            for j in -4i64..=4 {
                let wi: SignedWord = (0..i.unsigned_abs())
                    .map(|_| Letter {
                        gen: 0,
                        inverse: i < 0,
                    })
                    .collect();
                let wj: SignedWord = (0..j.unsigned_abs())
                    .map(|_| Letter {
                        gen: 1,
                        inverse: j < 0,
                    })
                    .collect();
                assert_eq!(o.equal(&wi, &wj), i == 0 && j == 0, "a^{i} vs b^{j}");
            }
        }
    }

    #[test]
    fn left_and_right_pushes_agree() {
        // building a word letter by letter from either side gives one form
        let o = DihedralOracle::new(5);
        let d = CoxeterDiagram::dihedral(Some(5));
        let words = ["a b A B a", "b b b A", "B A b a a b", "a B a B a B"];
        for text in words {
            let word = letters(&d, text);
            let right = o.form_of(&word);
            let mut left = o.identity();
            for &l in word.iter().rev() {
                left.push_left(l.gen, l.inverse);
            }
            assert_eq!(left, right, "two-sided build of {text}");
        }
    }

    #[test]
    fn braid_bfs_agrees_with_dihedral_oracle_on_short_words() {
        for m in [3u32, 4] {
            let d = CoxeterDiagram::dihedral(Some(m));
            let mut bfs = BraidBfsOracle::new(&d);
            bfs.max_states = 2_000;
            bfs.max_len = 8;
            let exact = DihedralOracle::new(m);
            let alphabet = [
                Letter {
                    gen: 0,
                    inverse: false,
                },
                Letter {
                    gen: 1,
                    inverse: false,
                },
                Letter {
                    gen: 0,
                    inverse: true,
                },
                Letter {
                    gen: 1,
                    inverse: true,
                },
            ];
            let mut words: Vec<SignedWord> = vec![Vec::new()];
            for len in 1..=3usize {
                let mut next = Vec::new();
                for w in &words {
                    if w.len() + 1 == len {
                        for &l in &alphabet {
                            let mut v = w.clone();
                            v.push(l);
                            next.push(v);
                        }
                    }
                }
                words.extend(next);
            }
            for u in &words {
                for v in &words {
                    if let Some(ans) = bfs.equal(u, v) {
                        assert_eq!(ans, exact.equal(u, v), "bfs vs exact on {u:?} {v:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn braid_bfs_proves_braid_relation_consequences() {
        let d = CoxeterDiagram::dihedral(Some(3));
        let bfs = BraidBfsOracle::new(&d);
        let u = letters(&d, "a b a");
        let v = letters(&d, "b a b");
        assert_eq!(bfs.equal(&u, &v), Some(true));
        let w1 = letters(&d, "a b A");
        let w2 = letters(&d, "B a b");
        assert_eq!(bfs.equal(&w1, &w2), Some(true));
        // refutation through the abelianization
        assert_eq!(bfs.equal(&u, &letters(&d, "a b")), Some(false));
        // equal exponent sums but distinct elements: never claimed equal
        let exact = DihedralOracle::new(3);
        let p = letters(&d, "a a b b");
        let q = letters(&d, "a b a b");
        assert!(!exact.equal(&p, &q));
        assert_ne!(bfs.equal(&p, &q), Some(true));
    }
}
