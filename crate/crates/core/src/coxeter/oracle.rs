//! Independent exact-matrix oracle for finite Coxeter groups.
//!
//! The canonical reflection representation is built over `Q(sqrt d)` with the
//! bilinear form B(a_s, a_t) = -cos(pi/m_st). Group order and reflection
//! counts come from closing sets of exact matrices, with no reference to the
//! word-combinatorial enumeration this oracle checks.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::diagram::{CoxeterDiagram, EdgeLabel};
use crate::exact::{FieldError, QMatrix, QuadField};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("matrix closure exceeded cutoff {0}")]
    Diverged(usize),
    #[error("infinite label has no finite reflection representation here")]
    InfiniteLabel,
}

/// Generator reflection matrices sigma_s(v) = v - 2 B(v, a_s) a_s.
pub fn reflection_representation(diagram: &CoxeterDiagram) -> Result<Vec<QMatrix>, OracleError> {
    if diagram.has_infinite_label() {
        return Err(OracleError::InfiniteLabel);
    }
    let field = QuadField::for_labels(&diagram.finite_labels())?;
    let n = diagram.rank();
    // bilinear form matrix
    let mut b = vec![vec![field.zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            b[i][j] = if i == j {
                field.one()
            } else {
                let m = match diagram.label(i, j) {
                    EdgeLabel::Finite(m) => m,
                    EdgeLabel::Infinity => unreachable!(),
                };
                let z = field.zero();
                z - field.cos_pi_over(m)?
            };
        }
    }
    let two = field.rat(2, 1);
    let mut gens = Vec::with_capacity(n);
    for s in 0..n {
        let mut m = QMatrix::identity(&field, n);
        // column j of sigma_s is e_j - 2 B(a_j, a_s) e_s
        for j in 0..n {
            let cur = m.at(s, j);
            m.entries[s * n + j] = cur - two * b[j][s];
        }
        gens.push(m);
    }
    Ok(gens)
}

/// |W| by closing the generator matrices under multiplication.
pub fn count_group_order(diagram: &CoxeterDiagram, cutoff: usize) -> Result<usize, OracleError> {
    let gens = reflection_representation(diagram)?;
    if gens.is_empty() {
        return Ok(1);
    }
    let field_d = gens[0].entries[0].d;
    let id = QMatrix::identity(&QuadField { d: field_d }, gens[0].n);
    let mut seen: HashSet<QMatrix> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let next = m.mul(g);
            if seen.insert(next.clone()) {
                if seen.len() > cutoff {
                    return Err(OracleError::Diverged(cutoff));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// Number of reflections: the closure of the generator matrices under
/// conjugation by generators.
pub fn count_reflections(diagram: &CoxeterDiagram, cutoff: usize) -> Result<usize, OracleError> {
    let gens = reflection_representation(diagram)?;
    let mut seen: HashSet<QMatrix> = HashSet::new();
    let mut queue: VecDeque<QMatrix> = VecDeque::new();
    for g in &gens {
        if seen.insert(g.clone()) {
            queue.push_back(g.clone());
        }
    }
    while let Some(t) = queue.pop_front() {
        for g in &gens {
            // g t g  (generators are involutions)
            let conj = g.mul(&t).mul(g);
            if seen.insert(conj.clone()) {
                if seen.len() > cutoff {
                    return Err(OracleError::Diverged(cutoff));
                }
                queue.push_back(conj);
            }
        }
    }
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_matrices_are_involutions() {
        let h3 = CoxeterDiagram::linear(&["a", "b", "c"], &[3, 5]);
        let gens = reflection_representation(&h3).unwrap();
        let field = QuadField { d: 5 };
        let id = QMatrix::identity(&field, 3);
        for g in &gens {
            assert_eq!(g.mul(g), id);
        }
    }

    #[test]
    fn dihedral_counts() {
        for m in [3u32, 4, 5, 6] {
            let d = CoxeterDiagram::dihedral(Some(m));
            assert_eq!(count_group_order(&d, 1000).unwrap(), 2 * m as usize);
            assert_eq!(count_reflections(&d, 1000).unwrap(), m as usize);
        }
    }

    #[test]
    fn b3_counts() {
        let b3 = CoxeterDiagram::linear(&["s1", "s2", "s3"], &[3, 4]);
        assert_eq!(count_group_order(&b3, 10_000).unwrap(), 48);
        assert_eq!(count_reflections(&b3, 10_000).unwrap(), 9);
    }
}
