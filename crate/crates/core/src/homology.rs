//! Simplicial homology over the integers (Smith normal form) and mod 2.
//!
//! This is the oracle behind every contractibility claim in the crate: a
//! collapse trace is only accepted if the homology here stays that of a
//! point at each stage.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integer,
    Mod2,
}

/// Betti numbers plus the torsion invariant factors of each degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl Homology {
    pub fn is_point(&self) -> bool {
        self.betti.first().copied() == Some(1)
            && self.betti[1..].iter().all(|&b| b == 0)
            && self.torsion.iter().all(|t| t.is_empty())
    }
}

/// Homology of the complex whose simplices are the given sorted vertex
/// tuples (all faces must be present; vertices are tuples of length 1).
pub fn homology(simplices: &[Vec<usize>], coeffs: Coefficients) -> Homology {
    assert!(!simplices.is_empty(), "empty complex has no homology here");
    let max_dim = simplices.iter().map(|s| s.len() - 1).max().unwrap();
    let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); max_dim + 1];
    for s in simplices {
        debug_assert!(s.windows(2).all(|w| w[0] < w[1]), "sorted simplices");
        by_dim[s.len() - 1].push(s.clone());
    }
    for cells in &mut by_dim {
        cells.sort();
        cells.dedup();
    }
    let index: Vec<HashMap<&[usize], usize>> = by_dim
        .iter()
        .map(|cells| {
            cells
                .iter()
                .enumerate()
                .map(|(i, s)| (s.as_slice(), i))
                .collect()
        })
        .collect();

    // boundary_k maps k-chains to (k-1)-chains, stored column-wise
    let mut ranks = vec![0usize; max_dim + 2];
    let mut diag: Vec<Vec<BigInt>> = vec![Vec::new(); max_dim + 2];
    for k in 1..=max_dim {
        let rows = by_dim[k - 1].len();
        let cols = by_dim[k].len();
        let mut m = vec![vec![BigInt::zero(); cols]; rows];
        for (j, s) in by_dim[k].iter().enumerate() {
            for (skip, sign) in (0..s.len()).map(|i| (i, if i % 2 == 0 { 1 } else { -1 })) {
                let mut face = s.clone();
                face.remove(skip);
                let i = index[k - 1][face.as_slice()];
                m[i][j] = BigInt::from(sign);
            }
        }
        let d = match coeffs {
            Coefficients::Integer => smith_diagonal(m),
            Coefficients::Mod2 => {
                let r = rank_mod2(&by_dim, k, &index);
                vec![BigInt::one(); r]
            }
        };
        ranks[k] = d.iter().filter(|x| !x.is_zero()).count();
        diag[k] = d;
    }

    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for k in 0..=max_dim {
        let n_k = by_dim[k].len();
        let rank_in = ranks[k]; // rank of boundary_k (zero map for k = 0)
        let rank_out = if k + 1 <= max_dim { ranks[k + 1] } else { 0 };
        betti.push(n_k - rank_in - rank_out);
        let tors: Vec<BigInt> = if k + 1 <= max_dim && coeffs == Coefficients::Integer {
            diag[k + 1]
                .iter()
                .filter(|x| !x.is_zero() && x.abs() != BigInt::one())
                .map(|x| x.abs())
                .collect()
        } else {
            Vec::new()
        };
        torsion.push(tors);
    }
    Homology { betti, torsion }
}

fn rank_mod2(
    by_dim: &[Vec<Vec<usize>>],
    k: usize,
    index: &[HashMap<&[usize], usize>],
) -> usize {
    let rows = by_dim[k - 1].len();
    let cols = by_dim[k].len();
    let words = rows.div_ceil(64);
    let mut columns: Vec<Vec<u64>> = Vec::with_capacity(cols);
    for s in &by_dim[k] {
        let mut col = vec![0u64; words];
        for skip in 0..s.len() {
            let mut face = s.clone();
            face.remove(skip);
            let i = index[k - 1][face.as_slice()];
            col[i / 64] ^= 1 << (i % 64);
        }
        columns.push(col);
    }
    let mut rank = 0;
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for mut col in columns {
        loop {
            let lead = col
                .iter()
                .enumerate()
                .find(|(_, w)| **w != 0)
                .map(|(i, w)| i * 64 + w.trailing_zeros() as usize);
            match lead {
                None => break,
                Some(l) => {
                    if let Some((_, p)) = pivots.iter().find(|(pl, _)| *pl == l) {
                        let p = p.clone();
                        for (c, pw) in col.iter_mut().zip(p) {
                            *c ^= pw;
                        }
                    } else {
                        pivots.push((l, col));
                        rank += 1;
                        break;
                    }
                }
            }
        }
    }
    rank
}

/// Diagonal of the Smith normal form (invariant factors, then zeros).
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // smallest nonzero entry as pivot
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in left..cols {
                if !m[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(left, pj);
        }
        // clear row and column; restart if a remainder shrinks the pivot
        let mut again = true;
        while again {
            again = false;
            for i in (top + 1)..rows {
                if !m[i][left].is_zero() {
                    let q = &m[i][left] / &m[top][left];
                    for j in left..cols {
                        let sub = &q * &m[top][j];
                        m[i][j] -= sub;
                    }
                    if !m[i][left].is_zero() {
                        m.swap(top, i);
                        again = true;
                    }
                }
            }
            for j in (left + 1)..cols {
                if !m[top][j].is_zero() {
                    let q = &m[top][j] / &m[top][left];
                    for i in top..rows {
                        let sub = &q * &m[i][left];
                        m[i][j] -= sub;
                    }
                    if !m[top][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(left, j);
                        }
                        again = true;
                    }
                }
            }
        }
        // divisibility fix: pivot must divide every remaining entry
        let mut fixed = false;
        'outer: for i in (top + 1)..rows {
            for j in (left + 1)..cols {
                if !(&m[i][j] % &m[top][left]).is_zero() {
                    for jj in left..cols {
                        let add = m[i][jj].clone();
                        m[top][jj] += add;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue; // redo this pivot position
        }
        diag.push(m[top][left].abs());
        top += 1;
        left += 1;
    }
    diag
}

/// Convenience: all simplices (with faces) from a list of maximal simplices.
pub fn close_under_faces(maximal: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut set = std::collections::BTreeSet::new();
    for m in maximal {
        let mut sorted = m.clone();
        sorted.sort_unstable();
        let n = sorted.len();
        for mask in 1u64..(1 << n) {
            let face: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| sorted[i]).collect();
            set.insert(face);
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_and_circle() {
        let point = vec![vec![0]];
        assert!(homology(&point, Coefficients::Integer).is_point());

        // empty 4-cycle: betti (1, 1)
        let circle = close_under_faces(&[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]);
        let h = homology(&circle, Coefficients::Integer);
        assert_eq!(h.betti, vec![1, 1]);
        assert!(h.torsion.iter().all(|t| t.is_empty()));
    }

    #[test]
    fn solid_simplex_and_sphere() {
        let solid = close_under_faces(&[vec![0, 1, 2, 3]]);
        let h = homology(&solid, Coefficients::Integer);
        assert!(h.is_point());

        // boundary of the tetrahedron: S^2
        let sphere: Vec<Vec<usize>> = close_under_faces(&[vec![0, 1, 2, 3]])
            .into_iter()
            .filter(|s| s.len() <= 3)
            .collect();
        let h = homology(&sphere, Coefficients::Integer);
        assert_eq!(h.betti, vec![1, 0, 1]);
    }

    #[test]
    fn torus_and_projective_plane() {
        // Moebius-Kantor 7-vertex torus: faces {i,i+1,i+3} and {i,i+2,i+3} mod 7
        let mut torus_faces: Vec<Vec<usize>> = Vec::new();
        for i in 0..7usize {
            let mut f1 = vec![i, (i + 1) % 7, (i + 3) % 7];
            let mut f2 = vec![i, (i + 2) % 7, (i + 3) % 7];
            f1.sort_unstable();
            f2.sort_unstable();
            torus_faces.push(f1);
            torus_faces.push(f2);
        }
        let all = close_under_faces(&torus_faces);
        let h = homology(&all, Coefficients::Integer);
        assert_eq!(h.betti, vec![1, 2, 1]);

        // 6-vertex RP^2 (every one of the 15 edges in exactly two faces)
        let rp2_faces: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 1, 5],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![1, 3, 4],
            vec![2, 4, 5],
            vec![1, 3, 5],
        ];
        let mut edge_count = std::collections::HashMap::new();
        for f in &rp2_faces {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                *edge_count.entry((f[i], f[j])).or_insert(0) += 1;
            }
        }
        assert!(edge_count.values().all(|&c| c == 2));
        assert_eq!(edge_count.len(), 15);
        let rp2 = close_under_faces(&rp2_faces);
        let h = homology(&rp2, Coefficients::Integer);
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
        let h2 = homology(&rp2, Coefficients::Mod2);
        assert_eq!(h2.betti, vec![1, 1, 1]);
    }

    #[test]
    fn smith_diagonal_example() {
        let m: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(4)],
            vec![BigInt::from(-6), BigInt::from(6), BigInt::from(12)],
            vec![BigInt::from(10), BigInt::from(4), BigInt::from(16)],
        ];
        let d = smith_diagonal(m);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }
}
