//! Exact face enumeration for explicitly given rational arrangements.
//!
//! Faces are discovered through witness jets: a jet (p, d1, d2) stands for
//! the point p + t d1 + t^2 d2 with t > 0 infinitesimal, so signs are decided
//! symbolically with no epsilon constants. Affine arrangements are supported
//! in dimension <= 2 and central ones in dimension 3 (by slicing), which
//! covers every explicit example in this crate.

use std::collections::BTreeMap;

use super::{ArrangementError, FaceComplex, SignVector};
use crate::exact::Rat;

/// Affine hyperplane { x : normal . x = offset }.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Hyperplane {
        assert!(normal.iter().any(|c| !c.is_zero()), "degenerate hyperplane");
        Hyperplane { normal, offset }
    }

    pub fn central(normal: Vec<Rat>) -> Hyperplane {
        Hyperplane::new(normal, Rat::ZERO)
    }
}

/// Witness certificate: the limit point p + t d1 + t^2 d2, t -> 0+.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessJet {
    pub point: Vec<Rat>,
    pub dir1: Vec<Rat>,
    pub dir2: Vec<Rat>,
}

impl WitnessJet {
    fn at_point(p: Vec<Rat>) -> WitnessJet {
        let d = p.len();
        WitnessJet {
            point: p,
            dir1: vec![Rat::ZERO; d],
            dir2: vec![Rat::ZERO; d],
        }
    }

    /// Sign of normal . jet - offset, decided by the first nonzero order.
    pub fn sign_at(&self, h: &Hyperplane) -> i8 {
        let order0 = dot(&h.normal, &self.point) - h.offset;
        if !order0.is_zero() {
            return order0.signum() as i8;
        }
        let order1 = dot(&h.normal, &self.dir1);
        if !order1.is_zero() {
            return order1.signum() as i8;
        }
        dot(&h.normal, &self.dir2).signum() as i8
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    let mut acc = Rat::ZERO;
    for (x, y) in a.iter().zip(b) {
        acc = acc + *x * *y;
    }
    acc
}

/// Face complex of an explicit rational arrangement, with one witness jet per
/// face as the realizability certificate.
pub fn explicit_face_complex(
    dim: usize,
    hyperplanes: &[Hyperplane],
) -> Result<(FaceComplex, Vec<WitnessJet>), ArrangementError> {
    for h in hyperplanes {
        assert_eq!(h.normal.len(), dim);
    }
    let central = hyperplanes.iter().all(|h| h.offset.is_zero());
    let jets = if dim <= 2 {
        affine_jets(dim, hyperplanes)?
    } else if dim == 3 && central {
        central_jets(dim, hyperplanes)?
    } else {
        return Err(ArrangementError::UnsupportedDimension(dim));
    };
    let mut by_sign: BTreeMap<SignVector, WitnessJet> = BTreeMap::new();
    for jet in jets {
        let sign: SignVector = hyperplanes.iter().map(|h| jet.sign_at(h)).collect();
        by_sign.entry(sign).or_insert(jet);
    }
    let signs: Vec<SignVector> = by_sign.keys().cloned().collect();
    let complex = FaceComplex::from_sign_vectors(dim, hyperplanes.len(), central, signs);
    let witnesses: Vec<WitnessJet> = complex
        .faces
        .iter()
        .map(|f| by_sign[&f.sign].clone())
        .collect();
    // certificate check: each stored jet realizes its face's sign vector
    for (f, jet) in complex.faces.iter().zip(&witnesses) {
        for (i, h) in hyperplanes.iter().enumerate() {
            assert_eq!(jet.sign_at(h), f.sign[i], "witness jet must realize the face");
        }
    }
    Ok((complex, witnesses))
}

/// Witness jets covering every fan of an affine arrangement in dim <= 2.
fn affine_jets(dim: usize, hyperplanes: &[Hyperplane]) -> Result<Vec<WitnessJet>, ArrangementError> {
    match dim {
        0 => Ok(vec![WitnessJet::at_point(Vec::new())]),
        1 => {
            let mut jets = vec![];
            let mut points: Vec<Rat> = hyperplanes
                .iter()
                .map(|h| h.offset / h.normal[0])
                .collect();
            points.sort();
            points.dedup();
            if points.is_empty() {
                return Ok(vec![WitnessJet::at_point(vec![Rat::ZERO])]);
            }
            for (i, &p) in points.iter().enumerate() {
                jets.push(WitnessJet::at_point(vec![p]));
                if i + 1 < points.len() {
                    let mid = (p + points[i + 1]) / Rat::int(2);
                    jets.push(WitnessJet::at_point(vec![mid]));
                }
            }
            jets.push(WitnessJet::at_point(vec![points[0] - Rat::ONE]));
            jets.push(WitnessJet::at_point(vec![*points.last().unwrap() + Rat::ONE]));
            Ok(jets)
        }
        2 => Ok(affine_jets_2d(hyperplanes)),
        _ => Err(ArrangementError::UnsupportedDimension(dim)),
    }
}

fn affine_jets_2d(hyperplanes: &[Hyperplane]) -> Vec<WitnessJet> {
    let lines: Vec<&Hyperplane> = hyperplanes.iter().collect();
    let mut jets = vec![WitnessJet::at_point(vec![Rat::ZERO, Rat::ZERO])];
    // 0-dim candidates: all pairwise intersections
    let mut points: Vec<Vec<Rat>> = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if let Some(p) = intersect_lines(lines[i], lines[j]) {
                points.push(p);
            }
        }
    }
    for p in &points {
        jets.push(WitnessJet::at_point(p.clone()));
    }
    // 1-dim fans on each line: parameterize and sample between/beyond the
    // intersections with other lines; push off both sides for the regions.
    for l in &lines {
        let dir = vec![-l.normal[1], l.normal[0]];
        let base = point_on_line(l);
        let mut params: Vec<Rat> = Vec::new();
        for other in &lines {
            if other.normal == l.normal && other.offset == l.offset {
                continue;
            }
            // solve other.normal . (base + t dir) = other.offset
            let denom = dot(&other.normal, &dir);
            if denom.is_zero() {
                continue;
            }
            let t = (other.offset - dot(&other.normal, &base)) / denom;
            params.push(t);
        }
        params.sort();
        params.dedup();
        let mut sample_ts: Vec<Rat> = Vec::new();
        if params.is_empty() {
            sample_ts.push(Rat::ZERO);
        } else {
            sample_ts.push(params[0] - Rat::ONE);
            for (i, &t) in params.iter().enumerate() {
                if i + 1 < params.len() {
                    sample_ts.push((t + params[i + 1]) / Rat::int(2));
                }
            }
            sample_ts.push(*params.last().unwrap() + Rat::ONE);
        }
        for t in sample_ts {
            let p: Vec<Rat> = vec![base[0] + t * dir[0], base[1] + t * dir[1]];
            jets.push(WitnessJet::at_point(p.clone()));
            for side in [Rat::ONE, -Rat::ONE] {
                jets.push(WitnessJet {
                    point: p.clone(),
                    dir1: vec![side * l.normal[0], side * l.normal[1]],
                    dir2: vec![Rat::ZERO, Rat::ZERO],
                });
            }
        }
        // sectors around each intersection point on this line
        for p in &points {
            if dot(&l.normal, p) == l.offset {
                for t_dir in [Rat::ONE, -Rat::ONE] {
                    let d1 = vec![t_dir * dir[0], t_dir * dir[1]];
                    jets.push(WitnessJet {
                        point: p.clone(),
                        dir1: d1.clone(),
                        dir2: vec![Rat::ZERO, Rat::ZERO],
                    });
                    for side in [Rat::ONE, -Rat::ONE] {
                        jets.push(WitnessJet {
                            point: p.clone(),
                            dir1: d1.clone(),
                            dir2: vec![side * l.normal[0], side * l.normal[1]],
                        });
                    }
                }
            }
        }
    }
    jets
}

fn intersect_lines(a: &Hyperplane, b: &Hyperplane) -> Option<Vec<Rat>> {
    let det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
    if det.is_zero() {
        return None;
    }
    let x = (a.offset * b.normal[1] - a.normal[1] * b.offset) / det;
    let y = (a.normal[0] * b.offset - a.offset * b.normal[0]) / det;
    Some(vec![x, y])
}

fn point_on_line(l: &Hyperplane) -> Vec<Rat> {
    if !l.normal[0].is_zero() {
        vec![l.offset / l.normal[0], Rat::ZERO]
    } else {
        vec![Rat::ZERO, l.offset / l.normal[1]]
    }
}

/// Central arrangements: every fan meets a slice x_last = +-1, the central
/// sub-arrangement inside x_last = 0, or the origin. Signs on the -1 slice
/// are the negations of those on the +1 slice.
fn central_jets(dim: usize, hyperplanes: &[Hyperplane]) -> Result<Vec<WitnessJet>, ArrangementError> {
    assert!(hyperplanes.iter().all(|h| h.offset.is_zero()));
    if dim == 0 || hyperplanes.is_empty() {
        return Ok(vec![WitnessJet::at_point(vec![Rat::ZERO; dim])]);
    }
    let last = dim - 1;
    // slice x_last = 1: affine arrangement in the first dim-1 coordinates
    let sliced: Vec<Hyperplane> = hyperplanes
        .iter()
        .filter(|h| h.normal[..last].iter().any(|c| !c.is_zero()))
        .map(|h| Hyperplane {
            normal: h.normal[..last].to_vec(),
            offset: -h.normal[last],
        })
        .collect();
    let mut jets = Vec::new();
    for jet in affine_jets(last, &sliced)? {
        let lift = |v: &[Rat], extra: Rat| {
            let mut out = v.to_vec();
            out.push(extra);
            out
        };
        let lifted = WitnessJet {
            point: lift(&jet.point, Rat::ONE),
            dir1: lift(&jet.dir1, Rat::ZERO),
            dir2: lift(&jet.dir2, Rat::ZERO),
        };
        let negated = WitnessJet {
            point: lifted.point.iter().map(|c| -*c).collect(),
            dir1: lifted.dir1.iter().map(|c| -*c).collect(),
            dir2: lifted.dir2.iter().map(|c| -*c).collect(),
        };
        jets.push(lifted);
        jets.push(negated);
    }
    // slice x_last = 0: central sub-arrangement one dimension down
    let inner: Vec<Hyperplane> = hyperplanes
        .iter()
        .filter(|h| h.normal[..last].iter().any(|c| !c.is_zero()))
        .map(|h| Hyperplane {
            normal: h.normal[..last].to_vec(),
            offset: Rat::ZERO,
        })
        .collect();
    for jet in central_jets(last, &inner)? {
        let lift = |v: &[Rat]| {
            let mut out = v.to_vec();
            out.push(Rat::ZERO);
            out
        };
        jets.push(WitnessJet {
            point: lift(&jet.point),
            dir1: lift(&jet.dir1),
            dir2: lift(&jet.dir2),
        });
    }
    jets.push(WitnessJet::at_point(vec![Rat::ZERO; dim]));
    Ok(jets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{decone, salvetti};

    fn rat(n: i128) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn single_hyperplane_in_r1() {
        let hs = vec![Hyperplane::central(vec![rat(1)])];
        let (sigma, _) = explicit_face_complex(1, &hs).unwrap();
        assert_eq!(sigma.vertex_count(), 2);
        assert_eq!(sigma.face_count(), 3);
        let hat = salvetti(&sigma);
        assert_eq!(hat.cells_of_dim(0).len(), 2);
        assert_eq!(hat.cells_of_dim(1).len(), 2);
    }

    #[test]
    fn three_concurrent_lines_make_a_hexagon() {
        let hs = vec![
            Hyperplane::central(vec![rat(1), rat(0)]),
            Hyperplane::central(vec![rat(0), rat(1)]),
            Hyperplane::central(vec![rat(1), rat(1)]),
        ];
        let (sigma, _) = explicit_face_complex(2, &hs).unwrap();
        assert_eq!(sigma.vertex_count(), 6);
        let edges = (0..sigma.face_count()).filter(|&f| sigma.faces[f].dim == 1).count();
        assert_eq!(edges, 6);
        // deconed at one line: 2 points on a line, 3 chambers
        let d = decone(&sigma, 0).unwrap();
        assert_eq!(d.vertex_count(), 3);
        let edges = (0..d.face_count()).filter(|&f| d.faces[f].dim == 1).count();
        assert_eq!(edges, 2);
    }

    #[test]
    fn generic_affine_lines() {
        // two crossing affine lines: 4 regions, 4 rays, 1 point = 9 fans
        let hs = vec![
            Hyperplane::new(vec![rat(1), rat(0)], rat(1)),
            Hyperplane::new(vec![rat(0), rat(1)], rat(2)),
        ];
        let (sigma, _) = explicit_face_complex(2, &hs).unwrap();
        assert_eq!(sigma.vertex_count(), 4);
        assert_eq!(sigma.face_count(), 9);

        // three parallel lines: 4 strips + 3 lines = 7 fans, no 0-cells
        let hs = vec![
            Hyperplane::new(vec![rat(1), rat(0)], rat(0)),
            Hyperplane::new(vec![rat(1), rat(0)], rat(1)),
            Hyperplane::new(vec![rat(1), rat(0)], rat(2)),
        ];
        let (sigma, _) = explicit_face_complex(2, &hs).unwrap();
        assert_eq!(sigma.vertex_count(), 4);
        assert_eq!(sigma.face_count(), 7);
    }

    #[test]
    fn central_3d_coordinate_planes() {
        let hs = vec![
            Hyperplane::central(vec![rat(1), rat(0), rat(0)]),
            Hyperplane::central(vec![rat(0), rat(1), rat(0)]),
            Hyperplane::central(vec![rat(0), rat(0), rat(1)]),
        ];
        let (sigma, _) = explicit_face_complex(3, &hs).unwrap();
        // boolean arrangement: all sign vectors over {-,0,+}^3 realizable
        assert_eq!(sigma.face_count(), 27);
        assert_eq!(sigma.vertex_count(), 8);
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(sigma.graph_distance(x, y), sigma.sign_difference(x, y));
            }
        }
    }

    #[test]
    fn unsupported_dimension_errors() {
        let hs = vec![Hyperplane::new(vec![rat(1), rat(0), rat(0)], rat(1))];
        assert!(matches!(
            explicit_face_complex(3, &hs),
            Err(ArrangementError::UnsupportedDimension(3))
        ));
    }
}
