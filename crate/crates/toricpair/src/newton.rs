//! Monomial ideals on an affine toric variety, their Newton polyhedra, the
//! order function, and the dual fan of the normalized blow-up.

use crate::cone::Cone;
use crate::error::{Result, ToricError};
use crate::fan::Fan;
use crate::lattice::{Int, LatticePoint};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// An invariant monomial ideal, stored by its minimal exponent set inside
/// the dual cone of the defining cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    sigma: Cone,
    sigma_dual: Cone,
    exponents: Vec<LatticePoint>,
}

impl MonomialIdeal {
    /// Validate and minimalize an exponent list over the cone `sigma`.
    ///
    /// Rejects exponents outside the dual cone, the unit ideal (an exponent
    /// equal to zero), and ideals whose vanishing locus misses a singular
    /// face of `sigma` (the order function must be strictly positive on the
    /// relative interior of every non-smooth face).
    pub fn new(exponents: &[LatticePoint], sigma: Cone) -> Result<MonomialIdeal> {
        if exponents.is_empty() {
            return Err(ToricError::EmptyIdeal);
        }
        if !sigma.is_strongly_convex() {
            return Err(ToricError::NotStronglyConvex);
        }
        if !sigma.is_full_dimensional() {
            return Err(ToricError::NotFullDimensional);
        }
        let n = sigma.ambient_rank();
        for a in exponents {
            if a.dim() != n {
                return Err(ToricError::DimensionMismatch {
                    expected: n,
                    got: a.dim(),
                });
            }
            if a.is_zero() {
                return Err(ToricError::UnitIdeal);
            }
            // a lies in the dual cone iff it pairs nonnegatively with the rays.
            if sigma.rays().iter().any(|r| r.dot(a).is_negative()) {
                return Err(ToricError::ExponentNotInDualCone);
            }
        }
        // Minimalize: drop exponents dominated by another one.
        let dedup: BTreeSet<LatticePoint> = exponents.iter().cloned().collect();
        let in_dual =
            |x: &LatticePoint| -> bool { sigma.rays().iter().all(|r| !r.dot(x).is_negative()) };
        let minimal: Vec<LatticePoint> = dedup
            .iter()
            .filter(|a| {
                !dedup
                    .iter()
                    .any(|b| *a != b && in_dual(&a.sub(b)))
            })
            .cloned()
            .collect();
        let sigma_dual = sigma.dual();
        let ideal = MonomialIdeal {
            sigma,
            sigma_dual,
            exponents: minimal,
        };
        // The singular locus must be contained in the vanishing locus: no
        // exponent may be orthogonal to a non-smooth face.
        for face in ideal.sigma.faces() {
            if face.is_zero_cone() || face.is_smooth() {
                continue;
            }
            if ideal
                .exponents
                .iter()
                .any(|a| face.rays().iter().all(|r| r.dot(a).is_zero()))
            {
                return Err(ToricError::SingularLocusNotInZ {
                    face: format!("{:?}", face.rays()),
                });
            }
        }
        Ok(ideal)
    }

    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn sigma_dual(&self) -> &Cone {
        &self.sigma_dual
    }

    /// Minimal generating exponents, sorted.
    pub fn exponents(&self) -> &[LatticePoint] {
        &self.exponents
    }

    pub fn ambient_rank(&self) -> usize {
        self.sigma.ambient_rank()
    }

    /// The order of the ideal along the valuation of `v`: the minimum of
    /// <v, a> over the exponents. Errors when v is outside the cone.
    pub fn ord(&self, v: &LatticePoint) -> Result<Int> {
        if !self.sigma.contains(v) {
            return Err(ToricError::PointOutsideCone);
        }
        Ok(self.ord_unchecked(v))
    }

    pub(crate) fn ord_unchecked(&self, v: &LatticePoint) -> Int {
        self.exponents
            .iter()
            .map(|a| v.dot(a))
            .min()
            .expect("ideal is nonempty")
    }

    /// The Newton polyhedron: vertices of conv(exponents) + dual cone.
    ///
    /// An exponent is a vertex exactly when its normal cone inside sigma is
    /// full-dimensional, an exact feasibility question answered by the
    /// double description of that cone.
    pub fn newton_polyhedron(&self) -> NewtonPolyhedron {
        let vertices: Vec<LatticePoint> = self
            .exponents
            .iter()
            .filter(|a| self.normal_cone(a).is_full_dimensional())
            .cloned()
            .collect();
        NewtonPolyhedron {
            vertices,
            recession_cone: self.sigma_dual.clone(),
        }
    }

    /// The closed cone of directions in sigma along which exponent `a`
    /// minimizes the pairing.
    fn normal_cone(&self, a: &LatticePoint) -> Cone {
        let mut constraints: Vec<LatticePoint> = self.sigma.facet_normals().to_vec();
        for b in &self.exponents {
            if b != a {
                constraints.push(b.sub(a));
            }
        }
        Cone::from_constraints(&constraints, self.ambient_rank())
    }

    /// The dual fan of the Newton polyhedron, restricted to sigma: the
    /// domains of linearity of the order function. This is the fan of the
    /// normalized blow-up along the ideal.
    pub fn dual_fan(&self) -> Result<DualFan> {
        let vertices = self.newton_polyhedron().vertices;
        let mut cones = Vec::with_capacity(vertices.len());
        for a in &vertices {
            cones.push((self.normal_cone(a), a.clone()));
        }
        let fan = Fan::from_cones(cones.iter().map(|(c, _)| c.clone()).collect(), self.ambient_rank())?;
        debug_assert_eq!(fan.max_cones().len(), cones.len());
        Ok(DualFan {
            fan,
            assignments: cones,
        })
    }
}

/// The Newton polyhedron conv(exponents) + recession cone, stored by its
/// vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    pub vertices: Vec<LatticePoint>,
    pub recession_cone: Cone,
}

/// The dual fan together with, for each maximal cone, the vertex of the
/// Newton polyhedron it supports.
#[derive(Clone, Debug)]
pub struct DualFan {
    fan: Fan,
    assignments: Vec<(Cone, LatticePoint)>,
}

impl DualFan {
    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    /// Maximal cones with the vertex each one supports.
    pub fn max_cones(&self) -> &[(Cone, LatticePoint)] {
        &self.assignments
    }

    /// The vertex whose pairing realizes the order function on the maximal
    /// cone containing `v` (any such cone gives the same value).
    pub fn supporting_vertex(&self, v: &LatticePoint) -> Option<&LatticePoint> {
        self.assignments
            .iter()
            .find(|(c, _)| c.contains(v))
            .map(|(_, a)| a)
    }

    /// Vertices of the face of the Newton polyhedron supported by the
    /// smallest fan cone containing `v`: all assigned vertices whose maximal
    /// cone contains `v`.
    pub fn supported_face_vertices(&self, v: &LatticePoint) -> Vec<LatticePoint> {
        let mut out: Vec<LatticePoint> = self
            .assignments
            .iter()
            .filter(|(c, _)| c.contains(v))
            .map(|(_, a)| a.clone())
            .collect();
        out.sort();
        out
    }

    pub fn rays(&self) -> Vec<LatticePoint> {
        self.fan.rays()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: &[i64]) -> LatticePoint {
        LatticePoint::from_i64(v)
    }

    fn orthant(n: usize) -> Cone {
        let rays: Vec<LatticePoint> = (0..n).map(|i| LatticePoint::unit(n, i)).collect();
        Cone::from_rays(&rays, n).unwrap()
    }

    /// The running example family: three monomials in three variables, each
    /// a d-th power times the next variable.
    pub(crate) fn cyclic_ideal(d: i64) -> MonomialIdeal {
        MonomialIdeal::new(
            &[lp(&[d, 1, 0]), lp(&[0, d, 1]), lp(&[1, 0, d])],
            orthant(3),
        )
        .unwrap()
    }

    #[test]
    fn accepts_cyclic_ideal() {
        let ideal = cyclic_ideal(2);
        assert_eq!(
            ideal.exponents(),
            &[lp(&[0, 2, 1]), lp(&[1, 0, 2]), lp(&[2, 1, 0])]
        );
    }

    #[test]
    fn minimalizes_dominated_exponents() {
        let ideal = MonomialIdeal::new(&[lp(&[1, 0]), lp(&[1, 1])], orthant(2)).unwrap();
        assert_eq!(ideal.exponents(), &[lp(&[1, 0])]);
    }

    #[test]
    fn accepts_exponent_on_singular_cone() {
        let sigma = Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2);
        let ideal = MonomialIdeal::new(&[lp(&[1, 0])], sigma).unwrap();
        assert_eq!(ideal.exponents(), &[lp(&[1, 0])]);
    }

    #[test]
    fn rejects_exponent_outside_dual_cone() {
        let err = MonomialIdeal::new(&[lp(&[-1, 0, 0])], orthant(3)).unwrap_err();
        assert_eq!(err, ToricError::ExponentNotInDualCone);
    }

    #[test]
    fn rejects_unit_ideal() {
        let err = MonomialIdeal::new(&[lp(&[0, 0])], orthant(2)).unwrap_err();
        assert_eq!(err, ToricError::UnitIdeal);
    }

    #[test]
    fn rejects_ideal_missing_singular_face() {
        // The cone has a non-smooth 2-face spanned by (1,0,0) and (1,2,0);
        // an ideal generated by a monomial orthogonal to that face leaves
        // the singular locus outside the vanishing locus.
        let sigma = Cone::from_rays_i64(&[&[1, 0, 0], &[1, 2, 0], &[0, 0, 1]], 3);
        let err = MonomialIdeal::new(&[lp(&[0, 0, 1])], sigma.clone()).unwrap_err();
        assert!(matches!(err, ToricError::SingularLocusNotInZ { .. }));
        // An ideal positive on that face is accepted.
        assert!(MonomialIdeal::new(&[lp(&[0, 1, 0]), lp(&[2, 0, 0])], sigma).is_ok());
    }

    #[test]
    fn ord_examples() {
        let d2 = cyclic_ideal(2);
        assert_eq!(d2.ord(&lp(&[1, 1, 1])).unwrap(), Int::from(3));
        assert_eq!(d2.ord(&lp(&[1, 0, 0])).unwrap(), Int::from(0));
        for d in 1..=4 {
            let ideal = cyclic_ideal(d);
            assert_eq!(ideal.ord(&lp(&[0, 1, 1])).unwrap(), Int::from(1));
        }
        assert!(d2.ord(&lp(&[-1, 0, 0])).is_err());
    }

    #[test]
    fn newton_vertices_examples() {
        let d2 = cyclic_ideal(2);
        let np = d2.newton_polyhedron();
        assert_eq!(
            np.vertices,
            vec![lp(&[0, 2, 1]), lp(&[1, 0, 2]), lp(&[2, 1, 0])]
        );

        let both = MonomialIdeal::new(&[lp(&[1, 0]), lp(&[0, 1])], orthant(2)).unwrap();
        assert_eq!(both.newton_polyhedron().vertices.len(), 2);

        // A point on the segment between two others is not a vertex even
        // though it survives minimalization.
        let mid = MonomialIdeal::new(&[lp(&[2, 0]), lp(&[1, 1]), lp(&[0, 2])], orthant(2)).unwrap();
        assert_eq!(mid.exponents().len(), 3);
        assert_eq!(
            mid.newton_polyhedron().vertices,
            vec![lp(&[0, 2]), lp(&[2, 0])]
        );
    }

    #[test]
    fn dual_fan_of_max_ideal_splits_quadrant() {
        let ideal = MonomialIdeal::new(&[lp(&[1, 0]), lp(&[0, 1])], orthant(2)).unwrap();
        let df = ideal.dual_fan().unwrap();
        let expected = Fan::face_fan(orthant(2))
            .unwrap()
            .star_subdivide(&lp(&[1, 1]))
            .unwrap();
        assert_eq!(df.fan(), &expected);
        // Along the x-heavy direction (2,1) the second generator pairs lower.
        assert_eq!(df.supporting_vertex(&lp(&[2, 1])), Some(&lp(&[0, 1])));
    }

    #[test]
    fn dual_fan_of_principal_ideal_is_face_fan() {
        let ideal = MonomialIdeal::new(&[lp(&[1, 0])], orthant(2)).unwrap();
        let df = ideal.dual_fan().unwrap();
        assert_eq!(df.fan().max_cones().len(), 1);
        assert_eq!(df.fan().max_cones()[0], orthant(2));
    }

    #[test]
    fn cyclic_dual_fan_contains_diagonal_ray() {
        let d2 = cyclic_ideal(2);
        let df = d2.dual_fan().unwrap();
        assert!(df.rays().contains(&lp(&[1, 1, 1])));
        assert_eq!(df.max_cones().len(), 3);
        // The fan refines the face fan of the orthant.
        let face_fan = Fan::face_fan(orthant(3)).unwrap();
        assert!(df.fan().refines(&face_fan).unwrap());
    }

    #[test]
    fn ord_is_linear_on_dual_fan_cones() {
        let d2 = cyclic_ideal(2);
        let df = d2.dual_fan().unwrap();
        for (cone, _) in df.max_cones() {
            let pts = cone.enumerate_box(2);
            for u in &pts {
                for v in &pts {
                    let s = u.add(v);
                    assert_eq!(
                        d2.ord(&s).unwrap(),
                        d2.ord(u).unwrap() + d2.ord(v).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn minimalization_is_idempotent() {
        let ideal = MonomialIdeal::new(
            &[lp(&[2, 1, 0]), lp(&[0, 2, 1]), lp(&[1, 0, 2]), lp(&[2, 2, 2])],
            orthant(3),
        )
        .unwrap();
        let again = MonomialIdeal::new(ideal.exponents(), orthant(3)).unwrap();
        assert_eq!(ideal, again);
    }
}
