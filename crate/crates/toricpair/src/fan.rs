//! Fans of strongly convex rational polyhedral cones.
//!
//! A fan stores its maximal cones; faces are materialized on demand. The
//! public constructor verifies the fan axioms (pairwise intersections are
//! common faces). Star subdivision builds on the verified input and is used
//! heavily by the resolution sampler, so it skips re-verification; its output
//! is a fan by construction.

use crate::cone::Cone;
use crate::error::{Result, ToricError};
use crate::lattice::LatticePoint;
use num_traits::Zero;
use std::collections::BTreeSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Fan {
    ambient: usize,
    max_cones: Vec<Cone>,
}

impl std::fmt::Debug for Fan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Fan")
            .field("max_cones", &self.max_cones)
            .finish()
    }
}

impl Fan {
    /// Build a fan from cones, dropping duplicates and non-maximal cones,
    /// and verifying the fan axioms.
    pub fn from_cones(cones: Vec<Cone>, ambient: usize) -> Result<Fan> {
        let fan = Self::from_cones_unchecked(cones, ambient)?;
        fan.validate()?;
        Ok(fan)
    }

    pub(crate) fn from_cones_unchecked(cones: Vec<Cone>, ambient: usize) -> Result<Fan> {
        let mut uniq: Vec<Cone> = Vec::new();
        for c in cones {
            if c.ambient_rank() != ambient {
                return Err(ToricError::DimensionMismatch {
                    expected: ambient,
                    got: c.ambient_rank(),
                });
            }
            if !c.is_strongly_convex() {
                return Err(ToricError::NotStronglyConvex);
            }
            if !uniq.contains(&c) {
                uniq.push(c);
            }
        }
        let max_cones: Vec<Cone> = uniq
            .iter()
            .filter(|c| {
                !uniq
                    .iter()
                    .any(|d| *c != d && d.contains_cone(c))
            })
            .cloned()
            .collect();
        let mut max_cones = max_cones;
        max_cones.sort();
        Ok(Fan { ambient, max_cones })
    }

    /// The face fan of a single strongly convex cone.
    pub fn face_fan(cone: Cone) -> Result<Fan> {
        if !cone.is_strongly_convex() {
            return Err(ToricError::NotStronglyConvex);
        }
        let ambient = cone.ambient_rank();
        Ok(Fan {
            ambient,
            max_cones: vec![cone],
        })
    }

    /// Check the fan axioms: every pairwise intersection is a face of both.
    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.max_cones.iter().enumerate() {
            for b in self.max_cones.iter().skip(i + 1) {
                let meet = a.intersect(b);
                let p = meet.relint_point();
                let fa = a
                    .smallest_face_containing(&p)
                    .map_err(|_| ToricError::InvalidFan("intersection escapes cone".into()))?;
                if fa != meet {
                    return Err(ToricError::InvalidFan(format!(
                        "intersection of {a:?} and {b:?} is not a face of the first"
                    )));
                }
                let fb = b
                    .smallest_face_containing(&p)
                    .map_err(|_| ToricError::InvalidFan("intersection escapes cone".into()))?;
                if fb != meet {
                    return Err(ToricError::InvalidFan(format!(
                        "intersection of {a:?} and {b:?} is not a face of the second"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// All cones of the fan (faces of the maximal cones), deduplicated.
    pub fn all_cones(&self) -> Vec<Cone> {
        let mut out: BTreeSet<Cone> = BTreeSet::new();
        for c in &self.max_cones {
            for f in c.faces() {
                out.insert(f);
            }
        }
        out.into_iter().collect()
    }

    /// Primitive generators of the rays of the fan.
    pub fn rays(&self) -> Vec<LatticePoint> {
        let mut out: BTreeSet<LatticePoint> = BTreeSet::new();
        for c in &self.max_cones {
            for r in c.rays() {
                out.insert(r.clone());
            }
        }
        out.into_iter().collect()
    }

    /// Membership in the support |F|.
    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.max_cones.iter().any(|c| c.contains(x))
    }

    /// The unique cone with x in its relative interior.
    pub fn smallest_containing_cone(&self, x: &LatticePoint) -> Result<Cone> {
        let holder = self
            .max_cones
            .iter()
            .find(|c| c.contains(x))
            .ok_or(ToricError::PointOutsideFanSupport)?;
        holder.smallest_face_containing(x)
    }

    /// Maximal cones containing the point.
    pub fn max_cones_containing(&self, x: &LatticePoint) -> Vec<&Cone> {
        self.max_cones.iter().filter(|c| c.contains(x)).collect()
    }

    /// Star subdivision at a primitive point of the support.
    ///
    /// Cones not containing `v` survive; every maximal cone containing `v`
    /// is replaced by the joins of `v` with its facets that avoid `v`.
    pub fn star_subdivide(&self, v: &LatticePoint) -> Result<Fan> {
        if v.is_zero() {
            return Err(ToricError::ZeroVector);
        }
        if !v.is_primitive() {
            return Err(ToricError::NotPrimitive);
        }
        if !self.contains(v) {
            return Err(ToricError::PointOutsideFanSupport);
        }
        let mut new_cones: Vec<Cone> = Vec::new();
        for c in &self.max_cones {
            if !c.contains(v) {
                new_cones.push(c.clone());
                continue;
            }
            for facet in c.facet_faces() {
                if facet.contains(v) {
                    continue;
                }
                let mut gens = facet.rays().to_vec();
                gens.push(v.clone());
                new_cones.push(Cone::from_rays(&gens, self.ambient)?);
            }
        }
        Fan::from_cones_unchecked(new_cones, self.ambient)
    }

    /// The convex support of the fan, verified by an exact wall-coverage
    /// argument. Returns an error when the support is not convex (or the
    /// maximal cones have mixed dimension).
    pub fn support_cone(&self) -> Result<Cone> {
        let mut gens: Vec<LatticePoint> = Vec::new();
        for c in &self.max_cones {
            gens.extend(c.rays().iter().cloned());
        }
        let hull = Cone::from_rays(&gens, self.ambient)?;
        let d = hull.dim();
        if self.max_cones.iter().any(|c| c.dim() != d) {
            return Err(ToricError::NonConvexSupport);
        }
        if self.max_cones.len() == 1 {
            return Ok(hull);
        }
        // Every facet of every top-dimensional cone must either lie on the
        // boundary of the hull or be shared with exactly one other cone on
        // the opposite side.
        for c in &self.max_cones {
            'walls: for wall in c.facet_faces() {
                for h in hull.facet_normals() {
                    if wall.rays().iter().all(|r| h.dot(r).is_zero()) {
                        continue 'walls;
                    }
                }
                let p = wall.relint_point();
                let mut shared = 0usize;
                for other in &self.max_cones {
                    if other == c || !other.contains(&p) {
                        continue;
                    }
                    if other.smallest_face_containing(&p)? == wall {
                        shared += 1;
                    } else {
                        return Err(ToricError::NonConvexSupport);
                    }
                }
                if shared != 1 {
                    return Err(ToricError::NonConvexSupport);
                }
            }
        }
        Ok(hull)
    }

    /// True iff every cone of `self` is contained in some cone of `other`.
    /// Errors when the supports differ.
    pub fn refines(&self, other: &Fan) -> Result<bool> {
        let s1 = self.support_cone()?;
        let s2 = other.support_cone()?;
        if s1 != s2 {
            return Err(ToricError::SupportMismatch);
        }
        Ok(self.max_cones.iter().all(|c| {
            other.max_cones.iter().any(|d| d.contains_cone(c))
        }))
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

    #[test]
    fn star_subdivide_quadrant() {
        let fan = Fan::face_fan(orthant(2)).unwrap();
        let split = fan.star_subdivide(&lp(&[1, 1])).unwrap();
        assert_eq!(split.max_cones().len(), 2);
        let expected: BTreeSet<Cone> = [
            Cone::from_rays_i64(&[&[1, 0], &[1, 1]], 2),
            Cone::from_rays_i64(&[&[1, 1], &[0, 1]], 2),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Cone> = split.max_cones().iter().cloned().collect();
        assert_eq!(got, expected);
        split.validate().unwrap();
    }

    #[test]
    fn star_subdivide_orthant_3d() {
        let fan = Fan::face_fan(orthant(3)).unwrap();
        let split = fan.star_subdivide(&lp(&[1, 1, 1])).unwrap();
        assert_eq!(split.max_cones().len(), 3);
        for c in split.max_cones() {
            assert!(c.rays().contains(&lp(&[1, 1, 1])));
        }
        split.validate().unwrap();
    }

    #[test]
    fn star_subdivide_existing_ray_is_identity() {
        let fan = Fan::face_fan(orthant(2)).unwrap();
        let same = fan.star_subdivide(&lp(&[1, 0])).unwrap();
        assert_eq!(same, fan);
        let split = fan.star_subdivide(&lp(&[1, 1])).unwrap();
        let same2 = split.star_subdivide(&lp(&[1, 1])).unwrap();
        assert_eq!(same2, split);
    }

    #[test]
    fn star_subdivide_rejects_bad_input() {
        let fan = Fan::face_fan(orthant(2)).unwrap();
        assert_eq!(
            fan.star_subdivide(&lp(&[2, 2])),
            Err(ToricError::NotPrimitive)
        );
        assert_eq!(
            fan.star_subdivide(&lp(&[-1, 0])),
            Err(ToricError::PointOutsideFanSupport)
        );
    }

    #[test]
    fn refines_basics() {
        let fan = Fan::face_fan(orthant(2)).unwrap();
        let split = fan.star_subdivide(&lp(&[1, 1])).unwrap();
        assert!(split.refines(&fan).unwrap());
        assert!(fan.refines(&fan).unwrap());
        assert!(!fan.refines(&split).unwrap());
        let other = fan.star_subdivide(&lp(&[1, 2])).unwrap();
        assert!(!split.refines(&other).unwrap());
        assert!(!other.refines(&split).unwrap());
    }

    #[test]
    fn refines_rejects_support_mismatch() {
        let fan2 = Fan::face_fan(Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2)).unwrap();
        let fan = Fan::face_fan(orthant(2)).unwrap();
        assert_eq!(fan.refines(&fan2), Err(ToricError::SupportMismatch));
    }

    #[test]
    fn smallest_containing_cone_examples() {
        let fan = Fan::face_fan(orthant(2))
            .unwrap()
            .star_subdivide(&lp(&[1, 1]))
            .unwrap();
        let on_ray = fan.smallest_containing_cone(&lp(&[2, 2])).unwrap();
        assert_eq!(on_ray.rays(), &[lp(&[1, 1])]);
        let interior = fan.smallest_containing_cone(&lp(&[3, 1])).unwrap();
        assert_eq!(interior, Cone::from_rays_i64(&[&[1, 0], &[1, 1]], 2));
        let boundary = fan.smallest_containing_cone(&lp(&[0, 5])).unwrap();
        assert_eq!(boundary.rays(), &[lp(&[0, 1])]);
        assert_eq!(
            fan.smallest_containing_cone(&lp(&[-1, 2])),
            Err(ToricError::PointOutsideFanSupport)
        );
    }

    #[test]
    fn support_cone_detects_gaps() {
        // Two opposite quadrants do not have convex support.
        let q1 = Cone::from_rays_i64(&[&[1, 0], &[0, 1]], 2);
        let q3 = Cone::from_rays_i64(&[&[-1, 0], &[0, -1]], 2);
        let fan = Fan::from_cones_unchecked(vec![q1, q3], 2).unwrap();
        assert_eq!(fan.support_cone(), Err(ToricError::NonConvexSupport));
    }

    #[test]
    fn validate_rejects_overlapping_cones() {
        let a = Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2);
        let b = Cone::from_rays_i64(&[&[1, 1], &[0, 1]], 2);
        let fan = Fan::from_cones_unchecked(vec![a, b], 2).unwrap();
        assert!(fan.validate().is_err());
    }
}
