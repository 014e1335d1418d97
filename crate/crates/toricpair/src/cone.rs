//! Rational polyhedral cones with exact arithmetic.
//!
//! A `Cone` is stored in canonical form: the extreme rays (one primitive
//! representative per ray, modulo lineality) together with a canonical basis
//! of the lineality lattice. The facet description is computed eagerly by the
//! double description method, so cones are immutable and thread-compatible
//! after construction.

use crate::error::{Result, ToricError};
use crate::lattice::{Int, LatticePoint, Rat};
use crate::linalg;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Generators of the cone { x : <c, x> >= 0 for all constraints c },
/// as extreme rays plus a lineality basis, via double description.
fn dd_generators(
    constraints: &[LatticePoint],
    ambient: usize,
) -> (Vec<LatticePoint>, Vec<LatticePoint>) {
    assert!(
        constraints.len() <= 64,
        "double description limited to 64 constraints"
    );
    let mut lineality: Vec<LatticePoint> =
        (0..ambient).map(|i| LatticePoint::unit(ambient, i)).collect();
    // (vector, tight set over processed constraint indices)
    let mut rays: Vec<(LatticePoint, u64)> = Vec::new();
    let mut processed_mask = 0u64;

    for (idx, a) in constraints.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let bit = 1u64 << idx;
        let lin_evals: Vec<Int> = lineality.iter().map(|l| l.dot(a)).collect();
        if let Some(pos) = lin_evals.iter().position(|e| !e.is_zero()) {
            // Split the lineality: one basis vector becomes a ray.
            let mut pivot = lineality.remove(pos);
            let mut pe = lin_evals[pos].clone();
            if pe.is_negative() {
                pivot = pivot.neg();
                pe = -pe;
            }
            let mut new_lin = Vec::with_capacity(lineality.len());
            for (l, e) in lineality
                .iter()
                .zip(lin_evals.iter().enumerate().filter(|(i, _)| *i != pos).map(|(_, e)| e))
            {
                if e.is_zero() {
                    new_lin.push(l.clone());
                } else {
                    let proj = l.scale(&pe).sub(&pivot.scale(e));
                    new_lin.push(proj.primitivize().expect("projection of independent vector"));
                }
            }
            lineality = new_lin;
            let mut new_rays = Vec::with_capacity(rays.len() + 1);
            for (r, tight) in &rays {
                let e = r.dot(a);
                if e.is_zero() {
                    new_rays.push((r.clone(), tight | bit));
                } else {
                    let proj = r.scale(&pe).sub(&pivot.scale(&e));
                    new_rays.push((
                        proj.primitivize().expect("ray projection nonzero"),
                        tight | bit,
                    ));
                }
            }
            // Tight on every previously processed constraint, strictly
            // positive on this one.
            new_rays.push((pivot, processed_mask));
            rays = new_rays;
            processed_mask |= bit;
            continue;
        }
        // Lineality untouched: classic double description step on rays.
        let evals: Vec<Int> = rays.iter().map(|(r, _)| r.dot(a)).collect();
        if evals.iter().all(|e| !e.is_negative()) {
            for ((_, tight), e) in rays.iter_mut().zip(&evals) {
                if e.is_zero() {
                    *tight |= bit;
                }
            }
            processed_mask |= bit;
            continue;
        }
        let mut next: Vec<(LatticePoint, u64)> = Vec::new();
        for ((r, tight), e) in rays.iter().zip(&evals) {
            if !e.is_negative() {
                let t = if e.is_zero() { tight | bit } else { *tight };
                next.push((r.clone(), t));
            }
        }
        for (i, (p, pt)) in rays.iter().enumerate() {
            if !evals[i].is_positive() {
                continue;
            }
            for (j, (m, mt)) in rays.iter().enumerate() {
                if !evals[j].is_negative() {
                    continue;
                }
                let common = pt & mt;
                // Combinatorial adjacency: no third ray is tight on a superset.
                let adjacent = rays.iter().enumerate().all(|(k, (_, kt))| {
                    k == i || k == j || (kt & common) != common
                });
                if !adjacent {
                    continue;
                }
                let combo = m.scale(&evals[i]).sub(&p.scale(&evals[j]));
                if combo.is_zero() {
                    continue;
                }
                let combo = combo.primitivize().expect("nonzero combination");
                if !next.iter().any(|(r, _)| *r == combo) {
                    next.push((combo, common | bit));
                }
            }
        }
        rays = next;
        processed_mask |= bit;
    }
    (rays.into_iter().map(|(r, _)| r).collect(), lineality)
}

/// A rational polyhedral cone in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    ambient: usize,
    rays: Vec<LatticePoint>,
    lineality: Vec<LatticePoint>,
    /// Facet normals: <f, x> >= 0 on the cone.
    facets: Vec<LatticePoint>,
    /// Span equations: <e, x> = 0 on the cone.
    span_eqs: Vec<LatticePoint>,
    dim: usize,
}

impl std::fmt::Debug for Cone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Cone")
            .field("rays", &self.rays)
            .field("lineality", &self.lineality)
            .finish()
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.rays, &self.lineality).cmp(&(&other.rays, &other.lineality))
    }
}

impl Cone {
    /// Cone generated by the given vectors. Zero generators are ignored.
    pub fn from_rays(generators: &[LatticePoint], ambient: usize) -> Result<Cone> {
        for g in generators {
            if g.dim() != ambient {
                return Err(ToricError::DimensionMismatch {
                    expected: ambient,
                    got: g.dim(),
                });
            }
        }
        let mut gens: Vec<LatticePoint> = Vec::new();
        for g in generators {
            if !g.is_zero() {
                let p = g.primitivize()?;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ok(Self::build(gens, ambient))
    }

    pub fn from_rays_i64(generators: &[&[i64]], ambient: usize) -> Cone {
        let gens: Vec<LatticePoint> = generators
            .iter()
            .map(|g| LatticePoint::from_i64(g))
            .collect();
        Cone::from_rays(&gens, ambient).expect("valid literal cone")
    }

    /// Cone { x : <c, x> >= 0 for all c in constraints }.
    pub fn from_constraints(constraints: &[LatticePoint], ambient: usize) -> Cone {
        let (rays, lin) = dd_generators(constraints, ambient);
        let mut gens = rays;
        for l in &lin {
            gens.push(l.clone());
            gens.push(l.neg());
        }
        Cone::from_rays(&gens, ambient).expect("generators from dd are nonzero")
    }

    pub fn zero(ambient: usize) -> Cone {
        Cone::from_rays(&[], ambient).expect("zero cone")
    }

    fn build(gens: Vec<LatticePoint>, ambient: usize) -> Cone {
        // Dual description: facets and span equations.
        let (facets, span_eqs) = dd_generators(&gens, ambient);
        // Lineality lattice = integer kernel of all dual generators.
        let mut dual_rows = linalg::points_to_rows(&facets);
        dual_rows.extend(linalg::points_to_rows(&span_eqs));
        let lineality_rows = if dual_rows.is_empty() {
            (0..ambient)
                .map(|i| {
                    let mut r = vec![Int::zero(); ambient];
                    r[i] = Int::one();
                    r
                })
                .collect()
        } else {
            linalg::right_kernel(&dual_rows, ambient)
        };
        let lineality: Vec<LatticePoint> = lineality_rows
            .iter()
            .map(|r| LatticePoint::new(r.clone()))
            .collect();
        let dim = ambient - linalg::rank_of_points(&span_eqs);

        let rays: Vec<LatticePoint> = if lineality.is_empty() {
            let mut out: Vec<LatticePoint> = Vec::new();
            for g in &gens {
                let mut tight = linalg::points_to_rows(&span_eqs);
                for f in &facets {
                    if f.dot(g).is_zero() {
                        tight.push(f.coords().to_vec());
                    }
                }
                if linalg::rank(&tight) == ambient - 1 && !out.contains(g) {
                    out.push(g.clone());
                }
            }
            out.sort();
            out
        } else if dim == lineality.len() {
            Vec::new()
        } else {
            // Quotient by the lineality and lift the extreme rays back with
            // zero coordinates along the lineality block.
            let lin_rows = linalg::points_to_rows(&lineality);
            let w = linalg::complete_saturated_basis(&lin_rows, ambient);
            let winv = linalg::invert_unimodular(&w);
            let k = lineality.len();
            let q_dim = ambient - k;
            let project = |v: &LatticePoint| -> LatticePoint {
                // coords of v in the w-basis: c = v * winv
                let c: Vec<Int> = (0..ambient)
                    .map(|j| {
                        (0..ambient)
                            .map(|i| v.coord(i) * &winv[i][j])
                            .sum::<Int>()
                    })
                    .collect();
                LatticePoint::new(c[k..].to_vec())
            };
            let q_gens: Vec<LatticePoint> = gens.iter().map(|g| project(g)).collect();
            let q_cone = Cone::from_rays(&q_gens, q_dim).expect("quotient generators");
            debug_assert!(q_cone.is_strongly_convex(), "quotient must be pointed");
            let mut out: Vec<LatticePoint> = q_cone
                .rays()
                .iter()
                .map(|r| {
                    let mut c = vec![Int::zero(); ambient];
                    c[k..].clone_from_slice(r.coords());
                    // lift = c * w
                    let lifted: Vec<Int> = (0..ambient)
                        .map(|j| (0..ambient).map(|i| &c[i] * &w[i][j]).sum::<Int>())
                        .collect();
                    LatticePoint::new(lifted)
                })
                .collect();
            out.sort();
            out
        };

        let mut facets = facets;
        facets.sort();
        let mut span_eqs = span_eqs;
        span_eqs.sort();
        Cone {
            ambient,
            rays,
            lineality,
            facets,
            span_eqs,
            dim,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme rays (canonical primitive representatives).
    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    /// Canonical basis of the lineality lattice (empty iff strongly convex).
    pub fn lineality(&self) -> &[LatticePoint] {
        &self.lineality
    }

    /// Irredundant generator list: extreme rays plus +-lineality basis.
    pub fn generators(&self) -> Vec<LatticePoint> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.neg());
        }
        g.sort();
        g
    }

    /// Inner facet normals (\"<f, x> >= 0\" on the cone).
    pub fn facet_normals(&self) -> &[LatticePoint] {
        &self.facets
    }

    pub fn span_equations(&self) -> &[LatticePoint] {
        &self.span_eqs
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    pub fn is_zero_cone(&self) -> bool {
        self.dim == 0
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.span_eqs.iter().all(|e| e.dot(x).is_zero())
            && self.facets.iter().all(|f| !f.dot(x).is_negative())
    }

    pub fn relint_contains(&self, x: &LatticePoint) -> bool {
        self.span_eqs.iter().all(|e| e.dot(x).is_zero())
            && self.facets.iter().all(|f| f.dot(x).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// A relative-interior lattice point (sum of the generators).
    pub fn relint_point(&self) -> LatticePoint {
        let mut p = LatticePoint::zero(self.ambient);
        for r in &self.rays {
            p = p.add(r);
        }
        p
    }

    /// The dual cone { u : <v, u> >= 0 for all v in self }.
    pub fn dual(&self) -> Cone {
        let mut gens = self.facets.clone();
        for e in &self.span_eqs {
            gens.push(e.clone());
            gens.push(e.neg());
        }
        Cone::from_rays(&gens, self.ambient).expect("dual generators")
    }

    /// Intersection of two cones.
    pub fn intersect(&self, other: &Cone) -> Cone {
        let mut cons = self.facets.clone();
        for e in &self.span_eqs {
            cons.push(e.clone());
            cons.push(e.neg());
        }
        cons.extend(other.facets.iter().cloned());
        for e in &other.span_eqs {
            cons.push(e.clone());
            cons.push(e.neg());
        }
        Cone::from_constraints(&cons, self.ambient)
    }

    /// The smallest face containing x, which holds x in its relative
    /// interior. Errors when x is outside the cone.
    pub fn smallest_face_containing(&self, x: &LatticePoint) -> Result<Cone> {
        if !self.contains(x) {
            return Err(ToricError::PointOutsideCone);
        }
        let tight: Vec<&LatticePoint> = self
            .facets
            .iter()
            .filter(|f| f.dot(x).is_zero())
            .collect();
        let mut gens: Vec<LatticePoint> = self
            .rays
            .iter()
            .filter(|r| tight.iter().all(|f| f.dot(r).is_zero()))
            .cloned()
            .collect();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(l.neg());
        }
        Cone::from_rays(&gens, self.ambient)
    }

    /// All faces, including the cone itself and its minimal face.
    pub fn faces(&self) -> Vec<Cone> {
        let nf = self.facets.len();
        assert!(nf <= 20, "face enumeration limited to 20 facets");
        let mut seen: BTreeSet<Cone> = BTreeSet::new();
        for mask in 0u32..(1u32 << nf) {
            let sel: Vec<&LatticePoint> = self
                .facets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, f)| f)
                .collect();
            let mut gens: Vec<LatticePoint> = self
                .rays
                .iter()
                .filter(|r| sel.iter().all(|f| f.dot(r).is_zero()))
                .cloned()
                .collect();
            for l in &self.lineality {
                gens.push(l.clone());
                gens.push(l.neg());
            }
            seen.insert(Cone::from_rays(&gens, self.ambient).expect("face generators"));
        }
        seen.into_iter().collect()
    }

    /// Facets (faces of codimension one within the cone).
    pub fn facet_faces(&self) -> Vec<Cone> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            let mut gens: Vec<LatticePoint> = self
                .rays
                .iter()
                .filter(|r| f.dot(r).is_zero())
                .cloned()
                .collect();
            for l in &self.lineality {
                gens.push(l.clone());
                gens.push(l.neg());
            }
            let face = Cone::from_rays(&gens, self.ambient).expect("facet generators");
            if face.dim() + 1 == self.dim {
                out.insert(face);
            }
        }
        out.into_iter().collect()
    }

    /// True iff the primitive generators extend to a Z-basis of the lattice
    /// they span (all elementary divisors equal 1).
    pub fn is_smooth(&self) -> bool {
        let mut gens = self.rays.clone();
        gens.extend(self.lineality.iter().cloned());
        if gens.len() != self.dim {
            return false;
        }
        if gens.is_empty() {
            return true;
        }
        let rows = linalg::points_to_rows(&gens);
        linalg::gcd_of_maximal_minors(&rows).is_one()
    }

    /// Lattice index of the subgroup generated by the rays of a simplicial
    /// cone inside the lattice of its span.
    pub fn multiplicity(&self) -> Int {
        debug_assert_eq!(self.rays.len(), self.dim, "multiplicity needs simplicial");
        if self.rays.is_empty() {
            return Int::one();
        }
        let rows = linalg::points_to_rows(&self.rays);
        linalg::gcd_of_maximal_minors(&rows).abs()
    }

    /// Decompose a strongly convex cone into simplicial subcones spanned by
    /// subsets of its rays (a pulling triangulation; no new rays).
    pub fn triangulate(&self) -> Vec<Vec<LatticePoint>> {
        assert!(self.is_strongly_convex(), "triangulation needs pointed cone");
        if self.rays.len() == self.dim {
            if self.rays.is_empty() {
                return Vec::new();
            }
            return vec![self.rays.clone()];
        }
        let apex = self.rays[0].clone();
        let mut out = Vec::new();
        for facet in self.facet_faces() {
            if facet.contains(&apex) {
                continue;
            }
            for mut simplex in facet.triangulate() {
                simplex.push(apex.clone());
                simplex.sort();
                out.push(simplex);
            }
        }
        out
    }

    /// Nonzero lattice points of the half-open fundamental parallelepiped
    /// { sum t_i g_i : 0 <= t_i < 1 } of an independent generator set.
    pub fn parallelepiped_points(simplex: &[LatticePoint]) -> Vec<LatticePoint> {
        let d = simplex.len();
        if d == 0 {
            return Vec::new();
        }
        let n = simplex[0].dim();
        let g_rows = linalg::points_to_rows(simplex);
        let basis = linalg::saturate_rows(&g_rows, n);
        debug_assert_eq!(basis.len(), d);
        // Coordinates of the generators in the saturated basis.
        let a: Vec<Vec<Int>> = simplex
            .iter()
            .map(|g| {
                let sol = linalg::solve_in_row_span(&basis, g.coords())
                    .expect("generator lies in its own span");
                sol.iter()
                    .map(|c| {
                        debug_assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            })
            .collect();
        let h = linalg::row_hnf(&a);
        debug_assert_eq!(h.len(), d);
        let radices: Vec<Int> = (0..d).map(|i| h[i][i].clone()).collect();
        let total: Int = radices.iter().product();
        if total.is_one() {
            return Vec::new();
        }
        // Rational inverse of A for solving t * A = c.
        let mut points = Vec::new();
        let mut c = vec![Int::zero(); d];
        loop {
            // Advance the mixed-radix counter (skipping the origin).
            let mut i = 0;
            loop {
                if i == d {
                    return points;
                }
                c[i] += 1;
                if c[i] < radices[i] {
                    break;
                }
                c[i] = Int::zero();
                i += 1;
            }
            // t with t * A = c, reduced into [0,1)^d, then mapped back.
            let t = linalg::solve_in_row_span(&a, &c).expect("invertible system");
            let t_frac: Vec<Rat> = t
                .iter()
                .map(|x| x - Rat::from_integer(x.floor().to_integer()))
                .collect();
            if t_frac.iter().all(|x| x.is_zero()) {
                continue;
            }
            // point = (t_frac * A) * basis, which is integral.
            let mut coords = vec![Int::zero(); n];
            let mut c_prime = vec![Rat::zero(); d];
            for j in 0..d {
                for (i, tf) in t_frac.iter().enumerate() {
                    c_prime[j] += tf * Rat::from_integer(a[i][j].clone());
                }
            }
            for (j, cp) in c_prime.iter().enumerate() {
                debug_assert!(cp.is_integer());
                let ci = cp.to_integer();
                for (x, b) in coords.iter_mut().zip(&basis[j]) {
                    *x += &ci * b;
                }
            }
            points.push(LatticePoint::new(coords));
        }
    }

    /// Unique minimal generating set of the semigroup (cone intersect N).
    pub fn hilbert_basis(&self) -> Result<Vec<LatticePoint>> {
        if !self.is_strongly_convex() {
            return Err(ToricError::NotStronglyConvex);
        }
        if self.rays.is_empty() {
            return Ok(Vec::new());
        }
        let mut candidates: BTreeSet<LatticePoint> = self.rays.iter().cloned().collect();
        for simplex in self.triangulate() {
            for p in Cone::parallelepiped_points(&simplex) {
                candidates.insert(p);
            }
        }
        // Sort by a strictly positive grading, then reduce greedily.
        let grade = |p: &LatticePoint| -> Int { self.facets.iter().map(|f| f.dot(p)).sum() };
        let mut ordered: Vec<LatticePoint> = candidates.into_iter().collect();
        ordered.sort_by(|a, b| (grade(a), a.clone()).cmp(&(grade(b), b.clone())));
        let mut basis: Vec<LatticePoint> = Vec::new();
        'outer: for h in ordered {
            for g in &basis {
                let d = h.sub(g);
                if !d.is_zero() && self.contains(&d) {
                    continue 'outer;
                }
            }
            basis.push(h);
        }
        basis.sort();
        Ok(basis)
    }

    /// All nonzero lattice points of the cone with sup-norm at most `bound`,
    /// in lexicographic order.
    pub fn enumerate_box(&self, bound: i64) -> Vec<LatticePoint> {
        assert!(bound >= 1, "box bound must be positive");
        let n = self.ambient;
        let mut out = Vec::new();
        let mut coords = vec![-bound; n];
        loop {
            let p = LatticePoint::from_i64(&coords);
            if !p.is_zero() && self.contains(&p) {
                out.push(p);
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] <= bound {
                    break;
                }
                coords[i] = -bound;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: &[i64]) -> LatticePoint {
        LatticePoint::from_i64(v)
    }

    #[test]
    fn first_orthant_is_self_dual() {
        let c = Cone::from_rays_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        let d = c.dual();
        assert_eq!(c, d);
    }

    #[test]
    fn dual_of_planar_cone() {
        let c = Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2);
        let d = c.dual();
        assert_eq!(d.rays(), &[lp(&[0, 1]), lp(&[2, -1])]);
        assert!(d.is_strongly_convex());
    }

    #[test]
    fn dual_of_half_line_is_half_plane() {
        let c = Cone::from_rays_i64(&[&[1, 0]], 2);
        let d = c.dual();
        let gens = d.generators();
        assert_eq!(gens, vec![lp(&[0, -1]), lp(&[0, 1]), lp(&[1, 0])]);
    }

    #[test]
    fn dual_is_involution_on_full_support() {
        for cone in [
            Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2),
            Cone::from_rays_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]], 3),
            Cone::from_rays_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3),
        ] {
            assert_eq!(cone.dual().dual(), cone);
        }
    }

    #[test]
    fn irredundant_generators() {
        let c = Cone::from_rays_i64(&[&[1, 0], &[1, 1], &[0, 1]], 2);
        assert_eq!(c.rays(), &[lp(&[0, 1]), lp(&[1, 0])]);
    }

    #[test]
    fn smoothness_checks() {
        assert!(Cone::from_rays_i64(&[&[1, 0], &[0, 1]], 2).is_smooth());
        assert!(!Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2).is_smooth());
        assert!(!Cone::from_rays_i64(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]], 3).is_smooth());
        // Lower-dimensional smooth face.
        assert!(Cone::from_rays_i64(&[&[1, 0, 1], &[0, 1, 1]], 3).is_smooth());
    }

    #[test]
    fn faces_of_quadrant() {
        let c = Cone::from_rays_i64(&[&[1, 0], &[0, 1]], 2);
        let faces = c.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().any(|f| f.is_zero_cone()));
        assert!(faces.contains(&c));
        assert!(faces.contains(&Cone::from_rays_i64(&[&[1, 0]], 2)));
    }

    #[test]
    fn faces_of_ray() {
        let c = Cone::from_rays_i64(&[&[1, 1]], 2);
        let faces = c.faces();
        assert_eq!(faces.len(), 2);
    }

    #[test]
    fn faces_of_orthant_3d() {
        let c = Cone::from_rays_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(c.faces().len(), 8);
    }

    #[test]
    fn hilbert_basis_examples() {
        let smooth = Cone::from_rays_i64(&[&[1, 0], &[0, 1]], 2);
        assert_eq!(
            smooth.hilbert_basis().unwrap(),
            vec![lp(&[0, 1]), lp(&[1, 0])]
        );
        let a1 = Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2);
        assert_eq!(
            a1.hilbert_basis().unwrap(),
            vec![lp(&[1, 0]), lp(&[1, 1]), lp(&[1, 2])]
        );
        let a3 = Cone::from_rays_i64(&[&[1, 0], &[1, 4]], 2);
        assert_eq!(
            a3.hilbert_basis().unwrap(),
            vec![lp(&[1, 0]), lp(&[1, 1]), lp(&[1, 2]), lp(&[1, 3]), lp(&[1, 4])]
        );
    }

    #[test]
    fn hilbert_basis_rejects_non_pointed() {
        let c = Cone::from_rays_i64(&[&[1, 0], &[-1, 0], &[0, 1]], 2);
        assert_eq!(c.hilbert_basis(), Err(ToricError::NotStronglyConvex));
    }

    #[test]
    fn enumerate_box_examples() {
        let orthant = Cone::from_rays_i64(&[&[1, 0], &[0, 1]], 2);
        assert_eq!(
            orthant.enumerate_box(1),
            vec![lp(&[0, 1]), lp(&[1, 0]), lp(&[1, 1])]
        );
        let c = Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2);
        assert_eq!(
            c.enumerate_box(2),
            vec![
                lp(&[1, 0]),
                lp(&[1, 1]),
                lp(&[1, 2]),
                lp(&[2, 0]),
                lp(&[2, 1]),
                lp(&[2, 2]),
            ]
        );
        let ray = Cone::from_rays_i64(&[&[0, 1]], 2);
        assert_eq!(ray.enumerate_box(2), vec![lp(&[0, 1]), lp(&[0, 2])]);
    }

    #[test]
    fn smallest_face() {
        let c = Cone::from_rays_i64(&[&[1, 0], &[0, 1]], 2);
        let f = c.smallest_face_containing(&lp(&[2, 0])).unwrap();
        assert_eq!(f.rays(), &[lp(&[1, 0])]);
        let g = c.smallest_face_containing(&lp(&[1, 3])).unwrap();
        assert_eq!(g, c);
        assert!(c.smallest_face_containing(&lp(&[-1, 0])).is_err());
    }

    #[test]
    fn triangulate_square_cone() {
        let c = Cone::from_rays_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]], 3);
        let tri = c.triangulate();
        assert_eq!(tri.len(), 2);
        for s in &tri {
            assert_eq!(s.len(), 3);
            assert_eq!(linalg::rank_of_points(s), 3);
        }
    }

    #[test]
    fn parallelepiped_of_a1() {
        let simplex = vec![lp(&[1, 0]), lp(&[1, 2])];
        let pts = Cone::parallelepiped_points(&simplex);
        assert_eq!(pts, vec![lp(&[1, 1])]);
    }

    #[test]
    fn smooth_iff_hilbert_equals_rays() {
        for cone in [
            Cone::from_rays_i64(&[&[1, 0], &[0, 1]], 2),
            Cone::from_rays_i64(&[&[1, 0], &[1, 2]], 2),
            Cone::from_rays_i64(&[&[1, 0], &[1, 3]], 2),
            Cone::from_rays_i64(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]], 3),
            Cone::from_rays_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3),
        ] {
            let hb = cone.hilbert_basis().unwrap();
            assert_eq!(cone.is_smooth(), hb == cone.rays().to_vec());
        }
    }
}
