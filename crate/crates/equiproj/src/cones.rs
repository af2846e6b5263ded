//! Polyhedral cones in H-representation, exact dual computation, and the
//! LP-backed predicates used by the face-counting oracles.
//!
//! A cone is stored as `{x : ⟨a, x⟩ = 0 ∀a ∈ equalities, ⟨b, x⟩ ≤ 0 ∀b ∈
//! inequalities}`. Dimensions, duals, and intersection tests are all exact:
//! dimension detection finds implicit equalities with one feasibility LP per
//! inequality, duals go through a double-description sweep that carries the
//! lineality space explicitly, and subspace intersection tests pull the cone
//! back into coordinates on the subspace so each LP is as small as possible.

use crate::combinatorics::{OrderedPartition, SignedOrderedPartition};
use crate::linalg::{dot, rank, rat, Rat, RationalMatrix, Subspace};
use crate::simplex::{find_feasible, is_feasible, Constraint};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};

/// A closed convex polyhedral cone `{x : Ax = 0, Bx ≤ 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCone {
    ambient_dim: usize,
    equalities: Vec<Vec<Rat>>,
    inequalities: Vec<Vec<Rat>>,
}

/// A cone described by generators: the linear span of `lineality` plus
/// non-negative combinations of `rays`. Rays are scaled so that their first
/// nonzero entry has absolute value one, and sorted, so equal cones produced
/// by different routes compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VCone {
    pub ambient_dim: usize,
    pub lineality: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

fn is_zero_row(row: &[Rat]) -> bool {
    row.iter().all(Rat::is_zero)
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Scale a nonzero vector by a positive rational so its first nonzero entry
/// has absolute value one. Positive scaling preserves the ray it spans.
fn canonical_ray(mut v: Vec<Rat>) -> Vec<Rat> {
    let scale = v
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.abs())
        .expect("canonical_ray needs a nonzero vector");
    if !scale.is_one() {
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &scale;
            }
        }
    }
    v
}

impl HCone {
    /// Builds a cone, dropping all-zero rows (they constrain nothing).
    pub fn new(ambient_dim: usize, equalities: Vec<Vec<Rat>>, inequalities: Vec<Vec<Rat>>) -> Self {
        for row in equalities.iter().chain(&inequalities) {
            assert_eq!(row.len(), ambient_dim, "cone row arity mismatch");
        }
        HCone {
            ambient_dim,
            equalities: equalities.into_iter().filter(|r| !is_zero_row(r)).collect(),
            inequalities: inequalities.into_iter().filter(|r| !is_zero_row(r)).collect(),
        }
    }

    pub fn full_space(ambient_dim: usize) -> Self {
        HCone::new(ambient_dim, Vec::new(), Vec::new())
    }

    /// The linear subspace `{x : Ax = 0}` viewed as a cone.
    pub fn from_subspace(s: &Subspace) -> Self {
        let normals = crate::linalg::orthogonal_complement(s);
        HCone::new(s.ambient_dim(), normals.basis().to_vec(), Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn equalities(&self) -> &[Vec<Rat>] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Vec<Rat>] {
        &self.inequalities
    }

    /// Exact membership test.
    pub fn contains(&self, x: &[Rat]) -> bool {
        assert_eq!(x.len(), self.ambient_dim, "point arity mismatch");
        self.equalities.iter().all(|a| dot(a, x).is_zero())
            && self.inequalities.iter().all(|b| !dot(b, x).is_positive())
    }

    /// The cone's membership system as LP constraints.
    fn membership_constraints(&self) -> Vec<Constraint> {
        let mut cons = Vec::with_capacity(self.equalities.len() + self.inequalities.len());
        for a in &self.equalities {
            cons.push(Constraint::eq(a.clone(), Rat::zero()));
        }
        for b in &self.inequalities {
            cons.push(Constraint::le(b.clone(), Rat::zero()));
        }
        cons
    }

    /// Indices of inequalities that hold with equality on the whole cone.
    fn implicit_equality_indices(&self) -> Vec<usize> {
        let base = self.membership_constraints();
        let mut implied = Vec::new();
        for (i, b) in self.inequalities.iter().enumerate() {
            let mut cons = base.clone();
            // the cone is scale-invariant, so ⟨b, x⟩ < 0 somewhere on it
            // exactly when ⟨b, x⟩ = -1 is attainable on it
            cons.push(Constraint::eq(b.clone(), -Rat::one()));
            if !is_feasible(self.ambient_dim, &cons) {
                implied.push(i);
            }
        }
        implied
    }

    /// Dimension of the cone: ambient dimension minus the rank of all
    /// equalities, explicit and implicit.
    pub fn dim(&self) -> usize {
        let mut eqs = self.equalities.clone();
        for i in self.implicit_equality_indices() {
            eqs.push(self.inequalities[i].clone());
        }
        self.ambient_dim - rank(&RationalMatrix::from_rows(self.ambient_dim, &eqs))
    }

    /// True when the cone is a linear subspace, i.e. every inequality is
    /// forced to equality on the cone.
    pub fn is_subspace(&self) -> bool {
        self.implicit_equality_indices().len() == self.inequalities.len()
    }

    /// A point in the relative interior: all non-implied inequalities hold
    /// strictly. Every nonempty cone has one (0 if the cone is a subspace).
    pub fn relative_interior_point(&self) -> Vec<Rat> {
        let implied = self.implicit_equality_indices();
        let mut cons = Vec::new();
        for a in &self.equalities {
            cons.push(Constraint::eq(a.clone(), Rat::zero()));
        }
        for (i, b) in self.inequalities.iter().enumerate() {
            if implied.binary_search(&i).is_ok() {
                cons.push(Constraint::eq(b.clone(), Rat::zero()));
            } else {
                cons.push(Constraint::le(b.clone(), -Rat::one()));
            }
        }
        find_feasible(self.ambient_dim, &cons)
            .expect("a cone always has a relative interior point")
    }
}

/// Generator description of `cone` (extreme rays modulo the lineality space).
///
/// This runs a double-description sweep: one constraint is added at a time,
/// first consuming the lineality space, then splitting the ray list at the
/// new hyperplane and combining adjacent rays across it. Intended for the
/// small ambient dimensions this crate works in; larger inputs are refused
/// rather than risk exponential blowup.
pub fn to_v_rep(cone: &HCone) -> Result<VCone> {
    let n = cone.ambient_dim;
    if n > 8 {
        return Err(Error::Unsupported(format!(
            "generator enumeration supports ambient dimension at most 8, got {n}"
        )));
    }
    let mut cons: Vec<Vec<Rat>> = Vec::new();
    for a in &cone.equalities {
        cons.push(a.clone());
        cons.push(a.iter().map(|x| -x.clone()).collect());
    }
    cons.extend(cone.inequalities.iter().cloned());
    if cons.len() > 64 {
        return Err(Error::Unsupported(format!(
            "generator enumeration supports at most 64 constraint rows, got {}",
            cons.len()
        )));
    }

    struct RayRec {
        v: Vec<Rat>,
        zero: u64, // bit k set when constraint k holds with equality on this ray
    }

    let mut lineality: Vec<Vec<Rat>> = (0..n).map(|i| unit(n, i)).collect();
    let mut rays: Vec<RayRec> = Vec::new();
    for (ci, a) in cons.iter().enumerate() {
        let bit = 1u64 << ci;
        let processed: u64 = bit - 1;
        if let Some(pos) = lineality.iter().position(|l| !dot(l, a).is_zero()) {
            // The lineality space sticks out of the halfspace. Pivot one
            // basis vector into a slack ray and project the rest (and all
            // existing rays) onto the hyperplane. The projection leaves
            // values on earlier constraints unchanged because the pivot
            // vector is tight on all of them.
            let mut l0 = lineality.swap_remove(pos);
            let mut d0 = dot(&l0, a);
            if d0.is_positive() {
                for x in l0.iter_mut() {
                    *x = -x.clone();
                }
                d0 = -d0;
            }
            for l in lineality.iter_mut() {
                let c = dot(l, a);
                if !c.is_zero() {
                    let f = &c / &d0;
                    for (li, pi) in l.iter_mut().zip(&l0) {
                        *li = &*li - &f * pi;
                    }
                }
            }
            for r in rays.iter_mut() {
                let c = dot(&r.v, a);
                if !c.is_zero() {
                    let f = &c / &d0;
                    for (ri, pi) in r.v.iter_mut().zip(&l0) {
                        *ri = &*ri - &f * pi;
                    }
                    r.v = canonical_ray(std::mem::take(&mut r.v));
                }
                r.zero |= bit;
            }
            rays.push(RayRec { v: canonical_ray(l0), zero: processed });
        } else {
            // The lineality space lies in the hyperplane; split the rays.
            let vals: Vec<Rat> = rays.iter().map(|r| dot(&r.v, a)).collect();
            let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
            let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
            let adjacent = |ip: usize, im: usize| -> bool {
                let common = rays[ip].zero & rays[im].zero & processed;
                !rays.iter().enumerate().any(|(k, r)| {
                    k != ip && k != im && (r.zero & common) == common
                })
            };
            let mut new_rays: Vec<RayRec> = Vec::new();
            for (i, r) in rays.iter().enumerate() {
                if vals[i].is_zero() {
                    new_rays.push(RayRec { v: r.v.clone(), zero: r.zero | bit });
                } else if vals[i].is_negative() {
                    new_rays.push(RayRec { v: r.v.clone(), zero: r.zero });
                }
            }
            for &ip in &pos {
                for &im in &neg {
                    if !adjacent(ip, im) {
                        continue;
                    }
                    // positive combination landing exactly on the hyperplane
                    let mut v = vec![Rat::zero(); n];
                    for (k, x) in v.iter_mut().enumerate() {
                        *x = &vals[ip] * &rays[im].v[k] - &vals[im] * &rays[ip].v[k];
                    }
                    let v = canonical_ray(v);
                    if new_rays.iter().all(|r| r.v != v) {
                        let zero = (rays[ip].zero & rays[im].zero) | bit;
                        new_rays.push(RayRec { v, zero });
                    }
                }
            }
            rays = new_rays;
        }
    }
    let lineality = Subspace::row_space(&RationalMatrix::from_rows(n, &lineality))
        .basis()
        .to_vec();
    let mut rays: Vec<Vec<Rat>> = rays.into_iter().map(|r| r.v).collect();
    rays.sort();
    Ok(VCone { ambient_dim: n, lineality, rays })
}

/// The polar dual `{y : ⟨y, x⟩ ≤ 0 for all x in the cone}`, computed by
/// enumerating generators: rays become inequalities, lineality becomes
/// equalities.
pub fn dual_cone(cone: &HCone) -> Result<HCone> {
    let v = to_v_rep(cone)?;
    Ok(HCone::new(v.ambient_dim, v.lineality, v.rays))
}

/// Does the cone meet the subspace in more than the origin?
///
/// Works in coordinates on the subspace: with basis matrix `B`, the cone
/// membership system pulls back through `x = Bᵀy`, and a nonzero witness is
/// normalized so some coordinate equals ±1 (positive scaling stays in the
/// cone). At most `2·dim(subspace)` small LPs, with early exit.
pub fn intersects_nontrivially(cone: &HCone, subspace: &Subspace) -> bool {
    assert_eq!(cone.ambient_dim, subspace.ambient_dim(), "ambient dimension mismatch");
    let k = subspace.dim();
    if k == 0 {
        return false;
    }
    let pull = |row: &[Rat]| -> Vec<Rat> {
        subspace.basis().iter().map(|b| dot(row, b)).collect()
    };
    let mut base = Vec::with_capacity(cone.equalities.len() + cone.inequalities.len());
    for a in &cone.equalities {
        base.push(Constraint::eq(pull(a), Rat::zero()));
    }
    for b in &cone.inequalities {
        base.push(Constraint::le(pull(b), Rat::zero()));
    }
    for i in 0..k {
        for sign in [1i64, -1] {
            let mut cons = base.clone();
            cons.push(Constraint::eq(unit(k, i), rat(sign)));
            if is_feasible(k, &cons) {
                return true;
            }
        }
    }
    false
}

/// Does the subspace meet the topological interior of the cone?
///
/// A cone with an equality row has empty interior. Otherwise a point of the
/// subspace with every inequality strictly negative exists exactly when the
/// pulled-back system with right-hand sides −1 is feasible (scale up any
/// strict witness).
pub fn interior_intersects(cone: &HCone, subspace: &Subspace) -> bool {
    assert_eq!(cone.ambient_dim, subspace.ambient_dim(), "ambient dimension mismatch");
    if !cone.equalities.is_empty() {
        return false;
    }
    let k = subspace.dim();
    if k == 0 {
        return cone.inequalities.is_empty();
    }
    let cons: Vec<Constraint> = cone
        .inequalities
        .iter()
        .map(|b| {
            let coeffs = subspace.basis().iter().map(|v| dot(b, v)).collect();
            Constraint::le(coeffs, -Rat::one())
        })
        .collect();
    is_feasible(k, &cons)
}

/// Is `inner ⊆ outer`? Checked one outer constraint at a time: an outer
/// inequality `⟨h, x⟩ ≤ 0` fails exactly when `⟨h, x⟩ = 1` is attainable on
/// `inner` (cones are scale-invariant), and an outer equality fails when
/// either `⟨h, x⟩ = 1` or `⟨h, x⟩ = -1` is.
pub fn cone_subset(inner: &HCone, outer: &HCone) -> bool {
    assert_eq!(inner.ambient_dim, outer.ambient_dim, "ambient dimension mismatch");
    let base = inner.membership_constraints();
    let attainable = |h: &[Rat], value: Rat| -> bool {
        let mut cons = base.clone();
        cons.push(Constraint::eq(h.to_vec(), value));
        is_feasible(inner.ambient_dim, &cons)
    };
    for h in &outer.inequalities {
        if attainable(h, Rat::one()) {
            return false;
        }
    }
    for h in &outer.equalities {
        if attainable(h, Rat::one()) || attainable(h, -Rat::one()) {
            return false;
        }
    }
    true
}

/// Exact set equality of two cones given by constraints.
pub fn cone_set_eq(a: &HCone, b: &HCone) -> bool {
    cone_subset(a, b) && cone_subset(b, a)
}

/// The closed cone of weak orderings refining an ordered set partition: all
/// coordinates within a block are equal, and block values weakly decrease
/// along the partition. Its dimension equals the number of blocks.
pub fn weyl_face_cone_a(partition: &OrderedPartition) -> HCone {
    let n = partition.n();
    let blocks = partition.blocks();
    let mut equalities = Vec::new();
    let mut inequalities = Vec::new();
    for block in blocks {
        for pair in block.windows(2) {
            let mut row = vec![Rat::zero(); n];
            row[pair[0]] = Rat::one();
            row[pair[1]] = -Rat::one();
            equalities.push(row);
        }
    }
    for pair in blocks.windows(2) {
        // value of the later block ≤ value of the earlier block
        let mut row = vec![Rat::zero(); n];
        row[pair[1][0]] = Rat::one();
        row[pair[0][0]] = -Rat::one();
        inequalities.push(row);
    }
    HCone::new(n, equalities, inequalities)
}

/// The signed analogue: coordinates carry the signs of the partition, the
/// zero block is pinned to zero, the signed block values weakly decrease,
/// and the last signed block is non-negative. Dimension = number of signed
/// blocks.
pub fn weyl_face_cone_b(partition: &SignedOrderedPartition) -> HCone {
    let n = partition.n();
    let blocks = partition.blocks();
    let signs = partition.signs();
    let signed_entry = |i: usize| -> Rat {
        if signs[i] > 0 {
            Rat::one()
        } else {
            -Rat::one()
        }
    };
    let mut equalities = Vec::new();
    let mut inequalities = Vec::new();
    for i in partition.zero_block() {
        equalities.push(unit(n, *i));
    }
    for block in blocks {
        for pair in block.windows(2) {
            let mut row = vec![Rat::zero(); n];
            row[pair[0]] = signed_entry(pair[0]);
            row[pair[1]] = -signed_entry(pair[1]);
            equalities.push(row);
        }
    }
    for pair in blocks.windows(2) {
        let mut row = vec![Rat::zero(); n];
        row[pair[1][0]] = signed_entry(pair[1][0]);
        row[pair[0][0]] = -signed_entry(pair[0][0]);
        inequalities.push(row);
    }
    if let Some(last) = blocks.last() {
        let mut row = vec![Rat::zero(); n];
        row[last[0]] = -signed_entry(last[0]);
        inequalities.push(row);
    }
    HCone::new(n, equalities, inequalities)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_ordered_partitions, enumerate_signed_ordered_partitions};
    use crate::linalg::{orthogonal_complement, random_rational_matrix, ratio};
    use proptest::prelude::*;

    fn orthant(n: usize) -> HCone {
        // {x : x_i ≥ 0} as {-x_i ≤ 0}
        let ineqs = (0..n)
            .map(|i| {
                let mut row = vec![Rat::zero(); n];
                row[i] = -Rat::one();
                row
            })
            .collect();
        HCone::new(n, Vec::new(), ineqs)
    }

    fn span_subspace(n: usize, rows: &[Vec<i64>]) -> Subspace {
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        Subspace::row_space(&RationalMatrix::from_rows(n, &rows))
    }

    #[test]
    fn dims_of_basic_cones() {
        assert_eq!(orthant(3).dim(), 3);
        assert_eq!(HCone::full_space(4).dim(), 4);
        let half = HCone::new(2, vec![], vec![vec![rat(1), rat(0)]]);
        assert_eq!(half.dim(), 2);
        // x ≤ 0 and -x ≤ 0 pin the first coordinate without an explicit equality
        let pinched = HCone::new(
            2,
            vec![],
            vec![vec![rat(1), rat(0)], vec![rat(-1), rat(0)]],
        );
        assert_eq!(pinched.dim(), 1);
        assert!(pinched.is_subspace());
        let origin = HCone::new(1, vec![vec![rat(1)]], vec![]);
        assert_eq!(origin.dim(), 0);
    }

    #[test]
    fn implicit_equalities_found() {
        // x + y ≤ 0, -x ≤ 0, -y ≤ 0 forces x = y = 0
        let c = HCone::new(
            2,
            vec![],
            vec![
                vec![rat(1), rat(1)],
                vec![rat(-1), rat(0)],
                vec![rat(0), rat(-1)],
            ],
        );
        assert_eq!(c.implicit_equality_indices(), vec![0, 1, 2]);
        assert_eq!(c.dim(), 0);
        assert!(c.is_subspace());
    }

    #[test]
    fn relative_interior_points_are_interior() {
        for cone in [
            orthant(3),
            HCone::new(2, vec![vec![rat(1), rat(-1)]], vec![vec![rat(-1), rat(0)]]),
            HCone::new(1, vec![vec![rat(1)]], vec![]),
        ] {
            let p = cone.relative_interior_point();
            assert!(cone.contains(&p));
            let implied = cone.implicit_equality_indices();
            for (i, b) in cone.inequalities().iter().enumerate() {
                if implied.binary_search(&i).is_err() {
                    assert!(dot(b, &p).is_negative(), "inequality {i} not strict");
                }
            }
        }
    }

    #[test]
    fn v_rep_of_negative_orthant() {
        let c = HCone::new(
            3,
            vec![],
            (0..3)
                .map(|i| {
                    let mut row = vec![Rat::zero(); 3];
                    row[i] = Rat::one();
                    row
                })
                .collect(),
        );
        let v = to_v_rep(&c).unwrap();
        assert!(v.lineality.is_empty());
        let expect: Vec<Vec<Rat>> = vec![
            vec![rat(-1), rat(0), rat(0)],
            vec![rat(0), rat(-1), rat(0)],
            vec![rat(0), rat(0), rat(-1)],
        ];
        let mut got = v.rays.clone();
        got.sort();
        let mut want = expect;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn v_rep_of_halfspace_and_hyperplane() {
        let half = HCone::new(2, vec![], vec![vec![rat(1), rat(0)]]);
        let v = to_v_rep(&half).unwrap();
        assert_eq!(v.lineality, vec![vec![rat(0), rat(1)]]);
        assert_eq!(v.rays, vec![vec![rat(-1), rat(0)]]);

        let hyper = HCone::new(2, vec![vec![rat(1), rat(0)]], vec![]);
        let v = to_v_rep(&hyper).unwrap();
        assert_eq!(v.lineality, vec![vec![rat(0), rat(1)]]);
        assert!(v.rays.is_empty());
    }

    #[test]
    fn v_rep_of_square_cone() {
        // cone over a square: rays (±1, ±1, 1)
        let c = HCone::new(
            3,
            vec![],
            vec![
                vec![rat(1), rat(0), rat(-1)],
                vec![rat(-1), rat(0), rat(-1)],
                vec![rat(0), rat(1), rat(-1)],
                vec![rat(0), rat(-1), rat(-1)],
            ],
        );
        let v = to_v_rep(&c).unwrap();
        assert!(v.lineality.is_empty());
        assert_eq!(v.rays.len(), 4);
        for r in &v.rays {
            assert_eq!(r[2], Rat::one());
            assert_eq!(r[0].abs(), Rat::one());
            assert_eq!(r[1].abs(), Rat::one());
        }
    }

    #[test]
    fn v_rep_of_origin_cone() {
        let c = HCone::new(2, vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]], vec![]);
        let v = to_v_rep(&c).unwrap();
        assert!(v.lineality.is_empty());
        assert!(v.rays.is_empty());
        // dual of the origin is the whole space
        let d = dual_cone(&c).unwrap();
        assert_eq!(d.dim(), 2);
        assert!(d.inequalities().is_empty() && d.equalities().is_empty());
    }

    #[test]
    fn dual_of_orthant() {
        let d = dual_cone(&orthant(2)).unwrap();
        // dual of {x ≥ 0} is {y ≤ 0}
        let expect = HCone::new(2, vec![], vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]);
        assert!(cone_set_eq(&d, &expect));
    }

    #[test]
    fn dual_of_halfspace_is_ray() {
        let half = HCone::new(2, vec![], vec![vec![rat(1), rat(0)]]);
        let d = dual_cone(&half).unwrap();
        // dual is the ray spanned by (1, 0)
        assert!(d.contains(&[rat(2), rat(0)]));
        assert!(!d.contains(&[rat(-1), rat(0)]));
        assert!(!d.contains(&[rat(1), rat(1)]));
        assert_eq!(d.dim(), 1);
    }

    #[test]
    fn double_dual_is_identity() {
        let tilted = HCone::new(
            3,
            vec![],
            vec![
                vec![rat(1), rat(-2), rat(0)],
                vec![rat(0), rat(1), rat(-3)],
                vec![rat(-1), rat(-1), rat(-1)],
            ],
        );
        for c in [
            orthant(3),
            tilted,
            HCone::new(3, vec![vec![rat(1), rat(1), rat(1)]], vec![vec![rat(1), rat(-1), rat(0)]]),
        ] {
            let dd = dual_cone(&dual_cone(&c).unwrap()).unwrap();
            assert!(cone_set_eq(&c, &dd), "double dual changed the cone");
        }
    }

    #[test]
    fn subspace_intersection_predicate() {
        let c = orthant(3);
        // the diagonal line meets the orthant
        assert!(intersects_nontrivially(&c, &span_subspace(3, &[vec![1, 1, 1]])));
        // a line into the open negative-positive quadrant mix misses it
        assert!(!intersects_nontrivially(&c, &span_subspace(3, &[vec![1, -1, 0]])));
        // the zero subspace never counts
        assert!(!intersects_nontrivially(&c, &Subspace::zero(3)));
        // a plane wide enough to touch the orthant
        assert!(intersects_nontrivially(
            &c,
            &span_subspace(3, &[vec![1, -1, 0], vec![0, 1, 1]])
        ));
    }

    #[test]
    fn interior_intersection_predicate() {
        let c = orthant(2);
        assert!(interior_intersects(&c, &span_subspace(2, &[vec![1, 1]])));
        // the axis only touches the boundary of the orthant
        assert!(!interior_intersects(&c, &span_subspace(2, &[vec![1, 0]])));
        // cones with equalities have empty interior
        let flat = HCone::new(2, vec![vec![rat(1), rat(0)]], vec![]);
        assert!(!interior_intersects(&flat, &span_subspace(2, &[vec![0, 1]])));
        // full space: every subspace, including the origin, qualifies
        assert!(interior_intersects(&HCone::full_space(2), &Subspace::zero(2)));
        assert!(!interior_intersects(&c, &Subspace::zero(2)));
    }

    #[test]
    fn subset_and_equality_predicates() {
        let quadrant = orthant(2);
        let half = HCone::new(2, vec![], vec![vec![rat(-1), rat(0)]]); // x ≥ 0
        assert!(cone_subset(&quadrant, &half));
        assert!(!cone_subset(&half, &quadrant));
        assert!(cone_set_eq(&quadrant, &quadrant));
        // same set via redundant description
        let redundant = HCone::new(
            2,
            vec![],
            vec![
                vec![rat(-1), rat(0)],
                vec![rat(0), rat(-1)],
                vec![rat(-1), rat(-1)],
            ],
        );
        assert!(cone_set_eq(&quadrant, &redundant));
    }

    #[test]
    fn ordering_cone_dimensions() {
        for (n, j) in [(3usize, 1usize), (3, 2), (3, 3), (4, 2)] {
            for p in enumerate_ordered_partitions(n, j) {
                assert_eq!(weyl_face_cone_a(&p).dim(), j, "n={n} j={j}");
            }
        }
        for (n, j) in [(2usize, 0usize), (2, 1), (2, 2), (3, 1), (3, 2)] {
            for p in enumerate_signed_ordered_partitions(n, j) {
                assert_eq!(weyl_face_cone_b(&p).dim(), j, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn ordering_cones_are_distinct() {
        // relative interior points of distinct cones are not shared
        let cones: Vec<HCone> = enumerate_signed_ordered_partitions(2, 1)
            .map(|p| weyl_face_cone_b(&p))
            .collect();
        assert_eq!(cones.len(), 8);
        let points: Vec<Vec<Rat>> = cones.iter().map(|c| c.relative_interior_point()).collect();
        for (i, p) in points.iter().enumerate() {
            for (j, c) in cones.iter().enumerate() {
                assert_eq!(i == j, c.contains(p), "cone {j} vs point {i}");
            }
        }
    }

    #[test]
    fn ordering_cone_closures_cover_members() {
        // the all-singletons chain cone in ambient 3 contains weakly
        // decreasing vectors only
        let mut found_identity = false;
        for p in enumerate_ordered_partitions(3, 3) {
            let c = weyl_face_cone_a(&p);
            if p.blocks() == [vec![0], vec![1], vec![2]] {
                found_identity = true;
                assert!(c.contains(&[rat(3), rat(2), rat(1)]));
                assert!(c.contains(&[rat(1), rat(1), rat(0)]));
                assert!(!c.contains(&[rat(1), rat(2), rat(0)]));
            }
        }
        assert!(found_identity);
    }

    #[test]
    fn signed_cone_respects_signs() {
        // one signed block {0, 1} with signs (+, -), zero block {2}
        let p = SignedOrderedPartition::new(3, vec![vec![0, 1]], vec![2], vec![1, -1, 0]).unwrap();
        let c = weyl_face_cone_b(&p);
        assert!(c.contains(&[rat(2), rat(-2), rat(0)]));
        assert!(!c.contains(&[rat(2), rat(2), rat(0)]));
        assert!(!c.contains(&[rat(-1), rat(1), rat(0)]));
        assert!(!c.contains(&[rat(2), rat(-2), rat(1)]));
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn fractional_cone_membership() {
        let c = HCone::new(2, vec![], vec![vec![ratio(1, 2), ratio(-1, 3)]]);
        assert!(c.contains(&[rat(0), rat(0)]));
        assert!(c.contains(&[ratio(2, 3), rat(1)]));
        assert!(!c.contains(&[rat(1), rat(0)]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Polarity swaps interiors for complements: a subspace meets the
        /// interior of the orthant exactly when its orthogonal complement
        /// meets the dual cone only at the origin.
        #[test]
        fn interior_duality_on_orthant(n in 2usize..=4, d in 1usize..=3, seed in 0u64..500) {
            let d = d.min(n - 1);
            let m = random_rational_matrix(d, n, seed, 4);
            let sub = Subspace::row_space(&m);
            let cone = orthant(n);
            // dual of {x ≥ 0} is {y ≤ 0}, written directly
            let dual = HCone::new(
                n,
                vec![],
                (0..n).map(|i| {
                    let mut row = vec![Rat::zero(); n];
                    row[i] = Rat::one();
                    row
                }).collect(),
            );
            let lhs = interior_intersects(&cone, &sub);
            let rhs = !intersects_nontrivially(&dual, &orthogonal_complement(&sub));
            prop_assert_eq!(lhs, rhs);
        }

        /// The double-description dual agrees with the hand-written dual of
        /// a random simplicial cone given by generator rows.
        #[test]
        fn dual_matches_generator_description(seed in 0u64..200) {
            let m = random_rational_matrix(3, 3, seed, 3);
            if rank(&m) < 3 {
                return Ok(());
            }
            // cone generated by the rows of m: {x = mᵀλ, λ ≥ 0}; its dual is
            // {y : m y ≤ 0}, written directly from the rows
            let direct_dual = HCone::new(3, vec![], m.row_vecs());
            // H-representation of the generated cone: y ∈ dual of direct_dual
            let generated = dual_cone(&direct_dual).unwrap();
            for r in m.row_vecs() {
                prop_assert!(generated.contains(&r));
            }
            let dd = dual_cone(&generated).unwrap();
            prop_assert!(cone_set_eq(&dd, &direct_dual));
        }
    }
}
