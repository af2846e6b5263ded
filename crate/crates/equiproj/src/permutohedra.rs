//! Permutohedra of types A and B: the convex hulls of the (signed)
//! permutations of a strictly decreasing value vector.
//!
//! Faces are combinatorial objects: a face of the type-A polytope is an
//! ordered set partition of the coordinates (the first block carries the
//! largest values), and a face of the type-B polytope is a signed ordered
//! partition whose zero block collects the coordinates pinned at the
//! smallest values with free signs. A polytope of dimension `p` has its
//! `j`-dimensional faces indexed by partitions with `p + 1 - j` blocks
//! (type A in `R^n`: `p = n - 1`) or `n - j` signed blocks (type B:
//! `p = n`). Tangent and normal cones at a face depend only on the
//! partition, not on the value vector, and the normal cone is exactly the
//! dual of the tangent cone — a fact the tests verify through two
//! independent computations.

use crate::combinatorics::{
    enumerate_ordered_partitions, enumerate_signed_ordered_partitions, factorial, stirling2,
    stirling2_b, OrderedPartition, SignedOrderedPartition,
};
use crate::cones::{weyl_face_cone_a, weyl_face_cone_b, HCone};
use crate::linalg::{dot, Rat};
use crate::{Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Number of `j`-dimensional faces of the type-A permutohedron on `n`
/// coordinates: `(n-j)! {n, n-j}` ordered set partitions into `n-j` blocks.
/// Zero outside `0 ≤ j ≤ n-1`.
pub fn face_count_a(n: usize, j: usize) -> BigInt {
    if n == 0 || j + 1 > n {
        return BigInt::zero();
    }
    factorial(n - j) * stirling2(n, n - j)
}

/// Number of `j`-dimensional faces of the type-B permutohedron:
/// `2^{n-j} (n-j)!` times the signed partition count `{n, n-j}_B`. Zero
/// outside `0 ≤ j ≤ n`.
pub fn face_count_b(n: usize, j: usize) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    (BigInt::one() << (n - j)) * factorial(n - j) * stirling2_b(n, n - j)
}

/// Face numbers `f_0 … f_{n-1}` of the type-A permutohedron.
pub fn face_vector_a(n: usize) -> Vec<BigInt> {
    (0..n).map(|j| face_count_a(n, j)).collect()
}

/// Face numbers `f_0 … f_n` of the type-B permutohedron.
pub fn face_vector_b(n: usize) -> Vec<BigInt> {
    (0..=n).map(|j| face_count_b(n, j)).collect()
}

/// All `j`-dimensional faces of the type-A polytope, as ordered partitions.
pub fn faces_of_dim_a(n: usize, j: usize) -> impl Iterator<Item = OrderedPartition> {
    let blocks = if j + 1 > n { 0 } else { n - j };
    enumerate_ordered_partitions(n, blocks)
}

/// All `j`-dimensional faces of the type-B polytope, as signed partitions.
pub fn faces_of_dim_b(n: usize, j: usize) -> impl Iterator<Item = SignedOrderedPartition> {
    let blocks = if j > n { n + 1 } else { n - j };
    enumerate_signed_ordered_partitions(n, blocks)
}

/// Directions of the cone of feasible motion at a type-A face: sum zero,
/// and each prefix union of blocks can only lose value.
pub fn tangent_cone_a(partition: &OrderedPartition) -> HCone {
    let n = partition.n();
    let blocks = partition.blocks();
    let equalities = vec![vec![Rat::one(); n]];
    let mut inequalities = Vec::new();
    let mut prefix = vec![Rat::zero(); n];
    for block in &blocks[..blocks.len().saturating_sub(1)] {
        for &i in block {
            prefix[i] = Rat::one();
        }
        inequalities.push(prefix.clone());
    }
    HCone::new(n, equalities, inequalities)
}

/// The normal cone at a type-A face: all linear functionals maximized there.
pub fn normal_cone_a(partition: &OrderedPartition) -> HCone {
    weyl_face_cone_a(partition)
}

/// Directions of feasible motion at a type-B face: every signed prefix of
/// the signed blocks can only lose (signed) value, and the zero block moves
/// freely.
pub fn tangent_cone_b(partition: &SignedOrderedPartition) -> HCone {
    let n = partition.n();
    let mut inequalities = Vec::new();
    let mut prefix = vec![Rat::zero(); n];
    for block in partition.blocks() {
        for &i in block {
            prefix[i] = if partition.sign(i) > 0 { Rat::one() } else { -Rat::one() };
        }
        inequalities.push(prefix.clone());
    }
    HCone::new(n, Vec::new(), inequalities)
}

/// The normal cone at a type-B face.
pub fn normal_cone_b(partition: &SignedOrderedPartition) -> HCone {
    weyl_face_cone_b(partition)
}

fn check_strictly_decreasing(values: &[Rat]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidArgument("value vector must be nonempty".into()));
    }
    if values.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidArgument(
            "values must be strictly decreasing".into(),
        ));
    }
    Ok(())
}

fn is_arithmetic(values: &[Rat]) -> bool {
    values.len() < 3
        || values
            .windows(3)
            .all(|w| &w[0] - &w[1] == &w[1] - &w[2])
}

/// The type-A permutohedron: the convex hull of all permutations of a
/// strictly decreasing vector. Lives in `R^n`, has dimension `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutohedronA {
    values: Vec<Rat>,
}

impl PermutohedronA {
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        check_strictly_decreasing(&values)?;
        Ok(PermutohedronA { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// Membership: same coordinate sum, and every partial sum of the `k`
    /// largest coordinates bounded by the `k` largest values (majorization).
    pub fn contains(&self, p: &[Rat]) -> bool {
        if p.len() != self.values.len() {
            return false;
        }
        let mut sorted = p.to_vec();
        sorted.sort_by(|a, b| b.cmp(a));
        let mut ps = Rat::zero();
        let mut vs = Rat::zero();
        for (a, b) in sorted.iter().zip(&self.values) {
            ps += a;
            vs += b;
            if ps > vs {
                return false;
            }
        }
        ps == vs
    }

    /// All vertices: the permutations of the value vector. Exponential in
    /// `n`; guarded for use on small instances.
    pub fn vertices(&self) -> Vec<Vec<Rat>> {
        let n = self.values.len();
        assert!(n <= 8, "vertex enumeration intended for n <= 8");
        (0..n)
            .permutations(n)
            .map(|perm| {
                // perm[i] = rank of the value placed at coordinate i
                let mut v = vec![Rat::zero(); n];
                for (i, &r) in perm.iter().enumerate() {
                    v[i] = self.values[r].clone();
                }
                v
            })
            .collect()
    }

    /// The vertices lying on the face of an ordered partition: the first
    /// block carries the largest values, arranged freely within each block.
    pub fn face_vertices(&self, partition: &OrderedPartition) -> Result<Vec<Vec<Rat>>> {
        if partition.n() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: partition.n() });
        }
        let mut verts = vec![vec![Rat::zero(); self.n()]];
        let mut next_value = 0usize;
        for block in partition.blocks() {
            let chunk: Vec<Rat> = self.values[next_value..next_value + block.len()].to_vec();
            next_value += block.len();
            let mut extended = Vec::new();
            for arrangement in chunk.iter().permutations(chunk.len()) {
                for v in &verts {
                    let mut v = v.clone();
                    for (&i, val) in block.iter().zip(&arrangement) {
                        v[i] = (*val).clone();
                    }
                    extended.push(v);
                }
            }
            verts = extended;
        }
        Ok(verts)
    }

    pub fn face_count(&self, j: usize) -> BigInt {
        face_count_a(self.n(), j)
    }

    pub fn face_vector(&self) -> Vec<BigInt> {
        face_vector_a(self.n())
    }

    /// The permutohedron is a Minkowski sum of segments exactly when the
    /// values form an arithmetic progression (every hexagonal 2-face is
    /// centrally symmetric exactly then).
    pub fn is_zonotope(&self) -> bool {
        is_arithmetic(&self.values)
    }

    /// Centered segment generators and center point, when the polytope is a
    /// zonotope: segments `±(b/2)(e_i - e_j)` over pairs, centered at the
    /// mean value times the all-ones vector.
    pub fn zonotope_generators(&self) -> Option<(Vec<Vec<Rat>>, Vec<Rat>)> {
        if !self.is_zonotope() {
            return None;
        }
        let n = self.n();
        let step = if n >= 2 {
            (&self.values[0] - &self.values[1]) / Rat::from_integer(2.into())
        } else {
            Rat::zero()
        };
        let mut gens = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut g = vec![Rat::zero(); n];
                g[i] = step.clone();
                g[j] = -step.clone();
                gens.push(g);
            }
        }
        let mean = (&self.values[0] + &self.values[n - 1]) / Rat::from_integer(2.into());
        Some((gens, vec![mean; n]))
    }
}

/// The type-B permutohedron: the convex hull of all signed permutations of
/// a strictly decreasing positive vector. Lives in `R^n`, full-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutohedronB {
    values: Vec<Rat>,
}

impl PermutohedronB {
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        check_strictly_decreasing(&values)?;
        if !values[values.len() - 1].is_positive() {
            return Err(Error::InvalidArgument("values must be strictly positive".into()));
        }
        Ok(PermutohedronB { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// Membership: the sorted absolute values are weakly dominated by the
    /// value vector in every prefix sum.
    pub fn contains(&self, p: &[Rat]) -> bool {
        if p.len() != self.values.len() {
            return false;
        }
        let mut sorted: Vec<Rat> = p.iter().map(Rat::abs).collect();
        sorted.sort_by(|a, b| b.cmp(a));
        let mut ps = Rat::zero();
        let mut vs = Rat::zero();
        for (a, b) in sorted.iter().zip(&self.values) {
            ps += a;
            vs += b;
            if ps > vs {
                return false;
            }
        }
        true
    }

    /// All vertices: signed permutations of the value vector.
    pub fn vertices(&self) -> Vec<Vec<Rat>> {
        let n = self.values.len();
        assert!(n <= 6, "vertex enumeration intended for n <= 6");
        let mut out = Vec::new();
        for perm in (0..n).permutations(n) {
            for mask in 0u32..(1 << n) {
                let mut v = vec![Rat::zero(); n];
                for (i, &r) in perm.iter().enumerate() {
                    let val = self.values[r].clone();
                    v[i] = if mask & (1 << i) != 0 { -val } else { val };
                }
                out.push(v);
            }
        }
        out
    }

    /// The vertices on the face of a signed partition: signed blocks carry
    /// the largest values with the partition's signs, the zero block takes
    /// the smallest values with free signs and free arrangement.
    pub fn face_vertices(&self, partition: &SignedOrderedPartition) -> Result<Vec<Vec<Rat>>> {
        if partition.n() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: partition.n() });
        }
        let mut verts = vec![vec![Rat::zero(); self.n()]];
        let mut next_value = 0usize;
        for block in partition.blocks() {
            let chunk: Vec<Rat> = self.values[next_value..next_value + block.len()].to_vec();
            next_value += block.len();
            let mut extended = Vec::new();
            for arrangement in chunk.iter().permutations(chunk.len()) {
                for v in &verts {
                    let mut v = v.clone();
                    for (&i, val) in block.iter().zip(&arrangement) {
                        v[i] = if partition.sign(i) > 0 {
                            (*val).clone()
                        } else {
                            -(*val).clone()
                        };
                    }
                    extended.push(v);
                }
            }
            verts = extended;
        }
        let zero_block = partition.zero_block();
        let chunk: Vec<Rat> = self.values[next_value..].to_vec();
        assert_eq!(chunk.len(), zero_block.len());
        let mut extended = Vec::new();
        for arrangement in chunk.iter().permutations(chunk.len()) {
            for mask in 0u32..(1 << zero_block.len()) {
                for v in &verts {
                    let mut v = v.clone();
                    for (bit, (&i, val)) in zero_block.iter().zip(&arrangement).enumerate() {
                        v[i] = if mask & (1 << bit) != 0 {
                            -(*val).clone()
                        } else {
                            (*val).clone()
                        };
                    }
                    extended.push(v);
                }
            }
        }
        Ok(extended)
    }

    pub fn face_count(&self, j: usize) -> BigInt {
        face_count_b(self.n(), j)
    }

    pub fn face_vector(&self) -> Vec<BigInt> {
        face_vector_b(self.n())
    }

    /// Zonotope exactly when the values are an arithmetic progression; the
    /// smallest value is free because the axis segments absorb it.
    pub fn is_zonotope(&self) -> bool {
        is_arithmetic(&self.values)
    }

    /// Centered segment generators when the polytope is a zonotope:
    /// `±(b/2)(e_i ± e_j)` over pairs with `b` the common difference, and
    /// `±a·e_i` on the axes with `a` the smallest value. Centered at the
    /// origin.
    pub fn zonotope_generators(&self) -> Option<Vec<Vec<Rat>>> {
        if !self.is_zonotope() {
            return None;
        }
        let n = self.n();
        let step = if n >= 2 {
            (&self.values[0] - &self.values[1]) / Rat::from_integer(2.into())
        } else {
            Rat::zero()
        };
        let mut gens = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut g = vec![Rat::zero(); n];
                g[i] = step.clone();
                g[j] = -step.clone();
                gens.push(g);
                let mut g = vec![Rat::zero(); n];
                g[i] = step.clone();
                g[j] = step.clone();
                gens.push(g);
            }
        }
        let a = self.values[n - 1].clone();
        for i in 0..n {
            let mut g = vec![Rat::zero(); n];
            g[i] = a.clone();
            gens.push(g);
        }
        Some(gens)
    }
}

/// Vertices of a Minkowski sum of centered segments, found by optimizing
/// over a family of directions that must be generic for the generators
/// (no direction orthogonal to any generator — asserted).
pub fn minkowski_vertices(
    gens: &[Vec<Rat>],
    center: &[Rat],
    directions: &[Vec<Rat>],
) -> Vec<Vec<Rat>> {
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for d in directions {
        let mut v = center.to_vec();
        for g in gens {
            let s = dot(d, g);
            assert!(!s.is_zero(), "direction not generic for the generators");
            if s.is_positive() {
                for (vi, gi) in v.iter_mut().zip(g) {
                    *vi = &*vi + gi;
                }
            } else {
                for (vi, gi) in v.iter_mut().zip(g) {
                    *vi = &*vi - gi;
                }
            }
        }
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Is the polygon with the given vertex set centrally symmetric? The center
/// must be the average of the vertices, and negation through it must
/// permute the vertex set.
pub fn centrally_symmetric(vertices: &[Vec<Rat>]) -> bool {
    assert!(!vertices.is_empty());
    let n = vertices[0].len();
    let count = Rat::from_integer(BigInt::from(vertices.len()));
    let mut center = vec![Rat::zero(); n];
    for v in vertices {
        for (c, x) in center.iter_mut().zip(v) {
            *c += x;
        }
    }
    for c in center.iter_mut() {
        *c = &*c / &count;
    }
    vertices.iter().all(|v| {
        let reflected: Vec<Rat> = center.iter().zip(v).map(|(c, x)| c + c - x).collect();
        vertices.contains(&reflected)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{cone_set_eq, dual_cone};
    use crate::linalg::{rat, ratio};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn rats(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn a(v: &[i64]) -> PermutohedronA {
        PermutohedronA::new(rats(v)).unwrap()
    }

    fn b(v: &[i64]) -> PermutohedronB {
        PermutohedronB::new(rats(v)).unwrap()
    }

    fn vertex_set(vs: Vec<Vec<Rat>>) -> BTreeSet<Vec<Rat>> {
        vs.into_iter().collect()
    }

    #[test]
    fn construction_validation() {
        assert!(PermutohedronA::new(rats(&[3, 2, 2])).is_err());
        assert!(PermutohedronA::new(rats(&[1, 2])).is_err());
        assert!(PermutohedronA::new(vec![]).is_err());
        assert!(PermutohedronA::new(rats(&[3, -1])).is_ok());
        assert!(PermutohedronB::new(rats(&[3, 0])).is_err());
        assert!(PermutohedronB::new(rats(&[3, -1])).is_err());
        assert!(PermutohedronB::new(rats(&[3, 1])).is_ok());
    }

    #[test]
    fn face_vectors_of_small_polytopes() {
        let f = |v: &[i64]| -> Vec<i64> { v.to_vec() };
        assert_eq!(face_vector_a(3), f(&[6, 6, 1]).iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
        assert_eq!(
            face_vector_a(4),
            [24, 36, 14, 1].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
        );
        assert_eq!(
            face_vector_b(2),
            [8, 8, 1].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
        );
        assert_eq!(
            face_vector_b(3),
            [48, 72, 26, 1].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
        );
        assert_eq!(
            face_vector_b(4),
            [384, 768, 464, 80, 1].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn euler_relation_holds() {
        for n in 1..=6 {
            let mut acc = BigInt::zero();
            for (j, f) in face_vector_a(n).iter().enumerate() {
                if j % 2 == 0 {
                    acc += f;
                } else {
                    acc -= f;
                }
            }
            assert_eq!(acc, BigInt::one(), "type A, n={n}");
            let mut acc = BigInt::zero();
            for (j, f) in face_vector_b(n).iter().enumerate() {
                if j % 2 == 0 {
                    acc += f;
                } else {
                    acc -= f;
                }
            }
            assert_eq!(acc, BigInt::one(), "type B, n={n}");
        }
    }

    #[test]
    fn enumerated_faces_match_counts() {
        for n in 1..=5usize {
            for j in 0..n {
                let count = faces_of_dim_a(n, j).count();
                assert_eq!(BigInt::from(count), face_count_a(n, j), "A n={n} j={j}");
            }
        }
        for n in 1..=4usize {
            for j in 0..=n {
                let count = faces_of_dim_b(n, j).count();
                assert_eq!(BigInt::from(count), face_count_b(n, j), "B n={n} j={j}");
            }
        }
    }

    #[test]
    fn membership_examples() {
        let p = a(&[3, 2, 1]);
        assert!(p.contains(&rats(&[3, 2, 1])));
        assert!(p.contains(&rats(&[2, 2, 2])));
        assert!(p.contains(&[ratio(5, 2), ratio(5, 2), rat(1)]));
        assert!(!p.contains(&rats(&[4, 1, 1])));
        assert!(!p.contains(&rats(&[3, 2, 2]))); // wrong sum
        assert!(!p.contains(&rats(&[3, 2])));

        let q = b(&[2, 1]);
        assert!(q.contains(&rats(&[0, 0])));
        assert!(q.contains(&rats(&[2, 1])));
        assert!(q.contains(&rats(&[-1, 2])));
        assert!(q.contains(&[ratio(3, 2), ratio(3, 2)]));
        assert!(!q.contains(&rats(&[2, 2])));
        assert!(!q.contains(&rats(&[3, 0])));
    }

    #[test]
    fn all_vertices_are_contained_and_extreme() {
        let p = a(&[3, 2, 1]);
        let verts = p.vertices();
        assert_eq!(verts.len(), 6);
        for v in &verts {
            assert!(p.contains(v));
            // pushing past a vertex along its own direction leaves the polytope
            let mut outside = v.clone();
            outside[0] = &outside[0] + &ratio(1, 10);
            outside[2] = &outside[2] - &ratio(1, 10);
            if v[0] == rat(3) {
                assert!(!p.contains(&outside));
            }
        }
        let q = b(&[2, 1]);
        assert_eq!(q.vertices().len(), 8);
        for v in q.vertices() {
            assert!(q.contains(&v));
        }
    }

    #[test]
    fn face_vertices_have_the_right_counts() {
        let p = a(&[3, 2, 1]);
        for j in 0..=2usize {
            for partition in faces_of_dim_a(3, j) {
                let verts = p.face_vertices(&partition).unwrap();
                let expect: usize = partition.blocks().iter().map(|b| factorial(b.len())).product::<BigInt>().try_into().unwrap();
                assert_eq!(verts.len(), expect);
                for v in &verts {
                    assert!(p.contains(v));
                }
            }
        }
        let q = b(&[2, 1]);
        for j in 0..=2usize {
            let mut union: BTreeSet<Vec<Rat>> = BTreeSet::new();
            for partition in faces_of_dim_b(2, j) {
                let verts = q.face_vertices(&partition).unwrap();
                let signed: usize = partition.blocks().iter().map(|b| factorial(b.len())).product::<BigInt>().try_into().unwrap();
                let zb = partition.zero_block().len();
                let zero: usize = (factorial(zb) << zb).try_into().unwrap();
                assert_eq!(verts.len(), signed * zero);
                for v in &verts {
                    assert!(q.contains(v));
                    union.insert(v.clone());
                }
            }
            // every vertex of the polytope lies on some j-face
            assert_eq!(union, vertex_set(q.vertices()), "j={j}");
        }
    }

    #[test]
    fn top_face_vertices_are_all_vertices() {
        let p = a(&[3, 2, 1]);
        let top = OrderedPartition::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(vertex_set(p.face_vertices(&top).unwrap()), vertex_set(p.vertices()));
        let q = b(&[2, 1]);
        let top = SignedOrderedPartition::new(2, vec![], vec![0, 1], vec![0, 0]).unwrap();
        assert_eq!(vertex_set(q.face_vertices(&top).unwrap()), vertex_set(q.vertices()));
    }

    #[test]
    fn tangent_cone_examples() {
        // vertex (3,2,1): identity partition
        let vertex = OrderedPartition::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        let t = tangent_cone_a(&vertex);
        assert_eq!(t.dim(), 2); // inside the sum-zero hyperplane
        assert!(t.contains(&rats(&[-1, 1, 0]))); // toward the adjacent vertex
        assert!(t.contains(&rats(&[-1, 0, 1])));
        assert!(!t.contains(&rats(&[1, -1, 0]))); // backwards is outside

        let vertex_b = SignedOrderedPartition::new(2, vec![vec![0], vec![1]], vec![], vec![1, 1]).unwrap();
        let t = tangent_cone_b(&vertex_b);
        assert_eq!(t.dim(), 2);
        assert!(t.contains(&rats(&[-1, 0])));
        assert!(t.contains(&rats(&[0, -1])));
        assert!(t.contains(&rats(&[-1, 1]))); // x_0 loses more than x_1 gains
        assert!(!t.contains(&rats(&[1, 0])));
    }

    #[test]
    fn tangent_cones_hold_edge_directions() {
        // on every vertex of the type-A polytope, directions to all other
        // vertices lie in the tangent cone
        let p = a(&[4, 2, 1]);
        for partition in faces_of_dim_a(3, 0) {
            let t = tangent_cone_a(&partition);
            let v = &p.face_vertices(&partition).unwrap()[0];
            for w in p.vertices() {
                let dir: Vec<Rat> = w.iter().zip(v).map(|(a, b)| a - b).collect();
                assert!(t.contains(&dir), "direction {dir:?} escapes the cone");
            }
        }
    }

    #[test]
    fn normal_cone_is_dual_of_tangent_cone_type_a() {
        for n in 2..=4usize {
            for j in 0..n {
                for partition in faces_of_dim_a(n, j) {
                    let dual = dual_cone(&tangent_cone_a(&partition)).unwrap();
                    assert!(
                        cone_set_eq(&dual, &normal_cone_a(&partition)),
                        "n={n} j={j} partition={partition:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn normal_cone_is_dual_of_tangent_cone_type_b() {
        for n in 2..=3usize {
            for j in 0..=n {
                for partition in faces_of_dim_b(n, j) {
                    let dual = dual_cone(&tangent_cone_b(&partition)).unwrap();
                    assert!(
                        cone_set_eq(&dual, &normal_cone_b(&partition)),
                        "n={n} j={j} partition={partition:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn zonotope_detection() {
        assert!(a(&[3, 2, 1]).is_zonotope());
        assert!(a(&[7, 4, 1]).is_zonotope());
        assert!(!a(&[4, 2, 1]).is_zonotope());
        assert!(a(&[5, 2]).is_zonotope()); // segments always
        assert!(b(&[5, 3, 1]).is_zonotope());
        assert!(b(&[3, 2, 1]).is_zonotope());
        assert!(!b(&[4, 2, 1]).is_zonotope());
        assert!(b(&[1]).is_zonotope());
        assert!(a(&[4, 2, 1]).zonotope_generators().is_none());
    }

    #[test]
    fn zonotope_generators_reproduce_vertices_type_a() {
        let p = a(&[3, 2, 1]);
        let (gens, center) = p.zonotope_generators().unwrap();
        assert_eq!(gens.len(), 3);
        let dirs: Vec<Vec<Rat>> = a(&[3, 2, 1]).vertices(); // generic directions
        let got = vertex_set(minkowski_vertices(&gens, &center, &dirs));
        assert_eq!(got, vertex_set(p.vertices()));
    }

    #[test]
    fn zonotope_generators_reproduce_vertices_type_b() {
        for values in [vec![3i64, 2, 1], vec![5, 3, 1], vec![2, 1]] {
            let p = b(&values);
            let gens = p.zonotope_generators().unwrap();
            assert_eq!(gens.len(), p.n() * p.n());
            let dirs = b(&(1..=values.len() as i64).rev().collect::<Vec<_>>()).vertices();
            let center = vec![Rat::zero(); p.n()];
            let got = vertex_set(minkowski_vertices(&gens, &center, &dirs));
            assert_eq!(got, vertex_set(p.vertices()), "values {values:?}");
        }
    }

    #[test]
    fn two_face_symmetry_matches_zonotope_test() {
        // hexagonal 2-faces are centrally symmetric exactly when the polytope
        // is a zonotope; quadrilateral 2-faces always are
        for values in [vec![4i64, 3, 2, 1], vec![5, 3, 2, 1], vec![9, 6, 3, 1]] {
            let p = a(&values);
            let mut all_symmetric = true;
            for partition in faces_of_dim_a(4, 2) {
                let verts = p.face_vertices(&partition).unwrap();
                if verts.len() == 4 {
                    assert!(centrally_symmetric(&verts));
                } else {
                    assert_eq!(verts.len(), 6);
                    all_symmetric &= centrally_symmetric(&verts);
                }
            }
            assert_eq!(all_symmetric, p.is_zonotope(), "values {values:?}");
        }
        for values in [vec![3i64, 2, 1], vec![4, 2, 1], vec![5, 3, 1]] {
            let p = b(&values);
            let mut all_symmetric = true;
            for partition in faces_of_dim_b(3, 2) {
                let verts = p.face_vertices(&partition).unwrap();
                all_symmetric &= centrally_symmetric(&verts);
            }
            assert_eq!(all_symmetric, p.is_zonotope(), "values {values:?}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Convex combinations of vertices stay inside, and vertex
        /// perturbations outward leave.
        #[test]
        fn membership_is_convex(
            raw in proptest::collection::vec(1i64..=9, 3),
            num in 0i64..=4,
        ) {
            let mut values: Vec<i64> = raw;
            values.sort_unstable_by(|x, y| y.cmp(x));
            values.dedup();
            if values.len() < 2 {
                return Ok(());
            }
            let p = PermutohedronA::new(rats(&values)).unwrap();
            let verts = p.vertices();
            // midpoint of first and last vertex, weighted num/4
            let w = ratio(num, 4);
            let one_minus = rat(1) - &w;
            let mix: Vec<Rat> = verts[0]
                .iter()
                .zip(verts.last().unwrap())
                .map(|(u, v)| u * &w + v * &one_minus)
                .collect();
            prop_assert!(p.contains(&mix));
            // inflating the polytope's top coordinate breaks membership
            let mut outside = verts[0].clone();
            outside[0] = &outside[0] + &rat(1);
            prop_assert!(!p.contains(&outside));
        }
    }
}
