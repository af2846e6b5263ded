//! Angle sums over the faces of a polytope: Grassmann angles and conic
//! intrinsic volumes of tangent cones, summed over all faces of a fixed
//! dimension.
//!
//! Individual angles are transcendental, but the sums over a face dimension
//! are integers with closed forms in the same (signed) Stirling numbers and
//! characteristic-polynomial coefficients as the projection face counts:
//! the Grassmann-angle sum at index `d` is exactly the number of `j`-faces
//! lost under a generic projection to `d` dimensions. The two families of
//! sums are linked by the classical spherical Crofton relations, which
//! `crofton_check` verifies on a computed table; the relations genuinely
//! fail on the top face, whose tangent cone is a linear subspace, so that
//! row is excluded and handled by the subspace rule instead.
//!
//! `grassmann_mc_estimate` estimates a single cone's Grassmann angle by
//! sampling random subspaces and testing intersection exactly, giving a
//! route to the angles that bypasses every closed form.

use crate::combinatorics::{stirling1, stirling1_b, stirling2, stirling2_b};
use crate::cones::{intersects_nontrivially, HCone};
use crate::linalg::{rat, Rat, RationalMatrix, Subspace};
use crate::projection::{face_count, PolytopeSpec};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn validate_angle_query(spec: &PolytopeSpec, j: usize, d: usize) -> Result<()> {
    spec.validate()?;
    let p = spec.polytope_dim();
    if j > p {
        return Err(Error::InvalidArgument(format!(
            "face dimension must be in 0..={p}, got {j}"
        )));
    }
    let n = spec.ambient_dim();
    if d > n {
        return Err(Error::InvalidArgument(format!(
            "angle index must be in 0..={n}, got {d}"
        )));
    }
    Ok(())
}

/// Sum of the `d`-th conic intrinsic volume of the tangent cone over all
/// `j`-faces. Always a (nonnegative) integer despite the individual
/// summands being irrational angles.
pub fn intrinsic_volume_sum(spec: &PolytopeSpec, j: usize, d: usize) -> Result<BigInt> {
    validate_angle_query(spec, j, d)?;
    let n = spec.ambient_dim();
    Ok(match spec {
        PolytopeSpec::TypeA(_) => {
            let m = n - j;
            stirling2(n, m) * stirling1(m, n - d)
        }
        PolytopeSpec::TypeB(_) => {
            let m = n - j;
            stirling2_b(n, m) * stirling1_b(m, n - d)
        }
        PolytopeSpec::Belt(arr) => {
            let target_dim = n - j;
            let mut total = BigInt::zero();
            for flat in arr.flat_lattice().flats() {
                if flat.dim() != target_dim {
                    continue;
                }
                let poly = arr.restricted_characteristic_polynomial(flat)?;
                let coeffs = poly.unsigned_coefficients();
                if n - d < coeffs.len() {
                    total += &coeffs[n - d];
                }
            }
            total
        }
    })
}

/// Sum of the Grassmann angle at index `d` of the tangent cone over all
/// `j`-faces: the probability that a uniformly random `(n−d)`-dimensional
/// subspace meets the cone beyond the origin, summed over faces. Equals
/// the number of `j`-faces lost under a generic projection to `d`
/// dimensions whenever `j < d`.
pub fn grassmann_sum(spec: &PolytopeSpec, j: usize, d: usize) -> Result<BigInt> {
    validate_angle_query(spec, j, d)?;
    let n = spec.ambient_dim();
    let p = spec.polytope_dim();
    if j == p {
        // the sole top face's tangent cone is the polytope's direction
        // space, a subspace of dimension p: a generic (n−d)-subspace meets
        // it nontrivially exactly when the dimensions force an intersection
        return Ok(if d < p { BigInt::one() } else { BigInt::zero() });
    }
    Ok(match spec {
        PolytopeSpec::TypeA(_) => {
            let m = n - j;
            let mut sum = BigInt::zero();
            let mut k = n as i64 - d as i64 - 1;
            while k >= 0 {
                sum += stirling1(m, k as usize);
                k -= 2;
            }
            BigInt::from(2) * stirling2(n, m) * sum
        }
        PolytopeSpec::TypeB(_) => {
            let m = n - j;
            let mut sum = BigInt::zero();
            let mut k = n as i64 - d as i64 - 1;
            while k >= 0 {
                sum += stirling1_b(m, k as usize);
                k -= 2;
            }
            BigInt::from(2) * stirling2_b(n, m) * sum
        }
        PolytopeSpec::Belt(arr) => {
            let target_dim = n - j;
            let mut total = BigInt::zero();
            for flat in arr.flat_lattice().flats() {
                if flat.dim() != target_dim {
                    continue;
                }
                let poly = arr.restricted_characteristic_polynomial(flat)?;
                let coeffs = poly.unsigned_coefficients();
                let mut k = n as i64 - d as i64 - 1;
                while k >= 0 {
                    if (k as usize) < coeffs.len() {
                        total += &coeffs[k as usize];
                    }
                    k -= 2;
                }
            }
            BigInt::from(2) * total
        }
    })
}

/// One face dimension's worth of angle sums: both families of sums indexed
/// by `d = 0..=ambient_dim`, alongside the plain face count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleSumRow {
    pub j: usize,
    pub face_count: BigInt,
    pub intrinsic_volume_sums: Vec<BigInt>,
    pub grassmann_sums: Vec<BigInt>,
}

/// The full grid of angle sums for a polytope, one row per face dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleSumTable {
    pub ambient_dim: usize,
    pub polytope_dim: usize,
    pub rows: Vec<AngleSumRow>,
}

pub fn angle_sum_table(spec: &PolytopeSpec) -> Result<AngleSumTable> {
    spec.validate()?;
    let n = spec.ambient_dim();
    let p = spec.polytope_dim();
    let mut rows = Vec::with_capacity(p + 1);
    for j in 0..=p {
        let mut intrinsic_volume_sums = Vec::with_capacity(n + 1);
        let mut grassmann_sums = Vec::with_capacity(n + 1);
        for d in 0..=n {
            intrinsic_volume_sums.push(intrinsic_volume_sum(spec, j, d)?);
            grassmann_sums.push(grassmann_sum(spec, j, d)?);
        }
        rows.push(AngleSumRow { j, face_count: face_count(spec, j)?, intrinsic_volume_sums, grassmann_sums });
    }
    Ok(AngleSumTable { ambient_dim: n, polytope_dim: p, rows })
}

/// Verifies the spherical Crofton relations on a computed table, row by
/// row: the Grassmann sum at `d` must be twice the odd tail of the
/// intrinsic-volume sums above `d`, and each intrinsic-volume sum must be
/// half the difference of its neighboring Grassmann sums (reading the
/// `d = −1` entry as the face count and entries beyond the ambient
/// dimension as zero). The top face is skipped: its tangent cone is a
/// subspace, for which both relations genuinely fail.
pub fn crofton_check(table: &AngleSumTable) -> Result<()> {
    let n = table.ambient_dim;
    for row in &table.rows {
        if row.j == table.polytope_dim {
            continue;
        }
        for d in 0..=n {
            let mut tail = BigInt::zero();
            let mut k = d + 1;
            while k <= n {
                tail += &row.intrinsic_volume_sums[k];
                k += 2;
            }
            let expected = BigInt::from(2) * tail;
            if row.grassmann_sums[d] != expected {
                return Err(Error::State(format!(
                    "row j={} fails the odd-tail relation at d={d}: Grassmann sum {} vs {expected}",
                    row.j, row.grassmann_sums[d]
                )));
            }
            let lower = if d == 0 { &row.face_count } else { &row.grassmann_sums[d - 1] };
            let upper = if d + 1 > n { BigInt::zero() } else { row.grassmann_sums[d + 1].clone() };
            if BigInt::from(2) * &row.intrinsic_volume_sums[d] != lower - upper {
                return Err(Error::State(format!(
                    "row j={} fails the half-difference relation at d={d}: volume sum {}",
                    row.j, row.intrinsic_volume_sums[d]
                )));
            }
        }
    }
    Ok(())
}

/// Monte Carlo estimate of one cone's Grassmann angle.
#[derive(Clone, Debug)]
pub struct GrassmannEstimate {
    /// Fraction of sampled `(n−d)`-subspaces meeting the cone nontrivially.
    pub estimate: f64,
    /// Binomial standard error `√(p̂(1−p̂)/N)`.
    pub std_error: f64,
    pub samples: u64,
    pub hits: u64,
    /// Set when the cone is a linear subspace, where the angle degenerates
    /// to 0 or 1 by pure dimension count.
    pub cone_is_subspace: bool,
}

/// Estimates the Grassmann angle at index `d` of a cone by sampling random
/// `(n−d)`-dimensional subspaces (row spaces of integer matrices drawn from
/// a sign- and coordinate-symmetric distribution) and testing each
/// intersection exactly. Deterministic for a fixed seed; each sample uses
/// its own stream of the generator, so counts are independent of ordering.
pub fn grassmann_mc_estimate(
    cone: &HCone,
    d: usize,
    samples: u64,
    seed: u64,
) -> Result<GrassmannEstimate> {
    let n = cone.ambient_dim();
    if d > n {
        return Err(Error::InvalidArgument(format!(
            "angle index must be in 0..={n}, got {d}"
        )));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let rows = n - d;
    // each sample owns a generator stream keyed by its index, so the count
    // is independent of evaluation order and worker count
    let hits: u64 = (0..samples)
        .into_par_iter()
        .map(|i| {
            let subspace = random_subspace(n, rows, seed, i)?;
            Ok(u64::from(intersects_nontrivially(cone, &subspace)))
        })
        .sum::<Result<u64>>()?;
    let estimate = hits as f64 / samples as f64;
    let std_error = (estimate * (1.0 - estimate) / samples as f64).sqrt();
    Ok(GrassmannEstimate {
        estimate,
        std_error,
        samples,
        hits,
        cone_is_subspace: cone.is_subspace(),
    })
}

/// Row space of a random full-rank `rows × n` integer matrix with nonzero
/// entries symmetric under sign flips and coordinate permutations — the
/// symmetry that makes hit probabilities exact for cones of fans invariant
/// under those symmetries. Rank-deficient draws (vanishingly rare) are
/// rejected and redrawn within the sample's own stream.
fn random_subspace(n: usize, rows: usize, seed: u64, index: u64) -> Result<Subspace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    for _ in 0..64 {
        let drawn: Vec<Vec<Rat>> = (0..rows)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let mut v: i64 = 0;
                        while v == 0 {
                            v = rng.gen_range(-1_000_000..=1_000_000);
                        }
                        rat(v)
                    })
                    .collect()
            })
            .collect();
        let subspace = Subspace::row_space(&RationalMatrix::from_rows(n, &drawn));
        if subspace.dim() == rows {
            return Ok(subspace);
        }
    }
    Err(Error::State(
        "could not draw a full-rank direction matrix after 64 attempts".into(),
    ))
}
