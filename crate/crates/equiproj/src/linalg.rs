//! Exact rational linear algebra: matrices, ranks, kernels and subspaces.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination on integer-cleared
//! rows, which keeps intermediate entries polynomially bounded; kernels and
//! canonical bases go through rational reduced row echelon form. Subspaces are
//! stored as explicit bases, never as constraint systems, so emptiness versus
//! zero-dimensionality never becomes ambiguous.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::str::FromStr;

/// Arbitrary-precision rational scalar used throughout the crate.
///
/// Values are always in lowest terms with a positive denominator; the
/// underlying representation canonicalizes on every construction.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Shorthand for the rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a rational token: either `p/q` or a plain integer.
pub fn parse_rat(token: &str) -> Result<Rat> {
    Rat::from_str(token.trim()).map_err(|e| Error::Parse(format!("bad rational {token:?}: {e}")))
}

/// Exact dot product of two equally long vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot of unequal lengths");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// True when every entry is zero.
pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

/// Dense rational matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    /// Builds a matrix from row-major entries; `entries.len()` must equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        RationalMatrix { rows, cols, entries }
    }

    /// Builds a matrix from a list of equally long rows. An empty list yields a 0×`cols` matrix.
    pub fn from_rows(cols: usize, rows: &[Vec<Rat>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
            entries.extend(r.iter().cloned());
        }
        RationalMatrix { rows: rows.len(), cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Exact rank via fraction-free Bareiss elimination.
    ///
    /// Rows are first scaled by the LCM of their denominators so that the
    /// elimination runs entirely over integers; every interior division is
    /// exact by the Sylvester minor identity.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|r| clear_denominators(self.row(r))).collect();
        let (nr, nc) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut prev = BigInt::one();
        for col in 0..nc {
            if rank == nr {
                break;
            }
            let Some(p) = (rank..nr).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..nr {
                for c in col + 1..nc {
                    let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                    m[r][c] = num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            for c2 in 0..m.cols {
                let tmp = m.at(p, c2).clone();
                *m.at_mut(p, c2) = m.at(r, c2).clone();
                *m.at_mut(r, c2) = tmp;
            }
            let inv = m.at(r, c).clone();
            for c2 in c..m.cols {
                let v = m.at(r, c2).clone() / &inv;
                *m.at_mut(r, c2) = v;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for c2 in c..m.cols {
                        let v = m.at(i, c2).clone() - &f * m.at(r, c2);
                        *m.at_mut(i, c2) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the kernel `{v : M v = 0}`, one vector per free column of the RREF.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (red, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut next_pivot = 0usize;
        for c in 0..self.cols {
            if next_pivot < pivots.len() && pivots[next_pivot] == c {
                next_pivot += 1;
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[c] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -red.at(row, c).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> Vec<Vec<Rat>> {
        let (red, pivots) = self.rref();
        (0..pivots.len()).map(|r| red.row(r).to_vec()).collect()
    }

    /// Parses the plain-text matrix format: two leading integers `rows cols`,
    /// then `rows * cols` whitespace-separated rational tokens in row-major order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let rows: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing row count".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad row count: {e}")))?;
        let cols: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing column count".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad column count: {e}")))?;
        let mut entries = Vec::with_capacity(rows * cols);
        for t in tokens {
            entries.push(parse_rat(t)?);
        }
        if entries.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} entries, found {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    /// Renders the matrix in the same plain-text format `parse` accepts.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Scales a rational row by the LCM of its denominators, yielding integers.
fn clear_denominators(row: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Linear subspace of `R^n`, stored as an explicit basis.
///
/// The basis is validated to be linearly independent at construction, so
/// `dim` is always exactly `basis.len()`; the zero subspace has an empty basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    /// Builds a subspace from an independent spanning set.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Rat>>) -> Result<Self> {
        for v in &basis {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
        }
        let m = RationalMatrix::from_rows(ambient_dim, &basis);
        if m.rank() != basis.len() {
            return Err(Error::InvalidArgument("basis vectors are linearly dependent".into()));
        }
        Ok(Subspace { ambient_dim, basis })
    }

    /// The span of the rows of `m`, with a canonical (RREF) basis.
    pub fn row_space(m: &RationalMatrix) -> Self {
        Subspace { ambient_dim: m.cols(), basis: m.row_space_basis() }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::row_space(&RationalMatrix::identity(ambient_dim))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Membership test by a rank comparison.
    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length does not match ambient dimension");
        if is_zero_vec(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        RationalMatrix::from_rows(self.ambient_dim, &rows).rank() == self.basis.len()
    }

    /// Matrix whose rows are the basis vectors.
    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.ambient_dim, &self.basis)
    }
}

/// Exact rank of a rational matrix (convenience wrapper).
pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

/// Kernel of `m` as a subspace of `R^cols`.
pub fn kernel(m: &RationalMatrix) -> Subspace {
    Subspace { ambient_dim: m.cols(), basis: m.kernel_basis() }
}

/// Orthogonal complement with respect to the standard inner product.
pub fn orthogonal_complement(s: &Subspace) -> Subspace {
    kernel(&s.basis_matrix())
}

/// Exact dimension of `a ∩ b`, via the kernel of the stacked orthogonal-constraint system.
pub fn intersection_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim(), found: b.ambient_dim() });
    }
    let n = a.ambient_dim();
    let mut constraints = orthogonal_complement(a).basis.clone();
    constraints.extend(orthogonal_complement(b).basis.clone());
    Ok(n - RationalMatrix::from_rows(n, &constraints).rank())
}

/// Deterministic random matrix with integer entries in `[-magnitude, magnitude]`.
///
/// The generator is a seeded ChaCha stream, so a fixed `(shape, seed, magnitude)`
/// always reproduces the same matrix on every platform.
pub fn random_rational_matrix(rows: usize, cols: usize, seed: u64, magnitude: i64) -> RationalMatrix {
    assert!(magnitude >= 1, "magnitude must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..rows * cols).map(|_| rat(rng.gen_range(-magnitude..=magnitude))).collect();
    RationalMatrix { rows, cols, entries }
}
