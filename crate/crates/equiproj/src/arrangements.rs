//! Central hyperplane arrangements: flat lattices, characteristic
//! polynomials, restrictions, and chamber enumeration.
//!
//! An arrangement is a finite set of linear hyperplanes through the origin,
//! each stored by a normal vector scaled so its first nonzero entry is one
//! (a hyperplane is unsigned, so this canonical form also detects duplicate
//! planes). The characteristic polynomial is computed by Möbius inversion
//! over the intersection lattice; an independent subset-rank expansion is
//! available as a cross-check for small arrangements.

use crate::cones::HCone;
use crate::linalg::{dot, kernel, parse_rat, Rat, RationalMatrix, Subspace};
use crate::simplex::{is_feasible, Constraint};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

/// A central hyperplane arrangement given by canonicalized normal vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    ambient_dim: usize,
    normals: Vec<Vec<Rat>>,
}

/// Scale a normal so its first nonzero entry is exactly one. Two normals
/// describe the same hyperplane exactly when their canonical forms agree.
fn canonical_normal(v: &[Rat]) -> Option<Vec<Rat>> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    Some(v.iter().map(|x| x / &lead).collect())
}

impl Arrangement {
    /// Builds an arrangement from explicit normals. Zero rows and duplicate
    /// hyperplanes (parallel normals) are rejected.
    pub fn new(ambient_dim: usize, normals: Vec<Vec<Rat>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidArgument(
                "arrangement ambient dimension must be at least 1".into(),
            ));
        }
        let mut canon: Vec<Vec<Rat>> = Vec::with_capacity(normals.len());
        for (i, row) in normals.iter().enumerate() {
            if row.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: row.len() });
            }
            let Some(c) = canonical_normal(row) else {
                return Err(Error::InvalidArgument(format!(
                    "hyperplane {} has a zero normal vector",
                    i + 1
                )));
            };
            if canon.contains(&c) {
                return Err(Error::InvalidArgument(format!(
                    "hyperplane {} duplicates an earlier hyperplane",
                    i + 1
                )));
            }
            canon.push(c);
        }
        Ok(Arrangement { ambient_dim, normals: canon })
    }

    /// The arrangement of all pairwise-difference hyperplanes `x_i = x_j` in
    /// `R^n`. Its chambers are the `n!` orderings of the coordinates.
    pub fn braid(n: usize) -> Self {
        assert!(n >= 1, "braid arrangement needs n >= 1");
        let mut normals = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut row = vec![Rat::zero(); n];
                row[i] = Rat::one();
                row[j] = -Rat::one();
                normals.push(row);
            }
        }
        Arrangement::new(n, normals).expect("braid normals are valid")
    }

    /// The signed-permutation arrangement: `x_i = x_j`, `x_i = -x_j`
    /// (`i < j`) and `x_i = 0`. Its chambers are the `2^n n!` signed
    /// orderings.
    pub fn type_b(n: usize) -> Self {
        assert!(n >= 1, "signed arrangement needs n >= 1");
        let mut normals = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut row = vec![Rat::zero(); n];
                row[i] = Rat::one();
                row[j] = -Rat::one();
                normals.push(row);
                let mut row = vec![Rat::zero(); n];
                row[i] = Rat::one();
                row[j] = Rat::one();
                normals.push(row);
            }
        }
        for i in 0..n {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            normals.push(row);
        }
        Arrangement::new(n, normals).expect("signed normals are valid")
    }

    /// The coordinate arrangement `x_i = 0`; its chambers are the `2^n`
    /// orthants and its zonotope is a cube.
    pub fn boolean(n: usize) -> Self {
        assert!(n >= 1, "coordinate arrangement needs n >= 1");
        let normals = (0..n)
            .map(|i| {
                let mut row = vec![Rat::zero(); n];
                row[i] = Rat::one();
                row
            })
            .collect();
        Arrangement::new(n, normals).expect("coordinate normals are valid")
    }

    /// Builds the arrangement of hyperplanes orthogonal to a list of segment
    /// generators: zero generators are skipped and parallel generators are
    /// merged, since they define the same hyperplane.
    pub fn from_generators(ambient_dim: usize, generators: &[Vec<Rat>]) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidArgument(
                "arrangement ambient dimension must be at least 1".into(),
            ));
        }
        let mut canon: Vec<Vec<Rat>> = Vec::new();
        for row in generators {
            if row.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: row.len() });
            }
            if let Some(c) = canonical_normal(row) {
                if !canon.contains(&c) {
                    canon.push(c);
                }
            }
        }
        Ok(Arrangement { ambient_dim, normals: canon })
    }

    /// Parses the arrangement file format: a header line `dim n` giving the
    /// ambient dimension and the number of hyperplanes, followed by one
    /// normal vector per line as rational tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let mut header = |what: &str| -> Result<usize> {
            tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("missing {what} in arrangement header")))?
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid {what} in arrangement header")))
        };
        let dim = header("dimension")?;
        let count = header("hyperplane count")?;
        if dim == 0 {
            return Err(Error::Parse("arrangement dimension must be at least 1".into()));
        }
        let mut normals = Vec::with_capacity(count);
        for i in 0..count {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                let tok = tokens.next().ok_or_else(|| {
                    Error::Parse(format!(
                        "hyperplane {}: expected {} entries, found {}",
                        i + 1,
                        dim,
                        j
                    ))
                })?;
                row.push(parse_rat(tok)?);
            }
            normals.push(row);
        }
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse(format!("unexpected trailing token {extra:?}")));
        }
        Arrangement::new(dim, normals).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Renders in the same format [`Arrangement::parse`] accepts.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.ambient_dim, self.normals.len());
        for row in &self.normals {
            let words: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{}", words.join(" "));
        }
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.normals.len()
    }

    pub fn normals(&self) -> &[Vec<Rat>] {
        &self.normals
    }

    /// Rank of the set of normals; the arrangement is essential when this
    /// equals the ambient dimension.
    pub fn rank(&self) -> usize {
        crate::linalg::rank(&RationalMatrix::from_rows(self.ambient_dim, &self.normals))
    }

    /// The arrangement with hyperplane `h` removed.
    pub fn delete(&self, h: usize) -> Arrangement {
        assert!(h < self.normals.len(), "no hyperplane {h}");
        let normals = self
            .normals
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != h)
            .map(|(_, v)| v.clone())
            .collect();
        Arrangement { ambient_dim: self.ambient_dim, normals }
    }

    /// Restriction to a subspace, written in coordinates on that subspace:
    /// each hyperplane not containing the subspace meets it in a hyperplane
    /// of the subspace, and hyperplanes that become parallel there merge.
    pub fn restriction(&self, s: &Subspace) -> Result<Arrangement> {
        if s.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: s.ambient_dim(),
            });
        }
        if s.dim() == 0 {
            return Err(Error::InvalidArgument(
                "cannot restrict an arrangement to the zero subspace".into(),
            ));
        }
        let pulled: Vec<Vec<Rat>> = self
            .normals
            .iter()
            .map(|nm| s.basis().iter().map(|b| dot(nm, b)).collect())
            .collect();
        Arrangement::from_generators(s.dim(), &pulled)
    }

    /// The intersection lattice: every subspace arising as an intersection
    /// of hyperplanes, including the whole space as the empty intersection.
    /// Flats are listed by decreasing dimension and, within a dimension, in
    /// a deterministic canonical order.
    pub fn flat_lattice(&self) -> FlatLattice {
        let n = self.ambient_dim;
        let full = Flat {
            subspace: Subspace::full(n),
            normal_span: Subspace::zero(n),
            generators: Vec::new(),
        };
        let mut flats = vec![full];
        let mut frontier: Vec<usize> = vec![0];
        while !frontier.is_empty() {
            let mut level: Vec<Flat> = Vec::new();
            for &fi in &frontier {
                let flat = &flats[fi];
                for (h, normal) in self.normals.iter().enumerate() {
                    if flat.generators.binary_search(&h).is_ok() {
                        continue;
                    }
                    let mut rows = flat.normal_span.basis().to_vec();
                    rows.push(normal.clone());
                    let span = Subspace::row_space(&RationalMatrix::from_rows(n, &rows));
                    debug_assert_eq!(span.dim(), flat.normal_span.dim() + 1);
                    if level.iter().any(|f| f.normal_span.basis() == span.basis()) {
                        continue;
                    }
                    let generators: Vec<usize> = self
                        .normals
                        .iter()
                        .enumerate()
                        .filter(|(_, nm)| span.contains_vector(nm))
                        .map(|(i, _)| i)
                        .collect();
                    let subspace = kernel(&span.basis_matrix());
                    level.push(Flat { subspace, normal_span: span, generators });
                }
            }
            level.sort_by(|a, b| a.normal_span.basis().cmp(b.normal_span.basis()));
            frontier = (flats.len()..flats.len() + level.len()).collect();
            flats.extend(level);
        }
        FlatLattice { flats }
    }

    /// Characteristic polynomial via Möbius inversion over the flat lattice.
    pub fn characteristic_polynomial(&self) -> CharPoly {
        let lattice = self.flat_lattice();
        let mu = lattice.moebius();
        let mut signed = vec![BigInt::zero(); self.ambient_dim + 1];
        for (flat, m) in lattice.flats().iter().zip(&mu) {
            signed[flat.dim()] += m;
        }
        CharPoly::from_signed(signed)
    }

    /// Characteristic polynomial of the arrangement restricted to a flat,
    /// covering the degenerate flats the chart construction cannot express:
    /// the full ambient space (the arrangement itself) and a point (the
    /// empty product, the constant 1).
    pub fn restricted_characteristic_polynomial(&self, flat: &Flat) -> Result<CharPoly> {
        if flat.dim() == self.ambient_dim {
            Ok(self.characteristic_polynomial())
        } else if flat.dim() == 0 {
            Ok(CharPoly { a: vec![BigInt::one()] })
        } else {
            Ok(self.restriction(flat.subspace())?.characteristic_polynomial())
        }
    }

    /// Characteristic polynomial via the subset-rank expansion
    /// `Σ_S (−1)^{|S|} t^{n − rank S}` over all subsets of hyperplanes.
    /// Exponential in the number of hyperplanes, so limited to 16; used as
    /// an independent cross-check of the lattice route.
    pub fn characteristic_polynomial_whitney(&self) -> Result<CharPoly> {
        let m = self.normals.len();
        if m > 16 {
            return Err(Error::Unsupported(format!(
                "subset expansion supports at most 16 hyperplanes, got {m}"
            )));
        }
        let n = self.ambient_dim;
        let mut signed = vec![BigInt::zero(); n + 1];
        // depth-first over subsets, carrying an echelon basis of the chosen
        // normals so each subset's rank is incremental
        struct Walker<'a> {
            normals: &'a [Vec<Rat>],
            basis: Vec<(usize, Vec<Rat>)>, // (leading column, reduced row)
            signed: &'a mut [BigInt],
            n: usize,
        }
        impl Walker<'_> {
            fn reduce(&self, row: &[Rat]) -> Option<(usize, Vec<Rat>)> {
                let mut row = row.to_vec();
                for (lead, basis_row) in &self.basis {
                    if !row[*lead].is_zero() {
                        let f = row[*lead].clone();
                        for (x, b) in row.iter_mut().zip(basis_row) {
                            if !b.is_zero() {
                                *x = &*x - &f * b;
                            }
                        }
                    }
                }
                let lead = row.iter().position(|x| !x.is_zero())?;
                let f = row[lead].clone();
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x = &*x / &f;
                    }
                }
                Some((lead, row))
            }

            fn walk(&mut self, idx: usize, odd: bool) {
                if idx == self.normals.len() {
                    let k = self.n - self.basis.len();
                    if odd {
                        self.signed[k] -= 1;
                    } else {
                        self.signed[k] += 1;
                    }
                    return;
                }
                self.walk(idx + 1, odd);
                match self.reduce(&self.normals[idx]) {
                    Some(entry) => {
                        self.basis.push(entry);
                        self.walk(idx + 1, !odd);
                        self.basis.pop();
                    }
                    None => self.walk(idx + 1, !odd),
                }
            }
        }
        let mut walker = Walker { normals: &self.normals, basis: Vec::new(), signed: &mut signed, n };
        walker.walk(0, false);
        Ok(CharPoly::from_signed(signed))
    }

    /// Number of chambers (full-dimensional regions) of the arrangement.
    pub fn region_count(&self) -> BigInt {
        self.characteristic_polynomial().region_count()
    }

    /// Enumerates the chambers as sign vectors (`+1`/`-1` per hyperplane),
    /// in lexicographic order with `+1` first. A sign vector is kept exactly
    /// when some point satisfies all the strict inequalities at once; the
    /// search prunes on prefixes, so infeasible branches die early.
    pub fn enumerate_chambers(&self) -> Vec<Vec<i8>> {
        let n = self.ambient_dim;
        let mut out = Vec::new();
        let mut signs: Vec<i8> = Vec::with_capacity(self.normals.len());
        let mut cons: Vec<Constraint> = Vec::with_capacity(self.normals.len());
        self.chamber_walk(n, &mut signs, &mut cons, &mut out);
        out
    }

    fn chamber_walk(
        &self,
        n: usize,
        signs: &mut Vec<i8>,
        cons: &mut Vec<Constraint>,
        out: &mut Vec<Vec<i8>>,
    ) {
        if signs.len() == self.normals.len() {
            out.push(signs.clone());
            return;
        }
        let normal = &self.normals[signs.len()];
        for sign in [1i8, -1] {
            // σ⟨n, x⟩ > 0 is scale-invariant, so test σ⟨n, x⟩ ≥ 1
            let row: Vec<Rat> = normal
                .iter()
                .map(|x| if sign > 0 { -x.clone() } else { x.clone() })
                .collect();
            cons.push(Constraint::le(row, -Rat::one()));
            if is_feasible(n, cons) {
                signs.push(sign);
                self.chamber_walk(n, signs, cons, out);
                signs.pop();
            }
            cons.pop();
        }
    }

    /// The closed chamber selected by a sign vector, as a cone.
    pub fn chamber_cone(&self, signs: &[i8]) -> HCone {
        assert_eq!(signs.len(), self.normals.len(), "one sign per hyperplane");
        let rows = self
            .normals
            .iter()
            .zip(signs)
            .map(|(nm, &s)| {
                assert!(s == 1 || s == -1, "signs must be ±1");
                nm.iter().map(|x| if s > 0 { -x.clone() } else { x.clone() }).collect()
            })
            .collect();
        HCone::new(self.ambient_dim, Vec::new(), rows)
    }
}

/// One intersection subspace of an arrangement.
#[derive(Clone, Debug)]
pub struct Flat {
    subspace: Subspace,    // the flat itself
    normal_span: Subspace, // its orthogonal description: span of the normals
    generators: Vec<usize>, // all hyperplane indices containing the flat, sorted
}

impl Flat {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn normal_span(&self) -> &Subspace {
        &self.normal_span
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
}

/// The intersection lattice of an arrangement, ordered by decreasing flat
/// dimension (the whole space first) and canonically within a dimension.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<Flat>,
}

fn sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

impl FlatLattice {
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Möbius function values `μ(whole space, flat)`, aligned with
    /// [`FlatLattice::flats`]. Containment of flats is containment of
    /// generator sets in the opposite direction, so the recursion sums over
    /// earlier flats whose generator set is a subset.
    pub fn moebius(&self) -> Vec<BigInt> {
        let mut mu = vec![BigInt::zero(); self.flats.len()];
        if mu.is_empty() {
            return mu;
        }
        mu[0] = BigInt::one();
        for i in 1..self.flats.len() {
            let gi = &self.flats[i].generators;
            let mut acc = BigInt::zero();
            for j in 0..i {
                if sorted_subset(&self.flats[j].generators, gi) {
                    acc += &mu[j];
                }
            }
            mu[i] = -acc;
        }
        mu
    }
}

/// A characteristic polynomial, stored by its unsigned coefficients: the
/// polynomial is `Σ_k (−1)^{degree−k} a_k t^k` with every `a_k ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    a: Vec<BigInt>,
}

impl CharPoly {
    /// Builds from signed coefficients (index = power of `t`), checking that
    /// the signs alternate from the top degree down.
    pub fn from_signed(signed: Vec<BigInt>) -> CharPoly {
        assert!(!signed.is_empty());
        let degree = signed.len() - 1;
        let a = signed
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                let unsigned = if (degree - k) % 2 == 1 { -c } else { c };
                assert!(
                    !unsigned.is_negative(),
                    "coefficient of t^{k} breaks the alternating sign pattern"
                );
                unsigned
            })
            .collect();
        CharPoly { a }
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    /// Unsigned coefficients `a_0 … a_degree`.
    pub fn unsigned_coefficients(&self) -> &[BigInt] {
        &self.a
    }

    /// Signed coefficients of the polynomial itself.
    pub fn signed_coefficients(&self) -> Vec<BigInt> {
        let d = self.degree();
        self.a
            .iter()
            .enumerate()
            .map(|(k, c)| if (d - k) % 2 == 1 { -c } else { c.clone() })
            .collect()
    }

    /// Exact evaluation at an integer.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        // Horner on the signed coefficients, top power first
        let mut acc = BigInt::zero();
        for c in self.signed_coefficients().into_iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Number of chambers: the alternating evaluation at `−1`, which is
    /// exactly the sum of the unsigned coefficients.
    pub fn region_count(&self) -> BigInt {
        self.a.iter().sum()
    }
}
