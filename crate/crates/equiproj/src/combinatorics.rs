//! Stirling numbers for the symmetric and hyperoctahedral series, and lazy
//! streams of ordered set partitions and their signed analogues.
//!
//! `stirling1` and `stirling1_b` are computed by expanding their defining
//! polynomials (`t(t+1)…(t+n-1)` and `(t+1)(t+3)…(t+2n-1)`), `stirling2` by the
//! exact surjection count divided by `k!`, and `stirling2_b` by its defining
//! binomial sum over `stirling2`. Triangle recurrences appear only in the unit
//! tests, as an independent cross-check.
//!
//! Partition streams are generated in lexicographic order of the
//! block-assignment word (element `i` maps to the index of its block), so the
//! enumeration order is deterministic and documented.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)` as a big integer (0 outside `0 ≤ k ≤ n`).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Multiplies the dense polynomial `coeffs` (index = degree) by `t + c`.
fn mul_linear(coeffs: &[BigInt], c: i64) -> Vec<BigInt> {
    let c = BigInt::from(c);
    let mut out = vec![BigInt::zero(); coeffs.len() + 1];
    for (k, a) in coeffs.iter().enumerate() {
        out[k + 1] += a;
        out[k] += a * &c;
    }
    out
}

/// Full coefficient row of `t(t+1)…(t+n-1)`: unsigned Stirling numbers of the
/// first kind `[n, 0], …, [n, n]`.
pub fn stirling1_row(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut coeffs = vec![BigInt::zero(), BigInt::one()]; // t
    for c in 1..n {
        coeffs = mul_linear(&coeffs, c as i64);
    }
    coeffs
}

/// Unsigned Stirling number of the first kind: permutations of `n` elements
/// with `k` cycles; 0 outside `0 ≤ k ≤ n`, with `[0, 0] = 1`.
pub fn stirling1(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling1_row(n).swap_remove(k)
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// non-empty blocks, via the exact surjection count `Σ (-1)^i C(k,i) (k-i)^n / k!`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one(); // k == 0 here
    }
    if k == 0 {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for i in 0..=k {
        let term = binomial(k, i) * BigInt::from(k - i).pow(n as u32);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / factorial(k)
}

/// Full coefficient row of `(t+1)(t+3)…(t+2n-1)`: the B-analogue of the
/// unsigned first-kind numbers, `[n, 0]_B, …, [n, n]_B`.
pub fn stirling1_b_row(n: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for i in 0..n {
        coeffs = mul_linear(&coeffs, 2 * i as i64 + 1);
    }
    coeffs
}

/// B-analogue of the unsigned Stirling number of the first kind; 0 outside
/// `0 ≤ k ≤ n`, with `[0, 0]_B = 1`.
pub fn stirling1_b(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling1_b_row(n).swap_remove(k)
}

/// B-analogue of the Stirling number of the second kind, by its defining sum
/// `{n,k}_B = Σ_{m=k}^n 2^(m-k) C(n,m) {m,k}`.
pub fn stirling2_b(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for m in k..=n {
        sum += (BigInt::one() << (m - k)) * binomial(n, m) * stirling2(m, k);
    }
    sum
}

/// Ordered partition of `{0, …, n-1}` into non-empty blocks `B_1, …, B_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    /// Validates that `blocks` are non-empty, disjoint, sorted within each
    /// block, and cover `{0, …, n-1}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut total = 0usize;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block in ordered partition".into()));
            }
            for (pos, &e) in b.iter().enumerate() {
                if e >= n || seen[e] {
                    return Err(Error::InvalidArgument("block elements must be distinct and < n".into()));
                }
                if pos > 0 && b[pos - 1] >= e {
                    return Err(Error::InvalidArgument("block elements must be ascending".into()));
                }
                seen[e] = true;
            }
            total += b.len();
        }
        if total != n {
            return Err(Error::InvalidArgument("blocks do not cover the ground set".into()));
        }
        Ok(OrderedPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The word `w` with `w[i]` = index of the block containing element `i`.
    pub fn assignment_word(&self) -> Vec<usize> {
        let mut w = vec![0usize; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                w[e] = b;
            }
        }
        w
    }

    fn from_word(n: usize, j: usize, word: &[usize]) -> Self {
        let mut blocks = vec![Vec::new(); j];
        for (i, &d) in word.iter().enumerate() {
            blocks[d].push(i);
        }
        OrderedPartition { n, blocks }
    }
}

/// Ordered partition into non-empty signed blocks `B_1, …, B_j` plus a
/// possibly empty zero block, with a sign for every element of a signed block.
///
/// `signs[i]` is `+1` or `-1` for elements of signed blocks and `0` for
/// elements of the zero block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedOrderedPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    zero_block: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedOrderedPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>, zero_block: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let mut all = blocks.clone();
        all.push(zero_block.clone());
        // reuse the ordered-partition validation for disjoint cover, allowing the
        // zero block to be empty
        let mut seen = vec![false; n];
        let mut total = 0usize;
        for (idx, b) in all.iter().enumerate() {
            let is_zero_block = idx == all.len() - 1;
            if b.is_empty() && !is_zero_block {
                return Err(Error::InvalidArgument("empty signed block".into()));
            }
            for (pos, &e) in b.iter().enumerate() {
                if e >= n || seen[e] {
                    return Err(Error::InvalidArgument("block elements must be distinct and < n".into()));
                }
                if pos > 0 && b[pos - 1] >= e {
                    return Err(Error::InvalidArgument("block elements must be ascending".into()));
                }
                seen[e] = true;
            }
            total += b.len();
        }
        if total != n {
            return Err(Error::InvalidArgument("blocks do not cover the ground set".into()));
        }
        if signs.len() != n {
            return Err(Error::InvalidArgument("signs must have length n".into()));
        }
        for (i, &s) in signs.iter().enumerate() {
            let in_zero = zero_block.contains(&i);
            if in_zero && s != 0 {
                return Err(Error::InvalidArgument("zero-block elements must have sign 0".into()));
            }
            if !in_zero && s != 1 && s != -1 {
                return Err(Error::InvalidArgument("signed-block elements must have sign ±1".into()));
            }
        }
        Ok(SignedOrderedPartition { n, blocks, zero_block, signs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of signed (non-zero) blocks.
    pub fn num_signed_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn zero_block(&self) -> &[usize] {
        &self.zero_block
    }

    /// Sign of element `i` (`0` exactly on the zero block).
    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// Lexicographic stream of surjective block-assignment words.
///
/// Digits `0..required` must all appear; digits `required..digits` may appear
/// freely. Words are emitted in strictly increasing lexicographic order.
struct WordStream {
    n: usize,
    digits: usize,
    required: usize,
    word: Vec<usize>,
    counts: Vec<usize>,
    used_required: usize,
    started: bool,
    done: bool,
}

impl WordStream {
    fn new(n: usize, digits: usize, required: usize) -> Self {
        WordStream {
            n,
            digits,
            required,
            word: vec![0; n],
            counts: vec![0; digits],
            used_required: 0,
            started: false,
            done: digits == 0 && n > 0,
        }
    }

    fn place(&mut self, pos: usize, d: usize) {
        self.word[pos] = d;
        if d < self.required && self.counts[d] == 0 {
            self.used_required += 1;
        }
        self.counts[d] += 1;
    }

    fn unplace(&mut self, pos: usize) {
        let d = self.word[pos];
        self.counts[d] -= 1;
        if d < self.required && self.counts[d] == 0 {
            self.used_required -= 1;
        }
    }

    /// Greedily fills positions `pos..n` with the lexicographically smallest
    /// feasible digits. Fails (without mutating) only if too few positions
    /// remain to cover the unused required digits.
    fn descend(&mut self, mut pos: usize) -> bool {
        if self.required - self.used_required > self.n - pos {
            return false;
        }
        while pos < self.n {
            let unused = self.required - self.used_required;
            let d = if unused == self.n - pos {
                (0..self.required).find(|&d| self.counts[d] == 0).expect("unused digit exists")
            } else {
                0
            };
            self.place(pos, d);
            pos += 1;
        }
        debug_assert_eq!(self.used_required, self.required);
        true
    }

    fn try_digits_from(&mut self, pos: usize, from: usize) -> bool {
        for d in from..self.digits {
            self.place(pos, d);
            if self.descend(pos + 1) {
                return true;
            }
            self.unplace(pos);
        }
        false
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 {
                // single empty word when nothing is required
                if self.required == 0 {
                    return Some(&self.word);
                }
                self.done = true;
                return None;
            }
            if self.descend(0) {
                return Some(&self.word);
            }
            self.done = true;
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return None;
        }
        let mut pos = self.n;
        loop {
            if pos == 0 {
                self.done = true;
                return None;
            }
            pos -= 1;
            let d = self.word[pos];
            self.unplace(pos);
            if self.try_digits_from(pos, d + 1) {
                return Some(&self.word);
            }
        }
    }
}

/// Lazy stream of all ordered partitions of `{0, …, n-1}` into exactly `j`
/// non-empty blocks, in lexicographic order of the block-assignment word.
/// Out-of-range `j` yields an empty stream.
pub fn enumerate_ordered_partitions(n: usize, j: usize) -> impl Iterator<Item = OrderedPartition> {
    let valid = j >= 1 && j <= n;
    let mut stream = WordStream::new(n, if valid { j } else { 0 }, if valid { j } else { 0 });
    std::iter::from_fn(move || {
        if !valid {
            return None;
        }
        stream.advance().map(|w| OrderedPartition::from_word(n, j, w))
    })
}

/// Lazy stream of all signed ordered partitions of `{0, …, n-1}` with exactly
/// `j` non-empty signed blocks plus a possibly empty zero block.
///
/// The order is lexicographic by block-assignment word (zero block = last
/// digit), and for each word the sign patterns run in binary order with `+`
/// before `-` over the signed elements in ascending order. `j > n` yields an
/// empty stream; `j = 0` yields the single all-zero-block element.
pub fn enumerate_signed_ordered_partitions(n: usize, j: usize) -> impl Iterator<Item = SignedOrderedPartition> {
    let valid = j <= n;
    let mut stream = WordStream::new(n, if valid { j + 1 } else { 0 }, if valid { j } else { 0 });
    let mut current: Option<(Vec<usize>, Vec<usize>)> = None; // (word, signed elements)
    let mut mask: u64 = 0;
    std::iter::from_fn(move || {
        if !valid {
            return None;
        }
        loop {
            if let Some((word, signed)) = &current {
                if (mask >> signed.len()) == 0 {
                    let mut blocks = vec![Vec::new(); j];
                    let mut zero_block = Vec::new();
                    let mut signs = vec![0i8; n];
                    for (i, &d) in word.iter().enumerate() {
                        if d == j {
                            zero_block.push(i);
                        } else {
                            blocks[d].push(i);
                        }
                    }
                    for (bit, &e) in signed.iter().enumerate() {
                        signs[e] = if mask & (1 << bit) == 0 { 1 } else { -1 };
                    }
                    mask += 1;
                    return Some(SignedOrderedPartition { n, blocks, zero_block, signs });
                }
            }
            let word = stream.advance()?.to_vec();
            let signed: Vec<usize> = (0..n).filter(|&i| word[i] != j).collect();
            assert!(signed.len() < 64, "too many signed elements for the mask");
            mask = 0;
            current = Some((word, signed));
        }
    })
}
