//! Linear algebra over F₂ on packed vectors of length 2n.
//!
//! A [`BitVec2n`] packs the x-part of a check vector into the low `n` bits of
//! a `u64` and the z-part into the next `n` bits, so qubit `j` owns bits `j`
//! and `n + j`. Vectors are ordered by their packed integer value; every
//! "smallest" choice in this crate refers to that order.
//!
//! Canonical bases are fully reduced echelon forms where the pivot of a row is
//! its highest set bit, each pivot bit is clear in every other row, and rows
//! are sorted by increasing pivot (equivalently, by increasing value).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest qubit count representable in a packed check vector.
pub const MAX_QUBITS: usize = 32;

/// An element of F₂^{2n}: `x | z` with the x-part in the low bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec2n {
    word: u64,
    n: usize,
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
fn parity(w: u64) -> bool {
    w.count_ones() & 1 == 1
}

impl BitVec2n {
    pub fn zero(n: usize) -> Self {
        assert!(
            (1..=MAX_QUBITS).contains(&n),
            "qubit count {n} outside 1..={MAX_QUBITS}"
        );
        BitVec2n { word: 0, n }
    }

    /// Builds a vector from a packed word; bits above `2n` must be clear.
    pub fn from_word(n: usize, word: u64) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&n) {
            return Err(Error::Capacity {
                what: "qubit count",
                requested: n,
                limit: MAX_QUBITS,
            });
        }
        if word & !low_mask(2 * n) != 0 {
            return Err(Error::input(format!(
                "word {word:#x} has bits beyond length {}",
                2 * n
            )));
        }
        Ok(BitVec2n { word, n })
    }

    /// Builds `a ⊕ b` from separate x- and z-parts (each `n` bits).
    pub fn from_parts(n: usize, x: u64, z: u64) -> Self {
        let mut v = Self::zero(n);
        let m = low_mask(n);
        assert!(x & !m == 0 && z & !m == 0, "parts wider than {n} bits");
        v.word = x | (z << n);
        v
    }

    #[inline]
    pub(crate) fn raw(n: usize, word: u64) -> Self {
        BitVec2n { word, n }
    }

    #[inline]
    pub fn word(&self) -> u64 {
        self.word
    }

    /// Qubit count; the vector has length `2n`.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn x(&self) -> u64 {
        self.word & low_mask(self.n)
    }

    #[inline]
    pub fn z(&self) -> u64 {
        self.word >> self.n
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.word == 0
    }

    /// Exchanges the x- and z-parts, so that `u * v = <u, swap(v)>`.
    #[inline]
    pub fn swapped(&self) -> Self {
        BitVec2n {
            word: self.z() | (self.x() << self.n),
            n: self.n,
        }
    }

    /// Twisted product without the length check. Callers guarantee equal `n`.
    #[inline]
    pub fn twisted(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        parity((self.x() & other.z()) ^ (self.z() & other.x()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_len(self, other)?;
        Ok(*self + *other)
    }

    /// All `4^n` vectors of F₂^{2n}, ascending.
    pub fn all(n: usize) -> impl Iterator<Item = BitVec2n> {
        assert!(n <= 16, "refusing to enumerate 4^{n} vectors");
        (0..1u64 << (2 * n)).map(move |w| BitVec2n::raw(n, w))
    }
}

impl std::ops::Add for BitVec2n {
    type Output = BitVec2n;

    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        BitVec2n {
            word: self.word ^ rhs.word,
            n: self.n,
        }
    }
}

impl fmt::Display for BitVec2n {
    /// `(x₁…xₙ|z₁…zₙ)`, qubit 1 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |w: u64, j: usize| if (w >> j) & 1 == 1 { '1' } else { '0' };
        let xs: String = (0..self.n).map(|j| bit(self.x(), j)).collect();
        let zs: String = (0..self.n).map(|j| bit(self.z(), j)).collect();
        write!(f, "({xs}|{zs})")
    }
}

impl fmt::Debug for BitVec2n {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BitVec2n {
    type Err = Error;

    /// Parses `(10|01)` or `10|01`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (xs, zs) = t.split_once('|').ok_or(Error::Parse {
            position: 0,
            message: "expected '|' between x- and z-parts".into(),
        })?;
        if xs.len() != zs.len() || xs.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "x- and z-parts must be nonempty and equally long".into(),
            });
        }
        let n = xs.len();
        let bits = |part: &str, offset: usize| -> Result<u64> {
            let mut w = 0u64;
            for (j, c) in part.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => w |= 1 << j,
                    _ => {
                        return Err(Error::Parse {
                            position: offset + j,
                            message: format!("unexpected character {c:?}"),
                        })
                    }
                }
            }
            Ok(w)
        };
        let x = bits(xs, 0)?;
        let z = bits(zs, n + 1)?;
        if n > MAX_QUBITS {
            return Err(Error::Capacity {
                what: "qubit count",
                requested: n,
                limit: MAX_QUBITS,
            });
        }
        Ok(BitVec2n::from_parts(n, x, z))
    }
}

fn same_len(u: &BitVec2n, v: &BitVec2n) -> Result<()> {
    if u.n != v.n {
        return Err(Error::SizeMismatch {
            expected: u.n,
            found: v.n,
        });
    }
    Ok(())
}

/// The symplectic form `<a,d> + <b,c>` for `u = a⊕b`, `v = c⊕d`.
pub fn twisted_dot(u: &BitVec2n, v: &BitVec2n) -> Result<bool> {
    same_len(u, v)?;
    Ok(u.twisted(v))
}

/// Incremental fully reduced echelon form with highest-bit pivots.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<u64>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn remainder(&self, mut w: u64) -> u64 {
        for &r in &self.rows {
            if w & pivot_bit(r) != 0 {
                w ^= r;
            }
        }
        w
    }

    /// Inserts `w`; returns `false` if it was already in the span.
    pub(crate) fn insert(&mut self, w: u64) -> bool {
        let w = self.remainder(w);
        if w == 0 {
            return false;
        }
        let p = pivot_bit(w);
        for r in &mut self.rows {
            if *r & p != 0 {
                *r ^= w;
            }
        }
        let at = self.rows.partition_point(|&r| r < w);
        self.rows.insert(at, w);
        true
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }
}

#[inline]
fn pivot_bit(w: u64) -> u64 {
    debug_assert!(w != 0);
    1u64 << (63 - w.leading_zeros())
}

/// An independent list of vectors in F₂^{2n}.
///
/// Bases built by [`F2Basis::reduce`] are canonical, so two canonical bases
/// span the same subspace iff they are equal. [`F2Basis::extend`] keeps the
/// caller's prefix and is generally not canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Basis {
    n: usize,
    vectors: Vec<BitVec2n>,
}

impl fmt::Debug for F2Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vectors).finish()
    }
}

impl F2Basis {
    pub fn empty(n: usize) -> Self {
        F2Basis {
            n,
            vectors: Vec::new(),
        }
    }

    /// Canonical basis of the span of `vectors`.
    pub fn reduce(n: usize, vectors: &[BitVec2n]) -> Result<Self> {
        let mut ech = Echelon::new();
        for v in vectors {
            if v.n != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: v.n,
                });
            }
            ech.insert(v.word);
        }
        Ok(Self::from_echelon(n, &ech))
    }

    pub(crate) fn from_echelon(n: usize, ech: &Echelon) -> Self {
        F2Basis {
            n,
            vectors: ech.rows().iter().map(|&w| BitVec2n::raw(n, w)).collect(),
        }
    }

    pub(crate) fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new();
        for v in &self.vectors {
            ech.insert(v.word);
        }
        ech
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[BitVec2n] {
        &self.vectors
    }

    pub fn canonical(&self) -> F2Basis {
        Self::from_echelon(self.n, &self.echelon())
    }

    /// Whether `v` is an F₂-combination of the basis vectors.
    pub fn contains(&self, v: &BitVec2n) -> Result<bool> {
        if v.n != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: v.n,
            });
        }
        Ok(self.echelon().remainder(v.word) == 0)
    }

    /// Every element of the span, ascending. Only sensible for small ranks.
    pub fn span_elements(&self) -> Vec<BitVec2n> {
        assert!(self.rank() <= 24, "span of rank {} too large", self.rank());
        let rows = self.echelon();
        let rows = rows.rows();
        // For a canonical basis, binary counting over coefficients is monotone.
        (0..1u64 << rows.len())
            .map(|c| {
                let w = rows
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (c >> i) & 1 == 1)
                    .fold(0, |acc, (_, r)| acc ^ r);
                BitVec2n::raw(self.n, w)
            })
            .collect()
    }

    /// Whether every pair of vectors has vanishing twisted product.
    pub fn is_isotropic(&self) -> bool {
        self.vectors
            .iter()
            .enumerate()
            .all(|(i, u)| self.vectors[i + 1..].iter().all(|v| !u.twisted(v)))
    }

    /// Superset basis: the current vectors followed by the smallest
    /// candidates (in ascending order) that enlarge the span.
    pub fn extend(&self, candidates: &[BitVec2n]) -> Result<F2Basis> {
        extend_basis(self, candidates)
    }
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(v: &BitVec2n, basis: &F2Basis) -> Result<bool> {
    basis.contains(v)
}

/// Basis of `{v : v * g = 0 for all g}`, canonical. Its dimension is
/// `2n - rank(generators)`.
pub fn twisted_kernel(n: usize, generators: &[BitVec2n]) -> Result<F2Basis> {
    let mut ech = Echelon::new();
    for g in generators {
        if g.n != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: g.n,
            });
        }
        // v * g = <v, swap(g)>, so the kernel is the ordinary null space of
        // the swapped rows.
        ech.insert(g.swapped().word);
    }
    let pivots: u64 = ech.rows().iter().fold(0, |acc, &r| acc | pivot_bit(r));
    let mut out = Echelon::new();
    for f in 0..2 * n {
        let fb = 1u64 << f;
        if pivots & fb != 0 {
            continue;
        }
        let mut w = fb;
        for &r in ech.rows() {
            if r & fb != 0 {
                w |= pivot_bit(r);
            }
        }
        out.insert(w);
    }
    Ok(F2Basis::from_echelon(n, &out))
}

/// Extends `partial` by the smallest admissible candidates.
///
/// Fails if the candidates do not span a space containing `partial`.
pub fn extend_basis(partial: &F2Basis, candidates: &[BitVec2n]) -> Result<F2Basis> {
    let n = partial.n;
    let mut sorted: Vec<BitVec2n> = candidates.to_vec();
    for c in &sorted {
        if c.n != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: c.n,
            });
        }
    }
    sorted.sort_unstable();
    sorted.dedup();

    let mut ech = partial.echelon();
    if ech.rank() != partial.rank() {
        return Err(Error::input("partial basis is not independent"));
    }
    let mut vectors = partial.vectors.clone();
    let mut cand_span = Echelon::new();
    for c in sorted {
        cand_span.insert(c.word);
        if ech.insert(c.word) {
            vectors.push(c);
        }
    }
    if partial
        .vectors
        .iter()
        .any(|v| cand_span.remainder(v.word) != 0)
    {
        return Err(Error::input(
            "candidates do not span a space containing the partial basis",
        ));
    }
    Ok(F2Basis { n, vectors })
}

/// Smallest element of `span(outer)` outside `span(inner)`, if any.
///
/// Walks the canonical basis of `outer` in ascending order and returns the
/// first row not already in `span(inner)`; with highest-bit pivots this is
/// the minimum of the set difference.
pub fn smallest_outside(outer: &F2Basis, inner: &F2Basis) -> Option<BitVec2n> {
    let n = outer.n;
    let inner = inner.echelon();
    outer
        .echelon()
        .rows()
        .iter()
        .find(|&&r| inner.remainder(r) != 0)
        .map(|&r| BitVec2n::raw(n, r))
}

/// The quotient `span(sub ∪ ext) / span(sub)`, with coordinates.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    sub: F2Basis,
    ext: F2Basis,
    // Reduced rows tagged with the basis vectors (sub first, then ext)
    // that sum to them.
    rows: Vec<(u64, u64)>,
}

impl CosetSpace {
    /// `ambient` must contain `sub`; `ext` completes `sub` to a basis of it.
    pub fn new(sub: &F2Basis, ambient: &F2Basis) -> Result<Self> {
        if sub.n != ambient.n {
            return Err(Error::SizeMismatch {
                expected: sub.n,
                found: ambient.n,
            });
        }
        let full = extend_basis(sub, ambient.vectors())?;
        let ext = F2Basis {
            n: sub.n,
            vectors: full.vectors[sub.rank()..].to_vec(),
        };
        Ok(Self::from_parts(sub.clone(), ext))
    }

    fn from_parts(sub: F2Basis, ext: F2Basis) -> Self {
        let mut rows: Vec<(u64, u64)> = Vec::new();
        for (i, v) in sub.vectors.iter().chain(&ext.vectors).enumerate() {
            let (mut w, mut tag) = (v.word, 1u64 << i);
            for &(r, t) in &rows {
                if w & pivot_bit(r) != 0 {
                    w ^= r;
                    tag ^= t;
                }
            }
            debug_assert!(w != 0, "sub ∪ ext must be independent");
            let p = pivot_bit(w);
            for (r, t) in rows.iter_mut() {
                if *r & p != 0 {
                    *r ^= w;
                    *t ^= tag;
                }
            }
            rows.push((w, tag));
        }
        CosetSpace { sub, ext, rows }
    }

    pub fn sub_basis(&self) -> &F2Basis {
        &self.sub
    }

    pub fn ext_basis(&self) -> &F2Basis {
        &self.ext
    }

    /// Dimension of the quotient.
    pub fn quotient_dim(&self) -> usize {
        self.ext.rank()
    }

    /// Coordinates of `v` on the ext vectors; identifies its coset.
    pub fn signature(&self, v: &BitVec2n) -> Result<u64> {
        if v.n != self.sub.n {
            return Err(Error::SizeMismatch {
                expected: self.sub.n,
                found: v.n,
            });
        }
        let (mut w, mut tag) = (v.word, 0u64);
        for &(r, t) in &self.rows {
            if w & pivot_bit(r) != 0 {
                w ^= r;
                tag ^= t;
            }
        }
        if w != 0 {
            return Err(Error::input(format!(
                "vector {v} lies outside the ambient space of the quotient"
            )));
        }
        Ok(tag >> self.sub.rank())
    }
}

/// Number of distinct cosets of `span(sub)` among `hits`.
pub fn coset_count(hits: &[BitVec2n], cs: &CosetSpace) -> Result<usize> {
    let mut seen = BTreeSet::new();
    for h in hits {
        seen.insert(cs.signature(h)?);
    }
    Ok(seen.len())
}

/// Every `d`-dimensional isotropic subspace of F₂^{2n}, each exactly once as
/// a canonical basis, in ascending order of basis lists.
///
/// Canonical bases are enumerated directly: pick the pivot positions, then
/// fill each row's free bits (those below its pivot and off the other
/// pivots), pruning rows that fail to commute with earlier ones.
pub fn enumerate_isotropic(n: usize, d: usize) -> Result<Vec<F2Basis>> {
    if !(1..=MAX_QUBITS).contains(&n) {
        return Err(Error::Capacity {
            what: "qubit count",
            requested: n,
            limit: MAX_QUBITS,
        });
    }
    if d > n {
        return Err(Error::input(format!(
            "no isotropic subspace of dimension {d} exists in F2^{}",
            2 * n
        )));
    }
    if n > 8 {
        return Err(Error::Capacity {
            what: "isotropic enumeration qubit count",
            requested: n,
            limit: 8,
        });
    }
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(d);
    choose_pivots(n, d, 0, &mut pivots, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn choose_pivots(
    n: usize,
    d: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<F2Basis>,
) {
    if pivots.len() == d {
        let pivot_mask: u64 = pivots.iter().fold(0, |m, &p| m | 1 << p);
        let free: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&p| (0..p).filter(|q| pivot_mask & (1 << q) == 0).collect())
            .collect();
        let mut rows = Vec::with_capacity(d);
        fill_rows(n, pivots, &free, &mut rows, out);
        return;
    }
    let remaining = d - pivots.len();
    for p in start..=(2 * n - remaining) {
        pivots.push(p);
        choose_pivots(n, d, p + 1, pivots, out);
        pivots.pop();
    }
}

fn fill_rows(
    n: usize,
    pivots: &[usize],
    free: &[Vec<usize>],
    rows: &mut Vec<BitVec2n>,
    out: &mut Vec<F2Basis>,
) {
    let i = rows.len();
    if i == pivots.len() {
        out.push(F2Basis {
            n,
            vectors: rows.clone(),
        });
        return;
    }
    let slots = &free[i];
    for assignment in 0..1u64 << slots.len() {
        let mut w = 1u64 << pivots[i];
        for (b, &q) in slots.iter().enumerate() {
            if (assignment >> b) & 1 == 1 {
                w |= 1 << q;
            }
        }
        let v = BitVec2n::raw(n, w);
        if rows.iter().all(|r| !r.twisted(&v)) {
            rows.push(v);
            fill_rows(n, pivots, free, rows, out);
            rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> BitVec2n {
        s.parse().unwrap()
    }

    #[test]
    fn twisted_dot_examples() {
        assert!(twisted_dot(&v("1|0"), &v("0|1")).unwrap());
        assert!(!twisted_dot(&v("10|01"), &v("01|10")).unwrap());
        for w in BitVec2n::all(2) {
            assert!(!twisted_dot(&w, &w).unwrap());
        }
        assert!(matches!(
            twisted_dot(&v("1|0"), &v("10|00")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        let b = F2Basis::reduce(1, &[v("1|0"), v("1|0")]).unwrap();
        assert_eq!(b.vectors(), &[v("1|0")]);
        assert_eq!(F2Basis::reduce(1, &[]).unwrap().rank(), 0);
        let b = F2Basis::reduce(2, &[v("10|00"), v("01|00"), v("11|00")]).unwrap();
        assert_eq!(b.rank(), 2);
        assert!(F2Basis::reduce(2, &[v("1|0")]).is_err());
    }

    #[test]
    fn in_span_examples() {
        let b = F2Basis::reduce(1, &[v("1|0")]).unwrap();
        assert!(in_span(&BitVec2n::zero(1), &b).unwrap());
        assert!(!in_span(&v("1|1"), &b).unwrap());
        let b = F2Basis::reduce(2, &[v("10|00"), v("01|00")]).unwrap();
        assert!(in_span(&v("11|00"), &b).unwrap());
        assert!(in_span(&v("1|1"), &b).is_err());
    }

    #[test]
    fn kernel_examples() {
        let k = twisted_kernel(1, &[v("0|1")]).unwrap();
        assert_eq!(k.rank(), 1);
        assert!(k.contains(&v("0|1")).unwrap());
        assert_eq!(twisted_kernel(2, &[v("00|11")]).unwrap().rank(), 3);
        assert_eq!(twisted_kernel(2, &[]).unwrap().rank(), 4);
    }

    #[test]
    fn extend_examples() {
        let partial = F2Basis::reduce(2, &[v("10|00")]).unwrap();
        let all: Vec<_> = BitVec2n::all(2).collect();
        let ext = extend_basis(&partial, &all).unwrap();
        assert_eq!(ext.rank(), 4);
        assert_eq!(ext.vectors()[0], v("10|00"));

        let full = F2Basis::reduce(2, &all).unwrap();
        assert_eq!(extend_basis(&full, &all).unwrap(), full);

        let e = extend_basis(&F2Basis::empty(1), &[v("1|1")]).unwrap();
        assert_eq!(e.vectors(), &[v("1|1")]);

        assert!(extend_basis(&partial, &[v("01|00")]).is_err());
    }

    #[test]
    fn smallest_outside_prefers_low_words() {
        let all = F2Basis::reduce(1, &[v("1|0"), v("0|1")]).unwrap();
        assert_eq!(smallest_outside(&all, &F2Basis::empty(1)), Some(v("1|0")));
        let x = F2Basis::reduce(1, &[v("1|0")]).unwrap();
        assert_eq!(smallest_outside(&all, &x), Some(v("0|1")));
        assert_eq!(smallest_outside(&x, &all), None);
    }

    #[test]
    fn coset_count_examples() {
        let zz = v("00|11");
        let sub = F2Basis::reduce(2, &[zz]).unwrap();
        let cent = twisted_kernel(2, &[zz]).unwrap();
        let cs = CosetSpace::new(&sub, &cent).unwrap();
        assert_eq!(cs.quotient_dim(), 2);
        assert_eq!(coset_count(&[BitVec2n::zero(2)], &cs).unwrap(), 1);
        assert_eq!(coset_count(&[v("00|00"), v("11|00")], &cs).unwrap(), 2);
        // zz itself shares the trivial coset
        assert_eq!(coset_count(&[v("00|00"), zz], &cs).unwrap(), 1);
        let reps: Vec<_> = cent.span_elements();
        assert_eq!(coset_count(&reps, &cs).unwrap(), 4);
        // X⊗I anticommutes with Z⊗Z, so it is outside the ambient space.
        assert!(coset_count(&[v("10|00")], &cs).is_err());
    }

    #[test]
    fn isotropic_small_cases() {
        assert_eq!(enumerate_isotropic(2, 1).unwrap().len(), 15);
        assert_eq!(enumerate_isotropic(2, 2).unwrap().len(), 15);
        let zero = enumerate_isotropic(1, 0).unwrap();
        assert_eq!(zero, vec![F2Basis::empty(1)]);
        assert!(enumerate_isotropic(2, 3).is_err());
    }

    #[test]
    fn enumerated_bases_are_canonical_and_isotropic() {
        for n in 1..=3 {
            for d in 0..=n {
                let subs = enumerate_isotropic(n, d).unwrap();
                for b in &subs {
                    assert_eq!(b.rank(), d);
                    assert_eq!(&b.canonical(), b);
                    assert!(b.is_isotropic());
                }
                let mut sorted = subs.clone();
                sorted.dedup();
                assert_eq!(sorted.len(), subs.len());
            }
        }
    }
}
