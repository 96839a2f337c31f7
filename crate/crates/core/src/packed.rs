//! Fixed-width bit vectors and the partitioned Gray-code span walk that
//! drives every exhaustive enumeration.

use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{CodeError, Result};
use crate::gf2::BinPoly;

/// Longest word the packed engine accepts.
pub const MAX_PACKED_LEN: usize = 4096;

/// Expands `$body` with `$L` bound to a limb count wide enough for `$n` bits.
#[macro_export]
#[doc(hidden)]
macro_rules! with_limbs {
    ($n:expr, $L:ident => $body:expr) => {{
        let n: usize = $n;
        if n <= 64 {
            const $L: usize = 1;
            $body
        } else if n <= 128 {
            const $L: usize = 2;
            $body
        } else if n <= 256 {
            const $L: usize = 4;
            $body
        } else if n <= 512 {
            const $L: usize = 8;
            $body
        } else if n <= 1024 {
            const $L: usize = 16;
            $body
        } else if n <= $crate::packed::MAX_PACKED_LEN {
            const $L: usize = 64;
            $body
        } else {
            Err($crate::error::CodeError::OutOfRange(format!(
                "length {} exceeds the packed limit {}",
                n,
                $crate::packed::MAX_PACKED_LEN
            )))
        }
    }};
}

pub trait Word: Copy + Send + Sync {
    fn zero() -> Self;
    fn xor_assign(&mut self, other: &Self);
    fn is_zero(&self) -> bool;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits<const L: usize>(pub [u64; L]);

impl<const L: usize> Bits<L> {
    pub fn from_poly(p: &BinPoly) -> Result<Self> {
        let limbs = p.limbs();
        if limbs.len() > L {
            return Err(CodeError::OutOfRange(format!("polynomial wider than {} bits", 64 * L)));
        }
        let mut out = [0u64; L];
        out[..limbs.len()].copy_from_slice(limbs);
        Ok(Self(out))
    }

    pub fn to_poly(&self) -> BinPoly {
        BinPoly::from_limbs(self.0.to_vec())
    }

    #[inline]
    pub fn count_ones(&self) -> u32 {
        self.0.iter().map(|x| x.count_ones()).sum()
    }

    #[inline]
    pub fn and(&self, other: &Self) -> Self {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(&other.0) {
            *o &= x;
        }
        Self(out)
    }

    #[inline]
    pub fn or(&self, other: &Self) -> Self {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(&other.0) {
            *o |= x;
        }
        Self(out)
    }

    /// `self & !other`.
    #[inline]
    pub fn and_not(&self, other: &Self) -> Self {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(&other.0) {
            *o &= !x;
        }
        Self(out)
    }

    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn ones(n: usize) -> Self {
        let mut out = [0u64; L];
        for i in 0..n {
            out[i / 64] |= 1 << (i % 64);
        }
        Self(out)
    }

    /// Coordinate reversal of a length-`n` word.
    #[inline]
    pub fn reverse(&self, n: usize) -> Self {
        if L == 1 {
            let mut out = [0u64; L];
            out[0] = if n == 0 { 0 } else { self.0[0].reverse_bits() >> (64 - n) };
            return Self(out);
        }
        let mut full = [0u64; L];
        for (i, x) in self.0.iter().enumerate() {
            full[L - 1 - i] = x.reverse_bits();
        }
        // shift right by 64L - n
        let shift = 64 * L - n;
        let (words, bits) = (shift / 64, shift % 64);
        let mut out = [0u64; L];
        for (i, slot) in out.iter_mut().enumerate().take(L - words) {
            let src = i + words;
            let mut v = full[src] >> bits;
            if bits > 0 && src + 1 < L {
                v |= full[src + 1] << (64 - bits);
            }
            *slot = v;
        }
        Self(out)
    }
}

impl<const L: usize> Word for Bits<L> {
    #[inline]
    fn zero() -> Self {
        Self([0; L])
    }
    #[inline]
    fn xor_assign(&mut self, other: &Self) {
        for (o, x) in self.0.iter_mut().zip(&other.0) {
            *o ^= x;
        }
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// A word over `R` as two packed planes, value `a + ub`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RBits<const L: usize> {
    pub a: Bits<L>,
    pub b: Bits<L>,
}

impl<const L: usize> RBits<L> {
    #[inline]
    pub fn hamming(&self) -> u32 {
        self.a.or(&self.b).count_ones()
    }

    /// Count of coordinates equal to `u`.
    #[inline]
    pub fn n_u(&self) -> u32 {
        self.b.and_not(&self.a).count_ones()
    }

    #[inline]
    pub fn gc(&self) -> u32 {
        self.a.count_ones()
    }

    #[inline]
    pub fn lee(&self) -> u32 {
        self.gc() + 2 * self.n_u()
    }

    #[inline]
    pub fn euclidean(&self) -> u32 {
        self.gc() + 4 * self.n_u()
    }

    #[inline]
    pub fn reverse(&self, n: usize) -> Self {
        Self { a: self.a.reverse(n), b: self.b.reverse(n) }
    }
}

impl<const L: usize> Word for RBits<L> {
    #[inline]
    fn zero() -> Self {
        Self { a: Bits::zero(), b: Bits::zero() }
    }
    #[inline]
    fn xor_assign(&mut self, other: &Self) {
        self.a.xor_assign(&other.a);
        self.b.xor_assign(&other.b);
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Per-partition accumulator for a span walk.
pub trait Visitor<W>: Send {
    fn visit(&mut self, w: &W);
    fn merge(&mut self, other: Self);
}

/// Visits every element of the F2-span of `basis` once per message vector
/// (`2^k` visits for `k` rows), splitting the message space by its top bits
/// across worker threads. The result is independent of the partitioning as
/// long as `merge` is commutative.
pub fn span_walk<W, V, F>(basis: &[W], make: F) -> V
where
    W: Word,
    V: Visitor<W>,
    F: Fn() -> V + Sync,
{
    let k = basis.len();
    let top = if k >= 16 { 8.min(k - 8) } else { 0 };
    let (low, high) = basis.split_at(k - top);
    (0u64..1 << top)
        .into_par_iter()
        .map(|prefix| {
            let mut start = W::zero();
            for (i, row) in high.iter().enumerate() {
                if prefix >> i & 1 == 1 {
                    start.xor_assign(row);
                }
            }
            let mut v = make();
            gray_walk(low, start, &mut v);
            v
        })
        .reduce_with(|mut a, b| {
            a.merge(b);
            a
        })
        .unwrap_or_else(make)
}

#[inline]
fn gray_walk<W: Word, V: Visitor<W>>(basis: &[W], mut w: W, v: &mut V) {
    v.visit(&w);
    let count = 1u64 << basis.len();
    for i in 1..count {
        w.xor_assign(&basis[i.trailing_zeros() as usize]);
        v.visit(&w);
    }
}

/// Sequential Gray-order iterator over a span; word `i` is the `i`-th visited.
pub struct GrayIter<W: Word> {
    basis: Vec<W>,
    current: W,
    next: u64,
    end: u64,
}

impl<W: Word> GrayIter<W> {
    pub fn new(basis: Vec<W>) -> Self {
        let end = 1u64 << basis.len();
        Self { basis, current: W::zero(), next: 0, end }
    }
}

impl<W: Word> Iterator for GrayIter<W> {
    type Item = W;
    fn next(&mut self) -> Option<W> {
        if self.next >= self.end {
            return None;
        }
        if self.next > 0 {
            self.current.xor_assign(&self.basis[self.next.trailing_zeros() as usize]);
        }
        self.next += 1;
        Some(self.current)
    }
}

/// Remainder modulo a fixed polynomial for words of length `n`, by byte
/// lookup when the word is at most four limbs and by long division beyond.
#[derive(Debug, Clone)]
pub struct RemTable<const L: usize> {
    modulus: BinPoly,
    table: Vec<Bits<L>>,
    bytes: usize,
}

impl<const L: usize> RemTable<L> {
    pub fn new(modulus: &BinPoly, n: usize) -> Result<Self> {
        if modulus.is_zero() {
            return Err(CodeError::DivisionByZero);
        }
        let bytes = n.div_ceil(8);
        let mut table = Vec::new();
        if L <= 4 {
            table.reserve(bytes * 256);
            for j in 0..bytes {
                let base: Vec<Bits<L>> = (0..8)
                    .map(|bit| Bits::from_poly(&BinPoly::monomial(8 * j + bit).rem(modulus).expect("nonzero")))
                    .collect::<Result<_>>()?;
                for v in 0..256usize {
                    let mut acc = Bits::<L>::zero();
                    for (bit, r) in base.iter().enumerate() {
                        if v >> bit & 1 == 1 {
                            acc.xor_assign(r);
                        }
                    }
                    table.push(acc);
                }
            }
        }
        Ok(Self { modulus: modulus.clone(), table, bytes })
    }

    #[inline]
    pub fn rem(&self, w: &Bits<L>) -> Bits<L> {
        if self.table.is_empty() {
            return Bits::from_poly(&w.to_poly().rem(&self.modulus).expect("nonzero")).expect("fits");
        }
        let mut acc = Bits::<L>::zero();
        for j in 0..self.bytes {
            let byte = (w.0[j / 8] >> (8 * (j % 8))) & 0xff;
            if byte != 0 {
                acc.xor_assign(&self.table[j * 256 + byte as usize]);
            }
        }
        acc
    }

    #[inline]
    pub fn divides(&self, w: &Bits<L>) -> bool {
        self.rem(w).is_zero()
    }
}
