//! The ring `R = F2 + uF2` (`u^2 = 0`), words over it and the DNA alphabet.
//!
//! A ring element `a + ub` is stored as the bit pair `(a, b)`. Words keep one
//! bit-plane per component so complement is a single XOR and the weights are
//! popcounts.

use std::fmt;
use std::io::{self, Write};
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{CodeError, Result};
use crate::gf2::BinPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem {
    pub a: bool,
    pub b: bool,
}

impl RingElem {
    pub const ZERO: Self = Self { a: false, b: false };
    pub const ONE: Self = Self { a: true, b: false };
    pub const U: Self = Self { a: false, b: true };
    pub const ONE_PLUS_U: Self = Self { a: true, b: true };

    pub const ALL: [Self; 4] = [Self::ZERO, Self::ONE, Self::U, Self::ONE_PLUS_U];

    pub fn new(a: bool, b: bool) -> Self {
        Self { a, b }
    }

    /// `x + u`.
    pub fn complement(self) -> Self {
        Self { a: self.a, b: !self.b }
    }

    pub fn hamming(self) -> u32 {
        (self.a | self.b) as u32
    }

    pub fn lee(self) -> u32 {
        match (self.a, self.b) {
            (false, false) => 0,
            (false, true) => 2,
            _ => 1,
        }
    }

    pub fn euclidean(self) -> u32 {
        match (self.a, self.b) {
            (false, false) => 0,
            (false, true) => 4,
            _ => 1,
        }
    }

    pub fn to_base(self) -> Base {
        match (self.a, self.b) {
            (false, false) => Base::A,
            (false, true) => Base::T,
            (true, true) => Base::C,
            (true, false) => Base::G,
        }
    }
}

impl Add for RingElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { a: self.a ^ rhs.a, b: self.b ^ rhs.b }
    }
}

impl Mul for RingElem {
    type Output = Self;
    /// `(a + ub)(c + ud) = ac + u(ad + bc)`.
    fn mul(self, rhs: Self) -> Self {
        Self {
            a: self.a & rhs.a,
            b: (self.a & rhs.b) ^ (self.b & rhs.a),
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.a, self.b) {
            (false, false) => "0",
            (true, false) => "1",
            (false, true) => "u",
            (true, true) => "1+u",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    A,
    C,
    G,
    T,
}

impl Base {
    pub fn to_elem(self) -> RingElem {
        match self {
            Base::A => RingElem::ZERO,
            Base::T => RingElem::U,
            Base::C => RingElem::ONE_PLUS_U,
            Base::G => RingElem::ONE,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::C => 'C',
            Base::G => 'G',
            Base::T => 'T',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'A' => Ok(Base::A),
            'C' => Ok(Base::C),
            'G' => Ok(Base::G),
            'T' => Ok(Base::T),
            other => Err(CodeError::InvalidBase(other)),
        }
    }
}

/// A strand read 5' to 3'.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DnaStrand(pub Vec<Base>);

impl fmt::Display for DnaStrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|b| write!(f, "{}", b.as_char()))
    }
}

impl FromStr for DnaStrand {
    type Err = CodeError;
    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(Base::from_char).collect::<Result<Vec<_>>>().map(DnaStrand)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct WeightTriple {
    pub hamming: u32,
    pub lee: u32,
    pub euclidean: u32,
}

/// A word of length `n` over `R`, held as `a(x) + u b(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingWord {
    n: usize,
    a: BinPoly,
    b: BinPoly,
}

impl RingWord {
    pub fn zero(n: usize) -> Self {
        Self { n, a: BinPoly::zero(), b: BinPoly::zero() }
    }

    /// Planes must have degree below `n`.
    pub fn from_planes(n: usize, a: BinPoly, b: BinPoly) -> Result<Self> {
        for p in [&a, &b] {
            if let Some(d) = p.degree() {
                if d >= n {
                    return Err(CodeError::LengthMismatch { expected: n, got: d + 1 });
                }
            }
        }
        Ok(Self { n, a, b })
    }

    pub fn from_elems(elems: &[RingElem]) -> Self {
        let mut a = BinPoly::zero();
        let mut b = BinPoly::zero();
        for (i, e) in elems.iter().enumerate() {
            a.set_coeff(i, e.a);
            b.set_coeff(i, e.b);
        }
        Self { n: elems.len(), a, b }
    }

    /// `u * (all-ones)`, the word `uI(x)`.
    pub fn u_all_ones(n: usize) -> Self {
        Self { n, a: BinPoly::zero(), b: BinPoly::all_ones(n) }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn a_plane(&self) -> &BinPoly {
        &self.a
    }

    pub fn b_plane(&self) -> &BinPoly {
        &self.b
    }

    pub fn get(&self, i: usize) -> RingElem {
        RingElem::new(self.a.coeff(i), self.b.coeff(i))
    }

    pub fn elems(&self) -> Vec<RingElem> {
        (0..self.n).map(|i| self.get(i)).collect()
    }

    /// Coordinatewise `x + u`.
    pub fn complement(&self) -> Self {
        Self { n: self.n, a: self.a.clone(), b: &self.b + &BinPoly::all_ones(self.n) }
    }

    pub fn reverse(&self) -> Self {
        Self { n: self.n, a: self.a.reverse_within(self.n), b: self.b.reverse_within(self.n) }
    }

    pub fn reverse_complement(&self) -> Self {
        self.complement().reverse()
    }

    /// `u * w`: the a-plane moves to the u-part.
    pub fn times_u(&self) -> Self {
        Self { n: self.n, a: BinPoly::zero(), b: self.a.clone() }
    }

    /// Multiplication by `x^k` in `R[x]/(x^n - 1)`.
    pub fn cyclic_shift(&self, k: usize) -> Self {
        let n = self.n;
        let rot = |p: &BinPoly| {
            p.exponents().fold(BinPoly::zero(), |mut acc, e| {
                acc.set_coeff((e + k) % n, true);
                acc
            })
        };
        Self { n, a: rot(&self.a), b: rot(&self.b) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self { n: self.n, a: &self.a + &other.a, b: &self.b + &other.b })
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(CodeError::LengthMismatch { expected: self.n, got: other.n })
        }
    }

    /// Counts of coordinates equal to `1`, `u`, `1+u`.
    pub fn composition(&self) -> (u32, u32, u32) {
        let both = self.a.limbs().iter().zip(self.b.limbs()).map(|(x, y)| (x & y).count_ones()).sum::<u32>();
        let wa = self.a.weight();
        let wb = self.b.weight();
        (wa - both, wb - both, both)
    }

    pub fn weights(&self) -> WeightTriple {
        let (n1, nu, n1u) = self.composition();
        WeightTriple {
            hamming: n1 + nu + n1u,
            lee: n1 + 2 * nu + n1u,
            euclidean: n1 + 4 * nu + n1u,
        }
    }

    /// Number of G/C letters, `n_1 + n_{1+u}`.
    pub fn gc_weight(&self) -> u32 {
        self.a.weight()
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<u32> {
        Ok(self.add(other)?.weights().hamming)
    }

    pub fn to_dna(&self) -> DnaStrand {
        DnaStrand((0..self.n).map(|i| self.get(i).to_base()).collect())
    }

    pub fn from_dna(s: &DnaStrand) -> Self {
        Self::from_elems(&s.0.iter().map(|b| b.to_elem()).collect::<Vec<_>>())
    }

    /// Per coordinate `a + ub -> (b, a + b)`, concatenated.
    pub fn gray_image(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(2 * self.n);
        for e in self.elems() {
            out.push(e.b);
            out.push(e.a ^ e.b);
        }
        out
    }
}

impl fmt::Display for RingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        write!(f, ")")
    }
}

/// Writes one FASTA record per word, numbered from `first_index`.
pub fn write_fasta<'a, W: Write + ?Sized, I>(out: &mut W, words: I, first_index: usize) -> io::Result<usize>
where
    I: IntoIterator<Item = &'a RingWord>,
{
    let mut count = 0;
    for (k, w) in words.into_iter().enumerate() {
        write_fasta_record(out, first_index + k, w)?;
        count += 1;
    }
    Ok(count)
}

pub fn write_fasta_record<W: Write + ?Sized>(out: &mut W, index: usize, w: &RingWord) -> io::Result<()> {
    let wt = w.weights();
    writeln!(out, ">cw{index} gc={} wH={} wL={}", w.gc_weight(), wt.hamming, wt.lee)?;
    writeln!(out, "{}", w.to_dna())
}
