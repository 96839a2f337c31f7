//! Polynomials over GF(2), bit-packed into 64-bit limbs.
//!
//! Bit `i` of the packed representation is the coefficient of `x^i`.
//! Addition is XOR; multiplication is carry-less shift-and-XOR.
//!
//! Two text forms are accepted and produced:
//!
//! ```text
//! x^6+x^3+1   symbolic, descending exponents
//! 4900        hex bytes, little-endian (byte 0 holds x^0..x^7)
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::{CodeError, Result};

/// A polynomial over GF(2). Trailing zero limbs are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinPoly {
    limbs: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { limbs: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self { limbs: vec![2] }
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(k, true);
        p
    }

    /// `x^n + 1`, which is `x^n - 1` in characteristic 2.
    pub fn x_n_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.flip_coeff(0);
        p
    }

    /// `1 + x + ... + x^(n-1)`, the all-one word of length `n`.
    pub fn all_ones(n: usize) -> Self {
        let mut limbs = vec![u64::MAX; n / 64];
        if !n.is_multiple_of(64) {
            limbs.push((1u64 << (n % 64)) - 1);
        }
        Self::from_limbs(limbs)
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_limbs(vec![bits])
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Self { limbs };
        p.normalize();
        p
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.flip_coeff(e);
        }
        p
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|limb| (limb >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        if self.coeff(i) != value {
            self.flip_coeff(i);
        }
    }

    pub fn flip_coeff(&mut self, i: usize) {
        let limb = i / 64;
        if limb >= self.limbs.len() {
            self.limbs.resize(limb + 1, 0);
        }
        self.limbs[limb] ^= 1u64 << (i % 64);
        self.normalize();
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(i, &limb)| {
            let mut rest = limb;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    /// `self ^= other << shift`, in place.
    fn xor_shifted(&mut self, other: &[u64], shift: usize) {
        if other.is_empty() {
            return;
        }
        let word = shift / 64;
        let bit = shift % 64;
        let need = word + other.len() + usize::from(bit != 0);
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        if bit == 0 {
            for (dst, &src) in self.limbs[word..].iter_mut().zip(other) {
                *dst ^= src;
            }
        } else {
            let mut carry = 0u64;
            for (i, &src) in other.iter().enumerate() {
                self.limbs[word + i] ^= (src << bit) | carry;
                carry = src >> (64 - bit);
            }
            self.limbs[word + other.len()] ^= carry;
        }
    }

    pub fn shl(&self, k: usize) -> Self {
        let mut out = Self::zero();
        out.xor_shifted(&self.limbs, k);
        out.normalize();
        out
    }

    /// Truncate to the coefficients of `x^0 .. x^(n-1)`.
    pub fn truncated(&self, n: usize) -> Self {
        let mut limbs: Vec<u64> = self.limbs.iter().take(n.div_ceil(64)).copied().collect();
        if !n.is_multiple_of(64) {
            if let Some(last) = limbs.get_mut(n / 64) {
                *last &= (1u64 << (n % 64)) - 1;
            }
        }
        Self::from_limbs(limbs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (small, large) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero();
        for e in small.exponents() {
            out.xor_shifted(&large.limbs, e);
        }
        out.normalize();
        out
    }

    pub fn square(&self) -> Self {
        // Squaring spreads bit i to bit 2i.
        let mut limbs = Vec::with_capacity(self.limbs.len() * 2);
        for &limb in &self.limbs {
            limbs.push(spread_bits(limb as u32));
            limbs.push(spread_bits((limb >> 32) as u32));
        }
        Self::from_limbs(limbs)
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(CodeError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            quot.flip_coeff(shift);
            rem.xor_shifted(&divisor.limbs, shift);
            rem.normalize();
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor.degree().ok_or(CodeError::DivisionByZero)?;
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            rem.xor_shifted(&divisor.limbs, dr - dd);
            rem.normalize();
        }
        Ok(rem)
    }

    /// `Some(quotient)` when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.rem(self), Ok(r) if r.is_zero())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        self.mul(other).rem(modulus)
    }

    /// Product reduced modulo `x^n - 1`, i.e. cyclic convolution of length `n`.
    pub fn mul_cyclic(&self, other: &Self, n: usize) -> Self {
        let full = self.mul(other);
        let mut out = full.truncated(n);
        let mut high = Self::from_limbs(full.limbs.clone());
        loop {
            high = high.shr(n);
            if high.is_zero() {
                break;
            }
            out += &high.truncated(n);
        }
        out
    }

    fn shr(&self, k: usize) -> Self {
        let word = k / 64;
        let bit = k % 64;
        if word >= self.limbs.len() {
            return Self::zero();
        }
        let src = &self.limbs[word..];
        let mut limbs = Vec::with_capacity(src.len());
        for i in 0..src.len() {
            let lo = src[i] >> bit;
            let hi = if bit != 0 && i + 1 < src.len() {
                src[i + 1] << (64 - bit)
            } else {
                0
            };
            limbs.push(lo | hi);
        }
        Self::from_limbs(limbs)
    }

    /// Reciprocal `x^deg f * f(1/x)`: coefficients reversed down to the degree.
    pub fn reciprocal(&self) -> Result<Self> {
        let d = self.degree().ok_or(CodeError::ZeroPolynomial)?;
        Ok(Self::from_exponents(self.exponents().map(|e| d - e)))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        matches!(self.reciprocal(), Ok(r) if &r == self)
    }

    /// Coefficients of `x^0 .. x^(n-1)` reversed: the word reversal of a
    /// length-`n` vector stored as a polynomial.
    pub fn reverse_within(&self, n: usize) -> Self {
        Self::from_exponents(self.exponents().filter(|&e| e < n).map(|e| n - 1 - e))
    }

    /// Little-endian hex; the zero polynomial encodes as `"00"`.
    pub fn to_hex(&self) -> String {
        let mut bytes: Vec<u8> = self.limbs.iter().flat_map(|l| l.to_le_bytes()).collect();
        while bytes.len() > 1 && bytes.last() == Some(&0) {
            bytes.pop();
        }
        if bytes.is_empty() {
            bytes.push(0);
        }
        bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || !s.len().is_multiple_of(2) || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(CodeError::PolyParse(s.to_string()));
        }
        let bytes: Vec<u8> = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).expect("validated hex"))
            .collect();
        let limbs = bytes
            .chunks(8)
            .map(|chunk| {
                let mut buf = [0u8; 8];
                buf[..chunk.len()].copy_from_slice(chunk);
                u64::from_le_bytes(buf)
            })
            .collect();
        Ok(Self::from_limbs(limbs))
    }

    /// Parses the symbolic form `x^6+x^3+1`. Repeated terms cancel.
    pub fn from_symbolic(s: &str) -> Result<Self> {
        let err = || CodeError::PolyParse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in compact.split('+') {
            let exp = match term {
                "1" => 0,
                "x" | "X" => 1,
                _ => {
                    let rest = term
                        .strip_prefix("x^")
                        .or_else(|| term.strip_prefix("X^"))
                        .ok_or_else(err)?;
                    rest.parse::<usize>().map_err(|_| err())?
                }
            };
            p.flip_coeff(exp);
        }
        Ok(p)
    }
}

fn spread_bits(v: u32) -> u64 {
    let mut x = v as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let exps: Vec<usize> = self.exponents().collect();
        let terms: Vec<String> = exps
            .iter()
            .rev()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl FromStr for BinPoly {
    type Err = CodeError;

    /// Symbolic when the text contains `x` or is a bare `0`/`1`, hex otherwise.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.contains(['x', 'X']) || t == "0" || t == "1" {
            Self::from_symbolic(t)
        } else {
            Self::from_hex(t)
        }
    }
}

impl AddAssign<&BinPoly> for BinPoly {
    fn add_assign(&mut self, rhs: &BinPoly) {
        self.xor_shifted(&rhs.limbs, 0);
        self.normalize();
    }
}

impl Add<&BinPoly> for &BinPoly {
    type Output = BinPoly;
    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BinPoly {
    type Output = BinPoly;
    fn add(mut self, rhs: BinPoly) -> BinPoly {
        self += &rhs;
        self
    }
}

impl Mul<&BinPoly> for &BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: &BinPoly) -> BinPoly {
        BinPoly::mul(self, rhs)
    }
}

impl Mul for BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: BinPoly) -> BinPoly {
        BinPoly::mul(&self, &rhs)
    }
}
