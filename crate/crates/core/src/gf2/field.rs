//! Extension fields GF(2^m).
//!
//! [`FieldContext`] is the table-driven field for `m <= 20`, built from a
//! fixed primitive modulus so that root-of-unity choices (and therefore
//! minimal polynomial labels) are reproducible. [`WideField`] covers larger
//! degrees with plain polynomial-basis arithmetic; it is only needed when the
//! splitting field of `x^n - 1` is too large for log tables.

use std::fmt::Debug;
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::poly::BinPoly;
use crate::error::{CodeError, Result};

pub const MAX_TABLE_DEGREE: u32 = 20;

/// One primitive polynomial per degree, bit `i` = coefficient of `x^i`.
const PRIMITIVE_MODULI: [u32; 21] = [
    0,
    0b11,      // x + 1
    0x7,       // x^2 + x + 1
    0xB,       // x^3 + x + 1
    0x13,      // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x43,      // x^6 + x + 1
    0x89,      // x^7 + x^3 + 1
    0x11D,     // x^8 + x^4 + x^3 + x^2 + 1
    0x211,     // x^9 + x^4 + 1
    0x409,     // x^10 + x^3 + 1
    0x805,     // x^11 + x^2 + 1
    0x1053,    // x^12 + x^6 + x^4 + x + 1
    0x201B,    // x^13 + x^4 + x^3 + x + 1
    0x4443,    // x^14 + x^10 + x^6 + x + 1
    0x8003,    // x^15 + x + 1
    0x1100B,   // x^16 + x^12 + x^3 + x + 1
    0x20009,   // x^17 + x^3 + 1
    0x40081,   // x^18 + x^7 + 1
    0x80027,   // x^19 + x^5 + x^2 + x + 1
    0x100009,  // x^20 + x^3 + 1
];

/// Arithmetic shared by the table-driven and wide fields.
pub trait ExtensionField {
    type Elem: Clone + PartialEq + Debug;

    fn degree(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `Some(bit)` when the element lies in the prime field GF(2).
    fn as_bit(&self, a: &Self::Elem) -> Option<bool>;

    /// The designated primitive `n`-th root of unity.
    fn root_of_unity(&self, n: usize) -> Result<Self::Elem>;

    fn pow(&self, base: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut b = base.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }
}

/// GF(2^m) for `1 <= m <= 20` with log/antilog tables.
#[derive(Debug, Clone)]
pub struct FieldContext {
    m: u32,
    modulus: BinPoly,
    log: Vec<u32>,
    antilog: Vec<u32>,
}

impl FieldContext {
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_TABLE_DEGREE).contains(&m) {
            return Err(CodeError::FieldDegree(m));
        }
        let modulus_bits = PRIMITIVE_MODULI[m as usize];
        let order = (1usize << m) - 1;
        let top = 1u32 << m;
        let mut antilog = Vec::with_capacity(order);
        let mut log = vec![u32::MAX; 1 << m];
        let mut x = 1u32;
        for i in 0..order {
            if i > 0 && x == 1 {
                return Err(CodeError::Inconsistent(format!(
                    "modulus for m = {m} has order {i}, not {order}"
                )));
            }
            antilog.push(x);
            log[x as usize] = i as u32;
            x <<= 1;
            if x & top != 0 {
                x ^= modulus_bits;
            }
        }
        if x != 1 {
            return Err(CodeError::Inconsistent(format!("modulus for m = {m} is not primitive")));
        }
        Ok(Self {
            m,
            modulus: BinPoly::from_u64(modulus_bits as u64),
            log,
            antilog,
        })
    }

    /// Shared, lazily built instance per degree.
    pub fn cached(m: u32) -> Result<&'static Self> {
        static CACHE: [OnceLock<FieldContext>; 21] = [const { OnceLock::new() }; 21];
        if !(1..=MAX_TABLE_DEGREE).contains(&m) {
            return Err(CodeError::FieldDegree(m));
        }
        let slot = &CACHE[m as usize];
        if let Some(ctx) = slot.get() {
            return Ok(ctx);
        }
        let ctx = Self::new(m)?;
        Ok(slot.get_or_init(|| ctx))
    }

    pub fn modulus(&self) -> &BinPoly {
        &self.modulus
    }

    /// Size of the multiplicative group, `2^m - 1`.
    pub fn order(&self) -> usize {
        self.antilog.len()
    }

    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn antilog(&self, i: usize) -> u32 {
        self.antilog[i % self.order()]
    }
}

impl ExtensionField for FieldContext {
    type Elem = u32;

    fn degree(&self) -> u32 {
        self.m
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        a ^ b
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let s = self.log[*a as usize] as usize + self.log[*b as usize] as usize;
        self.antilog[s % self.order()]
    }

    fn as_bit(&self, a: &u32) -> Option<bool> {
        match a {
            0 => Some(false),
            1 => Some(true),
            _ => None,
        }
    }

    /// `beta^((2^m - 1) / n)` where `beta` is the root of the table modulus.
    fn root_of_unity(&self, n: usize) -> Result<u32> {
        if n == 0 || !self.order().is_multiple_of(n) {
            return Err(CodeError::RootOrder { n, m: self.m });
        }
        Ok(self.antilog[(self.order() / n) % self.order()])
    }
}

/// GF(2^m) of any degree, elements reduced modulo an irreducible polynomial.
#[derive(Debug, Clone)]
pub struct WideField {
    m: u32,
    modulus: BinPoly,
}

impl WideField {
    /// Uses the first irreducible `x^m + c(x)` in increasing order of `c`.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(CodeError::FieldDegree(m));
        }
        let lead = BinPoly::monomial(m as usize);
        for c in (1u64..).step_by(2) {
            let candidate = &lead + &BinPoly::from_u64(c);
            if candidate.degree() != Some(m as usize) {
                break;
            }
            if is_irreducible(&candidate) {
                return Ok(Self { m, modulus: candidate });
            }
        }
        Err(CodeError::Inconsistent(format!("no irreducible polynomial of degree {m} found")))
    }

    pub fn modulus(&self) -> &BinPoly {
        &self.modulus
    }

    fn pow_big(&self, base: &BinPoly, e: &BigUint) -> BinPoly {
        let mut acc = BinPoly::one();
        for i in (0..e.bits()).rev() {
            acc = acc.square().rem(&self.modulus).expect("nonzero modulus");
            if e.bit(i) {
                acc = self.mul(&acc, base);
            }
        }
        acc
    }
}

impl ExtensionField for WideField {
    type Elem = BinPoly;

    fn degree(&self) -> u32 {
        self.m
    }

    fn zero(&self) -> BinPoly {
        BinPoly::zero()
    }

    fn one(&self) -> BinPoly {
        BinPoly::one()
    }

    fn add(&self, a: &BinPoly, b: &BinPoly) -> BinPoly {
        a + b
    }

    fn mul(&self, a: &BinPoly, b: &BinPoly) -> BinPoly {
        a.mul_mod(b, &self.modulus).expect("nonzero modulus")
    }

    fn as_bit(&self, a: &BinPoly) -> Option<bool> {
        if a.is_zero() {
            Some(false)
        } else if a.is_one() {
            Some(true)
        } else {
            None
        }
    }

    /// `g^((2^m - 1) / n)` for the first small `g` whose image has order
    /// exactly `n`.
    fn root_of_unity(&self, n: usize) -> Result<BinPoly> {
        let group = (BigUint::from(1u8) << self.m) - 1u8;
        if n == 0 || &group % n != BigUint::from(0u8) {
            return Err(CodeError::RootOrder { n, m: self.m });
        }
        let cofactor = &group / n;
        let primes = prime_divisors(n);
        for g in 2u64.. {
            let g = BinPoly::from_u64(g).rem(&self.modulus)?;
            if g.is_zero() {
                continue;
            }
            let alpha = self.pow_big(&g, &cofactor);
            if primes.iter().all(|&p| !self.pow(&alpha, (n / p) as u64).is_one()) {
                return Ok(alpha);
            }
        }
        unreachable!("the cyclic group of order 2^m - 1 has an element of every dividing order")
    }
}

/// Rabin's irreducibility test over GF(2).
pub fn is_irreducible(f: &BinPoly) -> bool {
    let Some(m) = f.degree() else { return false };
    if m == 0 {
        return false;
    }
    let x = BinPoly::x().rem(f).expect("nonzero");
    // powers[k] = x^(2^k) mod f
    let mut powers = Vec::with_capacity(m + 1);
    powers.push(x.clone());
    for k in 1..=m {
        let next = powers[k - 1].square().rem(f).expect("nonzero");
        powers.push(next);
    }
    if powers[m] != x {
        return false;
    }
    prime_divisors(m).into_iter().all(|p| {
        let h = &powers[m / p] + &x;
        h.gcd(f).is_one()
    })
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_modulus_is_primitive() {
        for m in 1..=MAX_TABLE_DEGREE {
            let ctx = FieldContext::new(m).unwrap();
            assert_eq!(ctx.order(), (1usize << m) - 1);
            assert_eq!(ctx.modulus().degree(), Some(m as usize));
            assert!(is_irreducible(ctx.modulus()), "m = {m}");
        }
    }

    #[test]
    fn gf8_uses_x3_x_1() {
        let ctx = FieldContext::new(3).unwrap();
        assert_eq!(ctx.modulus().to_string(), "x^3+x+1");
        // Order check by brute force: beta^i != 1 for 0 < i < 7.
        let beta = ctx.antilog(1);
        for i in 1..7 {
            assert_ne!(ctx.pow(&beta, i), 1);
        }
        assert_eq!(ctx.pow(&beta, 7), 1);
        for a in 1..8u32 {
            assert_eq!(ctx.antilog(ctx.log(a).unwrap() as usize), a);
        }
    }

    #[test]
    fn prime_field_case() {
        let ctx = FieldContext::new(1).unwrap();
        assert_eq!(ctx.order(), 1);
        assert_eq!(ctx.root_of_unity(1).unwrap(), 1);
    }

    #[test]
    fn degree_out_of_range() {
        assert_eq!(FieldContext::new(21).unwrap_err(), CodeError::FieldDegree(21));
        assert_eq!(FieldContext::new(0).unwrap_err(), CodeError::FieldDegree(0));
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        let ctx = FieldContext::new(6).unwrap();
        for n in [3usize, 7, 9, 21, 63] {
            let a = ctx.root_of_unity(n).unwrap();
            assert_eq!(ctx.pow(&a, n as u64), 1);
            for d in 1..n {
                if n % d == 0 {
                    assert_ne!(ctx.pow(&a, d as u64), 1, "n = {n}, d = {d}");
                }
            }
        }
        assert!(ctx.root_of_unity(5).is_err());
    }

    #[test]
    fn wide_field_root_of_unity() {
        // ord_29(2) = 28
        let f = WideField::new(28).unwrap();
        assert!(is_irreducible(f.modulus()));
        let a = f.root_of_unity(29).unwrap();
        assert!(f.pow(&a, 29).is_one());
        assert!(!a.is_one());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&"x^2+x+1".parse().unwrap()));
        assert!(!is_irreducible(&"x^2+1".parse().unwrap()));
        assert!(!is_irreducible(&"x^4+x^2+1".parse().unwrap()));
        assert!(is_irreducible(&"x^6+x^3+1".parse().unwrap()));
    }
}
