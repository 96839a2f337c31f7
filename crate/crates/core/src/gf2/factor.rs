//! Minimal polynomials and the factorization of `x^n - 1` over GF(2).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::field::{ExtensionField, FieldContext, WideField, MAX_TABLE_DEGREE};
use super::poly::BinPoly;
use crate::cyclotomic::{build_cosets, check_odd, CosetTable};
use crate::error::{CodeError, Result};

/// `prod_{i in coset} (x - alpha^i)` with `alpha` the field's designated
/// primitive `n`-th root of unity.
pub fn minimal_polynomial<F: ExtensionField>(n: usize, coset: &[usize], field: &F) -> Result<BinPoly> {
    check_odd(n)?;
    let mut members = coset.to_vec();
    members.sort_unstable();
    members.dedup();
    let closed = !members.is_empty()
        && members.len() == coset.len()
        && members.iter().all(|&i| i < n && members.binary_search(&(2 * i % n)).is_ok());
    if !closed {
        return Err(CodeError::NotACoset { n, members: coset.to_vec() });
    }
    // Closed under doubling but a union of several orbits is not a coset either.
    let orbit_len = {
        let start = members[0];
        let mut i = 2 * start % n;
        let mut len = 1;
        while i != start {
            i = 2 * i % n;
            len += 1;
        }
        len
    };
    if orbit_len != members.len() {
        return Err(CodeError::NotACoset { n, members: coset.to_vec() });
    }
    let alpha = field.root_of_unity(n)?;
    let mut coeffs = vec![field.one()];
    for &i in &members {
        let root = field.pow(&alpha, i as u64);
        // multiply by (x + root)
        let mut next = vec![field.zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = field.add(&next[j + 1], c);
            next[j] = field.add(&next[j], &field.mul(c, &root));
        }
        coeffs = next;
    }
    let mut out = BinPoly::zero();
    for (j, c) in coeffs.iter().enumerate() {
        match field.as_bit(c) {
            Some(true) => out.set_coeff(j, true),
            Some(false) => {}
            None => {
                return Err(CodeError::Inconsistent(format!(
                    "minimal polynomial coefficient of x^{j} is not binary"
                )))
            }
        }
    }
    Ok(out)
}

/// `x^n - 1` split into irreducible factors, one per 2-cyclotomic coset.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub n: usize,
    /// `ord_n(2)`, the degree of the splitting field.
    pub field_degree: usize,
    pub cosets: CosetTable,
    /// Coset representative to minimal polynomial.
    pub factors: BTreeMap<usize, BinPoly>,
}

pub fn factor_xn1(n: usize) -> Result<Factorization> {
    let cosets = build_cosets(n)?;
    let m = cosets.ord2;
    let mut factors = BTreeMap::new();
    if m <= MAX_TABLE_DEGREE as usize {
        let field = FieldContext::cached(m as u32)?;
        for c in cosets.iter() {
            factors.insert(c.rep, minimal_polynomial(n, &c.members, field)?);
        }
    } else {
        let field = WideField::new(m as u32)?;
        for c in cosets.iter() {
            factors.insert(c.rep, minimal_polynomial(n, &c.members, &field)?);
        }
    }
    Ok(Factorization { n, field_degree: m, cosets, factors })
}

/// Memoized [`factor_xn1`]; factorizations are immutable once built.
pub fn factor_cached(n: usize) -> Result<Arc<Factorization>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Factorization>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("factor cache poisoned").get(&n) {
        return Ok(f.clone());
    }
    let f = Arc::new(factor_xn1(n)?);
    cache.lock().expect("factor cache poisoned").insert(n, f.clone());
    Ok(f)
}

impl Factorization {
    pub fn product(&self) -> BinPoly {
        self.factors.values().fold(BinPoly::one(), |acc, f| &acc * f)
    }

    /// Minimal polynomial of `alpha^i`.
    pub fn minimal_of(&self, i: usize) -> &BinPoly {
        &self.factors[&self.cosets.coset_of(i).rep]
    }

    /// Product of the minimal polynomials of the given coset representatives
    /// (or any coset members; duplicates collapse to one factor).
    pub fn product_of<I: IntoIterator<Item = usize>>(&self, members: I) -> BinPoly {
        let reps: std::collections::BTreeSet<usize> =
            members.into_iter().map(|i| self.cosets.coset_of(i).rep).collect();
        reps.iter().fold(BinPoly::one(), |acc, r| &acc * &self.factors[r])
    }

    /// Representatives of the factors dividing `g`; `g` must divide `x^n - 1`.
    pub fn factor_reps_of(&self, g: &BinPoly) -> Vec<usize> {
        self.factors.iter().filter(|(_, f)| f.divides(g)).map(|(&r, _)| r).collect()
    }

    /// Exponents `i` with `g(alpha^i) = 0`.
    pub fn zero_set(&self, g: &BinPoly) -> Vec<usize> {
        let mut zeros: Vec<usize> = self
            .factor_reps_of(g)
            .into_iter()
            .flat_map(|r| self.cosets.coset_of(r).members.clone())
            .collect();
        zeros.sort_unstable();
        zeros
    }

    /// All divisors of `x^n - 1`, indexed by subsets of the factor list.
    pub fn divisors(&self) -> Vec<(u64, BinPoly)> {
        let polys: Vec<&BinPoly> = self.factors.values().collect();
        assert!(polys.len() < 64, "too many factors to index");
        (0u64..1 << polys.len())
            .map(|mask| {
                let g = polys
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(BinPoly::one(), |acc, (_, f)| &acc * *f);
                (mask, g)
            })
            .collect()
    }

    /// Every chain `f1 | f0 | x^n - 1`, as `(f0, f1)` pairs.
    pub fn divisor_chains(&self) -> Vec<(BinPoly, BinPoly)> {
        let divisors = self.divisors();
        let mut out = Vec::new();
        for (m0, f0) in &divisors {
            for (m1, f1) in &divisors {
                if m1 & !m0 == 0 {
                    out.push((f0.clone(), f1.clone()));
                }
            }
        }
        out
    }

    /// BCH-type lower bound on the minimum distance of `<g>`: one more than
    /// the longest run `b, b+s, ..., b+(L-1)s` of zeros with `gcd(s, n) = 1`.
    pub fn bch_bound(&self, g: &BinPoly) -> usize {
        let n = self.n;
        let mut is_zero = vec![false; n];
        for i in self.zero_set(g) {
            is_zero[i] = true;
        }
        if is_zero.iter().all(|&z| z) {
            return n + 1;
        }
        let mut best = 0;
        for s in 1..n.max(2) {
            if gcd(s, n) != 1 {
                continue;
            }
            // The zero set is closed under doubling, so steps in one coset of
            // the unit group modulo <2> give the same runs; scanning all is
            // still cheap for the lengths we handle.
            for b in 0..n {
                if !is_zero[b] || is_zero[(b + n - s % n) % n] {
                    continue;
                }
                let mut len = 0;
                let mut i = b;
                while is_zero[i] && len < n {
                    len += 1;
                    i = (i + s) % n;
                }
                best = best.max(len);
            }
        }
        best + 1
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
