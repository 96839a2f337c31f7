use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Distance, Metric, Provenance, WeightEnumerator};
use crate::cyclotomic::check_odd;
use crate::error::{CodeError, Result};
use crate::gf2::{factor_cached, BinPoly};
use crate::packed::{span_walk, Bits, Visitor};
use crate::with_limbs;

/// Binary cyclic code `<g>` of odd length `n`, `g | x^n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryCyclicCode {
    pub n: usize,
    #[serde(serialize_with = "crate::code::report::poly_text")]
    pub generator: BinPoly,
}

struct Hist(Vec<u64>);

impl<const L: usize> Visitor<Bits<L>> for Hist {
    #[inline]
    fn visit(&mut self, w: &Bits<L>) {
        self.0[w.count_ones() as usize] += 1;
    }
    fn merge(&mut self, other: Self) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
    }
}

impl BinaryCyclicCode {
    pub fn new(n: usize, generator: BinPoly) -> Result<Self> {
        check_odd(n)?;
        if !generator.divides(&BinPoly::x_n_minus_one(n)) {
            return Err(CodeError::Divisibility(format!("{generator} does not divide x^{n}-1")));
        }
        Ok(Self { n, generator })
    }

    /// The code with check polynomial `h`, i.e. generator `(x^n - 1) / h`.
    pub fn from_check_polynomial(n: usize, h: &BinPoly) -> Result<Self> {
        let g = BinPoly::x_n_minus_one(n)
            .exact_div(h)?
            .ok_or_else(|| CodeError::Divisibility(format!("{h} does not divide x^{n}-1")))?;
        Self::new(n, g)
    }

    pub fn dimension(&self) -> usize {
        self.n - self.generator.degree().expect("nonzero generator")
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    /// `x^i g` for `i < k`.
    pub fn basis(&self) -> Vec<BinPoly> {
        (0..self.dimension()).map(|i| self.generator.shl(i)).collect()
    }

    pub fn contains(&self, w: &BinPoly) -> bool {
        w.degree().is_none_or(|d| d < self.n) && self.generator.divides(w)
    }

    /// The dual code `<h*>` with `h = (x^n - 1) / g`.
    pub fn dual(&self) -> Result<Self> {
        let h = BinPoly::x_n_minus_one(self.n).exact_div(&self.generator)?.expect("generator divides");
        Self::new(self.n, h.reciprocal()?)
    }

    pub fn weight_enumerator(&self, budget: u32) -> Result<WeightEnumerator> {
        let k = self.dimension();
        if k > budget as usize {
            return Err(CodeError::BudgetExceeded { needed: k, budget });
        }
        let n = self.n;
        let basis = self.basis();
        with_limbs!(n, L => {
            let rows: Vec<Bits<L>> = basis.iter().map(Bits::from_poly).collect::<Result<_>>()?;
            let hist = span_walk(&rows, || Hist(vec![0; n + 1]));
            Ok(WeightEnumerator::from_histogram(Metric::Hamming, &hist.0))
        })
    }

    /// Certified bounds: BCH-type bound below; above, the lightest codeword
    /// found (generator weight, improved by an information-set search when
    /// `n <= 128`).
    pub fn distance_bounds(&self) -> Result<(usize, usize)> {
        let f = factor_cached(self.n)?;
        let mut upper = self.generator.weight() as usize;
        if self.n <= 128 {
            if let Some(w) = low_weight_search(&self.basis(), self.n, ISD_ROUNDS) {
                upper = upper.min(w as usize);
            }
        }
        Ok((f.bch_bound(&self.generator).min(upper), upper))
    }

    pub fn min_distance(&self, budget: u32) -> Result<Distance> {
        if self.is_zero_code() {
            return Ok(Distance::degenerate());
        }
        if self.dimension() <= budget as usize {
            let e = self.weight_enumerator(budget)?;
            let d = e.min_nonzero().expect("nonzero code has a nonzero word");
            return Ok(Distance::exact(d, Provenance::BruteForce));
        }
        let (lo, hi) = self.distance_bounds()?;
        Ok(Distance::bounded(lo, hi))
    }
}

const ISD_ROUNDS: usize = 200;

/// Lightest nonzero word seen while putting random column orders into
/// systematic form (Lee-Brickell with `p <= 2`). Every reported weight is
/// that of an actual codeword, so the result is an upper bound on `d`.
/// The generator is seeded, so results are reproducible.
pub fn low_weight_search(rows: &[BinPoly], n: usize, rounds: usize) -> Option<u32> {
    assert!(n <= 128, "search works on 128-bit rows");
    let base: Vec<u128> = rows
        .iter()
        .map(|p| p.limbs().iter().enumerate().fold(0u128, |acc, (i, &l)| acc | (l as u128) << (64 * i)))
        .filter(|&r| r != 0)
        .collect();
    if base.is_empty() {
        return None;
    }
    let mut best = base.iter().map(|r| r.count_ones()).min().expect("nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..rounds {
        order.shuffle(&mut rng);
        let mut m = base.clone();
        let mut rank = 0;
        for &col in &order {
            if rank == m.len() {
                break;
            }
            let bit = 1u128 << col;
            let Some(p) = (rank..m.len()).find(|&i| m[i] & bit != 0) else { continue };
            m.swap(rank, p);
            let pivot = m[rank];
            for (i, r) in m.iter_mut().enumerate() {
                if i != rank && *r & bit != 0 {
                    *r ^= pivot;
                }
            }
            rank += 1;
        }
        let m = &m[..rank];
        for (i, a) in m.iter().enumerate() {
            best = best.min(a.count_ones());
            for b in &m[i + 1..] {
                best = best.min((a ^ b).count_ones());
            }
        }
    }
    Some(best)
}
