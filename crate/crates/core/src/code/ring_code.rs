use serde::Serialize;

use super::binary::BinaryCyclicCode;
use super::linalg::span_dimension;
use super::{Distance, Metric, Provenance, WeightEnumerator};
use crate::cyclotomic::check_odd;
use crate::error::{CodeError, Result};
use crate::gf2::BinPoly;
use crate::ring::RingWord;

/// The cyclic code `<f0, u f1>` over `R` with `f1 | f0 | x^n - 1`.
///
/// As a set it is `{ a + ub : a in <f0>, b in <f1> }`, which gives the
/// membership test, the enumeration basis and the distance formulas below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCodeR {
    pub n: usize,
    pub f0: BinPoly,
    pub f1: BinPoly,
    pub deg_f0: usize,
    pub deg_f1: usize,
    pub log2_size: usize,
    pub rank: usize,
}

pub fn make_code(n: usize, f0: BinPoly, f1: BinPoly) -> Result<CyclicCodeR> {
    CyclicCodeR::new(n, f0, f1)
}

/// GC content per u-coset: the cosets `x + u R^n` inside the code are
/// indexed by the residue word `a`, and every word of a coset has GC weight
/// `wt(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcProfile {
    /// Hamming enumerator of `<f0>`, one entry per u-coset.
    pub per_u_coset: WeightEnumerator,
    /// Words per u-coset, `2^(n - deg f1)`.
    pub coset_size: u64,
    /// Common GC weight of every nonzero u-coset, when there is one.
    pub fixed_nonzero: Option<usize>,
}

impl GcProfile {
    /// GC histogram over all codewords.
    pub fn full_histogram(&self) -> WeightEnumerator {
        let mut e = self.per_u_coset.scaled(self.coset_size);
        e.metric = Metric::Gc;
        e
    }
}

impl CyclicCodeR {
    pub fn new(n: usize, f0: BinPoly, f1: BinPoly) -> Result<Self> {
        check_odd(n)?;
        let xn1 = BinPoly::x_n_minus_one(n);
        if !f0.divides(&xn1) {
            return Err(CodeError::Divisibility(format!("f0 = {f0} does not divide x^{n}-1")));
        }
        if !f1.divides(&f0) {
            return Err(CodeError::Divisibility(format!("f1 = {f1} does not divide f0 = {f0}")));
        }
        let deg_f0 = f0.degree().expect("divisor of x^n-1 is nonzero");
        let deg_f1 = f1.degree().expect("divisor of x^n-1 is nonzero");
        Ok(Self { n, f0, f1, deg_f0, deg_f1, log2_size: 2 * n - deg_f0 - deg_f1, rank: n - deg_f1 })
    }

    pub fn residue_code(&self) -> BinaryCyclicCode {
        BinaryCyclicCode { n: self.n, generator: self.f0.clone() }
    }

    pub fn torsion_code(&self) -> BinaryCyclicCode {
        BinaryCyclicCode { n: self.n, generator: self.f1.clone() }
    }

    pub fn is_free(&self) -> bool {
        self.f0 == self.f1
    }

    pub fn is_zero_code(&self) -> bool {
        self.log2_size == 0
    }

    pub fn is_full_space(&self) -> bool {
        self.log2_size == 2 * self.n
    }

    pub fn degenerate_flags(&self) -> Vec<String> {
        let mut flags = Vec::new();
        if self.is_zero_code() {
            flags.push("zero_code".to_string());
        }
        if self.is_full_space() {
            flags.push("full_space".to_string());
        }
        if self.deg_f0 == self.n && !self.is_zero_code() {
            flags.push("zero_residue".to_string());
        }
        flags
    }

    pub fn contains(&self, w: &RingWord) -> Result<bool> {
        if w.len() != self.n {
            return Err(CodeError::LengthMismatch { expected: self.n, got: w.len() });
        }
        Ok(self.f0.divides(w.a_plane()) && self.f1.divides(w.b_plane()))
    }

    /// F2-basis of the code: `x^i f0`, `u x^i f0` for `i < n - deg f0`, then
    /// `u x^j f1` for `j < deg f0 - deg f1`.
    pub fn generator_rows(&self) -> Vec<RingWord> {
        let n = self.n;
        let k0 = n - self.deg_f0;
        let mut rows = Vec::with_capacity(self.log2_size);
        for i in 0..k0 {
            rows.push(RingWord::from_planes(n, self.f0.shl(i), BinPoly::zero()).expect("degree below n"));
        }
        for i in 0..k0 {
            rows.push(RingWord::from_planes(n, BinPoly::zero(), self.f0.shl(i)).expect("degree below n"));
        }
        for j in 0..self.deg_f0 - self.deg_f1 {
            rows.push(RingWord::from_planes(n, BinPoly::zero(), self.f1.shl(j)).expect("degree below n"));
        }
        rows
    }

    /// `log2 |C|` computed as the F2-dimension of the ideal spanned by all
    /// shifts of `f0`, `u f0` and `u f1`; independent of the closed formula.
    pub fn log2_size_by_rank(&self) -> usize {
        let n = self.n;
        let wrap = |p: &BinPoly, i: usize| p.mul_cyclic(&BinPoly::monomial(i), n);
        let mut vecs = Vec::with_capacity(3 * n);
        for i in 0..n {
            let s0 = wrap(&self.f0, i);
            vecs.push(s0.clone());
            vecs.push(s0.shl(n));
            vecs.push(wrap(&self.f1, i).shl(n));
        }
        span_dimension(vecs)
    }

    /// All codewords in Gray order of the generator rows.
    pub fn enumerate(&self, budget: u32) -> Result<impl Iterator<Item = RingWord>> {
        if self.log2_size > budget as usize {
            return Err(CodeError::BudgetExceeded { needed: self.log2_size, budget });
        }
        let rows = self.generator_rows();
        let mut current = RingWord::zero(self.n);
        let total = 1u64 << rows.len();
        Ok((0..total).map(move |i| {
            if i > 0 {
                current = current.add(&rows[i.trailing_zeros() as usize]).expect("same length");
            }
            current.clone()
        }))
    }

    pub fn is_reversible(&self) -> bool {
        self.f0.is_self_reciprocal() && self.f1.is_self_reciprocal()
    }

    /// `u (1 + x + ... + x^(n-1))` lies in the code iff `f1` divides the
    /// all-ones polynomial.
    pub fn contains_u_all_ones(&self) -> bool {
        self.f1.divides(&BinPoly::all_ones(self.n))
    }

    pub fn is_reverse_complement(&self) -> bool {
        self.is_reversible() && self.contains_u_all_ones()
    }

    /// Distances from the binary residue and torsion distances:
    /// `d_H = d(<f1>)`, `d_L = min(d(<f0>), 2 d(<f1>))`,
    /// `d_E = min(d(<f0>), 4 d(<f1>))`. A zero residue code contributes no
    /// term.
    pub fn distance_from_components(&self, metric: Metric, d0: &Distance, d1: &Distance) -> Distance {
        if self.is_zero_code() {
            return Distance::degenerate();
        }
        let candidates = match metric {
            Metric::Hamming => vec![(d1, 1)],
            Metric::Lee => vec![(d0, 1), (d1, 2)],
            Metric::Euclidean => vec![(d0, 1), (d1, 4)],
            Metric::Gc => unreachable!("GC weight is not a distance"),
        };
        let terms: Vec<(&Distance, usize)> = candidates.into_iter().filter(|(d, _)| !d.is_degenerate()).collect();
        let lo = terms.iter().map(|(d, f)| d.lower().expect("bounded") * f).min().expect("nonzero code");
        let hi = terms.iter().map(|(d, f)| d.upper().expect("bounded") * f).min().expect("nonzero code");
        if terms.iter().all(|(d, _)| d.value.is_some()) {
            let prov = if terms.iter().any(|(d, _)| d.provenance == Provenance::Bound) {
                Provenance::Bound
            } else {
                Provenance::Theorem
            };
            Distance::exact(lo, prov)
        } else {
            Distance::bounded(lo, hi)
        }
    }

    /// Minimum distance for `metric`. Exhaustive over the full code when it
    /// fits the budget (cross-checked against the component formula), else
    /// from the binary residue and torsion codes, else certified bounds.
    pub fn min_distance(&self, metric: Metric, budget: u32) -> Result<Distance> {
        if metric == Metric::Gc {
            return Err(CodeError::OutOfRange("GC weight has no minimum distance".into()));
        }
        if self.is_zero_code() {
            return Ok(Distance::degenerate());
        }
        let d0 = self.residue_code().min_distance(budget)?;
        let d1 = self.torsion_code().min_distance(budget)?;
        let from_parts = self.distance_from_components(metric, &d0, &d1);
        if self.log2_size <= budget as usize {
            let s = self.survey(budget, false)?;
            let direct = s.min_distance(metric).expect("nonzero code") as usize;
            if from_parts.lower().is_some_and(|l| l > direct) || from_parts.upper().is_some_and(|u| u < direct) {
                return Err(CodeError::Inconsistent(format!(
                    "{metric:?} distance {direct} outside the component value {from_parts:?}"
                )));
            }
            return Ok(Distance::exact(direct, Provenance::Both));
        }
        Ok(from_parts)
    }

    /// Hamming enumerator of the torsion code `<f1>`.
    pub fn gc_weight_enumerator(&self, budget: u32) -> Result<WeightEnumerator> {
        let mut e = self.torsion_code().weight_enumerator(budget)?;
        e.metric = Metric::Gc;
        Ok(e)
    }

    pub fn gc_profile(&self, budget: u32) -> Result<GcProfile> {
        let per_u_coset = self.residue_code().weight_enumerator(budget)?;
        let nonzero: Vec<usize> = per_u_coset.counts.keys().copied().filter(|&w| w > 0).collect();
        let fixed_nonzero = match nonzero.as_slice() {
            [w] => Some(*w),
            _ => None,
        };
        Ok(GcProfile { per_u_coset, coset_size: 1u64 << (self.n - self.deg_f1), fixed_nonzero })
    }
}
