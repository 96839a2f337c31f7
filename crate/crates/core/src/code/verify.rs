//! DNA constraints checked directly from their definitions.

use serde::Serialize;

use super::linalg::span_basis;
use super::ring_code::CyclicCodeR;
use super::survey::{pack, ClosureVerdict};
use crate::error::{CodeError, Result};
use crate::gf2::BinPoly;
use crate::packed::{span_walk, Bits, GrayIter, RBits, Visitor, Word};
use crate::ring::RingWord;
use crate::with_limbs;

/// Codes with at most `2^PAIRWISE_LIMIT` words are checked over all pairs.
pub const PAIRWISE_LIMIT: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMethod {
    /// Every ordered pair of codewords.
    Pairwise,
    /// Minimum weights of the difference spaces `{x' - y}`, which range over
    /// exactly the same values as the pairwise distances.
    Subspace,
}

/// `min H(phi(x), y)` over codeword pairs for a map `phi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairConstraint {
    /// False when the difference space was too large to walk.
    pub evaluated: bool,
    /// Over all pairs, `y = phi(x)` included.
    pub literal_min: Option<u32>,
    pub literal_holds: bool,
    /// Over pairs with `y != phi(x)`.
    pub distinct_min: Option<u32>,
    pub distinct_holds: bool,
}

impl PairConstraint {
    fn new(literal: Option<u32>, distinct: Option<u32>, d: u32) -> Self {
        Self {
            evaluated: true,
            literal_min: literal,
            literal_holds: literal.is_none_or(|m| m >= d),
            distinct_min: distinct,
            distinct_holds: distinct.is_none_or(|m| m >= d),
        }
    }

    fn unevaluated() -> Self {
        Self { evaluated: false, literal_min: None, literal_holds: false, distinct_min: None, distinct_holds: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintReport {
    pub d: u32,
    pub words: u64,
    pub method: VerifyMethod,
    /// Minimum distance over distinct codeword pairs.
    pub hamming_min: Option<u32>,
    pub hamming_holds: bool,
    pub reverse: PairConstraint,
    pub reverse_complement: PairConstraint,
    pub fixed_gc: bool,
    pub gc_values: Vec<u32>,
    pub closure: ClosureVerdict,
    pub predicate_reversible: bool,
    pub predicate_reverse_complement: bool,
    /// Closure verdicts equal the generator-polynomial predicates.
    pub closure_agrees: bool,
    pub degenerate: bool,
}

struct PairMins {
    h_nonzero: u32,
    r_all: u32,
    r_nonzero: u32,
    rc_all: u32,
    rc_nonzero: u32,
}

fn min_opt(m: u32) -> Option<u32> {
    (m != u32::MAX).then_some(m)
}

fn pairwise<const L: usize>(words: &[RBits<L>], n: usize) -> PairMins {
    let ones = Bits::<L>::ones(n);
    let mut m = PairMins { h_nonzero: u32::MAX, r_all: u32::MAX, r_nonzero: u32::MAX, rc_all: u32::MAX, rc_nonzero: u32::MAX };
    let dist = |p: &RBits<L>, q: &RBits<L>| {
        let mut t = *p;
        t.xor_assign(q);
        t.hamming()
    };
    for (i, x) in words.iter().enumerate() {
        let r = x.reverse(n);
        let mut rc = r;
        rc.b.xor_assign(&ones);
        for (j, y) in words.iter().enumerate() {
            if i != j {
                m.h_nonzero = m.h_nonzero.min(dist(x, y));
            }
            let dr = dist(&r, y);
            m.r_all = m.r_all.min(dr);
            if dr > 0 {
                m.r_nonzero = m.r_nonzero.min(dr);
            }
            let drc = dist(&rc, y);
            m.rc_all = m.rc_all.min(drc);
            if drc > 0 {
                m.rc_nonzero = m.rc_nonzero.min(drc);
            }
        }
    }
    m
}

struct OffsetMins<const L: usize> {
    offset: RBits<L>,
    all: u32,
    nonzero: u32,
    off_all: u32,
    off_nonzero: u32,
}

impl<const L: usize> Visitor<RBits<L>> for OffsetMins<L> {
    #[inline]
    fn visit(&mut self, w: &RBits<L>) {
        let h = w.hamming();
        self.all = self.all.min(h);
        if h > 0 {
            self.nonzero = self.nonzero.min(h);
        }
        let mut t = *w;
        t.xor_assign(&self.offset);
        let h = t.hamming();
        self.off_all = self.off_all.min(h);
        if h > 0 {
            self.off_nonzero = self.off_nonzero.min(h);
        }
    }
    fn merge(&mut self, o: Self) {
        self.all = self.all.min(o.all);
        self.nonzero = self.nonzero.min(o.nonzero);
        self.off_all = self.off_all.min(o.off_all);
        self.off_nonzero = self.off_nonzero.min(o.off_nonzero);
    }
}

fn as_poly(w: &RingWord) -> BinPoly {
    w.a_plane() + &w.b_plane().shl(w.len())
}

fn from_poly(n: usize, p: &BinPoly) -> RingWord {
    let a = p.truncated(n);
    let b = BinPoly::from_exponents(p.exponents().filter(|&e| e >= n).map(|e| e - n));
    RingWord::from_planes(n, a, b).expect("2n-bit vector")
}

impl CyclicCodeR {
    /// Enumerates the code and checks the Hamming, reverse, reverse-complement
    /// and fixed-GC constraints for distance `d`, plus closure under reverse
    /// and reverse complement against the polynomial predicates.
    pub fn verify_constraints_bruteforce(&self, d: u32, budget: u32) -> Result<ConstraintReport> {
        if self.log2_size > budget as usize {
            return Err(CodeError::BudgetExceeded { needed: self.log2_size, budget });
        }
        let n = self.n;
        let survey = self.survey(budget, true)?;
        let pw = survey.per_word.expect("requested");
        if pw.non_members > 0 || survey.zero_hits != 1 {
            return Err(CodeError::Inconsistent("generator rows do not span the code".into()));
        }
        let closure = ClosureVerdict {
            reverse_closed: pw.reverse_outside == 0,
            reverse_complement_closed: pw.reverse_complement_outside == 0,
            method: super::ClosureMethod::PerWord,
        };
        let gc_values: Vec<u32> =
            survey.gc_histogram.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, _)| w as u32).collect();
        let rows = self.generator_rows();
        let (method, hamming_min, reverse, reverse_complement) = with_limbs!(n, L => {
            let packed: Vec<RBits<L>> = rows.iter().map(pack::<L>).collect::<Result<_>>()?;
            if self.log2_size <= PAIRWISE_LIMIT as usize {
                let words: Vec<RBits<L>> = GrayIter::new(packed).collect();
                let m = pairwise(&words, n);
                Ok::<_, CodeError>((
                    VerifyMethod::Pairwise,
                    min_opt(m.h_nonzero),
                    PairConstraint::new(min_opt(m.r_all), min_opt(m.r_nonzero), d),
                    PairConstraint::new(min_opt(m.rc_all), min_opt(m.rc_nonzero), d),
                ))
            } else {
                // {x^r - y} is the span of C and its reverse; {x^rc - y} is
                // that span shifted by u times all-ones.
                let span = span_basis(rows.iter().flat_map(|w| [as_poly(w), as_poly(&w.reverse())]));
                let (rev, rc) = if span.len() <= budget as usize {
                    let basis: Vec<RBits<L>> =
                        span.iter().map(|p| pack::<L>(&from_poly(n, p))).collect::<Result<_>>()?;
                    let offset = RBits { a: Bits::zero(), b: Bits::ones(n) };
                    let v = span_walk(&basis, || OffsetMins {
                        offset,
                        all: u32::MAX,
                        nonzero: u32::MAX,
                        off_all: u32::MAX,
                        off_nonzero: u32::MAX,
                    });
                    (
                        PairConstraint::new(min_opt(v.all), min_opt(v.nonzero), d),
                        PairConstraint::new(min_opt(v.off_all), min_opt(v.off_nonzero), d),
                    )
                } else {
                    (PairConstraint::unevaluated(), PairConstraint::unevaluated())
                };
                Ok((VerifyMethod::Subspace, survey.min_hamming, rev, rc))
            }
        })?;
        let predicate_reversible = self.is_reversible();
        let predicate_reverse_complement = self.is_reverse_complement();
        Ok(ConstraintReport {
            d,
            words: survey.distinct_words(),
            method,
            hamming_min,
            hamming_holds: hamming_min.is_none_or(|m| m >= d),
            reverse,
            reverse_complement,
            fixed_gc: gc_values.len() == 1,
            gc_values,
            closure,
            predicate_reversible,
            predicate_reverse_complement,
            closure_agrees: closure.reverse_closed == predicate_reversible
                && closure.reverse_complement_closed == predicate_reverse_complement,
            degenerate: survey.distinct_words() < 2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::make_code;
    use crate::gf2::factor_xn1;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn pairwise_and_subspace_agree() {
        // n = 9: codes straddling the pairwise limit
        let f = factor_xn1(9).unwrap();
        for (f0, f1) in f.divisor_chains() {
            let c = make_code(9, f0, f1).unwrap();
            if c.log2_size > 18 {
                continue;
            }
            let r = c.verify_constraints_bruteforce(1, 24).unwrap();
            assert!(r.closure_agrees);
            if c.log2_size <= PAIRWISE_LIMIT as usize && c.log2_size > 0 {
                // same code through the subspace path
                let sub = {
                    let rows = c.generator_rows();
                    let span = span_basis(rows.iter().flat_map(|w| [as_poly(w), as_poly(&w.reverse())]));
                    let basis: Vec<RBits<1>> = span.iter().map(|q| pack::<1>(&from_poly(9, q)).unwrap()).collect();
                    let offset = RBits { a: Bits::zero(), b: Bits::ones(9) };
                    span_walk(&basis, || OffsetMins { offset, all: u32::MAX, nonzero: u32::MAX, off_all: u32::MAX, off_nonzero: u32::MAX })
                };
                assert_eq!(r.reverse.literal_min, min_opt(sub.all));
                assert_eq!(r.reverse.distinct_min, min_opt(sub.nonzero));
                assert_eq!(r.reverse_complement.literal_min, min_opt(sub.off_all));
                assert_eq!(r.reverse_complement.distinct_min, min_opt(sub.off_nonzero));
            }
        }
    }

    #[test]
    fn literal_reverse_constraint_fails_at_zero() {
        let c = make_code(7, p("x^4+x^3+x^2+1"), p("x^4+x^3+x^2+1")).unwrap();
        let r = c.verify_constraints_bruteforce(3, 24).unwrap();
        assert_eq!(r.method, VerifyMethod::Pairwise);
        assert_eq!(r.hamming_min, Some(4));
        assert_eq!(r.reverse.literal_min, Some(0));
        assert!(!r.reverse.literal_holds);
        assert!(!r.fixed_gc);
    }

    #[test]
    fn zero_code_is_degenerate() {
        let z = BinPoly::x_n_minus_one(7);
        let c = make_code(7, z.clone(), z).unwrap();
        let r = c.verify_constraints_bruteforce(3, 24).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.hamming_min, None);
        assert!(r.hamming_holds);
    }
}
