//! One exhaustive pass over a code collecting everything the checks need.

use serde::Serialize;

use super::ring_code::CyclicCodeR;
use super::Metric;
use crate::error::{CodeError, Result};
use crate::packed::{span_walk, Bits, RBits, RemTable, Visitor, Word};
use crate::ring::RingWord;
use crate::with_limbs;

/// Totals from walking every message vector of the generator rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survey {
    /// Message vectors visited, `2^rows`.
    pub visits: u64,
    /// Message vectors mapping to the zero word. The generation map is
    /// F2-linear, so the number of distinct words is `visits / zero_hits`.
    pub zero_hits: u64,
    pub min_hamming: Option<u32>,
    pub min_lee: Option<u32>,
    pub min_euclidean: Option<u32>,
    /// GC weight histogram over all visits.
    pub gc_histogram: Vec<u64>,
    /// Words with every coordinate in `{0, u}`.
    pub u_only_words: u64,
    /// Of those, words whose u-part is not a multiple of `f1`.
    pub u_only_outside_torsion: u64,
    /// Per-word membership and closure counts, present when requested.
    pub per_word: Option<PerWord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PerWord {
    pub non_members: u64,
    pub reverse_outside: u64,
    pub reverse_complement_outside: u64,
}

impl Survey {
    pub fn distinct_words(&self) -> u64 {
        self.visits / self.zero_hits.max(1)
    }

    pub fn min_distance(&self, metric: Metric) -> Option<u32> {
        match metric {
            Metric::Hamming => self.min_hamming,
            Metric::Lee => self.min_lee,
            Metric::Euclidean => self.min_euclidean,
            Metric::Gc => None,
        }
    }
}

struct SurveyVisitor<'a, const L: usize> {
    n: usize,
    tables: Option<(&'a RemTable<L>, &'a RemTable<L>, Bits<L>)>,
    visits: u64,
    zero_hits: u64,
    min_h: u32,
    min_l: u32,
    min_e: u32,
    gc: Vec<u64>,
    u_only: u64,
    u_only_out: u64,
    per_word: PerWord,
}

impl<const L: usize> Visitor<RBits<L>> for SurveyVisitor<'_, L> {
    #[inline]
    fn visit(&mut self, w: &RBits<L>) {
        self.visits += 1;
        let gc = w.gc();
        self.gc[gc as usize] += 1;
        if w.is_zero() {
            self.zero_hits += 1;
        } else {
            let nu = w.n_u();
            self.min_h = self.min_h.min(w.hamming());
            self.min_l = self.min_l.min(gc + 2 * nu);
            self.min_e = self.min_e.min(gc + 4 * nu);
        }
        if gc == 0 {
            self.u_only += 1;
        }
        if let Some((t0, t1, rem_ones)) = self.tables {
            let b_rem = t1.rem(&w.b);
            if gc == 0 && !b_rem.is_zero() {
                self.u_only_out += 1;
            }
            if !(t0.divides(&w.a) && b_rem.is_zero()) {
                self.per_word.non_members += 1;
            }
            let r = w.reverse(self.n);
            let a_ok = t0.divides(&r.a);
            let rb = t1.rem(&r.b);
            if !(a_ok && rb.is_zero()) {
                self.per_word.reverse_outside += 1;
            }
            let mut rcb = rb;
            rcb.xor_assign(&rem_ones);
            if !(a_ok && rcb.is_zero()) {
                self.per_word.reverse_complement_outside += 1;
            }
        }
    }

    fn merge(&mut self, o: Self) {
        self.visits += o.visits;
        self.zero_hits += o.zero_hits;
        self.min_h = self.min_h.min(o.min_h);
        self.min_l = self.min_l.min(o.min_l);
        self.min_e = self.min_e.min(o.min_e);
        for (a, b) in self.gc.iter_mut().zip(o.gc) {
            *a += b;
        }
        self.u_only += o.u_only;
        self.u_only_out += o.u_only_out;
        self.per_word.non_members += o.per_word.non_members;
        self.per_word.reverse_outside += o.per_word.reverse_outside;
        self.per_word.reverse_complement_outside += o.per_word.reverse_complement_outside;
    }
}

pub(crate) fn pack<const L: usize>(w: &RingWord) -> Result<RBits<L>> {
    Ok(RBits { a: Bits::from_poly(w.a_plane())?, b: Bits::from_poly(w.b_plane())? })
}

fn nonzero(m: u32) -> Option<u32> {
    (m != u32::MAX).then_some(m)
}

/// How a closure verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureMethod {
    /// Every codeword mapped and tested for membership.
    PerWord,
    /// Images of an F2-basis (plus `u` times all-ones for the affine
    /// reverse-complement map), exact by linearity.
    Basis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureVerdict {
    pub reverse_closed: bool,
    pub reverse_complement_closed: bool,
    pub method: ClosureMethod,
}

impl CyclicCodeR {
    /// Walks all `2^log2_size` message vectors. With `per_word` set, every
    /// visited word is also checked for membership and for whether its
    /// reverse and reverse complement lie in the code.
    pub fn survey(&self, budget: u32, per_word: bool) -> Result<Survey> {
        if self.log2_size > budget as usize {
            return Err(CodeError::BudgetExceeded { needed: self.log2_size, budget });
        }
        let n = self.n;
        let rows = self.generator_rows();
        with_limbs!(n, L => {
            let packed: Vec<RBits<L>> = rows.iter().map(pack::<L>).collect::<Result<_>>()?;
            let t0 = RemTable::<L>::new(&self.f0, n)?;
            let t1 = RemTable::<L>::new(&self.f1, n)?;
            let rem_ones = t1.rem(&Bits::ones(n));
            let tables = per_word.then_some((&t0, &t1, rem_ones));
            let v = span_walk(&packed, || SurveyVisitor {
                n,
                tables,
                visits: 0,
                zero_hits: 0,
                min_h: u32::MAX,
                min_l: u32::MAX,
                min_e: u32::MAX,
                gc: vec![0; n + 1],
                u_only: 0,
                u_only_out: 0,
                per_word: PerWord { non_members: 0, reverse_outside: 0, reverse_complement_outside: 0 },
            });
            Ok(Survey {
                visits: v.visits,
                zero_hits: v.zero_hits,
                min_hamming: nonzero(v.min_h),
                min_lee: nonzero(v.min_l),
                min_euclidean: nonzero(v.min_e),
                gc_histogram: v.gc,
                u_only_words: v.u_only,
                u_only_outside_torsion: v.u_only_out,
                per_word: per_word.then_some(v.per_word),
            })
        })
    }

    /// Closure under reverse and reverse complement from the images of the
    /// generator rows. Reversal is F2-linear, and `x^rc = x^r + u I`, so
    /// closure of the whole code follows from these finitely many checks.
    pub fn closure_by_basis(&self) -> ClosureVerdict {
        let rows = self.generator_rows();
        let reverse_closed = rows.iter().all(|w| self.contains(&w.reverse()).expect("same length"));
        let u_ones = RingWord::u_all_ones(self.n);
        let reverse_complement_closed = reverse_closed && self.contains(&u_ones).expect("same length");
        ClosureVerdict { reverse_closed, reverse_complement_closed, method: ClosureMethod::Basis }
    }

    /// Per-word closure when the code fits `per_word_budget`, else by basis.
    pub fn closure(&self, per_word_budget: u32) -> Result<ClosureVerdict> {
        if self.log2_size <= per_word_budget as usize {
            let s = self.survey(per_word_budget, true)?;
            let pw = s.per_word.expect("requested");
            if pw.non_members > 0 {
                return Err(CodeError::Inconsistent(format!("{} enumerated words fail membership", pw.non_members)));
            }
            Ok(ClosureVerdict {
                reverse_closed: pw.reverse_outside == 0,
                reverse_complement_closed: pw.reverse_complement_outside == 0,
                method: ClosureMethod::PerWord,
            })
        } else {
            Ok(self.closure_by_basis())
        }
    }
}
