//! Three infinite families of DNA codes: from simplex codes, from Zetterberg
//! codes, and from punctured second-order Reed-Muller codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::{BinaryCyclicCode, CodeReport, CyclicCodeR, ReportOptions, WeightEnumerator};
use crate::cyclotomic::binary_weight;
use crate::error::{CodeError, Result};
use crate::gf2::{factor_cached, BinPoly};
use crate::ring::RingWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Simplex,
    Zetterberg,
    ReedMuller,
}

/// What the construction promises before anything is enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicted {
    pub log2_size: usize,
    /// GC weight shared by all nonzero u-cosets.
    pub gc_weight: Option<usize>,
    pub reverse_complement: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCode {
    pub family: Family,
    pub m: u32,
    pub code: CyclicCodeR,
    pub predicted: Predicted,
}

fn check_m(family: &str, m: u32, lo: u32, hi: u32) -> Result<()> {
    if m < lo || m > hi {
        return Err(CodeError::OutOfRange(format!("{family} family needs {lo} <= m <= {hi}, got m = {m}")));
    }
    Ok(())
}

fn free_code(n: usize, g: BinPoly) -> Result<CyclicCodeR> {
    CyclicCodeR::new(n, g.clone(), g)
}

/// `h*(x)` for `h = (x^n - 1) / M_1`, `n = 2^m - 1`: the simplex code.
fn simplex_generator(m: u32) -> Result<BinPoly> {
    let n = (1usize << m) - 1;
    let f = factor_cached(n)?;
    let h = BinPoly::x_n_minus_one(n).exact_div(f.minimal_of(1))?.expect("M_1 divides x^n-1");
    h.reciprocal()
}

/// Free code `<h*>` of length `2^m - 1` with `4^m` words; every nonzero
/// u-coset has GC weight `2^(m-1)`.
pub fn simplex_dna(m: u32) -> Result<FamilyCode> {
    check_m("simplex", m, 2, 12)?;
    let n = (1usize << m) - 1;
    let code = free_code(n, simplex_generator(m)?)?;
    let predicted = Predicted { log2_size: 2 * m as usize, gc_weight: Some(1 << (m - 1)), reverse_complement: None };
    Ok(FamilyCode { family: Family::Simplex, m, code, predicted })
}

/// `(x^n - 1) / ((x - 1) M_1)` for `n = 2^m + 1`.
fn zetterberg_c0_generator(m: u32) -> Result<BinPoly> {
    let n = (1usize << m) + 1;
    let f = factor_cached(n)?;
    let d = &"x+1".parse::<BinPoly>().expect("literal") * f.minimal_of(1);
    Ok(BinPoly::x_n_minus_one(n).exact_div(&d)?.expect("distinct factors of x^n-1"))
}

/// Free code `<f1>` of length `2^m + 1`, `f1 = (x^n - 1) / ((x - 1) M_1)`.
/// `2^m = -1 (mod n)` makes every coset reversible.
pub fn zetterberg_dna(m: u32) -> Result<FamilyCode> {
    if m == 2 {
        return Err(CodeError::Refused("m = 2: (x^5 - 1) / ((x - 1) M_1) = 1, the code is the full space".into()));
    }
    check_m("zetterberg", m, 3, 10)?;
    let n = (1usize << m) + 1;
    let code = free_code(n, zetterberg_c0_generator(m)?)?;
    let predicted = Predicted { log2_size: 2 * (2 * m as usize + 1), gc_weight: None, reverse_complement: Some(true) };
    Ok(FamilyCode { family: Family::Zetterberg, m, code, predicted })
}

/// Binary `C_0` and the irreducible code `C_z^perp` it extends by the
/// all-ones word.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetterbergC0 {
    pub m: u32,
    pub n: usize,
    pub dimension: usize,
    pub dimension_ok: bool,
    pub enumerator: WeightEnumerator,
    pub symmetric: bool,
    pub dual_dimension: usize,
    pub dual_enumerator: WeightEnumerator,
    pub dual_weights_even: bool,
    /// Every nonzero weight count of `C_z^perp` is a multiple of `n`.
    pub dual_counts_divisible: bool,
    pub dual_distance: usize,
    /// `(2^m + 1)/2 - sqrt(2^m)`.
    pub dual_distance_floor: f64,
    pub dual_distance_bound_holds: bool,
    pub claimed_distance: usize,
    pub distance: usize,
    pub claimed_distance_matches: bool,
}

pub fn zetterberg_c0_params(m: u32, budget: u32) -> Result<ZetterbergC0> {
    check_m("zetterberg", m, 3, 10)?;
    let n = (1usize << m) + 1;
    let c0 = BinaryCyclicCode::new(n, zetterberg_c0_generator(m)?)?;
    let f = factor_cached(n)?;
    let dual = BinaryCyclicCode::from_check_polynomial(n, f.minimal_of(1))?;
    let enumerator = c0.weight_enumerator(budget)?;
    let dual_enumerator = dual.weight_enumerator(budget)?;
    let dual_distance = dual_enumerator.min_nonzero().expect("dimension 2m");
    let distance = enumerator.min_nonzero().expect("dimension 2m+1");
    let claimed_distance = dual_distance.min(n - dual_distance);
    let floor = n as f64 / 2.0 - ((1u64 << m) as f64).sqrt();
    Ok(ZetterbergC0 {
        m,
        n,
        dimension: c0.dimension(),
        dimension_ok: c0.dimension() == 2 * m as usize + 1,
        symmetric: enumerator.is_symmetric(n),
        enumerator,
        dual_dimension: dual.dimension(),
        dual_weights_even: dual_enumerator.counts.keys().all(|w| w % 2 == 0),
        dual_counts_divisible: dual_enumerator.counts.iter().all(|(&w, &c)| w == 0 || c % n as u64 == 0),
        dual_enumerator,
        dual_distance,
        dual_distance_floor: floor,
        dual_distance_bound_holds: dual_distance as f64 > floor,
        claimed_distance,
        distance,
        claimed_distance_matches: claimed_distance == distance,
    })
}

/// `prod M_s` over cosets with `1 <= w_2(s) <= m - 3`, length `2^m - 1`.
pub fn rm_star_generator(m: u32) -> Result<BinPoly> {
    check_m("Reed-Muller", m, 4, 20)?;
    let n = (1usize << m) - 1;
    let f = factor_cached(n)?;
    let reps = f.cosets.iter().filter(|c| (1..=m - 3).contains(&binary_weight(c.rep))).map(|c| c.rep);
    Ok(f.product_of(reps))
}

/// Free code `<g2>`, `g2` the product of the self-reciprocal factors of the
/// punctured Reed-Muller generator.
pub fn rm_dna(m: u32) -> Result<FamilyCode> {
    if m % 2 == 1 {
        return Err(CodeError::Refused(format!(
            "m = {m} is odd: ord(2) mod 2^m-1 is m, so no nonzero coset is reversible and the generator has no self-reciprocal factor"
        )));
    }
    if m == 4 {
        return Err(CodeError::Refused(
            "m = 4: the generator is M_1 alone, which is not self-reciprocal, so there is nothing to keep".into(),
        ));
    }
    check_m("Reed-Muller", m, 6, 12)?;
    let n = (1usize << m) - 1;
    let g = rm_star_generator(m)?;
    let f = factor_cached(n)?;
    let g2 = f.product_of(
        f.cosets.iter().filter(|c| c.reversible && c.rep != 0 && f.factors[&c.rep].divides(&g)).map(|c| c.rep),
    );
    if g2.is_one() {
        return Err(CodeError::Refused(format!("m = {m}: no self-reciprocal factor divides the generator")));
    }
    let code = free_code(n, g2)?;
    let predicted =
        Predicted { log2_size: 2 * code.rank, gc_weight: None, reverse_complement: Some(true) };
    Ok(FamilyCode { family: Family::ReedMuller, m, code, predicted })
}

/// One row of the reference weight table for `RM*(2, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub weights: Vec<usize>,
    pub claimed: u64,
    pub per_weight: Vec<u64>,
    pub combined: u64,
    pub per_weight_matches: bool,
    pub combined_matches: bool,
}

/// Enumerated `RM*(2, m)` weights against a reference table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RmTableCheck {
    pub m: u32,
    pub dimension: usize,
    pub enumerator: WeightEnumerator,
    pub rows: Vec<TableRow>,
    /// `combined`, `per_weight`, or `none`: the reading matching most rows.
    pub reading: &'static str,
    /// Every row matches under `reading`.
    pub consistent: bool,
    /// Rows matching neither reading. The second entry is the number of
    /// words outside all other rows, given when the claimed value equals it.
    pub unexplained: Vec<(Vec<usize>, Option<u64>)>,
}

/// Reference `m = 6` table: weights and the count given for them.
pub const RM6_TABLE: [(&[usize], u64); 4] =
    [(&[15, 47], 2604), (&[23, 39], 291648), (&[27, 35], 888832), (&[31], 3011220)];

pub fn rm_table_check(m: u32, table: &[(&[usize], u64)], budget: u32) -> Result<RmTableCheck> {
    let n = (1usize << m) - 1;
    let c = BinaryCyclicCode::new(n, rm_star_generator(m)?)?;
    let enumerator = c.weight_enumerator(budget)?;
    let rows: Vec<TableRow> = table
        .iter()
        .map(|&(ws, claimed)| {
            let per_weight: Vec<u64> = ws.iter().map(|&w| enumerator.get(w)).collect();
            let combined = per_weight.iter().sum();
            TableRow {
                weights: ws.to_vec(),
                claimed,
                per_weight_matches: per_weight.iter().all(|&v| v == claimed),
                combined_matches: combined == claimed,
                per_weight,
                combined,
            }
        })
        .collect();
    let combined_hits = rows.iter().filter(|r| r.combined_matches).count();
    let per_weight_hits = rows.iter().filter(|r| r.per_weight_matches).count();
    let reading = match (combined_hits, per_weight_hits) {
        (0, 0) => "none",
        (c, p) if c >= p => "combined",
        _ => "per_weight",
    };
    let consistent = reading != "none" && combined_hits.max(per_weight_hits) == rows.len();
    let unexplained = rows
        .iter()
        .filter(|r| !r.combined_matches && !r.per_weight_matches)
        .map(|r| {
            let others: u64 = rows.iter().filter(|o| o.weights != r.weights).map(|o| o.combined).sum();
            let remainder = enumerator.total() - others;
            (r.weights.clone(), (remainder == r.claimed).then_some(remainder))
        })
        .collect();
    Ok(RmTableCheck { m, dimension: c.dimension(), enumerator, rows, reading, consistent, unexplained })
}

/// Reverse-complement membership of `samples` seeded random codewords.
/// Returns the number whose image falls outside the code.
pub fn sample_closure(code: &CyclicCodeR, samples: usize, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = code.n;
    let mut random_multiple = |g: &BinPoly, deg: usize| {
        let msg = BinPoly::from_exponents((0..n - deg).filter(|_| rng.gen::<bool>()));
        (&msg * g).truncated(n)
    };
    let mut outside = 0;
    for _ in 0..samples {
        let a = random_multiple(&code.f0, code.deg_f0);
        let b = random_multiple(&code.f1, code.deg_f1);
        let w = RingWord::from_planes(n, a, b)?;
        if !code.contains(&w)? {
            return Err(CodeError::Inconsistent("sampled word is not a codeword".into()));
        }
        if !code.contains(&w.reverse_complement())? {
            outside += 1;
        }
    }
    Ok(outside)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyReport {
    pub family: Family,
    pub m: u32,
    pub n: usize,
    pub predicted: Predicted,
    pub log2_size_matches: bool,
    pub code: CodeReport,
    /// Nonzero weights of the torsion code, when it was enumerated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion_weights: Option<Vec<usize>>,
    /// GC weight of each nonzero u-coset equals the prediction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gc_constant_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zetterberg_c0: Option<ZetterbergC0>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rm_table: Option<RmTableCheck>,
    /// Sampled words whose reverse complement left the code.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled_rc_outside: Option<usize>,
}

impl FamilyCode {
    pub fn n(&self) -> usize {
        self.code.n
    }

    pub fn report(&self, opts: ReportOptions) -> Result<FamilyReport> {
        let code = self.code.report(opts)?;
        let budget = opts.budget;
        let torsion = self.code.torsion_code();
        let torsion_weights = (torsion.dimension() <= budget as usize)
            .then(|| torsion.weight_enumerator(budget))
            .transpose()?
            .map(|e| e.counts.keys().copied().filter(|&w| w > 0).collect());
        let gc_constant_holds = match (self.predicted.gc_weight, &code.gc.per_u_coset) {
            (Some(w), Some(e)) => Some(e.counts.keys().all(|&k| k == 0 || k == w)),
            _ => None,
        };
        let mut r = FamilyReport {
            family: self.family,
            m: self.m,
            n: self.n(),
            log2_size_matches: self.predicted.log2_size == self.code.log2_size,
            predicted: self.predicted.clone(),
            code,
            torsion_weights,
            gc_constant_holds,
            zetterberg_c0: None,
            rm_table: None,
            sampled_rc_outside: None,
        };
        match self.family {
            Family::Simplex => {}
            Family::Zetterberg => {
                if 2 * (self.m as usize) < budget as usize {
                    r.zetterberg_c0 = Some(zetterberg_c0_params(self.m, budget)?);
                }
            }
            Family::ReedMuller => {
                let k = 1 + self.m as usize + (self.m * (self.m - 1) / 2) as usize;
                if self.m == 6 && k <= budget as usize {
                    r.rm_table = Some(rm_table_check(self.m, &RM6_TABLE, budget)?);
                }
                r.sampled_rc_outside = Some(sample_closure(&self.code, 4096, 0xd7a)?);
            }
        }
        Ok(r)
    }
}
