use serde::{Serialize, Serializer};

use super::ring_code::CyclicCodeR;
use super::verify::ConstraintReport;
use super::{Distance, Metric, Provenance, WeightEnumerator};
use crate::error::{CodeError, Result};
use crate::gf2::BinPoly;
use crate::DEFAULT_BUDGET;

pub(crate) fn poly_text<S: Serializer>(p: &BinPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// A polynomial in both accepted text forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyText {
    pub text: String,
    pub hex: String,
    pub degree: Option<usize>,
}

impl From<&BinPoly> for PolyText {
    fn from(p: &BinPoly) -> Self {
        Self { text: p.to_string(), hex: p.to_hex(), degree: p.degree() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// log2 of the largest enumeration allowed.
    pub budget: u32,
    /// Run the definitional constraint checks (code must fit the budget).
    pub brute_force: bool,
    /// Distance for the constraint checks; defaults to the Hamming distance.
    pub d: Option<u32>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, brute_force: false, d: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcSummary {
    /// GC weight shared by every nonzero u-coset, if any.
    pub fixed: Option<usize>,
    /// Hamming enumerator of the torsion code `<f1>`.
    pub enumerator: Option<WeightEnumerator>,
    /// GC weight per u-coset (Hamming enumerator of the residue code).
    pub per_u_coset: Option<WeightEnumerator>,
    /// Codewords in each u-coset.
    pub coset_size_log2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub f0: PolyText,
    pub f1: PolyText,
    pub log2_size: usize,
    pub rank: usize,
    pub free: bool,
    pub residue_dimension: usize,
    pub torsion_dimension: usize,
    #[serde(rename = "dH")]
    pub d_h: Distance,
    #[serde(rename = "dL")]
    pub d_l: Distance,
    #[serde(rename = "dE")]
    pub d_e: Distance,
    pub reversible: bool,
    pub reverse_complement: bool,
    pub u_all_ones_in_code: bool,
    /// `theorem` from the generator predicates alone, `both` when the
    /// definitional checks ran and agreed.
    pub verdict_provenance: Provenance,
    pub gc: GcSummary,
    pub degenerate_flags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<ConstraintReport>,
}

impl CyclicCodeR {
    pub fn report(&self, opts: ReportOptions) -> Result<CodeReport> {
        let budget = opts.budget;
        let d0 = self.residue_code().min_distance(budget)?;
        let d1 = self.torsion_code().min_distance(budget)?;
        let [mut d_h, mut d_l, mut d_e] =
            [Metric::Hamming, Metric::Lee, Metric::Euclidean].map(|m| self.distance_from_components(m, &d0, &d1));
        if !self.is_zero_code() && self.log2_size <= budget as usize {
            let s = self.survey(budget, false)?;
            for (metric, slot) in [(Metric::Hamming, &mut d_h), (Metric::Lee, &mut d_l), (Metric::Euclidean, &mut d_e)] {
                let direct = s.min_distance(metric).expect("nonzero code") as usize;
                if slot.lower().is_some_and(|l| l > direct) || slot.upper().is_some_and(|u| u < direct) {
                    return Err(CodeError::Inconsistent(format!("{metric:?} distance {direct} contradicts {slot:?}")));
                }
                *slot = Distance::exact(direct, Provenance::Both);
            }
        }
        let torsion_dim = self.n - self.deg_f1;
        let residue_dim = self.n - self.deg_f0;
        let enumerator = (torsion_dim <= budget as usize).then(|| self.gc_weight_enumerator(budget)).transpose()?;
        let profile = (residue_dim <= budget as usize).then(|| self.gc_profile(budget)).transpose()?;
        let gc = GcSummary {
            fixed: profile.as_ref().and_then(|p| p.fixed_nonzero),
            enumerator,
            per_u_coset: profile.map(|p| p.per_u_coset),
            coset_size_log2: torsion_dim,
        };
        let mut verdict_provenance = Provenance::Theorem;
        let brute_force = if opts.brute_force {
            let d = opts.d.unwrap_or_else(|| d_h.value.unwrap_or(1) as u32);
            let r = self.verify_constraints_bruteforce(d, budget)?;
            if !r.closure_agrees {
                return Err(CodeError::Inconsistent("closure check disagrees with the generator predicates".into()));
            }
            verdict_provenance = Provenance::Both;
            Some(r)
        } else {
            None
        };
        Ok(CodeReport {
            n: self.n,
            f0: (&self.f0).into(),
            f1: (&self.f1).into(),
            log2_size: self.log2_size,
            rank: self.rank,
            free: self.is_free(),
            residue_dimension: residue_dim,
            torsion_dimension: torsion_dim,
            d_h,
            d_l,
            d_e,
            reversible: self.is_reversible(),
            reverse_complement: self.is_reverse_complement(),
            u_all_ones_in_code: self.contains_u_all_ones(),
            verdict_provenance,
            gc,
            degenerate_flags: self.degenerate_flags(),
            brute_force,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::make_code;

    #[test]
    fn report_json_shape() {
        let g: BinPoly = "x^2+x+1".parse().unwrap();
        let c = make_code(9, g.clone(), g).unwrap();
        let r = c.report(ReportOptions { brute_force: true, ..Default::default() }).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["log2_size"], 14);
        assert_eq!(v["f0"]["hex"], "07");
        assert_eq!(v["dH"]["provenance"], "both");
        assert!(v["dH"]["value"].is_u64());
        assert_eq!(v["verdict_provenance"], "both");
        assert_eq!(v["reverse_complement"], true);
        assert!(v["brute_force"]["closure_agrees"].as_bool().unwrap());
    }

    #[test]
    fn bound_interval_when_over_budget() {
        let g: BinPoly = "x^2+x+1".parse().unwrap();
        let c = make_code(9, g.clone(), g).unwrap();
        let r = c.report(ReportOptions { budget: 3, ..Default::default() }).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["dH"]["provenance"], "bound");
        assert!(v["dH"]["interval"].is_array() || v["dH"]["value"].is_u64());
        assert!(v.get("brute_force").is_none());
    }
}
