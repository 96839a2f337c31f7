use dnacodex::bch::{bch_code, bch_dna, bch_generator};
use dnacodex::code::{make_code, Metric, ReportOptions};
use dnacodex::cyclotomic::has_power_minus_one;
use dnacodex::gf2::{factor_cached, reciprocal_product_identity_check};
use dnacodex::ring::RingWord;
use dnacodex::BinPoly;
use proptest::prelude::*;

fn chain(n: usize, pick: u64) -> (BinPoly, BinPoly) {
    let chains = factor_cached(n).unwrap().divisor_chains();
    chains[(pick % chains.len() as u64) as usize].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_formula_matches_span(n in (1usize..=16).prop_map(|k| 2 * k + 1), pick in any::<u64>()) {
        let (f0, f1) = chain(n, pick);
        let c = make_code(n, f0, f1).unwrap();
        prop_assert_eq!(c.log2_size, c.log2_size_by_rank());
        for row in c.generator_rows() {
            prop_assert!(c.contains(&row).unwrap());
        }
    }

    #[test]
    fn closure_by_basis_matches_predicates(n in (1usize..=20).prop_map(|k| 2 * k + 1), pick in any::<u64>()) {
        let (f0, f1) = chain(n, pick);
        let c = make_code(n, f0, f1).unwrap();
        let v = c.closure_by_basis();
        prop_assert_eq!(v.reverse_closed, c.is_reversible());
        prop_assert_eq!(v.reverse_complement_closed, c.is_reverse_complement());
    }

    #[test]
    fn codeword_images_stay_in_dna_codes(n in (1usize..=12).prop_map(|k| 2 * k + 1), pick in any::<u64>(), seed in any::<u64>()) {
        let (f0, f1) = chain(n, pick);
        let c = make_code(n, f0.clone(), f1.clone()).unwrap();
        prop_assume!(c.is_reverse_complement());
        let a = (&BinPoly::from_u64(seed) * &f0).rem(&BinPoly::x_n_minus_one(n)).unwrap();
        let b = (&BinPoly::from_u64(seed.rotate_left(17)) * &f1).rem(&BinPoly::x_n_minus_one(n)).unwrap();
        let w = RingWord::from_planes(n, a, b).unwrap();
        prop_assert!(c.contains(&w).unwrap());
        prop_assert!(c.contains(&w.reverse_complement()).unwrap());
        prop_assert!(c.contains(&w.reverse()).unwrap());
    }

    #[test]
    fn reciprocal_is_multiplicative(a in 1u64.., b in 1u64..) {
        prop_assert!(reciprocal_product_identity_check(&BinPoly::from_u64(a), &BinPoly::from_u64(b)));
    }

    #[test]
    fn bch_generators_nest(n in (1usize..=60).prop_map(|k| 2 * k + 1), a in 1usize..121, b in 1usize..121) {
        let (lo, hi) = (a.min(b).min(n), a.max(b).min(n));
        prop_assert!(bch_generator(n, lo).unwrap().divides(&bch_generator(n, hi).unwrap()));
    }
}

#[test]
fn lee_lower_bound_on_enumerable_bch_codes() {
    let mut checked = 0;
    for n in (3..=31).step_by(2) {
        for d0 in 1..n {
            for d1 in 1..=d0 {
                let s = bch_code(n, d0, d1).unwrap();
                if s.code.log2_size > 20 || s.code.is_zero_code() {
                    continue;
                }
                let d_l = s.code.min_distance(Metric::Lee, 20).unwrap().value.unwrap();
                assert!(d_l >= d0.min(2 * d1), "BCH({n},{d0},{d1}): dL = {d_l}");
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn bch_dna_codes_pass_brute_force() {
    let mut checked = 0;
    for n in (3..=45).step_by(2) {
        if has_power_minus_one(n).unwrap().is_none() {
            assert!(bch_dna(n, 2, 2).unwrap_err().is_refusal());
            continue;
        }
        for (d0, d1) in [(2, 2), (3, 2), (5, 3), (7, 5)] {
            let Ok(s) = bch_dna(n, d0, d1) else { continue };
            if s.code.log2_size > 16 {
                continue;
            }
            let r = s.code.report(ReportOptions { budget: 16, brute_force: true, d: None }).unwrap();
            let bf = r.brute_force.unwrap();
            assert!(bf.closure.reverse_complement_closed && bf.closure_agrees, "BCH({n},{d0},{d1})");
            checked += 1;
        }
    }
    assert!(checked > 5, "{checked}");
}
