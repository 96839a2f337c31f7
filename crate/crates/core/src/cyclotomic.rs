//! 2-cyclotomic cosets modulo an odd `n`.
//!
//! `Cl(i) = { i * 2^k mod n }`. A coset is reversible when it is closed under
//! negation; reversible cosets are exactly the ones whose minimal
//! polynomials are self-reciprocal.

use serde::Serialize;

use crate::error::{CodeError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coset {
    /// Smallest member.
    pub rep: usize,
    /// Sorted ascending.
    pub members: Vec<usize>,
    pub reversible: bool,
}

impl Coset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    pub n: usize,
    pub ord2: usize,
    pub cosets: Vec<Coset>,
    #[serde(skip)]
    index: Vec<usize>,
}

pub(crate) fn check_odd(n: usize) -> Result<()> {
    if n == 0 {
        Err(CodeError::ZeroLength)
    } else if n.is_multiple_of(2) {
        Err(CodeError::EvenLength(n))
    } else {
        Ok(())
    }
}

/// Multiplicative order of 2 modulo odd `n` (1 for `n = 1`).
pub fn ord2(n: usize) -> Result<usize> {
    check_odd(n)?;
    if n == 1 {
        return Ok(1);
    }
    let mut x = 2 % n;
    let mut k = 1;
    while x != 1 {
        x = x * 2 % n;
        k += 1;
    }
    Ok(k)
}

/// Number of ones in the binary expansion of `s`.
pub fn binary_weight(s: usize) -> u32 {
    s.count_ones()
}

pub fn build_cosets(n: usize) -> Result<CosetTable> {
    check_odd(n)?;
    let mut index = vec![usize::MAX; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        let mut i = start;
        loop {
            index[i] = cosets.len();
            members.push(i);
            i = i * 2 % n;
            if i == start {
                break;
            }
        }
        members.sort_unstable();
        let reversible = members.binary_search(&((n - start) % n)).is_ok();
        cosets.push(Coset { rep: start, members, reversible });
    }
    let ord2 = cosets.get(index[1 % n]).map_or(1, |c| c.len());
    Ok(CosetTable { n, ord2, cosets, index })
}

impl CosetTable {
    /// The coset containing `i mod n`.
    pub fn coset_of(&self, i: usize) -> &Coset {
        &self.cosets[self.index[i % self.n]]
    }

    pub fn by_rep(&self, rep: usize) -> Option<&Coset> {
        let c = self.coset_of(rep);
        (c.rep == rep).then_some(c)
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Coset> {
        self.cosets.iter()
    }

    /// True when `members` is exactly one coset.
    pub fn is_coset(&self, members: &[usize]) -> bool {
        let Some(&first) = members.first() else { return false };
        if first >= self.n {
            return false;
        }
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == members.len() && self.coset_of(first).members == sorted
    }
}

/// Smallest `i >= 1` with `2^i = -1 (mod n)`, if any.
pub fn has_power_minus_one(n: usize) -> Result<Option<usize>> {
    let order = ord2(n)?;
    let target = (n - 1) % n;
    let mut x = 1 % n;
    for i in 1..=order {
        x = x * 2 % n;
        if x == target {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// First reversible coset other than `Cl(0)`, scanning by representative.
pub fn find_reversible_coset(n: usize) -> Result<Option<Coset>> {
    let table = build_cosets(n)?;
    Ok(table.cosets.into_iter().find(|c| c.rep != 0 && c.reversible))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(t: &CosetTable) -> Vec<Vec<usize>> {
        t.iter().map(|c| c.members.clone()).collect()
    }

    #[test]
    fn cosets_mod_7() {
        let t = build_cosets(7).unwrap();
        assert_eq!(members(&t), vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(t.ord2, 3);
        assert!(t.cosets[0].reversible);
        assert!(!t.cosets[1].reversible);
    }

    #[test]
    fn cosets_mod_1() {
        let t = build_cosets(1).unwrap();
        assert_eq!(members(&t), vec![vec![0]]);
        assert_eq!(t.ord2, 1);
    }

    #[test]
    fn coset_of_9_mod_63() {
        let t = build_cosets(63).unwrap();
        assert_eq!(t.coset_of(9).members, vec![9, 18, 36]);
        assert_eq!(t.len(), 13);
        assert_eq!(t.ord2, 6);
    }

    #[test]
    fn even_length_rejected() {
        assert_eq!(build_cosets(8).unwrap_err(), CodeError::EvenLength(8));
        assert_eq!(build_cosets(0).unwrap_err(), CodeError::ZeroLength);
    }

    #[test]
    fn power_minus_one() {
        assert_eq!(has_power_minus_one(33).unwrap(), Some(5));
        assert_eq!(has_power_minus_one(7).unwrap(), None);
        assert_eq!(has_power_minus_one(3).unwrap(), Some(1));
        assert_eq!(has_power_minus_one(65).unwrap(), Some(6));
        assert_eq!(has_power_minus_one(43).unwrap(), Some(7));
        assert_eq!(has_power_minus_one(15).unwrap(), None);
    }

    #[test]
    fn reversible_coset_examples() {
        // Cl(3) = {3, 6, 9, 12} is closed under negation too and comes first.
        assert_eq!(find_reversible_coset(15).unwrap().unwrap().members, vec![3, 6, 9, 12]);
        let t15 = build_cosets(15).unwrap();
        assert!(t15.by_rep(5).unwrap().reversible);
        let reversible: Vec<usize> = t15.iter().filter(|c| c.reversible).map(|c| c.rep).collect();
        assert_eq!(reversible, vec![0, 3, 5]);
        assert_eq!(find_reversible_coset(9).unwrap().unwrap().rep, 1);
        let c = find_reversible_coset(63).unwrap().unwrap();
        assert!(c.rep == 7 || c.rep == 21);
        let t = build_cosets(63).unwrap();
        assert!(t.by_rep(7).unwrap().reversible);
        assert!(t.by_rep(21).unwrap().reversible);
        assert_eq!(find_reversible_coset(7).unwrap(), None);
    }

    #[test]
    fn table_invariants() {
        for n in (1..=255).step_by(2) {
            let t = build_cosets(n).unwrap();
            assert_eq!(t.iter().map(Coset::len).sum::<usize>(), n);
            assert_eq!(t.coset_of(1 % n).len(), t.ord2);
            assert_eq!(t.ord2, ord2(n).unwrap());
            for c in t.iter() {
                for &i in &c.members {
                    assert!(c.contains(i * 2 % n));
                    assert_eq!(c.reversible, c.contains((n - i) % n));
                    if (n + 1).is_power_of_two() {
                        // doubling mod 2^m - 1 is a cyclic bit rotation
                        assert_eq!(binary_weight(i), binary_weight(c.rep));
                    }
                }
            }
            if has_power_minus_one(n).unwrap().is_some() {
                assert!(t.iter().all(|c| c.reversible), "n = {n}");
            }
        }
    }
}
