//! Row reduction over GF(2) with vectors held as polynomials.

use std::collections::BTreeMap;

use crate::gf2::BinPoly;

/// Echelon basis of the span, keyed by leading exponent.
pub fn span_basis<I: IntoIterator<Item = BinPoly>>(vectors: I) -> Vec<BinPoly> {
    let mut pivots: BTreeMap<usize, BinPoly> = BTreeMap::new();
    for mut v in vectors {
        while let Some(d) = v.degree() {
            match pivots.get(&d) {
                Some(p) => v += p,
                None => {
                    pivots.insert(d, v);
                    break;
                }
            }
        }
    }
    pivots.into_values().collect()
}

pub fn span_dimension<I: IntoIterator<Item = BinPoly>>(vectors: I) -> usize {
    span_basis(vectors).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_of_small_spans() {
        let v = |bits: u64| BinPoly::from_u64(bits);
        assert_eq!(span_dimension([v(0b011), v(0b110), v(0b101)]), 2);
        assert_eq!(span_dimension([v(1), v(2), v(4)]), 3);
        assert_eq!(span_dimension([BinPoly::zero()]), 0);
    }
}
