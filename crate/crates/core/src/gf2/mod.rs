//! Polynomials over GF(2), extension fields and cyclotomic factorization.

mod factor;
mod field;
mod poly;

pub use factor::{factor_cached, factor_xn1, gcd, minimal_polynomial, Factorization};
pub use field::{is_irreducible, ExtensionField, FieldContext, WideField, MAX_TABLE_DEGREE};
pub use poly::BinPoly;

/// Whether `(fg)* = f* g*`. Always true; kept as a runtime self-check.
pub fn reciprocal_product_identity_check(f: &BinPoly, g: &BinPoly) -> bool {
    match ((f * g).reciprocal(), f.reciprocal(), g.reciprocal()) {
        (Ok(lhs), Ok(a), Ok(b)) => lhs == &a * &b,
        _ => false,
    }
}
