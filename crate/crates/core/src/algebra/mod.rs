//! Exact arithmetic: finite fields, finite abelian groups, cyclotomy.

mod cyclotomy;
mod field;
mod group;

pub use cyclotomy::{cyclotomic_class, cyclotomic_number};
pub use field::{FieldDescription, FieldElement, FiniteField, MAX_ORDER};
pub use group::{AbelianGroup, FieldPlane, GroupElement};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^m` with p prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}
