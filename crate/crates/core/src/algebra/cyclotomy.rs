use super::FiniteField;
use crate::error::{Error, Result};

fn check_order(field: &FiniteField, e: u32, i: u32) -> Result<()> {
    if e == 0 || (field.order() - 1) % e != 0 {
        return Err(Error::InvalidParameter(format!(
            "cyclotomic order {e} does not divide q-1 = {}",
            field.order() - 1
        )));
    }
    if i >= e {
        return Err(Error::InvalidParameter(format!(
            "class index {i} out of range 0..{e}"
        )));
    }
    Ok(())
}

/// The cyclotomic class γ^i⟨γ^e⟩ as sorted element indices.
pub fn cyclotomic_class(field: &FiniteField, e: u32, i: u32) -> Result<Vec<u32>> {
    check_order(field, e, i)?;
    let f = (field.order() - 1) / e;
    let mut class: Vec<u32> = (0..f)
        .map(|j| field.gamma_pow(i as u64 + j as u64 * e as u64))
        .collect();
    class.sort_unstable();
    Ok(class)
}

/// The cyclotomic number (i, j)_e, the number of x in D_i with x + 1 in D_j,
/// counted directly.
///
/// This is the convention under which the usual order-2 closed forms hold,
/// e.g. (0, 1)_2 = (q + 1) / 4 when q = 3 mod 4. It is the transpose of
/// |D_i ∩ (D_j + 1)|; the two agree when -1 is a square.
pub fn cyclotomic_number(field: &FiniteField, e: u32, i: u32, j: u32) -> Result<u64> {
    check_order(field, e, i)?;
    check_order(field, e, j)?;
    let class_of = |x: u32| field.log(x).map(|l| l % e);
    let count = cyclotomic_class(field, e, i)?
        .into_iter()
        .filter(|&x| class_of(field.add(x, 1)) == Some(j))
        .count();
    Ok(count as u64)
}
