//! Finite abelian groups as direct products of cyclic groups.

use std::fmt;

use super::{FiniteField, MAX_ORDER};
use crate::error::{Error, Result};

/// A tuple of residues, one per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub Vec<u32>);

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Z_{n_1} × ... × Z_{n_r}.
///
/// Elements are also addressed by a mixed-radix index in `0..order` with the
/// last factor varying fastest, so index order equals lexicographic order of
/// the tuples and index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u32>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter(
                "a group needs at least one cyclic factor".into(),
            ));
        }
        if let Some(&n) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidParameter(format!(
                "cyclic factor {n} is smaller than 2"
            )));
        }
        let mut order: u64 = 1;
        for &n in &factors {
            order *= n as u64;
            if order > MAX_ORDER {
                return Err(Error::OrderTooLarge(order));
            }
        }
        Ok(AbelianGroup {
            factors,
            order: order as usize,
        })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order).map(|i| self.element(i)).collect()
    }

    pub fn element(&self, mut index: usize) -> GroupElement {
        let mut res = vec![0; self.factors.len()];
        for (slot, &n) in res.iter_mut().zip(&self.factors).rev() {
            *slot = (index % n as usize) as u32;
            index /= n as usize;
        }
        GroupElement(res)
    }

    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        if g.0.len() != self.factors.len() || g.0.iter().zip(&self.factors).any(|(&r, &n)| r >= n) {
            return Err(Error::NotInGroup(g.0.clone()));
        }
        Ok(g.0
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&r, &n)| acc * n as usize + r as usize))
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, n| (x + y) % n)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, n| (x + n - y) % n)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.sub(0, a)
    }

    fn combine(
        &self,
        mut a: usize,
        mut b: usize,
        op: impl Fn(usize, usize, usize) -> usize,
    ) -> usize {
        if self.factors.len() == 1 {
            return op(a, b, self.order);
        }
        let mut out = 0;
        let mut place = 1;
        for &n in self.factors.iter().rev() {
            let n = n as usize;
            out += op(a % n, b % n, n) * place;
            a /= n;
            b /= n;
            place *= n;
        }
        out
    }
}

/// The additive group of GF(q) × GF(q), with the pair (a, b) of field
/// element indices stored at group index `a * q + b`.
///
/// The underlying group is (Z_p)^{2m}; the first m residues are the base-p
/// digits of `a` (most significant first), the last m those of `b`.
#[derive(Debug, Clone)]
pub struct FieldPlane {
    field: FiniteField,
    group: AbelianGroup,
}

impl FieldPlane {
    pub fn new(field: FiniteField) -> Self {
        let p = field.characteristic();
        let group = AbelianGroup::new(vec![p; 2 * field.degree() as usize])
            .expect("plane over a capped field");
        FieldPlane { field, group }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn index(&self, a: u32, b: u32) -> usize {
        a as usize * self.field.order() as usize + b as usize
    }

    pub fn pair(&self, index: usize) -> (u32, u32) {
        let q = self.field.order() as usize;
        ((index / q) as u32, (index % q) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_lexicographic() {
        let z3 = AbelianGroup::cyclic(3).unwrap();
        assert_eq!(
            z3.elements(),
            vec![
                GroupElement(vec![0]),
                GroupElement(vec![1]),
                GroupElement(vec![2])
            ]
        );
        let v4 = AbelianGroup::new(vec![2, 2]).unwrap();
        let els: Vec<Vec<u32>> = v4.elements().into_iter().map(|g| g.0).collect();
        assert_eq!(els, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let g = AbelianGroup::new(vec![5, 3]).unwrap();
        let mut els = g.elements();
        assert_eq!(els.len(), 15);
        els.dedup();
        assert_eq!(els.len(), 15);
    }

    #[test]
    fn index_round_trip_and_arithmetic() {
        let g = AbelianGroup::new(vec![4, 3, 2]).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.index_of(&g.element(i)).unwrap(), i);
            assert_eq!(g.add(i, g.neg(i)), 0);
            for j in 0..g.order() {
                let (a, b) = (g.element(i), g.element(j));
                let sum: Vec<u32> =
                    a.0.iter()
                        .zip(&b.0)
                        .zip(g.factors())
                        .map(|((x, y), n)| (x + y) % n)
                        .collect();
                assert_eq!(g.element(g.add(i, j)).0, sum);
                assert_eq!(g.sub(g.add(i, j), j), i);
            }
        }
        assert!(g.index_of(&GroupElement(vec![4, 0, 0])).is_err());
        assert!(g.index_of(&GroupElement(vec![0, 0])).is_err());
    }

    #[test]
    fn rejects_bad_factors() {
        assert!(AbelianGroup::new(vec![]).is_err());
        assert!(AbelianGroup::new(vec![3, 1]).is_err());
        assert!(matches!(
            AbelianGroup::new(vec![1024, 1025]),
            Err(Error::OrderTooLarge(_))
        ));
    }

    #[test]
    fn plane_addition_matches_field_addition() {
        let plane = FieldPlane::new(FiniteField::with_order(9).unwrap());
        let f = plane.field();
        let g = plane.group();
        for a in 0..9 {
            for b in 0..9 {
                for c in 0..9 {
                    for d in 0..9 {
                        let s = g.add(plane.index(a, b), plane.index(c, d));
                        assert_eq!(plane.pair(s), (f.add(a, c), f.add(b, d)));
                    }
                }
            }
        }
    }
}
