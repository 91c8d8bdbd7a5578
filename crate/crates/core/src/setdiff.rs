//! Difference sets, almost difference sets and partial difference sets in
//! finite abelian groups.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{cyclotomic_class, AbelianGroup, FieldPlane, FiniteField, GroupElement};
use crate::error::{Error, Result};
use crate::incidence::IncidenceStructure;
use crate::matrix::Matrix;

/// A subset D of an abelian group, stored as sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSubset {
    group: AbelianGroup,
    elements: Vec<usize>,
}

impl GroupSubset {
    pub fn new(group: AbelianGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if let Some(&g) = elements.iter().find(|&&g| g >= group.order()) {
            return Err(Error::InvalidParameter(format!(
                "element index {g} outside a group of order {}",
                group.order()
            )));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "element {} listed twice",
                group.element(w[0])
            )));
        }
        Ok(GroupSubset { group, elements })
    }

    pub fn from_tuples(group: AbelianGroup, tuples: &[GroupElement]) -> Result<Self> {
        let elements = tuples
            .iter()
            .map(|g| group.index_of(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, elements)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn tuples(&self) -> Vec<GroupElement> {
        self.elements
            .iter()
            .map(|&g| self.group.element(g))
            .collect()
    }

    /// G \ D.
    pub fn complement(&self) -> Self {
        let elements = (0..self.group.order())
            .filter(|&g| !self.contains(g))
            .collect();
        GroupSubset {
            group: self.group.clone(),
            elements,
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::InvalidParameter(
                "subsets live in different groups".into(),
            ));
        }
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .chain(&other.elements)
            .copied()
            .collect();
        elements.sort_unstable();
        elements.dedup();
        Ok(GroupSubset {
            group: self.group.clone(),
            elements,
        })
    }

    /// -D = D and 0 ∉ D.
    pub fn is_symmetric_without_identity(&self) -> bool {
        !self.contains(self.group.identity())
            && self
                .elements
                .iter()
                .all(|&g| self.contains(self.group.neg(g)))
    }
}

/// Multiplicity of each group element in {x - y : x, y ∈ D, x ≠ y}, indexed
/// by group index. The identity entry is always 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSpectrum {
    multiplicities: Vec<u64>,
}

impl DifferenceSpectrum {
    pub fn multiplicity(&self, g: usize) -> u64 {
        self.multiplicities[g]
    }

    /// (element, multiplicity) for every nonidentity element.
    pub fn nonidentity(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.multiplicities.iter().copied().enumerate().skip(1)
    }

    /// Multiplicity value → number of nonidentity elements attaining it.
    pub fn histogram(&self) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for (_, m) in self.nonidentity() {
            *h.entry(m).or_insert(0) += 1;
        }
        h
    }

    pub fn mass(&self) -> u64 {
        self.multiplicities.iter().sum()
    }
}

pub fn difference_spectrum(d: &GroupSubset) -> Result<DifferenceSpectrum> {
    if d.len() < 2 {
        return Err(Error::InvalidParameter(
            "a difference spectrum needs |D| >= 2".into(),
        ));
    }
    let g = d.group();
    let mut multiplicities = vec![0u64; g.order()];
    for &x in d.elements() {
        for &y in d.elements() {
            if x != y {
                multiplicities[g.sub(x, y)] += 1;
            }
        }
    }
    Ok(DifferenceSpectrum { multiplicities })
}

fn proper_spectrum(d: &GroupSubset) -> Option<DifferenceSpectrum> {
    if d.len() < 2 || d.len() >= d.group().order() {
        return None;
    }
    difference_spectrum(d).ok()
}

/// λ if every nonidentity element occurs exactly λ times as a difference.
pub fn is_difference_set(d: &GroupSubset) -> Option<u64> {
    let h = proper_spectrum(d)?.histogram();
    (h.len() == 1).then(|| *h.keys().next().expect("nonempty"))
}

/// Parameters (v, k, λ, s) of an almost difference set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdsParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub s: u64,
    /// The spectrum is constant, i.e. D is a difference set reported with
    /// s = v - 1.
    pub perfect: bool,
}

impl AdsParams {
    /// (v-1)(λ+1) - s = k(k-1).
    pub fn identity_holds(&self) -> bool {
        (self.v - 1) * (self.lambda + 1) == self.k * (self.k - 1) + self.s
    }

    /// For a difference set, the s = 0 reading (λ-1, 0). None otherwise.
    pub fn alternate(&self) -> Option<AdsParams> {
        (self.perfect && self.lambda > 0).then_some(AdsParams {
            lambda: self.lambda - 1,
            s: 0,
            ..*self
        })
    }
}

/// (λ, s) if the spectrum takes only the values λ and λ+1.
///
/// Difference sets are reported with s = v - 1 and `perfect` set.
pub fn is_almost_difference_set(d: &GroupSubset) -> Option<AdsParams> {
    let h = proper_spectrum(d)?.histogram();
    let v = d.group().order() as u64;
    let k = d.len() as u64;
    let params = match h.len() {
        1 => AdsParams {
            v,
            k,
            lambda: *h.keys().next()?,
            s: v - 1,
            perfect: true,
        },
        2 => {
            let mut it = h.iter();
            let (&lo, &s) = it.next()?;
            let (&hi, _) = it.next()?;
            if hi != lo + 1 {
                return None;
            }
            AdsParams {
                v,
                k,
                lambda: lo,
                s,
                perfect: false,
            }
        }
        _ => return None,
    };
    assert!(
        params.identity_holds(),
        "ADS identity must follow from the count"
    );
    Some(params)
}

/// Parameters of a partial difference set, equivalently of the strongly
/// regular Cayley graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PdsParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

/// (λ, μ) if differences landing in D all have multiplicity λ and those
/// landing outside D ∪ {0} all have multiplicity μ.
///
/// Requires -D = D, 0 ∉ D, and D neither empty nor all of G \ {0};
/// otherwise returns None.
pub fn is_partial_difference_set(d: &GroupSubset) -> Option<PdsParams> {
    let v = d.group().order();
    if !d.is_symmetric_without_identity() || d.len() < 2 || d.len() + 1 >= v {
        return None;
    }
    let spec = difference_spectrum(d).ok()?;
    let mut lambda = None;
    let mut mu = None;
    for (g, m) in spec.nonidentity() {
        let slot = if d.contains(g) { &mut lambda } else { &mut mu };
        match *slot {
            None => *slot = Some(m),
            Some(x) if x != m => return None,
            Some(_) => {}
        }
    }
    Some(PdsParams {
        v: v as u64,
        k: d.len() as u64,
        lambda: lambda?,
        mu: mu?,
    })
}

/// Dev(D) = {D + g : g ∈ G} on the points of G.
#[derive(Debug, Clone)]
pub struct Development {
    pub structure: IncidenceStructure,
    /// Some translates coincide, so the structure is a multiset.
    pub repeated_blocks: bool,
}

pub fn development(d: &GroupSubset) -> Result<Development> {
    if d.len() < 2 {
        return Err(Error::InvalidParameter(
            "a development needs |D| >= 2".into(),
        ));
    }
    let g = d.group();
    let blocks: Vec<Vec<usize>> = (0..g.order())
        .map(|t| d.elements().iter().map(|&x| g.add(x, t)).collect())
        .collect();
    let structure = IncidenceStructure::from_blocks(g.order(), blocks, true)?;
    let repeated_blocks = structure.has_repeated_blocks();
    Ok(Development {
        structure,
        repeated_blocks,
    })
}

/// Cayley graph adjacency: (g, h) = 1 iff g - h ∈ D.
pub fn cayley_graph(d: &GroupSubset) -> Result<Matrix<i64>> {
    if !d.is_symmetric_without_identity() {
        return Err(Error::Hypothesis(
            "Cayley graph needs -D = D and 0 not in D".into(),
        ));
    }
    let g = d.group();
    Ok(Matrix::from_fn(g.order(), g.order(), |x, y| {
        i64::from(d.contains(g.sub(x, y)))
    }))
}

/// The additive group of GF(q); element indices coincide with field indices.
pub fn additive_group(field: &FiniteField) -> AbelianGroup {
    AbelianGroup::new(vec![field.characteristic(); field.degree() as usize])
        .expect("field order is capped")
}

/// The nonzero squares of GF(q) inside its additive group.
pub fn quadratic_residue_set(field: &FiniteField) -> GroupSubset {
    let squares = cyclotomic_class(field, 2, 0).expect("q is odd");
    GroupSubset::new(
        additive_group(field),
        squares.into_iter().map(|x| x as usize).collect(),
    )
    .expect("squares are distinct field elements")
}

fn plane_subset(plane: &FieldPlane, keep: impl Fn(bool, bool) -> bool) -> GroupSubset {
    let f = plane.field();
    let q = f.order();
    let mut elements = Vec::new();
    for a in 1..q {
        for b in 1..q {
            if keep(f.is_square(a), f.is_square(b)) {
                elements.push(plane.index(a, b));
            }
        }
    }
    GroupSubset::new(plane.group().clone(), elements).expect("distinct plane points")
}

/// D = {(a, b) : a, b both nonzero squares or both nonsquares}.
pub fn same_class_set(plane: &FieldPlane) -> GroupSubset {
    plane_subset(plane, |x, y| x == y)
}

/// D̃ = {(a, b) : one of a, b a nonzero square, the other a nonsquare}.
pub fn mixed_class_set(plane: &FieldPlane) -> GroupSubset {
    plane_subset(plane, |x, y| x != y)
}

/// F_q × {0} minus the origin, as a subset of the plane.
pub fn plane_axis_first(plane: &FieldPlane) -> GroupSubset {
    let q = plane.field().order();
    GroupSubset::new(
        plane.group().clone(),
        (1..q).map(|a| plane.index(a, 0)).collect(),
    )
    .expect("distinct plane points")
}

/// {0} × F_q minus the origin.
pub fn plane_axis_second(plane: &FieldPlane) -> GroupSubset {
    let q = plane.field().order();
    GroupSubset::new(
        plane.group().clone(),
        (1..q).map(|b| plane.index(0, b)).collect(),
    )
    .expect("distinct plane points")
}
