//! Incidence structures and their exact classification as t-designs or
//! t-adesigns.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A point set `0..v` together with a list of blocks.
///
/// Blocks are kept canonical: points sorted inside each block and the block
/// list sorted lexicographically. Repeated blocks are rejected unless the
/// structure was created with `allow_multiset`.
#[derive(Clone)]
pub struct IncidenceStructure {
    v: usize,
    labels: Option<Vec<String>>,
    blocks: Vec<Vec<usize>>,
    allow_multiset: bool,
    // per point, the set of blocks through it
    point_index: OnceLock<Vec<Bitset>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Design,
    Adesign,
    Neither,
    NotUniformBlockSize,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of [`IncidenceStructure::classify`].
///
/// `lambda` is the smallest replication number over all t-subsets. For a
/// structure with non-uniform block size every numeric field is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub t: usize,
    pub verdict: Verdict,
    pub lambda: Option<u64>,
    pub r_min: Option<u64>,
    pub r_max: Option<u64>,
    pub count_low: Option<u64>,
    pub count_high: Option<u64>,
    pub v: usize,
    pub b: usize,
    pub k: Option<usize>,
    /// Replication number → number of t-subsets attaining it.
    #[serde(skip)]
    pub histogram: BTreeMap<u64, u64>,
}

impl Classification {
    pub fn is_design(&self) -> bool {
        self.verdict == Verdict::Design
    }

    pub fn is_adesign(&self) -> bool {
        self.verdict == Verdict::Adesign
    }

    /// One-line human summary, e.g. `Design, λ=1, b=7`.
    pub fn summary(&self) -> String {
        match self.lambda {
            Some(l) => format!("{}, λ={}, b={}", self.verdict, l, self.b),
            None => format!("{}, b={}", self.verdict, self.b),
        }
    }
}

/// Which of the two counting identities of a 2-design hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// bk = vr
    pub block_count: bool,
    /// r(k-1) = (v-1)λ
    pub replication: bool,
}

impl IdentityReport {
    pub fn both(&self) -> bool {
        self.block_count && self.replication
    }
}

pub fn design_identities(v: u64, k: u64, lambda: u64, b: u64, r: u64) -> IdentityReport {
    IdentityReport {
        block_count: b * k == v * r,
        replication: r * (k.saturating_sub(1)) == (v.saturating_sub(1)) * lambda,
    }
}

/// Result of checking one of the incidence-matrix identities
/// `AAᵀ = rI + λ(J-I)` or `AAᵀ = rI + λS + (λ+1)(J-I-S)`, each together
/// with `AᵀJ = kJ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatrixVerdict {
    Holds { r: u64, lambda: u64 },
    DoesNotHold,
    NonUniformBlockSize,
    NonConstantReplication,
}

impl MatrixVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, MatrixVerdict::Holds { .. })
    }
}

impl IncidenceStructure {
    pub fn from_blocks(v: usize, blocks: Vec<Vec<usize>>, allow_multiset: bool) -> Result<Self> {
        let mut canon = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            block.sort_unstable();
            if let Some(&p) = block.iter().find(|&&p| p >= v) {
                return Err(Error::PointOutOfRange { point: p, v });
            }
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedPoint(block));
            }
            canon.push(block);
        }
        canon.sort();
        if !allow_multiset {
            if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateBlock(w[0].clone()));
            }
        }
        Ok(IncidenceStructure {
            v,
            labels: None,
            blocks: canon,
            allow_multiset,
            point_index: OnceLock::new(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.v {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} points",
                labels.len(),
                self.v
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn allows_multiset(&self) -> bool {
        self.allow_multiset
    }

    pub fn has_repeated_blocks(&self) -> bool {
        self.blocks.windows(2).any(|w| w[0] == w[1])
    }

    /// The common block size, if every block has the same size.
    pub fn uniform_block_size(&self) -> Option<usize> {
        let k = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    fn point_index(&self) -> &[Bitset] {
        self.point_index.get_or_init(|| {
            let mut idx = vec![Bitset::new(self.blocks.len()); self.v];
            for (j, block) in self.blocks.iter().enumerate() {
                for &p in block {
                    idx[p].insert(j);
                }
            }
            idx
        })
    }

    /// Number of blocks containing every point of `subset` (with multiplicity).
    pub fn replication(&self, subset: &[usize]) -> Result<u64> {
        if let Some(&p) = subset.iter().find(|&&p| p >= self.v) {
            return Err(Error::PointOutOfRange {
                point: p,
                v: self.v,
            });
        }
        let idx = self.point_index();
        match subset {
            [] => Ok(self.b() as u64),
            [p] => Ok(idx[*p].count()),
            [p, q] => Ok(idx[*p].and_count(&idx[*q])),
            [p, rest @ ..] => {
                let mut acc = idx[*p].clone();
                let mut tmp = acc.clone();
                for &q in rest {
                    acc.and_into(&idx[q], &mut tmp);
                    std::mem::swap(&mut acc, &mut tmp);
                }
                Ok(acc.count())
            }
        }
    }

    /// Replication number histogram over all t-subsets of points.
    pub fn replication_histogram(&self, t: usize) -> BTreeMap<u64, u64> {
        let mut hist = BTreeMap::new();
        let idx = self.point_index();
        let b = self.b();
        if t == 0 {
            hist.insert(b as u64, 1);
            return hist;
        }
        if t == 2 {
            for x in 0..self.v {
                for y in x + 1..self.v {
                    *hist.entry(idx[x].and_count(&idx[y])).or_insert(0) += 1;
                }
            }
            return hist;
        }
        // depth-first over t-subsets, carrying the running intersection
        let mut stack: Vec<Bitset> = vec![Bitset::full(b); t + 1];
        let mut chosen = vec![0usize; t];
        fn walk(
            idx: &[Bitset],
            v: usize,
            depth: usize,
            start: usize,
            chosen: &mut [usize],
            stack: &mut [Bitset],
            hist: &mut BTreeMap<u64, u64>,
        ) {
            let t = chosen.len();
            if depth == t {
                *hist.entry(stack[t].count()).or_insert(0) += 1;
                return;
            }
            for p in start..=v - (t - depth) {
                chosen[depth] = p;
                let (lo, hi) = stack.split_at_mut(depth + 1);
                lo[depth].and_into(&idx[p], &mut hi[0]);
                walk(idx, v, depth + 1, p + 1, chosen, stack, hist);
            }
        }
        if t <= self.v {
            walk(idx, self.v, 0, 0, &mut chosen, &mut stack, &mut hist);
        }
        hist
    }

    /// Classifies the structure at level `t` by exhaustive counting.
    ///
    /// Requires `0 < t <= k`. Non-uniform block size is reported as a
    /// verdict rather than an error.
    pub fn classify(&self, t: usize) -> Result<Classification> {
        if self.blocks.is_empty() {
            return Err(Error::NoBlocks);
        }
        let Some(k) = self.uniform_block_size() else {
            if t == 0 {
                return Err(Error::BadSubsetSize { t, k: 0 });
            }
            return Ok(Classification {
                t,
                verdict: Verdict::NotUniformBlockSize,
                lambda: None,
                r_min: None,
                r_max: None,
                count_low: None,
                count_high: None,
                v: self.v,
                b: self.b(),
                k: None,
                histogram: BTreeMap::new(),
            });
        };
        if t == 0 || t > k {
            return Err(Error::BadSubsetSize { t, k });
        }
        let histogram = self.replication_histogram(t);
        let r_min = *histogram.keys().next().expect("at least one t-subset");
        let r_max = *histogram.keys().next_back().expect("at least one t-subset");
        let verdict = match r_max - r_min {
            0 => Verdict::Design,
            1 => Verdict::Adesign,
            _ => Verdict::Neither,
        };
        Ok(Classification {
            t,
            verdict,
            lambda: Some(r_min),
            r_min: Some(r_min),
            r_max: Some(r_max),
            count_low: Some(histogram[&r_min]),
            count_high: Some(histogram.get(&(r_min + 1)).copied().unwrap_or(0)),
            v: self.v,
            b: self.b(),
            k: Some(k),
            histogram,
        })
    }

    /// Points and blocks interchanged: point i of the dual is block i here,
    /// block j of the dual lists the blocks through point j.
    pub fn dual(&self) -> Result<Self> {
        let mut blocks = vec![Vec::new(); self.v];
        for (i, block) in self.blocks.iter().enumerate() {
            for &p in block {
                blocks[p].push(i);
            }
        }
        if let Some(p) = blocks.iter().position(Vec::is_empty) {
            return Err(Error::InvalidParameter(format!(
                "point {p} lies in no block, so the dual would have an empty block"
            )));
        }
        let mut sorted = blocks.clone();
        sorted.sort();
        let repeated = sorted.windows(2).any(|w| w[0] == w[1]);
        Self::from_blocks(self.b(), blocks, repeated)
    }

    /// Replaces every block B by V \ B.
    pub fn complement_blocks(&self) -> Result<Self> {
        let mut out = Vec::with_capacity(self.b());
        for block in &self.blocks {
            if block.len() == self.v {
                return Err(Error::EmptyBlock);
            }
            let mut inside = vec![false; self.v];
            for &p in block {
                inside[p] = true;
            }
            out.push((0..self.v).filter(|&p| !inside[p]).collect());
        }
        let s = Self::from_blocks(self.v, out, self.allow_multiset)?;
        Ok(self.carry_labels(s))
    }

    /// Both block lists on the same point set.
    pub fn union(&self, other: &Self, allow_multiset: bool) -> Result<Self> {
        if self.v != other.v {
            return Err(Error::PointCountMismatch(self.v, other.v));
        }
        let blocks = self.blocks.iter().chain(&other.blocks).cloned().collect();
        let s = Self::from_blocks(self.v, blocks, allow_multiset)?;
        Ok(self.carry_labels(s))
    }

    /// Blocks through `p`, with `p` removed, on the point set `V \ {p}`.
    /// Points above `p` shift down by one.
    pub fn contraction(&self, p: usize) -> Result<Self> {
        if p >= self.v {
            return Err(Error::PointOutOfRange {
                point: p,
                v: self.v,
            });
        }
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .filter(|b| b.binary_search(&p).is_ok())
            .map(|b| {
                b.iter()
                    .filter(|&&x| x != p)
                    .map(|&x| if x > p { x - 1 } else { x })
                    .collect()
            })
            .collect();
        if blocks.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "point {p} lies in no block"
            )));
        }
        let mut s = Self::from_blocks(self.v - 1, blocks, self.allow_multiset)?;
        if let Some(labels) = &self.labels {
            let mut l = labels.clone();
            l.remove(p);
            s.labels = Some(l);
        }
        Ok(s)
    }

    /// The v × b 0/1 incidence matrix.
    pub fn incidence_matrix(&self) -> Matrix<i64> {
        let mut a = Matrix::zeros(self.v, self.b());
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                a.set(p, j, 1);
            }
        }
        a
    }

    /// Shared prelude of the two matrix checks: returns (AAᵀ, r).
    fn gram_with_replication(&self) -> std::result::Result<(Matrix<i64>, u64), MatrixVerdict> {
        if self.uniform_block_size().is_none() {
            return Err(MatrixVerdict::NonUniformBlockSize);
        }
        let a = self.incidence_matrix();
        // AᵀJ = kJ means every column of A sums to k
        let cols = a.col_sums();
        if cols.windows(2).any(|w| w[0] != w[1]) {
            return Err(MatrixVerdict::NonUniformBlockSize);
        }
        let g = a.gram();
        let r = g.get(0, 0);
        if (0..self.v).any(|i| g.get(i, i) != r) {
            return Err(MatrixVerdict::NonConstantReplication);
        }
        Ok((g, r as u64))
    }

    /// Checks `AAᵀ = rI + λ(J-I)` and `AᵀJ = kJ` literally.
    pub fn check_design_matrix_identity(&self) -> MatrixVerdict {
        let (g, r) = match self.gram_with_replication() {
            Ok(x) => x,
            Err(v) => return v,
        };
        if self.v < 2 {
            return MatrixVerdict::DoesNotHold;
        }
        let lambda = g.get(0, 1);
        let n = self.v;
        let j_minus_i = &Matrix::ones(n, n) - &Matrix::identity(n);
        let expected = &Matrix::<i64>::identity(n).scale(r as i64) + &j_minus_i.scale(lambda);
        if g == expected {
            MatrixVerdict::Holds {
                r,
                lambda: lambda as u64,
            }
        } else {
            MatrixVerdict::DoesNotHold
        }
    }

    /// Checks `AAᵀ = rI + λS + (λ+1)(J-I-S)` and `AᵀJ = kJ`, where S is the
    /// zero-diagonal 0/1 matrix marking the off-diagonal entries equal to λ.
    ///
    /// Reports `DoesNotHold` when only one off-diagonal value occurs, since
    /// that is the design identity.
    pub fn check_adesign_matrix_identity(&self) -> MatrixVerdict {
        let (g, r) = match self.gram_with_replication() {
            Ok(x) => x,
            Err(v) => return v,
        };
        let n = self.v;
        let off = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
        let Some(lambda) = off.clone().map(|(i, j)| g.get(i, j)).min() else {
            return MatrixVerdict::DoesNotHold;
        };
        let s = Matrix::<i64>::from_fn(n, n, |i, j| i64::from(i != j && g.get(i, j) == lambda));
        let j_minus_i = &Matrix::ones(n, n) - &Matrix::identity(n);
        let rest = &j_minus_i - &s;
        if rest.entries().all(|x| x == 0) {
            return MatrixVerdict::DoesNotHold;
        }
        let expected = &(&Matrix::<i64>::identity(n).scale(r as i64) + &s.scale(lambda))
            + &rest.scale(lambda + 1);
        if g == expected {
            MatrixVerdict::Holds {
                r,
                lambda: lambda as u64,
            }
        } else {
            MatrixVerdict::DoesNotHold
        }
    }

    fn carry_labels(&self, mut s: Self) -> Self {
        s.labels = self.labels.clone();
        s
    }
}

impl PartialEq for IncidenceStructure {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.blocks == other.blocks
    }
}

impl Eq for IncidenceStructure {}

impl fmt::Debug for IncidenceStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IncidenceStructure")
            .field("v", &self.v)
            .field("b", &self.b())
            .field("blocks", &self.blocks)
            .finish()
    }
}

/// The Fano plane as the development of {0, 1, 3} in Z_7.
pub fn fano_plane() -> IncidenceStructure {
    let blocks = (0..7)
        .map(|g| [0, 1, 3].iter().map(|d| (d + g) % 7).collect())
        .collect();
    IncidenceStructure::from_blocks(7, blocks, false).expect("Fano lines are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> IncidenceStructure {
        IncidenceStructure::from_blocks(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]], false).unwrap()
    }

    #[test]
    fn from_blocks_canonicalises_and_validates() {
        let s = IncidenceStructure::from_blocks(3, vec![vec![2, 1], vec![1, 0], vec![0, 2]], false)
            .unwrap();
        assert_eq!(s.blocks(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(fano_plane().b(), 7);
        assert_eq!(
            IncidenceStructure::from_blocks(3, vec![vec![0, 1], vec![0, 1]], false).unwrap_err(),
            Error::DuplicateBlock(vec![0, 1])
        );
        assert!(IncidenceStructure::from_blocks(3, vec![vec![0, 1], vec![0, 1]], true).is_ok());
        assert!(matches!(
            IncidenceStructure::from_blocks(3, vec![vec![0, 3]], false),
            Err(Error::PointOutOfRange { point: 3, v: 3 })
        ));
        assert!(matches!(
            IncidenceStructure::from_blocks(3, vec![vec![1, 1]], false),
            Err(Error::RepeatedPoint(_))
        ));
        assert_eq!(
            IncidenceStructure::from_blocks(3, vec![vec![]], false).unwrap_err(),
            Error::EmptyBlock
        );
    }

    #[test]
    fn replication_counts() {
        let fano = fano_plane();
        assert_eq!(fano.replication(&[0, 1]).unwrap(), 1);
        assert_eq!(fano.replication(&[]).unwrap(), 7);
        assert_eq!(fano.replication(&[4]).unwrap(), 3);
        assert_eq!(triangle().replication(&[0, 1, 2]).unwrap(), 0);
        assert!(triangle().replication(&[5]).is_err());
    }

    #[test]
    fn classify_fano_and_triangle() {
        let c = fano_plane().classify(2).unwrap();
        assert_eq!(c.verdict, Verdict::Design);
        assert_eq!(c.lambda, Some(1));
        assert_eq!(c.count_low, Some(21));
        assert_eq!(c.summary(), "Design, λ=1, b=7");
        let c = fano_plane().classify(3).unwrap();
        assert_eq!(c.verdict, Verdict::Adesign);
        assert_eq!((c.count_low, c.count_high), (Some(28), Some(7)));
        assert!(matches!(
            fano_plane().classify(4),
            Err(Error::BadSubsetSize { t: 4, k: 3 })
        ));
        assert!(fano_plane().classify(0).is_err());
        let empty = IncidenceStructure::from_blocks(3, vec![], false).unwrap();
        assert_eq!(empty.classify(1).unwrap_err(), Error::NoBlocks);
    }

    #[test]
    fn non_uniform_is_a_verdict() {
        let s = IncidenceStructure::from_blocks(4, vec![vec![0, 1], vec![1, 2, 3]], false).unwrap();
        let c = s.classify(2).unwrap();
        assert_eq!(c.verdict, Verdict::NotUniformBlockSize);
        assert_eq!(c.k, None);
        assert_eq!(
            s.check_design_matrix_identity(),
            MatrixVerdict::NonUniformBlockSize
        );
    }

    #[test]
    fn design_identity_report() {
        assert!(design_identities(7, 3, 1, 7, 3).both());
        assert!(design_identities(13, 6, 5, 26, 12).both());
        let r = design_identities(7, 3, 1, 8, 3);
        assert!(!r.block_count);
        assert!(r.replication);
    }

    #[test]
    fn duals() {
        let d = fano_plane().dual().unwrap();
        assert_eq!((d.v(), d.b(), d.uniform_block_size()), (7, 7, Some(3)));
        let dd = d.dual().unwrap();
        assert_eq!(dd.classify(2).unwrap().summary(), "Design, λ=1, b=7");
        // dual blocks are the point supports, up to the block order
        let mut supports: Vec<Vec<usize>> = (0..7)
            .map(|p| {
                (0..7)
                    .filter(|&j| fano_plane().blocks()[j].contains(&p))
                    .collect()
            })
            .collect();
        supports.sort();
        assert_eq!(d.blocks(), supports.as_slice());
        assert_eq!(triangle().dual().unwrap(), triangle());
        let one = IncidenceStructure::from_blocks(2, vec![vec![0, 1]], false).unwrap();
        let d = one.dual().unwrap();
        assert_eq!((d.v(), d.b()), (1, 2));
        assert_eq!(d.blocks(), &[vec![0], vec![0]]);
        let isolated = IncidenceStructure::from_blocks(3, vec![vec![0, 1]], false).unwrap();
        assert!(isolated.dual().is_err());
    }

    #[test]
    fn complements() {
        let c = fano_plane().complement_blocks().unwrap();
        let cl = c.classify(2).unwrap();
        assert_eq!(
            (cl.verdict, cl.lambda, cl.k),
            (Verdict::Design, Some(2), Some(4))
        );
        assert_eq!(c.complement_blocks().unwrap(), fano_plane());
        let t = triangle().complement_blocks().unwrap();
        assert_eq!(t.blocks(), &[vec![0], vec![1], vec![2]]);
        let full = IncidenceStructure::from_blocks(4, vec![vec![0, 1, 2, 3]], false).unwrap();
        assert_eq!(full.complement_blocks().unwrap_err(), Error::EmptyBlock);
    }

    #[test]
    fn unions() {
        let empty = IncidenceStructure::from_blocks(7, vec![], false).unwrap();
        assert_eq!(fano_plane().union(&empty, false).unwrap(), fano_plane());
        assert!(matches!(
            fano_plane().union(&fano_plane(), false),
            Err(Error::DuplicateBlock(_))
        ));
        assert_eq!(fano_plane().union(&fano_plane(), true).unwrap().b(), 14);
        assert!(matches!(
            fano_plane().union(&triangle(), true),
            Err(Error::PointCountMismatch(7, 3))
        ));
    }

    #[test]
    fn contraction_of_fano() {
        for p in 0..7 {
            let c = fano_plane().contraction(p).unwrap();
            assert_eq!((c.v(), c.b()), (6, 3));
            let cl = c.classify(2).unwrap();
            assert_eq!((cl.verdict, cl.lambda), (Verdict::Adesign, Some(0)));
        }
        let s = IncidenceStructure::from_blocks(4, vec![vec![0, 1]], false).unwrap();
        assert!(s.contraction(3).is_err());
        assert!(s.contraction(9).is_err());
    }

    #[test]
    fn incidence_matrices() {
        let a = triangle().incidence_matrix();
        assert_eq!(a.row_sums(), vec![2, 2, 2]);
        let f = fano_plane().incidence_matrix();
        assert!(f
            .row_sums()
            .iter()
            .chain(f.col_sums().iter())
            .all(|&x| x == 3));
        let single = IncidenceStructure::from_blocks(2, vec![vec![0]], false).unwrap();
        let m = single.incidence_matrix();
        assert_eq!((m.rows(), m.cols(), m.get(0, 0), m.get(1, 0)), (2, 1, 1, 0));
    }

    #[test]
    fn matrix_identities() {
        assert_eq!(
            fano_plane().check_design_matrix_identity(),
            MatrixVerdict::Holds { r: 3, lambda: 1 }
        );
        assert_eq!(
            fano_plane().check_adesign_matrix_identity(),
            MatrixVerdict::DoesNotHold
        );
        assert_eq!(
            triangle().check_design_matrix_identity(),
            MatrixVerdict::Holds { r: 2, lambda: 1 }
        );
        let c = fano_plane().contraction(0).unwrap();
        // contraction points all lie in exactly one block
        assert_eq!(
            c.check_adesign_matrix_identity(),
            MatrixVerdict::Holds { r: 1, lambda: 0 }
        );
        let uneven =
            IncidenceStructure::from_blocks(3, vec![vec![0, 1], vec![0, 2]], false).unwrap();
        assert_eq!(
            uneven.check_design_matrix_identity(),
            MatrixVerdict::NonConstantReplication
        );
    }
}
