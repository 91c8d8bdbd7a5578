//! The named constructions of designs and adesigns. Every construction is
//! classified on the spot; nothing it claims is taken on trust.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::json;

use crate::algebra::{FieldDescription, FieldPlane, FiniteField};
use crate::bounds;
use crate::error::{Error, Result};
use crate::graphs::{is_doubly_regular_tournament, is_srg, SrgParams};
use crate::incidence::{Classification, IncidenceStructure, Verdict};
use crate::matrix::{complement_of, plus_identity, Matrix};
use crate::setdiff::{
    same_class_set, mixed_class_set, cayley_graph, development, plane_axis_first, plane_axis_second,
    GroupSubset,
};

/// A parameter tuple t-(v,k,λ) of the given kind.
///
/// `lambda` is None for `Neither`. Claims with `asserted == false` are
/// recorded for comparison only and never count as a mismatch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: Option<u64>,
    pub kind: Verdict,
    pub asserted: bool,
}

impl Claim {
    pub fn new(kind: Verdict, t: usize, v: usize, k: usize, lambda: u64) -> Self {
        Claim {
            t,
            v,
            k,
            lambda: Some(lambda),
            kind,
            asserted: true,
        }
    }

    pub fn neither(t: usize, v: usize, k: usize) -> Self {
        Claim {
            t,
            v,
            k,
            lambda: None,
            kind: Verdict::Neither,
            asserted: true,
        }
    }

    fn recorded(mut self) -> Self {
        self.asserted = false;
        self
    }

    pub fn matches(&self, c: &Classification) -> bool {
        c.t == self.t
            && c.v == self.v
            && c.k == Some(self.k)
            && c.verdict == self.kind
            && (self.lambda.is_none() || c.lambda == self.lambda)
    }

    pub fn label(&self) -> String {
        match self.lambda {
            Some(l) => format!("{}-({},{},{}) {}", self.t, self.v, self.k, l, self.kind),
            None => format!("{}-({},{}) {}", self.t, self.v, self.k, self.kind),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub name: String,
    pub structure: IncidenceStructure,
    pub claims: Vec<Claim>,
    /// One classification per distinct claimed t, in increasing t.
    pub verified: Vec<Classification>,
    pub notes: Vec<String>,
    pub field: Option<FieldDescription>,
    /// The structure this one was derived from, verified in its own right.
    pub parent: Option<Box<ConstructionReport>>,
}

impl ConstructionReport {
    fn build(name: &str, structure: IncidenceStructure, claims: Vec<Claim>) -> Result<Self> {
        let ts: BTreeSet<usize> = claims.iter().map(|c| c.t).collect();
        let verified = ts
            .into_iter()
            .map(|t| structure.classify(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(ConstructionReport {
            name: name.to_string(),
            structure,
            claims,
            verified,
            notes: Vec::new(),
            field: None,
            parent: None,
        })
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    fn with_field(mut self, f: &FiniteField) -> Self {
        self.field = Some(f.describe());
        self
    }

    pub fn classification(&self, t: usize) -> Option<&Classification> {
        self.verified.iter().find(|c| c.t == t)
    }

    /// Asserted claims the classification contradicts, here and in the parent.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .claims
            .iter()
            .filter(|c| c.asserted)
            .filter_map(|c| {
                let got = self
                    .classification(c.t)
                    .expect("classified at every claimed t");
                (!c.matches(got)).then(|| {
                    format!(
                        "{}: claimed {}, found {}",
                        self.name,
                        c.label(),
                        got.summary()
                    )
                })
            })
            .collect();
        if let Some(p) = &self.parent {
            out.extend(p.mismatches());
        }
        out
    }

    pub fn verified_ok(&self) -> bool {
        self.mismatches().is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "name": self.name,
            "v": self.structure.v(),
            "b": self.structure.b(),
            "k": self.structure.uniform_block_size(),
            "claims": self.claims,
            "verified": self.verified,
            "verified_ok": self.verified_ok(),
            "notes": self.notes,
        });
        if let Some(f) = &self.field {
            v["field"] = json!(f);
        }
        if let Some(p) = &self.parent {
            v["parent"] = p.to_json();
        }
        v
    }

    pub fn summary(&self) -> String {
        let mut lines = vec![format!(
            "{}: v={} b={} k={}",
            self.name,
            self.structure.v(),
            self.structure.b(),
            self.structure
                .uniform_block_size()
                .map_or("mixed".into(), |k| k.to_string())
        )];
        for c in &self.claims {
            let got = self.classification(c.t).expect("classified");
            let status = match (c.asserted, c.matches(got)) {
                (true, true) => "ok",
                (true, false) => "MISMATCH",
                (false, true) => "recorded, agrees",
                (false, false) => "recorded, differs",
            };
            lines.push(format!(
                "  claim {:<28} found t={} {}  [{}]",
                c.label(),
                c.t,
                got.summary(),
                status
            ));
        }
        for n in &self.notes {
            lines.push(format!("  note: {n}"));
        }
        if let Some(p) = &self.parent {
            lines.push(format!("  parent {}", p.summary().replace('\n', "\n  ")));
        }
        lines.join("\n")
    }
}

/// Blocks are the supports of the rows of A, or of A + I when flagged.
pub fn row_support_structure(a: &Matrix<i64>, add_identity: bool) -> Result<IncidenceStructure> {
    if !a.is_square() || !a.entries_within(&[0, 1]) {
        return Err(Error::InvalidMatrix(
            "row supports need a square 0/1 matrix".into(),
        ));
    }
    let m = if add_identity {
        if (0..a.rows()).any(|i| a.get(i, i) != 0) {
            return Err(Error::InvalidMatrix("A + I would have an entry 2".into()));
        }
        plus_identity(a)
    } else {
        a.clone()
    };
    let blocks = (0..m.rows())
        .map(|i| (0..m.cols()).filter(|&j| m.get(i, j) == 1).collect())
        .collect();
    IncidenceStructure::from_blocks(a.rows(), blocks, true)
}

fn simple_union(a: &IncidenceStructure, b: &IncidenceStructure) -> Result<IncidenceStructure> {
    a.union(b, false).map_err(|e| match e {
        Error::DuplicateBlock(blk) => {
            Error::Hypothesis(format!("the two block families share the block {blk:?}"))
        }
        e => e,
    })
}

fn paley_params(a: &Matrix<i64>, min_n: u64) -> Result<SrgParams> {
    let p = is_srg(a)?.ok_or_else(|| Error::Hypothesis("graph is not strongly regular".into()))?;
    if !p.is_paley_type() {
        return Err(Error::Hypothesis(format!(
            "SRG({},{},{},{}) is not of Paley type",
            p.n, p.k, p.lambda, p.mu
        )));
    }
    if p.n < min_n {
        return Err(Error::Hypothesis(format!("need n >= {min_n}, got {}", p.n)));
    }
    Ok(p)
}

fn drt_order(a: &Matrix<i64>) -> Result<usize> {
    let t = is_doubly_regular_tournament(a)?
        .ok_or_else(|| Error::Hypothesis("tournament is not doubly regular".into()))?;
    if t.n < 7 {
        return Err(Error::Hypothesis(format!("need n >= 7, got {}", t.n)));
    }
    Ok(t.n as usize)
}

fn union_of_rows(a: &Matrix<i64>, plus_i: bool) -> Result<IncidenceStructure> {
    let first = row_support_structure(a, plus_i)?;
    let second = row_support_structure(&complement_of(a), plus_i)?;
    simple_union(&first, &second)
}

/// B_A ∪ B_A' with A' = J - I - A, for a Paley-type graph A on n >= 9
/// vertices: a 2-(n,(n-1)/2,(n-3)/2) design and a 3-(n,(n-1)/2,(n-9)/4)
/// adesign.
pub fn paley_union(a: &Matrix<i64>) -> Result<ConstructionReport> {
    let n = paley_params(a, 9)?.n as usize;
    let k = (n - 1) / 2;
    let claims = vec![
        Claim::new(Verdict::Design, 2, n, k, (n as u64 - 3) / 2),
        Claim::new(Verdict::Adesign, 3, n, k, (n as u64 - 9) / 4),
    ];
    ConstructionReport::build("paley-union", union_of_rows(a, false)?, claims)
}

/// B_{A+I} ∪ B_{A'+I} for a Paley-type graph on n >= 5 vertices.
///
/// Counting gives a 2-(n,(n+1)/2,(n+1)/2) design and a 3-(n,(n+1)/2,(n-1)/4)
/// adesign. The commonly quoted form with λ = (n-1)/2 at t = 2 and block
/// size (n-1)/2 at t = 3 is kept as unasserted claims.
pub fn paley_union_complementary(a: &Matrix<i64>) -> Result<ConstructionReport> {
    let n = paley_params(a, 5)?.n as usize;
    let nn = n as u64;
    let k = (n + 1) / 2;
    let mut claims = vec![
        Claim::new(Verdict::Design, 2, n, k, (nn + 1) / 2),
        Claim::new(Verdict::Design, 2, n, k, (nn - 1) / 2).recorded(),
        Claim::new(Verdict::Adesign, 3, n, (n - 1) / 2, (nn - 1) / 4).recorded(),
    ];
    let degenerate = n < 9;
    let t3 = Claim::new(Verdict::Adesign, 3, n, k, (nn - 1) / 4);
    claims.push(if degenerate { t3.recorded() } else { t3 });
    let mut r = ConstructionReport::build("paley-union-comp", union_of_rows(a, true)?, claims)?
        .note("lambda at t=2 is (n+1)/2 by bk = vr and r(k-1) = (v-1)lambda; (n-1)/2 is not attainable")
        .note("blocks have size (n+1)/2 at every level; block size (n-1)/2 at t=3 is not attainable");
    if degenerate {
        r = r.note(format!(
            "n={n} is degenerate: t=3 equals the block size, so the t=3 claim is recorded only"
        ));
    }
    Ok(r)
}

/// B_A ∪ B_A' for a doubly regular tournament on n >= 7 vertices: a
/// 2-(n,(n-1)/2,(n-3)/2) design and a 3-(n,(n-1)/2,(n-7)/4) adesign.
pub fn tournament_union(a: &Matrix<i64>) -> Result<ConstructionReport> {
    let n = drt_order(a)?;
    let k = (n - 1) / 2;
    let claims = vec![
        Claim::new(Verdict::Design, 2, n, k, (n as u64 - 3) / 2),
        Claim::new(Verdict::Adesign, 3, n, k, (n as u64 - 7) / 4),
    ];
    ConstructionReport::build("drt-union", union_of_rows(a, false)?, claims)
}

/// B_{A+I} ∪ B_{A'+I} for a doubly regular tournament: a
/// 2-(n,(n+1)/2,(n+1)/2) design and a 3-(n,(n+1)/2,(n-3)/4) adesign.
pub fn tournament_union_complementary(a: &Matrix<i64>) -> Result<ConstructionReport> {
    let n = drt_order(a)?;
    let k = (n + 1) / 2;
    let claims = vec![
        Claim::new(Verdict::Design, 2, n, k, (n as u64 + 1) / 2),
        Claim::new(Verdict::Adesign, 3, n, k, (n as u64 - 3) / 4),
    ];
    ConstructionReport::build("drt-union-comp", union_of_rows(a, true)?, claims)
}

/// B_{A+I} for an SRG(v,k,λ,μ) with μ = λ+1 or λ+3: a 2-(v,k+1,λ') adesign
/// with λ' = λ+1 resp. λ+2.
pub fn srg_plus_identity(a: &Matrix<i64>) -> Result<ConstructionReport> {
    let p = is_srg(a)?.ok_or_else(|| Error::Hypothesis("graph is not strongly regular".into()))?;
    let lambda_prime = if p.mu == p.lambda + 1 {
        p.lambda + 1
    } else if p.mu == p.lambda + 3 {
        p.lambda + 2
    } else {
        return Err(Error::Hypothesis(format!(
            "need mu = lambda+1 or lambda+3, got lambda={}, mu={}",
            p.lambda, p.mu
        )));
    };
    let claims = vec![Claim::new(
        Verdict::Adesign,
        2,
        p.n as usize,
        p.k as usize + 1,
        lambda_prime,
    )];
    ConstructionReport::build("srg-plus-i", row_support_structure(a, true)?, claims)
}

/// Which entry hypothesis on A + A' held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairCase {
    /// A + A' is a 0/1 matrix.
    ZeroOne,
    /// A + A' + I is 1/2-valued off the diagonal.
    OneTwo,
}

/// B_A ∪ B_A' (or B_{A+I} ∪ B_{A'+I} when `complementary`) for two
/// SRG(v,k,λ,μ) adjacency matrices meeting the pair hypotheses.
///
/// The predicted pair counts follow from
/// `A² + A'² = 2kI + (λ-μ)(A+A') + 2μ(J-I)` and its A+I analogue; the
/// asserted λ' is the smaller of the two. The case-table value is recorded
/// in the notes.
pub fn srg_pair_union(
    a: &Matrix<i64>,
    a2: &Matrix<i64>,
    complementary: bool,
) -> Result<ConstructionReport> {
    let p = is_srg(a)?
        .ok_or_else(|| Error::Hypothesis("first graph is not strongly regular".into()))?;
    let p2 = is_srg(a2)?
        .ok_or_else(|| Error::Hypothesis("second graph is not strongly regular".into()))?;
    if p != p2 {
        return Err(Error::Hypothesis(format!(
            "parameters differ: {p:?} vs {p2:?}"
        )));
    }
    let diff = p.mu as i64 - p.lambda as i64;
    let allowed: &[i64] = if complementary { &[1, 3] } else { &[-1, 1] };
    if !allowed.contains(&diff) {
        return Err(Error::Hypothesis(format!(
            "mu - lambda = {diff}, need one of {allowed:?}{}",
            if complementary {
                " for the A+I variant"
            } else {
                ""
            }
        )));
    }
    let n = a.rows();
    let sum = a + a2;
    let off = |i: usize, j: usize| sum.get(i, j);
    let off_entries =
        || (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
    let case = if sum.entries_within(&[0, 1]) {
        PairCase::ZeroOne
    } else if off_entries().all(|(i, j)| (1..=2).contains(&off(i, j))) {
        PairCase::OneTwo
    } else {
        return Err(Error::Hypothesis(
            "A + A' is not 0/1 and A + A' + I is not 1/2-valued off the diagonal".into(),
        ));
    };
    // pair count = 2μ + c·s, s ranging over the off-diagonal values of A + A'
    let c = if complementary { 2 - diff } else { -diff };
    let s_values: &[i64] = match case {
        PairCase::ZeroOne => &[0, 1],
        PairCase::OneTwo => &[1, 2],
    };
    let counts: Vec<i64> = s_values.iter().map(|s| 2 * p.mu as i64 + c * s).collect();
    let lambda_prime = *counts.iter().min().expect("two values") as u64;
    let mu2 = 2 * p.mu as i64;
    let table: [i64; 2] = match case {
        PairCase::ZeroOne => [mu2, mu2 - 1],
        PairCase::OneTwo => [mu2 + 1, mu2 - 2],
    };
    let first = row_support_structure(a, complementary)?;
    let second = row_support_structure(a2, complementary)?;
    let k = p.k as usize + usize::from(complementary);
    let claims = vec![Claim::new(Verdict::Adesign, 2, n, k, lambda_prime)];
    let r = ConstructionReport::build("srg-pair-union", simple_union(&first, &second)?, claims)?;
    let in_table = table.contains(&(lambda_prime as i64));
    Ok(r.note(format!(
        "case {case:?}; pair counts {counts:?}; case table lists {table:?}; lambda'={lambda_prime} {}",
        if in_table { "is listed" } else { "is not listed" }
    )))
}

/// Cayley graphs of the plane subsets D and D̃ over GF(q)².
pub fn class_pair(q: u64) -> Result<(Matrix<i64>, Matrix<i64>, FiniteField)> {
    let plane = odd_plane(q)?;
    let a = cayley_graph(&same_class_set(&plane))?;
    let a2 = cayley_graph(&mixed_class_set(&plane))?;
    Ok((a, a2, plane.field().clone()))
}

fn odd_plane(q: u64) -> Result<FieldPlane> {
    let f = FiniteField::with_order(q)?;
    if q > 1024 {
        return Err(Error::OrderTooLarge(q * q));
    }
    Ok(FieldPlane::new(f))
}

/// The pair union over the class pair at q, plain or complementary.
///
/// The complementary variant uses the complement graphs with A + I blocks,
/// i.e. the developments of G \ D and G \ D̃.
pub fn class_pair_union(q: u64, complementary: bool) -> Result<ConstructionReport> {
    let (a, a2, f) = class_pair(q)?;
    let r = if complementary {
        srg_pair_union(&complement_of(&a), &complement_of(&a2), true)?
    } else {
        srg_pair_union(&a, &a2, false)?
    };
    Ok(r.with_field(&f))
}

struct Derived {
    ground: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    k: usize,
    lambda: usize,
    n: usize,
}

fn derived_blocks(a: &Matrix<i64>, row: usize) -> Result<Derived> {
    let p = paley_params(a, 5)?;
    if p.lambda < 2 {
        return Err(Error::Hypothesis(format!(
            "need lambda >= 2, got {}",
            p.lambda
        )));
    }
    let n = a.rows();
    if row >= n {
        return Err(Error::PointOutOfRange { point: row, v: n });
    }
    let support = |i: usize| -> Vec<usize> { (0..n).filter(|&j| a.get(i, j) == 1).collect() };
    let r = support(row);
    let k = r.len();
    let lambda = p.lambda as usize;
    let pos = |x: usize| r.binary_search(&x).expect("point of R");
    let mut blocks = Vec::with_capacity(n - 1);
    for s in (0..n).filter(|&s| s != row) {
        let mut b: Vec<usize> = support(s)
            .into_iter()
            .filter(|x| r.binary_search(x).is_ok())
            .map(pos)
            .collect();
        match b.len() {
            l if l == lambda + 1 => {}
            l if l == lambda => b.push(k),
            l => {
                return Err(Error::Hypothesis(format!(
                    "row {s} meets R in {l} points, expected {lambda} or {}",
                    lambda + 1
                )))
            }
        }
        blocks.push(b);
    }
    Ok(Derived {
        ground: r,
        blocks,
        k,
        lambda,
        n,
    })
}

fn labels_for(ground: &[usize]) -> Vec<String> {
    ground
        .iter()
        .map(|x| x.to_string())
        .chain(std::iter::once("inf".to_string()))
        .collect()
}

fn repeated_note(s: &IncidenceStructure) -> Option<String> {
    s.has_repeated_blocks()
        .then(|| "some blocks are repeated".to_string())
}

/// R = support of `row`; blocks R ∩ S over the other rows S, with ∞ adjoined
/// to those of size λ. A 2-(k+1,λ+1,λ-1) adesign on R ∪ {∞} with v-1 blocks.
pub fn derived_at_infinity(a: &Matrix<i64>, row: usize) -> Result<ConstructionReport> {
    let d = derived_blocks(a, row)?;
    let s = IncidenceStructure::from_blocks(d.k + 1, d.blocks, true)?
        .with_labels(labels_for(&d.ground))?;
    let claims = vec![Claim::new(
        Verdict::Adesign,
        2,
        d.k + 1,
        d.lambda + 1,
        d.lambda as u64 - 1,
    )];
    let mut r = ConstructionReport::build("derived-inf", s, claims)?;
    if r.structure.b() != d.n - 1 {
        return Err(Error::Hypothesis("block count differs from v-1".into()));
    }
    if let Some(n) = repeated_note(&r.structure) {
        r = r.note(n);
    }
    Ok(r)
}

/// Complements of the derived blocks within R ∪ {∞}: a 2-(k+1,λ+2,λ+1)
/// adesign.
pub fn residual_at_infinity(a: &Matrix<i64>, row: usize) -> Result<ConstructionReport> {
    let d = derived_blocks(a, row)?;
    let s = IncidenceStructure::from_blocks(d.k + 1, d.blocks, true)?
        .complement_blocks()?
        .with_labels(labels_for(&d.ground))?;
    let claims = vec![Claim::new(
        Verdict::Adesign,
        2,
        d.k + 1,
        d.k - d.lambda,
        d.lambda as u64 + 1,
    )];
    let mut r = ConstructionReport::build("residual-inf", s, claims)?
        .note("blocks are complemented within R and the point at infinity");
    if let Some(n) = repeated_note(&r.structure) {
        r = r.note(n);
    }
    Ok(r)
}

/// Modified Bose triple system on Z_n × Z_3, point (a, i) at index 3a + i.
///
/// The second family repeats some blocks of the first two families; the
/// block set is taken without repeats, which gives 3n² - 2n blocks.
pub fn bose_modified(n: usize) -> Result<ConstructionReport> {
    if n <= 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("need odd n > 3, got {n}")));
    }
    let half = (n + 1) / 2;
    let pt = |a: usize, i: usize| 3 * (a % n) + i % 3;
    let mid = |a: usize, b: usize| (half * (a + b)) % n;
    let mut emitted = 0usize;
    let mut set = BTreeSet::new();
    let mut push = |mut b: Vec<usize>| {
        b.sort_unstable();
        emitted += 1;
        set.insert(b);
    };
    for i in 0..3 {
        for a in 0..n {
            for b in 0..n {
                if a < b {
                    push(vec![pt(a, i), pt(b, i), pt(mid(a, b), i + 1)]);
                } else if a != (b + n - 1) % n {
                    push(vec![pt(a, i), pt(b + n - 1, i), pt(mid(a, b), i + 1)]);
                }
            }
        }
    }
    for a in 0..n {
        push(vec![pt(a, 0), pt(a, 1), pt(a, 2)]);
    }
    let distinct = set.len();
    let s = IncidenceStructure::from_blocks(3 * n, set.into_iter().collect(), false)?;
    let claims = vec![Claim::new(Verdict::Adesign, 2, 3 * n, 3, 1)];
    let expected = 3 * n * n - 2 * n;
    let r = ConstructionReport::build("bose-mod", s, claims)?.note(format!(
        "{emitted} blocks emitted, {distinct} distinct, 3n^2-2n = {expected}"
    ));
    if distinct != expected {
        return Err(Error::Hypothesis(format!(
            "got {distinct} blocks, expected {expected}"
        )));
    }
    Ok(r)
}

/// Unions of two symmetric pairs {a-i, a+i} ∪ {a-j, a+j} over Z_n: a
/// 2-(n,4,3(n-3)/2) design that is not a 3-adesign when 3 divides n.
///
/// Double counting pairs gives 6b = λ·C(n,2), so λ = n happens only at
/// n = 9; that reading is kept as an unasserted claim.
pub fn pair_union_counterexample(n: usize) -> Result<ConstructionReport> {
    if n < 9 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("need odd n >= 9, got {n}")));
    }
    let h = (n - 1) / 2;
    let mut blocks = Vec::new();
    for a in 0..n {
        for i in 1..=h {
            for j in i + 1..=h {
                blocks.push(vec![
                    (a + n - i) % n,
                    (a + i) % n,
                    (a + n - j) % n,
                    (a + j) % n,
                ]);
            }
        }
    }
    let s = IncidenceStructure::from_blocks(n, blocks, true)?;
    let t3 = Claim::neither(3, n, 4);
    let claims = vec![
        Claim::new(Verdict::Design, 2, n, 4, 3 * (n as u64 - 3) / 2),
        Claim::new(Verdict::Design, 2, n, 4, n as u64).recorded(),
        if n % 3 == 0 { t3 } else { t3.recorded() },
    ];
    let mut r = ConstructionReport::build("pair-union-example", s, claims)?;
    if n % 3 == 0 {
        let step = n / 3;
        let y = r.structure.replication(&[0, step, 2 * step])?;
        r = r.note(format!(
            "triple {{0,{},{}}} lies in {y} blocks",
            step,
            2 * step
        ));
    }
    if let Some(n) = repeated_note(&r.structure) {
        r = r.note(n);
    }
    Ok(r)
}

fn union_subsets(a: &GroupSubset, b: &GroupSubset) -> Result<GroupSubset> {
    a.union(b)
}

/// Dev(D ∪ (F_q × {0})) ∪ Dev(D̃ ∪ ({0} × F_q)) on GF(q)²: a
/// 3-(q²,(q²+1)/2,(q²-1)/4) adesign with 2q² blocks, also a 2-design.
pub fn contraction_parent(q: u64) -> Result<ConstructionReport> {
    let plane = odd_plane(q)?;
    let g = plane.group().clone();
    let origin = GroupSubset::new(g, vec![0])?;
    let first = union_subsets(
        &union_subsets(&same_class_set(&plane), &plane_axis_first(&plane))?,
        &origin,
    )?;
    let second = union_subsets(
        &union_subsets(&mixed_class_set(&plane), &plane_axis_second(&plane))?,
        &origin,
    )?;
    let d1 = development(&first)?;
    let d2 = development(&second)?;
    if d1.repeated_blocks || d2.repeated_blocks {
        return Err(Error::Hypothesis(
            "developments have repeated translates".into(),
        ));
    }
    let s = simple_union(&d1.structure, &d2.structure)?;
    let v = (q * q) as usize;
    let k = (v + 1) / 2;
    let claims = vec![
        Claim::new(Verdict::Design, 2, v, k, k as u64),
        Claim::new(Verdict::Adesign, 3, v, k, (v as u64 - 1) / 4),
    ];
    Ok(ConstructionReport::build("contraction-parent", s, claims)?
        .note(format!(
            "{} blocks, i.e. 2q^2; a count of 2q would not cover every point",
            2 * v
        ))
        .with_field(plane.field()))
}

/// The contraction of [`contraction_parent`] at (0,0): a
/// 2-(q²-1,(q²-1)/2,(q²-1)/4) adesign with q²+1 blocks meeting the Horsley
/// covering bound.
pub fn contraction_minimal_covering(q: u64) -> Result<ConstructionReport> {
    let parent = contraction_parent(q)?;
    let c = parent.structure.contraction(0)?;
    let v = (q * q - 1) as usize;
    let lambda = v as u64 / 4;
    let claims = vec![Claim::new(Verdict::Adesign, 2, v, v / 2, lambda)];
    let mut r = ConstructionReport::build("contraction-cover", c, claims)?;
    let b = r.structure.b() as u64;
    let horsley = bounds::horsley_covering(v as u64, v as u64 / 2, lambda)?;
    let minimal = bounds::is_minimal_covering(&r.structure, lambda)?;
    r = r.note(format!(
        "b={b}, q^2+1={}, horsley covering {}, minimal covering: {minimal}",
        q * q + 1,
        horsley.map_or("inapplicable".to_string(), |h| format!(
            "{} (r={}, d={})",
            h.value, h.r, h.d
        ))
    ));
    if b != q * q + 1 || horsley.map(|h| h.value) != Some(b) || !minimal {
        return Err(Error::Hypothesis(format!(
            "contraction does not meet the covering bound (b={b})"
        )));
    }
    r.field = parent.field.clone();
    r.parent = Some(Box::new(parent));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complement_graph, latin_square_graph, paley_graph, paley_tournament};
    use crate::setdiff::quadratic_residue_set;

    fn field(q: u64) -> FiniteField {
        FiniteField::with_order(q).unwrap()
    }

    fn paley(q: u64) -> Matrix<i64> {
        paley_graph(&field(q)).unwrap()
    }

    fn drt(q: u64) -> Matrix<i64> {
        paley_tournament(&field(q)).unwrap()
    }

    fn found(r: &ConstructionReport, t: usize) -> (Verdict, Option<u64>, Option<usize>) {
        let c = r.classification(t).unwrap();
        (c.verdict, c.lambda, c.k)
    }

    #[test]
    fn row_supports() {
        let pent = paley(5);
        let s = row_support_structure(&pent, false).unwrap();
        assert_eq!((s.b(), s.uniform_block_size()), (5, Some(2)));
        let s = row_support_structure(&paley(13), true).unwrap();
        assert_eq!((s.b(), s.uniform_block_size()), (13, Some(7)));
        let s = row_support_structure(&Matrix::identity(4), false).unwrap();
        assert_eq!((s.b(), s.uniform_block_size()), (4, Some(1)));
        assert!(row_support_structure(&Matrix::zeros(3, 3), false).is_err());
        assert!(row_support_structure(&Matrix::identity(3), true).is_err());
    }

    #[test]
    fn paley_unions() {
        let r = paley_union(&paley(13)).unwrap();
        assert!(r.verified_ok(), "{:?}", r.mismatches());
        assert_eq!(r.structure.b(), 26);
        assert_eq!(found(&r, 2), (Verdict::Design, Some(5), Some(6)));
        assert_eq!(found(&r, 3), (Verdict::Adesign, Some(1), Some(6)));
        let r = paley_union(&paley(17)).unwrap();
        assert_eq!((found(&r, 2).1, found(&r, 3).1), (Some(7), Some(2)));
        assert!(paley_union(&complement_graph(&paley(13)).unwrap()).is_ok());
        let petersen = Matrix::from_fn(10, 10, |i, j| {
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
                .collect();
            let ((a, b), (c, d)) = (pairs[i], pairs[j]);
            i64::from(a != c && a != d && b != c && b != d)
        });
        assert!(matches!(paley_union(&petersen), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn paley_union_complementary_counts() {
        let r = paley_union_complementary(&paley(13)).unwrap();
        assert!(r.verified_ok(), "{:?}", r.mismatches());
        assert_eq!(found(&r, 2), (Verdict::Design, Some(7), Some(7)));
        assert_eq!(found(&r, 3), (Verdict::Adesign, Some(3), Some(7)));
        let hist = &r.classification(3).unwrap().histogram;
        assert_eq!(hist, &std::collections::BTreeMap::from([(3, 234), (4, 52)]));
        let r = paley_union_complementary(&paley(9)).unwrap();
        assert_eq!(found(&r, 2), (Verdict::Design, Some(5), Some(5)));
        let r = paley_union_complementary(&paley(5)).unwrap();
        assert_eq!(found(&r, 3), (Verdict::Design, Some(1), Some(3)));
        assert!(r.verified_ok());
        assert!(r.notes.iter().any(|n| n.contains("degenerate")));
    }

    #[test]
    fn tournament_unions() {
        let r = tournament_union(&drt(7)).unwrap();
        assert!(r.verified_ok(), "{:?}", r.mismatches());
        assert_eq!(r.structure.b(), 14);
        assert_eq!(found(&r, 2), (Verdict::Design, Some(2), Some(3)));
        assert_eq!(found(&r, 3), (Verdict::Adesign, Some(0), Some(3)));
        let r = tournament_union(&drt(11)).unwrap();
        assert_eq!((found(&r, 2).1, found(&r, 3).1), (Some(4), Some(1)));
        assert!(tournament_union(&drt(3)).is_err());
        for q in [7, 11, 19] {
            let r = tournament_union_complementary(&drt(q)).unwrap();
            assert!(r.verified_ok(), "{:?}", r.mismatches());
        }
        let r = tournament_union_complementary(&drt(19)).unwrap();
        assert_eq!((found(&r, 2).1, found(&r, 3).1), (Some(10), Some(4)));
    }

    #[test]
    fn plus_identity() {
        let rook = latin_square_graph(&field(5), 2).unwrap();
        let r = srg_plus_identity(&complement_graph(&rook).unwrap()).unwrap();
        assert!(r.verified_ok(), "{:?}", r.mismatches());
        assert_eq!(found(&r, 2), (Verdict::Adesign, Some(11), Some(17)));
        let r = srg_plus_identity(&paley(13)).unwrap();
        assert_eq!(found(&r, 2), (Verdict::Adesign, Some(3), Some(7)));
        assert!(srg_plus_identity(&rook).is_err());
    }

    #[test]
    fn pair_unions() {
        let r = class_pair_union(5, false).unwrap();
        assert!(r.verified_ok(), "{:?}", r.mismatches());
        assert_eq!(r.structure.b(), 50);
        assert_eq!(found(&r, 2), (Verdict::Adesign, Some(4), Some(8)));
        let r = class_pair_union(5, true).unwrap();
        assert!(r.verified_ok(), "{:?}", r.mismatches());
        assert_eq!(found(&r, 2), (Verdict::Adesign, Some(22), Some(17)));
        let a = paley(13);
        assert!(matches!(
            srg_pair_union(&a, &a, false),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn derived_and_residual() {
        let a = paley(13);
        for row in [0, 5] {
            let r = derived_at_infinity(&a, row).unwrap();
            assert!(r.verified_ok(), "{:?}", r.mismatches());
            assert_eq!(r.structure.b(), 12);
            assert_eq!(found(&r, 2), (Verdict::Adesign, Some(1), Some(3)));
            let r = residual_at_infinity(&a, row).unwrap();
            assert!(r.verified_ok(), "{:?}", r.mismatches());
            assert_eq!(found(&r, 2), (Verdict::Adesign, Some(3), Some(4)));
        }
        let r = residual_at_infinity(&paley(17), 0).unwrap();
        assert_eq!(found(&r, 2), (Verdict::Adesign, Some(4), Some(5)));
        assert!(derived_at_infinity(&paley(9), 0).is_err());
        assert!(residual_at_infinity(&paley(9), 0).is_err());
        assert!(derived_at_infinity(&a, 13).is_err());
        let dev = development(&quadratic_residue_set(&field(13)))
            .unwrap()
            .structure;
        assert_eq!(dev.b(), 13);
    }

    #[test]
    fn bose() {
        for (n, b) in [(5, 65), (7, 133), (9, 225)] {
            let r = bose_modified(n).unwrap();
            assert!(r.verified_ok(), "{:?}", r.mismatches());
            assert_eq!(r.structure.b(), b);
            let h = &r.classification(2).unwrap().histogram;
            assert!(h.keys().all(|r| [1, 2].contains(r)));
        }
        assert!(bose_modified(3).is_err());
        assert!(bose_modified(6).is_err());
    }

    #[test]
    fn pair_union_example() {
        let r = pair_union_counterexample(9).unwrap();
        assert!(r.verified_ok(), "{:?}", r.mismatches());
        assert_eq!(r.structure.b(), 54);
        assert_eq!(r.structure.replication(&[0, 3, 6]).unwrap(), 0);
        let r = pair_union_counterexample(11).unwrap();
        assert_eq!(found(&r, 2), (Verdict::Design, Some(12), Some(4)));
        assert!(r.verified_ok());
        assert!(pair_union_counterexample(7).is_err());
        assert!(pair_union_counterexample(10).is_err());
    }

    #[test]
    fn contraction_cover() {
        for (q, b) in [(3, 10), (5, 26)] {
            let r = contraction_minimal_covering(q).unwrap();
            assert!(r.verified_ok(), "{:?}", r.mismatches());
            assert_eq!(r.structure.b(), b);
            let p = r.parent.as_ref().unwrap();
            assert_eq!(p.structure.b() as u64, 2 * q * q);
        }
        assert!(contraction_minimal_covering(4).is_err());
    }

    #[test]
    fn json_shape() {
        let r = paley_union(&paley(13)).unwrap();
        let j = r.to_json();
        assert_eq!(j["b"], 26);
        assert_eq!(j["verified"][0]["verdict"], "Design");
        assert_eq!(j["verified"][1]["lambda"], 1);
        assert_eq!(j["verified_ok"], true);
        assert!(r.summary().contains("[ok]"));
    }
}
