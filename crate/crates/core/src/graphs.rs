//! Strongly regular graphs, doubly regular tournaments and conference
//! matrices, plus the standard Paley and Latin-square families.

use serde::Serialize;

use crate::algebra::FiniteField;
use crate::error::{Error, Result};
use crate::matrix::{complement_of, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// (n, (n-1)/2, (n-5)/4, (n-1)/4).
    pub fn is_paley_type(&self) -> bool {
        self.n == 4 * self.mu + 1 && self.k == 2 * self.mu && self.lambda + 1 == self.mu
    }

    /// k(k - λ - 1) = (n - k - 1)μ.
    pub fn feasible(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }

    /// (n, n-k-1, n-2k+μ-2, n-2k+λ).
    pub fn complement(&self) -> SrgParams {
        SrgParams {
            n: self.n,
            k: self.n - self.k - 1,
            lambda: self.n + self.mu - 2 * self.k - 2,
            mu: self.n + self.lambda - 2 * self.k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TournamentParams {
    pub n: u64,
    /// Common out-neighbours of any two vertices, (n-3)/4.
    pub common: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConferenceKind {
    Symmetric,
    Skew,
    NotConference,
}

/// Errors unless `a` is a symmetric 0/1 matrix with zero diagonal.
pub fn validate_adjacency(a: &Matrix<i64>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::InvalidMatrix(
            "adjacency matrix is not square".into(),
        ));
    }
    if !a.entries_within(&[0, 1]) {
        return Err(Error::InvalidMatrix(
            "adjacency entries must be 0 or 1".into(),
        ));
    }
    if (0..a.rows()).any(|i| a.get(i, i) != 0) {
        return Err(Error::InvalidMatrix(
            "adjacency diagonal must be zero".into(),
        ));
    }
    if !a.is_symmetric() {
        return Err(Error::InvalidMatrix(
            "adjacency matrix is not symmetric".into(),
        ));
    }
    Ok(())
}

/// Parameters (n, k, λ, μ) if `A² = kI + λA + μ(J-I-A)` and `AJ = kJ` hold.
///
/// Errors on invalid adjacency, on fewer than 4 vertices, and on the
/// complete and empty graphs.
pub fn is_srg(a: &Matrix<i64>) -> Result<Option<SrgParams>> {
    validate_adjacency(a)?;
    let n = a.rows();
    if n < 4 {
        return Err(Error::InvalidMatrix(format!(
            "need at least 4 vertices, got {n}"
        )));
    }
    let rows = a.row_sums();
    let k = rows[0];
    if rows.iter().all(|&r| r == 0) || rows.iter().all(|&r| r as usize == n - 1) {
        return Err(Error::InvalidMatrix("complete or empty graph".into()));
    }
    if rows.iter().any(|&r| r != k) {
        return Ok(None);
    }
    let sq = a.gram();
    let find = |adj: i64| {
        (0..n).find_map(|i| {
            (0..n)
                .find(|&j| j != i && a.get(i, j) == adj)
                .map(|j| sq.get(i, j))
        })
    };
    let (Some(lambda), Some(mu)) = (find(1), find(0)) else {
        return Ok(None);
    };
    let expected =
        &(&Matrix::identity(n).scale(k) + &a.scale(lambda)) + &complement_of(a).scale(mu);
    Ok((sq == expected).then_some(SrgParams {
        n: n as u64,
        k: k as u64,
        lambda: lambda as u64,
        mu: mu as u64,
    }))
}

/// J - I - A.
pub fn complement_graph(a: &Matrix<i64>) -> Result<Matrix<i64>> {
    validate_adjacency(a)?;
    Ok(complement_of(a))
}

/// Errors unless `a` is 0/1 with zero diagonal and `A + Aᵀ = J - I`.
pub fn validate_tournament(a: &Matrix<i64>) -> Result<()> {
    if !a.is_square() || !a.entries_within(&[0, 1]) {
        return Err(Error::InvalidMatrix(
            "tournament matrix must be square 0/1".into(),
        ));
    }
    let n = a.rows();
    for i in 0..n {
        if a.get(i, i) != 0 {
            return Err(Error::InvalidMatrix(
                "tournament diagonal must be zero".into(),
            ));
        }
        for j in 0..i {
            if a.get(i, j) + a.get(j, i) != 1 {
                return Err(Error::InvalidMatrix(format!(
                    "vertices {j} and {i} are not joined by exactly one arc"
                )));
            }
        }
    }
    Ok(())
}

/// Doubly regular iff `SSᵀ = nI - J` with `S = 2A + I - J`.
pub fn is_doubly_regular_tournament(a: &Matrix<i64>) -> Result<Option<TournamentParams>> {
    validate_tournament(a)?;
    let n = a.rows();
    if n < 3 {
        return Ok(None);
    }
    let j = Matrix::ones(n, n);
    let s = &(&a.scale(2) + &Matrix::identity(n)) - &j;
    let expected = &Matrix::identity(n).scale(n as i64) - &j;
    Ok((s.gram() == expected).then_some(TournamentParams {
        n: n as u64,
        common: (n as u64 - 3) / 4,
    }))
}

fn validate_conference_entries(c: &Matrix<i64>) -> Result<()> {
    if !c.is_square() {
        return Err(Error::InvalidMatrix(
            "conference matrix is not square".into(),
        ));
    }
    if !c.entries_within(&[-1, 0, 1]) {
        return Err(Error::InvalidMatrix(
            "conference entries must be -1, 0 or 1".into(),
        ));
    }
    Ok(())
}

fn is_conference(c: &Matrix<i64>) -> bool {
    let n = c.rows();
    n >= 2
        && (0..n).all(|i| (0..n).all(|j| (c.get(i, j) == 0) == (i == j)))
        && c.gram() == Matrix::identity(n).scale(n as i64 - 1)
}

/// Negates rows, then columns, so the first row and column are +1 off the
/// diagonal.
pub fn normalize_conference(c: &Matrix<i64>) -> Matrix<i64> {
    let n = c.rows();
    let row_sign: Vec<i64> = (0..n)
        .map(|i| if c.get(i, 0) == -1 { -1 } else { 1 })
        .collect();
    let col_sign: Vec<i64> = (0..n)
        .map(|j| {
            if c.get(0, j) * row_sign[0] == -1 {
                -1
            } else {
                1
            }
        })
        .collect();
    Matrix::from_fn(n, n, |i, j| c.get(i, j) * row_sign[i] * col_sign[j])
}

fn core(c: &Matrix<i64>) -> Matrix<i64> {
    let n = c.rows();
    Matrix::from_fn(n - 1, n - 1, |i, j| c.get(i + 1, j + 1))
}

/// Diagonal 0, off-diagonal ±1 and `CCᵀ = (n-1)I`; the kind is read off
/// the core of the normalized matrix.
pub fn is_conference_matrix(c: &Matrix<i64>) -> Result<ConferenceKind> {
    validate_conference_entries(c)?;
    if !is_conference(c) {
        return Ok(ConferenceKind::NotConference);
    }
    let s = core(&normalize_conference(c));
    Ok(if s.is_symmetric() {
        ConferenceKind::Symmetric
    } else if s.transpose() == -&s {
        ConferenceKind::Skew
    } else {
        ConferenceKind::NotConference
    })
}

/// Normalizes, deletes the first row and column and maps -1 to 1, 1 to 0.
pub fn conference_core_graph(c: &Matrix<i64>) -> Result<Matrix<i64>> {
    if is_conference_matrix(c)? == ConferenceKind::NotConference {
        return Err(Error::InvalidMatrix("not a conference matrix".into()));
    }
    Ok(core(&normalize_conference(c)).map(|x| i64::from(x == -1)))
}

/// The bordered matrix `[[0, 1ᵀ], [1, J - I - 2A]]`.
///
/// A conference matrix exactly when A is a Paley-type graph or a doubly
/// regular tournament.
pub fn conference_from_core(a: &Matrix<i64>) -> Matrix<i64> {
    let n = a.rows() + 1;
    Matrix::from_fn(n, n, |i, j| match (i, j) {
        _ if i == j => 0,
        (0, _) | (_, 0) => 1,
        _ => 1 - 2 * a.get(i - 1, j - 1),
    })
}

fn check_odd(field: &FiniteField) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    Ok(())
}

/// x ~ y iff x - y is a nonzero square. Needs q = 1 mod 4.
pub fn paley_graph(field: &FiniteField) -> Result<Matrix<i64>> {
    check_odd(field)?;
    let q = field.order();
    if q % 4 != 1 {
        return Err(Error::InvalidParameter(format!(
            "Paley graph needs q = 1 mod 4, got {q}"
        )));
    }
    Ok(quadratic_relation(field))
}

/// x → y iff y - x is a nonzero square. Needs q = 3 mod 4.
pub fn paley_tournament(field: &FiniteField) -> Result<Matrix<i64>> {
    check_odd(field)?;
    let q = field.order();
    if q % 4 != 3 {
        return Err(Error::InvalidParameter(format!(
            "Paley tournament needs q = 3 mod 4, got {q}"
        )));
    }
    Ok(quadratic_relation(field).transpose())
}

fn quadratic_relation(field: &FiniteField) -> Matrix<i64> {
    let q = field.order() as usize;
    Matrix::from_fn(q, q, |x, y| {
        let diff = field.sub(x as u32, y as u32);
        i64::from(diff != 0 && field.is_square(diff))
    })
}

/// Graph on GF(q)² from the orthogonal array with d columns: row, column,
/// and the Latin squares L_a(x, y) = a·x + y for slopes a = 1, ..., d-2
/// (field indices).
pub fn latin_square_graph(field: &FiniteField, d: u32) -> Result<Matrix<i64>> {
    check_odd(field)?;
    let q = field.order();
    if d < 2 || d > q {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= d <= q, got d={d}, q={q}"
        )));
    }
    let slopes: Vec<u32> = (1..=d - 2).collect();
    let qq = q as usize;
    let coords = |v: usize| -> Vec<u32> {
        let (x, y) = ((v / qq) as u32, (v % qq) as u32);
        let mut c = vec![x, y];
        c.extend(slopes.iter().map(|&a| field.add(field.mul(a, x), y)));
        c
    };
    let all: Vec<Vec<u32>> = (0..qq * qq).map(coords).collect();
    Ok(Matrix::from_fn(qq * qq, qq * qq, |u, v| {
        i64::from(u != v && all[u].iter().zip(&all[v]).any(|(a, b)| a == b))
    }))
}

/// (m², d(m-1), d²-3d+m, d(d-1)).
pub fn latin_square_params(m: u64, d: u64) -> SrgParams {
    SrgParams {
        n: m * m,
        k: d * (m - 1),
        lambda: d * d + m - 3 * d,
        mu: d * (d - 1),
    }
}
