//! Covering and packing bounds on the number of blocks, the block-count
//! window of a 2-adesign, and the feasibility analysis of a (t+1)-adesign
//! at level t.
//!
//! All arithmetic is exact and generic over primitive unsigned or signed
//! integers; overflow is reported as an error.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::PrimInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::incidence::IncidenceStructure;

/// Integer type usable for bound arithmetic.
pub trait Count:
    PrimInt + Integer + fmt::Debug + fmt::Display + Serialize + Send + Sync + 'static
{
}

impl<T> Count for T where
    T: PrimInt + Integer + fmt::Debug + fmt::Display + Serialize + Send + Sync + 'static
{
}

fn overflow() -> Error {
    Error::InvalidParameter("arithmetic overflow in bound computation".into())
}

fn mul<T: Count>(a: T, b: T) -> Result<T> {
    a.checked_mul(&b).ok_or_else(overflow)
}

fn add<T: Count>(a: T, b: T) -> Result<T> {
    a.checked_add(&b).ok_or_else(overflow)
}

fn lit<T: Count>(x: u8) -> T {
    T::from(x).expect("small literal fits")
}

fn check_range<T: Count>(v: T, k: T, lambda: T, min_k: u8) -> Result<()> {
    if k < lit(min_k) || k >= v {
        return Err(Error::InvalidParameter(format!(
            "need {min_k} <= k < v, got v={v}, k={k}"
        )));
    }
    if lambda < T::one() {
        return Err(Error::InvalidParameter(format!(
            "need lambda >= 1, got {lambda}"
        )));
    }
    Ok(())
}

fn lambda_v1<T: Count>(v: T, lambda: T) -> Result<T> {
    mul(lambda, v - T::one())
}

/// C_λ = ⌈v/k ⌈λ(v-1)/(k-1)⌉⌉.
pub fn schonheim<T: Count>(v: T, k: T, lambda: T) -> Result<T> {
    check_range(v, k, lambda, 2)?;
    let inner = lambda_v1(v, lambda)?.div_ceil(&(k - T::one()));
    Ok(mul(v, inner)?.div_ceil(&k))
}

/// P_λ = ⌊v/k ⌊λ(v-1)/(k-1)⌋⌋.
pub fn johnson<T: Count>(v: T, k: T, lambda: T) -> Result<T> {
    check_range(v, k, lambda, 2)?;
    let inner = lambda_v1(v, lambda)?.div_floor(&(k - T::one()));
    Ok(mul(v, inner)?.div_floor(&k))
}

/// An improved bound with the (r, d) decomposition that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Horsley<T> {
    pub value: T,
    pub r: T,
    pub d: T,
}

/// The unique (r, d) with λ(v-1) = r(k-1) - d, 0 <= d < k-1.
pub fn covering_decomposition<T: Count>(v: T, k: T, lambda: T) -> Result<(T, T)> {
    check_range(v, k, lambda, 3)?;
    let lv = lambda_v1(v, lambda)?;
    let r = lv.div_ceil(&(k - T::one()));
    Ok((r, mul(r, k - T::one())? - lv))
}

/// The unique (r, d) with λ(v-1) = r(k-1) + d, 0 <= d < k-1.
pub fn packing_decomposition<T: Count>(v: T, k: T, lambda: T) -> Result<(T, T)> {
    check_range(v, k, lambda, 3)?;
    let (r, d) = lambda_v1(v, lambda)?.div_rem(&(k - T::one()));
    Ok((r, d))
}

/// ⌈v(r+1)/(k+1)⌉ when d < r - λ, else None.
pub fn horsley_covering<T: Count>(v: T, k: T, lambda: T) -> Result<Option<Horsley<T>>> {
    let (r, d) = covering_decomposition(v, k, lambda)?;
    if add(d, lambda)? >= r {
        return Ok(None);
    }
    let value = mul(v, r + T::one())?.div_ceil(&(k + T::one()));
    Ok(Some(Horsley { value, r, d }))
}

/// ⌊v(r-1)/(k-1)⌋ when d < r - λ, else None.
pub fn horsley_packing<T: Count>(v: T, k: T, lambda: T) -> Result<Option<Horsley<T>>> {
    let (r, d) = packing_decomposition(v, k, lambda)?;
    if add(d, lambda)? >= r {
        return Ok(None);
    }
    let value = mul(v, r - T::one())?.div_floor(&(k - T::one()));
    Ok(Some(Horsley { value, r, d }))
}

/// Lower bound on the blocks of a λ-covering: the larger of Schonheim and,
/// when it applies, Horsley.
pub fn covering_bound<T: Count>(v: T, k: T, lambda: T) -> Result<T> {
    let c = schonheim(v, k, lambda)?;
    if k < lit(3) {
        return Ok(c);
    }
    Ok(horsley_covering(v, k, lambda)?.map_or(c, |h| h.value.max(c)))
}

/// Upper bound on the blocks of a λ-packing: the smaller of Johnson and,
/// when it applies, Horsley.
pub fn packing_bound<T: Count>(v: T, k: T, lambda: T) -> Result<T> {
    let p = johnson(v, k, lambda)?;
    if k < lit(3) {
        return Ok(p);
    }
    Ok(horsley_packing(v, k, lambda)?.map_or(p, |h| h.value.min(p)))
}

/// Block-count window [C*, P*] for a 2-(v,k,λ) adesign, which is both a
/// (v,k,λ)-covering and a (v,k,λ+1)-packing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport<T> {
    pub v: T,
    pub k: T,
    pub lambda: T,
    /// C_λ
    pub schonheim: T,
    /// P_{λ+1}
    pub johnson: T,
    pub horsley_covering: Option<Horsley<T>>,
    /// Evaluated at λ+1.
    pub horsley_packing: Option<Horsley<T>>,
    pub c_star: T,
    pub p_star: T,
}

impl<T: Count> BoundReport<T> {
    pub fn contains(&self, b: T) -> bool {
        self.c_star <= b && b <= self.p_star
    }

    /// C* <= P*; false means no adesign with these parameters exists.
    pub fn nonempty(&self) -> bool {
        self.c_star <= self.p_star
    }
}

impl<T: Count> fmt::Display for BoundReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |h: &Option<Horsley<T>>| match h {
            Some(h) => format!("{} (r={}, d={})", h.value, h.r, h.d),
            None => "inapplicable".to_string(),
        };
        writeln!(f, "v={} k={} lambda={}", self.v, self.k, self.lambda)?;
        writeln!(f, "schonheim C_lambda      {}", self.schonheim)?;
        writeln!(f, "johnson P_(lambda+1)    {}", self.johnson)?;
        writeln!(
            f,
            "horsley covering        {}",
            show(&self.horsley_covering)
        )?;
        writeln!(f, "horsley packing         {}", show(&self.horsley_packing))?;
        write!(
            f,
            "window [C*, P*]         [{}, {}]",
            self.c_star, self.p_star
        )
    }
}

pub fn adesign_block_window<T: Count>(v: T, k: T, lambda: T) -> Result<BoundReport<T>> {
    check_range(v, k, lambda, 3)?;
    let up = add(lambda, T::one())?;
    Ok(BoundReport {
        v,
        k,
        lambda,
        schonheim: schonheim(v, k, lambda)?,
        johnson: johnson(v, k, up)?,
        horsley_covering: horsley_covering(v, k, lambda)?,
        horsley_packing: horsley_packing(v, k, up)?,
        c_star: covering_bound(v, k, lambda)?,
        p_star: packing_bound(v, k, up)?,
    })
}

fn binomial<T: Count>(n: T, k: T) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    let mut i = T::zero();
    while i < k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = mul(acc, n - i)? / (i + T::one());
        i = i + T::one();
    }
    Ok(acc)
}

/// What a (t+1)-(v,k,λ) adesign can look like at level t.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport<T: Clone + Integer> {
    pub v: T,
    pub k: T,
    pub t: T,
    /// Replication level at t+1.
    pub lambda: T,
    /// (k-t)/(v-t)
    pub ratio: Ratio<T>,
    /// ratio > 1/2, so the level-t outcome is forced.
    pub ratio_exceeds_half: bool,
    /// ⌈λ(v-t)/(k-t)⌉, the λ' of the adesign outcome.
    pub adesign_lambda: T,
    /// Candidate λ' of the design outcome with whether λ = ⌊λ'(k-t)/(v-t)⌋.
    pub design_lambdas: Vec<(T, bool)>,
    /// Open interval (λ, λ+1) · C(v,t+1)/C(k,t+1) that b must lie in.
    pub block_low: Ratio<T>,
    pub block_high: Ratio<T>,
}

impl<T: Count> FeasibilityReport<T> {
    /// low < b < high.
    pub fn block_count_strictly_inside(&self, b: T) -> bool {
        let b = Ratio::from_integer(b);
        self.block_low < b && b < self.block_high
    }

    /// λ = ⌊λ'(k-t)/(v-t)⌋.
    pub fn floor_identity(&self, lambda_prime: T) -> bool {
        (Ratio::from_integer(lambda_prime) * self.ratio)
            .floor()
            .to_integer()
            == self.lambda
    }
}

impl<T: Count> fmt::Display for FeasibilityReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "v={} k={} t={} lambda={}",
            self.v, self.k, self.t, self.lambda
        )?;
        writeln!(f, "(k-t)/(v-t)             {}", self.ratio)?;
        if self.ratio_exceeds_half {
            writeln!(
                f,
                "level t                 adesign with lambda'={} or design",
                self.adesign_lambda
            )?;
        } else {
            writeln!(f, "level t                 not forced (ratio <= 1/2; the condition is sufficient, not necessary)")?;
        }
        for (l, ok) in &self.design_lambdas {
            let label = format!("design lambda'={l}");
            writeln!(
                f,
                "{label:<24}floor identity {}",
                if *ok { "holds" } else { "fails" }
            )?;
        }
        write!(
            f,
            "blocks                  {} < b < {}",
            self.block_low, self.block_high
        )
    }
}

pub fn feasibility<T: Count>(v: T, k: T, t: T, lambda: T) -> Result<FeasibilityReport<T>> {
    if t <= T::zero() || t >= k || k >= v {
        return Err(Error::InvalidParameter(format!(
            "need 0 < t < k < v, got v={v}, k={k}, t={t}"
        )));
    }
    let ratio = Ratio::new(k - t, v - t);
    let ratio_exceeds_half = mul(lit(2), k - t)? > v - t;
    let adesign_lambda = mul(lambda, v - t)?.div_ceil(&(k - t));
    let one = T::one();
    let t1 = add(t, one)?;
    let per = Ratio::new(binomial(v, t1)?, binomial(k, t1)?);
    let mut report = FeasibilityReport {
        v,
        k,
        t,
        lambda,
        ratio,
        ratio_exceeds_half,
        adesign_lambda,
        design_lambdas: Vec::new(),
        block_low: per * Ratio::from_integer(lambda),
        block_high: per * Ratio::from_integer(add(lambda, one)?),
    };
    report.design_lambdas = [adesign_lambda, add(adesign_lambda, one)?]
        .into_iter()
        .map(|l| (l, report.floor_identity(l)))
        .collect();
    Ok(report)
}

/// Whether `s` is a λ-covering whose block count meets [`covering_bound`].
///
/// Errors if `s` has non-uniform blocks or some pair lies in fewer than λ
/// blocks.
pub fn is_minimal_covering(s: &IncidenceStructure, lambda: u64) -> Result<bool> {
    let k = s
        .uniform_block_size()
        .ok_or_else(|| Error::Hypothesis("blocks do not share one size".into()))?;
    let least = s
        .replication_histogram(2)
        .keys()
        .next()
        .copied()
        .unwrap_or(0);
    if least < lambda {
        return Err(Error::Hypothesis(format!(
            "not a {lambda}-covering: some pair lies in only {least} blocks"
        )));
    }
    Ok(s.b() as u64 == covering_bound(s.v() as u64, k as u64, lambda)?)
}
