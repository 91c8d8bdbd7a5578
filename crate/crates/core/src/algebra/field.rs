//! Finite fields GF(p^m) for odd p, stored as exp/log tables.
//!
//! Elements are identified by a canonical index in `0..q`. For a prime field
//! the index is the residue itself. For an extension the index is the
//! coefficient vector of the polynomial representative read as a base-p
//! integer, constant term least significant. Index 0 is always zero and
//! index 1 is always one.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{is_prime, prime_power};
use crate::error::{Error, Result};

/// Largest field order accepted by [`FiniteField::new`].
pub const MAX_ORDER: u64 = 1 << 20;

/// The finite field GF(p^m), p odd.
///
/// The modulus is the first monic polynomial of degree m, in the order of
/// its coefficient index (constant term least significant), for which the
/// class of x has multiplicative order q - 1. For m = 1 the modulus is `x`
/// and the primitive element is the smallest primitive root of p.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    gamma: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Reproducible description of a field, suitable for JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    pub p: u32,
    pub m: u32,
    pub q: u32,
    /// Coefficients of the monic modulus, constant term first.
    pub modulus: Vec<u32>,
    /// Canonical index of the primitive element.
    pub gamma: u32,
}

impl FiniteField {
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be at least 1".into(),
            ));
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q *= p as u64;
            if q > MAX_ORDER {
                return Err(Error::OrderTooLarge(q));
            }
        }
        let q = q as u32;
        if m == 1 {
            Ok(Self::prime_field(p))
        } else {
            Ok(Self::extension_field(p, m, q))
        }
    }

    /// The field with `q` elements; `q` must be an odd prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        match prime_power(q) {
            Some((2, _)) => Err(Error::EvenCharacteristic),
            Some((p, m)) => Self::new(p as u32, m),
            None => Err(Error::NotOddPrimePower(q)),
        }
    }

    fn prime_field(p: u32) -> Self {
        let gamma = (2..p)
            .find(|&g| multiplicative_order_mod(g, p) == p - 1)
            .unwrap_or(1);
        let mut exp = Vec::with_capacity(p as usize - 1);
        let mut x = 1u64;
        for _ in 0..p - 1 {
            exp.push(x as u32);
            x = x * gamma as u64 % p as u64;
        }
        Self::from_tables(p, 1, p, vec![0, 1], gamma, exp)
    }

    fn extension_field(p: u32, m: u32, q: u32) -> Self {
        for code in 0..q {
            let tail = digits(code, p, m);
            if tail[0] == 0 {
                continue;
            }
            if let Some(exp) = powers_of_x(p, &tail, q) {
                let mut modulus = tail;
                modulus.push(1);
                return Self::from_tables(p, m, q, modulus, p, exp);
            }
        }
        unreachable!("every finite field has a primitive polynomial")
    }

    fn from_tables(p: u32, m: u32, q: u32, modulus: Vec<u32>, gamma: u32, exp: Vec<u32>) -> Self {
        let mut log = vec![u32::MAX; q as usize];
        for (k, &e) in exp.iter().enumerate() {
            log[e as usize] = k as u32;
        }
        FiniteField {
            p,
            m,
            q,
            modulus,
            gamma,
            exp,
            log,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn describe(&self) -> FieldDescription {
        FieldDescription {
            p: self.p,
            m: self.m,
            q: self.q,
            modulus: self.modulus.clone(),
            gamma: self.gamma,
        }
    }

    pub fn element(&self, index: u32) -> FieldElement<'_> {
        assert!(
            index < self.q,
            "index {index} out of range for GF({})",
            self.q
        );
        FieldElement { field: self, index }
    }

    pub fn zero(&self) -> FieldElement<'_> {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement<'_> {
        self.element(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> {
        (0..self.q).map(move |i| self.element(i))
    }

    /// γ^k for any k (reduced mod q - 1).
    pub fn gamma_pow(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm base γ, `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + self.p - b) % self.p;
        }
        self.digitwise(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % (self.q as u64 - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % (self.q as u64 - 1))) % (self.q as u64 - 1)) as usize]
    }

    /// True for nonzero squares.
    pub fn is_square(&self, a: u32) -> bool {
        a != 0 && self.log[a as usize] % 2 == 0
    }

    fn digitwise(&self, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("gamma", &self.gamma)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

fn digits(mut n: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

fn multiplicative_order_mod(g: u32, p: u32) -> u32 {
    let mut x = g as u64 % p as u64;
    let mut k = 1;
    while x != 1 {
        x = x * g as u64 % p as u64;
        k += 1;
        if k > p {
            return 0;
        }
    }
    k
}

/// Powers x^0..x^{q-2} modulo `x^m + tail`, or `None` when x is not primitive.
fn powers_of_x(p: u32, tail: &[u32], q: u32) -> Option<Vec<u32>> {
    let m = tail.len();
    let mut state = vec![0u32; m];
    state[0] = 1;
    let mut exp = Vec::with_capacity(q as usize - 1);
    for k in 0..q - 1 {
        if k > 0 && state[0] == 1 && state[1..].iter().all(|&c| c == 0) {
            return None;
        }
        exp.push(state.iter().rev().fold(0u32, |acc, &c| acc * p + c));
        // multiply by x, then reduce x^m = -tail
        let top = state[m - 1];
        for i in (1..m).rev() {
            state[i] = state[i - 1];
        }
        state[0] = 0;
        if top != 0 {
            for i in 0..m {
                state[i] = (state[i] + (p - tail[i]) * top) % p;
            }
        }
    }
    let is_one = state[0] == 1 && state[1..].iter().all(|&c| c == 0);
    is_one.then_some(exp)
}

/// An element of a particular [`FiniteField`], with operator overloading.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FiniteField,
    index: u32,
}

impl<'f> FieldElement<'f> {
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn field(self) -> &'f FiniteField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }

    pub fn inverse(self) -> Option<Self> {
        self.field.inv(self.index).map(|i| self.field.element(i))
    }

    pub fn pow(self, e: u64) -> Self {
        self.field.element(self.field.pow(self.index, e))
    }

    pub fn is_square(self) -> bool {
        self.field.is_square(self.index)
    }

    fn check_same(self, other: Self) {
        assert!(
            std::ptr::eq(self.field, other.field) || self.field == other.field,
            "mixing elements of different fields"
        );
    }
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}]", self.field.q, self.index)
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.field == other.field
    }
}

impl Eq for FieldElement<'_> {}

impl<'f> Add for FieldElement<'f> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check_same(rhs);
        self.field.element(self.field.add(self.index, rhs.index))
    }
}

impl<'f> Sub for FieldElement<'f> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check_same(rhs);
        self.field.element(self.field.sub(self.index, rhs.index))
    }
}

impl<'f> Mul for FieldElement<'f> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check_same(rhs);
        self.field.element(self.field.mul(self.index, rhs.index))
    }
}

impl<'f> Neg for FieldElement<'f> {
    type Output = Self;
    fn neg(self) -> Self {
        self.field.element(self.field.neg(self.index))
    }
}

impl<'f> Div for FieldElement<'f> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in a finite field")
    }
}
