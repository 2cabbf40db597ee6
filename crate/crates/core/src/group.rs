//! Finite abelian groups in invariant-factor form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `ℤ/d₁ ⊕ ℤ/d₂ ⊕ … ⊕ ℤ/d_r` with `2 ≤ d₁ | d₂ | … | d_r`.
///
/// Unit factors are never stored, so the trivial group has no factors and
/// two groups are isomorphic exactly when their factor lists are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CriticalGroup {
    invariant_factors: Vec<BigInt>,
    order: BigInt,
}

impl CriticalGroup {
    pub fn trivial() -> Self {
        CriticalGroup {
            invariant_factors: Vec::new(),
            order: BigInt::one(),
        }
    }

    /// Builds the group from a Smith-form diagonal (or any list already
    /// satisfying the divisibility chain once units are removed).
    ///
    /// A zero entry would mean an infinite cyclic summand and is rejected.
    pub fn from_diagonal(diagonal: &[BigInt]) -> Result<Self> {
        if diagonal.iter().any(|d| d.is_zero()) {
            return Err(Error::input("group presentation has a free summand"));
        }
        let invariant_factors: Vec<BigInt> = diagonal
            .iter()
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect();
        if invariant_factors
            .windows(2)
            .any(|w| !w[1].is_multiple_of(&w[0]))
        {
            return Err(Error::input("diagonal does not form a divisibility chain"));
        }
        let order = invariant_factors.iter().product();
        Ok(CriticalGroup {
            invariant_factors,
            order,
        })
    }

    /// The cyclic group of order `m ≥ 1`.
    pub fn cyclic(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if !m.is_positive() {
            return Err(Error::input(format!("cyclic group of order {m}")));
        }
        Self::from_diagonal(&[m])
    }

    /// Canonical form of an arbitrary direct sum `ℤ/c₁ ⊕ … ⊕ ℤ/c_r`.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Result<Self> {
        if orders.iter().any(|c| !c.is_positive()) {
            return Err(Error::input("cyclic orders must be positive"));
        }
        Ok(Self::assemble(orders))
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_isomorphic(&self, other: &CriticalGroup) -> bool {
        self.invariant_factors == other.invariant_factors
    }

    pub fn direct_sum(&self, other: &CriticalGroup) -> CriticalGroup {
        let all: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        Self::assemble(&all)
    }

    /// Orders of the primary cyclic summands, ascending.
    ///
    /// The factors are split over a pairwise coprime base rather than fully
    /// factored. When a base element is prime the entries are the usual
    /// prime-power elementary divisors; a composite base element only occurs
    /// when its primes have equal multiplicity in every invariant factor.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let base = coprime_base(&self.invariant_factors);
        let mut out: Vec<BigInt> = base
            .iter()
            .flat_map(|b| {
                self.invariant_factors
                    .iter()
                    .map(move |f| valuation(f, b))
                    .filter(|&e| e > 0)
                    .map(move |e| num_traits::pow(b.clone(), e as usize))
            })
            .collect();
        out.sort();
        out
    }

    /// Recombines arbitrary cyclic orders into invariant factors.
    ///
    /// The orders are split along a pairwise coprime base; within each base
    /// the exponents are sorted, and the i-th largest invariant factor takes
    /// the i-th largest power of every base.
    fn assemble(orders: &[BigInt]) -> CriticalGroup {
        let base = coprime_base(orders);
        let mut columns: Vec<Vec<u32>> = base
            .iter()
            .map(|b| {
                let mut exps: Vec<u32> = orders
                    .iter()
                    .map(|c| valuation(c, b))
                    .filter(|&e| e > 0)
                    .collect();
                exps.sort_unstable_by(|x, y| y.cmp(x));
                exps
            })
            .collect();
        let len = columns.iter().map(Vec::len).max().unwrap_or(0);
        for col in &mut columns {
            col.resize(len, 0);
        }
        let mut factors: Vec<BigInt> = (0..len)
            .map(|i| {
                base.iter()
                    .zip(&columns)
                    .map(|(b, col)| num_traits::pow(b.clone(), col[i] as usize))
                    .product()
            })
            .collect();
        factors.reverse();
        let order = factors.iter().product();
        CriticalGroup {
            invariant_factors: factors,
            order,
        }
    }
}

impl fmt::Display for CriticalGroup {
    /// `Z/4 + Z/4`, or `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Pairwise coprime numbers `> 1` such that every input is a product of
/// their powers.
fn coprime_base(numbers: &[BigInt]) -> Vec<BigInt> {
    let mut base = Vec::new();
    for n in numbers {
        insert_coprime(&mut base, n.abs());
    }
    base.sort();
    base
}

fn insert_coprime(base: &mut Vec<BigInt>, x: BigInt) {
    if x <= BigInt::one() {
        return;
    }
    for idx in 0..base.len() {
        let g = x.gcd(&base[idx]);
        if !g.is_one() {
            let b = base.swap_remove(idx);
            insert_coprime(base, &b / &g);
            insert_coprime(base, &x / &g);
            insert_coprime(base, g);
            return;
        }
    }
    base.push(x);
}

/// Largest `e` with `b^e | n`, for `b > 1`.
fn valuation(n: &BigInt, b: &BigInt) -> u32 {
    let mut n = n.clone();
    let mut e = 0;
    while !n.is_zero() && n.is_multiple_of(b) {
        n /= b;
        e += 1;
    }
    e
}
