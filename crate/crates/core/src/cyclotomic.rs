//! Cyclotomic polynomials, cyclotomic factorization and matrix periods.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{IntPolynomial, RatPolynomial, Rational};

/// Period of a matrix: the least `t >= 1` with `A^t = I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Period {
    Finite(u64),
    Infinite,
    /// Brute-force scan found no `t <= cutoff`; finiteness is undecided.
    Unknown {
        cutoff: u64,
    },
}

impl Period {
    pub fn is_finite(&self) -> bool {
        matches!(self, Period::Finite(_))
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Period::Finite(t) => write!(f, "{t}"),
            Period::Infinite => f.write_str("INFINITE"),
            Period::Unknown { cutoff } => write!(f, "UNKNOWN({cutoff})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// `(n, multiplicity)` sorted by `n`, indices distinct.
    pub factors: Vec<(u64, u32)>,
    /// `true` iff the input equals the product of the listed `Φ_n^mult`.
    pub complete: bool,
    /// What is left after all cyclotomic factors were divided out.
    pub residual: IntPolynomial,
}

impl CyclotomicFactorization {
    pub fn product(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::one(), |acc, &(n, k)| {
                &acc * &cyclotomic_poly(n).pow(k)
            })
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cache() -> &'static Mutex<HashMap<u64, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Φ_n(x) = (x^n - 1) / ∏_{d | n, d < n} Φ_d(x)`.
///
/// Panics if `n == 0`.
pub fn cyclotomic_poly(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    let mut phi = IntPolynomial::binomial(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let (q, r) = phi
            .div_rem_monic(&cyclotomic_poly(d))
            .expect("cyclotomic polynomials are monic");
        debug_assert!(r.is_zero());
        phi = q;
    }
    cache()
        .lock()
        .expect("cache poisoned")
        .insert(n, phi.clone());
    phi
}

/// Indices `n` with `φ(n) <= degree`, ascending. Uses `φ(n) >= sqrt(n/2)`.
pub fn candidate_indices(degree: usize) -> Vec<u64> {
    let bound = 2 * (degree as u64).pow(2);
    (1..=bound.max(2))
        .filter(|&n| euler_phi(n) <= degree as u64)
        .collect()
}

/// Greedy trial division by every `Φ_n` that could fit.
pub fn factor_into_cyclotomics(p: &IntPolynomial) -> Result<CyclotomicFactorization> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut residual = p.clone();
    let mut factors = Vec::new();
    for n in candidate_indices(degree) {
        let left = residual.degree().unwrap_or(0) as u64;
        if left == 0 {
            break;
        }
        if euler_phi(n) > left {
            continue;
        }
        let phi = cyclotomic_poly(n);
        let mut mult = 0u32;
        loop {
            let (q, r) = residual.div_rem_monic(&phi)?;
            if !r.is_zero() {
                break;
            }
            residual = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((n, mult));
        }
    }
    let complete = residual == IntPolynomial::one();
    Ok(CyclotomicFactorization {
        factors,
        complete,
        residual,
    })
}

/// Period of a unitary matrix from its exact characteristic polynomial.
///
/// A monic polynomial with a non-integral coefficient cannot have only
/// roots of unity as zeros, so its matrix has infinite period.
pub fn period_from_charpoly(p: &RatPolynomial) -> Period {
    let Some(int_poly) = p.to_integer() else {
        return Period::Infinite;
    };
    match factor_into_cyclotomics(&int_poly) {
        Ok(f) if f.complete => {
            Period::Finite(f.factors.iter().fold(1u64, |acc, &(n, _)| acc.lcm(&n)))
        }
        _ => Period::Infinite,
    }
}

/// Rewrites `∏ Φ_n^{a_n}` as `∏_d (u^d - 1)^{c_d}` (Möbius inversion over divisors).
///
/// Zero exponents are dropped from the output.
pub fn cyclotomic_to_binomial_exponents(signed: &BTreeMap<u64, i64>) -> BTreeMap<u64, i64> {
    let mut support: Vec<u64> = signed.keys().flat_map(|&n| divisors(n)).collect();
    support.sort_unstable();
    support.dedup();

    let mut c: BTreeMap<u64, i64> = BTreeMap::new();
    for &n in support.iter().rev() {
        let above: i64 = c
            .iter()
            .filter(|&(&d, _)| d > n && d % n == 0)
            .map(|(_, &v)| v)
            .sum();
        c.insert(n, signed.get(&n).copied().unwrap_or(0) - above);
    }
    c.retain(|_, v| *v != 0);
    c
}

/// Inverse of [`cyclotomic_to_binomial_exponents`]: expands each `u^d - 1` into cyclotomics.
pub fn binomial_to_cyclotomic_exponents(binomial: &BTreeMap<u64, i64>) -> BTreeMap<u64, i64> {
    let mut a: BTreeMap<u64, i64> = BTreeMap::new();
    for (&d, &c) in binomial {
        for e in divisors(d) {
            *a.entry(e).or_insert(0) += c;
        }
    }
    a.retain(|_, v| *v != 0);
    a
}

/// Period of `U_N` from the single test `-2(1 - 2/N) ∈ {0, ±1}`: the
/// quadratic factor of the characteristic polynomial must be `Φ_3`, `Φ_4` or `Φ_6`.
pub fn period_grover_quadratic(n: usize) -> Result<Period> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    let n_r = Rational::from_integer(n.into());
    let middle = -(Rational::from_integer(2.into()))
        * (Rational::from_integer(1.into()) - Rational::from_integer(2.into()) / n_r);
    let quadratic_order: u64 = if middle.is_zero() {
        4
    } else if middle == Rational::from_integer((-1).into()) {
        6
    } else if middle == Rational::from_integer(1.into()) {
        3
    } else {
        return Ok(Period::Infinite);
    };
    // (λ + 1)^{N-2} contributes Φ_2 when N > 2.
    let order = if n > 2 {
        quadratic_order.lcm(&2)
    } else {
        quadratic_order
    };
    Ok(Period::Finite(order))
}
