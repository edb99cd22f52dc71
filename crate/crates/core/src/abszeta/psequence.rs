//! `P_ℓ = Σ_{k+r=ℓ} α^k β^r` for the unit-circle roots `α, β` of
//! `u^2 - 2(1 - 2/N)u + 1`; a Chebyshev-U sequence in `cos ξ = 1 - 2/N`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSequence {
    pub n: usize,
    /// `P_0, …, P_{ℓ_max}`.
    pub values: Vec<Rational>,
}

/// `α + β = 2(1 - 2/N)`.
pub fn trace_of_roots(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    let two = Rational::from_integer(2.into());
    Ok(&two * (Rational::one() - &two / Rational::from_integer(n.into())))
}

/// `P_ℓ = Σ_{i ≤ ℓ/2} (-1)^i C(ℓ - i, i) (α + β)^{ℓ - 2i}`, using `αβ = 1`.
pub fn p_closed_form(n: usize, ell: usize) -> Result<Rational> {
    let mut values = closed_form_values(n, ell)?;
    Ok(values.pop().expect("at least P_0"))
}

/// The closed form for `P_0, …, P_{ℓ_max}`, in integers: with `α + β = a/N`,
/// `a = 2(N - 2)`, each `N^ℓ P_ℓ = Σ_i (-1)^i C(ℓ - i, i) a^{ℓ - 2i} N^{2i}`.
fn closed_form_values(n: usize, l_max: usize) -> Result<Vec<Rational>> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    let a = BigInt::from(2 * (n - 2));
    let big_n = BigInt::from(n);
    let powers = |base: &BigInt| {
        let mut p = vec![BigInt::one()];
        for k in 1..=l_max {
            let next = &p[k - 1] * base;
            p.push(next);
        }
        p
    };
    let a_pow = powers(&a);
    let n_pow = powers(&big_n);
    // Pascal rows C(m, ·), m = 0..=l_max.
    let mut pascal: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=l_max {
        let prev = &pascal[m - 1];
        let row: Vec<BigInt> = (0..=m)
            .map(
                |k| match (k.checked_sub(1).and_then(|j| prev.get(j)), prev.get(k)) {
                    (Some(x), Some(y)) => x + y,
                    (Some(x), None) | (None, Some(x)) => x.clone(),
                    (None, None) => BigInt::zero(),
                },
            )
            .collect();
        pascal.push(row);
    }
    Ok((0..=l_max)
        .map(|ell| {
            let mut numer = BigInt::zero();
            for i in 0..=ell / 2 {
                let term = &pascal[ell - i][i] * &a_pow[ell - 2 * i] * &n_pow[2 * i];
                if i % 2 == 0 {
                    numer += term;
                } else {
                    numer -= term;
                }
            }
            Rational::new(numer, n_pow[ell].clone())
        })
        .collect())
}

/// `P_0 = 1`, `P_1 = α + β`, `P_ℓ = (α + β) P_{ℓ-1} - P_{ℓ-2}`.
pub fn p_recurrence(n: usize, l_max: usize) -> Result<Vec<Rational>> {
    let t = trace_of_roots(n)?;
    let mut values = Vec::with_capacity(l_max + 1);
    values.push(Rational::one());
    if l_max >= 1 {
        values.push(t.clone());
    }
    for ell in 2..=l_max {
        let next = &t * &values[ell - 1] - &values[ell - 2];
        values.push(next);
    }
    Ok(values)
}

/// Both routes, which must agree exactly.
pub fn p_sequence(n: usize, l_max: usize) -> Result<PSequence> {
    let values = p_recurrence(n, l_max)?;
    let closed_values = closed_form_values(n, l_max)?;
    for (ell, (v, closed)) in values.iter().zip(&closed_values).enumerate() {
        if closed != v {
            return Err(Error::Inconsistent(format!(
                "P_{ell} for N = {n}: recurrence {v} vs closed form {closed}"
            )));
        }
    }
    Ok(PSequence { n, values })
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational as r;
    use num_traits::Signed;

    fn ints(values: &[Rational]) -> Vec<i64> {
        values
            .iter()
            .map(|v| {
                assert!(v.is_integer());
                i64::try_from(v.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn n4_has_period_six() {
        let p = p_sequence(4, 11).unwrap();
        assert_eq!(
            ints(&p.values),
            vec![1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0]
        );
    }

    #[test]
    fn n2_has_period_four() {
        let p = p_sequence(2, 7).unwrap();
        assert_eq!(ints(&p.values), vec![1, 0, -1, 0, 1, 0, -1, 0]);
    }

    #[test]
    fn n3_second_term() {
        assert_eq!(p_closed_form(3, 2).unwrap(), r(-5, 9));
        assert_eq!(p_recurrence(3, 1).unwrap()[1], r(2, 3));
    }

    #[test]
    fn chebyshev_bound() {
        for n in 2..=12 {
            for (ell, v) in p_recurrence(n, 120).unwrap().iter().enumerate() {
                assert!(v.abs() <= Rational::from_integer((ell + 1).into()));
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(binomial(3, 5), 0.into());
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(p_sequence(1, 3), Err(Error::InvalidSize(1)));
    }
}
