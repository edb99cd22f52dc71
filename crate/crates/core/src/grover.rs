//! The Grover matrix `U_N = R_D R_f` and its exact invariants.
//!
//! `R_D = 2|D><D| - I` with `|D>` the uniform unit vector, and
//! `R_f = I - 2|0><0|` flips the sign of the marked item, which is index 0.

use num_traits::{One, Zero};

use crate::cyclotomic::{period_from_charpoly, period_grover_quadratic, Period};
use crate::error::{Error, Result};
use crate::exact::{char_poly, RatPolynomial, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroverOperators {
    pub n: usize,
    pub r_d: RationalMatrix,
    pub r_f: RationalMatrix,
    pub u: RationalMatrix,
}

/// `Spec(U_N) = {[-1]^{N-2}, [e^{iξ}], [e^{-iξ}]}` with `cos ξ = 1 - 2/N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumDescriptor {
    pub minus_one_multiplicity: usize,
    pub cos_xi: Rational,
}

impl SpectrumDescriptor {
    pub fn total_multiplicity(&self) -> usize {
        self.minus_one_multiplicity + 2
    }

    /// `e^{±iξ}` as floating-point `(re, ±im)`; for display only.
    pub fn unit_pair_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let c = self.cos_xi.to_f64().unwrap_or(f64::NAN);
        (c, (1.0 - c * c).max(0.0).sqrt())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodMethod {
    Cyclotomic,
    QuadraticFastPath,
    BruteForce { cutoff: u64 },
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidSize(n))
    } else {
        Ok(())
    }
}

/// Grover matrix entry `U_G(i, j)`, 1-based; equal to the `R_D` entry.
pub fn grover_matrix_entry(n: usize, i: usize, j: usize) -> Result<Rational> {
    check_size(n)?;
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::IndexOutOfRange { n, i, j });
    }
    let two_over_n = Rational::new(2.into(), n.into());
    Ok(if i == j {
        two_over_n - Rational::one()
    } else {
        two_over_n
    })
}

pub fn build(n: usize) -> Result<GroverOperators> {
    check_size(n)?;
    let r_d = RationalMatrix::from_fn(n, |i, j| {
        grover_matrix_entry(n, i + 1, j + 1).expect("in range")
    });
    let r_f = RationalMatrix::from_fn(n, |i, j| match (i, j) {
        (0, 0) => -Rational::one(),
        _ if i == j => Rational::one(),
        _ => Rational::zero(),
    });
    let u = r_d.mul(&r_f)?;
    Ok(GroverOperators { n, r_d, r_f, u })
}

/// `MᵀM = I`, exactly.
pub fn check_orthogonal(m: &RationalMatrix) -> bool {
    m.transpose()
        .mul(m)
        .map(|p| p.is_identity())
        .unwrap_or(false)
}

pub fn spectrum(n: usize) -> Result<SpectrumDescriptor> {
    check_size(n)?;
    Ok(SpectrumDescriptor {
        minus_one_multiplicity: n - 2,
        cos_xi: Rational::one() - Rational::new(2.into(), n.into()),
    })
}

/// `(λ + 1)^{N-2} (λ^2 - 2(1 - 2/N) λ + 1)`, expanded.
pub fn closed_form_char_poly(n: usize) -> Result<RatPolynomial> {
    let cos_xi = spectrum(n)?.cos_xi;
    let two = Rational::from_integer(2.into());
    let quadratic = RatPolynomial::new(vec![Rational::one(), -(two * cos_xi), Rational::one()]);
    let linear = RatPolynomial::from_i64(&[1, 1]);
    Ok(&linear.pow((n - 2) as u32) * &quadratic)
}

pub fn default_bruteforce_cutoff(n: usize) -> u64 {
    const LCM_1_TO_12: u64 = 27_720;
    (10 * n as u64 * LCM_1_TO_12).min(1_000_000)
}

pub fn period(n: usize, method: PeriodMethod) -> Result<Period> {
    check_size(n)?;
    match method {
        PeriodMethod::Cyclotomic => Ok(period_from_charpoly(&char_poly(&build(n)?.u))),
        PeriodMethod::QuadraticFastPath => period_grover_quadratic(n),
        PeriodMethod::BruteForce { cutoff } => Ok(period_bruteforce(&build(n)?.u, cutoff)),
    }
}

const SCAN_PRIMES: [u64; 4] = [2_147_483_647, 1_000_000_007, 998_244_353, 4_294_967_291];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn reduce_mod(q: &Rational, p: u64) -> Option<u64> {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    let pb = BigInt::from(p);
    let num = ((q.numer() % &pb + &pb) % &pb).to_u64()?;
    let den = (q.denom() % &pb).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, pow_mod(den, p - 2, p), p))
}

/// Scans `A^t` for `t = 1..=cutoff`.
///
/// Powers are tracked modulo a prime not dividing any denominator, so a
/// mismatch mod p proves `A^t != I`; every modular hit is confirmed with an
/// exact rational power before it is reported. Returns `Unknown` when the
/// cutoff is exhausted: a scan can certify finiteness, never infiniteness.
pub fn period_bruteforce(a: &RationalMatrix, cutoff: u64) -> Period {
    let n = a.size();
    let reduced = SCAN_PRIMES.iter().find_map(|&p| {
        let entries: Option<Vec<u64>> = a
            .rows()
            .flat_map(|r| r.iter())
            .map(|q| reduce_mod(q, p))
            .collect();
        entries.map(|e| (p, e))
    });
    let Some((p, base)) = reduced else {
        // No usable prime; fall back to exact powers.
        let mut acc = a.clone();
        for t in 1..=cutoff {
            if acc.is_identity() {
                return Period::Finite(t);
            }
            acc = acc.mul(a).expect("square");
        }
        return Period::Unknown { cutoff };
    };

    let mut acc = base.clone();
    let mut next = vec![0u64; n * n];
    for t in 1..=cutoff {
        let hit = (0..n).all(|i| (0..n).all(|j| acc[i * n + j] == u64::from(i == j)));
        if hit && a.pow(t).is_identity() {
            return Period::Finite(t);
        }
        for i in 0..n {
            for j in 0..n {
                let mut s: u128 = 0;
                for k in 0..n {
                    s += acc[i * n + k] as u128 * base[k * n + j] as u128;
                }
                next[i * n + j] = (s % p as u128) as u64;
            }
        }
        std::mem::swap(&mut acc, &mut next);
    }
    Period::Unknown { cutoff }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational as r;

    #[test]
    fn displayed_small_cases() {
        let g2 = build(2).unwrap();
        assert_eq!(
            g2.u,
            RationalMatrix::from_i64_rows(r(1, 1), &[&[0, 1], &[-1, 0]]).unwrap()
        );
        let g3 = build(3).unwrap();
        assert_eq!(
            g3.u,
            RationalMatrix::from_i64_rows(r(1, 3), &[&[1, 2, 2], &[-2, -1, 2], &[-2, 2, -1]])
                .unwrap()
        );
        assert_eq!(
            g3.r_d,
            RationalMatrix::from_i64_rows(r(1, 3), &[&[-1, 2, 2], &[2, -1, 2], &[2, 2, -1]])
                .unwrap()
        );
        let g4 = build(4).unwrap();
        assert_eq!(
            g4.u,
            RationalMatrix::from_i64_rows(
                r(1, 2),
                &[
                    &[1, 1, 1, 1],
                    &[-1, -1, 1, 1],
                    &[-1, 1, -1, 1],
                    &[-1, 1, 1, -1]
                ]
            )
            .unwrap()
        );
    }

    #[test]
    fn r_f_squared_is_identity_for_three() {
        let g = build(3).unwrap();
        assert!(g.r_f.mul(&g.r_f).unwrap().is_identity());
        assert_eq!(
            g2_product(),
            RationalMatrix::from_i64_rows(r(1, 1), &[&[0, 1], &[-1, 0]]).unwrap()
        );
    }

    fn g2_product() -> RationalMatrix {
        let g = build(2).unwrap();
        g.r_d.mul(&g.r_f).unwrap()
    }

    #[test]
    fn rejects_small_sizes() {
        assert_eq!(build(1).unwrap_err(), Error::InvalidSize(1));
        assert_eq!(spectrum(0).unwrap_err(), Error::InvalidSize(0));
    }

    #[test]
    fn orthogonality() {
        assert!(check_orthogonal(&build(3).unwrap().r_d));
        assert!(check_orthogonal(&build(5).unwrap().u));
        let ones = RationalMatrix::from_i64_rows(r(1, 1), &[&[1, 1], &[1, 1]]).unwrap();
        assert!(!check_orthogonal(&ones));
    }

    #[test]
    fn spectra() {
        let s2 = spectrum(2).unwrap();
        assert_eq!(s2.minus_one_multiplicity, 0);
        assert_eq!(s2.cos_xi, r(0, 1));
        let s4 = spectrum(4).unwrap();
        assert_eq!((s4.minus_one_multiplicity, s4.cos_xi.clone()), (2, r(1, 2)));
        let (re, im) = s4.unit_pair_f64();
        assert!((re - 0.5).abs() < 1e-15 && (im - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(spectrum(3).unwrap().cos_xi, r(1, 3));
        assert_eq!(spectrum(7).unwrap().total_multiplicity(), 7);
    }

    #[test]
    fn entries() {
        assert_eq!(grover_matrix_entry(4, 1, 1).unwrap(), r(-1, 2));
        assert_eq!(grover_matrix_entry(4, 1, 2).unwrap(), r(1, 2));
        assert_eq!(grover_matrix_entry(2, 1, 1).unwrap(), r(0, 1));
        assert_eq!(
            grover_matrix_entry(4, 0, 2),
            Err(Error::IndexOutOfRange { n: 4, i: 0, j: 2 })
        );
        assert!(grover_matrix_entry(4, 1, 5).is_err());
    }

    #[test]
    fn periods_by_every_method() {
        for method in [
            PeriodMethod::Cyclotomic,
            PeriodMethod::QuadraticFastPath,
            PeriodMethod::BruteForce { cutoff: 100 },
        ] {
            assert_eq!(period(2, method).unwrap(), Period::Finite(4));
            assert_eq!(period(4, method).unwrap(), Period::Finite(6));
        }
        assert_eq!(
            period(6, PeriodMethod::Cyclotomic).unwrap(),
            Period::Infinite
        );
        assert_eq!(
            period(3, PeriodMethod::BruteForce { cutoff: 50 }).unwrap(),
            Period::Unknown { cutoff: 50 }
        );
    }

    #[test]
    fn bruteforce_reflections_have_period_two() {
        for n in 2..=6 {
            let g = build(n).unwrap();
            assert_eq!(period_bruteforce(&g.r_d, 10), Period::Finite(2));
            assert_eq!(period_bruteforce(&g.r_f, 10), Period::Finite(2));
        }
        assert_eq!(
            period_bruteforce(&RationalMatrix::identity(3), 10),
            Period::Finite(1)
        );
    }

    #[test]
    fn default_cutoff_is_capped() {
        assert_eq!(default_bruteforce_cutoff(2), 554_400);
        assert_eq!(default_bruteforce_cutoff(8), 1_000_000);
    }
}
