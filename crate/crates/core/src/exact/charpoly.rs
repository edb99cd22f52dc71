//! Exact characteristic polynomials `det(λI - A)`.

use num_traits::{One, Zero};

use super::{RatPolynomial, Rational, RationalMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharPolyMethod {
    /// Faddeev–LeVerrier trace recursion, O(n^4) rational operations.
    FaddeevLeVerrier,
    /// Similarity reduction to upper Hessenberg form, then the Hessenberg
    /// determinant recurrence, O(n^3).
    Hessenberg,
}

/// Monic characteristic polynomial in λ, ascending coefficients, by the
/// Hessenberg path (faster than the trace recursion at every size tried).
pub fn char_poly(a: &RationalMatrix) -> RatPolynomial {
    char_poly_with(a, CharPolyMethod::Hessenberg)
}

pub fn char_poly_with(a: &RationalMatrix, method: CharPolyMethod) -> RatPolynomial {
    match method {
        CharPolyMethod::FaddeevLeVerrier => faddeev_leverrier(a),
        CharPolyMethod::Hessenberg => hessenberg(a),
    }
}

fn faddeev_leverrier(a: &RationalMatrix) -> RatPolynomial {
    let n = a.size();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RationalMatrix::identity(n);
    for k in 1..=n {
        if k > 1 {
            m = a
                .mul(&m)
                .expect("square")
                .add_scaled_identity(&coeffs[n - k + 1]);
        }
        let am = a.mul(&m).expect("square");
        coeffs[n - k] = -am.trace() / Rational::from_integer(k.into());
    }
    RatPolynomial::new(coeffs)
}

fn hessenberg(a: &RationalMatrix) -> RatPolynomial {
    let n = a.size();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(pivot) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
            continue;
        };
        h.swap_rows(pivot, m);
        h.swap_cols(pivot, m);
        let p = h.get(m, m - 1).clone();
        for r in m + 1..n {
            let u = h.get(r, m - 1) / &p;
            if u.is_zero() {
                continue;
            }
            // row_r -= u * row_m, then col_m += u * col_r keeps the similarity.
            for c in 0..n {
                let v = h.get(m, c) * &u;
                *h.entry_mut(r, c) -= v;
            }
            for i in 0..n {
                let v = h.get(i, r) * &u;
                *h.entry_mut(i, m) += v;
            }
        }
    }

    let x = RatPolynomial::monomial(Rational::one(), 1);
    let mut p: Vec<RatPolynomial> = Vec::with_capacity(n + 1);
    p.push(RatPolynomial::one());
    for m in 1..=n {
        let shift = RatPolynomial::constant(h.get(m - 1, m - 1).clone());
        let mut next = &(&x - &shift) * &p[m - 1];
        let mut t = Rational::one();
        for i in 1..m {
            t *= h.get(m - i, m - i - 1);
            if t.is_zero() {
                break;
            }
            let c = &t * h.get(m - i - 1, m - 1);
            if !c.is_zero() {
                next = &next - &p[m - i - 1].scale(&c);
            }
        }
        p.push(next);
    }
    p.pop().expect("non-empty")
}

/// `u^N * p(1/u)`; turns `det(xI - U)` into `det(I - uU)`.
pub fn poly_reverse_scale(p: &RatPolynomial, degree: usize) -> Result<RatPolynomial> {
    match p.degree() {
        Some(d) if d == degree => Ok(p.reversed(degree)),
        found => Err(Error::DegreeMismatch {
            expected: degree,
            found: found.unwrap_or(0),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn two_by_two_rotation() {
        let u = RationalMatrix::from_i64_rows(r(1, 1), &[&[0, 1], &[-1, 0]]).unwrap();
        for m in [CharPolyMethod::FaddeevLeVerrier, CharPolyMethod::Hessenberg] {
            assert_eq!(char_poly_with(&u, m), RatPolynomial::from_i64(&[1, 0, 1]));
        }
    }

    #[test]
    fn hessenberg_handles_zero_subdiagonal_columns() {
        // Already triangular: no pivot exists in the first column.
        let a =
            RationalMatrix::from_i64_rows(r(1, 1), &[&[2, 1, 0], &[0, 3, 1], &[0, 0, 5]]).unwrap();
        let expected = &(&RatPolynomial::from_i64(&[-2, 1]) * &RatPolynomial::from_i64(&[-3, 1]))
            * &RatPolynomial::from_i64(&[-5, 1]);
        assert_eq!(char_poly_with(&a, CharPolyMethod::Hessenberg), expected);
    }

    #[test]
    fn reverse_scale_examples() {
        let p = RatPolynomial::from_i64(&[1, 0, 1]);
        assert_eq!(poly_reverse_scale(&p, 2).unwrap(), p);
        let xn = RatPolynomial::monomial(Rational::one(), 5);
        assert_eq!(poly_reverse_scale(&xn, 5).unwrap(), RatPolynomial::one());
        assert_eq!(
            poly_reverse_scale(&p, 3),
            Err(Error::DegreeMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..6).prop_flat_map(|n| {
            prop::collection::vec((-3i64..4, 1i64..4), n * n).prop_map(move |v| {
                RationalMatrix::from_fn(n, |i, j| {
                    let (p, q) = v[i * n + j];
                    Rational::new(p.into(), q.into())
                })
            })
        })
    }

    proptest! {
        #[test]
        fn methods_agree(a in small_matrix()) {
            let f = char_poly_with(&a, CharPolyMethod::FaddeevLeVerrier);
            let h = char_poly_with(&a, CharPolyMethod::Hessenberg);
            prop_assert!(f.is_monic());
            prop_assert_eq!(&f, &h);
            // p(0) = det(-A)
            let n = a.size();
            let det = a.determinant();
            let expected = if n % 2 == 0 { det } else { -det };
            prop_assert_eq!(f.coeff(0), expected);
        }

        #[test]
        fn reverse_scale_is_an_involution(a in small_matrix()) {
            let p = char_poly(&a);
            let n = a.size();
            prop_assume!(!p.coeff(0).is_zero());
            let once = poly_reverse_scale(&p, n).unwrap();
            prop_assert_eq!(poly_reverse_scale(&once, n).unwrap(), p);
        }
    }
}
