use std::fmt;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    size: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        Self { size, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::SizeMismatch {
                left: size,
                right: bad.len(),
            });
        }
        Ok(Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor: `scale * [[i64]]`.
    pub fn from_i64_rows(scale: Rational, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()) * &scale)
                        .collect()
                })
                .collect(),
        )
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.size + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.size + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.size.max(1))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rational {
        (0..self.size).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: other.size,
            });
        }
        let n = self.size;
        let mut out = Self::from_fn(n, |_, _| Rational::zero());
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.size);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("square");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("square");
            }
        }
        acc
    }

    pub fn add_scaled_identity(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        for i in 0..self.size {
            let v = out.get(i, i) + c;
            out.set(i, i, v);
        }
        out
    }

    /// Determinant by fraction-carrying Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.size;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let p = m.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let f = m.get(r, col) / &p;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &f * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.size {
            self.entries.swap(a * self.size + j, b * self.size + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.size {
            self.entries.swap(i * self.size + a, i * self.size + b);
        }
    }

    pub(crate) fn entry_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.size + j]
    }

    /// Entries as `"p/q"` strings (integers print without denominator).
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_string_rows() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact matrix product; errors on a size mismatch.
pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    a.mul(b)
}

pub fn mat_pow(a: &RationalMatrix, k: u64) -> RationalMatrix {
    a.pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn identity_times_identity() {
        let i2 = RationalMatrix::identity(2);
        assert_eq!(mat_mul(&i2, &i2).unwrap(), i2);
    }

    #[test]
    fn size_mismatch_is_reported() {
        let err = mat_mul(&RationalMatrix::identity(2), &RationalMatrix::identity(3));
        assert_eq!(err, Err(Error::SizeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn zeroth_power_is_identity() {
        let a = RationalMatrix::from_i64_rows(r(1, 3), &[&[1, 2], &[3, 4]]).unwrap();
        assert!(mat_pow(&a, 0).is_identity());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a =
            RationalMatrix::from_i64_rows(r(1, 2), &[&[0, 2, 1], &[3, -1, 4], &[1, 1, 1]]).unwrap();
        // (1/2)^3 * (0*(-1-4) - 2*(3-4) + 1*(3+1)) = 6/8
        assert_eq!(a.determinant(), r(3, 4));
        let singular = RationalMatrix::from_i64_rows(r(1, 1), &[&[1, 1], &[1, 1]]).unwrap();
        assert!(singular.determinant().is_zero());
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..4).prop_flat_map(|n| {
            prop::collection::vec((-4i64..5, 1i64..4), n * n).prop_map(move |v| {
                RationalMatrix::from_fn(n, |i, j| {
                    let (p, q) = v[i * n + j];
                    Rational::new(p.into(), q.into())
                })
            })
        })
    }

    proptest! {
        #[test]
        fn pow_agrees_with_iterated_mul(a in small_matrix(), k in 0u64..7) {
            let mut iter = RationalMatrix::identity(a.size());
            for _ in 0..k {
                iter = iter.mul(&a).unwrap();
            }
            prop_assert_eq!(mat_pow(&a, k), iter);
        }

        #[test]
        fn determinant_is_multiplicative(a in small_matrix()) {
            let b = a.transpose().add_scaled_identity(&Rational::one());
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.determinant(), a.determinant() * b.determinant());
        }
    }
}
