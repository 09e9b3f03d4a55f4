//! Integer symmetric bilinear forms with exact inertia and determinant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Inertia triple `(n+, n-, n0)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SymmetricIntegerForm {
    entries: Vec<Vec<i64>>,
}

impl SymmetricIntegerForm {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMap(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for j in 0..i {
                if row[j] != entries[j][i] {
                    return Err(Error::InvalidMap(format!("form is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymmetricIntegerForm { entries })
    }

    pub fn zeros(n: usize) -> Self {
        SymmetricIntegerForm { entries: vec![vec![0; n]; n] }
    }

    /// Adds `v` at `(i, j)` and `(j, i)` (once on the diagonal).
    pub(crate) fn add_sym(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i][j] += v;
        if i != j {
            self.entries[j][i] += v;
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Exact inertia by symmetric Gaussian elimination over the rationals.
    pub fn inertia(&self) -> Inertia {
        let mut a: Vec<Vec<BigRational>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let n = a.len();
        let mut out = Inertia::default();
        let mut i = 0;
        while i < n {
            if a[i][i].is_zero() {
                if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                    a.swap(i, j);
                    for row in a.iter_mut() {
                        row.swap(i, j);
                    }
                } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                    // Replace e_i by e_i + e_j: the new pivot is 2 a_ij.
                    for k in 0..n {
                        let t = a[j][k].clone();
                        a[i][k] += t;
                    }
                    for row in a.iter_mut() {
                        let t = row[j].clone();
                        row[i] += t;
                    }
                } else {
                    out.zero += 1;
                    i += 1;
                    continue;
                }
            }
            let p = a[i][i].clone();
            if p.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            for r in i + 1..n {
                if a[r][i].is_zero() {
                    continue;
                }
                let f = &a[r][i] / &p;
                for k in i..n {
                    let t = &f * &a[i][k];
                    a[r][k] -= t;
                }
            }
            for r in i + 1..n {
                a[r][i] = BigRational::zero();
                a[i][r] = BigRational::zero();
            }
            i += 1;
        }
        out
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }

    /// Exact determinant by fraction-free Bareiss elimination; 1 for the empty form.
    pub fn determinant(&self) -> BigInt {
        determinant(&self.entries)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.inertia().positive == self.size()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.inertia().negative == self.size()
    }
}

/// Exact determinant of a square integer matrix.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// The symmetrization `V + V^T` of a square integer matrix.
pub fn symmetrized(v: &[Vec<i64>]) -> SymmetricIntegerForm {
    let n = v.len();
    let entries = (0..n).map(|i| (0..n).map(|j| v[i][j] + v[j][i]).collect()).collect();
    SymmetricIntegerForm { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn form(rows: &[&[i64]]) -> SymmetricIntegerForm {
        SymmetricIntegerForm::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_inertias() {
        assert_eq!(form(&[&[2]]).inertia(), Inertia { positive: 1, negative: 0, zero: 0 });
        assert_eq!(form(&[&[0]]).inertia(), Inertia { positive: 0, negative: 0, zero: 1 });
        assert_eq!(form(&[&[1, 2], &[2, 1]]).inertia(), Inertia { positive: 1, negative: 1, zero: 0 });
        assert_eq!(form(&[&[0, 1], &[1, 0]]).inertia(), Inertia { positive: 1, negative: 1, zero: 0 });
        assert_eq!(SymmetricIntegerForm::zeros(0).inertia(), Inertia::default());
        assert_eq!(SymmetricIntegerForm::zeros(0).determinant(), BigInt::one());
    }

    #[test]
    fn determinants() {
        assert_eq!(form(&[&[2, -1], &[-1, 2]]).determinant(), BigInt::from(3));
        assert_eq!(form(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(form(&[&[1, 1], &[1, 1]]).determinant(), BigInt::zero());
        assert_eq!(determinant(&[vec![0, 2, 1], vec![1, 0, 0], vec![0, 0, 3]]), BigInt::from(-6));
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(SymmetricIntegerForm::new(vec![vec![1, 2], vec![3, 1]]).is_err());
        assert!(SymmetricIntegerForm::new(vec![vec![1, 2]]).is_err());
    }

    fn sym_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (0usize..6).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                (0..n).map(|i| (0..n).map(|j| v[i.min(j) * n + i.max(j)]).collect()).collect()
            })
        })
    }

    fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
    }

    proptest! {
        #[test]
        fn inertia_sums_to_size(m in sym_matrix()) {
            let f = SymmetricIntegerForm::new(m).unwrap();
            let i = f.inertia();
            prop_assert_eq!(i.positive + i.negative + i.zero, f.size());
            prop_assert_eq!(i.zero == 0, !f.determinant().is_zero());
        }

        #[test]
        fn negation_swaps_inertia(m in sym_matrix()) {
            let neg: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
            let a = SymmetricIntegerForm::new(m).unwrap().inertia();
            let b = SymmetricIntegerForm::new(neg).unwrap().inertia();
            prop_assert_eq!((a.positive, a.negative, a.zero), (b.negative, b.positive, b.zero));
        }

        #[test]
        fn congruence_invariance(m in sym_matrix(), seed in any::<u64>()) {
            // Unimodular upper-triangular change of basis.
            let n = m.len();
            let mut p = vec![vec![0i64; n]; n];
            let mut s = seed;
            for i in 0..n {
                p[i][i] = 1;
                for j in i + 1..n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    p[i][j] = ((s >> 33) % 3) as i64 - 1;
                }
            }
            let pt: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| p[j][i]).collect()).collect();
            let c = mul(&mul(&pt, &m), &p);
            let a = SymmetricIntegerForm::new(m).unwrap();
            let b = SymmetricIntegerForm::new(c).unwrap();
            prop_assert_eq!(a.inertia(), b.inertia());
            prop_assert_eq!(a.determinant(), b.determinant());
        }
    }
}
