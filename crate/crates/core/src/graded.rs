//! Graded bases, Koszul signs, the invariant |V| and the supertrace.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("not a permutation")]
    NotAPermutation,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("degree {0} is not 0 or 1 in Z2 mode")]
    BadZ2Degree(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GradingMode {
    Z,
    Z2,
}

/// Parity of an integer degree: `true` for odd.
pub fn parity(degree: i64) -> bool {
    degree.rem_euclid(2) == 1
}

/// `(-1)^(a·b)` for parities.
pub fn sign_of(a: bool, b: bool) -> i64 {
    if a && b {
        -1
    } else {
        1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    mode: GradingMode,
    names: Vec<String>,
    degrees: Vec<i64>,
}

impl GradedBasis {
    pub fn new(mode: GradingMode, names: Vec<String>, degrees: Vec<i64>) -> Result<Self, GradedError> {
        if names.len() != degrees.len() {
            return Err(GradedError::LengthMismatch(names.len(), degrees.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(GradedError::DuplicateName(n.clone()));
            }
        }
        if mode == GradingMode::Z2 {
            if let Some(&d) = degrees.iter().find(|&&d| d != 0 && d != 1) {
                return Err(GradedError::BadZ2Degree(d));
            }
        }
        Ok(GradedBasis { mode, names, degrees })
    }

    /// Basis named `e1, e2, …` with the given degrees.
    pub fn numbered(mode: GradingMode, prefix: &str, degrees: &[i64]) -> Self {
        let names = (1..=degrees.len()).map(|i| format!("{prefix}{i}")).collect();
        Self::new(mode, names, degrees.to_vec()).expect("numbered basis")
    }

    pub fn mode(&self) -> GradingMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        parity(self.degrees[i])
    }

    pub fn parities(&self) -> Vec<bool> {
        self.degrees.iter().map(|&d| parity(d)).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_odd(i)).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_odd(i)).collect()
    }

    /// Reorders so that even elements precede odd ones, keeping relative order.
    /// Returns the new basis and `perm` with `perm[old] = new`.
    pub fn normalized(&self) -> (GradedBasis, Vec<usize>) {
        let order: Vec<usize> = self.even_indices().into_iter().chain(self.odd_indices()).collect();
        let mut perm = vec![0; self.len()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let b = GradedBasis {
            mode: self.mode,
            names: order.iter().map(|&i| self.names[i].clone()).collect(),
            degrees: order.iter().map(|&i| self.degrees[i]).collect(),
        };
        (b, perm)
    }

    /// Degree reduced to the grading group (parity in Z2 mode).
    pub fn reduce(&self, d: i64) -> i64 {
        match self.mode {
            GradingMode::Z => d,
            GradingMode::Z2 => d.rem_euclid(2),
        }
    }

    /// Basis with every degree shifted by `k` (reduced in Z2 mode).
    pub fn shifted(&self, k: i64) -> GradedBasis {
        GradedBasis {
            mode: self.mode,
            names: self.names.clone(),
            degrees: self.degrees.iter().map(|&d| self.reduce(d + k)).collect(),
        }
    }

    /// Dual basis: names prefixed by `*`, degrees negated.
    pub fn dual(&self) -> GradedBasis {
        GradedBasis {
            mode: self.mode,
            names: self.names.iter().map(|n| format!("{n}*")).collect(),
            degrees: self.degrees.iter().map(|&d| self.reduce(-d)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KoszulSign(pub i8);

impl KoszulSign {
    pub const PLUS: KoszulSign = KoszulSign(1);
    pub const MINUS: KoszulSign = KoszulSign(-1);

    pub fn value(self) -> i64 {
        self.0 as i64
    }
}

impl std::ops::Mul for KoszulSign {
    type Output = KoszulSign;
    fn mul(self, rhs: KoszulSign) -> KoszulSign {
        KoszulSign(self.0 * rhs.0)
    }
}

/// Sign of reordering `ξ₁…ξₙ` into `ξ_{σ(1)}…ξ_{σ(n)}`: one factor −1 per inverted pair of odd elements.
pub fn koszul_sign(perm: &[usize], odd: &[bool]) -> Result<KoszulSign, GradedError> {
    if perm.len() != odd.len() {
        return Err(GradedError::LengthMismatch(perm.len(), odd.len()));
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(GradedError::NotAPermutation);
        }
        seen[p] = true;
    }
    let mut s = 1i8;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && odd[perm[i]] && odd[perm[j]] {
                s = -s;
            }
        }
    }
    Ok(KoszulSign(s))
}

/// `|V|`: in Z mode `n − Σ|eᵢ| + Σ|εⱼ|`; in Z2 mode the parity of the dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionInvariant(pub i64);

pub fn total_dimension_invariant(b: &GradedBasis) -> DimensionInvariant {
    match b.mode() {
        GradingMode::Z => {
            let mut v = 0;
            for i in 0..b.len() {
                if b.is_odd(i) {
                    v += b.degree(i);
                } else {
                    v += 1 - b.degree(i);
                }
            }
            DimensionInvariant(v)
        }
        GradingMode::Z2 => DimensionInvariant((b.len() % 2) as i64),
    }
}

/// `Σ aᵢᵢ` over even indices minus `Σ aᵢᵢ` over odd indices.
pub fn supertrace(matrix: &[Vec<Scalar>], odd: &[bool]) -> Result<Scalar, GradedError> {
    if matrix.len() != odd.len() {
        return Err(GradedError::ShapeMismatch(format!(
            "{} rows for {} basis elements",
            matrix.len(),
            odd.len()
        )));
    }
    let mut s = Scalar::zero();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != matrix.len() {
            return Err(GradedError::ShapeMismatch("matrix is not square".into()));
        }
        if odd[i] {
            s -= &row[i];
        } else {
            s += &row[i];
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_sign(&[0, 1, 2], &[true, true, false]).unwrap(), KoszulSign::PLUS);
        assert_eq!(koszul_sign(&[1, 0], &[true, true]).unwrap(), KoszulSign::MINUS);
        assert_eq!(koszul_sign(&[1, 0], &[true, false]).unwrap(), KoszulSign::PLUS);
        assert_eq!(
            koszul_sign(&[0], &[true, true]),
            Err(GradedError::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn dimension_invariant_examples() {
        let ungraded = GradedBasis::numbered(GradingMode::Z, "e", &[0, 0, 0, 0]);
        assert_eq!(total_dimension_invariant(&ungraded), DimensionInvariant(4));
        for n in 1..6 {
            // 𝔤 dual to generators y (degree 2, even) and x (degree 2n+1, odd).
            let b = GradedBasis::numbered(GradingMode::Z, "g", &[-2 * n, -1]);
            assert_eq!(total_dimension_invariant(&b), DimensionInvariant(2 * n));
        }
        // Generators x (degree 0) and y (degree 1): 𝔤 has elements of degree 1 and 0.
        let b = GradedBasis::numbered(GradingMode::Z, "g", &[1, 0]);
        assert_eq!(total_dimension_invariant(&b), DimensionInvariant(2));
        let s = GradedBasis::numbered(GradingMode::Z2, "g", &[0, 1, 1]);
        assert_eq!(total_dimension_invariant(&s), DimensionInvariant(1));
    }

    #[test]
    fn supertrace_examples() {
        let id = |n: usize| -> Vec<Vec<Scalar>> {
            (0..n).map(|i| (0..n).map(|j| int((i == j) as i64)).collect()).collect()
        };
        assert_eq!(supertrace(&id(3), &[false; 3]).unwrap(), int(3));
        assert_eq!(supertrace(&id(5), &[false, false, true, true, true]).unwrap(), int(-1));
        let odd_map = vec![vec![int(0), int(2)], vec![int(5), int(0)]];
        assert_eq!(supertrace(&odd_map, &[false, true]).unwrap(), int(0));
        assert!(supertrace(&id(2), &[false]).is_err());
    }

    #[test]
    fn normalization_puts_evens_first() {
        let b = GradedBasis::numbered(GradingMode::Z, "e", &[1, 0, 3, 2]);
        let (n, perm) = b.normalized();
        assert_eq!(n.names(), &["e2", "e4", "e1", "e3"]);
        assert_eq!(perm, vec![2, 0, 3, 1]);
    }
}
