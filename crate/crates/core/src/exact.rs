//! Rational scalars and exact sparse linear algebra over ℚ.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An element of the coefficient field ℚ, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("composite of differentials is nonzero")]
    CompositionNonzero,
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_scalar(s: &str) -> Result<Scalar, ExactError> {
    let t = s.trim();
    let err = || ExactError::ParseScalar(s.to_string());
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| err())?;
    let q: BigInt = q.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(p, q))
}

/// Formats as `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sparse matrix with no stored zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}", self.rows, self.cols)?;
        for ((r, c), v) in &self.entries {
            write!(f, " [{r},{c}]={}", format_scalar(v))?;
        }
        write!(f, ")")
    }
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Stores `v` at `(r, c)`; a zero value removes the entry.
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (&(r, c), v) in &self.entries {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v * k);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v);
        }
        Ok(out)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::ShapeMismatch(format!(
                "{}x{} · {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// Reindexes rows and columns: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out.entries.insert((row_perm[r], col_perm[c]), v.clone());
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![Scalar::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Scalar::zero(); self.rows];
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] += a * &v[c];
            }
        }
        out
    }
}

type IntRow = BTreeMap<usize, BigInt>;

fn primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v /= &g;
    }
}

/// Scales a rational row to a primitive integer row.
fn integer_row(row: &BTreeMap<usize, &Scalar>) -> IntRow {
    let mut l = BigInt::one();
    for v in row.values() {
        l = l.lcm(v.denom());
    }
    let mut out: IntRow = row
        .iter()
        .map(|(&c, v)| (c, v.numer() * (&l / v.denom())))
        .collect();
    primitive(&mut out);
    out
}

/// `a·row − b·piv`, with the leading column cancelled.
fn eliminate(row: &IntRow, piv: &IntRow, a: &BigInt, b: &BigInt) -> IntRow {
    let mut out = IntRow::new();
    for (&c, v) in row {
        out.insert(c, v * a);
    }
    for (&c, v) in piv {
        let e = out.entry(c).or_insert_with(BigInt::zero);
        *e -= v * b;
        if e.is_zero() {
            out.remove(&c);
        }
    }
    out
}

/// Rank over ℚ by fraction-free elimination on primitive integer rows.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut rows: BTreeMap<usize, BTreeMap<usize, &Scalar>> = BTreeMap::new();
    for (&(r, c), v) in &m.entries {
        rows.entry(r).or_default().insert(c, v);
    }
    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    let mut todo: Vec<IntRow> = rows.values().map(integer_row).collect();
    todo.sort_by_key(|r| r.len());
    for mut row in todo {
        loop {
            let Some((&lead, lv)) = row.iter().next() else { break };
            match pivots.get(&lead) {
                Some(piv) => {
                    let pv = &piv[&lead];
                    let g = pv.gcd(lv);
                    let a = pv / &g;
                    let b = lv / &g;
                    row = eliminate(&row, piv, &a, &b);
                    primitive(&mut row);
                }
                None => {
                    if row[&lead].is_negative() {
                        for v in row.values_mut() {
                            *v = -v.clone();
                        }
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

pub fn kernel_dim(m: &SparseMatrix) -> usize {
    m.cols() - rank(m)
}

pub fn cokernel_dim(m: &SparseMatrix) -> usize {
    m.rows() - rank(m)
}

/// Dimension of `ker(d_out) / im(d_in)`.
pub fn homology_dim(d_out: &SparseMatrix, d_in: &SparseMatrix) -> Result<usize, ExactError> {
    if d_out.cols() != d_in.rows() {
        return Err(ExactError::ShapeMismatch(format!(
            "d_out has {} columns but d_in has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(ExactError::CompositionNonzero);
    }
    Ok(kernel_dim(d_out) - rank(d_in))
}
