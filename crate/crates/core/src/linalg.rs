//! Exact rational scalars and dense matrices.
//!
//! Everything here works over ℚ with arbitrary-precision integers, so every
//! "is this zero" question the rest of the crate asks is decidable.
//!
//! Matrices act on column vectors: a linear map `f` with
//! `f(e_j) = Σ_i M[i][j] e_i` is stored as `M`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Column vector of rationals.
pub type Vector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("entry count {len} does not match a {rows}x{cols} matrix")]
    BadShape { rows: usize, cols: usize, len: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"`, `"p/q"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let err = || LinalgError::Parse(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() || den.is_negative() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p"` for integers, otherwise `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `[a, b, c]` with rationals written as `p/q`.
pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], s: &Rational) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `acc += s * v`, skipping the work when `s` is zero.
pub fn axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::BadShape { rows, cols, len: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn scalar(n: usize, s: Rational) -> Self {
        Self::identity(n).scale(&s)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds from rows; all rows must have equal length. An empty list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::BadShape { rows: r, cols: c, len: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    /// Convenience constructor for integer literals; panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&x| rat(x)).collect()).collect())
            .expect("ragged integer matrix")
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() })
    }

    pub fn diag_ints(entries: &[i64]) -> Self {
        Self::diag(&entries.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self { rows: self.rows, cols: self.cols, data: vec_add(&self.data, &other.data) })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op: "sub",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self { rows: self.rows, cols: self.cols, data: vec_sub(&self.data, &other.data) })
    }

    /// Matrix-vector product `M v`. Panics if `v.len() != cols`.
    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "apply: vector length does not match matrix columns");
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        (self * other) == (other * self)
    }

    /// Kronecker product with `(A⊗B)[(i,j),(k,l)] = A[i][k]·B[j][l]`, pairs ordered lexicographically.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = other.shape();
        Matrix::from_fn(self.rows * p, self.cols * q, |r, c| {
            self.get(r / p, c / q) * other.get(r % p, c % q)
        })
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let (r1, c1) = self.shape();
        Matrix::from_fn(r1 + other.rows, c1 + other.cols, |i, j| {
            if i < r1 && j < c1 {
                self.get(i, j).clone()
            } else if i >= r1 && j >= c1 {
                other.get(i - r1, j - c1).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Reduced row echelon form together with the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let sub = &factor * m.get(r, j);
                    if !sub.is_zero() {
                        let v = m.get(i, j) - sub;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space. Each vector has a 1 at its own free column and
    /// 0 at every other free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = zero_vector(self.cols);
                v[free] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, free).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return Err(LinalgError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// One solution of `M x = rhs` (free variables set to zero).
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vector, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "solve",
                left: self.shape(),
                right: (rhs.len(), 1),
            });
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(LinalgError::Inconsistent);
        }
        let mut x = zero_vector(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(x)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on shape mismatch; use [`Matrix::checked_mul`] for untrusted shapes.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("matrix shape mismatch")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.scale(&rat(-1))
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    a.checked_mul(b)
}

pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    m.kernel_basis()
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn inverse(m: &Matrix) -> Result<Matrix, LinalgError> {
    m.inverse()
}

pub fn solve(m: &Matrix, rhs: &[Rational]) -> Result<Vector, LinalgError> {
    m.solve(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_mul(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::from_fn(a.rows(), b.cols(), |i, j| {
            let mut s = Rational::zero();
            for k in 0..a.cols() {
                s += a.get(i, k) * b.get(k, j);
            }
            s
        })
    }

    #[test]
    fn identity_times_m() {
        let m = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(mat_mul(&Matrix::identity(2), &m).unwrap(), m);
    }

    #[test]
    fn inverse_scalars_multiply_to_one() {
        let a = Matrix::diag(&[frac(1, 2)]);
        let b = Matrix::diag_ints(&[2]);
        assert_eq!(mat_mul(&a, &b).unwrap(), Matrix::identity(1));
    }

    #[test]
    fn product_matches_triple_loop() {
        let a = Matrix::from_rows(vec![
            vec![frac(1, 2), rat(-3), frac(2, 7)],
            vec![rat(0), frac(5, 3), rat(1)],
            vec![rat(4), rat(-1), frac(-1, 9)],
        ])
        .unwrap();
        let b = Matrix::from_rows(vec![
            vec![rat(2), frac(1, 5), rat(0)],
            vec![frac(-7, 4), rat(1), rat(3)],
            vec![rat(1), rat(1), frac(1, 2)],
        ])
        .unwrap();
        assert_eq!(mat_mul(&a, &b).unwrap(), naive_mul(&a, &b));
    }

    #[test]
    fn mul_shape_mismatch() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(mat_mul(&a, &a), Err(LinalgError::DimensionMismatch { .. })));
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3)).len(), 3);
        assert!(kernel_basis(&Matrix::identity(3)).is_empty());
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_ints(&[[1, 1], [2, 2]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(&k[0][0] + &k[0][1], rat(0));
        assert!(!k[0][0].is_zero());
        assert!(is_zero_vector(&m.apply(&k[0])));
    }

    #[test]
    fn inverse_of_diag() {
        let m = Matrix::diag_ints(&[2, 3]);
        assert_eq!(inverse(&m).unwrap(), Matrix::diag(&[frac(1, 2), frac(1, 3)]));
        assert_eq!(inverse(&Matrix::from_ints(&[[1, 2], [2, 4]])), Err(LinalgError::Singular));
    }

    #[test]
    fn rank_of_zero() {
        assert_eq!(rank(&Matrix::zeros(3, 4)), 0);
    }

    #[test]
    fn solve_invertible_exactly() {
        let m = Matrix::from_ints(&[[2, 1, -1], [-3, -1, 2], [-2, 1, 2]]);
        let rhs = vec![rat(8), rat(-11), rat(-3)];
        let x = solve(&m, &rhs).unwrap();
        assert_eq!(x, vec![rat(2), rat(3), rat(-1)]);
        assert!(is_zero_vector(&vec_sub(&m.apply(&x), &rhs)));
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_ints(&[[1, 1], [2, 2]]);
        assert_eq!(solve(&m, &[rat(1), rat(3)]), Err(LinalgError::Inconsistent));
    }

    #[test]
    fn rational_text_roundtrip() {
        for s in ["0", "-3", "7/2", "-5/12"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), frac(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn kron_convention() {
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        let b = Matrix::from_ints(&[[0, 1], [1, 0]]);
        let k = a.kron(&b);
        // (A⊗B)[(i,j),(k,l)] = A[i][k] B[j][l] at row 2i+j, column 2k+l
        let at = |i: usize, j: usize, k2: usize, l: usize| k.get(2 * i + j, 2 * k2 + l).clone();
        assert_eq!(at(0, 1, 1, 0), rat(2));
        assert_eq!(at(1, 0, 0, 1), rat(3));
        assert_eq!(at(1, 0, 1, 0), rat(0));
    }
}
