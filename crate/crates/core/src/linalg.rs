//! Exact rational matrices.
//!
//! A [`Mat`] with `rows × cols` entries is read as a linear map from
//! `ℚ^cols` to `ℚ^rows`; vectors are columns and `f.compose(&g)` is the map
//! "first `g`, then `f`". Tensor products of spaces use the lexicographic
//! basis with the left factor major: `e_i ⊗ e_j` of `V ⊗ W` sits at index
//! `i·dim(W) + j`, which is exactly the index convention of [`Mat::kron`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Lowest-terms rendering; integers print without a denominator.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn zero_vec(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

/// Coordinates of `v ⊗ w` in the lexicographic tensor basis.
pub fn vec_kron(v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(v.len() * w.len());
    for x in v {
        for y in w {
            out.push(x * y);
        }
    }
    out
}

/// Splits a flat tensor index into per-factor indices (left factor major).
pub fn decode_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, d) in out.iter_mut().zip(dims).rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

pub fn encode_index(parts: &[usize], dims: &[usize]) -> usize {
    parts.iter().zip(dims).fold(0, |acc, (p, d)| acc * d + p)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::Shape(format!(
                "ragged rows: expected {c} entries, found {}",
                bad.len()
            )));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer convenience constructor, mostly for fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("ragged integer matrix")
    }

    /// Builds a matrix from columns of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Scalar>]) -> Self {
        for c in cols {
            assert_eq!(c.len(), rows, "column length mismatch");
        }
        Mat::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// The map `k → ℚ^n` picking out `v`.
    pub fn column(v: &[Scalar]) -> Self {
        Mat::from_cols(v.len(), &[v.to_vec()])
    }

    /// The functional `ℚ^n → k` given by `v`.
    pub fn row(v: &[Scalar]) -> Self {
        Mat {
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    /// The symmetry `V ⊗ W → W ⊗ V` for `dim V = m`, `dim W = n`.
    pub fn flip(m: usize, n: usize) -> Self {
        let mut out = Mat::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                out.data[(j * m + i) * (m * n) + (i * n + j)] = Scalar::one();
            }
        }
        out
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.rows)
    }

    /// Vertical composition: the product `self · other`.
    pub fn compose(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "compose",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let (m, n, p) = (self.rows, self.cols, other.cols);
        let mut out = Mat::zeros(m, p);
        for i in 0..m {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..p {
                    let b = &other.data[k * p + j];
                    if !b.is_zero() {
                        out.data[i * p + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Composes a chain of maps listed in application order (rightmost first
    /// in the usual notation): `chain(&[g, f])` is `f · g`.
    pub fn chain(maps: &[&Mat]) -> Result<Mat> {
        let (first, rest) = maps
            .split_first()
            .ok_or_else(|| Error::Shape("empty composition chain".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, next| next.compose(&acc))
    }

    /// Horizontal composition `self ⊗ other`, left factor major.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Mat::zeros(r1 * r2, c1 * c2);
        let width = c1 * c2;
        for i1 in 0..r1 {
            for j1 in 0..c1 {
                let a = &self.data[i1 * c1 + j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = &other.data[i2 * c2 + j2];
                        if !b.is_zero() {
                            out.data[(i1 * r2 + i2) * width + j1 * c2 + j2] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// `f1 ⊗ f2 ⊗ … ⊗ fn`.
    pub fn kron_all(factors: &[&Mat]) -> Mat {
        factors.iter().fold(Mat::identity(1), |acc, f| acc.kron(f))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.same_shape("add", other)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.same_shape("sub", other)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix width");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Keeps the listed columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        Mat::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        Mat::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    fn same_shape(&self, op: &'static str, other: &Mat) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
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
                let x = &m.data[r * m.cols + j] * &inv;
                m.data[r * m.cols + j] = x;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let sub = &factor * &m.data[r * m.cols + j];
                    if !sub.is_zero() {
                        m.data[i * m.cols + j] -= sub;
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

    /// Indices of the pivot columns, i.e. a maximal independent set of
    /// columns chosen greedily from the left.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rref().1
    }

    /// Columns spanning the null space, one per free variable.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let cols: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = unit_vec(self.cols, f);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect();
        Mat::from_cols(self.cols, &cols)
    }

    /// Solves `self · X = rhs`, setting free variables to zero.
    pub fn solve(&self, rhs: &Mat) -> Result<Mat> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "solve",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let aug = self.hstack(rhs)?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Mat::zeros(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(row, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    /// First entry where `self` and `other` differ, as `(row, col)`.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row_vec(i).iter().map(format_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A split idempotent: `proj · incl = id_r` and `incl · proj = idempotent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub idempotent: Mat,
    pub proj: Mat,
    pub incl: Mat,
}

impl Splitting {
    pub fn rank(&self) -> usize {
        self.proj.rows()
    }
}

/// Splits an idempotent through its image.
///
/// `incl` is made of the pivot columns of `e` and `proj` of the nonzero rows
/// of its reduced echelon form, so that `e = incl · proj` is the rank
/// factorization; idempotency then forces `proj · incl = id`.
pub fn split_idempotent(e: &Mat) -> Result<Splitting> {
    if e.rows() != e.cols() {
        return Err(Error::Shape(format!(
            "idempotent must be square, got {}x{}",
            e.rows(),
            e.cols()
        )));
    }
    let square = e.compose(e)?;
    if let Some((row, col)) = square.first_difference(e) {
        return Err(Error::NotIdempotent { row, col });
    }
    let (r, pivots) = e.rref();
    let incl = e.select_cols(&pivots);
    let proj = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
    let s = Splitting {
        idempotent: e.clone(),
        proj,
        incl,
    };
    if !s.proj.compose(&s.incl)?.is_identity() || s.incl.compose(&s.proj)? != *e {
        return Err(Error::InternalInconsistency(
            "rank factorization of an idempotent did not split it".into(),
        ));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_composes_to_identity() {
        let i2 = Mat::identity(2);
        assert_eq!(i2.compose(&i2).unwrap(), i2);
    }

    #[test]
    fn flip_is_an_involution() {
        let s = Mat::flip(2, 2);
        assert_eq!(s.compose(&s).unwrap(), Mat::identity(4));
        let s23 = Mat::flip(2, 3);
        let s32 = Mat::flip(3, 2);
        assert_eq!(s32.compose(&s23).unwrap(), Mat::identity(6));
    }

    #[test]
    fn compose_rejects_mismatch() {
        let err = Mat::zeros(2, 3).compose(&Mat::zeros(2, 3)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { op: "compose", .. }));
    }

    #[test]
    fn kron_of_identities() {
        assert_eq!(Mat::identity(2).kron(&Mat::identity(3)), Mat::identity(6));
    }

    #[test]
    fn kron_basis_order_left_major() {
        // e_i ⊗ e_j lands at i·dim(B) + j.
        let (da, db) = (2, 3);
        for i in 0..da {
            for j in 0..db {
                let v = vec_kron(&unit_vec(da, i), &unit_vec(db, j));
                assert_eq!(v, unit_vec(da * db, i * db + j));
                let m = Mat::column(&unit_vec(da, i)).kron(&Mat::column(&unit_vec(db, j)));
                assert_eq!(m.col(0), unit_vec(da * db, i * db + j));
            }
        }
    }

    #[test]
    fn flip_moves_tensor_factors() {
        let v = vec![int(1), int(2)];
        let w = vec![int(3), int(5), int(7)];
        let s = Mat::flip(2, 3);
        assert_eq!(s.apply(&vec_kron(&v, &w)), vec_kron(&w, &v));
    }

    #[test]
    fn rank_and_kernel() {
        assert_eq!(Mat::identity(3).rank(), 3);
        let k = Mat::from_ints(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.shape(), (2, 1));
        assert_eq!(k.col(0), vec![int(-1), int(1)]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Mat::from_ints(&[&[1, 2], &[2, 4]]);
        let x = a.solve(&Mat::from_ints(&[&[3], &[6]])).unwrap();
        assert_eq!(a.compose(&x).unwrap(), Mat::from_ints(&[&[3], &[6]]));
        assert!(matches!(
            a.solve(&Mat::from_ints(&[&[3], &[7]])),
            Err(Error::NoSolution)
        ));
    }

    #[test]
    fn split_identity_and_zero() {
        let s = split_idempotent(&Mat::identity(3)).unwrap();
        assert!(s.proj.is_identity() && s.incl.is_identity());
        let z = split_idempotent(&Mat::zeros(3, 3)).unwrap();
        assert_eq!(z.rank(), 0);
        assert_eq!(z.proj.shape(), (0, 3));
        assert_eq!(z.incl.shape(), (3, 0));
    }

    #[test]
    fn split_rejects_non_idempotent() {
        let m = Mat::from_ints(&[&[2, 0], &[0, 1]]);
        assert!(matches!(
            split_idempotent(&m),
            Err(Error::NotIdempotent { row: 0, col: 0 })
        ));
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("-6/8"), Some(rat(-3, 4)));
        assert_eq!(parse_scalar("5"), Some(int(5)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
        assert_eq!(format_scalar(&rat(6, -8)), "-3/4");
        assert_eq!(format_scalar(&int(2)), "2");
    }

    #[test]
    fn index_codec_roundtrip() {
        let dims = [2, 3, 4];
        for idx in 0..24 {
            assert_eq!(encode_index(&decode_index(idx, &dims), &dims), idx);
        }
        assert_eq!(decode_index(7, &[2, 4]), vec![1, 3]);
    }
}
