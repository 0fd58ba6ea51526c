//! Exact integer linear algebra: extended gcd chains, completion of a
//! primitive vector to an SL(k,ℤ) basis, Smith and Hermite normal forms,
//! integer kernels and characteristic-class basis changes.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{int, Int};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// gcd of (0, 0) is undefined.
    BothZero,
    /// Vector whose entries have gcd ≠ 1 where a primitive one is required.
    NotPrimitive { gcd: Int },
    /// The zero vector where a nonzero one is required.
    ZeroVector,
    /// A length-1 vector (−1) admits no determinant +1 completion.
    NoUnimodularCompletion,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::BothZero => write!(f, "extended gcd of (0, 0) is undefined"),
            LatticeError::NotPrimitive { gcd } => {
                write!(f, "vector is not primitive: entries have gcd {}", gcd)
            }
            LatticeError::ZeroVector => write!(f, "zero vector not allowed here"),
            LatticeError::NoUnimodularCompletion => {
                write!(f, "no SL completion exists for the 1-dimensional vector (-1)")
            }
        }
    }
}

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.entries[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.entries[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                if self[(i, t)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &self[(i, t)] * &other[(t, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Int::is_zero)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m: Vec<Vec<Int>> = (0..n).map(|i| self.row(i)).collect();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Int::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    let (q, r) = t.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division not exact");
                    m[i][j] = q;
                }
                m[i][k] = Int::zero();
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row_mul(&mut self, a: usize, b: usize, q: &Int) {
        for j in 0..self.cols {
            let v = q * &self[(b, j)];
            self[(a, j)] += v;
        }
    }

    /// col[a] += q * col[b]
    fn add_col_mul(&mut self, a: usize, b: usize, q: &Int) {
        for i in 0..self.rows {
            let v = q * &self[(i, b)];
            self[(i, a)] += v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` the diagonal divisor chain.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero invariant factors d₁ | d₂ | … .
    pub fn invariant_factors(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// gcd with Bezout coefficients: `a*x + b*y = g > 0`.
pub fn extended_gcd(a: &Int, b: &Int) -> Result<(Int, Int, Int), LatticeError> {
    if a.is_zero() && b.is_zero() {
        return Err(LatticeError::BothZero);
    }
    // (old_r, r) with corresponding coefficient pairs.
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Int::one(), Int::zero());
    let (mut old_t, mut t) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let q = old_r.div_rem(&r).0;
        let tmp = &old_r - &q * &r;
        old_r = core::mem::replace(&mut r, tmp);
        let tmp = &old_s - &q * &s;
        old_s = core::mem::replace(&mut s, tmp);
        let tmp = &old_t - &q * &t;
        old_t = core::mem::replace(&mut t, tmp);
    }
    if old_r.is_negative() {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    Ok((old_r, old_s, old_t))
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Complete a primitive vector to the first row of an SL(k,ℤ) matrix.
///
/// Builds the basis by the iterated Bezout chain: at step j the current
/// prefix content γ = ±gcd(v₁,…,v_{j-1}) and v_j are combined by a
/// determinant-one 2×2 move on rows 0 and j, so the accumulated basis change
/// stays in SL(k,ℤ) at every step and ends with first row exactly `v`.
pub fn complete_to_sl(v: &[Int]) -> Result<IntMatrix, LatticeError> {
    if v.is_empty() {
        return Err(LatticeError::ZeroVector);
    }
    let g = gcd_all(v);
    if !g.is_one() {
        return Err(LatticeError::NotPrimitive { gcd: g });
    }
    let k = v.len();
    if k == 1 {
        // v = (1) or (-1); only (1) has a determinant +1 completion.
        return if v[0].is_one() {
            Ok(IntMatrix::identity(1))
        } else {
            Err(LatticeError::NoUnimodularCompletion)
        };
    }
    let mut b = IntMatrix::identity(k);
    let mut gamma = v[0].clone(); // signed prefix content: gamma * row0 = (v_0..v_{j-1}, 0, ..)
    for j in 1..k {
        let a = &v[j];
        if gamma.is_zero() && a.is_zero() {
            continue;
        }
        let (g, x, y) = extended_gcd(&gamma, a)?;
        let p = &gamma / &g;
        let q = a / &g;
        for col in 0..k {
            let r0 = b[(0, col)].clone();
            let rj = b[(j, col)].clone();
            b[(0, col)] = &p * &r0 + &q * &rj;
            b[(j, col)] = -&y * &r0 + &x * &rj;
        }
        gamma = g;
    }
    debug_assert_eq!(b.row(0), v, "gcd chain must end at the input vector");
    debug_assert!(b.det().is_one());
    Ok(b)
}

/// Smith normal form. Pivots are chosen minimal in magnitude to control
/// coefficient growth; the divisor chain is enforced before moving on.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);

    for t in 0..n {
        'pivot: loop {
            // Smallest-magnitude nonzero entry of the trailing submatrix.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // Trailing submatrix is zero; the form is final.
                return finish_snf(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Clear column t below the pivot and row t right of it.
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row_mul(i, t, &q);
                u.add_row_mul(i, t, &q);
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col_mul(j, t, &q);
                v.add_col_mul(j, t, &q);
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Divisor chain: fold in any entry the pivot does not divide.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        d.add_row_mul(t, i, &Int::one());
                        u.add_row_mul(t, i, &Int::one());
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish_snf(u, d, v)
}

fn finish_snf(mut u: IntMatrix, mut d: IntMatrix, v: IntMatrix) -> SmithDecomposition {
    let n = d.rows().min(d.cols());
    for t in 0..n {
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, d, v }
}

/// Row-style Hermite normal form: returns `(h, u)` with `u * m = h`,
/// `u` unimodular, pivots positive and entries above each pivot reduced
/// into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // gcd-chain all rows below r into row r on column c
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !h[(i, c)].is_zero()
                    && best.is_none_or(|b| h[(i, c)].abs() < h[(b, c)].abs())
                {
                    best = Some(i);
                }
            }
            let Some(p) = best else {
                break;
            };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -(&h[(i, c)] / &h[(r, c)]);
                h.add_row_mul(i, r, &q);
                u.add_row_mul(i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                h.add_row_mul(i, r, &q);
                u.add_row_mul(i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

/// ℤ-basis of `{x : M x = 0}`, in Hermite-reduced canonical form.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(m);
    let n = m.cols();
    let diag = m.rows().min(n);
    let mut basis: Vec<Vec<Int>> = Vec::new();
    for j in 0..n {
        let free = j >= diag || snf.d[(j, j)].is_zero();
        if free {
            basis.push(snf.v.col(j));
        }
    }
    if basis.is_empty() {
        return basis;
    }
    // Canonicalize: the kernel of an integer matrix is a saturated lattice,
    // so every HNF basis row is automatically primitive.
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(basis));
    let mut out = Vec::new();
    for i in 0..h.rows() {
        let row = h.row(i);
        if row.iter().any(|x| !x.is_zero()) {
            out.push(row);
        }
    }
    for v in &out {
        debug_assert!(gcd_all(v).is_one(), "kernel basis vector not primitive");
        debug_assert!(m.mul_vec(v).iter().all(Int::is_zero));
    }
    out
}

/// gcd-normalized class basis change: `m = gcd(d)` and an SL(k,ℤ) matrix
/// whose first row is `d / m`, so the rows give an equivalent torus bundle
/// with first class (1/m)·Σ dᵢωᵢ.
pub fn normalize_class_basis(d: &[Int]) -> Result<(Int, IntMatrix), LatticeError> {
    let g = gcd_all(d);
    if g.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let reduced: Vec<Int> = d.iter().map(|x| x / &g).collect();
    let a = complete_to_sl(&reduced)?;
    Ok((g, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extended_gcd_examples() {
        let (g, x, y) = extended_gcd(&int(6), &int(4)).unwrap();
        assert_eq!(g, int(2));
        assert_eq!(int(6) * x + int(4) * y, int(2));
        let (g, _, _) = extended_gcd(&int(13), &int(5)).unwrap();
        assert_eq!(g, int(1));
        let (g, x, y) = extended_gcd(&int(0), &int(7)).unwrap();
        assert_eq!((g, x, y), (int(7), int(0), int(1)));
        assert_eq!(extended_gcd(&int(0), &int(0)), Err(LatticeError::BothZero));
    }

    #[test]
    fn complete_to_sl_examples() {
        let e1: Vec<Int> = vec![int(1), int(0), int(0), int(0)];
        assert_eq!(complete_to_sl(&e1).unwrap(), IntMatrix::identity(4));

        let v = vec![int(2), int(3)];
        let b = complete_to_sl(&v).unwrap();
        assert_eq!(b.row(0), v);
        assert_eq!(b.det(), int(1));

        let bad = vec![int(2), int(4)];
        assert_eq!(complete_to_sl(&bad), Err(LatticeError::NotPrimitive { gcd: int(2) }));

        // Leading zeros exercise the degenerate gcd steps.
        let v = vec![int(0), int(0), int(5), int(3)];
        let b = complete_to_sl(&v).unwrap();
        assert_eq!(b.row(0), v);
        assert_eq!(b.det(), int(1));
    }

    #[test]
    fn snf_diag_example() {
        // diag(4, 6) has Smith form diag(2, 12).
        let m = IntMatrix::from_i64(&[&[4, 0], &[0, 6]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.d[(0, 0)], int(2));
        assert_eq!(s.d[(1, 1)], int(12));
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
        assert_eq!(s.u.det().abs(), int(1));
        assert_eq!(s.v.det().abs(), int(1));
    }

    #[test]
    fn snf_zero_matrix() {
        let m = IntMatrix::zero(2, 3);
        let s = smith_normal_form(&m);
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn snf_su11_system_full_rank() {
        let m = IntMatrix::from_i64(&[&[1, 1, 4, 3, 2], &[10, 8, 12, -12, -18]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.invariant_factors().len(), 2);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
    }

    #[test]
    fn kernel_examples() {
        // Single equation 14x + 22y + 8z + 6v = 0 has a rank-3 kernel.
        let m = IntMatrix::from_i64(&[&[14, 22, 8, 6]]);
        let basis = integer_kernel(&m);
        assert_eq!(basis.len(), 3);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(Int::is_zero));
        }

        assert!(integer_kernel(&IntMatrix::identity(3)).is_empty());

        // (2, 4): kernel generated by the primitive (2, -1) up to sign.
        let m = IntMatrix::from_i64(&[&[2, 4]]);
        let basis = integer_kernel(&m);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert!(gcd_all(v).is_one());
        assert!((int(2) * &v[0] + int(4) * &v[1]).is_zero());
    }

    #[test]
    fn normalize_class_basis_examples() {
        let d = vec![int(2), int(4), int(6)];
        let (m, a) = normalize_class_basis(&d).unwrap();
        assert_eq!(m, int(2));
        assert_eq!(a.row(0), vec![int(1), int(2), int(3)]);
        assert_eq!(a.det(), int(1));

        let d = vec![int(1), int(0), int(0)];
        let (m, a) = normalize_class_basis(&d).unwrap();
        assert_eq!(m, int(1));
        assert_eq!(a, IntMatrix::identity(3));

        assert_eq!(
            normalize_class_basis(&[int(0), int(0)]),
            Err(LatticeError::ZeroVector)
        );
    }

    #[test]
    fn hnf_shape() {
        let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(u.mul(&m), h);
        assert_eq!(u.det().abs(), int(1));
        // Row-echelon with positive pivots.
        assert!(h[(0, 0)].is_positive());
    }
}
