//! Exact scalar types and small rational linear algebra helpers.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_of(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Exact integer value of a rational, if it is an integer.
pub fn rat_to_int(r: &Rat) -> Option<Int> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// Solve `A x = b` exactly over the rationals by Gaussian elimination.
///
/// `a` is row-major with `rows` rows of equal length. Returns `None` when the
/// system is inconsistent. When the solution is not unique the free variables
/// are set to zero.
pub fn solve_exact(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "matrix/vector size mismatch");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let v = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &v;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistency: a zero row with nonzero rhs.
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (pi, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[pi][cols].clone();
    }
    Some(x)
}

/// Exact inverse of a square rational matrix; `None` when singular.
pub fn invert_exact(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix not square");
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..2 * n {
                    let v = &m[c][j] * &f;
                    m[i][j] = &m[i][j] - &v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Exact determinant of a square rational matrix.
pub fn det_exact(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..n {
                    let v = &m[c][j] * &f;
                    m[i][j] = &m[i][j] - &v;
                }
            }
        }
    }
    det
}

/// Matrix × matrix over the rationals.
pub fn mul_exact(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(b.len(), k, "inner dimension mismatch");
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let v = &a[i][t] * &b[t][j];
                out[i][j] = &out[i][j] + &v;
            }
        }
    }
    out
}

/// Sylvester test: all leading principal minors strictly positive.
pub fn positive_definite(a: &[Vec<Rat>]) -> bool {
    let n = a.len();
    for k in 1..=n {
        let minor: Vec<Vec<Rat>> = a[..k].iter().map(|row| row[..k].to_vec()).collect();
        if !det_exact(&minor).is_positive() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn solve_unique() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![rat(5), rat(10)];
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1), rat(3)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 1], &[2, 2]]);
        let b = vec![rat(1), rat(3)];
        assert!(solve_exact(&a, &b).is_none());
    }

    #[test]
    fn invert_and_det() {
        let a = m(&[&[2, -1], &[-2, 2]]);
        assert_eq!(det_exact(&a), rat(2));
        let inv = invert_exact(&a).unwrap();
        let prod = mul_exact(&a, &inv);
        assert_eq!(prod[0][0], rat(1));
        assert_eq!(prod[0][1], rat(0));
        assert_eq!(prod[1][0], rat(0));
        assert_eq!(prod[1][1], rat(1));
    }

    #[test]
    fn pd_test() {
        assert!(positive_definite(&m(&[&[2, 1], &[1, 2]])));
        assert!(!positive_definite(&m(&[&[1, 2], &[2, 1]])));
    }
}
