//! Classical root systems A/B/C/D with exact weight arithmetic.
//!
//! Weights live in the orthonormal e-basis of the dual Cartan subalgebra:
//! the rank-r A system is realized in r+1 coordinates (trace-free), the
//! rank-n B/C/D systems in n coordinates. The invariant pairing is the
//! Euclidean one on e-coordinates.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::intlat::IntMatrix;
use crate::rat::{int, rat, rat_to_int, solve_exact, Int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl Series {
    pub fn min_rank(self) -> usize {
        match self {
            Series::A => 1,
            Series::B | Series::C => 2,
            Series::D => 3,
        }
    }

    /// Number of e-coordinates (diagonal slots) the rank-r system lives in.
    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            Series::A => rank + 1,
            _ => rank,
        }
    }

    pub fn from_char(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            _ => None,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
        };
        write!(f, "{}", c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    RankOutOfBounds { series: Series, rank: usize },
    IndexOutOfRange { index: usize, rank: usize },
    NotInRootSpan,
    WrongSeries { expected: Series, got: Series },
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::RankOutOfBounds { series, rank } => {
                write!(f, "rank {} out of bounds for series {}", rank, series)
            }
            RootError::IndexOutOfRange { index, rank } => {
                write!(f, "index {} out of range 1..={}", index, rank)
            }
            RootError::NotInRootSpan => write!(f, "weight lies outside the simple-root span"),
            RootError::WrongSeries { expected, got } => {
                write!(f, "expected series {}, got {}", expected, got)
            }
            RootError::DimensionMismatch { expected, got } => {
                write!(f, "weight has {} coordinates, expected {}", got, expected)
            }
        }
    }
}

/// Exact rational vector in the orthonormal e-basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight { coords: vec![Rat::zero(); dim] }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&x| rat(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// Euclidean pairing on e-coordinates (the Killing form up to scale).
    pub fn dot(&self, other: &Weight) -> Rat {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight { coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Integer e-coordinates, if all coordinates are integral.
    pub fn to_int_coords(&self) -> Option<Vec<Int>> {
        self.coords.iter().map(rat_to_int).collect()
    }
}

/// Integer Cartan matrix `C_ij = 2 (α_i, α_j) / (α_j, α_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: IntMatrix,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.entries.rows()
    }

    pub fn det(&self) -> Int {
        self.entries.det()
    }

    /// Nodes adjacent in the Dynkin graph: nonzero off-diagonal entry.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && !self.entries[(i, j)].is_zero()
    }
}

fn check_rank(series: Series, rank: usize) -> Result<(), RootError> {
    if rank < series.min_rank() {
        Err(RootError::RankOutOfBounds { series, rank })
    } else {
        Ok(())
    }
}

/// e-basis vector e_i (0-based) in `dim` coordinates.
fn e(dim: usize, i: usize) -> Weight {
    let mut w = Weight::zero(dim);
    w.coords[i] = Rat::one();
    w
}

/// The standard simple system in e-coordinates.
///
/// A_r: e_i − e_{i+1}; B_n: e_i − e_{i+1}, e_n; C_n: e_i − e_{i+1}, 2e_n;
/// D_n: e_i − e_{i+1}, e_{n−1} + e_n.
pub fn simple_roots(series: Series, rank: usize) -> Result<Vec<Weight>, RootError> {
    check_rank(series, rank)?;
    let dim = series.ambient_dim(rank);
    let mut roots = Vec::with_capacity(rank);
    match series {
        Series::A => {
            for i in 0..rank {
                roots.push(e(dim, i).sub(&e(dim, i + 1)));
            }
        }
        Series::B => {
            for i in 0..rank - 1 {
                roots.push(e(dim, i).sub(&e(dim, i + 1)));
            }
            roots.push(e(dim, rank - 1));
        }
        Series::C => {
            for i in 0..rank - 1 {
                roots.push(e(dim, i).sub(&e(dim, i + 1)));
            }
            roots.push(e(dim, rank - 1).scale(&rat(2)));
        }
        Series::D => {
            for i in 0..rank - 1 {
                roots.push(e(dim, i).sub(&e(dim, i + 1)));
            }
            roots.push(e(dim, rank - 2).add(&e(dim, rank - 1)));
        }
    }
    Ok(roots)
}

/// All positive roots in e-coordinates.
///
/// Counts: A_r → r(r+1)/2, B_n and C_n → n², D_n → n(n−1).
pub fn positive_roots(series: Series, rank: usize) -> Result<Vec<Weight>, RootError> {
    check_rank(series, rank)?;
    let dim = series.ambient_dim(rank);
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            roots.push(e(dim, i).sub(&e(dim, j)));
        }
    }
    match series {
        Series::A => {}
        Series::B => {
            for i in 0..dim {
                for j in i + 1..dim {
                    roots.push(e(dim, i).add(&e(dim, j)));
                }
            }
            for i in 0..dim {
                roots.push(e(dim, i));
            }
        }
        Series::C => {
            for i in 0..dim {
                for j in i + 1..dim {
                    roots.push(e(dim, i).add(&e(dim, j)));
                }
            }
            for i in 0..dim {
                roots.push(e(dim, i).scale(&rat(2)));
            }
        }
        Series::D => {
            for i in 0..dim {
                for j in i + 1..dim {
                    roots.push(e(dim, i).add(&e(dim, j)));
                }
            }
        }
    }
    Ok(roots)
}

/// Coordinate-wise sum of the positive roots.
///
/// Closed forms: A_{n−1} in n coordinates has k-th coordinate n−2k+1;
/// B_n: 2(n−k)+1; C_n: 2(n−k+1); D_n: 2(n−k).
pub fn sum_positive_roots(series: Series, rank: usize) -> Result<Weight, RootError> {
    check_rank(series, rank)?;
    let dim = series.ambient_dim(rank);
    let mut sum = Weight::zero(dim);
    for r in positive_roots(series, rank)? {
        sum = sum.add(&r);
    }
    Ok(sum)
}

/// Exact coefficients c with `w = Σ c_i α_i`; errors when w is outside the
/// simple-root span.
pub fn simple_root_coefficients(
    w: &Weight,
    series: Series,
    rank: usize,
) -> Result<Vec<Rat>, RootError> {
    check_rank(series, rank)?;
    let dim = series.ambient_dim(rank);
    if w.dim() != dim {
        return Err(RootError::DimensionMismatch { expected: dim, got: w.dim() });
    }
    let simples = simple_roots(series, rank)?;
    // Rows are e-coordinates, columns are the simple roots.
    let a: Vec<Vec<Rat>> = (0..dim)
        .map(|coord| simples.iter().map(|s| s.coords[coord].clone()).collect())
        .collect();
    solve_exact(&a, &w.coords).ok_or(RootError::NotInRootSpan)
}

/// Standard Cartan matrix, computed from the simple roots by the Euclidean
/// pairing: `C_ij = 2 (α_i, α_j) / (α_j, α_j)`.
pub fn cartan_matrix(series: Series, rank: usize) -> Result<CartanMatrix, RootError> {
    let simples = simple_roots(series, rank)?;
    let mut rows = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut row = Vec::with_capacity(rank);
        for j in 0..rank {
            let num = simples[i].dot(&simples[j]) * rat(2);
            let den = simples[j].dot(&simples[j]);
            let q = num / den;
            row.push(rat_to_int(&q).expect("Cartan entries are integers"));
        }
        rows.push(row);
    }
    Ok(CartanMatrix { entries: IntMatrix::from_rows(rows) })
}

/// Fundamental weight for the k-th node (1-based): the unique weight in the
/// simple-root span with `2 (w, α_j) / (α_j, α_j) = δ_kj`.
///
/// For the A series this is the closed form e_1 + … + e_k − (k/n) Σ e_i;
/// for B/C/D it is solved from the Cartan matrix.
pub fn fundamental_weight(series: Series, rank: usize, k: usize) -> Result<Weight, RootError> {
    check_rank(series, rank)?;
    if k == 0 || k > rank {
        return Err(RootError::IndexOutOfRange { index: k, rank });
    }
    if series == Series::A {
        let n = rank + 1;
        let frac = Rat::new(int(k as i64), int(n as i64));
        let mut w = Weight::zero(n);
        for i in 0..n {
            let lead = if i < k { Rat::one() } else { Rat::zero() };
            w.coords[i] = lead - &frac;
        }
        return Ok(w);
    }
    // Row k of the inverse Cartan matrix gives the α-coordinates of w_k.
    let cm = cartan_matrix(series, rank)?;
    let ct: Vec<Vec<Rat>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| Rat::from_integer(cm.entries[(j, i)].clone()))
                .collect()
        })
        .collect();
    let mut rhs = vec![Rat::zero(); rank];
    rhs[k - 1] = Rat::one();
    let coeffs = solve_exact(&ct, &rhs).expect("Cartan matrix is invertible");
    let simples = simple_roots(series, rank)?;
    let mut w = Weight::zero(series.ambient_dim(rank));
    for (c, s) in coeffs.iter().zip(&simples) {
        w = w.add(&s.scale(c));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(coords: &[i64]) -> Weight {
        Weight::from_i64(coords)
    }

    #[test]
    fn simple_roots_smallest_a() {
        assert_eq!(simple_roots(Series::A, 1).unwrap(), vec![w(&[1, -1])]);
    }

    #[test]
    fn simple_roots_c7() {
        let roots = simple_roots(Series::C, 7).unwrap();
        assert_eq!(roots.len(), 7);
        assert_eq!(roots[0], w(&[1, -1, 0, 0, 0, 0, 0]));
        assert_eq!(roots[5], w(&[0, 0, 0, 0, 0, 1, -1]));
        assert_eq!(roots[6], w(&[0, 0, 0, 0, 0, 0, 2]));
    }

    #[test]
    fn simple_roots_d3() {
        assert_eq!(
            simple_roots(Series::D, 3).unwrap(),
            vec![w(&[1, -1, 0]), w(&[0, 1, -1]), w(&[0, 1, 1])]
        );
    }

    #[test]
    fn rank_bounds() {
        assert!(simple_roots(Series::A, 0).is_err());
        assert!(simple_roots(Series::B, 1).is_err());
        assert!(simple_roots(Series::C, 1).is_err());
        assert!(simple_roots(Series::D, 2).is_err());
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(positive_roots(Series::A, 2).unwrap().len(), 3);
        assert_eq!(positive_roots(Series::C, 2).unwrap().len(), 4);
        assert_eq!(positive_roots(Series::C, 7).unwrap().len(), 49);
        assert_eq!(positive_roots(Series::B, 3).unwrap().len(), 9);
        assert_eq!(positive_roots(Series::D, 4).unwrap().len(), 12);
    }

    #[test]
    fn positive_roots_a2_set() {
        let roots = positive_roots(Series::A, 2).unwrap();
        assert!(roots.contains(&w(&[1, -1, 0])));
        assert!(roots.contains(&w(&[0, 1, -1])));
        assert!(roots.contains(&w(&[1, 0, -1])));
    }

    #[test]
    fn sum_positive_roots_a3() {
        assert_eq!(sum_positive_roots(Series::A, 3).unwrap(), w(&[3, 1, -1, -3]));
    }

    #[test]
    fn sum_positive_roots_c7_both_bases() {
        let sum = sum_positive_roots(Series::C, 7).unwrap();
        assert_eq!(sum, w(&[14, 12, 10, 8, 6, 4, 2]));
        let coeffs = simple_root_coefficients(&sum, Series::C, 7).unwrap();
        let expected: Vec<Rat> = [14, 26, 36, 44, 50, 54, 28].iter().map(|&x| rat(x)).collect();
        assert_eq!(coeffs, expected);
    }

    #[test]
    fn sum_c2_coefficients() {
        let sum = sum_positive_roots(Series::C, 2).unwrap();
        let coeffs = simple_root_coefficients(&sum, Series::C, 2).unwrap();
        assert_eq!(coeffs, vec![rat(4), rat(3)]);
    }

    #[test]
    fn coefficients_examples() {
        // e1 − e3 = α1 + α2 in A2.
        let coeffs = simple_root_coefficients(&w(&[1, 0, -1]), Series::A, 2).unwrap();
        assert_eq!(coeffs, vec![rat(1), rat(1)]);

        // The difference-diagram row of the symplectic worked example.
        let sigma = w(&[14, 11, 11, 8, 6, 0, 0]);
        let coeffs = simple_root_coefficients(&sigma, Series::C, 7).unwrap();
        let expected: Vec<Rat> = [14, 25, 36, 44, 50, 50, 25].iter().map(|&x| rat(x)).collect();
        assert_eq!(coeffs, expected);

        // Zero weight has zero coefficients.
        let coeffs = simple_root_coefficients(&Weight::zero(5), Series::C, 5).unwrap();
        assert!(coeffs.iter().all(Rat::is_zero));

        // A weight with nonzero coordinate sum is outside the A-span.
        assert_eq!(
            simple_root_coefficients(&w(&[1, 0, 0]), Series::A, 2),
            Err(RootError::NotInRootSpan)
        );
    }

    #[test]
    fn coefficients_invert_combinations() {
        // simple_root_coefficients ∘ (combination of simple roots) = identity.
        for (series, rank) in [(Series::A, 4), (Series::B, 4), (Series::C, 3), (Series::D, 4)] {
            let simples = simple_roots(series, rank).unwrap();
            let coeffs: Vec<Rat> = (0..rank).map(|i| ratio(2 * i as i64 + 1, 3)).collect();
            let mut v = Weight::zero(series.ambient_dim(rank));
            for (c, s) in coeffs.iter().zip(&simples) {
                v = v.add(&s.scale(c));
            }
            assert_eq!(simple_root_coefficients(&v, series, rank).unwrap(), coeffs);
        }
    }

    use crate::rat::ratio;

    #[test]
    fn fundamental_weights_a10() {
        let w1 = fundamental_weight(Series::A, 10, 1).unwrap();
        let mut expected = Weight::zero(11);
        for i in 0..11 {
            expected.coords[i] = if i == 0 { rat(1) - ratio(1, 11) } else { -ratio(1, 11) };
        }
        assert_eq!(w1, expected);

        let w6 = fundamental_weight(Series::A, 10, 6).unwrap();
        for i in 0..11 {
            let lead = if i < 6 { rat(1) } else { rat(0) };
            assert_eq!(w6.coords[i], lead - ratio(6, 11));
        }
    }

    #[test]
    fn fundamental_weights_pairing() {
        // Defining relation 2 (w_k, α_j) / (α_j, α_j) = δ_kj, all series.
        for (series, rank) in [(Series::A, 5), (Series::B, 4), (Series::C, 4), (Series::D, 4)] {
            let simples = simple_roots(series, rank).unwrap();
            for k in 1..=rank {
                let w = fundamental_weight(series, rank, k).unwrap();
                for (j, alpha) in simples.iter().enumerate() {
                    let pairing = w.dot(alpha) * rat(2) / alpha.dot(alpha);
                    let expected = if j + 1 == k { rat(1) } else { rat(0) };
                    assert_eq!(pairing, expected, "series {} rank {} k {} j {}", series, rank, k, j);
                }
            }
        }
    }

    #[test]
    fn fundamental_weight_index_bounds() {
        assert!(fundamental_weight(Series::A, 3, 0).is_err());
        assert!(fundamental_weight(Series::A, 3, 4).is_err());
    }

    #[test]
    fn cartan_matrices() {
        let a2 = cartan_matrix(Series::A, 2).unwrap();
        assert_eq!(a2.entries, IntMatrix::from_i64(&[&[2, -1], &[-1, 2]]));
        assert_eq!(cartan_matrix(Series::C, 2).unwrap().det(), int(2));
        for n in 1..=8 {
            assert_eq!(cartan_matrix(Series::A, n).unwrap().det(), int(n as i64 + 1));
        }
    }

    #[test]
    fn c2_fundamental_weights() {
        assert_eq!(fundamental_weight(Series::C, 2, 1).unwrap(), w(&[1, 0]));
        assert_eq!(fundamental_weight(Series::C, 2, 2).unwrap(), w(&[1, 1]));
    }
}
