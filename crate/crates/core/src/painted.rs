//! Painted Dynkin diagrams, Koszul forms of flag manifolds, the vanishing
//! first Chern class criterion, and enumeration of torus embeddings.
//!
//! A painting blackens the nodes spanning Π′; the white nodes decompose into
//! classical sub-diagrams carrying the semisimple part of the isotropy. The
//! Koszul form is the difference of the sum of positive roots of the full
//! system and the sums contributed by the white components; c₁ vanishes on a
//! torus direction iff it annihilates the Koszul row of the condition matrix.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::intlat::{self, IntMatrix};
use crate::rat::{int, rat_to_int, Int, Rat};
use crate::rootsys::{
    self, cartan_matrix, fundamental_weight, simple_root_coefficients, simple_roots,
    sum_positive_roots, Series, Weight,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PaintError {
    Root(rootsys::RootError),
    BadDiagram(String),
    BadBlocks(String),
    InconsistentBlocks(String),
    WrongSeries { expected: Series, got: Series },
    TraceViolated { vector: Vec<Int> },
    NotZeroSum,
    OddRank { n: usize },
    TorusDimTooLarge { requested: usize, kernel_rank: usize },
}

impl fmt::Display for PaintError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaintError::Root(e) => write!(f, "{}", e),
            PaintError::BadDiagram(s) => write!(f, "bad diagram: {}", s),
            PaintError::BadBlocks(s) => write!(f, "bad block structure: {}", s),
            PaintError::InconsistentBlocks(s) => {
                write!(f, "blocks inconsistent with the painting: {}", s)
            }
            PaintError::WrongSeries { expected, got } => {
                write!(f, "operation requires series {}, got {}", expected, got)
            }
            PaintError::TraceViolated { vector } => {
                let v: Vec<String> = vector.iter().map(|x| x.to_string()).collect();
                write!(f, "vector ({}) violates the trace condition", v.join(","))
            }
            PaintError::NotZeroSum => write!(f, "weights must sum to zero"),
            PaintError::OddRank { n } => write!(f, "n = {} must be even", n),
            PaintError::TorusDimTooLarge { requested, kernel_rank } => write!(
                f,
                "requested torus dimension {} exceeds the kernel rank {}",
                requested, kernel_rank
            ),
        }
    }
}

impl From<rootsys::RootError> for PaintError {
    fn from(e: rootsys::RootError) -> Self {
        PaintError::Root(e)
    }
}

/// Dynkin diagram with a set of blackened nodes (1-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaintedDiagram {
    pub series: Series,
    pub rank: usize,
    pub black: BTreeSet<usize>,
}

impl PaintedDiagram {
    pub fn new(series: Series, rank: usize, black: &[usize]) -> Result<Self, PaintError> {
        if rank < series.min_rank() {
            return Err(rootsys::RootError::RankOutOfBounds { series, rank }.into());
        }
        let set: BTreeSet<usize> = black.iter().copied().collect();
        for &i in &set {
            if i == 0 || i > rank {
                return Err(PaintError::BadDiagram(format!(
                    "black node {} out of range 1..={}",
                    i, rank
                )));
            }
        }
        Ok(PaintedDiagram { series, rank, black: set })
    }

    pub fn is_black(&self, node: usize) -> bool {
        self.black.contains(&node)
    }

    pub fn white_nodes(&self) -> Vec<usize> {
        (1..=self.rank).filter(|n| !self.is_black(*n)).collect()
    }
}

impl FromStr for PaintedDiagram {
    type Err = PaintError;

    /// Text format `<series><rank>:<comma-separated black indices>`,
    /// e.g. `A10:1,2,6,9`. An empty index list paints nothing.
    fn from_str(s: &str) -> Result<Self, PaintError> {
        let s = s.trim();
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h, t),
            None => (s, ""),
        };
        let mut chars = head.chars();
        let series = chars
            .next()
            .and_then(Series::from_char)
            .ok_or_else(|| PaintError::BadDiagram(format!("unknown series in '{}'", s)))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| PaintError::BadDiagram(format!("bad rank in '{}'", s)))?;
        let mut black = Vec::new();
        for tok in tail.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok
                .parse()
                .map_err(|_| PaintError::BadDiagram(format!("bad node index '{}'", tok)))?;
            black.push(i);
        }
        PaintedDiagram::new(series, rank, &black)
    }
}

impl fmt::Display for PaintedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:", self.series, self.rank)?;
        for (i, n) in self.black.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", n)?;
        }
        Ok(())
    }
}

/// A connected white sub-diagram, classified as a classical series, with the
/// map from its own node indices to ambient node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteComponent {
    pub series: Series,
    pub rank: usize,
    /// nodes[i] is the ambient (1-based) node of the component's node i+1.
    pub nodes: Vec<usize>,
}

/// Connected components of the white subgraph.
///
/// A component containing the end node of a B/C diagram (with at least two
/// nodes) inherits that series; a component of a D diagram containing the
/// fork is a D component; everything else is an A chain. A single white end
/// node of B/C is an A₁ — its root data inside the ambient system is the
/// same either way.
pub fn white_components(d: &PaintedDiagram) -> Vec<WhiteComponent> {
    let cm = cartan_matrix(d.series, d.rank).expect("diagram validated at construction");
    let whites = d.white_nodes();
    let white_set: BTreeSet<usize> = whites.iter().copied().collect();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut comps = Vec::new();
    for &start in &whites {
        if seen.contains(&start) {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = BTreeSet::new();
        while let Some(n) = stack.pop() {
            if !comp.insert(n) {
                continue;
            }
            seen.insert(n);
            for m in 1..=d.rank {
                if m != n && white_set.contains(&m) && !comp.contains(&m) && cm.adjacent(n - 1, m - 1)
                {
                    stack.push(m);
                }
            }
        }
        let nodes: Vec<usize> = comp.into_iter().collect();
        let size = nodes.len();
        let series = match d.series {
            Series::B | Series::C if size >= 2 && nodes.contains(&d.rank) => d.series,
            Series::D if nodes.contains(&d.rank) && nodes.contains(&(d.rank - 1)) => Series::D,
            _ => Series::A,
        };
        comps.push(WhiteComponent { series, rank: size, nodes });
    }
    comps.sort_by_key(|c| c.nodes[0]);
    comps
}

/// The Koszul form σ in e-coordinates: the simple-root coefficient row of the
/// full sum of positive roots minus the rows contributed by each white
/// component, converted back to the e-basis.
pub fn koszul_form(d: &PaintedDiagram) -> Weight {
    let coeffs = koszul_simple_root_coefficients(d);
    let simples = simple_roots(d.series, d.rank).expect("diagram validated");
    let mut sigma = Weight::zero(d.series.ambient_dim(d.rank));
    for (c, alpha) in coeffs.iter().zip(&simples) {
        sigma = sigma.add(&alpha.scale(&Rat::from_integer(c.clone())));
    }
    sigma
}

/// σ as the integer coefficient row over the simple roots (the diagram
/// difference row).
pub fn koszul_simple_root_coefficients(d: &PaintedDiagram) -> Vec<Int> {
    let full = sum_positive_roots(d.series, d.rank).expect("diagram validated");
    let mut coeffs: Vec<Int> = simple_root_coefficients(&full, d.series, d.rank)
        .expect("root sum lies in the root lattice")
        .iter()
        .map(|c| rat_to_int(c).expect("integral coefficients"))
        .collect();
    for comp in white_components(d) {
        let sub_sum = sum_positive_roots(comp.series, comp.rank).expect("component rank valid");
        let sub = simple_root_coefficients(&sub_sum, comp.series, comp.rank)
            .expect("component root sum in lattice");
        for (i, &node) in comp.nodes.iter().enumerate() {
            let c = rat_to_int(&sub[i]).expect("integral coefficients");
            coeffs[node - 1] -= c;
        }
    }
    coeffs
}

/// A-series alternative: σ = Σ over black nodes of (2 + bᵢ)·(fundamental
/// weight), where bᵢ counts white nodes reachable from black node i through
/// all-white paths.
pub fn koszul_form_a_chain(d: &PaintedDiagram) -> Result<Weight, PaintError> {
    if d.series != Series::A {
        return Err(PaintError::WrongSeries { expected: Series::A, got: d.series });
    }
    let comps = white_components(d);
    let mut sigma = Weight::zero(d.rank + 1);
    for &i in &d.black {
        let mut b = 0usize;
        for comp in &comps {
            // An A-chain component touches black node i iff it contains i−1 or i+1.
            if comp.nodes.contains(&(i - 1)) || comp.nodes.contains(&(i + 1)) {
                b += comp.rank;
            }
        }
        let fw = fundamental_weight(Series::A, d.rank, i)?;
        sigma = sigma.add(&fw.scale(&Rat::from_integer(int(2 + b as i64))));
    }
    Ok(sigma)
}

/// Diagonal block pattern of the isotropy embedding. Sizes are counted in
/// e-coordinate slots: SU(n) covers n slots, Sp(l) covers l, SO(m) covers
/// ⌊m/2⌋, a scalar block covers one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Scalar,
    SpecialUnitary(usize),
    Orthogonal(usize),
    Symplectic(usize),
}

impl BlockKind {
    pub fn slots(self) -> usize {
        match self {
            BlockKind::Scalar => 1,
            BlockKind::SpecialUnitary(n) => n,
            BlockKind::Orthogonal(m) => m / 2,
            BlockKind::Symplectic(l) => l,
        }
    }

    /// Scalar and special-unitary blocks carry a free torus variable;
    /// orthogonal and symplectic blocks have no central torus direction.
    pub fn has_variable(self) -> bool {
        matches!(self, BlockKind::Scalar | BlockKind::SpecialUnitary(_))
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockKind::Scalar => write!(f, "1"),
            BlockKind::SpecialUnitary(n) => write!(f, "su{}", n),
            BlockKind::Orthogonal(m) => write!(f, "so{}", m),
            BlockKind::Symplectic(l) => write!(f, "sp{}", l),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub blocks: Vec<BlockKind>,
}

impl BlockStructure {
    pub fn total_slots(&self) -> usize {
        self.blocks.iter().map(|b| b.slots()).sum()
    }

    pub fn variable_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.blocks[i].has_variable()).collect()
    }
}

impl FromStr for BlockStructure {
    type Err = PaintError;

    /// Text format `blocks=1,1,su4,su3,su2` (the `blocks=` prefix is
    /// optional). Tokens: `1` scalar, `su<n>`, `sp<l>`, `so<m>`.
    fn from_str(s: &str) -> Result<Self, PaintError> {
        let body = s.trim().strip_prefix("blocks=").unwrap_or(s.trim());
        let mut blocks = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let kind = if tok == "1" {
                BlockKind::Scalar
            } else if let Some(n) = tok.strip_prefix("su") {
                let n: usize = n
                    .parse()
                    .map_err(|_| PaintError::BadBlocks(format!("bad token '{}'", tok)))?;
                if n < 2 {
                    return Err(PaintError::BadBlocks(format!("su{} is not a block", n)));
                }
                BlockKind::SpecialUnitary(n)
            } else if let Some(m) = tok.strip_prefix("so") {
                let m: usize = m
                    .parse()
                    .map_err(|_| PaintError::BadBlocks(format!("bad token '{}'", tok)))?;
                if m < 3 {
                    return Err(PaintError::BadBlocks(format!("so{} is not a block", m)));
                }
                BlockKind::Orthogonal(m)
            } else if let Some(l) = tok.strip_prefix("sp") {
                let l: usize = l
                    .parse()
                    .map_err(|_| PaintError::BadBlocks(format!("bad token '{}'", tok)))?;
                if l < 1 {
                    return Err(PaintError::BadBlocks(format!("sp{} is not a block", l)));
                }
                BlockKind::Symplectic(l)
            } else {
                return Err(PaintError::BadBlocks(format!(
                    "unknown token '{}' (scalar blocks must be written as 1)",
                    tok
                )));
            };
            blocks.push(kind);
        }
        if blocks.is_empty() {
            return Err(PaintError::BadBlocks("empty block list".into()));
        }
        Ok(BlockStructure { blocks })
    }
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

/// ℤ-basis for the torus directions of an embedding with vanishing first
/// Chern class, together with the ambient block pattern.
#[derive(Clone, Debug)]
pub struct EmbeddingLattice {
    pub basis: Vec<Vec<Int>>,
    pub pattern: BlockStructure,
    pub requested_dim: usize,
}

impl EmbeddingLattice {
    pub fn kernel_rank(&self) -> usize {
        self.basis.len()
    }
}

/// Slot ranges (1-based, inclusive) of each white component: an A component
/// of rank r covers r+1 slots starting at its first node; B/C/D components
/// cover r slots.
fn component_slot_ranges(comps: &[WhiteComponent]) -> Vec<(usize, usize)> {
    comps
        .iter()
        .map(|c| {
            let start = c.nodes[0];
            let len = match c.series {
                Series::A => c.rank + 1,
                _ => c.rank,
            };
            (start, start + len - 1)
        })
        .collect()
}

fn validate_blocks(
    d: &PaintedDiagram,
    blocks: &BlockStructure,
) -> Result<Vec<(usize, usize)>, PaintError> {
    let dim = d.series.ambient_dim(d.rank);
    if blocks.total_slots() != dim {
        return Err(PaintError::InconsistentBlocks(format!(
            "blocks cover {} slots, the diagram has {}",
            blocks.total_slots(),
            dim
        )));
    }
    let comps = white_components(d);
    let ranges = component_slot_ranges(&comps);

    let mut slot = 1usize;
    let mut comp_idx = 0usize;
    let mut spans = Vec::with_capacity(blocks.blocks.len());
    for kind in &blocks.blocks {
        let span = (slot, slot + kind.slots() - 1);
        match kind {
            BlockKind::Scalar => {
                if comp_idx < ranges.len() && ranges[comp_idx].0 == slot {
                    return Err(PaintError::InconsistentBlocks(format!(
                        "slot {} belongs to a white component, not a scalar block",
                        slot
                    )));
                }
            }
            _ => {
                if comp_idx >= ranges.len() || ranges[comp_idx] != span {
                    return Err(PaintError::InconsistentBlocks(format!(
                        "block {} at slots {}..={} does not match a white component",
                        kind, span.0, span.1
                    )));
                }
                let comp = &comps[comp_idx];
                let ok = match (kind, comp.series) {
                    (BlockKind::SpecialUnitary(n), Series::A) => *n == comp.rank + 1,
                    (BlockKind::Symplectic(l), Series::C) => *l == comp.rank,
                    (BlockKind::Orthogonal(m), Series::B) => *m == 2 * comp.rank + 1,
                    (BlockKind::Orthogonal(m), Series::D) => *m == 2 * comp.rank,
                    _ => false,
                };
                if !ok {
                    return Err(PaintError::InconsistentBlocks(format!(
                        "block {} does not match the {}{} white component at nodes {:?}",
                        kind, comp.series, comp.rank, comp.nodes
                    )));
                }
                comp_idx += 1;
            }
        }
        spans.push(span);
        slot += kind.slots();
    }
    if comp_idx != ranges.len() {
        return Err(PaintError::InconsistentBlocks(
            "not every white component is covered by a block".into(),
        ));
    }
    Ok(spans)
}

/// The linear conditions a torus direction must satisfy, as integer rows over
/// the free variables (one per scalar or special-unitary block, in order):
/// the trace row (block sizes; present only in the A series) and the Koszul
/// row (sum of σ's e-coordinates over each block's slots).
pub fn c1_condition_matrix(
    d: &PaintedDiagram,
    blocks: &BlockStructure,
) -> Result<IntMatrix, PaintError> {
    let spans = validate_blocks(d, blocks)?;
    let sigma = koszul_form(d);
    let sigma_int: Vec<Int> = sigma
        .coords
        .iter()
        .map(|c| rat_to_int(c).expect("Koszul form has integral e-coordinates"))
        .collect();

    let vars = blocks.variable_blocks();
    let mut rows: Vec<Vec<Int>> = Vec::new();
    if d.series == Series::A {
        rows.push(vars.iter().map(|&b| int(blocks.blocks[b].slots() as i64)).collect());
    }
    let koszul_row: Vec<Int> = vars
        .iter()
        .map(|&b| {
            let (lo, hi) = spans[b];
            (lo..=hi).map(|s| sigma_int[s - 1].clone()).sum()
        })
        .collect();
    rows.push(koszul_row);
    Ok(IntMatrix::from_rows(rows))
}

/// Theorem-2 style check: c₁ of the embedding vanishes iff every basis vector
/// of 𝔞 annihilates the Koszul row. Vectors violating the trace condition (A
/// series) are rejected as invalid 𝔞 directions.
pub fn c1_vanishes(
    d: &PaintedDiagram,
    blocks: &BlockStructure,
    a_basis: &[Vec<Int>],
) -> Result<bool, PaintError> {
    let m = c1_condition_matrix(d, blocks)?;
    let nvars = m.cols();
    let has_trace = d.series == Series::A;
    for v in a_basis {
        if v.len() != nvars {
            return Err(PaintError::InconsistentBlocks(format!(
                "vector has {} entries, expected {}",
                v.len(),
                nvars
            )));
        }
        if has_trace {
            let t: Int = (0..nvars).map(|j| &m[(0, j)] * &v[j]).sum();
            if !t.is_zero() {
                return Err(PaintError::TraceViolated { vector: v.clone() });
            }
        }
    }
    let krow = if has_trace { 1 } else { 0 };
    for v in a_basis {
        let s: Int = (0..nvars).map(|j| &m[(krow, j)] * &v[j]).sum();
        if !s.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hermite-reduced ℤ-basis of the full integer kernel of the condition
/// matrix. Every basis vector is primitive. Errors when the requested torus
/// dimension exceeds the kernel rank.
pub fn enumerate_embeddings(
    d: &PaintedDiagram,
    blocks: &BlockStructure,
    torus_dim: usize,
) -> Result<EmbeddingLattice, PaintError> {
    let m = c1_condition_matrix(d, blocks)?;
    let mut basis = intlat::integer_kernel(&m);
    for v in basis.iter_mut() {
        let g = intlat::gcd_all(v);
        if !g.is_zero() && !g.is_one() {
            for x in v.iter_mut() {
                *x = &*x / &g;
            }
        }
    }
    if torus_dim > basis.len() {
        return Err(PaintError::TorusDimTooLarge { requested: torus_dim, kernel_rank: basis.len() });
    }
    Ok(EmbeddingLattice { basis, pattern: blocks.clone(), requested_dim: torus_dim })
}

/// Diagonal circle embedding check for SU(n)/U(1), n even: the weights must
/// sum to zero and annihilate Σ (n−2k+1)θ_k. Under the zero-sum hypothesis
/// this equals 2 Σ_{k<n} (n−k)θ_k, which is asserted.
pub fn su_n_u1_check(theta: &[Int]) -> Result<bool, PaintError> {
    let n = theta.len();
    if n == 0 || n % 2 != 0 {
        return Err(PaintError::OddRank { n });
    }
    let total: Int = theta.iter().sum();
    if !total.is_zero() {
        return Err(PaintError::NotZeroSum);
    }
    let lhs: Int = theta
        .iter()
        .enumerate()
        .map(|(k0, t)| int(n as i64 - 2 * (k0 as i64 + 1) + 1) * t)
        .sum();
    let rhs: Int = theta[..n - 1]
        .iter()
        .enumerate()
        .map(|(k0, t)| int(2 * (n as i64 - (k0 as i64 + 1))) * t)
        .sum();
    assert_eq!(lhs, rhs, "zero-sum identity must hold");
    Ok(lhs.is_zero())
}
