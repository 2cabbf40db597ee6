//! Laplacians, divisors and the chip-firing group `Pic⁰(Γ) = Div⁰(Γ) / im Δ(Γ)`.
//!
//! Group computations go through a [`Jacobian`], which holds the Smith
//! normal form `s = u · L' · v` of a reduced Laplacian `L'` (the Laplacian
//! with one vertex's row and column deleted). Dropping that vertex's
//! coefficient identifies `Div⁰` with `ℤ^{k−1}` and `im Δ` with the column
//! lattice of `L'`, so a degree-zero divisor `d` maps to coordinates `u · d'`
//! in `⊕ ℤ/sᵢ`. Principality, class orders, quotients and subgroups are all
//! read off from those coordinates.

use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::CriticalGroup;
use crate::linalg::{char_poly, determinant, smith_normal_form, IntMatrix, IntPoly, SnfResult};

/// Integer vector indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Divisor {
    coefficients: Vec<BigInt>,
}

impl Divisor {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        Divisor { coefficients }
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| c.into()).collect())
    }

    pub fn zero(graph_size: usize) -> Self {
        Self::new(vec![BigInt::zero(); graph_size])
    }

    /// The single vertex `v`.
    pub fn vertex(graph_size: usize, v: usize) -> Self {
        let mut d = Self::zero(graph_size);
        d.coefficients[v] = BigInt::one();
        d
    }

    /// `a - b`; the zero divisor when `a == b`.
    pub fn difference(graph_size: usize, a: usize, b: usize) -> Self {
        let mut d = Self::zero(graph_size);
        d.coefficients[a] += 1;
        d.coefficients[b] -= 1;
        d
    }

    pub fn graph_size(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    pub fn scaled(&self, factor: &BigInt) -> Divisor {
        Self::new(self.coefficients.iter().map(|c| c * factor).collect())
    }
}

impl Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.graph_size(), rhs.graph_size(), "divisor size mismatch");
        Divisor::new(
            self.coefficients
                .iter()
                .zip(&rhs.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Send one chip along every incident edge.
    Lend,
    /// Take one chip along every incident edge.
    Borrow,
}

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let k = g.vertex_count();
    IntMatrix::from_fn(k, k, |i, j| {
        if i == j {
            BigInt::from(g.degree(i))
        } else if g.has_edge(i, j) {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

pub fn reduced_laplacian(g: &Graph, remove: usize) -> Result<IntMatrix> {
    g.require_vertex(remove)?;
    g.require_connected()?;
    Ok(laplacian(g).minor(remove, remove))
}

pub fn critical_group(g: &Graph) -> Result<CriticalGroup> {
    Ok(Jacobian::new(g)?.group().clone())
}

/// Determinant of the reduced Laplacian (matrix-tree theorem).
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt> {
    determinant(&reduced_laplacian(g, 0)?)
}

/// Characteristic polynomial of the Laplacian acting on `Div⁰ ⊗ ℚ`.
///
/// This is `det(xI − L) / x`, monic of degree `k − 1`; the constant
/// polynomial 1 for a single vertex. Requires a connected graph.
pub fn char_poly_restricted(g: &Graph) -> Result<IntPoly> {
    g.require_connected()?;
    Ok(char_poly_degree_zero(g))
}

/// As [`char_poly_restricted`] without the connectivity requirement.
///
/// The all-ones vector spans a Laplacian eigenline with eigenvalue 0 and its
/// orthogonal complement is `Div⁰ ⊗ ℚ`, so one factor of `x` splits off for
/// any graph. For a graph with `c` components the result keeps `x^{c−1}`.
pub fn char_poly_degree_zero(g: &Graph) -> IntPoly {
    char_poly(&laplacian(g))
        .and_then(|p| p.divide_by_x())
        .expect("Laplacian is square and singular")
}

/// One chip-firing move at `v`.
pub fn fire_vertex(g: &Graph, d: &Divisor, v: usize, direction: Direction) -> Result<Divisor> {
    g.require_vertex(v)?;
    check_size(g, d)?;
    let mut out = d.clone();
    let delta = match direction {
        Direction::Lend => -BigInt::one(),
        Direction::Borrow => BigInt::one(),
    };
    // column v of the Laplacian: deg(v) at v, -1 at each neighbour
    out.coefficients[v] += &delta * g.degree(v);
    for w in g.neighbors(v) {
        out.coefficients[w] -= &delta;
    }
    Ok(out)
}

pub fn is_principal(g: &Graph, d: &Divisor) -> Result<bool> {
    Jacobian::new(g)?.is_principal(d)
}

pub fn class_order(g: &Graph, d: &Divisor) -> Result<BigInt> {
    Jacobian::new(g)?.class_order(d)
}

pub fn quotient_by_classes(g: &Graph, generators: &[Divisor]) -> Result<CriticalGroup> {
    Jacobian::new(g)?.quotient_by(generators)
}

pub fn subgroup_invariants(g: &Graph, generators: &[Divisor]) -> Result<CriticalGroup> {
    Jacobian::new(g)?.subgroup_generated_by(generators)
}

fn check_size(g: &Graph, d: &Divisor) -> Result<()> {
    if d.graph_size() == g.vertex_count() {
        Ok(())
    } else {
        Err(Error::input(format!(
            "divisor has {} coefficients for a graph on {} vertices",
            d.graph_size(),
            g.vertex_count()
        )))
    }
}

/// `Pic⁰` of a connected graph, presented through the Smith form of a
/// reduced Laplacian.
#[derive(Debug, Clone)]
pub struct Jacobian {
    graph: Graph,
    removed: usize,
    reduced: IntMatrix,
    snf: SnfResult,
    group: CriticalGroup,
}

impl Jacobian {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_removed_vertex(g, 0)
    }

    /// Uses the reduced Laplacian obtained by deleting `remove`. The group
    /// does not depend on this choice; the coordinates do.
    pub fn with_removed_vertex(g: &Graph, remove: usize) -> Result<Self> {
        let reduced = reduced_laplacian(g, remove)?;
        let snf = smith_normal_form(&reduced);
        let group = CriticalGroup::from_diagonal(&snf.diagonal)
            .expect("reduced Laplacian of a connected graph is nonsingular");
        Ok(Jacobian {
            graph: g.clone(),
            removed: remove,
            reduced,
            snf,
            group,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn removed_vertex(&self) -> usize {
        self.removed
    }

    pub fn reduced_laplacian(&self) -> &IntMatrix {
        &self.reduced
    }

    pub fn snf(&self) -> &SnfResult {
        &self.snf
    }

    pub fn group(&self) -> &CriticalGroup {
        &self.group
    }

    /// Coefficients of `d` with the removed vertex dropped.
    fn reduce(&self, d: &Divisor) -> Result<Vec<BigInt>> {
        check_size(&self.graph, d)?;
        if !d.degree().is_zero() {
            return Err(Error::input(format!(
                "divisor has degree {}, expected 0",
                d.degree()
            )));
        }
        Ok(d.coefficients
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != self.removed)
            .map(|(_, c)| c.clone())
            .collect())
    }

    /// Coordinates of the class of `d` in `⊕ ℤ/sᵢ`, each reduced into
    /// `0..sᵢ` (so unit factors always read 0).
    pub fn coordinates(&self, d: &Divisor) -> Result<Vec<BigInt>> {
        let raw = self.snf.u.mul_vec(&self.reduce(d)?);
        Ok(raw
            .iter()
            .zip(&self.snf.diagonal)
            .map(|(c, s)| c.mod_floor(s))
            .collect())
    }

    pub fn is_principal(&self, d: &Divisor) -> Result<bool> {
        Ok(self.coordinates(d)?.iter().all(Zero::is_zero))
    }

    /// Least `m ≥ 1` with `m·d` principal: `lcm_i sᵢ / gcd(sᵢ, cᵢ)`.
    pub fn class_order(&self, d: &Divisor) -> Result<BigInt> {
        Ok(self
            .coordinates(d)?
            .iter()
            .zip(&self.snf.diagonal)
            .fold(BigInt::one(), |acc, (c, s)| acc.lcm(&(s / s.gcd(c)))))
    }

    /// `Pic⁰ / ⟨[g₁], …, [g_r]⟩`, from the Smith form of `[L' | g₁' … g_r']`.
    pub fn quotient_by(&self, generators: &[Divisor]) -> Result<CriticalGroup> {
        let columns = generators
            .iter()
            .map(|d| self.reduce(d))
            .collect::<Result<Vec<_>>>()?;
        let extra = columns_to_matrix(self.reduced.rows(), &columns);
        let presentation = self.reduced.hstack(&extra)?;
        let snf = smith_normal_form(&presentation);
        Ok(CriticalGroup::from_diagonal(&snf.diagonal).expect("quotient of a finite group is finite"))
    }

    /// The subgroup `⟨[g₁], …, [g_r]⟩` in invariant-factor form.
    ///
    /// With `C` the coordinate columns of the generators and `S` the Smith
    /// diagonal, the relation lattice `{x : C·x ∈ S·ℤ^{k−1}}` is the
    /// projection of `ker [C | S]` onto its first `r` coordinates. The kernel
    /// basis is read from the trailing columns of the right witness of
    /// `[C | S]`, and the subgroup is `ℤ^r` modulo that lattice.
    pub fn subgroup_generated_by(&self, generators: &[Divisor]) -> Result<CriticalGroup> {
        let r = generators.len();
        if r == 0 {
            return Ok(CriticalGroup::trivial());
        }
        let columns = generators
            .iter()
            .map(|d| self.coordinates(d))
            .collect::<Result<Vec<_>>>()?;
        let rows = self.reduced.rows();
        let coords = columns_to_matrix(rows, &columns);
        let torsion = IntMatrix::from_fn(rows, rows, |i, j| {
            if i == j {
                self.snf.diagonal[i].clone()
            } else {
                BigInt::zero()
            }
        });
        let stacked = coords.hstack(&torsion)?;
        let snf = smith_normal_form(&stacked);
        let rank = snf.rank();
        let kernel_dim = stacked.cols() - rank;
        let relations = IntMatrix::from_fn(r, kernel_dim, |i, j| snf.v[(i, rank + j)].clone());
        let relation_snf = smith_normal_form(&relations);
        Ok(CriticalGroup::from_diagonal(&relation_snf.diagonal).expect("subgroup of a finite group is finite"))
    }
}

fn columns_to_matrix(rows: usize, columns: &[Vec<BigInt>]) -> IntMatrix {
    IntMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
}
