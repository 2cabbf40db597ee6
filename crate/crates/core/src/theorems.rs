//! Checks of the cone, join and tree statements on concrete graphs, plus
//! the brute-force oracles the rest of the crate is tested against.
//!
//! Notation: `g` has `k` vertices and `Γ_n = cone(g, n)`; the apex vertices
//! are `w₁ … w_n = k … k+n−1`. `H_n` is `Pic⁰(Γ_n)` modulo the classes
//! `w_i − w₁`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::group::CriticalGroup;
use crate::sandpile::{
    char_poly_degree_zero, char_poly_restricted, critical_group, laplacian, Divisor, Jacobian,
};

/// The exact sequence `0 → (ℤ/(n+k))^{n−1} → Pic⁰(Γ_n) → H_n → 0` for one
/// instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSequenceReport {
    pub base_vertices: usize,
    pub cone_size: usize,
    pub pic0: CriticalGroup,
    /// Generated by the apex differences `w_i − w₁`.
    pub subgroup: CriticalGroup,
    pub quotient_h: CriticalGroup,
    /// `|P_Γ(−n)|`
    pub p_at_minus_n: BigInt,
    /// `|H_n| = |P_Γ(−n)|`
    pub order_formula_holds: bool,
    /// The subgroup is `(ℤ/(n+k))^{n−1}`.
    pub subgroup_is_expected: bool,
    /// `Pic⁰(Γ_n) ≅ subgroup ⊕ H_n`
    pub splits: bool,
    pub h_generator_count: usize,
}

impl ConeSequenceReport {
    /// `|Pic⁰(Γ_n)| = (n+k)^{n−1} · |P_Γ(−n)|`
    pub fn size_formula_holds(&self) -> bool {
        let apex = BigInt::from(self.base_vertices + self.cone_size);
        let expected = num_traits::pow(apex, self.cone_size - 1) * &self.p_at_minus_n;
        self.pic0.order() == &expected
    }

    /// Every flag that is supposed to hold for all inputs.
    pub fn holds(&self) -> bool {
        self.order_formula_holds && self.subgroup_is_expected && self.size_formula_holds()
    }
}

/// Generators `w_i − w₁ (i = 2..n)` of the apex subgroup of `cone(g, n)`.
pub fn apex_differences(base_vertices: usize, n: usize) -> Vec<Divisor> {
    let total = base_vertices + n;
    (1..n)
        .map(|i| Divisor::difference(total, base_vertices + i, base_vertices))
        .collect()
}

pub fn verify_cone_theorem(g: &Graph, n: usize) -> Result<ConeSequenceReport> {
    let k = g.vertex_count();
    let p = char_poly_restricted(g)?;
    let cone = g.cone(n)?;
    let jacobian = Jacobian::new(&cone)?;

    let generators = apex_differences(k, n);
    let subgroup = jacobian.subgroup_generated_by(&generators)?;
    let quotient_h = jacobian.quotient_by(&generators)?;
    let p_at_minus_n = p.eval(&-BigInt::from(n)).abs();

    let expected_subgroup = CriticalGroup::from_cyclic_orders(&vec![BigInt::from(n + k); n - 1])?;
    let pic0 = jacobian.group().clone();
    let splits = pic0.is_isomorphic(&subgroup.direct_sum(&quotient_h));

    Ok(ConeSequenceReport {
        base_vertices: k,
        cone_size: n,
        order_formula_holds: quotient_h.order() == &p_at_minus_n,
        subgroup_is_expected: subgroup.is_isomorphic(&expected_subgroup),
        splits,
        h_generator_count: quotient_h.rank(),
        pic0,
        subgroup,
        quotient_h,
        p_at_minus_n,
    })
}

/// `|Pic⁰(Γ₁ * … * Γ_l)|` against `k^{l−2} · ∏ |P_{Γ_i}(k_i − k)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinOrderReport {
    pub factor_vertex_counts: Vec<usize>,
    pub total_vertices: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

/// Factors need not be connected; the join of two or more graphs always is.
/// For a disconnected factor `P_{Γ_i}` is the Laplacian characteristic
/// polynomial on `Div⁰ ⊗ ℚ`, i.e. `det(xI − L)/x`.
pub fn verify_join_theorem(graphs: &[Graph]) -> Result<JoinOrderReport> {
    if graphs.len() < 2 {
        return Err(Error::input(format!(
            "join check needs at least two graphs, got {}",
            graphs.len()
        )));
    }
    let joined = Graph::join_all(graphs)?;
    let total = joined.vertex_count();
    let lhs = critical_group(&joined)?.order().clone();

    let scale = num_traits::pow(BigInt::from(total), graphs.len() - 2);
    let rhs = graphs.iter().fold(scale, |acc, g| {
        let at = BigInt::from(g.vertex_count()) - BigInt::from(total);
        acc * char_poly_degree_zero(g).eval(&at).abs()
    });

    Ok(JoinOrderReport {
        factor_vertex_counts: graphs.iter().map(Graph::vertex_count).collect(),
        total_vertices: total,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeBoundReport {
    pub leaf_count: usize,
    /// Minimal number of generators of `H_n`.
    pub h_generators: usize,
    /// `h_generators ≤ leaf_count − 1`
    pub holds: bool,
}

pub fn verify_tree_bound(g: &Graph, n: usize) -> Result<TreeBoundReport> {
    if !g.is_tree() || g.vertex_count() < 2 {
        return Err(Error::input("tree bound needs a tree with at least two vertices"));
    }
    let leaf_count = g.leaves().len();
    let h_generators = verify_cone_theorem(g, n)?.h_generator_count;
    Ok(TreeBoundReport {
        leaf_count,
        h_generators,
        holds: h_generators < leaf_count,
    })
}

/// Exact eigenvector identities for `L(Γ_n)`:
///
/// * `L · (w_i − w₁) = (n+k)(w_i − w₁)` for every apex difference, and
/// * `L · x = (n+k) x` for `x = n·Σ_base v − k·Σ_apex w`.
pub fn verify_eigenvectors(g: &Graph, n: usize) -> Result<bool> {
    let k = g.vertex_count();
    let lap = laplacian(&g.cone(n)?);
    let eigenvalue = BigInt::from(n + k);
    let is_eigenvector = |v: &[BigInt]| {
        let image = lap.mul_vec(v);
        image.iter().zip(v).all(|(a, b)| a == &(b * &eigenvalue))
    };

    let differences_ok = apex_differences(k, n)
        .iter()
        .all(|d| is_eigenvector(d.coefficients()));
    let split: Vec<BigInt> = (0..k + n)
        .map(|v| {
            if v < k {
                BigInt::from(n)
            } else {
                -BigInt::from(k)
            }
        })
        .collect();
    Ok(differences_ok && is_eigenvector(&split))
}

/// `L(Γ_n) − L(K_{n+k})` vanishes outside the leading `k × k` block, which
/// equals `L(Γ) − L(K_k)`.
pub fn verify_block_decomposition(g: &Graph, n: usize) -> Result<bool> {
    let k = g.vertex_count();
    let cone = laplacian(&g.cone(n)?);
    let complete = laplacian(&Graph::complete(n + k)?);
    let base = laplacian(g);
    let base_complete = laplacian(&Graph::complete(k)?);
    Ok((0..n + k).cartesian_product(0..n + k).all(|(i, j)| {
        let difference = &cone[(i, j)] - &complete[(i, j)];
        if i < k && j < k {
            difference == &base[(i, j)] - &base_complete[(i, j)]
        } else {
            difference.is_zero()
        }
    }))
}

/// The order of `a − b` for a conformal pair against its predicted value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalPairReport {
    pub degree: usize,
    pub adjacent: bool,
    /// `degree + 1` if adjacent, else `degree`.
    pub expected_order: BigInt,
    pub class_order: BigInt,
    pub holds: bool,
}

/// Requires a connected graph on at least three vertices in which `{a, b}`
/// has the conformity property.
pub fn verify_conformal_pair(g: &Graph, a: usize, b: usize) -> Result<ConformalPairReport> {
    g.require_connected()?;
    if g.vertex_count() < 3 {
        return Err(Error::input("conformal pair check needs at least three vertices"));
    }
    if a == b {
        return Err(Error::input("conformal pair needs two distinct vertices"));
    }
    if !g.has_conformity_property(&VertexSet::new([a, b]))? {
        return Err(Error::input(format!("{{{a}, {b}}} is not a conformity set")));
    }
    let degree = g.degree(a);
    let adjacent = g.has_edge(a, b);
    let expected_order = BigInt::from(if adjacent { degree + 1 } else { degree });
    let class_order = Jacobian::new(g)?.class_order(&Divisor::difference(g.vertex_count(), a, b))?;
    Ok(ConformalPairReport {
        degree,
        adjacent,
        holds: class_order == expected_order,
        expected_order,
        class_order,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    /// Subgroup generated by all `v¹ᵢ − vᵏᵢ` together.
    pub generated: CriticalGroup,
    /// Direct sum of the cyclic groups they generate individually.
    pub direct_sum: CriticalGroup,
    pub holds: bool,
}

/// For disjoint conformity sets that leave at least one vertex uncovered,
/// the differences `s₁ − s_j` within each set generate the direct sum of
/// their cyclic subgroups.
pub fn verify_conformal_independence(g: &Graph, sets: &[VertexSet]) -> Result<IndependenceReport> {
    g.require_connected()?;
    let mut covered = VertexSet::default();
    for s in sets {
        if !g.has_conformity_property(s)? {
            return Err(Error::input(format!("{:?} is not a conformity set", s.members())));
        }
        if s.members().iter().any(|&v| covered.contains(v)) {
            return Err(Error::input("conformity sets overlap"));
        }
        covered = covered.members().iter().chain(s.members()).copied().collect();
    }
    if covered.len() == g.vertex_count() {
        return Err(Error::input("conformity sets cover every vertex"));
    }

    let size = g.vertex_count();
    let generators: Vec<Divisor> = sets
        .iter()
        .flat_map(|s| {
            let first = s.members()[0];
            s.members()[1..]
                .iter()
                .map(move |&v| Divisor::difference(size, first, v))
        })
        .collect();
    let jacobian = Jacobian::new(g)?;
    let generated = jacobian.subgroup_generated_by(&generators)?;
    let orders = generators
        .iter()
        .map(|d| jacobian.class_order(d))
        .collect::<Result<Vec<_>>>()?;
    let direct_sum = CriticalGroup::from_cyclic_orders(&orders)?;
    Ok(IndependenceReport {
        holds: generated.is_isomorphic(&direct_sum),
        generated,
        direct_sum,
    })
}

/// Largest graph the brute-force counter accepts.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 10;

/// Counts spanning trees by testing every `(k−1)`-edge subset for
/// acyclicity. Exponential; refuses graphs above
/// [`BRUTE_FORCE_MAX_VERTICES`].
pub fn brute_force_spanning_trees(g: &Graph) -> Result<u64> {
    let k = g.vertex_count();
    if k > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::Size {
            size: k,
            limit: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let count = g
        .edges()
        .iter()
        .combinations(k - 1)
        .filter(|subset| is_forest(k, subset))
        .count();
    Ok(count as u64)
}

/// With exactly `k − 1` edges, acyclic means spanning tree.
fn is_forest(k: usize, edges: &[&(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..k).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &&(u, v) in edges {
        let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{goel_graph, three_leaf_tree};
    use crate::sandpile::spanning_tree_count;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn goel_sequence_does_not_split() {
        let r = verify_cone_theorem(&goel_graph(), 3).unwrap();
        assert_eq!(r.pic0.invariant_factors(), ints(&[144, 8208]).as_slice());
        assert_eq!(r.subgroup.invariant_factors(), ints(&[9, 9]).as_slice());
        assert!(r.order_formula_holds);
        assert!(r.subgroup_is_expected);
        assert!(r.size_formula_holds());
        assert!(!r.splits);
        assert_eq!(r.pic0.order(), &(r.subgroup.order() * r.quotient_h.order()));
    }

    #[test]
    fn single_vertex_cones_split() {
        let k1 = Graph::complete(1).unwrap();
        for n in 1..=6 {
            let r = verify_cone_theorem(&k1, n).unwrap();
            let expected = CriticalGroup::from_cyclic_orders(&vec![BigInt::from(n + 1); n - 1]).unwrap();
            assert_eq!(r.pic0, expected);
            assert!(r.quotient_h.is_trivial());
            assert_eq!(r.p_at_minus_n, 1.into());
            assert!(r.splits);
            assert!(r.holds());
        }
    }

    #[test]
    fn fan_over_path() {
        let r = verify_cone_theorem(&Graph::path(5).unwrap(), 1).unwrap();
        assert_eq!(r.pic0.invariant_factors(), ints(&[55]).as_slice());
        assert!(r.subgroup.is_trivial());
        assert_eq!(r.quotient_h.invariant_factors(), ints(&[55]).as_slice());
        assert_eq!(r.h_generator_count, 1);
        assert!(r.holds());
    }

    #[test]
    fn cone_theorem_rejects_bad_input() {
        assert_eq!(
            verify_cone_theorem(&Graph::edgeless(2).unwrap(), 2),
            Err(Error::NotConnected)
        );
        assert!(verify_cone_theorem(&Graph::path(2).unwrap(), 0).is_err());
    }

    #[test]
    fn join_theorem_examples() {
        let k1 = Graph::complete(1).unwrap();
        let r = verify_join_theorem(&[k1.clone(), k1.clone(), k1.clone()]).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (3.into(), 3.into()));
        assert!(r.holds);
        assert_eq!(r.total_vertices, 3);

        let r = verify_join_theorem(&[Graph::path(3).unwrap(), Graph::path(2).unwrap()]).unwrap();
        assert!(r.holds, "{r:?}");

        // [Γ, K_n] reproduces the cone size formula
        let g = goel_graph();
        for n in 1..=4 {
            let join = verify_join_theorem(&[g.clone(), Graph::complete(n).unwrap()]).unwrap();
            let cone = verify_cone_theorem(&g, n).unwrap();
            let formula = num_traits::pow(BigInt::from(n + 6), n - 1) * &cone.p_at_minus_n;
            assert_eq!(join.rhs, formula);
            assert!(join.holds);
        }

        assert!(verify_join_theorem(&[k1]).is_err());
    }

    #[test]
    fn join_with_disconnected_factors() {
        let r = verify_join_theorem(&[Graph::edgeless(3).unwrap(), Graph::edgeless(2).unwrap()]).unwrap();
        // K_{3,2} has 3^{1} · 2^{2} = 12 spanning trees
        assert_eq!(r.lhs, 12.into());
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn tree_bound() {
        let r = verify_tree_bound(&three_leaf_tree(), 1).unwrap();
        assert_eq!(r, TreeBoundReport { leaf_count: 3, h_generators: 1, holds: true });
        for n in 1..4 {
            let r = verify_tree_bound(&Graph::path(2).unwrap(), n).unwrap();
            assert_eq!(r.leaf_count, 2);
            assert!(r.h_generators <= 1);
        }
        assert!(verify_tree_bound(&Graph::cycle(4).unwrap(), 1).is_err());
        assert!(verify_tree_bound(&Graph::complete(1).unwrap(), 1).is_err());
    }

    #[test]
    fn eigenvector_identities() {
        assert!(verify_eigenvectors(&Graph::path(3).unwrap(), 4).unwrap());
        assert!(verify_eigenvectors(&Graph::complete(1).unwrap(), 3).unwrap());
        assert!(verify_eigenvectors(&goel_graph(), 3).unwrap());
        assert!(verify_eigenvectors(&goel_graph(), 1).unwrap());
        assert!(verify_block_decomposition(&goel_graph(), 3).unwrap());
        assert!(verify_block_decomposition(&Graph::complete(1).unwrap(), 2).unwrap());
    }

    #[test]
    fn conformal_pairs() {
        let cone = goel_graph().cone(3).unwrap();
        let r = verify_conformal_pair(&cone, 6, 7).unwrap();
        assert!(r.adjacent);
        assert_eq!(r.degree, 8);
        assert_eq!(r.class_order, 9.into());
        assert!(r.holds);

        // two non-adjacent vertices joined to a triangle
        let g = Graph::edgeless(2).unwrap().join(&Graph::complete(3).unwrap());
        let r = verify_conformal_pair(&g, 0, 1).unwrap();
        assert!(!r.adjacent);
        assert_eq!(r.class_order, 3.into());
        assert!(r.holds);

        assert!(verify_conformal_pair(&goel_graph(), 0, 5).is_err());
        assert!(verify_conformal_pair(&Graph::path(2).unwrap(), 0, 1).is_err());
    }

    #[test]
    fn conformal_independence() {
        // 3 and 4 are adjacent and both see 1, 2, 5 and the apex
        let g = goel_graph().cone(3).unwrap();
        let sets = [VertexSet::new([6, 7, 8]), VertexSet::new([3, 4])];
        let r = verify_conformal_independence(&g, &sets).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(verify_conformal_independence(&g, &[VertexSet::new([0, 5])]).is_err());
        assert!(verify_conformal_independence(
            &g,
            &[VertexSet::new([6, 7]), VertexSet::new([7, 8])]
        )
        .is_err());
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(brute_force_spanning_trees(&Graph::complete(4).unwrap()).unwrap(), 16);
        assert_eq!(brute_force_spanning_trees(&Graph::cycle(6).unwrap()).unwrap(), 6);
        assert_eq!(brute_force_spanning_trees(&three_leaf_tree()).unwrap(), 1);
        assert_eq!(brute_force_spanning_trees(&Graph::complete(1).unwrap()).unwrap(), 1);
        assert_eq!(brute_force_spanning_trees(&Graph::edgeless(3).unwrap()).unwrap(), 0);
        assert_eq!(
            brute_force_spanning_trees(&Graph::path(11).unwrap()),
            Err(Error::Size { size: 11, limit: 10 })
        );
        let fan = Graph::path(5).unwrap().cone(1).unwrap();
        assert_eq!(
            BigInt::from(brute_force_spanning_trees(&fan).unwrap()),
            spanning_tree_count(&fan).unwrap()
        );
    }
}
