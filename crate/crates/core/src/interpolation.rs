//! Poisedness, Lagrange interpolation and fundamental polynomials in `Π_n`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{NodeSet, Scalar};
use crate::linalg;
use crate::poly::{monomial_values, Poly2};

pub use crate::poly::dimension;

/// Rows are the monomial values at each node, in node order.
pub fn vandermonde(nodes: &NodeSet) -> Vec<Vec<Scalar>> {
    nodes
        .nodes()
        .iter()
        .map(|p| monomial_values(nodes.degree(), p))
        .collect()
}

pub fn vandermonde_determinant(nodes: &NodeSet) -> Result<Scalar> {
    nodes.require_poised_cardinality()?;
    Ok(linalg::determinant(&vandermonde(nodes)))
}

/// True iff the Vandermonde determinant is nonzero.
pub fn is_poised(nodes: &NodeSet) -> Result<bool> {
    Ok(!vandermonde_determinant(nodes)?.is_zero())
}

/// Nodes paired with the values `c_i` to interpolate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationProblem {
    nodes: NodeSet,
    data: Vec<Scalar>,
}

impl InterpolationProblem {
    pub fn new(nodes: NodeSet, data: Vec<Scalar>) -> Result<Self> {
        nodes.require_poised_cardinality()?;
        if data.len() != nodes.len() {
            return Err(Error::PreconditionViolation(format!(
                "{} data values for {} nodes",
                data.len(),
                nodes.len()
            )));
        }
        Ok(InterpolationProblem { nodes, data })
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }
}

/// The unique `p` in `Π_n` with `p(node_i) = data_i`.
pub fn interpolate(problem: &InterpolationProblem) -> Result<Poly2> {
    let rhs: Vec<Vec<Scalar>> = problem.data.iter().map(|c| vec![c.clone()]).collect();
    let mut cols = solve_columns(&problem.nodes, &rhs)?;
    Ok(Poly2::from_coeffs(problem.nodes.degree(), cols.remove(0)))
}

fn solve_columns(nodes: &NodeSet, rhs: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    nodes.require_poised_cardinality()?;
    linalg::solve(&vandermonde(nodes), rhs).ok_or(Error::NotPoised)
}

/// `p_A^*`: equal to 1 at the owner node and 0 at every other node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalPoly {
    pub owner: usize,
    pub poly: Poly2,
}

pub fn fundamental_polynomial(nodes: &NodeSet, k: usize) -> Result<FundamentalPoly> {
    nodes.node(k)?;
    let data = (0..nodes.len())
        .map(|i| {
            if i == k {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let poly = interpolate(&InterpolationProblem::new(nodes.clone(), data)?)?;
    Ok(FundamentalPoly { owner: k, poly })
}

/// All fundamental polynomials, index-ordered, from a single elimination.
pub fn fundamental_polynomials(nodes: &NodeSet) -> Result<Vec<FundamentalPoly>> {
    let n = nodes.len();
    let identity: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    let cols = solve_columns(nodes, &identity)?;
    Ok(cols
        .into_iter()
        .enumerate()
        .map(|(owner, coeffs)| FundamentalPoly {
            owner,
            poly: Poly2::from_coeffs(nodes.degree(), coeffs),
        })
        .collect())
}
