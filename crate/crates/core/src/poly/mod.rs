//! Exact multivariate polynomials in tensor Newton form, and the polynomial
//! extensions of the monotone-triangle count.

mod expansion;
mod extension;
pub mod identities;

pub use expansion::{expand_in_binomial_basis, BinomBasisExpansion};
pub use extension::{
    alpha_eval, alpha_polynomial, gn_grid_nodes, gn_poly, gn_poly_with_nodes, PolyBudget,
    alpha_polynomial_with_nodes,
};
pub use identities::{
    SAMPLE_COUNT,
    sample_points, verify_alpha_identities, verify_gn_reflection, IdentityCheck, IdentityReport,
    DEFAULT_SEED,
};

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::Rat;

/// A polynomial in `num_vars` variables with degree below `size` in each,
/// stored as coefficients of the tensor Newton basis
/// `prod_r prod_{t < m_r} (x_r - node_{r,t})`.
///
/// Coefficients are row-major in the multi-index `(m_1, ..., m_d)` with the
/// first variable most significant.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMulti {
    size: usize,
    nodes: Vec<Vec<Rat>>,
    coeffs: Vec<Rat>,
}

impl PolyMulti {
    /// Interpolates through `samples`, given row-major over the tensor grid
    /// `nodes[0] x nodes[1] x ...`. Every variable must have the same number
    /// of pairwise distinct nodes.
    pub fn interpolate(nodes: Vec<Vec<Rat>>, samples: Vec<Rat>) -> Self {
        let d = nodes.len();
        assert!(d > 0, "at least one variable");
        let size = nodes[0].len();
        assert!(size > 0 && nodes.iter().all(|v| v.len() == size));
        assert_eq!(samples.len(), size.pow(d as u32), "sample count");

        let mut coeffs = samples;
        for ax in 0..d {
            let stride = size.pow((d - 1 - ax) as u32);
            let block = stride * size;
            let axis_nodes = &nodes[ax];
            for base in 0..coeffs.len() {
                // `base` ranges over grid points whose `ax` index is 0.
                if (base % block) / stride != 0 {
                    continue;
                }
                let mut line: Vec<Rat> = (0..size).map(|t| coeffs[base + t * stride].clone()).collect();
                divided_differences(axis_nodes, &mut line);
                for (t, v) in line.into_iter().enumerate() {
                    coeffs[base + t * stride] = v;
                }
            }
        }
        Self { size, nodes, coeffs }
    }

    /// Samples `f` on the tensor grid (in parallel) and interpolates.
    /// `f` receives the node values of one grid point.
    pub fn from_fn<F>(nodes: Vec<Vec<Rat>>, f: F) -> Self
    where
        F: Fn(&[Rat]) -> Rat + Sync,
    {
        let d = nodes.len();
        let size = nodes[0].len();
        let total = size.pow(d as u32);
        let samples: Vec<Rat> = (0..total)
            .into_par_iter()
            .map(|flat| {
                let point: Vec<Rat> = multi_index(flat, size, d)
                    .into_iter()
                    .enumerate()
                    .map(|(r, t)| nodes[r][t].clone())
                    .collect();
                f(&point)
            })
            .collect();
        Self::interpolate(nodes, samples)
    }

    pub fn num_vars(&self) -> usize {
        self.nodes.len()
    }

    /// Upper bound on the degree in each variable.
    pub fn degree_bound(&self) -> usize {
        self.size - 1
    }

    pub fn nodes(&self) -> &[Vec<Rat>] {
        &self.nodes
    }

    /// Newton coefficients, row-major.
    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Actual degree in variable `var` (0 for the zero polynomial).
    pub fn degree_in(&self, var: usize) -> usize {
        let d = self.num_vars();
        let stride = self.size.pow((d - 1 - var) as u32);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(flat, _)| (flat / stride) % self.size)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let d = self.num_vars();
        assert_eq!(point.len(), d, "point dimension");
        let mut vals = self.coeffs.clone();
        for ax in (0..d).rev() {
            let x = &point[ax];
            let nodes = &self.nodes[ax];
            vals = vals
                .chunks(self.size)
                .map(|line| {
                    let mut acc = line[self.size - 1].clone();
                    for t in (0..self.size - 1).rev() {
                        acc = acc * (x - &nodes[t]) + &line[t];
                    }
                    acc
                })
                .collect();
        }
        vals.pop().expect("one value remains")
    }

    pub fn eval_ints(&self, point: &[i64]) -> Rat {
        let p: Vec<Rat> = point.iter().map(|&v| Rat::from_integer(v.into())).collect();
        self.eval(&p)
    }
}

/// In-place Newton divided differences.
fn divided_differences(nodes: &[Rat], vals: &mut [Rat]) {
    let m = vals.len();
    for level in 1..m {
        for t in (level..m).rev() {
            let num = &vals[t] - &vals[t - 1];
            vals[t] = num / (&nodes[t] - &nodes[t - level]);
        }
    }
}

/// Row-major multi-index of `flat` in a `size^d` grid.
pub fn multi_index(mut flat: usize, size: usize, d: usize) -> Vec<usize> {
    let mut idx = vec![0; d];
    for r in (0..d).rev() {
        idx[r] = flat % size;
        flat /= size;
    }
    idx
}

pub(crate) fn int_nodes(values: impl IntoIterator<Item = i64>) -> Vec<Rat> {
    values.into_iter().map(|v| Rat::from_integer(v.into())).collect()
}
