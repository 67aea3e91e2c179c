//! Finiteness of the Coxeter group attached to a clique of finite labels.
//!
//! The group is finite exactly when its cosine matrix `[-cos(pi / m_ij)]`
//! (unit diagonal) is positive definite. Before the numeric test the matrix
//! is split along label-2 pairs, which commute, and two exact facts are
//! applied per block: rank <= 2 blocks are dihedral (always finite), and a
//! connected block of rank >= 3 with a label >= 6 contains a rank-3 block
//! with reciprocal sum <= 1 (never finite). What reaches the numeric test
//! only has labels in {2, 3, 4, 5}, where the smallest positive pivot is far
//! above [`PIVOT_TOLERANCE`].

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::graph::{DefiningGraph, Label};

/// Pivots of the LDL^T factorisation at or below this value count as
/// non-positive.
pub const PIVOT_TOLERANCE: f64 = 1e-9;

/// A symmetric Coxeter matrix over `order` generators. The diagonal is
/// implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    order: usize,
    labels: Vec<Label>,
}

impl CoxeterMatrix {
    /// Builds the matrix from a label function evaluated on `i < j`.
    pub fn from_fn(order: usize, mut label: impl FnMut(usize, usize) -> Label) -> Self {
        let mut labels = vec![Label::Finite(2); order * order];
        for i in 0..order {
            for j in i + 1..order {
                let l = label(i, j);
                labels[i * order + j] = l;
                labels[j * order + i] = l;
            }
        }
        Self { order, labels }
    }

    /// Labels `m01, m12, m02` of a triangle.
    pub fn triangle(m01: Label, m12: Label, m02: Label) -> Self {
        Self::from_fn(3, |i, j| match (i, j) {
            (0, 1) => m01,
            (1, 2) => m12,
            _ => m02,
        })
    }

    /// The sub-matrix of `g` on the given vertices.
    pub fn from_clique(g: &DefiningGraph, vertices: &[usize]) -> Self {
        Self::from_fn(vertices.len(), |i, j| g.get(vertices[i], vertices[j]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.labels[i * self.order + j]
    }

    /// Row-major cosine matrix; `None` if some label is infinite.
    pub fn cosine_matrix(&self) -> Option<Vec<f64>> {
        let n = self.order;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = 1.0;
            for j in 0..n {
                if i != j {
                    match self.label(i, j) {
                        Label::Finite(m) => a[i * n + j] = -libm::cos(PI / m as f64),
                        Label::Infinite => return None,
                    }
                }
            }
        }
        Some(a)
    }

    /// Positive definiteness of the full cosine matrix, via LDL^T pivots
    /// (the ratios of consecutive leading principal minors). No block
    /// reduction: this is the plain numeric criterion.
    pub fn cosine_matrix_is_positive_definite(&self) -> bool {
        match self.cosine_matrix() {
            Some(a) => ldl_pivots_positive(a, self.order),
            None => false,
        }
    }

    /// Whether the Coxeter group is finite. An infinite label makes it
    /// infinite.
    pub fn is_finite(&self) -> bool {
        let n = self.order;
        if self.labels.iter().enumerate().any(|(k, &l)| k / n != k % n && l == Label::Infinite) {
            return false;
        }
        for block in self.odd_blocks() {
            if block.len() <= 2 {
                continue;
            }
            let mut large = false;
            let sub = Self::from_fn(block.len(), |i, j| {
                let l = self.label(block[i], block[j]);
                if let Label::Finite(m) = l {
                    large |= m >= 6;
                }
                l
            });
            if large || !sub.cosine_matrix_is_positive_definite() {
                return false;
            }
        }
        true
    }

    /// Connected components of the Coxeter diagram (pairs with label >= 3).
    fn odd_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut block = vec![start];
            let mut k = 0;
            while k < block.len() {
                let v = block[k];
                k += 1;
                for (w, s) in seen.iter_mut().enumerate() {
                    if !*s && w != v && self.label(v, w) != Label::Finite(2) {
                        *s = true;
                        block.push(w);
                    }
                }
            }
            blocks.push(block);
        }
        blocks
    }
}

fn ldl_pivots_positive(mut a: Vec<f64>, n: usize) -> bool {
    for k in 0..n {
        let pivot = a[k * n + k];
        if pivot <= PIVOT_TOLERANCE {
            return false;
        }
        for i in k + 1..n {
            let factor = a[i * n + k] / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in k + 1..n {
                a[i * n + j] -= factor * a[k * n + j];
            }
        }
    }
    true
}
