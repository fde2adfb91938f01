//! Finite binary relations used as orders, with the checks that classify them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::hypergraph::{EdgeId, VertexId};

/// How much of the order axioms a relation satisfies on its carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrderKind {
    Preorder,
    Partial,
    Linear,
}

/// Why a relation is not a tree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeOrderViolation<T> {
    NotPartial,
    /// `a, b ≤ top` but `a` and `b` are incomparable.
    DownsetNotChain {
        top: T,
        a: T,
        b: T,
    },
    /// `a` and `b` have a common lower bound but no greatest one.
    MissingInfimum {
        a: T,
        b: T,
    },
}

/// A reflexive relation `≤` on a finite carrier, stored as a dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order<T> {
    elements: Vec<T>,
    index: BTreeMap<T, usize>,
    leq: Vec<bool>,
}

pub type VertexOrder = Order<VertexId>;
pub type EdgeOrder = Order<EdgeId>;

impl<T: Ord + Copy> Order<T> {
    /// `leq(a, b)` for every pair of the carrier.
    pub fn from_fn(elements: impl IntoIterator<Item = T>, leq: impl Fn(T, T) -> bool) -> Self {
        let mut elements: Vec<T> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        let n = elements.len();
        let mut matrix = alloc::vec![false; n * n];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                matrix[i * n + j] = leq(a, b);
            }
        }
        let index = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Self {
            elements,
            index,
            leq: matrix,
        }
    }

    /// `a ≤ b` iff `key(a) ≤ key(b)`.
    pub fn from_key<K: Ord>(elements: impl IntoIterator<Item = T>, key: impl Fn(T) -> K) -> Self {
        Self::from_fn(elements, |a, b| key(a) <= key(b))
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: T) -> bool {
        self.index.contains_key(&x)
    }

    fn at(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.elements.len() + j]
    }

    /// `a ≤ b`; false when either lies outside the carrier.
    pub fn leq(&self, a: T, b: T) -> bool {
        match (self.index.get(&a), self.index.get(&b)) {
            (Some(&i), Some(&j)) => self.at(i, j),
            _ => false,
        }
    }

    /// `a ≤ b` and not `b ≤ a`.
    pub fn lt(&self, a: T, b: T) -> bool {
        self.leq(a, b) && !self.leq(b, a)
    }

    pub fn comparable(&self, a: T, b: T) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|i| self.at(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            (0..n).all(|j| !self.at(i, j) || (0..n).all(|k| !self.at(j, k) || self.at(i, k)))
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| i == j || !(self.at(i, j) && self.at(j, i))))
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_preorder() && self.is_antisymmetric()
    }

    /// Every two members of `subset` are comparable.
    pub fn is_total_on(&self, subset: &[T]) -> bool {
        subset
            .iter()
            .enumerate()
            .all(|(i, &a)| subset[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    pub fn is_linear(&self) -> bool {
        self.is_partial_order() && self.is_total_on(&self.elements)
    }

    /// The strongest kind satisfied, if the relation is a preorder at all.
    pub fn kind(&self) -> Option<OrderKind> {
        if !self.is_preorder() {
            None
        } else if !self.is_antisymmetric() {
            Some(OrderKind::Preorder)
        } else if self.is_total_on(&self.elements) {
            Some(OrderKind::Linear)
        } else {
            Some(OrderKind::Partial)
        }
    }

    /// `{ y : y ≤ x }` in carrier order.
    pub fn downset(&self, x: T) -> Vec<T> {
        self.elements
            .iter()
            .copied()
            .filter(|&y| self.leq(y, x))
            .collect()
    }

    /// Checks the finite tree-order conditions: partial order, every downset a
    /// chain, and an infimum for every pair with a common lower bound.
    pub fn tree_order_violation(&self) -> Option<TreeOrderViolation<T>> {
        if !self.is_partial_order() {
            return Some(TreeOrderViolation::NotPartial);
        }
        let n = self.len();
        for top in 0..n {
            let below: Vec<usize> = (0..n).filter(|&i| self.at(i, top)).collect();
            for (x, &a) in below.iter().enumerate() {
                for &b in &below[x + 1..] {
                    if !self.at(a, b) && !self.at(b, a) {
                        return Some(TreeOrderViolation::DownsetNotChain {
                            top: self.elements[top],
                            a: self.elements[a],
                            b: self.elements[b],
                        });
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let lower: Vec<usize> =
                    (0..n).filter(|&i| self.at(i, a) && self.at(i, b)).collect();
                if lower.is_empty() {
                    continue;
                }
                let greatest = lower.iter().any(|&g| lower.iter().all(|&i| self.at(i, g)));
                if !greatest {
                    return Some(TreeOrderViolation::MissingInfimum {
                        a: self.elements[a],
                        b: self.elements[b],
                    });
                }
            }
        }
        None
    }

    /// `items` sorted ascending, or `None` if they are not pairwise comparable
    /// or leave the carrier.
    pub fn sort_chain(&self, items: &[T]) -> Option<Vec<T>> {
        if !items.iter().all(|&x| self.contains(x)) || !self.is_total_on(items) {
            return None;
        }
        let mut sorted = items.to_vec();
        sorted.sort_by(|&a, &b| match (self.leq(a, b), self.leq(b, a)) {
            (true, true) => a.cmp(&b),
            (true, false) => core::cmp::Ordering::Less,
            _ => core::cmp::Ordering::Greater,
        });
        Some(sorted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_kinds() {
        let linear = Order::from_key(0..4u32, |x| x);
        assert_eq!(linear.kind(), Some(OrderKind::Linear));
        let pre = Order::from_key(0..4u32, |x| x / 2);
        assert_eq!(pre.kind(), Some(OrderKind::Preorder));
        let divides = Order::from_fn(1..7u32, |a, b| b % a == 0);
        assert_eq!(divides.kind(), Some(OrderKind::Partial));
        let broken = Order::from_fn(0..3u32, |a, b| a == b || (a + 1) % 3 == b);
        assert_eq!(broken.kind(), None);
    }

    #[test]
    fn tree_orders() {
        // forest: 0 < 1 < 2, 0 < 3, and a separate root 4
        let parent = [None, Some(0), Some(1), Some(0), None];
        let ancestor = |a: usize, b: usize| {
            let mut x = Some(b);
            while let Some(y) = x {
                if y == a {
                    return true;
                }
                x = parent[y];
            }
            false
        };
        let forest = Order::from_fn(0..5usize, ancestor);
        assert_eq!(forest.tree_order_violation(), None);
        assert_eq!(forest.sort_chain(&[2, 0, 1]), Some(alloc::vec![0, 1, 2]));
        assert_eq!(forest.sort_chain(&[2, 3]), None);

        // diamond 0 < 1, 2 < 3 has a non-chain downset
        let diamond = Order::from_fn(0..4usize, |a, b| a == b || a == 0 || b == 3);
        assert!(matches!(
            diamond.tree_order_violation(),
            Some(TreeOrderViolation::DownsetNotChain { .. })
        ));

        // two minimal elements below two maximal ones: no infimum of the tops
        let bowtie = Order::from_fn(0..4usize, |a, b| a == b || (a < 2 && b >= 2));
        assert!(bowtie.tree_order_violation().is_some());
    }
}
