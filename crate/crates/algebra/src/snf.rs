//! Smith normal form over a Euclidean domain with both transforms and their
//! inverses tracked, so every result can be certified by multiplication.
//!
//! Pivot rule: smallest Euclidean norm in the active block, ties broken by
//! lowest (row, col).

use crate::matrix::Matrix;
use crate::ring::EuclideanDomain;

#[derive(Debug, Clone, PartialEq)]
pub struct SmithForm<E> {
    /// Diagonal result `S = U·A·V`.
    pub s: Matrix<E>,
    pub u: Matrix<E>,
    pub u_inv: Matrix<E>,
    pub v: Matrix<E>,
    pub v_inv: Matrix<E>,
    /// Nonzero diagonal entries d₁ | d₂ | … (unit-normalised, units included).
    pub invariant_factors: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> SmithForm<E> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Checks `U·A·V = S`, `U·U⁻¹ = I`, `V·V⁻¹ = I`, that `S` is diagonal and
    /// that the diagonal forms a divisibility chain.
    pub fn certify<R: EuclideanDomain<Elem = E>>(&self, ring: &R, a: &Matrix<E>) -> bool {
        let (m, n) = (a.rows(), a.cols());
        if self.u.mul(ring, a).mul(ring, &self.v) != self.s {
            return false;
        }
        if self.u.mul(ring, &self.u_inv) != Matrix::identity(ring, m)
            || self.v.mul(ring, &self.v_inv) != Matrix::identity(ring, n)
        {
            return false;
        }
        for i in 0..m {
            for j in 0..n {
                if i != j && !ring.is_zero(&self.s[(i, j)]) {
                    return false;
                }
            }
        }
        let diag: Vec<E> = (0..m.min(n)).map(|i| self.s[(i, i)].clone()).collect();
        diag.windows(2).all(|w| ring.divides(&w[0], &w[1]))
    }
}

struct Work<'r, R: EuclideanDomain> {
    ring: &'r R,
    a: Matrix<R::Elem>,
    u: Matrix<R::Elem>,
    u_inv: Matrix<R::Elem>,
    v: Matrix<R::Elem>,
    v_inv: Matrix<R::Elem>,
}

impl<R: EuclideanDomain> Work<'_, R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row_t += c·row_s
    fn add_row(&mut self, t: usize, s: usize, c: &R::Elem) {
        let ring = self.ring;
        self.a.add_row_multiple(ring, t, s, c);
        self.u.add_row_multiple(ring, t, s, c);
        self.u_inv.add_col_multiple(ring, s, t, &ring.neg(c));
    }

    /// col_t += c·col_s
    fn add_col(&mut self, t: usize, s: usize, c: &R::Elem) {
        let ring = self.ring;
        self.a.add_col_multiple(ring, t, s, c);
        self.v.add_col_multiple(ring, t, s, c);
        self.v_inv.add_row_multiple(ring, s, t, &ring.neg(c));
    }

    fn scale_row(&mut self, i: usize, unit: &R::Elem, unit_inv: &R::Elem) {
        let ring = self.ring;
        self.a.scale_row(ring, i, unit);
        self.u.scale_row(ring, i, unit);
        self.u_inv.scale_col(ring, i, unit_inv);
    }

    fn pivot_in_block(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), R::Norm)> = None;
        for i in k..self.a.rows() {
            for j in k..self.a.cols() {
                let e = &self.a[(i, j)];
                if self.ring.is_zero(e) {
                    continue;
                }
                let n = self.ring.norm(e);
                if best.as_ref().map_or(true, |(_, b)| n < *b) {
                    best = Some(((i, j), n));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// Smallest-norm nonzero entry in row k / column k beyond the pivot.
    fn smaller_in_cross(&self, k: usize) -> Option<(usize, usize)> {
        let ring = self.ring;
        let mut best: Option<((usize, usize), R::Norm)> = None;
        let mut consider = |pos: (usize, usize), e: &R::Elem| {
            if ring.is_zero(e) {
                return;
            }
            let n = ring.norm(e);
            if best.as_ref().map_or(true, |(_, b)| n < *b) {
                best = Some((pos, n));
            }
        };
        for i in k + 1..self.a.rows() {
            consider((i, k), &self.a[(i, k)]);
        }
        for j in k + 1..self.a.cols() {
            consider((k, j), &self.a[(k, j)]);
        }
        let pivot_norm = ring.norm(&self.a[(k, k)]);
        best.filter(|(_, n)| *n < pivot_norm).map(|(p, _)| p)
    }
}

pub fn smith_normal_form<R: EuclideanDomain>(ring: &R, a: &Matrix<R::Elem>) -> SmithForm<R::Elem> {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        ring,
        a: a.clone(),
        u: Matrix::identity(ring, m),
        u_inv: Matrix::identity(ring, m),
        v: Matrix::identity(ring, n),
        v_inv: Matrix::identity(ring, n),
    };
    let mut factors = Vec::new();

    for k in 0..m.min(n) {
        let Some((pi, pj)) = w.pivot_in_block(k) else { break };
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        loop {
            let pivot = w.a[(k, k)].clone();
            for i in k + 1..m {
                if !ring.is_zero(&w.a[(i, k)]) {
                    let (q, _) = ring.div_rem(&w.a[(i, k)], &pivot);
                    if !ring.is_zero(&q) {
                        w.add_row(i, k, &ring.neg(&q));
                    }
                }
            }
            for j in k + 1..n {
                if !ring.is_zero(&w.a[(k, j)]) {
                    let (q, _) = ring.div_rem(&w.a[(k, j)], &pivot);
                    if !ring.is_zero(&q) {
                        w.add_col(j, k, &ring.neg(&q));
                    }
                }
            }
            if let Some((i, j)) = w.smaller_in_cross(k) {
                w.swap_rows(k, i);
                w.swap_cols(k, j);
                continue;
            }
            // Remainders that were not smaller cannot exist, so the cross is clear.
            debug_assert!((k + 1..m).all(|i| ring.is_zero(&w.a[(i, k)])));
            debug_assert!((k + 1..n).all(|j| ring.is_zero(&w.a[(k, j)])));

            let bad = (k + 1..m)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !ring.divides(&pivot, &w.a[(i, j)]));
            match bad {
                Some((i, _)) => {
                    let one = ring.one();
                    w.add_row(k, i, &one);
                }
                None => break,
            }
        }

        let (unit, unit_inv) = ring.normalize(&w.a[(k, k)]);
        w.scale_row(k, &unit, &unit_inv);
        factors.push(w.a[(k, k)].clone());
    }

    SmithForm { s: w.a, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv, invariant_factors: factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use num_bigint::BigInt;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols)
    }

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        let a = int_matrix(rows);
        let snf = smith_normal_form(&Integers, &a);
        assert!(snf.certify(&Integers, &a));
        snf.invariant_factors.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn linking_matrix_two() {
        assert_eq!(factors(&[&[0, 2], &[2, 0]]), vec![2, 2]);
    }

    #[test]
    fn identity_factors() {
        assert_eq!(factors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), vec![1, 1, 1]);
    }

    #[test]
    fn two_one_one_two() {
        assert_eq!(factors(&[&[2, 1], &[1, 2]]), vec![1, 3]);
    }

    #[test]
    fn enforces_divisibility() {
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]), vec![2, 2, 60]);
    }

    #[test]
    fn empty_and_zero_matrices() {
        let a: Matrix<BigInt> = Matrix::zeros(&Integers, 0, 3);
        let snf = smith_normal_form(&Integers, &a);
        assert!(snf.invariant_factors.is_empty());
        assert!(snf.certify(&Integers, &a));
        assert_eq!(factors(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
    }

    #[test]
    fn negative_entries_normalise_positive() {
        assert_eq!(factors(&[&[-4]]), vec![4]);
        assert_eq!(factors(&[&[0, -2], &[-2, 0]]), vec![2, 2]);
    }
}
