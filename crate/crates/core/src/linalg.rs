//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            entries.extend(r);
        }
        RatMatrix { rows: n, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).recip();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &f * self.get(r, j);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// Basis of the right kernel `{v : M v = 0}`, returned as the rows of a
/// reduced echelon matrix (leftmost pivots, pivot entries 1).
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let mut red = m.clone();
    let pivots = red.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let raw: Vec<Vec<Rat>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); m.cols()];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(i, f).clone();
            }
            v
        })
        .collect();
    row_echelon_basis(m.cols(), raw)
}

/// Reduced echelon basis of the span of the given vectors.
pub fn row_echelon_basis(cols: usize, vectors: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = RatMatrix::from_rows(cols, vectors);
    let rank = m.rref().len();
    (0..rank).map(|i| m.row(i).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
    }

    #[test]
    fn zero_row_kernel_is_everything() {
        let k = kernel_basis(&RatMatrix::zeros(1, 3));
        assert_eq!(k.len(), 3);
        assert_eq!(k, RatMatrix::identity(3).entries.chunks(3).map(|c| c.to_vec()).collect::<Vec<_>>());
    }

    #[test]
    fn coordinate_points_on_quadrics() {
        // columns: x^2, xy, y^2, xz, yz, z^2
        let e = |i: usize| (0..6).map(|j| int((i == j) as i64)).collect::<Vec<_>>();
        let m = RatMatrix::from_rows(6, vec![e(0), e(2), e(5)]);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![e(1), e(3), e(4)]);
    }

    #[test]
    fn rank_nullity_small() {
        let m = RatMatrix::from_rows(
            3,
            vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]],
        );
        assert_eq!(m.rank(), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }
}
