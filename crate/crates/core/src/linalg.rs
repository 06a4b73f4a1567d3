//! Small dense linear algebra: LU with partial pivoting and cyclic Jacobi
//! for symmetric eigenvalues. Matrices here are at most a handful of rows.

use alloc::vec;
use alloc::vec::Vec;

/// Square row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| f64::max(m, x.abs()))
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol))
    }
}

/// LU factorisation `PA = LU` with partial pivoting.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
    sign: f64,
    min_pivot: f64,
}

impl Lu {
    pub fn new(a: &Matrix) -> Self {
        let n = a.size();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut min_pivot = f64::INFINITY;
        for k in 0..n {
            let (p, pmax) = (k..n)
                .map(|i| (i, lu.get(i, k).abs()))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            min_pivot = min_pivot.min(pmax);
            if p != k {
                for j in 0..n {
                    let t = lu.get(k, j);
                    lu.set(k, j, lu.get(p, j));
                    lu.set(p, j, t);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = lu.get(k, k);
            if pivot == 0.0 {
                continue;
            }
            for i in k + 1..n {
                let f = lu.get(i, k) / pivot;
                lu.set(i, k, f);
                for j in k + 1..n {
                    lu.set(i, j, lu.get(i, j) - f * lu.get(k, j));
                }
            }
        }
        if n == 0 {
            min_pivot = 0.0;
        }
        Lu {
            lu,
            perm,
            sign,
            min_pivot,
        }
    }

    pub fn determinant(&self) -> f64 {
        (0..self.lu.size()).fold(self.sign, |d, i| d * self.lu.get(i, i))
    }

    /// Smallest absolute pivot encountered.
    pub fn min_pivot(&self) -> f64 {
        self.min_pivot
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.lu.size();
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                x[i] -= self.lu.get(i, j) * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] -= self.lu.get(i, j) * x[j];
            }
            x[i] /= self.lu.get(i, i);
        }
        x
    }

    pub fn inverse(&self) -> Matrix {
        let n = self.lu.size();
        let mut inv = Matrix::zeros(n);
        let mut e = vec![0.0; n];
        for j in 0..n {
            e.iter_mut().for_each(|x| *x = 0.0);
            e[j] = 1.0;
            let col = self.solve(&e);
            for i in 0..n {
                inv.set(i, j, col[i]);
            }
        }
        inv
    }
}

pub fn determinant(a: &Matrix) -> f64 {
    Lu::new(a).determinant()
}

/// Eigenvalues and eigenvectors of a symmetric matrix, eigenvalues ascending.
/// Eigenvectors are the columns of the returned matrix.
pub fn symmetric_eigen(a: &Matrix) -> (Vec<f64>, Matrix) {
    let n = a.size();
    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    let scale = a.max_abs();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j) * m.get(i, j))
            .sum();
        if off <= (f64::EPSILON * scale) * (f64::EPSILON * scale) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (m.get(q, q) - m.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let mkp = m.get(k, p);
                    let mkq = m.get(k, q);
                    m.set(k, p, c * mkp - s * mkq);
                    m.set(k, q, s * mkp + c * mkq);
                }
                for k in 0..n {
                    let mpk = m.get(p, k);
                    let mqk = m.get(q, k);
                    m.set(p, k, c * mpk - s * mqk);
                    m.set(q, k, s * mpk + c * mqk);
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).total_cmp(&m.get(j, j)));
    let values = order.iter().map(|&i| m.get(i, i)).collect();
    let vectors = Matrix::from_fn(n, |r, c| v.get(r, order[c]));
    (values, vectors)
}

pub fn symmetric_eigenvalues(a: &Matrix) -> Vec<f64> {
    symmetric_eigen(a).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lu_determinant_and_solve() {
        let a = Matrix::from_fn(3, |i, j| [[2.0, 1.0, 1.0], [1.0, 3.0, 2.0], [1.0, 0.0, 0.0]][i][j]);
        let lu = Lu::new(&a);
        assert!((lu.determinant() - (-1.0)).abs() < 1e-14);
        let x = lu.solve(&[4.0, 5.0, 6.0]);
        let b = a.mul_vec(&x);
        for (bi, ei) in b.iter().zip([4.0, 5.0, 6.0]) {
            assert!((bi - ei).abs() < 1e-12);
        }
        let prod = a.mul(&lu.inverse());
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((prod.get(i, j) - e).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn singular_matrix_has_zero_pivot() {
        let a = Matrix::from_fn(2, |i, _| if i == 0 { 1.0 } else { 2.0 });
        let lu = Lu::new(&a);
        assert_eq!(lu.determinant(), 0.0);
        assert_eq!(lu.min_pivot(), 0.0);
    }

    #[test]
    fn jacobi_matches_known_spectrum() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        let a = Matrix::from_fn(2, |i, j| if i == j { 2.0 } else { 1.0 });
        let (vals, vecs) = symmetric_eigen(&a);
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] - 3.0).abs() < 1e-14);
        let v1 = [vecs.get(0, 1), vecs.get(1, 1)];
        let av = a.mul_vec(&v1);
        assert!((av[0] - 3.0 * v1[0]).abs() < 1e-13);

        let diag = Matrix::from_fn(4, |i, j| if i == j { [1.0, -1.0, -1.0, -1.0][i] } else { 0.0 });
        assert_eq!(symmetric_eigenvalues(&diag), vec![-1.0, -1.0, -1.0, 1.0]);
    }
}
