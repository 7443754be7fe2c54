use super::Scalar;

/// A 3×3 matrix over any commutative ring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3<T> {
    pub rows: [[T; 3]; 3],
}

impl<T: Scalar> Mat3<T> {
    pub fn new(rows: [[T; 3]; 3]) -> Self {
        Mat3 { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Mat3 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Mat3<U> {
        Mat3::from_fn(|i, j| f(&self.rows[i][j]))
    }

    pub fn det(&self) -> T {
        det3(self)
    }

    pub fn mul(&self, other: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| {
            (0..3).fold(T::zero(), |acc, k| {
                acc + self.rows[i][k].clone() * other.rows[k][j].clone()
            })
        })
    }

    pub fn apply(&self, v: &[T; 3]) -> [T; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(T::zero(), |acc, k| acc + self.rows[i][k].clone() * v[k].clone())
        })
    }

    /// `self^exp` by binary powering.
    pub fn pow(&self, mut exp: u64) -> Mat3<T> {
        let mut base = self.clone();
        let mut acc = Mat3::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Copy with column `col` replaced by `v` (Cramer's rule).
    pub fn with_column(&self, col: usize, v: [T; 3]) -> Mat3<T> {
        let mut m = self.clone();
        for (row, x) in m.rows.iter_mut().zip(v) {
            row[col] = x;
        }
        m
    }
}

/// Cofactor expansion along the first row.
pub fn det3<T: Scalar>(m: &Mat3<T>) -> T {
    let [[a, b, c], [d, e, f], [g, h, i]] = &m.rows;
    let minor = |p: &T, q: &T, r: &T, s: &T| p.clone() * s.clone() - q.clone() * r.clone();
    a.clone() * minor(e, f, h, i) - b.clone() * minor(d, f, g, i) + c.clone() * minor(d, e, g, h)
}
