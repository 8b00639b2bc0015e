use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::polyalg::{MultiPoly, UniPoly};

/// Square matrix over a [`Field`], row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    n: usize,
    data: Vec<Scalar>,
}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.data.hash(state);
    }
}

impl Matrix {
    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn zero(field: &Field, n: usize) -> Matrix {
        Matrix { field: field.clone(), n, data: vec![field.zero(); n * n] }
    }

    /// Row-major entries; length must be n².
    pub fn from_entries(field: &Field, n: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: data.len() });
        }
        for x in &data {
            if x.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
            }
        }
        Ok(Matrix { field: field.clone(), n, data })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Scalar>]) -> Result<Matrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Matrix::from_entries(field, n, data)
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&v| field.from_int(v)).collect()).collect();
        Matrix::from_rows(field, &rows).expect("square integer matrix")
    }

    pub fn diag(field: &Field, d: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(field, d.len());
        for (i, x) in d.iter().enumerate() {
            m.data[i * d.len() + i] = x.clone();
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        Ok(self * other)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        Matrix {
            field: self.field.clone(),
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix {
            field: self.field.clone(),
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field.clone(), n: self.n, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut m = self.clone();
        for i in 0..n {
            for j in 0..n {
                m.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        m
    }

    pub fn trace(&self) -> Scalar {
        (0..self.n).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Row echelon form in place; returns (rank, sign of the row permutation, pivot product).
    fn eliminate(rows: &mut [Vec<Scalar>], ncols: usize) -> (usize, bool, Option<Scalar>) {
        let field = rows.first().and_then(|r| r.first()).map(|x| x.field().clone());
        let mut rank = 0;
        let mut odd = false;
        let mut prod = field.as_ref().map(|f| f.one());
        for col in 0..ncols {
            let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                prod = None;
                continue;
            };
            if piv != rank {
                rows.swap(piv, rank);
                odd = !odd;
            }
            let inv = rows[rank][col].inv().unwrap();
            if let Some(p) = prod.as_mut() {
                *p = &*p * &rows[rank][col];
            }
            for i in rank + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let u = &rows[i][col] * &inv;
                for k in col..ncols {
                    let v = &u * &rows[rank][k];
                    rows[i][k] = &rows[i][k] - &v;
                }
            }
            rank += 1;
        }
        (rank, odd, prod)
    }

    pub fn det(&self) -> Scalar {
        if self.n == 0 {
            return self.field.one();
        }
        let mut rows = self.rows();
        let (rank, odd, prod) = Matrix::eliminate(&mut rows, self.n);
        match prod {
            Some(p) if rank == self.n => {
                if odd {
                    -&p
                } else {
                    p
                }
            }
            _ => self.field.zero(),
        }
    }

    pub fn rank(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut rows = self.rows();
        Matrix::eliminate(&mut rows, self.n).0
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let mut aug: Vec<Vec<Scalar>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&i| !aug[i][col].is_zero()).ok_or(Error::SingularMatrix)?;
            aug.swap(piv, col);
            let inv = aug[col][col].inv().unwrap();
            for k in 0..2 * n {
                aug[col][k] = &aug[col][k] * &inv;
            }
            for i in 0..n {
                if i == col || aug[i][col].is_zero() {
                    continue;
                }
                let u = aug[i][col].clone();
                for k in 0..2 * n {
                    let v = &u * &aug[col][k];
                    aug[i][k] = &aug[i][k] - &v;
                }
            }
        }
        let data = aug.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Ok(Matrix { field: self.field.clone(), n, data })
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// det(t·I − M) via reduction to upper Hessenberg form.
    pub fn charpoly(&self) -> UniPoly {
        let n = self.n;
        let f = &self.field;
        let mut h = self.rows();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else { continue };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = h[m][m - 1].inv().unwrap();
            for j in m + 1..n {
                let u = &h[j][m - 1] * &inv;
                if u.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let v = &u * &h[m][k];
                    h[j][k] = &h[j][k] - &v;
                }
                for row in h.iter_mut() {
                    let v = &u * &row[j];
                    row[m] = &row[m] + &v;
                }
            }
        }
        // p_m = (t − h_mm) p_{m−1} − Σ_{i<m} h_im (∏_{j=i+1..m} h_{j,j−1}) p_{i−1}, 1-based
        let t = UniPoly::new(f, vec![f.zero(), f.one()]);
        let mut p: Vec<UniPoly> = vec![UniPoly::one(f)];
        for m in 1..=n {
            let lin = &t - &UniPoly::constant(h[m - 1][m - 1].clone());
            let mut pm = &lin * &p[m - 1];
            let mut prod = f.one();
            for i in (1..m).rev() {
                prod = &prod * &h[i][i - 1];
                if prod.is_zero() {
                    break;
                }
                let c = &h[i - 1][m - 1] * &prod;
                if !c.is_zero() {
                    pm = &pm - &p[i - 1].scale(&c);
                }
            }
            p.push(pm);
        }
        p.pop().unwrap()
    }

    /// Images of the variables under g: g·x_j = Σ_i M_ij x_i.
    pub fn variable_images(&self) -> Vec<MultiPoly> {
        let n = self.n;
        (0..n)
            .map(|j| {
                let mut out = MultiPoly::zero(&self.field, n);
                for i in 0..n {
                    out = &out + &MultiPoly::var(&self.field, n, i).scale(self.get(i, j));
                }
                out
            })
            .collect()
    }

    /// g·f for f in k[x_1..x_n]; a left action.
    pub fn act(&self, f: &MultiPoly) -> MultiPoly {
        f.substitute(&self.variable_images())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.field.zero();
                for k in 0..n {
                    let a = &self.data[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                data.push(acc);
            }
        }
        Matrix { field: self.field.clone(), n, data }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
