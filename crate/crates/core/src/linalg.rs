//! Exact Gaussian elimination over a field.
//!
//! Pivoting is deterministic: the first column with a nonzero entry, and in
//! that column the first row in input order. Bases derived from these routines
//! are therefore reproducible.

use crate::exactnum::{Field, Scalar};

/// Reduced row echelon form. Returns the nonzero rows (pivot entries 1) and
/// their pivot columns, ascending.
pub fn rref(field: &Field, mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(piv, r);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for k in col..ncols {
                rows[r][k] = &rows[r][k] * &inv;
            }
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let u = rows[i][col].clone();
            for k in col..ncols {
                if rows[r][k].is_zero() {
                    continue;
                }
                let v = &u * &rows[r][k];
                rows[i][k] = &rows[i][k] - &v;
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    debug_assert!(rows.iter().all(|row| row.iter().all(|x| x.field() == field)));
    (rows, pivots)
}

/// Basis of {v : A v = 0}, one vector per free column (ascending), with a 1 in
/// that column.
pub fn nullspace(field: &Field, rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let (red, pivots) = rref(field, rows, ncols);
    let mut out = Vec::new();
    let mut pi = 0;
    for free in 0..ncols {
        if pi < pivots.len() && pivots[pi] == free {
            pi += 1;
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        out.push(v);
    }
    out
}

/// One solution x of Σ_j x_j·columns[j] = target (free unknowns set to 0).
pub fn solve(field: &Field, columns: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = columns.len();
    let rows: Vec<Vec<Scalar>> = (0..target.len())
        .map(|i| columns.iter().map(|c| c[i].clone()).chain(std::iter::once(target[i].clone())).collect())
        .collect();
    let (red, pivots) = rref(field, rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![field.zero(); k];
    for (row, &pc) in red.iter().zip(&pivots) {
        x[pc] = row[k].clone();
    }
    Some(x)
}

/// Incrementally grown span, kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(field: &Field, ncols: usize) -> Span {
        Span { field: field.clone(), ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// v minus its projection along the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let u = v[pc].clone();
            for k in pc..self.ncols {
                if !row[k].is_zero() {
                    v[k] = &v[k] - &(&u * &row[k]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds v; false if it was already in the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pc].inv().unwrap();
        for x in r.iter_mut().skip(pc) {
            *x = &*x * &inv;
        }
        for row in self.rows.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let u = row[pc].clone();
            for k in pc..self.ncols {
                if !r[k].is_zero() {
                    row[k] = &row[k] - &(&u * &r[k]);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.rows.insert(at, r);
        self.pivots.insert(at, pc);
        true
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn ints(f: &Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn rref_and_nullspace() {
        let q = Field::rational();
        let rows = vec![ints(&q, &[1, 2, 3]), ints(&q, &[2, 4, 6]), ints(&q, &[0, 1, 1])];
        let (red, piv) = rref(&q, rows.clone(), 3);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(red, vec![ints(&q, &[1, 0, 1]), ints(&q, &[0, 1, 1])]);
        let ns = nullspace(&q, rows, 3);
        assert_eq!(ns, vec![ints(&q, &[-1, -1, 1])]);
    }

    #[test]
    fn solve_consistent_and_not() {
        let f = Field::prime(5).unwrap();
        let cols = vec![ints(&f, &[1, 0, 1]), ints(&f, &[0, 1, 1])];
        assert_eq!(solve(&f, &cols, &ints(&f, &[2, 3, 0])).unwrap(), ints(&f, &[2, 3]));
        assert!(solve(&f, &cols, &ints(&f, &[2, 3, 1])).is_none());
    }

    #[test]
    fn span_membership() {
        let q = Field::rational();
        let mut s = Span::new(&q, 3);
        assert!(s.insert(&ints(&q, &[0, 1, 1])));
        assert!(s.insert(&ints(&q, &[1, 1, 0])));
        assert!(!s.insert(&ints(&q, &[1, 2, 1])));
        assert!(s.contains(&ints(&q, &[1, 0, -1])));
        assert!(!s.contains(&ints(&q, &[0, 0, 1])));
        assert_eq!(s.dim(), 2);
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_solutions(v in prop::collection::vec(-3i64..4, 12)) {
            let f = Field::prime(7).unwrap();
            let rows: Vec<Vec<Scalar>> = v.chunks(4).map(|c| ints(&f, c)).collect();
            let ns = nullspace(&f, rows.clone(), 4);
            let (red, _) = rref(&f, rows.clone(), 4);
            prop_assert_eq!(ns.len() + red.len(), 4);
            for x in &ns {
                for r in &rows {
                    let dot = r.iter().zip(x).fold(f.zero(), |acc, (a, b)| &acc + &(a * b));
                    prop_assert!(dot.is_zero());
                }
            }
            let mut span = Span::new(&f, 4);
            for r in &rows {
                span.insert(r);
            }
            prop_assert_eq!(span.dim(), red.len());
        }
    }
}
