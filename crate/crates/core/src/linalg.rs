//! Sparse exact linear algebra: vectors, matrices acting on column vectors,
//! echelon forms, subspaces and quotient maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalars::{FieldSpec, Scalar};

/// A sparse vector: nonzero `(index, value)` pairs sorted by index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec {
    entries: Vec<(usize, Scalar)>,
}

impl SVec {
    pub fn zero() -> Self {
        SVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, field: FieldSpec) -> Self {
        SVec {
            entries: vec![(index, field.one())],
        }
    }

    /// Builds a vector from arbitrary entries; repeated indices are summed and zeros dropped.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, x) in entries {
            match out.last_mut() {
                Some((j, y)) if *j == i => *y = &*y + &x,
                _ => out.push((i, x)),
            }
        }
        out.retain(|(_, x)| !x.is_zero());
        SVec { entries: out }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: FieldSpec) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn trailing(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    /// Largest index plus one, or 0 for the zero vector.
    pub fn support_bound(&self) -> usize {
        self.trailing().map_or(0, |i| i + 1)
    }

    pub fn scale(&self, s: &Scalar) -> SVec {
        if s.is_zero() {
            return SVec::zero();
        }
        SVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x * s)).collect(),
        }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, other: &SVec, s: &Scalar) -> SVec {
        if s.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, &b[j].1 * s));
                j += 1;
            } else {
                let v = &a[i].1 + &(&b[j].1 * s);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SVec { entries: out }
    }

    pub fn neg(&self) -> SVec {
        SVec {
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    pub fn dot(&self, other: &SVec, field: FieldSpec) -> Scalar {
        let (a, b) = (&self.entries, &other.entries);
        let mut acc = field.zero();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc = &acc + &(&a[i].1 * &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Re-indexes every entry through `f`, which must be strictly increasing on the support.
    pub fn map_monotone(&self, f: impl Fn(usize) -> usize) -> SVec {
        SVec {
            entries: self.entries.iter().map(|(i, x)| (f(*i), x.clone())).collect(),
        }
    }

    /// Re-indexes every entry through an arbitrary injective `f`.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SVec {
        let mut entries: Vec<_> = self.entries.iter().map(|(i, x)| (f(*i), x.clone())).collect();
        entries.sort_by_key(|(i, _)| *i);
        SVec { entries }
    }

    /// Coordinates `i` with `lo <= i < hi`, shifted down by `lo`.
    pub fn window(&self, lo: usize, hi: usize) -> SVec {
        SVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, x)| (i - lo, x.clone()))
                .collect(),
        }
    }

    /// Tensor product of coordinate vectors, `(i, j) ↦ i * right_dim + j`.
    pub fn kron(&self, other: &SVec, right_dim: usize) -> SVec {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * right_dim + j, x * y));
            }
        }
        SVec { entries }
    }
}

impl Add for &SVec {
    type Output = SVec;
    fn add(self, rhs: &SVec) -> SVec {
        match rhs.entries.first() {
            None => self.clone(),
            Some((_, x)) => self.add_scaled(rhs, &x.field().one()),
        }
    }
}

impl Sub for &SVec {
    type Output = SVec;
    fn sub(self, rhs: &SVec) -> SVec {
        self + &rhs.neg()
    }
}

/// Dense scratch space for summing many sparse rows of one width.
struct Accumulator {
    values: Vec<Option<Scalar>>,
    touched: Vec<usize>,
}

impl Accumulator {
    fn new(width: usize) -> Self {
        Accumulator {
            values: vec![None; width],
            touched: Vec::new(),
        }
    }

    fn add_scaled(&mut self, row: &SVec, s: &Scalar) {
        for (j, x) in row.entries() {
            let term = x * s;
            match &mut self.values[*j] {
                Some(v) => *v = &*v + &term,
                slot => {
                    *slot = Some(term);
                    self.touched.push(*j);
                }
            }
        }
    }

    fn drain(&mut self) -> SVec {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for j in self.touched.drain(..) {
            if let Some(v) = self.values[j].take() {
                if !v.is_zero() {
                    entries.push((j, v));
                }
            }
        }
        SVec { entries }
    }
}

/// An exact matrix stored by sparse rows. Maps act on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    rows: Vec<SVec>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, nrows: usize, ncols: usize) -> Self {
        Matrix {
            field,
            nrows,
            ncols,
            rows: vec![SVec::zero(); nrows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Matrix::scalar(field, n, &field.one())
    }

    pub fn scalar(field: FieldSpec, n: usize, s: &Scalar) -> Self {
        let rows = (0..n)
            .map(|i| {
                if s.is_zero() {
                    SVec::zero()
                } else {
                    SVec {
                        entries: vec![(i, s.clone())],
                    }
                }
            })
            .collect();
        Matrix {
            field,
            nrows: n,
            ncols: n,
            rows,
        }
    }

    pub fn from_rows(field: FieldSpec, ncols: usize, rows: Vec<SVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.support_bound() <= ncols));
        Matrix {
            field,
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, nrows: usize, cols: &[SVec]) -> Self {
        Matrix::from_rows(field, nrows, cols.to_vec()).transpose()
    }

    pub fn from_dense(field: FieldSpec, nrows: usize, ncols: usize, values: &[Scalar]) -> Result<Self> {
        if values.len() != nrows * ncols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {nrows}x{ncols} matrix, got {}",
                nrows * ncols,
                values.len()
            )));
        }
        for v in values {
            field.check(v)?;
        }
        let rows = (0..nrows)
            .map(|r| SVec::from_dense(&values[r * ncols..(r + 1) * ncols]))
            .collect();
        Ok(Matrix {
            field,
            nrows,
            ncols,
            rows,
        })
    }

    pub fn from_fn(field: FieldSpec, nrows: usize, ncols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let rows = (0..nrows)
            .map(|i| SVec::from_dense(&(0..ncols).map(|j| f(i, j)).collect::<Vec<_>>()))
            .collect();
        Matrix {
            field,
            nrows,
            ncols,
            rows,
        }
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(field: FieldSpec, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut rows = vec![SVec::zero(); n];
        for (j, &i) in perm.iter().enumerate() {
            rows[i] = SVec::unit(j, field);
        }
        Matrix {
            field,
            nrows: n,
            ncols: n,
            rows,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn row(&self, i: usize) -> &SVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(j).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        let row = &mut self.rows[i];
        let current = row.get(j).cloned().unwrap_or_else(|| self.field.zero());
        let delta = &value - &current;
        *row = row.add_scaled(&SVec::unit(j, self.field), &delta);
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .map(|r| r.to_dense(self.ncols, self.field))
            .collect()
    }

    /// Row-major flattening of all entries.
    pub fn to_flat(&self) -> Vec<Scalar> {
        self.to_dense().into_iter().flatten().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SVec::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols && *self == Matrix::identity(self.field, self.nrows)
    }

    /// `M x` for a column vector `x`.
    pub fn apply(&self, x: &SVec) -> SVec {
        debug_assert!(x.support_bound() <= self.ncols);
        if x.is_zero() {
            return SVec::zero();
        }
        let entries = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let v = r.dot(x, self.field);
                (!v.is_zero()).then_some((i, v))
            })
            .collect();
        SVec { entries }
    }

    /// Column `j` as a sparse vector.
    pub fn column(&self, j: usize) -> SVec {
        let entries = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(j).map(|x| (i, x.clone())))
            .collect();
        SVec { entries }
    }

    pub fn columns(&self) -> Vec<SVec> {
        self.transpose().rows
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.ncols != rhs.nrows {
            return Err(Error::Shape(format!(
                "cannot compose {}x{} after {}x{}",
                self.nrows, self.ncols, rhs.nrows, rhs.ncols
            )));
        }
        if self.field != rhs.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: rhs.field.to_string(),
            });
        }
        let mut acc = Accumulator::new(rhs.ncols);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                for (k, a) in r.entries() {
                    acc.add_scaled(&rhs.rows[*k], a);
                }
                acc.drain()
            })
            .collect();
        Ok(Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        })
    }

    fn checked_combine(&self, rhs: &Matrix, s: &Scalar) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.nrows, self.ncols, rhs.nrows, rhs.ncols
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| a.add_scaled(b, s))
            .collect();
        Ok(Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        })
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.checked_combine(rhs, &self.field.one())
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.checked_combine(rhs, &self.field.from_i64(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.scale(s)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.entries() {
                cols[*j].push((i, x.clone()));
            }
        }
        Matrix {
            field: self.field,
            nrows: self.ncols,
            ncols: self.nrows,
            rows: cols.into_iter().map(|entries| SVec { entries }).collect(),
        }
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut rows = Vec::with_capacity(self.nrows * rhs.nrows);
        for a in &self.rows {
            for b in &rhs.rows {
                rows.push(a.kron(b, rhs.ncols));
            }
        }
        Matrix {
            field: self.field,
            nrows: self.nrows * rhs.nrows,
            ncols: self.ncols * rhs.ncols,
            rows,
        }
    }

    /// `I_left ⊗ self ⊗ I_right`.
    pub fn pad(&self, left: usize, right: usize) -> Matrix {
        let mut rows = Vec::with_capacity(left * self.nrows * right);
        for l in 0..left {
            for r in &self.rows {
                for k in 0..right {
                    let base = l * self.ncols * right;
                    rows.push(r.map_monotone(|j| base + j * right + k));
                }
            }
        }
        Matrix {
            field: self.field,
            nrows: left * self.nrows * right,
            ncols: left * self.ncols * right,
            rows,
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: FieldSpec, ncols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().flat_map(|b| b.rows.iter().cloned()).collect();
        Matrix::from_rows(field, ncols, rows)
    }

    pub fn select_rows(&self, indices: &[usize]) -> Matrix {
        Matrix::from_rows(
            self.field,
            self.ncols,
            indices.iter().map(|&i| self.rows[i].clone()).collect(),
        )
    }

    /// Smallest column `j` with `self e_j ≠ other e_j`.
    pub fn first_difference(&self, other: &Matrix) -> Option<usize> {
        self.rows
            .iter()
            .zip(&other.rows)
            .filter_map(|(a, b)| (a - b).leading())
            .min()
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field, self.ncols, PivotOrder::Leading);
        for r in &self.rows {
            ech.insert(r.clone());
        }
        ech.rank()
    }

    pub fn kernel(&self) -> Subspace {
        let mut ech = Echelon::new(self.field, self.ncols, PivotOrder::Leading);
        for r in &self.rows {
            ech.insert(r.clone());
        }
        let pivots: BTreeMap<usize, &SVec> = ech.rows.iter().map(|r| (r.leading().unwrap(), r)).collect();
        let mut basis = Vec::new();
        let minus_one = self.field.from_i64(-1);
        for free in (0..self.ncols).filter(|j| !pivots.contains_key(j)) {
            let mut entries = vec![(free, self.field.one())];
            for (&p, r) in &pivots {
                if let Some(x) = r.get(free) {
                    entries.push((p, x * &minus_one));
                }
            }
            basis.push(SVec::from_entries(entries));
        }
        Subspace::span(self.field, self.ncols, basis)
    }

    /// The column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.nrows, self.transpose().rows)
    }

    /// Image of a subspace of the source.
    pub fn image_of(&self, s: &Subspace) -> Subspace {
        Subspace::span(self.field, self.nrows, s.basis().iter().map(|v| self.apply(v)).collect())
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.nrows != self.ncols {
            return Err(Error::Shape(format!("{}x{} matrix is not square", self.nrows, self.ncols)));
        }
        let n = self.nrows;
        let mut ech = Echelon::new(self.field, 2 * n, PivotOrder::Leading);
        for (i, r) in self.rows.iter().enumerate() {
            let aug = SVec::from_entries(
                r.entries()
                    .iter()
                    .cloned()
                    .chain(std::iter::once((n + i, self.field.one())))
                    .collect(),
            );
            ech.insert(aug);
        }
        let mut rows = vec![SVec::zero(); n];
        for r in &ech.rows {
            let p = r.leading().unwrap();
            if p >= n {
                return Err(Error::Domain("matrix is singular".into()));
            }
            rows[p] = r.window(n, 2 * n);
        }
        Ok(Matrix::from_rows(self.field, n, rows))
    }

    /// A particular solution of `self x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &SVec) -> Option<SVec> {
        let n = self.ncols;
        let mut ech = Echelon::new(self.field, n + 1, PivotOrder::Leading);
        for (i, r) in self.rows.iter().enumerate() {
            let mut aug = r.clone();
            if let Some(x) = b.get(i) {
                aug = aug.add_scaled(&SVec::unit(n, self.field), x);
            }
            ech.insert(aug);
        }
        let mut entries = Vec::new();
        for r in &ech.rows {
            let p = r.leading().unwrap();
            if p == n {
                return None;
            }
            if let Some(x) = r.get(n) {
                entries.push((p, x.clone()));
            }
        }
        Some(SVec::from_entries(entries))
    }

    /// Entries as strings, row-major.
    pub fn to_strings(&self) -> Vec<String> {
        self.to_flat().iter().map(|x| x.to_string()).collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.nrows, self.ncols, self.field)?;
        for r in self.to_dense() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix sum shape")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("matrix difference shape")
    }
}

/// Which end of a row is its pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    /// Pivot at the smallest index.
    Leading,
    /// Pivot at the largest index; the non-pivot columns then form the
    /// lexicographically least complement.
    Trailing,
}

/// Incrementally maintained fully reduced echelon form.
///
/// Every row has pivot entry 1 and every other row vanishes on its pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    dim: usize,
    order: PivotOrder,
    rows: Vec<SVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, dim: usize, order: PivotOrder) -> Self {
        Echelon {
            field,
            dim,
            order,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    fn pivot_of(&self, v: &SVec) -> Option<usize> {
        match self.order {
            PivotOrder::Leading => v.leading(),
            PivotOrder::Trailing => v.trailing(),
        }
    }

    /// Normal form of `v` modulo the row space: supported on non-pivot columns.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut acc = Accumulator::new(self.dim);
        acc.add_scaled(v, &self.field.one());
        let minus_one = self.field.from_i64(-1);
        for (i, x) in v.entries() {
            if let Some(&r) = self.pivot_row.get(i) {
                acc.add_scaled(&self.rows[r], &(x * &minus_one));
            }
        }
        acc.drain()
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the row space; returns the new normalized row if the rank grew.
    pub fn insert(&mut self, v: SVec) -> Option<SVec> {
        let r = self.reduce(&v);
        let p = self.pivot_of(&r)?;
        let inv = r.get(p).unwrap().inv().expect("pivot is nonzero");
        let r = r.scale(&inv);
        let minus_one = self.field.from_i64(-1);
        for row in self.rows.iter_mut() {
            if let Some(x) = row.get(p) {
                let s = x * &minus_one;
                *row = row.add_scaled(&r, &s);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(r.clone());
        Some(r)
    }

    /// Coordinates of a member `v` in the row basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        let mut coords = vec![self.field.zero(); self.rows.len()];
        for (i, x) in v.entries() {
            if let Some(&r) = self.pivot_row.get(i) {
                coords[r] = x.clone();
            }
        }
        Some(coords)
    }

    /// Number of rows whose pivot is below `bound`.
    pub fn count_pivots_below(&self, bound: usize) -> usize {
        self.pivot_row.range(..bound).count()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.field, self.dim, self.rows)
    }
}

/// A subspace of `K^ambient` held as a canonical reduced echelon basis with
/// leading pivots, so equal subspaces have equal bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<SVec>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {} over {}) ", self.dim(), self.ambient, self.field)?;
        f.debug_list()
            .entries(self.basis.iter().map(|v| v.to_dense(self.ambient, self.field)))
            .finish()
    }
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| SVec::unit(i, field)).collect(),
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: Vec<SVec>) -> Self {
        let mut ech = Echelon::new(field, ambient, PivotOrder::Leading);
        for v in vectors {
            ech.insert(v);
        }
        let mut basis = ech.rows;
        basis.sort_by_key(|r| r.leading());
        Subspace {
            field,
            ambient,
            basis,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn echelon(&self) -> Echelon {
        let mut pivot_row = BTreeMap::new();
        for (k, r) in self.basis.iter().enumerate() {
            pivot_row.insert(r.leading().unwrap(), k);
        }
        Echelon {
            field: self.field,
            dim: self.ambient,
            order: PivotOrder::Leading,
            rows: self.basis.clone(),
            pivot_row,
        }
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let ech = self.echelon();
        other.basis.iter().all(|v| ech.contains(v))
    }

    /// Coordinates of a member in the canonical basis.
    pub fn coordinates(&self, v: &SVec) -> Option<Vec<Scalar>> {
        self.echelon().coordinates(v)
    }

    /// Matrix whose rows are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.basis.clone())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.field,
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned().collect(),
        )
    }

    /// Orthogonal complement for the standard bilinear pairing.
    pub fn annihilator(&self) -> Subspace {
        self.basis_matrix().kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// `self ⊗ other` inside `K^{a} ⊗ K^{b}`.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let vectors = self
            .basis
            .iter()
            .flat_map(|u| other.basis.iter().map(move |w| u.kron(w, other.ambient)))
            .collect();
        Subspace::span(self.field, self.ambient * other.ambient, vectors)
    }
}

/// Projection of `K^ambient` onto the quotient by a subspace, using the
/// non-pivot columns of a trailing-pivot echelon form as the normal basis.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    echelon: Echelon,
    normal: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl QuotientMap {
    pub fn new(relations: &Subspace) -> Self {
        let mut ech = Echelon::new(relations.field, relations.ambient, PivotOrder::Trailing);
        for v in &relations.basis {
            ech.insert(v.clone());
        }
        QuotientMap::from_echelon(ech)
    }

    pub fn from_echelon(echelon: Echelon) -> Self {
        assert_eq!(echelon.order, PivotOrder::Trailing);
        let normal: Vec<usize> = (0..echelon.dim).filter(|j| !echelon.is_pivot(*j)).collect();
        let mut position = vec![None; echelon.dim];
        for (k, &j) in normal.iter().enumerate() {
            position[j] = Some(k);
        }
        QuotientMap {
            echelon,
            normal,
            position,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.echelon.field
    }

    pub fn ambient(&self) -> usize {
        self.echelon.dim
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Ambient indices of the normal basis vectors, ascending.
    pub fn normal_basis(&self) -> &[usize] {
        &self.normal
    }

    pub fn relations(&self) -> &Echelon {
        &self.echelon
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &SVec) -> SVec {
        self.echelon
            .reduce(v)
            .map_monotone(|j| self.position[j].expect("reduced vector lies on normal columns"))
    }

    /// The normal-basis representative of a quotient vector.
    pub fn lift(&self, v: &SVec) -> SVec {
        v.map_monotone(|k| self.normal[k])
    }

    pub fn is_relation(&self, v: &SVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn projection_matrix(&self) -> Matrix {
        let field = self.field();
        let cols: Vec<SVec> = (0..self.ambient()).map(|j| self.project(&SVec::unit(j, field))).collect();
        Matrix::from_columns(field, self.dim(), &cols)
    }

    pub fn section_matrix(&self) -> Matrix {
        let field = self.field();
        let cols: Vec<SVec> = self.normal.iter().map(|&j| SVec::unit(j, field)).collect();
        Matrix::from_columns(field, self.ambient(), &cols)
    }
}

/// Coordinates with respect to a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Frame {
    field: FieldSpec,
    basis: Vec<SVec>,
    pivots: Vec<usize>,
    inverse: Matrix,
}

impl Frame {
    pub fn new(field: FieldSpec, ambient: usize, basis: Vec<SVec>) -> Result<Self> {
        let mut ech = Echelon::new(field, ambient, PivotOrder::Leading);
        for v in &basis {
            if ech.insert(v.clone()).is_none() {
                return Err(Error::Domain("frame vectors are linearly dependent".into()));
            }
        }
        let pivots: Vec<usize> = ech.pivots().collect();
        let k = basis.len();
        let square = Matrix::from_fn(field, k, k, |i, j| {
            basis[j].get(pivots[i]).cloned().unwrap_or_else(|| field.zero())
        });
        Ok(Frame {
            field,
            basis,
            pivots,
            inverse: square.inverse()?,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SVec] {
        &self.basis
    }

    /// Coefficients of `v` in the frame, or `None` when `v` is outside its span.
    pub fn coordinates(&self, v: &SVec) -> Option<SVec> {
        let restricted = SVec::from_entries(
            self.pivots
                .iter()
                .enumerate()
                .filter_map(|(i, p)| v.get(*p).map(|x| (i, x.clone())))
                .collect(),
        );
        let coords = self.inverse.apply(&restricted);
        (self.combine(&coords) == *v).then_some(coords)
    }

    /// `Σ coords_i basis_i`.
    pub fn combine(&self, coords: &SVec) -> SVec {
        let mut out = SVec::zero();
        for (i, x) in coords.entries() {
            out = out.add_scaled(&self.basis[*i], x);
        }
        out
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}
