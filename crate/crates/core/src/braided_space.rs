//! Braided vector spaces, braided brackets and categorical subspaces.
//!
//! Maps act on column coordinates; `e_i ⊗ e_j` has index `i * n + j`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SVec, Subspace};
use crate::scalars::{FieldSpec, Scalar};

/// A finite-dimensional space `V` with a solution `c` of the braid equation on `V ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedSpace {
    field: FieldSpec,
    dim: usize,
    c: Matrix,
}

/// Outcome of a matrix identity check: the first basis vector where the sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub witness: Option<usize>,
}

impl IdentityCheck {
    pub fn compare(lhs: &Matrix, rhs: &Matrix) -> Self {
        let witness = lhs.first_difference(rhs);
        IdentityCheck {
            holds: witness.is_none(),
            witness,
        }
    }

    fn and(self, other: IdentityCheck) -> IdentityCheck {
        if self.holds {
            other
        } else {
            self
        }
    }
}

impl BraidedSpace {
    /// Builds a braided space, rejecting matrices that fail the braid equation.
    pub fn new(field: FieldSpec, dim: usize, c: Matrix) -> Result<Self> {
        let v = BraidedSpace::new_unchecked(field, dim, c)?;
        let check = v.check_braid_equation();
        match check.witness {
            None => Ok(v),
            Some(witness) => Err(Error::NotBraided { witness }),
        }
    }

    /// Builds a braided space without testing the braid equation; only shapes are checked.
    pub fn new_unchecked(field: FieldSpec, dim: usize, c: Matrix) -> Result<Self> {
        let n2 = dim * dim;
        if c.shape() != (n2, n2) {
            return Err(Error::Shape(format!(
                "braiding on a {dim}-dimensional space must be {n2}x{n2}, got {}x{}",
                c.nrows(),
                c.ncols()
            )));
        }
        if c.field() != field {
            return Err(Error::FieldMismatch {
                left: field.to_string(),
                right: c.field().to_string(),
            });
        }
        Ok(BraidedSpace { field, dim, c })
    }

    /// The flip `x ⊗ y ↦ y ⊗ x`.
    pub fn flip(field: FieldSpec, n: usize) -> Self {
        let perm: Vec<usize> = (0..n * n).map(|k| (k % n) * n + k / n).collect();
        BraidedSpace {
            field,
            dim: n,
            c: Matrix::permutation(field, &perm),
        }
    }

    /// `c = μ Id_{V⊗V}`.
    pub fn scalar(field: FieldSpec, n: usize, mu: &Scalar) -> Result<Self> {
        field.check(mu)?;
        Ok(BraidedSpace {
            field,
            dim: n,
            c: Matrix::scalar(field, n * n, mu),
        })
    }

    /// Diagonal braiding `e_i ⊗ e_j ↦ q_ij e_j ⊗ e_i`.
    pub fn diagonal(field: FieldSpec, q: &[Vec<Scalar>]) -> Result<Self> {
        let n = q.len();
        if q.iter().any(|row| row.len() != n) {
            return Err(Error::Shape("diagonal braiding needs a square matrix of q_ij".into()));
        }
        let mut c = Matrix::zero(field, n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                field.check(&q[i][j])?;
                c.set(j * n + i, i * n + j, q[i][j].clone());
            }
        }
        Ok(BraidedSpace { field, dim: n, c })
    }

    /// Drinfeld-Jimbo symmetry of type A, normalized to satisfy `(c + 1)(c - q²) = 0`:
    /// `e_i⊗e_i ↦ q² e_i⊗e_i`, and for `i < j`, `e_i⊗e_j ↦ q e_j⊗e_i`,
    /// `e_j⊗e_i ↦ q e_i⊗e_j + (q² - 1) e_j⊗e_i`.
    pub fn dj_hecke(field: FieldSpec, n: usize, q: &Scalar) -> Result<Self> {
        field.check(q)?;
        if q.is_zero() {
            return Err(Error::Domain("dj_hecke needs q ≠ 0".into()));
        }
        let q2 = q * q;
        let q2m1 = &q2 - &field.one();
        let mut c = Matrix::zero(field, n * n, n * n);
        for i in 0..n {
            c.set(i * n + i, i * n + i, q2.clone());
            for j in i + 1..n {
                let (ij, ji) = (i * n + j, j * n + i);
                c.set(ji, ij, q.clone());
                c.set(ij, ji, q.clone());
                c.set(ji, ji, q2m1.clone());
            }
        }
        BraidedSpace::new(field, n, c)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn braiding(&self) -> &Matrix {
        &self.c
    }

    /// `c ⊗ Id_V` on `V^{⊗3}`.
    pub fn c1(&self) -> Matrix {
        self.c.pad(1, self.dim)
    }

    /// `Id_V ⊗ c` on `V^{⊗3}`.
    pub fn c2(&self) -> Matrix {
        self.c.pad(self.dim, 1)
    }

    fn id(&self, power: u32) -> Matrix {
        Matrix::identity(self.field, self.dim.pow(power))
    }

    pub fn check_braid_equation(&self) -> IdentityCheck {
        let (c1, c2) = (self.c1(), self.c2());
        IdentityCheck::compare(&(&(&c1 * &c2) * &c1), &(&(&c2 * &c1) * &c2))
    }

    pub fn check_hecke(&self, lambda: &Scalar) -> bool {
        let id = self.id(2);
        let lhs = &(&self.c + &id) * &(&self.c - &id.scale(lambda));
        lhs.is_zero()
    }

    /// Minimal polynomial of `c`, monic, coefficients from the constant term up.
    pub fn minimal_polynomial(&self) -> Vec<Scalar> {
        let n2 = self.dim * self.dim;
        let flat = |m: &Matrix| SVec::from_dense(&m.to_flat());
        let mut powers = vec![self.id(2)];
        loop {
            let next = &self.c * powers.last().unwrap();
            let cols: Vec<SVec> = powers.iter().map(flat).collect();
            let a = Matrix::from_columns(self.field, n2 * n2, &cols);
            if let Some(x) = a.solve(&flat(&next)) {
                let mut coeffs = x.to_dense(powers.len(), self.field);
                for v in coeffs.iter_mut() {
                    *v = -&*v;
                }
                coeffs.push(self.field.one());
                return coeffs;
            }
            powers.push(next);
        }
    }

    pub fn hecke_analysis(&self) -> HeckeReport {
        let poly = self.minimal_polynomial();
        let minus_one = self.field.from_i64(-1);
        let (is_hecke, marks) = match poly.len() - 1 {
            0 => (true, Marks::All),
            1 => {
                let mu = -&poly[0];
                if mu == minus_one {
                    (true, Marks::All)
                } else {
                    (true, Marks::Finite(vec![mu]))
                }
            }
            2 => {
                // X² + aX + b has root -1 iff 1 - a + b = 0; the other root is then -b
                let (b, a) = (&poly[0], &poly[1]);
                let at_minus_one = &(&self.field.one() - a) + b;
                if at_minus_one.is_zero() {
                    (true, Marks::Finite(vec![-b]))
                } else {
                    (false, Marks::Finite(Vec::new()))
                }
            }
            _ => (false, Marks::Finite(Vec::new())),
        };
        HeckeReport {
            is_hecke,
            marks,
            minimal_polynomial: poly,
        }
    }

    /// The braided space `(V, μ c)`.
    pub fn rescale(&self, mu: &Scalar) -> Result<Self> {
        self.field.check(mu)?;
        if mu.is_zero() {
            return Err(Error::Domain("rescaling by zero".into()));
        }
        Ok(BraidedSpace {
            field: self.field,
            dim: self.dim,
            c: self.c.scale(mu),
        })
    }

    pub fn check_bracket_compat(&self, b: &BracketMap) -> IdentityCheck {
        let (c1, c2) = (self.c1(), self.c2());
        let (b1, b2) = (b.b1(), b.b2());
        let first = IdentityCheck::compare(&(&self.c * &b1), &(&(&b2 * &c1) * &c2));
        let second = IdentityCheck::compare(&(&self.c * &b2), &(&(&b1 * &c2) * &c1));
        first.and(second)
    }

    /// All brackets compatible with `c`, as a subspace of the row-major flattenings in `K^{n³}`.
    pub fn solve_compatible_brackets(&self) -> Subspace {
        let n = self.dim;
        let n3 = n * n * n;
        let (c1, c2) = (self.c1(), self.c2());
        let c12 = &c1 * &c2;
        let c21 = &c2 * &c1;
        let images: Vec<SVec> = (0..n3)
            .map(|k| {
                let b = BracketMap::unit(self.field, n, k);
                let (b1, b2) = (b.b1(), b.b2());
                let d1 = &(&self.c * &b1) - &(&b2 * &c12);
                let d2 = &(&self.c * &b2) - &(&b1 * &c21);
                let mut flat = d1.to_flat();
                flat.extend(d2.to_flat());
                SVec::from_dense(&flat)
            })
            .collect();
        let rows = 2 * n * n * n3;
        Matrix::from_columns(self.field, rows, &images).kernel()
    }

    pub fn is_categorical(&self, l: &Subspace) -> Result<bool> {
        if l.ambient() != self.dim {
            return Err(Error::Shape(format!(
                "subspace of a {}-dimensional space tested in a {}-dimensional one",
                l.ambient(),
                self.dim
            )));
        }
        let full = Subspace::full(self.field, self.dim);
        let left = self.c.image_of(&l.tensor(&full));
        let right = self.c.image_of(&full.tensor(l));
        Ok(full.tensor(l).contains_subspace(&left) && l.tensor(&full).contains_subspace(&right))
    }

    /// Every categorical subspace, by exhaustive enumeration over a finite field.
    pub fn enumerate_categorical(&self, limits: &EnumerationLimits) -> Result<Vec<Subspace>> {
        Ok(self
            .enumerate_subspaces(limits)?
            .into_iter()
            .filter(|l| self.is_categorical(l).expect("ambient matches"))
            .collect())
    }

    /// Every subspace of `V`, smallest dimension first, each in canonical form.
    pub fn enumerate_subspaces(&self, limits: &EnumerationLimits) -> Result<Vec<Subspace>> {
        let Some(elements) = self.field.elements() else {
            return Err(Error::Unsupported(
                "subspace enumeration needs a finite field; use is_categorical on chosen subspaces".into(),
            ));
        };
        if self.dim > limits.max_dim {
            return Err(Error::Unsupported(format!(
                "dimension {} exceeds the enumeration bound {}",
                self.dim, limits.max_dim
            )));
        }
        if elements.len() as u64 > limits.max_field_size {
            return Err(Error::Unsupported(format!(
                "field {} exceeds the enumeration bound of {} elements",
                self.field, limits.max_field_size
            )));
        }
        let n = self.dim;
        let mut out = Vec::new();
        for k in 0..=n {
            for pivots in combinations(n, k) {
                // free slots: (row r, column j) with j > pivot r and j not a pivot
                let slots: Vec<(usize, usize)> = (0..k)
                    .flat_map(|r| {
                        let pivots = &pivots;
                        (pivots[r] + 1..n)
                            .filter(move |j| !pivots.contains(j))
                            .map(move |j| (r, j))
                    })
                    .collect();
                let mut counter = vec![0usize; slots.len()];
                loop {
                    let mut rows: Vec<Vec<Scalar>> = vec![vec![self.field.zero(); n]; k];
                    for (r, &p) in pivots.iter().enumerate() {
                        rows[r][p] = self.field.one();
                    }
                    for (s, &(r, j)) in slots.iter().enumerate() {
                        rows[r][j] = elements[counter[s]].clone();
                    }
                    let basis = rows.iter().map(|r| SVec::from_dense(r)).collect();
                    out.push(Subspace::span(self.field, n, basis));
                    if !advance(&mut counter, elements.len()) {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `ζ = (λ - c₁)(λ² - λc₂ + c₂c₁)`, with its mirror factorization checked to agree.
    pub fn zeta_map(&self, lambda: &Scalar) -> Result<Matrix> {
        let (c1, c2) = (self.c1(), self.c2());
        let id = self.id(3);
        let l2 = lambda * lambda;
        let first = &(&id.scale(lambda) - &c1)
            * &(&(&id.scale(&l2) - &c2.scale(lambda)) + &(&c2 * &c1));
        let second = &(&id.scale(lambda) - &c2)
            * &(&(&id.scale(&l2) - &c1.scale(lambda)) + &(&c1 * &c2));
        match first.first_difference(&second) {
            None => Ok(first),
            Some(witness) => Err(Error::NotBraided { witness }),
        }
    }

    pub fn check_antisymmetry(&self, b: &BracketMap) -> IdentityCheck {
        IdentityCheck::compare(&(&b.b * &self.c), &b.b.scale(&self.field.from_i64(-1)))
    }

    /// `b b₁ (Id - c₂ + c₂c₁) = 0`.
    pub fn check_generalized_jacobi(&self, b: &BracketMap) -> IdentityCheck {
        self.check_hecke_jacobi_one(b, &self.field.one())
    }

    fn check_hecke_jacobi_one(&self, b: &BracketMap, lambda: &Scalar) -> IdentityCheck {
        let (c1, c2) = (self.c1(), self.c2());
        let id = self.id(3);
        let inner = &(&id.scale(&(lambda * lambda)) - &c2.scale(lambda)) + &(&c2 * &c1);
        let lhs = &(&b.b * &b.b1()) * &inner;
        IdentityCheck::compare(&lhs, &Matrix::zero(self.field, lhs.nrows(), lhs.ncols()))
    }

    /// `b b₁ (λ² - λc₂ + c₂c₁) = 0` and `b b₂ (λ² - λc₁ + c₁c₂) = 0`.
    pub fn check_hecke_jacobi(&self, b: &BracketMap, lambda: &Scalar) -> IdentityCheck {
        let (c1, c2) = (self.c1(), self.c2());
        let id = self.id(3);
        let inner = &(&id.scale(&(lambda * lambda)) - &c1.scale(lambda)) + &(&c1 * &c2);
        let lhs = &(&b.b * &b.b2()) * &inner;
        let second = IdentityCheck::compare(&lhs, &Matrix::zero(self.field, lhs.nrows(), lhs.ncols()));
        self.check_hecke_jacobi_one(b, lambda).and(second)
    }

    /// `Im(λ Id - c)` inside `V ⊗ V`.
    pub fn relation_space(&self, lambda: &Scalar) -> Subspace {
        (&self.id(2).scale(lambda) - &self.c).image()
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn advance(counter: &mut [usize], base: usize) -> bool {
    for d in counter.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Bounds for exhaustive subspace enumeration.
#[derive(Clone, Debug)]
pub struct EnumerationLimits {
    pub max_dim: usize,
    pub max_field_size: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_dim: 3,
            max_field_size: 13,
        }
    }
}

/// Either every scalar, or an explicit finite list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Marks {
    All,
    Finite(Vec<Scalar>),
}

impl Marks {
    pub fn contains(&self, lambda: &Scalar) -> bool {
        match self {
            Marks::All => true,
            Marks::Finite(xs) => xs.contains(lambda),
        }
    }
}

impl Serialize for Marks {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Marks::All => s.serialize_str("ALL"),
            Marks::Finite(xs) => s.collect_seq(xs.iter().map(|x| x.to_string())),
        }
    }
}

/// Minimal polynomial of a braiding and the λ with `(c + 1)(c - λ) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeReport {
    pub is_hecke: bool,
    pub marks: Marks,
    pub minimal_polynomial: Vec<Scalar>,
}

/// A linear map `b: V ⊗ V → V`, stored as an `n × n²` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketMap {
    dim: usize,
    b: Matrix,
}

impl BracketMap {
    pub fn new(b: Matrix) -> Result<Self> {
        let n = b.nrows();
        if b.ncols() != n * n {
            return Err(Error::Shape(format!(
                "a bracket on a {n}-dimensional space must be {n}x{}, got {}x{}",
                n * n,
                b.nrows(),
                b.ncols()
            )));
        }
        Ok(BracketMap { dim: n, b })
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        BracketMap {
            dim: n,
            b: Matrix::zero(field, n, n * n),
        }
    }

    /// From the row-major flattening of the `n × n²` matrix.
    pub fn from_flat(field: FieldSpec, n: usize, values: &[Scalar]) -> Result<Self> {
        BracketMap::new(Matrix::from_dense(field, n, n * n, values)?)
    }

    pub fn from_svec(field: FieldSpec, n: usize, flat: &SVec) -> Self {
        let rows = (0..n).map(|k| flat.window(k * n * n, (k + 1) * n * n)).collect();
        BracketMap {
            dim: n,
            b: Matrix::from_rows(field, n * n, rows),
        }
    }

    fn unit(field: FieldSpec, n: usize, k: usize) -> Self {
        BracketMap::from_svec(field, n, &SVec::unit(k, field))
    }

    /// The bracket `[h,e] = 2e, [h,f] = -2f, [e,f] = h` on the basis `(h, e, f)`.
    pub fn sl2(field: FieldSpec) -> Self {
        let (h, e, f) = (0, 1, 2);
        let mut b = Matrix::zero(field, 3, 9);
        let mut put = |x: usize, y: usize, out: usize, s: i64| {
            b.set(out, x * 3 + y, field.from_i64(s));
            b.set(out, y * 3 + x, field.from_i64(-s));
        };
        put(h, e, e, 2);
        put(h, f, f, -2);
        put(e, f, h, 1);
        BracketMap { dim: 3, b }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.b
    }

    pub fn field(&self) -> FieldSpec {
        self.b.field()
    }

    pub fn is_zero(&self) -> bool {
        self.b.is_zero()
    }

    pub fn flat(&self) -> SVec {
        SVec::from_dense(&self.b.to_flat())
    }

    /// `b ⊗ Id_V : V^{⊗3} → V^{⊗2}`.
    pub fn b1(&self) -> Matrix {
        self.b.pad(1, self.dim)
    }

    /// `Id_V ⊗ b : V^{⊗3} → V^{⊗2}`.
    pub fn b2(&self) -> Matrix {
        self.b.pad(self.dim, 1)
    }

    pub fn image(&self) -> Subspace {
        self.b.image()
    }
}
