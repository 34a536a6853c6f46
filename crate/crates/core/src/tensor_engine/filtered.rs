use std::collections::BTreeMap;

use serde::Serialize;

use crate::braided_space::IdentityCheck;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Frame, Matrix, PivotOrder, QuotientMap, SVec, Subspace};
use crate::scalars::FieldSpec;

use super::{AxiomEntry, TruncatedBraidedBialgebra, TruncatedTensorBialgebra, ValidationReport};

/// A quotient `W = A^{≤N} / K` of a truncated graded braided bialgebra by a
/// subspace `K`. Coordinates on `W` are taken in the normal basis of `K`, whose
/// vectors are ambient basis vectors listed by ascending degree, so the first
/// `dim W_n` of them span the image of `A^{≤n}`.
#[derive(Clone, Debug)]
pub struct FilteredBialgebra {
    ambient: TruncatedBraidedBialgebra,
    offsets: Vec<usize>,
    quotient: QuotientMap,
    projected_units: Vec<SVec>,
    products: BTreeMap<(usize, usize), SVec>,
    comul: Matrix,
    braid: Matrix,
    unit: SVec,
    counit: SVec,
    ledger: ValidationReport,
}

impl FilteredBialgebra {
    /// A graded bialgebra viewed as a filtered one (`K = 0`).
    pub fn from_graded(a: &TruncatedBraidedBialgebra) -> Self {
        let total: usize = a.dims().iter().sum();
        let ech = Echelon::new(a.field(), total, PivotOrder::Trailing);
        FilteredBialgebra::new(a, ech)
    }

    /// `A^{≤N}` modulo the row space of `kernel`, a trailing-pivot echelon form
    /// over the flattened `A^{≤N}` (degree-major ordering).
    pub fn new(a: &TruncatedBraidedBialgebra, kernel: Echelon) -> Self {
        let field = a.field();
        let mut offsets = vec![0];
        for d in a.dims() {
            offsets.push(offsets.last().unwrap() + d);
        }
        assert_eq!(kernel.dim(), *offsets.last().unwrap(), "kernel lives in A^{{≤N}}");
        let quotient = QuotientMap::from_echelon(kernel);
        let total = quotient.ambient();
        let projected_units: Vec<SVec> = (0..total).map(|g| quotient.project(&SVec::unit(g, field))).collect();
        let mut w = FilteredBialgebra {
            ambient: a.clone(),
            offsets,
            quotient,
            projected_units,
            products: BTreeMap::new(),
            comul: Matrix::zero(field, 0, 0),
            braid: Matrix::zero(field, 0, 0),
            unit: SVec::zero(),
            counit: SVec::zero(),
            ledger: ValidationReport::default(),
        };
        let dim = w.dim();
        let normal: Vec<usize> = w.quotient.normal_basis().to_vec();
        let n = a.cutoff();

        for (i, &gi) in normal.iter().enumerate() {
            for (j, &gj) in normal.iter().enumerate() {
                if w.degree_of(gi) + w.degree_of(gj) <= n {
                    let prod = w
                        .ambient_mul(&SVec::unit(gi, field), &SVec::unit(gj, field))
                        .expect("degrees within the cutoff");
                    w.products.insert((i, j), w.quotient.project(&prod));
                }
            }
        }

        let comul_cols: Vec<SVec> = normal.iter().map(|&g| w.projected_comul(&SVec::unit(g, field))).collect();
        w.comul = Matrix::from_columns(field, dim * dim, &comul_cols);

        let mut braid_cols = Vec::with_capacity(dim * dim);
        for &gi in &normal {
            for &gj in &normal {
                let col = w
                    .projected_braid(&SVec::unit(gi, field), &SVec::unit(gj, field))
                    .unwrap_or_else(|_| SVec::zero());
                braid_cols.push(col);
            }
        }
        w.braid = Matrix::from_columns(field, dim * dim, &braid_cols);

        w.unit = w.quotient.project(&a.unit().clone());
        let counit_entries = (0..dim)
            .filter_map(|i| {
                let g = normal[i];
                (g < a.dim(0)).then(|| a.counit().get(g).cloned()).flatten().map(|x| (i, x))
            })
            .collect();
        w.counit = SVec::from_entries(counit_entries);
        w.ledger = w.well_definedness();
        w
    }

    pub fn field(&self) -> FieldSpec {
        self.ambient.field()
    }

    pub fn cutoff(&self) -> usize {
        self.ambient.cutoff()
    }

    pub fn ambient(&self) -> &TruncatedBraidedBialgebra {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &QuotientMap {
        &self.quotient
    }

    fn degree_of(&self, global: usize) -> usize {
        self.offsets.partition_point(|&o| o <= global) - 1
    }

    /// Ambient degree of the `i`-th normal basis vector.
    pub fn level(&self, i: usize) -> usize {
        self.degree_of(self.quotient.normal_basis()[i])
    }

    /// Largest ambient degree among the normal basis vectors supporting `v`.
    pub fn degree(&self, v: &SVec) -> usize {
        v.entries().iter().map(|(i, _)| self.level(*i)).max().unwrap_or(0)
    }

    /// Span of the normal basis vectors of degree at most `k`: the image of `A^{≤k}`.
    pub fn standard_filtration(&self) -> Vec<Subspace> {
        let field = self.field();
        (0..=self.cutoff())
            .map(|k| {
                let vs = (0..self.dim())
                    .filter(|&i| self.level(i) <= k)
                    .map(|i| SVec::unit(i, field))
                    .collect();
                Subspace::span(field, self.dim(), vs)
            })
            .collect()
    }

    /// Offset of `A^k` inside the flattened `A^{≤N}`.
    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k]
    }

    fn split(&self, v: &SVec) -> BTreeMap<usize, SVec> {
        let mut out: BTreeMap<usize, Vec<(usize, crate::scalars::Scalar)>> = BTreeMap::new();
        for (g, x) in v.entries() {
            let d = self.degree_of(*g);
            out.entry(d).or_default().push((g - self.offsets[d], x.clone()));
        }
        out.into_iter().map(|(d, e)| (d, SVec::from_entries(e))).collect()
    }

    /// Product of two ambient vectors of `A^{≤N}`.
    pub fn ambient_mul(&self, x: &SVec, y: &SVec) -> Result<SVec> {
        let mut out = SVec::zero();
        for (p, u) in self.split(x) {
            for (q, w) in self.split(y) {
                if p + q > self.cutoff() {
                    return Err(Error::Truncation(format!(
                        "product of degrees {p} and {q} exceeds the cutoff {}",
                        self.cutoff()
                    )));
                }
                let prod = self.ambient.mul(p, q).apply(&u.kron(&w, self.ambient.dim(q)));
                let off = self.offsets[p + q];
                out = &out + &prod.map_monotone(|k| k + off);
            }
        }
        Ok(out)
    }

    /// `(π ⊗ π) Δ_A(x)` in `W ⊗ W`.
    pub fn projected_comul(&self, x: &SVec) -> SVec {
        let dim = self.dim();
        let mut entries = Vec::new();
        for (k, u) in self.split(x) {
            for p in 0..=k {
                let q = k - p;
                let dq = self.ambient.dim(q);
                let image = self.ambient.comul(p, q).apply(&u);
                for (idx, s) in image.entries() {
                    let (a, b) = (idx / dq, idx % dq);
                    let left = &self.projected_units[self.offsets[p] + a];
                    let right = &self.projected_units[self.offsets[q] + b];
                    for (i, x1) in left.entries() {
                        for (j, x2) in right.entries() {
                            entries.push((i * dim + j, &(s * x1) * x2));
                        }
                    }
                }
            }
        }
        SVec::from_entries(entries)
    }

    /// `(π ⊗ π) c_A(x ⊗ y)` in `W ⊗ W`.
    pub fn projected_braid(&self, x: &SVec, y: &SVec) -> Result<SVec> {
        let dim = self.dim();
        let mut entries = Vec::new();
        for (p, u) in self.split(x) {
            for (q, w) in self.split(y) {
                if p + q > self.cutoff() {
                    return Err(Error::Truncation(format!(
                        "braiding of degrees {p} and {q} exceeds the cutoff {}",
                        self.cutoff()
                    )));
                }
                let dp = self.ambient.dim(p);
                let image = self.ambient.braid(p, q).apply(&u.kron(&w, self.ambient.dim(q)));
                for (idx, s) in image.entries() {
                    let (b, a) = (idx / dp, idx % dp);
                    let left = &self.projected_units[self.offsets[q] + b];
                    let right = &self.projected_units[self.offsets[p] + a];
                    for (i, x1) in left.entries() {
                        for (j, x2) in right.entries() {
                            entries.push((i * dim + j, &(s * x1) * x2));
                        }
                    }
                }
            }
        }
        Ok(SVec::from_entries(entries))
    }

    /// Product in `W`; fails when a pair of normal words leaves the truncation.
    pub fn mul(&self, x: &SVec, y: &SVec) -> Result<SVec> {
        let mut out = SVec::zero();
        for (i, a) in x.entries() {
            for (j, b) in y.entries() {
                let prod = self.products.get(&(*i, *j)).ok_or_else(|| {
                    Error::Truncation(format!(
                        "product of basis vectors {i} (level {}) and {j} (level {}) exceeds the cutoff {}",
                        self.level(*i),
                        self.level(*j),
                        self.cutoff()
                    ))
                })?;
                out = out.add_scaled(prod, &(a * b));
            }
        }
        Ok(out)
    }

    /// `∇_W` applied to a vector of `W ⊗ W`.
    pub fn mul_tensor(&self, t: &SVec) -> Result<SVec> {
        let dim = self.dim();
        let mut out = SVec::zero();
        for (idx, s) in t.entries() {
            let x = SVec::unit(idx / dim, self.field());
            let y = SVec::unit(idx % dim, self.field()).scale(s);
            out = &out + &self.mul(&x, &y)?;
        }
        Ok(out)
    }

    /// `Δ_W` as a `dim² × dim` matrix.
    pub fn comul(&self) -> &Matrix {
        &self.comul
    }

    /// `c_W` as a `dim² × dim²` matrix; pairs beyond the cutoff map to zero.
    pub fn braid(&self) -> &Matrix {
        &self.braid
    }

    pub fn unit(&self) -> &SVec {
        &self.unit
    }

    pub fn counit(&self) -> &SVec {
        &self.counit
    }

    /// Ideal, coideal and braiding-descent checks for `K`, within the truncation.
    pub fn ledger(&self) -> &ValidationReport {
        &self.ledger
    }

    fn well_definedness(&self) -> ValidationReport {
        let field = self.field();
        let total = self.quotient.ambient();
        let n = self.cutoff();
        let mut entries = Vec::new();
        let mut push = |axiom: &str, instances: usize, witness: Option<String>| {
            entries.push(AxiomEntry {
                axiom: axiom.to_string(),
                degree: n,
                instances,
                holds: witness.is_none(),
                witness,
            });
        };
        let rows: Vec<SVec> = self.quotient.relations().rows().to_vec();
        let top = |v: &SVec| v.trailing().map_or(0, |g| self.degree_of(g));

        let (mut count, mut witness) = (0, None);
        for (k, r) in rows.iter().enumerate() {
            for g in 0..total {
                if top(r) + self.degree_of(g) > n {
                    continue;
                }
                let e = SVec::unit(g, field);
                for prod in [self.ambient_mul(r, &e), self.ambient_mul(&e, r)] {
                    count += 1;
                    let prod = prod.expect("degrees within the cutoff");
                    if witness.is_none() && !self.quotient.project(&prod).is_zero() {
                        witness = Some(format!("relation {k} times ambient basis vector {g}"));
                    }
                }
            }
        }
        push("ideal", count, witness);

        let mut witness = None;
        for (k, r) in rows.iter().enumerate() {
            if witness.is_none() && !self.projected_comul(r).is_zero() {
                witness = Some(format!("relation {k}"));
            }
        }
        push("coideal", rows.len(), witness);

        let (mut count, mut witness) = (0, None);
        for (k, r) in rows.iter().enumerate() {
            for g in 0..total {
                if top(r) + self.degree_of(g) > n {
                    continue;
                }
                let e = SVec::unit(g, field);
                for image in [self.projected_braid(r, &e), self.projected_braid(&e, r)] {
                    count += 1;
                    let image = image.expect("degrees within the cutoff");
                    if witness.is_none() && !image.is_zero() {
                        witness = Some(format!("relation {k} against ambient basis vector {g}"));
                    }
                }
            }
        }
        push("braid descent", count, witness);
        ValidationReport { entries }
    }

    /// `x ↦ x ⊗ 1` and `x ↦ 1 ⊗ x` as `dim² × dim` matrices.
    fn unit_embeddings(&self) -> (Matrix, Matrix) {
        let field = self.field();
        let u = Matrix::from_columns(field, self.dim(), std::slice::from_ref(&self.unit));
        let id = Matrix::identity(field, self.dim());
        (id.kron(&u), u.kron(&id))
    }

    /// `P(W) = {x | Δ(x) = x ⊗ 1 + 1 ⊗ x}`.
    pub fn primitives(&self) -> Subspace {
        let (right, left) = self.unit_embeddings();
        (&(&self.comul - &right) - &left).kernel()
    }

    /// `c_W` restricted to `P ⊗ P`, in the coordinates of the frame `P`.
    /// Fails with a witness if `c(P ⊗ P) ⊄ P ⊗ P`.
    pub fn restrict_braiding(&self, p: &Frame) -> Result<Matrix> {
        let field = self.field();
        let dim = self.dim();
        let top = p.basis().iter().map(|v| self.degree(v)).max().unwrap_or(0);
        if 2 * top > self.cutoff() {
            return Err(Error::Truncation(format!(
                "primitives reach degree {top}, so their braiding leaves the cutoff {}",
                self.cutoff()
            )));
        }
        let pairs: Vec<SVec> = p
            .basis()
            .iter()
            .flat_map(|x| p.basis().iter().map(move |y| x.kron(y, dim)))
            .collect();
        let pp = Frame::new(field, dim * dim, pairs.clone())?;
        let mut cols = Vec::with_capacity(pairs.len());
        for (k, v) in pairs.iter().enumerate() {
            let image = self.braid.apply(v);
            let coords = pp.coordinates(&image).ok_or_else(|| {
                Error::Precondition(format!("braiding does not preserve P ⊗ P (pair {k})"))
            })?;
            cols.push(coords);
        }
        Ok(Matrix::from_columns(field, pairs.len(), &cols))
    }
}

/// `C_0 = span(1)`, `C_{k+1} = {x | Δ(x) ∈ C_k ⊗ W + W ⊗ C_0}` for `k < n`.
pub fn coradical_filtration(w: &FilteredBialgebra, n: usize) -> Vec<Subspace> {
    let field = w.field();
    let dim = w.dim();
    let c0 = Subspace::span(field, dim, vec![w.unit().clone()]);
    let q0 = QuotientMap::new(&c0).projection_matrix();
    let mut chain = vec![c0];
    for _ in 0..n {
        let qk = QuotientMap::new(chain.last().unwrap()).projection_matrix();
        let test = &qk.kron(&q0) * w.comul();
        chain.push(test.kernel());
    }
    chain
}

/// Homogeneous primitives `ker Δ^{p,q}` (`p, q ≥ 1`) per degree; degree 0 is empty.
#[derive(Clone, Debug)]
pub struct GradedPrimitives {
    pub per_degree: Vec<Subspace>,
}

impl GradedPrimitives {
    pub fn dims(&self) -> Vec<usize> {
        self.per_degree.iter().map(Subspace::dim).collect()
    }
}

pub fn graded_primitives(a: &TruncatedBraidedBialgebra) -> GradedPrimitives {
    let field = a.field();
    let per_degree = (0..=a.cutoff())
        .map(|d| {
            if d == 0 {
                return Subspace::zero(field, a.dim(0));
            }
            let blocks: Vec<&Matrix> = (1..d).map(|p| a.comul(p, d - p)).collect();
            Matrix::vstack(field, a.dim(d), &blocks).kernel()
        })
        .collect();
    GradedPrimitives { per_degree }
}

/// The graded object attached to a filtration of a [`FilteredBialgebra`].
#[derive(Clone, Debug)]
pub struct AssociatedGraded {
    pub bialgebra: TruncatedBraidedBialgebra,
    frame: Frame,
    levels: Vec<usize>,
    local: Vec<usize>,
}

impl AssociatedGraded {
    /// Coordinates in `gr^k` of the class of `v ∈ C_k`.
    pub fn component(&self, v: &SVec, k: usize) -> SVec {
        let coords = self.frame.coordinates(v).expect("frame spans W");
        SVec::from_entries(
            coords
                .entries()
                .iter()
                .filter(|(i, _)| self.levels[*i] == k)
                .map(|(i, x)| (self.local[*i], x.clone()))
                .collect(),
        )
    }

    /// Representative in `W` of the `j`-th basis vector of `gr^k`.
    pub fn representative(&self, k: usize, j: usize) -> &SVec {
        let i = (0..self.levels.len())
            .find(|&i| self.levels[i] == k && self.local[i] == j)
            .expect("basis vector exists");
        &self.frame.basis()[i]
    }
}

/// Associated graded bialgebra of an ascending chain `C_0 ⊆ ⋯ ⊆ C_N = W`, after
/// checking it is an algebra and coalgebra filtration compatible with the braiding.
/// The result stops at the largest level `m` for which every product of levels
/// summing to at most `m` stays inside the truncation of `W`.
pub fn gr_of_filtration(w: &FilteredBialgebra, chain: &[Subspace]) -> Result<AssociatedGraded> {
    let field = w.field();
    let dim = w.dim();
    let n = w.cutoff();
    if chain.len() != n + 1 {
        return Err(Error::Filtration(format!(
            "expected a chain C_0..C_{n}, got {} subspaces",
            chain.len()
        )));
    }
    for k in 1..=n {
        if !chain[k].contains_subspace(&chain[k - 1]) {
            return Err(Error::Filtration(format!("C_{} is not contained in C_{k}", k - 1)));
        }
    }
    if chain[n].dim() != dim {
        return Err(Error::Filtration(format!(
            "C_{n} has dimension {} but W has dimension {dim}",
            chain[n].dim()
        )));
    }

    let mut ech = Echelon::new(field, dim, PivotOrder::Leading);
    let mut basis = Vec::new();
    let mut levels = Vec::new();
    let mut local = Vec::new();
    let mut dims = vec![0usize; n + 1];
    for (k, c) in chain.iter().enumerate() {
        for v in c.basis() {
            if ech.insert(v.clone()).is_some() {
                basis.push(v.clone());
                levels.push(k);
                local.push(dims[k]);
                dims[k] += 1;
            }
        }
    }
    let frame = Frame::new(field, dim, basis.clone())?;
    let coords: Vec<SVec> = (0..dim)
        .map(|j| frame.coordinates(&SVec::unit(j, field)).expect("frame spans W"))
        .collect();
    let to_adapted = |v: &SVec| -> SVec {
        let mut out = SVec::zero();
        for (j, x) in v.entries() {
            out = out.add_scaled(&coords[*j], x);
        }
        out
    };
    let tensor_to_adapted = |v: &SVec| -> SVec {
        let mut entries = Vec::new();
        for (idx, s) in v.entries() {
            let (a, b) = (idx / dim, idx % dim);
            for (i, x) in coords[a].entries() {
                for (j, y) in coords[b].entries() {
                    entries.push((i * dim + j, &(s * x) * y));
                }
            }
        }
        SVec::from_entries(entries)
    };
    let by_level: Vec<Vec<usize>> = (0..=n)
        .map(|k| (0..dim).filter(|&i| levels[i] == k).collect())
        .collect();

    let mut mul = BTreeMap::new();
    let mut comul = BTreeMap::new();
    let mut braid = BTreeMap::new();
    // ambient degree reached by adapted basis vectors of level ≤ k
    let mut reach = vec![0usize; n + 1];
    for (i, v) in basis.iter().enumerate() {
        let deg = w.degree(v);
        for r in reach.iter_mut().skip(levels[i]) {
            *r = (*r).max(deg);
        }
    }
    let top = (0..=n)
        .take_while(|&m| (0..=m).all(|p| reach[p] + reach[m - p] <= n))
        .last()
        .unwrap_or(0);
    dims.truncate(top + 1);

    for total in 0..=top {
        for p in 0..=total {
            let q = total - p;
            // multiplication
            let mut m = Matrix::zero(field, dims[total], dims[p] * dims[q]);
            for &i in &by_level[p] {
                for &j in &by_level[q] {
                    let prod = to_adapted(&w.mul(&basis[i], &basis[j])?);
                    let col = local[i] * dims[q] + local[j];
                    for (t, x) in prod.entries() {
                        if levels[*t] > total {
                            return Err(Error::Filtration(format!(
                                "C_{p}·C_{q} ⊄ C_{total}: product of adapted basis vectors {i} and {j}"
                            )));
                        }
                        if levels[*t] == total {
                            m.set(local[*t], col, x.clone());
                        }
                    }
                }
            }
            mul.insert((p, q), m);
            // braiding
            let mut c = Matrix::zero(field, dims[q] * dims[p], dims[p] * dims[q]);
            for &i in &by_level[p] {
                for &j in &by_level[q] {
                    let image = tensor_to_adapted(&w.braid().apply(&basis[i].kron(&basis[j], dim)));
                    let col = local[i] * dims[q] + local[j];
                    for (idx, x) in image.entries() {
                        let (a, b) = (idx / dim, idx % dim);
                        if levels[a] > q || levels[b] > p {
                            return Err(Error::Filtration(format!(
                                "c(C_{p} ⊗ C_{q}) ⊄ C_{q} ⊗ C_{p}: adapted basis pair ({i}, {j})"
                            )));
                        }
                        if levels[a] == q && levels[b] == p {
                            c.set(local[a] * dims[p] + local[b], col, x.clone());
                        }
                    }
                }
            }
            braid.insert((p, q), c);
        }
        // comultiplication out of level `total`
        let mut blocks: Vec<Matrix> = (0..=total)
            .map(|p| Matrix::zero(field, dims[p] * dims[total - p], dims[total]))
            .collect();
        for &i in &by_level[total] {
            let image = tensor_to_adapted(&w.comul().apply(&basis[i]));
            for (idx, x) in image.entries() {
                let (a, b) = (idx / dim, idx % dim);
                if levels[a] + levels[b] > total {
                    return Err(Error::Filtration(format!(
                        "Δ(C_{total}) ⊄ Σ C_i ⊗ C_{{{total}-i}}: adapted basis vector {i}"
                    )));
                }
                if levels[a] + levels[b] == total {
                    let p = levels[a];
                    blocks[p].set(local[a] * dims[total - p] + local[b], local[i], x.clone());
                }
            }
        }
        for (p, m) in blocks.into_iter().enumerate() {
            comul.insert((p, total - p), m);
        }
    }

    let unit_adapted = to_adapted(w.unit());
    if unit_adapted.entries().iter().any(|(i, _)| levels[*i] != 0) {
        return Err(Error::Filtration("the unit is not in C_0".into()));
    }
    let unit = unit_adapted.map_indices(|i| local[i]);
    let counit = SVec::from_entries(
        by_level[0]
            .iter()
            .map(|&i| (local[i], basis[i].dot(w.counit(), field)))
            .collect(),
    );
    let bialgebra = TruncatedBraidedBialgebra::new(field, dims, mul, comul, braid, unit, counit)?;
    Ok(AssociatedGraded {
        bialgebra,
        frame,
        levels,
        local,
    })
}

/// Degree components `f̃^k: V^{⊗k} → A^k` of an algebra map out of `T(V, c)`.
#[derive(Clone, Debug, Serialize)]
pub struct GradedMap {
    #[serde(skip)]
    pub components: Vec<Matrix>,
    pub ranks: Vec<usize>,
    /// Whether `f̃` respects comultiplication; `None` when `Im f ⊄ P(A)`.
    pub coalgebra_map: Option<IdentityCheck>,
}

/// Extends `f: V → A¹` to the algebra map `T(V, c) → A` in degrees up to the
/// smaller of the two cutoffs.
pub fn extend_algebra_map(
    f: &Matrix,
    t: &TruncatedTensorBialgebra,
    a: &TruncatedBraidedBialgebra,
) -> Result<GradedMap> {
    let n_v = t.space().dim();
    let field = a.field();
    if a.cutoff() < 1 || f.shape() != (a.dim(1), n_v) {
        return Err(Error::Shape(format!(
            "f must be {}x{n_v}, got {}x{}",
            if a.cutoff() >= 1 { a.dim(1) } else { 0 },
            f.nrows(),
            f.ncols()
        )));
    }
    let ff = f.kron(f);
    let compat = IdentityCheck::compare(&(a.braid(1, 1) * &ff), &(&ff * t.space().braiding()));
    if let Some(j) = compat.witness {
        return Err(Error::Precondition(format!(
            "f does not intertwine the braidings (basis vector {j} of V ⊗ V)"
        )));
    }
    let top = t.cutoff().min(a.cutoff());
    let unit = Matrix::from_columns(field, a.dim(0), &[a.unit().clone()]);
    let mut components = vec![unit.clone()];
    for k in 1..=top {
        let prev = components.last().unwrap();
        components.push(a.mul(k - 1, 1) * &prev.kron(f));
    }
    let primitive = IdentityCheck::compare(&(a.comul(0, 1) * f), &unit.kron(f)).holds
        && IdentityCheck::compare(&(a.comul(1, 0) * f), &f.kron(&unit)).holds;
    let coalgebra_map = primitive.then(|| {
        let mut result = IdentityCheck {
            holds: true,
            witness: None,
        };
        'outer: for k in 0..=top {
            for p in 0..=k {
                let lhs = &components[p].kron(&components[k - p]) * t.shuffle(p, k - p);
                let rhs = a.comul(p, k - p) * &components[k];
                let check = IdentityCheck::compare(&lhs, &rhs);
                if !check.holds {
                    result = check;
                    break 'outer;
                }
            }
        }
        result
    });
    let ranks = components.iter().map(Matrix::rank).collect();
    Ok(GradedMap {
        components,
        ranks,
        coalgebra_map,
    })
}
