use std::collections::BTreeMap;

use crate::braided_space::BraidedSpace;
use crate::linalg::{Matrix, SVec};
use crate::scalars::FieldSpec;

use super::TruncatedBraidedBialgebra;

/// `c ⊗ ... ⊗ c`-lift `c^{p,q}: V^{⊗p} ⊗ V^{⊗q} → V^{⊗q} ⊗ V^{⊗p}`.
pub fn lift_braiding(space: &BraidedSpace, p: usize, q: usize) -> Matrix {
    let n = space.dim();
    let field = space.field();
    if p == 0 || q == 0 {
        return Matrix::identity(field, n.pow((p + q) as u32));
    }
    // c^{1,q} = (Id^{q-1} ⊗ c) ∘ ⋯ ∘ (c ⊗ Id^{q-1})
    let c = space.braiding();
    let mut one_q = Matrix::identity(field, n.pow(q as u32 + 1));
    for k in 0..q {
        let step = c.pad(n.pow(k as u32), n.pow((q - 1 - k) as u32));
        one_q = &step * &one_q;
    }
    // c^{k+1,q} = (c^{k,q} ⊗ Id_V) ∘ (Id_V^{⊗k} ⊗ c^{1,q})
    let mut acc = one_q.clone();
    for k in 1..p {
        let left = acc.pad(1, n);
        let right = one_q.pad(n.pow(k as u32), 1);
        acc = &left * &right;
    }
    acc
}

/// Quantum symmetrizer `𝔖_m` on `V^{⊗m}`:
/// `𝔖_1 = Id`, `𝔖_{m+1} = (Id_V ⊗ 𝔖_m)(Id + c₁ + c₁c₂ + ⋯ + c₁⋯c_m)`.
pub fn quantum_symmetrizer(space: &BraidedSpace, m: usize) -> Matrix {
    let n = space.dim();
    let field = space.field();
    let mut sym = Matrix::identity(field, if m == 0 { 1 } else { n });
    for k in 1..m {
        // building 𝔖_{k+1} on V^{⊗(k+1)}
        let size = n.pow(k as u32 + 1);
        let mut sum = Matrix::identity(field, size);
        let mut chain = Matrix::identity(field, size);
        for i in 0..k {
            let ci = space.braiding().pad(n.pow(i as u32), n.pow((k - 1 - i) as u32));
            chain = &chain * &ci;
            sum = &sum + &chain;
        }
        sym = &sym.pad(n, 1) * &sum;
    }
    sym
}

/// A finitely supported element of `T(V)`: coordinate vectors per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedVector {
    components: BTreeMap<usize, SVec>,
}

impl GradedVector {
    pub fn zero() -> Self {
        GradedVector::default()
    }

    pub fn homogeneous(degree: usize, v: SVec) -> Self {
        let mut g = GradedVector::zero();
        g.add_component(degree, &v);
        g
    }

    pub fn unit(field: FieldSpec) -> Self {
        GradedVector::homogeneous(0, SVec::unit(0, field))
    }

    pub fn component(&self, degree: usize) -> Option<&SVec> {
        self.components.get(&degree)
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &SVec)> {
        self.components.iter().map(|(d, v)| (*d, v))
    }

    pub fn add_component(&mut self, degree: usize, v: &SVec) {
        let sum = match self.components.get(&degree) {
            Some(w) => w + v,
            None => v.clone(),
        };
        if sum.is_zero() {
            self.components.remove(&degree);
        } else {
            self.components.insert(degree, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.components.keys().next_back().copied()
    }
}

/// `T(V, c)` truncated at degree `N`, with every lifted braiding and shuffle
/// component of total degree at most `N` computed at construction.
#[derive(Clone, Debug)]
pub struct TruncatedTensorBialgebra {
    space: BraidedSpace,
    cutoff: usize,
    lifts: BTreeMap<(usize, usize), Matrix>,
    shuffles: BTreeMap<(usize, usize), Matrix>,
}

impl TruncatedTensorBialgebra {
    pub fn new(space: &BraidedSpace, cutoff: usize) -> Self {
        let n = space.dim();
        let field = space.field();
        let mut lifts = BTreeMap::new();
        for total in 0..=cutoff {
            for p in 0..=total {
                lifts.insert((p, total - p), lift_braiding(space, p, total - p));
            }
        }
        #[cfg(debug_assertions)]
        for p in 1..cutoff {
            for m in 1..cutoff - p {
                // c^{p,m+1} = (Id^{⊗m} ⊗ c^{p,1}) ∘ (c^{p,m} ⊗ Id_V)
                let alt = &lifts[&(p, 1)].pad(n.pow(m as u32), 1) * &lifts[&(p, m)].pad(1, n);
                debug_assert_eq!(alt, lifts[&(p, m + 1)], "hexagon for c^{{{p},{}}}", m + 1);
            }
        }
        // Δ^{p,q} = Δ^{p,q-1} ⊗ Id_V + (Id^{⊗(p-1)} ⊗ c^{q,1}) ∘ (Δ^{p-1,q} ⊗ Id_V)
        let mut shuffles: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();
        for total in 0..=cutoff {
            let size = n.pow(total as u32);
            for p in 0..=total {
                let q = total - p;
                let m = if p == 0 || q == 0 {
                    Matrix::identity(field, size)
                } else {
                    let first = shuffles[&(p, q - 1)].pad(1, n);
                    let second = &lifts[&(q, 1)].pad(n.pow(p as u32 - 1), 1) * &shuffles[&(p - 1, q)].pad(1, n);
                    &first + &second
                };
                shuffles.insert((p, q), m);
            }
        }
        TruncatedTensorBialgebra {
            space: space.clone(),
            cutoff,
            lifts,
            shuffles,
        }
    }

    pub fn space(&self) -> &BraidedSpace {
        &self.space
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field()
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// `dim T^k = n^k`.
    pub fn dim(&self, k: usize) -> usize {
        self.space.dim().pow(k as u32)
    }

    pub fn lift(&self, p: usize, q: usize) -> &Matrix {
        &self.lifts[&(p, q)]
    }

    pub fn shuffle(&self, p: usize, q: usize) -> &Matrix {
        &self.shuffles[&(p, q)]
    }

    /// Index of the word `e_{a_1} ⊗ ⋯ ⊗ e_{a_k}` in `V^{⊗k}`.
    pub fn word_index(&self, letters: &[usize]) -> usize {
        letters.iter().fold(0, |acc, &a| acc * self.space.dim() + a)
    }

    pub fn word(&self, degree: usize, index: usize) -> Vec<usize> {
        let n = self.space.dim();
        let mut out = vec![0; degree];
        let mut rest = index;
        for slot in out.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        out
    }

    /// Concatenation product; components above the cutoff are dropped and reported.
    pub fn multiply(&self, x: &GradedVector, y: &GradedVector) -> (GradedVector, bool) {
        let mut out = GradedVector::zero();
        let mut truncated = false;
        for (p, u) in x.components() {
            for (q, w) in y.components() {
                if p + q > self.cutoff {
                    truncated = true;
                    continue;
                }
                out.add_component(p + q, &u.kron(w, self.dim(q)));
            }
        }
        (out, truncated)
    }

    /// The same data as a generic truncated graded braided bialgebra.
    pub fn to_bialgebra(&self) -> TruncatedBraidedBialgebra {
        let field = self.field();
        let dims: Vec<usize> = (0..=self.cutoff).map(|k| self.dim(k)).collect();
        let mut mul = BTreeMap::new();
        for &(p, q) in self.lifts.keys() {
            mul.insert((p, q), Matrix::identity(field, self.dim(p + q)));
        }
        TruncatedBraidedBialgebra::new(
            field,
            dims,
            mul,
            self.shuffles.clone(),
            self.lifts.clone(),
            SVec::unit(0, field),
            SVec::unit(0, field),
        )
        .expect("tensor bialgebra components have consistent shapes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q_binom, FieldSpec};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn lifts_of_the_flip_are_block_transpositions() {
        let v = BraidedSpace::flip(q(), 2);
        let t = TruncatedTensorBialgebra::new(&v, 4);
        for p in 0..=4 {
            for r in 0..=4 - p {
                let m = t.lift(p, r);
                for idx in 0..t.dim(p + r) {
                    let w = t.word(p + r, idx);
                    let mut swapped = w[p..].to_vec();
                    swapped.extend_from_slice(&w[..p]);
                    let target = t.word_index(&swapped);
                    assert_eq!(m.column(idx), SVec::unit(target, q()));
                }
            }
        }
        assert_eq!(t.lift(1, 1), v.braiding());
    }

    #[test]
    fn c21_agrees_with_two_crossings() {
        let v = BraidedSpace::dj_hecke(q(), 2, &q().from_i64(2)).unwrap();
        let c21 = lift_braiding(&v, 2, 1);
        assert_eq!(c21, &v.c1() * &v.c2());
        let c12 = lift_braiding(&v, 1, 2);
        assert_eq!(c12, &v.c2() * &v.c1());
    }

    #[test]
    fn first_shuffle_is_one_plus_c() {
        let v = BraidedSpace::dj_hecke(q(), 2, &q().from_i64(2)).unwrap();
        let t = TruncatedTensorBialgebra::new(&v, 3);
        let expected = &Matrix::identity(q(), 4) + v.braiding();
        assert_eq!(t.shuffle(1, 1), &expected);
        assert!(t.shuffle(3, 0).is_identity());
        assert!(t.shuffle(0, 2).is_identity());
    }

    #[test]
    fn shuffle_coefficients_are_binomials() {
        let v = BraidedSpace::flip(q(), 1);
        let t = TruncatedTensorBialgebra::new(&v, 5);
        for p in 0..=5 {
            for r in 0..=5 - p {
                let expected = q_binom((p + r) as u32, p as u32, &q().one()).unwrap();
                assert_eq!(t.shuffle(p, r).get(0, 0), expected);
            }
        }
        // diagonal braiding by μ: q-binomials at μ
        let mu = q().from_i64(3);
        let v = BraidedSpace::scalar(q(), 1, &mu).unwrap();
        let t = TruncatedTensorBialgebra::new(&v, 5);
        for p in 0..=5 {
            for r in 0..=5 - p {
                let expected = q_binom((p + r) as u32, p as u32, &mu).unwrap();
                assert_eq!(t.shuffle(p, r).get(0, 0), expected);
            }
        }
    }

    #[test]
    fn symmetrizer_normalization() {
        let v = BraidedSpace::dj_hecke(q(), 2, &q().from_i64(2)).unwrap();
        assert_eq!(quantum_symmetrizer(&v, 2), &Matrix::identity(q(), 4) + v.braiding());
        let flip = BraidedSpace::flip(q(), 3);
        assert_eq!(quantum_symmetrizer(&flip, 2).kernel().dim(), 3);
        let id = BraidedSpace::scalar(q(), 1, &q().one()).unwrap();
        assert_eq!(quantum_symmetrizer(&id, 4).get(0, 0), q().from_i64(24));
    }

    #[test]
    fn multiplication_concatenates_and_flags_truncation() {
        let v = BraidedSpace::flip(q(), 2);
        let t = TruncatedTensorBialgebra::new(&v, 2);
        let e = |a: usize| GradedVector::homogeneous(1, SVec::unit(a, q()));
        let (xy, cut) = t.multiply(&e(0), &e(1));
        assert!(!cut);
        assert_eq!(xy, GradedVector::homogeneous(2, SVec::unit(t.word_index(&[0, 1]), q())));
        let (one_x, _) = t.multiply(&GradedVector::unit(q()), &e(1));
        assert_eq!(one_x, e(1));
        let (_, cut) = t.multiply(&xy, &e(0));
        assert!(cut);
    }
}
