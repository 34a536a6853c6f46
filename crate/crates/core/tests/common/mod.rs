//! Dense reference computations used as oracles, independent of the library's linear algebra.
#![allow(dead_code)]

use num::{BigInt, BigRational, One, Signed, Zero};

/// Minimal field arithmetic for the oracles.
pub trait Arith: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Arith for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Residue modulo a prime.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        Fp {
            v: v.rem_euclid(p as i64) as u64,
            p,
        }
    }

    fn pow(self, mut e: u64) -> Self {
        let (mut acc, mut base) = (Fp { v: 1 % self.p, p: self.p }, self);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Arith for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn add(&self, o: &Self) -> Self {
        Fp { v: (self.v + o.v) % self.p, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: (self.v + self.p - o.v) % self.p, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: self.v * o.v % self.p, p: self.p }
    }
    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero");
        self.pow(self.p - 2)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Writes a rational the way the library parses it.
pub fn rat_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}{}/{}", if x.is_negative() { "-" } else { "" }, x.numer().abs(), x.denom())
    }
}

/// `(m)_λ = 1 + λ + … + λ^{m-1}`.
pub fn q_int<F: Arith>(m: u32, lambda: &F) -> F {
    let mut acc = lambda.zero_like();
    let mut power = lambda.one_like();
    for _ in 0..m {
        acc = acc.add(&power);
        power = power.mul(lambda);
    }
    acc
}

/// Gaussian binomial by the recurrence `[n k] = [n-1 k-1] + λ^k [n-1 k]`.
pub fn q_binom_pascal<F: Arith>(n: u32, k: u32, lambda: &F) -> F {
    let (n, k) = (n as usize, k as usize);
    if k > n {
        return lambda.zero_like();
    }
    let mut row = vec![lambda.one_like()];
    for m in 1..=n {
        let mut next = vec![lambda.zero_like(); m + 1];
        let mut power = lambda.one_like();
        for j in 0..=m {
            let left = if j > 0 { row[j - 1].clone() } else { lambda.zero_like() };
            let right = if j < m { row[j].clone() } else { lambda.zero_like() };
            next[j] = left.add(&power.mul(&right));
            power = power.mul(lambda);
        }
        row = next;
    }
    row[k].clone()
}

/// Gaussian binomial by `∏ (n-i)_λ / (i+1)_λ`; `None` when a denominator vanishes.
pub fn q_binom_product<F: Arith>(n: u32, k: u32, lambda: &F) -> Option<F> {
    if k > n {
        return Some(lambda.zero_like());
    }
    let mut acc = lambda.one_like();
    for i in 0..k {
        let den = q_int(i + 1, lambda);
        if den.is_zero() {
            return None;
        }
        acc = acc.mul(&q_int(n - i, lambda)).mul(&den.inv());
    }
    Some(acc)
}

/// Rank of a list of rows by plain Gaussian elimination.
pub fn rank<F: Arith>(mut rows: Vec<Vec<F>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].inv();
        let pivot_row: Vec<F> = rows[r].iter().map(|x| x.mul(&inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

pub type Dense<F> = Vec<Vec<F>>;

pub fn identity<F: Arith>(n: usize, unit: &F) -> Dense<F> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { unit.one_like() } else { unit.zero_like() }).collect())
        .collect()
}

pub fn matmul<F: Arith>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    let inner = b.len();
    let cols = b[0].len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(row[0].zero_like(), |acc, k| acc.add(&row[k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn kron<F: Arith>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    let (br, bc) = (b.len(), b[0].len());
    let mut out = vec![vec![a[0][0].zero_like(); a[0].len() * bc]; a.len() * br];
    for (i, arow) in a.iter().enumerate() {
        for (j, x) in arow.iter().enumerate() {
            for (k, brow) in b.iter().enumerate() {
                for (l, y) in brow.iter().enumerate() {
                    out[i * br + k][j * bc + l] = x.mul(y);
                }
            }
        }
    }
    out
}

pub fn sub<F: Arith>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u.sub(v)).collect()).collect()
}

pub fn scale<F: Arith>(a: &Dense<F>, s: &F) -> Dense<F> {
    a.iter().map(|r| r.iter().map(|x| x.mul(s)).collect()).collect()
}

/// Drinfeld-Jimbo braiding of type A with `(c + 1)(c - q²) = 0`, column convention.
pub fn dj_matrix<F: Arith>(n: usize, q: &F) -> Dense<F> {
    let q2 = q.mul(q);
    let mut c = vec![vec![q.zero_like(); n * n]; n * n];
    for i in 0..n {
        c[i * n + i][i * n + i] = q2.clone();
        for j in i + 1..n {
            let (ij, ji) = (i * n + j, j * n + i);
            c[ji][ij] = q.clone();
            c[ij][ji] = q.clone();
            c[ji][ji] = q2.sub(&q.one_like());
        }
    }
    c
}

pub fn flip_matrix<F: Arith>(n: usize, unit: &F) -> Dense<F> {
    let mut c = vec![vec![unit.zero_like(); n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            c[j * n + i][i * n + j] = unit.one_like();
        }
    }
    c
}

/// `dim T^d - rank Σ T^i ⊗ Im(c - λ) ⊗ T^j` for `d = 0..=top`, built from spanning vectors.
pub fn symmetric_dims<F: Arith>(n: usize, c: &Dense<F>, lambda: &F, top: usize) -> Vec<usize> {
    let shifted = sub(c, &scale(&identity(n * n, lambda), lambda));
    let columns: Vec<Vec<F>> = (0..n * n).map(|j| (0..n * n).map(|i| shifted[i][j].clone()).collect()).collect();
    (0..=top)
        .map(|d| {
            let size = n.pow(d as u32);
            if d < 2 {
                return size;
            }
            let mut rows = Vec::new();
            for i in 0..=d - 2 {
                let j = d - 2 - i;
                for u in 0..n.pow(i as u32) {
                    for col in &columns {
                        for w in 0..n.pow(j as u32) {
                            let mut v = vec![lambda.zero_like(); size];
                            for (r, x) in col.iter().enumerate() {
                                v[(u * n * n + r) * n.pow(j as u32) + w] = x.clone();
                            }
                            rows.push(v);
                        }
                    }
                }
            }
            size - rank(rows)
        })
        .collect()
}

/// Dimension of `{b : V⊗V → V | c b₁ = b₂ c₁ c₂, c b₂ = b₁ c₂ c₁}`.
pub fn compatible_bracket_dim<F: Arith>(n: usize, c: &Dense<F>, unit: &F) -> usize {
    let id = identity(n, unit);
    let c1 = kron(c, &id);
    let c2 = kron(&id, c);
    let c1c2 = matmul(&c1, &c2);
    let c2c1 = matmul(&c2, &c1);
    let mut images = Vec::new();
    for k in 0..n {
        for col in 0..n * n {
            let mut b = vec![vec![unit.zero_like(); n * n]; n];
            b[k][col] = unit.one_like();
            let b1 = kron(&b, &id);
            let b2 = kron(&id, &b);
            let e1 = sub(&matmul(c, &b1), &matmul(&b2, &c1c2));
            let e2 = sub(&matmul(c, &b2), &matmul(&b1, &c2c1));
            images.push(e1.into_iter().chain(e2).flatten().collect::<Vec<F>>());
        }
    }
    n * n * n - rank(images)
}

/// Subspaces of `F_p^2` (listed by a spanning set) with `c(L⊗V) ⊆ V⊗L` and `c(V⊗L) ⊆ L⊗V`.
pub fn categorical_subspaces_f_p_dim2(c: &Dense<Fp>, p: u64) -> Vec<usize> {
    let e = |v: [i64; 2]| v.map(|x| Fp::new(x, p)).to_vec();
    let mut candidates: Vec<Vec<Vec<Fp>>> = vec![vec![], vec![e([1, 0]), e([0, 1])], vec![e([0, 1])]];
    for a in 0..p as i64 {
        candidates.push(vec![e([1, a])]);
    }
    let basis = [e([1, 0]), e([0, 1])];
    let tensor = |x: &[Fp], y: &[Fp]| -> Vec<Fp> { x.iter().flat_map(|a| y.iter().map(move |b| a.mul(b))).collect() };
    let apply = |v: &[Fp]| -> Vec<Fp> {
        c.iter()
            .map(|row| row.iter().zip(v).fold(Fp::new(0, p), |acc, (x, y)| acc.add(&x.mul(y))))
            .collect()
    };
    let inside = |span: &[Vec<Fp>], v: Vec<Fp>| {
        let base = rank(span.to_vec());
        let mut with = span.to_vec();
        with.push(v);
        rank(with) == base
    };
    let mut dims = Vec::new();
    for l in &candidates {
        let v_l: Vec<Vec<Fp>> = basis.iter().flat_map(|b| l.iter().map(move |x| tensor(b, x))).collect();
        let l_v: Vec<Vec<Fp>> = l.iter().flat_map(|x| basis.iter().map(move |b| tensor(x, b))).collect();
        let ok = l_v.iter().all(|t| inside(&v_l, apply(t))) && v_l.iter().all(|t| inside(&l_v, apply(t)));
        if ok {
            dims.push(l.len());
        }
    }
    dims
}
