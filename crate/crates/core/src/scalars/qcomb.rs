use crate::error::{Error, Result};

use super::Scalar;

/// `(n)_λ = 1 + λ + … + λ^{n-1}`, with `(0)_λ = 1`.
pub fn q_int(n: u32, lambda: &Scalar) -> Scalar {
    let field = lambda.field();
    if n == 0 {
        return field.one();
    }
    let mut acc = field.zero();
    let mut power = field.one();
    for _ in 0..n {
        acc = &acc + &power;
        power = &power * lambda;
    }
    acc
}

/// `(n)!_λ = (1)_λ (2)_λ ⋯ (n)_λ`.
pub fn q_factorial(n: u32, lambda: &Scalar) -> Scalar {
    (1..=n).fold(lambda.field().one(), |acc, k| &acc * &q_int(k, lambda))
}

/// Gaussian binomial at λ, computed by the Pascal rule
/// `[n,k] = [n-1,k-1] + λ^k [n-1,k]` so that no division is needed.
pub fn q_binom(n: u32, k: u32, lambda: &Scalar) -> Result<Scalar> {
    if k > n {
        return Err(Error::Domain(format!("q_binom: k = {k} exceeds n = {n}")));
    }
    let field = lambda.field();
    let powers: Vec<Scalar> = (0..=k).map(|j| lambda.pow(j)).collect();
    // row[j] holds [m, j] for the current m
    let mut row = vec![field.zero(); k as usize + 1];
    row[0] = field.one();
    for _m in 1..=n {
        for j in (1..=k as usize).rev() {
            row[j] = &row[j - 1] + &(&powers[j] * &row[j]);
        }
    }
    Ok(row[k as usize].clone())
}

/// True iff `(k)_λ ≠ 0` for every `1 ≤ k ≤ n`.
pub fn is_regular(lambda: &Scalar, n: u32) -> bool {
    (1..=n).all(|k| !q_int(k, lambda).is_zero())
}
