use crate::rational::Rat;

use super::{weyl_dim, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumerologyError {
    #[error("partition {0} has more than {1} rows")]
    TooLong(Partition, usize),
    #[error("d_λ = |λ|·r_λ/r is not an integer")]
    NotIntegral,
    #[error("need k ≤ r ≤ d and k + ℓ ≤ d, got k={k}, ℓ={l}, d={d}, r={r}")]
    Domain { k: i64, l: i64, d: i64, r: i64 },
}

/// `(d_λ, r_λ)` for the bundle `S_λ` of the tautological quotient on a
/// Grassmannian of rank-`r` quotients: `r_λ` is its rank and `det = O(-d_λ)`.
pub fn rank_variety_numerology(lambda: &Partition, r: usize) -> Result<(u64, u64), NumerologyError> {
    if lambda.len() > r {
        return Err(NumerologyError::TooLong(lambda.clone(), r));
    }
    let r_lambda = weyl_dim(lambda, r);
    let num = lambda.size() as u64 * r_lambda;
    if !num.is_multiple_of(r as u64) {
        return Err(NumerologyError::NotIntegral);
    }
    Ok((num / r as u64, r_lambda))
}

/// The integer `N(k, ℓ, d, r)`; the crepancy condition for the rank locus
/// holds exactly when `N = d`.
pub fn n_value(k: i64, l: i64, d: i64, r: i64) -> Result<Rat, NumerologyError> {
    if k < 0 || l < 0 || !(k <= r && r <= d && k + l <= d) || r < 1 || d - r < 1 {
        return Err(NumerologyError::Domain { k, l, d, r });
    }
    let f = |n: i64| Rat::factorial(n as u32);
    let mut total = Rat::int(0);
    for i in 0..=(r - k).min(l) {
        if d - r - l + i < 0 {
            continue;
        }
        let coeff = f(r - 1) * f(d - r - 1) / (f(k + i) * f(r - k - i) * f(l - i) * f(d - r - l + i));
        total += coeff * Rat::int((k + i) * d - (k + l) * r);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn rank_numerology() {
        assert_eq!(rank_variety_numerology(&part![2, 1], 3).unwrap(), (8, 8));
        assert_eq!(rank_variety_numerology(&part![1], 2).unwrap(), (1, 2));
        assert_eq!(rank_variety_numerology(&part![3], 1).unwrap(), (3, 1));
        assert!(rank_variety_numerology(&part![1, 1], 1).is_err());
    }

    #[test]
    fn crepant_solutions() {
        assert_eq!(n_value(3, 0, 10, 6).unwrap(), Rat::int(10));
        assert_eq!(n_value(1, 2, 10, 4).unwrap(), Rat::int(10));
        assert_eq!(n_value(1, 2, 6, 1).unwrap(), Rat::int(6));
        assert!(n_value(4, 0, 10, 3).is_err());
    }
}
