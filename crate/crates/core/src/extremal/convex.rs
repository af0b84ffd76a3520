//! Maximizing `Σ C(x_j + 1, 2)` over bounded integer vectors with a fixed sum.

use serde::Serialize;

use super::{choose2, ExtremalError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvexOptimum {
    pub max: usize,
    /// `q'` entries equal to `m`, then `r'`, then zeros.
    pub witness: Vec<usize>,
}

/// Maximum of `Σ_{j=1}^{slots} C(x_j + 1, 2)` over `x_j ∈ {0..=m}` with
/// `Σ x_j = total`.
///
/// Strict convexity pushes every optimum to the boundary: all but at most
/// one coordinate sit at `0` or `m`. Writing `total = q'·m + r'`, the optimum
/// is `q'·C(m+1, 2) + C(r'+1, 2)`.
pub fn maximize_convex_sum(m: usize, slots: usize, total: usize) -> Result<ConvexOptimum, ExtremalError> {
    if m == 0 || slots == 0 {
        return Err(ExtremalError::Infeasible(format!("need m >= 1 and at least one slot, got m = {m}, slots = {slots}")));
    }
    if total > m * slots {
        return Err(ExtremalError::Infeasible(format!("total {total} exceeds {slots} slots of capacity {m}")));
    }
    let (full, rest) = (total / m, total % m);
    let mut witness = vec![m; full];
    if full < slots {
        witness.push(rest);
        witness.resize(slots, 0);
    }
    Ok(ConvexOptimum { max: full * choose2(m + 1) + choose2(rest + 1), witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(maximize_convex_sum(3, 4, 7).unwrap(), ConvexOptimum { max: 13, witness: vec![3, 3, 1, 0] });
        assert_eq!(maximize_convex_sum(2, 3, 0).unwrap(), ConvexOptimum { max: 0, witness: vec![0, 0, 0] });
        assert_eq!(maximize_convex_sum(2, 3, 4).unwrap(), ConvexOptimum { max: 6, witness: vec![2, 2, 0] });
        assert_eq!(maximize_convex_sum(2, 3, 6).unwrap().witness, vec![2, 2, 2]);
        assert!(maximize_convex_sum(2, 3, 7).is_err());
        assert!(maximize_convex_sum(0, 3, 0).is_err());
    }

    #[test]
    fn witness_attains_the_maximum() {
        for m in 1..6 {
            for slots in 1..6 {
                for total in 0..=m * slots {
                    let opt = maximize_convex_sum(m, slots, total).unwrap();
                    assert_eq!(opt.witness.len(), slots);
                    assert_eq!(opt.witness.iter().sum::<usize>(), total);
                    assert_eq!(opt.witness.iter().map(|&x| choose2(x + 1)).sum::<usize>(), opt.max);
                }
            }
        }
    }
}
