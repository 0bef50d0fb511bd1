//! Iteration over the points of a projective space P^{dim-1}(F_p).
//!
//! Every point is represented by its unique vector with first nonzero
//! coordinate equal to 1, and points are produced in lexicographic order
//! of that representative.

use crate::field::FieldCtx;
use crate::mat::Subspace;
use crate::{Error, Result};

/// Caps on enumeration and rejection sampling, overridable by callers
/// (the CLI exposes them as flags).
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum number of projective points a single scan may visit.
    pub point_budget: u64,
    /// Maximum rejections before a sampler gives up.
    pub max_rejections: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            point_budget: 10_000_000,
            max_rejections: 1000,
        }
    }
}

/// Number of points of P^{dim-1}(F_p), i.e. (p^dim - 1)/(p - 1),
/// saturating at u128::MAX.
pub fn projective_count(p: u64, dim: usize) -> u128 {
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..dim {
        total = total.saturating_add(power);
        power = power.saturating_mul(p as u128);
    }
    total
}

/// Iterator over normalized representatives, lexicographically ordered.
#[derive(Debug)]
pub struct ProjectivePoints {
    p: u64,
    dim: usize,
    // Position of the leading 1; sweeps from dim-1 down to 0.
    pivot: usize,
    // Odometer over the coordinates after the pivot.
    suffix: Vec<u64>,
    done: bool,
}

/// Points of P^{dim-1}(F_p), checked against the enumeration budget.
pub fn projective_points(ctx: FieldCtx, dim: usize, limits: &Limits) -> Result<ProjectivePoints> {
    assert!(dim >= 1, "projective space needs dim >= 1");
    let needed = projective_count(ctx.modulus(), dim);
    if needed > limits.point_budget as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: limits.point_budget,
        });
    }
    Ok(ProjectivePoints {
        p: ctx.modulus(),
        dim,
        pivot: dim - 1,
        suffix: Vec::new(),
        done: false,
    })
}

impl Iterator for ProjectivePoints {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let mut v = vec![0u64; self.dim];
        v[self.pivot] = 1;
        for (offset, &x) in self.suffix.iter().enumerate() {
            v[self.pivot + 1 + offset] = x;
        }
        // Advance the odometer; on overflow move the pivot left.
        let mut k = self.suffix.len();
        loop {
            if k == 0 {
                if self.pivot == 0 {
                    self.done = true;
                } else {
                    self.pivot -= 1;
                    self.suffix = vec![0; self.dim - 1 - self.pivot];
                }
                break;
            }
            k -= 1;
            self.suffix[k] += 1;
            if self.suffix[k] < self.p {
                break;
            }
            self.suffix[k] = 0;
        }
        Some(v)
    }
}

/// Normalized representatives of the projective points of a subspace,
/// expressed in ambient coordinates. Not sorted; callers sort when order
/// matters.
pub fn subspace_projective_points(sub: &Subspace, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    if sub.dim() == 0 {
        return Ok(Vec::new());
    }
    let ctx = sub.basis().ctx();
    let mut out = Vec::new();
    for lambda in projective_points(ctx, sub.dim(), limits)? {
        let mut v = vec![0u64; sub.ambient_dim()];
        for (m, &lm) in lambda.iter().enumerate() {
            if lm == 0 {
                continue;
            }
            for j in 0..sub.ambient_dim() {
                v[j] = ctx.add(v[j], ctx.mul(lm, sub.basis_vec(m)[j]));
            }
        }
        let (normalized, _) = crate::mat::normalize_projective(ctx, &v)
            .expect("combination of basis vectors is nonzero");
        out.push(normalized);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(p: u64, dim: usize) -> Vec<Vec<u64>> {
        let ctx = FieldCtx::new(p).unwrap();
        projective_points(ctx, dim, &Limits::default())
            .unwrap()
            .collect()
    }

    #[test]
    fn p1_of_f3() {
        assert_eq!(
            pts(3, 2),
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn single_point_line() {
        for p in [3, 5, 7] {
            assert_eq!(pts(p, 1), vec![vec![1]]);
        }
    }

    #[test]
    fn count_p2_of_f5() {
        assert_eq!(pts(5, 3).len(), 31);
        assert_eq!(projective_count(5, 3), 31);
    }

    #[test]
    fn budget_is_enforced() {
        let ctx = FieldCtx::new(101).unwrap();
        let limits = Limits {
            point_budget: 100,
            ..Limits::default()
        };
        let err = projective_points(ctx, 2, &limits).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { needed: 102, .. }));
    }

    #[test]
    fn pairwise_non_proportional_and_counts() {
        // Exhaustive over the advertised small range.
        for p in [3u64, 5, 7, 11] {
            let ctx = FieldCtx::new(p).unwrap();
            for dim in 1..=6 {
                if projective_count(p, dim) > 20_000 {
                    continue;
                }
                let all = pts(p, dim);
                assert_eq!(all.len() as u128, projective_count(p, dim));
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), all.len(), "duplicates at p={p} dim={dim}");
                assert_eq!(sorted, all, "lexicographic order at p={p} dim={dim}");
                // Normalized representatives are pairwise non-proportional
                // by uniqueness of the leading-1 form.
                for v in &all {
                    let lead = v.iter().position(|&x| x != 0).unwrap();
                    assert_eq!(v[lead], 1);
                }
                let _ = ctx;
            }
        }
    }
}
