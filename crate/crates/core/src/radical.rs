//! Sums of square roots of positive integers and their rationality.
//!
//! A side of a lattice polygon has length √a for an integer a, so a perimeter
//! is a [`RadicalSum`]. Such a sum is rational exactly when every radicand is
//! a perfect square. That characterization is what [`RadicalSum::is_rational`]
//! implements. For two and three radicands a second, elementary route
//! ([`RadicalSum::elementary_value`]) re-derives the verdict without using it:
//! the conjugate trick for two roots, and the squaring identity
//! `√(ab) + d√c = (d² + c − a − b)/2` that reduces three roots to two.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadicalError {
    #[error("radicands must be positive, got {0}")]
    NonPositiveRadicand(u64),
    #[error("the elementary argument covers sums of 2 or 3 roots, got {0}")]
    UnsupportedSize(usize),
    #[error("arithmetic overflow in the elementary rationality argument")]
    Overflow,
    #[error("elementary argument reached an impossible state for radicands {0:?}")]
    Inconsistent(Vec<u64>),
    #[error("rationality paths disagree for radicands {radicands:?}: perfect-square says {perfect_square}, elementary says {elementary}")]
    Disagreement {
        radicands: Vec<u64>,
        perfect_square: bool,
        elementary: bool,
    },
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

pub fn exact_sqrt_u128(n: u128) -> Option<u128> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

pub fn is_perfect_square(n: u64) -> bool {
    exact_sqrt(n).is_some()
}

/// The multiset `{a₁, …, aₙ}` standing for `√a₁ + … + √aₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    radicands: Vec<u64>,
}

impl RadicalSum {
    pub fn new(radicands: impl IntoIterator<Item = u64>) -> Result<Self, RadicalError> {
        let mut radicands: Vec<u64> = radicands.into_iter().collect();
        if let Some(&bad) = radicands.iter().find(|&&r| r == 0) {
            return Err(RadicalError::NonPositiveRadicand(bad));
        }
        radicands.sort_unstable();
        Ok(Self { radicands })
    }

    /// Radicands in ascending order.
    pub fn radicands(&self) -> &[u64] {
        &self.radicands
    }

    pub fn is_rational(&self) -> bool {
        self.radicands.iter().all(|&r| is_perfect_square(r))
    }

    /// The integer value of the sum when it is rational.
    pub fn value(&self) -> Option<u128> {
        self.radicands
            .iter()
            .map(|&r| exact_sqrt(r).map(u128::from))
            .sum()
    }

    /// Floating-point approximation, for diagnostics only.
    pub fn approx(&self) -> f64 {
        self.radicands.iter().map(|&r| (r as f64).sqrt()).sum()
    }

    /// Value of the sum (when rational) derived by the elementary argument
    /// instead of per-radicand square testing. Only two- and three-term sums
    /// are supported.
    pub fn elementary_value(&self) -> Result<Option<u128>, RadicalError> {
        let r = &self.radicands;
        let out = match *r.as_slice() {
            [x, y] => two_roots(x.into(), y.into())?.map(|t| t.sum()),
            [a, b, c] => three_roots(a.into(), b.into(), c.into())?,
            _ => return Err(RadicalError::UnsupportedSize(r.len())),
        };
        Ok(out)
    }
}

/// Rationality of a radical sum. For two or three terms the elementary route
/// runs as well and must return the same verdict and value.
pub fn radical_sum_is_rational(sum: &RadicalSum) -> Result<bool, RadicalError> {
    let perfect_square = sum.is_rational();
    if matches!(sum.radicands.len(), 2 | 3) {
        let elementary = sum.elementary_value()?;
        if elementary.is_some() != perfect_square || (perfect_square && elementary != sum.value()) {
            return Err(RadicalError::Disagreement {
                radicands: sum.radicands.clone(),
                perfect_square,
                elementary: elementary.is_some(),
            });
        }
    }
    Ok(perfect_square)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct TwoRoots {
    root_x: u128,
    root_y: u128,
}

impl TwoRoots {
    fn sum(self) -> u128 {
        self.root_x + self.root_y
    }
}

/// Decides whether √x + √y is rational.
///
/// (√x + √y)² = x + y + 2√(xy), so the sum can only be rational when xy is a
/// square and x + y + 2√(xy) = d² for an integer d. Then
/// √x − √y = (x − y)/d is rational too, and √x = (d² + x − y)/(2d).
fn two_roots(x: u128, y: u128) -> Result<Option<TwoRoots>, RadicalError> {
    let product = x.checked_mul(y).ok_or(RadicalError::Overflow)?;
    let Some(cross) = exact_sqrt_u128(product) else {
        return Ok(None);
    };
    let square = cross
        .checked_mul(2)
        .and_then(|c| c.checked_add(x))
        .and_then(|c| c.checked_add(y))
        .ok_or(RadicalError::Overflow)?;
    let Some(d) = exact_sqrt_u128(square) else {
        return Ok(None);
    };
    // d² + x − y = 2x + 2√(xy) ≥ 0.
    let numerator = square + x - y;
    let denominator = 2 * d;
    let inconsistent = || RadicalError::Inconsistent(vec![x as u64, y as u64]);
    if !numerator.is_multiple_of(denominator) {
        return Err(inconsistent());
    }
    let root_x = numerator / denominator;
    let root_y = d.checked_sub(root_x).ok_or_else(inconsistent)?;
    if root_x * root_x != x || root_y * root_y != y {
        return Err(inconsistent());
    }
    Ok(Some(TwoRoots { root_x, root_y }))
}

/// Decides whether √a + √b + √c is rational, returning its value.
///
/// A rational sum of square roots of integers is an algebraic integer, hence
/// an integer d with ⌊√a⌋+⌊√b⌋+⌊√c⌋ ≤ d < ⌊√a⌋+⌊√b⌋+⌊√c⌋+3. For each
/// candidate, squaring (√a + √b) = d − √c gives
/// √(ab) + √(d²c) = (d² + c − a − b)/2, which the two-root case settles.
fn three_roots(a: u128, b: u128, c: u128) -> Result<Option<u128>, RadicalError> {
    let floor_sum = a.isqrt() + b.isqrt() + c.isqrt();
    let ab = a.checked_mul(b).ok_or(RadicalError::Overflow)?;
    for d in floor_sum..floor_sum + 3 {
        let d_sq = d.checked_mul(d).ok_or(RadicalError::Overflow)?;
        let d_sq_c = d_sq.checked_mul(c).ok_or(RadicalError::Overflow)?;
        let lhs = d_sq.checked_add(c).ok_or(RadicalError::Overflow)?;
        let Some(twice_target) = lhs.checked_sub(a + b) else {
            continue;
        };
        if twice_target % 2 != 0 {
            continue;
        }
        let Some(roots) = two_roots(ab, d_sq_c)? else {
            continue;
        };
        if roots.sum() != twice_target / 2 {
            continue;
        }
        // √(d²c) = d√c is an integer, so √c = root_y / d.
        if roots.root_y % d != 0 {
            continue;
        }
        let root_c = roots.root_y / d;
        if root_c * root_c != c || root_c > d {
            continue;
        }
        if let Some(rest) = two_roots(a, b)? {
            if rest.sum() == d - root_c {
                return Ok(Some(d));
            }
        }
    }
    Ok(None)
}
