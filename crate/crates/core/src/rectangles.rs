//! Amicable and equable lattice rectangles.
//!
//! By the integer-side property every amicable lattice rectangle has integer
//! sides, and any integer-sided rectangle embeds axis-aligned, so rectangles
//! are handled purely through their side records.
//!
//! For a pair `a×b`, `x×y` the amicability equations `ab = 2(x+y)` and
//! `2(a+b) = xy` are linear in `b` and `y`:
//!
//! ```text
//! | a  -2 | |b|   |2x|
//! | -2  x | |y| = |2a|
//! ```
//!
//! with determinant `ax − 4`, and Cramer's rule gives
//! `b = (2x² + 4a)/(ax − 4)`, `y = (2a² + 4x)/(ax − 4)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::radical::exact_sqrt;
use crate::search::{ShapeFingerprint, ShapeId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RectError {
    #[error("rectangle sides must be positive, got {0}×{1}")]
    ZeroSide(u32, u32),
    #[error("{first} and {second} are not amicable")]
    NotAmicable { first: RectSides, second: RectSides },
    #[error("{0} cannot be paired with itself")]
    SelfPair(RectSides),
    #[error("side bound {0} is too small, need at least 4")]
    BoundTooSmall(u32),
    #[error("closed-form solution for a={a}, x={x} does not fit in a side length")]
    Overflow { a: u32, x: u32 },
}

/// Canonical integer rectangle, `short ≤ long`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RectSides {
    short: u32,
    long: u32,
}

impl RectSides {
    /// Sides in either order.
    pub fn new(a: u32, b: u32) -> Result<Self, RectError> {
        if a == 0 || b == 0 {
            return Err(RectError::ZeroSide(a, b));
        }
        Ok(Self {
            short: a.min(b),
            long: a.max(b),
        })
    }

    pub fn short(&self) -> u32 {
        self.short
    }

    pub fn long(&self) -> u32 {
        self.long
    }

    pub fn area(&self) -> u64 {
        self.short as u64 * self.long as u64
    }

    pub fn perimeter(&self) -> u64 {
        2 * (self.short as u64 + self.long as u64)
    }

    pub fn is_equable(&self) -> bool {
        self.area() == self.perimeter()
    }

    pub fn shape_id(&self) -> ShapeId {
        ShapeId::rectangle(self.short, self.long)
    }

    pub fn fingerprint(&self) -> ShapeFingerprint {
        ShapeFingerprint::new(self.area(), self.perimeter(), self.shape_id())
    }
}

impl fmt::Display for RectSides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{}", self.short, self.long)
    }
}

/// Unordered amicable pair of distinct rectangles, `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RectAmicablePair {
    first: RectSides,
    second: RectSides,
}

impl RectAmicablePair {
    /// Re-checks both cross equalities and distinctness.
    pub fn new(p: RectSides, q: RectSides) -> Result<Self, RectError> {
        if p == q {
            return Err(RectError::SelfPair(p));
        }
        if p.area() != q.perimeter() || q.area() != p.perimeter() {
            return Err(RectError::NotAmicable {
                first: p,
                second: q,
            });
        }
        Ok(Self {
            first: p.min(q),
            second: p.max(q),
        })
    }

    pub fn first(&self) -> RectSides {
        self.first
    }

    pub fn second(&self) -> RectSides {
        self.second
    }
}

impl fmt::Display for RectAmicablePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↔ {}", self.first, self.second)
    }
}

/// Area at most perimeter: `ab ≤ 2(a + b)`.
pub fn perimeter_dominant(r: RectSides) -> bool {
    r.area() <= r.perimeter()
}

/// Outcome of asking which rectangle could be amicable with a given one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartnerVerdict {
    /// Area is odd, but a partner's perimeter is even.
    OddArea,
    /// `x + y = area/2`, `xy = perimeter` has no positive integer solution.
    NoIntegerPartner,
    /// The only solution is the rectangle itself (an equable rectangle).
    OnlySelf,
    Partner(RectSides),
}

/// Solves for the unique partner `x×y` of `r`: its sides are the roots of
/// `t² − (area/2)t + perimeter = 0`.
pub fn partner_of(r: RectSides) -> PartnerVerdict {
    let area = r.area();
    if !area.is_multiple_of(2) {
        return PartnerVerdict::OddArea;
    }
    let sum = (area / 2) as i128;
    let product = r.perimeter() as i128;
    let disc = sum * sum - 4 * product;
    if disc < 0 {
        return PartnerVerdict::NoIntegerPartner;
    }
    let Some(root) = u64::try_from(disc).ok().and_then(exact_sqrt) else {
        return PartnerVerdict::NoIntegerPartner;
    };
    let root = root as i128;
    if (sum - root) % 2 != 0 {
        return PartnerVerdict::NoIntegerPartner;
    }
    let x = (sum - root) / 2;
    let y = (sum + root) / 2;
    let (Ok(x), Ok(y)) = (u32::try_from(x), u32::try_from(y)) else {
        return PartnerVerdict::NoIntegerPartner;
    };
    match RectSides::new(x, y) {
        Ok(p) if p == r => PartnerVerdict::OnlySelf,
        Ok(p) => PartnerVerdict::Partner(p),
        Err(_) => PartnerVerdict::NoIntegerPartner,
    }
}

/// Short sides of perimeter-dominant rectangles (long side ≤ `max_side`)
/// that have an amicable partner other than themselves.
pub fn small_side_candidates(max_side: u32) -> Result<Vec<u32>, RectError> {
    if max_side < 4 {
        return Err(RectError::BoundTooSmall(max_side));
    }
    let mut shorts = BTreeSet::new();
    for a in 1..=max_side {
        for b in a..=max_side {
            let r = RectSides { short: a, long: b };
            if perimeter_dominant(r) && matches!(partner_of(r), PartnerVerdict::Partner(_)) {
                shorts.insert(a);
            }
        }
    }
    Ok(shorts.into_iter().collect())
}

/// Why the closed form produced no rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoSolution {
    /// `ax = 4`: the linear system is singular.
    Singular,
    /// `ax < 4`: the unique solution has negative components.
    NonPositive,
    /// `ax − 4` does not divide both numerators.
    NonInteger,
}

impl fmt::Display for NoSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoSolution::Singular => "singular",
            NoSolution::NonPositive => "non-positive",
            NoSolution::NonInteger => "non-integer",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    Solution { b: u32, y: u32 },
    None(NoSolution),
}

/// Solves the amicability system for `b` and `y` given `a` and `x`.
pub fn partner_closed_form(a: u32, x: u32) -> Result<ClosedForm, RectError> {
    let (ai, xi) = (a as i128, x as i128);
    let det = ai * xi - 4;
    if det == 0 {
        return Ok(ClosedForm::None(NoSolution::Singular));
    }
    let b_num = 2 * xi * xi + 4 * ai;
    let y_num = 2 * ai * ai + 4 * xi;
    // Both numerators are positive, so the signs follow the determinant.
    if det < 0 {
        return Ok(ClosedForm::None(NoSolution::NonPositive));
    }
    if b_num % det != 0 || y_num % det != 0 {
        return Ok(ClosedForm::None(NoSolution::NonInteger));
    }
    let overflow = || RectError::Overflow { a, x };
    let b = u32::try_from(b_num / det).map_err(|_| overflow())?;
    let y = u32::try_from(y_num / det).map_err(|_| overflow())?;
    let (bi, yi) = (b as i128, y as i128);
    if b == 0 || y == 0 || ai * bi != 2 * (xi + yi) || 2 * (ai + bi) != xi * yi {
        return Ok(ClosedForm::None(NoSolution::NonPositive));
    }
    Ok(ClosedForm::Solution { b, y })
}

/// One row of the divisor table: the divisor, the resulting `x`, and the
/// closed-form `y` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorRow {
    pub divisor: u32,
    pub x: u32,
    pub y: u32,
    pub b: u32,
}

/// For short side `a`, `y = (2a² + 4x)/(ax − 4)`. With `a = 1` and
/// `c = x − 4` this is `4 + 18/c`; with `a = 2` and `d = x − 2` it is
/// `2 + 8/d`. Entries are `(a, modulus, offset)` with `x = divisor + offset`.
const DIVISOR_BRANCHES: [(u32, u32, u32); 2] = [(1, 18, 4), (2, 8, 2)];

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The divisor table for short side `a` (1 or 2), in increasing divisor order.
/// Empty for other values of `a`.
pub fn divisor_branch(a: u32) -> Vec<DivisorRow> {
    let Some(&(_, modulus, offset)) = DIVISOR_BRANCHES.iter().find(|b| b.0 == a) else {
        return Vec::new();
    };
    divisors(modulus)
        .into_iter()
        .filter_map(|divisor| {
            let x = divisor + offset;
            match partner_closed_form(a, x) {
                Ok(ClosedForm::Solution { b, y }) => Some(DivisorRow { divisor, x, y, b }),
                _ => None,
            }
        })
        .collect()
}

/// All amicable rectangle pairs, from the divisor tables for `a = 1` and
/// `a = 2`. Mirrored rows (divisor `c` and `modulus/c`) collapse to the same
/// unordered pair.
pub fn enumerate_by_divisors() -> Vec<RectAmicablePair> {
    let mut pairs = BTreeSet::new();
    for &(a, _, _) in &DIVISOR_BRANCHES {
        for row in divisor_branch(a) {
            let r1 = RectSides::new(a, row.b).expect("positive sides");
            let r2 = RectSides::new(row.x, row.y).expect("positive sides");
            if let Ok(pair) = RectAmicablePair::new(r1, r2) {
                pairs.insert(pair);
            }
        }
    }
    pairs.into_iter().collect()
}

/// Every canonical rectangle with both sides ≤ `max_side`, ordered by
/// `(short, long)`.
pub fn canonical_rectangles(max_side: u32) -> impl Iterator<Item = RectSides> {
    (1..=max_side).flat_map(move |a| (a..=max_side).map(move |b| RectSides { short: a, long: b }))
}

/// Exhaustive oracle: compares every canonical rectangle against every
/// other one with sides ≤ `max_side`.
pub fn brute_force_pairs(max_side: u32) -> Vec<RectAmicablePair> {
    let shapes: Vec<(RectSides, u64, u64)> = canonical_rectangles(max_side)
        .map(|r| (r, r.area(), r.perimeter()))
        .collect();
    let mut pairs = BTreeSet::new();
    for (i, &(r, area, perimeter)) in shapes.iter().enumerate() {
        for &(s, s_area, s_perimeter) in &shapes[i + 1..] {
            if area == s_perimeter && s_area == perimeter {
                pairs.insert(RectAmicablePair::new(r, s).expect("cross equalities just checked"));
            }
        }
    }
    pairs.into_iter().collect()
}

/// Rectangles with area equal to perimeter and sides ≤ `max_side`.
pub fn equable_rectangles(max_side: u32) -> Vec<RectSides> {
    canonical_rectangles(max_side)
        .filter(RectSides::is_equable)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(a: u32, b: u32) -> RectSides {
        RectSides::new(a, b).unwrap()
    }

    fn pair(a: u32, b: u32, x: u32, y: u32) -> RectAmicablePair {
        RectAmicablePair::new(rect(a, b), rect(x, y)).unwrap()
    }

    fn known_pairs() -> Vec<RectAmicablePair> {
        vec![
            pair(1, 34, 7, 10),
            pair(1, 38, 6, 13),
            pair(1, 54, 5, 22),
            pair(2, 10, 4, 6),
            pair(2, 13, 3, 10),
        ]
    }

    #[test]
    fn canonical_order() {
        assert_eq!(rect(10, 7), rect(7, 10));
        assert_eq!(rect(10, 7).short(), 7);
        assert_eq!(RectSides::new(0, 3), Err(RectError::ZeroSide(0, 3)));
    }

    #[test]
    fn dominance() {
        assert!(perimeter_dominant(rect(4, 4)));
        assert!(perimeter_dominant(rect(3, 4)));
        assert!(!perimeter_dominant(rect(5, 5)));
    }

    #[test]
    fn small_side_case_analysis() {
        assert_eq!(partner_of(rect(3, 3)), PartnerVerdict::OddArea);
        assert_eq!(partner_of(rect(3, 5)), PartnerVerdict::OddArea);
        // 2(x+y) = 12, xy = 14 has no integer solution.
        assert_eq!(partner_of(rect(3, 4)), PartnerVerdict::NoIntegerPartner);
        assert_eq!(partner_of(rect(3, 6)), PartnerVerdict::OnlySelf);
        assert_eq!(partner_of(rect(4, 4)), PartnerVerdict::OnlySelf);
        assert_eq!(
            partner_of(rect(1, 34)),
            PartnerVerdict::Partner(rect(7, 10))
        );
    }

    #[test]
    fn three_by_four_partner_system_has_no_integer_roots() {
        let solutions: Vec<_> = (1..6u32).filter(|&x| x * (6 - x) == 14).collect();
        assert!(solutions.is_empty());
    }

    #[test]
    fn small_sides() {
        assert_eq!(small_side_candidates(100).unwrap(), vec![1, 2]);
        assert_eq!(small_side_candidates(200).unwrap(), vec![1, 2]);
        assert_eq!(small_side_candidates(54).unwrap(), vec![1, 2]);
        assert_eq!(small_side_candidates(3), Err(RectError::BoundTooSmall(3)));
    }

    #[test]
    fn closed_form_examples() {
        let sol = |a, x| partner_closed_form(a, x).unwrap();
        assert_eq!(sol(1, 7), ClosedForm::Solution { b: 34, y: 10 });
        assert_eq!(sol(1, 5), ClosedForm::Solution { b: 54, y: 22 });
        assert_eq!(sol(2, 3), ClosedForm::Solution { b: 13, y: 10 });
        assert_eq!(sol(1, 4), ClosedForm::None(NoSolution::Singular));
        assert_eq!(sol(2, 2), ClosedForm::None(NoSolution::Singular));
        assert_eq!(sol(1, 1), ClosedForm::None(NoSolution::NonPositive));
        assert_eq!(sol(1, 8), ClosedForm::None(NoSolution::NonInteger));
        // 3b − 2y = 4, −2b + 2y = 6: b = 10, y = 13, which re-verifies.
        assert_eq!(sol(3, 2), ClosedForm::Solution { b: 10, y: 13 });
    }

    #[test]
    fn divisor_tables() {
        let a1 = divisor_branch(1);
        assert_eq!(
            a1.iter().map(|r| r.divisor).collect::<Vec<_>>(),
            [1, 2, 3, 6, 9, 18]
        );
        assert_eq!(
            a1.iter().map(|r| r.x).collect::<Vec<_>>(),
            [5, 6, 7, 10, 13, 22]
        );
        assert_eq!(
            a1.iter().map(|r| r.y).collect::<Vec<_>>(),
            [22, 13, 10, 7, 6, 5]
        );
        assert_eq!(
            a1.iter().map(|r| r.b).collect::<Vec<_>>(),
            [54, 38, 34, 34, 38, 54]
        );

        let a2 = divisor_branch(2);
        assert_eq!(a2.iter().map(|r| r.x).collect::<Vec<_>>(), [3, 4, 6, 10]);
        assert_eq!(a2.iter().map(|r| r.y).collect::<Vec<_>>(), [10, 6, 4, 3]);
        assert_eq!(a2.iter().map(|r| r.b).collect::<Vec<_>>(), [13, 10, 10, 13]);

        assert!(divisor_branch(3).is_empty());
    }

    #[test]
    fn divisor_enumeration_gives_five_pairs_in_order() {
        assert_eq!(enumerate_by_divisors(), known_pairs());
    }

    #[test]
    fn brute_force_small_bounds() {
        assert!(brute_force_pairs(9).is_empty());
        assert_eq!(brute_force_pairs(10), vec![pair(2, 10, 4, 6)]);
        assert_eq!(brute_force_pairs(54), known_pairs());
    }

    #[test]
    fn equable() {
        assert_eq!(equable_rectangles(10), vec![rect(3, 6), rect(4, 4)]);
        assert!(equable_rectangles(3).is_empty());
        assert_eq!(rect(3, 6).area(), 18);
        assert_eq!(rect(3, 6).perimeter(), 18);
    }

    #[test]
    fn pair_construction_rechecks() {
        assert_eq!(
            RectAmicablePair::new(rect(4, 4), rect(4, 4)),
            Err(RectError::SelfPair(rect(4, 4)))
        );
        assert!(matches!(
            RectAmicablePair::new(rect(1, 34), rect(7, 11)),
            Err(RectError::NotAmicable { .. })
        ));
        let p = RectAmicablePair::new(rect(10, 7), rect(34, 1)).unwrap();
        assert_eq!(p.first(), rect(1, 34));
        assert_eq!(p.second(), rect(7, 10));
    }
}
