//! Independent brute-force oracles for the enumerators. None of these go
//! through the library's search code; each rebuilds its answer from the
//! definitions.

use std::collections::BTreeSet;

use amicable_core::rectangles::{
    brute_force_pairs, enumerate_by_divisors, equable_rectangles, perimeter_dominant,
    small_side_candidates,
};
use amicable_core::triangles::{
    enumerate_heronian, find_amicable_triangle_pairs, find_equable_triangles,
};

/// `16·A²` by Heron, in plain integers.
fn sixteen_area_sq(a: u64, b: u64, c: u64) -> u64 {
    (a + b + c) * (b + c - a) * (a + c - b) * (a + b - c)
}

/// All integer triangles with perimeter ≤ `max` and integer area, over every
/// ordered triple, deduplicated by sorting.
fn heronian_oracle(max: u64) -> BTreeSet<([u64; 3], u64)> {
    let mut out = BTreeSet::new();
    for a in 1..max {
        for b in 1..max - a {
            for c in 1..=max - a - b {
                if a + b <= c || a + c <= b || b + c <= a {
                    continue;
                }
                let s = sixteen_area_sq(a, b, c);
                // Area is an integer iff 16A² = (4A)², so scan candidate areas.
                let mut area = 0u64;
                while 16 * area * area < s {
                    area += 1;
                }
                if 16 * area * area == s {
                    let mut t = [a, b, c];
                    t.sort_unstable();
                    out.insert((t, area));
                }
            }
        }
    }
    out
}

#[test]
fn heronian_enumeration_matches_oracle() {
    let oracle = heronian_oracle(60);
    let found: BTreeSet<([u64; 3], u64)> = enumerate_heronian(60)
        .unwrap()
        .iter()
        .map(|t| (t.sides().sides().map(u64::from), t.area()))
        .collect();
    assert_eq!(found, oracle);
    assert_eq!(enumerate_heronian(60).unwrap().len(), oracle.len());
}

#[test]
fn small_heronian_lists() {
    let oracle12: Vec<_> = heronian_oracle(12).into_iter().map(|(t, _)| t).collect();
    assert_eq!(oracle12, vec![[3, 4, 5]]);
    let oracle16: Vec<_> = heronian_oracle(16).into_iter().collect();
    assert_eq!(oracle16, vec![([3, 4, 5], 6), ([5, 5, 6], 12)]);
}

#[test]
fn equable_triangles_match_oracle() {
    // Area = perimeter iff 16A² = 16P², so no square roots are needed.
    let mut oracle = BTreeSet::new();
    for a in 1..=200u64 {
        for b in a..=200 {
            for c in b..(a + b) {
                let p = a + b + c;
                if p > 200 {
                    break;
                }
                if sixteen_area_sq(a, b, c) == 16 * p * p {
                    oracle.insert([a as u32, b as u32, c as u32]);
                }
            }
        }
    }
    let pinned: BTreeSet<[u32; 3]> = [
        [5, 12, 13],
        [6, 8, 10],
        [6, 25, 29],
        [7, 15, 20],
        [9, 10, 17],
    ]
    .into();
    assert_eq!(oracle, pinned);

    let found: BTreeSet<[u32; 3]> = find_equable_triangles(200)
        .unwrap()
        .iter()
        .map(|t| {
            assert_eq!(t.area(), t.perimeter());
            t.sides().sides()
        })
        .collect();
    assert_eq!(found, pinned);
    assert!(find_equable_triangles(20).unwrap().is_empty());
    assert_eq!(find_equable_triangles(60).unwrap().len(), 5);
}

#[test]
fn triangle_join_matches_quadratic_scan() {
    for bound in [30, 53, 54, 90, 120] {
        let all = enumerate_heronian(bound).unwrap();
        let mut naive = Vec::new();
        for (i, p) in all.iter().enumerate() {
            for q in &all[i + 1..] {
                if p.area() == q.perimeter() && q.area() == p.perimeter() {
                    let (lo, hi) = if p.sides() < q.sides() {
                        (p, q)
                    } else {
                        (q, p)
                    };
                    naive.push((lo.sides(), hi.sides()));
                }
            }
        }
        naive.sort();
        let joined: Vec<_> = find_amicable_triangle_pairs(bound)
            .unwrap()
            .iter()
            .map(|p| (p.first().sides(), p.second().sides()))
            .collect();
        assert_eq!(joined, naive, "bound {bound}");
    }
}

#[test]
fn triangle_pairs_are_certified() {
    let pairs = find_amicable_triangle_pairs(120).unwrap();
    assert_eq!(pairs.len(), 1);
    let (p, q) = (pairs[0].first(), pairs[0].second());
    assert_eq!(p.sides().sides(), [3, 25, 26]);
    assert_eq!(q.sides().sides(), [9, 12, 15]);
    // Independent certificate: recompute areas from Heron.
    assert_eq!(sixteen_area_sq(3, 25, 26), 16 * 36 * 36);
    assert_eq!(sixteen_area_sq(9, 12, 15), 16 * 54 * 54);
    assert_eq!(
        (p.area(), p.perimeter(), q.area(), q.perimeter()),
        (36, 54, 54, 36)
    );
}

#[test]
fn rectangle_oracle_equals_divisor_enumeration() {
    let divisors = enumerate_by_divisors();
    assert_eq!(brute_force_pairs(200), divisors);
    assert_eq!(brute_force_pairs(54), divisors);
    assert_eq!(brute_force_pairs(53).len(), 4);
}

#[test]
fn small_side_audit_at_200() {
    assert_eq!(small_side_candidates(200).unwrap(), vec![1, 2]);
    for pair in brute_force_pairs(200) {
        let members = [pair.first(), pair.second()];
        assert!(members.iter().any(|r| perimeter_dominant(*r)), "{pair}");
        for r in members.iter().filter(|r| perimeter_dominant(**r)) {
            assert!(r.short() <= 2, "{pair}");
        }
    }
}

#[test]
fn equable_rectangles_match_factorization() {
    // (a − 2)(b − 2) = 4 has the positive solutions (1, 4) and (2, 2).
    let sides: Vec<_> = equable_rectangles(200)
        .iter()
        .map(|r| (r.short(), r.long()))
        .collect();
    assert_eq!(sides, vec![(3, 6), (4, 4)]);
    let amicable: BTreeSet<_> = brute_force_pairs(200)
        .iter()
        .flat_map(|p| [p.first(), p.second()])
        .collect();
    for r in equable_rectangles(200) {
        assert!(!amicable.contains(&r));
    }
}
