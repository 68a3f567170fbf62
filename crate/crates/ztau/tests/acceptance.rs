//! Acceptance suite: every worked example and property bundle the library
//! must reproduce, one test per criterion, each printing a PASS line with
//! its measurements (run with --nocapture to see them).

use num_traits::Signed;
use std::time::{Duration, Instant};
use ztau::fermat::{search, verify_report, SearchConfig};
use ztau::model_set::{contains, members_in_interval, Patch};
use ztau::ring::RingElement;
use ztau::triples::{decompose, enumerate, PowerTriple};
use ztau::window_shift::{min_shift, solution_family};

fn el(m: i64, n: i64) -> RingElement {
    RingElement::new(m, n)
}

fn els(pairs: &[(i64, i64)]) -> Vec<RingElement> {
    pairs.iter().map(|&(m, n)| el(m, n)).collect()
}

fn triple(x: (i64, i64), y: (i64, i64), z: (i64, i64), k: u32) -> PowerTriple {
    PowerTriple::new(el(x.0, x.1), el(y.0, y.1), el(z.0, z.1), k)
}

/// Printed 6-place decimal vs. a reference value, at tolerance 5·10⁻⁴.
fn decimal_close(printed: &str, reference: f64) -> bool {
    let value: f64 = printed.parse().expect("decimal string parses as f64");
    (value - reference).abs() < 5e-4
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545f4914f6cdd1d)
    }

    fn coeff(&mut self, radius: u64) -> i64 {
        (self.next() % (2 * radius + 1)) as i64 - radius as i64
    }

    fn element(&mut self, radius: u64) -> RingElement {
        el(self.coeff(radius), self.coeff(radius))
    }
}

#[test]
fn criterion_1_patch_fidelity() {
    let start = Instant::now();
    let p0 = Patch::generate(0).unwrap();
    let p1 = Patch::generate(1).unwrap();
    let p2 = Patch::generate(2).unwrap();
    assert_eq!(p0.points(), &els(&[(0, -1), (0, 0), (0, 1)])[..]);
    assert_eq!(
        p1.points(),
        &els(&[(-1, -2), (-1, -1), (0, -1), (0, 0), (0, 1), (1, 1), (1, 2)])[..]
    );
    assert_eq!(
        p2.points(),
        &els(&[
            (-3, -5),
            (-3, -4),
            (-2, -4),
            (-2, -3),
            (-2, -2),
            (-1, -2),
            (-1, -1),
            (0, -1),
            (0, 0),
            (0, 1),
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 4),
            (3, 5),
        ])[..]
    );
    assert_eq!((p0.len(), p1.len(), p2.len()), (3, 7, 17));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 PASS: patches 0/1/2 match the displayed point sets ({elapsed:?})");
}

#[test]
fn criterion_2_small_shift_example() {
    let start = Instant::now();
    let r = min_shift(&triple((0, 1), (0, 2), (2, 1), 2)).unwrap();
    assert_eq!(r.exponent, 2);
    assert_eq!(r.shifted, triple((1, 2), (2, 4), (3, 4), 2));
    let printed: Vec<String> = r.sigma_values.iter().map(|s| s.decimal_string(6)).collect();
    assert!(decimal_close(&printed[0], -0.236));
    assert!(decimal_close(&printed[1], -0.472));
    assert!(decimal_close(&printed[2], 0.528));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 2 PASS: (τ, 2τ, 2+τ) shifts at N=2 with σ ≈ {} ({elapsed:?})",
        printed.join(", ")
    );
}

#[test]
fn criterion_3_large_shift_example() {
    let r = min_shift(&triple((2, 12), (11, 8), (3, 18), 2)).unwrap();
    assert_eq!(r.exponent, 6);
    assert_eq!(r.shifted, triple((106, 172), (119, 192), (159, 258), 2));
    let printed: Vec<String> = r.sigma_values.iter().map(|s| s.decimal_string(6)).collect();
    // correct 3-decimal roundings of σ(106+172τ), σ(119+192τ), σ(159+258τ);
    // pinned to 6 places below
    assert!(decimal_close(&printed[0], -0.302));
    assert!(decimal_close(&printed[1], 0.337));
    assert!(decimal_close(&printed[2], -0.453));
    assert_eq!(printed, ["-0.301846", "0.337474", "-0.452769"]);
    println!(
        "criterion 3 PASS: (2+12τ, 11+8τ, 3+18τ) shifts at N=6 with σ ≈ {}",
        printed.join(", ")
    );
}

#[test]
fn criterion_4_cubic_identity_and_shift() {
    let lhs = &el(4, 3).pow(3) + &el(5, 6).pow(3);
    assert_eq!(lhs, el(1080, 1728));
    assert_eq!(el(6, 6).pow(3), el(1080, 1728));

    let r = min_shift(&triple((4, 3), (5, 6), (6, 6), 3)).unwrap();
    assert_eq!(r.exponent, 3);
    assert_eq!(r.shifted, triple((10, 17), (17, 28), (18, 30), 3));
    println!("criterion 4 PASS: (4+3τ)³ + (5+6τ)³ = 1080+1728τ = (6+6τ)³, shift N=3");
}

#[test]
fn criterion_5_cubic_search_is_positive() {
    let start = Instant::now();
    let report = search(&SearchConfig::new(3, 12));
    let elapsed = start.elapsed();
    assert!(verify_report(&report));

    // up to canonicalization: some orbit variant of the known solution is
    // reported (odd k identifies (x,y,w) with (−x,−y,−w) and swaps x↔y)
    let known = triple((4, 3), (5, 6), (6, 6), 3);
    let orbit = [
        known.clone(),
        triple((5, 6), (4, 3), (6, 6), 3),
        triple((-4, -3), (-5, -6), (-6, -6), 3),
        triple((-5, -6), (-4, -3), (-6, -6), 3),
    ];
    assert!(
        orbit.iter().any(|v| report.solutions.contains(v)),
        "counterexample missing from {} solutions",
        report.solutions.len()
    );
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "criterion 5 PASS: search(k=3, bound=12) finds the cubic counterexample, {} solutions ({elapsed:?})",
        report.solutions.len()
    );
}

#[test]
fn criterion_6_quartic_and_quintic_searches_are_negative() {
    let start = Instant::now();
    let quartic = search(&SearchConfig::new(4, 30));
    let quintic = search(&SearchConfig::new(5, 30));
    let elapsed = start.elapsed();
    assert!(
        quartic.solutions.is_empty(),
        "quartic box produced solutions"
    );
    assert!(
        quintic.solutions.is_empty(),
        "quintic box produced solutions"
    );
    let expected_pairs = ((2u64 * 30 + 1).pow(2) - 1).pow(2);
    assert_eq!(quartic.pairs_tested, expected_pairs);
    assert_eq!(quintic.pairs_tested, expected_pairs);
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!(
        "criterion 6 PASS: k=4 and k=5 boxes at bound 30 are empty, {expected_pairs} pairs each ({elapsed:?})"
    );
}

#[test]
fn criterion_7a_euclidean_inequality() {
    let mut rng = XorShift(0x517cc1b727220a95);
    let mut tested = 0u32;
    while tested < 100_000 {
        let x = rng.element(1_000_000_000);
        let y = rng.element(1_000_000_000);
        if y.is_zero() {
            continue;
        }
        let (q, r) = x.euclid_div(&y).unwrap();
        let remainder_norm = r.norm().abs();
        assert!(
            remainder_norm < y.norm().abs(),
            "|N(x−qy)| ≥ |N(y)| at x={x}, y={y}, q={q}"
        );
        tested += 1;
    }
    println!("criterion 7a PASS: |N(x−qy)| < |N(y)| on 100000 random pairs");
}

#[test]
fn criterion_7b_norm_and_conjugation_laws() {
    let mut rng = XorShift(0x2b992ddfa23249d6);
    for _ in 0..100_000 {
        let x = rng.element(1_000_000_000);
        let y = rng.element(1_000_000_000);
        let product = &x * &y;
        assert_eq!(
            product.norm(),
            x.norm() * y.norm(),
            "norm not multiplicative"
        );
        assert_eq!(x.conj().conj(), x, "conjugation not involutive");
        assert_eq!((&x + &y).conj(), &x.conj() + &y.conj(), "σ not additive");
        assert_eq!(
            product.conj(),
            &x.conj() * &y.conj(),
            "σ not multiplicative"
        );
    }
    println!("criterion 7b PASS: norm multiplicativity and σ laws on 100000 random pairs");
}

#[test]
fn criterion_7c_no_norm_of_two() {
    // N(m+nτ) = m² + mn − n² never hits ±2: 2 is irreducible
    for m in -1000i64..=1000 {
        for n in -1000i64..=1000 {
            let norm = m * m + m * n - n * n;
            assert!(norm != 2 && norm != -2, "norm ±2 at ({m}, {n})");
        }
    }
    // spot-check the arbitrary-precision route agrees with the i64 formula
    for m in (-1000i64..=1000).step_by(97) {
        for n in (-1000i64..=1000).step_by(89) {
            let expected = m * m + m * n - n * n;
            assert_eq!(el(m, n).norm(), expected.into());
        }
    }
    println!("criterion 7c PASS: no element with |m|,|n| ≤ 1000 has norm ±2");
}

#[test]
fn criterion_7d_closure_on_patch_six() {
    let patch = Patch::generate(6).unwrap();
    let mut members = 0u32;
    for x in patch.points() {
        if contains(x) {
            members += 1;
            assert!(contains(&x.times_tau()), "closure failed at {x}");
        }
    }
    assert!(members > 0);
    println!(
        "criterion 7d PASS: τ-closure holds for all {members} members of patch(6) ({} points)",
        patch.len()
    );
}

#[test]
fn criterion_7e_decomposition_completeness() {
    // every triple from the witness enumeration at bound 3 round-trips
    let mut enumerated = 0u32;
    for t in enumerate(3, usize::MAX) {
        let witness = decompose(&t).unwrap_or_else(|e| panic!("decompose({t}) failed: {e}"));
        assert_eq!(witness.triple(), t, "witness does not regenerate {t}");
        enumerated += 1;
    }

    // independent exhaustive oracle: all (x, y, z) in the coefficient box
    // [−8, 8]² with x² + y² = z² and nonzero components
    let bound = 8i64;
    let mut square_index = std::collections::HashMap::new();
    let mut box_elements = Vec::new();
    for m in -bound..=bound {
        for n in -bound..=bound {
            let e = el(m, n);
            if e.is_zero() {
                continue;
            }
            let sq = e.pow(2);
            square_index
                .entry((sq.m().clone(), sq.n().clone()))
                .or_insert_with(Vec::new)
                .push(e.clone());
            box_elements.push((e, sq));
        }
    }
    let mut exhaustive = 0u32;
    for (x, x_sq) in &box_elements {
        for (y, y_sq) in &box_elements {
            let s = x_sq + y_sq;
            if let Some(zs) = square_index.get(&(s.m().clone(), s.n().clone())) {
                for z in zs {
                    let t = PowerTriple::new(x.clone(), y.clone(), z.clone(), 2);
                    let witness =
                        decompose(&t).unwrap_or_else(|e| panic!("decompose({t}) failed: {e}"));
                    assert_eq!(witness.triple(), t);
                    exhaustive += 1;
                }
            }
        }
    }
    assert!(exhaustive > 0);
    println!(
        "criterion 7e PASS: decompose round-trips {enumerated} enumerated and {exhaustive} exhaustive-box triples"
    );
}

#[test]
fn criterion_7f_threshold_is_two_sided() {
    for t in [
        triple((0, 1), (0, 2), (2, 1), 2),
        triple((2, 12), (11, 8), (3, 18), 2),
        triple((4, 3), (5, 6), (6, 6), 3),
    ] {
        let r = min_shift(&t).unwrap();
        for n in r.exponent - 5..r.exponent {
            let shifted = t.scale(&RingElement::tau_power(n));
            assert!(
                !(contains(&shifted.x) && contains(&shifted.y) && contains(&shifted.z)),
                "{t} inside the window below N at n = {n}"
            );
        }
        for n in r.exponent..=r.exponent + 10 {
            let shifted = t.scale(&RingElement::tau_power(n));
            assert!(shifted.verify());
            assert!(
                contains(&shifted.x) && contains(&shifted.y) && contains(&shifted.z),
                "{t} outside the window at n = {n} ≥ N"
            );
        }
    }
    println!("criterion 7f PASS: membership fails on [N−5, N−1] and holds on [N, N+10] for all example triples");
}

#[test]
fn criterion_7g_infinitely_many_cubic_solutions_at_desk_scale() {
    let family = solution_family(&triple((4, 3), (5, 6), (6, 6), 3), 20).unwrap();
    assert_eq!(family.len(), 20);
    for member in &family {
        assert!(member.verify(), "{member} fails the cubic equation");
        assert!(
            contains(&member.x) && contains(&member.y) && contains(&member.z),
            "{member} has a component outside the model set"
        );
    }
    let mut unique = family.clone();
    unique.sort_by(|a, b| a.x.cmp(&b.x));
    unique.dedup();
    assert_eq!(unique.len(), 20, "family members repeat");
    println!("criterion 7g PASS: 20 distinct in-window cubic solutions generated by τ-shifting");
}

#[test]
fn criterion_8_boundary_points_are_documented() {
    assert!(
        contains(&el(-1, 0)),
        "σ(−1) = −1 must be inside the closed end"
    );
    assert!(
        !contains(&el(0, -1)),
        "σ(−τ) = τ−1 must be excluded by the open end"
    );

    for i in 1..=3 {
        let patch = Patch::generate(i).unwrap();
        let members = members_in_interval(&patch.hull_lo().embed(), &patch.hull_hi().embed());
        let patch_only: Vec<_> = patch
            .points()
            .iter()
            .filter(|p| !members.contains(p))
            .cloned()
            .collect();
        let window_only: Vec<_> = members
            .iter()
            .filter(|m| !patch.points().contains(m))
            .cloned()
            .collect();
        assert_eq!(
            patch_only,
            vec![el(0, -1)],
            "patch-only set at iteration {i}"
        );
        assert_eq!(
            window_only,
            vec![el(-1, 0)],
            "window-only set at iteration {i}"
        );
    }
    println!("criterion 8 PASS: contains(−1) true, contains(−τ) false, symmetric difference is {{−τ, −1}}");
}
