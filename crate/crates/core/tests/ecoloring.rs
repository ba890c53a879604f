use tjoin_core::coloring::{verify_coloring, Color, ColorSet};
use tjoin_core::ecoloring::{
    canonicalize_trigon, enumerate_e_colorings, find_mate, is_canonical, verify_e_coloring,
    CanonOutcome, EColoring, MateOptions, MateOutcome,
};
use tjoin_core::workbench::{generate, InstanceSpec};

/// Parity check written out directly, independent of the library verifier.
fn parity_ok(ends: &[(usize, usize)], e: usize, set: u8, cols: &[usize]) -> bool {
    let mut counts = [[0u32; 6]; 2];
    for (f, &(a, b)) in ends.iter().enumerate() {
        let bits = if f == e { set } else { 1 << cols[f] };
        for c in 0..6 {
            if bits >> c & 1 == 1 {
                counts[a][c] += 1;
                counts[b][c] += 1;
            }
        }
    }
    counts.iter().all(|v| v.iter().all(|&k| k % 2 == 1))
}

#[test]
fn hexabond_enumeration_matches_brute_force() {
    let g = generate(&InstanceSpec::Hexabond).unwrap();
    let ends: Vec<_> = (0..6).map(|f| g.endpoints(f)).collect();
    let mut brute = 0;
    let mut verified = 0;
    for set in 0u8..64 {
        let k = set.count_ones();
        if k != 3 && k != 5 {
            continue;
        }
        for code in 0..6usize.pow(5) {
            let mut cols = vec![0usize; 6];
            let mut x = code;
            for c in cols.iter_mut().skip(1) {
                *c = x % 6;
                x /= 6;
            }
            if parity_ok(&ends, 0, set, &cols) {
                brute += 1;
            }
            let colors: Vec<Color> = cols.iter().map(|&c| Color::from_index(c)).collect();
            let ec = EColoring::new(0, ColorSet::from_bits(set), &colors);
            if verify_e_coloring(&g, &ec).is_ok() {
                verified += 1;
            }
        }
    }
    assert_eq!(brute, 7056);
    assert_eq!(verified, brute);
    assert_eq!(enumerate_e_colorings(&g, 0, usize::MAX).len(), brute);
}

#[test]
fn every_hexabond_e_coloring_canonicalizes() {
    let g = generate(&InstanceSpec::Hexabond).unwrap();
    for ec in enumerate_e_colorings(&g, 0, usize::MAX) {
        match canonicalize_trigon(&g, &ec).unwrap() {
            CanonOutcome::Canonical { coloring, .. } => {
                verify_e_coloring(&g, &coloring).unwrap();
                assert!(is_canonical(&g, &coloring), "{ec:?}");
            }
            CanonOutcome::ProperColoring { coloring, .. } => {
                verify_coloring(&g, &coloring).unwrap()
            }
        }
    }
}

#[test]
fn trigon_instances_canonicalize() {
    for spec in [InstanceSpec::C4x3, InstanceSpec::TripledCycle(5)] {
        let g = generate(&spec).unwrap();
        for ec in enumerate_e_colorings(&g, 0, 500) {
            match canonicalize_trigon(&g, &ec).unwrap() {
                CanonOutcome::Canonical { coloring, .. } => assert!(is_canonical(&g, &coloring)),
                CanonOutcome::ProperColoring { coloring, .. } => {
                    verify_coloring(&g, &coloring).unwrap()
                }
            }
        }
    }
}

#[test]
fn nontrivial_mates_have_five_edges_of_their_color() {
    for spec in [
        InstanceSpec::Dk4,
        InstanceSpec::DoubledPrism(3),
        InstanceSpec::Dq3,
    ] {
        let g = generate(&spec).unwrap();
        for ec in enumerate_e_colorings(&g, 0, 40) {
            for c in Color::ALL {
                match find_mate(&g, &ec, c, &MateOptions::default()).unwrap() {
                    MateOutcome::Found { mate } if !mate.trivial => assert!(mate.color_edges >= 5),
                    MateOutcome::NoneFound { short_candidates } => {
                        assert!(short_candidates
                            .iter()
                            .all(|m| !m.trivial && m.color_edges < 5))
                    }
                    _ => {}
                }
            }
        }
    }
}
