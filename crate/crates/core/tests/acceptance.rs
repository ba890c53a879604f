//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero when any fails.
//!
//! Expected values come from small oracles written here, independent of the
//! library code they check, or are fixed reference constants (final charges).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tjoin_core::coloring::{
    find_six_edge_coloring, packing_from_coloring, verify_packing, Color, ColorSet, SolveOutcome,
    SolverConfig,
};
use tjoin_core::cuts::min_odd_cut;
use tjoin_core::discharging::{audit, discharge, AuditOptions, Verdict};
use tjoin_core::ecoloring::{
    canonicalize_trigon, enumerate_e_colorings, find_mate, is_canonical, verify_e_coloring,
    CanonOutcome, EColoring, MateOptions, MateOutcome,
};
use tjoin_core::plane_graph::{classify, parse_plane_graph, Neighbor, PlaneMultigraph};
use tjoin_core::reductions::{
    apply_swap, check_swap_cut_property, enumerate_swaps, LemmaFamily, SwapSpec,
};
use tjoin_core::workbench::{generate, InstanceSpec};

type Outcome = Result<String, String>;

fn g(spec: &InstanceSpec) -> PlaneMultigraph {
    generate(spec).unwrap()
}

fn within(label: &str, took: Duration, limit: Duration) -> Result<(), String> {
    if took <= limit {
        Ok(())
    } else {
        Err(format!("{label} took {took:?}, limit {limit:?}"))
    }
}

// ---- oracles -------------------------------------------------------------

/// Faces counted by walking `successor of reverse(d)` over the raw rotations.
fn count_faces(g: &PlaneMultigraph) -> usize {
    let rot = g.rotations();
    let mut pos = vec![(0usize, 0usize); g.dart_count()];
    for (v, r) in rot.iter().enumerate() {
        for (i, &d) in r.iter().enumerate() {
            pos[d] = (v, i);
        }
    }
    let twin = |d: usize| {
        let [a, b] = g.edge_darts(g.edge_of(d));
        if a == d {
            b
        } else {
            a
        }
    };
    let mut seen = vec![false; g.dart_count()];
    let mut faces = 0;
    for s in 0..g.dart_count() {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            let (v, i) = pos[twin(d)];
            d = rot[v][(i + 1) % rot[v].len()];
        }
    }
    faces
}

fn endpoints(g: &PlaneMultigraph) -> Vec<(usize, usize)> {
    (0..g.edge_count()).map(|e| g.endpoints(e)).collect()
}

/// Size of the cut `δ(mask)`, counted edge by edge.
fn cut_of(ends: &[(usize, usize)], mask: u64) -> usize {
    ends.iter()
        .filter(|&&(a, b)| (mask >> a & 1) != (mask >> b & 1))
        .count()
}

/// Six distinct colors at every vertex.
fn proper(g: &PlaneMultigraph, col: &[Color]) -> bool {
    let mut seen = vec![0u8; g.vertex_count()];
    for (e, &(a, b)) in endpoints(g).iter().enumerate() {
        let bit = 1u8 << col[e].index();
        for v in [a, b] {
            if seen[v] & bit != 0 {
                return false;
            }
            seen[v] |= bit;
        }
    }
    seen.iter().all(|&s| s == 0x3f)
}

/// Plain backtracking over edges in id order.
fn brute_colorable(g: &PlaneMultigraph) -> bool {
    let ends = endpoints(g);
    fn go(i: usize, ends: &[(usize, usize)], used: &mut Vec<u8>) -> bool {
        if i == ends.len() {
            return true;
        }
        let (a, b) = ends[i];
        for c in 0..6 {
            let bit = 1u8 << c;
            if used[a] & bit == 0 && used[b] & bit == 0 {
                used[a] |= bit;
                used[b] |= bit;
                if go(i + 1, ends, used) {
                    return true;
                }
                used[a] &= !bit;
                used[b] &= !bit;
            }
        }
        false
    }
    go(0, &ends, &mut vec![0; g.vertex_count()])
}

/// Odd sides up to complement, with vertex 0 fixed on the side.
fn odd_masks(n: usize) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    (0..1u64 << (n - 1))
        .map(|r| r << 1 | 1)
        .filter(|&m| m != full && (m.count_ones() % 2 == 1 || (n as u32 - m.count_ones()) % 2 == 1))
        .collect()
}

// ---- criteria ------------------------------------------------------------

fn c1_euler() -> Outcome {
    let start = Instant::now();
    let mut specs = vec![
        InstanceSpec::Hexabond,
        InstanceSpec::Dk4,
        InstanceSpec::C4x3,
        InstanceSpec::Dq3,
    ];
    specs.extend((3..=6).map(InstanceSpec::DoubledPrism));
    specs.push(InstanceSpec::DoubledDodecahedron);
    for s in &specs {
        let g = g(s);
        let f = count_faces(&g);
        let chi = g.vertex_count() as isize - g.edge_count() as isize + f as isize;
        if chi != 2 || f != g.face_count() {
            return Err(format!(
                "{s}: V-E+F = {chi}, library faces {}",
                g.face_count()
            ));
        }
    }
    within("all instances", start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{} instances, {:?}", specs.len(), start.elapsed()))
}

fn c2_charge_totals() -> Outcome {
    let mut n = 0;
    for s in InstanceSpec::corpus() {
        let start = Instant::now();
        let g = g(&s);
        let Ok(c) = classify(&g) else {
            continue;
        };
        // every face, bigon faces included, carries 4(d - 3)
        let oracle: i64 = g.faces().iter().map(|f| 4 * (f.degree() as i64 - 3)).sum();
        let d = discharge(&c);
        if oracle != -24 || d.initial_total != -24 || d.final_total != -24 {
            return Err(format!(
                "{s}: oracle {oracle}, initial {}, final {}",
                d.initial_total, d.final_total
            ));
        }
        within(&s.to_string(), start.elapsed(), Duration::from_secs(1))?;
        n += 1;
    }
    Ok(format!("{n} classified instances total -24, conserved"))
}

fn c3_golden() -> Outcome {
    let cases = [
        (InstanceSpec::Dk4, 3, -6, 2, 0),
        (InstanceSpec::C4x3, 4, -12, 3, 0),
        (InstanceSpec::Dq3, 4, -4, 2, 0),
    ];
    for (s, deg, face_charge, order, multi_charge) in cases {
        let g = g(&s);
        let c = classify(&g).map_err(|e| e.to_string())?;
        let d = discharge(&c);
        for e in &d.final_.entries {
            let (want, kind) = match e.element {
                Neighbor::Face(f) if c.degree(f) == deg => (face_charge, "face"),
                Neighbor::Multigon(m) if c.order(m) == order => (multi_charge, "multigon"),
                _ => return Err(format!("{s}: unexpected element {:?}", e.element)),
            };
            if e.charge != want {
                return Err(format!(
                    "{s}: {kind} {:?} has {} ≠ {want}",
                    e.element, e.charge
                ));
            }
        }
    }
    Ok("DK4 -6/0, C4x3 -12/0, DQ3 -4/0 quarter units".into())
}

fn c4_packings() -> Outcome {
    let limits = [
        (InstanceSpec::Hexabond, 1),
        (InstanceSpec::Dk4, 1),
        (InstanceSpec::C4x3, 1),
        (InstanceSpec::Dq3, 10),
        (InstanceSpec::DoubledPrism(3), 10),
        (InstanceSpec::DoubledPrism(4), 10),
        (InstanceSpec::DoubledPrism(5), 10),
        (InstanceSpec::DoubledPrism(6), 10),
        (InstanceSpec::DoubledDodecahedron, 120),
    ];
    let mut lines = Vec::new();
    for (s, secs) in limits {
        let g = g(&s);
        let rep = min_odd_cut(&g, 20).map_err(|e| e.to_string())?;
        if rep.min_odd.size < 6 {
            continue;
        }
        let start = Instant::now();
        let out =
            find_six_edge_coloring(&g, &SolverConfig::default()).map_err(|e| e.to_string())?;
        let Some(col) = out.coloring() else {
            return Err(format!("{s}: no coloring found ({out:?})"));
        };
        if !proper(&g, col.as_slice()) {
            return Err(format!("{s}: coloring is not proper"));
        }
        let t: Vec<usize> = (0..g.vertex_count()).collect();
        let p = packing_from_coloring(&g, col).map_err(|e| format!("{s}: {e}"))?;
        verify_packing(&g, &t, &p).map_err(|e| format!("{s}: {e}"))?;
        // T = V: each class meets every vertex an odd number of times
        let ends = endpoints(&g);
        for class in &p.classes {
            let mut deg = vec![0; g.vertex_count()];
            for &e in class {
                deg[ends[e].0] += 1;
                deg[ends[e].1] += 1;
            }
            if deg.iter().any(|d| d % 2 == 0) {
                return Err(format!("{s}: class is not a V-join"));
            }
        }
        within(&s.to_string(), start.elapsed(), Duration::from_secs(secs))?;
        lines.push(format!("{s} {:?}", start.elapsed()));
    }
    Ok(lines.join(", "))
}

fn c5_classes_cross_odd_cuts() -> Outcome {
    let mut checked = 0usize;
    for s in InstanceSpec::corpus() {
        let g = g(&s);
        let n = g.vertex_count();
        if n > 12 || !g.is_regular(6) {
            continue;
        }
        let ends = endpoints(&g);
        let masks = odd_masks(n);
        for seed in 0..4 {
            let cfg = SolverConfig {
                seed,
                ..SolverConfig::default()
            };
            let out = find_six_edge_coloring(&g, &cfg).map_err(|e| e.to_string())?;
            let Some(col) = out.coloring() else {
                continue;
            };
            for &m in &masks {
                let mut crossing = 0u8;
                for (e, &(a, b)) in ends.iter().enumerate() {
                    if (m >> a & 1) != (m >> b & 1) {
                        crossing |= 1 << col.get(e).index();
                    }
                }
                if crossing != 0x3f {
                    return Err(format!("{s} seed {seed}: side {m:#b} misses a color"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (coloring, odd cut) pairs"))
}

fn c6_swaps() -> Outcome {
    let start = Instant::now();
    let mut validated = 0usize;
    let mut seen: Vec<(String, SwapSpec)> = Vec::new();
    let pool = [
        InstanceSpec::Dk4,
        InstanceSpec::C4x3,
        InstanceSpec::Dq3,
        InstanceSpec::DoubledPrism(3),
        InstanceSpec::DoubledPrism(4),
        InstanceSpec::DoubledPrism(5),
    ];
    for s in &pool {
        let g = g(s);
        let ends = endpoints(&g);
        let n = g.vertex_count();
        for k in [4, 6] {
            for spec in enumerate_swaps(&g, k, 12) {
                let out = apply_swap(&g, &spec).map_err(|e| e.to_string())?;
                let after = endpoints(&out.graph);
                for r in 0..1u64 << (n - 1) {
                    let m = r << 1 | 1;
                    let d = cut_of(&ends, m).abs_diff(cut_of(&after, m));
                    if d > 2 {
                        return Err(format!("{s} {:?}: |Δ| = {d} on {m:#b}", spec.vertices));
                    }
                }
                validated += 1;
                seen.push((s.to_string(), spec));
            }
        }
    }
    if validated < 100 {
        return Err(format!("only {validated} k=4/6 swaps"));
    }
    let dd = g(&InstanceSpec::DoubledDodecahedron);
    let spec = enumerate_swaps(&dd, 8, 1)
        .pop()
        .ok_or("no k=8 swap on the dodecahedron")?;
    let out = apply_swap(&dd, &spec).map_err(|e| e.to_string())?;
    let rep = check_swap_cut_property(&dd, &out.graph, 8, 20).map_err(|e| e.to_string())?;
    if rep.max_abs_delta > 4 {
        return Err(format!("k=8: |Δ| = {}", rep.max_abs_delta));
    }
    within("swaps", start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "{validated} k=4/6 swaps |Δ| ≤ 2; k=8 {:?} max |Δ| = {}; {:?}",
        spec.vertices,
        rep.max_abs_delta,
        start.elapsed()
    ))
}

fn c7_audit() -> Outcome {
    let opts = AuditOptions { cut_cap: 20 };
    let mut lines = Vec::new();
    for s in InstanceSpec::named() {
        let g = g(&s);
        let rep = audit(&g, &opts);
        if rep.verdict != Verdict::Consistent {
            return Err(format!("{s}: {}", rep.verdict));
        }
        if rep.violations.is_empty() {
            return Err(format!("{s}: no catalog violation"));
        }
        if let Some(d) = &rep.discharge {
            let c = classify(&g).unwrap();
            for e in d.final_.entries.iter().filter(|e| e.charge < 0) {
                let want = match e.element {
                    Neighbor::Multigon(_) => LemmaFamily::Multigon,
                    Neighbor::Face(f) => match c.degree(f) {
                        3 => LemmaFamily::ThreeFace,
                        4 => LemmaFamily::FourFace,
                        5 => LemmaFamily::FiveFace,
                        _ => LemmaFamily::LargeFace,
                    },
                };
                let tagged = rep.negatives.iter().find(|x| x.element == e.element);
                if tagged.map(|x| x.family) != Some(want) {
                    return Err(format!("{s}: {:?} tagged {tagged:?}", e.element));
                }
            }
        }
        lines.push(format!("{s}:{}", rep.violations.len()));
    }
    let named = InstanceSpec::named();
    for s in InstanceSpec::corpus()
        .into_iter()
        .filter(|s| !named.contains(s))
    {
        let rep = audit(&g(&s), &opts);
        if rep.verdict != Verdict::Consistent {
            return Err(format!("{s}: {}", rep.verdict));
        }
        lines.push(format!("{s}:{}", rep.violations.len()));
    }
    Ok(format!("consistent; violations {}", lines.join(" ")))
}

fn c8_solver_vs_oracle() -> Outcome {
    let mut lines = Vec::new();
    for s in InstanceSpec::corpus() {
        let g = g(&s);
        if !g.is_regular(6) || g.edge_count() > 14 {
            continue;
        }
        let oracle = brute_colorable(&g);
        let got = match find_six_edge_coloring(&g, &SolverConfig::default())
            .map_err(|e| e.to_string())?
        {
            SolveOutcome::Found { coloring, .. } => {
                if !proper(&g, coloring.as_slice()) {
                    return Err(format!("{s}: improper coloring"));
                }
                true
            }
            SolveOutcome::NoColoring { .. } => false,
            SolveOutcome::NoneWithinBudget { .. } => return Err(format!("{s}: inconclusive")),
        };
        if got != oracle {
            return Err(format!("{s}: solver {got}, oracle {oracle}"));
        }
        lines.push(format!("{s}={got}"));
    }
    if lines.len() < 4 {
        return Err(format!("only {} instances checked", lines.len()));
    }
    Ok(lines.join(" "))
}

fn c9_e_colorings() -> Outcome {
    let start = Instant::now();
    let hb = g(&InstanceSpec::Hexabond);
    let ends = endpoints(&hb);
    let mut brute = 0usize;
    let mut verified = 0usize;
    for set in 0u8..64 {
        if !matches!(set.count_ones(), 3 | 5) {
            continue;
        }
        for code in 0..6usize.pow(5) {
            let mut cols = [0usize; 6];
            let mut x = code;
            for c in cols.iter_mut().skip(1) {
                *c = x % 6;
                x /= 6;
            }
            let mut counts = [[0u32; 6]; 2];
            for (f, &(a, b)) in ends.iter().enumerate() {
                let bits = if f == 0 { set } else { 1 << cols[f] };
                for c in 0..6 {
                    if bits >> c & 1 == 1 {
                        counts[a][c] += 1;
                        counts[b][c] += 1;
                    }
                }
            }
            if counts.iter().all(|v| v.iter().all(|k| k % 2 == 1)) {
                brute += 1;
            }
            let colors: Vec<Color> = cols.iter().map(|&c| Color::from_index(c)).collect();
            if verify_e_coloring(&hb, &EColoring::new(0, ColorSet::from_bits(set), &colors)).is_ok()
            {
                verified += 1;
            }
        }
    }
    if brute != 7056 || verified != brute {
        return Err(format!("brute {brute}, verified {verified}"));
    }
    let mut canon = 0;
    for ec in enumerate_e_colorings(&hb, 0, usize::MAX) {
        match canonicalize_trigon(&hb, &ec).map_err(|e| e.to_string())? {
            CanonOutcome::Canonical { coloring, .. } => {
                if verify_e_coloring(&hb, &coloring).is_err() || !is_canonical(&hb, &coloring) {
                    return Err(format!("not canonical from {ec:?}"));
                }
            }
            CanonOutcome::ProperColoring { coloring, .. } => {
                if !proper(&hb, coloring.as_slice()) {
                    return Err("improper extraction".into());
                }
            }
        }
        canon += 1;
    }
    let (mut searches, mut trivial, mut mates) = (0, 0, 0);
    for s in [
        InstanceSpec::Dk4,
        InstanceSpec::DoubledPrism(3),
        InstanceSpec::Dq3,
    ] {
        let g = g(&s);
        let ends = endpoints(&g);
        for ec in enumerate_e_colorings(&g, 0, 30) {
            for c in Color::ALL {
                let out =
                    find_mate(&g, &ec, c, &MateOptions::default()).map_err(|e| e.to_string())?;
                searches += 1;
                if let MateOutcome::Found { mate } = out {
                    if mate.trivial {
                        trivial += 1;
                        continue;
                    }
                    let side: u64 = mate.side.iter().fold(0, |m, &v| m | 1 << v);
                    let count = ends
                        .iter()
                        .enumerate()
                        .filter(|&(e, &(a, b))| {
                            (side >> a & 1) != (side >> b & 1) && ec.carries(e, c)
                        })
                        .count();
                    if count < 5 {
                        return Err(format!("{s}: mate of {c} has {count} edges of its color"));
                    }
                    mates += 1;
                }
            }
        }
    }
    within("e-coloring layer", start.elapsed(), Duration::from_secs(30))?;
    Ok(format!(
        "{brute} HB6 e-colorings, {canon} canonicalized; {searches} mate searches, \
         {trivial} trivial, {mates} non-trivial; {:?}",
        start.elapsed()
    ))
}

fn c10_round_trip() -> Outcome {
    let mut n = 0;
    for s in InstanceSpec::corpus() {
        let g = g(&s);
        let text = g.serialize_text();
        let back = parse_plane_graph(&text).map_err(|e| format!("{s}: {e}"))?;
        if back.serialize_text() != text {
            return Err(format!("{s}: text differs after round trip"));
        }
        let json = g.serialize_json();
        let back = parse_plane_graph(&json).map_err(|e| format!("{s}: {e}"))?;
        if back.serialize_json() != json || back != g {
            return Err(format!("{s}: json differs after round trip"));
        }
        n += 1;
    }
    Ok(format!("{n} instances, text and json"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 euler characteristic", c1_euler),
        ("2 initial charge total and conservation", c2_charge_totals),
        ("3 golden final charges", c3_golden),
        ("4 colorings and six T-joins", c4_packings),
        ("5 color classes cross odd cuts", c5_classes_cross_odd_cuts),
        ("6 swap cut perturbation", c6_swaps),
        ("7 audit consistency", c7_audit),
        ("8 solver agrees with oracle", c8_solver_vs_oracle),
        ("9 e-coloring layer", c9_e_colorings),
        ("10 serialization round trip", c10_round_trip),
    ];
    let mut results = BTreeMap::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = f();
        match &r {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(why) => println!("criterion {name}: FAIL ({why})"),
        }
        results.insert(i, r.is_ok());
    }
    let passed = results.values().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
