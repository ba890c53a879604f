//! Exact discharging in quarter units, and the instance audit.
//!
//! Initial charge: `4(d - 3)` on a face of degree `d ≥ 3` and `-4(m - 1)`
//! on a multigon of order `m`. On a 6-regular plane multigraph with linear
//! multigons the total is `-24`. The rules move charge from faces to
//! multigons and 3-faces; totals are conserved exactly.

use crate::cuts::min_odd_cut;
use crate::plane_graph::{classify, Classification, FaceId, Neighbor, PlaneMultigraph};
use crate::reductions::{match_catalog, ConfigMatch, LemmaFamily, LemmaId, Skipped};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A charged element: a face of degree at least three, or a multigon.
pub type Element = Neighbor;

/// Expected initial total on every classified 6-regular instance.
pub const INITIAL_TOTAL: i64 = -24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    RMb,
    RMd,
    RT,
    RB3,
    RB5,
    RB,
    R3,
    R3t,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::RMb,
        Rule::RMd,
        Rule::RT,
        Rule::RB3,
        Rule::RB5,
        Rule::RB,
        Rule::R3,
        Rule::R3t,
    ];

    /// Charge moved per application, in quarter units.
    pub fn amount(self) -> i64 {
        match self {
            Rule::RMb => 6,
            Rule::RMd => 2,
            Rule::RT | Rule::RB3 | Rule::RB5 => 4,
            Rule::RB | Rule::R3t => 2,
            Rule::R3 => 1,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Application {
    pub rule: Rule,
    pub from: FaceId,
    pub to: Element,
    pub amount: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChargeEntry {
    pub element: Element,
    /// Face degree or multigon order.
    pub size: usize,
    pub charge: i64,
    pub family: LemmaFamily,
    /// Multigons of order at least five; no rule feeds them.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub order_ge5: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub entries: Vec<ChargeEntry>,
}

impl ChargeLedger {
    pub fn total(&self) -> i64 {
        self.entries.iter().map(|e| e.charge).sum()
    }

    pub fn get(&self, el: Element) -> Option<i64> {
        self.entries
            .iter()
            .find(|e| e.element == el)
            .map(|e| e.charge)
    }
}

fn entry(el: Element, size: usize, charge: i64) -> ChargeEntry {
    let multigon = matches!(el, Neighbor::Multigon(_));
    ChargeEntry {
        element: el,
        size,
        charge,
        family: if multigon {
            LemmaFamily::Multigon
        } else {
            LemmaFamily::of_face_degree(size)
        },
        order_ge5: multigon && size >= 5,
    }
}

/// Faces in id order, then multigons in id order.
pub fn initial_charges(c: &Classification) -> ChargeLedger {
    let faces = c
        .charged_faces()
        .map(|i| entry(Neighbor::Face(i.face), i.degree, 4 * (i.degree as i64 - 3)));
    let multis = c.multigons.iter().map(|m| {
        entry(
            Neighbor::Multigon(m.id),
            m.order(),
            -4 * (m.order() as i64 - 1),
        )
    });
    ChargeLedger {
        entries: faces.chain(multis).collect(),
    }
}

/// Every rule application, grouped by rule in the order of [`Rule::ALL`].
pub fn rule_applications(c: &Classification) -> Vec<Application> {
    let mut apps: Vec<Application> = Vec::new();
    let push = |apps: &mut Vec<Application>, rule: Rule, from: FaceId, to: Element| {
        apps.push(Application {
            rule,
            from,
            to,
            amount: rule.amount(),
        })
    };
    let distinct = |m: usize| {
        let mut s = c.sides(m).to_vec();
        s.dedup();
        s
    };

    // multigon rules
    let mut fed_by_m = vec![false; c.multigons.len()];
    for m in 0..c.multigons.len() {
        if !c.multigon_dangerous[m] {
            continue;
        }
        for f in distinct(m) {
            if c.bigness(f) >= 4 {
                push(&mut apps, Rule::RMb, f, Neighbor::Multigon(m));
                fed_by_m[m] = true;
            }
        }
        for f in distinct(m) {
            if c.is_dangerous_face(f) {
                push(&mut apps, Rule::RMd, f, Neighbor::Multigon(m));
                fed_by_m[m] = true;
            }
        }
    }
    for m in 0..c.multigons.len() {
        if c.order(m) == 3 && !fed_by_m[m] {
            for f in c.sides(m) {
                push(&mut apps, Rule::RT, f, Neighbor::Multigon(m));
            }
        }
    }

    // bigon rules
    for m in 0..c.multigons.len() {
        if c.order(m) != 2 {
            continue;
        }
        let s = c.sides(m);
        let mut special = false;
        for i in 0..2 {
            let (f, o) = (s[i], s[1 - i]);
            if i == 1 && f == o {
                break;
            }
            if c.degree(o) == 3 && c.bigness(f) >= 3 {
                push(&mut apps, Rule::RB3, f, Neighbor::Multigon(m));
                special = true;
            }
        }
        for i in 0..2 {
            let (f, o) = (s[i], s[1 - i]);
            if i == 1 && f == o {
                break;
            }
            if c.degree(o) == 5 && c.count_multigons(o) == 5 && c.bigness(f) >= 4 {
                push(&mut apps, Rule::RB5, f, Neighbor::Multigon(m));
                special = true;
            }
        }
        if !special {
            for f in s {
                push(&mut apps, Rule::RB, f, Neighbor::Multigon(m));
            }
        }
    }

    // 3-face rules
    for info in c.charged_faces().filter(|i| i.degree == 3) {
        let to = Neighbor::Face(info.face);
        let bigons = c.count_order(info.face, 2);
        if bigons == 1 && c.count_multigons(info.face) == 1 {
            let faces: Vec<FaceId> = info
                .slots
                .iter()
                .filter_map(|s| match s.neighbor {
                    Neighbor::Face(x) => Some(x),
                    Neighbor::Multigon(_) => None,
                })
                .collect();
            if faces.iter().all(|&x| c.bigness(x) >= 3) {
                for x in faces {
                    push(&mut apps, Rule::R3, x, to);
                }
            }
        }
        if c.count_order(info.face, 3) >= 1 {
            for s in &info.slots {
                if let Neighbor::Face(x) = s.neighbor {
                    if c.bigness(x) >= 5 {
                        push(&mut apps, Rule::R3t, x, to);
                    }
                }
            }
        }
    }
    apps.sort_by_key(|a| a.rule);
    apps
}

pub fn final_charges(initial: &ChargeLedger, apps: &[Application]) -> ChargeLedger {
    let mut delta: BTreeMap<Element, i64> = BTreeMap::new();
    for a in apps {
        *delta.entry(Neighbor::Face(a.from)).or_default() -= a.amount;
        *delta.entry(a.to).or_default() += a.amount;
    }
    ChargeLedger {
        entries: initial
            .entries
            .iter()
            .map(|e| ChargeEntry {
                charge: e.charge + delta.get(&e.element).copied().unwrap_or(0),
                ..*e
            })
            .collect(),
    }
}

pub fn rule_counts(apps: &[Application]) -> BTreeMap<Rule, usize> {
    let mut out = BTreeMap::new();
    for a in apps {
        *out.entry(a.rule).or_default() += 1;
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Discharge {
    pub initial: ChargeLedger,
    pub applications: Vec<Application>,
    pub rule_counts: BTreeMap<Rule, usize>,
    #[serde(rename = "final")]
    pub final_: ChargeLedger,
    pub initial_total: i64,
    pub final_total: i64,
    pub conserved: bool,
}

pub fn discharge(c: &Classification) -> Discharge {
    let initial = initial_charges(c);
    let applications = rule_applications(c);
    let final_ = final_charges(&initial, &applications);
    let (initial_total, final_total) = (initial.total(), final_.total());
    Discharge {
        rule_counts: rule_counts(&applications),
        initial,
        applications,
        final_,
        initial_total,
        final_total,
        conserved: initial_total == final_total,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeCharge {
    pub element: Element,
    pub charge: i64,
    pub family: LemmaFamily,
    /// Violated lemmas involving this element or one of its neighbors.
    pub nearby_violations: Vec<LemmaId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SSumException {
    pub face: FaceId,
    /// First slot of the window.
    pub slot: usize,
    pub window: usize,
    pub sum: i64,
    pub bound: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "ANOMALY")]
    Anomaly,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Anomaly => "ANOMALY",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub hypotheses: Vec<HypothesisCheck>,
    /// Reason the face structure could not be classified.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unclassified: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discharge: Option<Discharge>,
    pub catalog_matches: usize,
    pub violations: Vec<ConfigMatch>,
    pub skipped_lemmas: Vec<Skipped>,
    pub negatives: Vec<NegativeCharge>,
    pub s_sum_checked: usize,
    pub s_sum_exceptions: Vec<SSumException>,
    pub verdict: Verdict,
}

fn touches(m: &ConfigMatch, el: Element) -> bool {
    match el {
        Neighbor::Face(f) => m.faces.contains(&f),
        Neighbor::Multigon(x) => m.multigons.contains(&x),
    }
}

fn neighbors_of(c: &Classification, el: Element) -> Vec<Element> {
    match el {
        Neighbor::Face(f) => c
            .face(f)
            .map(|i| i.slots.iter().map(|s| s.neighbor).collect())
            .unwrap_or_default(),
        Neighbor::Multigon(m) => c.sides(m).iter().map(|&f| Neighbor::Face(f)).collect(),
    }
}

fn nearby(c: &Classification, violations: &[ConfigMatch], el: Element) -> Vec<LemmaId> {
    let mut around = neighbors_of(c, el);
    around.push(el);
    let mut out: Vec<LemmaId> = violations
        .iter()
        .filter(|m| around.iter().any(|&x| touches(m, x)))
        .map(|m| m.lemma)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Charge sent by face `f` into each of its slots. A neighbor filling
/// several slots has its total split evenly, or put on its first slot when
/// the split is not exact.
fn sent_per_slot(c: &Classification, f: FaceId, apps: &[Application]) -> Vec<i64> {
    let info = c.face(f).expect("charged face");
    let mut out = vec![0i64; info.degree];
    let mut by: BTreeMap<Element, i64> = BTreeMap::new();
    for a in apps.iter().filter(|a| a.from == f) {
        *by.entry(a.to).or_default() += a.amount;
    }
    for (n, amount) in by {
        let slots = c.slots_of(f, n);
        let k = slots.len() as i64;
        if k == 0 {
            continue;
        }
        if amount % k == 0 {
            for s in slots {
                out[s] += amount / k;
            }
        } else {
            out[slots[0]] += amount;
        }
    }
    out
}

/// Bounds on consecutive slot sums at faces of degree ≥ 6 away from any
/// violation: two slots at most 8, three slots at most 14 on ≥3-big faces.
fn s_sum_checks(
    c: &Classification,
    apps: &[Application],
    violations: &[ConfigMatch],
) -> (usize, Vec<SSumException>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for info in c.charged_faces().filter(|i| i.degree >= 6) {
        if !nearby(c, violations, Neighbor::Face(info.face)).is_empty() {
            continue;
        }
        let s = sent_per_slot(c, info.face, apps);
        let d = info.degree;
        let mut windows = vec![(2, 8)];
        if info.bigness >= 3 {
            windows.push((3, 14));
        }
        for (w, bound) in windows {
            for i in 0..d {
                checked += 1;
                let sum: i64 = (0..w).map(|j| s[(i + j) % d]).sum();
                if sum > bound {
                    bad.push(SSumException {
                        face: info.face,
                        slot: i,
                        window: w,
                        sum,
                        bound,
                    });
                }
            }
        }
    }
    (checked, bad)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    pub cut_cap: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            cut_cap: crate::cuts::DEFAULT_CUT_CAP,
        }
    }
}

/// Checks the hypotheses, runs the catalog and the discharging, and decides
/// whether the instance is consistent: it is if some lemma is violated or
/// a hypothesis fails. A graph that meets the hypotheses with every lemma
/// satisfied is an ANOMALY.
pub fn audit(g: &PlaneMultigraph, opts: &AuditOptions) -> AuditReport {
    let regular = g.is_regular(6);
    let mut hypotheses = vec![HypothesisCheck {
        name: "6-regular",
        status: if regular {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        detail: format!(
            "degrees {:?}",
            (0..g.vertex_count())
                .map(|v| g.degree(v))
                .collect::<Vec<_>>()
        ),
    }];
    hypotheses.push(match min_odd_cut(g, opts.cut_cap) {
        Ok(rep) => HypothesisCheck {
            name: "min-odd-cut-6",
            status: if rep.min_odd.size >= 6 {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail: format!("minimum odd cut {}", rep.min_odd.size),
        },
        Err(e) => HypothesisCheck {
            name: "min-odd-cut-6",
            status: CheckStatus::Skipped,
            detail: e.to_string(),
        },
    });

    let catalog = match_catalog(g, opts.cut_cap);
    let violations: Vec<ConfigMatch> = catalog.violations().cloned().collect();
    let (unclassified, discharge_, negatives, s_sum) = match classify(g) {
        Ok(c) => {
            let d = discharge(&c);
            let negatives = d
                .final_
                .entries
                .iter()
                .filter(|e| e.charge < 0)
                .map(|e| NegativeCharge {
                    element: e.element,
                    charge: e.charge,
                    family: e.family,
                    nearby_violations: nearby(&c, &violations, e.element),
                })
                .collect();
            let s_sum = s_sum_checks(&c, &d.applications, &violations);
            (None, Some(d), negatives, s_sum)
        }
        Err(e) => (Some(e.to_string()), None, Vec::new(), (0, Vec::new())),
    };
    let hypothesis_fails = hypotheses.iter().any(|h| h.status == CheckStatus::Fail);
    let verdict = if !violations.is_empty() || hypothesis_fails {
        Verdict::Consistent
    } else {
        Verdict::Anomaly
    };
    AuditReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        faces: g.face_count(),
        hypotheses,
        unclassified,
        discharge: discharge_,
        catalog_matches: catalog.matches.len(),
        violations,
        skipped_lemmas: catalog.skipped,
        negatives,
        s_sum_checked: s_sum.0,
        s_sum_exceptions: s_sum.1,
        verdict,
    }
}
