//! Property scans over lists of cubic graphs, with per-order reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::BufRead;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::ando::{find_ando_within, find_k_bisection_iso_linear_forests_within};
use crate::arboricity::{
    find_two_colouring_max4_edge_components_within, find_two_isomorphic_k_linear_forests_within,
    find_two_k_linear_forests_within,
};
use crate::bisection::find_k_bisection_within;
use crate::budget::{Budget, Outcome};
use crate::canon::canonical_code;
use crate::error::{invalid, Error, Result};
use crate::graph::CubicGraph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::structure::vertex_connectivity;
use crate::wormald::{find_pair_removed_strong_wormald_within, find_strong_wormald_within, find_wormald_within, Method};

/// A scanned property. A graph "fails" when no witness exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Property {
    KBisection { k: usize },
    Ando,
    IsoLinearForests { k: usize },
    /// Orders divisible by 4.
    StrongWormald { method: ScanMethod },
    /// Orders congruent to 2 mod 4.
    StrongWormald2Mod4 { method: ScanMethod },
    Wormald,
    PairRemoved,
    La { k: usize },
    LaIso { k: usize },
    ComponentsLe4Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanMethod {
    Bisection,
    Direct,
}

impl From<ScanMethod> for Method {
    fn from(m: ScanMethod) -> Self {
        match m {
            ScanMethod::Bisection => Method::Bisection,
            ScanMethod::Direct => Method::Direct,
        }
    }
}

pub const PROPERTY_NAMES: &[&str] = &[
    "k-bisection",
    "ando",
    "iso-linear-forests",
    "strong-wormald",
    "strong-wormald-direct",
    "strong-wormald-2mod4",
    "strong-wormald-2mod4-direct",
    "wormald",
    "pair-removed",
    "la",
    "la-iso",
    "components-le-4-edges",
];

impl Property {
    /// `k` is used by the properties that take one and ignored otherwise.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        let need_k = || k.ok_or_else(|| invalid(format!("property {name} needs --k")));
        Ok(match name {
            "k-bisection" => Property::KBisection { k: need_k()? },
            "ando" => Property::Ando,
            "iso-linear-forests" => Property::IsoLinearForests { k: need_k()? },
            "strong-wormald" => Property::StrongWormald { method: ScanMethod::Bisection },
            "strong-wormald-direct" => Property::StrongWormald { method: ScanMethod::Direct },
            "strong-wormald-2mod4" => Property::StrongWormald2Mod4 { method: ScanMethod::Bisection },
            "strong-wormald-2mod4-direct" => Property::StrongWormald2Mod4 { method: ScanMethod::Direct },
            "wormald" => Property::Wormald,
            "pair-removed" => Property::PairRemoved,
            "la" => Property::La { k: need_k()? },
            "la-iso" => Property::LaIso { k: need_k()? },
            "components-le-4-edges" => Property::ComponentsLe4Edges,
            _ => return Err(invalid(format!("unknown property {name:?}; known: {}", PROPERTY_NAMES.join(", ")))),
        })
    }

    /// Orders the property is defined on; other graphs are skipped.
    pub fn applies_to(&self, n: usize) -> bool {
        match self {
            Property::StrongWormald { .. } | Property::Wormald | Property::PairRemoved | Property::LaIso { .. } => {
                n.is_multiple_of(4)
            }
            Property::StrongWormald2Mod4 { .. } => n % 4 == 2,
            _ => true,
        }
    }

    pub fn check(&self, g: &CubicGraph, budget: &Budget) -> Outcome<()> {
        match *self {
            Property::KBisection { k } => find_k_bisection_within(g, k, budget).map(drop),
            Property::Ando => find_ando_within(g, budget).map(drop),
            Property::IsoLinearForests { k } => find_k_bisection_iso_linear_forests_within(g, k, budget).map(drop),
            Property::StrongWormald { method } | Property::StrongWormald2Mod4 { method } => {
                find_strong_wormald_within(g, method.into(), budget).map(drop)
            }
            Property::Wormald => order_ok(find_wormald_within(g, budget)),
            Property::PairRemoved => order_ok(find_pair_removed_strong_wormald_within(g, budget)),
            Property::La { k } => find_two_k_linear_forests_within(g, k, budget).map(drop),
            Property::LaIso { k } => order_ok(find_two_isomorphic_k_linear_forests_within(g, k, budget)),
            Property::ComponentsLe4Edges => find_two_colouring_max4_edge_components_within(g, budget).map(drop),
        }
    }
}

/// The order checks are done by `applies_to`, so an error cannot occur here.
fn order_ok<T>(r: Result<Outcome<T>>) -> Outcome<()> {
    r.map(|o| o.map(drop)).unwrap_or(Outcome::Absent)
}

/// Per-graph and whole-scan wall-clock caps.
#[derive(Clone, Copy, Debug, Default)]
pub struct ScanBudget {
    pub per_graph: Option<Duration>,
    pub total: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub connectivity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderRow {
    pub order: usize,
    pub scanned: usize,
    pub failures: usize,
    pub inconclusive: usize,
    pub seconds: f64,
    /// Failing graphs, sorted by canonical code.
    pub witnesses: Vec<Witness>,
    pub inconclusive_graphs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub property: Property,
    pub rows: Vec<OrderRow>,
    pub seconds: f64,
}

impl ScanReport {
    pub fn failures(&self) -> usize {
        self.rows.iter().map(|r| r.failures).sum()
    }

    pub fn inconclusive(&self) -> usize {
        self.rows.iter().map(|r| r.inconclusive).sum()
    }

    pub fn row(&self, order: usize) -> Option<&OrderRow> {
        self.rows.iter().find(|r| r.order == order)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("order,scanned,failures,inconclusive,seconds\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{},{:.3}", r.order, r.scanned, r.failures, r.inconclusive, r.seconds).unwrap();
        }
        out
    }

    /// Failures split by vertex connectivity 1, 2, 3 (0 counts under 1).
    pub fn connectivity_csv(&self) -> String {
        let mut out = String::from("order,conn1,conn2,conn3,total\n");
        for r in &self.rows {
            let mut c = [0usize; 3];
            for w in &r.witnesses {
                c[w.connectivity.clamp(1, 3) - 1] += 1;
            }
            writeln!(out, "{},{},{},{},{}", r.order, c[0], c[1], c[2], r.failures).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// All witnesses, one graph6 line each.
    pub fn witness_lines(&self) -> String {
        self.rows.iter().flat_map(|r| &r.witnesses).map(|w| format!("{}\n", w.graph6)).collect()
    }
}

enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Runs `property` on every applicable graph, in parallel on the current
/// rayon pool. The report does not depend on the schedule apart from timings.
pub fn run_scan(graphs: &[CubicGraph], property: Property, budget: ScanBudget) -> ScanReport {
    let start = Instant::now();
    let scan_deadline = budget.total.map(|d| start + d);
    let results: Vec<(usize, Verdict, f64, &CubicGraph)> = graphs
        .par_iter()
        .filter(|g| property.applies_to(g.order()))
        .map(|g| {
            let t = Instant::now();
            if scan_deadline.is_some_and(|d| t >= d) {
                return (g.order(), Verdict::Inconclusive, 0.0, g);
            }
            let mut deadline = budget.per_graph.map(|d| t + d);
            if let Some(d) = scan_deadline {
                deadline = Some(deadline.map_or(d, |x| x.min(d)));
            }
            let b = deadline.map_or_else(Budget::unlimited, Budget::until);
            let v = match property.check(g, &b) {
                Outcome::Found(()) => Verdict::Pass,
                Outcome::Absent => Verdict::Fail,
                Outcome::Inconclusive => Verdict::Inconclusive,
            };
            (g.order(), v, t.elapsed().as_secs_f64(), g)
        })
        .collect();

    let mut rows: BTreeMap<usize, OrderRow> = BTreeMap::new();
    let mut failing: BTreeMap<usize, Vec<&CubicGraph>> = BTreeMap::new();
    for (order, verdict, secs, g) in results {
        let row = rows.entry(order).or_insert_with(|| OrderRow {
            order,
            scanned: 0,
            failures: 0,
            inconclusive: 0,
            seconds: 0.0,
            witnesses: Vec::new(),
            inconclusive_graphs: Vec::new(),
        });
        row.scanned += 1;
        row.seconds += secs;
        match verdict {
            Verdict::Pass => {}
            Verdict::Fail => {
                row.failures += 1;
                failing.entry(order).or_default().push(g);
            }
            Verdict::Inconclusive => {
                row.inconclusive += 1;
                row.inconclusive_graphs.push(write_graph6(g.as_simple()));
            }
        }
    }
    for (order, gs) in failing {
        let mut ws: Vec<_> = gs.into_iter().map(|g| (canonical_code(g.as_simple()), g)).collect();
        ws.sort_by(|a, b| a.0.cmp(&b.0));
        rows.get_mut(&order).unwrap().witnesses = ws
            .into_iter()
            .map(|(_, g)| Witness { graph6: write_graph6(g.as_simple()), connectivity: vertex_connectivity(g.as_simple()) })
            .collect();
    }
    for row in rows.values_mut() {
        row.inconclusive_graphs.sort();
    }
    ScanReport { property, rows: rows.into_values().collect(), seconds: start.elapsed().as_secs_f64() }
}

/// A graph6 line that did not yield a cubic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub error: Error,
}

/// Reads one graph per non-empty line. With `strict` the first bad line is
/// an error; otherwise bad lines are collected and skipped.
pub fn read_graph6_lines(reader: impl BufRead, strict: bool) -> Result<(Vec<CubicGraph>, Vec<LineError>)> {
    let mut graphs = Vec::new();
    let mut bad = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| invalid(format!("read error at line {}: {e}", i + 1)))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line).and_then(CubicGraph::new) {
            Ok(g) => graphs.push(g),
            Err(error) if strict => return Err(invalid(format!("line {}: {error}", i + 1))),
            Err(error) => bad.push(LineError { line: i + 1, error }),
        }
    }
    Ok((graphs, bad))
}

impl FromStr for ScanMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bisection" => Ok(ScanMethod::Bisection),
            "direct" => Ok(ScanMethod::Direct),
            _ => Err(invalid(format!("unknown method {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_cubic;

    fn upto(n: usize) -> Vec<CubicGraph> {
        (4..=n).step_by(2).flat_map(|m| enumerate_cubic(m, true).unwrap()).collect()
    }

    #[test]
    fn two_bisection_to_12() {
        let r = run_scan(&upto(12), Property::KBisection { k: 2 }, ScanBudget::default());
        let fails: Vec<_> = r.rows.iter().map(|r| (r.order, r.failures)).collect();
        assert_eq!(fails, vec![(4, 0), (6, 0), (8, 0), (10, 1), (12, 0)]);
        assert_eq!(r.row(10).unwrap().witnesses[0].connectivity, 3);
        assert!(r.to_csv().starts_with("order,scanned,failures,inconclusive,seconds\n4,1,0,0,"));
        assert!(r.connectivity_csv().contains("\n10,0,0,1,1\n"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let g6 = json["rows"][3]["witnesses"][0]["graph6"].as_str().unwrap();
        assert_eq!(parse_graph6(g6).unwrap().order(), 10);
    }

    #[test]
    fn empty_scan() {
        let r = run_scan(&[], Property::Ando, ScanBudget::default());
        assert_eq!(r.to_csv(), "order,scanned,failures,inconclusive,seconds\n");
    }

    #[test]
    fn order_classes_are_skipped() {
        let r = run_scan(&upto(10), Property::Wormald, ScanBudget::default());
        assert_eq!(r.rows.iter().map(|r| r.order).collect::<Vec<_>>(), vec![4, 8]);
    }

    #[test]
    fn zero_budget_is_inconclusive() {
        let b = ScanBudget { per_graph: None, total: Some(Duration::ZERO) };
        let r = run_scan(&upto(8), Property::KBisection { k: 2 }, b);
        assert_eq!(r.failures(), 0);
        assert_eq!(r.inconclusive(), 1 + 2 + 5);
    }

    #[test]
    fn property_names() {
        for name in PROPERTY_NAMES {
            assert!(Property::parse(name, Some(4)).is_ok(), "{name}");
        }
        assert!(Property::parse("k-bisection", None).is_err());
        assert!(Property::parse("bogus", None).is_err());
    }

    #[test]
    fn reading_lines() {
        let text = "C~\n\nnot-a-graph\nA_\n";
        let (gs, bad) = read_graph6_lines(text.as_bytes(), false).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(bad.iter().map(|b| b.line).collect::<Vec<_>>(), vec![3, 4]);
        assert!(read_graph6_lines(text.as_bytes(), true).is_err());
    }
}
