//! Verification of two-colorings against target patterns, certificates, and
//! the bound-table cross-check.

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, TwoColoring};
use crate::constructions::{Constructed, Construction};
use crate::detect::{self, DETECTOR_VERSION};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::pattern::PatternSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
}

/// A monochromatic copy of a target: `vertices` are listed in the pattern's
/// role order (hub first for centered patterns).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub color: Color,
    pub pattern: PatternSpec,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub construction: Option<Construction>,
    pub order: usize,
    pub red_target: PatternSpec,
    pub blue_target: PatternSpec,
    pub result: Verdict,
    pub counterexample: Option<Counterexample>,
    pub coloring_sha: String,
    pub elapsed_ms: u64,
    pub detector_version: String,
}

impl Certificate {
    pub fn is_verified(&self) -> bool {
        self.result == Verdict::Verified
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Params(format!("bad certificate: {e}")))
    }

    /// Re-checks this certificate against `coloring`: the hash must match,
    /// a refutation's embedding must be genuine, and the verdict must agree
    /// with a fresh detector run.
    pub fn recheck(&self, coloring: &TwoColoring) -> std::result::Result<(), String> {
        if coloring.sha256() != self.coloring_sha {
            return Err("coloring hash does not match certificate".into());
        }
        if coloring.order() != self.order {
            return Err(format!(
                "order {} != certified {}",
                coloring.order(),
                self.order
            ));
        }
        match (&self.result, &self.counterexample) {
            (Verdict::Verified, Some(_)) => {
                return Err("verified certificate carries a counterexample".into())
            }
            (Verdict::Refuted, None) => {
                return Err("refuted certificate lacks a counterexample".into())
            }
            (Verdict::Refuted, Some(ce)) => {
                let expected = match ce.color {
                    Color::Red => self.red_target,
                    Color::Blue => self.blue_target,
                };
                if ce.pattern != expected {
                    return Err(format!(
                        "counterexample pattern {} is not the {:?} target",
                        ce.pattern, ce.color
                    ));
                }
                if !ce
                    .pattern
                    .is_embedding(coloring.graph(ce.color), &ce.vertices)
                {
                    return Err("counterexample is not an embedding".into());
                }
            }
            (Verdict::Verified, None) => {}
        }
        let fresh = verify(coloring, self.red_target, self.blue_target);
        if fresh.result != self.result {
            return Err(format!("fresh verdict {:?} disagrees", fresh.result));
        }
        Ok(())
    }
}

/// Wall-clock timer; the browser target has no monotonic clock through std,
/// so elapsed time reads as zero there.
struct Stopwatch(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Stopwatch {
    fn start() -> Self {
        Stopwatch(
            #[cfg(not(target_arch = "wasm32"))]
            std::time::Instant::now(),
        )
    }

    fn elapsed_ms(&self) -> u64 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed().as_millis() as u64;
        #[cfg(target_arch = "wasm32")]
        0
    }
}

/// Checks the red graph for `red_target`, then the blue graph for
/// `blue_target`; the first hit ends the check.
pub fn verify(
    coloring: &TwoColoring,
    red_target: PatternSpec,
    blue_target: PatternSpec,
) -> Certificate {
    let clock = Stopwatch::start();
    let counterexample = [(Color::Red, red_target), (Color::Blue, blue_target)]
        .into_iter()
        .find_map(|(color, pattern)| {
            detect::find_pattern(coloring.graph(color), pattern).map(|vertices| Counterexample {
                color,
                pattern,
                vertices,
            })
        });
    if let Some(ce) = &counterexample {
        audit_counterexample(coloring, ce);
    }
    Certificate {
        construction: None,
        order: coloring.order(),
        red_target,
        blue_target,
        result: if counterexample.is_some() {
            Verdict::Refuted
        } else {
            Verdict::Verified
        },
        counterexample,
        coloring_sha: coloring.sha256(),
        elapsed_ms: clock.elapsed_ms(),
        detector_version: DETECTOR_VERSION.to_string(),
    }
}

/// Detector witnesses are re-validated structurally, and by the brute-force
/// oracle when the instance is small enough.
fn audit_counterexample(coloring: &TwoColoring, ce: &Counterexample) {
    let g = coloring.graph(ce.color);
    assert!(
        ce.pattern.is_embedding(g, &ce.vertices),
        "detector returned a non-embedding for {}",
        ce.pattern
    );
    if g.order() <= oracle::CONTAINS_LIMIT {
        assert_eq!(
            oracle::oracle_spans(g, ce.pattern, &ce.vertices).ok(),
            Some(true)
        );
    }
}

/// Verifies a construction against the targets it declares and attaches
/// its descriptor.
pub fn certify_construction(built: &Constructed) -> Certificate {
    let c = &built.construction;
    let mut cert = verify(&built.coloring, c.red_target, c.blue_target);
    cert.construction = Some(c.clone());
    cert
}

/// A Ramsey witness is a graph `g` avoiding `avoid` whose complement avoids
/// `avoid_complement`, i.e. the coloring with red = `g`.
pub fn verify_ramsey_witness(
    g: &Graph,
    avoid: PatternSpec,
    avoid_complement: PatternSpec,
) -> Certificate {
    verify(&TwoColoring::from_red(g.clone()), avoid, avoid_complement)
}

/// Lower bounds for `R(K_3, K_n)`, `n = 3..=15`, as published.
pub const K3_KN: [(usize, usize); 13] = [
    (3, 6),
    (4, 9),
    (5, 14),
    (6, 18),
    (7, 23),
    (8, 28),
    (9, 36),
    (10, 40),
    (11, 47),
    (12, 53),
    (13, 60),
    (14, 67),
    (15, 74),
];

/// Lower bounds for `R(K_4 - e, K_n)`, `n = 3..=10`, as published.
pub const K4E_KN: [(usize, usize); 8] = [
    (3, 7),
    (4, 11),
    (5, 16),
    (6, 21),
    (7, 28),
    (8, 36),
    (9, 41),
    (10, 49),
];

/// Published lower bounds for `R(W_5, K_n)` and `R(W_6, K_n)` (same row),
/// `n = 5..=15`.
pub const W5W6_KN: [(usize, usize); 11] = [
    (5, 27),
    (6, 35),
    (7, 45),
    (8, 55),
    (9, 71),
    (10, 79),
    (11, 93),
    (12, 105),
    (13, 119),
    (14, 133),
    (15, 147),
];

/// Published lower bounds for `R(W_7, K_n)`, `n = 5..=10`.
pub const W7_KN: [(usize, usize); 6] = [(5, 31), (6, 41), (7, 55), (8, 71), (9, 81), (10, 97)];

pub fn k3_kn_lower(n: usize) -> Option<usize> {
    K3_KN.iter().find(|&&(k, _)| k == n).map(|&(_, v)| v)
}

pub fn k4e_kn_lower(n: usize) -> Option<usize> {
    K4E_KN.iter().find(|&&(k, _)| k == n).map(|&(_, v)| v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableId {
    W5W6,
    W7,
}

impl TableId {
    pub fn title(self) -> &'static str {
        match self {
            TableId::W5W6 => "R(W5,Kn) and R(W6,Kn) >= 2 R(K3,Kn) - 1",
            TableId::W7 => "R(W7,Kn) >= 2 R(K4-e,Kn) - 1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub n: usize,
    pub derived: usize,
    pub stored: usize,
}

impl TableCell {
    pub fn matches(&self) -> bool {
        self.derived == self.stored
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table: TableId,
    pub cells: Vec<TableCell>,
}

impl TableRow {
    pub fn mismatches(&self) -> Vec<TableCell> {
        self.cells
            .iter()
            .copied()
            .filter(|c| !c.matches())
            .collect()
    }
}

/// Derives each wheel row as `2 r - 1` from the clique rows and pairs it
/// with the stored value. Mismatches are reported, not hidden.
pub fn derive_table(table: TableId) -> TableRow {
    let (stored, source): (&[(usize, usize)], fn(usize) -> Option<usize>) = match table {
        TableId::W5W6 => (&W5W6_KN, k3_kn_lower),
        TableId::W7 => (&W7_KN, k4e_kn_lower),
    };
    let cells = stored
        .iter()
        .map(|&(n, stored)| TableCell {
            n,
            derived: 2 * source(n).expect("clique row covers wheel row") - 1,
            stored,
        })
        .collect();
    TableRow { table, cells }
}

/// Both rows; fails if any derived value differs from the stored one.
pub fn reproduce_tables() -> Result<Vec<TableRow>> {
    let rows = vec![derive_table(TableId::W5W6), derive_table(TableId::W7)];
    let bad: Vec<String> = rows
        .iter()
        .flat_map(|r| {
            r.mismatches().into_iter().map(move |c| {
                format!(
                    "{:?} n={}: derived {} stored {}",
                    r.table, c.n, c.derived, c.stored
                )
            })
        })
        .collect();
    if bad.is_empty() {
        Ok(rows)
    } else {
        Err(Error::Precondition(format!(
            "table mismatch: {}",
            bad.join("; ")
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fan_construction, w5w7_construction};
    use crate::generators::{circulant, seven_cycle_with_chords};

    #[test]
    fn small_fan_and_w5w7_verify() {
        let cert = certify_construction(&fan_construction(4, 4).unwrap());
        assert!(cert.is_verified());
        assert_eq!(cert.order, 17);
        assert!(cert.construction.is_some());
        let cert = certify_construction(&w5w7_construction());
        assert!(cert.is_verified(), "{cert:?}");
    }

    #[test]
    fn all_red_k9_has_red_f2() {
        let c = TwoColoring::from_red(Graph::complete(9));
        let cert = verify(&c, PatternSpec::Fan(2), PatternSpec::Fan(2));
        assert_eq!(cert.result, Verdict::Refuted);
        let ce = cert.counterexample.as_ref().unwrap();
        assert_eq!(ce.color, Color::Red);
        assert!(PatternSpec::Fan(2).is_embedding(c.red(), &ce.vertices));
        cert.recheck(&c).unwrap();
    }

    #[test]
    fn blue_side_reported_when_red_is_clean() {
        let c = TwoColoring::from_red(Graph::empty(6));
        let cert = verify(&c, PatternSpec::Clique(3), PatternSpec::Clique(3));
        assert_eq!(cert.counterexample.unwrap().color, Color::Blue);
    }

    #[test]
    fn ramsey_witness_checks() {
        let g = circulant(13, &[1, 5]).unwrap();
        assert!(
            verify_ramsey_witness(&g, PatternSpec::Clique(3), PatternSpec::Clique(5)).is_verified()
        );
        let g = seven_cycle_with_chords();
        assert!(!detect::has_clique(&g, 3));
        let cert = verify_ramsey_witness(
            &Graph::complete(4),
            PatternSpec::K4MinusE,
            PatternSpec::Clique(2),
        );
        assert_eq!(cert.result, Verdict::Refuted);
    }

    #[test]
    fn json_round_trip_and_field_names() {
        let c = TwoColoring::from_red(Graph::cycle(5));
        let cert = verify(&c, PatternSpec::Clique(3), PatternSpec::Clique(3));
        let text = cert.to_json();
        for field in [
            "construction",
            "order",
            "red_target",
            "blue_target",
            "result",
            "counterexample",
            "coloring_sha",
            "elapsed_ms",
        ] {
            assert!(text.contains(&format!("\"{field}\"")), "{field}");
        }
        assert!(text.contains("\"verified\""));
        assert_eq!(Certificate::from_json(&text).unwrap(), cert);
    }

    #[test]
    fn recheck_rejects_replay() {
        let c = TwoColoring::from_red(Graph::cycle(5));
        let cert = verify(&c, PatternSpec::Clique(3), PatternSpec::Clique(3));
        cert.recheck(&c).unwrap();
        let other = TwoColoring::from_red(Graph::path(5));
        assert!(cert.recheck(&other).is_err());
    }

    #[test]
    fn tables_reproduce() {
        let rows = reproduce_tables().unwrap();
        let cells: usize = rows.iter().map(|r| r.cells.len()).sum();
        assert_eq!(cells, 17);
        assert_eq!(rows[0].cells.last().unwrap().derived, 147);
        assert_eq!(rows[1].cells.last().unwrap().derived, 97);
        let w7 = &rows[1].cells;
        assert_eq!(w7.iter().find(|c| c.n == 7).unwrap().derived, 55);
    }
}
