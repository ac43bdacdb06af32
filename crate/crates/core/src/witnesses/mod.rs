//! Base graphs for blow-up constructions: bundled Ramsey witnesses, graph6
//! ingestion and a seeded local search. Nothing here is trusted until the
//! detectors have re-checked it.

mod search;

pub use search::{tabu_search_with, tabu_search_witness, SearchConfig, DEFAULT_ORDER_CAP};

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certify;
use crate::detect;
use crate::error::{Error, Result};
use crate::generators::circulant;
use crate::graph::Graph;
use crate::graph6;
use crate::pattern::PatternSpec;

/// Which small-pattern/clique pair a witness is for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternPair {
    /// Triangle-free graphs with `K_n`-free complement.
    K3Kn,
    /// `K_4 - e`-free graphs with `K_n`-free complement.
    K4eKn,
}

impl PatternPair {
    pub fn avoid(self) -> PatternSpec {
        match self {
            PatternPair::K3Kn => PatternSpec::Clique(3),
            PatternPair::K4eKn => PatternSpec::K4MinusE,
        }
    }

    /// Directory name in the witness tree, e.g. `k3-kn`.
    pub fn dir_name(self) -> &'static str {
        match self {
            PatternPair::K3Kn => "k3-kn",
            PatternPair::K4eKn => "k4e-kn",
        }
    }
}

/// Registry key such as `k3k5` or `k4ek4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WitnessKey {
    pub pair: PatternPair,
    pub n: usize,
}

impl WitnessKey {
    pub fn new(pair: PatternPair, n: usize) -> Self {
        WitnessKey { pair, n }
    }

    pub fn avoid_complement(self) -> PatternSpec {
        PatternSpec::Clique(self.n)
    }

    /// Relative path `<pattern-pair>/<n>.g6`.
    pub fn relative_path(self) -> PathBuf {
        Path::new(self.pair.dir_name()).join(format!("{}.g6", self.n))
    }
}

impl fmt::Display for WitnessKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pair {
            PatternPair::K3Kn => write!(f, "k3k{}", self.n),
            PatternPair::K4eKn => write!(f, "k4ek{}", self.n),
        }
    }
}

impl FromStr for WitnessKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |rest: &str, pair| {
            rest.parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .map(|n| WitnessKey { pair, n })
        };
        s.strip_prefix("k4ek")
            .and_then(|r| parse(r, PatternPair::K4eKn))
            .or_else(|| {
                s.strip_prefix("k3k")
                    .and_then(|r| parse(r, PatternPair::K3Kn))
            })
            .ok_or_else(|| Error::UnknownWitness(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Bundled,
    File { path: String },
    Search { seed: u64, budget: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRecord {
    pub id: String,
    pub graph: Graph,
    pub avoid_red: PatternSpec,
    pub avoid_blue_in_complement: PatternSpec,
    pub provenance: Provenance,
    verified: bool,
}

impl WitnessRecord {
    pub fn new(
        id: impl Into<String>,
        graph: Graph,
        avoid_red: PatternSpec,
        avoid_blue_in_complement: PatternSpec,
        provenance: Provenance,
    ) -> Self {
        WitnessRecord {
            id: id.into(),
            graph,
            avoid_red,
            avoid_blue_in_complement,
            provenance,
            verified: false,
        }
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    /// Runs both detector checks; the record is marked verified only if the
    /// graph avoids `avoid_red` and its complement avoids
    /// `avoid_blue_in_complement`. On failure returns the offending side and
    /// embedding.
    pub fn verify(mut self) -> std::result::Result<Self, (Self, String)> {
        self.verified = false;
        if let Some(w) = detect::find_pattern(&self.graph, self.avoid_red) {
            let msg = format!("{} contains {} at {w:?}", self.id, self.avoid_red);
            return Err((self, msg));
        }
        let comp = self.graph.complement();
        if let Some(w) = detect::find_pattern(&comp, self.avoid_blue_in_complement) {
            let msg = format!(
                "complement of {} contains {} at {w:?}",
                self.id, self.avoid_blue_in_complement
            );
            return Err((self, msg));
        }
        self.verified = true;
        Ok(self)
    }
}

/// graph6 witness files shipped with the crate, keyed like the registry.
const BUNDLED_FILES: &[(&str, &str)] = &[
    ("k3k3", include_str!("../../witnesses/k3-kn/3.g6")),
    ("k3k4", include_str!("../../witnesses/k3-kn/4.g6")),
    ("k3k6", include_str!("../../witnesses/k3-kn/6.g6")),
    ("k3k7", include_str!("../../witnesses/k3-kn/7.g6")),
    ("k3k8", include_str!("../../witnesses/k3-kn/8.g6")),
    ("k4ek3", include_str!("../../witnesses/k4e-kn/3.g6")),
    ("k4ek4", include_str!("../../witnesses/k4e-kn/4.g6")),
    ("k4ek5", include_str!("../../witnesses/k4e-kn/5.g6")),
    ("k4ek6", include_str!("../../witnesses/k4e-kn/6.g6")),
];

/// Every key the registry can answer, in sorted order.
pub fn bundled_keys() -> Vec<WitnessKey> {
    let mut keys: Vec<WitnessKey> = BUNDLED_FILES
        .iter()
        .map(|(k, _)| k.parse().expect("valid bundled key"))
        .chain([WitnessKey::new(PatternPair::K3Kn, 5)])
        .collect();
    keys.sort();
    keys.dedup();
    keys
}

/// The stored witness for `key`, unverified.
pub fn bundled_witness(key: WitnessKey) -> Result<WitnessRecord> {
    let graph = match (key.pair, key.n) {
        (PatternPair::K3Kn, 5) => circulant(13, &[1, 5])?,
        _ => {
            let name = key.to_string();
            let (_, text) = BUNDLED_FILES
                .iter()
                .find(|(k, _)| *k == name)
                .ok_or_else(|| Error::UnknownWitness(unknown_note(key)))?;
            graph6::from_graph6(text.trim_end().as_bytes())?
        }
    };
    Ok(WitnessRecord::new(
        key.to_string(),
        graph,
        key.pair.avoid(),
        key.avoid_complement(),
        Provenance::Bundled,
    ))
}

fn unknown_note(key: WitnessKey) -> String {
    let table = match key.pair {
        PatternPair::K3Kn => certify::k3_kn_lower(key.n),
        PatternPair::K4eKn => certify::k4e_kn_lower(key.n),
    };
    match table {
        Some(r) => format!("{key} (unverified bound from published table: R >= {r})"),
        None => key.to_string(),
    }
}

/// Reads the first graph of a graph6 file.
pub fn load_graph6_file(path: &Path) -> Result<Graph> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Graph6(format!("cannot read {}: {e}", path.display())))?;
    graph6::read_graph6_file(&bytes)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Graph6(format!("{} holds no graph", path.display())))
}

/// A witness reference is either a registry key (`k3k5`) or a path to a
/// graph6 file.
pub fn resolve_witness(reference: &str) -> Result<Graph> {
    match reference.parse::<WitnessKey>() {
        Ok(key) => Ok(bundled_witness(key)?.graph),
        Err(_) => load_graph6_file(Path::new(reference)),
    }
}
