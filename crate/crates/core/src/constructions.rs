//! Builders for the extremal colorings, each paired with the lower bound it
//! certifies (`claimed_bound = order + 1`) and the targets it avoids.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::TwoColoring;
use crate::detect;
use crate::error::{Error, Result};
use crate::generators::{regular_graph, seven_cycle_with_chords};
use crate::graph::Graph;
use crate::pattern::PatternSpec;
use crate::witnesses;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    FanFan,
    WheelEven,
    KipasEven,
    Kipas1Mod4,
    Kipas1Mod4AltB,
    Kipas3Mod4,
    W5W7Blowup,
    WheelCliqueBlowup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    A,
    B,
}

/// A family together with its parameters, in the CLI grammar
/// `fan:n,m`, `wheel-even:n`, `kipas-even:m`, `kipas-1mod4:m[,A|B]`,
/// `kipas-3mod4:m`, `w5w7`, `wc-blowup:<witness>,<wheel>,<n>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Fan {
        n: usize,
        m: usize,
    },
    WheelEven {
        n: usize,
    },
    KipasEven {
        m: usize,
    },
    Kipas1Mod4 {
        m: usize,
        variant: Variant,
    },
    Kipas3Mod4 {
        m: usize,
    },
    W5W7,
    WheelCliqueBlowup {
        witness: String,
        wheel: usize,
        n: usize,
    },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Fan { n, m } => write!(f, "fan:{n},{m}"),
            FamilySpec::WheelEven { n } => write!(f, "wheel-even:{n}"),
            FamilySpec::KipasEven { m } => write!(f, "kipas-even:{m}"),
            FamilySpec::Kipas1Mod4 { m, variant } => write!(f, "kipas-1mod4:{m},{variant:?}"),
            FamilySpec::Kipas3Mod4 { m } => write!(f, "kipas-3mod4:{m}"),
            FamilySpec::W5W7 => f.write_str("w5w7"),
            FamilySpec::WheelCliqueBlowup { witness, wheel, n } => {
                write!(f, "wc-blowup:{witness},{wheel},{n}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',').map(str::trim).collect()
        };
        let bad = || Error::Params(format!("cannot parse family spec {s:?}"));
        let num = |i: usize| -> Result<usize> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        Ok(match name {
            "fan" => {
                arity(2)?;
                FamilySpec::Fan {
                    n: num(0)?,
                    m: num(1)?,
                }
            }
            "wheel-even" => {
                arity(1)?;
                FamilySpec::WheelEven { n: num(0)? }
            }
            "kipas-even" => {
                arity(1)?;
                FamilySpec::KipasEven { m: num(0)? }
            }
            "kipas-1mod4" => {
                let variant = match args.get(1).copied() {
                    None | Some("A") | Some("a") => Variant::A,
                    Some("B") | Some("b") => Variant::B,
                    Some(_) => return Err(bad()),
                };
                if args.is_empty() || args.len() > 2 {
                    return Err(bad());
                }
                FamilySpec::Kipas1Mod4 {
                    m: num(0)?,
                    variant,
                }
            }
            "kipas-3mod4" => {
                arity(1)?;
                FamilySpec::Kipas3Mod4 { m: num(0)? }
            }
            "w5w7" => {
                arity(0)?;
                FamilySpec::W5W7
            }
            "wc-blowup" => {
                arity(3)?;
                FamilySpec::WheelCliqueBlowup {
                    witness: args[0].to_string(),
                    wheel: num(1)?,
                    n: num(2)?,
                }
            }
            _ => return Err(Error::Params(format!("unknown family {name:?}"))),
        })
    }
}

/// A contiguous run of vertices with a role in the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn vertices(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

/// Descriptor of a built coloring, recorded in certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub family: Family,
    pub spec: String,
    pub order: usize,
    pub claimed_bound: usize,
    pub red_target: PatternSpec,
    pub blue_target: PatternSpec,
    pub blocks: Vec<Block>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Construction {
    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }
}

#[derive(Clone, Debug)]
pub struct Constructed {
    pub coloring: TwoColoring,
    pub construction: Construction,
}

/// Closed-form lower bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFormula {
    /// `R(F_n, F_m)`: `4n + m/2` (rounded up) when `n <= 5m/4 - 1`,
    /// otherwise `2n + 3m - 2`.
    Fan { n: usize, m: usize },
    /// `R(W_n) >= 3n - 2` for even `n`.
    WheelEven { n: usize },
    /// `R(W_n) >= (5n - 6 + sgn(n)) / 2` for odd `n`.
    WheelOdd { n: usize },
    /// `R(K̂_n) >= (5n - 6 + sgn'(n)) / 2`.
    Kipas { n: usize },
    /// `R(W_5, W_7) >= 15`.
    W5W7,
    /// `R(W_m, K_n) >= 2r - 1` where `r` is a lower bound on the Ramsey
    /// number of the witness pair.
    WheelClique { ramsey_lower: usize },
}

fn fan_params_ok(n: usize, m: usize) -> Result<()> {
    if m < 4 || n < m || 2 * n + 4 > 3 * m {
        return Err(Error::Params(format!(
            "fan:{n},{m} needs m >= 4 and m <= n <= 3m/2 - 2"
        )));
    }
    Ok(())
}

/// `n <= 5m/4 - 1`, in integers.
fn fan_small_range(n: usize, m: usize) -> bool {
    4 * n + 4 <= 5 * m
}

pub fn predicted_lower_bound(formula: BoundFormula) -> Result<usize> {
    let invalid = |what: String| Err(Error::Params(what));
    match formula {
        BoundFormula::Fan { n, m } => {
            fan_params_ok(n, m)?;
            Ok(if fan_small_range(n, m) {
                4 * n + m.div_ceil(2)
            } else {
                2 * n + 3 * m - 2
            })
        }
        BoundFormula::WheelEven { n } => {
            if n % 2 == 1 || n < 4 {
                return invalid(format!("even wheel bound needs even n >= 4, got {n}"));
            }
            Ok(3 * n - 2)
        }
        BoundFormula::WheelOdd { n } => {
            if n % 2 == 0 || n < 5 {
                return invalid(format!("odd wheel bound needs odd n >= 5, got {n}"));
            }
            // sgn(n) = +1 for n = 3 mod 4, -1 for n = 1 mod 4
            Ok(if n % 4 == 3 {
                (5 * n - 5) / 2
            } else {
                (5 * n - 7) / 2
            })
        }
        BoundFormula::Kipas { n } => {
            if n < 5 {
                return invalid(format!("kipas bound needs n >= 5, got {n}"));
            }
            Ok(match n % 4 {
                3 => (5 * n - 5) / 2,
                1 => (5 * n - 7) / 2,
                _ => (5 * n - 6) / 2,
            })
        }
        BoundFormula::W5W7 => Ok(15),
        BoundFormula::WheelClique { ramsey_lower } => {
            if ramsey_lower == 0 {
                return invalid("Ramsey lower bound must be positive".into());
            }
            Ok(2 * ramsey_lower - 1)
        }
    }
}

/// Lays out named blocks consecutively, each with its own red interior.
struct Layout {
    blocks: Vec<Block>,
    red: Graph,
}

impl Layout {
    fn new(parts: Vec<(&str, Graph)>) -> Self {
        let mut blocks = Vec::new();
        let mut red = Graph::empty(0);
        for (name, g) in parts {
            blocks.push(Block {
                name: name.to_string(),
                start: red.order(),
                len: g.order(),
            });
            red = red.disjoint_union(&g);
        }
        Layout { blocks, red }
    }

    /// Colors every pair between blocks `a` and `b` red.
    fn join(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.blocks[a].vertices(), self.blocks[b].vertices());
        for u in ra {
            for v in rb.clone() {
                self.red.link(u, v);
            }
        }
    }
}

fn finish(
    layout: Layout,
    family: Family,
    spec: FamilySpec,
    formula: BoundFormula,
    targets: (PatternSpec, PatternSpec),
    notes: Vec<String>,
) -> Result<Constructed> {
    let claimed_bound = predicted_lower_bound(formula)?;
    let order = layout.red.order();
    assert_eq!(
        claimed_bound,
        order + 1,
        "{spec}: layout order disagrees with the closed-form bound"
    );
    Ok(Constructed {
        coloring: TwoColoring::from_red(layout.red),
        construction: Construction {
            family,
            spec: spec.to_string(),
            order,
            claimed_bound,
            red_target: targets.0,
            blue_target: targets.1,
            blocks: layout.blocks,
            notes,
        },
    })
}

/// Red cliques `K_{2n}, H_1, .., H_4`; red between `H_1 ∪ H_4` and
/// `H_2 ∪ H_3`; everything else blue. Avoids a red `F_n` and a blue `F_m`.
pub fn fan_construction(n: usize, m: usize) -> Result<Constructed> {
    fan_params_ok(n, m)?;
    let half_up = m / 2;
    let half_down = (m - 1) / 2;
    // |H_3| + |H_4| = m - 1 in every case
    let (h2, h3, h4) = match (fan_small_range(n, m), m.is_multiple_of(2)) {
        (true, true) => (2 * n + 1 - 3 * m / 2, half_up, half_up - 1),
        (true, false) => (2 * n - 3 * (m - 1) / 2, half_down, half_down),
        (false, true) => (m - 1, half_up, half_up - 1),
        (false, false) => (m - 1, half_down, half_down),
    };
    let mut layout = Layout::new(vec![
        ("K2n", Graph::complete(2 * n)),
        ("H1", Graph::complete(m - 1)),
        ("H2", Graph::complete(h2)),
        ("H3", Graph::complete(h3)),
        ("H4", Graph::complete(h4)),
    ]);
    for a in [1, 4] {
        for b in [2, 3] {
            layout.join(a, b);
        }
    }
    finish(
        layout,
        Family::FanFan,
        FamilySpec::Fan { n, m },
        BoundFormula::Fan { n, m },
        (PatternSpec::Fan(n), PatternSpec::Fan(m)),
        Vec::new(),
    )
}

/// Red `3K_{n-1}` for even `n`; neither color contains `W_n`.
pub fn wheel_even_construction(n: usize) -> Result<Constructed> {
    if n % 2 == 1 || n < 6 {
        return Err(Error::Params(format!(
            "wheel-even:{n} needs an even n >= 6"
        )));
    }
    let mut notes = Vec::new();
    if n < 8 {
        notes.push(format!(
            "n = {n} is below the published range n >= 8; the bound is still certified"
        ));
    }
    let layout = Layout::new(vec![
        ("A", Graph::complete(n - 1)),
        ("B", Graph::complete(n - 1)),
        ("C", Graph::complete(n - 1)),
    ]);
    finish(
        layout,
        Family::WheelEven,
        FamilySpec::WheelEven { n },
        BoundFormula::WheelEven { n },
        (PatternSpec::Wheel(n), PatternSpec::Wheel(n)),
        notes,
    )
}

/// Red `K_{2m+1} ∪ K_{m,m,m}`, 2m-regular; no monochromatic `K̂_{2m+2}`.
pub fn kipas_even_construction(m: usize) -> Result<Constructed> {
    if m < 2 {
        return Err(Error::Params(format!("kipas-even:{m} needs m >= 2")));
    }
    let mut layout = Layout::new(vec![
        ("K2m+1", Graph::complete(2 * m + 1)),
        ("P1", Graph::empty(m)),
        ("P2", Graph::empty(m)),
        ("P3", Graph::empty(m)),
    ]);
    layout.join(1, 2);
    layout.join(1, 3);
    layout.join(2, 3);
    finish(
        layout,
        Family::KipasEven,
        FamilySpec::KipasEven { m },
        BoundFormula::Kipas { n: 2 * m + 2 },
        (PatternSpec::Kipas(2 * m + 2), PatternSpec::Kipas(2 * m + 2)),
        Vec::new(),
    )
}

/// For even `m`: variant A is red `K_{2m} ∪ K_{m,m-1,m-1}`; variant B is
/// red `K_m ∪ K_{m-1,m-1}` joined to an independent set of `2m` vertices.
/// Both avoid a monochromatic `K̂_{2m+1}`.
pub fn kipas_1mod4_construction(m: usize, variant: Variant) -> Result<Constructed> {
    if m % 2 == 1 || m < 4 {
        return Err(Error::Params(format!(
            "kipas-1mod4:{m} needs an even m >= 4"
        )));
    }
    let (layout, family) = match variant {
        Variant::A => {
            let mut l = Layout::new(vec![
                ("K2m", Graph::complete(2 * m)),
                ("P1", Graph::empty(m)),
                ("P2", Graph::empty(m - 1)),
                ("P3", Graph::empty(m - 1)),
            ]);
            l.join(1, 2);
            l.join(1, 3);
            l.join(2, 3);
            (l, Family::Kipas1Mod4)
        }
        Variant::B => {
            let mut l = Layout::new(vec![
                ("Km", Graph::complete(m)),
                ("S1", Graph::empty(m - 1)),
                ("S2", Graph::empty(m - 1)),
                ("I2m", Graph::empty(2 * m)),
            ]);
            l.join(1, 2);
            for b in 0..3 {
                l.join(b, 3);
            }
            (l, Family::Kipas1Mod4AltB)
        }
    };
    let notes = match variant {
        Variant::A => Vec::new(),
        Variant::B => vec!["the 2m joined vertices are mutually non-adjacent in red".into()],
    };
    finish(
        layout,
        family,
        FamilySpec::Kipas1Mod4 { m, variant },
        BoundFormula::Kipas { n: 2 * m + 1 },
        (PatternSpec::Kipas(2 * m + 1), PatternSpec::Kipas(2 * m + 1)),
        notes,
    )
}

/// Sizes and red degrees of `H_1..H_4` for odd `m`, by `m mod 8`.
pub fn kipas_3mod4_blocks(m: usize) -> Result<[(usize, usize); 4]> {
    if m.is_multiple_of(2) || m < 3 {
        return Err(Error::Params(format!(
            "kipas-3mod4:{m} needs an odd m >= 3"
        )));
    }
    let k = m / 8;
    Ok(match m % 8 {
        1 => [
            (6 * k + 2, 4 * k + 1),
            (6 * k, 4 * k - 1),
            (6 * k, 4 * k - 1),
            (6 * k, 4 * k + 1),
        ],
        3 => [(6 * k + 2, 4 * k + 1); 4],
        5 => [
            (6 * k + 4, 4 * k + 1),
            (6 * k + 4, 4 * k + 3),
            (6 * k + 4, 4 * k + 3),
            (6 * k + 2, 4 * k + 1),
        ],
        7 => [
            (6 * k + 6, 4 * k + 3),
            (6 * k + 6, 4 * k + 3),
            (6 * k + 4, 4 * k + 3),
            (6 * k + 4, 4 * k + 3),
        ],
        _ => unreachable!("m is odd"),
    })
}

/// For odd `m`: the fan-style layout with `H_i` red-regular of the degrees
/// in [`kipas_3mod4_blocks`]. Red is `(2m-1)`-regular and blue outside
/// `K_{2m}` is `(m-1)`-regular; no monochromatic `K̂_{2m+1}`.
pub fn kipas_3mod4_construction(m: usize) -> Result<Constructed> {
    let spec = kipas_3mod4_blocks(m)?;
    let mut parts = vec![("K2m", Graph::complete(2 * m))];
    for (name, (size, degree)) in ["H1", "H2", "H3", "H4"].into_iter().zip(spec) {
        let block = regular_graph(size, degree)
            .unwrap_or_else(|e| panic!("kipas-3mod4:{m} block {name}: {e}"));
        parts.push((name, block));
    }
    let mut layout = Layout::new(parts);
    for a in [1, 4] {
        for b in [2, 3] {
            layout.join(a, b);
        }
    }
    finish(
        layout,
        Family::Kipas3Mod4,
        FamilySpec::Kipas3Mod4 { m },
        BoundFormula::Kipas { n: 2 * m + 1 },
        (PatternSpec::Kipas(2 * m + 1), PatternSpec::Kipas(2 * m + 1)),
        Vec::new(),
    )
}

/// Red `G[K_2]` for the triangle-free chorded 7-cycle; avoids red `W_5`
/// and blue `W_7`.
pub fn w5w7_construction() -> Constructed {
    let red = seven_cycle_with_chords().blow_up(&Graph::complete(2));
    let blocks = (0..7)
        .map(|v| Block {
            name: format!("v{}", v + 1),
            start: 2 * v,
            len: 2,
        })
        .collect();
    finish(
        Layout { blocks, red },
        Family::W5W7Blowup,
        FamilySpec::W5W7,
        BoundFormula::W5W7,
        (PatternSpec::Wheel(5), PatternSpec::Wheel(7)),
        Vec::new(),
    )
    .expect("fixed construction")
}

/// Red `G[K_2]` for a Ramsey witness `G`. For `wheel_kind` 5 or 6, `G` must
/// be triangle-free; for 7, `K_4 - e`-free. In both cases the complement of
/// `G` must be `K_n`-free. Both conditions are checked here.
pub fn wheel_clique_blowup(
    witness: &Graph,
    witness_name: &str,
    wheel_kind: usize,
    n: usize,
) -> Result<Constructed> {
    let local = match wheel_kind {
        5 | 6 => PatternSpec::Clique(3),
        7 => PatternSpec::K4MinusE,
        _ => {
            return Err(Error::Params(format!(
                "wheel kind must be 5, 6 or 7, got {wheel_kind}"
            )))
        }
    };
    if n == 0 {
        return Err(Error::Params("clique order must be positive".into()));
    }
    if let Some(w) = detect::find_pattern(witness, local) {
        return Err(Error::Precondition(format!(
            "witness {witness_name} contains {local} at {w:?}"
        )));
    }
    if let Some(w) = detect::find_clique(&witness.complement(), n) {
        return Err(Error::Precondition(format!(
            "complement of witness {witness_name} contains clique:{n} at {w:?}"
        )));
    }
    let red = witness.blow_up(&Graph::complete(2));
    let blocks = (0..witness.order())
        .map(|v| Block {
            name: format!("w{v}"),
            start: 2 * v,
            len: 2,
        })
        .collect();
    finish(
        Layout { blocks, red },
        Family::WheelCliqueBlowup,
        FamilySpec::WheelCliqueBlowup {
            witness: witness_name.to_string(),
            wheel: wheel_kind,
            n,
        },
        BoundFormula::WheelClique {
            ramsey_lower: witness.order() + 1,
        },
        (PatternSpec::Wheel(wheel_kind), PatternSpec::Clique(n)),
        Vec::new(),
    )
}

impl FamilySpec {
    pub fn build(&self) -> Result<Constructed> {
        match *self {
            FamilySpec::Fan { n, m } => fan_construction(n, m),
            FamilySpec::WheelEven { n } => wheel_even_construction(n),
            FamilySpec::KipasEven { m } => kipas_even_construction(m),
            FamilySpec::Kipas1Mod4 { m, variant } => kipas_1mod4_construction(m, variant),
            FamilySpec::Kipas3Mod4 { m } => kipas_3mod4_construction(m),
            FamilySpec::W5W7 => Ok(w5w7_construction()),
            FamilySpec::WheelCliqueBlowup {
                ref witness,
                wheel,
                n,
            } => {
                let g = witnesses::resolve_witness(witness)?;
                wheel_clique_blowup(&g, witness, wheel, n)
            }
        }
    }

    /// The bound formula this family instantiates, when it does not depend
    /// on external data.
    pub fn formula(&self) -> Option<BoundFormula> {
        Some(match *self {
            FamilySpec::Fan { n, m } => BoundFormula::Fan { n, m },
            FamilySpec::WheelEven { n } => BoundFormula::WheelEven { n },
            FamilySpec::KipasEven { m } => BoundFormula::Kipas { n: 2 * m + 2 },
            FamilySpec::Kipas1Mod4 { m, .. } | FamilySpec::Kipas3Mod4 { m } => {
                BoundFormula::Kipas { n: 2 * m + 1 }
            }
            FamilySpec::W5W7 => BoundFormula::W5W7,
            FamilySpec::WheelCliqueBlowup { .. } => return None,
        })
    }
}
