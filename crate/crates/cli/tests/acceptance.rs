//! One line per acceptance criterion. Runs the real binary where the
//! criterion is phrased in terms of the CLI, the library otherwise.

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use ramcert::certify::{self, certify_construction, verify_ramsey_witness};
use ramcert::constructions::{
    kipas_1mod4_construction, kipas_3mod4_construction, kipas_even_construction, w5w7_construction,
    wheel_clique_blowup, wheel_even_construction, Constructed, Variant,
};
use ramcert::detect::{self, contains_pattern};
use ramcert::generators::random_free_graph;
use ramcert::oracle::{oracle_contains, oracle_matching_number};
use ramcert::pattern::patterns_up_to;
use ramcert::witnesses::{bundled_witness, WitnessKey};
use ramcert::{Color, Graph, PatternSpec};

type Check = Result<String, String>;

fn run(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ramcert"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs");
    let text =
        String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr);
    (out.status.code().unwrap_or(-1), text)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn fan_pairs() -> Vec<(usize, usize)> {
    (4..=8usize)
        .flat_map(|m| (m..=3 * m / 2 - 2).map(move |n| (n, m)))
        .collect()
}

fn fan_bound(n: usize, m: usize) -> usize {
    if 4 * n + 4 <= 5 * m {
        4 * n + m.div_ceil(2)
    } else {
        2 * n + 3 * m - 2
    }
}

fn fan_cli() -> Check {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let pairs = fan_pairs();
    ensure(pairs.len() == 9, || format!("{} pairs", pairs.len()))?;
    for &(n, m) in &pairs {
        let file = format!("f{n}_{m}.rbc");
        let (c, out) = run(
            dir.path(),
            &["construct", &format!("fan:{n},{m}"), "-o", &file],
        );
        ensure(c == 0, || format!("construct fan:{n},{m} exit {c}: {out}"))?;
        let header = fs::read_to_string(dir.path().join(&file)).map_err(|e| e.to_string())?;
        let order: usize = header
            .lines()
            .next()
            .and_then(|l| l.strip_prefix("rbc "))
            .and_then(|s| s.parse().ok())
            .ok_or("bad header")?;
        ensure(order + 1 == fan_bound(n, m), || {
            format!("fan:{n},{m} order {order}")
        })?;
        let (c, out) = run(
            dir.path(),
            &[
                "verify",
                &file,
                "--red",
                &format!("fan:{n}"),
                "--blue",
                &format!("fan:{m}"),
            ],
        );
        ensure(c == 0, || format!("verify fan:{n},{m} exit {c}: {out}"))?;
    }
    ensure(fan_bound(4, 4) == 18, || "R(F_4) bound".into())?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("9 pairs, {:?}", start.elapsed()))
}

fn verified(built: &Constructed) -> Result<(), String> {
    let cert = certify_construction(built);
    ensure(cert.is_verified(), || {
        format!(
            "{} refuted: {:?}",
            built.construction.spec, cert.counterexample
        )
    })
}

fn even_wheels() -> Check {
    let start = Instant::now();
    for n in [8, 10, 12] {
        let b = wheel_even_construction(n).map_err(|e| e.to_string())?;
        ensure(b.construction.order == 3 * n - 3, || {
            format!("order for n={n}")
        })?;
        ensure(
            b.construction.red_target == PatternSpec::Wheel(n)
                && b.construction.blue_target == PatternSpec::Wheel(n),
            || "targets".into(),
        )?;
        verified(&b)?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("n = 8, 10, 12, {:?}", start.elapsed()))
}

/// Red degree `2m - 1` everywhere; blue degree `m - 1` off the `K_{2m}`.
fn three_mod_four_regularity(b: &Constructed, m: usize) -> Result<(), String> {
    let red = b.coloring.red();
    ensure(red.regular_degree() == Some(2 * m - 1), || {
        format!("m={m}: red not (2m-1)-regular")
    })?;
    let first = &b.construction.blocks[0];
    ensure(first.len == 2 * m, || {
        format!("m={m}: first block {}", first.name)
    })?;
    let blue = b.coloring.blue();
    for v in first.start + first.len..b.construction.order {
        let off = (first.start + first.len..b.construction.order)
            .filter(|&u| blue.has_edge(u, v))
            .count();
        ensure(off == m - 1, || {
            format!("m={m}: vertex {v} off-block blue degree {off}")
        })?;
    }
    Ok(())
}

fn kipases() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for m in 2..=5 {
        let b = kipas_even_construction(m).map_err(|e| e.to_string())?;
        ensure(b.construction.order == 5 * m + 1, || format!("even m={m}"))?;
        verified(&b)?;
        count += 1;
    }
    for m in [4, 6] {
        for v in [Variant::A, Variant::B] {
            let b = kipas_1mod4_construction(m, v).map_err(|e| e.to_string())?;
            ensure(b.construction.order == 5 * m - 2, || format!("1mod4 m={m}"))?;
            verified(&b)?;
            count += 1;
        }
    }
    for m in [3, 5, 7, 9, 11] {
        let b = kipas_3mod4_construction(m).map_err(|e| e.to_string())?;
        ensure(b.construction.order == 5 * m - 1, || format!("3mod4 m={m}"))?;
        three_mod_four_regularity(&b, m)?;
        verified(&b)?;
        count += 1;
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{count} colorings, {:?}", start.elapsed()))
}

fn w5w7() -> Check {
    let start = Instant::now();
    let b = w5w7_construction();
    verified(&b)?;
    let base = ramcert::generators::seven_cycle_with_chords();
    ensure(!detect::has_clique(&base, 3), || {
        "base graph has a triangle".into()
    })?;
    ensure(b.construction.order == 14, || "order".into())?;
    within(start, Duration::from_secs(5))?;
    Ok(format!("order 14, {:?}", start.elapsed()))
}

fn blow_up_properties() -> Check {
    let k2 = Graph::complete(2);
    for seed in 0..200u64 {
        let n = 3 + (seed % 10) as usize;
        let g = random_free_graph(n, PatternSpec::Clique(3), seed);
        let b = g.blow_up(&k2);
        for w in [PatternSpec::Wheel(5), PatternSpec::Wheel(6)] {
            ensure(!contains_pattern(&b, w), || {
                format!("triangle-free seed {seed} gives {w}")
            })?;
        }
        let g = random_free_graph(n, PatternSpec::K4MinusE, 10_000 + seed);
        ensure(
            !contains_pattern(&g.blow_up(&k2), PatternSpec::Wheel(7)),
            || format!("K4-e-free seed {seed} gives wheel:7"),
        )?;
    }
    Ok("400 graphs, 0 violations".into())
}

fn wheel_clique_witnesses() -> Check {
    let start = Instant::now();
    for (key, n, wheel) in [("k3k5", 5, 5), ("k3k6", 6, 6)] {
        let key: WitnessKey = key.parse().map_err(|e: ramcert::Error| e.to_string())?;
        let rec = bundled_witness(key).map_err(|e| e.to_string())?;
        let cert =
            verify_ramsey_witness(&rec.graph, PatternSpec::Clique(3), PatternSpec::Clique(n));
        ensure(cert.is_verified(), || format!("{key} witness refuted"))?;
        let b = wheel_clique_blowup(&rec.graph, &key.to_string(), wheel, n)
            .map_err(|e| e.to_string())?;
        verified(&b)?;
        let expect = 2 * certify::k3_kn_lower(n).unwrap() - 1;
        ensure(b.construction.claimed_bound == expect, || {
            format!("{key}: bound {}", b.construction.claimed_bound)
        })?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "R(W5,K5) >= 27, R(W6,K6) >= 35, {:?}",
        start.elapsed()
    ))
}

fn tables() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (c, out) = run(dir.path(), &["table", "all"]);
    ensure(c == 0, || format!("exit {c}: {out}"))?;
    let rows = certify::reproduce_tables().map_err(|e| e.to_string())?;
    let cells: usize = rows.iter().map(|r| r.cells.len()).sum();
    ensure(cells == 17, || format!("{cells} entries"))?;
    for v in ["27", "35", "71", "147", "31", "55", "97"] {
        ensure(out.split_whitespace().any(|w| w == v), || {
            format!("{v} missing")
        })?;
    }
    Ok("17 entries match".into())
}

fn oracle_equivalence() -> Check {
    let mut checks = 0;
    for i in 0..500u64 {
        let n = 1 + (i % 9) as usize;
        let g = if i % 2 == 0 {
            ramcert::generators::gnp(n, [0.3, 0.55, 0.8][(i / 2 % 3) as usize], i)
        } else {
            random_free_graph(
                n,
                [
                    PatternSpec::Clique(3),
                    PatternSpec::K4MinusE,
                    PatternSpec::Clique(4),
                ][(i / 2 % 3) as usize],
                i,
            )
        };
        for p in patterns_up_to(n) {
            let slow = oracle_contains(&g, p).map_err(|e| e.to_string())?;
            ensure(contains_pattern(&g, p) == slow, || {
                format!("graph {i} pattern {p}")
            })?;
            checks += 1;
        }
    }
    for i in 0..100u64 {
        let g = ramcert::generators::gnp(3 + (i % 10) as usize, 0.3, 50_000 + i);
        ensure(
            detect::matching_number(&g) == oracle_matching_number(&g).map_err(|e| e.to_string())?,
            || format!("matching graph {i}"),
        )?;
    }
    Ok(format!("{checks} containment + 100 matching checks"))
}

fn witness_search() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for seed in 1..=5 {
        let (c, _) = run(
            dir.path(),
            &[
                "search",
                "--order",
                "10",
                "--avoid",
                "k4me",
                "--avoid-c",
                "clique:4",
                "--budget",
                "1000000",
                "--seed",
                &seed.to_string(),
                "-o",
                "w.g6",
            ],
        );
        if c == 0 {
            let g = ramcert::witnesses::load_graph6_file(&dir.path().join("w.g6"))
                .map_err(|e| e.to_string())?;
            let cert = verify_ramsey_witness(&g, PatternSpec::K4MinusE, PatternSpec::Clique(4));
            ensure(cert.is_verified() && g.order() == 10, || {
                "re-verification failed".into()
            })?;
            return Ok(format!("seed {seed}"));
        }
    }
    Err("no seed in 1..=5 succeeded".into())
}

fn fan_structure() -> Check {
    for (n, m) in fan_pairs() {
        let b = ramcert::constructions::fan_construction(n, m).map_err(|e| e.to_string())?;
        let red = b.coloring.red();
        ensure(red.max_degree() < 2 * n, || {
            format!("fan:{n},{m} red max degree")
        })?;
        let c = &b.construction;
        let block = |name: &str| c.block(name).cloned().ok_or(format!("no block {name}"));
        let (k, h3, h4) = (block("K2n")?, block("H3")?, block("H4")?);
        ensure(h3.len + h4.len == m - 1, || {
            format!("fan:{n},{m} |H3|+|H4|")
        })?;
        // every blue edge outside K_2n touches H3 ∪ H4
        let cover = |v: usize| h3.vertices().contains(&v) || h4.vertices().contains(&v);
        let blue = b.coloring.blue();
        for (u, v) in blue.edges() {
            if !k.vertices().contains(&u) && !k.vertices().contains(&v) {
                ensure(cover(u) || cover(v), || {
                    format!("fan:{n},{m} blue edge {u}-{v} uncovered")
                })?;
            }
        }
        ensure(
            b.coloring.color_of(k.start, k.start + 1) == Some(Color::Red),
            || "K2n red".into(),
        )?;
    }
    Ok("9 instances".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("fan bounds via construct + verify", fan_cli),
        ("even-wheel bound", even_wheels),
        ("kipas bounds", kipases),
        ("R(W5,W7) >= 15", w5w7),
        ("blow-up properties on random graphs", blow_up_properties),
        (
            "wheel-clique witnesses and blow-ups",
            wheel_clique_witnesses,
        ),
        ("table reproduction", tables),
        ("oracle equivalence", oracle_equivalence),
        ("witness search", witness_search),
        ("fan structural invariants", fan_structure),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
