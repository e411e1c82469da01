//! Seed-driven random instance generation for fuzzing. All randomness flows
//! from the explicit seed; instance sizes stay inside the oracle caps so
//! `--seed N --oracle` always cross-checks.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::CliError;
use crate::sets_script::SetsMode;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<u32> {
    let mut values: Vec<u32> = (1..=n as u32).collect();
    values.shuffle(rng);
    values
}

fn random_multiperm(rng: &mut ChaCha8Rng, n: usize, k: u32) -> Vec<u32> {
    // Every value at least once, the rest uniform.
    let mut values: Vec<u32> = (1..=k).collect();
    while values.len() < n {
        values.push(rng.random_range(1..=k));
    }
    values.shuffle(rng);
    values
}

/// Generates the input document for a subcommand. JSON subcommands get a JSON
/// document; `sets` gets a script.
pub fn generate(subcommand: &str, mode: Option<SetsMode>, seed: u64) -> Result<String, CliError> {
    let mut rng = rng_for(seed);
    let doc = match subcommand {
        "transfer" => {
            let n = 5;
            let m = 8;
            let edges: Vec<_> = (0..m)
                .map(|_| {
                    let from = rng.random_range(1..=n as u32);
                    let mut to = rng.random_range(1..=n as u32 - 1);
                    if to >= from {
                        to += 1;
                    }
                    let tstart = rng.random_range(0..=15u64);
                    let tfinish = tstart + rng.random_range(1..=5u64);
                    let twait = rng.random_range(0..=(tfinish - tstart));
                    json!({"from": from, "to": to, "tstart": tstart, "tfinish": tfinish, "twait": twait})
                })
                .collect();
            json!({
                "n": n,
                "s": rng.random_range(1..=n),
                "d": rng.random_range(1..=n),
                "T": rng.random_range(5..=20u64),
                "edges": edges,
            })
            .to_string()
        }
        "ratio" => {
            let items: Vec<_> = (0..8)
                .map(|_| json!({"p": rng.random_range(0..=10) as f64, "q": rng.random_range(1..=10) as f64}))
                .collect();
            json!({"items": items}).to_string()
        }
        "maxpath" | "maxcycle" => {
            let n = 4;
            let edges: Vec<_> = (0..6)
                .map(|_| {
                    let from = rng.random_range(1..=n as u32);
                    let mut to = rng.random_range(1..=n as u32 - 1);
                    if to >= from {
                        to += 1;
                    }
                    json!({
                        "from": from,
                        "to": to,
                        "w": rng.random_range(-5..=10) as f64,
                        "l": rng.random_range(1..=3u64),
                    })
                })
                .collect();
            let lmin = rng.random_range(0..=2u64);
            json!({"n": n, "edges": edges, "lmin": lmin, "lmax": lmin + rng.random_range(1..=4u64)})
                .to_string()
        }
        "maxsegment" => {
            let values: Vec<f64> = (0..10).map(|_| rng.random_range(-9..=9) as f64).collect();
            json!({"values": values}).to_string()
        }
        "mst-offers" => {
            let n = 5;
            let q = 3;
            let edges: Vec<_> = (0..8)
                .map(|_| {
                    let a = rng.random_range(1..=n as u32);
                    let mut b = rng.random_range(1..=n as u32 - 1);
                    if b >= a {
                        b += 1;
                    }
                    let sp = rng.random_range(0..=6u64);
                    json!({
                        "a": a,
                        "b": b,
                        "owner": rng.random_range(1..=q as u32),
                        "np": sp + rng.random_range(0..=6u64),
                        "sp": sp,
                    })
                })
                .collect();
            json!({"n": n, "q": q, "edges": edges}).to_string()
        }
        "avgfree" => json!({"n": rng.random_range(1..=64)}).to_string(),
        "rotsort1" => json!({
            "permutation": random_permutation(&mut rng, 7),
            "case": rng.random_range(1..=2),
        })
        .to_string(),
        "rotsort2" => json!({"permutation": random_permutation(&mut rng, 7)}).to_string(),
        "swapsort" => {
            let n = 6;
            let pairs: Vec<(usize, usize)> = (0..rng.random_range(2..=7))
                .map(|_| {
                    let i = rng.random_range(1..=n);
                    let mut j = rng.random_range(1..=n - 1);
                    if j >= i {
                        j += 1;
                    }
                    (i.min(j), i.max(j))
                })
                .collect();
            json!({"permutation": random_permutation(&mut rng, n), "allowed": pairs}).to_string()
        }
        "cyclesort" => {
            let n = 6;
            let costs: Vec<u64> = (0..n).map(|_| *[1u64, 2, 5, 10].choose(&mut rng).unwrap()).collect();
            json!({"permutation": random_permutation(&mut rng, n), "costs": costs}).to_string()
        }
        "circsort" => {
            let k = 3;
            json!({"values": random_multiperm(&mut rng, 6, k), "k": k}).to_string()
        }
        "adjswaps" => {
            let k = 3;
            let p = random_multiperm(&mut rng, 7, k);
            let mut q = p.clone();
            q.shuffle(&mut rng);
            json!({"p": p, "q": q, "k": k}).to_string()
        }
        "group" => {
            let k = 3;
            json!({"values": random_multiperm(&mut rng, 8, k), "k": k}).to_string()
        }
        "movesort" => json!({"permutation": random_permutation(&mut rng, 7)}).to_string(),
        "toggle" => {
            let p = 8usize;
            // Random tree: parent sampled among earlier vertices.
            let edges: Vec<(u32, u32)> = (2..=p as u32)
                .map(|v| (rng.random_range(1..v), v))
                .collect();
            let bits = |rng: &mut ChaCha8Rng| (0..p).map(|_| rng.random_range(0..=1u8)).collect::<Vec<_>>();
            let initial = bits(&mut rng);
            let target = bits(&mut rng);
            let costs: Vec<u64> = (0..p).map(|_| rng.random_range(0..=7u64)).collect();
            json!({
                "graph": {"p": p, "edges": edges},
                "I": initial,
                "F": target,
                "C": costs,
            })
            .to_string()
        }
        "sets" => generate_sets_script(&mut rng, mode.unwrap_or(SetsMode::OnlineInv)),
        other => {
            return Err(CliError::Validation(format!(
                "no generator for subcommand {other}"
            )))
        }
    };
    Ok(doc)
}

fn generate_sets_script(rng: &mut ChaCha8Rng, mode: SetsMode) -> String {
    let n = 10usize;
    let mut lines = Vec::new();
    if mode == SetsMode::SplitFind {
        lines.push(format!("N {n} c0"));
        // Track current intervals and outstanding splits so every op is valid.
        let mut starts: Vec<(usize, usize)> = vec![(1, n)];
        let mut undoable: Vec<(usize, usize, usize)> = Vec::new(); // (i, k, j)
        let mut color = 0usize;
        for _ in 0..30 {
            let pick = rng.random_range(0..3);
            if pick == 0 && !undoable.is_empty() {
                let at = rng.random_range(0..undoable.len());
                let (i, k, j) = undoable.remove(at);
                // Valid only if both halves still exist.
                if starts.contains(&(i, k)) && starts.contains(&(k + 1, j)) {
                    lines.push(format!("D {k}"));
                    starts.retain(|&(a, _)| a != i && a != k + 1);
                    starts.push((i, j));
                    continue;
                }
            }
            if pick <= 1 {
                let splittable: Vec<(usize, usize)> =
                    starts.iter().copied().filter(|&(a, b)| a < b).collect();
                if let Some(&(i, j)) = splittable.as_slice().choose(rng) {
                    let k = rng.random_range(i..j);
                    color += 2;
                    lines.push(format!("S {i} {k} c{} c{}", color - 1, color));
                    starts.retain(|&(a, _)| a != i);
                    starts.push((i, k));
                    starts.push((k + 1, j));
                    undoable.retain(|&(_, kk, _)| kk != k);
                    undoable.push((i, k, j));
                    continue;
                }
            }
            lines.push(format!("C {}", rng.random_range(1..=n)));
        }
    } else {
        lines.push(format!("N {n}"));
        let weights: Vec<String> = (0..n).map(|_| rng.random_range(1..=50u64).to_string()).collect();
        lines.push(format!("W {}", weights.join(" ")));
        for _ in 0..25 {
            if rng.random_bool(0.5) {
                let x = rng.random_range(1..=n);
                let y = rng.random_range(1..=n);
                let side = if rng.random_bool(0.5) { "L" } else { "R" };
                lines.push(format!("U {x} {y} {side}"));
            } else {
                lines.push(format!("Q {}", rng.random_range(1..=n)));
            }
        }
    }
    lines.join("\n") + "\n"
}
