//! Line protocol for the `sets` subcommand.
//!
//! Header: `N n` (union-find modes) or `N n c0` (splitfind), then an optional
//! `W w1 .. wn` weight line for the union-find modes (weights default to the
//! element ids). Operations:
//!
//! ```text
//! U x y L|R    union: x's row goes left/right of y's row
//! Q x          prefix query (one output line per query)
//! S i k cl cr  split [i, jj(i)] after k, coloring the halves cl / cr
//! D k [c]      undo the last split at k, optionally recoloring
//! C i          color query (prints the color, or "undefined")
//! ```
//!
//! Lines starting with `#` are comments.

use offsolve_core::error::Error as CoreError;
use offsolve_core::oracle::{oracle_ordered_sets, oracle_split_find, NaiveSplitOp};
use offsolve_core::sets::{
    offline_solve, Aggregation, CommutativeDsu, InvertibleDsu, MaxAgg, MinAgg, MulModAgg, SetOp,
    Side, SplitFind, SumAgg, XorAgg,
};

use crate::commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetsMode {
    OnlineInv,
    OnlineComm,
    Offline,
    SplitFind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggfKind {
    Sum,
    Xor,
    Max,
    Min,
    MulMod,
}

pub const MULMOD_MODULUS: u64 = 1_000_000_007;

struct UnionScript {
    n: usize,
    weights: Vec<u64>,
    ops: Vec<SetOp>,
}

fn parse_side(tok: &str) -> Result<Side, CliError> {
    match tok {
        "L" => Ok(Side::Left),
        "R" => Ok(Side::Right),
        other => Err(CliError::Validation(format!(
            "direction must be L or R, got {other}"
        ))),
    }
}

fn parse_union_script(input: &str, default_weight_is_id: bool) -> Result<UnionScript, CliError> {
    let mut n: Option<usize> = None;
    let mut weights: Option<Vec<u64>> = None;
    let mut ops = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| CliError::Validation(format!("line {}: {msg}", lineno + 1));
        match toks[0] {
            "N" => {
                let v = toks
                    .get(1)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("N needs an element count"))?;
                n = Some(v);
            }
            "W" => {
                let parsed: Option<Vec<u64>> = toks[1..].iter().map(|t| t.parse().ok()).collect();
                weights = Some(parsed.ok_or_else(|| bad("W needs numeric weights"))?);
            }
            "U" => {
                if toks.len() != 4 {
                    return Err(bad("U needs: U x y L|R"));
                }
                let x = toks[1].parse().map_err(|_| bad("bad x"))?;
                let y = toks[2].parse().map_err(|_| bad("bad y"))?;
                ops.push(SetOp::Union {
                    x,
                    y,
                    side: parse_side(toks[3])?,
                });
            }
            "Q" => {
                let x = toks
                    .get(1)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("Q needs an element"))?;
                ops.push(SetOp::Query { x });
            }
            other => return Err(bad(&format!("unknown op {other}"))),
        }
    }
    let n = n.ok_or_else(|| CliError::Validation("missing N header line".into()))?;
    let weights = weights.unwrap_or_else(|| {
        if default_weight_is_id {
            (1..=n as u64).collect()
        } else {
            vec![0; n]
        }
    });
    if weights.len() != n {
        return Err(CliError::Validation(format!(
            "expected {n} weights, got {}",
            weights.len()
        )));
    }
    Ok(UnionScript { n, weights, ops })
}

fn run_union_mode<A: Aggregation<Value = u64> + Clone>(
    script: &UnionScript,
    agg: A,
    mode: SetsMode,
    check_oracle: bool,
) -> Result<Vec<u64>, CliError> {
    let oracle_agg = agg.clone();
    let answers = match mode {
        SetsMode::OnlineInv => {
            let mut dsu = InvertibleDsu::new(&script.weights, agg)
                .map_err(|e: CoreError| CliError::Validation(e.to_string()))?;
            let mut out = Vec::new();
            for op in &script.ops {
                match *op {
                    SetOp::Union { x, y, side } => {
                        check_range(script.n, &[x, y])?;
                        dsu.union(x, y, side);
                    }
                    SetOp::Query { x } => {
                        check_range(script.n, &[x])?;
                        out.push(dsu.prefix_query(x));
                    }
                }
            }
            out
        }
        SetsMode::OnlineComm => {
            let mut dsu = CommutativeDsu::new(&script.weights, agg);
            let mut out = Vec::new();
            for op in &script.ops {
                match *op {
                    SetOp::Union { x, y, side } => {
                        check_range(script.n, &[x, y])?;
                        dsu.union(x, y, side);
                    }
                    SetOp::Query { x } => {
                        check_range(script.n, &[x])?;
                        out.push(dsu.prefix_query(x));
                    }
                }
            }
            out
        }
        SetsMode::Offline => offline_solve(&script.weights, &script.ops, &agg)
            .map_err(|e| CliError::Validation(e.to_string()))?,
        SetsMode::SplitFind => unreachable!("split-find handled separately"),
    };
    if check_oracle {
        let reference = oracle_ordered_sets(&script.weights, &script.ops, &oracle_agg)
            .map_err(|e| CliError::Validation(e.to_string()))?;
        if reference != answers {
            return Err(CliError::OracleMismatch(format!(
                "solver answers {answers:?} vs oracle {reference:?}"
            )));
        }
    }
    Ok(answers)
}

fn check_range(n: usize, elems: &[usize]) -> Result<(), CliError> {
    for &x in elems {
        if x < 1 || x > n {
            return Err(CliError::Validation(format!(
                "element {x} out of range 1..={n}"
            )));
        }
    }
    Ok(())
}

fn run_split_find(input: &str, check_oracle: bool) -> Result<Vec<String>, CliError> {
    let mut sf: Option<SplitFind<String>> = None;
    let mut n = 0usize;
    let mut c0 = String::new();
    let mut naive_ops: Vec<NaiveSplitOp<String>> = Vec::new();
    let mut answers = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| CliError::Validation(format!("line {}: {msg}", lineno + 1));
        match toks[0] {
            "N" => {
                if toks.len() != 3 {
                    return Err(bad("splitfind header is: N n color0"));
                }
                n = toks[1].parse().map_err(|_| bad("bad n"))?;
                c0 = toks[2].to_string();
                if n < 1 {
                    return Err(bad("n must be at least 1"));
                }
                sf = Some(SplitFind::new(n, c0.clone()));
            }
            "S" => {
                let sf = sf.as_mut().ok_or_else(|| bad("missing N header"))?;
                if toks.len() != 5 {
                    return Err(bad("S needs: S i k cleft cright"));
                }
                let i: usize = toks[1].parse().map_err(|_| bad("bad i"))?;
                let k: usize = toks[2].parse().map_err(|_| bad("bad k"))?;
                sf.split(i, k, toks[3].to_string(), toks[4].to_string())
                    .map_err(|e| CliError::Validation(format!("line {}: {e}", lineno + 1)))?;
                naive_ops.push(NaiveSplitOp::Split {
                    i,
                    k,
                    left: toks[3].to_string(),
                    right: toks[4].to_string(),
                });
            }
            "D" => {
                let sf = sf.as_mut().ok_or_else(|| bad("missing N header"))?;
                let k: usize = toks
                    .get(1)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("D needs a split position"))?;
                let recolor = toks.get(2).map(|t| t.to_string());
                match &recolor {
                    Some(c) => sf.undo_with_color(k, c.clone()),
                    None => sf.undo(k),
                }
                .map_err(|e| CliError::Validation(format!("line {}: {e}", lineno + 1)))?;
                naive_ops.push(NaiveSplitOp::Undo { k, color: recolor });
            }
            "C" => {
                let sf = sf.as_mut().ok_or_else(|| bad("missing N header"))?;
                let i: usize = toks
                    .get(1)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("C needs a position"))?;
                let color = sf
                    .query(i)
                    .map_err(|e| CliError::Validation(format!("line {}: {e}", lineno + 1)))?;
                answers.push(color.unwrap_or_else(|| "undefined".to_string()));
                naive_ops.push(NaiveSplitOp::Query { i });
            }
            other => return Err(bad(&format!("unknown op {other}"))),
        }
    }
    if sf.is_none() {
        return Err(CliError::Validation("missing N header line".into()));
    }
    if check_oracle {
        let reference: Vec<String> = oracle_split_find(n, c0, &naive_ops)
            .map_err(|e| CliError::Validation(e.to_string()))?
            .into_iter()
            .map(|c| c.unwrap_or_else(|| "undefined".to_string()))
            .collect();
        if reference != answers {
            return Err(CliError::OracleMismatch(format!(
                "solver answers {answers:?} vs oracle {reference:?}"
            )));
        }
    }
    Ok(answers)
}

/// Executes a sets script and returns one output line per query.
pub fn run_sets(
    input: &str,
    mode: SetsMode,
    aggf: AggfKind,
    check_oracle: bool,
) -> Result<Vec<String>, CliError> {
    if mode == SetsMode::SplitFind {
        return run_split_find(input, check_oracle);
    }
    let script = parse_union_script(input, true)?;
    let answers = match aggf {
        AggfKind::Sum => run_union_mode(&script, SumAgg, mode, check_oracle)?,
        AggfKind::Xor => run_union_mode(&script, XorAgg, mode, check_oracle)?,
        AggfKind::Max => run_union_mode(&script, MaxAgg, mode, check_oracle)?,
        AggfKind::Min => run_union_mode(&script, MinAgg, mode, check_oracle)?,
        AggfKind::MulMod => {
            run_union_mode(&script, MulModAgg::new(MULMOD_MODULUS), mode, check_oracle)?
        }
    };
    Ok(answers.iter().map(|v| v.to_string()).collect())
}
