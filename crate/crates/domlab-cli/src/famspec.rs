//! Grammar for the `construct` subcommand.
//!
//! Simple families use prefix form (`path 7`, `corona path 3`,
//! `complete_bipartite 2 3`) or compact form (`p7`, `k4`, `c9`, `s3`,
//! `corona(k2)`, nestable). The two composite builders:
//!
//!   gt <h1> <h2> u=<id> v=<id> t=<k>      h1, h2 in compact form
//!   bm <block>;<block>;...;bridges=<i>.<x>-<j>.<y>,...
//!      block := k<r>+<compact>[:s=<id>[,<id>...]]

use domlab::families::{self, BmBlock, BmSpec, GtSpec};
use domlab::{Error, Graph, Result, VertexSet};

fn invalid(msg: impl Into<String>) -> Error {
    Error::SpecInvalid(msg.into())
}

fn parse_num(s: &str, what: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| invalid(format!("expected a number for {what}, got {s:?}")))
}

/// Compact single-token family expression.
pub fn parse_compact(token: &str) -> Result<Graph> {
    let t = token.trim();
    if let Some(inner) = t
        .strip_prefix("corona(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        return parse_compact(inner)?.corona();
    }
    let (head, num) = t.split_at(1.min(t.len()));
    match head {
        "k" => families::complete(parse_num(num, "complete size")?),
        "p" => families::path(parse_num(num, "path length")?),
        "c" => families::cycle(parse_num(num, "cycle length")?),
        "s" => families::star(parse_num(num, "star size")?),
        _ => Err(invalid(format!(
            "unrecognized compact family {t:?} (use k<n>, p<n>, c<n>, s<n> or corona(...))"
        ))),
    }
}

/// Prefix-form expression over a token stream: consumes what it needs.
fn parse_expr(tokens: &mut std::slice::Iter<'_, String>) -> Result<Graph> {
    let tok = tokens
        .next()
        .ok_or_else(|| invalid("unexpected end of family spec"))?;
    match tok.as_str() {
        "path" | "cycle" | "complete" | "star" => {
            let n = parse_num(
                tokens
                    .next()
                    .ok_or_else(|| invalid(format!("{tok} needs a size")))?,
                tok,
            )?;
            match tok.as_str() {
                "path" => families::path(n),
                "cycle" => families::cycle(n),
                "complete" => families::complete(n),
                _ => families::star(n),
            }
        }
        "complete_bipartite" => {
            let m = parse_num(
                tokens
                    .next()
                    .ok_or_else(|| invalid("complete_bipartite needs two sizes"))?,
                "complete_bipartite",
            )?;
            let n = parse_num(
                tokens
                    .next()
                    .ok_or_else(|| invalid("complete_bipartite needs two sizes"))?,
                "complete_bipartite",
            )?;
            families::complete_bipartite(m, n)
        }
        "corona" => parse_expr(tokens)?.corona(),
        other => parse_compact(other),
    }
}

fn parse_kv(token: &str, key: &str) -> Result<usize> {
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| invalid(format!("expected {key}=<number>, got {token:?}")))
        .and_then(|v| parse_num(v, key))
}

fn parse_gt(args: &[String]) -> Result<Graph> {
    if args.len() != 5 {
        return Err(invalid(
            "gt needs: <h1> <h2> u=<id> v=<id> t=<k> (h-specs in compact form)",
        ));
    }
    let spec = GtSpec {
        h1: parse_compact(&args[0])?,
        h2: parse_compact(&args[1])?,
        u: parse_kv(&args[2], "u")?,
        v: parse_kv(&args[3], "v")?,
        t: parse_kv(&args[4], "t")?,
    };
    families::build_gt(&spec)
}

fn parse_bm_block(part: &str) -> Result<BmBlock> {
    let (graph_part, s_part) = match part.split_once(":s=") {
        Some((g, s)) => (g, Some(s)),
        None => (part, None),
    };
    let (clique_part, h_part) = graph_part
        .split_once('+')
        .ok_or_else(|| invalid(format!("block {part:?} must look like k<r>+<family>")))?;
    let clique = clique_part
        .strip_prefix('k')
        .ok_or_else(|| invalid(format!("block {part:?} must start with k<r>")))
        .and_then(|n| parse_num(n, "clique size"))?;
    let h = parse_compact(h_part)?;
    let mut s = VertexSet::EMPTY;
    if let Some(list) = s_part {
        for item in list.split(',') {
            let v = parse_num(item, "attachment vertex")?;
            if v >= h.n() {
                return Err(invalid(format!(
                    "attachment vertex {v} is outside the block's graph (n={})",
                    h.n()
                )));
            }
            s.insert(v);
        }
    }
    Ok(BmBlock { clique, h, s })
}

fn parse_bm(args: &[String]) -> Result<Graph> {
    let joined = args.join(";");
    let mut blocks = Vec::new();
    let mut bridges = Vec::new();
    for part in joined.split(';').filter(|p| !p.trim().is_empty()) {
        let part = part.trim();
        if let Some(list) = part.strip_prefix("bridges=") {
            for item in list.split(',').filter(|i| !i.is_empty()) {
                let (a, b) = item
                    .split_once('-')
                    .ok_or_else(|| invalid(format!("bridge {item:?} must be i.x-j.y")))?;
                let parse_end = |end: &str| -> Result<(usize, usize)> {
                    let (blk, v) = end
                        .split_once('.')
                        .ok_or_else(|| invalid(format!("bridge end {end:?} must be i.x")))?;
                    Ok((parse_num(blk, "block index")?, parse_num(v, "vertex")?))
                };
                bridges.push((parse_end(a)?, parse_end(b)?));
            }
        } else {
            blocks.push(parse_bm_block(part)?);
        }
    }
    families::build_bm(&BmSpec {
        blocks,
        bridges,
        allow_disconnected: false,
    })
}

/// Entry point for `construct`: dispatches on the first token.
pub fn parse_construct(args: &[String]) -> Result<Graph> {
    let Some(first) = args.first() else {
        return Err(invalid("empty construct spec"));
    };
    match first.as_str() {
        "gt" => parse_gt(&args[1..]),
        "bm" => parse_bm(&args[1..]),
        _ => {
            let mut it = args.iter();
            let g = parse_expr(&mut it)?;
            if let Some(extra) = it.next() {
                return Err(invalid(format!("unexpected trailing token {extra:?}")));
            }
            Ok(g)
        }
    }
}
