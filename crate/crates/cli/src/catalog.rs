//! Graph sources: the built-in catalog, graph6 files and generator specs.

use std::path::Path;

use matchcert::generators::{self, generate};
use matchcert::graph6::parse_graph6;
use matchcert::CubicGraph;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// Unique within a run; reports are sorted by it.
    pub id: String,
    pub source: String,
    pub graph: CubicGraph,
}

/// Random orders in the built-in catalog, and graphs drawn per order.
pub const RANDOM_ORDERS: [usize; 4] = [8, 10, 12, 14];
pub const RANDOM_PER_ORDER: u64 = 100;

fn named(name: &str, params: &[u64], id: String) -> matchcert::Result<CatalogEntry> {
    let args: Vec<String> = params.iter().map(|p| p.to_string()).collect();
    Ok(CatalogEntry {
        id,
        source: format!("{name}({})", args.join(", ")),
        graph: generate(name, params)?,
    })
}

/// Named families plus seeded random bridgeless graphs. Random seeds run
/// from `seed` to `seed + 99` for each order.
pub fn builtin(seed: u64) -> matchcert::Result<Vec<CatalogEntry>> {
    let mut out = vec![
        named("k4", &[], "k4".into())?,
        named("k33", &[], "k33".into())?,
        named("petersen", &[], "petersen".into())?,
        named("flower_snark", &[5], "flower_snark-05".into())?,
    ];
    for m in 3..=6 {
        out.push(named("prism", &[m], format!("prism-{m:02}"))?);
        out.push(named("moebius_ladder", &[m], format!("moebius_ladder-{m:02}"))?);
    }
    for m in 5..=9 {
        out.push(named("generalized_petersen", &[m, 2], format!("generalized_petersen-{m:02}-2"))?);
    }
    for n in RANDOM_ORDERS {
        for i in 0..RANDOM_PER_ORDER {
            let s = seed + i;
            out.push(CatalogEntry {
                id: format!("random_bridgeless-{n:02}-{i:03}"),
                source: format!("random_bridgeless({n}, {s})"),
                graph: generators::random_bridgeless(n, s)?,
            });
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Parses `name` or `name:p1,p2,...`.
pub fn from_spec(spec: &str) -> matchcert::Result<CatalogEntry> {
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => {
            let params = p
                .split(',')
                .map(|x| {
                    x.trim().parse::<u64>().map_err(|_| {
                        matchcert::Error::BadParams(format!("parameter {x:?} in {spec:?} is not a number"))
                    })
                })
                .collect::<matchcert::Result<Vec<u64>>>()?;
            (n, params)
        }
        None => (spec, Vec::new()),
    };
    named(name, &params, spec.to_string())
}

pub fn from_graph6(line: &str, id: String) -> matchcert::Result<CatalogEntry> {
    Ok(CatalogEntry {
        source: format!("graph6 {id}"),
        graph: parse_graph6(line.trim())?,
        id,
    })
}

/// One graph per non-empty line, ids `line-00001` and up.
pub fn from_graph6_file(path: &Path) -> Result<Vec<CatalogEntry>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            from_graph6(l, format!("line-{:05}", i + 1))
                .map_err(|e| format!("{}:{}: {e}", path.display(), i + 1))
        })
        .collect()
}
