//! Named cubic graph families and a seeded random bridgeless generator.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{build_graph, is_bridgeless, CubicGraph, VertexId};

const RANDOM_ATTEMPTS: usize = 100_000;

fn known(n: usize, pairs: &[(VertexId, VertexId)]) -> CubicGraph {
    build_graph(n, pairs).expect("generator produced an invalid cubic graph")
}

pub fn k4() -> CubicGraph {
    known(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Parts `{0, 1, 2}` and `{3, 4, 5}`.
pub fn k33() -> CubicGraph {
    let mut pairs = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            pairs.push((u, v));
        }
    }
    known(6, &pairs)
}

/// Two `m`-cycles `0..m` and `m..2m` joined by rungs `i -- m+i`.
pub fn prism(m: usize) -> Result<CubicGraph> {
    if m < 3 {
        return Err(Error::BadParams(format!("prism needs m >= 3, got {m}")));
    }
    let mut pairs = Vec::new();
    for i in 0..m {
        pairs.push((i, (i + 1) % m));
        pairs.push((m + i, m + (i + 1) % m));
        pairs.push((i, m + i));
    }
    build_graph(2 * m, &pairs)
}

/// A `2m`-cycle with the `m` long diagonals `i -- i+m`.
pub fn moebius_ladder(m: usize) -> Result<CubicGraph> {
    if m < 2 {
        return Err(Error::BadParams(format!("Moebius ladder needs m >= 2, got {m}")));
    }
    let n = 2 * m;
    let mut pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    pairs.extend((0..m).map(|i| (i, i + m)));
    build_graph(n, &pairs)
}

/// Outer cycle `0..m`, spokes `i -- m+i`, inner edges `m+i -- m+(i+t mod m)`.
pub fn generalized_petersen(m: usize, t: usize) -> Result<CubicGraph> {
    if m < 3 || t == 0 || 2 * t >= m {
        return Err(Error::BadParams(format!(
            "generalized Petersen needs m >= 3 and 1 <= t < m/2, got ({m}, {t})"
        )));
    }
    let mut pairs = Vec::new();
    for i in 0..m {
        pairs.push((i, (i + 1) % m));
        pairs.push((i, m + i));
        pairs.push((m + i, m + (i + t) % m));
    }
    build_graph(2 * m, &pairs)
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
pub fn petersen() -> CubicGraph {
    generalized_petersen(5, 2).expect("Petersen parameters are valid")
}

/// Flower snark on `4m` vertices. Star `i` has centre `4i` and leaves
/// `4i+1`, `4i+2`, `4i+3`; the first leaves form an `m`-cycle and the other
/// two leaf classes form a single `2m`-cycle.
pub fn flower_snark(m: usize) -> Result<CubicGraph> {
    if m < 5 || m.is_multiple_of(2) {
        return Err(Error::BadParams(format!(
            "flower snark needs odd m >= 5, got {m}"
        )));
    }
    let a = |i: usize| 4 * i;
    let b = |i: usize| 4 * i + 1;
    let c = |i: usize| 4 * i + 2;
    let d = |i: usize| 4 * i + 3;
    let mut pairs = Vec::new();
    for i in 0..m {
        let j = (i + 1) % m;
        pairs.push((a(i), b(i)));
        pairs.push((a(i), c(i)));
        pairs.push((a(i), d(i)));
        pairs.push((b(i), b(j)));
        if j == 0 {
            pairs.push((c(i), d(j)));
            pairs.push((d(i), c(j)));
        } else {
            pairs.push((c(i), c(j)));
            pairs.push((d(i), d(j)));
        }
    }
    build_graph(4 * m, &pairs)
}

/// Configuration-model sample, rejected and redrawn until simple, connected
/// and bridgeless. The same `(n, seed)` always yields the same graph.
pub fn random_bridgeless(n: usize, seed: u64) -> Result<CubicGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::BadParams(format!(
            "random cubic graph needs even n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<VertexId> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..RANDOM_ATTEMPTS {
        points.shuffle(&mut rng);
        let pairs: Vec<_> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = build_graph(n, &pairs) {
            if is_bridgeless(&g) {
                return Ok(g);
            }
        }
    }
    Err(Error::ResourceCap {
        what: "random bridgeless cubic graph attempts",
        limit: RANDOM_ATTEMPTS as u64,
    })
}

/// A bridgeless cubic graph on `n` vertices whose identity order `0..n` is a
/// Hamiltonian path. Chords join each vertex to a later one, preferring the
/// next few positions, which keeps many short 2-factor cycles along the path.
pub fn random_traceable(n: usize, seed: u64) -> Result<CubicGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::BadParams(format!(
            "traceable cubic graph needs even n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let window = [3, 4, 6][rng.gen_range(0..3)];
        if let Some(g) = chorded_path(n, window, &mut rng) {
            return Ok(g);
        }
    }
    Err(Error::ResourceCap {
        what: "random traceable cubic graph attempts",
        limit: RANDOM_ATTEMPTS as u64,
    })
}

fn chorded_path(n: usize, window: usize, rng: &mut ChaCha8Rng) -> Option<CubicGraph> {
    let mut free = vec![1usize; n];
    free[0] = 2;
    free[n - 1] = 2;
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    for u in 0..n {
        while free[u] > 0 {
            let open = |v: &usize| free[*v] > 0 && !pairs.contains(&(u, *v));
            let mut cands: Vec<usize> = (u + 2..n.min(u + 2 + window)).filter(open).collect();
            if cands.is_empty() {
                cands = (u + 2..n).filter(open).collect();
            }
            if cands.is_empty() {
                return None;
            }
            let v = cands[rng.gen_range(0..cands.len())];
            free[u] -= 1;
            free[v] -= 1;
            pairs.push((u, v));
        }
    }
    let g = build_graph(n, &pairs).ok()?;
    is_bridgeless(&g).then_some(g)
}

/// Dispatch by family name, as used by the command line and catalogs.
pub fn generate(name: &str, params: &[u64]) -> Result<CubicGraph> {
    let p = |i: usize| -> Result<usize> {
        params
            .get(i)
            .map(|&x| x as usize)
            .ok_or_else(|| Error::BadParams(format!("{name} expects {} parameter(s)", i + 1)))
    };
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::BadParams(format!(
                "{name} expects {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "k4" => arity(0).map(|_| k4()),
        "k33" => arity(0).map(|_| k33()),
        "petersen" => arity(0).map(|_| petersen()),
        "prism" => {
            arity(1)?;
            prism(p(0)?)
        }
        "moebius_ladder" => {
            arity(1)?;
            moebius_ladder(p(0)?)
        }
        "generalized_petersen" => {
            arity(2)?;
            generalized_petersen(p(0)?, p(1)?)
        }
        "flower_snark" => {
            arity(1)?;
            flower_snark(p(0)?)
        }
        "random_bridgeless" => {
            arity(2)?;
            random_bridgeless(p(0)?, params[1])
        }
        "random_traceable" => {
            arity(2)?;
            random_traceable(p(0)?, params[1])
        }
        other => Err(Error::BadParams(format!("unknown generator {other:?}"))),
    }
}

/// Two copies of K4 minus an edge, each with the missing edge subdivided,
/// joined by an edge between the subdivision vertices. The joining edge is a
/// bridge.
pub fn bridged_pair() -> CubicGraph {
    let mut pairs = Vec::new();
    for off in [0, 5] {
        let (a, b, c, d, s) = (off, off + 1, off + 2, off + 3, off + 4);
        pairs.extend([(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (b, s)]);
    }
    pairs.push((4, 9));
    known(10, &pairs)
}

/// Dot product: delete two adjacent vertices `x, y` of `g` and two disjoint
/// edges `ab`, `cd` of `h`, then connect the four dangling ends of `g` to
/// `a, b, c, d`. Vertices of `g` come first, then those of `h`.
///
/// `x_y` must be an edge of `g`; the neighbours of `x` other than `y` go to
/// `a, b` and those of `y` other than `x` go to `c, d`. The dot product of two
/// snarks is a snark.
pub fn dot_product(
    g: &CubicGraph,
    x_y: (VertexId, VertexId),
    h: &CubicGraph,
    ab: (VertexId, VertexId),
    cd: (VertexId, VertexId),
) -> Result<CubicGraph> {
    let (x, y) = x_y;
    if g.edge_between(x, y).is_none() {
        return Err(Error::BadParams(format!("{x} and {y} are not adjacent")));
    }
    let eab = h.edge_between(ab.0, ab.1);
    let ecd = h.edge_between(cd.0, cd.1);
    if eab.is_none() || ecd.is_none() {
        return Err(Error::BadParams("dot product edges missing from h".into()));
    }
    let shared = [ab.0, ab.1].iter().any(|v| *v == cd.0 || *v == cd.1);
    if shared {
        return Err(Error::BadParams("dot product edges must be disjoint".into()));
    }
    // g keeps its vertices except x, y, renumbered densely; h follows.
    let keep: Vec<VertexId> = (0..g.n()).filter(|&v| v != x && v != y).collect();
    let mut gmap = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        gmap[v] = i;
    }
    let off = keep.len();
    let mut pairs = Vec::new();
    for &(u, v) in g.edges() {
        if gmap[u] != usize::MAX && gmap[v] != usize::MAX {
            pairs.push((gmap[u], gmap[v]));
        }
    }
    for (e, &(u, v)) in h.edges().iter().enumerate() {
        if Some(e) != eab && Some(e) != ecd {
            pairs.push((off + u, off + v));
        }
    }
    let xs: Vec<_> = g.neighbors(x).iter().copied().filter(|&v| v != y).collect();
    let ys: Vec<_> = g.neighbors(y).iter().copied().filter(|&v| v != x).collect();
    pairs.push((gmap[xs[0]], off + ab.0));
    pairs.push((gmap[xs[1]], off + ab.1));
    pairs.push((gmap[ys[0]], off + cd.0));
    pairs.push((gmap[ys[1]], off + cd.1));
    build_graph(off + h.n(), &pairs)
}

/// Relabels vertex `v` as `perm[v]`.
pub fn relabel(g: &CubicGraph, perm: &[VertexId]) -> Result<CubicGraph> {
    if perm.len() != g.n() {
        return Err(Error::BadParams("permutation length differs from n".into()));
    }
    let pairs: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    build_graph(g.n(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_girths() {
        let p = petersen();
        assert_eq!((p.n(), p.m(), p.girth()), (10, 15, 5));
        assert_eq!(k4().girth(), 3);
        assert_eq!(k33().girth(), 4);
        assert_eq!(prism(3).unwrap().girth(), 3);
        assert_eq!(prism(5).unwrap().girth(), 4);
        let j5 = flower_snark(5).unwrap();
        assert_eq!(j5.n(), 20);
        assert_eq!(j5.girth(), 5);
        assert_eq!(flower_snark(7).unwrap().girth(), 6);
        assert_eq!(moebius_ladder(4).unwrap().girth(), 4);
    }

    #[test]
    fn families_are_bridgeless() {
        let mut all = vec![k4(), k33(), petersen(), flower_snark(5).unwrap()];
        for m in 3..7 {
            all.push(prism(m).unwrap());
            all.push(moebius_ladder(m).unwrap());
        }
        for m in 5..10 {
            all.push(generalized_petersen(m, 2).unwrap());
        }
        for g in &all {
            assert!(is_bridgeless(g), "{g:?}");
        }
    }

    #[test]
    fn bad_parameters_rejected() {
        assert!(matches!(prism(2), Err(Error::BadParams(_))));
        assert!(matches!(flower_snark(6), Err(Error::BadParams(_))));
        assert!(matches!(generalized_petersen(6, 3), Err(Error::BadParams(_))));
        assert!(matches!(random_bridgeless(7, 1), Err(Error::BadParams(_))));
        assert!(matches!(generate("cube", &[]), Err(Error::BadParams(_))));
        assert!(matches!(generate("prism", &[]), Err(Error::BadParams(_))));
    }

    #[test]
    fn random_generator_is_deterministic() {
        let a = random_bridgeless(14, 7).unwrap();
        let b = random_bridgeless(14, 7).unwrap();
        assert_eq!(a, b);
        assert!(is_bridgeless(&a));
        let c = random_bridgeless(14, 8).unwrap();
        assert_ne!(a.id(), c.id());
    }

    #[test]
    fn dot_product_of_two_petersens_has_eighteen_vertices() {
        let p = petersen();
        // edges 5-7 and 6-8 of the inner pentagram are disjoint
        let g = dot_product(&p, (0, 1), &p, (5, 7), (6, 8)).unwrap();
        assert_eq!(g.n(), 18);
        assert!(is_bridgeless(&g));
    }
}
