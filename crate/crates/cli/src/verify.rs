//! Re-checks a record's certificates from the graph6 string and the listed
//! endpoint pairs alone. Nothing here calls the library's searches; perfect
//! matchings, joins and odd cuts are checked by direct counting.

use std::collections::BTreeSet;

use matchcert::graph6::parse_graph6;

use crate::report::*;

type Edge = (usize, usize);

struct Host {
    n: usize,
    edges: Vec<Edge>,
    present: BTreeSet<Edge>,
}

fn norm(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

impl Host {
    fn parse(graph6: &str) -> Result<Self, String> {
        let g = parse_graph6(graph6).map_err(|e| e.to_string())?;
        let edges = g.edges().to_vec();
        Ok(Host {
            n: g.n(),
            present: edges.iter().copied().collect(),
            edges,
        })
    }

    /// The listed edges as endpoint pairs, after checking ids and endpoints
    /// agree with the graph.
    fn set(&self, l: &EdgeList, what: &str) -> Result<BTreeSet<Edge>, String> {
        if l.ids.len() != l.ends.len() {
            return Err(format!("{what}: {} ids but {} endpoint pairs", l.ids.len(), l.ends.len()));
        }
        let mut out = BTreeSet::new();
        for (&id, &[u, v]) in l.ids.iter().zip(&l.ends) {
            let e = norm(u, v);
            if !self.present.contains(&e) {
                return Err(format!("{what}: {u}-{v} is not an edge"));
            }
            if self.edges.get(id) != Some(&e) {
                return Err(format!("{what}: id {id} does not name {u}-{v}"));
            }
            if !out.insert(e) {
                return Err(format!("{what}: {u}-{v} listed twice"));
            }
        }
        Ok(out)
    }

    fn degrees(&self, s: &BTreeSet<Edge>) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in s {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    fn is_perfect_matching(&self, s: &BTreeSet<Edge>) -> bool {
        self.degrees(s).iter().all(|&d| d == 1)
    }

    fn is_join(&self, s: &BTreeSet<Edge>) -> bool {
        self.degrees(s).iter().all(|&d| d % 2 == 1)
    }

    /// An odd vertex set whose boundary lies in `s` exists exactly when
    /// `G - s` has a component of odd order.
    fn has_odd_cut_inside(&self, s: &BTreeSet<Edge>) -> bool {
        let mut comp: Vec<usize> = (0..self.n).collect();
        fn root(c: &mut [usize], mut v: usize) -> usize {
            while c[v] != v {
                c[v] = c[c[v]];
                v = c[v];
            }
            v
        }
        for &(u, v) in &self.edges {
            if !s.contains(&(u, v)) {
                let (a, b) = (root(&mut comp, u), root(&mut comp, v));
                comp[a] = b;
            }
        }
        let mut size = vec![0usize; self.n];
        for v in 0..self.n {
            size[root(&mut comp, v)] += 1;
        }
        size.iter().any(|&k| k % 2 == 1)
    }

    fn boundary(&self, side: &[usize]) -> BTreeSet<Edge> {
        let inside: BTreeSet<usize> = side.iter().copied().collect();
        self.edges
            .iter()
            .copied()
            .filter(|(u, v)| inside.contains(u) != inside.contains(v))
            .collect()
    }

    fn is_proper_colouring(&self, classes: &[EdgeList; 3]) -> Result<bool, String> {
        let mut seen = BTreeSet::new();
        for (k, c) in classes.iter().enumerate() {
            let s = self.set(c, &format!("colour class {k}"))?;
            if !self.is_perfect_matching(&s) {
                return Ok(false);
            }
            seen.extend(s);
        }
        Ok(seen.len() == self.edges.len())
    }

    fn path_is_hamiltonian(&self, path: &[usize]) -> bool {
        let distinct: BTreeSet<usize> = path.iter().copied().collect();
        path.len() == self.n
            && distinct.len() == self.n
            && path.windows(2).all(|w| self.present.contains(&norm(w[0], w[1])))
    }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pms(h: &Host, lists: &[(&EdgeList, &str)]) -> Result<Vec<BTreeSet<Edge>>, String> {
    lists
        .iter()
        .map(|(l, what)| {
            let s = h.set(l, what)?;
            require(h.is_perfect_matching(&s), || format!("{what} is not a perfect matching"))?;
            Ok(s)
        })
        .collect()
}

fn and(a: &BTreeSet<Edge>, b: &BTreeSet<Edge>) -> BTreeSet<Edge> {
    a.intersection(b).copied().collect()
}

fn check_pair(h: &Host, c: &PairCert) -> Result<(), String> {
    let m = pms(h, &[(&c.m1, "m1"), (&c.m2, "m2")])?;
    let inter = h.set(&c.intersection, "intersection")?;
    require(inter == and(&m[0], &m[1]), || "intersection is not m1 ∩ m2".into())?;
    require(!h.has_odd_cut_inside(&inter), || "intersection contains an odd cut".into())
}

fn check_invariants(h: &Host, c: &Invariants) -> Result<(), String> {
    if let Some(col) = &c.colouring {
        require(c.chromatic_index == 3 && h.is_proper_colouring(col)?, || {
            "colouring is not proper".into()
        })?;
    } else {
        require(c.chromatic_index == 4, || "class 1 claimed without a colouring".into())?;
    }
    if let (Some(k), Some(cut), Some(side)) = (c.cyclic_connectivity, &c.cyclic_cut, &c.cyclic_side) {
        let cut = h.set(cut, "cyclic cut")?;
        require(cut.len() == k && h.boundary(side) == cut, || "cyclic cut is not the side's boundary".into())?;
    }
    Ok(())
}

fn check_join(h: &Host, c: &JoinCert) -> Result<(), String> {
    let m = pms(h, &[(&c.m1, "m1"), (&c.m2, "m2")])?;
    let j = h.set(&c.join, "join")?;
    require(h.is_join(&j), || "join has a vertex of even degree".into())?;
    require(and(&and(&m[0], &m[1]), &j).is_empty(), || "m1 ∩ m2 ∩ join is not empty".into())
}

fn check_triple(h: &Host, c: &TripleCert) -> Result<(), String> {
    let m = pms(h, &[(&c.m1, "m1"), (&c.m2, "m2"), (&c.m3, "m3")])?;
    require(and(&and(&m[0], &m[1]), &m[2]).is_empty(), || "common intersection is not empty".into())
}

fn check_colourability(h: &Host, c: &ColourabilityCert) -> Result<(), String> {
    require(c.colourable == c.colouring.is_some(), || "colourable flag disagrees".into())?;
    require(c.colouring.is_some() == c.matching.is_some(), || "the two sides disagree".into())?;
    if let Some(col) = &c.colouring {
        require(h.is_proper_colouring(col)?, || "colouring is not proper".into())?;
    }
    if let Some(m) = &c.matching {
        let m = pms(h, &[(m, "matching")])?.remove(0);
        require(!h.has_odd_cut_inside(&m), || "matching contains an odd cut".into())?;
    }
    Ok(())
}

fn check_small_pair(h: &Host, c: &SmallPairCert) -> Result<(), String> {
    let m = pms(h, &[(&c.m, "m"), (&c.m_prime, "m'")])?;
    require(m[0] != m[1], || "the pair is one matching twice".into())?;
    let inter = h.set(&c.intersection, "intersection")?;
    require(inter == and(&m[0], &m[1]), || "intersection is not m ∩ m'".into())?;
    require(c.bound == h.n / 10 && inter.len() <= c.bound, || "intersection above n/10".into())?;
    require(!h.has_odd_cut_inside(&inter), || "intersection contains an odd cut".into())
}

fn check_pair_or_cut(h: &Host, c: &PairOrCutCert) -> Result<(), String> {
    if let (Some(k), Some(s)) = (c.k, c.s) {
        require(s == 2 * (k / 2) + 3, || "s does not match k".into())?;
        if let Some([a, b]) = &c.min_pair {
            let m = pms(h, &[(a, "pair m"), (b, "pair m'")])?;
            require(Some(and(&m[0], &m[1]).len()) == c.min_pair_intersection, || {
                "min pair size misreported".into()
            })?;
            // pair alternative: |M ∩ M'| <= n / 2s, compared without division
            let within = 2 * s * and(&m[0], &m[1]).len() <= h.n;
            require(!c.pair_alternative || within, || "pair alternative claimed but not met".into())?;
        }
        if c.cut_alternative {
            require(!c.cut_witnesses.is_empty(), || "cut alternative without witnesses".into())?;
            for w in &c.cut_witnesses {
                let m = pms(h, &[(&w.matching, "cut matching")])?.remove(0);
                let cut = h.set(&w.cut, "cut")?;
                require(w.side.len() % 2 == 1 && cut.len() == s - 2, || "cut witness has the wrong size".into())?;
                require(h.boundary(&w.side) == cut && cut.is_subset(&m), || {
                    "cut witness is not a boundary inside its matching".into()
                })?;
            }
        }
        require(c.pair_alternative || c.cut_alternative, || "neither alternative holds".into())?;
        if c.two_matching_claim_applies {
            let w = c.ms_witness.as_ref().ok_or("missing two-matching witness")?;
            check_pair(h, w)?;
        }
    }
    Ok(())
}

fn check_traceable(h: &Host, c: &TraceableCert) -> Result<(), String> {
    match c {
        TraceableCert::Escape { path, colouring } => {
            require(h.path_is_hamiltonian(path), || "path is not Hamiltonian".into())?;
            require(h.is_proper_colouring(colouring)?, || "escape colouring is not proper".into())
        }
        TraceableCert::Certified {
            path,
            m_alpha,
            rounds,
            special,
            ..
        } => {
            require(h.path_is_hamiltonian(path), || "path is not Hamiltonian".into())?;
            let ma = pms(h, &[(m_alpha, "m_alpha")])?.remove(0);
            // the alpha class is every other path edge, starting with the first
            let along: BTreeSet<Edge> = path.windows(2).step_by(2).map(|w| norm(w[0], w[1])).collect();
            require(ma == along, || "m_alpha is not the alternate path edges".into())?;
            require(rounds.len() == 3, || format!("{} rounds, expected 3", rounds.len()))?;
            for r in rounds {
                let m = pms(h, &[(&r.matching, "round matching")])?.remove(0);
                let inter = and(&ma, &m);
                require(h.set(&r.alpha, "alpha")? == inter, || "alpha is not m_alpha ∩ m_i".into())?;
                require(!h.has_odd_cut_inside(&inter), || format!("round {}: odd cut inside", r.walk))?;
                for j in &r.joins {
                    let j = h.set(j, "join")?;
                    require(h.is_join(&j), || format!("round {}: join has an even vertex", r.walk))?;
                    require(and(&inter, &j).is_empty(), || format!("round {}: join meets m_alpha ∩ m_i", r.walk))?;
                }
            }
            if let Some(sp) = special {
                let lists: Vec<(&EdgeList, &str)> = sp.matchings.iter().map(|m| (m, "special")).collect();
                let ms = pms(h, &lists)?;
                for a in 0..ms.len() {
                    for b in a + 1..ms.len() {
                        require(and(&and(&ma, &ms[a]), &ms[b]).is_empty(), || {
                            format!("special route: m_alpha ∩ m_{a} ∩ m_{b} not empty")
                        })?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn each<T>(
    errs: &mut Vec<String>,
    name: &str,
    c: &Option<Check<T>>,
    f: impl FnOnce(&T) -> Result<(), String>,
) {
    if let Some(cert) = c.as_ref().and_then(|c| c.cert()) {
        if let Err(e) = f(cert) {
            errs.push(format!("{name}: {e}"));
        }
    }
}

/// Every problem found with the record's passing certificates.
pub fn verify_record(rec: &Record) -> Vec<String> {
    let h = match Host::parse(&rec.graph6) {
        Ok(h) => h,
        Err(e) => return vec![format!("graph6: {e}")],
    };
    let mut errs = Vec::new();
    if h.n != rec.n {
        errs.push(format!("order {} but graph6 has {}", rec.n, h.n));
    }
    each(&mut errs, "invariants", &rec.invariants, |c| check_invariants(&h, c));
    each(&mut errs, "ms", &rec.ms, |c| check_pair(&h, c));
    each(&mut errs, "kr", &rec.kr, |c| check_join(&h, c));
    each(&mut errs, "fr", &rec.fr, |c| check_triple(&h, c));
    each(&mut errs, "thm1", &rec.thm1, |c| check_colourability(&h, c));
    each(&mut errs, "thm3", &rec.thm3, |c| check_small_pair(&h, c));
    each(&mut errs, "thm45", &rec.thm45, |c| check_pair_or_cut(&h, c));
    each(&mut errs, "traceable", &rec.traceable, |c| check_traceable(&h, c));
    errs
}
