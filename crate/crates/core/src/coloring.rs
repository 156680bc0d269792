//! Proper 3-edge-colourings and their link to perfect matchings without
//! odd cuts.

use std::fmt;

use crate::cuts::odd_cut_inside;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId};
use crate::matchings::{enumerate_perfect_matchings, two_factor, Matching};
use crate::sets::EdgeSet;

pub const DEFAULT_COLORING_NODES: u64 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl Colour {
    pub const PROPER: [Colour; 3] = [Colour::Alpha, Colour::Beta, Colour::Gamma];

    pub fn name(self) -> &'static str {
        match self {
            Colour::Alpha => "alpha",
            Colour::Beta => "beta",
            Colour::Gamma => "gamma",
            Colour::Delta => "delta",
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A total map from edges to colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colours: Vec<Colour>,
}

impl EdgeColoring {
    pub fn new(colours: Vec<Colour>) -> Self {
        EdgeColoring { colours }
    }

    pub fn colour(&self, e: EdgeId) -> Colour {
        self.colours[e]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn class(&self, c: Colour) -> EdgeSet {
        EdgeSet::from_ids(
            self.colours.len(),
            (0..self.colours.len()).filter(|&e| self.colours[e] == c),
        )
    }

    /// Three colours, no two incident edges alike.
    pub fn is_proper(&self, g: &CubicGraph) -> bool {
        self.colours.len() == g.m()
            && self.colours.iter().all(|&c| c != Colour::Delta)
            && (0..g.n()).all(|v| {
                let [a, b, c] = g.incident(v).map(|e| self.colours[e]);
                a != b && b != c && a != c
            })
    }
}

/// First proper colouring in backtracking order: edges by identifier,
/// colours alpha, beta, gamma.
pub fn three_edge_coloring(g: &CubicGraph, node_cap: u64) -> Result<Option<EdgeColoring>> {
    let m = g.m();
    let mut colour: Vec<Option<Colour>> = vec![None; m];
    let mut nodes = 0u64;
    fn go(
        g: &CubicGraph,
        e: EdgeId,
        colour: &mut Vec<Option<Colour>>,
        nodes: &mut u64,
        cap: u64,
    ) -> Result<bool> {
        if e == g.m() {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::ResourceCap {
                what: "3-edge-colouring search nodes",
                limit: cap,
            });
        }
        let (u, v) = g.endpoints(e);
        for c in Colour::PROPER {
            let clash = [u, v].iter().any(|&x| {
                g.incident(x)
                    .iter()
                    .any(|&f| f != e && colour[f] == Some(c))
            });
            if clash {
                continue;
            }
            colour[e] = Some(c);
            if go(g, e + 1, colour, nodes, cap)? {
                return Ok(true);
            }
            colour[e] = None;
        }
        Ok(false)
    }
    if go(g, 0, &mut colour, &mut nodes, node_cap)? {
        let c = EdgeColoring::new(colour.into_iter().map(Option::unwrap).collect());
        debug_assert!(c.is_proper(g));
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

/// 3 or 4 (Vizing). Decided only by a completed search.
pub fn chromatic_index(g: &CubicGraph, node_cap: u64) -> Result<u8> {
    Ok(if three_edge_coloring(g, node_cap)?.is_some() {
        3
    } else {
        4
    })
}

/// First perfect matching in enumeration order containing no odd cut.
pub fn pm_without_odd_cut(g: &CubicGraph, cap: u64) -> Result<Option<Matching>> {
    Ok(enumerate_perfect_matchings(g, cap)?
        .into_iter()
        .find(|m| odd_cut_inside(g, m.edges()).is_none()))
}

/// Colours `M` alpha and each (even) cycle of `G - M` alternately beta and
/// gamma from its smallest vertex.
pub fn coloring_from_pm(g: &CubicGraph, m: &Matching) -> Result<EdgeColoring> {
    let tf = two_factor(g, m)?;
    let mut colours = vec![Colour::Alpha; g.m()];
    for c in &tf.cycles {
        if c.len() % 2 == 1 {
            return Err(Error::OddCycleInTwoFactor(c.start()));
        }
        for (i, &e) in c.edges().iter().enumerate() {
            colours[e] = if i % 2 == 0 { Colour::Beta } else { Colour::Gamma };
        }
    }
    let col = EdgeColoring::new(colours);
    debug_assert!(col.is_proper(g));
    Ok(col)
}
