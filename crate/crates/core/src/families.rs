//! Deterministic graph generators: the classical fixtures, the two
//! constructions studied by the verifiers (`cycle_plus_chord`,
//! `section4_family`) and seeded random regular graphs.
//!
//! Constructions described with 1-based vertex labels are stored 0-indexed
//! as `label - 1`; each generator documents its labeling.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: &'static str, reason: String },
    #[error("random regular generation failed after retry cap (n={n}, k={k}, seed={seed})")]
    GenerationFailed { n: usize, k: usize, seed: u64 },
    #[error("base graph is not regular")]
    NotRegular,
    #[error("no edge deletion keeps the graph connected")]
    NoConnectedDeletion,
    #[error("cannot parse family spec {0:?}: {1}")]
    Parse(String, String),
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParams {
        family,
        reason: reason.into(),
    }
}

/// Cycle C_n, vertices 0..n in cyclic order.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle", "n must be at least 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::build(n, &edges).unwrap())
}

/// Path P_n, vertices 0..n in order.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("path", "n must be at least 1"));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::build(n, &edges).unwrap())
}

/// Star on n vertices: center 0, leaves 1..n.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(bad("star", "n must be at least 2"));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::build(n, &edges).unwrap())
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("complete", "n must be at least 1"));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(n, &edges).unwrap())
}

/// Complete bipartite graph K_{a,b}: side A is 0..a, side B is a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 {
        return Err(bad("complete_bipartite", "both sides must be nonempty"));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(a + b, &edges).unwrap())
}

/// Circulant graph: vertex i is adjacent to i +- s (mod n) for each offset s.
/// Offsets must be strictly increasing in [1, n/2]. `circulant(n, [1])` is
/// the cycle C_n.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("circulant", "n must be at least 3"));
    }
    if offsets.is_empty() {
        return Err(bad("circulant", "offsets must be nonempty"));
    }
    for w in offsets.windows(2) {
        if w[0] >= w[1] {
            return Err(bad("circulant", "offsets must be strictly increasing"));
        }
    }
    if offsets[0] < 1 || *offsets.last().unwrap() > n / 2 {
        return Err(bad("circulant", format!("offsets must lie in [1, {}]", n / 2)));
    }
    let mut edges = std::collections::BTreeSet::new();
    for i in 0..n {
        for &s in offsets {
            let j = (i + s) % n;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Ok(Graph::build(n, &edges).unwrap())
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes
/// i -- i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::build(10, &edges).unwrap()
}

/// C_n plus one chord between two vertices at distance 2; stored as the edge
/// {0, 2}.
pub fn cycle_plus_chord(n: usize) -> Result<Graph, FamilyError> {
    if n < 5 {
        return Err(bad("cycle_plus_chord", "n must be at least 5"));
    }
    Ok(cycle(n)?.add_edge(0, 2).unwrap())
}

/// The odd-cycle construction with one vertex of degree 2.
///
/// Labels 1..2k+1 (stored as label-1): the cycle {i, i+1} for 1 <= i <= 2k
/// plus {2k+1, 1}, the edges {k, k+2} and {k+1, k+3}, and for k >= 3 the
/// chords {i, 2k+3-i} for 2 <= i <= k-1. The result has maximum degree 3,
/// label 1 is the unique vertex of degree 2, and the diameter is k.
pub fn section4_family(k: usize) -> Result<Graph, FamilyError> {
    if k < 2 {
        return Err(bad("section4", "k must be at least 2"));
    }
    let n = 2 * k + 1;
    let mut labeled: Vec<(usize, usize)> = (1..=2 * k).map(|i| (i, i + 1)).collect();
    labeled.push((2 * k + 1, 1));
    labeled.push((k, k + 2));
    labeled.push((k + 1, k + 3));
    for i in 2..k {
        labeled.push((i, 2 * k + 3 - i));
    }
    let edges: Vec<_> = labeled.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Ok(Graph::build(n, &edges).unwrap())
}

const PAIRING_RETRIES: usize = 1000;
const SWITCH_RETRIES: usize = 100_000;

/// Random simple k-regular graph via the configuration model: k stubs per
/// vertex, shuffled and paired consecutively, rejecting pairings with loops
/// or multi-edges. After `PAIRING_RETRIES` failed pairings the last one is
/// repaired by random edge switches, which keeps the degree sequence exact.
/// Rejection degenerates in the dense half, so for k > (n-1)/2 the
/// (n-1-k)-regular complement is generated and complemented instead.
/// Deterministic given the seed; connectivity is not guaranteed.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph, FamilyError> {
    if k < 1 || k >= n {
        return Err(bad("random_regular", "need 1 <= k < n"));
    }
    if !(n * k).is_multiple_of(2) {
        return Err(bad("random_regular", "n * k must be even"));
    }
    if 2 * k > n - 1 {
        // n(n-1) is even and nk is even, so n(n-1-k) is even as well.
        let sparse = n - 1 - k;
        let base = if sparse == 0 {
            Graph::build(n, &[]).unwrap()
        } else {
            random_regular(n, sparse, seed)?
        };
        return Ok(complement(&base));
    }
    let mut rng = SplitMix64::new(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();

    let mut last_pairs: Vec<(usize, usize)> = Vec::new();
    for _ in 0..PAIRING_RETRIES {
        rng.shuffle(&mut stubs);
        let pairs: Vec<(usize, usize)> = stubs
            .chunks_exact(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        if is_simple(&pairs) {
            return Ok(Graph::build(n, &pairs).unwrap());
        }
        last_pairs = pairs;
    }
    repair_by_switches(n, k, seed, last_pairs, &mut rng)
}

fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(n * (n - 1) / 2 - g.m());
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

fn is_simple(pairs: &[(usize, usize)]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(pairs.len());
    pairs.iter().all(|&(u, v)| u != v && seen.insert((u, v)))
}

fn repair_by_switches(
    n: usize,
    k: usize,
    seed: u64,
    mut pairs: Vec<(usize, usize)>,
    rng: &mut SplitMix64,
) -> Result<Graph, FamilyError> {
    let mut counts = std::collections::HashMap::new();
    for &p in &pairs {
        *counts.entry(p).or_insert(0usize) += 1;
    }
    let is_bad = |p: (usize, usize), counts: &std::collections::HashMap<(usize, usize), usize>| {
        p.0 == p.1 || counts[&p] > 1
    };
    let count_of = |p, counts: &std::collections::HashMap<_, usize>| {
        counts.get(&p).copied().unwrap_or(0)
    };

    for attempt in 0..SWITCH_RETRIES {
        if !pairs.iter().any(|&p| is_bad(p, &counts)) {
            return Ok(Graph::build(n, &pairs).unwrap());
        }

        // Targeted switches alone can deadlock in dense states where every
        // single repair would collide; interleaved unconditional mixing
        // switches (loopless but duplicates allowed) keep the walk moving.
        let mixing = attempt % 16 == 15;
        let first_idx = if mixing {
            rng.next_below(pairs.len())
        } else {
            pairs
                .iter()
                .position(|&p| is_bad(p, &counts))
                .expect("a bad pair exists")
        };
        let other_idx = rng.next_below(pairs.len());
        if other_idx == first_idx {
            continue;
        }
        let (u, v) = pairs[first_idx];
        let (x, y) = pairs[other_idx];
        // Swap one endpoint of each pair; the orientation is a coin flip so
        // both rewirings are reachable.
        let (p1, p2) = if rng.next_below(2) == 0 {
            ((u.min(x), u.max(x)), (v.min(y), v.max(y)))
        } else {
            ((u.min(y), u.max(y)), (v.min(x), v.max(x)))
        };
        if p1.0 == p1.1 || p2.0 == p2.1 {
            continue;
        }
        let mut next = counts.clone();
        *next.get_mut(&(u.min(v), u.max(v))).unwrap() -= 1;
        *next.get_mut(&(x.min(y), x.max(y))).unwrap() -= 1;
        if !mixing {
            // A repair switch must not collide with existing edges (or
            // itself) once the two old pairs are removed.
            if count_of(p1, &next) > 0 || count_of(p2, &next) > 0 || p1 == p2 {
                continue;
            }
        }
        *next.entry(p1).or_insert(0) += 1;
        *next.entry(p2).or_insert(0) += 1;
        counts = next;
        counts.retain(|_, c| *c > 0);
        pairs[first_idx] = p1;
        pairs[other_idx] = p2;
    }
    Err(FamilyError::GenerationFailed { n, k, seed })
}

/// Deletes one edge of a regular base graph, given by its index in the
/// canonical lexicographic edge order. With `require_connected`, indices are
/// tried in cyclic order starting from `edge_index` until a deletion keeps
/// the graph connected.
pub fn regular_minus_edge(
    base: &FamilySpec,
    edge_index: usize,
    require_connected: bool,
) -> Result<Graph, FamilyError> {
    let g = base.build()?;
    if !g.degree_profile().is_regular {
        return Err(FamilyError::NotRegular);
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Err(FamilyError::NoConnectedDeletion);
    }
    if edge_index >= edges.len() {
        return Err(bad(
            "regular_minus_edge",
            format!("edge index {} out of range (m = {})", edge_index, edges.len()),
        ));
    }
    for offset in 0..edges.len() {
        let (u, v) = edges[(edge_index + offset) % edges.len()];
        let candidate = g.delete_edge(u, v).unwrap();
        if !require_connected || candidate.is_connected() {
            return Ok(candidate);
        }
    }
    Err(FamilyError::NoConnectedDeletion)
}

/// Parameterized descriptor of a built-in generator.
///
/// Canonical string form is `name(p1,p2,...)` with an optional `:seed`
/// suffix for random families, e.g. `section4(3)`, `random_regular(100,3):42`.
/// `regular_minus_edge(<base spec>,<edge index>)` nests the base family and
/// always requires the deletion to keep the graph connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle { n: usize },
    Path { n: usize },
    Star { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Circulant { n: usize, offsets: Vec<usize> },
    Petersen,
    CyclePlusChord { n: usize },
    Section4 { k: usize },
    RandomRegular { n: usize, k: usize, seed: u64 },
    RegularMinusEdge { base: Box<FamilySpec>, edge_index: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Star { n } => star(*n),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            FamilySpec::Circulant { n, offsets } => circulant(*n, offsets),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::CyclePlusChord { n } => cycle_plus_chord(*n),
            FamilySpec::Section4 { k } => section4_family(*k),
            FamilySpec::RandomRegular { n, k, seed } => random_regular(*n, *k, *seed),
            FamilySpec::RegularMinusEdge { base, edge_index } => {
                regular_minus_edge(base, *edge_index, true)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle { n } => write!(f, "cycle({n})"),
            FamilySpec::Path { n } => write!(f, "path({n})"),
            FamilySpec::Star { n } => write!(f, "star({n})"),
            FamilySpec::Complete { n } => write!(f, "complete({n})"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete_bipartite({a},{b})"),
            FamilySpec::Circulant { n, offsets } => {
                write!(f, "circulant({n}")?;
                for s in offsets {
                    write!(f, ",{s}")?;
                }
                write!(f, ")")
            }
            FamilySpec::Petersen => write!(f, "petersen()"),
            FamilySpec::CyclePlusChord { n } => write!(f, "cycle_plus_chord({n})"),
            FamilySpec::Section4 { k } => write!(f, "section4({k})"),
            FamilySpec::RandomRegular { n, k, seed } => {
                write!(f, "random_regular({n},{k}):{seed}")
            }
            FamilySpec::RegularMinusEdge { base, edge_index } => {
                write!(f, "regular_minus_edge({base},{edge_index})")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = SpecParser { input: s, pos: 0 };
        let spec = parser.spec()?;
        if parser.pos != s.len() {
            return Err(FamilyError::Parse(
                s.to_string(),
                format!("trailing input at byte {}", parser.pos),
            ));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn fail(&self, reason: impl Into<String>) -> FamilyError {
        FamilyError::Parse(self.input.to_string(), reason.into())
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn eat(&mut self, c: char) -> Result<(), FamilyError> {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.fail(format!("expected {c:?} at byte {}", self.pos)))
        }
    }

    fn ident(&mut self) -> Result<&'a str, FamilyError> {
        let end = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if end == 0 {
            return Err(self.fail(format!("expected family name at byte {}", self.pos)));
        }
        let name = &self.rest()[..end];
        self.pos += end;
        Ok(name)
    }

    fn number(&mut self) -> Result<u64, FamilyError> {
        let end = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if end == 0 {
            return Err(self.fail(format!("expected integer at byte {}", self.pos)));
        }
        let value = self.rest()[..end]
            .parse()
            .map_err(|_| self.fail("integer out of range"))?;
        self.pos += end;
        Ok(value)
    }

    fn int_args(&mut self) -> Result<Vec<u64>, FamilyError> {
        self.eat('(')?;
        let mut args = Vec::new();
        if self.rest().starts_with(')') {
            self.pos += 1;
            return Ok(args);
        }
        loop {
            args.push(self.number()?);
            if self.rest().starts_with(',') {
                self.pos += 1;
            } else {
                self.eat(')')?;
                return Ok(args);
            }
        }
    }

    fn spec(&mut self) -> Result<FamilySpec, FamilyError> {
        let name = self.ident()?;
        if name == "regular_minus_edge" {
            self.eat('(')?;
            let base = Box::new(self.spec()?);
            self.eat(',')?;
            let edge_index = self.number()? as usize;
            self.eat(')')?;
            return Ok(FamilySpec::RegularMinusEdge { base, edge_index });
        }

        let args = self.int_args()?;
        let seed = if self.rest().starts_with(':') {
            self.pos += 1;
            Some(self.number()?)
        } else {
            None
        };

        let arity = |want: usize| -> Result<(), FamilyError> {
            if args.len() == want {
                Ok(())
            } else {
                Err(FamilyError::Parse(
                    self.input.to_string(),
                    format!("{name} takes {want} parameter(s), got {}", args.len()),
                ))
            }
        };
        if seed.is_some() && name != "random_regular" {
            return Err(self.fail(format!("{name} does not take a seed")));
        }

        let spec = match name {
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: args[0] as usize }
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path { n: args[0] as usize }
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star { n: args[0] as usize }
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete { n: args[0] as usize }
            }
            "complete_bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite {
                    a: args[0] as usize,
                    b: args[1] as usize,
                }
            }
            "circulant" => {
                if args.len() < 2 {
                    return Err(self.fail("circulant needs n and at least one offset"));
                }
                FamilySpec::Circulant {
                    n: args[0] as usize,
                    offsets: args[1..].iter().map(|&x| x as usize).collect(),
                }
            }
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            "cycle_plus_chord" => {
                arity(1)?;
                FamilySpec::CyclePlusChord { n: args[0] as usize }
            }
            "section4" => {
                arity(1)?;
                FamilySpec::Section4 { k: args[0] as usize }
            }
            "random_regular" => {
                arity(2)?;
                FamilySpec::RandomRegular {
                    n: args[0] as usize,
                    k: args[1] as usize,
                    seed: seed.ok_or_else(|| self.fail("random_regular needs a :seed suffix"))?,
                }
            }
            other => return Err(self.fail(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}
