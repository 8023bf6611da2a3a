use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::rng::{fnv1a, hash_draw, unit_f64};

/// G(n, p); pair `(u, v)` is decided by its own counter-based draw.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let tag = fnv1a("gnp");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let pair = (u as u64) * (n as u64) + v as u64;
            if unit_f64(hash_draw(seed, tag, pair, 0)) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are canonical")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Structured {
    Clique(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    Hypercube(u32),
    /// `c` cliques of size `s`; consecutive cliques are linked through one bridge vertex.
    CliqueChain {
        c: usize,
        s: usize,
    },
    /// `c` cliques of size `s` on a cycle, consecutive cliques completely joined.
    CliqueRing {
        c: usize,
        s: usize,
    },
    Grid {
        rows: usize,
        cols: usize,
    },
}

pub fn gen_structured(kind: &Structured) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::InvalidParam(msg.to_string()));
    let mut edges = Vec::new();
    let n = match *kind {
        Structured::Clique(n) => {
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            n
        }
        Structured::Cycle(n) => {
            if n < 3 {
                return bad("cycle needs at least 3 vertices");
            }
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        Structured::Path(n) => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        Structured::Star(n) => {
            if n == 0 {
                return bad("star needs a center");
            }
            edges.extend((1..n).map(|i| (0, i)));
            n
        }
        Structured::Hypercube(d) => {
            if d > 24 {
                return bad("hypercube dimension too large");
            }
            let n = 1usize << d;
            for v in 0..n {
                for b in 0..d {
                    let w = v ^ (1 << b);
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
            n
        }
        Structured::CliqueChain { c, s } => {
            if c == 0 || s == 0 {
                return bad("clique chain needs c >= 1 and s >= 1");
            }
            // clique j occupies [j*(s+1), j*(s+1)+s); bridge j sits right after it
            let base = |j: usize| j * (s + 1);
            for j in 0..c {
                for a in 0..s {
                    for b in a + 1..s {
                        edges.push((base(j) + a, base(j) + b));
                    }
                }
                if j + 1 < c {
                    let bridge = base(j) + s;
                    edges.push((base(j) + s - 1, bridge));
                    edges.push((bridge, base(j + 1)));
                }
            }
            c * s + c - 1
        }
        Structured::CliqueRing { c, s } => {
            if c < 3 || s == 0 {
                return bad("clique ring needs c >= 3 and s >= 1");
            }
            for j in 0..c {
                let next = (j + 1) % c;
                for a in 0..s {
                    for b in a + 1..s {
                        edges.push((j * s + a, j * s + b));
                    }
                    for b in 0..s {
                        edges.push((j * s + a, next * s + b));
                    }
                }
            }
            c * s
        }
        Structured::Grid { rows, cols } => {
            let id = |r: usize, c: usize| r * cols + c;
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            rows * cols
        }
    };
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(gen_gnp(5, 1.0, 3).m(), 10);
        assert_eq!(gen_gnp(5, 0.0, 3).m(), 0);
        assert_eq!(gen_gnp(100, 0.5, 7), gen_gnp(100, 0.5, 7));
        assert_ne!(gen_gnp(100, 0.5, 7), gen_gnp(100, 0.5, 8));
    }

    #[test]
    fn hypercube_is_regular() {
        let g = gen_structured(&Structured::Hypercube(4)).unwrap();
        assert_eq!(g.n(), 16);
        assert!((0..16).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn structured_sizes() {
        let chain = gen_structured(&Structured::CliqueChain { c: 3, s: 5 }).unwrap();
        assert_eq!(chain.n(), 17);
        let ring = gen_structured(&Structured::CliqueRing { c: 4, s: 3 }).unwrap();
        assert_eq!(ring.n(), 12);
        assert!((0..12).all(|v| ring.degree(v) == 8));
        assert!(gen_structured(&Structured::Cycle(2)).is_err());
    }
}
