//! Spanning trees of the n-ladder graph (the n x 2 grid) and their
//! correspondence with spotted colored compositions.
//!
//! The ladder has vertices `(i, Top)` and `(i, Bottom)` for `1 <= i <= n`
//! and `3n - 2` edges. Superimposing the ladder on a spotted board keeps a
//! vertical edge exactly where a cell holds a spot, drops the bottom edge
//! of every square containing a solid separator, and drops the top edge of
//! every square containing a dotted one; what remains is a spanning tree,
//! and every spanning tree arises this way exactly once.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colorings::{from_board, to_board, ColorScheme, ColoredComposition};
use crate::comp::{Board, SeparatorKind};
use crate::error::{Error, Result};
use crate::util::DisjointSet;

/// Symbolic edge of the n-ladder: `Top(i)`/`Bottom(i)` join columns `i` and
/// `i+1` along the rails, `Vert(i)` joins the two vertices of column `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LadderEdge {
    Top(usize),
    Bottom(usize),
    Vert(usize),
}

impl LadderEdge {
    pub fn parse(s: &str) -> Option<Self> {
        let (kind, idx) = s.split_at(1);
        let idx: usize = idx.parse().ok()?;
        match kind {
            "T" => Some(LadderEdge::Top(idx)),
            "B" => Some(LadderEdge::Bottom(idx)),
            "V" => Some(LadderEdge::Vert(idx)),
            _ => None,
        }
    }

    fn endpoints(self, n: usize) -> (usize, usize) {
        // vertices 0..2n: top row 0..n, bottom row n..2n (0-based columns)
        match self {
            LadderEdge::Top(i) => (i - 1, i),
            LadderEdge::Bottom(i) => (n + i - 1, n + i),
            LadderEdge::Vert(i) => (i - 1, n + i - 1),
        }
    }

    fn in_range(self, n: usize) -> bool {
        match self {
            LadderEdge::Top(i) | LadderEdge::Bottom(i) => i >= 1 && i < n,
            LadderEdge::Vert(i) => i >= 1 && i <= n,
        }
    }
}

impl fmt::Display for LadderEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LadderEdge::Top(i) => write!(f, "T{i}"),
            LadderEdge::Bottom(i) => write!(f, "B{i}"),
            LadderEdge::Vert(i) => write!(f, "V{i}"),
        }
    }
}

/// The full edge list of the n-ladder in canonical order.
pub fn ladder_edges(n: usize) -> Vec<LadderEdge> {
    let mut edges = Vec::with_capacity(3 * n - 2);
    for i in 1..n {
        edges.push(LadderEdge::Top(i));
    }
    for i in 1..n {
        edges.push(LadderEdge::Bottom(i));
    }
    for i in 1..=n {
        edges.push(LadderEdge::Vert(i));
    }
    edges
}

/// The n x 2 grid graph: 2n vertices, 3n - 2 edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LadderGraph {
    n: usize,
}

impl LadderGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBoard("ladder length must be positive".into()));
        }
        Ok(LadderGraph { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        2 * self.n
    }

    pub fn num_edges(&self) -> usize {
        3 * self.n - 2
    }

    pub fn edges(&self) -> Vec<LadderEdge> {
        ladder_edges(self.n)
    }

    pub fn contains(&self, e: LadderEdge) -> bool {
        e.in_range(self.n)
    }
}

/// An edge subset of the n-ladder claimed to be a spanning tree.
///
/// Construction only checks edge ranges; use [`LadderSpanningTree::is_spanning_tree`]
/// for the structural test.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TreeRepr", into = "TreeRepr")]
pub struct LadderSpanningTree {
    n: usize,
    edges: BTreeSet<LadderEdge>,
}

impl LadderSpanningTree {
    pub fn new(n: usize, edges: BTreeSet<LadderEdge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBoard("ladder length must be positive".into()));
        }
        if let Some(&e) = edges.iter().find(|e| !e.in_range(n)) {
            return Err(Error::EdgeOutOfRange(e.to_string(), n));
        }
        Ok(LadderSpanningTree { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<LadderEdge> {
        &self.edges
    }

    pub fn contains(&self, e: LadderEdge) -> bool {
        self.edges.contains(&e)
    }

    /// Union-find connectivity plus the edge count `2n - 1`.
    pub fn is_spanning_tree(&self) -> bool {
        if self.edges.len() != 2 * self.n - 1 {
            return false;
        }
        let mut ds = DisjointSet::new(2 * self.n);
        for &e in &self.edges {
            let (a, b) = e.endpoints(self.n);
            ds.union(a, b);
        }
        let root = ds.find(0);
        (1..2 * self.n).all(|v| ds.find(v) == root)
    }

    /// Graphviz rendering with vertices `t1..tn`, `b1..bn`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph ladder {\n  rankdir=LR;\n");
        for i in 1..=self.n {
            out.push_str(&format!("  t{i}; b{i};\n"));
        }
        for &e in &self.edges {
            let line = match e {
                LadderEdge::Top(i) => format!("  t{i} -- t{};\n", i + 1),
                LadderEdge::Bottom(i) => format!("  b{i} -- b{};\n", i + 1),
                LadderEdge::Vert(i) => format!("  t{i} -- b{i};\n"),
            };
            out.push_str(&line);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TreeRepr {
    n: usize,
    edges: Vec<String>,
}

impl TryFrom<TreeRepr> for LadderSpanningTree {
    type Error = Error;
    fn try_from(r: TreeRepr) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for s in r.edges {
            let e = LadderEdge::parse(&s).ok_or_else(|| Error::EdgeOutOfRange(s.clone(), r.n))?;
            edges.insert(e);
        }
        LadderSpanningTree::new(r.n, edges)
    }
}

impl From<LadderSpanningTree> for TreeRepr {
    fn from(t: LadderSpanningTree) -> Self {
        TreeRepr {
            n: t.n,
            edges: t.edges.iter().map(|e| e.to_string()).collect(),
        }
    }
}

/// Maps a spotted colored composition onto its spanning tree: verticals at
/// spots, bottom rail opened at solid separators, top rail at dotted ones.
pub fn colored_to_tree(cc: &ColoredComposition) -> Result<LadderSpanningTree> {
    if cc.scheme() != ColorScheme::FibEven {
        return Err(Error::SchemeMismatch {
            expected: ColorScheme::FibEven,
            got: cc.scheme(),
        });
    }
    let board = to_board(cc);
    let n = board.n();
    let mut edges = BTreeSet::new();
    for i in 1..n {
        match board.separator_at(i) {
            Some(SeparatorKind::Solid) => {
                edges.insert(LadderEdge::Top(i));
            }
            Some(SeparatorKind::Dotted) => {
                edges.insert(LadderEdge::Bottom(i));
            }
            None => {
                edges.insert(LadderEdge::Top(i));
                edges.insert(LadderEdge::Bottom(i));
            }
        }
    }
    for &c in board.spots() {
        edges.insert(LadderEdge::Vert(c));
    }
    let tree = LadderSpanningTree::new(n, edges)?;
    debug_assert!(tree.is_spanning_tree());
    Ok(tree)
}

/// Inverse of [`colored_to_tree`].
pub fn tree_to_colored(t: &LadderSpanningTree) -> Result<ColoredComposition> {
    if !t.is_spanning_tree() {
        return Err(Error::NotSpanningTree);
    }
    let n = t.n();
    let mut separators = std::collections::BTreeMap::new();
    for i in 1..n {
        let top = t.contains(LadderEdge::Top(i));
        let bottom = t.contains(LadderEdge::Bottom(i));
        match (top, bottom) {
            (true, true) => {}
            (true, false) => {
                separators.insert(i, SeparatorKind::Solid);
            }
            (false, true) => {
                separators.insert(i, SeparatorKind::Dotted);
            }
            // both rails open at i would disconnect the two sides
            (false, false) => return Err(Error::NotSpanningTree),
        }
    }
    let spots: BTreeSet<usize> = (1..=n).filter(|&i| t.contains(LadderEdge::Vert(i))).collect();
    let board = Board::new(n, separators, spots, Default::default())?;
    from_board(&board, ColorScheme::FibEven)
}

/// All spanning trees of the n-ladder by brute force over edge subsets,
/// ordered lexicographically as sorted edge lists. Capped at `n <= 8`
/// (choose(22, 15) subsets).
pub fn enumerate_trees(n: usize) -> Result<Vec<LadderSpanningTree>> {
    const CAP: usize = 8;
    if n == 0 || n > CAP {
        return Err(Error::OracleScale {
            what: "ladder spanning trees",
            cap: CAP,
            n,
        });
    }
    let all = ladder_edges(n);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(2 * n - 1);
    combinations(&all, 2 * n - 1, 0, &mut chosen, &mut |edges| {
        let tree = LadderSpanningTree {
            n,
            edges: edges.iter().copied().collect(),
        };
        if tree.is_spanning_tree() {
            out.push(tree);
        }
    });
    Ok(out)
}

fn combinations<T: Copy>(
    pool: &[T],
    k: usize,
    start: usize,
    chosen: &mut Vec<T>,
    visit: &mut impl FnMut(&[T]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let need = k - chosen.len();
    for i in start..=pool.len().saturating_sub(need) {
        chosen.push(pool[i]);
        combinations(pool, k, i + 1, chosen, visit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{enumerate_colored, Color, SpottedTile};

    fn tree(n: usize, edges: &[LadderEdge]) -> LadderSpanningTree {
        LadderSpanningTree::new(n, edges.iter().copied().collect()).unwrap()
    }

    #[test]
    fn spanning_tree_checks() {
        assert!(tree(1, &[LadderEdge::Vert(1)]).is_spanning_tree());
        // four edges on the 2-ladder close a cycle
        assert!(!tree(
            2,
            &[
                LadderEdge::Top(1),
                LadderEdge::Bottom(1),
                LadderEdge::Vert(1),
                LadderEdge::Vert(2)
            ]
        )
        .is_spanning_tree());
        assert!(matches!(
            LadderSpanningTree::new(2, [LadderEdge::Top(2)].into_iter().collect()),
            Err(Error::EdgeOutOfRange(..))
        ));
    }

    #[test]
    fn tree_counts() {
        let expected = [1usize, 4, 15, 56, 209, 780];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_trees(n).unwrap().len(), want, "n={n}");
        }
        assert!(enumerate_trees(9).is_err());
    }

    #[test]
    fn graph_shape() {
        let g = LadderGraph::new(5).unwrap();
        assert_eq!(g.num_vertices(), 10);
        assert_eq!(g.num_edges(), 13);
        assert_eq!(g.edges().len(), g.num_edges());
        assert!(g.contains(LadderEdge::Vert(5)));
        assert!(!g.contains(LadderEdge::Top(5)));
        assert!(LadderGraph::new(0).is_err());
    }

    #[test]
    fn worked_example_tree() {
        let cc = ColoredComposition::new(
            ColorScheme::FibEven,
            vec![
                (
                    2,
                    Color::Spotted(vec![
                        SpottedTile { len: 1, spot: 1 },
                        SpottedTile { len: 1, spot: 1 },
                    ]),
                ),
                (1, Color::Spotted(vec![SpottedTile { len: 1, spot: 1 }])),
                (
                    5,
                    Color::Spotted(vec![
                        SpottedTile { len: 4, spot: 2 },
                        SpottedTile { len: 1, spot: 1 },
                    ]),
                ),
                (2, Color::Spotted(vec![SpottedTile { len: 2, spot: 1 }])),
            ],
        )
        .unwrap();
        let t = colored_to_tree(&cc).unwrap();
        let missing: Vec<LadderEdge> = ladder_edges(10)
            .into_iter()
            .filter(|e| !t.contains(*e))
            .collect();
        assert_eq!(
            missing,
            vec![
                LadderEdge::Top(1),
                LadderEdge::Top(7),
                LadderEdge::Bottom(2),
                LadderEdge::Bottom(3),
                LadderEdge::Bottom(8),
                LadderEdge::Vert(4),
                LadderEdge::Vert(6),
                LadderEdge::Vert(7),
                LadderEdge::Vert(10),
            ]
        );
        assert_eq!(tree_to_colored(&t).unwrap(), cc);
    }

    #[test]
    fn single_cell() {
        let cc = enumerate_colored(ColorScheme::FibEven, 1).next().unwrap();
        let t = colored_to_tree(&cc).unwrap();
        assert_eq!(t.edges().len(), 1);
        assert!(t.contains(LadderEdge::Vert(1)));
        assert_eq!(tree_to_colored(&t).unwrap(), cc);
    }

    #[test]
    fn bijection_exhaustive() {
        for n in 1..=6 {
            let trees = enumerate_trees(n).unwrap();
            let mut images: Vec<LadderSpanningTree> = Vec::new();
            for cc in enumerate_colored(ColorScheme::FibEven, n) {
                let t = colored_to_tree(&cc).unwrap();
                assert!(t.is_spanning_tree());
                assert_eq!(tree_to_colored(&t).unwrap(), cc);
                images.push(t);
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), trees.len(), "n={n}");
            let mut listed = trees.clone();
            listed.sort();
            assert_eq!(images, listed, "n={n}");
        }
    }

    #[test]
    fn edge_bookkeeping() {
        // removed edges = (n - spots) + (tiles - 1) = n - 1
        for n in 1..=6 {
            for cc in enumerate_colored(ColorScheme::FibEven, n) {
                let t = colored_to_tree(&cc).unwrap();
                assert_eq!(t.edges().len(), 2 * n - 1);
                let spots: usize = cc
                    .items()
                    .iter()
                    .map(|(_, c)| match c {
                        Color::Spotted(tiles) => tiles.len(),
                        _ => unreachable!(),
                    })
                    .sum();
                let removed = 3 * n - 2 - t.edges().len();
                assert_eq!(removed, (n - spots) + (spots - 1));
            }
        }
    }

    #[test]
    fn rejects_non_tree_input() {
        // 5 edges on the 3-ladder closing a 4-cycle on columns 1-2
        let cyclic = tree(
            3,
            &[
                LadderEdge::Top(1),
                LadderEdge::Bottom(1),
                LadderEdge::Vert(1),
                LadderEdge::Vert(2),
                LadderEdge::Top(2),
            ],
        );
        assert!(!cyclic.is_spanning_tree());
        assert!(matches!(tree_to_colored(&cyclic), Err(Error::NotSpanningTree)));
    }

    #[test]
    fn dot_output() {
        let t = tree(2, &[LadderEdge::Top(1), LadderEdge::Bottom(1), LadderEdge::Vert(1)]);
        let dot = t.to_dot();
        assert!(dot.contains("t1 -- t2;"));
        assert!(dot.contains("b1 -- b2;"));
        assert!(dot.contains("t1 -- b1;"));
    }
}
