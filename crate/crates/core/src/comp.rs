//! Compositions, boards, and the three Fibonacci-counted part-restricted
//! families, together with the warm-up bijections `alpha` and `beta`.
//!
//! A composition of `n` is drawn as a tiling of a 1 x n board; the two
//! bijections below are literal simulations of a line-bundling procedure on
//! that drawing: extra lines are inserted, horizontal mid-lines glue groups
//! of vertical lines together, and the bundle sizes read off left to right
//! form the image composition.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::util::{compositions_with, DisjointSet};

/// An ordered tuple of positive integer parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being composed (sum of the parts).
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn last_part(&self) -> usize {
        *self.parts.last().expect("nonempty by construction")
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Part restriction defining each of the Fibonacci-counted families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RestrictedFamily {
    /// Parts 1 and 2 only; `F_{n+1}` compositions of `n`.
    OneTwo,
    /// Odd parts only; `F_n` compositions of `n`.
    Odd,
    /// No part 1; `F_{n-1}` compositions of `n`.
    GreaterThanOne,
}

impl RestrictedFamily {
    pub const ALL: [RestrictedFamily; 3] = [
        RestrictedFamily::OneTwo,
        RestrictedFamily::Odd,
        RestrictedFamily::GreaterThanOne,
    ];

    pub fn allows(self, part: usize) -> bool {
        match self {
            RestrictedFamily::OneTwo => part == 1 || part == 2,
            RestrictedFamily::Odd => part % 2 == 1,
            RestrictedFamily::GreaterThanOne => part >= 2,
        }
    }

    pub fn contains(self, c: &Composition) -> bool {
        c.parts().iter().all(|&p| self.allows(p))
    }

    /// Checks membership, reporting the first offending part.
    pub fn check(self, c: &Composition) -> Result<()> {
        match c.parts().iter().find(|&&p| !self.allows(p)) {
            None => Ok(()),
            Some(&part) => Err(Error::PartOutsideFamily { part, family: self }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RestrictedFamily::OneTwo => "one-two",
            RestrictedFamily::Odd => "odd",
            RestrictedFamily::GreaterThanOne => "greater-than-one",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "one-two" => Some(RestrictedFamily::OneTwo),
            "odd" => Some(RestrictedFamily::Odd),
            "greater-than-one" => Some(RestrictedFamily::GreaterThanOne),
            _ => None,
        }
    }
}

impl fmt::Display for RestrictedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(k: u64) -> BigUint {
    let mut a = BigUint::from(0u32);
    let mut b = BigUint::from(1u32);
    for _ in 0..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// All compositions of `n` in the family, lexicographic on part sequences.
///
/// `GreaterThanOne` with `n = 1` yields the empty list, consistent with
/// `F_0 = 0`.
pub fn enumerate_family(family: RestrictedFamily, n: usize) -> Vec<Composition> {
    compositions_with(n, |p| family.allows(p))
        .into_iter()
        .map(|parts| Composition { parts })
        .collect()
}

/// Separator drawn between two adjacent cells of a board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeparatorKind {
    /// Boundary between two parts of the outer composition.
    Solid,
    /// Boundary inside a part, between tiles of its secondary structure.
    Dotted,
}

/// A 1 x n strip of cells with typed internal separators and optional cell
/// decorations.
///
/// Separator positions are 1-based: position `p` sits between cells `p` and
/// `p+1`. Spots mark single cells; arcs join pairs of cells `i < j`. No
/// scheme uses spots and arcs at the same time, and the constructor rejects
/// boards carrying both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BoardRepr", into = "BoardRepr")]
pub struct Board {
    n: usize,
    separators: BTreeMap<usize, SeparatorKind>,
    spots: BTreeSet<usize>,
    arcs: BTreeSet<(usize, usize)>,
}

impl Board {
    pub fn new(
        n: usize,
        separators: BTreeMap<usize, SeparatorKind>,
        spots: BTreeSet<usize>,
        arcs: BTreeSet<(usize, usize)>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBoard("board must have at least one cell".into()));
        }
        if let Some(&p) = separators.keys().find(|&&p| p == 0 || p >= n) {
            return Err(Error::InvalidBoard(format!(
                "separator position {p} outside 1..{}",
                n - 1
            )));
        }
        if let Some(&c) = spots.iter().find(|&&c| c == 0 || c > n) {
            return Err(Error::InvalidBoard(format!("spot {c} outside 1..{n}")));
        }
        if let Some(&(i, j)) = arcs.iter().find(|&&(i, j)| i == 0 || i >= j || j > n) {
            return Err(Error::InvalidBoard(format!("arc ({i},{j}) outside the board")));
        }
        if !spots.is_empty() && !arcs.is_empty() {
            return Err(Error::InvalidBoard("spots and arcs cannot coexist".into()));
        }
        Ok(Board {
            n,
            separators,
            spots,
            arcs,
        })
    }

    pub fn plain(n: usize) -> Result<Self> {
        Board::new(n, BTreeMap::new(), BTreeSet::new(), BTreeSet::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn separators(&self) -> &BTreeMap<usize, SeparatorKind> {
        &self.separators
    }

    pub fn separator_at(&self, p: usize) -> Option<SeparatorKind> {
        self.separators.get(&p).copied()
    }

    pub fn spots(&self) -> &BTreeSet<usize> {
        &self.spots
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    /// Cell ranges `(start, end)` (1-based, inclusive) delimited by
    /// separators of the given kind, ignoring the other kind.
    pub fn segments(&self, kind: SeparatorKind) -> Vec<(usize, usize)> {
        let mut cuts: Vec<usize> = self
            .separators
            .iter()
            .filter(|&(_, &k)| k == kind)
            .map(|(&p, _)| p)
            .collect();
        cuts.push(self.n);
        let mut out = Vec::new();
        let mut start = 1;
        for c in cuts {
            out.push((start, c));
            start = c + 1;
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct BoardRepr {
    n: usize,
    sep: BTreeMap<String, SeparatorKind>,
    spots: Vec<usize>,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<BoardRepr> for Board {
    type Error = Error;
    fn try_from(r: BoardRepr) -> Result<Self> {
        let mut separators = BTreeMap::new();
        for (k, v) in r.sep {
            let p: usize = k
                .parse()
                .map_err(|_| Error::InvalidBoard(format!("bad separator key {k:?}")))?;
            separators.insert(p, v);
        }
        Board::new(
            r.n,
            separators,
            r.spots.into_iter().collect(),
            r.arcs.into_iter().collect(),
        )
    }
}

impl From<Board> for BoardRepr {
    fn from(b: Board) -> Self {
        BoardRepr {
            n: b.n,
            sep: b
                .separators
                .into_iter()
                .map(|(p, k)| (p.to_string(), k))
                .collect(),
            spots: b.spots.into_iter().collect(),
            arcs: b.arcs.into_iter().collect(),
        }
    }
}

// --- the two line-bundling bijections ---------------------------------------
//
// Both maps put a vertical line at every integer position 0..=n of the board
// (tile boundaries plus the extra mid-tile lines each algorithm introduces),
// glue lines joined by horizontal mid-segments with a union-find, and read
// the bundle sizes left to right.

/// Maps a composition with parts in {1,2} to one with odd parts, of `n + 1`.
///
/// Each domino contributes a line at its center and glues it to the domino's
/// two edge lines; isolated lines stay singleton bundles.
pub fn alpha(c: &Composition) -> Result<Composition> {
    RestrictedFamily::OneTwo.check(c)?;
    let n = c.total();
    let mut ds = DisjointSet::new(n + 1);
    let mut pos = 0;
    for &part in c.parts() {
        if part == 2 {
            ds.union(pos, pos + 1);
            ds.union(pos + 1, pos + 2);
        }
        pos += part;
    }
    bundle_sizes(&mut ds)
}

/// Inverse of [`alpha`]: odd parts back to a {1,2} composition of `n - 1`.
pub fn alpha_inv(c: &Composition) -> Result<Composition> {
    RestrictedFamily::Odd.check(c)?;
    // A bundle of size 2j+1 is a run of j dominoes; consecutive bundles are
    // one square apart.
    let mut parts = Vec::new();
    for (i, &q) in c.parts().iter().enumerate() {
        if i > 0 {
            parts.push(1);
        }
        for _ in 0..(q - 1) / 2 {
            parts.push(2);
        }
    }
    Composition::new(parts)
}

/// Maps an odd composition to a part-free-of-1 composition of `n + 1`.
///
/// Every tile is cut into unit squares; squares in odd positions within
/// their tile carry a mid-line gluing their two boundary lines.
pub fn beta(c: &Composition) -> Result<Composition> {
    RestrictedFamily::Odd.check(c)?;
    let n = c.total();
    let mut ds = DisjointSet::new(n + 1);
    let mut pos = 0;
    for &part in c.parts() {
        for offset in (0..part).step_by(2) {
            ds.union(pos + offset, pos + offset + 1);
        }
        pos += part;
    }
    bundle_sizes(&mut ds)
}

/// Inverse of [`beta`].
pub fn beta_inv(c: &Composition) -> Result<Composition> {
    RestrictedFamily::GreaterThanOne.check(c)?;
    let n = c.total() - 1;
    // Cell i (0-based) carried a mid-line iff lines i and i+1 share a bundle.
    let mut marked = vec![false; n];
    let mut line = 0;
    for &p in c.parts() {
        for k in 0..p - 1 {
            marked[line + k] = true;
        }
        line += p;
    }
    // A tile of odd length L shows the pattern M (U M)^{(L-1)/2}; boundaries
    // fall exactly before every M that follows an M. The pattern has no UU
    // and ends marked, so the scan below cannot run off the board.
    let mut parts = Vec::new();
    let mut i = 0;
    while i < n {
        debug_assert!(marked[i], "tile must start on a marked cell");
        let mut len = 1;
        while i + len < n && !marked[i + len] {
            debug_assert!(i + len + 1 < n && marked[i + len + 1]);
            len += 2;
        }
        parts.push(len);
        i += len;
    }
    Composition::new(parts)
}

fn bundle_sizes(ds: &mut DisjointSet) -> Result<Composition> {
    let parts = ds.groups().into_iter().map(|g| g.len()).collect();
    Composition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent composition generator: one bit per internal boundary.
    fn brute_compositions(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = Vec::new();
            let mut run = 1;
            for b in 0..n - 1 {
                if mask & (1 << b) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            out.push(parts);
        }
        out
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(0), BigUint::from(0u32));
        assert_eq!(fibonacci(1), BigUint::from(1u32));
        assert_eq!(fibonacci(10), BigUint::from(55u32));
    }

    #[test]
    fn family_enumeration_counts_and_order() {
        let c12 = enumerate_family(RestrictedFamily::OneTwo, 3);
        let parts: Vec<&[usize]> = c12.iter().map(|c| c.parts()).collect();
        assert_eq!(parts, vec![&[1, 1, 1][..], &[1, 2], &[2, 1]]);

        // Oracle: filter a mask-based enumeration of all compositions.
        let odd5: Vec<_> = brute_compositions(5)
            .into_iter()
            .filter(|p| p.iter().all(|&x| x % 2 == 1))
            .collect();
        assert_eq!(odd5.len(), 5);
        assert_eq!(enumerate_family(RestrictedFamily::Odd, 5).len(), odd5.len());

        let gt6: Vec<_> = brute_compositions(6)
            .into_iter()
            .filter(|p| p.iter().all(|&x| x >= 2))
            .collect();
        assert_eq!(gt6.len(), 5);
        assert_eq!(
            enumerate_family(RestrictedFamily::GreaterThanOne, 6).len(),
            gt6.len()
        );

        assert!(enumerate_family(RestrictedFamily::GreaterThanOne, 1).is_empty());
    }

    #[test]
    fn family_counts_match_fibonacci() {
        for n in 1..=16u64 {
            let nn = n as usize;
            assert_eq!(
                BigUint::from(enumerate_family(RestrictedFamily::OneTwo, nn).len()),
                fibonacci(n + 1)
            );
            assert_eq!(
                BigUint::from(enumerate_family(RestrictedFamily::Odd, nn).len()),
                fibonacci(n)
            );
            assert_eq!(
                BigUint::from(enumerate_family(RestrictedFamily::GreaterThanOne, nn).len()),
                fibonacci(n - 1)
            );
        }
    }

    #[test]
    fn alpha_worked_example() {
        let c = Composition::new(vec![1, 1, 2, 1, 2, 2, 1]).unwrap();
        assert_eq!(alpha(&c).unwrap().parts(), &[1, 1, 3, 5, 1]);
        let odd = Composition::new(vec![1, 1, 3, 5, 1]).unwrap();
        assert_eq!(alpha_inv(&odd).unwrap(), c);
    }

    #[test]
    fn alpha_small_cases() {
        let one = Composition::new(vec![1]).unwrap();
        assert_eq!(alpha(&one).unwrap().parts(), &[1, 1]);
        let two = Composition::new(vec![2]).unwrap();
        let img = alpha(&two).unwrap();
        assert_eq!(img.parts(), &[3]);
        assert_eq!(alpha_inv(&img).unwrap(), two);
        assert_eq!(
            alpha_inv(&Composition::new(vec![1, 1]).unwrap()).unwrap(),
            one
        );
    }

    #[test]
    fn beta_worked_example() {
        let c = Composition::new(vec![1, 1, 3, 5, 1]).unwrap();
        assert_eq!(beta(&c).unwrap().parts(), &[4, 3, 2, 3]);
        let img = Composition::new(vec![4, 3, 2, 3]).unwrap();
        assert_eq!(beta_inv(&img).unwrap(), c);
    }

    #[test]
    fn beta_small_cases() {
        assert_eq!(
            beta(&Composition::new(vec![1]).unwrap()).unwrap().parts(),
            &[2]
        );
        assert_eq!(
            beta(&Composition::new(vec![3]).unwrap()).unwrap().parts(),
            &[2, 2]
        );
        assert_eq!(
            beta_inv(&Composition::new(vec![2]).unwrap()).unwrap().parts(),
            &[1]
        );
    }

    #[test]
    fn alpha_rejects_bad_parts() {
        let c = Composition::new(vec![1, 3]).unwrap();
        assert!(matches!(alpha(&c), Err(Error::PartOutsideFamily { .. })));
        let even = Composition::new(vec![2, 2]).unwrap();
        assert!(alpha_inv(&even).is_err());
        assert!(beta(&even).is_err());
        let with_one = Composition::new(vec![1, 4]).unwrap();
        assert!(beta_inv(&with_one).is_err());
    }

    #[test]
    fn alpha_beta_bijections_exhaustive() {
        for n in 1..=14 {
            // alpha: C_{1,2}(n) -> C_odd(n+1), bijective.
            let dom = enumerate_family(RestrictedFamily::OneTwo, n);
            let mut images: Vec<_> = dom.iter().map(|c| alpha(c).unwrap()).collect();
            for (c, img) in dom.iter().zip(&images) {
                assert_eq!(img.total(), n + 1);
                assert!(RestrictedFamily::Odd.contains(img));
                assert_eq!(&alpha_inv(img).unwrap(), c);
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), dom.len());
            let codom = enumerate_family(RestrictedFamily::Odd, n + 1);
            assert_eq!(images.len(), codom.len());

            // beta: C_odd(n) -> C_{>1}(n+1), bijective.
            let dom = enumerate_family(RestrictedFamily::Odd, n);
            let mut images: Vec<_> = dom.iter().map(|c| beta(c).unwrap()).collect();
            for (c, img) in dom.iter().zip(&images) {
                assert_eq!(img.total(), n + 1);
                assert!(RestrictedFamily::GreaterThanOne.contains(img));
                assert_eq!(&beta_inv(img).unwrap(), c);
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), dom.len());
            assert_eq!(
                images.len(),
                enumerate_family(RestrictedFamily::GreaterThanOne, n + 1).len()
            );
        }
    }

    #[test]
    fn alpha_inv_round_trips_odd9() {
        for y in enumerate_family(RestrictedFamily::Odd, 9) {
            assert_eq!(alpha(&alpha_inv(&y).unwrap()).unwrap(), y);
        }
        for y in enumerate_family(RestrictedFamily::GreaterThanOne, 10) {
            assert_eq!(beta(&beta_inv(&y).unwrap()).unwrap(), y);
        }
    }

    #[test]
    fn board_validation() {
        assert!(Board::plain(0).is_err());
        let mut sep = BTreeMap::new();
        sep.insert(3usize, SeparatorKind::Solid);
        assert!(Board::new(3, sep.clone(), BTreeSet::new(), BTreeSet::new()).is_err());
        sep.clear();
        sep.insert(1, SeparatorKind::Dotted);
        let b = Board::new(3, sep, BTreeSet::new(), BTreeSet::new()).unwrap();
        assert_eq!(b.segments(SeparatorKind::Dotted), vec![(1, 1), (2, 3)]);
        assert_eq!(b.segments(SeparatorKind::Solid), vec![(1, 3)]);

        let spots: BTreeSet<usize> = [1].into_iter().collect();
        let arcs: BTreeSet<(usize, usize)> = [(1, 2)].into_iter().collect();
        assert!(Board::new(3, BTreeMap::new(), spots, arcs).is_err());
    }

    #[test]
    fn board_json_shape() {
        let mut sep = BTreeMap::new();
        sep.insert(2usize, SeparatorKind::Solid);
        sep.insert(3usize, SeparatorKind::Dotted);
        let b = Board::new(4, sep, BTreeSet::new(), BTreeSet::new()).unwrap();
        let json = serde_json::to_value(&b).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "n": 4,
                "sep": {"2": "solid", "3": "dotted"},
                "spots": [],
                "arcs": []
            })
        );
        let back: Board = serde_json::from_value(json).unwrap();
        assert_eq!(back, b);
    }
}
