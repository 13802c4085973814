//! Unimodal sequences covering an initial interval, and the bijection with
//! odd-index colored compositions.
//!
//! A totally nested partition with chain `P_1..P_k` flattens to the
//! sequence `a_i = j` for `i` in `P_j` ([`psi`]); such sequences start and
//! end at 1 and move by at most 1. Longer sequences are built by the two
//! connecting operations [`oplus`]: shift the incoming block above the
//! current maximum and splice it immediately left of the first maximum or
//! right of the last one. Folding a colored board's component chain this
//! way (dotted junction = left, solid = right) reaches every unimodal
//! sequence over an initial interval exactly once.
//!
//! The inverse direction peels the last-inserted block: for the correct
//! remainder maximum `m`, the block is precisely the positions with value
//! greater than `m`, and the splice side is recoverable from whether the
//! block sits immediately right of the remainder's last maximum or left of
//! its first. Candidate peels are scanned for all `m`; exactly one ever
//! validates, and the decomposition fails loudly rather than guess if that
//! uniqueness were to break.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colorings::{ColoredComposition, Junction};
use crate::error::{Error, Result};
use crate::partitions::{SetPartition, TotallyNestedPartition};

/// A nonempty sequence that rises then falls (weakly) and uses exactly the
/// values `1..=max`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct UnimodalSeq {
    values: Vec<usize>,
}

impl UnimodalSeq {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidUnimodal("empty sequence".into()));
        }
        let max = *values.iter().max().unwrap();
        let rising_end = values.windows(2).take_while(|w| w[0] <= w[1]).count();
        if values[rising_end..].windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidUnimodal(format!("{values:?} is not unimodal")));
        }
        let mut seen = vec![false; max + 1];
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidUnimodal("values must be positive".into()));
            }
            seen[v] = true;
        }
        if let Some(v) = (1..=max).find(|&v| !seen[v]) {
            return Err(Error::InvalidUnimodal(format!(
                "{values:?} skips the value {v}"
            )));
        }
        Ok(UnimodalSeq { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn peak(&self) -> usize {
        *self.values.iter().max().unwrap()
    }

    /// Is this the flattening of a totally nested partition: endpoints 1
    /// and steps of at most 1?
    pub fn is_nested_form(&self) -> bool {
        self.values[0] == 1
            && *self.values.last().unwrap() == 1
            && self
                .values
                .windows(2)
                .all(|w| w[0].abs_diff(w[1]) <= 1)
    }
}

impl TryFrom<Vec<usize>> for UnimodalSeq {
    type Error = Error;
    fn try_from(values: Vec<usize>) -> Result<Self> {
        UnimodalSeq::new(values)
    }
}

impl From<UnimodalSeq> for Vec<usize> {
    fn from(u: UnimodalSeq) -> Self {
        u.values
    }
}

impl fmt::Display for UnimodalSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Flattens a totally nested partition: position `i` takes the chain index
/// of its block.
pub fn psi(t: &TotallyNestedPartition) -> UnimodalSeq {
    let mut values = vec![0usize; t.n()];
    for (j, block) in t.chain().iter().enumerate() {
        for &i in block {
            values[i - 1] = j + 1;
        }
    }
    let u = UnimodalSeq::new(values).expect("chains flatten to unimodal sequences");
    debug_assert!(u.is_nested_form());
    u
}

/// Inverse of [`psi`]: value classes become the chain blocks.
pub fn psi_inv(u: &UnimodalSeq) -> Result<TotallyNestedPartition> {
    if !u.is_nested_form() {
        return Err(Error::InvalidUnimodal(format!(
            "{u} does not flatten a totally nested partition"
        )));
    }
    let mut blocks = vec![Vec::new(); u.peak()];
    for (i, &v) in u.values().iter().enumerate() {
        blocks[v - 1].push(i + 1);
    }
    TotallyNestedPartition::new(SetPartition::new(u.len(), blocks)?)
}

/// Insertion side for [`oplus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// Immediately before the first maximum.
    Left,
    /// Immediately after the last maximum.
    Right,
}

impl From<Junction> for Side {
    fn from(j: Junction) -> Side {
        match j {
            Junction::Dotted => Side::Left,
            Junction::Solid => Side::Right,
        }
    }
}

impl From<Side> for Junction {
    fn from(s: Side) -> Junction {
        match s {
            Side::Left => Junction::Dotted,
            Side::Right => Junction::Solid,
        }
    }
}

/// Splices `v`, shifted above `max(u)`, into `u` at the chosen side of the
/// maximum plateau.
pub fn oplus(u: &UnimodalSeq, v: &UnimodalSeq, side: Side) -> UnimodalSeq {
    let m = u.peak();
    let at = match side {
        Side::Left => u.values().iter().position(|&x| x == m).unwrap(),
        Side::Right => u.len() - u.values().iter().rev().position(|&x| x == m).unwrap(),
    };
    let mut values = Vec::with_capacity(u.len() + v.len());
    values.extend_from_slice(&u.values()[..at]);
    values.extend(v.values().iter().map(|&x| x + m));
    values.extend_from_slice(&u.values()[at..]);
    UnimodalSeq::new(values).expect("splicing preserves unimodality and coverage")
}

/// Folds the component chain of an odd-index colored composition into its
/// unimodal sequence, left to right.
pub fn colored_to_unimodal(cc: &ColoredComposition) -> Result<UnimodalSeq> {
    let (comps, junctions) = cc.decorated_chain()?;
    let mut acc = psi(&comps[0]);
    for (comp, &junction) in comps[1..].iter().zip(&junctions) {
        acc = oplus(&acc, &psi(comp), junction.into());
    }
    Ok(acc)
}

/// One undo step of [`oplus`]: the extracted block, its side, and the
/// remainder.
struct Peel {
    block: UnimodalSeq,
    side: Side,
    rest: UnimodalSeq,
}

/// All `(m, side)` peels of `u` that satisfy every structural condition:
/// the positions above `m` form a contiguous block that is a shifted
/// nested-form sequence, and the block sits immediately right of the
/// remainder's last maximum (a right splice) or immediately left of its
/// first maximum (a left splice).
fn valid_peels(u: &UnimodalSeq) -> Vec<Peel> {
    let vals = u.values();
    let n = vals.len();
    let top = u.peak();
    let mut peels = Vec::new();
    for m in 1..top {
        // unimodality makes {values > m} contiguous
        let start = vals.iter().position(|&x| x > m).unwrap();
        let end = n - vals.iter().rev().position(|&x| x > m).unwrap();
        debug_assert!(vals[start..end].iter().all(|&x| x > m));
        if vals[start] != m + 1 || vals[end - 1] != m + 1 {
            continue;
        }
        if vals[start..end].windows(2).any(|w| w[0].abs_diff(w[1]) > 1) {
            continue;
        }
        let mut rest_vals = Vec::with_capacity(n - (end - start));
        rest_vals.extend_from_slice(&vals[..start]);
        rest_vals.extend_from_slice(&vals[end..]);
        let Ok(rest) = UnimodalSeq::new(rest_vals) else {
            continue;
        };
        if rest.peak() != m {
            continue;
        }
        let block =
            UnimodalSeq::new(vals[start..end].iter().map(|&x| x - m).collect()).expect("checked");
        if !block.is_nested_form() {
            continue;
        }
        // right splice: the left neighbor is the last maximum of the rest
        let last_max = rest.len() - 1 - rest.values().iter().rev().position(|&x| x == m).unwrap();
        if start > 0 && vals[start - 1] == m && start - 1 == last_max {
            peels.push(Peel {
                block: block.clone(),
                side: Side::Right,
                rest: rest.clone(),
            });
        }
        // left splice: the right neighbor is the first maximum of the rest
        let first_max = rest.values().iter().position(|&x| x == m).unwrap();
        if end < n && vals[end] == m && start == first_max {
            peels.push(Peel {
                block,
                side: Side::Left,
                rest,
            });
        }
    }
    peels
}

/// Unfolds a unimodal sequence into its component chain. Errors if any step
/// admits zero or more than one peel, which the exhaustive suites assert
/// never happens.
pub fn decompose(u: &UnimodalSeq) -> Result<(Vec<TotallyNestedPartition>, Vec<Junction>)> {
    let mut comps_rev: Vec<TotallyNestedPartition> = Vec::new();
    let mut junctions_rev: Vec<Junction> = Vec::new();
    let mut cur = u.clone();
    loop {
        let mut peels = valid_peels(&cur);
        if cur.is_nested_form() {
            if let Some(p) = peels.first() {
                return Err(Error::AmbiguousPeel(format!(
                    "{cur} is a complete chain component but also peels at block {}",
                    p.block
                )));
            }
            comps_rev.push(psi_inv(&cur)?);
            break;
        }
        match peels.len() {
            0 => return Err(Error::NoPeel),
            1 => {
                let peel = peels.pop().unwrap();
                comps_rev.push(psi_inv(&peel.block)?);
                junctions_rev.push(peel.side.into());
                cur = peel.rest;
            }
            _ => {
                return Err(Error::AmbiguousPeel(format!(
                    "{cur} admits {} distinct peels",
                    peels.len()
                )))
            }
        }
    }
    comps_rev.reverse();
    junctions_rev.reverse();
    Ok((comps_rev, junctions_rev))
}

/// Inverse of [`colored_to_unimodal`].
pub fn unimodal_to_colored(u: &UnimodalSeq) -> Result<ColoredComposition> {
    let (comps, junctions) = decompose(u)?;
    ColoredComposition::from_decorated_chain(comps, junctions)
}

/// All length-`n` unimodal sequences covering an initial interval,
/// lexicographic.
pub fn enumerate_unimodal(n: usize) -> Vec<UnimodalSeq> {
    let mut out = Vec::new();
    for_each_unimodal(n, |u| out.push(u.clone()));
    out
}

/// Visits the sequences of [`enumerate_unimodal`] without storing them.
pub fn for_each_unimodal(n: usize, mut visit: impl FnMut(&UnimodalSeq)) {
    let mut state = Grow {
        n,
        prefix: Vec::with_capacity(n),
        used: vec![false; n + 1],
        visit: &mut visit,
    };
    state.step(true, 0);
}

struct Grow<'a, F: FnMut(&UnimodalSeq)> {
    n: usize,
    prefix: Vec<usize>,
    used: Vec<bool>,
    visit: &'a mut F,
}

impl<F: FnMut(&UnimodalSeq)> Grow<'_, F> {
    fn step(&mut self, rising: bool, max: usize) {
        if self.prefix.len() == self.n {
            debug_assert!((1..max).all(|x| self.used[x]), "pruning enforces coverage");
            let u = UnimodalSeq {
                values: self.prefix.clone(),
            };
            (self.visit)(&u);
            return;
        }
        let remaining = self.n - self.prefix.len();
        let last = self.prefix.last().copied();
        let hi = if rising { self.n } else { last.unwrap() };
        for v in 1..=hi {
            let still_rising = rising && last.is_none_or(|l| v >= l);
            let new_max = max.max(v);
            let was_used = self.used[v];
            self.used[v] = true;
            // Unused values below the maximum must still fit in the tail;
            // once the sequence falls, they must also sit at or below v.
            let miss_count = (1..new_max).filter(|&x| !self.used[x]).count();
            let reachable = still_rising || (v + 1..new_max).all(|x| self.used[x]);
            if miss_count < remaining && reachable {
                self.prefix.push(v);
                self.step(still_rising, new_max);
                self.prefix.pop();
            }
            self.used[v] = was_used;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{enumerate_colored, ColorScheme};
    use crate::partitions::enumerate_totally_nested;
    use std::collections::HashSet;

    fn useq(v: &[usize]) -> UnimodalSeq {
        UnimodalSeq::new(v.to_vec()).unwrap()
    }

    fn tn(blocks: &[&[usize]]) -> TotallyNestedPartition {
        let n = blocks.iter().flat_map(|b| b.iter()).copied().max().unwrap();
        TotallyNestedPartition::from_blocks(n, blocks.iter().map(|b| b.to_vec()).collect())
            .unwrap()
    }

    #[test]
    fn validation() {
        assert!(UnimodalSeq::new(vec![1, 2, 1, 2]).is_err()); // not unimodal
        assert!(UnimodalSeq::new(vec![1, 3, 1]).is_err()); // skips 2
        assert!(UnimodalSeq::new(vec![2, 1]).is_ok());
        assert!(UnimodalSeq::new(vec![]).is_err());
        assert!(useq(&[1, 2, 2, 1]).is_nested_form());
        assert!(!useq(&[2, 1]).is_nested_form());
    }

    #[test]
    fn psi_worked_example() {
        let t = tn(&[&[1, 8, 9], &[2, 3, 7], &[4, 6], &[5]]);
        assert_eq!(psi(&t).values(), &[1, 2, 2, 3, 4, 3, 2, 1, 1]);
        assert_eq!(psi_inv(&psi(&t)).unwrap(), t);

        let single = tn(&[&[1, 2, 3, 4]]);
        assert_eq!(psi(&single).values(), &[1, 1, 1, 1]);
    }

    #[test]
    fn psi_bijection_exhaustive() {
        for n in 1..=10 {
            let dom = enumerate_totally_nested(n);
            let mut images = HashSet::new();
            for t in &dom {
                let u = psi(t);
                assert!(u.is_nested_form());
                assert_eq!(&psi_inv(&u).unwrap(), t);
                assert!(images.insert(u));
            }
            // image is exactly the nested-form subset of U(n)
            let nested: Vec<UnimodalSeq> = enumerate_unimodal(n)
                .into_iter()
                .filter(|u| u.is_nested_form())
                .collect();
            assert_eq!(images.len(), nested.len());
            assert!(nested.iter().all(|u| images.contains(u)));
        }
    }

    #[test]
    fn oplus_worked_examples() {
        assert_eq!(
            oplus(&useq(&[1, 1]), &useq(&[1, 2, 1]), Side::Left).values(),
            &[2, 3, 2, 1, 1]
        );
        assert_eq!(
            oplus(&useq(&[1, 1]), &useq(&[1, 2, 1]), Side::Right).values(),
            &[1, 1, 2, 3, 2]
        );
        assert_eq!(
            oplus(&useq(&[1, 2, 1]), &useq(&[1, 1]), Side::Left).values(),
            &[1, 3, 3, 2, 1]
        );
        assert_eq!(
            oplus(&useq(&[1, 2, 1]), &useq(&[1, 1]), Side::Right).values(),
            &[1, 2, 3, 3, 1]
        );
        assert_eq!(oplus(&useq(&[1]), &useq(&[1]), Side::Left).values(), &[2, 1]);
    }

    #[test]
    fn oplus_chains_associate() {
        // all nested-form triples with total length <= 9, all side pairs
        let mut pool = Vec::new();
        for n in 1..=7 {
            pool.extend(
                enumerate_totally_nested(n)
                    .iter()
                    .map(psi)
                    .collect::<Vec<_>>(),
            );
        }
        for a in &pool {
            for b in &pool {
                for c in &pool {
                    if a.len() + b.len() + c.len() > 9 {
                        continue;
                    }
                    for s1 in [Side::Left, Side::Right] {
                        for s2 in [Side::Left, Side::Right] {
                            let left = oplus(&oplus(a, b, s1), c, s2);
                            let right = oplus(a, &oplus(b, c, s2), s1);
                            assert_eq!(left, right, "({a} {s1:?} {b}) {s2:?} {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn figure_example() {
        let cc = ColoredComposition::from_decorated_chain(
            vec![
                tn(&[&[1, 2]]),
                tn(&[&[1]]),
                tn(&[&[1, 4, 5], &[2, 3]]),
                tn(&[&[1, 2]]),
            ],
            vec![Junction::Solid, Junction::Dotted, Junction::Dotted],
        )
        .unwrap();
        assert_eq!(cc.composition().parts(), &[2, 8]);
        let u = colored_to_unimodal(&cc).unwrap();
        assert_eq!(u.values(), &[1, 1, 3, 5, 5, 4, 4, 3, 3, 2]);
        assert_eq!(unimodal_to_colored(&u).unwrap(), cc);
    }

    #[test]
    fn single_part_cases() {
        let cc = enumerate_colored(ColorScheme::FibOdd, 1).next().unwrap();
        assert_eq!(colored_to_unimodal(&cc).unwrap().values(), &[1]);

        let ones = useq(&[1, 1, 1, 1, 1]);
        let back = unimodal_to_colored(&ones).unwrap();
        assert_eq!(back.composition().parts(), &[5]);
        let (comps, junctions) = back.decorated_chain().unwrap();
        assert_eq!(comps.len(), 1);
        assert!(junctions.is_empty());
        assert_eq!(comps[0].chain(), &[vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn table_of_ten() {
        // the ten sequences of length 3, keyed by their colored composition
        let mut seen = Vec::new();
        for cc in enumerate_colored(ColorScheme::FibOdd, 3) {
            let u = colored_to_unimodal(&cc).unwrap();
            assert_eq!(unimodal_to_colored(&u).unwrap(), cc);
            seen.push(u);
        }
        let mut expected: Vec<UnimodalSeq> = [
            [1, 1, 1],
            [1, 2, 1],
            [2, 2, 1],
            [2, 1, 1],
            [3, 2, 1],
            [1, 2, 2],
            [1, 3, 2],
            [1, 1, 2],
            [2, 3, 1],
            [1, 2, 3],
        ]
        .iter()
        .map(|v| useq(v))
        .collect();
        expected.sort();
        seen.sort();
        assert_eq!(seen, expected);

        // the all-solid chain hits (1,2,3)
        let cc = ColoredComposition::from_decorated_chain(
            vec![tn(&[&[1]]), tn(&[&[1]]), tn(&[&[1]])],
            vec![Junction::Solid, Junction::Solid],
        )
        .unwrap();
        assert_eq!(colored_to_unimodal(&cc).unwrap().values(), &[1, 2, 3]);
        // and the all-dotted chain hits (3,2,1)
        let cc = ColoredComposition::from_decorated_chain(
            vec![tn(&[&[1]]), tn(&[&[1]]), tn(&[&[1]])],
            vec![Junction::Dotted, Junction::Dotted],
        )
        .unwrap();
        assert_eq!(colored_to_unimodal(&cc).unwrap().values(), &[3, 2, 1]);
    }

    #[test]
    fn enumerate_counts() {
        let expected = [1usize, 3, 10, 34, 116, 396, 1352, 4616];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_unimodal(i + 1).len(), want, "n={}", i + 1);
        }
        let two: Vec<Vec<usize>> = enumerate_unimodal(2)
            .iter()
            .map(|u| u.values().to_vec())
            .collect();
        assert_eq!(two, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn full_bijection_exhaustive() {
        for n in 1..=8 {
            let all = enumerate_unimodal(n);
            let mut images = HashSet::new();
            for cc in enumerate_colored(ColorScheme::FibOdd, n) {
                let u = colored_to_unimodal(&cc).unwrap();
                assert_eq!(u.len(), n);
                assert_eq!(&unimodal_to_colored(&u).unwrap(), &cc);
                assert!(images.insert(u));
            }
            assert_eq!(images.len(), all.len(), "n={n}");
            assert!(all.iter().all(|u| images.contains(u)));
        }
    }

    #[test]
    fn decompose_never_ambiguous_small() {
        for n in 1..=9 {
            for u in enumerate_unimodal(n) {
                decompose(&u).unwrap();
            }
        }
    }
}
